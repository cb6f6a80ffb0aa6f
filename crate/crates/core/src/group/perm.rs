use std::collections::HashMap;

use super::labels::Labeling;
use super::{Group, GroupError};

/// A permutation of `0..degree`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(GroupError::BadPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation(images.into_iter().map(|i| i as u32).collect()))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.0[point] as usize
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    /// Cycle notation on points `1..=degree`; the identity renders as `1`.
    pub fn cycle_notation(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.image(p);
            }
            out.push('(');
            out.push_str(&cycle.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
            out.push(')');
        }
        if out.is_empty() {
            "1".to_string()
        } else {
            out
        }
    }
}

/// Parses cycle notation on points `1..=degree`, e.g. `(1,3)(2,4)`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, GroupError> {
    let mut images: Vec<usize> = (0..degree).collect();
    let bad = || GroupError::BadPermutation(format!("cannot parse {text:?}"));
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = body.find(')').ok_or_else(bad)?;
        let points: Vec<usize> = body[..close]
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        if points.iter().any(|&p| p == 0 || p > degree) {
            return Err(GroupError::BadPermutation(format!("point out of range 1..={degree} in {text:?}")));
        }
        for (i, &p) in points.iter().enumerate() {
            images[p - 1] = points[(i + 1) % points.len()] - 1;
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_images(images)
}

/// Closure of a set of permutations, with products composed left to right.
///
/// Elements are numbered in breadth-first order from the identity; labels use
/// cycle notation and generators are named `p1, p2, …`.
pub fn from_permutations(generators: &[Permutation], cap: usize) -> Result<Group, GroupError> {
    let degree = generators.first().map_or(0, Permutation::degree);
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(GroupError::BadPermutation("generators act on different point sets".into()));
    }
    let mut elems = vec![Permutation::identity(degree)];
    let mut words: Vec<Vec<(u16, i32)>> = vec![Vec::new()];
    let mut index: HashMap<Permutation, usize> = HashMap::from([(elems[0].clone(), 0)]);
    let mut next = 0;
    while next < elems.len() {
        for (s, gen) in generators.iter().enumerate() {
            let p = elems[next].then(gen);
            if !index.contains_key(&p) {
                if elems.len() == cap {
                    return Err(GroupError::ClosureExceedsCap { cap });
                }
                let mut w = words[next].clone();
                match w.last_mut() {
                    Some((g, e)) if *g == s as u16 => *e += 1,
                    _ => w.push((s as u16, 1)),
                }
                index.insert(p.clone(), elems.len());
                elems.push(p);
                words.push(w);
            }
        }
        next += 1;
    }
    let n = elems.len();
    let mut mul = Vec::with_capacity(n * n);
    for g in &elems {
        for h in &elems {
            mul.push(index[&g.then(h)] as u32);
        }
    }
    let gen_names = (1..=generators.len()).map(|i| format!("p{i}")).collect();
    let gen_elems = generators.iter().map(|g| index[g]).collect();
    let mut labeling = Labeling::from_words(gen_names, gen_elems, words);
    labeling.set_display(elems.iter().map(Permutation::cycle_notation).collect());
    Group::from_table(format!("<{}>", generators.iter().map(Permutation::cycle_notation).collect::<Vec<_>>().join(", ")), n, mul, labeling)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_cycle_generates_z3() {
        let g = from_permutations(&[parse_cycles("(1,2,3)", 3).unwrap()], 512).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_abelian());
    }

    #[test]
    fn a4_closure_has_order_twelve() {
        let gens = [parse_cycles("(1,2)(3,4)", 4).unwrap(), parse_cycles("(1,2,3)", 4).unwrap()];
        let g = from_permutations(&gens, 512).unwrap();
        assert_eq!(g.order(), 12);
        // brute-force closure oracle: all even permutations of 4 points
        let even = (0..24).filter(|&i| {
            let p = nth_perm(i, 4);
            parity(&p) == 0
        });
        assert_eq!(even.count(), 12);
        assert!(g.labels().iter().any(|l| l == "(1,3)(2,4)"));
    }

    #[test]
    fn empty_generator_set_is_trivial() {
        let g = from_permutations(&[], 512).unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = [parse_cycles("(1,2)", 5).unwrap(), parse_cycles("(1,2,3,4,5)", 5).unwrap()];
        assert_eq!(from_permutations(&gens, 100).unwrap_err(), GroupError::ClosureExceedsCap { cap: 100 });
        assert_eq!(from_permutations(&gens, 512).unwrap().order(), 120);
    }

    #[test]
    fn parse_and_render_cycles() {
        let p = parse_cycles("(1,3)(2,4)", 4).unwrap();
        assert_eq!(p.cycle_notation(), "(1,3)(2,4)");
        assert!(parse_cycles("(1,5)", 4).is_err());
        assert!(parse_cycles("1,2", 4).is_err());
    }

    fn nth_perm(mut i: usize, n: usize) -> Vec<usize> {
        let mut pool: Vec<usize> = (0..n).collect();
        let mut out = Vec::new();
        for k in (1..=n).rev() {
            let f: usize = (1..k).product();
            out.push(pool.remove(i / f));
            i %= f;
        }
        out
    }

    fn parity(p: &[usize]) -> usize {
        let mut inv = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        inv % 2
    }
}
