use super::{Group, GroupError, SubgroupHandle};

/// A basis of an abelian subgroup: every element is uniquely `∏ g_i^{e_i}` with `0 ≤ e_i < d_i`.
///
/// Generators have prime-power orders (one cyclic factor of a primary
/// decomposition each).
#[derive(Clone, Debug)]
pub struct AbelianBasis {
    generators: Vec<usize>,
    orders: Vec<usize>,
    /// Parent element ↦ exponent vector, for members of the subgroup.
    coords: Vec<Option<Vec<usize>>>,
}

impl AbelianBasis {
    pub fn of_subgroup(h: &SubgroupHandle<'_>) -> Result<Self, GroupError> {
        let group = h.parent();
        if !h.is_abelian() {
            return Err(GroupError::NotAbelian(format!("subgroup of order {} in {}", h.order(), group.name())));
        }
        let mut generators = Vec::new();
        let mut orders = Vec::new();
        for p in prime_factors(h.order()) {
            let primary: Vec<usize> =
                h.elements().iter().copied().filter(|&g| is_power_of(group.element_order(g), p)).collect();
            let (gens, ords) = primary_basis(group, &primary);
            generators.extend(gens);
            orders.extend(ords);
        }
        let mut coords = vec![None; group.order()];
        let mut exps = vec![0usize; generators.len()];
        let total: usize = orders.iter().product();
        debug_assert_eq!(total, h.order());
        for _ in 0..total {
            let elem = exps
                .iter()
                .zip(&generators)
                .fold(0, |acc, (&e, &g)| group.mul(acc, group.pow(g, e as i64)));
            if coords[elem].is_some() {
                return Err(GroupError::InvalidTable("abelian basis is not independent".into()));
            }
            coords[elem] = Some(exps.clone());
            for (e, &d) in exps.iter_mut().zip(&orders) {
                *e += 1;
                if *e < d {
                    break;
                }
                *e = 0;
            }
        }
        Ok(AbelianBasis { generators, orders, coords })
    }

    pub fn of_group(group: &Group) -> Result<Self, GroupError> {
        Self::of_subgroup(&SubgroupHandle::whole(group))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product()
    }

    /// Exponent vector of `g`, or `None` when `g` lies outside the subgroup.
    pub fn coordinates(&self, g: usize) -> Option<&[usize]> {
        self.coords.get(g).and_then(|c| c.as_deref())
    }

    /// Invariant factors `n_1 | n_2 | … | n_s` (trivial factors omitted).
    pub fn invariant_factors(&self) -> Vec<usize> {
        invariant_factors(&self.orders)
    }
}

/// Combines prime-power cyclic orders into invariant factors, ascending.
pub(crate) fn invariant_factors(prime_powers: &[usize]) -> Vec<usize> {
    let mut by_prime: Vec<(usize, Vec<usize>)> = Vec::new();
    for &q in prime_powers.iter().filter(|&&q| q > 1) {
        let p = prime_factors(q)[0];
        match by_prime.iter_mut().find(|(pp, _)| *pp == p) {
            Some((_, v)) => v.push(q),
            None => by_prime.push((p, vec![q])),
        }
    }
    let len = by_prime.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; len];
    for (_, mut powers) in by_prime {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in powers.into_iter().enumerate() {
            factors[i] *= q;
        }
    }
    factors.reverse();
    factors
}

/// Basis of an abelian p-group given as an element list.
///
/// Repeatedly takes an element of largest order modulo the current span and
/// corrects it by a span element so that its order equals that quotient order.
fn primary_basis(group: &Group, elements: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = group.order();
    let mut in_span = vec![false; n];
    in_span[0] = true;
    let mut span = vec![0usize];
    let mut gens = Vec::new();
    let mut ords = Vec::new();
    while span.len() < elements.len() {
        let quotient_order = |g: usize| {
            let mut d = 1;
            let mut x = g;
            while !in_span[x] {
                x = group.mul(x, g);
                d += 1;
            }
            d
        };
        let mut candidates: Vec<(usize, usize)> =
            elements.iter().filter(|&&g| !in_span[g]).map(|&g| (quotient_order(g), g)).collect();
        let best = candidates.iter().map(|c| c.0).max().expect("span is proper");
        candidates.retain(|c| c.0 == best);
        let (g, d) = candidates
            .iter()
            .find_map(|&(d, g)| {
                let target = group.inv(group.pow(g, d as i64));
                span.iter().find(|&&k| group.pow(k, d as i64) == target).map(|&k| (group.mul(g, k), d))
            })
            .expect("a max-order coset always contains an element of that order");
        let mut next = Vec::with_capacity(span.len() * d);
        let mut power = 0;
        for _ in 0..d {
            for &k in &span {
                next.push(group.mul(k, power));
            }
            power = group.mul(power, g);
        }
        for &x in &next {
            in_span[x] = true;
        }
        span = next;
        gens.push(g);
        ords.push(d);
    }
    (gens, ords)
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
