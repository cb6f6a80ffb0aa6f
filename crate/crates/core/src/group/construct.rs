use std::collections::VecDeque;

use super::labels::{Labeling, WordOrder};
use super::{Group, GroupError};

/// Direct product `Z_{d1} × … × Z_{dr}`; element labels are exponent words over `a, b, c, …`.
pub fn make_abelian(orders: &[usize]) -> Result<Group, GroupError> {
    if orders.contains(&0) {
        return Err(GroupError::ZeroOrder);
    }
    let factors: Vec<usize> = orders.iter().copied().filter(|&d| d > 1).collect();
    let n: usize = factors.iter().product();
    let mut coords = Vec::with_capacity(n);
    for idx in 0..n {
        let mut rest = idx;
        let mut c = Vec::with_capacity(factors.len());
        for &d in &factors {
            c.push(rest % d);
            rest /= d;
        }
        coords.push(c);
    }
    let index = |c: &[usize]| c.iter().zip(&factors).rev().fold(0, |acc, (&x, &d)| acc * d + x);
    let mut mul = Vec::with_capacity(n * n);
    let mut tmp = vec![0; factors.len()];
    for g in &coords {
        for h in &coords {
            for (i, &d) in factors.iter().enumerate() {
                tmp[i] = (g[i] + h[i]) % d;
            }
            mul.push(index(&tmp) as u32);
        }
    }
    let gen_names: Vec<String> = (0..factors.len()).map(default_gen_name).collect();
    let mut stride = 1;
    let gen_elems: Vec<usize> = factors
        .iter()
        .map(|&d| {
            let e = stride;
            stride *= d;
            e
        })
        .collect();
    let words = coords
        .iter()
        .map(|c| c.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (i as u16, e as i32)).collect())
        .collect();
    let name = if factors.is_empty() {
        "Z1".to_string()
    } else {
        factors.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join(" x ")
    };
    Group::from_table(name, n.max(1), if n == 0 { vec![0] } else { mul }, Labeling::from_words(gen_names, gen_elems, words))
}

fn default_gen_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("g{i}")
    }
}

pub fn cyclic(n: usize) -> Result<Group, GroupError> {
    Ok(make_abelian(&[n])?.with_name(format!("Z{n}")))
}

/// `E_q`, the elementary abelian group of prime-power order `q`.
pub fn elementary_abelian(q: usize) -> Result<Group, GroupError> {
    if q == 1 {
        return Ok(make_abelian(&[])?.with_name("E1"));
    }
    let p = smallest_prime_factor(q).ok_or(GroupError::NotPrimePower(q))?;
    let mut m = 0;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest != 1 {
        return Err(GroupError::NotPrimePower(q));
    }
    Ok(make_abelian(&vec![p; m])?.with_name(format!("E{q}")))
}

fn smallest_prime_factor(n: usize) -> Option<usize> {
    (2..=n).find(|p| n.is_multiple_of(*p))
}

/// Dihedral group of the given ORDER: `⟨a, b | a^{order/2} = b² = 1, a^b = a⁻¹⟩`.
pub fn make_dihedral(order: usize) -> Result<Group, GroupError> {
    if order < 4 || !order.is_multiple_of(2) {
        return Err(GroupError::InvalidDihedralOrder(order));
    }
    let n = order / 2;
    let mut mul = Vec::with_capacity(order * order);
    for g in 0..order {
        let (i, j) = (g % n, g / n);
        for h in 0..order {
            let (k, l) = (h % n, h / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            mul.push((rot + n * ((j + l) % 2)) as u32);
        }
    }
    let words = (0..order)
        .map(|g| {
            let (i, j) = (g % n, g / n);
            let mut w = Vec::new();
            if i > 0 {
                w.push((0u16, i as i32));
            }
            if j > 0 {
                w.push((1u16, 1));
            }
            w
        })
        .collect();
    let labeling = Labeling::from_words(vec!["a".into(), "b".into()], vec![1 % order, n], words);
    Group::from_table(format!("D{order}"), order, mul, labeling)
}

/// Extends generator images to a homomorphism `src → dst`, checking every relation edge.
pub(crate) fn extend_homomorphism(src: &Group, dst: &Group, images: &[(usize, usize)]) -> Result<Vec<usize>, GroupError> {
    let n = src.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(g) = queue.pop_front() {
        for &(s, t) in images {
            let gs = src.mul(g, s);
            let v = dst.mul(map[g], t);
            if map[gs] == usize::MAX {
                map[gs] = v;
                queue.push_back(gs);
            } else if map[gs] != v {
                return Err(GroupError::NotAutomorphism(format!(
                    "images violate a relation at {}·{}",
                    src.label(g),
                    src.label(s)
                )));
            }
        }
    }
    if map.contains(&usize::MAX) {
        return Err(GroupError::NotGenerating);
    }
    Ok(map)
}

/// Automorphism of `group` determined by images of generators.
pub fn automorphism_from_images(group: &Group, images: &[(usize, usize)]) -> Result<Vec<usize>, GroupError> {
    let map = extend_homomorphism(group, group, images)?;
    check_automorphism(group, &map)?;
    Ok(map)
}

fn check_automorphism(group: &Group, map: &[usize]) -> Result<(), GroupError> {
    let n = group.order();
    if map.len() != n {
        return Err(GroupError::NotAutomorphism(format!("map has {} entries for order {n}", map.len())));
    }
    let mut hit = vec![false; n];
    for &v in map {
        if v >= n || std::mem::replace(&mut hit[v], true) {
            return Err(GroupError::NotAutomorphism("not a bijection".into()));
        }
    }
    for g in 0..n {
        for h in 0..n {
            if map[group.mul(g, h)] != group.mul(map[g], map[h]) {
                return Err(GroupError::NotAutomorphism(format!(
                    "does not preserve {}·{}",
                    group.label(g),
                    group.label(h)
                )));
            }
        }
    }
    Ok(())
}

/// `A ⋊ B` with `(a,b)(a',b') = (a·φ_b(a'), b·b')`.
///
/// `action` assigns an automorphism of `A` (as an element permutation) to each
/// element of a generating set of `B`; the action of the rest of `B` is derived
/// and checked against `B`'s relations.
pub fn semidirect_product(a: &Group, b: &Group, action: &[(usize, Vec<usize>)]) -> Result<Group, GroupError> {
    for (s, phi) in action {
        b.check_element(*s)?;
        check_automorphism(a, phi)?;
    }
    let na = a.order();
    let nb = b.order();
    let mut phis: Vec<Option<Vec<usize>>> = vec![None; nb];
    phis[0] = Some((0..na).collect());
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        let px = phis[x].clone().expect("queued elements carry their automorphism");
        for (s, ps) in action {
            let xs = b.mul(x, *s);
            let composed: Vec<usize> = (0..na).map(|g| px[ps[g]]).collect();
            match &phis[xs] {
                None => {
                    phis[xs] = Some(composed);
                    queue.push_back(xs);
                }
                Some(existing) if *existing != composed => {
                    return Err(GroupError::ActionInconsistent(format!(
                        "two paths to {} give different automorphisms",
                        b.label(xs)
                    )));
                }
                Some(_) => {}
            }
        }
    }
    let phis: Vec<Vec<usize>> = phis
        .into_iter()
        .map(|p| p.ok_or_else(|| GroupError::ActionInconsistent("acting elements do not generate B".into())))
        .collect::<Result<_, _>>()?;
    build_semidirect(a, b, &phis, format!("{} : {}", a.name(), b.name()))
}

fn build_semidirect(a: &Group, b: &Group, phis: &[Vec<usize>], name: String) -> Result<Group, GroupError> {
    let na = a.order();
    let nb = b.order();
    let n = na * nb;
    let mut mul = Vec::with_capacity(n * n);
    for g in 0..n {
        let (ga, gb) = (g % na, g / na);
        let phi = &phis[gb];
        for h in 0..n {
            let (ha, hb) = (h % na, h / na);
            mul.push((a.mul(ga, phi[ha]) + na * b.mul(gb, hb)) as u32);
        }
    }
    let labeling = Labeling::product(a.labeling(), b.labeling(), WordOrder::LeftFirst);
    Group::from_table(name, n, mul, labeling)
}

pub fn direct_product(a: &Group, b: &Group) -> Result<Group, GroupError> {
    let id: Vec<usize> = (0..a.order()).collect();
    let phis = vec![id; b.order()];
    build_semidirect(a, b, &phis, format!("{} x {}", a.name(), b.name()))
}

/// `Dic(A) = ⟨A, x⟩` with `x² = t` (the unique involution of `A`) and `a^x = a⁻¹`.
///
/// Element `x^e·a` sits at index `a + |A|·e`; coset labels read `x…`.
pub fn generalized_dicyclic(a: &Group) -> Result<Group, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian(a.name().to_string()));
    }
    let invs = a.involutions();
    if invs.len() != 1 {
        return Err(GroupError::NoUniqueInvolution { name: a.name().to_string(), count: invs.len() });
    }
    if a.order() <= 2 {
        return Err(GroupError::TooSmall { name: a.name().to_string(), order: a.order() });
    }
    let t = invs[0];
    let na = a.order();
    let n = 2 * na;
    let mut mul = Vec::with_capacity(n * n);
    for g in 0..n {
        let (ga, ge) = (g % na, g / na);
        for h in 0..n {
            let (ha, he) = (h % na, h / na);
            let moved = if he == 1 { a.inv(ga) } else { ga };
            let mut prod = a.mul(moved, ha);
            if ge + he == 2 {
                prod = a.mul(t, prod);
            }
            mul.push((prod + na * ((ge + he) % 2)) as u32);
        }
    }
    let z2 = Labeling::from_words(vec!["x".into()], vec![1], vec![Vec::new(), vec![(0, 1)]]);
    let labeling = Labeling::product(a.labeling(), &z2, WordOrder::RightFirst);
    Group::from_table(format!("Dic({})", a.name()), n, mul, labeling)
}
