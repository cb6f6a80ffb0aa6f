//! Named groups built from their standard presentations.
//!
//! Generator letters follow the presentations: `a, b, c` for the Rédei
//! groups, `i, j, k` and `s` (alias `σ`) for `Q8 ⋊ Z3`, `u, v, x` for the
//! order-18 witness hosts.

use super::{
    automorphism_from_images, cyclic, elementary_abelian, from_permutations, generalized_dicyclic, make_abelian,
    make_dihedral, parse_cycles, semidirect_product, Group, GroupError, DEFAULT_CLOSURE_CAP,
};

pub const CATALOG_NAMES: &[&str] =
    &["Q8", "D8", "H2", "H16", "H27", "H32", "A4", "Q8sZ3", "D6", "Dic12", "D6xZ3", "E9sZ2", "Z4sZ4"];

pub fn named_group(name: &str) -> Result<Group, GroupError> {
    let g = match name {
        "Q8" => quaternion()?,
        "D8" => make_dihedral(8)?,
        "D6" => make_dihedral(6)?,
        "Dic12" => generalized_dicyclic(&cyclic(6)?)?,
        "H2" | "Z4sZ4" => metacyclic_h2()?,
        "H16" => redei_nonmetacyclic(&[4, 2], 2, "c")?,
        "H32" => redei_nonmetacyclic(&[4, 2], 4, "c")?,
        "H27" => redei_nonmetacyclic(&[3, 3], 3, "c^-1")?,
        "A4" => alternating4()?,
        "Q8sZ3" => quaternion_by_three()?,
        "D6xZ3" => e9_by_involution(false)?,
        "E9sZ2" => e9_by_involution(true)?,
        _ => {
            return Err(GroupError::UnknownName { name: name.to_string(), known: CATALOG_NAMES.join(", ") });
        }
    };
    Ok(g.with_name(name))
}

/// `Q8 = {±1, ±i, ±j, ±k}` with `ij = k`.
fn quaternion() -> Result<Group, GroupError> {
    let g = generalized_dicyclic(&cyclic(4)?)?.with_generator_names(&["i", "j"]);
    let i = g.element("i")?;
    let j = g.element("j")?;
    let k = g.mul(i, j);
    let minus = g.mul(i, i);
    let named = [
        ("1", 0),
        ("-1", minus),
        ("i", i),
        ("-i", g.mul(minus, i)),
        ("j", j),
        ("-j", g.mul(minus, j)),
        ("k", k),
        ("-k", g.mul(minus, k)),
    ];
    let mut display = vec![String::new(); 8];
    for (label, e) in named {
        display[e] = label.to_string();
    }
    let mut g = g.with_display_labels(display);
    for (label, e) in named.into_iter().skip(1) {
        if label != "i" && label != "j" {
            g = g.with_alias(label, e);
        }
    }
    Ok(g)
}

/// `H2 = ⟨a, b | a⁴ = b⁴ = 1, a^b = a⁻¹⟩ ≅ Z4 ⋊ Z4`.
fn metacyclic_h2() -> Result<Group, GroupError> {
    let a = cyclic(4)?;
    let b = cyclic(4)?.with_generator_names(&["b"]);
    let inversion: Vec<usize> = (0..4).map(|x| a.inv(x)).collect();
    semidirect_product(&a, &b, &[(1, inversion)])
}

/// `⟨a, b, c | a^m = b^n = c^p = 1, [a,b] = c, c central⟩` built as `(⟨a⟩×⟨c⟩) ⋊ ⟨b⟩`.
///
/// `b` acts by `a ↦ b a b⁻¹ = a·c_image`, which is `a c⁻¹` so that `b⁻¹ab = ac`.
fn redei_nonmetacyclic(ac_orders: &[usize], b_order: usize, c_image: &str) -> Result<Group, GroupError> {
    let base = make_abelian(ac_orders)?.with_generator_names(&["a", "c"]);
    let a = base.element("a")?;
    let c = base.element("c")?;
    let shifted = base.mul(a, base.element(c_image)?);
    let phi = automorphism_from_images(&base, &[(a, shifted), (c, c)])?;
    let b = cyclic(b_order)?.with_generator_names(&["b"]);
    semidirect_product(&base, &b, &[(1, phi)])
}

/// `A4 = ⟨(1,3)(2,4), (1,2,3)⟩` with `a = (1,2)(3,4)`, `b = (1,3)(2,4)`, `c = (1,2,3)`.
fn alternating4() -> Result<Group, GroupError> {
    let b = parse_cycles("(1,3)(2,4)", 4)?;
    let c = parse_cycles("(1,2,3)", 4)?;
    let g = from_permutations(&[b, c], DEFAULT_CLOSURE_CAP)?.with_generator_names(&["b", "c"]);
    let a = g.element("(1,2)(3,4)")?;
    Ok(g.with_alias("a", a))
}

/// `Q8 ⋊ ⟨σ⟩` with `i^σ = j`, `j^σ = k`, `k^σ = i` (so `σ i σ⁻¹ = k`).
fn quaternion_by_three() -> Result<Group, GroupError> {
    let q = quaternion()?;
    let i = q.element("i")?;
    let j = q.element("j")?;
    let k = q.element("k")?;
    let phi = automorphism_from_images(&q, &[(i, k), (j, i)])?;
    let z3 = cyclic(3)?.with_generator_names(&["s"]);
    let g = semidirect_product(&q, &z3, &[(1, phi)])?;
    let s = g.element("s")?;
    Ok(g.with_alias("σ", s).with_alias("sigma", s))
}

/// `E9 ⋊ ⟨x⟩` with `u^x = u` (`D6 × Z3`) or `u^x = u⁻¹` (`E9 ⋊ Z2`), and `v^x = v⁻¹`.
fn e9_by_involution(invert_u: bool) -> Result<Group, GroupError> {
    let e9 = elementary_abelian(9)?.with_generator_names(&["u", "v"]);
    let u = e9.element("u")?;
    let v = e9.element("v")?;
    let u_img = if invert_u { e9.inv(u) } else { u };
    let phi = automorphism_from_images(&e9, &[(u, u_img), (v, e9.inv(v))])?;
    let z2 = cyclic(2)?.with_generator_names(&["x"]);
    semidirect_product(&e9, &z2, &[(1, phi)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_catalog_name_builds() {
        let orders = [8, 8, 16, 16, 27, 32, 12, 24, 6, 12, 18, 18, 16];
        for (name, order) in CATALOG_NAMES.iter().zip(orders) {
            let g = named_group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert!(!g.is_abelian(), "{name}");
        }
    }

    #[test]
    fn unknown_name_is_reported() {
        assert!(matches!(named_group("H64"), Err(GroupError::UnknownName { .. })));
    }

    #[test]
    fn h27_relations() {
        let g = named_group("H27").unwrap();
        assert_eq!(g.exponent(), 3);
        let a = g.element("a").unwrap();
        let b = g.element("b").unwrap();
        let c = g.element("c").unwrap();
        assert_eq!(g.element_order(a), 3);
        assert_eq!(g.commutator(a, b), c);
        assert!(g.center().contains(&c));
    }

    #[test]
    fn h16_and_h32_relations() {
        for (name, b_order) in [("H16", 2), ("H32", 4)] {
            let g = named_group(name).unwrap();
            let a = g.element("a").unwrap();
            let b = g.element("b").unwrap();
            let c = g.element("c").unwrap();
            assert_eq!(g.element_order(a), 4);
            assert_eq!(g.element_order(b), b_order);
            assert_eq!(g.element_order(c), 2);
            assert_eq!(g.commutator(a, b), c, "{name}");
            assert!(g.center().contains(&c));
            assert_eq!(g.exponent(), 4);
        }
    }

    #[test]
    fn h2_relations() {
        let g = named_group("H2").unwrap();
        let a = g.element("a").unwrap();
        let b = g.element("b").unwrap();
        assert_eq!(g.conjugate(a, b), g.inv(a));
        assert_eq!(g.element_order(b), 4);
    }

    #[test]
    fn a4_named_elements() {
        let g = named_group("A4").unwrap();
        assert_eq!(g.label(g.element("a").unwrap()), "(1,2)(3,4)");
        assert_eq!(g.label(g.element("b").unwrap()), "(1,3)(2,4)");
        assert_eq!(g.label(g.element("c").unwrap()), "(1,2,3)");
        assert_eq!(g.element("ab").unwrap(), g.element("(1,4)(2,3)").unwrap());
    }

    #[test]
    fn quaternion_by_three_action() {
        let g = named_group("Q8sZ3").unwrap();
        let s = g.element("σ").unwrap();
        let conj = |y: &str| g.conjugate(g.element(y).unwrap(), s);
        assert_eq!(conj("i"), g.element("j").unwrap());
        assert_eq!(conj("j"), g.element("k").unwrap());
        assert_eq!(conj("k"), g.element("i").unwrap());
        assert_eq!(conj("-1"), g.element("-1").unwrap());
        assert_eq!(g.element_order(s), 3);
    }

    #[test]
    fn witness_hosts_actions() {
        let d = named_group("D6xZ3").unwrap();
        let (u, v, x) = (d.element("u").unwrap(), d.element("v").unwrap(), d.element("x").unwrap());
        assert_eq!(d.conjugate(u, x), u);
        assert_eq!(d.conjugate(v, x), d.inv(v));
        let e = named_group("E9sZ2").unwrap();
        let (u, x) = (e.element("u").unwrap(), e.element("x").unwrap());
        assert_eq!(e.conjugate(u, x), e.inv(u));
    }

    #[test]
    fn quaternion_labels() {
        let q = named_group("Q8").unwrap();
        let i = q.element("i").unwrap();
        let j = q.element("j").unwrap();
        assert_eq!(q.label(q.mul(i, j)), "k");
        assert_eq!(q.label(q.mul(j, i)), "-k");
        assert_eq!(q.label(q.mul(i, i)), "-1");
    }
}
