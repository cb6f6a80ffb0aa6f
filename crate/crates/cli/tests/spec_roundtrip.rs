use cayint::classifier::catalog;
use cayint_cli::spec::ATOMS;
use cayint_cli::{parse_spec, GroupSpec};
use proptest::prelude::*;

#[test]
fn catalog_specs_round_trip_and_build() {
    for entry in catalog() {
        let ast = parse_spec(entry.spec).unwrap();
        assert_eq!(ast.to_string(), entry.spec);
        assert_eq!(parse_spec(&ast.to_string()).unwrap(), ast);
        let built = ast.build(256).unwrap();
        assert_eq!(built.order(), entry.build().unwrap().order(), "{}", entry.name);
    }
}

fn leaf() -> impl Strategy<Value = GroupSpec> {
    prop_oneof![
        prop::sample::select(ATOMS.to_vec()).prop_map(|a| GroupSpec::Atom(a.to_string())),
        (1usize..500).prop_map(GroupSpec::Cyclic),
        (1usize..500).prop_map(GroupSpec::Elementary),
        (1usize..500).prop_map(GroupSpec::Dihedral),
    ]
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    leaf().prop_recursive(3, 12, 3, |inner| {
        prop_oneof![
            inner.clone().prop_map(|s| GroupSpec::Dic(Box::new(s))),
            prop::collection::vec(inner, 2..4).prop_map(|v| {
                // products are flat: a nested product prints the same as its flattening
                let mut flat = Vec::new();
                for t in v {
                    match t {
                        GroupSpec::Product(ts) => flat.extend(ts),
                        t => flat.push(t),
                    }
                }
                GroupSpec::Product(flat)
            }),
        ]
    })
}

proptest! {
    #[test]
    fn print_then_parse(s in spec()) {
        prop_assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn compact_spacing_parses_the_same(s in spec()) {
        let compact = s.to_string().replace(' ', "");
        prop_assert_eq!(parse_spec(&compact).unwrap(), s);
    }
}
