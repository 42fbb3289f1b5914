use qthook::dcomplete::{
    build, check_dcomplete, conjecture_check, conjecture_lhs, dk1, parse_poset_json, parse_tree, poset_to_json,
    random_tree_spec, tree_recursion_check, ColoredPoset, LabeledPoset, PosetSpec,
};
use qthook::qtcore::{product_geometric, sample_points, VarLabel};
use qthook::tableaux::{Partition, StrictPartition};

#[test]
fn json_round_trips() {
    for spec in [
        PosetSpec::Dk1(4),
        PosetSpec::Tree("(r(a)(b(c)))".into()),
        PosetSpec::Shifted {
            mu: StrictPartition::new(vec![4, 2, 1]).unwrap(),
            two_color: true,
        },
    ] {
        let lp = build(&spec).unwrap();
        let text = serde_json::to_string_pretty(&poset_to_json(&lp)).unwrap();
        assert_eq!(parse_poset_json(&text).unwrap(), lp);
    }
}

#[test]
fn malformed_files_name_the_field() {
    let cases = [
        ("{\"covers\": []}", "elements"),
        ("{\"elements\": [\"a\"], \"covers\": [[\"a\"]]}", "covers[0]"),
        ("{\"elements\": [\"a\", \"b\"], \"covers\": [[\"a\", \"b\"]], \"top_tree_colors\": {\"a\": 3}}", "top_tree_colors"),
        ("{\"elements\": [\"a\",\n  ]}", "line 2"),
    ];
    for (text, needle) in cases {
        let err = parse_poset_json(text).unwrap_err().to_string();
        assert!(err.contains(needle), "{err:?} should mention {needle}");
    }
}

#[test]
fn unweighted_hook_products_for_dcomplete_posets() {
    let specs = [
        PosetSpec::Dk1(3),
        PosetSpec::Dk1(5),
        PosetSpec::Shape(Partition::new(vec![3, 3, 1]).unwrap()),
        PosetSpec::Tree("(a(b(c)(d))(e))".into()),
    ];
    for spec in specs {
        let cp = ColoredPoset::new(&build(&spec).unwrap()).unwrap();
        let lhs = conjecture_lhs(&cp, None, 6).unwrap();
        assert_eq!(lhs, product_geometric(&cp.hook_monomials().unwrap(), 6).unwrap(), "{spec:?}");
    }
}

#[test]
fn random_trees_other_seeds() {
    let pt = &sample_points(5, 1)[0];
    for seed in 100..108 {
        let spec = random_tree_spec(seed, 6);
        let lp = build(&PosetSpec::Tree(spec.clone())).unwrap();
        assert!(check_dcomplete(&lp.poset).is_dcomplete());
        let cp = ColoredPoset::new(&lp).unwrap();
        assert_eq!(conjecture_check(&cp, pt, 5).unwrap().mismatch().unwrap(), None, "{spec}");
        assert_eq!(tree_recursion_check(&lp, pt, 5).unwrap().mismatch().unwrap(), None, "{spec}");
    }
}

#[test]
fn custom_top_tree_labels_are_carried() {
    let poset = dk1(3).unwrap();
    let tree = qthook::dcomplete::top_tree(&poset).unwrap();
    let lp = LabeledPoset {
        poset,
        top_labels: tree.iter().map(|&e| (e, VarLabel::Aux('c', e as u32))).collect(),
    };
    let cp = ColoredPoset::new(&lp).unwrap();
    for e in 0..cp.len() {
        assert!(matches!(cp.label(e), VarLabel::Aux('c', _)));
    }
    let pt = &sample_points(9, 1)[0];
    assert_eq!(conjecture_check(&cp, pt, 5).unwrap().mismatch().unwrap(), None);
}

#[test]
fn non_dcomplete_posets_are_rejected() {
    assert!(check_dcomplete(&parse_tree("(a)").unwrap()).is_dcomplete());
    let bare = qthook::dcomplete::dk1_minus(4).unwrap();
    assert!(!check_dcomplete(&bare).is_dcomplete());
    let lp = LabeledPoset {
        top_labels: Default::default(),
        poset: bare,
    };
    assert!(ColoredPoset::new(&lp).is_err());
}
