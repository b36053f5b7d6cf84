//! Definition-file layer: building structures from defs, serializing them
//! back, and the catalog reference syntax.

use hopfmod::defs::{
    self, algebra_to_def, build_algebra, fodc_to_def, LoadFailure, LoadedAlgebra,
};
use hopfmod::{catalog, Scalar};

#[test]
fn algebra_def_roundtrip_through_json() {
    for name in catalog::ALGEBRAS {
        let h = catalog::algebra(name).unwrap();
        let alg = LoadedAlgebra::Hopf(h);
        let def = algebra_to_def(&alg);
        let json = serde_json::to_string(&def).unwrap();
        let parsed: defs::AlgebraDef = serde_json::from_str(&json).unwrap();
        let rebuilt = build_algebra(&parsed).unwrap();
        let (LoadedAlgebra::Hopf(orig), LoadedAlgebra::Hopf(back)) = (&alg, &rebuilt) else {
            panic!("{name}: lost the antipode in the round trip");
        };
        assert_eq!(orig.antipode, back.antipode, "{name}");
        let n = orig.dim();
        for i in 0..n {
            for j in 0..n {
                assert_eq!(
                    orig.bialgebra.algebra.mul_basis(i, j),
                    back.bialgebra.algebra.mul_basis(i, j),
                    "{name}: product e_{i}·e_{j}"
                );
            }
        }
        assert_eq!(
            orig.bialgebra.coalgebra.comult_basis(),
            back.bialgebra.coalgebra.comult_basis(),
            "{name}"
        );
    }
}

#[test]
fn fodc_def_roundtrip_preserves_reports() {
    use hopfmod::calculus::{check_fodc, check_right_covariance};
    for name in catalog::CALCULI {
        let (h, fodc) = catalog::calculus(name).unwrap();
        let alg = LoadedAlgebra::Hopf(h);
        let def = fodc_to_def(&alg, &fodc);
        let json = serde_json::to_string(&def).unwrap();
        let parsed: defs::FodcDef = serde_json::from_str(&json).unwrap();
        let (alg2, fodc2) = defs::build_fodc(&parsed, None).unwrap();
        let b = alg2.bialgebra();
        assert_eq!(fodc2.module, fodc.module, "{name}");
        assert_eq!(fodc2.partials, fodc.partials, "{name}");
        assert_eq!(fodc2.left_coaction, fodc.left_coaction, "{name}");
        assert!(check_fodc(b, &fodc2).all_pass(), "{name}");
        assert!(check_right_covariance(b, &fodc2).all_pass(), "{name}");
    }
}

#[test]
fn missing_antipode_loads_as_bialgebra() {
    let h = catalog::algebra("kZ2").unwrap();
    let mut def = algebra_to_def(&LoadedAlgebra::Hopf(h));
    def.antipode = None;
    match build_algebra(&def).unwrap() {
        LoadedAlgebra::Bialgebra(b) => assert!(b.verify().all_pass()),
        LoadedAlgebra::Hopf(_) => panic!("no antipode was declared"),
    }
}

#[test]
fn broken_structure_fails_verification_not_parsing() {
    let h = catalog::algebra("kZ2").unwrap();
    let mut def = algebra_to_def(&LoadedAlgebra::Hopf(h));
    // swap the antipode to the nontrivial permutation: S(g) = g still holds
    // for grouplikes, so instead break the counit
    def.counit = vec!["1".into(), "5".into()];
    match build_algebra(&def) {
        Err(LoadFailure::Verification(rep)) => {
            assert!(!rep.all_pass());
            assert!(rep.first_failure().is_some());
        }
        other => panic!("expected a verification failure, got {other:?}"),
    }
}

#[test]
fn out_of_range_indices_are_input_errors() {
    let h = catalog::algebra("kZ2").unwrap();
    let mut def = algebra_to_def(&LoadedAlgebra::Hopf(h));
    def.mult.push((7, 0, vec![(0, "1".into())]));
    assert!(matches!(
        build_algebra(&def),
        Err(LoadFailure::Input(_))
    ));
}

#[test]
fn scalar_strings_reject_malformed_input() {
    assert!(Scalar::parse("1//2").is_err());
    assert!(Scalar::parse("q +").is_err());
    assert!(Scalar::parse("1/0").is_err());
}

#[test]
fn catalog_reference_resolution() {
    let loaded = defs::load_algebra_input("catalog:kS3-fun").unwrap();
    assert_eq!(loaded.bialgebra().dim(), 6);
    assert!(defs::load_algebra_input("catalog:not-a-thing").is_err());
    assert!(defs::load_algebra_input("/no/such/file.def").is_err());
}

#[test]
fn catalog_bimodules_verify() {
    use hopfmod::bimodule::{check_twist, rule_from_left_module};
    for name in catalog::BIMODULES {
        let (h, m) = catalog::bimodule(name).unwrap();
        let b = &h.bialgebra;
        assert!(m.verify(&b.algebra).all_pass(), "{name}");
        let rule = rule_from_left_module(b, &m).unwrap();
        assert!(rule.verify(b).all_pass(), "{name}");
        assert!(check_twist(b, &rule).all_pass(), "{name}");
    }
}
