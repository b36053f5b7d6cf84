//! End-to-end acceptance suite. Each test covers one gate criterion and
//! prints a single summary line.

use hopfmod::algebra::basis_elem;
use hopfmod::bimodule::{
    bicovariant_from_yd, check_covariance, check_twist, module_from_rule, right_module_from_rule,
    rule_from_left_module, CovarianceSides,
};
use hopfmod::calculus::{check_fodc, check_right_covariance, quantum_lie_bracket};
use hopfmod::catalog;
use hopfmod::duality::{check_dual_covariance, check_pairing, pairing_identity};
use hopfmod::linalg::Matrix;
use hopfmod::repcorep::{regular_representation, RightComodule};
use hopfmod::scalar::Scalar;
use hopfmod::yd::{
    check_yd, flip_matrix, satisfies_braid, satisfies_qybe, trivial_yd, yang_baxter, yd_dual,
    yd_from_cop, yd_ll_to_lr, yd_ll_to_rr, yd_lr_to_ll, yd_rr_to_ll, yd_to_cop, Corner, YdModule,
};

fn passing_yd_names() -> Vec<&'static str> {
    vec![
        "kZ2-trivial",
        "kZ2-sign-g",
        "kZ3-fun-diag",
        "kS3-conj",
        "kS3-fun-conj",
        "H4-adjoint",
    ]
}

fn broken_yd_names() -> Vec<&'static str> {
    vec!["broken-kS3-coaction", "broken-kS3-fun-action"]
}

#[test]
fn criterion_01_axiom_suites() {
    for name in catalog::ALGEBRAS {
        let h = catalog::algebra(name).unwrap();
        let rep = h.verify();
        assert!(rep.all_pass(), "axioms fail for {name}:\n{rep}");
        let rep = h.antipode_as_anti_morphisms();
        assert!(rep.all_pass(), "antipode maps fail for {name}:\n{rep}");
        assert!(h.has_bijective_antipode(), "antipode not invertible for {name}");
    }
    let h4 = catalog::algebra("sweedler-H4").unwrap();
    let s2 = h4.antipode.pow(2);
    assert_ne!(s2, Matrix::identity(4), "S² should differ from id on H4");
    assert_eq!(s2.pow(2), Matrix::identity(4), "S⁴ should be id on H4");
    println!("criterion 01 axiom-suites: PASS");
}

#[test]
fn criterion_02_duality_of_verdicts() {
    for name in passing_yd_names() {
        let (h, m) = catalog::yd(name).unwrap();
        let b = &h.bialgebra;
        let primal = check_yd(b, &m);
        assert!(primal.all_pass(), "{name} should pass:\n{primal}");
        let dual = yd_dual(b, &m).unwrap();
        let dual_rep = check_yd(b, &dual);
        assert!(
            dual_rep.all_pass(),
            "dual of {name} should pass:\n{dual_rep}"
        );
    }
    for name in broken_yd_names() {
        let (h, m) = catalog::yd(name).unwrap();
        let b = &h.bialgebra;
        let primal = check_yd(b, &m);
        assert!(!primal.all_pass(), "{name} should fail");
        let fail = primal.first_failure().unwrap();
        assert!(
            fail.witness.is_some(),
            "{name} failure should carry a witness"
        );
        let dual = yd_dual(b, &m).unwrap();
        let dual_rep = check_yd(b, &dual);
        assert!(!dual_rep.all_pass(), "dual of {name} should fail");
        assert!(dual_rep.first_failure().unwrap().witness.is_some());
    }
    println!("criterion 02 crossed-module-duality: PASS");
}

#[test]
fn criterion_03_corner_transforms() {
    for name in passing_yd_names() {
        let (h, m) = catalog::yd(name).unwrap();
        let b = &h.bialgebra;
        let rr = yd_ll_to_rr(&h, &m).unwrap();
        let rep = check_yd(b, &rr);
        assert!(rep.all_pass(), "right-right transform of {name}:\n{rep}");
        let back = yd_rr_to_ll(&h, &rr).unwrap();
        assert_eq!(back, m, "right-right round trip on {name}");
        let cop = yd_to_cop(&h, &m).unwrap();
        let rep = check_yd(&b.co_opposite(), &cop);
        assert!(rep.all_pass(), "co-opposite transform of {name}:\n{rep}");
        let back = yd_from_cop(&h, &cop).unwrap();
        assert_eq!(back, m, "co-opposite round trip on {name}");
        let lr = yd_ll_to_lr(&h, &m).unwrap();
        let rep = check_yd(b, &lr);
        assert!(rep.all_pass(), "left-right transform of {name}:\n{rep}");
        let back = yd_lr_to_ll(&h, &lr).unwrap();
        assert_eq!(back, m, "left-right round trip on {name}");
    }
    println!("criterion 03 corner-transforms: PASS");
}

#[test]
fn criterion_04_yang_baxter() {
    for name in passing_yd_names() {
        let (h, m) = catalog::yd(name).unwrap();
        let b = &h.bialgebra;
        let rr = yd_ll_to_rr(&h, &m).unwrap();
        let op = yang_baxter(b, &rr).unwrap();
        let d = op.carrier_dim;
        assert!(satisfies_braid(&op.matrix, d), "braid fails for {name}");
        assert!(op.matrix.inverse().is_ok(), "operator singular for {name}");
        let qybe = hopfmod::yd::braid_to_qybe(&op);
        assert!(satisfies_qybe(&qybe, d), "converted operator fails for {name}");
    }
    // the trivial instance yields the flip
    let h = catalog::algebra("kS3").unwrap();
    let trivial = trivial_yd(&h.bialgebra, Corner::Rr, 2);
    let op = yang_baxter(&h.bialgebra, &trivial).unwrap();
    assert_eq!(op.matrix, flip_matrix(2), "trivial braiding should flip");
    println!("criterion 04 yang-baxter: PASS");
}

fn catalog_right_comodules() -> Vec<(String, hopfmod::HopfAlgebraData, RightComodule)> {
    let mut out = Vec::new();
    for name in passing_yd_names() {
        let (h, m) = catalog::yd(name).unwrap();
        let rr = yd_ll_to_rr(&h, &m).unwrap();
        let YdModule::Rr { coaction, .. } = rr else { unreachable!() };
        out.push((format!("{name}/transform"), h.clone(), coaction));
        let dual = yd_dual(&h.bialgebra, &m).unwrap();
        let YdModule::Rr { coaction, .. } = dual else { unreachable!() };
        out.push((format!("{name}/dual"), h, coaction));
    }
    out
}

#[test]
fn criterion_05_pairing_identity() {
    for (label, h, rc) in catalog_right_comodules() {
        let rep = pairing_identity(&h, &rc);
        assert!(rep.all_pass(), "pairing identity fails for {label}:\n{rep}");
    }
    println!("criterion 05 pairing-identity: PASS");
}

#[test]
fn criterion_06_covariance_dichotomy() {
    let cases: Vec<(&str, hopfmod::HopfAlgebraData, hopfmod::repcorep::LeftModule, bool)> = vec![
        {
            let (h, m) = catalog::module("H4-2dim").unwrap();
            ("H4-2dim", h, m, false)
        },
        {
            let (h, fodc) = catalog::calculus("fodc-S3").unwrap();
            ("kS3-fun-diag", h, fodc.module.clone(), false)
        },
        {
            let h = catalog::algebra("kZ2").unwrap();
            let m = regular_representation(&h.bialgebra.algebra);
            ("kZ2-regular", h, m, true)
        },
        {
            let h = catalog::algebra("kZ3").unwrap();
            let m = regular_representation(&h.bialgebra.algebra);
            ("kZ3-regular", h, m, true)
        },
    ];
    for (label, h, m, cocommutative) in cases {
        let rep = check_dual_covariance(&h.bialgebra, &m).unwrap();
        let find = |n: &str| rep.checks.iter().find(|c| c.name == n).unwrap();
        assert!(find("dual.transpose-rule").pass, "{label}: transpose rule");
        assert!(
            find("dual.left-covariance-cop").pass,
            "{label}: reversed-order covariance should hold"
        );
        let original = find("dual.left-covariance-original");
        if cocommutative {
            assert!(original.pass, "{label}: original order should also hold");
        } else {
            assert!(!original.pass, "{label}: original order should fail");
            assert!(
                original.witness.is_some(),
                "{label}: failure should carry a witness"
            );
        }
    }
    println!("criterion 06 covariance-dichotomy: PASS");
}

#[test]
fn criterion_07_round_trips() {
    // module -> rule -> module
    for name in catalog::MODULES {
        let (h, m) = catalog::module(name).unwrap();
        let b = &h.bialgebra;
        let rule = rule_from_left_module(b, &m).unwrap();
        assert!(rule.verify(b).all_pass(), "rule law fails for {name}");
        let back = module_from_rule(b, &rule);
        assert_eq!(back, m, "module round trip for {name}");
        // pairing compatibility of the rule with its dual
        let rep = check_pairing(b, &rule).unwrap();
        assert!(rep.all_pass(), "pairing checks fail for {name}:\n{rep}");
    }
    // crossed module -> bicovariant bimodule -> right module
    for name in passing_yd_names() {
        let (h, m) = catalog::yd(name).unwrap();
        let b = &h.bialgebra;
        let rr = yd_ll_to_rr(&h, &m).unwrap();
        let YdModule::Rr { action, .. } = &rr else { unreachable!() };
        let bico = bicovariant_from_yd(b, &rr).unwrap();
        let rep = check_covariance(b, &bico, CovarianceSides::all());
        assert!(rep.all_pass(), "covariance fails for {name}:\n{rep}");
        let back = right_module_from_rule(b, &bico.rule);
        assert_eq!(&back, action, "right module round trip for {name}");
    }
    println!("criterion 07 round-trips: PASS");
}

#[test]
fn criterion_08_calculi() {
    for name in catalog::CALCULI {
        let (h, fodc) = catalog::calculus(name).unwrap();
        let b = &h.bialgebra;
        let rep = check_fodc(b, &fodc);
        assert!(rep.all_pass(), "calculus checks fail for {name}:\n{rep}");
        let rep = check_right_covariance(b, &fodc);
        assert!(rep.all_pass(), "covariance fails for {name}:\n{rep}");
    }
    // negative control: perturb one partial derivative entry
    let (h, mut fodc) = catalog::calculus("fodc-Z3-full").unwrap();
    let old = fodc.partials[0].get(1, 2).clone();
    fodc.partials[0].set(1, 2, &old + &Scalar::one());
    let rep = check_fodc(&h.bialgebra, &fodc);
    let find = |n: &str| rep.checks.iter().find(|c| c.name == n).unwrap();
    assert!(!find("calculus.twisted-leibniz-componentwise").pass);
    assert!(!find("calculus.twisted-leibniz-bimodule").pass);
    assert!(
        find("calculus.leibniz-forms-agree").pass,
        "both Leibniz forms must fail together"
    );
    println!("criterion 08 differential-calculi: PASS");
}

#[test]
fn criterion_09_quantum_lie_brackets() {
    // rank one: the bracket table is identically zero
    let (h, fodc) = catalog::calculus("fodc-Z2").unwrap();
    let table = quantum_lie_bracket(&h, &fodc).unwrap();
    assert!(table.is_closed());
    for row in &table.brackets {
        for br in row {
            assert!(br.iter().all(Scalar::is_zero), "rank-one bracket must vanish");
        }
    }
    // closure and reproducibility on the larger calculi
    for name in ["fodc-Z3-full", "fodc-S3"] {
        let (h, fodc) = catalog::calculus(name).unwrap();
        let table = quantum_lie_bracket(&h, &fodc).unwrap();
        assert!(table.is_closed(), "bracket leaves the span for {name}");
        // bracket functionals vanish on the unit
        let b = &h.bialgebra;
        let unit = &b.algebra.unit;
        for row in &table.brackets {
            for br in row {
                let mut on_unit = Scalar::zero();
                for (t, c) in unit.iter().enumerate() {
                    on_unit += &(c * &br[t]);
                }
                assert!(on_unit.is_zero(), "bracket functional nonzero on 1");
            }
        }
        let rendered = table.render();
        let again = quantum_lie_bracket(&h, &fodc).unwrap().render();
        assert_eq!(rendered, again, "bracket table must be reproducible");
        assert_eq!(
            rendered.as_bytes(),
            again.as_bytes(),
            "byte-identical reproduction for {name}"
        );
    }
    println!("criterion 09 quantum-lie-brackets: PASS");
}

#[test]
fn criterion_10_twists() {
    let mut rules = Vec::new();
    for name in catalog::MODULES {
        let (h, m) = catalog::module(name).unwrap();
        let rule = rule_from_left_module(&h.bialgebra, &m).unwrap();
        rules.push((name.to_string(), h, rule));
    }
    for name in catalog::CALCULI {
        let (h, fodc) = catalog::calculus(name).unwrap();
        let rule = rule_from_left_module(&h.bialgebra, &fodc.module).unwrap();
        rules.push((name.to_string(), h, rule));
    }
    for (label, h, rule) in &rules {
        let rep = check_twist(&h.bialgebra, rule);
        assert!(rep.all_pass(), "twist fails for {label}:\n{rep}");
    }
    // a hand-broken rule fails both the rule law and the hexagon
    let (label, h, rule) = &rules[0];
    let mut broken = rule.clone();
    let n = h.dim();
    broken.rule[1][0][0] = hopfmod::algebra::elem_add(&broken.rule[1][0][0], &basis_elem(n, 0));
    let law = broken.verify(&h.bialgebra);
    assert!(!law.all_pass(), "perturbed rule should break the law ({label})");
    let twist = check_twist(&h.bialgebra, &broken);
    let hex = twist
        .checks
        .iter()
        .find(|c| c.name == "twist.hexagon")
        .unwrap();
    assert!(!hex.pass, "perturbed rule should break the hexagon");
    println!("criterion 10 twists: PASS");
}
