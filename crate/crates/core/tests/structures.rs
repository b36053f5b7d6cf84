//! Algebra-level behavior beyond the axiom suites: antipode order,
//! convolution algebra of functionals, morphism tagging, and op/cop
//! constructions.

use hopfmod::algebra::{basis_elem, LinearMap, MorphismKind};
use hopfmod::calculus::convolution;
use hopfmod::catalog;
use hopfmod::linalg::Matrix;
use hopfmod::scalar::Scalar;

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

#[test]
fn sweedler_antipode_has_order_four() {
    let h = catalog::sweedler();
    let s2 = h.antipode.pow(2);
    assert_ne!(s2, Matrix::identity(4));
    assert_eq!(h.antipode.pow(4), Matrix::identity(4));
    assert!(h.has_bijective_antipode());
}

#[test]
fn group_algebra_antipode_is_involutive() {
    for name in ["kZ2", "kZ3", "kS3", "kZ2-fun", "kS3-fun"] {
        let h = catalog::algebra(name).unwrap();
        let n = h.dim();
        assert_eq!(h.antipode.pow(2), Matrix::identity(n), "{name}");
    }
}

#[test]
fn convolution_unit_is_the_counit() {
    let h = catalog::sweedler();
    let b = &h.bialgebra;
    let eps = b.coalgebra.counit.clone();
    for t in 0..4 {
        // the indicator functional of the t-th basis element
        let phi: Vec<Scalar> = (0..4).map(|j| if j == t { s(1) } else { s(0) }).collect();
        assert_eq!(convolution(b, &phi, &eps), phi);
        assert_eq!(convolution(b, &eps, &phi), phi);
    }
}

#[test]
fn convolution_is_associative() {
    let h = catalog::sweedler();
    let b = &h.bialgebra;
    let functionals: Vec<Vec<Scalar>> = (0..4)
        .map(|t| (0..4).map(|j| if j == t { s(2) } else { s(-1) }).collect())
        .collect();
    for phi in &functionals {
        for psi in &functionals {
            for theta in &functionals {
                let left = convolution(b, &convolution(b, phi, psi), theta);
                let right = convolution(b, phi, &convolution(b, psi, theta));
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn antipode_is_tagged_anti_morphism_not_morphism() {
    let h = catalog::algebra("kS3").unwrap();
    let t = LinearMap::new(h.antipode.clone());
    let alg = &h.bialgebra.algebra;
    let anti = t.verify_algebra_morphism(alg, alg, MorphismKind::AntiMorphism);
    assert!(anti.all_pass());
    // S3 is nonabelian, so S is not a plain morphism
    let plain = t.verify_algebra_morphism(alg, alg, MorphismKind::Morphism);
    assert!(!plain.all_pass());
}

#[test]
fn op_and_cop_remain_bialgebras() {
    for name in catalog::ALGEBRAS {
        let h = catalog::algebra(name).unwrap();
        let b = &h.bialgebra;
        assert!(b.opposite().verify().all_pass(), "{name} op");
        assert!(b.co_opposite().verify().all_pass(), "{name} cop");
        assert!(b.op_cop().verify().all_pass(), "{name} opcop");
    }
}

#[test]
fn sweedler_relations() {
    let h = catalog::sweedler();
    let alg = &h.bialgebra.algebra;
    let g = basis_elem(4, 1);
    let x = basis_elem(4, 2);
    let gx = basis_elem(4, 3);
    assert_eq!(alg.mul_elem(&g, &g), basis_elem(4, 0));
    assert_eq!(alg.mul_elem(&x, &x), vec![s(0); 4]);
    assert_eq!(alg.mul_elem(&g, &x), gx);
    // xg = −gx
    let xg = alg.mul_elem(&x, &g);
    assert_eq!(xg, vec![s(0), s(0), s(0), s(-1)]);
    // S(x) = −gx, S(gx) = x
    assert_eq!(h.apply_antipode(&x), vec![s(0), s(0), s(0), s(-1)]);
    assert_eq!(h.apply_antipode(&gx), vec![s(0), s(0), s(1), s(0)]);
}
