//! Representation plumbing: transposes, double transposes, pull-back and
//! push-forward along (anti-)morphisms, and the regular (co)representations.

use hopfmod::algebra::{LinearMap, MorphismKind};
use hopfmod::catalog;
use hopfmod::repcorep::{
    pull_back, push_forward, regular_corepresentation, regular_representation,
    transpose_comodule, transpose_module, transpose_right_comodule, transpose_right_module,
    PulledBack, PushedForward,
};

#[test]
fn regular_structures_verify() {
    for name in catalog::ALGEBRAS {
        let h = catalog::algebra(name).unwrap();
        let b = &h.bialgebra;
        let m = regular_representation(&b.algebra);
        assert!(m.verify(&b.algebra).all_pass(), "{name} regular module");
        let c = regular_corepresentation(&b.coalgebra);
        assert!(c.verify(&b.coalgebra).all_pass(), "{name} regular comodule");
    }
}

#[test]
fn double_transpose_is_identity() {
    for name in catalog::MODULES {
        let (h, m) = catalog::module(name).unwrap();
        let alg = &h.bialgebra.algebra;
        let r = transpose_module(alg, &m).unwrap();
        assert!(r.verify(alg).all_pass(), "{name} transpose is a right module");
        let back = transpose_right_module(alg, &r).unwrap();
        assert_eq!(back, m, "{name}");
    }
}

#[test]
fn comodule_double_transpose_is_identity() {
    for name in ["kZ2", "kZ3", "kS3-fun", "sweedler-H4"] {
        let h = catalog::algebra(name).unwrap();
        let co = &h.bialgebra.coalgebra;
        let c = regular_corepresentation(co);
        let r = transpose_comodule(co, &c).unwrap();
        assert!(r.verify(co).all_pass(), "{name} transpose coacts");
        let back = transpose_right_comodule(co, &r).unwrap();
        assert_eq!(back, c, "{name}");
    }
}

#[test]
fn pull_back_along_identity_is_identity() {
    let (h, m) = catalog::module("kS3-perm").unwrap();
    let alg = &h.bialgebra.algebra;
    let id = LinearMap::new(hopfmod::Matrix::identity(h.dim()));
    match pull_back(&id, MorphismKind::Morphism, alg, alg, &m).unwrap() {
        PulledBack::Left(back) => assert_eq!(back, m),
        PulledBack::Right(_) => panic!("morphism tag must give a left module"),
    }
}

#[test]
fn pull_back_along_antipode_gives_right_module() {
    let (h, m) = catalog::module("kS3-perm").unwrap();
    let alg = &h.bialgebra.algebra;
    let s = LinearMap::new(h.antipode.clone());
    match pull_back(&s, MorphismKind::AntiMorphism, alg, alg, &m).unwrap() {
        PulledBack::Right(r) => assert!(r.verify(alg).all_pass()),
        PulledBack::Left(_) => panic!("anti-morphism tag must give a right module"),
    }
}

#[test]
fn pull_back_rejects_a_wrongly_tagged_map() {
    let (h, m) = catalog::module("kS3-perm").unwrap();
    let alg = &h.bialgebra.algebra;
    let s = LinearMap::new(h.antipode.clone());
    assert!(pull_back(&s, MorphismKind::Morphism, alg, alg, &m).is_err());
}

#[test]
fn push_forward_along_antipode() {
    // S on 𝕜[ℤ/2] is the identity on grouplikes, so the pushed-forward
    // right coaction has the same matrix elements
    let h = catalog::algebra("kZ2").unwrap();
    let co = &h.bialgebra.coalgebra;
    let c = regular_corepresentation(co);
    let s = LinearMap::new(h.antipode.clone());
    match push_forward(&s, MorphismKind::AntiMorphism, co, co, &c).unwrap() {
        PushedForward::Right(r) => {
            assert!(r.verify(co).all_pass());
            assert_eq!(r.coeffs, c.coeffs);
        }
        PushedForward::Left(_) => panic!("anti-morphism tag must give a right coaction"),
    }

    // on 𝕜[S3] the entries move to the inverses and still coact
    let h = catalog::algebra("kS3").unwrap();
    let co = &h.bialgebra.coalgebra;
    let c = regular_corepresentation(co);
    let s = LinearMap::new(h.antipode.clone());
    match push_forward(&s, MorphismKind::AntiMorphism, co, co, &c).unwrap() {
        PushedForward::Right(r) => assert!(r.verify(co).all_pass()),
        PushedForward::Left(_) => unreachable!(),
    }
}

#[test]
fn pull_back_is_functorial() {
    let (h, m) = catalog::module("H4-2dim").unwrap();
    let alg = &h.bialgebra.algebra;
    // S² is a plain morphism; pulling back along S² equals two successive
    // pull-backs along S (the right-module detour composes back)
    let s2 = LinearMap::new(h.antipode.pow(2));
    let PulledBack::Left(direct) =
        pull_back(&s2, MorphismKind::Morphism, alg, alg, &m).unwrap()
    else {
        unreachable!()
    };
    assert!(direct.verify(alg).all_pass());
    // composite check on the action matrices: λ'(e_j) = λ(S²e_j)
    for j in 0..h.dim() {
        let img = LinearMap::new(h.antipode.pow(2)).apply(&hopfmod::algebra::basis_elem(4, j));
        assert_eq!(direct.action[j], m.matrix_of(&img));
    }
}
