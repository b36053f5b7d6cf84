//! Worked small examples: the pairing over 𝕜[ℤ/2], the ε-projection,
//! concrete differentials of finite-group calculi, Cartan actions, and
//! validation of calculus constructors.

use hopfmod::algebra::{basis_elem, elem_add, elem_scale, zero_elem};
use hopfmod::bimodule::{epsilon_projection, rule_from_left_module, FreeBimodule};
use hopfmod::calculus::{cartan_action, finite_group_calculus, woronowicz_functionals};
use hopfmod::catalog;
use hopfmod::duality::{dualize, pair};
use hopfmod::group::FiniteGroup;
use hopfmod::linalg::Tensor;
use hopfmod::repcorep::regular_representation;
use hopfmod::scalar::Scalar;

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

#[test]
fn pairing_on_group_algebra_multiplies_group_elements() {
    // Γ is the rank-2 free bimodule over 𝕜[ℤ/2] from the regular module.
    let h = catalog::algebra("kZ2").unwrap();
    let b = &h.bialgebra;
    let m = regular_representation(&b.algebra);
    let rule = rule_from_left_module(b, &m).unwrap();
    let n = 2;
    let d = rule.carrier_dim;

    // X = g⊗f^1 in B⊗V*, x = e_1⊗g in V⊗B; the pairing contracts f^1
    // against e_1 and multiplies the algebra legs: g·g = 1
    let mut x_dual = Tensor::zero(vec![n, d]);
    x_dual.set(&[1, 1], s(1));
    let mut x = Tensor::zero(vec![d, n]);
    x.set(&[1, 1], s(1));
    assert_eq!(pair(b, &x_dual, &x), basis_elem(2, 0));

    // mismatched dual indices contract to zero
    let mut y = Tensor::zero(vec![d, n]);
    y.set(&[0, 1], s(1));
    assert_eq!(pair(b, &x_dual, &y), zero_elem(2));
}

#[test]
fn pairing_orders_factors_dual_side_first() {
    // over 𝕜[S3] the product order matters; the dual-side element
    // multiplies from the left
    let h = catalog::algebra("kS3").unwrap();
    let b = &h.bialgebra;
    let m = regular_representation(&b.algebra);
    let rule = rule_from_left_module(b, &m).unwrap();
    let n = 6;
    let d = rule.carrier_dim;
    // two non-commuting transpositions at indices 3 and 4
    let (a1, a2) = (3usize, 4usize);
    let mut x_dual = Tensor::zero(vec![n, d]);
    x_dual.set(&[a1, 0], s(1));
    let mut x = Tensor::zero(vec![d, n]);
    x.set(&[0, a2], s(1));
    let expected = b.algebra.mul_elem(&basis_elem(n, a1), &basis_elem(n, a2));
    assert_eq!(pair(b, &x_dual, &x), expected);
    assert_ne!(
        expected,
        b.algebra.mul_elem(&basis_elem(n, a2), &basis_elem(n, a1))
    );
}

#[test]
fn epsilon_projection_recovers_the_action() {
    // a·(e_k⊗1) projects to λ(a)e_k under id⊗ε
    for name in catalog::MODULES {
        let (h, m) = catalog::module(name).unwrap();
        let b = &h.bialgebra;
        let rule = rule_from_left_module(b, &m).unwrap();
        let free = FreeBimodule { rule: rule.clone() };
        let n = b.dim();
        for a in 0..n {
            for k in 0..m.carrier_dim {
                let g = free.act_left(b, &basis_elem(n, a), &free.generator(b, k));
                let projected = epsilon_projection(b, &rule, &g);
                let expected: Vec<Scalar> = (0..m.carrier_dim)
                    .map(|i| m.action[a].get(i, k).clone())
                    .collect();
                assert_eq!(projected, expected, "{name}, a={a}, k={k}");
            }
        }
    }
}

#[test]
fn dualize_is_an_involution() {
    for name in catalog::MODULES {
        let (h, m) = catalog::module(name).unwrap();
        let rule = rule_from_left_module(&h.bialgebra, &m).unwrap();
        let double = dualize(&dualize(&rule));
        assert_eq!(double, rule, "{name}");
    }
}

#[test]
fn z3_single_differential() {
    // T = {1} on ℤ/3: d(δ_0) = e_1⊗(δ_2 − δ_0)
    let (h, fodc) = catalog::calculus("fodc-Z3-single").unwrap();
    let n = h.dim();
    let df = fodc.differential(n, &basis_elem(n, 0));
    assert_eq!(df.shape, vec![1, 3]);
    assert_eq!(df.get(&[0, 0]), &s(-1));
    assert_eq!(df.get(&[0, 1]), &s(0));
    assert_eq!(df.get(&[0, 2]), &s(1));
}

#[test]
fn z2_differential_and_unit() {
    let (h, fodc) = catalog::calculus("fodc-Z2").unwrap();
    let n = h.dim();
    // d(1) = d(δ_0 + δ_1) = 0
    let one = elem_add(&basis_elem(n, 0), &basis_elem(n, 1));
    assert!(fodc.differential(n, &one).is_zero());
    // d(δ_0) = e_1⊗(δ_1 − δ_0)
    let df = fodc.differential(n, &basis_elem(n, 0));
    assert_eq!(df.get(&[0, 0]), &s(-1));
    assert_eq!(df.get(&[0, 1]), &s(1));
}

#[test]
fn chi_vanishes_on_the_unit() {
    for name in catalog::CALCULI {
        let (h, fodc) = catalog::calculus(name).unwrap();
        let b = &h.bialgebra;
        let chi = woronowicz_functionals(b, &fodc);
        for (i, row) in chi.iter().enumerate() {
            let mut on_unit = Scalar::zero();
            for (t, c) in b.algebra.unit.iter().enumerate() {
                on_unit += &(c * &row[t]);
            }
            assert!(on_unit.is_zero(), "{name}, χ^{i}(1) ≠ 0");
        }
    }
}

#[test]
fn cartan_action_is_left_linear() {
    // (a.X)^∂(f) = a·X^∂(f) for X = e_t⊗f^i and all basis a, f
    for name in catalog::CALCULI {
        let (h, fodc) = catalog::calculus(name).unwrap();
        let b = &h.bialgebra;
        let n = b.dim();
        let d = fodc.carrier_dim();
        for t in 0..n {
            for i in 0..d {
                let mut x = Tensor::zero(vec![n, d]);
                x.set(&[t, i], s(1));
                for a in 0..n {
                    // a.X moves a into the algebra leg
                    let moved = b.algebra.mul_elem(&basis_elem(n, a), &basis_elem(n, t));
                    let mut ax = Tensor::zero(vec![n, d]);
                    for (u, c) in moved.iter().enumerate() {
                        if !c.is_zero() {
                            ax.add_at(&[u, i], c);
                        }
                    }
                    for f in 0..n {
                        let fe = basis_elem(n, f);
                        let lhs = cartan_action(b, &fodc, &ax, &fe);
                        let rhs = b
                            .algebra
                            .mul_elem(&basis_elem(n, a), &cartan_action(b, &fodc, &x, &fe));
                        assert_eq!(lhs, rhs, "{name}: a={a}, X=e_{t}⊗f^{i}, f={f}");
                    }
                }
            }
        }
    }
}

#[test]
fn cartan_action_pairs_with_the_differential() {
    // X = 1⊗f^i recovers ∂^i
    let (h, fodc) = catalog::calculus("fodc-S3").unwrap();
    let b = &h.bialgebra;
    let n = b.dim();
    let d = fodc.carrier_dim();
    for i in 0..d {
        let mut x = Tensor::zero(vec![n, d]);
        for (t, c) in b.algebra.unit.iter().enumerate() {
            if !c.is_zero() {
                x.add_at(&[t, i], c);
            }
        }
        for f in 0..n {
            let fe = basis_elem(n, f);
            assert_eq!(cartan_action(b, &fodc, &x, &fe), fodc.partial(i, &fe));
        }
    }
}

#[test]
fn finite_group_calculus_rejects_bad_subsets() {
    let z3 = FiniteGroup::cyclic(3);
    assert!(finite_group_calculus(&z3, &[]).is_err(), "empty subset");
    assert!(finite_group_calculus(&z3, &[0]).is_err(), "identity element");
    assert!(finite_group_calculus(&z3, &[5]).is_err(), "out of range");
    assert!(finite_group_calculus(&z3, &[1, 1]).is_err(), "repeats");
    assert!(finite_group_calculus(&z3, &[1]).is_ok());
}

#[test]
fn non_closed_subset_has_no_left_coaction() {
    // {transposition} alone is conjugation closed in ℤ-like subgroups only;
    // in S3 a single transposition is not closed under conjugation
    let s3 = FiniteGroup::symmetric_3();
    let t = FiniteGroup::s3_transpositions();
    let (_, single) = finite_group_calculus(&s3, &t[..1]).unwrap();
    assert!(single.left_coaction.is_none());
    let (_, full) = finite_group_calculus(&s3, &t).unwrap();
    assert!(full.left_coaction.is_some());
}

#[test]
fn scaled_element_differentials_are_linear() {
    let (h, fodc) = catalog::calculus("fodc-Z3-full").unwrap();
    let n = h.dim();
    let f = elem_add(
        &elem_scale(&basis_elem(n, 1), &s(3)),
        &elem_scale(&basis_elem(n, 2), &s(-2)),
    );
    let df = fodc.differential(n, &f);
    let expected = fodc
        .differential(n, &elem_scale(&basis_elem(n, 1), &s(3)))
        .add(&fodc.differential(n, &elem_scale(&basis_elem(n, 2), &s(-2))));
    assert_eq!(df, expected);
}
