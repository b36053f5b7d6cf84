//! Duality of free covariant bimodules: the transposed commutation rule on
//! the dual generators, the evaluation pairing, and the covariance
//! behaviour of the dual under both comultiplication orders.

use crate::algebra::{basis_elem, elem_scale, format_elem, zero_elem, BialgebraData, Elem};
use crate::bimodule::{
    left_covariance_rule_witness, rule_from_left_module, CommutationRule, FreeBimodule,
    Orientation,
};
use crate::error::{Error, Result};
use crate::linalg::Tensor;
use crate::repcorep::{LeftModule, RightComodule};
use crate::report::VerificationReport;
use crate::HopfAlgebraData;

/// Transpose the generator indices of a rule, flipping the orientation.
/// A Λ-rule on Γ = V⊗A becomes the Φ-rule of the dual Γ* = A⊗V*, and
/// conversely, so applying this twice is the identity.
pub fn dualize(r: &CommutationRule) -> CommutationRule {
    let d = r.carrier_dim;
    CommutationRule {
        orientation: match r.orientation {
            Orientation::Lambda => Orientation::Phi,
            Orientation::Phi => Orientation::Lambda,
        },
        carrier_dim: d,
        rule: r
            .rule
            .iter()
            .map(|m| {
                (0..d)
                    .map(|i| (0..d).map(|k| m[k][i].clone()).collect())
                    .collect()
            })
            .collect(),
    }
}

/// Evaluation pairing ≪·,·≫: (A⊗V*) × (V⊗A) → A. The dual leg contracts
/// against the generator leg; the algebra legs multiply with the dual
/// side's coefficient on the left.
pub fn pair(b: &BialgebraData, x_dual: &Tensor, x: &Tensor) -> Elem {
    let n = b.dim();
    assert_eq!(x_dual.shape, vec![n, x_dual.shape[1]]);
    assert_eq!(x.shape, vec![x.shape[0], n]);
    assert_eq!(x_dual.shape[1], x.shape[0]);
    let d = x.shape[0];
    let mut out = zero_elem(n);
    for t in 0..n {
        for i in 0..d {
            let c = x_dual.get(&[t, i]);
            if c.is_zero() {
                continue;
            }
            for u in 0..n {
                let w = x.get(&[i, u]);
                if w.is_zero() {
                    continue;
                }
                let prod = b.algebra.mul_basis(t, u);
                for (v, z) in prod.iter().enumerate() {
                    if !z.is_zero() {
                        out[v] = &out[v] + &(&(c * w) * z);
                    }
                }
            }
        }
    }
    out
}

/// Pairing compatibility between a Λ-rule bimodule and its dual:
/// outer bilinearity over both one-sided actions, the middle adjointness
/// ≪X·a, x≫ = ≪X, a·x≫, the closed form ≪(1⊗f^k)·a, e_i⊗1≫ = Λ^k_i(a),
/// and involutivity of [`dualize`].
pub fn check_pairing(b: &BialgebraData, r: &CommutationRule) -> Result<VerificationReport> {
    if r.orientation != Orientation::Lambda {
        return Err(Error::Precondition("expected a Λ-oriented rule".into()));
    }
    let mut rep = VerificationReport::new();
    let n = b.dim();
    let d = r.carrier_dim;
    let names = b.names();
    let dual = dualize(r);
    let primal = FreeBimodule { rule: r.clone() };
    let dual_bm = FreeBimodule { rule: dual.clone() };
    // basis elements of Γ* and Γ
    let dual_basis = |t: usize, i: usize| {
        let mut x = Tensor::zero(vec![n, d]);
        x.add_at(&[t, i], &crate::Scalar::one());
        x
    };
    let primal_basis = |k: usize, u: usize| {
        let mut x = Tensor::zero(vec![d, n]);
        x.add_at(&[k, u], &crate::Scalar::one());
        x
    };
    let mut outer = None;
    let mut middle = None;
    'scan: for t in 0..n {
        for i in 0..d {
            let xd = dual_basis(t, i);
            for k in 0..d {
                for u in 0..n {
                    let xp = primal_basis(k, u);
                    let base = pair(b, &xd, &xp);
                    for j in 0..n {
                        let a = basis_elem(n, j);
                        // left outer: ≪a·X, x≫ = a·≪X, x≫
                        let lhs = pair(b, &dual_bm.act_left(b, &a, &xd), &xp);
                        let rhs = b.algebra.mul_elem(&a, &base);
                        if lhs != rhs {
                            outer = Some(format!(
                                "≪{}·X, x≫ = {}  vs  {}",
                                names[j],
                                format_elem(&lhs, names),
                                format_elem(&rhs, names)
                            ));
                            break 'scan;
                        }
                        // right outer: ≪X, x·a≫ = ≪X, x≫·a
                        let lhs = pair(b, &xd, &primal.act_right(b, &xp, &a));
                        let rhs = b.algebra.mul_elem(&base, &a);
                        if lhs != rhs {
                            outer = Some(format!(
                                "≪X, x·{}≫ = {}  vs  {}",
                                names[j],
                                format_elem(&lhs, names),
                                format_elem(&rhs, names)
                            ));
                            break 'scan;
                        }
                        // middle adjointness
                        let lhs = pair(b, &dual_bm.act_right(b, &xd, &a), &xp);
                        let rhs = pair(b, &xd, &primal.act_left(b, &a, &xp));
                        if lhs != rhs {
                            middle = Some(format!(
                                "≪X·{}, x≫ = {}  vs  ≪X, {}·x≫ = {}",
                                names[j],
                                format_elem(&lhs, names),
                                names[j],
                                format_elem(&rhs, names)
                            ));
                            break 'scan;
                        }
                    }
                }
            }
        }
    }
    rep.push_witnessed(
        "duality.outer-bilinearity",
        "duality.bilinear",
        outer.is_none(),
        outer,
    );
    rep.push_witnessed(
        "duality.middle-adjointness",
        "duality.adjoint",
        middle.is_none(),
        middle,
    );
    // closed form against the rule entries
    let mut witness = None;
    'closed: for j in 0..n {
        let a = basis_elem(n, j);
        for k in 0..d {
            let gen = dual_bm.generator(b, k);
            let moved = dual_bm.act_right(b, &gen, &a);
            for i in 0..d {
                // x = e_i⊗1
                let mut x = Tensor::zero(vec![d, n]);
                for (u, c) in b.algebra.unit.iter().enumerate() {
                    x.add_at(&[i, u], c);
                }
                let got = pair(b, &moved, &x);
                let expected = r.rule[j][k][i].clone();
                if got != expected {
                    witness = Some(format!(
                        "≪(1⊗f^{k})·{}, e_{i}⊗1≫ = {}  vs  Λ^{k}_{i}({}) = {}",
                        names[j],
                        format_elem(&got, names),
                        names[j],
                        format_elem(&expected, names)
                    ));
                    break 'closed;
                }
            }
        }
    }
    rep.push_witnessed(
        "duality.rule-recovery",
        "duality.closed-form",
        witness.is_none(),
        witness,
    );
    let again = dualize(&dual);
    rep.push(
        "duality.double-dual-identity",
        "duality.involution",
        again.rule == r.rule && again.orientation == r.orientation,
    );
    Ok(rep)
}

/// Covariance dichotomy of the dual bimodule. Emits three checks: the
/// transposed rule built directly from the module data, left covariance of
/// the dual over the co-opposite comultiplication, and left covariance over
/// the original comultiplication. The last one fails exactly when the
/// comultiplication order matters.
pub fn check_dual_covariance(
    b: &BialgebraData,
    m: &LeftModule,
) -> Result<VerificationReport> {
    let primal = rule_from_left_module(b, m)?;
    let dual = dualize(&primal);
    let mut rep = VerificationReport::new();
    // direct reconstruction: Φ^m_k(e_j) = Σ c·λ^k_m(e_p)·e_q entrywise
    let n = b.dim();
    let d = m.carrier_dim;
    let mut witness = None;
    'direct: for j in 0..n {
        for mm in 0..d {
            for k in 0..d {
                let mut expected = zero_elem(n);
                for (p, q, c) in &b.coalgebra.comult_basis()[j] {
                    let w = c * m.action[*p].get(k, mm);
                    if !w.is_zero() {
                        expected = crate::algebra::elem_add(
                            &expected,
                            &elem_scale(&basis_elem(n, *q), &w),
                        );
                    }
                }
                if dual.rule[j][mm][k] != expected {
                    witness = Some(format!("dual rule entry ({mm},{k}) on basis {j} disagrees"));
                    break 'direct;
                }
            }
        }
    }
    rep.push_witnessed(
        "dual.transpose-rule",
        "duality.transpose-rule",
        witness.is_none(),
        witness,
    );
    let w = left_covariance_rule_witness(&b.co_opposite(), &dual);
    rep.push_witnessed(
        "dual.left-covariance-cop",
        "duality.covariance-cop",
        w.is_none(),
        w,
    );
    let w = left_covariance_rule_witness(b, &dual);
    rep.push_witnessed(
        "dual.left-covariance-original",
        "duality.covariance-original",
        w.is_none(),
        w,
    );
    Ok(rep)
}

/// Antipode pairing identity for a right comodule:
/// Σ_j R^k_j·S(R^j_i) = δ^k_i·1, checked both entrywise and through the
/// evaluation pairing on elements assembled from the matrix coefficients.
pub fn pairing_identity(h: &HopfAlgebraData, rc: &RightComodule) -> VerificationReport {
    let b = &h.bialgebra;
    let n = b.dim();
    let d = rc.carrier_dim;
    let names = b.names();
    let mut rep = rc.verify(&b.coalgebra);
    if !rep.all_pass() {
        return rep;
    }
    let mut witness = None;
    'entry: for k in 0..d {
        for i in 0..d {
            let mut acc = zero_elem(n);
            for j in 0..d {
                let s_r = h.apply_antipode(&rc.coeffs[j][i]);
                acc = crate::algebra::elem_add(&acc, &b.algebra.mul_elem(&rc.coeffs[k][j], &s_r));
            }
            let expected = if k == i {
                b.algebra.unit.clone()
            } else {
                zero_elem(n)
            };
            if acc != expected {
                witness = Some(format!(
                    "entry ({k},{i}): Σ_j R^{k}_j·S(R^j_{i}) = {}",
                    format_elem(&acc, names)
                ));
                break 'entry;
            }
        }
    }
    rep.push_witnessed(
        "pairing.antipode-identity-entrywise",
        "duality.antipode-pairing",
        witness.is_none(),
        witness,
    );
    // element form: X^k = Σ_j R^k_j⊗f^j in B⊗V*, x_i = Σ_m e_m⊗S(R^m_i)
    // in V⊗B; the pairing of X^k with x_i contracts to the same sum.
    let mut witness = None;
    'full: for k in 0..d {
        let mut xk = Tensor::zero(vec![n, d]);
        for j in 0..d {
            for (t, c) in rc.coeffs[k][j].iter().enumerate() {
                if !c.is_zero() {
                    xk.add_at(&[t, j], c);
                }
            }
        }
        for i in 0..d {
            let mut xi = Tensor::zero(vec![d, n]);
            for m in 0..d {
                let s_r = h.apply_antipode(&rc.coeffs[m][i]);
                for (u, c) in s_r.iter().enumerate() {
                    if !c.is_zero() {
                        xi.add_at(&[m, u], c);
                    }
                }
            }
            let got = pair(b, &xk, &xi);
            let expected = if k == i {
                b.algebra.unit.clone()
            } else {
                zero_elem(n)
            };
            if got != expected {
                witness = Some(format!(
                    "≪X^{k}, x_{i}≫ = {}",
                    format_elem(&got, names)
                ));
                break 'full;
            }
        }
    }
    rep.push_witnessed(
        "pairing.antipode-identity-elements",
        "duality.antipode-pairing-elements",
        witness.is_none(),
        witness,
    );
    rep
}
