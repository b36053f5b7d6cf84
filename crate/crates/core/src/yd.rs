//! Yetter-Drinfeld (crossed) modules: the four corner compatibility
//! conditions, the antipode-induced category transforms, duality under
//! transposition, and the induced quantum Yang-Baxter operator.

use crate::algebra::{
    basis_elem, elem_add, elem_scale, format_elem, zero_elem, BialgebraData, Elem,
    HopfAlgebraData,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::repcorep::{
    transpose_comodule, transpose_module, LeftComodule, LeftModule, RightComodule, RightModule,
};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Corner {
    Ll,
    Rr,
    Lr,
    Rl,
}

impl std::fmt::Display for Corner {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Corner::Ll => "LL",
            Corner::Rr => "RR",
            Corner::Lr => "LR",
            Corner::Rl => "RL",
        };
        write!(f, "{s}")
    }
}

/// A module-and-comodule pair in one of the four sidedness corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum YdModule {
    Ll {
        action: LeftModule,
        coaction: LeftComodule,
    },
    Rr {
        action: RightModule,
        coaction: RightComodule,
    },
    Lr {
        action: LeftModule,
        coaction: RightComodule,
    },
    Rl {
        action: RightModule,
        coaction: LeftComodule,
    },
}

impl YdModule {
    pub fn corner(&self) -> Corner {
        match self {
            YdModule::Ll { .. } => Corner::Ll,
            YdModule::Rr { .. } => Corner::Rr,
            YdModule::Lr { .. } => Corner::Lr,
            YdModule::Rl { .. } => Corner::Rl,
        }
    }

    pub fn carrier_dim(&self) -> usize {
        match self {
            YdModule::Ll { action, .. } => action.carrier_dim,
            YdModule::Rr { action, .. } => action.carrier_dim,
            YdModule::Lr { action, .. } => action.carrier_dim,
            YdModule::Rl { action, .. } => action.carrier_dim,
        }
    }
}

/// The trivial Yetter-Drinfeld module of a given rank: counit action,
/// unit coaction, any corner.
pub fn trivial_yd(b: &BialgebraData, corner: Corner, carrier_dim: usize) -> YdModule {
    let action_mats: Vec<Matrix> = (0..b.dim())
        .map(|j| Matrix::identity(carrier_dim).scale(&b.coalgebra.counit[j]))
        .collect();
    let coeffs: Vec<Vec<Elem>> = (0..carrier_dim)
        .map(|i| {
            (0..carrier_dim)
                .map(|k| {
                    if i == k {
                        b.algebra.unit.clone()
                    } else {
                        zero_elem(b.dim())
                    }
                })
                .collect()
        })
        .collect();
    match corner {
        Corner::Ll => YdModule::Ll {
            action: LeftModule {
                carrier_dim,
                action: action_mats,
            },
            coaction: LeftComodule {
                carrier_dim,
                coeffs,
            },
        },
        Corner::Rr => YdModule::Rr {
            action: RightModule {
                carrier_dim,
                action: action_mats,
            },
            coaction: RightComodule {
                carrier_dim,
                coeffs,
            },
        },
        Corner::Lr => YdModule::Lr {
            action: LeftModule {
                carrier_dim,
                action: action_mats,
            },
            coaction: RightComodule {
                carrier_dim,
                coeffs,
            },
        },
        Corner::Rl => YdModule::Rl {
            action: RightModule {
                carrier_dim,
                action: action_mats,
            },
            coaction: LeftComodule {
                carrier_dim,
                coeffs,
            },
        },
    }
}

/// Left-left compatibility on basis data: for every algebra basis element a
/// and carrier pair (i,k),
/// a₍₁₎ L^m_k λ^i_m(a₍₂₎) = L^i_m a₍₂₎ λ^m_k(a₍₁₎).
fn ll_condition(
    b: &BialgebraData,
    action: &LeftModule,
    coaction: &LeftComodule,
) -> Option<String> {
    let n = b.dim();
    let d = action.carrier_dim;
    let names = b.names();
    for t in 0..n {
        for i in 0..d {
            for k in 0..d {
                let mut lhs = zero_elem(n);
                let mut rhs = zero_elem(n);
                for (p, q, c) in &b.coalgebra.comult_basis()[t] {
                    for m in 0..d {
                        let lam_iq = action.action[*q].get(i, m);
                        if !lam_iq.is_zero() {
                            let prod =
                                b.algebra.mul_elem(&basis_elem(n, *p), &coaction.coeffs[m][k]);
                            lhs = elem_add(&lhs, &elem_scale(&prod, &(c * lam_iq)));
                        }
                        let lam_mp = action.action[*p].get(m, k);
                        if !lam_mp.is_zero() {
                            let prod =
                                b.algebra.mul_elem(&coaction.coeffs[i][m], &basis_elem(n, *q));
                            rhs = elem_add(&rhs, &elem_scale(&prod, &(c * lam_mp)));
                        }
                    }
                }
                if lhs != rhs {
                    return Some(format!(
                        "a = {}, (i,k) = ({i},{k}): lhs = {}, rhs = {}",
                        names[t],
                        format_elem(&lhs, names),
                        format_elem(&rhs, names)
                    ));
                }
            }
        }
    }
    None
}

/// Right-right compatibility:
/// a₍₁₎ R^k_m ρ^m_i(a₍₂₎) = R^m_i a₍₂₎ ρ^k_m(a₍₁₎).
fn rr_condition(
    b: &BialgebraData,
    action: &RightModule,
    coaction: &RightComodule,
) -> Option<String> {
    let n = b.dim();
    let d = action.carrier_dim;
    let names = b.names();
    for t in 0..n {
        for k in 0..d {
            for i in 0..d {
                let mut lhs = zero_elem(n);
                let mut rhs = zero_elem(n);
                for (p, q, c) in &b.coalgebra.comult_basis()[t] {
                    for m in 0..d {
                        let rho_mq = action.action[*q].get(m, i);
                        if !rho_mq.is_zero() {
                            let prod =
                                b.algebra.mul_elem(&basis_elem(n, *p), &coaction.coeffs[k][m]);
                            lhs = elem_add(&lhs, &elem_scale(&prod, &(c * rho_mq)));
                        }
                        let rho_kp = action.action[*p].get(k, m);
                        if !rho_kp.is_zero() {
                            let prod =
                                b.algebra.mul_elem(&coaction.coeffs[m][i], &basis_elem(n, *q));
                            rhs = elem_add(&rhs, &elem_scale(&prod, &(c * rho_kp)));
                        }
                    }
                }
                if lhs != rhs {
                    return Some(format!(
                        "a = {}, (k,i) = ({k},{i}): lhs = {}, rhs = {}",
                        names[t],
                        format_elem(&lhs, names),
                        format_elem(&rhs, names)
                    ));
                }
            }
        }
    }
    None
}

/// Verify the corner's compatibility condition after checking the action
/// and coaction individually. The mixed corners are reduced to the pure
/// ones over the co-opposite bialgebra (the re-interpretation is formal:
/// a right coaction of B is a left coaction of B^cop and vice versa).
pub fn check_yd(b: &BialgebraData, m: &YdModule) -> VerificationReport {
    let mut rep = VerificationReport::new();
    match m {
        YdModule::Ll { action, coaction } => {
            rep.merge(action.verify(&b.algebra));
            rep.merge(coaction.verify(&b.coalgebra));
            if rep.all_pass() {
                let w = ll_condition(b, action, coaction);
                rep.push_witnessed("yd.left-left-compatibility", "yd.ll", w.is_none(), w);
            }
        }
        YdModule::Rr { action, coaction } => {
            rep.merge(action.verify(&b.algebra));
            rep.merge(coaction.verify(&b.coalgebra));
            if rep.all_pass() {
                let w = rr_condition(b, action, coaction);
                rep.push_witnessed("yd.right-right-compatibility", "yd.rr", w.is_none(), w);
            }
        }
        YdModule::Lr { action, coaction } => {
            rep.merge(action.verify(&b.algebra));
            rep.merge(coaction.verify(&b.coalgebra));
            if rep.all_pass() {
                let cop = b.co_opposite();
                let as_left = LeftComodule {
                    carrier_dim: coaction.carrier_dim,
                    coeffs: coaction.coeffs.clone(),
                };
                let w = ll_condition(&cop, action, &as_left);
                rep.push_witnessed("yd.left-right-compatibility", "yd.lr-via-cop", w.is_none(), w);
            }
        }
        YdModule::Rl { action, coaction } => {
            rep.merge(action.verify(&b.algebra));
            rep.merge(coaction.verify(&b.coalgebra));
            if rep.all_pass() {
                let cop = b.co_opposite();
                let as_right = RightComodule {
                    carrier_dim: coaction.carrier_dim,
                    coeffs: coaction.coeffs.clone(),
                };
                let w = rr_condition(&cop, action, &as_right);
                rep.push_witnessed("yd.right-left-compatibility", "yd.rl-via-cop", w.is_none(), w);
            }
        }
    }
    rep
}

fn apply_to_coeffs(mat: &Matrix, coeffs: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    coeffs
        .iter()
        .map(|row| row.iter().map(|e| mat.apply(e)).collect())
        .collect()
}

fn combine_action(weights: &Matrix, action: &[Matrix], d: usize) -> Vec<Matrix> {
    // output action on e_j = Σ_t weights[t][j] · action[t]
    (0..weights.cols)
        .map(|j| {
            let mut m = Matrix::zero(d, d);
            for t in 0..weights.rows {
                let w = weights.get(t, j);
                if !w.is_zero() {
                    m = m.add(&action[t].scale(w));
                }
            }
            m
        })
        .collect()
}

/// Left-left to right-right along the antipode:
/// (V, m_L, Δ_L) ↦ (V, (S⁻¹)-pull-back of m_L, S-push-forward of Δ_L).
pub fn yd_ll_to_rr(h: &HopfAlgebraData, m: &YdModule) -> Result<YdModule> {
    let YdModule::Ll { action, coaction } = m else {
        return Err(Error::Precondition("expected a left-left instance".into()));
    };
    let sinv = h
        .antipode_inverse
        .as_ref()
        .ok_or(Error::NoBijectiveAntipode)?;
    let d = action.carrier_dim;
    Ok(YdModule::Rr {
        action: RightModule {
            carrier_dim: d,
            action: combine_action(sinv, &action.action, d),
        },
        coaction: RightComodule {
            carrier_dim: d,
            coeffs: apply_to_coeffs(&h.antipode, &coaction.coeffs),
        },
    })
}

/// Inverse of [`yd_ll_to_rr`]: pull the action back along S and push the
/// coaction forward along S⁻¹.
pub fn yd_rr_to_ll(h: &HopfAlgebraData, m: &YdModule) -> Result<YdModule> {
    let YdModule::Rr { action, coaction } = m else {
        return Err(Error::Precondition("expected a right-right instance".into()));
    };
    let sinv = h
        .antipode_inverse
        .as_ref()
        .ok_or(Error::NoBijectiveAntipode)?;
    let d = action.carrier_dim;
    Ok(YdModule::Ll {
        action: LeftModule {
            carrier_dim: d,
            action: combine_action(&h.antipode, &action.action, d),
        },
        coaction: LeftComodule {
            carrier_dim: d,
            coeffs: apply_to_coeffs(sinv, &coaction.coeffs),
        },
    })
}

/// Left-right to left-left: keep the action, push the right coaction
/// forward along S into a left coaction.
pub fn yd_lr_to_ll(h: &HopfAlgebraData, m: &YdModule) -> Result<YdModule> {
    let YdModule::Lr { action, coaction } = m else {
        return Err(Error::Precondition("expected a left-right instance".into()));
    };
    if h.antipode_inverse.is_none() {
        return Err(Error::NoBijectiveAntipode);
    }
    Ok(YdModule::Ll {
        action: action.clone(),
        coaction: LeftComodule {
            carrier_dim: coaction.carrier_dim,
            coeffs: apply_to_coeffs(&h.antipode, &coaction.coeffs),
        },
    })
}

/// Inverse of [`yd_lr_to_ll`].
pub fn yd_ll_to_lr(h: &HopfAlgebraData, m: &YdModule) -> Result<YdModule> {
    let YdModule::Ll { action, coaction } = m else {
        return Err(Error::Precondition("expected a left-left instance".into()));
    };
    let sinv = h
        .antipode_inverse
        .as_ref()
        .ok_or(Error::NoBijectiveAntipode)?;
    Ok(YdModule::Lr {
        action: action.clone(),
        coaction: RightComodule {
            carrier_dim: coaction.carrier_dim,
            coeffs: apply_to_coeffs(sinv, &coaction.coeffs),
        },
    })
}

/// Left-left over B to left-left over B^cop: keep the action, coaction
/// matrix elements mapped through S⁻¹. The output is checked against
/// `h.co_opposite()`.
pub fn yd_to_cop(h: &HopfAlgebraData, m: &YdModule) -> Result<YdModule> {
    let YdModule::Ll { action, coaction } = m else {
        return Err(Error::Precondition("expected a left-left instance".into()));
    };
    let sinv = h
        .antipode_inverse
        .as_ref()
        .ok_or(Error::NoBijectiveAntipode)?;
    Ok(YdModule::Ll {
        action: action.clone(),
        coaction: LeftComodule {
            carrier_dim: coaction.carrier_dim,
            coeffs: apply_to_coeffs(sinv, &coaction.coeffs),
        },
    })
}

/// Inverse of [`yd_to_cop`].
pub fn yd_from_cop(h: &HopfAlgebraData, m: &YdModule) -> Result<YdModule> {
    let YdModule::Ll { action, coaction } = m else {
        return Err(Error::Precondition("expected a left-left instance".into()));
    };
    if h.antipode_inverse.is_none() {
        return Err(Error::NoBijectiveAntipode);
    }
    Ok(YdModule::Ll {
        action: action.clone(),
        coaction: LeftComodule {
            carrier_dim: coaction.carrier_dim,
            coeffs: apply_to_coeffs(&h.antipode, &coaction.coeffs),
        },
    })
}

/// Formal re-interpretation of a left-left instance as a right-right
/// instance over the bialgebra with both opposite structures. The tensors
/// are reused unchanged; only the reading changes.
pub fn reinterpret_ll_as_rr_opcop(m: &YdModule) -> Result<YdModule> {
    let YdModule::Ll { action, coaction } = m else {
        return Err(Error::Precondition("expected a left-left instance".into()));
    };
    Ok(YdModule::Rr {
        action: RightModule {
            carrier_dim: action.carrier_dim,
            action: action.action.clone(),
        },
        coaction: RightComodule {
            carrier_dim: coaction.carrier_dim,
            coeffs: coaction.coeffs.clone(),
        },
    })
}

/// Transpose-dual of a left-left instance: the dual carrier with
/// transposed action matrices and leg-swapped coaction elements. The
/// compatibility verdict transfers in both directions, so this does not
/// require the input to pass first.
pub fn yd_dual(b: &BialgebraData, m: &YdModule) -> Result<YdModule> {
    let YdModule::Ll { action, coaction } = m else {
        return Err(Error::Precondition("expected a left-left instance".into()));
    };
    let t_action = transpose_module(&b.algebra, action)?;
    let t_coaction = transpose_comodule(&b.coalgebra, coaction)?;
    Ok(YdModule::Rr {
        action: t_action,
        coaction: t_coaction,
    })
}

// ---------------------------------------------------------------------------
// Yang-Baxter operator
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct YangBaxterOperator {
    pub carrier_dim: usize,
    /// d²×d² matrix; input index i·d + k for e_i⊗e_k, output m·d + j.
    pub matrix: Matrix,
}

/// The flip v⊗w ↦ w⊗v on a rank-d space.
pub fn flip_matrix(d: usize) -> Matrix {
    let mut m = Matrix::zero(d * d, d * d);
    for i in 0..d {
        for k in 0..d {
            m.set(k * d + i, i * d + k, Scalar::one());
        }
    }
    m
}

/// Braid relation (𝓡⊗id)(id⊗𝓡)(𝓡⊗id) = (id⊗𝓡)(𝓡⊗id)(id⊗𝓡) on V⊗V⊗V.
pub fn satisfies_braid(r: &Matrix, d: usize) -> bool {
    let id = Matrix::identity(d);
    let r1 = r.kron(&id);
    let r2 = id.kron(r);
    r1.mul(&r2).mul(&r1) == r2.mul(&r1).mul(&r2)
}

/// Quantum Yang-Baxter form R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂.
pub fn satisfies_qybe(r: &Matrix, d: usize) -> bool {
    let id = Matrix::identity(d);
    let p23 = id.kron(&flip_matrix(d));
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let r13 = p23.mul(&r12).mul(&p23);
    r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12)
}

/// Convert between the braid-form operator and the Yang-Baxter-form
/// operator by composing with the flip.
pub fn braid_to_qybe(r: &YangBaxterOperator) -> Matrix {
    flip_matrix(r.carrier_dim).mul(&r.matrix)
}

/// Build 𝓡(e_i⊗e_k) = ρ^j_i(R^m_k) e_m⊗e_j from a right-right instance
/// that passes its compatibility check, then verify the braid relation and
/// invertibility.
pub fn yang_baxter(b: &BialgebraData, m: &YdModule) -> Result<YangBaxterOperator> {
    let YdModule::Rr { action, coaction } = m else {
        return Err(Error::Precondition("expected a right-right instance".into()));
    };
    let rep = check_yd(b, m);
    if !rep.all_pass() {
        return Err(Error::Precondition(format!(
            "right-right compatibility fails: {}",
            rep.first_failure().and_then(|c| c.witness.clone()).unwrap_or_default()
        )));
    }
    let d = action.carrier_dim;
    let mut mat = Matrix::zero(d * d, d * d);
    for i in 0..d {
        for k in 0..d {
            for mo in 0..d {
                for j in 0..d {
                    // ρ^j_i evaluated on the algebra element R^m_k
                    let mut v = Scalar::zero();
                    for (t, c) in coaction.coeffs[mo][k].iter().enumerate() {
                        if !c.is_zero() {
                            v += &(c * action.action[t].get(j, i));
                        }
                    }
                    mat.set(mo * d + j, i * d + k, v);
                }
            }
        }
    }
    if !satisfies_braid(&mat, d) {
        // unreachable from a passing instance; treated as an internal alarm
        return Err(Error::Structural(
            "braid relation fails for an operator built from a passing instance".into(),
        ));
    }
    if mat.inverse().is_err() {
        return Err(Error::Structural("Yang-Baxter operator is singular".into()));
    }
    Ok(YangBaxterOperator {
        carrier_dim: d,
        matrix: mat,
    })
}
