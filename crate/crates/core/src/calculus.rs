//! First-order differential calculi over a bialgebra: the twisted Leibniz
//! rule in componentwise and bimodule form, right covariance, the
//! associated vector-field functionals, and the quantum Lie bracket
//! deformed by the braiding.

use crate::algebra::{
    basis_elem, elem_add, elem_scale, format_elem, zero_elem, BialgebraData, Elem,
    HopfAlgebraData,
};
use crate::bimodule::{rule_from_left_module, FreeBimodule};
use crate::error::{Error, Result};
use crate::group::{function_algebra, FiniteGroup};
use crate::linalg::{Matrix, Tensor};
use crate::repcorep::{LeftComodule, LeftModule, RightComodule, RightModule};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::yd::{check_yd, yang_baxter, YdModule};

/// A first-order differential calculus Γ = V⊗B with df = Σ_i e_i⊗∂^i(f).
#[derive(Clone, Debug)]
pub struct Fodc {
    /// The left module twisting the Leibniz rule.
    pub module: LeftModule,
    /// partials[i] is the matrix of ∂^i: B → B.
    pub partials: Vec<Matrix>,
    /// Matrix elements of a left coaction making the module a left-left
    /// crossed module; needed for the quantum Lie bracket.
    pub left_coaction: Option<LeftComodule>,
}

impl Fodc {
    pub fn carrier_dim(&self) -> usize {
        self.module.carrier_dim
    }

    pub fn partial(&self, i: usize, f: &Elem) -> Elem {
        self.partials[i].apply(f)
    }

    /// df as an element of V⊗B, shape [d, n].
    pub fn differential(&self, n: usize, f: &Elem) -> Tensor {
        let d = self.carrier_dim();
        let mut out = Tensor::zero(vec![d, n]);
        for i in 0..d {
            for (t, c) in self.partial(i, f).iter().enumerate() {
                if !c.is_zero() {
                    out.add_at(&[i, t], c);
                }
            }
        }
        out
    }
}

/// Twisted Leibniz rule, checked two ways: componentwise
/// ∂^i(fg) = ∂^i(f)g + λ^i_k(f₍₁₎)f₍₂₎∂^k(g), and globally as
/// d(fg) = d(f)·g + f·d(g) inside the free bimodule whose left action moves
/// coefficients by the rule induced from the module. The two verdicts are
/// compared as their own check.
pub fn check_fodc(b: &BialgebraData, fodc: &Fodc) -> VerificationReport {
    let mut rep = fodc.module.verify(&b.algebra);
    let n = b.dim();
    let d = fodc.carrier_dim();
    let names = b.names();
    if fodc.partials.len() != d
        || fodc.partials.iter().any(|p| p.rows != n || p.cols != n)
    {
        rep.push_witnessed(
            "calculus.partials-shape",
            "calculus.shape",
            false,
            Some("partial derivative matrix shape mismatch".into()),
        );
        return rep;
    }
    let d_unit = fodc.differential(n, &b.algebra.unit);
    rep.push_witnessed(
        "calculus.unit-is-closed",
        "calculus.d-unit",
        d_unit.is_zero(),
        Some("d(1) ≠ 0".into()),
    );
    // componentwise
    let mut comp_witness = None;
    'comp: for s in 0..n {
        for t in 0..n {
            let prod = b.algebra.mul_basis(s, t);
            for i in 0..d {
                let lhs = fodc.partial(i, &prod);
                let mut rhs = b
                    .algebra
                    .mul_elem(&fodc.partial(i, &basis_elem(n, s)), &basis_elem(n, t));
                for (p, q, c) in &b.coalgebra.comult_basis()[s] {
                    for k in 0..d {
                        let w = c * fodc.module.action[*p].get(i, k);
                        if w.is_zero() {
                            continue;
                        }
                        let tail = b
                            .algebra
                            .mul_elem(&basis_elem(n, *q), &fodc.partial(k, &basis_elem(n, t)));
                        rhs = elem_add(&rhs, &elem_scale(&tail, &w));
                    }
                }
                if lhs != rhs {
                    comp_witness = Some(format!(
                        "∂^{i}({}·{}) = {}  vs  {}",
                        names[s],
                        names[t],
                        format_elem(&lhs, names),
                        format_elem(&rhs, names)
                    ));
                    break 'comp;
                }
            }
        }
    }
    rep.push_witnessed(
        "calculus.twisted-leibniz-componentwise",
        "calculus.leibniz",
        comp_witness.is_none(),
        comp_witness.clone(),
    );
    // global form in the free bimodule
    let global_witness = match rule_from_left_module(b, &fodc.module) {
        Err(e) => Some(format!("no induced commutation rule: {e}")),
        Ok(rule) => {
            let gamma = FreeBimodule { rule };
            let mut w = None;
            'glob: for s in 0..n {
                for t in 0..n {
                    let prod = b.algebra.mul_basis(s, t);
                    let lhs = fodc.differential(n, &prod);
                    let df = fodc.differential(n, &basis_elem(n, s));
                    let dg = fodc.differential(n, &basis_elem(n, t));
                    let rhs = gamma
                        .act_right(b, &df, &basis_elem(n, t))
                        .add(&gamma.act_left(b, &basis_elem(n, s), &dg));
                    if lhs != rhs {
                        w = Some(format!("d({}·{}) differs from the bimodule Leibniz form", names[s], names[t]));
                        break 'glob;
                    }
                }
            }
            w
        }
    };
    rep.push_witnessed(
        "calculus.twisted-leibniz-bimodule",
        "calculus.leibniz-global",
        global_witness.is_none(),
        global_witness.clone(),
    );
    rep.push(
        "calculus.leibniz-forms-agree",
        "calculus.leibniz-consistency",
        comp_witness.is_none() == global_witness.is_none(),
    );
    if let Some(coaction) = &fodc.left_coaction {
        let yd = YdModule::Ll {
            action: fodc.module.clone(),
            coaction: coaction.clone(),
        };
        let inner = check_yd(b, &yd);
        let w = inner
            .first_failure()
            .map(|c| c.witness.clone().unwrap_or_else(|| c.name.clone()));
        rep.push_witnessed(
            "calculus.braiding-data",
            "calculus.crossed-module",
            inner.all_pass(),
            w,
        );
    }
    rep
}

/// Right covariance, checked two equivalent ways: Δ∘∂^i = (∂^i⊗id)∘Δ, and
/// recovery of each ∂^i from its counit character by
/// ∂^i(f) = χ^i(f₍₁₎)f₍₂₎. The verdicts are compared as a third check.
pub fn check_right_covariance(b: &BialgebraData, fodc: &Fodc) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let n = b.dim();
    let d = fodc.carrier_dim();
    let names = b.names();
    let mut direct = None;
    'direct: for i in 0..d {
        for s in 0..n {
            let lhs = b.coalgebra.comult_elem(&fodc.partial(i, &basis_elem(n, s)));
            let mut rhs = Tensor::zero(vec![n, n]);
            for (p, q, c) in &b.coalgebra.comult_basis()[s] {
                for (u, w) in fodc.partial(i, &basis_elem(n, *p)).iter().enumerate() {
                    if !w.is_zero() {
                        rhs.add_at(&[u, *q], &(c * w));
                    }
                }
            }
            if lhs != rhs {
                direct = Some(format!(
                    "Δ(∂^{i}({})) ≠ (∂^{i}⊗id)Δ({})",
                    names[s], names[s]
                ));
                break 'direct;
            }
        }
    }
    rep.push_witnessed(
        "calculus.right-covariance-intertwiner",
        "calculus.covariance",
        direct.is_none(),
        direct.clone(),
    );
    let chi = woronowicz_functionals(b, fodc);
    let mut recovered = None;
    'rec: for i in 0..d {
        for s in 0..n {
            let lhs = fodc.partial(i, &basis_elem(n, s));
            let mut rhs = zero_elem(n);
            for (p, q, c) in &b.coalgebra.comult_basis()[s] {
                let w = c * &chi[i][*p];
                if !w.is_zero() {
                    rhs[*q] = &rhs[*q] + &w;
                }
            }
            if lhs != rhs {
                recovered = Some(format!(
                    "∂^{i}({}) = {}  vs  χ^{i}(·₍₁₎)·₍₂₎ = {}",
                    names[s],
                    format_elem(&lhs, names),
                    format_elem(&rhs, names)
                ));
                break 'rec;
            }
        }
    }
    rep.push_witnessed(
        "calculus.right-covariance-character-form",
        "calculus.covariance-characters",
        recovered.is_none(),
        recovered.clone(),
    );
    rep.push(
        "calculus.covariance-forms-agree",
        "calculus.covariance-consistency",
        direct.is_none() == recovered.is_none(),
    );
    rep
}

/// A vector field X ∈ B⊗V* applied through the pairing: X^∂(f) = ≪X, df≫.
/// `x` has shape [n, d]; the result is an algebra element.
pub fn cartan_action(b: &BialgebraData, fodc: &Fodc, x: &Tensor, f: &Elem) -> Elem {
    let n = b.dim();
    let d = fodc.carrier_dim();
    assert_eq!(x.shape, vec![n, d]);
    let mut out = zero_elem(n);
    for t in 0..n {
        for i in 0..d {
            let c = x.get(&[t, i]);
            if c.is_zero() {
                continue;
            }
            let tail = b.algebra.mul_elem(&basis_elem(n, t), &fodc.partial(i, f));
            out = elem_add(&out, &elem_scale(&tail, c));
        }
    }
    out
}

/// The vector-field functionals χ^i = ε∘∂^i, as value rows over the basis.
pub fn woronowicz_functionals(b: &BialgebraData, fodc: &Fodc) -> Vec<Vec<Scalar>> {
    let n = b.dim();
    (0..fodc.carrier_dim())
        .map(|i| {
            (0..n)
                .map(|t| b.coalgebra.counit_elem(&fodc.partial(i, &basis_elem(n, t))))
                .collect()
        })
        .collect()
}

/// Convolution of functionals on the coalgebra: (φ⋆ψ)(e_t) = φ(t₍₁₎)ψ(t₍₂₎).
pub fn convolution(b: &BialgebraData, phi: &[Scalar], psi: &[Scalar]) -> Vec<Scalar> {
    (0..b.dim())
        .map(|t| {
            let mut acc = Scalar::zero();
            for (j, k, c) in &b.coalgebra.comult_basis()[t] {
                acc += &(&(c * &phi[*j]) * &psi[*k]);
            }
            acc
        })
        .collect()
}

/// The quantum Lie bracket table of a calculus, together with its closure
/// data against the span of the χ functionals.
#[derive(Clone, Debug)]
pub struct BracketTable {
    pub carrier_dim: usize,
    pub chi: Vec<Vec<Scalar>>,
    /// brackets[i][j] = [χ_i, χ_j] as a functional on the basis.
    pub brackets: Vec<Vec<Vec<Scalar>>>,
    /// closure[i][j] = coefficients expressing the bracket in the χ basis,
    /// or None when the bracket leaves the span.
    pub closure: Vec<Vec<Option<Vec<Scalar>>>>,
}

impl BracketTable {
    pub fn is_closed(&self) -> bool {
        self.closure
            .iter()
            .all(|row| row.iter().all(Option::is_some))
    }

    /// Stable, fully deterministic text rendering.
    pub fn render(&self) -> String {
        let d = self.carrier_dim;
        let mut out = String::new();
        for i in 0..d {
            for j in 0..d {
                out.push_str(&format!("[x_{i}, x_{j}] ="));
                match &self.closure[i][j] {
                    None => out.push_str(" <outside the span of the vector fields>"),
                    Some(coeffs) => {
                        let mut any = false;
                        for (k, c) in coeffs.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            out.push_str(&format!(" + ({c})·x_{k}"));
                            any = true;
                        }
                        if !any {
                            out.push_str(" 0");
                        }
                    }
                }
                out.push('\n');
            }
        }
        out
    }
}

/// Build the braiding-deformed bracket [χ_i, χ_j] = χ_i⋆χ_j − 𝓡^{mn}_{ij}
/// χ_m⋆χ_n. The braiding acts on the dual carrier: the transposed action
/// and the antipode-twisted coaction form a right-right crossed module
/// over the co-opposite bialgebra, whose Yang-Baxter operator supplies the
/// coefficients.
pub fn quantum_lie_bracket(h: &HopfAlgebraData, fodc: &Fodc) -> Result<BracketTable> {
    let coaction = fodc.left_coaction.as_ref().ok_or_else(|| {
        Error::Precondition("quantum Lie bracket needs the left coaction data".into())
    })?;
    let sinv = h
        .antipode_inverse
        .as_ref()
        .ok_or(Error::NoBijectiveAntipode)?;
    let b = &h.bialgebra;
    let d = fodc.carrier_dim();
    let cop = b.co_opposite();
    let dual_action = RightModule {
        carrier_dim: d,
        action: fodc.module.action.iter().map(Matrix::transpose).collect(),
    };
    let dual_coaction = RightComodule {
        carrier_dim: d,
        coeffs: (0..d)
            .map(|m| (0..d).map(|k| sinv.apply(&coaction.coeffs[k][m])).collect())
            .collect(),
    };
    let braiding = yang_baxter(
        &cop,
        &YdModule::Rr {
            action: dual_action,
            coaction: dual_coaction,
        },
    )?;
    let chi = woronowicz_functionals(b, fodc);
    let mut brackets = Vec::with_capacity(d);
    for i in 0..d {
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            let mut br = convolution(b, &chi[i], &chi[j]);
            for m in 0..d {
                for nn in 0..d {
                    let c = braiding.matrix.get(m * d + nn, i * d + j);
                    if c.is_zero() {
                        continue;
                    }
                    let term = convolution(b, &chi[m], &chi[nn]);
                    br = br
                        .iter()
                        .zip(&term)
                        .map(|(x, y)| x - &(c * y))
                        .collect();
                }
            }
            row.push(br);
        }
        brackets.push(row);
    }
    // closure against the χ span
    let n = b.dim();
    let chi_matrix = Matrix::from_fn(n, d, |t, k| chi[k][t].clone());
    let closure = brackets
        .iter()
        .map(|row| row.iter().map(|br| chi_matrix.solve(br)).collect())
        .collect();
    Ok(BracketTable {
        carrier_dim: d,
        chi,
        brackets,
        closure,
    })
}

// ---------------------------------------------------------------------------
// Finite group calculi
// ---------------------------------------------------------------------------

/// The calculus on the function algebra of a finite group determined by a
/// subset T not containing the identity: ∂^g = L_g − id with
/// (L_g f)(x) = f(gx), twisted by the rank-one projections
/// λ^g_h(δ_b) = δ^g_h·[b = g]. When T is closed under conjugation the
/// adjoint coaction L^m_k = Σ_{x⁻¹ k x = m} δ_x is attached as well.
pub fn finite_group_calculus(g: &FiniteGroup, subset: &[usize]) -> Result<(HopfAlgebraData, Fodc)> {
    if subset.is_empty() {
        return Err(Error::Precondition("the subset must be nonempty".into()));
    }
    if subset.iter().any(|&t| t >= g.order) {
        return Err(Error::Precondition("subset element out of range".into()));
    }
    if subset.contains(&g.identity) {
        return Err(Error::Precondition(
            "the subset must not contain the identity".into(),
        ));
    }
    let mut seen = vec![false; g.order];
    for &t in subset {
        if seen[t] {
            return Err(Error::Precondition("subset has a repeated element".into()));
        }
        seen[t] = true;
    }
    let h = function_algebra(g);
    let n = g.order;
    let d = subset.len();
    // λ(δ_b) is diagonal with the (k,k) entry [b = subset[k]]
    let action: Vec<Matrix> = (0..n)
        .map(|b| {
            Matrix::from_fn(d, d, |i, k| {
                if i == k && subset[k] == b {
                    Scalar::one()
                } else {
                    Scalar::zero()
                }
            })
        })
        .collect();
    // ∂^g = P_g − id with P_g δ_a = δ_{g⁻¹·a}
    let partials: Vec<Matrix> = subset
        .iter()
        .map(|&t| {
            let tinv = g.inverse(t);
            let mut p = Matrix::zero(n, n);
            for a in 0..n {
                p.set(g.mul[tinv][a], a, Scalar::one());
            }
            p.sub(&Matrix::identity(n))
        })
        .collect();
    let conjugation_closed = subset.iter().all(|&t| {
        (0..g.order).all(|x| seen[g.conjugate(x, t)])
    });
    let left_coaction = if conjugation_closed {
        let mut coeffs = vec![vec![zero_elem(n); d]; d];
        for (k, &tk) in subset.iter().enumerate() {
            for x in 0..g.order {
                let m = subset
                    .iter()
                    .position(|&tm| tm == g.conjugate(g.inverse(x), tk))
                    .expect("conjugation closed");
                coeffs[m][k][x] = &coeffs[m][k][x] + &Scalar::one();
            }
        }
        Some(LeftComodule {
            carrier_dim: d,
            coeffs,
        })
    } else {
        None
    };
    Ok((
        h,
        Fodc {
            module: LeftModule {
                carrier_dim: d,
                action,
            },
            partials,
            left_coaction,
        },
    ))
}

/// A deterministic rendering of the χ functionals for reporting.
pub fn render_functionals(b: &BialgebraData, chi: &[Vec<Scalar>]) -> String {
    let names = b.names();
    let mut out = String::new();
    for (i, row) in chi.iter().enumerate() {
        out.push_str(&format!("x_{i}:"));
        let mut any = false;
        for (t, c) in row.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.push_str(&format!(" + ({c})·<{}>", names[t]));
            any = true;
        }
        if !any {
            out.push_str(" 0");
        }
        out.push('\n');
    }
    out
}
