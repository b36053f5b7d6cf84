//! Modules and comodules in matrix form, their transpose duals, and
//! pull-back / push-forward along (anti)morphisms.

use crate::algebra::{
    basis_elem, elem_add, elem_scale, format_elem, zero_elem, Elem, FinAlgebra, FinCoalgebra,
    LinearMap, MorphismKind,
};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Tensor};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// Left module over an algebra: a matrix λ(e_j) per algebra basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule {
    pub carrier_dim: usize,
    /// action[j] is the carrier_dim × carrier_dim matrix of λ(e_j).
    pub action: Vec<Matrix>,
}

/// Right module: ρ(e_j) matrices with ρ(ab) = ρ(b)ρ(a).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightModule {
    pub carrier_dim: usize,
    pub action: Vec<Matrix>,
}

/// Left comodule over a coalgebra: matrix-like elements L^i_k with
/// Δ_V(e_k) = Σ_m L^m_k ⊗ e_m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftComodule {
    pub carrier_dim: usize,
    /// coeffs[i][k] = coefficient vector of L^i_k in the coalgebra.
    pub coeffs: Vec<Vec<Elem>>,
}

/// Right comodule: _VΔ(e_k) = Σ_m e_m ⊗ R^m_k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    pub carrier_dim: usize,
    pub coeffs: Vec<Vec<Elem>>,
}

fn action_matrix(action: &[Matrix], a: &Elem) -> Matrix {
    let d = action[0].rows;
    let mut m = Matrix::zero(d, d);
    for (j, c) in a.iter().enumerate() {
        if !c.is_zero() {
            m = m.add(&action[j].scale(c));
        }
    }
    m
}

impl LeftModule {
    pub fn trivial(alg: &FinAlgebra, counit: &Elem, carrier_dim: usize) -> LeftModule {
        // λ(a) = ε(a)·id for a counit-like functional
        LeftModule {
            carrier_dim,
            action: (0..alg.dim)
                .map(|j| Matrix::identity(carrier_dim).scale(&counit[j]))
                .collect(),
        }
    }

    /// λ evaluated on an arbitrary element.
    pub fn matrix_of(&self, a: &Elem) -> Matrix {
        action_matrix(&self.action, a)
    }

    /// λ^i_k(a) as a scalar.
    pub fn entry(&self, i: usize, k: usize, a: &Elem) -> Scalar {
        let mut acc = Scalar::zero();
        for (j, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc += &(c * self.action[j].get(i, k));
            }
        }
        acc
    }

    /// Representation law: λ(1) = id and λ(ab) = λ(a)λ(b).
    pub fn verify(&self, alg: &FinAlgebra) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let mut witness = None;
        if self.action.len() != alg.dim
            || self.action.iter().any(|m| m.rows != self.carrier_dim || m.cols != self.carrier_dim)
        {
            witness = Some("action tensor shape mismatch".into());
        } else if self.matrix_of(&alg.unit) != Matrix::identity(self.carrier_dim) {
            witness = Some("λ(1) ≠ id".into());
        } else {
            'outer: for i in 0..alg.dim {
                for j in 0..alg.dim {
                    let lhs = self.matrix_of(&alg.mul_basis(i, j));
                    let rhs = self.action[i].mul(&self.action[j]);
                    if lhs != rhs {
                        witness = Some(format!(
                            "λ({}·{}) ≠ λ({})λ({})",
                            alg.basis_names[i], alg.basis_names[j],
                            alg.basis_names[i], alg.basis_names[j]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        rep.push_witnessed(
            "module.left-representation-law",
            "module.representation",
            witness.is_none(),
            witness,
        );
        rep
    }
}

impl RightModule {
    pub fn matrix_of(&self, a: &Elem) -> Matrix {
        action_matrix(&self.action, a)
    }

    pub fn entry(&self, i: usize, k: usize, a: &Elem) -> Scalar {
        let mut acc = Scalar::zero();
        for (j, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc += &(c * self.action[j].get(i, k));
            }
        }
        acc
    }

    /// Anti-representation law: ρ(1) = id and ρ(ab) = ρ(b)ρ(a).
    pub fn verify(&self, alg: &FinAlgebra) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let mut witness = None;
        if self.action.len() != alg.dim
            || self.action.iter().any(|m| m.rows != self.carrier_dim || m.cols != self.carrier_dim)
        {
            witness = Some("action tensor shape mismatch".into());
        } else if self.matrix_of(&alg.unit) != Matrix::identity(self.carrier_dim) {
            witness = Some("ρ(1) ≠ id".into());
        } else {
            'outer: for i in 0..alg.dim {
                for j in 0..alg.dim {
                    let lhs = self.matrix_of(&alg.mul_basis(i, j));
                    let rhs = self.action[j].mul(&self.action[i]);
                    if lhs != rhs {
                        witness = Some(format!(
                            "ρ({}·{}) ≠ ρ({})ρ({})",
                            alg.basis_names[i], alg.basis_names[j],
                            alg.basis_names[j], alg.basis_names[i]
                        ));
                        break 'outer;
                    }
                }
            }
        }
        rep.push_witnessed(
            "module.right-anti-representation-law",
            "module.right-representation",
            witness.is_none(),
            witness,
        );
        rep
    }
}

fn comodule_axioms(
    coeffs: &[Vec<Elem>],
    co: &FinCoalgebra,
    right_handed: bool,
) -> Option<String> {
    let d = coeffs.len();
    let names = &co.basis_names;
    for i in 0..d {
        for k in 0..d {
            let lhs = co.comult_elem(&coeffs[i][k]);
            let mut rhs = Tensor::zero(vec![co.dim, co.dim]);
            for m in 0..d {
                // left: Δ(L^i_k) = Σ_m L^m_k ⊗ L^i_m
                // right: Δ(R^i_k) = Σ_m R^i_m ⊗ R^m_k
                let (first, second) = if right_handed {
                    (&coeffs[i][m], &coeffs[m][k])
                } else {
                    (&coeffs[m][k], &coeffs[i][m])
                };
                for (a, ca) in first.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (b, cb) in second.iter().enumerate() {
                        if !cb.is_zero() {
                            rhs.add_at(&[a, b], &(ca * cb));
                        }
                    }
                }
            }
            if lhs != rhs {
                return Some(format!(
                    "matrix-like comultiplication fails at entry ({i},{k}): Δ gives {}",
                    crate::algebra::format_tensor(&lhs, names)
                ));
            }
            let eps = co.counit_elem(&coeffs[i][k]);
            let expected = if i == k { Scalar::one() } else { Scalar::zero() };
            if eps != expected {
                return Some(format!("ε at entry ({i},{k}) = {eps}, expected {expected}"));
            }
        }
    }
    None
}

impl LeftComodule {
    pub fn trivial(co: &FinCoalgebra, unit: &Elem, carrier_dim: usize) -> LeftComodule {
        let _ = co;
        LeftComodule {
            carrier_dim,
            coeffs: (0..carrier_dim)
                .map(|i| {
                    (0..carrier_dim)
                        .map(|k| {
                            if i == k {
                                unit.clone()
                            } else {
                                zero_elem(unit.len())
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn verify(&self, co: &FinCoalgebra) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let witness = shape_check(&self.coeffs, self.carrier_dim, co.dim)
            .or_else(|| comodule_axioms(&self.coeffs, co, false));
        rep.push_witnessed(
            "comodule.left-matrix-elements",
            "comodule.matrix-elements",
            witness.is_none(),
            witness,
        );
        rep
    }
}

impl RightComodule {
    pub fn trivial(co: &FinCoalgebra, unit: &Elem, carrier_dim: usize) -> RightComodule {
        let l = LeftComodule::trivial(co, unit, carrier_dim);
        RightComodule {
            carrier_dim,
            coeffs: l.coeffs,
        }
    }

    pub fn verify(&self, co: &FinCoalgebra) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let witness = shape_check(&self.coeffs, self.carrier_dim, co.dim)
            .or_else(|| comodule_axioms(&self.coeffs, co, true));
        rep.push_witnessed(
            "comodule.right-matrix-elements",
            "comodule.right-matrix-elements",
            witness.is_none(),
            witness,
        );
        rep
    }
}

fn shape_check(coeffs: &[Vec<Elem>], d: usize, n: usize) -> Option<String> {
    if coeffs.len() != d
        || coeffs
            .iter()
            .any(|row| row.len() != d || row.iter().any(|e| e.len() != n))
    {
        Some("coaction coefficient array shape mismatch".into())
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// Transposes
// ---------------------------------------------------------------------------

/// Dual-space action by transposed matrices; an anti-representation.
pub fn transpose_module(alg: &FinAlgebra, m: &LeftModule) -> Result<RightModule> {
    let rep = m.verify(alg);
    if !rep.all_pass() {
        return Err(Error::Precondition(format!(
            "input is not a left module: {}",
            rep.first_failure().and_then(|c| c.witness.clone()).unwrap_or_default()
        )));
    }
    Ok(RightModule {
        carrier_dim: m.carrier_dim,
        action: m.action.iter().map(|a| a.transpose()).collect(),
    })
}

/// Inverse direction of [`transpose_module`] via the canonical
/// identification of the double dual.
pub fn transpose_right_module(alg: &FinAlgebra, m: &RightModule) -> Result<LeftModule> {
    let rep = m.verify(alg);
    if !rep.all_pass() {
        return Err(Error::Precondition("input is not a right module".into()));
    }
    Ok(LeftModule {
        carrier_dim: m.carrier_dim,
        action: m.action.iter().map(|a| a.transpose()).collect(),
    })
}

/// Same matrix elements with the tensor legs swapped; a right comodule on
/// the dual space (equivalently a left comodule over the co-opposite).
pub fn transpose_comodule(co: &FinCoalgebra, c: &LeftComodule) -> Result<RightComodule> {
    let rep = c.verify(co);
    if !rep.all_pass() {
        return Err(Error::Precondition("input is not a left comodule".into()));
    }
    let d = c.carrier_dim;
    Ok(RightComodule {
        carrier_dim: d,
        coeffs: (0..d)
            .map(|m| (0..d).map(|k| c.coeffs[k][m].clone()).collect())
            .collect(),
    })
}

pub fn transpose_right_comodule(co: &FinCoalgebra, c: &RightComodule) -> Result<LeftComodule> {
    let rep = c.verify(co);
    if !rep.all_pass() {
        return Err(Error::Precondition("input is not a right comodule".into()));
    }
    let d = c.carrier_dim;
    Ok(LeftComodule {
        carrier_dim: d,
        coeffs: (0..d)
            .map(|m| (0..d).map(|k| c.coeffs[k][m].clone()).collect())
            .collect(),
    })
}

// ---------------------------------------------------------------------------
// Pull-back and push-forward
// ---------------------------------------------------------------------------

pub enum PulledBack {
    Left(LeftModule),
    Right(RightModule),
}

pub enum PushedForward {
    Left(LeftComodule),
    Right(RightComodule),
}

/// Transport a left A'-module along T: A → A'. A morphism tag yields a left
/// A-module, an anti-morphism tag a right A-module.
pub fn pull_back(
    t: &LinearMap,
    kind: MorphismKind,
    src: &FinAlgebra,
    dst: &FinAlgebra,
    m: &LeftModule,
) -> Result<PulledBack> {
    let tagged = t.verify_algebra_morphism(src, dst, kind);
    if !tagged.all_pass() {
        return Err(Error::Precondition(format!(
            "map fails its tagged property: {}",
            tagged.first_failure().and_then(|c| c.witness.clone()).unwrap_or_default()
        )));
    }
    let action: Vec<Matrix> = (0..src.dim)
        .map(|j| m.matrix_of(&t.apply(&basis_elem(src.dim, j))))
        .collect();
    Ok(match kind {
        MorphismKind::Morphism => PulledBack::Left(LeftModule {
            carrier_dim: m.carrier_dim,
            action,
        }),
        MorphismKind::AntiMorphism => PulledBack::Right(RightModule {
            carrier_dim: m.carrier_dim,
            action,
        }),
    })
}

/// Transport a left C-comodule along T: C → C'. A morphism tag yields a left
/// C'-comodule, an anti-morphism tag a right C'-coaction.
pub fn push_forward(
    t: &LinearMap,
    kind: MorphismKind,
    src: &FinCoalgebra,
    dst: &FinCoalgebra,
    c: &LeftComodule,
) -> Result<PushedForward> {
    let tagged = t.verify_coalgebra_morphism(src, dst, kind);
    if !tagged.all_pass() {
        return Err(Error::Precondition(format!(
            "map fails its tagged property: {}",
            tagged.first_failure().and_then(|c| c.witness.clone()).unwrap_or_default()
        )));
    }
    let d = c.carrier_dim;
    let coeffs: Vec<Vec<Elem>> = (0..d)
        .map(|i| (0..d).map(|k| t.apply(&c.coeffs[i][k])).collect())
        .collect();
    Ok(match kind {
        MorphismKind::Morphism => PushedForward::Left(LeftComodule {
            carrier_dim: d,
            coeffs,
        }),
        MorphismKind::AntiMorphism => PushedForward::Right(RightComodule {
            carrier_dim: d,
            coeffs,
        }),
    })
}

/// Left regular representation: λ(a) = left multiplication by a.
pub fn regular_representation(alg: &FinAlgebra) -> LeftModule {
    LeftModule {
        carrier_dim: alg.dim,
        action: (0..alg.dim).map(|j| alg.left_mult_matrix(j)).collect(),
    }
}

/// Left comodule on the algebra itself with coaction Δ (matrix elements
/// collected from the comultiplication).
pub fn regular_corepresentation(co: &FinCoalgebra) -> LeftComodule {
    let n = co.dim;
    let mut coeffs = vec![vec![zero_elem(n); n]; n];
    for k in 0..n {
        for (p, q, c) in &co.comult_basis()[k] {
            coeffs[*q][k] = elem_add(&coeffs[*q][k], &elem_scale(&basis_elem(n, *p), c));
        }
    }
    LeftComodule {
        carrier_dim: n,
        coeffs,
    }
}

/// Pretty-print the matrix of coaction coefficients for reports.
pub fn format_coaction(coeffs: &[Vec<Elem>], names: &[String]) -> String {
    let mut rows = Vec::new();
    for (i, row) in coeffs.iter().enumerate() {
        for (k, e) in row.iter().enumerate() {
            if !crate::algebra::elem_is_zero(e) {
                rows.push(format!("[{i}][{k}] = {}", format_elem(e, names)));
            }
        }
    }
    rows.join("; ")
}
