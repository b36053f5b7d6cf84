//! Finite-dimensional algebras, coalgebras, bialgebras and Hopf algebras
//! given by structure constants, together with the axiom verifiers.
//!
//! Elements are coefficient vectors against the declared basis. Structure
//! constants are stored sparsely; dense expansions only appear inside the
//! verification loops.

use crate::error::{Error, Result};
use crate::linalg::{index_iter, Matrix, Tensor};
use crate::report::VerificationReport;
use crate::scalar::Scalar;

/// Coefficient vector of an algebra/coalgebra element.
pub type Elem = Vec<Scalar>;

pub fn zero_elem(n: usize) -> Elem {
    vec![Scalar::zero(); n]
}

pub fn basis_elem(n: usize, i: usize) -> Elem {
    let mut e = zero_elem(n);
    e[i] = Scalar::one();
    e
}

pub fn elem_add(a: &Elem, b: &Elem) -> Elem {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn elem_sub(a: &Elem, b: &Elem) -> Elem {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn elem_scale(a: &Elem, c: &Scalar) -> Elem {
    a.iter().map(|x| x * c).collect()
}

pub fn elem_is_zero(a: &Elem) -> bool {
    a.iter().all(Scalar::is_zero)
}

/// Human-readable form of an element against basis labels.
pub fn format_elem(a: &Elem, names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, c) in a.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_one() {
            parts.push(names[i].clone());
        } else {
            parts.push(format!("({})·{}", c, names[i]));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub fn format_tensor(t: &Tensor, names: &[String]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for idx in t.indices() {
        let c = t.get(&idx);
        if c.is_zero() {
            continue;
        }
        let mono = idx
            .iter()
            .map(|&i| names[i].clone())
            .collect::<Vec<_>>()
            .join("⊗");
        if c.is_one() {
            parts.push(mono);
        } else {
            parts.push(format!("({c})·{mono}"));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// Sparse coefficient list of a product of two basis elements.
pub type SparseElem = Vec<(usize, Scalar)>;

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct FinAlgebra {
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// mult[i][j] = sparse coefficients of e_i · e_j.
    mult: Vec<Vec<SparseElem>>,
    pub unit: Elem,
}

impl FinAlgebra {
    pub fn new(
        dim: usize,
        basis_names: Vec<String>,
        mult: Vec<Vec<SparseElem>>,
        unit: Elem,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Structural("algebra dimension must be positive".into()));
        }
        if basis_names.len() != dim || unit.len() != dim || mult.len() != dim {
            return Err(Error::Dimension("algebra tensors inconsistent with dim".into()));
        }
        for row in &mult {
            if row.len() != dim {
                return Err(Error::Dimension("mult table is not dim×dim".into()));
            }
            for cell in row {
                if cell.iter().any(|(k, _)| *k >= dim) {
                    return Err(Error::Dimension("mult index out of range".into()));
                }
            }
        }
        Ok(FinAlgebra {
            dim,
            basis_names,
            mult,
            unit,
        })
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Elem {
        let mut out = zero_elem(self.dim);
        for (k, c) in &self.mult[i][j] {
            out[*k] = &out[*k] + c;
        }
        out
    }

    pub fn mul_basis_sparse(&self, i: usize, j: usize) -> &SparseElem {
        &self.mult[i][j]
    }

    pub fn mul_elem(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = zero_elem(self.dim);
        for (i, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let cab = ca * cb;
                for (k, c) in &self.mult[i][j] {
                    out[*k] = &out[*k] + &(&cab * c);
                }
            }
        }
        out
    }

    /// Pointwise product of two rank-`r` tensors in B⊗…⊗B.
    pub fn mul_tensors(&self, a: &Tensor, b: &Tensor) -> Tensor {
        assert_eq!(a.shape, b.shape);
        let legs = a.shape.len();
        let mut out = Tensor::zero(a.shape.clone());
        for ia in a.indices() {
            let ca = a.get(&ia);
            if ca.is_zero() {
                continue;
            }
            for ib in b.indices() {
                let cb = b.get(&ib);
                if cb.is_zero() {
                    continue;
                }
                // product over each leg, expanded leg by leg
                let mut partial: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), ca * cb)];
                for leg in 0..legs {
                    let mut next = Vec::new();
                    for (idx, coeff) in &partial {
                        for (k, c) in &self.mult[ia[leg]][ib[leg]] {
                            let mut nidx = idx.clone();
                            nidx.push(*k);
                            next.push((nidx, coeff * c));
                        }
                    }
                    partial = next;
                }
                for (idx, coeff) in partial {
                    out.add_at(&idx, &coeff);
                }
            }
        }
        out
    }

    pub fn opposite(&self) -> FinAlgebra {
        let mut mult = vec![vec![SparseElem::new(); self.dim]; self.dim];
        for i in 0..self.dim {
            for j in 0..self.dim {
                mult[i][j] = self.mult[j][i].clone();
            }
        }
        FinAlgebra {
            dim: self.dim,
            basis_names: self.basis_names.clone(),
            mult,
            unit: self.unit.clone(),
        }
    }

    /// Matrix of left multiplication by basis element e_j.
    pub fn left_mult_matrix(&self, j: usize) -> Matrix {
        let mut m = Matrix::zero(self.dim, self.dim);
        for i in 0..self.dim {
            for (k, c) in &self.mult[j][i] {
                let v = m.get(*k, i) + c;
                m.set(*k, i, v);
            }
        }
        m
    }

    pub fn verify(&self) -> VerificationReport {
        let mut rep = VerificationReport::new();
        // associativity on all basis triples
        let mut assoc_witness = None;
        'outer: for idx in index_iter(vec![self.dim; 3]) {
            let (i, j, k) = (idx[0], idx[1], idx[2]);
            let lhs = self.mul_elem(&self.mul_basis(i, j), &basis_elem(self.dim, k));
            let rhs = self.mul_elem(&basis_elem(self.dim, i), &self.mul_basis(j, k));
            if lhs != rhs {
                assoc_witness = Some(format!(
                    "({}·{})·{} = {}  but  {}·({}·{}) = {}",
                    self.basis_names[i],
                    self.basis_names[j],
                    self.basis_names[k],
                    format_elem(&lhs, &self.basis_names),
                    self.basis_names[i],
                    self.basis_names[j],
                    self.basis_names[k],
                    format_elem(&rhs, &self.basis_names)
                ));
                break 'outer;
            }
        }
        rep.push_witnessed(
            "algebra.associativity",
            "algebra.associativity",
            assoc_witness.is_none(),
            assoc_witness,
        );
        // unit law
        let mut unit_witness = None;
        for i in 0..self.dim {
            let e = basis_elem(self.dim, i);
            let l = self.mul_elem(&self.unit, &e);
            let r = self.mul_elem(&e, &self.unit);
            if l != e || r != e {
                unit_witness = Some(format!(
                    "1·{} = {}, {}·1 = {}",
                    self.basis_names[i],
                    format_elem(&l, &self.basis_names),
                    self.basis_names[i],
                    format_elem(&r, &self.basis_names)
                ));
                break;
            }
        }
        rep.push_witnessed(
            "algebra.unit-law",
            "algebra.unit",
            unit_witness.is_none(),
            unit_witness,
        );
        rep
    }
}

// ---------------------------------------------------------------------------
// Coalgebra
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct FinCoalgebra {
    pub dim: usize,
    pub basis_names: Vec<String>,
    /// comult[i] = sparse triples (j, k, c) of Δ(e_i) = Σ c · e_j⊗e_k.
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    pub counit: Elem,
}

impl FinCoalgebra {
    pub fn new(
        dim: usize,
        basis_names: Vec<String>,
        comult: Vec<Vec<(usize, usize, Scalar)>>,
        counit: Elem,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Structural("coalgebra dimension must be positive".into()));
        }
        if basis_names.len() != dim || counit.len() != dim || comult.len() != dim {
            return Err(Error::Dimension("coalgebra tensors inconsistent with dim".into()));
        }
        for triples in &comult {
            if triples.iter().any(|(j, k, _)| *j >= dim || *k >= dim) {
                return Err(Error::Dimension("comult index out of range".into()));
            }
        }
        Ok(FinCoalgebra {
            dim,
            basis_names,
            comult,
            counit,
        })
    }

    pub fn comult_basis(&self) -> &[Vec<(usize, usize, Scalar)>] {
        &self.comult
    }

    pub fn comult_elem(&self, a: &Elem) -> Tensor {
        let mut t = Tensor::zero(vec![self.dim, self.dim]);
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, k, w) in &self.comult[i] {
                t.add_at(&[*j, *k], &(c * w));
            }
        }
        t
    }

    pub fn counit_elem(&self, a: &Elem) -> Scalar {
        let mut acc = Scalar::zero();
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                acc += &(c * &self.counit[i]);
            }
        }
        acc
    }

    /// Apply Δ to one leg of a tensor, expanding the rank by one.
    pub fn comult_leg(&self, t: &Tensor, leg: usize) -> Tensor {
        let mut shape = t.shape.clone();
        shape.insert(leg + 1, self.dim);
        shape[leg] = self.dim;
        let mut out = Tensor::zero(shape);
        for idx in t.indices() {
            let c = t.get(&idx);
            if c.is_zero() {
                continue;
            }
            for (j, k, w) in &self.comult[idx[leg]] {
                let mut nidx = idx.clone();
                nidx[leg] = *j;
                nidx.insert(leg + 1, *k);
                out.add_at(&nidx, &(c * w));
            }
        }
        out
    }

    pub fn co_opposite(&self) -> FinCoalgebra {
        FinCoalgebra {
            dim: self.dim,
            basis_names: self.basis_names.clone(),
            comult: self
                .comult
                .iter()
                .map(|ts| ts.iter().map(|(j, k, c)| (*k, *j, c.clone())).collect())
                .collect(),
            counit: self.counit.clone(),
        }
    }

    pub fn verify(&self) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let mut coassoc_witness = None;
        for i in 0..self.dim {
            let d = self.comult_elem(&basis_elem(self.dim, i));
            let left = self.comult_leg(&d, 0); // (Δ⊗id)∘Δ
            let right = self.comult_leg(&d, 1); // (id⊗Δ)∘Δ
            if left != right {
                coassoc_witness = Some(format!(
                    "on {}: (Δ⊗id)Δ = {}  vs  (id⊗Δ)Δ = {}",
                    self.basis_names[i],
                    format_tensor(&left, &self.basis_names),
                    format_tensor(&right, &self.basis_names)
                ));
                break;
            }
        }
        rep.push_witnessed(
            "coalgebra.coassociativity",
            "coalgebra.coassociativity",
            coassoc_witness.is_none(),
            coassoc_witness,
        );
        let mut counit_witness = None;
        for i in 0..self.dim {
            let mut left = zero_elem(self.dim);
            let mut right = zero_elem(self.dim);
            for (j, k, c) in &self.comult[i] {
                left[*k] = &left[*k] + &(c * &self.counit[*j]);
                right[*j] = &right[*j] + &(c * &self.counit[*k]);
            }
            let e = basis_elem(self.dim, i);
            if left != e || right != e {
                counit_witness = Some(format!(
                    "on {}: (ε⊗id)Δ = {}, (id⊗ε)Δ = {}",
                    self.basis_names[i],
                    format_elem(&left, &self.basis_names),
                    format_elem(&right, &self.basis_names)
                ));
                break;
            }
        }
        rep.push_witnessed(
            "coalgebra.counit-law",
            "coalgebra.counit",
            counit_witness.is_none(),
            counit_witness,
        );
        rep
    }
}

// ---------------------------------------------------------------------------
// Bialgebra / Hopf algebra
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
pub struct BialgebraData {
    pub algebra: FinAlgebra,
    pub coalgebra: FinCoalgebra,
}

impl BialgebraData {
    pub fn new(algebra: FinAlgebra, coalgebra: FinCoalgebra) -> Result<Self> {
        if algebra.dim != coalgebra.dim {
            return Err(Error::Dimension(
                "algebra and coalgebra dimensions differ".into(),
            ));
        }
        Ok(BialgebraData { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn names(&self) -> &[String] {
        &self.algebra.basis_names
    }

    pub fn opposite(&self) -> BialgebraData {
        BialgebraData {
            algebra: self.algebra.opposite(),
            coalgebra: self.coalgebra.clone(),
        }
    }

    pub fn co_opposite(&self) -> BialgebraData {
        BialgebraData {
            algebra: self.algebra.clone(),
            coalgebra: self.coalgebra.co_opposite(),
        }
    }

    pub fn op_cop(&self) -> BialgebraData {
        BialgebraData {
            algebra: self.algebra.opposite(),
            coalgebra: self.coalgebra.co_opposite(),
        }
    }

    pub fn verify(&self) -> VerificationReport {
        let mut rep = self.algebra.verify();
        rep.merge(self.coalgebra.verify());
        let n = self.dim();
        let names = self.names();
        // Δ is a unital algebra map
        let mut witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.mul_basis(i, j);
                let lhs = self.coalgebra.comult_elem(&prod);
                let di = self.coalgebra.comult_elem(&basis_elem(n, i));
                let dj = self.coalgebra.comult_elem(&basis_elem(n, j));
                let rhs = self.algebra.mul_tensors(&di, &dj);
                if lhs != rhs {
                    witness = Some(format!(
                        "Δ({}·{}) = {}  vs  Δ({})Δ({}) = {}",
                        names[i],
                        names[j],
                        format_tensor(&lhs, names),
                        names[i],
                        names[j],
                        format_tensor(&rhs, names)
                    ));
                    break 'outer;
                }
            }
        }
        if witness.is_none() {
            let du = self.coalgebra.comult_elem(&self.algebra.unit);
            let mut uu = Tensor::zero(vec![n, n]);
            for (i, a) in self.algebra.unit.iter().enumerate() {
                for (j, b) in self.algebra.unit.iter().enumerate() {
                    uu.add_at(&[i, j], &(a * b));
                }
            }
            if du != uu {
                witness = Some(format!(
                    "Δ(1) = {}  vs  1⊗1 = {}",
                    format_tensor(&du, names),
                    format_tensor(&uu, names)
                ));
            }
        }
        rep.push_witnessed(
            "bialgebra.comult-algebra-map",
            "bialgebra.comult-multiplicative",
            witness.is_none(),
            witness,
        );
        // ε is a unital algebra map
        let mut witness = None;
        'outer2: for i in 0..n {
            for j in 0..n {
                let prod = self.algebra.mul_basis(i, j);
                let lhs = self.coalgebra.counit_elem(&prod);
                let rhs = &self.coalgebra.counit[i] * &self.coalgebra.counit[j];
                if lhs != rhs {
                    witness = Some(format!(
                        "ε({}·{}) = {}  vs  ε({})ε({}) = {}",
                        names[i], names[j], lhs, names[i], names[j], rhs
                    ));
                    break 'outer2;
                }
            }
        }
        if witness.is_none() && !self.coalgebra.counit_elem(&self.algebra.unit).is_one() {
            witness = Some(format!(
                "ε(1) = {}",
                self.coalgebra.counit_elem(&self.algebra.unit)
            ));
        }
        rep.push_witnessed(
            "bialgebra.counit-algebra-map",
            "bialgebra.counit-multiplicative",
            witness.is_none(),
            witness,
        );
        rep
    }

    /// Iterated comultiplication into `legs` tensor factors. Coassociativity
    /// is asserted by computing both extreme application orders and
    /// comparing.
    pub fn iterated_comultiply(&self, a: &Elem, legs: usize) -> Result<Tensor> {
        if legs == 0 {
            return Err(Error::Precondition("legs must be ≥ 1".into()));
        }
        let mut left = Tensor::zero(vec![self.dim()]);
        for (i, c) in a.iter().enumerate() {
            left.add_at(&[i], c);
        }
        let mut right = left.clone();
        for step in 0..legs - 1 {
            left = self.coalgebra.comult_leg(&left, 0);
            right = self.coalgebra.comult_leg(&right, step);
        }
        if left != right {
            return Err(Error::Structural(
                "iterated comultiplication is order-dependent: coassociativity fails".into(),
            ));
        }
        Ok(left)
    }
}

#[derive(Clone, Debug)]
pub struct HopfAlgebraData {
    pub bialgebra: BialgebraData,
    pub antipode: Matrix,
    pub antipode_inverse: Option<Matrix>,
}

impl HopfAlgebraData {
    /// Builds Hopf data; antipode bijectivity is decided by exact inversion.
    /// A singular antipode leaves `antipode_inverse` empty.
    pub fn new(bialgebra: BialgebraData, antipode: Matrix) -> Result<Self> {
        let n = bialgebra.dim();
        if antipode.rows != n || antipode.cols != n {
            return Err(Error::Dimension("antipode matrix shape mismatch".into()));
        }
        let antipode_inverse = antipode.inverse().ok();
        Ok(HopfAlgebraData {
            bialgebra,
            antipode,
            antipode_inverse,
        })
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn names(&self) -> &[String] {
        self.bialgebra.names()
    }

    pub fn apply_antipode(&self, a: &Elem) -> Elem {
        self.antipode.apply(a)
    }

    pub fn apply_antipode_inverse(&self, a: &Elem) -> Result<Elem> {
        let inv = self
            .antipode_inverse
            .as_ref()
            .ok_or(Error::NoBijectiveAntipode)?;
        Ok(inv.apply(a))
    }

    pub fn has_bijective_antipode(&self) -> bool {
        self.antipode_inverse.is_some()
    }

    /// The co-opposite Hopf algebra; its antipode is S⁻¹.
    pub fn co_opposite(&self) -> Result<HopfAlgebraData> {
        let inv = self
            .antipode_inverse
            .clone()
            .ok_or(Error::NoBijectiveAntipode)?;
        Ok(HopfAlgebraData {
            bialgebra: self.bialgebra.co_opposite(),
            antipode_inverse: Some(self.antipode.clone()),
            antipode: inv,
        })
    }

    fn antipode_axiom_for(
        bialgebra: &BialgebraData,
        s: &Matrix,
        label: &str,
        anchor: &str,
        rep: &mut VerificationReport,
    ) {
        let n = bialgebra.dim();
        let names = bialgebra.names();
        let mut witness = None;
        for i in 0..n {
            let mut lhs = zero_elem(n); // m∘(S⊗id)∘Δ
            let mut rhs = zero_elem(n); // m∘(id⊗S)∘Δ
            for (j, k, c) in &bialgebra.coalgebra.comult_basis()[i] {
                let sj = s.apply(&basis_elem(n, *j));
                let sk = s.apply(&basis_elem(n, *k));
                lhs = elem_add(
                    &lhs,
                    &elem_scale(&bialgebra.algebra.mul_elem(&sj, &basis_elem(n, *k)), c),
                );
                rhs = elem_add(
                    &rhs,
                    &elem_scale(&bialgebra.algebra.mul_elem(&basis_elem(n, *j), &sk), c),
                );
            }
            let target = elem_scale(&bialgebra.algebra.unit, &bialgebra.coalgebra.counit[i]);
            if lhs != target || rhs != target {
                witness = Some(format!(
                    "on {}: m(S⊗id)Δ = {}, m(id⊗S)Δ = {}, ε·1 = {}",
                    names[i],
                    format_elem(&lhs, names),
                    format_elem(&rhs, names),
                    format_elem(&target, names)
                ));
                break;
            }
        }
        rep.push_witnessed(label, anchor, witness.is_none(), witness);
    }

    pub fn verify(&self) -> VerificationReport {
        let mut rep = self.bialgebra.verify();
        Self::antipode_axiom_for(
            &self.bialgebra,
            &self.antipode,
            "hopf.antipode-axiom",
            "hopf.antipode",
            &mut rep,
        );
        if let Some(inv) = &self.antipode_inverse {
            let id = Matrix::identity(self.dim());
            let ok = self.antipode.mul(inv) == id && inv.mul(&self.antipode) == id;
            rep.push("hopf.antipode-inverse", "hopf.antipode-bijective", ok);
            Self::antipode_axiom_for(
                &self.bialgebra.co_opposite(),
                inv,
                "hopf.antipode-inverse-cop-axiom",
                "hopf.antipode-inverse-cop",
                &mut rep,
            );
        }
        rep
    }

    /// Confirms S is an algebra anti-homomorphism and a coalgebra
    /// anti-homomorphism: S(ab) = S(b)S(a) and Δ∘S = (S⊗S)∘Δ^cop.
    pub fn antipode_as_anti_morphisms(&self) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let n = self.dim();
        let names = self.names();
        let mut witness = None;
        'outer: for i in 0..n {
            for j in 0..n {
                let lhs = self.apply_antipode(&self.bialgebra.algebra.mul_basis(i, j));
                let rhs = self.bialgebra.algebra.mul_elem(
                    &self.apply_antipode(&basis_elem(n, j)),
                    &self.apply_antipode(&basis_elem(n, i)),
                );
                if lhs != rhs {
                    witness = Some(format!(
                        "S({}·{}) = {}  vs  S({})S({}) = {}",
                        names[i],
                        names[j],
                        format_elem(&lhs, names),
                        names[j],
                        names[i],
                        format_elem(&rhs, names)
                    ));
                    break 'outer;
                }
            }
        }
        rep.push_witnessed(
            "antipode.algebra-anti-homomorphism",
            "antipode.anti-multiplicative",
            witness.is_none(),
            witness,
        );
        let mut witness = None;
        for i in 0..n {
            let lhs = self
                .bialgebra
                .coalgebra
                .comult_elem(&self.apply_antipode(&basis_elem(n, i)));
            let mut rhs = Tensor::zero(vec![n, n]);
            for (j, k, c) in &self.bialgebra.coalgebra.comult_basis()[i] {
                // (S⊗S)∘Δ^cop : e_i ↦ S(e_k)⊗S(e_j)
                let sk = self.apply_antipode(&basis_elem(n, *k));
                let sj = self.apply_antipode(&basis_elem(n, *j));
                for (a, ca) in sk.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (b, cb) in sj.iter().enumerate() {
                        if cb.is_zero() {
                            continue;
                        }
                        rhs.add_at(&[a, b], &(&(ca * cb) * c));
                    }
                }
            }
            if lhs != rhs {
                witness = Some(format!(
                    "on {}: Δ(S(·)) = {}  vs  (S⊗S)Δ^cop(·) = {}",
                    names[i],
                    format_tensor(&lhs, names),
                    format_tensor(&rhs, names)
                ));
                break;
            }
        }
        rep.push_witnessed(
            "antipode.coalgebra-anti-homomorphism",
            "antipode.anti-comultiplicative",
            witness.is_none(),
            witness,
        );
        rep
    }
}

// ---------------------------------------------------------------------------
// Linear maps with (anti)morphism tags
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MorphismKind {
    Morphism,
    AntiMorphism,
}

/// A linear map between based spaces; `matrix` columns index the source
/// basis, rows the target basis.
#[derive(Clone, Debug)]
pub struct LinearMap {
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(matrix: Matrix) -> Self {
        LinearMap { matrix }
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows
    }

    pub fn apply(&self, a: &Elem) -> Elem {
        self.matrix.apply(a)
    }

    /// Checks that the map is a unital algebra (anti)homomorphism.
    pub fn verify_algebra_morphism(
        &self,
        src: &FinAlgebra,
        dst: &FinAlgebra,
        kind: MorphismKind,
    ) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let mut witness = None;
        if self.source_dim() != src.dim || self.target_dim() != dst.dim {
            witness = Some("dimension mismatch".into());
        } else {
            if self.apply(&src.unit) != dst.unit {
                witness = Some(format!(
                    "T(1) = {}",
                    format_elem(&self.apply(&src.unit), &dst.basis_names)
                ));
            }
            'outer: for i in 0..src.dim {
                if witness.is_some() {
                    break;
                }
                for j in 0..src.dim {
                    let lhs = self.apply(&src.mul_basis(i, j));
                    let ti = self.apply(&basis_elem(src.dim, i));
                    let tj = self.apply(&basis_elem(src.dim, j));
                    let rhs = match kind {
                        MorphismKind::Morphism => dst.mul_elem(&ti, &tj),
                        MorphismKind::AntiMorphism => dst.mul_elem(&tj, &ti),
                    };
                    if lhs != rhs {
                        witness = Some(format!(
                            "T({}·{}) = {}  vs  {}",
                            src.basis_names[i],
                            src.basis_names[j],
                            format_elem(&lhs, &dst.basis_names),
                            format_elem(&rhs, &dst.basis_names)
                        ));
                        break 'outer;
                    }
                }
            }
        }
        let name = match kind {
            MorphismKind::Morphism => "linear-map.algebra-morphism",
            MorphismKind::AntiMorphism => "linear-map.algebra-anti-morphism",
        };
        rep.push_witnessed(name, "morphism.tag-verification", witness.is_none(), witness);
        rep
    }

    /// Checks that the map is a coalgebra (anti)morphism:
    /// Δ'∘T = (T⊗T)∘Δ (or ∘Δ^cop for the anti tag), ε'∘T = ε.
    pub fn verify_coalgebra_morphism(
        &self,
        src: &FinCoalgebra,
        dst: &FinCoalgebra,
        kind: MorphismKind,
    ) -> VerificationReport {
        let mut rep = VerificationReport::new();
        let mut witness = None;
        if self.source_dim() != src.dim || self.target_dim() != dst.dim {
            witness = Some("dimension mismatch".into());
        } else {
            for i in 0..src.dim {
                let lhs = dst.comult_elem(&self.apply(&basis_elem(src.dim, i)));
                let mut rhs = Tensor::zero(vec![dst.dim, dst.dim]);
                for (j, k, c) in &src.comult_basis()[i] {
                    let (first, second) = match kind {
                        MorphismKind::Morphism => (*j, *k),
                        MorphismKind::AntiMorphism => (*k, *j),
                    };
                    let tf = self.apply(&basis_elem(src.dim, first));
                    let ts = self.apply(&basis_elem(src.dim, second));
                    for (a, ca) in tf.iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        for (b, cb) in ts.iter().enumerate() {
                            if cb.is_zero() {
                                continue;
                            }
                            rhs.add_at(&[a, b], &(&(ca * cb) * c));
                        }
                    }
                }
                if lhs != rhs {
                    witness = Some(format!(
                        "on {}: Δ'T = {}  vs  (T⊗T)Δ{} = {}",
                        src.basis_names[i],
                        format_tensor(&lhs, &dst.basis_names),
                        if kind == MorphismKind::AntiMorphism { "^cop" } else { "" },
                        format_tensor(&rhs, &dst.basis_names)
                    ));
                    break;
                }
                if dst.counit_elem(&self.apply(&basis_elem(src.dim, i))) != src.counit[i] {
                    witness = Some(format!("ε'∘T ≠ ε on {}", src.basis_names[i]));
                    break;
                }
            }
        }
        let name = match kind {
            MorphismKind::Morphism => "linear-map.coalgebra-morphism",
            MorphismKind::AntiMorphism => "linear-map.coalgebra-anti-morphism",
        };
        rep.push_witnessed(name, "morphism.tag-verification", witness.is_none(), witness);
        rep
    }
}
