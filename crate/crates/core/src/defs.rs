//! JSON definition files and input resolution for the CLI.
//!
//! An input argument is either `catalog:NAME` or a path to a JSON file.
//! Scalars in files are strings: "3", "-1/2", or rational functions in q
//! such as "(q^2 - 1)/(q - 1)". Every loaded structure is verified to its
//! declared level before use; a parse problem and a failed verification are
//! reported separately so the CLI can map them to different exit codes.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::algebra::{BialgebraData, Elem, FinAlgebra, FinCoalgebra, HopfAlgebraData};
use crate::calculus::Fodc;
use crate::catalog;
use crate::error::Error;
use crate::linalg::Matrix;
use crate::repcorep::{LeftComodule, LeftModule, RightComodule, RightModule};
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::yd::{Corner, YdModule};

/// Why loading failed: a malformed input maps to exit code 2, a structure
/// that parses but fails its axioms maps to exit code 1 with the report.
#[derive(Debug)]
pub enum LoadFailure {
    Input(Error),
    Verification(VerificationReport),
}

impl From<Error> for LoadFailure {
    fn from(e: Error) -> Self {
        LoadFailure::Input(e)
    }
}

pub type LoadResult<T> = std::result::Result<T, LoadFailure>;

/// A bialgebra, optionally with an antipode. Files without an `antipode`
/// field load as plain bialgebras.
#[derive(Clone, Debug)]
pub enum LoadedAlgebra {
    Bialgebra(BialgebraData),
    Hopf(HopfAlgebraData),
}

impl LoadedAlgebra {
    pub fn bialgebra(&self) -> &BialgebraData {
        match self {
            LoadedAlgebra::Bialgebra(b) => b,
            LoadedAlgebra::Hopf(h) => &h.bialgebra,
        }
    }

    pub fn hopf(&self) -> LoadResult<&HopfAlgebraData> {
        match self {
            LoadedAlgebra::Hopf(h) => Ok(h),
            LoadedAlgebra::Bialgebra(_) => Err(LoadFailure::Input(Error::Precondition(
                "this operation needs an antipode; the input declares none".into(),
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// File schemas
// ---------------------------------------------------------------------------

/// Sparse element: [[index, scalar]…].
pub type SparseElemDef = Vec<(usize, String)>;
/// Sparse tensor-square element: [[i, j, scalar]…].
pub type SparseTensorDef = Vec<(usize, usize, String)>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraDef {
    pub name: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    /// mult: [[i, j, [[k, scalar]…]]…], meaning e_i·e_j = Σ scalar·e_k.
    pub mult: Vec<(usize, usize, SparseElemDef)>,
    /// comult: [[i, [[j, k, scalar]…]]…], meaning Δ(e_i) = Σ scalar·e_j⊗e_k.
    pub comult: Vec<(usize, SparseTensorDef)>,
    pub counit: Vec<String>,
    /// antipode: [[i, [[j, scalar]…]]…], meaning S(e_i) = Σ scalar·e_j.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<(usize, SparseElemDef)>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraRef {
    Name(String),
    Inline(AlgebraDef),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModuleDef {
    pub carrier_dim: usize,
    /// action: [[j, matrix]…]; the matrix of e_j on the carrier, row-major.
    pub action: Vec<(usize, Vec<Vec<String>>)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComoduleDef {
    pub carrier_dim: usize,
    /// coaction: [[i, k, [coeffs]]…]; the matrix element L^i_k as a
    /// coefficient vector over the coalgebra basis.
    pub coaction: Vec<(usize, usize, Vec<String>)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct YdDef {
    pub algebra: AlgebraRef,
    /// One of "ll", "rr", "lr", "rl".
    pub corner: String,
    pub module: ModuleDef,
    pub comodule: ComoduleDef,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BimoduleDef {
    pub algebra: AlgebraRef,
    pub module: ModuleDef,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FodcDef {
    pub algebra: AlgebraRef,
    pub module: ModuleDef,
    /// partials[i] is the matrix of ∂^i, row-major over the algebra basis.
    pub partials: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_coaction: Option<ComoduleDef>,
}

// ---------------------------------------------------------------------------
// Scalars and matrices
// ---------------------------------------------------------------------------

fn scalar(s: &str) -> LoadResult<Scalar> {
    Ok(Scalar::parse(s)?)
}

fn scalar_vec(v: &[String]) -> LoadResult<Vec<Scalar>> {
    v.iter().map(|s| scalar(s)).collect()
}

fn matrix(rows: &[Vec<String>], r: usize, c: usize, what: &str) -> LoadResult<Matrix> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(LoadFailure::Input(Error::Dimension(format!(
            "{what}: expected a {r}x{c} matrix"
        ))));
    }
    let mut parsed = Vec::with_capacity(r);
    for row in rows {
        parsed.push(scalar_vec(row)?);
    }
    Ok(Matrix::from_rows(parsed).expect("shape checked"))
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

pub fn build_algebra(def: &AlgebraDef) -> LoadResult<LoadedAlgebra> {
    let n = def.dim;
    if def.basis.len() != n {
        return Err(LoadFailure::Input(Error::Dimension(format!(
            "basis has {} labels, dim is {n}",
            def.basis.len()
        ))));
    }
    if def.unit.len() != n || def.counit.len() != n {
        return Err(LoadFailure::Input(Error::Dimension(
            "unit and counit must have `dim` entries".into(),
        )));
    }
    let mut mult = vec![vec![Vec::new(); n]; n];
    for (i, j, terms) in &def.mult {
        if *i >= n || *j >= n {
            return Err(LoadFailure::Input(Error::Dimension(format!(
                "mult index ({i},{j}) out of range"
            ))));
        }
        let mut entry = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            if *k >= n {
                return Err(LoadFailure::Input(Error::Dimension(format!(
                    "mult target index {k} out of range"
                ))));
            }
            entry.push((*k, scalar(c)?));
        }
        mult[*i][*j] = entry;
    }
    let mut comult = vec![Vec::new(); n];
    for (i, terms) in &def.comult {
        if *i >= n {
            return Err(LoadFailure::Input(Error::Dimension(format!(
                "comult index {i} out of range"
            ))));
        }
        let mut entry = Vec::with_capacity(terms.len());
        for (j, k, c) in terms {
            if *j >= n || *k >= n {
                return Err(LoadFailure::Input(Error::Dimension(format!(
                    "comult target index ({j},{k}) out of range"
                ))));
            }
            entry.push((*j, *k, scalar(c)?));
        }
        comult[*i] = entry;
    }
    let unit = scalar_vec(&def.unit)?;
    let counit = scalar_vec(&def.counit)?;
    let algebra = FinAlgebra::new(n, def.basis.clone(), mult, unit)?;
    let coalgebra = FinCoalgebra::new(n, def.basis.clone(), comult, counit)?;
    let b = BialgebraData::new(algebra, coalgebra)?;

    let loaded = match &def.antipode {
        None => {
            let rep = b.verify();
            if !rep.all_pass() {
                return Err(LoadFailure::Verification(rep));
            }
            LoadedAlgebra::Bialgebra(b)
        }
        Some(rows) => {
            let mut s = Matrix::zero(n, n);
            for (i, terms) in rows {
                if *i >= n {
                    return Err(LoadFailure::Input(Error::Dimension(format!(
                        "antipode index {i} out of range"
                    ))));
                }
                for (j, c) in terms {
                    if *j >= n {
                        return Err(LoadFailure::Input(Error::Dimension(format!(
                            "antipode target index {j} out of range"
                        ))));
                    }
                    s.set(*j, *i, scalar(c)?);
                }
            }
            let h = HopfAlgebraData::new(b, s)?;
            let rep = h.verify();
            if !rep.all_pass() {
                return Err(LoadFailure::Verification(rep));
            }
            LoadedAlgebra::Hopf(h)
        }
    };
    Ok(loaded)
}

pub fn build_left_module(def: &ModuleDef, n: usize) -> LoadResult<LeftModule> {
    let d = def.carrier_dim;
    let mut action = vec![Matrix::zero(d, d); n];
    for (j, rows) in &def.action {
        if *j >= n {
            return Err(LoadFailure::Input(Error::Dimension(format!(
                "action index {j} out of range"
            ))));
        }
        action[*j] = matrix(rows, d, d, "action matrix")?;
    }
    Ok(LeftModule {
        carrier_dim: d,
        action,
    })
}

pub fn build_right_module(def: &ModuleDef, n: usize) -> LoadResult<RightModule> {
    let m = build_left_module(def, n)?;
    Ok(RightModule {
        carrier_dim: m.carrier_dim,
        action: m.action,
    })
}

fn comodule_coeffs(def: &ComoduleDef, n: usize) -> LoadResult<Vec<Vec<Elem>>> {
    let d = def.carrier_dim;
    let mut coeffs = vec![vec![vec![Scalar::zero(); n]; d]; d];
    for (i, k, v) in &def.coaction {
        if *i >= d || *k >= d {
            return Err(LoadFailure::Input(Error::Dimension(format!(
                "coaction index ({i},{k}) out of range"
            ))));
        }
        if v.len() != n {
            return Err(LoadFailure::Input(Error::Dimension(format!(
                "coaction entry ({i},{k}) must have {n} coefficients"
            ))));
        }
        coeffs[*i][*k] = scalar_vec(v)?;
    }
    Ok(coeffs)
}

pub fn build_left_comodule(def: &ComoduleDef, n: usize) -> LoadResult<LeftComodule> {
    Ok(LeftComodule {
        carrier_dim: def.carrier_dim,
        coeffs: comodule_coeffs(def, n)?,
    })
}

pub fn build_right_comodule(def: &ComoduleDef, n: usize) -> LoadResult<RightComodule> {
    Ok(RightComodule {
        carrier_dim: def.carrier_dim,
        coeffs: comodule_coeffs(def, n)?,
    })
}

pub fn build_yd(def: &YdDef, base: Option<&Path>) -> LoadResult<(LoadedAlgebra, YdModule)> {
    let alg = resolve_algebra(&def.algebra, base)?;
    let n = alg.bialgebra().dim();
    let m = match def.corner.as_str() {
        "ll" => YdModule::Ll {
            action: build_left_module(&def.module, n)?,
            coaction: build_left_comodule(&def.comodule, n)?,
        },
        "rr" => YdModule::Rr {
            action: build_right_module(&def.module, n)?,
            coaction: build_right_comodule(&def.comodule, n)?,
        },
        "lr" => YdModule::Lr {
            action: build_left_module(&def.module, n)?,
            coaction: build_right_comodule(&def.comodule, n)?,
        },
        "rl" => YdModule::Rl {
            action: build_right_module(&def.module, n)?,
            coaction: build_left_comodule(&def.comodule, n)?,
        },
        other => {
            return Err(LoadFailure::Input(Error::Parse(format!(
                "unknown corner '{other}' (expected ll, rr, lr or rl)"
            ))))
        }
    };
    Ok((alg, m))
}

pub fn build_fodc(def: &FodcDef, base: Option<&Path>) -> LoadResult<(LoadedAlgebra, Fodc)> {
    let alg = resolve_algebra(&def.algebra, base)?;
    let n = alg.bialgebra().dim();
    let module = build_left_module(&def.module, n)?;
    let d = module.carrier_dim;
    if def.partials.len() != d {
        return Err(LoadFailure::Input(Error::Dimension(format!(
            "expected {d} partial derivative matrices, found {}",
            def.partials.len()
        ))));
    }
    let mut partials = Vec::with_capacity(d);
    for rows in &def.partials {
        partials.push(matrix(rows, n, n, "partial derivative")?);
    }
    let left_coaction = match &def.left_coaction {
        Some(c) => Some(build_left_comodule(c, n)?),
        None => None,
    };
    Ok((
        alg,
        Fodc {
            module,
            partials,
            left_coaction,
        },
    ))
}

// ---------------------------------------------------------------------------
// Input resolution
// ---------------------------------------------------------------------------

fn read_file(path: &Path) -> LoadResult<String> {
    std::fs::read_to_string(path).map_err(|e| {
        LoadFailure::Input(Error::Parse(format!("cannot read {}: {e}", path.display())))
    })
}

fn parse_json<T: for<'a> Deserialize<'a>>(text: &str, path: &Path) -> LoadResult<T> {
    serde_json::from_str(text).map_err(|e| {
        LoadFailure::Input(Error::Parse(format!("{}: {e}", path.display())))
    })
}

fn catalog_name(input: &str) -> Option<&str> {
    input.strip_prefix("catalog:")
}

fn resolve_path(input: &str, base: Option<&Path>) -> PathBuf {
    let p = PathBuf::from(input);
    match base {
        Some(dir) if p.is_relative() => dir.join(p),
        _ => p,
    }
}

fn resolve_algebra(r: &AlgebraRef, base: Option<&Path>) -> LoadResult<LoadedAlgebra> {
    match r {
        AlgebraRef::Inline(def) => build_algebra(def),
        AlgebraRef::Name(name) => match catalog_name(name) {
            Some(n) => Ok(LoadedAlgebra::Hopf(catalog::algebra(n)?)),
            None => load_algebra_file(&resolve_path(name, base)),
        },
    }
}

fn load_algebra_file(path: &Path) -> LoadResult<LoadedAlgebra> {
    let text = read_file(path)?;
    let def: AlgebraDef = parse_json(&text, path)?;
    build_algebra(&def)
}

/// Resolve a CLI algebra input: `catalog:NAME` or a file path.
pub fn load_algebra_input(input: &str) -> LoadResult<LoadedAlgebra> {
    match catalog_name(input) {
        Some(n) => Ok(LoadedAlgebra::Hopf(catalog::algebra(n)?)),
        None => load_algebra_file(Path::new(input)),
    }
}

pub fn load_yd_input(input: &str) -> LoadResult<(LoadedAlgebra, YdModule)> {
    match catalog_name(input) {
        Some(n) => {
            let (h, m) = catalog::yd(n)?;
            Ok((LoadedAlgebra::Hopf(h), m))
        }
        None => {
            let path = Path::new(input);
            let text = read_file(path)?;
            let def: YdDef = parse_json(&text, path)?;
            build_yd(&def, path.parent())
        }
    }
}

pub fn load_module_input(input: &str) -> LoadResult<(LoadedAlgebra, LeftModule)> {
    match catalog_name(input) {
        Some(n) => {
            let (h, m) = catalog::module(n)?;
            Ok((LoadedAlgebra::Hopf(h), m))
        }
        None => load_bimodule_file(Path::new(input)),
    }
}

/// Bimodule inputs name a base module; the commutation rule is derived.
pub fn load_bimodule_input(input: &str) -> LoadResult<(LoadedAlgebra, LeftModule)> {
    match catalog_name(input) {
        Some(n) => {
            let (h, m) = catalog::bimodule(n)?;
            Ok((LoadedAlgebra::Hopf(h), m))
        }
        None => load_bimodule_file(Path::new(input)),
    }
}

fn load_bimodule_file(path: &Path) -> LoadResult<(LoadedAlgebra, LeftModule)> {
    let text = read_file(path)?;
    let def: BimoduleDef = parse_json(&text, path)?;
    let alg = resolve_algebra(&def.algebra, path.parent())?;
    let n = alg.bialgebra().dim();
    let m = build_left_module(&def.module, n)?;
    Ok((alg, m))
}

pub fn load_fodc_input(input: &str) -> LoadResult<(LoadedAlgebra, Fodc)> {
    match catalog_name(input) {
        Some(n) => {
            let (h, fodc) = catalog::calculus(n)?;
            Ok((LoadedAlgebra::Hopf(h), fodc))
        }
        None => {
            let path = Path::new(input);
            let text = read_file(path)?;
            let def: FodcDef = parse_json(&text, path)?;
            build_fodc(&def, path.parent())
        }
    }
}

/// A standalone right-comodule file over an algebra given elsewhere.
pub fn load_right_comodule_file(input: &str, n: usize) -> LoadResult<RightComodule> {
    let path = Path::new(input);
    let text = read_file(path)?;
    let def: ComoduleDef = parse_json(&text, path)?;
    build_right_comodule(&def, n)
}

// ---------------------------------------------------------------------------
// Serialization back to defs (used by `calculus build --out`)
// ---------------------------------------------------------------------------

fn scalar_str(s: &Scalar) -> String {
    s.to_string()
}

pub fn algebra_to_def(alg: &LoadedAlgebra) -> AlgebraDef {
    let b = alg.bialgebra();
    let n = b.dim();
    let mut mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let entry: Vec<(usize, String)> = b
                .algebra
                .mul_basis_sparse(i, j)
                .iter()
                .map(|(k, c)| (*k, scalar_str(c)))
                .collect();
            if !entry.is_empty() {
                mult.push((i, j, entry));
            }
        }
    }
    let comult = b
        .coalgebra
        .comult_basis()
        .iter()
        .enumerate()
        .map(|(i, terms)| {
            (
                i,
                terms
                    .iter()
                    .map(|(j, k, c)| (*j, *k, scalar_str(c)))
                    .collect(),
            )
        })
        .collect();
    let antipode = match alg {
        LoadedAlgebra::Bialgebra(_) => None,
        LoadedAlgebra::Hopf(h) => Some(
            (0..n)
                .map(|i| {
                    let col: Vec<(usize, String)> = (0..n)
                        .filter(|&j| !h.antipode.get(j, i).is_zero())
                        .map(|j| (j, scalar_str(h.antipode.get(j, i))))
                        .collect();
                    (i, col)
                })
                .collect(),
        ),
    };
    AlgebraDef {
        name: "inline".into(),
        dim: n,
        basis: b.names().to_vec(),
        unit: b.algebra.unit.iter().map(scalar_str).collect(),
        mult,
        comult,
        counit: b.coalgebra.counit.iter().map(scalar_str).collect(),
        antipode,
    }
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| scalar_str(m.get(i, j))).collect())
        .collect()
}

pub fn fodc_to_def(alg: &LoadedAlgebra, fodc: &Fodc) -> FodcDef {
    let d = fodc.module.carrier_dim;
    FodcDef {
        algebra: AlgebraRef::Inline(algebra_to_def(alg)),
        module: ModuleDef {
            carrier_dim: d,
            action: fodc
                .module
                .action
                .iter()
                .enumerate()
                .map(|(j, m)| (j, matrix_rows(m)))
                .collect(),
        },
        partials: fodc.partials.iter().map(matrix_rows).collect(),
        left_coaction: fodc.left_coaction.as_ref().map(|c| ComoduleDef {
            carrier_dim: d,
            coaction: (0..d)
                .flat_map(|i| {
                    let coeffs = &c.coeffs;
                    (0..d).filter_map(move |k| {
                        let v = &coeffs[i][k];
                        if v.iter().all(Scalar::is_zero) {
                            None
                        } else {
                            Some((i, k, v.iter().map(scalar_str).collect::<Vec<_>>()))
                        }
                    })
                })
                .collect(),
        }),
    }
}

impl Corner {
    pub fn tag(&self) -> &'static str {
        match self {
            Corner::Ll => "ll",
            Corner::Rr => "rr",
            Corner::Lr => "lr",
            Corner::Rl => "rl",
        }
    }
}
