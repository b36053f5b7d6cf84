//! Built-in example structures addressable as `catalog:NAME` from the CLI
//! and reused across the test suites.

use crate::algebra::{
    basis_elem, elem_add, elem_scale, zero_elem, BialgebraData, FinAlgebra, FinCoalgebra,
    HopfAlgebraData,
};
use crate::calculus::{finite_group_calculus, Fodc};
use crate::error::{Error, Result};
use crate::group::{function_algebra, group_algebra, FiniteGroup};
use crate::linalg::Matrix;
use crate::repcorep::{regular_representation, LeftComodule, LeftModule};
use crate::scalar::Scalar;
use crate::yd::{trivial_yd, Corner, YdModule};

pub const ALGEBRAS: &[&str] = &[
    "k",
    "kZ2",
    "kZ3",
    "kS3",
    "kZ2-fun",
    "kZ3-fun",
    "kS3-fun",
    "sweedler-H4",
];

pub const YD_INSTANCES: &[&str] = &[
    "kZ2-trivial",
    "kZ2-sign-g",
    "kZ3-fun-diag",
    "kS3-conj",
    "kS3-fun-conj",
    "H4-adjoint",
    "broken-kS3-coaction",
    "broken-kS3-fun-action",
];

pub const MODULES: &[&str] = &["H4-2dim", "kZ2-sign", "kS3-perm"];

pub const CALCULI: &[&str] = &["fodc-Z2", "fodc-Z3-single", "fodc-Z3-full", "fodc-S3"];

pub const BIMODULES: &[&str] = &["kZ2-regular", "kZ3-regular", "H4-2dim", "kS3-bimodule"];

fn s(v: i64) -> Scalar {
    Scalar::from_int(v)
}

/// Sweedler's four-dimensional Hopf algebra: basis 1, g, x, gx with
/// g² = 1, x² = 0, xg = −gx, Δg = g⊗g, Δx = x⊗1 + g⊗x.
pub fn sweedler() -> HopfAlgebraData {
    let names: Vec<String> = ["1", "g", "x", "gx"].iter().map(|t| t.to_string()).collect();
    let e = |k: usize| vec![(k, s(1))];
    let neg = |k: usize| vec![(k, s(-1))];
    let zero: Vec<(usize, Scalar)> = Vec::new();
    let mult = vec![
        vec![e(0), e(1), e(2), e(3)],
        vec![e(1), e(0), e(3), e(2)],
        vec![e(2), neg(3), zero.clone(), zero.clone()],
        vec![e(3), neg(2), zero.clone(), zero.clone()],
    ];
    let algebra = FinAlgebra::new(4, names.clone(), mult, basis_elem(4, 0)).expect("H4 algebra");
    let comult = vec![
        vec![(0, 0, s(1))],
        vec![(1, 1, s(1))],
        vec![(2, 0, s(1)), (1, 2, s(1))],
        vec![(3, 1, s(1)), (0, 3, s(1))],
    ];
    let counit = vec![s(1), s(1), s(0), s(0)];
    let coalgebra = FinCoalgebra::new(4, names, comult, counit).expect("H4 coalgebra");
    let mut antipode = Matrix::zero(4, 4);
    antipode.set(0, 0, s(1));
    antipode.set(1, 1, s(1));
    antipode.set(3, 2, s(-1));
    antipode.set(2, 3, s(1));
    HopfAlgebraData::new(
        BialgebraData::new(algebra, coalgebra).expect("dims agree"),
        antipode,
    )
    .expect("antipode shape")
}

fn trivial_hopf() -> HopfAlgebraData {
    group_algebra(&FiniteGroup::cyclic(1))
}

pub fn algebra(name: &str) -> Result<HopfAlgebraData> {
    Ok(match name {
        "k" => trivial_hopf(),
        "kZ2" => group_algebra(&FiniteGroup::cyclic(2)),
        "kZ3" => group_algebra(&FiniteGroup::cyclic(3)),
        "kS3" => group_algebra(&FiniteGroup::symmetric_3()),
        "kZ2-fun" => function_algebra(&FiniteGroup::cyclic(2)),
        "kZ3-fun" => function_algebra(&FiniteGroup::cyclic(3)),
        "kS3-fun" => function_algebra(&FiniteGroup::symmetric_3()),
        "sweedler-H4" => sweedler(),
        _ => {
            return Err(Error::Precondition(format!(
                "unknown catalog algebra '{name}'"
            )))
        }
    })
}

/// The two-dimensional representation of Sweedler's algebra.
pub fn sweedler_2dim_module() -> LeftModule {
    LeftModule {
        carrier_dim: 2,
        action: vec![
            Matrix::identity(2),
            Matrix::from_rows(vec![vec![s(1), s(0)], vec![s(0), s(-1)]]).unwrap(),
            Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(0), s(0)]]).unwrap(),
            Matrix::from_rows(vec![vec![s(0), s(1)], vec![s(0), s(0)]]).unwrap(),
        ],
    }
}

/// Permutation module of 𝕜[S3] on the span of the transpositions, acting
/// by conjugation.
fn s3_conjugation_module(g: &FiniteGroup) -> LeftModule {
    let t = FiniteGroup::s3_transpositions();
    let d = t.len();
    LeftModule {
        carrier_dim: d,
        action: (0..g.order)
            .map(|j| {
                Matrix::from_fn(d, d, |i, k| {
                    if t[i] == g.conjugate(j, t[k]) {
                        s(1)
                    } else {
                        s(0)
                    }
                })
            })
            .collect(),
    }
}

/// Diagonal coaction by the transpositions themselves: L^k_k = c_k.
fn s3_conjugation_coaction(g: &FiniteGroup) -> LeftComodule {
    let t = FiniteGroup::s3_transpositions();
    let d = t.len();
    let n = g.order;
    LeftComodule {
        carrier_dim: d,
        coeffs: (0..d)
            .map(|i| {
                (0..d)
                    .map(|k| {
                        if i == k {
                            basis_elem(n, t[k])
                        } else {
                            zero_elem(n)
                        }
                    })
                    .collect()
            })
            .collect(),
    }
}

/// The adjoint crossed module of a Hopf algebra: left regular action,
/// coaction v ↦ v₍₁₎S(v₍₃₎) ⊗ v₍₂₎.
pub fn adjoint_yd(h: &HopfAlgebraData) -> YdModule {
    let b = &h.bialgebra;
    let n = b.dim();
    let mut coeffs = vec![vec![zero_elem(n); n]; n];
    for k in 0..n {
        for (a, t, c1) in &b.coalgebra.comult_basis()[k] {
            for (m, r, c2) in &b.coalgebra.comult_basis()[*t] {
                let tail = h.apply_antipode(&basis_elem(n, *r));
                let prod = b.algebra.mul_elem(&basis_elem(n, *a), &tail);
                coeffs[*m][k] = elem_add(&coeffs[*m][k], &elem_scale(&prod, &(c1 * c2)));
            }
        }
    }
    YdModule::Ll {
        action: regular_representation(&b.algebra),
        coaction: LeftComodule {
            carrier_dim: n,
            coeffs,
        },
    }
}

pub fn yd(name: &str) -> Result<(HopfAlgebraData, YdModule)> {
    Ok(match name {
        "kZ2-trivial" => {
            let h = algebra("kZ2")?;
            let m = trivial_yd(&h.bialgebra, Corner::Ll, 1);
            (h, m)
        }
        "kZ2-sign-g" => {
            let h = algebra("kZ2")?;
            // one-dimensional: g acts by −1, coaction by g
            let action = LeftModule {
                carrier_dim: 1,
                action: vec![Matrix::identity(1), Matrix::identity(1).scale(&s(-1))],
            };
            let coaction = LeftComodule {
                carrier_dim: 1,
                coeffs: vec![vec![basis_elem(2, 1)]],
            };
            (h, YdModule::Ll { action, coaction })
        }
        "kZ3-fun-diag" => {
            let (h, fodc) = calculus("fodc-Z3-full")?;
            let coaction = fodc
                .left_coaction
                .clone()
                .expect("conjugation-closed subset");
            (
                h,
                YdModule::Ll {
                    action: fodc.module.clone(),
                    coaction,
                },
            )
        }
        "kS3-conj" => {
            let g = FiniteGroup::symmetric_3();
            let h = group_algebra(&g);
            (
                h,
                YdModule::Ll {
                    action: s3_conjugation_module(&g),
                    coaction: s3_conjugation_coaction(&g),
                },
            )
        }
        "kS3-fun-conj" => {
            let (h, fodc) = calculus("fodc-S3")?;
            let coaction = fodc
                .left_coaction
                .clone()
                .expect("transpositions are conjugation closed");
            (
                h,
                YdModule::Ll {
                    action: fodc.module.clone(),
                    coaction,
                },
            )
        }
        "H4-adjoint" => {
            let h = sweedler();
            let m = adjoint_yd(&h);
            (h, m)
        }
        "broken-kS3-coaction" => {
            // conjugation coaction with the trivial action: the coefficients
            // fail to commute past group elements
            let g = FiniteGroup::symmetric_3();
            let h = group_algebra(&g);
            let action = LeftModule::trivial(&h.bialgebra.algebra, &h.bialgebra.coalgebra.counit, 3);
            (
                h,
                YdModule::Ll {
                    action,
                    coaction: s3_conjugation_coaction(&g),
                },
            )
        }
        "broken-kS3-fun-action" => {
            // diagonal action with the trivial coaction: left and right
            // translates of δ functions disagree on a nonabelian group
            let (h, fodc) = calculus("fodc-S3")?;
            let d = fodc.module.carrier_dim;
            let coaction = LeftComodule::trivial(
                &h.bialgebra.coalgebra,
                &h.bialgebra.algebra.unit,
                d,
            );
            (
                h,
                YdModule::Ll {
                    action: fodc.module.clone(),
                    coaction,
                },
            )
        }
        _ => {
            return Err(Error::Precondition(format!(
                "unknown catalog crossed module '{name}'"
            )))
        }
    })
}

pub fn module(name: &str) -> Result<(HopfAlgebraData, LeftModule)> {
    Ok(match name {
        "H4-2dim" => (sweedler(), sweedler_2dim_module()),
        "kZ2-sign" => {
            let h = algebra("kZ2")?;
            let m = LeftModule {
                carrier_dim: 1,
                action: vec![Matrix::identity(1), Matrix::identity(1).scale(&s(-1))],
            };
            (h, m)
        }
        "kS3-perm" => {
            let g = FiniteGroup::symmetric_3();
            (group_algebra(&g), s3_conjugation_module(&g))
        }
        _ => {
            return Err(Error::Precondition(format!(
                "unknown catalog module '{name}'"
            )))
        }
    })
}

/// Free covariant bimodules given as a base module; the commutation rule is
/// derived from the module and the comultiplication.
pub fn bimodule(name: &str) -> Result<(HopfAlgebraData, LeftModule)> {
    Ok(match name {
        "kZ2-regular" => {
            let h = algebra("kZ2")?;
            let m = regular_representation(&h.bialgebra.algebra);
            (h, m)
        }
        "kZ3-regular" => {
            let h = algebra("kZ3")?;
            let m = regular_representation(&h.bialgebra.algebra);
            (h, m)
        }
        "H4-2dim" => (sweedler(), sweedler_2dim_module()),
        "kS3-bimodule" => {
            let (h, fodc) = calculus("fodc-S3")?;
            (h, fodc.module)
        }
        _ => {
            return Err(Error::Precondition(format!(
                "unknown catalog bimodule '{name}'"
            )))
        }
    })
}

pub fn calculus(name: &str) -> Result<(HopfAlgebraData, Fodc)> {
    match name {
        "fodc-Z2" => finite_group_calculus(&FiniteGroup::cyclic(2), &[1]),
        "fodc-Z3-single" => finite_group_calculus(&FiniteGroup::cyclic(3), &[1]),
        "fodc-Z3-full" => finite_group_calculus(&FiniteGroup::cyclic(3), &[1, 2]),
        "fodc-S3" => finite_group_calculus(
            &FiniteGroup::symmetric_3(),
            &FiniteGroup::s3_transpositions(),
        ),
        _ => Err(Error::Precondition(format!(
            "unknown catalog calculus '{name}'"
        ))),
    }
}
