//! Finite groups by multiplication table, and the two Hopf algebras they
//! generate: the group algebra 𝕜[G] and the function algebra 𝕜(G).

use crate::algebra::{BialgebraData, FinAlgebra, FinCoalgebra, HopfAlgebraData};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub order: usize,
    pub names: Vec<String>,
    /// mul[a][b] = index of a·b
    pub mul: Vec<Vec<usize>>,
    pub identity: usize,
}

impl FiniteGroup {
    pub fn new(names: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let order = names.len();
        if mul.len() != order || mul.iter().any(|r| r.len() != order) {
            return Err(Error::Dimension("group table is not square".into()));
        }
        if mul
            .iter()
            .any(|r| r.iter().any(|&x| x >= order))
        {
            return Err(Error::Structural("group table entry out of range".into()));
        }
        // locate a two-sided identity
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::Structural("group table has no identity".into()))?;
        let g = FiniteGroup {
            order,
            names,
            mul,
            identity,
        };
        // associativity and inverses
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]] {
                        return Err(Error::Structural(format!(
                            "group table not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
            if (0..order).all(|b| g.mul[a][b] != g.identity) {
                return Err(Error::Structural(format!("element {a} has no inverse")));
            }
        }
        Ok(g)
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.mul[a][b] == self.identity)
            .expect("validated group has inverses")
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        // g x g⁻¹
        self.mul[self.mul[g][x]][self.inverse(g)]
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let names = (0..n).map(|i| i.to_string()).collect();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::new(names, mul).expect("cyclic table is a group")
    }

    /// The symmetric group on {1,2,3} as permutations in one-line notation.
    pub fn symmetric_3() -> FiniteGroup {
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2], // e
            [1, 0, 2], // (12)
            [2, 1, 0], // (13)
            [0, 2, 1], // (23)
            [1, 2, 0], // (123)
            [2, 0, 1], // (132)
        ];
        let names = vec!["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
            .into_iter()
            .map(String::from)
            .collect();
        let compose = |p: &[usize; 3], q: &[usize; 3]| -> [usize; 3] {
            // (p∘q)(i) = p(q(i))
            [p[q[0]], p[q[1]], p[q[2]]]
        };
        let mul = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let pq = compose(p, q);
                        perms.iter().position(|r| *r == pq).unwrap()
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::new(names, mul).expect("S3 table is a group")
    }

    /// Indices of the transpositions of S3 in the ordering of
    /// [`FiniteGroup::symmetric_3`].
    pub fn s3_transpositions() -> Vec<usize> {
        vec![1, 2, 3]
    }
}

/// Group algebra 𝕜[G]: basis g, g·h from the table, Δ(g) = g⊗g, ε(g) = 1,
/// S(g) = g⁻¹.
pub fn group_algebra(g: &FiniteGroup) -> HopfAlgebraData {
    let n = g.order;
    let mult = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| vec![(g.mul[a][b], Scalar::one())])
                .collect()
        })
        .collect();
    let mut unit = vec![Scalar::zero(); n];
    unit[g.identity] = Scalar::one();
    let algebra = FinAlgebra::new(n, g.names.clone(), mult, unit).expect("group algebra");
    let comult = (0..n).map(|a| vec![(a, a, Scalar::one())]).collect();
    let counit = vec![Scalar::one(); n];
    let coalgebra =
        FinCoalgebra::new(n, g.names.clone(), comult, counit).expect("group coalgebra");
    let mut antipode = Matrix::zero(n, n);
    for a in 0..n {
        antipode.set(g.inverse(a), a, Scalar::one());
    }
    HopfAlgebraData::new(
        BialgebraData::new(algebra, coalgebra).expect("dims agree"),
        antipode,
    )
    .expect("antipode shape")
}

/// Function algebra 𝕜(G): basis δ_a, pointwise product, Δδ_a = Σ_{bc=a}
/// δ_b⊗δ_c, ε(δ_a) = [a = e], S(δ_a) = δ_{a⁻¹}.
pub fn function_algebra(g: &FiniteGroup) -> HopfAlgebraData {
    let n = g.order;
    let names: Vec<String> = g.names.iter().map(|s| format!("δ_{s}")).collect();
    let mult = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    if a == b {
                        vec![(a, Scalar::one())]
                    } else {
                        Vec::new()
                    }
                })
                .collect()
        })
        .collect();
    let unit = vec![Scalar::one(); n];
    let algebra = FinAlgebra::new(n, names.clone(), mult, unit).expect("function algebra");
    let comult = (0..n)
        .map(|a| {
            let mut triples = Vec::new();
            for b in 0..n {
                for c in 0..n {
                    if g.mul[b][c] == a {
                        triples.push((b, c, Scalar::one()));
                    }
                }
            }
            triples
        })
        .collect();
    let mut counit = vec![Scalar::zero(); n];
    counit[g.identity] = Scalar::one();
    let coalgebra = FinCoalgebra::new(n, names, comult, counit).expect("function coalgebra");
    let mut antipode = Matrix::zero(n, n);
    for a in 0..n {
        antipode.set(g.inverse(a), a, Scalar::one());
    }
    HopfAlgebraData::new(
        BialgebraData::new(algebra, coalgebra).expect("dims agree"),
        antipode,
    )
    .expect("antipode shape")
}
