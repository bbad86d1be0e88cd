//! Irreducibility over the rationals by Norton's criterion.
//!
//! Each round draws a random integer combination `θ` of monoid element
//! matrices, looks for an integer eigenvalue `c` (the matrices are integral,
//! so rational eigenvalues are integers bounded by the row-sum norm), and
//! spins `ker(θ − c)` and `ker(θ − c)^T`. A one-dimensional kernel whose
//! vector spins to everything on both sides certifies irreducibility.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{charpoly, eval_poly, kernel, RationalMatrix, SparseVec, Subspace};
use crate::rational::Rational;

pub const DEFAULT_ROUNDS: usize = 25;
pub const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Irreducibility {
    Irreducible { rounds_used: usize },
    /// A proper nonzero invariant subspace, as a list of basis vectors.
    Reducible { witness: Vec<Vec<Rational>> },
    Inconclusive { rounds_used: usize },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible { .. })
    }
}

/// Smallest subspace containing `v` and stable under `gens`.
pub fn spin(v: &SparseVec, gens: &[RationalMatrix], dim: usize) -> Subspace {
    let mut sub = Subspace::zero(dim);
    if !sub.insert(v) {
        return sub;
    }
    let mut queue = vec![v.clone()];
    while let Some(w) = queue.pop() {
        for g in gens {
            let img = g.apply(&w);
            if sub.insert(&img) {
                queue.push(img);
            }
        }
    }
    sub
}

fn integral(m: &RationalMatrix) -> Option<RationalMatrix> {
    (0..m.nrows()).all(|i| m.row(i).iter().all(|x| x.is_integer())).then(|| m.clone())
}

fn row_sum_bound(m: &RationalMatrix) -> i64 {
    (0..m.nrows())
        .map(|i| m.row(i).iter().map(|x| x.abs().to_i64().unwrap_or(i64::MAX / 4)).sum::<i64>())
        .max()
        .unwrap_or(0)
}

fn witness(sub: &Subspace) -> Irreducibility {
    let dim = sub.ambient_dim();
    Irreducibility::Reducible { witness: sub.basis().iter().map(|v| v.to_dense(dim)).collect() }
}

/// Annihilator in the module of a subspace of the dual.
fn annihilator(dual: &Subspace) -> Subspace {
    kernel(&dual.as_matrix())
}

/// Norton's test. `algebra` spans the acting algebra (monoid element
/// matrices); `generators` generate it.
pub fn irreducibility_test(
    algebra: &[RationalMatrix],
    generators: &[RationalMatrix],
    rounds: usize,
    seed: u64,
) -> Result<Irreducibility> {
    let dim = algebra.first().map(|m| m.nrows()).ok_or_else(|| Error::Invalid("no acting matrices".into()))?;
    if dim == 0 {
        return Err(Error::Invalid("irreducibility of the zero module is undefined".into()));
    }
    if dim == 1 {
        return Ok(Irreducibility::Irreducible { rounds_used: 0 });
    }
    let gens_t: Vec<RationalMatrix> = generators.iter().map(|g| g.transpose()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for round in 1..=rounds {
        let k = rng.gen_range(2..=4).min(algebra.len());
        let mut theta = RationalMatrix::zeros(dim, dim);
        for m in algebra.choose_multiple(&mut rng, k) {
            let c = Rational::from_int(*[-3, -2, -1, 1, 2, 3].choose(&mut rng).unwrap());
            theta = theta.add(&m.scaled(&c));
        }
        let Some(theta) = integral(&theta) else { continue };
        let p = charpoly(&theta);
        let bound = row_sum_bound(&theta);
        for c in -bound..=bound {
            let c = Rational::from_int(c);
            if !eval_poly(&p, &c).is_zero() {
                continue;
            }
            let mut shifted = theta.clone();
            for i in 0..dim {
                let v = shifted.get(i, i) - &c;
                shifted.set(i, i, v);
            }
            let null = kernel(&shifted);
            for v in null.basis() {
                let s = spin(&v, generators, dim);
                if s.dim() < dim {
                    return Ok(witness(&s));
                }
            }
            if null.dim() != 1 {
                continue;
            }
            let null_t = kernel(&shifted.transpose());
            let w = &null_t.basis()[0];
            let s = spin(w, &gens_t, dim);
            if s.dim() < dim {
                return Ok(witness(&annihilator(&s)));
            }
            return Ok(Irreducibility::Irreducible { rounds_used: round });
        }
    }
    Ok(Irreducibility::Inconclusive { rounds_used: rounds })
}
