//! The skew-commuting ring `k⟨y_{m×n}⟩`: ideals `J′_{m,n}(Z)`, rearrangement
//! bitableaux and the filtration of the quotient. The machinery is shared
//! with [`crate::cauchy`]; this module fixes the exterior flavor and bundles
//! the membership samplers with the chain.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cauchy::{
    bitableau, graded_quotient_dim, ideal_generators, lemma_tlem_check, repeated_entry_check, theorem_skew_c_check,
    CauchyChain, ChainOptions, MembershipReport, QuotientDim,
};
use crate::combinatorics::{enumerate_partitions, Tableau};
use crate::error::{Error, Result};
use crate::monoid::MonoidKind;
use crate::poly::{Flavor, Polynomial};

/// Elements of `k⟨y⟩` are [`Polynomial`]s of the exterior flavor.
pub type ExteriorPolynomial = Polynomial;

pub fn skew_ideal_generators(kind: MonoidKind, m: usize, n: usize) -> Result<Vec<ExteriorPolynomial>> {
    ideal_generators(Flavor::Exterior, kind, m, n)
}

pub fn skew_quotient_dim(kind: MonoidKind, m: usize, n: usize, r: usize) -> Result<QuotientDim> {
    graded_quotient_dim(Flavor::Exterior, kind, m, n, r)
}

pub fn skew_bitableau(s: &Tableau, t: &Tableau, m: usize, n: usize) -> Result<ExteriorPolynomial> {
    bitableau(Flavor::Exterior, s, t, m, n)
}

/// Repeated entries: in `T` the bitableau lies in `J′(PT)`, in `S` in `J′(IS)`.
pub fn skew_repeated_entry_check(m: usize, n: usize, rmax: usize, samples: usize, seed: u64) -> Result<MembershipReport> {
    repeated_entry_check(Flavor::Exterior, m, n, rmax, samples, seed)
}

/// Column sums `Σ_u (S_{i,j}[u] | T) ∈ J′(T)` over random shapes with
/// 1 to `rmax` boxes.
pub fn skew_column_sum_check(m: usize, n: usize, rmax: usize, samples: usize, seed: u64) -> Result<MembershipReport> {
    if rmax == 0 {
        return Err(Error::Invalid("the column-sum check needs at least one box".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = MembershipReport { flavor: Flavor::Exterior, m, n, samples: Vec::new() };
    for _ in 0..samples {
        let parts = enumerate_partitions(rng.gen_range(1..=rmax), None);
        let lambda = &parts[rng.gen_range(0..parts.len())];
        let one = lemma_tlem_check(Flavor::Exterior, m, n, lambda, 1, rng.gen())?;
        out.samples.extend(one.samples);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkewCauchyReport {
    pub chain: CauchyChain,
    pub repeated: MembershipReport,
    pub column_sums: MembershipReport,
}

impl SkewCauchyReport {
    pub fn holds(&self) -> bool {
        self.chain.holds() && self.repeated.holds() && self.column_sums.holds()
    }
}

/// The chain for `(k⟨y⟩/J′(kind))_r` plus `samples` draws of each membership check on
/// shapes of up to `max(r, 2)` boxes.
pub fn skew_cauchy_check(
    kind: MonoidKind,
    m: usize,
    n: usize,
    r: usize,
    opts: ChainOptions,
    samples: usize,
    seed: u64,
) -> Result<SkewCauchyReport> {
    let rmax = r.max(2);
    Ok(SkewCauchyReport {
        chain: theorem_skew_c_check(kind, m, n, r, opts)?,
        repeated: skew_repeated_entry_check(m, n, rmax, samples, seed)?,
        column_sums: skew_column_sum_check(m, n, rmax, samples, seed ^ 0x9e37_79b9)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cauchy::skew_filtration_check;
    use crate::combinatorics::{Partition, SkewShape};
    use crate::rational::binomial;

    fn row(entries: &[u8]) -> Tableau {
        Tableau::from_rows(&SkewShape::straight(Partition::from_parts(&[entries.len()])), &[entries])
    }

    fn strings(ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn generators() {
        assert_eq!(strings(&skew_ideal_generators(MonoidKind::PT, 2, 1).unwrap()), ["y11*y21"]);
        assert_eq!(strings(&skew_ideal_generators(MonoidKind::T, 2, 1).unwrap()), ["y11*y21", "y11 + y21"]);
        let is = skew_ideal_generators(MonoidKind::IS, 2, 2).unwrap();
        assert_eq!(is.len(), 4);
        assert!(is.iter().all(|g| g.degree() == Some(2)));
    }

    #[test]
    fn bitableau_examples() {
        assert_eq!(skew_bitableau(&row(&[2]), &row(&[1]), 2, 2).unwrap().to_string(), "y21");
        assert_eq!(skew_bitableau(&row(&[1, 2]), &row(&[1, 2]), 2, 2).unwrap().to_string(), "y11*y22 + y12*y21");
        assert!(skew_bitableau(&row(&[1, 1]), &row(&[1, 2]), 2, 2).unwrap().is_zero());
        let two = Tableau::from_rows(&SkewShape::straight(Partition::from_parts(&[2])), &[&[1, 2]]);
        let col = Tableau::from_rows(&SkewShape::straight(Partition::from_parts(&[1, 1])), &[&[1], &[2]]);
        assert!(skew_bitableau(&two, &col, 2, 2).is_err());
    }

    #[test]
    fn quotient_dim_examples() {
        assert_eq!(skew_quotient_dim(MonoidKind::IS, 2, 2, 2).unwrap().computed, 2);
        assert_eq!(skew_quotient_dim(MonoidKind::PT, 3, 2, 1).unwrap().computed, 6);
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            assert_eq!(skew_quotient_dim(kind, 2, 2, 3).unwrap().computed, 0);
        }
    }

    #[test]
    fn quotient_dims_up_to_four() {
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            for m in 1..=4 {
                for n in 1..=4 {
                    for r in 0..=n + 1 {
                        let q = skew_quotient_dim(kind, m, n, r).unwrap();
                        assert!(q.holds(), "{q:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn chain_examples() {
        let c = skew_cauchy_check(MonoidKind::IS, 2, 2, 2, ChainOptions::full(), 10, 1).unwrap();
        assert_eq!(c.chain.steps.iter().map(|s| s.quotient_dim).collect::<Vec<_>>(), [1, 1]);
        assert!(c.holds(), "{c:?}");
        let c = theorem_skew_c_check(MonoidKind::PT, 2, 2, 1, ChainOptions::full()).unwrap();
        assert_eq!((c.steps.len(), c.steps[0].quotient_dim, c.total_dim), (1, 4, 4));
        let c = theorem_skew_c_check(MonoidKind::T, 2, 2, 2, ChainOptions::full()).unwrap();
        assert_eq!(c.total_dim, 1);
        assert!(c.holds());
    }

    #[test]
    fn unquotiented_totals() {
        for m in 1..=3 {
            for n in 1..=3 {
                for r in 0..=4 {
                    let c = skew_filtration_check(m, n, r, ChainOptions::default()).unwrap();
                    let total: usize = c.steps.iter().map(|s| s.left_dim * s.right_dim).sum();
                    assert_eq!(binomial((m * n) as u64, r as u64), total.into(), "m={m} n={n} r={r}");
                    assert!(c.holds());
                }
            }
        }
    }

    #[test]
    fn membership_samplers() {
        let a = skew_repeated_entry_check(3, 3, 3, 20, 7).unwrap();
        assert!(a.holds());
        assert!(a.samples.iter().any(|s| s.ideal == MonoidKind::IS));
        let b = skew_column_sum_check(3, 2, 3, 20, 7).unwrap();
        assert_eq!(b.samples.len(), 20);
        assert!(b.holds());
    }
}
