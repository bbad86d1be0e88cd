//! Runners for the acceptance suite. Each criterion sweeps a parameter range,
//! counts checks and collects a label for every failure. Errors raised while
//! computing count as failures.

use std::time::Instant;

use num_bigint::BigInt;
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::branching::{nonisomorphism_table, verify_br1, verify_br2};
use crate::cauchy::{cauchy_filtration_check, graded_quotient_dim, skew_filtration_check, theorem_m2_check, ChainOptions};
use crate::combinatorics::{
    count_standard, count_tableaux, enumerate_partitions, partitions_between, skew_shapes, Partition, SkewShape,
    TableauKind,
};
use crate::error::Result;
use crate::functor::{build_r_module, theorem_main1_check, Variant};
use crate::harmonics::{check_gr_equals_j, default_dmax};
use crate::meataxe::{irreducibility_test, Irreducibility, DEFAULT_ROUNDS};
use crate::monoid::{enumerate_monoid, MonoidKind};
use crate::poly::Flavor;
use crate::rational::{binomial, factorial};
use crate::report::{Report, Status};
use crate::schur::{image_rank_over_all_tableaux, schur_module, weyl_module, MapKind};
use crate::skew::{skew_column_sum_check, skew_repeated_entry_check, skew_quotient_dim};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Every criterion at its stated sizes except the `n = 4` harmonics.
    Fast,
    Slow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub seed: u64,
    /// Samples per membership check.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { suite: Suite::Fast, seed: crate::meataxe::DEFAULT_SEED, samples: 100 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: String,
    pub status: Status,
    pub checks: usize,
    pub failures: Vec<String>,
    pub inconclusive: Vec<String>,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        let mut s = format!("[{}] {:>2} {}: {} checks", self.status, self.id, self.name, self.checks);
        if !self.failures.is_empty() {
            s += &format!(", {} failed (first: {})", self.failures.len(), self.failures[0]);
        }
        if !self.inconclusive.is_empty() {
            s += &format!(", {} inconclusive", self.inconclusive.len());
        }
        s
    }

    pub fn report(&self, cfg: &VerifyConfig) -> Result<Report> {
        Report::new(format!("criterion {}: {}", self.id, self.name), json!(cfg), self.status, self)
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    inconclusive: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, label: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(label());
        }
    }

    fn check_result(&mut self, r: Result<bool>, label: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, label),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: error: {e}", label()));
            }
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
        self.inconclusive.extend(other.inconclusive);
    }

    fn finish(self, id: u8, name: &str) -> CriterionResult {
        let status = if !self.failures.is_empty() {
            Status::Fail
        } else if !self.inconclusive.is_empty() {
            Status::Inconclusive
        } else {
            Status::Pass
        };
        CriterionResult {
            id,
            name: name.to_string(),
            status,
            checks: self.checks,
            failures: self.failures,
            inconclusive: self.inconclusive,
        }
    }
}

/// Runs the per-item closure (in parallel with the `parallel` feature) and
/// merges the tallies in order.
fn sweep<T: Sync>(items: &[T], f: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    #[cfg(feature = "parallel")]
    let iter = items.par_iter();
    #[cfg(not(feature = "parallel"))]
    let iter = items.iter();
    let parts: Vec<Tally> = iter
        .map(|x| {
            let mut t = Tally::default();
            f(x, &mut t);
            t
        })
        .collect();
    let mut out = Tally::default();
    for p in parts {
        out.merge(p);
    }
    out
}

pub const CRITERIA: [(u8, &str); 11] = [
    (1, "monoid cardinalities"),
    (2, "tableau bases and R dimensions"),
    (3, "symmetrized functor vs weight spaces"),
    (4, "restriction to the symmetric group"),
    (5, "restriction to block submonoids"),
    (6, "irreducibility"),
    (7, "non-isomorphism"),
    (8, "Cauchy quotients"),
    (9, "orbit harmonics"),
    (10, "skew Cauchy quotients"),
    (11, "combinatorial identities"),
];

pub fn criterion_name(id: u8) -> &'static str {
    CRITERIA.iter().find(|(i, _)| *i == id).map_or("unknown", |(_, s)| s)
}

pub fn run_criterion(id: u8, cfg: &VerifyConfig) -> CriterionResult {
    let tally = match id {
        1 => cardinalities(),
        2 => tableau_bases(),
        3 => weight_spaces(),
        4 => branching1(),
        5 => branching2(),
        6 => irreducibility(cfg.seed),
        7 => nonisomorphism(),
        8 => cauchy(),
        9 => harmonics(cfg.suite),
        10 => skew(cfg),
        11 => identities(),
        _ => {
            let mut t = Tally::default();
            t.check(false, || format!("no criterion {id}"));
            t
        }
    };
    tally.finish(id, criterion_name(id))
}

/// Runs the criteria one after another, calling `on_result` as each finishes.
pub fn run_all(cfg: &VerifyConfig, mut on_result: impl FnMut(&CriterionResult, f64)) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|(id, _)| {
            let start = Instant::now();
            let r = run_criterion(*id, cfg);
            on_result(&r, start.elapsed().as_secs_f64());
            r
        })
        .collect()
}

fn cardinalities() -> Tally {
    let mut t = Tally::default();
    for n in 1..=5u64 {
        let is: BigInt = (0..=n).map(|r| binomial(n, r) * binomial(n, r) * factorial(r)).sum();
        let expected = [
            (MonoidKind::IS, is),
            (MonoidKind::PT, BigInt::from(n + 1).pow(n as u32)),
            (MonoidKind::T, BigInt::from(n).pow(n as u32)),
            (MonoidKind::Sym, factorial(n)),
        ];
        for (kind, want) in expected {
            let got = enumerate_monoid(kind, n as usize).map(|v| BigInt::from(v.len())).map_err(crate::Error::from);
            t.check_result(got.map(|g| g == want && kind.cardinality(n as usize) == want), || format!("{kind} n={n}"));
        }
    }
    t
}

fn tableau_bases() -> Tally {
    let shapes = skew_shapes(7, 5);
    sweep(&shapes, |shape, t| {
        let r = shape.size() as u64;
        let f = BigInt::from(count_standard(shape));
        for n in 1..=4 {
            let sst = count_tableaux(shape, n, TableauKind::Semistandard);
            t.check_result(image_rank_over_all_tableaux(shape, n, MapKind::D).map(|k| k == sst), || format!("rank d {shape} n={n}"));
            let csst = count_tableaux(shape, n, TableauKind::CoSemistandard);
            t.check_result(image_rank_over_all_tableaux(shape, n, MapKind::DPrime).map(|k| k == csst), || {
                format!("rank d′ {shape} n={n}")
            });
            let want = binomial(n as u64, r) * &f;
            for v in [Variant::Upper, Variant::Lower] {
                t.check_result(build_r_module(MonoidKind::PT, n, shape, v).map(|m| BigInt::from(m.dim()) == want), || {
                    format!("dim R {shape} n={n} {v:?}")
                });
            }
        }
    })
}

fn weight_spaces() -> Tally {
    let mut cases = Vec::new();
    for r in 1..=3 {
        for l in enumerate_partitions(r, None) {
            for n in r..=4 {
                cases.push((l.clone(), n));
            }
        }
    }
    sweep(&cases, |(l, n), t| {
        let shape = SkewShape::straight(l.clone());
        for (name, m) in [("L", schur_module(&shape, *n)), ("K", weyl_module(&shape, *n))] {
            t.check_result(m.and_then(|m| theorem_main1_check(&m)).map(|r| r.holds()), || format!("{name}_{l} n={n}"));
        }
    })
}

fn branching1() -> Tally {
    let mut cases = Vec::new();
    for n in 1..=5 {
        for r in 0..=n {
            for l in enumerate_partitions(r, None) {
                cases.push((l, n));
            }
        }
    }
    sweep(&cases, |(l, n), t| t.check_result(verify_br1(l, *n).map(|r| r.holds()), || format!("λ={l} n={n}")))
}

fn branching2() -> Tally {
    let mut cases = Vec::new();
    for shape in skew_shapes(4, 4) {
        for n in 2..=5 {
            for s in 1..n {
                for kind in MonoidKind::TRANSFORMATION_KINDS {
                    cases.push((shape.clone(), n, s, kind));
                }
            }
        }
    }
    sweep(&cases, |(shape, n, s, kind), t| {
        for v in [Variant::Upper, Variant::Lower] {
            let structural = *n <= 3;
            t.check_result(verify_br2(*kind, shape, *n, *s, v, structural).map(|r| r.holds()), || {
                format!("{kind} {shape} n={n} s={s} {v:?}")
            });
        }
    })
}

fn irreducibility(seed: u64) -> Tally {
    let mut cases = Vec::new();
    for r in 0..=3 {
        for l in enumerate_partitions(r, None) {
            cases.push((MonoidKind::IS, l.clone()));
            if r == 0 || !l.is_column() {
                cases.push((MonoidKind::T, l));
            }
        }
    }
    sweep(&cases, |(kind, l), t| {
        let label = || format!("{kind}_3 λ={l}");
        let outcome = (|| -> Result<Irreducibility> {
            let m = build_r_module(*kind, 3, &SkewShape::straight(l.clone()), Variant::Upper)?;
            let algebra = enumerate_monoid(*kind, 3)?.iter().map(|a| m.act(a)).collect::<Result<Vec<_>>>()?;
            let gens: Vec<_> = m.generator_matrices()?.into_iter().map(|(_, x)| x).collect();
            irreducibility_test(&algebra, &gens, DEFAULT_ROUNDS, seed)
        })();
        match outcome {
            Ok(Irreducibility::Inconclusive { .. }) => {
                t.checks += 1;
                t.inconclusive.push(label());
            }
            other => t.check_result(other.map(|o| o.is_irreducible()), label),
        }
    })
}

fn nonisomorphism() -> Tally {
    let cases: Vec<(MonoidKind, usize)> =
        [3, 4].into_iter().flat_map(|n| MonoidKind::TRANSFORMATION_KINDS.map(|k| (k, n))).collect();
    sweep(&cases, |(kind, n), t| {
        let table = nonisomorphism_table(*kind, *n, *n);
        let strict = *kind != MonoidKind::T;
        t.check_result(
            table.map(|tb| tb.only_exceptional_pairs_coincide() && (!strict || tb.all_distinct_pairs_separated())),
            || format!("{kind} n={n}"),
        );
    })
}

fn cauchy() -> Tally {
    let mut dims = Vec::new();
    for kind in MonoidKind::TRANSFORMATION_KINDS {
        for m in 1..=4 {
            for n in 1..=4 {
                for r in 0..=n + 1 {
                    dims.push((kind, m, n, r));
                }
            }
        }
    }
    let mut t = sweep(&dims, |(kind, m, n, r), t| {
        t.check_result(graded_quotient_dim(Flavor::Commuting, *kind, *m, *n, *r).map(|q| q.holds()), || {
            format!("dim {kind} m={m} n={n} r={r}")
        })
    });
    t.merge(sweep(&chain_cases(), |(kind, m, n, r), t| {
        let c = match kind {
            Some(k) => theorem_m2_check(*k, *m, *n, *r, ChainOptions::full()),
            None => cauchy_filtration_check(*m, *n, *r, ChainOptions::full()),
        };
        t.check_result(c.map(|c| c.holds()), || format!("chain {kind:?} m={m} n={n} r={r}"));
    }));
    t
}

fn chain_cases() -> Vec<(Option<MonoidKind>, usize, usize, usize)> {
    let mut out = Vec::new();
    for kind in [None, Some(MonoidKind::IS), Some(MonoidKind::PT), Some(MonoidKind::T)] {
        for m in 1..=3 {
            for n in 1..=3 {
                for r in 0..=3 {
                    out.push((kind, m, n, r));
                }
            }
        }
    }
    out
}

fn harmonics(suite: Suite) -> Tally {
    let top = if suite == Suite::Slow { 4 } else { 3 };
    let cases: Vec<(MonoidKind, usize)> =
        (1..=top).flat_map(|n| MonoidKind::TRANSFORMATION_KINDS.map(|k| (k, n))).collect();
    sweep(&cases, |(kind, n), t| {
        t.check_result(check_gr_equals_j(*kind, *n, default_dmax(*n), true).map(|r| r.holds()), || format!("{kind} n={n}"))
    })
}

fn skew(cfg: &VerifyConfig) -> Tally {
    let mut dims = Vec::new();
    for kind in MonoidKind::TRANSFORMATION_KINDS {
        for m in 1..=3 {
            for n in 1..=3 {
                for r in 0..=n + 1 {
                    dims.push((kind, m, n, r));
                }
            }
        }
    }
    let mut t = sweep(&dims, |(kind, m, n, r), t| {
        t.check_result(skew_quotient_dim(*kind, *m, *n, *r).map(|q| q.holds()), || format!("dim {kind} m={m} n={n} r={r}"));
        t.check_result(crate::cauchy::theorem_skew_c_check(*kind, *m, *n, *r, ChainOptions::full()).map(|c| c.holds()), || {
            format!("chain {kind} m={m} n={n} r={r}")
        });
    });
    for m in 1..=3 {
        for n in 1..=3 {
            for r in 0..=4 {
                t.check_result(skew_filtration_check(m, n, r, ChainOptions::full()).map(|c| c.holds()), || {
                    format!("unquotiented m={m} n={n} r={r}")
                });
            }
        }
    }
    t.check_result(skew_repeated_entry_check(3, 3, 3, cfg.samples, cfg.seed).map(|r| r.holds() && r.samples.len() == cfg.samples), || {
        "repeated entries".into()
    });
    t.check_result(
        skew_column_sum_check(3, 3, 3, cfg.samples, cfg.seed).map(|r| r.holds() && r.samples.len() == cfg.samples),
        || "column sums".into(),
    );
    t
}

fn identities() -> Tally {
    let mut t = Tally::default();
    let f = |outer: &Partition, inner: &Partition| count_standard(&SkewShape::new(outer.clone(), inner.clone()).unwrap());
    for shape in skew_shapes(5, 5) {
        let (lambda, mu) = (shape.outer(), shape.inner());
        let size = shape.size();
        let between = partitions_between(lambda, mu);
        for k in 0..=size {
            let sum: usize =
                between.iter().filter(|nu| nu.size() == mu.size() + k).map(|nu| f(nu, mu) * f(lambda, nu)).sum();
            t.check(sum == f(lambda, mu), || format!("Σ f f {shape} t={k}"));
        }
        for n in size..=5 {
            for s in 0..=n {
                let sum: BigInt = between
                    .iter()
                    .map(|nu| {
                        let a = (nu.size() - mu.size()) as u64;
                        let b = (lambda.size() - nu.size()) as u64;
                        binomial(s as u64, a) * f(nu, mu) * binomial((n - s) as u64, b) * f(lambda, nu)
                    })
                    .sum();
                t.check(sum == binomial(n as u64, size as u64) * f(lambda, mu), || format!("aggregation {shape} n={n} s={s}"));
            }
        }
    }
    for r in 0..=6u64 {
        let sum: BigInt =
            enumerate_partitions(r as usize, None).iter().map(|l| BigInt::from(count_standard(&SkewShape::straight(l.clone()))).pow(2)).sum();
        t.check(sum == factorial(r), || format!("Σ (f^λ)² r={r}"));
    }
    for m in 1..=4usize {
        for r in 0..=4usize {
            let sum: usize = enumerate_partitions(r, None)
                .iter()
                .map(|l| {
                    let conj = SkewShape::straight(l.conjugate());
                    count_tableaux(&conj, m - 1, TableauKind::Semistandard) * count_standard(&SkewShape::straight(l.clone()))
                })
                .sum();
            t.check(sum == (m - 1).pow(r as u32), || format!("Σ dim L(U_m) f m={m} r={r}"));
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_criteria_pass() {
        let cfg = VerifyConfig::default();
        for id in [1, 11] {
            let r = run_criterion(id, &cfg);
            assert_eq!(r.status, Status::Pass, "{}", r.line());
            assert!(r.checks > 0);
        }
    }

    #[test]
    fn unknown_criterion_fails() {
        let r = run_criterion(42, &VerifyConfig::default());
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn report_envelope() {
        let cfg = VerifyConfig::default();
        let r = run_criterion(1, &cfg).report(&cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.parameters["suite"], "fast");
    }
}
