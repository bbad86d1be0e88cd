//! Branching checks for `S_n ⊆ 𝓜(n)` and `𝓜(s) × 𝓜(n−s) → 𝓜(n)`, and the
//! pairwise invariant table separating the modules `R(n)^λ`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::characters::{module_character, specht_character, ClassFunction};
use crate::combinatorics::{enumerate_partitions, horizontal_strip_extensions, intermediate_partitions, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::functor::{build_r_module, traces, MonoidModule, Variant};
use crate::linalg::Subspace;
use crate::monoid::{MonoidKind, PartialTransformation};
use crate::rational::Rational;
use crate::schur::gl_branching_filtration;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Br1Result {
    pub lambda: Partition,
    pub n: usize,
    pub strips: Vec<Partition>,
    pub expected: ClassFunction,
    pub upper: ClassFunction,
    pub lower: ClassFunction,
}

impl Br1Result {
    pub fn holds(&self) -> bool {
        self.upper == self.expected && self.lower == self.expected
    }
}

/// `χ(R(n)^λ|_{S_n}) = Σ_{λ⁺ ∈ HS(λ,n)} χ^{λ⁺}`, and the same for `R(n)_λ`.
pub fn verify_br1(lambda: &Partition, n: usize) -> Result<Br1Result> {
    if lambda.size() > n {
        return Err(Error::Invalid(format!("|λ| = {} exceeds n = {n}", lambda.size())));
    }
    let strips = horizontal_strip_extensions(lambda, n);
    let expected = strips.iter().fold(ClassFunction::zero(n), |acc, l| acc.add(&specht_character(l)));
    let shape = SkewShape::straight(lambda.clone());
    let upper = module_character(&build_r_module(MonoidKind::PT, n, &shape, Variant::Upper)?)?;
    let lower = module_character(&build_r_module(MonoidKind::PT, n, &shape, Variant::Lower)?)?;
    Ok(Br1Result { lambda: lambda.clone(), n, strips, expected, upper, lower })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Br2Factor {
    pub nu: Partition,
    pub left_dim: usize,
    pub right_dim: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChainStep {
    /// Index of the step, `ν` written on the `λ` side (conjugate of the filtration index).
    pub nu: Partition,
    pub dim: usize,
    pub quotient_dim: usize,
    pub expected_quotient_dim: usize,
    pub stable: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Br2Result {
    pub kind: MonoidKind,
    pub shape: SkewShape,
    pub n: usize,
    pub s: usize,
    pub variant: Variant,
    pub dim: usize,
    pub factors: Vec<Br2Factor>,
    pub factor_sum: usize,
    pub chain: Option<Vec<ChainStep>>,
}

impl Br2Result {
    pub fn dimension_identity(&self) -> bool {
        self.dim == self.factor_sum
    }

    pub fn chain_ok(&self) -> bool {
        match &self.chain {
            None => true,
            Some(steps) => {
                steps.iter().all(|s| s.stable && s.quotient_dim == s.expected_quotient_dim)
                    && steps.last().map_or(self.dim == 0, |s| s.dim == self.dim)
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.dimension_identity() && self.chain_ok()
    }

    /// `ν` whose factor is nonzero.
    pub fn nonzero_factors(&self) -> BTreeSet<Partition> {
        self.factors.iter().filter(|f| f.left_dim * f.right_dim > 0).map(|f| f.nu.clone()).collect()
    }
}

fn r_dim(kind: MonoidKind, n: usize, outer: &Partition, inner: &Partition, variant: Variant) -> Result<usize> {
    let shape = SkewShape::new(outer.clone(), inner.clone())?;
    if n == 0 {
        return Ok(usize::from(shape.size() == 0));
    }
    Ok(build_r_module(kind, n, &shape, variant)?.dim())
}

/// Generators of `𝓜(s) × 𝓜(n−s)` embedded block-diagonally.
pub fn block_generators(kind: MonoidKind, n: usize, s: usize) -> Vec<PartialTransformation> {
    let ida = PartialTransformation::identity(s);
    let idb = PartialTransformation::identity(n - s);
    let mut out: Vec<_> = kind.generators(s).iter().map(|a| PartialTransformation::block_embed(a, &idb)).collect();
    out.extend(kind.generators(n - s).iter().map(|b| PartialTransformation::block_embed(&ida, b)));
    out
}

/// The chain `(M_ν + M″)/M″` inside `R(n)^{λ/μ}`, from the GL filtration of
/// `L_{λ′/μ′}(V_n)`.
pub fn pushed_chain(kind: MonoidKind, shape: &SkewShape, n: usize, s: usize) -> Result<Vec<ChainStep>> {
    let g = build_r_module(kind, n, shape, Variant::Upper)?;
    let filtration = gl_branching_filtration(shape, n, s)?;
    let gens: Vec<_> =
        block_generators(kind, n, s).iter().map(|a| g.act(a)).collect::<Result<Vec<_>>>()?;
    let mut steps = Vec::new();
    let mut prev = 0;
    for st in &filtration.steps {
        let pushed = push(&g, &st.span);
        let nu = st.nu.conjugate();
        let expected = r_dim(kind, s, &nu, shape.inner(), Variant::Upper)?
            * r_dim(kind, n - s, shape.outer(), &nu, Variant::Upper)?;
        let stable = gens.iter().all(|m| pushed.is_invariant_under(m));
        steps.push(ChainStep {
            nu,
            dim: pushed.dim(),
            quotient_dim: pushed.dim() - prev,
            expected_quotient_dim: expected,
            stable,
        });
        prev = pushed.dim();
    }
    Ok(steps)
}

fn push(g: &MonoidModule, span: &Subspace) -> Subspace {
    Subspace::from_vectors(g.dim(), span.rows().iter().map(|v| g.project(v)))
}

/// Dimension identity over `intermediate_partitions`, plus the structural
/// chain check for the upper module when `structural` is set.
pub fn verify_br2(
    kind: MonoidKind,
    shape: &SkewShape,
    n: usize,
    s: usize,
    variant: Variant,
    structural: bool,
) -> Result<Br2Result> {
    if s == 0 || s >= n {
        return Err(Error::Invalid(format!("need 1 ≤ s < n, got s = {s}, n = {n}")));
    }
    if kind == MonoidKind::Sym {
        return Err(Error::Invalid("branching to 𝓜(s) × 𝓜(n−s) is stated for is, pt and t".into()));
    }
    let dim = build_r_module(kind, n, shape, variant)?.dim();
    let mut factors = Vec::new();
    for nu in intermediate_partitions(shape.outer(), shape.inner(), s, n) {
        factors.push(Br2Factor {
            left_dim: r_dim(kind, s, &nu, shape.inner(), variant)?,
            right_dim: r_dim(kind, n - s, shape.outer(), &nu, variant)?,
            nu,
        });
    }
    let factor_sum = factors.iter().map(|f| f.left_dim * f.right_dim).sum();
    let chain = if structural && variant == Variant::Upper { Some(pushed_chain(kind, shape, n, s)?) } else { None };
    Ok(Br2Result { kind, shape: shape.clone(), n, s, variant, dim, factors, factor_sum, chain })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Br3Result {
    pub br2: Br2Result,
    pub predicted: BTreeSet<Partition>,
    pub observed: BTreeSet<Partition>,
}

impl Br3Result {
    pub fn holds(&self) -> bool {
        self.br2.dimension_identity() && self.br2.chain_ok() && self.predicted == self.observed
    }
}

/// `P(λ,μ)`: `μ ⊆ ν ⊆ λ` with `|ν| = |λ| − 1`.
pub fn one_smaller(shape: &SkewShape) -> BTreeSet<Partition> {
    crate::combinatorics::partitions_between(shape.outer(), shape.inner())
        .into_iter()
        .filter(|nu| nu.size() + 1 == shape.outer().size())
        .collect()
}

/// `s = n − 1`: the nonzero factors are `P(λ,μ)` when `r = n`, `P(λ,μ) ∪ {λ}` when `r < n`.
pub fn verify_br3(kind: MonoidKind, shape: &SkewShape, n: usize, variant: Variant, structural: bool) -> Result<Br3Result> {
    if n < 2 {
        return Err(Error::Invalid("restriction to 𝓜(n−1) needs n ≥ 2".into()));
    }
    if shape.size() > n {
        return Err(Error::Invalid(format!("|λ/μ| = {} exceeds n = {n}", shape.size())));
    }
    let br2 = verify_br2(kind, shape, n, n - 1, variant, structural)?;
    let mut predicted = one_smaller(shape);
    if shape.size() < n {
        predicted.insert(shape.outer().clone());
    }
    let observed = br2.nonzero_factors();
    Ok(Br3Result { br2, predicted, observed })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairEntry {
    pub lambda: Partition,
    pub mu: Partition,
    pub distinct: bool,
    /// The first invariant that separates the pair.
    pub separated_by: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NonIsomorphismTable {
    pub kind: MonoidKind,
    pub n: usize,
    pub rmax: usize,
    pub partitions: Vec<Partition>,
    pub entries: Vec<PairEntry>,
}

impl NonIsomorphismTable {
    /// Whether `(λ, μ)` is one of the pairs `((r), (n−r))` that need not be separated.
    pub fn is_exceptional(&self, lambda: &Partition, mu: &Partition) -> bool {
        (lambda.is_row() || lambda.size() == 0)
            && (mu.is_row() || mu.size() == 0)
            && lambda.size() + mu.size() == self.n
    }

    /// Every distinct pair outside the exceptional ones is separated.
    pub fn only_exceptional_pairs_coincide(&self) -> bool {
        self.entries
            .iter()
            .filter(|e| e.lambda != e.mu)
            .all(|e| e.distinct || self.is_exceptional(&e.lambda, &e.mu))
    }

    pub fn all_distinct_pairs_separated(&self) -> bool {
        self.entries.iter().filter(|e| e.lambda != e.mu).all(|e| e.distinct)
    }

    pub fn unseparated(&self) -> Vec<(Partition, Partition)> {
        self.entries.iter().filter(|e| e.lambda != e.mu && !e.distinct).map(|e| (e.lambda.clone(), e.mu.clone())).collect()
    }
}

struct Invariants {
    dim: usize,
    character: ClassFunction,
    idempotent_traces: Vec<Rational>,
}

/// Pairwise comparison of dims, `S_n` characters and test idempotent traces
/// over all `λ ⊢ r ≤ rmax`.
pub fn nonisomorphism_table(kind: MonoidKind, n: usize, rmax: usize) -> Result<NonIsomorphismTable> {
    if rmax > n {
        return Err(Error::Invalid(format!("rmax = {rmax} exceeds n = {n}")));
    }
    let partitions: Vec<Partition> = (0..=rmax).flat_map(|r| enumerate_partitions(r, None)).collect();
    let idem = kind.test_idempotents(n);
    let mut inv = BTreeMap::new();
    for l in &partitions {
        let m = build_r_module(kind, n, &SkewShape::straight(l.clone()), Variant::Upper)?;
        inv.insert(
            l.clone(),
            Invariants { dim: m.dim(), character: module_character(&m)?, idempotent_traces: traces(&m, &idem)? },
        );
    }
    let mut entries = Vec::new();
    for a in &partitions {
        for b in &partitions {
            let (x, y) = (&inv[a], &inv[b]);
            let separated_by = if x.dim != y.dim {
                Some("dimension")
            } else if x.character != y.character {
                Some("character")
            } else if x.idempotent_traces != y.idempotent_traces {
                Some("idempotent_traces")
            } else {
                None
            };
            entries.push(PairEntry {
                lambda: a.clone(),
                mu: b.clone(),
                distinct: separated_by.is_some(),
                separated_by: separated_by.map(str::to_string),
            });
        }
    }
    Ok(NonIsomorphismTable { kind, n, rmax, partitions, entries })
}
