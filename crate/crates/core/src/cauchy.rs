//! Cauchy filtrations of `k[x_{m×n}]` and `k⟨y_{m×n}⟩` by bitableaux, and
//! their images modulo the ideals `J_{m,n}(Z)`.
//!
//! Each chain is computed in the survivor coordinates of the degree-`r`
//! ideal component (see [`IdealComponent`]): `W_λ = J_r + span{(S|T) : shape ≥ λ}`.
//! The step at `λ` compares `W_λ / W_{>λ}` against the expected tensor factor.
//! In the commuting ring the factor at `λ` involves `R^{λ′}` on both sides
//! (the minors of shape `λ` carry `L_λ`, whose 0/1 part is `R^{λ′}`). For
//! `IS` with `m = n = r = 2` the steps are `λ = (2)`: `1·1` and
//! `λ = (1,1)`: `1·1`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_partitions, Partition, SkewShape, Tableau};
use crate::error::{consistency, Error, Result};
use crate::functor::{build_r_module, MonoidModule, Variant};
use crate::linalg::{RationalMatrix, SpanSolver, SparseVec, Subspace};
use crate::monoid::{MonoidKind, PartialTransformation};
use crate::poly::{count_monomials, monomial_string, monomials, Flavor, HomogeneousIdeal, IdealComponent, Polynomial};
use crate::rational::{binomial, factorial, Rational};
use crate::schur::{build_standard_schur_module, schur_module, weyl_module, LabeledModule, StandardSchurModule};

fn transformation_kind(kind: MonoidKind) -> Result<MonoidKind> {
    match kind {
        MonoidKind::Sym => Err(Error::Invalid("the Cauchy ideals are defined for is, pt and t".into())),
        k => Ok(k),
    }
}

/// Generators of `J_{m,n}(kind)` (or `J′` in the exterior flavor), deduplicated.
/// Same-column products for every kind, same-row products for `IS`, column
/// sums for `T`. Squares are included in the commuting ring and vanish in the
/// exterior one.
pub fn ideal_generators(flavor: Flavor, kind: MonoidKind, m: usize, n: usize) -> Result<Vec<Polynomial>> {
    let kind = transformation_kind(kind)?;
    if m == 0 || n == 0 {
        return Err(Error::Invalid("the variable matrix needs m, n ≥ 1".into()));
    }
    let x = |i, j| Polynomial::var(flavor, m, n, i, j);
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut push = |p: Polynomial| {
        if !p.is_zero() && !gens.contains(&p) {
            gens.push(p);
        }
    };
    for j in 0..n {
        for i in 0..m {
            for i2 in i..m {
                push(x(i, j).mul(&x(i2, j)));
            }
        }
    }
    if kind == MonoidKind::IS {
        for i in 0..m {
            for j in 0..n {
                for j2 in j..n {
                    push(x(i, j).mul(&x(i, j2)));
                }
            }
        }
    }
    if kind == MonoidKind::T {
        for j in 0..n {
            push((0..m).fold(Polynomial::zero(flavor, m, n), |acc, i| acc.add(&x(i, j))));
        }
    }
    Ok(gens)
}

/// `J(kind)`, or the zero ideal for `None`.
pub fn graded_ideal(flavor: Flavor, kind: Option<MonoidKind>, m: usize, n: usize) -> Result<HomogeneousIdeal> {
    match kind {
        Some(k) => HomogeneousIdeal::new(flavor, m, n, ideal_generators(flavor, k, m, n)?),
        None => Ok(HomogeneousIdeal::zero(flavor, m, n)),
    }
}

/// `C(m,r)C(n,r)r!`, `C(n,r)m^r` and `C(n,r)(m−1)^r`.
pub fn closed_form_dim(kind: MonoidKind, m: usize, n: usize, r: usize) -> Result<BigInt> {
    let (m64, n64, r64) = (m as u64, n as u64, r as u64);
    Ok(match transformation_kind(kind)? {
        MonoidKind::IS => binomial(m64, r64) * binomial(n64, r64) * factorial(r64),
        MonoidKind::PT => binomial(n64, r64) * BigInt::from(m).pow(r as u32),
        MonoidKind::T => binomial(n64, r64) * BigInt::from(m.saturating_sub(1)).pow(r as u32),
        MonoidKind::Sym => unreachable!(),
    })
}

fn small(v: BigInt) -> Result<u64> {
    u64::try_from(&v).map_err(|_| Error::Invalid(format!("{v} does not fit in 64 bits")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDim {
    pub flavor: Flavor,
    pub kind: MonoidKind,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub computed: usize,
    pub closed_form: u64,
    /// Monomials spanning the quotient.
    pub standard_monomials: Vec<String>,
}

impl QuotientDim {
    pub fn holds(&self) -> bool {
        self.computed as u64 == self.closed_form
    }
}

/// `dim (ring/J)_r` by elimination, next to the closed form.
pub fn graded_quotient_dim(flavor: Flavor, kind: MonoidKind, m: usize, n: usize, r: usize) -> Result<QuotientDim> {
    let comp = graded_ideal(flavor, Some(kind), m, n)?.component(r);
    Ok(QuotientDim {
        flavor,
        kind,
        m,
        n,
        r,
        computed: comp.quotient_dim(),
        closed_form: small(closed_form_dim(kind, m, n, r)?)?,
        standard_monomials: comp.standard_monomials().iter().map(|k| monomial_string(flavor, n, k)).collect(),
    })
}

fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, bool)> {
    crate::monoid::permutations(k)
        .into_iter()
        .map(|p| {
            let v = p.as_permutation().unwrap();
            let inv = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| v[a] > v[b]).count();
            (v, inv % 2 == 1)
        })
        .collect()
}

/// `(S|T)`: in the commuting ring the product over rows of the minors with
/// rows from `S` and columns from `T`; in the exterior ring the product over
/// rows of `Σ_h y_{s_1,h_1}⋯y_{s_k,h_k}`, `h` running over the distinct
/// rearrangements of the row of `T`.
pub fn bitableau(flavor: Flavor, s: &Tableau, t: &Tableau, m: usize, n: usize) -> Result<Polynomial> {
    if s.shape() != t.shape() {
        return Err(crate::combinatorics::TableauError::ShapeMismatch { expected: s.shape().clone(), found: t.shape().clone() }.into());
    }
    if !s.shape().is_straight() {
        return Err(Error::Invalid("bitableaux need a straight shape".into()));
    }
    s.check_entries(m)?;
    t.check_entries(n)?;
    let mut out = Polynomial::constant(flavor, m, n, Rational::one());
    for (srow, trow) in s.rows().iter().zip(t.rows()) {
        let mut row = Polynomial::zero(flavor, m, n);
        let key = |h: &[u8]| -> Vec<u8> {
            srow.iter().zip(h).map(|(&a, &b)| ((a as usize - 1) * n + (b as usize - 1)) as u8).collect()
        };
        match flavor {
            Flavor::Commuting => {
                for (sigma, odd) in permutations_with_sign(trow.len()) {
                    let h: Vec<u8> = sigma.iter().map(|&k| trow[k]).collect();
                    row.add_term(key(&h), &Rational::from_int(if odd { -1 } else { 1 }));
                }
            }
            Flavor::Exterior => {
                for h in crate::schur::distinct_rearrangements(trow) {
                    row.add_term(key(&h), &Rational::one());
                }
            }
        }
        out = out.mul(&row);
        if out.is_zero() {
            break;
        }
    }
    Ok(out)
}

/// Fillings of `λ` row by row, each row increasing (strictly or weakly).
/// Up to sign these span the same space as all fillings.
pub fn row_fillings(lambda: &Partition, n: usize, strict: bool) -> Vec<Tableau> {
    let shape = SkewShape::straight(lambda.clone());
    let flavor = if strict { Flavor::Exterior } else { Flavor::Commuting };
    let mut out: Vec<Vec<Vec<u8>>> = vec![Vec::new()];
    for &len in lambda.parts() {
        let choices: Vec<Vec<u8>> = monomials(flavor, n, len).into_iter().map(|r| r.iter().map(|&v| v + 1).collect()).collect();
        out = out
            .into_iter()
            .flat_map(|rows| {
                choices.iter().map(move |c| {
                    let mut r = rows.clone();
                    r.push(c.clone());
                    r
                })
            })
            .collect();
    }
    out.into_iter().map(|rows| Tableau::new(shape.clone(), rows).expect("row lengths match")).collect()
}

/// A module appearing as one side of a chain factor.
enum Factor {
    R(MonoidModule),
    Plain(Arc<LabeledModule>),
    Standard(StandardSchurModule),
}

impl Factor {
    fn dim(&self) -> usize {
        match self {
            Factor::R(m) => m.dim(),
            Factor::Plain(m) => m.dim(),
            Factor::Standard(m) => m.dim(),
        }
    }

    fn trace(&self, p: &PartialTransformation) -> Result<Rational> {
        if self.dim() == 0 {
            return Ok(Rational::zero());
        }
        Ok(match self {
            Factor::R(m) => m.act_any(p)?.trace(),
            Factor::Plain(m) => m.act_map(p)?.trace(),
            Factor::Standard(m) => m.act_map(p)?.trace(),
        })
    }
}

fn factors(flavor: Flavor, kind: Option<MonoidKind>, m: usize, n: usize, lambda: &Partition) -> Result<(Factor, Factor)> {
    let straight = SkewShape::straight(lambda.clone());
    let conj = SkewShape::straight(lambda.conjugate());
    let left = match kind {
        Some(MonoidKind::IS) => Factor::R(build_r_module(MonoidKind::IS, m, &conj, Variant::Upper)?),
        Some(MonoidKind::T) => Factor::Standard(build_standard_schur_module(lambda, m)?),
        _ => Factor::Plain(schur_module(&straight, m)?),
    };
    let right = match (kind, flavor) {
        (None, Flavor::Commuting) => Factor::Plain(schur_module(&straight, n)?),
        (None, Flavor::Exterior) => Factor::Plain(weyl_module(&straight, n)?),
        (Some(k), Flavor::Commuting) => Factor::R(build_r_module(k, n, &conj, Variant::Upper)?),
        (Some(k), Flavor::Exterior) => Factor::R(build_r_module(k, n, &straight, Variant::Lower)?),
    };
    Ok((left, right))
}

/// Generators of the acting pair, as (row operator, column operator). `GL_m`
/// is represented by `S_m` generators, a diagonal scaling and a transvection;
/// the unquotiented ring uses these on both sides plus the `PT` generators.
pub fn acting_pair_generators(kind: Option<MonoidKind>, m: usize, n: usize) -> Vec<(RationalMatrix, RationalMatrix)> {
    fn gl_spot(k: usize) -> Vec<RationalMatrix> {
        let mut out: Vec<RationalMatrix> = MonoidKind::Sym.generators(k).iter().map(|g| g.matrix_of()).collect();
        let mut d = RationalMatrix::identity(k);
        d.set(0, 0, Rational::from_int(2));
        out.push(d);
        if k >= 2 {
            let mut u = RationalMatrix::identity(k);
            u.set(0, 1, Rational::one());
            out.push(u);
        }
        out
    }
    let monoid = |kind: MonoidKind, k: usize| -> Vec<RationalMatrix> { kind.generators(k).iter().map(|g| g.matrix_of()).collect() };
    let (left, right) = match kind {
        Some(MonoidKind::IS) => (monoid(MonoidKind::IS, m), monoid(MonoidKind::IS, n)),
        Some(MonoidKind::PT) => (gl_spot(m), monoid(MonoidKind::PT, n)),
        Some(MonoidKind::T) => (monoid(MonoidKind::Sym, m), monoid(MonoidKind::T, n)),
        _ => {
            let both = |k| {
                let mut v = gl_spot(k);
                v.extend(monoid(MonoidKind::PT, k));
                v
            };
            (both(m), both(n))
        }
    };
    let (idm, idn) = (RationalMatrix::identity(m), RationalMatrix::identity(n));
    left.into_iter().map(|a| (a, idn.clone())).chain(right.into_iter().map(|b| (idm.clone(), b))).collect()
}

/// Elements used for trace comparisons on each side: one permutation per
/// cycle type plus the test idempotents where the side is a monoid.
fn trace_elements(kind: Option<MonoidKind>, m: usize, n: usize) -> (Vec<PartialTransformation>, Vec<PartialTransformation>) {
    let perms = |k: usize| -> Vec<PartialTransformation> {
        enumerate_partitions(k, None).iter().map(PartialTransformation::permutation_of_cycle_type).collect()
    };
    let mut left = perms(m);
    let mut right = perms(n);
    match kind {
        Some(MonoidKind::T) => right.extend(MonoidKind::T.test_idempotents(n)),
        Some(k @ (MonoidKind::IS | MonoidKind::PT)) => {
            left.extend(k.test_idempotents(m));
            right.extend(k.test_idempotents(n));
        }
        _ => {
            left.extend(MonoidKind::PT.test_idempotents(m));
            right.extend(MonoidKind::PT.test_idempotents(n));
        }
    }
    (left, right)
}

/// Trace of `act` on `upper / lower` (both stable, `lower ⊆ upper`).
fn subquotient_trace(
    comp: &IdealComponent,
    lower: &Subspace,
    upper: &Subspace,
    act: &dyn Fn(&Polynomial) -> Polynomial,
) -> Result<Rational> {
    let mut ext = lower.clone();
    let mut complement = Vec::new();
    for v in upper.rows() {
        if ext.insert(v) {
            complement.push(v.clone());
        }
    }
    if complement.is_empty() {
        return Ok(Rational::zero());
    }
    let k0 = lower.rows().len();
    let spanning: Vec<SparseVec> = lower.rows().iter().cloned().chain(complement.iter().cloned()).collect();
    let solver = SpanSolver::new(upper.ambient_dim(), &spanning);
    let mut tr = Rational::zero();
    for (i, c) in complement.iter().enumerate() {
        let img = comp.coords(&act(&comp.polynomial_of(c)));
        let coeffs = solver.solve_sparse(&img).ok_or_else(|| consistency("chain subspace is not stable"))?;
        tr += &coeffs.get(k0 + i);
    }
    Ok(tr)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainOptions {
    /// Check every chain subspace against the acting pair's generators.
    pub invariance: bool,
    /// Compare traces on each step with the product of factor traces.
    pub characters: bool,
}

impl ChainOptions {
    pub fn full() -> Self {
        ChainOptions { invariance: true, characters: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub lambda: Partition,
    /// `dim (M_λ + J)/J`.
    pub dim: usize,
    pub quotient_dim: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    pub expected_dim: usize,
    pub invariant: Option<bool>,
    pub characters_match: Option<bool>,
    #[serde(skip)]
    trace_vector: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CauchyChain {
    pub flavor: Flavor,
    /// `None` for the ring itself.
    pub kind: Option<MonoidKind>,
    pub m: usize,
    pub n: usize,
    pub r: usize,
    /// `dim (ring/J)_r` by elimination.
    pub total_dim: usize,
    /// Closed form for `dim (ring/J)_r`, or the monomial count.
    pub expected_total: u64,
    pub steps: Vec<ChainStep>,
    pub ideal_invariant: Option<bool>,
    /// For `IS` with characters on: the nonzero steps have pairwise distinct traces.
    pub multiplicity_free: Option<bool>,
}

impl CauchyChain {
    pub fn steps_match(&self) -> bool {
        self.steps.iter().all(|s| s.quotient_dim == s.expected_dim)
    }

    pub fn exhausts(&self) -> bool {
        self.steps.last().map_or(self.total_dim == 0, |s| s.dim == self.total_dim)
    }

    pub fn holds(&self) -> bool {
        self.total_dim as u64 == self.expected_total
            && self.steps_match()
            && self.exhausts()
            && self.steps.iter().all(|s| s.invariant != Some(false) && s.characters_match != Some(false))
            && self.ideal_invariant != Some(false)
            && self.multiplicity_free != Some(false)
    }
}

/// Whether `g·J ⊆ J` for every acting generator, checked on the generators of `J`.
pub fn ideal_is_invariant(ideal: &HomogeneousIdeal, pair: &[(RationalMatrix, RationalMatrix)]) -> bool {
    let mut comps: HashMap<usize, IdealComponent> = HashMap::new();
    for g in &ideal.generators {
        let d = g.degree().unwrap_or(0);
        let comp = comps.entry(d).or_insert_with(|| ideal.component(d));
        for (a, b) in pair {
            let img = g.act_pair(a, b);
            if !comp.contains(&img) {
                return false;
            }
        }
    }
    true
}

/// Builds the chain `(M_λ + J)/J` over `λ ⊢ r` in decreasing lexicographic order.
pub fn cauchy_chain(
    flavor: Flavor,
    kind: Option<MonoidKind>,
    m: usize,
    n: usize,
    r: usize,
    opts: ChainOptions,
) -> Result<CauchyChain> {
    if m == 0 || n == 0 {
        return Err(Error::Invalid("the variable matrix needs m, n ≥ 1".into()));
    }
    let ideal = graded_ideal(flavor, kind, m, n)?;
    let comp = ideal.component(r);
    let expected_total = match kind {
        Some(k) => small(closed_form_dim(k, m, n, r)?)?,
        None => count_monomials(flavor, m * n, r) as u64,
    };
    let pair = acting_pair_generators(kind, m, n);
    let (left_elems, right_elems) = trace_elements(kind, m, n);
    let j_part = comp.reduced.clone();
    let mut w = j_part.clone();
    let full = comp.survivors.len();
    let mut steps = Vec::new();
    for lambda in enumerate_partitions(r, None) {
        let prev = w.clone();
        if w.dim() < full {
            let t_strict = flavor == Flavor::Commuting;
            let ts = row_fillings(&lambda, n, t_strict);
            'outer: for s in row_fillings(&lambda, m, true) {
                for t in &ts {
                    let p = bitableau(flavor, &s, t, m, n)?;
                    w.insert(&comp.coords(&p));
                    if w.dim() == full {
                        break 'outer;
                    }
                }
            }
        }
        let (left, right) = factors(flavor, kind, m, n, &lambda)?;
        let mut step = ChainStep {
            lambda: lambda.clone(),
            dim: w.dim() - j_part.dim(),
            quotient_dim: w.dim() - prev.dim(),
            left_dim: left.dim(),
            right_dim: right.dim(),
            expected_dim: left.dim() * right.dim(),
            invariant: None,
            characters_match: None,
            trace_vector: Vec::new(),
        };
        if opts.invariance {
            step.invariant = Some(pair.iter().all(|(a, b)| {
                w.rows().iter().all(|v| w.contains(&comp.coords(&comp.polynomial_of(v).act_pair(a, b))))
            }));
        }
        if opts.characters && step.invariant != Some(false) {
            let mut ok = true;
            for a in &left_elems {
                let ta = left.trace(a)?;
                for b in &right_elems {
                    let expected = &ta * &right.trace(b)?;
                    let got = subquotient_trace(&comp, &prev, &w, &|p: &Polynomial| p.act_elements(a, b))?;
                    ok &= got == expected;
                    step.trace_vector.push(got);
                }
            }
            step.characters_match = Some(ok);
        }
        steps.push(step);
    }
    let ideal_invariant = kind.map(|_| ideal_is_invariant(&ideal, &pair));
    let multiplicity_free = (opts.characters && kind == Some(MonoidKind::IS)).then(|| {
        let nonzero: Vec<&ChainStep> = steps.iter().filter(|s| s.quotient_dim > 0).collect();
        nonzero.iter().enumerate().all(|(i, a)| nonzero[i + 1..].iter().all(|b| a.trace_vector != b.trace_vector))
    });
    Ok(CauchyChain {
        flavor,
        kind,
        m,
        n,
        r,
        total_dim: comp.quotient_dim(),
        expected_total,
        steps,
        ideal_invariant,
        multiplicity_free,
    })
}

/// The filtration of `k[x]_r` itself: steps `L_λ(V_m) ⊗ L_λ(V_n)`.
pub fn cauchy_filtration_check(m: usize, n: usize, r: usize, opts: ChainOptions) -> Result<CauchyChain> {
    cauchy_chain(Flavor::Commuting, None, m, n, r, opts)
}

/// `(k[x]/J(kind))_r` with steps `R(m)^{λ′}⊗R(n)^{λ′}`, `L_λ(V_m)⊗R(n)^{λ′}`
/// or `L_λ(U_m)⊗R(n)^{λ′}`.
pub fn theorem_m2_check(kind: MonoidKind, m: usize, n: usize, r: usize, opts: ChainOptions) -> Result<CauchyChain> {
    cauchy_chain(Flavor::Commuting, Some(transformation_kind(kind)?), m, n, r, opts)
}

/// The exterior analogue: steps `R(m)^{λ′}⊗R(n)_λ`, `L_λ(V_m)⊗R(n)_λ` or
/// `L_λ(U_m)⊗R(n)_λ`.
pub fn theorem_skew_c_check(kind: MonoidKind, m: usize, n: usize, r: usize, opts: ChainOptions) -> Result<CauchyChain> {
    cauchy_chain(Flavor::Exterior, Some(transformation_kind(kind)?), m, n, r, opts)
}

/// The filtration of `Λ^r` of the `mn` variables: steps `L_λ(V_m) ⊗ K_λ(V_n)`.
pub fn skew_filtration_check(m: usize, n: usize, r: usize, opts: ChainOptions) -> Result<CauchyChain> {
    cauchy_chain(Flavor::Exterior, None, m, n, r, opts)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipSample {
    pub s: Tableau,
    pub t: Tableau,
    /// The replaced cell, for the column-sum check.
    pub cell: Option<(usize, usize)>,
    pub ideal: MonoidKind,
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub flavor: Flavor,
    pub m: usize,
    pub n: usize,
    pub samples: Vec<MembershipSample>,
}

impl MembershipReport {
    pub fn holds(&self) -> bool {
        !self.samples.is_empty() && self.samples.iter().all(|s| s.member)
    }
}

struct Components {
    ideals: HashMap<MonoidKind, HomogeneousIdeal>,
    comps: HashMap<(MonoidKind, usize), IdealComponent>,
}

impl Components {
    fn new(flavor: Flavor, m: usize, n: usize) -> Result<Self> {
        let mut ideals = HashMap::new();
        for k in MonoidKind::TRANSFORMATION_KINDS {
            ideals.insert(k, graded_ideal(flavor, Some(k), m, n)?);
        }
        Ok(Components { ideals, comps: HashMap::new() })
    }

    fn contains(&mut self, kind: MonoidKind, p: &Polynomial) -> bool {
        let Some(d) = p.degree() else { return true };
        let ideal = &self.ideals[&kind];
        self.comps.entry((kind, d)).or_insert_with(|| ideal.component(d)).contains(p)
    }
}

fn random_filling(rng: &mut ChaCha8Rng, lambda: &Partition, n: usize) -> Tableau {
    let rows = lambda.parts().iter().map(|&len| (0..len).map(|_| rng.gen_range(1..=n as u8)).collect()).collect();
    Tableau::new(SkewShape::straight(lambda.clone()), rows).unwrap()
}

fn random_shape(rng: &mut ChaCha8Rng, rmin: usize, rmax: usize) -> Partition {
    let r = rng.gen_range(rmin..=rmax);
    let parts = enumerate_partitions(r, None);
    parts[rng.gen_range(0..parts.len())].clone()
}

/// `Σ_u (S_{i,j}[u] | T) ∈ J(T)` on random `S`, `T` of shape `λ` and random cells.
pub fn lemma_tlem_check(
    flavor: Flavor,
    m: usize,
    n: usize,
    lambda: &Partition,
    samples: usize,
    seed: u64,
) -> Result<MembershipReport> {
    if lambda.is_empty() {
        return Err(Error::Invalid("the column-sum check needs a nonempty shape".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comps = Components::new(flavor, m, n)?;
    let cells = SkewShape::straight(lambda.clone()).cells();
    let mut out = Vec::new();
    for _ in 0..samples {
        let s = random_filling(&mut rng, lambda, m);
        let t = random_filling(&mut rng, lambda, n);
        let (i, j) = cells[rng.gen_range(0..cells.len())];
        let mut sum = Polynomial::zero(flavor, m, n);
        for u in 1..=m as u8 {
            let mut su = s.clone();
            su.set(i, j, u);
            sum = sum.add(&bitableau(flavor, &su, &t, m, n)?);
        }
        let member = comps.contains(MonoidKind::T, &sum);
        out.push(MembershipSample { s, t, cell: Some((i, j)), ideal: MonoidKind::T, member });
    }
    Ok(MembershipReport { flavor, m, n, samples: out })
}

/// A repeated entry in `T` puts `(S|T)` in `J(PT)`; one in `S` puts it in `J(IS)`.
/// Samples alternate between the two sides; shapes have 2 to `rmax` boxes.
pub fn repeated_entry_check(flavor: Flavor, m: usize, n: usize, rmax: usize, samples: usize, seed: u64) -> Result<MembershipReport> {
    if rmax < 2 {
        return Err(Error::Invalid("a repeated entry needs at least two boxes".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comps = Components::new(flavor, m, n)?;
    let mut out = Vec::new();
    for k in 0..samples {
        let lambda = random_shape(&mut rng, 2, rmax);
        let mut s = random_filling(&mut rng, &lambda, m);
        let mut t = random_filling(&mut rng, &lambda, n);
        let cells = SkewShape::straight(lambda.clone()).cells();
        let a = rng.gen_range(0..cells.len());
        let b = (a + rng.gen_range(1..cells.len())) % cells.len();
        let (target, ideal) = if k % 2 == 0 { (&mut t, MonoidKind::PT) } else { (&mut s, MonoidKind::IS) };
        let v = target.get(cells[a].0, cells[a].1).unwrap();
        target.set(cells[b].0, cells[b].1, v);
        let p = bitableau(flavor, &s, &t, m, n)?;
        let member = comps.contains(ideal, &p);
        out.push(MembershipSample { s, t, cell: None, ideal, member });
    }
    Ok(MembershipReport { flavor, m, n, samples: out })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u8]]) -> Tableau {
        let parts: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        Tableau::from_rows(&SkewShape::straight(Partition::from_parts(&parts)), rows)
    }

    fn dims(c: &CauchyChain) -> Vec<usize> {
        c.steps.iter().map(|s| s.quotient_dim).collect()
    }

    #[test]
    fn generator_examples() {
        let g = ideal_generators(Flavor::Commuting, MonoidKind::PT, 1, 1).unwrap();
        assert_eq!(g.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["x11^2"]);
        let g = ideal_generators(Flavor::Commuting, MonoidKind::T, 2, 1).unwrap();
        let s: Vec<String> = g.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, vec!["x11^2", "x11*x21", "x21^2", "x11 + x21"]);
        // 6 column and 6 row products, the 4 squares shared.
        assert_eq!(ideal_generators(Flavor::Commuting, MonoidKind::IS, 2, 2).unwrap().len(), 8);
        let g = ideal_generators(Flavor::Exterior, MonoidKind::PT, 2, 1).unwrap();
        assert_eq!(g.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["y11*y21"]);
        let g = ideal_generators(Flavor::Exterior, MonoidKind::T, 2, 1).unwrap();
        assert_eq!(g.iter().map(|p| p.to_string()).collect::<Vec<_>>(), vec!["y11*y21", "y11 + y21"]);
        assert_eq!(ideal_generators(Flavor::Exterior, MonoidKind::IS, 2, 2).unwrap().len(), 4);
    }

    #[test]
    fn quotient_dim_examples() {
        for flavor in [Flavor::Commuting, Flavor::Exterior] {
            assert_eq!(graded_quotient_dim(flavor, MonoidKind::IS, 2, 2, 2).unwrap().computed, 2);
            assert_eq!(graded_quotient_dim(flavor, MonoidKind::PT, 3, 2, 1).unwrap().computed, 6);
            assert_eq!(graded_quotient_dim(flavor, MonoidKind::T, 2, 2, 1).unwrap().computed, 2);
            for kind in MonoidKind::TRANSFORMATION_KINDS {
                assert_eq!(graded_quotient_dim(flavor, kind, 3, 2, 3).unwrap().computed, 0);
            }
        }
    }

    #[test]
    fn quotient_dims_match_closed_forms() {
        for flavor in [Flavor::Commuting, Flavor::Exterior] {
            for kind in MonoidKind::TRANSFORMATION_KINDS {
                for m in 1..=3 {
                    for n in 1..=3 {
                        for r in 0..=n + 1 {
                            let q = graded_quotient_dim(flavor, kind, m, n, r).unwrap();
                            assert!(q.holds(), "{q:?}");
                            assert_eq!(q.standard_monomials.len(), q.computed);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn full_transformation_sums() {
        // Σ_r over the square case gives (n+1)^n for PT and n^n for T.
        for n in 1..=3usize {
            let total = |kind| -> usize { (0..=n).map(|r| graded_quotient_dim(Flavor::Commuting, kind, n, n, r).unwrap().computed).sum() };
            assert_eq!(total(MonoidKind::PT), (n + 1).pow(n as u32));
            assert_eq!(total(MonoidKind::T), n.pow(n as u32));
        }
    }

    #[test]
    fn bitableau_examples() {
        let c = Flavor::Commuting;
        assert_eq!(bitableau(c, &tab(&[&[2]]), &tab(&[&[1]]), 2, 2).unwrap().to_string(), "x21");
        assert_eq!(bitableau(c, &tab(&[&[1, 2]]), &tab(&[&[1, 2]]), 2, 2).unwrap().to_string(), "x11*x22 - x12*x21");
        assert_eq!(bitableau(c, &tab(&[&[1], &[2]]), &tab(&[&[1], &[1]]), 2, 2).unwrap().to_string(), "x11*x21");
        let e = Flavor::Exterior;
        assert_eq!(bitableau(e, &tab(&[&[1, 2]]), &tab(&[&[1, 2]]), 2, 2).unwrap().to_string(), "y11*y22 + y12*y21");
        assert!(bitableau(e, &tab(&[&[1, 1]]), &tab(&[&[1, 2]]), 2, 2).unwrap().is_zero());
        assert!(bitableau(c, &tab(&[&[1, 2]]), &tab(&[&[1], &[2]]), 2, 2).is_err());
    }

    #[test]
    fn filtration_examples() {
        let c = cauchy_filtration_check(2, 2, 2, ChainOptions::default()).unwrap();
        assert_eq!(dims(&c), vec![1, 9]);
        assert!(c.holds(), "{c:?}");
        let c = cauchy_filtration_check(2, 3, 2, ChainOptions::default()).unwrap();
        assert_eq!(dims(&c), vec![3, 18]);
        assert_eq!(c.total_dim, 21);
        let c = cauchy_filtration_check(3, 2, 1, ChainOptions::default()).unwrap();
        assert_eq!(dims(&c), vec![6]);
    }

    #[test]
    fn quotient_filtration_examples() {
        let c = theorem_m2_check(MonoidKind::IS, 2, 2, 2, ChainOptions::full()).unwrap();
        assert_eq!(dims(&c), vec![1, 1]);
        assert!(c.holds(), "{c:?}");
        let c = theorem_m2_check(MonoidKind::T, 3, 2, 1, ChainOptions::full()).unwrap();
        assert_eq!((c.steps[0].left_dim, c.steps[0].right_dim, c.total_dim), (2, 2, 4));
        assert!(c.holds(), "{c:?}");
        let c = theorem_m2_check(MonoidKind::PT, 2, 2, 3, ChainOptions::full()).unwrap();
        assert_eq!(c.total_dim, 0);
        assert!(c.steps.iter().all(|s| s.quotient_dim == 0) && c.holds());
    }

    #[test]
    fn skew_examples() {
        let c = theorem_skew_c_check(MonoidKind::IS, 2, 2, 2, ChainOptions::full()).unwrap();
        assert_eq!(dims(&c), vec![1, 1]);
        assert!(c.holds(), "{c:?}");
        let c = theorem_skew_c_check(MonoidKind::PT, 2, 2, 1, ChainOptions::full()).unwrap();
        assert_eq!(dims(&c), vec![4]);
        assert!(c.holds());
        let c = theorem_skew_c_check(MonoidKind::T, 2, 2, 2, ChainOptions::full()).unwrap();
        assert_eq!(c.total_dim, 1);
        assert!(c.holds(), "{c:?}");
    }

    #[test]
    fn chains_small_exhaustive() {
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            for m in 1..=2 {
                for n in 1..=2 {
                    for r in 1..=3 {
                        let c = theorem_m2_check(kind, m, n, r, ChainOptions::full()).unwrap();
                        assert!(c.holds(), "{c:?}");
                        let c = theorem_skew_c_check(kind, m, n, r, ChainOptions::full()).unwrap();
                        assert!(c.holds(), "{c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn unquotiented_skew_totals() {
        for m in 1..=2 {
            for n in 1..=3 {
                for r in 1..=4 {
                    let c = skew_filtration_check(m, n, r, ChainOptions::default()).unwrap();
                    assert!(c.holds(), "{c:?}");
                }
            }
        }
    }

    #[test]
    fn column_sum_examples() {
        let x = Polynomial::var(Flavor::Commuting, 2, 1, 0, 0).add(&Polynomial::var(Flavor::Commuting, 2, 1, 1, 0));
        assert!(graded_ideal(Flavor::Commuting, Some(MonoidKind::T), 2, 1).unwrap().component(1).contains(&x));
        for (m, n, l) in [(2, 2, "2"), (3, 2, "1,1"), (2, 1, "1")] {
            let r = lemma_tlem_check(Flavor::Commuting, m, n, &l.parse().unwrap(), 10, 7).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        // Column sums are not in J(PT); they need J(T).
        let pt = graded_ideal(Flavor::Exterior, Some(MonoidKind::PT), 2, 1).unwrap();
        assert!(!pt.component(1).contains(&Polynomial::var(Flavor::Exterior, 2, 1, 0, 0).add(&Polynomial::var(Flavor::Exterior, 2, 1, 1, 0))));
    }

    #[test]
    fn repeated_entries_lie_in_ideals() {
        for flavor in [Flavor::Commuting, Flavor::Exterior] {
            let r = repeated_entry_check(flavor, 3, 3, 3, 30, 11).unwrap();
            assert!(r.holds(), "{r:?}");
        }
    }
}
