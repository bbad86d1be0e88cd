//! Schur modules `L_{λ/μ}(V_n)` and Weyl modules `K_{λ/μ}(V_n)` as images of
//! the maps `d` and `d′`, with their semistandard bases and matrix actions.
//!
//! `d_{λ/μ}: Λ^{λ/μ} → Sym_{λ′/μ′}` antisymmetrizes each row and multiplies the
//! letters that land in the same column. `d′_{λ/μ}: D_{λ/μ} → Λ^{λ′/μ′}` splits
//! each row's divided power into its distinct letter sequences (coefficient 1)
//! and wedges columns. Straightening is done by solving against the
//! semistandard images rather than by rewriting rules.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cache::{ModuleCache, ModuleKey, ModuleType};
use crate::combinatorics::{
    count_tableaux, enumerate_tableaux, partitions_between, Partition, SkewShape, Tableau, TableauError, TableauKind,
    WeightVector,
};
use crate::error::{consistency, Error, Result};
use crate::linalg::{quotient_action, RationalMatrix, SparseVec, SpanSolver, Subspace};
use crate::monoid::{permutations, MonoidKind, PartialTransformation};
use crate::rational::Rational;
use crate::tensor::{add_term, sort_with_sign, Key, MultigradedSpace, TensorKind, TensorVec};

/// Basis label of a constructed module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Label {
    Tableau(Tableau),
    Monomial(Key),
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::Tableau(t) => write!(f, "{t}"),
            Label::Monomial(k) => {
                let s: Vec<String> = k.iter().map(|l| (l + 1).to_string()).collect();
                write!(f, "e[{}]", s.join(" "))
            }
        }
    }
}

#[derive(Debug, Clone)]
struct Block {
    members: Vec<usize>,
    index: HashMap<Key, usize>,
    solver: SpanSolver,
}

/// A module with a weight basis living inside a multigraded tensor space.
#[derive(Debug, Clone)]
pub struct LabeledModule {
    space: MultigradedSpace,
    labels: Vec<Label>,
    weights: Vec<WeightVector>,
    vectors: Vec<TensorVec>,
    blocks: HashMap<WeightVector, Block>,
}

impl LabeledModule {
    /// Builds from labelled weight vectors; fails if some vector is zero, not
    /// homogeneous, or the vectors are dependent.
    pub fn from_vectors(space: MultigradedSpace, labels: Vec<Label>, vectors: Vec<TensorVec>) -> Result<Self> {
        let mut weights = Vec::with_capacity(vectors.len());
        for (l, v) in labels.iter().zip(&vectors) {
            let mut ws = v.keys().map(|k| space.weight_of(k));
            let Some(w) = ws.next() else {
                return Err(consistency(format!("basis vector for {l} is zero")));
            };
            if ws.any(|x| x != w) {
                return Err(consistency(format!("basis vector for {l} is not a weight vector")));
            }
            weights.push(w);
        }
        let mut groups: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
        for (i, w) in weights.iter().enumerate() {
            groups.entry(w.clone()).or_default().push(i);
        }
        let mut blocks = HashMap::new();
        for (w, members) in groups {
            let mut index: HashMap<Key, usize> = HashMap::new();
            let mut sparse = Vec::with_capacity(members.len());
            for &i in &members {
                let pairs: Vec<(usize, Rational)> = vectors[i]
                    .iter()
                    .map(|(k, c)| {
                        let next = index.len();
                        (*index.entry(k.clone()).or_insert(next), c.clone())
                    })
                    .collect();
                sparse.push(SparseVec::from_pairs(pairs));
            }
            let solver = SpanSolver::new(index.len(), &sparse);
            if !solver.is_independent() {
                return Err(consistency(format!("basis vectors of weight {:?} are dependent", w.coords())));
            }
            blocks.insert(w, Block { members, index, solver });
        }
        Ok(LabeledModule { space, labels, weights, vectors, blocks })
    }

    /// The whole tensor space with its monomial basis.
    pub fn full_space(space: MultigradedSpace) -> Self {
        let keys = space.basis();
        let labels = keys.iter().cloned().map(Label::Monomial).collect();
        let vectors = keys
            .into_iter()
            .map(|k| {
                let mut v = TensorVec::new();
                v.insert(k, Rational::one());
                v
            })
            .collect();
        Self::from_vectors(space, labels, vectors).expect("monomials are independent")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn n(&self) -> usize {
        self.space.n
    }

    pub fn degree(&self) -> usize {
        self.space.total_degree()
    }

    pub fn space(&self) -> &MultigradedSpace {
        &self.space
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn weights(&self) -> &[WeightVector] {
        &self.weights
    }

    pub fn vectors(&self) -> &[TensorVec] {
        &self.vectors
    }

    /// Coordinates of `v` in the module basis, or `None` if `v` is outside.
    pub fn express(&self, v: &TensorVec) -> Option<SparseVec> {
        let mut parts: HashMap<WeightVector, Vec<(usize, Rational)>> = HashMap::new();
        for (k, c) in v {
            let w = self.space.weight_of(k);
            let block = self.blocks.get(&w)?;
            let idx = *block.index.get(k)?;
            parts.entry(w).or_default().push((idx, c.clone()));
        }
        let mut out = Vec::new();
        for (w, pairs) in parts {
            let block = &self.blocks[&w];
            let coeffs = block.solver.solve_sparse(&SparseVec::from_pairs(pairs))?;
            out.extend(coeffs.into_entries().into_iter().map(|(i, c)| (block.members[i], c)));
        }
        Some(SparseVec::from_pairs(out))
    }

    pub fn vector_of(&self, coords: &SparseVec) -> TensorVec {
        let mut out = TensorVec::new();
        for (i, c) in coords.entries() {
            for (k, x) in &self.vectors[*i] {
                add_term(&mut out, k.clone(), &(x * c));
            }
        }
        out
    }

    fn matrix_from_images(&self, images: impl Iterator<Item = TensorVec>, what: &str) -> Result<RationalMatrix> {
        let d = self.dim();
        let mut cols = Vec::with_capacity(d);
        for (j, img) in images.enumerate() {
            let c = self
                .express(&img)
                .ok_or_else(|| consistency(format!("image of basis vector {} under {what} left the module", self.labels[j])))?;
            cols.push(c);
        }
        Ok(RationalMatrix::from_columns(d, &cols))
    }

    /// Matrix of a partial map acting through `e_j ↦ e_{p(j)}`.
    pub fn act_map(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        if p.n() != self.n() {
            return Err(Error::Invalid(format!("element {p} has size {}, module has n = {}", p.n(), self.n())));
        }
        self.matrix_from_images(self.vectors.iter().map(|v| self.space.act_map(p, v)), &p.to_string())
    }

    /// Images of the chosen basis vectors under `p`, in module coordinates.
    pub fn act_map_on(&self, p: &PartialTransformation, cols: &[usize]) -> Result<Vec<SparseVec>> {
        if p.n() != self.n() {
            return Err(Error::Invalid(format!("element {p} has size {}, module has n = {}", p.n(), self.n())));
        }
        cols.iter()
            .map(|&j| {
                self.express(&self.space.act_map(p, &self.vectors[j])).ok_or_else(|| {
                    consistency(format!("image of basis vector {} under {p} left the module", self.labels[j]))
                })
            })
            .collect()
    }

    /// Matrix of an arbitrary `n × n` rational matrix acting functorially.
    pub fn act_matrix(&self, g: &RationalMatrix) -> Result<RationalMatrix> {
        if g.nrows() != self.n() || g.ncols() != self.n() {
            return Err(Error::Invalid("acting matrix has the wrong size".into()));
        }
        self.matrix_from_images(self.vectors.iter().map(|v| self.space.act_matrix(g, v)), "matrix")
    }

    /// Basis indices whose weight satisfies `pred`.
    pub fn indices_where(&self, pred: impl Fn(&WeightVector) -> bool) -> Vec<usize> {
        (0..self.dim()).filter(|&i| pred(&self.weights[i])).collect()
    }

    /// Span of the basis vectors whose weight satisfies `pred`, in module coordinates.
    pub fn weight_component(&self, pred: impl Fn(&WeightVector) -> bool) -> Subspace {
        Subspace::from_vectors(self.dim(), self.indices_where(pred).into_iter().map(SparseVec::unit))
    }

    /// `M′`: weights with all coordinates in {0, 1}.
    pub fn zero_one_part(&self) -> Subspace {
        self.weight_component(|w| w.is_zero_one())
    }

    /// `M″`: weights with some coordinate at least 2.
    pub fn repeated_part(&self) -> Subspace {
        self.weight_component(|w| w.has_repeat())
    }
}

fn check_tableau(shape: &SkewShape, n: usize, t: &Tableau) -> Result<()> {
    if t.shape() != shape {
        return Err(TableauError::ShapeMismatch { expected: shape.clone(), found: t.shape().clone() }.into());
    }
    t.check_entries(n)?;
    Ok(())
}

/// Permutations of `0..k` with their signs.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i32)> {
    if k == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in signed_permutations(k - 1) {
        // Insert k-1 at position i: moves it past (k-1-i) elements.
        for i in 0..k {
            let mut q = p.clone();
            q.insert(i, k - 1);
            let sign = if (k - 1 - i).is_multiple_of(2) { s } else { -s };
            out.push((q, sign));
        }
    }
    out
}

/// Distinct rearrangements of a multiset of letters.
pub fn distinct_rearrangements(letters: &[u8]) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = letters.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    // Lexicographic next-permutation walk.
    while let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

/// Column of each cell of row `i`, left to right.
fn row_columns(shape: &SkewShape, i: usize) -> std::ops::Range<usize> {
    let (a, b) = shape.row_range(i);
    a..b
}

/// Target space of `d_{λ/μ}`: `Sym_{λ′/μ′}(V_n)`.
pub fn schur_ambient(shape: &SkewShape, n: usize) -> MultigradedSpace {
    MultigradedSpace::new(TensorKind::Symmetric, n, (0..shape.num_cols()).map(|j| shape.col_len(j)).collect())
}

/// Target space of `d′_{λ/μ}`: `Λ^{λ′/μ′}(V_n)`.
pub fn weyl_ambient(shape: &SkewShape, n: usize) -> MultigradedSpace {
    MultigradedSpace::new(TensorKind::Exterior, n, (0..shape.num_cols()).map(|j| shape.col_len(j)).collect())
}

/// Distributes row words into columns and emits one key per term.
fn assemble(
    shape: &SkewShape,
    row_terms: &[Vec<(Vec<u8>, i32)>],
    exterior: bool,
    out: &mut TensorVec,
) {
    let ncols = shape.num_cols();
    fn rec(
        i: usize,
        shape: &SkewShape,
        row_terms: &[Vec<(Vec<u8>, i32)>],
        cols: &mut Vec<Vec<u8>>,
        sign: i32,
        exterior: bool,
        out: &mut TensorVec,
    ) {
        if i == row_terms.len() {
            let mut key = Vec::new();
            let mut s = sign;
            for c in cols.iter() {
                let mut c = c.clone();
                if exterior {
                    s *= sort_with_sign(&mut c);
                    if s == 0 {
                        return;
                    }
                } else {
                    c.sort_unstable();
                }
                key.extend(c);
            }
            add_term(out, key, &Rational::from_int(s as i64));
            return;
        }
        for (word, s) in &row_terms[i] {
            for (t, j) in row_columns(shape, i).enumerate() {
                cols[j].push(word[t]);
            }
            rec(i + 1, shape, row_terms, cols, sign * s, exterior, out);
            for j in row_columns(shape, i) {
                cols[j].pop();
            }
        }
    }
    let mut cols = vec![Vec::new(); ncols];
    rec(0, shape, row_terms, &mut cols, 1, exterior, out);
}

/// `d_{λ/μ}(V_n)(X_T)` in `Sym_{λ′/μ′}(V_n)`.
pub fn d_map(shape: &SkewShape, n: usize, t: &Tableau) -> Result<TensorVec> {
    check_tableau(shape, n, t)?;
    let mut out = TensorVec::new();
    // A repeated letter in a row kills the antisymmetrization.
    if t.rows().iter().any(|r| {
        let mut s = r.clone();
        s.sort_unstable();
        s.windows(2).any(|w| w[0] == w[1])
    }) {
        return Ok(out);
    }
    let row_terms: Vec<Vec<(Vec<u8>, i32)>> = t
        .rows()
        .iter()
        .map(|r| signed_permutations(r.len()).into_iter().map(|(p, s)| (p.iter().map(|&k| r[k] - 1).collect(), s)).collect())
        .collect();
    assemble(shape, &row_terms, false, &mut out);
    Ok(out)
}

/// `d′_{λ/μ}(V_n)(Y_T)` in `Λ^{λ′/μ′}(V_n)`.
pub fn dprime_map(shape: &SkewShape, n: usize, t: &Tableau) -> Result<TensorVec> {
    check_tableau(shape, n, t)?;
    let row_terms: Vec<Vec<(Vec<u8>, i32)>> = t
        .rows()
        .iter()
        .map(|r| {
            let letters: Vec<u8> = r.iter().map(|&e| e - 1).collect();
            distinct_rearrangements(&letters).into_iter().map(|w| (w, 1)).collect()
        })
        .collect();
    let mut out = TensorVec::new();
    assemble(shape, &row_terms, true, &mut out);
    Ok(out)
}

/// `L_{λ/μ}(V_n)` with basis `d(X_T)`, `T` semistandard; uncached.
pub fn build_schur_module(shape: &SkewShape, n: usize) -> Result<LabeledModule> {
    let sst = enumerate_tableaux(shape, n, TableauKind::Semistandard);
    let mut vectors = Vec::with_capacity(sst.len());
    for t in &sst {
        vectors.push(d_map(shape, n, t)?);
    }
    LabeledModule::from_vectors(schur_ambient(shape, n), sst.into_iter().map(Label::Tableau).collect(), vectors)
}

/// `K_{λ/μ}(V_n)` with basis `d′(Y_T)`, `T` co-semistandard; uncached.
pub fn build_weyl_module(shape: &SkewShape, n: usize) -> Result<LabeledModule> {
    let csst = enumerate_tableaux(shape, n, TableauKind::CoSemistandard);
    let mut vectors = Vec::with_capacity(csst.len());
    for t in &csst {
        vectors.push(dprime_map(shape, n, t)?);
    }
    LabeledModule::from_vectors(weyl_ambient(shape, n), csst.into_iter().map(Label::Tableau).collect(), vectors)
}

/// Cached `L_{λ/μ}(V_n)`.
pub fn schur_module(shape: &SkewShape, n: usize) -> Result<Arc<LabeledModule>> {
    ModuleCache::global().get_or_build(&ModuleKey { module: ModuleType::Schur, shape: shape.clone(), n }, || {
        build_schur_module(shape, n)
    })
}

/// Cached `K_{λ/μ}(V_n)`.
pub fn weyl_module(shape: &SkewShape, n: usize) -> Result<Arc<LabeledModule>> {
    ModuleCache::global().get_or_build(&ModuleKey { module: ModuleType::Weyl, shape: shape.clone(), n }, || {
        build_weyl_module(shape, n)
    })
}

/// Coefficients of `d(X_T)` on the semistandard basis, checked to sit on
/// tableaux of the same weight as `T`.
pub fn straighten(shape: &SkewShape, n: usize, t: &Tableau) -> Result<Vec<(Tableau, Rational)>> {
    let module = schur_module(shape, n)?;
    let v = d_map(shape, n, t)?;
    let coords = module
        .express(&v)
        .ok_or_else(|| consistency(format!("d(X_T) for {t} is outside the span of the semistandard images")))?;
    let w = t.weight(n);
    let mut out = Vec::new();
    for (i, c) in coords.entries() {
        if module.weights()[*i] != w {
            return Err(consistency(format!("straightening {t} produced a term of another weight")));
        }
        let Label::Tableau(s) = &module.labels()[*i] else { unreachable!() };
        out.push((s.clone(), c.clone()));
    }
    if module.vector_of(&coords) != v {
        return Err(consistency(format!("straightening of {t} does not reproduce d(X_T)")));
    }
    Ok(out)
}

/// Which of the two maps to test in [`image_rank_over_all_tableaux`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapKind {
    D,
    DPrime,
}

/// Rank of `{d(X_T)}` (or `{d′(Y_T)}`) over every filling `T` of the shape with
/// entries in `[n]`.
pub fn image_rank_over_all_tableaux(shape: &SkewShape, n: usize, which: MapKind) -> Result<usize> {
    let space = match which {
        MapKind::D => schur_ambient(shape, n),
        MapKind::DPrime => weyl_ambient(shape, n),
    };
    let cap = usize::try_from(space.dim()).unwrap_or(usize::MAX);
    let mut blocks: HashMap<WeightVector, (HashMap<Key, usize>, Subspace)> = HashMap::new();
    for t in enumerate_tableaux(shape, n, TableauKind::All) {
        let v = match which {
            MapKind::D => d_map(shape, n, &t)?,
            MapKind::DPrime => dprime_map(shape, n, &t)?,
        };
        if v.is_empty() {
            continue;
        }
        let (index, sub) = blocks.entry(t.weight(n)).or_insert_with(|| (HashMap::new(), Subspace::zero(cap)));
        let pairs: Vec<(usize, Rational)> = v
            .iter()
            .map(|(k, c)| {
                let next = index.len();
                (*index.entry(k.clone()).or_insert(next), c.clone())
            })
            .collect();
        sub.insert(&SparseVec::from_pairs(pairs));
    }
    Ok(blocks.values().map(|(_, s)| s.dim()).sum())
}

/// One step `M_ν` of the branching filtration.
#[derive(Debug, Clone)]
pub struct FiltrationStep {
    pub nu: Partition,
    /// `M_ν` in coordinates of the Schur module basis.
    pub span: Subspace,
    /// `dim M_ν − dim Ṁ_ν`.
    pub quotient_dim: usize,
    /// `dim L_{ν/μ′}(V_s) · dim L_{λ′/ν}(V_{n−s})`.
    pub expected_dim: usize,
}

/// The filtration of `L_{λ′/μ′}(V_n)` by `GL_s × GL_{n−s}`-submodules,
/// smallest first.
#[derive(Debug, Clone)]
pub struct GlFiltration {
    pub module: Arc<LabeledModule>,
    pub s: usize,
    pub steps: Vec<FiltrationStep>,
}

impl GlFiltration {
    pub fn quotients_match(&self) -> bool {
        self.steps.iter().all(|st| st.quotient_dim == st.expected_dim)
    }

    pub fn total(&self) -> usize {
        self.steps.iter().map(|s| s.quotient_dim).sum()
    }
}

/// `η(T)_i = μ′_i + #{entries of row i of T lying in [s]}`.
fn eta(t: &Tableau, inner: &Partition, s: usize) -> Vec<usize> {
    t.rows().iter().enumerate().map(|(i, r)| inner.part(i) + r.iter().filter(|&&e| (e as usize) <= s).count()).collect()
}

/// Branching filtration for `shape = λ/μ` inside `L_{λ′/μ′}(V_n)`, with `[s]`
/// as the first block of coordinates.
pub fn gl_branching_filtration(shape: &SkewShape, n: usize, s: usize) -> Result<GlFiltration> {
    if s == 0 || s >= n {
        return Err(Error::Invalid(format!("need 1 ≤ s < n, got s = {s}, n = {n}")));
    }
    let conj = shape.conjugate();
    let (outer, inner) = (conj.outer().clone(), conj.inner().clone());
    let module = schur_module(&conj, n)?;
    // Rows with a repeated letter map to zero and reordering a row only
    // changes the sign, so strictly increasing rows span everything.
    let mut images: Vec<(Vec<usize>, SparseVec)> = Vec::new();
    for t in enumerate_tableaux(&conj, n, TableauKind::All) {
        if !t.rows().iter().all(|r| r.windows(2).all(|w| w[0] < w[1])) {
            continue;
        }
        let v = d_map(&conj, n, &t)?;
        let c = module.express(&v).ok_or_else(|| consistency(format!("d(X_T) for {t} is outside the Schur module")))?;
        images.push((eta(&t, &inner, s), c));
    }
    let mut nus = partitions_between(&outer, &inner);
    nus.sort_by(|a, b| Partition::lex_cmp(b.parts(), a.parts()));
    let dim = module.dim();
    let spans: Vec<Subspace> = nus
        .iter()
        .map(|nu| {
            Subspace::from_vectors(
                dim,
                images
                    .iter()
                    .filter(|(e, _)| Partition::lex_cmp(e, nu.parts()) != std::cmp::Ordering::Less)
                    .map(|(_, c)| c.clone()),
            )
        })
        .collect();
    let mut steps = Vec::with_capacity(nus.len());
    for (k, nu) in nus.iter().enumerate() {
        let mut dot = Subspace::zero(dim);
        for bigger in &spans[..k] {
            dot = dot.sum(bigger)?;
        }
        let quotient_dim = Subspace::quotient_dim(&spans[k], &dot)
            .map_err(|_| consistency(format!("filtration is not increasing at ν = {nu}")))?;
        let left = count_tableaux(&SkewShape::new(nu.clone(), inner.clone())?, s, TableauKind::Semistandard);
        let right = count_tableaux(&SkewShape::new(outer.clone(), nu.clone())?, n - s, TableauKind::Semistandard);
        steps.push(FiltrationStep { nu: nu.clone(), span: spans[k].clone(), quotient_dim, expected_dim: left * right });
    }
    if let Some(last) = steps.last() {
        if last.span.dim() != dim {
            return Err(consistency("last filtration step is not the whole module"));
        }
    }
    Ok(GlFiltration { module, s, steps })
}

/// `L_λ(U_m) = L_λ(V_m) / W_λ` with its `S_m` action.
#[derive(Debug, Clone)]
pub struct StandardSchurModule {
    pub lambda: Partition,
    pub m: usize,
    pub base: Arc<LabeledModule>,
    /// `W_λ` in coordinates of the base module.
    pub w: Subspace,
    /// Base coordinates forming the quotient basis.
    pub complement: Vec<usize>,
}

impl StandardSchurModule {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn act_map(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        let full = self.base.act_map(p)?;
        if !self.w.is_invariant_under(&full) {
            return Err(consistency(format!("W_{} is not stable under {p}", self.lambda)));
        }
        Ok(quotient_action(&full, &self.w).0)
    }

    /// Whether `W_λ` is stable under a generating set of `S_m`.
    pub fn w_is_stable(&self) -> Result<bool> {
        for g in MonoidKind::Sym.generators(self.m) {
            if !self.w.is_invariant_under(&self.base.act_map(&g)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Builds `L_λ(U_m)` as the quotient of `L_λ(V_m)` by the span of
/// `Σ_u d(X_{T_{i,j}[u]})` over all tableaux `T` and cells `(i, j)`.
pub fn build_standard_schur_module(lambda: &Partition, m: usize) -> Result<StandardSchurModule> {
    let shape = SkewShape::straight(lambda.clone());
    let base = schur_module(&shape, m)?;
    let mut w = Subspace::zero(base.dim());
    for (i, j) in shape.cells() {
        for t in enumerate_tableaux(&shape, m, TableauKind::All) {
            if t.get(i, j) != Some(1) {
                continue;
            }
            let mut sum = TensorVec::new();
            for u in 1..=m as u8 {
                let mut tu = t.clone();
                tu.set(i, j, u);
                for (k, c) in d_map(&shape, m, &tu)? {
                    add_term(&mut sum, k, &c);
                }
            }
            let coords = base.express(&sum).ok_or_else(|| consistency("W generator outside L_λ(V_m)"))?;
            w.insert(&coords);
        }
    }
    let complement = (0..base.dim()).filter(|c| !w.is_pivot(*c)).collect();
    Ok(StandardSchurModule { lambda: lambda.clone(), m, base, w, complement })
}

/// The sign character's permutation list helper: all of `S_n` in canonical order.
pub fn symmetric_group(n: usize) -> Vec<PartialTransformation> {
    permutations(n)
}
