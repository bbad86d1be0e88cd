//! The symmetrized Schur functor `G(M) = M/M″`, the weight-0/1 part `F(M) = M′`,
//! the modules `R(n)^{λ/μ}` and `R(n)_{λ/μ}`, and induced modules
//! `k I_{n,r} ⊗_{S_r} f(M)`.

use std::collections::HashMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::characters::{module_character, ClassFunction, SnModule};
use crate::combinatorics::{SkewShape, WeightVector};
use crate::error::{consistency, Error, Result};
use crate::linalg::{RationalMatrix, SparseVec};
use crate::monoid::{permutations, MonoidKind, PartialTransformation};
use crate::rational::Rational;
use crate::schur::{schur_module, weyl_module, Label, LabeledModule};
use crate::tensor::{MultigradedSpace, TensorKind};

/// Which of the two R-modules of a shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// `R(n)^{λ/μ} = G(L_{λ′/μ′}(V_n))`.
    Upper,
    /// `R(n)_{λ/μ} = G(K_{λ/μ}(V_n))`.
    Lower,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "upper" => Ok(Variant::Upper),
            "lower" => Ok(Variant::Lower),
            _ => Err(Error::Invalid(format!("unknown variant {s:?} (expected upper or lower)"))),
        }
    }
}

/// `M/M″` with the 0/1-weight basis vectors of `M` as coset representatives.
#[derive(Debug, Clone)]
pub struct MonoidModule {
    pub kind: MonoidKind,
    pub base: Arc<LabeledModule>,
    /// Base indices of the coset representatives.
    pub basis: Vec<usize>,
    position: HashMap<usize, usize>,
}

impl MonoidModule {
    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn labels(&self) -> Vec<&Label> {
        self.basis.iter().map(|&i| &self.base.labels()[i]).collect()
    }

    /// Matrix of any element of `PT_n` on the cosets. `G(M)` for a submonoid is
    /// the restriction of the `PT_n`-module, so membership in `kind` is not required.
    pub fn act_any(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        let cols = self.base.act_map_on(p, &self.basis)?;
        let projected: Vec<SparseVec> = cols.iter().map(|c| self.project(c)).collect();
        Ok(RationalMatrix::from_columns(self.dim(), &projected))
    }

    /// Matrix of an element of the module's monoid.
    pub fn act(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        if !self.kind.contains(p) {
            return Err(Error::Invalid(format!("{p} is not in {}_{}", self.kind, self.n())));
        }
        self.act_any(p)
    }

    /// Drops `M″` coordinates and renumbers into coset coordinates.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        v.remap(|i| self.position.get(&i).copied())
    }

    /// Action matrices of the monoid generators.
    pub fn generator_matrices(&self) -> Result<Vec<(PartialTransformation, RationalMatrix)>> {
        self.kind.generators(self.n()).into_iter().map(|g| self.act(&g).map(|m| (g, m))).collect()
    }
}

impl SnModule for MonoidModule {
    fn n(&self) -> usize {
        self.base.n()
    }
    fn dim(&self) -> usize {
        self.basis.len()
    }
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        self.act_any(p)
    }
}

/// Checks `g·M″ ⊆ M″` for every generator of `kind`, then forms `G(M)`.
pub fn symmetrized_functor(module: Arc<LabeledModule>, kind: MonoidKind) -> Result<MonoidModule> {
    let basis = module.indices_where(|w| w.is_zero_one());
    let repeated = module.indices_where(|w| w.has_repeat());
    let position: HashMap<usize, usize> = basis.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    for g in kind.generators(module.n()) {
        for (j, img) in repeated.iter().zip(module.act_map_on(&g, &repeated)?) {
            if img.entries().iter().any(|(i, _)| position.contains_key(i)) {
                return Err(consistency(format!(
                    "M″ is not stable: {g} sends {} outside M″",
                    module.labels()[*j]
                )));
            }
        }
    }
    Ok(MonoidModule { kind, base: module, basis, position })
}

/// `R(n)^{λ/μ}` from `L_{λ′/μ′}(V_n)` or `R(n)_{λ/μ}` from `K_{λ/μ}(V_n)`.
/// This is the only place where the conjugate enters.
pub fn build_r_module(kind: MonoidKind, n: usize, shape: &SkewShape, variant: Variant) -> Result<MonoidModule> {
    let base = match variant {
        Variant::Upper => schur_module(&shape.conjugate(), n)?,
        Variant::Lower => weyl_module(shape, n)?,
    };
    symmetrized_functor(base, kind)
}

/// Matrices of the adjacent transpositions on `G(M)`.
pub fn restrict_to_symmetric_group(m: &MonoidModule) -> Result<Vec<(PartialTransformation, RationalMatrix)>> {
    MonoidKind::Sym.generators(m.n()).into_iter().map(|g| m.act_any(&g).map(|a| (g, a))).collect()
}

/// `F(M) = M′` as an `S_n`-module on the 0/1-weight basis vectors.
pub struct WeightZeroOnePart<'a>(pub &'a LabeledModule);

impl SnModule for WeightZeroOnePart<'_> {
    fn n(&self) -> usize {
        self.0.n()
    }
    fn dim(&self) -> usize {
        self.0.indices_where(|w| w.is_zero_one()).len()
    }
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        let idx = self.0.indices_where(|w| w.is_zero_one());
        let pos: HashMap<usize, usize> = idx.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let cols: Vec<SparseVec> = self
            .0
            .act_map_on(p, &idx)?
            .into_iter()
            .map(|c| {
                if c.entries().iter().any(|(i, _)| !pos.contains_key(i)) {
                    return Err(consistency(format!("{p} does not preserve M′")));
                }
                Ok(c.remap(|i| pos.get(&i).copied()))
            })
            .collect::<Result<_>>()?;
        Ok(RationalMatrix::from_columns(idx.len(), &cols))
    }
}

/// The `(1,…,1)`-weight space of `M ⊗ N` as an `S_n`-module, built on pairs of
/// weight basis vectors whose weights add up to `(1,…,1)`.
pub struct TopWeightOfTensor<'a> {
    pub left: &'a LabeledModule,
    pub right: &'a LabeledModule,
    pairs: Vec<(usize, usize)>,
}

impl<'a> TopWeightOfTensor<'a> {
    pub fn new(left: &'a LabeledModule, right: &'a LabeledModule) -> Result<Self> {
        if left.n() != right.n() {
            return Err(Error::Invalid("tensor factors have different n".into()));
        }
        let n = left.n();
        let target = WeightVector(vec![1; n]);
        let mut pairs = Vec::new();
        for (i, a) in left.weights().iter().enumerate() {
            for (j, b) in right.weights().iter().enumerate() {
                if (0..n).all(|k| a.coords()[k] + b.coords()[k] == target.coords()[k]) {
                    pairs.push((i, j));
                }
            }
        }
        Ok(TopWeightOfTensor { left, right, pairs })
    }
}

impl SnModule for TopWeightOfTensor<'_> {
    fn n(&self) -> usize {
        self.left.n()
    }
    fn dim(&self) -> usize {
        self.pairs.len()
    }
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        let a = self.left.act_map(p)?;
        let b = self.right.act_map(p)?;
        let mut m = RationalMatrix::zeros(self.pairs.len(), self.pairs.len());
        for (r, &(i, j)) in self.pairs.iter().enumerate() {
            for (c, &(k, l)) in self.pairs.iter().enumerate() {
                let x = a.get(i, k) * b.get(j, l);
                if !x.is_zero() {
                    m.set(r, c, x);
                }
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeightSpaceReport {
    pub n: usize,
    pub r: usize,
    pub f_dim: usize,
    pub sym_side_dim: usize,
    pub divided_side_dim: usize,
    pub f_character: ClassFunction,
    pub sym_side_character: ClassFunction,
    pub divided_side_character: ClassFunction,
}

impl WeightSpaceReport {
    pub fn holds(&self) -> bool {
        self.f_dim == self.sym_side_dim
            && self.f_dim == self.divided_side_dim
            && self.f_character == self.sym_side_character
            && self.f_character == self.divided_side_character
    }
}

/// Compares `F(M)` with `f(M ⊗ Sym_{n−r}(V_n))` and `f(M ⊗ D_{n−r}(V_n))`.
pub fn theorem_main1_check(m: &LabeledModule) -> Result<WeightSpaceReport> {
    let n = m.n();
    let r = m.degree();
    if r > n {
        return Err(Error::Invalid(format!("module degree {r} exceeds n = {n}")));
    }
    let sym = LabeledModule::full_space(MultigradedSpace::new(TensorKind::Symmetric, n, vec![n - r]));
    let dp = LabeledModule::full_space(MultigradedSpace::new(TensorKind::DividedPower, n, vec![n - r]));
    let f = WeightZeroOnePart(m);
    let s = TopWeightOfTensor::new(m, &sym)?;
    let d = TopWeightOfTensor::new(m, &dp)?;
    Ok(WeightSpaceReport {
        n,
        r,
        f_dim: f.dim(),
        sym_side_dim: s.dim(),
        divided_side_dim: d.dim(),
        f_character: module_character(&f)?,
        sym_side_character: module_character(&s)?,
        divided_side_character: module_character(&d)?,
    })
}

/// The `S_r`-module `f(M) = M^{(1^r,0^{n−r})}` with every permutation matrix.
#[derive(Debug, Clone)]
pub struct SchurFunctorFiber {
    pub r: usize,
    /// Base indices of the weight `(1^r, 0^{n−r})` vectors.
    pub indices: Vec<usize>,
    matrices: HashMap<Vec<usize>, RationalMatrix>,
}

impl SchurFunctorFiber {
    pub fn new(m: &LabeledModule, r: usize) -> Result<Self> {
        let n = m.n();
        if r > n {
            return Err(Error::Invalid(format!("r = {r} exceeds n = {n}")));
        }
        let target: Vec<usize> = (0..n).map(|i| usize::from(i < r)).collect();
        let indices = m.indices_where(|w| w.coords() == target.as_slice());
        let pos: HashMap<usize, usize> = indices.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut matrices = HashMap::new();
        for sigma in permutations(r) {
            let images = sigma.as_permutation().unwrap();
            let full: Vec<usize> = (0..n).map(|j| if j < r { images[j] } else { j }).collect();
            let cols: Vec<SparseVec> = m
                .act_map_on(&PartialTransformation::from_total(&full), &indices)?
                .into_iter()
                .map(|c| c.remap(|i| pos.get(&i).copied()))
                .collect();
            matrices.insert(images, RationalMatrix::from_columns(indices.len(), &cols));
        }
        Ok(SchurFunctorFiber { r, indices, matrices })
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    /// Matrix of `σ ∈ S_r` given by its images.
    pub fn matrix(&self, images: &[usize]) -> &RationalMatrix {
        &self.matrices[images]
    }
}

/// Order-preserving injections `[r] → [n]` in lexicographic order.
pub fn order_preserving_injections(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// `k I_{n,r} ⊗_{S_r} X` on the basis `h ⊗ x` with `h` order preserving.
#[derive(Debug, Clone)]
pub struct InducedModule {
    pub n: usize,
    pub injections: Vec<Vec<usize>>,
    pub fiber: SchurFunctorFiber,
}

impl InducedModule {
    pub fn new(n: usize, fiber: SchurFunctorFiber) -> Self {
        InducedModule { n, injections: order_preserving_injections(n, fiber.r), fiber }
    }

    pub fn dim(&self) -> usize {
        self.injections.len() * self.fiber.dim()
    }

    /// `A·(h ⊗ x) = h′ ⊗ σx` where `p_A∘h = h′∘σ`, or 0 if `p_A∘h` is not injective and total.
    pub fn act(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        if p.n() != self.n {
            return Err(Error::Invalid("element has the wrong size".into()));
        }
        let fd = self.fiber.dim();
        let index: HashMap<&[usize], usize> =
            self.injections.iter().enumerate().map(|(k, h)| (h.as_slice(), k)).collect();
        let mut m = RationalMatrix::zeros(self.dim(), self.dim());
        for (hk, h) in self.injections.iter().enumerate() {
            let Some(g) = h.iter().map(|&j| p.apply(j)).collect::<Option<Vec<usize>>>() else { continue };
            let mut sorted = g.clone();
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let sigma: Vec<usize> = g.iter().map(|x| sorted.binary_search(x).unwrap()).collect();
            let target = index[sorted.as_slice()];
            let s = self.fiber.matrix(&sigma);
            for a in 0..fd {
                for b in 0..fd {
                    let x = s.get(a, b);
                    if !x.is_zero() {
                        m.set(target * fd + a, hk * fd + b, x.clone());
                    }
                }
            }
        }
        Ok(m)
    }
}

impl SnModule for InducedModule {
    fn n(&self) -> usize {
        self.n
    }
    fn dim(&self) -> usize {
        InducedModule::dim(self)
    }
    fn act_permutation(&self, p: &PartialTransformation) -> Result<RationalMatrix> {
        self.act(p)
    }
}

/// `Φ(h ⊗ m) = A_h m + M″`, with `A_h` the partial map with domain `[r]` agreeing with `h`.
pub fn induced_to_symmetrized(induced: &InducedModule, g: &MonoidModule) -> Result<RationalMatrix> {
    let base = &g.base;
    let r = induced.fiber.r;
    let mut cols = Vec::with_capacity(induced.dim());
    for h in &induced.injections {
        let images: Vec<Option<usize>> = (0..induced.n).map(|j| (j < r).then(|| h[j])).collect();
        let a_h = PartialTransformation::new(images)?;
        for img in base.act_map_on(&a_h, &induced.fiber.indices)? {
            cols.push(g.project(&img));
        }
    }
    Ok(RationalMatrix::from_columns(g.dim(), &cols))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InducedCheck {
    pub induced_dim: usize,
    pub module_dim: usize,
    pub phi_rank: usize,
    /// Elements `A` with `Φ·A_ind ≠ A_G·Φ`.
    pub intertwining_failures: Vec<PartialTransformation>,
    /// Elements whose traces differ on the two sides.
    pub trace_mismatches: Vec<PartialTransformation>,
}

impl InducedCheck {
    pub fn holds(&self) -> bool {
        self.induced_dim == self.module_dim
            && self.phi_rank == self.module_dim
            && self.intertwining_failures.is_empty()
            && self.trace_mismatches.is_empty()
    }
}

/// Builds `k I_{n,r} ⊗_{S_r} f(M)` next to `G(M)`, checks that `Φ` is a
/// bijective intertwiner on `elements`, and compares traces there.
pub fn induction_check(g: &MonoidModule, elements: &[PartialTransformation]) -> Result<InducedCheck> {
    let r = g.base.degree();
    let induced = InducedModule::new(g.n(), SchurFunctorFiber::new(&g.base, r)?);
    let phi = induced_to_symmetrized(&induced, g)?;
    let mut intertwining_failures = Vec::new();
    let mut trace_mismatches = Vec::new();
    for a in elements {
        let ai = induced.act(a)?;
        let ag = g.act_any(a)?;
        if phi.mul(&ai) != ag.mul(&phi) {
            intertwining_failures.push(a.clone());
        }
        if ai.trace() != ag.trace() {
            trace_mismatches.push(a.clone());
        }
    }
    Ok(InducedCheck {
        induced_dim: induced.dim(),
        module_dim: g.dim(),
        phi_rank: phi.rank(),
        intertwining_failures,
        trace_mismatches,
    })
}

/// Traces of every listed element; a cheap isomorphism invariant for monoid modules.
pub fn traces(m: &MonoidModule, elements: &[PartialTransformation]) -> Result<Vec<Rational>> {
    elements.iter().map(|a| m.act_any(a).map(|x| x.trace())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::specht_character;
    use crate::combinatorics::{count_standard, enumerate_partitions, Partition};
    use crate::monoid::enumerate_monoid;
    use crate::rational::binomial;
    use crate::schur::build_schur_module;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> PartialTransformation {
        s.parse().unwrap()
    }

    #[test]
    fn functor_examples() {
        let l2 = Arc::new(build_schur_module(&sh("2"), 3).unwrap());
        let g = symmetrized_functor(l2, MonoidKind::IS).unwrap();
        assert_eq!(g.dim(), 3);
        assert_eq!(build_r_module(MonoidKind::IS, 3, &sh("1,1"), Variant::Upper).unwrap().dim(), 3);

        let sym2 = Arc::new(build_schur_module(&sh("1,1"), 2).unwrap());
        let g = symmetrized_functor(sym2, MonoidKind::T).unwrap();
        assert_eq!(g.dim(), 1);
        assert!(g.act(&pt("1,1")).unwrap().is_zero());
    }

    #[test]
    fn r_module_dims() {
        assert_eq!(build_r_module(MonoidKind::IS, 3, &sh("2,1"), Variant::Upper).unwrap().dim(), 2);
        assert_eq!(build_r_module(MonoidKind::PT, 4, &sh("2"), Variant::Upper).unwrap().dim(), 6);
        assert_eq!(build_r_module(MonoidKind::T, 2, &sh("3"), Variant::Upper).unwrap().dim(), 0);
        for n in 1..=4 {
            for shape in crate::combinatorics::skew_shapes(4, n) {
                let r = shape.size() as u64;
                let expect = binomial(n as u64, r) * count_standard(&shape);
                for v in [Variant::Upper, Variant::Lower] {
                    let m = build_r_module(MonoidKind::PT, n, &shape, v).unwrap();
                    assert_eq!(num_bigint::BigInt::from(m.dim()), expect, "{shape} n={n} {v:?}");
                }
            }
        }
    }

    #[test]
    fn monoid_action_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            let elems = enumerate_monoid(kind, 3).unwrap();
            for shape in ["2,1", "2", "1,1", "1", "2,2/1"] {
                for v in [Variant::Upper, Variant::Lower] {
                    let m = build_r_module(kind, 3, &sh(shape), v).unwrap();
                    for _ in 0..50 {
                        let a = &elems[rng.gen_range(0..elems.len())];
                        let b = &elems[rng.gen_range(0..elems.len())];
                        let lhs = m.act(a).unwrap().mul(&m.act(b).unwrap());
                        assert_eq!(lhs, m.act(&a.compose(b).unwrap()).unwrap(), "{kind} {shape} {a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn low_rank_elements_kill_column_modules() {
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            for r in 1..=3usize {
                let m = build_r_module(kind, 3, &SkewShape::straight(Partition::from_parts(&vec![1; r])), Variant::Upper)
                    .unwrap();
                for a in enumerate_monoid(kind, 3).unwrap() {
                    if a.rank() < r {
                        assert!(m.act(&a).unwrap().is_zero(), "{kind} r={r} {a}");
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let m = build_r_module(MonoidKind::IS, 2, &sh("1"), Variant::Upper).unwrap();
        let gens = restrict_to_symmetric_group(&m).unwrap();
        assert_eq!(gens[0].1, RationalMatrix::from_i64(&[vec![0, 1], vec![1, 0]]));
        let m = build_r_module(MonoidKind::IS, 3, &sh("2,1"), Variant::Upper).unwrap();
        assert_eq!(module_character(&m).unwrap(), specht_character(&Partition::from_parts(&[2, 1])));
    }

    #[test]
    fn upper_and_lower_have_equal_characters() {
        for n in 1..=4 {
            for r in 0..=n {
                for lambda in enumerate_partitions(r, None) {
                    let s = SkewShape::straight(lambda);
                    let u = build_r_module(MonoidKind::PT, n, &s, Variant::Upper).unwrap();
                    let l = build_r_module(MonoidKind::PT, n, &s, Variant::Lower).unwrap();
                    assert_eq!(module_character(&u).unwrap(), module_character(&l).unwrap(), "{s} n={n}");
                }
            }
        }
    }

    #[test]
    fn weight_space_examples() {
        let m = build_schur_module(&sh("2"), 3).unwrap();
        let res = theorem_main1_check(&m).unwrap();
        assert!(res.holds());
        assert_eq!(res.f_dim, 3);
        let m = build_schur_module(&sh("1,1"), 3).unwrap();
        let res = theorem_main1_check(&m).unwrap();
        assert!(res.holds());
        assert_eq!((res.f_dim, res.sym_side_dim), (3, 3));
        let m = build_schur_module(&sh("2,1"), 3).unwrap();
        assert!(theorem_main1_check(&m).unwrap().holds());
    }

    #[test]
    fn induced_examples() {
        // n = r: one injection, module is the fiber.
        let g = build_r_module(MonoidKind::PT, 3, &sh("2,1"), Variant::Upper).unwrap();
        let ind = InducedModule::new(3, SchurFunctorFiber::new(&g.base, 3).unwrap());
        assert_eq!(ind.injections.len(), 1);
        assert_eq!(ind.dim(), g.dim());
        // Trivial fiber of S_2 inside n = 3.
        let g = build_r_module(MonoidKind::PT, 3, &sh("2"), Variant::Upper).unwrap();
        let fiber = SchurFunctorFiber::new(&g.base, 2).unwrap();
        assert_eq!(fiber.dim(), 1);
        assert_eq!(InducedModule::new(3, fiber).dim(), 3);
    }

    #[test]
    fn induced_isomorphism_small() {
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            for n in 1..=3 {
                let elems = enumerate_monoid(kind, n).unwrap();
                for r in 0..=n {
                    for lambda in enumerate_partitions(r, None) {
                        let g = build_r_module(kind, n, &SkewShape::straight(lambda.clone()), Variant::Upper).unwrap();
                        let c = induction_check(&g, &elems).unwrap();
                        assert!(c.holds(), "{kind} n={n} λ={lambda}: {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn injections_count() {
        assert_eq!(order_preserving_injections(4, 2).len(), 6);
        assert_eq!(order_preserving_injections(3, 0), vec![Vec::<usize>::new()]);
    }
}
