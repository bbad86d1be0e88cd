//! Orbit harmonics for the loci `IS_n`, `PT_n`, `T_n ⊂ Mat_n`: vanishing
//! ideals, their associated graded ideals, and the comparison with `J_n(Z)`.
//!
//! A monomial takes the value 1 at a 0/1 point exactly when its support is
//! inside the point's support, so every evaluation is a set containment.
//! Write `E_d ⊆ Q^Z` for the span of the evaluations of monomials of degree
//! `≤ d`. Then `h ∈ gr(I)_d` iff `eval(h) ∈ E_{d-1}`, and
//! `dim (k[x]/gr I)_d = dim E_d − dim E_{d-1}`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cauchy::graded_ideal;
use crate::error::{Error, Result};
use crate::linalg::{kernel, RationalMatrix, SparseVec, Subspace};
use crate::monoid::{enumerate_monoid, MonoidKind, PartialTransformation};
use crate::poly::{count_monomials, monomials, Flavor, Monomial, Polynomial};
use crate::rational::Rational;

/// The elements of a transformation monoid as 0/1 matrices.
#[derive(Debug, Clone)]
pub struct PointLocus {
    pub kind: MonoidKind,
    pub n: usize,
    pub points: Vec<PartialTransformation>,
    /// Variable indices of the 1-entries of each point, sorted.
    supports: Vec<Vec<u8>>,
}

impl PointLocus {
    pub fn new(kind: MonoidKind, n: usize) -> Result<Self> {
        let points = enumerate_monoid(kind, n)?;
        let supports = points
            .iter()
            .map(|p| {
                let mut s: Vec<u8> = (0..n).filter_map(|j| p.apply(j).map(|i| (i * n + j) as u8)).collect();
                s.sort_unstable();
                s
            })
            .collect();
        Ok(PointLocus { kind, n, points, supports })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn nvars(&self) -> usize {
        self.n * self.n
    }

    /// Values of a monomial at every point.
    pub fn eval_monomial(&self, key: &[u8]) -> SparseVec {
        SparseVec::from_pairs(
            self.supports.iter().enumerate().filter(|(_, s)| key.iter().all(|v| s.binary_search(v).is_ok())).map(|(i, _)| (i, Rational::one())),
        )
    }

    pub fn eval(&self, p: &Polynomial) -> SparseVec {
        let mut acc = SparseVec::new();
        for (k, c) in p.terms() {
            acc.axpy(c, &self.eval_monomial(k));
        }
        acc
    }

    /// `E_0 ⊆ E_1 ⊆ … ⊆ E_d`. Only supports contained in some point matter,
    /// and a monomial's value depends on its support alone.
    pub fn evaluation_spans(&self, d: usize) -> Vec<Subspace> {
        let mut by_size: Vec<BTreeSet<Vec<u8>>> = vec![BTreeSet::new(); d + 1];
        for s in &self.supports {
            for mask in 0u32..(1 << s.len()) {
                let sub: Vec<u8> = (0..s.len()).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect();
                if sub.len() <= d {
                    by_size[sub.len()].insert(sub);
                }
            }
        }
        let mut out = Vec::with_capacity(d + 1);
        let mut cur = Subspace::zero(self.len());
        for layer in by_size {
            for sub in layer {
                cur.insert(&self.eval_monomial(&sub));
            }
            out.push(cur.clone());
        }
        out
    }
}

/// `I(Z)` in degrees `≤ d`, as a subspace over the returned monomial list.
/// Dense elimination over every monomial, so small cases only.
pub fn vanishing_ideal_upto(locus: &PointLocus, d: usize) -> (Vec<Monomial>, Subspace) {
    let monos: Vec<Monomial> = (0..=d).flat_map(|k| monomials(Flavor::Commuting, locus.nvars(), k)).collect();
    let mut m = RationalMatrix::zeros(locus.len(), monos.len());
    for (c, k) in monos.iter().enumerate() {
        for (r, v) in locus.eval_monomial(k).entries() {
            m.set(*r, c, v.clone());
        }
    }
    (monos, kernel(&m))
}

/// `gr(I(Z))_d` inside the span of the degree-`d` monomials.
#[derive(Debug, Clone)]
pub struct GradedIdealSlice {
    pub degree: usize,
    pub monomials: Vec<Monomial>,
    pub span: Subspace,
}

impl GradedIdealSlice {
    pub fn polynomial_of(&self, n: usize, v: &SparseVec) -> Polynomial {
        let mut p = Polynomial::zero(Flavor::Commuting, n, n);
        for (i, c) in v.entries() {
            p.add_term(self.monomials[*i].clone(), c);
        }
        p
    }

    pub fn coords(&self, p: &Polynomial) -> Option<SparseVec> {
        let pos: std::collections::HashMap<&Monomial, usize> = self.monomials.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut pairs = Vec::new();
        for (k, c) in p.terms() {
            pairs.push((*pos.get(k)?, c.clone()));
        }
        Some(SparseVec::from_pairs(pairs))
    }
}

/// Homogeneous `h` of degree `d` with `eval(h) ∈ E_{d-1}`, i.e. the top forms
/// of elements of `I(Z)` of degree `d`.
pub fn associated_graded_slice(locus: &PointLocus, d: usize) -> GradedIdealSlice {
    let monos = monomials(Flavor::Commuting, locus.nvars(), d);
    let lower = if d == 0 { Subspace::zero(locus.len()) } else { locus.evaluation_spans(d - 1).pop().unwrap() };
    let mut m = RationalMatrix::zeros(locus.len(), monos.len());
    for (c, k) in monos.iter().enumerate() {
        for (r, v) in lower.reduce(&locus.eval_monomial(k)).entries() {
            m.set(*r, c, v.clone());
        }
    }
    GradedIdealSlice { degree: d, monomials: monos, span: kernel(&m) }
}

/// The slice read off from the vanishing ideal itself: top-degree parts of
/// `I(Z)_{≤d}`. The elements whose degree-`d` part is zero project to zero.
pub fn top_forms_of_vanishing_ideal(locus: &PointLocus, d: usize) -> GradedIdealSlice {
    let (monos, ker) = vanishing_ideal_upto(locus, d);
    let first_top = monos.iter().position(|k| k.len() == d).unwrap_or(monos.len());
    let top: Vec<Monomial> = monos[first_top..].to_vec();
    let span = Subspace::from_vectors(top.len(), ker.rows().iter().map(|v| v.remap(|i| i.checked_sub(first_top))));
    GradedIdealSlice { degree: d, monomials: top, span }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: usize,
    pub monomials: usize,
    /// `dim (k[x]/gr I)_d`.
    pub gr_quotient: usize,
    /// `dim (k[x]/J)_d`.
    pub j_quotient: usize,
    /// Subspace equality in the full monomial space, when computed.
    pub explicit_equal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarmonicsReport {
    pub kind: MonoidKind,
    pub n: usize,
    pub points: usize,
    pub dmax: usize,
    pub degrees: Vec<DegreeCheck>,
    pub hilbert: Vec<usize>,
    pub total: usize,
    /// Highest degree with a nonzero quotient.
    pub top_degree: usize,
    /// Every generator of `J_n(Z)` is the top form of a vanishing polynomial.
    pub generators_in_gr: bool,
    /// Both quotients reached zero within `dmax`.
    pub reached_zero: bool,
    pub gr_equals_j: bool,
}

impl HarmonicsReport {
    pub fn holds(&self) -> bool {
        self.gr_equals_j && self.total == self.points
    }
}

/// `gr I(Z) = J_n(Z)`: `J ⊆ gr` on generators (both are ideals), then equal
/// codimension degree by degree. With `explicit`, the two degree components
/// are also compared as subspaces.
pub fn check_gr_equals_j(kind: MonoidKind, n: usize, dmax: usize, explicit: bool) -> Result<HarmonicsReport> {
    if kind == MonoidKind::Sym || n == 0 {
        return Err(Error::Invalid("orbit harmonics are computed for is, pt and t with n ≥ 1".into()));
    }
    let locus = PointLocus::new(kind, n)?;
    let spans = locus.evaluation_spans(dmax);
    let ideal = graded_ideal(Flavor::Commuting, Some(kind), n, n)?;
    let generators_in_gr = ideal.generators.iter().all(|g| {
        let e = g.degree().unwrap_or(0);
        e > 0 && spans[e - 1].contains(&locus.eval(g))
    });
    let mut degrees = Vec::new();
    let mut reached_zero = false;
    for d in 0..=dmax {
        let gr_quotient = spans[d].dim() - if d == 0 { 0 } else { spans[d - 1].dim() };
        let comp = ideal.component(d);
        let explicit_equal = explicit.then(|| {
            let slice = associated_graded_slice(&locus, d);
            let (_, j_full) = comp.full_subspace();
            slice.span == j_full
        });
        degrees.push(DegreeCheck {
            degree: d,
            monomials: count_monomials(Flavor::Commuting, n * n, d),
            gr_quotient,
            j_quotient: comp.quotient_dim(),
            explicit_equal,
        });
        if d > 0 && gr_quotient == 0 && comp.quotient_dim() == 0 {
            reached_zero = true;
            break;
        }
    }
    let hilbert: Vec<usize> = degrees.iter().map(|c| c.gr_quotient).collect();
    let top_degree = hilbert.iter().rposition(|&h| h > 0).unwrap_or(0);
    let gr_equals_j = generators_in_gr
        && reached_zero
        && degrees.iter().all(|c| c.gr_quotient == c.j_quotient && c.explicit_equal != Some(false));
    Ok(HarmonicsReport {
        kind,
        n,
        points: locus.len(),
        dmax,
        total: hilbert.iter().sum(),
        hilbert: trim(hilbert),
        degrees,
        top_degree,
        generators_in_gr,
        reached_zero,
        gr_equals_j,
    })
}

fn trim(mut h: Vec<usize>) -> Vec<usize> {
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    h
}

/// `dim (k[x]/gr I(Z))_d` for `d = 0, 1, …` until it vanishes.
pub fn hilbert_function(kind: MonoidKind, n: usize) -> Result<Vec<usize>> {
    let locus = PointLocus::new(kind, n)?;
    let spans = locus.evaluation_spans(default_dmax(n));
    let mut h = vec![spans[0].dim()];
    for d in 1..spans.len() {
        let k = spans[d].dim() - spans[d - 1].dim();
        if k == 0 {
            break;
        }
        h.push(k);
    }
    Ok(h)
}

/// Default degree bound: `n²`, but at least `n + 1` so that the first
/// vanishing degree is always reached.
pub fn default_dmax(n: usize) -> usize {
    (n * n).max(n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_int(v)
    }

    #[test]
    fn vanishing_ideal_examples() {
        let sym = PointLocus::new(MonoidKind::Sym, 1).unwrap();
        let (monos, ker) = vanishing_ideal_upto(&sym, 1);
        assert_eq!(ker.dim(), monos.len() - 1);
        // IS_1 = {0, 1}: x² − x vanishes.
        let is1 = PointLocus::new(MonoidKind::IS, 1).unwrap();
        let (monos, ker) = vanishing_ideal_upto(&is1, 2);
        let x2_minus_x = SparseVec::from_pairs(
            monos.iter().enumerate().filter_map(|(i, k)| match k.len() {
                1 => Some((i, q(-1))),
                2 => Some((i, q(1))),
                _ => None,
            }),
        );
        assert!(ker.contains(&x2_minus_x));
        // Column sums minus one vanish on T_2.
        let t2 = PointLocus::new(MonoidKind::T, 2).unwrap();
        for j in 0..2 {
            let p = Polynomial::var(Flavor::Commuting, 2, 2, 0, j)
                .add(&Polynomial::var(Flavor::Commuting, 2, 2, 1, j))
                .sub(&Polynomial::constant(Flavor::Commuting, 2, 2, q(1)));
            assert!(t2.eval(&p).is_zero());
        }
    }

    #[test]
    fn slice_examples() {
        let is1 = PointLocus::new(MonoidKind::IS, 1).unwrap();
        let s = associated_graded_slice(&is1, 2);
        assert_eq!(s.span.dim(), 1);
        assert_eq!(associated_graded_slice(&is1, 0).span.dim(), 0);
        let t2 = PointLocus::new(MonoidKind::T, 2).unwrap();
        let s = associated_graded_slice(&t2, 1);
        let col = |j| Polynomial::var(Flavor::Commuting, 2, 2, 0, j).add(&Polynomial::var(Flavor::Commuting, 2, 2, 1, j));
        let expected = Subspace::from_vectors(4, [0, 1].map(|j| s.coords(&col(j)).unwrap()));
        assert_eq!(s.span, expected);
    }

    #[test]
    fn slice_matches_top_forms_of_kernel() {
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            for n in 1..=2 {
                let locus = PointLocus::new(kind, n).unwrap();
                for d in 0..=n + 1 {
                    assert_eq!(associated_graded_slice(&locus, d).span, top_forms_of_vanishing_ideal(&locus, d).span, "{kind} n={n} d={d}");
                }
            }
        }
    }

    #[test]
    fn report_examples() {
        let r = check_gr_equals_j(MonoidKind::IS, 2, 4, true).unwrap();
        assert_eq!((r.hilbert.clone(), r.total), (vec![1, 4, 2], 7));
        assert!(r.holds(), "{r:?}");
        let r = check_gr_equals_j(MonoidKind::T, 2, 4, true).unwrap();
        assert_eq!((r.hilbert.clone(), r.total), (vec![1, 2, 1], 4));
        assert!(r.holds());
        let r = check_gr_equals_j(MonoidKind::PT, 1, 2, true).unwrap();
        assert_eq!(r.hilbert, vec![1, 1]);
        assert!(r.holds());
        assert_eq!(hilbert_function(MonoidKind::PT, 2).unwrap(), vec![1, 4, 4]);
    }

    #[test]
    fn gr_equals_j_up_to_three() {
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            for n in 1..=3 {
                let r = check_gr_equals_j(kind, n, default_dmax(n), n <= 2).unwrap();
                assert!(r.holds(), "{r:?}");
                assert_eq!(r.top_degree, if kind == MonoidKind::T && n == 1 { 0 } else { n });
            }
        }
    }

    #[test]
    fn slices_are_ideal_like_and_equivariant() {
        for kind in MonoidKind::TRANSFORMATION_KINDS {
            let locus = PointLocus::new(kind, 2).unwrap();
            let slices: Vec<GradedIdealSlice> = (0..=3).map(|d| associated_graded_slice(&locus, d)).collect();
            let id = RationalMatrix::identity(2);
            for d in 0..3 {
                for v in slices[d].span.rows() {
                    let p = slices[d].polynomial_of(2, v);
                    for var in 0..4 {
                        let xp = p.mul(&Polynomial::var(Flavor::Commuting, 2, 2, var / 2, var % 2));
                        assert!(slices[d + 1].span.contains(&slices[d + 1].coords(&xp).unwrap()));
                    }
                    for g in kind.generators(2) {
                        let a = g.matrix_of();
                        for img in [p.compose_linear(&a, &id), p.compose_linear(&id, &a)] {
                            let c = slices[d].coords(&img.homogeneous_part(d)).unwrap();
                            assert!(img.is_zero() || slices[d].span.contains(&c), "{kind} {g} {p}");
                        }
                    }
                }
            }
        }
    }
}
