//! Exact linear algebra over the rationals: sparse vectors, dense matrices,
//! canonical subspaces and span solving.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("subspace is not contained in the larger space")]
    NotContained,
}

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from arbitrary (index, value) pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut v: Vec<(usize, Rational)> = pairs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(v.len());
        for (i, c) in v {
            match out.last_mut() {
                Some((j, d)) if *j == i => {
                    *d += &c;
                    if d.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((i, c)),
            }
        }
        SparseVec { entries: out }
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        SparseVec {
            entries: v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Rational::one())] }
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Rational)> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, c)| (*i, c))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn scale(&mut self, a: &Rational) {
        if a.is_zero() {
            self.entries.clear();
            return;
        }
        for (_, c) in self.entries.iter_mut() {
            *c *= a;
        }
    }

    pub fn scaled(&self, a: &Rational) -> Self {
        let mut v = self.clone();
        v.scale(a);
        v
    }

    /// `self += a * other`.
    pub fn axpy(&mut self, a: &Rational, other: &SparseVec) {
        if a.is_zero() || other.is_zero() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut x = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut y = other.entries.iter().peekable();
        loop {
            match (x.peek(), y.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(x.next().unwrap()),
                (None, Some(_)) => {
                    let (j, d) = y.next().unwrap();
                    out.push((*j, a * d));
                }
                (Some((i, _)), Some((j, _))) => {
                    if i < j {
                        out.push(x.next().unwrap());
                    } else if j < i {
                        let (j, d) = y.next().unwrap();
                        out.push((*j, a * d));
                    } else {
                        let (i, c) = x.next().unwrap();
                        let (_, d) = y.next().unwrap();
                        let s = c + &(a * d);
                        if !s.is_zero() {
                            out.push((i, s));
                        }
                    }
                }
            }
        }
        self.entries = out;
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut v = self.clone();
        v.axpy(&Rational::one(), other);
        v
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut v = self.clone();
        v.axpy(&-Rational::one(), other);
        v
    }

    pub fn dot(&self, other: &SparseVec) -> Rational {
        let mut acc = Rational::zero();
        let (mut i, mut j) = (0, 0);
        while i < self.entries.len() && j < other.entries.len() {
            let (a, b) = (self.entries[i].0, other.entries[j].0);
            if a < b {
                i += 1;
            } else if b < a {
                j += 1;
            } else {
                acc += &(&self.entries[i].1 * &other.entries[j].1);
                i += 1;
                j += 1;
            }
        }
        acc
    }

    /// Keeps only entries whose index satisfies `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(usize) -> bool) -> SparseVec {
        SparseVec { entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect() }
    }

    /// Reindexes through `f`, dropping entries mapped to `None`.
    pub fn remap(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().filter_map(|(i, c)| f(*i).map(|j| (j, c.clone()))))
    }
}

/// Dense row-major rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_int(x)).collect()).collect())
    }

    /// Builds a matrix whose columns are the given sparse vectors.
    pub fn from_columns(rows: usize, cols: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            for (i, c) in v.entries() {
                m.set(*i, j, c.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_sparse(&self, i: usize) -> SparseVec {
        SparseVec::from_dense(self.row(i))
    }

    pub fn column_sparse(&self, j: usize) -> SparseVec {
        SparseVec::from_pairs((0..self.rows).map(|i| (i, self.get(i, j).clone())))
    }

    pub fn rows_sparse(&self) -> Vec<SparseVec> {
        (0..self.rows).map(|i| self.row_sparse(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scaled(&self, a: &Rational) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * a).collect() }
    }

    /// `self * v` for a sparse column vector.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = vec![Rational::zero(); self.rows];
        for (j, c) in v.entries() {
            for (i, o) in out.iter_mut().enumerate() {
                let a = self.get(i, *j);
                if !a.is_zero() {
                    *o += &(a * c);
                }
            }
        }
        SparseVec::from_dense(&out)
    }

    /// Row vector times matrix: `v * self`.
    pub fn apply_left(&self, v: &SparseVec) -> SparseVec {
        let mut out = vec![Rational::zero(); self.cols];
        for (i, c) in v.entries() {
            for (j, o) in out.iter_mut().enumerate() {
                let a = self.get(*i, j);
                if !a.is_zero() {
                    *o += &(a * c);
                }
            }
        }
        SparseVec::from_dense(&out)
    }

    pub fn trace(&self) -> Rational {
        let mut t = Rational::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    /// Exact fraction CSV dump, one row per line.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(","));
        }
        s
    }

    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_string()).collect()).collect()
    }
}

/// Reduced row echelon form and rank.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, usize) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        if p != r {
            for j in 0..cols {
                a.data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = a.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let x = a.get(r, j);
                if !x.is_zero() {
                    let v = a.get(i, j) - &(&f * x);
                    a.set(i, j, v);
                }
            }
        }
        r += 1;
    }
    (a, r)
}

/// Right null space of `m`.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    let (e, rank) = rref(m);
    let cols = m.ncols();
    let mut pivots = Vec::with_capacity(rank);
    for i in 0..rank {
        let p = (0..cols).find(|&j| !e.get(i, j).is_zero()).expect("pivot row is nonzero");
        pivots.push(p);
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut pairs = vec![(f, Rational::one())];
        for (i, &p) in pivots.iter().enumerate() {
            let x = e.get(i, f);
            if !x.is_zero() {
                pairs.push((p, -x.clone()));
            }
        }
        basis.push(SparseVec::from_pairs(pairs));
    }
    Subspace::from_vectors(cols, basis)
}

/// Characteristic polynomial `det(xI − m)`, coefficients from the constant
/// term up (Faddeev–LeVerrier).
pub fn charpoly(m: &RationalMatrix) -> Vec<Rational> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "charpoly needs a square matrix");
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = m.mul(&mk);
        for i in 0..n {
            let v = next.get(i, i) + &coeffs[n - k + 1];
            next.set(i, i, v);
        }
        let t = m.mul(&next).trace();
        coeffs[n - k] = -(&t / &Rational::from_int(k as i64));
        mk = next;
    }
    coeffs
}

/// Evaluates a polynomial given constant term first.
pub fn eval_poly(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
}

/// Fraction-free Gaussian elimination on an integer matrix; returns the rank
/// and, for square input, the determinant.
pub fn bareiss(m: &[Vec<BigInt>]) -> (usize, Option<BigInt>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut prev = BigInt::from(1);
    let mut sign = 1i32;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // Smallest nonzero magnitude in the column keeps entries small.
        let Some(p) = (r..rows).filter(|&i| !a[i][c].is_zero()).min_by_key(|&i| a[i][c].abs()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if rows == cols {
        if r < rows {
            Some(BigInt::zero())
        } else {
            Some(if sign > 0 { prev } else { -prev })
        }
    } else {
        None
    };
    (r, det)
}

/// Row echelon store kept in reduced form, optionally tracking each row as a
/// combination of the inserted vectors.
#[derive(Debug, Clone)]
struct Echelon {
    dim: usize,
    rows: Vec<SparseVec>,
    combos: Option<Vec<SparseVec>>,
    row_of_pivot: HashMap<usize, usize>,
    inserted: usize,
}

impl Echelon {
    fn new(dim: usize, track: bool) -> Self {
        Echelon { dim, rows: Vec::new(), combos: track.then(Vec::new), row_of_pivot: HashMap::new(), inserted: 0 }
    }

    /// Residual of `v` and (if tracking) the combination that was subtracted.
    fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut r = v.clone();
        let mut used = SparseVec::new();
        for (i, c) in v.entries() {
            if let Some(&k) = self.row_of_pivot.get(i) {
                let neg = -c.clone();
                r.axpy(&neg, &self.rows[k]);
                if let Some(combos) = &self.combos {
                    used.axpy(c, &combos[k]);
                }
            }
        }
        (r, used)
    }

    /// Inserts `v`; returns true if the span grew.
    fn insert(&mut self, v: &SparseVec) -> bool {
        let idx = self.inserted;
        self.inserted += 1;
        let (mut r, used) = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        let (p, lead) = r.leading().map(|(p, c)| (p, c.clone())).unwrap();
        let inv = lead.recip();
        r.scale(&inv);
        let mut combo = SparseVec::new();
        if self.combos.is_some() {
            combo = SparseVec::unit(idx);
            combo.axpy(&-Rational::one(), &used);
            combo.scale(&inv);
        }
        for k in 0..self.rows.len() {
            let f = self.rows[k].get(p);
            if !f.is_zero() {
                let neg = -f;
                self.rows[k].axpy(&neg, &r);
                if let Some(combos) = self.combos.as_mut() {
                    let ck = combo.clone();
                    combos[k].axpy(&neg, &ck);
                }
            }
        }
        self.row_of_pivot.insert(p, self.rows.len());
        self.rows.push(r);
        if let Some(combos) = self.combos.as_mut() {
            combos.push(combo);
        }
        true
    }
}

/// A subspace of `Q^dim` in canonical reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Subspace {
    ech: Echelon,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ech.dim == other.ech.dim && self.basis() == other.basis()
    }
}

impl Eq for Subspace {}

impl Subspace {
    pub fn zero(dim: usize) -> Self {
        Subspace { ech: Echelon::new(dim, false) }
    }

    pub fn full(dim: usize) -> Self {
        Self::from_vectors(dim, (0..dim).map(SparseVec::unit))
    }

    pub fn from_vectors<I: IntoIterator<Item = SparseVec>>(dim: usize, vs: I) -> Self {
        let mut s = Self::zero(dim);
        for v in vs {
            s.insert(&v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.dim
    }

    pub fn dim(&self) -> usize {
        self.ech.rows.len()
    }

    /// Adds `v` to the span; returns true if the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.max_index().is_none_or(|i| i < self.ech.dim), "vector outside ambient space");
        self.ech.insert(v)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.ech.reduce(v).0.is_zero()
    }

    /// Residual of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.ech.reduce(v).0
    }

    /// Pivot columns in increasing order.
    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.ech.row_of_pivot.keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.ech.row_of_pivot.contains_key(&col)
    }

    /// Canonical basis: RREF rows sorted by pivot.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.pivots().into_iter().map(|p| self.ech.rows[self.ech.row_of_pivot[&p]].clone()).collect()
    }

    /// Basis rows in insertion order (cheaper than `basis`).
    pub fn rows(&self) -> &[SparseVec] {
        &self.ech.rows
    }

    pub fn as_matrix(&self) -> RationalMatrix {
        let b = self.basis();
        let mut m = RationalMatrix::zeros(b.len(), self.ech.dim);
        for (i, v) in b.iter().enumerate() {
            for (j, c) in v.entries() {
                m.set(i, *j, c.clone());
            }
        }
        m
    }

    fn check_dim(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ech.dim != other.ech.dim {
            return Err(LinalgError::DimensionMismatch { expected: self.ech.dim, found: other.ech.dim });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_dim(other)?;
        let mut s = self.clone();
        for v in other.rows() {
            s.insert(v);
        }
        Ok(s)
    }

    /// Zassenhaus intersection.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_dim(other)?;
        let d = self.ech.dim;
        let mut z = Subspace::zero(2 * d);
        for v in self.rows() {
            let doubled = SparseVec::from_pairs(
                v.entries().iter().map(|(i, c)| (*i, c.clone())).chain(v.entries().iter().map(|(i, c)| (i + d, c.clone()))),
            );
            z.insert(&doubled);
        }
        for v in other.rows() {
            z.insert(v);
        }
        let out = z
            .basis()
            .into_iter()
            .filter(|v| v.leading().is_some_and(|(p, _)| p >= d))
            .map(|v| v.remap(|i| i.checked_sub(d)));
        Ok(Subspace::from_vectors(d, out))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ech.dim == other.ech.dim && self.rows().iter().all(|v| other.contains(v))
    }

    /// `dim A - dim B` for `B ⊆ A`.
    pub fn quotient_dim(a: &Subspace, b: &Subspace) -> Result<usize, LinalgError> {
        a.check_dim(b)?;
        if !b.is_subspace_of(a) {
            return Err(LinalgError::NotContained);
        }
        Ok(a.dim() - b.dim())
    }

    /// Whether `m * v` stays in the subspace for every basis vector, where
    /// `m` acts on column vectors.
    pub fn is_invariant_under(&self, m: &RationalMatrix) -> bool {
        self.rows().iter().all(|v| self.contains(&m.apply(v)))
    }
}

/// Outcome of solving `v = sum c_i b_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpanResult {
    InSpan(Vec<Rational>),
    NotInSpan,
}

/// Incremental solver for expressing vectors in a fixed spanning list.
#[derive(Debug, Clone)]
pub struct SpanSolver {
    ech: Echelon,
    count: usize,
    independent: bool,
}

impl SpanSolver {
    pub fn new(dim: usize, basis: &[SparseVec]) -> Self {
        let mut ech = Echelon::new(dim, true);
        let mut independent = true;
        for b in basis {
            independent &= ech.insert(b);
        }
        SpanSolver { ech, count: basis.len(), independent }
    }

    pub fn is_independent(&self) -> bool {
        self.independent
    }

    pub fn rank(&self) -> usize {
        self.ech.rows.len()
    }

    /// Sparse coefficient vector, or `None` when `v` is outside the span.
    pub fn solve_sparse(&self, v: &SparseVec) -> Option<SparseVec> {
        let (r, used) = self.ech.reduce(v);
        r.is_zero().then_some(used)
    }

    pub fn solve(&self, v: &SparseVec) -> SpanResult {
        match self.solve_sparse(v) {
            Some(c) => SpanResult::InSpan(c.to_dense(self.count)),
            None => SpanResult::NotInSpan,
        }
    }
}

/// Coefficients of `v` in terms of `basis`, or `NotInSpan`.
pub fn express_in_basis(v: &SparseVec, basis: &[SparseVec]) -> SpanResult {
    let dim = basis
        .iter()
        .chain(std::iter::once(v))
        .filter_map(|b| b.max_index())
        .max()
        .map_or(0, |m| m + 1);
    SpanSolver::new(dim, basis).solve(v)
}

/// Matrix of the map induced on `Q^d / sub` by `m`, using the non-pivot
/// coordinates of `sub` as quotient basis. Returns the complement columns too.
pub fn quotient_action(m: &RationalMatrix, sub: &Subspace) -> (RationalMatrix, Vec<usize>) {
    let d = m.nrows();
    let free: Vec<usize> = (0..d).filter(|c| !sub.is_pivot(*c)).collect();
    let pos: HashMap<usize, usize> = free.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut out = RationalMatrix::zeros(free.len(), free.len());
    for (k, &c) in free.iter().enumerate() {
        let image = sub.reduce(&m.column_sparse(c));
        for (i, x) in image.entries() {
            out.set(pos[i], k, x.clone());
        }
    }
    (out, free)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(x: i64) -> Rational {
        Rational::from_int(x)
    }

    fn sv(v: &[i64]) -> SparseVec {
        SparseVec::from_dense(&v.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    fn random_int_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
        (0..r).map(|_| (0..c).map(|_| rng.gen_range(lo..=hi)).collect()).collect()
    }

    fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    /// Cofactor expansion, independent of any elimination.
    fn det_cofactor(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::from(1);
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<i64>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
            let term = BigInt::from(m[0][j]) * det_cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn rref_examples() {
        let i3 = RationalMatrix::identity(3);
        assert_eq!(rref(&i3), (i3.clone(), 3));
        let m = RationalMatrix::from_i64(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(rref(&m), (RationalMatrix::from_i64(&[vec![1, 2], vec![0, 0]]), 1));
    }

    #[test]
    fn rank_matches_bareiss_on_random_5x5() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for trial in 0..100 {
            // Low-rank products show up every few trials.
            let m = if trial % 3 == 0 {
                let a = random_int_matrix(&mut rng, 5, 2, -3, 3);
                let b = random_int_matrix(&mut rng, 2, 5, -3, 3);
                (0..5).map(|i| (0..5).map(|j| (0..2).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
            } else {
                random_int_matrix(&mut rng, 5, 5, -9, 9)
            };
            let (rank_b, det) = bareiss(&to_big(&m));
            assert_eq!(RationalMatrix::from_i64(&m).rank(), rank_b);
            assert_eq!(det.unwrap(), det_cofactor(&m));
        }
    }

    #[test]
    fn kernel_examples() {
        let z = RationalMatrix::zeros(2, 3);
        assert_eq!(kernel(&z).dim(), 3);
        assert_eq!(kernel(&RationalMatrix::identity(4)).dim(), 0);
        let m = RationalMatrix::from_i64(&[vec![1, 1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(m.apply(&v).is_zero());
        }
    }

    #[test]
    fn subspace_ops_examples() {
        let a = Subspace::from_vectors(5, [sv(&[1, 2, 0, 0, 1]), sv(&[0, 1, 1, 0, 0])]);
        assert_eq!(a.intersection(&a).unwrap(), a);
        assert_eq!(Subspace::quotient_dim(&a, &a).unwrap(), 0);

        let x = Subspace::from_vectors(5, (0..2).map(SparseVec::unit));
        let y = Subspace::from_vectors(5, (2..5).map(SparseVec::unit));
        assert_eq!(x.sum(&y).unwrap().dim(), 5);
        assert_eq!(x.intersection(&y).unwrap().dim(), 0);

        let other = Subspace::zero(4);
        assert!(matches!(a.sum(&other), Err(LinalgError::DimensionMismatch { .. })));
        assert_eq!(Subspace::quotient_dim(&x, &y), Err(LinalgError::NotContained));
    }

    #[test]
    fn grassmann_on_random_3dim_subspaces_of_q4() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = Subspace::from_vectors(4, random_int_matrix(&mut rng, 3, 4, -2, 2).iter().map(|r| sv(r)));
            let b = Subspace::from_vectors(4, random_int_matrix(&mut rng, 3, 4, -2, 2).iter().map(|r| sv(r)));
            let s = a.sum(&b).unwrap();
            let i = a.intersection(&b).unwrap();
            assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            assert!(i.is_subspace_of(&a) && i.is_subspace_of(&b));
        }
    }

    #[test]
    fn express_examples() {
        let b = vec![sv(&[1, 0, 1, 0]), sv(&[0, 1, 1, 0]), sv(&[0, 0, 1, 1])];
        assert_eq!(express_in_basis(&b[0], &b), SpanResult::InSpan(vec![q(1), q(0), q(0)]));
        let v = b[0].scaled(&q(2)).sub(&b[1].scaled(&q(3)));
        assert_eq!(express_in_basis(&v, &b), SpanResult::InSpan(vec![q(2), q(-3), q(0)]));
        let outside = sv(&[1, 0, 0, 0]);
        assert_eq!(express_in_basis(&outside, &b), SpanResult::NotInSpan);
        let mut grown = Subspace::from_vectors(4, b.clone());
        assert!(grown.insert(&outside));
    }

    #[test]
    fn quotient_action_on_invariant_line() {
        // Swap matrix on Q^2 modulo the invariant line spanned by (1,1).
        let m = RationalMatrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        let sub = Subspace::from_vectors(2, [sv(&[1, 1])]);
        assert!(sub.is_invariant_under(&m));
        let (qm, free) = quotient_action(&m, &sub);
        assert_eq!(free, vec![1]);
        assert_eq!(qm, RationalMatrix::from_i64(&[vec![-1]]));
    }

    #[test]
    fn csv_dump() {
        let m = RationalMatrix::from_rows(vec![vec![Rational::new(1, 2), q(-3)]]);
        assert_eq!(m.to_csv(), "1/2,-3\n");
    }

    fn matrix_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn rank_equals_rank_of_transpose(m in matrix_strategy(30)) {
            let a = RationalMatrix::from_i64(&m);
            prop_assert_eq!(a.rank(), a.transpose().rank());
        }
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in matrix_strategy(8)) {
            let (e, r) = rref(&RationalMatrix::from_i64(&m));
            let (e2, r2) = rref(&e);
            prop_assert_eq!(e, e2);
            prop_assert_eq!(r, r2);
        }

        #[test]
        fn spanning_sets_give_identical_canonical_bases(m in matrix_strategy(6), seed in 0u64..1000) {
            let rows: Vec<SparseVec> = m.iter().map(|r| sv(r)).collect();
            let dim = m[0].len();
            let a = Subspace::from_vectors(dim, rows.clone());
            // Re-span with shuffled random recombinations of the same rows.
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut mixed: Vec<SparseVec> = rows.clone();
            for _ in 0..rows.len() {
                let i = rng.gen_range(0..rows.len());
                let j = rng.gen_range(0..rows.len());
                let c = q(rng.gen_range(-3..=3));
                let v = mixed[i].add(&rows[j].scaled(&c));
                mixed.push(v);
            }
            mixed.reverse();
            let b = Subspace::from_vectors(dim, mixed);
            prop_assert_eq!(a.basis(), b.basis());
            let (e, _) = rref(&RationalMatrix::from_i64(&m));
            let nonzero: Vec<SparseVec> = e.rows_sparse().into_iter().filter(|v| !v.is_zero()).collect();
            prop_assert_eq!(a.basis(), nonzero);
        }
    }

    #[test]
    fn charpoly_examples() {
        let m = RationalMatrix::from_i64(&[vec![2, 1], vec![1, 2]]);
        let p = charpoly(&m);
        assert_eq!(p, vec![Rational::from_int(3), Rational::from_int(-4), Rational::one()]);
        assert!(eval_poly(&p, &Rational::from_int(3)).is_zero());
        let m = RationalMatrix::from_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![6, -11, 6]]);
        for root in [1, 2, 3] {
            assert!(eval_poly(&charpoly(&m), &Rational::from_int(root)).is_zero());
        }
    }
}
