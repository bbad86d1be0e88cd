//! Partitions, skew shapes, tableaux and weights.
//!
//! Tableau convention: a *semistandard* tableau is strictly increasing along
//! rows and weakly increasing down columns. This is the conjugate of the more
//! common column-strict convention, so `SST(λ)` here has the same size as the
//! usual column-strict set for `λ′`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A partition with trailing zeros stripped.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("invalid shape `{input}` at position {position}: {message}")]
    Parse { input: String, position: usize, message: String },
    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("inner partition {inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        if p.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotDecreasing(p));
        }
        Ok(Partition(p))
    }

    /// Panicking constructor for literals in code and tests.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition")
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// `other ⊆ self` componentwise.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Whether this is `(1^r)` with `r ≥ 1`.
    pub fn is_column(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|&p| p == 1)
    }

    /// Whether this is a single row `(r)` (including the empty partition).
    pub fn is_row(&self) -> bool {
        self.0.len() <= 1
    }

    /// Lexicographic comparison of two sequences padded with zeros.
    pub fn lex_cmp(a: &[usize], b: &[usize]) -> std::cmp::Ordering {
        let n = a.len().max(b.len());
        for i in 0..n {
            let (x, y) = (a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0));
            if x != y {
                return x.cmp(&y);
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn parse_parts(input: &str, s: &str, offset: usize) -> Result<Vec<usize>, ShapeError> {
    let t = s.trim();
    if t.is_empty() || t == "∅" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in s.split(',') {
        let trimmed = piece.trim();
        let lead = piece.len() - piece.trim_start().len();
        let v: usize = trimmed.parse().map_err(|_| ShapeError::Parse {
            input: input.to_string(),
            position: pos + lead + 1,
            message: format!("expected a nonnegative integer, found `{trimmed}`"),
        })?;
        out.push(v);
        pos += piece.len() + 1;
    }
    Ok(out)
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Parses `"2,1"`; the empty string, `"0"` and `"∅"` give the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains('/') {
            return Err(ShapeError::Parse {
                input: s.to_string(),
                position: s.find('/').unwrap() + 1,
                message: "skew shape given where a partition was expected".into(),
            });
        }
        let parts = parse_parts(s, s, 0)?;
        Partition::new(parts).map_err(|e| match e {
            ShapeError::NotDecreasing(p) => ShapeError::Parse {
                input: s.to_string(),
                position: 1,
                message: format!("parts {p:?} are not weakly decreasing"),
            },
            other => other,
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A skew shape `outer/inner`. Rows and columns are 0-based internally.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ShapeError> {
        if !outer.contains(&inner) {
            return Err(ShapeError::NotContained { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(0)
    }

    /// Column range `[start, end)` of row `i`.
    pub fn row_range(&self, i: usize) -> (usize, usize) {
        (self.inner.part(i), self.outer.part(i))
    }

    pub fn row_len(&self, i: usize) -> usize {
        self.outer.part(i) - self.inner.part(i)
    }

    /// Number of cells in column `j`.
    pub fn col_len(&self, j: usize) -> usize {
        (0..self.num_rows()).filter(|&i| self.contains_cell(i, j)).count()
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.row_range(i);
        a <= j && j < b
    }

    /// Cells in reading order (rows top to bottom, left to right).
    pub fn cells(&self) -> Vec<(usize, usize)> {
        (0..self.num_rows()).flat_map(|i| (self.inner.part(i)..self.outer.part(i)).map(move |j| (i, j))).collect()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    /// Parses `"2,1/1"` or a plain partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (o, i, off) = match s.split_once('/') {
            Some((o, i)) => (o, i, o.len() + 1),
            None => (s, "", s.len()),
        };
        let perr = |position: usize, message: String| ShapeError::Parse { input: s.to_string(), position, message };
        let outer = Partition::new(parse_parts(s, o, 0)?)
            .map_err(|_| perr(1, "outer parts are not weakly decreasing".into()))?;
        let inner = Partition::new(parse_parts(s, i, off)?)
            .map_err(|_| perr(off + 1, "inner parts are not weakly decreasing".into()))?;
        SkewShape::new(outer, inner).map_err(|_| perr(off + 1, "inner partition is not contained in the outer one".into()))
    }
}

impl Serialize for SkewShape {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for SkewShape {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Content vector `(α_1, …, α_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<usize>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        WeightVector(vec![0; n])
    }

    pub fn coords(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Membership in `Λ(n,r)′`: all coordinates are 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.0.iter().all(|&a| a <= 1)
    }

    /// Membership in `Λ(n,r)″`: some coordinate is at least 2.
    pub fn has_repeat(&self) -> bool {
        !self.is_zero_one()
    }

    /// `σα` with `(σα)_i = α_{σ⁻¹(i)}`; `sigma[j]` is the 0-based image of `j`.
    pub fn permute(&self, sigma: &[usize]) -> WeightVector {
        let mut out = vec![0; self.0.len()];
        for (j, &a) in self.0.iter().enumerate() {
            out[sigma[j]] = a;
        }
        WeightVector(out)
    }
}

/// Tableau classes understood by [`enumerate_tableaux`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableauKind {
    All,
    Semistandard,
    CoSemistandard,
    DistinctEntries,
    StandardDistinct,
}

impl FromStr for TableauKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "all" => TableauKind::All,
            "semistandard" | "sst" => TableauKind::Semistandard,
            "co_semistandard" | "cosemistandard" | "csst" => TableauKind::CoSemistandard,
            "distinct_entries" | "distinct" => TableauKind::DistinctEntries,
            "standard_distinct" | "standard" => TableauKind::StandardDistinct,
            _ => return Err(format!("unknown tableau kind `{s}`")),
        })
    }
}

/// A filling of a skew shape with entries from `[n]` (1-based).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableauError {
    #[error("row {row} has {found} entries, shape needs {expected}")]
    RowLength { row: usize, expected: usize, found: usize },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("entry {entry} outside [1, {n}]")]
    Entry { entry: u8, n: usize },
    #[error("tableau shape {found} does not match {expected}")]
    ShapeMismatch { expected: SkewShape, found: SkewShape },
}

impl Tableau {
    /// Builds from the entries of each row, left to right (inner cells omitted).
    pub fn new(shape: SkewShape, rows: Vec<Vec<u8>>) -> Result<Self, TableauError> {
        if rows.len() != shape.num_rows() {
            return Err(TableauError::RowCount { expected: shape.num_rows(), found: rows.len() });
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != shape.row_len(i) {
                return Err(TableauError::RowLength { row: i, expected: shape.row_len(i), found: r.len() });
            }
            if r.contains(&0) {
                return Err(TableauError::Entry { entry: 0, n: 0 });
            }
        }
        Ok(Tableau { shape, rows })
    }

    pub fn from_rows(shape: &SkewShape, rows: &[&[u8]]) -> Self {
        Self::new(shape.clone(), rows.iter().map(|r| r.to_vec()).collect()).expect("valid tableau")
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// Entry at row `i`, absolute column `j`.
    pub fn get(&self, i: usize, j: usize) -> Option<u8> {
        let (a, b) = self.shape.row_range(i);
        (a <= j && j < b).then(|| self.rows[i][j - a])
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        let a = self.shape.inner().part(i);
        self.rows[i][j - a] = v;
    }

    pub fn max_entry(&self) -> u8 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn check_entries(&self, n: usize) -> Result<(), TableauError> {
        match self.rows.iter().flatten().find(|&&e| e as usize > n || e == 0) {
            Some(&e) => Err(TableauError::Entry { entry: e, n }),
            None => Ok(()),
        }
    }

    pub fn reading_word(&self) -> Vec<u8> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn weight(&self, n: usize) -> WeightVector {
        let mut w = vec![0; n];
        for &e in self.rows.iter().flatten() {
            w[e as usize - 1] += 1;
        }
        WeightVector(w)
    }

    pub fn has_distinct_entries(&self) -> bool {
        let mut seen = [false; 256];
        for &e in self.rows.iter().flatten() {
            if seen[e as usize] {
                return false;
            }
            seen[e as usize] = true;
        }
        true
    }

    pub fn is_of_kind(&self, kind: TableauKind) -> bool {
        let rows_ok = |strict: bool| {
            self.rows.iter().all(|r| r.windows(2).all(|w| if strict { w[0] < w[1] } else { w[0] <= w[1] }))
        };
        let cols_ok = |strict: bool| {
            (1..self.shape.num_rows()).all(|i| {
                let (a, b) = self.shape.row_range(i);
                (a..b).all(|j| match self.get(i - 1, j) {
                    Some(up) => {
                        let here = self.get(i, j).unwrap();
                        if strict {
                            up < here
                        } else {
                            up <= here
                        }
                    }
                    None => true,
                })
            })
        };
        match kind {
            TableauKind::All => true,
            TableauKind::Semistandard => rows_ok(true) && cols_ok(false),
            TableauKind::CoSemistandard => rows_ok(false) && cols_ok(true),
            TableauKind::DistinctEntries => self.has_distinct_entries(),
            TableauKind::StandardDistinct => rows_ok(true) && cols_ok(false) && self.has_distinct_entries(),
        }
    }

    /// JSON-friendly rows: absolute columns with `None` on inner cells.
    pub fn to_json_rows(&self) -> Vec<Vec<Option<u8>>> {
        (0..self.shape.num_rows())
            .map(|i| {
                let (a, b) = self.shape.row_range(i);
                (0..b).map(|j| if j < a { None } else { Some(self.rows[i][j - a]) }).collect()
            })
            .collect()
    }

    pub fn from_json_rows(rows: &[Vec<Option<u8>>]) -> Result<Self, TableauError> {
        let outer: Vec<usize> = rows.iter().map(|r| r.len()).collect();
        let inner: Vec<usize> = rows.iter().map(|r| r.iter().take_while(|x| x.is_none()).count()).collect();
        let bad = |e: ShapeError| TableauError::ShapeMismatch {
            expected: SkewShape::straight(Partition::empty()),
            found: SkewShape::straight(Partition(match e {
                ShapeError::NotDecreasing(p) => p,
                _ => Vec::new(),
            })),
        };
        let shape = SkewShape::new(Partition::new(outer).map_err(bad)?, Partition::new(inner).map_err(bad)?)
            .map_err(|_| TableauError::RowCount { expected: 0, found: rows.len() })?;
        let body = rows.iter().map(|r| r.iter().flatten().copied().collect()).collect();
        Tableau::new(shape, body)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .to_json_rows()
            .iter()
            .map(|r| r.iter().map(|x| x.map_or(".".to_string(), |v| v.to_string())).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<Option<u8>>>::deserialize(d)?;
        Tableau::from_json_rows(&rows).map_err(serde::de::Error::custom)
    }
}

/// Depth-first filler shared by enumeration and counting. Visits complete
/// tableaux in reading-word lexicographic order.
fn fill<F: FnMut(&Tableau)>(shape: &SkewShape, n: usize, kind: TableauKind, visit: &mut F) {
    let cells = shape.cells();
    let rows: Vec<Vec<u8>> = (0..shape.num_rows()).map(|i| vec![0; shape.row_len(i)]).collect();
    let mut t = Tableau { shape: shape.clone(), rows };
    let mut used = vec![false; n + 1];
    fn rec<F: FnMut(&Tableau)>(
        t: &mut Tableau,
        cells: &[(usize, usize)],
        k: usize,
        n: usize,
        kind: TableauKind,
        used: &mut [bool],
        visit: &mut F,
    ) {
        if k == cells.len() {
            visit(t);
            return;
        }
        let (i, j) = cells[k];
        let left = if j > 0 { t.get(i, j - 1) } else { None };
        let up = if i > 0 { t.get(i - 1, j) } else { None };
        let (row_strict, col_strict, distinct) = match kind {
            TableauKind::All => (None, None, false),
            TableauKind::Semistandard => (Some(true), Some(false), false),
            TableauKind::CoSemistandard => (Some(false), Some(true), false),
            TableauKind::DistinctEntries => (None, None, true),
            TableauKind::StandardDistinct => (Some(true), Some(false), true),
        };
        let mut lo = 1u8;
        if let (Some(s), Some(l)) = (row_strict, left) {
            lo = lo.max(if s { l + 1 } else { l });
        }
        if let (Some(s), Some(u)) = (col_strict, up) {
            lo = lo.max(if s { u + 1 } else { u });
        }
        for v in lo..=(n as u8) {
            if distinct && used[v as usize] {
                continue;
            }
            t.set(i, j, v);
            used[v as usize] = true;
            rec(t, cells, k + 1, n, kind, used, visit);
            used[v as usize] = false;
        }
    }
    if n > u8::MAX as usize - 1 {
        panic!("entry range too large");
    }
    rec(&mut t, &cells, 0, n, kind, &mut used, visit);
}

/// All tableaux of the given class with entries in `[n]`, ordered
/// lexicographically by reading word.
pub fn enumerate_tableaux(shape: &SkewShape, n: usize, kind: TableauKind) -> Vec<Tableau> {
    let mut out = Vec::new();
    fill(shape, n, kind, &mut |t| out.push(t.clone()));
    out
}

pub fn count_tableaux(shape: &SkewShape, n: usize, kind: TableauKind) -> usize {
    let mut c = 0;
    fill(shape, n, kind, &mut |_| c += 1);
    c
}

/// `f^{λ/μ}`: semistandard tableaux of the conjugate shape `λ′/μ′` with
/// distinct entries from `[r]`, `r = |λ/μ|`. Under this crate's convention
/// that is the classical number of standard Young tableaux of `λ/μ`.
pub fn count_standard(shape: &SkewShape) -> usize {
    count_tableaux(&shape.conjugate(), shape.size(), TableauKind::StandardDistinct)
}

/// Partitions of `r` in decreasing lexicographic order, optionally with at most
/// `max_len` parts.
pub fn enumerate_partitions(r: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn rec(rem: usize, cap: usize, len_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=cap.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(r, r, max_len.unwrap_or(usize::MAX), &mut Vec::new(), &mut out);
    out
}

/// Partitions `ν` with `μ ⊆ ν ⊆ λ`, ordered by size then decreasing lex.
pub fn partitions_between(lambda: &Partition, mu: &Partition) -> Vec<Partition> {
    fn rec(i: usize, lambda: &Partition, mu: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let cap = if i == 0 { lambda.part(0) } else { cur[i - 1].min(lambda.part(i)) };
        for v in mu.part(i)..=cap {
            cur.push(v);
            rec(i + 1, lambda, mu, cur, out);
            cur.pop();
        }
    }
    if !lambda.contains(mu) {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(0, lambda, mu, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
    out
}

/// `ν` with `μ ⊆ ν ⊆ λ`, `|ν/μ| ≤ s`, `|λ/ν| ≤ n − s`.
pub fn intermediate_partitions(lambda: &Partition, mu: &Partition, s: usize, n: usize) -> Vec<Partition> {
    let rest = n.saturating_sub(s);
    partitions_between(lambda, mu)
        .into_iter()
        .filter(|nu| nu.size() - mu.size() <= s && lambda.size() - nu.size() <= rest)
        .collect()
}

/// Whether `outer/inner` has at most one cell in every column.
pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    if !outer.contains(inner) {
        return false;
    }
    let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
    (0..shape.num_cols()).all(|j| shape.col_len(j) <= 1)
}

/// `HS(λ, n)`: partitions `λ⁺ ⊢ n` containing `λ` with `λ⁺/λ` a horizontal strip.
pub fn horizontal_strip_extensions(lambda: &Partition, n: usize) -> Vec<Partition> {
    if lambda.size() > n {
        return Vec::new();
    }
    enumerate_partitions(n, None).into_iter().filter(|p| is_horizontal_strip(p, lambda)).collect()
}

/// All skew shapes `λ/μ` with `|λ| ≤ max_outer` and `|λ/μ| ≤ max_size`.
pub fn skew_shapes(max_outer: usize, max_size: usize) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for k in 0..=max_outer {
        for lambda in enumerate_partitions(k, None) {
            for mu in partitions_between(&lambda, &Partition::empty()) {
                if lambda.size() - mu.size() <= max_size {
                    out.push(SkewShape::new(lambda.clone(), mu).unwrap());
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::from_parts(parts)
    }

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    /// Every filling with entries in `[n]`, built by counting in base n.
    fn brute_fillings(shape: &SkewShape, n: usize) -> Vec<Tableau> {
        let cells = shape.cells();
        let total = n.pow(cells.len() as u32);
        (0..total)
            .map(|mut code| {
                let mut rows: Vec<Vec<u8>> = (0..shape.num_rows()).map(|i| vec![0; shape.row_len(i)]).collect();
                for k in (0..cells.len()).rev() {
                    let (i, j) = cells[k];
                    rows[i][j - shape.inner().part(i)] = (code % n) as u8 + 1;
                    code /= n;
                }
                Tableau::new(shape.clone(), rows).unwrap()
            })
            .collect()
    }

    fn hook_length_count(l: &Partition) -> u64 {
        let c = l.conjugate();
        let mut denom = 1u64;
        for i in 0..l.len() {
            for j in 0..l.part(i) {
                denom *= (l.part(i) - j - 1 + c.part(j) - i - 1 + 1) as u64;
            }
        }
        (1..=l.size() as u64).product::<u64>() / denom
    }

    /// Classical column-strict count for the conjugate, from the hook-content formula.
    fn hook_content_count(l: &Partition, n: usize) -> u64 {
        let c = l.conjugate();
        let mut num = 1i64;
        let mut den = 1i64;
        for i in 0..l.len() {
            for j in 0..l.part(i) {
                num *= n as i64 + j as i64 - i as i64;
                den *= (l.part(i) - j - 1 + c.part(j) - i) as i64;
            }
        }
        (num / den) as u64
    }

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn partition_examples() {
        assert_eq!(enumerate_partitions(0, None), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(3, None), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(5, Some(2)), vec![p(&[5]), p(&[4, 1]), p(&[3, 2])]);
        let counts: Vec<usize> = (0..9).map(|r| enumerate_partitions(r, None).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn trailing_zeros_are_ignored() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(sh("2,1/1").to_string(), "2,1/1");
        assert_eq!(sh("3,1").inner(), &Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        match "2,x".parse::<Partition>() {
            Err(ShapeError::Parse { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        match "2,1/3".parse::<SkewShape>() {
            Err(ShapeError::Parse { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1,2".parse::<Partition>().is_err());
    }

    #[test]
    fn tableau_examples() {
        let t = enumerate_tableaux(&sh("2"), 3, TableauKind::Semistandard);
        let words: Vec<Vec<u8>> = t.iter().map(|t| t.reading_word()).collect();
        assert_eq!(words, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);

        let c = enumerate_tableaux(&sh("1,1"), 2, TableauKind::CoSemistandard);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].rows(), &[vec![1], vec![2]]);

        assert_eq!(enumerate_tableaux(&sh("2,1"), 3, TableauKind::StandardDistinct).len(), 2);
        assert!(enumerate_tableaux(&sh("3"), 2, TableauKind::Semistandard).is_empty());
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        for shape in skew_shapes(4, 4) {
            for n in 1..=3 {
                let all = brute_fillings(&shape, n);
                for kind in [
                    TableauKind::All,
                    TableauKind::Semistandard,
                    TableauKind::CoSemistandard,
                    TableauKind::DistinctEntries,
                    TableauKind::StandardDistinct,
                ] {
                    let expect: Vec<Tableau> = all.iter().filter(|t| t.is_of_kind(kind)).cloned().collect();
                    assert_eq!(enumerate_tableaux(&shape, n, kind), expect, "{shape} n={n} {kind:?}");
                }
            }
        }
    }

    #[test]
    fn count_standard_examples() {
        assert_eq!(count_standard(&sh("2,1")), 2);
        for r in 0..6 {
            assert_eq!(count_standard(&SkewShape::straight(p(&[r]))), 1);
        }
        assert_eq!(count_standard(&sh("2,2/1")), 2);
    }

    #[test]
    fn count_standard_matches_hook_lengths() {
        for r in 0..=7 {
            for l in enumerate_partitions(r, None) {
                assert_eq!(count_standard(&SkewShape::straight(l.clone())) as u64, hook_length_count(&l), "{l}");
            }
        }
    }

    #[test]
    fn sst_count_matches_conjugate_column_strict_count() {
        for r in 0..=5 {
            for l in enumerate_partitions(r, None) {
                for n in 1..=4 {
                    let ours = count_tableaux(&SkewShape::straight(l.clone()), n, TableauKind::Semistandard) as u64;
                    assert_eq!(ours, hook_content_count(&l.conjugate(), n), "{l} n={n}");
                }
            }
        }
    }

    #[test]
    fn standard_distinct_count_is_binomial_times_f() {
        for shape in skew_shapes(5, 5) {
            for n in 1..=5 {
                let r = shape.size();
                let got = count_tableaux(&shape, n, TableauKind::StandardDistinct);
                assert_eq!(got, binom(n, r) * count_standard(&shape.conjugate()), "{shape} n={n}");
            }
        }
    }

    #[test]
    fn branching_identity_for_skew_standard_counts() {
        for shape in skew_shapes(6, 5) {
            let (lambda, mu) = (shape.outer(), shape.inner());
            for t in 0..=shape.size() {
                let sum: usize = partitions_between(lambda, mu)
                    .into_iter()
                    .filter(|nu| nu.size() == mu.size() + t)
                    .map(|nu| {
                        count_standard(&SkewShape::new(nu.clone(), mu.clone()).unwrap())
                            * count_standard(&SkewShape::new(lambda.clone(), nu).unwrap())
                    })
                    .sum();
                assert_eq!(sum, count_standard(&shape), "{shape} t={t}");
            }
        }
    }

    #[test]
    fn horizontal_strip_examples() {
        assert_eq!(horizontal_strip_extensions(&p(&[2]), 3), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(horizontal_strip_extensions(&p(&[2, 1]), 3), vec![p(&[2, 1])]);
        assert_eq!(horizontal_strip_extensions(&p(&[1]), 3), vec![p(&[3]), p(&[2, 1])]);
    }

    #[test]
    fn horizontal_strips_match_interlacing() {
        for n in 0..=6 {
            for k in 0..=n {
                for l in enumerate_partitions(k, None) {
                    let expect: Vec<Partition> = enumerate_partitions(n, None)
                        .into_iter()
                        .filter(|q| (0..q.len().max(l.len())).all(|i| q.part(i) >= l.part(i) && l.part(i) >= q.part(i + 1)))
                        .collect();
                    assert_eq!(horizontal_strip_extensions(&l, n), expect);
                }
            }
        }
    }

    #[test]
    fn intermediate_examples() {
        assert_eq!(intermediate_partitions(&p(&[2]), &Partition::empty(), 1, 3), vec![Partition::empty(), p(&[1])]);
        let l = p(&[3, 1]);
        assert_eq!(intermediate_partitions(&l, &l, 1, 2), vec![l.clone()]);
        // With n − s = 1 the bound |λ/ν| ≤ 1 excludes ν = (1); dropping that
        // bound (n = 4) brings it back.
        assert_eq!(intermediate_partitions(&p(&[2, 1]), &p(&[1]), 2, 3), vec![p(&[2]), p(&[1, 1]), p(&[2, 1])]);
        assert_eq!(
            intermediate_partitions(&p(&[2, 1]), &p(&[1]), 2, 4),
            vec![p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]
        );
    }

    #[test]
    fn weight_vectors() {
        let w = WeightVector(vec![2, 0, 1]);
        assert!(w.has_repeat() && !w.is_zero_one());
        // sigma = (1 2 3) as images 0->1, 1->2, 2->0
        assert_eq!(w.permute(&[1, 2, 0]), WeightVector(vec![1, 2, 0]));
        let t = Tableau::from_rows(&sh("2,1"), &[&[1, 3], &[1]]);
        assert_eq!(t.weight(3), WeightVector(vec![2, 0, 1]));
    }

    #[test]
    fn tableau_json_roundtrip() {
        let t = Tableau::from_rows(&sh("3,2/1"), &[&[1, 2], &[1, 3]]);
        let j = serde_json::to_string(&t).unwrap();
        assert_eq!(j, "[[null,1,2],[1,3]]");
        let back: Tableau = serde_json::from_str(&j).unwrap();
        assert_eq!(back, t);
    }

    proptest! {
        #[test]
        fn conjugation_is_an_involution(r in 0usize..=8, k in 0usize..100) {
            let ps = enumerate_partitions(r, None);
            let l = &ps[k % ps.len()];
            prop_assert_eq!(&l.conjugate().conjugate(), l);
            prop_assert_eq!(l.conjugate().size(), l.size());
        }

        #[test]
        fn skew_conjugation_preserves_cells(k in 0usize..200) {
            let shapes = skew_shapes(6, 6);
            let s = &shapes[k % shapes.len()];
            let c = s.conjugate();
            let mut cells: Vec<(usize, usize)> = c.cells().into_iter().map(|(i, j)| (j, i)).collect();
            cells.sort();
            prop_assert_eq!(cells, s.cells());
        }
    }
}
