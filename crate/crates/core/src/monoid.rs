//! Partial self-maps of `[n]` and the monoids IS_n, PT_n, T_n, S_n.
//!
//! Matrix convention: column `j` of `matrix_of(p)` has its 1 in row `p(j)`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::Partition;
use crate::linalg::RationalMatrix;
use crate::rational::{binomial, factorial, Rational};

pub const MAX_N: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonoidError {
    #[error("n = {0} is outside the supported range 1..={MAX_N}")]
    OutOfRange(usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid element `{input}` at position {position}: {message}")]
    Parse { input: String, position: usize, message: String },
    #[error("{element} is not an element of {kind}")]
    NotInMonoid { element: String, kind: MonoidKind },
}

/// A partial map `[n] → [n]`, stored 0-based; `None` means undefined.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialTransformation {
    images: Vec<Option<u8>>,
}

/// Sort key giving lexicographic order with `undefined` last.
fn order_key(x: &Option<u8>) -> u16 {
    x.map_or(u16::MAX, |v| v as u16)
}

impl PartialOrd for PartialTransformation {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PartialTransformation {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.images.len().cmp(&other.images.len()).then_with(|| {
            self.images.iter().map(order_key).cmp(other.images.iter().map(order_key))
        })
    }
}

impl PartialTransformation {
    pub fn new(images: Vec<Option<usize>>) -> Result<Self, MonoidError> {
        let n = images.len();
        if let Some(bad) = images.iter().flatten().find(|&&v| v >= n) {
            return Err(MonoidError::Parse {
                input: format!("{images:?}"),
                position: 0,
                message: format!("image {} outside [1, {n}]", bad + 1),
            });
        }
        Ok(PartialTransformation { images: images.into_iter().map(|x| x.map(|v| v as u8)).collect() })
    }

    /// From 0-based images of a total map.
    pub fn from_total(images: &[usize]) -> Self {
        Self::new(images.iter().map(|&v| Some(v)).collect()).expect("images in range")
    }

    pub fn identity(n: usize) -> Self {
        Self::from_total(&(0..n).collect::<Vec<_>>())
    }

    pub fn empty(n: usize) -> Self {
        PartialTransformation { images: vec![None; n] }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of `j`.
    pub fn apply(&self, j: usize) -> Option<usize> {
        self.images[j].map(|v| v as usize)
    }

    pub fn images(&self) -> Vec<Option<usize>> {
        self.images.iter().map(|x| x.map(|v| v as usize)).collect()
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.n()).filter(|&j| self.images[j].is_some()).collect()
    }

    pub fn image_set(&self) -> BTreeSet<usize> {
        self.images.iter().flatten().map(|&v| v as usize).collect()
    }

    pub fn rank(&self) -> usize {
        self.image_set().len()
    }

    pub fn is_total(&self) -> bool {
        self.images.iter().all(|x| x.is_some())
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = HashSet::new();
        self.images.iter().flatten().all(|v| seen.insert(*v))
    }

    pub fn is_permutation(&self) -> bool {
        self.is_total() && self.is_injective()
    }

    /// 0-based images when this is a permutation.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        self.is_permutation().then(|| self.images.iter().map(|x| x.unwrap() as usize).collect())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PartialTransformation) -> Result<PartialTransformation, MonoidError> {
        if self.n() != other.n() {
            return Err(MonoidError::SizeMismatch(self.n(), other.n()));
        }
        Ok(PartialTransformation {
            images: other.images.iter().map(|x| x.and_then(|v| self.images[v as usize])).collect(),
        })
    }

    pub fn matrix_of(&self) -> RationalMatrix {
        let n = self.n();
        let mut m = RationalMatrix::zeros(n, n);
        for (j, x) in self.images.iter().enumerate() {
            if let Some(i) = x {
                m.set(*i as usize, j, Rational::one());
            }
        }
        m
    }

    /// Acts as `a` on `[s]` and as `b` shifted onto `[s+1..n]`.
    pub fn block_embed(a: &PartialTransformation, b: &PartialTransformation) -> PartialTransformation {
        let s = a.n() as u8;
        let mut images = a.images.clone();
        images.extend(b.images.iter().map(|x| x.map(|v| v + s)));
        PartialTransformation { images }
    }

    pub fn inverse_permutation(&self) -> Option<PartialTransformation> {
        let p = self.as_permutation()?;
        let mut inv = vec![0; p.len()];
        for (j, &i) in p.iter().enumerate() {
            inv[i] = j;
        }
        Some(Self::from_total(&inv))
    }

    /// Cycle type of a permutation as a partition.
    pub fn cycle_type(&self) -> Option<Partition> {
        let p = self.as_permutation()?;
        let mut seen = vec![false; p.len()];
        let mut lens = Vec::new();
        for s in 0..p.len() {
            if seen[s] {
                continue;
            }
            let mut k = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
                k += 1;
            }
            lens.push(k);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Some(Partition::new(lens).unwrap())
    }

    /// A permutation of cycle type `rho`, cycles on consecutive blocks.
    pub fn permutation_of_cycle_type(rho: &Partition) -> PartialTransformation {
        let mut images = Vec::new();
        let mut start = 0;
        for &len in rho.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Self::from_total(&images)
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> PartialTransformation {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Self::from_total(&images)
    }
}

impl fmt::Display for PartialTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.images.iter().map(|x| x.map_or("-".to_string(), |v| (v + 1).to_string())).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for PartialTransformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for PartialTransformation {
    type Err = MonoidError;

    /// Parses the text form `"2,-,1"` (1-based images, `-` for undefined).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let pieces: Vec<&str> = s.split(',').collect();
        let n = pieces.len();
        let mut images = Vec::with_capacity(n);
        let mut pos = 0;
        for piece in pieces {
            let t = piece.trim();
            let err = |message: String| MonoidError::Parse { input: s.to_string(), position: pos + 1, message };
            if t == "-" {
                images.push(None);
            } else {
                let v: usize = t.parse().map_err(|_| err(format!("expected an image or `-`, found `{t}`")))?;
                if v == 0 || v > n {
                    return Err(err(format!("image {v} outside [1, {n}]")));
                }
                images.push(Some(v - 1));
            }
            pos += piece.len() + 1;
        }
        PartialTransformation::new(images)
    }
}

impl Serialize for PartialTransformation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PartialTransformation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MonoidKind {
    #[serde(rename = "is")]
    IS,
    #[serde(rename = "pt")]
    PT,
    #[serde(rename = "t")]
    T,
    #[serde(rename = "sym")]
    Sym,
}

impl fmt::Display for MonoidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonoidKind::IS => "IS",
            MonoidKind::PT => "PT",
            MonoidKind::T => "T",
            MonoidKind::Sym => "Sym",
        })
    }
}

impl FromStr for MonoidKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "is" => Ok(MonoidKind::IS),
            "pt" => Ok(MonoidKind::PT),
            "t" => Ok(MonoidKind::T),
            "sym" | "s" => Ok(MonoidKind::Sym),
            _ => Err(format!("unknown monoid kind `{s}` (expected is, pt, t or sym)")),
        }
    }
}

impl MonoidKind {
    pub const TRANSFORMATION_KINDS: [MonoidKind; 3] = [MonoidKind::IS, MonoidKind::PT, MonoidKind::T];

    pub fn contains(&self, p: &PartialTransformation) -> bool {
        match self {
            MonoidKind::PT => true,
            MonoidKind::IS => p.is_injective(),
            MonoidKind::T => p.is_total(),
            MonoidKind::Sym => p.is_permutation(),
        }
    }

    /// Cardinality from the closed forms.
    pub fn cardinality(&self, n: usize) -> BigInt {
        let n64 = n as u64;
        match self {
            MonoidKind::IS => (0..=n64).map(|r| binomial(n64, r).pow(2) * factorial(r)).sum(),
            MonoidKind::PT => BigInt::from(n + 1).pow(n as u32),
            MonoidKind::T => BigInt::from(n).pow(n as u32),
            MonoidKind::Sym => factorial(n64),
        }
    }

    /// A generating set: adjacent transpositions plus, where needed, the
    /// partial identity missing `n` and the map sending 2 to 1.
    pub fn generators(&self, n: usize) -> Vec<PartialTransformation> {
        let mut g: Vec<PartialTransformation> = (0..n.saturating_sub(1)).map(|i| PartialTransformation::transposition(n, i, i + 1)).collect();
        if g.is_empty() {
            g.push(PartialTransformation::identity(n));
        }
        let mut drop_last: Vec<Option<usize>> = (0..n).map(Some).collect();
        drop_last[n - 1] = None;
        let drop_last = PartialTransformation::new(drop_last).unwrap();
        let collapse = (n >= 2).then(|| {
            let mut im: Vec<usize> = (0..n).collect();
            im[1] = 0;
            PartialTransformation::from_total(&im)
        });
        match self {
            MonoidKind::Sym => {}
            MonoidKind::IS => g.push(drop_last),
            MonoidKind::T => g.extend(collapse),
            MonoidKind::PT => {
                g.push(drop_last);
                g.extend(collapse);
            }
        }
        g
    }

    /// Fixed non-invertible idempotents used as isomorphism invariants:
    /// `diag(1^k, 0^{n-k})` for IS/PT and `j ↦ min(j, k)` for T, `k < n`.
    pub fn test_idempotents(&self, n: usize) -> Vec<PartialTransformation> {
        match self {
            MonoidKind::IS | MonoidKind::PT => (0..n)
                .map(|k| PartialTransformation::new((0..n).map(|j| (j < k).then_some(j)).collect()).unwrap())
                .collect(),
            MonoidKind::T => {
                (1..n).map(|k| PartialTransformation::from_total(&(0..n).map(|j| j.min(k - 1)).collect::<Vec<_>>())).collect()
            }
            MonoidKind::Sym => Vec::new(),
        }
    }
}

/// All elements of the monoid, lexicographic in the image sequence with
/// undefined last.
pub fn enumerate_monoid(kind: MonoidKind, n: usize) -> Result<Vec<PartialTransformation>, MonoidError> {
    if n == 0 || n > MAX_N {
        return Err(MonoidError::OutOfRange(n));
    }
    let choices: Vec<Option<u8>> = (0..n as u8).map(Some).chain(std::iter::once(None)).collect();
    let mut out = Vec::new();
    let mut cur = vec![None; n];
    fn rec(
        k: usize,
        kind: MonoidKind,
        choices: &[Option<u8>],
        cur: &mut Vec<Option<u8>>,
        out: &mut Vec<PartialTransformation>,
    ) {
        if k == cur.len() {
            let p = PartialTransformation { images: cur.clone() };
            if kind.contains(&p) {
                out.push(p);
            }
            return;
        }
        for c in choices {
            cur[k] = *c;
            rec(k + 1, kind, choices, cur, out);
        }
    }
    rec(0, kind, &choices, &mut cur, &mut out);
    Ok(out)
}

pub fn permutations(n: usize) -> Vec<PartialTransformation> {
    if n == 0 {
        return vec![PartialTransformation::identity(0)];
    }
    enumerate_monoid(MonoidKind::Sym, n).expect("n in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn pt(s: &str) -> PartialTransformation {
        s.parse().unwrap()
    }

    fn random_element(rng: &mut ChaCha8Rng, n: usize) -> PartialTransformation {
        PartialTransformation::new((0..n).map(|_| if rng.gen_bool(0.2) { None } else { Some(rng.gen_range(0..n)) }).collect()).unwrap()
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(enumerate_monoid(MonoidKind::IS, 2).unwrap().len(), 7);
        assert_eq!(enumerate_monoid(MonoidKind::PT, 2).unwrap().len(), 9);
        assert_eq!(enumerate_monoid(MonoidKind::T, 1).unwrap(), vec![PartialTransformation::identity(1)]);
        assert!(enumerate_monoid(MonoidKind::T, 0).is_err());
        assert!(enumerate_monoid(MonoidKind::T, 7).is_err());
    }

    #[test]
    fn cardinalities_match_closed_forms() {
        // Independent counts: rook placements, (n+1)^n and n^n by direct products.
        for n in 1..=5usize {
            let rooks: u64 = (0..=n as u64)
                .map(|r| {
                    let c = (0..r).fold(1u64, |a, i| a * (n as u64 - i) / (i + 1));
                    c * c * (1..=r).product::<u64>()
                })
                .sum();
            let is = enumerate_monoid(MonoidKind::IS, n).unwrap().len() as u64;
            assert_eq!(is, rooks);
            assert_eq!(BigInt::from(is), MonoidKind::IS.cardinality(n));
            assert_eq!(enumerate_monoid(MonoidKind::PT, n).unwrap().len() as u64, (n as u64 + 1).pow(n as u32));
            assert_eq!(enumerate_monoid(MonoidKind::T, n).unwrap().len() as u64, (n as u64).pow(n as u32));
            assert_eq!(enumerate_monoid(MonoidKind::Sym, n).unwrap().len() as u64, (1..=n as u64).product::<u64>());
        }
    }

    #[test]
    fn canonical_order_puts_undefined_last() {
        let e = enumerate_monoid(MonoidKind::PT, 2).unwrap();
        let text: Vec<String> = e.iter().map(|p| p.to_string()).collect();
        assert_eq!(text, ["1,1", "1,2", "1,-", "2,1", "2,2", "2,-", "-,1", "-,2", "-,-"]);
        let mut sorted = e.clone();
        sorted.sort();
        assert_eq!(sorted, e);
    }

    #[test]
    fn compose_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let b = random_element(&mut rng, 3);
            assert_eq!(PartialTransformation::identity(3).compose(&b).unwrap(), b);
            assert_eq!(PartialTransformation::empty(3).compose(&b).unwrap(), PartialTransformation::empty(3));
        }
        assert!(pt("1,2").compose(&pt("1")).is_err());
    }

    #[test]
    fn compose_matches_matrix_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..200 {
            let a = random_element(&mut rng, 3);
            let b = random_element(&mut rng, 3);
            assert_eq!(a.compose(&b).unwrap().matrix_of(), a.matrix_of().mul(&b.matrix_of()));
        }
    }

    #[test]
    fn compose_is_associative() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let n = rng.gen_range(1..=5);
            let (a, b, c) = (random_element(&mut rng, n), random_element(&mut rng, n), random_element(&mut rng, n));
            assert_eq!(a.compose(&b).unwrap().compose(&c).unwrap(), a.compose(&b.compose(&c).unwrap()).unwrap());
        }
    }

    #[test]
    fn matrix_examples() {
        assert_eq!(PartialTransformation::identity(3).matrix_of(), RationalMatrix::identity(3));
        assert_eq!(pt("2,-").matrix_of(), RationalMatrix::from_i64(&[vec![0, 0], vec![1, 0]]));
        let t2: Vec<RationalMatrix> = enumerate_monoid(MonoidKind::T, 2).unwrap().iter().map(|p| p.matrix_of()).collect();
        assert_eq!(t2.len(), 4);
        for m in &t2 {
            for j in 0..2 {
                let col: Vec<i64> = (0..2).map(|i| m.get(i, j).to_i64().unwrap()).collect();
                assert_eq!(col.iter().sum::<i64>(), 1);
                assert!(col.iter().all(|&x| x == 0 || x == 1));
            }
        }
    }

    #[test]
    fn block_embed_examples() {
        let id = PartialTransformation::identity;
        assert_eq!(PartialTransformation::block_embed(&id(2), &id(3)), id(5));
        assert_eq!(PartialTransformation::block_embed(&id(1), &pt("2,1")), pt("1,3,2"));
        let pt2 = enumerate_monoid(MonoidKind::PT, 2).unwrap();
        for a in &pt2 {
            for b in &pt2 {
                let m = PartialTransformation::block_embed(a, b).matrix_of();
                let (ma, mb) = (a.matrix_of(), b.matrix_of());
                for i in 0..4 {
                    for j in 0..4 {
                        let expect = match (i < 2, j < 2) {
                            (true, true) => ma.get(i, j).clone(),
                            (false, false) => mb.get(i - 2, j - 2).clone(),
                            _ => Rational::zero(),
                        };
                        assert_eq!(m.get(i, j), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn kinds_are_closed_and_nested() {
        for n in 1..=3 {
            for kind in [MonoidKind::IS, MonoidKind::PT, MonoidKind::T, MonoidKind::Sym] {
                let els = enumerate_monoid(kind, n).unwrap();
                for a in &els {
                    for b in &els {
                        assert!(kind.contains(&a.compose(b).unwrap()));
                    }
                }
            }
            let pt: HashSet<_> = enumerate_monoid(MonoidKind::PT, n).unwrap().into_iter().collect();
            let is: HashSet<_> = enumerate_monoid(MonoidKind::IS, n).unwrap().into_iter().collect();
            let t: HashSet<_> = enumerate_monoid(MonoidKind::T, n).unwrap().into_iter().collect();
            let s: HashSet<_> = enumerate_monoid(MonoidKind::Sym, n).unwrap().into_iter().collect();
            assert!(is.is_subset(&pt) && t.is_subset(&pt));
            assert!(s.is_subset(&is) && s.is_subset(&t));
        }
    }

    #[test]
    fn generators_generate() {
        for n in 1..=4 {
            for kind in [MonoidKind::IS, MonoidKind::PT, MonoidKind::T, MonoidKind::Sym] {
                let gens = kind.generators(n);
                let mut closure: HashSet<PartialTransformation> = HashSet::new();
                let mut frontier = vec![PartialTransformation::identity(n)];
                closure.insert(PartialTransformation::identity(n));
                while let Some(x) = frontier.pop() {
                    for g in &gens {
                        let y = g.compose(&x).unwrap();
                        if closure.insert(y.clone()) {
                            frontier.push(y);
                        }
                    }
                }
                let all: HashSet<_> = enumerate_monoid(kind, n).unwrap().into_iter().collect();
                assert_eq!(closure, all, "{kind} n={n}");
            }
        }
    }

    #[test]
    fn text_form() {
        let p = pt("2,-,1");
        assert_eq!(p.apply(0), Some(1));
        assert_eq!(p.apply(1), None);
        assert_eq!(p.to_string(), "2,-,1");
        assert!(matches!("2,x,1".parse::<PartialTransformation>(), Err(MonoidError::Parse { position: 3, .. })));
        assert!("4,1,1".parse::<PartialTransformation>().is_err());
    }

    #[test]
    fn cycle_types() {
        let p = pt("2,3,1,5,4");
        assert_eq!(p.cycle_type().unwrap(), Partition::from_parts(&[3, 2]));
        let rho = Partition::from_parts(&[2, 2, 1]);
        assert_eq!(PartialTransformation::permutation_of_cycle_type(&rho).cycle_type().unwrap(), rho);
    }
}
