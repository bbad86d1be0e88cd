//! Polynomials in the entries of an `m × n` matrix of variables, commuting
//! (`k[x]`) or skew-commuting (`k⟨y⟩`), and degree components of homogeneous
//! ideals in them.
//!
//! A monomial is stored as the sorted list of its variable indices, with
//! `x_{i,j}` (0-based) at index `i·n + j`. In the exterior flavor the list is
//! strictly increasing, so `y² = 0` is structural.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{RationalMatrix, SparseVec, Subspace};
use crate::monoid::PartialTransformation;
use crate::rational::{binomial, Rational};

pub type Monomial = Vec<u8>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Flavor {
    Commuting,
    Exterior,
}

impl Flavor {
    fn letter(self) -> char {
        match self {
            Flavor::Commuting => 'x',
            Flavor::Exterior => 'y',
        }
    }
}

/// Product of two monomials with its sign; `None` when it vanishes.
pub fn mul_monomials(flavor: Flavor, a: &[u8], b: &[u8]) -> Option<(Monomial, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut inversions = 0usize;
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] <= b[j]) {
            if flavor == Flavor::Exterior && j < b.len() && a[i] == b[j] {
                return None;
            }
            out.push(a[i]);
            i += 1;
        } else {
            // b[j] jumps over the a[i..] still waiting.
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    let sign = match flavor {
        Flavor::Commuting => 1,
        Flavor::Exterior => {
            if inversions.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    };
    Some((out, sign))
}

/// Whether `small` divides `big` (sub-multiset).
pub fn divides(small: &[u8], big: &[u8]) -> bool {
    let mut j = 0;
    for &s in small {
        while j < big.len() && big[j] < s {
            j += 1;
        }
        if j == big.len() || big[j] != s {
            return false;
        }
        j += 1;
    }
    true
}

/// All monomials of degree `d` in `nvars` variables.
pub fn monomials(flavor: Flavor, nvars: usize, d: usize) -> Vec<Monomial> {
    fn rec(flavor: Flavor, nvars: usize, d: usize, start: usize, cur: &mut Vec<u8>, out: &mut Vec<Monomial>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for v in start..nvars {
            cur.push(v as u8);
            let next = if flavor == Flavor::Exterior { v + 1 } else { v };
            rec(flavor, nvars, d, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(flavor, nvars, d, 0, &mut Vec::new(), &mut out);
    out
}

pub fn count_monomials(flavor: Flavor, nvars: usize, d: usize) -> usize {
    let c = match flavor {
        Flavor::Commuting if nvars == 0 => return usize::from(d == 0),
        Flavor::Commuting => binomial((nvars + d - 1) as u64, d as u64),
        Flavor::Exterior => binomial(nvars as u64, d as u64),
    };
    usize::try_from(c).expect("monomial count fits in usize")
}

/// A polynomial in the entries of an `m × n` variable matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    flavor: Flavor,
    m: usize,
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(flavor: Flavor, m: usize, n: usize) -> Self {
        assert!(m * n <= u8::MAX as usize, "too many variables");
        Polynomial { flavor, m, n, terms: BTreeMap::new() }
    }

    pub fn constant(flavor: Flavor, m: usize, n: usize, c: Rational) -> Self {
        Self::monomial(flavor, m, n, Vec::new(), c)
    }

    /// The variable in row `i`, column `j` (0-based).
    pub fn var(flavor: Flavor, m: usize, n: usize, i: usize, j: usize) -> Self {
        assert!(i < m && j < n);
        Self::monomial(flavor, m, n, vec![(i * n + j) as u8], Rational::one())
    }

    pub fn monomial(flavor: Flavor, m: usize, n: usize, key: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(flavor, m, n);
        p.add_term(key, &c);
        p
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.m * self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, key: &[u8]) -> Rational {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|k| k.len()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|k| k.len());
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    /// Adds `c·key`, normalizing an exterior key first.
    pub fn add_term(&mut self, mut key: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let mut c = c.clone();
        match self.flavor {
            Flavor::Commuting => key.sort_unstable(),
            Flavor::Exterior => match crate::tensor::sort_with_sign(&mut key) {
                0 => return,
                -1 => c = -c,
                _ => {}
            },
        }
        self.add_sorted(&key, &c);
    }

    fn same_ring(&self, other: &Polynomial) {
        assert!(
            self.flavor == other.flavor && self.m == other.m && self.n == other.n,
            "polynomials live in different rings"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.same_ring(other);
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_sorted(k, c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scaled(&Rational::from_int(-1)))
    }

    pub fn scaled(&self, c: &Rational) -> Polynomial {
        let mut out = Self::zero(self.flavor, self.m, self.n);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect();
        }
        out
    }

    fn add_sorted(&mut self, key: &[u8], c: &Rational) {
        if let Some(slot) = self.terms.get_mut(key) {
            *slot += c;
            if slot.is_zero() {
                self.terms.remove(key);
            }
        } else if !c.is_zero() {
            self.terms.insert(key.to_vec(), c.clone());
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.same_ring(other);
        let mut out = Self::zero(self.flavor, self.m, self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((k, s)) = mul_monomials(self.flavor, a, b) {
                    let c = ca * cb;
                    out.add_sorted(&k, &if s < 0 { -c } else { c });
                }
            }
        }
        out
    }

    pub fn homogeneous_part(&self, d: usize) -> Polynomial {
        let mut out = Self::zero(self.flavor, self.m, self.n);
        out.terms = self.terms.iter().filter(|(k, _)| k.len() == d).map(|(k, v)| (k.clone(), v.clone())).collect();
        out
    }

    /// The ring map sending variable `v` to `images[v]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars());
        let (m, n) = (images.first().map_or(self.m, |p| p.m), images.first().map_or(self.n, |p| p.n));
        let mut out = Self::zero(self.flavor, m, n);
        for (k, c) in &self.terms {
            let mut prod = Self::constant(self.flavor, m, n, c.clone());
            for &v in k {
                prod = prod.mul(&images[v as usize]);
                if prod.is_zero() {
                    break;
                }
            }
            out = out.add(&prod);
        }
        out
    }

    /// `(A, B)·x_{i,j} = Σ_{k,l} a_{k,i} b_{l,j} x_{k,l}`: `A` acts on row
    /// indices and `B` on column indices, as column operators.
    pub fn act_pair(&self, a: &RationalMatrix, b: &RationalMatrix) -> Polynomial {
        assert!(a.nrows() == self.m && b.nrows() == self.n);
        let images: Vec<Polynomial> = (0..self.m)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .map(|(i, j)| {
                let mut p = Self::zero(self.flavor, self.m, self.n);
                for k in 0..self.m {
                    let aki = a.get(k, i);
                    if aki.is_zero() {
                        continue;
                    }
                    for l in 0..self.n {
                        let blj = b.get(l, j);
                        if !blj.is_zero() {
                            p.add_sorted(&[(k * self.n + l) as u8], &(aki * blj));
                        }
                    }
                }
                p
            })
            .collect();
        self.substitute(&images)
    }

    /// `x_{i,j} ↦ x_{p(i), q(j)}`, zero where either map is undefined.
    pub fn act_elements(&self, p: &PartialTransformation, q: &PartialTransformation) -> Polynomial {
        self.act_pair(&p.matrix_of(), &q.matrix_of())
    }

    /// Substitution `x ↦ A·x·B` of the whole variable matrix (`A` is `m × m`,
    /// `B` is `n × n`).
    pub fn compose_linear(&self, a: &RationalMatrix, b: &RationalMatrix) -> Polynomial {
        self.act_pair(&a.transpose(), b)
    }

    /// Value at a point given as an `m × n` matrix.
    pub fn evaluate(&self, point: &RationalMatrix) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in &self.terms {
            let mut t = c.clone();
            for &v in k {
                t *= point.get(v as usize / self.n, v as usize % self.n);
            }
            acc += &t;
        }
        acc
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, letter: char, n: usize, key: &[u8]) -> fmt::Result {
    let mut first = true;
    let mut i = 0;
    while i < key.len() {
        let mut e = 1;
        while i + e < key.len() && key[i + e] == key[i] {
            e += 1;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        let v = key[i] as usize;
        write!(f, "{letter}{}{}", v / n + 1, v % n + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
        i += e;
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing lexicographic order with `x11 > x12 > … > x21 > …`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        let nv = self.nvars();
        keys.sort_by_key(|k| std::cmp::Reverse(exponent_vector(k, nv)));
        for (idx, k) in keys.iter().enumerate() {
            let c = &self.terms[*k];
            let neg = c.is_negative();
            let a = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if k.is_empty() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write_monomial(f, self.flavor.letter(), self.n, k)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn exponent_vector(key: &[u8], nvars: usize) -> Vec<u8> {
    let mut e = vec![0u8; nvars];
    for &v in key {
        e[v as usize] += 1;
    }
    e
}

/// Human-readable monomial such as `x11*x22^2`.
pub fn monomial_string(flavor: Flavor, n: usize, key: &[u8]) -> String {
    struct M<'a>(char, usize, &'a [u8]);
    impl fmt::Display for M<'_> {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.2.is_empty() {
                return f.write_str("1");
            }
            write_monomial(f, self.0, self.1, self.2)
        }
    }
    M(flavor.letter(), n, key).to_string()
}

/// A homogeneous ideal, split into its monomial generators (which cut out
/// coordinate subspaces) and the rest.
#[derive(Debug, Clone)]
pub struct HomogeneousIdeal {
    pub flavor: Flavor,
    pub m: usize,
    pub n: usize,
    pub generators: Vec<Polynomial>,
    monomial_gens: Vec<Monomial>,
    other_gens: Vec<Polynomial>,
}

impl HomogeneousIdeal {
    pub fn new(flavor: Flavor, m: usize, n: usize, generators: Vec<Polynomial>) -> Result<Self> {
        let mut monomial_gens = Vec::new();
        let mut other_gens = Vec::new();
        for g in &generators {
            if g.flavor != flavor || g.m != m || g.n != n {
                return Err(Error::Invalid("generator from a different ring".into()));
            }
            if !g.is_homogeneous() {
                return Err(Error::Invalid(format!("generator {g} is not homogeneous")));
            }
            match g.terms.len() {
                0 => {}
                1 => monomial_gens.push(g.terms.keys().next().unwrap().clone()),
                _ => other_gens.push(g.clone()),
            }
        }
        Ok(HomogeneousIdeal { flavor, m, n, generators, monomial_gens, other_gens })
    }

    pub fn zero(flavor: Flavor, m: usize, n: usize) -> Self {
        Self::new(flavor, m, n, Vec::new()).unwrap()
    }

    pub fn nvars(&self) -> usize {
        self.m * self.n
    }

    /// Whether the monomial lies in the monomial part of the ideal.
    pub fn kills(&self, key: &[u8]) -> bool {
        self.monomial_gens.iter().any(|g| divides(g, key))
    }

    /// Monomials outside the monomial part, degree by degree up to `d`.
    /// Built by extension, since every divisor of a survivor survives.
    pub fn survivors_upto(&self, d: usize) -> Vec<Vec<Monomial>> {
        let nv = self.nvars();
        let mut out: Vec<Vec<Monomial>> = vec![vec![Vec::new()]];
        for _ in 1..=d {
            let mut next = Vec::new();
            for mono in out.last().unwrap() {
                let start = match (self.flavor, mono.last()) {
                    (_, None) => 0,
                    (Flavor::Commuting, Some(&l)) => l as usize,
                    (Flavor::Exterior, Some(&l)) => l as usize + 1,
                };
                for v in start..nv {
                    let mut k = mono.clone();
                    k.push(v as u8);
                    if !self.kills(&k) {
                        next.push(k);
                    }
                }
            }
            out.push(next);
        }
        out
    }

    /// The degree-`d` component.
    pub fn component(&self, d: usize) -> IdealComponent {
        let surv = self.survivors_upto(d);
        let survivors = surv[d].clone();
        let index: HashMap<Monomial, usize> = survivors.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();
        let mut reduced = Subspace::zero(survivors.len());
        for g in &self.other_gens {
            let e = g.degree().unwrap();
            if e > d {
                continue;
            }
            for mono in &surv[d - e] {
                let prod = g.mul(&Polynomial::monomial(self.flavor, self.m, self.n, mono.clone(), Rational::one()));
                let v = SparseVec::from_pairs(prod.terms.iter().filter_map(|(k, c)| index.get(k).map(|&i| (i, c.clone()))));
                if !v.is_zero() {
                    reduced.insert(&v);
                }
            }
        }
        IdealComponent {
            flavor: self.flavor,
            m: self.m,
            n: self.n,
            degree: d,
            total: count_monomials(self.flavor, self.nvars(), d),
            survivors,
            index,
            reduced,
        }
    }
}

/// `J_d` inside the degree-`d` monomial space. Monomials killed by the
/// monomial generators are dropped; what remains of `J_d` is `reduced`, a
/// subspace of the span of the surviving monomials. Computations modulo `J`
/// happen in survivor coordinates.
#[derive(Debug, Clone)]
pub struct IdealComponent {
    pub flavor: Flavor,
    pub m: usize,
    pub n: usize,
    pub degree: usize,
    /// Number of monomials of this degree.
    pub total: usize,
    pub survivors: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    pub reduced: Subspace,
}

impl IdealComponent {
    pub fn ideal_dim(&self) -> usize {
        self.total - self.survivors.len() + self.reduced.dim()
    }

    pub fn quotient_dim(&self) -> usize {
        self.survivors.len() - self.reduced.dim()
    }

    /// Survivor coordinates of the degree-`d` part (killed monomials dropped).
    pub fn coords(&self, p: &Polynomial) -> SparseVec {
        SparseVec::from_pairs(
            p.terms.iter().filter(|(k, _)| k.len() == self.degree).filter_map(|(k, c)| self.index.get(k).map(|&i| (i, c.clone()))),
        )
    }

    pub fn polynomial_of(&self, v: &SparseVec) -> Polynomial {
        let mut p = Polynomial::zero(self.flavor, self.m, self.n);
        for (i, c) in v.entries() {
            p.terms.insert(self.survivors[*i].clone(), c.clone());
        }
        p
    }

    /// Membership of a homogeneous polynomial of this degree.
    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.terms.keys().any(|k| k.len() != self.degree) {
            return false;
        }
        self.reduced.contains(&self.coords(p))
    }

    /// Survivors outside the pivots of `reduced`: a monomial basis of the quotient.
    pub fn standard_monomials(&self) -> Vec<Monomial> {
        (0..self.survivors.len()).filter(|&i| !self.reduced.is_pivot(i)).map(|i| self.survivors[i].clone()).collect()
    }

    /// The component as a subspace of the full monomial space, with that
    /// space's basis. Enumerates every monomial, so only for small cases.
    pub fn full_subspace(&self) -> (Vec<Monomial>, Subspace) {
        let all = monomials(self.flavor, self.m * self.n, self.degree);
        let pos: HashMap<&Monomial, usize> = all.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut s = Subspace::zero(all.len());
        for (i, k) in all.iter().enumerate() {
            if !self.index.contains_key(k) {
                s.insert(&SparseVec::unit(i));
            }
        }
        for v in self.reduced.rows() {
            s.insert(&v.remap(|i| Some(pos[&self.survivors[i]])));
        }
        (all, s)
    }
}
