//! Tensor products of exterior, symmetric and divided powers of `V_n`.
//!
//! A basis element is a flat key of 0-based letters: factor `k` occupies the
//! next `degrees[k]` letters, strictly increasing for exterior factors and
//! weakly increasing otherwise.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::combinatorics::WeightVector;
use crate::linalg::RationalMatrix;
use crate::monoid::PartialTransformation;
use crate::rational::{binomial, factorial, Rational};

pub type Key = Vec<u8>;

/// Sparse vector in a tensor space, keyed by basis labels.
pub type TensorVec = BTreeMap<Key, Rational>;

pub fn add_term(v: &mut TensorVec, key: Key, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&key) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                v.remove(&key);
            }
        }
        None => {
            v.insert(key, c.clone());
        }
    }
}

pub fn add_scaled(v: &mut TensorVec, w: &TensorVec, c: &Rational) {
    for (k, x) in w {
        add_term(v, k.clone(), &(x * c));
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TensorKind {
    Exterior,
    Symmetric,
    DividedPower,
}

/// `X^{α_1}(V_n) ⊗ … ⊗ X^{α_k}(V_n)` for one of the three kinds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultigradedSpace {
    pub kind: TensorKind,
    pub n: usize,
    pub degrees: Vec<usize>,
}

/// Sorts `letters` in place; returns the permutation sign, or 0 on a repeat.
pub fn sort_with_sign(letters: &mut [u8]) -> i32 {
    let mut sign = 1;
    for i in 1..letters.len() {
        let mut j = i;
        while j > 0 && letters[j - 1] > letters[j] {
            letters.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if letters.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

fn multiplicities(letters: &[u8], n: usize) -> Vec<usize> {
    let mut m = vec![0; n];
    for &l in letters {
        m[l as usize] += 1;
    }
    m
}

fn letters_of(mult: &[usize]) -> Vec<u8> {
    mult.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i as u8, k)).collect()
}

/// Compositions of `k` into `parts` nonnegative parts.
fn compositions(k: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in compositions(k - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

impl MultigradedSpace {
    pub fn new(kind: TensorKind, n: usize, degrees: Vec<usize>) -> Self {
        MultigradedSpace { kind, n, degrees }
    }

    pub fn total_degree(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Dimension from the binomial / multiset-coefficient product formula.
    pub fn dim(&self) -> BigInt {
        let n = self.n as u64;
        self.degrees
            .iter()
            .map(|&d| match self.kind {
                TensorKind::Exterior => binomial(n, d as u64),
                TensorKind::Symmetric | TensorKind::DividedPower => {
                    if n == 0 {
                        BigInt::from((d == 0) as u8)
                    } else {
                        binomial(n + d as u64 - 1, d as u64)
                    }
                }
            })
            .product()
    }

    fn factor_basis(&self, d: usize) -> Vec<Vec<u8>> {
        fn rec(d: usize, lo: u8, n: u8, strict: bool, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
            if cur.len() == d {
                out.push(cur.clone());
                return;
            }
            for v in lo..n {
                cur.push(v);
                rec(d, if strict { v + 1 } else { v }, n, strict, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(d, 0, self.n as u8, self.kind == TensorKind::Exterior, &mut Vec::new(), &mut out);
        out
    }

    /// Canonical basis keys in lexicographic order.
    pub fn basis(&self) -> Vec<Key> {
        let mut keys: Vec<Key> = vec![Vec::new()];
        for &d in &self.degrees {
            let fb = self.factor_basis(d);
            keys = keys
                .iter()
                .flat_map(|k| {
                    fb.iter().map(move |f| {
                        let mut x = k.clone();
                        x.extend_from_slice(f);
                        x
                    })
                })
                .collect();
        }
        keys
    }

    pub fn weight_of(&self, key: &[u8]) -> WeightVector {
        WeightVector(multiplicities(key, self.n))
    }

    fn factors<'a>(&self, key: &'a [u8]) -> Vec<&'a [u8]> {
        let mut out = Vec::with_capacity(self.degrees.len());
        let mut start = 0;
        for &d in &self.degrees {
            out.push(&key[start..start + d]);
            start += d;
        }
        out
    }

    /// Normalizes one factor's letter list into canonical form and coefficient.
    fn normalize_factor(&self, letters: &mut [u8]) -> Rational {
        match self.kind {
            TensorKind::Exterior => Rational::from_int(sort_with_sign(letters) as i64),
            TensorKind::Symmetric => {
                letters.sort_unstable();
                Rational::one()
            }
            TensorKind::DividedPower => {
                letters.sort_unstable();
                Rational::one()
            }
        }
    }

    /// Image of a basis key under the partial map `p` (acting by `e_j ↦ e_{p(j)}`).
    pub fn act_map_key(&self, p: &PartialTransformation, key: &[u8]) -> Option<(Key, Rational)> {
        let mut out = Vec::with_capacity(key.len());
        let mut coeff = Rational::one();
        for f in self.factors(key) {
            let mut img = Vec::with_capacity(f.len());
            for &l in f {
                img.push(p.apply(l as usize)? as u8);
            }
            if self.kind == TensorKind::DividedPower {
                // e_a^{(α_a)} ↦ e_{p(a)}^{(α_a)}; merging gives multinomials.
                let before = multiplicities(f, self.n);
                let after = multiplicities(&img, self.n);
                let num: BigInt = after.iter().map(|&k| factorial(k as u64)).product();
                let den: BigInt = before.iter().map(|&k| factorial(k as u64)).product();
                coeff *= &Rational::from_bigint(num / den);
            }
            let c = self.normalize_factor(&mut img);
            if c.is_zero() {
                return None;
            }
            coeff *= &c;
            out.extend(img);
        }
        Some((out, coeff))
    }

    pub fn act_map(&self, p: &PartialTransformation, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::new();
        for (k, c) in v {
            if let Some((key, x)) = self.act_map_key(p, k) {
                add_term(&mut out, key, &(c * &x));
            }
        }
        out
    }

    /// Expansion of one factor under `e_j ↦ Σ_i g_{ij} e_i`.
    fn expand_factor(&self, g: &RationalMatrix, f: &[u8]) -> Vec<(Vec<u8>, Rational)> {
        let n = self.n;
        match self.kind {
            TensorKind::Exterior | TensorKind::Symmetric => {
                let mut acc: Vec<(Vec<u8>, Rational)> = vec![(Vec::new(), Rational::one())];
                for &l in f {
                    let mut next = Vec::new();
                    for (w, c) in &acc {
                        for i in 0..n {
                            let x = g.get(i, l as usize);
                            if x.is_zero() {
                                continue;
                            }
                            if self.kind == TensorKind::Exterior && w.contains(&(i as u8)) {
                                continue;
                            }
                            let mut w2 = w.clone();
                            w2.push(i as u8);
                            next.push((w2, c * x));
                        }
                    }
                    acc = next;
                }
                let mut merged: BTreeMap<Vec<u8>, Rational> = BTreeMap::new();
                for (mut w, c) in acc {
                    let s = self.normalize_factor(&mut w);
                    if !s.is_zero() {
                        add_term(&mut merged, w, &(&c * &s));
                    }
                }
                merged.into_iter().collect()
            }
            TensorKind::DividedPower => {
                // Π_a (Σ_i g_{ia} e_i)^{(α_a)} with e^{(p)} e^{(q)} = C(p+q, p) e^{(p+q)}.
                let alpha = multiplicities(f, n);
                let mut acc: Vec<(Vec<usize>, Rational)> = vec![(vec![0; n], Rational::one())];
                for (a, &k) in alpha.iter().enumerate() {
                    if k == 0 {
                        continue;
                    }
                    let mut next = Vec::new();
                    for comp in compositions(k, n) {
                        let mut c = Rational::one();
                        for (i, &ci) in comp.iter().enumerate() {
                            if ci > 0 {
                                c *= &g.get(i, a).pow(ci as u32);
                            }
                        }
                        if c.is_zero() {
                            continue;
                        }
                        for (m, d) in &acc {
                            let mut coeff = &c * d;
                            let mut m2 = m.clone();
                            for i in 0..n {
                                if comp[i] > 0 {
                                    coeff *= &Rational::from_bigint(binomial((m[i] + comp[i]) as u64, comp[i] as u64));
                                    m2[i] += comp[i];
                                }
                            }
                            next.push((m2, coeff));
                        }
                    }
                    acc = next;
                }
                let mut merged: BTreeMap<Vec<u8>, Rational> = BTreeMap::new();
                for (m, c) in acc {
                    add_term(&mut merged, letters_of(&m), &c);
                }
                merged.into_iter().collect()
            }
        }
    }

    /// Functorial action of an arbitrary `n × n` matrix.
    pub fn act_matrix(&self, g: &RationalMatrix, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::new();
        for (k, c) in v {
            let mut acc: Vec<(Key, Rational)> = vec![(Vec::new(), c.clone())];
            for f in self.factors(k) {
                let ex = self.expand_factor(g, f);
                let mut next = Vec::with_capacity(acc.len() * ex.len());
                for (w, x) in &acc {
                    for (e, y) in &ex {
                        let mut w2 = w.clone();
                        w2.extend_from_slice(e);
                        next.push((w2, x * y));
                    }
                }
                acc = next;
                if acc.is_empty() {
                    break;
                }
            }
            for (key, x) in acc {
                add_term(&mut out, key, &x);
            }
        }
        out
    }

    /// Tensor product of keys from two spaces of the same kind and `n`.
    pub fn concat(&self, other: &MultigradedSpace) -> MultigradedSpace {
        assert_eq!((self.kind, self.n), (other.kind, other.n));
        let mut degrees = self.degrees.clone();
        degrees.extend_from_slice(&other.degrees);
        MultigradedSpace { kind: self.kind, n: self.n, degrees }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::{enumerate_monoid, MonoidKind};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit(key: &[u8]) -> TensorVec {
        let mut v = TensorVec::new();
        v.insert(key.to_vec(), Rational::one());
        v
    }

    fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> RationalMatrix {
        RationalMatrix::from_i64(&(0..n).map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect()).collect::<Vec<_>>())
    }

    #[test]
    fn dims_match_basis_enumeration() {
        for kind in [TensorKind::Exterior, TensorKind::Symmetric, TensorKind::DividedPower] {
            for n in 1..=4 {
                for degrees in [vec![2], vec![1, 2], vec![3, 0, 1], vec![]] {
                    let s = MultigradedSpace::new(kind, n, degrees);
                    assert_eq!(BigInt::from(s.basis().len()), s.dim(), "{s:?}");
                }
            }
        }
    }

    #[test]
    fn exterior_signs() {
        let s = MultigradedSpace::new(TensorKind::Exterior, 3, vec![2]);
        let swap = PartialTransformation::transposition(3, 0, 1);
        let v = s.act_map(&swap, &unit(&[0, 1]));
        assert_eq!(v, [(vec![0, 1], Rational::from_int(-1))].into_iter().collect());
        let collapse: PartialTransformation = "1,1,3".parse().unwrap();
        assert!(s.act_map(&collapse, &unit(&[0, 1])).is_empty());
    }

    #[test]
    fn divided_power_merge_coefficient() {
        // e_1 e_2 ↦ e_1 e_1 = 2 e_1^{(2)} under the collapse 2 ↦ 1.
        let s = MultigradedSpace::new(TensorKind::DividedPower, 2, vec![2]);
        let collapse: PartialTransformation = "1,1".parse().unwrap();
        let v = s.act_map(&collapse, &unit(&[0, 1]));
        assert_eq!(v, [(vec![0, 0], Rational::from_int(2))].into_iter().collect());
        // Symmetric powers have coefficient 1 instead.
        let sym = MultigradedSpace::new(TensorKind::Symmetric, 2, vec![2]);
        assert_eq!(sym.act_map(&collapse, &unit(&[0, 1])), unit(&[0, 0]));
    }

    #[test]
    fn matrix_action_agrees_with_map_action_on_monoid_elements() {
        for kind in [TensorKind::Exterior, TensorKind::Symmetric, TensorKind::DividedPower] {
            let s = MultigradedSpace::new(kind, 3, vec![2, 1]);
            for p in enumerate_monoid(MonoidKind::PT, 3).unwrap() {
                for key in s.basis() {
                    let v = unit(&key);
                    assert_eq!(s.act_map(&p, &v), s.act_matrix(&p.matrix_of(), &v), "{kind:?} {p}");
                }
            }
        }
    }

    #[test]
    fn matrix_action_is_multiplicative() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for kind in [TensorKind::Exterior, TensorKind::Symmetric, TensorKind::DividedPower] {
            let s = MultigradedSpace::new(kind, 3, vec![2, 2]);
            for _ in 0..5 {
                let (g, h) = (random_matrix(&mut rng, 3), random_matrix(&mut rng, 3));
                for key in s.basis().into_iter().take(12) {
                    let v = unit(&key);
                    let lhs = s.act_matrix(&g, &s.act_matrix(&h, &v));
                    assert_eq!(lhs, s.act_matrix(&g.mul(&h), &v), "{kind:?}");
                }
            }
        }
    }

    #[test]
    fn diagonal_scales_by_weight() {
        let t = Rational::from_int(3);
        let mut g = RationalMatrix::identity(3);
        g.set(0, 0, t.clone());
        for kind in [TensorKind::Exterior, TensorKind::Symmetric, TensorKind::DividedPower] {
            let s = MultigradedSpace::new(kind, 3, vec![2, 1]);
            for key in s.basis() {
                let a = s.weight_of(&key).coords()[0];
                let expect: TensorVec = [(key.clone(), t.pow(a as u32))].into_iter().collect();
                assert_eq!(s.act_matrix(&g, &unit(&key)), expect);
            }
        }
    }
}
