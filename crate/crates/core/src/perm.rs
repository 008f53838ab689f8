//! Finite permutations in one-line notation, strong and k-Bruhat orders, and
//! the equivalence on k-Bruhat intervals.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation. Composition is right to left:
/// `(u * w)(i) = u(w(i))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotPermutation { n, values: values.iter().map(|&x| x as i64).collect() });
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(Permutation)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` for `i` in `[1,n]`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&j| self.at(j)).collect())
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        (0..v.len()).map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count()).sum()
    }

    /// Increasing on `[1,k]` and on `[k+1,n]`.
    pub fn is_grassmannian(&self, k: usize) -> bool {
        self.0[..k].windows(2).all(|w| w[0] < w[1]) && self.0[k..].windows(2).all(|w| w[0] < w[1])
    }

    /// Lies in the parabolic subgroup `S_k × S_{n-k}`.
    pub fn in_parabolic(&self, k: usize) -> bool {
        self.0[..k].iter().all(|&v| v <= k)
    }

    /// The simple transposition `s_i` of `S_n`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Sorted image `w([k])`.
    pub fn prefix_set(&self, k: usize) -> Vec<usize> {
        let mut p = self.0[..k].to_vec();
        p.sort_unstable();
        p
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            write!(f, "{}", self.0.iter().join(""))
        } else {
            write!(f, "[{}]", self.0.iter().join(","))
        }
    }
}

/// Parses `"21543"` (single digits) or `"2,1,5,4,3"`.
pub fn parse_permutation(s: &str) -> Result<Permutation> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let values: Vec<usize> = if t.contains(',') {
        t.split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<_>>()?
    } else {
        t.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
            .collect::<Result<_>>()?
    };
    Permutation::new(values)
}

pub fn perm_length(w: &Permutation) -> usize {
    w.length()
}

fn same_n(u: &Permutation, w: &Permutation) -> Result<()> {
    if u.n() != w.n() {
        return Err(Error::SizeMismatch(format!("permutations of {} and {}", u.n(), w.n())));
    }
    Ok(())
}

/// Strong Bruhat order via the sorted prefix-set criterion.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    same_n(u, w)?;
    Ok((1..u.n()).all(|k| {
        let a = u.prefix_set(k);
        let b = w.prefix_set(k);
        a.iter().zip(&b).all(|(x, y)| x <= y)
    }))
}

/// The k-Bruhat order criterion: (1) `u(a) ≤ w(a)` for `a ≤ k` and `u(b) ≥ w(b)` for
/// `b > k`; (2) `a < b`, `u(a) < u(b)`, `w(a) > w(b)` force `a ≤ k < b`.
pub fn k_bruhat_leq(u: &Permutation, w: &Permutation, k: usize) -> Result<bool> {
    same_n(u, w)?;
    let n = u.n();
    if k > n {
        return Err(Error::SizeMismatch(format!("k = {k} exceeds n = {n}")));
    }
    for a in 1..=n {
        let ok = if a <= k { u.at(a) <= w.at(a) } else { u.at(a) >= w.at(a) };
        if !ok {
            return Ok(false);
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if u.at(a) < u.at(b) && w.at(a) > w.at(b) && !(a <= k && k < b) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A pair `u ≤_k w`, representing the k-Bruhat interval `[u,w]_k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct KBruhatPair {
    pub k: usize,
    pub u: Permutation,
    pub w: Permutation,
}

impl KBruhatPair {
    pub fn new(u: Permutation, w: Permutation, k: usize) -> Result<Self> {
        if !k_bruhat_leq(&u, &w, k)? {
            return Err(Error::NotKBruhatPair(format!("{u} ≰_{k} {w}")));
        }
        Ok(KBruhatPair { k, u, w })
    }

    pub fn n(&self) -> usize {
        self.u.n()
    }

    /// All k-Bruhat pairs on `[n]`.
    pub fn all(n: usize, k: usize) -> Vec<KBruhatPair> {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let mut out = Vec::new();
        for u in &perms {
            for w in &perms {
                if k_bruhat_leq(u, w, k).unwrap() {
                    out.push(KBruhatPair { k, u: u.clone(), w: w.clone() });
                }
            }
        }
        out
    }
}

/// The equivalent pair whose `w` is Grassmannian: `u = u'z`, `w = w'z` with
/// `z ∈ S_k × S_{n-k}`.
pub fn q_canonicalize(p: &KBruhatPair) -> Result<KBruhatPair> {
    if !k_bruhat_leq(&p.u, &p.w, p.k)? {
        return Err(Error::NotKBruhatPair(format!("{} ≰_{} {}", p.u, p.k, p.w)));
    }
    let (n, k) = (p.n(), p.k);
    let mut wp = p.w.prefix_set(k);
    let mut rest: Vec<usize> = p.w.values()[k..].to_vec();
    rest.sort_unstable();
    wp.extend(rest);
    let w_can = Permutation(wp);
    let z = w_can.inverse().compose(&p.w);
    debug_assert!(z.in_parabolic(k) && z.n() == n);
    let u_can = p.u.compose(&z.inverse());
    Ok(KBruhatPair { k, u: u_can, w: w_can })
}

/// `u₁⁻¹u₂ = w₁⁻¹w₂` with the common ratio in `S_k × S_{n-k}`.
pub fn q_equivalent(p1: &KBruhatPair, p2: &KBruhatPair) -> Result<bool> {
    if p1.n() != p2.n() || p1.k != p2.k {
        return Err(Error::SizeMismatch("pairs with different (k,n)".into()));
    }
    let a = p1.u.inverse().compose(&p2.u);
    let b = p1.w.inverse().compose(&p2.w);
    Ok(a == b && a.in_parabolic(p1.k))
}
