//! Schubert polynomials and the pushforward of Richardson classes from the flag
//! variety, used as an oracle for positroid classes.

use std::collections::{BTreeMap, HashMap};

use super::grass::GrassClass;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::perm::{KBruhatPair, Permutation};

/// Largest `n` accepted by [`richardson_pushforward`].
pub const MAX_ORACLE_N: usize = 6;

/// A polynomial in `x_1..x_n` with integer coefficients, keyed by exponent vectors.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<Vec<u8>, i64>);

impl Poly {
    pub fn monomial(exps: Vec<u8>, c: i64) -> Poly {
        let mut p = Poly::default();
        p.add(exps, c);
        p
    }

    fn add(&mut self, e: Vec<u8>, c: i64) {
        if c == 0 {
            return;
        }
        let v = self.0.entry(e.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// The constant term.
    pub fn constant(&self) -> i64 {
        self.0.iter().find(|(e, _)| e.iter().all(|&x| x == 0)).map_or(0, |(_, &c)| c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &other.0 {
                out.add(e1.iter().zip(e2).map(|(a, b)| a + b).collect(), c1 * c2);
            }
        }
        out
    }

    /// `∂_i f = (f − s_i f) / (x_i − x_{i+1})`, `i` 1-based.
    pub fn divided_difference(&self, i: usize) -> Poly {
        let mut out = Poly::default();
        for (e, &c) in &self.0 {
            let (a, b) = (e[i - 1], e[i]);
            let mut push = |x: u8, y: u8, c: i64| {
                let mut f = e.clone();
                f[i - 1] = x;
                f[i] = y;
                out.add(f, c);
            };
            if a > b {
                for t in 0..a - b {
                    push(a - 1 - t, b + t, c);
                }
            } else if a < b {
                for t in 0..b - a {
                    push(a + t, b - 1 - t, -c);
                }
            }
        }
        out
    }
}

/// A reduced word `i_1 … i_l` with `w = s_{i_1} ⋯ s_{i_l}`.
fn reduced_word(w: &Permutation) -> Vec<usize> {
    let mut word = Vec::new();
    let mut v = w.values().to_vec();
    // Bubble sort from the right records w = (v after sorting) · s_{i_l} ⋯ s_{i_1}.
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
        v.swap(i, i + 1);
        word.push(i + 1);
    }
    word.reverse();
    word
}

/// Schubert polynomials of `S_n`, by divided differences from `x_1^{n−1} ⋯ x_{n−1}`.
pub struct SchubertTable {
    n: usize,
    polys: HashMap<Permutation, Poly>,
}

impl SchubertTable {
    pub fn new(n: usize) -> Self {
        let w0 = Permutation::longest(n);
        let top = Poly::monomial((0..n).map(|i| (n - 1 - i) as u8).collect(), 1);
        let mut polys = HashMap::new();
        let mut frontier = vec![(w0, top)];
        while let Some((w, p)) = frontier.pop() {
            if polys.contains_key(&w) {
                continue;
            }
            for i in 1..n {
                if w.at(i) > w.at(i + 1) {
                    let ws = w.compose(&Permutation::simple(n, i));
                    if !polys.contains_key(&ws) {
                        frontier.push((ws, p.divided_difference(i)));
                    }
                }
            }
            polys.insert(w, p);
        }
        SchubertTable { n, polys }
    }

    pub fn get(&self, w: &Permutation) -> &Poly {
        &self.polys[w]
    }

    /// `c^w_{u,v}`: the coefficient of `𝔖_w` in `𝔖_u 𝔖_v`, read off as `∂_w(𝔖_u 𝔖_v)`.
    pub fn structure_constant(&self, u: &Permutation, v: &Permutation, w: &Permutation) -> i64 {
        if u.length() + v.length() != w.length() {
            return 0;
        }
        let mut p = self.get(u).mul(self.get(v));
        for &i in reduced_word(w).iter().rev() {
            p = p.divided_difference(i);
            if p.is_zero() {
                return 0;
            }
        }
        p.constant()
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// The Grassmannian permutation `v` with `v([k]) = σ(λ)`.
pub fn grassmannian_perm(lam: &Partition, k: usize, n: usize) -> Result<Permutation> {
    let top = lam.to_subset(k, n)?;
    let rest = top.complement(n);
    Permutation::new(top.elements().iter().chain(rest.elements()).copied().collect())
}

/// `π_*[X_u^w]` in `H*(Gr(k,n))`: the coefficient of `σ_μ` is `c^w_{u,v}` with `v`
/// Grassmannian and `v([k]) = σ(μ∨)`.
pub fn richardson_pushforward(pair: &KBruhatPair) -> Result<GrassClass> {
    let table = SchubertTable::new(pair.n());
    richardson_pushforward_with(&table, pair)
}

/// As [`richardson_pushforward`], reusing a table of Schubert polynomials.
pub fn richardson_pushforward_with(table: &SchubertTable, pair: &KBruhatPair) -> Result<GrassClass> {
    let (n, k) = (pair.n(), pair.k);
    if n > MAX_ORACLE_N {
        return Err(Error::CapExceeded(format!("oracle limited to n ≤ {MAX_ORACLE_N}")));
    }
    if table.n() != n {
        return Err(Error::SizeMismatch(format!("table for n = {}, pair for n = {n}", table.n())));
    }
    let (lu, lw) = (pair.u.length(), pair.w.length());
    let size = k * (n - k) + lu - lw;
    let mut out = GrassClass::zero(k, n);
    for mu in Partition::all(size, n - k, k) {
        let v = grassmannian_perm(&mu.complement(k, n - k)?, k, n)?;
        out.add(mu, table.structure_constant(&pair.u, &v, &pair.w));
    }
    Ok(out)
}
