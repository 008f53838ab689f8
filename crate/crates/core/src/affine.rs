//! Affine permutations of period `n`, bounded affine permutations, and the
//! bijection with k-Bruhat pairs.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::{k_bruhat_leq, KBruhatPair, Permutation};

/// A bijection `f` of ℤ with `f(i+n) = f(i) + n`, stored as the window `f(1..n)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl Serialize for AffinePermutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AffinePermutation", 2)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("window", &self.window)?;
        st.end()
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.window.iter().join(","))
    }
}

/// Parses the bracketed window form `"[4,3,5,6,7]"`.
pub fn parse_window(s: &str) -> Result<AffinePermutation> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let window = t
        .split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    AffinePermutation::new(window)
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::NotAffinePermutation("empty window".into()));
        }
        let mut seen = vec![false; n as usize];
        for &v in &window {
            let r = v.rem_euclid(n) as usize;
            if seen[r] {
                return Err(Error::NotAffinePermutation(format!("repeated residue mod {n} in {window:?}")));
            }
            seen[r] = true;
        }
        let excess: i64 = window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        if excess.rem_euclid(n) != 0 {
            return Err(Error::NotAffinePermutation(format!("Σ(f(i)-i) not divisible by {n} in {window:?}")));
        }
        Ok(AffinePermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        AffinePermutation { window: (1..=n as i64).collect() }
    }

    /// The translation `t_μ(i) = nμ_i + i`.
    pub fn translation(mu: &[i64]) -> Self {
        let n = mu.len() as i64;
        AffinePermutation { window: mu.iter().enumerate().map(|(i, m)| n * m + i as i64 + 1).collect() }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `f(i)` for any integer `i`, by periodicity.
    pub fn value(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n);
        self.window[r as usize] + (i - 1 - r)
    }

    /// `f⁻¹(v)`.
    pub fn preimage(&self, v: i64) -> i64 {
        let n = self.n() as i64;
        let (pos, fv) = self
            .window
            .iter()
            .enumerate()
            .find(|(_, &w)| (w - v).rem_euclid(n) == 0)
            .expect("residues are a complete system");
        pos as i64 + 1 + (v - fv)
    }

    /// The ball number `av(f) = (1/n) Σ (f(i) - i)`.
    pub fn ball_number(&self) -> i64 {
        let s: i64 = self.window.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).sum();
        s / self.n() as i64
    }

    /// Largest displacement `|f(i) - i|` over the window.
    pub fn max_displacement(&self) -> i64 {
        self.window.iter().enumerate().map(|(i, &v)| (v - i as i64 - 1).abs()).max().unwrap_or(0)
    }

    /// `i ≤ f(i) ≤ i + n` for all `i`.
    pub fn is_bounded(&self) -> bool {
        let n = self.n() as i64;
        self.window.iter().enumerate().all(|(i, &v)| {
            let i = i as i64 + 1;
            i <= v && v <= i + n
        })
    }

    pub(crate) fn require_bounded(&self) -> Result<()> {
        if self.is_bounded() {
            Ok(())
        } else {
            Err(Error::NotBounded(self.to_string()))
        }
    }

    /// Number of inversion classes: pairs `i ∈ [1,n]`, `j > i` with `f(i) > f(j)`.
    pub fn length(&self) -> usize {
        // With M the largest displacement, j > i + 2M gives f(j) ≥ j - M > i + M ≥ f(i).
        let m = self.max_displacement();
        let mut count = 0;
        for i in 1..=self.n() as i64 {
            let fi = self.value(i);
            for j in i + 1..=i + 2 * m {
                if fi > self.value(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// The sorted window `f⁰`.
    pub fn sorted_window(&self) -> Vec<i64> {
        let mut w = self.window.clone();
        w.sort_unstable();
        w
    }

    /// Exchanges the values at positions `i + rn` and `j + rn` for every `r`
    /// (right multiplication by the affine transposition of `i` and `j`).
    pub fn swap_positions(&self, i: i64, j: i64) -> Self {
        let n = self.n() as i64;
        assert!((j - i).rem_euclid(n) != 0, "positions {i} and {j} are congruent mod {n}");
        let (fi, fj) = (self.value(i), self.value(j));
        let mut window = self.window.clone();
        let ri = (i - 1).rem_euclid(n);
        let rj = (j - 1).rem_euclid(n);
        window[ri as usize] = fj - (i - 1 - ri);
        window[rj as usize] = fi - (j - 1 - rj);
        AffinePermutation { window }
    }

    /// Right multiplication by `s_i`, `i ∈ [0, n)`.
    pub fn mul_simple_right(&self, i: usize) -> Self {
        self.swap_positions(i as i64, i as i64 + 1)
    }

    /// Left multiplication by `s_i`, `i ∈ [0, n)`: exchanges values `≡ i` and `≡ i+1`.
    pub fn mul_simple_left(&self, i: usize) -> Self {
        let n = self.n() as i64;
        let i = i as i64;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(n);
                if r == i.rem_euclid(n) {
                    v + 1
                } else if r == (i + 1).rem_euclid(n) {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePermutation { window }
    }

    /// A reduced word `i₁ … i_ℓ` with `f = t · s_{i₁} ⋯ s_{i_ℓ}` for the length-zero
    /// element `t` of the same coset.
    pub fn reduced_word(&self) -> Vec<usize> {
        let n = self.n();
        let mut word = Vec::new();
        let mut x = self.clone();
        loop {
            let d = (0..n).find(|&i| x.value(i as i64) > x.value(i as i64 + 1));
            match d {
                Some(i) => {
                    word.push(i);
                    x = x.mul_simple_right(i);
                }
                None => break,
            }
        }
        word.reverse();
        word
    }

    /// `s₊⁻¹ ∘ f ∘ s₊`, i.e. `g(i) = f(i+1) - 1`.
    pub fn rotate(&self) -> Self {
        let n = self.n() as i64;
        AffinePermutation { window: (1..=n).map(|i| self.value(i + 1) - 1).collect() }
    }

    /// The inverse of [`AffinePermutation::rotate`]: `g(i) = f(i-1) + 1`.
    pub fn rotate_back(&self) -> Self {
        let n = self.n() as i64;
        AffinePermutation { window: (1..=n).map(|i| self.value(i - 1) + 1).collect() }
    }
}

/// `f_{u,w} = u · t_{ω_k} · w⁻¹`.
pub fn from_pair(p: &KBruhatPair) -> Result<AffinePermutation> {
    if !k_bruhat_leq(&p.u, &p.w, p.k)? {
        return Err(Error::NotKBruhatPair(format!("{} ≰_{} {}", p.u, p.k, p.w)));
    }
    Ok(pair_to_affine_unchecked(&p.u, &p.w, p.k))
}

pub(crate) fn pair_to_affine_unchecked(u: &Permutation, w: &Permutation, k: usize) -> AffinePermutation {
    let n = u.n();
    let winv = w.inverse();
    let window = (1..=n)
        .map(|i| {
            let a = winv.at(i);
            u.at(a) as i64 + if a <= k { n as i64 } else { 0 }
        })
        .collect();
    AffinePermutation { window }
}

/// The canonical pair `(u, w)` with `w` Grassmannian and `f = u · t_{ω_k} · w⁻¹`.
pub fn to_pair(f: &AffinePermutation) -> Result<KBruhatPair> {
    f.require_bounded()?;
    let n = f.n() as i64;
    let k = f.ball_number() as usize;
    let high: Vec<usize> = (1..=n).filter(|&i| f.value(i) > n).map(|i| i as usize).collect();
    if high.len() != k {
        return Err(Error::Invariant(format!("{f}: {} values exceed n, ball number {k}", high.len())));
    }
    let low = (1..=n as usize).filter(|i| !high.contains(i));
    let wv: Vec<usize> = high.iter().copied().chain(low).collect();
    let uv: Vec<usize> = wv
        .iter()
        .enumerate()
        .map(|(a, &i)| (f.value(i as i64) - if a < k { n } else { 0 }) as usize)
        .collect();
    let u = Permutation::new(uv)?;
    let w = Permutation::new(wv)?;
    KBruhatPair::new(u, w, k).map_err(|e| Error::Invariant(e.to_string()))
}

fn check_same_type(f: &AffinePermutation, g: &AffinePermutation) -> Result<()> {
    if f.n() != g.n() {
        return Err(Error::SizeMismatch(format!("periods {} and {}", f.n(), g.n())));
    }
    if f.ball_number() != g.ball_number() {
        return Err(Error::SizeMismatch(format!(
            "ball numbers {} and {}",
            f.ball_number(),
            g.ball_number()
        )));
    }
    Ok(())
}

/// `r_{ij} = k - #{p < i : f(p) > j}`, the rank function of any `f` of ball number `k`.
pub(crate) fn rank_function(f: &AffinePermutation, i: i64, j: i64) -> i64 {
    let m = f.max_displacement();
    let k = f.ball_number();
    // f(p) > j forces p > j - m.
    let lo = j - m + 1;
    k - (lo..i).filter(|&p| f.value(p) > j).count() as i64
}

/// Bruhat order on affine permutations of equal ball number, via rank functions:
/// `f ≤ g` iff `r_f ≥ r_g` entrywise.
pub fn affine_bruhat_leq(f: &AffinePermutation, g: &AffinePermutation) -> Result<bool> {
    check_same_type(f, g)?;
    let n = f.n() as i64;
    // Outside |j - i| ≤ w both rank functions agree with j - i + 1 (left) or k (right).
    let w = 2 * (f.max_displacement() + g.max_displacement()) + 2 * n;
    for i in 1..=n {
        for j in i - w..=i + w {
            if rank_function(f, i, j) < rank_function(g, i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Bounded covers `g ⋗ f`, each flagged with whether it is a 0-cover (`f⁰ ≠ g⁰`),
/// sorted by window.
pub fn bounded_covers_above(f: &AffinePermutation) -> Result<Vec<(AffinePermutation, bool)>> {
    f.require_bounded()?;
    let n = f.n() as i64;
    let len = f.length();
    let f0 = f.sorted_window();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..i + n {
            if f.value(i) < f.value(j) {
                let g = f.swap_positions(i, j);
                if g.is_bounded() && g.length() == len + 1 {
                    let zero = g.sorted_window() != f0;
                    out.push((g, zero));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// All Bruhat covers `g ⋖ f` (not restricted to bounded `g`), sorted by window.
pub fn covers_below(f: &AffinePermutation) -> Vec<AffinePermutation> {
    let n = f.n() as i64;
    let len = f.length();
    let m = f.max_displacement();
    let mut out = Vec::new();
    for i in 1..=n {
        // A transposition of positions farther apart than 2m + n cannot lower the length by one.
        for j in i + 1..=i + 2 * m + n {
            if (j - i) % n == 0 || f.value(i) < f.value(j) {
                continue;
            }
            let g = f.swap_positions(i, j);
            if g.length() + 1 == len {
                out.push(g);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// The reduction of a bounded affine permutation mod `n`, with fixed points colored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecoratedPermutation {
    #[serde(rename = "values")]
    pub base: Permutation,
    /// `-1` when `f(i) = i`, `+1` when `f(i) = i + n`.
    pub colors: BTreeMap<usize, i8>,
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        for (i, c) in &self.colors {
            write!(f, "/{}{}", if *c > 0 { '+' } else { '-' }, i)?;
        }
        Ok(())
    }
}

pub fn to_decorated(f: &AffinePermutation) -> Result<DecoratedPermutation> {
    f.require_bounded()?;
    let n = f.n() as i64;
    let values: Vec<usize> = f.window.iter().map(|&v| ((v - 1).rem_euclid(n) + 1) as usize).collect();
    let mut colors = BTreeMap::new();
    for (i, &v) in f.window.iter().enumerate() {
        let i1 = i as i64 + 1;
        if v == i1 {
            colors.insert(i + 1, -1);
        } else if v == i1 + n {
            colors.insert(i + 1, 1);
        }
    }
    Ok(DecoratedPermutation { base: Permutation::new(values)?, colors })
}

/// Parses `"2314/+4"` or `"[2,3,1,4]/+4"`: a permutation followed by `/±i` colors.
pub fn parse_decorated(s: &str) -> Result<DecoratedPermutation> {
    let mut parts = s.trim().split('/');
    let base = crate::perm::parse_permutation(parts.next().unwrap_or_default())?;
    let mut colors = BTreeMap::new();
    for c in parts {
        let c = c.trim();
        let (sign, rest) = match c.chars().next() {
            Some('+') => (1, &c[1..]),
            Some('-') => (-1, &c[1..]),
            _ => return Err(Error::Parse(format!("color {c:?} must start with + or -"))),
        };
        let i = rest.parse::<usize>().map_err(|e| Error::Parse(format!("{rest:?}: {e}")))?;
        if colors.insert(i, sign).is_some() {
            return Err(Error::Parse(format!("fixed point {i} colored twice")));
        }
    }
    Ok(DecoratedPermutation { base, colors })
}

/// Inverse of [`to_decorated`]; every fixed point must be colored.
pub fn from_decorated(d: &DecoratedPermutation) -> Result<AffinePermutation> {
    let n = d.base.n();
    let mut window = Vec::with_capacity(n);
    for i in 1..=n {
        let v = d.base.at(i);
        let fi = if v > i {
            v as i64
        } else if v < i {
            (v + n) as i64
        } else {
            match d.colors.get(&i) {
                Some(-1) => i as i64,
                Some(1) => (i + n) as i64,
                _ => return Err(Error::Parse(format!("fixed point {i} needs color +1 or -1"))),
            }
        };
        window.push(fi);
    }
    if d.colors.keys().any(|&i| d.base.at(i) != i) {
        return Err(Error::Parse("colors given on non-fixed points".into()));
    }
    AffinePermutation::new(window)
}

/// Period-`2n` bounded affine permutation with `f(i) = w(i) + n` on `[1,n]` and
/// `f(i) = i + n` on `[n+1, 2n]`.
pub fn graph_schubert_perm(w: &Permutation) -> AffinePermutation {
    double_bruhat_perm(w, &Permutation::identity(w.n()))
}

/// `f(i) = u(i) + n` on `[1,n]`, `f(i) = v⁻¹(i-n) + 2n` on `[n+1, 2n]`.
pub fn double_bruhat_perm(u: &Permutation, v: &Permutation) -> AffinePermutation {
    let n = u.n();
    let vinv = v.inverse();
    let mut window: Vec<i64> = (1..=n).map(|i| (u.at(i) + n) as i64).collect();
    window.extend((n + 1..=2 * n).map(|i| (vinv.at(i - n) + 2 * n) as i64));
    AffinePermutation { window }
}

/// The element `f(· - k)` of ball number zero corresponding to `f` of ball number `k`.
pub fn to_zero_coset(f: &AffinePermutation) -> AffinePermutation {
    let k = f.ball_number();
    let n = f.n() as i64;
    AffinePermutation { window: (1..=n).map(|i| f.value(i - k)).collect() }
}
