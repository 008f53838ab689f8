//! Juggling states, Grassmann necklaces and siteswaps.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::subset::{parse_subset, Subset};

/// A subset `S ⊂ ℤ` differing from `−ℕ = {…, −1, 0}` in finitely many places:
/// `S = ({i ≤ 0} \ removed) ∪ added`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualState {
    added: BTreeSet<i64>,
    removed: BTreeSet<i64>,
}

impl VirtualState {
    pub fn new(added: impl IntoIterator<Item = i64>, removed: impl IntoIterator<Item = i64>) -> Result<Self> {
        let added: BTreeSet<i64> = added.into_iter().collect();
        let removed: BTreeSet<i64> = removed.into_iter().collect();
        if added.iter().any(|&x| x <= 0) || removed.iter().any(|&x| x > 0) {
            return Err(Error::Parse("added must be positive and removed nonpositive".into()));
        }
        Ok(VirtualState { added, removed })
    }

    pub fn added(&self) -> &BTreeSet<i64> {
        &self.added
    }

    pub fn removed(&self) -> &BTreeSet<i64> {
        &self.removed
    }

    pub fn contains(&self, x: i64) -> bool {
        if x > 0 {
            self.added.contains(&x)
        } else {
            !self.removed.contains(&x)
        }
    }

    /// `|added| − |removed|`.
    pub fn ball_number(&self) -> i64 {
        self.added.len() as i64 - self.removed.len() as i64
    }

    /// `Σ added − Σ removed`.
    pub fn height(&self) -> i64 {
        self.added.iter().sum::<i64>() - self.removed.iter().sum::<i64>()
    }

    /// `{x − 1 : x ∈ S}`.
    pub fn shift_left(&self) -> Self {
        let added = self.added.iter().filter(|&&a| a >= 2).map(|a| a - 1).collect();
        let mut removed: BTreeSet<i64> = self.removed.iter().map(|r| r - 1).collect();
        if !self.added.contains(&1) {
            removed.insert(0);
        }
        VirtualState { added, removed }
    }

    /// Elements of `self` not in `other` (always finite).
    pub fn difference(&self, other: &VirtualState) -> BTreeSet<i64> {
        let pos = self.added.iter().filter(|a| !other.added.contains(a)).copied();
        let neg = other.removed.iter().filter(|r| !self.removed.contains(r)).copied();
        pos.chain(neg).collect()
    }
}

/// `T` follows `S` when `T = {t} ∪ (S − 1)` with `t ∉ S − 1`.
pub fn can_follow(s: &VirtualState, t: &VirtualState) -> bool {
    let shifted = s.shift_left();
    shifted.difference(t).is_empty() && t.difference(&shifted).len() == 1
}

/// The state `st(f, t) = {f(i) − t : i ≤ t}` of any affine permutation.
pub fn state_at(f: &AffinePermutation, t: i64) -> VirtualState {
    let m = f.max_displacement();
    // i ≤ t with f(i) > t forces i > t − m; a missing x ≤ 0 has preimage in (t, t + m].
    let added = (t - m..=t).map(|i| f.value(i) - t).filter(|&x| x > 0).collect();
    let removed = (t + 1..=t + m).map(|i| f.value(i) - t).filter(|&x| x <= 0).collect();
    VirtualState { added, removed }
}

/// An n-tuple of k-subsets of `[n]` in which each state (cyclically) follows the
/// previous one. States are in the rotated frame: `J_i = st(f, i−1) ∩ [n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Necklace {
    n: usize,
    k: usize,
    states: Vec<Subset>,
}

fn bounded_successor_ok(n: usize, a: &Subset, b: &Subset) -> std::result::Result<(), String> {
    let kept: Vec<usize> = a.elements().iter().filter(|&&x| x != 1).map(|x| x - 1).collect();
    if let Some(x) = kept.iter().find(|x| !b.contains(**x)) {
        return Err(format!("{b} does not contain {x} from {a} shifted"));
    }
    let fresh = b.len() - kept.len();
    let expected = usize::from(a.contains(1));
    if fresh != expected || b.len() != a.len() {
        return Err(format!("{b} cannot follow {a} in [1,{n}]"));
    }
    Ok(())
}

impl Necklace {
    pub fn new(n: usize, states: Vec<Subset>) -> Result<Self> {
        if states.len() != n || n == 0 {
            return Err(Error::SizeMismatch(format!("necklace needs {n} states, got {}", states.len())));
        }
        let k = states[0].len();
        for (i, s) in states.iter().enumerate() {
            if s.len() != k || s.elements().iter().any(|&x| x > n) {
                return Err(Error::FollowViolated { step: i + 1, detail: format!("{s} is not a {k}-subset of [1,{n}]") });
            }
        }
        for i in 0..n {
            bounded_successor_ok(n, &states[i], &states[(i + 1) % n])
                .map_err(|detail| Error::FollowViolated { step: i + 1, detail })?;
        }
        Ok(Necklace { n, k, states })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn states(&self) -> &[Subset] {
        &self.states
    }

    /// `J_i`, 1-based.
    pub fn state(&self, i: usize) -> &Subset {
        &self.states[i - 1]
    }

    /// Relabels `J_r` by `i ↦ i + r − 1 (mod n)`, giving the necklace in the
    /// original column labels.
    pub fn to_grassmann_labels(&self) -> Vec<Subset> {
        self.states.iter().enumerate().map(|(r, s)| s.rotate_up(self.n, r)).collect()
    }

    /// Inverse of [`Necklace::to_grassmann_labels`].
    pub fn from_grassmann_labels(n: usize, labels: Vec<Subset>) -> Result<Self> {
        let states = labels.iter().enumerate().map(|(r, s)| s.rotate_down(n, r)).collect();
        Necklace::new(n, states)
    }

    /// Componentwise order on states.
    pub fn leq(&self, other: &Necklace) -> bool {
        self.n == other.n && self.states.iter().zip(&other.states).all(|(a, b)| a.leq(b))
    }

    /// The necklace of the rotated permutation `s₊⁻¹ f s₊`.
    pub fn rotate(&self) -> Necklace {
        let mut states = self.states.clone();
        states.rotate_left(1);
        Necklace { n: self.n, k: self.k, states }
    }

    /// The necklace of `s₊ f s₊⁻¹`, inverse to [`Necklace::rotate`].
    pub fn rotate_back(&self) -> Necklace {
        let mut states = self.states.clone();
        states.rotate_right(1);
        Necklace { n: self.n, k: self.k, states }
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.states.iter().join(","))
    }
}

/// Parses `"(14,13,12,12)"`; digit strings need `n ≤ 9`, otherwise use `{1,10};{2,3};…`.
pub fn parse_necklace(n: usize, s: &str) -> Result<Vec<Subset>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = if t.contains(';') { t.split(';').collect() } else { t.split(',').collect() };
    parts.iter().map(|p| parse_subset(n, p)).collect()
}

/// `J_i = st(f, i−1) ∩ [n]` for `i = 1..n`.
pub fn states_of(f: &AffinePermutation) -> Result<Necklace> {
    f.require_bounded()?;
    let n = f.n() as i64;
    let states = (1..=n)
        .map(|i| {
            let v: Vec<usize> = (i - n..i)
                .map(|p| f.value(p) - (i - 1))
                .filter(|&x| x > 0)
                .map(|x| x as usize)
                .sorted()
                .collect();
            Subset::from_sorted(v)
        })
        .collect();
    Ok(Necklace { n: n as usize, k: f.ball_number() as usize, states })
}

/// The unique bounded affine permutation with the given states.
pub fn necklace_to_affine(j: &Necklace) -> Result<AffinePermutation> {
    let n = j.n;
    let window = (1..=n)
        .map(|i| {
            let cur = j.state(i);
            let next = j.state(i % n + 1);
            let throw = if cur.contains(1) {
                let kept: Vec<usize> = cur.elements().iter().filter(|&&x| x != 1).map(|x| x - 1).collect();
                *next.elements().iter().find(|x| !kept.contains(x)).expect("validated necklace")
            } else {
                0
            };
            i as i64 + throw as i64
        })
        .collect();
    AffinePermutation::new(window)
}

/// One period of throws `t_i = f(i) − i`, starting at position 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Siteswap {
    throws: Vec<i64>,
}

impl Siteswap {
    pub fn new(throws: Vec<i64>) -> Result<Self> {
        let n = throws.len() as i64;
        if n == 0 {
            return Err(Error::Parse("empty siteswap".into()));
        }
        if throws.iter().any(|&t| t < 0 || t > n) {
            return Err(Error::Parse(format!("throws must lie in [0,{n}]: {throws:?}")));
        }
        let mut seen = vec![false; n as usize];
        for (i, &t) in throws.iter().enumerate() {
            let r = (i as i64 + t).rem_euclid(n) as usize;
            if seen[r] {
                return Err(Error::Parse(format!("two throws land together in {throws:?}")));
            }
            seen[r] = true;
        }
        Ok(Siteswap { throws })
    }

    pub fn throws(&self) -> &[i64] {
        &self.throws
    }

    /// Lexicographically least rotation, for comparing patterns up to time shift.
    pub fn min_rotation(&self) -> Siteswap {
        let n = self.throws.len();
        let best = (0..n)
            .map(|r| {
                let mut v = self.throws.clone();
                v.rotate_left(r);
                v
            })
            .min()
            .unwrap();
        Siteswap { throws: best }
    }
}

impl fmt::Display for Siteswap {
    /// Digits, with throws of ten and more written `A`, `B`, ….
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &t in &self.throws {
            let c = if t < 10 { (b'0' + t as u8) as char } else { (b'A' + (t - 10) as u8) as char };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses the compact form `"31222"` (letters for throws of ten and more).
pub fn parse_siteswap(s: &str) -> Result<Siteswap> {
    let throws = s
        .trim()
        .chars()
        .map(|c| match c {
            '0'..='9' => Ok(c as i64 - '0' as i64),
            'A'..='Z' => Ok(c as i64 - 'A' as i64 + 10),
            'a'..='z' => Ok(c as i64 - 'a' as i64 + 10),
            _ => Err(Error::Parse(format!("bad throw {c:?}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Siteswap::new(throws)
}

pub fn siteswap_of(f: &AffinePermutation) -> Result<Siteswap> {
    f.require_bounded()?;
    Ok(Siteswap { throws: f.window().iter().enumerate().map(|(i, &v)| v - i as i64 - 1).collect() })
}

pub fn from_siteswap(t: &Siteswap, k: i64) -> Result<AffinePermutation> {
    let n = t.throws.len() as i64;
    let total: i64 = t.throws.iter().sum();
    if total != k * n {
        return Err(Error::Parse(format!("average throw {}/{} differs from {k}", total, n)));
    }
    AffinePermutation::new(t.throws.iter().enumerate().map(|(i, &x)| i as i64 + 1 + x).collect())
}
