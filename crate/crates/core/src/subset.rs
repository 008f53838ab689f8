//! k-subsets of `[n]` with the componentwise (Gale) order.

use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// A subset of `[n]` stored as a sorted list. The derived `Ord` is lexicographic,
/// which is used only for canonical ordering; the mathematical order is [`Subset::leq`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Subset(Vec<usize>);

impl Subset {
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = elems.into_iter().collect();
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSubset(format!("repeated element in {v:?}")));
        }
        if v.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::InvalidSubset(format!("{v:?} not contained in [1,{n}]")));
        }
        Ok(Subset(v))
    }

    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Subset(v)
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// Componentwise order on sorted lists; both sides must have equal size.
    pub fn leq(&self, other: &Subset) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Number of elements lying in `[1, b]`.
    pub fn count_up_to(&self, b: usize) -> usize {
        self.0.partition_point(|&x| x <= b)
    }

    /// The image under `i ↦ i - s (mod n)`, with representatives in `[1,n]`.
    pub fn rotate_down(&self, n: usize, s: usize) -> Subset {
        let s = s % n;
        let mut v: Vec<usize> = self.0.iter().map(|&i| (i + n - 1 - s) % n + 1).collect();
        v.sort_unstable();
        Subset(v)
    }

    /// The image under `i ↦ i + s (mod n)`.
    pub fn rotate_up(&self, n: usize, s: usize) -> Subset {
        self.rotate_down(n, n - s % n)
    }

    pub fn complement(&self, n: usize) -> Subset {
        Subset((1..=n).filter(|x| !self.contains(*x)).collect())
    }

    pub fn intersection_size(&self, other: &Subset) -> usize {
        self.0.iter().filter(|x| other.contains(**x)).count()
    }
}

impl fmt::Display for Subset {
    /// Digit-string form (`14`) when every element is a single digit, else `{1,10}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&x| x <= 9) {
            write!(f, "{}", self.0.iter().join(""))
        } else {
            write!(f, "{{{}}}", self.0.iter().join(","))
        }
    }
}

/// All k-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Subset> {
    (1..=n).combinations(k).map(Subset).collect()
}

/// Parses `"1,4"`, `"{1,4}"` or the digit string `"14"` (the latter only when `n ≤ 9`).
pub fn parse_subset(n: usize, s: &str) -> Result<Subset> {
    let t = s.trim().trim_start_matches(['{', '[', '(']).trim_end_matches(['}', ']', ')']);
    let elems: Vec<usize> = if t.contains(',') || t.contains(' ') {
        t.split([',', ' '])
            .filter(|p| !p.is_empty())
            .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<_>>()?
    } else if t.is_empty() {
        Vec::new()
    } else if n <= 9 {
        t.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
            .collect::<Result<_>>()?
    } else {
        vec![t.parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}")))?]
    };
    Subset::new(n, elems)
}
