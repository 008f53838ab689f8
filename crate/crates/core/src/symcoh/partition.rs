use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Fits inside the `rows × cols` rectangle.
    pub fn fits(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.part(1) <= cols
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Complement inside `rows × cols`: `μ∨_r = cols − μ_{rows+1−r}`.
    pub fn complement(&self, rows: usize, cols: usize) -> Result<Partition> {
        if !self.fits(rows, cols) {
            return Err(Error::SizeMismatch(format!("{self} does not fit in {rows}×{cols}")));
        }
        Ok(Partition::new((1..=rows).map(|r| cols - self.part(rows + 1 - r)).collect()))
    }

    /// `σ(λ) = {λ_k + 1, λ_{k−1} + 2, …, λ_1 + k}`.
    pub fn to_subset(&self, k: usize, n: usize) -> Result<Subset> {
        if !self.fits(k, n - k) {
            return Err(Error::SizeMismatch(format!("{self} is not in Par({k},{n})")));
        }
        Subset::new(n, (1..=k).map(|r| self.part(k + 1 - r) + r))
    }

    /// Inverse of [`Partition::to_subset`].
    pub fn from_subset(s: &Subset) -> Partition {
        let k = s.len();
        Partition::new((1..=k).map(|r| s.elements()[k - r] - (k + 1 - r)).collect())
    }

    /// Partitions of `m` with parts `≤ max_part` and at most `max_len` parts,
    /// in decreasing lexicographic order.
    pub fn all(m: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
        fn go(m: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if m == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if max_len == 0 {
                return;
            }
            for p in (1..=max_part.min(m)).rev() {
                cur.push(p);
                go(m - p, p, max_len - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// Cells `(row, col)` where a box can be added.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (1..=self.len() + 1).filter(|&r| r == 1 || self.part(r) < self.part(r - 1)).map(|r| (r, self.part(r) + 1)).collect()
    }

    pub fn with_box(&self, row: usize) -> Partition {
        let mut v = self.0.clone();
        if row > v.len() {
            v.push(1);
        } else {
            v[row - 1] += 1;
        }
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}
