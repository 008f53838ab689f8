//! Cyclic rank matrices: the periodic array `r_{ij}` of a bounded affine permutation.

use serde::Serialize;

use crate::affine::{rank_function, AffinePermutation};
use crate::error::{Error, Result};

/// Stores `r_{i,j}` for `i ∈ [1,n]`, `j ∈ [i, i+n]`; everything else is forced:
/// `r_{ij} = j − i + 1` for `j < i`, `r_{ij} = k` for `j > i + n`, and
/// `r_{i+n,j+n} = r_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CyclicRankMatrix {
    n: usize,
    k: usize,
    rows: Vec<Vec<i64>>,
}

impl CyclicRankMatrix {
    /// Builds and validates from rows `r_{i, i..i+n}`.
    pub fn from_rows(n: usize, k: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.len() != n || rows.iter().any(|r| r.len() != n + 1) {
            return Err(Error::SizeMismatch(format!("expected {n} rows of length {}", n + 1)));
        }
        let r = CyclicRankMatrix { n, k, rows };
        r.validate()?;
        Ok(r)
    }

    pub(crate) fn from_fn(n: usize, k: usize, mut f: impl FnMut(i64, i64) -> i64) -> Self {
        let rows = (1..=n as i64).map(|i| (i..=i + n as i64).map(|j| f(i, j)).collect()).collect();
        CyclicRankMatrix { n, k, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `r_{ij}` for arbitrary integers.
    pub fn get(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        let q = (i - 1).div_euclid(n);
        let (i, j) = (i - q * n, j - q * n);
        if j < i {
            j - i + 1
        } else if j > i + n {
            self.k as i64
        } else {
            self.rows[(i - 1) as usize][(j - i) as usize]
        }
    }

    /// Checks C1′–C4 (C5 holds by construction).
    pub fn validate(&self) -> Result<()> {
        let n = self.n as i64;
        let k = self.k as i64;
        for i in 1..=n {
            if self.get(i, i) != 0 && self.get(i, i) != 1 {
                return Err(Error::RankMatrix { condition: "C1'", i, j: i });
            }
            for j in [i + n - 1, i + n] {
                if self.get(i, j) != k {
                    return Err(Error::RankMatrix { condition: "C2'", i, j });
                }
            }
        }
        for i in 1..=n {
            for j in i..=i + n + 1 {
                let d1 = self.get(i, j) - self.get(i, j - 1);
                let d2 = self.get(i, j) - self.get(i + 1, j);
                if !(0..=1).contains(&d1) || !(0..=1).contains(&d2) {
                    return Err(Error::RankMatrix { condition: "C3", i, j });
                }
            }
        }
        for i in 1..=n {
            for j in i..=i + n + 1 {
                let c = self.get(i + 1, j - 1);
                if self.get(i + 1, j) == c && self.get(i, j - 1) == c && self.get(i, j) != c {
                    return Err(Error::RankMatrix { condition: "C4", i, j });
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// `(i, j)` is special when `r_{ij} = r_{(i+1)j} = r_{i(j−1)} > r_{(i+1)(j−1)}`.
    pub fn is_special(&self, i: i64, j: i64) -> bool {
        let r = self.get(i, j);
        r == self.get(i + 1, j) && r == self.get(i, j - 1) && r > self.get(i + 1, j - 1)
    }

    /// Entrywise `self ≥ other`, i.e. the permutation of `self` is below that of `other`.
    pub fn leq(&self, other: &CyclicRankMatrix) -> Result<bool> {
        if self.n != other.n || self.k != other.k {
            return Err(Error::SizeMismatch("rank matrices of different type".into()));
        }
        Ok(self.rows.iter().flatten().zip(other.rows.iter().flatten()).all(|(a, b)| a >= b))
    }
}

pub fn crm_from_affine(f: &AffinePermutation) -> Result<CyclicRankMatrix> {
    f.require_bounded()?;
    let k = f.ball_number() as usize;
    Ok(CyclicRankMatrix::from_fn(f.n(), k, |i, j| rank_function(f, i, j)))
}

/// Reads `f` off the special entries, one per row.
pub fn crm_to_affine(r: &CyclicRankMatrix) -> Result<AffinePermutation> {
    r.validate()?;
    let n = r.n as i64;
    let mut window = Vec::with_capacity(r.n);
    for i in 1..=n {
        let specials: Vec<i64> = (i..=i + n).filter(|&j| r.is_special(i, j)).collect();
        match specials.as_slice() {
            [j] => window.push(*j),
            _ => return Err(Error::RankMatrix { condition: "unique special entry", i, j: i }),
        }
    }
    let f = AffinePermutation::new(window).map_err(|e| Error::Invariant(e.to_string()))?;
    if !f.is_bounded() || f.ball_number() != r.k as i64 {
        return Err(Error::Invariant(format!("special entries give {f}")));
    }
    Ok(f)
}

pub fn crm_validate(r: &CyclicRankMatrix) -> bool {
    r.is_valid()
}

/// Entrywise `r ≥ s`.
pub fn crm_leq(r: &CyclicRankMatrix, s: &CyclicRankMatrix) -> Result<bool> {
    r.leq(s)
}
