//! Matroids on `[n]` given by bases, Grassmann necklaces of matroids, positroids
//! and positroid envelopes.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::Serialize;

use crate::affine::AffinePermutation;
use crate::crm::CyclicRankMatrix;
use crate::error::{Error, Result};
use crate::juggling::{necklace_to_affine, states_of, Necklace};
use crate::perm::Permutation;
use crate::subset::{k_subsets, Subset};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Matroid {
    n: usize,
    k: usize,
    bases: BTreeSet<Subset>,
}

impl Matroid {
    /// Validates sizes and the basis exchange axiom.
    pub fn new(n: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let m = Matroid::from_bases_unchecked(n, bases)?;
        m.check_exchange()?;
        Ok(m)
    }

    fn from_bases_unchecked(n: usize, bases: impl IntoIterator<Item = Subset>) -> Result<Self> {
        let bases: BTreeSet<Subset> = bases.into_iter().collect();
        let first = bases.iter().next().ok_or_else(|| Error::NotMatroid("no bases".into()))?;
        let k = first.len();
        if let Some(b) = bases.iter().find(|b| b.len() != k || b.elements().iter().any(|&x| x > n)) {
            return Err(Error::NotMatroid(format!("{b} is not a {k}-subset of [1,{n}]")));
        }
        Ok(Matroid { n, k, bases })
    }

    fn check_exchange(&self) -> Result<()> {
        for b1 in &self.bases {
            for b2 in &self.bases {
                for &x in b1.elements().iter().filter(|&&x| !b2.contains(x)) {
                    let ok = b2.elements().iter().filter(|&&y| !b1.contains(y)).any(|&y| {
                        let c = b1.elements().iter().copied().filter(|&e| e != x).chain([y]);
                        self.bases.contains(&Subset::new(self.n, c).unwrap())
                    });
                    if !ok {
                        return Err(Error::NotMatroid(format!("exchange fails for {b1}, {b2} at {x}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn uniform(n: usize, k: usize) -> Self {
        Matroid { n, k, bases: k_subsets(n, k).into_iter().collect() }
    }

    /// The Schubert matroid `{J : J ≥ I}`.
    pub fn schubert(n: usize, i: &Subset) -> Self {
        Matroid { n, k: i.len(), bases: k_subsets(n, i.len()).into_iter().filter(|j| i.leq(j)).collect() }
    }

    /// The Richardson matroid `{J : I ≤ J ≤ K}`; errors when the interval is empty.
    pub fn richardson(n: usize, i: &Subset, k: &Subset) -> Result<Self> {
        let bases: Vec<Subset> = k_subsets(n, i.len()).into_iter().filter(|j| i.leq(j) && j.leq(k)).collect();
        Matroid::from_bases_unchecked(n, bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bases(&self) -> &BTreeSet<Subset> {
        &self.bases
    }

    pub fn is_basis(&self, s: &Subset) -> bool {
        self.bases.contains(s)
    }

    /// `max |B ∩ S|` over bases.
    pub fn rank_of(&self, s: impl Fn(usize) -> bool) -> usize {
        self.bases.iter().map(|b| b.elements().iter().filter(|&&x| s(x)).count()).max().unwrap_or(0)
    }

    /// For every permutation `w` of `[n]`, `w·M` has a minimum in the componentwise
    /// order. Factorial cost; refuses `n > 7`.
    pub fn satisfies_unique_minimum(&self) -> Result<bool> {
        if self.n > 7 {
            return Err(Error::CapExceeded(format!("unique-minimum check needs n ≤ 7, got {}", self.n)));
        }
        for w in Permutation::all(self.n) {
            let image: Vec<Subset> = self
                .bases
                .iter()
                .map(|b| Subset::new(self.n, b.elements().iter().map(|&x| w.at(x))).unwrap())
                .collect();
            let min = image.iter().min().unwrap();
            if !image.iter().all(|b| min.leq(b)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Relabels by `i ↦ i + 1 (mod n)`.
    pub fn rotate(&self) -> Matroid {
        Matroid { n: self.n, k: self.k, bases: self.bases.iter().map(|b| b.rotate_up(self.n, 1)).collect() }
    }

    /// Cyclic rank matrix `r_{ij} = rank([i, j])` over cyclic intervals.
    pub fn cyclic_rank_matrix(&self) -> CyclicRankMatrix {
        let n = self.n as i64;
        CyclicRankMatrix::from_fn(self.n, self.k, |i, j| {
            if j - i + 1 >= n {
                return self.k as i64;
            }
            let inside = |x: usize| {
                let x = x as i64;
                (x - i).rem_euclid(n) <= j - i
            };
            self.rank_of(inside) as i64
        })
    }
}

/// Bases are all k-subsets of `[n]` that `is_basis` accepts.
pub fn matroid_from_predicate(n: usize, k: usize, is_basis: impl Fn(&Subset) -> bool) -> Result<Matroid> {
    Matroid::new(n, k_subsets(n, k).into_iter().filter(|s| is_basis(s)))
}

/// `J_r` is the minimal base of `χ^{−r+1}(M)`, where `χ^{−s}(I) = I − s (mod n)`.
pub fn necklace_of_matroid(m: &Matroid) -> Result<Necklace> {
    let states = (0..m.n)
        .map(|s| {
            let rotated: Vec<Subset> = m.bases.iter().map(|b| b.rotate_down(m.n, s)).collect();
            let min = rotated.iter().min().cloned().ok_or_else(|| Error::NotMatroid("no bases".into()))?;
            if !rotated.iter().all(|b| min.leq(b)) {
                return Err(Error::NotMatroid(format!("no minimal base after rotation by {s}")));
            }
            Ok(min)
        })
        .collect::<Result<Vec<_>>>()?;
    Necklace::new(m.n, states).map_err(|e| Error::Invariant(e.to_string()))
}

/// `M_J = {I : χ^{−r+1}(I) ≥ J_r for all r}`.
pub fn positroid_from_necklace(j: &Necklace) -> Matroid {
    let n = j.n();
    let bases = k_subsets(n, j.k())
        .into_iter()
        .filter(|i| j.states().iter().enumerate().all(|(s, js)| js.leq(&i.rotate_down(n, s))))
        .collect();
    Matroid { n, k: j.k(), bases }
}

/// A positroid with its Grassmann necklace and bounded affine permutation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Positroid {
    pub matroid: Matroid,
    pub necklace: Necklace,
    pub perm: AffinePermutation,
}

impl Positroid {
    pub fn from_perm(f: &AffinePermutation) -> Result<Self> {
        let necklace = states_of(f)?;
        Ok(Positroid { matroid: positroid_from_necklace(&necklace), necklace, perm: f.clone() })
    }

    pub fn from_necklace(j: &Necklace) -> Result<Self> {
        Ok(Positroid { matroid: positroid_from_necklace(j), necklace: j.clone(), perm: necklace_to_affine(j)? })
    }
}

pub fn envelope(m: &Matroid) -> Result<Positroid> {
    Positroid::from_necklace(&necklace_of_matroid(m)?)
}

pub fn is_positroid(m: &Matroid) -> Result<bool> {
    Ok(envelope(m)?.matroid == *m)
}

/// All matroids of rank `k` on `[n]`, by brute force over subsets of `binom([n],k)`.
/// Refuses more than 20 candidate bases.
pub fn all_matroids(n: usize, k: usize) -> Result<Vec<Matroid>> {
    let subsets = k_subsets(n, k);
    if subsets.len() > 20 {
        return Err(Error::CapExceeded(format!("{} candidate bases", subsets.len())));
    }
    Ok((1u32..1 << subsets.len())
        .filter_map(|mask| {
            let bases = subsets.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| s.clone()).collect_vec();
            Matroid::new(n, bases).ok()
        })
        .collect())
}
