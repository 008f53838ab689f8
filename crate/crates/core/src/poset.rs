//! The graded poset `Bound(k,n)` under affine Bruhat order: enumeration,
//! covers, Möbius function, the Eulerian check and rotation orbits.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;

use serde::Serialize;

use crate::affine::{bounded_covers_above, AffinePermutation};
use crate::error::{Error, Result};
use crate::juggling::{necklace_to_affine, Necklace};
use crate::subset::{k_subsets, Subset};

/// Largest `n` accepted by [`build_bound_poset`].
pub const MAX_POSET_N: usize = 8;

#[derive(Clone, Debug)]
pub struct BoundPoset {
    k: usize,
    n: usize,
    elements: Vec<AffinePermutation>,
    index: HashMap<AffinePermutation, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    rank: Vec<usize>,
    /// Principal upsets as bitsets.
    above: Vec<Vec<u64>>,
}

/// States that may follow `s`: drop a ball landing now, shift, and rethrow it anywhere free.
fn followers(n: usize, s: &Subset) -> Vec<Subset> {
    let kept: Vec<usize> = s.elements().iter().filter(|&&x| x != 1).map(|x| x - 1).collect();
    if !s.contains(1) {
        return vec![Subset::from_sorted(kept)];
    }
    (1..=n)
        .filter(|x| !kept.contains(x))
        .map(|x| {
            let mut v = kept.clone();
            v.push(x);
            v.sort_unstable();
            Subset::from_sorted(v)
        })
        .collect()
}

/// All necklaces of type `(k,n)`, by depth-first extension of state chains.
pub fn all_necklaces(k: usize, n: usize) -> Vec<Necklace> {
    fn extend(n: usize, chain: &mut Vec<Subset>, out: &mut Vec<Necklace>) {
        let last = chain.last().expect("nonempty chain").clone();
        let next = followers(n, &last);
        if chain.len() == n {
            if next.contains(&chain[0]) {
                out.push(Necklace::new(n, chain.clone()).expect("closed follow chain"));
            }
            return;
        }
        for s in next {
            chain.push(s);
            extend(n, chain, out);
            chain.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    for start in k_subsets(n, k) {
        extend(n, &mut vec![start], &mut out);
    }
    out
}

pub fn build_bound_poset(k: usize, n: usize) -> Result<BoundPoset> {
    build_bound_poset_with_cap(k, n, MAX_POSET_N)
}

pub fn build_bound_poset_with_cap(k: usize, n: usize, max_n: usize) -> Result<BoundPoset> {
    if n > max_n {
        return Err(Error::CapExceeded(format!("n = {n} exceeds the poset cap {max_n}")));
    }
    if k > n || n == 0 {
        return Err(Error::SizeMismatch(format!("need 0 ≤ k ≤ n and n ≥ 1, got k={k}, n={n}")));
    }
    let mut elements: Vec<AffinePermutation> =
        all_necklaces(k, n).iter().map(necklace_to_affine).collect::<Result<_>>()?;
    elements.sort_by(|a, b| a.length().cmp(&b.length()).then_with(|| a.cmp(b)));
    let index: HashMap<AffinePermutation, usize> = elements.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    if index.len() != elements.len() {
        return Err(Error::Invariant("necklace enumeration produced a repeat".into()));
    }
    let rank: Vec<usize> = elements.iter().map(|f| f.length()).collect();
    let mut up = vec![Vec::new(); elements.len()];
    let mut down = vec![Vec::new(); elements.len()];
    for (i, f) in elements.iter().enumerate() {
        for (g, _) in bounded_covers_above(f)? {
            let j = *index.get(&g).ok_or_else(|| Error::Invariant(format!("cover {g} of {f} not enumerated")))?;
            up[i].push(j);
            down[j].push(i);
        }
    }
    let words = elements.len().div_ceil(64);
    let mut above = vec![vec![0u64; words]; elements.len()];
    for i in (0..elements.len()).rev() {
        let mut bits = vec![0u64; words];
        bits[i / 64] |= 1 << (i % 64);
        for &j in &up[i] {
            for (b, a) in bits.iter_mut().zip(&above[j]) {
                *b |= a;
            }
        }
        above[i] = bits;
    }
    Ok(BoundPoset { k, n, elements, index, up, down, rank, above })
}

impl BoundPoset {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements ordered by length, then window.
    pub fn elements(&self) -> &[AffinePermutation] {
        &self.elements
    }

    pub fn index_of(&self, f: &AffinePermutation) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn up_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn down_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x][y / 64] >> (y % 64) & 1 == 1
    }

    /// Indices of `{y : y ≥ x}`, in increasing rank.
    pub fn upset(&self, x: usize) -> Vec<usize> {
        (x..self.len()).filter(|&y| self.leq(x, y)).collect()
    }

    /// Number of elements of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let top = self.rank.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0; top + 1];
        for &r in &self.rank {
            sizes[r] += 1;
        }
        sizes
    }

    /// `μ(x, y)` for all `y ≥ x`, computed upward in rank order.
    pub fn moebius_row(&self, x: usize) -> HashMap<usize, i64> {
        let ups = self.upset(x);
        let mut mu: HashMap<usize, i64> = HashMap::with_capacity(ups.len());
        for &y in &ups {
            let v = if y == x { 1 } else { -ups.iter().filter(|&&z| z != y && self.leq(z, y)).map(|z| mu[z]).sum::<i64>() };
            mu.insert(y, v);
        }
        mu
    }

    pub fn moebius(&self, x: usize, y: usize) -> Result<i64> {
        if x >= self.len() || y >= self.len() {
            return Err(Error::SizeMismatch(format!("index out of range for a poset of size {}", self.len())));
        }
        if !self.leq(x, y) {
            return Err(Error::Invariant(format!("{} ≰ {}", self.elements[x], self.elements[y])));
        }
        Ok(self.moebius_row(x)[&y])
    }

    /// `μ(x,y) = (−1)^{ℓ(y)−ℓ(x)}` on every interval.
    pub fn verify_eulerian(&self) -> bool {
        (0..self.len()).all(|x| {
            self.moebius_row(x).iter().all(|(&y, &m)| m == if (self.rank[y] - self.rank[x]).is_multiple_of(2) { 1 } else { -1 })
        })
    }

    /// Orbits of `f ↦ f.rotate()`, each sorted, listed by smallest member.
    pub fn rotation_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut orbits = Vec::new();
        for x in 0..self.len() {
            if seen[x] {
                continue;
            }
            let mut orbit = BTreeSet::new();
            let mut f = self.elements[x].clone();
            while let Some(i) = self.index.get(&f).copied().filter(|i| orbit.insert(*i)) {
                seen[i] = true;
                f = f.rotate();
            }
            orbits.push(orbit.into_iter().collect());
        }
        orbits
    }

    pub fn to_export(&self) -> PosetExport {
        PosetExport {
            k: self.k,
            n: self.n,
            elements: self.elements.iter().map(|f| f.to_string()).collect(),
            lengths: self.rank.clone(),
            covers: (0..self.len()).flat_map(|x| self.up[x].iter().map(move |&y| (x, y))).collect(),
        }
    }

    /// Hasse diagram in Graphviz DOT, edges pointing up.
    pub fn to_dot(&self) -> String {
        let mut s = format!("digraph bound_{}_{} {{\n  rankdir=BT;\n", self.k, self.n);
        for (i, f) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{f}\"];");
        }
        for x in 0..self.len() {
            for &y in &self.up[x] {
                let _ = writeln!(s, "  n{x} -> n{y};");
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Cover relations as an edge list over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PosetExport {
    pub k: usize,
    pub n: usize,
    pub elements: Vec<String>,
    pub lengths: Vec<usize>,
    pub covers: Vec<(usize, usize)>,
}
