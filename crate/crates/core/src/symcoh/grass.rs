use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::partition::Partition;
use super::stanley::affine_stanley;
use super::symfunc::{write_terms, SymFunc};
use crate::affine::AffinePermutation;
use crate::error::{Error, Result};

/// An integer combination of Schubert classes `σ_λ`, `λ ∈ Par(k,n)`, in `H*(Gr(k,n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrassClass {
    k: usize,
    n: usize,
    terms: BTreeMap<Partition, i64>,
}

impl Serialize for GrassClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a [usize],
            coeff: i64,
        }
        #[derive(Serialize)]
        struct Repr<'a> {
            k: usize,
            n: usize,
            terms: Vec<Term<'a>>,
        }
        let terms = self.terms.iter().rev().map(|(p, &c)| Term { partition: p.parts(), coeff: c }).collect();
        Repr { k: self.k, n: self.n, terms }.serialize(s)
    }
}

impl GrassClass {
    pub fn zero(k: usize, n: usize) -> Self {
        GrassClass { k, n, terms: BTreeMap::new() }
    }

    /// The fundamental class `σ_∅`.
    pub fn fundamental(k: usize, n: usize) -> Self {
        GrassClass::schubert(k, n, Partition::empty()).expect("∅ fits")
    }

    /// The class of a point, `σ_{(n−k)^k}`.
    pub fn point(k: usize, n: usize) -> Self {
        GrassClass::schubert(k, n, Partition::new(vec![n - k; k])).expect("rectangle fits")
    }

    pub fn schubert(k: usize, n: usize, lam: Partition) -> Result<Self> {
        if !lam.fits(k, n - k) {
            return Err(Error::SizeMismatch(format!("{lam} is not in Par({k},{n})")));
        }
        let mut c = GrassClass::zero(k, n);
        c.add(lam, 1);
        Ok(c)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn coeff(&self, lam: &Partition) -> i64 {
        self.terms.get(lam).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms outside `Par(k,n)` are dropped.
    pub fn add(&mut self, lam: Partition, c: i64) {
        if c == 0 || !lam.fits(self.k, self.n - self.k) {
            return;
        }
        let e = self.terms.entry(lam.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&lam);
        }
    }

    pub fn add_class(&mut self, other: &GrassClass) {
        for (p, &c) in &other.terms {
            self.add(p.clone(), c);
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }
}

impl fmt::Display for GrassClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(p, &c)| (p, c)), |p| format!("s{p}"))
    }
}

/// `ψ(s_λ) = σ_λ` for `λ ∈ Par(k,n)` and `0` otherwise.
pub fn psi(f: &SymFunc, k: usize, n: usize) -> Result<GrassClass> {
    if k > n {
        return Err(Error::SizeMismatch(format!("k = {k} exceeds n = {n}")));
    }
    let s = f.to_schur()?;
    let mut c = GrassClass::zero(k, n);
    for (p, &v) in s.terms() {
        c.add(p.clone(), v);
    }
    Ok(c)
}

/// `[Π_f] = ψ(F̃_f)`, computed in `Λ_k` (Schur functions with more than `k` rows die under `ψ`).
pub fn positroid_class(f: &AffinePermutation) -> Result<GrassClass> {
    f.require_bounded()?;
    let k = f.ball_number() as usize;
    psi(&affine_stanley(f, k), k, f.n())
}

/// Multiplication by `σ_1`: add one box inside the rectangle in every possible way.
pub fn pieri_s1(c: &GrassClass) -> GrassClass {
    let mut out = GrassClass::zero(c.k, c.n);
    for (lam, &v) in &c.terms {
        for (row, _) in lam.addable() {
            out.add(lam.with_box(row), v);
        }
    }
    out
}
