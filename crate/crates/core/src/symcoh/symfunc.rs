use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::partition::Partition;
use crate::error::{Error, Result};

/// Largest degree accepted by basis changes.
pub const MAX_SCHUR_DEGREE: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
    Homogeneous,
}

impl Basis {
    fn letter(self) -> char {
        match self {
            Basis::Monomial => 'm',
            Basis::Schur => 's',
            Basis::Homogeneous => 'h',
        }
    }
}

/// A symmetric function with integer coefficients in one basis.
///
/// With `nvars = Some(r)` it lives in `Λ_r`, the image of `Sym` in `r` variables,
/// where `m_λ` and `s_λ` vanish for `ℓ(λ) > r`; such terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    nvars: Option<usize>,
    terms: BTreeMap<Partition, i64>,
}

#[derive(Serialize)]
struct Term<'a> {
    partition: &'a [usize],
    coeff: i64,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            basis: Basis,
            #[serde(skip_serializing_if = "Option::is_none")]
            nvars: Option<usize>,
            terms: Vec<Term<'a>>,
        }
        let terms = self.terms.iter().rev().map(|(p, &c)| Term { partition: p.parts(), coeff: c }).collect();
        Repr { basis: self.basis, nvars: self.nvars, terms }.serialize(s)
    }
}

impl SymFunc {
    pub fn zero(basis: Basis, nvars: Option<usize>) -> Self {
        SymFunc { basis, nvars, terms: BTreeMap::new() }
    }

    pub fn from_terms(basis: Basis, nvars: Option<usize>, terms: impl IntoIterator<Item = (Partition, i64)>) -> Self {
        let mut f = SymFunc::zero(basis, nvars);
        for (p, c) in terms {
            f.add_term(p, c);
        }
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn nvars(&self) -> Option<usize> {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn coeff(&self, p: &Partition) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn vanishes(&self, p: &Partition) -> bool {
        self.basis != Basis::Homogeneous && self.nvars.is_some_and(|r| p.len() > r)
    }

    pub fn add_term(&mut self, p: Partition, c: i64) {
        if c == 0 || self.vanishes(&p) {
            return;
        }
        match self.terms.entry(p) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    fn max_degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    fn check_cap(&self) -> Result<()> {
        let d = self.max_degree();
        if d > MAX_SCHUR_DEGREE {
            return Err(Error::CapExceeded(format!("degree {d} exceeds {MAX_SCHUR_DEGREE}")));
        }
        Ok(())
    }

    /// Expansion in the monomial basis.
    pub fn to_monomial(&self) -> Result<SymFunc> {
        self.check_cap()?;
        let mut kostka = Kostka::default();
        let mut out = SymFunc::zero(Basis::Monomial, self.nvars);
        let max_len = self.nvars.unwrap_or(usize::MAX);
        for (lam, &c) in &self.terms {
            match self.basis {
                Basis::Monomial => out.add_term(lam.clone(), c),
                Basis::Schur => {
                    for mu in Partition::all(lam.size(), lam.size(), max_len) {
                        out.add_term(mu.clone(), c * kostka.get(lam, &mu));
                    }
                }
                Basis::Homogeneous => {
                    // h_λ = Σ_ν K_{νλ} s_ν, then expand each s_ν.
                    for nu in Partition::all(lam.size(), lam.size(), usize::MAX) {
                        let knl = kostka.get(&nu, lam);
                        if knl == 0 || nu.len() > max_len {
                            continue;
                        }
                        for mu in Partition::all(nu.size(), nu.size(), max_len) {
                            out.add_term(mu.clone(), c * knl * kostka.get(&nu, &mu));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Expansion in the Schur basis, by peeling off the lexicographically largest
    /// monomial term.
    pub fn to_schur(&self) -> Result<SymFunc> {
        self.check_cap()?;
        if self.basis == Basis::Schur {
            return Ok(self.clone());
        }
        let mut rest = self.to_monomial()?;
        let mut kostka = Kostka::default();
        let mut out = SymFunc::zero(Basis::Schur, self.nvars);
        let max_len = self.nvars.unwrap_or(usize::MAX);
        while let Some((lam, c)) = rest.terms.iter().next_back().map(|(p, &c)| (p.clone(), c)) {
            out.add_term(lam.clone(), c);
            for mu in Partition::all(lam.size(), lam.size(), max_len) {
                rest.add_term(mu.clone(), -c * kostka.get(&lam, &mu));
            }
        }
        Ok(out)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = self.basis.letter();
        write_terms(f, self.terms.iter().rev().map(|(p, &c)| (p, c)), |p| format!("{letter}{p}"))
    }
}

/// Writes `a + 2*b - c`, with the empty partition shown as `1` and zero as `0`.
pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a Partition, i64)>,
    name: impl Fn(&Partition) -> String,
) -> fmt::Result {
    let mut first = true;
    for (p, c) in terms {
        let sign = if c < 0 { "-" } else { "+" };
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let a = c.abs();
        match (p.is_empty(), a) {
            (true, _) => write!(f, "{a}")?,
            (false, 1) => write!(f, "{}", name(p))?,
            (false, _) => write!(f, "{a}*{}", name(p))?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Memoized Kostka numbers `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`.
#[derive(Default)]
pub struct Kostka {
    memo: HashMap<(Partition, Partition), i64>,
}

impl Kostka {
    pub fn get(&mut self, lam: &Partition, mu: &Partition) -> i64 {
        if lam.size() != mu.size() {
            return 0;
        }
        if mu.is_empty() {
            return 1;
        }
        let key = (lam.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        // The largest letter fills a horizontal strip of size μ_last.
        let last = *mu.parts().last().expect("nonempty");
        let mu_rest = Partition::new(mu.parts()[..mu.len() - 1].to_vec());
        let mut total = 0;
        for inner in horizontal_strips_removed(lam, last) {
            total += self.get(&inner, &mu_rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// All `ν ⊆ λ` with `λ/ν` a horizontal strip of size `m`.
fn horizontal_strips_removed(lam: &Partition, m: usize) -> Vec<Partition> {
    fn go(lam: &Partition, row: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if row > lam.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()));
            }
            return;
        }
        // ν_row ≥ λ_{row+1} keeps the strip horizontal.
        let lo = lam.part(row + 1);
        let hi = lam.part(row);
        for v in lo..=hi {
            let taken = hi - v;
            if taken > left {
                continue;
            }
            cur.push(v);
            go(lam, row + 1, left - taken, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lam, 1, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn kostka_values() {
        let mut k = Kostka::default();
        assert_eq!(k.get(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(k.get(&p(&[3, 2]), &p(&[2, 2, 1])), 2);
        assert_eq!(k.get(&p(&[2, 2]), &p(&[2, 1, 1])), 1);
        assert_eq!(k.get(&p(&[1, 1]), &p(&[2])), 0);
        // Number of standard Young tableaux of shape (3,2,1) is 16.
        assert_eq!(k.get(&p(&[3, 2, 1]), &p(&[1; 6])), 16);
    }

    #[test]
    fn point_class_expansion() {
        let f = SymFunc::from_terms(Basis::Monomial, None, [(p(&[1, 1, 1, 1]), 4), (p(&[2, 1, 1]), 2), (p(&[2, 2]), 1)]);
        let s = f.to_schur().unwrap();
        assert_eq!(s.to_string(), "s[2,2] + s[2,1,1] - s[1,1,1,1]");
        assert_eq!(s.to_monomial().unwrap(), f);
        assert_eq!(SymFunc::from_terms(Basis::Monomial, None, [(p(&[1]), 1)]).to_schur().unwrap().to_string(), "s[1]");
    }

    #[test]
    fn round_trips() {
        for m in 0..=6 {
            for lam in Partition::all(m, m, m) {
                let s = SymFunc::from_terms(Basis::Schur, None, [(lam.clone(), 1)]);
                assert_eq!(s.to_monomial().unwrap().to_schur().unwrap(), s);
                let s3 = SymFunc::from_terms(Basis::Schur, Some(3), [(lam.clone(), 1)]);
                assert_eq!(s3.to_monomial().unwrap().to_schur().unwrap(), s3);
            }
        }
    }

    #[test]
    fn homogeneous() {
        // h_2 h_1 = s_3 + s_21
        let h = SymFunc::from_terms(Basis::Homogeneous, None, [(p(&[2, 1]), 1)]);
        assert_eq!(h.to_schur().unwrap().to_string(), "s[3] + s[2,1]");
        // In two variables h_1^3 = s_3 + 2 s_21.
        let h2 = SymFunc::from_terms(Basis::Homogeneous, Some(2), [(p(&[1, 1, 1]), 1)]);
        assert_eq!(h2.to_schur().unwrap().to_string(), "s[3] + 2*s[2,1]");
    }

    #[test]
    fn display_and_caps() {
        assert_eq!(SymFunc::zero(Basis::Schur, None).to_string(), "0");
        assert_eq!(SymFunc::from_terms(Basis::Schur, None, [(Partition::empty(), 1)]).to_string(), "1");
        assert_eq!(SymFunc::from_terms(Basis::Schur, None, [(p(&[1]), -2)]).to_string(), "-2*s[1]");
        let big = SymFunc::from_terms(Basis::Monomial, None, [(p(&[13]), 1)]);
        assert!(matches!(big.to_schur(), Err(Error::CapExceeded(_))));
        // Terms with too many parts vanish in Λ_2.
        assert!(SymFunc::from_terms(Basis::Schur, Some(2), [(p(&[1, 1, 1]), 1)]).is_zero());
    }
}
