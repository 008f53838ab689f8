use std::collections::HashMap;

use itertools::Itertools;

use super::partition::Partition;
use super::symfunc::{Basis, SymFunc};
use crate::affine::{to_zero_coset, AffinePermutation};
use crate::error::{Error, Result};

/// A cyclically decreasing element, stored as its reduced word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicallyDecreasing {
    n: usize,
    word: Vec<usize>,
}

impl CyclicallyDecreasing {
    /// The element whose reduced words use each `s_i`, `i ∈ support`, once with
    /// `s_{i+1}` before `s_i`. The support must be a proper subset of `Z/n`.
    pub fn from_support(n: usize, support: &[usize]) -> Result<Self> {
        let gap = (0..n).find(|g| !support.contains(g)).ok_or_else(|| {
            Error::InvalidSubset(format!("the support must miss some index mod {n}"))
        })?;
        if support.iter().any(|&i| i >= n) || support.iter().duplicates().next().is_some() {
            return Err(Error::InvalidSubset(format!("{support:?} is not a subset of Z/{n}")));
        }
        let word = (1..n).map(|t| (gap + n - t) % n).filter(|i| support.contains(i)).collect();
        Ok(CyclicallyDecreasing { n, word })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// As an element of `S̃_n^0`.
    pub fn to_affine(&self) -> AffinePermutation {
        self.word.iter().fold(AffinePermutation::identity(self.n), |x, &i| x.mul_simple_right(i))
    }

    /// `c⁻¹ · w`.
    fn strip_from(&self, w: &AffinePermutation) -> AffinePermutation {
        self.word.iter().fold(w.clone(), |x, &i| x.mul_simple_left(i))
    }
}

/// All cyclically decreasing elements of length `m`, one per `m`-subset of `{s_0, …, s_{n−1}}`.
pub fn cyclically_decreasing_elements(n: usize, m: usize) -> Result<Vec<CyclicallyDecreasing>> {
    if m >= n {
        return Err(Error::InvalidSubset(format!("length {m} needs m < n = {n}")));
    }
    (0..n).combinations(m).map(|s| CyclicallyDecreasing::from_support(n, &s)).collect()
}

struct Factorizer {
    n: usize,
    by_length: Vec<Vec<CyclicallyDecreasing>>,
}

impl Factorizer {
    fn new(n: usize) -> Self {
        let by_length = (0..n).map(|m| cyclically_decreasing_elements(n, m).expect("m < n")).collect();
        Factorizer { n, by_length }
    }

    /// Number of length-additive factorizations `w = c₁ ⋯ c_r` with `ℓ(c_i) = parts[i]`.
    fn count(&self, w: &AffinePermutation, parts: &[usize]) -> u64 {
        let mut memo = HashMap::new();
        self.count_memo(w, w.length(), parts, &mut memo)
    }

    fn count_memo(
        &self,
        w: &AffinePermutation,
        len: usize,
        parts: &[usize],
        memo: &mut HashMap<(AffinePermutation, usize), u64>,
    ) -> u64 {
        let Some((&a, rest)) = parts.split_first() else {
            return u64::from(len == 0);
        };
        if a >= self.n || a > len {
            return 0;
        }
        let key = (w.clone(), rest.len());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for c in &self.by_length[a] {
            let v = c.strip_from(w);
            if v.length() + a == len {
                total += self.count_memo(&v, len - a, rest, memo);
            }
        }
        memo.insert(key, total);
        total
    }
}

/// Coefficient of `x^α` in the affine Stanley function of `f`, for any composition `α`.
pub fn affine_stanley_coefficient(f: &AffinePermutation, alpha: &[usize]) -> u64 {
    let w = to_zero_coset(f);
    Factorizer::new(f.n()).count(&w, alpha)
}

/// `F̃_f` in the monomial basis of `Λ_{max_vars}`; `f` of any ball number is moved to
/// `S̃_n^0` by `i ↦ f(i − k)`.
pub fn affine_stanley(f: &AffinePermutation, max_vars: usize) -> SymFunc {
    let w = to_zero_coset(f);
    let len = w.length();
    let fact = Factorizer::new(f.n());
    let terms = Partition::all(len, f.n().saturating_sub(1), max_vars)
        .into_iter()
        .map(|lam| {
            let c = fact.count(&w, lam.parts());
            (lam, c as i64)
        });
    SymFunc::from_terms(Basis::Monomial, Some(max_vars), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::graph_schubert_perm;
    use crate::perm::Permutation;

    fn a(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec())
    }

    /// All reduced words, by brute force over descents.
    fn reduced_words(w: &AffinePermutation) -> Vec<Vec<usize>> {
        if w.length() == 0 {
            return vec![vec![]];
        }
        let n = w.n();
        let mut out = Vec::new();
        for i in 0..n {
            let v = w.mul_simple_right(i);
            if v.length() + 1 == w.length() {
                for mut word in reduced_words(&v) {
                    word.push(i);
                    out.push(word);
                }
            }
        }
        out
    }

    #[test]
    fn cyclically_decreasing_counts() {
        assert_eq!(cyclically_decreasing_elements(4, 0).unwrap().len(), 1);
        assert_eq!(cyclically_decreasing_elements(4, 1).unwrap().len(), 4);
        let two = cyclically_decreasing_elements(4, 2).unwrap();
        assert_eq!(two.len(), 6);
        let distinct: std::collections::HashSet<_> = two.iter().map(|c| c.to_affine()).collect();
        assert_eq!(distinct.len(), 6);
        assert!(two.iter().all(|c| c.to_affine().length() == 2));
        assert!(cyclically_decreasing_elements(4, 4).is_err());
        // s_1 before s_0, s_0 before s_3.
        assert_eq!(CyclicallyDecreasing::from_support(4, &[0, 1, 3]).unwrap().word(), &[1, 0, 3]);
    }

    #[test]
    fn example_function() {
        let f = a(&[5, 2, 7, 4]);
        assert_eq!(to_zero_coset(&f), a(&[3, 0, 5, 2]));
        let words = reduced_words(&a(&[3, 0, 5, 2]));
        assert_eq!(words.len(), 4);
        let g = affine_stanley(&f, 4);
        assert_eq!(g.to_string(), "m[2,2] + 2*m[2,1,1] + 4*m[1,1,1,1]");
        assert_eq!(g.to_schur().unwrap().to_string(), "s[2,2] + s[2,1,1] - s[1,1,1,1]");
        assert_eq!(affine_stanley(&a(&[3, 4, 5, 6]), 2).to_string(), "1");
        let w0 = graph_schubert_perm(&Permutation::longest(2));
        assert_eq!(affine_stanley(&w0, 3).to_schur().unwrap().to_string(), "s[1]");
    }

    #[test]
    fn symmetric_in_compositions() {
        for f in [a(&[5, 2, 7, 4]), a(&[4, 3, 5, 8, 6, 7]), a(&[2, 3, 5, 8]), a(&[4, 3, 5, 6, 7])] {
            let len = to_zero_coset(&f).length();
            for lam in Partition::all(len, len, 4) {
                let mut parts = lam.parts().to_vec();
                parts.resize(4, 0);
                let base = affine_stanley_coefficient(&f, &parts);
                for perm in parts.iter().copied().permutations(4) {
                    assert_eq!(affine_stanley_coefficient(&f, &perm), base, "{f} {perm:?}");
                }
            }
        }
    }

    #[test]
    fn reduced_word_count_is_top_coefficient() {
        for f in [a(&[4, 3, 5, 8, 6, 7]), a(&[2, 3, 5, 8]), a(&[5, 6, 3, 4]), a(&[3, 2, 4])] {
            let w = to_zero_coset(&f);
            let len = w.length();
            let g = affine_stanley(&f, len);
            assert_eq!(g.coeff(&p(&vec![1; len])) as usize, reduced_words(&w).len(), "{f}");
            assert!(g.terms().keys().all(|l| l.size() == len));
        }
    }
}
