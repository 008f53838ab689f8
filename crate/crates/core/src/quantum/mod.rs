//! Quantum Schubert calculus through positroids: the affine permutation `f(I,J,d)`,
//! validity, the fixed-point set `T(I,J,d)`, toric shapes and Gromov–Witten
//! invariants read off positroid classes.

pub mod rimhook;
mod toric;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::affine::AffinePermutation;
use crate::error::{Error, Result};
use crate::subset::{k_subsets, Subset};
use crate::symcoh::{positroid_class, Partition};

pub use toric::{toric_shape, ToricShape};

/// A subset of `[n]` extended `n`-periodically to `ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Periodic {
    n: i64,
    elems: Vec<i64>,
}

impl Periodic {
    pub(crate) fn new(n: usize, s: &Subset) -> Self {
        Periodic { n: n as i64, elems: s.elements().iter().map(|&x| x as i64).collect() }
    }

    /// `s̃_a` with `s̃_{a+|S|} = s̃_a + n`.
    pub(crate) fn at(&self, a: i64) -> i64 {
        let len = self.elems.len() as i64;
        let q = (a - 1).div_euclid(len);
        self.elems[(a - 1).rem_euclid(len) as usize] + q * self.n
    }

    /// `#(S̃ ∩ [1,b])`, continued to `b < 0` so that differences count half-open intervals.
    pub(crate) fn count(&self, b: i64) -> i64 {
        let q = b.div_euclid(self.n);
        let r = b - q * self.n;
        q * self.elems.len() as i64 + self.elems.iter().filter(|&&x| x <= r).count() as i64
    }

    pub(crate) fn contains(&self, x: i64) -> bool {
        self.elems.contains(&((x - 1).rem_euclid(self.n) + 1))
    }
}

/// `(I, J, d)` with `I, J` `k`-subsets of `[n]` and `0 ≤ d ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumTriple {
    k: usize,
    n: usize,
    i: Subset,
    j: Subset,
    d: usize,
}

impl QuantumTriple {
    pub fn new(n: usize, i: Subset, j: Subset, d: usize) -> Result<Self> {
        let k = i.len();
        if j.len() != k {
            return Err(Error::InvalidTriple(format!("|I| = {k} but |J| = {}", j.len())));
        }
        if k == 0 || k >= n {
            return Err(Error::InvalidTriple(format!("need 0 < k < n, got k = {k}, n = {n}")));
        }
        if let Some(x) = i.elements().iter().chain(j.elements()).find(|&&x| x > n) {
            return Err(Error::InvalidTriple(format!("{x} is outside [1,{n}]")));
        }
        if d > k {
            return Err(Error::InvalidTriple(format!("degree {d} exceeds k = {k}")));
        }
        Ok(QuantumTriple { k, n, i, j, d })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn i(&self) -> &Subset {
        &self.i
    }

    pub fn j(&self) -> &Subset {
        &self.j
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub(crate) fn tilde_i(&self) -> Periodic {
        Periodic::new(self.n, &self.i)
    }

    pub(crate) fn tilde_j(&self) -> Periodic {
        Periodic::new(self.n, &self.j)
    }

    pub(crate) fn tilde_m(&self) -> Periodic {
        Periodic::new(self.n, &self.i.complement(self.n))
    }

    pub(crate) fn tilde_l(&self) -> Periodic {
        Periodic::new(self.n, &self.j.complement(self.n))
    }
}

/// `codim X_J = Σ (j_r − r)`; the fixed points of `X_J` are `{K ≥ J}`.
pub fn codim_lower(j: &Subset) -> usize {
    j.elements().iter().enumerate().map(|(r, &x)| x - (r + 1)).sum()
}

/// `codim X^I = k(n−k) − Σ (i_r − r)`; the fixed points of `X^I` are `{K ≤ I}`.
pub fn codim_upper(i: &Subset, n: usize) -> usize {
    i.len() * (n - i.len()) - codim_lower(i)
}

/// `w₀ I = {n + 1 − i}`, so that `[X^I] = [X_{w₀ I}]`.
pub fn opposite(i: &Subset, n: usize) -> Subset {
    Subset::new(n, i.elements().iter().map(|&x| n + 1 - x)).expect("reflection stays in [n]")
}

/// `f(ĩ_r) = j̃_{r+k−d}` and `f(m̃_r) = l̃_{r+d}`.
pub fn f_of_triple(t: &QuantumTriple) -> AffinePermutation {
    let (k, d) = (t.k as i64, t.d as i64);
    let (ti, tj, tm, tl) = (t.tilde_i(), t.tilde_j(), t.tilde_m(), t.tilde_l());
    let mut window = vec![0; t.n];
    for r in 1..=k {
        window[(ti.at(r) - 1) as usize] = tj.at(r + k - d);
    }
    for r in 1..=(t.n as i64 - k) {
        window[(tm.at(r) - 1) as usize] = tl.at(r + d);
    }
    AffinePermutation::new(window).expect("f(I,J,d) is an affine permutation")
}

/// `i + k ≤ f(i) ≤ i + n` on `I` and `m ≤ f(m) ≤ m + k` on the complement.
pub fn is_valid(t: &QuantumTriple) -> bool {
    let f = f_of_triple(t);
    let k = t.k as i64;
    let n = t.n as i64;
    (1..=n).all(|x| {
        let v = f.value(x);
        if t.i.contains(x as usize) {
            x + k <= v && v <= x + n
        } else {
            x <= v && v <= x + k
        }
    })
}

/// `r_{ab} = min(b − a + 1, d + J[1,b] − I[1,a), k)` for `1 ≤ a ≤ n`, `b ≤ a + n`.
pub fn rank_entry(t: &QuantumTriple, a: i64, b: i64) -> Result<i64> {
    let n = t.n as i64;
    if !(1..=n).contains(&a) || b > a + n {
        return Err(Error::InvalidTriple(format!("({a},{b}) lies outside 1 ≤ a ≤ {n}, b ≤ a + {n}")));
    }
    if b < a {
        return Ok(b - a + 1);
    }
    let alpha2 = t.d as i64 + t.tilde_j().count(b) - t.tilde_i().count(a - 1);
    Ok((b - a + 1).min(alpha2).min(t.k as i64))
}

/// `{K : I[1,r) − K[1,r) + K[1,s) − J[1,s) ≤ d for all 1 ≤ r, s ≤ n+1}`.
pub fn t_set(t: &QuantumTriple) -> BTreeSet<Subset> {
    let n = t.n;
    let pre = |s: &Subset| -> Vec<i64> { (1..=n + 1).map(|r| s.count_up_to(r - 1) as i64).collect() };
    let (pi, pj) = (pre(&t.i), pre(&t.j));
    k_subsets(n, t.k)
        .into_iter()
        .filter(|kk| {
            let pk = pre(kk);
            let worst_r = (0..=n).map(|r| pi[r] - pk[r]).max().expect("nonempty");
            let worst_s = (0..=n).map(|s| pk[s] - pj[s]).max().expect("nonempty");
            worst_r + worst_s <= t.d as i64
        })
        .collect()
}

/// `dist(K, K') = k − |K ∩ K'|` in the Johnson graph.
fn dist(a: &Subset, b: &Subset) -> usize {
    a.len() - a.intersection_size(b)
}

/// The least `d` with `T(I,J,d)` nonempty: `min_K dist(K, B(I)) + dist(K, A(J))`,
/// where `B(I) = {K ≤ I}` and `A(J) = {K ≥ J}`.
pub fn min_degree(n: usize, i: &Subset, j: &Subset) -> Result<usize> {
    if i.len() != j.len() {
        return Err(Error::InvalidTriple("subsets of different sizes".into()));
    }
    let all = k_subsets(n, i.len());
    let below: Vec<&Subset> = all.iter().filter(|k| k.leq(i)).collect();
    let above: Vec<&Subset> = all.iter().filter(|k| j.leq(k)).collect();
    let to = |k: &Subset, set: &[&Subset]| set.iter().map(|x| dist(k, x)).min().expect("I ∈ B(I), J ∈ A(J)");
    Ok(all.iter().map(|k| to(k, &below) + to(k, &above)).min().expect("some subset"))
}

/// `⟨[X_J], [X^I], [X_K]⟩_d`: zero unless the triple is valid and
/// `codim X_J + codim X^I + codim X_K = k(n−k) + dn`; otherwise the coefficient
/// of `[Π_{f(I,J,d)}]` on `σ_{λ(K)∨}`.
pub fn gw_invariant(t: &QuantumTriple, k_set: &Subset) -> Result<i64> {
    if k_set.len() != t.k || k_set.elements().iter().any(|&x| x > t.n) {
        return Err(Error::InvalidTriple(format!("{k_set} is not a {}-subset of [1,{}]", t.k, t.n)));
    }
    let total = codim_lower(&t.j) + codim_upper(&t.i, t.n) + codim_lower(k_set);
    if !is_valid(t) || total != t.k * (t.n - t.k) + t.d * t.n {
        return Ok(0);
    }
    let class = positroid_class(&f_of_triple(t))?;
    let dual = Partition::from_subset(k_set).complement(t.k, t.n - t.k)?;
    Ok(class.coeff(&dual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{affine_bruhat_leq, from_pair, to_pair};
    use crate::perm::{KBruhatPair, Permutation};
    use crate::crm::crm_from_affine;
    use crate::juggling::{siteswap_of, states_of};
    use crate::matroid::Positroid;
    use crate::subset::parse_subset;

    fn s(n: usize, x: &str) -> Subset {
        parse_subset(n, x).unwrap()
    }

    fn triple(n: usize, i: &str, j: &str, d: usize) -> QuantumTriple {
        QuantumTriple::new(n, s(n, i), s(n, j), d).unwrap()
    }

    fn a(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn periodic_sequences() {
        let p = Periodic::new(5, &s(5, "14"));
        assert_eq!([p.at(-1), p.at(0), p.at(1), p.at(2), p.at(3)], [-4, -1, 1, 4, 6]);
        assert_eq!([p.count(-2), p.count(0), p.count(3), p.count(4), p.count(6)], [-1, 0, 1, 2, 3]);
        assert!(p.contains(9) && !p.contains(8));
    }

    #[test]
    fn five_point_example() {
        let t = triple(5, "14", "14", 1);
        let f = f_of_triple(&t);
        assert_eq!(f, a(&[4, 3, 5, 6, 7]));
        assert!(is_valid(&t));
        assert_eq!(siteswap_of(&f).unwrap().to_string(), "31222");
        assert_eq!(states_of(&f).unwrap().to_string(), "(12,13,12,12,12)");
        let ts: Vec<String> = t_set(&t).iter().map(|x| x.to_string()).collect();
        assert_eq!(ts, ["12", "13", "14", "15", "24", "25", "34", "35", "45"]);
        let pos = Positroid::from_perm(&f).unwrap();
        assert_eq!(pos.matroid.bases(), &t_set(&t));
        assert_eq!(f.length(), 1);
        assert_eq!(codim_lower(t.j()) + codim_upper(t.i(), 5) - 5, 1);
        let u = Permutation::new(vec![2, 1, 5, 4, 3]).unwrap();
        let w = Permutation::new(vec![5, 4, 3, 1, 2]).unwrap();
        assert_eq!(from_pair(&KBruhatPair::new(u, w, 2).unwrap()).unwrap(), f);
        assert_eq!(from_pair(&to_pair(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn six_point_example() {
        let t = triple(6, "14", "24", 1);
        assert_eq!(f_of_triple(&t).window(), &[4, 3, 5, 8, 6, 7]);
    }

    #[test]
    fn rank_entries() {
        let t = triple(5, "14", "14", 1);
        let crm = crm_from_affine(&f_of_triple(&t)).unwrap();
        for x in 1..=5 {
            for y in x - 2..=x + 5 {
                assert_eq!(rank_entry(&t, x, y).unwrap(), crm.get(x, y), "({x},{y})");
            }
            assert_eq!(rank_entry(&t, x, x + 4).unwrap(), 2);
        }
        assert_eq!(rank_entry(&t, 3, 1).unwrap(), -1);
        assert!(rank_entry(&t, 0, 1).is_err());
        assert!(rank_entry(&t, 1, 7).is_err());
    }

    #[test]
    fn degree_zero_and_validity() {
        for x in k_subsets(5, 2) {
            let t = QuantumTriple::new(5, x.clone(), x.clone(), 0).unwrap();
            assert!(is_valid(&t));
            assert_eq!(t_set(&t).into_iter().collect::<Vec<_>>(), vec![x.clone()]);
            let f = f_of_triple(&t);
            assert!(f.is_bounded());
            assert_eq!(f.length(), 6);
        }
        assert!(is_valid(&triple(4, "13", "13", 1)));
        assert!(!is_valid(&triple(4, "12", "12", 1)));
        assert!(!is_valid(&triple(5, "14", "14", 2)));
        assert!(QuantumTriple::new(4, s(4, "12"), s(4, "12"), 3).is_err());
        assert!(QuantumTriple::new(4, s(4, "12"), s(4, "1"), 0).is_err());
    }

    #[test]
    fn top_degree_covers_everything_in_gr24() {
        for x in k_subsets(4, 2) {
            for y in k_subsets(4, 2) {
                let t = QuantumTriple::new(4, x.clone(), y.clone(), 2).unwrap();
                assert_eq!(t_set(&t).len(), 6);
            }
        }
    }

    #[test]
    fn minimal_degrees() {
        assert_eq!(min_degree(4, &s(4, "12"), &s(4, "34")).unwrap(), 2);
        assert_eq!(min_degree(4, &s(4, "34"), &s(4, "12")).unwrap(), 0);
        for n in 3..=5 {
            for x in k_subsets(n, 2) {
                assert_eq!(min_degree(n, &x, &x).unwrap(), 0);
                for y in k_subsets(n, 2) {
                    let m = min_degree(n, &x, &y).unwrap();
                    for d in 0..=2 {
                        let t = QuantumTriple::new(n, x.clone(), y.clone(), d).unwrap();
                        assert_eq!(!t_set(&t).is_empty(), d >= m, "{x} {y} {d}");
                    }
                }
            }
        }
    }

    #[test]
    fn valid_triples_give_bounded_permutations_ordered_by_degree() {
        for x in k_subsets(5, 2) {
            for y in k_subsets(5, 2) {
                let fs: Vec<_> = (0..=2)
                    .map(|d| QuantumTriple::new(5, x.clone(), y.clone(), d).unwrap())
                    .filter(is_valid)
                    .map(|t| f_of_triple(&t))
                    .collect();
                for w in fs.windows(2) {
                    assert!(w[0].is_bounded() && w[1].is_bounded());
                    assert!(affine_bruhat_leq(&w[1], &w[0]).unwrap());
                }
            }
        }
    }

    #[test]
    fn gromov_witten_examples() {
        // Three points on P^1 lie on a unique line.
        let t = QuantumTriple::new(2, s(2, "1"), s(2, "2"), 1).unwrap();
        assert_eq!(gw_invariant(&t, &s(2, "2")).unwrap(), 1);
        let t = QuantumTriple::new(2, s(2, "1"), s(2, "1"), 1).unwrap();
        assert_eq!(gw_invariant(&t, &s(2, "1")).unwrap(), 0);
        // Gr(2,4): ⟨σ_1, σ_21, σ_22⟩_1 = 1 and ⟨σ_2, σ_11, σ_22⟩_1 = 1.
        let t = QuantumTriple::new(4, opposite(&s(4, "24"), 4), s(4, "13"), 1).unwrap();
        assert_eq!(gw_invariant(&t, &s(4, "34")).unwrap(), 1);
        assert_eq!(gw_invariant(&t, &s(4, "24")).unwrap(), 0);
        let t = QuantumTriple::new(4, opposite(&s(4, "23"), 4), s(4, "14"), 1).unwrap();
        assert_eq!(gw_invariant(&t, &s(4, "34")).unwrap(), 1);
    }
}
