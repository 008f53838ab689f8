//! Exact linear algebra on points of the Grassmannian: Plücker coordinates,
//! matroids, affine permutations and cyclic rank matrices of `k × n` matrices,
//! and membership in positroid strata.

mod matrix;
mod scalar;

use std::collections::BTreeMap;

use itertools::Itertools;
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::affine::{affine_bruhat_leq, AffinePermutation};
use crate::crm::{crm_from_affine, crm_to_affine, CyclicRankMatrix};
use crate::error::{Error, Result};
use crate::juggling::Necklace;
use crate::matroid::{Matroid, Positroid};
use crate::subset::{k_subsets, Subset};

pub use matrix::{random_invertible, random_matrix, ExactMatrix, MatrixInput};
pub use scalar::{Field, Scalar};

/// Plücker coordinates `Δ_I` indexed by sorted `k`-subsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlueckerVector {
    k: usize,
    n: usize,
    field: Field,
    coords: BTreeMap<Subset, Scalar>,
}

impl PlueckerVector {
    /// Missing subsets are zero. Rejects the zero vector and vectors failing a
    /// three-term relation.
    pub fn new(k: usize, n: usize, field: Field, coords: BTreeMap<Subset, Scalar>) -> Result<Self> {
        if let Some((s, x)) = coords.iter().find(|(s, x)| s.len() != k || s.elements().iter().any(|&e| e > n) || x.field() != field) {
            return Err(Error::SizeMismatch(format!("coordinate {s} = {x} does not fit Gr({k},{n}) over {field}")));
        }
        let coords: BTreeMap<Subset, Scalar> = coords.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        if coords.is_empty() {
            return Err(Error::InvalidScalar("all Plücker coordinates vanish".into()));
        }
        let v = PlueckerVector { k, n, field, coords };
        v.check_three_term()?;
        Ok(v)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: &Subset) -> Scalar {
        self.coords.get(s).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Nonzero coordinates.
    pub fn nonzero(&self) -> impl Iterator<Item = (&Subset, &Scalar)> {
        self.coords.iter()
    }

    /// `Δ` of an ordered column list: antisymmetric, zero on repeats.
    pub fn signed(&self, cols: &[usize]) -> Scalar {
        if cols.iter().duplicates().next().is_some() {
            return self.field.zero();
        }
        let inversions = (0..cols.len()).flat_map(|a| (a + 1..cols.len()).map(move |b| (a, b))).filter(|&(a, b)| cols[a] > cols[b]).count();
        let x = self.get(&Subset::from_sorted(cols.iter().copied().sorted().collect()));
        if inversions % 2 == 1 {
            -&x
        } else {
            x
        }
    }

    /// `Δ_{Sac}Δ_{Sbd} = Δ_{Sab}Δ_{Scd} + Δ_{Sad}Δ_{Sbc}` for all `a<b<c<d` and `|S| = k−2`.
    pub fn check_three_term(&self) -> Result<()> {
        if self.k < 2 {
            return Ok(());
        }
        for s in k_subsets(self.n, self.k - 2) {
            let rest: Vec<usize> = (1..=self.n).filter(|&x| !s.contains(x)).collect();
            for q in rest.iter().combinations(4) {
                let (a, b, c, d) = (*q[0], *q[1], *q[2], *q[3]);
                let p = |x: usize, y: usize| {
                    let mut cols = s.elements().to_vec();
                    cols.extend([x, y]);
                    self.signed(&cols)
                };
                let lhs = &p(a, c) * &p(b, d);
                let rhs = &(&p(a, b) * &p(c, d)) + &(&p(a, d) * &p(b, c));
                if lhs != rhs {
                    return Err(Error::Invariant(format!("three-term relation fails for S={s}, {a}{b}{c}{d}")));
                }
            }
        }
        Ok(())
    }

    /// The matroid of nonzero coordinates.
    pub fn matroid(&self) -> Result<Matroid> {
        Matroid::new(self.n, self.coords.keys().cloned()).map_err(|e| Error::Invariant(e.to_string()))
    }

    /// Cyclic rank matrix of the point, from the ranks of its matroid.
    pub fn rank_matrix(&self) -> Result<CyclicRankMatrix> {
        Ok(self.matroid()?.cyclic_rank_matrix())
    }
}

impl Serialize for PlueckerVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.coords.iter().map(|(k, v)| (k.elements().iter().join(","), v)))
    }
}

pub fn pluecker(m: &ExactMatrix) -> PlueckerVector {
    let coords = k_subsets(m.n(), m.k())
        .into_iter()
        .filter_map(|s| {
            let x = m.minor(s.elements()).expect("k columns");
            (!x.is_zero()).then_some((s, x))
        })
        .collect();
    PlueckerVector { k: m.k(), n: m.n(), field: m.field(), coords }
}

pub fn matroid_of_matrix(m: &ExactMatrix) -> Matroid {
    pluecker(m).matroid().expect("the support of a Plücker vector is a matroid")
}

/// Rank of the cyclic column interval `[a, b]`; empty when `b < a`.
fn interval_rank(m: &ExactMatrix, a: i64, b: i64) -> usize {
    if b < a {
        return 0;
    }
    let n = m.n() as i64;
    let cols: Vec<usize> = (a..=b.min(a + n - 1)).map(|c| ((c - 1).rem_euclid(n) + 1) as usize).collect();
    m.rank_of_columns(&cols)
}

/// `f(i) = min{j ≥ i : v_i ∈ span(v_{i+1}, …, v_j)}`, columns read cyclically.
pub fn affine_perm_of_matrix(m: &ExactMatrix) -> AffinePermutation {
    let n = m.n() as i64;
    let window = (1..=n)
        .map(|i| {
            (i..=i + n)
                .find(|&j| interval_rank(m, i + 1, j) == interval_rank(m, i, j))
                .expect("v_i lies in the span of all columns")
        })
        .collect();
    AffinePermutation::new(window).expect("span construction gives an affine permutation")
}

/// `r_{ij}` = rank of columns `i, i+1, …, j`.
pub fn crm_of_matrix(m: &ExactMatrix) -> CyclicRankMatrix {
    CyclicRankMatrix::from_fn(m.n(), m.k(), |i, j| interval_rank(m, i, j) as i64)
}

/// `J_i` = pivot positions of the matrix with columns `i, i+1, …, i+n−1`,
/// numbered `1..n` in that rotated order.
pub fn pivotal_necklace(m: &ExactMatrix) -> Necklace {
    let n = m.n() as i64;
    let states = (1..=n)
        .map(|i| {
            let pivots = (1..=n).filter(|&p| {
                let c = i + p - 1;
                interval_rank(m, i, c) > interval_rank(m, i, c - 1)
            });
            Subset::from_sorted(pivots.map(|p| p as usize).collect())
        })
        .collect();
    Necklace::new(m.n(), states).expect("pivot sets form a necklace")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Open,
    Boundary,
    Outside,
}

/// Locates `V` relative to `Π_f`, cross-checking the rank-matrix answer
/// against vanishing of `Δ_I` for `I` outside the positroid of `f`.
pub fn stratum_membership(v: &PlueckerVector, f: &AffinePermutation) -> Result<Membership> {
    f.require_bounded()?;
    if f.n() != v.n || f.ball_number() != v.k as i64 {
        return Err(Error::SizeMismatch(format!("point of Gr({},{}) against {f}", v.k, v.n)));
    }
    let own = v.rank_matrix()?;
    let own_f = crm_to_affine(&own)?;
    let by_rank = if own == crm_from_affine(f)? {
        Membership::Open
    } else if affine_bruhat_leq(f, &own_f)? {
        Membership::Boundary
    } else {
        Membership::Outside
    };
    let positroid = Positroid::from_perm(f)?.matroid;
    let vanishes = v.coords.keys().all(|s| positroid.is_basis(s));
    if vanishes != (by_rank != Membership::Outside) {
        return Err(Error::Invariant(format!("Plücker vanishing and rank conditions disagree for {f}")));
    }
    Ok(by_rank)
}

/// A point of `Gr(2,4)` with Plücker coordinates
/// `(Δ12 : Δ13 : Δ14 : Δ23 : Δ24 : Δ34) = (1 : d : cd : bd : (a+1)bcd : abcd²)`,
/// as the row span of `[[1, 0, −bd, −(a+1)bcd], [0, 1, d, cd]]`.
pub fn open_cell_point(a: &BigRational, b: &BigRational, c: &BigRational, d: &BigRational) -> ExactMatrix {
    let one = BigRational::from_integer(1.into());
    let zero = BigRational::from_integer(0.into());
    let rows = vec![
        vec![one.clone(), zero.clone(), -(b * d), -((a + &one) * b * c * d)],
        vec![zero, one, d.clone(), c * d],
    ];
    let rows = rows.into_iter().map(|r| r.into_iter().map(Scalar::Rational).collect()).collect();
    ExactMatrix::new(Field::Rational, 4, rows).expect("rows are independent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::juggling::states_of;
    use crate::matroid::envelope;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn a(v: &[i64]) -> AffinePermutation {
        AffinePermutation::new(v.to_vec()).unwrap()
    }

    fn r(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn e12() -> ExactMatrix {
        ExactMatrix::from_ints(Field::Rational, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap()
    }

    fn generic() -> ExactMatrix {
        ExactMatrix::from_ints(Field::Rational, &[vec![1, 0, -1, -2], vec![0, 1, 1, 1]]).unwrap()
    }

    #[test]
    fn coordinate_vectors() {
        let p = pluecker(&e12());
        let nz: Vec<String> = p.nonzero().map(|(s, x)| format!("{s}={x}")).collect();
        assert_eq!(nz, ["12=1"]);
        assert_eq!(matroid_of_matrix(&e12()).bases().len(), 1);
    }

    #[test]
    fn open_cell_coordinates() {
        let m = open_cell_point(&r(1), &r(1), &r(1), &r(1));
        let p = pluecker(&m);
        let coords: Vec<String> = k_subsets(4, 2).iter().map(|s| p.get(s).to_string()).collect();
        assert_eq!(coords, ["1", "1", "1", "1", "2", "1"]);
        let s = |v: &[usize]| Subset::new(4, v.iter().copied()).unwrap();
        let rel = &(&p.get(&s(&[1, 2])) * &p.get(&s(&[3, 4]))) - &(&p.get(&s(&[1, 3])) * &p.get(&s(&[2, 4])));
        assert!((&rel + &(&p.get(&s(&[1, 4])) * &p.get(&s(&[2, 3])))).is_zero());
        assert_eq!(matroid_of_matrix(&m).bases().len(), 6);
        // General parameters, checked against the closed form.
        let (pa, pb, pc, pd) = (r(2), BigRational::new(1.into(), 3.into()), r(-5), r(7));
        let p = pluecker(&open_cell_point(&pa, &pb, &pc, &pd));
        let expect = [
            r(1),
            pd.clone(),
            &pc * &pd,
            &pb * &pd,
            (&pa + r(1)) * &pb * &pc * &pd,
            &pa * &pb * &pc * &pd * &pd,
        ];
        for (sub, e) in k_subsets(4, 2).iter().zip(expect) {
            assert_eq!(p.get(sub), Scalar::Rational(e));
        }
    }

    #[test]
    fn permutations_of_examples() {
        assert_eq!(affine_perm_of_matrix(&generic()), a(&[3, 4, 5, 6]));
        assert_eq!(affine_perm_of_matrix(&e12()), a(&[5, 6, 3, 4]));
        assert_eq!(crm_of_matrix(&e12()), crm_from_affine(&a(&[5, 6, 3, 4])).unwrap());
        let g = crm_of_matrix(&generic());
        for i in 1..=4 {
            for j in i..=i + 4 {
                assert_eq!(g.get(i, j), (j - i + 1).min(2));
            }
        }
        assert_eq!(pivotal_necklace(&e12()), states_of(&a(&[5, 6, 3, 4])).unwrap());
        assert_eq!(pivotal_necklace(&generic()).to_string(), "(12,12,12,12)");
    }

    #[test]
    fn membership_examples() {
        let uniform = a(&[3, 4, 5, 6]);
        assert_eq!(stratum_membership(&pluecker(&generic()), &uniform).unwrap(), Membership::Open);
        assert_eq!(stratum_membership(&pluecker(&e12()), &uniform).unwrap(), Membership::Boundary);
        let degenerate = open_cell_point(&r(1), &r(1), &r(1), &r(0));
        assert_eq!(stratum_membership(&pluecker(&degenerate), &uniform).unwrap(), Membership::Boundary);
        assert_eq!(stratum_membership(&pluecker(&generic()), &a(&[5, 6, 3, 4])).unwrap(), Membership::Outside);
        assert!(stratum_membership(&pluecker(&generic()), &a(&[2, 3, 4])).is_err());
    }

    #[test]
    fn pluecker_vector_validation() {
        let f = Field::Rational;
        let s = |v: &[usize]| Subset::new(4, v.iter().copied()).unwrap();
        let mut coords = BTreeMap::new();
        coords.insert(s(&[1, 2]), f.one());
        coords.insert(s(&[3, 4]), f.one());
        assert!(PlueckerVector::new(2, 4, f, coords.clone()).is_err());
        coords.insert(s(&[1, 3]), f.one());
        coords.insert(s(&[2, 4]), f.one());
        assert!(PlueckerVector::new(2, 4, f, coords).is_ok());
        assert!(PlueckerVector::new(2, 4, f, BTreeMap::new()).is_err());
    }

    #[test]
    fn random_points_are_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            for field in [Field::Rational, Field::Prime(7)] {
                for _ in 0..15 {
                    let m = random_matrix(k, n, field, &mut rng);
                    let p = pluecker(&m);
                    p.check_three_term().unwrap();
                    let f = affine_perm_of_matrix(&m);
                    assert!(f.is_bounded());
                    assert_eq!(f.ball_number(), k as i64);
                    assert_eq!(crm_to_affine(&crm_of_matrix(&m)).unwrap(), f);
                    assert_eq!(pivotal_necklace(&m), states_of(&f).unwrap());
                    assert_eq!(envelope(&p.matroid().unwrap()).unwrap().perm, f);
                    assert_eq!(stratum_membership(&p, &f).unwrap(), Membership::Open);
                    let g = random_invertible(k, field, &mut rng);
                    let m2 = m.left_multiply(&g).unwrap();
                    assert_eq!(affine_perm_of_matrix(&m2), f);
                    assert_eq!(matroid_of_matrix(&m2), matroid_of_matrix(&m));
                }
            }
        }
    }
}
