use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::scalar::{inv_mod, Field, Scalar};
use crate::error::{Error, Result};

/// A `k × n` matrix of rank exactly `k` over a fixed field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactMatrix {
    k: usize,
    n: usize,
    #[serde(serialize_with = "serialize_field")]
    field: Field,
    entries: Vec<Vec<Scalar>>,
}

fn serialize_field<S: serde::Serializer>(f: &Field, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(f)
}

/// The JSON form `{k, n, field: "Q"|"Fp", p?, entries: [["a/b", …], …]}`.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct MatrixInput {
    pub k: usize,
    pub n: usize,
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub entries: Vec<Vec<String>>,
}

impl MatrixInput {
    pub fn field(&self) -> Result<Field> {
        match (self.field.as_str(), self.p) {
            ("Q", _) => Ok(Field::Rational),
            ("Fp", Some(p)) => Field::prime(p),
            ("Fp", None) => Err(Error::InvalidScalar("field Fp needs p".into())),
            (other, _) => Err(Error::InvalidScalar(format!("unknown field {other:?}"))),
        }
    }

    pub fn to_matrix(&self) -> Result<ExactMatrix> {
        let field = self.field()?;
        if self.entries.len() != self.k {
            return Err(Error::SizeMismatch(format!("{} rows given, k = {}", self.entries.len(), self.k)));
        }
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ExactMatrix::new(field, self.n, rows)
    }
}

impl ExactMatrix {
    pub fn new(field: Field, n: usize, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        let k = entries.len();
        if let Some(r) = entries.iter().find(|r| r.len() != n) {
            return Err(Error::SizeMismatch(format!("row of length {} in a matrix with {n} columns", r.len())));
        }
        if entries.iter().flatten().any(|x| x.field() != field) {
            return Err(Error::InvalidScalar(format!("entry outside {field}")));
        }
        let m = ExactMatrix { k, n, field, entries };
        let found = m.rank_of_columns(&(1..=n).collect::<Vec<_>>());
        if found != k {
            return Err(Error::RankDeficient { found, expected: k });
        }
        Ok(m)
    }

    pub fn from_ints(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.len());
        ExactMatrix::new(field, n, rows.iter().map(|r| r.iter().map(|&v| field.from_int(v)).collect()).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[Vec<Scalar>] {
        &self.entries
    }

    /// Column `c` (1-based) as a vector.
    pub fn column(&self, c: usize) -> Vec<Scalar> {
        self.entries.iter().map(|r| r[c - 1].clone()).collect()
    }

    fn submatrix(&self, cols: &[usize]) -> Vec<Vec<Scalar>> {
        self.entries.iter().map(|r| cols.iter().map(|&c| r[c - 1].clone()).collect()).collect()
    }

    /// Rank of the columns listed (1-based; repeats allowed).
    pub fn rank_of_columns(&self, cols: &[usize]) -> usize {
        rank(self.field, &self.submatrix(cols))
    }

    /// Determinant of the `k × k` minor with columns in the given order.
    pub fn minor(&self, cols: &[usize]) -> Result<Scalar> {
        if cols.len() != self.k {
            return Err(Error::SizeMismatch(format!("{} columns for a {}-row minor", cols.len(), self.k)));
        }
        Ok(determinant(self.field, &self.submatrix(cols)))
    }

    /// `g · M` for an invertible `k × k` matrix `g`.
    pub fn left_multiply(&self, g: &[Vec<Scalar>]) -> Result<ExactMatrix> {
        if g.len() != self.k || g.iter().any(|r| r.len() != self.k) {
            return Err(Error::SizeMismatch("left factor must be k × k".into()));
        }
        let entries = g
            .iter()
            .map(|gr| {
                (0..self.n)
                    .map(|c| gr.iter().zip(&self.entries).fold(self.field.zero(), |acc, (x, r)| &acc + &(x * &r[c])))
                    .collect()
            })
            .collect();
        ExactMatrix::new(self.field, self.n, entries)
    }
}

/// A random rank-`k` matrix with small, fairly sparse entries, so that
/// non-generic strata appear often.
pub fn random_matrix<R: Rng>(k: usize, n: usize, field: Field, rng: &mut R) -> ExactMatrix {
    assert!(k <= n, "k = {k} exceeds n = {n}");
    loop {
        let rows: Vec<Vec<i64>> = (0..k)
            .map(|_| (0..n).map(|_| if rng.gen_bool(0.45) { 0 } else { rng.gen_range(-2..=2) }).collect())
            .collect();
        let entries = rows.iter().map(|r| r.iter().map(|&v| field.from_int(v)).collect()).collect();
        if let Ok(m) = ExactMatrix::new(field, n, entries) {
            return m;
        }
    }
}

/// A random invertible `k × k` matrix.
pub fn random_invertible<R: Rng>(k: usize, field: Field, rng: &mut R) -> Vec<Vec<Scalar>> {
    loop {
        let g: Vec<Vec<Scalar>> =
            (0..k).map(|_| (0..k).map(|_| field.from_int(rng.gen_range(-3..=3))).collect()).collect();
        if !determinant(field, &g).is_zero() {
            return g;
        }
    }
}

/// Rows scaled by the lcm of their denominators; the product of the scales is returned.
fn integer_rows(m: &[Vec<Scalar>]) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut total = BigInt::one();
    let rows = m
        .iter()
        .map(|r| {
            let qs: Vec<&BigRational> = r
                .iter()
                .map(|x| match x {
                    Scalar::Rational(q) => q,
                    Scalar::Prime { .. } => unreachable!("rational field"),
                })
                .collect();
            let l = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            total *= &l;
            qs.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect();
    (rows, total)
}

/// Fraction-free elimination. Returns the rank and, for square input, the determinant.
fn bareiss(mut a: Vec<Vec<BigInt>>) -> (usize, BigInt) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        if piv != r {
            a.swap(piv, r);
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&num % &prev).is_zero());
                a[i][j] = num / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    let det = if rows == cols && r == rows { sign * prev } else { BigInt::zero() };
    (r, det)
}

fn eliminate_mod(mut a: Vec<Vec<u64>>, p: u64) -> (usize, u64) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut det = 1u64;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        if piv != r {
            a.swap(piv, r);
            det = (p - det) % p;
        }
        det = det * a[r][c] % p;
        let inv = inv_mod(a[r][c], p);
        for i in r + 1..rows {
            let factor = a[i][c] * inv % p;
            if factor == 0 {
                continue;
            }
            let (top, bottom) = a.split_at_mut(i);
            for (x, &y) in bottom[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
        r += 1;
    }
    let det = if rows == cols && r == rows { det } else { 0 };
    (r, det)
}

fn mod_rows(m: &[Vec<Scalar>]) -> Vec<Vec<u64>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|x| match x {
                    Scalar::Prime { value, .. } => *value,
                    Scalar::Rational(_) => unreachable!("prime field"),
                })
                .collect()
        })
        .collect()
}

pub(crate) fn rank(field: Field, m: &[Vec<Scalar>]) -> usize {
    match field {
        Field::Rational => bareiss(integer_rows(m).0).0,
        Field::Prime(p) => eliminate_mod(mod_rows(m), p).0,
    }
}

pub(crate) fn determinant(field: Field, m: &[Vec<Scalar>]) -> Scalar {
    if m.is_empty() {
        return field.one();
    }
    match field {
        Field::Rational => {
            let (ints, scale) = integer_rows(m);
            let (_, det) = bareiss(ints);
            Scalar::Rational(BigRational::new(det, scale))
        }
        Field::Prime(p) => Scalar::Prime { value: eliminate_mod(mod_rows(m), p).1, p },
    }
}
