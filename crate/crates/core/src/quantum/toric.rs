use serde::Serialize;

use super::{Periodic, QuantumTriple};
use crate::affine::AffinePermutation;
use crate::error::{Error, Result};

/// A toric shape: the cells between two lattice paths, invariant under the
/// translation `(x, y) ↦ (x + n − k, y + k)` (x east, y north).
///
/// The upper (north-west) border has steps labeled by `ℤ`, with the vertex before
/// step 1 at the origin. Step `a` is vertical when `a` lies in `Ĩ` and horizontal
/// otherwise; the lower border is labeled the same way by `J̃`, positioned so that
/// step `b` of the lower border shares a north-west/south-east diagonal with step
/// `b − k` of the upper border.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToricShape {
    n: usize,
    k: usize,
    /// Vertical flags of upper steps `1..=n`.
    upper: Vec<bool>,
    /// Vertical flags of lower steps `1..=n`.
    lower: Vec<bool>,
    /// Position of the lower vertex before step 1.
    lower_origin: (i64, i64),
    /// Cells `(x, y)` of one fundamental domain: rows `y = 1..=k`, cell `x` spanning `[x−1, x]`.
    cells: Vec<(i64, i64)>,
}

/// Vertex positions along a border whose vertical steps are `v` and horizontal
/// steps `h`, shifted by `origin`.
fn vertex(v: &Periodic, h: &Periodic, origin: (i64, i64), a: i64) -> (i64, i64) {
    (h.count(a) + origin.0, v.count(a) + origin.1)
}

pub fn toric_shape(t: &QuantumTriple) -> Result<ToricShape> {
    let (n, k, d) = (t.n() as i64, t.k() as i64, t.d() as i64);
    let (ti, tj, tm, tl) = (t.tilde_i(), t.tilde_j(), t.tilde_m(), t.tilde_l());
    let upper = |a| vertex(&ti, &tm, (0, 0), a);
    let lower_origin = (-d, d - k);
    let lower = |b| vertex(&tj, &tl, lower_origin, b);
    let mut cells = Vec::new();
    for r in 1..=k {
        // Row r: east of the upper vertical step ĩ_r, west of the lower vertical step in that row.
        let x0 = upper(ti.at(r)).0;
        let x1 = lower(tj.at(r + k - d)).0;
        if !(0..=n - k).contains(&(x1 - x0)) {
            return Err(Error::InvalidTriple(format!("row {r} has {} cells", x1 - x0)));
        }
        cells.extend((x0 + 1..=x1).map(|x| (x, r)));
    }
    let mut column_total = 0;
    for c in 1..=n - k {
        let y0 = upper(tm.at(c)).1;
        let y1 = lower(tl.at(c + d)).1;
        if !(0..=k).contains(&(y0 - y1)) {
            return Err(Error::InvalidTriple(format!("column {c} has {} cells", y0 - y1)));
        }
        column_total += y0 - y1;
    }
    if column_total != cells.len() as i64 {
        return Err(Error::Invariant(format!("{} cells by rows, {column_total} by columns", cells.len())));
    }
    let flags = |p: &Periodic| (1..=n).map(|a| p.contains(a)).collect();
    Ok(ToricShape { n: t.n(), k: t.k(), upper: flags(&ti), lower: flags(&tj), lower_origin, cells })
}

impl ToricShape {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `|θ|`, the number of cells in a fundamental domain.
    pub fn boxes(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[(i64, i64)] {
        &self.cells
    }

    fn border(&self, flags: &[bool], origin: (i64, i64)) -> (Periodic, Periodic, (i64, i64)) {
        let n = self.n;
        let sub = |want: bool| {
            let s = crate::subset::Subset::new(n, (1..=n).filter(|&a| flags[a - 1] == want)).expect("labels in [n]");
            Periodic::new(n, &s)
        };
        (sub(true), sub(false), origin)
    }

    /// Reads the affine permutation off the borders: a vertical upper step goes to
    /// the lower vertical step in its row, a horizontal one to the lower horizontal
    /// step in its column.
    pub fn to_affine(&self) -> Result<AffinePermutation> {
        let n = self.n as i64;
        let (uv, uh, uo) = self.border(&self.upper, (0, 0));
        let (lv, lh, lo) = self.border(&self.lower, self.lower_origin);
        let window = (1..=n)
            .map(|a| {
                let (x, y) = vertex(&uv, &uh, uo, a);
                let vertical = uv.contains(a);
                (a - 2 * n..=a + 3 * n)
                    .find(|&b| {
                        let (bx, by) = vertex(&lv, &lh, lo, b);
                        if vertical {
                            lv.contains(b) && by == y
                        } else {
                            lh.contains(b) && bx == x
                        }
                    })
                    .ok_or_else(|| Error::Invariant(format!("no lower step matches step {a}")))
            })
            .collect::<Result<Vec<_>>>()?;
        AffinePermutation::new(window)
    }
}
