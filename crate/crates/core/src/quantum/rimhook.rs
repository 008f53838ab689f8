//! Quantum Littlewood–Richardson coefficients of `Gr(k,n)` from classical
//! Littlewood–Richardson numbers and `n`-rim-hook removal. Kept independent of
//! positroid classes so it can serve as a reference.

use std::collections::BTreeMap;

use crate::symcoh::Partition;

/// `c^ν_{λμ}`, by counting skew tableaux of shape `ν/λ` and content `μ` whose
/// reverse reading word is a lattice word.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() + mu.size() != nu.size() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    let rows = nu.len();
    let mut filling: Vec<Vec<usize>> = (1..=rows).map(|r| vec![0; nu.part(r)]).collect();
    let mut counts = vec![0usize; mu.len() + 1];
    let cells: Vec<(usize, usize)> = (1..=rows)
        .flat_map(|r| (lam.part(r) + 1..=nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    fill(lam, mu, &cells, 0, &mut filling, &mut counts)
}

fn fill(
    lam: &Partition,
    mu: &Partition,
    cells: &[(usize, usize)],
    pos: usize,
    filling: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
) -> u64 {
    let Some(&(r, c)) = cells.get(pos) else { return 1 };
    let mut total = 0;
    for v in 1..=mu.len() {
        if counts[v] == mu.part(v) {
            continue;
        }
        // Lattice condition on the reading word so far.
        if v > 1 && counts[v] + 1 > counts[v - 1] {
            continue;
        }
        // Rows weakly increase left to right; we fill right to left.
        if c < filling[r - 1].len() && filling[r - 1][c] != 0 && v > filling[r - 1][c] {
            continue;
        }
        // Columns strictly increase downward.
        if r > 1 && c > lam.part(r - 1) && v <= filling[r - 2][c - 1] {
            continue;
        }
        filling[r - 1][c - 1] = v;
        counts[v] += 1;
        total += fill(lam, mu, cells, pos + 1, filling, counts);
        counts[v] -= 1;
        filling[r - 1][c - 1] = 0;
    }
    total
}

/// `s_λ s_μ` truncated to partitions with at most `rows` parts.
pub fn lr_product(lam: &Partition, mu: &Partition, rows: usize) -> BTreeMap<Partition, u64> {
    let size = lam.size() + mu.size();
    Partition::all(size, size, rows)
        .into_iter()
        .filter_map(|nu| {
            let c = lr_coefficient(lam, mu, &nu);
            (c > 0).then_some((nu, c))
        })
        .collect()
}

/// Reduces `s_ν` (`ℓ(ν) ≤ k`) into `QH*(Gr(k,n))` by `n`-rim-hook removal, returning
/// `(sign, d, λ)` with `s_ν ↦ sign · q^d σ_λ`, or `None` if it vanishes.
pub fn rim_hook_reduce(nu: &Partition, k: usize, n: usize) -> Option<(i64, usize, Partition)> {
    // β_i = ν_i + k − i are distinct; removing an n-rim hook lowers one β by n.
    let beta: Vec<usize> = (1..=k).map(|i| nu.part(i) + k - i).collect();
    let residues: Vec<usize> = beta.iter().map(|b| b % n).collect();
    let d: usize = beta.iter().map(|b| b / n).sum();
    let mut sorted = residues.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let inversions = (0..k).flat_map(|a| (a + 1..k).map(move |b| (a, b))).filter(|&(a, b)| residues[a] < residues[b]).count();
    let mut sign = if inversions % 2 == 0 { 1 } else { -1 };
    if (k - 1) * d % 2 == 1 {
        sign = -sign;
    }
    let lam = Partition::new((1..=k).map(|i| sorted[i - 1] - (k - i)).collect());
    if !lam.fits(k, n - k) {
        return None;
    }
    Some((sign, d, lam))
}

/// The quantum product `σ_λ * σ_μ` as a map `(d, ν) ↦ coefficient of q^d σ_ν`.
pub fn quantum_product(lam: &Partition, mu: &Partition, k: usize, n: usize) -> BTreeMap<(usize, Partition), i64> {
    let mut out: BTreeMap<(usize, Partition), i64> = BTreeMap::new();
    for (nu, c) in lr_product(lam, mu, k) {
        if let Some((sign, d, red)) = rim_hook_reduce(&nu, k, n) {
            *out.entry((d, red)).or_insert(0) += sign * c as i64;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `⟨σ_a, σ_b, σ_c⟩_d`: the coefficient of `q^d σ_{c∨}` in `σ_a * σ_b`.
pub fn gw_oracle(a: &Partition, b: &Partition, c: &Partition, d: usize, k: usize, n: usize) -> i64 {
    if a.size() + b.size() + c.size() != k * (n - k) + d * n {
        return 0;
    }
    let Ok(dual) = c.complement(k, n - k) else { return 0 };
    quantum_product(a, b, k, n).get(&(d, dual)).copied().unwrap_or(0)
}
