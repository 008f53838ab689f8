//! End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use positroids::affine::{bounded_covers_above, from_pair, parse_window, to_pair, AffinePermutation};
use positroids::crm::{crm_from_affine, crm_to_affine, CyclicRankMatrix};
use positroids::juggling::{necklace_to_affine, parse_siteswap, siteswap_of, states_of};
use positroids::matroid::{envelope, necklace_of_matroid, Matroid, Positroid};
use positroids::perm::KBruhatPair;
use positroids::poset::build_bound_poset;
use positroids::quantum::rimhook::{gw_oracle, lr_coefficient};
use positroids::quantum::{
    codim_lower, codim_upper, f_of_triple, gw_invariant, is_valid, opposite, t_set, toric_shape, QuantumTriple,
};
use positroids::strata::{
    affine_perm_of_matrix, crm_of_matrix, pivotal_necklace, pluecker, random_matrix, stratum_membership, Field,
    Membership,
};
use positroids::subset::{k_subsets, parse_subset, Subset};
use positroids::symcoh::{
    affine_stanley, pieri_s1, positroid_class, psi, richardson_pushforward_with, GrassClass, Partition, SchubertTable,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn subset(n: usize, s: &str) -> Subset {
    parse_subset(n, s).expect("literal subset")
}

fn bound(k: usize, n: usize) -> Result<Vec<AffinePermutation>, String> {
    Ok(build_bound_poset(k, n).map_err(err)?.elements().to_vec())
}

fn round_trips() -> Check {
    let mut total = 0;
    for (k, n) in [(1, 3), (1, 4), (2, 4), (2, 5), (3, 6)] {
        for f in bound(k, n)? {
            let j = states_of(&f).map_err(err)?;
            ensure(necklace_to_affine(&j).map_err(err)? == f, || format!("necklace round trip fails at {f}"))?;
            let r = crm_from_affine(&f).map_err(err)?;
            ensure(crm_to_affine(&r).map_err(err)? == f, || format!("rank matrix round trip fails at {f}"))?;
            ensure(from_pair(&to_pair(&f).map_err(err)?).map_err(err)? == f, || format!("pair round trip fails at {f}"))?;
            let p = Positroid::from_perm(&f).map_err(err)?;
            let back = necklace_to_affine(&necklace_of_matroid(&p.matroid).map_err(err)?).map_err(err)?;
            ensure(back == f, || format!("positroid round trip fails at {f}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} bounded affine permutations"))
}

fn counting() -> Check {
    let p = build_bound_poset(2, 4).map_err(err)?;
    let orbits = p.rotation_orbits().len();
    ensure(p.len() == 33 && orbits == 10, || format!("{} elements, {orbits} orbits", p.len()))?;
    Ok("33 elements, 10 orbits".into())
}

fn golden_juggling() -> Check {
    let f = parse_window("[2,3,5,8]").map_err(err)?;
    let throws = siteswap_of(&f).map_err(err)?;
    ensure(throws.throws() == [1, 1, 2, 4], || format!("siteswap {throws}"))?;
    let printed = parse_siteswap("4112").map_err(err)?;
    ensure(throws.min_rotation() == printed.min_rotation(), || "not a rotation of 4112".into())?;
    let states = states_of(&f).map_err(err)?.to_string();
    ensure(states == "(14,13,12,12)", || format!("states {states}"))?;
    let expected = vec![vec![1, 1, 1, 2, 2], vec![1, 1, 2, 2, 2], vec![1, 2, 2, 2, 2], vec![1, 2, 2, 2, 2]];
    let r = crm_from_affine(&f).map_err(err)?;
    ensure(r.rows() == expected.as_slice(), || format!("rank window {:?}", r.rows()))?;
    // Underlined entries: (1,2), (2,3), (3,5), (4,8).
    let specials: Vec<(i64, i64)> =
        (1..=4).flat_map(|i| (i..=i + 4).map(move |j| (i, j))).filter(|&(i, j)| r.is_special(i, j)).collect();
    ensure(specials == [(1, 2), (2, 3), (3, 5), (4, 8)], || format!("special entries {specials:?}"))?;
    let rebuilt = CyclicRankMatrix::from_rows(4, 2, expected).map_err(err)?;
    ensure(crm_to_affine(&rebuilt).map_err(err)? == f, || "window does not decode to f".into())?;
    Ok("siteswap 1124, states (14,13,12,12), 4 special entries".into())
}

fn golden_envelopes() -> Check {
    let m = |s: &[&str]| Matroid::new(4, s.iter().map(|x| subset(4, x))).map_err(err);
    let e2 = envelope(&m(&["12", "23", "34", "14"])?).map_err(err)?;
    let e3 = envelope(&m(&["12", "13", "14", "23", "24"])?).map_err(err)?;
    ensure(e2.perm.window() == [3, 4, 5, 6], || format!("first envelope {}", e2.perm))?;
    ensure(e3.perm.window() == [3, 5, 4, 6], || format!("second envelope {}", e3.perm))?;
    ensure(e3.necklace.to_grassmann_labels().iter().map(|s| s.to_string()).collect::<Vec<_>>() == ["12", "23", "13", "14"], || {
        format!("necklace {}", e3.necklace)
    })?;
    Ok("[3,4,5,6] and [3,5,4,6]".into())
}

/// Inversions `(i, j)` with `1 ≤ i ≤ n`, `i < j`, `f(i) > f(j)`, counted directly.
fn brute_length(f: &AffinePermutation) -> usize {
    let n = f.n() as i64;
    (1..=n).map(|i| (i + 1..=i + 3 * n).filter(|&j| f.value(i) > f.value(j)).count()).sum()
}

fn length_law() -> Check {
    let mut pairs = 0;
    for n in 1..=5 {
        for k in 0..=n {
            for p in KBruhatPair::all(n, k) {
                let f = from_pair(&p).map_err(err)?;
                let expected = k * (n - k) + p.u.length() - p.w.length();
                let got = brute_length(&f);
                ensure(got == expected && f.length() == got, || format!("{} {} k={k}: ℓ = {got}", p.u, p.w))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} k-Bruhat pairs"))
}

fn eulerian() -> Check {
    let mut intervals = 0;
    for (k, n) in [(1, 3), (2, 4), (2, 5)] {
        let p = build_bound_poset(k, n).map_err(err)?;
        for x in 0..p.len() {
            let row = p.moebius_row(x);
            for y in p.upset(x) {
                let sign = if (p.rank(y) - p.rank(x)) % 2 == 0 { 1 } else { -1 };
                let mu = row.get(&y).copied().unwrap_or(0);
                ensure(mu == sign, || format!("μ({}, {}) = {mu}", p.elements()[x], p.elements()[y]))?;
                intervals += 1;
            }
        }
    }
    Ok(format!("{intervals} intervals"))
}

fn affine_stanley_vs_richardson() -> Check {
    let mut count = 0;
    for n in 1..=5 {
        let table = SchubertTable::new(n);
        for k in 0..=n {
            for f in bound(k, n)? {
                let ours = positroid_class(&f).map_err(err)?;
                let oracle = richardson_pushforward_with(&table, &to_pair(&f).map_err(err)?).map_err(err)?;
                ensure(ours == oracle, || format!("{f}: {ours} vs {oracle}"))?;
                count += 1;
            }
        }
    }
    let f = parse_window("[5,2,7,4]").map_err(err)?;
    let sym = affine_stanley(&f, 4);
    let mono = sym.to_monomial().map_err(err)?.to_string();
    ensure(mono == "m[2,2] + 2*m[2,1,1] + 4*m[1,1,1,1]", || format!("F = {mono}"))?;
    let schur = sym.to_schur().map_err(err)?.to_string();
    ensure(schur == "s[2,2] + s[2,1,1] - s[1,1,1,1]", || format!("F = {schur}"))?;
    let image = psi(&sym, 2, 4).map_err(err)?;
    ensure(image == GrassClass::point(2, 4), || format!("ψ(F) = {image}"))?;
    Ok(format!("{count} classes agree; [5,2,7,4] gives the point class"))
}

fn monk() -> Check {
    let mut count = 0;
    for n in 1..=5 {
        for k in 0..=n {
            for f in bound(k, n)? {
                let lhs = pieri_s1(&positroid_class(&f).map_err(err)?);
                let mut rhs = GrassClass::zero(k, n);
                for (g, zero_cover) in bounded_covers_above(&f).map_err(err)? {
                    if zero_cover {
                        rhs.add_class(&positroid_class(&g).map_err(err)?);
                    }
                }
                ensure(lhs == rhs, || format!("{f}: σ₁·[Π_f] = {lhs}, covers give {rhs}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} permutations"))
}

fn stratification() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checks = 0;
    for (k, n) in [(2, 4), (2, 5), (3, 6)] {
        let strata: Vec<_> = bound(k, n)?
            .into_iter()
            .map(|g| {
                let p = Positroid::from_perm(&g).map_err(err)?;
                let r = crm_from_affine(&g).map_err(err)?;
                Ok((g, p.matroid, r))
            })
            .collect::<Result<_, String>>()?;
        for field in [Field::Rational, Field::prime(7).map_err(err)?] {
            for _ in 0..200 {
                let m = random_matrix(k, n, field, &mut rng);
                let f = affine_perm_of_matrix(&m);
                let crm = crm_of_matrix(&m);
                ensure(crm_to_affine(&crm).map_err(err)? == f, || format!("rank matrix disagrees for {f}"))?;
                ensure(pivotal_necklace(&m) == states_of(&f).map_err(err)?, || format!("pivots disagree for {f}"))?;
                let v = pluecker(&m);
                for (g, matroid, r) in &strata {
                    let by_ranks = (1..=n as i64).all(|i| (i..=i + n as i64).all(|j| crm.get(i, j) <= r.get(i, j)));
                    let by_minors = v.nonzero().all(|(s, _)| matroid.is_basis(s));
                    ensure(by_ranks == by_minors, || format!("{g}: ranks say {by_ranks}, minors say {by_minors}"))?;
                    let membership = stratum_membership(&v, g).map_err(err)?;
                    ensure((membership != Membership::Outside) == by_ranks, || format!("{g}: {membership:?}"))?;
                    ensure((membership == Membership::Open) == (*g == f), || format!("{g}: {membership:?}"))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("1200 matrices, {checks} stratum checks"))
}

fn quantum_golden() -> Check {
    let t = QuantumTriple::new(5, subset(5, "14"), subset(5, "14"), 1).map_err(err)?;
    let f = f_of_triple(&t);
    ensure(f.window() == [4, 3, 5, 6, 7], || format!("f = {f}"))?;
    let throws = siteswap_of(&f).map_err(err)?.to_string();
    ensure(throws == "31222", || format!("siteswap {throws}"))?;
    let states = states_of(&f).map_err(err)?.to_string();
    ensure(states == "(12,13,12,12,12)", || format!("states {states}"))?;
    let mut expected: Vec<Subset> = k_subsets(5, 2);
    expected.retain(|s| *s != subset(5, "23"));
    let ts: Vec<Subset> = t_set(&t).into_iter().collect();
    ensure(ts == expected, || format!("T = {ts:?}"))?;
    let t6 = QuantumTriple::new(6, subset(6, "14"), subset(6, "24"), 1).map_err(err)?;
    let f6 = f_of_triple(&t6);
    ensure(f6.window() == [4, 3, 5, 8, 6, 7], || format!("f = {f6}"))?;
    Ok("[4,3,5,6,7] and [4,3,5,8,6,7]".into())
}

fn quantum_positroids_and_shapes() -> Check {
    let mut valid = 0;
    for n in 1..=5 {
        for k in 1..n {
            for i in k_subsets(n, k) {
                for j in k_subsets(n, k) {
                    for d in 0..=k {
                        let t = QuantumTriple::new(n, i.clone(), j.clone(), d).map_err(err)?;
                        let shape = toric_shape(&t);
                        ensure(shape.is_ok() == is_valid(&t), || format!("({i},{j},{d}): toric/valid mismatch"))?;
                        if !is_valid(&t) {
                            continue;
                        }
                        let f = f_of_triple(&t);
                        let bases = Positroid::from_perm(&f).map_err(err)?.matroid.bases().clone();
                        ensure(t_set(&t) == bases, || format!("({i},{j},{d}): T differs from positroid of {f}"))?;
                        let boxes = shape.map_err(err)?.boxes();
                        let codims = codim_lower(&j) + codim_upper(&i, n);
                        ensure(boxes == brute_length(&f) && boxes + d * n == codims, || {
                            format!("({i},{j},{d}): |θ| = {boxes}, ℓ = {}, codims {codims}", brute_length(&f))
                        })?;
                        valid += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{valid} valid triples"))
}

fn gw_tables() -> Check {
    let mut nonzero = 0;
    let mut entries = 0;
    for n in [4, 5] {
        let k = 2;
        let subsets = k_subsets(n, k);
        for i in &subsets {
            for j in &subsets {
                for d in 0..=2 {
                    let t = QuantumTriple::new(n, i.clone(), j.clone(), d).map_err(err)?;
                    let (a, b) = (Partition::from_subset(j), Partition::from_subset(&opposite(i, n)));
                    for kk in &subsets {
                        let c = Partition::from_subset(kk);
                        let ours = gw_invariant(&t, kk).map_err(err)?;
                        let oracle = gw_oracle(&a, &b, &c, d, k, n);
                        ensure(ours == oracle, || format!("Gr({k},{n}) ({i},{j},{d}) K={kk}: {ours} vs {oracle}"))?;
                        ensure(ours >= 0, || format!("negative invariant at ({i},{j},{d}) K={kk}"))?;
                        if d == 0 {
                            let balanced = a.size() + b.size() + c.size() == k * (n - k);
                            let lr = if balanced {
                                lr_coefficient(&a, &b, &c.complement(k, n - k).map_err(err)?) as i64
                            } else {
                                0
                            };
                            ensure(ours == lr, || format!("d = 0 ({i},{j}) K={kk}: {ours} vs LR {lr}"))?;
                        }
                        nonzero += usize::from(ours != 0);
                        entries += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{entries} entries, {nonzero} nonzero"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("bijection round trips", round_trips),
        ("counting Bound(2,4)", counting),
        ("golden juggling example", golden_juggling),
        ("golden positroid envelopes", golden_envelopes),
        ("length law", length_law),
        ("Eulerian intervals", eulerian),
        ("affine Stanley vs Richardson oracle", affine_stanley_vs_richardson),
        ("Monk rule", monk),
        ("matrix stratification", stratification),
        ("quantum golden examples", quantum_golden),
        ("quantum positroids and toric shapes", quantum_positroids_and_shapes),
        ("Gromov-Witten oracle equivalence", gw_tables),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", idx + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail} ({secs:.2}s)", idx + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
