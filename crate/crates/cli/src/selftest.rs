use positroids::affine::{bounded_covers_above, from_decorated, from_pair, to_decorated, to_pair};
use positroids::crm::{crm_from_affine, crm_to_affine};
use positroids::juggling::{from_siteswap, necklace_to_affine, siteswap_of, states_of};
use positroids::matroid::{necklace_of_matroid, Positroid};
use positroids::poset::{build_bound_poset, BoundPoset};
use positroids::quantum::rimhook::gw_oracle;
use positroids::quantum::{f_of_triple, gw_invariant, is_valid, opposite, t_set, toric_shape, QuantumTriple};
use positroids::subset::k_subsets;
use positroids::symcoh::{pieri_s1, positroid_class, richardson_pushforward_with, GrassClass, Partition, SchubertTable};
use positroids::{Error, Result};
use serde_json::json;

use crate::Output;

const SHAPES: [(usize, usize); 4] = [(1, 3), (1, 4), (2, 4), (2, 5)];

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Invariant(what()))
    }
}

fn round_trips(p: &BoundPoset) -> Result<String> {
    for f in p.elements() {
        check(necklace_to_affine(&states_of(f)?)? == *f, || format!("necklace of {f}"))?;
        check(crm_to_affine(&crm_from_affine(f)?)? == *f, || format!("rank matrix of {f}"))?;
        check(from_pair(&to_pair(f)?)? == *f, || format!("pair of {f}"))?;
        check(from_decorated(&to_decorated(f)?)? == *f, || format!("decorated form of {f}"))?;
        check(from_siteswap(&siteswap_of(f)?, f.ball_number())? == *f, || format!("siteswap of {f}"))?;
        let m = Positroid::from_perm(f)?.matroid;
        check(necklace_to_affine(&necklace_of_matroid(&m)?)? == *f, || format!("positroid of {f}"))?;
    }
    Ok(format!("{} elements", p.len()))
}

fn eulerian(p: &BoundPoset) -> Result<String> {
    check(p.verify_eulerian(), || "Möbius function is not (-1)^rank".into())?;
    Ok("every interval".into())
}

fn classes(p: &BoundPoset) -> Result<String> {
    let table = SchubertTable::new(p.n());
    for f in p.elements() {
        let c = positroid_class(f)?;
        check(c.is_nonnegative(), || format!("{f} has class {c}"))?;
        let oracle = richardson_pushforward_with(&table, &to_pair(f)?)?;
        check(c == oracle, || format!("{f}: {c} vs {oracle}"))?;
        let mut covers = GrassClass::zero(p.k(), p.n());
        for (g, zero) in bounded_covers_above(f)? {
            if zero {
                covers.add_class(&positroid_class(&g)?);
            }
        }
        check(pieri_s1(&c) == covers, || format!("Monk rule fails at {f}"))?;
    }
    Ok(format!("{} classes", p.len()))
}

fn quantum(k: usize, n: usize) -> Result<String> {
    let subsets = k_subsets(n, k);
    let mut valid = 0;
    for i in &subsets {
        for j in &subsets {
            for d in 0..=k {
                let t = QuantumTriple::new(n, i.clone(), j.clone(), d)?;
                let shape = toric_shape(&t);
                check(shape.is_ok() == is_valid(&t), || format!("({i},{j},{d}) toric/valid"))?;
                let (lj, li) = (Partition::from_subset(j), Partition::from_subset(&opposite(i, n)));
                for kk in &subsets {
                    let ours = gw_invariant(&t, kk)?;
                    let oracle = gw_oracle(&lj, &li, &Partition::from_subset(kk), d, k, n);
                    check(ours == oracle, || format!("({i},{j},{d}) K={kk}: {ours} vs {oracle}"))?;
                }
                if let Ok(shape) = shape {
                    let f = f_of_triple(&t);
                    check(&t_set(&t) == Positroid::from_perm(&f)?.matroid.bases(), || format!("T({i},{j},{d})"))?;
                    check(shape.boxes() == f.length(), || format!("|θ({i},{j},{d})|"))?;
                    valid += 1;
                }
            }
        }
    }
    Ok(format!("{valid} valid triples"))
}

pub(crate) fn run() -> Result<Output> {
    let mut results = Vec::new();
    let mut lines = Vec::new();
    let mut failed = false;
    for (k, n) in SHAPES {
        let p = build_bound_poset(k, n)?;
        let checks: [(&str, Result<String>); 4] = [
            ("round trips", round_trips(&p)),
            ("eulerian", eulerian(&p)),
            ("classes", classes(&p)),
            ("quantum", quantum(k, n)),
        ];
        for (name, r) in checks {
            let (passed, detail) = match r {
                Ok(d) => (true, d),
                Err(e) => (false, e.to_string()),
            };
            failed |= !passed;
            lines.push(format!("{} Gr({k},{n}) {name}: {detail}", if passed { "PASS" } else { "FAIL" }));
            results.push(json!({ "k": k, "n": n, "check": name, "passed": passed, "detail": detail }));
        }
    }
    let mut out = Output::new(json!({ "passed": !failed, "results": results }), lines.join("\n"));
    out.failed = failed;
    Ok(out)
}
