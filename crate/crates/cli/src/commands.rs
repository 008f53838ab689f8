use std::fs;

use itertools::Itertools;
use positroids::affine::{from_decorated, from_pair, parse_decorated, parse_window, to_decorated, to_pair, AffinePermutation};
use positroids::crm::{crm_from_affine, crm_to_affine, CyclicRankMatrix};
use positroids::juggling::{from_siteswap, necklace_to_affine, parse_necklace, parse_siteswap, siteswap_of, states_of, Necklace};
use positroids::matroid::{envelope, Positroid};
use positroids::perm::{parse_permutation, KBruhatPair};
use positroids::poset::build_bound_poset_with_cap;
use positroids::quantum::rimhook::gw_oracle;
use positroids::quantum::{f_of_triple, gw_invariant, is_valid, opposite, t_set, toric_shape, QuantumTriple};
use positroids::strata::{
    affine_perm_of_matrix, matroid_of_matrix, pivotal_necklace, pluecker, random_matrix, stratum_membership, ExactMatrix,
    Field, MatrixInput,
};
use positroids::subset::{parse_subset, Subset};
use positroids::symcoh::{positroid_class, richardson_pushforward, Partition};
use positroids::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{CheckArg, ConvertArgs, FieldArg, Output, PosetArgs, QuantumArgs, ShapeArgs, StratifyArgs};

fn subsets_json<'a>(it: impl IntoIterator<Item = &'a Subset>) -> Value {
    Value::from(it.into_iter().map(|s| s.elements().to_vec()).collect::<Vec<_>>())
}

fn subsets_text<'a>(it: impl IntoIterator<Item = &'a Subset>) -> String {
    it.into_iter().map(|s| s.to_string()).join(" ")
}

fn necklace_json(j: &Necklace) -> Value {
    subsets_json(j.states())
}

fn require_bounded(f: &AffinePermutation) -> Result<()> {
    if f.is_bounded() {
        Ok(())
    } else {
        Err(Error::NotBounded(f.to_string()))
    }
}

fn convert_input(a: &ConvertArgs) -> Result<AffinePermutation> {
    let given = [a.window.is_some(), a.siteswap.is_some(), a.necklace.is_some(), a.rank_matrix.is_some(), a.pair.is_some(), a.decorated.is_some()];
    if given.iter().filter(|&&g| g).count() != 1 {
        return Err(Error::Parse("give exactly one of a window, --siteswap, --necklace, --rank-matrix, --pair, --decorated".into()));
    }
    let need_k = || a.k.ok_or_else(|| Error::Parse("--k is required for this input".into()));
    if let Some(w) = &a.window {
        return parse_window(w);
    }
    if let Some(s) = &a.siteswap {
        let t = parse_siteswap(s)?;
        let total: i64 = t.throws().iter().sum();
        let len = t.throws().len() as i64;
        if total % len != 0 {
            return Err(Error::Parse(format!("throws of {t} do not average to an integer")));
        }
        return from_siteswap(&t, total / len);
    }
    if let Some(s) = &a.necklace {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = if t.contains(';') { t.split(';').count() } else { t.split(',').count() };
        let n = a.n.unwrap_or(parts);
        return necklace_to_affine(&Necklace::new(n, parse_necklace(n, s)?)?);
    }
    if let Some(s) = &a.rank_matrix {
        let rows: Vec<Vec<i64>> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("rank matrix: {e}")))?;
        return crm_to_affine(&CyclicRankMatrix::from_rows(rows.len(), need_k()?, rows)?);
    }
    if let Some(p) = &a.pair {
        let (u, w) = (parse_permutation(&p[0])?, parse_permutation(&p[1])?);
        return from_pair(&KBruhatPair::new(u, w, need_k()?)?);
    }
    let d = a.decorated.as_deref().expect("one input is present");
    from_decorated(&parse_decorated(d)?)
}

pub(crate) fn convert(a: &ConvertArgs) -> Result<Output> {
    let f = convert_input(a)?;
    require_bounded(&f)?;
    let (n, k) = (f.n(), f.ball_number() as usize);
    if a.n.is_some_and(|m| m != n) || a.k.is_some_and(|m| m != k) {
        return Err(Error::SizeMismatch(format!("input describes Bound({k},{n})")));
    }
    let throws = siteswap_of(&f)?;
    let states = states_of(&f)?;
    let labels = states.to_grassmann_labels();
    let crm = crm_from_affine(&f)?;
    let pair = to_pair(&f)?;
    let decorated = to_decorated(&f)?;
    let positroid = Positroid::from_perm(&f)?;
    let bases = positroid.matroid.bases();
    let json = json!({
        "k": k,
        "n": n,
        "window": f.window(),
        "siteswap": throws.to_string(),
        "necklace": necklace_json(&states),
        "grassmann_necklace": subsets_json(&labels),
        "rank_matrix": crm.rows(),
        "pair": { "u": pair.u.values(), "w": pair.w.values() },
        "decorated": decorated.to_string(),
        "length": f.length(),
        "bases": subsets_json(bases),
    });
    let text = [
        format!("window: {f}"),
        format!("k: {k}, n: {n}, length: {}", f.length()),
        format!("siteswap: {throws}"),
        format!("necklace: {states}"),
        format!("grassmann necklace: ({})", labels.iter().join(",")),
        format!("rank matrix: {}", crm.rows().iter().map(|r| r.iter().join(" ")).join(" | ")),
        format!("pair: {} {}", pair.u, pair.w),
        format!("decorated: {decorated}"),
        format!("bases: {}", subsets_text(bases)),
    ]
    .join("\n");
    Ok(Output::new(json, text))
}

pub(crate) fn enumerate(a: &ShapeArgs) -> Result<Output> {
    let p = build_bound_poset_with_cap(a.k, a.n, a.max_n)?;
    let rows = p
        .elements()
        .iter()
        .map(|f| Ok((f, siteswap_of(f)?)))
        .collect::<Result<Vec<_>>>()?;
    let json = json!({
        "k": a.k,
        "n": a.n,
        "count": p.len(),
        "elements": rows.iter().map(|(f, t)| json!({
            "window": f.window(),
            "siteswap": t.to_string(),
            "length": f.length(),
        })).collect::<Vec<_>>(),
    });
    let mut text = format!("Bound({},{}): {} elements", a.k, a.n, p.len());
    for (f, t) in &rows {
        text.push_str(&format!("\n{f} {t} {}", f.length()));
    }
    Ok(Output::new(json, text))
}

pub(crate) fn poset(a: &PosetArgs) -> Result<Output> {
    let p = build_bound_poset_with_cap(a.shape.k, a.shape.n, a.shape.max_n)?;
    if a.dot {
        let dot = p.to_dot();
        return Ok(Output::new(json!({ "dot": dot }), dot.trim_end().to_string()));
    }
    let export = p.to_export();
    let eulerian = p.verify_eulerian();
    let json = json!({
        "k": export.k,
        "n": export.n,
        "size": p.len(),
        "rank_sizes": p.rank_sizes(),
        "rotation_orbits": p.rotation_orbits().len(),
        "eulerian": eulerian,
        "elements": export.elements,
        "lengths": export.lengths,
        "covers": export.covers,
    });
    let text = [
        format!("Bound({},{}): {} elements", a.shape.k, a.shape.n, p.len()),
        format!("rank sizes: {}", p.rank_sizes().iter().join(" ")),
        format!("rotation orbits: {}", p.rotation_orbits().len()),
        format!("cover relations: {}", export.covers.len()),
        format!("eulerian: {eulerian}"),
    ]
    .join("\n");
    let mut out = Output::new(json, text);
    out.failed = !eulerian;
    Ok(out)
}

fn field_of(kind: FieldArg, p: Option<u64>) -> Result<Field> {
    match (kind, p) {
        (FieldArg::Q, _) => Ok(Field::Rational),
        (FieldArg::Fp, Some(p)) => Field::prime(p),
        (FieldArg::Fp, None) => Err(Error::InvalidScalar("--field Fp needs --p".into())),
    }
}

fn parse_csv(text: &str, kind: FieldArg, p: Option<u64>) -> Result<MatrixInput> {
    let entries: Vec<Vec<String>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(|e| e.trim().to_string()).collect())
        .collect();
    let n = entries.first().map_or(0, Vec::len);
    if entries.iter().any(|r| r.len() != n) {
        return Err(Error::SizeMismatch("CSV rows have different lengths".into()));
    }
    let field = match kind {
        FieldArg::Q => "Q",
        FieldArg::Fp => "Fp",
    };
    Ok(MatrixInput { k: entries.len(), n, field: field.into(), p, entries })
}

fn load_matrix(a: &StratifyArgs) -> Result<ExactMatrix> {
    if a.random {
        let (k, n) = (a.k.expect("clap requires k"), a.n.expect("clap requires n"));
        if k > n {
            return Err(Error::SizeMismatch(format!("k = {k} exceeds n = {n}")));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        return Ok(random_matrix(k, n, field_of(a.field, a.p)?, &mut rng));
    }
    let path = a.file.as_ref().ok_or_else(|| Error::Parse("give a matrix file or --random".into()))?;
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
    let input = if is_json {
        serde_json::from_str::<MatrixInput>(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
    } else {
        parse_csv(&text, a.field, a.p)?
    };
    input.to_matrix()
}

pub(crate) fn stratify(a: &StratifyArgs) -> Result<Output> {
    let m = load_matrix(a)?;
    let f = affine_perm_of_matrix(&m);
    let necklace = pivotal_necklace(&m);
    let matroid = matroid_of_matrix(&m);
    let env = envelope(&matroid)?;
    if env.perm != f || env.necklace != necklace {
        return Err(Error::Invariant(format!("envelope {} disagrees with {f}", env.perm)));
    }
    let v = pluecker(&m);
    let membership = stratum_membership(&v, &f)?;
    let mut json = json!({
        "k": m.k(),
        "n": m.n(),
        "field": m.field().to_string(),
        "f": f.window(),
        "necklace": necklace_json(&necklace),
        "matroid": subsets_json(matroid.bases()),
        "is_positroid": env.matroid == matroid,
        "positroid_envelope": { "f": env.perm.window(), "bases": subsets_json(env.matroid.bases()) },
        "membership": membership,
        "nonzero_pluckers": v,
    });
    if a.random {
        json["matrix"] = serde_json::to_value(m.entries()).expect("scalars serialize");
    }
    let mut lines = Vec::new();
    if a.random {
        lines.push(format!("matrix: {}", m.entries().iter().map(|r| r.iter().join(" ")).join(" | ")));
    }
    lines.extend([
        format!("field: {}", m.field()),
        format!("f: {f}"),
        format!("necklace: {necklace}"),
        format!("matroid: {}", subsets_text(matroid.bases())),
        format!("positroid: {}", env.matroid == matroid),
        format!("envelope: {}", subsets_text(env.matroid.bases())),
        format!("nonzero pluckers: {}", v.nonzero().map(|(s, x)| format!("{s}={x}")).join(" ")),
    ]);
    Ok(Output::new(json, lines.join("\n")))
}

pub(crate) fn class(a: &crate::ClassArgs) -> Result<Output> {
    let f = parse_window(&a.window)?;
    require_bounded(&f)?;
    let c = positroid_class(&f)?;
    let mut json = json!({
        "f": f.window(),
        "k": c.k(),
        "n": c.n(),
        "class": c.to_string(),
        "terms": c.terms().iter().map(|(p, x)| json!({ "partition": p, "coeff": x })).collect::<Vec<_>>(),
    });
    let mut text = c.to_string();
    let mut failed = false;
    if a.check == Some(CheckArg::Oracle) {
        let oracle = richardson_pushforward(&to_pair(&f)?)?;
        let agrees = oracle == c;
        json["oracle"] = json!({ "class": oracle.to_string(), "agrees": agrees });
        text.push_str(&format!("\noracle: {oracle} ({})", if agrees { "agrees" } else { "DISAGREES" }));
        failed = !agrees;
    }
    let mut out = Output::new(json, text);
    out.failed = failed;
    Ok(out)
}

pub(crate) fn quantum(a: &QuantumArgs) -> Result<Output> {
    let (i, j) = (parse_subset(a.n, &a.i)?, parse_subset(a.n, &a.j)?);
    if i.len() != a.k {
        return Err(Error::InvalidTriple(format!("|I| = {} but k = {}", i.len(), a.k)));
    }
    let t = QuantumTriple::new(a.n, i, j, a.d)?;
    let f = f_of_triple(&t);
    let valid = is_valid(&t);
    let ts = t_set(&t);
    let boxes = toric_shape(&t).ok().map(|s| s.boxes());
    let mut json = json!({
        "f": f.window(),
        "valid": valid,
        "t_set": subsets_json(&ts),
        "shape_boxes": boxes,
    });
    let mut lines = vec![
        format!("f: {f}"),
        format!("valid: {valid}"),
        format!("t_set ({}): {}", ts.len(), subsets_text(&ts)),
        format!("shape boxes: {}", boxes.map_or("none".into(), |b| b.to_string())),
    ];
    let mut failed = false;
    let gw = match &a.k_set {
        Some(s) => {
            let kk = parse_subset(a.n, s)?;
            let g = gw_invariant(&t, &kk)?;
            json["gw"] = json!(g);
            lines.push(format!("gw: {g}"));
            Some((kk, g))
        }
        None => None,
    };
    if a.check == Some(CheckArg::Oracle) {
        let mut agrees = true;
        if valid {
            let positroid = Positroid::from_perm(&f)?;
            agrees &= positroid.matroid.bases() == &ts && boxes == Some(f.length());
        }
        if let Some((kk, g)) = &gw {
            let (lj, li, lk) =
                (Partition::from_subset(t.j()), Partition::from_subset(&opposite(t.i(), a.n)), Partition::from_subset(kk));
            let o = gw_oracle(&lj, &li, &lk, a.d, a.k, a.n);
            json["oracle_gw"] = json!(o);
            lines.push(format!("oracle gw: {o}"));
            agrees &= o == *g;
        }
        json["oracle_agrees"] = json!(agrees);
        lines.push(format!("oracle: {}", if agrees { "agrees" } else { "DISAGREES" }));
        failed = !agrees;
    }
    let mut out = Output::new(json, lines.join("\n"));
    out.failed = failed;
    Ok(out)
}
