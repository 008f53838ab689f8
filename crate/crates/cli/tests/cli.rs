use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_positroids"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

/// Compares against the committed file; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let got = stdout(args);
    serde_json::from_str::<serde_json::Value>(&got).expect("output is JSON");
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &got).unwrap();
    }
    let want = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name}");
}

fn json(args: &[&str]) -> serde_json::Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn golden_outputs() {
    golden("convert_2358.json", &["convert", "[2,3,5,8]", "--json"]);
    golden("convert_pair.json", &["convert", "--pair", "21543", "54312", "--k", "2", "--json"]);
    golden("class_5274.json", &["class", "[5,2,7,4]", "--json", "--check", "oracle"]);
    golden("class_3456.json", &["class", "[3,4,5,6]", "--json"]);
    golden("quantum_n5.json", &["quantum", "--k", "2", "--n", "5", "--I", "1,4", "--J", "1,4", "--d", "1", "--json"]);
    golden("quantum_n6.json", &["quantum", "--k", "2", "--n", "6", "--I", "1,4", "--J", "2,4", "--d", "1", "--json"]);
    golden("stratify_e12.json", &["stratify", "tests/data/e12.csv", "--json"]);
    golden("stratify_generic.json", &["stratify", "tests/data/generic.csv", "--json"]);
    golden("stratify_f7.json", &["stratify", "tests/data/f7.json", "--json"]);
}

#[test]
fn convert_examples() {
    let v = json(&["convert", "[2,3,5,8]", "--json"]);
    assert_eq!(v["siteswap"], "1124");
    assert_eq!(v["necklace"], serde_json::json!([[1, 4], [1, 3], [1, 2], [1, 2]]));
    assert_eq!(v["decorated"], "2314/+4");
    let v = json(&["convert", "--pair", "21543", "54312", "--k", "2", "--json"]);
    assert_eq!(v["window"], serde_json::json!([4, 3, 5, 6, 7]));
    for input in [
        vec!["convert", "--siteswap", "4112"],
        vec!["convert", "--necklace", "(14,13,12,12)"],
        vec!["convert", "--decorated", "2314/+4"],
        vec!["convert", "--rank-matrix", "[[1,1,1,2,2],[1,1,2,2,2],[1,2,2,2,2],[1,2,2,2,2]]", "--k", "2"],
    ] {
        let mut args = input.clone();
        args.push("--json");
        let v = json(&args);
        let siteswap = v["siteswap"].as_str().unwrap().to_string();
        assert!(["1124", "4112", "2411", "1241"].contains(&siteswap.as_str()), "{input:?}: {siteswap}");
    }
}

#[test]
fn stratify_and_class_text() {
    assert!(stdout(&["stratify", "tests/data/generic.csv"]).contains("f: [3,4,5,6]"));
    assert!(stdout(&["stratify", "tests/data/e12.csv"]).contains("f: [5,6,3,4]"));
    assert!(stdout(&["stratify", "tests/data/rational.json"]).contains("field: Q"));
    assert_eq!(stdout(&["class", "[5,2,7,4]"]).trim(), "s[2,2]");
    assert_eq!(stdout(&["class", "[3,4,5,6]"]).trim(), "1");
    let q = json(&["quantum", "--k", "2", "--n", "5", "--I", "1,4", "--J", "1,4", "--d", "1", "--json"]);
    assert_eq!(q["t_set"].as_array().unwrap().len(), 9);
    let a = json(&["stratify", "--random", "--k", "3", "--n", "6", "--seed", "7", "--json"]);
    let b = json(&["stratify", "--random", "--k", "3", "--n", "6", "--seed", "7", "--json"]);
    assert_eq!(a, b);
}

#[test]
fn invalid_input_exits_with_one() {
    let cases: [(&[&str], &str); 6] = [
        (&["convert", "--necklace", "(14,12,12,12)"], "step 1"),
        (&["convert", "--rank-matrix", "[[1,1,1,2,2],[1,1,2,2,2],[1,2,2,2,2],[1,2,2,2,1]]", "--k", "2"], "violated at"),
        (&["convert", "[2,3,5,9]"], "affine permutation"),
        (&["quantum", "--k", "2", "--n", "4", "--I", "1,2", "--J", "1,2", "--d", "3"], "exceeds"),
        (&["poset", "--k", "2", "--n", "9"], "cap"),
        (&["convert", "--bogus"], "unexpected argument"),
    ];
    for (args, needle) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn enumerate_poset_and_selftest() {
    let v = json(&["enumerate", "--k", "2", "--n", "4", "--json"]);
    assert_eq!(v["count"], 33);
    let v = json(&["poset", "--k", "2", "--n", "4", "--json"]);
    assert_eq!(v["rotation_orbits"], 10);
    assert_eq!(v["eulerian"], true);
    assert!(stdout(&["poset", "--k", "1", "--n", "3", "--dot"]).starts_with("digraph"));
    let v = json(&["selftest", "--json"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["results"].as_array().unwrap().len(), 16);
}
