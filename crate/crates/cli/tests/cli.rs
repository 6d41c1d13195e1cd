use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;

fn run(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_adjnorm")).args(args).output().expect("binary runs");
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)));
    (out.status.code().unwrap(), v)
}

fn scratch(name: &str, v: &Value) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("adjnorm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, serde_json::to_string(v).unwrap()).unwrap();
    p
}

#[test]
fn adjoint_of_fixture() {
    let (code, v) = run(&["adjoint", "--fixture", "sympl2-3"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["has_star"], true);
    assert_eq!(v["seed"], 1);
}

#[test]
fn oracle_and_strategies_agree() {
    let (_, v) = run(&["oracle", "pseudo", "--fixture", "heis-3"]);
    assert_eq!(v["order"], "48");
    for strategy in ["structural", "brute"] {
        let (code, v) = run(&["pseudo", "--fixture", "heis-3", "--strategy", strategy]);
        assert_eq!(code, 0);
        assert_eq!(v["order"], "48", "{strategy}");
        let (_, v) = run(&["normalizer", "--fixture", "sympl2-3", "--strategy", strategy]);
        assert_eq!(v["order"], "96", "{strategy}");
        let (_, v) = run(&["star-normalizer", "--fixture", "sympl2-3", "--strategy", strategy]);
        assert_eq!(v["order"], "48", "{strategy}");
    }
    let (code, v) = run(&["pseudo", "--fixture", "heis-3", "--strategy", "magic"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "Input");
}

#[test]
fn error_codes() {
    let (code, v) = run(&["adjoint", "--fixture", "nope-3"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "Input");
    let (code, v) = run(&["oracle", "autotopisms", "--fixture", "sympl2-3", "--caps", "filter=10"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"], "CapExceeded");
    let (code, v) = run(&["star-normalizer", "--fixture", "sympl2-2"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "CharTwo");
}

#[test]
fn verify_suite_shape() {
    let (code, v) = run(&["verify", "--suite", "galois", "--trials", "10", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["passed"], 30);
    assert_eq!(v["seed"], 7);
    let (code, _) = run(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, 1);
}

#[test]
fn random_is_deterministic() {
    let args = ["random", "bimap", "--q", "3", "--a", "2", "--b", "3", "--w", "2", "--seed", "9"];
    let (_, x) = run(&args);
    let (_, y) = run(&args);
    assert_eq!(x, y);
    assert_eq!(x["instance"]["dims"]["a"], 2);
}

#[test]
fn pgroup_pseudo_from_file() {
    let g = serde_json::json!({"p": 5, "n": 2, "m": 1, "c": {"(1,2)": [1]}});
    let path = scratch("heis5.json", &g);
    let (code, v) = run(&["pgroup", "pseudo", "--in", path.to_str().unwrap(), "--surjective"]);
    assert_eq!(code, 0);
    assert_eq!(v["order"], "480");
    assert_eq!(v["hom_count"], "25");
    assert_eq!(v["aut_order"], "12000");
    let bad = serde_json::json!({"p": 5, "n": 2, "m": 1, "c": {"(1,1)": [1]}});
    let path = scratch("bad.json", &bad);
    let (code, v) = run(&["pgroup", "bimap", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "NotAlternating");
}

#[test]
fn quadstab_structural_matches_brute() {
    for seed in ["1", "2", "3"] {
        let (_, w) = run(&["random", "subspace", "--q", "3", "--w", "2", "--seed", seed]);
        let path = scratch(&format!("w{seed}.json"), &w["instance"]);
        let p = path.to_str().unwrap();
        let (c1, s) = run(&["quadstab", "--in", p]);
        let (c2, b) = run(&["quadstab", "--in", p, "--strategy", "brute"]);
        assert_eq!((c1, c2), (0, 0));
        assert_eq!(s["order"], b["order"]);
    }
}

#[test]
fn tensor_exterior_lattice_round_trip() {
    let (_, adj) = run(&["adjoint", "--fixture", "sympl2-3"]);
    let path = scratch("adj.json", &adj["algebra"]);
    let p = path.to_str().unwrap();
    let (code, t) = run(&["tensor", "--in", p]);
    assert_eq!(code, 0);
    assert_eq!(t["dim"], 1);
    let (_, e) = run(&["exterior", "--in", p]);
    assert_eq!(e["dims"]["w"], 1);
    let (_, l) = run(&["random", "bimap", "--seed", "4"]);
    let (_, r) = run(&["random", "bimap", "--seed", "5"]);
    let pair = serde_json::json!({"left": l["instance"], "right": r["instance"]});
    let path = scratch("pair.json", &pair);
    let (code, m) = run(&["lattice", "meet", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(m["kernel_dim"].as_u64().unwrap() <= 3);
}

#[test]
fn writes_output_file() {
    let dir = std::env::temp_dir().join(format!("adjnorm-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("o.json");
    let status = Command::new(env!("CARGO_BIN_EXE_adjnorm"))
        .args(["oracle", "isometries", "--fixture", "sympl2-3", "--out", out.to_str().unwrap()])
        .status()
        .unwrap();
    assert!(status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["order"], "24");
}
