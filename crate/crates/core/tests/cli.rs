use std::path::Path;
use std::process::{Command, Output};

use p5w4::harness::io::{write_dimacs, write_edge_list};
use p5w4::Graph;

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p5w4")).args(args).current_dir(dir).output().expect("binary runs")
}

fn json(o: &Output) -> serde_json::Value {
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("json on stdout")
}

#[test]
fn color_with_audit_and_exact_check() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("w5.col"), write_dimacs(&Graph::wheel(5))).unwrap();
    let out = json(&run(&["color", "w5.col", "--audit", "audit.json", "--exact-check"], dir.path()));
    assert_eq!((out["count"].as_u64(), out["chi"].as_u64(), out["bound"].as_u64()), (Some(4), Some(4), Some(4)));
    let audit: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("audit.json")).unwrap()).unwrap();
    for key in ["schema_version", "graph", "decomposition", "classifications", "certificates", "coloring", "checks"] {
        assert!(audit.get(key).is_some(), "audit lacks {key}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p5.txt"), write_edge_list(&Graph::path(5))).unwrap();
    assert_eq!(run(&["color", "p5.txt"], dir.path()).status.code(), Some(2));
    std::fs::write(dir.path().join("c5.txt"), write_edge_list(&Graph::cycle(5))).unwrap();
    assert_eq!(run(&["--max-exact-n", "3", "color", "c5.txt", "--exact-check"], dir.path()).status.code(), Some(3));
    std::fs::write(dir.path().join("bad.col"), "p edge 2 1\ne 1 3\n").unwrap();
    assert_eq!(run(&["color", "bad.col"], dir.path()).status.code(), Some(1));
}

#[test]
fn gen_then_classify() {
    let dir = tempfile::tempdir().unwrap();
    let g = run(&["gen", "hstar", "--sizes", "1,1,1,1,1,1,1,1,1"], dir.path());
    assert!(g.status.success());
    std::fs::write(dir.path().join("h.col"), &g.stdout).unwrap();
    let out = json(&run(&["classify", "h.col"], dir.path()));
    let atoms = out["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 1);
    assert_eq!(atoms[0]["classification"]["trigger"], "c7c_no_c5");
    assert_eq!(atoms[0]["classification"]["tag"]["kind"], "nice");
}

#[test]
fn recognize_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("p5.txt"), write_edge_list(&Graph::path(5))).unwrap();
    let out = json(&run(&["recognize", "p5.txt", "--pattern", "P5"], dir.path()));
    assert_eq!(out["found"], true);
    let out = json(&run(&["decompose", "p5.txt"], dir.path()));
    assert_eq!(out["components"][0]["atoms"].as_array().unwrap().len(), 4);
}

#[test]
fn gen_random_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(&["gen", "random", "--n", "9", "--seed", "5", "--structured", "--format", "edges"], dir.path());
    let b = run(&["gen", "random", "--n", "9", "--seed", "5", "--structured", "--format", "edges"], dir.path());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let seeded = Command::new(env!("CARGO_BIN_EXE_p5w4"))
        .args(["gen", "random", "--n", "9", "--structured", "--format", "edges"])
        .env("P5W4_SEED", "5")
        .output()
        .unwrap();
    assert_eq!(seeded.stdout, a.stdout);
}

#[test]
fn verify_corpus_skips_non_members() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus");
    std::fs::create_dir(&corpus).unwrap();
    std::fs::write(corpus.join("a.col"), write_dimacs(&Graph::cycle(5))).unwrap();
    std::fs::write(corpus.join("b.col"), write_dimacs(&Graph::path(5))).unwrap();
    std::fs::write(corpus.join("c.txt"), write_edge_list(&Graph::wheel(5))).unwrap();
    let out = json(&run(&["verify", "--corpus", "corpus"], dir.path()));
    assert_eq!(out["counts"]["passed"], 2);
    assert_eq!(out["counts"]["skipped"], 1);
    let out = json(&run(&["verify", "--exhaustive-n", "5", "--suites", "theorem1"], dir.path()));
    assert_eq!(out["counts"]["failed"], 0);
}
