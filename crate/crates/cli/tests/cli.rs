use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn tripts(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tripts"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn p(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

fn kv(text: &str, key: &str) -> Option<String> {
    text.lines()
        .find_map(|l| l.strip_prefix(&format!("{key}=")).map(str::to_string))
}

#[test]
fn generate_random_writes_n_points() {
    let d = TempDir::new().unwrap();
    let f = p(&d, "p.pts");
    let o = tripts(&["generate", "--random", "-n", "30", "--seed", "1", "-o", &f]);
    assert!(o.status.success(), "{o:?}");
    let text = fs::read_to_string(&f).unwrap();
    assert!(text.starts_with("tripts v1 30\n"));
    assert_eq!(text.lines().count(), 31);
    let again = tripts(&["generate", "--random", "-n", "30", "--seed", "1"]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn generate_families() {
    let t = tripts(&["generate", "--tight", "-m", "5"]);
    assert!(stdout(&t).starts_with("tripts v1 15\n"));
    let c = tripts(&["generate", "--three-connected", "-m", "5"]);
    assert!(stdout(&c).starts_with("tripts v1 18\n"));
    let v = tripts(&["generate", "--tight", "-m", "5", "--drop", "a0b0"]);
    assert!(stdout(&v).starts_with("tripts v1 13\n"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["generate", "--random"][..],
        &["generate", "--random", "--tight", "-n", "3"],
        &["generate", "--tight", "-n", "3"],
        &["generate", "--tight", "-m", "3"],
        &["generate", "--random", "-n", "4", "--resolution", "1"],
        &["bogus"],
    ] {
        assert_eq!(tripts(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn analyze_tight_instance_passes_with_kv_report() {
    let d = TempDir::new().unwrap();
    let f = p(&d, "tight.pts");
    let r = p(&d, "report.kv");
    assert!(tripts(&["generate", "--tight", "-m", "5", "-o", &f]).status.success());
    let o = tripts(&["analyze", &f, "-o", &r]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = fs::read_to_string(&r).unwrap();
    assert_eq!(kv(&text, "check.matching.down.size").as_deref(), Some("5"));
    assert_eq!(kv(&text, "check.matching.bound").as_deref(), Some("5"));
    assert_eq!(kv(&text, "status").as_deref(), Some("PASS"));
    assert_eq!(kv(&text, "generator").as_deref(), Some("tight"));
}

#[test]
fn analyze_random_edge_bound() {
    let d = TempDir::new().unwrap();
    let f = p(&d, "r.pts");
    let r = p(&d, "r.kv");
    assert!(tripts(&["generate", "--random", "-n", "40", "--seed", "3", "-o", &f])
        .status
        .success());
    let o = tripts(&[
        "analyze",
        &f,
        "--checks",
        "edge-bound,matching",
        "--seed",
        "3",
        "-o",
        &r,
    ]);
    assert!(o.status.success());
    let text = fs::read_to_string(&r).unwrap();
    assert_eq!(kv(&text, "check.edge-bound.status").as_deref(), Some("PASS"));
    assert_eq!(kv(&text, "seed").as_deref(), Some("3"));
    assert!(kv(&text, "check.oracle.status").is_none());
}

#[test]
fn bad_input_exit_codes() {
    let d = TempDir::new().unwrap();
    let dup = p(&d, "dup.pts");
    fs::write(&dup, "tripts v1 2\n1/1 1/1\n1/1 1/1\n").unwrap();
    assert_eq!(tripts(&["analyze", &dup]).status.code(), Some(3));
    // horizontal pair violates general position
    let flat = p(&d, "flat.pts");
    fs::write(&flat, "tripts v1 2\n0/1 0/1\n1/1 0/1\n").unwrap();
    assert_eq!(tripts(&["analyze", &flat]).status.code(), Some(3));
    let garbage = p(&d, "garbage.pts");
    fs::write(&garbage, "hello\n").unwrap();
    assert_eq!(tripts(&["match", &garbage]).status.code(), Some(3));
    let missing = p(&d, "missing.pts");
    assert_eq!(tripts(&["render", &missing]).status.code(), Some(4));
    let ok = p(&d, "ok.pts");
    fs::write(&ok, "tripts v1 2\n0/1 0/1\n1/1 1/1\n").unwrap();
    assert_eq!(tripts(&["analyze", &ok, "--checks", "nope"]).status.code(), Some(2));
}

#[test]
fn match_and_export() {
    let d = TempDir::new().unwrap();
    let f = p(&d, "c.pts");
    let g = p(&d, "c.graph");
    assert!(tripts(&["generate", "--three-connected", "-m", "5", "-o", &f])
        .status
        .success());
    let o = tripts(&["match", &f, "-o", &g]);
    assert!(o.status.success());
    assert_eq!(kv(&stdout(&o), "matching").as_deref(), Some("8"));
    assert!(fs::read_to_string(&g).unwrap().starts_with("down\n"));
    let small = p(&d, "s.pts");
    assert!(
        tripts(&["generate", "--random", "-n", "12", "--seed", "9", "-o", &small])
            .status
            .success()
    );
    let o = tripts(&["match", &small, "--brute", "--flavor", "union"]);
    assert!(o.status.success());
    assert_eq!(kv(&stdout(&o), "brute_force"), kv(&stdout(&o), "matching"));
}

#[test]
fn augment_reports_pass() {
    let d = TempDir::new().unwrap();
    let f = p(&d, "a.pts");
    let out = p(&d, "a.edges");
    assert!(tripts(&["generate", "--random", "-n", "25", "--seed", "4", "-o", &f])
        .status
        .success());
    let o = tripts(&["augment", &f, "-o", &out]);
    let s = stdout(&o);
    assert!(o.status.success(), "{s}");
    assert_eq!(kv(&s, "nishizeki").as_deref(), Some("ok"));
    assert!(fs::read_to_string(&out).unwrap().lines().count() > 25);
}

#[test]
fn conjecture_search_is_deterministic() {
    let d = TempDir::new().unwrap();
    let dump = p(&d, "cx");
    let args = [
        "conjecture-search",
        "--trials",
        "30",
        "--n-min",
        "4",
        "--n-max",
        "20",
        "--seed",
        "2",
        "--dump-dir",
        &dump,
    ];
    let a = tripts(&args);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&tripts(&args)));
    assert_eq!(kv(&stdout(&a), "trials").as_deref(), Some("30"));
    let empty = tripts(&["conjecture-search", "--trials", "0"]);
    assert!(empty.status.success());
    assert_eq!(kv(&stdout(&empty), "counterexamples").as_deref(), Some("0"));
    assert!(!Path::new(&dump).exists() || kv(&stdout(&a), "counterexamples").as_deref() != Some("0"));
}

#[test]
fn render_svg() {
    let d = TempDir::new().unwrap();
    let f = p(&d, "two.pts");
    fs::write(&f, "tripts v1 2\n0/1 0/1\n3/1 1/1\n").unwrap();
    let o = tripts(&["render", &f]);
    let svg = stdout(&o);
    assert!(o.status.success());
    assert_eq!(svg.matches("<circle").count(), 2);
    assert_eq!(svg.matches("<line").count(), 1);

    let t = p(&d, "t.pts");
    let s = p(&d, "t.svg");
    assert!(tripts(&["generate", "--tight", "-m", "5", "-o", &t]).status.success());
    assert!(tripts(&["render", &t, "-o", &s]).status.success());
    let svg = fs::read_to_string(&s).unwrap();
    assert_eq!(svg.matches(r#"class="matching""#).count(), 5);

    let tri = p(&d, "tri.pts");
    fs::write(&tri, "tripts v1 3\n0/1 0/1\n4/1 1/1\n1/1 3/1\n").unwrap();
    let svg = stdout(&tripts(&["render", &tri, "--show-triangles"]));
    let k = svg.matches("<polygon").count();
    assert!((2..=3).contains(&k), "{k}");
}
