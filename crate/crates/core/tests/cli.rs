use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dinitz::galvin::{build_square_orientation, square_kernel_oracle};
use dinitz::kernel::{find_kernel_bruteforce, is_kernel};
use dinitz::VertexSet;

fn dinitz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dinitz")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const AB_INSTANCE: &str = r#"{"n": 2, "lists": [[["a","b"],["a","b"]],[["a","b"],["a","b"]]]}"#;

#[test]
fn solve_examples() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.json", r#"{"n":1,"lists":[[["x"]]]}"#);
    let out = dinitz(&["solve", s(&one)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{\"n\":1,\"grid\":[[\"x\"]]}\n");

    let ab = write(dir.path(), "ab.json", AB_INSTANCE);
    let sol = dir.path().join("ab.sol.json");
    let out = dinitz(&["solve", s(&ab), "--output", s(&sol)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&sol).unwrap(), "{\"n\":2,\"grid\":[[\"b\",\"a\"],[\"a\",\"b\"]]}\n");
}

#[test]
fn solve_rejects_undersized_list_naming_the_cell() {
    let dir = tempfile::tempdir().unwrap();
    let abc = r#"["a","b","c"]"#;
    let text = format!(
        r#"{{"n":3,"lists":[[{abc},{abc},{abc}],[{abc},{abc},["a","b"]],[{abc},{abc},{abc}]]}}"#
    );
    let inst = write(dir.path(), "small.json", &text);
    let out = dinitz(&["solve", s(&inst)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cell (1, 2)"), "{}", stderr(&out));
    assert!(out.stdout.is_empty());
}

#[test]
fn solve_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"n\": 2}");
    assert_eq!(dinitz(&["solve", s(&bad)]).status.code(), Some(2));
    let shape = write(dir.path(), "shape.json", r#"{"n":2,"lists":[[["a"]]]}"#);
    assert_eq!(dinitz(&["solve", s(&shape)]).status.code(), Some(2));
    assert_eq!(dinitz(&["solve", "/nonexistent/instance.json"]).status.code(), Some(2));
}

#[test]
fn duplicate_labels_warn_unless_quiet() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "dup.json", r#"{"n":1,"lists":[[["x","x"]]]}"#);
    let out = dinitz(&["solve", s(&inst)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
    let out = dinitz(&["--quiet", "solve", s(&inst)]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).is_empty());
}

#[test]
fn verify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write(dir.path(), "ab.json", AB_INSTANCE);
    let good = write(dir.path(), "good.json", r#"{"n":2,"grid":[["b","a"],["a","b"]]}"#);
    let out = dinitz(&["verify", s(&inst), s(&good)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "valid\n");

    let rows = write(dir.path(), "rows.json", r#"{"n":2,"grid":[["a","a"],["b","b"]]}"#);
    let out = dinitz(&["verify", s(&inst), s(&rows)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("row 0"), "{}", stdout(&out));

    let foreign = write(dir.path(), "foreign.json", r#"{"n":2,"grid":[["z","a"],["a","b"]]}"#);
    let out = dinitz(&["verify", s(&inst), s(&foreign)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("\"z\" is not in its list"), "{}", stdout(&out));

    let small = write(dir.path(), "small.json", r#"{"n":1,"grid":[["a"]]}"#);
    assert_eq!(dinitz(&["verify", s(&inst), s(&small)]).status.code(), Some(2));
}

#[test]
fn orient_examples() {
    assert_eq!(stdout(&dinitz(&["orient", "1"])), "1 0\n");
    assert_eq!(stdout(&dinitz(&["orient", "2"])), "4 4\n0 1\n1 3\n2 0\n3 2\n");
    let n3 = stdout(&dinitz(&["orient", "3"]));
    assert_eq!(n3.lines().next(), Some("9 18"));
    assert_eq!(n3.lines().count(), 19);
    assert_eq!(stdout(&dinitz(&["orient", "0"])), "0 0\n");
}

#[test]
fn propx_examples() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(dir.path(), "c3.txt", "3 3\n0 1\n1 2\n2 0\n");
    let out = dinitz(&["propx", s(&c3)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "fails {0,1,2}\n");

    let sq = write(dir.path(), "sq.txt", &stdout(&dinitz(&["orient", "2"])));
    let out = dinitz(&["propx", s(&sq)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "holds\n");

    let big = write(dir.path(), "big.txt", "25 0\n");
    assert_eq!(dinitz(&["propx", s(&big)]).status.code(), Some(2));
    let edgeless = write(dir.path(), "edgeless.txt", "12 0\n");
    assert_eq!(dinitz(&["propx", s(&edgeless), "--max-vertices", "11"]).status.code(), Some(2));
    assert_eq!(dinitz(&["propx", s(&edgeless), "--max-vertices", "12"]).status.code(), Some(0));

    let garbage = write(dir.path(), "garbage.txt", "2 1\n0 0\n");
    assert_eq!(dinitz(&["propx", s(&garbage)]).status.code(), Some(2));
}

#[test]
fn kernel_examples() {
    let dir = tempfile::tempdir().unwrap();
    let edge = write(dir.path(), "edge.txt", "2 1\n0 1\n");
    let out = dinitz(&["kernel", s(&edge), "0,1"]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "1\n".into()));

    let c3 = write(dir.path(), "c3.txt", "3 3\n0 1\n1 2\n2 0\n");
    let out = dinitz(&["kernel", s(&c3), "all"]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(1), "none\n".into()));

    let sq = write(dir.path(), "sq.txt", &stdout(&dinitz(&["orient", "2"])));
    let out = dinitz(&["kernel", s(&sq), "0,1,2,3", "--mode", "gs-square"]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "1,2\n".into()));
    let out = dinitz(&["kernel", s(&sq), "@0,0@0,1", "--mode", "gs-square"]);
    assert_eq!((out.status.code(), stdout(&out)), (Some(0), "1\n".into()));

    assert_eq!(dinitz(&["kernel", s(&c3), "all", "--mode", "gs-square"]).status.code(), Some(2));
    assert_eq!(dinitz(&["kernel", s(&c3), "0,9"]).status.code(), Some(2));
    assert_eq!(dinitz(&["kernel", s(&c3), "0;1"]).status.code(), Some(2));
}

#[test]
fn gen_examples() {
    let args = ["gen", "--n", "2", "--universe", "4", "--list-size", "2", "--seed", "42"];
    let a = dinitz(&args);
    let b = dinitz(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);

    let forced = stdout(&dinitz(&["gen", "--n", "3", "--universe", "3", "--list-size", "3", "--seed", "5"]));
    assert_eq!(forced.matches(r#"["c0","c1","c2"]"#).count(), 9);

    assert_eq!(dinitz(&["gen", "--n", "2", "--universe", "1", "--list-size", "2"]).status.code(), Some(2));
    assert_eq!(dinitz(&["gen", "--n", "3", "--universe", "4", "--list-size", "2"]).status.code(), Some(2));
    let out = dinitz(&["gen", "--n", "3", "--universe", "4", "--list-size", "2", "--allow-undersized"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning"));
}

#[test]
fn gen_solve_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (n, seed) in [(1, 3), (4, 11), (6, 99)] {
        let (ns, us, ss) = (n.to_string(), (2 * n + 1).to_string(), seed.to_string());
        let out = dinitz(&["gen", "--n", &ns, "--universe", &us, "--list-size", &ns, "--seed", &ss]);
        let inst = write(dir.path(), &format!("i{n}.json"), &stdout(&out));
        let sol = dir.path().join(format!("s{n}.json"));
        assert_eq!(dinitz(&["solve", s(&inst), "-o", s(&sol)]).status.code(), Some(0));
        assert_eq!(dinitz(&["verify", s(&inst), s(&sol)]).status.code(), Some(0));
    }
}

#[test]
fn kernel_modes_agree_up_to_validity() {
    for n in 1..=3 {
        let g = build_square_orientation(n);
        for mask in 0u64..1 << (n * n) {
            let s = VertexSet::from_mask(mask);
            let gs = square_kernel_oracle(n, &s);
            let bf = find_kernel_bruteforce(&g, &s).unwrap().expect("square orientation has kernels");
            assert!(is_kernel(&g, &s, &gs).unwrap());
            assert!(is_kernel(&g, &s, &bf).unwrap());
        }
    }
}
