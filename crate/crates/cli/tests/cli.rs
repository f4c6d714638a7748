//! Subcommand examples, run both in-process and through the binary.

use compat_cli::{run, Output};
use compat_core::dp::AdjacencyMatrix;
use compat_core::oracles::{recursive_count, visibility_graph};
use std::path::{Path, PathBuf};
use std::process::Command;
use tempfile::TempDir;

const SQUARE: &str = "4\n0 0\n1 0\n1 1\n0 1\n";
const TRIANGLE: &str = "3\n0 0\n3 0\n0 3\n";
const BOWTIE: &str = "4\n0 0\n2 2\n2 0\n0 2\n";
const L_HEXAGON: &str = "6\n0 0\n2 0\n2 1\n1 1\n1 2\n0 2\n";
// the L-hexagon renumbered to start at its second corner
const L_SHIFTED: &str = "6\n2 0\n2 1\n1 1\n1 2\n0 2\n0 0\n";
const DART: &str = "4\n0 0\n4 0\n1 1\n0 4\n";
const CONVEX_6: &str = "6\n4 0\n8 0\n10 4\n8 8\n4 8\n2 4\n";

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let path = self.0.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn compat(args: &[&str]) -> Output {
    run(std::iter::once("compat").chain(args.iter().copied()))
}

fn read(path: impl AsRef<Path>) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn triangulate_examples() {
    let d = Dir::new();
    let out = d.path("t.txt");
    let r = compat(&["triangulate", &d.file("sq", SQUARE), "-o", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert_eq!(read(&out), "0 2\n");
    let r = compat(&["--oracle", "triangulate", &d.file("tri", TRIANGLE)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, ""));
    let r = compat(&["triangulate", &d.file("bow", BOWTIE)]);
    assert_eq!(r.code, 2);
    assert_eq!(r.stderr.trim(), "NotSimple(0,2)");
}

#[test]
fn parse_errors_name_the_line() {
    let d = Dir::new();
    let r = compat(&["triangulate", &d.file("bad", "4\n0 0\n1 0\n1 one\n0 1\n")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("line 4:"), "{}", r.stderr);
    let r = compat(&["triangulate", &d.path("missing").to_string_lossy()]);
    assert_eq!(r.code, 2);
}

#[test]
fn visquery_examples() {
    let d = Dir::new();
    let l = d.file("l", L_HEXAGON);
    let r = compat(&["--oracle", "visquery", &l, "1", "4"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "false\n"));
    let sq = d.file("sq", SQUARE);
    let r = compat(&["visquery", &sq, "--all", "--oracle"]);
    assert_eq!(r.code, 0);
    let table: Vec<Vec<bool>> =
        r.stdout.lines().map(|l| l.split(' ').map(|c| c == "1").collect()).collect();
    assert_eq!(table.iter().map(Vec::len).sum::<usize>(), 16);
    let square = compat_core::Polygon::validate(
        [(0, 0), (1, 0), (1, 1), (0, 1)].iter().map(|&(x, y)| compat_core::Point::new(x, y)).collect(),
    )
    .unwrap();
    assert_eq!(table, visibility_graph(&square));
    assert_eq!(compat(&["visquery", &sq, "2", "2"]).code, 2);
    assert_eq!(compat(&["visquery", &sq, "0", "7"]).code, 2);
    assert_eq!(compat(&["visquery", &sq]).code, 2);
}

#[test]
fn rotation_search_examples() {
    let d = Dir::new();
    let sq = d.file("sq", SQUARE);
    let t = d.file("t", "0 2\n");
    let witnesses = d.path("w");
    let r = compat(&["--oracle", "rotation-search", &sq, &t, &d.file("dart", DART), "--witness-dir", witnesses.to_str().unwrap()]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "0 2\n"));
    assert_eq!(read(witnesses.join("rotation_0.txt")), "0 2\n");
    assert_eq!(read(witnesses.join("rotation_2.txt")), "0 2\n");

    let l = d.file("l", L_HEXAGON);
    let tl = d.file("tl", "0 2\n0 3\n3 5\n");
    let r = compat(&["--oracle", "rotation-search", &l, &tl, &d.file("c6", CONVEX_6)]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "0 1 2 3 4 5\n"));
    let r = compat(&["rotation-search", &sq, &t, &l]);
    assert_eq!(r.code, 2);
    assert_eq!(compat(&["rotation-search", &sq, &d.file("bad", "1 3\n0 2\n"), &sq]).code, 2);
}

#[test]
fn compat_examples() {
    let d = Dir::new();
    let l = d.file("l", L_HEXAGON);
    let r = compat(&["--oracle", "compat", &l, &l]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("YES\n"));
    assert_eq!(r.stdout.lines().count(), 4);

    let r = compat(&["--oracle", "compat", &l, &d.file("ls", L_SHIFTED)]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "NO\n"));

    let out = d.path("shared.txt");
    let svg = d.path("pair.svg");
    let r = compat(&[
        "--oracle",
        "--svg",
        svg.to_str().unwrap(),
        "compat",
        &d.file("sq", SQUARE),
        &d.file("dart", DART),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "YES\n"));
    assert_eq!(read(&out), "0 2\n");
    let drawing = read(&svg);
    assert_eq!(drawing.matches(r#"class="outline""#).count(), 2);
    assert_eq!(drawing.matches(r#"class="diagonal""#).count(), 2);
}

#[test]
fn count_examples() {
    let d = Dir::new();
    let complete6 = d.file("k6", "6\n0 2\n0 3\n0 4\n1 3\n1 4\n1 5\n2 4\n2 5\n3 5\n");
    for kernel in ["classical", "strassen"] {
        let r = compat(&["--oracle", "count", "--graph", &complete6, "--kernel", kernel]);
        assert_eq!((r.code, r.stdout.as_str()), (0, "14\n"));
    }
    let r = compat(&["count", "--graph", &d.file("c4", "4\n")]);
    assert_eq!(r.stdout, "0\n");

    let n = 40;
    let mut text = format!("{n}\n");
    for i in 0..n {
        for j in i + 2..n {
            if !(i == 0 && j == n - 1) {
                text.push_str(&format!("{i} {j}\n"));
            }
        }
    }
    // Catalan(38), pinned after agreeing with the memoized recursion
    let catalan_38 = "176733862787006701400";
    assert_eq!(recursive_count(&AdjacencyMatrix::complete(n)).to_string(), catalan_38);
    let r = compat(&["count", "--graph", &d.file("k40", &text)]);
    assert_eq!(r.stdout.trim(), catalan_38);

    let sq = d.file("sq", SQUARE);
    let r = compat(&["--oracle", "count", &sq, &d.file("dart", DART)]);
    assert_eq!(r.stdout, "1\n");
    assert_eq!(compat(&["count", &sq, &d.file("l", L_HEXAGON)]).code, 2);
}

#[test]
fn reduction_examples() {
    let r = compat(&["--oracle", "--seed", "7", "reduction", "1", "--density", "1"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("MATCH\n"));
    // M = N = [1]: the 7-gon carries the chords x z, x y, y z
    assert!(r.stdout.starts_with("7\n"));
    assert!(r.stdout.contains("1 3\n") && r.stdout.contains("3 5\n") && r.stdout.contains("1 5\n"));
    let d = Dir::new();
    let g = d.path("g.txt");
    let r = compat(&["--seed", "11", "reduction", "8", "-o", g.to_str().unwrap()]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "MATCH\n"));
    assert!(read(&g).starts_with("28\n"));
    assert_eq!(compat(&["reduction", "0"]).code, 2);
}

#[test]
fn gen_examples() {
    let d = Dir::new();
    let quad = d.path("quad.txt");
    let r = compat(&["--seed", "1", "gen", "4", "-o", quad.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.starts_with("reflex fraction"));
    assert_eq!(compat(&["triangulate", quad.to_str().unwrap()]).code, 0);
    let r = compat(&["gen", "3"]);
    assert_eq!(r.stdout.lines().count(), 4);
    assert_eq!(compat(&["gen", "2"]).code, 2);
    assert_eq!(compat(&["gen", "9", "--reflex-fraction", "1.5"]).code, 2);
}

#[test]
fn render_examples() {
    let d = Dir::new();
    let sq = d.file("sq", SQUARE);
    let r = compat(&["render", &sq, &d.file("t", "0 2\n")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.matches(r#"class="label""#).count(), 4);
    assert_eq!(r.stdout.matches("<line").count(), 1);
    let r = compat(&["render", &sq]);
    assert_eq!(r.stdout.matches("<line").count(), 0);
    assert!(r.stdout.contains(r#"class="outline""#));
    assert_eq!(compat(&["render", &sq, &d.file("bad", "1 3\n0 2\n")]).code, 2);
    assert_eq!(compat(&["render", &sq, &d.file("junk", "0\n")]).code, 2);
}

#[test]
fn reruns_are_byte_identical() {
    let d = Dir::new();
    let l = d.file("l", L_HEXAGON);
    let report = d.path("r.jsonl");
    let rep = report.to_str().unwrap();
    let runs: Vec<Vec<&str>> = vec![
        vec!["--seed", "5", "gen", "30", "--reflex-fraction", "0.4"],
        vec!["--seed", "5", "gen", "30"],
        vec!["--report", rep, "visquery", &l, "--all"],
        vec!["--report", rep, "compat", &l, &l],
        vec!["--seed", "2", "--report", rep, "reduction", "4"],
        vec!["render", &l],
    ];
    for args in &runs {
        assert_eq!(compat(args), compat(args), "{args:?}");
    }
    let lines: Vec<String> = read(&report).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 6);
    for pair in lines.chunks(2) {
        assert_eq!(pair[0], pair[1]);
    }
}

#[test]
fn report_counters() {
    let d = Dir::new();
    let report = d.path("r.jsonl");
    let rep = report.to_str().unwrap();
    compat(&["--report", rep, "visquery", &d.file("l", L_HEXAGON), "1", "4"]);
    compat(&["--report", rep, "count", "--graph", &d.file("k5", "5\n0 2\n0 3\n1 3\n1 4\n2 4\n")]);
    let lines: Vec<serde_json::Value> =
        read(&report).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["subcommand"], "visquery");
    assert_eq!(lines[0]["counters"]["visibility_queries"], 1);
    assert!(lines[0]["counters"]["predicate_evaluations"].as_u64().unwrap() > 0);
    assert_eq!(lines[0]["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
    assert_eq!(lines[1]["outputs"]["count"], "5");
    assert!(lines[1]["counters"]["block_updates"].as_u64().unwrap() > 0);
}

#[test]
fn binary_exit_codes() {
    let d = Dir::new();
    let bin = env!("CARGO_BIN_EXE_compat");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let out = status(&["triangulate", &d.file("bow", BOWTIE)]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&out.stderr).trim(), "NotSimple(0,2)");
    let l = d.file("l", L_HEXAGON);
    assert_eq!(status(&["compat", &l, &d.file("ls", L_SHIFTED)]).status.code(), Some(1));
    let out = status(&["compat", &l, &l]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("YES"));
    assert_eq!(status(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(status(&["--help"]).status.code(), Some(0));
}
