use std::io::Write;
use std::process::{Command, Output, Stdio};

use degencrit::cli::analysis;
use degencrit::families::family_corpus;
use degencrit::io::parse_graph6;

fn degencrit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_degencrit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn degencrit");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_piped_into_analyze_matches_in_process_analysis() {
    for (name, g) in family_corpus() {
        let args: Vec<&str> = std::iter::once("gen").chain(name.split(' ')).collect();
        let gen = degencrit(&args, "");
        assert_eq!(gen.status.code(), Some(0), "{name}");
        let text = stdout(&gen);
        assert_eq!(parse_graph6(text.trim()).unwrap(), g, "{name}");

        let analyzed = degencrit(&["analyze", "-", "--json"], &text);
        assert_eq!(analyzed.status.code(), Some(0), "{name}");
        let expected = serde_json::to_string(&analysis(&g).unwrap()).unwrap();
        assert_eq!(stdout(&analyzed).trim(), expected, "{name}");
    }
}

#[test]
fn edge_list_output_is_accepted_as_input() {
    let gen = degencrit(&["gen", "wheel", "5", "--format", "edges"], "");
    let analyzed = degencrit(&["analyze", "--json"], &stdout(&gen));
    let v: serde_json::Value = serde_json::from_str(stdout(&analyzed).trim()).unwrap();
    assert_eq!((v["n"].as_u64(), v["m"].as_u64(), v["col"].as_u64()), (Some(6), Some(10), Some(4)));
    assert_eq!(v["dcc_ratio"], "1/2");
    assert_eq!(v["Delta"], 5);
}

#[test]
fn json_keys_are_stable() {
    let out = degencrit(&["--json", "analyze", "-"], "E}lw\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        [
            "Delta",
            "class_label",
            "col",
            "col_critical",
            "col_vertex_critical",
            "dcc_edges",
            "dcc_ratio",
            "delta",
            "double_col_critical",
            "m",
            "n",
            "two_connected"
        ]
    );
    let edges: Vec<&str> = v["dcc_edges"].as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
    let mut sorted = edges.clone();
    sorted.sort_by_key(|e| {
        let (a, b) = e.split_once('-').unwrap();
        (a.parse::<usize>().unwrap(), b.parse::<usize>().unwrap())
    });
    assert_eq!(edges, sorted);
    assert_eq!(edges.len(), 12);
}

#[test]
fn exit_codes() {
    assert_eq!(degencrit(&["analyze", "-"], "E}l\n").status.code(), Some(3));
    assert_eq!(degencrit(&["analyze", "-"], "3 1\n0 7\n").status.code(), Some(3));
    assert_eq!(degencrit(&["census", "dcc5", "--nmax", "99"], "").status.code(), Some(2));
    assert_eq!(degencrit(&["census", "ratio-threshold", "--epsilon", "one"], "").status.code(), Some(2));
    assert_eq!(degencrit(&["verify", "nonsense"], "").status.code(), Some(2));
    assert_eq!(degencrit(&["oracle", "--count", "20", "--nmax", "8"], "").status.code(), Some(0));
}

#[test]
fn census_commands_emit_rows_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let sidecar = dir.path().join("hits.g6");
    let out = degencrit(
        &["census", "dcc5", "--nmax", "8", "--json", "--sidecar", sidecar.to_str().unwrap()],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let counts: Vec<usize> = rows.iter().map(|r| r["hits"].as_array().unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 2, 2]);
    let listed = std::fs::read_to_string(&sidecar).unwrap();
    assert_eq!(listed.lines().count(), 6);

    let out = degencrit(&["census", "ratio-threshold", "--p", "5", "--epsilon", "1/10"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("k=6 ratio=11/12"), "{}", stdout(&out));

    let out = degencrit(&["verify", "joins", "--nmax", "3"], "");
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}
