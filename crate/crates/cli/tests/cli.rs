//! End-to-end runs of the `mostar` binary.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use mostar_core::{decode_graph6, encode_graph6, mostar_index, Family};

fn mostar(args: &[&str]) -> Output {
    mostar_with_input(args, b"")
}

fn mostar_with_input(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mostar"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Data lines of TSV output split into fields.
fn rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split('\t').map(String::from).collect())
        .collect()
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 7] = [
        (&["witness", "1"], 3),
        (&["witness", "7", "--tree"], 3),
        (&["witness", "5", "--chemical"], 4),
        (&["enumerate", "--n", "11"], 5),
        (&["compute", "--graph6", "B!"], 2),
        (&["witness", "6", "--layered-even", "2", "1"], 2),
        (&["verify", "--suite", "nope", "--n-max", "5"], 2),
    ];
    for (args, code) in cases {
        let o = mostar(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?} wrote data on failure");
        assert!(!o.stderr.is_empty());
    }
    let o = mostar(&["witness", "1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("not realizable"));
}

#[test]
fn stats_row_for_order_six() {
    let text = stdout(&mostar(&["stats", "--n", "6"]));
    assert!(text.starts_with("#n\tcount\tmin\tmin_mult\tmax\tmax_mult\tmode\tmode_mult\tavg_num\tavg_den\tavg_3dp\n"));
    assert_eq!(rows(&text), vec![vec!["6", "112", "0", "5", "24", "1", "12", "21", "1307", "112", "11.670"]]);
}

#[test]
fn tree_witness_for_twelve_is_p6() {
    let text = stdout(&mostar(&["witness", "12", "--tree"]));
    let r = &rows(&text)[0];
    assert_eq!(r[1], "TREE_PATH");
    assert_eq!(r[4], encode_graph6(&Family::Path(6).build().unwrap()));
    assert_eq!(r[5], "12");
}

#[test]
fn witness_lines_revalidate() {
    let targets: Vec<String> = (0..=60).filter(|&p| p != 1).map(|p| p.to_string()).collect();
    let args: Vec<&str> = std::iter::once("witness").chain(targets.iter().map(String::as_str)).collect();
    let text = stdout(&mostar(&args));
    let lines = rows(&text);
    assert_eq!(lines.len(), targets.len());
    for r in lines {
        let g = decode_graph6(&r[4]).unwrap();
        assert_eq!(g.order().to_string(), r[3]);
        assert_eq!(mostar_index(&g).unwrap().to_string(), r[5]);
        assert_eq!(r[0], r[5]);
    }
    for flag in [["--chemical"], ["--three-layer"], ["--cycle-even"]] {
        let text = stdout(&mostar(&["witness", "8", "12", flag[0]]));
        for r in rows(&text) {
            assert_eq!(mostar_index(&decode_graph6(&r[4]).unwrap()).unwrap().to_string(), r[5]);
        }
    }
    let text = stdout(&mostar(&["witness", "6", "--layered-even", "3", "2"]));
    assert_eq!(rows(&text)[0][1], "LAYERED_EVEN");
}

#[test]
fn enumerate_piped_into_stats_matches_direct_stats() {
    for n in [4, 6, 7] {
        let n = n.to_string();
        let stream = mostar(&["enumerate", "--n", &n]);
        let piped = stdout(&mostar_with_input(&["stats", "--in", "-"], &stream.stdout));
        assert_eq!(piped, stdout(&mostar(&["stats", "--n", &n])));
    }
}

#[test]
fn histogram_and_formats() {
    let text = stdout(&mostar(&["stats", "--n", "4", "--histogram"]));
    assert_eq!(text, "#n\tmo\tcount\n4\t0\t2\n4\t4\t3\n4\t6\t1\n");
    let csv = stdout(&mostar(&["--format", "csv", "witness", "9"]));
    assert_eq!(csv.lines().next(), Some("target,family,params,order,graph6,certified_mo"));
    let json = stdout(&mostar(&["--format", "jsonl", "witness", "9"]));
    assert!(json.starts_with("{\"target\":9,\"family\":\"ODD_CYCLE_PENDANT_CHORD\",\"params\":[5],\"order\":6,"));
}

#[test]
fn compute_reports() {
    let text = stdout(&mostar(&["compute", "--edges", "4:0-1,1-2,2-3"]));
    assert_eq!(rows(&text), vec![vec!["0", "4", "3", "4", "10", "Ch"]]);
    let text = stdout(&mostar(&["compute", "--graph6", "Ch", "--report", "transmissions"]));
    let tr: Vec<String> = rows(&text).into_iter().map(|r| r[2].clone()).collect();
    assert_eq!(tr, ["6", "4", "4", "6"]);
    let text = stdout(&mostar(&["compute", "--graph6", "Ch", "--report", "edges"]));
    assert_eq!(rows(&text)[0], ["0", "0", "1", "1", "3", "0", "2"]);
    let text = stdout(&mostar(&["compute", "--graph6", "Ch", "--report", "profile"]));
    assert!(text.lines().nth(1).unwrap().contains("0-1,1-2,2-3"));
    let o = mostar(&["compute", "--edges", "4:0-1,2-3"]);
    assert_eq!(o.status.code(), Some(2));
    let input = b"# two graphs\nn 3\n0 1\n1 2\n\nn 3\n0 1\n1 2\n0 2\n";
    let text = stdout(&mostar_with_input(&["compute", "--in", "-"], input));
    let mos: Vec<String> = rows(&text).into_iter().map(|r| r[3].clone()).collect();
    assert_eq!(mos, ["2", "0"]);
}

#[test]
fn codec_round_trip() {
    let edges = b"n 4\n0 1\n1 2\n2 3\nn 3\n0 1\n0 2\n1 2\n";
    let g6 = stdout(&mostar_with_input(&["codec", "--encode"], edges));
    assert_eq!(g6, "Ch\nBw\n");
    let back = stdout(&mostar_with_input(&["codec", "--decode"], g6.as_bytes()));
    assert_eq!(back.as_bytes(), edges);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n5.g6");
    let o = mostar(&["enumerate", "--n", "5", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 21);
}

#[test]
fn table_and_realizers() {
    let text = stdout(&mostar(&["table2", "--n-max", "6", "--mo-max", "4"]));
    assert_eq!(text, "#mo\tn3\tn4\tn5\tn6\n2\t1\t0\t1\t1\n3\t0\t0\t0\t0\n4\t0\t3\t2\t3\n");
    let text = stdout(&mostar(&["first-realizer", "2", "5", "7", "--n-max", "7"]));
    assert_eq!(rows(&text), vec![vec!["2", "7", "3"], vec!["5", "7", "not_found_below_cap"], vec!["7", "7", "5"]]);
}

#[test]
fn verify_reports_claims() {
    let text = stdout(&mostar(&["verify", "--suite", "trees", "--n-max", "7"]));
    let lines = rows(&text);
    let parity = lines.iter().find(|r| r[1] == "tree_parity").unwrap();
    assert_eq!((parity[2].as_str(), parity[4].as_str(), parity[5].as_str()), ("theorem", "0", "-"));
    assert!(lines.iter().any(|r| r[1] == "trees_n7" && r[2] == "observation" && r[3] == "11"));
}
