use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, Output};

use kbonacci::Word;

fn kbonacci(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kbonacci"))
        .args(args)
        .env_remove("KBONACCI_CONFIG")
        .current_dir(env!("CARGO_TARGET_TMPDIR"))
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = kbonacci(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn manifest_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(manifest_path("tests/golden").join(name)).unwrap()
}

#[test]
fn gen_examples() {
    assert_eq!(stdout(&["gen", "--k", "3", "--n", "2"]), "0102\n");
    assert_eq!(stdout(&["gen", "--k", "3", "--n", "0"]), "0\n");
    let json = stdout(&["gen", "--k", "5", "--n", "5", "--format", "json"]);
    assert_eq!(Word::from_json(json.trim()).unwrap().len(), 31);
    assert_eq!(stdout(&["gen", "--k", "3", "--len", "10"]), "0102013010\n");
    assert_eq!(
        stdout(&["gen", "--k", "3", "--n", "3", "--format", "csv"]),
        "0,1,0,2,0,1,3\n"
    );
}

#[test]
fn gen_json_round_trips_through_paper_codec() {
    for k in [2, 3, 5, 9] {
        for n in [0, 4, 12] {
            let json = stdout(&[
                "gen",
                "--k",
                &k.to_string(),
                "--n",
                &n.to_string(),
                "--format",
                "json",
            ]);
            let paper = stdout(&["gen", "--k", &k.to_string(), "--n", &n.to_string()]);
            let w = Word::from_json(json.trim()).unwrap();
            assert!(w.max_digit().unwrap() <= 35);
            assert_eq!(w.to_paper(), paper.trim());
            assert_eq!(Word::from_paper(paper.trim()).unwrap(), w);
        }
    }
}

#[test]
fn squares_examples() {
    assert_eq!(
        stdout(&["squares", "--k", "3", "--n", "5", "--distinct"]),
        "3\n"
    );
    assert_eq!(stdout(&["squares", "--k", "3", "--n", "4"]), "");
    let distinct: BTreeSet<Word> = stdout(&["squares", "--k", "3", "--n", "11", "--distinct"])
        .lines()
        .map(|l| Word::from_paper(l).unwrap())
        .collect();
    let printed: BTreeSet<Word> =
        std::fs::read_to_string(manifest_path("../core/tests/data/table1.txt"))
            .unwrap()
            .lines()
            .flat_map(|l| {
                l.split_whitespace()
                    .skip(1)
                    .map(str::to_string)
                    .collect::<Vec<_>>()
            })
            .filter(|c| c != "-")
            .map(|c| Word::from_paper(&c).unwrap())
            .collect();
    assert_eq!(distinct.len(), 70);
    assert!(printed.is_subset(&distinct));
}

#[test]
fn squares_listing_keeps_every_descriptor() {
    let all = stdout(&["squares", "--k", "3", "--n", "6", "--format", "json"]);
    let lines: Vec<serde_json::Value> = all
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1]["root"], serde_json::json!([3, 4]));
    assert_eq!(lines[1]["j"], 0);
}

#[test]
fn critical_examples() {
    let out = stdout(&["critical", "--k", "3"]);
    assert_eq!(out, "18/7\n343534634353463435\n");
    let out = stdout(&["critical", "--k", "5", "--style", "paper-exponent"]);
    assert!(
        out.starts_with("3-3/31\n565756585657565956575658565756a"),
        "{out}"
    );
    assert_eq!(
        stdout(&["critical", "--k", "5"]).lines().next(),
        Some("90/31")
    );
    assert_eq!(
        stdout(&["critical", "--k", "3", "--factor-count", "3"])
            .lines()
            .count(),
        4
    );
    let bad = kbonacci(&["critical", "--k", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn verify_examples() {
    let out = stdout(&[
        "verify",
        "--k",
        "3",
        "--n-range",
        "5..10",
        "--suite",
        "squares",
    ]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 6);
    let out = stdout(&[
        "verify",
        "--k",
        "3",
        "--n-range",
        "8..8",
        "--suite",
        "critical",
    ]);
    assert_eq!(out, "PASS critical exponent of W_8^(3) = 18/7\n");
    let out = stdout(&[
        "verify",
        "--k",
        "4",
        "--n-range",
        "1..6",
        "--suite",
        "invariants",
        "--format",
        "json",
    ]);
    for line in out.lines() {
        let r: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(r["verdict"], "pass", "{line}");
    }
}

#[test]
fn oracle_guard_overrun_is_a_usage_error() {
    let out = kbonacci(&[
        "verify",
        "--k",
        "3",
        "--n-range",
        "8..8",
        "--suite",
        "critical",
        "--oracle-guard",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap is 10"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["gen", "--k", "3"][..],
        &["gen", "--k", "3", "--n", "2", "--len", "4"],
        &[
            "verify",
            "--k",
            "3",
            "--n-range",
            "9..2",
            "--suite",
            "squares",
        ],
        &["table", "4"],
        &["gen", "--k", "3", "--n", "60"],
        &["gen", "--k", "0", "--n", "1"],
        &[
            "verify",
            "--k",
            "3",
            "--n-range",
            "2..3",
            "--suite",
            "critical",
        ],
    ] {
        assert_eq!(kbonacci(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn length_cap_from_flag_and_config() {
    assert_eq!(
        kbonacci(&["gen", "--k", "3", "--n", "10", "--length-cap", "100"])
            .status
            .code(),
        Some(2)
    );
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let cfg = dir.join("cap.toml");
    std::fs::write(&cfg, "length_cap = 100\n").unwrap();
    let cfg = cfg.to_str().unwrap();
    assert_eq!(
        kbonacci(&["--config", cfg, "gen", "--k", "3", "--n", "10"])
            .status
            .code(),
        Some(2)
    );
    assert!(kbonacci(&["--config", cfg, "gen", "--k", "3", "--n", "5"])
        .status
        .success());
    let flag_wins = kbonacci(&[
        "--config",
        cfg,
        "--length-cap",
        "1000",
        "gen",
        "--k",
        "3",
        "--n",
        "10",
    ]);
    assert!(flag_wins.status.success());
    let via_env = Command::new(env!("CARGO_BIN_EXE_kbonacci"))
        .args(["gen", "--k", "3", "--n", "10"])
        .env("KBONACCI_CONFIG", cfg)
        .output()
        .unwrap();
    assert_eq!(via_env.status.code(), Some(2));
    std::fs::write(dir.join("bad.toml"), "bogus = 1\n").unwrap();
    let bad = dir.join("bad.toml");
    assert_eq!(
        kbonacci(&[
            "--config",
            bad.to_str().unwrap(),
            "gen",
            "--k",
            "3",
            "--n",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn tables_match_golden_files() {
    for t in ["1", "2", "3"] {
        for f in ["paper", "json", "csv"] {
            let first = stdout(&["table", t, "--format", f]);
            assert_eq!(
                first,
                golden(&format!("table{t}.{f}")),
                "table {t} --format {f}"
            );
            assert_eq!(
                first,
                stdout(&["table", t, "--format", f]),
                "table {t} is not deterministic"
            );
        }
    }
    assert_eq!(
        stdout(&["squares", "--k", "3", "--n", "11", "--distinct"]),
        golden("squares_3_11_distinct.paper")
    );
    assert_eq!(
        stdout(&[
            "critical",
            "--k",
            "5",
            "--factor-count",
            "2",
            "--format",
            "json"
        ]),
        golden("critical_5.json")
    );
}

#[test]
fn golden_tables_agree_with_printed_rows() {
    let t3 = golden("table3.paper");
    assert!(t3.contains("3 | 343534634353463435 | 3-3/7\n"));
    let t2 = golden("table2.paper");
    assert!(
        t2.lines()
            .any(|l| l.starts_with("14 | 565756585657565956575658565756a")
                && l.ends_with(" | 3-3/31"))
    );
    let t1 = golden("table1.paper");
    assert!(t1.contains("C^(0)(ki+W_1) | 0 | 34 | 67 | -\n"));
    assert!(t1.contains("C^(1)(ki+W_1) | 1 | 43 | 76 | -\n"));
    for (name, data) in [
        ("table2.paper", "table2.txt"),
        ("table3.paper", "table3.txt"),
    ] {
        let rendered = golden(name);
        for row in std::fs::read_to_string(manifest_path("../core/tests/data").join(data))
            .unwrap()
            .lines()
        {
            let cells: Vec<&str> = row.split_whitespace().collect();
            assert!(
                rendered.contains(&format!("{} | {} | {}\n", cells[0], cells[1], cells[2])),
                "{name}: {row}"
            );
        }
    }
}
