//! Black-box tests of the ggoppa binary: exit codes, artifact determinism,
//! file-format roundtrips and the CSV surface.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ggoppa::textio::{self, CodeSpec};
use ggoppa::{BitVec, LocatorOrder};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ggoppa"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn workdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ggoppa-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

/// GF(16) classical code: n = 16, r = 2, t_sep = 2.
fn fixture_spec(dir: &Path) -> PathBuf {
    let ctx = ggoppa::FieldCtx::new(4).unwrap();
    let goppa = ggoppa::polyring::irreducibles(&ctx, 2).next().unwrap();
    let locators: Vec<ggoppa::Poly> = ggoppa::polyring::irreducibles(&ctx, 1).collect();
    let spec = CodeSpec {
        ctx,
        goppa,
        locators,
        locator_lines: Vec::new(),
        order: LocatorOrder::Canonical,
    };
    let path = dir.join("code.txt");
    std::fs::write(&path, textio::render_code_spec(&spec)).unwrap();
    path
}

#[test]
fn construct_writes_deterministic_artifacts() {
    let dir = workdir("construct");
    let spec = fixture_spec(&dir);
    let out1 = dir.join("a");
    let out2 = dir.join("b");
    for out in [&out1, &out2] {
        let res = run(&[
            "construct",
            "--spec",
            spec.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--w",
            "3",
        ]);
        assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
        let stdout = String::from_utf8_lossy(&res.stdout);
        assert!(stdout.contains("n=16"));
        assert!(stdout.contains("t_sep = 2"));
        assert!(stdout.contains("t_max(w=3)"));
    }
    for file in ["h.txt", "htilde.txt", "hbin.txt", "gen.txt", "summary.txt"] {
        let a = std::fs::read(out1.join(file)).unwrap();
        let b = std::fs::read(out2.join(file)).unwrap();
        assert_eq!(a, b, "{file} differs between runs");
    }
}

#[test]
fn construct_rejects_duplicate_locator_naming_the_line() {
    let dir = workdir("dup");
    let spec = dir.join("bad.txt");
    std::fs::write(&spec, "m 2\nG 1,1,1\nf 0,1\nf 1,1\nf 0,1\n").unwrap();
    let res = run(&[
        "construct",
        "--spec",
        spec.to_str().unwrap(),
        "--out",
        dir.join("out").to_str().unwrap(),
    ]);
    assert_eq!(res.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&res.stderr);
    assert!(stderr.contains("line 5"), "stderr: {stderr}");
    assert!(stderr.contains("duplicate"), "stderr: {stderr}");
}

#[test]
fn encode_then_decode_roundtrip_with_errors() {
    let dir = workdir("roundtrip");
    let spec = fixture_spec(&dir);

    // k-bit messages
    let res = run(&["construct", "--spec", spec.to_str().unwrap(), "--out", dir.join("art").to_str().unwrap()]);
    assert!(res.status.success());
    let summary = std::fs::read_to_string(dir.join("art/summary.txt")).unwrap();
    let k: usize = summary
        .split_whitespace()
        .find_map(|tok| tok.strip_prefix("k=").and_then(|v| v.parse().ok()))
        .unwrap();

    let msgs: Vec<BitVec> = (0..4)
        .map(|i| {
            let mut m = BitVec::zeros(k);
            for j in 0..k {
                if (i + j) % 3 == 0 {
                    m.set(j, true);
                }
            }
            m
        })
        .collect();
    let msg_path = dir.join("msgs.txt");
    std::fs::write(&msg_path, textio::render_words(&msgs)).unwrap();

    let word_path = dir.join("words.txt");
    let res = run(&[
        "encode",
        "--spec",
        spec.to_str().unwrap(),
        "--in",
        msg_path.to_str().unwrap(),
        "--out",
        word_path.to_str().unwrap(),
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));

    // corrupt two bits in every word
    let words = textio::parse_words(&std::fs::read_to_string(&word_path).unwrap(), 16).unwrap();
    let corrupted: Vec<BitVec> = words
        .iter()
        .map(|w| {
            let mut c = w.clone();
            c.flip(1);
            c.flip(10);
            c
        })
        .collect();
    let rcv_path = dir.join("rcv.txt");
    std::fs::write(&rcv_path, textio::render_words(&corrupted)).unwrap();

    let dec_path = dir.join("dec.txt");
    let res = run(&[
        "decode",
        "--spec",
        spec.to_str().unwrap(),
        "--in",
        rcv_path.to_str().unwrap(),
        "--out",
        dec_path.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let decoded = textio::parse_words(&std::fs::read_to_string(&dec_path).unwrap(), 16).unwrap();
    assert_eq!(decoded, words);
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("corrected, 2 error(s)"));
}

#[test]
fn interleaved_decode_via_files() {
    let dir = workdir("ileave");
    let spec = fixture_spec(&dir);
    // three zero codewords with a 3-column burst
    let mut rcv = ggoppa::WordMatrix::zeros(3, 16);
    for (row, col) in [(0usize, 2usize), (1, 2), (2, 7), (0, 12)] {
        rcv.set(row, col, true);
    }
    let rcv_path = dir.join("rcv.txt");
    std::fs::write(&rcv_path, textio::render_interleaved(&rcv)).unwrap();
    let out_path = dir.join("out.txt");
    let res = run(&[
        "decode",
        "--spec",
        spec.to_str().unwrap(),
        "--in",
        rcv_path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
        "--w",
        "3",
    ]);
    assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    let decoded =
        textio::parse_interleaved(&std::fs::read_to_string(&out_path).unwrap(), 3, 16).unwrap();
    assert_eq!(decoded, ggoppa::WordMatrix::zeros(3, 16));
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("3 error column(s)"));
}

#[test]
fn simulate_is_seed_deterministic() {
    let dir = workdir("sim");
    let csv1 = dir.join("a.csv");
    let csv2 = dir.join("b.csv");
    for csv in [&csv1, &csv2] {
        let res = run(&[
            "simulate",
            "--m",
            "4",
            "--r",
            "2",
            "--profile",
            "1:12",
            "--w",
            "2",
            "--t",
            "2",
            "--trials",
            "300",
            "--seed",
            "77",
            "--out",
            csv.to_str().unwrap(),
        ]);
        assert!(res.status.success(), "{}", String::from_utf8_lossy(&res.stderr));
    }
    let a = std::fs::read(&csv1).unwrap();
    let b = std::fs::read(&csv2).unwrap();
    assert_eq!(a, b);
    let text = String::from_utf8(a).unwrap();
    assert!(text.starts_with("n,k,m,l,r,w,t,trials,successes,failures,miscorrections,seed\n"));
    // t <= t_sep: everything succeeds
    assert!(text.contains(",300,300,0,0,77"), "csv: {text}");
}

#[test]
fn params_table_and_row_flags() {
    let res = run(&["params", "--paper-table1", "--row", "8192,7,2,128"]);
    assert!(res.status.success());
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("261120"));
    assert!(stdout.contains("1046739"));
    assert!(stdout.contains("DISCREPANCY: published value 1047319"));
    let count = stdout.matches("817152").count();
    assert!(count >= 2, "table row and extra row both present");

    let res = run(&["params"]);
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn oracle_subcommands() {
    let dir = workdir("oracle");
    let spec = fixture_spec(&dir);
    let res = run(&["oracle", "min-distance", "--spec", spec.to_str().unwrap()]);
    assert!(res.status.success());
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("min_distance = "));

    let res = run(&[
        "oracle",
        "decode-exhaustive",
        "--spec",
        spec.to_str().unwrap(),
        "--t",
        "2",
    ]);
    assert!(res.status.success());
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("0 counterexample(s)"), "{stdout}");
}
