//! Command-line interface: code construction from spec files, encoding,
//! (joint) decoding, Monte-Carlo burst-error simulation, parameter tables
//! and brute-force oracles.
//!
//! Exit codes: 0 success, 1 validation error, 2 internal assertion.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use ggoppa::builder::{code_from_profile, parse_profile};
use ggoppa::code::{systematic_public_key, GGCode, LocatorSet};
use ggoppa::decode::{decode_one, DecodeStatus};
use ggoppa::error::Error;
use ggoppa::ileave::{joint_decode, radius_joint, radius_joint_even, InterleavedCode};
use ggoppa::oracle;
use ggoppa::params::{param_table, paper_table1, render_csv, render_text, ParamRow};
use ggoppa::sim::{csv_header, csv_row, simulate, SimConfig};
use ggoppa::textio;
use ggoppa::BitVec;

#[derive(Parser)]
#[command(name = "ggoppa", about = "Binary generalized Goppa codes", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code from a spec file and write its artifacts.
    Construct(ConstructArgs),
    /// Encode k-bit messages into n-bit codewords.
    Encode(CodewordArgs),
    /// Decode received words (or one interleaved word matrix).
    Decode(DecodeArgs),
    /// Monte-Carlo burst-error simulation; writes one CSV row.
    Simulate(SimArgs),
    /// Parameter table: dimension bound, distance floor, public key bytes.
    Params(ParamsArgs),
    /// Brute-force oracles (exhaustive distance / decoding sweeps).
    Oracle(OracleArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Code-spec file (lines: m, G, f..., optional order).
    #[arg(long)]
    spec: PathBuf,
    /// Output directory for h.txt, hbin.txt, gen.txt, pubkey.txt, summary.txt.
    #[arg(long)]
    out: PathBuf,
    /// Also report the joint decoding radius for this interleaving order.
    #[arg(long, default_value_t = 1)]
    w: usize,
}

#[derive(Args)]
struct CodewordArgs {
    #[arg(long)]
    spec: PathBuf,
    /// Input words, one hex-packed word per line.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    spec: PathBuf,
    /// Received words (w = 1: one per line; w > 1: "w n" header + w rows).
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Interleaving order.
    #[arg(long, default_value_t = 1)]
    w: usize,
    /// Retry failed joint decodes row by row with the unique decoder.
    #[arg(long, default_value_t = true)]
    fallback_rowwise: bool,
}

#[derive(Args)]
struct SimArgs {
    /// Code-spec file; alternatively give --m, --r and --profile.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    r: Option<usize>,
    /// Inline locator profile "degree:count,degree:count".
    #[arg(long)]
    profile: Option<String>,
    #[arg(long, default_value_t = 1)]
    w: usize,
    /// Non-zero error columns per trial.
    #[arg(long, default_value_t = 0)]
    t: usize,
    #[arg(long, default_value_t = 1000)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// CSV output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = true)]
    fallback_rowwise: bool,
}

#[derive(Args)]
struct ParamsArgs {
    /// Emit the built-in nine published rows (flags the known discrepancy).
    #[arg(long)]
    paper_table1: bool,
    /// Extra rows as "n,m,l,r" (repeatable).
    #[arg(long = "row")]
    rows: Vec<String>,
    /// CSV output path (a text table goes to stdout either way).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[command(subcommand)]
    which: OracleCommand,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Exhaustive minimum distance (k <= 24).
    MinDistance {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Decode every error pattern of weight <= t against the zero codeword.
    DecodeExhaustive {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        t: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Construct(a) => cmd_construct(a),
        Command::Encode(a) => cmd_encode(a),
        Command::Decode(a) => cmd_decode(a),
        Command::Simulate(a) => cmd_simulate(a),
        Command::Params(a) => cmd_params(a),
        Command::Oracle(a) => match a.which {
            OracleCommand::MinDistance { spec } => cmd_oracle_distance(spec),
            OracleCommand::DecodeExhaustive { spec, t } => cmd_oracle_decode(spec, t),
        },
    }
}

fn load_code(path: &Path) -> Result<GGCode, Error> {
    let text = std::fs::read_to_string(path)?;
    let spec = textio::parse_code_spec(&text)?;
    let locs = LocatorSet::validate(&spec.locators, &spec.goppa, spec.order).map_err(|e| {
        match locator_line(&e, &spec.locator_lines) {
            Some(line) => Error::Parse(format!("line {line}: {e}")),
            None => e,
        }
    })?;
    GGCode::new(locs, spec.goppa.clone()).map_err(|e| {
        match locator_line(&e, &spec.locator_lines) {
            Some(line) => Error::Parse(format!("line {line}: {e}")),
            None => e,
        }
    })
}

fn locator_line(e: &Error, lines: &[usize]) -> Option<usize> {
    let index = match e {
        Error::ReducibleLocator { index }
        | Error::DuplicateLocator { index, .. }
        | Error::LocatorSharesGoppaFactor { index }
        | Error::BadLocator { index, .. } => *index,
        _ => return None,
    };
    lines.get(index).copied()
}

fn summary(code: &GGCode, w: usize) -> String {
    let b = code.bounds();
    let mut out = String::new();
    out.push_str(&format!(
        "n={} k={} r={} m={} l={} separable={}\n",
        code.n(),
        code.k(),
        code.r(),
        code.m(),
        code.lmax(),
        code.is_separable()
    ));
    out.push_str(&format!("d_g >= {} (floor {})\n", b.d_g, b.d_g.floor()));
    if let Some(d) = b.d_sep {
        out.push_str(&format!("d_sep >= {} (floor {})\n", d, d.floor()));
    }
    if let Some(d) = b.d_even {
        out.push_str(&format!("d_even >= {} (floor {})\n", d, d.floor()));
    }
    out.push_str(&format!("t_sep = {}\n", code.t_sep()));
    if w > 1 {
        out.push_str(&format!("t_max(w={w}) = {}\n", radius_joint(code, w)));
        if let Ok(te) = radius_joint_even(code, w) {
            out.push_str(&format!("t_even_max(w={w}) = {te}\n"));
        }
    }
    if !code.within_design_dims() {
        out.push_str("warning: r·m > n, the dimension bound k >= n - r·m is vacuous\n");
    }
    out
}

fn cmd_construct(a: ConstructArgs) -> Result<(), Error> {
    let code = load_code(&a.spec)?;
    std::fs::create_dir_all(&a.out)?;
    std::fs::write(a.out.join("h.txt"), textio::render_fq_matrix(code.h()))?;
    std::fs::write(
        a.out.join("htilde.txt"),
        textio::render_fq_matrix(code.htilde()),
    )?;
    std::fs::write(
        a.out.join("hbin.txt"),
        textio::render_bit_matrix(code.hbin()),
    )?;
    std::fs::write(
        a.out.join("gen.txt"),
        textio::render_bit_matrix(code.generator()),
    )?;
    match systematic_public_key(code.hbin()) {
        Ok(t) => std::fs::write(a.out.join("pubkey.txt"), textio::render_bit_matrix(&t))?,
        Err(Error::NotSystematic) => {
            eprintln!("note: support ordering not systematic, pubkey.txt skipped")
        }
        Err(e) => return Err(e),
    }
    let s = summary(&code, a.w);
    std::fs::write(a.out.join("summary.txt"), &s)?;
    print!("{s}");
    Ok(())
}

fn cmd_encode(a: CodewordArgs) -> Result<(), Error> {
    let code = load_code(&a.spec)?;
    let text = std::fs::read_to_string(&a.input)?;
    let msgs = textio::parse_words(&text, code.k())?;
    let words: Result<Vec<BitVec>, Error> = msgs.iter().map(|m| code.encode(m)).collect();
    std::fs::write(&a.out, textio::render_words(&words?))?;
    Ok(())
}

fn cmd_decode(a: DecodeArgs) -> Result<(), Error> {
    let code = Arc::new(load_code(&a.spec)?);
    let text = std::fs::read_to_string(&a.input)?;
    if a.w <= 1 {
        let words = textio::parse_words(&text, code.n())?;
        let mut out = String::new();
        for (i, w) in words.iter().enumerate() {
            let res = decode_one(w, &code)?;
            match res.status {
                DecodeStatus::Corrected => {
                    out.push_str(&textio::bits_to_hex(&res.codeword.unwrap().row_vec(0)));
                    out.push('\n');
                    println!(
                        "word {i}: corrected, {} error(s) at {:?}",
                        res.error_support.len(),
                        res.error_support
                    );
                }
                DecodeStatus::Failed(reason) => {
                    out.push_str("FAILURE\n");
                    println!("word {i}: failure ({reason})");
                }
            }
        }
        std::fs::write(&a.out, out)?;
    } else {
        let rcv = textio::parse_interleaved(&text, a.w, code.n())?;
        let mut ic = InterleavedCode::new(code, a.w)?;
        ic.set_fallback_rowwise(a.fallback_rowwise);
        let res = joint_decode(&rcv, &ic)?;
        match res.status {
            DecodeStatus::Corrected => {
                std::fs::write(
                    &a.out,
                    textio::render_interleaved(&res.codeword.unwrap()),
                )?;
                println!(
                    "corrected, {} error column(s) at {:?}",
                    res.error_support.len(),
                    res.error_support
                );
            }
            DecodeStatus::Failed(reason) => {
                std::fs::write(&a.out, "FAILURE\n")?;
                println!("failure ({reason})");
            }
        }
    }
    Ok(())
}

fn cmd_simulate(a: SimArgs) -> Result<(), Error> {
    let code = match (&a.spec, a.m, a.r, &a.profile) {
        (Some(path), None, None, None) => load_code(path)?,
        (None, Some(m), Some(r), Some(profile)) => {
            code_from_profile(m, r, &parse_profile(profile)?)?
        }
        _ => {
            return Err(Error::InvalidParameter(
                "give either --spec or all of --m, --r, --profile".into(),
            ))
        }
    };
    let mut ic = InterleavedCode::new(Arc::new(code), a.w)?;
    ic.set_fallback_rowwise(a.fallback_rowwise);
    let cfg = SimConfig {
        t: a.t,
        trials: a.trials,
        seed: a.seed,
    };
    let tally = simulate(&ic, &cfg)?;
    let csv = format!("{}\n{}\n", csv_header(), csv_row(&ic, &cfg, &tally));
    match &a.out {
        Some(path) => std::fs::write(path, &csv)?,
        None => print!("{csv}"),
    }
    eprintln!(
        "successes {} / failures {} / miscorrections {} of {} trials",
        tally.successes, tally.failures, tally.miscorrections, cfg.trials
    );
    Ok(())
}

fn cmd_params(a: ParamsArgs) -> Result<(), Error> {
    let started = Instant::now();
    let mut rows = Vec::new();
    if a.paper_table1 {
        rows.extend(paper_table1()?);
    }
    if !a.rows.is_empty() {
        let parsed: Result<Vec<ParamRow>, Error> = a.rows.iter().map(|s| parse_row(s)).collect();
        rows.extend(param_table(&parsed?)?);
    }
    if rows.is_empty() {
        return Err(Error::InvalidParameter(
            "nothing to do: pass --paper-table1 and/or --row n,m,l,r".into(),
        ));
    }
    print!("{}", render_text(&rows));
    if let Some(path) = &a.out {
        std::fs::write(path, render_csv(&rows))?;
    }
    eprintln!("({} rows in {:?})", rows.len(), started.elapsed());
    Ok(())
}

fn parse_row(s: &str) -> Result<ParamRow, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(Error::Parse(format!("row '{s}' is not 'n,m,l,r'")));
    }
    let nums: Result<Vec<u64>, Error> = parts
        .iter()
        .map(|p| {
            p.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad integer '{p}'")))
        })
        .collect();
    let nums = nums?;
    Ok(ParamRow {
        n: nums[0],
        m: nums[1],
        l: nums[2],
        r: nums[3],
    })
}

fn cmd_oracle_distance(spec: PathBuf) -> Result<(), Error> {
    let code = load_code(&spec)?;
    let d = oracle::min_distance(&code)?;
    let b = code.bounds();
    println!("min_distance = {d}");
    println!("d_g floor = {}", b.d_g.floor());
    if let Some(ds) = b.d_sep {
        println!("d_sep floor = {}", ds.floor());
    }
    Ok(())
}

fn cmd_oracle_decode(spec: PathBuf, t: usize) -> Result<(), Error> {
    let code = load_code(&spec)?;
    let report = oracle::decode_exhaustive(&code, t)?;
    println!(
        "tested {} patterns of weight <= {t}: {} counterexample(s)",
        report.tested, report.counterexample_count
    );
    for c in &report.counterexamples {
        println!("  not corrected: {c:?}");
    }
    Ok(())
}
