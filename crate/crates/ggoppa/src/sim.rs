//! Monte-Carlo burst-error simulation: per trial a random codeword matrix,
//! an error matrix with exactly t uniformly chosen non-zero columns carrying
//! uniformly random non-zero column patterns, one joint decode, and a tally
//! of {success, failure, miscorrection}.
//!
//! Trials run in parallel on independent counter-based streams derived from
//! (seed, trial index), so a fixed seed gives bit-identical tallies
//! regardless of thread scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;

use crate::binmat::{BitVec, WordMatrix};
use crate::error::{Error, Result};
use crate::ileave::{joint_decode, InterleavedCode};

#[derive(Clone, Copy, Debug)]
pub struct SimConfig {
    /// Non-zero error columns per trial.
    pub t: usize,
    pub trials: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SimTally {
    pub successes: u64,
    pub failures: u64,
    /// Decoder reported Corrected but the output differs from the
    /// transmitted matrix. Counted separately from successes.
    pub miscorrections: u64,
}

impl SimTally {
    fn add(self, other: SimTally) -> SimTally {
        SimTally {
            successes: self.successes + other.successes,
            failures: self.failures + other.failures,
            miscorrections: self.miscorrections + other.miscorrections,
        }
    }

    pub fn total(&self) -> u64 {
        self.successes + self.failures + self.miscorrections
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha12Rng {
    let mut bytes = [0u8; 32];
    bytes[..8].copy_from_slice(&seed.to_le_bytes());
    bytes[8..16].copy_from_slice(&trial.to_le_bytes());
    ChaCha12Rng::from_seed(bytes)
}

pub fn simulate(ic: &InterleavedCode, cfg: &SimConfig) -> Result<SimTally> {
    let n = ic.base().n();
    if cfg.t > n {
        return Err(Error::InvalidParameter(format!(
            "t = {} exceeds the code length {n}",
            cfg.t
        )));
    }
    if cfg.trials == 0 {
        return Err(Error::InvalidParameter("trials must be >= 1".into()));
    }
    if ic.w() > 32 {
        return Err(Error::InvalidParameter(
            "interleaving orders above 32 are not supported by the harness".into(),
        ));
    }

    let tally = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| run_trial(ic, cfg, trial))
        .try_reduce(SimTally::default, |a, b| Ok(a.add(b)))?;
    Ok(tally)
}

fn run_trial(ic: &InterleavedCode, cfg: &SimConfig, trial: u64) -> Result<SimTally> {
    let mut rng = trial_rng(cfg.seed, trial);
    let base = ic.base();
    let n = base.n();
    let w = ic.w();

    let mut codeword_rows = Vec::with_capacity(w);
    for _ in 0..w {
        let mut msg = BitVec::zeros(base.k());
        for i in 0..base.k() {
            msg.set(i, rng.random_bool(0.5));
        }
        codeword_rows.push(base.encode(&msg)?);
    }
    let transmitted = WordMatrix::from_rows(&codeword_rows);

    let mut received = transmitted.clone();
    if cfg.t > 0 {
        let columns = rand::seq::index::sample(&mut rng, n, cfg.t);
        for col in columns {
            let pattern: u32 = rng.random_range(1..1u32 << w);
            for row in 0..w {
                if (pattern >> row) & 1 == 1 {
                    let bit = received.get(row, col);
                    received.set(row, col, !bit);
                }
            }
        }
    }

    let out = joint_decode(&received, ic)?;
    let mut tally = SimTally::default();
    if out.is_corrected() {
        if out.codeword.as_ref().unwrap() == &transmitted {
            tally.successes = 1;
        } else {
            tally.miscorrections = 1;
        }
    } else {
        tally.failures = 1;
    }
    Ok(tally)
}

/// CSV schema of the simulation output; all numeric fields are integers and
/// the seed is echoed.
pub fn csv_header() -> &'static str {
    "n,k,m,l,r,w,t,trials,successes,failures,miscorrections,seed"
}

pub fn csv_row(ic: &InterleavedCode, cfg: &SimConfig, tally: &SimTally) -> String {
    let base = ic.base();
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{}",
        base.n(),
        base.k(),
        base.m(),
        base.lmax(),
        base.r(),
        ic.w(),
        cfg.t,
        cfg.trials,
        tally.successes,
        tally.failures,
        tally.miscorrections,
        cfg.seed
    )
}
