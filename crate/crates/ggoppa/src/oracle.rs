//! Brute-force oracles: exhaustive minimum distance and exhaustive decoding
//! sweeps. Both are enumeration-guarded and independent of the construction
//! and decoding paths they check.

use crate::binmat::BitVec;
use crate::code::GGCode;
use crate::decode::decode_one;
use crate::error::{Error, Result};

/// Minimum Hamming weight over all 2^k − 1 nonzero codewords, walked in
/// Gray-code order over the generator rows. Guarded at k ≤ 24.
pub fn min_distance(code: &GGCode) -> Result<usize> {
    let k = code.k();
    if k == 0 {
        return Err(Error::InvalidParameter(
            "minimum distance of the zero-dimensional code is undefined".into(),
        ));
    }
    if k > 24 {
        return Err(Error::BudgetExceeded(format!(
            "k = {k} exceeds the exhaustive enumeration guard of 24"
        )));
    }
    let gen = code.generator();
    let mut word = BitVec::zeros(code.n());
    let mut best = usize::MAX;
    for i in 1u64..1 << k {
        let flip = i.trailing_zeros() as usize;
        gen.xor_row_vec(&mut word, flip);
        best = best.min(word.weight());
    }
    Ok(best)
}

fn binomial(n: u64, t: u64) -> u128 {
    if t > n {
        return 0;
    }
    let t = t.min(n - t);
    let mut acc: u128 = 1;
    for i in 0..t {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

fn enumeration_budget(n: usize, tmax: usize) -> u128 {
    (0..=tmax.min(n))
        .map(|t| binomial(n as u64, t as u64))
        .sum()
}

/// Lexicographic enumeration of all t-subsets of 0..n.
struct Supports {
    n: usize,
    idx: Option<Vec<usize>>,
}

impl Supports {
    fn new(n: usize, t: usize) -> Supports {
        let idx = if t <= n { Some((0..t).collect()) } else { None };
        Supports { n, idx }
    }
}

impl Iterator for Supports {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let idx = self.idx.as_mut()?;
        let out = idx.clone();
        let t = idx.len();
        if t == 0 {
            self.idx = None;
            return Some(out);
        }
        let mut i = t;
        loop {
            if i == 0 {
                self.idx = None;
                break;
            }
            i -= 1;
            if idx[i] != i + self.n - t {
                idx[i] += 1;
                for j in i + 1..t {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

#[derive(Debug)]
pub struct ExhaustiveReport {
    pub tested: u64,
    pub counterexample_count: u64,
    /// The first few error supports that did not decode back to the zero
    /// codeword.
    pub counterexamples: Vec<Vec<usize>>,
}

impl ExhaustiveReport {
    pub fn all_corrected(&self) -> bool {
        self.counterexample_count == 0
    }
}

/// Decodes every error pattern of weight ≤ tmax against the zero codeword
/// (linearity: decoding is syndrome-only, so the zero codeword suffices).
/// Guarded at Σ C(n, t) ≤ 10^6 patterns.
pub fn decode_exhaustive(code: &GGCode, tmax: usize) -> Result<ExhaustiveReport> {
    let budget = enumeration_budget(code.n(), tmax);
    if budget > 1_000_000 {
        return Err(Error::BudgetExceeded(format!(
            "{budget} patterns of weight <= {tmax} on length {}",
            code.n()
        )));
    }
    let mut report = ExhaustiveReport {
        tested: 0,
        counterexample_count: 0,
        counterexamples: Vec::new(),
    };
    for t in 0..=tmax.min(code.n()) {
        for support in Supports::new(code.n(), t) {
            report.tested += 1;
            if !recovers_zero(code, &support)? {
                report.counterexample_count += 1;
                if report.counterexamples.len() < 32 {
                    report.counterexamples.push(support);
                }
            }
        }
    }
    Ok(report)
}

/// First weight-t pattern (in lexicographic order) that does not decode back
/// to the zero codeword; None when every pattern is corrected.
pub fn find_uncorrected(code: &GGCode, t: usize) -> Result<Option<Vec<usize>>> {
    let budget = binomial(code.n() as u64, t as u64);
    if budget > 1_000_000 {
        return Err(Error::BudgetExceeded(format!(
            "{budget} patterns of weight {t} on length {}",
            code.n()
        )));
    }
    for support in Supports::new(code.n(), t) {
        if !recovers_zero(code, &support)? {
            return Ok(Some(support));
        }
    }
    Ok(None)
}

fn recovers_zero(code: &GGCode, support: &[usize]) -> Result<bool> {
    let e = BitVec::from_support(code.n(), support);
    let out = decode_one(&e, code)?;
    Ok(out.is_corrected() && out.codeword.as_ref().unwrap().row_vec(0).is_zero())
}
