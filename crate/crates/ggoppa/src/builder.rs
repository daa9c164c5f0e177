//! Deterministic code construction from an inline parameter profile:
//! locators are the first irreducibles of each requested degree in
//! enumeration order; G is the first degree-r irreducible drawn from a
//! fixed-seed candidate stream that is not already a locator. The same
//! profile always yields the same code.
//!
//! G is not taken from the lexicographic stream on purpose: over large
//! fields the lex-first candidates are sparse polynomials that stay
//! reducible for millions of steps (every monic x^12 + g with deg g ≤ 2
//! over GF(256) is reducible), while random candidates hit an irreducible
//! after about r attempts.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::code::{GGCode, LocatorOrder, LocatorSet};
use crate::error::{Error, Result};
use crate::galois::{Fe, FieldCtx};
use crate::polyring::{irreducibles, is_irreducible, Poly};

const GOPPA_STREAM_SEED: u64 = 0x6767_6f70_7061;

fn deterministic_goppa(ctx: &FieldCtx, r: usize, avoid: &[Poly]) -> Result<Poly> {
    let mut rng = ChaCha12Rng::seed_from_u64(GOPPA_STREAM_SEED);
    for _ in 0..50_000 {
        let mut coeffs: Vec<Fe> = (0..r)
            .map(|_| rng.random_range(0..ctx.size()) as Fe)
            .collect();
        coeffs.push(1);
        let cand = Poly::from_coeffs(ctx, coeffs);
        if avoid.contains(&cand) {
            continue;
        }
        if is_irreducible(&cand)? {
            return Ok(cand);
        }
    }
    Err(Error::InvalidParameter(format!(
        "no degree-{r} irreducible found over GF(2^{}) that avoids the locators",
        ctx.m()
    )))
}

/// `profile` lists (degree, count) pairs; n is the total count.
pub fn code_from_profile(m: u32, r: usize, profile: &[(usize, usize)]) -> Result<GGCode> {
    if profile.is_empty() || profile.iter().all(|&(_, c)| c == 0) {
        return Err(Error::InvalidParameter("empty locator profile".into()));
    }
    if r < 1 {
        return Err(Error::InvalidParameter(
            "Goppa degree must be >= 1".into(),
        ));
    }
    let ctx = FieldCtx::new(m)?;
    let mut sorted = profile.to_vec();
    sorted.sort_unstable();
    let mut locators: Vec<Poly> = Vec::new();
    for &(deg, count) in &sorted {
        if count == 0 {
            continue;
        }
        if deg < 1 {
            return Err(Error::InvalidParameter(
                "locator degrees must be >= 1".into(),
            ));
        }
        let polys: Vec<Poly> = irreducibles(&ctx, deg).take(count).collect();
        if polys.len() < count {
            return Err(Error::InvalidParameter(format!(
                "only {} irreducibles of degree {deg} exist over GF(2^{m}), {count} requested",
                polys.len()
            )));
        }
        locators.extend(polys);
    }

    let goppa = deterministic_goppa(&ctx, r, &locators)?;
    let locs = LocatorSet::validate(&locators, &goppa, LocatorOrder::Canonical)?;
    GGCode::new(locs, goppa)
}

/// Parses "1:40,2:40" into [(1, 40), (2, 40)].
pub fn parse_profile(s: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    for part in s.split(',') {
        let Some((deg, count)) = part.split_once(':') else {
            return Err(Error::Parse(format!(
                "profile entry '{part}' is not of the form degree:count"
            )));
        };
        let deg: usize = deg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad degree '{deg}'")))?;
        let count: usize = count
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad count '{count}'")))?;
        out.push((deg, count));
    }
    Ok(out)
}
