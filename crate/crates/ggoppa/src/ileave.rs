//! Interleaved codes and joint decoding of column-aligned burst errors
//! beyond half the minimum distance.
//!
//! A w-interleaved codeword stacks w codewords of one Γ(L, G); a burst error
//! corrupts t columns of the w×n matrix. All rows share one error locator
//! Λ = Π_{j∈supp(E)} f_j, so the w key equations
//!
//!   ω^(i) ≡ λ·s^(i) (mod Ĝ),  deg ω^(i) < deg λ,  i = 1..w
//!
//! can be pooled into one linear system over GF(2^m) in the coefficients of
//! a monic candidate λ of degree τ. Each congruence contributes
//! deg Ĝ − τ equations (one more when every locator degree is even, since
//! then deg ω^(i) ≤ deg λ − 2). The solver scans τ upward and accepts the
//! first consistent system with a unique solution; a consistent but
//! underdetermined system is a decoding failure, never a guess.
//!
//! Error values are recovered by Forney's formula e^(i)_j =
//! ω^(i)(γ_j)/λ′(γ_j), evaluated by reduction modulo f_j; for a binary code
//! any quotient outside {0, 1} proves mis-location and fails the attempt.

use std::sync::Arc;

use crate::binmat::{BitVec, WordMatrix};
use crate::code::GGCode;
use crate::decode::{
    self, compute_syndrome, corrected_outcome, DecodeOutcome, FailureReason, SyndromeSet,
};
use crate::error::{Error, Result};
use crate::galois::{Fe, FieldCtx};
use crate::polyring::{mul_x_mod, Poly};

/// A w-interleaved code over a shared base code.
pub struct InterleavedCode {
    base: Arc<GGCode>,
    w: usize,
    fallback_rowwise: bool,
}

impl InterleavedCode {
    /// `w ≥ 1`. Row-wise fallback decoding is on by default.
    pub fn new(base: Arc<GGCode>, w: usize) -> Result<InterleavedCode> {
        if w < 1 {
            return Err(Error::InvalidParameter(
                "interleaving order must be >= 1".into(),
            ));
        }
        Ok(InterleavedCode {
            base,
            w,
            fallback_rowwise: true,
        })
    }

    pub fn base(&self) -> &GGCode {
        &self.base
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn fallback_rowwise(&self) -> bool {
        self.fallback_rowwise
    }

    /// When joint decoding fails but the rows happen to be individually
    /// decodable, fall back to per-row unique decoding.
    pub fn set_fallback_rowwise(&mut self, on: bool) {
        self.fallback_rowwise = on;
    }

    pub fn t_sep(&self) -> usize {
        radius_unique(&self.base)
    }

    pub fn t_max(&self) -> usize {
        radius_joint(&self.base, self.w)
    }

    pub fn t_even_max(&self) -> Result<usize> {
        radius_joint_even(&self.base, self.w)
    }
}

// ---------------------------------------------------------------------------
// Decoding radii
// ---------------------------------------------------------------------------

/// ⌊eff_deg/(2l)⌋ where eff_deg = deg Ĝ (2r for separable G).
pub fn radius_unique_formula(eff_deg: usize, l: usize) -> usize {
    eff_deg / (2 * l)
}

/// ⌊(w/(w+1))·eff_deg/l⌋.
pub fn radius_joint_formula(eff_deg: usize, l: usize, w: usize) -> usize {
    w * eff_deg / ((w + 1) * l)
}

/// ⌊(w/(w+1))·(eff_deg+1)/l⌋, valid only when every locator degree is even.
pub fn radius_joint_even_formula(eff_deg: usize, l: usize, w: usize) -> usize {
    w * (eff_deg + 1) / ((w + 1) * l)
}

pub fn radius_unique(code: &GGCode) -> usize {
    radius_unique_formula(code.effective_goppa().degree().unwrap(), code.lmax())
}

pub fn radius_joint(code: &GGCode, w: usize) -> usize {
    radius_joint_formula(code.effective_goppa().degree().unwrap(), code.lmax(), w)
}

pub fn radius_joint_even(code: &GGCode, w: usize) -> Result<usize> {
    if !code.locators().all_even_degree() {
        return Err(Error::InvalidParameter(
            "even-degree radius requested with an odd-degree locator present".into(),
        ));
    }
    Ok(radius_joint_even_formula(
        code.effective_goppa().degree().unwrap(),
        code.lmax(),
        w,
    ))
}

// ---------------------------------------------------------------------------
// Joint decoding
// ---------------------------------------------------------------------------

/// Row-wise syndromes against Ĝ.
pub fn joint_syndromes(rcv: &WordMatrix, ic: &InterleavedCode) -> Result<SyndromeSet> {
    if rcv.rows() != ic.w() || rcv.cols() != ic.base().n() {
        return Err(Error::LengthMismatch {
            expected: ic.w() * ic.base().n(),
            got: rcv.rows() * rcv.cols(),
        });
    }
    let gdeg = ic.base().effective_goppa().degree().unwrap();
    let polys = (0..rcv.rows())
        .map(|i| compute_syndrome(&rcv.row_vec(i), ic.base()))
        .collect::<Result<Vec<_>>>()?;
    Ok(SyndromeSet::new(polys, gdeg))
}

#[derive(Debug)]
pub enum JointSolve {
    /// The unique monic lowest-degree solution.
    Lambda(Poly),
    /// No candidate degree produced a consistent system with a unique
    /// solution.
    NotUnique,
}

enum LinSolve {
    Unique(Vec<Fe>),
    Multiple,
    Inconsistent,
}

/// Gauss-Jordan over GF(2^m) on augmented rows (ncols coefficient columns
/// plus the right-hand side).
fn solve_linear(ctx: &FieldCtx, mut rows: Vec<Vec<Fe>>, ncols: usize) -> LinSolve {
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut rank = 0;
    for col in 0..ncols {
        let Some(sel) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = ctx.inv(rows[rank][col]).expect("pivot is nonzero");
        for v in rows[rank].iter_mut() {
            *v = ctx.mul(*v, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col];
                for (x, &p) in row.iter_mut().zip(&pivot_row) {
                    *x ^= ctx.mul(factor, p);
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    if rows[rank..].iter().any(|row| row[ncols] != 0) {
        return LinSolve::Inconsistent;
    }
    if rank < ncols {
        return LinSolve::Multiple;
    }
    let mut sol = vec![0 as Fe; ncols];
    for &(r, c) in &pivots {
        sol[c] = rows[r][ncols];
    }
    LinSolve::Unique(sol)
}

/// Scans candidate degrees τ = 1, 2, … and solves the pooled linear system
/// for a monic λ of degree τ. Accepts the first consistent τ whose solution
/// is unique; a consistent solution space of positive dimension means the
/// lowest-degree λ is not unique and decoding fails.
pub fn solve_joint_key_equation(syn: &SyndromeSet, ic: &InterleavedCode) -> Result<JointSolve> {
    if syn.all_zero() {
        return Err(Error::InvalidParameter(
            "all-zero syndromes short-circuit before the key equation".into(),
        ));
    }
    if syn.polys().len() != ic.w() {
        return Err(Error::LengthMismatch {
            expected: ic.w(),
            got: syn.polys().len(),
        });
    }
    let base = ic.base();
    let ctx = base.ctx();
    let ghat = base.effective_goppa();
    let gdeg = ghat.degree().unwrap();
    let w = ic.w();
    let even = base.locators().all_even_degree();
    let dmax = if even {
        radius_joint_even_formula(gdeg, 1, w)
    } else {
        radius_joint_formula(gdeg, 1, w)
    };

    // x^d·s^(i) mod Ĝ for all candidate shifts
    let mut shifted: Vec<Vec<Poly>> = Vec::with_capacity(w);
    for s in syn.polys() {
        let mut per = Vec::with_capacity(dmax + 1);
        per.push(s.clone());
        for d in 1..=dmax {
            let next = mul_x_mod(&per[d - 1], ghat);
            per.push(next);
        }
        shifted.push(per);
    }

    for tau in 1..=dmax {
        let lo = if even { tau - 1 } else { tau };
        let mut rows: Vec<Vec<Fe>> = Vec::with_capacity(w * (gdeg - lo));
        for per in &shifted {
            let before = rows.len();
            for j in lo..gdeg {
                // columns are the candidate shifts, the last entry is the
                // right-hand side from the monic x^tau term
                let row: Vec<Fe> = per.iter().take(tau + 1).map(|p| p.coeff(j)).collect();
                rows.push(row);
            }
            debug_assert_eq!(rows.len() - before, gdeg - tau + usize::from(even));
        }
        match solve_linear(ctx, rows, tau) {
            LinSolve::Unique(sol) => {
                let mut coeffs = sol;
                coeffs.push(1);
                return Ok(JointSolve::Lambda(Poly::from_coeffs(ctx, coeffs)));
            }
            LinSolve::Multiple => return Ok(JointSolve::NotUnique),
            LinSolve::Inconsistent => {}
        }
    }
    Ok(JointSolve::NotUnique)
}

/// Forney value recovery at the located columns.
pub struct ForneyResult {
    pub error: WordMatrix,
    pub eeps: Vec<Poly>,
}

/// ω^(i) = λ·s^(i) mod Ĝ and e^(i)_j = ω^(i)(γ_j)/λ′(γ_j), evaluated by
/// reduction modulo f_j. Every quotient must be 0 or 1, each located column
/// must recover at least one 1, and λ′ must not vanish at any located root.
pub fn forney_values(
    lambda: &Poly,
    syn: &SyndromeSet,
    support: &[usize],
    ic: &InterleavedCode,
) -> std::result::Result<ForneyResult, FailureReason> {
    let base = ic.base();
    let ghat = base.effective_goppa();
    let w = ic.w();
    let lambda_der = lambda.derivative();
    let eeps: Vec<Poly> = syn
        .polys()
        .iter()
        .map(|s| lambda.mul(s).rem(ghat))
        .collect();

    let mut rows = vec![BitVec::zeros(base.n()); w];
    for &j in support {
        let rf = base.locators().field(j);
        let der_at_root = rf.eval_poly(&lambda_der);
        if der_at_root.is_zero() {
            return Err(FailureReason::ForneyDerivativeVanishes);
        }
        let der_inv = rf.inv(&der_at_root).expect("checked nonzero");
        let mut column_hit = false;
        for i in 0..w {
            let value = rf.mul(&rf.eval_poly(&eeps[i]), &der_inv);
            match value.as_constant() {
                Some(0) => {}
                Some(1) => {
                    rows[i].set(j, true);
                    column_hit = true;
                }
                _ => return Err(FailureReason::NonBinaryErrorValue),
            }
        }
        if !column_hit {
            return Err(FailureReason::SpuriousLocator);
        }
    }
    Ok(ForneyResult {
        error: WordMatrix::from_rows(&rows),
        eeps,
    })
}

/// Joint decoding: syndromes, pooled key equation, root location, Forney
/// values, then verification that every corrected row has a zero syndrome.
/// Any verification miss is an explicit failure. With `fallback_rowwise`,
/// a failed joint attempt is retried row by row with the unique decoder.
pub fn joint_decode(rcv: &WordMatrix, ic: &InterleavedCode) -> Result<DecodeOutcome> {
    let syn = joint_syndromes(rcv, ic)?;
    let base = ic.base();
    if syn.all_zero() {
        let rows: Vec<BitVec> = (0..ic.w()).map(|i| rcv.row_vec(i)).collect();
        let zero_rows = vec![BitVec::zeros(base.n()); ic.w()];
        return Ok(corrected_outcome(
            rows,
            zero_rows,
            Vec::new(),
            Poly::one(base.ctx()),
            vec![Poly::zero(base.ctx()); ic.w()],
        ));
    }

    let attempt = joint_attempt(rcv, &syn, ic)?;
    if attempt.is_corrected() || !ic.fallback_rowwise() {
        return Ok(attempt);
    }
    match rowwise_fallback(rcv, ic)? {
        Some(outcome) => Ok(outcome),
        None => Ok(attempt),
    }
}

fn joint_attempt(
    rcv: &WordMatrix,
    syn: &SyndromeSet,
    ic: &InterleavedCode,
) -> Result<DecodeOutcome> {
    let base = ic.base();
    let lambda = match solve_joint_key_equation(syn, ic)? {
        JointSolve::Lambda(l) => l,
        JointSolve::NotUnique => {
            return Ok(DecodeOutcome::failure(FailureReason::NotUnique))
        }
    };
    let support = decode::locate_errors(&lambda, base);
    let located_degree: usize = support.iter().map(|&j| base.locators().degree(j)).sum();
    if located_degree != lambda.degree().unwrap() {
        return Ok(DecodeOutcome::failure(FailureReason::DegreeMismatch));
    }
    let forney = match forney_values(&lambda, syn, &support, ic) {
        Ok(f) => f,
        Err(reason) => return Ok(DecodeOutcome::failure(reason)),
    };

    let mut codeword_rows = Vec::with_capacity(ic.w());
    let mut error_rows = Vec::with_capacity(ic.w());
    for i in 0..ic.w() {
        let mut row = rcv.row_vec(i);
        let err_row = forney.error.row_vec(i);
        row.xor_assign(&err_row);
        if !compute_syndrome(&row, base)?.is_zero() {
            return Ok(DecodeOutcome::failure(FailureReason::ResidualSyndrome));
        }
        codeword_rows.push(row);
        error_rows.push(err_row);
    }
    Ok(corrected_outcome(
        codeword_rows,
        error_rows,
        support,
        lambda,
        forney.eeps,
    ))
}

fn rowwise_fallback(rcv: &WordMatrix, ic: &InterleavedCode) -> Result<Option<DecodeOutcome>> {
    let base = ic.base();
    let mut codeword_rows = Vec::with_capacity(ic.w());
    let mut error_rows = Vec::with_capacity(ic.w());
    let mut eeps = Vec::with_capacity(ic.w());
    let mut column_support: Vec<usize> = Vec::new();
    for i in 0..ic.w() {
        let out = decode::decode_one(&rcv.row_vec(i), base)?;
        if !out.is_corrected() {
            return Ok(None);
        }
        let err_row = out.error.as_ref().unwrap().row_vec(0);
        for j in &out.error_support {
            if !column_support.contains(j) {
                column_support.push(*j);
            }
        }
        codeword_rows.push(out.codeword.unwrap().row_vec(0));
        error_rows.push(err_row);
        eeps.push(out.eeps.into_iter().next().unwrap_or_else(|| Poly::zero(base.ctx())));
    }
    column_support.sort_unstable();
    let elp = column_support
        .iter()
        .fold(Poly::one(base.ctx()), |acc, &j| {
            acc.mul(base.locators().locator(j))
        });
    Ok(Some(corrected_outcome(
        codeword_rows,
        error_rows,
        column_support,
        elp,
        eeps,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{GGCode, LocatorOrder, LocatorSet};
    use crate::galois::FieldCtx;
    use crate::polyring::irreducibles;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn make_code(m: u32, degrees: &[(usize, usize)], r: usize) -> Arc<GGCode> {
        let ctx = FieldCtx::new(m).unwrap();
        let mut locators = Vec::new();
        for &(deg, count) in degrees {
            let polys: Vec<Poly> = irreducibles(&ctx, deg).take(count).collect();
            assert_eq!(polys.len(), count);
            locators.extend(polys);
        }
        let goppa = irreducibles(&ctx, r)
            .find(|g| !locators.contains(g))
            .unwrap();
        let locs = LocatorSet::validate(&locators, &goppa, LocatorOrder::Canonical).unwrap();
        Arc::new(GGCode::new(locs, goppa).unwrap())
    }

    #[test]
    fn radius_formulas() {
        // w = 1 degenerates to the unique radius
        for eff in [4usize, 10, 24, 128] {
            for l in [1usize, 2, 3] {
                assert_eq!(radius_joint_formula(eff, l, 1), radius_unique_formula(eff, l));
            }
        }
        // separable r=64, l=2: t_sep = 32 = ⌊d_sep/2⌋
        assert_eq!(radius_unique_formula(128, 2), 32);
        // separable r=64, l=2, w=3: ⌊(3/4)·64⌋ = 48
        assert_eq!(radius_joint_formula(128, 2, 3), 48);
        // r=5, l=2, w=10: t_max = 4, t_even_max = 5
        assert_eq!(radius_joint_formula(10, 2, 10), 4);
        assert_eq!(radius_joint_even_formula(10, 2, 10), 5);
        // monotone in w
        for w in 1..12 {
            assert!(radius_joint_formula(24, 2, w) <= radius_joint_formula(24, 2, w + 1));
        }
    }

    #[test]
    fn even_radius_gain_when_divisibility_holds() {
        // (w+1) | (2r+1) and l | w force a gain of exactly 1
        for r in 1..=50u32 {
            for l in [2usize, 4, 6] {
                for w in 1..=12usize {
                    if (2 * r + 1) % (w as u32 + 1) == 0 && w % l == 0 {
                        let tm = radius_joint_formula(2 * r as usize, l, w);
                        let te = radius_joint_even_formula(2 * r as usize, l, w);
                        assert_eq!(te, tm + 1, "r={r} l={l} w={w}");
                    }
                }
            }
        }
    }

    #[test]
    fn even_radius_gain_without_divisibility_exists() {
        // the converse is not a theorem: the floors can differ without the
        // divisibility conditions
        assert_eq!(radius_joint_formula(10, 2, 11), 4);
        assert_eq!(radius_joint_even_formula(10, 2, 11), 5);
        assert_ne!(11, 0);
        assert_ne!(11 % 2, 0);
    }

    #[test]
    fn even_radius_needs_even_locators() {
        let code = make_code(3, &[(1, 4), (2, 4)], 4);
        assert!(radius_joint_even(&code, 3).is_err());
        let even = make_code(3, &[(2, 8)], 4);
        assert!(radius_joint_even(&even, 3).is_ok());
    }

    #[test]
    fn joint_syndromes_shape_and_linearity() {
        let code = make_code(3, &[(1, 6), (2, 5)], 4);
        let ic = InterleavedCode::new(code.clone(), 3).unwrap();
        let cw = WordMatrix::zeros(3, code.n());
        let syn = joint_syndromes(&cw, &ic).unwrap();
        assert!(syn.all_zero());

        let mut one_row = cw.clone();
        one_row.set(1, 4, true);
        let syn = joint_syndromes(&one_row, &ic).unwrap();
        assert!(syn.polys()[0].is_zero());
        assert!(!syn.polys()[1].is_zero());
        assert!(syn.polys()[2].is_zero());

        assert!(joint_syndromes(&WordMatrix::zeros(2, code.n()), &ic).is_err());
    }

    #[test]
    fn joint_agrees_with_unique_path_at_w1() {
        let code = make_code(3, &[(1, 6), (2, 6)], 4);
        let ic = InterleavedCode::new(code.clone(), 1).unwrap();
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..60 {
            let t = rng.random_range(1..=code.t_sep());
            let mut support = Vec::new();
            while support.len() < t {
                let i = rng.random_range(0..code.n());
                if !support.contains(&i) {
                    support.push(i);
                }
            }
            let e = BitVec::from_support(code.n(), &support);
            let syn = SyndromeSet::new(
                vec![compute_syndrome(&e, &code).unwrap()],
                code.effective_goppa().degree().unwrap(),
            );
            let JointSolve::Lambda(lambda) = solve_joint_key_equation(&syn, &ic).unwrap()
            else {
                panic!("unique solution expected within the guaranteed radius")
            };
            let (eea_lambda, _) = decode::solve_key_equation(&syn.polys()[0], &code).unwrap();
            assert_eq!(lambda, eea_lambda.make_monic());
        }
    }

    #[test]
    fn joint_decodes_all_bursts_up_to_t_sep() {
        let code = make_code(4, &[(1, 10)], 2); // t_sep = 2
        let ic = InterleavedCode::new(code.clone(), 2).unwrap();
        let n = code.n();
        for i in 0..n {
            for j in i..n {
                let support: Vec<usize> = if i == j { vec![i] } else { vec![i, j] };
                for pattern in 1..(1u32 << (2 * support.len())) {
                    let mut e = WordMatrix::zeros(2, n);
                    let mut used = false;
                    for (ci, &col) in support.iter().enumerate() {
                        let bits = (pattern >> (2 * ci)) & 3;
                        if bits == 0 {
                            continue;
                        }
                        used = true;
                        if bits & 1 == 1 {
                            e.set(0, col, true);
                        }
                        if bits & 2 == 2 {
                            e.set(1, col, true);
                        }
                    }
                    if !used {
                        continue;
                    }
                    let out = joint_decode(&e, &ic).unwrap();
                    assert!(out.is_corrected(), "support {support:?} pattern {pattern}");
                    for w in 0..2 {
                        assert!(out.codeword.as_ref().unwrap().row_vec(w).is_zero());
                    }
                    assert_eq!(out.error.as_ref().unwrap(), &e);
                }
            }
        }
    }

    #[test]
    fn forney_zeroes_uncorrupted_rows_of_located_columns() {
        let code = make_code(4, &[(1, 12)], 3);
        let ic = InterleavedCode::new(code.clone(), 3).unwrap();
        let mut e = WordMatrix::zeros(3, code.n());
        e.set(0, 2, true); // row 1 and 2 untouched at column 2
        e.set(1, 5, true);
        e.set(0, 5, true);
        let out = joint_decode(&e, &ic).unwrap();
        assert!(out.is_corrected());
        assert_eq!(out.error_support, vec![2, 5]);
        let err = out.error.unwrap();
        assert!(!err.get(1, 2));
        assert!(!err.get(2, 2));
        assert!(!err.get(2, 5));
        assert!(err.get(0, 2));
        assert_eq!(out.elp.as_ref().unwrap().degree(), Some(2));
    }

    #[test]
    fn beyond_half_distance_succeeds_with_high_rate() {
        // q = 256, r = 6, l = 2, w = 3: t_sep = 3, t_max = ⌊(3/4)·6⌋ = 4
        let code = make_code(8, &[(1, 20), (2, 20)], 6);
        let mut ic = InterleavedCode::new(code.clone(), 3).unwrap();
        ic.set_fallback_rowwise(false);
        assert_eq!(ic.t_sep(), 3);
        assert_eq!(ic.t_max(), 4);
        let mut rng = ChaCha12Rng::seed_from_u64(99);
        let trials = 150;
        let mut ok = 0;
        for _ in 0..trials {
            let mut e = WordMatrix::zeros(3, code.n());
            let mut cols = Vec::new();
            while cols.len() < 4 {
                let c = rng.random_range(0..code.n());
                if !cols.contains(&c) {
                    cols.push(c);
                }
            }
            for &c in &cols {
                let pattern = rng.random_range(1..8u32);
                for w in 0..3 {
                    if (pattern >> w) & 1 == 1 {
                        e.set(w, c, true);
                    }
                }
            }
            let out = joint_decode(&e, &ic).unwrap();
            if out.is_corrected() {
                // no false uniqueness: the accepted λ reproduces low-degree ω
                let lambda = out.elp.as_ref().unwrap();
                let syn = joint_syndromes(&e, &ic).unwrap();
                for s in syn.polys() {
                    let omega = lambda.mul(s).rem(code.effective_goppa());
                    assert!(omega.degree().is_none_or(|d| d < lambda.degree().unwrap()));
                }
                for w in 0..3 {
                    assert!(code.is_codeword(&out.codeword.as_ref().unwrap().row_vec(w)));
                }
                if out.error.as_ref().unwrap() == &e {
                    ok += 1;
                }
            }
        }
        assert!(ok * 10 >= trials * 8, "success rate too low: {ok}/{trials}");
    }

    #[test]
    fn even_locator_codes_use_the_extra_equations() {
        // all locators of degree 2 over GF(16): the even-mode system must
        // still decode everything within t_sep
        let code = make_code(4, &[(2, 12)], 4); // t_sep = ⌊8/4⌋ = 2
        let ic = InterleavedCode::new(code.clone(), 2).unwrap();
        assert!(code.locators().all_even_degree());
        let mut rng = ChaCha12Rng::seed_from_u64(21);
        for _ in 0..60 {
            let mut e = WordMatrix::zeros(2, code.n());
            let mut cols = Vec::new();
            while cols.len() < 2 {
                let c = rng.random_range(0..code.n());
                if !cols.contains(&c) {
                    cols.push(c);
                }
            }
            for &c in &cols {
                let pattern = rng.random_range(1..4u32);
                if pattern & 1 == 1 {
                    e.set(0, c, true);
                }
                if pattern & 2 == 2 {
                    e.set(1, c, true);
                }
            }
            let out = joint_decode(&e, &ic).unwrap();
            assert!(out.is_corrected());
            assert_eq!(out.error.as_ref().unwrap(), &e);
        }
    }

    #[test]
    fn fallback_rowwise_rescues_unbalanced_bursts() {
        // many columns hit overall, but each row individually within t_sep
        let code = make_code(4, &[(1, 12)], 2); // t_sep = 2
        let ic = InterleavedCode::new(code.clone(), 2).unwrap();
        let mut e = WordMatrix::zeros(2, code.n());
        e.set(0, 0, true);
        e.set(0, 1, true);
        e.set(1, 2, true);
        e.set(1, 3, true);
        // 4 corrupted columns > t_max = ⌊(2/3)·4⌋ = 2, but rows have weight 2
        let out = joint_decode(&e, &ic).unwrap();
        assert!(out.is_corrected());
        assert_eq!(out.error_support, vec![0, 1, 2, 3]);
        assert_eq!(out.error.as_ref().unwrap(), &e);

        let mut no_fb = InterleavedCode::new(code, 2).unwrap();
        no_fb.set_fallback_rowwise(false);
        let out = joint_decode(&e, &no_fb).unwrap();
        assert!(!out.is_corrected());
    }
}
