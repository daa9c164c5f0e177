//! Syndrome decoding of Γ(L, G) up to the unique radius t_sep.
//!
//! The decoder always works modulo the effective Goppa polynomial Ĝ (G² for
//! separable G), which is what doubles the radius to ⌊r/l⌋:
//!
//! 1. s(x) = Σ r_i·f_i′·(f_i^(−1) mod Ĝ) mod Ĝ; zero iff r is a codeword.
//! 2. Partially-stopped EEA on (Ĝ, s) with stopping degree ⌈deg Ĝ/2⌉ yields
//!    (ω, λ) with ω ≡ λ·s (mod Ĝ). For an error of weight t ≤ t_sep, λ is a
//!    scalar multiple of the error locator Λ = Π_{i∈E} f_i.
//! 3. λ(γ_i) = 0 is decided by reducing λ modulo f_i: for irreducible f_i
//!    one root vanishing is equivalent to f_i | λ.
//! 4. The candidate correction is verified: located degrees must sum to
//!    deg λ and the re-computed syndrome must vanish. Any miss is reported
//!    as an explicit failure instead of a silent miscorrection.

use crate::binmat::{BitVec, WordMatrix};
use crate::code::GGCode;
use crate::error::{Error, Result};
use crate::polyring::{self, Poly};

/// The w syndrome polynomials of a received word matrix, all reduced mod Ĝ.
#[derive(Clone, Debug)]
pub struct SyndromeSet {
    polys: Vec<Poly>,
    modulus_degree: usize,
}

impl SyndromeSet {
    pub fn new(polys: Vec<Poly>, modulus_degree: usize) -> SyndromeSet {
        debug_assert!(polys
            .iter()
            .all(|s| s.degree().is_none_or(|d| d < modulus_degree)));
        SyndromeSet {
            polys,
            modulus_degree,
        }
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn modulus_degree(&self) -> usize {
        self.modulus_degree
    }

    pub fn all_zero(&self) -> bool {
        self.polys.iter().all(|s| s.is_zero())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FailureReason {
    /// Sum of located locator degrees differs from deg λ.
    DegreeMismatch,
    /// The corrected word still has a nonzero syndrome.
    ResidualSyndrome,
    /// The joint key-equation system had no unique lowest-degree solution.
    NotUnique,
    /// A recovered error value fell outside {0, 1}.
    NonBinaryErrorValue,
    /// λ′ vanished at a located root.
    ForneyDerivativeVanishes,
    /// A located column recovered as all-zero.
    SpuriousLocator,
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            FailureReason::DegreeMismatch => "located degrees do not account for deg λ",
            FailureReason::ResidualSyndrome => "corrected word has nonzero syndrome",
            FailureReason::NotUnique => "key-equation solution not unique",
            FailureReason::NonBinaryErrorValue => "non-binary error value",
            FailureReason::ForneyDerivativeVanishes => "Forney derivative vanishes",
            FailureReason::SpuriousLocator => "spurious locator",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DecodeStatus {
    Corrected,
    Failed(FailureReason),
}

/// Outcome of a (joint) decoding attempt. `codeword` and `error` are w×n
/// word matrices; for plain decoding w = 1.
#[derive(Debug)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    pub codeword: Option<WordMatrix>,
    pub error: Option<WordMatrix>,
    /// Indices of corrupted locators (non-zero error columns).
    pub error_support: Vec<usize>,
    /// Monic error locator Λ, when one was determined.
    pub elp: Option<Poly>,
    /// Error evaluators, one per interleaved row.
    pub eeps: Vec<Poly>,
}

impl DecodeOutcome {
    pub fn failure(reason: FailureReason) -> DecodeOutcome {
        DecodeOutcome {
            status: DecodeStatus::Failed(reason),
            codeword: None,
            error: None,
            error_support: Vec::new(),
            elp: None,
            eeps: Vec::new(),
        }
    }

    pub fn is_corrected(&self) -> bool {
        self.status == DecodeStatus::Corrected
    }
}

/// s(x) = Σ r_i·f_i′/f_i mod Ĝ, assembled from cached per-locator columns.
pub fn compute_syndrome(rcv: &BitVec, code: &GGCode) -> Result<Poly> {
    if rcv.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: rcv.len(),
        });
    }
    let gdeg = code.effective_goppa().degree().unwrap();
    let cols = code.syndrome_columns();
    let mut acc = vec![0; gdeg];
    for (i, col) in cols.iter().enumerate() {
        if rcv.get(i) {
            for (a, &c) in acc.iter_mut().zip(col) {
                *a ^= c;
            }
        }
    }
    Ok(Poly::from_coeffs(code.ctx(), acc))
}

/// Key-equation solver: partially-stopped EEA on (Ĝ, s) with stopping degree
/// ⌈deg Ĝ/2⌉. Returns (λ, ω); λ keeps its EEA scalar.
pub fn solve_key_equation(s: &Poly, code: &GGCode) -> Result<(Poly, Poly)> {
    if s.is_zero() {
        return Err(Error::InvalidParameter(
            "zero syndrome short-circuits before the key equation".into(),
        ));
    }
    let ghat = code.effective_goppa();
    let dstop = ghat.degree().unwrap().div_ceil(2);
    let (omega, lambda) = polyring::eea_partial(ghat, s, dstop)?;
    Ok((lambda, omega))
}

/// E = { i : λ(γ_i) = 0 } = { i : f_i | λ }, by reduction modulo each
/// locator.
pub fn locate_errors(lambda: &Poly, code: &GGCode) -> Vec<usize> {
    debug_assert!(!lambda.is_zero());
    (0..code.n())
        .filter(|&i| lambda.rem(code.locators().locator(i)).is_zero())
        .collect()
}

/// Algorithm: syndrome, key equation, root location, verified correction.
/// Guaranteed to correct any error of weight ≤ t_sep; overweight errors
/// either fail verification or miscorrect onto another codeword.
pub fn decode_one(rcv: &BitVec, code: &GGCode) -> Result<DecodeOutcome> {
    let s = compute_syndrome(rcv, code)?;
    if s.is_zero() {
        return Ok(corrected_outcome(
            vec![rcv.clone()],
            vec![BitVec::zeros(code.n())],
            Vec::new(),
            Poly::one(code.ctx()),
            vec![Poly::zero(code.ctx())],
        ));
    }

    let (lambda, omega) = solve_key_equation(&s, code)?;
    if lambda.is_zero() {
        return Err(Error::Internal("EEA produced a zero co-factor".into()));
    }
    let scale = code.ctx().inv(lambda.lc())?;
    let lambda_monic = lambda.scale(scale);
    let omega_scaled = omega.scale(scale);

    let support = locate_errors(&lambda_monic, code);
    let located_degree: usize = support.iter().map(|&i| code.locators().degree(i)).sum();
    if located_degree != lambda_monic.degree().unwrap() {
        return Ok(DecodeOutcome::failure(FailureReason::DegreeMismatch));
    }

    let mut error = BitVec::zeros(code.n());
    for &i in &support {
        error.set(i, true);
    }
    let mut codeword = rcv.clone();
    codeword.xor_assign(&error);
    if !compute_syndrome(&codeword, code)?.is_zero() {
        return Ok(DecodeOutcome::failure(FailureReason::ResidualSyndrome));
    }

    Ok(corrected_outcome(
        vec![codeword],
        vec![error],
        support,
        lambda_monic,
        vec![omega_scaled],
    ))
}

pub(crate) fn corrected_outcome(
    codeword_rows: Vec<BitVec>,
    error_rows: Vec<BitVec>,
    error_support: Vec<usize>,
    elp: Poly,
    eeps: Vec<Poly>,
) -> DecodeOutcome {
    DecodeOutcome {
        status: DecodeStatus::Corrected,
        codeword: Some(WordMatrix::from_rows(&codeword_rows)),
        error: Some(WordMatrix::from_rows(&error_rows)),
        error_support,
        elp: Some(elp),
        eeps,
    }
}
