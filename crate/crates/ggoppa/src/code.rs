//! Construction and validation of binary generalized Goppa codes Γ(L, G).
//!
//! A code is given by an ordered set L of pairwise-distinct monic irreducible
//! locator polynomials f_i over GF(2^m) and a Goppa polynomial G of degree r
//! with gcd(f_i, G) = 1. Codewords are the binary vectors c with
//! Σ c_i·f_i′(x)/f_i(x) ≡ 0 (mod G(x)).
//!
//! Two parity-check derivations are implemented:
//!
//! * the trace form: entry (j, i) of H is the trace of γ_i^j·G(γ_i)^(−1)
//!   taken in the residue field of f_i (the Frobenius orbit of γ_i runs over
//!   all conjugate roots, so the orbit sum is exactly the trace);
//! * the Euclidean form: column i of H̃ holds the coefficients of
//!   f_i′·(f_i^(−1) mod G) mod G, and H is recovered through the triangular
//!   Toeplitz matrix of G's coefficients (H̃ = T·H).
//!
//! Both must agree entrywise; the construction uses the trace form for H and
//! the polynomial route for H̃. The binary expansion replaces every GF(2^m)
//! entry by its m polynomial-basis bits, stacked as a column block.

use std::sync::OnceLock;

use crate::binmat::{BitMatrix, BitVec};
use crate::error::{Error, Result};
use crate::galois::{Fe, FieldCtx, ResidueField};
use crate::polyring::{self, Poly};
use num_bigint::BigUint;

// ---------------------------------------------------------------------------
// Dense matrices over GF(2^m)
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq)]
pub struct FqMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl FqMatrix {
    pub fn zeros(rows: usize, cols: usize) -> FqMatrix {
        FqMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    /// A·vᵀ for a binary vector v (selects and XORs columns).
    pub fn mul_bitvec(&self, v: &BitVec) -> Vec<Fe> {
        debug_assert_eq!(v.len(), self.cols);
        let mut out = vec![0 as Fe; self.rows];
        for c in 0..self.cols {
            if v.get(c) {
                for (r, o) in out.iter_mut().enumerate() {
                    *o ^= self.get(r, c);
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FqMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(12) {
            let row: Vec<String> = (0..self.cols.min(24))
                .map(|c| format!("{:x}", self.get(r, c)))
                .collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Locator sets
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LocatorOrder {
    /// Sort by (degree ascending, then coefficients compared from the highest
    /// degree down).
    Canonical,
    /// Keep the caller's order.
    Given,
}

/// An ordered, validated set of code locators with their residue fields.
pub struct LocatorSet {
    ctx: FieldCtx,
    locators: Vec<Poly>,
    fields: Vec<ResidueField>,
    lmax: usize,
    monic_scaled: bool,
}

impl std::fmt::Debug for LocatorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LocatorSet(n={}, l={})", self.locators.len(), self.lmax)
    }
}

impl LocatorSet {
    /// Validates locators against the Goppa polynomial: monic (auto-scaled
    /// with a warning flag otherwise), irreducible, pairwise distinct, and
    /// coprime to G. Error indices refer to the input order.
    pub fn validate(polys: &[Poly], goppa: &Poly, order: LocatorOrder) -> Result<LocatorSet> {
        if polys.is_empty() {
            return Err(Error::InvalidParameter("empty locator set".into()));
        }
        let ctx = polys[0].ctx().clone();
        if goppa.ctx() != &ctx || polys.iter().any(|p| p.ctx() != &ctx) {
            return Err(Error::InvalidParameter(
                "locators and Goppa polynomial must share one field".into(),
            ));
        }
        if goppa.degree().is_none_or(|d| d < 1) {
            return Err(Error::InvalidParameter(
                "Goppa polynomial must have degree >= 1".into(),
            ));
        }

        let mut monic_scaled = false;
        let mut locators = Vec::with_capacity(polys.len());
        for (index, p) in polys.iter().enumerate() {
            if p.degree().is_none_or(|d| d < 1) {
                return Err(Error::BadLocator {
                    index,
                    reason: "degree must be >= 1".into(),
                });
            }
            let p = if p.is_monic() {
                p.clone()
            } else {
                monic_scaled = true;
                p.make_monic()
            };
            if !polyring::is_irreducible(&p)? {
                return Err(Error::ReducibleLocator { index });
            }
            if goppa.rem(&p).is_zero() {
                return Err(Error::LocatorSharesGoppaFactor { index });
            }
            locators.push(p);
        }

        for index in 1..locators.len() {
            if let Some(first) = (0..index).find(|&j| locators[j] == locators[index]) {
                return Err(Error::DuplicateLocator { index, first });
            }
        }

        if order == LocatorOrder::Canonical {
            locators.sort_by_key(lex_key);
        }

        let lmax = locators
            .iter()
            .map(|p| p.degree().unwrap())
            .max()
            .unwrap();

        // Thm.-5 length bound; distinct irreducibles of degree <= lmax can
        // never exceed it, so a violation means broken arithmetic.
        let bound = max_length(lmax, &ctx);
        if BigUint::from(locators.len()) > bound {
            return Err(Error::Internal(format!(
                "locator count {} exceeds the degree-{} supply {}",
                locators.len(),
                lmax,
                bound
            )));
        }

        let fields = locators
            .iter()
            .map(|p| ResidueField::new(p.clone()))
            .collect::<Result<Vec<_>>>()?;

        Ok(LocatorSet {
            ctx,
            locators,
            fields,
            lmax,
            monic_scaled,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.locators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.locators.is_empty()
    }

    pub fn locator(&self, i: usize) -> &Poly {
        &self.locators[i]
    }

    pub fn locators(&self) -> &[Poly] {
        &self.locators
    }

    pub fn field(&self, i: usize) -> &ResidueField {
        &self.fields[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.locators[i].degree().unwrap()
    }

    /// Largest locator degree l.
    pub fn lmax(&self) -> usize {
        self.lmax
    }

    pub fn all_even_degree(&self) -> bool {
        self.locators.iter().all(|p| p.degree().unwrap() % 2 == 0)
    }

    /// True when some input locator had to be scaled to monic.
    pub fn monic_scaled(&self) -> bool {
        self.monic_scaled
    }
}

fn lex_key(p: &Poly) -> (usize, Vec<Fe>) {
    let mut coeffs = p.coeffs().to_vec();
    coeffs.reverse();
    (p.degree().unwrap(), coeffs)
}

// ---------------------------------------------------------------------------
// Parity-check matrices
// ---------------------------------------------------------------------------

/// Trace-form parity check: entry (j, i) is the trace of γ_i^j·G(γ_i)^(−1)
/// in the residue field of f_i, for j = 0..r−1.
pub fn build_parity_check_trace(locs: &LocatorSet, goppa: &Poly) -> Result<FqMatrix> {
    let r = goppa_degree(goppa)?;
    let n = locs.len();
    let mut h = FqMatrix::zeros(r, n);
    for i in 0..n {
        let rf = locs.field(i);
        let g_at_gamma = rf.eval_poly(goppa);
        if g_at_gamma.is_zero() {
            return Err(Error::Internal(format!(
                "G(γ) = 0 at validated locator {i}"
            )));
        }
        let ginv = rf.inv(&g_at_gamma)?;
        let gamma = rf.gamma();
        let mut p = ginv;
        for j in 0..r {
            h.set(j, i, rf.trace(&p));
            if j + 1 < r {
                p = rf.mul(&p, &gamma);
            }
        }
    }
    Ok(h)
}

/// Euclidean-form parity check. Column i of H̃ holds f_i′·(f_i^(−1) mod G)
/// mod G, row j carrying the coefficient of x^(r−1−j) so that the syndrome
/// convention s(x) = Σ s_j·x^(r−1−j) with s = r·H̃ᵀ is literal. H solves
/// H̃ = T·H for the lower-triangular Toeplitz T of G's coefficients.
pub fn build_parity_check_eea(locs: &LocatorSet, goppa: &Poly) -> Result<(FqMatrix, FqMatrix)> {
    let htilde = build_htilde(locs, goppa)?;
    let h = toeplitz_solve(goppa, &htilde)?;
    Ok((htilde, h))
}

fn build_htilde(locs: &LocatorSet, goppa: &Poly) -> Result<FqMatrix> {
    let r = goppa_degree(goppa)?;
    let n = locs.len();
    let mut htilde = FqMatrix::zeros(r, n);
    for i in 0..n {
        let col = syndrome_column(locs.locator(i), goppa)?;
        for j in 0..r {
            htilde.set(j, i, col[r - 1 - j]);
        }
    }
    Ok(htilde)
}

/// Coefficients (low-to-high, padded to deg modulus) of
/// f′·(f^(−1) mod modulus) mod modulus.
pub fn syndrome_column(f: &Poly, modulus: &Poly) -> Result<Vec<Fe>> {
    let d = goppa_degree(modulus)?;
    let inv = polyring::inv_mod(f, modulus)?;
    let col = f.derivative().mul(&inv).rem(modulus);
    let mut out = col.coeffs().to_vec();
    out.resize(d, 0);
    Ok(out)
}

/// The r×r lower-triangular Toeplitz matrix with (a, b) entry G_(r−a+b)
/// (0-indexed, b ≤ a). Invertible whenever deg G = r since the diagonal is
/// the leading coefficient.
pub fn lower_toeplitz(goppa: &Poly) -> Result<FqMatrix> {
    let r = goppa_degree(goppa)?;
    let mut t = FqMatrix::zeros(r, r);
    for a in 0..r {
        for b in 0..=a {
            t.set(a, b, goppa.coeff(r - a + b));
        }
    }
    Ok(t)
}

fn toeplitz_solve(goppa: &Poly, htilde: &FqMatrix) -> Result<FqMatrix> {
    let ctx = goppa.ctx();
    let r = htilde.rows();
    let lc_inv = ctx.inv(goppa.lc())?;
    let mut h = FqMatrix::zeros(r, htilde.cols());
    for i in 0..htilde.cols() {
        for a in 0..r {
            let mut acc = htilde.get(a, i);
            for b in 0..a {
                let t_ab = goppa.coeff(r - a + b);
                if t_ab != 0 {
                    acc ^= ctx.mul(t_ab, h.get(b, i));
                }
            }
            h.set(a, i, ctx.mul(acc, lc_inv));
        }
    }
    Ok(h)
}

fn goppa_degree(goppa: &Poly) -> Result<usize> {
    match goppa.degree() {
        Some(d) if d >= 1 => Ok(d),
        _ => Err(Error::InvalidParameter(
            "Goppa polynomial must have degree >= 1".into(),
        )),
    }
}

/// Replace every GF(2^m) entry with its m polynomial-basis bits, stacked as a
/// column block; block row order follows the original rows.
pub fn expand_binary(h: &FqMatrix, ctx: &FieldCtx) -> BitMatrix {
    let m = ctx.m() as usize;
    let mut hbin = BitMatrix::zeros(h.rows() * m, h.cols());
    for j in 0..h.rows() {
        for i in 0..h.cols() {
            let e = h.get(j, i);
            for bit in 0..m {
                if (e >> bit) & 1 == 1 {
                    hbin.set(j * m + bit, i, true);
                }
            }
        }
    }
    hbin
}

/// k = n − rank(H_bin).
pub fn code_dimension(hbin: &BitMatrix) -> usize {
    hbin.cols() - hbin.rank()
}

/// Rows form a basis of the nullspace of H_bin.
pub fn build_generator(hbin: &BitMatrix) -> BitMatrix {
    hbin.nullspace()
}

/// The T of the systematic form (I_(n−k) | T); errors when the leftmost
/// block is singular (no column permutation is attempted).
pub fn systematic_public_key(hbin: &BitMatrix) -> Result<BitMatrix> {
    hbin.systematic_t()
}

/// Public key byte count ⌈(n·m·r − m²·r²)/8⌉; requires n > m·r.
pub fn public_key_bytes(n: u64, m: u64, r: u64) -> Result<u64> {
    if n <= m * r {
        return Err(Error::InvalidParameter(format!(
            "public key size needs n > m·r, got n={n}, m·r={}",
            m * r
        )));
    }
    let bits = n * m * r - m * m * r * r;
    Ok(bits.div_ceil(8))
}

/// Thm.-5 length bound: Σ_{t=1}^{l} I_q(t).
pub fn max_length(l: usize, ctx: &FieldCtx) -> BigUint {
    assert!(l >= 1);
    (1..=l)
        .map(|t| polyring::count_irreducibles(ctx, t))
        .sum()
}

/// True iff all roots of G are distinct, i.e. gcd(G, G′) = 1.
pub fn is_separable(goppa: &Poly) -> bool {
    debug_assert!(goppa.degree().is_some_and(|d| d >= 1));
    goppa.gcd(&goppa.derivative()).degree() == Some(0)
}

/// The effective Goppa polynomial Ĝ the decoders reduce by: G² when G is
/// separable, otherwise the lowest-degree perfect square divisible by G.
/// Over characteristic 2, gcd(G, G′) collects exactly the even part of every
/// factor multiplicity, so Ĝ = G²/gcd(G, G′).
pub fn effective_goppa(goppa: &Poly) -> Poly {
    if is_separable(goppa) {
        return goppa.mul(goppa);
    }
    let v2 = goppa.gcd(&goppa.derivative());
    goppa.mul(goppa).div_exact(&v2)
}

// ---------------------------------------------------------------------------
// Distance bounds
// ---------------------------------------------------------------------------

/// An exact nonnegative rational bound.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundRatio {
    pub num: u64,
    pub den: u64,
}

impl BoundRatio {
    pub fn new(num: u64, den: u64) -> BoundRatio {
        debug_assert!(den > 0);
        BoundRatio { num, den }
    }

    pub fn floor(&self) -> u64 {
        self.num / self.den
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }
}

impl std::fmt::Display for BoundRatio {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.num.is_multiple_of(self.den) {
            write!(f, "{}", self.num / self.den)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DistanceBounds {
    /// (r+1)/l, any Goppa polynomial.
    pub d_g: BoundRatio,
    /// (2r+1)/l, separable G only.
    pub d_sep: Option<BoundRatio>,
    /// (2r+2)/l, separable G and all locator degrees even.
    pub d_even: Option<BoundRatio>,
}

impl DistanceBounds {
    pub fn compute(r: u64, lmax: u64, separable: bool, all_even: bool) -> DistanceBounds {
        DistanceBounds {
            d_g: BoundRatio::new(r + 1, lmax),
            d_sep: separable.then(|| BoundRatio::new(2 * r + 1, lmax)),
            d_even: (separable && all_even).then(|| BoundRatio::new(2 * r + 2, lmax)),
        }
    }

    /// The sharpest applicable bound.
    pub fn best(&self) -> BoundRatio {
        self.d_even.or(self.d_sep).unwrap_or(self.d_g)
    }
}

// ---------------------------------------------------------------------------
// GGCode
// ---------------------------------------------------------------------------

/// A validated code Γ(L, G) with its parity-check matrices.
pub struct GGCode {
    locs: LocatorSet,
    goppa: Poly,
    effective: Poly,
    separable: bool,
    h: FqMatrix,
    htilde: FqMatrix,
    hbin: BitMatrix,
    k: usize,
    within_design_dims: bool,
    generator: OnceLock<BitMatrix>,
    syndrome_cols: OnceLock<Vec<Vec<Fe>>>,
}

impl GGCode {
    pub fn new(locs: LocatorSet, goppa: Poly) -> Result<GGCode> {
        let r = goppa_degree(&goppa)?;
        if goppa.ctx() != locs.ctx() {
            return Err(Error::InvalidParameter(
                "locators and Goppa polynomial must share one field".into(),
            ));
        }
        for (index, f) in locs.locators().iter().enumerate() {
            if goppa.rem(f).is_zero() {
                return Err(Error::LocatorSharesGoppaFactor { index });
            }
        }

        let separable = is_separable(&goppa);
        let effective = effective_goppa(&goppa);
        let h = build_parity_check_trace(&locs, &goppa)?;
        let htilde = build_htilde(&locs, &goppa)?;
        let hbin = expand_binary(&h, locs.ctx());
        let k = code_dimension(&hbin);
        let within_design_dims = r * locs.ctx().m() as usize <= locs.len();

        Ok(GGCode {
            locs,
            goppa,
            effective,
            separable,
            h,
            htilde,
            hbin,
            k,
            within_design_dims,
            generator: OnceLock::new(),
            syndrome_cols: OnceLock::new(),
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        self.locs.ctx()
    }

    pub fn locators(&self) -> &LocatorSet {
        &self.locs
    }

    pub fn goppa(&self) -> &Poly {
        &self.goppa
    }

    /// Ĝ, the polynomial the decoders reduce by.
    pub fn effective_goppa(&self) -> &Poly {
        &self.effective
    }

    pub fn is_separable(&self) -> bool {
        self.separable
    }

    pub fn n(&self) -> usize {
        self.locs.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.goppa.degree().unwrap()
    }

    pub fn m(&self) -> u32 {
        self.ctx().m()
    }

    pub fn lmax(&self) -> usize {
        self.locs.lmax()
    }

    /// rm ≤ n, the design-dimension condition. Codes violating it are still
    /// constructible and decodable; they just cannot promise k > 0.
    pub fn within_design_dims(&self) -> bool {
        self.within_design_dims
    }

    pub fn h(&self) -> &FqMatrix {
        &self.h
    }

    pub fn htilde(&self) -> &FqMatrix {
        &self.htilde
    }

    pub fn hbin(&self) -> &BitMatrix {
        &self.hbin
    }

    pub fn bounds(&self) -> DistanceBounds {
        DistanceBounds::compute(
            self.r() as u64,
            self.lmax() as u64,
            self.separable,
            self.locs.all_even_degree(),
        )
    }

    /// Unique decoding radius ⌊deg Ĝ/(2l)⌋ (= ⌊r/l⌋ for separable G).
    pub fn t_sep(&self) -> usize {
        self.effective.degree().unwrap() / (2 * self.lmax())
    }

    pub fn generator(&self) -> &BitMatrix {
        self.generator.get_or_init(|| build_generator(&self.hbin))
    }

    /// Per-locator coefficient vectors of f_i′·(f_i^(−1) mod Ĝ) mod Ĝ,
    /// the columns the syndrome polynomial is assembled from.
    pub fn syndrome_columns(&self) -> &Vec<Vec<Fe>> {
        self.syndrome_cols.get_or_init(|| {
            self.locs
                .locators()
                .iter()
                .map(|f| {
                    syndrome_column(f, &self.effective)
                        .expect("locators are coprime to Ĝ by validation")
                })
                .collect()
        })
    }

    pub fn is_codeword(&self, word: &BitVec) -> bool {
        word.len() == self.n() && self.hbin.mul_vec(word).is_zero()
    }

    /// Message (k bits) to codeword (n bits) through the generator basis.
    pub fn encode(&self, msg: &BitVec) -> Result<BitVec> {
        if msg.len() != self.k {
            return Err(Error::LengthMismatch {
                expected: self.k,
                got: msg.len(),
            });
        }
        let gen = self.generator();
        let mut out = BitVec::zeros(self.n());
        for i in 0..self.k {
            if msg.get(i) {
                gen.xor_row_vec(&mut out, i);
            }
        }
        Ok(out)
    }
}

/// The defining membership sum Σ_{i: word_i = 1} f_i′·(f_i^(−1) mod modulus)
/// mod modulus. Zero exactly on codewords when `modulus` is G (or Ĝ).
pub fn defining_sum(locs: &LocatorSet, modulus: &Poly, word: &BitVec) -> Result<Poly> {
    if word.len() != locs.len() {
        return Err(Error::LengthMismatch {
            expected: locs.len(),
            got: word.len(),
        });
    }
    let mut acc = Poly::zero(locs.ctx());
    for i in 0..locs.len() {
        if word.get(i) {
            let f = locs.locator(i);
            let term = f
                .derivative()
                .mul(&polyring::inv_mod(f, modulus)?)
                .rem(modulus);
            acc = acc.add(&term);
        }
    }
    Ok(acc)
}
