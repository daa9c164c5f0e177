//! Dense univariate polynomials over GF(2^m): extended Euclidean algorithm
//! (full and partially stopped), formal derivative, irreducibility testing,
//! irreducible enumeration, and the Möbius count of monic irreducibles.
//!
//! Coefficients are stored low-to-high with no trailing zeros; the zero
//! polynomial is the empty list and its degree is `None` rather than any
//! integer sentinel.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::galois::{Fe, FieldCtx};

#[derive(Clone)]
pub struct Poly {
    ctx: FieldCtx,
    coeffs: Vec<Fe>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.coeffs == other.coeffs
    }
}
impl Eq for Poly {}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

/// The crate-wide text encoding: comma-separated hex coefficients, low-to-high.
impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("{c:x}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Poly {
    pub fn zero(ctx: &FieldCtx) -> Poly {
        Poly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &FieldCtx) -> Poly {
        Poly::constant(ctx, 1)
    }

    pub fn x(ctx: &FieldCtx) -> Poly {
        Poly {
            ctx: ctx.clone(),
            coeffs: vec![0, 1],
        }
    }

    pub fn constant(ctx: &FieldCtx, c: Fe) -> Poly {
        let coeffs = if c == 0 { Vec::new() } else { vec![c] };
        Poly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn monomial(ctx: &FieldCtx, c: Fe, deg: usize) -> Poly {
        if c == 0 {
            return Poly::zero(ctx);
        }
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Poly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn from_coeffs(ctx: &FieldCtx, mut coeffs: Vec<Fe>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            ctx: ctx.clone(),
            coeffs,
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    /// None is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient; 0 for the zero polynomial.
    pub fn lc(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lc() == 1
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.ctx, rhs.ctx);
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (&self.coeffs, &rhs.coeffs)
        } else {
            (&rhs.coeffs, &self.coeffs)
        };
        let mut out = long.clone();
        for (i, &c) in short.iter().enumerate() {
            out[i] ^= c;
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.ctx, rhs.ctx);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![0 as Fe; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] ^= self.ctx.mul(a, b);
                }
            }
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn scale(&self, c: Fe) -> Poly {
        if c == 0 {
            return Poly::zero(&self.ctx);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.ctx.mul(a, c)).collect();
        Poly::from_coeffs(&self.ctx, coeffs)
    }

    /// Multiply by x^k.
    pub fn shl(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }

    /// Long division. Panics on a zero divisor.
    pub fn divmod(&self, rhs: &Poly) -> (Poly, Poly) {
        debug_assert_eq!(self.ctx, rhs.ctx);
        let dr = rhs.degree().expect("division by the zero polynomial");
        let da = match self.degree() {
            Some(d) if d >= dr => d,
            _ => return (Poly::zero(&self.ctx), self.clone()),
        };
        let lc_inv = self.ctx.inv(rhs.lc()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0 as Fe; da - dr + 1];
        for k in (0..=da - dr).rev() {
            let top = rem[k + dr];
            if top == 0 {
                continue;
            }
            let q = self.ctx.mul(top, lc_inv);
            quot[k] = q;
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                if b != 0 {
                    rem[k + j] ^= self.ctx.mul(q, b);
                }
            }
        }
        (
            Poly::from_coeffs(&self.ctx, quot),
            Poly::from_coeffs(&self.ctx, rem),
        )
    }

    pub fn rem(&self, rhs: &Poly) -> Poly {
        self.divmod(rhs).1
    }

    /// Exact division; the remainder must be zero.
    pub fn div_exact(&self, rhs: &Poly) -> Poly {
        let (q, r) = self.divmod(rhs);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    /// Formal derivative. Over characteristic 2 the even-power terms vanish.
    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.ctx);
        }
        let mut out = vec![0 as Fe; self.coeffs.len() - 1];
        for (k, &c) in self.coeffs.iter().enumerate().skip(1) {
            if k % 2 == 1 {
                out[k - 1] = c;
            }
        }
        Poly::from_coeffs(&self.ctx, out)
    }

    pub fn eval(&self, at: Fe) -> Fe {
        let mut acc = 0;
        for &c in self.coeffs.iter().rev() {
            acc = self.ctx.mul(acc, at) ^ c;
        }
        acc
    }

    pub fn make_monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        let inv = self.ctx.inv(self.lc()).expect("nonzero leading coefficient");
        self.scale(inv)
    }

    /// Monic greatest common divisor; gcd(a, 0) = monic a, gcd(0, 0) = 0.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }
}

/// Multiply by x and reduce modulo `m` (single reduction step).
pub fn mul_x_mod(p: &Poly, m: &Poly) -> Poly {
    let dm = m.degree().expect("nonzero modulus");
    debug_assert!(p.degree().is_none_or(|d| d < dm));
    let shifted = p.shl(1);
    match shifted.degree() {
        Some(d) if d == dm => {
            let factor = shifted
                .ctx()
                .div(shifted.lc(), m.lc())
                .expect("nonzero leading coefficient");
            shifted.add(&m.scale(factor))
        }
        _ => shifted,
    }
}

/// Full extended Euclidean algorithm.
///
/// Requires a ≠ 0 and deg a > deg b with b ≠ 0. Returns (d, s, t) with
/// d = a·s + b·t, gcd(s, t) = 1 and deg t + deg d < deg a; d is monic.
pub fn eea(a: &Poly, b: &Poly) -> Result<(Poly, Poly, Poly)> {
    check_eea_pre(a, b)?;
    let ctx = a.ctx().clone();
    let mut r_prev = a.clone();
    let mut r_cur = b.clone();
    let mut s_prev = Poly::one(&ctx);
    let mut s_cur = Poly::zero(&ctx);
    let mut t_prev = Poly::zero(&ctx);
    let mut t_cur = Poly::one(&ctx);

    while !r_cur.is_zero() {
        let (q, r_next) = r_prev.divmod(&r_cur);
        let s_next = s_prev.add(&q.mul(&s_cur));
        let t_next = t_prev.add(&q.mul(&t_cur));
        debug_assert_eq!(r_next, a.mul(&s_next).add(&b.mul(&t_next)));
        r_prev = r_cur;
        r_cur = r_next;
        s_prev = s_cur;
        s_cur = s_next;
        t_prev = t_cur;
        t_cur = t_next;
    }

    let lc_inv = a.ctx().inv(r_prev.lc())?;
    Ok((
        r_prev.scale(lc_inv),
        s_prev.scale(lc_inv),
        t_prev.scale(lc_inv),
    ))
}

/// EEA remainder sequence on (a, b), stopped at the FIRST remainder r with
/// deg r < dstop. Returns (omega, lambda) = (r, co-factor of b), so that
/// omega ≡ lambda·b (mod a) and deg lambda ≤ deg a − dstop.
///
/// lambda is intentionally not normalized: root sets are scalar-invariant.
pub fn eea_partial(a: &Poly, b: &Poly, dstop: usize) -> Result<(Poly, Poly)> {
    if a.is_zero() {
        return Err(Error::InvalidParameter("eea_partial: a must be nonzero".into()));
    }
    if !b.is_zero() && b.degree() >= a.degree() {
        return Err(Error::InvalidParameter(
            "eea_partial requires deg a > deg b".into(),
        ));
    }
    let ctx = a.ctx().clone();
    let mut r_prev = a.clone();
    let mut r_cur = b.clone();
    let mut t_prev = Poly::zero(&ctx);
    let mut t_cur = Poly::one(&ctx);

    while r_cur.degree().is_some_and(|d| d >= dstop) {
        let (q, r_next) = r_prev.divmod(&r_cur);
        let t_next = t_prev.add(&q.mul(&t_cur));
        r_prev = r_cur;
        r_cur = r_next;
        t_prev = t_cur;
        t_cur = t_next;
        debug_assert_eq!(r_cur.rem(a), t_cur.mul(b).rem(a));
    }
    Ok((r_cur, t_cur))
}

fn check_eea_pre(a: &Poly, b: &Poly) -> Result<()> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidParameter(
            "eea requires nonzero inputs".into(),
        ));
    }
    if b.degree() >= a.degree() {
        return Err(Error::InvalidParameter("eea requires deg a > deg b".into()));
    }
    Ok(())
}

/// Multiplicative inverse of b modulo a (deg a ≥ 1, gcd(a, b) = 1):
/// the t with b·t ≡ 1 (mod a) and deg t < deg a.
pub fn inv_mod(b: &Poly, a: &Poly) -> Result<Poly> {
    if a.degree().is_none_or(|d| d < 1) {
        return Err(Error::InvalidParameter(
            "inv_mod requires a modulus of degree >= 1".into(),
        ));
    }
    let br = b.rem(a);
    if br.is_zero() {
        return Err(Error::NotCoprime);
    }
    if br.degree() == Some(0) {
        return Ok(Poly::constant(a.ctx(), a.ctx().inv(br.coeff(0))?));
    }
    let (d, _, t) = eea(a, &br)?;
    if d.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    Ok(t.rem(a))
}

/// h ↦ h^q mod f by m squarings.
fn pow_q_mod(h: &Poly, f: &Poly) -> Poly {
    let mut cur = h.clone();
    for _ in 0..h.ctx().m() {
        cur = cur.mul(&cur).rem(f);
    }
    cur
}

/// Rabin test: f of degree t is irreducible over F_q iff x^(q^t) ≡ x (mod f)
/// and gcd(x^(q^(t/p)) − x, f) = 1 for every prime p | t.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let t = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidParameter(
                "irreducibility is only defined for degree >= 1".into(),
            ))
        }
    };
    let f = f.make_monic();
    if t == 1 {
        return Ok(true);
    }
    let x = Poly::x(f.ctx()).rem(&f);
    let mut checkpoints: Vec<usize> = prime_factors_usize(t).into_iter().map(|p| t / p).collect();
    checkpoints.sort_unstable();
    checkpoints.dedup();

    let mut h = x.clone();
    let mut ci = 0;
    for k in 1..=t {
        h = pow_q_mod(&h, &f);
        if ci < checkpoints.len() && checkpoints[ci] == k {
            ci += 1;
            let diff = h.add(&x);
            if diff.is_zero() {
                // every root already lies in a proper subfield
                return Ok(false);
            }
            if f.gcd(&diff).degree() != Some(0) {
                return Ok(false);
            }
        }
    }
    Ok(h == x)
}

fn prime_factors_usize(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Möbius function: 1 at 1, (−1)^s on squarefree products of s primes, else 0.
fn moebius(n: usize) -> i32 {
    if n == 1 {
        return 1;
    }
    let mut n = n;
    let mut s = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            s += 1;
        }
        p += 1;
    }
    if n > 1 {
        s += 1;
    }
    if s % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Number of monic irreducible polynomials of degree t over GF(2^m):
/// I_q(t) = (1/t) Σ_{k|t} μ(k)·q^(t/k).
pub fn count_irreducibles(ctx: &FieldCtx, t: usize) -> BigUint {
    assert!(t >= 1, "degree must be >= 1");
    let m = ctx.m() as usize;
    let mut pos = BigUint::from(0u32);
    let mut neg = BigUint::from(0u32);
    for k in 1..=t {
        if !t.is_multiple_of(k) {
            continue;
        }
        let term = BigUint::from(1u32) << (m * (t / k));
        match moebius(k) {
            1 => pos += term,
            -1 => neg += term,
            _ => {}
        }
    }
    let diff = pos - neg;
    let (q, r) = num_integer_div_rem(&diff, t as u64);
    assert!(r == BigUint::from(0u32), "Möbius sum must be divisible by t");
    q
}

fn num_integer_div_rem(a: &BigUint, d: u64) -> (BigUint, BigUint) {
    let d = BigUint::from(d);
    (a / &d, a % &d)
}

/// All monic irreducible polynomials of degree t, in lexicographic
/// coefficient order (coefficients compared from the highest degree down,
/// each by its integer encoding).
pub fn irreducibles(ctx: &FieldCtx, t: usize) -> Irreducibles {
    assert!(t >= 1, "degree must be >= 1");
    Irreducibles {
        ctx: ctx.clone(),
        digits: Some(vec![0; t]),
    }
}

/// The first `limit` entries of the `irreducibles` stream.
pub fn enumerate_irreducibles(ctx: &FieldCtx, t: usize, limit: usize) -> Vec<Poly> {
    irreducibles(ctx, t).take(limit).collect()
}

pub struct Irreducibles {
    ctx: FieldCtx,
    // low coefficients c_0..c_(t−1) as an odometer, c_0 fastest
    digits: Option<Vec<Fe>>,
}

impl Irreducibles {
    fn advance(&mut self) {
        let q = self.ctx.size() as Fe;
        let digits = self.digits.as_mut().expect("advance past end");
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                return;
            }
            *d = 0;
        }
        self.digits = None;
    }
}

impl Iterator for Irreducibles {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        loop {
            let digits = self.digits.as_ref()?;
            let mut coeffs = digits.clone();
            coeffs.push(1);
            let cand = Poly::from_coeffs(&self.ctx, coeffs);
            self.advance();
            if is_irreducible(&cand).expect("degree >= 1 by construction") {
                return Some(cand);
            }
        }
    }
}
