//! Arithmetic in GF(2^m) and in residue extension fields F_q[y]/(f(y)).
//!
//! `FieldCtx` fixes the base field GF(2^m) (1 ≤ m ≤ 16): elements are integers
//! in [0, 2^m) whose bit i is the coefficient of α^i in the polynomial basis
//! {1, α, …, α^(m−1)}. The modulus is the lexicographically smallest degree-m
//! irreducible polynomial over F_2 (coefficients compared from the highest
//! degree down), so encodings are deterministic across runs. Multiplication
//! and inversion go through log/antilog tables built from a fixed primitive
//! element.
//!
//! `ResidueField` is F_q[y]/(f(y)) for a monic irreducible f of degree l. The
//! class of y is a designated root γ of f, and evaluating any g ∈ F_q[x] at γ
//! is exactly g mod f. The Frobenius map β ↦ β^q permutes the l conjugate
//! roots {γ, γ^q, …, γ^(q^(l−1))}, and the trace Σ β^(q^ι) always lands in
//! the base field.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyring::Poly;

/// A base-field element encoding. Valid values are below 2^m.
pub type Fe = u16;

// ---------------------------------------------------------------------------
// Bootstrap arithmetic on F_2[x] packed into integers (bit i = coeff of x^i).
// Only used to pick the modulus and to build the log tables.
// ---------------------------------------------------------------------------

fn f2_deg(p: u64) -> u32 {
    debug_assert!(p != 0);
    63 - p.leading_zeros()
}

fn f2_mul(a: u64, b: u64) -> u64 {
    let mut out = 0u64;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            out ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    out
}

fn f2_rem(mut a: u64, m: u64) -> u64 {
    let dm = f2_deg(m);
    while a != 0 && f2_deg(a) >= dm {
        a ^= m << (f2_deg(a) - dm);
    }
    a
}

fn f2_mulmod(a: u64, b: u64, m: u64) -> u64 {
    f2_rem(f2_mul(a, b), m)
}

fn f2_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = f2_rem(a, b);
        a = b;
        b = r;
    }
    a
}

fn prime_factors(mut n: u64) -> Vec<u64> {
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

/// Rabin irreducibility test for a binary polynomial of degree t ≥ 1.
fn f2_is_irreducible(f: u64) -> bool {
    let t = f2_deg(f) as u64;
    if t == 1 {
        return true;
    }
    let x = f2_rem(2, f);
    // h_k = x^(2^k) mod f, obtained by k successive squarings
    let mut h = x;
    let mut checkpoints = prime_factors(t)
        .into_iter()
        .map(|p| t / p)
        .collect::<Vec<_>>();
    checkpoints.sort_unstable();
    checkpoints.dedup();
    let mut ci = 0;
    for k in 1..=t {
        h = f2_mulmod(h, h, f);
        if ci < checkpoints.len() && checkpoints[ci] == k {
            ci += 1;
            if f2_deg(f2_gcd(h ^ x, f).max(1)) != 0 && (h ^ x) != 0 {
                return false;
            }
            if (h ^ x) == 0 {
                // x^(2^(t/p)) = x means f splits over a proper subfield
                return false;
            }
        }
    }
    h == x
}

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

struct CtxInner {
    m: u32,
    modulus: u32,
    order: u32, // 2^m − 1
    generator: Fe,
    log: Vec<u16>,
    alog: Vec<Fe>, // doubled so products index without a modulo
}

/// The base field GF(2^m). Cheap to clone, immutable, freely shareable.
#[derive(Clone)]
pub struct FieldCtx(Arc<CtxInner>);

impl std::fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FieldCtx(m={}, modulus={:#b})", self.0.m, self.0.modulus)
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FieldCtx {}

impl FieldCtx {
    /// Builds GF(2^m) with the canonical (lexicographically smallest) modulus.
    pub fn new(m: u32) -> Result<FieldCtx> {
        if !(1..=16).contains(&m) {
            return Err(Error::InvalidParameter(format!(
                "extension degree m={m} out of range [1, 16]"
            )));
        }
        let modulus = (0..1u64 << m)
            .map(|v| (1u64 << m) | v)
            .find(|&f| f2_is_irreducible(f))
            .expect("an irreducible polynomial of every degree exists") as u32;

        let order = (1u32 << m) - 1;
        let generator = Self::find_generator(modulus as u64, order);

        let mut alog = vec![0 as Fe; 2 * order as usize];
        let mut log = vec![0u16; 1 << m];
        let mut acc = 1u64;
        for (i, slot) in alog.iter_mut().enumerate().take(order as usize) {
            *slot = acc as Fe;
            log[acc as usize] = i as u16;
            acc = f2_mulmod(acc, generator as u64, modulus as u64);
        }
        if acc != 1 {
            return Err(Error::Internal(format!(
                "generator {generator} does not have order {order}"
            )));
        }
        for i in order as usize..2 * order as usize {
            alog[i] = alog[i - order as usize];
        }

        Ok(FieldCtx(Arc::new(CtxInner {
            m,
            modulus,
            order,
            generator,
            log,
            alog,
        })))
    }

    fn find_generator(modulus: u64, order: u32) -> Fe {
        if order == 1 {
            return 1;
        }
        let primes = prime_factors(order as u64);
        'cand: for g in 2..=order as u64 {
            for &p in &primes {
                if f2_powmod(g, (order as u64) / p, modulus) == 1 {
                    continue 'cand;
                }
            }
            return g as Fe;
        }
        unreachable!("the multiplicative group of a finite field is cyclic")
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    /// The modulus as an (m+1)-bit integer, bit i = coefficient of x^i.
    pub fn modulus_bits(&self) -> u32 {
        self.0.modulus
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn generator(&self) -> Fe {
        self.0.generator
    }

    /// Number of elements, 2^m.
    pub fn size(&self) -> u32 {
        1 << self.0.m
    }

    pub fn is_valid(&self, a: Fe) -> bool {
        (a as u32) < self.size()
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        debug_assert!(self.is_valid(a) && self.is_valid(b));
        if a == 0 || b == 0 {
            return 0;
        }
        let inner = &*self.0;
        inner.alog[inner.log[a as usize] as usize + inner.log[b as usize] as usize]
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        debug_assert!(self.is_valid(a));
        let inner = &*self.0;
        Ok(inner.alog[(inner.order - inner.log[a as usize] as u32) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        if b == 0 {
            return Err(Error::ZeroInverse);
        }
        if a == 0 {
            return Ok(0);
        }
        let inner = &*self.0;
        Ok(inner.alog[inner.log[a as usize] as usize + inner.order as usize
            - inner.log[b as usize] as usize])
    }

    pub fn pow(&self, a: Fe, e: u64) -> Fe {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let inner = &*self.0;
        let e = (e % inner.order as u64) as usize;
        let idx = (inner.log[a as usize] as usize * e) % inner.order as usize;
        inner.alog[idx]
    }

    /// Iterator over all element encodings, 0 first.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.size() as Fe
    }
}

fn f2_powmod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = f2_mulmod(acc, base, m);
        }
        base = f2_mulmod(base, base, m);
        e >>= 1;
    }
    acc
}

// ---------------------------------------------------------------------------
// ResidueField
// ---------------------------------------------------------------------------

/// An element of F_q[y]/(f(y)): coefficients of 1, y, …, y^(l−1). Always
/// stored with exactly l entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RfElem {
    coeffs: Vec<Fe>,
}

impl RfElem {
    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Some(c) when the element is the base-field constant c.
    pub fn as_constant(&self) -> Option<Fe> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }
}

/// F_q[y]/(f(y)) for a monic irreducible f of degree l over the base field.
/// The class of y is the designated root γ of f.
pub struct ResidueField {
    ctx: FieldCtx,
    modulus: Poly,
    ell: usize,
    xred: Vec<Vec<Fe>>,       // y^(l+j) mod f for j in 0..l−1
    frob: Vec<Vec<Fe>>,       // (y^i)^q mod f
    trace_basis: Vec<Fe>,     // Tr(y^i), a base-field element
}

impl ResidueField {
    /// `modulus` must be monic irreducible of degree ≥ 1.
    pub fn new(modulus: Poly) -> Result<ResidueField> {
        let ell = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::InvalidParameter(
                    "residue-field modulus must have degree >= 1".into(),
                ))
            }
        };
        if modulus.lc() != 1 {
            return Err(Error::InvalidParameter(
                "residue-field modulus must be monic".into(),
            ));
        }
        if !crate::polyring::is_irreducible(&modulus)? {
            return Err(Error::InvalidParameter(
                "residue-field modulus must be irreducible".into(),
            ));
        }
        let ctx = modulus.ctx().clone();

        // y^(l+j) mod f, built by repeated multiply-by-y
        let mut xred: Vec<Vec<Fe>> = Vec::with_capacity(ell.max(1));
        let mut cur: Vec<Fe> = modulus.coeffs()[..ell].to_vec(); // y^l ≡ f − y^l
        xred.push(cur.clone());
        for _ in 1..ell {
            cur = mul_by_y(&ctx, &cur, &xred[0]);
            xred.push(cur.clone());
        }

        let mut rf = ResidueField {
            ctx,
            modulus,
            ell,
            xred,
            frob: Vec::new(),
            trace_basis: Vec::new(),
        };

        // (y^i)^q = (y^q)^i, so one Frobenius image of y determines the map
        let yq = rf.pow_q(&rf.gamma());
        let mut frob = Vec::with_capacity(ell);
        let mut acc = rf.one();
        for _ in 0..ell {
            frob.push(acc.coeffs.clone());
            acc = rf.mul(&acc, &yq);
        }
        rf.frob = frob;

        let mut trace_basis = Vec::with_capacity(ell);
        for i in 0..ell {
            let mut basis = rf.zero();
            basis.coeffs[i] = 1;
            let mut sum = basis.clone();
            let mut cur = basis;
            for _ in 1..ell {
                cur = rf.frobenius(&cur);
                sum = rf.add(&sum, &cur);
            }
            let c = sum.as_constant().ok_or_else(|| {
                Error::Internal("trace of a basis element is not Frobenius-fixed".into())
            })?;
            trace_basis.push(c);
        }
        rf.trace_basis = trace_basis;
        Ok(rf)
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Extension degree l over the base field.
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn zero(&self) -> RfElem {
        RfElem {
            coeffs: vec![0; self.ell],
        }
    }

    pub fn one(&self) -> RfElem {
        self.constant(1)
    }

    pub fn constant(&self, c: Fe) -> RfElem {
        let mut coeffs = vec![0; self.ell];
        coeffs[0] = c;
        RfElem { coeffs }
    }

    /// The class of y, i.e. the designated root γ of the modulus.
    pub fn gamma(&self) -> RfElem {
        self.eval_poly(&Poly::x(&self.ctx))
    }

    /// g(γ) for g ∈ F_q[x]: exactly g mod f.
    pub fn eval_poly(&self, g: &Poly) -> RfElem {
        let r = g.rem(&self.modulus);
        let mut coeffs = r.coeffs().to_vec();
        coeffs.resize(self.ell, 0);
        RfElem { coeffs }
    }

    pub fn add(&self, a: &RfElem, b: &RfElem) -> RfElem {
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| x ^ y)
            .collect();
        RfElem { coeffs }
    }

    pub fn mul(&self, a: &RfElem, b: &RfElem) -> RfElem {
        let l = self.ell;
        let mut acc = vec![0 as Fe; 2 * l - 1];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                if bj != 0 {
                    acc[i + j] ^= self.ctx.mul(ai, bj);
                }
            }
        }
        for idx in (l..2 * l - 1).rev() {
            let c = acc[idx];
            if c == 0 {
                continue;
            }
            acc[idx] = 0;
            let red = &self.xred[idx - l];
            for (k, &rk) in red.iter().enumerate() {
                if rk != 0 {
                    acc[k] ^= self.ctx.mul(c, rk);
                }
            }
        }
        acc.truncate(l);
        RfElem { coeffs: acc }
    }

    pub fn scale(&self, a: &RfElem, c: Fe) -> RfElem {
        RfElem {
            coeffs: a.coeffs.iter().map(|&x| self.ctx.mul(x, c)).collect(),
        }
    }

    pub fn inv(&self, a: &RfElem) -> Result<RfElem> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let pa = Poly::from_coeffs(&self.ctx, a.coeffs.clone());
        let inv = crate::polyring::inv_mod(&pa, &self.modulus)?;
        Ok(self.eval_poly(&inv))
    }

    /// b ↦ b^q. Coefficients are fixed by the q-power map, so this is the
    /// F_q-linear map sending y^i to (y^q)^i.
    pub fn frobenius(&self, a: &RfElem) -> RfElem {
        let mut out = vec![0 as Fe; self.ell];
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (k, &fk) in self.frob[i].iter().enumerate() {
                if fk != 0 {
                    out[k] ^= self.ctx.mul(ai, fk);
                }
            }
        }
        RfElem { coeffs: out }
    }

    /// Tr(b) = Σ_{ι=0}^{l−1} b^(q^ι), returned as its base-field representative.
    pub fn trace(&self, a: &RfElem) -> Fe {
        let mut out = 0;
        for (i, &ai) in a.coeffs.iter().enumerate() {
            if ai != 0 {
                out ^= self.ctx.mul(ai, self.trace_basis[i]);
            }
        }
        out
    }

    /// a^q by m squarings (used once during construction, before the
    /// Frobenius table exists).
    fn pow_q(&self, a: &RfElem) -> RfElem {
        let mut cur = a.clone();
        for _ in 0..self.ctx.m() {
            cur = self.mul(&cur, &cur);
        }
        cur
    }
}

fn mul_by_y(ctx: &FieldCtx, a: &[Fe], y_l: &[Fe]) -> Vec<Fe> {
    let l = a.len();
    let mut out = vec![0 as Fe; l];
    out[1..l].copy_from_slice(&a[..l - 1]);
    let top = a[l - 1];
    if top != 0 {
        for (k, &rk) in y_l.iter().enumerate() {
            if rk != 0 {
                out[k] ^= ctx.mul(top, rk);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring;
    use rand::{Rng, SeedableRng};

    #[test]
    fn canonical_moduli() {
        // m=2: the unique irreducible quadratic over F_2 is x^2+x+1.
        // m=3: x^3+x+1 precedes x^3+x^2+1. Cross-checked by enumeration.
        for (m, expect) in [(1u32, 0b10u32), (2, 0b111), (3, 0b1011), (4, 0b10011)] {
            let ctx = FieldCtx::new(m).unwrap();
            assert_eq!(ctx.modulus_bits(), expect, "m={m}");
        }
        // enumeration oracle for m in {2, 3}: smallest irreducible by
        // high-to-low coefficient comparison
        for m in [2u32, 3] {
            let mut smallest = None;
            for v in 0..1u64 << m {
                let f = (1u64 << m) | v;
                if f2_is_irreducible(f) {
                    smallest = Some(f as u32);
                    break;
                }
            }
            assert_eq!(FieldCtx::new(m).unwrap().modulus_bits(), smallest.unwrap());
        }
    }

    #[test]
    fn m_out_of_range() {
        assert!(FieldCtx::new(0).is_err());
        assert!(FieldCtx::new(17).is_err());
    }

    #[test]
    fn gf2_and_gf4_products() {
        let f2 = FieldCtx::new(1).unwrap();
        assert_eq!(f2.mul(1, 1), 1);
        assert_eq!(f2.mul(1, 0), 0);

        // GF(4) with modulus x^2+x+1: α·α = α+1
        let f4 = FieldCtx::new(2).unwrap();
        assert_eq!(f4.mul(2, 2), 3);
        for a in f4.elements() {
            assert_eq!(f4.mul(a, 0), 0);
        }
    }

    #[test]
    fn inverses() {
        let f4 = FieldCtx::new(2).unwrap();
        assert_eq!(f4.inv(1).unwrap(), 1);
        assert_eq!(f4.inv(2).unwrap(), 3); // exhaustive: 2·3 = α·(α+1) = 1
        assert!(matches!(f4.inv(0), Err(Error::ZeroInverse)));
        for a in 1..4 as Fe {
            assert_eq!(f4.mul(a, f4.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn field_axioms_exhaustive_small_m() {
        for m in 1..=4 {
            let ctx = FieldCtx::new(m).unwrap();
            let q = ctx.size() as Fe;
            for a in 0..q {
                for b in 0..q {
                    assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
                    for c in 0..q {
                        assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
                        assert_eq!(ctx.mul(a, b ^ c), ctx.mul(a, b) ^ ctx.mul(a, c));
                    }
                }
            }
            for a in 1..q {
                assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), 1);
                assert_eq!(ctx.pow(a, (ctx.order()) as u64), 1);
            }
        }
    }

    #[test]
    fn field_axioms_random_larger_m() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(7);
        for m in [5u32, 8, 11, 13] {
            let ctx = FieldCtx::new(m).unwrap();
            for _ in 0..10_000 {
                let a = rng.random_range(0..ctx.size()) as Fe;
                let b = rng.random_range(0..ctx.size()) as Fe;
                let c = rng.random_range(0..ctx.size()) as Fe;
                assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
                assert_eq!(ctx.mul(a, b ^ c), ctx.mul(a, b) ^ ctx.mul(a, c));
                if a != 0 {
                    assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn qth_power_fixes_elements() {
        for m in 1..=8 {
            let ctx = FieldCtx::new(m).unwrap();
            for a in ctx.elements() {
                assert_eq!(ctx.pow(a, ctx.size() as u64), a);
            }
        }
    }

    fn sample_rf(m: u32, ell: usize) -> ResidueField {
        let ctx = FieldCtx::new(m).unwrap();
        let f = polyring::irreducibles(&ctx, ell).next().unwrap();
        ResidueField::new(f).unwrap()
    }

    #[test]
    fn modulus_vanishes_at_gamma() {
        for (m, ell) in [(2u32, 2usize), (3, 2), (3, 3), (4, 2), (8, 2)] {
            let rf = sample_rf(m, ell);
            let at_gamma = rf.eval_poly(rf.modulus());
            assert!(at_gamma.is_zero(), "m={m} l={ell}");
        }
    }

    #[test]
    fn frobenius_fixes_base_field_and_has_order_ell() {
        let rf = sample_rf(3, 3);
        for c in rf.ctx().elements() {
            let e = rf.constant(c);
            assert_eq!(rf.frobenius(&e), e);
        }
        assert_eq!(rf.frobenius(&rf.zero()), rf.zero());
        let mut cur = rf.gamma();
        for _ in 0..rf.ell() {
            cur = rf.frobenius(&cur);
        }
        assert_eq!(cur, rf.gamma());
        // oracle: frobenius equals m squarings
        let g = rf.gamma();
        let mut sq = g.clone();
        for _ in 0..rf.ctx().m() {
            sq = rf.mul(&sq, &sq);
        }
        assert_eq!(rf.frobenius(&g), sq);
    }

    #[test]
    fn trace_matches_explicit_orbit_sum() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        for (m, ell) in [(2u32, 2usize), (3, 2), (4, 3), (5, 2)] {
            let rf = sample_rf(m, ell);
            for _ in 0..200 {
                let coeffs: Vec<Fe> = (0..ell)
                    .map(|_| rng.random_range(0..rf.ctx().size()) as Fe)
                    .collect();
                let b = rf.eval_poly(&Poly::from_coeffs(rf.ctx(), coeffs));
                let mut sum = b.clone();
                let mut cur = b.clone();
                for _ in 1..ell {
                    cur = rf.frobenius(&cur);
                    sum = rf.add(&sum, &cur);
                }
                assert_eq!(sum.as_constant().unwrap(), rf.trace(&b));
            }
        }
    }

    #[test]
    fn trace_is_linear_and_frobenius_invariant() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(13);
        let rf = sample_rf(4, 2);
        // l = 2 and b in F_q: Tr(b) = b + b^q = 2b = 0 in characteristic 2
        for c in rf.ctx().elements() {
            assert_eq!(rf.trace(&rf.constant(c)), 0);
        }
        for _ in 0..500 {
            let rand_elem = |rng: &mut rand_chacha::ChaCha12Rng| {
                let coeffs: Vec<Fe> = (0..rf.ell())
                    .map(|_| rng.random_range(0..rf.ctx().size()) as Fe)
                    .collect();
                RfElem { coeffs }
            };
            let b = rand_elem(&mut rng);
            let c = rand_elem(&mut rng);
            assert_eq!(rf.trace(&rf.add(&b, &c)), rf.trace(&b) ^ rf.trace(&c));
            assert_eq!(rf.trace(&rf.frobenius(&b)), rf.trace(&b));
        }
        assert_eq!(rf.trace(&rf.zero()), 0);
    }

    #[test]
    fn rf_inverse_roundtrip() {
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(17);
        let rf = sample_rf(3, 3);
        assert!(rf.inv(&rf.zero()).is_err());
        for _ in 0..300 {
            let coeffs: Vec<Fe> = (0..rf.ell())
                .map(|_| rng.random_range(0..rf.ctx().size()) as Fe)
                .collect();
            let b = RfElem { coeffs };
            if b.is_zero() {
                continue;
            }
            let binv = rf.inv(&b).unwrap();
            assert_eq!(rf.mul(&b, &binv), rf.one());
        }
    }
}
