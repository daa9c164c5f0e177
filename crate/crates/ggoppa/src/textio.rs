//! Text formats: hex-packed binary words (bits little-endian within bytes),
//! comma-separated hex polynomial coefficients (low-to-high), line-oriented
//! code-spec files, and matrix exports.

use crate::binmat::{BitMatrix, BitVec};
use crate::code::{FqMatrix, LocatorOrder};
use crate::error::{Error, Result};
use crate::galois::{Fe, FieldCtx};
use crate::polyring::Poly;

// ---------------------------------------------------------------------------
// Bit packing
// ---------------------------------------------------------------------------

/// Lowercase hex of the packed bits; bit j maps to byte j/8, position j%8.
pub fn bits_to_hex(bits: &BitVec) -> String {
    let nbytes = bits.len().div_ceil(8);
    let mut out = String::with_capacity(2 * nbytes);
    for b in 0..nbytes {
        let mut byte = 0u8;
        for j in 0..8 {
            let idx = 8 * b + j;
            if idx < bits.len() && bits.get(idx) {
                byte |= 1 << j;
            }
        }
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

pub fn bits_from_hex(s: &str, len: usize) -> Result<BitVec> {
    let s = s.trim();
    let nbytes = len.div_ceil(8);
    if s.len() != 2 * nbytes {
        return Err(Error::Parse(format!(
            "expected {} hex chars for {len} bits, got {}",
            2 * nbytes,
            s.len()
        )));
    }
    let mut v = BitVec::zeros(len);
    for b in 0..nbytes {
        let byte = u8::from_str_radix(&s[2 * b..2 * b + 2], 16)
            .map_err(|_| Error::Parse(format!("bad hex byte '{}'", &s[2 * b..2 * b + 2])))?;
        for j in 0..8 {
            if (byte >> j) & 1 == 1 {
                let idx = 8 * b + j;
                if idx >= len {
                    return Err(Error::Parse(format!(
                        "padding bits beyond length {len} must be zero"
                    )));
                }
                v.set(idx, true);
            }
        }
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// Polynomials
// ---------------------------------------------------------------------------

/// Parses "3,1,1" (hex, low-to-high) into x² + x + 3̂; "0" is the zero
/// polynomial.
pub fn poly_from_csv(ctx: &FieldCtx, s: &str) -> Result<Poly> {
    let mut coeffs = Vec::new();
    for part in s.trim().split(',') {
        let c = Fe::from_str_radix(part.trim(), 16)
            .map_err(|_| Error::Parse(format!("bad hex coefficient '{part}'")))?;
        if !ctx.is_valid(c) {
            return Err(Error::Parse(format!(
                "coefficient {c:x} out of range for GF(2^{})",
                ctx.m()
            )));
        }
        coeffs.push(c);
    }
    Ok(Poly::from_coeffs(ctx, coeffs))
}

pub fn poly_to_csv(p: &Poly) -> String {
    p.to_string()
}

// ---------------------------------------------------------------------------
// Code-spec files
// ---------------------------------------------------------------------------

/// A parsed code-spec file: `m <int>` first, one `G <poly>` line, `f <poly>`
/// lines in order, optional `order canonical|given` (default: given).
#[derive(Debug)]
pub struct CodeSpec {
    pub ctx: FieldCtx,
    pub goppa: Poly,
    pub locators: Vec<Poly>,
    /// 1-based source line of each locator, for error reporting.
    pub locator_lines: Vec<usize>,
    pub order: LocatorOrder,
}

pub fn parse_code_spec(text: &str) -> Result<CodeSpec> {
    let mut ctx: Option<FieldCtx> = None;
    let mut goppa: Option<Poly> = None;
    let mut locators = Vec::new();
    let mut locator_lines = Vec::new();
    let mut order = LocatorOrder::Given;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).ok_or_else(|| {
            Error::Parse(format!("line {lineno}: expected '<key> <value>'"))
        })?;
        let rest = rest.trim();
        match key {
            "m" => {
                let m: u32 = rest
                    .parse()
                    .map_err(|_| Error::Parse(format!("line {lineno}: bad m '{rest}'")))?;
                ctx = Some(FieldCtx::new(m)?);
            }
            "G" => {
                let ctx = ctx.as_ref().ok_or_else(|| {
                    Error::Parse(format!("line {lineno}: 'm' must precede 'G'"))
                })?;
                goppa = Some(poly_from_csv(ctx, rest).map_err(|e| line_err(lineno, e))?);
            }
            "f" => {
                let ctx = ctx.as_ref().ok_or_else(|| {
                    Error::Parse(format!("line {lineno}: 'm' must precede 'f'"))
                })?;
                locators.push(poly_from_csv(ctx, rest).map_err(|e| line_err(lineno, e))?);
                locator_lines.push(lineno);
            }
            "order" => {
                order = match rest {
                    "canonical" => LocatorOrder::Canonical,
                    "given" => LocatorOrder::Given,
                    _ => {
                        return Err(Error::Parse(format!(
                            "line {lineno}: order must be 'canonical' or 'given'"
                        )))
                    }
                };
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {lineno}: unknown key '{key}'"
                )))
            }
        }
    }

    let ctx = ctx.ok_or_else(|| Error::Parse("missing 'm' line".into()))?;
    let goppa = goppa.ok_or_else(|| Error::Parse("missing 'G' line".into()))?;
    if locators.is_empty() {
        return Err(Error::Parse("no 'f' locator lines".into()));
    }
    Ok(CodeSpec {
        ctx,
        goppa,
        locators,
        locator_lines,
        order,
    })
}

fn line_err(lineno: usize, e: Error) -> Error {
    Error::Parse(format!("line {lineno}: {e}"))
}

pub fn render_code_spec(spec: &CodeSpec) -> String {
    let mut out = String::new();
    out.push_str(&format!("m {}\n", spec.ctx.m()));
    out.push_str(&format!("G {}\n", spec.goppa));
    for f in &spec.locators {
        out.push_str(&format!("f {f}\n"));
    }
    out.push_str(match spec.order {
        LocatorOrder::Canonical => "order canonical\n",
        LocatorOrder::Given => "order given\n",
    });
    out
}

// ---------------------------------------------------------------------------
// Matrices and words
// ---------------------------------------------------------------------------

/// "rows cols" header, then one hex-packed row per line.
pub fn render_bit_matrix(m: &BitMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        out.push_str(&bits_to_hex(&m.row_vec(r)));
        out.push('\n');
    }
    out
}

pub fn parse_bit_matrix(text: &str) -> Result<BitMatrix> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| Error::Parse("empty matrix".into()))?;
    let (rows, cols) = parse_dims(header)?;
    let mut m = BitMatrix::zeros(rows, cols);
    for r in 0..rows {
        let line = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing row {r}")))?;
        let v = bits_from_hex(line, cols)?;
        m.set_row(r, &v);
    }
    Ok(m)
}

/// "rows cols" header, then comma-separated hex entries per row.
pub fn render_fq_matrix(m: &FqMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| format!("{:x}", m.get(r, c))).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn parse_dims(header: &str) -> Result<(usize, usize)> {
    let mut it = header.split_whitespace();
    let rows = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse("bad dimension header".into()))?;
    let cols = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse("bad dimension header".into()))?;
    Ok((rows, cols))
}

/// One word per line, hex-packed; '#' comments and blank lines are skipped.
pub fn parse_words(text: &str, n: usize) -> Result<Vec<BitVec>> {
    let mut out = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        out.push(
            bits_from_hex(line, n).map_err(|e| line_err(lineno + 1, e))?,
        );
    }
    Ok(out)
}

pub fn render_words(words: &[BitVec]) -> String {
    let mut out = String::new();
    for w in words {
        out.push_str(&bits_to_hex(w));
        out.push('\n');
    }
    out
}

/// Interleaved word file: header "w n", then w hex-packed rows.
pub fn render_interleaved(m: &BitMatrix) -> String {
    render_bit_matrix(m)
}

pub fn parse_interleaved(text: &str, expect_w: usize, expect_n: usize) -> Result<BitMatrix> {
    let m = parse_bit_matrix(text)?;
    if m.rows() != expect_w || m.cols() != expect_n {
        return Err(Error::LengthMismatch {
            expected: expect_w * expect_n,
            got: m.rows() * m.cols(),
        });
    }
    Ok(m)
}
