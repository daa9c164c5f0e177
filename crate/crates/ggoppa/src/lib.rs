//! Binary generalized Goppa codes: codes defined by a set of irreducible
//! code-locator polynomials of any degree and a Goppa polynomial.
//! Degree-1 locators recover classical Goppa codes; higher degrees trade
//! design distance for code length beyond the field size.
//!
//! The crate builds parity-check matrices (two independent derivations),
//! dimensions, distance bounds and systematic public keys; decodes unique
//! errors up to ⌊r/l⌋ via a partially-stopped extended Euclidean algorithm;
//! and jointly decodes column-aligned burst errors on interleaved codes
//! beyond half the minimum distance by pooling the per-row key equations
//! into one linear system.

pub mod binmat;
pub mod builder;
pub mod code;
pub mod decode;
pub mod error;
pub mod galois;
pub mod ileave;
pub mod oracle;
pub mod params;
pub mod polyring;
pub mod sim;
pub mod textio;

pub use binmat::{BitMatrix, BitVec, WordMatrix};
pub use code::{GGCode, LocatorOrder, LocatorSet};
pub use error::{Error, Result};
pub use galois::{Fe, FieldCtx, ResidueField, RfElem};
pub use ileave::InterleavedCode;
pub use polyring::Poly;
