//! Exact invariants of complete intersections of quadrics, their quadric
//! bundles and discriminant double covers.
//!
//! - [`exactalg`]: rationals and truncated power series
//! - [`ci_hodge`]: Hodge diamonds of complete intersections via HRR
//! - [`quadric_strata`]: quadric fibers and the corank stratification
//! - [`double_cover`]: the nodal double solid and its resolution
//! - [`decomp`]: decomposition-theorem bookkeeping and the dimension checks
//! - [`detscan`]: finite-field scanner for explicit linear systems of quadrics
//! - [`cli`]: the command-line frontend

pub mod betti;
pub mod ci_hodge;
pub mod cli;
pub mod decomp;
pub mod detscan;
pub mod double_cover;
pub mod exactalg;
pub mod quadric_strata;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

/// Emits a JSON number when the value fits in 64 bits, a decimal string otherwise.
pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.serialize_str(&v.to_string()),
    }
}

struct Big<'a>(&'a BigInt);

impl serde::Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

struct BigRow<'a>(&'a [BigInt]);

impl serde::Serialize for BigRow<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for v in self.0 {
            seq.serialize_element(&Big(v))?;
        }
        seq.end()
    }
}

pub(crate) fn serialize_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    BigRow(v).serialize(s)
}

pub(crate) fn serialize_bigint_rows<S: Serializer>(v: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for row in v {
        seq.serialize_element(&BigRow(row))?;
    }
    seq.end()
}
