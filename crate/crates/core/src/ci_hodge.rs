//! Hodge numbers of smooth complete intersections in projective space.
//!
//! For `X = V(d_1, ..., d_c) ⊂ P^N` the Hirzebruch χ_y-genus is computed by
//! Hirzebruch–Riemann–Roch in `Q[h]/(h^{N+1})`:
//!
//! ```text
//! λ_t(Ω_X)  = (1 + t e^{-h})^{N+1} / ((1 + t) ∏ (1 + t e^{-d_i h}))
//! td(T_X)   = (h / (1 - e^{-h}))^{N+1} / ∏ (d_i h / (1 - e^{-d_i h}))
//! χ(Ω^p_X)  = [h^N] ch(λ^p Ω_X) · td(T_X) · ∏ d_i h
//! ```
//!
//! The Lefschetz hyperplane theorem fixes every Hodge number off the middle
//! row, so the χ_p determine the whole diamond.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{
    binomial, interpolate, rat, rat_frac, sign, to_integer, Rational, SeriesError, SeriesPolyT, TruncSeries,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HodgeError {
    #[error("degree list is empty")]
    EmptyDegrees,
    #[error("degrees must be at least 1, got {0}")]
    ZeroDegree(u32),
    #[error("ambient dimension must be at least 1")]
    AmbientTooSmall,
    #[error("{count} equations in P^{ambient} leave negative dimension")]
    NegativeDimension { ambient: usize, count: usize },
    #[error("p = {p} outside 0..={dim}")]
    InvalidP { p: usize, dim: usize },
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error("internal consistency failure: h^({p},{q}) = {value} is negative")]
    NegativeEntry { p: usize, q: usize, value: BigInt },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// A complete intersection `V(d_1, ..., d_c) ⊂ P^N`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CISpace {
    ambient_dim: usize,
    degrees: Vec<u32>,
}

impl CISpace {
    pub fn new(ambient_dim: usize, degrees: Vec<u32>) -> Result<Self, HodgeError> {
        if ambient_dim < 1 {
            return Err(HodgeError::AmbientTooSmall);
        }
        if degrees.is_empty() {
            return Err(HodgeError::EmptyDegrees);
        }
        if let Some(&d) = degrees.iter().find(|&&d| d == 0) {
            return Err(HodgeError::ZeroDegree(d));
        }
        if degrees.len() > ambient_dim {
            return Err(HodgeError::NegativeDimension {
                ambient: ambient_dim,
                count: degrees.len(),
            });
        }
        Ok(CISpace { ambient_dim, degrees })
    }

    /// `V(2, ..., 2) ⊂ P^{n+1}` with `r + 1` quadrics.
    pub fn quadrics(n: usize, r: usize) -> Result<Self, HodgeError> {
        Self::new(n + 1, vec![2; r + 1])
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim - self.degrees.len()
    }

    /// `n` with `P^N = P^{n+1}`.
    pub fn n(&self) -> usize {
        self.ambient_dim - 1
    }

    /// `r` with `c = r + 1` equations.
    pub fn r(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn is_quadric_system(&self) -> bool {
        self.degrees.iter().all(|&d| d == 2)
    }

    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }
}

impl fmt::Display for CISpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ds: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(f, "V({}) ⊂ P^{}", ds.join(","), self.ambient_dim)
    }
}

/// One weight-`w` row of Hodge numbers, indexed by `p` (so `q = w - p`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeTable {
    pub weight: usize,
    #[serde(serialize_with = "crate::serialize_bigints")]
    pub entries: Vec<BigInt>,
}

impl HodgeTable {
    pub fn get(&self, p: usize, q: usize) -> BigInt {
        if p + q == self.weight {
            self.entries[p].clone()
        } else {
            BigInt::zero()
        }
    }

    pub fn total(&self) -> BigInt {
        self.entries.iter().sum()
    }

    pub fn is_serre_symmetric(&self) -> bool {
        let w = self.weight;
        (0..=w).all(|p| self.entries[p] == self.entries[w - p])
    }
}

/// Full Hodge diamond `h^{p,q}`, `0 <= p, q <= dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HodgeDiamond {
    pub dim: usize,
    #[serde(serialize_with = "crate::serialize_bigint_rows")]
    pub entries: Vec<Vec<BigInt>>,
}

impl HodgeDiamond {
    pub fn get(&self, p: usize, q: usize) -> &BigInt {
        &self.entries[p][q]
    }

    pub fn middle_row(&self) -> HodgeTable {
        let d = self.dim;
        HodgeTable {
            weight: d,
            entries: (0..=d).map(|p| self.entries[p][d - p].clone()).collect(),
        }
    }

    pub fn betti(&self, k: usize) -> BigInt {
        (0..=self.dim.min(k))
            .filter(|p| k - p <= self.dim)
            .map(|p| self.entries[p][k - p].clone())
            .sum()
    }

    pub fn euler(&self) -> BigInt {
        let mut e = BigInt::zero();
        for p in 0..=self.dim {
            for q in 0..=self.dim {
                if (p + q) % 2 == 0 {
                    e += &self.entries[p][q];
                } else {
                    e -= &self.entries[p][q];
                }
            }
        }
        e
    }

    /// `h^{p,q} = h^{q,p}`.
    pub fn is_serre_symmetric(&self) -> bool {
        let d = self.dim;
        (0..=d).all(|p| (0..=d).all(|q| self.entries[p][q] == self.entries[q][p]))
    }

    /// `h^{p,q} = h^{d-p,d-q}`.
    pub fn is_poincare_symmetric(&self) -> bool {
        let d = self.dim;
        (0..=d).all(|p| (0..=d).all(|q| self.entries[p][q] == self.entries[d - p][d - q]))
    }
}

fn check_p(space: &CISpace, p: usize) -> Result<(), HodgeError> {
    if p > space.dim() {
        Err(HodgeError::InvalidP { p, dim: space.dim() })
    } else {
        Ok(())
    }
}

/// Fundamental class `[X] = ∏ d_i h` in `Q[h]/(h^{N+1})`.
fn fundamental_class(space: &CISpace) -> TruncSeries {
    let order = space.ambient_dim + 1;
    let c = space.degrees.len();
    TruncSeries::monomial(order, c, Rational::from_integer(space.degree_product()))
}

/// `td(T_X)` restricted from the ambient space.
pub fn todd_class(space: &CISpace) -> Result<TruncSeries, HodgeError> {
    let order = space.ambient_dim + 1;
    let mut td = TruncSeries::todd_linear(order, &rat(1))?.pow(space.ambient_dim + 1);
    for &d in &space.degrees {
        let normal = TruncSeries::todd_linear(order, &rat(d as i64))?;
        td = &td * &normal.invert()?;
    }
    Ok(td)
}

/// `c(T_X) = (1 + h)^{N+1} / ∏ (1 + d_i h)`.
pub fn chern_class(space: &CISpace) -> Result<TruncSeries, HodgeError> {
    let order = space.ambient_dim + 1;
    let one_plus = |d: i64| TruncSeries::from_coeffs(order, [rat(1), rat(d)]);
    let mut c = one_plus(1).pow(space.ambient_dim + 1);
    for &d in &space.degrees {
        c = &c * &one_plus(d as i64).invert()?;
    }
    Ok(c)
}

/// `λ_t(Ω_X) = (1 + t e^{-h})^{N+1} / ((1 + t) ∏ (1 + t e^{-d_i h}))` with
/// `t`-truncation `dim X + 1`.
///
/// Each factor is expanded by the binomial series `(1 + t x)^a = Σ C(a, k) x^k t^k`
/// (for `a < 0`, `C(a, k) = (-1)^k C(k - a - 1, k)`), with `x^k = e^{-k d h}`;
/// equal degrees are grouped into one factor.
pub fn lambda_cotangent(space: &CISpace) -> Result<SeriesPolyT, HodgeError> {
    let order = space.ambient_dim + 1;
    let t_order = space.dim() + 1;
    let factor = |d: i64, a: i64| {
        SeriesPolyT::from_fn(order, t_order, |k| {
            let k = k as i64;
            let c = if a >= 0 {
                binomial(a, k)
            } else {
                binomial(k - a - 1, k) * sign(k)
            };
            TruncSeries::exp_linear(order, &rat(-k * d)).scale(&Rational::from_integer(c))
        })
    };
    let mut lam = factor(1, space.ambient_dim as i64 + 1)?.try_mul(&factor(0, -1)?)?;
    let mut degrees = space.degrees.clone();
    degrees.sort_unstable();
    for chunk in degrees.chunk_by(|a, b| a == b) {
        lam = lam.try_mul(&factor(chunk[0] as i64, -(chunk.len() as i64))?)?;
    }
    Ok(lam)
}

/// Topological Euler characteristic via the top Chern class.
pub fn euler_char_ci(space: &CISpace) -> Result<BigInt, HodgeError> {
    let top = &chern_class(space)? * &fundamental_class(space);
    Ok(to_integer(top.coeff(space.ambient_dim))?)
}

/// All `χ(X, Ω^p_X)` for `p = 0..=dim X`.
pub fn chi_all(space: &CISpace) -> Result<Vec<BigInt>, HodgeError> {
    let lam = lambda_cotangent(space)?;
    let weight = &todd_class(space)? * &fundamental_class(space);
    (0..=space.dim())
        .map(|p| {
            let integrand = lam.coeff(p) * &weight;
            to_integer(integrand.coeff(space.ambient_dim))
                .map_err(|e| HodgeError::Inconsistent(format!("χ_{p} of {space} is not integral: {e}")))
        })
        .collect()
}

pub fn chi_p_ci(space: &CISpace, p: usize) -> Result<BigInt, HodgeError> {
    check_p(space, p)?;
    Ok(chi_all(space)?.swap_remove(p))
}

pub fn hodge_diamond_ci(space: &CISpace) -> Result<HodgeDiamond, HodgeError> {
    let d = space.dim();
    let chis = chi_all(space)?;
    let mut entries = vec![vec![BigInt::zero(); d + 1]; d + 1];
    for (p, row) in entries.iter_mut().enumerate() {
        if 2 * p != d {
            row[p] = BigInt::one();
        }
    }
    for (p, chi) in chis.iter().enumerate() {
        let q = d - p;
        // χ_p = Σ_q (-1)^q h^{p,q}; only (p,p) is nonzero off the middle row
        let mut rest = chi.clone();
        if 2 * p != d {
            rest -= BigInt::from(crate::exactalg::sign(p as i64));
        }
        let value = rest * BigInt::from(crate::exactalg::sign(q as i64));
        if value.is_negative() {
            return Err(HodgeError::NegativeEntry { p, q, value });
        }
        entries[p][q] = value;
    }
    Ok(HodgeDiamond { dim: d, entries })
}

/// Middle-row Hodge numbers of the cokernel of `H^*(P^N) -> H^*(X)`.
pub fn variable_middle(space: &CISpace) -> Result<HodgeTable, HodgeError> {
    let mut row = hodge_diamond_ci(space)?.middle_row();
    let d = space.dim();
    if d.is_multiple_of(2) {
        row.entries[d / 2] -= 1;
    }
    Ok(row)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    /// `max |p - q|` over nonzero variable Hodge numbers; `None` when the
    /// variable cohomology vanishes.
    pub level: Option<usize>,
    /// `r` for `n` even, `r - 1` for `n` odd; only for all-quadric systems.
    pub parity_prediction: Option<i64>,
    /// The predicted level does not exceed `dim X`; the prediction can only
    /// hold in this range.
    pub admissible: bool,
    pub matches: bool,
}

pub fn level_of(space: &CISpace) -> Result<LevelReport, HodgeError> {
    let var = variable_middle(space)?;
    let d = space.dim();
    let level = (0..=d)
        .filter(|&p| !var.entries[p].is_zero())
        .map(|p| (2 * p).abs_diff(d))
        .max();
    let parity_prediction = space.is_quadric_system().then(|| {
        let r = space.r() as i64;
        if space.n().is_multiple_of(2) {
            r
        } else {
            r - 1
        }
    });
    let admissible = parity_prediction.is_some_and(|pred| pred <= d as i64);
    let matches = match (parity_prediction, level) {
        (Some(pred), Some(l)) => pred == l as i64,
        // a negative prediction means no variable classes at all
        (Some(pred), None) => pred < 0,
        (None, _) => false,
    };
    Ok(LevelReport {
        level,
        parity_prediction,
        admissible,
        matches,
    })
}

/// Cubic `Σ c_k (m - shift)^k` with exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedPolynomial {
    pub shift: i64,
    pub coeffs: Vec<Rational>,
}

impl ShiftedPolynomial {
    pub fn eval(&self, m: i64) -> Rational {
        let k = rat(m - self.shift);
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * &k + c)
    }
}

/// `h^{m-2,m-1}` of `V(2,2,2,2) ⊂ P^{2m+1}` exactly as printed in the
/// literature: `5/2 (m-2)^3 + 31/2 (m-2)^3 + 30m - 43`.
pub fn printed_web_h12_form() -> ShiftedPolynomial {
    // 30m - 43 = 30(m-2) + 17
    ShiftedPolynomial {
        shift: 2,
        coeffs: vec![rat(17), rat(30), rat(0), rat_frac(5, 2) + rat_frac(31, 2)],
    }
}

/// The same formula with the second exponent read as 2.
pub fn corrected_web_h12_form() -> ShiftedPolynomial {
    ShiftedPolynomial {
        shift: 2,
        coeffs: vec![rat(17), rat(30), rat_frac(31, 2), rat_frac(5, 2)],
    }
}

/// `h^{m-3,m}` of `V(2,2,2,2) ⊂ P^{2m+1}`: `((m-2)^3 + 3(m-2)^2 + 2m - 4) / 6`.
pub fn web_h03_form() -> ShiftedPolynomial {
    ShiftedPolynomial {
        shift: 2,
        coeffs: vec![rat(0), rat_frac(1, 3), rat_frac(1, 2), rat_frac(1, 6)],
    }
}

/// Variable Hodge numbers `(h^{m-2,m-1}, h^{m-3,m})` of `V(2,2,2,2) ⊂ P^{2m+1}`.
pub fn web_middle_pair(m: usize) -> Result<(BigInt, BigInt), HodgeError> {
    if m < 3 {
        return Err(HodgeError::Inconsistent(format!(
            "web middle pair needs m >= 3, got {m}"
        )));
    }
    let var = variable_middle(&CISpace::quadrics(2 * m, 3)?)?;
    Ok((var.get(m - 2, m - 1), var.get(m - 3, m)))
}

/// Fits a cubic in `m - 2` through the HRR values at four consecutive `m`
/// starting from `m_start`.
pub fn fit_web_h12_form(m_start: usize) -> Result<ShiftedPolynomial, HodgeError> {
    let points = (m_start..m_start + 4)
        .map(|m| {
            let (h12, _) = web_middle_pair(m)?;
            Ok((rat(m as i64 - 2), Rational::from_integer(h12)))
        })
        .collect::<Result<Vec<_>, HodgeError>>()?;
    Ok(ShiftedPolynomial {
        shift: 2,
        coeffs: interpolate(&points),
    })
}

/// Converts a Hodge number to `i64`, failing loudly instead of truncating.
pub fn small(value: &BigInt) -> Result<i64, HodgeError> {
    value
        .to_i64()
        .ok_or_else(|| HodgeError::Inconsistent(format!("{value} does not fit in 64 bits")))
}
