//! Exact rational arithmetic and truncated power series.
//!
//! [`TruncSeries`] is an element of `Q[h]/(h^k)`; [`SeriesPolyT`] is a
//! polynomial in an auxiliary variable `t` (truncated at a fixed `t`-order)
//! whose coefficients are `TruncSeries` of a common order. Together they carry
//! the cohomology ring of projective space and the `lambda_t` generating
//! polynomials used by the Hodge number engine. No floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series must have zero constant term, got {0}")]
    NonzeroConstant(String),
    #[error("series constant term is zero; not a unit")]
    NotUnit,
    #[error("series constant term must be 1 for log, got {0}")]
    LogConstant(String),
    #[error("truncation orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("truncation order must be at least 1")]
    ZeroOrder,
    #[error("rational {0} is not an integer")]
    NotIntegral(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Returns the integer value of `q`, or an error when `q` has a nontrivial denominator.
pub fn to_integer(q: &Rational) -> Result<BigInt, SeriesError> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(SeriesError::NotIntegral(q.to_string()))
    }
}

/// Exact binomial coefficient `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `C(n, k)` as an `i64`, `None` on overflow. Lossless fast path for the
/// combinatorial modules.
pub fn binomial_i64(n: i64, k: i64) -> Option<i64> {
    binomial(n, k).to_i64()
}

/// Coefficients (lowest degree first) of the unique polynomial of degree
/// `< points.len()` through the given points. Abscissae must be distinct.
pub fn interpolate(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let mut out = vec![Rational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j)
        let mut basis = vec![Rational::one()];
        let mut denom = Rational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Rational::zero(); basis.len() + 1];
            for (k, b) in basis.iter().enumerate() {
                next[k + 1] += b;
                next[k] -= b * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (slot, b) in out.iter_mut().zip(&basis) {
            *slot += b * &scale;
        }
    }
    out
}

/// Element of `Q[h]/(h^order)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        TruncSeries {
            coeffs: vec![Rational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `c * h^degree`.
    pub fn monomial(order: usize, degree: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        if degree < order {
            s.coeffs[degree] = c;
        }
        s
    }

    /// Builds a series from its leading coefficients; missing ones are zero and
    /// extra ones are truncated away.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `exp(d h)` truncated at `order`.
    pub fn exp_linear(order: usize, d: &Rational) -> Self {
        let mut s = Self::zero(order);
        let mut term = Rational::one();
        for k in 0..order {
            s.coeffs[k] = term.clone();
            term = term * d / rat(k as i64 + 1);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch(self.order(), other.order()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(TruncSeries { coeffs: out })
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(SeriesError::NotUnit);
        }
        let inv0 = a0.recip();
        let n = self.order();
        let mut b = vec![Rational::zero(); n];
        b[0] = inv0.clone();
        for k in 1..n {
            let mut s = Rational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    s += &self.coeffs[j] * &b[k - j];
                }
            }
            b[k] = -(s * &inv0);
        }
        Ok(TruncSeries { coeffs: b })
    }

    /// `sum_k a^k / k!`; requires a zero constant term.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut acc = Self::one(n);
        let mut term = Self::one(n);
        // a is nilpotent of index <= n
        for k in 1..n {
            term = (&term * self).scale(&rat_frac(1, k as i64));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// `log(a)` for `a` with constant term exactly 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::LogConstant(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let x = self - &Self::one(n);
        let mut acc = Self::zero(n);
        let mut power = Self::one(n);
        for k in 1..n {
            power = &power * &x;
            if power.is_zero() {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = &acc + &power.scale(&rat_frac(sign, k as i64));
        }
        Ok(acc)
    }

    /// Divides by `h`, dropping one order of precision: a series of order `k`
    /// with zero constant term becomes a series of order `k - 1`.
    pub fn div_by_h(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstant(self.coeffs[0].to_string()));
        }
        if self.order() < 2 {
            return Err(SeriesError::ZeroOrder);
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Todd-type quotient `d h / (1 - exp(-d h))` at the given order.
    ///
    /// The common factor `h` is cancelled symbolically before inverting, so no
    /// division by a non-unit ever happens.
    pub fn todd_linear(order: usize, d: &Rational) -> Result<Self, SeriesError> {
        let denom = &Self::one(order + 1) - &Self::exp_linear(order + 1, &-d);
        let unit = denom.div_by_h()?;
        Ok(unit.invert()?.scale(d))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})h")?,
                _ => write!(f, "({c})h^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " mod h^{}", self.order())
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &'a TruncSeries) -> TruncSeries {
        self.try_add(rhs).expect("series order mismatch")
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &'a TruncSeries) -> TruncSeries {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &'a TruncSeries) -> TruncSeries {
        self.try_mul(rhs).expect("series order mismatch")
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Polynomial in `t` with [`TruncSeries`] coefficients, truncated at `t^t_order`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SeriesPolyT {
    h_order: usize,
    coeffs: Vec<TruncSeries>,
}

impl SeriesPolyT {
    pub fn zero(h_order: usize, t_order: usize) -> Self {
        assert!(t_order >= 1, "t-truncation order must be at least 1");
        SeriesPolyT {
            h_order,
            coeffs: vec![TruncSeries::zero(h_order); t_order],
        }
    }

    pub fn one(h_order: usize, t_order: usize) -> Self {
        let mut p = Self::zero(h_order, t_order);
        p.coeffs[0] = TruncSeries::one(h_order);
        p
    }

    /// `1 + t * a`.
    pub fn one_plus_t(a: &TruncSeries, t_order: usize) -> Self {
        let mut p = Self::one(a.order(), t_order);
        if t_order > 1 {
            p.coeffs[1] = a.clone();
        }
        p
    }

    /// `Σ_k f(k) t^k` for `k < t_order`.
    pub fn from_fn(h_order: usize, t_order: usize, f: impl Fn(usize) -> TruncSeries) -> Result<Self, SeriesError> {
        let mut p = Self::zero(h_order, t_order);
        for (k, slot) in p.coeffs.iter_mut().enumerate() {
            let c = f(k);
            if c.order() != h_order {
                return Err(SeriesError::OrderMismatch(h_order, c.order()));
            }
            *slot = c;
        }
        Ok(p)
    }

    pub fn t_order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn h_order(&self) -> usize {
        self.h_order
    }

    pub fn coeff(&self, k: usize) -> &TruncSeries {
        &self.coeffs[k]
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, SeriesError> {
        if self.h_order != other.h_order {
            return Err(SeriesError::OrderMismatch(self.h_order, other.h_order));
        }
        if self.t_order() != other.t_order() {
            return Err(SeriesError::OrderMismatch(self.t_order(), other.t_order()));
        }
        let n = self.t_order();
        let mut out = Self::zero(self.h_order, n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: usize) -> Result<Self, SeriesError> {
        let mut acc = Self::one(self.h_order, self.t_order());
        for _ in 0..e {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Inverse in `t`; the `t^0` coefficient must be a unit series.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let inv0 = self.coeffs[0].invert()?;
        let n = self.t_order();
        let mut b = Self::zero(self.h_order, n);
        b.coeffs[0] = inv0.clone();
        for k in 1..n {
            let mut s = TruncSeries::zero(self.h_order);
            for j in 1..=k {
                s = &s + &(&self.coeffs[j] * &b.coeffs[k - j]);
            }
            b.coeffs[k] = -&(&s * &inv0);
        }
        Ok(b)
    }
}

/// `(-1)^k`.
pub fn sign(k: i64) -> i64 {
    if k.is_odd() {
        -1
    } else {
        1
    }
}
