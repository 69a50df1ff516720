//! The double solid `Z_0 → P^3` branched along the discriminant surface of a
//! regular web of quadrics in `P^{2m+1}`, and its resolution `Z̃_0` obtained
//! by blowing up the `μ` nodes.
//!
//! The discriminant is `det(Σ λ_i A_i) = 0` for `(2m+2) × (2m+2)` symmetric
//! matrices, a surface of degree `2m+2` with `μ = C(2m+3, 3)` ordinary double
//! points. Each exceptional divisor is a smooth quadric surface.

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

pub use crate::betti::BettiTable;
use crate::ci_hodge::{euler_char_ci, CISpace};
use crate::exactalg::binomial_i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DoubleCoverError {
    #[error("m must be at least 3, got {0}")]
    MTooSmall(usize),
    #[error("defect must be non-negative, got {0}")]
    NegativeDefect(i64),
    #[error("unsupported: Betti assembly is only pinned down for defect 0, got {0}")]
    NonzeroDefect(i64),
    #[error("integer overflow at m = {0}")]
    Overflow(usize),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

/// Euler characteristic drop per ordinary double point of a surface: the
/// Milnor fiber of `x^2 + y^2 + z^2` is homotopy equivalent to `S^2`, so
/// smoothing a node adds one to `e`.
pub const NODE_EULER_DROP: i64 = 1;

/// `Gr^3_W H^3_Σ(Z_0)` for ordinary threefold double points.
pub const LOCAL_WEIGHT3_DIM: i64 = 0;

/// `e` of a smooth surface of degree `d` in `P^3`: `d^3 - 4d^2 + 6d`.
pub fn smooth_surface_euler(d: i64) -> i64 {
    d * d * d - 4 * d * d + 6 * d
}

pub fn nodal_surface_euler(d: i64, nodes: i64) -> i64 {
    smooth_surface_euler(d) - NODE_EULER_DROP * nodes
}

/// `e(Z̃_0) = 2 e(P^3) - e(Δ) + 3μ`: double cover branched along `Δ`, then
/// each node (`e = 1`) replaced by a quadric surface (`e = 4`).
pub fn resolved_euler_oracle(branch_degree: i64, nodes: i64) -> i64 {
    2 * 4 - nodal_surface_euler(branch_degree, nodes) + 3 * nodes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubleSolidModel {
    pub m: usize,
    pub branch_degree: i64,
    pub mu: i64,
    pub defect: i64,
}

impl DoubleSolidModel {
    pub fn new(m: usize, defect: i64) -> Result<Self, DoubleCoverError> {
        if m < 3 {
            return Err(DoubleCoverError::MTooSmall(m));
        }
        if defect < 0 {
            return Err(DoubleCoverError::NegativeDefect(defect));
        }
        let mi = m as i64;
        let mu = binomial_i64(2 * mi + 3, 3).ok_or(DoubleCoverError::Overflow(m))?;
        let branch_degree = 2 * mi + 2;
        let surface =
            CISpace::new(3, vec![branch_degree as u32]).map_err(|e| DoubleCoverError::Inconsistent(e.to_string()))?;
        let from_chern = euler_char_ci(&surface).map_err(|e| DoubleCoverError::Inconsistent(e.to_string()))?;
        if from_chern != BigInt::from(smooth_surface_euler(branch_degree)) {
            return Err(DoubleCoverError::Inconsistent(format!(
                "smooth surface Euler {from_chern} != closed form at degree {branch_degree}"
            )));
        }
        Ok(DoubleSolidModel {
            m,
            branch_degree,
            mu,
            defect,
        })
    }

    pub fn regular(m: usize) -> Result<Self, DoubleCoverError> {
        Self::new(m, 0)
    }

    fn require_defect_zero(&self) -> Result<(), DoubleCoverError> {
        if self.defect != 0 {
            Err(DoubleCoverError::NonzeroDefect(self.defect))
        } else {
            Ok(())
        }
    }

    /// `e(Δ)` by the nodal-surface rule.
    pub fn discriminant_euler(&self) -> i64 {
        nodal_surface_euler(self.branch_degree, self.mu)
    }

    pub fn resolved_euler(&self) -> i64 {
        resolved_euler_oracle(self.branch_degree, self.mu)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClemensHodge {
    pub h12: i64,
    pub h03: i64,
}

/// `h^{1,2}(Z̃_0) = C(3m+2,3) - 4 C(m+1,3) - μ + δ`, `h^{0,3}(Z̃_0) = C(m,3)`.
pub fn clemens_hodge(model: &DoubleSolidModel) -> Result<ClemensHodge, DoubleCoverError> {
    let m = model.m as i64;
    let b = |n, k| binomial_i64(n, k).ok_or(DoubleCoverError::Overflow(model.m));
    let h12 = b(3 * m + 2, 3)? - 4 * b(m + 1, 3)? - model.mu + model.defect;
    let h03 = b(m, 3)?;
    Ok(ClemensHodge { h12, h03 })
}

/// `H^*(Z̃_0)`: `[1, 0, 1+μ, 2(h12+h03), 1+μ, 0, 1]`.
pub fn betti_resolved(model: &DoubleSolidModel) -> Result<BettiTable, DoubleCoverError> {
    model.require_defect_zero()?;
    let h = clemens_hodge(model)?;
    let b2 = 1 + model.mu;
    Ok(BettiTable::new(vec![1, 0, b2, 2 * (h.h12 + h.h03), b2, 0, 1]))
}

/// `IH^*(Z_0)`: the resolution minus the skyscrapers `Q_Σ^μ[±1]`, which sit in
/// degrees 2 and 4.
pub fn ih_table(model: &DoubleSolidModel) -> Result<BettiTable, DoubleCoverError> {
    let resolved = betti_resolved(model)?;
    let mut v = resolved.values().to_vec();
    v[2] -= model.mu;
    v[4] -= model.mu;
    Ok(BettiTable::new(v))
}

/// `IH^3` from the Euler oracle alone: `IH^{even}` is `1` in degrees
/// `0, 2, 4, 6` for defect zero, and the skyscrapers remove `2μ` from `e`.
pub fn ih3_from_euler(branch_degree: i64, nodes: i64) -> i64 {
    let ih_euler = resolved_euler_oracle(branch_degree, nodes) - 2 * nodes;
    4 - ih_euler
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WeightGradedDims {
    pub gr3: i64,
    pub ih3: i64,
    pub h3_resolved: i64,
}

impl WeightGradedDims {
    pub fn all_equal(&self) -> bool {
        self.gr3 == self.ih3 && self.ih3 == self.h3_resolved
    }
}

/// `dim Gr^3_W H^3(Z_0)`, `dim IH^3(Z_0)` and `b_3(Z̃_0)`. The first two come
/// from the decomposition bookkeeping and the Euler oracle; the last from the
/// Clemens formulas.
pub fn weight_graded_dims(model: &DoubleSolidModel) -> Result<WeightGradedDims, DoubleCoverError> {
    model.require_defect_zero()?;
    let ih3 = ih3_from_euler(model.branch_degree, model.mu);
    let gr3 = ih3 - LOCAL_WEIGHT3_DIM;
    let h = clemens_hodge(model)?;
    Ok(WeightGradedDims {
        gr3,
        ih3,
        h3_resolved: 2 * (h.h12 + h.h03),
    })
}
