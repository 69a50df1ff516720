//! Quadrics, their corank classes, and the corank stratification of the base
//! of a linear system of quadrics.
//!
//! A quadric of dimension `d` (a hypersurface in `P^{d+1}`) of corank `c` is a
//! cone with vertex `P^{c-1}` over a smooth quadric of dimension `d - c`.
//! Removing the vertex leaves a `C^c`-bundle over the base quadric, and every
//! piece has only even cohomology, so
//! `b_k(cone) = b_k(P^{c-1}) + b_{k-2c}(Q^{d-c})`.

use serde::Serialize;
use thiserror::Error;

use crate::betti::BettiTable;
use crate::exactalg::binomial_i64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrataError {
    #[error("fiber dimension n must be at least 1")]
    FiberDimension,
    #[error("corank {corank} exceeds dim + 2 = {}", .dim + 2)]
    CorankTooLarge { dim: usize, corank: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("integer overflow computing {0}")]
    Overflow(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Quadric bundle with fibers of dimension `n` over `P^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BundleShape {
    pub n: usize,
    pub r: usize,
}

impl BundleShape {
    pub fn new(n: usize, r: usize) -> Result<Self, StrataError> {
        if n < 1 {
            return Err(StrataError::FiberDimension);
        }
        Ok(BundleShape { n, r })
    }

    /// `m` with `n = 2m` or `n = 2m - 1`.
    pub fn m(&self) -> usize {
        self.n.div_ceil(2)
    }

    pub fn parity(&self) -> Parity {
        if self.n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Size of the symmetric matrices of the system.
    pub fn matrix_size(&self) -> usize {
        self.n + 2
    }

    /// Dimension of the total space `𝒳 ⊂ P^{n+1} × P^r`.
    pub fn total_dim(&self) -> usize {
        self.n + self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuadricFiberClass {
    pub dim: usize,
    pub corank: usize,
}

impl QuadricFiberClass {
    pub fn new(dim: usize, corank: usize) -> Result<Self, StrataError> {
        if corank > dim + 2 {
            return Err(StrataError::CorankTooLarge { dim, corank });
        }
        Ok(QuadricFiberClass { dim, corank })
    }

    pub fn smooth(dim: usize) -> Self {
        QuadricFiberClass { dim, corank: 0 }
    }
}

/// Betti numbers of a smooth quadric of dimension `d`: `b_{2k} = 1`, plus a
/// second middle class when `d` is even (the two rulings).
pub fn smooth_quadric_betti(d: usize) -> BettiTable {
    let mut b = BettiTable::projective(d);
    if d.is_multiple_of(2) {
        let mut v = b.values().to_vec();
        v[d] += 1;
        b = BettiTable::new(v);
    }
    b
}

fn smooth_quadric_euler(d: usize) -> i64 {
    if d.is_multiple_of(2) {
        d as i64 + 2
    } else {
        d as i64 + 1
    }
}

pub fn fiber_euler(q: QuadricFiberClass) -> Result<i64, StrataError> {
    let q = QuadricFiberClass::new(q.dim, q.corank)?;
    let (d, c) = (q.dim as i64, q.corank as i64);
    Ok(match d - c {
        // rank 1: a double hyperplane, reduced to P^d
        -1 => d + 1,
        // the zero form vanishes on all of P^{d+1}
        -2 => d + 2,
        base => c + smooth_quadric_euler(base as usize),
    })
}

pub fn fiber_betti(q: QuadricFiberClass) -> Result<BettiTable, StrataError> {
    let q = QuadricFiberClass::new(q.dim, q.corank)?;
    let (d, c) = (q.dim, q.corank);
    if c == 0 {
        return Ok(smooth_quadric_betti(d));
    }
    let vertex = BettiTable::projective(c - 1);
    if c > d {
        return Ok(vertex);
    }
    Ok(vertex.add_shifted(&smooth_quadric_betti(d - c), 2 * c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumRow {
    pub corank: usize,
    pub expected_codim: i64,
    pub expected_dim_in_base: i64,
    pub nonempty: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrataReport {
    pub shape: BundleShape,
    pub strata: Vec<StratumRow>,
}

impl StrataReport {
    pub fn stratum(&self, corank: usize) -> Option<&StratumRow> {
        self.strata.iter().find(|s| s.corank == corank)
    }
}

/// Expected codimension `C(i+1, 2)` of the corank-`i` locus.
pub fn corank_codim(i: usize) -> i64 {
    (i * (i + 1) / 2) as i64
}

/// Strata `Δ_i`, `i >= 1`, up to and including the first empty one (capped
/// at the matrix size).
pub fn strata_table(shape: BundleShape) -> StrataReport {
    let mut strata = Vec::new();
    for i in 1..=shape.matrix_size() {
        let codim = corank_codim(i);
        let dim = shape.r as i64 - codim;
        strata.push(StratumRow {
            corank: i,
            expected_codim: codim,
            expected_dim_in_base: dim,
            nonempty: dim >= 0,
        });
        if dim < 0 {
            break;
        }
    }
    StrataReport { shape, strata }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscriminantInvariants {
    pub degree: usize,
    pub node_count: Option<i64>,
}

/// Degree of `det(Σ λ_i A_i)` for `(n+2) × (n+2)` symmetric matrices.
pub fn discriminant_degree(shape: BundleShape) -> usize {
    shape.matrix_size()
}

/// Number of nodes `C(2m+3, 3)` of the discriminant surface of a regular web
/// (`r = 3`) of even-dimensional quadrics.
pub fn node_count(shape: BundleShape) -> Result<i64, StrataError> {
    if shape.parity() != Parity::Even || shape.r != 3 {
        return Err(StrataError::Unsupported(format!(
            "node count is only defined for n even and r = 3, got n = {}, r = {}",
            shape.n, shape.r
        )));
    }
    let m = shape.m() as i64;
    binomial_i64(2 * m + 3, 3).ok_or_else(|| StrataError::Overflow("node count".into()))
}

pub fn discriminant_invariants(shape: BundleShape) -> DiscriminantInvariants {
    DiscriminantInvariants {
        degree: discriminant_degree(shape),
        node_count: node_count(shape).ok(),
    }
}

/// Strata of a net of diagonal quadrics `Q_i = Σ_j a_ij X_j^2` in `P^{2m+1}`
/// with generic coefficients: `Δ_1` is `2m+2` lines in `P^2`, `Δ_2` their
/// pairwise intersections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiagonalStrata {
    pub lines: i64,
    pub corank2_points: i64,
}

impl DiagonalStrata {
    /// Points of `Δ_1` over `F_q` for a generic arrangement.
    pub fn corank1_points_over(&self, q: i64) -> i64 {
        self.lines * (q + 1) - self.corank2_points
    }
}

pub fn diagonal_strata(m: usize, r: usize) -> Result<DiagonalStrata, StrataError> {
    if r != 2 {
        return Err(StrataError::Unsupported(format!("diagonal strata need r = 2, got {r}")));
    }
    let lines = 2 * m as i64 + 2;
    let points = binomial_i64(lines, 2).ok_or_else(|| StrataError::Overflow("C(2m+2,2)".into()))?;
    Ok(DiagonalStrata {
        lines,
        corank2_points: points,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "snake_case")]
pub enum Genericity {
    Generic,
    ZeroColumn(usize),
    CoincidentLines(usize, usize),
    ConcurrentLines(usize, usize, usize),
}

impl Genericity {
    pub fn is_generic(&self) -> bool {
        matches!(self, Genericity::Generic)
    }
}

fn reduce(x: i128, modulus: Option<u64>) -> i128 {
    match modulus {
        Some(p) => x.rem_euclid(p as i128),
        None => x,
    }
}

/// Checks that the lines `ℓ_j = Σ_i a_ij λ_i` of a diagonal net (three rows
/// of coefficients) are pairwise distinct with no three concurrent, over `Q`
/// or, with `modulus = Some(p)`, over `F_p`.
pub fn diagonal_genericity(coeffs: &[Vec<i64>], modulus: Option<u64>) -> Result<Genericity, StrataError> {
    if coeffs.len() != 3 {
        return Err(StrataError::Unsupported(format!(
            "need 3 coefficient rows, got {}",
            coeffs.len()
        )));
    }
    let cols = coeffs[0].len();
    if coeffs.iter().any(|row| row.len() != cols) {
        return Err(StrataError::Unsupported("ragged coefficient matrix".into()));
    }
    let col = |j: usize| [coeffs[0][j] as i128, coeffs[1][j] as i128, coeffs[2][j] as i128];
    for j in 0..cols {
        if col(j).iter().all(|&x| reduce(x, modulus) == 0) {
            return Ok(Genericity::ZeroColumn(j));
        }
    }
    for a in 0..cols {
        for b in a + 1..cols {
            let (u, v) = (col(a), col(b));
            let cross = [
                u[1] * v[2] - u[2] * v[1],
                u[2] * v[0] - u[0] * v[2],
                u[0] * v[1] - u[1] * v[0],
            ];
            if cross.iter().all(|&x| reduce(x, modulus) == 0) {
                return Ok(Genericity::CoincidentLines(a, b));
            }
            for c in b + 1..cols {
                let w = col(c);
                let det = cross[0] * w[0] + cross[1] * w[1] + cross[2] * w[2];
                if reduce(det, modulus) == 0 {
                    return Ok(Genericity::ConcurrentLines(a, b, c));
                }
            }
        }
    }
    Ok(Genericity::Generic)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TerasomaExample {
    /// Three diagonal quadrics in `P^{2m+1}`.
    NetOdd,
    /// Four diagonal quadrics in `P^{2m}`.
    WebEven,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TerasomaCokernel {
    pub dim: i64,
    /// The index range of the summation is not pinned down; `dim` is the count
    /// of triples of coordinates of `P^{2m}`.
    pub ambiguous: bool,
}

pub fn terasoma_coker_dims(example: TerasomaExample, m: usize) -> Result<TerasomaCokernel, StrataError> {
    if m < 1 {
        return Err(StrataError::Unsupported("m must be at least 1".into()));
    }
    let m = m as i64;
    let overflow = || StrataError::Overflow("cokernel dimension".into());
    Ok(match example {
        TerasomaExample::NetOdd => TerasomaCokernel {
            dim: binomial_i64(2 * m + 2, 2).ok_or_else(overflow)?,
            ambiguous: false,
        },
        TerasomaExample::WebEven => TerasomaCokernel {
            dim: binomial_i64(2 * m + 1, 3).ok_or_else(overflow)?,
            ambiguous: true,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fc(d: usize, c: usize) -> QuadricFiberClass {
        QuadricFiberClass::new(d, c).unwrap()
    }

    #[test]
    fn fiber_euler_examples() {
        assert_eq!(fiber_euler(fc(6, 0)).unwrap(), 8);
        assert_eq!(fiber_euler(fc(6, 1)).unwrap(), 7);
        assert_eq!(fiber_euler(fc(6, 2)).unwrap(), 8);
        assert_eq!(fiber_euler(fc(0, 0)).unwrap(), 2);
        assert_eq!(fiber_euler(fc(3, 4)).unwrap(), 4);
        assert_eq!(fiber_euler(fc(3, 5)).unwrap(), 5);
        assert!(matches!(
            QuadricFiberClass::new(3, 6),
            Err(StrataError::CorankTooLarge { .. })
        ));
        assert!(fiber_euler(QuadricFiberClass { dim: 1, corank: 4 }).is_err());
    }

    #[test]
    fn fiber_betti_examples() {
        assert_eq!(fiber_betti(fc(2, 0)).unwrap().values(), &[1, 0, 2, 0, 1]);
        assert_eq!(fiber_betti(fc(1, 0)).unwrap().values(), &[1, 0, 1]);
        for m in 1..=6 {
            let b = fiber_betti(fc(2 * m, 0)).unwrap();
            assert_eq!(b.get(2 * m), 2);
            assert_eq!(b.euler(), 2 * m as i64 + 2);
        }
        // corank-2 sixfold: P^1 plus a shifted Q^4
        assert_eq!(
            fiber_betti(fc(6, 2)).unwrap().values(),
            &[1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 1, 0, 1]
        );
    }

    #[test]
    fn euler_agrees_with_betti() {
        for d in 0..=12 {
            for c in 0..=3.min(d + 2) {
                let q = fc(d, c);
                assert_eq!(fiber_euler(q).unwrap(), fiber_betti(q).unwrap().euler(), "{q:?}");
            }
        }
    }

    #[test]
    fn euler_jumps() {
        for m in 1..=8 {
            let e = |c| fiber_euler(fc(2 * m, c)).unwrap();
            assert_eq!(e(0) - e(1), 1);
            assert_eq!(e(1) - e(2), -1);
        }
    }

    #[test]
    fn strata_examples() {
        let r1 = strata_table(BundleShape::new(1, 1).unwrap());
        assert!(!r1.stratum(2).unwrap().nonempty);
        let r3 = strata_table(BundleShape::new(6, 3).unwrap());
        let codims: Vec<i64> = r3.strata.iter().map(|s| s.expected_codim).collect();
        assert_eq!(codims, vec![1, 3, 6]);
        assert_eq!(r3.stratum(1).unwrap().expected_dim_in_base, 2);
        assert_eq!(r3.stratum(2).unwrap().expected_dim_in_base, 0);
        assert!(!r3.stratum(3).unwrap().nonempty);
        let r6 = strata_table(BundleShape::new(6, 6).unwrap());
        assert_eq!(r6.stratum(3).unwrap().expected_dim_in_base, 0);
        for s in &r6.strata {
            let i = s.corank as i64;
            assert_eq!(s.expected_codim, i * (i + 1) / 2);
        }
        assert!(r6.strata.windows(2).all(|w| w[0].expected_codim < w[1].expected_codim));
    }

    #[test]
    fn discriminant_examples() {
        let d = discriminant_invariants(BundleShape::new(6, 3).unwrap());
        assert_eq!((d.degree, d.node_count), (8, Some(84)));
        let d = discriminant_invariants(BundleShape::new(8, 3).unwrap());
        assert_eq!((d.degree, d.node_count), (10, Some(165)));
        let d = discriminant_invariants(BundleShape::new(1, 1).unwrap());
        assert_eq!((d.degree, d.node_count), (3, None));
        assert!(matches!(
            node_count(BundleShape::new(5, 3).unwrap()),
            Err(StrataError::Unsupported(_))
        ));
    }

    #[test]
    fn diagonal_examples() {
        assert_eq!(
            diagonal_strata(3, 2).unwrap(),
            DiagonalStrata {
                lines: 8,
                corank2_points: 28
            }
        );
        assert_eq!(
            diagonal_strata(1, 2).unwrap(),
            DiagonalStrata {
                lines: 4,
                corank2_points: 6
            }
        );
        assert_eq!(diagonal_strata(3, 2).unwrap().corank1_points_over(101), 788);
        assert!(diagonal_strata(3, 3).is_err());
    }

    #[test]
    fn genericity_flags_degenerate_coefficients() {
        let generic = vec![vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 1]];
        assert!(diagonal_genericity(&generic, None).unwrap().is_generic());
        let concurrent = vec![vec![1, 0, 1, 5], vec![0, 1, 1, 7], vec![0, 0, 0, 1]];
        assert_eq!(
            diagonal_genericity(&concurrent, None).unwrap(),
            Genericity::ConcurrentLines(0, 1, 2)
        );
        let coincident = vec![vec![1, 2, 0], vec![1, 2, 1], vec![1, 2, 3]];
        assert_eq!(
            diagonal_genericity(&coincident, None).unwrap(),
            Genericity::CoincidentLines(0, 1)
        );
        // generic over Q, degenerate mod 3
        let modp = vec![vec![1, 0, 0, 1], vec![0, 1, 0, 1], vec![0, 0, 1, 3]];
        assert!(diagonal_genericity(&modp, None).unwrap().is_generic());
        assert!(!diagonal_genericity(&modp, Some(3)).unwrap().is_generic());
    }

    #[test]
    fn terasoma_examples() {
        assert_eq!(terasoma_coker_dims(TerasomaExample::NetOdd, 3).unwrap().dim, 28);
        assert_eq!(terasoma_coker_dims(TerasomaExample::NetOdd, 1).unwrap().dim, 6);
        let web = terasoma_coker_dims(TerasomaExample::WebEven, 3).unwrap();
        assert_eq!((web.dim, web.ambiguous), (35, true));
    }
}
