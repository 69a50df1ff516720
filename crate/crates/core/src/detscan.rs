//! Finite-field scanner for explicit linear systems of quadrics.
//!
//! A system is `r + 1` symmetric integer matrices `A_0..A_r` of size `n + 2`;
//! the pencil is `A(λ) = Σ λ_i A_i`. Over `F_p` the scanner visits every point
//! of `P^r(F_p)`, records the corank of `A(λ)`, measures the degree of
//! `det A(λ)`, and computes the Hessian rank of the determinant at points of
//! corank at least 2.
//!
//! Points are normalized so the first nonzero coordinate is 1 and visited in
//! lexicographic order. The point loop is split into contiguous chunks whose
//! results are merged in order, so output does not depend on the thread count.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::binomial_i64;

/// Upper bound on `|P^r(F_p)|` for a single scan.
pub const MAX_POINTS: u64 = 100_000_000;

const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetScanError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    #[error("prime {p} too large; must be below 2^32")]
    PrimeTooLarge { p: u64 },
    #[error("prime {p} must exceed the matrix size {size}")]
    PrimeTooSmall { p: u64, size: usize },
    #[error("P^{r}(F_{p}) has {estimate} points, above the limit {MAX_POINTS}")]
    TooManyPoints { r: usize, p: u64, estimate: u128 },
    #[error("r = {0} is not supported; the scanner handles r <= 3")]
    RankTooLarge(usize),
    #[error("expected {expected} matrices (r + 1), got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("matrix {matrix} is not {size}x{size}")]
    WrongSize { matrix: usize, size: usize },
    #[error("matrix {matrix} is not symmetric: entry ({i},{j}) = {a} but ({j},{i}) = {b}")]
    Asymmetric {
        matrix: usize,
        i: usize,
        j: usize,
        a: i64,
        b: i64,
    },
    #[error("fiber dimension n must be at least 1")]
    FiberDimension,
    #[error("all matrices vanish{}", match .0 { Some(p) => format!(" mod {p}"), None => String::new() })]
    ZeroSystem(Option<u64>),
    #[error("determinant vanishes identically mod {0}")]
    Degenerate(u64),
    #[error("invalid JSON: {0}")]
    Json(String),
}

/// `r + 1` symmetric `(n+2) × (n+2)` integer matrices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadricSystem {
    pub n: usize,
    pub r: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

impl QuadricSystem {
    pub fn new(n: usize, r: usize, matrices: Vec<Vec<Vec<i64>>>) -> Result<Self, DetScanError> {
        let sys = QuadricSystem { n, r, matrices };
        sys.validate()?;
        Ok(sys)
    }

    pub fn from_json(text: &str) -> Result<Self, DetScanError> {
        let sys: QuadricSystem = serde_json::from_str(text).map_err(|e| DetScanError::Json(e.to_string()))?;
        sys.validate()?;
        Ok(sys)
    }

    #[allow(clippy::needless_range_loop)]
    pub fn validate(&self) -> Result<(), DetScanError> {
        if self.n < 1 {
            return Err(DetScanError::FiberDimension);
        }
        if self.matrices.len() != self.r + 1 {
            return Err(DetScanError::WrongCount {
                expected: self.r + 1,
                got: self.matrices.len(),
            });
        }
        let size = self.size();
        for (k, a) in self.matrices.iter().enumerate() {
            if a.len() != size || a.iter().any(|row| row.len() != size) {
                return Err(DetScanError::WrongSize { matrix: k, size });
            }
            for i in 0..size {
                for j in i + 1..size {
                    if a[i][j] != a[j][i] {
                        return Err(DetScanError::Asymmetric {
                            matrix: k,
                            i,
                            j,
                            a: a[i][j],
                            b: a[j][i],
                        });
                    }
                }
            }
        }
        if self.matrices.iter().flatten().flatten().all(|&x| x == 0) {
            return Err(DetScanError::ZeroSystem(None));
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.n + 2
    }

    /// `Q_i = Σ_j a_ij X_j^2`; `coeffs` has `r + 1` rows of length `n + 2`.
    pub fn diagonal(coeffs: &[Vec<i64>]) -> Result<Self, DetScanError> {
        let size = coeffs.first().map_or(0, Vec::len);
        let matrices = coeffs
            .iter()
            .map(|row| {
                (0..size)
                    .map(|i| {
                        (0..size)
                            .map(|j| if i == j { row.get(i).copied().unwrap_or(0) } else { 0 })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self::new(size.saturating_sub(2), coeffs.len().saturating_sub(1), matrices)
    }

    /// Symmetric matrices with entries uniform in `-9..=9` from a seeded stream.
    #[allow(clippy::needless_range_loop)]
    pub fn random(n: usize, r: usize, seed: u64) -> Result<Self, DetScanError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = n + 2;
        let matrices = (0..=r)
            .map(|_| {
                let mut a = vec![vec![0i64; size]; size];
                for i in 0..size {
                    for j in i..size {
                        let x = rng.gen_range(-9..=9);
                        a[i][j] = x;
                        a[j][i] = x;
                    }
                }
                a
            })
            .collect();
        Self::new(n, r, matrices)
    }

    fn reduce(&self, p: u64) -> Result<Reduced, DetScanError> {
        let size = self.size();
        let mats: Vec<Vec<u64>> = self
            .matrices
            .iter()
            .map(|a| a.iter().flatten().map(|&x| x.rem_euclid(p as i64) as u64).collect())
            .collect();
        if mats.iter().flatten().all(|&x| x == 0) {
            return Err(DetScanError::ZeroSystem(Some(p)));
        }
        Ok(Reduced {
            p,
            size,
            r: self.r,
            mats,
        })
    }
}

/// A system reduced mod `p`, matrices flattened row-major.
struct Reduced {
    p: u64,
    size: usize,
    r: usize,
    mats: Vec<Vec<u64>>,
}

impl Reduced {
    fn pencil_into(&self, lambda: &[u64], out: &mut [u64]) {
        let p = self.p;
        out.iter_mut().for_each(|x| *x = 0);
        for (l, m) in lambda.iter().zip(&self.mats) {
            if *l == 0 {
                continue;
            }
            for (o, a) in out.iter_mut().zip(m) {
                *o = (*o + l * a % p) % p;
            }
        }
    }

    fn det_at(&self, lambda: &[u64], scratch: &mut [u64]) -> u64 {
        self.pencil_into(lambda, scratch);
        det_mod_p(scratch, self.size, self.p)
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn check_prime(p: u64) -> Result<(), DetScanError> {
    if p == 2 {
        return Err(DetScanError::CharacteristicTwo);
    }
    if p >= 1 << 32 {
        return Err(DetScanError::PrimeTooLarge { p });
    }
    if !is_prime(p) {
        return Err(DetScanError::NotPrime(p));
    }
    Ok(())
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank of a `size × size` matrix over `F_p` by Gaussian elimination; clobbers `a`.
pub fn rank_mod_p(a: &mut [u64], size: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..size {
        let Some(piv) = (rank..size).find(|&i| a[i * size + col] != 0) else {
            continue;
        };
        if piv != rank {
            for j in 0..size {
                a.swap(piv * size + j, rank * size + j);
            }
        }
        let inv = inv_mod(a[rank * size + col], p);
        for i in rank + 1..size {
            let f = a[i * size + col] * inv % p;
            if f == 0 {
                continue;
            }
            for j in col..size {
                let sub = f * a[rank * size + j] % p;
                a[i * size + j] = (a[i * size + j] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant over `F_p` by Gaussian elimination; clobbers `a`.
pub fn det_mod_p(a: &mut [u64], size: usize, p: u64) -> u64 {
    let mut det = 1;
    for col in 0..size {
        let Some(piv) = (col..size).find(|&i| a[i * size + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..size {
                a.swap(piv * size + j, col * size + j);
            }
            det = (p - det) % p;
        }
        let pv = a[col * size + col];
        det = det * pv % p;
        let inv = inv_mod(pv, p);
        for i in col + 1..size {
            let f = a[i * size + col] * inv % p;
            if f == 0 {
                continue;
            }
            for j in col..size {
                let sub = f * a[col * size + j] % p;
                a[i * size + j] = (a[i * size + j] + p - sub) % p;
            }
        }
    }
    det
}

/// Determinant by cofactor expansion along the first row.
fn det_by_minors(a: &[u64], size: usize, p: u64) -> u64 {
    if size == 0 {
        return 1 % p;
    }
    let mut acc = 0;
    for j in 0..size {
        if a[j] == 0 {
            continue;
        }
        let minor: Vec<u64> = (1..size)
            .flat_map(|i| (0..size).filter(move |&c| c != j).map(move |c| (i, c)))
            .map(|(i, c)| a[i * size + c])
            .collect();
        let term = a[j] * det_by_minors(&minor, size - 1, p) % p;
        acc = if j % 2 == 0 {
            (acc + term) % p
        } else {
            (acc + p - term) % p
        };
    }
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank as the largest size of a nonvanishing minor. Exponential; for small
/// matrices only.
pub fn rank_by_minors(a: &[u64], size: usize, p: u64) -> usize {
    for k in (1..=size).rev() {
        for rows in subsets(size, k) {
            for cols in subsets(size, k) {
                let m: Vec<u64> = rows
                    .iter()
                    .flat_map(|&i| cols.iter().map(move |&j| a[i * size + j]))
                    .collect();
                if det_by_minors(&m, k, p) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

/// Compares elimination rank with minor-expansion rank on `trials` random
/// symmetric matrices of the given size, with entries biased towards low rank.
/// Returns the number of disagreements.
pub fn rank_oracle_disagreements(size: usize, p: u64, trials: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..trials {
        // sum of a few rank-one forms v v^T
        let terms = rng.gen_range(0..=size);
        let mut a = vec![0u64; size * size];
        for _ in 0..terms {
            let v: Vec<u64> = (0..size).map(|_| rng.gen_range(0..p)).collect();
            for i in 0..size {
                for j in 0..size {
                    a[i * size + j] = (a[i * size + j] + v[i] * v[j]) % p;
                }
            }
        }
        let by_minors = rank_by_minors(&a, size, p);
        if rank_mod_p(&mut a.clone(), size, p) != by_minors {
            bad += 1;
        }
    }
    bad
}

/// `|P^r(F_p)|`.
pub fn projective_point_count(r: usize, p: u64) -> u128 {
    (0..=r as u32).map(|k| (p as u128).pow(k)).sum()
}

/// The point with the given index in the canonical order.
fn point_at(mut index: u64, r: usize, p: u64) -> Vec<u64> {
    let mut pt = vec![0u64; r + 1];
    // leading 1 at position k, for k = r down to 0; block size p^{r-k}
    for k in (0..=r).rev() {
        let block = p.pow((r - k) as u32);
        if index < block {
            pt[k] = 1;
            for slot in pt[k + 1..].iter_mut().rev() {
                *slot = index % p;
                index /= p;
            }
            return pt;
        }
        index -= block;
    }
    unreachable!("point index out of range")
}

/// Index of a normalized point in the canonical order.
pub fn point_index(point: &[u64], p: u64) -> Option<u64> {
    let r = point.len().checked_sub(1)?;
    let k = point.iter().position(|&x| x != 0)?;
    if point[k] != 1 {
        return None;
    }
    let before: u64 = (k + 1..=r).map(|j| p.pow((r - j) as u32)).sum();
    let within = point[k + 1..].iter().fold(0u64, |acc, &x| acc * p + x);
    Some(before + within)
}

/// Enumerates `P^r(F_p)` in the canonical order.
pub fn projective_points(r: usize, p: u64) -> impl Iterator<Item = Vec<u64>> {
    let total = projective_point_count(r, p) as u64;
    (0..total).map(move |i| point_at(i, r, p))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorankCensus {
    pub prime: u64,
    /// Corank `c` to the number of points of corank exactly `c`, for
    /// `c = 0..=n+2`.
    pub counts: BTreeMap<usize, u64>,
    pub degree_estimate: Option<usize>,
}

impl CorankCensus {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Points of corank at least `c`.
    pub fn at_least(&self, c: usize) -> u64 {
        self.counts.range(c..).map(|(_, v)| v).sum()
    }
}

struct ChunkScan {
    counts: Vec<u64>,
    singular: Vec<(Vec<u64>, usize)>,
}

/// Exact corank of every point, plus the points of corank at least 2.
fn scan(red: &Reduced) -> ChunkScan {
    let total = projective_point_count(red.r, red.p) as u64;
    let size = red.size;
    let chunks: Vec<(u64, u64)> = (0..total.div_ceil(CHUNK))
        .map(|c| (c * CHUNK, ((c + 1) * CHUNK).min(total)))
        .collect();
    let parts: Vec<ChunkScan> = chunks
        .par_iter()
        .map(|&(start, end)| {
            let mut scratch = vec![0u64; size * size];
            let mut counts = vec![0u64; size + 1];
            let mut singular = Vec::new();
            for i in start..end {
                let pt = point_at(i, red.r, red.p);
                red.pencil_into(&pt, &mut scratch);
                let corank = size - rank_mod_p(&mut scratch, size, red.p);
                counts[corank] += 1;
                if corank >= 2 {
                    singular.push((pt, corank));
                }
            }
            ChunkScan { counts, singular }
        })
        .collect();
    let mut merged = ChunkScan {
        counts: vec![0; size + 1],
        singular: Vec::new(),
    };
    for part in parts {
        for (acc, c) in merged.counts.iter_mut().zip(part.counts) {
            *acc += c;
        }
        merged.singular.extend(part.singular);
    }
    merged
}

fn prepare(system: &QuadricSystem, p: u64) -> Result<Reduced, DetScanError> {
    system.validate()?;
    check_prime(p)?;
    if system.r > 3 {
        return Err(DetScanError::RankTooLarge(system.r));
    }
    let estimate = projective_point_count(system.r, p);
    if estimate > MAX_POINTS as u128 {
        return Err(DetScanError::TooManyPoints {
            r: system.r,
            p,
            estimate,
        });
    }
    system.reduce(p)
}

fn census_from(counts: &[u64], p: u64, degree_estimate: Option<usize>) -> CorankCensus {
    CorankCensus {
        prime: p,
        counts: counts.iter().copied().enumerate().collect(),
        degree_estimate,
    }
}

/// Exact corank census over `P^r(F_p)`. `degree_estimate` is filled in when
/// `p` exceeds the matrix size and the determinant is not identically zero.
pub fn corank_census(system: &QuadricSystem, p: u64) -> Result<CorankCensus, DetScanError> {
    let red = prepare(system, p)?;
    let s = scan(&red);
    let degree = if p as usize > red.size {
        measure_degree(&red).ok()
    } else {
        None
    };
    Ok(census_from(&s.counts, p, degree))
}

/// Coefficients (lowest first) of the polynomial of degree `< xs.len()` through
/// the given points over `F_p`.
pub fn interpolate_mod_p(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let k = xs.len();
    let mut out = vec![0u64; k];
    for i in 0..k {
        let mut basis = vec![1u64];
        let mut denom = 1u64;
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut next = vec![0u64; basis.len() + 1];
            for (d, &b) in basis.iter().enumerate() {
                next[d + 1] = (next[d + 1] + b) % p;
                next[d] = (next[d] + (p - xs[j] % p) * b) % p;
            }
            basis = next;
            denom = denom * ((xs[i] + p - xs[j] % p) % p) % p;
        }
        let scale = ys[i] * inv_mod(denom, p) % p;
        for (o, b) in out.iter_mut().zip(&basis) {
            *o = (*o + b * scale) % p;
        }
    }
    out
}

fn poly_degree(c: &[u64]) -> Option<usize> {
    c.iter().rposition(|&x| x != 0)
}

/// `det A(a + s b)` as a polynomial in `s`, by interpolation at `size + 1`
/// nodes.
fn restrict_to_line(red: &Reduced, a: &[u64], b: &[u64], scratch: &mut [u64]) -> Vec<u64> {
    let p = red.p;
    let xs: Vec<u64> = (0..=red.size as u64).collect();
    let ys: Vec<u64> = xs
        .iter()
        .map(|&s| {
            let pt: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + s * y) % p).collect();
            red.det_at(&pt, scratch)
        })
        .collect();
    interpolate_mod_p(&xs, &ys, p)
}

const DEGREE_LINES: usize = 8;

fn measure_degree(red: &Reduced) -> Result<usize, DetScanError> {
    if red.p as usize <= red.size {
        return Err(DetScanError::PrimeTooSmall {
            p: red.p,
            size: red.size,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ red.p);
    let mut scratch = vec![0u64; red.size * red.size];
    let mut best: Option<usize> = None;
    for _ in 0..DEGREE_LINES {
        let a: Vec<u64> = (0..=red.r).map(|_| rng.gen_range(0..red.p)).collect();
        let b: Vec<u64> = (0..=red.r).map(|_| rng.gen_range(0..red.p)).collect();
        let coeffs = restrict_to_line(red, &a, &b, &mut scratch);
        best = best.max(poly_degree(&coeffs));
    }
    best.ok_or(DetScanError::Degenerate(red.p))
}

/// Degree of `det A(λ)` measured on restrictions to seeded random lines of
/// `P^r(F_p)`; requires `p > n + 2`.
pub fn det_degree(system: &QuadricSystem, p: u64) -> Result<usize, DetScanError> {
    system.validate()?;
    check_prime(p)?;
    measure_degree(&system.reduce(p)?)
}

/// Rank of the Hessian of `det A` at `point` in the affine chart where the
/// first nonzero coordinate is 1. The quadratic part `Q(u)` is the `s^2`
/// coefficient of `det A(point + s u)`, read off exactly by interpolation.
fn hessian_rank(red: &Reduced, point: &[u64], scratch: &mut [u64]) -> usize {
    let p = red.p;
    let chart = point.iter().position(|&x| x != 0).expect("normalized point");
    let dirs: Vec<usize> = (0..=red.r).filter(|&j| j != chart).collect();
    let q = |u: &[u64], scratch: &mut [u64]| -> u64 {
        let coeffs = restrict_to_line(red, point, u, scratch);
        coeffs.get(2).copied().unwrap_or(0)
    };
    let k = dirs.len();
    let unit = |j: usize| {
        let mut u = vec![0u64; red.r + 1];
        u[j] = 1;
        u
    };
    let diag: Vec<u64> = dirs.iter().map(|&j| q(&unit(j), scratch)).collect();
    let half = inv_mod(2, p);
    let mut form = vec![0u64; k * k];
    for a in 0..k {
        form[a * k + a] = diag[a];
        for b in a + 1..k {
            let mut u = unit(dirs[a]);
            u[dirs[b]] = 1;
            let cross = (q(&u, scratch) + 2 * p - diag[a] - diag[b]) % p * half % p;
            form[a * k + b] = cross;
            form[b * k + a] = cross;
        }
    }
    rank_mod_p(&mut form, k, p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeEntry {
    pub point: Vec<u64>,
    pub corank: usize,
    pub hessian_rank: usize,
}

impl NodeEntry {
    /// Corank exactly 2 with a nondegenerate Hessian on the 3-dimensional base.
    pub fn is_ordinary_double_point(&self) -> bool {
        self.corank == 2 && self.hessian_rank == 3
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeReport {
    pub prime: u64,
    pub points: Vec<NodeEntry>,
}

impl NodeReport {
    pub fn all_pass(&self) -> bool {
        self.points.iter().all(NodeEntry::is_ordinary_double_point)
    }
}

fn nodes_from(red: &Reduced, singular: &[(Vec<u64>, usize)]) -> Vec<NodeEntry> {
    singular
        .par_iter()
        .map_init(
            || vec![0u64; red.size * red.size],
            |scratch, (pt, corank)| NodeEntry {
                point: pt.clone(),
                corank: *corank,
                hessian_rank: hessian_rank(red, pt, scratch),
            },
        )
        .collect()
}

/// Corank and Hessian rank at every `F_p`-point of corank at least 2. Only
/// rational points are seen, so the count is a lower bound for the number of
/// singular points over the algebraic closure.
pub fn node_quality(system: &QuadricSystem, p: u64) -> Result<NodeReport, DetScanError> {
    if system.r != 3 {
        return Err(DetScanError::RankTooLarge(system.r));
    }
    let red = prepare(system, p)?;
    if p as usize <= red.size {
        return Err(DetScanError::PrimeTooSmall { p, size: red.size });
    }
    let s = scan(&red);
    Ok(NodeReport {
        prime: p,
        points: nodes_from(&red, &s.singular),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    RegularCompatible,
    NonRegular,
    Inconclusive,
}

impl Verdict {
    fn combine(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (NonRegular, _) | (_, NonRegular) => NonRegular,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => RegularCompatible,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExponentStatus {
    Consistent,
    Excess,
    Deficit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExponentCheck {
    pub corank: usize,
    /// `r - C(c+1, 2)`.
    pub expected_dim: i64,
    pub count_at_least: u64,
    pub status: ExponentStatus,
}

/// Compares `#{corank >= c}` with `p^{r - C(c+1,2)}`: a count in
/// `[p^{e-1}, p^{e+1})` is consistent; `e < 0` demands zero points, and for
/// `e = 0` an empty set of rational points is consistent.
pub fn census_exponents(census: &CorankCensus, r: usize) -> Vec<ExponentCheck> {
    let p = census.prime as u128;
    let max_c = census.counts.keys().copied().max().unwrap_or(0);
    (1..=max_c)
        .map(|c| {
            let codim = binomial_i64(c as i64 + 1, 2).unwrap_or(i64::MAX);
            let e = r as i64 - codim;
            let count = census.at_least(c);
            let status = if e < 0 {
                if count == 0 {
                    ExponentStatus::Consistent
                } else {
                    ExponentStatus::Excess
                }
            } else if count == 0 {
                if e == 0 {
                    ExponentStatus::Consistent
                } else {
                    ExponentStatus::Deficit
                }
            } else if count as u128 >= p.pow(e as u32 + 1) {
                ExponentStatus::Excess
            } else if e >= 1 && (count as u128) < p.pow(e as u32 - 1) {
                ExponentStatus::Deficit
            } else {
                ExponentStatus::Consistent
            };
            ExponentCheck {
                corank: c,
                expected_dim: e,
                count_at_least: count,
                status,
            }
        })
        .collect()
}

/// Output record for one prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub prime: u64,
    pub census: BTreeMap<usize, u64>,
    pub det_degree: Option<usize>,
    pub nodes: Vec<NodeEntry>,
    pub verdict: Verdict,
}

fn verdict_for(r: usize, size: usize, census: &CorankCensus, degree: Option<usize>, nodes: &[NodeEntry]) -> Verdict {
    let mut v = match degree {
        None => return Verdict::NonRegular,
        Some(d) if d != size => Verdict::NonRegular,
        Some(_) => Verdict::RegularCompatible,
    };
    for check in census_exponents(census, r) {
        v = v.combine(match check.status {
            ExponentStatus::Consistent => Verdict::RegularCompatible,
            ExponentStatus::Excess => Verdict::NonRegular,
            ExponentStatus::Deficit => Verdict::Inconclusive,
        });
    }
    if r == 3 && !nodes.iter().all(NodeEntry::is_ordinary_double_point) {
        v = Verdict::NonRegular;
    }
    v
}

/// Census, determinant degree, Hessian ranks and verdict at one prime
/// (`p > n + 2`).
pub fn scan_report(system: &QuadricSystem, p: u64) -> Result<ScanReport, DetScanError> {
    let red = prepare(system, p)?;
    if p as usize <= red.size {
        return Err(DetScanError::PrimeTooSmall { p, size: red.size });
    }
    let s = scan(&red);
    let degree = match measure_degree(&red) {
        Ok(d) => Some(d),
        Err(DetScanError::Degenerate(_)) => None,
        Err(e) => return Err(e),
    };
    let census = census_from(&s.counts, p, degree);
    let nodes = nodes_from(&red, &s.singular);
    let verdict = verdict_for(system.r, red.size, &census, degree, &nodes);
    Ok(ScanReport {
        prime: p,
        census: census.counts,
        det_degree: degree,
        nodes,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    pub reports: Vec<ScanReport>,
    pub verdict: Verdict,
}

/// Trials of the elimination-versus-minors rank check run with every report.
pub const RANK_ORACLE_TRIALS: usize = 500;
const RANK_ORACLE_MAX_SIZE: usize = 5;

/// Base-side regularity diagnosis over several primes. Smoothness of `𝒳` is
/// not checked.
pub fn regularity_report(system: &QuadricSystem, primes: &[u64]) -> Result<RegularityReport, DetScanError> {
    let mut reports = Vec::with_capacity(primes.len());
    let mut verdict = Verdict::RegularCompatible;
    for &p in primes {
        let size = system.size().min(RANK_ORACLE_MAX_SIZE);
        let bad = rank_oracle_disagreements(size, p, RANK_ORACLE_TRIALS, p);
        assert_eq!(bad, 0, "elimination rank disagrees with minor expansion mod {p}");
        let rep = scan_report(system, p)?;
        verdict = verdict.combine(rep.verdict);
        reports.push(rep);
    }
    let degrees: Vec<_> = reports.iter().map(|r| r.det_degree).collect();
    if degrees.windows(2).any(|w| w[0] != w[1]) {
        verdict = verdict.combine(Verdict::Inconclusive);
    }
    if reports.is_empty() {
        verdict = Verdict::Inconclusive;
    }
    Ok(RegularityReport { reports, verdict })
}

/// `#{corank >= c}` for a diagonal system whose `L` linear forms are in
/// general position in `P^r(F_p)`: inclusion–exclusion over the hyperplane
/// arrangement, `Σ_{j>=c} (-1)^{j-c} C(j-1, c-1) C(L, j) |P^{r-j}|`.
pub fn diagonal_at_least_closed_form(lines: usize, r: usize, p: u64, c: usize) -> i128 {
    if c == 0 {
        return projective_point_count(r, p) as i128;
    }
    (c..=lines.min(r))
        .map(|j| {
            let sign = if (j - c).is_multiple_of(2) { 1 } else { -1 };
            let choose = |a: usize, b: usize| binomial_i64(a as i64, b as i64).unwrap_or(0) as i128;
            let pts = projective_point_count(r - j, p) as i128;
            sign * choose(j - 1, c - 1) * choose(lines, j) * pts
        })
        .sum()
}
