//! Point counts of split quadric cones over small prime fields against the
//! Betti numbers from `quadric_strata`: an even-cohomology variety paved by
//! affine cells has `#X(F_q) = Σ b_{2k} q^k`.

use quadrics::betti::BettiTable;
use quadrics::quadric_strata::{fiber_betti, fiber_euler, QuadricFiberClass};

/// Split form of rank `rank` in `vars` variables: `x0 x1 + x2 x3 + ... (+ x_{rank-1}^2)`.
fn split_form(x: &[u64], rank: usize, q: u64) -> u64 {
    let mut acc = 0;
    let mut i = 0;
    while i + 1 < rank {
        acc += x[i] * x[i + 1];
        i += 2;
    }
    if rank % 2 == 1 {
        acc += x[rank - 1] * x[rank - 1];
    }
    acc % q
}

fn projective_zero_count(vars: usize, rank: usize, q: u64) -> u64 {
    let total = q.pow(vars as u32);
    let mut affine_zeros = 0;
    let mut x = vec![0u64; vars];
    for idx in 0..total {
        let mut t = idx;
        for slot in x.iter_mut() {
            *slot = t % q;
            t /= q;
        }
        if split_form(&x, rank, q) == 0 {
            affine_zeros += 1;
        }
    }
    (affine_zeros - 1) / (q - 1)
}

fn poincare_at(b: &BettiTable, q: u64) -> u64 {
    b.values()
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            assert!(k % 2 == 0 || v == 0, "odd cohomology in {b:?}");
            v as u64 * q.pow(k as u32 / 2)
        })
        .sum()
}

#[test]
fn smooth_and_singular_quadrics_match_cell_counts() {
    for q in [3u64, 5] {
        for dim in 1..=4usize {
            let vars = dim + 2;
            for corank in 0..=vars {
                let rank = vars - corank;
                let b = fiber_betti(QuadricFiberClass::new(dim, corank).unwrap()).unwrap();
                assert_eq!(
                    projective_zero_count(vars, rank, q),
                    poincare_at(&b, q),
                    "dim {dim}, corank {corank}, q {q}"
                );
            }
        }
    }
}

#[test]
fn euler_is_count_at_q_equal_one() {
    for dim in 1..=12usize {
        for corank in 0..=3usize.min(dim + 2) {
            let class = QuadricFiberClass::new(dim, corank).unwrap();
            let b = fiber_betti(class).unwrap();
            assert_eq!(
                fiber_euler(class).unwrap(),
                b.values().iter().sum::<i64>(),
                "dim {dim}, corank {corank}"
            );
        }
    }
}
