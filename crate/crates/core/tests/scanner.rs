use quadrics::detscan::{
    corank_census, det_degree, diagonal_at_least_closed_form, node_quality, projective_point_count, regularity_report,
    scan_report, DetScanError, QuadricSystem, ScanReport, Verdict,
};
use quadrics::quadric_strata::{discriminant_degree, BundleShape};

fn vandermonde(rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows)
        .map(|i| (1..=cols as i64).map(|j| j.pow(i as u32)).collect())
        .collect()
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[test]
fn census_totals_are_exact() {
    for (n, r, p) in [(1, 1, 3), (2, 2, 5), (4, 3, 13), (6, 2, 101)] {
        let sys = QuadricSystem::random(n, r, 99).unwrap();
        let c = corank_census(&sys, p).unwrap();
        assert_eq!(c.total() as u128, projective_point_count(r, p));
    }
}

#[test]
fn diagonal_systems_match_inclusion_exclusion() {
    for (lines, r, p) in [(8, 2, 101), (6, 2, 31), (4, 3, 13), (6, 3, 17)] {
        let sys = QuadricSystem::diagonal(&vandermonde(r + 1, lines)).unwrap();
        let c = corank_census(&sys, p).unwrap();
        for k in 0..=lines {
            assert_eq!(
                c.at_least(k) as i128,
                diagonal_at_least_closed_form(lines, r, p, k),
                "L={lines} r={r} p={p} c={k}"
            );
        }
    }
}

#[test]
fn determinant_degree_is_matrix_size_and_prime_independent() {
    for n in 1..=6 {
        for r in 1..=3 {
            let sys = QuadricSystem::random(n, r, 1000 + (n * 10 + r) as u64).unwrap();
            let want = discriminant_degree(BundleShape::new(n, r).unwrap());
            for p in [101, 103, 107] {
                assert_eq!(det_degree(&sys, p).unwrap(), want, "n={n} r={r} p={p}");
            }
        }
    }
}

#[test]
fn pencil_of_conics_has_cubic_discriminant() {
    let sys = QuadricSystem::random(1, 1, 4).unwrap();
    let rep = scan_report(&sys, 101).unwrap();
    assert_eq!(rep.det_degree, Some(3));
    assert!(rep.census[&1] <= 3);
}

#[test]
fn diagonal_web_is_not_regular() {
    let sys = QuadricSystem::diagonal(&vandermonde(4, 8)).unwrap();
    let rep = in_pool(2, || regularity_report(&sys, &[101])).unwrap();
    assert_eq!(rep.verdict, Verdict::NonRegular);
    let nodes = node_quality(&sys, 101).unwrap();
    assert!(!nodes.all_pass());
    // corank-2 locus contains the 28 lines {ℓ_a = ℓ_b = 0}
    assert!(nodes.points.len() as u64 > 28 * 50);
}

#[test]
fn corank_three_point_fails_node_check() {
    // A(λ) vanishes on the first three coordinates at λ = (1,0,0,0)
    let mut sys = QuadricSystem::random(2, 3, 8).unwrap();
    for i in 0..3 {
        for j in 0..4 {
            sys.matrices[0][i][j] = 0;
            sys.matrices[0][j][i] = 0;
        }
    }
    let rep = node_quality(&sys, 31).unwrap();
    let bad = rep.points.iter().find(|e| e.point == vec![1, 0, 0, 0]).unwrap();
    assert_eq!(bad.corank, 3);
    assert!(!bad.is_ordinary_double_point());
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let sys = QuadricSystem::random(4, 3, 5).unwrap();
    let one = in_pool(1, || scan_report(&sys, 53)).unwrap();
    let four = in_pool(4, || scan_report(&sys, 53)).unwrap();
    assert_eq!(
        serde_json::to_string(&one).unwrap(),
        serde_json::to_string(&four).unwrap()
    );
}

#[test]
fn report_json_round_trips() {
    let sys = QuadricSystem::random(2, 3, 21).unwrap();
    let rep = scan_report(&sys, 29).unwrap();
    let text = serde_json::to_string(&rep).unwrap();
    let back: ScanReport = serde_json::from_str(&text).unwrap();
    assert_eq!(back, rep);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    let mut expected = vec!["census", "det_degree", "nodes", "prime", "verdict"];
    expected.sort();
    let mut got = keys.clone();
    got.sort();
    assert_eq!(got, expected);
    // census keys in numeric order
    let idx = |k: &str| text.find(&format!("\"{k}\":")).unwrap();
    assert!(idx("0") < idx("1") && idx("1") < idx("2"));
}

#[test]
fn input_validation() {
    let asym = r#"{"n":1,"r":1,"matrices":[[[1,0,0],[0,1,0],[0,0,1]],[[1,2,0],[0,1,0],[0,0,1]]]}"#;
    assert_eq!(
        QuadricSystem::from_json(asym),
        Err(DetScanError::Asymmetric {
            matrix: 1,
            i: 0,
            j: 1,
            a: 2,
            b: 0
        })
    );
    let short = r#"{"n":1,"r":1,"matrices":[[[1,0,0],[0,1,0],[0,0,1]]]}"#;
    assert_eq!(
        QuadricSystem::from_json(short),
        Err(DetScanError::WrongCount { expected: 2, got: 1 })
    );
    assert!(matches!(QuadricSystem::from_json("{"), Err(DetScanError::Json(_))));
    let web = QuadricSystem::random(6, 4, 1).unwrap();
    assert_eq!(corank_census(&web, 101), Err(DetScanError::RankTooLarge(4)));
    let big = QuadricSystem::random(1, 3, 1).unwrap();
    assert!(matches!(
        corank_census(&big, 1009),
        Err(DetScanError::TooManyPoints { .. })
    ));
}
