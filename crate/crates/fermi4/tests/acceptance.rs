//! Acceptance suite: one pass/fail line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fermi4::linalg::{self, frobenius_distance, hermitian_eigensystem, CMatrix, C_ZERO};
use fermi4::{decomposition, geometry, measures, random, FermionState};

fn s06() -> FermionState {
    FermionState::from_pluecker(
        [
            Complex64::new(0.9f64.sqrt() / 2.0, 0.0),
            C_ZERO,
            C_ZERO,
            Complex64::new(-(0.1f64.sqrt()) / 2.0, 0.0),
            C_ZERO,
            C_ZERO,
        ],
        false,
    )
    .unwrap()
}

fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

fn criterion_01_spectrum() {
    let mut rng = ChaCha8Rng::seed_from_u64(1001);
    for _ in 0..1000 {
        let s = random::random_state(&mut rng);
        let sp = measures::spectrum_closed_form(measures::eta(&s).unwrap()).unwrap();
        let es = hermitian_eigensystem(&measures::density_matrix(&s)).unwrap();
        let expect = [
            sp.lambda_minus,
            sp.lambda_minus,
            sp.lambda_plus,
            sp.lambda_plus,
        ];
        for (got, want) in es.values.iter().zip(expect) {
            assert!((got - want).abs() < 1e-9);
        }
    }
}

fn criterion_02_lambda_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(1002);
    let u = linalg::magic_u();
    for _ in 0..1000 {
        let s = random::random_state(&mut rng);
        let eta = measures::eta(&s).unwrap();
        let md = measures::lambda_matrix(&s).unwrap();
        let lhs = &(&u * &measures::density_matrix(&s)) * &u.dagger();
        let rhs = (&CMatrix::identity(4) + &md.lambda).scale(Complex64::new(0.25, 0.0));
        assert!(lhs.max_abs_diff(&rhs).unwrap() < 1e-10);
        let sq_want = CMatrix::identity(4).scale(Complex64::new(1.0 - eta * eta, 0.0));
        assert!((&md.lambda * &md.lambda).max_abs_diff(&sq_want).unwrap() < 1e-10);
    }
}

fn criterion_03_entropies() {
    assert_eq!(measures::von_neumann(0.0).unwrap(), 1.0);
    assert_eq!(measures::von_neumann(1.0).unwrap(), 2.0);
    assert!((measures::von_neumann(0.6).unwrap() - 1.4689956).abs() < 1e-6);
    assert!((measures::renyi(0.6, 2).unwrap() - 1.2863041).abs() < 1e-6);

    // independent oracle paths on the reference state
    let rho = measures::density_matrix(&s06());
    let es = hermitian_eigensystem(&rho).unwrap();
    let s1: f64 = -es.values.iter().map(|&l| xlog2x(l)).sum::<f64>();
    assert!((s1 - 1.4689956).abs() < 1e-6);
    let s2 = -(&rho * &rho).trace().re.log2();
    assert!((s2 - 1.2863041).abs() < 1e-6);
}

fn criterion_04_bounds() {
    for k in 0..=1000 {
        let eta = k as f64 / 1000.0;
        let s1 = measures::von_neumann(eta).unwrap();
        let s2 = measures::renyi(eta, 2).unwrap();
        assert!(s2 >= 1.0 - 1e-12);
        assert!(s2 <= s1 + 1e-12);
        assert!(s1 <= 2.0 + 1e-12);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1004);
    for _ in 0..1000 {
        let s = random::random_state(&mut rng);
        assert!(measures::pauli_check(&measures::density_matrix(&s), 2).unwrap());
    }
}

fn criterion_05_canonical_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(1005);
    for i in 0..1000 {
        let s = match i % 10 {
            0 => random::random_rank1(&mut rng),
            1 => random::random_fixed_eta(&mut rng, 0.9995).unwrap(),
            _ => random::random_state(&mut rng),
        };
        let form = decomposition::slater_decompose(&s);
        assert!(form.residual(&s) < 1e-9);
        assert!(form.r1 >= form.r2 && form.r2 >= 0.0);
        assert!((form.r1 * form.r1 + form.r2 * form.r2 - 0.25).abs() < 1e-10);
        let sp = measures::spectrum_closed_form(measures::eta(&s).unwrap()).unwrap();
        assert!((form.r1 - (sp.lambda_plus / 2.0).sqrt()).abs() < 1e-9);
        assert!((form.r2 - (sp.lambda_minus / 2.0).sqrt()).abs() < 1e-9);
    }
}

fn criterion_06_separability() {
    let mut rng = ChaCha8Rng::seed_from_u64(1006);
    for _ in 0..1000 {
        let s = random::random_rank1(&mut rng);
        assert!(geometry::pluecker_residual(&s).norm() < 1e-10);
        assert!(measures::eta(&s).unwrap() < 1e-9);
        assert_eq!(decomposition::slater_rank(&s, 1e-8), 1);
        assert!(geometry::quadric_coords(&s).on_quadric(1e-9));
    }
    let mut seen = 0;
    while seen < 1000 {
        let s = random::random_state(&mut rng);
        let eta = measures::eta(&s).unwrap();
        if eta <= 0.01 {
            continue;
        }
        seen += 1;
        assert!(geometry::pluecker_residual(&s).norm() > 1e-10);
        assert_eq!(decomposition::slater_rank(&s, 1e-8), 2);
        assert!(!geometry::quadric_coords(&s).on_quadric(1e-9));
    }
}

fn criterion_07_duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(1007);
    for _ in 0..1000 {
        let s = random::random_state(&mut rng);
        assert!((geometry::eta_invariant(&s) - measures::eta(&s).unwrap()).abs() < 1e-12);
    }
    for _ in 0..100 {
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let s = random::random_maximal(&mut rng, theta);
        assert!((measures::eta(&s).unwrap() - 1.0).abs() < 1e-9);
        let dual_magic = FermionState::from_matrix(geometry::dual(&s), false)
            .unwrap()
            .to_magic();
        let flipped =
            geometry::spin_flip(&s.to_magic()).scale(Complex64::from_polar(1.0, theta));
        assert!(frobenius_distance(&dual_magic, &flipped).unwrap() < 1e-9);
        match geometry::maximal_phase(&s, 1e-6) {
            geometry::MaximalPhase::Phase(t) => {
                let diff = (t - theta).rem_euclid(std::f64::consts::TAU);
                assert!(diff.min(std::f64::consts::TAU - diff) < 1e-8);
            }
            other => panic!("expected a recovered phase, got {other:?}"),
        }
    }
}

fn criterion_08_geodesic() {
    assert_eq!(measures::geodesic_distance(0.0).unwrap(), 0.0);
    assert_eq!(
        measures::geodesic_distance(1.0).unwrap(),
        std::f64::consts::FRAC_PI_2
    );
    for k in 0..=1000 {
        let eta = k as f64 / 1000.0;
        let s = measures::geodesic_distance(eta).unwrap();
        let sp = measures::spectrum_closed_form(eta).unwrap();
        let x = 2.0 * sp.lambda_plus;
        assert!(((s / 2.0).cos().powi(2) - x).abs() < 1e-12);
        assert!(((2.0 * sp.lambda_plus).sqrt() - (s / 2.0).cos()).abs() < 1e-12);
        assert!(((2.0 * sp.lambda_minus).sqrt() - (s / 2.0).sin()).abs() < 1e-12);
    }
}

fn criterion_09_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(1009);
    for _ in 0..50 {
        let s = random::random_state(&mut rng);
        let eta0 = measures::eta(&s).unwrap();
        let s10 = measures::von_neumann(eta0).unwrap();
        let s20 = measures::renyi(eta0, 2).unwrap();
        let d0 = measures::geodesic_distance(eta0).unwrap();
        for _ in 0..20 {
            let u = linalg::random_unitary_from(&mut rng, 4);
            let t = s.local_unitary(&u).unwrap();
            let eta1 = measures::eta(&t).unwrap();
            assert!((eta1 - eta0).abs() < 1e-9);
            assert!((measures::von_neumann(eta1).unwrap() - s10).abs() < 1e-9);
            assert!((measures::renyi(eta1, 2).unwrap() - s20).abs() < 1e-9);
            assert!((measures::geodesic_distance(eta1).unwrap() - d0).abs() < 1e-9);
        }
    }
}

fn criterion_10_spinors() {
    // vector-to-spinor map equals the fixed unitary entry by entry, exactly
    let u = linalg::magic_u();
    for j in 0..4 {
        let mut basis = [C_ZERO; 4];
        basis[j] = Complex64::new(1.0, 0.0);
        let col = geometry::vector_to_spinor(&basis);
        for (i, z) in col.iter().enumerate() {
            assert_eq!(*z, u[(i, j)]);
        }
    }

    // metric contraction of the symbols reproduces eps x eps
    let g = linalg::metric();
    let t = CMatrix::from_fn(4, 4, |row, col| {
        let (aa, ap) = (row / 2, row % 2);
        let (bb, bp) = (col / 2, col % 2);
        let mut acc = C_ZERO;
        for mu in 0..4 {
            acc += linalg::infeld(mu)[(aa, ap)] * linalg::infeld(mu)[(bb, bp)] * g[(mu, mu)];
        }
        acc
    });
    let want = linalg::kron(&linalg::eps2(), &linalg::eps2());
    assert!(t.max_abs_diff(&want).unwrap() < 1e-14);

    // the dual acts on the split as a -> ia, b -> -ib
    let mut rng = ChaCha8Rng::seed_from_u64(1010);
    for _ in 0..200 {
        let s = random::random_state(&mut rng);
        let d = FermionState::from_matrix(geometry::dual(&s), false).unwrap();
        let dab = d.ab_vectors();
        let (want_a, want_b) = geometry::dual_ab(&s.ab_vectors());
        for j in 0..3 {
            assert!((dab.a[j] - want_a[j]).norm() < 1e-12);
            assert!((dab.b[j] - want_b[j]).norm() < 1e-12);
        }
    }
}

fn criterion_11_cli() {
    let exe = env!("CARGO_BIN_EXE_fermi4");
    let dir = tempfile::tempdir().unwrap();
    let gen_dir = dir.path().join("eta06");

    let out = Command::new(exe)
        .args(["random", "--count", "1", "--seed", "7", "--eta", "0.6", "--out"])
        .arg(&gen_dir)
        .output()
        .unwrap();
    assert!(out.status.success(), "random failed: {out:?}");

    let state_file = gen_dir.join("state-0000.json");
    let out = Command::new(exe)
        .args(["analyze", "--json", "--alpha", "2"])
        .arg(&state_file)
        .output()
        .unwrap();
    assert!(out.status.success(), "analyze failed: {out:?}");
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let a = &doc["analysis"];
    assert!((a["eta"].as_f64().unwrap() - 0.6).abs() < 1e-9);
    assert!((a["von_neumann"].as_f64().unwrap() - 1.4689956).abs() < 1e-6);
    assert!((a["renyi"]["2"].as_f64().unwrap() - 1.2863041).abs() < 1e-6);

    let bulk_dir = dir.path().join("bulk");
    let out = Command::new(exe)
        .args(["random", "--count", "200", "--seed", "11", "--out"])
        .arg(&bulk_dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(exe).arg("check").arg(&bulk_dir).output().unwrap();
    assert!(out.status.success(), "check over generated files failed");

    // corrupting one file must flip the exit status
    std::fs::write(bulk_dir.join("state-0000.json"), b"{\"format\": \"nope\"}\n").unwrap();
    let out = Command::new(exe).arg("check").arg(&bulk_dir).output().unwrap();
    assert!(!out.status.success(), "check accepted a corrupted file");
}

fn main() {
    let criteria: [(&str, fn()); 11] = [
        ("01 spectrum closed form vs oracle", criterion_01_spectrum),
        ("02 magic-frame Lambda algebra", criterion_02_lambda_algebra),
        ("03 entropy values, both oracle paths", criterion_03_entropies),
        ("04 entropy bounds and occupation limit", criterion_04_bounds),
        ("05 real canonical form", criterion_05_canonical_form),
        ("06 separability equivalences", criterion_06_separability),
        ("07 duality and spin-flip theorem", criterion_07_duality),
        ("08 geodesic distance formula", criterion_08_geodesic),
        ("09 local unitary invariance", criterion_09_invariance),
        ("10 spinor identities", criterion_10_spinors),
        ("11 CLI end to end", criterion_11_cli),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match catch_unwind(AssertUnwindSafe(f)) {
            Ok(()) => println!("PASS {name}"),
            Err(_) => {
                println!("FAIL {name}");
                failed += 1;
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
