use sqsum_core::bounds::{thm14_bound, thm16_bound, turan_bound, FamilyParams};

#[test]
fn improved_bound_decreases_in_exponent_and_stays_below_two() {
    for omega in 3..200 {
        let mut prev = f64::INFINITY;
        for k in 1..12 {
            let b = thm14_bound(omega, k).unwrap();
            // ω^{-k} eventually drops below one ulp of the cube-root term
            assert!(b <= prev);
            assert!(b < 2.0);
            prev = b;
        }
    }
}

#[test]
fn improved_bound_beats_turan_at_cube() {
    for omega in 3..=64 {
        assert!(
            thm14_bound(omega, 3).unwrap() < turan_bound(omega).unwrap(),
            "ω = {omega}"
        );
    }
}

#[test]
fn envelope_decreases_in_edges() {
    for (eps, c) in [(0.5, 1.0), (0.1, 0.3), (1.5, 2.0)] {
        let fp = FamilyParams::new(eps, c).unwrap();
        let mut prev = f64::INFINITY;
        for m in (2..100_000).step_by(97) {
            let b = thm16_bound(m, &fp).unwrap();
            assert!(b < prev && b > 1.0);
            prev = b;
        }
    }
}
