use lclab::monocech::{DimValue, LocalCohomology};
use lclab::verify::{box_points, exhaustive_ideals, window_derham, window_koszul_x, window_oracle, window_y_socle};
use lclab::weylact::{derham_homology, koszul_homology_x, koszul_homology_y, CechModule};

fn finite(x: usize) -> DimValue {
    DimValue::finite(x as u64)
}

#[test]
fn piece_dimensions_match_summed_windows() {
    for m in 1..=3 {
        for ideal in exhaustive_ideals(0, m) {
            let lc = LocalCohomology::new(&ideal);
            for i in 0..=lc.max_index() {
                for n in -4i64..=2 {
                    let expect = lc.piece_dimension(i, n).unwrap();
                    if !expect.is_finite() {
                        continue;
                    }
                    let total: usize = box_points(m, n.abs() + 1)
                        .filter(|a| a.iter().sum::<i64>() == n)
                        .map(|a| window_oracle(&ideal, i, &a))
                        .sum();
                    assert_eq!(expect, finite(total), "{ideal} H^{i} at {n}");
                }
            }
        }
    }
}

#[test]
fn koszul_and_de_rham_match_windows() {
    let mut compared = 0;
    let compare = |got: &DimValue, window: usize, count: &mut usize| {
        if got.is_finite() {
            assert_eq!(*got, finite(window));
            *count += 1;
        }
    };
    for m in 1..=3usize {
        for ideal in exhaustive_ideals(0, m) {
            for i in 0..=ideal.generator_count() {
                let module = CechModule::new(&ideal, i);
                for v in 0..m {
                    for n in -3i64..=2 {
                        let bound = n.abs() + m as i64 + 1;
                        let k = koszul_homology_x(&module, v, n).unwrap();
                        let (h1, h0) = window_koszul_x(&ideal, i, v, n, bound);
                        compare(&k.h1, h1, &mut compared);
                        compare(&k.h0, h0, &mut compared);
                        let d = derham_homology(&module, v, n).unwrap();
                        let (h1, h0) = window_derham(&ideal, i, v, n, bound);
                        compare(&d.h1, h1, &mut compared);
                        compare(&d.h0, h0, &mut compared);
                    }
                }
            }
        }
    }
    assert!(compared > 500, "{compared}");
}

#[test]
fn y_socle_matches_windows_when_finite() {
    let mut compared = 0;
    for (d, m) in [(1, 1), (1, 2), (2, 1)] {
        for ideal in exhaustive_ideals(d, m) {
            for i in 0..=ideal.generator_count() {
                for n in -3i64..=2 {
                    let got = koszul_homology_y(&ideal, i, n).unwrap();
                    if got.is_finite() {
                        let bound = n.abs() + m as i64 + 1;
                        assert_eq!(got, finite(window_y_socle(&ideal, i, n, bound)), "{ideal} H^{i} at {n}");
                        compared += 1;
                    }
                }
            }
        }
    }
    assert!(compared > 50);
}
