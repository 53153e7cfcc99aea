use proptest::prelude::*;

use polygame::{rat, ratio, solve_matrix_game, verify_solution, Matrix, Rat, RatMatrix};

fn matrix() -> impl Strategy<Value = RatMatrix> {
    (1usize..=6, 1usize..=6).prop_flat_map(|(m, n)| {
        prop::collection::vec((-30i64..=30, 1i64..=5), m * n)
            .prop_map(move |v| RatMatrix::from_fn(m, n, |i, j| ratio(v[i * n + j].0, v[i * n + j].1)))
    })
}

fn pure_bounds(g: &RatMatrix) -> (Rat, Rat) {
    let lower = (0..g.rows()).map(|i| g.row(i).iter().min().unwrap().clone()).max().unwrap();
    let upper = (0..g.cols())
        .map(|j| (0..g.rows()).map(|i| g.get(i, j).clone()).max().unwrap())
        .min()
        .unwrap();
    (lower, upper)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn solutions_verify(g in matrix()) {
        let s = solve_matrix_game(&g);
        prop_assert_eq!(verify_solution(&g, &s), Ok(true));
        let (lower, upper) = pure_bounds(&g);
        prop_assert!(lower <= s.value && s.value <= upper);
    }

    #[test]
    fn antisymmetry(g in matrix()) {
        let dual = g.transpose().map(|x| -x.clone());
        prop_assert_eq!(solve_matrix_game(&dual).value, -solve_matrix_game(&g).value);
    }

    #[test]
    fn affine_invariance(g in matrix(), a in 1i64..9, b in -20i64..20) {
        let moved = g.map(|x| x.clone() * rat(a) + rat(b));
        prop_assert_eq!(solve_matrix_game(&moved).value, solve_matrix_game(&g).value * rat(a) + rat(b));
    }

    #[test]
    fn float_solver_tracks_exact(g in matrix()) {
        let exact = solve_matrix_game(&g).value;
        let approx = Matrix::<f64>::from_fn(g.rows(), g.cols(), |i, j| {
            let x = g.get(i, j);
            x.numer().to_string().parse::<f64>().unwrap() / x.denom().to_string().parse::<f64>().unwrap()
        });
        let v = solve_matrix_game(&approx).value;
        let e = exact.numer().to_string().parse::<f64>().unwrap() / exact.denom().to_string().parse::<f64>().unwrap();
        prop_assert!((v - e).abs() < 1e-8, "{} vs {}", v, e);
    }
}

#[test]
fn matching_pennies() {
    let g = RatMatrix::from_ints(&[&[1, -1], &[-1, 1]]);
    let s = solve_matrix_game(&g);
    assert_eq!(s.value, rat(0));
    assert_eq!(s.row_strategy, vec![ratio(1, 2), ratio(1, 2)]);
    assert_eq!(s.col_strategy, vec![ratio(1, 2), ratio(1, 2)]);
}

#[test]
fn two_by_two_closed_form() {
    // 2x2 closed form (ad - bc) / (a + d - b - c)
    let g = RatMatrix::from_ints(&[&[3, -1], &[-2, 4]]);
    assert_eq!(solve_matrix_game(&g).value, ratio(3 * 4 - 2, 3 + 4 + 1 + 2));
}
