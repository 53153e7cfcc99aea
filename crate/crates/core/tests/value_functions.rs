use proptest::prelude::*;

use polygame::value_function::{kernel_candidates, value_function_with_budget};
use polygame::{rat, ratio, value_function, Error, Poly, PolyGame, Rat};

fn small_game() -> impl Strategy<Value = PolyGame> {
    (1usize..=2, 1usize..=2).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(-3i64..=3, 1..=3), m * n)
            .prop_map(move |e| PolyGame::from_fn(m, n, |i, j| Poly::from_ints(&e[i * n + j])))
    })
}

fn probes(f: &polygame::PiecewiseRationalFn) -> Vec<Rat> {
    let mut zs: Vec<Rat> = (-24..=24).map(|k| ratio(k, 4)).collect();
    for h in f.breakpoints() {
        zs.extend([h.clone(), h.clone() - ratio(1, 1000), h.clone() + ratio(1, 1000)]);
    }
    zs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn extracted_function_matches_pointwise(g in small_game()) {
        match value_function(&g) {
            Ok(f) => {
                for z in probes(&f) {
                    prop_assert_eq!(f.eval(&z), Some(g.value_at(&z)), "at {}", z);
                }
                for (k, h) in f.breakpoints().iter().enumerate() {
                    prop_assert_eq!(f.pieces()[k].eval(h), f.pieces()[k + 1].eval(h));
                    prop_assert!(!f.pieces()[k].same_function(&f.pieces()[k + 1]));
                }
            }
            Err(Error::IrrationalBreakpoint { lo, hi }) => prop_assert!(lo < hi),
            Err(e) => prop_assert!(false, "unexpected error {}", e),
        }
    }

    #[test]
    fn every_piece_is_a_kernel_candidate(g in small_game()) {
        if let Ok(f) = value_function(&g) {
            let candidates = kernel_candidates(&g, 1000).unwrap();
            for piece in f.pieces() {
                prop_assert!(candidates.iter().any(|c| c.same_function(piece)));
            }
        }
    }
}

#[test]
fn constant_game_has_one_piece() {
    let g = PolyGame::from_ints(&[&[&[1, 2, 3]]]);
    let f = value_function(&g).unwrap();
    assert!(f.breakpoints().is_empty());
    assert_eq!(f.eval(&rat(2)), Some(rat(17)));
}

#[test]
fn rational_piece_from_mixed_equilibrium() {
    // [[Z, 0], [0, 1]] has value Z / (Z + 1) for Z > 0
    let g = PolyGame::from_ints(&[&[&[0, 1], &[0]], &[&[0], &[1]]]);
    let f = value_function(&g).unwrap();
    assert_eq!(f.breakpoints(), [rat(0)]);
    assert_eq!(f.eval(&rat(3)), Some(ratio(3, 4)));
    assert_eq!(f.eval(&rat(-3)), Some(rat(0)));
}

#[test]
fn budget_is_enforced() {
    let g = PolyGame::from_fn(3, 3, |i, j| Poly::from_ints(&[i as i64, j as i64]));
    assert!(matches!(value_function_with_budget(&g, 2), Err(Error::TooLarge { .. })));
}
