//! Exact toolkit for two-player zero-sum polynomial games.
//!
//! A polynomial game is a finite matrix game whose payoffs are polynomials
//! in a parameter `Z`; its value function `z -> val(G(z))` is continuous
//! and piecewise rational. This crate goes both ways:
//!
//! * [`value_function`](value_function::value_function) extracts the value
//!   function of a small game symbolically, and
//!   [`PolynomialGame::value_at`] evaluates it pointwise with an exact
//!   simplex;
//! * [`compile`](compiler::compile) turns any continuous piecewise rational
//!   function into a game that has it as its value function.
//!
//! The algebra is generic over [`Scalar`]; the certified parts (root
//! isolation, witnesses, compilation) run over exact rationals.
//!
//! ```
//! use polygame::{compile, rat, PiecewiseRationalFn, Poly, RationalFn};
//!
//! let abs = PiecewiseRationalFn::new(
//!     vec![rat(0)],
//!     vec![RationalFn::from_poly(Poly::from_ints(&[0, -1])), RationalFn::from_poly(Poly::z())],
//! )
//! .unwrap();
//! let (game, report) = compile(&abs).unwrap();
//! assert_eq!(game.value_at(&rat(-5)), rat(5));
//! assert!(report.all_equal());
//! ```

pub mod combinators;
pub mod compiler;
pub mod error;
pub mod game;
pub mod interp;
pub mod matrix_game;
pub mod piecewise;
pub mod poly;
pub mod rational_fn;
pub mod roots;
pub mod scalar;
pub mod value_expr;
pub mod value_function;

pub use combinators::{
    add, const_game, find_splice_witness, max_of, min_of, multiply, negate, product_game, reciprocal, scale,
    splice, Realization, SignPartition, SpliceWitness,
};
pub use compiler::{compile, compile_piece, validate_input, verify, CompilationReport, VerificationRow};
pub use error::{Error, Result};
pub use game::PolynomialGame;
pub use interp::rational_fn_interpolate;
pub use matrix_game::{solve_matrix_game, verify_solution, GameSolution, Matrix};
pub use piecewise::PiecewiseRational;
pub use poly::{Degree, Polynomial};
pub use rational_fn::RationalFunction;
pub use roots::{certify_positive_lower_bound, isolate_roots, sturm_count_roots, Interval, RealRootInterval};
pub use scalar::{parse_rat, rat, ratio, to_decimal, ExactField, Rat, Scalar};
pub use value_expr::ValueExpr;
pub use value_function::{kernel_candidates, value_function};

pub type Poly = Polynomial<Rat>;
pub type RationalFn = RationalFunction<Rat>;
pub type RatMatrix = Matrix<Rat>;
pub type PolyGame = PolynomialGame<Rat>;
pub type PiecewiseRationalFn = PiecewiseRational<Rat>;
