//! Compiling continuous piecewise rational functions into polynomial games.
//!
//! Each piece `Q/R` (oriented so `R > 0` on the closed piece) becomes a game
//! with value `Q / max(R, eps)` on the whole line, where `eps` is a
//! certified lower bound of `R` on the closed piece. These agree with the
//! target on their own pieces, including both ends, so consecutive games
//! can be spliced at the breakpoints from left to right.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinators::{const_game, max_of, multiply, reciprocal, splice, Realization, SpliceWitness};
use crate::error::{Error, Result};
use crate::game::PolynomialGame;
use crate::piecewise::PiecewiseRational;
use crate::poly::Polynomial;
use crate::roots::{certify_positive_lower_bound, isolate_roots, sturm_count_roots, Interval};
use crate::scalar::Rat;
use crate::value_expr::ValueExpr;

type Poly = Polynomial<Rat>;
type PolyGame = PolynomialGame<Rat>;
type PiecewiseRationalFn = PiecewiseRational<Rat>;

/// Default limit on `rows * cols` of a compiled game.
pub const DEFAULT_MAX_ENTRIES: u64 = 10_000_000;

/// Distance of the stress points on either side of each breakpoint.
pub fn stress_offset() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(10).pow(6u32))
}

/// A piece `num / den` with `den > 0` on the closed interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedPiece {
    pub num: Poly,
    pub den: Poly,
    pub interval: Interval<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedFunction {
    pub function: PiecewiseRationalFn,
    pub pieces: Vec<OrientedPiece>,
}

/// Checks that no denominator vanishes on its closed piece and that
/// neighbouring pieces agree at every breakpoint.
pub fn validate_input(u: &PiecewiseRationalFn) -> Result<ValidatedFunction> {
    let mut pieces = Vec::with_capacity(u.pieces().len());
    for (k, f) in u.pieces().iter().enumerate() {
        let interval = u.piece_interval(k);
        if sturm_count_roots(f.den(), &interval)? > 0 {
            let root = &isolate_roots(f.den(), &interval)?[0];
            return Err(Error::DenominatorVanishes {
                piece: k,
                lo: root.lo.clone(),
                hi: root.hi.clone(),
            });
        }
        let positive = f.den().eval(&interval.sample()).is_positive();
        let (num, den) = if positive {
            (f.num().clone(), f.den().clone())
        } else {
            (-f.num(), -f.den())
        };
        pieces.push(OrientedPiece { num, den, interval });
    }
    for (k, h) in u.breakpoints().iter().enumerate() {
        let left = u.pieces()[k].eval(h).expect("denominator certified nonzero");
        let right = u.pieces()[k + 1].eval(h).expect("denominator certified nonzero");
        if left != right {
            return Err(Error::Discontinuous {
                breakpoint: h.clone(),
                left,
                right,
            });
        }
    }
    Ok(ValidatedFunction {
        function: u.clone(),
        pieces,
    })
}

/// Game with value `Q / max(R, eps)` everywhere; requires `eps > 0`.
pub fn compile_piece(q: &Poly, r: &Poly, eps: &Rat) -> Result<Realization> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveEpsilon(eps.to_string()));
    }
    if q.is_zero() || r.is_constant() {
        // constant positive denominator: the piece is a polynomial
        let c = r.coeff(0);
        if !q.is_zero() && !c.is_positive() {
            return Err(Error::NotPositive);
        }
        let p = if q.is_zero() { Poly::zero() } else { q.scale(&c.recip()) };
        return Ok(Realization {
            game: const_game(p.clone()),
            value: p.into(),
            witnesses: Vec::new(),
        });
    }
    let floor = Poly::constant(eps.clone());
    let clamped = max_of(&const_game(r.clone()), &const_game(floor.clone()));
    let inverse = reciprocal(&clamped, eps)?;
    let inverse_value = ValueExpr::from(r.clone()).max(floor.into()).recip();
    multiply(&const_game(q.clone()), &inverse, &q.clone().into(), &inverse_value)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompileOptions {
    pub max_entries: u64,
}

impl Default for CompileOptions {
    fn default() -> Self {
        CompileOptions {
            max_entries: DEFAULT_MAX_ENTRIES,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRow {
    pub z: Rat,
    /// `None` where the function has a pole.
    pub target: Option<Rat>,
    pub actual: Rat,
    pub equal: bool,
}

#[derive(Clone, Debug)]
pub struct CompilationReport {
    pub piece_epsilons: Vec<Rat>,
    pub game_rows: usize,
    pub game_cols: usize,
    pub witness_log: Vec<SpliceWitness>,
    pub verification: Vec<VerificationRow>,
}

impl CompilationReport {
    pub fn all_equal(&self) -> bool {
        self.verification.iter().all(|r| r.equal)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &VerificationRow> {
        self.verification.iter().filter(|r| !r.equal)
    }
}

impl fmt::Display for CompilationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "game size: {} x {}", self.game_rows, self.game_cols)?;
        if !self.piece_epsilons.is_empty() {
            writeln!(f, "pieces: {}", self.piece_epsilons.len())?;
            for (k, e) in self.piece_epsilons.iter().enumerate() {
                writeln!(f, "  eps[{k}] = {e}")?;
            }
        }
        writeln!(f, "splices: {}", self.witness_log.len())?;
        for w in &self.witness_log {
            writeln!(f, "  {w}")?;
        }
        let bad = self.mismatches().count();
        writeln!(
            f,
            "verification: {} points, {} mismatches",
            self.verification.len(),
            bad
        )
    }
}

fn check_size(g: &PolyGame, limit: u64) -> Result<()> {
    let entries = (g.rows() as u128) * (g.cols() as u128);
    if entries > u128::from(limit) {
        return Err(Error::GameTooLarge {
            rows: g.rows(),
            cols: g.cols(),
            limit,
        });
    }
    Ok(())
}

pub fn compile(u: &PiecewiseRationalFn) -> Result<(PolyGame, CompilationReport)> {
    compile_with(u, &CompileOptions::default())
}

pub fn compile_with(u: &PiecewiseRationalFn, options: &CompileOptions) -> Result<(PolyGame, CompilationReport)> {
    let valid = validate_input(u)?;
    let mut epsilons = Vec::new();
    let mut witness_log = Vec::new();
    let mut acc: Option<(PolyGame, ValueExpr)> = None;
    for (k, piece) in valid.pieces.iter().enumerate() {
        let eps = certify_positive_lower_bound(&piece.den, &piece.interval)?;
        let part = compile_piece(&piece.num, &piece.den, &eps)?;
        check_size(&part.game, options.max_entries)?;
        epsilons.push(eps);
        witness_log.extend(part.witnesses);
        acc = Some(match acc {
            None => (part.game, part.value),
            Some((game, value)) => {
                let h = &u.breakpoints()[k - 1];
                let (spliced, witness) = splice(&game, &part.game, &value, &part.value, h)?;
                check_size(&spliced, options.max_entries)?;
                witness_log.push(witness);
                let next = ValueExpr::splice(u.clone().into(), part.value, h.clone());
                (spliced, next)
            }
        });
    }
    let (game, _) = acc.expect("at least one piece");
    let game = game.with_provenance(format!("compiled from {} pieces", u.pieces().len()));
    let check = verify(&game, u, 1, 0);
    let report = CompilationReport {
        piece_epsilons: epsilons,
        game_rows: game.rows(),
        game_cols: game.cols(),
        witness_log,
        verification: check.verification,
    };
    Ok((game, report))
}

/// Seeded sample points: `per_piece` inside every piece, then every
/// breakpoint and the points `stress_offset()` to either side of it.
pub fn verification_points(u: &PiecewiseRationalFn, per_piece: usize, seed: u64) -> Vec<Rat> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::new();
    for k in 0..u.pieces().len() {
        let (lo, hi) = u.piece_bounds(k);
        for _ in 0..per_piece {
            let d: i64 = rng.gen_range(1..=1000);
            let frac = |n: i64| Rat::new(n.into(), d.into());
            let z = match (lo, hi) {
                (Some(a), Some(b)) => a + (b - a) * frac(rng.gen_range(1..=d)),
                (None, Some(b)) => b - frac(rng.gen_range(0..=100 * d)),
                (Some(a), None) => a + frac(rng.gen_range(1..=100 * d)),
                (None, None) => frac(rng.gen_range(-50 * d..=50 * d)),
            };
            points.push(z);
        }
    }
    let offset = stress_offset();
    for h in u.breakpoints() {
        points.push(h - &offset);
        points.push(h.clone());
        points.push(h + &offset);
    }
    points
}

/// Compares the game's value with `u` at the verification points. Never
/// fails; mismatches are reported in the rows.
pub fn verify(g: &PolyGame, u: &PiecewiseRationalFn, samples_per_piece: usize, seed: u64) -> CompilationReport {
    let verification = verification_points(u, samples_per_piece, seed)
        .into_iter()
        .map(|z| {
            let target = u.eval(&z);
            let actual = g.value_at(&z);
            let equal = target.as_ref() == Some(&actual);
            VerificationRow { z, target, actual, equal }
        })
        .collect();
    CompilationReport {
        piece_epsilons: Vec::new(),
        game_rows: g.rows(),
        game_cols: g.cols(),
        witness_log: Vec::new(),
        verification,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational_fn::RationalFunction;
    use crate::scalar::{rat, ratio};

    type R = RationalFunction<Rat>;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn abs() -> PiecewiseRationalFn {
        PiecewiseRational::new(vec![rat(0)], vec![R::from_poly(p(&[0, -1])), R::from_poly(p(&[0, 1]))]).unwrap()
    }

    #[test]
    fn validation_errors() {
        assert!(validate_input(&abs()).is_ok());
        let step = PiecewiseRational::new(vec![rat(0)], vec![R::zero(), R::constant(rat(1))]).unwrap();
        assert_eq!(
            validate_input(&step),
            Err(Error::Discontinuous {
                breakpoint: rat(0),
                left: rat(0),
                right: rat(1)
            })
        );
        let pole = PiecewiseRational::new(
            vec![rat(0), rat(2)],
            vec![R::zero(), R::new(p(&[1]), p(&[-1, 1])).unwrap(), R::zero()],
        )
        .unwrap();
        assert!(matches!(validate_input(&pole), Err(Error::DenominatorVanishes { piece: 1, .. })));
    }

    #[test]
    fn orientation_makes_denominators_positive() {
        // 1/(Z - 3) on (-inf, 0]: monic denominator is negative there
        let f = PiecewiseRational::single(R::new(p(&[1]), p(&[-3, 1])).unwrap());
        assert!(matches!(validate_input(&f), Err(Error::DenominatorVanishes { .. })));
        let g = PiecewiseRational::new(
            vec![rat(0)],
            vec![R::new(p(&[-1]), p(&[-3, 1])).unwrap(), R::constant(ratio(1, 3))],
        )
        .unwrap();
        let v = validate_input(&g).unwrap();
        assert_eq!(v.pieces[0].den, p(&[3, -1]));
        assert_eq!(v.pieces[0].num, p(&[1]));
    }

    #[test]
    fn pieces() {
        let r = compile_piece(&p(&[1]), &p(&[1, 0, 1]), &rat(1)).unwrap();
        assert_eq!(r.game.value_at(&rat(0)), rat(1));
        assert_eq!(r.game.value_at(&rat(1)), ratio(1, 2));
        let r = compile_piece(&Poly::zero(), &p(&[1, 0, 1]), &rat(1)).unwrap();
        assert_eq!(r.game.value_at(&rat(5)), rat(0));
        let r = compile_piece(&p(&[0, 1]), &p(&[1]), &rat(1)).unwrap();
        assert_eq!(r.game.value_at(&rat(-4)), rat(-4));
    }

    #[test]
    fn piece_clamps_outside_its_interval() {
        // 1/Z on [1, 2] with eps = 1: value is 1/max(Z, 1)
        let r = compile_piece(&p(&[1]), &p(&[0, 1]), &rat(1)).unwrap();
        for k in -8..=8 {
            let z = ratio(k, 2);
            let want = rat(1) / z.clone().max(rat(1));
            assert_eq!(r.game.value_at(&z), want, "at {z}");
        }
    }

    #[test]
    fn absolute_value() {
        let (g, report) = compile(&abs()).unwrap();
        assert_eq!(g.value_at(&rat(-5)), rat(5));
        assert_eq!(g.value_at(&rat(3)), rat(3));
        assert_eq!(g.value_at(&rat(0)), rat(0));
        assert_eq!(report.witness_log.len(), 1);
        assert!(report.all_equal());
        assert!(verify(&g, &abs(), 20, 7).all_equal());
    }

    #[test]
    fn single_rational_piece() {
        let f = PiecewiseRational::single(R::new(p(&[1]), p(&[1, 0, 1])).unwrap());
        let (g, report) = compile(&f).unwrap();
        assert_eq!(g.value_at(&rat(1)), ratio(1, 2));
        assert!(report.piece_epsilons[0] > rat(0));
        assert!(verify(&g, &f, 20, 1).all_equal());
    }

    #[test]
    fn verification_detects_wrong_games() {
        let square = PiecewiseRational::from(p(&[0, 0, 1]));
        let report = verify(&const_game(p(&[0, 1])), &square, 10, 0);
        assert!(!report.all_equal());
        let zero = PiecewiseRational::from(Poly::zero());
        assert!(verify(&const_game(Poly::zero()), &zero, 10, 0).all_equal());
    }

    #[test]
    fn verification_points_are_seeded() {
        let a = verification_points(&abs(), 5, 3);
        assert_eq!(a, verification_points(&abs(), 5, 3));
        assert_ne!(a, verification_points(&abs(), 5, 4));
        assert_eq!(a.len(), 2 * 5 + 3);
        assert!(a.contains(&ratio(1, 1_000_000)));
    }

    #[test]
    fn size_guard() {
        let options = CompileOptions { max_entries: 3 };
        assert!(matches!(compile_with(&abs(), &options), Err(Error::GameTooLarge { .. })));
    }

    #[test]
    fn compile_is_deterministic() {
        let (a, _) = compile(&abs()).unwrap();
        let (b, _) = compile(&abs()).unwrap();
        assert_eq!(a, b);
    }
}
