//! Game constructions with predictable value functions.
//!
//! Each combinator builds a new polynomial game from existing ones so that
//! the value function transforms in a known way: negation, positive
//! scaling, sums, maxima and minima, reciprocals of values bounded away
//! from zero, splicing two games at a rational point, and products.
//! Repeated rows and columns are removed from every result; the `*_raw`
//! builders skip that step and show the plain strategy-set products.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::game::PolynomialGame;
use crate::poly::Polynomial;
use crate::roots::{decompose, Interval};
use crate::scalar::{pow2, sign_of, Rat, Scalar};
use crate::value_expr::ValueExpr;

/// The 1x1 game `[[p]]`.
pub fn const_game<T: Scalar>(p: Polynomial<T>) -> PolynomialGame<T> {
    PolynomialGame::from_fn(1, 1, |_, _| p.clone()).with_provenance("const")
}

/// Players swap roles: the value function is negated.
pub fn negate<T: Scalar>(g: &PolynomialGame<T>) -> PolynomialGame<T> {
    PolynomialGame::from_fn(g.cols(), g.rows(), |i, j| -g.entry(j, i))
        .dedup()
        .with_provenance(label("negate", &[g]))
}

/// Multiplies every payoff by `c > 0`.
pub fn scale<T: Scalar>(g: &PolynomialGame<T>, c: &T) -> Result<PolynomialGame<T>> {
    if !c.is_positive() {
        return Err(Error::NonPositiveScalar(c.to_string()));
    }
    Ok(PolynomialGame::from_fn(g.rows(), g.cols(), |i, j| g.entry(i, j).scale(c))
        .dedup()
        .with_provenance(label("scale", &[g])))
}

/// Both games are played independently and the payoffs added.
pub fn add_raw<T: Scalar>(g1: &PolynomialGame<T>, g2: &PolynomialGame<T>) -> PolynomialGame<T> {
    let (m2, n2) = (g2.rows(), g2.cols());
    PolynomialGame::from_fn(g1.rows() * m2, g1.cols() * n2, |i, j| {
        g1.entry(i / m2, j / n2) + g2.entry(i % m2, j % n2)
    })
}

pub fn add<T: Scalar>(g1: &PolynomialGame<T>, g2: &PolynomialGame<T>) -> PolynomialGame<T> {
    add_raw(g1, g2).dedup().with_provenance(label("add", &[g1, g2]))
}

/// The row player also picks which of the two games is paid out. Rows are
/// `(a, a', U)` then `(a, a', W)`, columns `(b, b')`.
pub fn max_of_raw<T: Scalar>(g1: &PolynomialGame<T>, g2: &PolynomialGame<T>) -> PolynomialGame<T> {
    let (m1, m2, n2) = (g1.rows(), g2.rows(), g2.cols());
    let half = m1 * m2;
    PolynomialGame::from_fn(2 * half, g1.cols() * n2, |i, j| {
        let (pair, which) = (i % half, i / half);
        if which == 0 {
            g1.entry(pair / m2, j / n2).clone()
        } else {
            g2.entry(pair % m2, j % n2).clone()
        }
    })
}

pub fn max_of<T: Scalar>(g1: &PolynomialGame<T>, g2: &PolynomialGame<T>) -> PolynomialGame<T> {
    max_of_raw(g1, g2).dedup().with_provenance(label("max_of", &[g1, g2]))
}

pub fn min_of<T: Scalar>(g1: &PolynomialGame<T>, g2: &PolynomialGame<T>) -> PolynomialGame<T> {
    negate(&max_of(&negate(g1), &negate(g2))).with_provenance(label("min_of", &[g1, g2]))
}

/// Payoffs multiplied entrywise over independent plays. The value is the
/// product of the values wherever both are nonnegative.
pub fn product_game_raw<T: Scalar>(g1: &PolynomialGame<T>, g2: &PolynomialGame<T>) -> PolynomialGame<T> {
    let (m2, n2) = (g2.rows(), g2.cols());
    PolynomialGame::from_fn(g1.rows() * m2, g1.cols() * n2, |i, j| {
        g1.entry(i / m2, j / n2) * g2.entry(i % m2, j % n2)
    })
}

pub fn product_game<T: Scalar>(g1: &PolynomialGame<T>, g2: &PolynomialGame<T>) -> PolynomialGame<T> {
    product_game_raw(g1, g2)
        .dedup()
        .with_provenance(label("product", &[g1, g2]))
}

/// Block game `[[eps, 0], [0, G - eps]]`; its value is `eps - eps^2 / u`
/// whenever the value `u` of `g` is at least `eps`.
pub fn reciprocal_gadget<T: Scalar>(g: &PolynomialGame<T>, eps: &T) -> PolynomialGame<T> {
    let shift = Polynomial::constant(eps.clone());
    PolynomialGame::from_fn(g.rows() + 1, g.cols() + 1, |i, j| match (i, j) {
        (0, 0) => shift.clone(),
        (0, _) | (_, 0) => Polynomial::zero(),
        _ => g.entry(i - 1, j - 1) - &shift,
    })
}

/// Game with value `1 / u`, provided the value `u` of `g` is at least
/// `eps` at every `z`.
pub fn reciprocal<T: Scalar>(g: &PolynomialGame<T>, eps: &T) -> Result<PolynomialGame<T>> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveEpsilon(eps.to_string()));
    }
    let gadget = reciprocal_gadget(g, eps).dedup();
    let shifted = add(&const_game(Polynomial::constant(eps.clone())), &negate(&gadget));
    let inv_sq = T::one() / &(eps.clone() * eps);
    Ok(scale(&shifted, &inv_sq)?.with_provenance(label("reciprocal", &[g])))
}

fn label<T>(op: &str, games: &[&PolynomialGame<T>]) -> String
where
    T: Scalar,
{
    let sizes: Vec<String> = games.iter().map(|g| format!("{}x{}", g.rows(), g.cols())).collect();
    format!("{op}({})", sizes.join(", "))
}

/// Polynomials `P` and `Q` through `(z0, v0)` such that
/// `min(max(u, P), max(w, Q))` equals `u` up to `z0` and `w` after it.
///
/// With `t = Z - z0`: `P = v0 + c_p t + t^(2 n_p + 1)` and
/// `Q = v0 - c_q t - t^(2 n_q + 1)`. The certificates are
/// `P <= u <= Q` on `(-inf, z0]` and `Q <= w <= P` on `[z0, +inf)`.
#[derive(Clone, Debug)]
pub struct SpliceWitness {
    pub z0: Rat,
    pub p: Polynomial<Rat>,
    pub q: Polynomial<Rat>,
    pub c_p: Rat,
    pub n_p: u32,
    pub c_q: Rat,
    pub n_q: u32,
    pub left: ValueExpr,
    pub right: ValueExpr,
}

impl SpliceWitness {
    /// The four one-sided certificates, in the order
    /// `P <= u`, `u <= Q` on the left, `Q <= w`, `w <= P` on the right.
    pub fn certificates(&self) -> [bool; 4] {
        let left = Interval::at_most(self.z0.clone());
        let right = Interval::at_least(self.z0.clone());
        [
            self.left.dominates(&self.p, &left),
            self.left.dominated_by(&self.q, &left),
            self.right.dominates(&self.q, &right),
            self.right.dominated_by(&self.p, &right),
        ]
    }
}

impl fmt::Display for SpliceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "z0 = {}: P = {} (c = {}, N = {}), Q = {} (c = {}, N = {})",
            self.z0, self.p, self.c_p, self.n_p, self.q, self.c_q, self.n_q
        )
    }
}

/// Search frontier for splice witnesses: `N <= max_n`, `c <= 2^max_c_exp`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessBudget {
    pub max_n: u32,
    pub max_c_exp: u32,
}

impl Default for WitnessBudget {
    fn default() -> Self {
        WitnessBudget {
            max_n: 40,
            max_c_exp: 40,
        }
    }
}

/// `v0 + sign * (c t + t^(2n+1))` with `t = Z - z0`.
fn witness_poly(z0: &Rat, v0: &Rat, c: &Rat, n: u32, sign: i64) -> Polynomial<Rat> {
    let odd = Polynomial::monomial(Rat::one(), 2 * n as usize + 1);
    let t_form = &Polynomial::monomial(c.clone(), 1) + &odd;
    let shifted = t_form.scale(&Rat::from_integer(sign.into())).shift(&-z0.clone());
    &shifted + &Polynomial::constant(v0.clone())
}

/// Smallest `2^k` that works for the first workable `n`. Feasibility is
/// monotone in `c` for fixed `n`, so a binary search over exponents finds it.
fn search(budget: WitnessBudget, feasible: impl Fn(&Rat, u32) -> bool) -> Option<(Rat, u32)> {
    for n in 0..=budget.max_n {
        if !feasible(&pow2(budget.max_c_exp), n) {
            continue;
        }
        let (mut lo, mut hi) = (0, budget.max_c_exp);
        while lo < hi {
            let mid = (lo + hi) / 2;
            if feasible(&pow2(mid), n) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return Some((pow2(lo), n));
    }
    None
}

pub fn find_splice_witness(u: &ValueExpr, w: &ValueExpr, z0: &Rat) -> Result<SpliceWitness> {
    find_splice_witness_with_budget(u, w, z0, WitnessBudget::default())
}

pub fn find_splice_witness_with_budget(
    u: &ValueExpr,
    w: &ValueExpr,
    z0: &Rat,
    budget: WitnessBudget,
) -> Result<SpliceWitness> {
    let (left_v, right_v) = (u.eval(z0), w.eval(z0));
    if left_v != right_v {
        return Err(Error::ValueMismatchAtZ0 {
            z0: z0.clone(),
            left: left_v,
            right: right_v,
        });
    }
    let v0 = left_v;
    let left = Interval::at_most(z0.clone());
    let right = Interval::at_least(z0.clone());
    let exceeded = |side| Error::WitnessSearchBudgetExceeded {
        side,
        max_n: budget.max_n,
        max_c_exp: budget.max_c_exp,
    };
    let (c_p, n_p) = search(budget, |c, n| {
        let p = witness_poly(z0, &v0, c, n, 1);
        u.dominates(&p, &left) && w.dominated_by(&p, &right)
    })
    .ok_or_else(|| exceeded("P"))?;
    let (c_q, n_q) = search(budget, |c, n| {
        let q = witness_poly(z0, &v0, c, n, -1);
        u.dominated_by(&q, &left) && w.dominates(&q, &right)
    })
    .ok_or_else(|| exceeded("Q"))?;
    Ok(SpliceWitness {
        z0: z0.clone(),
        p: witness_poly(z0, &v0, &c_p, n_p, 1),
        q: witness_poly(z0, &v0, &c_q, n_q, -1),
        c_p,
        n_p,
        c_q,
        n_q,
        left: u.clone(),
        right: w.clone(),
    })
}

/// Game whose value is `u` on `(-inf, z0]` and `w` on `(z0, +inf)`, where
/// `u` and `w` are the value functions of `g1` and `g2`.
pub fn splice(
    g1: &PolynomialGame<Rat>,
    g2: &PolynomialGame<Rat>,
    u: &ValueExpr,
    w: &ValueExpr,
    z0: &Rat,
) -> Result<(PolynomialGame<Rat>, SpliceWitness)> {
    let witness = find_splice_witness(u, w, z0)?;
    let game = min_of(
        &max_of(g1, &const_game(witness.p.clone())),
        &max_of(g2, &const_game(witness.q.clone())),
    )
    .with_provenance(format!("splice at {z0} of {}x{} and {}x{}", g1.rows(), g1.cols(), g2.rows(), g2.cols()));
    Ok((game, witness))
}

/// A game together with its exact value function and the splice witnesses
/// used to build it.
#[derive(Clone, Debug)]
pub struct Realization {
    pub game: PolynomialGame<Rat>,
    pub value: ValueExpr,
    pub witnesses: Vec<SpliceWitness>,
}

/// Intervals on which two functions keep a weak sign: interval `k` is
/// `(breakpoints[k-1], breakpoints[k]]`, and on it `signs[k].0 * u >= 0`
/// and `signs[k].1 * w >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignPartition {
    pub breakpoints: Vec<Rat>,
    pub signs: Vec<(i8, i8)>,
}

const SIGN_CHOICES: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

/// Allowed sign choices as a bit set over `SIGN_CHOICES`.
fn allowed(su: i8, sw: i8) -> u8 {
    SIGN_CHOICES
        .iter()
        .enumerate()
        .filter(|(_, (a, b))| su * a >= 0 && sw * b >= 0)
        .fold(0, |acc, (k, _)| acc | (1 << k))
}

pub fn sign_partition(u: &ValueExpr, w: &ValueExpr) -> Result<SignPartition> {
    let all = Interval::all();
    let mut family = u.cut_polynomials(&all);
    family.extend(w.cut_polynomials(&all));
    let d = decompose(&family, &all);
    let masks: Vec<u8> = d
        .cells
        .iter()
        .map(|c| allowed(sign_of(&u.eval(&c.sample)), sign_of(&w.eval(&c.sample))))
        .collect();

    let mut breakpoints = Vec::new();
    let mut groups: Vec<u8> = Vec::new();
    let (mut start, mut mask) = (0, masks[0]);
    for i in 1..masks.len() {
        if mask & masks[i] != 0 {
            mask &= masks[i];
            continue;
        }
        // cut at the rightmost rational point that still leaves a common
        // sign choice on the right part
        let mut cut = None;
        let mut right = masks[i];
        for j in (start + 1..=i).rev() {
            if j < i {
                right &= masks[j];
            }
            if right == 0 {
                break;
            }
            let point = &d.points[d.cells[j].left.expect("interior cell")];
            if let Some(h) = point.rational_value() {
                cut = Some((j, h, right));
                break;
            }
        }
        let Some((j, h, right)) = cut else {
            let point = &d.points[d.cells[i].left.expect("interior cell")];
            return Err(Error::IrrationalSignChange {
                lo: point.lo.clone(),
                hi: point.hi.clone(),
            });
        };
        groups.push(masks[start..j].iter().fold(0xff, |acc, m| acc & m));
        breakpoints.push(h);
        start = j;
        mask = right;
    }
    groups.push(mask);
    let signs = groups
        .iter()
        .map(|m| SIGN_CHOICES[m.trailing_zeros() as usize])
        .collect();
    Ok(SignPartition { breakpoints, signs })
}

/// Game with value `sign * max(sign * u, 0)`, or plain `sign * u` when that
/// is already nonnegative everywhere.
fn signed_part(g: &PolynomialGame<Rat>, u: &ValueExpr, sign: i8) -> (PolynomialGame<Rat>, ValueExpr) {
    let (game, expr) = if sign > 0 {
        (g.clone(), u.clone())
    } else {
        (negate(g), u.clone().neg())
    };
    if matches!(expr.weak_sign(&Interval::all()), Some(0) | Some(1)) {
        (game, expr)
    } else {
        (
            max_of(&game, &const_game(Polynomial::zero())),
            expr.max(ValueExpr::constant(Rat::zero())),
        )
    }
}

/// Game with value `u * w`, where `u` and `w` are the value functions of
/// `g1` and `g2`. On each interval of a sign partition one of four signed
/// product games has value `u * w`; these are spliced left to right.
pub fn multiply(
    g1: &PolynomialGame<Rat>,
    g2: &PolynomialGame<Rat>,
    u: &ValueExpr,
    w: &ValueExpr,
) -> Result<Realization> {
    let partition = sign_partition(u, w)?;
    let product = u.clone().mul(w.clone());
    let pieces: Vec<(PolynomialGame<Rat>, ValueExpr)> = partition
        .signs
        .iter()
        .map(|&(su, sw)| {
            let (a, ea) = signed_part(g1, u, su);
            let (b, eb) = signed_part(g2, w, sw);
            let game = product_game(&a, &b);
            let expr = ea.mul(eb);
            if su * sw > 0 {
                (game, expr)
            } else {
                (negate(&game), expr.neg())
            }
        })
        .collect();

    let mut iter = pieces.into_iter();
    let (mut game, mut value) = iter.next().expect("at least one interval");
    let mut witnesses = Vec::new();
    for ((next, next_value), h) in iter.zip(&partition.breakpoints) {
        let (spliced, witness) = splice(&game, &next, &value, &next_value, h)?;
        game = spliced;
        value = ValueExpr::splice(product.clone(), next_value, h.clone());
        witnesses.push(witness);
    }
    Ok(Realization {
        game: game.with_provenance(format!("multiply over {} sign intervals", partition.signs.len())),
        value: product,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::piecewise::PiecewiseRational;
    use crate::rational_fn::RationalFunction;
    use crate::scalar::{rat, ratio};

    type G = PolynomialGame<Rat>;
    type P = Polynomial<Rat>;

    fn p(c: &[i64]) -> P {
        P::from_ints(c)
    }

    fn diagonal() -> G {
        G::from_ints(&[&[&[0, 1], &[]], &[&[], &[1, -1]]])
    }

    fn zs() -> Vec<Rat> {
        (-12..=12).map(|k| ratio(k, 4)).collect()
    }

    #[test]
    fn constants_and_negation() {
        assert_eq!(const_game(p(&[0, 1])).value_at(&rat(4)), rat(4));
        assert_eq!(const_game(P::zero()).value_at(&rat(9)), rat(0));
        let g = negate(&const_game(p(&[0, 1])));
        assert_eq!(g.entry(0, 0), &p(&[0, -1]));
        assert_eq!(g.value_at(&rat(3)), rat(-3));
        let d = diagonal();
        let back = negate(&negate(&d));
        assert_eq!((back.rows(), back.cols()), (2, 2));
        assert!((0..2).all(|i| back.row(i) == d.row(i)));
    }

    #[test]
    fn scaling() {
        assert_eq!(scale(&const_game(p(&[0, 1])), &rat(2)).unwrap().value_at(&rat(3)), rat(6));
        assert!(matches!(scale(&diagonal(), &rat(0)), Err(Error::NonPositiveScalar(_))));
        let s = scale(&diagonal(), &rat(1)).unwrap();
        assert_eq!(s.entry(0, 0), diagonal().entry(0, 0));
    }

    #[test]
    fn sums_and_maxima() {
        assert_eq!(add(&const_game(p(&[0, 1])), &const_game(p(&[1]))).value_at(&rat(2)), rat(3));
        let m = max_of(&const_game(p(&[0, 1])), &const_game(p(&[0, -1])));
        assert_eq!((m.value_at(&rat(2)), m.value_at(&rat(-2))), (rat(2), rat(2)));
        let d = diagonal();
        let dd = max_of(&d, &d);
        for z in zs() {
            assert_eq!(dd.value_at(&z), d.value_at(&z));
            assert_eq!(add(&d, &const_game(P::zero())).value_at(&z), d.value_at(&z));
        }
    }

    #[test]
    fn raw_sizes() {
        let g1 = G::from_ints(&[&[&[1], &[2], &[3]], &[&[4], &[5], &[6]]]);
        let g2 = G::from_ints(&[&[&[0, 1], &[7]], &[&[8], &[9]], &[&[1, 1], &[2]]]);
        let a = add_raw(&g1, &g2);
        assert_eq!((a.rows(), a.cols()), (6, 6));
        let m = max_of_raw(&g1, &g2);
        assert_eq!((m.rows(), m.cols()), (12, 6));
        // the U rows repeat across a', the W rows across a
        let m = max_of(&g1, &g2);
        assert_eq!((m.rows(), m.cols()), (5, 6));
        for z in zs() {
            assert_eq!(max_of_raw(&g1, &g2).value_at(&z), m.value_at(&z));
        }
    }

    #[test]
    fn reciprocal_values() {
        let g = const_game(p(&[2, 0, 1]));
        let r = reciprocal(&g, &rat(1)).unwrap();
        assert_eq!(r.value_at(&rat(0)), ratio(1, 2));
        assert_eq!(r.value_at(&rat(3)), ratio(1, 11));
        let c = reciprocal(&const_game(p(&[2])), &rat(1)).unwrap();
        assert_eq!(c.value_at(&rat(-7)), ratio(1, 2));
        let gadget = reciprocal_gadget(&const_game(p(&[4])), &rat(1));
        assert_eq!(gadget.value_at(&rat(0)), ratio(3, 4));
        assert!(matches!(reciprocal(&g, &rat(0)), Err(Error::NonPositiveEpsilon(_))));
    }

    #[test]
    fn witness_for_zero_functions() {
        let zero: ValueExpr = P::zero().into();
        let w = find_splice_witness(&zero, &zero, &rat(0)).unwrap();
        assert_eq!(w.certificates(), [true; 4]);
        assert_eq!((w.c_p.clone(), w.n_p), (rat(1), 0));
        assert_eq!(w.p, p(&[0, 2]));
        assert_eq!(w.q, p(&[0, -2]));
    }

    #[test]
    fn witness_for_square_and_negated_square() {
        let u: ValueExpr = p(&[0, 0, 1]).into();
        let w: ValueExpr = p(&[0, 0, -1]).into();
        let wit = find_splice_witness(&u, &w, &rat(0)).unwrap();
        assert_eq!(wit.certificates(), [true; 4]);
        // the example P = Z + Z^3 is itself admissible
        let alt = SpliceWitness {
            p: p(&[0, 1, 0, 1]),
            ..wit.clone()
        };
        assert!(alt.certificates()[0] && alt.certificates()[3]);
    }

    #[test]
    fn witness_for_shifted_identity() {
        let u: ValueExpr = p(&[0, 1]).into();
        let wit = find_splice_witness(&u, &u, &rat(5)).unwrap();
        assert_eq!(wit.certificates(), [true; 4]);
        assert_eq!(wit.n_p, 0);
        assert_eq!(wit.p.eval(&rat(5)), rat(5));
    }

    #[test]
    fn witness_mismatch() {
        let u: ValueExpr = p(&[0]).into();
        let w: ValueExpr = p(&[1]).into();
        assert!(matches!(
            find_splice_witness(&u, &w, &rat(0)),
            Err(Error::ValueMismatchAtZ0 { .. })
        ));
    }

    #[test]
    fn witness_budget() {
        // Z^3 on the left grows too fast for c t + t (N = 0 only)
        let u: ValueExpr = p(&[0, 0, 0, -1]).into();
        let small = WitnessBudget { max_n: 0, max_c_exp: 3 };
        assert!(matches!(
            find_splice_witness_with_budget(&u, &u, &rat(0), small),
            Err(Error::WitnessSearchBudgetExceeded { .. })
        ));
        assert!(find_splice_witness(&u, &u, &rat(0)).is_ok());
    }

    #[test]
    fn splicing() {
        let (g, _) = splice(
            &const_game(P::zero()),
            &const_game(p(&[0, 1])),
            &P::zero().into(),
            &p(&[0, 1]).into(),
            &rat(0),
        )
        .unwrap();
        assert_eq!((g.value_at(&rat(-3)), g.value_at(&rat(2))), (rat(0), rat(2)));
        let (g, w) = splice(
            &const_game(p(&[0, 1])),
            &const_game(p(&[0, 0, 1])),
            &p(&[0, 1]).into(),
            &p(&[0, 0, 1]).into(),
            &rat(1),
        )
        .unwrap();
        assert_eq!(w.certificates(), [true; 4]);
        for z in zs() {
            let want = if z <= rat(1) { z.clone() } else { &z * &z };
            assert_eq!(g.value_at(&z), want, "at {z}");
        }
    }

    #[test]
    fn products() {
        let g = product_game(&const_game(p(&[0, 1])), &const_game(p(&[0, 1])));
        assert_eq!(g.value_at(&rat(3)), rat(9));
        let d = diagonal();
        let one = product_game(&d, &const_game(p(&[1])));
        for z in zs() {
            assert_eq!(one.value_at(&z), d.value_at(&z));
        }
    }

    #[test]
    fn multiply_identity_square() {
        let z: ValueExpr = p(&[0, 1]).into();
        let r = multiply(&const_game(p(&[0, 1])), &const_game(p(&[0, 1])), &z, &z).unwrap();
        for k in -2..=2 {
            assert_eq!(r.game.value_at(&rat(k)), rat(k * k));
        }
        assert_eq!(r.witnesses.len(), 1);
        assert!(r.witnesses.iter().all(|w| w.certificates() == [true; 4]));
    }

    #[test]
    fn multiply_three_sign_intervals() {
        let u: ValueExpr = p(&[0, 1]).into();
        let w: ValueExpr = p(&[1, -1]).into();
        let r = multiply(&const_game(p(&[0, 1])), &const_game(p(&[1, -1])), &u, &w).unwrap();
        for z in zs() {
            assert_eq!(r.game.value_at(&z), &z * &(rat(1) - &z), "at {z}");
        }
        assert_eq!(r.witnesses.len(), 2);
    }

    #[test]
    fn multiply_by_one_preserves_value() {
        let d = diagonal();
        let u: ValueExpr = diagonal_value().into();
        let r = multiply(&d, &const_game(p(&[1])), &u, &p(&[1]).into()).unwrap();
        for z in zs() {
            assert_eq!(r.game.value_at(&z), d.value_at(&z), "at {z}");
        }
    }

    fn diagonal_value() -> PiecewiseRational<Rat> {
        PiecewiseRational::new(
            vec![rat(0), rat(1)],
            vec![RationalFunction::zero(), RationalFunction::from_poly(p(&[0, 1, -1])), RationalFunction::zero()],
        )
        .unwrap()
    }

    #[test]
    fn irrational_sign_change() {
        let u: ValueExpr = p(&[-2, 0, 1]).into();
        let one: ValueExpr = p(&[1]).into();
        assert!(matches!(
            multiply(&const_game(p(&[-2, 0, 1])), &const_game(p(&[1])), &u, &one),
            Err(Error::IrrationalSignChange { .. })
        ));
    }
}
