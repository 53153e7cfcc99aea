//! Closed-form value functions of constructed games.
//!
//! Combinators that need their operands' value functions receive them as
//! `ValueExpr` trees. Every tree denotes a continuous function that is
//! rational between finitely many real points, which makes comparisons
//! with a polynomial decidable: on each open cell of a sign-invariant
//! decomposition the expression equals one rational form, so one sample
//! per cell decides the sign there, and continuity covers the points
//! between cells.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::piecewise::PiecewiseRational;
use crate::poly::Polynomial;
use crate::rational_fn::RationalFunction;
use crate::roots::{decompose, Interval};
use crate::scalar::Rat;

type Poly = Polynomial<Rat>;
type RationalFn = RationalFunction<Rat>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ValueExpr {
    Poly(Poly),
    Piecewise(PiecewiseRational<Rat>),
    Neg(Box<ValueExpr>),
    Scale(Rat, Box<ValueExpr>),
    Add(Box<ValueExpr>, Box<ValueExpr>),
    Mul(Box<ValueExpr>, Box<ValueExpr>),
    Max(Box<ValueExpr>, Box<ValueExpr>),
    Min(Box<ValueExpr>, Box<ValueExpr>),
    /// Only built over expressions bounded away from zero.
    Recip(Box<ValueExpr>),
    /// `left` on `(-inf, at]`, `right` on `(at, +inf)`.
    Splice {
        left: Box<ValueExpr>,
        right: Box<ValueExpr>,
        at: Rat,
    },
}

impl From<Poly> for ValueExpr {
    fn from(p: Poly) -> Self {
        ValueExpr::Poly(p)
    }
}

impl From<PiecewiseRational<Rat>> for ValueExpr {
    fn from(f: PiecewiseRational<Rat>) -> Self {
        ValueExpr::Piecewise(f)
    }
}

impl From<Rat> for ValueExpr {
    fn from(c: Rat) -> Self {
        ValueExpr::Poly(Poly::constant(c))
    }
}

impl ValueExpr {
    pub fn constant(c: Rat) -> Self {
        c.into()
    }

    pub fn neg(self) -> Self {
        ValueExpr::Neg(Box::new(self))
    }

    pub fn scale(self, c: Rat) -> Self {
        ValueExpr::Scale(c, Box::new(self))
    }

    pub fn add(self, other: ValueExpr) -> Self {
        ValueExpr::Add(Box::new(self), Box::new(other))
    }

    pub fn mul(self, other: ValueExpr) -> Self {
        ValueExpr::Mul(Box::new(self), Box::new(other))
    }

    pub fn max(self, other: ValueExpr) -> Self {
        ValueExpr::Max(Box::new(self), Box::new(other))
    }

    pub fn min(self, other: ValueExpr) -> Self {
        ValueExpr::Min(Box::new(self), Box::new(other))
    }

    pub fn recip(self) -> Self {
        ValueExpr::Recip(Box::new(self))
    }

    pub fn splice(left: ValueExpr, right: ValueExpr, at: Rat) -> Self {
        ValueExpr::Splice {
            left: Box::new(left),
            right: Box::new(right),
            at,
        }
    }

    pub fn eval(&self, z: &Rat) -> Rat {
        match self {
            ValueExpr::Poly(p) => p.eval(z),
            ValueExpr::Piecewise(f) => f.eval(z).expect("piecewise function has no pole on its pieces"),
            ValueExpr::Neg(a) => -a.eval(z),
            ValueExpr::Scale(c, a) => c * a.eval(z),
            ValueExpr::Add(a, b) => a.eval(z) + b.eval(z),
            ValueExpr::Mul(a, b) => a.eval(z) * b.eval(z),
            ValueExpr::Max(a, b) => a.eval(z).max(b.eval(z)),
            ValueExpr::Min(a, b) => a.eval(z).min(b.eval(z)),
            ValueExpr::Recip(a) => a.eval(z).recip(),
            ValueExpr::Splice { left, right, at } => {
                if z <= at {
                    left.eval(z)
                } else {
                    right.eval(z)
                }
            }
        }
    }

    /// Rational forms the expression can take on `iv`, and polynomials
    /// whose roots cut `iv` into cells on each of which the expression is
    /// one of those forms.
    fn structure(&self, iv: &Interval<Rat>) -> (Vec<RationalFn>, Vec<Poly>) {
        match self {
            ValueExpr::Poly(p) => (vec![RationalFn::from_poly(p.clone())], Vec::new()),
            ValueExpr::Piecewise(f) => {
                let mut forms = Vec::new();
                let mut cuts = Vec::new();
                for (k, piece) in f.pieces().iter().enumerate() {
                    if overlaps(&f.piece_interval(k), iv) {
                        push_unique(&mut forms, piece.clone());
                    }
                }
                for h in f.breakpoints() {
                    if iv.contains(h) {
                        cuts.push(Poly::linear_root(h.clone()));
                    }
                }
                (forms, cuts)
            }
            ValueExpr::Neg(a) => {
                let (forms, cuts) = a.structure(iv);
                (forms.iter().map(RationalFn::neg).collect(), cuts)
            }
            ValueExpr::Scale(c, a) => {
                let (forms, cuts) = a.structure(iv);
                (forms.iter().map(|f| f.scale(c)).collect(), cuts)
            }
            ValueExpr::Add(a, b) | ValueExpr::Mul(a, b) => {
                let (fa, mut cuts) = a.structure(iv);
                let (fb, cb) = b.structure(iv);
                cuts.extend(cb);
                let mut forms = Vec::new();
                for x in &fa {
                    for y in &fb {
                        let f = if matches!(self, ValueExpr::Add(..)) { x.add(y) } else { x.mul(y) };
                        push_unique(&mut forms, f);
                    }
                }
                (forms, cuts)
            }
            ValueExpr::Max(a, b) | ValueExpr::Min(a, b) => {
                let (fa, mut cuts) = a.structure(iv);
                let (fb, cb) = b.structure(iv);
                cuts.extend(cb);
                for x in &fa {
                    for y in &fb {
                        cuts.push(x.sub(y).num().clone());
                    }
                }
                let mut forms = fa;
                for y in fb {
                    push_unique(&mut forms, y);
                }
                for f in &forms {
                    cuts.push(f.den().clone());
                }
                (forms, cuts)
            }
            ValueExpr::Recip(a) => {
                let (fa, mut cuts) = a.structure(iv);
                let mut forms = Vec::new();
                for f in &fa {
                    cuts.push(f.num().clone());
                    if let Some(r) = f.recip() {
                        push_unique(&mut forms, r);
                    }
                }
                (forms, cuts)
            }
            ValueExpr::Splice { left, right, at } => {
                let below = iv.hi.as_ref().is_some_and(|hi| hi <= at);
                let above = iv.lo.as_ref().is_some_and(|lo| lo >= at);
                if below {
                    return left.structure(iv);
                }
                if above {
                    return right.structure(iv);
                }
                let (mut forms, mut cuts) = left.structure(&Interval {
                    lo: iv.lo.clone(),
                    hi: Some(at.clone()),
                });
                let (fr, cr) = right.structure(&Interval {
                    lo: Some(at.clone()),
                    hi: iv.hi.clone(),
                });
                for f in fr {
                    push_unique(&mut forms, f);
                }
                cuts.extend(cr);
                cuts.push(Poly::linear_root(at.clone()));
                (forms, cuts)
            }
        }
    }

    /// Sign of `self - p` everywhere on `iv`: returns the set of signs
    /// `(negative, zero, positive)` attained at the cell samples. By
    /// continuity, `self >= p` on `iv` iff no cell is negative.
    fn signs_against(&self, p: &Poly, iv: &Interval<Rat>) -> [bool; 3] {
        let mut seen = [false; 3];
        let mut mark = |z: &Rat| {
            let d = self.eval(z) - p.eval(z);
            seen[if d.is_negative() { 0 } else if d.is_zero() { 1 } else { 2 }] = true;
        };
        if let (Some(lo), Some(hi)) = (&iv.lo, &iv.hi) {
            if lo == hi {
                mark(lo);
                return seen;
            }
        }
        let (forms, mut family) = self.structure(iv);
        for f in &forms {
            family.push(f.numerator_minus(p));
            family.push(f.den().clone());
        }
        family.retain(|q| !q.is_constant());
        let d = decompose(&family, iv);
        for cell in &d.cells {
            mark(&cell.sample);
        }
        seen
    }

    /// `self >= p` on all of `iv`, decided exactly.
    pub fn dominates(&self, p: &Poly, iv: &Interval<Rat>) -> bool {
        !self.signs_against(p, iv)[0]
    }

    /// `self <= p` on all of `iv`, decided exactly.
    pub fn dominated_by(&self, p: &Poly, iv: &Interval<Rat>) -> bool {
        !self.signs_against(p, iv)[2]
    }

    /// Sign of the expression on `iv` in the weak sense: `Some(1)` if it is
    /// `>= 0` throughout, `Some(-1)` if `<= 0` throughout (zero function
    /// gives `Some(0)`), `None` if it takes both strict signs.
    pub fn weak_sign(&self, iv: &Interval<Rat>) -> Option<i8> {
        let [neg, _, pos] = self.signs_against(&Poly::zero(), iv);
        match (neg, pos) {
            (false, false) => Some(0),
            (false, true) => Some(1),
            (true, false) => Some(-1),
            (true, true) => None,
        }
    }

    /// Forms and cut polynomials on `iv`; used by sign partitions.
    pub fn cut_polynomials(&self, iv: &Interval<Rat>) -> Vec<Poly> {
        let (forms, mut cuts) = self.structure(iv);
        for f in &forms {
            cuts.push(f.num().clone());
            cuts.push(f.den().clone());
        }
        cuts.retain(|q| !q.is_constant());
        cuts
    }
}

fn push_unique(v: &mut Vec<RationalFn>, f: RationalFn) {
    if !v.contains(&f) {
        v.push(f);
    }
}

fn overlaps(a: &Interval<Rat>, b: &Interval<Rat>) -> bool {
    let lo_ok = match (&a.lo, &b.hi) {
        (Some(lo), Some(hi)) => lo <= hi,
        _ => true,
    };
    let hi_ok = match (&a.hi, &b.lo) {
        (Some(hi), Some(lo)) => lo <= hi,
        _ => true,
    };
    lo_ok && hi_ok
}

impl fmt::Display for ValueExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueExpr::Poly(p) => write!(f, "{p}"),
            ValueExpr::Piecewise(u) => write!(f, "{{{u}}}"),
            ValueExpr::Neg(a) => write!(f, "-({a})"),
            ValueExpr::Scale(c, a) => write!(f, "{c}*({a})"),
            ValueExpr::Add(a, b) => write!(f, "({a}) + ({b})"),
            ValueExpr::Mul(a, b) => write!(f, "({a}) * ({b})"),
            ValueExpr::Max(a, b) => write!(f, "max({a}, {b})"),
            ValueExpr::Min(a, b) => write!(f, "min({a}, {b})"),
            ValueExpr::Recip(a) => write!(f, "1/({a})"),
            ValueExpr::Splice { left, right, at } => write!(f, "[{left} | {at} | {right}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn evaluation() {
        let e = ValueExpr::from(p(&[0, 1])).max(ValueExpr::from(p(&[0, -1])));
        assert_eq!(e.eval(&rat(-3)), rat(3));
        let r = ValueExpr::from(p(&[1, 0, 1])).recip();
        assert_eq!(r.eval(&rat(1)), ratio(1, 2));
        let s = ValueExpr::splice(p(&[0]).into(), p(&[0, 1]).into(), rat(0));
        assert_eq!((s.eval(&rat(-2)), s.eval(&rat(0)), s.eval(&rat(2))), (rat(0), rat(0), rat(2)));
    }

    #[test]
    fn comparisons_on_half_lines() {
        // Z^2 >= Z + Z^3 on (-inf, 0]
        let u: ValueExpr = p(&[0, 0, 1]).into();
        let cand = p(&[0, 1, 0, 1]);
        assert!(u.dominates(&cand, &Interval::at_most(rat(0))));
        assert!(!u.dominates(&cand, &Interval::at_least(rat(0))));
        assert!(u.dominated_by(&cand, &Interval::at_least(rat(0))));
        // max(Z^2, 2) switches forms at +-sqrt 2
        let v = ValueExpr::from(p(&[0, 0, 1])).max(p(&[2]).into());
        assert!(v.dominates(&p(&[2]), &Interval::all()));
        assert!(v.dominates(&p(&[0, 0, 1]), &Interval::all()));
        assert!(!v.dominates(&p(&[3]), &Interval::all()));
    }

    #[test]
    fn recip_and_splice_structure() {
        let r = ValueExpr::from(p(&[1, 0, 1])).max(ratio(1, 2).into()).recip();
        assert!(r.dominated_by(&p(&[1]), &Interval::all()));
        assert!(r.dominates(&p(&[0]), &Interval::all()));
        let s = ValueExpr::splice(p(&[0]).into(), p(&[0, 1]).into(), rat(0));
        assert_eq!(s.weak_sign(&Interval::all()), Some(1));
        assert_eq!(ValueExpr::from(p(&[0, 1])).weak_sign(&Interval::all()), None);
        assert_eq!(ValueExpr::from(p(&[])).weak_sign(&Interval::all()), Some(0));
    }

    #[test]
    fn point_intervals() {
        let u: ValueExpr = p(&[0, 1]).into();
        assert!(u.dominates(&p(&[1]), &Interval::point(rat(1))));
        assert!(!u.dominates(&p(&[2]), &Interval::point(rat(1))));
    }
}
