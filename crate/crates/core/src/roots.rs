//! Real-root counting and isolation by Sturm sequences.
//!
//! Everything here is exact. Roots are never approximated numerically; a
//! root is either known exactly (a degenerate interval) or enclosed by a
//! rational interval that can be refined by bisection on demand.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::{sign_of, ExactField, Rat};

/// Closed interval of the real line; `None` marks an infinite end.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Interval<T> {
    pub lo: Option<T>,
    pub hi: Option<T>,
}

impl<T: ExactField> Interval<T> {
    pub fn closed(lo: T, hi: T) -> Self {
        assert!(lo <= hi, "empty interval");
        Interval {
            lo: Some(lo),
            hi: Some(hi),
        }
    }

    /// `(-inf, hi]`
    pub fn at_most(hi: T) -> Self {
        Interval { lo: None, hi: Some(hi) }
    }

    /// `[lo, +inf)`
    pub fn at_least(lo: T) -> Self {
        Interval { lo: Some(lo), hi: None }
    }

    pub fn all() -> Self {
        Interval { lo: None, hi: None }
    }

    pub fn point(z: T) -> Self {
        Self::closed(z.clone(), z)
    }

    pub fn contains(&self, z: &T) -> bool {
        self.lo.as_ref().is_none_or(|lo| lo <= z) && self.hi.as_ref().is_none_or(|hi| z <= hi)
    }

    /// Some rational point of the interval, preferring the midpoint.
    pub fn sample(&self) -> T {
        match (&self.lo, &self.hi) {
            (Some(a), Some(b)) => midpoint(a, b),
            (Some(a), None) => a.clone() + &T::one(),
            (None, Some(b)) => b.clone() - &T::one(),
            (None, None) => T::zero(),
        }
    }

    /// Finite version of the interval that contains every root of a
    /// polynomial with Cauchy bound `bound`.
    fn clamp_to(&self, bound: &T) -> Option<(T, T)> {
        let lo = match &self.lo {
            Some(a) if *a > -bound.clone() => a.clone(),
            _ => -bound.clone(),
        };
        let hi = match &self.hi {
            Some(b) if b < bound => b.clone(),
            _ => bound.clone(),
        };
        (lo <= hi).then_some((lo, hi))
    }
}

impl<T: fmt::Display> fmt::Display for Interval<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            Some(a) => write!(f, "[{a}, ")?,
            None => write!(f, "(-inf, ")?,
        }
        match &self.hi {
            Some(b) => write!(f, "{b}]"),
            None => write!(f, "+inf)"),
        }
    }
}

pub(crate) fn midpoint<T: ExactField>(a: &T, b: &T) -> T {
    (a.clone() + b) / &T::from_int(2)
}

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmSequence<T> {
    seq: Vec<Polynomial<T>>,
}

impl<T: ExactField> SturmSequence<T> {
    /// Builds the sequence for the square-free part of `p`.
    pub fn new(p: &Polynomial<T>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let p = p.squarefree_part();
        let mut seq = vec![p.clone(), p.derivative().sign_normalized()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push((-r).sign_normalized());
        }
        Ok(SturmSequence { seq })
    }

    pub fn polynomial(&self) -> &Polynomial<T> {
        &self.seq[0]
    }

    fn variations(&self, z: &T) -> usize {
        count_variations(self.seq.iter().map(|q| sign_of(&q.eval(z))))
    }

    /// Distinct roots in the half-open `(a, b]`.
    pub fn count_half_open(&self, a: &T, b: &T) -> usize {
        if a >= b {
            return 0;
        }
        self.variations(a) - self.variations(b)
    }

    /// Distinct roots in the closed interval.
    pub fn count(&self, iv: &Interval<T>) -> usize {
        let bound = self.polynomial().cauchy_bound();
        let Some((a, b)) = iv.clamp_to(&bound) else {
            return 0;
        };
        let at_a = usize::from(self.polynomial().eval(&a).is_zero());
        at_a + self.count_half_open(&a, &b)
    }
}

fn count_variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `p` in the closed interval.
pub fn sturm_count_roots<T: ExactField>(p: &Polynomial<T>, iv: &Interval<T>) -> Result<usize> {
    Ok(SturmSequence::new(p)?.count(iv))
}

/// Interval enclosing exactly one real root of its (square-free) polynomial.
/// `lo == hi` means the root is known exactly; otherwise the root lies in
/// the open interval and neither endpoint is a root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealRootInterval<T> {
    pub lo: T,
    pub hi: T,
    poly: Polynomial<T>,
}

impl<T: ExactField> RealRootInterval<T> {
    fn exact(z: T, poly: Polynomial<T>) -> Self {
        RealRootInterval {
            lo: z.clone(),
            hi: z,
            poly,
        }
    }

    pub fn polynomial(&self) -> &Polynomial<T> {
        &self.poly
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> T {
        self.hi.clone() - &self.lo
    }

    pub fn as_interval(&self) -> Interval<T> {
        Interval::closed(self.lo.clone(), self.hi.clone())
    }

    /// Halves the interval, keeping the root inside.
    pub fn refine(&mut self) {
        if self.is_exact() {
            return;
        }
        let m = midpoint(&self.lo, &self.hi);
        let sm = sign_of(&self.poly.eval(&m));
        if sm == 0 {
            self.lo = m.clone();
            self.hi = m;
        } else if sm == sign_of(&self.poly.eval(&self.lo)) {
            self.lo = m;
        } else {
            self.hi = m;
        }
    }

    /// Refines until the width is at most `width`.
    pub fn refine_to(&mut self, width: &T) {
        while self.width() > *width {
            self.refine();
        }
    }
}

fn isolate_open<T: ExactField>(
    seq: &SturmSequence<T>,
    a: &T,
    b: &T,
    out: &mut Vec<RealRootInterval<T>>,
) {
    let p = seq.polynomial();
    // roots strictly inside (a, b); a or b may themselves be roots
    let open = |a: &T, b: &T| seq.count_half_open(a, b) - usize::from(p.eval(b).is_zero());
    let n = open(a, b);
    if n == 0 {
        return;
    }
    if n == 1 {
        let (mut lo, mut hi) = (a.clone(), b.clone());
        while p.eval(&lo).is_zero() || p.eval(&hi).is_zero() {
            let m = midpoint(&lo, &hi);
            if p.eval(&m).is_zero() {
                out.push(RealRootInterval::exact(m, p.clone()));
                return;
            }
            if open(&lo, &m) == 1 {
                hi = m;
            } else {
                lo = m;
            }
        }
        out.push(RealRootInterval { lo, hi, poly: p.clone() });
        return;
    }
    let m = midpoint(a, b);
    isolate_open(seq, a, &m, out);
    if p.eval(&m).is_zero() {
        out.push(RealRootInterval::exact(m.clone(), p.clone()));
    }
    isolate_open(seq, &m, b, out);
}

/// Isolating intervals for the distinct roots of `p` in `iv`, sorted.
/// Raw bisection output: neighbouring intervals may share an endpoint.
fn isolate_raw<T: ExactField>(p: &Polynomial<T>, iv: &Interval<T>) -> Result<Vec<RealRootInterval<T>>> {
    let seq = SturmSequence::new(p)?;
    let sf = seq.polynomial();
    let mut out = Vec::new();
    if sf.is_constant() {
        return Ok(out);
    }
    let bound = sf.cauchy_bound();
    let Some((a, b)) = iv.clamp_to(&bound) else {
        return Ok(out);
    };
    if sf.eval(&a).is_zero() {
        out.push(RealRootInterval::exact(a.clone(), sf.clone()));
    }
    if a < b {
        isolate_open(&seq, &a, &b, &mut out);
        if sf.eval(&b).is_zero() {
            out.push(RealRootInterval::exact(b.clone(), sf.clone()));
        }
    }
    Ok(out)
}

/// Isolates every distinct real root of `p` inside `iv`. The returned
/// intervals are sorted and pairwise disjoint as closed intervals.
pub fn isolate_roots<T: ExactField>(p: &Polynomial<T>, iv: &Interval<T>) -> Result<Vec<RealRootInterval<T>>> {
    let mut roots = isolate_raw(p, iv)?;
    separate(&mut roots);
    Ok(roots)
}

/// Refines sorted intervals of distinct roots until consecutive closed
/// intervals no longer touch.
fn separate<T: ExactField>(roots: &mut [RealRootInterval<T>]) {
    for i in 1..roots.len() {
        while roots[i - 1].hi >= roots[i].lo {
            if roots[i - 1].is_exact() {
                roots[i].refine();
            } else if roots[i].is_exact() {
                roots[i - 1].refine();
            } else {
                roots[i - 1].refine();
                roots[i].refine();
            }
        }
    }
}

/// A sign-invariant decomposition of an interval with respect to a family
/// of polynomials: `points` are all their distinct roots in the interval
/// (plus its finite endpoints), and on each open cell between consecutive
/// points every polynomial of the family has constant sign.
#[derive(Clone, Debug)]
pub struct Decomposition<T> {
    pub points: Vec<RealRootInterval<T>>,
    pub cells: Vec<Cell<T>>,
}

#[derive(Clone, Debug)]
pub struct Cell<T> {
    /// Rational point strictly inside the cell.
    pub sample: T,
    /// Index of the bounding point on each side; `None` for an infinite end.
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl<T: ExactField> Decomposition<T> {
    /// `count` distinct rational points strictly inside cell `i`.
    pub fn cell_points(&self, i: usize, count: usize) -> Vec<T> {
        let cell = &self.cells[i];
        let lo = cell.left.map(|k| self.points[k].hi.clone());
        let hi = cell.right.map(|k| self.points[k].lo.clone());
        let step = |k: usize| T::from_int(k as i64 + 1);
        match (lo, hi) {
            (Some(a), Some(b)) => {
                let n = T::from_int(count as i64 + 1);
                let width = b - &a;
                (0..count)
                    .map(|k| a.clone() + &(width.clone() * &step(k) / &n))
                    .collect()
            }
            (Some(a), None) => (0..count).map(|k| a.clone() + &step(k)).collect(),
            (None, Some(b)) => (0..count).map(|k| b.clone() - &step(k)).collect(),
            (None, None) => (0..count).map(|k| T::from_int(k as i64)).collect(),
        }
    }
}

/// Builds the decomposition of `iv` for `polys` (zero and constant
/// polynomials are ignored).
pub fn decompose<T: ExactField>(polys: &[Polynomial<T>], iv: &Interval<T>) -> Decomposition<T> {
    let mut points: Vec<RealRootInterval<T>> = Vec::new();
    for end in [&iv.lo, &iv.hi].into_iter().flatten() {
        points.push(RealRootInterval::exact(
            end.clone(),
            Polynomial::linear_root(end.clone()),
        ));
    }
    let mut seen: Vec<Polynomial<T>> = Vec::new();
    for p in polys {
        if p.is_constant() {
            continue;
        }
        let sf = p.squarefree_part();
        if seen.contains(&sf) {
            continue;
        }
        points.extend(isolate_raw(&sf, iv).expect("nonzero polynomial"));
        seen.push(sf);
    }
    merge_points(&mut points);

    let mut cells = Vec::new();
    let n = points.len();
    if n == 0 {
        cells.push(Cell {
            sample: iv.sample(),
            left: None,
            right: None,
        });
    } else {
        if iv.lo.is_none() {
            cells.push(Cell {
                sample: points[0].lo.clone() - &T::one(),
                left: None,
                right: Some(0),
            });
        }
        for i in 1..n {
            cells.push(Cell {
                sample: midpoint(&points[i - 1].hi, &points[i].lo),
                left: Some(i - 1),
                right: Some(i),
            });
        }
        if iv.hi.is_none() {
            cells.push(Cell {
                sample: points[n - 1].hi.clone() + &T::one(),
                left: Some(n - 1),
                right: None,
            });
        }
    }
    Decomposition { points, cells }
}

/// Sorts root intervals coming from several polynomials, identifies equal
/// roots, and refines until all closed intervals are pairwise disjoint.
fn merge_points<T: ExactField>(points: &mut Vec<RealRootInterval<T>>) {
    loop {
        points.sort_by(|a, b| a.lo.cmp(&b.lo).then(a.hi.cmp(&b.hi)));
        let Some(i) = (1..points.len()).find(|&i| points[i - 1].hi >= points[i].lo) else {
            return;
        };
        let (a, b) = (points[i - 1].clone(), points[i].clone());
        let lo = a.lo.clone().max(b.lo.clone());
        let hi = a.hi.clone().min(b.hi.clone());
        // endpoints of a non-degenerate interval are never roots of its
        // polynomial, so a common root in the overlap is the root of both
        let g = a.poly.gcd(&b.poly);
        let same = if lo == hi {
            a.poly.eval(&lo).is_zero() && b.poly.eval(&lo).is_zero()
        } else {
            !g.is_constant()
                && SturmSequence::new(&g)
                    .map(|s| s.count(&Interval::closed(lo.clone(), hi.clone())) > 0)
                    .unwrap_or(false)
        };
        if same {
            let merged = if lo == hi {
                RealRootInterval::exact(lo, a.poly.clone())
            } else {
                RealRootInterval { lo, hi, poly: g }
            };
            points[i - 1] = merged;
            points.remove(i);
        } else if a.is_exact() {
            points[i].refine();
        } else if b.is_exact() {
            points[i - 1].refine();
        } else {
            points[i - 1].refine();
            points[i].refine();
        }
    }
}

/// Certified rational `eps > 0` with `eps <= R(z)` on the whole interval.
///
/// Starts from the smallest of `R` at the finite endpoints and at a sample
/// point and halves until `R - eps` has no root in the interval.
pub fn certify_positive_lower_bound<T: ExactField>(r: &Polynomial<T>, iv: &Interval<T>) -> Result<T> {
    if r.is_zero() || sturm_count_roots(r, iv)? > 0 {
        return Err(Error::NotPositive);
    }
    let sample = iv.sample();
    let mut eps = r.eval(&sample);
    // no roots on a connected set: the sign is the sign anywhere
    if !eps.is_positive() {
        return Err(Error::NotPositive);
    }
    for end in [&iv.lo, &iv.hi].into_iter().flatten() {
        eps = eps.min(r.eval(end));
    }
    let two = T::from_int(2);
    loop {
        let shifted = r - &Polynomial::constant(eps.clone());
        if shifted.is_zero() || sturm_count_roots(&shifted, iv)? == 0 {
            return Ok(eps);
        }
        eps = eps / &two;
    }
}

impl RealRootInterval<Rat> {
    /// The root itself when it is rational.
    ///
    /// By the rational root theorem every rational root of an integer
    /// polynomial with leading coefficient `L` is a multiple of `1/L`, so
    /// once the interval is narrower than `1/L` there is one candidate.
    pub fn rational_value(&self) -> Option<Rat> {
        if self.is_exact() {
            return Some(self.lo.clone());
        }
        let ints = self.poly.primitive_integer();
        let lead = ints.last()?.abs();
        let mut iv = self.clone();
        let width = Rat::new(BigInt::one(), lead.clone() * 2);
        iv.refine_to(&width);
        if iv.is_exact() {
            return Some(iv.lo);
        }
        let scaled = iv.lo.clone() * Rat::from_integer(lead.clone());
        let k = scaled.floor().to_integer() + 1;
        let candidate = Rat::new(k, lead);
        (candidate < iv.hi && self.poly.eval(&candidate).is_zero()).then_some(candidate)
    }
}

impl<T: ExactField> PartialOrd for RealRootInterval<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.hi < other.lo {
            Some(Ordering::Less)
        } else if other.hi < self.lo {
            Some(Ordering::Greater)
        } else if self.is_exact() && other.is_exact() {
            Some(self.lo.cmp(&other.lo))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};
    use proptest::prelude::*;

    type P = Polynomial<Rat>;

    fn p(c: &[i64]) -> P {
        P::from_ints(c)
    }

    fn from_roots(roots: &[Rat]) -> P {
        roots
            .iter()
            .fold(P::one(), |acc, r| &acc * &P::linear_root(r.clone()))
    }

    #[test]
    fn counting_examples() {
        assert_eq!(sturm_count_roots(&p(&[-2, 0, 1]), &Interval::closed(rat(0), rat(2))).unwrap(), 1);
        assert_eq!(sturm_count_roots(&p(&[1, 0, 1]), &Interval::all()).unwrap(), 0);
        let q = &from_roots(&[rat(1), rat(1)]) * &p(&[1, 1]);
        assert_eq!(sturm_count_roots(&q, &Interval::closed(rat(-2), rat(2))).unwrap(), 2);
        assert_eq!(sturm_count_roots(&P::zero(), &Interval::all()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn counting_includes_closed_endpoints() {
        let q = from_roots(&[rat(0), rat(1)]);
        assert_eq!(sturm_count_roots(&q, &Interval::closed(rat(0), rat(1))).unwrap(), 2);
        assert_eq!(sturm_count_roots(&q, &Interval::closed(rat(1), rat(1))).unwrap(), 1);
        assert_eq!(sturm_count_roots(&q, &Interval::at_most(rat(0))).unwrap(), 1);
        assert_eq!(sturm_count_roots(&q, &Interval::at_least(ratio(1, 2))).unwrap(), 1);
        assert_eq!(sturm_count_roots(&q, &Interval::at_least(rat(5))).unwrap(), 0);
    }

    #[test]
    fn isolating_sqrt_two() {
        let q = p(&[-2, 0, 1]);
        let mut roots = isolate_roots(&q, &Interval::all()).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &mut roots {
            r.refine_to(&ratio(1, 4));
            assert_eq!(sturm_count_roots(&q, &r.as_interval()).unwrap(), 1);
            assert!(r.rational_value().is_none());
        }
        assert!(roots[0].hi < rat(0) && roots[1].lo > rat(0));
        // -sqrt 2 in [-3/2, -5/4] and sqrt 2 in [5/4, 3/2]
        assert!(roots[0].lo >= ratio(-3, 2) && roots[0].hi <= ratio(-5, 4));
        assert!(roots[1].lo >= ratio(5, 4) && roots[1].hi <= ratio(3, 2));
    }

    #[test]
    fn isolating_trivial_cases() {
        assert!(isolate_roots(&p(&[1, 0, 1]), &Interval::all()).unwrap().is_empty());
        let roots = isolate_roots(&p(&[0, -1, 1]), &Interval::closed(rat(0), rat(1))).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].rational_value(), Some(rat(0)));
        assert_eq!(roots[1].rational_value(), Some(rat(1)));
    }

    #[test]
    fn rational_roots_are_recognized() {
        let q = &from_roots(&[ratio(2, 3), ratio(-7, 5)]) * &p(&[-3, 0, 1]);
        let roots = isolate_roots(&q, &Interval::all()).unwrap();
        let rational: Vec<_> = roots.iter().filter_map(|r| r.rational_value()).collect();
        assert_eq!(rational, vec![ratio(-7, 5), ratio(2, 3)]);
        assert_eq!(roots.len(), 4);
    }

    #[test]
    fn positive_lower_bounds() {
        let e = certify_positive_lower_bound(&p(&[1, 0, 1]), &Interval::all()).unwrap();
        assert!(e > rat(0) && e <= rat(1));
        let e = certify_positive_lower_bound(&p(&[1, 1, 1]), &Interval::at_most(rat(0))).unwrap();
        assert!(e > rat(0) && e <= ratio(3, 4));
        assert_eq!(
            certify_positive_lower_bound(&p(&[-1, 1]), &Interval::closed(rat(0), rat(2))),
            Err(Error::NotPositive)
        );
        assert_eq!(
            certify_positive_lower_bound(&p(&[-1, 1]), &Interval::at_most(rat(0))),
            Err(Error::NotPositive)
        );
        assert_eq!(certify_positive_lower_bound(&p(&[3]), &Interval::all()).unwrap(), rat(3));
        let e = certify_positive_lower_bound(&p(&[-1, 1]), &Interval::at_least(rat(2))).unwrap();
        assert!(e > rat(0) && e <= rat(1));
    }

    #[test]
    fn decomposition_of_shared_roots() {
        // roots: {0, 1} and {1, sqrt 2}; 1 is shared
        let a = from_roots(&[rat(0), rat(1)]);
        let b = &p(&[-1, 1]) * &p(&[-2, 0, 1]);
        let d = decompose(&[a.clone(), b.clone()], &Interval::at_least(rat(-1)));
        // points: -1 (endpoint), 0, 1, sqrt2; -sqrt2 lies outside
        assert_eq!(d.points.len(), 4);
        assert_eq!(d.cells.len(), 4);
        assert!(d.points[2].is_exact() && d.points[2].lo == rat(1));
        for w in d.points.windows(2) {
            assert!(w[0].hi < w[1].lo);
        }
        for cell in &d.cells {
            assert!(!a.eval(&cell.sample).is_zero());
            assert!(!b.eval(&cell.sample).is_zero());
        }
    }

    #[test]
    fn decomposition_without_roots() {
        let d = decompose(&[p(&[1, 0, 1])], &Interval::all());
        assert!(d.points.is_empty());
        assert_eq!(d.cells.len(), 1);
        let d = decompose(&[], &Interval::closed(rat(0), rat(3)));
        assert_eq!(d.points.len(), 2);
        assert_eq!(d.cells.len(), 1);
        assert_eq!(d.cells[0].sample, ratio(3, 2));
        assert_eq!(d.cell_points(0, 2), vec![rat(1), rat(2)]);
    }

    fn factored() -> impl Strategy<Value = (P, Vec<Rat>)> {
        (
            prop::collection::vec((-12i64..12, 1i64..5, 1u32..3), 0..4),
            prop::collection::vec((-5i64..5, 1i64..5), 0..2),
        )
            .prop_map(|(lin, quad)| {
                let mut poly = P::one();
                let mut roots = Vec::new();
                for (n, d, mult) in lin {
                    let r = ratio(n, d);
                    poly = &poly * &P::linear_root(r.clone()).pow(mult);
                    roots.push(r);
                }
                for (b, c) in quad {
                    // Z^2 + bZ + (b^2 + c^2): negative discriminant
                    let q = P::new(vec![rat(b * b + c * c), rat(b), rat(1)]);
                    poly = &poly * &q;
                }
                roots.sort();
                roots.dedup();
                (poly, roots)
            })
    }

    proptest! {
        #[test]
        fn counts_match_constructed_roots((q, roots) in factored(), a in -15i64..15, w in 0i64..20, den in 1i64..4) {
            let lo = ratio(a, den);
            let hi = lo.clone() + ratio(w, den);
            let iv = Interval::closed(lo.clone(), hi.clone());
            let expected = roots.iter().filter(|r| **r >= lo && **r <= hi).count();
            prop_assert_eq!(sturm_count_roots(&q, &iv).unwrap(), expected);
            prop_assert_eq!(sturm_count_roots(&q, &Interval::all()).unwrap(), roots.len());
        }

        #[test]
        fn isolation_is_complete((q, roots) in factored()) {
            let isolated = isolate_roots(&q, &Interval::all()).unwrap();
            prop_assert_eq!(isolated.len(), roots.len());
            for (iv, r) in isolated.iter().zip(&roots) {
                prop_assert_eq!(sturm_count_roots(&q, &iv.as_interval()).unwrap(), 1);
                prop_assert_eq!(iv.rational_value(), Some(r.clone()));
            }
            for w in isolated.windows(2) {
                prop_assert!(w[0].hi < w[1].lo);
            }
        }

        #[test]
        fn certified_bound_is_below_polynomial(b in -6i64..6, c in 1i64..6, lo in -5i64..5) {
            let r = P::new(vec![rat(b * b + c), rat(2 * b), rat(1)]);
            let iv = Interval::at_least(rat(lo));
            let eps = certify_positive_lower_bound(&r, &iv).unwrap();
            prop_assert!(eps > rat(0));
            prop_assert_eq!(sturm_count_roots(&(&r - &P::constant(eps.clone())), &iv).unwrap(), 0);
            prop_assert!(r.eval(&iv.sample()) >= eps);
        }
    }
}
