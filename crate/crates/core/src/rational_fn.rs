use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Reduced quotient `num / den` of two polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, `den` has positive leading
/// coefficient, and the zero function is `0 / 1`. Structural equality is
/// therefore equality of functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction<T> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num.div_rem(&g).0, den.div_rem(&g).0);
        // make den monic; the overall scale lives in num
        let lead = den.leading_coeff();
        if !lead.is_one() {
            let inv = T::one() / &lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// `None` where the denominator vanishes.
    pub fn eval(&self, z: &T) -> Option<T> {
        let d = self.den.eval(z);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(z) / &d)
        }
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        Self::new(num, &self.den * &other.den).expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator unchanged")
    }

    /// `None` for the zero function.
    pub fn recip(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
        }
    }

    /// Equality decided by the cross-multiplied identity `a*d == c*b`.
    pub fn same_function(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// Numerator of `self - p`, the polynomial whose roots are where the
    /// function meets `p` (off the poles).
    pub fn numerator_minus(&self, p: &Polynomial<T>) -> Polynomial<T> {
        &self.num - &(p * &self.den)
    }

    /// `(deg num, deg den)` with zero mapped to 0.
    pub fn degrees(&self) -> (usize, usize) {
        (self.num.degree_or_zero(), self.den.degree_or_zero())
    }
}

impl<T: Scalar> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<T: Scalar> From<Polynomial<T>> for RationalFunction<T> {
    fn from(p: Polynomial<T>) -> Self {
        Self::from_poly(p)
    }
}

impl<T: Scalar> Zero for RationalFunction<T> {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<T: Scalar> std::ops::Add for RationalFunction<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        RationalFunction::add(&self, &rhs)
    }
}
