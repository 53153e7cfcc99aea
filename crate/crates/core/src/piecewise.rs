//! Piecewise rational functions with finitely many rational breakpoints.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational_fn::RationalFunction;
use crate::roots::Interval;
use crate::scalar::{ExactField, Scalar};

/// Breakpoints `h_1 < ... < h_k` and `k + 1` pieces. Piece `i` governs the
/// half-open interval `(h_i, h_{i+1}]`, with `h_0 = -inf` and the last
/// piece running to `+inf`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PiecewiseRational<T> {
    breakpoints: Vec<T>,
    pieces: Vec<RationalFunction<T>>,
}

impl<T: Scalar> PiecewiseRational<T> {
    /// Checks only the shape: piece count and strictly increasing
    /// breakpoints. Continuity and poles are the caller's business.
    pub fn new(breakpoints: Vec<T>, pieces: Vec<RationalFunction<T>>) -> Result<Self> {
        if pieces.len() != breakpoints.len() + 1 {
            return Err(Error::MalformedPiecewise(format!(
                "{} breakpoints need {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len() + 1,
                pieces.len()
            )));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::MalformedPiecewise("breakpoints must be strictly increasing".into()));
        }
        Ok(PiecewiseRational { breakpoints, pieces })
    }

    pub fn single(f: RationalFunction<T>) -> Self {
        PiecewiseRational {
            breakpoints: Vec::new(),
            pieces: vec![f],
        }
    }

    pub fn breakpoints(&self) -> &[T] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[RationalFunction<T>] {
        &self.pieces
    }

    /// Index of the piece governing `z`.
    pub fn piece_index(&self, z: &T) -> usize {
        self.breakpoints.iter().take_while(|h| *h < z).count()
    }

    /// Value at `z` by the governing piece; `None` at a pole.
    pub fn eval(&self, z: &T) -> Option<T> {
        self.pieces[self.piece_index(z)].eval(z)
    }

    /// Finite ends of piece `k`'s interval; `None` where it is infinite.
    pub fn piece_bounds(&self, k: usize) -> (Option<&T>, Option<&T>) {
        let lo = k.checked_sub(1).map(|i| &self.breakpoints[i]);
        (lo, self.breakpoints.get(k))
    }

    pub fn neg(&self) -> Self {
        PiecewiseRational {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(RationalFunction::neg).collect(),
        }
    }

    /// Joins neighbouring pieces that are the same function.
    pub fn simplified(&self) -> Self {
        let mut breakpoints = Vec::new();
        let mut pieces = vec![self.pieces[0].clone()];
        for (h, f) in self.breakpoints.iter().zip(&self.pieces[1..]) {
            if pieces.last() != Some(f) {
                breakpoints.push(h.clone());
                pieces.push(f.clone());
            }
        }
        PiecewiseRational { breakpoints, pieces }
    }
}

impl<T: ExactField> PiecewiseRational<T> {
    /// Closure of piece `k`'s interval.
    pub fn piece_interval(&self, k: usize) -> Interval<T> {
        let (lo, hi) = self.piece_bounds(k);
        Interval {
            lo: lo.cloned(),
            hi: hi.cloned(),
        }
    }
}

impl<T: Scalar> From<Polynomial<T>> for PiecewiseRational<T> {
    fn from(p: Polynomial<T>) -> Self {
        Self::single(RationalFunction::from_poly(p))
    }
}

impl<T: Scalar> fmt::Display for PiecewiseRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, piece) in self.pieces.iter().enumerate() {
            let lo = k.checked_sub(1).map(|i| self.breakpoints[i].to_string());
            let hi = self.breakpoints.get(k).map(ToString::to_string);
            if k > 0 {
                write!(f, "; ")?;
            }
            write!(
                f,
                "{piece} on ({}, {}{}",
                lo.as_deref().unwrap_or("-inf"),
                hi.as_deref().unwrap_or("+inf"),
                if hi.is_some() { "]" } else { ")" }
            )?;
        }
        Ok(())
    }
}
