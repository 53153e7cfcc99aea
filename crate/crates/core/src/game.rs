//! Polynomial games: finite zero-sum games whose payoffs are polynomials
//! in a real parameter `Z`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix_game::{solve_matrix_game, Matrix};
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Payoff matrix of polynomials, row player maximizing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolynomialGame<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<T>>,
    provenance: Option<String>,
}

impl<T: Scalar> PolynomialGame<T> {
    pub fn new(rows: Vec<Vec<Polynomial<T>>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: "non-empty rectangular payoff matrix".into(),
                found: format!("row lengths {:?}", rows.iter().map(Vec::len).collect::<Vec<_>>()),
            });
        }
        Ok(PolynomialGame {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
            provenance: None,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Polynomial<T>) -> Self {
        assert!(rows > 0 && cols > 0, "games need at least one strategy per player");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        PolynomialGame {
            rows,
            cols,
            entries,
            provenance: None,
        }
    }

    /// Game with integer coefficient lists, lowest degree first.
    pub fn from_ints(rows: &[&[&[i64]]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|c| Polynomial::from_ints(c)).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial<T> {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Polynomial<T>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn max_degree(&self) -> usize {
        self.entries.iter().map(Polynomial::degree_or_zero).max().unwrap_or(0)
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn with_provenance(mut self, label: impl Into<String>) -> Self {
        self.provenance = Some(label.into());
        self
    }

    /// Payoffs at `Z = z`.
    pub fn eval_at(&self, z: &T) -> Matrix<T> {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.entry(i, j).eval(z))
    }

    /// Value of the game at `Z = z`.
    pub fn value_at(&self, z: &T) -> T {
        solve_matrix_game(&self.eval_at(z)).value
    }

    /// `count` evenly spaced points of `[lo, hi]` with the value at each.
    pub fn sample(&self, lo: &T, hi: &T, count: usize) -> Result<Vec<(T, T)>> {
        if lo >= hi || count < 2 {
            return Err(Error::BadRange);
        }
        let steps = T::from_int(count as i64 - 1);
        let width = hi.clone() - lo;
        Ok((0..count)
            .map(|k| {
                let z = lo.clone() + &(width.clone() * &T::from_int(k as i64) / &steps);
                let v = self.value_at(&z);
                (z, v)
            })
            .collect())
    }

    /// Drops repeated rows and columns until none remain. A repeated
    /// strategy never changes the value.
    pub fn dedup(self) -> Self {
        let mut g = self;
        loop {
            let keep_rows = first_occurrences((0..g.rows).map(|i| g.row(i).to_vec()));
            let cols: Vec<Vec<Polynomial<T>>> = (0..g.cols)
                .map(|j| (0..g.rows).map(|i| g.entry(i, j).clone()).collect())
                .collect();
            let keep_cols = first_occurrences(cols.into_iter());
            if keep_rows.len() == g.rows && keep_cols.len() == g.cols {
                return g;
            }
            let next = PolynomialGame::from_fn(keep_rows.len(), keep_cols.len(), |i, j| {
                g.entry(keep_rows[i], keep_cols[j]).clone()
            });
            g = PolynomialGame {
                provenance: g.provenance.take(),
                ..next
            };
        }
    }
}

fn first_occurrences<K: PartialEq>(items: impl Iterator<Item = K>) -> Vec<usize> {
    let mut seen: Vec<K> = Vec::new();
    let mut keep = Vec::new();
    for (i, item) in items.enumerate() {
        if !seen.contains(&item) {
            seen.push(item);
            keep.push(i);
        }
    }
    keep
}

impl<T: Scalar> fmt::Display for PolynomialGame<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
