//! Two-player zero-sum matrix games with exact payoffs.
//!
//! The row player maximizes. Values are computed with the classical LP
//! reduction: shift the payoffs so every entry is at least 1, then solve
//!
//! ```text
//! maximize  sum(y)   subject to  A y <= 1,  y >= 0
//! ```
//!
//! with a dense tableau simplex. The column strategy is read off the primal
//! optimum, the row strategy off the duals of the slack columns.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix with at least one row and one column.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: "non-empty rectangular matrix".into(),
                found: format!("row lengths {:?}", rows.iter().map(Vec::len).collect::<Vec<_>>()),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        assert!(rows > 0 && cols > 0);
        let data = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| T::from_int(x)).collect())
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

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    fn min_entry(&self) -> T {
        self.data
            .iter()
            .skip(1)
            .fold(self.data[0].clone(), |m, x| if *x < m { x.clone() } else { m })
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Value and one optimal pair of mixed strategies.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GameSolution<T> {
    pub value: T,
    pub row_strategy: Vec<T>,
    pub col_strategy: Vec<T>,
}

/// Solves the game exactly. Bland's rule (lowest index enters, lowest
/// basic index leaves on ratio ties) guarantees termination.
pub fn solve_matrix_game<T: Scalar>(g: &Matrix<T>) -> GameSolution<T> {
    let (m, n) = (g.rows, g.cols);
    let shift = T::one() - &g.min_entry();
    let width = n + m;
    // tableau rows: [A + shift | I | 1]
    let mut tab: Vec<Vec<T>> = (0..m)
        .map(|i| {
            let mut row = Vec::with_capacity(width + 1);
            row.extend(g.row(i).iter().map(|x| x.clone() + &shift));
            row.extend((0..m).map(|k| if k == i { T::one() } else { T::zero() }));
            row.push(T::one());
            row
        })
        .collect();
    // reduced costs c_j - z_j; objective value accumulates in the last slot
    let mut cost: Vec<T> = (0..=width)
        .map(|j| if j < n { T::one() } else { T::zero() })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    let tol = T::tolerance();

    while let Some(enter) = (0..width).find(|&j| cost[j] > tol) {
        let mut leave: Option<(usize, T)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter] <= tol {
                continue;
            }
            let ratio = row[width].clone() / &row[enter];
            let better = match &leave {
                None => true,
                Some((k, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*k]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // columns of a strictly positive matrix always have a positive entry
        let (r, _) = leave.expect("value LP is bounded");
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }

    let total = -cost[width].clone();
    let mut col_strategy = vec![T::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            col_strategy[b] = tab[i][width].clone() / &total;
        }
    }
    let row_strategy = (0..m).map(|i| -cost[n + i].clone() / &total).collect();
    GameSolution {
        value: T::one() / &total - &shift,
        row_strategy,
        col_strategy,
    }
}

fn pivot<T: Scalar>(tab: &mut [Vec<T>], cost: &mut [T], r: usize, c: usize) {
    let inv = T::one() / &tab[r][c];
    for x in tab[r].iter_mut() {
        if !x.is_zero() {
            *x = x.clone() * &inv;
        }
    }
    let pivot_row = tab[r].clone();
    let eliminate = |row: &mut [T]| {
        let factor = row[c].clone();
        if factor.is_zero() {
            return;
        }
        for (x, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *x = x.clone() - &(factor.clone() * p);
            }
        }
    };
    for (i, row) in tab.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    eliminate(cost);
}

/// Checks that `s` is an exact optimal solution of `g`: both strategies are
/// probability vectors, the row strategy guarantees at least `value`
/// against every column and the column strategy at most `value` against
/// every row.
pub fn verify_solution<T: Scalar>(g: &Matrix<T>, s: &GameSolution<T>) -> Result<bool> {
    if s.row_strategy.len() != g.rows || s.col_strategy.len() != g.cols {
        return Err(Error::DimensionMismatch {
            expected: format!("{}x{}", g.rows, g.cols),
            found: format!("{}x{}", s.row_strategy.len(), s.col_strategy.len()),
        });
    }
    let is_distribution = |p: &[T]| {
        p.iter().all(|x| !x.is_negative())
            && p.iter().fold(T::zero(), |acc, x| acc + x) == T::one()
    };
    if !is_distribution(&s.row_strategy) || !is_distribution(&s.col_strategy) {
        return Ok(false);
    }
    let guarantees = (0..g.cols).all(|j| {
        let payoff = (0..g.rows).fold(T::zero(), |acc, i| acc + &(s.row_strategy[i].clone() * g.get(i, j)));
        payoff >= s.value
    });
    let limits = (0..g.rows).all(|i| {
        let payoff = (0..g.cols).fold(T::zero(), |acc, j| acc + &(s.col_strategy[j].clone() * g.get(i, j)));
        payoff <= s.value
    });
    Ok(guarantees && limits)
}
