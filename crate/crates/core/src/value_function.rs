//! Symbolic value functions of polynomial games.
//!
//! Every value of a matrix game is `det(S) / sum of cofactors of S` for
//! some square submatrix `S` (a Shapley-Snow kernel). Between consecutive
//! real points where two such candidates meet or a candidate has a pole,
//! the value coincides with a single candidate, which is identified by
//! exact LP solves at enough sample points.

use crate::error::{Error, Result};
use crate::game::PolynomialGame;
use crate::piecewise::PiecewiseRational;
use crate::poly::Polynomial;
use crate::rational_fn::RationalFunction;
use crate::roots::{decompose, Interval};
use crate::scalar::{ExactField, Rat};

/// Default cap on the number of square submatrices enumerated.
pub const DEFAULT_KERNEL_BUDGET: u64 = 50_000;

/// Number of square submatrices of an `m x n` matrix, saturating.
pub fn kernel_count(m: usize, n: usize) -> u128 {
    let mut total: u128 = 0;
    for k in 1..=m.min(n) {
        let c = binomial(m, k).saturating_mul(binomial(n, k));
        total = total.saturating_add(c);
    }
    total
}

fn binomial(n: usize, k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k {
        c = match c.checked_mul((n - i) as u128) {
            Some(x) => x / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    c
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn poly_det<T: ExactField>(mut m: Vec<Vec<Polynomial<T>>>) -> Polynomial<T> {
    let n = m.len();
    if n == 0 {
        return Polynomial::one();
    }
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return Polynomial::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                let (q, r) = num.div_rem(&prev);
                debug_assert!(r.is_zero(), "Bareiss division is exact");
                m[i][j] = q;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Distinct kernel candidates `det(S) / cofactor_sum(S)` over all square
/// submatrices `S` with a nonzero cofactor sum. The cofactor sum is
/// `det(S + J) - det(S)` with `J` the all-ones matrix.
pub fn kernel_candidates<T: ExactField>(g: &PolynomialGame<T>, budget: u64) -> Result<Vec<RationalFunction<T>>> {
    let needed = kernel_count(g.rows(), g.cols());
    if needed > u128::from(budget) {
        return Err(Error::TooLarge { needed, budget });
    }
    let mut out: Vec<RationalFunction<T>> = Vec::new();
    for k in 1..=g.rows().min(g.cols()) {
        let row_sets = combinations(g.rows(), k);
        let col_sets = combinations(g.cols(), k);
        for rs in &row_sets {
            for cs in &col_sets {
                let s: Vec<Vec<Polynomial<T>>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| g.entry(i, j).clone()).collect())
                    .collect();
                let shifted = s
                    .iter()
                    .map(|row| row.iter().map(|p| p + &Polynomial::one()).collect())
                    .collect();
                let det = poly_det(s);
                let cofactors = &poly_det(shifted) - &det;
                if cofactors.is_zero() {
                    continue;
                }
                let f = RationalFunction::new(det, cofactors).expect("nonzero denominator");
                if !out.contains(&f) {
                    out.push(f);
                }
            }
        }
    }
    Ok(out)
}

/// Exact value function of `g` on the whole real line.
pub fn value_function(g: &PolynomialGame<Rat>) -> Result<PiecewiseRational<Rat>> {
    value_function_with_budget(g, DEFAULT_KERNEL_BUDGET)
}

pub fn value_function_with_budget(g: &PolynomialGame<Rat>, budget: u64) -> Result<PiecewiseRational<Rat>> {
    let candidates = kernel_candidates(g, budget)?;
    let mut family: Vec<Polynomial<Rat>> = Vec::new();
    for (i, a) in candidates.iter().enumerate() {
        family.push(a.den().clone());
        for b in &candidates[i + 1..] {
            family.push(&(a.num() * b.den()) - &(b.num() * a.den()));
        }
    }
    family.retain(|p| !p.is_constant());
    let d = decompose(&family, &Interval::all());

    let agreement = candidates
        .iter()
        .map(|f| {
            let (n, m) = f.degrees();
            n + m + 1
        })
        .max()
        .unwrap_or(1);
    let mut chosen: Vec<RationalFunction<Rat>> = Vec::with_capacity(d.cells.len());
    for i in 0..d.cells.len() {
        let points = d.cell_points(i, agreement);
        let values: Vec<Rat> = points.iter().map(|z| g.value_at(z)).collect();
        let hit = candidates
            .iter()
            .find(|f| points.iter().zip(&values).all(|(z, v)| f.eval(z).as_ref() == Some(v)))
            .ok_or(Error::NoConsistentFit)?;
        chosen.push(hit.clone());
    }

    // consecutive cells share the point between them; keep it only where
    // the governing candidate changes
    let mut breakpoints = Vec::new();
    let mut pieces = vec![chosen[0].clone()];
    for (i, f) in chosen.iter().enumerate().skip(1) {
        if pieces.last() == Some(f) {
            continue;
        }
        let point = &d.points[d.cells[i].left.expect("interior cell")];
        let Some(h) = point.rational_value() else {
            return Err(Error::IrrationalBreakpoint {
                lo: point.lo.clone(),
                hi: point.hi.clone(),
            });
        };
        breakpoints.push(h);
        pieces.push(f.clone());
    }
    PiecewiseRational::new(breakpoints, pieces)
}
