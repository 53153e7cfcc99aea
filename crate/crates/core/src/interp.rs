//! Cauchy interpolation: recover `N / D` with `deg N <= n`, `deg D <= d`
//! from point samples by solving the homogeneous system
//! `N(x_i) - y_i D(x_i) = 0` exactly.


use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational_fn::RationalFunction;
use crate::scalar::ExactField;

pub fn rational_fn_interpolate<T: ExactField>(
    samples: &[(T, T)],
    num_degree_bound: usize,
    den_degree_bound: usize,
) -> Result<RationalFunction<T>> {
    let unknowns = num_degree_bound + den_degree_bound + 2;
    let rows: Vec<Vec<T>> = samples
        .iter()
        .map(|(x, y)| {
            let mut row = Vec::with_capacity(unknowns);
            let mut pow = T::one();
            for _ in 0..=num_degree_bound {
                row.push(pow.clone());
                pow = pow * x;
            }
            let mut pow = T::one();
            for _ in 0..=den_degree_bound {
                row.push(-(y.clone() * &pow));
                pow = pow * x;
            }
            row
        })
        .collect();

    let Some(v) = nullspace_vector(rows, unknowns) else {
        return Err(Error::NoConsistentFit);
    };
    let num = Polynomial::new(v[..=num_degree_bound].to_vec());
    let den = Polynomial::new(v[num_degree_bound + 1..].to_vec());
    let f = RationalFunction::new(num, den).map_err(|_| Error::NoConsistentFit)?;
    if samples.iter().all(|(x, y)| f.eval(x).as_ref() == Some(y)) {
        Ok(f)
    } else {
        Err(Error::NoConsistentFit)
    }
}

/// Some nonzero solution of `A v = 0`, if the kernel is nontrivial.
fn nullspace_vector<T: ExactField>(mut a: Vec<Vec<T>>, cols: usize) -> Option<Vec<T>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = T::one() / &a[row][col];
        for x in a[row].iter_mut() {
            *x = x.clone() * &inv;
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let factor = a[r][col].clone();
                for c in 0..cols {
                    let delta = factor.clone() * &a[row][c];
                    a[r][c] = a[r][c].clone() - &delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut v = vec![T::zero(); cols];
    v[free] = T::one();
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = -a[r][free].clone();
    }
    Some(v)
}
