use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::roabp::Roabp;

/// Largest coefficient table [`expand_dense`] will allocate.
pub const DENSE_LIMIT: u128 = 1_000_000;

/// All `n^D` coefficients of a polynomial with individual degree `< n`.
/// The exponent vector `e` lives at `sum_i e_i n^i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseTable {
    n: usize,
    vars: usize,
    coeffs: Vec<u64>,
}

impl DenseTable {
    pub fn zero(n: usize, vars: usize) -> Result<Self> {
        let size = table_size(n, vars)?;
        Ok(Self {
            n,
            vars,
            coeffs: vec![0; size],
        })
    }

    pub fn degree_bound(&self) -> usize {
        self.n
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn index(&self, exps: &[usize]) -> Option<usize> {
        if exps.len() != self.vars || exps.iter().any(|&e| e >= self.n) {
            return None;
        }
        Some(exps.iter().rev().fold(0, |acc, &e| acc * self.n + e))
    }

    /// Coefficient of `prod_i x_i^{exps[i]}`; zero outside the table.
    pub fn coeff(&self, exps: &[usize]) -> u64 {
        self.index(exps).map_or(0, |i| self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn exponents(&self, mut idx: usize) -> Vec<usize> {
        (0..self.vars)
            .map(|_| {
                let e = idx % self.n;
                idx /= self.n;
                e
            })
            .collect()
    }

    /// Nonzero coefficients keyed by exponent vector.
    pub fn terms(&self) -> BTreeMap<Vec<usize>, u64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.exponents(i), c))
            .collect()
    }

    pub fn eval(&self, f: &Field, point: &[u64]) -> Result<u64> {
        if point.len() != self.vars {
            return Err(Error::ArityMismatch {
                expected: self.vars,
                got: point.len(),
            });
        }
        let mut total = 0;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mono = self
                .exponents(i)
                .iter()
                .zip(point)
                .fold(1, |acc, (&e, &x)| f.mul(acc, f.pow(x, e as u64)));
            total = f.mul_add(c, mono, total);
        }
        Ok(total)
    }
}

fn table_size(n: usize, vars: usize) -> Result<usize> {
    let mut size: u128 = 1;
    for _ in 0..vars {
        size = size.saturating_mul(n as u128);
        if size > DENSE_LIMIT {
            return Err(Error::TooLarge(
                (n as u128).checked_pow(vars as u32).unwrap_or(u128::MAX),
            ));
        }
    }
    Ok(size as usize)
}

/// Symbolic layer-by-layer multiplication of the first row.
pub fn expand_dense(a: &Roabp) -> Result<DenseTable> {
    let f = a.field();
    let n = a.degree();
    let w = a.width();
    table_size(n, a.depth())?;
    // row[u] is the coefficient table of (prod of layers so far)_{0,u}
    let mut row: Vec<Vec<u64>> = vec![vec![0]; w];
    row[0][0] = 1;
    let mut stride = 1;
    for layer in a.layers() {
        let mut next = vec![vec![0u64; stride * n]; w];
        for (u, table) in row.iter().enumerate() {
            if table.iter().all(|&c| c == 0) {
                continue;
            }
            for (v, out) in next.iter_mut().enumerate() {
                for (j, &c) in layer.get(u, v).coeffs().iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let dst = &mut out[j * stride..(j + 1) * stride];
                    for (o, &t) in dst.iter_mut().zip(table) {
                        *o = f.mul_add(t, c, *o);
                    }
                }
            }
        }
        row = next;
        stride *= n;
    }
    Ok(DenseTable {
        n,
        vars: a.depth(),
        coeffs: row.swap_remove(0),
    })
}
