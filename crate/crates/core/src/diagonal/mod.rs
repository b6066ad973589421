//! Diagonal and semi-diagonal depth-4 circuits
//! `sum_i m_i(x) prod_j P_{i,j}(x)^{e_{i,j}}` with every `P_{i,j}` a sum of
//! univariates, and their reduction to ROABPs over any characteristic.

mod dual;
mod pit;
mod text;

pub use dual::{diagonal_to_roabp, dual_roabp_of_term};
pub use pit::{blackbox_pit_diagonal, DiagShape};

use crate::error::{Error, Result};
use crate::field::{Field, UniPoly};

/// `P(x) = sum_m g_m(x_m)` raised to `exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub exponent: u64,
    /// `summands[m] = g_m`, one per variable.
    pub summands: Vec<UniPoly>,
}

impl Factor {
    pub fn new(exponent: u64, summands: Vec<UniPoly>) -> Self {
        Self { exponent, summands }
    }

    /// `max_m deg g_m`, zero for a constant factor.
    pub fn degree(&self) -> usize {
        self.summands
            .iter()
            .filter_map(UniPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// `true` when every summand is zero, so `P = 0`.
    pub fn is_zero(&self) -> bool {
        self.summands.iter().all(UniPoly::is_zero)
    }

    pub fn eval_base(&self, f: &Field, point: &[u64]) -> u64 {
        self.summands
            .iter()
            .zip(point)
            .fold(0, |acc, (g, &x)| f.add(acc, g.eval(f, x)))
    }
}

/// One summand `m(x) prod_j P_j^{e_j}`; the monomial is `prod_m x_m^{c_m}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Term {
    pub monomial: Option<Vec<u64>>,
    pub factors: Vec<Factor>,
}

impl Term {
    pub fn new(monomial: Option<Vec<u64>>, factors: Vec<Factor>) -> Self {
        Self { monomial, factors }
    }

    pub fn monomial(&self) -> Option<&[u64]> {
        self.monomial.as_deref()
    }

    /// `|e|_x = prod_j (1 + e_j)`, saturating.
    pub fn mult_size(&self) -> u128 {
        self.factors.iter().fold(1u128, |acc, fa| {
            acc.saturating_mul(u128::from(fa.exponent) + 1)
        })
    }

    /// `sdeg = sum_j e_j deg P_j`.
    pub fn sdeg(&self) -> u128 {
        self.factors
            .iter()
            .map(|fa| u128::from(fa.exponent) * fa.degree() as u128)
            .sum()
    }

    pub fn monomial_degree(&self) -> u64 {
        self.monomial().map_or(0, |c| c.iter().sum())
    }

    pub fn eval(&self, f: &Field, point: &[u64]) -> u64 {
        let mono = self.monomial().map_or(1, |c| {
            c.iter()
                .zip(point)
                .fold(1, |acc, (&e, &x)| f.mul(acc, f.pow(x, e)))
        });
        self.factors.iter().fold(mono, |acc, fa| {
            f.mul(acc, f.pow(fa.eval_base(f, point), fa.exponent))
        })
    }
}

/// Base-`p` digits of the exponents of one term, factor by factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitVector {
    pub digits: Vec<Vec<u64>>,
}

impl DigitVector {
    pub fn of(term: &Term, p: u64) -> Self {
        Self {
            digits: term
                .factors
                .iter()
                .map(|fa| base_p_digits(fa.exponent, Some(p)))
                .collect(),
        }
    }

    /// `|a|_x = prod_{j,k} (1 + a_{j,k})`.
    pub fn mult_size(&self) -> u128 {
        self.digits
            .iter()
            .flatten()
            .fold(1u128, |acc, &a| acc.saturating_mul(u128::from(a) + 1))
    }

    /// `(j, k, a_{j,k})` for every nonzero digit.
    pub fn nonzero(&self) -> Vec<(usize, u32, u64)> {
        let mut out = Vec::new();
        for (j, ds) in self.digits.iter().enumerate() {
            for (k, &a) in ds.iter().enumerate() {
                if a != 0 {
                    out.push((j, k as u32, a));
                }
            }
        }
        out
    }
}

/// Digits of `e` in base `p`, least significant first; `p = None` means
/// characteristic zero and yields `[e]`.
pub fn base_p_digits(e: u64, p: Option<u64>) -> Vec<u64> {
    let Some(p) = p else {
        return vec![e];
    };
    if e == 0 {
        return vec![0];
    }
    let mut rest = e;
    let mut out = Vec::new();
    while rest > 0 {
        out.push(rest % p);
        rest /= p;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalCircuit {
    field: Field,
    nvars: usize,
    terms: Vec<Term>,
}

impl DiagonalCircuit {
    /// Pads every factor to `nvars` summands and reduces coefficients.
    pub fn new(field: Field, nvars: usize, terms: Vec<Term>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::InvalidArgument(
                "a circuit needs at least one variable".into(),
            ));
        }
        let mut terms = terms;
        for t in terms.iter_mut() {
            if let Some(c) = t.monomial() {
                if c.len() != nvars {
                    return Err(Error::ArityMismatch {
                        expected: nvars,
                        got: c.len(),
                    });
                }
            }
            for fa in t.factors.iter_mut() {
                if fa.summands.len() > nvars {
                    return Err(Error::ArityMismatch {
                        expected: nvars,
                        got: fa.summands.len(),
                    });
                }
                fa.summands.resize(nvars, UniPoly::zero());
                for g in fa.summands.iter_mut() {
                    *g = UniPoly::from_coeffs(&field, g.coeffs().to_vec());
                }
            }
        }
        Ok(Self {
            field,
            nvars,
            terms,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_semi_diagonal(&self) -> bool {
        self.terms.iter().any(|t| t.monomial().is_some())
    }

    /// `max_i |e_i|_x`, 1 for the empty circuit.
    pub fn max_mult_size(&self) -> u128 {
        self.terms.iter().map(Term::mult_size).max().unwrap_or(1)
    }

    /// Largest summand degree or monomial degree.
    pub fn degree(&self) -> u64 {
        self.terms
            .iter()
            .flat_map(|t| {
                t.factors
                    .iter()
                    .map(|fa| fa.degree() as u64)
                    .chain([t.monomial_degree()])
            })
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, point: &[u64]) -> Result<u64> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let f = &self.field;
        let pt: Vec<u64> = point.iter().map(|&x| f.elem(x)).collect();
        Ok(self
            .terms
            .iter()
            .fold(0, |acc, t| f.add(acc, t.eval(f, &pt))))
    }

    /// Renames `x_m` to `x_{perm[m]}`.
    pub fn rename(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        let move_all = |src: &[UniPoly]| {
            let mut dst = vec![UniPoly::zero(); src.len()];
            for (m, g) in src.iter().enumerate() {
                dst[perm[m]] = g.clone();
            }
            dst
        };
        for t in out.terms.iter_mut() {
            if let Some(c) = &t.monomial {
                let mut moved = vec![0; c.len()];
                for (m, &e) in c.iter().enumerate() {
                    moved[perm[m]] = e;
                }
                t.monomial = Some(moved);
            }
            for fa in t.factors.iter_mut() {
                fa.summands = move_all(&fa.summands);
            }
        }
        out
    }
}

/// Direct evaluation of `sum_i m_i(x) prod_j P_{i,j}(x)^{e_{i,j}}`.
pub fn eval_diagonal(c: &DiagonalCircuit, point: &[u64]) -> Result<u64> {
    c.eval(point)
}
