//! Non-commutative polynomials and branching programs, and their reduction
//! to set-multilinear commutative ones through staircase matrices.
//!
//! A word `x_{i_1} x_{i_2} .. x_{i_l}` is mapped by [`phi`] to the commutative
//! monomial `x_{i_1,1} x_{i_2,2} .. x_{i_l,l}`. Substituting the staircase
//! matrices `X_{i,D}` for the variables puts `phi(hom_l f)` into entry
//! `(0, l)` of the result, so identity testing over `(D+1) x (D+1)` matrices
//! reduces to the set-multilinear case.

mod abp;
mod hitting;
mod text;

pub use abp::{Affine, NcAbp};
pub use hitting::{
    blackbox_pit_ncabp, blackbox_pit_ncabp_with, nc_field_bound, NcHittingSet, NcShape,
};

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;

/// A word over `x_0, .., x_{n-1}`, read left to right.
pub type Word = Vec<usize>;

/// Sparse non-commutative polynomial keyed by words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Word, u64>,
}

impl NcPoly {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: Field, nvars: usize, c: u64) -> Self {
        let mut p = Self::zero(field, nvars);
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(field: Field, nvars: usize, i: usize) -> Result<Self> {
        Self::from_terms(field, nvars, [(vec![i], 1)])
    }

    /// Sums the given terms; signed coefficients are reduced mod `p`.
    pub fn from_terms(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Word, i64)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, nvars);
        for (w, c) in terms {
            if let Some(&bad) = w.iter().find(|&&i| i >= nvars) {
                return Err(Error::InvalidArgument(format!(
                    "variable x_{bad} outside x_0..x_{}",
                    nvars.saturating_sub(1)
                )));
            }
            p.add_term(w, field.from_i64(c));
        }
        Ok(p)
    }

    pub fn add_term(&mut self, word: Word, c: u64) {
        let f = self.field;
        let c = f.elem(c);
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(word).or_insert(0);
        *slot = f.add(*slot, c);
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Word, u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Longest word length; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// Homogeneous component of degree `l`.
    pub fn hom(&self, l: usize) -> Self {
        Self {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == l)
                .map(|(w, &c)| (w.clone(), c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        let mut out = Self::zero(f, self.nvars);
        for (w, &v) in &self.terms {
            out.add_term(w.clone(), f.mul(v, c));
        }
        out
    }

    /// Product in word order: `(self * other)` concatenates `self`'s words
    /// on the left.
    pub fn mul(&self, other: &Self) -> Self {
        let f = self.field;
        let mut out = Self::zero(f, self.nvars.max(other.nvars));
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let mut w = a.clone();
                w.extend(b);
                out.add_term(w, f.mul(ca, cb));
            }
        }
        out
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn rename(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        for (w, &c) in &self.terms {
            out.add_term(w.iter().map(|&i| perm[i]).collect(), c);
        }
        out
    }

    /// Substitutes square matrices of one common size for the variables.
    pub fn eval_matrices(&self, xs: &[Mat]) -> Result<Mat> {
        let dim = check_matrices(xs, self.nvars)?;
        let f = &self.field;
        let mut total = Mat::zeros(dim, dim);
        for (w, &c) in &self.terms {
            let prod = w
                .iter()
                .fold(Mat::identity(dim), |acc, &i| acc.mul(f, &xs[i]));
            total.add_scaled(f, c, &prod);
        }
        Ok(total)
    }
}

impl std::fmt::Display for NcPoly {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        for (k, (w, &c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(out, " + ")?;
            }
            write!(out, "{}", self.field.to_signed(c))?;
            for i in w {
                write!(out, "*x{i}")?;
            }
        }
        Ok(())
    }
}

/// Returns the common dimension after checking count and squareness.
pub(crate) fn check_matrices(xs: &[Mat], nvars: usize) -> Result<usize> {
    if xs.len() != nvars {
        return Err(Error::ArityMismatch {
            expected: nvars,
            got: xs.len(),
        });
    }
    let dim = xs.first().map_or(1, Mat::rows);
    for m in xs {
        if m.rows() != dim || m.cols() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: m.rows().max(m.cols()),
            });
        }
    }
    Ok(dim)
}

/// Set-multilinear commutative polynomial in the position-indexed variables
/// `x_{i,j}`. The key `[i_1, .., i_l]` stands for `x_{i_1,1} .. x_{i_l,l}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmPoly {
    field: Field,
    terms: BTreeMap<Vec<usize>, u64>,
}

impl SmPoly {
    pub fn from_terms(field: Field, terms: BTreeMap<Vec<usize>, u64>) -> Self {
        let terms = terms
            .into_iter()
            .map(|(k, c)| (k, field.elem(c)))
            .filter(|&(_, c)| c != 0)
            .collect();
        Self { field, terms }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials of this polynomial as sorted lists of `(i, j)` pairs.
    pub fn monomials(&self) -> Vec<(Vec<(usize, usize)>, u64)> {
        self.terms
            .iter()
            .map(|(k, &c)| (k.iter().enumerate().map(|(j, &i)| (i, j + 1)).collect(), c))
            .collect()
    }

    /// Value at the instantiation `inst`; positions beyond its depth fail.
    pub fn eval(&self, inst: &Staircase) -> Result<u64> {
        let f = &self.field;
        let mut total = 0;
        for (k, &c) in &self.terms {
            if k.len() > inst.depth() {
                return Err(Error::DegreeExceedsD {
                    degree: k.len(),
                    depth: inst.depth(),
                });
            }
            let mono = k
                .iter()
                .enumerate()
                .fold(1, |acc, (j, &i)| f.mul(acc, inst.value(i, j + 1)));
            total = f.mul_add(c, mono, total);
        }
        Ok(total)
    }
}

/// `x_{i_1} .. x_{i_l} -> x_{i_1,1} .. x_{i_l,l}`, extended linearly.
pub fn phi(f: &NcPoly) -> SmPoly {
    SmPoly::from_terms(f.field, f.terms.clone())
}

/// Field values for every `x_{i,j}`, `i < n`, `1 <= j <= D`, and the
/// staircase matrices they instantiate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Staircase {
    field: Field,
    nvars: usize,
    depth: usize,
    /// `values[i][j-1] = x_{i,j}`
    values: Vec<Vec<u64>>,
}

impl Staircase {
    pub fn new(field: Field, values: Vec<Vec<u64>>) -> Result<Self> {
        let nvars = values.len();
        let depth = values.first().map_or(0, Vec::len);
        if nvars == 0 {
            return Err(Error::InvalidArgument(
                "a staircase needs at least one variable".into(),
            ));
        }
        if let Some(bad) = values.iter().find(|v| v.len() != depth) {
            return Err(Error::DimensionMismatch {
                expected: depth,
                got: bad.len(),
            });
        }
        let values = values
            .into_iter()
            .map(|v| v.into_iter().map(|x| field.elem(x)).collect())
            .collect();
        Ok(Self {
            field,
            nvars,
            depth,
            values,
        })
    }

    /// Kronecker instantiation `x_{i,j} = y_{j-1}^i`, with `D = y.len()`.
    pub fn from_kronecker(field: Field, nvars: usize, y: &[u64]) -> Result<Self> {
        let values = (0..nvars)
            .map(|i| y.iter().map(|&v| field.pow(v, i as u64)).collect())
            .collect();
        Self::new(field, values)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    /// `x_{i,j}` with `1 <= j <= D`.
    pub fn value(&self, i: usize, j: usize) -> u64 {
        self.values[i][j - 1]
    }

    /// The symbolic entry `(k, l)` of `X_{i,D}`: `x_{i,l}` on the
    /// superdiagonal, zero elsewhere.
    pub fn symbol(&self, i: usize, k: usize, l: usize) -> Option<(usize, usize)> {
        (i < self.nvars && k + 1 == l && l <= self.depth).then_some((i, l))
    }

    /// The instantiated `(D+1) x (D+1)` matrix `X_{i,D}`.
    pub fn matrix(&self, i: usize) -> Mat {
        let n = self.depth + 1;
        let mut data = vec![0; n * n];
        for l in 1..=self.depth {
            data[(l - 1) * n + l] = self.value(i, l);
        }
        Mat::from_rows(n, n, data)
    }

    pub fn matrices(&self) -> Vec<Mat> {
        (0..self.nvars).map(|i| self.matrix(i)).collect()
    }
}

/// `f(X_{0,D}, .., X_{n-1,D})`; entry `(0,l)` equals `phi(hom_l f)` at `inst`.
pub fn staircase_eval(f: &NcPoly, inst: &Staircase) -> Result<Mat> {
    let degree = f.degree().unwrap_or(0);
    if degree > inst.depth() {
        return Err(Error::DegreeExceedsD {
            degree,
            depth: inst.depth(),
        });
    }
    f.eval_matrices(&inst.matrices())
}
