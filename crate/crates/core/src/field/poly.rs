use super::Field;

/// Dense univariate polynomial; `coeffs[j]` is the coefficient of `x^j`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<u64>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(f: &Field, c: u64) -> Self {
        Self::from_coeffs(f, vec![c])
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    /// `c * x^deg`.
    pub fn monomial(f: &Field, c: u64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(f, coeffs)
    }

    /// Reduces every coefficient mod `p` and trims.
    pub fn from_coeffs(f: &Field, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c = f.elem(*c);
        }
        Self::trimmed(coeffs)
    }

    pub fn from_signed(f: &Field, coeffs: &[i64]) -> Self {
        Self::trimmed(coeffs.iter().map(|&c| f.from_i64(c)).collect())
    }

    fn trimmed(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> u64 {
        self.coeffs.get(j).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (degree + 1, or 0).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Horner evaluation.
    pub fn eval(&self, f: &Field, a: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.mul_add(acc, a, c))
    }

    pub fn add(&self, f: &Field, other: &Self) -> Self {
        let n = self.len().max(other.len());
        Self::trimmed(
            (0..n)
                .map(|j| f.add(self.coeff(j), other.coeff(j)))
                .collect(),
        )
    }

    pub fn sub(&self, f: &Field, other: &Self) -> Self {
        let n = self.len().max(other.len());
        Self::trimmed(
            (0..n)
                .map(|j| f.sub(self.coeff(j), other.coeff(j)))
                .collect(),
        )
    }

    pub fn neg(&self, f: &Field) -> Self {
        Self::trimmed(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, f: &Field, c: u64) -> Self {
        Self::trimmed(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, f: &Field, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0; self.len() + other.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.mul_add(a, b, out[i + j]);
            }
        }
        Self::trimmed(out)
    }

    pub fn pow(&self, f: &Field, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }

    /// `self(inner(t))`, by Horner over polynomials.
    pub fn compose(&self, f: &Field, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, &c| {
            acc.mul(f, inner).add(f, &Self::constant(f, c))
        })
    }

    /// `self(c * t^k)`: rescales and spreads the coefficients without a
    /// general composition.
    pub fn compose_scaled_power(&self, f: &Field, c: u64, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0; (self.len() - 1) * k + 1];
        let mut cj = 1;
        for (j, &a) in self.coeffs.iter().enumerate() {
            out[j * k] = f.mul(a, cj);
            cj = f.mul(cj, c);
        }
        Self::trimmed(out)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }
}
