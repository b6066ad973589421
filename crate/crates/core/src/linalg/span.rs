use crate::error::{Error, Result};
use crate::field::Field;

/// Row space of a set of vectors in `F^m`, kept in reduced row-echelon form.
///
/// Rows are sorted by pivot column, every pivot is 1 and is the only nonzero
/// entry of its column. RREF is canonical, so two bases of the same space
/// have identical rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanBasis {
    field: Field,
    dim: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    pub fn new(field: Field, dim: usize) -> Self {
        Self {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(
        field: Field,
        dim: usize,
        vectors: impl IntoIterator<Item = &'a [u64]>,
    ) -> Result<Self> {
        let mut b = Self::new(field, dim);
        for v in vectors {
            b.insert(v)?;
        }
        Ok(b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_dim(&self, v: &[u64]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        Ok(())
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[u64]) -> Result<Vec<u64>> {
        self.check_dim(v)?;
        let f = &self.field;
        let mut w: Vec<u64> = v.iter().map(|&x| f.elem(x)).collect();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w[piv];
            if c == 0 {
                continue;
            }
            let c = f.neg(c);
            for (wi, &ri) in w.iter_mut().zip(row).skip(piv) {
                *wi = f.mul_add(c, ri, *wi);
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &[u64]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(|&x| x == 0))
    }

    /// Gaussian-elimination insert; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> Result<bool> {
        let mut w = self.reduce(v)?;
        let Some(piv) = w.iter().position(|&x| x != 0) else {
            return Ok(false);
        };
        let f = self.field;
        let inv = f.inv(w[piv])?;
        for x in w.iter_mut().skip(piv) {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c == 0 {
                continue;
            }
            let c = f.neg(c);
            for (ri, &wi) in row.iter_mut().zip(&w).skip(piv) {
                *ri = f.mul_add(c, wi, *ri);
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, w);
        Ok(true)
    }

    /// Mutual containment.
    pub fn span_equal(&self, other: &Self) -> Result<bool> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        if self.rank() != other.rank() {
            return Ok(false);
        }
        for row in &other.rows {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self` is a subspace of `other`.
    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::new(7).unwrap()
    }

    #[test]
    fn insert_examples() {
        let mut b = SpanBasis::new(f7(), 2);
        assert!(b.insert(&[1, 0]).unwrap());
        assert!(b.insert(&[0, 1]).unwrap());
        assert_eq!(b.rank(), 2);

        let mut b = SpanBasis::new(f7(), 2);
        assert!(b.insert(&[1, 1]).unwrap());
        assert!(!b.insert(&[2, 2]).unwrap());
        assert_eq!(b.rank(), 1);

        assert!(matches!(
            b.insert(&[1, 2, 3]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn equality_examples() {
        let f = f7();
        let a = SpanBasis::from_vectors(f, 2, [&[1u64, 0][..], &[0, 1]]).unwrap();
        let b = SpanBasis::from_vectors(f, 2, [&[1u64, 1][..], &[1, 6]]).unwrap();
        assert!(a.span_equal(&b).unwrap());
        let c = SpanBasis::from_vectors(f, 2, [&[1u64, 0][..]]).unwrap();
        let d = SpanBasis::from_vectors(f, 2, [&[0u64, 1][..]]).unwrap();
        assert!(!c.span_equal(&d).unwrap());
        assert!(c.is_subspace_of(&a).unwrap());
        let e = SpanBasis::new(f, 3);
        assert!(a.span_equal(&e).is_err());
    }

    #[test]
    fn rref_is_canonical_and_idempotent() {
        let f = Field::new(13).unwrap();
        let a = SpanBasis::from_vectors(f, 3, [&[2u64, 4, 6][..], &[1, 0, 5]]).unwrap();
        let b = SpanBasis::from_vectors(f, 3, [&[3u64, 4, 11][..], &[0, 4, 9]]).unwrap();
        assert!(a.span_equal(&b).unwrap());
        assert_eq!(a.rows(), b.rows());
        let again = SpanBasis::from_vectors(f, 3, a.rows().iter().map(|r| r.as_slice())).unwrap();
        assert_eq!(again, a);
        assert!(a.pivots().windows(2).all(|w| w[0] < w[1]));
    }
}
