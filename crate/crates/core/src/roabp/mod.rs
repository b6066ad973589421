//! Read-once oblivious ABPs in matrix normal form.
//!
//! A width-`r`, depth-`D` ROABP is a list of `D` layers, each an `r x r`
//! matrix of univariates; layer `i` reads only `x_i`, and the program
//! computes the `(0,0)` entry of the left-to-right product.

mod graph;
mod sm;
mod text;

pub use graph::{graph_to_matrix_form, GraphAbp, GraphEdge};
pub use sm::{sm_to_roabp, SmAbp};

use crate::error::{Error, Result};
use crate::field::{Field, UniPoly};
use crate::linalg::Mat;

/// An `r x r` matrix with univariate entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Layer {
    width: usize,
    entries: Vec<UniPoly>,
}

impl Layer {
    pub fn zero(width: usize) -> Self {
        Self {
            width,
            entries: vec![UniPoly::zero(); width * width],
        }
    }

    pub fn identity(width: usize) -> Self {
        let mut l = Self::zero(width);
        for i in 0..width {
            l.set(i, i, UniPoly::one());
        }
        l
    }

    pub fn from_entries(width: usize, entries: Vec<UniPoly>) -> Self {
        assert_eq!(entries.len(), width * width, "layer needs width^2 entries");
        Self { width, entries }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, row: usize, col: usize) -> &UniPoly {
        &self.entries[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: UniPoly) {
        self.entries[row * self.width + col] = p;
    }

    pub fn entries(&self) -> &[UniPoly] {
        &self.entries
    }

    /// One more than the largest entry degree (0 for the zero layer).
    pub fn degree_bound(&self) -> usize {
        self.entries.iter().map(UniPoly::len).max().unwrap_or(0)
    }

    pub fn eval(&self, f: &Field, a: u64) -> Mat {
        Mat::from_rows(
            self.width,
            self.width,
            self.entries.iter().map(|p| p.eval(f, a)).collect(),
        )
    }

    /// Matrix `j` holds the `x^j` coefficient of every entry, for `j < n`.
    pub fn coeff_matrices(&self, n: usize) -> Vec<Mat> {
        (0..n)
            .map(|j| {
                Mat::from_rows(
                    self.width,
                    self.width,
                    self.entries.iter().map(|p| p.coeff(j)).collect(),
                )
            })
            .collect()
    }

    /// Product of two layers in the same variable.
    pub fn mul(&self, f: &Field, other: &Self) -> Self {
        let w = self.width;
        assert_eq!(w, other.width);
        let mut out = Self::zero(w);
        for i in 0..w {
            for j in 0..w {
                let mut acc = UniPoly::zero();
                for k in 0..w {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc.add(f, &a.mul(f, b));
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

/// Free-standing form of [`Layer::coeff_matrices`].
pub fn coeff_matrices(layer: &Layer, n: usize) -> Vec<Mat> {
    layer.coeff_matrices(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Roabp {
    field: Field,
    width: usize,
    degree: usize,
    layers: Vec<Layer>,
}

impl Roabp {
    /// `degree` is the individual-degree bound `n`: every entry has degree `< n`.
    pub fn new(field: Field, width: usize, degree: usize, layers: Vec<Layer>) -> Result<Self> {
        if width == 0 || degree == 0 {
            return Err(Error::InvalidArgument(
                "width and degree bound must be at least 1".into(),
            ));
        }
        if layers.is_empty() {
            return Err(Error::InvalidArgument("depth must be at least 1".into()));
        }
        for (i, layer) in layers.iter().enumerate() {
            if layer.width != width {
                return Err(Error::DimensionMismatch {
                    expected: width,
                    got: layer.width,
                });
            }
            if layer.degree_bound() > degree {
                return Err(Error::InvalidArgument(format!(
                    "layer {i} has an entry of degree >= {degree}"
                )));
            }
            if layer
                .entries
                .iter()
                .flat_map(|p| p.coeffs())
                .any(|&c| c >= field.modulus())
            {
                return Err(Error::InvalidArgument(format!(
                    "layer {i} has a non-canonical coefficient"
                )));
            }
        }
        Ok(Self {
            field,
            width,
            degree,
            layers,
        })
    }

    /// Like [`Roabp::new`] with the degree bound taken from the layers.
    pub fn with_tight_degree(field: Field, width: usize, layers: Vec<Layer>) -> Result<Self> {
        let degree = layers
            .iter()
            .map(Layer::degree_bound)
            .max()
            .unwrap_or(0)
            .max(1);
        Self::new(field, width, degree, layers)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn layers(&self) -> &[Layer] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &Layer {
        &self.layers[i]
    }

    fn check_arity(&self, point: &[u64]) -> Result<()> {
        if point.len() != self.depth() {
            return Err(Error::ArityMismatch {
                expected: self.depth(),
                got: point.len(),
            });
        }
        Ok(())
    }

    /// `prod_i M_i(point_i)`, left to right.
    pub fn eval_matrix(&self, point: &[u64]) -> Result<Mat> {
        self.check_arity(point)?;
        let f = &self.field;
        let mut acc = Mat::identity(self.width);
        for (layer, &a) in self.layers.iter().zip(point) {
            acc = acc.mul(f, &layer.eval(f, a));
        }
        Ok(acc)
    }

    /// The `(0,0)` entry, propagating only the first row.
    pub fn eval(&self, point: &[u64]) -> Result<u64> {
        self.check_arity(point)?;
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[u64]) -> u64 {
        let f = &self.field;
        let w = self.width;
        let mut row = vec![0u64; w];
        row[0] = 1;
        let mut next = vec![0u64; w];
        for (layer, &a) in self.layers.iter().zip(point) {
            next.iter_mut().for_each(|x| *x = 0);
            for (k, &rk) in row.iter().enumerate() {
                if rk == 0 {
                    continue;
                }
                for (j, nj) in next.iter_mut().enumerate() {
                    let p = layer.get(k, j);
                    if !p.is_zero() {
                        *nj = f.mul_add(rk, p.eval(f, a), *nj);
                    }
                }
            }
            std::mem::swap(&mut row, &mut next);
        }
        row[0]
    }

    /// Appends constant identity layers up to the next power-of-two depth.
    pub fn pad_to_power_of_two(&self) -> Self {
        let target = self.depth().next_power_of_two();
        let mut layers = self.layers.clone();
        layers.resize(target, Layer::identity(self.width));
        Self {
            layers,
            ..self.clone()
        }
    }

    /// Layer lists glued end to end; the result computes the `(0,0)` entry of the
    /// product of the two matrix programs.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(
                self.field.modulus(),
                other.field.modulus(),
            ));
        }
        if self.width != other.width {
            return Err(Error::DimensionMismatch {
                expected: self.width,
                got: other.width,
            });
        }
        let mut layers = self.layers.clone();
        layers.extend(other.layers.iter().cloned());
        Self::new(
            self.field,
            self.width,
            self.degree.max(other.degree),
            layers,
        )
    }

    /// The same program with every layer widened to `width` by zero rows and columns.
    pub fn widen(&self, width: usize) -> Result<Self> {
        if width < self.width {
            return Err(Error::InvalidArgument(format!(
                "cannot narrow width {} to {width}",
                self.width
            )));
        }
        let layers = self
            .layers
            .iter()
            .map(|l| {
                let mut out = Layer::zero(width);
                for i in 0..l.width {
                    for j in 0..l.width {
                        out.set(i, j, l.get(i, j).clone());
                    }
                }
                out
            })
            .collect();
        Self::new(self.field, width, self.degree, layers)
    }

    /// Program for the sum of `parts`: the first layer concatenates their
    /// source rows, the middle layers are block diagonal, and the last layer
    /// stacks their sink columns.
    pub fn sum(parts: &[Self]) -> Result<Self> {
        let first = parts
            .first()
            .ok_or_else(|| Error::InvalidArgument("cannot sum an empty list of programs".into()))?;
        let (field, depth) = (first.field, first.depth());
        for p in parts {
            if p.field != field {
                return Err(Error::FieldMismatch(field.modulus(), p.field.modulus()));
            }
            if p.depth() != depth {
                return Err(Error::DimensionMismatch {
                    expected: depth,
                    got: p.depth(),
                });
            }
        }
        let width: usize = parts.iter().map(|p| p.width).sum();
        let mut layers = vec![Layer::zero(width); depth];
        let mut offset = 0;
        for p in parts {
            for (i, (out, l)) in layers.iter_mut().zip(&p.layers).enumerate() {
                let rows: Vec<(usize, usize)> = if i == 0 {
                    vec![(0, 0)]
                } else {
                    (0..p.width).map(|u| (u, offset + u)).collect()
                };
                let cols: Vec<(usize, usize)> = if i + 1 == depth {
                    vec![(0, 0)]
                } else {
                    (0..p.width).map(|v| (v, offset + v)).collect()
                };
                for &(u, row) in &rows {
                    for &(v, col) in &cols {
                        let e = l.get(u, v);
                        if !e.is_zero() {
                            let cur = out.get(row, col).add(&field, e);
                            out.set(row, col, cur);
                        }
                    }
                }
            }
            offset += p.width;
        }
        let degree = parts.iter().map(|p| p.degree).max().unwrap_or(1);
        Self::new(field, width, degree, layers)
    }

    /// Same program, reading its variables in a different order: layer `i`
    /// of the result reads coordinate `order[i]` of the point.
    pub fn relabel_point<'a>(
        point: &'a [u64],
        order: &'a [usize],
    ) -> impl Iterator<Item = u64> + 'a {
        order.iter().map(move |&i| point[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn xy_minus_one(f: Field) -> Roabp {
        let m0 = Layer::from_entries(
            2,
            vec![
                UniPoly::x(),
                UniPoly::one(),
                UniPoly::zero(),
                UniPoly::zero(),
            ],
        );
        let m1 = Layer::from_entries(
            2,
            vec![
                UniPoly::x(),
                UniPoly::zero(),
                UniPoly::constant(&f, f.neg(1)),
                UniPoly::zero(),
            ],
        );
        Roabp::new(f, 2, 2, vec![m0, m1]).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = Field::new(7).unwrap();
        let a = xy_minus_one(f);
        assert_eq!(a.eval(&[2, 3]).unwrap(), 5);
        assert_eq!(a.eval_matrix(&[2, 3]).unwrap()[(0, 0)], 5);
        assert!(matches!(a.eval(&[1]), Err(Error::ArityMismatch { .. })));

        let id = Roabp::new(f, 3, 1, vec![Layer::identity(3); 4]).unwrap();
        assert_eq!(id.eval_matrix(&[1, 2, 3, 4]).unwrap(), Mat::identity(3));

        let zero = Roabp::new(f, 2, 1, vec![Layer::zero(2); 2]).unwrap();
        assert_eq!(zero.eval(&[5, 6]).unwrap(), 0);
    }

    #[test]
    fn sum_adds_outputs() {
        let f = Field::new(7).unwrap();
        let a = xy_minus_one(f);
        let b = Roabp::new(f, 1, 2, vec![Layer::from_entries(1, vec![UniPoly::x()]); 2]).unwrap();
        let s = Roabp::sum(&[a.clone(), b.clone(), a.clone()]).unwrap();
        assert_eq!(s.width(), 5);
        for pt in [[0, 0], [2, 3], [6, 5]] {
            let expect = f.add(f.mul(2, a.eval(&pt).unwrap()), b.eval(&pt).unwrap());
            assert_eq!(s.eval(&pt).unwrap(), expect);
        }
        let one = Roabp::new(f, 1, 2, vec![Layer::from_entries(1, vec![UniPoly::x()])]).unwrap();
        assert_eq!(
            Roabp::sum(&[one.clone(), one.clone()])
                .unwrap()
                .eval(&[3])
                .unwrap(),
            6
        );
        assert!(Roabp::sum(&[a, one]).is_err());
        assert!(Roabp::sum(&[]).is_err());
    }

    #[test]
    fn padding() {
        let f = Field::new(7).unwrap();
        let three =
            Roabp::new(f, 1, 2, vec![Layer::from_entries(1, vec![UniPoly::x()]); 3]).unwrap();
        let padded = three.pad_to_power_of_two();
        assert_eq!(padded.depth(), 4);
        assert_eq!(padded.layer(3), &Layer::identity(1));
        assert_eq!(
            padded.eval(&[2, 3, 4, 6]).unwrap(),
            three.eval(&[2, 3, 4]).unwrap()
        );
        let four = padded.pad_to_power_of_two();
        assert_eq!(four, padded);
    }

    #[test]
    fn coefficient_matrices() {
        let f = Field::new(7).unwrap();
        let m = Layer::from_entries(
            2,
            vec![
                UniPoly::x(),
                UniPoly::one(),
                UniPoly::zero(),
                UniPoly::zero(),
            ],
        );
        let cs = m.coeff_matrices(2);
        assert_eq!(cs[0], Mat::from_rows(2, 2, vec![0, 1, 0, 0]));
        assert_eq!(cs[1], Mat::from_rows(2, 2, vec![1, 0, 0, 0]));
        let c = Layer::identity(2).coeff_matrices(3);
        assert_eq!(c[0], Mat::identity(2));
        assert!(c[1].is_zero() && c[2].is_zero());
        let _ = f;
    }

    #[test]
    fn rejects_bad_layers() {
        let f = Field::new(7).unwrap();
        let quad = Layer::from_entries(1, vec![UniPoly::monomial(&f, 1, 2)]);
        assert!(Roabp::new(f, 1, 2, vec![quad.clone()]).is_err());
        assert!(Roabp::new(f, 1, 3, vec![quad]).is_ok());
        assert!(Roabp::new(f, 2, 1, vec![Layer::identity(3)]).is_err());
        assert!(Roabp::new(f, 2, 1, vec![]).is_err());
    }
}
