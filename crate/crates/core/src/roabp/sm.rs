use std::collections::BTreeMap;

use super::{Layer, Roabp};
use crate::error::{Error, Result};
use crate::field::{Field, UniPoly};

/// Set-multilinear ABP: entry `(u,v)` of layer `i` is the homogeneous linear
/// form `sum_j c_j x_{i,j}`, stored as the vector `c` of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmAbp {
    field: Field,
    width: usize,
    degree: usize,
    layers: Vec<Vec<Vec<u64>>>,
}

impl SmAbp {
    /// `layers[i][u * width + v]` is the coefficient vector of entry `(u,v)`.
    pub fn new(
        field: Field,
        width: usize,
        degree: usize,
        layers: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self> {
        if width == 0 || degree == 0 || layers.is_empty() {
            return Err(Error::InvalidArgument(
                "width, depth and block size must be at least 1".into(),
            ));
        }
        let mut layers = layers;
        for layer in layers.iter_mut() {
            if layer.len() != width * width {
                return Err(Error::DimensionMismatch {
                    expected: width * width,
                    got: layer.len(),
                });
            }
            for entry in layer.iter_mut() {
                if entry.len() > degree {
                    return Err(Error::DimensionMismatch {
                        expected: degree,
                        got: entry.len(),
                    });
                }
                entry.resize(degree, 0);
                entry.iter_mut().for_each(|c| *c = field.elem(*c));
            }
        }
        Ok(Self {
            field,
            width,
            degree,
            layers,
        })
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

    /// Size `n` of each variable block `X_i`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entry(&self, layer: usize, row: usize, col: usize) -> &[u64] {
        &self.layers[layer][row * self.width + col]
    }

    /// Kronecker map `x_{i,j} -> x_i^j`.
    pub fn to_roabp(&self) -> Roabp {
        let f = self.field;
        let layers = self
            .layers
            .iter()
            .map(|l| {
                Layer::from_entries(
                    self.width,
                    l.iter()
                        .map(|c| UniPoly::from_coeffs(&f, c.clone()))
                        .collect(),
                )
            })
            .collect();
        Roabp::new(f, self.width, self.degree, layers).expect("shape checked at construction")
    }

    /// Evaluation at `point[i][j] = x_{i,j}`.
    pub fn eval(&self, point: &[Vec<u64>]) -> Result<u64> {
        if point.len() != self.depth() {
            return Err(Error::ArityMismatch {
                expected: self.depth(),
                got: point.len(),
            });
        }
        let f = &self.field;
        let w = self.width;
        let mut row = vec![0u64; w];
        row[0] = 1;
        for (layer, xs) in self.layers.iter().zip(point) {
            if xs.len() != self.degree {
                return Err(Error::ArityMismatch {
                    expected: self.degree,
                    got: xs.len(),
                });
            }
            let mut next = vec![0u64; w];
            for (u, &ru) in row.iter().enumerate() {
                if ru == 0 {
                    continue;
                }
                for (v, nv) in next.iter_mut().enumerate() {
                    let lin = layer[u * w + v]
                        .iter()
                        .zip(xs)
                        .fold(0, |acc, (&c, &x)| f.mul_add(c, x, acc));
                    *nv = f.mul_add(ru, lin, *nv);
                }
            }
            row = next;
        }
        Ok(row[0])
    }

    /// Nonzero coefficients of the computed polynomial; a monomial
    /// `prod_i x_{i,j_i}` is keyed by `[j_0, .., j_{D-1}]`.
    pub fn expand_sparse(&self) -> BTreeMap<Vec<usize>, u64> {
        let f = &self.field;
        let w = self.width;
        let mut row: Vec<BTreeMap<Vec<usize>, u64>> = vec![BTreeMap::new(); w];
        row[0].insert(Vec::new(), 1);
        for layer in &self.layers {
            let mut next: Vec<BTreeMap<Vec<usize>, u64>> = vec![BTreeMap::new(); w];
            for (u, terms) in row.iter().enumerate() {
                for (v, acc) in next.iter_mut().enumerate() {
                    for (j, &c) in layer[u * w + v].iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for (mono, &a) in terms {
                            let mut m = mono.clone();
                            m.push(j);
                            let e = acc.entry(m).or_insert(0);
                            *e = f.mul_add(a, c, *e);
                        }
                    }
                }
            }
            for terms in next.iter_mut() {
                terms.retain(|_, c| *c != 0);
            }
            row = next;
        }
        row.swap_remove(0)
    }
}

/// Free-standing form of [`SmAbp::to_roabp`].
pub fn sm_to_roabp(a: &SmAbp) -> Roabp {
    a.to_roabp()
}
