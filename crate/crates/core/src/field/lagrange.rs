use super::{Field, UniPoly};
use crate::error::{Error, Result};

/// Lagrange interpolation polynomials `p_0..p_{s-1}` on distinct nodes,
/// with `p_l(beta_i) = [i == l]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeBasis {
    betas: Vec<u64>,
    polys: Vec<UniPoly>,
    /// `1 / prod_{i != l} (beta_l - beta_i)`
    weights: Vec<u64>,
}

impl LagrangeBasis {
    pub fn new(f: &Field, betas: &[u64]) -> Result<Self> {
        let s = betas.len();
        if s == 0 {
            return Err(Error::InvalidArgument("empty node set".into()));
        }
        let betas: Vec<u64> = betas.iter().map(|&b| f.elem(b)).collect();
        let mut sorted = betas.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DuplicatePoints);
        }

        let mut weights: Vec<u64> = (0..s)
            .map(|l| {
                (0..s)
                    .filter(|&i| i != l)
                    .fold(1, |acc, i| f.mul(acc, f.sub(betas[l], betas[i])))
            })
            .collect();
        f.batch_inv(&mut weights)?;

        // master = prod_i (t - beta_i); p_l = weight_l * master / (t - beta_l)
        let mut master = UniPoly::one();
        for &b in &betas {
            master = master.mul(f, &UniPoly::from_coeffs(f, vec![f.neg(b), 1]));
        }
        let polys = (0..s)
            .map(|l| {
                let quotient = synthetic_division(f, master.coeffs(), betas[l]);
                UniPoly::from_coeffs(f, quotient).scale(f, weights[l])
            })
            .collect();
        Ok(Self {
            betas,
            polys,
            weights,
        })
    }

    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }

    pub fn betas(&self) -> &[u64] {
        &self.betas
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    pub fn poly(&self, l: usize) -> &UniPoly {
        &self.polys[l]
    }

    /// All `p_l(t)` at once in `O(s)` multiplications; at a node the result is
    /// the indicator vector.
    pub fn eval_all(&self, f: &Field, t: u64) -> Vec<u64> {
        let s = self.len();
        if let Some(j) = self.betas.iter().position(|&b| b == t) {
            let mut out = vec![0; s];
            out[j] = 1;
            return out;
        }
        let diffs: Vec<u64> = self.betas.iter().map(|&b| f.sub(t, b)).collect();
        let mut suffix = vec![1u64; s + 1];
        for i in (0..s).rev() {
            suffix[i] = f.mul(suffix[i + 1], diffs[i]);
        }
        let mut prefix = 1;
        let mut out = Vec::with_capacity(s);
        for l in 0..s {
            out.push(f.mul(f.mul(prefix, suffix[l + 1]), self.weights[l]));
            prefix = f.mul(prefix, diffs[l]);
        }
        out
    }

    /// `sum_l values[l] * p_l`.
    pub fn interpolate(&self, f: &Field, values: &[u64]) -> UniPoly {
        values
            .iter()
            .zip(&self.polys)
            .fold(UniPoly::zero(), |acc, (&v, p)| acc.add(f, &p.scale(f, v)))
    }
}

/// Quotient of `coeffs / (t - root)`, assuming `root` is a root.
fn synthetic_division(f: &Field, coeffs: &[u64], root: u64) -> Vec<u64> {
    let n = coeffs.len();
    let mut q = vec![0; n.saturating_sub(1)];
    let mut carry = 0;
    for j in (1..n).rev() {
        carry = f.mul_add(carry, root, coeffs[j]);
        q[j - 1] = carry;
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_node_is_constant_one() {
        let f = Field::new(7).unwrap();
        let b = LagrangeBasis::new(&f, &[0]).unwrap();
        assert_eq!(b.poly(0), &UniPoly::one());
    }

    #[test]
    fn two_nodes_mod_7() {
        let f = Field::new(7).unwrap();
        let b = LagrangeBasis::new(&f, &[0, 1]).unwrap();
        assert_eq!(b.poly(0), &UniPoly::from_signed(&f, &[1, -1]));
        assert_eq!(b.poly(1), &UniPoly::x());
    }

    #[test]
    fn duplicate_nodes_rejected() {
        let f = Field::new(7).unwrap();
        assert_eq!(LagrangeBasis::new(&f, &[3, 3]), Err(Error::DuplicatePoints));
        assert_eq!(
            LagrangeBasis::new(&f, &[3, 10]),
            Err(Error::DuplicatePoints)
        );
    }

    #[test]
    fn evaluation_matrix_is_identity() {
        let f = Field::new(31).unwrap();
        let betas: Vec<u64> = vec![4, 9, 0, 30, 17, 2];
        let b = LagrangeBasis::new(&f, &betas).unwrap();
        for (l, p) in b.polys().iter().enumerate() {
            assert!(p.degree().unwrap() < betas.len());
            for (i, &beta) in betas.iter().enumerate() {
                assert_eq!(p.eval(&f, beta), u64::from(i == l));
            }
        }
    }

    proptest! {
        #[test]
        fn reconstruction_and_fast_eval(
            coeffs in proptest::collection::vec(0u64..1009, 0..8),
            t in 0u64..1009,
        ) {
            let f = Field::new(1009).unwrap();
            let betas: Vec<u64> = (0..8).map(|i| (i * 37 + 5) % 1009).collect();
            let basis = LagrangeBasis::new(&f, &betas).unwrap();
            let q = UniPoly::from_coeffs(&f, coeffs);
            let values: Vec<u64> = betas.iter().map(|&b| q.eval(&f, b)).collect();
            prop_assert_eq!(basis.interpolate(&f, &values), q);
            let fast = basis.eval_all(&f, t);
            for (l, p) in basis.polys().iter().enumerate() {
                prop_assert_eq!(fast[l], p.eval(&f, t));
            }
        }
    }
}
