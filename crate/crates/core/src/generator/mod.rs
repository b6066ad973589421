//! The recursive hitting-set generator for ROABPs.
//!
//! `G_d : F^{d+1} -> F^{2^d}` merges variables pairwise, using a geometric
//! rank extractor (`omega^l * alpha`) and Lagrange interpolation through the
//! nodes `beta_0..beta_{r^2-1}` to glue the halves back into one seed.
//! Output `b` (bits `b_0..b_{d-1}`) is stored at index `sum_i b_i 2^i`.

mod hitting;

pub use hitting::HittingSet;

use crate::error::{Error, Result};
use crate::field::{Field, LagrangeBasis, UniPoly};
use crate::roabp::{Layer, Roabp};

/// Which size requirements [`GenParams`] enforces on the field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundMode {
    /// `p >= (2Dnr^3)^2`, the requirement for the full hitting-set guarantee.
    Theorem,
    /// `p > (Dnr^3)^2` and an element of order `>= (Dnr^2)^2`, the minimum the
    /// generator itself needs. Callers that have checked a stronger bound of
    /// their own use this.
    Construction,
    /// No size requirement beyond `r^2 <= p`; `omega` and `S` are the best
    /// the field allows. For exhaustive experiments over tiny fields.
    Relaxed,
}

#[derive(Debug, Clone)]
pub struct GenParams {
    field: Field,
    d: usize,
    n: usize,
    r: usize,
    omega: u64,
    basis: LagrangeBasis,
    s_size: u64,
    mode: BoundMode,
}

fn checked_u64(v: u128) -> Result<u64> {
    u64::try_from(v).map_err(|_| Error::TooLarge(v))
}

impl GenParams {
    /// Parameters for depth `big_d` (a power of two), degree bound `n` and
    /// width `r`, enforcing the full `(2Dnr^3)^2` field bound.
    pub fn new(field: Field, big_d: usize, n: usize, r: usize) -> Result<Self> {
        Self::with_mode(field, big_d, n, r, BoundMode::Theorem)
    }

    pub fn with_mode(
        field: Field,
        big_d: usize,
        n: usize,
        r: usize,
        mode: BoundMode,
    ) -> Result<Self> {
        if big_d == 0 || !big_d.is_power_of_two() {
            return Err(Error::DNotPowerOfTwo(big_d));
        }
        if n == 0 || r == 0 {
            return Err(Error::InvalidArgument("n and r must be at least 1".into()));
        }
        let d = big_d.trailing_zeros() as usize;
        let p = field.modulus();
        let (dd, nn, rr) = (big_d as u128, n as u128, r as u128);
        let r2 = rr * rr;
        let order_bound = (dd * nn * r2).pow(2);
        let s_bound = dd * nn * nn * r2 * r2;
        let (min_order, s_size) = match mode {
            BoundMode::Theorem => {
                let required = (2 * dd * nn * rr * r2).pow(2);
                if u128::from(p) < required {
                    return Err(Error::FieldTooSmall {
                        modulus: p,
                        required,
                        bound: "(2Dnr^3)^2",
                    });
                }
                (checked_u64(order_bound)?, checked_u64(s_bound)?)
            }
            BoundMode::Construction => {
                let required = (dd * nn * rr * r2).pow(2) + 1;
                if u128::from(p) < required {
                    return Err(Error::FieldTooSmall {
                        modulus: p,
                        required,
                        bound: "(Dnr^3)^2 + 1",
                    });
                }
                (checked_u64(order_bound)?, checked_u64(s_bound)?)
            }
            BoundMode::Relaxed => {
                if r2 > u128::from(p) {
                    return Err(Error::FieldTooSmall {
                        modulus: p,
                        required: r2,
                        bound: "r^2",
                    });
                }
                (
                    checked_u64(order_bound.min(u128::from(p - 1).max(1)))?,
                    checked_u64(s_bound.min(u128::from(p)))?,
                )
            }
        };
        let omega = field.find_element_of_order(min_order)?;
        let betas: Vec<u64> = (0..r2 as u64).collect();
        let basis = LagrangeBasis::new(&field, &betas)?;
        Ok(Self {
            field,
            d,
            n,
            r,
            omega,
            basis,
            s_size,
            mode,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Recursion depth; the generator has `d + 1` inputs.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of outputs `D = 2^d`.
    pub fn outputs(&self) -> usize {
        1 << self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn omega(&self) -> u64 {
        self.omega
    }

    pub fn basis(&self) -> &LagrangeBasis {
        &self.basis
    }

    pub fn mode(&self) -> BoundMode {
        self.mode
    }

    /// `|S|`; the seed set is `{0, 1, .., |S|-1}`.
    pub fn s_size(&self) -> u64 {
        self.s_size
    }

    fn r2(&self) -> usize {
        self.r * self.r
    }

    /// The exponent `2^i n r^2` of the `b_i = 1` branch.
    pub fn level_exponent(&self, i: usize) -> u128 {
        (1u128 << i) * self.n as u128 * self.r2() as u128
    }

    fn level_pow(&self, t: u64, i: usize) -> u64 {
        let f = &self.field;
        if t == 0 {
            return 0;
        }
        // t^(2^i n r^2) with the exponent reduced mod p - 1
        let e = (self.level_exponent(i) % u128::from(f.modulus() - 1)) as u64;
        f.pow(t, e)
    }

    fn check(&self, b: Option<&[bool]>, alpha: &[u64]) -> Result<()> {
        if let Some(b) = b {
            if b.len() != self.d {
                return Err(Error::ArityMismatch {
                    expected: self.d,
                    got: b.len(),
                });
            }
        }
        if alpha.len() != self.d + 1 {
            return Err(Error::ArityMismatch {
                expected: self.d + 1,
                got: alpha.len(),
            });
        }
        Ok(())
    }

    /// The defining sum, enumerating every tuple `(l_0, .., l_{d-1})`.
    pub fn gen_direct(&self, b: &[bool], alpha: &[u64]) -> Result<u64> {
        self.check(Some(b), alpha)?;
        let f = &self.field;
        let d = self.d;
        let r2 = self.r2();
        let alpha: Vec<u64> = alpha.iter().map(|&a| f.elem(a)).collect();
        let mut ls = vec![0usize; d];
        let mut total = 0;
        loop {
            let mut term = 1;
            for i in 0..d {
                let mut t = f.mul(f.pow(self.omega, ls[i] as u64), alpha[i]);
                if b[i] {
                    t = self.level_pow(t, i);
                }
                let factor = if i == 0 {
                    t
                } else {
                    self.basis.poly(ls[i - 1]).eval(f, t)
                };
                term = f.mul(term, factor);
            }
            let last = if d == 0 {
                alpha[0]
            } else {
                self.basis.poly(ls[d - 1]).eval(f, alpha[d])
            };
            total = f.mul_add(term, last, total);

            // odometer over [0, r^2)^d
            let mut k = 0;
            while k < d {
                ls[k] += 1;
                if ls[k] < r2 {
                    break;
                }
                ls[k] = 0;
                k += 1;
            }
            if k == d {
                break;
            }
        }
        Ok(total)
    }

    /// One output through the two-branch recursion on the last bit.
    pub fn gen_recursive(&self, b: &[bool], alpha: &[u64]) -> Result<u64> {
        self.check(Some(b), alpha)?;
        let alpha: Vec<u64> = alpha.iter().map(|&a| self.field.elem(a)).collect();
        Ok(self.recurse_one(b, &alpha))
    }

    fn recurse_one(&self, b: &[bool], alpha: &[u64]) -> u64 {
        let f = &self.field;
        let k = b.len();
        if k == 0 {
            return alpha[0];
        }
        let weights = self.basis.eval_all(f, alpha[k]);
        let mut child = alpha[..k].to_vec();
        let mut total = 0;
        let mut t = alpha[k - 1];
        for &w in &weights {
            if w != 0 {
                child[k - 1] = if b[k - 1] {
                    self.level_pow(t, k - 1)
                } else {
                    t
                };
                total = f.mul_add(w, self.recurse_one(&b[..k - 1], &child), total);
            }
            t = f.mul(t, self.omega);
        }
        total
    }

    /// All `2^d` outputs, sharing the child evaluations between the two
    /// values of each bit.
    pub fn gen_eval_all(&self, alpha: &[u64]) -> Result<Vec<u64>> {
        self.check(None, alpha)?;
        let alpha: Vec<u64> = alpha.iter().map(|&a| self.field.elem(a)).collect();
        Ok(self.recurse_all(&alpha))
    }

    pub(crate) fn recurse_all(&self, alpha: &[u64]) -> Vec<u64> {
        let f = &self.field;
        let k = alpha.len() - 1;
        if k == 0 {
            return vec![alpha[0]];
        }
        let half = 1usize << (k - 1);
        let weights = self.basis.eval_all(f, alpha[k]);
        let mut out = vec![0u64; 2 * half];
        let mut child = alpha[..k].to_vec();
        let mut t = alpha[k - 1];
        for &w in &weights {
            if w != 0 {
                child[k - 1] = t;
                let low = self.recurse_all(&child);
                child[k - 1] = self.level_pow(t, k - 1);
                let high = self.recurse_all(&child);
                for (o, v) in out[..half].iter_mut().zip(low) {
                    *o = f.mul_add(w, v, *o);
                }
                for (o, v) in out[half..].iter_mut().zip(high) {
                    *o = f.mul_add(w, v, *o);
                }
            }
            t = f.mul(t, self.omega);
        }
        out
    }

    /// Width-`r^2`, depth-`(d+1)` ROABP in `alpha_0..alpha_d` computing
    /// output `b`.
    pub fn gen_abp(&self, b: &[bool]) -> Result<Roabp> {
        if b.len() != self.d {
            return Err(Error::ArityMismatch {
                expected: self.d,
                got: b.len(),
            });
        }
        let f = &self.field;
        let r2 = self.r2();
        let d = self.d;
        let mut layers = Vec::with_capacity(d + 1);
        #[allow(clippy::needless_range_loop)]
        for i in 0..=d {
            let mut layer = Layer::zero(r2);
            let last = i == d;
            let (scale_pow, e) = if !last && b[i] {
                let e = usize::try_from(self.level_exponent(i))
                    .map_err(|_| Error::TooLarge(self.level_exponent(i)))?;
                (true, e)
            } else {
                (false, 1)
            };
            let cols = if last { 1 } else { r2 };
            let rows = if i == 0 { 1 } else { r2 };
            for l in 0..cols {
                // the inner argument is c * alpha_i^e
                let wl = f.pow(self.omega, l as u64);
                let c = if scale_pow {
                    f.pow(wl, (e as u128 % u128::from(f.modulus() - 1)) as u64)
                } else {
                    wl
                };
                for lp in 0..rows {
                    let entry = if i == 0 {
                        UniPoly::monomial(f, c, e)
                    } else {
                        self.basis.poly(lp).compose_scaled_power(f, c, e)
                    };
                    layer.set(lp, l, entry);
                }
            }
            layers.push(layer);
        }
        Roabp::with_tight_degree(*f, r2, layers)
    }
}

/// Bits of output index `idx`, least significant first.
pub fn index_bits(idx: usize, d: usize) -> Vec<bool> {
    (0..d).map(|i| idx >> i & 1 == 1).collect()
}
