//! Prime-field arithmetic, univariate polynomials and Lagrange bases.
//!
//! Elements are plain `u64` canonical representatives in `[0, p)`; every
//! operation goes through a [`Field`] handle carrying the modulus.

mod lagrange;
mod poly;

pub use lagrange::LagrangeBasis;
pub use poly::UniPoly;

use crate::error::{Error, Result};

const MODULUS_LIMIT: u64 = 1 << 63;

/// The prime field `F_p` with `p < 2^63`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Field {
    p: u64,
}

impl Field {
    pub fn new(p: u64) -> Result<Self> {
        if p >= MODULUS_LIMIT {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NonPrimeModulus(p));
        }
        Ok(Self { p })
    }

    /// The smallest prime field of size at least `bound`.
    pub fn at_least(bound: u128) -> Result<Self> {
        let start = u64::try_from(bound.max(2)).map_err(|_| Error::ModulusTooLarge(u64::MAX))?;
        Self::new(next_prime(start).ok_or(Error::ModulusTooLarge(start))?)
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn elem(&self, v: u64) -> u64 {
        v % self.p
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        let r = v.rem_euclid(self.p as i64);
        r as u64
    }

    /// Signed representative in `(-p/2, p/2]`, handy for printing.
    pub fn to_signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            -((self.p - a) as i64)
        } else {
            a as i64
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.p <= u32::MAX as u64 {
            (a * b) % self.p
        } else {
            ((a as u128 * b as u128) % self.p as u128) as u64
        }
    }

    /// `a * b + c`.
    #[inline]
    pub fn mul_add(&self, a: u64, b: u64, c: u64) -> u64 {
        self.add(self.mul(a, b), c)
    }

    /// Square-and-multiply. The exponent is reduced mod `p - 1` only when
    /// `a != 0`, so `0^0 = 1` and `0^e = 0` for `e > 0`.
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return u64::from(e == 0);
        }
        let mut e = e % (self.p - 1);
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroElement);
        }
        let (mut old_r, mut r) = (a as i128, self.p as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1);
        Ok(old_s.rem_euclid(self.p as i128) as u64)
    }

    /// Inverts every element in place with a single field inversion.
    pub fn batch_inv(&self, values: &mut [u64]) -> Result<()> {
        let mut prefix = Vec::with_capacity(values.len());
        let mut acc = 1;
        for &v in values.iter() {
            if v == 0 {
                return Err(Error::ZeroElement);
            }
            prefix.push(acc);
            acc = self.mul(acc, v);
        }
        let mut inv = self.inv(acc)?;
        for (v, pre) in values.iter_mut().zip(prefix).rev() {
            let next = self.mul(inv, *v);
            *v = self.mul(inv, pre);
            inv = next;
        }
        Ok(())
    }

    /// Prime factorisation of `p - 1` by trial division.
    pub fn group_order_factors(&self) -> Vec<(u64, u32)> {
        factorize(self.p - 1)
    }

    /// Smallest `k >= 1` with `g^k = 1`.
    pub fn multiplicative_order(&self, g: u64) -> Result<u64> {
        self.order_with(g, &self.group_order_factors())
    }

    fn order_with(&self, g: u64, factors: &[(u64, u32)]) -> Result<u64> {
        let g = self.elem(g);
        if g == 0 {
            return Err(Error::ZeroElement);
        }
        let mut order = self.p - 1;
        for &(q, k) in factors {
            for _ in 0..k {
                if order.is_multiple_of(q) && self.pow(g, order / q) == 1 {
                    order /= q;
                } else {
                    break;
                }
            }
        }
        Ok(order)
    }

    /// First element of `1, 2, 3, ...` whose order is at least `min_order`.
    pub fn find_element_of_order(&self, min_order: u64) -> Result<u64> {
        if min_order > self.p - 1 {
            return Err(Error::NoSuchElement {
                required: min_order,
                modulus: self.p,
            });
        }
        let factors = self.group_order_factors();
        for g in 1..self.p {
            if self.order_with(g, &factors)? >= min_order {
                return Ok(g);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }

    /// Canonical elements `0, 1, ..., p-1`.
    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.p
    }
}

fn factorize(mut m: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut q = 2u64;
    while q.saturating_mul(q) <= m {
        if m.is_multiple_of(q) {
            let mut k = 0;
            while m.is_multiple_of(q) {
                m /= q;
                k += 1;
            }
            out.push((q, k));
        }
        q += if q == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &q in &BASES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime `>= n` below 2^63, if any.
pub fn next_prime(n: u64) -> Option<u64> {
    (n.max(2)..MODULUS_LIMIT).find(|&c| is_prime(c))
}
