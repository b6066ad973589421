use super::{DiagonalCircuit, DigitVector, Term};
use crate::error::{Error, Result};
use crate::field::{Field, UniPoly};
use crate::roabp::{Layer, Roabp};

/// Exponent profiles `u <= a` in lexicographic order, first digit most
/// significant. Profile `0` gets index 0 and `a` the last index.
struct Profiles {
    radix: Vec<u64>,
}

impl Profiles {
    fn count(&self) -> usize {
        self.radix.iter().map(|&a| a as usize + 1).product()
    }

    fn decode(&self, mut idx: usize) -> Vec<u64> {
        let mut out = vec![0; self.radix.len()];
        for (slot, &a) in out.iter_mut().zip(&self.radix).rev() {
            let base = a as usize + 1;
            *slot = (idx % base) as u64;
            idx /= base;
        }
        out
    }
}

/// ROABP for one term `m(x) prod_j P_j^{e_j}`, reading `x_{var_order[t]}` at
/// layer `t`.
///
/// Each exponent is split into base-`p` digits `a_{j,k}`, and Frobenius turns
/// `P_j^{e_j}` into `prod_k Q_{j,k}^{a_{j,k}}` with
/// `Q_{j,k} = sum_m g_{j,m}(x_m^{p^k})`. With one formal variable `z_{j,k}` per
/// nonzero digit,
/// `prod Q^a = a! coeff_{z^a} prod_m prod_{j,k} trexp_{a_{j,k}}(g_{j,m}(x_m^{p^k}) z_{j,k})`,
/// where `trexp_a(t) = sum_{l<=a} t^l / l!`. Nodes are the partial
/// `z`-profiles `u <= a`, and the edge `u -> u'` at layer `m` carries the
/// `z^{u'-u}` coefficient of layer `m`'s factor. Every digit is below `p`, so
/// all the factorials are invertible.
pub fn dual_roabp_of_term(field: &Field, term: &Term, var_order: &[usize]) -> Result<Roabp> {
    let f = *field;
    let n = var_order.len();
    check_permutation(var_order)?;
    if let Some(fa) = term.factors.iter().find(|fa| fa.summands.len() != n) {
        return Err(Error::ArityMismatch {
            expected: n,
            got: fa.summands.len(),
        });
    }
    let p = f.modulus();
    let digits = DigitVector::of(term, p).nonzero();
    let profiles = Profiles {
        radix: digits.iter().map(|&(_, _, a)| a).collect(),
    };
    let width = profiles.count();
    let decoded: Vec<Vec<u64>> = (0..width).map(|i| profiles.decode(i)).collect();

    let top = digits.iter().map(|&(_, _, a)| a).max().unwrap_or(0);
    let mut inv_fact = vec![1u64; top as usize + 1];
    for l in 1..inv_fact.len() {
        inv_fact[l] = f.mul(inv_fact[l - 1], f.inv(l as u64)?);
    }
    let a_fact = digits.iter().fold(1u64, |acc, &(_, _, a)| {
        (1..=a).fold(acc, |acc, l| f.mul(acc, l))
    });

    let mut layers = Vec::with_capacity(n);
    for (t, &m) in var_order.iter().enumerate() {
        // pows[q][l] = g_{j,m}(x^{p^k})^l / l!
        let pows: Vec<Vec<UniPoly>> = digits
            .iter()
            .map(|&(j, k, a)| {
                let spread = usize::try_from(p.pow(k)).expect("digit position fits");
                let h = term.factors[j].summands[m].compose_scaled_power(&f, 1, spread);
                let mut out = vec![UniPoly::one()];
                for l in 1..=a as usize {
                    out.push(out[l - 1].mul(&f, &h));
                }
                out.iter()
                    .zip(&inv_fact)
                    .map(|(q, &c)| q.scale(&f, c))
                    .collect()
            })
            .collect();
        let mono = term
            .monomial()
            .map_or(0, |c| usize::try_from(c[m]).expect("monomial degree fits"));
        let first = t == 0;
        let last = t + 1 == n;
        let mut layer = Layer::zero(width);
        for (u, from) in decoded.iter().enumerate() {
            if first && u != 0 {
                continue;
            }
            for (v, to) in decoded.iter().enumerate() {
                if last && v != width - 1 {
                    continue;
                }
                if from.iter().zip(to).any(|(a, b)| a > b) {
                    continue;
                }
                let mut entry = UniPoly::one();
                for (q, (a, b)) in from.iter().zip(to).enumerate() {
                    entry = entry.mul(&f, &pows[q][(b - a) as usize]);
                }
                if first {
                    entry = entry.scale(&f, a_fact);
                }
                let col = if last { 0 } else { v };
                layer.set(u, col, entry.shift(mono));
            }
        }
        layers.push(layer);
    }
    let out = Roabp::with_tight_degree(f, width, layers)?;
    assert!(
        out.width() as u128 <= term.mult_size(),
        "term program wider than |e|_x"
    );
    Ok(out)
}

fn check_permutation(order: &[usize]) -> Result<()> {
    let mut seen = vec![false; order.len()];
    for &m in order {
        if m >= order.len() || std::mem::replace(&mut seen[m], true) {
            return Err(Error::InvalidArgument(format!(
                "{order:?} is not a permutation of 0..{}",
                order.len()
            )));
        }
    }
    Ok(())
}

/// Sum of the term programs in the order `x_0 < .. < x_{n-1}`; width at most
/// `k max_i |e_i|_x`.
pub fn diagonal_to_roabp(c: &DiagonalCircuit) -> Result<Roabp> {
    let f = *c.field();
    let n = c.nvars();
    if c.terms().is_empty() {
        return Roabp::new(f, 1, 1, vec![Layer::zero(1); n]);
    }
    let order: Vec<usize> = (0..n).collect();
    let parts = c
        .terms()
        .iter()
        .map(|t| dual_roabp_of_term(&f, t, &order))
        .collect::<Result<Vec<_>>>()?;
    let out = Roabp::sum(&parts)?;
    assert!(
        out.width() as u128 <= c.terms().len() as u128 * c.max_mult_size(),
        "circuit program wider than k max|e|_x"
    );
    Ok(out)
}
