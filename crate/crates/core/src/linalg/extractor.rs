use super::{rank, Mat, SpanBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::roabp::Layer;

/// Largest modulus [`count_bad_alphas`] is willing to enumerate.
const ENUMERATION_LIMIT: u64 = 1 << 16;

/// The seeds `omega^l * alpha` for `l < r2`.
pub fn extractor_points(f: &Field, omega: u64, alpha: u64, r2: usize) -> Vec<u64> {
    let mut t = f.elem(alpha);
    let mut out = Vec::with_capacity(r2);
    for _ in 0..r2 {
        out.push(t);
        t = f.mul(t, omega);
    }
    out
}

/// `M(t) N(t^n)` for each `t = omega^l * alpha`, `l < r2`.
pub fn merged_span_evals(
    f: &Field,
    m: &Layer,
    n_layer: &Layer,
    omega: u64,
    alpha: u64,
    r2: usize,
    n: usize,
) -> Result<Vec<Mat>> {
    let required = (n as u64).saturating_mul(n as u64);
    let order = f.multiplicative_order(omega)?;
    if order < required {
        return Err(Error::OrderTooSmall { order, required });
    }
    Ok(extractor_points(f, omega, alpha, r2)
        .into_iter()
        .map(|t| m.eval(f, t).mul(f, &n_layer.eval(f, f.pow(t, n as u64))))
        .collect())
}

/// Number of `alpha` for which the first `s = rank(m)` rows of `A_alpha * m`
/// have rank below `s`, where `(A_alpha)_{i,j} = (omega^i alpha)^j` is `r x n`.
pub fn count_bad_alphas(f: &Field, m: &Mat, omega: u64, r: usize) -> Result<usize> {
    if f.modulus() > ENUMERATION_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "refusing to enumerate a field of size {} above 2^16",
            f.modulus()
        )));
    }
    let s = rank(*f, m);
    if s == 0 {
        return Ok(0);
    }
    if s > r {
        return Err(Error::InvalidArgument(format!(
            "rank {s} exceeds the extractor height {r}"
        )));
    }
    let n = m.rows();
    let mut bad = 0;
    for alpha in f.elements() {
        let mut a = Mat::zeros(s, n);
        for (i, t) in extractor_points(f, omega, alpha, s).into_iter().enumerate() {
            let mut power = 1;
            for j in 0..n {
                a[(i, j)] = power;
                power = f.mul(power, t);
            }
        }
        let am = a.mul(f, m);
        let mut b = SpanBasis::new(*f, m.cols());
        for row in 0..s {
            b.insert(am.row(row))?;
        }
        if b.rank() < s {
            bad += 1;
        }
    }
    Ok(bad)
}
