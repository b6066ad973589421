use super::GenParams;
use crate::error::{Error, Result};

/// The image `G_d(S^{d+1})`, enumerated by index.
///
/// Seeds are visited in graded order: every seed whose largest digit is `m`
/// comes after all seeds with digits `< m`, and within one grade the order is
/// lexicographic with `alpha_0` varying fastest. Small seeds hit the Lagrange
/// nodes, so early points are cheap, and mixing small nonzero digits early
/// finds witnesses long before a plain odometer would leave `alpha_1 = 0`.
/// Every point is a pure function of its index.
#[derive(Debug, Clone)]
pub struct HittingSet {
    params: GenParams,
}

impl HittingSet {
    pub fn new(params: GenParams) -> Self {
        Self { params }
    }

    pub fn params(&self) -> &GenParams {
        &self.params
    }

    /// Coordinates per point, `D = 2^d`.
    pub fn dimension(&self) -> usize {
        self.params.outputs()
    }

    /// `|S|^{d+1}`, saturating at `u128::MAX`.
    pub fn count(&self) -> u128 {
        let s = u128::from(self.params.s_size());
        (0..=self.params.d()).fold(1u128, |acc, _| acc.saturating_mul(s))
    }

    pub fn seed(&self, index: u128) -> Result<Vec<u64>> {
        if index >= self.count() {
            return Err(Error::InvalidArgument(format!(
                "index {index} is outside a hitting set of {} points",
                self.count()
            )));
        }
        Ok(graded_unrank(index, self.params.d() + 1))
    }

    pub fn point(&self, index: u128) -> Result<Vec<u64>> {
        let seed = self.seed(index)?;
        Ok(self.params.recurse_all(&seed))
    }

    /// Points `start, start+1, ..` up to `limit` of them, stopping at the end.
    pub fn points(&self, start: u128, limit: u128) -> impl Iterator<Item = Vec<u64>> + '_ {
        let end = start.saturating_add(limit).min(self.count());
        (start..end).map(move |i| self.point(i).expect("index in range"))
    }
}

fn pow(base: u128, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(base))
}

/// Largest `m` with `m^k <= x`.
fn int_root(x: u128, k: usize) -> u128 {
    let mut m = (x as f64).powf(1.0 / k as f64) as u128;
    while m > 0 && pow(m, k) > x {
        m -= 1;
    }
    while pow(m + 1, k) <= x {
        m += 1;
    }
    m
}

/// The `index`-th tuple of `N^k` in graded order.
fn graded_unrank(index: u128, k: usize) -> Vec<u64> {
    let m = int_root(index, k);
    let mut rest = index - pow(m, k);
    let mut digits = vec![0u64; k];
    let mut seen_max = false;
    for pos in (0..k).rev() {
        let free = pow(m + 1, pos);
        if seen_max {
            digits[pos] = (rest / free) as u64;
            rest %= free;
            continue;
        }
        // a digit below m leaves a lower tuple that must still reach m
        let below = free - pow(m, pos);
        if rest < m * below {
            digits[pos] = (rest / below) as u64;
            rest %= below;
        } else {
            digits[pos] = m as u64;
            rest -= m * below;
            seen_max = true;
        }
    }
    digits
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::generator::BoundMode;

    #[test]
    fn depth_zero_points_are_s() {
        let f = Field::new(16411).unwrap();
        let hs = HittingSet::new(GenParams::new(f, 1, 4, 1).unwrap());
        assert_eq!(hs.count(), 16);
        let pts: Vec<Vec<u64>> = hs.points(0, 100).collect();
        assert_eq!(pts, (0..16).map(|s| vec![s]).collect::<Vec<_>>());
        assert!(hs.point(16).is_err());
    }

    #[test]
    fn counts_and_pagination() {
        let f = Field::new(4099).unwrap();
        let hs = HittingSet::new(GenParams::new(f, 2, 2, 2).unwrap());
        assert_eq!(hs.count(), 128 * 128);
        assert_eq!(hs.seed(0).unwrap(), vec![0, 0]);
        assert_eq!(hs.seed(1).unwrap(), vec![1, 0]);
        assert_eq!(hs.seed(4).unwrap(), vec![2, 0]);
        assert_eq!(hs.seed(128 * 128 - 1).unwrap(), vec![127, 127]);
        let all: Vec<_> = hs.points(0, 300).collect();
        let mut paged: Vec<_> = hs.points(0, 100).collect();
        paged.extend(hs.points(100, 100));
        paged.extend(hs.points(200, 100));
        assert_eq!(all, paged);
    }

    #[test]
    fn graded_order_is_a_bijection() {
        for k in 1..4 {
            let s = 6u64;
            let total = s.pow(k as u32) as u128;
            let seeds: Vec<Vec<u64>> = (0..total).map(|i| graded_unrank(i, k)).collect();
            let mut sorted = seeds.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len() as u128, total);
            assert!(seeds.iter().all(|t| t.iter().all(|&x| x < s)));
            let grades: Vec<u64> = seeds.iter().map(|t| *t.iter().max().unwrap()).collect();
            assert!(grades.windows(2).all(|w| w[0] <= w[1]));
        }
        assert_eq!(int_root(26, 3), 2);
        assert_eq!(int_root(27, 3), 3);
        assert_eq!(int_root(u128::from(u64::MAX), 2), u128::from(u32::MAX));
    }

    #[test]
    fn relaxed_s_is_capped_by_field() {
        let f = Field::new(31).unwrap();
        let g = GenParams::with_mode(f, 2, 2, 2, BoundMode::Relaxed).unwrap();
        assert_eq!(HittingSet::new(g).count(), 31 * 31);
    }
}
