//! Identity tests: the deterministic black-box scan, white-box span
//! propagation, dense brute force, and randomized Schwartz-Zippel.

mod dense;
pub mod scan;

pub use dense::{expand_dense, DenseTable, DENSE_LIMIT};
pub use scan::{find_first, Exec, ScanResult};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::generator::{GenParams, HittingSet};
use crate::linalg::SpanBasis;
use crate::roabp::Roabp;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PitVerdict<W = Vec<u64>> {
    pub is_zero: bool,
    /// A point with nonzero value, when the mode produces one.
    pub witness: Option<W>,
    /// Position of the witness in the enumeration it came from.
    pub witness_index: Option<u128>,
    pub points_tested: u128,
}

impl<W> PitVerdict<W> {
    pub fn zero(points_tested: u128) -> Self {
        Self {
            is_zero: true,
            witness: None,
            witness_index: None,
            points_tested,
        }
    }

    fn from_scan(scan: ScanResult<W>) -> Self {
        match scan.hit {
            Some((idx, w)) => Self {
                is_zero: false,
                witness: Some(w),
                witness_index: Some(idx),
                points_tested: scan.tested,
            },
            None => Self::zero(scan.tested),
        }
    }
}

/// Declared size of the ROABP behind a black-box oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RoabpShape {
    pub width: usize,
    pub depth: usize,
    pub degree: usize,
}

impl RoabpShape {
    pub fn of(a: &Roabp) -> Self {
        Self {
            width: a.width(),
            depth: a.depth(),
            degree: a.degree(),
        }
    }

    /// Hitting set for the padded depth `2^ceil(lg D)`.
    pub fn hitting_set(&self, field: Field) -> Result<HittingSet> {
        let padded = self.depth.max(1).next_power_of_two();
        Ok(HittingSet::new(GenParams::new(
            field,
            padded,
            self.degree,
            self.width,
        )?))
    }
}

/// Scans a hitting set; `probe` maps a point to `Some(witness)` when the
/// polynomial is nonzero there.
pub fn scan_hitting_set<W, F>(hs: &HittingSet, exec: Exec, probe: F) -> Result<PitVerdict<W>>
where
    W: Send,
    F: Fn(&[u64]) -> Option<W> + Sync,
{
    let scan = find_first(hs.count(), exec, |i| {
        let pt = hs.point(i).expect("index below count");
        probe(&pt)
    })?;
    Ok(PitVerdict::from_scan(scan))
}

/// Deterministic black-box test. The verdict is correct whenever `oracle`
/// really is computed by an ROABP of the declared shape (in the variable
/// order `x_0, .., x_{D-1}`); nothing can check that promise.
pub fn blackbox_pit_roabp<F>(
    field: Field,
    shape: RoabpShape,
    exec: Exec,
    oracle: F,
) -> Result<PitVerdict>
where
    F: Fn(&[u64]) -> u64 + Sync,
{
    let hs = shape.hitting_set(field)?;
    blackbox_pit_roabp_with(&hs, shape.depth, exec, oracle)
}

/// [`blackbox_pit_roabp`] over a prebuilt hitting set; only the first
/// `arity` coordinates of each point reach the oracle.
pub fn blackbox_pit_roabp_with<F>(
    hs: &HittingSet,
    arity: usize,
    exec: Exec,
    oracle: F,
) -> Result<PitVerdict>
where
    F: Fn(&[u64]) -> u64 + Sync,
{
    if arity > hs.dimension() {
        return Err(Error::ArityMismatch {
            expected: hs.dimension(),
            got: arity,
        });
    }
    let verdict = scan_hitting_set(hs, exec, |pt| {
        let x = &pt[..arity];
        (oracle(x) != 0).then(|| x.to_vec())
    })?;
    if let Some(w) = &verdict.witness {
        if oracle(w) == 0 {
            return Err(Error::InvalidArgument(
                "oracle is not deterministic: witness re-evaluated to zero".into(),
            ));
        }
    }
    Ok(verdict)
}

/// Rank of the propagated row span after each layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhiteboxTrace {
    pub ranks: Vec<usize>,
}

impl WhiteboxTrace {
    pub fn max_rank(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }
}

/// White-box test by propagating the span of `e_0 * prod_{i<k} M_i(x_i)`
/// through the coefficient matrices of each layer.
pub fn whitebox_pit_roabp(a: &Roabp) -> PitVerdict {
    whitebox_with_trace(a).0
}

pub fn whitebox_with_trace(a: &Roabp) -> (PitVerdict, WhiteboxTrace) {
    let f = *a.field();
    let r = a.width();
    let mut e0 = vec![0u64; r];
    e0[0] = 1;
    let mut basis = vec![e0];
    let mut ranks = Vec::with_capacity(a.depth());
    for layer in a.layers() {
        let mut next = SpanBasis::new(f, r);
        for c in layer.coeff_matrices(a.degree()) {
            for v in &basis {
                next.insert(&c.left_mul_vec(&f, v)).expect("width matches");
            }
        }
        ranks.push(next.rank());
        basis = next.rows().to_vec();
        if basis.is_empty() {
            break;
        }
    }
    let is_zero = basis.iter().all(|v| v[0] == 0);
    let verdict = PitVerdict {
        is_zero,
        witness: None,
        witness_index: None,
        points_tested: 0,
    };
    (verdict, WhiteboxTrace { ranks })
}

/// First point of the grid `[0, side)^arity` (first coordinate fastest)
/// where `oracle` is nonzero.
pub fn grid_search<F>(arity: usize, side: u64, exec: Exec, oracle: F) -> Result<PitVerdict>
where
    F: Fn(&[u64]) -> u64 + Sync,
{
    let count = (0..arity).try_fold(1u128, |acc, _| acc.checked_mul(u128::from(side)));
    let count = count.ok_or(Error::TooLarge(u128::MAX))?;
    let scan = find_first(count, exec, |mut i| {
        let pt: Vec<u64> = (0..arity)
            .map(|_| {
                let c = (i % u128::from(side)) as u64;
                i /= u128::from(side);
                c
            })
            .collect();
        (oracle(&pt) != 0).then_some(pt)
    })?;
    Ok(PitVerdict::from_scan(scan))
}

/// Exact test by dense expansion. When nonzero, a witness is searched on
/// the grid of side `min(n, p)`, which must contain one if `p >= n`.
pub fn bruteforce_pit(a: &Roabp) -> Result<PitVerdict> {
    let table = expand_dense(a)?;
    if table.is_zero() {
        return Ok(PitVerdict::zero(table.coeffs().len() as u128));
    }
    let side = (a.degree() as u64).min(a.field().modulus());
    let found = grid_search(a.depth(), side, Exec::Sequential, |x| a.eval_unchecked(x))?;
    Ok(PitVerdict {
        is_zero: false,
        ..found
    })
}

/// Randomized test at `trials` uniform points of `F^arity`. A nonzero verdict
/// is certain; a zero verdict errs with probability at most
/// `(total_degree / p)^trials`.
pub fn schwartz_zippel<F>(
    field: Field,
    arity: usize,
    total_degree: u64,
    trials: u64,
    seed: u64,
    oracle: F,
) -> Result<PitVerdict>
where
    F: Fn(&[u64]) -> u64,
{
    if field.modulus() <= total_degree {
        return Err(Error::FieldTooSmallForDegree {
            modulus: field.modulus(),
            degree: total_degree,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let pt: Vec<u64> = (0..arity)
            .map(|_| rng.gen_range(0..field.modulus()))
            .collect();
        if oracle(&pt) != 0 {
            return Ok(PitVerdict {
                is_zero: false,
                witness: Some(pt),
                witness_index: Some(u128::from(t)),
                points_tested: u128::from(t) + 1,
            });
        }
    }
    Ok(PitVerdict::zero(u128::from(trials)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::UniPoly;
    use crate::roabp::Layer;

    fn xy_minus_one(f: Field) -> Roabp {
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

    fn telescoping(f: Field) -> Roabp {
        let x = UniPoly::x();
        let m0 = Layer::from_entries(
            2,
            vec![x.clone(), x.neg(&f), UniPoly::zero(), UniPoly::zero()],
        );
        let m1 = Layer::from_entries(2, vec![x.clone(), UniPoly::zero(), x, UniPoly::zero()]);
        Roabp::new(f, 2, 2, vec![m0, m1]).unwrap()
    }

    #[test]
    fn blackbox_examples() {
        let f = Field::new(4099).unwrap();
        let shape = RoabpShape {
            width: 2,
            depth: 2,
            degree: 2,
        };
        let zero = blackbox_pit_roabp(f, shape, Exec::Sequential, |_| 0).unwrap();
        assert!(zero.is_zero);
        assert_eq!(zero.points_tested, 128 * 128);

        let a = xy_minus_one(f);
        let v = blackbox_pit_roabp(f, shape, Exec::Sequential, |x| a.eval(x).unwrap()).unwrap();
        assert!(!v.is_zero);
        assert_ne!(a.eval(v.witness.as_ref().unwrap()).unwrap(), 0);
        assert!(bruteforce_pit(&a).unwrap().witness.is_some());

        let small = Field::new(4093).unwrap();
        assert!(matches!(
            blackbox_pit_roabp(small, shape, Exec::Sequential, |_| 0),
            Err(Error::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn promise_violation_can_fool_the_scan() {
        // prod_{s < 16} (x - s) has degree 16, far above the declared n = 4,
        // and vanishes on the whole seed set {0, .., 15}
        let f = Field::new(16411).unwrap();
        let shape = RoabpShape {
            width: 1,
            depth: 1,
            degree: 4,
        };
        let vanishing = |x: &[u64]| (0..16u64).fold(1, |acc, s| f.mul(acc, f.sub(x[0], s)));
        let v = blackbox_pit_roabp(f, shape, Exec::Sequential, vanishing).unwrap();
        assert!(v.is_zero);
        assert_ne!(vanishing(&[16]), 0);
    }

    #[test]
    fn whitebox_examples() {
        let f = Field::new(7).unwrap();
        assert!(whitebox_pit_roabp(&telescoping(f)).is_zero);
        let (v, trace) = whitebox_with_trace(&xy_minus_one(f));
        assert!(!v.is_zero);
        assert!(trace.max_rank() <= 2);
    }

    #[test]
    fn brute_force_examples() {
        let f = Field::new(7).unwrap();
        assert!(bruteforce_pit(&telescoping(f)).unwrap().is_zero);
        let v = bruteforce_pit(&xy_minus_one(f)).unwrap();
        assert_eq!(v.witness, Some(vec![0, 0]));
    }

    #[test]
    fn schwartz_zippel_examples() {
        let f = Field::new(16411).unwrap();
        assert!(schwartz_zippel(f, 2, 2, 5, 1, |_| 0).unwrap().is_zero);
        let one = schwartz_zippel(f, 2, 0, 5, 9, |_| 1).unwrap();
        assert_eq!(one.points_tested, 1);
        let a = xy_minus_one(f);
        let found = (0..1000)
            .filter(|&seed| {
                !schwartz_zippel(f, 2, 2, 5, seed, |x| a.eval(x).unwrap())
                    .unwrap()
                    .is_zero
            })
            .count();
        assert_eq!(found, 1000);
        assert!(matches!(
            schwartz_zippel(Field::new(3).unwrap(), 1, 3, 1, 0, |_| 0),
            Err(Error::FieldTooSmallForDegree { .. })
        ));
    }
}
