use super::Staircase;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::generator::{BoundMode, GenParams, HittingSet};
use crate::linalg::Mat;
use crate::pit::{find_first, Exec, PitVerdict};

/// Declared size of a non-commutative ABP: `nvars` variables, width `r`,
/// depth `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NcShape {
    pub nvars: usize,
    pub width: usize,
    pub depth: usize,
}

/// `(2 (D+1)^5 n r^4)^2`, saturating.
pub fn nc_field_bound(shape: NcShape) -> u128 {
    let d1 = shape.depth as u128 + 1;
    let base = 2u128
        .saturating_mul(d1.saturating_pow(5))
        .saturating_mul(shape.nvars as u128)
        .saturating_mul((shape.width as u128).saturating_pow(4));
    base.saturating_mul(base)
}

/// Tuples of `(D+1) x (D+1)` staircase matrices.
///
/// Each homogeneous part `hom_l f` becomes, after the staircase reduction, a
/// set-multilinear ABP of width `r(D+1)` over blocks `{x_{i,j}}_i`; the
/// Kronecker map `x_{i,j} = y_{j-1}^i` makes it an ROABP of individual degree
/// `< n` in `y_0, .., y_{D-1}`. One ROABP hitting set for that shape covers
/// every `l` at once.
#[derive(Debug, Clone)]
pub struct NcHittingSet {
    inner: HittingSet,
    shape: NcShape,
}

impl NcHittingSet {
    /// Requires `p >= (2 (D+1)^5 n r^4)^2`.
    pub fn new(field: Field, shape: NcShape) -> Result<Self> {
        Self::with_mode(field, shape, BoundMode::Theorem)
    }

    /// `Theorem` checks the non-commutative bound and then builds the
    /// generator in `Construction` mode; the other modes go straight to the
    /// generator.
    pub fn with_mode(field: Field, shape: NcShape, mode: BoundMode) -> Result<Self> {
        if shape.nvars == 0 || shape.width == 0 || shape.depth == 0 {
            return Err(Error::InvalidArgument(
                "variables, width and depth must be at least 1".into(),
            ));
        }
        let mode = match mode {
            BoundMode::Theorem => {
                let required = nc_field_bound(shape);
                if u128::from(field.modulus()) < required {
                    return Err(Error::FieldTooSmall {
                        modulus: field.modulus(),
                        required,
                        bound: "(2(D+1)^5nr^4)^2",
                    });
                }
                BoundMode::Construction
            }
            other => other,
        };
        let params = GenParams::with_mode(
            field,
            shape.depth.next_power_of_two(),
            shape.nvars,
            shape.width * (shape.depth + 1),
            mode,
        )?;
        Ok(Self {
            inner: HittingSet::new(params),
            shape,
        })
    }

    pub fn shape(&self) -> NcShape {
        self.shape
    }

    /// The underlying commutative hitting set in `y_0, .., y_{D'-1}`.
    pub fn roabp_hitting_set(&self) -> &HittingSet {
        &self.inner
    }

    pub fn count(&self) -> u128 {
        self.inner.count()
    }

    pub fn staircase(&self, index: u128) -> Result<Staircase> {
        let y = self.inner.point(index)?;
        Staircase::from_kronecker(
            *self.inner.params().field(),
            self.shape.nvars,
            &y[..self.shape.depth],
        )
    }

    pub fn point(&self, index: u128) -> Result<Vec<Mat>> {
        Ok(self.staircase(index)?.matrices())
    }
}

/// Deterministic black-box test for a matrix-evaluation oracle promised to
/// come from an ABP of the declared shape.
pub fn blackbox_pit_ncabp<F>(
    field: Field,
    shape: NcShape,
    exec: Exec,
    oracle: F,
) -> Result<PitVerdict<Vec<Mat>>>
where
    F: Fn(&[Mat]) -> Mat + Sync,
{
    let hs = NcHittingSet::new(field, shape)?;
    blackbox_pit_ncabp_with(&hs, exec, oracle)
}

pub fn blackbox_pit_ncabp_with<F>(
    hs: &NcHittingSet,
    exec: Exec,
    oracle: F,
) -> Result<PitVerdict<Vec<Mat>>>
where
    F: Fn(&[Mat]) -> Mat + Sync,
{
    let scan = find_first(hs.count(), exec, |i| {
        let xs = hs.point(i).expect("index below count");
        (!oracle(&xs).is_zero()).then_some(xs)
    })?;
    Ok(match scan.hit {
        Some((idx, xs)) => PitVerdict {
            is_zero: false,
            witness: Some(xs),
            witness_index: Some(idx),
            points_tested: scan.tested,
        },
        None => PitVerdict::zero(scan.tested),
    })
}
