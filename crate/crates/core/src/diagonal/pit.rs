use super::DiagonalCircuit;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::generator::{BoundMode, GenParams, HittingSet};
use crate::pit::{blackbox_pit_roabp_with, Exec, PitVerdict};

/// Declared size of a (semi-)diagonal circuit: `n` variables, `k` terms,
/// summand and monomial degree `<= d`, and `|e_i|_x <= e` for every term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagShape {
    pub nvars: usize,
    pub terms: usize,
    pub degree: usize,
    pub mult: usize,
    pub semi: bool,
}

impl DiagShape {
    /// The tightest shape describing `c`, with every parameter at least 1.
    pub fn of(c: &DiagonalCircuit) -> Self {
        Self {
            nvars: c.nvars(),
            terms: c.terms().len().max(1),
            degree: (c.degree() as usize).max(1),
            mult: usize::try_from(c.max_mult_size()).unwrap_or(usize::MAX),
            semi: c.is_semi_diagonal(),
        }
    }

    /// `(2ndk^3e^4)^2`, or `(4ndk^3e^4)^2` with monomials.
    pub fn field_bound(&self) -> u128 {
        let lead = if self.semi { 4u128 } else { 2 };
        let base = [self.nvars, self.degree, self.terms.pow(3), self.mult.pow(4)]
            .iter()
            .fold(lead, |acc, &x| acc.saturating_mul(x as u128));
        base.saturating_mul(base)
    }

    /// Width `ke` of the equivalent ROABP.
    pub fn roabp_width(&self) -> usize {
        self.terms * self.mult
    }

    /// Coefficients per layer: every individual degree is at most
    /// `(e-1)d` plus `d` for a monomial, so `ed` (or `ed + d`) suffices.
    pub fn roabp_degree(&self) -> usize {
        let base = self.mult * self.degree;
        if self.semi {
            base + self.degree
        } else {
            base
        }
    }

    pub fn hitting_set(&self, field: Field) -> Result<HittingSet> {
        let required = self.field_bound();
        if u128::from(field.modulus()) < required {
            return Err(Error::FieldTooSmall {
                modulus: field.modulus(),
                required,
                bound: if self.semi {
                    "(4ndk^3e^4)^2"
                } else {
                    "(2ndk^3e^4)^2"
                },
            });
        }
        Ok(HittingSet::new(GenParams::with_mode(
            field,
            self.nvars.next_power_of_two(),
            self.roabp_degree(),
            self.roabp_width(),
            BoundMode::Construction,
        )?))
    }
}

/// Black-box test of an evaluation oracle promised to be a circuit of the
/// declared shape. Only the oracle is queried; the ROABP reduction only
/// fixes the hitting-set parameters.
pub fn blackbox_pit_diagonal<F>(
    field: Field,
    shape: DiagShape,
    exec: Exec,
    oracle: F,
) -> Result<PitVerdict>
where
    F: Fn(&[u64]) -> u64 + Sync,
{
    let params = [shape.nvars, shape.terms, shape.degree, shape.mult];
    if params.contains(&0) {
        return Err(Error::InvalidArgument(
            "n, k, d and e must be at least 1".into(),
        ));
    }
    let hs = shape.hitting_set(field)?;
    blackbox_pit_roabp_with(&hs, shape.nvars, exec, oracle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagonal::{Factor, Term};
    use crate::field::UniPoly;

    fn square(f: &Field) -> DiagonalCircuit {
        let g = vec![UniPoly::x(), UniPoly::x()];
        DiagonalCircuit::new(*f, 2, vec![Term::new(None, vec![Factor::new(2, g)])]).unwrap()
    }

    #[test]
    fn shape_and_bounds() {
        let f = Field::new(7).unwrap();
        let s = DiagShape::of(&square(&f));
        assert_eq!(
            s,
            DiagShape {
                nvars: 2,
                terms: 1,
                degree: 1,
                mult: 3,
                semi: false
            }
        );
        assert_eq!(s.field_bound(), (2 * 2 * 81u128).pow(2));
        assert_eq!((s.roabp_width(), s.roabp_degree()), (3, 3));
        let semi = DiagShape { semi: true, ..s };
        assert_eq!(semi.field_bound(), (4 * 2 * 81u128).pow(2));
        assert_eq!(semi.roabp_degree(), 4);
        assert!(matches!(
            blackbox_pit_diagonal(f, s, Exec::Sequential, |_| 0),
            Err(Error::FieldTooSmall {
                bound: "(2ndk^3e^4)^2",
                ..
            })
        ));
    }

    #[test]
    fn square_is_nonzero() {
        let s = DiagShape::of(&square(&Field::new(7).unwrap()));
        let f = Field::at_least(s.field_bound()).unwrap();
        let c = square(&f);
        let v = blackbox_pit_diagonal(f, s, Exec::Sequential, |x| c.eval(x).unwrap()).unwrap();
        assert!(!v.is_zero);
        assert_ne!(c.eval(&v.witness.unwrap()).unwrap(), 0);
    }

    #[test]
    fn tiny_zero_circuit_survives_a_full_scan() {
        // x_0 - x_0 as two one-variable terms
        let s = DiagShape {
            nvars: 1,
            terms: 2,
            degree: 1,
            mult: 2,
            semi: false,
        };
        let f = Field::at_least(s.field_bound()).unwrap();
        let t = |c: i64| {
            Term::new(
                None,
                vec![Factor::new(1, vec![UniPoly::from_signed(&f, &[0, c])])],
            )
        };
        let c = DiagonalCircuit::new(f, 1, vec![t(1), t(-1)]).unwrap();
        let v = blackbox_pit_diagonal(f, s, Exec::Sequential, |x| c.eval(x).unwrap()).unwrap();
        assert!(v.is_zero);
        assert_eq!(v.points_tested, s.hitting_set(f).unwrap().count());
    }
}
