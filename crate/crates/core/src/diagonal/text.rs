use std::fmt::Write as _;

use super::{DiagonalCircuit, Factor, Term};
use crate::error::{Error, Result};
use crate::field::{Field, UniPoly};
use crate::format;

impl DiagonalCircuit {
    /// Parses the `DIAG` text format: `TERM` opens a term, `MONO` sets its
    /// monomial, `FACTOR e=<exp>` opens a factor, and each `G <var> <coeffs>`
    /// adds a univariate summand to the current factor.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines: Vec<_> = format::lines(text).collect();
        let h = format::header(lines.first(), "DIAG", &["p", "nvars"])?;
        let head = lines.remove(0);
        let field = Field::new(h[0]).map_err(|e| head.err(e.to_string()))?;
        let n = format::to_usize(&head, h[1])?;
        if n == 0 {
            return Err(head.err("nvars must be positive"));
        }
        let mut terms: Vec<Term> = Vec::new();
        for line in &lines {
            match line.tokens[0] {
                "TERM" => terms.push(Term::default()),
                "MONO" => {
                    let term = terms
                        .last_mut()
                        .ok_or_else(|| line.err("MONO outside a TERM"))?;
                    if line.tokens.len() != n + 1 {
                        return Err(line.err(format!("MONO needs {n} exponents")));
                    }
                    let exps = (1..=n)
                        .map(|i| line.usize_at(i).map(|e| e as u64))
                        .collect::<Result<Vec<_>>>()?;
                    term.monomial = Some(exps);
                }
                "FACTOR" => {
                    let term = terms
                        .last_mut()
                        .ok_or_else(|| line.err("FACTOR outside a TERM"))?;
                    let e = line
                        .tokens
                        .get(1)
                        .and_then(|t| t.strip_prefix("e="))
                        .and_then(|t| t.parse::<u64>().ok())
                        .ok_or_else(|| line.err("expected `FACTOR e=<exponent>`"))?;
                    term.factors.push(Factor::new(e, vec![UniPoly::zero(); n]));
                }
                "G" => {
                    let factor = terms
                        .last_mut()
                        .and_then(|t| t.factors.last_mut())
                        .ok_or_else(|| line.err("G outside a FACTOR"))?;
                    line.expect_len_at_least(2)?;
                    let m = line.usize_at(1)?;
                    if m >= n {
                        return Err(line.err(format!("variable {m} is out of range")));
                    }
                    let g = UniPoly::from_coeffs(&field, line.elems_from(&field, 2)?);
                    factor.summands[m] = factor.summands[m].add(&field, &g);
                }
                other => return Err(line.err(format!("unknown record `{other}`"))),
            }
        }
        DiagonalCircuit::new(field, n, terms)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("DIAG p={} nvars={}\n", self.field().modulus(), self.nvars());
        for t in self.terms() {
            out.push_str("TERM\n");
            if let Some(c) = t.monomial() {
                out.push_str("MONO");
                for e in c {
                    let _ = write!(out, " {e}");
                }
                out.push('\n');
            }
            for fa in &t.factors {
                let _ = writeln!(out, "FACTOR e={}", fa.exponent);
                for (m, g) in fa.summands.iter().enumerate() {
                    if g.is_zero() {
                        continue;
                    }
                    let _ = write!(out, "G {m}");
                    for c in g.coeffs() {
                        let _ = write!(out, " {c}");
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

impl std::str::FromStr for DiagonalCircuit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = "DIAG p=7 nvars=2\n\
                          TERM\n\
                          FACTOR e=2\n\
                          G 0 0 1\n\
                          G 1 0 1\n\
                          TERM\n\
                          MONO 1 0\n\
                          FACTOR e=1\n\
                          G 0 -1\n";

    #[test]
    fn parse_and_round_trip() {
        let c = DiagonalCircuit::parse(SQUARE).unwrap();
        assert_eq!(c.terms().len(), 2);
        assert!(c.is_semi_diagonal());
        // (1 + 2)^2 - 1 = 8 = 1 mod 7
        assert_eq!(c.eval(&[1, 2]).unwrap(), 1);
        assert_eq!(c.to_text().parse::<DiagonalCircuit>().unwrap(), c);
    }

    #[test]
    fn structural_errors_carry_lines() {
        for (body, line) in [
            ("G 0 1\n", 2),
            ("TERM\nMONO 1\n", 3),
            ("TERM\nFACTOR 2\n", 3),
            ("TERM\nFACTOR e=1\nG 5 1\n", 4),
            ("FOO\n", 2),
        ] {
            let text = format!("DIAG p=7 nvars=2\n{body}");
            match DiagonalCircuit::parse(&text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{body}"),
                other => panic!("{body}: {other:?}"),
            }
        }
    }
}
