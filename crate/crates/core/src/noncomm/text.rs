use std::fmt::Write as _;

use super::{Affine, NcAbp};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format;

impl NcAbp {
    /// Parses the `NCABP` text format. Repeated `E` records for one entry
    /// are summed, like parallel edges.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines: Vec<_> = format::lines(text).collect();
        let h = format::header(lines.first(), "NCABP", &["p", "nvars", "width", "depth"])?;
        let head = lines.remove(0);
        let field = Field::new(h[0]).map_err(|e| head.err(e.to_string()))?;
        let (n, w, d) = (
            format::to_usize(&head, h[1])?,
            format::to_usize(&head, h[2])?,
            format::to_usize(&head, h[3])?,
        );
        if n == 0 || w == 0 || d == 0 {
            return Err(head.err("nvars, width and depth must be positive"));
        }
        let mut layers = vec![vec![Affine::zero(n); w * w]; d];
        for line in &lines {
            if line.tokens[0] != "E" {
                return Err(line.err(format!("unknown record `{}`", line.tokens[0])));
            }
            line.expect_len_at_least(5)?;
            let (t, u, v) = (line.usize_at(1)?, line.usize_at(2)?, line.usize_at(3)?);
            if t >= d || u >= w || v >= w {
                return Err(line.err(format!("edge ({t},{u},{v}) is out of range")));
            }
            let c = line.elem_at(&field, 4)?;
            let lin = line.elems_from(&field, 5)?;
            if lin.len() > n {
                return Err(line.err(format!("more than {n} linear coefficients")));
            }
            let label = &mut layers[t][u * w + v];
            label.constant = field.add(label.constant, c);
            for (a, b) in label.linear.iter_mut().zip(lin) {
                *a = field.add(*a, b);
            }
        }
        NcAbp::new(field, n, w, layers)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "NCABP p={} nvars={} width={} depth={}\n",
            self.field().modulus(),
            self.nvars(),
            self.width(),
            self.depth()
        );
        for t in 0..self.depth() {
            for u in 0..self.width() {
                for v in 0..self.width() {
                    let l = self.label(t, u, v);
                    if l.is_zero() {
                        continue;
                    }
                    let _ = write!(out, "E {t} {u} {v} {}", l.constant);
                    for a in &l.linear {
                        let _ = write!(out, " {a}");
                    }
                    out.push('\n');
                }
            }
        }
        out
    }
}

impl std::str::FromStr for NcAbp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noncomm::NcPoly;

    #[test]
    fn commutator_file() {
        let text = "NCABP p=101 nvars=2 width=2 depth=2\n\
                    E 0 0 0 0 1 0\n\
                    E 0 0 1 0 0 1\n\
                    E 1 0 0 0 0 1\n\
                    E 1 1 0 0 -1 0\n";
        let a = NcAbp::parse(text).unwrap();
        let f = Field::new(101).unwrap();
        let expect = NcPoly::from_terms(f, 2, [(vec![0, 1], 1), (vec![1, 0], -1)]).unwrap();
        assert_eq!(a.expand(), expect);
        assert_eq!(a.to_text().parse::<NcAbp>().unwrap(), a);
    }

    #[test]
    fn parallel_records_add_and_errors_name_lines() {
        let a =
            NcAbp::parse("NCABP p=7 nvars=1 width=1 depth=1\nE 0 0 0 3 1\nE 0 0 0 5\n").unwrap();
        assert_eq!(
            a.label(0, 0, 0),
            &Affine {
                constant: 1,
                linear: vec![1]
            }
        );
        let bad = NcAbp::parse("NCABP p=7 nvars=1 width=1 depth=1\n\nE 1 0 0 1\n");
        assert!(matches!(bad, Err(Error::Parse { line: 3, .. })));
        let wide = NcAbp::parse("NCABP p=7 nvars=1 width=1 depth=1\nE 0 0 0 1 2 3\n");
        assert!(matches!(wide, Err(Error::Parse { line: 2, .. })));
    }
}
