use std::fmt::Write as _;

use super::{Layer, Roabp, SmAbp};
use crate::error::{Error, Result};
use crate::field::{Field, UniPoly};
use crate::format::{self, Line};

struct Shape {
    field: Field,
    width: usize,
    depth: usize,
    degree: usize,
}

fn parse_shape<'a>(text: &'a str, kind: &str) -> Result<(Shape, Vec<Line<'a>>)> {
    let mut lines: Vec<Line<'a>> = format::lines(text).collect();
    let h = format::header(lines.first(), kind, &["p", "width", "depth", "degree"])?;
    let head = lines.remove(0);
    let field = Field::new(h[0]).map_err(|e| head.err(e.to_string()))?;
    let (width, depth, degree) = (
        format::to_usize(&head, h[1])?,
        format::to_usize(&head, h[2])?,
        format::to_usize(&head, h[3])?,
    );
    if width == 0 || depth == 0 || degree == 0 {
        return Err(head.err("width, depth and degree must be positive"));
    }
    Ok((
        Shape {
            field,
            width,
            depth,
            degree,
        },
        lines,
    ))
}

/// Reads `L <i> <row> <col> <coeffs...>` lines and hands each validated
/// entry to `put`.
fn for_each_entry(
    shape: &Shape,
    lines: &[Line<'_>],
    mut put: impl FnMut(usize, usize, usize, Vec<u64>),
) -> Result<()> {
    for line in lines {
        if line.tokens[0] != "L" {
            return Err(line.err(format!("unknown record `{}`", line.tokens[0])));
        }
        line.expect_len_at_least(4)?;
        let (i, u, v) = (line.usize_at(1)?, line.usize_at(2)?, line.usize_at(3)?);
        if i >= shape.depth || u >= shape.width || v >= shape.width {
            return Err(line.err(format!("entry ({i},{u},{v}) is out of range")));
        }
        let coeffs = line.elems_from(&shape.field, 4)?;
        if coeffs.len() > shape.degree {
            return Err(line.err(format!("more than {} coefficients", shape.degree)));
        }
        put(i, u, v, coeffs);
    }
    Ok(())
}

fn write_entries(
    out: &mut String,
    width: usize,
    depth: usize,
    entry: impl Fn(usize, usize, usize) -> Vec<u64>,
) {
    for i in 0..depth {
        for u in 0..width {
            for v in 0..width {
                let c = entry(i, u, v);
                if c.iter().all(|&x| x == 0) {
                    continue;
                }
                let _ = write!(out, "L {i} {u} {v}");
                for x in c {
                    let _ = write!(out, " {x}");
                }
                out.push('\n');
            }
        }
    }
}

impl Roabp {
    /// Parses the `ROABP` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let (shape, lines) = parse_shape(text, "ROABP")?;
        let f = shape.field;
        let mut layers = vec![Layer::zero(shape.width); shape.depth];
        for_each_entry(&shape, &lines, |i, u, v, c| {
            layers[i].set(u, v, UniPoly::from_coeffs(&f, c));
        })?;
        Roabp::new(f, shape.width, shape.degree, layers)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "ROABP p={} width={} depth={} degree={}\n",
            self.field().modulus(),
            self.width(),
            self.depth(),
            self.degree()
        );
        write_entries(&mut out, self.width(), self.depth(), |i, u, v| {
            self.layer(i).get(u, v).coeffs().to_vec()
        });
        out
    }
}

impl SmAbp {
    /// Parses the `SMABP` text format.
    pub fn parse(text: &str) -> Result<Self> {
        let (shape, lines) = parse_shape(text, "SMABP")?;
        let w = shape.width;
        let mut layers = vec![vec![Vec::new(); w * w]; shape.depth];
        for_each_entry(&shape, &lines, |i, u, v, c| layers[i][u * w + v] = c)?;
        SmAbp::new(shape.field, w, shape.degree, layers)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "SMABP p={} width={} depth={} degree={}\n",
            self.field().modulus(),
            self.width(),
            self.depth(),
            self.degree()
        );
        write_entries(&mut out, self.width(), self.depth(), |i, u, v| {
            self.entry(i, u, v).to_vec()
        });
        out
    }
}

impl std::str::FromStr for Roabp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl std::str::FromStr for SmAbp {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
