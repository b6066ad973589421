//! Shared helpers for the line-oriented text formats.
//!
//! Every format is whitespace separated, `#` starts a comment, blank lines
//! are ignored, and the first remaining line is a header of the form
//! `KIND key=value ...`.

use crate::error::{Error, Result};
use crate::field::Field;

/// A non-empty, comment-stripped line with its 1-based line number.
#[derive(Debug, Clone)]
pub struct Line<'a> {
    pub number: usize,
    pub tokens: Vec<&'a str>,
}

impl<'a> Line<'a> {
    pub fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            line: self.number,
            msg: msg.into(),
        }
    }

    pub fn expect_len_at_least(&self, n: usize) -> Result<()> {
        if self.tokens.len() < n {
            return Err(self.err(format!("expected at least {n} fields")));
        }
        Ok(())
    }

    pub fn usize_at(&self, i: usize) -> Result<usize> {
        let t = self
            .tokens
            .get(i)
            .ok_or_else(|| self.err("missing field"))?;
        t.parse()
            .map_err(|_| self.err(format!("`{t}` is not a non-negative integer")))
    }

    /// A field element; negative literals are reduced mod `p`.
    pub fn elem_at(&self, f: &Field, i: usize) -> Result<u64> {
        let t = self
            .tokens
            .get(i)
            .ok_or_else(|| self.err("missing field"))?;
        parse_elem(f, t).ok_or_else(|| self.err(format!("`{t}` is not an integer")))
    }

    pub fn elems_from(&self, f: &Field, start: usize) -> Result<Vec<u64>> {
        (start..self.tokens.len())
            .map(|i| self.elem_at(f, i))
            .collect()
    }
}

pub fn parse_elem(f: &Field, t: &str) -> Option<u64> {
    if let Ok(v) = t.parse::<u64>() {
        return Some(f.elem(v));
    }
    t.parse::<i64>().ok().map(|v| f.from_i64(v))
}

pub fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some(Line {
            number: i + 1,
            tokens,
        })
    })
}

/// Parses `KIND k1=v1 k2=v2 ...` and returns the values of `keys` in order.
pub fn header(line: Option<&Line<'_>>, kind: &str, keys: &[&str]) -> Result<Vec<u64>> {
    let line = line.ok_or(Error::Parse {
        line: 0,
        msg: format!("empty input, expected a {kind} header"),
    })?;
    if line.tokens[0] != kind {
        return Err(line.err(format!(
            "expected header `{kind}`, found `{}`",
            line.tokens[0]
        )));
    }
    let mut values = vec![None; keys.len()];
    for tok in &line.tokens[1..] {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| line.err(format!("malformed header field `{tok}`")))?;
        let slot = keys
            .iter()
            .position(|&key| key == k)
            .ok_or_else(|| line.err(format!("unknown header key `{k}`")))?;
        let v: u64 = v
            .parse()
            .map_err(|_| line.err(format!("header value `{v}` is not an integer")))?;
        values[slot] = Some(v);
    }
    keys.iter()
        .zip(values)
        .map(|(k, v)| v.ok_or_else(|| line.err(format!("header is missing `{k}=`"))))
        .collect()
}

pub fn to_usize(line: &Line<'_>, v: u64) -> Result<usize> {
    usize::try_from(v).map_err(|_| line.err(format!("{v} is too large")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_headers() {
        let text = "# leading comment\n\nROABP p=7 width=2 # trailing\n  L 0 0 0 1 -1\n";
        let ls: Vec<_> = lines(text).collect();
        assert_eq!(ls.len(), 2);
        assert_eq!(ls[0].number, 3);
        let h = header(ls.first(), "ROABP", &["width", "p"]).unwrap();
        assert_eq!(h, vec![2, 7]);
        let f = Field::new(7).unwrap();
        assert_eq!(ls[1].elems_from(&f, 4).unwrap(), vec![1, 6]);
        assert!(header(ls.first(), "ROABP", &["depth"]).is_err());
        assert!(header(ls.first(), "SMABP", &[]).is_err());
        assert!(header(None, "ROABP", &[]).is_err());
    }
}
