//! Dense matrices, row spaces, and the geometric-progression rank extractor.

mod extractor;
mod matrix;
mod span;

pub use extractor::{count_bad_alphas, extractor_points, merged_span_evals};
pub use matrix::Mat;
pub use span::SpanBasis;

use crate::field::Field;

/// Row space of `m`.
pub fn row_span(f: Field, m: &Mat) -> SpanBasis {
    let mut b = SpanBasis::new(f, m.cols());
    for i in 0..m.rows() {
        b.insert(m.row(i)).expect("row length matches");
    }
    b
}

pub fn rank(f: Field, m: &Mat) -> usize {
    row_span(f, m).rank()
}

/// Span of a list of equally-shaped matrices, each flattened row-major.
pub fn matrix_span<'a>(f: Field, dim: usize, mats: impl IntoIterator<Item = &'a Mat>) -> SpanBasis {
    let mut b = SpanBasis::new(f, dim);
    for m in mats {
        b.insert(m.data()).expect("matrices share a shape");
    }
    b
}
