use super::{check_matrices, NcPoly, Staircase};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::roabp::SmAbp;

/// Edge label `c + sum_i a_i x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    pub constant: u64,
    pub linear: Vec<u64>,
}

impl Affine {
    pub fn zero(nvars: usize) -> Self {
        Self {
            constant: 0,
            linear: vec![0; nvars],
        }
    }

    pub fn constant(nvars: usize, c: u64) -> Self {
        Self {
            constant: c,
            ..Self::zero(nvars)
        }
    }

    pub fn var(nvars: usize, i: usize, c: u64) -> Self {
        let mut a = Self::zero(nvars);
        a.linear[i] = c;
        a
    }

    pub fn is_zero(&self) -> bool {
        self.constant == 0 && self.linear.iter().all(|&a| a == 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.constant == 0
    }

    fn add_scaled(&mut self, f: &Field, c: u64, other: &Self) {
        self.constant = f.mul_add(c, other.constant, self.constant);
        for (a, &b) in self.linear.iter_mut().zip(&other.linear) {
            *a = f.mul_add(c, b, *a);
        }
    }

    fn matrix(&self, f: &Field, xs: &[Mat], dim: usize) -> Mat {
        let mut m = Mat::scalar(dim, self.constant);
        for (&a, x) in self.linear.iter().zip(xs) {
            m.add_scaled(f, a, x);
        }
        m
    }

    fn as_poly(&self, f: Field) -> NcPoly {
        let n = self.linear.len();
        let mut p = NcPoly::constant(f, n, self.constant);
        for (i, &a) in self.linear.iter().enumerate() {
            p.add_term(vec![i], a);
        }
        p
    }
}

/// Layered non-commutative ABP in matrix form: layer `t` is a
/// `width x width` matrix of affine labels between node layers `t` and
/// `t+1`, and the output is entry `(0,0)` of the ordered product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcAbp {
    field: Field,
    nvars: usize,
    width: usize,
    /// `layers[t][u * width + v]`
    layers: Vec<Vec<Affine>>,
}

impl NcAbp {
    pub fn new(field: Field, nvars: usize, width: usize, layers: Vec<Vec<Affine>>) -> Result<Self> {
        if nvars == 0 || width == 0 || layers.is_empty() {
            return Err(Error::InvalidArgument(
                "variables, width and depth must be at least 1".into(),
            ));
        }
        let mut layers = layers;
        for layer in layers.iter_mut() {
            if layer.len() != width * width {
                return Err(Error::DimensionMismatch {
                    expected: width * width,
                    got: layer.len(),
                });
            }
            for label in layer.iter_mut() {
                if label.linear.len() > nvars {
                    return Err(Error::DimensionMismatch {
                        expected: nvars,
                        got: label.linear.len(),
                    });
                }
                label.linear.resize(nvars, 0);
                label.constant = field.elem(label.constant);
                label.linear.iter_mut().for_each(|a| *a = field.elem(*a));
            }
        }
        Ok(Self {
            field,
            nvars,
            width,
            layers,
        })
    }

    /// Like [`NcAbp::new`], but every label must be a homogeneous linear form.
    pub fn homogeneous(
        field: Field,
        nvars: usize,
        width: usize,
        layers: Vec<Vec<Affine>>,
    ) -> Result<Self> {
        let a = Self::new(field, nvars, width, layers)?;
        a.check_homogeneous()?;
        Ok(a)
    }

    /// Sum of one path per term; width is the number of terms.
    pub fn from_poly(p: &NcPoly) -> Self {
        let f = *p.field();
        let n = p.nvars().max(1);
        let depth = p.degree().unwrap_or(0).max(1);
        let terms: Vec<_> = p.terms().iter().collect();
        let width = terms.len().max(1);
        let mut layers = vec![vec![Affine::zero(n); width * width]; depth];
        for (t, (word, &c)) in terms.into_iter().enumerate() {
            for (k, layer) in layers.iter_mut().enumerate() {
                let from = if k == 0 { 0 } else { t };
                let to = if k + 1 == depth { 0 } else { t };
                let scale = if k == 0 { c } else { 1 };
                let label = match word.get(k) {
                    Some(&i) => Affine::var(n, i, scale),
                    None => Affine::constant(n, scale),
                };
                layer[from * width + to].add_scaled(&f, 1, &label);
            }
        }
        Self::new(f, n, width, layers).expect("shape is consistent")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn depth(&self) -> usize {
        self.layers.len()
    }

    pub fn label(&self, layer: usize, u: usize, v: usize) -> &Affine {
        &self.layers[layer][u * self.width + v]
    }

    pub fn is_homogeneous(&self) -> bool {
        self.check_homogeneous().is_ok()
    }

    fn check_homogeneous(&self) -> Result<()> {
        let w = self.width;
        for (layer, labels) in self.layers.iter().enumerate() {
            if let Some(k) = labels.iter().position(|l| !l.is_homogeneous()) {
                return Err(Error::NonHomogeneousLabel {
                    layer,
                    row: k / w,
                    col: k % w,
                });
            }
        }
        Ok(())
    }

    /// Renames `x_i` to `x_{perm[i]}`.
    pub fn rename(&self, perm: &[usize]) -> Self {
        let mut out = self.clone();
        for (label, orig) in out
            .layers
            .iter_mut()
            .flatten()
            .zip(self.layers.iter().flatten())
        {
            for (i, &a) in orig.linear.iter().enumerate() {
                label.linear[perm[i]] = a;
            }
        }
        out
    }

    /// Substitutes square matrices for the variables.
    pub fn eval_matrices(&self, xs: &[Mat]) -> Result<Mat> {
        let dim = check_matrices(xs, self.nvars)?;
        let f = &self.field;
        let w = self.width;
        let mut row: Vec<Option<Mat>> = vec![None; w];
        row[0] = Some(Mat::identity(dim));
        for labels in &self.layers {
            let mut next: Vec<Option<Mat>> = vec![None; w];
            for (v, slot) in next.iter_mut().enumerate() {
                for (u, acc) in row.iter().enumerate() {
                    let (Some(acc), label) = (acc, &labels[u * w + v]) else {
                        continue;
                    };
                    if label.is_zero() {
                        continue;
                    }
                    let term = acc.mul(f, &label.matrix(f, xs, dim));
                    match slot {
                        Some(s) => s.add_assign(f, &term),
                        None => *slot = Some(term),
                    }
                }
            }
            row = next;
        }
        Ok(row.swap_remove(0).unwrap_or_else(|| Mat::zeros(dim, dim)))
    }

    /// Evaluation at the staircase matrices of `inst`.
    pub fn staircase_eval(&self, inst: &Staircase) -> Result<Mat> {
        if self.depth() > inst.depth() {
            return Err(Error::DegreeExceedsD {
                degree: self.depth(),
                depth: inst.depth(),
            });
        }
        self.eval_matrices(&inst.matrices())
    }

    /// The computed polynomial as a sum of words.
    pub fn expand(&self) -> NcPoly {
        let f = self.field;
        let w = self.width;
        let mut row = vec![NcPoly::zero(f, self.nvars); w];
        row[0] = NcPoly::constant(f, self.nvars, 1);
        for labels in &self.layers {
            let mut next = vec![NcPoly::zero(f, self.nvars); w];
            for (v, slot) in next.iter_mut().enumerate() {
                for (u, acc) in row.iter().enumerate() {
                    let label = &labels[u * w + v];
                    if acc.is_zero() || label.is_zero() {
                        continue;
                    }
                    *slot = slot.add(&acc.mul(&label.as_poly(f)));
                }
            }
            row = next;
        }
        row.swap_remove(0)
    }

    fn constant_matrix(&self, t: usize) -> Mat {
        let w = self.width;
        Mat::from_rows(w, w, self.layers[t].iter().map(|l| l.constant).collect())
    }

    /// Constant term, read off the product of constant parts.
    pub fn constant_term(&self) -> u64 {
        let f = &self.field;
        let prod = (0..self.depth()).fold(Mat::identity(self.width), |acc, t| {
            acc.mul(f, &self.constant_matrix(t))
        });
        prod[(0, 0)]
    }

    /// An ABP of depth `l` with homogeneous linear labels computing the
    /// degree-`l` component.
    ///
    /// Node `(t, v)` of new layer `k` is original node `v` at layer `t`,
    /// reached by a path whose `k`-th linear edge ends at `t`. Runs of
    /// constant edges between linear ones are multiplied out, so only
    /// `t` in `k ..= D - l + k` can still complete, giving width
    /// `r (D - l + 1)`.
    pub fn homogeneous_part(&self, l: usize) -> Result<Self> {
        let d = self.depth();
        if l == 0 || l > d {
            return Err(Error::BadDegreeIndex { index: l, depth: d });
        }
        let f = self.field;
        let r = self.width;
        let n = self.nvars;
        // cst[a][b] = C_a .. C_{b-1}
        let consts: Vec<Mat> = (0..d).map(|t| self.constant_matrix(t)).collect();
        let mut cst = vec![vec![Mat::identity(r); d + 1]; d + 1];
        #[allow(clippy::needless_range_loop)]
        for a in 0..=d {
            for b in a + 1..=d {
                cst[a][b] = cst[a][b - 1].mul(&f, &consts[b - 1]);
            }
        }
        let slack = d - l;
        let width = r * (slack + 1);
        assert!(width <= r * (d + 1), "homogenised width exceeds r(D+1)");
        // label of a path segment from (t, v) through constant edges to the
        // linear edge of layer t2 - 1, arriving at node u of layer t2
        let segment = |t: usize, v: usize, t2: usize, u: usize| {
            let mut lab = Affine::zero(n);
            for mid in 0..r {
                let c = cst[t][t2 - 1][(v, mid)];
                if c != 0 {
                    let lin = &self.layers[t2 - 1][mid * r + u];
                    for (a, &b) in lab.linear.iter_mut().zip(&lin.linear) {
                        *a = f.mul_add(c, b, *a);
                    }
                }
            }
            lab
        };
        let mut layers = Vec::with_capacity(l);
        for k in 0..l {
            let mut labels = vec![Affine::zero(n); width * width];
            let sources = if k == 0 { 0..=0 } else { k..=slack + k };
            for t in sources {
                for v in 0..r {
                    let from = (t - k) * r + v;
                    for t2 in (t + 1).max(k + 1)..=slack + k + 1 {
                        for u in 0..r {
                            let lab = segment(t, v, t2, u);
                            if k + 1 < l {
                                labels[from * width + (t2 - k - 1) * r + u] = lab;
                            } else {
                                let tail = cst[t2][d][(u, 0)];
                                labels[from * width].add_scaled(&f, tail, &lab);
                            }
                        }
                    }
                }
            }
            layers.push(labels);
        }
        Self::homogeneous(f, n, width, layers)
    }

    /// Position `j` of a homogeneous ABP reads block `{x_{i,j}}_i`.
    pub fn to_sm_abp(&self) -> Result<SmAbp> {
        self.check_homogeneous()?;
        let layers = self
            .layers
            .iter()
            .map(|labels| labels.iter().map(|l| l.linear.clone()).collect())
            .collect();
        SmAbp::new(self.field, self.width, self.nvars, layers)
    }
}
