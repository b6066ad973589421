use super::{Layer, Roabp};
use crate::error::{Error, Result};
use crate::field::{Field, UniPoly};

/// Edge from node `from.1` of layer `from.0` to node `to.1` of layer `to.0`.
/// Only edges with `to.0 == from.0 + 1` are legal; the label is in `x_{from.0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: (usize, usize),
    pub to: (usize, usize),
    pub label: UniPoly,
}

impl GraphEdge {
    pub fn new(layer: usize, u: usize, v: usize, label: UniPoly) -> Self {
        Self {
            from: (layer, u),
            to: (layer + 1, v),
            label,
        }
    }
}

/// Layered DAG form of an ROABP, with node layers `0..=D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphAbp {
    field: Field,
    degree: usize,
    layer_sizes: Vec<usize>,
    edges: Vec<GraphEdge>,
    source: usize,
    sink: usize,
}

impl GraphAbp {
    pub fn new(
        field: Field,
        degree: usize,
        layer_sizes: Vec<usize>,
        edges: Vec<GraphEdge>,
        source: usize,
        sink: usize,
    ) -> Result<Self> {
        let malformed = |m: String| Err(Error::MalformedGraph(m));
        if layer_sizes.len() < 2 {
            return malformed("need at least two node layers".into());
        }
        if degree == 0 {
            return malformed("degree bound must be at least 1".into());
        }
        let depth = layer_sizes.len() - 1;
        if source >= layer_sizes[0] {
            return malformed(format!("source {source} is not a node of layer 0"));
        }
        if sink >= layer_sizes[depth] {
            return malformed(format!("sink {sink} is not a node of layer {depth}"));
        }
        for e in &edges {
            let ((la, u), (lb, v)) = (e.from, e.to);
            if lb != la + 1 {
                return malformed(format!("edge from layer {la} to layer {lb} skips layers"));
            }
            if lb > depth || u >= layer_sizes[la] || v >= layer_sizes[lb] {
                return malformed(format!("edge ({la},{u})->({lb},{v}) leaves the graph"));
            }
            if e.label.len() > degree {
                return malformed(format!(
                    "edge ({la},{u})->({lb},{v}) has degree >= {degree}"
                ));
            }
        }
        Ok(Self {
            field,
            degree,
            layer_sizes,
            edges,
            source,
            sink,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn depth(&self) -> usize {
        self.layer_sizes.len() - 1
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn layer_sizes(&self) -> &[usize] {
        &self.layer_sizes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn width(&self) -> usize {
        self.layer_sizes.iter().copied().max().unwrap_or(0)
    }

    /// Sum over source-to-sink paths of the product of edge labels, by a
    /// forward sweep over node values.
    pub fn eval(&self, point: &[u64]) -> Result<u64> {
        if point.len() != self.depth() {
            return Err(Error::ArityMismatch {
                expected: self.depth(),
                got: point.len(),
            });
        }
        let f = &self.field;
        let mut value = vec![0u64; self.layer_sizes[0]];
        value[self.source] = 1;
        for (i, &a) in point.iter().enumerate() {
            let mut next = vec![0u64; self.layer_sizes[i + 1]];
            for e in self.edges.iter().filter(|e| e.from.0 == i) {
                next[e.to.1] = f.mul_add(value[e.from.1], e.label.eval(f, a), next[e.to.1]);
            }
            value = next;
        }
        Ok(value[self.sink])
    }

    /// Matrix form of width `max(layer size)`. Parallel edges add up; the
    /// source and sink are moved to index 0 of their layers.
    pub fn to_matrix_form(&self) -> Result<Roabp> {
        let f = self.field;
        let r = self.width();
        let depth = self.depth();
        let relabel = |layer: usize, node: usize| -> usize {
            let special = match layer {
                0 => self.source,
                l if l == depth => self.sink,
                _ => return node,
            };
            if node == special {
                0
            } else if node == 0 {
                special
            } else {
                node
            }
        };
        let mut layers = vec![Layer::zero(r); depth];
        for e in &self.edges {
            let i = e.from.0;
            let u = relabel(i, e.from.1);
            let v = relabel(i + 1, e.to.1);
            let sum = layers[i].get(u, v).add(&f, &e.label);
            layers[i].set(u, v, sum);
        }
        Roabp::new(f, r, self.degree, layers)
    }
}

impl Roabp {
    /// Every layer has `r` nodes, and each nonzero entry becomes an edge.
    pub fn to_graph(&self) -> GraphAbp {
        let r = self.width();
        let mut edges = Vec::new();
        for (i, layer) in self.layers().iter().enumerate() {
            for u in 0..r {
                for v in 0..r {
                    let p = layer.get(u, v);
                    if !p.is_zero() {
                        edges.push(GraphEdge::new(i, u, v, p.clone()));
                    }
                }
            }
        }
        GraphAbp {
            field: *self.field(),
            degree: self.degree(),
            layer_sizes: vec![r; self.depth() + 1],
            edges,
            source: 0,
            sink: 0,
        }
    }
}

/// Free-standing form of [`GraphAbp::to_matrix_form`].
pub fn graph_to_matrix_form(a: &GraphAbp) -> Result<Roabp> {
    a.to_matrix_form()
}
