//! Construction of C-graphs.
//!
//! `C(a_1) = complement(K_{a_1})` and
//! `C(a_1, ..., a_i) = complement(C(a_1, ..., a_{i-1}) + K_{a_i})`.
//! Vertices are numbered in construction order, so class `i` (0-based here,
//! `C_{i+1}` in 1-based notation) is the contiguous block of the `a_{i+1}`
//! vertices added at step `i + 1`.

use std::ops::Range;

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex partition into the construction classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    sizes: Vec<usize>,
    class_of: Vec<usize>,
}

impl ClassPartition {
    pub fn from_sizes(sizes: &[usize]) -> Self {
        let class_of = sizes
            .iter()
            .enumerate()
            .flat_map(|(c, &a)| std::iter::repeat_n(c, a))
            .collect();
        ClassPartition {
            sizes: sizes.to_vec(),
            class_of,
        }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn class_count(&self) -> usize {
        self.sizes.len()
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    /// 0-based class of vertex `v`.
    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v]
    }

    /// Vertex range of 0-based class `c`.
    pub fn members(&self, c: usize) -> Range<usize> {
        let start: usize = self.sizes[..c].iter().sum();
        start..start + self.sizes[c]
    }
}

/// Runs the recurrence for any nonempty sequence of positive parts,
/// including odd lengths.
pub(crate) fn build_by_recurrence(parts: &[usize]) -> Graph {
    let (&first, rest) = parts.split_first().expect("at least one part");
    rest.iter().fold(Graph::complete(first).complement(), |g, &a| {
        g.disjoint_union(&Graph::complete(a)).complement()
    })
}

/// Builds `C(a_1, ..., a_2k)` by iterated union-and-complement.
pub fn build_cgraph(c: &Composition) -> Result<(Graph, ClassPartition)> {
    c.half_len()?;
    Ok((build_by_recurrence(c.parts()), ClassPartition::from_sizes(c.parts())))
}

/// Builds the same graph from the closed-form adjacency rule, without any
/// complementation: with 1-based classes `p < q`, vertices of `C_p` and `C_q`
/// are adjacent iff `q` is even, and `C_p` is a clique iff `p` is odd
/// (independent otherwise).
pub fn build_cgraph_direct(c: &Composition) -> Result<(Graph, ClassPartition)> {
    c.half_len()?;
    let partition = ClassPartition::from_sizes(c.parts());
    let n = c.order();
    let mut g = Graph::empty(n);
    for u in 0..n {
        let p = partition.class_of(u) + 1;
        for v in u + 1..n {
            let q = partition.class_of(v) + 1;
            let adjacent = if p == q { p % 2 == 1 } else { q.is_multiple_of(2) };
            if adjacent {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok((g, partition))
}

/// The composition whose C-graph is the antiregular graph on `n` vertices:
/// `(1, 1, ..., 1)` for even `n`, `(1, 2, 1, ..., 1)` for odd `n`.
pub fn antiregular_composition(n: usize) -> Result<Composition> {
    if n < 2 {
        return Err(Error::OrderTooSmall(n));
    }
    let parts = if n.is_multiple_of(2) {
        vec![1; n]
    } else {
        let mut p = vec![1; n - 1];
        p[1] = 2;
        p
    };
    Composition::new_even(parts)
}

pub fn antiregular(n: usize) -> Result<Graph> {
    Ok(build_cgraph(&antiregular_composition(n)?)?.0)
}
