use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Simple undirected graph stored as a dense symmetric adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<bool>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            order: n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Path on `n` vertices `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.set_edge(0, n - 1, true);
        }
        g
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.order + v]
    }

    /// Panics on a loop; edge endpoints must be in range.
    pub fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        assert_ne!(u, v, "simple graphs have no loops");
        self.adj[u * self.order + v] = present;
        self.adj[v * self.order + u] = present;
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.order).filter(move |&u| self.has_edge(v, u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order)
            .flat_map(|u| (u + 1..self.order).map(move |v| (u, v)))
            .filter(|&(u, v)| self.has_edge(u, v))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn complement(&self) -> Self {
        let n = self.order;
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.set_edge(u, v, !self.has_edge(u, v));
            }
        }
        g
    }

    /// Vertices of `other` are numbered after those of `self`.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let shift = self.order;
        let mut g = Self::empty(shift + other.order);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + shift, v + shift, true);
        }
        g
    }

    /// Subgraph induced by `keep`, renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Self {
        let mut g = Self::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "permutation of length {} for order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            self.check_vertex(p)?;
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::DimensionMismatch(format!("{p} repeated in permutation")));
            }
        }
        let mut g = Self::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        Ok(g)
    }

    pub fn is_connected(&self) -> bool {
        if self.order == 0 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.order, self.order, |i, j| {
            BigInt::from(u8::from(self.has_edge(i, j)))
        })
    }
}
