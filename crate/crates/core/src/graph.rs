//! Compact undirected simple graphs on at most 32 vertices.

use std::fmt;

use thiserror::Error;

use crate::set::VertexSet;

/// Largest supported vertex count. One machine word per adjacency row keeps
/// every inner loop branch-light.
pub const MAX_ORDER: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} outside the supported range 1..=32")]
    OrderOutOfRange(usize),
    #[error("edge ({0},{1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("edge ({0},{1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("induced subgraph on the empty vertex set is rejected")]
    EmptyInducedSet,
    #[error("vertex set {0} contains vertices outside 0..{1}")]
    SetOutOfRange(VertexSet, usize),
}

/// An undirected simple graph stored as one adjacency bit mask per vertex.
///
/// Values are immutable after construction; everything downstream treats a
/// `Graph` as a plain value that can be freely copied between threads.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    order: u8,
    adj: [u32; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order));
        }
        Ok(Graph {
            order: order as u8,
            adj: [0; MAX_ORDER],
        })
    }

    /// Builds a graph from an explicit edge list; symmetric closure is applied.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u, v));
            }
            if u >= order || v >= order {
                return Err(GraphError::VertexOutOfRange(u, v, order));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Complete graph.
    pub fn complete(order: usize) -> Result<Self, GraphError> {
        let mut g = Graph::empty(order)?;
        let full = VertexSet::full(order).bits();
        for v in 0..order {
            g.adj[v] = full & !(1 << v);
        }
        Ok(g)
    }

    /// Cycle `0-1-..-(n-1)-0`; `order >= 3`.
    pub fn cycle(order: usize) -> Result<Self, GraphError> {
        if order < 3 {
            return Err(GraphError::OrderOutOfRange(order));
        }
        let edges: Vec<(usize, usize)> = (0..order).map(|i| (i, (i + 1) % order)).collect();
        Graph::from_edges(order, &edges)
    }

    /// Path `0-1-..-(n-1)`.
    pub fn path(order: usize) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = (1..order).map(|i| (i - 1, i)).collect();
        Graph::from_edges(order, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    /// Open neighborhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.order());
        VertexSet::from_bits(self.adj[v])
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.adj[v] | (1 << v))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order() && v < self.order());
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn edge_count(&self) -> usize {
        let total: u32 = (0..self.order()).map(|v| self.adj[v].count_ones()).sum();
        total as usize / 2
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in (u + 1)..self.order() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Complement on the same vertex set. An involution.
    pub fn complement(&self) -> Graph {
        let order = self.order();
        let full = VertexSet::full(order).bits();
        let mut g = Graph {
            order: self.order,
            adj: [0; MAX_ORDER],
        };
        for v in 0..order {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// Induced subgraph on `w`, vertices relabeled by ascending original index.
    pub fn induced(&self, w: VertexSet) -> Result<Graph, GraphError> {
        if w.is_empty() {
            return Err(GraphError::EmptyInducedSet);
        }
        if !w.is_subset_of(self.vertices()) {
            return Err(GraphError::SetOutOfRange(w, self.order()));
        }
        let members: Vec<usize> = w.iter().collect();
        let mut g = Graph {
            order: members.len() as u8,
            adj: [0; MAX_ORDER],
        };
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                    g.adj[j] |= 1 << i;
                }
            }
        }
        Ok(g)
    }

    /// Extends by one vertex adjacent to `neighborhood`; the new vertex gets
    /// index `order`. Used by the isomorph-free generator.
    pub fn extend(&self, neighborhood: VertexSet) -> Result<Graph, GraphError> {
        let order = self.order();
        if order + 1 > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order + 1));
        }
        if !neighborhood.is_subset_of(self.vertices()) {
            return Err(GraphError::SetOutOfRange(neighborhood, order));
        }
        let mut g = *self;
        g.order = (order + 1) as u8;
        g.adj[order] = neighborhood.bits();
        for v in neighborhood.iter() {
            g.adj[v] |= 1 << order;
        }
        Ok(g)
    }

    /// Applies a relabeling: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let order = self.order();
        debug_assert_eq!(perm.len(), order);
        let mut g = Graph {
            order: self.order,
            adj: [0; MAX_ORDER],
        };
        for u in 0..order {
            for v in self.neighbors(u).iter() {
                g.adj[perm[u]] |= 1 << perm[v];
            }
        }
        g
    }

    /// Packs the upper triangle (column-major, the graph6 bit order) into a
    /// `u64` with the first bit at the most significant position, so numeric
    /// order on the result is lexicographic order on the bit string.
    /// Requires `order <= 11` (at most 55 bits).
    pub fn upper_triangle_bits(&self) -> u64 {
        let n = self.order();
        assert!(n <= 11, "upper_triangle_bits requires order <= 11");
        let mut bits = 0u64;
        let mut idx = 0;
        for v in 1..n {
            for u in 0..v {
                if self.has_edge(u, v) {
                    bits |= 1u64 << (63 - idx);
                }
                idx += 1;
            }
        }
        bits
    }

    /// Inverse of [`Graph::upper_triangle_bits`].
    pub fn from_upper_triangle_bits(order: usize, bits: u64) -> Result<Graph, GraphError> {
        if order == 0 || order > 11 {
            return Err(GraphError::OrderOutOfRange(order));
        }
        let mut g = Graph::empty(order)?;
        let mut idx = 0;
        for v in 1..order {
            for u in 0..v {
                if bits & (1u64 << (63 - idx)) != 0 {
                    g.adj[u] |= 1 << v;
                    g.adj[v] |= 1 << u;
                }
                idx += 1;
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    // Order plus edge list reads better than 32 raw masks.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

/// A red/blue 2-coloring of the edges of a complete graph, stored as the blue
/// graph. The red graph is its complement by definition and is always derived.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct EdgeColoring {
    blue: Graph,
}

impl EdgeColoring {
    pub fn from_blue(blue: Graph) -> Self {
        EdgeColoring { blue }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.blue.order()
    }

    #[inline]
    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    #[inline]
    pub fn red(&self) -> Graph {
        self.blue.complement()
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring(blue: {:?})", self.blue)
    }
}
