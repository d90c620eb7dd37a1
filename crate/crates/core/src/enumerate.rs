//! Isomorph-free exhaustive generation of graphs (equivalently, of edge
//! 2-colorings of complete graphs, identified with their blue subgraph).
//!
//! Graphs on `k + 1` vertices are produced by extending every canonical
//! graph on `k` vertices by one new vertex with every possible neighborhood,
//! canonicalizing each child, and deduplicating by canonical key per level.
//! Each level is kept as a sorted list of packed upper-triangle keys, so the
//! stream order is deterministic and identical for every worker count.

use thiserror::Error;

use crate::canon::canonical_graph;
use crate::graph::Graph;
use crate::parallel::par_flat_map;
use crate::set::VertexSet;

/// Full enumeration is supported up to this order (12,005,168 classes at
/// order 10; the level sets stay comfortably in memory).
pub const FULL_ENUMERATION_CAP: usize = 10;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("full enumeration capped at order {FULL_ENUMERATION_CAP}, requested {0}")]
    OrderAboveCap(usize),
}

/// Counters for one generation level. All are independent of the worker
/// count: `raw` counts labeled extension attempts, `considered` distinct
/// canonical children, `kept` those that survived the filter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LevelStats {
    pub order: usize,
    pub raw: u64,
    pub considered: u64,
    pub kept: u64,
}

/// Extends each parent key (order `order - 1`) by one vertex in every way,
/// canonicalizes, dedups, then filters. Returns the sorted kept keys.
pub(crate) fn next_level<F>(
    parents: &[u64],
    order: usize,
    workers: usize,
    filter: F,
) -> (Vec<u64>, LevelStats)
where
    F: Fn(&Graph) -> bool + Sync,
{
    debug_assert!(order >= 2);
    let parent_order = order - 1;
    let subsets: u64 = 1 << parent_order;

    let children = par_flat_map(parents, workers, |&key| {
        let parent = Graph::from_upper_triangle_bits(parent_order, key)
            .expect("level keys decode at their order");
        let mut out = Vec::with_capacity(subsets as usize);
        for mask in 0..subsets {
            let child = parent
                .extend(VertexSet::from_bits(mask as u32))
                .expect("extension within order cap");
            out.push(canonical_graph(&child).upper_triangle_bits());
        }
        out.sort_unstable();
        out.dedup();
        out
    });

    let raw = parents.len() as u64 * subsets;
    let mut distinct = children;
    distinct.sort_unstable();
    distinct.dedup();
    let considered = distinct.len() as u64;

    let kept: Vec<u64> = par_flat_map(&distinct, workers, |&key| {
        let g = Graph::from_upper_triangle_bits(order, key).expect("distinct keys decode");
        if filter(&g) {
            vec![key]
        } else {
            Vec::new()
        }
    });

    let stats = LevelStats {
        order,
        raw,
        considered,
        kept: kept.len() as u64,
    };
    (kept, stats)
}

/// Grows and caches the unfiltered canonical levels. Shared by every
/// consumer that needs the full stream (exhaustive certification, the proof
/// scanners, the parameter chain checks), so the expensive levels are built
/// once per process.
pub struct EnumerationCache {
    levels: Vec<Vec<u64>>,
}

impl Default for EnumerationCache {
    fn default() -> Self {
        Self::new()
    }
}

impl EnumerationCache {
    pub fn new() -> Self {
        // Level 1: the single graph on one vertex.
        EnumerationCache {
            levels: vec![vec![0u64]],
        }
    }

    pub fn ensure(&mut self, order: usize, workers: usize) -> Result<(), EnumerationError> {
        if order > FULL_ENUMERATION_CAP {
            return Err(EnumerationError::OrderAboveCap(order));
        }
        while self.levels.len() < order {
            let next_order = self.levels.len() + 1;
            let (keys, _) = next_level(
                &self.levels[self.levels.len() - 1],
                next_order,
                workers,
                |_| true,
            );
            self.levels.push(keys);
        }
        Ok(())
    }

    /// Sorted canonical keys of all graphs of the given order.
    pub fn keys(&mut self, order: usize, workers: usize) -> Result<&[u64], EnumerationError> {
        self.ensure(order, workers)?;
        Ok(&self.levels[order - 1])
    }

    pub fn count(&mut self, order: usize, workers: usize) -> Result<usize, EnumerationError> {
        Ok(self.keys(order, workers)?.len())
    }

    /// Decoded canonical representatives, in deterministic key order.
    pub fn graphs(&mut self, order: usize, workers: usize) -> Result<Vec<Graph>, EnumerationError> {
        let keys = self.keys(order, workers)?;
        Ok(keys
            .iter()
            .map(|&k| Graph::from_upper_triangle_bits(order, k).expect("cache keys decode"))
            .collect())
    }
}

/// One canonical representative per isomorphism class of graphs on `p`
/// vertices, in deterministic order. These are exactly the blue subgraphs of
/// the edge 2-colorings of `K_p` up to isomorphism.
pub fn enumerate_colorings(p: usize, workers: usize) -> Result<Vec<Graph>, EnumerationError> {
    let mut cache = EnumerationCache::new();
    cache.graphs(p, workers)
}
