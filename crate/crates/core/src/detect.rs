//! Induced-subgraph pattern detection for the configurations the parameter
//! arguments turn on: arbitrary induced patterns, complete bipartite graphs
//! minus a matching, the prism, and upper domination perfection.

use std::collections::HashSet;

use thiserror::Error;

use crate::canon::canonical_form;
use crate::graph::Graph;
use crate::set::{subsets_of_size, VertexSet};
use crate::solvers::{independence_number, upper_domination_number};

/// An induced embedding: pattern vertex `i` maps to host vertex `map[i]`,
/// preserving both adjacency and non-adjacency.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn image_of(&self, pattern_vertex: usize) -> usize {
        self.map[pattern_vertex]
    }

    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// Re-verifies the embedding edge for edge.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.order() {
            return false;
        }
        let distinct: HashSet<usize> = self.map.iter().copied().collect();
        if distinct.len() != self.map.len() || self.map.iter().any(|&w| w >= host.order()) {
            return false;
        }
        for i in 0..pattern.order() {
            for j in (i + 1)..pattern.order() {
                if pattern.has_edge(i, j) != host.has_edge(self.map[i], self.map[j]) {
                    return false;
                }
            }
        }
        true
    }
}

/// Searches for an induced copy of `pattern` in `host`. Exhaustive
/// backtracking: a `None` result means no embedding exists.
///
/// Pattern vertices are matched in descending degree order; candidates are
/// filtered by degree and by adjacency to already-matched vertices.
pub fn find_induced(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let np = pattern.order();
    let nh = host.order();
    if np > nh {
        return None;
    }

    // Matching order: descending degree, ties by index.
    let mut order: Vec<usize> = (0..np).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));

    // Host candidates per pattern vertex: degree and co-degree filters
    // (an induced image has at least the pattern degree on both sides).
    let mut base = vec![0u32; np];
    for (slot, &pv) in order.iter().enumerate() {
        let pd = pattern.degree(pv);
        let pcod = np - 1 - pd;
        let mut mask = 0u32;
        for w in 0..nh {
            let hd = host.degree(w);
            if hd >= pd && nh - 1 - hd >= pcod {
                mask |= 1 << w;
            }
        }
        base[slot] = mask;
    }

    let mut assignment = vec![0usize; np];
    if extend(
        pattern, host, &order, &base, &mut assignment, 0, 0,
    ) {
        let mut map = vec![0usize; np];
        for (slot, &pv) in order.iter().enumerate() {
            map[pv] = assignment[slot];
        }
        Some(Embedding { map })
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    base: &[u32],
    assignment: &mut [usize],
    depth: usize,
    used: u32,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let mut cands = base[depth] & !used;
    // Restrict by consistency with every already-placed vertex.
    for prev in 0..depth {
        let pu = order[prev];
        let hu = assignment[prev];
        cands &= if pattern.has_edge(pu, pv) {
            host.neighbors(hu).bits()
        } else {
            !host.neighbors(hu).bits()
        };
        if cands == 0 {
            return false;
        }
    }
    let mut rest = cands;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        assignment[depth] = w;
        if extend(pattern, host, order, base, assignment, depth + 1, used | (1 << w)) {
            return true;
        }
    }
    false
}

/// The complete bipartite graph on two sides of `k + 1` vertices with a
/// matching of cardinality `k` removed. Side A is `0..=k`, side B is
/// `k+1..=2k+1`; the removed matching pairs vertex `i` with `k+1+i` for
/// `i = 1..=k`, so vertex `0` and vertex `k+1` keep full degree.
pub fn biclique_minus_matching(k: usize) -> Result<Graph, crate::graph::GraphError> {
    let side = k + 1;
    let mut edges = Vec::new();
    for i in 0..side {
        for j in 0..side {
            if i == j && i >= 1 {
                continue;
            }
            edges.push((i, side + j));
        }
    }
    Graph::from_edges(2 * side, &edges)
}

/// Searches the host for an induced copy of `K_{k+1,k+1}` minus a
/// `k`-matching. `None` when `k = 0` or the host is too small.
pub fn find_biclique_minus_matching(host: &Graph, k: usize) -> Option<Embedding> {
    if k < 1 || host.order() < 2 * (k + 1) {
        return None;
    }
    let pattern = biclique_minus_matching(k).expect("pattern order within range");
    find_induced(&pattern, host)
}

/// The prism: complement of the 6-cycle, the forbidden induced subgraph that
/// separates the independence and upper domination numbers.
pub fn g1() -> Graph {
    Graph::cycle(6).expect("order 6 is valid").complement()
}

/// True iff the host contains the prism as an induced subgraph.
pub fn contains_g1(g: &Graph) -> bool {
    find_induced(&g1(), g).is_some()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PerfectionError {
    #[error("order {0} exceeds the direct-check cap of {1}")]
    OrderAboveCap(usize, usize),
}

/// Outcome of the upper domination perfection check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaPerfection {
    Perfect,
    /// Some induced subgraph separates the two parameters.
    Imperfect {
        witness: VertexSet,
        beta: usize,
        gamma: usize,
    },
}

const PERFECTION_ORDER_CAP: usize = 12;

/// Direct check of upper domination perfection: every induced subgraph `H`
/// must satisfy `beta(H) = Gamma(H)`. Subgraphs are enumerated in descending
/// cardinality so that large separating witnesses surface first; cleared
/// subgraphs are memoized by canonical code.
pub fn is_gamma_perfect(g: &Graph) -> Result<GammaPerfection, PerfectionError> {
    let n = g.order();
    if n > PERFECTION_ORDER_CAP {
        return Err(PerfectionError::OrderAboveCap(n, PERFECTION_ORDER_CAP));
    }
    let mut cleared: HashSet<String> = HashSet::new();
    for size in (2..=n).rev() {
        for w in subsets_of_size(n, size) {
            let h = g.induced(w).expect("subset of the vertex set");
            let code = canonical_form(&h).as_str().to_string();
            if !cleared.insert(code) {
                continue;
            }
            let beta = independence_number(&h).value;
            let gamma = upper_domination_number(&h).value;
            if beta != gamma {
                return Ok(GammaPerfection::Imperfect {
                    witness: w,
                    beta,
                    gamma,
                });
            }
        }
    }
    Ok(GammaPerfection::Perfect)
}
