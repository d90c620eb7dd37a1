//! Exact computation of the independence number, the upper domination number,
//! and the upper irredundance number, plus their defining predicates.
//!
//! Threshold queries ("is the parameter at least k?") are the primitives;
//! full maximization calls them with descending k. The certification search
//! only ever needs the threshold form, and descending enumeration makes the
//! common queries exit early.

use crate::graph::Graph;
use crate::set::{subsets_of_size, VertexSet};

/// Value of a parameter together with a witness set achieving it.
///
/// Witness ties are broken by numerically least bit mask, so outputs are
/// reproducible across runs and worker counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParameterResult {
    pub value: usize,
    pub witness: VertexSet,
}

/// True iff no edge joins two members of `s`.
pub fn is_independent(g: &Graph, s: VertexSet) -> bool {
    debug_assert!(s.is_subset_of(g.vertices()));
    s.iter().all(|v| g.neighbors(v).bits() & s.bits() == 0)
}

/// True iff `N[s]` covers every vertex.
pub fn is_dominating(g: &Graph, s: VertexSet) -> bool {
    let mut covered = s.bits();
    for v in s.iter() {
        covered |= g.neighbors(v).bits();
    }
    covered == g.vertices().bits()
}

/// Closed-neighborhood coverage masks: vertices covered at least once and at
/// least twice by members of `s`.
#[inline]
fn cover_masks(g: &Graph, s: VertexSet) -> (u32, u32) {
    let mut once = 0u32;
    let mut twice = 0u32;
    for v in s.iter() {
        let nb = g.closed_neighbors(v).bits();
        twice |= once & nb;
        once |= nb;
    }
    (once, twice)
}

/// True iff every member of `s` has a private neighbor, i.e. some vertex of
/// its closed neighborhood dominated by no other member.
pub fn is_irredundant(g: &Graph, s: VertexSet) -> bool {
    debug_assert!(s.is_subset_of(g.vertices()));
    let (_, twice) = cover_masks(g, s);
    s.iter()
        .all(|v| g.closed_neighbors(v).bits() & !twice != 0)
}

/// True iff `s` dominates the graph and every member has a private neighbor.
/// The empty set never dominates a nonempty graph.
pub fn is_minimal_dominating(g: &Graph, s: VertexSet) -> bool {
    debug_assert!(s.is_subset_of(g.vertices()));
    let (once, twice) = cover_masks(g, s);
    once == g.vertices().bits()
        && s.iter()
            .all(|v| g.closed_neighbors(v).bits() & !twice != 0)
}

/// Is there an independent set of size at least `k`? Branch and bound,
/// branching on a maximum-degree vertex of the candidate subgraph.
pub fn beta_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if k > g.order() {
        return false;
    }
    beta_search(g, g.vertices().bits(), k)
}

fn beta_search(g: &Graph, cand: u32, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    if (cand.count_ones() as usize) < need {
        return false;
    }
    // Maximum-degree vertex within the candidate set; ties to lowest index.
    let mut best_v = 0;
    let mut best_deg = 0;
    let mut found = false;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let deg = (g.neighbors(v).bits() & cand).count_ones();
        if !found || deg > best_deg {
            best_v = v;
            best_deg = deg;
            found = true;
        }
    }
    if best_deg == 0 {
        // Candidates are independent; the popcount check above passed.
        return true;
    }
    // Include best_v, then exclude it.
    beta_search(g, cand & !(g.neighbors(best_v).bits() | (1 << best_v)), need - 1)
        || beta_search(g, cand & !(1 << best_v), need)
}

/// Is there a minimal dominating set of size at least `k`?
pub fn gamma_at_least(g: &Graph, k: usize) -> bool {
    if k <= 1 {
        // Every nonempty graph has a minimal dominating set.
        return true;
    }
    // Chain shortcut: a maximum independent set is a minimal dominating set,
    // so beta >= k already settles the query.
    if beta_at_least(g, k) {
        return true;
    }
    let n = g.order();
    for size in (k..=n).rev() {
        if subsets_of_size(n, size).any(|s| is_minimal_dominating(g, s)) {
            return true;
        }
    }
    false
}

/// Is there an irredundant set of size at least `k`?
pub fn ir_at_least(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if k == 1 {
        return g.order() >= 1;
    }
    if beta_at_least(g, k) {
        return true;
    }
    let n = g.order();
    for size in (k..=n).rev() {
        if subsets_of_size(n, size).any(|s| is_irredundant(g, s)) {
            return true;
        }
    }
    false
}

/// Independence number with a witness.
pub fn independence_number(g: &Graph) -> ParameterResult {
    let n = g.order();
    let value = (1..=n)
        .rev()
        .find(|&k| beta_at_least(g, k))
        .expect("a single vertex is always independent");
    let witness = subsets_of_size(n, value)
        .find(|&s| is_independent(g, s))
        .expect("an independent set of the computed size exists");
    ParameterResult { value, witness }
}

/// Upper domination number with a witness.
pub fn upper_domination_number(g: &Graph) -> ParameterResult {
    maximize(g, is_minimal_dominating)
}

/// Upper irredundance number with a witness.
pub fn upper_irredundance_number(g: &Graph) -> ParameterResult {
    maximize(g, is_irredundant)
}

fn maximize(g: &Graph, feasible: fn(&Graph, VertexSet) -> bool) -> ParameterResult {
    let n = g.order();
    for size in (1..=n).rev() {
        if let Some(witness) = subsets_of_size(n, size).find(|&s| feasible(g, s)) {
            return ParameterResult {
                value: size,
                witness,
            };
        }
    }
    unreachable!("every graph has a minimal dominating set and an irredundant singleton");
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6() -> Graph {
        Graph::cycle(6).unwrap()
    }

    fn prism() -> Graph {
        c6().complement()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn independence_predicate() {
        assert!(is_independent(&c6(), set(&[0, 2, 4])));
        assert!(!is_independent(&Graph::complete(3).unwrap(), set(&[0, 1])));
        assert!(is_independent(&c6(), VertexSet::EMPTY));
    }

    #[test]
    fn minimal_domination_predicate() {
        let p3 = Graph::path(3).unwrap();
        assert!(is_minimal_dominating(&p3, set(&[1])));
        // Both endpoints: each is its own private neighbor.
        assert!(is_minimal_dominating(&p3, set(&[0, 2])));
        // Dominating, but vertex 0 has no private neighbor.
        assert!(is_dominating(&c6(), set(&[0, 1, 3, 4])));
        assert!(!is_minimal_dominating(&c6(), set(&[0, 1, 3, 4])));
        assert!(!is_minimal_dominating(&c6(), VertexSet::EMPTY));
    }

    #[test]
    fn irredundance_predicate() {
        assert!(is_irredundant(&c6(), set(&[0, 2, 4])));
        // Vertices 1 and 2 have no private neighbor.
        assert!(!is_irredundant(&c6(), set(&[0, 1, 2, 3])));
        assert!(is_irredundant(&c6(), VertexSet::EMPTY));
    }

    #[test]
    fn independence_number_examples() {
        assert_eq!(independence_number(&Graph::empty(5).unwrap()).value, 5);
        assert_eq!(independence_number(&Graph::complete(5).unwrap()).value, 1);
        assert_eq!(independence_number(&c6()).value, 3);
        assert_eq!(independence_number(&prism()).value, 2);
    }

    #[test]
    fn upper_domination_examples() {
        for n in 1..=6 {
            assert_eq!(
                upper_domination_number(&Graph::complete(n).unwrap()).value,
                1
            );
        }
        let p3 = Graph::path(3).unwrap();
        let res = upper_domination_number(&p3);
        assert_eq!(res.value, 2);
        assert_eq!(res.witness, set(&[0, 2]));
        assert_eq!(upper_domination_number(&prism()).value, 3);
        assert!(is_minimal_dominating(&prism(), set(&[0, 2, 4])));
    }

    #[test]
    fn upper_irredundance_examples() {
        for n in 1..=6 {
            assert_eq!(
                upper_irredundance_number(&Graph::complete(n).unwrap()).value,
                1
            );
        }
        assert_eq!(upper_irredundance_number(&c6()).value, 3);

        // Complement of K_{4,4} minus a perfect matching: two K4s joined by a
        // perfect matching. Its irredundance number is at least 3; record the
        // computed pair.
        let k44_minus_pm = Graph::from_edges(
            8,
            &[
                (0, 5),
                (0, 6),
                (0, 7),
                (1, 4),
                (1, 6),
                (1, 7),
                (2, 4),
                (2, 5),
                (2, 7),
                (3, 4),
                (3, 5),
                (3, 6),
            ],
        )
        .unwrap();
        let g = k44_minus_pm.complement();
        let ir = upper_irredundance_number(&g);
        let gamma = upper_domination_number(&g);
        assert!(ir.value >= 3, "IR = {}, Gamma = {}", ir.value, gamma.value);
        assert!(is_irredundant(&g, ir.witness));
    }

    #[test]
    fn empty_graph_conventions() {
        for n in 1..=6 {
            let g = Graph::empty(n).unwrap();
            assert_eq!(independence_number(&g).value, n);
            assert_eq!(upper_domination_number(&g).value, n);
            assert_eq!(upper_irredundance_number(&g).value, n);
        }
    }

    #[test]
    fn witnesses_satisfy_their_predicates() {
        for g in [
            c6(),
            prism(),
            Graph::path(5).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete(4).unwrap(),
        ] {
            let beta = independence_number(&g);
            assert!(is_independent(&g, beta.witness));
            assert_eq!(beta.witness.len(), beta.value);
            // A maximum independent set is a minimal dominating set.
            assert!(is_minimal_dominating(&g, beta.witness));

            let gamma = upper_domination_number(&g);
            assert!(is_minimal_dominating(&g, gamma.witness));
            assert_eq!(gamma.witness.len(), gamma.value);

            let ir = upper_irredundance_number(&g);
            assert!(is_irredundant(&g, ir.witness));
            assert_eq!(ir.witness.len(), ir.value);

            assert!(beta.value <= gamma.value && gamma.value <= ir.value);
        }
    }

    #[test]
    fn thresholds_agree_with_values() {
        for g in [c6(), prism(), Graph::path(4).unwrap(), Graph::empty(3).unwrap()] {
            let beta = independence_number(&g).value;
            let gamma = upper_domination_number(&g).value;
            let ir = upper_irredundance_number(&g).value;
            for k in 1..=g.order() {
                assert_eq!(beta_at_least(&g, k), k <= beta);
                assert_eq!(gamma_at_least(&g, k), k <= gamma);
                assert_eq!(ir_at_least(&g, k), k <= ir);
            }
        }
    }
}
