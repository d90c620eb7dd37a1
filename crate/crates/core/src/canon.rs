//! Canonical labeling by iterated partition refinement with backtracking.
//!
//! The canonical representative of an isomorphism class is the relabeling of
//! the graph whose upper-triangle adjacency bit string (column-major, the
//! graph6 bit order) is lexicographically least over all labelings explored
//! by the search. Refinement, target-cell choice, and twin grouping are all
//! label-independent, so the explored set of bit strings — and hence its
//! minimum — depends only on the isomorphism class.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::Graph;
use crate::graph6;

/// Byte sequence identifying an isomorphism class: the graph6 encoding of the
/// canonically labeled graph. Equal codes iff isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

/// Computes the canonical code of `g`.
pub fn canonical_form(g: &Graph) -> CanonicalCode {
    CanonicalCode(graph6::encode(&canonical_graph(g)))
}

/// Returns the canonically labeled representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Graph {
    let n = g.order();
    if n == 1 {
        return *g;
    }
    let mut search = Search {
        g,
        n,
        best: None,
    };
    let mut part = Partition::unit(n);
    part.refine(g);
    search.run(&part);
    let key = search.best.expect("search visits at least one leaf");
    decode_key(n, &key)
}

const KEY_WORDS: usize = 8;

/// Upper-triangle adjacency bits packed MSB-first; derived `Ord` compares
/// words most-significant-first, which is exactly bit-string order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct AdjKey([u64; KEY_WORDS]);

impl AdjKey {
    fn zero() -> Self {
        AdjKey([0; KEY_WORDS])
    }

    #[inline]
    fn set(&mut self, bit: usize) {
        self.0[bit / 64] |= 1u64 << (63 - bit % 64);
    }

    #[inline]
    fn get(&self, bit: usize) -> bool {
        self.0[bit / 64] & (1u64 << (63 - bit % 64)) != 0
    }

    /// Compares the leading `nbits` bits of both keys.
    fn cmp_prefix(&self, other: &AdjKey, nbits: usize) -> Ordering {
        let full = nbits / 64;
        for i in 0..full {
            match self.0[i].cmp(&other.0[i]) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        let rem = nbits % 64;
        if rem == 0 {
            return Ordering::Equal;
        }
        let mask = !0u64 << (64 - rem);
        (self.0[full] & mask).cmp(&(other.0[full] & mask))
    }
}

fn decode_key(n: usize, key: &AdjKey) -> Graph {
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if key.get(idx) {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("key bits address valid vertex pairs")
}

/// Ordered partition of the vertices: `order` lists vertices by position,
/// `cell_len[p]` is the length of the cell starting at position `p` (zero for
/// non-start positions). Copying is a pair of fixed-size memcpys.
#[derive(Clone, Copy)]
struct Partition {
    order: [u8; 32],
    cell_len: [u8; 32],
    n: usize,
}

impl Partition {
    fn unit(n: usize) -> Self {
        let mut order = [0u8; 32];
        for (v, slot) in order.iter_mut().enumerate().take(n) {
            *slot = v as u8;
        }
        let mut cell_len = [0u8; 32];
        cell_len[0] = n as u8;
        Partition { order, cell_len, n }
    }

    fn cell_starts(&self) -> Vec<usize> {
        let mut starts = Vec::new();
        let mut p = 0;
        while p < self.n {
            starts.push(p);
            p += self.cell_len[p] as usize;
        }
        starts
    }

    fn cell_mask(&self, start: usize) -> u32 {
        let len = self.cell_len[start] as usize;
        let mut mask = 0u32;
        for p in start..start + len {
            mask |= 1 << self.order[p];
        }
        mask
    }

    /// Number of leading positions fixed by singleton cells.
    fn discrete_prefix(&self) -> usize {
        let mut p = 0;
        while p < self.n && self.cell_len[p] == 1 {
            p += 1;
        }
        p
    }

    /// Splits the cell at `start` by the neighbor counts of its members
    /// against `splitter`, reordering members by ascending count. Returns
    /// true if the cell actually split.
    fn split_by(&mut self, start: usize, splitter: u32, g: &Graph) -> bool {
        let len = self.cell_len[start] as usize;
        let mut members: Vec<(u32, u8)> = self.order[start..start + len]
            .iter()
            .map(|&v| ((g.neighbors(v as usize).bits() & splitter).count_ones(), v))
            .collect();
        if members.iter().all(|&(c, _)| c == members[0].0) {
            return false;
        }
        members.sort_by_key(|&(c, _)| c);
        for p in start..start + len {
            self.cell_len[p] = 0;
        }
        let mut cell_start = start;
        for (i, &(count, v)) in members.iter().enumerate() {
            self.order[start + i] = v;
            if i > 0 && count != members[i - 1].0 {
                cell_start = start + i;
            }
            self.cell_len[cell_start] += 1;
        }
        true
    }

    /// Iterated refinement to a stable (equitable) ordered partition.
    fn refine(&mut self, g: &Graph) {
        'restart: loop {
            let starts = self.cell_starts();
            for &s in &starts {
                let splitter = self.cell_mask(s);
                for &t in &starts {
                    if self.cell_len[t] as usize >= 2 && self.split_by(t, splitter, g) {
                        continue 'restart;
                    }
                }
            }
            return;
        }
    }

    /// Moves `v` to the front of its cell at `start` as a singleton.
    fn individualize(&self, start: usize, v: u8) -> Partition {
        let mut child = *self;
        let len = child.cell_len[start] as usize;
        let pos = (start..start + len)
            .find(|&p| child.order[p] == v)
            .expect("vertex belongs to the cell");
        child.order.copy_within(start..pos, start + 1);
        child.order[start] = v;
        child.cell_len[start] = 1;
        child.cell_len[start + 1] = (len - 1) as u8;
        for p in start + 2..start + len {
            child.cell_len[p] = 0;
        }
        child
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<AdjKey>,
}

impl Search<'_> {
    /// Adjacency bits among the first `k` fixed positions, in key order.
    fn partial_key(&self, part: &Partition, k: usize) -> AdjKey {
        let mut key = AdjKey::zero();
        let mut idx = 0;
        for c in 1..k {
            let vc = part.order[c] as usize;
            for r in 0..c {
                if self.g.has_edge(part.order[r] as usize, vc) {
                    key.set(idx);
                }
                idx += 1;
            }
        }
        key
    }

    fn run(&mut self, part: &Partition) {
        let k = part.discrete_prefix();
        let partial = self.partial_key(part, k);
        if let Some(best) = &self.best {
            if partial.cmp_prefix(best, k * (k - 1) / 2) == Ordering::Greater {
                return;
            }
        }
        if k == self.n {
            if self.best.is_none_or(|best| partial < best) {
                self.best = Some(partial);
            }
            return;
        }

        // Branch on the first non-singleton cell; explore one representative
        // per twin class (a twin transposition is an automorphism, so the
        // subtrees of twins yield identical key sets).
        let start = k;
        let len = part.cell_len[start] as usize;
        let mut seen: Vec<u8> = Vec::with_capacity(len);
        for p in start..start + len {
            let v = part.order[p];
            if seen.iter().any(|&u| self.are_twins(u as usize, v as usize)) {
                continue;
            }
            seen.push(v);
            let mut child = part.individualize(start, v);
            child.refine(self.g);
            self.run(&child);
        }
    }

    #[inline]
    fn are_twins(&self, u: usize, v: usize) -> bool {
        let pair = (1u32 << u) | (1u32 << v);
        self.g.neighbors(u).bits() & !pair == self.g.neighbors(v).bits() & !pair
    }
}
