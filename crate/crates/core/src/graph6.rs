//! graph6 text encoding, bit-exact per the published format definition:
//! a single order byte `n + 63` (orders up to 62), then the upper triangle of
//! the adjacency matrix in column-major order packed MSB-first into 6-bit
//! groups, each written as `group + 63`. One graph per line in files.

use std::io::BufRead;

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header byte {0:#04x}")]
    MalformedHeader(u8),
    #[error("order {0} outside the supported range 1..=32")]
    UnsupportedOrder(usize),
    #[error("multi-byte order prefix (order >= 63) is not supported")]
    MultiByteOrder,
    #[error("truncated bit stream: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing garbage: {0} extra byte(s) after the bit stream")]
    TrailingGarbage(usize),
    #[error("invalid data byte {0:#04x} (bytes must lie in 63..=126)")]
    InvalidByte(u8),
    #[error("nonzero padding bits in the final data byte")]
    NonzeroPadding,
}

/// Error for one line of a multi-graph file.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {source}")]
pub struct LineError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}

fn data_bytes(order: usize) -> usize {
    let bits = order * (order - 1) / 2;
    bits.div_ceil(6)
}

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_bytes(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses a graph6 string. Strict: the input must be exactly one encoded
/// graph, with zero padding bits and nothing after the bit stream.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let header = bytes[0];
    if header == 126 {
        return Err(Graph6Error::MultiByteOrder);
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::MalformedHeader(header));
    }
    let n = (header - 63) as usize;
    if n == 0 || n > MAX_ORDER {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let expected = data_bytes(n);
    let found = bytes.len() - 1;
    if found < expected {
        return Err(Graph6Error::Truncated { expected, found });
    }
    if found > expected {
        return Err(Graph6Error::TrailingGarbage(found - expected));
    }

    let mut edges = Vec::new();
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[1 + idx / 6];
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte(byte));
            }
            let group = byte - 63;
            if group & (1 << (5 - idx % 6)) != 0 {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    // Remaining bits of the last group must be zero padding.
    if idx % 6 != 0 {
        let byte = bytes[1 + idx / 6];
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte(byte));
        }
        let group = byte - 63;
        let pad_mask = (1u8 << (6 - idx % 6)) - 1;
        if group & pad_mask != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    // Any remaining full data byte must also be in range (none exist here by
    // the length check above, but a zero-edge-bit graph still has bytes).
    for &b in &bytes[1..] {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte(b));
        }
    }
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are in range"))
}

/// Reads one graph per line, skipping blank lines and an optional
/// `>>graph6<<` marker. Returns `(line_number, graph)` pairs and the parse
/// failures encountered, so callers can keep processing past bad lines.
pub fn read_lines<R: BufRead>(reader: R) -> std::io::Result<(Vec<(usize, Graph)>, Vec<LineError>)> {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let mut text = line.trim();
        if let Some(rest) = text.strip_prefix(">>graph6<<") {
            text = rest.trim();
        }
        if text.is_empty() {
            continue;
        }
        match parse(text) {
            Ok(g) => graphs.push((i + 1, g)),
            Err(e) => errors.push(LineError {
                line: i + 1,
                source: e,
            }),
        }
    }
    Ok((graphs, errors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn empty_graph_on_two_is_a_question_mark() {
        // Hand-encoded: header 'A' = 65 = 2 + 63; one zero bit padded to a
        // zero group = '?'.
        let g = Graph::empty(2).unwrap();
        assert_eq!(encode(&g), "A?");
        assert_eq!(parse("A?").unwrap(), g);
    }

    #[test]
    fn cycle_roundtrip() {
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(parse(&encode(&c6)).unwrap(), c6);
    }

    #[test]
    fn parse_rejections() {
        assert_eq!(parse(""), Err(Graph6Error::Empty));
        assert_eq!(parse("\x20???"), Err(Graph6Error::MalformedHeader(0x20)));
        assert_eq!(parse("~??"), Err(Graph6Error::MultiByteOrder));
        // Order 0 header is '?' itself.
        assert_eq!(parse("?"), Err(Graph6Error::UnsupportedOrder(0)));
        // Order 33 = 'a'-ish: 33 + 63 = 96 = '`'.
        assert_eq!(parse("`"), Err(Graph6Error::UnsupportedOrder(33)));
        assert_eq!(
            parse("E"),
            Err(Graph6Error::Truncated {
                expected: 3,
                found: 0
            })
        );
        assert_eq!(parse("A??"), Err(Graph6Error::TrailingGarbage(1)));
        // 'A' header needs one data byte with five padding bits; '~' = 126
        // has all bits set, so the padding is nonzero.
        assert_eq!(parse("A~"), Err(Graph6Error::NonzeroPadding));
        // Data byte below 63.
        assert_eq!(parse("A\x20"), Err(Graph6Error::InvalidByte(0x20)));
    }

    #[test]
    fn read_lines_reports_line_numbers() {
        let input = ">>graph6<<\nA_\n\nbogus\nA?\n";
        let (graphs, errors) = read_lines(input.as_bytes()).unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].0, 2);
        assert_eq!(graphs[1].0, 5);
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].line, 4);
    }

    fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
        (1..=max_order).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |flags| {
                let mut edges = Vec::new();
                let mut idx = 0;
                for v in 1..n {
                    for u in 0..v {
                        if flags[idx] {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn roundtrip_identity(g in arb_graph(32)) {
            prop_assert_eq!(parse(&encode(&g)).unwrap(), g);
        }
    }

    #[test]
    fn roundtrip_exhaustive_small_orders() {
        // Every graph on up to 5 vertices.
        for n in 1..=5usize {
            let pairs = n * (n - 1) / 2;
            for code in 0u32..(1 << pairs) {
                let mut edges = Vec::new();
                let mut idx = 0;
                for v in 1..n {
                    for u in 0..v {
                        if code & (1 << idx) != 0 {
                            edges.push((u, v));
                        }
                        idx += 1;
                    }
                }
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(parse(&encode(&g)).unwrap(), g);
            }
        }
    }
}
