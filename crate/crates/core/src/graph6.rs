//! graph6 short form (at most 62 vertices): one size byte `n + 63`, then
//! the upper triangle in column order packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn bit_len(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::with_capacity(1 + bit_len(n).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted; anything else must be exact,
/// including zero padding bits.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some((&size, body)) = bytes.split_first() else {
        return Err(Error::Graph6("empty line".into()));
    };
    if size == 126 {
        return Err(Error::Graph6(format!(
            "long-form size header; at most {MAX_VERTICES} vertices are supported"
        )));
    }
    if !(63..126).contains(&size) {
        return Err(Error::Graph6(format!("invalid size byte {size:#04x}")));
    }
    let n = (size - 63) as usize;
    let bits = bit_len(n);
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut chunks = Vec::with_capacity(expected);
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!(
                "byte {b:#04x} at offset {} out of range",
                i + 1
            )));
        }
        chunks.push(b - 63);
    }
    let bit_at = |k: usize| chunks[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..expected * 6).any(bit_at) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit_at(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_five_vertex_line() {
        // a-c, a-e, b-d, d-e
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(parse_graph6("DQc\n").unwrap(), g);
    }

    #[test]
    fn smallest_cases() {
        let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(write_graph6(&k2), "A_");
        assert_eq!(parse_graph6(&write_graph6(&k2)).unwrap(), k2);
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6("?").unwrap().n(), 0);
        assert_eq!(parse_graph6(">>graph6<<A_").unwrap(), k2);
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err(), "truncated");
        assert!(parse_graph6("D?{{").is_err(), "too long");
        assert!(parse_graph6("D\x7f{").is_err(), "byte out of range");
        assert!(parse_graph6("~?").is_err(), "long form");
        assert!(parse_graph6(" ").is_err(), "bad size byte");
        assert!(parse_graph6("A`").is_err(), "padding bit set");
    }

    #[test]
    fn all_five_vertex_lines_round_trip() {
        // every labelled graph on <= 5 vertices
        for n in 0..=5usize {
            let pairs: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
                let g = Graph::from_edges(n, edges.map(|(_, &e)| e)).unwrap();
                let line = write_graph6(&g);
                assert_eq!(parse_graph6(&line).unwrap(), g);
                assert_eq!(write_graph6(&parse_graph6(&line).unwrap()), line);
            }
        }
    }
}
