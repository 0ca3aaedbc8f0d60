//! Named graphs with fixed vertex numbering.
//!
//! | key | vertices | numbering |
//! |---|---|---|
//! | `p5`, `path(k)`, `pK` | path | `0-1-..-(k-1)` |
//! | `c5`, `cycle(k)`, `cK` | hole | `0-1-..-(k-1)-0` |
//! | `complete(k)` | clique | `0..k` |
//! | `k23` | `K_{2,3}` | parts `{0,1}` and `{2,3,4}` |
//! | `fourK1` | stable set | `0..4` |
//! | `bull` | triangle `0,1,2`, horns `3~1`, `4~2` | |
//! | `fork` | `a,b,c,d1,d2 = 0..4` | edges `ab, bc, cd1, cd2` |
//! | `banner` | 4-cycle `0-1-2-3-0` plus `4~0` | |
//! | `dart` | diamond on `0..4` missing `0~3`, plus `4~1` | |
//! | `figure1` | `A..J = 0..9` | see [`figure1`] |
//! | `grotzsch` | outer 5-cycle `0..5`, shadows `5..10`, hub `10` | |
//! | `petersen` | outer cycle `0..5`, spokes `i~i+5`, inner pentagram | |

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The fixed catalog keys (parametric families excluded).
pub const KEYS: [&str; 11] = [
    "p5", "c5", "k23", "fourK1", "bull", "fork", "banner", "dart", "figure1", "grotzsch",
    "petersen",
];

/// Vertex names of [`figure1`], index = vertex.
pub const FIGURE1_NAMES: [char; 10] = ['A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I', 'J'];

pub fn named(key: &str) -> Result<Graph> {
    let unknown = || Error::UnknownGraph(key.to_string());
    let g = match key {
        "p5" => path(5)?,
        "c5" => cycle(5)?,
        "k23" => labelled("k23", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        "fourK1" | "4K1" => Graph::empty(4)?.with_label("fourK1"),
        "bull" => labelled("bull", 5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)]),
        "fork" => labelled("fork", 5, &[(0, 1), (1, 2), (2, 3), (2, 4)]),
        "banner" => labelled("banner", 5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
        "dart" => labelled("dart", 5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)]),
        "figure1" => figure1(),
        "grotzsch" => grotzsch(),
        "petersen" => petersen(),
        _ => {
            let (family, k) = parse_family(key).ok_or_else(unknown)?;
            match family {
                "path" | "p" => path(k)?,
                "cycle" | "c" => cycle(k)?,
                "complete" => complete(k)?,
                _ => return Err(unknown()),
            }
        }
    };
    Ok(g)
}

/// `name(k)` or a single-letter `pK` / `cK`.
fn parse_family(key: &str) -> Option<(&str, usize)> {
    if let Some((name, rest)) = key.split_once('(') {
        let k = rest.strip_suffix(')')?.trim().parse().ok()?;
        return Some((name, k));
    }
    let (head, digits) = key.split_at(key.find(|c: char| c.is_ascii_digit())?);
    matches!(head, "p" | "c").then_some(())?;
    Some((head, digits.parse().ok()?))
}

fn labelled(label: &str, n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied())
        .expect("catalog edge lists are valid")
        .with_label(label)
}

pub fn path(k: usize) -> Result<Graph> {
    Ok(Graph::from_edges(k, (1..k).map(|v| (v - 1, v)))?.with_label(format!("P{k}")))
}

/// The hole `C_k`; `k` must be at least 3.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::Precondition(format!(
            "cycle needs at least 3 vertices, got {k}"
        )));
    }
    Ok(Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k)))?.with_label(format!("C{k}")))
}

pub fn complete(k: usize) -> Result<Graph> {
    let edges = (0..k).flat_map(|v| (0..v).map(move |u| (u, v)));
    Ok(Graph::from_edges(k, edges)?.with_label(format!("K{k}")))
}

/// The counterexample graph, vertices `A..J` mapped to `0..9`:
/// path `A-B-C-D`, triangle `A-E-F` with `F~D`, path `G-H-I-J`, and
/// `E~G`, `E~J`, `F~J`.
pub fn figure1() -> Graph {
    const EDGES: [(char, char); 13] = [
        ('A', 'B'),
        ('B', 'C'),
        ('C', 'D'),
        ('E', 'A'),
        ('E', 'F'),
        ('F', 'A'),
        ('F', 'D'),
        ('E', 'G'),
        ('E', 'J'),
        ('F', 'J'),
        ('G', 'H'),
        ('H', 'I'),
        ('I', 'J'),
    ];
    let idx = |c: char| c as usize - 'A' as usize;
    Graph::from_edges(10, EDGES.iter().map(|&(u, v)| (idx(u), idx(v))))
        .expect("static edge list")
        .with_label("figure1")
}

/// Vertex index of a [`figure1`] letter.
pub fn figure1_vertex(name: char) -> Option<usize> {
    FIGURE1_NAMES.iter().position(|&c| c == name)
}

/// Mycielskian of `C5`.
pub fn grotzsch() -> Graph {
    let mut edges = Vec::with_capacity(20);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((5 + i, 10));
    }
    Graph::from_edges(11, edges)
        .expect("static edge list")
        .with_label("grotzsch")
}

pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges)
        .expect("static edge list")
        .with_label("petersen")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    fn has_triangle_brute(g: &Graph) -> bool {
        let n = g.n();
        (0..n).any(|a| {
            (a + 1..n).any(|b| {
                (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
            })
        })
    }

    #[test]
    fn sizes() {
        let expect = [
            ("p5", 5, 4),
            ("c5", 5, 5),
            ("k23", 5, 6),
            ("fourK1", 4, 0),
            ("bull", 5, 5),
            ("fork", 5, 4),
            ("banner", 5, 5),
            ("dart", 5, 6),
            ("figure1", 10, 13),
            ("grotzsch", 11, 20),
            ("petersen", 10, 15),
            ("complete(4)", 4, 6),
            ("path(3)", 3, 2),
            ("cycle(7)", 7, 7),
            ("c7", 7, 7),
        ];
        for (key, n, m) in expect {
            let g = named(key).unwrap();
            assert_eq!((g.n(), g.edge_count()), (n, m), "{key}");
            assert!(g.is_well_formed());
        }
    }

    #[test]
    fn unknown_keys() {
        for key in ["nope", "cycle(2)", "k4", "cycle(x)", "q5"] {
            assert!(named(key).is_err(), "{key}");
        }
    }

    #[test]
    fn deterministic() {
        for key in KEYS {
            assert_eq!(named(key).unwrap(), named(key).unwrap());
        }
    }

    #[test]
    fn triangle_free_members() {
        assert!(!has_triangle_brute(&grotzsch()));
        assert!(!has_triangle_brute(&petersen()));
        assert!(has_triangle_brute(&figure1()));
    }

    #[test]
    fn petersen_is_cubic_and_grotzsch_degrees() {
        let p = petersen();
        assert!((0..10).all(|v| p.degree(v) == 3));
        let g = grotzsch();
        let mut degrees: Vec<_> = (0..11).map(|v| g.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, [3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 5]);
    }

    #[test]
    fn figure1_five_cycle() {
        let g = figure1();
        let s: VertexSet = "ABCDF"
            .chars()
            .map(|c| figure1_vertex(c).unwrap())
            .collect();
        let (h, _) = g.induced(s).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!((0..5).all(|v| h.degree(v) == 2));
        // A-B, B-C, C-D, D-F, F-A in induced numbering A,B,C,D,F = 0..4
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)] {
            assert!(h.has_edge(u, v));
        }
    }
}
