//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! 4
//! 0 1
//! 1 2
//! ```
//!
//! The first non-comment, non-blank line is the vertex count. Every later
//! non-blank line is `u v` with `0 <= u < v < n`. Duplicates and loops are
//! rejected.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some(order) = n else {
            if fields.len() != 1 {
                return Err(parse_err(line_no, "expected the vertex count on its own line"));
            }
            n = Some(fields[0].parse().map_err(|_| parse_err(line_no, format!("bad vertex count '{}'", fields[0])))?);
            continue;
        };
        let [a, b] = fields[..] else {
            return Err(parse_err(line_no, format!("expected 'u v', got '{line}'")));
        };
        let parse = |s: &str| s.parse::<usize>().map_err(|_| parse_err(line_no, format!("bad vertex '{s}'")));
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at {u}")));
        }
        if u > v {
            return Err(parse_err(line_no, format!("edge '{u} {v}' must be written with u < v")));
        }
        if v >= order {
            return Err(parse_err(line_no, format!("vertex {v} out of range for n = {order}")));
        }
        if !edges.insert((u, v)) {
            return Err(parse_err(line_no, format!("duplicate edge '{u} {v}'")));
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing vertex count"))?;
    Ok(Graph::from_edge_set(n, edges))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(0, format!("cannot read {}: {e}", path.display())))?;
    parse_edge_list(&text)
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3\n\n0 1\n1 2\n# x\n0 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn single_vertex() {
        let g = parse_edge_list("1\n").unwrap();
        assert_eq!((g.order(), g.size()), (1, 0));
        assert_eq!(write_edge_list(&g), "1\n");
    }

    #[test]
    fn rejects_malformed_input() {
        for (text, line) in [
            ("3\n0 1\n0 1\n", 3),
            ("3\n1 1\n", 2),
            ("3\n2 1\n", 2),
            ("3\n0 3\n", 2),
            ("3\n0 1 2\n", 2),
            ("x\n", 1),
            ("3\n0 a\n", 2),
            ("# only a comment\n", 0),
        ] {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    proptest! {
        #[test]
        fn write_then_parse(n in 0usize..9, bits in proptest::collection::vec(any::<bool>(), 36)) {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let g = Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap();
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
