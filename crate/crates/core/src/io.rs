//! Text formats: graph6, the `n <count>` edge list, and graph6 catalogs.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. Only the short form (`n ≤ 62`) is accepted;
/// a long-form header is recognised and rejected as too large.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if let Some((i, &b)) = bytes.iter().enumerate().find(|(_, &b)| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#04x} at position {i} is outside 63..=126")));
    }
    if first == 126 {
        let n = long_form_order(body)?;
        return Err(Error::TooManyVertices(n));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Graph6(format!("{n} vertices need {need} data bytes, found {}", body.len())));
    }
    let mut adj = vec![VertexSet::EMPTY; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bit_at(body, k) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            k += 1;
        }
    }
    if (bits..need * 6).any(|k| bit_at(body, k)) {
        return Err(Error::Graph6("padding bits are not zero".into()));
    }
    Graph::from_adjacency(adj)
}

fn long_form_order(body: &[u8]) -> Result<usize> {
    match body {
        [126, rest @ ..] if rest.len() >= 6 => {
            Ok(rest[..6].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize))
        }
        [a, b, c, ..] => Ok([a, b, c].iter().fold(0usize, |acc, &&x| acc << 6 | (x - 63) as usize)),
        _ => Err(Error::Graph6("truncated long-form length header".into())),
    }
}

#[inline]
fn bit_at(body: &[u8], k: usize) -> bool {
    (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1
}

/// Encodes a graph as a single graph6 line without a trailing newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let bits = n * n.saturating_sub(1) / 2;
    let mut data = vec![0u8; bits.div_ceil(6)];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                data[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    let mut out = String::with_capacity(data.len() + 1);
    out.push((n as u8 + 63) as char);
    out.extend(data.into_iter().map(|b| (b + 63) as char));
    out
}

/// Parses the edge-list format: a first line `n <count>`, then one `u v`
/// pair per line. Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let err = |line: usize, message: String| Error::EdgeList { line, message };

    let (line_no, header) = lines.next().ok_or_else(|| err(1, "missing `n <count>` header".into()))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => {
            count.parse::<usize>().map_err(|_| err(line_no, format!("unparsable vertex count `{count}`")))?
        }
        _ => return Err(err(line_no, format!("expected `n <count>`, found `{header}`"))),
    };
    if n > MAX_ORDER {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let ids = line
            .split_whitespace()
            .map(|tok| tok.parse::<usize>().map_err(|_| err(line_no, format!("unparsable token `{tok}`"))))
            .collect::<Result<Vec<_>>>()?;
        let [u, v] = ids[..] else {
            return Err(err(line_no, format!("expected two vertex ids, found {}", ids.len())));
        };
        if u >= n || v >= n {
            return Err(err(line_no, format!("vertex {} out of range 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, edges)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses any supported single-graph input: edge-list text when the first
/// meaningful line starts with `n `, graph6 otherwise.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(l) if l.starts_with("n ") || l == "n" => parse_edge_list(text),
        Some(l) => parse_graph6(l),
        None => Err(Error::Graph6("empty input".into())),
    }
}

/// Parses a catalog: one graph6 string per line, optional `>>graph6<<`
/// headers, blank lines ignored.
pub fn parse_catalog(text: &str) -> Result<Vec<Graph>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty()).map(parse_graph6).collect()
}

pub fn read_catalog(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}

/// Every graph on at most seven vertices, one per isomorphism class (1253
/// graphs), ordered by vertex count then edge count.
pub fn small_graph_catalog() -> Vec<Graph> {
    parse_catalog(include_str!("../data/graphs_upto7.g6")).expect("bundled catalog is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    // Reference strings produced by networkx's graph6 writer.
    #[test]
    fn graph6_reference_strings() {
        assert_eq!(parse_graph6("A_").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph6("@").unwrap(), complete(1).unwrap());
        let p3 = parse_graph6("Bg").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(encode_graph6(&cycle(4).unwrap()), "Cl");
        assert_eq!(encode_graph6(&cycle(5).unwrap()), "Dhc");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6(""), Err(Error::Graph6(_))));
        // byte below 63
        assert!(matches!(parse_graph6("A!"), Err(Error::Graph6(_))));
        // C_4 needs one data byte
        assert!(matches!(parse_graph6("C"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("Cll"), Err(Error::Graph6(_))));
        // K_2 uses one bit; "A`" sets a padding bit
        assert!(matches!(parse_graph6("A`"), Err(Error::Graph6(_))));
        assert!(matches!(parse_graph6("~?@?"), Err(Error::TooManyVertices(64))));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("n 2\n0 1").unwrap(), complete(2).unwrap());
        assert_eq!(parse_edge_list("n 3\n").unwrap(), Graph::empty(3).unwrap());
        assert_eq!(parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0").unwrap(), cycle(4).unwrap());
        assert_eq!(parse_edge_list("n 3\n0 1\n1 0\n").unwrap().size(), 1);
    }

    #[test]
    fn edge_list_errors() {
        let line_of = |r: Result<Graph>| match r {
            Err(Error::EdgeList { line, .. }) => line,
            other => panic!("expected edge-list error, got {other:?}"),
        };
        assert_eq!(line_of(parse_edge_list("n 2\n0 2")), 2);
        assert_eq!(line_of(parse_edge_list("n 2\n1 1")), 2);
        assert_eq!(line_of(parse_edge_list("n 2\n0 x")), 2);
        assert_eq!(line_of(parse_edge_list("m 2")), 1);
        assert_eq!(line_of(parse_edge_list("n 3\n0 1 2")), 2);
    }

    #[test]
    fn format_detection() {
        assert_eq!(parse_graph("n 2\n0 1\n").unwrap(), complete(2).unwrap());
        assert_eq!(parse_graph("Cl\n").unwrap(), cycle(4).unwrap());
        assert_eq!(parse_graph(&format_edge_list(&cycle(6).unwrap())).unwrap(), cycle(6).unwrap());
    }

    #[test]
    fn bundled_catalog() {
        let cat = small_graph_catalog();
        assert_eq!(cat.len(), 1253);
        let by_order: Vec<usize> = (0..=7).map(|n| cat.iter().filter(|g| g.order() == n).count()).collect();
        assert_eq!(by_order, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }
}
