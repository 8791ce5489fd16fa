//! DIMACS `.col` and plain edge-list files.

use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    /// `p edge <n> <m>` then `e <u> <v>` lines, 1-indexed.
    Dimacs,
    /// `<n>` then `<u> <v>` lines, 0-indexed.
    EdgeList,
}

impl Format {
    /// `.col` files are DIMACS; otherwise the first meaningful line decides.
    pub fn detect(path: Option<&Path>, text: &str) -> Format {
        if path.and_then(|p| p.extension()).is_some_and(|e| e == "col") {
            return Format::Dimacs;
        }
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with('c') || l.starts_with('p') => Format::Dimacs,
            _ => Format::EdgeList,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

/// Edges may repeat in either orientation; repeats are merged.
fn build(n: usize, mut edges: Vec<(usize, usize)>, lines: &[usize]) -> Result<Graph> {
    for (k, &(u, v)) in edges.iter().enumerate() {
        if u >= n || v >= n {
            return Err(parse_err(lines[k], format!("vertex out of range for n = {n}")));
        }
        if u == v {
            return Err(parse_err(lines[k], "self-loop"));
        }
    }
    for e in edges.iter_mut() {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();
    edges.dedup();
    Ok(Graph::from_edges(n, edges)?)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line, "second problem line"));
                }
                match tok.next() {
                    Some("edge" | "col") => {}
                    other => return Err(parse_err(line, format!("expected `p edge`, got {other:?}"))),
                }
                n = Some(num(tok.next(), line, "vertex count")?);
                num(tok.next(), line, "edge count")?;
            }
            Some("e") => {
                if n.is_none() {
                    return Err(parse_err(line, "edge before problem line"));
                }
                let u = num(tok.next(), line, "endpoint")?;
                let v = num(tok.next(), line, "endpoint")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertices start at 1"));
                }
                edges.push((u - 1, v - 1));
                lines.push(line);
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type {other:?}"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "no problem line"))?;
    build(n, edges, &lines)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

/// Lines starting with `#` are comments.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let raw = raw.trim();
        if raw.is_empty() || raw.starts_with('#') {
            continue;
        }
        let mut tok = raw.split_whitespace();
        if n.is_none() {
            n = Some(num(tok.next(), line, "vertex count")?);
        } else {
            edges.push((num(tok.next(), line, "endpoint")?, num(tok.next(), line, "endpoint")?));
            lines.push(line);
        }
        if tok.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "empty file"))?;
    build(n, edges, &lines)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Dimacs => parse_dimacs(text),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn write(g: &Graph, format: Format) -> String {
    match format {
        Format::Dimacs => write_dimacs(g),
        Format::EdgeList => write_edge_list(g),
    }
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse(&text, Format::detect(Some(path), &text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip_is_exact() {
        let text = "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n";
        let g = parse_dimacs(text).unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(write_dimacs(&g), text);
    }

    #[test]
    fn dimacs_comments_and_repeats() {
        let g = parse_dimacs("c a triangle\np edge 3 6\ne 1 2\ne 2 1\ne 2 3\ne 3 1\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::wheel(5);
        let text = write_edge_list(&g);
        assert!(text.starts_with("6\n"));
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap()), text);
    }

    #[test]
    fn errors_carry_lines() {
        let e = parse_dimacs("p edge 3 1\ne 1 4\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }), "{e:?}");
        assert!(matches!(parse_edge_list("3\n0 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_dimacs("e 1 2\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn detection() {
        assert_eq!(Format::detect(None, "c hi\np edge 1 0\n"), Format::Dimacs);
        assert_eq!(Format::detect(None, "# hi\n3\n0 1\n"), Format::EdgeList);
        assert_eq!(Format::detect(Some(Path::new("x.col")), "3\n"), Format::Dimacs);
    }
}
