//! Line-oriented text format.
//!
//! ```text
//! # comment
//! v <label>            declare a vertex (declaration order fixes ids)
//! e <label> <label>    edge
//! c <label> ...        maximal cell (cell-complex files only)
//! m <label> <label>    map line (covering maps, boundary systems)
//! ```
//!
//! Labels are arbitrary non-whitespace byte strings.

use std::io::Write;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Label};

/// A parsed file: the graph, declared cells (as vertex ids) and raw map lines.
#[derive(Debug)]
pub struct Document {
    pub graph: Graph,
    pub cells: Vec<Vec<usize>>,
    pub maps: Vec<(Label, Label)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_document(input: &[u8]) -> Result<Document> {
    let mut b = GraphBuilder::new();
    let mut edges = Vec::new();
    let mut cells = Vec::new();
    let mut maps = Vec::new();
    for (i, raw) in input.split(|&c| c == b'\n').enumerate() {
        let lineno = i + 1;
        let mut tokens = raw.split(|c| c.is_ascii_whitespace()).filter(|t| !t.is_empty());
        let Some(head) = tokens.next() else { continue };
        if head.starts_with(b"#") {
            continue;
        }
        let rest: Vec<&[u8]> = tokens.collect();
        let lookup = |b: &GraphBuilder, t: &[u8]| {
            b.id_of(&Label::new(t))
                .ok_or_else(|| parse_err(lineno, format!("undeclared vertex `{}`", String::from_utf8_lossy(t))))
        };
        match head {
            b"v" => {
                let [label] = rest[..] else {
                    return Err(parse_err(lineno, "expected `v <label>`"));
                };
                b.add_vertex(Label::new(label)).map_err(|e| parse_err(lineno, e.to_string()))?;
            }
            b"e" => {
                let [x, y] = rest[..] else {
                    return Err(parse_err(lineno, "expected `e <label> <label>`"));
                };
                let (u, v) = (lookup(&b, x)?, lookup(&b, y)?);
                if u == v {
                    return Err(parse_err(lineno, "loops are not allowed"));
                }
                edges.push((u, v));
            }
            b"c" => {
                if rest.is_empty() {
                    return Err(parse_err(lineno, "empty cell"));
                }
                let mut cell = rest.iter().map(|t| lookup(&b, t)).collect::<Result<Vec<_>>>()?;
                cell.sort_unstable();
                cell.dedup();
                cells.push(cell);
            }
            b"m" => {
                let [x, y] = rest[..] else {
                    return Err(parse_err(lineno, "expected `m <label> <label>`"));
                };
                maps.push((Label::new(x), Label::new(y)));
            }
            other => {
                return Err(parse_err(
                    lineno,
                    format!("unknown directive `{}`", String::from_utf8_lossy(other)),
                ))
            }
        }
    }
    for (u, v) in edges {
        b.add_edge(u, v)?;
    }
    Ok(Document {
        graph: b.build(),
        cells,
        maps,
    })
}

/// Parse a plain complex file (`c`/`m` lines are rejected).
pub fn parse_graph(input: &[u8]) -> Result<Graph> {
    let doc = parse_document(input)?;
    if !doc.cells.is_empty() || !doc.maps.is_empty() {
        return Err(parse_err(0, "cell or map lines in a plain complex file"));
    }
    Ok(doc.graph)
}

fn write_line(out: &mut Vec<u8>, head: &[u8], labels: &[&Label]) {
    out.extend_from_slice(head);
    for l in labels {
        out.push(b' ');
        out.extend_from_slice(l.as_bytes());
    }
    out.push(b'\n');
}

/// Serialise a graph; vertices in id order, edges sorted.
pub fn write_graph(g: &Graph, out: &mut Vec<u8>) {
    for v in g.vertices() {
        write_line(out, b"v", &[g.label(v)]);
    }
    for (u, v) in g.edges() {
        write_line(out, b"e", &[g.label(u), g.label(v)]);
    }
}

pub fn write_cells(g: &Graph, cells: &[Vec<usize>], out: &mut Vec<u8>) {
    for c in cells {
        let ls: Vec<&Label> = c.iter().map(|&v| g.label(v)).collect();
        write_line(out, b"c", &ls);
    }
}

/// `m <source-label> <target-label>` for every source vertex.
pub fn write_map(source: &Graph, target: &Graph, map: &[usize], out: &mut Vec<u8>) {
    for (v, &w) in map.iter().enumerate() {
        write_line(out, b"m", &[source.label(v), target.label(w)]);
    }
}

pub fn write_comment(text: &str, out: &mut Vec<u8>) {
    writeln!(out, "# {text}").expect("writing to a Vec cannot fail");
}

pub fn graph_to_bytes(g: &Graph) -> Vec<u8> {
    let mut out = Vec::new();
    write_graph(g, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_preserves_ids_and_labels() {
        let text = b"# a path\nv a\nv b\nv \xffc\n\ne a b\ne b \xffc\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.len(), 3);
        assert_eq!(g.label(2).as_bytes(), b"\xffc");
        let again = parse_graph(&graph_to_bytes(&g)).unwrap();
        assert_eq!(again.labels(), g.labels());
        assert_eq!(again.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_graph(b"v a\ne a b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(matches!(parse_graph(b"v a\nv a\n").unwrap_err(), Error::Parse { line: 2, .. }));
        assert!(matches!(parse_graph(b"x\n").unwrap_err(), Error::Parse { line: 1, .. }));
    }

    #[test]
    fn cells_and_maps_parse() {
        let doc = parse_document(b"v a\nv b\nv c\ne a b\nc a b\nm a z\n").unwrap();
        assert_eq!(doc.cells, vec![vec![0, 1]]);
        assert_eq!(doc.maps.len(), 1);
    }
}
