//! Line-oriented text formats for graphs, colorings, preassignments and
//! reduction traces.
//!
//! Graph file:
//!
//! ```text
//! # comment
//! p imcg <n> <m>
//! b <k>                # optional: vertices 1..k form part 1
//! e <u> <v>            # exactly m lines; line i defines edge i
//! ```
//!
//! A bipartition that is not a prefix split is written as
//! `bp <part of 1> ... <part of n>` with labels 1 or 2. Exactly one of `b`
//! and `bp` may appear, before the first edge line.
//!
//! Coloring file: `p imcol <m> <t>` followed by `m` lines `c <edge> <color>`
//! in any order. Serialization sorts by edge id.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::gadgets::{ColorSet, Origin, Preassignment};
use crate::graph::{Bipartition, Multigraph, Part, VertexId};

/// A parsed graph file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Multigraph,
    pub bipartition: Option<Bipartition>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

fn num<T: std::str::FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

fn last_line(text: &str) -> usize {
    text.lines().count().max(1)
}

pub fn parse_graph(text: &str) -> Result<GraphFile> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `p imcg` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "imcg" {
        return Err(parse_err(hline, "expected header `p imcg <n> <m>`"));
    }
    let n: usize = num(hline, header[2], "vertex count")?;
    let m: usize = num(hline, header[3], "edge count")?;

    let mut parts: Option<Vec<Part>> = None;
    let mut edges = Vec::with_capacity(m);
    for (ln, toks) in lines {
        match toks[0] {
            "b" | "bp" if !edges.is_empty() => {
                return Err(parse_err(ln, "bipartition line must precede edge lines"));
            }
            "b" | "bp" if parts.is_some() => {
                return Err(parse_err(ln, "duplicate bipartition line"));
            }
            "b" => {
                if toks.len() != 2 {
                    return Err(parse_err(ln, "expected `b <k>`"));
                }
                let k: usize = num(ln, toks[1], "part size")?;
                if k > n {
                    return Err(parse_err(
                        ln,
                        format!("part size {k} exceeds vertex count {n}"),
                    ));
                }
                parts = Some(
                    (0..n)
                        .map(|i| if i < k { Part::One } else { Part::Two })
                        .collect(),
                );
            }
            "bp" => {
                if toks.len() != n + 1 {
                    return Err(parse_err(ln, format!("expected {n} part labels")));
                }
                let labels = toks[1..]
                    .iter()
                    .map(|&t| match t {
                        "1" => Ok(Part::One),
                        "2" => Ok(Part::Two),
                        _ => Err(parse_err(ln, format!("invalid part label `{t}`"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                parts = Some(labels);
            }
            "e" => {
                if toks.len() != 3 {
                    return Err(parse_err(ln, "expected `e <u> <v>`"));
                }
                if edges.len() == m {
                    return Err(parse_err(ln, format!("more than {m} edge lines")));
                }
                let u: usize = num(ln, toks[1], "endpoint")?;
                let v: usize = num(ln, toks[2], "endpoint")?;
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(parse_err(ln, format!("endpoint {w} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(ln, format!("loop at vertex {u}")));
                }
                if let Some(p) = &parts {
                    if p[u - 1] == p[v - 1] {
                        return Err(parse_err(
                            ln,
                            format!("edge {u}-{v} lies inside part {}", p[u - 1].label()),
                        ));
                    }
                }
                edges.push((VertexId(u), VertexId(v)));
            }
            other => return Err(parse_err(ln, format!("unknown line type `{other}`"))),
        }
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line(text),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Multigraph::new(n, edges)?;
    let bipartition = parts.map(|p| Bipartition::new(&graph, p)).transpose()?;
    Ok(GraphFile { graph, bipartition })
}

pub fn serialize_graph(g: &Multigraph, bip: Option<&Bipartition>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p imcg {} {}", g.vertex_count(), g.edge_count());
    if let Some(b) = bip {
        match b.prefix_len() {
            Some(k) => {
                let _ = writeln!(out, "b {k}");
            }
            None => {
                out.push_str("bp");
                for p in b.parts() {
                    let _ = write!(out, " {}", p.label());
                }
                out.push('\n');
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}

pub fn parse_coloring(text: &str) -> Result<EdgeColoring> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `p imcol` header"))?;
    if header.len() != 4 || header[0] != "p" || header[1] != "imcol" {
        return Err(parse_err(hline, "expected header `p imcol <m> <t>`"));
    }
    let m: usize = num(hline, header[2], "edge count")?;
    let t: Color = num(hline, header[3], "color count")?;
    let mut colors: Vec<Option<Color>> = vec![None; m];
    for (ln, toks) in lines {
        if toks[0] != "c" || toks.len() != 3 {
            return Err(parse_err(ln, "expected `c <edge> <color>`"));
        }
        let e: usize = num(ln, toks[1], "edge id")?;
        let c: Color = num(ln, toks[2], "color")?;
        if e == 0 || e > m {
            return Err(parse_err(ln, format!("edge id {e} out of range 1..={m}")));
        }
        if c == 0 || c > t {
            return Err(parse_err(ln, format!("color {c} out of range 1..={t}")));
        }
        if colors[e - 1].replace(c).is_some() {
            return Err(parse_err(ln, format!("edge {e} colored twice")));
        }
    }
    if let Some(i) = colors.iter().position(Option::is_none) {
        return Err(parse_err(
            last_line(text),
            format!("edge {} has no color", i + 1),
        ));
    }
    EdgeColoring::new(colors.into_iter().flatten().collect())
}

pub fn serialize_coloring(c: &EdgeColoring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p imcol {} {}", c.len(), c.max_color().unwrap_or(0));
    for (i, col) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "c {} {col}", i + 1);
    }
    out
}

/// Lines `t <vertex> <c1> [<c2> [<c3>]]`.
pub fn parse_preassignment(text: &str) -> Result<Preassignment> {
    let mut sets = BTreeMap::new();
    for (ln, toks) in content_lines(text) {
        if toks[0] != "t" || !(2..=5).contains(&toks.len()) {
            return Err(parse_err(ln, "expected `t <vertex> <c1> [<c2> [<c3>]]`"));
        }
        let v: usize = num(ln, toks[1], "vertex")?;
        if v == 0 {
            return Err(parse_err(ln, "vertex ids start at 1"));
        }
        let colors = toks[2..]
            .iter()
            .map(|tok| num::<Color>(ln, tok, "color"))
            .collect::<Result<Vec<_>>>()?;
        let set = ColorSet::from_colors(&colors).map_err(|e| parse_err(ln, e.to_string()))?;
        if sets.insert(VertexId(v), set).is_some() {
            return Err(parse_err(ln, format!("vertex {v} preassigned twice")));
        }
    }
    Ok(Preassignment::from_map(sets))
}

pub fn serialize_preassignment(p: &Preassignment) -> String {
    let mut out = String::new();
    for (v, set) in p.iter() {
        let _ = write!(out, "t {v}");
        for c in set.iter() {
            let _ = write!(out, " {c}");
        }
        out.push('\n');
    }
    out
}

pub fn serialize_trace(trace: &[Origin]) -> String {
    let mut out = String::new();
    for (i, o) in trace.iter().enumerate() {
        let _ = writeln!(out, "map {} {o}", i + 1);
    }
    out
}
