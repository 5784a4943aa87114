//! Plain-text file formats.
//!
//! Hypergraph file:
//!
//! ```text
//! # comment
//! vertices 1 2 3 4
//! edge 1 2 3
//! edge 2 3 4
//! ```
//!
//! Digraph file: a `vertices` line followed by `arc u v` lines.
//!
//! Rendering is canonical: labels ascending, edge lines in lexicographic
//! order, no comments, trailing newline. Parsing accepts comments, blank
//! lines and any line order after the `vertices` header.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_labels<'a>(line: usize, fields: impl Iterator<Item = &'a str>) -> Result<Vec<VertexId>> {
    fields
        .map(|f| {
            let raw: u32 = f
                .parse()
                .map_err(|_| parse_err(line, format!("invalid vertex label {f:?}")))?;
            VertexId::new(raw).map_err(|e| parse_err(line, e.to_string()))
        })
        .collect()
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    parse_hypergraph_lines(content_lines(text))
}

fn parse_hypergraph_lines<'a>(
    mut lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Hypergraph> {
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `vertices` header"))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("vertices") {
        return Err(parse_err(first, "expected `vertices` header"));
    }
    let vertices = parse_labels(first, fields)?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("edge") => edges.push(parse_labels(no, fields)?),
            Some(other) => return Err(parse_err(no, format!("unknown record {other:?}"))),
            None => unreachable!("blank lines are filtered"),
        }
    }
    Hypergraph::new(vertices, edges).map_err(|e| parse_err(first, e.to_string()))
}

pub fn render_hypergraph(h: &Hypergraph) -> String {
    let mut out = String::from("vertices");
    for v in h.vertices() {
        write!(out, " {v}").expect("write to string");
    }
    out.push('\n');
    for e in h.edges() {
        out.push_str("edge");
        for v in e.iter() {
            write!(out, " {v}").expect("write to string");
        }
        out.push('\n');
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = content_lines(text);
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `vertices` header"))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("vertices") {
        return Err(parse_err(first, "expected `vertices` header"));
    }
    let vertices = parse_labels(first, fields)?;
    let mut arcs = Vec::new();
    for (no, line) in lines {
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("arc") => {
                let ends = parse_labels(no, fields)?;
                let [u, v] = ends[..] else {
                    return Err(parse_err(no, "an arc needs exactly two endpoints"));
                };
                arcs.push((u, v));
            }
            Some(other) => return Err(parse_err(no, format!("unknown record {other:?}"))),
            None => unreachable!("blank lines are filtered"),
        }
    }
    Digraph::new(vertices, arcs).map_err(|e| parse_err(first, e.to_string()))
}

pub fn render_digraph(d: &Digraph) -> String {
    let mut out = String::from("vertices");
    for v in d.vertices() {
        write!(out, " {v}").expect("write to string");
    }
    out.push('\n');
    for (u, v) in d.arcs() {
        writeln!(out, "arc {u} {v}").expect("write to string");
    }
    out
}

/// A file holding several named hypergraphs, each introduced by a
/// `[kind id]` header line and written in the hypergraph format.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Section {
    pub kind: String,
    pub id: u32,
    pub hypergraph: Hypergraph,
}

/// Header line, kind, id and body lines of a section being read.
type OpenSection<'a> = (usize, String, u32, Vec<(usize, &'a str)>);

pub fn parse_sections(text: &str) -> Result<Vec<Section>> {
    let mut sections = Vec::new();
    let mut current: Option<OpenSection> = None;
    let finish = |cur: OpenSection| -> Result<Section> {
        let (line, kind, id, body) = cur;
        if body.is_empty() {
            return Err(parse_err(line, "section has no body"));
        }
        Ok(Section {
            kind,
            id,
            hypergraph: parse_hypergraph_lines(body.into_iter())?,
        })
    };
    for (no, line) in content_lines(text) {
        if let Some(inner) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            if let Some(cur) = current.take() {
                sections.push(finish(cur)?);
            }
            let mut fields = inner.split_whitespace();
            let (Some(kind), Some(id), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(parse_err(no, "section header must be `[kind id]`"));
            };
            let id = id
                .parse()
                .map_err(|_| parse_err(no, format!("invalid section id {id:?}")))?;
            current = Some((no, kind.to_string(), id, Vec::new()));
        } else {
            match current.as_mut() {
                Some((_, _, _, body)) => body.push((no, line)),
                None => return Err(parse_err(no, "content before the first section header")),
            }
        }
    }
    if let Some(cur) = current.take() {
        sections.push(finish(cur)?);
    }
    Ok(sections)
}

pub fn render_sections(sections: &[Section]) -> String {
    let mut out = String::new();
    for s in sections {
        writeln!(out, "[{} {}]", s.kind, s.id).expect("write to string");
        out.push_str(&render_hypergraph(&s.hypergraph));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn render_is_canonical() {
        let h = Hypergraph::from_labels(&[4, 3, 2, 1], &[&[4, 3, 2], &[3, 2, 1]]).unwrap();
        assert_eq!(
            render_hypergraph(&h),
            "vertices 1 2 3 4\nedge 1 2 3\nedge 2 3 4\n"
        );
    }

    #[test]
    fn parse_accepts_comments_and_blank_lines() {
        let text = "# header\n\nvertices 1 2 3 # trailing\nedge 2 1\n";
        let h = parse_hypergraph(text).unwrap();
        assert_eq!(h, Hypergraph::from_labels(&[1, 2, 3], &[&[1, 2]]).unwrap());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_hypergraph("edge 1 2\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_hypergraph("vertices 1 2\nedge 1 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_hypergraph("vertices 1 2\nface 1 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_hypergraph(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_hypergraph("vertices 1 2\nedge 1 3\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn digraph_round_trip() {
        let text = "vertices 1 2 3 5\narc 1 2\narc 1 3\narc 2 5\narc 3 5\n";
        let d = parse_digraph(text).unwrap();
        assert_eq!(render_digraph(&d), text);
        assert!(parse_digraph("vertices 1 2\narc 1\n").is_err());
        assert!(parse_digraph("vertices 1 2\narc 1 1\n").is_err());
    }

    #[test]
    fn sections_round_trip() {
        let text = "[tree 3]\nvertices 1 2 3\nedge 1 2\nedge 2 3\n[realization 1]\nvertices 1\n";
        let sections = parse_sections(text).unwrap();
        assert_eq!(sections.len(), 2);
        assert_eq!(sections[0].kind, "tree");
        assert_eq!(sections[1].id, 1);
        assert_eq!(render_sections(&sections), text);
        assert!(parse_sections("vertices 1\n").is_err());
        assert!(parse_sections("[tree]\nvertices 1\n").is_err());
        assert!(parse_sections("[tree 1]\n[tree 2]\nvertices 1\n").is_err());
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (2u32..9).prop_flat_map(|n| {
            let edge = proptest::collection::btree_set(1..=n, 2..=n as usize);
            proptest::collection::vec(edge, 0..8).prop_filter_map("valid hypergraph", move |es| {
                let es: Vec<Vec<u32>> = es.into_iter().map(|e| e.into_iter().collect()).collect();
                let refs: Vec<&[u32]> = es.iter().map(|e| e.as_slice()).collect();
                let vs: Vec<u32> = (1..=n).collect();
                Hypergraph::from_labels(&vs, &refs).ok()
            })
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_render(h in arb_hypergraph()) {
            let text = render_hypergraph(&h);
            let back = parse_hypergraph(&text).unwrap();
            prop_assert_eq!(&back, &h);
            prop_assert_eq!(render_hypergraph(&back), text);
        }
    }
}
