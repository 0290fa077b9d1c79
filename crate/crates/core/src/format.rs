//! Plain-text formats for complexes, graphs and quadrillages.
//!
//! Every format starts with a header line naming the kind and a size,
//! followed by one record per line. Blank lines and anything after `#` are
//! ignored.
//!
//! ```text
//! simplicial 2      graph 4      quad 4
//! 1 2 3             1 2          1 2 3 4
//! 1 2 4             2 3
//! ...               ...
//! ```

use std::fmt::Write as _;
use std::str::FromStr;

use crate::complex::{Face, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::metric::Graph;
use crate::quadrillage::Quadrillage;

/// Any parsed input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Document {
    Simplicial(SimplicialComplex),
    Graph(Graph),
    Quad(Quadrillage),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Simplicial(_) => "simplicial",
            Document::Graph(_) => "graph",
            Document::Quad(_) => "quad",
        }
    }
}

/// Non-empty lines with comments stripped, numbered from 1.
fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((i + 1, content))
    })
}

fn numbers<T: FromStr>(line: usize, content: &str) -> Result<Vec<T>> {
    content
        .split_whitespace()
        .map(|tok| tok.parse().map_err(|_| Error::parse(line, format!("expected an integer, got {tok:?}"))))
        .collect()
}

pub fn parse(text: &str) -> Result<Document> {
    let mut lines = records(text);
    let (line, header) = lines.next().ok_or_else(|| Error::parse(0, "empty input"))?;
    let mut words = header.split_whitespace();
    let kind = words.next().unwrap_or("");
    let size: usize = match (words.next().map(str::parse), words.next()) {
        (Some(Ok(size)), None) => size,
        _ => return Err(Error::parse(line, format!("malformed header {header:?}"))),
    };
    match kind {
        "simplicial" => parse_simplicial_body(size, lines).map(Document::Simplicial),
        "graph" => parse_graph_body(size, lines).map(Document::Graph),
        "quad" => parse_quad_body(size, lines).map(Document::Quad),
        _ => Err(Error::parse(line, format!("unknown kind {kind:?}"))),
    }
}

fn parse_simplicial_body<'a>(
    dim: usize,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<SimplicialComplex> {
    let mut facets = Vec::new();
    for (line, content) in lines {
        let vertices: Vec<VertexId> = numbers(line, content)?;
        if vertices.len() != dim + 1 {
            return Err(Error::parse(
                line,
                format!("facet of a {dim}-complex needs {} vertices, got {}", dim + 1, vertices.len()),
            ));
        }
        facets.push(Face::new(vertices).map_err(|e| Error::parse(line, e.to_string()))?);
    }
    SimplicialComplex::new(dim, facets)
}

fn parse_graph_body<'a>(n: usize, lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Graph> {
    let mut edges = Vec::new();
    for (line, content) in lines {
        match numbers::<usize>(line, content)?.as_slice() {
            &[u, v] if (1..=n).contains(&u) && (1..=n).contains(&v) && u != v => {
                edges.push((u - 1, v - 1))
            }
            [_, _] => return Err(Error::parse(line, format!("edge must join two distinct ids in 1..={n}"))),
            _ => return Err(Error::parse(line, "an edge line holds exactly two ids")),
        }
    }
    Graph::new(n, edges)
}

fn parse_quad_body<'a>(
    n: usize,
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Quadrillage> {
    let mut faces = Vec::new();
    for (line, content) in lines {
        let ids: Vec<VertexId> = numbers(line, content)?;
        let face: [VertexId; 4] = ids
            .try_into()
            .map_err(|_| Error::parse(line, "a face line holds exactly four ids"))?;
        faces.push(face);
    }
    Quadrillage::new(n, faces)
}

fn expect_kind(doc: Document, kind: &'static str) -> Result<Document> {
    if doc.kind() == kind {
        Ok(doc)
    } else {
        Err(Error::parse(1, format!("expected a {kind} file, got {}", doc.kind())))
    }
}

pub fn parse_simplicial(text: &str) -> Result<SimplicialComplex> {
    match expect_kind(parse(text)?, "simplicial")? {
        Document::Simplicial(c) => Ok(c),
        _ => unreachable!(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match expect_kind(parse(text)?, "graph")? {
        Document::Graph(g) => Ok(g),
        _ => unreachable!(),
    }
}

pub fn parse_quad(text: &str) -> Result<Quadrillage> {
    match expect_kind(parse(text)?, "quad")? {
        Document::Quad(q) => Ok(q),
        _ => unreachable!(),
    }
}

pub fn write_simplicial(complex: &SimplicialComplex) -> String {
    let mut out = format!("simplicial {}\n", complex.dim());
    for facet in complex.facets() {
        let _ = writeln!(out, "{}", join(facet.vertices()));
    }
    out
}

/// Vertices are written by position (`1..=n`); labels are not preserved.
pub fn write_graph(graph: &Graph) -> String {
    let mut out = format!("graph {}\n", graph.vertex_count());
    for &(a, b) in graph.edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

pub fn write_quad(quad: &Quadrillage) -> String {
    let mut out = format!("quad {}\n", quad.vertex_count());
    for face in quad.faces() {
        let _ = writeln!(out, "{}", join(face));
    }
    out
}

pub fn write(doc: &Document) -> String {
    match doc {
        Document::Simplicial(c) => write_simplicial(c),
        Document::Graph(g) => write_graph(g),
        Document::Quad(q) => write_quad(q),
    }
}

fn join(ids: &[VertexId]) -> String {
    ids.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}
