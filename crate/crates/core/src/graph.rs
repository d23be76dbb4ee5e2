//! Digraphs and simple graphs over dense vertex ids `0..n`, with the plain
//! text format shared by every tool in this crate.
//!
//! The format is line oriented: the first non-comment line holds the vertex
//! count, each further non-comment line holds one pair `u v`. Lines whose
//! first non-blank character is `#` are comments. Blank lines are skipped.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// What went wrong on a particular input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing vertex count")]
    MissingHeader,
    #[error("malformed vertex count {0:?}")]
    BadHeader(String),
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("malformed line {0:?}, expected two vertex ids")]
    Malformed(String),
    #[error("endpoint {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) must be written with the smaller endpoint first")]
    Unordered(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// Structural violations when building a graph programmatically.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex count must be positive")]
    EmptyGraph,
    #[error("endpoint {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
}

/// A directed graph without loops or parallel arcs. The opposite pair
/// `(u, v)`, `(v, u)` may both be present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            check_pair(n, u, v)?;
            if !set.insert((u, v)) {
                return Err(GraphError::DuplicateArc(u, v));
            }
        }
        Ok(Self::from_set(n, set))
    }

    fn from_set(n: usize, arcs: BTreeSet<(usize, usize)>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out[u].push(v);
            inn[v].push(u);
        }
        for list in inn.iter_mut() {
            list.sort_unstable();
        }
        Digraph { n, arcs, out, inn }
    }

    /// The complete digraph: every ordered pair of distinct vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Digraph::new(
            n,
            (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))),
        )
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Out-neighbours of `v`, sorted.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// In-neighbours of `v`, sorted.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    /// Minimum over all vertices of the smaller of in- and outdegree.
    pub fn min_degree(&self) -> usize {
        (0..self.n)
            .map(|v| self.out_degree(v).min(self.in_degree(v)))
            .min()
            .unwrap_or(0)
    }

    /// Returns a copy with one more arc. Fails on an existing arc.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        check_pair(self.n, u, v)?;
        let mut arcs = self.arcs.clone();
        if !arcs.insert((u, v)) {
            return Err(GraphError::DuplicateArc(u, v));
        }
        Ok(Self::from_set(self.n, arcs))
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        let arcs = self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Self::from_set(self.n, arcs)
    }

    /// Parses the text format described in the module docs.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (n, pairs) = parse_pairs(text)?;
        let mut set = BTreeSet::new();
        for (line, u, v) in pairs {
            if !set.insert((u, v)) {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::DuplicateArc(u, v),
                });
            }
        }
        Ok(Self::from_set(n, set))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.arcs() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// An undirected simple graph. Edges are stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from unordered pairs; either endpoint order is accepted.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            check_pair(n, u, v)?;
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
        }
        Ok(Self::from_set(n, set))
    }

    fn from_set(n: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
        }
        SimpleGraph { n, edges, adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order, each with the smaller endpoint first.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Index of edge `{u, v}` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges
            .contains(&key)
            .then(|| self.edges.range(..key).count())
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let (n, pairs) = parse_pairs(text)?;
        let mut set = BTreeSet::new();
        for (line, u, v) in pairs {
            if u > v {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::Unordered(u, v),
                });
            }
            if !set.insert((u, v)) {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::DuplicateEdge(u, v),
                });
            }
        }
        Ok(Self::from_set(n, set))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn check_pair(n: usize, u: usize, v: usize) -> Result<(), GraphError> {
    for vertex in [u, v] {
        if vertex >= n {
            return Err(GraphError::OutOfRange { vertex, n });
        }
    }
    if u == v {
        return Err(GraphError::SelfLoop(u));
    }
    Ok(())
}

/// Content lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_header(
    lines: &mut dyn Iterator<Item = (usize, &str)>,
) -> Result<usize, ParseError> {
    let (line, header) = lines.next().ok_or(ParseError {
        line: 1,
        kind: ParseErrorKind::MissingHeader,
    })?;
    let n: usize = header.parse().map_err(|_| ParseError {
        line,
        kind: ParseErrorKind::BadHeader(header.to_string()),
    })?;
    if n == 0 {
        return Err(ParseError {
            line,
            kind: ParseErrorKind::EmptyGraph,
        });
    }
    Ok(n)
}

pub(crate) fn parse_pair(n: usize, line: usize, body: &str) -> Result<(usize, usize), ParseError> {
    let err = |kind| ParseError { line, kind };
    let mut fields = body.split_whitespace();
    let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
        return Err(err(ParseErrorKind::Malformed(body.to_string())));
    };
    let (Ok(u), Ok(v)) = (a.parse::<usize>(), b.parse::<usize>()) else {
        return Err(err(ParseErrorKind::Malformed(body.to_string())));
    };
    for vertex in [u, v] {
        if vertex >= n {
            return Err(err(ParseErrorKind::OutOfRange { vertex, n }));
        }
    }
    if u == v {
        return Err(err(ParseErrorKind::SelfLoop(u)));
    }
    Ok((u, v))
}

type Pairs = Vec<(usize, usize, usize)>;

fn parse_pairs(text: &str) -> Result<(usize, Pairs), ParseError> {
    let mut lines = content_lines(text);
    let n = parse_header(&mut lines)?;
    let mut pairs = Vec::new();
    for (line, body) in lines {
        let (u, v) = parse_pair(n, line, body)?;
        pairs.push((line, u, v));
    }
    Ok((n, pairs))
}
