//! Cubic 3-edge-colouring versus anti-directed 2-factors.
//!
//! Replacing every edge of a cubic graph `G` by two opposite arcs gives a
//! digraph `D` that has an anti-directed 2-factor exactly when `G` is
//! 3-edge-colourable: two colour classes form a 2-factor of even cycles,
//! and conversely the cycles of a cover 2-colour alternately while the
//! remaining edges form a perfect matching.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::{alternating_orientation, validate_anti_directed_cover, CoverDefect, CycleCover};
use crate::graph::{Digraph, SimpleGraph};
use crate::solver::{decide_adf, Certificate, Decision, SolverConfig, SolverError, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("graph is not cubic")]
    NotCubic,
    #[error("invalid colouring: {0}")]
    BadColoring(String),
    #[error("invalid cover: {0}")]
    BadCover(CoverDefect),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// A colour per edge, aligned by index with `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeColoring {
    pub edges: Vec<[usize; 2]>,
    pub colors: Vec<u8>,
}

impl EdgeColoring {
    /// Checks that `self` colours exactly the edges of `g` with colours
    /// `0..3` and that incident edges differ.
    pub fn validate(&self, g: &SimpleGraph) -> Result<(), ReductionError> {
        let bad = |m: String| Err(ReductionError::BadColoring(m));
        if self.edges.len() != self.colors.len() {
            return bad("edges and colors differ in length".into());
        }
        if self.edges.len() != g.edge_count() {
            return bad(format!("{} edges coloured, graph has {}", self.edges.len(), g.edge_count()));
        }
        let mut seen = vec![0u8; g.order()];
        let mut covered = std::collections::BTreeSet::new();
        for (&[u, v], &c) in self.edges.iter().zip(&self.colors) {
            if c > 2 {
                return bad(format!("colour {c} on edge {u}-{v}"));
            }
            if !g.has_edge(u, v) || !covered.insert((u.min(v), u.max(v))) {
                return bad(format!("edge {u}-{v} missing or repeated"));
            }
            for w in [u, v] {
                if seen[w] & 1 << c != 0 {
                    return bad(format!("colour {c} repeated at vertex {w}"));
                }
                seen[w] |= 1 << c;
            }
        }
        Ok(())
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<u8> {
        self.edges
            .iter()
            .position(|&[a, b]| (a, b) == (u, v) || (a, b) == (v, u))
            .map(|i| self.colors[i])
    }

    pub fn to_json(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(self)
        } else {
            serde_json::to_string(self)
        }
        .expect("coloring serializes")
    }
}

pub fn cubic_to_digraph(g: &SimpleGraph) -> Result<Digraph, ReductionError> {
    if !g.is_cubic() {
        return Err(ReductionError::NotCubic);
    }
    let arcs = g.edges().flat_map(|(u, v)| [(u, v), (v, u)]);
    Ok(Digraph::new(g.order(), arcs).expect("edges are simple"))
}

/// Exact 3-edge-colouring by backtracking. Edges are coloured in an order
/// where each edge touches an earlier one; the three edges at the first
/// vertex get colours 0, 1, 2 outright.
pub fn three_edge_color_direct(g: &SimpleGraph) -> Result<Option<EdgeColoring>, ReductionError> {
    if !g.is_cubic() {
        return Err(ReductionError::NotCubic);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let order = edge_order(g, &edges);
    let mut colors = vec![u8::MAX; edges.len()];
    let mut used = vec![0u8; g.order()];
    if let Some(&first) = order.first() {
        let v = edges[first].0;
        for (c, &e) in order.iter().filter(|&&e| edges[e].0 == v || edges[e].1 == v).enumerate() {
            colors[e] = c as u8;
            let (a, b) = edges[e];
            used[a] |= 1 << c;
            used[b] |= 1 << c;
        }
    }
    let rest: Vec<usize> = order.into_iter().filter(|&e| colors[e] == u8::MAX).collect();
    if !color_from(0, &rest, &edges, &mut colors, &mut used) {
        return Ok(None);
    }
    Ok(Some(EdgeColoring {
        edges: edges.iter().map(|&(u, v)| [u, v]).collect(),
        colors,
    }))
}

fn edge_order(g: &SimpleGraph, edges: &[(usize, usize)]) -> Vec<usize> {
    let n = g.order();
    let mut vertex_seen = vec![false; n];
    let mut edge_seen = vec![false; edges.len()];
    let mut order = Vec::with_capacity(edges.len());
    for root in 0..n {
        if vertex_seen[root] {
            continue;
        }
        vertex_seen[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                let e = g.edge_index(v, w).expect("neighbour edge");
                if !edge_seen[e] {
                    edge_seen[e] = true;
                    order.push(e);
                }
                if !vertex_seen[w] {
                    vertex_seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

fn color_from(i: usize, order: &[usize], edges: &[(usize, usize)], colors: &mut [u8], used: &mut [u8]) -> bool {
    let Some(&e) = order.get(i) else {
        return true;
    };
    let (a, b) = edges[e];
    let free = !(used[a] | used[b]) & 0b111;
    for c in 0..3u8 {
        if free & 1 << c == 0 {
            continue;
        }
        colors[e] = c;
        used[a] |= 1 << c;
        used[b] |= 1 << c;
        if color_from(i + 1, order, edges, colors, used) {
            return true;
        }
        used[a] &= !(1 << c);
        used[b] &= !(1 << c);
    }
    colors[e] = u8::MAX;
    false
}

/// Result of deciding colourability through the digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    /// `None` when the solver was inconclusive.
    pub colorable: Option<bool>,
    pub certificate: Certificate,
}

pub fn three_edge_colorable_via_adf(
    g: &SimpleGraph,
    strategy: Strategy,
    config: &SolverConfig,
) -> Result<ReductionOutcome, ReductionError> {
    let d = cubic_to_digraph(g)?;
    let certificate = decide_adf(&d, strategy, config)?;
    let colorable = match certificate.decision {
        Decision::Yes => Some(true),
        Decision::No => Some(false),
        Decision::Unknown => None,
    };
    Ok(ReductionOutcome {
        colorable,
        certificate,
    })
}

/// Colour classes 0 and 1 as an anti-directed 2-factor of the reduction
/// digraph.
pub fn coloring_to_adf(g: &SimpleGraph, coloring: &EdgeColoring) -> Result<CycleCover, ReductionError> {
    coloring.validate(g)?;
    let d = cubic_to_digraph(g)?;
    let n = g.order();
    let mut adj = vec![Vec::with_capacity(2); n];
    for (&[u, v], &c) in coloring.edges.iter().zip(&coloring.colors) {
        if c < 2 {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let (mut prev, mut cur) = (start, adj[start][0]);
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            prev = cur;
            cur = next;
        }
        // Colours alternate along the cycle, so its length is even.
        assert!(cycle.len() % 2 == 0 && cycle.len() >= 4, "two colour classes form even cycles");
        cycles.push(cycle);
    }
    let orientation = cycles
        .iter()
        .map(|c| alternating_orientation(&d, c).expect("both arcs of every edge exist"))
        .collect();
    let cover = CycleCover::oriented(cycles, orientation);
    validate_anti_directed_cover(&d, &cover).map_err(ReductionError::BadCover)?;
    Ok(cover)
}

/// Colours each cover cycle alternately 0/1 and the leftover perfect
/// matching 2.
pub fn adf_to_coloring(g: &SimpleGraph, cover: &CycleCover) -> Result<EdgeColoring, ReductionError> {
    let d = cubic_to_digraph(g)?;
    validate_anti_directed_cover(&d, cover).map_err(ReductionError::BadCover)?;
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut colors = vec![2u8; edges.len()];
    for cycle in &cover.cycles {
        for i in 0..cycle.len() {
            let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            let e = g.edge_index(u, v).expect("cover arcs are graph edges");
            colors[e] = (i % 2) as u8;
        }
    }
    let coloring = EdgeColoring {
        edges: edges.iter().map(|&(u, v)| [u, v]).collect(),
        colors,
    };
    coloring.validate(g)?;
    Ok(coloring)
}
