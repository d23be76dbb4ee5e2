//! Spanning cycle collections and the anti-directed validity check.
//!
//! A cycle `[v0, v1, ..., v(m-1)]` has edges `v(i) - v(i+1 mod m)`. An
//! orientation assigns one flag per edge: `true` means the arc runs
//! `v(i) -> v(i+1)`, `false` means `v(i+1) -> v(i)`. A cycle is anti-directed
//! exactly when the flags alternate, so that every vertex is either the tail
//! of both of its cycle arcs or the head of both.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleCover {
    pub cycles: Vec<Vec<usize>>,
    /// Per-cycle, per-edge direction flags. `None` leaves the orientation to
    /// be inferred.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<Vec<bool>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverDefect {
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} appears more than once")]
    Repeated(usize),
    #[error("vertex {0} is not covered")]
    Uncovered(usize),
    #[error("cycle {cycle} has length {len}; anti-directed cycles need even length at least 4")]
    BadLength { cycle: usize, len: usize },
    #[error("orientation of cycle {cycle} has {got} flags for {expected} edges")]
    OrientationShape {
        cycle: usize,
        expected: usize,
        got: usize,
    },
    #[error("orientation lists {got} cycles, cover has {cycles}")]
    OrientationCount { cycles: usize, got: usize },
    #[error("cycle {cycle} needs arc ({tail}, {head}) which is absent")]
    MissingArc {
        cycle: usize,
        tail: usize,
        head: usize,
    },
    #[error("cycle {cycle} forms a directed path through vertex {vertex}")]
    DirectedPath { cycle: usize, vertex: usize },
    #[error("cycle {cycle} admits no alternating orientation")]
    NoOrientation { cycle: usize },
}

impl CycleCover {
    pub fn new(cycles: Vec<Vec<usize>>) -> Self {
        CycleCover {
            cycles,
            orientation: None,
        }
    }

    pub fn oriented(cycles: Vec<Vec<usize>>, orientation: Vec<Vec<bool>>) -> Self {
        CycleCover {
            cycles,
            orientation: Some(orientation),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }

    /// The arcs of the cover as `(tail, head)` pairs, cycle by cycle. Empty
    /// when no orientation is attached.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let Some(orientation) = &self.orientation else {
            return Vec::new();
        };
        self.cycles
            .iter()
            .zip(orientation)
            .flat_map(|(cycle, flags)| {
                let m = cycle.len();
                flags.iter().enumerate().map(move |(i, &fwd)| {
                    let (a, b) = (cycle[i], cycle[(i + 1) % m]);
                    if fwd {
                        (a, b)
                    } else {
                        (b, a)
                    }
                })
            })
            .collect()
    }
}

/// Checks that `cover` is an anti-directed 2-factor of `d`. Without an
/// attached orientation each cycle may take either alternating orientation.
pub fn validate_anti_directed_cover(d: &Digraph, cover: &CycleCover) -> Result<(), CoverDefect> {
    check_spanning(d.order(), &cover.cycles)?;
    if let Some(all) = &cover.orientation {
        if all.len() != cover.cycles.len() {
            return Err(CoverDefect::OrientationCount {
                cycles: cover.cycles.len(),
                got: all.len(),
            });
        }
    }
    for (ci, cycle) in cover.cycles.iter().enumerate() {
        let len = cycle.len();
        if len < 4 || len % 2 == 1 {
            return Err(CoverDefect::BadLength { cycle: ci, len });
        }
        match &cover.orientation {
            Some(all) => {
                check_oriented_cycle(d, ci, cycle, &all[ci])?;
            }
            None => {
                if alternating_orientation(d, cycle).is_none() {
                    return Err(CoverDefect::NoOrientation { cycle: ci });
                }
            }
        }
    }
    Ok(())
}

pub fn is_anti_directed_cover(d: &Digraph, cover: &CycleCover) -> bool {
    validate_anti_directed_cover(d, cover).is_ok()
}

/// One of the two alternating orientations of `cycle` whose arcs all exist
/// in `d`, preferring the one where `cycle[0]` is a source.
pub fn alternating_orientation(d: &Digraph, cycle: &[usize]) -> Option<Vec<bool>> {
    let m = cycle.len();
    if m < 4 || m % 2 == 1 {
        return None;
    }
    [true, false].into_iter().find_map(|first| {
        let flags: Vec<bool> = (0..m).map(|i| (i % 2 == 0) == first).collect();
        flags
            .iter()
            .enumerate()
            .all(|(i, &fwd)| {
                let (a, b) = (cycle[i], cycle[(i + 1) % m]);
                if fwd {
                    d.has_arc(a, b)
                } else {
                    d.has_arc(b, a)
                }
            })
            .then_some(flags)
    })
}

/// Attaches an alternating orientation to every cycle, if one exists.
pub fn orient_cover(d: &Digraph, cycles: Vec<Vec<usize>>) -> Option<CycleCover> {
    let orientation = cycles
        .iter()
        .map(|c| alternating_orientation(d, c))
        .collect::<Option<Vec<_>>>()?;
    Some(CycleCover::oriented(cycles, orientation))
}

pub(crate) fn check_spanning(n: usize, cycles: &[Vec<usize>]) -> Result<(), CoverDefect> {
    let mut seen = vec![false; n];
    for &v in cycles.iter().flatten() {
        if v >= n {
            return Err(CoverDefect::OutOfRange { vertex: v, n });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(CoverDefect::Repeated(v));
        }
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(CoverDefect::Uncovered(v)),
        None => Ok(()),
    }
}

fn check_oriented_cycle(
    d: &Digraph,
    ci: usize,
    cycle: &[usize],
    flags: &[bool],
) -> Result<(), CoverDefect> {
    let m = cycle.len();
    if flags.len() != m {
        return Err(CoverDefect::OrientationShape {
            cycle: ci,
            expected: m,
            got: flags.len(),
        });
    }
    for (i, &fwd) in flags.iter().enumerate() {
        let (a, b) = (cycle[i], cycle[(i + 1) % m]);
        let (tail, head) = if fwd { (a, b) } else { (b, a) };
        if !d.has_arc(tail, head) {
            return Err(CoverDefect::MissingArc {
                cycle: ci,
                tail,
                head,
            });
        }
    }
    // Vertex cycle[i] sits between edge i-1 and edge i.
    for i in 0..m {
        if flags[i] == flags[(i + m - 1) % m] {
            return Err(CoverDefect::DirectedPath {
                cycle: ci,
                vertex: cycle[i],
            });
        }
    }
    Ok(())
}
