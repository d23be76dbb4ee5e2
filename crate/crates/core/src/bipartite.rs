//! Equipartitions, the bipartite graph `B(X, Y)` of a digraph, and exact
//! procedures on balanced bipartite graphs: 2-factors, deficient sets and
//! Hamilton cycles, plus the necessary degree conditions for their absence.
//!
//! Vertices keep their global ids from the host digraph. Internally each
//! side is indexed `0..n/2` in increasing global order.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::CycleCover;
use crate::flow::FlowNetwork;
use crate::graph::{self, Digraph, ParseError, ParseErrorKind};

/// Largest side for which exhaustive subset enumeration is allowed.
pub const EXHAUSTIVE_SIDE_LIMIT: usize = 20;

/// Largest order supported by the bitmask Hamilton search.
pub const HAMILTON_ORDER_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BipartiteError {
    #[error("an equipartition needs an even number of vertices, got {0}")]
    OddOrder(usize),
    #[error("side X has {got} vertices, expected {expected}")]
    WrongSideSize { expected: usize, got: usize },
    #[error("vertex {vertex} out of range for {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    Repeated(usize),
    #[error("partition covers {partition} vertices but the digraph has {graph}")]
    OrderMismatch { partition: usize, graph: usize },
    #[error("edge ({0}, {1}) does not run from X to Y")]
    NotCrossing(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex set straddles both sides")]
    Straddles,
    #[error("exhaustive search over 2^{side} subsets exceeds the limit 2^{limit}")]
    TooLarge { side: usize, limit: usize },
    #[error("Hamilton search supports at most {limit} vertices, got {n}")]
    HamiltonTooLarge { n: usize, limit: usize },
}

/// A split of `0..n` into two halves `X` and `Y`. The order matters: in
/// `B(X -> Y)` only arcs leaving `X` survive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Equipartition {
    n: usize,
    x: Vec<usize>,
    y: Vec<usize>,
    side: Vec<Side>,
    local: Vec<usize>,
}

impl Equipartition {
    pub fn new(n: usize, mut x: Vec<usize>) -> Result<Self, BipartiteError> {
        if n % 2 == 1 {
            return Err(BipartiteError::OddOrder(n));
        }
        x.sort_unstable();
        let mut side = vec![Side::Y; n];
        for &v in &x {
            if v >= n {
                return Err(BipartiteError::OutOfRange { vertex: v, n });
            }
            if side[v] == Side::X {
                return Err(BipartiteError::Repeated(v));
            }
            side[v] = Side::X;
        }
        if x.len() != n / 2 {
            return Err(BipartiteError::WrongSideSize {
                expected: n / 2,
                got: x.len(),
            });
        }
        let y: Vec<usize> = (0..n).filter(|&v| side[v] == Side::Y).collect();
        let mut local = vec![0; n];
        for (i, &v) in x.iter().enumerate() {
            local[v] = i;
        }
        for (i, &v) in y.iter().enumerate() {
            local[v] = i;
        }
        Ok(Equipartition {
            n,
            x,
            y,
            side,
            local,
        })
    }

    /// Builds the partition whose `X` side is the set bits of `mask`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self, BipartiteError> {
        let x = (0..n.min(64)).filter(|&v| mask >> v & 1 == 1).collect();
        Self::new(n, x)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn half(&self) -> usize {
        self.n / 2
    }

    pub fn x(&self) -> &[usize] {
        &self.x
    }

    pub fn y(&self) -> &[usize] {
        &self.y
    }

    pub fn side_of(&self, v: usize) -> Side {
        self.side[v]
    }

    pub fn members(&self, side: Side) -> &[usize] {
        match side {
            Side::X => &self.x,
            Side::Y => &self.y,
        }
    }

    /// The same split with the roles of the sides exchanged.
    pub fn swapped(&self) -> Self {
        Self::new(self.n, self.y.clone()).expect("complement of a valid side is valid")
    }

    /// `X: v1 v2 ...`
    pub fn to_line(&self) -> String {
        let mut s = String::from("X:");
        for v in &self.x {
            s.push_str(&format!(" {v}"));
        }
        s
    }
}

/// The balanced bipartite graph on an equipartition; edges are stored as
/// `(x, y)` with `x` in `X`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    partition: Equipartition,
    edges: Vec<(usize, usize)>,
    x_adj: Vec<Vec<usize>>,
    y_adj: Vec<Vec<usize>>,
}

/// `B(X, Y)`: keeps exactly the arcs of `d` that leave `X` and enter `Y`.
pub fn build_bipartite(d: &Digraph, p: &Equipartition) -> Result<BipartiteInstance, BipartiteError> {
    if d.order() != p.order() {
        return Err(BipartiteError::OrderMismatch {
            partition: p.order(),
            graph: d.order(),
        });
    }
    let edges = p
        .x()
        .iter()
        .flat_map(|&x| {
            d.out_neighbors(x)
                .iter()
                .filter(|&&y| p.side_of(y) == Side::Y)
                .map(move |&y| (x, y))
        })
        .collect();
    BipartiteInstance::new(p.clone(), edges)
}

impl BipartiteInstance {
    pub fn new(
        partition: Equipartition,
        mut edges: Vec<(usize, usize)>,
    ) -> Result<Self, BipartiteError> {
        let n = partition.order();
        let h = partition.half();
        edges.sort_unstable();
        let mut x_adj = vec![Vec::new(); h];
        let mut y_adj = vec![Vec::new(); h];
        for (i, &(x, y)) in edges.iter().enumerate() {
            for v in [x, y] {
                if v >= n {
                    return Err(BipartiteError::OutOfRange { vertex: v, n });
                }
            }
            if partition.side_of(x) != Side::X || partition.side_of(y) != Side::Y {
                return Err(BipartiteError::NotCrossing(x, y));
            }
            if i > 0 && edges[i - 1] == (x, y) {
                return Err(BipartiteError::DuplicateEdge(x, y));
            }
            let (lx, ly) = (partition.local[x], partition.local[y]);
            x_adj[lx].push(ly);
            y_adj[ly].push(lx);
        }
        for list in y_adj.iter_mut() {
            list.sort_unstable();
        }
        Ok(BipartiteInstance {
            partition,
            edges,
            x_adj,
            y_adj,
        })
    }

    pub fn partition(&self) -> &Equipartition {
        &self.partition
    }

    pub fn order(&self) -> usize {
        self.partition.order()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.binary_search(&(x, y)).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        let l = self.partition.local[v];
        match self.partition.side_of(v) {
            Side::X => self.x_adj[l].len(),
            Side::Y => self.y_adj[l].len(),
        }
    }

    /// Neighbours of `v` by global id, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let l = self.partition.local[v];
        match self.partition.side_of(v) {
            Side::X => self.x_adj[l].iter().map(|&j| self.partition.y[j]).collect(),
            Side::Y => self.y_adj[l].iter().map(|&i| self.partition.x[i]).collect(),
        }
    }

    /// All `n` degrees in nondecreasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    /// `N2(U)` for `U` inside one side: every neighbour of `U` counted once,
    /// or twice when at least two members of `U` are adjacent to it.
    pub fn neighborhood_multiset(&self, set: &[usize]) -> Result<NeighborMultiset, BipartiteError> {
        let n = self.order();
        let mut side = None;
        for &u in set {
            if u >= n {
                return Err(BipartiteError::OutOfRange { vertex: u, n });
            }
            let s = self.partition.side_of(u);
            if *side.get_or_insert(s) != s {
                return Err(BipartiteError::Straddles);
            }
        }
        let mut seen = vec![false; n];
        let mut multiplicity = BTreeMap::new();
        for &u in set {
            if std::mem::replace(&mut seen[u], true) {
                return Err(BipartiteError::Repeated(u));
            }
            for w in self.neighbors(u) {
                let m = multiplicity.entry(w).or_insert(0u8);
                *m = (*m + 1).min(2);
            }
        }
        let size = multiplicity.values().map(|&m| usize::from(m)).sum();
        Ok(NeighborMultiset { size, multiplicity })
    }

    /// A spanning 2-regular subgraph, decomposed into cycles, when one
    /// exists. Each cycle carries the orientation in which every arc runs
    /// from `X` to `Y`.
    ///
    /// Solved exactly as a flow problem: source to every `x` with capacity
    /// 2, unit capacity on every edge, every `y` to sink with capacity 2.
    pub fn two_factor(&self) -> Option<CycleCover> {
        let h = self.partition.half();
        let (mut net, ids) = self.degree_two_network();
        let (s, t) = (0, 2 * h + 1);
        if net.max_flow(s, t) != 2 * h as u64 {
            return None;
        }
        let mut adj = vec![Vec::with_capacity(2); self.order()];
        for (&(x, y), &id) in self.edges.iter().zip(&ids) {
            if net.flow(id) == 1 {
                adj[x].push(y);
                adj[y].push(x);
            }
        }
        let cycles = decompose_two_regular(&adj);
        let orientation = cycles
            .iter()
            .map(|c| c.iter().map(|&v| self.partition.side_of(v) == Side::X).collect())
            .collect();
        Some(CycleCover::oriented(cycles, orientation))
    }

    pub fn has_two_factor(&self) -> bool {
        let h = self.partition.half();
        let (mut net, _) = self.degree_two_network();
        net.max_flow(0, 2 * h + 1) == 2 * h as u64
    }

    fn degree_two_network(&self) -> (FlowNetwork, Vec<usize>) {
        let h = self.partition.half();
        let t = 2 * h + 1;
        let mut net = FlowNetwork::new(2 * h + 2);
        for i in 0..h {
            net.add_edge(0, 1 + i, 2);
            net.add_edge(1 + h + i, t, 2);
        }
        let ids = self
            .edges
            .iter()
            .map(|&(x, y)| {
                let (lx, ly) = (self.partition.local[x], self.partition.local[y]);
                net.add_edge(1 + lx, 1 + h + ly, 1)
            })
            .collect();
        (net, ids)
    }

    /// Looks for `U` inside `X` with `|N2(U)| < 2|U|`.
    ///
    /// `Exhaustive` scans every subset of `X` and returns one of minimum
    /// cardinality. `Minimal` reads a deficient set off a minimum cut of the
    /// 2-factor flow network, strips vertices while it stays deficient, and
    /// then, when the result has at most [`EXHAUSTIVE_SIDE_LIMIT`] members,
    /// replaces it by a smallest deficient subset. Either way the returned
    /// set has no deficient proper subset (for `Minimal` beyond the limit:
    /// no deficient subset obtained by removing one vertex).
    pub fn find_deficient_set(
        &self,
        mode: DeficiencyMode,
    ) -> Result<Option<DeficiencyWitness>, BipartiteError> {
        match mode {
            DeficiencyMode::Exhaustive => {
                let h = self.partition.half();
                if h > EXHAUSTIVE_SIDE_LIMIT {
                    return Err(BipartiteError::TooLarge {
                        side: h,
                        limit: EXHAUSTIVE_SIDE_LIMIT,
                    });
                }
                let all: Vec<usize> = (0..h).collect();
                Ok(self
                    .smallest_deficient_subset(&all)
                    .map(|local| self.witness(Side::X, &local)))
            }
            DeficiencyMode::Minimal => Ok(self.minimal_deficient_set()),
        }
    }

    fn minimal_deficient_set(&self) -> Option<DeficiencyWitness> {
        let h = self.partition.half();
        let (mut net, _) = self.degree_two_network();
        if net.max_flow(0, 2 * h + 1) == 2 * h as u64 {
            return None;
        }
        let reach = net.residual_reachable(0);
        let mut set: Vec<usize> = (0..h).filter(|&i| reach[1 + i]).collect();
        debug_assert!(self.local_n2(Side::X, &set) < 2 * set.len());
        loop {
            let before = set.len();
            let mut i = 0;
            while i < set.len() {
                let mut trial = set.clone();
                trial.remove(i);
                if self.local_n2(Side::X, &trial) < 2 * trial.len() {
                    set = trial;
                } else {
                    i += 1;
                }
            }
            if set.len() == before {
                break;
            }
        }
        if set.len() <= EXHAUSTIVE_SIDE_LIMIT {
            if let Some(smaller) = self.smallest_deficient_subset(&set) {
                set = smaller;
            }
        }
        Some(self.witness(Side::X, &set))
    }

    /// Smallest deficient subset of the local `X` indices in `pool`, ties
    /// broken by the lowest subset mask.
    fn smallest_deficient_subset(&self, pool: &[usize]) -> Option<Vec<usize>> {
        let k = pool.len();
        debug_assert!(k <= EXHAUSTIVE_SIDE_LIMIT);
        // For each y, which pool members it is adjacent to.
        let masks: Vec<u32> = self
            .y_adj
            .iter()
            .map(|xs| {
                pool.iter()
                    .enumerate()
                    .filter(|(_, x)| xs.binary_search(x).is_ok())
                    .fold(0u32, |m, (bit, _)| m | 1 << bit)
            })
            .filter(|&m| m != 0)
            .collect();
        let mut best: Option<u32> = None;
        for sub in 1u32..(1u32 << k) {
            let size = sub.count_ones();
            if best.is_some_and(|b| b.count_ones() <= size) {
                continue;
            }
            let n2: u32 = masks.iter().map(|&m| (m & sub).count_ones().min(2)).sum();
            if n2 < 2 * size {
                best = Some(sub);
            }
        }
        best.map(|b| (0..k).filter(|&i| b >> i & 1 == 1).map(|i| pool[i]).collect())
    }

    fn local_n2(&self, side: Side, set: &[usize]) -> usize {
        let (adj, other) = match side {
            Side::X => (&self.x_adj, self.y_adj.len()),
            Side::Y => (&self.y_adj, self.x_adj.len()),
        };
        let mut count = vec![0u8; other];
        for &u in set {
            for &w in &adj[u] {
                count[w] = (count[w] + 1).min(2);
            }
        }
        count.iter().map(|&c| usize::from(c)).sum()
    }

    fn witness(&self, side: Side, local: &[usize]) -> DeficiencyWitness {
        let members = self.partition.members(side);
        DeficiencyWitness {
            side,
            set: local.iter().map(|&i| members[i]).collect(),
            multiset_size: self.local_n2(side, local),
        }
    }

    /// Exact backtracking search for a Hamilton cycle, giving up with
    /// [`HamiltonSearch::Unknown`] after `node_budget` search nodes.
    pub fn hamilton_cycle(&self, node_budget: u64) -> Result<HamiltonSearch, BipartiteError> {
        let n = self.order();
        if n > HAMILTON_ORDER_LIMIT {
            return Err(BipartiteError::HamiltonTooLarge {
                n,
                limit: HAMILTON_ORDER_LIMIT,
            });
        }
        let mut adj = vec![0u64; n];
        for &(x, y) in &self.edges {
            adj[x] |= 1 << y;
            adj[y] |= 1 << x;
        }
        Ok(HamiltonSolver::new(adj, node_budget).run())
    }

    /// Wraps a Hamilton cycle as an oriented single-cycle cover.
    pub fn orient_cycle(&self, cycle: Vec<usize>) -> CycleCover {
        let flags = cycle
            .iter()
            .map(|&v| self.partition.side_of(v) == Side::X)
            .collect();
        CycleCover::oriented(vec![cycle], vec![flags])
    }

    /// Text form: vertex count, the `X:` line, then one `x y` line per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n{}\n", self.order(), self.partition.to_line());
        for (x, y) in &self.edges {
            s.push_str(&format!("{x} {y}\n"));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut lines = graph::content_lines(text);
        let n = graph::parse_header(&mut lines)?;
        let (line, xline) = lines.next().ok_or(ParseError {
            line: 2,
            kind: ParseErrorKind::Malformed("missing partition line".into()),
        })?;
        let bad = |msg: String| ParseError {
            line,
            kind: ParseErrorKind::Malformed(msg),
        };
        let rest = xline
            .strip_prefix("X:")
            .ok_or_else(|| bad(xline.to_string()))?;
        let x = rest
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| bad(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let partition = Equipartition::new(n, x).map_err(|e| bad(e.to_string()))?;
        let mut edges = Vec::new();
        let mut last = line;
        for (line, body) in lines {
            edges.push(graph::parse_pair(n, line, body)?);
            last = line;
        }
        BipartiteInstance::new(partition, edges).map_err(|e| ParseError {
            line: last,
            kind: ParseErrorKind::Malformed(e.to_string()),
        })
    }
}

impl fmt::Display for BipartiteInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborMultiset {
    pub size: usize,
    /// Capped multiplicity (1 or 2) of each neighbour.
    pub multiplicity: BTreeMap<usize, u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeficiencyMode {
    Exhaustive,
    Minimal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeficiencyWitness {
    pub side: Side,
    pub set: Vec<usize>,
    pub multiset_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HamiltonSearch {
    Found(Vec<usize>),
    Absent,
    Unknown { explored: u64 },
}

impl HamiltonSearch {
    pub fn cycle(&self) -> Option<&[usize]> {
        match self {
            HamiltonSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Splits a 2-regular graph into cycles, each starting at its smallest
/// vertex and continuing towards that vertex's smaller neighbour.
fn decompose_two_regular(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut cycles = Vec::new();
    for start in 0..adj.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let (mut prev, mut cur) = (start, adj[start][0].min(adj[start][1]));
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = if adj[cur][0] == prev {
                adj[cur][1]
            } else {
                adj[cur][0]
            };
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    cycles
}

struct HamiltonSolver {
    adj: Vec<u64>,
    n: usize,
    all: u64,
    start: usize,
    path: Vec<usize>,
    budget: u64,
    explored: u64,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl HamiltonSolver {
    fn new(adj: Vec<u64>, budget: u64) -> Self {
        let n = adj.len();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        HamiltonSolver {
            adj,
            n,
            all,
            start: 0,
            path: Vec::with_capacity(n),
            budget,
            explored: 0,
        }
    }

    fn run(mut self) -> HamiltonSearch {
        if self.n < 4 || self.adj.iter().any(|m| m.count_ones() < 2) {
            return HamiltonSearch::Absent;
        }
        // Every Hamilton cycle passes through a vertex of minimum degree.
        self.start = (0..self.n)
            .min_by_key(|&v| (self.adj[v].count_ones(), v))
            .expect("nonempty");
        self.path.push(self.start);
        match self.extend(1u64 << self.start) {
            Step::Done => HamiltonSearch::Found(std::mem::take(&mut self.path)),
            Step::Dead => HamiltonSearch::Absent,
            Step::OutOfBudget => HamiltonSearch::Unknown {
                explored: self.explored,
            },
        }
    }

    fn extend(&mut self, visited: u64) -> Step {
        self.explored += 1;
        if self.explored > self.budget {
            return Step::OutOfBudget;
        }
        let end = *self.path.last().expect("path starts nonempty");
        if self.path.len() == self.n {
            return if self.adj[end] >> self.start & 1 == 1 {
                Step::Done
            } else {
                Step::Dead
            };
        }
        let unvisited = self.all & !visited;
        if self.adj[self.start] & unvisited == 0 {
            return Step::Dead;
        }
        let ends = (1u64 << self.start) | (1u64 << end);
        let mut forced: Option<usize> = None;
        let mut rest = unvisited;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let avail = (self.adj[w] & (unvisited | ends)).count_ones();
            if avail < 2 {
                return Step::Dead;
            }
            if avail == 2 && end != self.start && self.adj[w] >> end & 1 == 1 {
                // w must use its edge to the current end, so it comes next.
                if forced.replace(w).is_some() {
                    return Step::Dead;
                }
            }
        }
        let mut candidates: Vec<usize> = match forced {
            Some(w) => vec![w],
            None => {
                let mut c = Vec::new();
                let mut m = self.adj[end] & unvisited;
                while m != 0 {
                    c.push(m.trailing_zeros() as usize);
                    m &= m - 1;
                }
                c.sort_by_key(|&w| ((self.adj[w] & unvisited).count_ones(), w));
                c
            }
        };
        for w in candidates.drain(..) {
            self.path.push(w);
            match self.extend(visited | 1u64 << w) {
                Step::Dead => {
                    self.path.pop();
                }
                other => return other,
            }
        }
        Step::Dead
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeConditionError {
    #[error("degree sequence has {got} entries for order {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("degree sequence is not nondecreasing")]
    Unsorted,
    #[error("order {n} outside the range of this condition ({requirement})")]
    Precondition { n: usize, requirement: &'static str },
}

fn check_sequence(degseq: &[usize], n: usize) -> Result<(), DegreeConditionError> {
    if degseq.len() != n {
        return Err(DegreeConditionError::LengthMismatch {
            expected: n,
            got: degseq.len(),
        });
    }
    if degseq.windows(2).any(|w| w[0] > w[1]) {
        return Err(DegreeConditionError::Unsorted);
    }
    Ok(())
}

/// `d_k <= k` and `d_(k-1) <= k - 1` for some `1 <= k <= bound` (1-based
/// indexing; for `k = 1` the second clause is vacuous).
fn staircase(degseq: &[usize], bound: usize) -> bool {
    (1..=bound).any(|k| degseq[k - 1] <= k && (k == 1 || degseq[k - 2] <= k - 1))
}

/// Necessary condition for a balanced bipartite graph of even order `n` to
/// lack a Hamilton cycle: some `i <= n/4` has `d_i <= i` and
/// `d_(n/2) <= n/2 - i`.
pub fn chvatal_condition_holds(degseq: &[usize], n: usize) -> Result<bool, DegreeConditionError> {
    if n % 2 == 1 {
        return Err(DegreeConditionError::Precondition {
            n,
            requirement: "n even",
        });
    }
    check_sequence(degseq, n)?;
    let mid = degseq.get(n / 2 - 1).copied().unwrap_or(0);
    Ok((1..=n / 4).any(|i| degseq[i - 1] <= i && mid <= n / 2 - i))
}

/// Necessary condition for a 2-factor-free balanced bipartite graph of
/// order `n = 4s >= 12`.
pub fn two_factor_condition_0mod4(degseq: &[usize], n: usize) -> Result<bool, DegreeConditionError> {
    if n % 4 != 0 || n < 12 {
        return Err(DegreeConditionError::Precondition {
            n,
            requirement: "n = 0 mod 4 and n >= 12",
        });
    }
    check_sequence(degseq, n)?;
    let q = n / 4;
    Ok(staircase(degseq, q) || degseq[q - 2] <= q - 1)
}

/// Necessary condition for a 2-factor-free balanced bipartite graph of
/// order `n = 4s + 2 >= 14`.
pub fn two_factor_condition_2mod4(degseq: &[usize], n: usize) -> Result<bool, DegreeConditionError> {
    if n % 4 != 2 || n < 14 {
        return Err(DegreeConditionError::Precondition {
            n,
            requirement: "n = 2 mod 4 and n >= 14",
        });
    }
    check_sequence(degseq, n)?;
    let q = (n - 2) / 4;
    Ok(staircase(degseq, q) || degseq[(n - 2) / 2 - 1] <= q)
}

/// Whichever of the two 2-factor conditions applies to `n`, if any.
pub fn two_factor_condition_holds(degseq: &[usize], n: usize) -> Option<Result<bool, DegreeConditionError>> {
    match n % 4 {
        0 if n >= 12 => Some(two_factor_condition_0mod4(degseq, n)),
        2 if n >= 14 => Some(two_factor_condition_2mod4(degseq, n)),
        _ => None,
    }
}
