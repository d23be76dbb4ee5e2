//! Independent oracles shared by the integration tests. Nothing here calls
//! the solver code paths it is used to check.
#![allow(dead_code)]

use antidirected::bipartite::BipartiteInstance;
use antidirected::cover::CycleCover;
use antidirected::graph::Digraph;
use rand::Rng;

/// Each ordered pair becomes an arc with probability `p`.
pub fn random_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|&(u, v)| u != v)
        .filter(|_| rng.gen_bool(p))
        .collect();
    Digraph::new(n, arcs).unwrap()
}

/// Searches directly for vertex-disjoint even cycles of length >= 4 with
/// alternating orientation covering every vertex.
pub fn brute_force_adf(d: &Digraph) -> bool {
    let n = d.order();
    let mut used = vec![false; n];
    cover_rest(d, &mut used)
}

fn cover_rest(d: &Digraph, used: &mut [bool]) -> bool {
    let Some(start) = used.iter().position(|&u| !u) else {
        return true;
    };
    used[start] = true;
    for start_is_source in [true, false] {
        let mut path = vec![start];
        if extend(d, used, &mut path, start_is_source) {
            return true;
        }
    }
    used[start] = false;
    false
}

/// Vertex `path[i]` is a source iff `i` is even and the start is a source,
/// or `i` is odd and the start is a sink.
fn extend(d: &Digraph, used: &mut [bool], path: &mut Vec<usize>, start_is_source: bool) -> bool {
    let last = *path.last().unwrap();
    let last_is_source = (path.len() % 2 == 1) == start_is_source;
    let joined = |a: usize, b: usize, a_source: bool| if a_source { d.has_arc(a, b) } else { d.has_arc(b, a) };
    // Close the cycle: even length >= 4, closing edge oriented correctly.
    if path.len() >= 4 && path.len() % 2 == 0 && joined(last, path[0], last_is_source) {
        let cycle: Vec<usize> = path.clone();
        if cover_rest(d, used) {
            return true;
        }
        debug_assert_eq!(&cycle, path);
    }
    for next in 0..d.order() {
        if used[next] || !joined(last, next, last_is_source) {
            continue;
        }
        used[next] = true;
        path.push(next);
        if extend(d, used, path, start_is_source) {
            return true;
        }
        path.pop();
        used[next] = false;
    }
    false
}

/// Tally check of a cover: every vertex appears once, every listed arc is
/// in `d`, and each vertex is the tail of both or neither of its two cover
/// arcs.
pub fn tally_valid(d: &Digraph, cover: &CycleCover) -> bool {
    let n = d.order();
    let mut seen = vec![0usize; n];
    for c in &cover.cycles {
        if c.len() < 4 || c.len() % 2 == 1 {
            return false;
        }
        for &v in c {
            if v >= n {
                return false;
            }
            seen[v] += 1;
        }
    }
    if seen.iter().any(|&s| s != 1) {
        return false;
    }
    let Some(orientation) = &cover.orientation else {
        return false;
    };
    let mut out = vec![0usize; n];
    let mut inn = vec![0usize; n];
    for (c, flags) in cover.cycles.iter().zip(orientation) {
        if flags.len() != c.len() {
            return false;
        }
        for (i, &forward) in flags.iter().enumerate() {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            let (t, h) = if forward { (a, b) } else { (b, a) };
            if !d.has_arc(t, h) {
                return false;
            }
            out[t] += 1;
            inn[h] += 1;
        }
    }
    (0..n).all(|v| (out[v], inn[v]) == (2, 0) || (out[v], inn[v]) == (0, 2))
}

/// Capped neighbour multiset size, by direct counting over the edge list.
pub fn n2(g: &BipartiteInstance, set: &[usize]) -> usize {
    let mut count = std::collections::HashMap::new();
    for &(x, y) in g.edges() {
        if set.contains(&x) {
            *count.entry(y).or_insert(0usize) += 1;
        }
        if set.contains(&y) {
            *count.entry(x).or_insert(0usize) += 1;
        }
    }
    count.values().map(|&c| c.min(2)).sum()
}

/// Neighbours of `set` adjacent to exactly one member.
pub fn single_neighbors(g: &BipartiteInstance, set: &[usize]) -> Vec<usize> {
    let mut count = std::collections::BTreeMap::new();
    for &(x, y) in g.edges() {
        if set.contains(&x) {
            *count.entry(y).or_insert(0usize) += 1;
        }
        if set.contains(&y) {
            *count.entry(x).or_insert(0usize) += 1;
        }
    }
    count.into_iter().filter(|&(_, c)| c == 1).map(|(v, _)| v).collect()
}

pub fn deficient(g: &BipartiteInstance, set: &[usize]) -> bool {
    n2(g, set) < 2 * set.len()
}

/// All subsets of `side` given as a list, by bitmask.
pub fn subsets(side: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    (0u32..1 << side.len()).map(move |m| {
        side.iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// Inclusion-minimal deficient subsets of `side`, by exhaustion.
pub fn minimal_deficient_sets(g: &BipartiteInstance, side: &[usize]) -> Vec<Vec<usize>> {
    let k = side.len();
    let def: Vec<bool> = subsets(side).map(|s| !s.is_empty() && deficient(g, &s)).collect();
    (0usize..1 << k)
        .filter(|&m| def[m])
        .filter(|&m| {
            // no proper nonempty submask is deficient
            let mut sub = (m - 1) & m;
            while sub != 0 {
                if def[sub] {
                    return false;
                }
                sub = (sub - 1) & m;
            }
            true
        })
        .map(|m| (0..k).filter(|i| m >> i & 1 == 1).map(|i| side[i]).collect())
        .collect()
}

/// Vertex-count and 2-regularity check of a claimed 2-factor against the
/// instance's edge list.
pub fn is_two_factor(g: &BipartiteInstance, cover: &CycleCover) -> bool {
    let n = g.order();
    let mut deg = vec![0usize; n];
    let mut seen = vec![false; n];
    for c in &cover.cycles {
        if c.len() < 4 || c.len() % 2 == 1 {
            return false;
        }
        for i in 0..c.len() {
            let (a, b) = (c[i], c[(i + 1) % c.len()]);
            if seen[a] {
                return false;
            }
            seen[a] = true;
            if !(g.has_edge(a, b) || g.has_edge(b, a)) {
                return false;
            }
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    seen.iter().all(|&s| s) && deg.iter().all(|&d| d == 2)
}

/// Sorted combined degree sequence.
pub fn degree_sequence(g: &BipartiteInstance) -> Vec<usize> {
    let mut deg = vec![0usize; g.order()];
    for &(x, y) in g.edges() {
        deg[x] += 1;
        deg[y] += 1;
    }
    deg.sort_unstable();
    deg
}
