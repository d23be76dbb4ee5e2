//! Seeded graph generators: the extremal family `D(n)`, random digraphs
//! with a minimum semi-degree, regular digraphs, random balanced bipartite
//! instances and a cubic-graph corpus.
//!
//! All randomness comes from [`ChaCha8Rng`]. [`stream_rng`] derives an
//! independent stream per `(seed, index)` so batch results do not depend on
//! how work is split between threads.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bipartite::{BipartiteInstance, Equipartition};
use crate::flow::hopcroft_karp;
use crate::graph::{Digraph, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("order {0} must be even")]
    OddOrder(usize),
    #[error("order {n} too small, need at least {min}")]
    TooSmall { n: usize, min: usize },
    #[error("degree {delta} impossible on {n} vertices")]
    DegreeTooLarge { n: usize, delta: usize },
    #[error("generalized Petersen graph needs 1 <= k < n/2, got n = {n}, k = {k}")]
    BadPetersen { n: usize, k: usize },
    #[error("unknown cubic graph {0:?}")]
    UnknownCubic(String),
}

/// RNG for item `index` of a batch seeded with `seed`.
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Two disjoint complete digraphs on `n/2` vertices each: `{0..n/2}` and
/// `{n/2..n}`.
pub fn dn(n: usize) -> Result<Digraph, GenError> {
    if n % 2 == 1 {
        return Err(GenError::OddOrder(n));
    }
    if n < 2 {
        return Err(GenError::TooSmall { n, min: 2 });
    }
    let h = n / 2;
    let arcs = (0..n).flat_map(move |u| {
        let base = u / h * h;
        (base..base + h).filter(move |&v| v != u).map(move |v| (u, v))
    });
    Ok(Digraph::new(n, arcs).expect("clique arcs are valid"))
}

/// A random digraph in which every in- and outdegree is at least `delta`.
///
/// Each vertex first picks `delta` random out-neighbours; vertices left with
/// a small indegree then receive arcs from random new in-neighbours.
pub fn random_min_degree<R: Rng>(n: usize, delta: usize, rng: &mut R) -> Result<Digraph, GenError> {
    if n == 0 {
        return Err(GenError::TooSmall { n, min: 1 });
    }
    if delta >= n {
        return Err(GenError::DegreeTooLarge { n, delta });
    }
    let mut adj = vec![vec![false; n]; n];
    let mut indeg = vec![0usize; n];
    for u in 0..n {
        let mut others: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        others.shuffle(rng);
        for &v in &others[..delta] {
            adj[u][v] = true;
            indeg[v] += 1;
        }
    }
    for v in 0..n {
        if indeg[v] >= delta {
            continue;
        }
        let mut sources: Vec<usize> = (0..n).filter(|&u| u != v && !adj[u][v]).collect();
        sources.shuffle(rng);
        for &u in &sources[..delta - indeg[v]] {
            adj[u][v] = true;
        }
        indeg[v] = delta;
    }
    Ok(from_matrix(&adj))
}

/// A random digraph with every in- and outdegree exactly `delta`, built as
/// a union of `delta` arc-disjoint fixed-point-free permutations.
pub fn random_regular<R: Rng>(n: usize, delta: usize, rng: &mut R) -> Result<Digraph, GenError> {
    if n == 0 {
        return Err(GenError::TooSmall { n, min: 1 });
    }
    if delta >= n {
        return Err(GenError::DegreeTooLarge { n, delta });
    }
    let mut adj = vec![vec![false; n]; n];
    for _ in 0..delta {
        // The unused arcs form a regular bipartite out/in graph, which always
        // has a perfect matching.
        let options: Vec<Vec<usize>> = (0..n)
            .map(|u| {
                let mut row: Vec<usize> = (0..n).filter(|&v| v != u && !adj[u][v]).collect();
                row.shuffle(rng);
                row
            })
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let shuffled: Vec<Vec<usize>> = order.iter().map(|&u| options[u].clone()).collect();
        let matching = hopcroft_karp(&shuffled, n);
        for (i, v) in matching.into_iter().enumerate() {
            let v = v.expect("regular bipartite graphs have perfect matchings");
            adj[order[i]][v] = true;
        }
    }
    Ok(from_matrix(&adj))
}

/// Random balanced bipartite instance with `X = 0..h`, `Y = h..2h`, each
/// cross pair present independently with probability `p`.
pub fn random_bipartite<R: Rng>(h: usize, p: f64, rng: &mut R) -> BipartiteInstance {
    let partition = Equipartition::new(2 * h, (0..h).collect()).expect("balanced");
    let edges = (0..h)
        .flat_map(|x| (0..h).map(move |y| (x, h + y)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    BipartiteInstance::new(partition, edges).expect("crossing edges")
}

fn from_matrix(adj: &[Vec<bool>]) -> Digraph {
    let n = adj.len();
    let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| adj[u][v]).map(move |v| (u, v)));
    Digraph::new(n, arcs).expect("matrix has no loops")
}

pub fn k4() -> SimpleGraph {
    SimpleGraph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("valid")
}

pub fn k33() -> SimpleGraph {
    SimpleGraph::new(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).expect("valid")
}

/// Triangular prism, `K3 x K2`.
pub fn prism() -> SimpleGraph {
    SimpleGraph::new(
        6,
        [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("valid")
}

/// `GP(n, k)`: outer cycle `0..n`, spokes `i - (n + i)`, inner edges
/// `n + i - n + (i + k mod n)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<SimpleGraph, GenError> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(GenError::BadPetersen { n, k });
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Ok(SimpleGraph::new(2 * n, edges).expect("valid for 1 <= k < n/2"))
}

pub fn petersen() -> SimpleGraph {
    generalized_petersen(5, 2).expect("valid")
}

/// Moebius-Kantor graph, `GP(8, 3)`.
pub fn mobius_kantor() -> SimpleGraph {
    generalized_petersen(8, 3).expect("valid")
}

/// Uniform-ish random cubic simple graph from the pairing model, rejecting
/// loops and multi-edges.
pub fn random_cubic<R: Rng>(n: usize, rng: &mut R) -> Result<SimpleGraph, GenError> {
    if n % 2 == 1 {
        return Err(GenError::OddOrder(n));
    }
    if n < 4 {
        return Err(GenError::TooSmall { n, min: 4 });
    }
    let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
    loop {
        points.shuffle(rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = SimpleGraph::new(n, pairs) {
            return Ok(g);
        }
    }
}

/// Named cubic graphs: `k4`, `k33`, `prism`, `petersen`, `mobius-kantor`,
/// or `gp:N:K`.
pub fn named_cubic(name: &str) -> Result<SimpleGraph, GenError> {
    match name {
        "k4" => Ok(k4()),
        "k33" => Ok(k33()),
        "prism" => Ok(prism()),
        "petersen" => Ok(petersen()),
        "mobius-kantor" => Ok(mobius_kantor()),
        other => {
            let parts: Vec<&str> = other.split(':').collect();
            match parts.as_slice() {
                ["gp", a, b] => match (a.parse(), b.parse()) {
                    (Ok(n), Ok(k)) => generalized_petersen(n, k),
                    _ => Err(GenError::UnknownCubic(other.to_string())),
                },
                _ => Err(GenError::UnknownCubic(other.to_string())),
            }
        }
    }
}
