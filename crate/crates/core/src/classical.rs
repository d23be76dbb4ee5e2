//! Minimum-degree sufficient conditions, evaluated arithmetically.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::graph::{Digraph, SimpleGraph};
use crate::threshold::ln_interval;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Guarantee {
    DirectedHamiltonCycle,
    AntiDirectedHamiltonCycle,
    AntiDirectedTwoFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub statement: &'static str,
    pub holds: bool,
    pub guarantee: Guarantee,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassicalReport {
    pub n: usize,
    pub min_degree: usize,
    pub conditions: Vec<Condition>,
}

impl ClassicalReport {
    pub fn holds(&self, name: &str) -> Option<bool> {
        self.conditions.iter().find(|c| c.name == name).map(|c| c.holds)
    }

    pub fn met(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| c.holds)
    }
}

/// The simple graph joining `u` and `v` whenever both `(u, v)` and
/// `(v, u)` are arcs.
pub fn opposite_pair_graph(d: &Digraph) -> SimpleGraph {
    let edges = d.arcs().filter(|&(u, v)| u < v && d.has_arc(v, u));
    SimpleGraph::new(d.order(), edges).expect("pairs of a digraph")
}

/// `delta >= 2n/3 + sqrt(n ln n)`, decided with a certified logarithm.
pub fn grant_bound_holds(n: usize, delta: usize) -> bool {
    // t = delta - 2n/3 must be nonnegative and t^2 >= n ln n.
    let t = BigRational::new(BigInt::from(3 * delta) - BigInt::from(2 * n), BigInt::from(3));
    if t < BigRational::zero() {
        return false;
    }
    if n <= 1 {
        return true;
    }
    let t2 = &t * &t;
    let nq = BigRational::from_integer(BigInt::from(n));
    let mut bits = 64;
    loop {
        let l = ln_interval(&nq, bits);
        if t2 >= &nq * &l.hi {
            return true;
        }
        if t2 < &nq * &l.lo {
            return false;
        }
        // n ln n is irrational for n >= 2, so refinement terminates.
        bits *= 2;
    }
}

pub fn classical_conditions(d: &Digraph) -> ClassicalReport {
    let n = d.order();
    let delta = d.min_degree();
    let even = n % 2 == 0;
    let pairs = opposite_pair_graph(d);
    let pair_min = (0..n).map(|v| pairs.degree(v)).min().unwrap_or(0);
    let conditions = vec![
        Condition {
            name: "dirac",
            statement: "n >= 3 and every vertex has >= n/2 opposite-arc partners",
            holds: even && n >= 3 && 2 * pair_min >= n,
            guarantee: Guarantee::AntiDirectedHamiltonCycle,
        },
        Condition {
            name: "ghouila-houri",
            statement: "delta >= n/2",
            holds: 2 * delta >= n,
            guarantee: Guarantee::DirectedHamiltonCycle,
        },
        Condition {
            name: "three-quarters",
            statement: "n even and delta >= 3n/4",
            holds: even && 4 * delta >= 3 * n,
            guarantee: Guarantee::AntiDirectedHamiltonCycle,
        },
        Condition {
            name: "grant",
            statement: "n even and delta >= 2n/3 + sqrt(n ln n)",
            holds: even && grant_bound_holds(n, delta),
            guarantee: Guarantee::AntiDirectedHamiltonCycle,
        },
        Condition {
            name: "nine-sixteenths",
            statement: "n even and delta > 9n/16",
            holds: even && 16 * delta > 9 * n,
            guarantee: Guarantee::AntiDirectedHamiltonCycle,
        },
        Condition {
            name: "twenty-four-46ths",
            statement: "n even and delta > 24n/46",
            holds: even && 46 * delta > 24 * n,
            guarantee: Guarantee::AntiDirectedTwoFactor,
        },
    ];
    ClassicalReport {
        n,
        min_degree: delta,
        conditions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::dn;

    #[test]
    fn complete_eight() {
        let r = classical_conditions(&Digraph::complete(8).unwrap());
        for name in ["dirac", "ghouila-houri", "three-quarters", "nine-sixteenths", "twenty-four-46ths"] {
            assert_eq!(r.holds(name), Some(true), "{name}");
        }
        // 2*8/3 + sqrt(8 ln 8) is about 9.41 > 7
        assert_eq!(r.holds("grant"), Some(false));
    }

    #[test]
    fn dn_ten_meets_nothing() {
        let r = classical_conditions(&dn(10).unwrap());
        assert_eq!(r.min_degree, 4);
        assert_eq!(r.met().count(), 0);
    }

    #[test]
    fn three_quarter_instance() {
        // circulant on 12 vertices without the offsets 5 and 6: delta = 9
        let arcs = (0..12usize)
            .flat_map(|u| (0..12).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && ![5, 6].contains(&((v + 12 - u) % 12)));
        let d = Digraph::new(12, arcs).unwrap();
        assert_eq!(d.min_degree(), 9);
        assert_eq!(classical_conditions(&d).holds("three-quarters"), Some(true));
    }

    #[test]
    fn grant_boundary() {
        // n = 100: 200/3 + sqrt(100 ln 100) = 66.67 + 21.46 = 88.13
        assert!(!grant_bound_holds(100, 88));
        assert!(grant_bound_holds(100, 89));
    }
}
