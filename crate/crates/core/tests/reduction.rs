use antidirected::classical::classical_conditions;
use antidirected::conjecture::conjecture_scan;
use antidirected::gen::{generalized_petersen, k33, k4, mobius_kantor, petersen, prism, random_cubic, stream_rng};
use antidirected::graph::Digraph;
use antidirected::reduction::{
    adf_to_coloring, coloring_to_adf, cubic_to_digraph, three_edge_color_direct, three_edge_colorable_via_adf,
};
use antidirected::solver::{SolverConfig, Strategy};
use proptest::prelude::*;

fn via_adf(g: &antidirected::graph::SimpleGraph) -> Option<bool> {
    three_edge_colorable_via_adf(g, Strategy::Exhaustive, &SolverConfig::default())
        .unwrap()
        .colorable
}

#[test]
fn named_graphs() {
    for (name, g, class1) in [
        ("k4", k4(), true),
        ("k33", k33(), true),
        ("prism", prism(), true),
        ("mobius-kantor", mobius_kantor(), true),
        ("gp(7,2)", generalized_petersen(7, 2).unwrap(), true),
        ("petersen", petersen(), false),
    ] {
        assert_eq!(via_adf(&g), Some(class1), "{name}");
        assert_eq!(three_edge_color_direct(&g).unwrap().is_some(), class1, "{name}");
    }
}

#[test]
fn reduction_digraph_has_opposite_pairs() {
    let d = cubic_to_digraph(&petersen()).unwrap();
    assert!(d.arcs().all(|(u, v)| d.has_arc(v, u)));
    assert_eq!(d.min_degree(), 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_cubic_agreement(half in 2usize..=7, seed: u64) {
        let g = random_cubic(2 * half, &mut stream_rng(seed, 0)).unwrap();
        let direct = three_edge_color_direct(&g).unwrap();
        prop_assert_eq!(via_adf(&g), Some(direct.is_some()));
        if let Some(c) = direct {
            let cover = coloring_to_adf(&g, &c).unwrap();
            let back = adf_to_coloring(&g, &cover).unwrap();
            prop_assert_eq!(back.validate(&g), Ok(()));
        }
    }
}

#[test]
fn conjecture_scan_small_orders() {
    let report = conjecture_scan(&[6, 8, 10], 30, 0, &SolverConfig::default()).unwrap();
    assert_eq!(report.orders.len(), 3);
    for s in &report.orders {
        assert_eq!(s.yes + s.no + s.unknown, 30);
        assert_eq!(s.unknown, 0, "orders up to 14 are decided exhaustively");
    }
    // Every reported counterexample must meet the degree bound and be a
    // genuine exhaustive refutation.
    for c in &report.counterexamples {
        let d = Digraph::parse(&c.digraph).unwrap();
        assert!(d.min_degree() >= c.n / 2);
        assert!(c.exhaustive);
    }
}

#[test]
fn classical_conditions_on_complete_digraphs() {
    let k8 = classical_conditions(&Digraph::complete(8).unwrap());
    assert_eq!(k8.holds("ghouila-houri"), Some(true));
    assert_eq!(k8.holds("three-quarters"), Some(true));
    assert_eq!(k8.holds("dirac"), Some(true));
    // 2*8/3 + sqrt(8 ln 8) is about 9.4 > 7
    assert_eq!(k8.holds("grant"), Some(false));
    let big = classical_conditions(&Digraph::complete(400).unwrap());
    assert_eq!(big.holds("grant"), Some(true));
}
