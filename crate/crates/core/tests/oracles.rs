//! Cross-checks between the counting backends, the closed forms and the
//! expression evaluator. The reference counter here works from an edge list
//! and shares no code with the library's sweeps.

use dompoly_core::closed_forms as cf;
use dompoly_core::count::{
    count_bruteforce, count_inclusion_exclusion, count_path_cycle_dp, gamma, Limits, Method,
    PathOrCycle,
};
use dompoly_core::expr::{eval_poly, parse_expr, Strategy as EvalStrategy};
use dompoly_core::generate::{labeled_graphs_up_to, vertex_pairs};
use dompoly_core::{DomPoly, Graph, GraphExpr};
use proptest::prelude::*;

/// Definition-level count: `S` dominates when every vertex is in `S` or has
/// a neighbour in `S`.
fn reference_count(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut counts = vec![0u64; n + 1];
    for mask in 0u64..1 << n {
        let inside = |v: usize| mask >> v & 1 == 1;
        if (0..n).all(|v| inside(v) || adj[v].iter().any(|&w| inside(w))) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

fn reference_poly(g: &Graph) -> DomPoly {
    let edges: Vec<_> = g.edges().collect();
    DomPoly::from_u64s(&reference_count(g.n(), &edges))
}

fn limits() -> Limits {
    Limits::default()
}

#[test]
fn reference_values() {
    // P4: {1,2},{0,2},{1,3},{0,3} at size 2; every 3-set; the whole set
    assert_eq!(
        reference_count(4, &[(0, 1), (1, 2), (2, 3)]),
        [0, 0, 4, 4, 1]
    );
    // C4: all six pairs dominate
    assert_eq!(
        reference_count(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]),
        [0, 0, 6, 4, 1]
    );
    // two disjoint edges
    assert_eq!(reference_count(4, &[(0, 1), (2, 3)]), [0, 0, 4, 4, 1]);
    assert_eq!(reference_count(3, &[]), [0, 0, 0, 1]);
}

#[test]
fn c4_by_enumeration_and_by_join() {
    let c4 = count_bruteforce(&Graph::cycle(4).unwrap(), &limits()).unwrap();
    assert_eq!(c4, DomPoly::from_u64s(&[0, 0, 6, 4, 1]));
    assert_eq!(cf::complete_bipartite(2, 2).unwrap(), c4);
}

#[test]
fn backends_agree_on_all_small_graphs() {
    for g in labeled_graphs_up_to(5) {
        let expected = reference_poly(&g);
        assert_eq!(count_bruteforce(&g, &limits()).unwrap(), expected, "{g:?}");
        assert_eq!(
            count_inclusion_exclusion(&g, &limits()).unwrap(),
            expected,
            "{g:?}"
        );
    }
}

#[test]
fn counting_invariants_on_all_small_graphs() {
    for g in labeled_graphs_up_to(5).filter(|g| g.n() > 0) {
        let n = g.n();
        let p = count_bruteforce(&g, &limits()).unwrap();
        assert_eq!(p.coeff(0), 0u32.into());
        assert_eq!(p.coeff(n), 1u32.into());
        if g.is_connected() && n >= 2 {
            assert_eq!(p.coeff(n - 1), n.into());
        }
        for i in 0..n.div_ceil(2) {
            assert!(p.coeff(i) <= p.coeff(i + 1), "{g:?} at {i}");
        }
        let (k, witness) = gamma(&g).unwrap();
        assert_eq!(p.min_degree(), Some(k));
        assert_eq!(witness.len(), k);
        assert!(g.is_dominating(witness));
    }
}

#[test]
fn components_preserve_counts() {
    for g in labeled_graphs_up_to(5) {
        let parts = g.components();
        assert_eq!(parts.iter().map(|c| c.graph.n()).sum::<usize>(), g.n());
        assert_eq!(
            parts.iter().map(|c| c.graph.edge_count()).sum::<usize>(),
            g.edge_count()
        );
        assert!(parts.iter().all(|c| c.graph.is_connected()));
        let whole = dompoly_core::count::coeff_stats(&g);
        let (mut r, mut t, mut s) = (0, 0, 0);
        for c in &parts {
            let st = dompoly_core::count::coeff_stats(&c.graph);
            r += st.r;
            t += st.t;
            s += st.s;
        }
        assert_eq!((r, t, s), (whole.r, whole.t, whole.s));
        let product = cf::product(
            &parts
                .iter()
                .map(|c| count_bruteforce(&c.graph, &limits()).unwrap())
                .collect::<Vec<_>>(),
        );
        assert_eq!(product, count_bruteforce(&g, &limits()).unwrap());
    }
}

#[test]
fn closed_forms_match_enumeration() {
    let l = limits();
    for n in 1..=10 {
        assert_eq!(
            cf::complete(n).unwrap(),
            count_bruteforce(&Graph::complete(n).unwrap(), &l).unwrap()
        );
        assert_eq!(
            cf::empty(n),
            count_bruteforce(&Graph::empty(n).unwrap(), &l).unwrap()
        );
    }
    for m in 1..=6 {
        for n in 1..=6 {
            assert_eq!(
                cf::complete_bipartite(m, n).unwrap(),
                count_bruteforce(&Graph::complete_bipartite(m, n).unwrap(), &l).unwrap()
            );
        }
    }
    for n in 4..=12 {
        let rim = count_path_cycle_dp(PathOrCycle::Cycle, n - 1, &l).unwrap();
        assert_eq!(
            cf::wheel(n, &rim).unwrap(),
            count_bruteforce(&Graph::wheel(n).unwrap(), &l).unwrap(),
            "W{n}"
        );
    }
    for n in 1..=9 {
        assert_eq!(
            cf::corona_k1(n).unwrap(),
            count_bruteforce(&Graph::path(n).unwrap().corona_k1().unwrap(), &l).unwrap()
        );
    }
}

#[test]
fn dp_matches_enumeration_up_to_twenty() {
    let l = limits();
    for n in 3..=20 {
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Cycle, n, &l).unwrap(),
            reference_poly(&Graph::cycle(n).unwrap()),
            "C{n}"
        );
        assert_eq!(
            count_path_cycle_dp(PathOrCycle::Path, n, &l).unwrap(),
            reference_poly(&Graph::path(n).unwrap()),
            "P{n}"
        );
    }
}

#[test]
fn path_on_four_vertices_three_ways() {
    let p4 = DomPoly::from_u64s(&[0, 0, 4, 4, 1]);
    let g = Graph::path(4).unwrap();
    assert_eq!(count_bruteforce(&g, &limits()).unwrap(), p4);
    assert_eq!(count_inclusion_exclusion(&g, &limits()).unwrap(), p4);
    let ev = eval_poly(
        &parse_expr("corona_k1(path(2))").unwrap(),
        EvalStrategy::RewriteOnly,
        Method::Bruteforce,
        &limits(),
    )
    .unwrap();
    assert_eq!(ev.poly, p4);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = vertex_pairs(n);
        prop::collection::vec(any::<bool>(), pairs.len()).prop_map(move |bits| {
            let edges = pairs.iter().zip(bits).filter(|(_, b)| *b).map(|(e, _)| *e);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Expressions made only of rewritable nodes, plus literal leaves.
fn arb_expr() -> impl Strategy<Value = GraphExpr> {
    let leaf = prop_oneof![
        (1usize..5).prop_map(GraphExpr::Path),
        (3usize..6).prop_map(GraphExpr::Cycle),
        (1usize..5).prop_map(GraphExpr::Complete),
        (0usize..4).prop_map(GraphExpr::Empty),
        (1usize..3, 1usize..4).prop_map(|(m, n)| GraphExpr::CompleteBipartite(m, n)),
        (1usize..4).prop_map(GraphExpr::Star),
        (4usize..7).prop_map(GraphExpr::Wheel),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GraphExpr::union(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| GraphExpr::join(a, b)),
            inner.prop_map(GraphExpr::corona_k1),
        ]
    })
    .prop_filter("order at most 16", |e| e.order() <= 16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sweeps_agree_on_random_graphs(g in arb_graph(14)) {
        let l = limits();
        let brute = count_bruteforce(&g, &l).unwrap();
        prop_assert_eq!(&brute, &count_inclusion_exclusion(&g, &l).unwrap());
        prop_assert_eq!(brute, reference_poly(&g));
    }

    #[test]
    fn rewriting_matches_enumeration(e in arb_expr()) {
        let l = limits();
        let rewritten = eval_poly(&e, EvalStrategy::RewriteOnly, Method::Bruteforce, &l).unwrap();
        let enumerated = eval_poly(&e, EvalStrategy::EnumerateOnly, Method::Bruteforce, &l).unwrap();
        prop_assert_eq!(&rewritten.poly, &enumerated.poly);
        prop_assert_eq!(rewritten.poly, reference_poly(&e.build().unwrap()));
    }

    #[test]
    fn corona_depends_only_on_order(n in 1usize..=8, a in any::<u64>(), b in any::<u64>()) {
        let pick = |bits: u64| {
            let edges = vertex_pairs(n)
                .into_iter()
                .enumerate()
                .filter(|(k, _)| bits >> (k % 64) & 1 == 1)
                .map(|(_, e)| e);
            Graph::from_edges(n, edges).unwrap()
        };
        let (g, h) = (pick(a), pick(b));
        let l = limits();
        let pg = count_bruteforce(&g.corona_k1().unwrap(), &l).unwrap();
        let ph = count_bruteforce(&h.corona_k1().unwrap(), &l).unwrap();
        prop_assert_eq!(&pg, &ph);
        prop_assert_eq!(pg, cf::corona_k1(n).unwrap());
    }

    #[test]
    fn join_formula_is_symmetric(g in arb_graph(6), h in arb_graph(6)) {
        prop_assume!(g.n() > 0 && h.n() > 0);
        let l = limits();
        let pg = count_bruteforce(&g, &l).unwrap();
        let ph = count_bruteforce(&h, &l).unwrap();
        let gh = cf::join(&pg, g.n(), &ph, h.n()).unwrap();
        prop_assert_eq!(&gh, &cf::join(&ph, h.n(), &pg, g.n()).unwrap());
        prop_assert_eq!(gh, count_bruteforce(&g.join(&h).unwrap(), &l).unwrap());
    }

    #[test]
    fn positive_polynomials_increase_on_nonnegative_integers(g in arb_graph(10)) {
        prop_assume!(g.n() > 0);
        let p = count_bruteforce(&g, &limits()).unwrap();
        let values: Vec<_> = (0..6).map(|x| p.eval_i64(x)).collect();
        prop_assert!(values.windows(2).all(|w| w[0] < w[1]));
    }
}
