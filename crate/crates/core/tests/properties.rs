mod common;

use imcg::algorithms::{self, ResidueClassPlan};
use imcg::coloring::{self, Color, VertexSet};
use imcg::format;
use imcg::oracle::{self, SearchLimits};
use imcg::{Bipartition, EdgeColoring, Multigraph, Part, VertexId};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn bipartite(seed: u64, n1: usize, n2: usize, m: usize) -> Option<(Multigraph, Bipartition)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    oracle::sample_bipartite_multigraph(&mut rng, n1, n2, m, 3)
}

fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
    (2usize..8).prop_flat_map(|n| {
        prop::collection::vec((1..=n, 1..=n), 0..14).prop_map(move |pairs| {
            let pairs: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Multigraph::from_pairs(n, &pairs).unwrap()
        })
    })
}

/// Smallest-free-color greedy coloring in edge order.
fn greedy(g: &Multigraph) -> EdgeColoring {
    let mut colors: Vec<Color> = vec![0; g.edge_count()];
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        let used: Vec<Color> = g
            .incident_edges(u)
            .chain(g.incident_edges(v))
            .map(|f| colors[f.index()])
            .collect();
        colors[e.index()] = (1..).find(|c| !used.contains(c)).unwrap();
    }
    EdgeColoring::new(colors).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_files_round_trip(g in arb_multigraph()) {
        let text = format::serialize_graph(&g, None);
        let back = format::parse_graph(&text).unwrap();
        prop_assert_eq!(&back.graph, &g);
        prop_assert!(back.bipartition.is_none());
        prop_assert_eq!(format::serialize_graph(&back.graph, None), text);
    }

    #[test]
    fn bipartite_files_round_trip(seed in any::<u64>(), n1 in 1usize..6, n2 in 1usize..6, m in 1usize..12) {
        if let Some((g, b)) = bipartite(seed, n1, n2, m) {
            let text = format::serialize_graph(&g, Some(&b));
            let back = format::parse_graph(&text).unwrap();
            prop_assert_eq!(&back.graph, &g);
            prop_assert_eq!(back.bipartition.as_ref(), Some(&b));
        }
    }

    #[test]
    fn coloring_files_round_trip(colors in prop::collection::vec(1u32..20, 1..30)) {
        let c = EdgeColoring::new(colors).unwrap();
        let text = format::serialize_coloring(&c);
        prop_assert_eq!(format::parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn kempe_swap_keeps_properness(g in arb_multigraph(), v in 1usize..8, j in 1u32..6, k in 1u32..6) {
        prop_assume!(g.edge_count() > 0 && v <= g.vertex_count() && j != k);
        let c = greedy(&g);
        let start = VertexId(v);
        let before = coloring::spectrum(&g, &c, start).colors;
        prop_assume!(!(before.contains(&j) && before.contains(&k)));
        let swapped = coloring::kempe_swap(&g, &c, start, j, k).unwrap();
        prop_assert!(coloring::is_proper(&g, &swapped));
        // Only colors j and k move, and the start vertex trades one for the other.
        for e in g.edge_ids() {
            let (a, b) = (c.color(e), swapped.color(e));
            prop_assert!(a == b || (a == j && b == k) || (a == k && b == j));
        }
        let after = coloring::spectrum(&g, &swapped, start).colors;
        if before.contains(&j) {
            prop_assert!(after.contains(&k) && !after.contains(&j));
        } else if before.contains(&k) {
            prop_assert!(after.contains(&j) && !after.contains(&k));
        } else {
            prop_assert_eq!(after, before);
        }
        // Spectra sizes never change.
        for x in g.vertices() {
            prop_assert_eq!(coloring::spectrum(&g, &swapped, x).colors.len(), g.deg(x));
        }
    }

    #[test]
    fn shifted_interval_colorings_close_up(g in arb_multigraph(), shift in 0u32..5) {
        prop_assume!(g.edge_count() > 0 && g.edge_count() <= 9 && g.is_connected());
        let all = VertexSet::all(&g);
        let lim = SearchLimits::default();
        let least = oracle::least_interval(&g, &all, &lim).unwrap();
        if let Some(w) = least.witness {
            let t = w.max_color().unwrap();
            let shifted = EdgeColoring::new(w.colors().iter().map(|c| c + shift).collect()).unwrap();
            prop_assert_eq!(coloring::interval_closure_check(&g, &shifted).unwrap(), t);
            prop_assert_eq!(coloring::normalize_shift(&shifted).unwrap(), w);
        }
    }

    #[test]
    fn step_up_chain_reaches_m(seed in any::<u64>(), n1 in 1usize..5, n2 in 1usize..5, m in 1usize..10) {
        let Some((g, b)) = bipartite(seed, n1, n2, m) else { return Ok(()) };
        let part1 = VertexSet::part(&b, Part::One);
        let lim = SearchLimits::default();
        let least = oracle::least_interval(&g, &part1, &lim).unwrap();
        let mut c = least.witness.unwrap();
        let w1 = c.max_color().unwrap();
        for t in w1..m as Color {
            let up = algorithms::interval_step_up(&g, &b, &c, &lim).unwrap();
            prop_assert_eq!(up.fallbacks, 0, "{:?}", up.diagnostics);
            prop_assert!(coloring::is_interval_on(&g, &up.coloring, &part1, t + 1));
            prop_assert_eq!(up.coloring.max_color(), Some(t + 1));
            c = up.coloring;
        }
    }

    #[test]
    fn continuous_under_degree_condition(seed in any::<u64>(), n1 in 1usize..6, n2 in 1usize..8, m in 1usize..20) {
        let Some((g, b)) = bipartite(seed, n1, n2, m) else { return Ok(()) };
        let ok = g.edge_ids().all(|e| {
            let x = b.endpoint_in(&g, e, Part::One);
            g.deg(x) >= g.deg(g.opposite(e, x))
        });
        let res = algorithms::continuous_on_part(&g, &b);
        if ok {
            let c = res.unwrap();
            prop_assert!(coloring::is_continuous_on(&g, &c, &VertexSet::part(&b, Part::One), g.max_degree() as Color));
        } else {
            prop_assert!(matches!(res, Err(imcg::Error::Precondition(_))));
        }
    }

    #[test]
    fn residue_classes_partition(delta in 1u32..8, t in 1u32..30) {
        let plan = ResidueClassPlan::new(delta, t).unwrap();
        let mut all: Vec<Color> = plan.classes.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=t).collect::<Vec<_>>());
        for (j, class) in plan.classes.iter().enumerate() {
            for &i in class {
                prop_assert_eq!(plan.class_of(i) as usize, j + 1);
            }
        }
    }

    #[test]
    fn parallel_search_is_bit_identical(g in arb_multigraph(), jobs in 2usize..5, cap in 1u64..2000) {
        prop_assume!(g.edge_count() > 0 && g.edge_count() <= 10);
        let all = VertexSet::all(&g);
        let t = g.max_degree() as Color + 1;
        let seq = oracle::solve_interval_on(&g, &all, t, &SearchLimits::default().with_cap(cap)).unwrap();
        let par = oracle::solve_interval_on(&g, &all, t, &SearchLimits::default().with_cap(cap).with_jobs(jobs)).unwrap();
        prop_assert_eq!(seq, par);
    }
}
