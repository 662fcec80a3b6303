mod common;

use common::{all_edges, hop_apsp, hop_avoiding, two_paths, weighted_apsp, INF};
use num_bigint::BigUint;
use proptest::prelude::*;
use spanner_core::fault::enumerate_short_paths;
use spanner_core::format::{emit_graph, parse_graph};
use spanner_core::graph::hop_ball;
use spanner_core::params::pow_cmp;
use spanner_core::weighted::LateralVerdict;
use spanner_core::*;

fn simple_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(prop::bool::weighted(0.35), n * (n - 1) / 2)))
        .prop_map(|(n, mask)| {
            let mut g = Multigraph::new(n);
            let mut bits = mask.into_iter();
            for a in 0..n {
                for b in a + 1..n {
                    if bits.next().unwrap() {
                        g.add_edge(a, b).unwrap();
                    }
                }
            }
            g
        })
}

fn multigraph(max_n: usize, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n)
        .prop_flat_map(move |n| (Just(n), prop::collection::vec((0..n, 0..n), 0..=max_m)))
        .prop_map(|(n, pairs)| {
            let mut g = Multigraph::new(n);
            for (a, b) in pairs {
                if a != b {
                    g.add_edge(a, b).unwrap();
                }
            }
            g
        })
}

fn weighted_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    simple_graph(max_n)
        .prop_flat_map(|g| {
            let m = g.edge_count();
            (Just(g), prop::collection::vec(1u32..=8, m))
        })
        .prop_map(|(g, ws)| {
            let edges: Vec<_> = g.edges().iter().zip(ws).map(|(e, w)| (e.u, e.v, f64::from(w) / 2.0)).collect();
            Multigraph::from_weighted_edges(g.n(), &edges).unwrap()
        })
}

fn subset(m: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), m).prop_map(|bits| bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hop_distance_is_a_metric(g in simple_graph(12)) {
        let view = SubgraphView::full(&g);
        let d = hop_apsp(&g, &all_edges(&g));
        let n = g.n();
        for x in 0..n {
            for y in 0..n {
                let got = hop_distance(&view, x, y, n, &[]).unwrap().unwrap_or(INF);
                prop_assert_eq!(got, d[x][y]);
                prop_assert_eq!(got, hop_distance(&view, y, x, n, &[]).unwrap().unwrap_or(INF));
                for z in 0..n {
                    if d[x][z] != INF && d[z][y] != INF {
                        prop_assert!(d[x][y] <= d[x][z] + d[z][y]);
                    }
                }
                // a larger cutoff never loses a reachable pair
                if got != INF {
                    prop_assert_eq!(hop_distance(&view, x, y, got, &[]).unwrap(), Some(got));
                    if got > 0 {
                        prop_assert_eq!(hop_distance(&view, x, y, got - 1, &[]).unwrap(), None);
                    }
                }
            }
        }
    }

    #[test]
    fn balls_are_nested(g in simple_graph(12), v in 0usize..12) {
        let v = v % g.n();
        let view = SubgraphView::full(&g);
        let d = hop_apsp(&g, &all_edges(&g));
        let mut prev: Vec<usize> = Vec::new();
        for r in 0..g.n() {
            let ball = hop_ball(&view, v, r).unwrap();
            let expect: Vec<usize> = (0..g.n()).filter(|&x| d[v][x] <= r).collect();
            prop_assert_eq!(&ball, &expect);
            prop_assert!(prev.iter().all(|x| ball.contains(x)));
            prev = ball;
        }
    }

    #[test]
    fn subgraphs_do_not_lower_girth(g in simple_graph(10), keep in subset(45)) {
        let full = girth(&SubgraphView::full(&g)).unwrap_or(INF);
        let kept: Vec<usize> = keep.into_iter().filter(|&e| e < g.edge_count()).collect();
        let sub = girth(&SubgraphView::from_edges(&g, kept).unwrap()).unwrap_or(INF);
        prop_assert!(sub >= full);
    }

    #[test]
    fn excluding_edges_matches_deletion(g in multigraph(9, 30), picks in prop::collection::vec(0usize..30, 0..=2)) {
        let faults: Vec<usize> = picks.into_iter().filter(|&e| e < g.edge_count()).collect();
        let view = SubgraphView::full(&g);
        for x in 0..g.n() {
            for y in 0..g.n() {
                let got = hop_distance(&view, x, y, g.n(), &faults).unwrap().unwrap_or(INF);
                prop_assert_eq!(got, hop_avoiding(&g, &all_edges(&g), &faults, x, y));
            }
        }
    }

    #[test]
    fn neighborhood_exchange(g in simple_graph(12), cut in 0usize..66, s in 2usize..6) {
        let m = g.edge_count();
        prop_assume!(m > 0);
        let cut = cut % m;
        let h = SubgraphView::from_edges(&g, 0..cut).unwrap();
        let d = hop_apsp(&g, &(0..cut).collect::<Vec<_>>());
        for e in cut..m {
            let (u, v) = g.edge(e).endpoints();
            if d[u][v] <= s {
                continue;
            }
            let mut grown = h.clone();
            grown.insert(e);
            for l in 0..s.div_ceil(2) {
                let bu = hop_ball(&h, u, l).unwrap();
                let bv = hop_ball(&h, v, l + 1).unwrap();
                prop_assert!(bu.iter().all(|x| !bv.contains(x)));
                let bu2 = hop_ball(&grown, u, l).unwrap();
                let bv2 = hop_ball(&grown, v, l + 1).unwrap();
                prop_assert!(bu2.iter().all(|x| bv2.contains(x)));
            }
        }
    }

    #[test]
    fn cluster_level_grows_with_edges(g in simple_graph(12), k in 1usize..5, cut in 0usize..66) {
        let m = g.edge_count();
        let cut = if m == 0 { 0 } else { cut % (m + 1) };
        let params = SpannerParams::new(g.n(), k);
        let small = SubgraphView::from_edges(&g, 0..cut).unwrap();
        let big = SubgraphView::full(&g);
        for v in 0..g.n() {
            let a = cluster_level(&small, v, &params).unwrap().level;
            let b = cluster_level(&big, v, &params).unwrap().level;
            prop_assert!(a <= b && b <= k);
        }
    }

    #[test]
    fn clustering_output_has_large_girth(g in simple_graph(12), s in 1usize..6, k in 1usize..4) {
        let order: Vec<usize> = (0..g.edge_count()).rev().collect();
        let trace = greedy_clustering(&g, s, &order, &SpannerParams::new(g.n(), k)).unwrap();
        prop_assert_eq!(trace.decisions.len(), order.len());
        let h = SubgraphView::from_edges(&g, trace.added.iter().copied()).unwrap();
        prop_assert!(girth(&h).unwrap_or(INF) > s + 1);
    }

    #[test]
    fn greedy_dr_meets_contract(g in simple_graph(12), k in 2usize..4) {
        let res = greedy_dr_spanner(&g, 2, 2 * k).unwrap();
        let dg = hop_apsp(&g, &all_edges(&g));
        let dh = hop_apsp(&g, &res.edges);
        for x in 0..g.n() {
            for y in 0..g.n() {
                if dg[x][y] == 2 {
                    prop_assert!(dh[x][y] <= 2 * k);
                }
            }
        }
        let res = greedy_dr_spanner(&g, 1, 3).unwrap();
        let dh = hop_apsp(&g, &res.edges);
        for e in g.edges() {
            prop_assert!(dh[e.u][e.v] <= 3);
        }
    }

    #[test]
    fn path_collection_replay(g in simple_graph(10), r in 2usize..6) {
        let paths = enumerate_short_paths(&g, 2).unwrap();
        let coll = PathCollection::new(g.n(), paths.clone()).unwrap();
        let res = greedy_path_collection_spanner(&g, &coll, r).unwrap();
        let dh = hop_apsp(&g, &res.edges);
        for p in &paths {
            prop_assert!(dh[p.source()][p.target()] <= r);
        }
        for p in &res.added_paths {
            prop_assert!(p.edges().iter().all(|e| res.edges.binary_search(e).is_ok()));
        }
    }

    #[test]
    fn parallel_greedy_stays_sparse(g in simple_graph(12), k in 2usize..5) {
        let matchings = spanner_core::greedy::greedy_matchings(&g);
        let res = parallel_greedy_spanner(&g, k, &matchings).unwrap();
        let n = g.n() as f64;
        let kf = k as f64;
        prop_assert!(res.edge_count() as f64 <= 4.0 * kf * n.powf(1.0 + 1.0 / kf));
        let deg = spanner_core::greedy::boost_in_degrees(g.n(), &res.boosts);
        prop_assert!(deg.iter().all(|&d| d as f64 <= 4.0 * kf * n.powf(1.0 / kf)));
        let dh = hop_apsp(&g, &res.edges);
        for e in g.edges() {
            prop_assert!(dh[e.u][e.v] < 2 * k);
        }
    }

    #[test]
    fn pow_cmp_matches_bigint(a in 0u64..5000, p in 0u32..12, b in 0u64..5000, q in 0u32..12) {
        let lhs = BigUint::from(a).pow(p);
        let rhs = BigUint::from(b).pow(q);
        prop_assert_eq!(pow_cmp(a, p, b, q), lhs.cmp(&rhs));
    }

    #[test]
    fn format_round_trip(g in multigraph(10, 25), weighted in any::<bool>(), seed in any::<u64>()) {
        let g = if weighted {
            let edges: Vec<_> = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, e)| (e.u, e.v, 1.0 + ((seed >> (i % 48)) & 0xffff) as f64 / 7.0))
                .collect();
            Multigraph::from_weighted_edges(g.n(), &edges).unwrap()
        } else {
            g
        };
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn weighted_two_path_bound(g in weighted_graph(11), k in 2usize..4) {
        let res = build_weighted_spanner(&g, k).unwrap();
        let d = weighted_apsp(&g, &res.edges());
        for (x, _, y, e1, e2) in two_paths(&g) {
            let (w1, w2) = (g.weight(e1), g.weight(e2));
            let bound = w1 + w2 + (2 * k - 2) as f64 * w1.max(w2);
            prop_assert!(d[x][y] <= bound * (1.0 + 1e-9));
        }
        for e in g.edges() {
            prop_assert!(d[e.u][e.v] <= (2 * k - 1) as f64 * e.weight * (1.0 + 1e-9));
        }
        let n = g.n() as f64;
        prop_assert!(res.edge_count() as f64 <= 40.0 * n.powf(1.0 + 1.0 / k as f64));
    }

    #[test]
    fn weighted_records_are_consistent(g in weighted_graph(11), k in 2usize..4) {
        let res = build_weighted_spanner(&g, k).unwrap();
        let n = g.n() as f64;
        // saturated edges have both endpoints clustered at or below their weight
        for (e, &sat) in res.saturation.saturated.iter().enumerate() {
            if sat {
                let edge = g.edge(e);
                for x in [edge.u, edge.v] {
                    let w = res.saturation.first_clustered[x];
                    prop_assert!(w.is_some_and(|w| w <= edge.weight));
                }
            }
        }
        let mut per_vertex = vec![0usize; g.n()];
        for entry in &res.lateral {
            if entry.verdict == LateralVerdict::Added {
                per_vertex[entry.v] += 1;
            }
        }
        let cap = 10.0 * n.powf(1.0 / k as f64) + 1.0;
        prop_assert!(per_vertex.iter().all(|&c| c as f64 <= cap));
        for rep in &res.repairs {
            prop_assert!(res.saturation.saturated[rep.sat]);
            prop_assert!(g.weight(rep.sat) >= g.weight(rep.lat));
        }
        let mut seen = std::collections::HashSet::new();
        prop_assert!(res.phase_edges.iter().flatten().all(|&e| seen.insert(e)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fault_tolerant_outputs_survive_single_faults(g in multigraph(8, 16)) {
        let (exact, _) = eft_greedy_exact(&g, 2, 4, 1).unwrap();
        let (fast, _) = eft_modified_greedy(&g, 2, 1).unwrap();
        let everything = all_edges(&g);
        for h in [&exact.edges, &fast.edges] {
            for dead in std::iter::once(None).chain((0..g.edge_count()).map(Some)) {
                let dead: Vec<usize> = dead.into_iter().collect();
                let dg = hop_apsp(&g, &everything.iter().copied().filter(|e| !dead.contains(e)).collect::<Vec<_>>());
                let dh = hop_apsp(&g, &h.iter().copied().filter(|e| !dead.contains(e)).collect::<Vec<_>>());
                for x in 0..g.n() {
                    for y in 0..g.n() {
                        if dg[x][y] == 2 {
                            prop_assert!(dh[x][y] <= 4, "({}, {}) faults {:?}", x, y, dead);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn blocking_records_replay(g in multigraph(8, 16), f in 1usize..3) {
        let (exact, rec) = eft_greedy_exact(&g, 2, 4, f).unwrap();
        prop_assert!(verify_blocking_set(&g, &exact.added_paths, &rec, 4, f).unwrap());
        let (fast, rec) = eft_modified_greedy(&g, 2, f).unwrap();
        prop_assert!(verify_blocking_set(&g, &fast.added_paths, &rec, 4, 4 * f).unwrap());
    }
}
