use listcrit::graph::{degree_partition, is_k_critical, Graph};
use listcrit::reducibility::{
    audit_average_degree, audit_beta_lemma, audit_counting_identities, audit_kernel_magic,
    audit_q_lemma, build_auxiliary_f, check_configuration_type_one, choosability_brute_force,
    establish_irreducibility, is_fat, peel_degenerate, IrreducibilityBasis, ListSizeAssignment,
};
use listcrit::gallai::{is_gallai_forest, l_stats};
use listcrit::rational::rat;
use listcrit::Limits;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn random_graph(rng: &mut StdRng, n: usize, p: f64, max_edges: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if g.size() < max_edges && rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Tries every orientation and counts Eulerian arc subsets directly.
fn brute_force_at(g: &Graph, f: &ListSizeAssignment) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    let n = g.order();
    if f.values().contains(&0) {
        return false;
    }
    for dir in 0u32..1 << m {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if dir >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        let mut out = vec![0usize; n];
        for &(t, _) in &arcs {
            out[t] += 1;
        }
        if (0..n).any(|v| out[v] + 1 > f.get(v)) {
            continue;
        }
        let (mut even, mut odd) = (0u64, 0u64);
        for sub in 0u32..1 << m {
            let mut bal = vec![0i32; n];
            for (i, &(t, h)) in arcs.iter().enumerate() {
                if sub >> i & 1 == 1 {
                    bal[t] += 1;
                    bal[h] -= 1;
                }
            }
            if bal.iter().all(|&b| b == 0) {
                if sub.count_ones() % 2 == 0 {
                    even += 1;
                } else {
                    odd += 1;
                }
            }
        }
        if even != odd {
            return true;
        }
    }
    false
}

fn random_f(rng: &mut StdRng, n: usize, max: usize) -> ListSizeAssignment {
    ListSizeAssignment::new((0..n).map(|_| rng.random_range(1..=max)).collect())
}

#[test]
fn fat_matches_orientation_oracle() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..300 {
        let n = rng.random_range(1..=6);
        let g = random_graph(&mut rng, n, 0.55, 9);
        let f = random_f(&mut rng, n, 3);
        let fast = is_fat(&g, &f).unwrap();
        assert_eq!(fast.is_at, brute_force_at(&g, &f), "{g:?} {f:?}");
        if let (Some(w), Some((e, o))) = (&fast.witness, fast.parity) {
            assert_ne!(e, o);
            let mut out = vec![0usize; n];
            for &(t, _) in w {
                out[t] += 1;
            }
            assert!((0..n).all(|v| out[v] < f.get(v)));
            assert_eq!(w.len(), g.size());
        }
    }
}

#[test]
fn fat_implies_choosable_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.random_range(1..=7);
        let g = random_graph(&mut rng, n, 0.5, 14);
        let f = random_f(&mut rng, n, 3);
        if is_fat(&g, &f).unwrap().is_at {
            assert!(choosability_brute_force(&g, &f).unwrap(), "{g:?} {f:?}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn peel_residue_has_high_degrees(
        n in 1usize..12,
        seed in any::<u64>(),
        p in 0.1f64..0.9,
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p, usize::MAX);
        let f = ListSizeAssignment::new((0..n).map(|_| rng.random_range(0..4)).collect());
        let residue = peel_degenerate(&g, &f).unwrap();
        if g.size() > f.total() {
            prop_assert!(residue.is_some());
        }
        if let Some(r) = residue {
            for (i, &v) in r.vertices.iter().enumerate() {
                prop_assert!(r.graph.degree(i) > f.get(v));
            }
        }
    }

    #[test]
    fn auxiliary_identity_holds(n in 3usize..11, seed in any::<u64>(), p in 0.3f64..0.9) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, p, usize::MAX);
        let delta = g.min_degree().unwrap();
        prop_assume!(delta >= 2);
        let k = delta + 1;
        let f = build_auxiliary_f(&g, k).unwrap();
        let (a2, rhs) = f.a2_identity();
        prop_assert_eq!(a2, rhs);
        let part = degree_partition(&g, k).unwrap();
        let low = g.induced(part.low.iter().copied()).graph;
        let a3: usize = f.b.iter().map(|&y| {
            g.neighbors(y).iter().filter(|u| part.all_high.contains(u)).count()
        }).sum();
        prop_assert_eq!(f.a3.len(), a3);
        let stats = l_stats(&low, k).unwrap();
        prop_assert_eq!(stats.q, f.q);
        let low_has_kk = low.components().iter().any(|c| {
            c.len() == k && low.induced(c.iter().copied()).graph.is_complete()
        });
        if k >= 4 && is_gallai_forest(&low) && !low_has_kk {
            let (a2, bound) = f.a2_against_q();
            prop_assert!(a2 as i64 <= bound);
        }
    }
}

/// Small Gallai trees containing `K4`, as edge lists.
fn k4_shapes() -> Vec<Graph> {
    let k4 = Graph::complete(4);
    let mut pendant = k4.disjoint_union(&Graph::empty(1));
    pendant.add_edge(0, 4).unwrap();
    let mut tri = k4.disjoint_union(&Graph::empty(2));
    for (u, v) in [(0, 4), (0, 5), (4, 5)] {
        tri.add_edge(u, v).unwrap();
    }
    let mut two = k4.disjoint_union(&Graph::empty(2));
    two.add_edge(0, 4).unwrap();
    two.add_edge(1, 5).unwrap();
    let mut path = k4.disjoint_union(&Graph::empty(2));
    path.add_edge(0, 4).unwrap();
    path.add_edge(4, 5).unwrap();
    vec![k4, pendant, tri, two, path]
}

#[test]
fn type_one_configurations_are_at() {
    let mut rng = StdRng::seed_from_u64(13);
    let shapes = k4_shapes();
    let mut confirmed = 0;
    let mut attempts = 0;
    while confirmed < 150 && attempts < 20_000 {
        attempts += 1;
        let t = rng.random_range(1..=2);
        let mut g = Graph::empty(1);
        for _ in 0..t {
            g = g.disjoint_union(&shapes[rng.random_range(0..shapes.len())]);
        }
        if g.order() > 10 {
            continue;
        }
        for v in 1..g.order() {
            if g.degree(v) < 4 && rng.random_bool(0.4) {
                g.add_edge(0, v).unwrap();
            }
        }
        if g.size() > 24 {
            continue;
        }
        let report = check_configuration_type_one(&g, 0, 5).unwrap();
        if !report.holds {
            continue;
        }
        let verdict = report.certify(&g, &Limits::default()).unwrap().unwrap();
        assert!(verdict.is_at, "{g:?}");
        confirmed += 1;
    }
    assert!(confirmed >= 150, "only {confirmed} instances generated");
}

/// Four `K4`s in a chain plus two degree-5 vertices covering the ten
/// non-cut vertices: `q = 10 > c* + 4|H⁻| = 9`.
fn q_violator() -> Graph {
    let mut g = Graph::empty(18);
    for b in 0..4 {
        for i in 0..4 {
            for j in i + 1..4 {
                g.add_edge(4 * b + i, 4 * b + j).unwrap();
            }
        }
    }
    for (u, v) in [(3, 4), (5, 8), (9, 12)] {
        g.add_edge(u, v).unwrap();
    }
    for v in [0, 1, 2, 6, 7] {
        g.add_edge(16, v).unwrap();
    }
    for v in [10, 11, 13, 14, 15] {
        g.add_edge(17, v).unwrap();
    }
    g
}

#[test]
fn q_violation_extracts_a_reduction() {
    let g = q_violator();
    assert_eq!(g.min_degree(), Some(4));
    let reports = audit_q_lemma(&g, 5, IrreducibilityBasis::Asserted).unwrap();
    let first = &reports[0];
    assert!(!first.pass);
    assert_eq!((first.lhs.clone(), first.rhs.clone()), (rat(10, 1), rat(9, 1)));
    let extraction = first.context.extraction.as_ref().unwrap();
    assert_eq!(extraction.rule, "clique-neighbour");
    let r = extraction.reduction.as_ref().unwrap();
    let h = g.induced(r.vertices.iter().copied());
    let f = ListSizeAssignment::reduction_target(&g, &r.vertices);
    assert_eq!(&f, &r.f);
    assert!(is_fat(&h.graph, &f).unwrap().is_at);
}

/// Non-complete critical graphs with `δ = k - 1`.
fn critical_family() -> Vec<(Graph, usize)> {
    let hajos = {
        // two K5s sharing vertex 4, each minus an edge at 4, joined at the freed ends
        let mut g = Graph::empty(9);
        for i in 0..5 {
            for j in i + 1..5 {
                if (i, j) != (0, 4) {
                    g.add_edge(i, j).unwrap();
                }
            }
        }
        let side = [4, 5, 6, 7, 8];
        for a in 0..5 {
            for b in a + 1..5 {
                if (side[a], side[b]) != (4, 8) {
                    g.add_edge(side[a], side[b]).unwrap();
                }
            }
        }
        g.add_edge(0, 8).unwrap();
        g
    };
    vec![
        (Graph::cycle(5).join(&Graph::complete(2)), 5),
        (Graph::cycle(7).join(&Graph::complete(2)), 5),
        (Graph::cycle(5).join(&Graph::complete(3)), 6),
        (hajos, 5),
    ]
}

#[test]
fn critical_graphs_pass_every_audit() {
    let limits = Limits::default();
    for (g, k) in critical_family() {
        assert!(is_k_critical(&g, k).unwrap(), "{g:?} not {k}-critical");
        let basis = establish_irreducibility(&g, k, false, &limits).unwrap();
        assert_eq!(basis, IrreducibilityBasis::ImpliedByCriticality);
        assert_eq!(g.min_degree(), Some(k - 1));
        for r in audit_q_lemma(&g, k, basis).unwrap() {
            assert!(r.pass, "{}", r.summary());
        }
        let lambda = listcrit::bounds::z_upper(k).min(rat(52, 21));
        for l in [rat(2, 1), lambda] {
            let r = audit_beta_lemma(&g, k, &l, basis).unwrap();
            assert!(r.pass, "{}", r.summary());
        }
        assert!(audit_kernel_magic(&g, k, basis).unwrap().pass);
        assert!(audit_counting_identities(&g, k).unwrap().iter().all(|r| r.pass));
        assert!(audit_average_degree(&g, k, basis).unwrap().pass);
    }
}

