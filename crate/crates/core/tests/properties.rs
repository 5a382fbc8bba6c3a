use graph_energy::generators::{named_families, seeded_gnp_corpus};
use graph_energy::*;
use proptest::prelude::*;

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    generate(&FamilySpec::RandomGnp { n, p, seed }).unwrap()
}

fn corpus() -> Vec<Graph> {
    named_families()
        .into_iter()
        .chain(seeded_gnp_corpus(200, 1000))
        .map(|s| generate(&s).unwrap())
        .collect()
}

/// Every 4-cycle lives on a 4-subset; each subset carries up to three.
fn brute_force_quadrilaterals(g: &Graph) -> u64 {
    let n = g.n();
    let e = |a, b| g.has_edge(a, b);
    let mut q = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    q += (e(a, b) && e(b, c) && e(c, d) && e(d, a)) as u64;
                    q += (e(a, b) && e(b, d) && e(d, c) && e(c, a)) as u64;
                    q += (e(a, c) && e(c, b) && e(b, d) && e(d, a)) as u64;
                }
            }
        }
    }
    q
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(n in 0usize..=64, p in 0.0f64..=1.0, seed: u64) {
        let g = random_graph(n, p, seed);
        let text = write_graph6(&g).unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(n in 1usize..30, p in 0.0f64..=1.0, seed: u64) {
        let g = random_graph(n, p, seed);
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn quadrilaterals_three_ways(n in 0usize..=12, p in 0.0f64..=1.0, seed: u64) {
        let g = random_graph(n, p, seed);
        // count_quadrilaterals already cross-checks trace and common-neighbour routes
        prop_assert_eq!(count_quadrilaterals(&g).unwrap(), brute_force_quadrilaterals(&g));
    }

    #[test]
    fn moment_identities(n in 1usize..=40, p in 0.0f64..=1.0, seed: u64) {
        let g = random_graph(n, p, seed);
        let s = moment_summary(&g).unwrap();
        prop_assert_eq!(s.degrees.iter().sum::<usize>() as u64, 2 * s.m);
        prop_assert_eq!(s.m2 as u128, trace_moment(&g, 2).unwrap());
        prop_assert_eq!(s.m4 as u128, trace_moment(&g, 4).unwrap());
        prop_assert!(s.zagreb as f64 * n as f64 >= (2 * s.m) as f64 * (2 * s.m) as f64);
        prop_assert!(s.zagreb <= 2 * s.m * s.delta_max as u64);
        let delta = s.delta_max as u64;
        prop_assert!(s.m4 <= 2 * s.m * delta * delta);
        if delta > 0 {
            let t = abc_triple(&s).unwrap();
            prop_assert!(t.a >= 0.0 && t.a <= t.b && t.b <= t.c);
        }
    }

    #[test]
    fn adding_an_edge_grows_m2_and_zagreb(n in 2usize..20, p in 0.0f64..=1.0, seed: u64, pick: (usize, usize)) {
        let g = random_graph(n, p, seed);
        let (i, j) = (pick.0 % n, pick.1 % n);
        prop_assume!(i != j);
        let h = Graph::from_edges(n, g.edges().chain([(i, j)])).unwrap();
        let (a, b) = (moment_summary(&g).unwrap(), moment_summary(&h).unwrap());
        prop_assert!(b.m2 >= a.m2 && b.zagreb >= a.zagreb);
    }

    #[test]
    fn spectrum_invariants(n in 1usize..=24, p in 0.0f64..=1.0, seed: u64) {
        let g = random_graph(n, p, seed);
        let s = eigenvalues(&g).unwrap();
        prop_assert_eq!(s.len(), n);
        prop_assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
        for k in 0..=6u32 {
            let exact = trace_moment(&g, k).unwrap() as f64;
            prop_assert!((s.moment(k) - exact).abs() <= 1e-7 * exact.max(1.0), "k = {}", k);
        }
        let e = s.energy();
        if g.edge_count() > 0 {
            prop_assert!(e >= s.eigenvalues[0] + s.eigenvalues[n - 1].abs() - 1e-9);
        } else {
            prop_assert!(e < 1e-12);
        }
    }

    #[test]
    fn bipartite_spectrum_is_symmetric(p in 0.0f64..=1.0, seed: u64, left in 1usize..10, right in 1usize..10) {
        // random subgraph of K_{left,right}
        let g = random_graph(left + right, p, seed);
        let h = Graph::from_edges(left + right, g.edges().filter(|&(i, j)| (i < left) != (j < left))).unwrap();
        prop_assert!(h.is_bipartite());
        let s = eigenvalues(&h).unwrap();
        let tol = 1e-10 * h.max_degree().max(1) as f64;
        for (a, b) in s.eigenvalues.iter().zip(s.eigenvalues.iter().rev()) {
            prop_assert!((a + b).abs() <= tol);
        }
    }

    #[test]
    fn union_spectrum_is_multiset_union(p in 0.0f64..=1.0, s1: u64, s2: u64, n1 in 1usize..12, n2 in 1usize..12) {
        let (a, b) = (random_graph(n1, p, s1), random_graph(n2, p, s2));
        let u = a.disjoint_union(&b);
        let mut merged: Vec<f64> = eigenvalues(&a).unwrap().eigenvalues;
        merged.extend(eigenvalues(&b).unwrap().eigenvalues);
        merged.sort_by(|x, y| y.total_cmp(x));
        let tol = 1e-10 * u.max_degree().max(1) as f64;
        for (x, y) in eigenvalues(&u).unwrap().eigenvalues.iter().zip(&merged) {
            prop_assert!((x - y).abs() <= tol);
        }
    }

    #[test]
    fn quartic_majorizes_everywhere(r in 0.001f64..0.999) {
        let p = pr_coefficients(r).unwrap();
        let m = verify_majorization(&p, Direction::Above, 2000);
        prop_assert!(m.ok, "{:?}", m);
    }
}

#[test]
fn theorem1_is_sound_on_corpus() {
    for g in corpus() {
        let s = moment_summary(&g).unwrap();
        if s.delta_max == 0 {
            continue;
        }
        let t = abc_triple(&s).unwrap();
        let e = energy(&g).unwrap();
        let b = theorem1_bound(&t);
        assert!(b >= e - 1e-7 * e.max(1.0), "{:?}: {b} < {e}", g.label());
    }
}

#[test]
fn optimal_r_minimizes_on_corpus() {
    for g in corpus() {
        let s = moment_summary(&g).unwrap();
        if s.delta_max == 0 {
            continue;
        }
        let t = abc_triple(&s).unwrap();
        let opt = optimal_r(&t);
        if opt.clamped {
            continue;
        }
        let best = bound_at_r(&t, opt.r).unwrap();
        assert!(rel(theorem1_bound(&t), best) < 1e-9);
        for i in 1..100 {
            let r = i as f64 / 100.0;
            assert!(
                best <= bound_at_r(&t, r).unwrap() + 1e-12 * best,
                "{:?} r = {r}",
                g.label()
            );
        }
        // tangency of the dilated optimal quartic
        let delta = s.delta_max as f64;
        let p = dilate(&pr_coefficients(opt.r).unwrap(), delta).unwrap();
        assert!((p.eval(opt.r * delta) - opt.r * delta).abs() <= 1e-9 * delta);
        assert!((p.eval(delta) - delta).abs() <= 1e-9 * delta);
    }
}

#[test]
fn dilation_identity_on_corpus() {
    for g in corpus() {
        let s = moment_summary(&g).unwrap();
        if s.delta_max == 0 {
            continue;
        }
        let t = abc_triple(&s).unwrap();
        for r in [0.2, 0.5, 0.8] {
            let formula = bound_at_r(&t, r).unwrap();
            let p = dilate(&pr_coefficients(r).unwrap(), s.delta_max as f64).unwrap();
            let contracted = bound_from_polynomial(&p, &s, Direction::Above).unwrap();
            assert!(rel(contracted, formula) < 1e-9, "{:?}", g.label());
        }
    }
}

#[test]
fn monotone_in_a_on_corpus() {
    for g in corpus() {
        let s = moment_summary(&g).unwrap();
        if s.delta_max == 0 {
            continue;
        }
        let t = abc_triple(&s).unwrap();
        let grid = [t.a * 0.5, t.a * 0.9, t.a, (t.a * 1.1).min(t.b)];
        let values: Vec<f64> = grid
            .iter()
            .map(|&a| theorem1_bound(&AbcTriple::new(a, t.b, t.c)))
            .collect();
        for w in values.windows(2) {
            assert!(
                w[1] <= w[0] + 1e-12 * w[0].abs(),
                "{:?}: {values:?}",
                g.label()
            );
        }
    }
}

#[test]
fn regular_graphs_meet_van_dam() {
    let regular: Vec<Graph> = corpus()
        .into_iter()
        .chain(
            ["rook:5", "pg:5", "cycle:9", "complete:8"]
                .map(|s| generate(&s.parse().unwrap()).unwrap()),
        )
        .filter(|g| g.is_regular().is_some_and(|d| d >= 1))
        .collect();
    assert!(regular.len() >= 10);
    for g in regular {
        let s = moment_summary(&g).unwrap();
        let t = abc_triple(&s).unwrap();
        let vd = van_dam_bound(g.n(), s.delta_max).unwrap();
        let b = theorem1_bound(&t);
        if s.quad_count == 0 {
            assert!((vd - b).abs() <= 1e-9 * b, "{:?}: {vd} vs {b}", g.label());
        } else {
            assert!(b <= vd + 1e-9, "{:?}: {b} > {vd}", g.label());
        }
    }
}

#[test]
fn lp_bounds_bracket_energy() {
    for spec in named_families()
        .into_iter()
        .chain(seeded_gnp_corpus(20, 77))
    {
        let g = generate(&spec).unwrap();
        if g.edge_count() == 0 {
            continue;
        }
        let e = energy(&g).unwrap();
        let rows = bound_sweep(&g, 8).unwrap();
        for r in &rows {
            assert!(r.certified);
            assert!(
                r.lower - 1e-6 <= e && e <= r.upper + 1e-6,
                "{spec}: {r:?} vs {e}"
            );
        }
        for w in rows.windows(2) {
            assert!(w[1].upper <= w[0].upper && w[1].lower >= w[0].lower);
        }
    }
}

#[test]
fn raw_lp_degree_dominance() {
    // without the sweep's carry-over the LP values are still monotone up to
    // the certification shift
    let g = generate(&"gnp:14:0.5:9".parse().unwrap()).unwrap();
    let solve = |d, dir| {
        solve_bound_lp(&LpProblem::for_graph(&g, d, dir).unwrap())
            .unwrap()
            .objective
    };
    let ups: Vec<f64> = (1..=4).map(|k| solve(2 * k, Direction::Above)).collect();
    let lows: Vec<f64> = (1..=4).map(|k| solve(2 * k, Direction::Below)).collect();
    for w in ups.windows(2) {
        assert!(w[1] <= w[0] + 1e-7 * w[0], "{ups:?}");
    }
    for w in lows.windows(2) {
        assert!(w[1] >= w[0] - 1e-7 * w[0].abs().max(1.0), "{lows:?}");
    }
}
