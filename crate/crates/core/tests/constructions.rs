use mtg_core::construct::{cluster_main, construct_family, multipartite, Construction};
use mtg_core::graphs::parse_family_spec;
use mtg_core::represent::{check_coloring_lemmas, color_triangles, verify};
use mtg_core::theta::theta_formula;
use mtg_core::ExactReal;

fn formula_lo(spec: &str) -> usize {
    theta_formula(&parse_family_spec(spec).unwrap())
        .unwrap()
        .value
        .range()
        .0
}

#[test]
fn cluster_grid_matches_formula() {
    for n1 in 0..=3 {
        for n2 in 0..=3 {
            for n3 in 2..=9 {
                let c = cluster_main(n1, n2, n3).unwrap();
                assert!(verify(&c.graph, &c.representation).unwrap().ok);
                assert_eq!(c.threshold_count(), formula_lo(&format!("cluster:{n1},{n2},{n3}")));
                assert!(c.tight);
            }
        }
    }
}

/// Edge sums inside triangles hit an `ai` exactly; every other sum stays
/// clear of `[ai - ε, ai + ε]`, except sums involving K1/K2 vertices, which
/// may sit exactly on `ai ± ε` by design.
fn check_sums(c: &Construction, n1: usize, n2: usize) {
    let plan = c.plan.as_ref().unwrap();
    let eps = ExactReal::from_rational(plan.eps.clone());
    let small = n1 + 2 * n2;
    let g = &c.graph;
    for (u, v) in g.pairs() {
        let s = c.representation.pair_sum(u, v);
        if g.has_edge(u, v) && u >= small {
            assert!(plan.a.contains(&s), "edge ({u},{v}) sums to {s}");
            continue;
        }
        if g.has_edge(u, v) {
            assert_eq!(s, plan.a[0]);
            continue;
        }
        for a in &plan.a {
            let d = (&s - a).abs();
            if u >= small {
                assert!(d > eps, "nonedge ({u},{v}) within ε of {a}");
            } else {
                assert!(d >= eps, "nonedge ({u},{v}) closer than ε to {a}");
            }
        }
    }
}

#[test]
fn edge_sums_are_exact_colors() {
    for (n1, n2, n3) in [(0, 0, 2), (1, 1, 4), (2, 1, 7), (3, 3, 9), (0, 2, 5), (2, 0, 3)] {
        let c = cluster_main(n1, n2, n3).unwrap();
        check_sums(&c, n1, n2);
        let tri = c.graph.triangle_components();
        let col = color_triangles(&c.graph, &c.representation, &tri).unwrap();
        assert_eq!(col.multisets, c.plan.as_ref().unwrap().triples);
        check_coloring_lemmas(&col).unwrap();
    }
}

#[test]
fn multipartite_generic_and_boundary() {
    for n1 in 0..=2 {
        for n2 in 0..=2 {
            for n3 in 4..=6 {
                let c = multipartite(n1, n2, n3).unwrap();
                let f = formula_lo(&format!("multipartite:{n1},{n2},{n3}"));
                assert!(verify(&c.graph, &c.representation).unwrap().ok);
                if n3 == 5 {
                    assert!(c.tight);
                    assert_eq!(c.threshold_count(), f);
                } else {
                    assert!(!c.tight);
                    assert_eq!(c.threshold_count(), f + 1);
                }
            }
        }
    }
}

#[test]
fn family_dispatch() {
    let tight = [
        "path:1",
        "path:3",
        "path:7",
        "cycle:3",
        "cycle:4",
        "complete:1",
        "complete:6",
        "ladder:4",
        "tent:1",
        "tent:6",
        "lforest:2,0,1",
        "lforest:0,3",
        "cluster:2,0,0",
        "cluster:0,0,1,0,1",
        "cluster:0,0,3,1",
        "cluster:0,0,0,2",
        "cluster:0,0,0,3",
        "multipartite:0,0,7",
        "multipartite:2,1,1",
        "complement(cluster:0,0,2)",
        "union(complete:3; complete:3)",
        "union(path:4; path:2)",
        "union(path:2; path:2)",
        "union(complete:1; cluster:0,1,1)",
    ];
    for s in tight {
        let spec = parse_family_spec(s).unwrap();
        let c = construct_family(&spec).unwrap();
        assert!(verify(&c.graph, &c.representation).unwrap().ok, "{s}");
        assert!(c.tight, "{s} uses {} thresholds", c.threshold_count());
    }
    // valid but above the best lower bound
    for s in [
        "cluster:0,0,0,4",
        "multipartite:0,0,3",
        "ladder:1",
        "complement(path:5)",
        "multipartite:0,0,0,3",
    ] {
        let spec = parse_family_spec(s).unwrap();
        let c = construct_family(&spec).unwrap();
        assert!(verify(&c.graph, &c.representation).unwrap().ok, "{s}");
        let (lo, _) = theta_formula(&spec).unwrap().value.range();
        assert!(c.threshold_count() >= lo, "{s}");
    }
    assert!(construct_family(&parse_family_spec("cycle:5").unwrap()).is_err());
}

#[test]
fn certificate_serializes_deterministically() {
    let spec = parse_family_spec("cluster:1,1,4").unwrap();
    let c = construct_family(&spec).unwrap();
    let a = serde_json::to_string(&c.certificate(&spec).unwrap()).unwrap();
    let b = serde_json::to_string(&construct_family(&spec).unwrap().certificate(&spec).unwrap()).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["report"]["ok"], true);
    assert_eq!(v["threshold_count"], 6);
    assert!(v["plan"]["eps"].as_str().unwrap().contains('/'));
}
