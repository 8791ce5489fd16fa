use proptest::prelude::*;

use p5w4::color::{color, Audit};
use p5w4::decompose::atom_tree;
use p5w4::detect::{check_proper, chi_exact, in_class, Limits};
use p5w4::harness::gen::{gen_mixed, gen_structured, Base};
use p5w4::harness::io::{parse, write, Format};
use p5w4::nice::{nice_search_fallback, verify_nice};
use p5w4::{blowup, BlowupSpec, Graph};

fn in_class_graph() -> impl Strategy<Value = Graph> {
    (6usize..15, any::<u64>()).prop_filter_map("no draw", |(n, seed)| gen_mixed(n, seed))
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (1usize..20).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut k = 0;
            Graph::from_fn(n, |_, _| {
                k += 1;
                bits[k - 1]
            })
            .unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn coloring_is_proper_and_bounded(g in in_class_graph()) {
        let r = color(&g).unwrap();
        prop_assert!(check_proper(&g, &r.colors));
        prop_assert!(r.count <= r.bound);
        if g.n() <= 12 {
            let chi = chi_exact(&g).unwrap().count;
            prop_assert!(chi <= r.count && chi <= r.bound);
        }
    }

    #[test]
    fn coloring_is_deterministic(g in in_class_graph()) {
        let a = color(&g).unwrap();
        let b = color(&g).unwrap();
        prop_assert_eq!(a.colors, b.colors);
        prop_assert_eq!(a.audit, b.audit);
    }

    #[test]
    fn audit_survives_json(g in in_class_graph()) {
        let r = color(&g).unwrap();
        let back: Audit = serde_json::from_str(&serde_json::to_string(&r.audit).unwrap()).unwrap();
        prop_assert_eq!(&back, &r.audit);
        prop_assert!(back.replay(&g, &Limits::default()).unwrap().iter().all(|c| c.passed));
    }

    #[test]
    fn nice_levels_drop_omega_by_two(g in in_class_graph()) {
        let r = color(&g).unwrap();
        for level in &r.audit.certificates {
            prop_assert!(level.omega_after + 2 <= level.omega || level.omega_after == 0);
        }
        // each level removes at least two from ω, so nesting is at most ⌈ω/2⌉ deep
        prop_assert!(r.audit.certificates.iter().all(|l| l.omega <= r.omega));
    }

    #[test]
    fn tampered_colors_are_caught(g in in_class_graph(), pick in any::<prop::sample::Index>()) {
        let r = color(&g).unwrap();
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let mut bad = r.audit.clone();
        bad.coloring.colors[u] = bad.coloring.colors[v];
        let checks = bad.replay(&g, &Limits::default()).unwrap();
        prop_assert!(checks.iter().any(|c| !c.passed));
    }

    #[test]
    fn leaves_reassemble(g in in_class_graph()) {
        prop_assume!(g.is_connected());
        let tree = atom_tree(&g).unwrap();
        prop_assert_eq!(tree.reassemble(g.n()).unwrap(), g);
    }

    #[test]
    fn files_round_trip(g in any_graph()) {
        for f in [Format::Dimacs, Format::EdgeList] {
            let text = write(&g, f);
            let back = parse(&text, f).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write(&back, f), text);
        }
    }

    #[test]
    fn small_wheel_blowups_stay_in_class(sizes in proptest::collection::vec(1usize..=2, 6)) {
        let g = blowup(&BlowupSpec::cliques(Graph::wheel(5), &sizes)).unwrap().graph;
        prop_assert!(in_class(&g));
    }

    #[test]
    fn fallback_certificates_verify(n in 6usize..12, seed in any::<u64>()) {
        let g = gen_structured(n, Base::C5Seeded, seed).or_else(|| gen_mixed(n, seed));
        prop_assume!(g.is_some());
        let g = g.unwrap();
        if let Some(c) = nice_search_fallback(&g).unwrap() {
            prop_assert!(verify_nice(&g, &c).unwrap().is_valid());
        }
    }
}
