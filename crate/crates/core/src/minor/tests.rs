use super::*;
use crate::catalog::{family_member, fixture, herschel, pattern, FixtureId, PatternId};
use crate::planar::is_planar;
use crate::testutil::*;
use proptest::prelude::*;

fn small_patterns() -> Vec<Graph> {
    vec![
        complete(3),
        complete(4),
        complete_bipartite(2, 2),
        complete_bipartite(2, 3),
        cycle(5),
    ]
}

#[test]
fn herschel_k25_but_not_k26() {
    let h = herschel();
    let m = find_minor_model(&h, &pattern(PatternId::K25)).expect("K25 minor");
    assert!(verify_minor_model(&h, &pattern(PatternId::K25), &m));
    assert!(find_minor_model(&h, &pattern(PatternId::K26)).is_none());
    // the generic engine agrees with the two-hub route
    let k26 = pattern(PatternId::K26);
    assert!(find_model_generic(&h, &k26, &SearchOptions::default()).is_none());
    let k25 = pattern(PatternId::K25);
    let g = find_model_generic(&h, &k25, &SearchOptions::default()).unwrap();
    assert!(verify_minor_model(&h, &k25, &g));
}

#[test]
fn fig6_a_has_k26() {
    let f = fixture(FixtureId::Fig6A);
    let k26 = pattern(PatternId::K26);
    let m = find_minor_model(&f, &k26).expect("K26 minor");
    assert!(verify_minor_model(&f, &k26, &m));
    let g = find_model_generic(&f, &k26, &SearchOptions::default()).unwrap();
    assert!(verify_minor_model(&f, &k26, &g));
}

#[test]
fn contraction_shortcut_on_family_members() {
    let h = herschel();
    for spec in ["bullet:16:0", "bullet:18:21", "circ:15:7", "h15"] {
        let g = family_member(spec.parse().unwrap()).unwrap();
        let m = find_by_contraction(&g, &h, 4000).expect(spec);
        assert!(verify_minor_model(&g, &h, &m), "{spec}");
    }
    assert!(find_by_contraction(&h, &h, 10).is_none());
    assert!(find_by_contraction(&cube(), &h, 4000).is_none());
}

#[test]
fn identity_models() {
    for g in [herschel(), cube(), complete(5), cycle(7)] {
        let m = find_minor_model(&g, &g).unwrap();
        assert!(verify_minor_model(&g, &g, &m));
        assert!(m.branch_sets.iter().all(|s| s.count_ones() == 1));
        assert!(verify_minor_model(&g, &g, &MinorModel::identity(&g)));
    }
}

#[test]
fn broken_models_are_rejected() {
    let k4 = complete(4);
    let good = MinorModel::identity(&k4);
    assert!(verify_minor_model(&k4, &k4, &good));
    let mut overlap = good.clone();
    overlap.branch_sets[1] |= 1;
    assert!(!verify_minor_model(&k4, &k4, &overlap));
    let c6 = cycle(6);
    let k3 = complete(3);
    let mut split =
        MinorModel::from_branch_sets(&c6, &k3, vec![0b000011, 0b001100, 0b110000]).unwrap();
    assert!(verify_minor_model(&c6, &k3, &split));
    split.branch_sets = vec![0b010001, 0b001100, 0b100010];
    assert!(!verify_minor_model(&c6, &k3, &split));
    let mut missing = good.clone();
    missing.edge_witnesses.pop();
    assert!(!verify_minor_model(&k4, &k4, &missing));
}

#[test]
fn text_round_trip() {
    let h = herschel();
    let k25 = pattern(PatternId::K25);
    let m = find_minor_model(&h, &k25).unwrap();
    let text = m.to_text();
    assert_eq!(MinorModel::parse_text(&text).unwrap(), m);
    assert_eq!(MinorModel::parse_text(&text.replace('\n', ";")).unwrap(), m);
    assert!(MinorModel::parse_text("branch 0: 1 x").is_err());
    assert!(MinorModel::parse_text("branch 1: 1").is_err());
    match MinorModel::parse_text("branch 0: 1\nnode 3") {
        Err(crate::Error::Format { offset, .. }) => assert_eq!(offset, 12),
        other => panic!("{other:?}"),
    }
}

#[test]
fn brute_force_examples() {
    assert!(brute_force_has_minor(&complete(4), &complete(3)).unwrap());
    assert!(brute_force_has_minor(&cycle(6), &complete(3)).unwrap());
    let tree = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
    assert!(!brute_force_has_minor(&tree, &complete(3)).unwrap());
    assert!(brute_force_has_minor(&herschel(), &complete(3)).is_err());
}

#[test]
fn rooted_k22_examples() {
    let c4 = cycle(4);
    let m = find_rooted_k22(&c4, 0, 2).unwrap().unwrap();
    assert!(verify_minor_model(&c4, &complete_bipartite(2, 2), &m));
    assert!(m.branch_sets[0] & 1 != 0 && m.branch_sets[1] & 4 != 0);
    assert!(find_rooted_k22(&path(4), 0, 3).unwrap().is_none());
    let k4 = complete(4);
    for x in 0..4 {
        for y in 0..4 {
            if x != y {
                let m = find_rooted_k22(&k4, x, y).unwrap().unwrap();
                assert!(verify_minor_model(&k4, &complete_bipartite(2, 2), &m));
                assert!(m.branch_sets[0] >> x & 1 == 1 && m.branch_sets[1] >> y & 1 == 1);
            }
        }
    }
    assert!(find_rooted_k22(&k4, 1, 1).is_err());
}

/// Rooted K2,2 by brute force: x and y in the two rooted sets.
fn brute_rooted_k22(g: &Graph, x: usize, y: usize) -> bool {
    let n = g.order();
    let k22 = complete_bipartite(2, 2);
    let mut label = vec![0usize; n];
    loop {
        let mut sets = [0u64; 5];
        for (v, &l) in label.iter().enumerate() {
            sets[l] |= 1 << v;
        }
        if sets[0] >> x & 1 == 1
            && sets[1] >> y & 1 == 1
            && sets[..4]
                .iter()
                .all(|&s| s != 0 && g.is_connected_within(s))
            && k22
                .edges()
                .all(|(p, q)| g.neighborhood_of(sets[p]) & sets[q] != 0)
        {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= 4 {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

#[test]
fn rooted_k22_matches_oracle() {
    for n in 4..=6 {
        for g in brute_iso_classes(n) {
            for (x, y) in [(0, 1), (0, n - 1), (1, 2)] {
                let got = find_rooted_k22(&g, x, y).unwrap();
                if let Some(m) = &got {
                    assert!(verify_minor_model(&g, &complete_bipartite(2, 2), m));
                }
                assert_eq!(
                    got.is_some(),
                    brute_rooted_k22(&g, x, y),
                    "{g:?} roots {x},{y}"
                );
            }
        }
    }
}

#[test]
fn spanning_subgraph_examples() {
    for mask in 0..32 {
        let g = family_member(
            crate::catalog::FamilySpec::new(crate::catalog::FamilyKind::Bullet, 11, mask).unwrap(),
        )
        .unwrap();
        let map = find_spanning_subgraph(&g, &herschel()).unwrap().unwrap();
        assert!(herschel().edges().all(|(u, v)| g.has_edge(map[u], map[v])));
    }
    let h = herschel();
    assert!(find_spanning_subgraph(&h, &h).unwrap().is_some());
    assert!(find_spanning_subgraph(&cube(), &h).is_err());
    assert!(find_spanning_subgraph(&cycle(6), &complete_bipartite(3, 3))
        .unwrap()
        .is_none());
}

#[test]
fn oracle_equivalence_on_small_hosts() {
    for n in 1..=6 {
        for host in brute_iso_classes(n) {
            for pat in small_patterns() {
                let brute = brute_force_has_minor(&host, &pat).unwrap();
                let found = find_minor_model(&host, &pat);
                assert_eq!(found.is_some(), brute, "{host:?} {pat:?}");
                if let Some(m) = found {
                    assert!(verify_minor_model(&host, &pat, &m));
                }
                let generic = find_model_generic(&host, &pat, &SearchOptions::default());
                assert_eq!(generic.is_some(), brute, "generic {host:?} {pat:?}");
                let plain = find_model_generic(
                    &host,
                    &pat,
                    &SearchOptions {
                        roots: vec![],
                        symmetry: false,
                    },
                );
                assert_eq!(plain.is_some(), brute, "no symmetry {host:?} {pat:?}");
            }
        }
    }
}

#[test]
fn wagner_agrees_with_planarity_on_small_graphs() {
    let k5 = pattern(PatternId::K5);
    let k33 = pattern(PatternId::K33);
    for n in 5..=7 {
        for g in brute_iso_classes_filtered(n) {
            let wagner = !has_minor(&g, &k5) && !has_minor(&g, &k33);
            assert_eq!(is_planar(&g), wagner, "{g:?}");
        }
    }
}

/// Iso classes for n <= 6, and a dense random sample at n = 7.
fn brute_iso_classes_filtered(n: usize) -> Vec<Graph> {
    if n <= 6 {
        brute_iso_classes(n)
    } else {
        (0..400u64)
            .map(|s| random_graph(n, 0.4 + (s % 5) as f64 * 0.1, s * 7919 + 1))
            .collect()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn models_verify_and_match_oracle(host in arb_graph(1, 8), pi in 0usize..5) {
        let pat = &small_patterns()[pi];
        let brute = brute_force_has_minor(&host, pat).unwrap();
        let m = find_minor_model(&host, pat);
        prop_assert_eq!(m.is_some(), brute);
        if let Some(m) = m {
            prop_assert!(verify_minor_model(&host, pat, &m));
        }
    }

    #[test]
    fn adding_an_edge_keeps_minors(host in arb_graph(4, 12), a in 0usize..12, b in 0usize..12, pi in 0usize..5) {
        let n = host.order();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let pat = &small_patterns()[pi];
        if has_minor(&host, pat) {
            let mut bigger = host.clone();
            bigger.add_edge(a, b);
            prop_assert!(has_minor(&bigger, pat));
        }
    }

    #[test]
    fn two_hub_route_matches_generic(host in arb_graph(4, 11), t in 1usize..5, joined in any::<bool>()) {
        let mut pat = complete_bipartite(2, t);
        if joined {
            pat.add_edge(0, 1);
        }
        let fast = find_minor_model(&host, &pat);
        let slow = find_model_generic(&host, &pat, &SearchOptions::default());
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(m) = fast {
            prop_assert!(verify_minor_model(&host, &pat, &m));
        }
    }

    #[test]
    fn contraction_hits_are_sound(host in arb_graph(5, 9), pi in 0usize..5) {
        let pat = &small_patterns()[pi];
        if let Some(m) = find_by_contraction(&host, pat, 200) {
            prop_assert!(verify_minor_model(&host, pat, &m));
            prop_assert!(brute_force_has_minor(&host, pat).unwrap());
        }
    }

    #[test]
    fn wagner_agrees_with_planarity(g in arb_graph(5, 9)) {
        let wagner = !has_minor(&g, &pattern(PatternId::K5)) && !has_minor(&g, &pattern(PatternId::K33));
        prop_assert_eq!(is_planar(&g), wagner);
    }
}
