//! End-to-end flows through the public API, checked against small oracles
//! written here rather than the library's own helpers.

use std::collections::HashSet;

use polyhedra_core::catalog::{
    family_member, herschel, pattern, FamilyKind, FamilySpec, PatternId,
};
use polyhedra_core::enumerate::{enumerate_polyhedra, expansions, split_vertex};
use polyhedra_core::hamilton::{find_hamilton_cycle, verify_cycle, verify_witness};
use polyhedra_core::minor::{find_minor_model, verify_minor_model};
use polyhedra_core::{canonical_form, parse_graph6, to_graph6, Graph};

/// Connected after deleting any one or two vertices.
fn three_connected_by_deletion(g: &Graph) -> bool {
    let n = g.order();
    let all = g.vertex_mask();
    n >= 4 && (0..n).all(|a| (a..n).all(|b| g.is_connected_within(all & !(1 << a) & !(1 << b))))
}

fn hamiltonian_by_dp(g: &Graph) -> bool {
    // Held-Karp over subsets containing vertex 0
    let n = g.order();
    let mut reach = vec![0u64; 1 << n];
    reach[1] = 1;
    for set in 1..1usize << n {
        if set & 1 == 0 {
            continue;
        }
        let ends = reach[set];
        for v in 0..n {
            if ends >> v & 1 == 1 {
                let mut next = g.neighbors(v) & !(set as u64);
                while next != 0 {
                    let w = next.trailing_zeros() as usize;
                    next &= next - 1;
                    reach[set | 1 << w] |= 1 << w;
                }
            }
        }
    }
    let full = (1usize << n) - 1;
    (1..n).any(|v| reach[full] >> v & 1 == 1 && g.has_edge(v, 0))
}

#[test]
fn order_eight_polyhedra_are_distinct_and_hamiltonian() {
    let mut seen = HashSet::new();
    let count = enumerate_polyhedra(8, |g| {
        assert!(three_connected_by_deletion(g));
        assert!(hamiltonian_by_dp(g));
        let verdict = find_hamilton_cycle(g).unwrap();
        assert!(verify_cycle(g, verdict.cycle.as_deref().unwrap()));
        let back = parse_graph6(&to_graph6(g)).unwrap();
        assert!(seen.insert(canonical_form(&back).canonical_string));
    })
    .unwrap();
    assert_eq!(count, 257);
}

#[test]
fn herschel_grows_from_a_smaller_polyhedron() {
    // contract any edge that keeps 3-connectivity, then expand back
    let h = herschel();
    let key = canonical_form(&h).canonical_string;
    let (u, v) = h
        .edges()
        .find(|&(u, v)| {
            h.contract_edge(u, v)
                .is_ok_and(|c| three_connected_by_deletion(&c))
        })
        .unwrap();
    let smaller = h.contract_edge(u, v).unwrap();
    assert_eq!(smaller.order(), 10);
    assert!(expansions(&smaller)
        .iter()
        .any(|g| canonical_form(g).canonical_string == key));
}

#[test]
fn split_keeps_edge_count_plus_one() {
    let h = herschel();
    let v = (0..11).find(|&v| h.degree(v) == 4).unwrap();
    let nbrs = h.neighbors(v);
    let low = nbrs & nbrs.wrapping_neg();
    let part = low | (nbrs & !low) & (nbrs & !low).wrapping_neg();
    let g = split_vertex(&h, v, part).unwrap();
    assert_eq!((g.order(), g.size()), (12, 19));
    assert!(g.has_edge(v, 11));
}

#[test]
fn family_members_carry_checkable_evidence() {
    let herschel = herschel();
    let k26 = pattern(PatternId::K26);
    for (kind, n) in [
        (FamilyKind::Bullet, 12),
        (FamilyKind::Circ, 14),
        (FamilyKind::H13, 13),
    ] {
        let spec = FamilySpec::skeleton(kind, n).unwrap();
        let g = family_member(spec).unwrap();
        assert!(three_connected_by_deletion(&g), "{spec}");
        assert!(!hamiltonian_by_dp(&g), "{spec}");
        let verdict = find_hamilton_cycle(&g).unwrap();
        assert!(
            verify_witness(&g, verdict.witness.as_ref().unwrap()),
            "{spec}"
        );
        let model = find_minor_model(&g, &herschel).unwrap();
        assert!(verify_minor_model(&g, &herschel, &model));
        assert!(find_minor_model(&g, &k26).is_none(), "{spec}");
    }
}
