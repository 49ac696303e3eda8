//! Exact Hamilton-cycle search with checkable witnesses.

use alloc::vec::Vec;

use crate::bits::{bit, count, low_mask, Bits};
use crate::error::{arg_err, Result};
use crate::graph::{Bipartition, Graph};
use crate::structure::CutWitness;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HamStatus {
    Hamiltonian,
    NonHamiltonian,
}

/// Evidence for a negative verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamWitness {
    /// Bipartite with sides of different sizes.
    BipartiteOdd(Bipartition),
    /// Removing the cut leaves more components than cut vertices.
    Separator(CutWitness),
    /// The backtracking search ran to completion.
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonVerdict {
    pub status: HamStatus,
    pub cycle: Option<Vec<usize>>,
    pub witness: Option<HamWitness>,
}

impl HamiltonVerdict {
    pub fn is_hamiltonian(&self) -> bool {
        self.status == HamStatus::Hamiltonian
    }
}

#[derive(Clone, Copy, Debug)]
pub struct HamOptions {
    /// Try bipartite-parity and separator witnesses.
    pub witnesses: bool,
    /// Largest separator tried when looking for a witness.
    pub max_cut: usize,
}

impl Default for HamOptions {
    fn default() -> Self {
        HamOptions {
            witnesses: true,
            max_cut: 6,
        }
    }
}

pub fn find_hamilton_cycle(g: &Graph) -> Result<HamiltonVerdict> {
    find_hamilton_cycle_with(g, HamOptions::default())
}

pub fn find_hamilton_cycle_with(g: &Graph, opts: HamOptions) -> Result<HamiltonVerdict> {
    let n = g.order();
    if n < 3 {
        return arg_err("hamiltonicity needs at least three vertices");
    }
    let negative = |w| {
        Ok(HamiltonVerdict {
            status: HamStatus::NonHamiltonian,
            cycle: None,
            witness: Some(w),
        })
    };
    if opts.witnesses {
        if let Some(bp) = g.is_bipartite() {
            let (a, b) = bp.sizes();
            if a != b {
                return negative(HamWitness::BipartiteOdd(bp));
            }
        }
        if let Some(w) = seeded_separator(g, opts.max_cut.min(6)) {
            return negative(HamWitness::Separator(w));
        }
    }
    if let Some(cycle) = search(g) {
        return Ok(HamiltonVerdict {
            status: HamStatus::Hamiltonian,
            cycle: Some(cycle),
            witness: None,
        });
    }
    if opts.witnesses {
        if let Some(w) = separator_witness(g, opts.max_cut.min((n - 1) / 2)) {
            return negative(HamWitness::Separator(w));
        }
    }
    negative(HamWitness::Exhausted)
}

pub fn verify_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let n = g.order();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = 0u64;
    for &v in cycle {
        if v >= n || seen & bit(v) != 0 {
            return false;
        }
        seen |= bit(v);
    }
    (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

/// Re-checks a negative witness against `g`.
pub fn verify_witness(g: &Graph, w: &HamWitness) -> bool {
    match w {
        HamWitness::BipartiteOdd(bp) => {
            let (a, b) = bp.sizes();
            a != b && bp.is_valid_for(g)
        }
        HamWitness::Separator(cw) => {
            cw.is_valid_for(g) && cw.components.len() > count(cw.cut) && cw.components.len() >= 2
        }
        HamWitness::Exhausted => true,
    }
}

/// Upper bound on subsets examined by the exhaustive phase.
const SUBSET_BUDGET: u64 = 4_000_000;

/// A vertex set `S` with `|S| <= max_cut` whose removal leaves more than
/// `|S|` components. Seeded candidates are tried first, then all subsets
/// by increasing size while the subset count stays within budget.
pub fn separator_witness(g: &Graph, max_cut: usize) -> Option<CutWitness> {
    let max_cut = max_cut.min(6).min(g.order());
    if let Some(w) = seeded_separator(g, max_cut) {
        return Some(w);
    }
    let n = g.order();
    let mut spent = 0u64;
    for k in 0..=max_cut {
        spent += binomial(n as u64, k as u64);
        if spent > SUBSET_BUDGET {
            break;
        }
        if let Some(s) = subsets_of_size(n, k).find(|&s| separates(g, s)) {
            return Some(CutWitness::of(g, s));
        }
    }
    None
}

fn separates(g: &Graph, s: u64) -> bool {
    let rest = g.vertex_mask() & !s;
    if rest == 0 {
        return false;
    }
    let need = (count(s) + 1).max(2);
    let mut comps = 0;
    let mut left = rest;
    while left != 0 {
        let c = g.reach(left & left.wrapping_neg(), rest);
        left &= !c;
        comps += 1;
        if comps >= need {
            return true;
        }
    }
    false
}

fn seeded_separator(g: &Graph, max_cut: usize) -> Option<CutWitness> {
    let n = g.order();
    let mut seeds: Vec<u64> = Vec::new();
    if !g.is_connected() {
        seeds.push(0);
    }
    if let Some(bp) = g.is_bipartite() {
        seeds.push(bp.side_a);
        seeds.push(bp.side_b);
    }
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let mut hubs = 0u64;
    for &v in by_degree.iter().take(max_cut) {
        hubs |= bit(v);
        seeds.push(hubs);
    }
    let mut independent = 0u64;
    for &v in by_degree.iter().rev() {
        if g.neighbors(v) & independent == 0 {
            independent |= bit(v);
        }
    }
    seeds.push(g.vertex_mask() & !independent);
    seeds.extend((0..n).map(|v| g.neighbors(v)));
    seeds
        .into_iter()
        .filter(|&s| count(s) <= max_cut)
        .find(|&s| separates(g, s))
        .map(|s| CutWitness::of(g, s))
}

/// Masks over `n` bits with exactly `k` bits set, in increasing order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let first = if k > n { None } else { Some(low_mask(k)) };
    let limit = low_mask(n);
    core::iter::successors(first, move |&s| {
        if s == 0 {
            return None;
        }
        let c = s & s.wrapping_neg();
        let r = s.checked_add(c)?;
        let next = (((r ^ s) >> 2) / c) | r;
        (next & !limit == 0).then_some(next)
    })
    .take_while(move |&s| s & !limit == 0)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Two-ended path search. Returns a Hamilton cycle if one exists.
fn search(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let start = (0..n).min_by_key(|&v| (g.degree(v), v)).expect("nonempty");
    let mut s = Search {
        g,
        all: g.vertex_mask(),
        left: Vec::new(),
        right: Vec::new(),
    };
    if s.extend(bit(start), start, start) {
        let mut cycle: Vec<usize> = s.left.iter().rev().copied().collect();
        cycle.push(start);
        cycle.extend_from_slice(&s.right);
        debug_assert!(verify_cycle(g, &cycle));
        Some(cycle)
    } else {
        None
    }
}

struct Search<'a> {
    g: &'a Graph,
    all: u64,
    /// Vertices added at the `a` end, in order.
    left: Vec<usize>,
    /// Vertices added at the `b` end, in order.
    right: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, visited: u64, a: usize, b: usize) -> bool {
        let g = self.g;
        let unvisited = self.all & !visited;
        if unvisited == 0 {
            return g.has_edge(a, b);
        }
        let open = unvisited | bit(a) | bit(b);
        let (mut forced_a, mut forced_b) = (0u64, 0u64);
        for u in Bits(unvisited) {
            let avail = g.neighbors(u) & open;
            let c = count(avail);
            if c < 2 {
                return false;
            }
            if c == 2 {
                if avail & bit(a) != 0 {
                    forced_a |= bit(u);
                }
                if avail & bit(b) != 0 {
                    forced_b |= bit(u);
                }
            }
        }
        let (na, nb) = (g.neighbors(a) & unvisited, g.neighbors(b) & unvisited);
        if na == 0 || nb == 0 {
            return false;
        }
        if a != b {
            let single = count(unvisited) == 1;
            if count(forced_a) > 1 || count(forced_b) > 1 || (!single && forced_a & forced_b != 0) {
                return false;
            }
        }
        if !g.is_connected_within(unvisited) {
            return false;
        }
        let (at_a, cands) = if a == b {
            (false, nb)
        } else if forced_a != 0 {
            (true, forced_a)
        } else if forced_b != 0 {
            (false, forced_b)
        } else if count(na) < count(nb) {
            (true, na)
        } else {
            (false, nb)
        };
        let mut order: Vec<usize> = Bits(cands).collect();
        order.sort_by_key(|&x| (count(g.neighbors(x) & unvisited), x));
        for x in order {
            let ok = if at_a {
                self.left.push(x);
                let ok = self.extend(visited | bit(x), x, b);
                if !ok {
                    self.left.pop();
                }
                ok
            } else {
                self.right.push(x);
                let ok = self.extend(visited | bit(x), a, x);
                if !ok {
                    self.right.pop();
                }
                ok
            };
            if ok {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{family_member, herschel};
    use crate::testutil::*;
    use alloc::vec;
    use proptest::prelude::*;

    #[test]
    fn herschel_is_bipartite_odd() {
        let v = find_hamilton_cycle(&herschel()).unwrap();
        assert_eq!(v.status, HamStatus::NonHamiltonian);
        match v.witness.unwrap() {
            HamWitness::BipartiteOdd(bp) => assert_eq!(bp.sizes(), (5, 6)),
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn bullet16_all_dashed_has_five_separator() {
        let g = family_member("bullet:16:31".parse().unwrap()).unwrap();
        let v = find_hamilton_cycle(&g).unwrap();
        assert_eq!(v.status, HamStatus::NonHamiltonian);
        let Some(HamWitness::Separator(w)) = v.witness else {
            panic!("expected separator")
        };
        assert_eq!(w.cut, 0b11111);
        assert_eq!(w.components.len(), 6);
        let w = separator_witness(&g, 5).unwrap();
        assert_eq!((w.cut, w.components.len()), (0b11111, 6));
    }

    #[test]
    fn cube_is_hamiltonian() {
        let v = find_hamilton_cycle(&cube()).unwrap();
        assert!(v.is_hamiltonian());
        assert!(verify_cycle(&cube(), v.cycle.as_ref().unwrap()));
        assert!(separator_witness(&cube(), 4).is_none());
    }

    #[test]
    fn herschel_separator_is_a_side() {
        let w = separator_witness(&herschel(), 5).unwrap();
        assert_eq!(w.cut, 0b11111);
        assert_eq!(w.components.len(), 6);
        assert!(w.components.iter().all(|&c| count(c) == 1));
    }

    #[test]
    fn cycle_verification() {
        let c5 = cycle(5);
        assert!(verify_cycle(&c5, &[0, 1, 2, 3, 4]));
        assert!(!verify_cycle(&c5, &[0, 2, 4, 1, 3]));
        assert!(!verify_cycle(&complete(4), &[0, 1, 2]));
        assert!(!verify_cycle(&complete(4), &[0, 1, 2, 2]));
        assert!(find_hamilton_cycle(&complete(2)).is_err());
    }

    #[test]
    fn petersen_is_exhausted() {
        let pet = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        );
        let v = find_hamilton_cycle(&pet).unwrap();
        assert_eq!(v.status, HamStatus::NonHamiltonian);
        assert_eq!(v.witness, Some(HamWitness::Exhausted));
    }

    #[test]
    fn subsets_enumerate_binomially() {
        assert_eq!(subsets_of_size(6, 3).count(), 20);
        assert_eq!(subsets_of_size(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(64, 63).count(), 64);
        assert!(subsets_of_size(10, 4).all(|s| count(s) == 4 && s < 1 << 10));
    }

    #[test]
    fn agrees_with_permutation_oracle_on_small_graphs() {
        for n in 3..=6 {
            for g in brute_iso_classes(n) {
                let v = find_hamilton_cycle(&g).unwrap();
                assert_eq!(v.is_hamiltonian(), brute_hamiltonian(&g), "{g:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn agrees_with_oracle(g in arb_graph(3, 8)) {
            let v = find_hamilton_cycle(&g).unwrap();
            prop_assert_eq!(v.is_hamiltonian(), brute_hamiltonian(&g));
            if let Some(c) = &v.cycle {
                prop_assert!(verify_cycle(&g, c));
            }
            if let Some(w) = &v.witness {
                prop_assert!(verify_witness(&g, w));
            }
            let plain = find_hamilton_cycle_with(&g, HamOptions { witnesses: false, max_cut: 0 }).unwrap();
            prop_assert_eq!(plain.status, v.status);
        }

        #[test]
        fn witnesses_are_sound(g in arb_graph(3, 18)) {
            let v = find_hamilton_cycle(&g).unwrap();
            if let Some(w) = &v.witness {
                prop_assert!(verify_witness(&g, w));
            }
            if let Some(c) = &v.cycle {
                prop_assert!(verify_cycle(&g, c));
            }
        }
    }
}
