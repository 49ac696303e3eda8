//! K₂,ₜ and K₁,₁,ₜ minors.
//!
//! In any model of such a pattern, each of the `t` degree-two branch sets can
//! be shrunk to a single vertex: pick one vertex adjacent to the first hub's
//! set and hand the rest of the set, which stays connected to the second
//! hub's set, over to that hub. So the host has the minor iff it has `t`
//! vertices `S` and two disjoint connected sets `A`, `B` in `host − S`, both
//! adjacent to every vertex of `S` (and to each other for K₁,₁,ₜ).

use alloc::vec::Vec;

use crate::bits::{bit, count, low_mask, Bits};
use crate::graph::Graph;
use crate::hamilton::subsets_of_size;

use super::MinorModel;

/// A pattern whose vertices other than `hubs` all have neighbourhood
/// exactly `hubs`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoHubShape {
    pub hubs: (usize, usize),
    pub leaves: usize,
    pub joined: bool,
}

pub fn two_hub_shape(pattern: &Graph) -> Option<TwoHubShape> {
    let k = pattern.order();
    if k < 3 {
        return None;
    }
    for a in 0..k {
        for b in a + 1..k {
            let pair = bit(a) | bit(b);
            let joined = pattern.has_edge(a, b);
            let leaves_ok = (0..k)
                .filter(|&v| v != a && v != b)
                .all(|v| pattern.neighbors(v) == pair);
            let hubs_ok = pattern.degree(a) == k - 2 + joined as usize
                && pattern.degree(b) == k - 2 + joined as usize;
            if leaves_ok && hubs_ok {
                return Some(TwoHubShape {
                    hubs: (a, b),
                    leaves: k - 2,
                    joined,
                });
            }
        }
    }
    None
}

pub fn find_two_hub_model(host: &Graph, pattern: &Graph, shape: TwoHubShape) -> Option<MinorModel> {
    let (a, b, leaves) = find_sets(host, shape.leaves, shape.joined)?;
    let mut sets = alloc::vec![0u64; pattern.order()];
    sets[shape.hubs.0] = a;
    sets[shape.hubs.1] = b;
    let pattern_leaves = (0..pattern.order()).filter(|&v| v != shape.hubs.0 && v != shape.hubs.1);
    for (p, v) in pattern_leaves.zip(Bits(leaves)) {
        sets[p] = bit(v);
    }
    MinorModel::from_branch_sets(host, pattern, sets)
}

/// Returns `(A, B, S)` as masks.
fn find_sets(host: &Graph, t: usize, joined: bool) -> Option<(u64, u64, u64)> {
    let n = host.order();
    if n < t + 2 {
        return None;
    }
    let all = host.vertex_mask();
    let eligible = (0..n)
        .filter(|&v| host.degree(v) >= 2)
        .fold(0u64, |m, v| m | bit(v));
    if count(eligible) < t {
        return None;
    }
    for s in subsets_of_size(n, t) {
        if s & !eligible != 0 {
            continue;
        }
        let rest = all & !s;
        if Bits(s).any(|v| count(host.neighbors(v) & rest) < 2) {
            continue;
        }
        let dominating: Vec<u64> = host
            .components_within(rest)
            .into_iter()
            .filter(|&c| dominates(host, c, s))
            .collect();
        if !joined && dominating.len() >= 2 {
            return Some((dominating[0], dominating[1], s));
        }
        for &c in &dominating {
            if let Some((x, y)) = split(host, c, s) {
                return Some((x, y, s));
            }
        }
    }
    None
}

fn dominates(host: &Graph, set: u64, s: u64) -> bool {
    let near = host.neighborhood_of(set);
    s & !near == 0
}

/// Two disjoint connected subsets of the connected set `c`, each adjacent to
/// every vertex of `s`.
fn split(host: &Graph, c: u64, s: u64) -> Option<(u64, u64)> {
    let s0 = Bits(s).min_by_key(|&v| count(host.neighbors(v) & c))?;
    let cand = host.neighbors(s0) & c;
    if count(cand) < 2 {
        return None;
    }
    // both sets touch s0; name the one holding the least such vertex A
    for a in Bits(cand) {
        let forbid = cand & low_mask(a);
        if let Some(found) = grow(host, c, s, bit(a), forbid) {
            return Some(found);
        }
    }
    None
}

fn grow(host: &Graph, c: u64, s: u64, a: u64, forbid: u64) -> Option<(u64, u64)> {
    let others: Vec<u64> = host
        .components_within(c & !a)
        .into_iter()
        .filter(|&k| dominates(host, k, s))
        .collect();
    if others.is_empty() {
        return None;
    }
    if dominates(host, a, s) {
        return Some((a, others[0]));
    }
    let region = host.reach(a, c & !forbid);
    if !dominates(host, region, s) {
        return None;
    }
    let mut forbid = forbid;
    for x in Bits(host.neighborhood_of(a) & c & !a & !forbid) {
        if let Some(found) = grow(host, c, s, a | bit(x), forbid) {
            return Some(found);
        }
        forbid |= bit(x);
    }
    None
}
