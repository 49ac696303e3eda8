//! Shared helpers and brute-force oracles for unit tests.

use alloc::vec;
use alloc::vec::Vec;

pub use crate::catalog::{complete, complete_bipartite, cube, cycle, path, wheel};
use crate::graph::Graph;
use proptest::prelude::*;

/// Random graph with order in `lo..=hi` and a random edge density.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| random_graph(n, p, seed))
}

pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut state = seed | 1;
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if ((state >> 11) as f64 / (1u64 << 53) as f64) < p {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, p, out);
        let j = if k % 2 == 0 { i } else { 0 };
        p.swap(j, k - 1);
    }
}

pub fn brute_isomorphic(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && {
            let mut da = a.degrees();
            let mut db = b.degrees();
            da.sort_unstable();
            db.sort_unstable();
            da == db
        }
        && perms.iter().any(|p| a.permuted(p) == *b)
}

/// One representative per isomorphism class on `n` vertices, found by
/// pairwise permutation search only.
pub fn brute_iso_classes(n: usize) -> Vec<Graph> {
    let perms = permutations(n);
    let mut reps: Vec<Graph> = Vec::new();
    for g in all_labeled(n) {
        if !reps.iter().any(|r| brute_isomorphic(r, &g, &perms)) {
            reps.push(g);
        }
    }
    reps
}

pub fn brute_aut_count(g: &Graph) -> usize {
    permutations(g.order())
        .iter()
        .filter(|p| g.permuted(p) == *g)
        .count()
}

/// Hamiltonicity by trying every cyclic order that starts at vertex 0.
pub fn brute_hamiltonian(g: &Graph) -> bool {
    let n = g.order();
    if n < 3 {
        return false;
    }
    let rest: Vec<usize> = (1..n).collect();
    let mut used = vec![false; n];
    let mut order = vec![0];
    fn go(g: &Graph, rest: &[usize], used: &mut [bool], order: &mut Vec<usize>) -> bool {
        if order.len() == g.order() {
            return order.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && g.has_edge(*order.last().unwrap(), order[0]);
        }
        for &v in rest {
            if !used[v] {
                used[v] = true;
                order.push(v);
                let ok = go(g, rest, used, order);
                order.pop();
                used[v] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    go(g, &rest, &mut used, &mut order)
}
