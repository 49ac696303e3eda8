//! Positive-only shortcut for connected patterns: a connected host has a
//! connected pattern as a minor iff some sequence of edge contractions
//! down to the pattern's order leaves it as a spanning subgraph. The search
//! over contraction sequences is depth-first with a node budget, so a miss
//! proves nothing and callers fall back to an exact engine.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::bits::count;
use crate::canon::canonical_form;
use crate::graph::Graph;

use super::{find_spanning_subgraph, MinorModel};

pub fn find_by_contraction(host: &Graph, pattern: &Graph, budget: usize) -> Option<MinorModel> {
    let k = pattern.order();
    if host.order() <= k || k == 0 || !pattern.is_connected() || !host.is_connected() {
        return None;
    }
    let sets: Vec<u64> = (0..host.order()).map(crate::bits::bit).collect();
    let mut s = Contractor {
        pattern,
        budget,
        dead: HashSet::new(),
    };
    let sets = s.descend(host.clone(), sets)?;
    MinorModel::from_branch_sets(host, pattern, sets)
}

struct Contractor<'a> {
    pattern: &'a Graph,
    budget: usize,
    /// Canonical strings of graphs fully explored without success.
    dead: HashSet<String>,
}

impl Contractor<'_> {
    fn descend(&mut self, g: Graph, sets: Vec<u64>) -> Option<Vec<u64>> {
        if self.budget == 0 || g.size() < self.pattern.size() {
            return None;
        }
        self.budget -= 1;
        if g.order() == self.pattern.order() {
            let map = find_spanning_subgraph(&g, self.pattern).ok()??;
            return Some(map.iter().map(|&v| sets[v]).collect());
        }
        let key = canonical_form(&g).canonical_string;
        if self.dead.contains(&key) {
            return None;
        }
        // low degree sum first, then edges on more triangles
        let mut edges: Vec<(usize, usize)> = g.edges().collect();
        edges.sort_by_key(|&(u, v)| {
            (
                g.degree(u) + g.degree(v),
                core::cmp::Reverse(count(g.neighbors(u) & g.neighbors(v))),
                u,
                v,
            )
        });
        for (u, v) in edges {
            let h = g.contract_edge(u, v).expect("edge exists");
            let mut next = sets.clone();
            next[u] |= next[v];
            next.remove(v);
            if let Some(found) = self.descend(h, next) {
                return Some(found);
            }
            if self.budget == 0 {
                return None;
            }
        }
        self.dead.insert(key);
        None
    }
}
