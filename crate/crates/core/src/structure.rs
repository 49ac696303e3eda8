//! Vertex connectivity, polyhedrality and internal 4-connectivity.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, count, Bits};
use crate::error::{arg_err, Result};
use crate::graph::Graph;
use crate::planar::is_planar;

/// A vertex set together with the components left after removing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutWitness {
    pub cut: u64,
    pub components: Vec<u64>,
}

impl CutWitness {
    /// Removes `cut` from `g` and records the components.
    pub fn of(g: &Graph, cut: u64) -> CutWitness {
        CutWitness {
            cut,
            components: g.components_within(g.vertex_mask() & !cut),
        }
    }

    pub fn cut_vertices(&self) -> Vec<usize> {
        Bits(self.cut).collect()
    }

    /// True when removing `cut` from `g` yields exactly `components`, and
    /// there are at least two of them.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.cut & !g.vertex_mask() != 0 || self.components.len() < 2 {
            return false;
        }
        let mut expect = g.components_within(g.vertex_mask() & !self.cut);
        let mut got = self.components.clone();
        expect.sort_unstable();
        got.sort_unstable();
        expect == got
    }
}

/// Minimum vertex cut size with a witness. Complete graphs report
/// `order − 1` and no witness.
pub fn vertex_connectivity(g: &Graph) -> Result<(usize, Option<CutWitness>)> {
    let n = g.order();
    if n < 2 {
        return arg_err("vertex connectivity needs at least two vertices");
    }
    if g.is_complete() {
        return Ok((n - 1, None));
    }
    if !g.is_connected() {
        return Ok((0, Some(CutWitness::of(g, 0))));
    }
    let mut best = g.min_degree();
    let mut best_cut = None;
    let mut flow = Flow::new(g);
    let mut i = 0;
    while i < n && i <= best {
        for j in 0..n {
            if j == i || g.has_edge(i, j) {
                continue;
            }
            if let Some(cut) = flow.min_cut_below(i, j, best) {
                best = count(cut);
                best_cut = Some(cut);
            }
        }
        i += 1;
    }
    let cut = match best_cut {
        Some(c) => c,
        // min degree is attained: the neighbourhood of a minimum-degree vertex
        None => {
            let v = (0..n).min_by_key(|&v| g.degree(v)).expect("nonempty");
            g.neighbors(v)
        }
    };
    Ok((best, Some(CutWitness::of(g, cut))))
}

/// Unit vertex capacities on the split graph: `2v` is the in-node and
/// `2v + 1` the out-node of `v`.
struct Flow<'a> {
    g: &'a Graph,
    cap: Vec<i32>,
    width: usize,
}

impl<'a> Flow<'a> {
    fn new(g: &'a Graph) -> Self {
        let width = 2 * g.order();
        Flow {
            g,
            cap: vec![0; width * width],
            width,
        }
    }

    fn reset(&mut self) {
        let big = self.g.order() as i32;
        self.cap.iter_mut().for_each(|c| *c = 0);
        for v in 0..self.g.order() {
            self.cap[(2 * v) * self.width + 2 * v + 1] = 1;
            for u in Bits(self.g.neighbors(v)) {
                self.cap[(2 * v + 1) * self.width + 2 * u] = big;
            }
        }
    }

    /// A separating vertex set between non-adjacent `s` and `t` of size
    /// below `limit`, if one exists.
    fn min_cut_below(&mut self, s: usize, t: usize, limit: usize) -> Option<u64> {
        self.reset();
        let (src, sink) = (2 * s + 1, 2 * t);
        let w = self.width;
        let mut flow = 0;
        let mut parent = vec![usize::MAX; w];
        loop {
            parent.iter_mut().for_each(|p| *p = usize::MAX);
            parent[src] = src;
            let mut queue = vec![src];
            let mut head = 0;
            while head < queue.len() && parent[sink] == usize::MAX {
                let a = queue[head];
                head += 1;
                for b in 0..w {
                    if parent[b] == usize::MAX && self.cap[a * w + b] > 0 {
                        parent[b] = a;
                        queue.push(b);
                    }
                }
            }
            if parent[sink] == usize::MAX {
                break;
            }
            let mut b = sink;
            while b != src {
                let a = parent[b];
                self.cap[a * w + b] -= 1;
                self.cap[b * w + a] += 1;
                b = a;
            }
            flow += 1;
            if flow >= limit {
                return None;
            }
        }
        let mut cut = 0u64;
        for v in 0..self.g.order() {
            if parent[2 * v] != usize::MAX && parent[2 * v + 1] == usize::MAX {
                cut |= bit(v);
            }
        }
        debug_assert_eq!(count(cut), flow);
        Some(cut)
    }
}

/// True when removing any fewer than `k` vertices leaves a connected graph
/// and the order exceeds `k`. Intended for `k <= 3`.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if n <= k || g.min_degree() < k {
        return false;
    }
    let all = g.vertex_mask();
    if !g.is_connected() {
        return false;
    }
    if k >= 2 && (0..n).any(|v| !g.is_connected_within(all & !bit(v))) {
        return false;
    }
    if k >= 3 {
        for u in 0..n {
            for v in u + 1..n {
                if !g.is_connected_within(all & !bit(u) & !bit(v)) {
                    return false;
                }
            }
        }
    }
    if k >= 4 {
        return vertex_connectivity(g).map(|(c, _)| c >= k).unwrap_or(false);
    }
    true
}

pub fn is_3_connected(g: &Graph) -> bool {
    is_k_connected(g, 3)
}

pub fn is_polyhedral(g: &Graph) -> bool {
    g.order() >= 4 && is_3_connected(g) && is_planar(g)
}

pub fn is_internally_4_connected(g: &Graph) -> bool {
    let n = g.order();
    if n < 5 || !is_3_connected(g) {
        return false;
    }
    let all = g.vertex_mask();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let s = bit(a) | bit(b) | bit(c);
                let comps = g.components_within(all & !s);
                if comps.len() < 2 {
                    continue;
                }
                let independent = Bits(s).all(|v| g.neighbors(v) & s == 0);
                let shape = comps.len() == 2 && comps.iter().any(|&c| count(c) == 1);
                if !independent || !shape {
                    return false;
                }
            }
        }
    }
    true
}
