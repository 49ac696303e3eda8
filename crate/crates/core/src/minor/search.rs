//! Branch-and-bound search over branch sets.
//!
//! Pattern vertices are handled in a fixed order. Each one is seeded with a
//! host vertex (the minimum of its eventual branch set, unless rooted), and
//! then every pattern edge back to an earlier vertex is realised by growing
//! one of the two branch sets one neighbour at a time. After a growth branch
//! fails, that host vertex is barred from the grown set for the remaining
//! siblings, which keeps the branches disjoint without losing completeness.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, count, low_mask, Bits};
use crate::canon::{canonical_form, close_group};
use crate::graph::Graph;

use super::MinorModel;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Optional host vertex that must lie in each pattern vertex's branch set.
    pub roots: Vec<Option<usize>>,
    /// Skip seed vectors that are not lexicographically least under pattern
    /// automorphisms. Ignored when any root is given.
    pub symmetry: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            roots: Vec::new(),
            symmetry: true,
        }
    }
}

/// Most automorphisms used for symmetry breaking.
const MAX_SYMMETRIES: usize = 256;

pub fn find_model_generic(
    host: &Graph,
    pattern: &Graph,
    opts: &SearchOptions,
) -> Option<MinorModel> {
    let k = pattern.order();
    if k == 0 {
        return Some(MinorModel {
            branch_sets: Vec::new(),
            edge_witnesses: Vec::new(),
        });
    }
    if k > host.order() || pattern.size() > host.size() {
        return None;
    }
    let mut roots = opts.roots.clone();
    roots.resize(k, None);
    let rooted = roots.iter().any(Option::is_some);
    let order = processing_order(pattern, &roots);
    let mut pos = vec![0; k];
    for (i, &p) in order.iter().enumerate() {
        pos[p] = i;
    }
    let back = order
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            Bits(pattern.neighbors(p))
                .filter(|&q| pos[q] < i)
                .fold(0u64, |m, q| m | bit(q))
        })
        .collect();
    let syms = if opts.symmetry && !rooted {
        symmetries(pattern)
    } else {
        Vec::new()
    };
    let mut allowed = vec![host.vertex_mask(); k];
    for (p, r) in roots.iter().enumerate() {
        if let Some(r) = *r {
            if r >= host.order() {
                return None;
            }
            for (q, a) in allowed.iter_mut().enumerate() {
                if q != p {
                    *a &= !bit(r);
                }
            }
        }
    }
    let mut e = Engine {
        host,
        pattern,
        k,
        all: host.vertex_mask(),
        order,
        back,
        roots,
        syms,
        bs: vec![0; k],
        seed: vec![usize::MAX; k],
        allowed,
        used: 0,
        seeded: 0,
    };
    if e.place(0) {
        MinorModel::from_branch_sets(host, pattern, e.bs)
    } else {
        None
    }
}

/// Rooted vertices first, then repeatedly the vertex with the most already
/// ordered neighbours (ties: higher degree, then lower index).
fn processing_order(pattern: &Graph, roots: &[Option<usize>]) -> Vec<usize> {
    let k = pattern.order();
    let mut order: Vec<usize> = (0..k).filter(|&p| roots[p].is_some()).collect();
    let mut done = order.iter().fold(0u64, |m, &p| m | bit(p));
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| done & bit(p) == 0)
            .max_by_key(|&p| {
                (
                    count(pattern.neighbors(p) & done),
                    pattern.degree(p),
                    core::cmp::Reverse(p),
                )
            })
            .expect("vertex left");
        done |= bit(next);
        order.push(next);
    }
    order
}

fn symmetries(pattern: &Graph) -> Vec<Vec<usize>> {
    let cf = canonical_form(pattern);
    if cf.generators.is_empty() {
        return Vec::new();
    }
    let mut group = if cf.automorphism_count <= 4 * MAX_SYMMETRIES as u128 {
        close_group(pattern.order(), &cf.generators)
    } else {
        let mut g = vec![(0..pattern.order()).collect::<Vec<_>>()];
        g.extend(cf.generators.iter().cloned());
        g
    };
    group.retain(|s| s.iter().enumerate().any(|(i, &x)| i != x));
    group.truncate(MAX_SYMMETRIES);
    group
}

struct Engine<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    k: usize,
    all: u64,
    order: Vec<usize>,
    /// For the vertex at each position, its pattern neighbours placed earlier.
    back: Vec<u64>,
    roots: Vec<Option<usize>>,
    syms: Vec<Vec<usize>>,
    bs: Vec<u64>,
    seed: Vec<usize>,
    allowed: Vec<u64>,
    used: u64,
    /// Pattern vertices that have a seed.
    seeded: u64,
}

impl Engine<'_> {
    fn place(&mut self, j: usize) -> bool {
        if j == self.k {
            return true;
        }
        let p = self.order[j];
        let saved = self.allowed[p];
        for v in self.seed_candidates(p) {
            if self.roots[p].is_none() {
                self.allowed[p] = saved & !low_mask(v);
            }
            self.bs[p] = bit(v);
            self.seed[p] = v;
            self.used |= bit(v);
            self.seeded |= bit(p);
            if self.lex_ok() && self.feasible() && self.satisfy(j) {
                return true;
            }
            self.used &= !bit(v);
            self.seeded &= !bit(p);
            self.bs[p] = 0;
            self.seed[p] = usize::MAX;
        }
        self.allowed[p] = saved;
        false
    }

    fn satisfy(&mut self, j: usize) -> bool {
        let p = self.order[j];
        let reach_p = self.host.neighborhood_of(self.bs[p]);
        for q in Bits(self.back[j]) {
            if reach_p & self.bs[q] == 0 {
                return self.grow(j, p, q);
            }
        }
        self.place(j + 1)
    }

    fn grow(&mut self, j: usize, p: usize, q: usize) -> bool {
        let saved = (self.allowed[p], self.allowed[q]);
        for side in [p, q] {
            let cands = self.host.neighborhood_of(self.bs[side]) & !self.used & self.allowed[side];
            for x in Bits(cands) {
                self.bs[side] |= bit(x);
                self.used |= bit(x);
                if self.feasible() && self.satisfy(j) {
                    return true;
                }
                self.bs[side] &= !bit(x);
                self.used &= !bit(x);
                self.allowed[side] &= !bit(x);
            }
        }
        self.allowed[p] = saved.0;
        self.allowed[q] = saved.1;
        false
    }

    fn seed_candidates(&self, p: usize) -> Vec<usize> {
        let free = self.all & !self.used;
        let avail = free & self.allowed[p];
        if let Some(r) = self.roots[p] {
            return if avail & bit(r) != 0 {
                vec![r]
            } else {
                Vec::new()
            };
        }
        let anchors =
            Bits(self.pattern.neighbors(p) & self.seeded).fold(0u64, |m, q| m | self.bs[q]);
        if anchors == 0 {
            return Bits(avail).collect();
        }
        // breadth-first from the neighbours' branch sets through free vertices
        let mut out = Vec::with_capacity(count(avail));
        let mut seen = anchors;
        let mut layer = anchors;
        loop {
            let next = self.host.neighborhood_of(layer) & free & !seen;
            if next == 0 {
                break;
            }
            out.extend(Bits(next & avail));
            seen |= next;
            layer = next;
        }
        out.extend(Bits(avail & !seen));
        out
    }

    /// Seed vector, read in processing order, must not exceed its image under
    /// any stored automorphism.
    fn lex_ok(&self) -> bool {
        'sym: for s in &self.syms {
            for &a in &self.order {
                let b = s[a];
                let (sa, sb) = (self.seed[a], self.seed[b]);
                if sa == usize::MAX || sb == usize::MAX {
                    continue 'sym;
                }
                if sa < sb {
                    continue 'sym;
                }
                if sa > sb {
                    return false;
                }
            }
        }
        true
    }

    fn feasible(&self) -> bool {
        let free = self.all & !self.used;
        let unseeded = self.k - count(self.seeded);
        if count(free) < unseeded {
            return false;
        }
        let mut region = [0u64; 64];
        for p in Bits(self.seeded) {
            region[p] = self
                .host
                .reach(self.bs[p], self.bs[p] | (free & self.allowed[p]));
        }
        for p in 0..self.k {
            let nbrs = self.pattern.neighbors(p);
            if self.seeded & bit(p) != 0 {
                let near = self.host.neighborhood_of(self.bs[p]);
                for q in Bits(nbrs & self.seeded & !low_mask(p + 1)) {
                    if near & self.bs[q] != 0 {
                        continue;
                    }
                    let (rp, rq) = (region[p], region[q]);
                    if rp & rq == 0 && self.host.neighborhood_of(rp) & rq == 0 {
                        return false;
                    }
                }
            } else {
                let avail = free & self.allowed[p];
                if avail == 0 {
                    return false;
                }
                for q in Bits(nbrs & self.seeded) {
                    if self.host.neighborhood_of(region[q]) & avail == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }
}
