use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, count, Bits};
use crate::error::{arg_err, Result};
use crate::graph::Graph;

/// A bijection `map` (pattern vertex to host vertex) sending every pattern
/// edge to a host edge, if one exists.
pub fn find_spanning_subgraph(host: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    let n = host.order();
    if pattern.order() != n {
        return arg_err("spanning subgraph needs equal orders");
    }
    if pattern.size() > host.size() {
        return Ok(None);
    }
    let mut hd = host.degrees();
    let mut pd = pattern.degrees();
    hd.sort_unstable_by(|a, b| b.cmp(a));
    pd.sort_unstable_by(|a, b| b.cmp(a));
    if hd.iter().zip(&pd).any(|(h, p)| h < p) {
        return Ok(None);
    }
    // pattern vertices by connectivity to those already ordered, then degree
    let mut order = Vec::with_capacity(n);
    let mut done = 0u64;
    while order.len() < n {
        let next = (0..n)
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
    let fits: Vec<u64> = (0..n)
        .map(|p| {
            (0..n)
                .filter(|&v| host.degree(v) >= pattern.degree(p))
                .fold(0u64, |m, v| m | bit(v))
        })
        .collect();
    let mut s = Embed {
        host,
        pattern,
        order,
        fits,
        map: vec![usize::MAX; n],
        used: 0,
    };
    Ok(s.extend(0).then_some(s.map))
}

struct Embed<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    fits: Vec<u64>,
    map: Vec<usize>,
    used: u64,
}

impl Embed<'_> {
    fn candidates(&self, p: usize) -> u64 {
        let mut c = self.fits[p] & !self.used;
        for q in Bits(self.pattern.neighbors(p)) {
            if self.map[q] != usize::MAX {
                c &= self.host.neighbors(self.map[q]);
            }
        }
        c
    }

    fn extend(&mut self, j: usize) -> bool {
        if j == self.order.len() {
            return true;
        }
        let p = self.order[j];
        for v in Bits(self.candidates(p)) {
            self.map[p] = v;
            self.used |= bit(v);
            let viable = Bits(self.pattern.neighbors(p))
                .filter(|&q| self.map[q] == usize::MAX)
                .all(|q| self.candidates(q) != 0);
            if viable && self.extend(j + 1) {
                return true;
            }
            self.used &= !bit(v);
            self.map[p] = usize::MAX;
        }
        false
    }
}
