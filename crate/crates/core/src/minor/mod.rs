//! Fixed-pattern minor containment with checkable models.
//!
//! A model assigns each pattern vertex a connected, pairwise disjoint host
//! vertex set, and each pattern edge a host edge joining the two sets. Paths
//! between branch sets are never needed: their interiors can always be
//! absorbed into one of the sets.

mod brute;
mod contract;
mod hubs;
mod search;
mod spanning;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::bits::{bit, Bits};
use crate::error::{arg_err, format_err, Error, Result};
use crate::graph::Graph;

pub use brute::brute_force_has_minor;
pub use contract::find_by_contraction;
pub use hubs::{find_two_hub_model, two_hub_shape, TwoHubShape};
pub use search::{find_model_generic, SearchOptions};
pub use spanning::find_spanning_subgraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeWitness {
    /// Pattern edge, smaller endpoint first.
    pub pattern: (usize, usize),
    /// Host edge with `host.0` in the branch set of `pattern.0`.
    pub host: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    /// Branch set of each pattern vertex, as a host vertex mask.
    pub branch_sets: Vec<u64>,
    /// One witness per pattern edge, in pattern edge order.
    pub edge_witnesses: Vec<EdgeWitness>,
}

impl MinorModel {
    /// Completes branch sets with the least host edge for every pattern edge.
    pub fn from_branch_sets(
        host: &Graph,
        pattern: &Graph,
        branch_sets: Vec<u64>,
    ) -> Option<MinorModel> {
        let mut edge_witnesses = Vec::with_capacity(pattern.size());
        for (p, q) in pattern.edges() {
            let (bp, bq) = (branch_sets[p], branch_sets[q]);
            let u = Bits(bp).find(|&u| host.neighbors(u) & bq != 0)?;
            let v = (host.neighbors(u) & bq).trailing_zeros() as usize;
            edge_witnesses.push(EdgeWitness {
                pattern: (p, q),
                host: (u, v),
            });
        }
        Some(MinorModel {
            branch_sets,
            edge_witnesses,
        })
    }

    /// Identity model of a graph in itself.
    pub fn identity(g: &Graph) -> MinorModel {
        let sets = (0..g.order()).map(bit).collect();
        MinorModel::from_branch_sets(g, g, sets).expect("identity model")
    }

    /// Text form: one `branch p: v v ...` line per pattern vertex, then one
    /// `edge p-q: u-v` line per pattern edge.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (p, &set) in self.branch_sets.iter().enumerate() {
            let _ = write!(out, "branch {p}:");
            for v in Bits(set) {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        for w in &self.edge_witnesses {
            let _ = writeln!(
                out,
                "edge {}-{}: {}-{}",
                w.pattern.0, w.pattern.1, w.host.0, w.host.1
            );
        }
        out
    }

    /// Parses the text form; `;` may stand in for newlines. Error offsets are
    /// byte positions in `text`.
    pub fn parse_text(text: &str) -> Result<MinorModel> {
        let mut branch: Vec<(usize, u64)> = Vec::new();
        let mut edges = Vec::new();
        let mut offset = 0;
        for raw in text.split_inclusive(['\n', ';']) {
            let start = offset;
            offset += raw.len();
            let line = raw.trim_end_matches(['\n', ';', '\r']).trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((head, body)) = line.split_once(':') else {
                return format_err(start, "expected `branch p:` or `edge p-q:`");
            };
            let num = |s: &str| -> Result<usize> {
                s.trim()
                    .parse::<usize>()
                    .or_else(|_| format_err(start, "bad vertex number"))
            };
            if let Some(p) = head.strip_prefix("branch ") {
                let p = num(p)?;
                let mut set = 0u64;
                for tok in body.split_whitespace() {
                    let v = num(tok)?;
                    if v >= 64 {
                        return format_err(start, "vertex out of range");
                    }
                    set |= bit(v);
                }
                branch.push((p, set));
            } else if let Some(pq) = head.strip_prefix("edge ") {
                let bad = |reason: &str| Error::Format {
                    offset: start,
                    reason: reason.into(),
                };
                let (p, q) = pq.split_once('-').ok_or_else(|| bad("expected p-q"))?;
                let (u, v) = body
                    .trim()
                    .split_once('-')
                    .ok_or_else(|| bad("expected u-v"))?;
                edges.push(EdgeWitness {
                    pattern: (num(p)?, num(q)?),
                    host: (num(u)?, num(v)?),
                });
            } else {
                return format_err(start, "unknown record");
            }
        }
        branch.sort_unstable_by_key(|&(p, _)| p);
        if branch.iter().enumerate().any(|(i, &(p, _))| i != p) {
            return format_err(0, "branch sets must be numbered 0..k without gaps");
        }
        Ok(MinorModel {
            branch_sets: branch.into_iter().map(|(_, s)| s).collect(),
            edge_witnesses: edges,
        })
    }
}

pub fn verify_minor_model(host: &Graph, pattern: &Graph, m: &MinorModel) -> bool {
    if m.branch_sets.len() != pattern.order() {
        return false;
    }
    let mut used = 0u64;
    for &set in &m.branch_sets {
        if set == 0
            || set & !host.vertex_mask() != 0
            || set & used != 0
            || !host.is_connected_within(set)
        {
            return false;
        }
        used |= set;
    }
    let mut covered: Vec<(usize, usize)> = Vec::with_capacity(m.edge_witnesses.len());
    for w in &m.edge_witnesses {
        let (p, q) = w.pattern;
        let (u, v) = w.host;
        if p >= pattern.order()
            || q >= pattern.order()
            || !pattern.has_edge(p, q)
            || !host.has_edge(u, v)
        {
            return false;
        }
        if m.branch_sets[p] & bit(u) == 0 || m.branch_sets[q] & bit(v) == 0 {
            return false;
        }
        covered.push((p.min(q), p.max(q)));
    }
    covered.sort_unstable();
    covered.dedup();
    covered.len() == pattern.size() && covered.len() == m.edge_witnesses.len()
}

/// Finds a model of `pattern` in `host`, or `None` when `pattern` is not a
/// minor of `host`.
/// Patterns from this order up try contraction sequences before the exact
/// engine.
const CONTRACTION_MIN_PATTERN: usize = 7;
const CONTRACTION_BUDGET: usize = 4000;

pub fn find_minor_model(host: &Graph, pattern: &Graph) -> Option<MinorModel> {
    let (n, k) = (host.order(), pattern.order());
    if k == 0 {
        return Some(MinorModel {
            branch_sets: Vec::new(),
            edge_witnesses: Vec::new(),
        });
    }
    if k > n || pattern.size() > host.size() {
        return None;
    }
    if k == n {
        let map = find_spanning_subgraph(host, pattern).expect("orders match")?;
        let sets = map.iter().map(|&v| bit(v)).collect();
        return MinorModel::from_branch_sets(host, pattern, sets);
    }
    if let Some(shape) = two_hub_shape(pattern) {
        return find_two_hub_model(host, pattern, shape);
    }
    if k >= CONTRACTION_MIN_PATTERN {
        if let Some(m) = find_by_contraction(host, pattern, CONTRACTION_BUDGET) {
            return Some(m);
        }
    }
    find_model_generic(host, pattern, &SearchOptions::default())
}

pub fn has_minor(host: &Graph, pattern: &Graph) -> bool {
    find_minor_model(host, pattern).is_some()
}

/// A K₂,₂ model whose first side has `x` and `y` in its two branch sets.
/// Pattern vertices 0 and 1 form the rooted side.
pub fn find_rooted_k22(host: &Graph, x: usize, y: usize) -> Result<Option<MinorModel>> {
    if x == y {
        return arg_err("roots must differ");
    }
    if x >= host.order() || y >= host.order() {
        return arg_err(format!("root out of range for order {}", host.order()));
    }
    let pattern = crate::catalog::complete_bipartite(2, 2);
    let opts = SearchOptions {
        roots: vec![Some(x), Some(y), None, None],
        symmetry: false,
    };
    Ok(find_model_generic(host, &pattern, &opts))
}

#[cfg(test)]
mod tests;
