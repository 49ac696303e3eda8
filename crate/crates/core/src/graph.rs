//! Simple undirected graphs on at most 64 vertices.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::hash::{Hash, Hasher};

use crate::bits::{bit, count, low_mask, Bits};
use crate::catalog::VertexRole;
use crate::error::{arg_err, Result};

pub const MAX_ORDER: usize = 64;

/// A simple graph with dense vertex indices `0..order`.
///
/// Role labels are an optional side table and take no part in equality or
/// hashing.
#[derive(Clone, Default)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<Option<VertexRole>>,
}

/// Two-colouring of a bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: u64,
    pub side_b: u64,
}

impl Bipartition {
    pub fn sizes(&self) -> (usize, usize) {
        (count(self.side_a), count(self.side_b))
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.side_a & self.side_b == 0
            && self.side_a | self.side_b == g.vertex_mask()
            && g.edges()
                .all(|(u, v)| (self.side_a >> u & 1) != (self.side_a >> v & 1))
    }
}

impl Graph {
    /// Edgeless graph on `order` vertices. Panics above [`MAX_ORDER`].
    pub fn new(order: usize) -> Graph {
        assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
        Graph {
            adj: vec![0; order],
            labels: Vec::new(),
        }
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Graph {
        let mut g = Graph::new(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        if n > MAX_ORDER {
            return arg_err("order exceeds 64");
        }
        let all = low_mask(n);
        for (v, &r) in rows.iter().enumerate() {
            if r & !all != 0 || r & bit(v) != 0 {
                return arg_err("adjacency row out of range or has a loop");
            }
            for u in Bits(r) {
                if rows[u] & bit(v) == 0 {
                    return arg_err("adjacency is not symmetric");
                }
            }
        }
        Ok(Graph {
            adj: rows.to_vec(),
            labels: Vec::new(),
        })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| count(*r)).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_mask(self.order())
    }

    /// Neighbourhood of `v` as a bit mask.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        count(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(
            u != v && u < self.order() && v < self.order(),
            "bad edge {u}-{v}"
        );
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order() && v < self.order(), "bad edge {u}-{v}");
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &r)| Bits(r & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        n * n.saturating_sub(1) / 2 == self.size()
    }

    pub fn role(&self, v: usize) -> Option<VertexRole> {
        self.labels.get(v).copied().flatten()
    }

    pub fn set_role(&mut self, v: usize, role: VertexRole) {
        if self.labels.len() < self.order() {
            self.labels.resize(self.order(), None);
        }
        self.labels[v] = Some(role);
    }

    pub fn find_role(&self, role: VertexRole) -> Option<usize> {
        self.labels.iter().position(|r| *r == Some(role))
    }

    pub fn has_labels(&self) -> bool {
        self.labels.iter().any(Option::is_some)
    }

    pub fn clear_labels(&mut self) {
        self.labels.clear();
    }

    /// Relabels vertices so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut adj = vec![0u64; n];
        for v in 0..n {
            adj[perm[v]] = Bits(self.adj[v]).fold(0, |m, u| m | bit(perm[u]));
        }
        let mut labels = Vec::new();
        if !self.labels.is_empty() {
            labels = vec![None; n];
            for v in 0..n {
                labels[perm[v]] = self.role(v);
            }
        }
        Graph { adj, labels }
    }

    /// Subgraph induced by `keep`, vertices renumbered in increasing order.
    pub fn induced(&self, keep: u64) -> Graph {
        let keep = keep & self.vertex_mask();
        let kept: Vec<usize> = Bits(keep).collect();
        let mut index = [usize::MAX; MAX_ORDER];
        for (i, &v) in kept.iter().enumerate() {
            index[v] = i;
        }
        let adj = kept
            .iter()
            .map(|&v| Bits(self.adj[v] & keep).fold(0, |m, u| m | bit(index[u])))
            .collect();
        let labels = if self.labels.is_empty() {
            Vec::new()
        } else {
            kept.iter().map(|&v| self.role(v)).collect()
        };
        Graph { adj, labels }
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        assert!(v < self.order());
        self.induced(self.vertex_mask() & !bit(v))
    }

    /// Copy with edge `uv` removed.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return arg_err("edge not in graph");
        }
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    /// Contracts edge `uv`. The merged vertex takes index `min(u, v)`; the
    /// higher index is removed and later vertices shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return arg_err("edge not in graph");
        }
        let (keep, gone) = if u < v { (u, v) } else { (v, u) };
        let mut g = self.clone();
        let merged = (g.adj[keep] | g.adj[gone]) & !bit(keep) & !bit(gone);
        for w in Bits(g.adj[gone]) {
            g.adj[w] &= !bit(gone);
        }
        g.adj[gone] = 0;
        for w in Bits(merged) {
            g.adj[w] |= bit(keep);
        }
        g.adj[keep] = merged;
        Ok(g.delete_vertex(gone))
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut out = Vec::new();
        let mut rest = within;
        while rest != 0 {
            let c = self.reach(rest & rest.wrapping_neg(), within);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Vertices of `within` reachable from `start` inside `within`.
    #[inline]
    pub fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    #[inline]
    pub fn is_connected_within(&self, within: u64) -> bool {
        within == 0 || self.reach(within & within.wrapping_neg(), within) == within
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertex_mask())
    }

    /// Union of the neighbourhoods of the vertices in `set`.
    #[inline]
    pub fn neighborhood_of(&self, set: u64) -> u64 {
        Bits(set).fold(0, |m, v| m | self.adj[v])
    }

    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut side_a = 0u64;
        let mut seen = 0u64;
        for root in 0..n {
            if seen & bit(root) != 0 {
                continue;
            }
            let mut layer = bit(root);
            let mut colour_a = true;
            seen |= layer;
            while layer != 0 {
                if colour_a {
                    side_a |= layer;
                }
                let next = self.neighborhood_of(layer) & !seen;
                seen |= next;
                layer = next;
                colour_a = !colour_a;
            }
        }
        let side_b = self.vertex_mask() & !side_a;
        let bp = Bipartition { side_a, side_b };
        bp.is_valid_for(self).then_some(bp)
    }
}

/// Free-function form of [`Graph::contract_edge`].
pub fn contract_edge(g: &Graph, e: (usize, usize)) -> Result<Graph> {
    g.contract_edge(e.0, e.1)
}

/// Free-function form of [`Graph::is_bipartite`].
pub fn is_bipartite(g: &Graph) -> Option<Bipartition> {
    g.is_bipartite()
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", crate::graph6::to_graph6(self))?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}
