//! Canonical labeling and automorphism groups by partition refinement and
//! backtracking over individualised vertices.
//!
//! Leaves of the search tree are discrete ordered partitions; the canonical
//! leaf is the one whose relabeled graph has the lexicographically least
//! graph6 bit string. Leaves that reproduce the first leaf's graph give
//! automorphisms, which prune later siblings by orbit.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, count, Bits};
use crate::graph::Graph;
use crate::graph6::to_graph6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `canonical_labels[v]` is the canonical index of vertex `v`.
    pub canonical_labels: Vec<usize>,
    pub canonical_string: String,
    /// Order of the automorphism group, saturating at `u128::MAX`.
    pub automorphism_count: u128,
    /// Generators of the automorphism group as vertex permutations.
    pub generators: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            canonical_labels: Vec::new(),
            canonical_string: to_graph6(g),
            automorphism_count: 1,
            generators: Vec::new(),
        };
    }
    let mut search = Search::new(g);
    let cells = search.refine(initial_partition(g));
    let mut path = Vec::new();
    search.descend(cells, &mut path);
    let best = search.best.take().expect("search visits at least one leaf");
    let canonical_labels = best.labels;
    let canonical_string = to_graph6(&g.permuted(&canonical_labels));
    let automorphism_count = search.group_order();
    CanonicalForm {
        canonical_labels,
        canonical_string,
        automorphism_count,
        generators: search.generators,
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.size() == b.size()
        && canonical_form(a).canonical_string == canonical_form(b).canonical_string
}

/// All automorphisms of `g`, or `None` when the group has more than `limit`
/// elements. The identity comes first.
pub fn automorphisms(g: &Graph, limit: usize) -> Option<Vec<Vec<usize>>> {
    let cf = canonical_form(g);
    if cf.automorphism_count > limit as u128 {
        return None;
    }
    Some(close_group(g.order(), &cf.generators))
}

/// Closes a generating set under composition.
pub fn close_group(n: usize, generators: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let identity: Vec<usize> = (0..n).collect();
    let mut elements = vec![identity];
    let mut seen: hashbrown::HashSet<Vec<usize>> = elements.iter().cloned().collect();
    let mut i = 0;
    while i < elements.len() {
        for gen in generators {
            let next: Vec<usize> = elements[i].iter().map(|&x| gen[x]).collect();
            if seen.insert(next.clone()) {
                elements.push(next);
            }
        }
        i += 1;
    }
    elements
}

fn initial_partition(g: &Graph) -> Vec<u64> {
    let mut by_degree: Vec<(usize, u64)> = Vec::new();
    for v in 0..g.order() {
        let d = g.degree(v);
        match by_degree.iter_mut().find(|(k, _)| *k == d) {
            Some((_, m)) => *m |= bit(v),
            None => by_degree.push((d, bit(v))),
        }
    }
    by_degree.sort_unstable_by_key(|&(d, _)| d);
    by_degree.into_iter().map(|(_, m)| m).collect()
}

struct Leaf {
    labels: Vec<usize>,
    /// Relabeled upper triangle, column by column, as in graph6.
    key: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.order(),
            first: None,
            first_path: Vec::new(),
            best: None,
            generators: Vec::new(),
        }
    }

    /// Refines an ordered partition to the coarsest equitable refinement,
    /// splitting cells by neighbour counts into each splitter cell.
    fn refine(&self, mut cells: Vec<u64>) -> Vec<u64> {
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut next = Vec::with_capacity(self.n);
            let mut changed = false;
            for &cell in &cells {
                if count(cell) == 1 {
                    next.push(cell);
                    continue;
                }
                let mut groups: Vec<(usize, u64)> = Vec::new();
                for v in Bits(cell) {
                    let c = count(self.g.neighbors(v) & splitter);
                    match groups.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, m)) => *m |= bit(v),
                        None => groups.push((c, bit(v))),
                    }
                }
                if groups.len() > 1 {
                    changed = true;
                    groups.sort_unstable_by_key(|&(c, _)| c);
                    next.extend(groups.into_iter().map(|(_, m)| m));
                } else {
                    next.push(cell);
                }
            }
            cells = next;
            w = if changed { 0 } else { w + 1 };
        }
        cells
    }

    fn leaf(&self, cells: &[u64]) -> Leaf {
        let mut labels = vec![0; self.n];
        for (i, &c) in cells.iter().enumerate() {
            labels[c.trailing_zeros() as usize] = i;
        }
        let mut inverse = vec![0; self.n];
        for (v, &l) in labels.iter().enumerate() {
            inverse[l] = v;
        }
        let mut key = vec![0u64; self.n];
        for (col, slot) in key.iter_mut().enumerate() {
            let row = self.g.neighbors(inverse[col]);
            let mut k = 0u64;
            for r in 0..col {
                k = k << 1 | (row >> inverse[r] & 1);
            }
            *slot = k;
        }
        Leaf { labels, key }
    }

    /// Returns `Some(level)` to unwind to the first-path node at `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let level = path.len();
        let Some(target) = target_cell(&cells) else {
            return self.visit_leaf(&cells, path);
        };
        let mut tried: Vec<usize> = Vec::new();
        for v in Bits(cells[target]) {
            if !tried.is_empty() {
                let orbits = self.orbits_fixing(path);
                if tried.iter().any(|&u| orbits[u] == orbits[v]) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(bit(v));
            child.push(cells[target] & !bit(v));
            child.extend_from_slice(&cells[target + 1..]);
            let child = self.refine(child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            match jump {
                Some(t) if t < level => return Some(t),
                _ => {}
            }
        }
        None
    }

    fn visit_leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let leaf = self.leaf(cells);
        let Some(first) = &self.first else {
            self.first_path = path.to_vec();
            self.best = Some(Leaf {
                labels: leaf.labels.clone(),
                key: leaf.key.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.key == first.key {
            let gen = compose_to(&leaf.labels, &first.labels);
            self.generators.push(gen);
            let common = path
                .iter()
                .zip(&self.first_path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let best = self.best.as_ref().expect("best set with first");
        if leaf.key < best.key {
            self.best = Some(leaf);
        } else if leaf.key == best.key {
            let gen = compose_to(&leaf.labels, &best.labels);
            self.generators.push(gen);
        }
        None
    }

    /// Orbit representatives under the generators that fix `prefix` pointwise.
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gen in &self.generators {
            if prefix.iter().any(|&v| gen[v] != v) {
                continue;
            }
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, gen[v]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }

    fn group_order(&self) -> u128 {
        let mut order: u128 = 1;
        for level in 0..self.first_path.len() {
            let orbits = self.orbits_fixing(&self.first_path[..level]);
            let v = self.first_path[level];
            let size = orbits.iter().filter(|&&o| o == orbits[v]).count() as u128;
            order = order.saturating_mul(size);
        }
        order
    }
}

/// First smallest non-singleton cell.
fn target_cell(cells: &[u64]) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (i, &c) in cells.iter().enumerate() {
        let k = count(c);
        if k > 1 && best.is_none_or(|(_, bk)| k < bk) {
            best = Some((i, k));
        }
    }
    best.map(|(i, _)| i)
}

/// The permutation sending each vertex to the vertex with the same label in
/// `target`: the automorphism between two leaves with equal relabeled graphs.
fn compose_to(labels: &[usize], target: &[usize]) -> Vec<usize> {
    let mut inverse = vec![0; target.len()];
    for (v, &l) in target.iter().enumerate() {
        inverse[l] = v;
    }
    labels.iter().map(|&l| inverse[l]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::herschel;
    use crate::testutil::*;
    use proptest::prelude::*;

    #[test]
    fn automorphism_counts() {
        assert_eq!(canonical_form(&complete(4)).automorphism_count, 24);
        assert_eq!(canonical_form(&cycle(5)).automorphism_count, 10);
        assert_eq!(canonical_form(&herschel()).automorphism_count, 12);
        assert_eq!(canonical_form(&Graph::new(1)).automorphism_count, 1);
        assert_eq!(canonical_form(&Graph::new(5)).automorphism_count, 120);
        assert_eq!(
            canonical_form(&complete_bipartite(3, 3)).automorphism_count,
            72
        );
        assert_eq!(canonical_form(&cube()).automorphism_count, 48);
        // Petersen graph
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
        assert_eq!(canonical_form(&pet).automorphism_count, 120);
        assert_eq!(
            canonical_form(&complete(20)).automorphism_count,
            2432902008176640000
        );
    }

    #[test]
    fn labels_reproduce_string() {
        let h = herschel();
        let cf = canonical_form(&h);
        assert_eq!(
            to_graph6(&h.permuted(&cf.canonical_labels)),
            cf.canonical_string
        );
        for gen in &cf.generators {
            assert_eq!(h.permuted(gen), h);
        }
        let group = automorphisms(&h, 100).unwrap();
        assert_eq!(group.len(), 12);
        assert!(automorphisms(&complete(6), 100).is_none());
    }

    #[test]
    fn herschel_string_is_permutation_invariant() {
        let h = herschel();
        let s = canonical_form(&h).canonical_string;
        let mut perm: Vec<usize> = (0..11).collect();
        for shift in 1..11 {
            perm.rotate_left(shift % 3 + 1);
            perm.swap(0, shift);
            assert_eq!(canonical_form(&h.permuted(&perm)).canonical_string, s);
        }
    }

    #[test]
    fn complete_on_small_orders() {
        // Every pair of non-isomorphic graphs on up to 6 vertices gets distinct
        // strings, and the class counts match the brute-force oracle.
        for n in 1..=6 {
            let classes = brute_iso_classes(n);
            let strings: hashbrown::HashSet<String> = classes
                .iter()
                .map(|g| canonical_form(g).canonical_string)
                .collect();
            assert_eq!(strings.len(), classes.len(), "n = {n}");
        }
    }

    #[test]
    fn group_order_matches_brute_force() {
        for n in 1..=6 {
            for g in brute_iso_classes(n) {
                assert_eq!(
                    canonical_form(&g).automorphism_count,
                    brute_aut_count(&g) as u128,
                    "{g:?}"
                );
            }
        }
    }

    proptest! {
        #[test]
        fn permutation_invariance((g, perm) in arb_graph(1, 24).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })) {
            let a = canonical_form(&g);
            let b = canonical_form(&g.permuted(&perm));
            prop_assert_eq!(&a.canonical_string, &b.canonical_string);
            prop_assert_eq!(a.automorphism_count, b.automorphism_count);
            let fact: u128 = (1..=g.order() as u128).product();
            prop_assert_eq!(fact % a.automorphism_count, 0);
        }
    }
}
