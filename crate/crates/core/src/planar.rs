//! Planarity testing by path addition over biconnected components, with
//! combinatorial embeddings for biconnected graphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{bit, low_mask, Bits};
use crate::graph::Graph;

/// A combinatorial embedding: `rotation[v]` lists the neighbours of `v` in
/// cyclic order. The face to the left of dart `u -> v` continues with
/// `v -> w`, where `w` follows `u` in `rotation[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Successor of `u` in the rotation at `v`.
    pub fn succ(&self, v: usize, u: usize) -> usize {
        let r = &self.rotation[v];
        let i = r
            .iter()
            .position(|&x| x == u)
            .expect("u is a neighbour of v");
        r[(i + 1) % r.len()]
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        let n = self.rotation.len();
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..n {
            for i in 0..self.rotation[u].len() {
                if used[u][i] {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (u, self.rotation[u][i]);
                loop {
                    let k = self.rotation[a]
                        .iter()
                        .position(|&x| x == b)
                        .expect("dart exists");
                    if used[a][k] {
                        break;
                    }
                    used[a][k] = true;
                    face.push(a);
                    let c = self.succ(b, a);
                    a = b;
                    b = c;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Checks that the rotation matches `g` and that Euler's formula holds,
    /// which for a connected graph certifies a plane embedding.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        if self.rotation.len() != n || !g.is_connected() {
            return false;
        }
        for v in 0..n {
            let r = &self.rotation[v];
            let mask = r.iter().fold(0u64, |m, &u| m | bit(u));
            if r.len() != g.degree(v) || mask != g.neighbors(v) {
                return false;
            }
        }
        let f = self.faces().len();
        n + f == g.size() + 2
    }
}

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g).into_iter().all(|block| {
        let b = g.induced(block);
        b.size() < 9 || path_addition(&b).is_some()
    })
}

/// Plane embedding of a biconnected graph, `None` when the graph is not
/// planar or not biconnected.
pub fn embed_biconnected(g: &Graph) -> Option<Embedding> {
    let n = g.order();
    if n < 3
        || !g.is_connected()
        || (0..n).any(|v| !g.is_connected_within(g.vertex_mask() & !bit(v)))
    {
        return None;
    }
    let faces = path_addition(g)?;
    Some(rotation_from_faces(n, &faces))
}

/// Vertex sets of the biconnected components with at least two vertices.
pub fn biconnected_blocks(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut st = Tarjan {
        g,
        disc: vec![usize::MAX; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for r in 0..n {
        if st.disc[r] == usize::MAX {
            st.visit(r, usize::MAX);
        }
    }
    st.blocks
}

struct Tarjan<'a> {
    g: &'a Graph,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<(usize, usize)>,
    blocks: Vec<u64>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.disc[u] = self.time;
        self.low[u] = self.time;
        self.time += 1;
        for v in Bits(self.g.neighbors(u)) {
            if self.disc[v] == usize::MAX {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = 0u64;
                    while let Some((a, b)) = self.stack.pop() {
                        block |= bit(a) | bit(b);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

/// Demoucron–Malgrange–Pertuiset path addition on a biconnected graph.
/// Returns consistently oriented faces, or `None` if the graph is not planar.
fn path_addition(b: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = b.order();
    let m = b.size();
    if m > 3 * n - 6 {
        return None;
    }
    let cycle = initial_cycle(b);
    let mut embedded = cycle.iter().fold(0u64, |acc, &v| acc | bit(v));
    let mut emb_adj = vec![0u64; n];
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        emb_adj[u] |= bit(v);
        emb_adj[v] |= bit(u);
    }
    let mut edges_done = cycle.len();
    let mut faces = vec![
        cycle.clone(),
        cycle.iter().rev().copied().collect::<Vec<_>>(),
    ];
    while edges_done < m {
        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0u64, |a, &v| a | bit(v)))
            .collect();
        let mut chosen: Option<(Fragment, usize)> = None;
        for frag in fragments(b, embedded, &emb_adj) {
            let mut admissible = face_masks
                .iter()
                .enumerate()
                .filter(|(_, &fm)| fm & frag.attachments == frag.attachments);
            let (first, _) = admissible.next()?;
            let unique = admissible.next().is_none();
            if unique {
                chosen = Some((frag, first));
                break;
            }
            if chosen.is_none() {
                chosen = Some((frag, first));
            }
        }
        let (frag, fi) = chosen.expect("an unembedded edge leaves a fragment");
        let p = fragment_path(b, &frag);
        split_face(&mut faces, fi, &p);
        for w in p.windows(2) {
            emb_adj[w[0]] |= bit(w[1]);
            emb_adj[w[1]] |= bit(w[0]);
            embedded |= bit(w[0]) | bit(w[1]);
        }
        edges_done += p.len() - 1;
    }
    Some(faces)
}

struct Fragment {
    /// Unembedded vertices of the fragment; zero for a single chord.
    interior: u64,
    attachments: u64,
}

fn fragments(b: &Graph, embedded: u64, emb_adj: &[u64]) -> Vec<Fragment> {
    let mut out = Vec::new();
    let rest = b.vertex_mask() & !embedded;
    for comp in b.components_within(rest) {
        out.push(Fragment {
            interior: comp,
            attachments: b.neighborhood_of(comp) & embedded,
        });
    }
    for u in Bits(embedded) {
        let chords = b.neighbors(u) & embedded & !emb_adj[u] & !low_mask(u + 1);
        for v in Bits(chords) {
            out.push(Fragment {
                interior: 0,
                attachments: bit(u) | bit(v),
            });
        }
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(b: &Graph, frag: &Fragment) -> Vec<usize> {
    let a = frag.attachments.trailing_zeros() as usize;
    if frag.interior == 0 {
        let v = (frag.attachments & !bit(a)).trailing_zeros() as usize;
        return vec![a, v];
    }
    let start = (b.neighbors(a) & frag.interior).trailing_zeros() as usize;
    let mut parent = [usize::MAX; 64];
    let mut queue = vec![start];
    let mut seen = bit(start);
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head];
        head += 1;
        let ends = b.neighbors(y) & frag.attachments & !bit(a);
        if ends != 0 {
            let mut p = vec![ends.trailing_zeros() as usize];
            let mut x = y;
            loop {
                p.push(x);
                if x == start {
                    break;
                }
                x = parent[x];
            }
            p.push(a);
            p.reverse();
            return p;
        }
        for z in Bits(b.neighbors(y) & frag.interior & !seen) {
            seen |= bit(z);
            parent[z] = y;
            queue.push(z);
        }
    }
    unreachable!("fragment of a biconnected graph has two attachments")
}

/// Splits face `fi` along path `p`, whose ends lie on the face.
fn split_face(faces: &mut Vec<Vec<usize>>, fi: usize, p: &[usize]) {
    let f = &faces[fi];
    let len = f.len();
    let i = f
        .iter()
        .position(|&v| v == p[0])
        .expect("path start on face");
    let j = f
        .iter()
        .position(|&v| v == *p.last().unwrap())
        .expect("path end on face");
    let interior = &p[1..p.len() - 1];
    let mut a = Vec::with_capacity(len + interior.len());
    let mut k = i;
    loop {
        a.push(f[k]);
        if k == j {
            break;
        }
        k = (k + 1) % len;
    }
    a.extend(interior.iter().rev());
    let mut bface = Vec::with_capacity(len + interior.len());
    let mut k = j;
    loop {
        bface.push(f[k]);
        if k == i {
            break;
        }
        k = (k + 1) % len;
    }
    bface.extend(interior.iter());
    faces[fi] = a;
    faces.push(bface);
}

fn initial_cycle(b: &Graph) -> Vec<usize> {
    let a = b.neighbors(0).trailing_zeros() as usize;
    let mut h = b.clone();
    h.remove_edge(0, a);
    let mut parent = [usize::MAX; 64];
    let mut queue = vec![a];
    let mut seen = bit(a);
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head];
        head += 1;
        if y == 0 {
            break;
        }
        for z in Bits(h.neighbors(y) & !seen) {
            seen |= bit(z);
            parent[z] = y;
            queue.push(z);
        }
    }
    let mut cycle = Vec::new();
    let mut x = 0;
    while x != a {
        cycle.push(x);
        x = parent[x];
    }
    cycle.push(a);
    cycle
}

fn rotation_from_faces(n: usize, faces: &[Vec<usize>]) -> Embedding {
    let mut succ: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for f in faces {
        let len = f.len();
        for k in 0..len {
            let (u, v, w) = (f[k], f[(k + 1) % len], f[(k + 2) % len]);
            succ[v].push((u, w));
        }
    }
    let rotation = succ
        .iter()
        .map(|pairs| {
            let start = pairs
                .iter()
                .map(|&(u, _)| u)
                .min()
                .expect("vertex has neighbours");
            let mut rot = vec![start];
            let mut cur = start;
            loop {
                let next = pairs
                    .iter()
                    .find(|&&(u, _)| u == cur)
                    .expect("successor exists")
                    .1;
                if next == start {
                    break;
                }
                rot.push(next);
                cur = next;
            }
            debug_assert_eq!(rot.len(), pairs.len());
            rot
        })
        .collect();
    Embedding { rotation }
}

/// Number of faces of any plane embedding of a connected planar graph.
pub fn face_count(g: &Graph) -> usize {
    g.size() + 2 - g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{herschel, pattern, PatternId};
    use crate::testutil::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert!(!is_planar(&complete(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(is_planar(&herschel()));
        assert!(is_planar(&complete(4)));
        assert!(is_planar(&cube()));
        assert!(!is_planar(&pattern(PatternId::K34)));
        assert!(!is_planar(&pattern(PatternId::Qplus)));
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
        assert!(!is_planar(&pet));
        assert!(is_planar(&Graph::new(1)));
    }

    #[test]
    fn embeddings_satisfy_euler() {
        for g in [herschel(), complete(4), cube(), wheel(9), cycle(7)] {
            let e = embed_biconnected(&g).unwrap();
            assert!(e.is_valid_for(&g));
            assert_eq!(e.faces().len(), face_count(&g));
        }
        let h = herschel();
        let faces = embed_biconnected(&h).unwrap().faces();
        assert!(faces.iter().all(|f| f.len() == 4));
        assert!(embed_biconnected(&path(4)).is_none());
    }

    #[test]
    fn blocks_of_a_bowtie() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 5)]);
        let mut b = biconnected_blocks(&g);
        b.sort_unstable();
        assert_eq!(b, vec![0b000111, 0b011100, 0b110000]);
    }

    proptest! {
        #[test]
        fn planar_graphs_respect_euler_bound(g in arb_graph(3, 20)) {
            if is_planar(&g) {
                prop_assert!(g.size() <= 3 * g.order() - 6);
            }
        }

        #[test]
        fn biconnected_embeddings_are_valid(g in arb_graph(3, 14)) {
            if let Some(e) = embed_biconnected(&g) {
                prop_assert!(e.is_valid_for(&g));
                prop_assert!(is_planar(&g));
            }
        }
    }
}
