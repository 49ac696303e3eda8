//! Isomorph-free generation of polyhedral graphs.
//!
//! Every 3-connected graph other than a wheel has an edge whose deletion, or
//! whose contraction without creating parallel edges, leaves a 3-connected
//! graph. Reading that backwards, batch `(n, m)` is the wheel `Wₙ` (when
//! `m = 2n − 2`), plus splits of order-`(n − 1)` graphs with `m − 1` edges,
//! plus single-edge additions to batch `(n, m − 1)`. Minors of planar graphs
//! are planar, so only planar intermediates are ever needed.
//!
//! A polyhedral graph has one embedding up to mirroring, so the planar
//! children of a parent are read off its rotation system: edge additions
//! join two vertices on a common face, and splits cut a vertex's rotation
//! into two contiguous arcs. Duplicates are removed with a canonical
//! breadth-first code of the embedding, which also carries the child's
//! rotation system for the next round.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::bits::{bit, count, Bits};
use crate::error::{arg_err, Result};
use crate::graph::Graph;
use crate::planar::{embed_biconnected, is_planar, Embedding};
use crate::structure::is_3_connected;

/// Largest order a [`PlaneMap`] can hold.
pub const MAX_MAP_ORDER: usize = 15;
/// Largest order accepted by [`enumerate_polyhedra`].
pub const MAX_ENUM_ORDER: usize = 14;

const V: usize = 16;
const CODE_LEN: usize = 96;

/// A connected plane map on at most [`MAX_MAP_ORDER`] vertices. The face
/// left of dart `u -> v` continues with `v -> w`, `w` following `u` in the
/// rotation at `v`.
#[derive(Clone)]
pub struct PlaneMap {
    n: usize,
    m: usize,
    deg: [u8; V],
    rot: [[u8; V]; V],
    /// `at[v][u]`: position of `u` in the rotation at `v`.
    at: [[u8; V]; V],
    adj: [u16; V],
}

impl PlaneMap {
    fn empty(n: usize) -> PlaneMap {
        assert!(
            n <= MAX_MAP_ORDER,
            "plane maps hold at most {MAX_MAP_ORDER} vertices"
        );
        PlaneMap {
            n,
            m: 0,
            deg: [0; V],
            rot: [[0; V]; V],
            at: [[0; V]; V],
            adj: [0; V],
        }
    }

    pub fn from_rotation(rotation: &[Vec<usize>]) -> PlaneMap {
        let mut map = PlaneMap::empty(rotation.len());
        for (v, r) in rotation.iter().enumerate() {
            map.deg[v] = r.len() as u8;
            for (i, &u) in r.iter().enumerate() {
                map.rot[v][i] = u as u8;
                map.at[v][u] = i as u8;
                map.adj[v] |= 1 << u;
            }
            map.m += r.len();
        }
        map.m /= 2;
        map
    }

    pub fn from_embedding(e: &Embedding) -> PlaneMap {
        PlaneMap::from_rotation(&e.rotation)
    }

    /// Embeds a biconnected planar graph.
    pub fn from_graph(g: &Graph) -> Option<PlaneMap> {
        if g.order() > MAX_MAP_ORDER {
            return None;
        }
        embed_biconnected(g).map(|e| PlaneMap::from_embedding(&e))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.deg[v] as usize
    }

    pub fn rotation(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rot[v][..self.deg[v] as usize]
            .iter()
            .map(|&u| u as usize)
    }

    pub fn to_graph(&self) -> Graph {
        let rows: Vec<u64> = self.adj[..self.n].iter().map(|&r| r as u64).collect();
        Graph::from_rows(&rows).expect("plane map adjacency is symmetric")
    }

    pub fn to_embedding(&self) -> Embedding {
        Embedding {
            rotation: (0..self.n).map(|v| self.rotation(v).collect()).collect(),
        }
    }

    #[inline]
    fn succ(&self, v: usize, u: usize) -> usize {
        let d = self.deg[v] as usize;
        let i = self.at[v][u] as usize;
        self.rot[v][if i + 1 == d { 0 } else { i + 1 }] as usize
    }

    /// Faces as vertex cycles.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut seen = [0u16; V];
        let mut faces = Vec::new();
        for v in 0..self.n {
            for i in 0..self.deg[v] as usize {
                if seen[v] >> i & 1 == 1 {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, self.rot[v][i] as usize);
                while seen[a] >> self.at[a][b] & 1 == 0 {
                    seen[a] |= 1 << self.at[a][b];
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

    fn insert_after(&mut self, v: usize, prev: usize, new: usize) {
        let d = self.deg[v] as usize;
        let pos = self.at[v][prev] as usize + 1;
        for i in (pos..d).rev() {
            let u = self.rot[v][i];
            self.rot[v][i + 1] = u;
            self.at[v][u as usize] = (i + 1) as u8;
        }
        self.rot[v][pos] = new as u8;
        self.at[v][new] = pos as u8;
        self.deg[v] += 1;
        self.adj[v] |= 1 << new;
    }

    /// Child with edge `u v` drawn inside the face that passes
    /// `pu -> u` and `pv -> v`.
    fn with_chord(&self, u: usize, pu: usize, v: usize, pv: usize) -> PlaneMap {
        let mut c = self.clone();
        c.insert_after(u, pu, v);
        c.insert_after(v, pv, u);
        c.m += 1;
        c
    }

    /// Child where `v` keeps the rotation arc of length `len` starting at
    /// position `start` and a new vertex takes the rest.
    fn with_split(&self, v: usize, start: usize, len: usize) -> PlaneMap {
        let d = self.deg[v] as usize;
        let w = self.n;
        let mut c = self.clone();
        c.n += 1;
        c.m += 1;
        let old = self.rot[v];
        c.adj[v] = 1 << w;
        c.adj[w] = 1 << v;
        c.deg[v] = 0;
        for t in 0..len {
            let u = old[(start + t) % d] as usize;
            c.rot[v][t] = u as u8;
            c.at[v][u] = t as u8;
            c.adj[v] |= 1 << u;
        }
        c.rot[v][len] = w as u8;
        c.at[v][w] = len as u8;
        c.deg[v] = (len + 1) as u8;
        let rest = d - len;
        for t in 0..rest {
            let u = old[(start + len + t) % d] as usize;
            c.rot[w][t] = u as u8;
            c.at[w][u] = t as u8;
            c.adj[w] |= 1 << u;
            let p = c.at[u][v];
            c.rot[u][p as usize] = w as u8;
            c.at[u][w] = p;
            c.adj[u] = (c.adj[u] & !(1 << v)) | 1 << w;
        }
        c.rot[w][rest] = v as u8;
        c.at[w][v] = rest as u8;
        c.deg[w] = (rest + 1) as u8;
        c
    }

    /// Every planar single-edge addition.
    pub fn for_each_addition(&self, mut f: impl FnMut(PlaneMap)) {
        for face in self.faces() {
            let len = face.len();
            for i in 0..len {
                let u = face[i];
                let pu = face[(i + len - 1) % len];
                for j in i + 2..len {
                    let v = face[j];
                    if self.adj[u] >> v & 1 == 1 {
                        continue;
                    }
                    f(self.with_chord(u, pu, v, face[j - 1]));
                }
            }
        }
    }

    /// Every planar split into two vertices of degree at least 3, each
    /// unordered pair of arcs once.
    pub fn for_each_split(&self, mut f: impl FnMut(PlaneMap)) {
        if self.n >= MAX_MAP_ORDER {
            return;
        }
        for v in 0..self.n {
            let d = self.deg[v] as usize;
            if d < 4 {
                continue;
            }
            for len in 2..=d / 2 {
                let starts = if 2 * len == d { d / 2 } else { d };
                for start in 0..starts {
                    f(self.with_split(v, start, len));
                }
            }
        }
    }

    /// Canonical code: least breadth-first code over both orientations and
    /// the start darts whose ends have the largest (degree, neighbour degree
    /// sum) pair.
    pub fn canonical_code(&self) -> PackedCode {
        let mut inv = [0u16; V];
        for v in 0..self.n {
            let sum: u16 = self.rot[v][..self.deg[v] as usize]
                .iter()
                .map(|&u| self.deg[u as usize] as u16)
                .sum();
            inv[v] = (self.deg[v] as u16) << 8 | sum;
        }
        let mut key = (0u16, 0u16);
        for v in 0..self.n {
            for i in 0..self.deg[v] as usize {
                key = key.max((inv[v], inv[self.rot[v][i] as usize]));
            }
        }
        let mut best = [u8::MAX; CODE_LEN];
        let mut buf = [0u8; CODE_LEN];
        for v in 0..self.n {
            if inv[v] != key.0 {
                continue;
            }
            for i in 0..self.deg[v] as usize {
                if inv[self.rot[v][i] as usize] != key.1 {
                    continue;
                }
                for forward in [true, false] {
                    if self.code_from(v, i, forward, &mut buf, &best) {
                        best = buf;
                    }
                }
            }
        }
        PackedCode::pack(&best[..1 + self.n + 2 * self.m])
    }

    /// Writes the code from dart `v -> rot[v][i]` into `buf`; returns true
    /// if it is smaller than `best` (aborting as soon as it is larger).
    fn code_from(
        &self,
        v0: usize,
        i0: usize,
        forward: bool,
        buf: &mut [u8; CODE_LEN],
        best: &[u8; CODE_LEN],
    ) -> bool {
        let mut number = [0u8; V];
        let mut start = [0u8; V];
        let mut queue = [0u8; V];
        let mut numbered = 1usize;
        number[v0] = 1;
        start[v0] = i0 as u8;
        queue[0] = v0 as u8;
        let mut pos = 0;
        let mut less = false;
        macro_rules! emit {
            ($s:expr) => {{
                let s: u8 = $s;
                if !less {
                    if s > best[pos] {
                        return false;
                    }
                    less = s < best[pos];
                }
                buf[pos] = s;
                pos += 1;
            }};
        }
        emit!(self.n as u8);
        let mut head = 0;
        while head < numbered {
            let x = queue[head] as usize;
            head += 1;
            let d = self.deg[x] as usize;
            let s0 = start[x] as usize;
            for t in 0..d {
                let idx = if forward {
                    (s0 + t) % d
                } else {
                    (s0 + d - t) % d
                };
                let y = self.rot[x][idx] as usize;
                if number[y] == 0 {
                    numbered += 1;
                    number[y] = numbered as u8;
                    start[y] = self.at[y][x];
                    queue[numbered - 1] = y as u8;
                }
                emit!(number[y]);
            }
            emit!(0);
        }
        less
    }
}

/// A canonical code packed four bits per symbol: the order, then for each
/// vertex in canonical order its neighbours (numbered from 1) in rotation
/// order followed by 0.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PackedCode(pub [u64; CODE_LEN / 16]);

impl PackedCode {
    fn pack(symbols: &[u8]) -> PackedCode {
        let mut words = [0u64; CODE_LEN / 16];
        for (i, &s) in symbols.iter().enumerate() {
            debug_assert!(s < 16);
            words[i / 16] |= (s as u64) << (60 - 4 * (i % 16));
        }
        PackedCode(words)
    }

    #[inline]
    fn symbol(&self, i: usize) -> usize {
        (self.0[i / 16] >> (60 - 4 * (i % 16)) & 15) as usize
    }

    pub fn order(&self) -> usize {
        self.symbol(0)
    }

    /// The canonically labeled map the code describes.
    pub fn decode(&self) -> PlaneMap {
        let n = self.order();
        let mut rotation = vec![Vec::new(); n];
        let mut i = 1;
        for r in rotation.iter_mut() {
            loop {
                let s = self.symbol(i);
                i += 1;
                if s == 0 {
                    break;
                }
                r.push(s - 1);
            }
        }
        PlaneMap::from_rotation(&rotation)
    }

    /// The canonically labeled graph.
    pub fn to_graph(&self) -> Graph {
        self.decode().to_graph()
    }

    /// Upper-triangle bits of the labeled graph in graph6 order, first bit
    /// highest, so that key order is graph6 string order.
    pub fn graph6_key(&self) -> u128 {
        let n = self.order();
        let mut rows = [0u16; V];
        let mut i = 1;
        for row in rows.iter_mut().take(n) {
            loop {
                let s = self.symbol(i);
                i += 1;
                if s == 0 {
                    break;
                }
                *row |= 1 << (s - 1);
            }
        }
        let mut key = 0u128;
        let mut bits = 0;
        for v in 1..n {
            for u in 0..v {
                key = key << 1 | (rows[v] >> u & 1) as u128;
                bits += 1;
            }
        }
        key << (128 - bits)
    }

    /// Text form: the code symbols in hexadecimal.
    pub fn to_hex(&self) -> alloc::string::String {
        let n = self.order();
        let mut out = alloc::string::String::new();
        let mut zeros = 0;
        let mut i = 0;
        while zeros < n || i == 0 {
            let s = self.symbol(i);
            if i > 0 && s == 0 {
                zeros += 1;
            }
            out.push(char::from_digit(s as u32, 16).expect("nibble"));
            i += 1;
        }
        out
    }

    pub fn from_hex(text: &str) -> Option<PackedCode> {
        let symbols: Option<Vec<u8>> = text
            .trim()
            .chars()
            .map(|c| c.to_digit(16).map(|d| d as u8))
            .collect();
        let symbols = symbols?;
        if symbols.is_empty() || symbols.len() > CODE_LEN {
            return None;
        }
        let n = symbols[0] as usize;
        if symbols[1..].iter().filter(|&&s| s == 0).count() != n
            || symbols.last() != Some(&0) && n > 0
        {
            return None;
        }
        if symbols.iter().skip(1).any(|&s| s as usize > n) {
            return None;
        }
        Some(PackedCode::pack(&symbols))
    }
}

/// Sizes of polyhedral graphs on `n >= 4` vertices.
pub fn size_range(n: usize) -> RangeInclusive<usize> {
    (3 * n).div_ceil(2)..=3 * n - 6
}

pub fn wheel_code(n: usize) -> PackedCode {
    PlaneMap::from_graph(&crate::catalog::wheel(n))
        .expect("wheels are planar")
        .canonical_code()
}

/// Children of the given parents that belong to the next batch: splits of
/// `split_parents` and edge additions to `add_parents`.
pub fn for_each_child(
    split_parents: &[PackedCode],
    add_parents: &[PackedCode],
    mut f: impl FnMut(PackedCode),
) {
    for p in split_parents {
        p.decode().for_each_split(|c| f(c.canonical_code()));
    }
    for p in add_parents {
        p.decode().for_each_addition(|c| f(c.canonical_code()));
    }
}

/// Deduplicates and sorts a batch into emission order.
pub fn finish_batch(mut codes: Vec<PackedCode>) -> Vec<PackedCode> {
    codes.sort_unstable();
    codes.dedup();
    codes.sort_by_cached_key(PackedCode::graph6_key);
    codes
}

/// Builds one `(order, size)` batch from its parents.
pub trait BatchBuilder {
    fn build(
        &mut self,
        order: usize,
        size: usize,
        wheel: Option<PackedCode>,
        split_parents: &[PackedCode],
        add_parents: &[PackedCode],
    ) -> Vec<PackedCode>;
}

/// Single-threaded builder with a hash set for duplicates.
pub struct Sequential;

impl BatchBuilder for Sequential {
    fn build(
        &mut self,
        _order: usize,
        _size: usize,
        wheel: Option<PackedCode>,
        split_parents: &[PackedCode],
        add_parents: &[PackedCode],
    ) -> Vec<PackedCode> {
        let mut seen: hashbrown::HashSet<PackedCode> = hashbrown::HashSet::new();
        seen.extend(wheel);
        for_each_child(split_parents, add_parents, |c| {
            seen.insert(c);
        });
        finish_batch(seen.into_iter().collect())
    }
}

/// Walks the batches `(n, m)` for `n = 4..=max_order` in order, keeping
/// only what later batches need: the previous batch of the current order
/// and all batches of the previous order.
pub struct Levels<B> {
    max_order: usize,
    builder: B,
    order: usize,
    size: usize,
    prev_order: Vec<Vec<PackedCode>>,
    this_order: Vec<Vec<PackedCode>>,
    last: Vec<PackedCode>,
}

impl<B: BatchBuilder> Levels<B> {
    pub fn new(max_order: usize, builder: B) -> Result<Self> {
        if !(4..=MAX_ENUM_ORDER).contains(&max_order) {
            return arg_err("enumeration order must be in 4..=14");
        }
        Ok(Levels {
            max_order,
            builder,
            order: 4,
            size: *size_range(4).start(),
            prev_order: Vec::new(),
            this_order: Vec::new(),
            last: Vec::new(),
        })
    }

    pub fn builder_mut(&mut self) -> &mut B {
        &mut self.builder
    }

    /// Produces the next batch as `(order, size, codes)`.
    pub fn next_batch(&mut self) -> Option<(usize, usize, &[PackedCode])> {
        if self.order > self.max_order {
            return None;
        }
        let (n, m) = (self.order, self.size);
        let wheel = (m == 2 * n - 2).then(|| wheel_code(n));
        let split_parents: &[PackedCode] = self.prev_order.get(m - 1).map_or(&[], Vec::as_slice);
        let add_parents: &[PackedCode] = if m == *size_range(n).start() {
            &[]
        } else {
            &self.last
        };
        let batch = self.builder.build(n, m, wheel, split_parents, add_parents);
        if n < self.max_order {
            if self.this_order.len() <= m {
                self.this_order.resize(m + 1, Vec::new());
            }
            self.this_order[m] = batch.clone();
        }
        self.last = batch;
        if m == *size_range(n).end() {
            self.prev_order = core::mem::take(&mut self.this_order);
            self.order += 1;
            self.size = if self.order <= self.max_order {
                *size_range(self.order).start()
            } else {
                0
            };
        } else {
            self.size += 1;
        }
        Some((n, m, &self.last))
    }
}

/// Streams one representative of every polyhedral graph on `n` vertices to
/// `sink`, in batch order and graph6 order within a batch, and returns the
/// number of classes.
pub fn enumerate_polyhedra(n: usize, mut sink: impl FnMut(&Graph)) -> Result<u64> {
    let mut levels = Levels::new(n, Sequential)?;
    let mut total = 0;
    while let Some((k, _, codes)) = levels.next_batch() {
        if k == n {
            for c in codes {
                sink(&c.to_graph());
                total += 1;
            }
        }
    }
    Ok(total)
}

/// Splits `v` into adjacent `v` and a new last vertex: `v` keeps `part_a`,
/// the new vertex takes the other neighbours.
pub fn split_vertex(g: &Graph, v: usize, part_a: u64) -> Result<Graph> {
    let n = g.order();
    if v >= n {
        return arg_err("vertex out of range");
    }
    let nv = g.neighbors(v);
    let d = count(nv);
    if d < 4 {
        return arg_err("split needs degree at least 4");
    }
    if part_a & !nv != 0 {
        return arg_err("part_a must be a subset of the neighbourhood");
    }
    if count(part_a) < 2 || count(part_a) > d - 2 {
        return arg_err("each side of a split needs at least two neighbours");
    }
    if n >= crate::graph::MAX_ORDER {
        return arg_err("split would exceed 64 vertices");
    }
    let mut h = Graph::new(n + 1);
    for (a, b) in g.edges() {
        if a != v && b != v {
            h.add_edge(a, b);
        }
    }
    for u in Bits(part_a) {
        h.add_edge(v, u);
    }
    for u in Bits(nv & !part_a) {
        h.add_edge(n, u);
    }
    h.add_edge(v, n);
    Ok(h)
}

/// All single-edge additions and vertex splits of `g` that stay planar.
/// Each unordered split appears once (the side holding the lowest neighbour
/// stays on `v`).
pub fn expansions(g: &Graph) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let mut h = g.clone();
                h.add_edge(u, v);
                if is_planar(&h) {
                    out.push(h);
                }
            }
        }
    }
    for v in 0..n {
        let nv = g.neighbors(v);
        let d = count(nv);
        if d < 4 {
            continue;
        }
        let nbrs: Vec<usize> = Bits(nv).collect();
        let lowest = bit(nbrs[0]);
        for sub in 0u64..1 << d {
            let part_a = Bits(sub).fold(0u64, |m, i| m | bit(nbrs[i]));
            let k = count(part_a);
            if part_a & lowest == 0 || k < 2 || k > d - 2 {
                continue;
            }
            let h = split_vertex(g, v, part_a).expect("preconditions checked");
            if is_planar(&h) {
                out.push(h);
            }
        }
    }
    debug_assert!(!is_3_connected(g) || out.iter().all(is_3_connected));
    out
}
