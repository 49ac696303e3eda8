//! Labeled constructors: the Herschel graph and its family, pattern graphs,
//! and small fixtures.
//!
//! Herschel vertex numbering, shared by every family constructor:
//!
//! | index | role | | index | role |
//! |---|---|---|---|---|
//! | 0 | pole h¹ | | 5, 6, 7 | rims h₁¹, h₂¹, h₃¹ |
//! | 1 | pole h² | | 8, 9, 10 | rims h₁², h₂², h₃² |
//! | 2, 3, 4 | hubs h₁, h₂, h₃ | | | |
//!
//! Rim hᵢʲ is adjacent to hub hᵢ, hub hᵢ₊₁ (indices mod 3) and pole hʲ.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::{arg_err, Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexRole {
    Pole(u8),
    Hub(u8),
    Rim(u8, u8),
    FanPath(u8),
    Gadget(u8),
}

pub const POLE1: usize = 0;
pub const POLE2: usize = 1;

/// Index of hub hᵢ, `i` in 1..=3.
pub const fn hub(i: usize) -> usize {
    1 + i
}

/// Index of rim hᵢʲ, `i` in 1..=3, `j` in 1..=2.
pub const fn rim(i: usize, j: usize) -> usize {
    2 + 3 * j + i - 1
}

fn next_hub(i: usize) -> usize {
    i % 3 + 1
}

pub fn herschel() -> Graph {
    let mut g = Graph::new(11);
    for j in 1..=2 {
        for i in 1..=3 {
            let r = rim(i, j);
            g.add_edge(hub(i), r);
            g.add_edge(hub(next_hub(i)), r);
            g.add_edge(j - 1, r);
        }
    }
    label_herschel_core(&mut g);
    g
}

fn label_herschel_core(g: &mut Graph) {
    g.set_role(POLE1, VertexRole::Pole(1));
    g.set_role(POLE2, VertexRole::Pole(2));
    for i in 1..=3u8 {
        g.set_role(hub(i as usize), VertexRole::Hub(i));
        for j in 1..=2u8 {
            g.set_role(rim(i as usize, j as usize), VertexRole::Rim(i, j));
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKind {
    Bullet,
    Circ,
    H13,
    H15,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Bullet => "bullet",
            FamilyKind::Circ => "circ",
            FamilyKind::H13 => "h13",
            FamilyKind::H15 => "h15",
        }
    }
}

/// Selects one member of the Herschel family.
///
/// Mask bits, low to high, add the optional edges h₁h₂, h₂h₃, h₃h₁, h₁h²,
/// h₃h². The same bit order is used for both `bullet` and `circ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub dashed_mask: u8,
}

pub const DASHED_EDGES: [(usize, usize); 5] = [
    (hub(1), hub(2)),
    (hub(2), hub(3)),
    (hub(3), hub(1)),
    (hub(1), POLE2),
    (hub(3), POLE2),
];

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize, dashed_mask: u8) -> Result<FamilySpec> {
        let spec = FamilySpec {
            kind,
            n,
            dashed_mask,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn skeleton(kind: FamilyKind, n: usize) -> Result<FamilySpec> {
        FamilySpec::new(kind, n, 0)
    }

    pub fn validate(&self) -> Result<()> {
        if self.dashed_mask >= 32 {
            return arg_err("dashed mask must be below 32");
        }
        match self.kind {
            FamilyKind::Bullet if !(11..=64).contains(&self.n) => {
                arg_err("bullet needs 11 <= n <= 64")
            }
            FamilyKind::Circ if !(13..=64).contains(&self.n) => arg_err("circ needs 13 <= n <= 64"),
            FamilyKind::H13 if self.n != 13 || self.dashed_mask != 0 => arg_err("h13 is 13:0 only"),
            FamilyKind::H15 if self.n != 15 || self.dashed_mask != 0 => arg_err("h15 is 15:0 only"),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind.name(), self.n, self.dashed_mask)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `kind:n:mask`; `kind:n` means mask 0, and `h13`/`h15` alone are
    /// accepted.
    fn from_str(s: &str) -> Result<FamilySpec> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let kind = match parts[0] {
            "bullet" => FamilyKind::Bullet,
            "circ" => FamilyKind::Circ,
            "h13" => FamilyKind::H13,
            "h15" => FamilyKind::H15,
            other => return arg_err(format!("unknown family kind `{other}`")),
        };
        let num = |i: usize, default: Option<usize>| -> Result<usize> {
            match parts.get(i) {
                Some(p) => p
                    .parse()
                    .map_err(|_| Error::Argument(format!("bad number `{p}`"))),
                None => default.ok_or_else(|| Error::Argument("missing order".into())),
            }
        };
        if parts.len() > 3 {
            return arg_err("expected kind:n:mask");
        }
        let fixed = match kind {
            FamilyKind::H13 => Some(13),
            FamilyKind::H15 => Some(15),
            _ => None,
        };
        let n = num(1, fixed)?;
        let mask = num(2, Some(0))?;
        if mask >= 32 {
            return arg_err("dashed mask must be below 32");
        }
        FamilySpec::new(kind, n, mask as u8)
    }
}

pub fn family_member(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = match spec.kind {
        FamilyKind::Bullet => bullet_skeleton(spec.n),
        FamilyKind::Circ => circ_skeleton(spec.n),
        FamilyKind::H13 => h13(),
        FamilyKind::H15 => h15(),
    };
    for (bit, &(u, v)) in DASHED_EDGES.iter().enumerate() {
        if spec.dashed_mask >> bit & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

/// Herschel with rim h₃² stretched into a path of `n − 10` vertices, each
/// joined to pole h²; the path starts at h₃ and ends at h₁. Fan vertices are
/// 10, 11, …, n − 1.
fn bullet_skeleton(n: usize) -> Graph {
    let mut g = Graph::new(n);
    herschel_without_last_rim(&mut g);
    let fan: Vec<usize> = (10..n).collect();
    attach_fan(&mut g, &fan);
    g
}

/// `bullet(n − 2)` with pole h¹ truncated to a triangle t₁t₂t₃. Vertex 0 is
/// t₃ (joined to h₃¹); t₁ = n − 2 and t₂ = n − 1 are joined to h₁¹ and h₂¹.
/// Fan vertices are 10, …, n − 3.
fn circ_skeleton(n: usize) -> Graph {
    let mut g = Graph::new(n);
    herschel_without_last_rim(&mut g);
    let fan: Vec<usize> = (10..n - 2).collect();
    attach_fan(&mut g, &fan);
    truncate_pole(&mut g, POLE1, [n - 2, n - 1], 1, 1);
    g
}

/// Herschel with hub h₂ split into the path s′–v–s″: s′ (index 3) keeps
/// h₁¹ and h₁², s″ (index 11) takes h₂¹ and h₂², and v (index 12) is joined
/// to pole h².
fn h13() -> Graph {
    let g = herschel();
    let mut out = Graph::new(13);
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    let (s1, s2, mid) = (hub(2), 11, 12);
    for j in 1..=2 {
        out.remove_edge(s1, rim(2, j));
        out.add_edge(s2, rim(2, j));
    }
    out.add_edge(s1, mid);
    out.add_edge(s2, mid);
    out.add_edge(mid, POLE2);
    for v in 0..11 {
        if let Some(r) = g.role(v) {
            out.set_role(v, r);
        }
    }
    out.set_role(s1, VertexRole::Gadget(1));
    out.set_role(mid, VertexRole::Gadget(2));
    out.set_role(s2, VertexRole::Gadget(3));
    out
}

/// Herschel with both poles truncated. Pole hʲ becomes the triangle whose
/// vertex joined to h₃ʲ keeps index j − 1; the other two are appended.
fn h15() -> Graph {
    let h = herschel();
    let mut g = Graph::new(15);
    for (u, v) in h.edges() {
        g.add_edge(u, v);
    }
    for v in 0..11 {
        if let Some(r) = h.role(v) {
            g.set_role(v, r);
        }
    }
    truncate_pole(&mut g, POLE1, [11, 12], 1, 1);
    truncate_pole(&mut g, POLE2, [13, 14], 2, 4);
    g
}

fn herschel_without_last_rim(g: &mut Graph) {
    for j in 1..=2 {
        for i in 1..=3 {
            if (i, j) == (3, 2) {
                continue;
            }
            let r = rim(i, j);
            g.add_edge(hub(i), r);
            g.add_edge(hub(next_hub(i)), r);
            g.add_edge(j - 1, r);
        }
    }
    label_herschel_core(g);
}

/// Joins `fan` as a path from h₃ to h₁ with every vertex adjacent to h².
fn attach_fan(g: &mut Graph, fan: &[usize]) {
    g.add_edge(hub(3), fan[0]);
    g.add_edge(hub(1), *fan.last().expect("fan is nonempty"));
    for w in fan.windows(2) {
        g.add_edge(w[0], w[1]);
    }
    for (k, &v) in fan.iter().enumerate() {
        g.add_edge(POLE2, v);
        g.set_role(v, VertexRole::FanPath(3 + k as u8));
    }
}

/// Replaces pole `pole` (currently joined to its three rims) by a triangle:
/// `pole` keeps only h₃ʲ, while `extra[0]`, `extra[1]` take h₁ʲ, h₂ʲ.
fn truncate_pole(g: &mut Graph, pole: usize, extra: [usize; 2], j: usize, first_gadget: u8) {
    for (k, &t) in extra.iter().enumerate() {
        g.remove_edge(pole, rim(k + 1, j));
        g.add_edge(t, rim(k + 1, j));
        g.add_edge(t, pole);
        g.set_role(t, VertexRole::Gadget(first_gadget + k as u8));
    }
    g.add_edge(extra[0], extra[1]);
    g.set_role(pole, VertexRole::Gadget(first_gadget + 2));
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternId {
    K22,
    K25,
    K26,
    K34,
    K115,
    Qplus,
    Cube,
    Wheel(usize),
    K5,
    K33,
}

impl PatternId {
    pub fn name(self) -> String {
        match self {
            PatternId::K22 => "K22".into(),
            PatternId::K25 => "K25".into(),
            PatternId::K26 => "K26".into(),
            PatternId::K34 => "K34".into(),
            PatternId::K115 => "K115".into(),
            PatternId::Qplus => "Qplus".into(),
            PatternId::Cube => "Cube".into(),
            PatternId::Wheel(n) => format!("W{n}"),
            PatternId::K5 => "K5".into(),
            PatternId::K33 => "K33".into(),
        }
    }
}

impl FromStr for PatternId {
    type Err = Error;

    fn from_str(s: &str) -> Result<PatternId> {
        Ok(match s {
            "K22" => PatternId::K22,
            "K25" => PatternId::K25,
            "K26" => PatternId::K26,
            "K34" => PatternId::K34,
            "K115" => PatternId::K115,
            "Qplus" => PatternId::Qplus,
            "Cube" => PatternId::Cube,
            "K5" => PatternId::K5,
            "K33" => PatternId::K33,
            w if w.starts_with('W') => {
                let n = w[1..]
                    .parse()
                    .map_err(|_| Error::Argument(format!("unknown pattern `{s}`")))?;
                if !(4..=64).contains(&n) {
                    return arg_err("wheel order must be in 4..=64");
                }
                PatternId::Wheel(n)
            }
            _ => return arg_err(format!("unknown pattern `{s}`")),
        })
    }
}

pub fn pattern(id: PatternId) -> Graph {
    match id {
        PatternId::K22 => complete_bipartite(2, 2),
        PatternId::K25 => complete_bipartite(2, 5),
        PatternId::K26 => complete_bipartite(2, 6),
        PatternId::K34 => complete_bipartite(3, 4),
        PatternId::K115 => {
            let mut g = complete_bipartite(2, 5);
            g.add_edge(0, 1);
            g
        }
        PatternId::Qplus => {
            let mut g = Graph::new(9);
            for (u, v) in cube().edges() {
                g.add_edge(u, v);
            }
            for w in [1, 2, 4] {
                g.add_edge(8, w);
            }
            g
        }
        PatternId::Cube => cube(),
        PatternId::Wheel(n) => wheel(n),
        PatternId::K5 => complete(5),
        PatternId::K33 => complete_bipartite(3, 3),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureId {
    Fig6A,
}

impl FromStr for FixtureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FixtureId> {
        match s {
            "fig6_a" => Ok(FixtureId::Fig6A),
            _ => arg_err(format!("unknown fixture `{s}`")),
        }
    }
}

/// `Fig6A`: Herschel with edge h₁h₁¹ subdivided by a new vertex 11 that is
/// also joined to h₂.
pub fn fixture(id: FixtureId) -> Graph {
    match id {
        FixtureId::Fig6A => {
            let h = herschel();
            let mut g = Graph::new(12);
            for (u, v) in h.edges() {
                g.add_edge(u, v);
            }
            for v in 0..11 {
                if let Some(r) = h.role(v) {
                    g.set_role(v, r);
                }
            }
            g.remove_edge(hub(1), rim(1, 1));
            g.add_edge(hub(1), 11);
            g.add_edge(11, rim(1, 1));
            g.add_edge(11, hub(2));
            g
        }
    }
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// Sides are `0..a` and `a..a + b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    let mut g = path(n);
    if n >= 3 {
        g.add_edge(n - 1, 0);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

/// Wheel on `n` vertices: hub 0 joined to the rim cycle 1..n, so `wheel(4)`
/// is K₄.
pub fn wheel(n: usize) -> Graph {
    assert!(n >= 4, "wheels start at 4 vertices");
    let mut g = Graph::new(n);
    for v in 1..n {
        g.add_edge(0, v);
        g.add_edge(v, if v + 1 == n { 1 } else { v + 1 });
    }
    g
}

/// 3-cube with vertices 0..8 adjacent when they differ in one bit.
pub fn cube() -> Graph {
    let mut g = Graph::new(8);
    for v in 0..8 {
        for b in [1, 2, 4] {
            if v & b == 0 {
                g.add_edge(v, v | b);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_form, is_isomorphic};
    use alloc::string::ToString;

    #[test]
    fn herschel_shape() {
        let h = herschel();
        assert_eq!((h.order(), h.size()), (11, 18));
        let mut d = h.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(d, [4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 3]);
        assert_eq!(h.role(rim(2, 1)), Some(VertexRole::Rim(2, 1)));
        assert!(h.has_edge(hub(3), rim(3, 2)) && h.has_edge(hub(1), rim(3, 2)));
    }

    #[test]
    fn roles_are_unique() {
        for spec in [
            "bullet:11",
            "bullet:15:31",
            "circ:13:5",
            "circ:18",
            "h13",
            "h15",
        ] {
            let g = family_member(spec.parse().unwrap()).unwrap();
            let roles: Vec<VertexRole> = (0..g.order()).filter_map(|v| g.role(v)).collect();
            let mut dedup = roles.clone();
            dedup.sort_unstable_by_key(|r| format!("{r:?}"));
            dedup.dedup();
            assert_eq!(roles.len(), dedup.len(), "{spec}");
            assert_eq!(roles.len(), g.order(), "{spec}");
        }
    }

    #[test]
    fn family_sizes() {
        assert!(is_isomorphic(
            &family_member("bullet:11:0".parse().unwrap()).unwrap(),
            &herschel()
        ));
        for n in 11..=24 {
            let g = family_member(FamilySpec::skeleton(FamilyKind::Bullet, n).unwrap()).unwrap();
            assert_eq!((g.order(), g.size()), (n, 18 + 2 * (n - 11)));
        }
        for n in 13..=24 {
            let g = family_member(FamilySpec::skeleton(FamilyKind::Circ, n).unwrap()).unwrap();
            assert_eq!((g.order(), g.size()), (n, 18 + 2 * (n - 13) + 3));
        }
        assert_eq!(family_member("h13".parse().unwrap()).unwrap().size(), 21);
        assert_eq!(family_member("h15".parse().unwrap()).unwrap().size(), 24);
        let all = family_member("bullet:16:31".parse().unwrap()).unwrap();
        assert_eq!(all.size(), 28 + 5);
    }

    #[test]
    fn h13_is_bipartite_with_odd_order() {
        let g = family_member("h13".parse().unwrap()).unwrap();
        assert_eq!(g.is_bipartite().unwrap().sizes(), (6, 7));
    }

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "bullet:16:31".parse().unwrap();
        assert_eq!(
            s,
            FamilySpec {
                kind: FamilyKind::Bullet,
                n: 16,
                dashed_mask: 31
            }
        );
        assert_eq!(s.to_string(), "bullet:16:31");
        assert!("bullet:10".parse::<FamilySpec>().is_err());
        assert!("circ:12".parse::<FamilySpec>().is_err());
        assert!("h13:13:1".parse::<FamilySpec>().is_err());
        assert!("bullet:16:32".parse::<FamilySpec>().is_err());
        assert!("torus:16".parse::<FamilySpec>().is_err());
        assert_eq!("h15".parse::<FamilySpec>().unwrap().n, 15);
    }

    #[test]
    fn patterns() {
        let q = pattern(PatternId::Qplus);
        assert_eq!((q.order(), q.size()), (9, 15));
        let k26 = pattern(PatternId::K26);
        assert_eq!((k26.order(), k26.size()), (8, 12));
        let k115 = pattern(PatternId::K115);
        assert_eq!((k115.order(), k115.size()), (7, 11));
        assert_eq!(pattern(PatternId::Wheel(4)), complete(4));
        assert_eq!(
            canonical_form(&pattern(PatternId::Cube)).automorphism_count,
            48
        );
        assert_eq!("W7".parse::<PatternId>().unwrap(), PatternId::Wheel(7));
        assert!("K7".parse::<PatternId>().is_err());
        assert!("W3".parse::<PatternId>().is_err());
    }

    #[test]
    fn fig6_a_shape() {
        let f = fixture("fig6_a".parse().unwrap());
        assert_eq!((f.order(), f.size()), (12, 20));
        let mut h = herschel();
        h.remove_edge(hub(1), rim(1, 1));
        assert_eq!(f.delete_vertex(11), h);
        assert!("fig6_b".parse::<FixtureId>().is_err());
    }
}
