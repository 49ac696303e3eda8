//! Per-graph property records and their certificates.

use std::collections::BTreeMap;

use polyhedra_core::catalog::{
    family_member, herschel, pattern, FamilyKind, FamilySpec, PatternId,
};
use polyhedra_core::hamilton::{find_hamilton_cycle, HamWitness, HamiltonVerdict};
use polyhedra_core::minor::{find_minor_model, find_spanning_subgraph, MinorModel};
use polyhedra_core::structure::{is_polyhedral, vertex_connectivity, CutWitness};
use polyhedra_core::{bits::Bits, to_graph6, Bipartition, Graph};
use serde::{Deserialize, Serialize};

/// Minor flag keys, in the order they are computed.
pub const HERSCHEL: &str = "herschel";
pub const K25: &str = "K25";
pub const K26: &str = "K26";
pub const K115: &str = "K115";
pub const MINOR_KEYS: [&str; 4] = [HERSCHEL, K25, K26, K115];

pub fn minor_pattern(key: &str) -> Option<Graph> {
    match key {
        HERSCHEL => Some(herschel()),
        _ => key.parse::<PatternId>().ok().map(pattern),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessRecord {
    BipartiteOdd {
        side_a: Vec<usize>,
        side_b: Vec<usize>,
    },
    Separator {
        cut: Vec<usize>,
        components: Vec<Vec<usize>>,
    },
    Exhausted,
}

fn mask(vs: &[usize]) -> Option<u64> {
    vs.iter()
        .try_fold(0u64, |m, &v| (v < 64).then(|| m | 1 << v))
}

impl WitnessRecord {
    pub fn from_witness(w: &HamWitness) -> WitnessRecord {
        match w {
            HamWitness::BipartiteOdd(bp) => WitnessRecord::BipartiteOdd {
                side_a: Bits(bp.side_a).collect(),
                side_b: Bits(bp.side_b).collect(),
            },
            HamWitness::Separator(cw) => WitnessRecord::Separator {
                cut: cw.cut_vertices(),
                components: cw.components.iter().map(|&c| Bits(c).collect()).collect(),
            },
            HamWitness::Exhausted => WitnessRecord::Exhausted,
        }
    }

    pub fn to_witness(&self) -> Option<HamWitness> {
        Some(match self {
            WitnessRecord::BipartiteOdd { side_a, side_b } => {
                HamWitness::BipartiteOdd(Bipartition {
                    side_a: mask(side_a)?,
                    side_b: mask(side_b)?,
                })
            }
            WitnessRecord::Separator { cut, components } => HamWitness::Separator(CutWitness {
                cut: mask(cut)?,
                components: components.iter().map(|c| mask(c)).collect::<Option<_>>()?,
            }),
            WitnessRecord::Exhausted => HamWitness::Exhausted,
        })
    }
}

/// A spanning copy of a family skeleton: `map[i]` is the host vertex of
/// skeleton vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyWitness {
    pub member: String,
    pub map: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub polyhedral: bool,
    pub connectivity: usize,
    pub hamiltonian: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ham_witness: Option<WitnessRecord>,
    pub minor_flags: BTreeMap<String, bool>,
    /// Minor models in text form, one per positive flag.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub certificates: BTreeMap<String, String>,
    /// Set for non-hamiltonian K₂,₆-free polyhedra that span a family skeleton.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyWitness>,
}

/// Skeletons (no dashed edges) of every family member on `n` vertices.
pub fn skeletons(n: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for kind in [
        FamilyKind::Bullet,
        FamilyKind::Circ,
        FamilyKind::H13,
        FamilyKind::H15,
    ] {
        if let Ok(spec) = FamilySpec::skeleton(kind, n) {
            out.push(spec);
        }
    }
    out
}

/// First skeleton of order `g.order()` contained in `g` as a spanning subgraph.
pub fn spanning_family(g: &Graph) -> Option<FamilyWitness> {
    skeletons(g.order()).into_iter().find_map(|spec| {
        let sk = family_member(spec).ok()?;
        let map = find_spanning_subgraph(g, &sk).ok()??;
        Some(FamilyWitness {
            member: spec.to_string(),
            map,
        })
    })
}

impl PropertyRecord {
    /// Computes everything from scratch.
    pub fn compute(g: &Graph) -> PropertyRecord {
        let polyhedral = is_polyhedral(g);
        let verdict = find_hamilton_cycle(g).expect("at least three vertices");
        Self::with_verdict(g, polyhedral, verdict)
    }

    /// Completes a record for a graph whose polyhedrality and hamiltonicity
    /// are already known.
    pub fn with_verdict(g: &Graph, polyhedral: bool, verdict: HamiltonVerdict) -> PropertyRecord {
        let connectivity = vertex_connectivity(g).map(|(k, _)| k).unwrap_or(0);
        let mut minor_flags = BTreeMap::new();
        let mut certificates = BTreeMap::new();
        for key in MINOR_KEYS {
            let pat = minor_pattern(key).expect("known key");
            let model = find_minor_model(g, &pat);
            minor_flags.insert(key.to_string(), model.is_some());
            if let Some(m) = model {
                certificates.insert(key.to_string(), m.to_text());
            }
        }
        let hamiltonian = verdict.is_hamiltonian();
        let family = if polyhedral && !hamiltonian && !minor_flags[K26] {
            spanning_family(g)
        } else {
            None
        };
        PropertyRecord {
            graph6: to_graph6(g),
            n: g.order(),
            m: g.size(),
            polyhedral,
            connectivity,
            hamiltonian,
            cycle: verdict.cycle,
            ham_witness: verdict.witness.as_ref().map(WitnessRecord::from_witness),
            minor_flags,
            certificates,
            family,
        }
    }

    pub fn flag(&self, key: &str) -> Option<bool> {
        self.minor_flags.get(key).copied()
    }

    pub fn is_k26_free(&self) -> bool {
        self.flag(K26) == Some(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Parses a stored certificate.
pub fn parse_model(text: &str) -> Option<MinorModel> {
    MinorModel::parse_text(text).ok()
}
