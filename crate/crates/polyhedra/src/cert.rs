//! Re-checking stored certificates.

use anyhow::{Context, Result};
use polyhedra_core::catalog::family_member;
use polyhedra_core::hamilton::{verify_cycle, verify_witness};
use polyhedra_core::minor::verify_minor_model;
use polyhedra_core::parse_graph6;

use crate::record::{minor_pattern, parse_model, PropertyRecord};

pub fn parse_record(line: &str) -> Result<PropertyRecord> {
    serde_json::from_str(line).context("malformed property record")
}

/// True iff every certificate in the record checks against its graph and
/// every positive minor flag carries one.
pub fn cert_verify(rec: &PropertyRecord) -> bool {
    let Ok(g) = parse_graph6(&rec.graph6) else {
        return false;
    };
    if g.order() != rec.n || g.size() != rec.m {
        return false;
    }
    if rec.hamiltonian {
        match &rec.cycle {
            Some(c) if verify_cycle(&g, c) => {}
            _ => return false,
        }
    } else {
        if rec.cycle.is_some() {
            return false;
        }
        if let Some(w) = &rec.ham_witness {
            match w.to_witness() {
                Some(w) if verify_witness(&g, &w) => {}
                _ => return false,
            }
        }
    }
    for (key, &flag) in &rec.minor_flags {
        let cert = rec.certificates.get(key);
        if !flag {
            if cert.is_some() {
                return false;
            }
            continue;
        }
        let (Some(pat), Some(text)) = (minor_pattern(key), cert) else {
            return false;
        };
        match parse_model(text) {
            Some(m) if verify_minor_model(&g, &pat, &m) => {}
            _ => return false,
        }
    }
    if rec
        .certificates
        .keys()
        .any(|k| !rec.minor_flags.contains_key(k))
    {
        return false;
    }
    if let Some(fw) = &rec.family {
        let Some(sk) = fw.member.parse().ok().and_then(|s| family_member(s).ok()) else {
            return false;
        };
        if fw.map.len() != sk.order() || sk.order() != g.order() {
            return false;
        }
        let mut seen = 0u64;
        for &v in &fw.map {
            if v >= g.order() || seen >> v & 1 == 1 {
                return false;
            }
            seen |= 1 << v;
        }
        if !sk.edges().all(|(a, b)| g.has_edge(fw.map[a], fw.map[b])) {
            return false;
        }
    }
    true
}
