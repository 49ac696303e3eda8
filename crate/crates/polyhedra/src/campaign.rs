//! Verification campaigns over surveys and family constructions.
//!
//! Campaigns collect every counterexample instead of stopping at the first.

use std::collections::BTreeMap;

use anyhow::{bail, Result};
use polyhedra_core::catalog::{
    family_member, herschel, pattern, FamilyKind, FamilySpec, PatternId,
};
use polyhedra_core::hamilton::find_hamilton_cycle;
use polyhedra_core::minor::has_minor;
use polyhedra_core::structure::{is_3_connected, is_polyhedral};
use polyhedra_core::{canonical_form, to_graph6};
use rayon::prelude::*;
use serde_json::json;

use crate::cert::cert_verify;
use crate::record::{skeletons, HERSCHEL, K115, K25};
use crate::report::{CampaignReport, OrderTotals};
use crate::survey::{survey, OrderSurvey, SurveyOptions};

/// Cumulative count of non-hamiltonian K₂,₆-free polyhedra below 15 vertices.
pub const K26_FREE_BELOW_15: u64 = 206;
/// Classes per order from the dashed-edge variants, for n >= 16.
pub const FORTY: usize = 40;

pub const EDGE_MINIMAL_READING: &str =
    "edge-minimal: every single-edge deletion leaves the class; since deletion keeps planarity, \
     non-hamiltonicity and K2,6-freeness, this is checked as: the skeleton minus the edge is not 3-connected";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Campaign {
    Theorem1,
    Family,
    Forty,
    Cross,
    EdgeMinimal,
}

pub fn totals(s: &OrderSurvey) -> OrderTotals {
    OrderTotals {
        n: s.n,
        polyhedra: s.polyhedra,
        non_hamiltonian: s.non_hamiltonian.len() as u64,
        k26_free_non_hamiltonian: s.k26_free().count() as u64,
        four_connected: s.four_connected,
    }
}

fn bounds(surveys: &BTreeMap<usize, OrderSurvey>) -> (usize, usize) {
    let lo = surveys.keys().next().copied().unwrap_or(0);
    let hi = surveys.keys().next_back().copied().unwrap_or(0);
    (lo, hi)
}

fn check_certificates(report: &mut CampaignReport, s: &OrderSurvey) {
    for r in &s.non_hamiltonian {
        if !cert_verify(r) {
            report.fail(Some(r.graph6.clone()), "stored certificate rejected");
        }
    }
}

/// Every non-hamiltonian polyhedron has a Herschel minor.
pub fn theorem1(surveys: &BTreeMap<usize, OrderSurvey>) -> CampaignReport {
    let (lo, hi) = bounds(surveys);
    let mut report = CampaignReport::new("theorem1", lo, hi);
    for s in surveys.values() {
        report.totals.push(totals(s));
        for r in &s.non_hamiltonian {
            if r.flag(HERSCHEL) != Some(true) {
                report.fail(
                    Some(r.graph6.clone()),
                    "non-hamiltonian without a Herschel minor",
                );
            }
        }
        check_certificates(&mut report, s);
    }
    report
}

/// Every non-hamiltonian K₂,₆-free polyhedron spans a family skeleton.
pub fn family_theorem(surveys: &BTreeMap<usize, OrderSurvey>) -> Result<CampaignReport> {
    let (lo, hi) = bounds(surveys);
    if lo < 11 {
        bail!("the family check needs n >= 11");
    }
    let mut report = CampaignReport::new("family", lo, hi);
    for s in surveys.values() {
        report.totals.push(totals(s));
        let mut matched: BTreeMap<String, u64> = BTreeMap::new();
        for r in s.k26_free() {
            match &r.family {
                Some(f) => *matched.entry(f.member.clone()).or_default() += 1,
                None => report.fail(Some(r.graph6.clone()), "no spanning family skeleton"),
            }
        }
        let candidates: Vec<String> = skeletons(s.n).iter().map(ToString::to_string).collect();
        report.details.push(
            json!({"kind": "family_match", "n": s.n, "candidates": candidates, "matched": matched}),
        );
        check_certificates(&mut report, s);
    }
    Ok(report)
}

/// Known consequences: K₂,₅ and (except Herschel) K₁,₁,₅ minors in every
/// non-hamiltonian polyhedron, and no 4-connected non-hamiltonian one.
pub fn cross_check(surveys: &BTreeMap<usize, OrderSurvey>) -> CampaignReport {
    let (lo, hi) = bounds(surveys);
    let mut report = CampaignReport::new("cross", lo, hi);
    let herschel_key = canonical_form(&herschel()).canonical_string;
    for s in surveys.values() {
        report.totals.push(totals(s));
        let mut exempt = 0;
        for r in &s.non_hamiltonian {
            let g6 = Some(r.graph6.clone());
            if r.flag(K25) != Some(true) {
                report.fail(g6.clone(), "non-hamiltonian without a K2,5 minor");
            }
            let g = polyhedra_core::parse_graph6(&r.graph6).expect("stored graph6 parses");
            if canonical_form(&g).canonical_string == herschel_key {
                exempt += 1;
            } else if r.flag(K115) != Some(true) {
                report.fail(
                    g6.clone(),
                    "non-hamiltonian, not Herschel, without a K1,1,5 minor",
                );
            }
            if r.connectivity >= 4 {
                report.fail(g6, "4-connected but non-hamiltonian");
            }
        }
        report.details.push(json!({
            "kind": "cross",
            "n": s.n,
            "four_connected_checked": s.four_connected,
            "herschel_exempt": exempt,
        }));
        check_certificates(&mut report, s);
    }
    report
}

/// Per-order counts of non-hamiltonian K₂,₆-free polyhedra from order 4.
pub fn tally_k26free(surveys: &BTreeMap<usize, OrderSurvey>) -> CampaignReport {
    let (lo, hi) = bounds(surveys);
    let mut report = CampaignReport::new("tally_k26free", lo, hi);
    let mut cumulative = 0u64;
    for s in surveys.values() {
        let t = totals(s);
        cumulative += t.k26_free_non_hamiltonian;
        report.details.push(json!({
            "kind": "tally",
            "n": s.n,
            "count": t.k26_free_non_hamiltonian,
            "cumulative": cumulative,
        }));
        report.totals.push(t);
        if cumulative > K26_FREE_BELOW_15 {
            report.fail(
                None,
                format!(
                    "cumulative {cumulative} exceeds {K26_FREE_BELOW_15} at n = {}",
                    s.n
                ),
            );
        }
    }
    if hi == 14 && lo == 4 && cumulative != K26_FREE_BELOW_15 {
        report.fail(
            None,
            format!("cumulative {cumulative} through n = 14, expected {K26_FREE_BELOW_15}"),
        );
    }
    if hi < 14 {
        report.notes.push(format!(
            "the total of {K26_FREE_BELOW_15} is only compared once the tally reaches n = 14"
        ));
    }
    report
}

/// Qualifying classes among the 64 dashed-edge variants of bullet and circ
/// on `n` vertices: canonical graph6 and the specs producing each class.
pub fn family_classes(n: usize) -> Result<BTreeMap<String, Vec<String>>> {
    if n < 16 {
        bail!("the class count is stated for n >= 16");
    }
    let specs: Vec<FamilySpec> = [FamilyKind::Bullet, FamilyKind::Circ]
        .into_iter()
        .flat_map(|k| (0..32u8).map(move |mask| FamilySpec::new(k, n, mask)))
        .collect::<polyhedra_core::Result<_>>()?;
    let k26 = pattern(PatternId::K26);
    let qualifying: Vec<Option<(String, String)>> = specs
        .par_iter()
        .map(|&spec| {
            let g = family_member(spec).expect("validated spec");
            let ok = is_polyhedral(&g)
                && !find_hamilton_cycle(&g)
                    .expect("order >= 3")
                    .is_hamiltonian()
                && !has_minor(&g, &k26);
            ok.then(|| (canonical_form(&g).canonical_string, spec.to_string()))
        })
        .collect();
    let mut classes: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (key, spec) in qualifying.into_iter().flatten() {
        classes.entry(key).or_default().push(spec);
    }
    Ok(classes)
}

pub fn count_family_forty(n: usize) -> Result<CampaignReport> {
    let classes = family_classes(n)?;
    let mut report = CampaignReport::new("forty", n, n);
    let members: usize = classes.values().map(Vec::len).sum();
    report.details.push(json!({"kind": "pool", "n": n, "candidates": 64, "qualifying": members, "classes": classes.len()}));
    for (rep, specs) in &classes {
        report
            .details
            .push(json!({"kind": "class", "graph6": rep, "members": specs}));
    }
    if classes.len() != FORTY {
        report.fail(
            None,
            format!("{} classes at n = {n}, expected {FORTY}", classes.len()),
        );
    }
    Ok(report)
}

pub fn edge_minimality(n: usize) -> Result<CampaignReport> {
    let specs = skeletons(n);
    if specs.is_empty() {
        bail!("no family skeleton on {n} vertices");
    }
    let mut report = CampaignReport::new("edge_minimal", n, n);
    report.notes.push(EDGE_MINIMAL_READING.into());
    let k26 = pattern(PatternId::K26);
    for spec in specs {
        let g = family_member(spec)?;
        let in_class =
            is_polyhedral(&g) && !find_hamilton_cycle(&g)?.is_hamiltonian() && !has_minor(&g, &k26);
        if !in_class {
            report.fail(
                Some(to_graph6(&g)),
                format!("{spec} is not a non-hamiltonian K2,6-free polyhedron"),
            );
        }
        let mut still = 0;
        for (u, v) in g.edges() {
            let h = g.delete_edge(u, v)?;
            let three = is_3_connected(&h);
            if three {
                still += 1;
                report.fail(
                    Some(to_graph6(&h)),
                    format!("{spec} minus {u}-{v} is still 3-connected"),
                );
            }
        }
        report.details.push(json!({
            "kind": "edge_minimal",
            "member": spec.to_string(),
            "edges": g.size(),
            "still_3_connected": still,
        }));
    }
    Ok(report)
}

/// Surveys `n` (or reuses the cache) and runs one campaign.
pub fn run_campaign(campaign: Campaign, n: usize, opts: &SurveyOptions) -> Result<CampaignReport> {
    match campaign {
        Campaign::Forty => count_family_forty(n),
        Campaign::EdgeMinimal => edge_minimality(n),
        Campaign::Family if !(11..=14).contains(&n) => {
            bail!("the family check runs for 11 <= n <= 14")
        }
        _ => {
            let surveys = survey(n..=n, opts)?;
            match campaign {
                Campaign::Theorem1 => Ok(theorem1(&surveys)),
                Campaign::Family => family_theorem(&surveys),
                _ => Ok(cross_check(&surveys)),
            }
        }
    }
}

pub fn run_tally(max: usize, opts: &SurveyOptions) -> Result<CampaignReport> {
    Ok(tally_k26free(&survey(4..=max, opts)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nothing_below_eleven() {
        let surveys = survey(4..=10, &SurveyOptions::default()).unwrap();
        let r = theorem1(&surveys);
        assert!(r.holds());
        assert!(r.totals.iter().all(|t| t.non_hamiltonian == 0));
        let t = tally_k26free(&surveys);
        assert!(t.holds());
        assert_eq!(t.details.last().unwrap()["cumulative"], 0);
        assert!(family_theorem(&surveys).is_err());
    }

    #[test]
    fn edge_minimal_skeletons() {
        for n in [11, 13, 16] {
            let r = edge_minimality(n).unwrap();
            assert!(r.holds(), "{n}: {:?}", r.counterexamples);
            assert_eq!(r.notes, [EDGE_MINIMAL_READING]);
        }
        let r = edge_minimality(11).unwrap();
        assert_eq!(r.details[0]["edges"], 18);
        assert!(edge_minimality(10).is_err());
    }

    #[test]
    fn forty_guard_and_pool() {
        assert!(count_family_forty(15).is_err());
        let r = count_family_forty(16).unwrap();
        assert!(r.holds());
        assert_eq!(r.details[0]["candidates"], 64);
        assert_eq!(r.details.len(), 1 + FORTY);
    }
}
