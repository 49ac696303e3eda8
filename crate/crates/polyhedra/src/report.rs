//! Campaign reports: JSON lines ending in a summary object, or CSV totals.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderTotals {
    pub n: usize,
    pub polyhedra: u64,
    pub non_hamiltonian: u64,
    pub k26_free_non_hamiltonian: u64,
    pub four_connected: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// The offending graph, when the failure is about a single graph.
    pub graph6: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub n_min: usize,
    pub n_max: usize,
    pub totals: Vec<OrderTotals>,
    pub counterexamples: Vec<Counterexample>,
    /// Campaign-specific lines (tallies, class lists, per-edge verdicts).
    pub details: Vec<Value>,
    pub notes: Vec<String>,
    pub version: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl CampaignReport {
    pub fn new(campaign: &str, n_min: usize, n_max: usize) -> CampaignReport {
        CampaignReport {
            campaign: campaign.into(),
            n_min,
            n_max,
            totals: Vec::new(),
            counterexamples: Vec::new(),
            details: Vec::new(),
            notes: Vec::new(),
            version: crate::VERSION.into(),
        }
    }

    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn fail(&mut self, graph6: Option<String>, reason: impl Into<String>) {
        self.counterexamples.push(Counterexample {
            graph6,
            reason: reason.into(),
        });
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        let mut line = |v: Value| {
            out.push_str(&v.to_string());
            out.push('\n');
        };
        for t in &self.totals {
            let mut v = serde_json::to_value(t).expect("totals serialize");
            v["kind"] = json!("order");
            line(v);
        }
        for d in &self.details {
            line(d.clone());
        }
        for c in &self.counterexamples {
            line(json!({"kind": "counterexample", "graph6": c.graph6, "reason": c.reason}));
        }
        line(json!({
            "kind": "summary",
            "campaign": self.campaign,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "holds": self.holds(),
            "counterexamples": self.counterexamples.len(),
            "notes": self.notes,
            "version": self.version,
        }));
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "campaign,n,polyhedra,non_hamiltonian,k26_free_non_hamiltonian,four_connected\n",
        );
        for t in &self.totals {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                self.campaign,
                t.n,
                t.polyhedra,
                t.non_hamiltonian,
                t.k26_free_non_hamiltonian,
                t.four_connected
            ));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json_lines(),
            Format::Csv => self.to_csv(),
        }
    }
}
