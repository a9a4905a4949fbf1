use crate::CliError;
use p3c_convexity::{is_independent, VertexSet};
use p3c_graph::Graph;
use p3c_oracle::is_irredundant;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Everything one command prints. Vertex ids are 1-based.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RunReport {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solver: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub independent: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violator: Option<usize>,
    /// 2-path ending in the violator.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hull: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parents: Option<BTreeMap<usize, [usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub boundary: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irredundant: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rows: Option<Vec<Row>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub explored: Option<u64>,
}

/// One line of a validation or benchmark table.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Row {
    pub label: String,
    pub n: usize,
    pub checked: usize,
    pub passed: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
}

pub fn one_based(s: &VertexSet) -> Vec<usize> {
    s.one_based()
}

impl RunReport {
    pub fn new(command: &str, input: &str) -> Self {
        RunReport {
            command: command.to_string(),
            input: input.to_string(),
            ..RunReport::default()
        }
    }

    /// Records a convexly independent witness after re-checking it.
    pub fn independent_witness(mut self, g: &Graph, witness: &VertexSet) -> Result<Self, CliError> {
        if !is_independent(g, witness.as_slice()) {
            return Err(CliError::Verification(format!(
                "witness {witness} is not convexly independent"
            )));
        }
        self.value = Some(witness.len());
        self.witness = Some(one_based(witness));
        Ok(self)
    }

    /// Records an irredundant witness after re-checking it.
    pub fn irredundant_witness(mut self, g: &Graph, witness: &VertexSet) -> Result<Self, CliError> {
        if !is_irredundant(g, witness).unwrap_or(false) {
            return Err(CliError::Verification(format!("witness {witness} is not irredundant")));
        }
        self.value = Some(witness.len());
        self.witness = Some(one_based(witness));
        Ok(self)
    }

    pub fn to_text(&self) -> String {
        if let Some(text) = &self.text {
            return text.clone();
        }
        let set = |v: &[usize]| format!("{{{}}}", v.iter().map(usize::to_string).collect::<Vec<_>>().join(","));
        let mut out = Vec::new();
        if let (Some(value), Some(solver)) = (self.value, &self.solver) {
            out.push(format!("{} {value} (solver {solver})", self.command));
        } else if let Some(value) = self.value {
            out.push(format!("{} {value}", self.command));
        }
        if let Some(w) = &self.witness {
            out.push(format!("witness {}", set(w)));
        }
        if let Some(h) = &self.hull {
            out.push(format!("hull {}", set(h)));
        }
        if let Some(order) = &self.order {
            let words: Vec<String> = order.iter().map(usize::to_string).collect();
            out.push(format!("order {}", words.join(" ")));
        }
        if let Some(parents) = &self.parents {
            for (v, [a, b]) in parents {
                out.push(format!("{v} <- {a} {b}"));
            }
        }
        match (self.independent, self.violator) {
            (Some(true), _) => out.push("independent".into()),
            (Some(false), Some(x)) => out.push(format!("dependent: violator {x}")),
            _ => {}
        }
        if let Some(c) = &self.certificate {
            let words: Vec<String> = c.iter().map(usize::to_string).collect();
            out.push(format!("2-path {}", words.join(" ")));
        }
        if let Some(b) = &self.boundary {
            out.push(format!("boundary {}", set(b)));
        }
        if let Some(irr) = self.irredundant {
            out.push(if irr { "irredundant" } else { "redundant" }.into());
        }
        if let Some(rows) = &self.rows {
            for r in rows {
                let mut line = format!("{} n={}: {}/{} ok", r.label, r.n, r.passed, r.checked);
                if let Some(v) = r.value {
                    line = format!("{} n={}: value {v}", r.label, r.n);
                }
                line.push_str(&format!(" ({:.1} ms)", r.elapsed_ms));
                if let Some(f) = &r.fixture {
                    line.push_str(&format!(" counterexample written to {f}"));
                }
                out.push(line);
            }
        }
        out.join("\n") + "\n"
    }
}
