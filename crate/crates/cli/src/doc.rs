//! Round-trip stable serialization of ideals and command results.

use serde::{Deserialize, Serialize};
use startrans_core::MonomialIdeal;

use crate::session::CliError;

/// The on-disk / on-wire form of a monomial ideal: dimension, variable
/// names, and the canonical generator rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealDoc {
    pub dim: usize,
    pub vars: Vec<String>,
    pub gens: Vec<Vec<u32>>,
}

impl IdealDoc {
    pub fn from_ideal(ideal: &MonomialIdeal, vars: &[String]) -> Self {
        Self {
            dim: ideal.dim(),
            vars: vars.to_vec(),
            gens: ideal.gens().iter().map(|g| g.exps().to_vec()).collect(),
        }
    }

    pub fn to_ideal(&self) -> Result<MonomialIdeal, CliError> {
        if self.vars.len() != self.dim {
            return Err(CliError::Doc(format!(
                "document lists {} variables for dimension {}",
                self.vars.len(),
                self.dim
            )));
        }
        for row in &self.gens {
            if row.len() != self.dim {
                return Err(CliError::Doc(format!(
                    "generator row of length {} in dimension {}",
                    row.len(),
                    self.dim
                )));
            }
        }
        MonomialIdeal::from_exponents(self.dim, self.gens.clone()).map_err(|e| CliError::Op {
            op: "deserialize".into(),
            input: None,
            source: e,
        })
    }
}

pub fn serialize(ideal: &MonomialIdeal, vars: &[String]) -> String {
    serde_json::to_string(&IdealDoc::from_ideal(ideal, vars)).expect("plain data")
}

pub fn deserialize(text: &str) -> Result<MonomialIdeal, CliError> {
    let doc: IdealDoc = serde_json::from_str(text)
        .map_err(|e| CliError::Doc(format!("malformed document: {e}")))?;
    doc.to_ideal()
}
