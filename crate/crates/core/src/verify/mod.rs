//! Checks of structural hypotheses and closed forms against computed values.

pub mod common;
pub mod formula;
pub mod reconcile;
pub mod report;
pub mod structure;

use std::fmt;

use crate::topology::TopologySpec;

pub use common::check_common_neighbor_lemma;
pub use formula::{formula_table, FormulaEntry, Quantity, Source};
pub use reconcile::reconcile;
pub use report::{Check, Status, VerificationReport};
pub use structure::{check_component_lemma, check_sufficient_conditions, Mode};

/// What a report is about: a built topology or a caller-named graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Subject {
    Topology(TopologySpec),
    Graph(String),
}

impl Subject {
    pub fn spec(&self) -> Option<&TopologySpec> {
        match self {
            Subject::Topology(s) => Some(s),
            Subject::Graph(_) => None,
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Topology(s) => write!(f, "{s}"),
            Subject::Graph(id) => f.write_str(id),
        }
    }
}
