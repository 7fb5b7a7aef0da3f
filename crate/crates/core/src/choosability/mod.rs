//! Exhaustive `[f,k]`-choosability deciders, criticality checks, the
//! polynomial recognizers, and the gadget property verifier.

use thiserror::Error;

use crate::listcolor::ListColorError;

mod decide;
mod enumerate;
mod recognize;
mod verify;

pub use decide::{is_critical, is_fk_choosable, ChoosabilityVerdict, CriticalityReport};
pub use enumerate::{
    enumerate_assignments, AssignmentIter, AssignmentSpace, SymmetryTables, MAX_SYMMETRY_PALETTE,
};
pub use recognize::{
    decide_23_3_ch_bipartite, recognize_23_choosable, recognize_2_choosable, Verdict23,
};
pub use verify::{verify_gadget_properties, GadgetProperty, PropertyReport, PropertyResult};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChooseError {
    #[error("vertex {0:?} has no required list size")]
    MissingSize(String),
    #[error("f({vertex:?}) = {size} outside palette 1..={palette}")]
    SizeOutsidePalette {
        vertex: String,
        size: u8,
        palette: u8,
    },
    #[error("bad palette {0}")]
    BadPalette(u8),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("budget exceeded after examining {examined} assignments")]
    BudgetExceeded { examined: u64 },
    #[error("bad criticality subset: {0}")]
    BadCriticalSubset(String),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("gadget is missing role {0:?}")]
    MissingRole(String),
    #[error(transparent)]
    List(#[from] ListColorError),
}

/// Knobs shared by the exhaustive deciders.
#[derive(Debug, Clone)]
pub struct ChooseOptions {
    /// Prune to canonical representatives under palette permutations.
    pub symmetry: bool,
    /// Cap on enumerated candidate assignments before giving up.
    pub budget: u64,
    /// Worker threads; 1 runs strictly sequentially. Verdicts and witnesses
    /// are identical for every setting.
    pub jobs: usize,
}

impl Default for ChooseOptions {
    fn default() -> Self {
        ChooseOptions {
            symmetry: true,
            budget: 100_000_000,
            jobs: 1,
        }
    }
}
