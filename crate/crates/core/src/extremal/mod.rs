//! Exhaustive search over tricyclic graphs and the verification harnesses
//! built on it.

mod enumerate;
mod lemmas;
pub mod random;
mod search;

use thiserror::Error;

use crate::families::FamilyError;
use crate::graph::GraphError;
use crate::spectra::SpectralError;

pub use enumerate::{
    enumerate_tricyclic, max_exhaustive_order, EnumerationQuery, TricyclicGraphs, EXHAUSTIVE_MAX_ORDER,
    HARD_MAX_ORDER, MAX_ORDER_ENV,
};
pub use lemmas::{is_w_tree, verify_lemma_properties, LemmaFailure, LemmaId, LemmaTrialReport, LEMMA_ALPHAS};
pub use search::{
    argmax_radius, argmax_radius_grid, structural_check, verify_corollary, verify_corollary_grid, verify_theorem,
    verify_theorem_grid, CorollaryReport, ExtremalReport, SearchOptions, StructuralReport, TheoremReport,
};

/// Graphs within this distance of the maximum count as maximizers.
pub const TIE_WINDOW: f64 = 1e-9;
/// Required gap for a strict comparison between spectral radii.
pub const STRICT_MARGIN: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the exhaustive-mode limit {max} (set ALPHA_EXTREMAL_MAX_N to override)")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order {0} is too small for a tricyclic graph")]
    OrderTooSmall(usize),
    #[error("parameters out of range: {0}")]
    Parameters(String),
    #[error("no graph matches the query")]
    Empty,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
