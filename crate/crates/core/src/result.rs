use std::time::Duration;

use crate::grid::BinaryGrid;

/// Anchor rows `(k, l)` of a successful hv run, 0-based. When `transposed`
/// is set the rows refer to the transposed instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Anchor {
    pub k: usize,
    pub l: usize,
    pub transposed: bool,
}

/// Counters gathered during one reconstruction.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stats {
    pub anchors_tried: usize,
    pub formulas_built: usize,
    pub clauses_generated: usize,
    pub solver_time: Duration,
    /// Loop iterations of the centered algorithm.
    pub iterations: usize,
    /// Number of valid balanced fronts that started a phase.
    pub phases: usize,
    /// Largest front set seen.
    pub max_fronts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Success {
        grid: BinaryGrid,
        anchor: Option<Anchor>,
    },
    Failure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconstructionResult {
    pub outcome: Outcome,
    pub stats: Stats,
}

impl ReconstructionResult {
    pub fn grid(&self) -> Option<&BinaryGrid> {
        match &self.outcome {
            Outcome::Success { grid, .. } => Some(grid),
            Outcome::Failure => None,
        }
    }

    pub fn into_grid(self) -> Option<BinaryGrid> {
        match self.outcome {
            Outcome::Success { grid, .. } => Some(grid),
            Outcome::Failure => None,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self.outcome, Outcome::Success { .. })
    }
}
