use thiserror::Error;

/// Errors reported by the library. Row and column numbers in messages are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("projections need at least one row and one column (got {rows} rows, {cols} columns)")]
    EmptyProjections { rows: usize, cols: usize },
    #[error("row sum r_{index} = {value} is outside [1, {max}]")]
    RowSumOutOfRange {
        index: usize,
        value: usize,
        max: usize,
    },
    #[error("column sum c_{index} = {value} is outside [1, {max}]")]
    ColSumOutOfRange {
        index: usize,
        value: usize,
        max: usize,
    },
    #[error("grid is {grid_rows}x{grid_cols} but projections are {rows}x{cols}")]
    DimensionMismatch {
        grid_rows: usize,
        grid_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("grid has an empty row or column, so its projections are not positive")]
    NonPositiveProjection,
    #[error("anchor row {row} is outside [1, {max}]")]
    AnchorOutOfRange { row: usize, max: usize },
    #[error("literal refers to variable {variable} but the clause set has {count} variables")]
    VariableOutOfRange { variable: usize, count: usize },
    #[error("assignment has {got} values, expected {expected}")]
    AssignmentLength { got: usize, expected: usize },
    #[error("no row sum equals the width {cols}; the instance is not centered")]
    NotCentered { cols: usize },
    #[error("enumeration of a {rows}x{cols} box exceeds the budget")]
    BudgetExceeded { rows: usize, cols: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
