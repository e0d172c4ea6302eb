//! Binary grids, projection vectors and the geometric predicates used to
//! validate every reconstruction.
//!
//! Cells are addressed with 0-based `(row, col)` pairs. Anything printed for a
//! human (error messages, traces) uses 1-based numbering.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Row sums `r` (length `m`) and column sums `c` (length `n`).
///
/// Construction enforces `m, n >= 1`, `r_i` in `[1, n]` and `c_j` in `[1, m]`.
/// The totals are allowed to differ; see [`Projections::is_balanced`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Projections {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl Projections {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptyProjections {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        let (m, n) = (rows.len(), cols.len());
        if let Some((i, &r)) = rows.iter().enumerate().find(|&(_, &r)| r == 0 || r > n) {
            return Err(Error::RowSumOutOfRange {
                index: i + 1,
                value: r,
                max: n,
            });
        }
        if let Some((j, &c)) = cols.iter().enumerate().find(|&(_, &c)| c == 0 || c > m) {
            return Err(Error::ColSumOutOfRange {
                index: j + 1,
                value: c,
                max: m,
            });
        }
        Ok(Projections { rows, cols })
    }

    /// Projections of `grid`. Fails if some row or column is empty.
    pub fn of_grid(grid: &BinaryGrid) -> Result<Self> {
        let rows = grid.row_sums();
        let cols = grid.col_sums();
        if rows.contains(&0) || cols.contains(&0) {
            return Err(Error::NonPositiveProjection);
        }
        Projections::new(rows, cols)
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.cols.len()
    }

    pub fn row_total(&self) -> usize {
        self.rows.iter().sum()
    }

    pub fn col_total(&self) -> usize {
        self.cols.iter().sum()
    }

    /// True when the row and column totals agree, a necessary condition for
    /// any realization.
    pub fn is_balanced(&self) -> bool {
        self.row_total() == self.col_total()
    }

    /// Index of the first full row (`r_k = n`), if any.
    pub fn first_full_row(&self) -> Option<usize> {
        let n = self.width();
        self.rows.iter().position(|&r| r == n)
    }

    pub fn is_centered(&self) -> bool {
        self.first_full_row().is_some()
    }

    /// Swap the roles of rows and columns.
    pub fn transpose(&self) -> Projections {
        Projections {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
        }
    }
}

impl fmt::Display for Projections {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r=(")?;
        write_list(f, &self.rows)?;
        write!(f, ") c=(")?;
        write_list(f, &self.cols)?;
        write!(f, ")")
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, values: &[usize]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// An `m x n` 0-1 matrix; `true` marks a cell of the object.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryGrid {
    height: usize,
    width: usize,
    cells: Vec<bool>,
}

impl BinaryGrid {
    /// An empty grid.
    pub fn new(height: usize, width: usize) -> Self {
        BinaryGrid {
            height,
            width,
            cells: vec![false; height * width],
        }
    }

    pub fn full(height: usize, width: usize) -> Self {
        BinaryGrid {
            height,
            width,
            cells: vec![true; height * width],
        }
    }

    /// Build a grid from row-major cells.
    ///
    /// # Panics
    /// If `cells.len() != height * width`.
    pub fn from_cells(height: usize, width: usize, cells: Vec<bool>) -> Self {
        assert_eq!(
            cells.len(),
            height * width,
            "cell count does not match shape"
        );
        BinaryGrid {
            height,
            width,
            cells,
        }
    }

    /// Parse rows of `#` (filled) and `.` (empty). All rows must have equal
    /// length; returns `None` otherwise or on any other character.
    pub fn from_ascii_rows<S: AsRef<str>>(rows: &[S]) -> Option<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.as_ref().chars().count());
        let mut cells = Vec::with_capacity(height * width);
        for row in rows {
            let row = row.as_ref();
            if row.chars().count() != width {
                return None;
            }
            for ch in row.chars() {
                match ch {
                    '#' => cells.push(true),
                    '.' => cells.push(false),
                    _ => return None,
                }
            }
        }
        Some(BinaryGrid {
            height,
            width,
            cells,
        })
    }

    /// Grid whose row `i` is the interval `[starts[i], starts[i] + lengths[i])`.
    ///
    /// # Panics
    /// If the slices differ in length or an interval leaves the grid.
    pub fn from_intervals(width: usize, starts: &[usize], lengths: &[usize]) -> Self {
        assert_eq!(starts.len(), lengths.len());
        let mut grid = BinaryGrid::new(starts.len(), width);
        for (i, (&s, &len)) in starts.iter().zip(lengths).enumerate() {
            assert!(
                s + len <= width,
                "interval of row {} leaves the grid",
                i + 1
            );
            grid.cells[i * width + s..i * width + s + len].fill(true);
        }
        grid
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.height && col < self.width, "cell out of bounds");
        self.cells[row * self.width + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.height && col < self.width, "cell out of bounds");
        self.cells[row * self.width + col] = value;
    }

    pub fn row(&self, row: usize) -> &[bool] {
        &self.cells[row * self.width..(row + 1) * self.width]
    }

    pub fn cells(&self) -> &[bool] {
        &self.cells
    }

    pub fn count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.cells.contains(&true)
    }

    pub fn transpose(&self) -> BinaryGrid {
        let mut out = BinaryGrid::new(self.width, self.height);
        for i in 0..self.height {
            for j in 0..self.width {
                out.cells[j * self.height + i] = self.cells[i * self.width + j];
            }
        }
        out
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.height)
            .map(|i| self.row(i).iter().filter(|&&c| c).count())
            .collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        let mut sums = vec![0; self.width];
        for row in self.cells.chunks(self.width.max(1)) {
            for (s, &c) in sums.iter_mut().zip(row) {
                *s += usize::from(c);
            }
        }
        sums
    }

    /// Filled cells of every row are consecutive. Empty rows count as convex.
    pub fn is_h_convex(&self) -> bool {
        (0..self.height).all(|i| is_single_run(self.row(i).iter().copied()))
    }

    /// Filled cells of every column are consecutive. Empty columns count as convex.
    pub fn is_v_convex(&self) -> bool {
        (0..self.width).all(|j| is_single_run((0..self.height).map(|i| self.get(i, j))))
    }

    /// The filled cells form one 4-connected component. False for an empty grid.
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.cells.iter().position(|&c| c) else {
            return false;
        };
        let (m, n) = (self.height, self.width);
        let mut seen = vec![false; m * n];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut reached = 0usize;
        while let Some(idx) = queue.pop_front() {
            reached += 1;
            let (i, j) = (idx / n, idx % n);
            let mut visit = |ni: usize, nj: usize| {
                let nidx = ni * n + nj;
                if self.cells[nidx] && !seen[nidx] {
                    seen[nidx] = true;
                    queue.push_back(nidx);
                }
            };
            if i > 0 {
                visit(i - 1, j);
            }
            if i + 1 < m {
                visit(i + 1, j);
            }
            if j > 0 {
                visit(i, j - 1);
            }
            if j + 1 < n {
                visit(i, j + 1);
            }
        }
        reached == self.count()
    }

    pub fn is_hv_convex_polyomino(&self) -> bool {
        !self.is_empty() && self.is_h_convex() && self.is_v_convex() && self.is_connected()
    }

    /// Whether the grid's projections are exactly `p`.
    ///
    /// A shape mismatch is an error rather than `false`.
    pub fn is_realization(&self, p: &Projections) -> Result<bool> {
        if self.height != p.height() || self.width != p.width() {
            return Err(Error::DimensionMismatch {
                grid_rows: self.height,
                grid_cols: self.width,
                rows: p.height(),
                cols: p.width(),
            });
        }
        Ok(self.row_sums() == p.rows() && self.col_sums() == p.cols())
    }
}

fn is_single_run(mut cells: impl Iterator<Item = bool>) -> bool {
    // skip leading empties, consume the run, then nothing may be filled
    let mut in_run = false;
    for c in cells.by_ref() {
        if c {
            in_run = true;
        } else if in_run {
            break;
        }
    }
    !cells.any(|c| c)
}

impl fmt::Display for BinaryGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.height {
            for &c in self.row(i) {
                f.write_str(if c { "#" } else { "." })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryGrid {}x{}", self.height, self.width)?;
        fmt::Display::fmt(self, f)
    }
}
