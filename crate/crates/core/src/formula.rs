//! The 2SAT encoding of "an hv-convex polyomino realization anchored at
//! `(k, l)`".
//!
//! The complement of the object is split into four corner regions, one
//! boolean per region and cell: `A` (upper-left), `B` (upper-right),
//! `C` (lower-left), `D` (lower-right). The clauses say that each region is
//! closed toward its corner, the regions are disjoint, opposite corners do not
//! touch diagonally, the two anchor cells are free, every column is at least
//! `c_j` tall and every row at most `r_i` wide. A literal indexed outside the
//! grid counts as true, so any clause mentioning one is dropped, except in
//! the column bounds where a missing lower cell forbids the upper one.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::grid::{BinaryGrid, Projections};
use crate::twosat::{Assignment, ClauseSet, Literal};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Region {
    /// Upper-left.
    A,
    /// Upper-right.
    B,
    /// Lower-left.
    C,
    /// Lower-right.
    D,
}

impl Region {
    pub const ALL: [Region; 4] = [Region::A, Region::B, Region::C, Region::D];

    pub fn rank(self) -> usize {
        self as usize
    }

    fn from_rank(rank: usize) -> Region {
        Region::ALL[rank]
    }

    pub fn symbol(self) -> char {
        match self {
            Region::A => 'A',
            Region::B => 'B',
            Region::C => 'C',
            Region::D => 'D',
        }
    }
}

/// One corner-region variable. `row` and `col` are 0-based.
///
/// The flat index is `((rank * m + row) * n + col)` with `A = 0 .. D = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CornerVar {
    pub region: Region,
    pub row: usize,
    pub col: usize,
}

impl CornerVar {
    pub fn new(region: Region, row: usize, col: usize) -> Self {
        CornerVar { region, row, col }
    }

    pub fn index(self, height: usize, width: usize) -> usize {
        (self.region.rank() * height + self.row) * width + self.col
    }

    /// Inverse of [`CornerVar::index`]; `None` if `index >= 4mn`.
    pub fn from_index(index: usize, height: usize, width: usize) -> Option<Self> {
        let cells = height * width;
        if index >= 4 * cells {
            return None;
        }
        let region = Region::from_rank(index / cells);
        let rest = index % cells;
        Some(CornerVar {
            region,
            row: rest / width,
            col: rest % width,
        })
    }
}

impl fmt::Display for CornerVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{},{}]",
            self.region.symbol(),
            self.row + 1,
            self.col + 1
        )
    }
}

/// How many disjointness clauses to emit per cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DisjointnessMode {
    /// All six region pairs.
    #[default]
    Full,
    /// Only `A/B` and `C/D`; the remaining pairs follow from the column
    /// lower bounds.
    Reduced,
}

/// Number of variables in the formula for an `m x n` instance.
pub fn variable_count(height: usize, width: usize) -> usize {
    4 * height * width
}

struct Builder {
    height: usize,
    width: usize,
    clauses: ClauseSet,
}

impl Builder {
    fn lit(&self, region: Region, row: isize, col: isize, positive: bool) -> Option<Literal> {
        if row < 0 || col < 0 || row as usize >= self.height || col as usize >= self.width {
            return None;
        }
        let var = CornerVar::new(region, row as usize, col as usize);
        Some(Literal::new(var.index(self.height, self.width), positive))
    }

    fn pair(&mut self, a: Option<Literal>, b: Option<Literal>) {
        if let (Some(a), Some(b)) = (a, b) {
            self.clauses.add_pair(a, b);
        }
    }

    /// `x => y`
    fn implies(&mut self, x: Option<Literal>, y: Option<Literal>) {
        self.pair(x.map(Literal::negate), y);
    }

    fn unit(&mut self, a: Option<Literal>) {
        if let Some(a) = a {
            self.clauses.add_unit(a);
        }
    }
}

/// Build the formula for projections `p` and anchor rows `k`, `l` (0-based):
/// satisfiable iff `p` has an hv-convex polyomino realization containing the
/// cells `(k, 0)` and `(l, n - 1)`.
///
/// Balance of `p` is not checked here.
pub fn build_formula(
    p: &Projections,
    k: usize,
    l: usize,
    mode: DisjointnessMode,
) -> Result<ClauseSet> {
    use Region::{A, B, C, D};

    let (m, n) = (p.height(), p.width());
    for row in [k, l] {
        if row >= m {
            return Err(Error::AnchorOutOfRange {
                row: row + 1,
                max: m,
            });
        }
    }
    let mut b = Builder {
        height: m,
        width: n,
        clauses: ClauseSet::with_capacity(variable_count(m, n), 24 * m * n + 2 * n + 8),
    };
    let (mi, ni) = (m as isize, n as isize);
    let (ki, li) = (k as isize, l as isize);

    // corners
    for i in 0..mi {
        for j in 0..ni {
            let x = |b: &Builder, r| b.lit(r, i, j, true);
            let (a, bb, c, d) = (x(&b, A), x(&b, B), x(&b, C), x(&b, D));
            let t = b.lit(A, i - 1, j, true);
            b.implies(a, t);
            let t = b.lit(A, i, j - 1, true);
            b.implies(a, t);
            let t = b.lit(B, i - 1, j, true);
            b.implies(bb, t);
            let t = b.lit(B, i, j + 1, true);
            b.implies(bb, t);
            let t = b.lit(C, i + 1, j, true);
            b.implies(c, t);
            let t = b.lit(C, i, j - 1, true);
            b.implies(c, t);
            let t = b.lit(D, i + 1, j, true);
            b.implies(d, t);
            let t = b.lit(D, i, j + 1, true);
            b.implies(d, t);
        }
    }

    // disjointness
    let pairs: &[(Region, Region)] = match mode {
        DisjointnessMode::Full => &[(A, B), (A, C), (A, D), (B, C), (B, D), (C, D)],
        DisjointnessMode::Reduced => &[(A, B), (C, D)],
    };
    for i in 0..mi {
        for j in 0..ni {
            for &(x, y) in pairs {
                let (nx, ny) = (b.lit(x, i, j, false), b.lit(y, i, j, false));
                b.pair(nx, ny);
            }
        }
    }

    // connectivity
    for i in 0..mi {
        for j in 0..ni {
            let (a, nd) = (b.lit(A, i, j, true), b.lit(D, i + 1, j + 1, false));
            b.implies(a, nd);
            let (bb, nc) = (b.lit(B, i, j, true), b.lit(C, i + 1, j - 1, false));
            b.implies(bb, nc);
        }
    }

    // anchors
    for (row, col) in [(ki, 0), (li, ni - 1)] {
        for r in Region::ALL {
            let lit = b.lit(r, row, col, false);
            b.unit(lit);
        }
    }

    // column lower bounds; cells below the grid belong to C and D, so an
    // upper cell with fewer than c_j rows beneath it is ruled out
    for i in 0..mi {
        for (j, &cj) in p.cols().iter().enumerate() {
            let (j, below) = (j as isize, i + cj as isize);
            for upper in [A, B] {
                if below >= mi {
                    let lit = b.lit(upper, i, j, false);
                    b.unit(lit);
                    continue;
                }
                for lower in [C, D] {
                    let (x, y) = (b.lit(upper, i, j, true), b.lit(lower, below, j, false));
                    b.implies(x, y);
                }
            }
        }
    }
    for (j, &cj) in p.cols().iter().enumerate() {
        for lower in [C, D] {
            let lit = b.lit(lower, cj as isize - 1, j as isize, false);
            b.unit(lit);
        }
    }

    // row upper bounds
    let (lo, hi) = (ki.min(li), ki.max(li));
    for j in 0..ni {
        for (i, &ri) in p.rows().iter().enumerate() {
            let (i, right) = (i as isize, j + ri as isize);
            let bound = |b: &mut Builder, left: Region, far: Region| {
                let (x, y) = (b.lit(left, i, j, false), b.lit(far, i, right, true));
                b.implies(x, y);
            };
            if i <= lo {
                bound(&mut b, A, B);
            }
            if ki <= i && i <= li {
                bound(&mut b, C, B);
            }
            if li <= i && i <= ki {
                bound(&mut b, A, D);
            }
            if i >= hi {
                bound(&mut b, C, D);
            }
        }
    }

    Ok(b.clauses)
}

fn check_len(a: &Assignment, height: usize, width: usize) -> Result<()> {
    let expected = variable_count(height, width);
    if a.len() != expected {
        return Err(Error::AssignmentLength {
            got: a.len(),
            expected,
        });
    }
    Ok(())
}

/// The object left over once all four corner regions are removed.
pub fn extract_object(a: &Assignment, height: usize, width: usize) -> Result<BinaryGrid> {
    Ok(corner_assignment_of(a, height, width)?.object())
}

/// Unpack a flat assignment into the four region matrices.
pub fn corner_assignment_of(
    a: &Assignment,
    height: usize,
    width: usize,
) -> Result<CornerAssignment> {
    check_len(a, height, width)?;
    let cells = height * width;
    let values = a.values();
    let region = |r: Region| {
        let start = r.rank() * cells;
        BinaryGrid::from_cells(height, width, values[start..start + cells].to_vec())
    };
    Ok(CornerAssignment {
        a: region(Region::A),
        b: region(Region::B),
        c: region(Region::C),
        d: region(Region::D),
    })
}

/// Four `m x n` region matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerAssignment {
    pub a: BinaryGrid,
    pub b: BinaryGrid,
    pub c: BinaryGrid,
    pub d: BinaryGrid,
}

impl CornerAssignment {
    pub fn empty(height: usize, width: usize) -> Self {
        let g = BinaryGrid::new(height, width);
        CornerAssignment {
            a: g.clone(),
            b: g.clone(),
            c: g.clone(),
            d: g,
        }
    }

    pub fn height(&self) -> usize {
        self.a.height()
    }

    pub fn width(&self) -> usize {
        self.a.width()
    }

    pub fn region(&self, r: Region) -> &BinaryGrid {
        match r {
            Region::A => &self.a,
            Region::B => &self.b,
            Region::C => &self.c,
            Region::D => &self.d,
        }
    }

    fn region_mut(&mut self, r: Region) -> &mut BinaryGrid {
        match r {
            Region::A => &mut self.a,
            Region::B => &mut self.b,
            Region::C => &mut self.c,
            Region::D => &mut self.d,
        }
    }

    /// Split the complement of an hv-convex polyomino whose rows and columns
    /// are all nonempty into its four corner regions. A free cell left of its
    /// row's interval goes to `A` or `C`, right of it to `B` or `D`; above
    /// its column's interval means `A`/`B`, below means `C`/`D`.
    pub fn from_hv_polyomino(g: &BinaryGrid) -> Result<Self> {
        let (m, n) = (g.height(), g.width());
        let row_span = spans((0..m).map(|i| g.row(i).to_vec()));
        let col_span = spans((0..n).map(|j| (0..m).map(|i| g.get(i, j)).collect()));
        let (Some(row_span), Some(col_span)) = (row_span, col_span) else {
            return Err(Error::NonPositiveProjection);
        };
        let mut out = CornerAssignment::empty(m, n);
        for (i, &(row_first, _)) in row_span.iter().enumerate() {
            for (j, &(col_first, _)) in col_span.iter().enumerate() {
                if g.get(i, j) {
                    continue;
                }
                let left = j < row_first;
                let upper = i < col_first;
                let region = match (upper, left) {
                    (true, true) => Region::A,
                    (true, false) => Region::B,
                    (false, true) => Region::C,
                    (false, false) => Region::D,
                };
                out.region_mut(region).set(i, j, true);
            }
        }
        Ok(out)
    }

    /// Complement of the union of the four regions.
    pub fn object(&self) -> BinaryGrid {
        let (m, n) = (self.height(), self.width());
        let cells = (0..m * n)
            .map(|idx| {
                !(self.a.cells()[idx]
                    || self.b.cells()[idx]
                    || self.c.cells()[idx]
                    || self.d.cells()[idx])
            })
            .collect();
        BinaryGrid::from_cells(m, n, cells)
    }

    /// Flat assignment in the formula's variable layout.
    pub fn to_assignment(&self) -> Assignment {
        let mut values = Vec::with_capacity(variable_count(self.height(), self.width()));
        for r in Region::ALL {
            values.extend_from_slice(self.region(r).cells());
        }
        Assignment::new(values)
    }

    /// Each region is closed toward its own corner.
    pub fn is_closed(&self) -> bool {
        let (m, n) = (self.height(), self.width());
        let closed = |g: &BinaryGrid, up: bool, left: bool| {
            (0..m).all(|i| {
                (0..n).all(|j| {
                    if !g.get(i, j) {
                        return true;
                    }
                    let vertical = if up {
                        i == 0 || g.get(i - 1, j)
                    } else {
                        i + 1 == m || g.get(i + 1, j)
                    };
                    let horizontal = if left {
                        j == 0 || g.get(i, j - 1)
                    } else {
                        j + 1 == n || g.get(i, j + 1)
                    };
                    vertical && horizontal
                })
            })
        };
        closed(&self.a, true, true)
            && closed(&self.b, true, false)
            && closed(&self.c, false, true)
            && closed(&self.d, false, false)
    }

    pub fn is_disjoint(&self) -> bool {
        let cells = self.height() * self.width();
        (0..cells).all(|idx| {
            Region::ALL
                .iter()
                .filter(|&&r| self.region(r).cells()[idx])
                .count()
                <= 1
        })
    }

    /// Opposite corners never meet diagonally: `A` at `(i-1, j-1)` excludes
    /// `D` at `(i, j)`, and `B` at `(i-1, j+1)` excludes `C` at `(i, j)`.
    pub fn opposite_corners_apart(&self) -> bool {
        let (m, n) = (self.height(), self.width());
        (1..m).all(|i| {
            (0..n).all(|j| {
                let ad = j == 0 || !(self.a.get(i - 1, j - 1) && self.d.get(i, j));
                let bc = j + 1 == n || !(self.b.get(i - 1, j + 1) && self.c.get(i, j));
                ad && bc
            })
        })
    }
}

/// First and last filled index of each line; `None` if some line is empty.
fn spans(lines: impl Iterator<Item = Vec<bool>>) -> Option<Vec<(usize, usize)>> {
    lines
        .map(|line| {
            let first = line.iter().position(|&c| c)?;
            let last = line.iter().rposition(|&c| c)?;
            Some((first, last))
        })
        .collect()
}

/// One clause per line, e.g. `!A[1,2] | B[1,4]`, coordinates 1-based.
pub fn dump_clauses(f: &ClauseSet, height: usize, width: usize) -> String {
    let mut out = String::new();
    for clause in f.clauses() {
        let parts: Vec<String> = clause
            .literals()
            .map(|lit| literal_name(lit, height, width))
            .collect();
        let _ = writeln!(out, "{}", parts.join(" | "));
    }
    out
}

/// `A[2,3]` or `!D[1,4]`.
pub fn literal_name(lit: Literal, height: usize, width: usize) -> String {
    let var = CornerVar::from_index(lit.variable(), height, width)
        .map_or_else(|| format!("x{}", lit.variable()), |v| v.to_string());
    if lit.is_positive() {
        var
    } else {
        format!("!{var}")
    }
}
