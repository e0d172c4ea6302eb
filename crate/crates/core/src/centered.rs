//! Linear-time reconstruction of centered hv-convex polyominoes, i.e.
//! instances with a full row `r_k = n`.
//!
//! A realization is described by the left ends `t_i` of its row intervals.
//! Starting from the full row, rows are added one at a time on whichever
//! side has the larger row sum (ties go up). A partial solution over rows
//! `[p, q]` keeps the window `[alpha, beta]` between its first and last
//! unsaturated columns; every column outside the window must already hold
//! exactly `c_j` cells. The next row can only start at `alpha` or end at
//! `beta`, so each partial solution has at most two extensions, and at most
//! two partial solutions (the *fronts*) are alive at any time.
//!
//! A front is *balanced* when the window lies inside both end rows. All
//! window columns then carry `q - p + 1` cells and the front is *valid* when
//! no window column is exceeded. Once a valid balanced front exists, every
//! other front can be dropped.
//!
//! Two implementations live here. [`PartialRealization`] recomputes
//! everything from scratch at each step and serves as the reference.
//! [`solve_centered`] is the O(m + n) engine: rows added since the last
//! valid balanced front (the *base*) are kept per front, column counts are
//! derived from the nesting of row intervals, and the minimum `c_j` over the
//! window comes from a list of active columns sorted by `c_j`.

use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{BinaryGrid, Projections};
use crate::result::{Outcome, ReconstructionResult, Stats};

/// Left ends of the row intervals, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TVector(Vec<usize>);

impl TVector {
    pub fn new(starts: Vec<usize>) -> Self {
        TVector(starts)
    }

    pub fn starts(&self) -> &[usize] {
        &self.0
    }

    pub fn to_grid(&self, p: &Projections) -> BinaryGrid {
        BinaryGrid::from_intervals(p.width(), &self.0, p.rows())
    }
}

impl fmt::Display for TVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", t + 1)?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Add row `p - 1`.
    Above,
    /// Add row `q + 1`.
    Below,
}

/// Which side to grow `[p, q]` on: up when `q` is the last row or
/// `r_{p-1} >= r_{q+1}`, down otherwise.
pub fn next_side(rows: &[usize], p: usize, q: usize) -> Side {
    debug_assert!(p > 0 || q + 1 < rows.len());
    if q + 1 == rows.len() || (p > 0 && rows[p - 1] >= rows[q + 1]) {
        Side::Above
    } else {
        Side::Below
    }
}

fn full_row(p: &Projections) -> Result<usize> {
    p.first_full_row()
        .ok_or(Error::NotCentered { cols: p.width() })
}

// ---------------------------------------------------------------------------
// reference implementation

/// A partial solution over rows `[p, q]`, recomputed from scratch on every
/// extension. Quadratic overall; used to cross-check the linear engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialRealization {
    center: usize,
    first_row: usize,
    starts: Vec<usize>,
    col_sums: Vec<usize>,
    window: Option<(usize, usize)>,
}

impl PartialRealization {
    /// The full row `k` on its own.
    pub fn seed(p: &Projections, k: usize) -> Result<Self> {
        if p.rows().get(k) != Some(&p.width()) {
            return Err(Error::NotCentered { cols: p.width() });
        }
        let col_sums = vec![1; p.width()];
        let window = unsaturated_window(&col_sums, p.cols());
        Ok(PartialRealization {
            center: k,
            first_row: k,
            starts: vec![0],
            col_sums,
            window,
        })
    }

    pub fn first_row(&self) -> usize {
        self.first_row
    }

    pub fn last_row(&self) -> usize {
        self.first_row + self.starts.len() - 1
    }

    pub fn start(&self, row: usize) -> usize {
        self.starts[row - self.first_row]
    }

    pub fn col_sums(&self) -> &[usize] {
        &self.col_sums
    }

    /// First and last unsaturated column; `None` when every column is full.
    pub fn window(&self) -> Option<(usize, usize)> {
        self.window
    }

    /// All rows placed and every column sum met.
    pub fn is_complete(&self, p: &Projections) -> bool {
        self.starts.len() == p.height() && self.col_sums == p.cols()
    }

    pub fn to_tvector(&self) -> TVector {
        TVector(self.starts.clone())
    }

    fn ends(&self, p: &Projections) -> ((usize, usize), (usize, usize)) {
        let (top, bottom) = (self.first_row, self.last_row());
        (
            (self.start(top), p.rows()[top]),
            (self.start(bottom), p.rows()[bottom]),
        )
    }

    pub fn is_balanced(&self, p: &Projections) -> bool {
        let Some((alpha, beta)) = self.window else {
            return false;
        };
        let ((tp, rp), (tq, rq)) = self.ends(p);
        tp.max(tq) <= alpha && beta < (tp + rp).min(tq + rq)
    }

    /// No column strictly inside the window exceeds its target.
    pub fn is_valid(&self, p: &Projections) -> bool {
        let Some((alpha, beta)) = self.window else {
            return true;
        };
        (alpha + 1..beta).all(|j| self.col_sums[j] <= p.cols()[j])
    }

    /// The extensions of this front by one row on `side`.
    pub fn extend(&self, p: &Projections, side: Side) -> Vec<PartialRealization> {
        let Some((alpha, beta)) = self.window else {
            return Vec::new();
        };
        if self.is_balanced(p) && !self.is_valid(p) {
            return Vec::new();
        }
        let row = match side {
            Side::Above if self.first_row > 0 => self.first_row - 1,
            Side::Below if self.last_row() + 1 < p.height() => self.last_row() + 1,
            _ => return Vec::new(),
        };
        let len = p.rows()[row];
        let mut candidates = vec![alpha];
        if let Some(right) = (beta + 1).checked_sub(len) {
            if right != alpha {
                candidates.push(right);
            }
        }
        candidates
            .into_iter()
            .filter_map(|t| self.with_row(p, side, row, t))
            .collect()
    }

    fn with_row(&self, p: &Projections, side: Side, row: usize, t: usize) -> Option<Self> {
        let len = p.rows()[row];
        if t + len > p.width() {
            return None;
        }
        let mut next = self.clone();
        match side {
            Side::Above => {
                next.first_row -= 1;
                next.starts.insert(0, t);
            }
            Side::Below => next.starts.push(t),
        }
        for s in &mut next.col_sums[t..t + len] {
            *s += 1;
        }
        next.window = unsaturated_window(&next.col_sums, p.cols());
        next.is_partial_realization(p).then_some(next)
    }

    /// Checks every defining condition of a partial solution directly.
    fn is_partial_realization(&self, p: &Projections) -> bool {
        let (rows, cols, n) = (p.rows(), p.cols(), p.width());
        for (offset, &t) in self.starts.iter().enumerate() {
            let i = self.first_row + offset;
            if t + rows[i] > n {
                return false;
            }
            // vertical convexity toward the center row
            let toward = match i.cmp(&self.center) {
                std::cmp::Ordering::Less => i + 1,
                std::cmp::Ordering::Greater => i - 1,
                std::cmp::Ordering::Equal => continue,
            };
            let (tn, rn) = (self.start(toward), rows[toward]);
            if !(tn <= t && t + rows[i] <= tn + rn) {
                return false;
            }
        }
        match self.window {
            None => self.col_sums == cols,
            Some((alpha, beta)) => {
                let ((tp, rp), (tq, rq)) = self.ends(p);
                let outside_exact = (0..n)
                    .filter(|&j| j < alpha || j > beta)
                    .all(|j| self.col_sums[j] == cols[j]);
                tp.min(tq) <= alpha && beta < (tp + rp).max(tq + rq) && outside_exact
            }
        }
    }
}

fn unsaturated_window(col_sums: &[usize], cols: &[usize]) -> Option<(usize, usize)> {
    let unsaturated = |j: &usize| col_sums[*j] < cols[*j];
    let alpha = (0..cols.len()).find(unsaturated)?;
    let beta = (0..cols.len()).rev().find(unsaturated)?;
    Some((alpha, beta))
}

/// Straightforward quadratic driver over [`PartialRealization`].
pub fn reconstruct_centered_reference(p: &Projections) -> Result<Option<TVector>> {
    let k = full_row(p)?;
    if !p.is_balanced() {
        return Ok(None);
    }
    let m = p.height();
    let seed = PartialRealization::seed(p, k)?;
    let mut fronts = vec![seed];
    let (mut top, mut bottom) = (k, k);
    while (top, bottom) != (0, m - 1) {
        let side = next_side(p.rows(), top, bottom);
        match side {
            Side::Above => top -= 1,
            Side::Below => bottom += 1,
        }
        fronts = match fronts.iter().find(|x| x.is_balanced(p) && x.is_valid(p)) {
            Some(x) => x.extend(p, side),
            None => fronts.iter().flat_map(|x| x.extend(p, side)).collect(),
        };
        assert!(
            fronts.len() <= 2,
            "more than two fronts at rows {top}..{bottom}"
        );
        if fronts.is_empty() {
            return Ok(None);
        }
    }
    Ok(fronts
        .iter()
        .find(|x| x.is_complete(p))
        .map(PartialRealization::to_tvector))
}

// ---------------------------------------------------------------------------
// linear engine

/// One loop iteration of the engine, for execution traces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub top: usize,
    pub bottom: usize,
    pub fronts: Vec<FrontState>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontState {
    pub top_start: usize,
    pub bottom_start: usize,
    pub window: Option<(usize, usize)>,
    pub balanced: bool,
    /// Only known for balanced fronts.
    pub valid: Option<bool>,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} q={}", self.top + 1, self.bottom + 1)?;
        if self.fronts.is_empty() {
            return write!(f, " no fronts");
        }
        for front in &self.fronts {
            write!(
                f,
                " | t_p={} t_q={}",
                front.top_start + 1,
                front.bottom_start + 1
            )?;
            match front.window {
                Some((a, b)) => write!(f, " alpha={} beta={}", a + 1, b + 1)?,
                None => write!(f, " complete")?,
            }
            if front.balanced {
                write!(f, " balanced")?;
            }
            match front.valid {
                Some(true) => write!(f, " valid")?,
                Some(false) => write!(f, " invalid")?,
                None => {}
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct CenteredOptions {
    pub trace: bool,
}

#[derive(Debug, Clone, Default)]
pub struct CenteredSolution {
    pub tvector: Option<TVector>,
    pub stats: Stats,
    pub trace: Vec<TraceStep>,
}

const NIL: usize = usize::MAX;

/// Doubly linked list of the columns in the base window, ordered by `c_j`.
struct ActiveColumns {
    next: Vec<usize>,
    prev: Vec<usize>,
    head: usize,
}

impl ActiveColumns {
    /// Bucket sort of `alpha..=beta` by `c_j` (values in `1..=m`).
    fn new(cols: &[usize], height: usize, alpha: usize, beta: usize) -> Self {
        let n = cols.len();
        let mut bucket_start = vec![0usize; height + 2];
        for &c in &cols[alpha..=beta] {
            bucket_start[c + 1] += 1;
        }
        for v in 1..bucket_start.len() {
            bucket_start[v] += bucket_start[v - 1];
        }
        let mut order = vec![0usize; beta - alpha + 1];
        for j in alpha..=beta {
            let slot = &mut bucket_start[cols[j]];
            order[*slot] = j;
            *slot += 1;
        }
        let mut next = vec![NIL; n];
        let mut prev = vec![NIL; n];
        for w in order.windows(2) {
            next[w[0]] = w[1];
            prev[w[1]] = w[0];
        }
        ActiveColumns {
            next,
            prev,
            head: order[0],
        }
    }

    fn remove(&mut self, j: usize) {
        let (p, n) = (self.prev[j], self.next[j]);
        if p == NIL {
            self.head = n;
        } else {
            self.next[p] = n;
        }
        if n != NIL {
            self.prev[n] = p;
        }
        self.prev[j] = NIL;
        self.next[j] = NIL;
    }
}

/// Rows a front added on one side since the base, outermost last. Rows on
/// one side are nested, so a column's count is the number of leading rows
/// that cover it. Counts of columns that have dropped out of the innermost
/// row are frozen into `left`/`right`, indexed from the base window edges.
#[derive(Debug, Clone, Default)]
struct Chain {
    starts: Vec<usize>,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Chain {
    fn count(&self, j: usize, alpha0: usize, beta0: usize) -> usize {
        if j < alpha0 + self.left.len() {
            self.left[j - alpha0]
        } else if j + self.right.len() > beta0 {
            self.right[beta0 - j]
        } else {
            self.starts.len()
        }
    }

    fn push(&mut self, start: usize, len: usize, alpha0: usize, beta0: usize) {
        let depth = self.starts.len();
        while alpha0 + self.left.len() < start {
            self.left.push(depth);
        }
        while beta0 + 1 - self.right.len() > start + len {
            self.right.push(depth);
        }
        self.starts.push(start);
    }
}

#[derive(Debug, Clone)]
struct Front {
    up: Chain,
    down: Chain,
    window: Option<(usize, usize)>,
    cursor: usize,
}

/// The last valid balanced front: rows `top..=bottom` are committed and
/// every column in `alpha..=beta` holds exactly `bottom - top + 1` cells.
#[derive(Debug, Clone, Copy)]
struct Base {
    top: usize,
    bottom: usize,
    alpha: usize,
    beta: usize,
}

enum Placement {
    Window(usize, usize),
    Complete,
}

struct Engine<'a> {
    rows: &'a [usize],
    cols: &'a [usize],
    starts: Vec<usize>,
    base: Base,
    active: ActiveColumns,
}

impl Engine<'_> {
    fn height(&self) -> usize {
        self.rows.len()
    }

    fn col_sum(&self, front: &Front, j: usize) -> usize {
        let Base {
            top,
            bottom,
            alpha,
            beta,
        } = self.base;
        bottom - top + 1 + front.up.count(j, alpha, beta) + front.down.count(j, alpha, beta)
    }

    fn top_row(&self, front: &Front) -> usize {
        self.base.top - front.up.starts.len()
    }

    fn bottom_row(&self, front: &Front) -> usize {
        self.base.bottom + front.down.starts.len()
    }

    /// `(start, length)` of the top and bottom rows of `front`.
    fn ends(&self, front: &Front) -> ((usize, usize), (usize, usize)) {
        let top = self.top_row(front);
        let bottom = self.bottom_row(front);
        let top_start = front
            .up
            .starts
            .last()
            .copied()
            .unwrap_or(self.starts[self.base.top]);
        let bottom_start = front
            .down
            .starts
            .last()
            .copied()
            .unwrap_or(self.starts[self.base.bottom]);
        (
            (top_start, self.rows[top]),
            (bottom_start, self.rows[bottom]),
        )
    }

    fn is_balanced(&self, front: &Front) -> bool {
        let Some((alpha, beta)) = front.window else {
            return false;
        };
        let ((tp, rp), (tq, rq)) = self.ends(front);
        tp.max(tq) <= alpha && beta < (tp + rp).min(tq + rq)
    }

    /// For a balanced front: every window column holds `q - p + 1` cells,
    /// so validity reduces to the smallest `c_j` in the window.
    fn is_valid(&self, front: &mut Front) -> bool {
        let (alpha, beta) = front.window.expect("validity of a complete front");
        let mut cur = front.cursor;
        while !(alpha..=beta).contains(&cur) {
            cur = self.active.next[cur];
            assert!(cur != NIL, "active column list exhausted");
        }
        front.cursor = cur;
        let height = self.bottom_row(front) - self.top_row(front) + 1;
        height <= self.cols[cur]
    }

    fn base_front(&self) -> Front {
        Front {
            up: Chain::default(),
            down: Chain::default(),
            window: Some((self.base.alpha, self.base.beta)),
            cursor: self.active.head,
        }
    }

    /// Check whether `front` plus a row at `start` on `side` is still a
    /// partial solution, and return its window if so.
    fn place(&self, front: &Front, side: Side, start: usize) -> Option<Placement> {
        let (alpha, beta) = front.window?;
        let row = match side {
            Side::Above => self.top_row(front) - 1,
            Side::Below => self.bottom_row(front) + 1,
        };
        let len = self.rows[row];
        let end = start + len; // exclusive
        if end > self.cols.len() || start < alpha || end > beta + 1 {
            return None;
        }
        let ((tp, rp), (tq, rq)) = self.ends(front);
        let (seam_start, seam_len) = match side {
            Side::Above => (tp, rp),
            Side::Below => (tq, rq),
        };
        if start < seam_start || end > seam_start + seam_len {
            return None;
        }
        let sum = |j: usize| self.col_sum(front, j) + usize::from((start..end).contains(&j));

        let mut new_alpha = alpha;
        while new_alpha <= beta {
            let (s, c) = (sum(new_alpha), self.cols[new_alpha]);
            if s < c {
                break;
            }
            if s > c {
                return None;
            }
            new_alpha += 1;
        }
        let (new_top, new_bottom) = match side {
            Side::Above => (row, self.bottom_row(front)),
            Side::Below => (self.top_row(front), row),
        };
        if new_alpha > beta {
            let full = new_top == 0 && new_bottom + 1 == self.height();
            return full.then_some(Placement::Complete);
        }
        let mut new_beta = beta;
        loop {
            let (s, c) = (sum(new_beta), self.cols[new_beta]);
            if s < c {
                break;
            }
            if s > c {
                return None;
            }
            new_beta -= 1;
        }
        let ((tp, rp), (tq, rq)) = match side {
            Side::Above => ((start, len), (tq, rq)),
            Side::Below => ((tp, rp), (start, len)),
        };
        let ok = tp.min(tq) <= new_alpha && new_beta < (tp + rp).max(tq + rq);
        ok.then_some(Placement::Window(new_alpha, new_beta))
    }

    fn extend(&self, front: &Front, side: Side, out: &mut Vec<Front>) {
        let Some((alpha, beta)) = front.window else {
            return;
        };
        let row = match side {
            Side::Above => self.top_row(front) - 1,
            Side::Below => self.bottom_row(front) + 1,
        };
        let len = self.rows[row];
        let mut candidates = [Some(alpha), None];
        if let Some(right) = (beta + 1).checked_sub(len) {
            if right != alpha {
                candidates[1] = Some(right);
            }
        }
        let (alpha0, beta0) = (self.base.alpha, self.base.beta);
        for start in candidates.into_iter().flatten() {
            let Some(placement) = self.place(front, side, start) else {
                continue;
            };
            let mut next = front.clone();
            match side {
                Side::Above => next.up.push(start, len, alpha0, beta0),
                Side::Below => next.down.push(start, len, alpha0, beta0),
            }
            next.window = match placement {
                Placement::Window(a, b) => {
                    debug_assert!(a >= alpha && b <= beta, "window grew");
                    Some((a, b))
                }
                Placement::Complete => None,
            };
            out.push(next);
        }
    }

    /// Make `front` the new base.
    fn commit(&mut self, front: &Front) {
        let (alpha, beta) = front.window.expect("committing a complete front");
        for (d, &s) in front.up.starts.iter().enumerate() {
            self.starts[self.base.top - 1 - d] = s;
        }
        for (d, &s) in front.down.starts.iter().enumerate() {
            self.starts[self.base.bottom + 1 + d] = s;
        }
        for j in (self.base.alpha..alpha).chain(beta + 1..=self.base.beta) {
            self.active.remove(j);
        }
        self.base = Base {
            top: self.top_row(front),
            bottom: self.bottom_row(front),
            alpha,
            beta,
        };
    }

    fn tvector(&self, front: &Front) -> TVector {
        let mut starts = self.starts.clone();
        for (d, &s) in front.up.starts.iter().enumerate() {
            starts[self.base.top - 1 - d] = s;
        }
        for (d, &s) in front.down.starts.iter().enumerate() {
            starts[self.base.bottom + 1 + d] = s;
        }
        TVector(starts)
    }

    fn snapshot(&self, fronts: &mut [Front], top: usize, bottom: usize) -> TraceStep {
        let mut states = Vec::with_capacity(fronts.len());
        for front in fronts.iter_mut() {
            let ((tp, _), (tq, _)) = self.ends(front);
            let balanced = self.is_balanced(front);
            let valid = balanced.then(|| self.is_valid(front));
            states.push(FrontState {
                top_start: tp,
                bottom_start: tq,
                window: front.window,
                balanced,
                valid,
            });
        }
        TraceStep {
            top,
            bottom,
            fronts: states,
        }
    }
}

/// Run the linear engine and return the left-end vector of a realization,
/// if any. The grid itself is not materialized.
pub fn solve_centered(p: &Projections, options: &CenteredOptions) -> Result<CenteredSolution> {
    let k = full_row(p)?;
    let mut solution = CenteredSolution::default();
    if !p.is_balanced() {
        return Ok(solution);
    }
    let (rows, cols) = (p.rows(), p.cols());
    let m = p.height();

    // seed: the full row, every column at one cell
    let Some((alpha, beta)) = unsaturated_window(&vec![1; cols.len()], cols) else {
        // every column is done after the full row
        let fronts = if m == 1 {
            solution.tvector = Some(TVector(vec![0]));
            solution.stats.max_fronts = 1;
            vec![FrontState {
                top_start: 0,
                bottom_start: 0,
                window: None,
                balanced: false,
                valid: None,
            }]
        } else {
            Vec::new()
        };
        if options.trace {
            solution.trace.push(TraceStep {
                top: k,
                bottom: k,
                fronts,
            });
        }
        return Ok(solution);
    };
    let mut engine = Engine {
        rows,
        cols,
        starts: vec![0; m],
        base: Base {
            top: k,
            bottom: k,
            alpha,
            beta,
        },
        active: ActiveColumns::new(cols, m, alpha, beta),
    };
    let mut fronts = vec![engine.base_front()];
    let mut next_fronts = Vec::with_capacity(4);
    let stats = &mut solution.stats;
    stats.max_fronts = 1;
    if options.trace {
        let step = engine.snapshot(&mut fronts, k, k);
        solution.trace.push(step);
    }
    let (mut top, mut bottom) = (k, k);
    while (top, bottom) != (0, m - 1) {
        stats.iterations += 1;
        let side = next_side(rows, top, bottom);
        match side {
            Side::Above => top -= 1,
            Side::Below => bottom += 1,
        }

        let mut chosen = None;
        for (idx, front) in fronts.iter_mut().enumerate() {
            if engine.is_balanced(front) && engine.is_valid(front) {
                chosen = Some(idx);
                break;
            }
        }
        next_fronts.clear();
        if let Some(idx) = chosen {
            stats.phases += 1;
            engine.commit(&fronts[idx]);
            let base = engine.base_front();
            engine.extend(&base, side, &mut next_fronts);
        } else {
            for front in fronts.iter_mut() {
                if engine.is_balanced(front) && !engine.is_valid(front) {
                    continue;
                }
                engine.extend(front, side, &mut next_fronts);
            }
        }
        std::mem::swap(&mut fronts, &mut next_fronts);
        assert!(
            fronts.len() <= 2,
            "{} fronts at rows {}..{}",
            fronts.len(),
            top + 1,
            bottom + 1
        );
        stats.max_fronts = stats.max_fronts.max(fronts.len());
        if options.trace {
            let step = engine.snapshot(&mut fronts, top, bottom);
            solution.trace.push(step);
        }
        if fronts.is_empty() {
            return Ok(solution);
        }
    }
    solution.tvector = fronts
        .iter()
        .find(|f| f.window.is_none())
        .map(|f| engine.tvector(f));
    Ok(solution)
}

/// Reconstruct a centered instance. Fails with [`Error::NotCentered`] when
/// no row sum equals the width.
pub fn reconstruct_centered(p: &Projections) -> Result<ReconstructionResult> {
    let solution = solve_centered(p, &CenteredOptions::default())?;
    let outcome = match solution.tvector {
        Some(t) => Outcome::Success {
            grid: t.to_grid(p),
            anchor: None,
        },
        None => Outcome::Failure,
    };
    Ok(ReconstructionResult {
        outcome,
        stats: solution.stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proj(r: &[usize], c: &[usize]) -> Projections {
        Projections::new(r.to_vec(), c.to_vec()).unwrap()
    }

    fn sample() -> Projections {
        proj(&[1, 4, 5, 3, 1], &[2, 4, 4, 2, 2])
    }

    #[test]
    fn single_row() {
        let p = proj(&[3], &[1, 1, 1]);
        let res = reconstruct_centered(&p).unwrap();
        assert_eq!(res.grid().unwrap().to_string(), "###\n");
    }

    #[test]
    fn sample_result() {
        let p = sample();
        let sol = solve_centered(&p, &CenteredOptions::default()).unwrap();
        assert_eq!(sol.tvector.unwrap().to_string(), "(2,2,1,1,3)");
        assert_eq!(
            reconstruct_centered_reference(&p)
                .unwrap()
                .unwrap()
                .to_string(),
            "(2,2,1,1,3)"
        );
    }

    #[test]
    fn sample_trace() {
        let sol = solve_centered(&sample(), &CenteredOptions { trace: true }).unwrap();
        let lines: Vec<String> = sol.trace.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            lines,
            [
                "p=3 q=3 | t_p=1 t_q=1 alpha=1 beta=5 balanced valid",
                "p=2 q=3 | t_p=1 t_q=1 alpha=2 beta=5 | t_p=2 t_q=1 alpha=1 beta=3",
                "p=2 q=4 | t_p=2 t_q=1 alpha=2 beta=3 balanced valid",
                "p=1 q=4 | t_p=2 t_q=1 alpha=3 beta=3 | t_p=3 t_q=1 alpha=2 beta=2",
                "p=1 q=5 | t_p=2 t_q=3 complete | t_p=3 t_q=2 complete",
            ]
        );
        assert_eq!(sol.stats.max_fronts, 2);
    }

    #[test]
    fn not_centered() {
        let p = proj(&[1, 2], &[1, 1, 1]);
        assert_eq!(
            solve_centered(&p, &CenteredOptions::default()).unwrap_err(),
            Error::NotCentered { cols: 3 }
        );
        assert!(PartialRealization::seed(&p, 0).is_err());
    }

    #[test]
    fn infeasible() {
        // every 2-wide row covers the middle column, so c_2 >= 3
        let p = proj(&[2, 3, 2], &[3, 1, 3]);
        assert!(!reconstruct_centered(&p).unwrap().is_success());
        assert_eq!(reconstruct_centered_reference(&p).unwrap(), None);
        let q = proj(&[3, 3], &[1, 2, 2, 1]);
        assert!(matches!(
            reconstruct_centered(&q),
            Err(Error::NotCentered { .. })
        ));
    }

    #[test]
    fn seed_window() {
        let p = sample();
        let seed = PartialRealization::seed(&p, 2).unwrap();
        assert_eq!(seed.window(), Some((0, 4)));
        assert!(seed.is_balanced(&p));
        assert!(seed.is_valid(&p));
        let below = seed.extend(&p, Side::Below);
        let starts: Vec<usize> = below.iter().map(|x| x.start(3)).collect();
        assert_eq!(starts, vec![0, 2]);
    }

    #[test]
    fn coinciding_extensions() {
        // window [1,3] with a 3-wide row: left and right placements agree
        let p = proj(&[3, 5], &[1, 2, 2, 2, 1]);
        let seed = PartialRealization::seed(&p, 1).unwrap();
        assert_eq!(seed.window(), Some((1, 3)));
        let up = seed.extend(&p, Side::Above);
        assert_eq!(up.len(), 1);
        assert!(up[0].is_complete(&p));
    }

    #[test]
    fn unbalanced_and_invalid() {
        let p = proj(&[1, 2], &[1, 1]);
        assert!(!reconstruct_centered(&p).unwrap().is_success());
        let x = PartialRealization {
            center: 0,
            first_row: 0,
            starts: vec![0, 0],
            col_sums: vec![2, 2, 2],
            window: Some((0, 2)),
        };
        let q = proj(&[3, 3], &[2, 1, 2]);
        assert!(!x.is_valid(&q));
    }

    #[test]
    fn side_rule() {
        let r = [1, 4, 5, 3, 1];
        assert_eq!(next_side(&r, 2, 2), Side::Above);
        assert_eq!(next_side(&r, 1, 2), Side::Below);
        assert_eq!(next_side(&r, 1, 3), Side::Above);
        assert_eq!(next_side(&r, 2, 4), Side::Above);
        assert_eq!(next_side(&r, 0, 3), Side::Below);
    }
}
