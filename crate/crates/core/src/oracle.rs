//! Brute-force ground truth for small instances, plus random instance
//! generators for stress tests and benchmarks.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grid::{BinaryGrid, Projections};

/// Largest box the exhaustive routines accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    pub max_rows: usize,
    pub max_cols: usize,
    /// Stop after this many objects.
    pub limit: Option<usize>,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_rows: 6,
            max_cols: 6,
            limit: None,
        }
    }
}

impl EnumerationBudget {
    fn check(&self, rows: usize, cols: usize) -> Result<()> {
        if rows > self.max_rows || cols > self.max_cols {
            return Err(Error::BudgetExceeded { rows, cols });
        }
        Ok(())
    }
}

/// Every hv-convex polyomino filling an `m x n` bounding box (all rows
/// nonempty, first and last column touched), each exactly once, in
/// lexicographic order of the row intervals.
pub fn enumerate_hv_polyominoes(
    height: usize,
    width: usize,
    budget: &EnumerationBudget,
) -> Result<HvPolyominoes> {
    budget.check(height, width)?;
    let intervals = (0..width)
        .flat_map(|s| (s..width).map(move |e| (s, e)))
        .collect();
    Ok(HvPolyominoes {
        height,
        width,
        intervals,
        choice: vec![0; height],
        level: 0,
        done: height == 0 || width == 0,
        emitted: 0,
        limit: budget.limit,
    })
}

/// Iterator returned by [`enumerate_hv_polyominoes`].
#[derive(Debug, Clone)]
pub struct HvPolyominoes {
    height: usize,
    width: usize,
    intervals: Vec<(usize, usize)>,
    choice: Vec<usize>,
    level: usize,
    done: bool,
    emitted: usize,
    limit: Option<usize>,
}

impl HvPolyominoes {
    // consecutive rows of a connected object must share a column
    fn fits(&self, level: usize, idx: usize) -> bool {
        if level == 0 {
            return true;
        }
        let (s, e) = self.intervals[idx];
        let (ps, pe) = self.intervals[self.choice[level - 1]];
        s.max(ps) <= e.min(pe)
    }

    fn grid(&self) -> BinaryGrid {
        let (starts, lengths): (Vec<usize>, Vec<usize>) = self
            .choice
            .iter()
            .map(|&idx| {
                let (s, e) = self.intervals[idx];
                (s, e - s + 1)
            })
            .unzip();
        BinaryGrid::from_intervals(self.width, &starts, &lengths)
    }
}

impl Iterator for HvPolyominoes {
    type Item = BinaryGrid;

    fn next(&mut self) -> Option<BinaryGrid> {
        if self.limit.is_some_and(|limit| self.emitted >= limit) {
            self.done = true;
        }
        while !self.done {
            let level = self.level;
            while self.choice[level] < self.intervals.len() && !self.fits(level, self.choice[level])
            {
                self.choice[level] += 1;
            }
            if self.choice[level] == self.intervals.len() {
                if level == 0 {
                    self.done = true;
                    break;
                }
                self.choice[level] = 0;
                self.level -= 1;
                self.choice[self.level] += 1;
                continue;
            }
            if level + 1 < self.height {
                self.level += 1;
                self.choice[self.level] = 0;
                continue;
            }
            let grid = self.grid();
            self.choice[level] += 1;
            let spans_box = !grid.col_sums().contains(&0);
            if spans_box && grid.is_hv_convex_polyomino() {
                self.emitted += 1;
                return Some(grid);
            }
        }
        None
    }
}

/// First hv-convex polyomino realization of `p` found by trying every
/// placement of every row interval, or `None`.
pub fn brute_force_reconstruct(p: &Projections) -> Result<Option<BinaryGrid>> {
    brute_force_reconstruct_with(p, &EnumerationBudget::default())
}

pub fn brute_force_reconstruct_with(
    p: &Projections,
    budget: &EnumerationBudget,
) -> Result<Option<BinaryGrid>> {
    budget.check(p.height(), p.width())?;
    if !p.is_balanced() {
        return Ok(None);
    }
    let (rows, n) = (p.rows(), p.width());
    let mut starts = vec![0usize; rows.len()];
    loop {
        let grid = BinaryGrid::from_intervals(n, &starts, rows);
        if grid.is_hv_convex_polyomino() && grid.is_realization(p)? {
            return Ok(Some(grid));
        }
        // odometer, last row fastest
        let mut i = rows.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if starts[i] + rows[i] < n {
                starts[i] += 1;
                break;
            }
            starts[i] = 0;
        }
    }
}

/// Projections of every hv-convex polyomino in a box, mapped to the first
/// enumerated realization.
#[derive(Debug, Clone, Default)]
pub struct RealizationIndex {
    first: HashMap<Projections, BinaryGrid>,
}

impl RealizationIndex {
    pub fn build(height: usize, width: usize, budget: &EnumerationBudget) -> Result<Self> {
        let mut first = HashMap::new();
        for grid in enumerate_hv_polyominoes(height, width, budget)? {
            let p = Projections::of_grid(&grid)?;
            first.entry(p).or_insert(grid);
        }
        Ok(RealizationIndex { first })
    }

    pub fn get(&self, p: &Projections) -> Option<&BinaryGrid> {
        self.first.get(p)
    }

    pub fn contains(&self, p: &Projections) -> bool {
        self.first.contains_key(p)
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    pub fn is_empty(&self) -> bool {
        self.first.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Projections, &BinaryGrid)> {
        self.first.iter()
    }
}

/// A pseudo-random hv-convex polyomino filling an `m x n` box, and its
/// projections. Deterministic per seed; not uniform over polyominoes.
///
/// Left ends form a valley touching column 1 and right ends a peak touching
/// column `n`. Each right end is kept at or above every left end it has to
/// overlap, which keeps consecutive rows connected.
///
/// # Panics
/// If `height` or `width` is zero.
pub fn generate_instance(height: usize, width: usize, seed: u64) -> (BinaryGrid, Projections) {
    assert!(height > 0 && width > 0, "empty box");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = (2 * width / height).max(1);

    let valley = rng.gen_range(0..height);
    let mut lefts = vec![0usize; height];
    for i in (0..valley).rev().chain(valley + 1..height) {
        let prev = if i < valley {
            lefts[i + 1]
        } else {
            lefts[i - 1]
        };
        lefts[i] = (prev + rng.gen_range(0..=step)).min(width - 1);
    }

    let peak = rng.gen_range(0..height);
    let mut rights = vec![width - 1; height];
    // below the peak: row i must reach the left ends of rows i - 1 and i,
    // and so must every row between it and the peak
    let mut floor = vec![0usize; height];
    for i in (peak + 1..height).rev() {
        let need = lefts[i].max(lefts[i - 1]);
        floor[i] = if i + 1 < height {
            need.max(floor[i + 1])
        } else {
            need
        };
    }
    for i in 0..peak {
        let need = lefts[i].max(lefts[i + 1]);
        floor[i] = if i > 0 { need.max(floor[i - 1]) } else { need };
    }
    for i in (0..peak).rev().chain(peak + 1..height) {
        let prev = if i < peak {
            rights[i + 1]
        } else {
            rights[i - 1]
        };
        rights[i] = prev.saturating_sub(rng.gen_range(0..=step)).max(floor[i]);
    }

    let lengths: Vec<usize> = lefts.iter().zip(&rights).map(|(l, r)| r - l + 1).collect();
    let grid = BinaryGrid::from_intervals(width, &lefts, &lengths);
    let p = Projections::of_grid(&grid).expect("generated object fills its box");
    (grid, p)
}

/// Like [`generate_instance`] but with a full peak row, so the result is a
/// centered instance. Returns the left ends, the row lengths and the
/// projections without materializing the grid.
pub fn generate_centered_intervals(
    height: usize,
    width: usize,
    seed: u64,
) -> (Vec<usize>, Vec<usize>, Projections) {
    assert!(height > 0 && width > 0, "empty box");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = (2 * width / height).max(1);
    let center = rng.gen_range(0..height);
    let mut lefts = vec![0usize; height];
    let mut rights = vec![width - 1; height];
    for up in [true, false] {
        let mut prev = center;
        let rows: Vec<usize> = if up {
            (0..center).rev().collect()
        } else {
            (center + 1..height).collect()
        };
        for i in rows {
            let (pl, pr) = (lefts[prev], rights[prev]);
            let mut l = pl + rng.gen_range(0..=step);
            let mut r = pr.saturating_sub(rng.gen_range(0..=step));
            if l > r {
                l = l.min(pr);
                r = l;
            }
            lefts[i] = l;
            rights[i] = r;
            prev = i;
        }
    }
    let lengths: Vec<usize> = lefts.iter().zip(&rights).map(|(l, r)| r - l + 1).collect();
    // column sums by difference array
    let mut diff = vec![0isize; width + 1];
    for (&l, &len) in lefts.iter().zip(&lengths) {
        diff[l] += 1;
        diff[l + len] -= 1;
    }
    let mut cols = Vec::with_capacity(width);
    let mut acc = 0isize;
    for d in &diff[..width] {
        acc += d;
        cols.push(acc as usize);
    }
    let p = Projections::new(lengths.clone(), cols).expect("generated object fills its box");
    (lefts, lengths, p)
}

pub fn generate_centered_instance(
    height: usize,
    width: usize,
    seed: u64,
) -> (BinaryGrid, Projections) {
    let (lefts, lengths, p) = generate_centered_intervals(height, width, seed);
    (BinaryGrid::from_intervals(width, &lefts, &lengths), p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_boxes() {
        let budget = EnumerationBudget::default();
        assert_eq!(enumerate_hv_polyominoes(1, 1, &budget).unwrap().count(), 1);
        let bars: Vec<BinaryGrid> = enumerate_hv_polyominoes(1, 2, &budget).unwrap().collect();
        assert_eq!(bars, vec![BinaryGrid::full(1, 2)]);
    }

    #[test]
    fn two_by_two_count() {
        // full square, four L-trominoes, two diagonal-free dominoes stacked
        // vertically are excluded (they leave a column empty)
        let all: Vec<BinaryGrid> = enumerate_hv_polyominoes(2, 2, &EnumerationBudget::default())
            .unwrap()
            .collect();
        assert_eq!(all.len(), 5);
    }

    #[test]
    fn budget() {
        assert_eq!(
            enumerate_hv_polyominoes(7, 2, &EnumerationBudget::default()).err(),
            Some(Error::BudgetExceeded { rows: 7, cols: 2 })
        );
        let capped = EnumerationBudget {
            limit: Some(3),
            ..Default::default()
        };
        assert_eq!(enumerate_hv_polyominoes(3, 3, &capped).unwrap().count(), 3);
    }

    #[test]
    fn brute_force_examples() {
        let one = Projections::new(vec![1], vec![1]).unwrap();
        assert_eq!(
            brute_force_reconstruct(&one).unwrap(),
            Some(BinaryGrid::full(1, 1))
        );
        let none = Projections::new(vec![2, 2], vec![1, 1, 2]).unwrap();
        assert_eq!(brute_force_reconstruct(&none).unwrap(), None);
        let sample = Projections::new(vec![1, 4, 5, 3, 1], vec![2, 4, 4, 2, 2]).unwrap();
        let g = brute_force_reconstruct(&sample).unwrap().unwrap();
        assert!(g.is_realization(&sample).unwrap());
    }

    #[test]
    fn generators_produce_polyominoes() {
        for seed in 0..200 {
            let (g, p) = generate_instance(1 + seed as usize % 9, 1 + seed as usize % 7, seed);
            assert!(g.is_hv_convex_polyomino(), "seed {seed}\n{g}");
            assert!(g.is_realization(&p).unwrap());
            let (g, p) =
                generate_centered_instance(1 + seed as usize % 9, 1 + seed as usize % 7, seed);
            assert!(g.is_hv_convex_polyomino(), "seed {seed}\n{g}");
            assert!(p.is_centered());
        }
        let (g, _) = generate_instance(1, 1, 7);
        assert_eq!(g, BinaryGrid::full(1, 1));
    }
}
