//! Reconstruction of hv-convex polyominoes: try anchor pairs `(k, l)` in
//! order and return the object of the first satisfiable formula.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::Result;
use crate::formula::{build_formula, extract_object, DisjointnessMode};
use crate::grid::{BinaryGrid, Projections};
use crate::result::{Anchor, Outcome, ReconstructionResult, Stats};
use crate::twosat::solve;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PlanMode {
    /// Every `(k, l)` in `[0, m)^2`.
    Full,
    /// Anchors restricted by the column-end multiples rule and the
    /// monotone-prefix/suffix bounds on the row sums.
    #[default]
    Pruned,
}

/// Ordered anchor pairs (0-based rows) to try.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorPlan {
    pairs: Vec<(usize, usize)>,
    mode: PlanMode,
}

impl AnchorPlan {
    /// All `m^2` pairs, `k` outer and `l` inner.
    pub fn full(height: usize) -> Self {
        let pairs = (0..height)
            .flat_map(|k| (0..height).map(move |l| (k, l)))
            .collect();
        AnchorPlan {
            pairs,
            mode: PlanMode::Full,
        }
    }

    pub fn for_mode(p: &Projections, mode: PlanMode) -> Self {
        match mode {
            PlanMode::Full => AnchorPlan::full(p.height()),
            PlanMode::Pruned => pruned_anchor_plan(p),
        }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn mode(&self) -> PlanMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Last row index (0-based) of the longest nondecreasing prefix of `r`.
pub fn nondecreasing_prefix_end(r: &[usize]) -> usize {
    r.windows(2).take_while(|w| w[0] <= w[1]).count()
}

/// First row index (0-based) of the longest nonincreasing suffix of `r`.
pub fn nonincreasing_suffix_start(r: &[usize]) -> usize {
    r.len() - 1 - r.windows(2).rev().take_while(|w| w[0] >= w[1]).count()
}

/// Anchors worth trying.
///
/// Column 1 of any realization is a run of `c_1` consecutive rows, so it
/// contains exactly one row whose 1-based number is a multiple of `c_1`;
/// likewise for column `n`. Row `m` is kept as an extra candidate on both
/// sides. Pairs with `min(k, l)` past the nondecreasing prefix of `r`, or
/// `max(k, l)` before its nonincreasing suffix, are dropped.
pub fn pruned_anchor_plan(p: &Projections) -> AnchorPlan {
    let m = p.height();
    let candidates = |step: usize| -> Vec<bool> {
        let mut keep: Vec<bool> = (1..=m).map(|row| row % step == 0).collect();
        keep[m - 1] = true;
        keep
    };
    let left = candidates(p.cols()[0]);
    let right = candidates(p.cols()[p.width() - 1]);
    let m1 = nondecreasing_prefix_end(p.rows());
    let m2 = nonincreasing_suffix_start(p.rows());
    let pairs = AnchorPlan::full(m)
        .pairs
        .into_iter()
        .filter(|&(k, l)| left[k] && right[l] && k.min(l) <= m1 && k.max(l) >= m2)
        .collect();
    AnchorPlan {
        pairs,
        mode: PlanMode::Pruned,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct HvOptions {
    pub plan: PlanMode,
    pub disjointness: DisjointnessMode,
    /// Evaluate anchors on the rayon pool. The answer is still the one of
    /// the earliest successful anchor in plan order.
    pub parallel: bool,
}

/// Reconstruct an hv-convex polyomino with projections `p`.
///
/// Unbalanced totals fail immediately. When `m > n` the transposed instance
/// is solved and the answer transposed back.
pub fn reconstruct_hv(p: &Projections, options: &HvOptions) -> Result<ReconstructionResult> {
    if !p.is_balanced() {
        return Ok(ReconstructionResult {
            outcome: Outcome::Failure,
            stats: Stats::default(),
        });
    }
    let transposed = p.height() > p.width();
    let oriented = if transposed { p.transpose() } else { p.clone() };
    let plan = AnchorPlan::for_mode(&oriented, options.plan);
    let mut result = run_plan(&oriented, &plan, options)?;
    if let Outcome::Success { grid, anchor } = &mut result.outcome {
        if transposed {
            *grid = grid.transpose();
            if let Some(a) = anchor {
                a.transposed = true;
            }
        }
    }
    Ok(result)
}

/// Run an explicit plan on `p` as given: no balance check, no transposition.
pub fn reconstruct_hv_with_plan(
    p: &Projections,
    plan: &AnchorPlan,
    options: &HvOptions,
) -> Result<ReconstructionResult> {
    run_plan(p, plan, options)
}

struct AnchorRun {
    grid: Option<BinaryGrid>,
    clauses: usize,
    elapsed: std::time::Duration,
}

fn try_anchor(p: &Projections, k: usize, l: usize, mode: DisjointnessMode) -> Result<AnchorRun> {
    let formula = build_formula(p, k, l, mode)?;
    let start = Instant::now();
    let model = solve(&formula)?;
    let elapsed = start.elapsed();
    let grid = match model {
        Some(a) => Some(extract_object(&a, p.height(), p.width())?),
        None => None,
    };
    Ok(AnchorRun {
        grid,
        clauses: formula.len(),
        elapsed,
    })
}

fn run_plan(
    p: &Projections,
    plan: &AnchorPlan,
    options: &HvOptions,
) -> Result<ReconstructionResult> {
    let mut stats = Stats::default();
    let record = |stats: &mut Stats, run: &AnchorRun| {
        stats.anchors_tried += 1;
        stats.formulas_built += 1;
        stats.clauses_generated += run.clauses;
        stats.solver_time += run.elapsed;
    };

    if options.parallel {
        let runs: Vec<Result<AnchorRun>> = plan
            .pairs
            .par_iter()
            .map(|&(k, l)| try_anchor(p, k, l, options.disjointness))
            .collect();
        // stats only count anchors up to the winner so the numbers match a
        // sequential run
        for (&(k, l), run) in plan.pairs.iter().zip(runs) {
            let run = run?;
            record(&mut stats, &run);
            if let Some(grid) = run.grid {
                return Ok(success(grid, k, l, stats));
            }
        }
    } else {
        for &(k, l) in &plan.pairs {
            let run = try_anchor(p, k, l, options.disjointness)?;
            record(&mut stats, &run);
            if let Some(grid) = run.grid {
                return Ok(success(grid, k, l, stats));
            }
        }
    }
    Ok(ReconstructionResult {
        outcome: Outcome::Failure,
        stats,
    })
}

fn success(grid: BinaryGrid, k: usize, l: usize, stats: Stats) -> ReconstructionResult {
    ReconstructionResult {
        outcome: Outcome::Success {
            grid,
            anchor: Some(Anchor {
                k,
                l,
                transposed: false,
            }),
        },
        stats,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proj(r: &[usize], c: &[usize]) -> Projections {
        Projections::new(r.to_vec(), c.to_vec()).unwrap()
    }

    #[test]
    fn single_cell() {
        let res = reconstruct_hv(&proj(&[1], &[1]), &HvOptions::default()).unwrap();
        assert_eq!(res.grid().unwrap().to_string(), "#\n");
    }

    #[test]
    fn infeasible() {
        for plan in [PlanMode::Full, PlanMode::Pruned] {
            let opts = HvOptions {
                plan,
                ..Default::default()
            };
            let res = reconstruct_hv(&proj(&[2, 2], &[1, 1, 2]), &opts).unwrap();
            assert_eq!(res.outcome, Outcome::Failure);
        }
    }

    #[test]
    fn unbalanced_fails_without_work() {
        let res = reconstruct_hv(&proj(&[1, 1], &[2, 1]), &HvOptions::default()).unwrap();
        assert_eq!(res.outcome, Outcome::Failure);
        assert_eq!(res.stats.formulas_built, 0);
    }

    #[test]
    fn sample_instance() {
        let p = proj(&[1, 4, 5, 3, 1], &[2, 4, 4, 2, 2]);
        for plan in [PlanMode::Full, PlanMode::Pruned] {
            let opts = HvOptions {
                plan,
                ..Default::default()
            };
            let g = reconstruct_hv(&p, &opts).unwrap().into_grid().unwrap();
            assert!(g.is_hv_convex_polyomino());
            assert!(g.is_realization(&p).unwrap());
        }
    }

    #[test]
    fn tall_instance_is_transposed() {
        let p = proj(&[1, 2, 2, 1], &[3, 3]);
        let res = reconstruct_hv(&p, &HvOptions::default()).unwrap();
        let g = res.grid().unwrap();
        assert!(g.is_realization(&p).unwrap());
        assert!(g.is_hv_convex_polyomino());
        let Outcome::Success { anchor, .. } = res.outcome else {
            unreachable!()
        };
        assert!(anchor.unwrap().transposed);
    }

    #[test]
    fn full_plan_order() {
        assert_eq!(
            AnchorPlan::full(2).pairs(),
            &[(0, 0), (0, 1), (1, 0), (1, 1)]
        );
    }

    #[test]
    fn monotone_bounds() {
        assert_eq!(nondecreasing_prefix_end(&[3, 3, 3]), 2);
        assert_eq!(nonincreasing_suffix_start(&[3, 3, 3]), 0);
        // 1-based m_1 = 3 and m_2 = 3
        assert_eq!(nondecreasing_prefix_end(&[1, 4, 5, 3, 1]), 2);
        assert_eq!(nonincreasing_suffix_start(&[1, 4, 5, 3, 1]), 2);
    }

    #[test]
    fn pruning_examples() {
        let flat = proj(&[3, 3, 3], &[3, 3, 3]);
        assert_eq!(pruned_anchor_plan(&flat).pairs(), &[(2, 2)]);
        let unit_ends = proj(&[1, 1, 1], &[1, 1, 1]);
        assert_eq!(pruned_anchor_plan(&unit_ends).len(), 9);
    }

    #[test]
    fn parallel_matches_sequential() {
        let p = proj(&[1, 4, 5, 3, 1], &[2, 4, 4, 2, 2]);
        let seq = reconstruct_hv(&p, &HvOptions::default()).unwrap();
        let par = reconstruct_hv(
            &p,
            &HvOptions {
                parallel: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(seq.outcome, par.outcome);
        assert_eq!(seq.stats.anchors_tried, par.stats.anchors_tried);
    }
}
