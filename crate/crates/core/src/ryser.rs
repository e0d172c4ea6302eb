//! Unconstrained reconstruction: any 0-1 matrix with the given projections.

use crate::grid::{BinaryGrid, Projections};

/// Gale-Ryser: the totals agree and the row sums, sorted in nonincreasing
/// order, are dominated by the conjugate of the column sums.
pub fn gale_ryser_feasible(p: &Projections) -> bool {
    if !p.is_balanced() {
        return false;
    }
    let m = p.height();
    let mut rows: Vec<(usize, usize)> = p.rows().iter().copied().enumerate().collect();
    rows.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
    // conjugate[i] = number of columns with c_j > i
    let mut conjugate = vec![0usize; m + 1];
    for &c in p.cols() {
        conjugate[c.min(m)] += 1;
    }
    for i in (0..m).rev() {
        conjugate[i] += conjugate[i + 1];
    }
    let (mut row_prefix, mut conj_prefix) = (0, 0);
    for (i, &(_, r)) in rows.iter().enumerate() {
        row_prefix += r;
        conj_prefix += conjugate[i + 1];
        if row_prefix > conj_prefix {
            return false;
        }
    }
    true
}

/// Ryser's greedy construction: each row in turn takes the columns with the
/// largest remaining demand, ties broken by column index. Returns `None`
/// when no realization exists.
pub fn ryser_reconstruct(p: &Projections) -> Option<BinaryGrid> {
    if !p.is_balanced() {
        return None;
    }
    let (m, n) = (p.height(), p.width());
    let mut residual = p.cols().to_vec();
    let mut grid = BinaryGrid::new(m, n);
    let mut order: Vec<usize> = (0..n).collect();
    // counting sort of the columns by residual demand, largest first
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); m + 1];
    for (i, &r) in p.rows().iter().enumerate() {
        for b in &mut buckets {
            b.clear();
        }
        for j in 0..n {
            buckets[residual[j]].push(j);
        }
        order.clear();
        order.extend(buckets.iter().rev().flatten());
        for &j in &order[..r] {
            if residual[j] == 0 {
                return None;
            }
            residual[j] -= 1;
            grid.set(i, j, true);
        }
    }
    residual.iter().all(|&c| c == 0).then_some(grid)
}
