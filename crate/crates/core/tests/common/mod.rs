#![allow(dead_code)]

use std::collections::HashMap;

use hvconvex::twosat::{Clause, ClauseSet};
use hvconvex::{BinaryGrid, Projections};

pub fn proj(r: &[usize], c: &[usize]) -> Projections {
    Projections::new(r.to_vec(), c.to_vec()).unwrap()
}

/// Every vector of length `len` over `[1, max]`, in lexicographic order.
pub fn positive_vectors(len: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (1..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Every balanced positive instance of an `m x n` box.
pub fn balanced_instances(m: usize, n: usize) -> Vec<Projections> {
    let rows = positive_vectors(m, n);
    let cols = positive_vectors(n, m);
    let mut by_total: HashMap<usize, Vec<&Vec<usize>>> = HashMap::new();
    for c in &cols {
        by_total.entry(c.iter().sum()).or_default().push(c);
    }
    let mut out = Vec::new();
    for r in &rows {
        for c in by_total.get(&r.iter().sum()).into_iter().flatten() {
            out.push(proj(r, c));
        }
    }
    out
}

/// Connectivity by union-find over 4-neighbours; empty grids are not
/// connected.
pub fn union_find_connected(g: &BinaryGrid) -> bool {
    let (m, n) = (g.height(), g.width());
    let mut parent: Vec<usize> = (0..m * n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..m {
        for j in 0..n {
            if !g.get(i, j) {
                continue;
            }
            let here = i * n + j;
            if i + 1 < m && g.get(i + 1, j) {
                let (a, b) = (find(&mut parent, here), find(&mut parent, here + n));
                parent[a] = b;
            }
            if j + 1 < n && g.get(i, j + 1) {
                let (a, b) = (find(&mut parent, here), find(&mut parent, here + 1));
                parent[a] = b;
            }
        }
    }
    let mut roots = (0..m * n)
        .filter(|&x| g.cells()[x])
        .map(|x| find(&mut parent, x));
    match roots.next() {
        None => false,
        Some(first) => roots.all(|r| r == first),
    }
}

/// Runs of set cells in each line are at most one.
pub fn lines_convex(lines: impl Iterator<Item = Vec<bool>>) -> bool {
    lines.into_iter().all(|line| {
        let starts = (0..line.len())
            .filter(|&j| line[j] && (j == 0 || !line[j - 1]))
            .count();
        starts <= 1
    })
}

pub fn naive_hv_polyomino(g: &BinaryGrid) -> bool {
    let (m, n) = (g.height(), g.width());
    let rows = (0..m).map(|i| g.row(i).to_vec());
    let cols = (0..n).map(|j| (0..m).map(|i| g.get(i, j)).collect::<Vec<_>>());
    lines_convex(rows) && lines_convex(cols) && union_find_connected(g)
}

pub fn clause_holds(c: &Clause, values: &[bool]) -> bool {
    let lit = |l: &hvconvex::twosat::Literal| values[l.variable()] == l.is_positive();
    match c {
        Clause::Unit(a) => lit(a),
        Clause::Pair(a, b) => lit(a) || lit(b),
    }
}

/// Satisfiability by trying all `2^v` assignments.
pub fn exhaustive_sat(f: &ClauseSet) -> bool {
    let v = f.variable_count();
    assert!(v <= 24);
    (0u64..1 << v).any(|mask| {
        let values: Vec<bool> = (0..v).map(|i| mask >> i & 1 == 1).collect();
        f.clauses().iter().all(|c| clause_holds(c, &values))
    })
}

/// All satisfying assignments, by exhaustion.
pub fn all_models(f: &ClauseSet) -> Vec<Vec<bool>> {
    let v = f.variable_count();
    assert!(v <= 24);
    (0u64..1 << v)
        .map(|mask| (0..v).map(|i| mask >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|values| f.clauses().iter().all(|c| clause_holds(c, values)))
        .collect()
}

/// Every 0-1 matrix of an `m x n` box, grouped by projections (rows and
/// columns may be empty, so the keys are raw sum vectors).
pub fn all_matrices_by_sums(
    m: usize,
    n: usize,
) -> HashMap<(Vec<usize>, Vec<usize>), Vec<BinaryGrid>> {
    let mut out: HashMap<_, Vec<BinaryGrid>> = HashMap::new();
    for mask in 0u64..1 << (m * n) {
        let cells = (0..m * n).map(|x| mask >> x & 1 == 1).collect();
        let g = BinaryGrid::from_cells(m, n, cells);
        out.entry((g.row_sums(), g.col_sums())).or_default().push(g);
    }
    out
}

/// Every contiguous rectangle `I x J` whose sums make it forced:
/// `sum_{i in I} r_i = sum_{j not in J} c_j + |I| |J|`.
pub fn forced_rectangles(r: &[usize], c: &[usize]) -> Vec<((usize, usize), (usize, usize))> {
    let (m, n) = (r.len(), c.len());
    let mut out = Vec::new();
    for i0 in 0..m {
        for i1 in i0..m {
            for j0 in 0..n {
                for j1 in j0..n {
                    let lhs: usize = r[i0..=i1].iter().sum();
                    let outside: usize = c[..j0].iter().chain(&c[j1 + 1..]).sum();
                    if lhs == outside + (i1 - i0 + 1) * (j1 - j0 + 1) {
                        out.push(((i0, i1), (j0, j1)));
                    }
                }
            }
        }
    }
    out
}

/// `R` inside `g` and the orthogonal rectangle outside it.
pub fn separated(g: &BinaryGrid, rect: ((usize, usize), (usize, usize))) -> bool {
    let ((i0, i1), (j0, j1)) = rect;
    (0..g.height()).all(|i| {
        (0..g.width()).all(|j| {
            let in_i = (i0..=i1).contains(&i);
            let in_j = (j0..=j1).contains(&j);
            match (in_i, in_j) {
                (true, true) => g.get(i, j),
                (false, false) => !g.get(i, j),
                _ => true,
            }
        })
    })
}
