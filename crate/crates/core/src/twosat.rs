//! 2SAT over indexed boolean variables.
//!
//! Satisfiability is decided on the implication graph: a 2-clause `(a | b)`
//! contributes `!a -> b` and `!b -> a`, a unit clause `(a)` contributes
//! `!a -> a`. The formula is unsatisfiable iff some variable shares a
//! strongly connected component with its negation. Components come out of
//! Tarjan's algorithm in reverse topological order, and a variable is set to
//! true when its positive literal's component is found first.

use std::fmt::{self, Write as _};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    variable: usize,
    positive: bool,
}

impl Literal {
    pub fn pos(variable: usize) -> Self {
        Literal {
            variable,
            positive: true,
        }
    }

    pub fn neg(variable: usize) -> Self {
        Literal {
            variable,
            positive: false,
        }
    }

    pub fn new(variable: usize, positive: bool) -> Self {
        Literal { variable, positive }
    }

    pub fn variable(self) -> usize {
        self.variable
    }

    pub fn is_positive(self) -> bool {
        self.positive
    }

    pub fn negate(self) -> Self {
        Literal {
            variable: self.variable,
            positive: !self.positive,
        }
    }

    /// Truth value under `values`.
    pub fn eval(self, values: &[bool]) -> bool {
        values[self.variable] == self.positive
    }

    // node 2v is the positive literal, 2v + 1 the negative one
    fn node(self) -> usize {
        2 * self.variable + usize::from(!self.positive)
    }

    #[cfg(test)]
    fn from_node(node: usize) -> Self {
        Literal {
            variable: node / 2,
            positive: node.is_multiple_of(2),
        }
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.variable)
        } else {
            write!(f, "!x{}", self.variable)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Clause {
    Unit(Literal),
    Pair(Literal, Literal),
}

impl Clause {
    pub fn literals(&self) -> impl Iterator<Item = Literal> {
        let (a, b) = match *self {
            Clause::Unit(a) => (a, None),
            Clause::Pair(a, b) => (a, Some(b)),
        };
        std::iter::once(a).chain(b)
    }

    pub fn eval(&self, values: &[bool]) -> bool {
        self.literals().any(|lit| lit.eval(values))
    }
}

/// A CNF formula whose clauses have one or two literals. Clause order is kept
/// as inserted, which makes solving deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClauseSet {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl ClauseSet {
    pub fn new(variable_count: usize) -> Self {
        ClauseSet {
            variable_count,
            clauses: Vec::new(),
        }
    }

    pub fn with_capacity(variable_count: usize, clauses: usize) -> Self {
        ClauseSet {
            variable_count,
            clauses: Vec::with_capacity(clauses),
        }
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn push(&mut self, clause: Clause) {
        self.clauses.push(clause);
    }

    pub fn add_unit(&mut self, a: Literal) {
        self.clauses.push(Clause::Unit(a));
    }

    pub fn add_pair(&mut self, a: Literal, b: Literal) {
        self.clauses.push(Clause::Pair(a, b));
    }

    /// `a => b`, stored as `(!a | b)`.
    pub fn add_implication(&mut self, a: Literal, b: Literal) {
        self.clauses.push(Clause::Pair(a.negate(), b));
    }

    fn check_variables(&self) -> Result<()> {
        for clause in &self.clauses {
            for lit in clause.literals() {
                if lit.variable >= self.variable_count {
                    return Err(Error::VariableOutOfRange {
                        variable: lit.variable,
                        count: self.variable_count,
                    });
                }
            }
        }
        Ok(())
    }

    /// Edges of the implication graph in clause order.
    pub fn implication_edges(&self) -> impl Iterator<Item = (Literal, Literal)> + '_ {
        self.clauses.iter().flat_map(|clause| {
            let (first, second) = match *clause {
                Clause::Unit(a) => ((a.negate(), a), None),
                Clause::Pair(a, b) => ((a.negate(), b), Some((b.negate(), a))),
            };
            std::iter::once(first).chain(second)
        })
    }

    /// One `u -> v` line per implication edge, literals rendered by `name`.
    pub fn dump_implication_graph(&self, mut name: impl FnMut(Literal) -> String) -> String {
        let mut out = String::new();
        for (u, v) in self.implication_edges() {
            let _ = writeln!(out, "{} -> {}", name(u), name(v));
        }
        out
    }
}

/// Values for every variable of a clause set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn into_values(self) -> Vec<bool> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Whether `a` satisfies every clause of `f`.
pub fn evaluate(f: &ClauseSet, a: &Assignment) -> Result<bool> {
    if a.len() != f.variable_count {
        return Err(Error::AssignmentLength {
            got: a.len(),
            expected: f.variable_count,
        });
    }
    f.check_variables()?;
    Ok(f.clauses.iter().all(|c| c.eval(&a.values)))
}

/// Decide `f`. Returns `Ok(None)` when it is unsatisfiable.
pub fn solve(f: &ClauseSet) -> Result<Option<Assignment>> {
    f.check_variables()?;
    let graph = ImplicationGraph::build(f);
    let component = graph.tarjan();
    let mut values = Vec::with_capacity(f.variable_count);
    for v in 0..f.variable_count {
        let pos = component[Literal::pos(v).node()];
        let neg = component[Literal::neg(v).node()];
        if pos == neg {
            return Ok(None);
        }
        values.push(pos < neg);
    }
    Ok(Some(Assignment { values }))
}

/// Implication graph in compressed sparse row form.
struct ImplicationGraph {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl ImplicationGraph {
    fn build(f: &ClauseSet) -> Self {
        let nodes = 2 * f.variable_count;
        let mut offsets = vec![0u32; nodes + 1];
        for (u, _) in f.implication_edges() {
            offsets[u.node() + 1] += 1;
        }
        for i in 0..nodes {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0u32; offsets[nodes] as usize];
        for (u, v) in f.implication_edges() {
            let slot = &mut fill[u.node()];
            targets[*slot as usize] = v.node() as u32;
            *slot += 1;
        }
        ImplicationGraph { offsets, targets }
    }

    fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Component id per node; ids are assigned in the order components are
    /// completed, which is reverse topological order of the condensation.
    fn tarjan(&self) -> Vec<u32> {
        const UNSEEN: u32 = u32::MAX;
        let n = self.node_count();
        let mut index = vec![UNSEEN; n];
        let mut low = vec![0u32; n];
        let mut component = vec![UNSEEN; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<u32> = Vec::new();
        // (node, next edge position)
        let mut call: Vec<(u32, u32)> = Vec::new();
        let mut next_index = 0u32;
        let mut next_component = 0u32;

        for root in 0..n as u32 {
            if index[root as usize] != UNSEEN {
                continue;
            }
            index[root as usize] = next_index;
            low[root as usize] = next_index;
            next_index += 1;
            stack.push(root);
            on_stack[root as usize] = true;
            call.push((root, self.offsets[root as usize]));

            while let Some(&mut (u, ref mut edge)) = call.last_mut() {
                let ui = u as usize;
                if *edge < self.offsets[ui + 1] {
                    let v = self.targets[*edge as usize];
                    *edge += 1;
                    let vi = v as usize;
                    if index[vi] == UNSEEN {
                        index[vi] = next_index;
                        low[vi] = next_index;
                        next_index += 1;
                        stack.push(v);
                        on_stack[vi] = true;
                        call.push((v, self.offsets[vi]));
                    } else if on_stack[vi] {
                        low[ui] = low[ui].min(index[vi]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    let pi = parent as usize;
                    low[pi] = low[pi].min(low[ui]);
                }
                if low[ui] == index[ui] {
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w as usize] = false;
                        component[w as usize] = next_component;
                        if w == u {
                            break;
                        }
                    }
                    next_component += 1;
                }
            }
        }
        component
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_sat(f: &ClauseSet) -> bool {
        let v = f.variable_count();
        (0u64..1 << v).any(|mask| {
            let values: Vec<bool> = (0..v).map(|i| mask >> i & 1 == 1).collect();
            f.clauses().iter().all(|c| c.eval(&values))
        })
    }

    #[test]
    fn empty_formula() {
        let f = ClauseSet::new(0);
        assert_eq!(solve(&f).unwrap(), Some(Assignment::new(vec![])));
        assert!(evaluate(&f, &Assignment::new(vec![])).unwrap());
    }

    #[test]
    fn all_sign_patterns_unsat() {
        let (x, y) = (0, 1);
        let mut f = ClauseSet::new(2);
        f.add_pair(Literal::pos(x), Literal::pos(y));
        f.add_pair(Literal::neg(x), Literal::pos(y));
        f.add_pair(Literal::pos(x), Literal::neg(y));
        f.add_pair(Literal::neg(x), Literal::neg(y));
        assert!(!brute_force_sat(&f));
        assert_eq!(solve(&f).unwrap(), None);
    }

    #[test]
    fn chain_with_unit() {
        let mut f = ClauseSet::new(3);
        f.add_pair(Literal::neg(0), Literal::pos(1));
        f.add_pair(Literal::neg(1), Literal::pos(2));
        f.add_unit(Literal::pos(0));
        // exhaustive: the only model is all-true
        let models: Vec<u32> = (0u32..8)
            .filter(|mask| {
                let values: Vec<bool> = (0..3).map(|i| mask >> i & 1 == 1).collect();
                f.clauses().iter().all(|c| c.eval(&values))
            })
            .collect();
        assert_eq!(models, vec![0b111]);
        let a = solve(&f).unwrap().unwrap();
        assert_eq!(a.values(), &[true, true, true]);
        assert!(evaluate(&f, &a).unwrap());
    }

    #[test]
    fn unit_false() {
        let mut f = ClauseSet::new(1);
        f.add_unit(Literal::pos(0));
        assert!(!evaluate(&f, &Assignment::new(vec![false])).unwrap());
    }

    #[test]
    fn contradictory_units() {
        let mut f = ClauseSet::new(1);
        f.add_unit(Literal::pos(0));
        f.add_unit(Literal::neg(0));
        assert_eq!(solve(&f).unwrap(), None);
    }

    #[test]
    fn input_errors() {
        let mut f = ClauseSet::new(1);
        f.add_unit(Literal::pos(3));
        assert_eq!(
            solve(&f),
            Err(Error::VariableOutOfRange {
                variable: 3,
                count: 1
            })
        );
        let g = ClauseSet::new(2);
        assert_eq!(
            evaluate(&g, &Assignment::new(vec![true])),
            Err(Error::AssignmentLength {
                got: 1,
                expected: 2
            })
        );
    }

    #[test]
    fn implication_dump() {
        let mut f = ClauseSet::new(2);
        f.add_implication(Literal::pos(0), Literal::pos(1));
        f.add_unit(Literal::neg(1));
        let dump = f.dump_implication_graph(|l| l.to_string());
        assert_eq!(dump, "x0 -> x1\n!x1 -> !x0\nx1 -> !x1\n");
    }

    #[test]
    fn node_round_trip() {
        for node in 0..20 {
            assert_eq!(Literal::from_node(node).node(), node);
        }
    }
}
