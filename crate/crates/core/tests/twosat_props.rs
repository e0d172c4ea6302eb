mod common;

use std::time::Instant;

use common::{clause_holds, exhaustive_sat};
use hvconvex::twosat::{evaluate, solve, Assignment, ClauseSet, Literal};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn formula_strategy() -> impl Strategy<Value = ClauseSet> {
    (1usize..=15).prop_flat_map(|v| {
        let lit = (0..v, any::<bool>()).prop_map(|(x, s)| Literal::new(x, s));
        let clause = (lit.clone(), prop::option::weighted(0.85, lit));
        prop::collection::vec(clause, 0..=40).prop_map(move |clauses| {
            let mut f = ClauseSet::new(v);
            for (a, b) in clauses {
                match b {
                    Some(b) => f.add_pair(a, b),
                    None => f.add_unit(a),
                }
            }
            f
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn verdict_matches_exhaustive_search(f in formula_strategy()) {
        let model = solve(&f).unwrap();
        prop_assert_eq!(model.is_some(), exhaustive_sat(&f));
        if let Some(a) = model {
            prop_assert!(f.clauses().iter().all(|c| clause_holds(c, a.values())));
            prop_assert!(evaluate(&f, &a).unwrap());
        }
    }

    #[test]
    fn solving_is_deterministic(f in formula_strategy()) {
        prop_assert_eq!(solve(&f).unwrap(), solve(&f.clone()).unwrap());
    }
}

#[test]
fn small_examples() {
    let (x, y, z) = (0, 1, 2);
    let mut f = ClauseSet::new(2);
    f.add_pair(Literal::pos(x), Literal::pos(y));
    f.add_pair(Literal::neg(x), Literal::pos(y));
    f.add_pair(Literal::pos(x), Literal::neg(y));
    f.add_pair(Literal::neg(x), Literal::neg(y));
    assert_eq!(solve(&f).unwrap(), None);

    let mut g = ClauseSet::new(3);
    g.add_implication(Literal::pos(x), Literal::pos(y));
    g.add_implication(Literal::pos(y), Literal::pos(z));
    g.add_unit(Literal::pos(x));
    let a = solve(&g).unwrap().unwrap();
    assert_eq!(a.values(), &[true, true, true]);
    assert!(evaluate(&g, &Assignment::new(vec![true; 3])).unwrap());

    assert_eq!(
        solve(&ClauseSet::new(0)).unwrap(),
        Some(Assignment::new(vec![]))
    );
    let mut unit = ClauseSet::new(1);
    unit.add_unit(Literal::pos(0));
    assert!(!evaluate(&unit, &Assignment::new(vec![false])).unwrap());
    assert!(evaluate(&unit, &Assignment::new(vec![])).is_err());
}

#[test]
fn out_of_range_literal_is_rejected() {
    let mut f = ClauseSet::new(1);
    f.add_pair(Literal::pos(0), Literal::neg(3));
    assert!(solve(&f).is_err());
}

/// Random satisfiable formula: clauses are drawn until one is satisfied by a
/// hidden planted assignment.
fn planted(vars: usize, clauses: usize, seed: u64) -> ClauseSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hidden: Vec<bool> = (0..vars).map(|_| rng.gen()).collect();
    let mut f = ClauseSet::with_capacity(vars, clauses);
    while f.len() < clauses {
        let a = Literal::new(rng.gen_range(0..vars), rng.gen());
        let b = Literal::new(rng.gen_range(0..vars), rng.gen());
        if a.eval(&hidden) || b.eval(&hidden) {
            f.add_pair(a, b);
        }
    }
    f
}

fn median_secs(f: &ClauseSet) -> f64 {
    let mut times: Vec<f64> = (0..5)
        .map(|_| {
            let start = Instant::now();
            let model = solve(f).unwrap();
            let secs = start.elapsed().as_secs_f64();
            assert!(model.is_some());
            secs
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[2]
}

#[test]
fn solver_scales_linearly() {
    let small = planted(500_000, 1_000_000, 1);
    let large = planted(1_000_000, 2_000_000, 2);
    let ratio = median_secs(&large) / median_secs(&small);
    assert!(
        ratio <= 3.0,
        "doubling the formula took {ratio:.2}x as long"
    );
}
