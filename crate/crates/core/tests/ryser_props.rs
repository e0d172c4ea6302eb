mod common;

use common::{all_matrices_by_sums, balanced_instances, positive_vectors, proj};
use hvconvex::hv::{reconstruct_hv, HvOptions};
use hvconvex::ryser::{gale_ryser_feasible, ryser_reconstruct};
use hvconvex::Projections;

#[test]
fn exhaustive_agreement() {
    for m in 1..=4 {
        for n in 1..=4 {
            let matrices = all_matrices_by_sums(m, n);
            for r in positive_vectors(m, n) {
                for c in positive_vectors(n, m) {
                    let p = Projections::new(r.clone(), c.clone()).unwrap();
                    let exists = matrices.contains_key(&(r.clone(), c.clone()));
                    assert_eq!(gale_ryser_feasible(&p), exists, "{p}");
                    match ryser_reconstruct(&p) {
                        Some(g) => {
                            assert!(exists);
                            assert!(g.is_realization(&p).unwrap(), "{p}\n{g}");
                        }
                        None => assert!(!exists, "{p}"),
                    }
                }
            }
        }
    }
}

#[test]
fn examples() {
    let g = ryser_reconstruct(&proj(&[2, 1], &[2, 1])).unwrap();
    assert_eq!(g.to_string(), "##\n#.\n");
    assert!(!gale_ryser_feasible(&proj(&[1, 1], &[2, 1])));
}

#[test]
fn hv_success_implies_feasible() {
    for m in 1..=3 {
        for n in 1..=4 {
            for p in balanced_instances(m, n) {
                if reconstruct_hv(&p, &HvOptions::default())
                    .unwrap()
                    .is_success()
                {
                    assert!(gale_ryser_feasible(&p), "{p}");
                }
            }
        }
    }
}
