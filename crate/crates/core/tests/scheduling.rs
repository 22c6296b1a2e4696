use auglab_core::rational::{int, ratio, Rational};
use auglab_core::scheduling::{
    active_sets, bruteforce_min_flow, bruteforce_min_max_idle, flow_metrics, gen_example_setf, gen_grid_jobs, gen_random_jobs,
    interference_sets, opt_max_idle, simulate_setf, simulate_srpt, verify_idle_bound, verify_kp00, verify_pointwise_bound, BruteForceGuard,
    JobSet, RandomJobParams, TimePoint,
};
use proptest::prelude::*;

fn jobs_strategy(max_jobs: usize) -> impl Strategy<Value = JobSet> {
    proptest::collection::vec(((0i64..40, 1i64..5), (1i64..16, 1i64..5)), 1..=max_jobs)
        .prop_map(|v| JobSet::from_pairs(v.into_iter().map(|((rn, rd), (pn, pd))| (ratio(rn, rd), ratio(pn, pd)))).unwrap())
}

fn grid_strategy(max_jobs: usize, horizon: i64) -> impl Strategy<Value = JobSet> {
    proptest::collection::vec((0..horizon / 2, 1..horizon / 4), 1..=max_jobs)
        .prop_filter("fits horizon", move |v| v.iter().map(|p| p.0).max().unwrap() + v.iter().map(|p| p.1).sum::<i64>() <= horizon)
        .prop_map(|v| JobSet::from_pairs(v.into_iter().map(|(r, p)| (int(r), int(p)))).unwrap())
}

fn eps_values() -> [Rational; 3] {
    [ratio(1, 10), ratio(1, 2), int(1)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn srpt_is_optimal_on_grids(jobs in grid_strategy(4, 24)) {
        let srpt = flow_metrics(&simulate_srpt(&jobs, &int(1)).unwrap()).unwrap().total_flow_time;
        prop_assert_eq!(srpt, bruteforce_min_flow(&jobs, &int(1), &BruteForceGuard::default()).unwrap());
    }

    #[test]
    fn idle_optimum_matches_enumeration(jobs in grid_strategy(3, 12)) {
        prop_assert_eq!(
            opt_max_idle(&jobs, &int(1)).unwrap(),
            bruteforce_min_max_idle(&jobs, &int(1), &BruteForceGuard::default()).unwrap()
        );
    }

    #[test]
    fn speed_bounds_hold(jobs in jobs_strategy(10)) {
        for eps in eps_values() {
            prop_assert!(verify_pointwise_bound(&jobs, &eps).unwrap().pass);
            prop_assert!(verify_kp00(&jobs, &eps).unwrap().pass);
            prop_assert!(verify_idle_bound(&jobs, &eps).unwrap().pass);
        }
    }

    #[test]
    fn interference_properties_hold_at_every_event(jobs in jobs_strategy(8)) {
        let tl = simulate_setf(&jobs, &ratio(3, 2)).unwrap();
        for t in tl.events() {
            let report = interference_sets(&tl, &TimePoint::Finite(t)).unwrap();
            prop_assert!(report.violations.is_empty(), "{:?}", report.violations);
        }
    }

    #[test]
    fn simulations_are_reproducible(jobs in jobs_strategy(8), n in 1i64..4, d in 1i64..4) {
        let speed = ratio(n, d);
        prop_assert_eq!(simulate_setf(&jobs, &speed).unwrap(), simulate_setf(&jobs, &speed).unwrap());
        prop_assert_eq!(simulate_srpt(&jobs, &speed).unwrap(), simulate_srpt(&jobs, &speed).unwrap());
    }
}

#[test]
fn example_instance_counts() {
    let jobs = gen_example_setf(&ratio(1, 10), &ratio(1, 100)).unwrap();
    let setf = simulate_setf(&jobs, &ratio(11, 10)).unwrap();
    let srpt = simulate_srpt(&jobs, &int(1)).unwrap();
    assert_eq!(setf.active_count(&int(9)), 9);
    assert_eq!(active_sets(&setf, &(int(9) - ratio(1, 1000))).len(), 9);
    assert!(srpt.active_count(&int(9)) <= 2);
    let flow = flow_metrics(&setf).unwrap().total_flow_time;
    assert!(flow >= int(36));
    // all nine jobs finish together once the last one catches up
    let finish = int(9) + ratio(9, 100) / ratio(11, 10);
    assert!(setf.completions().iter().all(|c| *c == finish));
}

#[test]
fn random_instances_within_guard() {
    let params = RandomJobParams::default();
    for seed in 0..40 {
        let jobs = gen_random_jobs(&params, seed).unwrap();
        for eps in eps_values() {
            let p = verify_pointwise_bound(&jobs, &eps).unwrap();
            assert!(p.pass && p.recompute_pass());
        }
    }
    for seed in 0..40 {
        let jobs = gen_grid_jobs(4, 24, seed).unwrap();
        let srpt = flow_metrics(&simulate_srpt(&jobs, &int(1)).unwrap()).unwrap().total_flow_time;
        assert_eq!(srpt, bruteforce_min_flow(&jobs, &int(1), &BruteForceGuard::default()).unwrap());
    }
}
