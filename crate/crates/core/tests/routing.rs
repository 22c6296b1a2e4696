use auglab_core::routing::{
    equilibrium_flow, gen_random_network, gen_random_parallel_links, gen_staircase, make_fictitious, optimal_flow, parallel_link_oracle,
    price_of_anarchy, solve, total_cost, CostFunction, Objective, RoutingNetwork, SolverOptions,
};

fn suite() -> Vec<RoutingNetwork> {
    let mut nets = vec![
        RoutingNetwork::pigou(),
        RoutingNetwork::nonlinear_pigou(2.0),
        RoutingNetwork::nonlinear_pigou(10.0),
        RoutingNetwork::parallel_links(vec![CostFunction::Mm1 { u: 2.0 }], 0.5).unwrap(),
    ];
    nets.extend((0..20).map(|seed| gen_random_network(10, seed % 4 == 0, seed).unwrap()));
    nets
}

#[test]
fn solver_matches_parallel_link_oracle() {
    for seed in 0..50 {
        let net = gen_random_parallel_links(6, seed).unwrap();
        for objective in [Objective::Equilibrium, Objective::Optimal] {
            let report = solve(&net, objective, &SolverOptions::default()).unwrap();
            assert!(report.converged && report.relative_gap <= 1e-6, "seed {seed}: gap {}", report.relative_gap);
            let oracle = parallel_link_oracle(&net, objective).unwrap();
            for (e, (a, b)) in report.flow.edge_flows.iter().zip(&oracle.flows).enumerate() {
                assert!((a - b).abs() <= 1e-5, "seed {seed} {objective:?} edge {e}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn equilibria_route_on_shortest_paths() {
    for net in suite() {
        let eq = equilibrium_flow(&net, &SolverOptions::default()).unwrap();
        assert!(eq.converged);
        let scale = eq.shortest_path_lengths.iter().fold(1.0f64, |m, &l| m.max(l));
        assert!(eq.max_path_excess(&net) <= 1e-3 * scale, "excess {}", eq.max_path_excess(&net));
        if let [c] = net.commodities() {
            let rl = c.rate * eq.shortest_path_lengths[0];
            assert!((eq.total_cost - rl).abs() <= 1e-4 * rl.max(1.0), "{} vs {}", eq.total_cost, rl);
        }
    }
}

#[test]
fn rate_augmentation_bound_on_suite() {
    let options = SolverOptions::default();
    for net in suite() {
        let eq = equilibrium_flow(&net, &options).unwrap().total_cost;
        for delta in [0.25, 0.5, 1.0, 2.0] {
            let opt = optimal_flow(&net.scale_rates(1.0 + delta).unwrap(), &options).unwrap().total_cost;
            assert!(eq <= opt / delta + 1e-5, "delta {delta}: {eq} > {opt}/{delta}");
        }
        let slow = equilibrium_flow(&net.make_slower(), &options).unwrap().total_cost;
        let opt = optimal_flow(&net, &options).unwrap().total_cost;
        assert!(slow <= opt + 1e-5, "{slow} > {opt}");
    }
}

#[test]
fn fictitious_costs_bound_the_excess() {
    for net in suite() {
        let eq = equilibrium_flow(&net, &SolverOptions::default()).unwrap();
        let bar = make_fictitious(&net, &eq.flow).unwrap();
        for ((e, b), &f) in net.edges().iter().zip(bar.edges()).zip(&eq.flow.edge_flows) {
            for i in 0..=40 {
                let x = f64::from(i) * 0.1;
                if e.cost.capacity().is_some_and(|u| x >= u) {
                    continue;
                }
                let (c, cb) = (e.cost.eval(x), b.cost.eval(x));
                assert!(cb >= c && cb - c <= e.cost.eval(f) + 1e-12);
            }
        }
        assert!((total_cost(&bar, &eq.flow).unwrap() - eq.total_cost).abs() <= 1e-9 * eq.total_cost.max(1.0));
    }
}

#[test]
fn price_of_anarchy_grows_with_degree() {
    let options = SolverOptions::default();
    let ratio = |d: f64| price_of_anarchy(&RoutingNetwork::nonlinear_pigou(d), &options).unwrap().ratio.unwrap();
    let (p1, p2, p10) = (ratio(1.0), ratio(2.0), ratio(10.0));
    assert!((p1 - 4.0 / 3.0).abs() < 1e-4);
    assert!(p10 > p2 && p2 > p1);
    let x = (1.0f64 / 11.0).powf(0.1);
    assert!((p10 - 1.0 / ((1.0 - x) + x.powi(11))).abs() < 1e-4);
}

#[test]
fn staircase_solves() {
    let net = gen_staircase(6, 40.0, 4.0).unwrap();
    let options = SolverOptions::default();
    let poa = price_of_anarchy(&net, &options).unwrap();
    assert!(poa.equilibrium.converged && poa.optimal.converged);
    assert!(poa.ratio.unwrap() >= 1.0 - 1e-6);
}
