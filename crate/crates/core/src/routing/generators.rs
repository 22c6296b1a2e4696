//! Seeded instance families.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Commodity, CostFunction, Edge, RoutingError, RoutingNetwork};

/// Uniform multiple of 1/100 in `[lo, hi]` hundredths.
fn hundredths(rng: &mut ChaCha8Rng, lo: u32, hi: u32) -> f64 {
    f64::from(rng.gen_range(lo..=hi)) / 100.0
}

fn random_cost(rng: &mut ChaCha8Rng) -> CostFunction {
    match rng.gen_range(0..3) {
        0 => CostFunction::Affine { a: hundredths(rng, 10, 200), b: hundredths(rng, 0, 200) },
        1 => CostFunction::Monomial { a: hundredths(rng, 10, 200), d: f64::from(rng.gen_range(1..=4u32)) },
        _ => {
            let mut coefficients: Vec<f64> = (0..3).map(|_| hundredths(rng, 0, 100)).collect();
            coefficients.push(hundredths(rng, 10, 100));
            CostFunction::Polynomial { coefficients }
        }
    }
}

/// Random network on `vertices` vertices: a backbone path `0 -> 1 -> ...`
/// plus `2 * vertices` random extra edges with affine, monomial or cubic
/// polynomial costs. Commodity 0 runs from the first to the last vertex;
/// with `two_commodities`, a second one joins two random backbone vertices.
pub fn gen_random_network(vertices: usize, two_commodities: bool, seed: u64) -> Result<RoutingNetwork, RoutingError> {
    if vertices < 2 {
        return Err(RoutingError::InvalidParameter { name: "vertices", reason: "at least 2 required" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Edge> = (1..vertices).map(|v| Edge { tail: v - 1, head: v, cost: random_cost(&mut rng) }).collect();
    for _ in 0..2 * vertices {
        let tail = rng.gen_range(0..vertices);
        let mut head = rng.gen_range(0..vertices - 1);
        if head >= tail {
            head += 1;
        }
        edges.push(Edge { tail, head, cost: random_cost(&mut rng) });
    }
    let mut commodities = vec![Commodity { source: 0, sink: vertices - 1, rate: hundredths(&mut rng, 50, 200) }];
    if two_commodities {
        let source = rng.gen_range(0..vertices - 1);
        let sink = rng.gen_range(source + 1..vertices);
        commodities.push(Commodity { source, sink, rate: hundredths(&mut rng, 50, 200) });
    }
    RoutingNetwork::new(vertices, edges, commodities)
}

/// Two to `max_links` parallel links with strictly increasing affine,
/// monomial or M/M/1 costs. The rate is kept below 60% of the total
/// M/M/1 capacity when every link is M/M/1.
pub fn gen_random_parallel_links(max_links: usize, seed: u64) -> Result<RoutingNetwork, RoutingError> {
    if max_links < 2 {
        return Err(RoutingError::InvalidParameter { name: "max_links", reason: "at least 2 required" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let links = rng.gen_range(2..=max_links);
    let costs: Vec<CostFunction> = (0..links)
        .map(|_| match rng.gen_range(0..3) {
            0 => CostFunction::Affine { a: hundredths(&mut rng, 10, 300), b: hundredths(&mut rng, 0, 300) },
            1 => CostFunction::Monomial { a: hundredths(&mut rng, 10, 300), d: f64::from(rng.gen_range(1..=4u32)) },
            _ => CostFunction::Mm1 { u: hundredths(&mut rng, 100, 400) },
        })
        .collect();
    let mut rate = hundredths(&mut rng, 50, 300);
    let capacities: Option<f64> = costs.iter().map(CostFunction::capacity).sum();
    if let Some(total) = capacities {
        rate = rate.min(libm::floor(60.0 * total) / 100.0);
    }
    RoutingNetwork::parallel_links(costs, rate)
}

/// Parallel links `x^d / m^d` and `λ_j + x^d` with `λ_j = growth^(j-1)`
/// for `j = 1..=m`, at rate `2m`. The equilibrium cost roughly jumps by a
/// factor `growth` whenever the traffic spills onto one more link, while
/// the optimum spreads traffic earlier.
pub fn gen_staircase(m: usize, degree: f64, growth: f64) -> Result<RoutingNetwork, RoutingError> {
    if m == 0 {
        return Err(RoutingError::InvalidParameter { name: "m", reason: "at least 1 required" });
    }
    if !(degree >= 1.0 && growth >= 1.0 && degree.is_finite() && growth.is_finite()) {
        return Err(RoutingError::InvalidParameter { name: "degree/growth", reason: "must be finite and at least 1" });
    }
    let d = libm::round(degree) as usize;
    let mut costs = vec![CostFunction::Monomial { a: libm::pow(m as f64, -degree), d: degree }];
    for j in 1..=m {
        let mut coefficients = vec![0.0; d + 1];
        coefficients[0] = libm::pow(growth, (j - 1) as f64);
        coefficients[d] = 1.0;
        costs.push(CostFunction::Polynomial { coefficients });
    }
    RoutingNetwork::parallel_links(costs, 2.0 * m as f64)
}
