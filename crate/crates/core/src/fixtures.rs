//! The fixed graph set the verification battery runs over.

use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Family, Graph};
use crate::token::binomial;

/// Seed for the random part of the fixture set.
pub const FIXTURE_SEED: u64 = 42;
/// Number of random connected graphs.
pub const RANDOM_FIXTURES: usize = 20;
/// Probability of each non-tree pair becoming an edge.
pub const EXTRA_EDGE_PROBABILITY: f64 = 0.3;

#[derive(Debug, Clone)]
pub struct Fixture {
    pub id: String,
    pub graph: Graph,
}

impl Fixture {
    pub fn from_family(f: Family) -> Self {
        Fixture { id: f.to_string(), graph: f.build().expect("fixture families are valid") }
    }

    /// `1..=⌊n/2⌋`, trimmed so that C(n,k) ≤ cap.
    pub fn k_range(&self, cap: usize) -> RangeInclusive<usize> {
        let n = self.graph.order();
        let top = (1..=n / 2).take_while(|&k| binomial(n, k) <= cap).last().unwrap_or(0);
        1..=top
    }
}

/// Paths P_3..P_8, cycles C_4..C_9, complete graphs K_3..K_6, Petersen,
/// H(2,2), H(2,3), K_{1,5}, then the random graphs.
pub fn standard_fixtures() -> Vec<Fixture> {
    let mut out: Vec<Fixture> = Vec::new();
    out.extend((3..=8).map(|n| Fixture::from_family(Family::Path(n))));
    out.extend((4..=9).map(|n| Fixture::from_family(Family::Cycle(n))));
    out.extend((3..=6).map(|n| Fixture::from_family(Family::Complete(n))));
    out.push(Fixture::from_family(Family::Petersen));
    out.push(Fixture::from_family(Family::Hamming { d: 2, q: 2 }));
    out.push(Fixture::from_family(Family::Hamming { d: 2, q: 3 }));
    out.push(Fixture::from_family(Family::Star(5)));
    out.extend(random_fixtures(FIXTURE_SEED, RANDOM_FIXTURES));
    out
}

/// `count` connected graphs on 5 to 9 vertices: a random recursive tree
/// plus each remaining pair with probability [`EXTRA_EDGE_PROBABILITY`].
pub fn random_fixtures(seed: u64, count: usize) -> Vec<Fixture> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(5..=9);
            Fixture { id: format!("random-{seed}-{i:02}"), graph: random_connected(n, &mut rng) }
        })
        .collect()
}

pub fn random_connected(n: usize, rng: &mut impl Rng) -> Graph {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if !edges.contains(&(u, v)) && rng.gen_bool(EXTRA_EDGE_PROBABILITY) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("random edges are in range")
}

/// Factor pairs for the Cartesian product check.
pub fn product_fixtures() -> Vec<(Fixture, Fixture)> {
    [
        (Family::Complete(2), Family::Complete(2)),
        (Family::Complete(2), Family::Path(3)),
        (Family::Complete(3), Family::Complete(3)),
    ]
    .into_iter()
    .map(|(a, b)| (Fixture::from_family(a), Fixture::from_family(b)))
    .collect()
}
