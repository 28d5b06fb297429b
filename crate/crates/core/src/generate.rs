//! Seeded random graph generators.

use crate::graph::{Graph, Vertex};
use crate::p4sparse::{spider_graph, SpiderKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("generated edges are valid")
}

/// Shape of the head of a generated spider.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeadShape {
    Complete,
    Edgeless,
    Path,
}

impl HeadShape {
    pub const ALL: [HeadShape; 3] = [HeadShape::Complete, HeadShape::Edgeless, HeadShape::Path];

    pub fn graph(self, r: usize) -> Graph {
        match self {
            HeadShape::Complete => Graph::complete(r),
            HeadShape::Edgeless => Graph::empty(r),
            HeadShape::Path => Graph::path(r),
        }
    }
}

/// A random P4-sparse graph on `n >= 1` vertices, built from a random
/// decomposition tree whose vertex labels are then shuffled.
pub fn random_p4sparse(n: usize, seed: u64) -> Graph {
    assert!(n >= 1, "a P4-sparse graph needs at least one vertex");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = build(n, &mut rng);
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(&mut rng);
    Graph::new(n, g.edges().map(|(u, v)| (perm[u], perm[v]))).expect("permuted edges are valid")
}

fn build(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    // 0: union, 1: join, 2: spider
    let op = if n >= 4 {
        rng.gen_range(0..3)
    } else {
        rng.gen_range(0..2)
    };
    if op == 2 {
        let l = rng.gen_range(2..=n / 2);
        let kind = if rng.gen_bool(0.5) {
            SpiderKind::Thin
        } else {
            SpiderKind::Thick
        };
        let r = n - 2 * l;
        let head = (r > 0).then(|| build(r, rng));
        return spider_graph(l, kind, head.as_ref()).0;
    }
    let parts = rng.gen_range(2..=n.min(3));
    let mut sizes = vec![1; parts];
    for _ in parts..n {
        sizes[rng.gen_range(0..parts)] += 1;
    }
    let mut g = build(sizes[0], rng);
    for &k in &sizes[1..] {
        let h = build(k, rng);
        g = if op == 0 {
            g.disjoint_union(&h)
        } else {
            g.join(&h)
        };
    }
    g
}
