//! Exact weak Roman domination number.
//!
//! `wrd_within` runs a depth-first search over label vectors in lexicographic
//! order (vertex 0 first, labels tried as 0, 1, 2) under a weight budget, so
//! the first complete labeling it reaches is the lexicographically least WRD
//! function within budget. A partial assignment is cut when
//!
//! * its weight exceeds the budget,
//! * a vertex whose closed neighborhood is fully assigned is undefended,
//! * a 0-vertex whose radius-3 ball is fully assigned has no safe defender
//!   (every vertex a defense move can strand lies within distance 3), or
//! * a packing of still-undominated vertices with pairwise disjoint
//!   unassigned closed neighborhoods is larger than the remaining budget.

use super::{gamma_exact, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{is_wrd, Labeling};
use crate::par;

pub const BRUTEFORCE_CAP: usize = 12;

/// Below this size the parallel fan-out costs more than it saves.
const PARALLEL_MIN_N: usize = 14;
const PREFIX_DEPTH: usize = 6;

struct Search {
    n: usize,
    nb: Vec<u64>,
    closed: Vec<u64>,
    full: u64,
    /// Vertices whose closed neighborhood becomes fully assigned at depth d.
    closes_at: Vec<Vec<usize>>,
    /// Vertices whose radius-3 ball becomes fully assigned at depth d.
    settles_at: Vec<Vec<usize>>,
    budget: usize,
}

#[derive(Clone)]
struct State {
    labels: Vec<u8>,
    pos: u64,
    weight: usize,
    depth: usize,
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

fn highest(mask: u64) -> usize {
    63 - mask.leading_zeros() as usize
}

impl Search {
    fn new(g: &Graph, budget: usize) -> Self {
        let n = g.n();
        let nb = g.masks();
        let closed: Vec<u64> = nb.iter().enumerate().map(|(v, m)| m | (1 << v)).collect();
        let grow = |ball: u64| bits(ball).fold(ball, |acc, w| acc | closed[w]);
        let mut closes_at = vec![Vec::new(); n];
        let mut settles_at = vec![Vec::new(); n];
        for v in 0..n {
            closes_at[highest(closed[v])].push(v);
            let ball = grow(grow(closed[v]));
            settles_at[highest(ball)].push(v);
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Self {
            n,
            nb,
            closed,
            full,
            closes_at,
            settles_at,
            budget,
        }
    }

    fn root(&self) -> State {
        State {
            labels: vec![0; self.n],
            pos: 0,
            weight: 0,
            depth: 0,
        }
    }

    /// Whether the 0-vertex `u` has a neighbor whose move leaves nothing
    /// undefended. Assumes the relevant ball is assigned.
    fn defensible(&self, st: &State, u: usize) -> bool {
        bits(self.nb[u] & st.pos).any(|v| {
            st.labels[v] == 2
                || bits(self.nb[v] & !st.pos & !(1 << u))
                    .all(|w| self.nb[w] >> u & 1 == 1 || (self.nb[w] & st.pos).count_ones() > 1)
        })
    }

    fn feasible(&self, st: &State, d: usize) -> bool {
        for &v in &self.closes_at[d] {
            if st.labels[v] == 0 && self.nb[v] & st.pos == 0 {
                return false;
            }
        }
        for &u in &self.settles_at[d] {
            if st.labels[u] == 0 && !self.defensible(st, u) {
                return false;
            }
        }
        let assigned = if st.depth >= 64 {
            u64::MAX
        } else {
            (1u64 << st.depth) - 1
        };
        let unassigned = self.full & !assigned;
        let room = (self.budget - st.weight) as u32;
        let mut used = 0u64;
        let mut packed = 0u32;
        for x in 0..self.n {
            if self.closed[x] & st.pos != 0 {
                continue;
            }
            let cand = self.closed[x] & unassigned;
            if cand == 0 {
                return false;
            }
            if cand & used == 0 {
                packed += 1;
                if packed > room {
                    return false;
                }
                used |= cand;
            }
        }
        true
    }

    fn descend(
        &self,
        st: &mut State,
        stop_at: usize,
        found: &mut dyn FnMut(&State) -> bool,
    ) -> bool {
        if st.depth == stop_at {
            return found(st);
        }
        let v = st.depth;
        for label in 0..=2u8 {
            if st.weight + label as usize > self.budget {
                break;
            }
            st.labels[v] = label;
            if label > 0 {
                st.pos |= 1 << v;
            }
            st.weight += label as usize;
            st.depth += 1;
            if self.feasible(st, v) && self.descend(st, stop_at, found) {
                return true;
            }
            st.depth -= 1;
            st.weight -= label as usize;
            st.pos &= !(1 << v);
            st.labels[v] = 0;
        }
        false
    }

    fn run(&self, mode: par::Parallelism) -> Option<Vec<u8>> {
        let n = self.n;
        if !mode.is_parallel() || n < PARALLEL_MIN_N {
            let mut st = self.root();
            return self.descend(&mut st, n, &mut |_| true).then_some(st.labels);
        }
        let mut prefixes = Vec::new();
        let mut st = self.root();
        self.descend(&mut st, PREFIX_DEPTH.min(n), &mut |s| {
            prefixes.push(s.clone());
            false
        });
        par::find_map_first(mode, &prefixes, |prefix| {
            let mut st = prefix.clone();
            self.descend(&mut st, n, &mut |_| true).then_some(st.labels)
        })
    }
}

/// The lexicographically least WRD function of weight at most `budget`, if
/// any exists.
pub fn wrd_within(g: &Graph, budget: usize, cfg: &SolverConfig) -> Result<Option<Labeling>> {
    cfg.admit(g.n())?;
    if g.n() == 0 {
        return Ok(Some(Labeling::zeros(0)));
    }
    let search = Search::new(g, budget);
    Ok(search
        .run(cfg.parallelism)
        .map(|labels| Labeling::new(labels).expect("search only emits labels 0..=2")))
}

/// γr(G) and a minimum WRD function. Budgets are tried upwards from γ(G);
/// the result is the lexicographically least optimal labeling.
pub fn gamma_r_exact(g: &Graph, cfg: &SolverConfig) -> Result<(usize, Labeling)> {
    cfg.admit(g.n())?;
    let (gamma, _) = gamma_exact(g, cfg)?;
    for budget in gamma..=2 * gamma {
        if let Some(f) = wrd_within(g, budget, cfg)? {
            if !is_wrd(g, &f)? {
                return Err(Error::Contract(format!(
                    "search produced a labeling that is not WRD: {f:?}"
                )));
            }
            return Ok((f.weight(), f));
        }
    }
    Err(Error::Contract(format!(
        "no WRD function of weight <= 2γ = {} found",
        2 * gamma
    )))
}

/// γr(G) by scanning all 3^n labelings, with the first optimal labeling in
/// scan order. Shares nothing with the pruned search beyond the WRD verifier.
pub fn gamma_r_bruteforce(g: &Graph) -> Result<(usize, Labeling)> {
    let n = g.n();
    if n > BRUTEFORCE_CAP {
        return Err(Error::CapExceeded {
            size: n,
            cap: BRUTEFORCE_CAP,
        });
    }
    // All ones has no 0-vertex, so it is always WRD.
    let mut best = (n, Labeling::new(vec![1; n])?);
    let mut digits = vec![0u8; n];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for d in digits.iter_mut() {
            *d = (c % 3) as u8;
            c /= 3;
        }
        let w: usize = digits.iter().map(|&d| d as usize).sum();
        if w < best.0 {
            let f = Labeling::new(digits.clone())?;
            if is_wrd(g, &f)? {
                best = (w, f);
            }
        }
    }
    Ok(best)
}
