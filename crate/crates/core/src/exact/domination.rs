use super::SolverConfig;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

fn closed_masks(g: &Graph) -> Vec<u64> {
    g.masks()
        .into_iter()
        .enumerate()
        .map(|(v, m)| m | (1 << v))
        .collect()
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn mask_to_set(n: usize, mut mask: u64) -> VertexSet {
    let mut s = VertexSet::new(n);
    while mask != 0 {
        s.insert(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    s
}

struct MinDominating {
    closed: Vec<u64>,
    full: u64,
    max_cover: u32,
    best: u64,
    best_size: u32,
}

impl MinDominating {
    fn search(&mut self, dominated: u64, chosen: u64, size: u32) {
        let open = self.full & !dominated;
        if open == 0 {
            if size < self.best_size {
                self.best_size = size;
                self.best = chosen;
            }
            return;
        }
        let lower = open.count_ones().div_ceil(self.max_cover);
        if size + lower >= self.best_size {
            return;
        }
        // Branch on the undominated vertex with the fewest possible dominators.
        let mut pick = 0;
        let mut fewest = u32::MAX;
        let mut rest = open;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = self.closed[u].count_ones();
            if c < fewest {
                fewest = c;
                pick = u;
            }
        }
        let mut options = self.closed[pick];
        while options != 0 {
            let w = options.trailing_zeros() as usize;
            options &= options - 1;
            self.search(dominated | self.closed[w], chosen | (1 << w), size + 1);
        }
    }
}

/// γ(G) with a minimum dominating set, by branch and bound over the
/// undominated vertices.
pub fn gamma_exact(g: &Graph, cfg: &SolverConfig) -> Result<(usize, VertexSet)> {
    cfg.admit(g.n())?;
    let n = g.n();
    if n == 0 {
        return Ok((0, VertexSet::new(0)));
    }
    let closed = closed_masks(g);
    let max_cover = closed.iter().map(|m| m.count_ones()).max().unwrap_or(1);
    let mut solver = MinDominating {
        closed,
        full: full_mask(n),
        max_cover,
        best: full_mask(n),
        best_size: n as u32 + 1,
    };
    solver.search(0, 0, 0);
    Ok((solver.best_size as usize, mask_to_set(n, solver.best)))
}

/// All dominating sets of exactly `k` vertices, in lexicographic order.
pub fn dominating_sets_of_size(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<Vec<VertexSet>> {
    cfg.admit(g.n())?;
    let n = g.n();
    let closed = closed_masks(g);
    let full = full_mask(n);
    let mut out = Vec::new();
    // suffix[i] = vertices dominated by any of i..n
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] | closed[i];
    }

    fn rec(
        start: usize,
        left: usize,
        dominated: u64,
        chosen: u64,
        ctx: (&[u64], &[u64], u64, usize),
        out: &mut Vec<u64>,
    ) {
        let (closed, suffix, full, n) = ctx;
        if left == 0 {
            if dominated == full {
                out.push(chosen);
            }
            return;
        }
        if dominated | suffix[start] != full {
            return;
        }
        let last = n.saturating_sub(left);
        for (v, &nv) in closed.iter().enumerate().take(last + 1).skip(start) {
            rec(v + 1, left - 1, dominated | nv, chosen | (1 << v), ctx, out);
        }
    }

    let mut masks = Vec::new();
    if k <= n {
        rec(0, k, 0, 0, (&closed, &suffix, full, n), &mut masks);
    }
    out.extend(masks.into_iter().map(|m| mask_to_set(n, m)));
    Ok(out)
}
