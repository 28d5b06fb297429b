//! Greedy set-cover approximation: a dominating set chosen greedily over
//! closed neighborhoods, doubled into a WRD function.

use crate::graph::{Graph, VertexSet};
use crate::labeling::{is_wrd, Labeling};

/// Repeatedly takes the vertex whose closed neighborhood covers the most
/// still-undominated vertices, ties to the smallest index.
pub fn greedy_dominating_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut chosen = VertexSet::new(n);
    let mut open = VertexSet::full(n);
    while !open.is_empty() {
        let mut best = (0, 0);
        for v in g.vertices() {
            let mut gain = g.closed_neighborhood(v);
            gain.intersect_with(&open);
            if gain.len() > best.1 {
                best = (v, gain.len());
            }
        }
        chosen.insert(best.0);
        open.difference_with(&g.closed_neighborhood(best.0));
    }
    chosen
}

/// Label 2 on the greedy dominating set. Within `2(1 + ln(Δ + 1))` of γr.
pub fn approx_wrd(g: &Graph) -> Labeling {
    Labeling::doubled(&greedy_dominating_set(g))
}

/// Local clean-up of a WRD function: lowers single labels (2 to 1, then
/// 1 to 0) in vertex order while the result stays WRD. Never increases the
/// weight, so the ratio guarantee is kept.
pub fn improve(g: &Graph, f: &Labeling) -> Labeling {
    let mut f = f.clone();
    loop {
        let mut changed = false;
        for v in g.vertices() {
            while f.get(v) > 0 {
                let mut lower = f.clone();
                lower.set(v, f.get(v) - 1);
                if is_wrd(g, &lower).unwrap_or(false) {
                    f = lower;
                    changed = true;
                } else {
                    break;
                }
            }
        }
        if !changed {
            return f;
        }
    }
}

/// The guaranteed approximation factor `2(1 + ln(Δ + 1))`.
pub fn ratio_bound(max_degree: usize) -> f64 {
    2.0 * (1.0 + ((max_degree + 1) as f64).ln())
}
