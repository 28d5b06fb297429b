//! Characterization of graphs with γ(G) = γr(G): some minimum dominating set
//! `S` has (a) every private neighbor set `pn(v; S)` a clique, and (b) for
//! every vertex outside `S` that is nobody's private neighbor, some `v ∈ S`
//! with `pn(v; S) ∪ {u}` a clique.

use super::{dominating_sets_of_size, gamma_exact, SolverConfig};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Checks conditions (a) and (b) for the dominating set `s`.
pub fn satisfies_equality_conditions(g: &Graph, s: &VertexSet) -> Result<bool> {
    let private: Vec<VertexSet> = s
        .iter()
        .map(|v| g.private_neighbors(v, s))
        .collect::<Result<_>>()?;
    if !private.iter().all(|pn| g.is_clique(pn)) {
        return Ok(false);
    }
    let mut claimed = VertexSet::new(g.n());
    for pn in &private {
        claimed.union_with(pn);
    }
    let ok = g
        .vertices()
        .filter(|&u| !s.contains(u) && !claimed.contains(u))
        .all(|u| {
            private.iter().any(|pn| {
                let mut with_u = pn.clone();
                with_u.insert(u);
                g.is_clique(&with_u)
            })
        });
    Ok(ok)
}

/// Whether γ(G) = γr(G) by the private-neighbor characterization. Returns
/// the first minimum dominating set (lexicographic order) meeting both
/// conditions.
pub fn gamma_equals_gamma_r(g: &Graph, cfg: &SolverConfig) -> Result<(bool, Option<VertexSet>)> {
    let (gamma, _) = gamma_exact(g, cfg)?;
    for s in dominating_sets_of_size(g, gamma, cfg)? {
        if satisfies_equality_conditions(g, &s)? {
            return Ok((true, Some(s)));
        }
    }
    Ok((false, None))
}
