use super::Witness;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidWitness(msg.into()))
}

/// Checks that `tree_edges` form a tree on `side`, then that the graph is
/// bipartite across `side` / rest with every rest-vertex's neighborhood
/// connected in the tree.
fn neighborhoods_are_subtrees(
    g: &Graph,
    side: &VertexSet,
    tree_edges: &[(Vertex, Vertex)],
) -> Result<bool> {
    let n = g.n();
    if tree_edges.len() + 1 != side.len() {
        return bad("tree edge count does not match its vertex count");
    }
    let tree = Graph::new(n, tree_edges.iter().copied())
        .map_err(|e| Error::InvalidWitness(e.to_string()))?;
    let (on_side, _) = tree.induced_subgraph(side);
    if !on_side.is_connected() || on_side.m() != tree_edges.len() {
        return bad("witness is not a tree on its vertex set");
    }

    let rest = side.complement();
    if !g.is_independent(side) || !g.is_independent(&rest) {
        return Ok(false);
    }
    for y in rest.iter() {
        let nb = g.neighborhood(y);
        if nb.len() <= 1 {
            continue;
        }
        let (sub, _) = tree.induced_subgraph(nb);
        if !sub.is_connected() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn distinct_in_range(n: usize, vs: impl IntoIterator<Item = Vertex>) -> Result<VertexSet> {
    let mut s = VertexSet::new(n);
    for v in vs {
        if v >= n {
            return bad(format!("vertex {v} out of range"));
        }
        if s.contains(v) {
            return bad(format!("vertex {v} appears twice"));
        }
        s.insert(v);
    }
    Ok(s)
}

/// Verifies a comb witness: a path backbone, each tooth pendant to a
/// distinct backbone vertex, and every vertex off the comb having a
/// neighborhood that induces a subtree of the comb.
pub fn verify_comb_convex(g: &Graph, witness: &Witness) -> Result<bool> {
    let Witness::Comb { backbone, teeth } = witness else {
        return bad("expected a comb witness");
    };
    if backbone.is_empty() {
        return bad("comb has an empty backbone");
    }
    let n = g.n();
    let side = distinct_in_range(n, backbone.iter().copied().chain(teeth.iter().map(|t| t.0)))?;
    let spine = VertexSet::from_iter(n, backbone.iter().copied());
    let mut used = VertexSet::new(n);
    for &(_, at) in teeth {
        if !spine.contains(at) {
            return bad(format!(
                "tooth attached to {at}, which is not on the backbone"
            ));
        }
        if used.contains(at) {
            return bad(format!("backbone vertex {at} carries two teeth"));
        }
        used.insert(at);
    }
    let edges: Vec<_> = backbone
        .windows(2)
        .map(|w| (w[0], w[1]))
        .chain(teeth.iter().copied())
        .collect();
    neighborhoods_are_subtrees(g, &side, &edges)
}

/// Verifies a star witness. In a star a vertex set is connected iff it
/// holds the center or at most one vertex.
pub fn verify_star_convex(g: &Graph, witness: &Witness) -> Result<bool> {
    let Witness::Star { center, leaves } = witness else {
        return bad("expected a star witness");
    };
    let n = g.n();
    let side = distinct_in_range(n, std::iter::once(*center).chain(leaves.iter().copied()))?;
    let edges: Vec<_> = leaves.iter().map(|&l| (*center, l)).collect();
    neighborhoods_are_subtrees(g, &side, &edges)
}

/// Verifies a split partition: the parts cover V, one is a clique and the
/// other independent.
pub fn verify_split(g: &Graph, witness: &Witness) -> Result<bool> {
    let Witness::Split {
        clique,
        independent,
    } = witness
    else {
        return bad("expected a split witness");
    };
    let all = distinct_in_range(g.n(), clique.iter().chain(independent).copied())?;
    if all.len() != g.n() {
        return bad("split partition does not cover every vertex");
    }
    let k = VertexSet::from_iter(g.n(), clique.iter().copied());
    let i = VertexSet::from_iter(g.n(), independent.iter().copied());
    Ok(g.is_clique(&k) && g.is_independent(&i))
}
