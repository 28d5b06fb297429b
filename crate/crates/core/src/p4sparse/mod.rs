//! P4-sparse graphs: recognition by recursive decomposition into unions,
//! joins and spiders, and a polynomial γr computation over that
//! decomposition.

mod definitional;
mod join;
mod spider;

pub use definitional::{is_p4_sparse_definitional, DEFINITIONAL_CAP};
pub use join::{gamma_r_join, gamma_r_join_traced, JoinStep};
pub use spider::{gamma_r_spider, recognize_spider, spider_graph, SpiderKind, SpiderPartition};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::labeling::{is_wrd, Labeling};
use crate::par::{self, Parallelism};
use serde::{Deserialize, Serialize};

/// Vertices in every node are indices of the decomposed graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecompositionTree {
    Leaf {
        vertex: Vertex,
    },
    /// Children are the connected components.
    Union {
        vertices: Vec<Vertex>,
        children: Vec<DecompositionTree>,
    },
    /// Children are the components of the complement.
    Join {
        vertices: Vec<Vertex>,
        children: Vec<DecompositionTree>,
    },
    Spider {
        vertices: Vec<Vertex>,
        spider: SpiderPartition,
        head: Option<Box<DecompositionTree>>,
    },
}

impl DecompositionTree {
    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            DecompositionTree::Leaf { vertex } => vec![*vertex],
            DecompositionTree::Union { vertices, .. }
            | DecompositionTree::Join { vertices, .. }
            | DecompositionTree::Spider { vertices, .. } => vertices.clone(),
        }
    }

    /// Rebuilds the graph on `0..n` from the tree alone.
    pub fn to_graph(&self, n: usize) -> Result<Graph> {
        let mut edges = Vec::new();
        self.collect_edges(&mut edges);
        Graph::new(n, edges)
    }

    fn collect_edges(&self, out: &mut Vec<(Vertex, Vertex)>) {
        match self {
            DecompositionTree::Leaf { .. } => {}
            DecompositionTree::Union { children, .. } => {
                children.iter().for_each(|c| c.collect_edges(out));
            }
            DecompositionTree::Join { children, .. } => {
                let parts: Vec<_> = children.iter().map(|c| c.vertices()).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        out.extend(a.iter().flat_map(|&u| b.iter().map(move |&v| (u, v))));
                    }
                }
                children.iter().for_each(|c| c.collect_edges(out));
            }
            DecompositionTree::Spider { spider, head, .. } => {
                let c = spider.clique();
                for (i, &u) in c.iter().enumerate() {
                    out.extend(c[i + 1..].iter().map(|&v| (u, v)));
                    out.extend(spider.head.iter().map(|&r| (u, r)));
                }
                for &(s, ci) in &spider.legs {
                    match spider.kind {
                        SpiderKind::Thin => out.push((s, ci)),
                        SpiderKind::Thick => {
                            out.extend(c.iter().filter(|&&x| x != ci).map(|&x| (s, x)))
                        }
                    }
                }
                if let Some(h) = head {
                    h.collect_edges(out);
                }
            }
        }
    }
}

/// Decomposes `g`, or `None` when `g` is not P4-sparse.
pub fn decompose(g: &Graph) -> Option<DecompositionTree> {
    if g.n() == 0 {
        return None;
    }
    decompose_on(g, &VertexSet::full(g.n()))
}

fn decompose_on(g: &Graph, part: &VertexSet) -> Option<DecompositionTree> {
    let (sub, map) = g.induced_subgraph(part);
    let lift = |s: &VertexSet| VertexSet::from_iter(g.n(), s.iter().map(|v| map[v]));
    if sub.n() == 1 {
        return Some(DecompositionTree::Leaf { vertex: map[0] });
    }
    let components = sub.connected_components();
    if components.len() > 1 {
        let children = components
            .iter()
            .map(|c| decompose_on(g, &lift(c)))
            .collect::<Option<_>>()?;
        return Some(DecompositionTree::Union {
            vertices: map,
            children,
        });
    }
    let co_components = sub.complement().connected_components();
    if co_components.len() > 1 {
        let children = co_components
            .iter()
            .map(|c| decompose_on(g, &lift(c)))
            .collect::<Option<_>>()?;
        return Some(DecompositionTree::Join {
            vertices: map,
            children,
        });
    }
    let spider = recognize_spider(&sub).ok()??.relabel(|v| map[v]);
    let head = if spider.head.is_empty() {
        None
    } else {
        let r = VertexSet::from_iter(g.n(), spider.head.iter().copied());
        Some(Box::new(decompose_on(g, &r)?))
    };
    Some(DecompositionTree::Spider {
        vertices: map,
        spider,
        head,
    })
}

/// γr of a P4-sparse graph with a certificate, in polynomial time.
/// Components are handled independently and their values summed.
pub fn gamma_r_p4sparse(g: &Graph) -> Result<(usize, Labeling)> {
    gamma_r_p4sparse_with(g, Parallelism::default())
}

pub fn gamma_r_p4sparse_with(g: &Graph, mode: Parallelism) -> Result<(usize, Labeling)> {
    let tree = decompose(g).ok_or(Error::NotP4Sparse)?;
    let roots = match tree {
        DecompositionTree::Union { children, .. } => children,
        other => vec![other],
    };
    let parts = par::map(mode, &roots, |node| connected_value(g, node));
    let mut f = Labeling::zeros(g.n());
    let mut total = 0;
    for part in parts {
        let (w, labels) = part?;
        total += w;
        for (v, x) in labels {
            f.set(v, x);
        }
    }
    if f.weight() != total || !is_wrd(g, &f)? {
        return Err(Error::Contract(format!(
            "P4-sparse certificate {f:?} does not certify weight {total}"
        )));
    }
    Ok((total, f))
}

/// Value and labels (by original vertex) of a connected node.
fn connected_value(g: &Graph, node: &DecompositionTree) -> Result<(usize, Vec<(Vertex, u8)>)> {
    let vertices = node.vertices();
    let part = VertexSet::from_iter(g.n(), vertices.iter().copied());
    let (sub, map) = g.induced_subgraph(&part);
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in map.iter().enumerate() {
        index[v] = i;
    }
    let (w, f) = match node {
        DecompositionTree::Leaf { vertex } => return Ok((1, vec![(*vertex, 1)])),
        DecompositionTree::Union { .. } => {
            return Err(Error::Contract(
                "nested union node in a decomposition".into(),
            ))
        }
        DecompositionTree::Join { children, .. } => {
            let factors: Vec<VertexSet> = children
                .iter()
                .map(|c| VertexSet::from_iter(sub.n(), c.vertices().into_iter().map(|v| index[v])))
                .collect();
            gamma_r_join(&sub, &factors)?
        }
        DecompositionTree::Spider { spider, .. } => {
            gamma_r_spider(&sub, &spider.relabel(|v| index[v]))?
        }
    };
    Ok((
        w,
        map.iter()
            .copied()
            .zip(f.values().iter().copied())
            .collect(),
    ))
}
