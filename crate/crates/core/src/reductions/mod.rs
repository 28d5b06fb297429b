//! Instance generators for the hardness constructions, together with their
//! structural witnesses and witness verifiers.

mod convex;
mod rbd;
mod rxc3;

pub use convex::{verify_comb_convex, verify_split, verify_star_convex};
pub use rbd::RbdInstance;
pub use rxc3::Rxc3Instance;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use serde::{Deserialize, Serialize};

/// A tree on one side of a bipartite graph under which every vertex of the
/// other side has a connected neighborhood, or a split partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A path `backbone` with pendant `teeth`, each given as
    /// `(tooth, backbone vertex it hangs from)`.
    Comb {
        backbone: Vec<Vertex>,
        teeth: Vec<(Vertex, Vertex)>,
    },
    Star {
        center: Vertex,
        leaves: Vec<Vertex>,
    },
    Split {
        clique: Vec<Vertex>,
        independent: Vec<Vertex>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "construction", content = "source", rename_all = "snake_case")]
pub enum Provenance {
    A1(Rxc3Instance),
    A2(Rxc3Instance),
    A3(RbdInstance),
}

/// Output of a reduction: the source instance is a yes-instance iff
/// `γr(graph) <= threshold`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub threshold: usize,
    pub witness: Witness,
    /// Name of the source object each vertex stands for, e.g. `c1:3`.
    pub roles: Vec<String>,
    pub provenance: Provenance,
}

impl ReducedInstance {
    pub fn vertex(&self, role: &str) -> Option<Vertex> {
        self.roles.iter().position(|r| r == role)
    }

    pub fn verify_witness(&self) -> Result<bool> {
        match &self.witness {
            Witness::Comb { .. } => verify_comb_convex(&self.graph, &self.witness),
            Witness::Star { .. } => verify_star_convex(&self.graph, &self.witness),
            Witness::Split { .. } => verify_split(&self.graph, &self.witness),
        }
    }
}

struct Builder {
    roles: Vec<String>,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn new() -> Self {
        Self {
            roles: Vec::new(),
            edges: Vec::new(),
        }
    }

    fn add(&mut self, role: String) -> Vertex {
        self.roles.push(role);
        self.roles.len() - 1
    }

    fn finish(self) -> Result<(Graph, Vec<String>)> {
        let g = Graph::new(self.roles.len(), self.edges)?;
        Ok((g, self.roles))
    }
}

/// Comb-convex construction. Vertices: pendant pairs `c1:i`–`c2:i`, then
/// three copies `x1:j`, `x2:j`, `x3:j` of each element. Every `c1:i` sees all
/// of the first two copies and the third copy of its own three elements.
/// Threshold `4q`; the comb has backbone `x1:* x2:*` with `x3:j` hanging from
/// `x1:j` and `c2:i` from `x2:i`.
pub fn construct_a1(inst: &Rxc3Instance) -> Result<ReducedInstance> {
    let m = inst.triples().len();
    let mut b = Builder::new();
    let mut c1 = Vec::with_capacity(m);
    let mut c2 = Vec::with_capacity(m);
    for i in 1..=m {
        c1.push(b.add(format!("c1:{i}")));
        c2.push(b.add(format!("c2:{i}")));
    }
    let mut x = [Vec::new(), Vec::new(), Vec::new()];
    for j in 1..=m {
        for (copy, xs) in x.iter_mut().enumerate() {
            xs.push(b.add(format!("x{}:{j}", copy + 1)));
        }
    }
    for i in 0..m {
        b.edges.push((c1[i], c2[i]));
        let copies = x[0].iter().zip(&x[1]).zip(&x[2]);
        for (j, ((&x1, &x2), &x3)) in copies.enumerate() {
            b.edges.push((c1[i], x1));
            b.edges.push((c1[i], x2));
            if inst.contains(i, j) {
                b.edges.push((c1[i], x3));
            }
        }
    }
    let backbone = x[0].iter().chain(&x[1]).copied().collect();
    let teeth = (0..m)
        .map(|j| (x[2][j], x[0][j]))
        .chain((0..m).map(|i| (c2[i], x[1][i])))
        .collect();
    let (graph, roles) = b.finish()?;
    Ok(ReducedInstance {
        graph,
        threshold: 4 * inst.q(),
        witness: Witness::Comb { backbone, teeth },
        roles,
        provenance: Provenance::A1(inst.clone()),
    })
}

/// Star-convex construction. Vertices: `a`, pendant pairs `c1:i`–`c2:i`,
/// then one `xp:j` per element. `a` sees every `c1:i`; `c1:i` sees the `xp`
/// of its three elements. Threshold `4q`; the star is centred at `a` over
/// `{a} ∪ X' ∪ C2`.
pub fn construct_a2(inst: &Rxc3Instance) -> Result<ReducedInstance> {
    let m = inst.triples().len();
    let mut b = Builder::new();
    let a = b.add("a".into());
    let mut c1 = Vec::with_capacity(m);
    let mut c2 = Vec::with_capacity(m);
    for i in 1..=m {
        c1.push(b.add(format!("c1:{i}")));
        c2.push(b.add(format!("c2:{i}")));
    }
    let xp: Vec<Vertex> = (1..=m).map(|j| b.add(format!("xp:{j}"))).collect();
    for i in 0..m {
        b.edges.push((a, c1[i]));
        b.edges.push((c1[i], c2[i]));
        for (j, &x) in xp.iter().enumerate() {
            if inst.contains(i, j) {
                b.edges.push((c1[i], x));
            }
        }
    }
    let leaves = xp.iter().chain(&c2).copied().collect();
    let (graph, roles) = b.finish()?;
    Ok(ReducedInstance {
        graph,
        threshold: 4 * inst.q(),
        witness: Witness::Star { center: a, leaves },
        roles,
        provenance: Provenance::A2(inst.clone()),
    })
}

/// Split-graph construction: red vertices become a clique, each gets a
/// pendant copy `rp:i`, and the red-blue edges are kept. Threshold
/// `k + |R|`.
pub fn construct_a3(inst: &RbdInstance) -> Result<ReducedInstance> {
    let mut b = Builder::new();
    let mut red = Vec::with_capacity(inst.red());
    let mut pendant = Vec::with_capacity(inst.red());
    for i in 1..=inst.red() {
        red.push(b.add(format!("r:{i}")));
        pendant.push(b.add(format!("rp:{i}")));
    }
    let blue: Vec<Vertex> = (1..=inst.blue()).map(|j| b.add(format!("b:{j}"))).collect();
    for i in 0..red.len() {
        b.edges.push((red[i], pendant[i]));
        for j in i + 1..red.len() {
            b.edges.push((red[i], red[j]));
        }
    }
    for &(r, bl) in inst.edges() {
        b.edges.push((red[r], blue[bl]));
    }
    let independent = pendant.iter().chain(&blue).copied().collect();
    let (graph, roles) = b.finish()?;
    Ok(ReducedInstance {
        graph,
        threshold: inst.k() + inst.red(),
        witness: Witness::Split {
            clique: red,
            independent,
        },
        roles,
        provenance: Provenance::A3(inst.clone()),
    })
}

/// Hangs a path `v–w–x–y–z` off every vertex `v`. New vertices for `v` are
/// `n + 4v .. n + 4v + 4` in path order.
pub fn attach_p4(g: &Graph) -> (Graph, Vec<String>) {
    let n = g.n();
    let mut roles: Vec<String> = (0..n).map(|v| format!("v:{v}")).collect();
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for v in 0..n {
        let base = n + 4 * v;
        for (k, name) in ["w", "x", "y", "z"].iter().enumerate() {
            roles.push(format!("{name}:{v}"));
            let prev = if k == 0 { v } else { base + k - 1 };
            edges.push((prev, base + k));
        }
    }
    let h = Graph::new(5 * n, edges).expect("attached paths are simple");
    (h, roles)
}

/// Labeling from an exact cover: 2 on the chosen `c1:i`, 1 on the other
/// `c1:i`, 0 elsewhere. Weight `4q` for a cover of size `q`.
pub fn cover_certificate(reduced: &ReducedInstance, cover: &[usize]) -> Result<crate::Labeling> {
    let m = match &reduced.provenance {
        Provenance::A1(i) | Provenance::A2(i) => i.triples().len(),
        Provenance::A3(_) => {
            return Err(Error::InvalidInstance(
                "cover certificates apply to the RXC3 constructions".into(),
            ))
        }
    };
    let mut f = crate::Labeling::zeros(reduced.graph.n());
    for i in 1..=m {
        let v = reduced
            .vertex(&format!("c1:{i}"))
            .ok_or_else(|| Error::InvalidInstance(format!("missing role c1:{i}")))?;
        f.set(v, if cover.contains(&(i - 1)) { 2 } else { 1 });
    }
    Ok(f)
}

/// Labeling from a red-blue cover `S`: 2 on `S`, 1 on the other red
/// vertices. Weight `|S| + |R|`.
pub fn red_blue_certificate(reduced: &ReducedInstance, cover: &[usize]) -> Result<crate::Labeling> {
    let Provenance::A3(inst) = &reduced.provenance else {
        return Err(Error::InvalidInstance(
            "red-blue certificates apply to the split construction".into(),
        ));
    };
    let mut f = crate::Labeling::zeros(reduced.graph.n());
    for i in 0..inst.red() {
        let v = reduced
            .vertex(&format!("r:{}", i + 1))
            .ok_or_else(|| Error::InvalidInstance(format!("missing role r:{}", i + 1)))?;
        f.set(v, if cover.contains(&i) { 2 } else { 1 });
    }
    Ok(f)
}
