use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::labeling::{is_wrd, Labeling};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpiderKind {
    /// `N(s_i) = {c_i}`.
    Thin,
    /// `N(s_i) = C \ {c_i}`.
    Thick,
}

/// A spider partition `(S, C, R)`: `C` a clique, `S` independent, `R`
/// complete to `C` and anticomplete to `S`, with legs `(s_i, c_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpiderPartition {
    pub kind: SpiderKind,
    /// `(s_i, c_i)` pairs, ordered by `s_i`.
    pub legs: Vec<(Vertex, Vertex)>,
    /// The head `R`, ascending.
    pub head: Vec<Vertex>,
}

impl SpiderPartition {
    pub fn len(&self) -> usize {
        self.legs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.legs.is_empty()
    }

    pub fn body(&self) -> Vec<Vertex> {
        self.legs.iter().map(|l| l.0).collect()
    }

    pub fn clique(&self) -> Vec<Vertex> {
        self.legs.iter().map(|l| l.1).collect()
    }

    /// Thick with two legs is a P4 with an optional head, the same graph
    /// as a thin spider after re-pairing.
    fn effective_kind(&self) -> SpiderKind {
        if self.len() == 2 {
            SpiderKind::Thin
        } else {
            self.kind
        }
    }

    /// Re-indexes every vertex through `f`.
    pub fn relabel(&self, f: impl Fn(Vertex) -> Vertex) -> SpiderPartition {
        let mut legs: Vec<_> = self.legs.iter().map(|&(s, c)| (f(s), f(c))).collect();
        legs.sort_unstable();
        let mut head: Vec<_> = self.head.iter().map(|&r| f(r)).collect();
        head.sort_unstable();
        SpiderPartition {
            kind: self.kind,
            legs,
            head,
        }
    }

    /// Checks every defining condition against `g`, which must consist of
    /// exactly `S ∪ C ∪ R`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let fail = |msg: &str| Err(Error::InvalidWitness(format!("spider partition: {msg}")));
        let l = self.len();
        if l < 2 {
            return fail("needs at least two legs");
        }
        let mut seen = VertexSet::new(n);
        for v in self
            .body()
            .into_iter()
            .chain(self.clique())
            .chain(self.head.iter().copied())
        {
            if v >= n || seen.contains(v) {
                return fail("vertices must be distinct and in range");
            }
            seen.insert(v);
        }
        if seen.len() != n {
            return fail("S, C and R must cover the graph");
        }
        let s = VertexSet::from_iter(n, self.body());
        let c = VertexSet::from_iter(n, self.clique());
        if !g.is_clique(&c) {
            return fail("C is not a clique");
        }
        if !g.is_independent(&s) {
            return fail("S is not independent");
        }
        for &r in &self.head {
            if !c.is_subset(g.neighborhood(r)) || !s.is_disjoint(g.neighborhood(r)) {
                return fail("a head vertex is not complete to C and anticomplete to S");
            }
        }
        for &(si, ci) in &self.legs {
            let expected = match self.kind {
                SpiderKind::Thin => VertexSet::from_iter(n, [ci]),
                SpiderKind::Thick => {
                    let mut e = c.clone();
                    e.remove(ci);
                    e
                }
            };
            if g.neighborhood(si) != &expected {
                return fail("a leg does not match the thin/thick pattern");
            }
        }
        Ok(())
    }
}

/// Spider recognition on a graph that is connected and co-connected.
///
/// `S` must be the set of minimum-degree vertices: a thin leg has degree 1
/// while every other vertex has degree at least 2, and a thick leg has
/// degree `l - 1` while clique vertices have `2l - 2 + |R|` and head vertices
/// at least `l`.
pub fn recognize_spider(g: &Graph) -> Result<Option<SpiderPartition>> {
    if g.n() < 2 || !g.is_connected() || !g.complement().is_connected() {
        return Err(Error::Contract(
            "spider recognition needs a connected, co-connected graph".into(),
        ));
    }
    let n = g.n();
    let delta = g.vertices().map(|v| g.degree(v)).min().unwrap_or(0);
    let s = VertexSet::from_iter(n, g.vertices().filter(|&v| g.degree(v) == delta));
    let l = s.len();
    if l < 2 || !g.is_independent(&s) {
        return Ok(None);
    }
    let mut c = VertexSet::new(n);
    for v in s.iter() {
        c.union_with(g.neighborhood(v));
    }
    if c.len() != l || !g.is_clique(&c) {
        return Ok(None);
    }
    let kind = if delta == 1 {
        SpiderKind::Thin
    } else if delta == l - 1 {
        SpiderKind::Thick
    } else {
        return Ok(None);
    };
    let mut legs = Vec::with_capacity(l);
    let mut matched = VertexSet::new(n);
    for si in s.iter() {
        let ci = match kind {
            SpiderKind::Thin => g.neighbors(si)[0],
            SpiderKind::Thick => match c.difference(g.neighborhood(si)).to_vec()[..] {
                [only] => only,
                _ => return Ok(None),
            },
        };
        if matched.contains(ci) {
            return Ok(None);
        }
        matched.insert(ci);
        legs.push((si, ci));
    }
    let mut body = s.clone();
    body.union_with(&c);
    let head = body.complement().to_vec();
    let sp = SpiderPartition { kind, legs, head };
    Ok(sp.validate(g).is_ok().then_some(sp))
}

/// γr of a spider from its partition alone:
///
/// | kind  | head   | γr      |
/// |-------|--------|---------|
/// | thin  | empty  | `l`     |
/// | thin  | non-empty | `l + 1` |
/// | thick, `l >= 3` | any | 3 |
///
/// (Thick with two legs is a thin spider.) The certificate is checked.
pub fn gamma_r_spider(g: &Graph, sp: &SpiderPartition) -> Result<(usize, Labeling)> {
    sp.validate(g)?;
    let mut f = Labeling::zeros(g.n());
    let l = sp.len();
    let value = match (sp.effective_kind(), sp.head.is_empty()) {
        (SpiderKind::Thin, true) => {
            for s in sp.body() {
                f.set(s, 1);
            }
            l
        }
        (SpiderKind::Thin, false) => {
            for (i, c) in sp.clique().into_iter().enumerate() {
                f.set(c, if i == 0 { 2 } else { 1 });
            }
            l + 1
        }
        (SpiderKind::Thick, _) => {
            let (s0, c0) = sp.legs[0];
            f.set(c0, 2);
            f.set(s0, 1);
            3
        }
    };
    if !is_wrd(g, &f)? {
        return Err(Error::Contract(format!(
            "spider certificate {f:?} is not a WRD function"
        )));
    }
    Ok((value, f))
}

/// Builds a spider on `S = 0..l`, `C = l..2l`, `R = 2l..` with the given
/// head graph (or none).
pub fn spider_graph(l: usize, kind: SpiderKind, head: Option<&Graph>) -> (Graph, SpiderPartition) {
    assert!(l >= 2, "a spider needs at least two legs");
    let r = head.map_or(0, Graph::n);
    let mut edges = Vec::new();
    for i in 0..l {
        for j in 0..l {
            let leg = match kind {
                SpiderKind::Thin => i == j,
                SpiderKind::Thick => i != j,
            };
            if leg {
                edges.push((i, l + j));
            }
            if i < j {
                edges.push((l + i, l + j));
            }
        }
        for k in 0..r {
            edges.push((l + i, 2 * l + k));
        }
    }
    if let Some(h) = head {
        edges.extend(h.edges().map(|(u, v)| (2 * l + u, 2 * l + v)));
    }
    let g = Graph::new(2 * l + r, edges).expect("spider edges are valid");
    let sp = SpiderPartition {
        kind,
        legs: (0..l).map(|i| (i, l + i)).collect(),
        head: (2 * l..2 * l + r).collect(),
    };
    (g, sp)
}
