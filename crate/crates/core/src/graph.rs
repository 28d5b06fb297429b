//! Simple undirected graphs over dense vertex ids and the set queries used
//! throughout the crate.

use crate::error::{Error, Result};
use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize, Serializer};
use std::collections::VecDeque;
use std::fmt::Write as _;

pub type Vertex = usize;

/// A subset of `0..capacity`, stored as a dense bitset.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(capacity: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(capacity),
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(capacity);
        bits.insert_range(..);
        Self { bits }
    }

    /// Panics if a member is not below `capacity`.
    pub fn from_iter<I: IntoIterator<Item = Vertex>>(capacity: usize, iter: I) -> Self {
        let mut s = Self::new(capacity);
        for v in iter {
            s.insert(v);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: Vertex) {
        assert!(v < self.capacity(), "vertex {v} out of range");
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        if v < self.capacity() {
            self.bits.set(v, false);
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    /// Complement within `0..capacity`.
    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "EdgeListRepr", into = "EdgeListRepr")]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    neighbors: Vec<Vec<Vertex>>,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl TryFrom<EdgeListRepr> for Graph {
    type Error = Error;

    fn try_from(repr: EdgeListRepr) -> Result<Self> {
        Graph::new(repr.n, repr.edges)
    }
}

impl From<Graph> for EdgeListRepr {
    fn from(g: Graph) -> Self {
        EdgeListRepr {
            n: g.n(),
            edges: g.edges().collect(),
        }
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn new<I: IntoIterator<Item = (Vertex, Vertex)>>(n: usize, edges: I) -> Result<Self> {
        let mut adjacency = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInstance(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInstance(format!("self-loop at {u}")));
            }
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        Ok(Self::from_adjacency(adjacency))
    }

    fn from_adjacency(adjacency: Vec<VertexSet>) -> Self {
        let neighbors: Vec<Vec<Vertex>> = adjacency.iter().map(VertexSet::to_vec).collect();
        let m = neighbors.iter().map(Vec::len).sum::<usize>() / 2;
        Self {
            adjacency,
            neighbors,
            m,
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_adjacency(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
    }

    /// K_{1,leaves} with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star edges are valid")
    }

    /// Parses the edge-list text format: a header `n m` followed by `m` lines
    /// `u v`. Lines starting with `#` and blank lines are skipped.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header line `n m`".into(),
        })?;
        let [n, m] = parse_pair(hline, header)?;

        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, text) = lines.next().ok_or(Error::Parse {
                line: hline,
                msg: format!("header announces {m} edges but fewer edge lines follow"),
            })?;
            let [u, v] = parse_pair(line, text)?;
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex index out of range (n = {n})"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                msg: format!("unexpected line after the {m} announced edges"),
            });
        }
        Graph::new(n, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Each edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[v]
    }

    pub fn neighborhood(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        n == 0 || self.m * 2 == n * (n - 1)
    }

    /// N[v].
    pub fn closed_neighborhood(&self, v: Vertex) -> VertexSet {
        let mut s = self.adjacency[v].clone();
        s.insert(v);
        s
    }

    /// N[S], the union of closed neighborhoods over `s`.
    pub fn closed_neighborhood_of_set(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in s.iter() {
            out.union_with(&self.adjacency[v]);
            out.insert(v);
        }
        out
    }

    pub fn is_dominating(&self, s: &VertexSet) -> bool {
        self.closed_neighborhood_of_set(s).len() == self.n()
    }

    /// pn(v; S) = N[v] \ N[S \ {v}]. Requires `v` ∈ `s`.
    pub fn private_neighbors(&self, v: Vertex, s: &VertexSet) -> Result<VertexSet> {
        if v >= self.n() || !s.contains(v) {
            return Err(Error::Contract(format!(
                "private neighbors of {v} requested but {v} is not in the set"
            )));
        }
        let mut rest = s.clone();
        rest.remove(v);
        let mut pn = self.closed_neighborhood(v);
        pn.difference_with(&self.closed_neighborhood_of_set(&rest));
        Ok(pn)
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut others = s.clone();
            others.remove(v);
            others.is_subset(&self.adjacency[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adjacency[v].is_disjoint(s))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adjacency = (0..n)
            .map(|v| {
                let mut s = self.adjacency[v].complement();
                s.remove(v);
                s
            })
            .collect();
        Self::from_adjacency(adjacency)
    }

    /// Connected components ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            let mut part = VertexSet::new(n);
            seen.insert(start);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                part.insert(u);
                for &w in &self.neighbors[u] {
                    if !seen.contains(w) {
                        seen.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// The subgraph induced on `s`. Vertex `i` of the result is the `i`-th
    /// smallest member of `s`; the returned map sends it back to `self`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<Vertex>) {
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let k = map.len();
        let adjacency = map
            .iter()
            .map(|&v| {
                VertexSet::from_iter(
                    k,
                    self.neighbors[v]
                        .iter()
                        .filter(|&&w| s.contains(w))
                        .map(|&w| index[w]),
                )
            })
            .collect();
        (Self::from_adjacency(adjacency), map)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::new(off + other.n(), edges).expect("union edges are valid")
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.n();
        let across = (0..off).flat_map(|u| (0..other.n()).map(move |v| (u, v + off)));
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)))
            .chain(across);
        Graph::new(off + other.n(), edges).expect("join edges are valid")
    }

    /// Adjacency rows as 64-bit masks. Only valid for `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs n <= 64");
        self.neighbors
            .iter()
            .map(|ns| ns.iter().fold(0u64, |acc, &w| acc | (1 << w)))
            .collect()
    }
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            msg: "expected two integers".into(),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{tok}` is not a non-negative integer"),
        })
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(Error::Parse {
            line,
            msg: "expected exactly two integers".into(),
        });
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[Vertex]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    fn c4() -> Graph {
        Graph::from_edge_list("4 4\n0 1\n1 2\n2 3\n3 0").unwrap()
    }

    #[test]
    fn parses_cycle_edgeless_and_triangle() {
        let g = c4();
        assert_eq!((g.n(), g.m()), (4, 4));
        assert_eq!(g, Graph::cycle(4));

        let g = Graph::from_edge_list("1 0").unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));

        let g = Graph::from_edge_list("3 3\n0 1\n1 2\n0 2").unwrap();
        assert!(g.is_complete());
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn parse_skips_comments_and_merges_duplicates() {
        let g = Graph::from_edge_list("# triangle-ish\n3 3\n0 1\n# mid\n1 0\n1 2\n").unwrap();
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = Graph::from_edge_list("3 1\n0 5").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = Graph::from_edge_list("3 2\n0 1\n2 2").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = Graph::from_edge_list("3 1\n0 x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = Graph::from_edge_list("3 2\n0 1").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }), "{err:?}");
        let err = Graph::from_edge_list("3").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err:?}");
    }

    #[test]
    fn complement_examples() {
        let k3c = Graph::complete(3).complement();
        assert_eq!(k3c, Graph::empty(3));
        let c4c = c4().complement();
        assert_eq!(c4c.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn components() {
        assert_eq!(c4().connected_components(), vec![set(4, &[0, 1, 2, 3])]);
        let e2 = Graph::empty(2).connected_components();
        assert_eq!(e2, vec![set(2, &[0]), set(2, &[1])]);
        let g = Graph::complete(3).disjoint_union(&Graph::path(2));
        let mut sizes: Vec<_> = g
            .connected_components()
            .iter()
            .map(VertexSet::len)
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![2, 3]);
    }

    #[test]
    fn clique_and_independence() {
        let k3 = Graph::complete(3);
        assert!(k3.is_clique(&set(3, &[0, 1, 2])));
        assert!(!c4().is_clique(&set(4, &[0, 1, 2])));
        assert!(c4().is_clique(&VertexSet::new(4)));
        assert!(c4().is_independent(&set(4, &[0, 2])));
        assert!(!k3.is_independent(&set(3, &[0, 1])));
        assert!(k3.is_independent(&set(3, &[2])));
        assert!(c4().is_independent(&VertexSet::new(4)));
    }

    #[test]
    fn closed_neighborhoods() {
        assert_eq!(c4().closed_neighborhood(0), set(4, &[0, 1, 3]));
        assert_eq!(
            Graph::complete(3).closed_neighborhood(1),
            set(3, &[0, 1, 2])
        );
        assert_eq!(Graph::empty(1).closed_neighborhood(0), set(1, &[0]));
    }

    #[test]
    fn private_neighbor_examples() {
        let star = Graph::star(3);
        assert_eq!(
            star.private_neighbors(0, &set(4, &[0])).unwrap(),
            VertexSet::full(4)
        );
        assert_eq!(
            c4().private_neighbors(0, &set(4, &[0, 2])).unwrap(),
            set(4, &[0])
        );
        let p3 = Graph::path(3);
        assert_eq!(
            p3.private_neighbors(0, &set(3, &[0, 2])).unwrap(),
            set(3, &[0])
        );
        assert!(p3.private_neighbors(1, &set(3, &[0, 2])).is_err());
    }

    #[test]
    fn induced_subgraphs() {
        let (p, map) = c4().induced_subgraph(&set(4, &[0, 1, 2]));
        assert_eq!(p, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (same, _) = c4().induced_subgraph(&VertexSet::full(4));
        assert_eq!(same, c4());
        let (e, map) = c4().induced_subgraph(&VertexSet::new(4));
        assert_eq!(e.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::star(4).join(&Graph::path(3));
        assert_eq!(Graph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }
}
