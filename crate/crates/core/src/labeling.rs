//! Vertex labelings `V -> {0, 1, 2}` and the single-attack defense semantics
//! of weak Roman domination.
//!
//! A vertex labelled 0 is *undefended* when no neighbor carries a positive
//! label. A labeling is a weak Roman dominating (WRD) function when nothing is
//! undefended and every 0-vertex `u` can be answered by moving one legion from
//! some positive neighbor `v` onto `u` without leaving any vertex undefended.

use crate::error::{Error, MoveViolation, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Labeling {
    values: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Labeling {
    type Error = Error;

    fn try_from(values: Vec<u8>) -> Result<Self> {
        Labeling::new(values)
    }
}

impl From<Labeling> for Vec<u8> {
    fn from(f: Labeling) -> Self {
        f.values
    }
}

impl std::fmt::Debug for Labeling {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Labeling({})", self.to_text())
    }
}

impl Labeling {
    pub fn new(values: Vec<u8>) -> Result<Self> {
        if let Some(pos) = values.iter().position(|&x| x > 2) {
            return Err(Error::InvalidInstance(format!(
                "label {} at vertex {pos} is not in {{0, 1, 2}}",
                values[pos]
            )));
        }
        Ok(Self { values })
    }

    pub fn zeros(n: usize) -> Self {
        Self { values: vec![0; n] }
    }

    /// Label 2 on every member of `s`, 0 elsewhere.
    pub fn doubled(s: &VertexSet) -> Self {
        let mut f = Self::zeros(s.capacity());
        for v in s.iter() {
            f.values[v] = 2;
        }
        f
    }

    /// Parses whitespace-separated digits in `{0, 1, 2}`.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            for tok in line.split_whitespace() {
                match tok {
                    "0" => values.push(0),
                    "1" => values.push(1),
                    "2" => values.push(2),
                    _ => {
                        return Err(Error::Parse {
                            line: i + 1,
                            msg: format!("`{tok}` is not a label in {{0, 1, 2}}"),
                        })
                    }
                }
            }
        }
        Ok(Self { values })
    }

    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(u8::to_string).collect();
        parts.join(" ")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, v: Vertex) -> u8 {
        self.values[v]
    }

    pub fn set(&mut self, v: Vertex, label: u8) {
        assert!(label <= 2, "label {label} out of range");
        self.values[v] = label;
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    /// w(f), the total number of legions.
    pub fn weight(&self) -> usize {
        self.values.iter().map(|&x| x as usize).sum()
    }

    /// V_i: the vertices carrying `label`.
    pub fn class(&self, label: u8) -> VertexSet {
        VertexSet::from_iter(
            self.len(),
            self.values
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == label)
                .map(|(v, _)| v),
        )
    }

    /// V_1 ∪ V_2.
    pub fn support(&self) -> VertexSet {
        VertexSet::from_iter(
            self.len(),
            self.values
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x > 0)
                .map(|(v, _)| v),
        )
    }

    /// Pointwise `self <= other`.
    pub fn le_pointwise(&self, other: &Labeling) -> bool {
        self.len() == other.len() && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Moves one legion from `from` onto the empty neighbor `to`.
    pub fn apply_move(&self, g: &Graph, from: Vertex, to: Vertex) -> Result<Labeling> {
        let illegal = |reason| Error::IllegalMove { from, to, reason };
        if from >= self.len() || to >= self.len() || from >= g.n() || to >= g.n() {
            return Err(illegal(MoveViolation::OutOfRange));
        }
        if from == to {
            return Err(illegal(MoveViolation::SameVertex));
        }
        if !g.has_edge(from, to) {
            return Err(illegal(MoveViolation::NotAdjacent));
        }
        if self.values[from] == 0 {
            return Err(illegal(MoveViolation::DefenderEmpty));
        }
        if self.values[to] != 0 {
            return Err(illegal(MoveViolation::TargetOccupied));
        }
        let mut next = self.clone();
        next.values[from] -= 1;
        next.values[to] = 1;
        Ok(next)
    }
}

fn check_size(g: &Graph, f: &Labeling) -> Result<()> {
    if g.n() != f.len() {
        return Err(Error::SizeMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    Ok(())
}

pub fn weight(f: &Labeling) -> usize {
    f.weight()
}

/// 0-labelled vertices without a positively labelled neighbor.
pub fn undefended_vertices(g: &Graph, f: &Labeling) -> Result<VertexSet> {
    check_size(g, f)?;
    Ok(VertexSet::from_iter(
        g.n(),
        g.vertices()
            .filter(|&u| f.get(u) == 0 && g.neighbors(u).iter().all(|&w| f.get(w) == 0)),
    ))
}

/// Roman dominating: every 0-vertex has a neighbor labelled 2.
pub fn is_rdf(g: &Graph, f: &Labeling) -> Result<bool> {
    check_size(g, f)?;
    Ok(g.vertices()
        .all(|u| f.get(u) > 0 || g.neighbors(u).iter().any(|&w| f.get(w) == 2)))
}

/// For each attacked 0-vertex, the neighbor whose legion answers the attack.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefensePlan {
    moves: Vec<DefenseMove>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefenseMove {
    pub attacked: Vertex,
    pub defender: Vertex,
}

impl DefensePlan {
    pub fn moves(&self) -> &[DefenseMove] {
        &self.moves
    }

    pub fn defender_of(&self, attacked: Vertex) -> Option<Vertex> {
        self.moves
            .binary_search_by_key(&attacked, |m| m.attacked)
            .ok()
            .map(|i| self.moves[i].defender)
    }
}

/// Outcome of checking a labeling against the WRD conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WrdVerdict {
    Wrd(DefensePlan),
    /// Some vertices are undefended before any attack.
    Undefended(VertexSet),
    /// `attacked` is defended, but every possible move onto it leaves some
    /// vertex undefended.
    Indefensible {
        attacked: Vertex,
    },
}

impl WrdVerdict {
    pub fn is_wrd(&self) -> bool {
        matches!(self, WrdVerdict::Wrd(_))
    }

    pub fn plan(&self) -> Option<&DefensePlan> {
        match self {
            WrdVerdict::Wrd(plan) => Some(plan),
            _ => None,
        }
    }
}

/// Full WRD check. Defenders are chosen as the smallest-index neighbor whose
/// move succeeds; the first indefensible attack is reported by vertex order.
pub fn verify_wrd(g: &Graph, f: &Labeling) -> Result<WrdVerdict> {
    let undefended = undefended_vertices(g, f)?;
    if !undefended.is_empty() {
        return Ok(WrdVerdict::Undefended(undefended));
    }
    // Number of positively labelled neighbors of each vertex.
    let guards: Vec<usize> = g
        .vertices()
        .map(|w| g.neighbors(w).iter().filter(|&&x| f.get(x) > 0).count())
        .collect();
    let mut moves = Vec::new();
    for u in g.vertices().filter(|&u| f.get(u) == 0) {
        match g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&v| move_is_safe(g, f, &guards, v, u))
        {
            Some(defender) => moves.push(DefenseMove {
                attacked: u,
                defender,
            }),
            None => return Ok(WrdVerdict::Indefensible { attacked: u }),
        }
    }
    Ok(WrdVerdict::Wrd(DefensePlan { moves }))
}

pub fn is_wrd(g: &Graph, f: &Labeling) -> Result<bool> {
    Ok(verify_wrd(g, f)?.is_wrd())
}

/// Whether moving a legion `v -> u` leaves nothing undefended, assuming `f`
/// itself has no undefended vertex. Only a defender dropping to 0 can strand
/// a neighbor, and only one it alone was guarding that `u` does not see.
fn move_is_safe(g: &Graph, f: &Labeling, guards: &[usize], v: Vertex, u: Vertex) -> bool {
    match f.get(v) {
        0 => false,
        2 => true,
        _ => g
            .neighbors(v)
            .iter()
            .all(|&w| w == u || f.get(w) > 0 || guards[w] > 1 || g.has_edge(w, u)),
    }
}
