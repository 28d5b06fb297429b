use crate::error::{Error, Result};
use crate::exact::satisfies_equality_conditions;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::labeling::{is_wrd, Labeling};
use serde::{Deserialize, Serialize};

/// Which rule of the join cascade produced the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JoinStep {
    Complete,
    UniversalVertex,
    /// A dominating pair meeting the private-neighbor clique conditions.
    EqualityPair,
    /// A weight-2 labeling found by scanning pairs after the conditions gave
    /// no certificate.
    PairScan,
    /// `V \ N[u]` is a clique.
    CliqueRemainder,
    /// A pair inside one factor leaves a clique undominated in that factor.
    FactorPair,
    /// Three factors, one 1-label in each.
    ThreeFactors,
    /// A weight-3 labeling found only by scanning.
    TripleScan,
    DoubledPair,
}

fn checked(g: &Graph, f: Labeling) -> Result<Option<Labeling>> {
    Ok(is_wrd(g, &f)?.then_some(f))
}

fn ones(n: usize, vs: &[Vertex]) -> Labeling {
    let mut f = Labeling::zeros(n);
    for &v in vs {
        f.set(v, 1);
    }
    f
}

fn validate_factors(g: &Graph, factors: &[VertexSet]) -> Result<Vec<usize>> {
    let n = g.n();
    if factors.len() < 2 {
        return Err(Error::Contract("a join needs at least two factors".into()));
    }
    let mut owner = vec![usize::MAX; n];
    for (i, f) in factors.iter().enumerate() {
        if f.capacity() != n || f.is_empty() {
            return Err(Error::Contract(format!(
                "factor {i} is empty or sized wrongly"
            )));
        }
        for v in f.iter() {
            if owner[v] != usize::MAX {
                return Err(Error::Contract(format!("vertex {v} lies in two factors")));
            }
            owner[v] = i;
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(Error::Contract("factors do not cover every vertex".into()));
    }
    for u in 0..n {
        for v in u + 1..n {
            if owner[u] != owner[v] && !g.has_edge(u, v) {
                return Err(Error::Contract(format!(
                    "{u} and {v} lie in different factors but are not adjacent"
                )));
            }
        }
    }
    Ok(owner)
}

/// γr of a join `G1 ⊕ ... ⊕ Gk` given as its factors, never more than 4.
pub fn gamma_r_join(g: &Graph, factors: &[VertexSet]) -> Result<(usize, Labeling)> {
    gamma_r_join_traced(g, factors).map(|(w, f, _)| (w, f))
}

/// As [`gamma_r_join`], also reporting the cascade step that fired.
///
/// Value 2 is decided exactly: the pair rules are tried first, then every
/// `{1, 1}` pair is scanned. Value 3 tries the structural rules and falls back
/// to scanning `{2, 1}` pairs and `{1, 1, 1}` triples before settling on 4.
pub fn gamma_r_join_traced(
    g: &Graph,
    factors: &[VertexSet],
) -> Result<(usize, Labeling, JoinStep)> {
    let owner = validate_factors(g, factors)?;
    let n = g.n();
    if g.is_complete() {
        return Ok((1, ones(n, &[0]), JoinStep::Complete));
    }
    if let Some(u) = g.vertices().find(|&u| g.degree(u) == n - 1) {
        let mut f = Labeling::zeros(n);
        f.set(u, 2);
        if let Some(f) = checked(g, f)? {
            return Ok((2, f, JoinStep::UniversalVertex));
        }
    }

    for a in 0..n {
        for b in a + 1..n {
            let s = VertexSet::from_iter(n, [a, b]);
            if g.is_dominating(&s) && satisfies_equality_conditions(g, &s)? {
                if let Some(f) = checked(g, ones(n, &[a, b]))? {
                    return Ok((2, f, JoinStep::EqualityPair));
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            if let Some(f) = checked(g, ones(n, &[a, b]))? {
                return Ok((2, f, JoinStep::PairScan));
            }
        }
    }

    for u in g.vertices() {
        let rest = g.closed_neighborhood(u).complement();
        let first = rest.iter().next();
        if let Some(v) = first {
            if g.is_clique(&rest) {
                let mut f = ones(n, &[v]);
                f.set(u, 2);
                if let Some(f) = checked(g, f)? {
                    return Ok((3, f, JoinStep::CliqueRemainder));
                }
            }
        }
    }
    for (i, ci) in factors.iter().enumerate() {
        let Some(outside) = (0..n).find(|&v| owner[v] != i) else {
            continue;
        };
        let members = ci.to_vec();
        for (x, &u1) in members.iter().enumerate() {
            for &u2 in &members[x + 1..] {
                let mut left = ci.clone();
                left.difference_with(&g.closed_neighborhood(u1));
                left.difference_with(&g.closed_neighborhood(u2));
                if g.is_clique(&left) {
                    if let Some(f) = checked(g, ones(n, &[u1, u2, outside]))? {
                        return Ok((3, f, JoinStep::FactorPair));
                    }
                }
            }
        }
    }
    if factors.len() >= 3 {
        let picks: Vec<Vertex> = factors[..3]
            .iter()
            .map(|f| f.iter().next().expect("factors are non-empty"))
            .collect();
        if let Some(f) = checked(g, ones(n, &picks))? {
            return Ok((3, f, JoinStep::ThreeFactors));
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u != v {
                let mut f = ones(n, &[v]);
                f.set(u, 2);
                if let Some(f) = checked(g, f)? {
                    return Ok((3, f, JoinStep::TripleScan));
                }
            }
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if let Some(f) = checked(g, ones(n, &[a, b, c]))? {
                    return Ok((3, f, JoinStep::TripleScan));
                }
            }
        }
    }

    let u1 = factors[0].iter().next().expect("factors are non-empty");
    let u2 = factors[1].iter().next().expect("factors are non-empty");
    let f = Labeling::doubled(&VertexSet::from_iter(n, [u1, u2]));
    match checked(g, f)? {
        Some(f) => Ok((4, f, JoinStep::DoubledPair)),
        None => Err(Error::Contract(
            "doubling a dominating pair of a join is not a WRD function".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors_of(g: &Graph) -> Vec<VertexSet> {
        g.complement().connected_components()
    }

    #[test]
    fn c4_is_two() {
        let g = Graph::cycle(4);
        let (w, f, step) = gamma_r_join_traced(&g, &factors_of(&g)).unwrap();
        assert_eq!(w, 2);
        assert_eq!(f.weight(), 2);
        assert_eq!(step, JoinStep::EqualityPair);
    }

    #[test]
    fn p3_has_a_universal_vertex() {
        let g = Graph::path(3);
        let (w, _, step) = gamma_r_join_traced(&g, &factors_of(&g)).unwrap();
        assert_eq!(w, 2);
        assert_eq!(step, JoinStep::UniversalVertex);
    }

    #[test]
    fn complete_multipartite_with_three_big_parts_is_three() {
        // K_{4,4,4}: no pair rule or single-factor rule applies
        let g = Graph::empty(4)
            .join(&Graph::empty(4))
            .join(&Graph::empty(4));
        let (w, _, step) = gamma_r_join_traced(&g, &factors_of(&g)).unwrap();
        assert_eq!(w, 3);
        assert_eq!(step, JoinStep::ThreeFactors);
    }

    #[test]
    fn two_big_independent_factors_is_four() {
        let g = Graph::empty(4).join(&Graph::empty(4));
        let (w, f, step) = gamma_r_join_traced(&g, &factors_of(&g)).unwrap();
        assert_eq!((w, step), (4, JoinStep::DoubledPair));
        assert_eq!(f.weight(), 4);
    }

    #[test]
    fn invalid_factors_are_rejected() {
        let g = Graph::cycle(4);
        let bad = vec![
            VertexSet::from_iter(4, [0, 1]),
            VertexSet::from_iter(4, [2, 3]),
        ];
        assert!(gamma_r_join(&g, &bad).is_err());
        assert!(gamma_r_join(&g, &[VertexSet::full(4)]).is_err());
    }
}
