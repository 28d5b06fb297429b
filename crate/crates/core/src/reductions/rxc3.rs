use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Restricted exact cover by 3-sets: `3q` elements, `3q` triples, every
/// triple has three distinct elements and every element lies in exactly
/// three triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Rxc3Repr", into = "Rxc3Repr")]
pub struct Rxc3Instance {
    q: usize,
    elements: Vec<String>,
    triples: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct Rxc3Repr {
    q: usize,
    elements: Vec<String>,
    triples: Vec<[usize; 3]>,
}

impl TryFrom<Rxc3Repr> for Rxc3Instance {
    type Error = Error;

    fn try_from(r: Rxc3Repr) -> Result<Self> {
        Rxc3Instance::with_names(r.q, r.elements, r.triples)
    }
}

impl From<Rxc3Instance> for Rxc3Repr {
    fn from(i: Rxc3Instance) -> Self {
        Rxc3Repr {
            q: i.q,
            elements: i.elements,
            triples: i.triples,
        }
    }
}

const MAX_ATTEMPTS: usize = 100_000;

impl Rxc3Instance {
    /// Elements are named `x1..x{3q}`.
    pub fn new(q: usize, triples: Vec<[usize; 3]>) -> Result<Self> {
        let elements = (1..=3 * q).map(|i| format!("x{i}")).collect();
        Self::with_names(q, elements, triples)
    }

    pub fn with_names(
        q: usize,
        elements: Vec<String>,
        mut triples: Vec<[usize; 3]>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidInstance(msg));
        if q == 0 {
            return bad("q must be positive".into());
        }
        if elements.len() != 3 * q {
            return bad(format!(
                "expected {} elements, got {}",
                3 * q,
                elements.len()
            ));
        }
        if triples.len() != 3 * q {
            return bad(format!("expected {} triples, got {}", 3 * q, triples.len()));
        }
        let mut names = HashMap::new();
        for (i, e) in elements.iter().enumerate() {
            if names.insert(e.as_str(), i).is_some() {
                return bad(format!("element `{e}` listed twice"));
            }
        }
        let mut occurrences = vec![0usize; 3 * q];
        for (i, t) in triples.iter_mut().enumerate() {
            t.sort_unstable();
            if t[2] >= 3 * q {
                return bad(format!("triple {} names an unknown element", i + 1));
            }
            if t[0] == t[1] || t[1] == t[2] {
                return bad(format!("triple {} repeats an element", i + 1));
            }
            for &x in t.iter() {
                occurrences[x] += 1;
            }
        }
        if let Some(x) = occurrences.iter().position(|&c| c != 3) {
            return bad(format!(
                "element `{}` occurs in {} triples, expected exactly 3",
                elements[x], occurrences[x]
            ));
        }
        Ok(Self {
            q,
            elements,
            triples,
        })
    }

    /// q = 1: the only valid instance, three copies of X.
    pub fn forced() -> Self {
        Self::new(1, vec![[0, 1, 2]; 3]).expect("forced instance is valid")
    }

    /// The six-triple instance over `x1..x6` used to illustrate the
    /// comb-convex and star-convex constructions.
    pub fn example_one() -> Self {
        let t = |a: usize, b: usize, c: usize| [a - 1, b - 1, c - 1];
        Self::new(
            2,
            vec![
                t(1, 4, 5),
                t(2, 4, 3),
                t(2, 3, 5),
                t(1, 4, 6),
                t(1, 2, 6),
                t(3, 5, 6),
            ],
        )
        .expect("example instance is valid")
    }

    /// Random instance: the 9q element occurrences are shuffled and cut
    /// into triples, rejecting shuffles that put an element twice in one
    /// triple.
    pub fn random(q: usize, seed: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidInstance("q must be positive".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut slots: Vec<usize> = (0..3 * q).flat_map(|x| [x, x, x]).collect();
        for _ in 0..MAX_ATTEMPTS {
            slots.shuffle(&mut rng);
            let triples: Vec<[usize; 3]> = slots.chunks(3).map(|c| [c[0], c[1], c[2]]).collect();
            if triples
                .iter()
                .all(|t| t[0] != t[1] && t[1] != t[2] && t[0] != t[2])
            {
                return Self::new(q, triples);
            }
        }
        Err(Error::Generation(format!(
            "no valid RXC3 instance with q = {q} after {MAX_ATTEMPTS} attempts"
        )))
    }

    /// Line 1: `q`; then `3q` lines of three element names each. Elements
    /// are indexed by name, shorter names first (so `x2` precedes `x10`).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (qline, qtext) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing `q` line".into(),
        })?;
        let q: usize = qtext.parse().map_err(|_| Error::Parse {
            line: qline,
            msg: format!("`{qtext}` is not a positive integer"),
        })?;
        let mut rows: Vec<[&str; 3]> = Vec::new();
        for (line, text) in lines {
            let toks: Vec<&str> = text.split_whitespace().collect();
            match toks[..] {
                [a, b, c] => rows.push([a, b, c]),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: format!("expected three element names, found {}", toks.len()),
                    })
                }
            }
        }
        let mut elements: Vec<String> = rows.iter().flatten().map(|s| s.to_string()).collect();
        elements.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        elements.dedup();
        let index: HashMap<&str, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.as_str(), i))
            .collect();
        let triples = rows
            .iter()
            .map(|r| [index[r[0]], index[r[1]], index[r[2]]])
            .collect();
        Self::with_names(q, elements, triples)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.q);
        for t in &self.triples {
            let _ = writeln!(
                out,
                "{} {} {}",
                self.elements[t[0]], self.elements[t[1]], self.elements[t[2]]
            );
        }
        out
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn triples(&self) -> &[[usize; 3]] {
        &self.triples
    }

    pub fn contains(&self, triple: usize, element: usize) -> bool {
        self.triples[triple].contains(&element)
    }

    /// Whether the chosen triples cover every element exactly once.
    pub fn is_exact_cover(&self, chosen: &[usize]) -> bool {
        let mut count = vec![0; 3 * self.q];
        for &i in chosen {
            if i >= self.triples.len() {
                return false;
            }
            for &x in &self.triples[i] {
                count[x] += 1;
            }
        }
        count.iter().all(|&c| c == 1)
    }
}
