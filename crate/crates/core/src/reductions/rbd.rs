use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Red-blue domination: pick at most `k` red vertices whose neighborhoods
/// cover every blue vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RbdRepr", into = "RbdRepr")]
pub struct RbdInstance {
    red: usize,
    blue: usize,
    /// `(red index, blue index)`, sorted and deduplicated.
    edges: Vec<(usize, usize)>,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct RbdRepr {
    red: usize,
    blue: usize,
    edges: Vec<(usize, usize)>,
    k: usize,
}

impl TryFrom<RbdRepr> for RbdInstance {
    type Error = Error;

    fn try_from(r: RbdRepr) -> Result<Self> {
        RbdInstance::new(r.red, r.blue, r.edges, r.k)
    }
}

impl From<RbdInstance> for RbdRepr {
    fn from(i: RbdInstance) -> Self {
        RbdRepr {
            red: i.red,
            blue: i.blue,
            edges: i.edges,
            k: i.k,
        }
    }
}

impl RbdInstance {
    pub fn new(red: usize, blue: usize, mut edges: Vec<(usize, usize)>, k: usize) -> Result<Self> {
        if let Some(&(r, b)) = edges.iter().find(|&&(r, b)| r >= red || b >= blue) {
            return Err(Error::InvalidInstance(format!(
                "edge r{r}-b{b} outside {red} red / {blue} blue vertices"
            )));
        }
        if k > red {
            return Err(Error::InvalidInstance(format!(
                "threshold k = {k} exceeds |R| = {red}"
            )));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self {
            red,
            blue,
            edges,
            k,
        })
    }

    /// Each red-blue pair is an edge with probability `density`; every blue
    /// vertex is then given at least one red neighbor.
    pub fn random(red: usize, blue: usize, density: f64, k: usize, seed: u64) -> Result<Self> {
        if red == 0 && blue > 0 {
            return Err(Error::InvalidInstance(
                "blue vertices need at least one red vertex".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for b in 0..blue {
            let before = edges.len();
            for r in 0..red {
                if rng.gen_bool(density.clamp(0.0, 1.0)) {
                    edges.push((r, b));
                }
            }
            if edges.len() == before {
                edges.push((rng.gen_range(0..red), b));
            }
        }
        Self::new(red, blue, edges, k)
    }

    /// Header `nR nB k`, then one `r b` line per edge (0-indexed).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing header `nR nB k`".into(),
        })?;
        let h = ints(hline, header, 3)?;
        let mut edges = Vec::new();
        for (line, text) in lines {
            let e = ints(line, text, 2)?;
            if e[0] >= h[0] || e[1] >= h[1] {
                return Err(Error::Parse {
                    line,
                    msg: "edge endpoint out of range".into(),
                });
            }
            edges.push((e[0], e[1]));
        }
        Self::new(h[0], h[1], edges, h[2])
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.red, self.blue, self.k);
        for (r, b) in &self.edges {
            let _ = writeln!(out, "{r} {b}");
        }
        out
    }

    pub fn red(&self) -> usize {
        self.red
    }

    pub fn blue(&self) -> usize {
        self.blue
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn with_k(&self, k: usize) -> Result<Self> {
        Self::new(self.red, self.blue, self.edges.clone(), k)
    }

    /// Blue neighbors of each red vertex.
    pub fn red_neighborhoods(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.red];
        for &(r, b) in &self.edges {
            out[r].push(b);
        }
        out
    }

    pub fn covers(&self, reds: &[usize]) -> bool {
        let nbhd = self.red_neighborhoods();
        let mut hit = vec![false; self.blue];
        for &r in reds {
            for &b in &nbhd[r] {
                hit[b] = true;
            }
        }
        hit.into_iter().all(|h| h)
    }
}

fn ints(line: usize, text: &str, count: usize) -> Result<Vec<usize>> {
    let vals: Vec<usize> = text
        .split_whitespace()
        .map(|t| t.parse())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse {
            line,
            msg: format!("expected {count} non-negative integers"),
        })?;
    if vals.len() != count {
        return Err(Error::Parse {
            line,
            msg: format!("expected {count} integers, found {}", vals.len()),
        });
    }
    Ok(vals)
}
