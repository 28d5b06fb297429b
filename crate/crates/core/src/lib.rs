//! Weak Roman domination.
//!
//! A labeling `f: V -> {0, 1, 2}` is a weak Roman dominating function when
//! every vertex labelled 0 has a positive neighbor and every attack on a
//! 0-vertex can be answered by moving one legion from a neighbor without
//! leaving any vertex undefended. γr(G) is the least weight of such a
//! function.
//!
//! The crate provides exact solvers (which double as test oracles), a
//! polynomial algorithm for P4-sparse graphs, a greedy approximation, and
//! generators for the hardness constructions.
//!
//! ```
//! use wrdlab::{exact, Graph, Labeling};
//!
//! let c4 = Graph::cycle(4);
//! let f = Labeling::new(vec![0, 1, 0, 1]).unwrap();
//! assert!(wrdlab::is_wrd(&c4, &f).unwrap());
//! let (gamma_r, _) = exact::gamma_r_exact(&c4, &Default::default()).unwrap();
//! assert_eq!(gamma_r, 2);
//! ```

pub mod approx;
mod error;
pub mod exact;
pub mod generate;
mod graph;
mod labeling;
pub mod p4sparse;
pub mod par;
pub mod reductions;

pub use error::{Error, MoveViolation, Result};
pub use exact::SolverConfig;
pub use graph::{Graph, Vertex, VertexSet};
pub use labeling::{
    is_rdf, is_wrd, undefended_vertices, verify_wrd, weight, DefenseMove, DefensePlan, Labeling,
    WrdVerdict,
};
pub use par::Parallelism;
