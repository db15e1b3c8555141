//! Exact invariants of small graphs and their squares.
//!
//! The crate computes the stability number, clique cover number, domination
//! and independent domination numbers of a graph `G` and of its square `G²`,
//! classifies graphs against the known characterizations of graphs with
//! `α(G) = α(G²)` ("square-stable" graphs), and checks those
//! characterizations mechanically over generated corpora.
//!
//! Graphs have at most 64 vertices; adjacency rows and vertex subsets are
//! single `u64` words. All solvers are exact and exponential in the worst
//! case, guarded by the caps in [`Caps`].

pub mod classify;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod solve;
pub mod verify;
mod vertex_set;

pub use classify::{AlphaPlusClass, ClassificationReport, Simplex, Witness};
pub use generate::{Family, FamilySpec};
pub use graph::{DistanceMatrix, Graph, InducedSubgraph, Length};
pub use matching::{Matching, PerfectMatchingCount};
pub use solve::{InvariantRecord, StableSetFamily};
pub use verify::{CorpusEntry, EquivalenceReport, Suite, SuiteResult, Violation};
pub use vertex_set::{Members, VertexSet};

use thiserror::Error;

/// Largest vertex count representable by [`Graph`].
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: invalid token `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: expected a pair `u v`")]
    MalformedLine { line: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has {n} vertices; at most {MAX_VERTICES} are supported")]
    TooManyVertices { n: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("graph has {n} vertices, above the exact solver cap of {cap}")]
    SolverCap { n: usize, cap: usize },
    #[error("graph has {n} vertices, above the enumeration cap of {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
}

impl Error {
    /// True for the two size-guard refusals.
    pub fn is_cap_refusal(&self) -> bool {
        matches!(self, Error::SolverCap { .. } | Error::EnumerationCap { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Size guards for the exponential routines.
///
/// `solver_n` bounds the branch-and-bound solvers (α, γ, i, θ); `omega_n`
/// bounds anything that lists a whole family of stable sets, which can be
/// exponentially large even when α itself is cheap.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    pub solver_n: usize,
    pub omega_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            solver_n: MAX_VERTICES,
            omega_n: 24,
        }
    }
}

impl Caps {
    pub fn check_solver(&self, g: &Graph) -> Result<()> {
        if g.n() > self.solver_n.min(MAX_VERTICES) {
            Err(Error::SolverCap {
                n: g.n(),
                cap: self.solver_n.min(MAX_VERTICES),
            })
        } else {
            Ok(())
        }
    }

    pub fn check_enumeration(&self, g: &Graph) -> Result<()> {
        if g.n() > self.omega_n {
            Err(Error::EnumerationCap {
                n: g.n(),
                cap: self.omega_n,
            })
        } else {
            Ok(())
        }
    }
}
