use thiserror::Error;

use crate::ring::RingSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: expected {expected}, found {found}")]
    RingMismatch { expected: RingSpec, found: RingSpec },
    #[error("operation `{op}` is not supported over {ring}")]
    UnsupportedRing { op: &'static str, ring: RingSpec },
    #[error("lcm of two zero elements is undefined")]
    LcmOfZeros,
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),

    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(String, String),
    #[error("graph is disconnected ({} components: {components:?})", components.len())]
    Disconnected { components: Vec<Vec<String>> },
    #[error("tree does not span the graph: {0}")]
    NotSpanning(String),
    #[error("graph is not a path")]
    NotAPath,
    #[error("graph is not a cycle")]
    NotACycle,
    #[error("graph is not a tree")]
    NotATree,
    #[error("not a subgraph: {0}")]
    NotASubgraph(String),

    #[error("spline does not match its host graph: {0}")]
    SplineMismatch(String),
    #[error("tuple is not a generalized spline ({violations} violated edges)")]
    NotASpline { violations: usize },
    #[error("vertex map is not an edge-labeled isomorphism: {0}")]
    NotAnIsomorphism(String),
    #[error("value for edge {0}-{1} lies outside its edge ideal")]
    OutsideIdeal(String, String),
    #[error("expected {expected} values, got {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("invalid choice: {0}")]
    InvalidChoice(String),

    #[error("enumeration needs {needed} tuples, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("exhaustive enumeration requires a finite ring, got {0}")]
    InfiniteRing(RingSpec),
    #[error("subgraphs do not cover the graph: {0}")]
    NotACover(String),

    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema violation at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("cannot parse element `{text}`: {message}")]
    Element { text: String, message: String },
}
