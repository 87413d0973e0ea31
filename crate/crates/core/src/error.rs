use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("edge endpoint {vertex} out of range for a graph on {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex subset must be nonempty")]
    EmptySubset,
    #[error("vertex {vertex} out of range (order {order})")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("{what} has {size} vertices, above the exact-search cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("p = {0} is outside [0, 1]")]
    ProbabilityOutOfRange(Rational),
    #[error("p = {0} must lie strictly between 0 and 1")]
    OpenIntervalRequired(Rational),
    #[error("color table sizes disagree: {vertices} vertices need {expected} edge colors, got {found}")]
    TableSize {
        vertices: usize,
        expected: usize,
        found: usize,
    },
    #[error("weight vector has {found} entries, expected {expected}")]
    WeightLength { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("forbidden family is empty")]
    EmptyFamily,
    #[error("no CRG avoids the forbidden family (it contains a graph that embeds everywhere)")]
    TrivialFamily,
    #[error("envelope is not concave near p = {0}")]
    NotConcave(Rational),
}

pub type Result<T> = std::result::Result<T, Error>;
