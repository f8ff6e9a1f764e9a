//! Executable versions of the two randomized arguments that dense linear
//! triple systems contain a wicket.
//!
//! Both share the first steps: a tripartition keeping the three-partite
//! edges, a split of every class into halves, and the (6,3)-configurations
//! whose vertices respect the halves. The first argument then picks a
//! matching between `V'1` and `V'3`, builds the auxiliary graph, splits it
//! into matchings and looks for one that is not induced. The second builds a
//! 4-partite triple system from the configurations and looks for a `K_4^3`
//! whose triples come from four different configurations.

mod aux_graph;
mod configs;
mod extract;
mod matching;
mod partition;
mod quad;
mod simulate;

use thiserror::Error;

use crate::system::Vertex;

pub use aux_graph::{
    build_aux_graph, decompose_matchings, find_noninduced, AuxEdge, AuxWitness, AuxiliaryGraph,
    MatchingDecomposition, NonInduced,
};
pub use configs::{eligible_among, eligible_configs, EligibleConfig};
pub use extract::{extract_wicket_proof1, extract_wicket_proof2, noninduced_witnesses};
pub use matching::{
    matching_hit_probability, random_perfect_matching, Matching, HIT_PROBABILITY_LIMIT,
};
pub use partition::{
    halve_classes, tripartite_reduction, tripartite_reduction_with_classes, Class, Half,
    PartitionLabels, Reduction, Slot,
};
pub use quad::{
    build_quad_system, find_k43_distinct, k43_census, K43Census, QuadSystem, QuadTriple, K43,
};
pub use simulate::{
    simulate, simulate_proof1, simulate_proof2, ProofVariant, RoundOutcome, RoundTrace,
    SimulationConfig, SimulationResult, SimulationTrace, DEFAULT_TRIALS,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("one side of the matching is empty")]
    EmptySide,
    #[error("size {size} is above the limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("class GM_{class} is not a matching: {edges:?} share a vertex")]
    NotAMatching {
        class: usize,
        edges: [(Vertex, Vertex); 2],
    },
    #[error("wicket extraction failed: {0}")]
    ExtractionFailed(String),
}
