//! Instance generators.
//!
//! Random generators are driven by [`GeneratorConfig::seed`] alone and return
//! systems with edges in lexicographic order, so identical configurations
//! serialize to identical bytes.

mod behrend;
mod steiner;

use rand::seq::index;
use serde::{Deserialize, Serialize};

use crate::patterns::Pattern;
use crate::seed;
use crate::system::{LinearTripleSystem, Triple, Vertex};

pub use behrend::{behrend_set, has_three_term_ap, rsz_system, BehrendSet};
pub use steiner::{affine_plane_ag23, steiner_triple_system, UnsupportedOrder};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    /// Stop once this many edges are present (`None`: no cap).
    pub target_edges: Option<usize>,
    pub seed: u64,
    /// Total sampling budget for [`random_linear`].
    pub max_attempts: u64,
    pub forbidden: Pattern,
    /// Stop rule for [`greedy_pattern_free`]; defaults to `50 * n^2`.
    pub max_consecutive_rejections: Option<u64>,
}

impl GeneratorConfig {
    pub fn new(n: usize, seed: u64) -> Self {
        GeneratorConfig {
            n,
            target_edges: None,
            seed,
            max_attempts: 100_000,
            forbidden: Pattern::None,
            max_consecutive_rejections: None,
        }
    }

    pub fn with_target(mut self, target: usize) -> Self {
        self.target_edges = Some(target);
        self
    }

    pub fn forbidding(mut self, pattern: Pattern) -> Self {
        self.forbidden = pattern;
        self
    }

    pub fn rejection_limit(&self) -> u64 {
        self.max_consecutive_rejections
            .unwrap_or(50 * (self.n as u64) * (self.n as u64))
    }
}

/// Output of a sampling generator, with the bookkeeping written to sidecars.
#[derive(Clone, Debug)]
pub struct Generated {
    pub system: LinearTripleSystem,
    /// False when the attempt budget ran out before `target_edges` was reached.
    pub target_reached: bool,
    pub attempts: u64,
    pub rejected_linearity: u64,
    pub rejected_pattern: u64,
    /// For pattern-forbidding runs: a full detector pass found no occurrence.
    pub certified_free: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationReport {
    pub config: GeneratorConfig,
    pub n: usize,
    pub edges: usize,
    pub target_reached: bool,
    pub attempts: u64,
    pub rejected_linearity: u64,
    pub rejected_pattern: u64,
    pub certified_free: Option<bool>,
}

impl Generated {
    pub fn report(&self, config: &GeneratorConfig) -> GenerationReport {
        GenerationReport {
            config: config.clone(),
            n: self.system.n(),
            edges: self.system.edge_count(),
            target_reached: self.target_reached,
            attempts: self.attempts,
            rejected_linearity: self.rejected_linearity,
            rejected_pattern: self.rejected_pattern,
            certified_free: self.certified_free,
        }
    }
}

enum Verdict {
    Accepted,
    NotLinear,
    Pattern,
}

fn try_insert(sys: &mut LinearTripleSystem, t: Triple, forbidden: Pattern) -> Verdict {
    if !sys.is_addable(t) {
        return Verdict::NotLinear;
    }
    let e = sys.add_edge(t).expect("addability checked");
    if forbidden.occurs_through(sys, e) {
        sys.pop_edge();
        Verdict::Pattern
    } else {
        Verdict::Accepted
    }
}

fn random_triple(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Triple {
    let v = index::sample(rng, n, 3);
    Triple::new(
        v.index(0) as Vertex,
        v.index(1) as Vertex,
        v.index(2) as Vertex,
    )
    .expect("distinct sample")
}

fn certify(sys: &LinearTripleSystem, forbidden: Pattern) -> Option<bool> {
    (forbidden != Pattern::None).then(|| !forbidden.occurs_in(sys))
}

/// Rejection sampling of uniform random triples until `target_edges` edges
/// are present or `max_attempts` triples have been drawn. Triples that break
/// linearity (or create the forbidden pattern, if one is set) are rejected.
///
/// # Panics
/// If `n < 3`.
pub fn random_linear(cfg: &GeneratorConfig) -> Generated {
    assert!(cfg.n >= 3, "random_linear needs at least 3 vertices");
    let mut rng = seed::rng(cfg.seed);
    let mut sys = LinearTripleSystem::new(cfg.n);
    let target = cfg.target_edges.unwrap_or(usize::MAX);
    let (mut attempts, mut lin, mut pat) = (0, 0, 0);
    while sys.edge_count() < target && attempts < cfg.max_attempts {
        attempts += 1;
        match try_insert(&mut sys, random_triple(&mut rng, cfg.n), cfg.forbidden) {
            Verdict::Accepted => {}
            Verdict::NotLinear => lin += 1,
            Verdict::Pattern => pat += 1,
        }
    }
    let system = sys.sorted();
    Generated {
        target_reached: system.edge_count() >= target || cfg.target_edges.is_none(),
        certified_free: certify(&system, cfg.forbidden),
        system,
        attempts,
        rejected_linearity: lin,
        rejected_pattern: pat,
    }
}

/// Random greedy growth avoiding `cfg.forbidden`: sample a triple, keep it iff
/// the system stays linear and pattern-free, and stop after
/// [`GeneratorConfig::rejection_limit`] consecutive rejections (or at the
/// target, if one is set). The result is re-certified by a full detector pass.
///
/// # Panics
/// If `n < 3`.
pub fn greedy_pattern_free(cfg: &GeneratorConfig) -> Generated {
    assert!(cfg.n >= 3, "greedy_pattern_free needs at least 3 vertices");
    let mut rng = seed::rng(cfg.seed);
    let mut sys = LinearTripleSystem::new(cfg.n);
    let limit = cfg.rejection_limit();
    let target = cfg.target_edges.unwrap_or(usize::MAX);
    let (mut attempts, mut lin, mut pat, mut streak) = (0, 0, 0, 0);
    while streak < limit && sys.edge_count() < target {
        attempts += 1;
        match try_insert(&mut sys, random_triple(&mut rng, cfg.n), cfg.forbidden) {
            Verdict::Accepted => streak = 0,
            Verdict::NotLinear => {
                lin += 1;
                streak += 1;
            }
            Verdict::Pattern => {
                pat += 1;
                streak += 1;
            }
        }
    }
    let system = sys.sorted();
    Generated {
        target_reached: cfg.target_edges.is_none_or(|t| system.edge_count() >= t),
        certified_free: certify(&system, cfg.forbidden),
        system,
        attempts,
        rejected_linearity: lin,
        rejected_pattern: pat,
    }
}
