//! Exact linear Turán numbers `ex_L(n, F)` for small `n`.
//!
//! The search has two phases:
//!
//! 1. Shallow levels (up to [`SearchOptions::canonical_depth`] edges) are
//!    built breadth-first as one representative per isomorphism class, using
//!    canonical forms.
//! 2. Each representative is extended by a depth-first search over all
//!    triples in lexicographic order, each new edge after the previous one.
//!
//! Every pattern-free system with at least `canonical_depth` edges contains a
//! subsystem isomorphic to some representative, so some relabeling of it is
//! reached in phase 2. Nodes are pruned when the new edge creates the
//! forbidden pattern (checked only through that edge) or when a capacity
//! bound cannot beat the incumbent.
//!
//! Subtrees run in parallel in fixed-size batches. Each subtree prunes only
//! against its own incumbent and the value known before its batch started,
//! and checks a node budget against its own count plus the nodes spent
//! before its batch. Values, witnesses and node counts therefore do not
//! depend on the thread count. A time budget is inherently not repeatable.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form_with_limit, CanonicalForm};
use crate::patterns::{Embedding, Pattern};
use crate::system::{LinearTripleSystem, SystemError, Triple, Vertex};

pub const DEFAULT_MAX_N: usize = 14;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget {
            max_nodes: Some(limit),
            max_time: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub max_n: usize,
    /// Number of edges up to which partial systems are deduplicated up to
    /// isomorphism.
    pub canonical_depth: usize,
    /// Subtrees per parallel batch. Fixed so results do not depend on the
    /// number of worker threads.
    pub batch_size: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_n: DEFAULT_MAX_N,
            canonical_depth: 4,
            batch_size: 16,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtremalError {
    #[error("n = {n} is above the configured search bound {limit}")]
    SizeLimitExceeded { n: usize, limit: usize },
}

#[derive(Clone, Debug)]
pub struct ExtremalRecord {
    pub n: usize,
    pub pattern: Pattern,
    pub max_edges: usize,
    pub witness: LinearTripleSystem,
    pub nodes_explored: u64,
    pub wall_time: Duration,
    /// True when the search ran to completion. False means the budget was
    /// hit and `max_edges` is only a lower bound.
    pub proof_of_optimality: bool,
}

impl ExtremalRecord {
    pub fn tsv_header() -> &'static str {
        "n\tpattern\tmax_edges\tproof\tnodes\tseconds"
    }

    pub fn tsv_row(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{:.3}",
            self.n,
            self.pattern,
            self.max_edges,
            self.proof_of_optimality,
            self.nodes_explored,
            self.wall_time.as_secs_f64()
        )
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessViolation {
    #[error("witness is not a valid linear system: {0}")]
    Invalid(SystemError),
    #[error("witness has {actual} vertices, record says n = {claimed}")]
    WrongOrder { claimed: usize, actual: usize },
    #[error("witness contains the forbidden pattern: {0:?}")]
    ContainsPattern(Embedding),
    #[error("record claims {claimed} edges but the witness has {actual}")]
    EdgeCountMismatch { claimed: usize, actual: usize },
}

/// Re-checks a record's witness: linearity, order, pattern-freeness via the
/// full detectors, and edge count. Returns every failed clause.
pub fn verify_witness(rec: &ExtremalRecord) -> Result<(), Vec<WitnessViolation>> {
    let mut failures = Vec::new();
    if let Err(e) = rec.witness.validate() {
        failures.push(WitnessViolation::Invalid(e));
    }
    if rec.witness.n() != rec.n {
        failures.push(WitnessViolation::WrongOrder {
            claimed: rec.n,
            actual: rec.witness.n(),
        });
    }
    if let Some(emb) = rec.pattern.find(&rec.witness) {
        failures.push(WitnessViolation::ContainsPattern(emb));
    }
    if rec.witness.edge_count() != rec.max_edges {
        failures.push(WitnessViolation::EdgeCountMismatch {
            claimed: rec.max_edges,
            actual: rec.witness.edge_count(),
        });
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

pub fn exact_ex_linear(
    n: usize,
    pattern: Pattern,
    budget: SearchBudget,
) -> Result<ExtremalRecord, ExtremalError> {
    exact_ex_linear_with(n, pattern, budget, SearchOptions::default())
}

/// Maximum partial triple system (packing) on `n` points.
pub fn max_packing(n: usize, budget: SearchBudget) -> Result<ExtremalRecord, ExtremalError> {
    exact_ex_linear(n, Pattern::None, budget)
}

pub fn exact_ex_linear_with(
    n: usize,
    pattern: Pattern,
    budget: SearchBudget,
    opts: SearchOptions,
) -> Result<ExtremalRecord, ExtremalError> {
    let limit = opts.max_n.min(crate::canon::DEFAULT_CANON_LIMIT);
    if n > limit {
        return Err(ExtremalError::SizeLimitExceeded { n, limit });
    }
    let search = Search::new(n, pattern, budget);
    let mut phase1 = Counter::default();

    // Phase 1: isomorphism classes level by level.
    let mut level = vec![LinearTripleSystem::new(n)];
    let mut best = LinearTripleSystem::new(n);
    let mut exhausted = false;
    for _depth in 1..=opts.canonical_depth {
        let mut next = std::collections::BTreeSet::<CanonicalForm>::new();
        'reps: for rep in &level {
            let mut sys = rep.clone();
            for &t in &search.candidates {
                if !sys.is_addable(t) {
                    continue;
                }
                if !search.tick(&mut phase1) {
                    break 'reps;
                }
                let e = sys.add_edge(t).expect("addable");
                if !pattern.occurs_through(&sys, e) {
                    next.insert(
                        canonical_form_with_limit(&sys, limit).expect("n within canonical limit"),
                    );
                }
                sys.pop_edge();
            }
        }
        if phase1.truncated {
            break;
        }
        if next.is_empty() {
            exhausted = true;
            break;
        }
        level = next.iter().map(CanonicalForm::to_system).collect();
        best = level[0].clone();
    }

    // Phase 2: lexicographic extension of every representative.
    let mut nodes = phase1.nodes;
    let mut truncated = phase1.truncated;
    if !exhausted && !truncated {
        let mut floor = best.edge_count();
        for batch in level.chunks(opts.batch_size.max(1)) {
            let results: Vec<(Option<LinearTripleSystem>, Counter)> = batch
                .par_iter()
                .map(|rep| search.extend(rep, floor, nodes))
                .collect();
            for (witness, counter) in results {
                nodes += counter.nodes;
                truncated |= counter.truncated;
                if let Some(w) = witness {
                    if w.edge_count() > floor {
                        floor = w.edge_count();
                        best = w;
                    }
                }
            }
            if truncated {
                break;
            }
        }
    }

    Ok(ExtremalRecord {
        n,
        pattern,
        max_edges: best.edge_count(),
        witness: best.sorted(),
        nodes_explored: nodes,
        wall_time: search.start.elapsed(),
        proof_of_optimality: !truncated,
    })
}

/// Node count of one sequential piece of the search. `base` is the number of
/// nodes known to be spent before the piece started, so node budgets cut
/// each piece at a point that does not depend on scheduling.
#[derive(Clone, Copy, Debug, Default)]
struct Counter {
    base: u64,
    nodes: u64,
    truncated: bool,
}

struct Search {
    n: usize,
    pattern: Pattern,
    candidates: Vec<Triple>,
    budget: SearchBudget,
    timed_out: AtomicBool,
    start: Instant,
}

impl Search {
    fn new(n: usize, pattern: Pattern, budget: SearchBudget) -> Self {
        let mut candidates = Vec::new();
        let n32 = n as Vertex;
        for a in 0..n32 {
            for b in (a + 1)..n32 {
                for c in (b + 1)..n32 {
                    candidates.push(Triple::new(a, b, c).expect("distinct"));
                }
            }
        }
        Search {
            n,
            pattern,
            candidates,
            budget,
            timed_out: AtomicBool::new(false),
            start: Instant::now(),
        }
    }

    /// Counts one node; false once the budget is exhausted.
    fn tick(&self, c: &mut Counter) -> bool {
        if c.truncated {
            return false;
        }
        c.nodes += 1;
        let over_nodes = self.budget.max_nodes.is_some_and(|m| c.base + c.nodes > m);
        let over_time = self.timed_out.load(Ordering::Relaxed)
            || (c.nodes.is_multiple_of(1024)
                && self
                    .budget
                    .max_time
                    .is_some_and(|t| self.start.elapsed() > t));
        if over_time {
            self.timed_out.store(true, Ordering::Relaxed);
        }
        if over_nodes || over_time {
            c.truncated = true;
            return false;
        }
        true
    }

    /// Best extension of `rep` with strictly more than `floor` edges, if any.
    fn extend(
        &self,
        rep: &LinearTripleSystem,
        floor: usize,
        base: u64,
    ) -> (Option<LinearTripleSystem>, Counter) {
        let mut sys = rep.clone();
        let mut incumbent = floor;
        let mut witness = None;
        let mut counter = Counter {
            base,
            ..Counter::default()
        };
        self.dfs(&mut sys, 0, &mut incumbent, &mut witness, &mut counter);
        (witness, counter)
    }

    fn dfs(
        &self,
        sys: &mut LinearTripleSystem,
        start: usize,
        incumbent: &mut usize,
        witness: &mut Option<LinearTripleSystem>,
        counter: &mut Counter,
    ) {
        if !self.tick(counter) {
            return;
        }
        if sys.edge_count() > *incumbent {
            *incumbent = sys.edge_count();
            *witness = Some(sys.clone());
        }
        if self.upper_bound(sys, start) <= *incumbent {
            return;
        }
        for idx in start..self.candidates.len() {
            let t = self.candidates[idx];
            if !sys.is_addable(t) {
                continue;
            }
            let e = sys.add_edge(t).expect("addable");
            if !self.pattern.occurs_through(sys, e) {
                self.dfs(sys, idx + 1, incumbent, witness, counter);
            }
            sys.pop_edge();
            if counter.truncated {
                return;
            }
        }
    }

    /// Current edges plus a capacity bound on further edges drawn from
    /// `candidates[start..]`: a vertex with `k` still-coverable pairs gains at
    /// most `k / 2` edges, and each edge is counted at three vertices. This is
    /// never weaker than `uncovered_pairs / 3` restricted to coverable pairs.
    fn upper_bound(&self, sys: &LinearTripleSystem, start: usize) -> usize {
        let mut coverable = vec![0u32; self.n];
        for &t in &self.candidates[start..] {
            if sys.is_addable(t) {
                let [a, b, c] = t.vertices();
                coverable[a as usize] |= (1 << b) | (1 << c);
                coverable[b as usize] |= (1 << a) | (1 << c);
                coverable[c as usize] |= (1 << a) | (1 << b);
            }
        }
        let slots: u32 = coverable.iter().map(|m| m.count_ones() / 2).sum();
        sys.edge_count() + (slots / 3) as usize
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tiny_orders() {
        for (n, expected) in [(0, 0), (1, 0), (2, 0), (3, 1), (4, 1), (5, 2), (6, 4)] {
            let rec = max_packing(n, SearchBudget::unlimited()).unwrap();
            assert_eq!(rec.max_edges, expected, "n = {n}");
            assert!(rec.proof_of_optimality);
            assert_eq!(verify_witness(&rec), Ok(()));
        }
    }

    #[test]
    fn fano_is_the_packing_on_seven() {
        let rec = max_packing(7, SearchBudget::unlimited()).unwrap();
        assert_eq!(rec.max_edges, 7);
        assert_eq!(rec.witness.uncovered_pairs(), 0);
    }

    #[test]
    fn size_gate() {
        assert_eq!(
            exact_ex_linear(15, Pattern::Wicket, SearchBudget::unlimited()).unwrap_err(),
            ExtremalError::SizeLimitExceeded { n: 15, limit: 14 }
        );
    }

    #[test]
    fn budget_truncation_is_labelled() {
        let rec = max_packing(9, SearchBudget::nodes(10)).unwrap();
        assert!(!rec.proof_of_optimality);
        assert_eq!(verify_witness(&rec), Ok(()));
    }

    #[test]
    fn verify_catches_bad_records() {
        let mut rec = max_packing(6, SearchBudget::unlimited()).unwrap();
        rec.max_edges = 5;
        let errs = verify_witness(&rec).unwrap_err();
        assert!(matches!(
            errs[0],
            WitnessViolation::EdgeCountMismatch {
                claimed: 5,
                actual: 4
            }
        ));

        let wicket = LinearTripleSystem::from_edges(
            9,
            [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7]],
        )
        .unwrap();
        let rec = ExtremalRecord {
            n: 9,
            pattern: Pattern::Wicket,
            max_edges: 5,
            witness: wicket,
            nodes_explored: 0,
            wall_time: Duration::ZERO,
            proof_of_optimality: true,
        };
        let errs = verify_witness(&rec).unwrap_err();
        assert!(matches!(
            errs[..],
            [WitnessViolation::ContainsPattern(Embedding::Wicket(_))]
        ));
    }

    #[test]
    fn six_three_free_small() {
        // Three edges on six points either contain two disjoint edges, and a
        // third edge cannot meet both, or pairwise meet in three points.
        let rec = exact_ex_linear(6, Pattern::SixThree, SearchBudget::unlimited()).unwrap();
        assert!(rec.proof_of_optimality);
        assert_eq!(verify_witness(&rec), Ok(()));
        assert_eq!(rec.max_edges, 2);
    }
}
