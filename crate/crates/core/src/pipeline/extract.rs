use super::aux_graph::{AuxiliaryGraph, NonInduced};
use super::configs::EligibleConfig;
use super::quad::K43;
use super::PipelineError;
use crate::patterns::{validate_embedding, wicket_on_edges, Embedding, WicketEmbedding};
use crate::system::{EdgeId, LinearTripleSystem};

/// First 5-subset (in lexicographic order of sorted edge ids) of the union of
/// the configurations' edges that forms a validated wicket.
fn wicket_among(sys: &LinearTripleSystem, configs: &[&EligibleConfig]) -> Option<WicketEmbedding> {
    let mut pool: Vec<EdgeId> = configs.iter().flat_map(|c| c.edges()).collect();
    pool.sort_unstable();
    pool.dedup();
    let k = pool.len();
    if k < 5 {
        return None;
    }
    let mut idx = [0, 1, 2, 3, 4];
    loop {
        let edges = idx.map(|i| pool[i]);
        if let Some(w) = wicket_on_edges(sys, edges) {
            if validate_embedding(sys, &Embedding::Wicket(w)).is_ok() {
                return Some(w);
            }
        }
        // next combination
        let mut i = 5;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < k - 5 + i {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..5 {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// The three configurations behind a non-induced class: the witnesses of
/// `first` and `second` through `m_i`, and the first witness of `spanned`.
pub fn noninduced_witnesses<'a>(
    configs: &'a [EligibleConfig],
    g: &AuxiliaryGraph,
    ni: &NonInduced,
) -> Option<[&'a EligibleConfig; 3]> {
    let through = |edge: (u32, u32)| {
        g.get(edge.0, edge.1)?
            .witnesses
            .iter()
            .find(|w| w.matching_index == ni.index)
            .map(|w| &configs[w.config])
    };
    let spanned = g.get(ni.spanned.0, ni.spanned.1)?.witnesses.first()?;
    Some([
        through(ni.first)?,
        through(ni.second)?,
        &configs[spanned.config],
    ])
}

/// Wicket from a non-induced class. `first` has degree-two vertices `(C, B)`,
/// `second` has `(E, F)`, both with degree-one pair `m_i = (A, D)`, and
/// `spanned` has degree-two vertices `(C, F)`.
pub fn extract_wicket_proof1(
    sys: &LinearTripleSystem,
    first: &EligibleConfig,
    second: &EligibleConfig,
    spanned: &EligibleConfig,
) -> Result<WicketEmbedding, PipelineError> {
    let fail = |msg: &str| Err(PipelineError::ExtractionFailed(msg.to_string()));
    if (first.deg1[0], first.deg1[2]) != (second.deg1[0], second.deg1[2]) {
        return fail("the two class edges come from different matching pairs");
    }
    if first.deg2[0] == second.deg2[0] || first.deg2[2] == second.deg2[2] {
        return fail("the two class edges share a vertex");
    }
    if (spanned.deg2[0], spanned.deg2[2]) != (first.deg2[0], second.deg2[2]) {
        return fail("the spanned edge does not join the two class edges");
    }
    wicket_among(sys, &[first, second, spanned]).ok_or_else(|| {
        PipelineError::ExtractionFailed(
            "no 5 edges of the three configurations form a wicket".to_string(),
        )
    })
}

/// Wicket from a `K_4^3` with four source configurations. The configuration
/// of the triple missing slot `j` supplies the fourth vertex `v_j`; the four
/// `w` and four `v` vertices must be distinct.
pub fn extract_wicket_proof2(
    sys: &LinearTripleSystem,
    configs: &[EligibleConfig],
    k: &K43,
) -> Result<WicketEmbedding, PipelineError> {
    if !k.distinct_sources() {
        return Err(PipelineError::ExtractionFailed(
            "clique triples do not come from four configurations".to_string(),
        ));
    }
    let sources = k.sources.map(|s| &configs[s]);
    let mut eight = Vec::with_capacity(8);
    for (j, c) in sources.iter().enumerate() {
        let own = c.slot_vertices();
        for (i, &w) in k.vertices.iter().enumerate() {
            if i != j && own[i] != w {
                return Err(PipelineError::ExtractionFailed(format!(
                    "source {} does not contain the clique triple missing slot {j}",
                    k.sources[j]
                )));
            }
        }
        eight.push(own[j]);
    }
    eight.extend_from_slice(&k.vertices);
    let mut sorted = eight.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != 8 {
        return Err(PipelineError::ExtractionFailed(format!(
            "the eight clique and fourth vertices are not distinct: {eight:?}"
        )));
    }
    wicket_among(sys, &sources).ok_or_else(|| {
        PipelineError::ExtractionFailed(
            "no 5 edges of the four configurations form a wicket".to_string(),
        )
    })
}
