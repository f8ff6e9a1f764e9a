use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::configs::EligibleConfig;
use super::matching::Matching;
use super::PipelineError;
use crate::system::Vertex;

/// One reason an auxiliary edge exists: matching pair `m_i` together with
/// eligible configuration `config` (an index into the configuration list).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AuxWitness {
    pub matching_index: usize,
    pub config: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxEdge {
    pub v1: Vertex,
    pub v3: Vertex,
    pub witnesses: Vec<AuxWitness>,
    /// `M(v1, v3)`: eligible configurations with degree-two vertices `v1`
    /// and `v3`, whether or not the matching hits them.
    pub multiplicity: usize,
}

/// Bipartite graph `G_M` between `V''1` and `V''3`: `(v1, v3)` is an edge iff
/// some eligible configuration has degree-two vertices `v1, v3` and its
/// degree-one pair in `V'1 × V'3` is a pair of the matching.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryGraph {
    edges: Vec<AuxEdge>,
    #[serde(skip)]
    index: HashMap<(Vertex, Vertex), usize>,
}

impl AuxiliaryGraph {
    pub fn edges(&self) -> &[AuxEdge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn get(&self, v1: Vertex, v3: Vertex) -> Option<&AuxEdge> {
        self.index.get(&(v1, v3)).map(|&i| &self.edges[i])
    }

    pub fn contains(&self, v1: Vertex, v3: Vertex) -> bool {
        self.index.contains_key(&(v1, v3))
    }
}

pub fn build_aux_graph(configs: &[EligibleConfig], matching: &Matching) -> AuxiliaryGraph {
    let pair_index: HashMap<(Vertex, Vertex), usize> = matching
        .pairs
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();
    let mut multiplicity: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut witnesses: BTreeMap<(Vertex, Vertex), Vec<AuxWitness>> = BTreeMap::new();
    for (ci, c) in configs.iter().enumerate() {
        let key = (c.deg2[0], c.deg2[2]);
        *multiplicity.entry(key).or_default() += 1;
        if let Some(&mi) = pair_index.get(&(c.deg1[0], c.deg1[2])) {
            witnesses.entry(key).or_default().push(AuxWitness {
                matching_index: mi,
                config: ci,
            });
        }
    }
    let edges: Vec<AuxEdge> = witnesses
        .into_iter()
        .map(|((v1, v3), mut w)| {
            w.sort_by_key(|x| (x.matching_index, x.config));
            AuxEdge {
                v1,
                v3,
                witnesses: w,
                multiplicity: multiplicity[&(v1, v3)],
            }
        })
        .collect();
    let index = edges
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.v1, e.v3), i))
        .collect();
    AuxiliaryGraph { edges, index }
}

/// Classes `GM_1, ..., GM_s`: `GM_i` takes the auxiliary edges witnessed by
/// `m_i` that no earlier class took.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingDecomposition {
    pub classes: Vec<Vec<(Vertex, Vertex)>>,
}

impl MatchingDecomposition {
    pub fn class_of(&self, edge: (Vertex, Vertex)) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(&edge))
    }

    pub fn nonempty(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_empty()).count()
    }

    pub fn largest(&self) -> usize {
        self.classes.iter().map(Vec::len).max().unwrap_or(0)
    }
}

/// Greedy decomposition in matching-index order. Each class is checked to be
/// a matching; a violation is returned with the two offending edges.
pub fn decompose_matchings(
    g: &AuxiliaryGraph,
    matching: &Matching,
) -> Result<MatchingDecomposition, PipelineError> {
    let mut classes = vec![Vec::new(); matching.len()];
    for e in g.edges() {
        let first = e
            .witnesses
            .iter()
            .map(|w| w.matching_index)
            .min()
            .expect("auxiliary edges carry at least one witness");
        classes[first].push((e.v1, e.v3));
    }
    for (i, class) in classes.iter().enumerate() {
        let mut by_v1: HashMap<Vertex, (Vertex, Vertex)> = HashMap::new();
        let mut by_v3: HashMap<Vertex, (Vertex, Vertex)> = HashMap::new();
        for &edge in class {
            let clash = by_v1.insert(edge.0, edge).or(by_v3.insert(edge.1, edge));
            if let Some(other) = clash {
                return Err(PipelineError::NotAMatching {
                    class: i,
                    edges: [other, edge],
                });
            }
        }
    }
    Ok(MatchingDecomposition { classes })
}

/// A class `GM_i` that is not an induced matching: its edges `first = (C, B)`
/// and `second = (E, F)` span the auxiliary edge `spanned = (C, F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonInduced {
    pub index: usize,
    pub first: (Vertex, Vertex),
    pub second: (Vertex, Vertex),
    pub spanned: (Vertex, Vertex),
    /// Class that holds the spanned edge.
    pub spanned_class: usize,
}

/// First non-induced class, scanning classes in order and edge pairs in
/// list order.
pub fn find_noninduced(dec: &MatchingDecomposition, g: &AuxiliaryGraph) -> Option<NonInduced> {
    for (i, class) in dec.classes.iter().enumerate() {
        let members: HashSet<(Vertex, Vertex)> = class.iter().copied().collect();
        for &first in class {
            for &second in class {
                if first == second {
                    continue;
                }
                let spanned = (first.0, second.1);
                if g.contains(spanned.0, spanned.1) && !members.contains(&spanned) {
                    return Some(NonInduced {
                        index: i,
                        first,
                        second,
                        spanned,
                        spanned_class: dec
                            .class_of(spanned)
                            .expect("every auxiliary edge has a class"),
                    });
                }
            }
        }
    }
    None
}
