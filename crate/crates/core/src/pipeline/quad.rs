use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::configs::EligibleConfig;
use super::partition::Slot;
use crate::system::Vertex;

/// A triple of the 4-partite system: the configuration's vertices in
/// `V'1, V''1, V'3, V''3` with the `missing` one left out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadTriple {
    /// Vertex per slot, `None` at the missing slot.
    pub slots: [Option<Vertex>; 4],
    pub missing: Slot,
    /// Index of the source configuration.
    pub source: usize,
}

impl QuadTriple {
    pub fn vertices(&self) -> [Vertex; 3] {
        let mut out = [0; 3];
        for (o, v) in out.iter_mut().zip(self.slots.iter().flatten()) {
            *o = *v;
        }
        out
    }
}

/// Union of the `K_4^3` cliques spanned by the eligible configurations on
/// their `V'1, V''1, V'3, V''3` vertices.
#[derive(Clone, Debug, Default)]
pub struct QuadSystem {
    triples: Vec<QuadTriple>,
    index: HashMap<[Option<Vertex>; 4], usize>,
    /// Pairs of triple indices with equal vertex sets and different sources.
    /// Empty on valid input: such a triple determines its configuration.
    pub collisions: Vec<(usize, usize)>,
}

impl QuadSystem {
    pub fn triples(&self) -> &[QuadTriple] {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// Source of the triple on the given slot vertices, if present.
    pub fn source(&self, slots: [Option<Vertex>; 4]) -> Option<usize> {
        self.index.get(&slots).map(|&i| self.triples[i].source)
    }
}

pub fn build_quad_system(configs: &[EligibleConfig]) -> QuadSystem {
    let mut q = QuadSystem::default();
    for (ci, c) in configs.iter().enumerate() {
        let all = c.slot_vertices();
        for missing in Slot::ALL {
            let mut slots = all.map(Some);
            slots[missing.index()] = None;
            let t = QuadTriple {
                slots,
                missing,
                source: ci,
            };
            match q.index.get(&slots) {
                Some(&prev) => q.collisions.push((prev, q.triples.len())),
                None => {
                    q.index.insert(slots, q.triples.len());
                }
            }
            q.triples.push(t);
        }
    }
    q
}

/// Four vertices, one per slot, spanning all four triples of the system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K43 {
    /// `w'1, w''1, w'3, w''3`.
    pub vertices: [Vertex; 4],
    /// Source of the triple missing each slot, in slot order.
    pub sources: [usize; 4],
}

impl K43 {
    pub fn distinct_sources(&self) -> bool {
        let s = self.sources;
        (0..4).all(|i| (i + 1..4).all(|j| s[i] != s[j]))
    }

    pub fn single_source(&self) -> bool {
        self.sources.iter().all(|&s| s == self.sources[0])
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct K43Census {
    pub cliques: Vec<K43>,
    pub single_source: usize,
    pub distinct_sources: usize,
    /// Cliques whose sources are neither all equal nor all distinct.
    pub tag_violations: Vec<K43>,
}

/// Every `K_4^3` of the system, ordered by vertex tuple.
pub fn k43_census(q: &QuadSystem) -> K43Census {
    // Anchor on the triples missing `V''3`; the `V''3` vertex comes from the
    // triples missing `V'3` that agree on `V'1, V''1`.
    let mut d3_by_prefix: HashMap<(Vertex, Vertex), Vec<Vertex>> = HashMap::new();
    for t in &q.triples {
        if let [Some(p1), Some(d1), None, Some(d3)] = t.slots {
            d3_by_prefix.entry((p1, d1)).or_default().push(d3);
        }
    }
    let mut cliques = Vec::new();
    let mut seen = HashSet::new();
    for t in &q.triples {
        let [Some(p1), Some(d1), Some(p3), None] = t.slots else {
            continue;
        };
        for &d3 in d3_by_prefix
            .get(&(p1, d1))
            .map(Vec::as_slice)
            .unwrap_or(&[])
        {
            let v = [p1, d1, p3, d3];
            if !seen.insert(v) {
                continue;
            }
            let lookup = |missing: Slot| {
                let mut slots = v.map(Some);
                slots[missing.index()] = None;
                q.source(slots)
            };
            if let [Some(a), Some(b), Some(c), Some(d)] = Slot::ALL.map(lookup) {
                cliques.push(K43 {
                    vertices: v,
                    sources: [a, b, c, d],
                });
            }
        }
    }
    cliques.sort_by_key(|k| k.vertices);
    let mut census = K43Census::default();
    for k in &cliques {
        if k.single_source() {
            census.single_source += 1;
        } else if k.distinct_sources() {
            census.distinct_sources += 1;
        } else {
            census.tag_violations.push(*k);
        }
    }
    census.cliques = cliques;
    census
}

/// First `K_4^3` (by vertex tuple) whose four triples have four different
/// sources.
pub fn find_k43_distinct(q: &QuadSystem) -> Option<K43> {
    k43_census(q)
        .cliques
        .into_iter()
        .find(K43::distinct_sources)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::SixThreeConfig;

    fn cfg(d1: Vertex, t1: Vertex, d3: Vertex, t3: Vertex) -> EligibleConfig {
        EligibleConfig {
            config: SixThreeConfig {
                edges: [0, 1, 2],
                deg2: [0; 3],
                deg1: [0; 3],
            },
            deg1: [d1, 100, d3],
            deg2: [t1, 200, t3],
            edge_of_deg1: [0, 1, 2],
        }
    }

    #[test]
    fn one_config_one_clique() {
        let q = build_quad_system(&[cfg(1, 2, 3, 4)]);
        assert_eq!(q.len(), 4);
        assert!(q.collisions.is_empty());
        let census = k43_census(&q);
        assert_eq!(census.cliques.len(), 1);
        assert_eq!(census.single_source, 1);
        assert!(find_k43_distinct(&q).is_none());
    }

    #[test]
    fn two_disjoint_configs() {
        let q = build_quad_system(&[cfg(1, 2, 3, 4), cfg(5, 6, 7, 8)]);
        assert_eq!(q.len(), 8);
        assert_eq!(k43_census(&q).single_source, 2);
    }

    #[test]
    fn four_configs_around_one_quadruple() {
        // w = (1, 2, 3, 4); each config replaces one slot by a fresh vertex.
        let configs = [
            cfg(11, 2, 3, 4),
            cfg(1, 12, 3, 4),
            cfg(1, 2, 13, 4),
            cfg(1, 2, 3, 14),
        ];
        let q = build_quad_system(&configs);
        let k = find_k43_distinct(&q).unwrap();
        assert_eq!(k.vertices, [1, 2, 3, 4]);
        assert_eq!(k.sources, [0, 1, 2, 3]);
        assert!(k43_census(&q).tag_violations.is_empty());
    }

    #[test]
    fn repeated_triple_is_a_collision() {
        let q = build_quad_system(&[cfg(1, 2, 3, 4), cfg(9, 2, 3, 4)]);
        assert_eq!(q.collisions, vec![(0, 4)]);
    }

    #[test]
    fn mixed_sources_are_flagged() {
        // The shared triple {1, 2, 3} keeps its first source, so the clique on
        // (1, 2, 3, 9) mixes sources 0 and 1.
        let q = build_quad_system(&[cfg(1, 2, 3, 4), cfg(1, 2, 3, 9)]);
        assert_eq!(q.collisions.len(), 1);
        let census = k43_census(&q);
        assert_eq!(census.single_source, 1);
        assert_eq!(census.tag_violations.len(), 1);
        assert_eq!(census.tag_violations[0].sources, [1, 1, 1, 0]);
    }
}
