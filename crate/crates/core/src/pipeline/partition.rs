use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::seed;
use crate::system::{EdgeId, LinearTripleSystem, Vertex};

/// Vertex class of the tripartition `V1, V2, V3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    V1,
    V2,
    V3,
}

impl Class {
    pub const ALL: [Class; 3] = [Class::V1, Class::V2, Class::V3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Class {
        Class::ALL[i]
    }
}

/// Which half of its class a vertex fell into: `V'_i` or `V''_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Half {
    Prime,
    DoublePrime,
}

/// The four class halves used by the auxiliary constructions, in the order
/// `V'1, V''1, V'3, V''3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Slot {
    P1,
    D1,
    P3,
    D3,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::P1, Slot::D1, Slot::P3, Slot::D3];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn of(class: Class, half: Half) -> Option<Slot> {
        match (class, half) {
            (Class::V1, Half::Prime) => Some(Slot::P1),
            (Class::V1, Half::DoublePrime) => Some(Slot::D1),
            (Class::V3, Half::Prime) => Some(Slot::P3),
            (Class::V3, Half::DoublePrime) => Some(Slot::D3),
            (Class::V2, _) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionLabels {
    class_of: Vec<Class>,
    half_of: Option<Vec<Half>>,
}

impl PartitionLabels {
    pub fn new(class_of: Vec<Class>) -> Self {
        PartitionLabels {
            class_of,
            half_of: None,
        }
    }

    pub fn with_halves(class_of: Vec<Class>, half_of: Vec<Half>) -> Self {
        assert_eq!(class_of.len(), half_of.len(), "one half label per vertex");
        PartitionLabels {
            class_of,
            half_of: Some(half_of),
        }
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn class(&self, v: Vertex) -> Class {
        self.class_of[v as usize]
    }

    pub fn half(&self, v: Vertex) -> Option<Half> {
        self.half_of.as_ref().map(|h| h[v as usize])
    }

    pub fn has_halves(&self) -> bool {
        self.half_of.is_some()
    }

    pub fn slot(&self, v: Vertex) -> Option<Slot> {
        Slot::of(self.class(v), self.half(v)?)
    }

    /// Members of a class in increasing order.
    pub fn members(&self, class: Class) -> Vec<Vertex> {
        (0..self.n() as Vertex)
            .filter(|&v| self.class(v) == class)
            .collect()
    }

    /// Members of a class half in increasing order (empty without halves).
    pub fn part(&self, class: Class, half: Half) -> Vec<Vertex> {
        (0..self.n() as Vertex)
            .filter(|&v| self.class(v) == class && self.half(v) == Some(half))
            .collect()
    }

    pub fn class_sizes(&self) -> [usize; 3] {
        Class::ALL.map(|c| self.class_of.iter().filter(|&&x| x == c).count())
    }

    pub fn part_sizes(&self, half: Half) -> [usize; 3] {
        Class::ALL.map(|c| self.part(c, half).len())
    }

    /// True iff the edge has exactly one vertex in each class.
    pub fn is_rainbow(&self, vertices: [Vertex; 3]) -> bool {
        let mut seen = [false; 3];
        for v in vertices {
            seen[self.class(v).index()] = true;
        }
        seen.iter().all(|&s| s)
    }
}

/// The three-partite part of a system: edges with one vertex per class, plus
/// the map back to the original edge ids.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub subsystem: LinearTripleSystem,
    pub edge_map: Vec<EdgeId>,
    pub labels: PartitionLabels,
}

/// Uniform random tripartition; keeps the edges meeting all three classes
/// (each edge survives with probability 6/27 = 2/9).
pub fn tripartite_reduction(sys: &LinearTripleSystem, seed: u64) -> Reduction {
    let mut rng = seed::rng(seed);
    let classes: Vec<Class> = (0..sys.n())
        .map(|_| Class::from_index(rng.gen_range(0..3)))
        .collect();
    tripartite_reduction_with_classes(sys, classes)
}

/// Reduction under a caller-supplied class assignment.
///
/// # Panics
/// If `classes.len() != sys.n()`.
pub fn tripartite_reduction_with_classes(
    sys: &LinearTripleSystem,
    classes: Vec<Class>,
) -> Reduction {
    assert_eq!(classes.len(), sys.n(), "one class label per vertex");
    let labels = PartitionLabels::new(classes);
    let edge_map: Vec<EdgeId> = (0..sys.edge_count())
        .filter(|&e| labels.is_rainbow(sys.edge(e).vertices()))
        .collect();
    Reduction {
        subsystem: sys.subsystem(&edge_map),
        edge_map,
        labels,
    }
}

/// Splits every class uniformly at random into a prime half of size
/// `ceil(k/2)` and a double-prime half of size `floor(k/2)`.
pub fn halve_classes(labels: &PartitionLabels, seed: u64) -> PartitionLabels {
    let mut rng = seed::rng(seed);
    let mut half_of = vec![Half::DoublePrime; labels.n()];
    for class in Class::ALL {
        let mut members = labels.members(class);
        members.shuffle(&mut rng);
        let prime = members.len().div_ceil(2);
        for &v in &members[..prime] {
            half_of[v as usize] = Half::Prime;
        }
    }
    PartitionLabels::with_halves(labels.class_of.clone(), half_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_system() {
        let r = tripartite_reduction(&LinearTripleSystem::new(0), 1);
        assert!(r.subsystem.is_empty());
        assert_eq!(r.labels.n(), 0);
    }

    #[test]
    fn forced_labels_keep_partite_input() {
        let s = LinearTripleSystem::from_edges(6, [[0, 1, 2], [3, 4, 5]]).unwrap();
        let classes = vec![
            Class::V1,
            Class::V2,
            Class::V3,
            Class::V1,
            Class::V2,
            Class::V3,
        ];
        let r = tripartite_reduction_with_classes(&s, classes);
        assert_eq!(r.subsystem.edge_count(), 2);
        assert_eq!(r.edge_map, vec![0, 1]);
    }

    #[test]
    fn reduction_keeps_only_rainbow_edges() {
        let s = crate::generators::steiner_triple_system(15).unwrap();
        let r = tripartite_reduction(&s, 42);
        for (sub, &orig) in r.edge_map.iter().enumerate() {
            assert_eq!(r.subsystem.edge(sub), s.edge(orig));
            assert!(r.labels.is_rainbow(s.edge(orig).vertices()));
        }
        let kept = (0..s.edge_count())
            .filter(|&e| r.labels.is_rainbow(s.edge(e).vertices()))
            .count();
        assert_eq!(kept, r.subsystem.edge_count());
    }

    #[test]
    fn halves_balanced() {
        let classes = [vec![Class::V1; 4], vec![Class::V2; 5], vec![Class::V3; 1]].concat();
        let labels = PartitionLabels::new(classes);
        let h = halve_classes(&labels, 9);
        assert_eq!(h.part_sizes(Half::Prime), [2, 3, 1]);
        assert_eq!(h.part_sizes(Half::DoublePrime), [2, 2, 0]);
        assert_eq!(halve_classes(&labels, 9), h);
    }
}
