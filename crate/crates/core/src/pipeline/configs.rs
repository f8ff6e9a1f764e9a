use serde::{Deserialize, Serialize};

use super::partition::{Class, Half, PartitionLabels, Slot};
use crate::patterns::{enumerate_63, SixThreeConfig};
use crate::system::{EdgeId, LinearTripleSystem, Vertex};

/// A (6,3)-configuration whose degree-one vertices sit in `V'1, V'2, V'3`
/// and whose degree-two vertices sit in `V''1, V''2, V''3`.
///
/// Index `i` of `deg1`/`deg2` is class `V_{i+1}`. The edge through `deg1[i]`
/// is `{deg1[i], deg2[j], deg2[k]}` with `{i, j, k} = {0, 1, 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EligibleConfig {
    pub config: SixThreeConfig,
    pub deg1: [Vertex; 3],
    pub deg2: [Vertex; 3],
    pub edge_of_deg1: [EdgeId; 3],
}

impl EligibleConfig {
    /// Its vertices in `V'1, V''1, V'3, V''3`.
    pub fn slot_vertices(&self) -> [Vertex; 4] {
        [self.deg1[0], self.deg2[0], self.deg1[2], self.deg2[2]]
    }

    pub fn slot_vertex(&self, slot: Slot) -> Vertex {
        self.slot_vertices()[slot.index()]
    }

    pub fn edges(&self) -> [EdgeId; 3] {
        self.config.edges
    }

    /// Role assignment of a raw configuration, if it is eligible.
    pub fn classify(
        sys: &LinearTripleSystem,
        labels: &PartitionLabels,
        config: &SixThreeConfig,
    ) -> Option<Self> {
        let mut deg1 = [None; 3];
        let mut deg2 = [None; 3];
        for &v in &config.deg1 {
            if labels.half(v)? != Half::Prime {
                return None;
            }
            let slot = &mut deg1[labels.class(v).index()];
            if slot.replace(v).is_some() {
                return None;
            }
        }
        for &v in &config.deg2 {
            if labels.half(v)? != Half::DoublePrime {
                return None;
            }
            let slot = &mut deg2[labels.class(v).index()];
            if slot.replace(v).is_some() {
                return None;
            }
        }
        let deg1 = deg1.map(|v| v.expect("three classes filled"));
        let deg2 = deg2.map(|v| v.expect("three classes filled"));
        let mut edge_of_deg1 = [0; 3];
        for (i, &d) in deg1.iter().enumerate() {
            let e = config
                .edges
                .iter()
                .copied()
                .find(|&e| sys.edge(e).contains(d))
                .expect("degree-one vertex lies on a configuration edge");
            let t = sys.edge(e);
            // the other two vertices must be the degree-two vertices of the other classes
            let others = Class::ALL
                .iter()
                .filter(|c| c.index() != i)
                .all(|c| t.contains(deg2[c.index()]));
            if !others {
                return None;
            }
            edge_of_deg1[i] = e;
        }
        Some(EligibleConfig {
            config: *config,
            deg1,
            deg2,
            edge_of_deg1,
        })
    }
}

/// (6,3)-configurations of `sys` satisfying the half constraints, in the
/// enumeration order of [`enumerate_63`]. Empty when `labels` has no halves.
pub fn eligible_configs(sys: &LinearTripleSystem, labels: &PartitionLabels) -> Vec<EligibleConfig> {
    if !labels.has_halves() {
        return Vec::new();
    }
    eligible_among(sys, labels, &enumerate_63(sys))
}

/// Eligible members of an already enumerated configuration list.
pub fn eligible_among(
    sys: &LinearTripleSystem,
    labels: &PartitionLabels,
    all: &[SixThreeConfig],
) -> Vec<EligibleConfig> {
    all.iter()
        .filter_map(|c| EligibleConfig::classify(sys, labels, c))
        .collect()
}
