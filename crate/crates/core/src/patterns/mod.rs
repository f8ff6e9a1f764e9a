//! Forbidden configurations in linear triple systems: the wicket, the grid,
//! the (6,3)-configuration and the Berge 4-cycle.
//!
//! All detectors are read-only over a [`LinearTripleSystem`] and lean on its
//! pair index, so they are safe to call from many threads at once.
//!
//! "C₄" is read as a Berge 4-cycle: four distinct edges `e1..e4` and four
//! distinct vertices with `v_i ∈ e_i ∩ e_{i+1}` cyclically. Under this reading
//! every wicket contains a C₄, so C₄-free systems are wicket-free.

mod berge;
mod six_three;
mod validate;
mod wicket;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::system::{EdgeId, LinearTripleSystem, Vertex};

pub use berge::{berge_c4_through_edge, find_berge_c4};
pub use six_three::{count_63, enumerate_63, six_three_through_edge};
pub use validate::{validate_embedding, EmbeddingError};
pub use wicket::{
    count_wickets, find_grid, find_wicket, for_each_wicket, for_each_wicket_with_columns,
    grid_completion, grid_through_edge, wicket_on_edges, wicket_through_edge,
};

/// Three disjoint row edges crossed by two disjoint column edges.
///
/// `matrix[i][j]` is the vertex where row `i` meets column `j`; `private[i]`
/// is the third vertex of row `i`, on neither column.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WicketEmbedding {
    pub rows: [EdgeId; 3],
    pub cols: [EdgeId; 2],
    pub matrix: [[Vertex; 2]; 3],
    pub private: [Vertex; 3],
}

impl WicketEmbedding {
    pub fn edge_ids(&self) -> [EdgeId; 5] {
        [
            self.rows[0],
            self.rows[1],
            self.rows[2],
            self.cols[0],
            self.cols[1],
        ]
    }

    pub fn vertices(&self) -> [Vertex; 9] {
        let m = &self.matrix;
        let p = &self.private;
        [
            m[0][0], m[0][1], m[1][0], m[1][1], m[2][0], m[2][1], p[0], p[1], p[2],
        ]
    }

    /// Same embedding with edge ids passed through `map`.
    pub fn map_edges(&self, map: impl Fn(EdgeId) -> EdgeId) -> WicketEmbedding {
        WicketEmbedding {
            rows: self.rows.map(&map),
            cols: self.cols.map(&map),
            ..*self
        }
    }
}

/// A wicket plus the column through its three private vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridEmbedding {
    #[serde(flatten)]
    pub wicket: WicketEmbedding,
    pub third_col: EdgeId,
}

/// Three edges pairwise meeting in three distinct vertices.
///
/// `edges` is sorted; `deg2 = [e0∩e1, e0∩e2, e1∩e2]`; `deg1[i]` is the vertex
/// of `edges[i]` lying on no other edge of the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SixThreeConfig {
    pub edges: [EdgeId; 3],
    pub deg2: [Vertex; 3],
    pub deg1: [Vertex; 3],
}

impl SixThreeConfig {
    pub fn vertices(&self) -> [Vertex; 6] {
        let (d, s) = (self.deg2, self.deg1);
        [d[0], d[1], d[2], s[0], s[1], s[2]]
    }
}

/// Four distinct edges cyclically sharing four distinct vertices:
/// `vertices[i] ∈ edges[i] ∩ edges[(i + 1) % 4]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BergeC4 {
    pub edges: [EdgeId; 4],
    pub vertices: [Vertex; 4],
}

/// Any certified sub-configuration, tagged for JSON output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Embedding {
    Wicket(WicketEmbedding),
    Grid(GridEmbedding),
    SixThree(SixThreeConfig),
    BergeC4(BergeC4),
}

impl Embedding {
    pub fn pattern(&self) -> Pattern {
        match self {
            Embedding::Wicket(_) => Pattern::Wicket,
            Embedding::Grid(_) => Pattern::Grid,
            Embedding::SixThree(_) => Pattern::SixThree,
            Embedding::BergeC4(_) => Pattern::BergeC4,
        }
    }

    pub fn edge_ids(&self) -> Vec<EdgeId> {
        match self {
            Embedding::Wicket(w) => w.edge_ids().to_vec(),
            Embedding::Grid(g) => {
                let mut ids = g.wicket.edge_ids().to_vec();
                ids.push(g.third_col);
                ids
            }
            Embedding::SixThree(c) => c.edges.to_vec(),
            Embedding::BergeC4(c) => c.edges.to_vec(),
        }
    }
}

impl From<WicketEmbedding> for Embedding {
    fn from(w: WicketEmbedding) -> Self {
        Embedding::Wicket(w)
    }
}

impl From<GridEmbedding> for Embedding {
    fn from(g: GridEmbedding) -> Self {
        Embedding::Grid(g)
    }
}

impl From<SixThreeConfig> for Embedding {
    fn from(c: SixThreeConfig) -> Self {
        Embedding::SixThree(c)
    }
}

impl From<BergeC4> for Embedding {
    fn from(c: BergeC4) -> Self {
        Embedding::BergeC4(c)
    }
}

/// Pattern selector shared by generators, the extremal search and the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    None,
    Wicket,
    Grid,
    BergeC4,
    SixThree,
}

impl Pattern {
    pub const ALL: [Pattern; 5] = [
        Pattern::None,
        Pattern::Wicket,
        Pattern::Grid,
        Pattern::BergeC4,
        Pattern::SixThree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Pattern::None => "none",
            Pattern::Wicket => "wicket",
            Pattern::Grid => "grid",
            Pattern::BergeC4 => "berge_c4",
            Pattern::SixThree => "six_three",
        }
    }

    /// Any occurrence of the pattern in `sys`.
    pub fn find(self, sys: &LinearTripleSystem) -> Option<Embedding> {
        match self {
            Pattern::None => None,
            Pattern::Wicket => find_wicket(sys).map(Embedding::from),
            Pattern::Grid => find_grid(sys).map(Embedding::from),
            Pattern::BergeC4 => find_berge_c4(sys).map(Embedding::from),
            Pattern::SixThree => enumerate_63(sys).into_iter().next().map(Embedding::from),
        }
    }

    pub fn occurs_in(self, sys: &LinearTripleSystem) -> bool {
        self.find(sys).is_some()
    }

    /// True iff some occurrence of the pattern uses edge `e`. Used for
    /// incremental checks: in a pattern-free system, a new copy must use the
    /// edge that was just added.
    pub fn occurs_through(self, sys: &LinearTripleSystem, e: EdgeId) -> bool {
        match self {
            Pattern::None => false,
            Pattern::Wicket => wicket_through_edge(sys, e).is_some(),
            Pattern::Grid => grid_through_edge(sys, e).is_some(),
            Pattern::BergeC4 => berge_c4_through_edge(sys, e).is_some(),
            Pattern::SixThree => six_three_through_edge(sys, e).is_some(),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown pattern {0:?} (expected none, wicket, grid, berge_c4 or six_three)")]
pub struct UnknownPattern(pub String);

impl FromStr for Pattern {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "none" => Ok(Pattern::None),
            "wicket" | "W" => Ok(Pattern::Wicket),
            "grid" | "GR" => Ok(Pattern::Grid),
            "berge_c4" | "c4" => Ok(Pattern::BergeC4),
            "six_three" | "63" | "(6,3)" => Ok(Pattern::SixThree),
            other => Err(UnknownPattern(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedding_json_shape() {
        let w = WicketEmbedding {
            rows: [0, 1, 2],
            cols: [3, 4],
            matrix: [[0, 1], [3, 4], [6, 7]],
            private: [2, 5, 8],
        };
        let json = serde_json::to_value(Embedding::from(w)).unwrap();
        assert_eq!(json["type"], "wicket");
        assert_eq!(json["rows"], serde_json::json!([0, 1, 2]));
        assert_eq!(json["matrix"], serde_json::json!([[0, 1], [3, 4], [6, 7]]));
        let back: Embedding = serde_json::from_value(json).unwrap();
        assert_eq!(back, Embedding::Wicket(w));

        let g = Embedding::from(GridEmbedding {
            wicket: w,
            third_col: 5,
        });
        let json = serde_json::to_value(g).unwrap();
        assert_eq!(json["type"], "grid");
        assert_eq!(json["third_col"], 5);
        assert_eq!(serde_json::from_value::<Embedding>(json).unwrap(), g);
    }

    #[test]
    fn pattern_names_round_trip() {
        for p in Pattern::ALL {
            assert_eq!(p.name().parse::<Pattern>().unwrap(), p);
        }
        assert!("pentagon".parse::<Pattern>().is_err());
    }
}
