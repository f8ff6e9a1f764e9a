use thiserror::Error;

use super::{BergeC4, Embedding, GridEmbedding, SixThreeConfig, WicketEmbedding};
use crate::system::{EdgeId, LinearTripleSystem, Triple, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(EdgeId),
    #[error("embedding violates: {0}")]
    Violation(&'static str),
}

fn require(cond: bool, clause: &'static str) -> Result<(), EmbeddingError> {
    if cond {
        Ok(())
    } else {
        Err(EmbeddingError::Violation(clause))
    }
}

fn edge(sys: &LinearTripleSystem, id: EdgeId) -> Result<Triple, EmbeddingError> {
    if id < sys.edge_count() {
        Ok(sys.edge(id))
    } else {
        Err(EmbeddingError::EdgeOutOfRange(id))
    }
}

fn all_distinct<T: Ord + Copy>(items: &[T]) -> bool {
    let mut v = items.to_vec();
    v.sort_unstable();
    v.windows(2).all(|w| w[0] != w[1])
}

/// Checks every defining clause of the embedding against the actual edges of
/// `sys`, reporting the first one that fails.
pub fn validate_embedding(sys: &LinearTripleSystem, emb: &Embedding) -> Result<(), EmbeddingError> {
    match emb {
        Embedding::Wicket(w) => validate_wicket(sys, w),
        Embedding::Grid(g) => validate_grid(sys, g),
        Embedding::SixThree(c) => validate_six_three(sys, c),
        Embedding::BergeC4(c) => validate_berge(sys, c),
    }
}

fn validate_wicket(sys: &LinearTripleSystem, w: &WicketEmbedding) -> Result<(), EmbeddingError> {
    let rows = [
        edge(sys, w.rows[0])?,
        edge(sys, w.rows[1])?,
        edge(sys, w.rows[2])?,
    ];
    let cols = [edge(sys, w.cols[0])?, edge(sys, w.cols[1])?];
    require(all_distinct(&w.edge_ids()), "5 edges distinct")?;
    require(all_distinct(&w.vertices()), "9 vertices distinct")?;
    for i in 0..3 {
        for k in (i + 1)..3 {
            require(rows[i].is_disjoint(&rows[k]), "rows pairwise disjoint")?;
        }
    }
    require(cols[0].is_disjoint(&cols[1]), "columns disjoint")?;
    for ((row, meets), &p) in rows.iter().zip(&w.matrix).zip(&w.private) {
        for (col, &v) in cols.iter().zip(meets) {
            require(
                row.intersection(col) == [v],
                "row i meets column j exactly in matrix vertex (i, j)",
            )?;
        }
        require(row.contains(p), "private vertex lies on its row")?;
        require(
            !cols[0].contains(p) && !cols[1].contains(p),
            "private vertex lies on neither column",
        )?;
    }
    Ok(())
}

fn validate_grid(sys: &LinearTripleSystem, g: &GridEmbedding) -> Result<(), EmbeddingError> {
    validate_wicket(sys, &g.wicket)?;
    let third = edge(sys, g.third_col)?;
    require(
        !g.wicket.edge_ids().contains(&g.third_col),
        "6 edges distinct",
    )?;
    require(
        g.wicket.private.iter().all(|&p| third.contains(p)),
        "third column passes through the private vertices",
    )?;
    let cols = [sys.edge(g.wicket.cols[0]), sys.edge(g.wicket.cols[1])];
    require(
        third.is_disjoint(&cols[0]) && third.is_disjoint(&cols[1]),
        "third column disjoint from the other columns",
    )
}

fn validate_six_three(sys: &LinearTripleSystem, c: &SixThreeConfig) -> Result<(), EmbeddingError> {
    let t = [
        edge(sys, c.edges[0])?,
        edge(sys, c.edges[1])?,
        edge(sys, c.edges[2])?,
    ];
    require(all_distinct(&c.edges), "3 edges distinct")?;
    let pairs = [(0, 1), (0, 2), (1, 2)];
    for (k, &(x, y)) in pairs.iter().enumerate() {
        let meet = t[x].intersection(&t[y]);
        require(
            meet.len() == 1,
            "each pair of edges meets in exactly one vertex",
        )?;
        require(
            meet[0] == c.deg2[k],
            "degree-two vertices are the pairwise intersections",
        )?;
    }
    require(all_distinct(&c.deg2), "intersection vertices distinct")?;
    require(all_distinct(&c.vertices()), "6 vertices distinct")?;
    for i in 0..3 {
        require(
            t[i].contains(c.deg1[i]),
            "degree-one vertex lies on its edge",
        )?;
        let degree = t.iter().filter(|e| e.contains(c.deg1[i])).count();
        require(degree == 1, "degree-one vertex lies on exactly one edge")?;
    }
    Ok(())
}

fn validate_berge(sys: &LinearTripleSystem, c: &BergeC4) -> Result<(), EmbeddingError> {
    let t: Vec<Triple> = c
        .edges
        .iter()
        .map(|&e| edge(sys, e))
        .collect::<Result<_, _>>()?;
    require(all_distinct(&c.edges), "4 edges distinct")?;
    require(all_distinct::<Vertex>(&c.vertices), "4 vertices distinct")?;
    for i in 0..4 {
        let v = c.vertices[i];
        require(
            t[i].contains(v) && t[(i + 1) % 4].contains(v),
            "consecutive edges share the stated vertex",
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::find_wicket;

    fn hand_wicket() -> LinearTripleSystem {
        LinearTripleSystem::from_edges(9, [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7]])
            .unwrap()
    }

    #[test]
    fn found_wicket_validates() {
        let s = hand_wicket();
        let w = find_wicket(&s).unwrap();
        assert_eq!(validate_embedding(&s, &w.into()), Ok(()));
    }

    #[test]
    fn repeated_private_vertex() {
        let s = hand_wicket();
        let mut w = find_wicket(&s).unwrap();
        w.private[1] = w.private[0];
        assert_eq!(
            validate_embedding(&s, &w.into()),
            Err(EmbeddingError::Violation("9 vertices distinct"))
        );
    }

    #[test]
    fn out_of_range_edge() {
        let s = hand_wicket();
        let mut w = find_wicket(&s).unwrap();
        w.rows[0] = 17;
        assert_eq!(
            validate_embedding(&s, &w.into()),
            Err(EmbeddingError::EdgeOutOfRange(17))
        );
    }

    #[test]
    fn concurrent_edges_are_not_a_six_three() {
        let s = LinearTripleSystem::from_edges(7, [[0, 1, 2], [0, 3, 4], [0, 5, 6]]).unwrap();
        let fake = SixThreeConfig {
            edges: [0, 1, 2],
            deg2: [0, 0, 0],
            deg1: [1, 3, 5],
        };
        assert_eq!(
            validate_embedding(&s, &fake.into()),
            Err(EmbeddingError::Violation("intersection vertices distinct"))
        );
    }

    #[test]
    fn berge_with_wrong_vertex() {
        let s = hand_wicket();
        let bad = BergeC4 {
            edges: [0, 3, 1, 4],
            vertices: [0, 3, 4, 2],
        };
        assert!(validate_embedding(&s, &bad.into()).is_err());
        let good = BergeC4 {
            edges: [0, 3, 1, 4],
            vertices: [0, 3, 4, 1],
        };
        assert_eq!(validate_embedding(&s, &good.into()), Ok(()));
    }
}
