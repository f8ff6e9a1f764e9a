use std::ops::ControlFlow;

use super::{GridEmbedding, WicketEmbedding};
use crate::system::{EdgeId, LinearTripleSystem};

const PERMS3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// Visits every wicket whose columns are exactly `c1` and `c2` (in that
/// column order). A wicket with fixed columns is determined by a bijection
/// between the two columns' vertices whose three pairs are covered by edges
/// with distinct third vertices.
pub fn for_each_wicket_with_columns<F>(
    sys: &LinearTripleSystem,
    c1: EdgeId,
    c2: EdgeId,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(WicketEmbedding) -> ControlFlow<()>,
{
    let (t1, t2) = (sys.edge(c1), sys.edge(c2));
    if c1 == c2 || !t1.is_disjoint(&t2) {
        return ControlFlow::Continue(());
    }
    let (a, b) = (t1.vertices(), t2.vertices());
    // rows[i][j]: edge through a[i] and b[j]
    let mut rows = [[None; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            rows[i][j] = sys.pair_edge(a[i], b[j]);
        }
    }
    'perm: for sigma in PERMS3 {
        let mut ids = [0; 3];
        let mut private = [0; 3];
        for i in 0..3 {
            let Some(r) = rows[i][sigma[i]] else {
                continue 'perm;
            };
            ids[i] = r;
            private[i] = sys
                .edge(r)
                .third(a[i], b[sigma[i]])
                .expect("row covers its pair");
        }
        if private[0] == private[1] || private[0] == private[2] || private[1] == private[2] {
            continue;
        }
        let emb = WicketEmbedding {
            rows: ids,
            cols: [c1, c2],
            matrix: [
                [a[0], b[sigma[0]]],
                [a[1], b[sigma[1]]],
                [a[2], b[sigma[2]]],
            ],
            private,
        };
        visit(emb)?;
    }
    ControlFlow::Continue(())
}

/// Visits every wicket once per distinct ({rows}, {columns}) split, column
/// pairs taken in increasing id order.
pub fn for_each_wicket<F>(sys: &LinearTripleSystem, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(WicketEmbedding) -> ControlFlow<()>,
{
    let m = sys.edge_count();
    for c1 in 0..m {
        for c2 in (c1 + 1)..m {
            for_each_wicket_with_columns(sys, c1, c2, &mut visit)?;
        }
    }
    ControlFlow::Continue(())
}

pub fn find_wicket(sys: &LinearTripleSystem) -> Option<WicketEmbedding> {
    let mut found = None;
    let _ = for_each_wicket(sys, |w| {
        found = Some(w);
        ControlFlow::Break(())
    });
    found
}

/// Number of distinct (3 rows, 2 columns) splits realizing a wicket.
pub fn count_wickets(sys: &LinearTripleSystem) -> u64 {
    let mut count = 0;
    let _ = for_each_wicket(sys, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// Visits wickets containing edge `e`, as a column or as a row. A wicket may
/// be visited more than once.
fn for_each_wicket_through<F>(sys: &LinearTripleSystem, e: EdgeId, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(WicketEmbedding) -> ControlFlow<()>,
{
    let t = sys.edge(e);
    for c2 in 0..sys.edge_count() {
        if c2 != e {
            for_each_wicket_with_columns(sys, e, c2, &mut visit)?;
        }
    }
    let v = t.vertices();
    for p in 0..3 {
        let (a, b) = (v[(p + 1) % 3], v[(p + 2) % 3]);
        for &c1 in sys.edges_at(a) {
            if c1 == e {
                continue;
            }
            for &c2 in sys.edges_at(b) {
                if c2 == e || c2 == c1 {
                    continue;
                }
                for_each_wicket_with_columns(sys, c1, c2, |w| {
                    if w.rows.contains(&e) {
                        visit(w)
                    } else {
                        ControlFlow::Continue(())
                    }
                })?;
            }
        }
    }
    ControlFlow::Continue(())
}

pub fn wicket_through_edge(sys: &LinearTripleSystem, e: EdgeId) -> Option<WicketEmbedding> {
    let mut found = None;
    let _ = for_each_wicket_through(sys, e, |w| {
        found = Some(w);
        ControlFlow::Break(())
    });
    found
}

/// The edge through the three private vertices of `w`, if present.
pub fn grid_completion(sys: &LinearTripleSystem, w: &WicketEmbedding) -> Option<EdgeId> {
    let [p0, p1, p2] = w.private;
    let e = sys.pair_edge(p0, p1)?;
    sys.edge(e).contains(p2).then_some(e)
}

pub fn find_grid(sys: &LinearTripleSystem) -> Option<GridEmbedding> {
    let mut found = None;
    let _ = for_each_wicket(sys, |w| match grid_completion(sys, &w) {
        Some(third_col) => {
            found = Some(GridEmbedding {
                wicket: w,
                third_col,
            });
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    found
}

/// A grid using edge `e`. Any grid edge is a row or one of two columns of some
/// wicket inside that grid, so scanning wickets through `e` suffices.
pub fn grid_through_edge(sys: &LinearTripleSystem, e: EdgeId) -> Option<GridEmbedding> {
    let mut found = None;
    let _ = for_each_wicket_through(sys, e, |w| match grid_completion(sys, &w) {
        Some(third_col) => {
            found = Some(GridEmbedding {
                wicket: w,
                third_col,
            });
            ControlFlow::Break(())
        }
        None => ControlFlow::Continue(()),
    });
    found
}

/// Realizes the five given edges as a wicket. Column pairs are tried in
/// increasing id order, so the result does not depend on argument order.
pub fn wicket_on_edges(
    sys: &LinearTripleSystem,
    mut edges: [EdgeId; 5],
) -> Option<WicketEmbedding> {
    edges.sort_unstable();
    for i in 0..5 {
        for j in (i + 1)..5 {
            let mut rest: Vec<EdgeId> = (0..5)
                .filter(|&k| k != i && k != j)
                .map(|k| edges[k])
                .collect();
            rest.sort_unstable();
            let mut found = None;
            let _ = for_each_wicket_with_columns(sys, edges[i], edges[j], |w| {
                let mut rows = w.rows.to_vec();
                rows.sort_unstable();
                if rows == rest {
                    found = Some(w);
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            });
            if found.is_some() {
                return found;
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::validate_embedding;
    use crate::system::Vertex;

    // 3x3 point matrix, vertex 3*i + j; rows {0,1,2},{3,4,5},{6,7,8}, columns
    // {0,3,6},{1,4,7}.
    fn hand_wicket() -> LinearTripleSystem {
        LinearTripleSystem::from_edges(9, [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7]])
            .unwrap()
    }

    fn ag23() -> LinearTripleSystem {
        let pt = |x: u32, y: u32| (3 * (x % 3) + (y % 3)) as Vertex;
        let mut lines = Vec::new();
        for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
            for x in 0..3 {
                for y in 0..3 {
                    let mut l = [pt(x, y), pt(x + dx, y + dy), pt(x + 2 * dx, y + 2 * dy)];
                    l.sort_unstable();
                    if !lines.contains(&l) {
                        lines.push(l);
                    }
                }
            }
        }
        LinearTripleSystem::from_edges(9, lines).unwrap()
    }

    #[test]
    fn single_hand_wicket() {
        let s = hand_wicket();
        assert_eq!(count_wickets(&s), 1);
        let w = find_wicket(&s).unwrap();
        assert!(validate_embedding(&s, &w.into()).is_ok());
        assert_eq!(w.cols, [3, 4]);
        assert!(find_grid(&s).is_none());
        for e in 0..5 {
            assert!(wicket_through_edge(&s, e).is_some(), "edge {e}");
        }
        assert_eq!(wicket_on_edges(&s, [4, 0, 3, 2, 1]), Some(w));
    }

    #[test]
    fn grid_found_when_third_column_added() {
        let mut s = hand_wicket();
        s.add_triple(2, 5, 8).unwrap();
        let g = find_grid(&s).unwrap();
        assert!(validate_embedding(&s, &g.into()).is_ok());
        assert!(grid_through_edge(&s, 5).is_some());
        assert!(grid_through_edge(&s, 0).is_some());
    }

    #[test]
    fn affine_plane_counts() {
        let s = ag23();
        assert_eq!(s.edge_count(), 12);
        assert_eq!(count_wickets(&s), 36);
        assert!(find_grid(&s).is_some());
    }

    #[test]
    fn small_systems_have_no_wicket() {
        let fano = LinearTripleSystem::from_edges(
            7,
            [
                [0, 1, 2],
                [0, 3, 4],
                [0, 5, 6],
                [1, 3, 5],
                [1, 4, 6],
                [2, 3, 6],
                [2, 4, 5],
            ],
        )
        .unwrap();
        assert!(find_wicket(&fano).is_none());
        assert_eq!(count_wickets(&LinearTripleSystem::new(12)), 0);
    }
}
