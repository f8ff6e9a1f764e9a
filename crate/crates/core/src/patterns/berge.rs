use super::BergeC4;
use crate::system::{EdgeId, LinearTripleSystem};

/// A Berge 4-cycle with `e` as its first edge.
///
/// Fix `e1 = e` with `v4, v1 ∈ e1`; walk `e2 ∋ v1` to `v2`, `e4 ∋ v4` to `v3`,
/// and close with the edge covering `{v2, v3}`.
pub fn berge_c4_through_edge(sys: &LinearTripleSystem, e: EdgeId) -> Option<BergeC4> {
    let te = sys.edge(e).vertices();
    for (i, &v1) in te.iter().enumerate() {
        for (j, &v4) in te.iter().enumerate() {
            if i == j {
                continue;
            }
            for &e2 in sys.edges_at(v1) {
                if e2 == e {
                    continue;
                }
                let (x, y) = sys.edge(e2).others(v1).expect("v1 on e2");
                for v2 in [x, y] {
                    for &e4 in sys.edges_at(v4) {
                        if e4 == e || e4 == e2 {
                            continue;
                        }
                        let (p, q) = sys.edge(e4).others(v4).expect("v4 on e4");
                        for v3 in [p, q] {
                            if v3 == v2 || v3 == v1 || v2 == v4 {
                                continue;
                            }
                            let Some(e3) = sys.pair_edge(v2, v3) else {
                                continue;
                            };
                            if e3 == e || e3 == e2 || e3 == e4 {
                                continue;
                            }
                            return Some(BergeC4 {
                                edges: [e, e2, e3, e4],
                                vertices: [v1, v2, v3, v4],
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

pub fn find_berge_c4(sys: &LinearTripleSystem) -> Option<BergeC4> {
    (0..sys.edge_count()).find_map(|e| berge_c4_through_edge(sys, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::validate_embedding;

    #[test]
    fn wicket_contains_c4() {
        let s = LinearTripleSystem::from_edges(
            9,
            [[0, 1, 2], [3, 4, 5], [6, 7, 8], [0, 3, 6], [1, 4, 7]],
        )
        .unwrap();
        let c = find_berge_c4(&s).unwrap();
        assert!(validate_embedding(&s, &c.into()).is_ok());
    }

    #[test]
    fn loose_path_has_none() {
        let s = LinearTripleSystem::from_edges(7, [[0, 1, 2], [2, 3, 4], [4, 5, 6]]).unwrap();
        assert!(find_berge_c4(&s).is_none());
    }

    #[test]
    fn triangle_is_not_a_c4() {
        // (6,3)-configuration: only three edges.
        let s = LinearTripleSystem::from_edges(6, [[0, 1, 3], [1, 2, 4], [0, 2, 5]]).unwrap();
        assert!(find_berge_c4(&s).is_none());
    }
}
