use super::SixThreeConfig;
use crate::system::{EdgeId, LinearTripleSystem};

fn make_config(sys: &LinearTripleSystem, mut ids: [EdgeId; 3]) -> SixThreeConfig {
    ids.sort_unstable();
    let t = ids.map(|e| sys.edge(e));
    let meet = |x: usize, y: usize| t[x].intersection(&t[y])[0];
    let deg2 = [meet(0, 1), meet(0, 2), meet(1, 2)];
    let deg1 = t.map(|e| {
        e.vertices()
            .into_iter()
            .find(|v| !deg2.contains(v))
            .expect("each edge of a (6,3)-configuration has a degree-one vertex")
    });
    SixThreeConfig {
        edges: ids,
        deg2,
        deg1,
    }
}

/// Calls `visit(f, g)` for every pair of edges completing `e` to a
/// (6,3)-configuration: `e ∩ f = {u}`, `f ∩ g = {v}`, `e ∩ g = {w}`, all
/// distinct. Each configuration through `e` is reported twice (f and g swap).
fn around_edge(
    sys: &LinearTripleSystem,
    e: EdgeId,
    mut visit: impl FnMut(EdgeId, EdgeId) -> bool,
) -> bool {
    let te = sys.edge(e);
    for u in te.vertices() {
        let (w1, w2) = te.others(u).expect("u lies on e");
        for &f in sys.edges_at(u) {
            if f == e {
                continue;
            }
            let (v1, v2) = sys.edge(f).others(u).expect("u lies on f");
            for v in [v1, v2] {
                for w in [w1, w2] {
                    if let Some(g) = sys.pair_edge(v, w) {
                        // g covers {v, w}; linearity keeps it off u and distinct from e and f.
                        if visit(f, g) {
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

/// All (6,3)-configurations, each once, ordered by sorted edge-id triple.
pub fn enumerate_63(sys: &LinearTripleSystem) -> Vec<SixThreeConfig> {
    let mut out = Vec::new();
    for e in 0..sys.edge_count() {
        around_edge(sys, e, |f, g| {
            if e < f && f < g {
                out.push(make_config(sys, [e, f, g]));
            }
            false
        });
    }
    out.sort_unstable_by_key(|c| c.edges);
    out
}

pub fn count_63(sys: &LinearTripleSystem) -> u64 {
    let mut count = 0;
    for e in 0..sys.edge_count() {
        around_edge(sys, e, |f, g| {
            if e < f && f < g {
                count += 1;
            }
            false
        });
    }
    count
}

pub fn six_three_through_edge(sys: &LinearTripleSystem, e: EdgeId) -> Option<SixThreeConfig> {
    let mut found = None;
    around_edge(sys, e, |f, g| {
        found = Some(make_config(sys, [e, f, g]));
        true
    });
    found
}
