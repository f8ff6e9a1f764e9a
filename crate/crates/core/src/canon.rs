//! Canonical forms for small triple systems.
//!
//! Colour refinement on the incidence structure followed by exhaustive
//! individualization of refinement cells. The canonical form is the
//! lexicographically smallest relabeled edge list over every leaf of the
//! search tree, so it is exact (no automorphism pruning, hence the size gate).

use crate::system::{LinearTripleSystem, SystemError, Vertex};

pub const DEFAULT_CANON_LIMIT: usize = 16;

/// Edge list of a system under its canonical relabeling. Equal forms mean
/// isomorphic systems.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<[Vertex; 3]>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[[Vertex; 3]] {
        &self.edges
    }

    /// The canonically labeled system itself.
    pub fn to_system(&self) -> LinearTripleSystem {
        LinearTripleSystem::from_edges(self.n, self.edges.iter().copied())
            .expect("a canonical form is a relabeling of a linear system")
    }
}

pub fn canonical_form(sys: &LinearTripleSystem) -> Result<CanonicalForm, SystemError> {
    canonical_form_with_limit(sys, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(
    sys: &LinearTripleSystem,
    limit: usize,
) -> Result<CanonicalForm, SystemError> {
    canonical_labeling_with_limit(sys, limit).map(|(form, _)| form)
}

/// Canonical form plus a labeling `perm[old] = new` that produces it.
pub fn canonical_labeling_with_limit(
    sys: &LinearTripleSystem,
    limit: usize,
) -> Result<(CanonicalForm, Vec<Vertex>), SystemError> {
    let n = sys.n();
    if n > limit {
        return Err(SystemError::SizeLimitExceeded { n, limit });
    }
    let initial: Vec<u32> = (0..n as Vertex)
        .map(|v| match sys.degree(v) {
            0 => u32::MAX,
            d => d as u32,
        })
        .collect();
    let colors = refine(sys, rank(&initial));
    let mut best: Option<(Vec<[Vertex; 3]>, Vec<Vertex>)> = None;
    search(sys, colors, &mut best);
    let (edges, perm) = best.expect("search visits at least one leaf");
    Ok((CanonicalForm { n, edges }, perm))
}

/// Replaces arbitrary keys with their dense rank among distinct values.
fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<u32> {
    let mut distinct: Vec<T> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present") as u32)
        .collect()
}

fn class_count(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn refine(sys: &LinearTripleSystem, mut colors: Vec<u32>) -> Vec<u32> {
    let mut classes = class_count(&colors);
    loop {
        let signatures: Vec<(u32, Vec<(u32, u32)>)> = (0..sys.n() as Vertex)
            .map(|v| {
                let mut around: Vec<(u32, u32)> = sys
                    .edges_at(v)
                    .iter()
                    .map(|&e| {
                        let (x, y) = sys.edge(e).others(v).expect("incident edge");
                        let (cx, cy) = (colors[x as usize], colors[y as usize]);
                        (cx.min(cy), cx.max(cy))
                    })
                    .collect();
                around.sort_unstable();
                (colors[v as usize], around)
            })
            .collect();
        let next = rank(&signatures);
        let next_classes = class_count(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn search(
    sys: &LinearTripleSystem,
    colors: Vec<u32>,
    best: &mut Option<(Vec<[Vertex; 3]>, Vec<Vertex>)>,
) {
    // Target cell: smallest non-singleton cell of non-isolated vertices, ties
    // by colour. Isolated vertices never need individualizing.
    let mut sizes = std::collections::BTreeMap::<u32, usize>::new();
    for (v, &c) in colors.iter().enumerate() {
        if sys.degree(v as Vertex) > 0 {
            *sizes.entry(c).or_default() += 1;
        }
    }
    let target = sizes
        .iter()
        .filter(|(_, &size)| size > 1)
        .min_by_key(|(&c, &size)| (size, c))
        .map(|(&c, _)| c);

    let Some(cell) = target else {
        let perm = leaf_labeling(sys, &colors);
        let mut edges: Vec<[Vertex; 3]> = sys
            .edges()
            .iter()
            .map(|t| {
                let [a, b, c] = t.vertices();
                let mut e = [perm[a as usize], perm[b as usize], perm[c as usize]];
                e.sort_unstable();
                e
            })
            .collect();
        edges.sort_unstable();
        if best.as_ref().is_none_or(|(b, _)| edges < *b) {
            *best = Some((edges, perm));
        }
        return;
    };

    for v in 0..colors.len() {
        if colors[v] != cell || sys.degree(v as Vertex) == 0 {
            continue;
        }
        let split: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(c == cell && w != v))
            .collect();
        search(sys, refine(sys, rank(&split)), best);
    }
}

/// At a leaf every non-isolated vertex has its own colour; label them by
/// colour rank and put the isolated vertices last.
fn leaf_labeling(sys: &LinearTripleSystem, colors: &[u32]) -> Vec<Vertex> {
    let mut order: Vec<usize> = (0..colors.len()).collect();
    order.sort_by_key(|&v| (sys.degree(v as Vertex) == 0, colors[v], v));
    let mut perm = vec![0; colors.len()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new as Vertex;
    }
    perm
}
