use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::system::{LinearTripleSystem, Vertex};

/// A subset of `[0, bound)` with no three-term arithmetic progression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BehrendSet {
    pub bound: usize,
    pub elements: Vec<usize>,
    /// Digit base, digit count and squared radius of the chosen shell
    /// (all zero for the trivial `{0}` fallback).
    pub base: usize,
    pub digits: usize,
    pub radius: usize,
}

impl BehrendSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Behrend's sphere-shell construction: numbers below `bound` whose base-`B`
/// digits are all `< ceil(B / 2)` and whose digit vector lies on one sphere.
/// Digits that small add without carries, so `x + z = 2y` holds digitwise,
/// and a sphere contains no three collinear points.
///
/// Every base up to `2·sqrt(bound) + 3` and every digit count is tried; the
/// largest shell wins.
pub fn behrend_set(bound: usize) -> BehrendSet {
    let mut best = BehrendSet {
        bound,
        elements: if bound == 0 { vec![] } else { vec![0] },
        base: 0,
        digits: 0,
        radius: 0,
    };
    if bound <= 1 {
        return best;
    }
    let max_base = 2 * (bound as f64).sqrt() as usize + 3;
    for base in 3..=max_base {
        let h = base.div_ceil(2);
        let mut digits = 1;
        let mut place = 1usize;
        while place < bound {
            let mut shells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            collect(base, h, digits, 0, 1, 0, bound, &mut shells);
            for (&radius, elems) in &shells {
                if elems.len() > best.elements.len() {
                    let mut elements = elems.clone();
                    elements.sort_unstable();
                    best = BehrendSet {
                        bound,
                        elements,
                        base,
                        digits,
                        radius,
                    };
                }
            }
            digits += 1;
            place = place.saturating_mul(base);
        }
    }
    best
}

#[allow(clippy::too_many_arguments)]
fn collect(
    base: usize,
    h: usize,
    remaining: usize,
    value: usize,
    place: usize,
    radius: usize,
    bound: usize,
    shells: &mut BTreeMap<usize, Vec<usize>>,
) {
    if remaining == 0 {
        shells.entry(radius).or_default().push(value);
        return;
    }
    for d in 0..h {
        let v = value + d * place;
        if v >= bound {
            break;
        }
        collect(
            base,
            h,
            remaining - 1,
            v,
            place.saturating_mul(base),
            radius + d * d,
            bound,
            shells,
        );
    }
}

/// Exhaustive check used by tests and reports.
pub fn has_three_term_ap(elements: &[usize]) -> bool {
    let set: std::collections::HashSet<usize> = elements.iter().copied().collect();
    elements.iter().enumerate().any(|(i, &x)| {
        elements[i + 1..]
            .iter()
            .any(|&z| x != z && (x + z) % 2 == 0 && set.contains(&((x + z) / 2)))
    })
}

/// Tripartite system on groups `[0, base)`, `[base, 3·base)`, `[3·base, 6·base)`
/// with edges `{x, base + x + a, 3·base + x + 2a}` for `x < base`, `a ∈ set`.
/// A (6,3)-configuration would give a three-term progression in `set`.
///
/// # Panics
/// If some element of `set` is `>= base`.
pub fn rsz_system(base: usize, set: &[usize]) -> LinearTripleSystem {
    assert!(set.iter().all(|&a| a < base), "set must lie in [0, base)");
    let mut edges: Vec<[Vertex; 3]> = Vec::with_capacity(base * set.len());
    for x in 0..base {
        for &a in set {
            edges.push([
                x as Vertex,
                (base + x + a) as Vertex,
                (3 * base + x + 2 * a) as Vertex,
            ]);
        }
    }
    edges.sort_unstable();
    edges.dedup();
    LinearTripleSystem::from_edges(6 * base, edges).expect("distinct translates are linear")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::count_63;

    #[test]
    fn trivial_bounds() {
        assert_eq!(behrend_set(1).elements, vec![0]);
        assert!(behrend_set(0).is_empty());
        assert!(!behrend_set(2).is_empty());
    }

    #[test]
    fn progression_free() {
        for n in [10, 20, 60, 100, 500] {
            let s = behrend_set(n);
            assert!(!has_three_term_ap(&s.elements), "n = {n}");
            assert!(s.elements.iter().all(|&x| x < n));
            assert!(s.elements.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn ap_checker() {
        assert!(has_three_term_ap(&[1, 4, 7]));
        assert!(has_three_term_ap(&[0, 2, 5, 9, 4]));
        assert!(!has_three_term_ap(&[0, 1, 3, 4, 9, 10, 12, 13]));
    }

    #[test]
    fn rsz_single_translate() {
        let s = rsz_system(5, &[0]);
        assert_eq!(s.edge_count(), 5);
        assert_eq!(s.n(), 30);
        assert_eq!(count_63(&s), 0);
    }

    #[test]
    fn rsz_with_progression_has_configurations() {
        // {0, 1, 2} is itself a progression.
        let s = rsz_system(6, &[0, 1, 2]);
        assert!(s.validate().is_ok());
        assert!(count_63(&s) > 0);
    }

    #[test]
    fn rsz_behrend_is_six_three_free() {
        let b = behrend_set(20);
        let s = rsz_system(20, &b.elements);
        assert!(s.validate().is_ok());
        assert_eq!(s.edge_count(), 20 * b.len());
        assert_eq!(count_63(&s), 0);
    }
}
