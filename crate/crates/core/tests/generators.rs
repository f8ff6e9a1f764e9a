mod common;

use common::*;
use wicketlab::generators::*;
use wicketlab::io::to_text;
use wicketlab::patterns::count_63;
use wicketlab::{Pattern, Triple, Vertex};

fn ap_free_by_triple_loop(xs: &[usize]) -> bool {
    for &a in xs {
        for &b in xs {
            for &c in xs {
                if a < b && b < c && a + c == 2 * b {
                    return false;
                }
            }
        }
    }
    true
}

#[test]
fn behrend_sets_are_progression_free() {
    for bound in [3, 8, 15, 30, 60, 120, 250, 1000] {
        let s = behrend_set(bound);
        assert!(ap_free_by_triple_loop(&s.elements), "bound {bound}");
        assert!(!has_three_term_ap(&s.elements));
        assert!(s.elements.iter().all(|&x| x < bound));
    }
}

#[test]
fn behrend_grows() {
    let sizes: Vec<usize> = [10, 100, 1000, 10000]
        .iter()
        .map(|&b| behrend_set(b).len())
        .collect();
    assert!(sizes.windows(2).all(|w| w[0] <= w[1]), "{sizes:?}");
    assert!(sizes[3] > sizes[0]);
}

#[test]
fn rsz_has_no_six_three_by_brute_force() {
    for base in [6, 9, 12] {
        let set = behrend_set(base).elements;
        let s = rsz_system(base, &set);
        s.validate().unwrap();
        assert_eq!(s.edge_count(), base * set.len());
        assert_eq!(count_six_three(&edges(&s)), 0, "base {base}, set {set:?}");
        assert_eq!(count_63(&s), 0);
    }
}

#[test]
fn rsz_with_a_progression_has_six_three() {
    let s = rsz_system(8, &[0, 1, 2]);
    let brute = count_six_three(&edges(&s));
    assert!(brute > 0);
    assert_eq!(count_63(&s), brute);
}

#[test]
fn greedy_outputs_are_free_and_saturated() {
    for p in [
        Pattern::Wicket,
        Pattern::SixThree,
        Pattern::BergeC4,
        Pattern::Grid,
    ] {
        for seed in 0..6 {
            let g = greedy_pattern_free(&GeneratorConfig::new(9, seed).forbidding(p));
            assert_eq!(g.certified_free, Some(true));
            let es = edges(&g.system);
            assert!(!contains(&es, p), "{p} seed {seed}: {es:?}");
            // No addable triple survives: each would break linearity or
            // complete the pattern.
            for a in 0..9 as Vertex {
                for b in a + 1..9 {
                    for c in b + 1..9 {
                        let t = Triple::new(a, b, c).unwrap();
                        if g.system.is_addable(t) {
                            let mut more = es.clone();
                            more.push([a, b, c]);
                            assert!(contains(&more, p), "{p} seed {seed}: {t} could be added");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn greedy_is_deterministic() {
    let cfg = GeneratorConfig::new(30, 17).forbidding(Pattern::Wicket);
    let a = greedy_pattern_free(&cfg);
    let b = greedy_pattern_free(&cfg);
    assert_eq!(to_text(&a.system), to_text(&b.system));
    assert_eq!(a.report(&cfg), b.report(&cfg));
}

#[test]
fn random_linear_respects_target() {
    let g = random_linear(&GeneratorConfig::new(12, 3).with_target(10));
    assert!(g.target_reached);
    assert_eq!(g.system.edge_count(), 10);
    g.system.validate().unwrap();
    assert_eq!(g.certified_free, None);
}

#[test]
fn ag23_parallel_classes() {
    // Four parallel classes of three disjoint lines each.
    let s = affine_plane_ag23();
    let es = edges(&s);
    let mut classes = 0;
    for trio in subsets(12, 3) {
        if trio
            .iter()
            .all(|&i| trio.iter().all(|&j| i == j || meet(&es[i], &es[j]) == 0))
        {
            classes += 1;
        }
    }
    assert_eq!(classes, 4);
}
