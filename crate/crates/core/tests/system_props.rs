mod common;

use common::*;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use wicketlab::generators::{random_linear, steiner_triple_system, GeneratorConfig};
use wicketlab::io::{parse_system, to_text};
use wicketlab::system::{validate_edges, SystemRecord};
use wicketlab::{canonical_form, LinearTripleSystem, SystemError, Triple, Vertex};

fn scan_pair(sys: &LinearTripleSystem, u: Vertex, v: Vertex) -> Option<usize> {
    sys.edges()
        .iter()
        .position(|t| t.contains(u) && t.contains(v))
}

fn random_perm(n: usize, seed: u64) -> Vec<Vertex> {
    let mut p: Vec<Vertex> = (0..n as Vertex).collect();
    p.shuffle(&mut wicketlab::seed::rng(seed));
    p
}

#[test]
fn pair_index_agrees_with_scan() {
    for sys in random_systems(80, 14, 25, 41) {
        let n = sys.n() as Vertex;
        for u in 0..n {
            for v in 0..n {
                if u != v {
                    assert_eq!(sys.pair_edge(u, v), scan_pair(&sys, u, v));
                }
            }
        }
        sys.validate().unwrap();
    }
}

#[test]
fn steiner_systems_cover_every_pair() {
    for n in [7, 9, 13, 15, 19, 21, 25, 27, 31, 33] {
        let s = steiner_triple_system(n).unwrap();
        assert_eq!(s.edge_count(), n * (n - 1) / 6, "STS({n})");
        assert_eq!(s.uncovered_pairs(), 0);
        validate_edges(n, &edges(&s)).unwrap();
    }
    assert!(steiner_triple_system(11).is_err());
}

#[test]
fn add_rejects_second_edge_on_a_pair() {
    let mut s = LinearTripleSystem::new(6);
    s.add_triple(0, 1, 2).unwrap();
    assert!(!s.is_addable(Triple::new(1, 2, 3).unwrap()));
    assert!(matches!(
        s.add_triple(1, 2, 3),
        Err(SystemError::LinearityViolation { pair: (1, 2), .. })
    ));
    assert_eq!(s.edge_count(), 1);
    s.validate().unwrap();
}

#[test]
fn validator_names_the_offending_edges() {
    let raw = [[0, 1, 2], [3, 4, 5], [2, 4, 6], [1, 2, 7]];
    assert_eq!(
        validate_edges(8, &raw),
        Err(SystemError::LinearityViolation {
            pair: (1, 2),
            edges: (0, 3)
        })
    );
    assert!(matches!(
        validate_edges(5, &raw),
        Err(SystemError::VertexOutOfRange { vertex: 5, n: 5 })
    ));
}

#[test]
fn reader_reports_bad_lines() {
    assert!(matches!(
        parse_system("4 1\n0 1 x\n"),
        Err(SystemError::Parse { line: 2, .. })
    ));
    assert!(matches!(
        parse_system("5 2\n0 1 2\n1 2 3\n"),
        Err(SystemError::LinearityViolation { .. })
    ));
}

#[test]
fn canonical_form_matches_brute_force_isomorphism() {
    // Two systems are isomorphic iff their brute-force minimal relabelings
    // coincide; the canonical forms must agree with that on every pair.
    let systems: Vec<LinearTripleSystem> = random_systems(60, 7, 7, 9)
        .into_iter()
        .filter(|s| s.n() <= 7)
        .collect();
    let keyed: Vec<_> = systems
        .iter()
        .map(|s| {
            (
                s.n(),
                brute_canonical(s.n(), &edges(s)),
                canonical_form(s).unwrap(),
            )
        })
        .collect();
    for a in &keyed {
        for b in &keyed {
            let iso = a.0 == b.0 && a.1 == b.1;
            assert_eq!(a.2 == b.2, iso, "{:?} vs {:?}", a.1, b.1);
        }
    }
}

#[test]
fn canonical_form_rejects_large_orders() {
    let s = LinearTripleSystem::new(17);
    assert!(matches!(
        canonical_form(&s),
        Err(SystemError::SizeLimitExceeded { n: 17, limit: 16 })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_roundtrip(n in 3usize..=20, m in 0usize..=30, seed in any::<u64>()) {
        let sys = random_linear(&GeneratorConfig::new(n, seed).with_target(m)).system;
        let back = parse_system(&to_text(&sys)).unwrap();
        prop_assert_eq!(to_text(&back), to_text(&sys));
        prop_assert_eq!(back.n(), sys.n());
    }

    #[test]
    fn json_roundtrip(n in 3usize..=15, m in 0usize..=20, seed in any::<u64>()) {
        let sys = random_linear(&GeneratorConfig::new(n, seed).with_target(m)).system;
        let json = serde_json::to_string(&SystemRecord::from(&sys)).unwrap();
        let rec: SystemRecord = serde_json::from_str(&json).unwrap();
        let back = LinearTripleSystem::try_from(rec).unwrap();
        prop_assert_eq!(back, sys);
    }

    #[test]
    fn canonical_form_is_label_invariant(n in 3usize..=12, m in 0usize..=16, seed in any::<u64>()) {
        let sys = random_linear(&GeneratorConfig::new(n, seed).with_target(m)).system;
        let perm = random_perm(n, seed ^ 0x5eed);
        let moved = sys.relabel(&perm);
        let form = canonical_form(&sys).unwrap();
        prop_assert_eq!(&canonical_form(&moved).unwrap(), &form);
        prop_assert_eq!(form.to_system().edge_count(), sys.edge_count());
    }

    #[test]
    fn relabel_preserves_linearity_and_degrees(n in 3usize..=14, m in 0usize..=20, seed in any::<u64>()) {
        let sys = random_linear(&GeneratorConfig::new(n, seed).with_target(m)).system;
        let perm = random_perm(n, seed.rotate_left(7));
        let moved = sys.relabel(&perm);
        moved.validate().unwrap();
        for v in 0..n as Vertex {
            prop_assert_eq!(moved.degree(perm[v as usize]), sys.degree(v));
        }
    }
}
