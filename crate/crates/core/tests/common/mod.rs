//! Brute-force reference implementations. Everything here works from the
//! raw edge list by subset enumeration and shares no code with the library
//! detectors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use wicketlab::generators::{random_linear, GeneratorConfig};
use wicketlab::{LinearTripleSystem, Pattern};

pub type E = [u32; 3];

pub fn edges(sys: &LinearTripleSystem) -> Vec<E> {
    sys.edges().iter().map(|t| t.vertices()).collect()
}

pub fn meet(a: &E, b: &E) -> usize {
    a.iter().filter(|v| b.contains(v)).count()
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::new(), &mut out);
    out
}

fn pairwise(es: &[E], want: usize) -> bool {
    (0..es.len()).all(|i| (i + 1..es.len()).all(|j| meet(&es[i], &es[j]) == want))
}

fn grid_like(rows: &[E], cols: &[E]) -> bool {
    pairwise(rows, 0)
        && pairwise(cols, 0)
        && rows.iter().all(|r| cols.iter().all(|c| meet(r, c) == 1))
}

/// Number of ways to split 5-edge subsets into 3 rows and 2 columns forming
/// a wicket.
pub fn wicket_splits(es: &[E]) -> u64 {
    let mut count = 0;
    for s in subsets(es.len(), 5) {
        let five: Vec<E> = s.iter().map(|&i| es[i]).collect();
        count += wicket_splits_of_five(&five);
    }
    count
}

pub fn wicket_splits_of_five(five: &[E]) -> u64 {
    let mut count = 0;
    for cols in subsets(5, 2) {
        let c: Vec<E> = cols.iter().map(|&i| five[i]).collect();
        let r: Vec<E> = (0..5)
            .filter(|i| !cols.contains(i))
            .map(|i| five[i])
            .collect();
        if grid_like(&r, &c) {
            count += 1;
        }
    }
    count
}

pub fn has_grid(es: &[E]) -> bool {
    subsets(es.len(), 6).into_iter().any(|s| {
        let six: Vec<E> = s.iter().map(|&i| es[i]).collect();
        subsets(6, 3).into_iter().any(|cols| {
            let c: Vec<E> = cols.iter().map(|&i| six[i]).collect();
            let r: Vec<E> = (0..6)
                .filter(|i| !cols.contains(i))
                .map(|i| six[i])
                .collect();
            grid_like(&r, &c)
        })
    })
}

/// Three edges, pairwise meeting, with no common vertex.
pub fn is_six_three(three: &[E]) -> bool {
    let union: BTreeSet<u32> = three.iter().flatten().copied().collect();
    pairwise(three, 1) && union.len() == 6
}

pub fn count_six_three(es: &[E]) -> u64 {
    subsets(es.len(), 3)
        .into_iter()
        .filter(|s| is_six_three(&s.iter().map(|&i| es[i]).collect::<Vec<_>>()))
        .count() as u64
}

/// Four distinct edges in a cyclic order with four distinct consecutive
/// intersection vertices.
pub fn has_berge_c4(es: &[E]) -> bool {
    subsets(es.len(), 4).into_iter().any(|s| {
        let f: Vec<E> = s.iter().map(|&i| es[i]).collect();
        // the three cyclic orders of four items
        [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]]
            .iter()
            .any(|ord| {
                let mut vs = Vec::new();
                for k in 0..4 {
                    let (a, b) = (&f[ord[k]], &f[ord[(k + 1) % 4]]);
                    match a.iter().find(|v| b.contains(v)) {
                        Some(&v) => vs.push(v),
                        None => return false,
                    }
                }
                let distinct: BTreeSet<u32> = vs.iter().copied().collect();
                distinct.len() == 4
            })
    })
}

pub fn contains(es: &[E], p: Pattern) -> bool {
    match p {
        Pattern::None => false,
        Pattern::Wicket => wicket_splits(es) > 0,
        Pattern::Grid => has_grid(es),
        Pattern::SixThree => count_six_three(es) > 0,
        Pattern::BergeC4 => has_berge_c4(es),
    }
}

/// Index sets of the edge subsets that form the pattern on their own.
pub fn occurrence_sets(es: &[E], p: Pattern) -> Vec<Vec<usize>> {
    let size = match p {
        Pattern::None => return Vec::new(),
        Pattern::Wicket => 5,
        Pattern::Grid => 6,
        Pattern::SixThree => 3,
        Pattern::BergeC4 => 4,
    };
    subsets(es.len(), size)
        .into_iter()
        .filter(|s| contains(&s.iter().map(|&i| es[i]).collect::<Vec<_>>(), p))
        .collect()
}

fn linear_with(es: &[E], t: &E) -> bool {
    es.iter().all(|e| meet(e, t) <= 1)
}

/// Largest pattern-free linear system on `n` points by visiting every linear
/// system (triples added in increasing order), with no bounding.
pub fn naive_ex(n: u32, p: Pattern) -> usize {
    let mut all = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                all.push([a, b, c]);
            }
        }
    }
    fn rec(all: &[E], start: usize, cur: &mut Vec<E>, p: Pattern, best: &mut usize) {
        if contains(cur, p) {
            return;
        }
        *best = (*best).max(cur.len());
        for i in start..all.len() {
            if linear_with(cur, &all[i]) {
                cur.push(all[i]);
                rec(all, i + 1, cur, p, best);
                cur.pop();
            }
        }
    }
    let mut best = 0;
    rec(&all, 0, &mut Vec::new(), p, &mut best);
    best
}

/// Smallest sorted edge list over all `n!` relabelings.
pub fn brute_canonical(n: usize, es: &[E]) -> Vec<E> {
    let mut best: Option<Vec<E>> = None;
    for perm in permutations(n) {
        let mut r: Vec<E> = es
            .iter()
            .map(|e| {
                let mut t = e.map(|v| perm[v as usize] as u32);
                t.sort_unstable();
                t
            })
            .collect();
        r.sort_unstable();
        if best.as_ref().is_none_or(|b| r < *b) {
            best = Some(r);
        }
    }
    best.unwrap_or_default()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of the `s!` perfect matchings (permutations) that contain at least
/// one of the `k` disjoint pairs `(i, i)`, `i < k`.
pub fn count_hitting_matchings(s: usize, k: usize) -> u64 {
    permutations(s)
        .iter()
        .filter(|p| (0..k).any(|i| p[i] == i))
        .count() as u64
}

/// Seeded random linear systems with `n <= max_n` and `m <= max_m`.
pub fn random_systems(
    count: u64,
    max_n: usize,
    max_m: usize,
    seed: u64,
) -> Vec<LinearTripleSystem> {
    (0..count)
        .map(|i| {
            let s = wicketlab::seed::derive(seed, i);
            let n = 3 + (s % (max_n as u64 - 2)) as usize;
            let m = 1 + ((s >> 16) % max_m as u64) as usize;
            random_linear(&GeneratorConfig::new(n, s).with_target(m)).system
        })
        .collect()
}
