use thiserror::Error;

use crate::system::{LinearTripleSystem, Vertex};

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("no Steiner triple system of order {0}: n must be 1 or 3 mod 6")]
pub struct UnsupportedOrder(pub usize);

/// Steiner triple system of order `n`: Bose construction for `n = 6k + 3`,
/// Skolem construction for `n = 6k + 1`. Edges in lexicographic order.
pub fn steiner_triple_system(n: usize) -> Result<LinearTripleSystem, UnsupportedOrder> {
    let triples = match n % 6 {
        3 => bose((n - 3) / 6),
        1 => skolem((n - 1) / 6),
        _ => return Err(UnsupportedOrder(n)),
    };
    let mut triples: Vec<[Vertex; 3]> = triples
        .into_iter()
        .map(|mut t| {
            t.sort_unstable();
            t
        })
        .collect();
    triples.sort_unstable();
    Ok(LinearTripleSystem::from_edges(n, triples)
        .expect("Bose/Skolem triples form a Steiner system"))
}

/// Points `(x, i)` with `x` in the idempotent commutative quasigroup
/// `x ∘ y = (x + y) / 2 (mod 2k + 1)` and `i ∈ Z_3`.
fn bose(k: usize) -> Vec<[Vertex; 3]> {
    let q = 2 * k + 1;
    let half = k + 1; // inverse of 2 mod q
    let pt = |x: usize, i: usize| (x + (i % 3) * q) as Vertex;
    let op = |x: usize, y: usize| ((x + y) * half) % q;
    let mut out = Vec::with_capacity(q * (3 * k + 1));
    for x in 0..q {
        out.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
    }
    for x in 0..q {
        for y in (x + 1)..q {
            for i in 0..3 {
                out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    out
}

/// Points `∞` and `(x, i)` with `x` in the half-idempotent commutative
/// quasigroup of order `2k` and `i ∈ Z_3`.
fn skolem(k: usize) -> Vec<[Vertex; 3]> {
    let q = 2 * k;
    let inf = (3 * q) as Vertex;
    let pt = |x: usize, i: usize| (x + (i % 3) * q) as Vertex;
    let op = |x: usize, y: usize| {
        let s = (x + y) % q;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            k + (s - 1) / 2
        }
    };
    let mut out = Vec::new();
    for x in 0..k {
        out.push([pt(x, 0), pt(x, 1), pt(x, 2)]);
        for i in 0..3 {
            out.push([inf, pt(x + k, i), pt(x, i + 1)]);
        }
    }
    for x in 0..q {
        for y in (x + 1)..q {
            for i in 0..3 {
                out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    out
}

/// The affine plane of order 3: points `(x, y) ∈ Z_3²` as `3x + y`, twelve
/// lines in four parallel classes.
pub fn affine_plane_ag23() -> LinearTripleSystem {
    let pt = |x: usize, y: usize| (3 * (x % 3) + (y % 3)) as Vertex;
    let mut lines = Vec::with_capacity(12);
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
    lines.sort_unstable();
    LinearTripleSystem::from_edges(9, lines).expect("affine plane is linear")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn covers_every_pair_once(s: &LinearTripleSystem) -> bool {
        let n = s.n() as Vertex;
        (0..n).all(|u| {
            ((u + 1)..n).all(|v| {
                s.edges()
                    .iter()
                    .filter(|t| t.contains(u) && t.contains(v))
                    .count()
                    == 1
            })
        })
    }

    #[test]
    fn small_orders() {
        for n in [1, 3, 7, 9, 13, 15, 19, 21, 25, 27] {
            let s = steiner_triple_system(n).unwrap();
            assert_eq!(s.edge_count(), n * (n - 1) / 6, "n = {n}");
            assert!(covers_every_pair_once(&s), "n = {n}");
        }
    }

    #[test]
    fn unsupported_orders() {
        for n in [0, 2, 4, 5, 6, 8, 10, 11, 12] {
            assert_eq!(steiner_triple_system(n).unwrap_err(), UnsupportedOrder(n));
        }
    }

    #[test]
    fn affine_plane() {
        let s = affine_plane_ag23();
        assert_eq!(s.edge_count(), 12);
        assert!(covers_every_pair_once(&s));
    }
}
