use num_rational::Ratio;
use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};

use super::partition::{Class, Half, PartitionLabels};
use super::PipelineError;
use crate::seed;
use crate::system::Vertex;

/// Largest side size accepted by [`matching_hit_probability`].
pub const HIT_PROBABILITY_LIMIT: usize = 12;

/// Disjoint pairs `m_1, ..., m_s` between `V'1` (first) and `V'3` (second).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub pairs: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Index of the pair `(a, b)`, if present.
    pub fn index_of(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.pairs.iter().position(|&p| p == (a, b))
    }

    pub fn is_matching(&self) -> bool {
        let mut left: Vec<Vertex> = self.pairs.iter().map(|p| p.0).collect();
        let mut right: Vec<Vertex> = self.pairs.iter().map(|p| p.1).collect();
        left.sort_unstable();
        right.sort_unstable();
        left.windows(2).all(|w| w[0] != w[1]) && right.windows(2).all(|w| w[0] != w[1])
    }
}

/// Uniform random perfect matching between `V'1` and `V'3`. When the sides
/// differ in size, a uniformly random subset of the larger side is matched
/// and the rest ignored. Pairs are listed by increasing `V'1` vertex.
pub fn random_perfect_matching(
    labels: &PartitionLabels,
    seed: u64,
) -> Result<Matching, PipelineError> {
    let left = labels.part(Class::V1, Half::Prime);
    let right = labels.part(Class::V3, Half::Prime);
    if left.is_empty() || right.is_empty() {
        return Err(PipelineError::EmptySide);
    }
    Ok(uniform_matching(left, right, seed))
}

pub(crate) fn uniform_matching(
    mut left: Vec<Vertex>,
    mut right: Vec<Vertex>,
    seed: u64,
) -> Matching {
    let mut rng = seed::rng(seed);
    if left.len() <= right.len() {
        right.shuffle(&mut rng);
    } else {
        left.shuffle(&mut rng);
    }
    let mut pairs: Vec<(Vertex, Vertex)> = left.into_iter().zip(right).collect();
    pairs.sort_unstable();
    Matching { pairs }
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Exact probability that a uniform perfect matching between two `s`-sets
/// contains at least one of `k` fixed disjoint pairs, by inclusion-exclusion:
/// `(k (s-1)! - C(k,2) (s-2)! + C(k,3) (s-3)! - ...) / s!`.
pub fn matching_hit_probability(s: usize, k: usize) -> Result<Ratio<u128>, PipelineError> {
    if s > HIT_PROBABILITY_LIMIT {
        return Err(PipelineError::SizeLimitExceeded {
            size: s,
            limit: HIT_PROBABILITY_LIMIT,
        });
    }
    if k > s {
        return Err(PipelineError::InvalidArgument(format!(
            "{k} disjoint pairs cannot fit in sides of size {s}"
        )));
    }
    let mut count: i128 = 0;
    for j in 1..=k {
        let term = (binomial(k, j) * factorial(s - j)) as i128;
        count += if j % 2 == 1 { term } else { -term };
    }
    Ok(Ratio::new(count as u128, factorial(s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::partition::Class::*;
    use crate::pipeline::partition::Half::*;

    #[test]
    fn small_probabilities() {
        assert_eq!(
            matching_hit_probability(1, 1).unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(matching_hit_probability(2, 1).unwrap(), Ratio::new(1, 2));
        assert_eq!(
            matching_hit_probability(5, 0).unwrap(),
            Ratio::from_integer(0)
        );
        // s = 3, k = 3: derangements of 3 are 2 of 6, so 4/6 hit.
        assert_eq!(matching_hit_probability(3, 3).unwrap(), Ratio::new(2, 3));
    }

    #[test]
    fn argument_checks() {
        assert!(matches!(
            matching_hit_probability(13, 1),
            Err(PipelineError::SizeLimitExceeded {
                size: 13,
                limit: 12
            })
        ));
        assert!(matches!(
            matching_hit_probability(2, 3),
            Err(PipelineError::InvalidArgument(_))
        ));
        assert!(matching_hit_probability(12, 12).is_ok());
    }

    fn labels_with_sides(l: usize, r: usize) -> PartitionLabels {
        let classes = [vec![V1; l], vec![V3; r]].concat();
        PartitionLabels::with_halves(classes, vec![Prime; l + r])
    }

    #[test]
    fn unique_pair() {
        let m = random_perfect_matching(&labels_with_sides(1, 1), 3).unwrap();
        assert_eq!(m.pairs, vec![(0, 1)]);
    }

    #[test]
    fn empty_side() {
        assert_eq!(
            random_perfect_matching(&labels_with_sides(2, 0), 3),
            Err(PipelineError::EmptySide)
        );
    }

    #[test]
    fn uneven_sides_match_the_smaller() {
        let labels = labels_with_sides(4, 2);
        let m = random_perfect_matching(&labels, 17).unwrap();
        assert_eq!(m.len(), 2);
        assert!(m.is_matching());
        assert_eq!(random_perfect_matching(&labels, 17).unwrap(), m);
    }
}
