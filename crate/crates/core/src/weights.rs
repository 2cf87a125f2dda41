//! GL(n) weight-lattice combinatorics and the Borel-Bott-Weil reduction step.

use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::Error;

/// An integer weight of GL(n), stored as its coordinate vector of length n.
///
/// The rank is the length of the vector and is carried explicitly: combining
/// weights of different ranks is an error, never a silent padding.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        assert!(!entries.is_empty(), "weights have rank >= 1");
        Weight { entries }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn is_dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    /// Entrywise sum of two weights of the same rank.
    pub fn checked_add(&self, other: &Weight) -> Result<Weight, Error> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(Weight::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// Adds the determinant character c·(1,…,1).
    pub fn det_shift(&self, c: i64) -> Weight {
        Weight::new(self.entries.iter().map(|a| a + c).collect())
    }

    /// The weight of the dual representation: negate and reverse.
    pub fn dual(&self) -> Weight {
        Weight::new(self.entries.iter().rev().map(|a| -a).collect())
    }

    /// Concatenation (β,γ), as used for bundles on a Grassmannian.
    pub fn concat(&self, other: &Weight) -> Weight {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Weight::new(entries)
    }

    /// Parses a comma-separated list of decimal integers.
    pub fn parse(text: &str) -> Result<Weight, Error> {
        let entries: Result<Vec<i64>, _> = text.split(',').map(|s| s.trim().parse()).collect();
        match entries {
            Ok(v) if !v.is_empty() => Ok(Weight::new(v)),
            _ => Err(Error::BadWeightLiteral(text.to_string())),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // decimal strings, matching the big-integer JSON convention
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for a in &self.entries {
            seq.serialize_element(&a.to_string())?;
        }
        seq.end()
    }
}

/// A nonincreasing integer sequence: a dominant weight of GL(n).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DominantWeight(Weight);

impl DominantWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self, Error> {
        Self::from_weight(Weight::new(entries))
    }

    pub fn from_weight(w: Weight) -> Result<Self, Error> {
        if w.is_dominant() {
            Ok(DominantWeight(w))
        } else {
            Err(Error::NotDominant(w.entries))
        }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(Weight::zero(rank))
    }

    pub fn weight(&self) -> &Weight {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.rank()
    }

    pub fn entries(&self) -> &[i64] {
        self.0.entries()
    }

    pub fn det_shift(&self, c: i64) -> DominantWeight {
        DominantWeight(self.0.det_shift(c))
    }

    /// Duality preserves dominance.
    pub fn dual(&self) -> DominantWeight {
        DominantWeight(self.0.dual())
    }

    /// Total size Σ entries (can be negative for virtual twists).
    pub fn size(&self) -> i64 {
        self.entries().iter().sum()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Half the sum of the positive roots of GL(n): the strictly decreasing
/// sequence (n, n−1, …, 2, 1).
pub fn rho(rank: usize) -> Weight {
    assert!(rank >= 1);
    Weight::new((1..=rank as i64).rev().collect())
}

/// Result of the Borel-Bott-Weil reduction of a weight α.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BbwOutcome {
    /// α+ρ has a repeated entry: all cohomology vanishes.
    Zero,
    /// Cohomology sits in a single degree ℓ(σ), with the given dominant
    /// highest weight taken on the dual space V*.
    NonZero {
        degree: usize,
        weight: DominantWeight,
    },
}

impl BbwOutcome {
    pub fn is_zero(&self) -> bool {
        matches!(self, BbwOutcome::Zero)
    }
}

/// The Borel-Bott-Weil reduction: sort α+ρ, count inversions, subtract ρ.
///
/// Returns [`BbwOutcome::Zero`] when α+ρ has a repeated entry; otherwise the
/// unique sorting permutation σ gives cohomological degree ℓ(σ) and the
/// exponent of the answer on V* is sort-descending(α+ρ) − ρ.
pub fn bbw_reduce(alpha: &Weight) -> BbwOutcome {
    let n = alpha.rank();
    let shifted = alpha
        .checked_add(&rho(n))
        .expect("rho has matching rank")
        .entries()
        .to_vec();

    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return BbwOutcome::Zero;
    }

    // ℓ(σ) = number of pairs i<j out of order; n stays small, O(n²) is fine.
    let mut inversions = 0usize;
    for i in 0..n {
        for j in (i + 1)..n {
            if shifted[i] < shifted[j] {
                inversions += 1;
            }
        }
    }

    let weight = Weight::new(
        sorted
            .iter()
            .enumerate()
            .map(|(i, v)| v - (n as i64 - i as i64))
            .collect(),
    );
    BbwOutcome::NonZero {
        degree: inversions,
        weight: DominantWeight::from_weight(weight).expect("sorted strictly decreasing minus rho"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(entries: &[i64]) -> Weight {
        Weight::new(entries.to_vec())
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(1), w(&[1]));
        assert_eq!(rho(2), w(&[2, 1]));
        assert_eq!(rho(6), w(&[6, 5, 4, 3, 2, 1]));
    }

    #[test]
    fn bbw_dominant_is_identity() {
        let alpha = w(&[0, 0, 0, 0, 0, 0]);
        assert_eq!(
            bbw_reduce(&alpha),
            BbwOutcome::NonZero {
                degree: 0,
                weight: DominantWeight::zero(6)
            }
        );
        let pi2 = w(&[1, 1, 0, 0, 0, 0]);
        assert_eq!(
            bbw_reduce(&pi2),
            BbwOutcome::NonZero {
                degree: 0,
                weight: DominantWeight::new(vec![1, 1, 0, 0, 0, 0]).unwrap()
            }
        );
    }

    #[test]
    fn bbw_on_projective_line() {
        // O(-1) on P^1 is acyclic
        assert_eq!(bbw_reduce(&w(&[-1, 0])), BbwOutcome::Zero);
        // O(-2) on P^1 has one-dimensional H^1; classically h^1(O(-d)) = d-1
        assert_eq!(
            bbw_reduce(&w(&[-2, 0])),
            BbwOutcome::NonZero {
                degree: 1,
                weight: DominantWeight::new(vec![-1, -1]).unwrap()
            }
        );
        // cross-check a range of twists against the classical count
        for d in 2..8 {
            match bbw_reduce(&w(&[-d, 0])) {
                BbwOutcome::NonZero { degree, weight } => {
                    assert_eq!(degree, 1);
                    assert_eq!(weight.entries(), &[-1, 1 - d]);
                    // for a rank-2 weight (a,b), dim = a-b+1; h^1(O(-d)) = d-1
                    let e = weight.entries();
                    assert_eq!(e[0] - e[1] + 1, d - 1);
                }
                BbwOutcome::Zero => panic!("O(-{d}) should have H^1"),
            }
        }
    }

    #[test]
    fn dual_weight_examples() {
        assert_eq!(w(&[1, 0, 0]).dual(), w(&[0, 0, -1]));
        assert_eq!(w(&[1, 1, 1]).dual(), w(&[-1, -1, -1]));
        assert_eq!(w(&[2, 1, 0]).dual(), w(&[0, -1, -2]));
        // involution
        for v in [vec![3, -1, 2], vec![0, 0], vec![5, 4, -2, -7]] {
            let a = Weight::new(v);
            assert_eq!(a.dual().dual(), a);
        }
    }

    #[test]
    fn weight_parsing_round_trip() {
        let a = Weight::parse("1,1,0,0,0,0").unwrap();
        assert_eq!(a, w(&[1, 1, 0, 0, 0, 0]));
        assert_eq!(a.to_string(), "1,1,0,0,0,0");
        assert!(Weight::parse("").is_err());
        assert!(Weight::parse("1,x").is_err());
    }

    #[test]
    fn rank_mismatch_is_an_error() {
        assert!(w(&[1, 0]).checked_add(&w(&[1, 0, 0])).is_err());
    }
}
