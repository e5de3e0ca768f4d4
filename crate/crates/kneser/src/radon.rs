//! Radon partitions of d+2 points from an exact affine dependence.

use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::linalg::homogeneous_matrix;
use crate::rational::{Rational, sign_of};
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// A two-block signed split of labelled points, together with the normalized
/// dependence weights: the weights of each block sum to 1, and the common
/// point of the two hulls is the weighted average of either block.
///
/// Labels carrying a zero coefficient in the dependence belong to neither
/// block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPartition {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub coefficients: BTreeMap<usize, Rational>,
}

impl SignedPartition {
    pub fn to_json(&self) -> serde_json::Value {
        use crate::rational::format_rational;
        let coeffs: serde_json::Map<String, serde_json::Value> = self
            .coefficients
            .iter()
            .map(|(l, c)| (l.to_string(), serde_json::Value::String(format_rational(c))))
            .collect();
        serde_json::json!({
            "positive": self.positive,
            "negative": self.negative,
            "coefficients": coeffs,
        })
    }
}

/// Radon partition of a full configuration of exactly dim+2 points.
///
/// The affine dependence used is canonical: the first vector of the reduced
/// row echelon nullspace basis of the homogenized point matrix, taken in
/// label order. Its last nonzero entry is +1, which fixes the orientation of
/// the two blocks deterministically.
pub fn radon_partition(config: &PointConfig) -> Result<SignedPartition> {
    let n = config.len();
    let d = config.dim();
    if n != d + 2 {
        return Err(Error::DimensionMismatch(format!(
            "radon partition needs exactly dim+2 = {} points, got {n}",
            d + 2
        )));
    }
    let labels: Vec<usize> = (1..=n).collect();
    radon_partition_of(config, &labels)
}

/// Radon partition of the sub-configuration picked out by `labels`, which
/// must be strictly increasing and number dim+2. Returned sets use the
/// original labels.
pub fn radon_partition_of(config: &PointConfig, labels: &[usize]) -> Result<SignedPartition> {
    config.check_labels(labels)?;
    let d = config.dim();
    if labels.len() != d + 2 {
        return Err(Error::DimensionMismatch(format!(
            "radon partition needs exactly dim+2 = {} points, got {}",
            d + 2,
            labels.len()
        )));
    }
    let pts: Vec<&[Rational]> = labels.iter().map(|&l| config.point(l)).collect();
    let basis = homogeneous_matrix(&pts, d).nullspace();
    // dim+2 homogenized columns in a (dim+1)-row matrix always leave at least
    // one free column
    let c = basis
        .first()
        .ok_or_else(|| Error::Internal("missing affine dependence".into()))?;
    debug_assert_eq!(
        c.iter().rev().find(|x| !x.is_zero()).map(sign_of),
        Some(1),
        "canonical dependence must end on +1"
    );

    let mut positive = Vec::new();
    let mut negative = Vec::new();
    let mut pos_sum = Rational::zero();
    for (i, v) in c.iter().enumerate() {
        match sign_of(v) {
            1 => {
                positive.push(labels[i]);
                pos_sum += v;
            }
            -1 => negative.push(labels[i]),
            _ => {}
        }
    }
    if positive.is_empty() || negative.is_empty() {
        // impossible for a genuine affine dependence: coefficients sum to 0
        return Err(Error::Internal("one-signed affine dependence".into()));
    }
    let coefficients = c
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (labels[i], v.abs() / &pos_sum))
        .collect();
    Ok(SignedPartition {
        positive,
        negative,
        coefficients,
    })
}

/// The common point of the two block hulls: the coefficient-weighted average
/// of the positive block.
pub fn radon_point(config: &PointConfig, partition: &SignedPartition) -> Vec<Rational> {
    let d = config.dim();
    let mut pt = vec![Rational::zero(); d];
    for &l in &partition.positive {
        let w = &partition.coefficients[&l];
        for (i, x) in config.point(l).iter().enumerate() {
            pt[i] += w * x;
        }
    }
    pt
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn cfg(dim: usize, raw: &[&[i64]]) -> PointConfig {
        PointConfig::new(
            dim,
            raw.iter()
                .map(|p| p.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn square_splits_into_diagonals() {
        let c = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let p = radon_partition(&c).unwrap();
        assert_eq!(p.positive, vec![1, 4]);
        assert_eq!(p.negative, vec![2, 3]);
        for l in 1..=4 {
            assert_eq!(p.coefficients[&l], ratio(1, 2));
        }
        assert_eq!(radon_point(&c, &p), vec![ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn interior_point_is_singleton_block() {
        let c = PointConfig::new(
            2,
            vec![
                vec![rat(0), rat(0)],
                vec![rat(1), rat(0)],
                vec![rat(0), rat(1)],
                vec![ratio(1, 4), ratio(1, 4)],
            ],
        )
        .unwrap();
        let p = radon_partition(&c).unwrap();
        assert_eq!(p.positive, vec![4]);
        assert_eq!(p.negative, vec![1, 2, 3]);
        assert_eq!(p.coefficients[&4], rat(1));
        assert_eq!(p.coefficients[&1], ratio(1, 2));
        assert_eq!(p.coefficients[&2], ratio(1, 4));
        assert_eq!(p.coefficients[&3], ratio(1, 4));
        assert_eq!(radon_point(&c, &p), vec![ratio(1, 4), ratio(1, 4)]);
    }

    #[test]
    fn moment_curve_alternates() {
        let c = PointConfig::moment_curve(4, 2, None).unwrap();
        let p = radon_partition(&c).unwrap();
        assert_eq!(p.positive, vec![2, 4]);
        assert_eq!(p.negative, vec![1, 3]);
    }

    #[test]
    fn degenerate_dependence_drops_zero_coefficients() {
        // labels 1,2,3 are collinear; label 4 is generic, label 5 completes n = d+2
        // the first dependence in label order involves only 1,2,3
        let c = cfg(3, &[
            &[0, 0, 0],
            &[1, 0, 0],
            &[2, 0, 0],
            &[0, 1, 0],
            &[0, 0, 1],
        ]);
        let p = radon_partition(&c).unwrap();
        assert_eq!(p.positive, vec![1, 3]);
        assert_eq!(p.negative, vec![2]);
        assert!(!p.coefficients.contains_key(&4));
        assert!(!p.coefficients.contains_key(&5));
        assert_eq!(p.coefficients[&2], rat(1));
        assert_eq!(p.coefficients[&1], ratio(1, 2));
        assert_eq!(radon_point(&c, &p), vec![rat(1), rat(0), rat(0)]);
    }

    #[test]
    fn wrong_count_rejected() {
        let c = cfg(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        assert!(matches!(
            radon_partition(&c),
            Err(Error::DimensionMismatch(_))
        ));
    }
}
