use crate::combi::each_combination;
use crate::error::{Error, Result};
use crate::linalg::affinely_independent;
use crate::rational::{format_rational, parse_rational, rat, Rational};
use num_traits::One;
use serde::{Deserialize, Serialize};

/// A labelled finite point set in R^dim with exact rational coordinates.
/// Labels are 1-based and follow input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfig {
    dim: usize,
    points: Vec<Vec<Rational>>,
}

#[derive(Serialize, Deserialize)]
struct RawConfig {
    dim: usize,
    points: Vec<Vec<RawCoord>>,
}

/// Coordinates in JSON may be plain integers or "p/q" strings.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawCoord {
    Int(i64),
    Str(String),
}

impl PointConfig {
    /// Builds a configuration, rejecting duplicate points.
    pub fn new(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::build(dim, points, false)
    }

    /// Builds a configuration, permitting duplicate points.
    pub fn new_with_duplicates(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::build(dim, points, true)
    }

    fn build(dim: usize, points: Vec<Vec<Rational>>, allow_duplicates: bool) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch("dim must be at least 1".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "point {} has {} coordinates, expected {dim}",
                    i + 1,
                    p.len()
                )));
            }
        }
        if !allow_duplicates {
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    if points[i] == points[j] {
                        return Err(Error::DuplicatePoints(i + 1, j + 1));
                    }
                }
            }
        }
        Ok(PointConfig { dim, points })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Coordinates of the point with the given 1-based label.
    pub fn point(&self, label: usize) -> &[Rational] {
        &self.points[label - 1]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Rational]> {
        self.points.iter().map(Vec::as_slice)
    }

    /// Validates that `labels` is a strictly increasing sequence of 1-based
    /// labels into this configuration.
    pub fn check_labels(&self, labels: &[usize]) -> Result<()> {
        let n = self.len();
        for (i, &l) in labels.iter().enumerate() {
            if l < 1 || l > n {
                return Err(Error::BadLabel { label: l, n });
            }
            if i > 0 && labels[i - 1] >= l {
                return Err(Error::UnsortedIndexSet(l));
            }
        }
        Ok(())
    }

    /// The sub-configuration (same dim) picked out by strictly increasing
    /// labels.
    pub fn subset(&self, labels: &[usize]) -> Result<PointConfig> {
        self.check_labels(labels)?;
        Ok(PointConfig {
            dim: self.dim,
            points: labels.iter().map(|&l| self.points[l - 1].clone()).collect(),
        })
    }

    /// True iff every subset of size min(n, dim+1) is affinely independent.
    pub fn is_general_position(&self) -> bool {
        let n = self.len();
        let m = n.min(self.dim + 1);
        each_combination(n, m, &mut |c| {
            let pts: Vec<&[Rational]> = c.iter().map(|&i| self.points[i].as_slice()).collect();
            affinely_independent(&pts, self.dim)
        })
    }

    /// n points on the moment curve t -> (t, t^2, ..., t^d). Parameters
    /// default to 1..=n and must be strictly increasing when supplied.
    pub fn moment_curve(n: usize, d: usize, params: Option<&[Rational]>) -> Result<Self> {
        if d == 0 {
            return Err(Error::DimensionMismatch("dim must be at least 1".into()));
        }
        let ts: Vec<Rational> = match params {
            Some(ts) => {
                if ts.len() != n {
                    return Err(Error::DimensionMismatch(format!(
                        "{} parameters for {n} points",
                        ts.len()
                    )));
                }
                if ts.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::NonIncreasingParams);
                }
                ts.to_vec()
            }
            None => (1..=n as i64).map(rat).collect(),
        };
        let points = ts
            .iter()
            .map(|t| {
                let mut coords = Vec::with_capacity(d);
                let mut pw = Rational::one();
                for _ in 0..d {
                    pw *= t;
                    coords.push(pw.clone());
                }
                coords
            })
            .collect();
        // distinct parameters give distinct first coordinates
        Self::build(d, points, true)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Self::from_json_impl(s, false)
    }

    /// Like `from_json` but keeping duplicate points.
    pub fn from_json_with_duplicates(s: &str) -> Result<Self> {
        Self::from_json_impl(s, true)
    }

    fn from_json_impl(s: &str, allow_duplicates: bool) -> Result<Self> {
        let raw: RawConfig =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad config JSON: {e}")))?;
        let points = raw
            .points
            .into_iter()
            .map(|p| {
                p.into_iter()
                    .map(|c| match c {
                        RawCoord::Int(i) => Ok(rat(i)),
                        RawCoord::Str(s) => parse_rational(&s),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::build(raw.dim, points, allow_duplicates)
    }

    pub fn to_json(&self) -> String {
        let raw = RawConfig {
            dim: self.dim,
            points: self
                .points
                .iter()
                .map(|p| p.iter().map(|c| RawCoord::Str(format_rational(c))).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("config serialization")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn json_roundtrip_mixed_coords() {
        let s = r#"{"dim": 2, "points": [[1, "1/2"], ["-3/4", 5]]}"#;
        let cfg = PointConfig::from_json(s).unwrap();
        assert_eq!(cfg.dim(), 2);
        assert_eq!(cfg.len(), 2);
        assert_eq!(cfg.point(1)[1], ratio(1, 2));
        assert_eq!(cfg.point(2)[0], ratio(-3, 4));
        let back = PointConfig::from_json(&cfg.to_json()).unwrap();
        assert_eq!(back, cfg);
    }

    #[test]
    fn duplicates_rejected_by_default() {
        let pts = vec![vec![rat(1), rat(2)], vec![rat(1), rat(2)]];
        assert_eq!(
            PointConfig::new(2, pts.clone()),
            Err(Error::DuplicatePoints(1, 2))
        );
        assert!(PointConfig::new_with_duplicates(2, pts).is_ok());
    }

    #[test]
    fn general_position_detects_collinearity() {
        let good = PointConfig::new(
            2,
            vec![
                vec![rat(0), rat(0)],
                vec![rat(1), rat(0)],
                vec![rat(0), rat(1)],
                vec![rat(2), rat(3)],
            ],
        )
        .unwrap();
        assert!(good.is_general_position());
        let bad = PointConfig::new(
            2,
            vec![
                vec![rat(0), rat(0)],
                vec![rat(1), rat(1)],
                vec![rat(2), rat(2)],
            ],
        )
        .unwrap();
        assert!(!bad.is_general_position());
    }

    #[test]
    fn moment_curve_points() {
        let cfg = PointConfig::moment_curve(4, 3, None).unwrap();
        assert_eq!(cfg.point(2), &[rat(2), rat(4), rat(8)]);
        assert_eq!(cfg.point(4), &[rat(4), rat(16), rat(64)]);
        assert!(cfg.is_general_position());
        let custom = PointConfig::moment_curve(2, 2, Some(&[ratio(1, 2), rat(3)])).unwrap();
        assert_eq!(custom.point(1), &[ratio(1, 2), ratio(1, 4)]);
        assert_eq!(
            PointConfig::moment_curve(2, 2, Some(&[rat(3), rat(3)])),
            Err(Error::NonIncreasingParams)
        );
    }

    #[test]
    fn label_checks() {
        let cfg = PointConfig::moment_curve(5, 2, None).unwrap();
        assert!(cfg.check_labels(&[1, 3, 5]).is_ok());
        assert_eq!(
            cfg.check_labels(&[0, 1]),
            Err(Error::BadLabel { label: 0, n: 5 })
        );
        assert_eq!(
            cfg.check_labels(&[2, 2]),
            Err(Error::UnsortedIndexSet(2))
        );
        assert_eq!(
            cfg.check_labels(&[6]),
            Err(Error::BadLabel { label: 6, n: 5 })
        );
    }
}
