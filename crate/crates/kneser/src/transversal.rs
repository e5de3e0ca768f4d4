//! Complete Kneser transversal checks: does the affine hull of a chosen
//! point subset T meet the convex hull of every k-subset of the
//! configuration?

use crate::combi::each_combination;
use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::linalg::{affinely_independent, homogeneous_matrix, Matrix};
use crate::lp::hulls_meet;
use crate::parity::in_trivial_range;
use crate::radon::radon_partition;
use crate::rational::{sign_of, Rational};
use num_traits::Zero;
use std::collections::HashMap;

/// Outcome of a transversal check. `t_indices` are the 1-based labels
/// spanning the candidate flat; when `verified` is false, `failing_kset` is
/// the lexicographically first k-subset whose hull misses the flat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalCertificate {
    pub t_indices: Vec<usize>,
    pub k: usize,
    pub verified: bool,
    pub failing_kset: Option<Vec<usize>>,
}

impl TransversalCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t_indices": self.t_indices,
            "k": self.k,
            "verified": self.verified,
            "failing_kset": self.failing_kset,
        })
    }
}

fn validate_pair(config: &PointConfig, s: &[usize], t: &[usize]) -> Result<()> {
    config.check_labels(s)?;
    config.check_labels(t)?;
    if s.is_empty() {
        return Err(Error::EmptySet("S"));
    }
    if t.is_empty() {
        return Err(Error::EmptySet("T"));
    }
    if let Some(&l) = s.iter().find(|l| t.binary_search(l).is_ok()) {
        return Err(Error::OverlappingSets(l));
    }
    Ok(())
}

fn sorted_union(s: &[usize], t: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = s.iter().chain(t).copied().collect();
    u.sort_unstable();
    u
}

/// Monochromatic-block criterion on exactly d+2 points: applicable when the
/// affine-dependence space of S ∪ T is one-dimensional with no zero
/// coefficient, in which case conv(S) meets aff(T) iff S lies inside one
/// Radon block. Returns None when inapplicable.
fn radon_criterion(config: &PointConfig, s: &[usize], t: &[usize]) -> Option<bool> {
    let d = config.dim();
    debug_assert_eq!(s.len() + t.len(), d + 2);
    let union = sorted_union(s, t);
    let pts: Vec<&[Rational]> = union.iter().map(|&l| config.point(l)).collect();
    let basis = homogeneous_matrix(&pts, d).nullspace();
    if basis.len() != 1 || basis[0].iter().any(Zero::is_zero) {
        return None;
    }
    let dep = &basis[0];
    let sign_at = |label: usize| -> i8 {
        let pos = union.binary_search(&label).expect("label in union");
        sign_of(&dep[pos])
    };
    let first = sign_at(s[0]);
    Some(s.iter().all(|&l| sign_at(l) == first))
}

fn lp_path(config: &PointConfig, s: &[usize], t: &[usize]) -> bool {
    let s_pts: Vec<&[Rational]> = s.iter().map(|&l| config.point(l)).collect();
    let t_pts: Vec<&[Rational]> = t.iter().map(|&l| config.point(l)).collect();
    hulls_meet(&s_pts, &t_pts, config.dim(), false)
}

fn union_general_position(config: &PointConfig, s: &[usize], t: &[usize]) -> bool {
    let union = sorted_union(s, t);
    config
        .subset(&union)
        .map(|sub| sub.is_general_position())
        .unwrap_or(false)
}

/// Core dispatch. `union_gp` is Some(true) when the caller already knows
/// every relevant subset is in general position; None means "check when it
/// matters".
fn conv_aff_decide(
    config: &PointConfig,
    s: &[usize],
    t: &[usize],
    union_gp: Option<bool>,
) -> bool {
    let d = config.dim();
    if s.len() + t.len() == d + 2 {
        if let Some(ans) = radon_criterion(config, s, t) {
            return ans;
        }
        return lp_path(config, s, t);
    }
    if t.len() <= d {
        let lambda = d + 1 - t.len();
        let gp = union_gp.unwrap_or_else(|| union_general_position(config, s, t));
        if s.len() > lambda + 1 && gp {
            // in general position it suffices that some (λ+1)-subset works
            let mut hit = false;
            each_combination(s.len(), lambda + 1, &mut |c| {
                let sub: Vec<usize> = c.iter().map(|&i| s[i]).collect();
                if conv_aff_decide(config, &sub, t, Some(true)) {
                    hit = true;
                    return false;
                }
                true
            });
            return hit;
        }
    }
    lp_path(config, s, t)
}

/// True iff conv(S) ∩ aff(T) is nonempty, decided exactly. S and T are
/// strictly increasing 1-based label sets.
pub fn conv_aff_intersects(config: &PointConfig, s: &[usize], t: &[usize]) -> Result<bool> {
    validate_pair(config, s, t)?;
    Ok(conv_aff_decide(config, s, t, None))
}

/// Same question, forced through the linear-feasibility fallback. Exposed so
/// the faster combinatorial paths can be cross-checked against it.
pub fn conv_aff_intersects_lp(config: &PointConfig, s: &[usize], t: &[usize]) -> Result<bool> {
    validate_pair(config, s, t)?;
    Ok(lp_path(config, s, t))
}

/// Same question, forced through the monochromatic-block criterion. Returns
/// Ok(None) when |S|+|T| != d+2 or the dependence is degenerate.
pub fn conv_aff_intersects_radon(
    config: &PointConfig,
    s: &[usize],
    t: &[usize],
) -> Result<Option<bool>> {
    validate_pair(config, s, t)?;
    if s.len() + t.len() != config.dim() + 2 {
        return Ok(None);
    }
    Ok(radon_criterion(config, s, t))
}

/// True iff conv(A) ∩ conv(B) is nonempty (both sets convex, exact LP).
pub fn convex_hulls_intersect(config: &PointConfig, a: &[usize], b: &[usize]) -> Result<bool> {
    validate_pair(config, a, b)?;
    let a_pts: Vec<&[Rational]> = a.iter().map(|&l| config.point(l)).collect();
    let b_pts: Vec<&[Rational]> = b.iter().map(|&l| config.point(l)).collect();
    Ok(hulls_meet(&a_pts, &b_pts, config.dim(), true))
}

/// Checks whether aff(T) is a complete Kneser transversal for k-subsets:
/// every k-subset's hull must meet it. k-sets sharing a point with T pass
/// trivially and are skipped; the failing witness, if any, is the
/// lexicographically first k-set overall.
pub fn is_complete_kneser_transversal(
    config: &PointConfig,
    t_indices: &[usize],
    k: usize,
) -> Result<TransversalCertificate> {
    config.check_labels(t_indices)?;
    let n = config.len();
    let d = config.dim();
    if t_indices.is_empty() || t_indices.len() > d {
        return Err(Error::BadTransversalSize {
            t_len: t_indices.len(),
            d,
        });
    }
    if k < 1 {
        return Err(Error::RangeViolation("k must be at least 1".into()));
    }
    if k > n {
        return Err(Error::KTooLarge { k, n });
    }
    let lambda = d + 1 - t_indices.len();
    let free: Vec<usize> = (1..=n)
        .filter(|l| t_indices.binary_search(l).is_err())
        .collect();
    let gp = config.is_general_position();
    let union_gp = if gp { Some(true) } else { None };

    // identical (λ+1)-subset queries recur across overlapping k-sets
    let mut cache: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut failing: Option<Vec<usize>> = None;
    each_combination(free.len(), k, &mut |c| {
        let kset: Vec<usize> = c.iter().map(|&i| free[i]).collect();
        let ok = if gp && k > lambda + 1 {
            let mut hit = false;
            each_combination(k, lambda + 1, &mut |cc| {
                let sub: Vec<usize> = cc.iter().map(|&i| kset[i]).collect();
                let pass = *cache
                    .entry(sub.clone())
                    .or_insert_with(|| conv_aff_decide(config, &sub, t_indices, Some(true)));
                if pass {
                    hit = true;
                    return false;
                }
                true
            });
            hit
        } else {
            conv_aff_decide(config, &kset, t_indices, union_gp)
        };
        if ok {
            true
        } else {
            failing = Some(kset);
            false
        }
    });
    Ok(TransversalCertificate {
        t_indices: t_indices.to_vec(),
        k,
        verified: failing.is_none(),
        failing_kset: failing,
    })
}

/// Splits d+2 points into S and T with |T| = t and conv(S) ∩ aff(T) != ∅:
/// T starts from the smaller Radon block (ties go to the negative block) and
/// is padded by lowest label, zero-coefficient labels first. The returned
/// pair is re-verified before being handed back.
pub fn lemma_partition(config: &PointConfig, t: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = config.len();
    let d = config.dim();
    if n != d + 2 {
        return Err(Error::DimensionMismatch(format!(
            "partition lemma needs exactly dim+2 = {} points, got {n}",
            d + 2
        )));
    }
    let lo = (d + 2) / 2;
    let hi = d + 1;
    if t < lo || t > hi {
        return Err(Error::BadT { t, lo, hi });
    }
    let part = radon_partition(config)?;
    let (seed, other) = if part.positive.len() < part.negative.len() {
        (&part.positive, &part.negative)
    } else {
        (&part.negative, &part.positive)
    };
    if seed.len() > t {
        return Err(Error::Internal("radon block exceeds target size".into()));
    }
    let zeros: Vec<usize> =
        (1..=n).filter(|l| !part.coefficients.contains_key(l)).collect();
    let mut t_set = seed.clone();
    // zero-coefficient labels are harmless in T and keep the surviving block
    // of the dependence inside S
    let pool = zeros.iter().chain(other.iter());
    for &l in pool {
        if t_set.len() == t {
            break;
        }
        t_set.push(l);
    }
    t_set.sort_unstable();
    let s_set: Vec<usize> = (1..=n)
        .filter(|l| t_set.binary_search(l).is_err())
        .collect();
    if !conv_aff_intersects(config, &s_set, &t_set)? {
        return Err(Error::Internal(
            "partition lemma produced a non-intersecting pair".into(),
        ));
    }
    Ok((s_set, t_set))
}

/// Builds a complete Kneser transversal on n = (d−λ+1)+k points by splitting
/// the first d+2 labels so that conv(S) meets aff(T) with |T| = d−λ+1. The
/// resulting certificate is always verified.
pub fn build_theorem1_transversal(
    config: &PointConfig,
    k: usize,
    lambda: usize,
) -> Result<TransversalCertificate> {
    let d = config.dim();
    let n = config.len();
    if lambda < 1 || lambda > d {
        return Err(Error::RangeViolation(format!(
            "lambda = {lambda} outside 1..={d}"
        )));
    }
    if in_trivial_range(d, lambda) {
        return Err(Error::RangeViolation(format!(
            "(d, lambda) = ({d}, {lambda}) is in the trivial range"
        )));
    }
    if k < lambda + 1 {
        return Err(Error::RangeViolation(format!(
            "k = {k} must be at least lambda+1 = {}",
            lambda + 1
        )));
    }
    let expected = (d - lambda + 1) + k;
    if n != expected {
        return Err(Error::RangeViolation(format!(
            "n = {n} but (d-lambda+1)+k = {expected}"
        )));
    }
    let first: Vec<usize> = (1..=d + 2).collect();
    let sub = config.subset(&first)?;
    // labels 1..=d+2 agree between sub and config
    let (_, t_set) = lemma_partition(&sub, d - lambda + 1)?;
    is_complete_kneser_transversal(config, &t_set, k)
}

/// Finds a hyperplane through d points of the configuration leaving at most
/// k−1 points strictly on each side, scanning d-subsets in lexicographic
/// label order, and returns its transversal certificate.
pub fn balanced_hyperplane(config: &PointConfig, k: usize) -> Result<TransversalCertificate> {
    let d = config.dim();
    let n = config.len();
    if k < 1 {
        return Err(Error::RangeViolation("k must be at least 1".into()));
    }
    if n != d + 2 * (k - 1) {
        return Err(Error::RangeViolation(format!(
            "n = {n} but d + 2(k-1) = {}",
            d + 2 * (k - 1)
        )));
    }
    let mut result: Option<TransversalCertificate> = None;
    each_combination(n, d, &mut |c| {
        let labels: Vec<usize> = c.iter().map(|&i| i + 1).collect();
        let pts: Vec<&[Rational]> = labels.iter().map(|&l| config.point(l)).collect();
        if !affinely_independent(&pts, d) {
            return true;
        }
        // normal and offset: (w, b) spans the nullspace of rows [x_i | -1]
        let rows: Vec<Vec<Rational>> = pts
            .iter()
            .map(|p| {
                let mut r: Vec<Rational> = p.to_vec();
                r.push(-Rational::from_integer(1.into()));
                r
            })
            .collect();
        let basis = Matrix::from_rows(rows).nullspace();
        debug_assert_eq!(basis.len(), 1);
        let wb = &basis[0];
        let mut pos = 0usize;
        let mut neg = 0usize;
        for l in 1..=n {
            if labels.binary_search(&l).is_ok() {
                continue;
            }
            let x = config.point(l);
            let mut v = -wb[d].clone();
            for (i, xi) in x.iter().enumerate() {
                v += &wb[i] * xi;
            }
            match sign_of(&v) {
                1 => pos += 1,
                -1 => neg += 1,
                _ => {}
            }
        }
        if pos <= k - 1 && neg <= k - 1 {
            if let Ok(cert) = is_complete_kneser_transversal(config, &labels, k) {
                if cert.verified {
                    result = Some(cert);
                    return false;
                }
            }
        }
        true
    });
    result.ok_or(Error::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn cfg(dim: usize, raw: &[&[i64]]) -> PointConfig {
        PointConfig::new(
            dim,
            raw.iter()
                .map(|p| p.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn square() -> PointConfig {
        cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    #[test]
    fn segment_crosses_spanned_line() {
        let c = cfg(2, &[&[0, 0], &[2, 0], &[1, -1], &[1, 1]]);
        assert_eq!(conv_aff_intersects(&c, &[1, 2], &[3, 4]), Ok(true));
        assert_eq!(conv_aff_intersects_lp(&c, &[1, 2], &[3, 4]), Ok(true));
        assert_eq!(
            conv_aff_intersects_radon(&c, &[1, 2], &[3, 4]),
            Ok(Some(true))
        );
    }

    #[test]
    fn segment_misses_parallel_line() {
        let c = cfg(2, &[&[0, 0], &[1, 0], &[3, 0], &[3, 1]]);
        // labels 1,2,3 are collinear, so the criterion is inapplicable and
        // the query falls through to the LP
        assert_eq!(conv_aff_intersects(&c, &[1, 2], &[3, 4]), Ok(false));
        assert_eq!(conv_aff_intersects_radon(&c, &[1, 2], &[3, 4]), Ok(None));
    }

    #[test]
    fn pair_validation() {
        let c = square();
        assert_eq!(
            conv_aff_intersects(&c, &[1, 2], &[2, 3]),
            Err(Error::OverlappingSets(2))
        );
        assert_eq!(
            conv_aff_intersects(&c, &[], &[1]),
            Err(Error::EmptySet("S"))
        );
        assert_eq!(
            conv_aff_intersects(&c, &[1], &[]),
            Err(Error::EmptySet("T"))
        );
    }

    #[test]
    fn square_diagonal_is_transversal() {
        let cert = is_complete_kneser_transversal(&square(), &[2, 3], 2).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.failing_kset, None);
    }

    #[test]
    fn affinely_independent_points_admit_no_line_transversal() {
        // 5 affinely independent points in R^4: no T of size 2 works for k=3
        let c = cfg(4, &[
            &[0, 0, 0, 0],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
            &[0, 0, 1, 0],
            &[0, 0, 0, 1],
        ]);
        let cert = is_complete_kneser_transversal(&c, &[1, 2], 3).unwrap();
        assert!(!cert.verified);
        assert_eq!(cert.failing_kset, Some(vec![3, 4, 5]));
    }

    #[test]
    fn transversal_input_errors() {
        let c = square();
        assert_eq!(
            is_complete_kneser_transversal(&c, &[1, 2, 3], 2),
            Err(Error::BadTransversalSize { t_len: 3, d: 2 })
        );
        assert_eq!(
            is_complete_kneser_transversal(&c, &[1], 5),
            Err(Error::KTooLarge { k: 5, n: 4 })
        );
    }

    #[test]
    fn lemma_partition_on_square() {
        let (s, t) = lemma_partition(&square(), 2).unwrap();
        assert_eq!(t, vec![2, 3]);
        assert_eq!(s, vec![1, 4]);
        let (s, t) = lemma_partition(&square(), 3).unwrap();
        assert_eq!(t, vec![1, 2, 3]);
        assert_eq!(s, vec![4]);
        assert_eq!(
            lemma_partition(&square(), 1),
            Err(Error::BadT { t: 1, lo: 2, hi: 3 })
        );
    }

    #[test]
    fn theorem1_construction_on_square() {
        let cert = build_theorem1_transversal(&square(), 2, 1).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.t_indices, vec![2, 3]);
    }

    #[test]
    fn theorem1_rejects_trivial_range() {
        // d=2, λ=2 has α = 1
        let c = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 3]]);
        assert!(matches!(
            build_theorem1_transversal(&c, 4, 2),
            Err(Error::RangeViolation(_))
        ));
    }

    #[test]
    fn balanced_hyperplane_square() {
        let cert = balanced_hyperplane(&square(), 2).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.t_indices, vec![1, 4]);
    }

    #[test]
    fn balanced_hyperplane_hexagon() {
        let c = cfg(2, &[
            &[2, 0],
            &[1, 2],
            &[-1, 2],
            &[-2, 0],
            &[-1, -2],
            &[1, -2],
        ]);
        let cert = balanced_hyperplane(&c, 3).unwrap();
        assert!(cert.verified);
        assert_eq!(cert.t_indices, vec![1, 4]);
    }

    #[test]
    fn moment_curve_has_no_line_transversal_for_pairs_in_r4() {
        // 6 cyclic polytope vertices in R^4: no size-2 subset spans a
        // complete transversal line for k=4
        let c = PointConfig::moment_curve(6, 4, None).unwrap();
        let mut pairs = 0;
        for i in 1..=6 {
            for j in i + 1..=6 {
                let cert = is_complete_kneser_transversal(&c, &[i, j], 4).unwrap();
                assert!(!cert.verified, "T = {{{i}, {j}}} unexpectedly verified");
                pairs += 1;
            }
        }
        assert_eq!(pairs, 15);
    }
}
