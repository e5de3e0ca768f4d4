//! Exact linear feasibility via a phase-1 simplex over the rationals.
//!
//! Bland's rule (smallest-index entering variable, ratio ties broken by the
//! smallest basic variable index) guarantees termination, and exact
//! arithmetic makes the verdict certified rather than numerical.

use crate::rational::Rational;
use num_traits::{One, Zero};

/// Decides whether {x : A x = b, x >= 0} is nonempty.
///
/// Every row of `a` must have the same length; `b` must match the row count.
pub fn feasible(a: &[Vec<Rational>], b: &[Rational]) -> bool {
    let m = a.len();
    assert_eq!(b.len(), m);
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    let width = n + m + 1; // structural vars, artificials, rhs
    let rhs = n + m;

    // Tableau with one artificial per row; rows flipped so rhs >= 0.
    let mut t: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        assert_eq!(row.len(), n, "ragged constraint row");
        let flip = b[i] < Rational::zero();
        let mut r: Vec<Rational> = Vec::with_capacity(width);
        r.extend(row.iter().map(|x| if flip { -x } else { x.clone() }));
        for j in 0..m {
            r.push(if j == i {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        r.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced-cost row for minimizing the artificial sum. cost[rhs] holds the
    // negated objective value, so feasibility means cost[rhs] == 0 at the end.
    let mut cost = vec![Rational::zero(); width];
    for j in 0..width {
        let mut s = Rational::zero();
        for row in &t {
            s += &row[j];
        }
        cost[j] = if j >= n && j < rhs {
            Rational::one() - s
        } else {
            -s
        };
    }

    loop {
        // Bland: smallest-index column with negative reduced cost.
        let Some(e) = (0..rhs).find(|&j| cost[j] < Rational::zero()) else {
            break;
        };
        let mut leave: Option<usize> = None;
        let mut best: Option<Rational> = None;
        for i in 0..m {
            if t[i][e] <= Rational::zero() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][e];
            let better = match &best {
                None => true,
                Some(b) => ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()]),
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        // The phase-1 objective is bounded below by zero, so an improving
        // column always admits a ratio test.
        let l = leave.expect("unbounded phase-1 objective");

        let piv = t[l][e].clone();
        for j in 0..width {
            t[l][j] = &t[l][j] / &piv;
        }
        for i in 0..m {
            if i == l || t[i][e].is_zero() {
                continue;
            }
            let f = t[i][e].clone();
            for j in 0..width {
                t[i][j] = &t[i][j] - &f * &t[l][j];
            }
        }
        if !cost[e].is_zero() {
            let f = cost[e].clone();
            for j in 0..width {
                cost[j] = &cost[j] - &f * &t[l][j];
            }
        }
        basis[l] = e;
    }

    cost[rhs].is_zero()
}

/// Encodes "conv(S) meets the affine (resp. convex) hull of T" as equality
/// feasibility and decides it exactly.
///
/// Variables are barycentric weights mu over `s_pts` (nonnegative, sum 1) and
/// weights nu over `t_pts` (sum 1; nonnegative only when `t_convex`, else
/// free via a nu+ - nu- split).
pub fn hulls_meet(
    s_pts: &[&[Rational]],
    t_pts: &[&[Rational]],
    dim: usize,
    t_convex: bool,
) -> bool {
    let s = s_pts.len();
    let t = t_pts.len();
    assert!(s > 0 && t > 0);
    let nv = if t_convex { s + t } else { s + 2 * t };
    let mut a = vec![vec![Rational::zero(); nv]; dim + 2];
    let mut b = vec![Rational::zero(); dim + 2];
    for c in 0..dim {
        for (i, p) in s_pts.iter().enumerate() {
            a[c][i] = p[c].clone();
        }
        for (j, q) in t_pts.iter().enumerate() {
            a[c][s + j] = -q[c].clone();
            if !t_convex {
                a[c][s + t + j] = q[c].clone();
            }
        }
    }
    for i in 0..s {
        a[dim][i] = Rational::one();
    }
    for j in 0..t {
        a[dim + 1][s + j] = Rational::one();
        if !t_convex {
            a[dim + 1][s + t + j] = -Rational::one();
        }
    }
    b[dim] = Rational::one();
    b[dim + 1] = Rational::one();
    feasible(&a, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn pts(raw: &[&[i64]]) -> Vec<Vec<Rational>> {
        raw.iter()
            .map(|p| p.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    fn refs(v: &[Vec<Rational>]) -> Vec<&[Rational]> {
        v.iter().map(Vec::as_slice).collect()
    }

    #[test]
    fn plain_feasibility() {
        // x + y = 2, x - y = 0 with x, y >= 0: feasible at (1, 1)
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(2), rat(0)];
        assert!(feasible(&a, &b));
        // x + y = -1 with x, y >= 0: infeasible
        let a = vec![vec![rat(1), rat(1)]];
        assert!(!feasible(&a, &vec![rat(-1)]));
        // x = 1, x = 2: inconsistent
        let a = vec![vec![rat(1)], vec![rat(1)]];
        assert!(!feasible(&a, &vec![rat(1), rat(2)]));
    }

    #[test]
    fn segment_meets_line() {
        // segment (0,-1)..(0,1) meets the x-axis spanned affinely by (1,0),(2,0)
        let s = pts(&[&[0, -1], &[0, 1]]);
        let t = pts(&[&[1, 0], &[2, 0]]);
        assert!(hulls_meet(&refs(&s), &refs(&t), 2, false));
        // but not the segment between those two points
        assert!(!hulls_meet(&refs(&s), &refs(&t), 2, true));
    }

    #[test]
    fn parallel_chords_miss() {
        // chords t=1..5 and t=2..4 of the parabola are parallel
        let s = pts(&[&[1, 1], &[5, 25]]);
        let t = pts(&[&[2, 4], &[4, 16]]);
        assert!(!hulls_meet(&refs(&s), &refs(&t), 2, false));
    }

    #[test]
    fn point_inside_triangle() {
        let s = pts(&[&[1, 1]]);
        let t = pts(&[&[0, 0], &[4, 0], &[0, 4]]);
        assert!(hulls_meet(&refs(&s), &refs(&t), 2, true));
        let outside = pts(&[&[5, 5]]);
        assert!(!hulls_meet(&refs(&outside), &refs(&t), 2, true));
    }
}
