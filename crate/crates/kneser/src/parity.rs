//! Parity combinatorics on index sets: odd-difference counts, the extremal
//! function D(k,l), the shifted covering family I(d,lambda,j), and the bound
//! functions z and Z with their inner optimization.

use crate::combi::each_combination;
use crate::error::{Error, Result};
use crate::rational::{rat, ratio, Rational};
use num_traits::ToPrimitive;

/// Number of odd consecutive differences of a strictly increasing index set.
/// Equals the number of maximal same-parity runs minus one.
pub fn od(s: &[usize]) -> Result<usize> {
    check_index_set(s)?;
    Ok(s.windows(2).filter(|w| (w[1] - w[0]) % 2 == 1).count())
}

/// Maximal runs of same-parity adjacent elements, in order.
pub fn parity_blocks(s: &[usize]) -> Result<Vec<Vec<usize>>> {
    check_index_set(s)?;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &x in s {
        match blocks.last_mut() {
            Some(b) if (x - b[b.len() - 1]) % 2 == 0 => b.push(x),
            _ => blocks.push(vec![x]),
        }
    }
    Ok(blocks)
}

fn check_index_set(s: &[usize]) -> Result<()> {
    if s.is_empty() {
        return Err(Error::EmptySet("index set"));
    }
    for (i, &x) in s.iter().enumerate() {
        if x == 0 {
            return Err(Error::BadLabel { label: 0, n: usize::MAX });
        }
        if i > 0 && s[i - 1] >= x {
            return Err(Error::UnsortedIndexSet(x));
        }
    }
    Ok(())
}

/// The largest n for which every k-subset of [n] has at least l odd
/// differences; unbounded when l = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DValue {
    Unbounded,
    Finite(usize),
}

/// Closed form: Unbounded for l = 0; 2k-l-1 for 1 <= l <= k; k-1 for l >= k.
pub fn d_formula(k: usize, l: usize) -> DValue {
    assert!(k >= 1);
    if l == 0 {
        DValue::Unbounded
    } else if l <= k {
        DValue::Finite(2 * k - l - 1)
    } else {
        DValue::Finite(k - 1)
    }
}

/// Brute-force counterpart of `d_formula` for l >= 1: scans n = k..=n_max and
/// returns the largest n where every k-subset of [n] still has od >= l, or
/// k-1 when already n = k fails. The property is monotone in n, so only
/// subsets containing the newest element need testing at each step.
pub fn d_oracle(k: usize, l: usize, n_max: usize) -> usize {
    assert!(k >= 1 && l >= 1 && n_max >= k);
    for n in k..=n_max {
        let mut all_pass = true;
        each_combination(n - 1, k - 1, &mut |c| {
            let mut s: Vec<usize> = c.iter().map(|&i| i + 1).collect();
            s.push(n);
            let odd = s.windows(2).filter(|w| (w[1] - w[0]) % 2 == 1).count();
            if odd < l {
                all_pass = false;
                return false;
            }
            true
        });
        if !all_pass {
            return n - 1;
        }
    }
    n_max
}

/// True iff every subset wants constraining: alpha(d, lambda) >= 1.
pub fn in_trivial_range(d: usize, lambda: usize) -> bool {
    assert!(d >= 1 && lambda >= 1);
    lambda - 1 >= d.div_ceil(2)
}

/// alpha(d, lambda) = (lambda - 1) / ceil(d/2), exactly.
pub fn alpha(d: usize, lambda: usize) -> Rational {
    assert!(d >= lambda && lambda >= 1);
    ratio((lambda - 1) as i64, d.div_ceil(2) as i64)
}

/// beta(lambda, j) = ceil((j + lambda - 1) / 2).
pub fn beta(lambda: usize, j: usize) -> usize {
    assert!(lambda >= 1 && j >= 1);
    (j + lambda - 1).div_ceil(2)
}

fn base_set(d: usize, lambda: usize) -> Result<Vec<usize>> {
    // {1, ..., lambda-1} followed by {lambda, lambda+2, ..., d-lambda+1},
    // defined for odd d; the arithmetic tail is nonempty iff 2*lambda <= d+1
    if 2 * lambda > d + 1 {
        return Err(Error::BadRange(format!(
            "the base covering set needs 2*lambda <= d+1, got d = {d}, lambda = {lambda}"
        )));
    }
    let mut s: Vec<usize> = (1..lambda).collect();
    let mut x = lambda;
    while x <= d - lambda + 1 {
        s.push(x);
        x += 2;
    }
    Ok(s)
}

/// The covering family: 2*ceil(d/2) - lambda + 1 subsets of [d-lambda+2],
/// returned as a list (repeats are possible and meaningful for the counting
/// argument). For odd d these are all cyclic shifts of the base set; for even
/// d each set from d-1 gains the element d-lambda+2 exactly when it contains
/// 1.
pub fn i_sets(d: usize, lambda: usize) -> Result<Vec<Vec<usize>>> {
    if lambda < 1 || d < lambda {
        return Err(Error::BadRange(format!(
            "need d >= lambda >= 1, got d = {d}, lambda = {lambda}"
        )));
    }
    if d % 2 == 1 {
        let m = d - lambda + 2;
        let base = base_set(d, lambda)?;
        let count = 2 * d.div_ceil(2) - lambda + 1;
        debug_assert_eq!(count, m);
        Ok((0..count)
            .map(|i| {
                let mut s: Vec<usize> =
                    base.iter().map(|&x| (x - 1 + i) % m + 1).collect();
                s.sort_unstable();
                s
            })
            .collect())
    } else {
        if d == lambda {
            return Err(Error::BadRange(format!(
                "the covering family is undefined for d = lambda = {d} (trivial range)"
            )));
        }
        let prev = i_sets(d - 1, lambda)?;
        let new_el = d - lambda + 2;
        Ok(prev
            .into_iter()
            .map(|mut s| {
                if s.first() == Some(&1) {
                    s.push(new_el);
                }
                s
            })
            .collect())
    }
}

/// Parameters (k, d, lambda) with d >= lambda >= 1 and k >= lambda.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamTriple {
    pub k: usize,
    pub d: usize,
    pub lambda: usize,
}

impl ParamTriple {
    pub fn new(k: usize, d: usize, lambda: usize) -> Result<Self> {
        if lambda < 1 || d < lambda {
            return Err(Error::RangeViolation(format!(
                "need d >= lambda >= 1, got d = {d}, lambda = {lambda}"
            )));
        }
        if k < lambda {
            return Err(Error::RangeViolation(format!(
                "need k >= lambda, got k = {k}, lambda = {lambda}"
            )));
        }
        Ok(ParamTriple { k, d, lambda })
    }

    fn check_nontrivial(&self) -> Result<()> {
        if in_trivial_range(self.d, self.lambda) {
            return Err(Error::RangeViolation(format!(
                "alpha(d, lambda) >= 1 for d = {}, lambda = {}",
                self.d, self.lambda
            )));
        }
        if self.k < self.lambda + 1 {
            return Err(Error::RangeViolation(format!(
                "need k >= lambda + 1, got k = {}, lambda = {}",
                self.k, self.lambda
            )));
        }
        Ok(())
    }
}

/// Solution of the inner gap optimization: maximize a*j + r over the
/// constraint system below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OptiSolution {
    pub a: usize,
    pub r: usize,
    pub value: usize,
}

/// Closed form of the optimum: a = floor((k-1)/beta), r = (k-1) mod beta.
pub fn opti_solve(k: usize, lambda: usize, j: usize) -> OptiSolution {
    assert!(k >= lambda + 1 && j >= lambda + 1);
    let b = beta(lambda, j);
    let a = (k - 1) / b;
    let r = (k - 1) % b;
    OptiSolution {
        a,
        r,
        value: a * j + r,
    }
}

/// Exhaustive counterpart of `opti_solve`: scans a in 0..=k, r in 0..=j-1
/// under the constraints
///   (1) a >= 0, (2) 0 <= r <= j-1,
///   (3) if r >= beta then beta*(a+1) <= k-1,
///   (4) if r <= beta-1 then (a+1)*r + (beta-r)*a <= k-1,
/// and maximizes a*j + r.
pub fn opti_oracle(k: usize, lambda: usize, j: usize) -> OptiSolution {
    assert!(k >= lambda + 1 && j >= lambda + 1);
    let b = beta(lambda, j);
    let mut best: Option<OptiSolution> = None;
    for a in 0..=k {
        for r in 0..j {
            let ok = if r >= b {
                b * (a + 1) <= k - 1
            } else {
                (a + 1) * r + (b - r) * a <= k - 1
            };
            if !ok {
                continue;
            }
            let value = a * j + r;
            if best.map_or(true, |s| value > s.value) {
                best = Some(OptiSolution { a, r, value });
            }
        }
    }
    best.expect("a = 0, r = 0 is always feasible")
}

/// Lower bound function: (d-lambda+1) plus the best a*j + r over the odd
/// shift counts j in {lambda+1, ..., d-lambda+2} with j + lambda odd.
pub fn z_lower(p: ParamTriple) -> Result<usize> {
    p.check_nontrivial()?;
    let (k, d, lambda) = (p.k, p.d, p.lambda);
    let mut best: Option<usize> = None;
    for j in lambda + 1..=d - lambda + 2 {
        if (j + lambda) % 2 == 0 {
            continue;
        }
        let v = opti_solve(k, lambda, j).value;
        if best.map_or(true, |b| v > b) {
            best = Some(v);
        }
    }
    let best = best.ok_or_else(|| {
        Error::RangeViolation(format!(
            "no admissible j in {}..={}",
            lambda + 1,
            d + 2 - lambda
        ))
    })?;
    Ok((d - lambda + 1) + best)
}

/// Upper bound function: (d-lambda+1) + floor((2 - alpha(d,lambda))*(k-1)),
/// with the product taken in exact rationals before the floor.
pub fn z_upper(p: ParamTriple) -> Result<usize> {
    p.check_nontrivial()?;
    let (k, d, lambda) = (p.k, p.d, p.lambda);
    let factor = rat(2) - alpha(d, lambda);
    let scaled = factor * rat((k - 1) as i64);
    let floored = scaled
        .floor()
        .to_integer()
        .to_usize()
        .expect("non-negative bound");
    Ok((d - lambda + 1) + floored)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn od_counts_odd_differences() {
        assert_eq!(od(&[1, 4, 5, 7, 8, 10, 12]), Ok(3));
        assert_eq!(od(&[5]), Ok(0));
        assert_eq!(od(&[1, 2, 4, 7]), Ok(2));
        assert_eq!(od(&[]), Err(Error::EmptySet("index set")));
        assert_eq!(od(&[3, 3]), Err(Error::UnsortedIndexSet(3)));
    }

    #[test]
    fn blocks_partition_by_parity_runs() {
        assert_eq!(
            parity_blocks(&[1, 4, 5, 7, 8, 10, 12]),
            Ok(vec![vec![1], vec![4], vec![5, 7], vec![8, 10, 12]])
        );
        assert_eq!(parity_blocks(&[2, 4, 6]), Ok(vec![vec![2, 4, 6]]));
        assert_eq!(parity_blocks(&[1, 2]), Ok(vec![vec![1], vec![2]]));
    }

    #[test]
    fn od_plus_one_is_block_count() {
        // all subsets of [8] up to size 4
        for size in 1..=4usize {
            crate::combi::each_combination(8, size, &mut |c| {
                let s: Vec<usize> = c.iter().map(|&i| i + 1).collect();
                assert_eq!(
                    od(&s).unwrap() + 1,
                    parity_blocks(&s).unwrap().len()
                );
                true
            });
        }
    }

    #[test]
    fn od_is_monotone_under_inclusion() {
        crate::combi::each_combination(10, 5, &mut |c| {
            let t: Vec<usize> = c.iter().map(|&i| i + 1).collect();
            let full = od(&t).unwrap();
            crate::combi::each_combination(5, 3, &mut |cc| {
                let s: Vec<usize> = cc.iter().map(|&i| t[i]).collect();
                assert!(od(&s).unwrap() <= full);
                true
            });
            true
        });
    }

    #[test]
    fn d_formula_cases() {
        assert_eq!(d_formula(4, 2), DValue::Finite(5));
        assert_eq!(d_formula(3, 0), DValue::Unbounded);
        assert_eq!(d_formula(2, 5), DValue::Finite(1));
        assert_eq!(d_formula(5, 5), DValue::Finite(4));
    }

    #[test]
    fn d_oracle_matches_examples() {
        assert_eq!(d_oracle(4, 2, 10), 5);
        assert_eq!(d_oracle(2, 5, 6), 1);
        assert_eq!(d_oracle(5, 5, 12), 4);
    }

    #[test]
    fn alpha_and_beta_values() {
        assert_eq!(alpha(4, 3), rat(1));
        assert_eq!(alpha(5, 2), ratio(1, 3));
        assert_eq!(alpha(9, 1), rat(0));
        assert_eq!(beta(2, 3), 2);
        assert_eq!(beta(2, 5), 3);
        assert_eq!(beta(3, 3), 3);
    }

    #[test]
    fn covering_family_d5_lambda2() {
        let fam = i_sets(5, 2).unwrap();
        assert_eq!(
            fam,
            vec![
                vec![1, 2, 4],
                vec![2, 3, 5],
                vec![1, 3, 4],
                vec![2, 4, 5],
                vec![1, 3, 5]
            ]
        );
        // each element of [5] lies in exactly ceil(5/2) = 3 of the sets
        for x in 1..=5usize {
            let cnt = fam.iter().filter(|s| s.contains(&x)).count();
            assert_eq!(cnt, 3);
        }
        for s in &fam {
            assert!(od(s).unwrap() <= 1);
        }
    }

    #[test]
    fn covering_family_even_dimension() {
        assert_eq!(
            i_sets(4, 1).unwrap(),
            vec![vec![1, 3, 5], vec![2, 4], vec![1, 3, 5], vec![2, 4]]
        );
        assert_eq!(i_sets(2, 1).unwrap(), vec![vec![1, 3], vec![2]]);
    }

    #[test]
    fn covering_family_counts_and_ranges() {
        for d in 1..=12usize {
            for lambda in 1..=d {
                if in_trivial_range(d, lambda) {
                    continue;
                }
                let fam = i_sets(d, lambda).unwrap();
                assert_eq!(fam.len(), 2 * d.div_ceil(2) - lambda + 1);
                if d % 2 == 1 {
                    assert_eq!(fam[0].len(), (d + 1) / 2);
                }
                let m = d - lambda + 2;
                let mut coverage = vec![0usize; m + 1];
                for s in &fam {
                    assert!(od(s).unwrap() <= lambda - 1);
                    for &x in s {
                        assert!(x >= 1 && x <= m);
                        coverage[x] += 1;
                    }
                }
                for x in 1..=m {
                    assert_eq!(coverage[x], d.div_ceil(2), "d={d} lambda={lambda} x={x}");
                }
            }
        }
    }

    #[test]
    fn opti_closed_form_examples() {
        assert_eq!(
            opti_solve(3, 2, 3),
            OptiSolution { a: 1, r: 0, value: 3 }
        );
        assert_eq!(
            opti_solve(5, 2, 5),
            OptiSolution { a: 1, r: 1, value: 6 }
        );
        // small k: a = 0 and r = k-1
        assert_eq!(
            opti_solve(3, 2, 5),
            OptiSolution { a: 0, r: 2, value: 2 }
        );
    }

    #[test]
    fn opti_oracle_agrees_on_grid() {
        for lambda in 1..=4usize {
            for k in lambda + 1..=10 {
                for j in lambda + 1..=10 {
                    let solved = opti_solve(k, lambda, j);
                    let scanned = opti_oracle(k, lambda, j);
                    assert_eq!(solved, scanned, "k={k} lambda={lambda} j={j}");
                    assert!(solved.r <= beta(lambda, j) - 1);
                }
            }
        }
    }

    #[test]
    fn z_values() {
        let p = |k, d, lambda| ParamTriple::new(k, d, lambda).unwrap();
        assert_eq!(z_lower(p(3, 5, 2)), Ok(7));
        assert_eq!(z_upper(p(3, 5, 2)), Ok(7));
        assert_eq!(z_lower(p(4, 5, 2)), Ok(9));
        assert_eq!(z_upper(p(2, 3, 1)), Ok(5));
        assert_eq!(z_upper(p(10, 4, 2)), Ok(16));
        assert_eq!(z_lower(p(3, 7, 2)), Ok(9));
        assert_eq!(z_lower(p(10, 5, 2)), Ok(19));
        assert_eq!(z_upper(p(10, 5, 2)), Ok(19));
        assert_eq!(z_lower(p(20, 5, 2)), Ok(35));
        assert_eq!(z_upper(p(20, 5, 2)), Ok(35));
        assert_eq!(z_lower(p(40, 5, 2)), Ok(69));
        assert_eq!(z_upper(p(40, 5, 2)), Ok(69));
        assert_eq!(z_lower(p(6, 6, 1)), Ok(16));
        assert_eq!(z_upper(p(6, 6, 1)), Ok(16));
    }

    #[test]
    fn z_bounds_ordered_on_grid() {
        for d in 1..=12usize {
            for lambda in 1..=d {
                if in_trivial_range(d, lambda) {
                    continue;
                }
                for k in lambda + 1..=40 {
                    let p = ParamTriple::new(k, d, lambda).unwrap();
                    let lo = z_lower(p).unwrap();
                    let hi = z_upper(p).unwrap();
                    assert!(lo <= hi, "z > Z at k={k} d={d} lambda={lambda}");
                }
            }
        }
    }

    #[test]
    fn trivial_range_rejected() {
        let p = ParamTriple::new(5, 4, 3).unwrap();
        assert!(matches!(z_lower(p), Err(Error::RangeViolation(_))));
        assert!(matches!(z_upper(p), Err(Error::RangeViolation(_))));
        let q = ParamTriple::new(2, 5, 2).unwrap();
        assert!(matches!(z_lower(q), Err(Error::RangeViolation(_))));
    }
}
