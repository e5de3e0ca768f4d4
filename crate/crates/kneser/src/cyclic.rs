//! Cyclic polytopes as alternating oriented matroids: circuit signs, the
//! combinatorial transversal test on vertex-gap compositions, the ζ(k,d,λ)
//! search with cross-validating backends, and the balanced-gap construction.

use crate::combi::{each_combination, each_composition_desc};
use crate::config::PointConfig;
use crate::error::{Error, Result};
use crate::parity::{in_trivial_range, z_lower, z_upper, opti_solve, ParamTriple};
use crate::transversal::is_complete_kneser_transversal;

/// Default vertex-count ceiling for the combinatorial sign oracle.
pub const DEFAULT_SIGN_ORACLE_CAP: usize = 24;
/// Default vertex-count ceiling for the exact-geometry cross-check.
pub const DEFAULT_GEOMETRIC_ORACLE_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// Minimal dependence of d+2 moment-curve points: signs strictly alternate
/// along the sorted support, starting with +.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingCircuit {
    pub support: Vec<usize>,
    pub signs: Vec<Sign>,
}

pub fn am_circuit(support: &[usize], d: usize) -> Result<AlternatingCircuit> {
    if support.len() != d + 2 {
        return Err(Error::BadSupportSize {
            got: support.len(),
            expected: d + 2,
        });
    }
    for (i, &x) in support.iter().enumerate() {
        if x == 0 {
            return Err(Error::BadLabel {
                label: 0,
                n: usize::MAX,
            });
        }
        if i > 0 && support[i - 1] >= x {
            return Err(Error::UnsortedIndexSet(x));
        }
    }
    let signs = (0..support.len())
        .map(|i| if i % 2 == 0 { Sign::Plus } else { Sign::Minus })
        .collect();
    Ok(AlternatingCircuit {
        support: support.to_vec(),
        signs,
    })
}

/// Sizes of the vertex runs A_1, ..., A_{d-λ+2} between consecutive
/// transversal vertices of a cyclic polytope: vertex w_i sits directly after
/// the run A_i, so the vertex count is (d-λ+1) + Σ gaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapComposition {
    gaps: Vec<usize>,
    d: usize,
    lambda: usize,
}

impl GapComposition {
    pub fn new(d: usize, lambda: usize, gaps: Vec<usize>) -> Result<Self> {
        if lambda == 0 {
            return Err(Error::RangeViolation(
                "lambda = 0 leaves nothing to test: the whole space is a transversal".into(),
            ));
        }
        if d < lambda {
            return Err(Error::RangeViolation(format!(
                "need d >= lambda, got d = {d}, lambda = {lambda}"
            )));
        }
        let m = d - lambda + 2;
        if gaps.len() != m {
            return Err(Error::DimensionMismatch(format!(
                "expected d-lambda+2 = {m} gaps, got {}",
                gaps.len()
            )));
        }
        Ok(GapComposition { gaps, d, lambda })
    }

    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn total(&self) -> usize {
        self.gaps.iter().sum()
    }

    /// Implied vertex count n.
    pub fn n(&self) -> usize {
        (self.d - self.lambda + 1) + self.total()
    }

    /// 1-based vertex positions of the d-λ+1 transversal vertices.
    pub fn transversal_positions(&self) -> Vec<usize> {
        let mut acc = 0usize;
        (0..self.d - self.lambda + 1)
            .map(|i| {
                acc += self.gaps[i];
                acc + i + 1
            })
            .collect()
    }
}

/// All gap compositions for (d, lambda) with the given total, in descending
/// lexicographic order.
pub fn all_compositions(d: usize, lambda: usize, total: usize) -> Result<Vec<GapComposition>> {
    let probe = GapComposition::new(d, lambda, vec![0; d + 2 - lambda])?;
    let m = probe.gaps.len();
    let count = binomial((total + m - 1) as u128, (m - 1) as u128);
    if count > 20_000_000 {
        return Err(Error::GridTooLarge {
            cells: count.min(u64::MAX as u128) as u64,
            limit: 20_000_000,
        });
    }
    let mut out = Vec::new();
    each_composition_desc(total, m, &mut |g| {
        out.push(GapComposition {
            gaps: g.to_vec(),
            d,
            lambda,
        });
        true
    });
    Ok(out)
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Maximal index sets S ⊆ [m] with od(S) ≤ lambda-1, as bit masks. Since od
/// is monotone under inclusion, maximality only needs single-element
/// extensions checked.
fn constraint_masks(m: usize, lambda: usize) -> Result<Vec<u32>> {
    if m > 20 {
        return Err(Error::RangeViolation(format!(
            "gap criterion enumeration capped at d-lambda+2 <= 20, got {m}"
        )));
    }
    let qualifies = |mask: u32| -> bool { mask != 0 && mask_od(mask) <= lambda - 1 };
    let mut out = Vec::new();
    for mask in 1u32..1 << m {
        if !qualifies(mask) {
            continue;
        }
        let extendable = (0..m).any(|b| mask & (1 << b) == 0 && qualifies(mask | (1 << b)));
        if !extendable {
            out.push(mask);
        }
    }
    Ok(out)
}

/// Odd consecutive differences between set bit positions.
fn mask_od(mask: u32) -> usize {
    let mut prev: Option<usize> = None;
    let mut odd = 0usize;
    for b in 0..32 {
        if mask & (1 << b) == 0 {
            continue;
        }
        if let Some(p) = prev {
            if (b - p) % 2 == 1 {
                odd += 1;
            }
        }
        prev = Some(b);
    }
    odd
}

fn masked_sum(gaps: &[usize], mask: u32) -> usize {
    gaps.iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, g)| g)
        .sum()
}

/// Gap-sum criterion: the composition admits a complete transversal iff
/// every index set with at most lambda-1 odd differences collects at most
/// k-1 vertices. Necessity is the covering-family counting bound; for
/// sufficiency, a k-set within the constraint budget must spread over
/// lambda+1 runs of alternating parity, which forces a one-signed circuit
/// restriction.
pub fn gap_transversal_test(comp: &GapComposition, k: usize) -> Result<bool> {
    if k < comp.lambda + 1 {
        return Err(Error::RangeViolation(format!(
            "need k >= lambda+1, got k = {k}, lambda = {}",
            comp.lambda
        )));
    }
    let masks = constraint_masks(comp.gaps.len(), comp.lambda)?;
    Ok(masks.iter().all(|&m| masked_sum(&comp.gaps, m) <= k - 1))
}

/// Ground-truth combinatorial oracle: enumerate every k-set of vertices
/// disjoint from the transversal positions and accept iff some
/// (lambda+1)-subset is one-signed in the alternating circuit of its union
/// with T. Exponential; guarded by `cap` on the vertex count.
pub fn sign_transversal_test(comp: &GapComposition, k: usize, cap: usize) -> Result<bool> {
    if k < comp.lambda + 1 {
        return Err(Error::RangeViolation(format!(
            "need k >= lambda+1, got k = {k}, lambda = {}",
            comp.lambda
        )));
    }
    let n = comp.n();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let tpos = comp.transversal_positions();
    let free: Vec<usize> = (1..=n).filter(|v| tpos.binary_search(v).is_err()).collect();
    let lambda = comp.lambda;
    let d = comp.d;
    let mut all_ok = true;
    each_combination(free.len(), k, &mut |c| {
        let kset: Vec<usize> = c.iter().map(|&i| free[i]).collect();
        let mut accepted = false;
        each_combination(k, lambda + 1, &mut |cc| {
            let sub: Vec<usize> = cc.iter().map(|&i| kset[i]).collect();
            let mut union: Vec<usize> = tpos.iter().chain(&sub).copied().collect();
            union.sort_unstable();
            let circuit = am_circuit(&union, d).expect("|T| + lambda + 1 = d + 2");
            let mut signs = sub.iter().map(|v| {
                let pos = circuit.support.binary_search(v).expect("v in union");
                circuit.signs[pos]
            });
            let first = signs.next().expect("lambda + 1 >= 1");
            if signs.all(|s| s == first) {
                accepted = true;
                return false;
            }
            true
        });
        if accepted {
            true
        } else {
            all_ok = false;
            false
        }
    });
    Ok(all_ok)
}

/// Exact-geometry cross-check: realize the vertices as moment-curve points
/// and run the full geometric transversal test.
pub fn geometric_transversal_test(comp: &GapComposition, k: usize, cap: usize) -> Result<bool> {
    let n = comp.n();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let cfg = PointConfig::moment_curve(n, comp.d, None)?;
    let cert = is_complete_kneser_transversal(&cfg, &comp.transversal_positions(), k)?;
    Ok(cert.verified)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZetaMethod {
    GapOptimizer,
    SignOracle,
    BothAgree,
}

impl ZetaMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZetaMethod::GapOptimizer => "gap-optimizer",
            ZetaMethod::SignOracle => "sign-oracle",
            ZetaMethod::BothAgree => "both-agree",
        }
    }
}

impl std::str::FromStr for ZetaMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gap-optimizer" => Ok(ZetaMethod::GapOptimizer),
            "sign-oracle" => Ok(ZetaMethod::SignOracle),
            "both-agree" => Ok(ZetaMethod::BothAgree),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ZetaResult {
    pub params: ParamTriple,
    pub value: usize,
    pub witness: GapComposition,
    pub method: ZetaMethod,
    pub z_lower: usize,
    pub z_upper: usize,
    /// Compositions examined across the whole search.
    pub tested: u64,
}

impl ZetaResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k": self.params.k,
            "d": self.params.d,
            "lambda": self.params.lambda,
            "zeta": self.value,
            "witness_gaps": self.witness.gaps(),
            "method": self.method.as_str(),
            "z_lower": self.z_lower,
            "z_upper": self.z_upper,
        })
    }
}

/// First passing composition at the given total in descending lexicographic
/// order, found by depth-first search that tracks the remaining budget of
/// every constraint set and prunes branches that either overrun a budget or
/// cannot place the remaining vertices.
fn gap_first_passing(
    masks: &[u32],
    m: usize,
    budget: usize,
    total: usize,
    tested: &mut u64,
) -> Option<Vec<usize>> {
    fn rec(
        masks: &[u32],
        caps: &mut Vec<usize>,
        gaps: &mut Vec<usize>,
        pos: usize,
        rem: usize,
        tested: &mut u64,
    ) -> bool {
        let m = gaps.len();
        if pos == m {
            *tested += 1;
            return rem == 0;
        }
        // tightest remaining budget among constraints covering this run
        let max_here = masks
            .iter()
            .zip(caps.iter())
            .filter(|(mk, _)| *mk & (1 << pos) != 0)
            .map(|(_, c)| *c)
            .min()
            .unwrap_or(rem);
        // capacity of the runs after this one, against current budgets
        let mut future = 0usize;
        for p in pos + 1..m {
            future += masks
                .iter()
                .zip(caps.iter())
                .filter(|(mk, _)| *mk & (1 << p) != 0)
                .map(|(_, c)| *c)
                .min()
                .unwrap_or(rem);
        }
        let hi = max_here.min(rem);
        for g in (0..=hi).rev() {
            if rem - g > future {
                break; // even smaller g leaves more to place
            }
            gaps[pos] = g;
            for (i, mk) in masks.iter().enumerate() {
                if mk & (1 << pos) != 0 {
                    caps[i] -= g;
                }
            }
            if rec(masks, caps, gaps, pos + 1, rem - g, tested) {
                return true;
            }
            for (i, mk) in masks.iter().enumerate() {
                if mk & (1 << pos) != 0 {
                    caps[i] += g;
                }
            }
        }
        gaps[pos] = 0;
        false
    }
    let mut caps = vec![budget; masks.len()];
    let mut gaps = vec![0usize; m];
    if rec(masks, &mut caps, &mut gaps, 0, total, tested) {
        Some(gaps)
    } else {
        None
    }
}

/// First passing composition in descending lexicographic order at the given
/// total, per the requested backend. `tested` counts compositions examined.
fn first_passing(
    p: ParamTriple,
    total: usize,
    method: ZetaMethod,
    oracle_cap: usize,
    tested: &mut u64,
) -> Result<Option<GapComposition>> {
    let (d, lambda, k) = (p.d, p.lambda, p.k);
    let m = d - lambda + 2;
    match method {
        ZetaMethod::GapOptimizer => {
            let masks = constraint_masks(m, lambda)?;
            Ok(gap_first_passing(&masks, m, k - 1, total, tested)
                .map(|gaps| GapComposition { gaps, d, lambda }))
        }
        ZetaMethod::SignOracle => {
            let mut found: Option<GapComposition> = None;
            let mut err: Option<Error> = None;
            each_composition_desc(total, m, &mut |g| {
                let comp = GapComposition {
                    gaps: g.to_vec(),
                    d,
                    lambda,
                };
                *tested += 1;
                match sign_transversal_test(&comp, k, oracle_cap) {
                    Ok(true) => {
                        found = Some(comp);
                        false
                    }
                    Ok(false) => true,
                    Err(e) => {
                        err = Some(e);
                        false
                    }
                }
            });
            match err {
                Some(e) => Err(e),
                None => Ok(found),
            }
        }
        ZetaMethod::BothAgree => {
            let mut found: Option<GapComposition> = None;
            let mut err: Option<Error> = None;
            each_composition_desc(total, m, &mut |g| {
                let comp = GapComposition {
                    gaps: g.to_vec(),
                    d,
                    lambda,
                };
                *tested += 1;
                let by_gaps = match gap_transversal_test(&comp, k) {
                    Ok(v) => v,
                    Err(e) => {
                        err = Some(e);
                        return false;
                    }
                };
                let by_signs = match sign_transversal_test(&comp, k, oracle_cap) {
                    Ok(v) => v,
                    Err(e) => {
                        err = Some(e);
                        return false;
                    }
                };
                if by_gaps != by_signs {
                    err = Some(Error::OracleDisagreement(format!(
                        "gaps {:?} at k = {k}: criterion says {by_gaps}, sign oracle says {by_signs}",
                        comp.gaps()
                    )));
                    return false;
                }
                if by_gaps {
                    found = Some(comp);
                    false
                } else {
                    true
                }
            });
            match err {
                Some(e) => Err(e),
                None => Ok(found),
            }
        }
    }
}

/// ζ(k,d,λ) for the non-trivial range: the largest vertex count n admitting
/// a passing gap composition, scanned for every n from z_lower(p) through
/// z_upper(p)+1. The scan verifies the full sandwich: n = z_lower must pass,
/// feasibility must be a prefix in n, n = z_upper+1 must fail, and the
/// result must land inside [z_lower, z_upper].
pub fn zeta(p: ParamTriple, method: ZetaMethod, oracle_cap: usize) -> Result<ZetaResult> {
    let lo = z_lower(p)?;
    let hi = z_upper(p)?;
    let base = p.d - p.lambda + 1;
    let mut tested = 0u64;
    let mut best: Option<(usize, GapComposition)> = None;
    let mut failed_below: Option<usize> = None;
    for n in lo..=hi + 1 {
        let found = first_passing(p, n - base, method, oracle_cap, &mut tested)?;
        match found {
            Some(comp) => {
                if let Some(f) = failed_below {
                    return Err(Error::Internal(format!(
                        "feasibility not monotone: n = {n} passes but n = {f} failed"
                    )));
                }
                best = Some((n, comp));
            }
            None => {
                if failed_below.is_none() {
                    failed_below = Some(n);
                }
            }
        }
    }
    let Some((value, witness)) = best else {
        return Err(Error::BoundViolation(format!(
            "no composition passes at n = {lo} = z_lower"
        )));
    };
    if value > hi {
        return Err(Error::BoundViolation(format!(
            "search reached n = {value} beyond z_upper = {hi}"
        )));
    }
    Ok(ZetaResult {
        params: p,
        value,
        witness,
        method,
        z_lower: lo,
        z_upper: hi,
        tested,
    })
}

/// ζ in the trivial range α(d,λ) ≥ 1: exactly d-λ+k.
pub fn zeta_trivial(p: ParamTriple) -> Result<usize> {
    if !in_trivial_range(p.d, p.lambda) {
        return Err(Error::RangeViolation(format!(
            "alpha(d, lambda) < 1 for d = {}, lambda = {}; use the search",
            p.d, p.lambda
        )));
    }
    if p.k < p.lambda + 1 {
        return Err(Error::RangeViolation(format!(
            "need k >= lambda+1, got k = {}, lambda = {}",
            p.k, p.lambda
        )));
    }
    Ok(p.d - p.lambda + p.k)
}

/// Trivial-range value together with a checked witness: some composition
/// passes at n = d-λ+k and every composition fails at n = d-λ+k+1.
pub fn zeta_trivial_with_witness(p: ParamTriple) -> Result<(usize, GapComposition)> {
    let value = zeta_trivial(p)?;
    let base = p.d - p.lambda + 1;
    let m = p.d - p.lambda + 2;
    let mut witness: Option<GapComposition> = None;
    let mut err: Option<Error> = None;
    each_composition_desc(value - base, m, &mut |g| {
        let comp = GapComposition {
            gaps: g.to_vec(),
            d: p.d,
            lambda: p.lambda,
        };
        match gap_transversal_test(&comp, p.k) {
            Ok(true) => {
                witness = Some(comp);
                false
            }
            Ok(false) => true,
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let Some(witness) = witness else {
        return Err(Error::BoundViolation(format!(
            "no composition passes at n = {value} in the trivial range"
        )));
    };
    let mut beyond_ok = true;
    each_composition_desc(value + 1 - base, m, &mut |g| {
        let comp = GapComposition {
            gaps: g.to_vec(),
            d: p.d,
            lambda: p.lambda,
        };
        match gap_transversal_test(&comp, p.k) {
            Ok(false) => true,
            Ok(true) => {
                beyond_ok = false;
                false
            }
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    if !beyond_ok {
        return Err(Error::BoundViolation(format!(
            "a composition passes at n = {} in the trivial range",
            value + 1
        )));
    }
    Ok((value, witness))
}

/// Balanced-gap witness: r runs of a+1 vertices, then j-r runs of a, then
/// zeros, with (a, r) from the inner optimization. Passes the gap test by
/// construction.
pub fn construct_transversal(p: ParamTriple, j: usize) -> Result<GapComposition> {
    let (k, d, lambda) = (p.k, p.d, p.lambda);
    if in_trivial_range(d, lambda) {
        return Err(Error::RangeViolation(format!(
            "alpha(d, lambda) >= 1 for d = {d}, lambda = {lambda}"
        )));
    }
    if k < lambda + 1 {
        return Err(Error::RangeViolation(format!(
            "need k >= lambda+1, got k = {k}, lambda = {lambda}"
        )));
    }
    let (jlo, jhi) = (lambda + 1, d - lambda + 2);
    if j < jlo || j > jhi {
        return Err(Error::BadJ {
            j,
            lo: jlo,
            hi: jhi,
        });
    }
    let sol = opti_solve(k, lambda, j);
    let m = d - lambda + 2;
    let mut gaps = vec![0usize; m];
    for (i, g) in gaps.iter_mut().enumerate().take(j) {
        *g = if i < sol.r { sol.a + 1 } else { sol.a };
    }
    let comp = GapComposition { gaps, d, lambda };
    if !gap_transversal_test(&comp, k)? {
        return Err(Error::Internal(
            "balanced construction failed its own test".into(),
        ));
    }
    Ok(comp)
}

/// One row of the ζ/k trend table, all entries exact.
#[derive(Clone, Debug)]
pub struct TrendRow {
    pub k: usize,
    pub zeta: usize,
    pub zeta_over_k: crate::rational::Rational,
    pub z_over_k: crate::rational::Rational,
    pub z_upper_over_k: crate::rational::Rational,
    pub limit: crate::rational::Rational,
}

/// ζ/k rows for increasing k against the limit 2 - α(d,λ), via the gap
/// optimizer.
pub fn asymptotic_trend(d: usize, lambda: usize, k_list: &[usize]) -> Result<Vec<TrendRow>> {
    use crate::parity::alpha;
    use crate::rational::rat;
    let mut rows = Vec::with_capacity(k_list.len());
    for &k in k_list {
        let p = ParamTriple::new(k, d, lambda)?;
        let res = zeta(p, ZetaMethod::GapOptimizer, DEFAULT_SIGN_ORACLE_CAP)?;
        let kq = rat(k as i64);
        rows.push(TrendRow {
            k,
            zeta: res.value,
            zeta_over_k: rat(res.value as i64) / &kq,
            z_over_k: rat(res.z_lower as i64) / &kq,
            z_upper_over_k: rat(res.z_upper as i64) / &kq,
            limit: rat(2) - alpha(d, lambda),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radon::radon_partition_of;

    fn comp(d: usize, lambda: usize, gaps: &[usize]) -> GapComposition {
        GapComposition::new(d, lambda, gaps.to_vec()).unwrap()
    }

    fn p(k: usize, d: usize, lambda: usize) -> ParamTriple {
        ParamTriple::new(k, d, lambda).unwrap()
    }

    #[test]
    fn circuits_alternate() {
        let c = am_circuit(&[1, 2, 3, 4, 5], 3).unwrap();
        assert_eq!(
            c.signs,
            vec![Sign::Plus, Sign::Minus, Sign::Plus, Sign::Minus, Sign::Plus]
        );
        let c = am_circuit(&[2, 5, 9], 1).unwrap();
        assert_eq!(c.signs, vec![Sign::Plus, Sign::Minus, Sign::Plus]);
        assert_eq!(
            am_circuit(&[1, 2, 3], 3),
            Err(Error::BadSupportSize { got: 3, expected: 5 })
        );
    }

    #[test]
    fn circuit_signs_match_geometry() {
        // every size-(d+2) support of moment-curve points splits by sign
        // exactly as the geometric Radon partition does
        for d in 1..=4usize {
            let n = d + 4;
            let cfg = PointConfig::moment_curve(n, d, None).unwrap();
            each_combination(n, d + 2, &mut |c| {
                let support: Vec<usize> = c.iter().map(|&i| i + 1).collect();
                let circuit = am_circuit(&support, d).unwrap();
                let part = radon_partition_of(&cfg, &support).unwrap();
                let plus: Vec<usize> = circuit
                    .support
                    .iter()
                    .zip(&circuit.signs)
                    .filter(|(_, s)| **s == Sign::Plus)
                    .map(|(v, _)| *v)
                    .collect();
                let minus: Vec<usize> = circuit
                    .support
                    .iter()
                    .zip(&circuit.signs)
                    .filter(|(_, s)| **s == Sign::Minus)
                    .map(|(v, _)| *v)
                    .collect();
                assert!(
                    (part.positive == plus && part.negative == minus)
                        || (part.positive == minus && part.negative == plus),
                    "support {support:?} in dim {d}"
                );
                true
            });
        }
    }

    #[test]
    fn transversal_positions_interleave() {
        let c = comp(5, 2, &[1, 1, 1, 0, 0]);
        assert_eq!(c.n(), 7);
        assert_eq!(c.transversal_positions(), vec![2, 4, 6, 7]);
        let c = comp(2, 1, &[1, 1, 1]);
        assert_eq!(c.n(), 5);
        assert_eq!(c.transversal_positions(), vec![2, 4]);
    }

    #[test]
    fn lambda_zero_rejected() {
        assert!(matches!(
            GapComposition::new(3, 0, vec![0; 5]),
            Err(Error::RangeViolation(_))
        ));
    }

    #[test]
    fn gap_test_examples() {
        assert_eq!(gap_transversal_test(&comp(5, 2, &[1, 1, 1, 0, 0]), 3), Ok(true));
        // a k-set inside a single run is never cut
        assert_eq!(gap_transversal_test(&comp(5, 2, &[3, 0, 0, 0, 0]), 3), Ok(false));
        // no line transversal for 6 vertices in dimension 4: every split of
        // 4 vertices over the 3 runs fails
        for c in all_compositions(4, 3, 4).unwrap() {
            assert_eq!(gap_transversal_test(&c, 4), Ok(false));
        }
        assert_eq!(gap_transversal_test(&comp(4, 2, &[2, 1, 1, 0]), 4), Ok(true));
    }

    #[test]
    fn sign_test_examples() {
        let cap = DEFAULT_SIGN_ORACLE_CAP;
        assert_eq!(
            sign_transversal_test(&comp(5, 2, &[1, 1, 1, 0, 0]), 3, cap),
            Ok(true)
        );
        // chords t=1..5 and t=2..4 of the parabola are parallel, so the pair
        // {1, 5} misses the line through the two transversal vertices
        assert_eq!(sign_transversal_test(&comp(2, 1, &[1, 1, 1]), 2, cap), Ok(false));
        assert_eq!(
            sign_transversal_test(&comp(2, 1, &[9, 9, 9]), 2, 10),
            Err(Error::OracleCapExceeded { n: 29, cap: 10 })
        );
    }

    #[test]
    fn oracle_agreement_small_grid() {
        for d in 1..=4usize {
            for lambda in 1..=d {
                if in_trivial_range(d, lambda) {
                    continue;
                }
                for k in lambda + 1..=4 {
                    let m = d - lambda + 2;
                    for total in 0..=(10 - (d - lambda + 1)).min(6) {
                        each_composition_desc(total, m, &mut |g| {
                            let c = GapComposition {
                                gaps: g.to_vec(),
                                d,
                                lambda,
                            };
                            let gap = gap_transversal_test(&c, k).unwrap();
                            let sign = sign_transversal_test(&c, k, 24).unwrap();
                            assert_eq!(gap, sign, "d={d} λ={lambda} k={k} gaps={g:?}");
                            if k <= c.n() {
                                let geo = geometric_transversal_test(&c, k, 24).unwrap();
                                assert_eq!(gap, geo, "geometry d={d} λ={lambda} k={k} gaps={g:?}");
                            }
                            true
                        });
                    }
                }
            }
        }
    }

    #[test]
    fn zeta_small_cases() {
        for method in [ZetaMethod::GapOptimizer, ZetaMethod::SignOracle, ZetaMethod::BothAgree] {
            let r = zeta(p(3, 5, 2), method, DEFAULT_SIGN_ORACLE_CAP).unwrap();
            assert_eq!(r.value, 7, "{}", method.as_str());
            assert_eq!(r.witness.gaps(), &[1, 1, 1, 0, 0]);
            assert_eq!((r.z_lower, r.z_upper), (7, 7));
        }
        let r = zeta(p(4, 4, 2), ZetaMethod::BothAgree, 24).unwrap();
        assert_eq!(r.value, 7);
        assert_eq!(r.witness.gaps(), &[2, 1, 1, 0]);
        // collinear case: ζ(k,1,1) = 2k-1
        let r = zeta(p(5, 1, 1), ZetaMethod::BothAgree, 24).unwrap();
        assert_eq!(r.value, 9);
    }

    #[test]
    fn zeta_large_instances() {
        for (k, expect) in [(10, 19), (20, 35), (40, 69)] {
            let r = zeta(p(k, 5, 2), ZetaMethod::GapOptimizer, 24).unwrap();
            assert_eq!(r.value, expect, "k = {k}");
            assert_eq!(r.z_lower, expect);
            assert_eq!(r.z_upper, expect);
        }
        let r = zeta(p(10, 5, 2), ZetaMethod::GapOptimizer, 24).unwrap();
        assert_eq!(r.witness.gaps(), &[3, 3, 3, 3, 3]);
    }

    #[test]
    fn zeta_rejects_trivial_range() {
        assert!(matches!(
            zeta(p(4, 4, 3), ZetaMethod::GapOptimizer, 24),
            Err(Error::RangeViolation(_))
        ));
        assert_eq!(zeta_trivial(p(4, 4, 3)), Ok(5));
        assert_eq!(zeta_trivial(p(5, 4, 3)), Ok(6));
        assert_eq!(zeta_trivial(p(3, 2, 2)), Ok(3));
        assert!(matches!(zeta_trivial(p(3, 5, 2)), Err(Error::RangeViolation(_))));
    }

    #[test]
    fn zeta_trivial_witness_checked() {
        let (value, witness) = zeta_trivial_with_witness(p(4, 4, 3)).unwrap();
        assert_eq!(value, 5);
        assert_eq!(witness.n(), 5);
        assert_eq!(gap_transversal_test(&witness, 4), Ok(true));
    }

    #[test]
    fn construction_examples() {
        let c = construct_transversal(p(3, 5, 2), 3).unwrap();
        assert_eq!(c.gaps(), &[1, 1, 1, 0, 0]);
        assert_eq!(c.n(), 7);
        let c = construct_transversal(p(5, 5, 2), 5).unwrap();
        assert_eq!(c.gaps(), &[2, 1, 1, 1, 1]);
        assert_eq!(c.n(), 10);
        assert_eq!(
            sign_transversal_test(&c, 5, DEFAULT_SIGN_ORACLE_CAP),
            Ok(true)
        );
        // small k: a = 0 and the first k-1 runs hold one vertex each
        let c = construct_transversal(p(3, 7, 2), 5).unwrap();
        assert_eq!(c.gaps(), &[1, 1, 0, 0, 0, 0, 0]);
        assert_eq!(
            construct_transversal(p(3, 5, 2), 6),
            Err(Error::BadJ { j: 6, lo: 3, hi: 5 })
        );
    }

    #[test]
    fn trend_rows() {
        use crate::rational::{rat, ratio};
        let rows = asymptotic_trend(5, 2, &[10, 20, 40]).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert_eq!(row.limit, ratio(5, 3));
            let dev = row.zeta_over_k.clone() - &row.limit;
            let dev = if dev < rat(0) { -dev } else { dev };
            // |ζ/k − (2−α)| ≤ (d−λ+2)/k
            assert!(dev <= ratio(5, row.k as i64), "k = {}", row.k);
            assert!(row.z_over_k <= row.zeta_over_k && row.zeta_over_k <= row.z_upper_over_k);
        }
        assert_eq!(rows[0].zeta, 19);
        assert_eq!(rows[1].zeta, 35);
        assert_eq!(rows[2].zeta, 69);
    }

    #[test]
    fn composition_listing() {
        let all = all_compositions(5, 2, 3).unwrap();
        assert_eq!(all.len(), 35); // C(3+4, 4)
        assert_eq!(all[0].gaps(), &[3, 0, 0, 0, 0]);
        assert_eq!(all.last().unwrap().gaps(), &[0, 0, 0, 0, 3]);
        // descending lexicographic order
        for w in all.windows(2) {
            assert!(w[0].gaps() > w[1].gaps());
        }
    }
}
