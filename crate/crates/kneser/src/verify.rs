//! Seeded self-check suites: each check replays one module invariant against
//! an independent computation and reports the first counterexample found.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::combi::{each_combination, each_composition_desc};
use crate::config::PointConfig;
use crate::cyclic::{
    construct_transversal, gap_transversal_test, sign_transversal_test, zeta,
    zeta_trivial_with_witness, am_circuit, GapComposition, Sign, ZetaMethod,
    DEFAULT_SIGN_ORACLE_CAP,
};
use crate::error::Error;
use crate::linalg::homogeneous_matrix;
use crate::parity::{
    alpha, beta, d_formula, d_oracle, i_sets, in_trivial_range, od, opti_oracle, opti_solve,
    parity_blocks, z_lower, z_upper, DValue, ParamTriple,
};
use crate::radon::{radon_partition, radon_partition_of, radon_point};
use crate::randgen::{random_general_position_config, random_increasing_rationals, rng_from_seed};
use crate::rational::{rat, Rational};
use crate::transversal::{
    balanced_hyperplane, build_theorem1_transversal, conv_aff_intersects, conv_aff_intersects_lp,
    conv_aff_intersects_radon, convex_hulls_intersect, lemma_partition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Radon,
    Parity,
    Cyclic,
    Constructions,
    All,
}

impl Suite {
    pub fn as_str(&self) -> &'static str {
        match self {
            Suite::Radon => "radon",
            Suite::Parity => "parity",
            Suite::Cyclic => "cyclic",
            Suite::Constructions => "constructions",
            Suite::All => "all",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "radon" => Ok(Suite::Radon),
            "parity" => Ok(Suite::Parity),
            "cyclic" => Ok(Suite::Cyclic),
            "constructions" => Ok(Suite::Constructions),
            "all" => Ok(Suite::All),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite.as_str(),
            "seed": self.seed,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "passed": c.passed(),
                "cases": c.cases,
                "counterexample": c.counterexample,
            })).collect::<Vec<_>>(),
        })
    }
}

/// Accumulates the case count and the first counterexample of one check.
struct Tally {
    name: &'static str,
    cases: u64,
    counterexample: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            counterexample: None,
        }
    }

    /// Records one case; returns false once a counterexample is held, so
    /// callers can stop early.
    fn case(&mut self, ok: bool, describe: impl FnOnce() -> String) -> bool {
        if self.counterexample.is_some() {
            return false;
        }
        self.cases += 1;
        if !ok {
            self.counterexample = Some(describe());
        }
        self.counterexample.is_none()
    }

    fn finish(self) -> CheckResult {
        CheckResult {
            name: self.name,
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

fn subseed(seed: u64, salt: u64) -> u64 {
    seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

pub fn run_suite(suite: Suite, seed: u64) -> SuiteReport {
    let mut checks = Vec::new();
    let pick = |s: Suite| suite == Suite::All || suite == s;
    if pick(Suite::Radon) {
        checks.push(radon_identities(seed));
        checks.push(dependence_unique_and_relabeling(seed));
        checks.push(split_criterion_agreement(seed));
        checks.push(subset_reduction_agreement(seed));
        checks.push(lemma_partition_range(seed));
    }
    if pick(Suite::Parity) {
        checks.push(od_monotone(seed));
        checks.push(parity_blocks_consistent(seed));
        checks.push(d_formula_matches_oracle());
        checks.push(i_family_properties());
        checks.push(optimizer_matches_oracle());
        checks.push(z_bounds_ordered());
    }
    if pick(Suite::Cyclic) {
        checks.push(circuit_signs_match_geometry(seed));
        checks.push(gap_criterion_equals_sign_oracle());
        checks.push(zeta_sandwich());
        checks.push(trivial_range_boundary());
        checks.push(feasibility_monotone_in_n());
    }
    if pick(Suite::Constructions) {
        checks.push(theorem1_construction(seed));
        checks.push(balanced_hyperplane_construction(seed));
        checks.push(balanced_gap_witnesses());
    }
    SuiteReport {
        suite,
        seed,
        checks,
    }
}

// radon suite

fn radon_identities(seed: u64) -> CheckResult {
    let mut t = Tally::new("radon_identities");
    let mut rng = rng_from_seed(subseed(seed, 1));
    for i in 0..200usize {
        let d = 1 + i % 6;
        let cfg = random_general_position_config(&mut rng, d + 2, d);
        let part = match radon_partition(&cfg) {
            Ok(p) => p,
            Err(e) => {
                t.case(false, || format!("radon_partition failed: {e}"));
                break;
            }
        };
        let pos_sum: Rational = part.positive.iter().map(|l| &part.coefficients[l]).sum();
        let neg_sum: Rational = part.negative.iter().map(|l| &part.coefficients[l]).sum();
        let p_point = radon_point(&cfg, &part);
        let mut n_point = vec![rat(0); d];
        for l in &part.negative {
            for (acc, x) in n_point.iter_mut().zip(cfg.point(*l)) {
                *acc += &part.coefficients[l] * x;
            }
        }
        let hulls = convex_hulls_intersect(&cfg, &part.positive, &part.negative);
        let ok = !part.positive.is_empty()
            && !part.negative.is_empty()
            && part.positive.len() + part.negative.len() == d + 2
            && pos_sum == rat(1)
            && neg_sum == rat(1)
            && p_point == n_point
            && hulls == Ok(true);
        if !t.case(ok, || {
            format!("config {} violates a partition identity", cfg.to_json())
        }) {
            break;
        }
    }
    t.finish()
}

fn dependence_unique_and_relabeling(seed: u64) -> CheckResult {
    let mut t = Tally::new("dependence_unique_and_relabeling");
    let mut rng = rng_from_seed(subseed(seed, 2));
    for i in 0..200usize {
        let d = 1 + i % 6;
        let n = d + 2;
        let cfg = random_general_position_config(&mut rng, n, d);
        let pts: Vec<&[Rational]> = (1..=n).map(|l| cfg.point(l)).collect();
        let dim_ok = homogeneous_matrix(&pts, d).nullspace().len() == 1;
        let base = radon_partition(&cfg).expect("n = d + 2");

        // relabel by a random permutation and map the partition back
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let permuted = PointConfig::new(
            d,
            perm.iter().map(|&i| cfg.point(i + 1).to_vec()).collect(),
        )
        .expect("permutation preserves distinctness");
        let moved = radon_partition(&permuted).expect("n = d + 2");
        let map_back = |labels: &[usize]| -> Vec<usize> {
            let mut v: Vec<usize> = labels.iter().map(|&l| perm[l - 1] + 1).collect();
            v.sort_unstable();
            v
        };
        let (mp, mn) = (map_back(&moved.positive), map_back(&moved.negative));
        let blocks_ok = (mp == base.positive && mn == base.negative)
            || (mp == base.negative && mn == base.positive);
        let coeff_ok = moved
            .coefficients
            .iter()
            .all(|(l, c)| base.coefficients.get(&(perm[l - 1] + 1)) == Some(c));
        if !t.case(dim_ok && blocks_ok && coeff_ok, || {
            format!(
                "partition of {} not invariant under relabeling {perm:?}",
                cfg.to_json()
            )
        }) {
            break;
        }
    }
    t.finish()
}

fn split_criterion_agreement(seed: u64) -> CheckResult {
    let mut t = Tally::new("split_criterion_agreement");
    let mut rng = rng_from_seed(subseed(seed, 3));
    for i in 0..200usize {
        let d = 1 + i % 6;
        let n = d + 2;
        let cfg = random_general_position_config(&mut rng, n, d);
        let s_size = rng.gen_range(2..=d + 1);
        let mut labels: Vec<usize> = (1..=n).collect();
        labels.shuffle(&mut rng);
        let mut s: Vec<usize> = labels[..s_size].to_vec();
        let mut tt: Vec<usize> = labels[s_size..].to_vec();
        s.sort_unstable();
        tt.sort_unstable();
        let lp = conv_aff_intersects_lp(&cfg, &s, &tt);
        let fast = conv_aff_intersects_radon(&cfg, &s, &tt);
        let ok = match (&lp, &fast) {
            (Ok(a), Ok(Some(b))) => a == b,
            _ => false,
        };
        if !t.case(ok, || {
            format!(
                "S = {s:?}, T = {tt:?} on {}: LP {lp:?} vs criterion {fast:?}",
                cfg.to_json()
            )
        }) {
            break;
        }
    }
    t.finish()
}

fn subset_reduction_agreement(seed: u64) -> CheckResult {
    let mut t = Tally::new("subset_reduction_agreement");
    let mut rng = rng_from_seed(subseed(seed, 4));
    for i in 0..200usize {
        let d = 2 + i % 4;
        let lambda = rng.gen_range(1..=d - 1);
        let t_size = d - lambda + 1;
        let s_size = lambda + 2 + i % 2;
        let n = t_size + s_size;
        let cfg = random_general_position_config(&mut rng, n, d);
        let mut labels: Vec<usize> = (1..=n).collect();
        labels.shuffle(&mut rng);
        let mut s: Vec<usize> = labels[..s_size].to_vec();
        let mut tt: Vec<usize> = labels[s_size..].to_vec();
        s.sort_unstable();
        tt.sort_unstable();
        let full = conv_aff_intersects_lp(&cfg, &s, &tt).expect("valid pair");
        let mut reduced = false;
        each_combination(s_size, lambda + 1, &mut |c| {
            let sub: Vec<usize> = c.iter().map(|&j| s[j]).collect();
            if conv_aff_intersects(&cfg, &sub, &tt).expect("valid pair") {
                reduced = true;
                return false;
            }
            true
        });
        if !t.case(full == reduced, || {
            format!(
                "S = {s:?}, T = {tt:?}, lambda = {lambda} on {}: full {full} vs reduced {reduced}",
                cfg.to_json()
            )
        }) {
            break;
        }
    }
    t.finish()
}

fn lemma_partition_range(seed: u64) -> CheckResult {
    let mut t = Tally::new("lemma_partition_range");
    let mut rng = rng_from_seed(subseed(seed, 5));
    'outer: for d in 1..=6usize {
        for _ in 0..30 {
            let cfg = random_general_position_config(&mut rng, d + 2, d);
            for size in (d + 2) / 2..=d + 1 {
                let ok = match lemma_partition(&cfg, size) {
                    Ok((s, tt)) => {
                        tt.len() == size
                            && s.len() == d + 2 - size
                            && s.iter().all(|l| !tt.contains(l))
                            && conv_aff_intersects(&cfg, &s, &tt) == Ok(true)
                    }
                    Err(_) => false,
                };
                if !t.case(ok, || {
                    format!("t = {size} on {}", cfg.to_json())
                }) {
                    break 'outer;
                }
            }
        }
    }
    t.finish()
}

// parity suite

fn od_monotone(seed: u64) -> CheckResult {
    let mut t = Tally::new("od_monotone");
    'outer: for size in 1..=6usize {
        let mut stop = false;
        each_combination(20, size, &mut |c| {
            let tset: Vec<usize> = c.iter().map(|&i| i + 1).collect();
            let od_t = od(&tset).expect("nonempty");
            for mask in 1u32..1 << size {
                let s: Vec<usize> = (0..size)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| tset[b])
                    .collect();
                if !t.case(od(&s).expect("nonempty") <= od_t, || {
                    format!("od({s:?}) > od({tset:?})")
                }) {
                    stop = true;
                    return false;
                }
            }
            true
        });
        if stop {
            break 'outer;
        }
    }
    let mut rng = rng_from_seed(subseed(seed, 6));
    for _ in 0..200 {
        let size = rng.gen_range(7..=20);
        let mut pool: Vec<usize> = (1..=20).collect();
        pool.shuffle(&mut rng);
        let mut tset: Vec<usize> = pool[..size].to_vec();
        tset.sort_unstable();
        let sub = rng.gen_range(1..=size);
        let mut pick = tset.clone();
        pick.shuffle(&mut rng);
        let mut s: Vec<usize> = pick[..sub].to_vec();
        s.sort_unstable();
        let ok = od(&s).expect("nonempty") <= od(&tset).expect("nonempty");
        if !t.case(ok, || format!("od({s:?}) > od({tset:?})")) {
            break;
        }
    }
    t.finish()
}

fn parity_blocks_consistent(seed: u64) -> CheckResult {
    let mut t = Tally::new("parity_blocks_consistent");
    let check = |s: &[usize], t: &mut Tally| -> bool {
        let blocks = parity_blocks(s).expect("nonempty");
        let flat: Vec<usize> = blocks.iter().flatten().copied().collect();
        let within = blocks
            .iter()
            .all(|b| b.windows(2).all(|w| (w[1] - w[0]) % 2 == 0));
        let across = blocks
            .windows(2)
            .all(|pair| (pair[1][0] - pair[0].last().unwrap()) % 2 == 1);
        let ok = flat == s && within && across && blocks.len() == od(s).unwrap() + 1;
        t.case(ok, || format!("parity_blocks({s:?}) = {blocks:?}"))
    };
    for mask in 1u32..1 << 10 {
        let s: Vec<usize> = (0..10).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        if !check(&s, &mut t) {
            return t.finish();
        }
    }
    let mut rng = rng_from_seed(subseed(seed, 7));
    for _ in 0..200 {
        let size = rng.gen_range(1..=20);
        let mut pool: Vec<usize> = (1..=20).collect();
        pool.shuffle(&mut rng);
        let mut s: Vec<usize> = pool[..size].to_vec();
        s.sort_unstable();
        if !check(&s, &mut t) {
            break;
        }
    }
    t.finish()
}

fn d_formula_matches_oracle() -> CheckResult {
    let mut t = Tally::new("d_formula_matches_oracle");
    'outer: for k in 1..=8usize {
        for l in 1..=8usize {
            let DValue::Finite(v) = d_formula(k, l) else {
                t.case(false, || format!("D({k},{l}) unbounded for l >= 1"));
                break 'outer;
            };
            let got = d_oracle(k, l, 2 * k);
            if !t.case(v == got, || format!("D({k},{l}): formula {v}, oracle {got}")) {
                break 'outer;
            }
        }
    }
    t.finish()
}

fn i_family_properties() -> CheckResult {
    let mut t = Tally::new("i_family_properties");
    'outer: for d in 1..=12usize {
        for lambda in 1..=d {
            if alpha(d, lambda) >= rat(1) {
                continue;
            }
            let fam = match i_sets(d, lambda) {
                Ok(f) => f,
                Err(e) => {
                    t.case(false, || format!("i_sets({d},{lambda}) failed: {e}"));
                    break 'outer;
                }
            };
            let m = d - lambda + 2;
            let expected = 2 * d.div_ceil(2) - lambda + 1;
            let count_ok = fam.len() == expected;
            let od_ok = fam
                .iter()
                .all(|s| od(s).expect("nonempty") <= lambda - 1);
            let range_ok = fam
                .iter()
                .all(|s| s.windows(2).all(|w| w[0] < w[1]) && s.iter().all(|&x| 1 <= x && x <= m));
            let coverage_ok = (1..=m).all(|x| {
                fam.iter().filter(|s| s.contains(&x)).count() == d.div_ceil(2)
            });
            if !t.case(count_ok && od_ok && range_ok && coverage_ok, || {
                format!("family for (d, lambda) = ({d},{lambda}): {fam:?}")
            }) {
                break 'outer;
            }
        }
    }
    t.finish()
}

fn optimizer_matches_oracle() -> CheckResult {
    let mut t = Tally::new("optimizer_matches_oracle");
    'outer: for lambda in 1..=4usize {
        for k in lambda + 1..=10 {
            for j in lambda + 1..=10 {
                let fast = opti_solve(k, lambda, j);
                let slow = opti_oracle(k, lambda, j);
                let r_small = fast.r <= beta(lambda, j) - 1;
                if !t.case(fast == slow && r_small, || {
                    format!("(k, lambda, j) = ({k},{lambda},{j}): closed {fast:?}, scan {slow:?}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    t.finish()
}

fn z_bounds_ordered() -> CheckResult {
    let mut t = Tally::new("z_bounds_ordered");
    'outer: for d in 1..=12usize {
        for lambda in 1..=d {
            if in_trivial_range(d, lambda) {
                continue;
            }
            for k in lambda + 1..=40 {
                let p = ParamTriple::new(k, d, lambda).expect("valid triple");
                let lo = z_lower(p);
                let hi = z_upper(p);
                let ok = match (&lo, &hi) {
                    (Ok(lo), Ok(hi)) => d - lambda + 1 < *lo && lo <= hi,
                    _ => false,
                };
                if !t.case(ok, || {
                    format!("(k,d,lambda) = ({k},{d},{lambda}): z {lo:?}, Z {hi:?}")
                }) {
                    break 'outer;
                }
            }
        }
    }
    t.finish()
}

// cyclic suite

fn circuit_signs_match_geometry(seed: u64) -> CheckResult {
    let mut t = Tally::new("circuit_signs_match_geometry");
    let mut rng = rng_from_seed(subseed(seed, 8));
    'outer: for d in 1..=6usize {
        for n in d + 2..=9 {
            let ts = random_increasing_rationals(&mut rng, n);
            let cfg = PointConfig::moment_curve(n, d, Some(&ts)).expect("increasing parameters");
            let mut stop = false;
            each_combination(n, d + 2, &mut |c| {
                let support: Vec<usize> = c.iter().map(|&i| i + 1).collect();
                let circuit = am_circuit(&support, d).expect("size d + 2");
                let part = radon_partition_of(&cfg, &support).expect("general position");
                let split = |sign: Sign| -> Vec<usize> {
                    circuit
                        .support
                        .iter()
                        .zip(&circuit.signs)
                        .filter(|(_, s)| **s == sign)
                        .map(|(v, _)| *v)
                        .collect()
                };
                let (plus, minus) = (split(Sign::Plus), split(Sign::Minus));
                let ok = (part.positive == plus && part.negative == minus)
                    || (part.positive == minus && part.negative == plus);
                if !t.case(ok, || {
                    format!("support {support:?}, d = {d}, params {ts:?}")
                }) {
                    stop = true;
                    return false;
                }
                true
            });
            if stop {
                break 'outer;
            }
        }
    }
    t.finish()
}

fn gap_criterion_equals_sign_oracle() -> CheckResult {
    let mut t = Tally::new("gap_criterion_equals_sign_oracle");
    'outer: for d in 1..=6usize {
        for lambda in 1..=d {
            if in_trivial_range(d, lambda) {
                continue;
            }
            let base = d - lambda + 1;
            for k in lambda + 1..=6 {
                for total in 0..=12 - base {
                    let mut stop = false;
                    each_composition_desc(total, base + 1, &mut |g| {
                        let comp = GapComposition::new(d, lambda, g.to_vec()).expect("valid");
                        let by_gaps = gap_transversal_test(&comp, k).expect("k >= lambda+1");
                        let by_signs = sign_transversal_test(&comp, k, DEFAULT_SIGN_ORACLE_CAP)
                            .expect("n <= 12");
                        if !t.case(by_gaps == by_signs, || {
                            format!(
                                "gaps {g:?}, (k,d,lambda) = ({k},{d},{lambda}): criterion {by_gaps}, oracle {by_signs}"
                            )
                        }) {
                            stop = true;
                            return false;
                        }
                        true
                    });
                    if stop {
                        break 'outer;
                    }
                }
            }
        }
    }
    t.finish()
}

fn zeta_sandwich() -> CheckResult {
    let mut t = Tally::new("zeta_sandwich");
    'outer: for d in 1..=6usize {
        for lambda in 1..=d {
            if in_trivial_range(d, lambda) {
                continue;
            }
            for k in lambda + 1..=6 {
                let p = ParamTriple::new(k, d, lambda).expect("valid triple");
                let ok = match zeta(p, ZetaMethod::GapOptimizer, DEFAULT_SIGN_ORACLE_CAP) {
                    Ok(r) => {
                        r.z_lower <= r.value
                            && r.value <= r.z_upper
                            && r.witness.n() == r.value
                            && gap_transversal_test(&r.witness, k) == Ok(true)
                    }
                    Err(_) => false,
                };
                if !t.case(ok, || format!("(k,d,lambda) = ({k},{d},{lambda})")) {
                    break 'outer;
                }
            }
        }
    }
    t.finish()
}

fn trivial_range_boundary() -> CheckResult {
    let mut t = Tally::new("trivial_range_boundary");
    'outer: for d in 1..=8usize {
        for lambda in 1..=d {
            if !in_trivial_range(d, lambda) {
                continue;
            }
            for k in lambda + 1..=8 {
                let p = ParamTriple::new(k, d, lambda).expect("valid triple");
                let ok = match zeta_trivial_with_witness(p) {
                    Ok((value, witness)) => value == d - lambda + k && witness.n() == value,
                    Err(_) => false,
                };
                if !t.case(ok, || format!("(k,d,lambda) = ({k},{d},{lambda})")) {
                    break 'outer;
                }
            }
        }
    }
    t.finish()
}

fn feasibility_monotone_in_n() -> CheckResult {
    let mut t = Tally::new("feasibility_monotone_in_n");
    'outer: for d in 1..=5usize {
        for lambda in 1..=d {
            if in_trivial_range(d, lambda) {
                continue;
            }
            let m = d - lambda + 2;
            for k in lambda + 1..=5 {
                let mut prev = true;
                for total in 0..=9usize {
                    let mut feasible = false;
                    each_composition_desc(total, m, &mut |g| {
                        let comp = GapComposition::new(d, lambda, g.to_vec()).expect("valid");
                        if gap_transversal_test(&comp, k).expect("k >= lambda+1") {
                            feasible = true;
                            return false;
                        }
                        true
                    });
                    if !t.case(prev || !feasible, || {
                        format!(
                            "(k,d,lambda) = ({k},{d},{lambda}): infeasible at total {} but feasible at {total}",
                            total - 1
                        )
                    }) {
                        break 'outer;
                    }
                    prev = feasible;
                }
            }
        }
    }
    t.finish()
}

// constructions suite

fn theorem1_construction(seed: u64) -> CheckResult {
    let mut t = Tally::new("theorem1_construction");
    let mut rng = rng_from_seed(subseed(seed, 9));
    'outer: for (d, lambda, k) in [(3, 1, 3), (4, 2, 3), (5, 2, 3), (5, 2, 4)] {
        let n = (d - lambda + 1) + k;
        for _ in 0..100 {
            let cfg = random_general_position_config(&mut rng, n, d);
            let ok = match build_theorem1_transversal(&cfg, k, lambda) {
                Ok(cert) => cert.verified && cert.t_indices.len() == d - lambda + 1,
                Err(_) => false,
            };
            if !t.case(ok, || {
                format!("(d,lambda,k) = ({d},{lambda},{k}) on {}", cfg.to_json())
            }) {
                break 'outer;
            }
        }
    }
    t.finish()
}

fn balanced_hyperplane_construction(seed: u64) -> CheckResult {
    let mut t = Tally::new("balanced_hyperplane_construction");
    let mut rng = rng_from_seed(subseed(seed, 10));
    'outer: for (d, k) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
        let n = d + 2 * (k - 1);
        for _ in 0..100 {
            let cfg = random_general_position_config(&mut rng, n, d);
            let ok = match balanced_hyperplane(&cfg, k) {
                Ok(cert) => cert.verified && cert.t_indices.len() == d,
                Err(_) => false,
            };
            if !t.case(ok, || format!("(d,k) = ({d},{k}) on {}", cfg.to_json())) {
                break 'outer;
            }
        }
    }
    // the matching upper bound for lambda = 1
    'formula: for d in 1..=8usize {
        for k in 2..=8 {
            let p = ParamTriple::new(k, d, 1).expect("valid triple");
            let ok = z_upper(p) == Ok(d + 2 * (k - 1));
            if !t.case(ok, || format!("Z({k},{d},1) != {}", d + 2 * (k - 1))) {
                break 'formula;
            }
        }
    }
    t.finish()
}

fn balanced_gap_witnesses() -> CheckResult {
    let mut t = Tally::new("balanced_gap_witnesses");
    'outer: for d in 1..=8usize {
        for lambda in 1..=d {
            if in_trivial_range(d, lambda) {
                continue;
            }
            for k in lambda + 1..=8 {
                let p = ParamTriple::new(k, d, lambda).expect("valid triple");
                for j in lambda + 1..=d - lambda + 2 {
                    let sol = opti_solve(k, lambda, j);
                    let ok = match construct_transversal(p, j) {
                        Ok(c) => {
                            c.n() == (d - lambda + 1) + sol.value
                                && gap_transversal_test(&c, k) == Ok(true)
                                && sign_transversal_test(&c, k, DEFAULT_SIGN_ORACLE_CAP)
                                    == Ok(true)
                        }
                        Err(_) => false,
                    };
                    if !t.case(ok, || {
                        format!("(k,d,lambda,j) = ({k},{d},{lambda},{j})")
                    }) {
                        break 'outer;
                    }
                }
            }
        }
    }
    t.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        let report = run_suite(Suite::All, 0xC0FFEE);
        for c in &report.checks {
            assert!(
                c.passed(),
                "{} failed after {} cases: {:?}",
                c.name,
                c.cases,
                c.counterexample
            );
            assert!(c.cases > 0, "{} ran no cases", c.name);
        }
        assert!(report.passed());
        assert_eq!(report.checks.len(), 19);
    }

    #[test]
    fn deterministic_given_seed() {
        let a = run_suite(Suite::Radon, 42);
        let b = run_suite(Suite::Radon, 42);
        assert_eq!(a.to_json(), b.to_json());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in [
            Suite::Radon,
            Suite::Parity,
            Suite::Cyclic,
            Suite::Constructions,
            Suite::All,
        ] {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
