//! Command-line front end: Radon partitions, transversal checks, bound
//! reports, the ζ search, batch tables, moment-curve generation, and the
//! verification suites.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use kneser::cyclic::{
    zeta, zeta_trivial_with_witness, GapComposition, ZetaMethod, ZetaResult,
};
use kneser::error::Error;
use kneser::parity::{alpha, in_trivial_range, z_lower, z_upper, ParamTriple};
use kneser::radon::{radon_partition, radon_point};
use kneser::rational::{format_rational, parse_rational, rat, Rational};
use kneser::transversal::is_complete_kneser_transversal;
use kneser::verify::{run_suite, Suite};
use kneser::PointConfig;

const TABLE_CELL_LIMIT: u64 = 20_000;

#[derive(Parser)]
#[command(name = "kneser", version, about = "Complete Kneser transversals of finite point sets, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Vertex-count ceiling for the combinatorial and geometric oracles
    #[arg(long, global = true, default_value_t = 24)]
    oracle_cap: usize,
    /// Seed for randomized checks; recorded in outputs
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Radon partition of exactly dim+2 points
    Radon {
        /// Point configuration JSON file
        #[arg(long)]
        input: PathBuf,
    },
    /// Check whether aff(T) is a complete Kneser transversal for k-sets
    Check {
        /// Point configuration JSON file
        #[arg(long)]
        input: PathBuf,
        /// Comma-separated 1-based point labels spanning the flat
        #[arg(long, value_delimiter = ',', required = true)]
        t: Vec<usize>,
        #[arg(long)]
        k: usize,
    },
    /// Bound report for (k, d, lambda): alpha, range, z, Z, exact values
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        lambda: usize,
    },
    /// Largest cyclic-polytope vertex count admitting a complete transversal
    Zeta {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        lambda: usize,
        /// gap-optimizer, sign-oracle, or both-agree
        #[arg(long, default_value = "both-agree")]
        method: String,
    },
    /// Bound table over the grid k <= k_max, d <= d_max, lambda <= lambda_max
    Table {
        /// Maximum dimension
        #[arg(long)]
        d: usize,
        /// Maximum k
        #[arg(long)]
        k: usize,
        /// Maximum lambda
        #[arg(long)]
        lambda: usize,
    },
    /// Write n moment-curve points in R^d as a point configuration file
    GenCyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Comma-separated strictly increasing rational parameters
        #[arg(long)]
        params: Option<String>,
    },
    /// Run a self-check suite
    Verify {
        /// radon, parity, cyclic, constructions, or all
        #[arg(default_value = "all")]
        suite: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    match &cli.cmd {
        Cmd::Radon { input } => cmd_radon(cli, input),
        Cmd::Check { input, t, k } => cmd_check(cli, input, t, *k),
        Cmd::Bounds { k, d, lambda } => cmd_bounds(cli, *k, *d, *lambda),
        Cmd::Zeta { k, d, lambda, method } => cmd_zeta(cli, *k, *d, *lambda, method),
        Cmd::Table { d, k, lambda } => cmd_table(cli, *d, *k, *lambda),
        Cmd::GenCyclic { n, d, params } => cmd_gen_cyclic(cli, *n, *d, params.as_deref()),
        Cmd::Verify { suite } => cmd_verify(cli, suite),
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Error> {
    let body = if text.ends_with('\n') {
        text.to_string()
    } else {
        format!("{text}\n")
    };
    match &cli.out {
        Some(path) => fs::write(path, body)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn read_config(path: &PathBuf) -> Result<PointConfig, Error> {
    let raw = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    PointConfig::from_json(&raw)
}

fn csv_field(s: &str) -> String {
    if s.contains(['"', ',', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
}

/// Flag for parameter triples whose published value interval is sharpened by
/// the computed sandwich instead of being taken at face value.
fn discrepancy_note(k: usize, d: usize, lambda: usize) -> Option<String> {
    if (k, d, lambda) == (3, 5, 2) {
        Some(
            "discrepancy: source interval 7 <= m*(3,5,2) <= 8; computed zeta(3,5,2) = 7 \
             forces m*(3,5,2) = 7"
                .to_string(),
        )
    } else {
        None
    }
}

/// Exact m* value with its citation, when one of the closed cases applies.
fn m_star_exact(k: usize, d: usize, lambda: usize) -> Option<(usize, &'static str)> {
    if k == lambda {
        return Some((d, "Prop 4.0"));
    }
    if in_trivial_range(d, lambda) {
        return Some((d - lambda + k, "Thm 1.2"));
    }
    if lambda == 1 {
        return Some((d + 2 * (k - 1), "Thm 1.5"));
    }
    let p = ParamTriple::new(k, d, lambda).ok()?;
    let lower = (d - lambda + 1) + k;
    if z_upper(p).ok()? == lower {
        let window = 2 * k >= d && rat(k as i64) * (rat(1) - alpha(d, lambda)) < rat(2);
        Some((lower, if window { "Thm 1.4" } else { "Thm 1.1+3.1" }))
    } else {
        None
    }
}

fn cmd_radon(cli: &Cli, input: &PathBuf) -> Result<ExitCode, Error> {
    let cfg = read_config(input)?;
    let part = radon_partition(&cfg)?;
    let point = radon_point(&cfg, &part);
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "seed": cli.seed,
            "partition": part.to_json(),
            "radon_point": point.iter().map(format_rational).collect::<Vec<_>>(),
        }))
        .expect("serializable"),
        Format::Csv => {
            let header = vec!["label".into(), "block".into(), "coefficient".into()];
            let mut lines = vec![csv_line(&header)];
            for (l, sign) in part
                .positive
                .iter()
                .map(|l| (l, "positive"))
                .chain(part.negative.iter().map(|l| (l, "negative")))
            {
                lines.push(csv_line(&[
                    l.to_string(),
                    sign.into(),
                    format_rational(&part.coefficients[l]),
                ]));
            }
            lines.join("\n")
        }
        Format::Text => {
            let coeffs = |labels: &[usize]| {
                labels
                    .iter()
                    .map(|l| format!("{l}:{}", format_rational(&part.coefficients[l])))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            format!(
                "seed = {}\npositive block: {:?}  ({})\nnegative block: {:?}  ({})\nradon point: ({})",
                cli.seed,
                part.positive,
                coeffs(&part.positive),
                part.negative,
                coeffs(&part.negative),
                point.iter().map(format_rational).collect::<Vec<_>>().join(", "),
            )
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(cli: &Cli, input: &PathBuf, t: &[usize], k: usize) -> Result<ExitCode, Error> {
    let cfg = read_config(input)?;
    let cert = is_complete_kneser_transversal(&cfg, t, k)?;
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "seed": cli.seed,
            "certificate": cert.to_json(),
        }))
        .expect("serializable"),
        Format::Csv => {
            let header = vec!["t".into(), "k".into(), "verified".into(), "failing_kset".into()];
            let row = vec![
                cert.t_indices
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                cert.k.to_string(),
                cert.verified.to_string(),
                cert.failing_kset
                    .as_ref()
                    .map(|s| {
                        s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
                    })
                    .unwrap_or_default(),
            ];
            format!("{}\n{}", csv_line(&header), csv_line(&row))
        }
        Format::Text => {
            let mut s = format!(
                "seed = {}\nT = {:?}, k = {}\nverified = {}",
                cli.seed, cert.t_indices, cert.k, cert.verified
            );
            if let Some(w) = &cert.failing_kset {
                s.push_str(&format!("\nfailing k-set: {w:?}"));
            }
            s
        }
    };
    emit(cli, &body)?;
    Ok(if cert.verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_bounds(cli: &Cli, k: usize, d: usize, lambda: usize) -> Result<ExitCode, Error> {
    let p = ParamTriple::new(k, d, lambda)?;
    let a = alpha(d, lambda);
    let trivial = in_trivial_range(d, lambda);
    let range = if trivial { "trivial" } else { "non-trivial" };
    let (z, zu) = if trivial || k < lambda + 1 {
        (None, None)
    } else {
        (Some(z_lower(p)?), Some(z_upper(p)?))
    };
    let zeta_exact = if trivial && k >= lambda + 1 {
        Some(d - lambda + k)
    } else {
        None
    };
    let thm11_lower = if !trivial { Some((d - lambda + 1) + k) } else { None };
    let prop40 = d; // k = lambda
    let thm15 = d + 2 * (k - 1); // lambda = 1
    let ineq1_lower = d - lambda + k + k.div_ceil(lambda) - 1;
    let ineq1_upper_strict = d + 2 * (k - lambda) + 1;
    let m_star = m_star_exact(k, d, lambda);
    let note = discrepancy_note(k, d, lambda);

    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "seed": cli.seed,
            "k": k, "d": d, "lambda": lambda,
            "alpha": format_rational(&a),
            "range": range,
            "z": z, "Z": zu,
            "zeta": zeta_exact,
            "m_star_lower_thm11": thm11_lower,
            "m_star_at_k_equals_lambda": prop40,
            "m_star_at_lambda_1": thm15,
            "m_ineq1": format!("{ineq1_lower} <= m < {ineq1_upper_strict}"),
            "m_ineq1_status": "for comparison, not computed",
            "m_star": m_star.map(|(v, _)| v),
            "citation": m_star.map(|(_, c)| c),
            "note": note,
        }))
        .expect("serializable"),
        Format::Csv => {
            let header: Vec<String> = [
                "k", "d", "lambda", "alpha", "range", "z", "Z", "zeta", "m_star", "citation",
                "note",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect();
            let row = vec![
                k.to_string(),
                d.to_string(),
                lambda.to_string(),
                format_rational(&a),
                range.to_string(),
                z.map(|v| v.to_string()).unwrap_or_default(),
                zu.map(|v| v.to_string()).unwrap_or_default(),
                zeta_exact.map(|v| v.to_string()).unwrap_or_default(),
                m_star.map(|(v, _)| v.to_string()).unwrap_or_default(),
                m_star.map(|(_, c)| c.to_string()).unwrap_or_default(),
                note.clone().unwrap_or_default(),
            ];
            format!("{}\n{}", csv_line(&header), csv_line(&row))
        }
        Format::Text => {
            let mut s = format!(
                "seed = {}\nk = {k}, d = {d}, lambda = {lambda}\nalpha = {}\nrange = {range}",
                cli.seed,
                format_rational(&a)
            );
            match (z, zu) {
                (Some(z), Some(zu)) => s.push_str(&format!("\nz = {z}, Z = {zu}")),
                _ => s.push_str("\nz, Z: defined only in the non-trivial range with k >= lambda+1"),
            }
            if let Some(v) = zeta_exact {
                s.push_str(&format!("\nzeta = {v} (Thm 1.2)"));
            }
            if let Some(v) = thm11_lower {
                s.push_str(&format!("\nm* lower bound (Thm 1.1): {v} <= m*"));
            }
            s.push_str(&format!("\nm*({lambda},{d},{lambda}) = {prop40} (Prop 4.0)"));
            s.push_str(&format!("\nm*({k},{d},1) = {thm15} (Thm 1.5)"));
            s.push_str(&format!(
                "\nm bounds, for comparison, not computed: {ineq1_lower} <= m({k},{d},{lambda}) < {ineq1_upper_strict}"
            ));
            if let Some((v, c)) = m_star {
                s.push_str(&format!("\nm*({k},{d},{lambda}) = {v} ({c})"));
            }
            if let Some(n) = &note {
                s.push_str(&format!("\nnote: {n}"));
            }
            s
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

enum ZetaOutcome {
    Searched(ZetaResult),
    Trivial(usize, GapComposition),
}

fn cmd_zeta(cli: &Cli, k: usize, d: usize, lambda: usize, method: &str) -> Result<ExitCode, Error> {
    let p = ParamTriple::new(k, d, lambda)?;
    if k < lambda + 1 {
        return Err(Error::RangeViolation(format!(
            "need k >= lambda+1 = {}, got k = {k}",
            lambda + 1
        )));
    }
    let method: ZetaMethod = method.parse()?;
    if matches!(method, ZetaMethod::SignOracle | ZetaMethod::BothAgree) && cli.oracle_cap < d + 2 {
        return Err(Error::RangeViolation(format!(
            "oracle cap {} below d+2 = {}",
            cli.oracle_cap,
            d + 2
        )));
    }
    let outcome = if in_trivial_range(d, lambda) {
        let (value, witness) = zeta_trivial_with_witness(p)?;
        ZetaOutcome::Trivial(value, witness)
    } else {
        ZetaOutcome::Searched(zeta(p, method, cli.oracle_cap)?)
    };
    let note = discrepancy_note(k, d, lambda);
    let (value, witness, method_str, zl, zu, tested) = match &outcome {
        ZetaOutcome::Searched(r) => (
            r.value,
            &r.witness,
            r.method.as_str(),
            Some(r.z_lower),
            Some(r.z_upper),
            Some(r.tested),
        ),
        ZetaOutcome::Trivial(v, w) => (*v, w, "trivial", None, None, None),
    };
    let body = match cli.format {
        Format::Json => {
            let mut obj = serde_json::json!({
                "k": k, "d": d, "lambda": lambda,
                "zeta": value,
                "witness_gaps": witness.gaps(),
                "method": method_str,
                "z_lower": zl,
                "z_upper": zu,
            });
            let map = obj.as_object_mut().expect("object");
            map.insert("seed".into(), cli.seed.into());
            if let Some(t) = tested {
                map.insert("tested_compositions".into(), t.into());
            }
            if let Some(n) = &note {
                map.insert("note".into(), n.clone().into());
            }
            serde_json::to_string_pretty(&obj).expect("serializable")
        }
        Format::Csv => {
            let header: Vec<String> = [
                "k", "d", "lambda", "zeta", "witness_gaps", "method", "z_lower", "z_upper",
                "tested", "note",
            ]
            .iter()
            .map(|s| s.to_string())
            .collect();
            let row = vec![
                k.to_string(),
                d.to_string(),
                lambda.to_string(),
                value.to_string(),
                witness
                    .gaps()
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" "),
                method_str.to_string(),
                zl.map(|v| v.to_string()).unwrap_or_default(),
                zu.map(|v| v.to_string()).unwrap_or_default(),
                tested.map(|v| v.to_string()).unwrap_or_default(),
                note.clone().unwrap_or_default(),
            ];
            format!("{}\n{}", csv_line(&header), csv_line(&row))
        }
        Format::Text => {
            let mut s = format!(
                "seed = {}\nk = {k}, d = {d}, lambda = {lambda}\nmethod = {method_str}",
                cli.seed
            );
            if let (Some(zl), Some(zu)) = (zl, zu) {
                s.push_str(&format!("\nz = {zl}, Z = {zu}"));
            }
            s.push_str(&format!(
                "\nzeta = {value}\nwitness gaps = {:?}\nn = {}, transversal positions = {:?}",
                witness.gaps(),
                witness.n(),
                witness.transversal_positions(),
            ));
            if let Some(t) = tested {
                s.push_str(&format!("\ncompositions tested = {t}"));
            }
            if let Some(n) = &note {
                s.push_str(&format!("\nnote: {n}"));
            }
            s
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_table(cli: &Cli, d_max: usize, k_max: usize, lambda_max: usize) -> Result<ExitCode, Error> {
    let cells = (d_max as u64) * (k_max as u64) * (lambda_max as u64);
    if cells == 0 {
        return Err(Error::RangeViolation("empty grid".into()));
    }
    if cells > TABLE_CELL_LIMIT {
        return Err(Error::GridTooLarge {
            cells,
            limit: TABLE_CELL_LIMIT,
        });
    }
    let header: Vec<String> = [
        "k", "d", "lambda", "alpha", "range", "z", "Z", "zeta", "m_star", "citation", "note",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut rows: Vec<Vec<String>> = Vec::new();
    for d in 1..=d_max {
        for lambda in 1..=lambda_max.min(d) {
            for k in lambda..=k_max {
                let trivial = in_trivial_range(d, lambda);
                let p = ParamTriple::new(k, d, lambda)?;
                let (z, zu) = if !trivial && k >= lambda + 1 {
                    (Some(z_lower(p)?), Some(z_upper(p)?))
                } else {
                    (None, None)
                };
                let zeta_val = if k < lambda + 1 {
                    None
                } else if trivial {
                    Some(d - lambda + k)
                } else {
                    Some(zeta(p, ZetaMethod::GapOptimizer, cli.oracle_cap)?.value)
                };
                let m_star = m_star_exact(k, d, lambda);
                let note = discrepancy_note(k, d, lambda);
                rows.push(vec![
                    k.to_string(),
                    d.to_string(),
                    lambda.to_string(),
                    format_rational(&alpha(d, lambda)),
                    if trivial { "trivial" } else { "non-trivial" }.to_string(),
                    z.map(|v| v.to_string()).unwrap_or_default(),
                    zu.map(|v| v.to_string()).unwrap_or_default(),
                    zeta_val.map(|v| v.to_string()).unwrap_or_default(),
                    m_star.map(|(v, _)| v.to_string()).unwrap_or_default(),
                    m_star.map(|(_, c)| c.to_string()).unwrap_or_default(),
                    note.unwrap_or_default(),
                ]);
            }
        }
    }
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&serde_json::json!({
            "seed": cli.seed,
            "columns": header,
            "rows": rows,
        }))
        .expect("serializable"),
        Format::Csv | Format::Text => {
            let mut lines = vec![csv_line(&header)];
            lines.extend(rows.iter().map(|r| csv_line(r)));
            lines.join("\n")
        }
    };
    emit(cli, &body)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_gen_cyclic(cli: &Cli, n: usize, d: usize, params: Option<&str>) -> Result<ExitCode, Error> {
    let parsed: Option<Vec<Rational>> = match params {
        Some(list) => Some(
            list.split(',')
                .map(|s| parse_rational(s.trim()))
                .collect::<Result<_, _>>()?,
        ),
        None => None,
    };
    let cfg = PointConfig::moment_curve(n, d, parsed.as_deref())?;
    if !cfg.is_general_position() {
        return Err(Error::Internal(
            "moment-curve output is not in general position".into(),
        ));
    }
    emit(cli, &cfg.to_json())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cli: &Cli, suite: &str) -> Result<ExitCode, Error> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, cli.seed);
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("serializable"),
        Format::Csv => {
            let header = vec![
                "check".to_string(),
                "passed".to_string(),
                "cases".to_string(),
                "counterexample".to_string(),
            ];
            let mut lines = vec![csv_line(&header)];
            for c in &report.checks {
                lines.push(csv_line(&[
                    c.name.to_string(),
                    c.passed().to_string(),
                    c.cases.to_string(),
                    c.counterexample.clone().unwrap_or_default(),
                ]));
            }
            lines.join("\n")
        }
        Format::Text => {
            let mut lines = vec![format!(
                "suite = {}, seed = {}",
                report.suite.as_str(),
                report.seed
            )];
            for c in &report.checks {
                match &c.counterexample {
                    None => lines.push(format!("ok   {} ({} cases)", c.name, c.cases)),
                    Some(ce) => lines.push(format!("FAIL {}: {ce}", c.name)),
                }
            }
            lines.push(if report.passed() {
                "all checks passed".to_string()
            } else {
                "FAILED".to_string()
            });
            lines.join("\n")
        }
    };
    emit(cli, &body)?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_values_and_citations() {
        assert_eq!(m_star_exact(3, 3, 3), Some((3, "Prop 4.0")));
        assert_eq!(m_star_exact(4, 4, 3), Some((5, "Thm 1.2")));
        assert_eq!(m_star_exact(3, 3, 1), Some((7, "Thm 1.5")));
        assert_eq!(m_star_exact(3, 4, 2), Some((6, "Thm 1.4")));
        assert_eq!(m_star_exact(3, 5, 2), Some((7, "Thm 1.1+3.1")));
        // Z exceeds the lower bound, no exact value known
        assert_eq!(m_star_exact(10, 5, 2), None);
    }

    #[test]
    fn discrepancy_only_at_352() {
        assert!(discrepancy_note(3, 5, 2).unwrap().contains("discrepancy"));
        assert_eq!(discrepancy_note(4, 5, 2), None);
        assert_eq!(discrepancy_note(3, 5, 1), None);
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
        assert_eq!(
            csv_line(&["1".into(), "x,y".into()]),
            "1,\"x,y\""
        );
    }
}
