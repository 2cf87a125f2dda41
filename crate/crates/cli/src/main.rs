//! Command-line driver for the cohomology engine.
//!
//! Exit codes: 0 success (and all verifications passed), 1 verification
//! failure, 2 usage or parse error.

use bbw_cli::{parser, report};

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use bbw::bundles::Space;
use bbw::cohom::{cohomology, ext};
use bbw::hilbert;
use bbw::hpd;
use bbw::pushforward;
use bbw::verify;
use bbw::weights::{bbw_reduce, BbwOutcome, Weight};

use report::Report;

#[derive(Parser)]
#[command(
    name = "bbw",
    version,
    about = "Exact Borel-Bott-Weil cohomology on Grassmannians with Pfaffian duality bookkeeping"
)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a GL(n) weight: the cohomology of the corresponding line
    /// bundle on the full flag variety.
    Bbw {
        #[arg(long)]
        rank: usize,
        /// Comma-separated integers, e.g. 1,1,0,0,0,0
        #[arg(long)]
        weight: String,
    },
    /// Cohomology of a bundle expression on a space.
    Cohomology {
        /// gr(k,n) or ty(n)
        #[arg(long)]
        space: String,
        expr: String,
    },
    /// Ext groups between two bundle expressions.
    Ext {
        #[arg(long)]
        space: String,
        source: String,
        target: String,
    },
    /// Pushforward of E ⊗ O(t·H_Y) along the resolution fibration.
    Pushforward {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        twist: i64,
        /// Expression on the base Gr(n−4, n); defaults to O.
        expr: Option<String>,
    },
    /// Hilbert polynomial, dimension and degree of gr(k,n), or of the
    /// Pfaffian through ty(n) / pf(n).
    Hilbert {
        #[arg(long)]
        space: String,
    },
    /// Dimension and codimension of the Pfaffian stratum Pf(2t, W*).
    Pfaffian {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
    },
    /// The pair of semiorthogonal decompositions for dual linear sections.
    HpdCase {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
    },
    /// Run a verification suite: ldx6, ldx7, fkl6, fkl7, gsk-chi6,
    /// gsk-chi7, or all.
    Verify {
        #[arg(long)]
        suite: String,
    },
}

fn parse_space(text: &str) -> Result<Space, String> {
    let text = text.trim();
    let parse_args = |body: &str| -> Result<Vec<usize>, String> {
        body.split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("bad number in space `{text}`"))
            })
            .collect()
    };
    if let Some(body) = text.strip_prefix("gr(").and_then(|s| s.strip_suffix(')')) {
        let args = parse_args(body)?;
        if args.len() != 2 {
            return Err(format!("gr takes two arguments, got `{text}`"));
        }
        return Space::grassmannian(args[0], args[1]).map_err(|e| e.to_string());
    }
    for prefix in ["ty(", "pf("] {
        if let Some(body) = text.strip_prefix(prefix).and_then(|s| s.strip_suffix(')')) {
            let args = parse_args(body)?;
            if args.len() != 1 {
                return Err(format!("{prefix}..) takes one argument, got `{text}`"));
            }
            return Space::resolution(args[0]).map_err(|e| e.to_string());
        }
    }
    Err(format!(
        "unknown space `{text}`; expected gr(k,n), ty(n), or pf(n)"
    ))
}

fn emit(out: &Option<PathBuf>, payload: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, payload).map_err(|e| format!("cannot write {path:?}: {e}")),
        None => {
            print!("{payload}");
            Ok(())
        }
    }
}

/// 0 when every log passed, 1 otherwise.
fn exit_for(logs: &[verify::VerificationLog]) -> u8 {
    if logs.iter().all(|l| l.is_success()) {
        0
    } else {
        1
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    // the projectivization convention is pinned before anything else runs
    pushforward::convention_self_test(6).map_err(|e| e.to_string())?;
    pushforward::convention_self_test(7).map_err(|e| e.to_string())?;

    match &cli.cmd {
        Cmd::Bbw { rank, weight } => {
            let w = Weight::parse(weight).map_err(|e| e.to_string())?;
            if w.rank() != *rank {
                return Err(format!(
                    "weight has {} entries, --rank says {rank}",
                    w.rank()
                ));
            }
            let outcome = bbw_reduce(&w);
            let result = match &outcome {
                BbwOutcome::Zero => json!({ "zero": true }),
                BbwOutcome::NonZero { degree, weight } => json!({
                    "zero": false,
                    "degree": degree,
                    "weight": weight,
                    "on": "V*",
                }),
            };
            let rep = Report::ok(
                format!("bbw --rank {rank} --weight {weight}"),
                json!({ "rank": rank, "weight": weight }),
                result,
            );
            let text = match &outcome {
                BbwOutcome::Zero => "H^*(X, L_a) = 0 (repeated entry in a + rho)\n".to_string(),
                BbwOutcome::NonZero { degree, weight } => {
                    format!("H^{degree}(X, L_a) = S[{weight}]V*\n")
                }
            };
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(0)
        }
        Cmd::Cohomology { space, expr } => {
            let sp = parse_space(space)?;
            let parsed = parser::parse_bundle(expr, sp).map_err(|e| e.to_string())?;
            let answer = cohomology(&parsed.object).map_err(|e| e.to_string())?;
            let rep = Report::ok(
                format!("cohomology --space {space} {expr}"),
                json!({ "space": space, "expr": parsed.ast.to_string(), "warnings": parsed.warnings }),
                &answer,
            );
            let text = format!("H^*({sp}, {}) = {}\n", parsed.ast, describe_answer(&answer));
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(0)
        }
        Cmd::Ext {
            space,
            source,
            target,
        } => {
            let sp = parse_space(space)?;
            let a = parser::parse_bundle(source, sp).map_err(|e| e.to_string())?;
            let b = parser::parse_bundle(target, sp).map_err(|e| e.to_string())?;
            let answer = ext(&a.object, &b.object).map_err(|e| e.to_string())?;
            let rep = Report::ok(
                format!("ext --space {space} {source} {target}"),
                json!({
                    "space": space,
                    "source": a.ast.to_string(),
                    "target": b.ast.to_string(),
                    "warnings": [a.warnings, b.warnings],
                }),
                &answer,
            );
            let text = format!(
                "Ext^*({}, {}) = {}\n",
                a.ast,
                b.ast,
                describe_answer(&answer)
            );
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(0)
        }
        Cmd::Pushforward { n, twist, expr } => {
            if *n < 6 {
                return Err(format!("the resolution fibration needs n >= 6, got {n}"));
            }
            let base = Space::grassmannian(n - 4, *n).map_err(|e| e.to_string())?;
            let text_expr = expr.clone().unwrap_or_else(|| "O".to_string());
            let parsed = parser::parse_bundle(&text_expr, base).map_err(|e| e.to_string())?;
            let pushed =
                pushforward::pushforward(*n, *twist, &parsed.object).map_err(|e| e.to_string())?;
            let rep = Report::ok(
                format!("pushforward --n {n} --twist {twist} {text_expr}"),
                json!({ "n": n, "twist": twist, "expr": parsed.ast.to_string() }),
                &pushed,
            );
            let text = format!("zeta_*({} ({twist}Y)) = {pushed}\n", parsed.ast);
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(0)
        }
        Cmd::Hilbert { space } => {
            let data = if let Some(body) = space
                .trim()
                .strip_prefix("gr(")
                .and_then(|s| s.strip_suffix(')'))
            {
                let args: Vec<usize> = body
                    .split(',')
                    .map(|s| s.trim().parse().map_err(|_| format!("bad space `{space}`")))
                    .collect::<Result<_, _>>()?;
                if args.len() != 2 {
                    return Err(format!("gr takes two arguments, got `{space}`"));
                }
                hilbert::grassmannian(args[0], args[1]).map_err(|e| e.to_string())?
            } else {
                match parse_space(space)? {
                    Space::Resolution { n } => hilbert::pfaffian(n).map_err(|e| e.to_string())?,
                    Space::Grassmannian(_) => unreachable!("gr handled above"),
                }
            };
            let rep = Report::ok(
                format!("hilbert --space {space}"),
                json!({ "space": space }),
                &data,
            );
            let text = format!(
                "dim = {}, degree = {}, P(t) = {}\n",
                data.dim, data.degree, data.polynomial
            );
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(0)
        }
        Cmd::Pfaffian { n, t } => {
            if 2 * t > *n {
                return Err(format!("stratum parameter t = {t} exceeds n/2"));
            }
            let s = hpd::pfaffian_stratum(*n, *t);
            let rep = Report::ok(
                format!("pfaffian --n {n} --t {t}"),
                json!({ "n": n, "t": t }),
                &s,
            );
            let text = format!(
                "Pf({}, W*) in P^{}: dim = {}, codim = {}{}\n",
                2 * t,
                s.ambient_dim,
                s.dim,
                s.codim,
                match s.hypersurface_degree {
                    Some(d) => format!(", hypersurface of degree {d}"),
                    None => String::new(),
                }
            );
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(0)
        }
        Cmd::HpdCase { n, r } => {
            let case = hpd::section_decompositions(*n, *r).map_err(|e| e.to_string())?;
            let rep = Report::ok(
                format!("hpd-case --n {n} --r {r}"),
                json!({ "n": n, "r": r }),
                &case,
            );
            let text = report::render_section_markdown(&case);
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(0)
        }
        Cmd::Verify { suite } => {
            let logs = verify::suite_by_name(suite).map_err(|e| e.to_string())?;
            let code = exit_for(&logs);
            let status = if code == 0 {
                "ok"
            } else {
                "verification-failed"
            };
            let rep = Report::with_status(
                format!("verify --suite {suite}"),
                json!({ "suite": suite }),
                status,
                &logs,
            );
            let text = report::render_logs_text(&logs);
            emit(&cli.out, &if cli.json { rep.to_json() } else { text })?;
            Ok(code)
        }
    }
}

fn describe_answer(answer: &bbw::cohom::ExtAnswer) -> String {
    match answer {
        bbw::cohom::ExtAnswer::Exact(g) if g.is_zero() => "0 (exact)".to_string(),
        bbw::cohom::ExtAnswer::Exact(g) => {
            let parts: Vec<String> = g
                .degrees()
                .map(|(d, rep)| format!("degree {d}: {rep}"))
                .collect();
            format!("exact; {}", parts.join("; "))
        }
        bbw::cohom::ExtAnswer::Bounds { euler, .. } => {
            format!("bounds only (possible cancellation); euler = {euler}")
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bbw::verify::{ClaimRecord, Method, VerificationLog};

    #[test]
    fn exit_code_mapping() {
        let pass = VerificationLog {
            suite: "x".into(),
            records: vec![ClaimRecord {
                claim: "a".into(),
                method: Method::Direct,
                pass: true,
                note: None,
            }],
        };
        let mut fail = pass.clone();
        fail.records[0].pass = false;
        assert_eq!(exit_for(&[pass.clone()]), 0);
        assert_eq!(exit_for(&[pass, fail]), 1);
    }

    #[test]
    fn space_parsing() {
        assert!(parse_space("gr(2,6)").is_ok());
        assert!(parse_space("ty(7)").is_ok());
        assert!(parse_space("pf(6)").is_ok());
        assert!(parse_space("gr(0,6)").is_err());
        assert!(parse_space("spec(1)").is_err());
    }
}
