//! `qcpn` command-line interface.
//!
//! Every command prints a JSON envelope
//! `{"command", "params", "result", "version"}` on standard output; integers
//! are decimal strings. Exit status is 0 on success, 1 on a domain error or
//! a failed check, 2 on a usage error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcpn_core::qsphere::{
    fuzz_confluence_with, parse_nc_infer, reduce, spectral_decomposition, ReductionReport, DEFAULT_STEP_CAP,
};
use qcpn_core::{
    associated_class, certify_basis, check_determinant_condition, e_class, fundamental_decomposition, line_class,
    pair_vector, parse_nc, restrict, u1_degree, verify_defining_relations, Error, KClass, RuleSet, SphereRule,
    Strategy,
};
use serde_json::{json, Value};

pub const STEP_CAP_ENV: &str = "QCPN_STEP_CAP";

#[derive(Debug, Parser)]
#[command(name = "qcpn", version, about = "K-theory of quantum projective spaces and quantum-sphere normal ordering")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify that E^n_0..E^n_n is a Z-basis: matrix, determinant, inverse.
    Kbasis {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classes of line bundles and associated vector bundles.
    Kclass {
        #[command(subcommand)]
        kind: KclassCommand,
    },
    /// Index pairings <[mu_k], c> for k = 0..n.
    Pair {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Push a class on CP^n_q forward to CP^k_q (truncation in t).
    Restrict {
        #[arg(long)]
        n: usize,
        #[arg(long = "to")]
        target: usize,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Quantum sphere algebra: normal ordering and checks.
    Nc {
        #[command(subcommand)]
        command: NcCommand,
    },
}

#[derive(Debug, Subcommand)]
enum KclassCommand {
    /// [L^n_m] = (1 - t)^m, so [L_1] = 1 - t and [L_-1] = 1 + t + ... + t^n.
    /// Sign convention: L_m here is the bundle that the opposite convention
    /// labels with index -m.
    Line {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Bundle associated with the fundamental corepresentation of SU_q(M).
    Assoc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        su: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Subcommand)]
enum NcCommand {
    /// Normal form of an expression.
    Reduce {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        expr: String,
        #[arg(long, value_enum, default_value_t = RulesArg::Completed)]
        sphere_rule: RulesArg,
    },
    /// Circle degree of an expression.
    Degree {
        #[arg(long)]
        expr: String,
    },
    /// Compare leftmost-innermost and random redex choice on random words.
    Fuzz {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = RulesArg::Completed)]
        sphere_rule: RulesArg,
    },
    /// Check that the defining relations and their phi-images reduce to 0.
    Relations {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RulesArg {
    /// R1-R4, sphere rule across star runs.
    Completed,
    /// R1-R4, sphere rule on adjacent z0s*z0 only.
    Adjacent,
    /// R1-R3 only.
    None,
}

impl RulesArg {
    fn sphere(self) -> SphereRule {
        match self {
            RulesArg::Completed => SphereRule::Completed,
            RulesArg::Adjacent => SphereRule::Adjacent,
            RulesArg::None => SphereRule::None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            RulesArg::Completed => "completed",
            RulesArg::Adjacent => "adjacent",
            RulesArg::None => "none",
        }
    }
}

/// Exactly one way of naming a class.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ClassArgs {
    /// Line bundle [L_M].
    #[arg(long, allow_negative_numbers = true)]
    line: Option<i64>,
    /// Basis class E^n_M.
    #[arg(long)]
    e: Option<usize>,
    /// Associated bundle [F^n_M].
    #[arg(long)]
    assoc: Option<usize>,
    /// Explicit t-coefficients, comma separated (missing ones are zero).
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
}

impl ClassArgs {
    fn build(&self, n: usize) -> Result<(KClass, Value), Failure> {
        if let Some(m) = self.line {
            return Ok((line_class(n, m), json!({"line": m})));
        }
        if let Some(m) = self.e {
            return Ok((e_class(n, m)?, json!({"e": m})));
        }
        if let Some(m) = self.assoc {
            let d = fundamental_decomposition(n, m)?;
            return Ok((associated_class(n, &d.to_weights()?)?, json!({"assoc": m})));
        }
        let text = self.coeffs.as_deref().unwrap_or_default();
        let parsed = text
            .split(',')
            .map(|s| s.trim().parse::<qcpn_core::BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::Usage(format!("--coeffs: {e}")))?;
        if parsed.len() > n + 1 {
            return Err(Failure::Usage(format!("--coeffs: {} coefficients exceed degree n = {n}", parsed.len())));
        }
        Ok((KClass::from_coeffs(n, parsed), json!({"coeffs": text})))
    }
}

/// Rendered output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

enum Payload {
    Json { command: &'static str, params: Value, result: Value },
    Csv(String),
    /// A check that ran to completion but did not pass.
    FailedCheck { command: &'static str, params: Value, result: Value },
}

fn envelope(command: &str, params: Value, result: Value) -> String {
    let doc = json!({
        "command": command,
        "params": params,
        "result": result,
        "version": env!("CARGO_PKG_VERSION"),
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
    s.push('\n');
    s
}

fn strings(v: &[qcpn_core::BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn csv_row(v: &[qcpn_core::BigInt]) -> String {
    strings(v).join(",")
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn report_payload(command: &'static str, params: Value, report: &ReductionReport) -> Payload {
    let mut result = to_value(report);
    result["passed"] = json!(report.passed());
    if report.passed() {
        Payload::Json { command, params, result }
    } else {
        Payload::FailedCheck { command, params, result }
    }
}

fn execute(cli: Cli, step_cap: u64) -> Result<Payload, Failure> {
    match cli.command {
        Command::Kbasis { n, format } => {
            let cert = certify_basis(n)?;
            match format {
                Format::Json => Ok(Payload::Json {
                    command: "kbasis",
                    params: json!({"n": n}),
                    result: to_value(&cert),
                }),
                Format::Csv => {
                    let mut out = String::new();
                    for row in cert.matrix.row_vecs() {
                        writeln!(out, "{}", csv_row(&row)).unwrap();
                    }
                    Ok(Payload::Csv(out))
                }
            }
        }
        Command::Kclass { kind: KclassCommand::Line { n, m, format } } => {
            let c = line_class(n, m);
            match format {
                Format::Json => Ok(Payload::Json {
                    command: "kclass line",
                    params: json!({"n": n, "m": m}),
                    result: json!({"class": c, "text": c.to_string()}),
                }),
                Format::Csv => Ok(Payload::Csv(format!("{}\n", csv_row(c.coeffs())))),
            }
        }
        Command::Kclass { kind: KclassCommand::Assoc { n, su, format } } => {
            let decomposition = fundamental_decomposition(n, su)?;
            let weights = decomposition.to_weights()?;
            let c = associated_class(n, &weights)?;
            match format {
                Format::Json => Ok(Payload::Json {
                    command: "kclass assoc",
                    params: json!({"n": n, "su": su}),
                    result: json!({
                        "weights": weights,
                        "determinant_condition": check_determinant_condition(&weights),
                        "decomposition": decomposition
                            .parts()
                            .iter()
                            .map(|(label, mult)| json!({"label": label, "multiplicity": mult}))
                            .collect::<Vec<_>>(),
                        "decomposition_text": decomposition.to_string(),
                        "class": c,
                        "text": c.to_string(),
                    }),
                }),
                Format::Csv => Ok(Payload::Csv(format!("{}\n", csv_row(c.coeffs())))),
            }
        }
        Command::Pair { n, class, format } => {
            let (c, selector) = class.build(n)?;
            let v = pair_vector(&c);
            match format {
                Format::Json => Ok(Payload::Json {
                    command: "pair",
                    params: json!({"n": n, "class": selector}),
                    result: json!({"n": n, "class": c, "pairings": strings(&v.values)}),
                }),
                Format::Csv => Ok(Payload::Csv(format!("{}\n", csv_row(&v.values)))),
            }
        }
        Command::Restrict { n, target, class } => {
            let (c, selector) = class.build(n)?;
            let r = restrict(&c, target)?;
            Ok(Payload::Json {
                command: "restrict",
                params: json!({"n": n, "to": target, "class": selector}),
                result: json!({"from": c, "to": r, "text": r.to_string()}),
            })
        }
        Command::Nc { command } => execute_nc(command, step_cap),
    }
}

fn execute_nc(command: NcCommand, step_cap: u64) -> Result<Payload, Failure> {
    match command {
        NcCommand::Reduce { n, expr, sphere_rule } => {
            let p = parse_nc(&expr, n)?;
            let rules = RuleSet::new(n, sphere_rule.sphere());
            let r = reduce(&p, &rules, &mut Strategy::LeftmostInnermost, step_cap)?;
            Ok(Payload::Json {
                command: "nc reduce",
                params: json!({"n": n, "expr": expr, "sphere_rule": sphere_rule.name()}),
                result: json!({
                    "normal_form": r.poly.to_string(),
                    "degree": u1_degree(&r.poly),
                    "steps": r.steps,
                }),
            })
        }
        NcCommand::Degree { expr } => {
            let p = parse_nc_infer(&expr)?;
            let components: Vec<i64> = spectral_decomposition(&p).into_keys().collect();
            Ok(Payload::Json {
                command: "nc degree",
                params: json!({"expr": expr}),
                result: json!({
                    "expr": p.to_string(),
                    "degree": u1_degree(&p),
                    "components": components,
                }),
            })
        }
        NcCommand::Fuzz { n, max_len, trials, seed, sphere_rule } => {
            let rules = RuleSet::new(n, sphere_rule.sphere());
            let report = fuzz_confluence_with(&rules, max_len, trials, seed, step_cap)?;
            let params = json!({
                "n": n,
                "max_len": max_len,
                "trials": trials,
                "seed": seed,
                "sphere_rule": sphere_rule.name(),
            });
            Ok(report_payload("nc fuzz", params, &report))
        }
        NcCommand::Relations { n } => {
            if n < 1 {
                return Err(Failure::Domain("n must be >= 1".into()));
            }
            let report = verify_defining_relations(n);
            Ok(report_payload("nc relations", json!({"n": n}), &report))
        }
    }
}

fn step_cap_from(env: Option<String>) -> Result<u64, String> {
    match env {
        None => Ok(DEFAULT_STEP_CAP),
        Some(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|e| format!("{STEP_CAP_ENV}={s:?}: {e}")),
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, step_cap_env: Option<String>) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Output { code, stdout: text, stderr: String::new() }
            } else {
                Output { code: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    let step_cap = match step_cap_from(step_cap_env) {
        Ok(c) => c,
        Err(msg) => return Output { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    };
    match execute(cli, step_cap) {
        Ok(Payload::Json { command, params, result }) => {
            Output { code: 0, stdout: envelope(command, params, result), stderr: String::new() }
        }
        Ok(Payload::Csv(text)) => Output { code: 0, stdout: text, stderr: String::new() },
        Ok(Payload::FailedCheck { command, params, result }) => Output {
            code: 1,
            stdout: envelope(command, params, result),
            stderr: format!("error: {command} check failed\n"),
        },
        Err(Failure::Domain(msg)) => Output { code: 1, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Usage(msg)) => Output { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}
