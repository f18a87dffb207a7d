//! Command-line front end: `enumerate`, `map`, `verify` and `series`.
//!
//! Every subcommand is an adapter over the library; [`run`] returns the exit
//! code and the captured output so the binary stays a one-liner.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
//! error.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bijections::{self, BijectionError};
use crate::partition::{self, Member, Partition, PartitionClass, RootedPartition};
use crate::qseries::{self, Count, Monomial, SeriesBuilder, SeriesIdentity};
use crate::weighted::{self, IdentityId, Status, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

const DEFAULT_ORDER: usize = 60;
const DEFAULT_MAX_N: u64 = 40;
/// Enumeration oracles for series builders stop at this exponent.
pub const ORACLE_MAX_ORDER: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enum,
    Series,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Sylvester,
    SylvesterInv,
    Dyson,
    DysonInv,
    IteratedDyson,
    IteratedDysonInv,
    Tau,
    Sigma,
    SigmaInv,
    Conjugate,
    Designate,
}

#[derive(Debug, Parser)]
#[command(name = "euler-partitions", version, about = "Partition bijections and weighted Euler identities")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Truncation order for series (default 60; `verify` defaults to --max-n).
    #[arg(long, global = true)]
    pub order: Option<usize>,
    /// Largest n checked by `verify` (default 40).
    #[arg(long, global = true)]
    pub max_n: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the members of a partition class of weight n.
    Enumerate {
        n: u64,
        #[arg(value_parser = PartitionClass::from_str)]
        class: PartitionClass,
    },
    /// Apply a bijection to a partition.
    Map {
        #[arg(value_enum)]
        map: MapName,
        /// Comma-separated parts, e.g. 7,7,5,5,3,1 (the base for rooted maps).
        #[arg(default_value = "")]
        parts: String,
        /// Parameter of Dyson's map.
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        /// Root part of a rooted input.
        #[arg(long)]
        root: Option<u32>,
        /// Number of root copies.
        #[arg(long, default_value_t = 1)]
        mult: u32,
        /// 1-based part index for `designate`.
        #[arg(long)]
        index: Option<usize>,
        /// Print intermediate hooks or the Dyson chain.
        #[arg(long)]
        trace: bool,
        /// Print Young / 2-modular diagrams.
        #[arg(long)]
        diagram: bool,
    },
    /// Check identities by enumeration and/or series expansion.
    Verify {
        /// Identity ids, `oracle`, `oracle:<series>`, or `all`.
        #[arg(default_value = "all")]
        ids: Vec<String>,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        /// Print every row in text output.
        #[arg(long)]
        rows: bool,
    },
    /// Print coefficients of a generating function.
    Series {
        /// A series name, or `pochhammer` with --a/--b/--n.
        builder: String,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 1)]
        b: u64,
        #[arg(long, default_value = "inf", value_parser = Count::from_str)]
        n: Count,
        /// Use x = -q^a instead of q^a.
        #[arg(long)]
        negate: bool,
    },
}

/// Exit code plus captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }

    fn domain(err: &BijectionError) -> Self {
        Self {
            code: EXIT_DOMAIN,
            stdout: String::new(),
            stderr: format!("error: {}: {err}\n", error_kind(err)),
        }
    }
}

pub fn error_kind(err: &BijectionError) -> &'static str {
    match err {
        BijectionError::EvenPartPresent(_) => "EvenPartPresent",
        BijectionError::EmptyInput => "EmptyInput",
        BijectionError::RepeatedPart(_) => "RepeatedPart",
        BijectionError::RankTooLarge { .. } => "RankTooLarge",
        BijectionError::RankTooSmall { .. } => "RankTooSmall",
        BijectionError::NotInDomain(_) => "NotInDomain",
        BijectionError::IndexOutOfRange { .. } => "IndexOutOfRange",
        BijectionError::InternalInvariantViolation(_) => "InternalInvariantViolation",
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let format = cli.format;
    match cli.command {
        Command::Enumerate { n, class } => cmd_enumerate(n, class, format),
        Command::Map { map, parts, r, root, mult, index, trace, diagram } => {
            let input = MapInput { parts, r, root, mult, index, trace, diagram };
            cmd_map(map, &input, format)
        }
        Command::Verify { ids, method, rows } => {
            let max_n = cli.max_n.unwrap_or(DEFAULT_MAX_N);
            let order = cli.order.unwrap_or(max_n as usize);
            cmd_verify(&ids, method, max_n, order, rows, format)
        }
        Command::Series { builder, a, b, n, negate } => {
            let order = cli.order.unwrap_or(DEFAULT_ORDER);
            cmd_series(&builder, order, PochhammerArgs { a, b, n, negate }, format)
        }
    }
}

fn member_json(m: &Member) -> Value {
    let flat = m.flatten();
    let mut v = json!({
        "weight": m.weight(),
        "length": flat.len(),
        "rank": flat.rank(),
    });
    match m {
        Member::Plain(p) => v["parts"] = json!(p.parts()),
        Member::Rooted(r) => {
            v["parts"] = json!(r.base().parts());
            v["root_part"] = json!(r.root_part());
            v["root_size"] = json!(r.root_size());
        }
    }
    v
}

fn rooted_json(r: &RootedPartition) -> Value {
    json!({ "parts": r.base().parts(), "root_part": r.root_part(), "root_size": r.root_size() })
}

pub fn cmd_enumerate(n: u64, class: PartitionClass, format: OutputFormat) -> Outcome {
    let members: Vec<Member> = partition::enumerate(n, class).collect();
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let doc = json!({
                "class": class.name(),
                "n": n,
                "count": members.len(),
                "members": members.iter().map(member_json).collect::<Vec<_>>(),
            });
            out = json_line(&doc);
        }
        OutputFormat::Tsv => {
            out.push_str("partition\tweight\tlength\trank\n");
            for m in &members {
                let flat = m.flatten();
                let _ = writeln!(out, "{m}\t{}\t{}\t{}", m.weight(), flat.len(), flat.rank());
            }
        }
        OutputFormat::Text => {
            let width = members.iter().map(|m| m.to_string().len()).max().unwrap_or(0).max(9);
            let _ = writeln!(out, "# {} n={} count={}", class.name(), n, members.len());
            let _ = writeln!(out, "{:<width$}  {:>6}  {:>6}  {:>5}", "partition", "weight", "length", "rank");
            for m in &members {
                let flat = m.flatten();
                let _ = writeln!(
                    out,
                    "{:<width$}  {:>6}  {:>6}  {:>5}",
                    m.to_string(),
                    m.weight(),
                    flat.len(),
                    flat.rank()
                );
            }
        }
    }
    Outcome::ok(out)
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

/// Young diagram with `[ ]` cells.
pub fn young_diagram(p: &Partition) -> String {
    if p.is_empty() {
        return "(empty)\n".to_string();
    }
    p.parts().iter().map(|&k| "[ ]".repeat(k as usize) + "\n").collect()
}

/// 2-modular diagram with `[2]`/`[1]` cells. When `hook` is given, cells
/// outside that hook (0-based) print as ` . `.
pub fn two_modular_diagram(rows: &[u32], hook: Option<usize>) -> String {
    let mut out = String::new();
    for (i, &len) in rows.iter().enumerate() {
        for c in 0..len {
            let inside = match hook {
                None => true,
                Some(j) => (i == j && c as usize >= j) || (c as usize == j && i > j),
            };
            match (inside, bijections::two_modular_label(rows, i, c)) {
                (true, Some(label)) => {
                    let _ = write!(out, "[{label}]");
                }
                _ => out.push_str(" . "),
            }
        }
        out.push('\n');
    }
    out
}

/// Arguments of the `map` subcommand.
#[derive(Debug, Clone, Default)]
pub struct MapInput {
    pub parts: String,
    pub r: Option<i64>,
    pub root: Option<u32>,
    pub mult: u32,
    pub index: Option<usize>,
    pub trace: bool,
    pub diagram: bool,
}

enum Mapped {
    Plain(Partition),
    Rooted(RootedPartition),
}

pub fn cmd_map(map: MapName, input: &MapInput, format: OutputFormat) -> Outcome {
    let base: Partition = match input.parts.parse() {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("invalid partition {:?}: {e}", input.parts)),
    };
    let rooted_input = || -> Result<RootedPartition, Outcome> {
        let root = input.root.ok_or_else(|| Outcome::usage(format!("{map:?} needs --root")))?;
        RootedPartition::new(base.clone(), root, input.mult).map_err(|e| Outcome::usage(e.to_string()))
    };
    let mut trace_text = String::new();
    let mut trace_json = Value::Null;
    let result: Result<Mapped, BijectionError> = match map {
        MapName::Sylvester => {
            if input.trace && !base.is_empty() {
                match bijections::two_modular_hooks(&base) {
                    Ok(h) => {
                        let rows = bijections::two_modular_rows(&base).expect("odd parts checked");
                        for (j, hook) in h.hooks.iter().enumerate() {
                            let _ = writeln!(trace_text, "hook {}: cells={} twos={}", j + 1, hook.cells, hook.twos);
                            if input.diagram {
                                trace_text.push_str(&two_modular_diagram(&rows, Some(j)));
                            }
                            trace_text.push('\n');
                        }
                        trace_json = json!(h.hooks);
                    }
                    Err(e) => return Outcome::domain(&e),
                }
            }
            bijections::sylvester(&base).map(Mapped::Plain)
        }
        MapName::SylvesterInv => {
            if input.trace && !base.is_empty() {
                match bijections::hooks_from_distinct(&base) {
                    Ok(h) => {
                        for (j, hook) in h.hooks.iter().enumerate() {
                            let _ = writeln!(trace_text, "hook {}: cells={} twos={}", j + 1, hook.cells, hook.twos);
                        }
                        trace_text.push('\n');
                        trace_json = json!(h.hooks);
                    }
                    Err(e) => return Outcome::domain(&e),
                }
            }
            bijections::sylvester_inv(&base).map(Mapped::Plain)
        }
        MapName::Dyson | MapName::DysonInv => {
            let Some(r) = input.r else {
                return Outcome::usage(format!("{map:?} needs --r"));
            };
            let out = if map == MapName::Dyson {
                bijections::dyson(&base, r)
            } else {
                bijections::dyson_inv(&base, r)
            };
            out.map(Mapped::Plain)
        }
        MapName::IteratedDyson => match bijections::iterated_dyson_trace(&base) {
            Ok(trace) => {
                let l = trace.steps.len();
                for (i, (r, nu)) in trace.steps.iter().enumerate() {
                    let idx = l - i;
                    if i == 0 {
                        let _ = writeln!(trace_text, "nu^{idx} = ({r}) = {nu}");
                    } else {
                        let _ = writeln!(trace_text, "nu^{idx} = psi_{r}(nu^{}) = {nu}", idx + 1);
                    }
                    if input.diagram {
                        trace_text.push_str(&young_diagram(nu));
                        trace_text.push('\n');
                    }
                }
                trace_json = json!(trace
                    .steps
                    .iter()
                    .map(|(r, nu)| json!({ "r": r, "parts": nu.parts() }))
                    .collect::<Vec<_>>());
                Ok(Mapped::Plain(trace.result()))
            }
            Err(e) => Err(e),
        },
        MapName::IteratedDysonInv => {
            let out = bijections::iterated_dyson_inv(&base);
            if let (true, Ok(lam)) = (input.trace, &out) {
                // replay the chain forwards to show the peeled parts
                if let Ok(trace) = bijections::iterated_dyson_trace(lam) {
                    for (r, nu) in trace.steps.iter().rev() {
                        let _ = writeln!(trace_text, "peel {r} from {nu}");
                    }
                    trace_json = json!(trace
                        .steps
                        .iter()
                        .rev()
                        .map(|(r, nu)| json!({ "r": r, "parts": nu.parts() }))
                        .collect::<Vec<_>>());
                }
            }
            out.map(Mapped::Plain)
        }
        MapName::Conjugate => Ok(Mapped::Plain(base.conjugate())),
        MapName::Tau | MapName::Sigma | MapName::SigmaInv => {
            let rp = match rooted_input() {
                Ok(rp) => rp,
                Err(o) => return o,
            };
            let f = match map {
                MapName::Tau => bijections::tau,
                MapName::Sigma => bijections::sigma,
                _ => bijections::sigma_inv,
            };
            f(&rp).map(Mapped::Rooted)
        }
        MapName::Designate => {
            let Some(index) = input.index else {
                return Outcome::usage("designate needs --index");
            };
            bijections::designate(&base, index).map(Mapped::Rooted)
        }
    };
    let result = match result {
        Ok(r) => r,
        Err(e) => return Outcome::domain(&e),
    };
    let input_member = match (map, input.root) {
        (MapName::Tau | MapName::Sigma | MapName::SigmaInv, Some(root)) => {
            Member::Rooted(RootedPartition::new(base.clone(), root, input.mult).expect("validated above"))
        }
        _ => Member::Plain(base.clone()),
    };
    let name = map.to_possible_value().expect("no skipped variants").get_name().to_string();
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let input_json = match &input_member {
                Member::Plain(p) => json!({ "parts": p.parts() }),
                Member::Rooted(r) => rooted_json(r),
            };
            let output_json = match &result {
                Mapped::Plain(p) => json!({ "parts": p.parts() }),
                Mapped::Rooted(r) => rooted_json(r),
            };
            let mut doc = json!({ "map": name, "input": input_json, "output": output_json });
            if let Some(r) = input.r.filter(|_| matches!(map, MapName::Dyson | MapName::DysonInv)) {
                doc["r"] = json!(r);
            }
            if input.trace {
                doc["trace"] = trace_json;
            }
            out = json_line(&doc);
        }
        OutputFormat::Tsv => {
            let rendered = match &result {
                Mapped::Plain(p) => p.to_string(),
                Mapped::Rooted(r) => r.to_string(),
            };
            out.push_str("map\tinput\toutput\n");
            let _ = writeln!(out, "{name}\t{input_member}\t{rendered}");
        }
        OutputFormat::Text => {
            if input.trace {
                out.push_str(&trace_text);
            }
            if input.diagram {
                match (&input_member, map) {
                    (Member::Plain(p), MapName::Sylvester) if !p.is_empty() => {
                        out.push_str("input (2-modular):\n");
                        let rows = bijections::two_modular_rows(p).expect("odd parts checked");
                        out.push_str(&two_modular_diagram(&rows, None));
                    }
                    (Member::Plain(p), _) => {
                        out.push_str("input:\n");
                        out.push_str(&young_diagram(p));
                    }
                    (Member::Rooted(r), _) => {
                        let _ = writeln!(out, "input: {r}");
                    }
                }
                if let Mapped::Plain(p) = &result {
                    out.push_str("output:\n");
                    out.push_str(&young_diagram(p));
                }
            }
            match &result {
                Mapped::Plain(p) => {
                    let _ = writeln!(out, "{p}");
                }
                Mapped::Rooted(r) => {
                    let _ = writeln!(out, "{r}");
                }
            }
        }
    }
    Outcome::ok(out)
}

/// One check requested by `verify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Check {
    Enumeration(IdentityId),
    Series(SeriesIdentity),
    Oracle(SeriesBuilder),
}

/// Expands the requested ids into checks for the chosen method.
pub fn resolve_checks(ids: &[String], method: Method) -> Result<Vec<Check>, String> {
    let use_enum = method != Method::Series;
    let use_series = method != Method::Enum;
    let mut checks = Vec::new();
    for raw in ids {
        let id = raw.trim().to_ascii_lowercase();
        let mut found = Vec::new();
        if id == "all" {
            if use_enum {
                found.extend(IdentityId::ALL.map(Check::Enumeration));
            }
            if use_series {
                found.extend(SeriesIdentity::ALL.map(Check::Series));
                found.extend(SeriesBuilder::ALL.map(Check::Oracle));
            }
        } else if id == "oracle" {
            if use_series {
                found.extend(SeriesBuilder::ALL.map(Check::Oracle));
            }
        } else if let Some(name) = id.strip_prefix("oracle:") {
            let b = name.parse::<SeriesBuilder>().map_err(|e| e.to_string())?;
            if use_series {
                found.push(Check::Oracle(b));
            }
        } else {
            if let (true, Ok(e)) = (use_enum, id.parse::<IdentityId>()) {
                found.push(Check::Enumeration(e));
            }
            if let (true, Ok(s)) = (use_series, id.parse::<SeriesIdentity>()) {
                found.push(Check::Series(s));
            }
        }
        if found.is_empty() {
            return Err(format!("unknown identity {raw:?} for method {method:?}"));
        }
        for c in found {
            if !checks.contains(&c) {
                checks.push(c);
            }
        }
    }
    Ok(checks)
}

/// Runs every check; series checks use `order`, enumeration uses `1..=max_n`.
pub fn run_checks(checks: &[Check], max_n: u64, order: usize) -> Result<Vec<VerificationReport>, String> {
    checks
        .iter()
        .map(|c| match c {
            Check::Enumeration(id) => weighted::verify_theorem(*id, max_n).map_err(|e| e.to_string()),
            Check::Series(id) => qseries::verify_series(*id, order).map_err(|e| format!("{id}: {e}")),
            Check::Oracle(b) => {
                qseries::verify_builder_oracle(*b, order.min(ORACLE_MAX_ORDER)).map_err(|e| format!("{b}: {e}"))
            }
        })
        .collect()
}

pub fn cmd_verify(ids: &[String], method: Method, max_n: u64, order: usize, rows: bool, format: OutputFormat) -> Outcome {
    if max_n == 0 || order == 0 {
        return Outcome::usage("--max-n and --order must be at least 1");
    }
    let checks = match resolve_checks(ids, method) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(e),
    };
    let reports = match run_checks(&checks, max_n, order) {
        Ok(r) => r,
        Err(e) => {
            return Outcome { code: EXIT_VERIFY_FAILED, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    };
    let all_pass = reports.iter().all(|r| r.passed());
    let out = render_reports(&reports, rows, format);
    Outcome { code: if all_pass { EXIT_OK } else { EXIT_VERIFY_FAILED }, stdout: out, stderr: String::new() }
}

pub fn report_json(r: &VerificationReport) -> Value {
    let first_failure = match &r.status {
        Status::Pass => Value::Null,
        Status::FailAt { n, lhs, rhs } => json!({ "n": n, "lhs": lhs, "rhs": rhs }),
    };
    json!({
        "identity": r.identity,
        "method": r.method,
        "n_min": r.n_range.0,
        "n_max": r.n_range.1,
        "pass": r.passed(),
        "first_failure": first_failure,
        "detail": r.detail,
        "rows": r.rows().map(|(n, l, rr)| json!({
            "n": n,
            "lhs": l.to_string(),
            "rhs": rr.to_string(),
            "pass": l == rr,
        })).collect::<Vec<_>>(),
    })
}

pub fn render_reports(reports: &[VerificationReport], rows: bool, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            let doc = json!({
                "pass": reports.iter().all(|r| r.passed()),
                "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            });
            out = json_line(&doc);
        }
        OutputFormat::Tsv => {
            out.push_str("identity\tmethod\tn\tlhs\trhs\tpass\n");
            for r in reports {
                for (n, l, rr) in r.rows() {
                    let _ = writeln!(out, "{}\t{}\t{n}\t{l}\t{rr}\t{}", r.identity, r.method, l == rr);
                }
            }
        }
        OutputFormat::Text => {
            let id_w = reports.iter().map(|r| r.identity.len()).max().unwrap_or(8).max(8);
            let val_w = reports
                .iter()
                .flat_map(|r| r.lhs_values.iter().chain(&r.rhs_values))
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(3)
                .max(3);
            let _ = writeln!(
                out,
                "{:<id_w$}  {:<6}  {:>9}  {:>val_w$}  {:>val_w$}  status",
                "identity", "method", "n", "lhs", "rhs"
            );
            for r in reports {
                let (n, lhs, rhs, status) = match &r.status {
                    Status::Pass => {
                        let (n, l, rr) = r.rows().last().expect("nonempty report");
                        (n, l.to_string(), rr.to_string(), "PASS".to_string())
                    }
                    Status::FailAt { n, lhs, rhs } => (*n, lhs.clone(), rhs.clone(), "FAIL".to_string()),
                };
                let range = format!("{}..{}", r.n_range.0, r.n_range.1);
                let _ = writeln!(
                    out,
                    "{:<id_w$}  {:<6}  {:>9}  {:>val_w$}  {:>val_w$}  {status} at n={n}",
                    r.identity, r.method, range, lhs, rhs
                );
                if let Some(d) = &r.detail {
                    let _ = writeln!(out, "    {d}");
                }
                if rows {
                    for (n, l, rr) in r.rows() {
                        let mark = if l == rr { "ok" } else { "MISMATCH" };
                        let _ = writeln!(out, "    n={n:<4} lhs={l} rhs={rr} {mark}");
                    }
                }
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            let _ = writeln!(out, "{} checks, {} failed", reports.len(), failed);
        }
    }
    out
}

#[derive(Debug, Clone, Copy)]
pub struct PochhammerArgs {
    pub a: i64,
    pub b: u64,
    pub n: Count,
    pub negate: bool,
}

pub fn cmd_series(builder: &str, order: usize, poch: PochhammerArgs, format: OutputFormat) -> Outcome {
    if order == 0 {
        return Outcome::usage("--order must be at least 1");
    }
    let (name, series) = if builder.eq_ignore_ascii_case("pochhammer") {
        let x = Monomial { coeff: if poch.negate { -1 } else { 1 }, exp: poch.a };
        match qseries::pochhammer(x, poch.b, poch.n, order) {
            Ok(s) => ("pochhammer".to_string(), s),
            Err(e) => return Outcome::usage(e.to_string()),
        }
    } else {
        let b = match builder.parse::<SeriesBuilder>() {
            Ok(b) => b,
            Err(e) => return Outcome::usage(e.to_string()),
        };
        match b.build(order) {
            Ok(s) => (b.name().to_string(), s),
            Err(e) => return Outcome::usage(e.to_string()),
        }
    };
    let coeffs = series.coefficient_strings();
    let mut out = String::new();
    match format {
        OutputFormat::Json => {
            out = json_line(&json!({ "series": name, "order": order, "coefficients": coeffs }));
        }
        OutputFormat::Tsv => {
            out.push_str("k\tcoefficient\n");
            for (k, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{k}\t{c}");
            }
        }
        OutputFormat::Text => {
            let _ = writeln!(out, "{}", coeffs.join(","));
            let _ = writeln!(out, "{series}");
        }
    }
    Outcome::ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run(std::iter::once("euler-partitions").chain(args.iter().copied()))
    }

    #[test]
    fn worked_maps() {
        assert_eq!(run_args(&["map", "sylvester", "7,7,5,5,3,1"]).stdout, "9,7,6,4,2\n");
        assert_eq!(run_args(&["map", "dyson", "--r", "1", "5,4,3,3,2,1"]).stdout, "7,4,3,2,2,1\n");
        let o = run_args(&["map", "iterated-dyson", "5,5,3,3,1", "--trace"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.ends_with("8,6,2,1\n"), "{}", o.stdout);
        assert!(o.stdout.contains("nu^1 = psi_5(nu^2) = 8,6,2,1"));
    }

    #[test]
    fn domain_errors_exit_three() {
        let o = run_args(&["map", "sylvester", "4,1"]);
        assert_eq!(o.code, EXIT_DOMAIN);
        assert!(o.stderr.contains("EvenPartPresent"));
        let o = run_args(&["map", "tau", "3", "--root", "1"]);
        assert_eq!(o.code, EXIT_DOMAIN);
        assert!(o.stderr.contains("NotInDomain"));
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_args(&["map", "sylvester", "1,3"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "eq1", "--max-n", "0"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["verify", "nope"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["enumerate", "4", "bogus"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["series", "bogus"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["map", "dyson", "3"]).code, EXIT_USAGE);
        assert_eq!(run_args(&["frobnicate"]).code, EXIT_USAGE);
    }

    #[test]
    fn rooted_maps() {
        assert_eq!(run_args(&["map", "tau", "2", "--root", "2"]).stdout, "2~+2~\n");
        assert_eq!(run_args(&["map", "sigma", "2,1", "--root", "1"]).stdout, "3+1~\n");
        assert_eq!(run_args(&["map", "sigma-inv", "1", "--root", "3"]).stdout, "1~+1~+1~+1\n");
        assert_eq!(run_args(&["map", "designate", "3,1", "--index", "2"]).stdout, "3+1~\n");
    }

    #[test]
    fn enumerate_listing() {
        let o = run_args(&["enumerate", "4", "rooted-all"]);
        assert_eq!(o.code, 0);
        // comment line + header + 12 rows
        assert_eq!(o.stdout.lines().count(), 14);
        let o = run_args(&["enumerate", "0", "all", "--format", "tsv"]);
        assert_eq!(o.stdout, "partition\tweight\tlength\trank\n()\t0\t0\t0\n");
    }

    #[test]
    fn series_listing() {
        assert_eq!(run_args(&["series", "rank-parity", "--order", "2"]).stdout.lines().next(), Some("1,1,-1"));
        let o = run_args(&["series", "pochhammer", "--a", "1", "--b", "1", "--n", "inf", "--order", "3"]);
        assert_eq!(o.stdout.lines().next(), Some("1,-1,-1,0"));
        let o = run_args(&["series", "gf-rooted-distinct", "--order", "4"]);
        assert_eq!(o.stdout.lines().next(), Some("0,1,1,3,3"));
    }

    #[test]
    fn verify_small() {
        let o = run_args(&["verify", "thm1", "--max-n", "4", "--method", "enum"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("PASS at n=4"));
        let line = o.stdout.lines().nth(1).unwrap();
        let fields: Vec<&str> = line.split_whitespace().collect();
        assert_eq!(&fields[..5], ["thm1", "enum", "1..4", "12", "12"]);
    }

    #[test]
    fn resolve_ids() {
        let ids = vec!["lem2".to_string()];
        let both = resolve_checks(&ids, Method::Both).unwrap();
        assert_eq!(both, [Check::Enumeration(IdentityId::Lem2), Check::Series(SeriesIdentity::Lem2)]);
        assert_eq!(resolve_checks(&["eq1".into()], Method::Enum).unwrap_err(), "unknown identity \"eq1\" for method Enum");
        let all = resolve_checks(&["all".into()], Method::Both).unwrap();
        assert_eq!(all.len(), IdentityId::ALL.len() + SeriesIdentity::ALL.len() + SeriesBuilder::ALL.len());
    }
}
