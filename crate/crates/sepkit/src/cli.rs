//! Command-line front end. `run` does all the work and returns what the binary should
//! print plus its exit code, so the whole contract is testable in-process.
//!
//! Exit codes: 0 all requested checks pass, 1 usage error, 2 size bound exceeded,
//! 3 a verification failed (the report is still printed).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::closedforms::hstar_closed;
use crate::clroots::{interlaces_on_cl, is_cl, refine_root, ClError, RootCertificate};
use crate::exactpoly::{rat_to_string, HStar, Rat};
use crate::graphmodel::Signature;
use crate::groebner::{
    build_basis, buchberger_verify, k222_order_scan, leading_term_consistency, reducedness_check, tails_standard,
    GroebnerError, Kind, DEFAULT_EDGE_BOUND,
};
use crate::oracle::{count_lattice_points, hstar_oracle, OracleConfig, OracleError};
use crate::recursion::{
    conjecture_scan, corollary_scan, ehrhart_of, hkm_rows, relation_row, reproduce_known_relations, ConjectureMode,
    RecursionError, RelationRow,
};
use crate::triangulate::{hstar_triangulation, TriangulationConfig, TriangulationError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BOUND: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

/// Largest Σa_i for which `gb` will build the basis at all.
pub const GB_MAX_TOTAL: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "sepkit", version, about = "Exact Ehrhart invariants of symmetric edge polytopes of complete multipartite graphs")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized scans.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Size bound: Σa_i for hstar/roots, edge count for gb S-pair checks.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Include wall-clock timing in the envelope (breaks byte-stability).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Formula,
    Triangulation,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    Reduced,
    Degree,
    Lead,
    Buchberger,
    K222,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScanKind {
    Conjecture,
    K222,
    Relations,
    Corollary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Literal,
    Apex,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// h*-polynomial by closed form, triangulation and/or lattice-point oracle.
    Hstar {
        #[arg(long)]
        signature: Signature,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Also print lattice-point counts of the dilates 0..=K.
        #[arg(long)]
        max_dilation: Option<usize>,
    },
    /// Certified root table of the Ehrhart polynomial along Re z = −1/2.
    Roots {
        #[arg(long)]
        signature: Signature,
    },
    /// Certify E_a ⋖ E_b along the canonical line.
    Interlace {
        #[arg(long)]
        a: Signature,
        #[arg(long)]
        b: Signature,
    },
    /// Solve a recursive relation: a..j, hkm, cor1, cor2 or all.
    Recursion {
        #[arg(long)]
        relation: String,
        #[arg(long)]
        n: usize,
        /// First class size for cor1/cor2.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Gröbner basis checks.
    Gb {
        #[arg(long)]
        signature: Signature,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "reduced,degree,lead")]
        checks: Vec<Check>,
        /// Number of random edge orders for the k222 check.
        #[arg(long, default_value_t = 100)]
        orders: usize,
    },
    /// Batch scans.
    Scan {
        #[arg(long, value_enum)]
        kind: ScanKind,
        #[arg(long, default_value_t = 6)]
        max_total: usize,
        /// Total up to which the closed-form families join the conjecture scan.
        #[arg(long, default_value_t = 12)]
        family_total: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "apex")]
        mode: Mode,
        #[arg(long, default_value_t = 100)]
        orders: usize,
    },
}

/// What the binary prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(code: i32, msg: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
    }
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Bound(String),
}

impl From<TriangulationError> for Failure {
    fn from(e: TriangulationError) -> Self {
        match e {
            TriangulationError::SizeExceeded { .. } => Failure::Bound(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::SizeExceeded { .. } => Failure::Bound(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::SizeExceeded { .. } => Failure::Bound(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<RecursionError> for Failure {
    fn from(e: RecursionError) -> Self {
        match e {
            RecursionError::Unavailable(_) => Failure::Bound(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

/// A finished command before formatting.
struct Report {
    parameters: Value,
    method: Option<String>,
    result: Value,
    csv: String,
    plain: String,
    ok: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    parameters: &'a Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'a str>,
    result: &'a Value,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Outcome::error(EXIT_USAGE, "--jobs must be positive");
        }
        builder = builder.num_threads(j);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => return Outcome::error(EXIT_USAGE, e),
    };
    let start = Instant::now();
    let name = command_name(&cli.command);
    let report = match pool.install(|| dispatch(&cli)) {
        Ok(r) => r,
        Err(Failure::Usage(m)) => return Outcome::error(EXIT_USAGE, m),
        Err(Failure::Bound(m)) => return Outcome::error(EXIT_BOUND, m),
    };
    let elapsed = cli.timing.then(|| start.elapsed().as_millis());
    let stdout = match cli.format {
        Format::Json => {
            let env = Envelope {
                command: name,
                parameters: &report.parameters,
                method: report.method.as_deref(),
                result: &report.result,
                ok: report.ok,
                elapsed_ms: elapsed,
            };
            serde_json::to_string_pretty(&env).expect("json") + "\n"
        }
        Format::Csv => report.csv.clone(),
        Format::Plain => report.plain.clone(),
    };
    let code = if report.ok { EXIT_OK } else { EXIT_VERIFY };
    let stderr = if report.ok { String::new() } else { "verification failed\n".to_string() };
    Outcome { code, stdout, stderr }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Hstar { .. } => "hstar",
        Command::Roots { .. } => "roots",
        Command::Interlace { .. } => "interlace",
        Command::Recursion { .. } => "recursion",
        Command::Gb { .. } => "gb",
        Command::Scan { .. } => "scan",
    }
}

fn dispatch(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Hstar { signature, method, max_dilation } => cmd_hstar(signature, *method, *max_dilation, cli.bound),
        Command::Roots { signature } => cmd_roots(signature),
        Command::Interlace { a, b } => cmd_interlace(a, b),
        Command::Recursion { relation, n, m } => cmd_recursion(relation, *n, *m),
        Command::Gb { signature, checks, orders } => cmd_gb(signature, checks, *orders, cli.seed, cli.bound),
        Command::Scan { kind, max_total, family_total, max_n, mode, orders } => {
            cmd_scan(*kind, *max_total, *family_total, *max_n, *mode, *orders, cli.seed)
        }
    }
}

fn need_two_classes(sig: &Signature) -> Result<(), Failure> {
    if sig.k() < 2 {
        return Err(Failure::Usage(format!("signature {sig} needs at least two classes")));
    }
    Ok(())
}

fn strings(h: &HStar) -> Vec<String> {
    h.coefficients().iter().map(BigInt::to_string).collect()
}

fn cmd_hstar(sig: &Signature, method: Method, max_dilation: Option<usize>, bound: Option<usize>) -> Result<Report, Failure> {
    need_two_classes(sig)?;
    let tri_cfg = TriangulationConfig { max_total: bound.unwrap_or(TriangulationConfig::default().max_total) };
    let ora_cfg = OracleConfig { max_total: bound.unwrap_or(OracleConfig::default().max_total) };
    let mut rows: Vec<(&str, HStar)> = Vec::new();
    match method {
        Method::Formula => match hstar_closed(sig) {
            Some(h) => rows.push(("formula", h)),
            None => return Err(Failure::Usage(format!("no closed form for signature {sig}"))),
        },
        Method::Triangulation => rows.push(("triangulation", hstar_triangulation(sig, &tri_cfg)?)),
        Method::Oracle => rows.push(("oracle", hstar_oracle(sig, &ora_cfg)?)),
        Method::All => {
            if let Some(h) = hstar_closed(sig) {
                rows.push(("formula", h));
            }
            if sig.total() <= tri_cfg.max_total {
                rows.push(("triangulation", hstar_triangulation(sig, &tri_cfg)?));
            }
            if sig.total() <= ora_cfg.max_total {
                rows.push(("oracle", hstar_oracle(sig, &ora_cfg)?));
            }
            if rows.is_empty() {
                return Err(Failure::Bound(format!(
                    "no method applies to {sig}: no closed form and total {} exceeds the bound",
                    sig.total()
                )));
            }
        }
    }
    let dilations = match max_dilation {
        Some(k) => {
            if sig.total() > ora_cfg.max_total {
                return Err(Failure::Bound(format!(
                    "signature total {} exceeds the configured bound {}",
                    sig.total(),
                    ora_cfg.max_total
                )));
            }
            Some((0..=k).map(|i| count_lattice_points(sig, i)).collect::<Vec<_>>())
        }
        None => None,
    };
    let agree = rows.windows(2).all(|w| w[0].1 == w[1].1);
    let methods: Vec<&str> = rows.iter().map(|r| r.0).collect();
    let mut result = json!({
        "signature": sig.to_string(),
        "dim": sig.dim(),
        "rows": rows.iter().map(|(m, h)| json!({"method": m, "coefficients": strings(h)})).collect::<Vec<_>>(),
        "verdict": if agree { "OK" } else { "DISAGREE" },
    });
    if let Some(d) = &dilations {
        result["dilations"] = json!(d.iter().map(|c| json!({"k": c.k, "count": c.count.to_string()})).collect::<Vec<_>>());
    }
    let mut csv = String::from("method,coefficients\n");
    let mut plain = String::new();
    for (m, h) in &rows {
        let _ = writeln!(csv, "{m},{}", strings(h).join(" "));
        let _ = writeln!(plain, "{m}: {}", strings(h).join(","));
    }
    if let Some(d) = &dilations {
        for c in d {
            let _ = writeln!(plain, "L({}) = {}", c.k, c.count);
        }
    }
    let _ = writeln!(plain, "verdict: {}", if agree { "OK" } else { "DISAGREE" });
    Ok(Report {
        parameters: json!({"signature": sig.to_string(), "method": format!("{method:?}").to_lowercase(), "max_dilation": max_dilation, "bound": bound}),
        method: Some(methods.join(",")),
        result,
        csv,
        plain,
        ok: agree,
    })
}

/// Integer-scaled enclosure [lo, hi] of √x for x ≥ 0, with hi − lo ≤ 2⁻³².
fn sqrt_enclosure(x: &Rat) -> (Rat, Rat) {
    if x.is_zero() {
        return (Rat::zero(), Rat::zero());
    }
    let (n, d) = (x.numer(), x.denom());
    // exact when both parts are perfect squares
    let (rn, rd) = (n.sqrt(), d.sqrt());
    if &(&rn * &rn) == n && &(&rd * &rd) == d {
        let r = Rat::new(rn, rd);
        return (r.clone(), r);
    }
    let scale = BigInt::from(1u64 << 32);
    let s2 = &scale * &scale;
    let r = ((n * &s2) / d).sqrt();
    (Rat::new(r.clone(), scale.clone()), Rat::new(r + 1, scale))
}

/// One row per root (with multiplicity) of E at z = −1/2 + i·y, y enclosed by [lo, hi].
fn root_rows(cert: &RootCertificate) -> Vec<[String; 3]> {
    let re = "-1/2".to_string();
    let half = Rat::new(BigInt::from(1), BigInt::from(2));
    let mut above: Vec<[String; 3]> = Vec::new();
    let mut below: Vec<[String; 3]> = Vec::new();
    let mut center = cert.parity;
    let width = Rat::new(BigInt::from(1), BigInt::from(1u64 << 30));
    for iv in &cert.intervals {
        let at_zero = iv.hi.is_zero() && cert.h.eval(&Rat::zero()).is_zero();
        if at_zero {
            center += 2 * iv.multiplicity;
            continue;
        }
        if iv.lo.is_positive() {
            // off the line; is_cl already reports failure
            continue;
        }
        let (lo, hi) = refine_root(&cert.h, &iv.lo, &iv.hi, &width);
        // u² = w ≤ 0 and z = −1/2 + u/2, so y = ±√(−w)/2
        let (l, _) = sqrt_enclosure(&-hi);
        let (_, h) = sqrt_enclosure(&-lo);
        let (l, h) = (l * &half, h * &half);
        for _ in 0..iv.multiplicity {
            above.push([re.clone(), rat_to_string(&l), rat_to_string(&h)]);
            below.push([re.clone(), rat_to_string(&-h.clone()), rat_to_string(&-l.clone())]);
        }
    }
    let mut rows = below;
    for _ in 0..center {
        rows.push([re.clone(), "0".into(), "0".into()]);
    }
    rows.extend(above);
    rows.sort_by(|a, b| cmp_frac(&a[1], &b[1]));
    rows
}

fn cmp_frac(a: &str, b: &str) -> std::cmp::Ordering {
    let p = |s: &str| crate::exactpoly::parse_rat(s).expect("fraction");
    p(a).cmp(&p(b))
}

fn cmd_roots(sig: &Signature) -> Result<Report, Failure> {
    need_two_classes(sig)?;
    let e = ehrhart_of(sig.parts())?;
    let cert = is_cl(&e);
    let rows = if cert.on_cl { root_rows(&cert) } else { Vec::new() };
    let mut csv = String::from("re,im_interval_lo,im_interval_hi\n");
    for r in &rows {
        let _ = writeln!(csv, "{},{},{}", r[0], r[1], r[2]);
    }
    let mut plain = format!("E = {}\non CL: {}\n", e.pretty("k"), cert.on_cl);
    for r in &rows {
        let _ = writeln!(plain, "{} + i[{}, {}]", r[0], r[1], r[2]);
    }
    let table: Vec<Value> = rows.iter().map(|r| json!({"re": r[0], "im_interval_lo": r[1], "im_interval_hi": r[2]})).collect();
    Ok(Report {
        parameters: json!({"signature": sig.to_string()}),
        method: None,
        result: json!({"signature": sig.to_string(), "ehrhart": e.to_strings(), "certificate": cert, "roots": table}),
        csv,
        plain,
        ok: cert.on_cl,
    })
}

fn cmd_interlace(a: &Signature, b: &Signature) -> Result<Report, Failure> {
    need_two_classes(a)?;
    need_two_classes(b)?;
    let (g, f) = (ehrhart_of(a.parts())?, ehrhart_of(b.parts())?);
    let params = json!({"a": a.to_string(), "b": b.to_string()});
    let (result, ok, reason) = match interlaces_on_cl(&g, &f) {
        Ok(c) => {
            let ok = c.interlaces;
            (json!({"interlaces": ok, "certificate": c}), ok, String::new())
        }
        Err(e @ ClError::DegreeMismatch { .. }) => return Err(Failure::Usage(e.to_string())),
        Err(e) => (json!({"interlaces": false, "reason": e.to_string()}), false, e.to_string()),
    };
    let plain = if ok {
        format!("E_{{{a}}} interlaces E_{{{b}}}: certified true\n")
    } else if reason.is_empty() {
        format!("E_{{{a}}} interlaces E_{{{b}}}: false\n")
    } else {
        format!("E_{{{a}}} interlaces E_{{{b}}}: false ({reason})\n")
    };
    let csv = format!("a,b,interlaces\n\"{a}\",\"{b}\",{ok}\n");
    Ok(Report { parameters: params, method: None, result, csv, plain, ok })
}

fn relation_csv(rows: &[RelationRow]) -> String {
    let mut s = String::from("relation,n,status,coefficients,nonnegative,verified\n");
    for r in rows {
        let status = serde_json::to_value(&r.status).expect("json");
        let _ = writeln!(
            s,
            "{},{},{},{},{},{}",
            r.relation,
            r.n,
            status["kind"].as_str().unwrap_or(""),
            r.coefficients.join(" "),
            r.nonnegative,
            r.verified
        );
    }
    s
}

fn relation_plain(rows: &[RelationRow]) -> String {
    let mut s = String::new();
    for r in rows {
        let coeffs = if r.coefficients.is_empty() { "no solution".to_string() } else { r.coefficients.join(", ") };
        let _ = write!(s, "({}) n={}: {}", r.relation, r.n, coeffs);
        if !r.nonnegative && !r.coefficients.is_empty() {
            s.push_str("  [negative]");
        }
        if let Some(note) = &r.note {
            let _ = write!(s, "  ({note})");
        }
        s.push('\n');
    }
    s
}

fn cmd_recursion(relation: &str, n: usize, m: Option<usize>) -> Result<Report, Failure> {
    if n < 2 {
        return Err(Failure::Usage("--n must be at least 2".into()));
    }
    let params = json!({"relation": relation, "n": n, "m": m});
    let single = |rows: Vec<RelationRow>, ok: bool| Report {
        parameters: params.clone(),
        method: None,
        csv: relation_csv(&rows),
        plain: relation_plain(&rows),
        result: json!({ "rows": rows }),
        ok,
    };
    match relation {
        "all" => {
            let rep = reproduce_known_relations(n)?;
            let ok = rep.check().is_ok();
            let mut plain = relation_plain(&rep.rows);
            for c in &rep.chains {
                let _ = writeln!(plain, "chain {}: hypotheses {} conclusion {}", c.statement, c.hypotheses, c.conclusion);
            }
            for c in &rep.conditional {
                let _ = writeln!(plain, "conditional {}: holds {}", c.statement, c.holds);
            }
            Ok(Report {
                parameters: params,
                method: None,
                csv: relation_csv(&rep.rows),
                plain,
                result: serde_json::to_value(&rep).expect("json"),
                ok,
            })
        }
        "hkm" | "hkm1" | "hkm2" | "hkm3" => {
            let rows: Vec<RelationRow> =
                hkm_rows(n)?.into_iter().filter(|r| relation == "hkm" || r.relation == relation).collect();
            let ok = rows.iter().all(|r| r.verified && r.nonnegative);
            Ok(single(rows, ok))
        }
        "cor1" | "cor2" => {
            let m = m.ok_or_else(|| Failure::Usage(format!("{relation} needs --m")))?;
            if m == 0 || m > n {
                return Err(Failure::Usage("need 1 ≤ m ≤ n".into()));
            }
            let rows: Vec<RelationRow> = corollary_scan(m, n)?.into_iter().filter(|r| r.relation == relation).collect();
            // the corollaries assert real coefficients; only a failed substitution is an error
            let ok = rows.iter().all(|r| r.verified || r.coefficients.is_empty());
            Ok(single(rows, ok))
        }
        id if id.len() == 1 && ('a'..='j').contains(&id.chars().next().unwrap_or(' ')) => {
            let row = relation_row(id.chars().next().unwrap_or('a'), n)?;
            let ok = row.verified && row.nonnegative && row.matches_expected != Some(false);
            Ok(single(vec![row], ok))
        }
        other => Err(Failure::Usage(format!("unknown relation {other:?}; expected a..j, hkm, hkm1..3, cor1, cor2 or all"))),
    }
}

fn cmd_gb(sig: &Signature, checks: &[Check], orders: usize, seed: u64, bound: Option<usize>) -> Result<Report, Failure> {
    need_two_classes(sig)?;
    if sig.total() > GB_MAX_TOTAL {
        return Err(Failure::Bound(format!("signature total {} exceeds the basis bound {GB_MAX_TOTAL}", sig.total())));
    }
    let edge_bound = bound.unwrap_or(DEFAULT_EDGE_BOUND);
    let basis = build_basis(sig)?;
    let mut results: Vec<(String, bool)> = Vec::new();
    let mut k222 = None;
    for c in checks {
        let (name, pass) = match c {
            Check::Reduced => ("reduced", reducedness_check(&basis) && tails_standard(&basis)),
            Check::Degree => ("degree", basis.max_degree() <= 3),
            Check::Lead => ("lead", leading_term_consistency(&basis)),
            Check::Buchberger => ("buchberger", buchberger_verify(sig, edge_bound)?),
            Check::K222 => {
                let rep = k222_order_scan(orders, seed);
                let pass = rep.all_found;
                k222 = Some(rep);
                ("k222", pass)
            }
        };
        results.push((name.to_string(), pass));
    }
    let ok = results.iter().all(|r| r.1);
    let kinds = [Kind::K1, Kind::K2, Kind::K3a, Kind::K3b, Kind::K4, Kind::K5];
    let kind_counts: serde_json::Map<String, Value> =
        kinds.iter().map(|k| (k.to_string(), json!(basis.count_kind(*k)))).collect();
    let elements: Vec<Value> = basis
        .elements
        .iter()
        .map(|e| json!({"lead": e.lead.render(&basis.vars), "tail": e.tail.render(&basis.vars), "kind": e.kind.to_string()}))
        .collect();
    let mut result = json!({
        "signature": sig.to_string(),
        "size": basis.len(),
        "max_degree": basis.max_degree(),
        "kinds": kind_counts,
        "checks": results.iter().map(|(n, p)| json!({"name": n, "pass": p})).collect::<Vec<_>>(),
        "elements": elements,
    });
    if let Some(r) = &k222 {
        result["k222"] = serde_json::to_value(r).expect("json");
    }
    let mut csv = String::from("check,pass\n");
    let mut plain = format!("basis of {sig}: {} elements, max degree {}\n", basis.len(), basis.max_degree());
    for (n, p) in &results {
        let _ = writeln!(csv, "{n},{p}");
        let _ = writeln!(plain, "{n}: {}", if *p { "pass" } else { "FAIL" });
    }
    Ok(Report {
        parameters: json!({"signature": sig.to_string(), "checks": results.iter().map(|r| r.0.clone()).collect::<Vec<_>>(), "orders": orders, "seed": seed, "bound": edge_bound}),
        method: None,
        result,
        csv,
        plain,
        ok,
    })
}

fn cmd_scan(
    kind: ScanKind,
    max_total: usize,
    family_total: usize,
    max_n: usize,
    mode: Mode,
    orders: usize,
    seed: u64,
) -> Result<Report, Failure> {
    match kind {
        ScanKind::Conjecture => {
            let mode = match mode {
                Mode::Literal => ConjectureMode::Literal,
                Mode::Apex => ConjectureMode::WithApex,
            };
            let rep = conjecture_scan(max_total, family_total, max_n, mode);
            let ok = rep.violations.is_empty() && rep.ones_interlacing.iter().all(|r| r.interlaces);
            let mut csv = String::from("signature,sum,cross_degree,holds\n");
            for r in &rep.rows {
                let _ = writeln!(csv, "\"{}\",{},{},{}", r.signature, r.sum, r.cross_degree, r.holds);
            }
            let mut plain = format!("{} signatures, {} violations\n", rep.rows.len(), rep.violations.len());
            for v in &rep.violations {
                let _ = writeln!(plain, "violation: {v}");
            }
            for r in rep.ones_interlacing.iter().filter(|r| !r.interlaces) {
                let _ = writeln!(plain, "ones interlacing fails: k={} n={}", r.k, r.n);
            }
            Ok(Report {
                parameters: json!({"kind": "conjecture", "max_total": max_total, "family_total": family_total, "max_n": max_n, "mode": rep.mode}),
                method: None,
                result: serde_json::to_value(&rep).expect("json"),
                csv,
                plain,
                ok,
            })
        }
        ScanKind::K222 => {
            let rep = k222_order_scan(orders, seed);
            let mut csv = String::from("order,obstruction\n");
            for o in std::iter::once(&rep.canonical).chain(&rep.orders) {
                let b = o.obstruction.as_ref().map(|x| x.binomial.clone()).unwrap_or_default();
                let _ = writeln!(csv, "{},\"{}\"", o.index, b);
            }
            let found = rep.orders.iter().filter(|o| o.obstruction.is_some()).count();
            let plain = format!(
                "canonical order obstruction: {}\nrandom orders with obstruction: {found}/{}\n",
                rep.canonical.obstruction.as_ref().map(|x| x.binomial.as_str()).unwrap_or("none"),
                rep.orders.len()
            );
            Ok(Report {
                parameters: json!({"kind": "k222", "orders": orders, "seed": seed}),
                method: None,
                ok: rep.all_found,
                result: serde_json::to_value(&rep).expect("json"),
                csv,
                plain,
            })
        }
        ScanKind::Relations => {
            let mut reports = Vec::new();
            for n in 2..=max_n {
                reports.push(reproduce_known_relations(n)?);
            }
            let ok = reports.iter().all(|r| r.check().is_ok());
            let rows: Vec<RelationRow> = reports.iter().flat_map(|r| r.rows.clone()).collect();
            Ok(Report {
                parameters: json!({"kind": "relations", "max_n": max_n}),
                method: None,
                csv: relation_csv(&rows),
                plain: relation_plain(&rows),
                result: json!({ "reports": reports }),
                ok,
            })
        }
        ScanKind::Corollary => {
            let mut rows = Vec::new();
            for n in 1..=max_n {
                for m in 1..=n {
                    rows.extend(corollary_scan(m, n)?);
                }
            }
            let ok = rows.iter().all(|r| r.verified || r.coefficients.is_empty());
            Ok(Report {
                parameters: json!({"kind": "corollary", "max_n": max_n}),
                method: None,
                csv: relation_csv(&rows),
                plain: relation_plain(&rows),
                result: json!({ "rows": rows }),
                ok,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &str) -> Outcome {
        run(std::iter::once("sepkit").chain(args.split_whitespace()))
    }

    #[test]
    fn sqrt_enclosure_brackets() {
        for (n, d) in [(2, 1), (1, 3), (9, 4), (7, 10), (1000, 7)] {
            let x = Rat::new(BigInt::from(n), BigInt::from(d));
            let (lo, hi) = sqrt_enclosure(&x);
            assert!(&lo * &lo <= x && x <= &hi * &hi);
        }
        let (lo, hi) = sqrt_enclosure(&Rat::new(BigInt::from(9), BigInt::from(4)));
        assert_eq!(lo, hi);
    }

    #[test]
    fn usage_and_help_codes() {
        assert_eq!(go("hstar").code, EXIT_USAGE);
        assert_eq!(go("hstar --signature 1,x").code, EXIT_USAGE);
        assert_eq!(go("--help").code, EXIT_OK);
        assert_eq!(go("recursion --relation z --n 3").code, EXIT_USAGE);
        assert_eq!(go("hstar --signature 4").code, EXIT_USAGE);
    }

    #[test]
    fn formula_only() {
        let o = go("hstar --signature 2,2 --method formula --format plain");
        assert_eq!(o.code, EXIT_OK);
        assert!(o.stdout.contains("formula: 1,5,5,1"), "{}", o.stdout);
    }

    #[test]
    fn bound_exit() {
        assert_eq!(go("hstar --signature 9,9 --method oracle").code, EXIT_BOUND);
        assert_eq!(go("gb --signature 3,3,3").code, EXIT_BOUND);
    }

    #[test]
    fn roots_of_k11_cube_like() {
        // E_{1,1}(k) = 2k + 1, single root at −1/2
        let o = go("roots --signature 1,1 --format csv");
        assert_eq!(o.code, EXIT_OK);
        assert_eq!(o.stdout, "re,im_interval_lo,im_interval_hi\n-1/2,0,0\n");
    }
}
