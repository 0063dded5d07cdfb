//! Configuration files, command dispatch and report output for `rhall`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gkm::{cartan_from_datum, datum_from_quiver, positive_roots, RootKind};
use crate::hallhopf::HallAlgebra;
use crate::repcat::{ClassTable, DimVec, Limits, Quiver};
use crate::scalars::{is_prime, GroundField};
use crate::svext::extend_datum;
use crate::verify::{run_suite, CheckReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// A validated configuration. Vertices are 0-based internally and 1-based in
/// the file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub quiver: Quiver,
    pub q: u64,
    pub bound: DimVec,
    pub height: Option<u32>,
    pub limits: Limits,
    pub format: Format,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    quiver: RawQuiver,
    field: RawField,
    #[serde(default)]
    limits: RawLimits,
    #[serde(default)]
    output: RawOutput,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuiver {
    vertices: usize,
    #[serde(default)]
    arrows: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawField {
    q: u64,
}

#[derive(Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLimits {
    #[serde(skip_serializing_if = "Option::is_none")]
    bound: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    height: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_states: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    max_classes: Option<usize>,
}

#[derive(Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    #[serde(skip_serializing_if = "Option::is_none")]
    format: Option<Format>,
}

/// Default per-vertex bound when `[limits] bound` is absent.
pub const DEFAULT_BOUND: u32 = 2;

/// Line of `key = ...` inside `[section]`, or of the section header, or 1.
fn key_line(text: &str, section: &str, key: &str) -> usize {
    let mut current = "";
    let mut header = None;
    for (n, line) in text.lines().enumerate() {
        let t = line.trim();
        if let Some(name) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            current = name.trim();
            if current == section && header.is_none() {
                header = Some(n + 1);
            }
            continue;
        }
        if current == section {
            if let Some((k, _)) = t.split_once('=') {
                if k.trim() == key {
                    return n + 1;
                }
            }
        }
    }
    header.unwrap_or(1)
}

fn config_error(line: usize, message: impl Into<String>) -> Error {
    Error::Config {
        line,
        message: message.into(),
    }
}

/// Parses the sectioned key-value format; unknown keys are errors.
pub fn parse_config(text: &str) -> Result<Config> {
    let raw: RawConfig = toml::from_str(text).map_err(|e| {
        let line = e.span().map_or(1, |s| text[..s.start.min(text.len())].matches('\n').count() + 1);
        config_error(line, e.message().trim().to_string())
    })?;
    let q = raw.field.q;
    if !is_prime(q) {
        return Err(config_error(key_line(text, "field", "q"), "q must be prime"));
    }
    if q > 255 {
        return Err(config_error(key_line(text, "field", "q"), "q must be below 256"));
    }
    let n = raw.quiver.vertices;
    if n == 0 {
        return Err(config_error(key_line(text, "quiver", "vertices"), "vertices must be positive"));
    }
    let mut arrows = Vec::new();
    for [s, t] in raw.quiver.arrows {
        for v in [s, t] {
            if v == 0 || v > n {
                return Err(config_error(key_line(text, "quiver", "arrows"), format!("vertex {v} out of range")));
            }
        }
        arrows.push((s - 1, t - 1));
    }
    let quiver = Quiver::new(n, arrows).map_err(|e| config_error(key_line(text, "quiver", "arrows"), e.to_string()))?;
    let bound = DimVec(raw.limits.bound.unwrap_or_else(|| vec![DEFAULT_BOUND; n]));
    if bound.len() != n {
        return Err(config_error(
            key_line(text, "limits", "bound"),
            format!("bound has {} entries for {n} vertices", bound.len()),
        ));
    }
    let defaults = Limits::default();
    Ok(Config {
        quiver,
        q,
        bound,
        height: raw.limits.height,
        limits: Limits {
            max_states: raw.limits.max_states.unwrap_or(defaults.max_states),
            max_classes: raw.limits.max_classes.unwrap_or(defaults.max_classes),
        },
        format: raw.output.format.unwrap_or(Format::Text),
    })
}

/// Canonical text of a configuration, with every default written out.
pub fn print_config(c: &Config) -> String {
    let raw = RawConfig {
        quiver: RawQuiver {
            vertices: c.quiver.vertex_count(),
            arrows: c.quiver.arrows().iter().map(|&(s, t)| [s + 1, t + 1]).collect(),
        },
        field: RawField { q: c.q },
        limits: RawLimits {
            bound: Some(c.bound.0.clone()),
            height: c.height,
            max_states: Some(c.limits.max_states),
            max_classes: Some(c.limits.max_classes),
        },
        output: RawOutput { format: Some(c.format) },
    };
    toml::to_string(&raw).expect("configuration serializes")
}

/// SHA-256 of the canonical configuration text, in hex.
pub fn config_digest(c: &Config) -> String {
    let digest = Sha256::digest(print_config(c).as_bytes());
    digest.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

#[derive(Serialize)]
struct ReportJson<'a> {
    suite: &'a str,
    config_digest: &'a str,
    checks: &'a [crate::verify::Check],
    overall: crate::verify::Status,
}

pub fn emit_report(report: &CheckReport, format: Format, digest: &str) -> String {
    match format {
        Format::Json => {
            let j = ReportJson {
                suite: &report.suite,
                config_digest: digest,
                checks: &report.checks,
                overall: report.overall(),
            };
            serde_json::to_string_pretty(&j).expect("report serializes") + "\n"
        }
        Format::Text => {
            let mut s = format!("suite   {}\nconfig  {digest}\n", report.suite);
            for c in &report.checks {
                let _ = writeln!(s, "{:<8}{}", c.status.to_string().to_uppercase(), c.name);
                if let Some(w) = &c.witness {
                    let _ = writeln!(s, "        {w}");
                }
            }
            let _ = writeln!(s, "overall {}", report.overall());
            s
        }
    }
}

#[derive(Parser)]
#[command(name = "rhall", version, about = "Ringel-Hall algebras of quivers over finite fields")]
struct Cli {
    /// Configuration file.
    #[arg(short, long, global = true)]
    config: Option<PathBuf>,
    /// Overrides `[output] format`.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Isoclass and indecomposable counts per dimension vector.
    Classify,
    /// Every non-zero Hall number within the bound.
    HallTable,
    /// The Borcherds-Cartan matrix and symmetrizers.
    Cartan,
    /// Positive roots up to a height.
    Roots {
        #[arg(long)]
        height: Option<u32>,
    },
    /// Dimensions of the new generator spaces and the enlarged datum.
    Sv,
    /// Runs a check suite.
    Verify {
        #[arg(long, value_parser = ["hopf", "pairing", "composition", "sv", "kac", "character", "all"])]
        suite: String,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Config { .. } | Error::Domain(_) => 2,
        Error::Resource(_) | Error::Truncation(_) => 3,
        Error::Internal(_) => 1,
    }
}

fn build_table(c: &Config) -> Result<ClassTable> {
    ClassTable::build_with_height(&c.quiver, GroundField::new(c.q)?, &c.bound, c.height, c.limits)
}

fn dim_json(d: &DimVec) -> serde_json::Value {
    serde_json::json!(d.0)
}

/// Output text and success flag of one command.
fn execute(cmd: &Command, c: &Config, format: Format) -> Result<(String, bool)> {
    let digest = config_digest(c);
    let json = format == Format::Json;
    let wrap = |name: &str, body: serde_json::Value| {
        let v = serde_json::json!({ "command": name, "config_digest": digest, "result": body });
        serde_json::to_string_pretty(&v).expect("serializes") + "\n"
    };
    match cmd {
        Command::Classify => {
            let t = build_table(c)?;
            let rows: Vec<(DimVec, usize, usize)> = t
                .dims()
                .iter()
                .map(|d| {
                    let ids = t.classes_of_dim(d);
                    (d.clone(), ids.len(), ids.iter().filter(|&&i| t.is_indecomposable(i)).count())
                })
                .collect();
            if json {
                let body: Vec<_> = rows
                    .iter()
                    .map(|(d, n, k)| serde_json::json!({ "dim": dim_json(d), "classes": n, "indecomposable": k }))
                    .collect();
                return Ok((wrap("classify", serde_json::json!(body)), true));
            }
            let mut s = format!("{:<12}{:>9}{:>16}\n", "dim", "classes", "indecomposable");
            for (d, n, k) in rows {
                let _ = writeln!(s, "{:<12}{n:>9}{k:>16}", d.to_string());
            }
            Ok((s, true))
        }
        Command::HallTable => {
            let t = build_table(c)?;
            let mut entries = Vec::new();
            for g in t.classes() {
                for &(a, b, n) in t.hall_row_of(g.id) {
                    entries.push((g.id, a, b, n));
                }
            }
            if json {
                let classes: Vec<_> = t
                    .classes()
                    .iter()
                    .map(|k| {
                        serde_json::json!({
                            "id": k.id, "dim": dim_json(&k.dim), "code": k.code.to_string(),
                            "aut": k.aut.to_string(), "indecomposable": k.indecomposable
                        })
                    })
                    .collect();
                let hall: Vec<_> = entries
                    .iter()
                    .map(|(g, a, b, n)| serde_json::json!({ "gamma": g, "alpha": a, "beta": b, "g": n }))
                    .collect();
                return Ok((wrap("hall-table", serde_json::json!({ "classes": classes, "hall": hall })), true));
            }
            let mut s = String::from("classes\n");
            for k in t.classes() {
                let _ = writeln!(
                    s,
                    "  [{}] dim {} code {} aut {}{}",
                    k.id,
                    k.dim,
                    k.code,
                    k.aut,
                    if k.indecomposable { " indecomposable" } else { "" }
                );
            }
            s.push_str("hall numbers g^gamma_{alpha beta} (alpha quotient, beta sub)\n");
            for (g, a, b, n) in entries {
                let _ = writeln!(s, "  g^[{g}]_([{a}],[{b}]) = {n}");
            }
            Ok((s, true))
        }
        Command::Cartan => {
            let cm = cartan_from_datum(&datum_from_quiver(&c.quiver)?);
            let eps: Vec<String> = (0..cm.rank()).map(|i| cm.symmetrizer(i).to_string()).collect();
            if json {
                let body = serde_json::json!({ "matrix": cm.entries(), "symmetrizers": eps });
                return Ok((wrap("cartan", body), true));
            }
            let mut s = String::from("C0\n");
            for row in cm.entries() {
                let r: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
                let _ = writeln!(s, "{}", r.join(""));
            }
            let _ = writeln!(s, "symmetrizers {}", eps.join(" "));
            Ok((s, true))
        }
        Command::Roots { height } => {
            let h = height.or(c.height).unwrap_or_else(|| c.bound.total());
            let cm = cartan_from_datum(&datum_from_quiver(&c.quiver)?);
            let roots = positive_roots(&cm, h);
            if json {
                let body: Vec<_> = roots
                    .iter()
                    .map(|r| {
                        let kind = if r.kind == RootKind::Real { "real" } else { "imaginary" };
                        serde_json::json!({ "vector": r.vector, "kind": kind })
                    })
                    .collect();
                return Ok((wrap("roots", serde_json::json!({ "height": h, "roots": body })), true));
            }
            let mut s = format!("positive roots up to height {h}: {}\n", roots.len());
            for r in &roots {
                let _ = writeln!(s, "  {r}");
            }
            Ok((s, true))
        }
        Command::Sv => {
            let t = build_table(c)?;
            let alg = HallAlgebra::new(&t);
            let ext = extend_datum(&alg, &c.bound)?;
            let labels: Vec<String> = ext.indices.iter().map(ToString::to_string).collect();
            if json {
                let dims: Vec<_> = ext
                    .l_spaces
                    .iter()
                    .map(|l| serde_json::json!({ "theta": dim_json(&l.degree), "dim": l.dim() }))
                    .collect();
                let body = serde_json::json!({ "l_dims": dims, "indices": labels, "form": ext.form });
                return Ok((wrap("sv", body), true));
            }
            let mut s = String::from("dim L_theta\n");
            for l in &ext.l_spaces {
                let _ = writeln!(s, "  {:<10}{}", l.degree.to_string(), l.dim());
            }
            let _ = writeln!(s, "indices {}", labels.join(" "));
            s.push_str("extended form\n");
            for row in &ext.form {
                let r: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
                let _ = writeln!(s, "{}", r.join(""));
            }
            Ok((s, true))
        }
        Command::Verify { suite } => {
            let t = build_table(c)?;
            let alg = HallAlgebra::new(&t);
            let report = run_suite(suite, &alg, c.height)?;
            Ok((emit_report(&report, format, &digest), report.passed()))
        }
    }
}

/// Runs the command line and returns the exit status: 0 success, 1 failed
/// check, 2 usage or configuration error, 3 resource limit.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let Some(path) = &cli.config else {
        let _ = writeln!(err, "error: --config <FILE> is required");
        return 2;
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            return 2;
        }
    };
    let config = match parse_config(&text) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            return exit_code(&e);
        }
    };
    let format = cli.format.unwrap_or(config.format);
    match execute(&cli.command, &config, format) {
        Ok((text, ok)) => {
            let _ = out.write_all(text.as_bytes());
            if ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::SUITES;

    const KRONECKER: &str = "[quiver]\nvertices = 2\narrows = [[1,2],[1,2]]\n[field]\nq = 2\n";

    #[test]
    fn parses_minimal_config() {
        let c = parse_config(KRONECKER).unwrap();
        assert_eq!(c.quiver, Quiver::kronecker());
        assert_eq!(c.q, 2);
        assert_eq!(c.limits.max_states, 10_000_000);
        assert_eq!(c.format, Format::Text);
        assert_eq!(c.bound, DimVec(vec![DEFAULT_BOUND; 2]));
    }

    #[test]
    fn rejects_composite_q() {
        let e = parse_config("[quiver]\nvertices = 1\n[field]\nq = 4\n").unwrap_err();
        assert_eq!(e, config_error(4, "q must be prime"));
    }

    #[test]
    fn rejects_bad_vertex() {
        let e = parse_config("[quiver]\nvertices = 2\narrows = [[1,3]]\n[field]\nq = 2\n").unwrap_err();
        assert_eq!(e, config_error(3, "vertex 3 out of range"));
    }

    #[test]
    fn rejects_unknown_keys_with_line() {
        let e = parse_config("[quiver]\nvertices = 1\n[field]\nq = 2\ncolour = 3\n").unwrap_err();
        match e {
            Error::Config { line, message } => {
                assert_eq!(line, 5);
                assert!(message.contains("colour"), "{message}");
            }
            other => panic!("{other}"),
        }
        let e = parse_config("[quiver]\nvertices = \n").unwrap_err();
        assert!(matches!(e, Error::Config { line: 2, .. }), "{e}");
    }

    #[test]
    fn print_round_trips() {
        let mut c = parse_config(KRONECKER).unwrap();
        assert_eq!(parse_config(&print_config(&c)).unwrap(), c);
        c.height = Some(4);
        c.format = Format::Json;
        c.bound = DimVec(vec![3, 1]);
        assert_eq!(parse_config(&print_config(&c)).unwrap(), c);
        assert_eq!(config_digest(&c), config_digest(&c.clone()));
        assert_eq!(config_digest(&c).len(), 64);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::resource("x")), 3);
        assert_eq!(exit_code(&config_error(1, "x")), 2);
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["rhall", "frobnicate"], &mut out, &mut err), 2);
        assert_eq!(run(["rhall", "classify"], &mut out, &mut err), 2);
    }

    #[test]
    fn suites_listed_in_parser() {
        for s in SUITES {
            assert!(Cli::try_parse_from(["rhall", "verify", "--suite", s]).is_ok());
        }
    }
}
