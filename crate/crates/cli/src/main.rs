//! `shv`: command-line front-end for horizontal Schubert variety
//! computations. All mathematics is delegated to the library; this binary
//! parses requests and serializes reports.
//!
//! Exit codes: 0 success, 1 domain error (machine-readable JSON object on
//! stderr), 2 usage error.

use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use shv_core::classify::{classify_smooth, SmoothnessReport};
use shv_core::crosscheck::crosscheck;
use shv_core::isotropic::{enumerate_og2, maximal_hsv_og2, Kind};
use shv_core::roots::Root;
use shv_core::schubert::{
    enumerate_all, enumerate_hsv, hasse_edges, ParabolicContext, SchubertDatum,
};
use shv_core::tits::{cone_is_horizontal, lines_cone};
use shv_core::Error;

#[derive(Parser)]
#[command(name = "shv", version, about = "Horizontal Schubert varieties from root-system data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct CommonOpts {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct EnumOpts {
    #[command(flatten)]
    common: CommonOpts,
    /// Prune the search to horizontal branches (the default).
    #[arg(long, overrides_with = "no_prune")]
    prune: bool,
    /// Exhaustive search with a post-filter instead of pruning.
    #[arg(long = "no-prune")]
    no_prune: bool,
    /// Cap the enumeration at this word length.
    #[arg(long = "max-length")]
    max_length: Option<usize>,
}

impl EnumOpts {
    fn prune(&self) -> bool {
        !self.no_prune
    }
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots of a marked diagram, with grades.
    Roots {
        spec: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Horizontal Schubert varieties of a marked diagram.
    Hsv {
        spec: String,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Horizontal Schubert varieties with smoothness classification.
    Classify {
        spec: String,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// Hasse poset of Schubert varieties (all, or only horizontal).
    Hasse {
        spec: String,
        /// Restrict to the horizontal subset.
        #[arg(long)]
        horizontal: bool,
        #[command(flatten)]
        opts: EnumOpts,
    },
    /// The Schubert variety swept out by the horizontal lines through a point.
    Cone {
        spec: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Schubert classes of the orthogonal Grassmannian OG(2, C^m).
    Oracle {
        #[arg(long = "m")]
        m: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Cross-validate the root-theoretic pipeline against OG(2, C^m).
    Crosscheck {
        #[arg(long = "m")]
        m: usize,
        #[command(flatten)]
        common: CommonOpts,
    },
}

enum AppError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for AppError {
    fn from(e: Error) -> Self {
        AppError::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Domain(e)) => {
            let obj = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } });
            eprintln!("{obj}");
            ExitCode::from(1)
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Syntax { .. } => "syntax",
        Error::UnknownType(_) => "unknown-type",
        Error::RankOutOfRange { .. } => "rank-out-of-range",
        Error::MarkOutOfRange { .. } => "mark-out-of-range",
        Error::EmptyMarking => "empty-marking",
        Error::EmptyNodeSet => "empty-node-set",
        Error::NodeNotInDiagram(_) => "node-not-in-diagram",
        Error::Disconnected => "disconnected",
        Error::NotDynkin => "not-dynkin",
        Error::RankMismatch => "rank-mismatch",
        Error::NotARoot => "not-a-root",
        Error::MixedSigns => "mixed-signs",
        Error::NotMinimalRepresentative => "not-minimal-representative",
        Error::NotMaximalRepresentative => "not-maximal-representative",
        Error::NotAnInversionSet => "not-an-inversion-set",
        Error::NotHorizontal => "not-horizontal",
        Error::NotMaximalParabolic => "not-maximal-parabolic",
        Error::NonCominusculeFactor => "non-cominuscule-factor",
        Error::MixedContexts => "mixed-contexts",
        Error::EnumerationCapExceeded { .. } => "enumeration-cap-exceeded",
        Error::ReconstructionFailed(_) => "reconstruction-failed",
        Error::AmbientTooSmall(_) => "ambient-too-small",
        Error::InvalidClass(_) => "invalid-class",
        Error::HorizontalClass => "horizontal-class",
        Error::CrosscheckRange(_) => "crosscheck-range",
    }
}

fn run(command: Command) -> Result<String, AppError> {
    match command {
        Command::Roots { spec, common } => {
            require_not_dot(common.format, "roots")?;
            let ctx = ParabolicContext::from_spec(&spec)?;
            Ok(render_roots(&ctx, common.format))
        }
        Command::Hsv { spec, opts } => {
            require_not_dot(opts.common.format, "hsv")?;
            let ctx = ParabolicContext::from_spec(&spec)?;
            let data = enumerate(&ctx, &opts)?;
            Ok(render_items(&ctx, &data, None, opts.common.format))
        }
        Command::Classify { spec, opts } => {
            require_not_dot(opts.common.format, "classify")?;
            let ctx = ParabolicContext::from_spec(&spec)?;
            let data = enumerate(&ctx, &opts)?;
            let reports = data
                .iter()
                .map(|d| classify_smooth(&ctx, d))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(render_items(&ctx, &data, Some(&reports), opts.common.format))
        }
        Command::Hasse { spec, horizontal, opts } => {
            let ctx = ParabolicContext::from_spec(&spec)?;
            let data = if horizontal {
                enumerate(&ctx, &opts)?
            } else {
                enumerate_all(&ctx, opts.max_length)?
            };
            let edges = hasse_edges(&ctx, &data)?;
            Ok(render_hasse(&ctx, &data, &edges, opts.common.format))
        }
        Command::Cone { spec, common } => {
            require_not_dot(common.format, "cone")?;
            let ctx = ParabolicContext::from_spec(&spec)?;
            let datum = lines_cone(&ctx)?;
            let (horizontal, short) = cone_is_horizontal(&ctx)?;
            Ok(render_cone(&ctx, &datum, horizontal, short, common.format))
        }
        Command::Oracle { m, common } => {
            require_not_dot(common.format, "oracle")?;
            let classes = enumerate_og2(m).map_err(range_as_usage)?;
            let maximal = maximal_hsv_og2(m)?;
            Ok(render_oracle(m, &classes, &maximal, common.format))
        }
        Command::Crosscheck { m, common } => {
            require_not_dot(common.format, "crosscheck")?;
            let report = crosscheck(m).map_err(range_as_usage)?;
            Ok(render_crosscheck(&report, common.format))
        }
    }
}

/// A bad `--m` is a malformed request, not a domain failure.
fn range_as_usage(e: Error) -> AppError {
    match e {
        Error::CrosscheckRange(_) | Error::AmbientTooSmall(_) => AppError::Usage(e.to_string()),
        other => AppError::Domain(other),
    }
}

fn require_not_dot(format: Format, command: &str) -> Result<(), AppError> {
    if format == Format::Dot {
        Err(AppError::Usage(format!("dot output is only available for hasse, not {command}")))
    } else {
        Ok(())
    }
}

fn enumerate(ctx: &ParabolicContext, opts: &EnumOpts) -> Result<Vec<SchubertDatum>, AppError> {
    let mut data = enumerate_hsv(ctx, opts.prune())?;
    if let Some(cap) = opts.max_length {
        data.retain(|d| d.dim() <= cap);
    }
    Ok(data)
}

fn context_json(ctx: &ParabolicContext) -> Value {
    let ranks: Vec<usize> = ctx
        .root_system()
        .diagram()
        .components()
        .iter()
        .map(|c| c.rank)
        .collect();
    let ty = ctx
        .root_system()
        .diagram()
        .components()
        .iter()
        .map(|c| c.name())
        .collect::<Vec<_>>()
        .join(" x ");
    json!({
        "type": ty,
        "ranks": ranks,
        "marked": ctx.marked().iter().collect::<Vec<_>>(),
    })
}

fn item_json(d: &SchubertDatum, report: Option<&SmoothnessReport>) -> Value {
    let (smooth, factors, witness) = match report {
        None => (Value::Null, json!([]), Value::Null),
        Some(r) => (
            json!(r.smooth),
            json!(r
                .factors
                .iter()
                .map(|f| {
                    json!({
                        "nodes": f.nodes.iter().collect::<Vec<_>>(),
                        "marked": f.marked,
                        "label": f.type_label,
                    })
                })
                .collect::<Vec<_>>()),
            r.witness.as_ref().map_or(Value::Null, |w| json!(w.coeffs())),
        ),
    };
    json!({
        "word": d.weyl().word(),
        "dim": d.dim(),
        "grades": d.grade_profile(),
        "horizontal": d.horizontal(),
        "smooth": smooth,
        "factors": factors,
        "witness": witness,
    })
}

fn word_text(d: &SchubertDatum) -> String {
    if d.weyl().word().is_empty() {
        "e".to_string()
    } else {
        d.weyl().word().iter().map(|n| n.to_string()).collect()
    }
}

fn root_text(r: &Root) -> String {
    format!(
        "({})",
        r.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    )
}

fn render_roots(ctx: &ParabolicContext, format: Format) -> String {
    let rs = ctx.root_system();
    match format {
        Format::Json => {
            let items: Vec<Value> = rs
                .positive_roots()
                .iter()
                .map(|a| {
                    json!({
                        "root": a.coeffs(),
                        "height": a.height(),
                        "grade": rs.grade(a, ctx.grading()).expect("root of this system"),
                    })
                })
                .collect();
            let report = json!({
                "schema": "roots-report/1",
                "context": context_json(ctx),
                "dim": ctx.dimension(),
                "items": items,
            });
            serde_json::to_string_pretty(&report).expect("serializable")
        }
        _ => {
            let mut out = format!(
                "context {} | positive roots: {} | dim G/P = {}\n",
                ctx.key(),
                rs.positive_roots().len(),
                ctx.dimension()
            );
            for a in rs.positive_roots() {
                out.push_str(&format!(
                    "{}  height {}  grade {}\n",
                    root_text(a),
                    a.height(),
                    rs.grade(a, ctx.grading()).expect("root of this system")
                ));
            }
            out.trim_end().to_string()
        }
    }
}

fn render_items(
    ctx: &ParabolicContext,
    data: &[SchubertDatum],
    reports: Option<&[SmoothnessReport]>,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let items: Vec<Value> = data
                .iter()
                .enumerate()
                .map(|(i, d)| item_json(d, reports.map(|r| &r[i])))
                .collect();
            let report = json!({
                "schema": "hsv-report/1",
                "context": context_json(ctx),
                "items": items,
            });
            serde_json::to_string_pretty(&report).expect("serializable")
        }
        _ => {
            let mut out = format!("context {} | {} classes\n", ctx.key(), data.len());
            for (i, d) in data.iter().enumerate() {
                let mut line = format!(
                    "dim {}  w={}  grades {:?}  horizontal {}",
                    d.dim(),
                    word_text(d),
                    d.grade_profile(),
                    d.horizontal()
                );
                if let Some(reports) = reports {
                    let r = &reports[i];
                    line.push_str(&format!("  smooth {}", r.smooth));
                    if r.smooth {
                        let labels: Vec<String> =
                            r.factors.iter().map(|f| f.type_label.clone()).collect();
                        line.push_str(&format!("  factors [{}]", labels.join(", ")));
                    } else if let Some(w) = &r.witness {
                        line.push_str(&format!("  witness {}", root_text(w)));
                    }
                }
                out.push_str(&line);
                out.push('\n');
            }
            out.trim_end().to_string()
        }
    }
}

fn render_hasse(
    ctx: &ParabolicContext,
    data: &[SchubertDatum],
    edges: &[(usize, usize)],
    format: Format,
) -> String {
    match format {
        Format::Dot => {
            let mut out = String::from("digraph hasse {\n");
            for (i, d) in data.iter().enumerate() {
                out.push_str(&format!(
                    "  n{i} [label=\"w={} dim={}\"];\n",
                    word_text(d),
                    d.dim()
                ));
            }
            for &(a, b) in edges {
                out.push_str(&format!("  n{a} -> n{b};\n"));
            }
            out.push('}');
            out
        }
        Format::Json => {
            let items: Vec<Value> = data.iter().map(|d| item_json(d, None)).collect();
            let report = json!({
                "schema": "hsv-report/1",
                "context": context_json(ctx),
                "items": items,
                "edges": edges.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&report).expect("serializable")
        }
        Format::Text => {
            let mut out = format!(
                "context {} | {} nodes, {} cover edges\n",
                ctx.key(),
                data.len(),
                edges.len()
            );
            for (i, d) in data.iter().enumerate() {
                out.push_str(&format!("[{i}] dim {}  w={}\n", d.dim(), word_text(d)));
            }
            for &(a, b) in edges {
                out.push_str(&format!("[{a}] < [{b}]\n"));
            }
            out.trim_end().to_string()
        }
    }
}

fn render_cone(
    ctx: &ParabolicContext,
    datum: &SchubertDatum,
    horizontal: bool,
    short: bool,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let report = json!({
                "schema": "cone-report/1",
                "context": context_json(ctx),
                "dim": datum.dim(),
                "horizontal": horizontal,
                "short_root": short,
                "word": datum.weyl().word(),
                "delta": datum.delta().iter().map(|r| json!(r.coeffs())).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&report).expect("serializable")
        }
        _ => format!(
            "context {} | cone of lines: dim {}, horizontal {}, short_root {}, w={}",
            ctx.key(),
            datum.dim(),
            horizontal,
            short,
            word_text(datum)
        ),
    }
}

fn kind_json(k: &Kind) -> Value {
    match k {
        Kind::Plain { a, b } => json!({ "kind": "plain", "a": a, "b": b }),
        Kind::TildeAr { a } => json!({ "kind": "tilde_ar", "a": a }),
        Kind::TildeRb { b } => json!({ "kind": "tilde_rb", "b": b }),
    }
}

fn render_oracle(
    m: usize,
    classes: &[shv_core::isotropic::IsotropicSchubert],
    maximal: &[shv_core::isotropic::IsotropicSchubert],
    format: Format,
) -> String {
    let maximal_set: BTreeSet<_> = maximal.iter().collect();
    match format {
        Format::Json => {
            let items: Vec<Value> = classes
                .iter()
                .map(|x| {
                    let mut v = kind_json(&x.kind);
                    let obj = v.as_object_mut().expect("object");
                    obj.insert("dim".into(), json!(x.dimension()));
                    obj.insert("horizontal".into(), json!(x.is_horizontal()));
                    obj.insert("maximal_hsv".into(), json!(maximal_set.contains(x)));
                    obj.insert("label".into(), json!(x.label()));
                    v
                })
                .collect();
            let report = json!({
                "schema": "og2-report/1",
                "m": m,
                "items": items,
            });
            serde_json::to_string_pretty(&report).expect("serializable")
        }
        _ => {
            let mut out = format!("OG(2,C^{m}) | {} classes\n", classes.len());
            for x in classes {
                out.push_str(&format!(
                    "{}  dim {}  horizontal {}{}\n",
                    x.label(),
                    x.dimension(),
                    x.is_horizontal(),
                    if maximal_set.contains(x) { "  maximal-hsv" } else { "" }
                ));
            }
            out.trim_end().to_string()
        }
    }
}

fn render_crosscheck(report: &shv_core::crosscheck::CrosscheckReport, format: Format) -> String {
    match format {
        Format::Json => {
            let v = json!({
                "schema": "crosscheck-report/1",
                "m": report.m,
                "context": report.context_spec,
                "counts": { "oracle": report.oracle_count, "weyl": report.weyl_count },
                "horizontal_dims": {
                    "oracle": report.oracle_horizontal_dims,
                    "weyl": report.weyl_horizontal_dims,
                },
                "max_dim": {
                    "oracle": report.oracle_max_dim,
                    "weyl": report.weyl_max_dim,
                    "expected": report.expected_max_dim,
                },
                "maximal_counts": {
                    "oracle": report.oracle_maximal_count,
                    "weyl": report.weyl_maximal_count,
                },
                "pass": report.pass,
            });
            serde_json::to_string_pretty(&v).expect("serializable")
        }
        _ => format!(
            "OG(2,C^{}) vs {} | counts {} = {} | horizontal dims {:?} vs {:?} | max dim {}/{} (expected {}) | maximal counts {}/{} | {}",
            report.m,
            report.context_spec,
            report.oracle_count,
            report.weyl_count,
            report.oracle_horizontal_dims,
            report.weyl_horizontal_dims,
            report.oracle_max_dim,
            report.weyl_max_dim,
            report.expected_max_dim,
            report.oracle_maximal_count,
            report.weyl_maximal_count,
            if report.pass { "PASS" } else { "FAIL" }
        ),
    }
}
