//! Command-line harness for contour algebra experiments.
//!
//! Every command prints a JSON document `{"config", "result", "timing_ms"}`
//! by default; `--format plain` gives a short human summary and
//! `--format csv` is available for evaluated Gram matrices.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use contour::algebra::{count_by_prop, load_or_build};
use contour::arith::{parse_cyclotomic, random_point, CyclotomicNumber};
use contour::diagram::DepthBound;
use contour::modules::{
    gram_matrix, induction_support, restriction_filtration, weights, StandardModule, Weight,
};
use contour::tower::{check_all, check_axiom, hom_space, semisimplicity_certificate, simple_labels, Axiom};
use contour::ContourError;

#[derive(Parser)]
#[command(name = "contour", version, about = "Exact computations for contour algebras")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Number of strands.
    #[arg(short = 'n', long = "strands", global = true, default_value_t = 2)]
    n: usize,
    /// Order of the bead group.
    #[arg(short = 'm', long = "order", global = true, default_value_t = 1)]
    m: u32,
    /// Depth bound: a non-negative integer or "inf".
    #[arg(short = 'd', long = "depth", global = true, default_value = "inf", value_parser = parse_depth)]
    d: DepthBound,
    /// Loop parameters d0,...,d(m-1): rationals or coefficient vectors like [1,1/2].
    #[arg(long, global = true, allow_hyphen_values = true)]
    delta: Option<String>,
    /// Index j of the loop parameter used to localise.
    #[arg(long, global = true, default_value_t = 0)]
    pivot: u32,
    /// Directory for cached structure constants.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomly chosen generic points.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report wall-clock time in the output.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-form basis with counts by propagating number.
    Basis,
    /// Labels of the standard modules.
    Weights,
    /// Gram matrix of a standard module.
    Gram(WeightArg),
    /// Gram determinant of a standard module.
    Gramdet(WeightArg),
    /// Semisimplicity certificate at a point.
    Ss,
    /// Homomorphisms between two standard modules at a point.
    Homs {
        #[arg(long, value_parser = parse_weight)]
        weight: Weight,
        #[arg(long, value_parser = parse_weight)]
        target: Weight,
    },
    /// Tower axiom checks.
    Axioms {
        /// A single axiom (A1..A6); all six when omitted.
        #[arg(long, value_parser = parse_axiom)]
        axiom: Option<Axiom>,
    },
    /// Restriction filtration of a standard module.
    Res(WeightArg),
    /// Support of the induced module.
    Ind(WeightArg),
}

#[derive(Args)]
struct WeightArg {
    #[arg(long, value_parser = parse_weight, default_value = "empty")]
    weight: Weight,
}

fn parse_depth(s: &str) -> Result<DepthBound, String> {
    s.parse().map_err(|e: ContourError| e.to_string())
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse().map_err(|e: ContourError| e.to_string())
}

fn parse_axiom(s: &str) -> Result<Axiom, String> {
    s.parse().map_err(|e: ContourError| e.to_string())
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Contour(#[from] ContourError),
}

/// Splits on commas outside brackets and parses each entry.
fn parse_delta(text: &str, m: u32) -> Result<Vec<CyclotomicNumber>, CliError> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push((start, &text[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push((start, &text[start..]));
    let values = parts
        .into_iter()
        .map(|(offset, p)| {
            parse_cyclotomic(p, m).map_err(|e| match e {
                ContourError::Parse { position, message } => {
                    CliError::Usage(format!("--delta: {} at position {}", message, offset + position))
                }
                other => other.into(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != m as usize {
        return Err(CliError::Usage(format!(
            "--delta needs {} values for m = {}, got {}",
            m,
            m,
            values.len()
        )));
    }
    Ok(values)
}

struct Run {
    global: Global,
    point: Option<Vec<CyclotomicNumber>>,
}

impl Run {
    fn new(global: Global) -> Result<Self, CliError> {
        if global.m == 0 {
            return Err(CliError::Usage("-m must be positive".into()));
        }
        let point = global.delta.as_deref().map(|t| parse_delta(t, global.m)).transpose()?;
        Ok(Run { global, point })
    }

    /// The given point, or a seeded random one when none was given.
    fn point_or_generic(&self) -> (Vec<CyclotomicNumber>, bool) {
        match &self.point {
            Some(p) => (p.clone(), false),
            None => (random_point(self.global.m, self.global.m as usize, self.global.seed), true),
        }
    }

    fn config(&self, extra: Value) -> Value {
        let g = &self.global;
        let mut c = json!({
            "n": g.n,
            "m": g.m,
            "d": g.d,
            "delta": self.point.as_ref().map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            "pivot": g.pivot,
            "format": g.format,
            "seed": g.seed,
            "cache_dir": g.cache_dir,
        });
        if let (Value::Object(c), Value::Object(e)) = (&mut c, extra) {
            c.extend(e);
        }
        c
    }
}

/// Result of a command: JSON payload, plain rendering, optional CSV, and
/// the verdict that sets the exit status.
struct Outcome {
    extra_config: Value,
    result: Value,
    plain: String,
    csv: Option<String>,
    verdict: bool,
}

impl Outcome {
    fn new(result: Value, plain: String) -> Self {
        Outcome {
            extra_config: json!({}),
            result,
            plain,
            csv: None,
            verdict: true,
        }
    }

    fn with_config(mut self, extra: Value) -> Self {
        self.extra_config = extra;
        self
    }
}

fn points_text(p: &[CyclotomicNumber]) -> Vec<String> {
    p.iter().map(|x| x.to_string()).collect()
}

fn weight_config(w: &Weight) -> Value {
    json!({ "weight": w.to_string() })
}

fn cmd_basis(run: &Run) -> Result<Outcome, CliError> {
    let g = &run.global;
    let ctx = load_or_build(g.n, g.m, g.d, g.cache_dir.as_deref())?;
    if let Some(dir) = &g.cache_dir {
        ctx.save_cache(dir)?;
    }
    let by_prop = count_by_prop(g.n, g.n, g.m, g.d);
    let sections: serde_json::Map<String, Value> = by_prop
        .iter()
        .rev()
        .map(|(l, c)| (l.to_string(), json!(c.to_string())))
        .collect();
    let diagrams: Vec<String> = ctx.basis().iter().map(|x| x.to_string()).collect();
    let mut plain = format!("dim {}\n", ctx.dim());
    for (l, c) in by_prop.iter().rev() {
        plain.push_str(&format!("l={}: {}\n", l, c));
    }
    for x in &diagrams {
        plain.push_str(x);
        plain.push('\n');
    }
    Ok(Outcome::new(
        json!({ "dim": ctx.dim(), "by_prop": sections, "diagrams": diagrams }),
        plain,
    ))
}

fn cmd_weights(run: &Run) -> Result<Outcome, CliError> {
    let g = &run.global;
    let lattice = weights(g.n, g.m, g.d);
    let labels = simple_labels(g.n, g.m, g.d);
    let all: Vec<String> = lattice.all().iter().map(|w| w.to_string()).collect();
    let strata: serde_json::Map<String, Value> = lattice
        .strata
        .iter()
        .rev()
        .map(|(l, ws)| (l.to_string(), json!(ws.len())))
        .collect();
    let entered: Vec<Value> = labels
        .iter()
        .map(|s| json!({ "weight": s.weight.to_string(), "introduced_at": s.introduced_at }))
        .collect();
    let plain = format!("{} labels\n{}\n", all.len(), all.join("\n"));
    Ok(Outcome::new(
        json!({ "count": all.len(), "weights": all, "strata": strata, "labels": entered }),
        plain,
    ))
}

fn cmd_gram(run: &Run, w: &Weight) -> Result<Outcome, CliError> {
    let g = &run.global;
    let module = StandardModule::new(g.n, g.m, g.d, w.clone())?;
    let gram = module.gram_matrix();
    let mut result = gram.to_json(module.basis());
    let mut plain = String::new();
    for r in gram.entries.to_rows() {
        let cells: Vec<String> = r.iter().map(|c| c.to_string()).collect();
        plain.push_str(&cells.join("\t"));
        plain.push('\n');
    }
    let mut csv = None;
    if let Some(p) = &run.point {
        let values = gram.evaluate(p)?;
        let rows: Vec<Vec<String>> = values.to_rows().iter().map(|r| points_text(r)).collect();
        result["evaluated"] = json!(rows);
        csv = Some(gram.to_csv(p)?);
    } else if g.format == Format::Csv {
        return Err(CliError::Usage("csv output needs --delta".into()));
    }
    let mut out = Outcome::new(result, plain).with_config(weight_config(w));
    out.csv = csv;
    Ok(out)
}

fn cmd_gramdet(run: &Run, w: &Weight) -> Result<Outcome, CliError> {
    let g = &run.global;
    let gram = gram_matrix(g.n, g.m, g.d, w)?;
    let det = match &run.point {
        Some(p) => gram.determinant_at(p)?.to_string(),
        None => gram.determinant()?.to_string(),
    };
    let result = json!({
        "weight": w.to_string(),
        "dim": gram.dim(),
        "evaluated": run.point.is_some(),
        "determinant": det,
    });
    Ok(Outcome::new(result, format!("{}\n", det)).with_config(weight_config(w)))
}

fn cmd_ss(run: &Run) -> Result<Outcome, CliError> {
    let g = &run.global;
    let (point, generic) = run.point_or_generic();
    let cert = semisimplicity_certificate(g.n, g.m, g.d, &point)?;
    let mut plain = format!(
        "{}\n",
        if cert.semisimple { "semisimple" } else { "not semisimple" }
    );
    for v in &cert.vanishing {
        plain.push_str(&format!("vanishing: n={} {}\n", v.n, v.weight));
    }
    let mut result = serde_json::to_value(&cert).expect("certificate serializes");
    result["generic_point"] = json!(generic);
    let mut out = Outcome::new(result, plain);
    out.verdict = cert.semisimple;
    Ok(out)
}

fn cmd_homs(run: &Run, source: &Weight, target: &Weight) -> Result<Outcome, CliError> {
    let g = &run.global;
    let (point, generic) = run.point_or_generic();
    let h = hom_space(g.n, g.m, g.d, source, target, &point, g.pivot)?;
    let mut result = h.to_json();
    result["generic_point"] = json!(generic);
    let plain = format!("dim Hom({}, {}) = {}\n", source, target, h.dimension());
    Ok(Outcome::new(result, plain)
        .with_config(json!({ "weight": source.to_string(), "target": target.to_string() })))
}

fn cmd_axioms(run: &Run, axiom: Option<Axiom>) -> Result<Outcome, CliError> {
    let g = &run.global;
    let reports = match axiom {
        Some(a) => vec![check_axiom(a, g.n, g.m, g.d, g.pivot)?],
        None => check_all(g.n, g.m, g.d, g.pivot)?,
    };
    let verdict = reports.iter().all(|r| r.verdict);
    let mut plain = String::new();
    for r in &reports {
        plain.push_str(&format!(
            "{} {} ({} checks, {})\n",
            r.axiom,
            if r.verdict { "pass" } else { "FAIL" },
            r.checks,
            r.mode
        ));
        for w in &r.witness {
            plain.push_str(&format!("  {}\n", w));
        }
    }
    let mut out = Outcome::new(json!({ "verdict": verdict, "reports": reports }), plain)
        .with_config(json!({ "axiom": axiom.map(|a| a.to_string()) }));
    out.verdict = verdict;
    Ok(out)
}

fn filtration_plain(r: &contour::modules::FiltrationReport) -> String {
    let mut s = format!("level {} dim {}\n", r.level, r.total_dim);
    for l in &r.layers {
        s.push_str(&format!(
            "{:?} {} x{} (dim {})\n",
            l.role, l.weight, l.multiplicity, l.dimension
        ));
    }
    s
}

fn cmd_res(run: &Run, w: &Weight) -> Result<Outcome, CliError> {
    let g = &run.global;
    let r = restriction_filtration(&StandardModule::new(g.n, g.m, g.d, w.clone())?)?;
    let plain = filtration_plain(&r);
    let mut out = Outcome::new(serde_json::to_value(&r).expect("report serializes"), plain).with_config(weight_config(w));
    out.verdict = r.passed();
    Ok(out)
}

fn cmd_ind(run: &Run, w: &Weight) -> Result<Outcome, CliError> {
    let g = &run.global;
    let r = induction_support(g.n, g.m, g.d, w)?;
    let plain = filtration_plain(&r);
    let mut out = Outcome::new(serde_json::to_value(&r).expect("report serializes"), plain).with_config(weight_config(w));
    out.verdict = r.passed();
    Ok(out)
}

fn execute(cli: Cli) -> Result<(String, bool), CliError> {
    let run = Run::new(cli.global)?;
    let format = run.global.format;
    if format == Format::Csv && !matches!(cli.command, Command::Gram(_)) {
        return Err(CliError::Usage("csv output is only available for gram".into()));
    }
    let start = Instant::now();
    let out = match &cli.command {
        Command::Basis => cmd_basis(&run)?,
        Command::Weights => cmd_weights(&run)?,
        Command::Gram(a) => cmd_gram(&run, &a.weight)?,
        Command::Gramdet(a) => cmd_gramdet(&run, &a.weight)?,
        Command::Ss => cmd_ss(&run)?,
        Command::Homs { weight, target } => cmd_homs(&run, weight, target)?,
        Command::Axioms { axiom } => cmd_axioms(&run, *axiom)?,
        Command::Res(a) => cmd_res(&run, &a.weight)?,
        Command::Ind(a) => cmd_ind(&run, &a.weight)?,
    };
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let text = match format {
        Format::Plain => out.plain,
        Format::Csv => out.csv.expect("csv checked above"),
        Format::Json => {
            let doc = json!({
                "config": run.config(out.extra_config),
                "result": out.result,
                "timing_ms": if run.global.timing { json!(elapsed) } else { Value::Null },
            });
            serde_json::to_string_pretty(&doc).expect("document serializes") + "\n"
        }
    };
    Ok((text, out.verdict))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok((text, verdict)) => {
            print!("{}", text);
            if verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
