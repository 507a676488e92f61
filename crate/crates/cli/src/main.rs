mod args;

/// `println!` that ignores a closed stdout, e.g. when piped into `head`.
macro_rules! say {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, ExportFormat, RepInput, ThetaMode};
use mtg_core::construct::construct_family;
use mtg_core::graphs::{build_family, parse_family_spec};
use mtg_core::oracle::{theta_search, Budget, SearchOptions};
use mtg_core::represent::{check_coloring_lemmas, color_triangles, verify};
use mtg_core::theta::theta_formula;
use mtg_core::{FamilySpec, Graph, Representation};

const OK: u8 = 0;
const FAILED: u8 = 1;
const NOT_TIGHT: u8 = 2;
const USAGE: u8 = 3;
const BUDGET: u8 = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = if e.use_stderr() { USAGE } else { OK };
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(USAGE)
        }
    }
}

fn spec(text: &str) -> anyhow::Result<FamilySpec> {
    let s = parse_family_spec(text)?;
    s.validate()?;
    Ok(s)
}

fn to_json<T: serde::Serialize>(v: &T) -> anyhow::Result<String> {
    // via Value so object keys come out sorted
    Ok(serde_json::to_string_pretty(&serde_json::to_value(v)?)?)
}

fn emit(text: &str, output: Option<&Path>) -> anyhow::Result<()> {
    match output {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            say!("{text}");
            Ok(())
        }
    }
}

fn read_json(path: &Path) -> anyhow::Result<Value> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// The value itself, or its `key` entry when it is a bundle.
fn unwrap_bundle(v: Value, key: &str) -> Value {
    match v {
        Value::Object(mut m) if m.contains_key(key) => m.remove(key).unwrap_or(Value::Null),
        other => other,
    }
}

fn load_graph(path: &Path) -> anyhow::Result<Graph> {
    let v = unwrap_bundle(read_json(path)?, "graph");
    serde_json::from_value(v).with_context(|| format!("{} is not a graph", path.display()))
}

fn load_input(input: &RepInput) -> anyhow::Result<(Graph, Representation)> {
    let g = load_graph(&input.graph)?;
    let v = unwrap_bundle(read_json(&input.rep)?, "representation");
    let rep = serde_json::from_value(v).with_context(|| format!("{} is not a representation", input.rep.display()))?;
    Ok((g, rep))
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    match &cli.command {
        Command::Build { spec: text, output } => {
            let g = build_family(&spec(text)?)?;
            emit(&to_json(&g)?, output.as_deref())?;
            if output.is_some() && !cli.json {
                say!("{text}: {} vertices, {} edges", g.order(), g.size());
            }
            Ok(OK)
        }
        Command::Construct { spec: text, output } => {
            let s = spec(text)?;
            let c = construct_family(&s)?;
            let cert = c.certificate(&s)?;
            match output {
                Some(p) => {
                    emit(&to_json(&cert)?, Some(p))?;
                    if !cli.json {
                        say!(
                            "{s}: {} thresholds, verified, {}",
                            c.threshold_count(),
                            if c.tight { "tight" } else { "not tight" }
                        );
                    }
                }
                None => emit(&to_json(&cert)?, None)?,
            }
            Ok(OK)
        }
        Command::Verify { input } => {
            let (g, rep) = load_input(input)?;
            let report = verify(&g, &rep)?;
            if cli.json {
                say!("{}", to_json(&report)?);
            } else if report.ok {
                say!(
                    "ok: {} pairs, {} thresholds",
                    g.order() * g.order().saturating_sub(1) / 2,
                    rep.k()
                );
            } else {
                say!("{} violating pairs", report.violations.len());
                say!("{:<10} {:<8} {:<9} sum", "pair", "region", "expected");
                for v in &report.violations {
                    let pair = format!("{}-{}", v.pair.0, v.pair.1);
                    say!(
                        "{pair:<10} {:<8} {:<9} {}",
                        v.region,
                        format!("{:?}", v.expected).to_lowercase(),
                        v.sum
                    );
                }
            }
            Ok(if report.ok { OK } else { FAILED })
        }
        Command::Certify { spec: text } => certify(cli, text),
        Command::Theta { mode } => match mode {
            ThetaMode::Formula { spec: text } => {
                let s = spec(text)?;
                let r = theta_formula(&s)?;
                if cli.json {
                    say!("{}", to_json(&json!({ "spec": s.to_string(), "theta": r }))?);
                } else {
                    let flag = if r.boundary { " (boundary)" } else { "" };
                    say!("{s}: {}{flag} [{}]", r.value, to_json(&r.source)?.trim_matches('"'));
                }
                Ok(OK)
            }
            ThetaMode::Oracle {
                graph,
                spec: text,
                max_k,
                budget_nodes,
                timeout,
                workers,
                output,
            } => {
                let g = match (graph, text) {
                    (Some(p), _) => load_graph(p)?,
                    (None, Some(t)) => build_family(&spec(t)?)?,
                    (None, None) => return Err(anyhow!("give --graph or --spec")),
                };
                let timeout = match timeout {
                    Some(t) if !t.is_finite() || *t < 0.0 => {
                        return Err(anyhow!("timeout must be a nonnegative number"))
                    }
                    Some(t) => Some(Duration::from_secs_f64(*t)),
                    None => None,
                };
                let options = SearchOptions {
                    budget: Budget {
                        max_nodes: *budget_nodes,
                        timeout,
                    },
                    workers: *workers,
                };
                let r = theta_search(&g, *max_k, &options)?;
                if let (Some(p), Some(w)) = (output, &r.witness) {
                    emit(&to_json(w)?, Some(p))?;
                }
                if cli.json {
                    say!("{}", to_json(&r)?);
                } else {
                    say!("theta: {}", r.result.value);
                    say!("{:<4} {:<8} nodes", "k", "verdict");
                    for s in &r.steps {
                        say!("{:<4} {:<8} {}", s.k, to_json(&s.verdict)?.trim_matches('"'), s.nodes);
                    }
                }
                Ok(if r.budget_exceeded() { BUDGET } else { OK })
            }
        },
        Command::Color { input } => {
            let (g, rep) = load_input(input)?;
            let report = verify(&g, &rep)?;
            if !report.ok {
                eprintln!(
                    "representation does not verify ({} violating pairs)",
                    report.violations.len()
                );
                return Ok(FAILED);
            }
            let triangles = g.triangle_components();
            let coloring = color_triangles(&g, &rep, &triangles)?;
            let lemmas = check_coloring_lemmas(&coloring);
            if cli.json {
                let out = json!({
                    "triangles": triangles,
                    "coloring": coloring,
                    "lemmas": match &lemmas { Ok(()) => "ok".to_string(), Err(v) => v.to_string() },
                });
                say!("{}", to_json(&out)?);
            } else {
                say!("{} colors, {} triangles", coloring.colors, triangles.len());
                for (t, m) in triangles.iter().zip(&coloring.multisets) {
                    say!("{:?} -> {{{},{},{}}}", t, m[0], m[1], m[2]);
                }
                match &lemmas {
                    Ok(()) => say!("coloring rules: ok"),
                    Err(v) => say!("coloring rules violated: {v}"),
                }
            }
            Ok(if lemmas.is_ok() { OK } else { FAILED })
        }
        Command::Export {
            format: ExportFormat::Dot { graph, output },
        } => {
            let g = load_graph(graph)?;
            emit(g.to_dot().trim_end(), output.as_deref())?;
            Ok(OK)
        }
    }
}

fn certify(cli: &Cli, text: &str) -> anyhow::Result<u8> {
    let s = spec(text)?;
    let formula = theta_formula(&s).ok();
    let c = match construct_family(&s) {
        Ok(c) => c,
        Err(mtg_core::Error::VerificationFailed(n)) => {
            eprintln!("construction failed verification ({n} violating pairs)");
            return Ok(FAILED);
        }
        Err(e) => return Err(e.into()),
    };
    let report = verify(&c.graph, &c.representation)?;
    let code = if !report.ok {
        FAILED
    } else if c.tight {
        OK
    } else {
        NOT_TIGHT
    };
    if cli.json {
        let out = json!({
            "spec": s.to_string(),
            "verified": report.ok,
            "threshold_count": c.threshold_count(),
            "formula": formula,
            "tight": c.tight,
            "exit_code": code,
        });
        say!("{}", to_json(&out)?);
    } else {
        let f = formula.map_or("none".to_string(), |r| r.value.to_string());
        say!(
            "{:<28} {:<9} {:<11} {:<8} tight",
            "spec",
            "verified",
            "thresholds",
            "formula"
        );
        say!(
            "{:<28} {:<9} {:<11} {:<8} {}",
            s.to_string(),
            report.ok,
            c.threshold_count(),
            f,
            c.tight
        );
    }
    Ok(code)
}
