//! `arcconn`: ac-numbers, classification and exhaustive searches for
//! finite graphs given as edge-list files.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use arcconn::arc::{ac_number, AcNumber, OMEGA_LEVEL};
use arcconn::canon::are_homeomorphic;
use arcconn::classify::{homeo_class, is_7ac_theorem, necessary_conditions, reduced_graph};
use arcconn::corpus::{corpus, verify_entry};
use arcconn::enumerate::{reduced_multigraphs, verify_minimality, Census};
use arcconn::planar::is_planar;
use arcconn::search::{run_search, ProfileExpr, SearchTask};
use arcconn::text::{read_graph, to_text};

#[derive(Parser)]
#[command(name = "arcconn", version, about = "n-arc-connectedness of finite graphs")]
struct Cli {
    /// Print one JSON object per line instead of key=value pairs.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Largest n (up to the cap) for which every n points lie on an arc.
    Acnum {
        file: PathBuf,
        #[arg(long, default_value_t = OMEGA_LEVEL)]
        cap: usize,
        /// Also print the least placement no arc covers.
        #[arg(long)]
        witness: bool,
    },
    /// Homeomorphism class, branch-point rules and reduced graph.
    Classify { file: PathBuf },
    /// Exit 0 if the two graphs are homeomorphic, 1 otherwise.
    Homeo { first: PathBuf, second: PathBuf },
    /// List homeomorphism classes with the given number of smoothed edges.
    Enumerate {
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        planar_only: bool,
        /// Also write each class as JSON with its edge list.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report classes in an edge range whose ac profile matches EXPR
    /// (`=k`, `=k,!k+1` or `omega`).
    Search {
        #[arg(long)]
        edges_min: usize,
        #[arg(long)]
        edges_max: usize,
        #[arg(long)]
        planar: bool,
        #[arg(long, allow_hyphen_values = true)]
        profile: String,
        /// Checkpoint file; created if missing, resumed if present.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Check the built-in corpus of known ac-numbers, the 7-ac
    /// characterization and edge-count minimality.
    VerifyPaper {
        /// Skip the subdivision re-check (the slowest part).
        #[arg(long)]
        no_refine: bool,
        /// Override an expected ac-number, e.g. `k33=7`.
        #[arg(long = "expect", value_name = "NAME=AC")]
        expect: Vec<String>,
    },
}

/// One output record: printed as `k=v k=v` or as a JSON object.
struct Out {
    json: bool,
}

impl Out {
    fn emit(&self, fields: &[(&str, Value)]) {
        let line = if self.json {
            let map: serde_json::Map<String, Value> =
                fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            Value::Object(map).to_string()
        } else {
            fields
                .iter()
                .map(|(k, v)| match v {
                    Value::String(s) => format!("{k}={s}"),
                    other => format!("{k}={other}"),
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut stdout = std::io::stdout().lock();
        let _ = writeln!(stdout, "{line}");
    }
}

fn ac_value(ac: AcNumber) -> Value {
    match ac {
        AcNumber::Finite(k) => json!(k),
        AcNumber::Omega => json!("omega"),
    }
}

/// Errors that are the caller's fault: unreadable or malformed input.
struct InputError(anyhow::Error);

type CmdResult = Result<ExitCode, InputError>;

impl<E: Into<anyhow::Error>> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = Out { json: cli.json };
    match run(cli.cmd, &out) {
        Ok(code) => code,
        Err(InputError(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd, out: &Out) -> CmdResult {
    match cmd {
        Cmd::Acnum { file, cap, witness } => {
            let g = read_graph(&file).with_context(|| file.display().to_string())?;
            let p = ac_number(&g, cap)?;
            let levels: Vec<String> = (2..=cap.clamp(2, OMEGA_LEVEL))
                .map(|n| format!("{n}:{}", if p.verdict(n) == Some(true) { "yes" } else { "no" }))
                .collect();
            let mut fields = vec![
                ("ac", ac_value(p.ac)),
                ("omega", json!(p.is_omega())),
                ("levels", json!(levels.join(","))),
            ];
            if witness {
                let cex = p.counterexample.as_ref().map_or("none".to_string(), |c| c.describe(&g));
                fields.push(("counterexample", json!(cex)));
            }
            out.emit(&fields);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Classify { file } => {
            let g = read_graph(&file).with_context(|| file.display().to_string())?;
            let report = necessary_conditions(&g);
            let reduced = reduced_graph(&g)?;
            let rules: Vec<&str> = report.fired.iter().map(|r| r.tag()).collect();
            out.emit(&[
                ("class", json!(homeo_class(&g).name())),
                ("omega", json!(is_7ac_theorem(&g))),
                ("rules", json!(format!("[{}]", rules.join(",")))),
                ("branch_points", json!(report.branch_points)),
                ("max_branch_degree", json!(report.max_branch_degree)),
                ("reduced_class", json!(homeo_class(&reduced.graph).name())),
                ("reduced_vertices", json!(reduced.graph.vertex_count())),
                ("reduced_edges", json!(reduced.graph.edge_count())),
                ("reduced_degenerate", json!(reduced.degenerate)),
            ]);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Homeo { first, second } => {
            let a = read_graph(&first).with_context(|| first.display().to_string())?;
            let b = read_graph(&second).with_context(|| second.display().to_string())?;
            let same = are_homeomorphic(&a, &b)?;
            out.emit(&[("homeomorphic", json!(same))]);
            Ok(if same { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Enumerate { edges, planar_only, out: file } => {
            let reps = reduced_multigraphs(edges)?;
            let mut sink = match &file {
                Some(p) => Some(std::io::BufWriter::new(
                    std::fs::File::create(p).with_context(|| p.display().to_string())?,
                )),
                None => None,
            };
            let mut count = 0;
            for r in &reps {
                let planar = is_planar(&r.graph)?;
                if planar_only && !planar {
                    continue;
                }
                count += 1;
                out.emit(&[
                    ("canon", json!(r.code.to_hex())),
                    ("vertices", json!(r.graph.vertex_count())),
                    ("edges", json!(r.graph.edge_count())),
                    ("planar", json!(planar)),
                ]);
                if let Some(w) = sink.as_mut() {
                    let rec = json!({
                        "canon": r.code.to_hex(),
                        "vertices": r.graph.vertex_count(),
                        "edges": r.graph.edge_count(),
                        "planar": planar,
                        "graph": to_text(&r.graph),
                    });
                    writeln!(w, "{rec}")?;
                }
            }
            if let Some(mut w) = sink {
                w.flush()?;
            }
            out.emit(&[("count", json!(count)), ("edges", json!(edges))]);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Search { edges_min, edges_max, planar, profile, resume, jobs } => {
            let profile: ProfileExpr = profile.parse()?;
            let task = SearchTask { edges_min, edges_max, planar_only: planar, profile, checkpoint: resume, jobs };
            let res = run_search(&task)?;
            for r in &res.matches {
                out.emit(&[
                    ("canon", json!(r.canon.to_hex())),
                    ("edges", json!(r.edges)),
                    ("planar", json!(r.planar)),
                    ("ac", ac_value(r.ac)),
                    ("omega", json!(r.omega)),
                ]);
            }
            out.emit(&[
                ("matches", json!(res.matches.len())),
                ("candidates", json!(res.candidates)),
                ("evaluated", json!(res.evaluated)),
                ("resumed", json!(res.resumed)),
            ]);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::VerifyPaper { no_refine, expect } => verify(out, !no_refine, &expect),
    }
}

fn verify(out: &Out, refine: bool, overrides: &[String]) -> CmdResult {
    let mut entries = corpus();
    for o in overrides {
        let (name, ac) = o.split_once('=').with_context(|| format!("`{o}`: expected NAME=AC"))?;
        let ac: AcNumber = ac.parse().map_err(anyhow::Error::msg)?;
        let Some(e) = entries.iter_mut().find(|e| e.name == name) else {
            return Err(anyhow::anyhow!("no corpus entry `{name}`").into());
        };
        e.expected_ac = ac;
    }
    let (mut passed, mut failed) = (0, 0);
    let mut tally = |pass: bool| if pass { passed += 1 } else { failed += 1 };
    for e in &entries {
        for c in verify_entry(e, refine)? {
            tally(c.pass);
            out.emit(&[
                ("status", json!(if c.pass { "PASS" } else { "FAIL" })),
                ("subject", json!(c.subject)),
                ("check", json!(c.what)),
                ("expected", json!(c.expected)),
                ("actual", json!(c.actual)),
                ("citation", json!(e.citation)),
            ]);
        }
    }
    let census = Census::new(9)?;
    for n in 2..=6 {
        let r = verify_minimality(&census, n)?;
        tally(r.holds());
        let sizes: Vec<String> = r.census.iter().map(|(k, c)| format!("{k}:{c}")).collect();
        out.emit(&[
            ("status", json!(if r.holds() { "PASS" } else { "FAIL" })),
            ("subject", json!(format!("ac={n}"))),
            ("check", json!("minimal-edges")),
            ("expected", json!(r.budget)),
            ("violations", json!(r.violations.len())),
            ("attained_by", json!(r.attained_by.unwrap_or_else(|| "none".into()))),
            ("census", json!(sizes.join(","))),
        ]);
    }
    out.emit(&[("passed", json!(passed)), ("failed", json!(failed))]);
    if failed > 0 {
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}
