//! `cocycle`: compute `H^1` of finite group actions and run the property
//! suites from the command line.
//!
//! Exit codes: `0` success, `1` a checked identity failed, `2` bad input.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cocycle::cohomology::{h1, verify_exact_sequence, CohomologySet};
use cocycle::forms::classify_forms;
use cocycle::io::{self, LoadedAction, LoadedGroup, SCHEMA_VERSION};
use cocycle::torsors::classify_torsors;
use cocycle::twisting::{fiber_analysis, twist_action};
use cocycle::verify::{verify, Suite, VerifyConfig};
use cocycle::{Error, Exec, Settings};

#[derive(Parser)]
#[command(name = "cocycle", version, about = "Nonabelian H^1 of finite group actions")]
struct Cli {
    /// Run every search on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Instance {
    /// Target group: file or catalog name.
    #[arg(long)]
    group: Option<String>,
    /// Acting group: file or catalog name.
    #[arg(long)]
    acting: Option<String>,
    /// Action file.
    #[arg(long)]
    action: PathBuf,
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Cocycles and cohomology classes, plus the exact sequence of a subgroup.
    H1 {
        #[command(flatten)]
        instance: Instance,
        /// Subgroup file; adds the exact sequence check.
        #[arg(long)]
        subgroup: Option<PathBuf>,
    },
    /// Run property suites over seeded random instances.
    Verify {
        /// exactness, twisting, forms, torsors, fibers, cardinality or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = VerifyConfig::default().count)]
        count: usize,
        #[arg(long, default_value_t = VerifyConfig::default().max_g)]
        max_g: usize,
        #[arg(long, default_value_t = VerifyConfig::default().max_gg)]
        max_gg: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Forms of the target classified by H^1 with values in its automorphisms.
    Forms {
        #[command(flatten)]
        instance: Instance,
    },
    /// Twist by a cocycle and describe the fibers over the quotient.
    Twist {
        #[command(flatten)]
        instance: Instance,
        /// `trivial` or comma-separated values, one per acting element.
        #[arg(long, default_value = "trivial")]
        cocycle: String,
        /// Normal invariant subgroup file (default: the whole group).
        #[arg(long)]
        subgroup: Option<PathBuf>,
    },
    /// Torsors up to isomorphism, matched with H^1.
    Torsors {
        #[command(flatten)]
        instance: Instance,
    },
}

/// Report plus whether every checked identity held.
struct Outcome {
    report: Value,
    pass: bool,
    summary: String,
    out: Option<PathBuf>,
}

fn load(instance: &Instance) -> Result<LoadedAction, Error> {
    let target = instance.group.as_deref().map(io::load_group_arg).transpose()?;
    let acting = instance.acting.as_deref().map(io::load_group_arg).transpose()?;
    io::load_action(&instance.action, acting, target)
}

fn labels(g: &LoadedGroup) -> Option<Vec<usize>> {
    g.is_relabelled().then(|| g.labels.clone())
}

fn header(command: &str, loaded: Option<&LoadedAction>) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(command));
    if let Some(l) = loaded {
        m.insert("acting".into(), json!(l.acting.name));
        m.insert("target".into(), json!(l.target.name));
        if let Some(x) = labels(&l.acting) {
            m.insert("acting_labels".into(), json!(x));
        }
        if let Some(x) = labels(&l.target) {
            m.insert("target_labels".into(), json!(x));
        }
    }
    m
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let mut settings = Settings::from_env()?;
    if cli.sequential {
        settings.exec = Exec::Sequential;
    }
    match cli.command {
        Command::H1 { instance, subgroup } => {
            let loaded = load(&instance)?;
            let h = h1(&loaded.action, &settings)?;
            let mut m = header("h1", Some(&loaded));
            let rep = to_value(&h.report());
            m.insert("z1_size".into(), rep["z1_size"].clone());
            m.insert("classes".into(), rep["classes"].clone());
            let mut pass = true;
            if let Some(path) = subgroup {
                let n = io::load_subgroup(&path, &loaded.target)?;
                let r = verify_exact_sequence(&loaded.action, &n, &settings)?;
                pass = r.all_pass();
                m.insert("subgroup".into(), json!(n.members()));
                m.insert("normal".into(), json!(r.normal));
                m.insert("terms".into(), to_value(&r.terms));
                m.insert("exactness".into(), to_value(&r.exactness));
                m.insert("note".into(), json!(r.note));
            }
            Ok(Outcome {
                summary: format!("|Z1| = {}, |H1| = {}", h.z1_size(), h.len()),
                report: Value::Object(m),
                pass,
                out: instance.out,
            })
        }
        Command::Verify { suite, seed, count, max_g, max_gg, out } => {
            let suites: Vec<Suite> = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse()?] };
            if count == 0 || max_g == 0 || max_gg == 0 {
                return Err(Error::Format("--count, --max-g and --max-gg must be positive".into()));
            }
            let r = verify(&suites, &VerifyConfig { seed, count, max_g, max_gg }, &settings)?;
            let summary = r
                .suites
                .iter()
                .map(|s| format!("{}: {} ({} checks, {} failed, {} skipped)", s.suite, if s.pass { "pass" } else { "FAIL" }, s.checks, s.failures, s.skipped))
                .collect::<Vec<_>>()
                .join("\n");
            let mut m = header("verify", None);
            if let Value::Object(body) = to_value(&r) {
                m.extend(body);
            }
            Ok(Outcome { report: Value::Object(m), pass: r.pass, summary, out })
        }
        Command::Forms { instance } => {
            let loaded = load(&instance)?;
            let c = classify_forms(&loaded.action, &settings)?;
            let mut m = header("forms", Some(&loaded));
            if let Value::Object(body) = to_value(&c.report()) {
                m.extend(body);
            }
            Ok(Outcome {
                summary: format!("{} form classes, |Aut| = {}", c.aut_h1.len(), c.aut.aut.order()),
                report: Value::Object(m),
                pass: c.matching_ok,
                out: instance.out,
            })
        }
        Command::Twist { instance, cocycle, subgroup } => {
            let loaded = load(&instance)?;
            let phi = io::parse_cocycle(&cocycle, &loaded)?;
            let n = match subgroup {
                Some(p) => io::load_subgroup(&p, &loaded.target)?,
                None => cocycle::group::Subgroup::whole(loaded.target.group.clone()),
            };
            let tw = twist_action(&loaded.action, &phi)?;
            let h = h1(&loaded.action, &settings)?;
            let fibers = fiber_analysis(&loaded.action, &n, &settings)?;
            let mu = h.class_of_values(phi.values()).expect("validated cocycle");
            let entry = &fibers.classes[mu];
            let mut m = header("twist", Some(&loaded));
            m.insert("cocycle".into(), json!(phi.values()));
            m.insert("class".into(), json!(mu));
            m.insert("subgroup".into(), json!(n.members()));
            m.insert(
                "twisted_images".into(),
                Value::Object(tw.action().images().iter().enumerate().map(|(s, img)| (s.to_string(), json!(img))).collect()),
            );
            m.insert("fiber".into(), json!(entry.fiber));
            m.insert("twisted_kernel_size".into(), json!(entry.twisted_kernel_size));
            m.insert("basepoint_class".into(), json!(mu == CohomologySet::BASEPOINT));
            m.insert("classes".into(), to_value(&fibers.classes));
            m.insert("projection".into(), to_value(&fibers.projection));
            Ok(Outcome {
                summary: format!("class {mu}: fiber {:?}, twisted kernel size {}", entry.fiber, entry.twisted_kernel_size),
                pass: fibers.all_ok(),
                report: Value::Object(m),
                out: instance.out,
            })
        }
        Command::Torsors { instance } => {
            let loaded = load(&instance)?;
            let c = classify_torsors(&loaded.action, &settings)?;
            let mut m = header("torsors", Some(&loaded));
            if let Value::Object(body) = to_value(&c) {
                m.extend(body);
            }
            Ok(Outcome {
                summary: format!("{} torsor classes, |H1| = {}", c.torsor_classes, c.h1_size),
                pass: c.matches,
                report: Value::Object(m),
                out: instance.out,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(o) => {
            let text = serde_json::to_string_pretty(&o.report).expect("reports serialize") + "\n";
            match &o.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            eprintln!("{}", o.summary);
            if o.pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("check failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
