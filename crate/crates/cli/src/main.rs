//! `weylpi`: build weak-order lattices of simply-laced Weyl groups, export
//! their Hasse/FPoly/forcing quivers, print the join-irreducible arrays,
//! dump modules, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure (report still written),
//! 2 usage error, 3 resource guard (rank beyond desk scale).

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use weylpi_core::arrays::{jw_array, projective_array};
use weylpi_core::export;
use weylpi_core::ideals::Calculus;
use weylpi_core::verify::{self, Check, Status};
use weylpi_core::weyl::{CartanType, Family, JirrClass};
use weylpi_core::Q;

const EXIT_VERIFY_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;

/// Desk-scale guards.
const MAX_GROUP_ORDER: u64 = 50_000;
const MAX_PI_DIM: u64 = 500;

#[derive(Parser)]
#[command(name = "weylpi", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "E", alias = "e")]
    E,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Labels {
    None,
    Jirr,
    Mirr,
    Layer,
}

#[derive(Args)]
struct Target {
    /// Cartan family (A or D; E is recognized but not built)
    #[arg(value_enum)]
    family: FamilyArg,
    /// Rank (A: n >= 1, D: n >= 4)
    rank: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Jirr,
    Mirr,
    Layers,
    Projectives,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverKind {
    Hasse,
    Fpoly,
    Sfpoly,
}

#[derive(Subcommand)]
enum Command {
    /// Export the weak-order Hasse quiver, or its FPoly/SFPoly quiver
    Lattice {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "none")]
        labels: Labels,
        #[arg(long, value_enum, default_value = "hasse")]
        quiver: QuiverKind,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the forcing order on join-irreducible elements
    Forcing {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the J(w) arrays of all join-irreducible elements
    Arrays {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run verification suites; exit 0 iff every selected check passes
    Verify {
        #[command(flatten)]
        target: Target,
        /// `all` or a comma-separated list of check names
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 0xC0FFEE)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dump modules (J, M, layers, projectives) as JSON
    Module {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value = "jirr")]
        which: Which,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn usage_err(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn cartan_of(t: &Target) -> Result<CartanType, String> {
    let family = match t.family {
        FamilyArg::A => Family::A,
        FamilyArg::D => Family::D,
        FamilyArg::E => Family::E,
    };
    let c = CartanType::new(family, t.rank).map_err(|e| e.to_string())?;
    c.require_supported().map_err(|e| e.to_string())?;
    Ok(c)
}

fn dim_pi(c: CartanType) -> u64 {
    let n = c.rank as u64;
    match c.family {
        Family::A => n * (n + 1) * (n + 2) / 6,
        Family::D => n * (n - 1) + (2..n).map(|l| (n - l) * (n + l - 1)).sum::<u64>(),
        Family::E => u64::MAX,
    }
}

fn guard(c: CartanType) -> Result<(), String> {
    if c.group_order() > MAX_GROUP_ORDER {
        return Err(format!(
            "group order {} exceeds the desk-scale guard {MAX_GROUP_ORDER}",
            c.group_order()
        ));
    }
    if dim_pi(c) > MAX_PI_DIM {
        return Err(format!(
            "dim Pi = {} exceeds the desk-scale guard {MAX_PI_DIM}",
            dim_pi(c)
        ));
    }
    Ok(())
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

/// Warm the I(w) cache from `WEYLPI_CACHE_DIR` if present; write it back
/// after the run.
fn cache_path(c: CartanType) -> Option<PathBuf> {
    let dir = std::env::var_os("WEYLPI_CACHE_DIR")?;
    Some(PathBuf::from(dir).join(format!("ideals-{:?}{}-v1.json", c.family, c.rank)))
}

fn load_ideal_cache(calc: &Calculus<Q>) {
    let Some(path) = cache_path(calc.group.cartan) else {
        return;
    };
    let Ok(text) = std::fs::read_to_string(&path) else {
        return;
    };
    let Ok(value) = serde_json::from_str::<serde_json::Value>(&text) else {
        return;
    };
    calc.import_ideal_table(&value);
}

fn store_ideal_cache(calc: &Calculus<Q>) {
    let Some(path) = cache_path(calc.group.cartan) else {
        return;
    };
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    let table = calc.export_ideal_table();
    let _ = std::fs::write(&path, serde_json::to_string(&table).unwrap());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Lattice {
            target,
            labels,
            quiver,
            format,
            out,
        } => {
            let c = match cartan_of(&target) {
                Ok(c) => c,
                Err(e) => return Ok(usage_err(&e)),
            };
            if let Err(e) = guard(c) {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(EXIT_RESOURCE));
            }
            let calc: Calculus<Q> = Calculus::new(c)?;
            load_ideal_cache(&calc);
            if !matches!(quiver, QuiverKind::Hasse) {
                if !matches!(format, Format::Dot) {
                    return Ok(usage_err("fpoly/sfpoly export only dot"));
                }
                let (adj, name) = match quiver {
                    QuiverKind::Fpoly => (calc.lattice.fpoly()?, "fpoly"),
                    QuiverKind::Sfpoly => (calc.lattice.sfpoly()?, "sfpoly"),
                    QuiverKind::Hasse => unreachable!(),
                };
                emit(&out, &export::dot_arrow_quiver(&calc.lattice, &adj, name))?;
                return Ok(ExitCode::SUCCESS);
            }
            let labels = match labels {
                Labels::None => export::ArrowLabels::None,
                Labels::Jirr => export::ArrowLabels::Jirr,
                Labels::Mirr => export::ArrowLabels::Mirr,
                Labels::Layer => export::ArrowLabels::Layer,
            };
            let content = match format {
                Format::Dot => export::dot_hasse(&calc, labels),
                Format::Json => {
                    let arrows: Vec<serde_json::Value> = calc
                        .lattice
                        .arrows
                        .iter()
                        .map(|a| serde_json::json!([a.upper, a.lower]))
                        .collect();
                    let elements: Vec<serde_json::Value> = calc
                        .group
                        .elements
                        .iter()
                        .map(|e| serde_json::json!(e.window))
                        .collect();
                    format!(
                        "{}\n",
                        serde_json::json!({"elements": elements, "covers": arrows})
                    )
                }
                _ => return Ok(usage_err("lattice supports dot or json")),
            };
            store_ideal_cache(&calc);
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Forcing {
            target,
            format,
            out,
        } => {
            let c = match cartan_of(&target) {
                Ok(c) => c,
                Err(e) => return Ok(usage_err(&e)),
            };
            if let Err(e) = guard(c) {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(EXIT_RESOURCE));
            }
            let calc: Calculus<Q> = Calculus::new(c)?;
            let content = match format {
                Format::Dot => export::dot_forcing(&calc)?,
                Format::Json => format!("{}\n", export::json_forcing(&calc)?),
                _ => return Ok(usage_err("forcing supports dot or json")),
            };
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Arrays {
            target,
            format,
            out,
        } => {
            let c = match cartan_of(&target) {
                Ok(c) => c,
                Err(e) => return Ok(usage_err(&e)),
            };
            if c.group_order() > MAX_GROUP_ORDER {
                eprintln!("error: group too large");
                return Ok(ExitCode::from(EXIT_RESOURCE));
            }
            let group = weylpi_core::WeylGroup::enumerate(c)?;
            let mut content = String::new();
            for e in &group.elements {
                if !matches!(e.classify_jirr(), JirrClass::Jirr { .. }) {
                    continue;
                }
                let shape = jw_array(e)?;
                match format {
                    Format::Text => {
                        content.push_str(&format!(
                            "J({:?})  type {}  closure {:?}\n{}\n",
                            e, shape.ell, shape.closure, shape.render_text()
                        ));
                    }
                    Format::Csv => {
                        content.push_str(&format!("# J({:?}) type {}\n", e, shape.ell));
                        content.push_str(&shape.render_csv());
                    }
                    _ => return Ok(usage_err("arrays supports text or csv")),
                }
            }
            // projective arrays as a trailer in text mode
            if matches!(format, Format::Text) {
                for l in c.simple_labels() {
                    let p = projective_array(c, l)?;
                    content.push_str(&format!("P_{l}\n{}\n", p.render_text()));
                }
            }
            emit(&out, &content)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            target,
            suite,
            format,
            seed,
            threads,
            out,
        } => {
            let c = match cartan_of(&target) {
                Ok(c) => c,
                Err(e) => return Ok(usage_err(&e)),
            };
            if let Err(e) = guard(c) {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(EXIT_RESOURCE));
            }
            let checks: Vec<Check> = if suite == "all" {
                Check::all()
            } else {
                let mut v = Vec::new();
                for name in suite.split(',') {
                    match Check::by_name(name.trim()) {
                        Some(ch) => v.push(ch),
                        None => return Ok(usage_err(&format!("unknown check '{name}'"))),
                    }
                }
                v
            };
            let reports = verify::run_suite(c, &checks, threads, seed)?;
            let content = match format {
                Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports)?),
                Format::Text => {
                    let mut s = String::new();
                    for r in &reports {
                        s.push_str(&format!(
                            "{:<20} {:>2}_{:<2} {:>7?} {:>8} ms\n",
                            r.check, r.family, r.rank, r.status, r.elapsed_ms
                        ));
                    }
                    s
                }
                _ => return Ok(usage_err("verify supports json or text")),
            };
            emit(&out, &content)?;
            let all_ok = reports.iter().all(|r| r.status != Status::Fail);
            Ok(if all_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY_FAIL)
            })
        }
        Command::Module {
            target,
            which,
            format,
            out,
        } => {
            let c = match cartan_of(&target) {
                Ok(c) => c,
                Err(e) => return Ok(usage_err(&e)),
            };
            if let Err(e) = guard(c) {
                eprintln!("error: {e}");
                return Ok(ExitCode::from(EXIT_RESOURCE));
            }
            if !matches!(format, Format::Json) {
                return Ok(usage_err("module supports json"));
            }
            let calc: Calculus<Q> = Calculus::new(c)?;
            load_ideal_cache(&calc);
            let mut items: Vec<serde_json::Value> = Vec::new();
            match which {
                Which::Jirr => {
                    for j in calc.group.jirr_ids() {
                        let m = calc.jmap(j)?;
                        items.push(serde_json::json!({
                            "window": calc.group.elements[j].window,
                            "module": export::json_module(&m),
                        }));
                    }
                }
                Which::Mirr => {
                    for m_id in calc.group.mirr_ids() {
                        let m = calc.mmap(m_id)?;
                        items.push(serde_json::json!({
                            "window": calc.group.elements[m_id].window,
                            "module": export::json_module(&m),
                        }));
                    }
                }
                Which::Layers => {
                    for arrow in 0..calc.lattice.arrows.len() {
                        let a = calc.lattice.arrows[arrow];
                        let l = calc.layer(arrow);
                        items.push(serde_json::json!({
                            "upper": calc.group.elements[a.upper].window,
                            "lower": calc.group.elements[a.lower].window,
                            "module": export::json_module(&l),
                        }));
                    }
                }
                Which::Projectives => {
                    for v in 0..calc.pi.vertex_count() {
                        let p = weylpi_core::rep::projective_rep(&calc.pi, v);
                        items.push(serde_json::json!({
                            "vertex": calc.pi.quiver.labels[v],
                            "module": export::json_module(&p),
                        }));
                    }
                }
            }
            store_ideal_cache(&calc);
            emit(&out, &format!("{}\n", serde_json::json!(items)))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
