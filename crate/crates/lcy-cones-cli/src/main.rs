//! Command-line front door: build family models, compute their cones and
//! dual bases, run chamber reductions and fundamental-domain membership
//! tests, and execute the verification suites.
//!
//! Exit codes: 0 success, 1 check failure, 2 usage error.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lcy_cones::arith::rat_to_string;
use lcy_cones::cones::surface_cones;
use lcy_cones::coxeter::{self, DomainMembership};
use lcy_cones::surface::duals;
use lcy_cones::verify;
use lcy_cones::{ClassVector, Int, RationalCone, SurfaceModel};

#[derive(Parser)]
#[command(name = "lcy-cones", version, about = "Exact cone engine for log Calabi-Yau surface families")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Reserved; every algorithm here is exact and deterministic, so no
    /// seed is consumed.
    #[arg(long, global = true, hide_short_help = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Clone)]
struct ModelSource {
    /// Boundary length (build the model inline together with --p).
    #[arg(long)]
    n: Option<usize>,
    /// Blowup depths, one per boundary component.
    #[arg(long, num_args = 1.., value_name = "P")]
    p: Vec<usize>,
    /// Read a model JSON from standard input.
    #[arg(long)]
    stdin: bool,
    /// Read a model JSON from a file.
    #[arg(long, value_name = "FILE")]
    model: Option<String>,
}

impl ModelSource {
    fn load(&self) -> Result<SurfaceModel, String> {
        let model = if self.stdin {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| e.to_string())?;
            serde_json::from_str(&buf).map_err(|e| format!("invalid model JSON: {e}"))?
        } else if let Some(path) = &self.model {
            let buf = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
            serde_json::from_str(&buf).map_err(|e| format!("invalid model JSON: {e}"))?
        } else if let Some(n) = self.n {
            SurfaceModel::build_family(n, &self.p).map_err(|e| e.to_string())?
        } else {
            return Err("a model is required: --n/--p, --stdin or --model FILE".into());
        };
        check_rank_guard(model.form.rank)?;
        Ok(model)
    }
}

/// `LCY_CONES_MAX_RANK` bounds the ambient rank accepted for cone
/// computations.
fn check_rank_guard(rank: usize) -> Result<(), String> {
    if let Ok(value) = std::env::var("LCY_CONES_MAX_RANK") {
        let limit: usize = value
            .parse()
            .map_err(|_| format!("LCY_CONES_MAX_RANK is not a number: {value}"))?;
        if rank > limit {
            return Err(format!(
                "ambient rank {rank} exceeds LCY_CONES_MAX_RANK = {limit}"
            ));
        }
    }
    Ok(())
}

#[derive(Subcommand)]
enum Command {
    /// Build a family model and print it.
    Family {
        n: usize,
        #[arg(num_args = 1..)]
        p: Vec<usize>,
    },
    /// The cone of curves of a model.
    Curves {
        #[command(flatten)]
        source: ModelSource,
    },
    /// The nef cone of a model.
    Nef {
        #[command(flatten)]
        source: ModelSource,
    },
    /// Gram-inverse dual basis of the family curve basis.
    DualBasis {
        #[command(flatten)]
        source: ModelSource,
    },
    /// Reduce a class into the fundamental chamber.
    Reduce {
        #[command(flatten)]
        source: ModelSource,
        #[arg(long, default_value_t = 10_000)]
        max_iter: usize,
        /// Class in ambient coordinates.
        #[arg(num_args = 1.., allow_negative_numbers = true)]
        x: Vec<i64>,
    },
    /// Fundamental-domain membership up to a word radius: the first `rank`
    /// integers are the interior reference y, the rest the query x.
    Sigma {
        #[command(flatten)]
        source: ModelSource,
        #[arg(long, default_value_t = 3)]
        radius: usize,
        /// JSON file with extra group generators: [{"label", "matrix"}].
        #[arg(long, value_name = "FILE")]
        extra: Option<String>,
        #[arg(num_args = 2.., allow_negative_numbers = true)]
        coords: Vec<i64>,
    },
    /// Run the verification suites.
    Verify {
        /// Run the whole desk grid.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, num_args = 1.., value_name = "P")]
        p: Vec<usize>,
        /// Read a model JSON from standard input, check that it round-trips
        /// through the builder, and verify it.
        #[arg(long)]
        stdin: bool,
        /// Override the grid bounds: per-chain depth and total depth.
        #[arg(long, num_args = 2, value_names = ["MAX_DEPTH", "MAX_TOTAL"])]
        grid: Option<Vec<usize>>,
    },
    /// Emit the Mori-Dream-Space certificate for a family model.
    Mds {
        n: usize,
        #[arg(num_args = 1..)]
        p: Vec<usize>,
    },
}

fn cone_json(c: &RationalCone) -> serde_json::Value {
    serde_json::to_value(c).expect("cone serializes")
}

fn cone_text(c: &RationalCone) -> String {
    let mut out = format!("ambient rank {}, {} rays\n", c.ambient_rank, c.rays.len());
    for r in &c.rays {
        out.push_str(&format!(
            "  ({})\n",
            r.coords
                .iter()
                .map(Int::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Family { n, p } => {
            let model = SurfaceModel::build_family(*n, p).map_err(|e| e.to_string())?;
            check_rank_guard(model.form.rank)?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&model).expect("model serializes")
                ),
                Format::Text => {
                    println!("n={} p={:?} rank={}", model.n, model.p, model.form.rank);
                    for c in &model.curves {
                        println!(
                            "  {:14} {:22} ({})",
                            c.label,
                            format!("{:?}", c.kind),
                            c.cls
                                .coords
                                .iter()
                                .map(Int::to_string)
                                .collect::<Vec<_>>()
                                .join(", ")
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Curves { source } => {
            let model = source.load()?;
            let cone = surface_cones::cone_of_curves(&model).map_err(|e| e.to_string())?;
            emit_cone(cli.format, &cone);
            Ok(ExitCode::SUCCESS)
        }
        Command::Nef { source } => {
            let model = source.load()?;
            let cone = surface_cones::nef_cone(&model).map_err(|e| e.to_string())?;
            emit_cone(cli.format, &cone);
            Ok(ExitCode::SUCCESS)
        }
        Command::DualBasis { source } => {
            let model = source.load()?;
            let basis = duals::family_basis(&model).map_err(|e| e.to_string())?;
            let labels = duals::family_basis_labels(&model).map_err(|e| e.to_string())?;
            let dual = model.form.dual_basis(&basis).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => {
                    let entries: Vec<serde_json::Value> = labels
                        .iter()
                        .zip(&dual)
                        .map(|(label, d)| {
                            serde_json::json!({
                                "label": label,
                                "coords": d.coords.iter().map(rat_to_string).collect::<Vec<_>>(),
                                "integral": d.is_integral(),
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::Value::Array(entries))
                            .expect("serializes")
                    );
                }
                Format::Text => {
                    for (label, d) in labels.iter().zip(&dual) {
                        println!(
                            "{:14}* = ({})",
                            label,
                            d.coords.iter().map(rat_to_string).collect::<Vec<_>>().join(", ")
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce {
            source,
            max_iter,
            x,
        } => {
            let model = source.load()?;
            if x.len() != model.form.rank {
                return Err(format!(
                    "expected {} coordinates, got {}",
                    model.form.rank,
                    x.len()
                ));
            }
            let rs = coxeter::simple_roots(&model);
            let input = ClassVector::from_i64(x);
            let trace = coxeter::chamber_reduce(&rs, &input, *max_iter).map_err(|e| e.to_string())?;
            let word_labels: Vec<&str> =
                trace.word.iter().map(|&i| rs.labels[i].as_str()).collect();
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "input": trace.input.coords.iter().map(Int::to_string).collect::<Vec<_>>(),
                        "word": word_labels,
                        "output": trace.output.coords.iter().map(Int::to_string).collect::<Vec<_>>(),
                        "iterations": trace.iterations,
                    })
                ),
                Format::Text => println!(
                    "word [{}] ({} steps) -> ({})",
                    word_labels.join(", "),
                    trace.iterations,
                    trace
                        .output
                        .coords
                        .iter()
                        .map(Int::to_string)
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Sigma {
            source,
            radius,
            coords,
        } => {
            let model = source.load()?;
            let rank = model.form.rank;
            if coords.len() != 2 * rank {
                return Err(format!(
                    "expected {} coordinates (y then x), got {}",
                    2 * rank,
                    coords.len()
                ));
            }
            let y = ClassVector::from_i64(&coords[..rank]);
            let x = ClassVector::from_i64(&coords[rank..]);
            let result =
                coxeter::sigma_membership(&model, &y, &x, *radius, &[]).map_err(|e| e.to_string())?;
            let (verdict, word) = match &result.status {
                DomainMembership::VerifiedToRadius(r) => (format!("verified_to_radius {r}"), None),
                DomainMembership::Violated(w) => ("violated".to_string(), Some(w.clone())),
            };
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::json!({
                        "status": verdict,
                        "witness": word,
                    })
                ),
                Format::Text => match word {
                    Some(w) => println!("violated by word [{}]", w.join(", ")),
                    None => println!("{verdict}"),
                },
            }
            let ok = matches!(result.status, DomainMembership::VerifiedToRadius(_));
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Verify {
            all,
            n,
            p,
            stdin,
            grid,
        } => {
            let jobs: Vec<(usize, Vec<usize>)> = if *stdin {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| e.to_string())?;
                let model: SurfaceModel =
                    serde_json::from_str(&buf).map_err(|e| format!("invalid model JSON: {e}"))?;
                // Round-trip identity: rebuilding from (n, p) must reproduce
                // the parsed model exactly.
                let rebuilt =
                    SurfaceModel::build_family(model.n, &model.p).map_err(|e| e.to_string())?;
                if rebuilt != model {
                    eprintln!("model does not round-trip through the family builder");
                    return Ok(ExitCode::from(1));
                }
                vec![(model.n, model.p.clone())]
            } else if *all || n.is_none() {
                match grid {
                    Some(bounds) => verify::desk_grid_bounded(bounds[0], bounds[1]),
                    None => verify::desk_grid(),
                }
            } else {
                vec![(n.unwrap(), p.clone())]
            };
            for (n, p) in &jobs {
                check_rank_guard(base_rank(*n)? + p.iter().sum::<usize>())?;
            }
            let started = Instant::now();
            let results = verify::run_suites(&jobs);
            // Timing goes to stderr so reports stay byte-identical.
            eprintln!(
                "verified {} model(s) in {:?}",
                jobs.len(),
                started.elapsed()
            );
            let mut any_fail = false;
            let mut reports = Vec::new();
            for result in results {
                let report = result.map_err(|e| e.to_string())?;
                any_fail |= report.has_fail();
                match cli.format {
                    Format::Json => reports.push(report),
                    Format::Text => print!("{}", report.to_text()),
                }
            }
            if cli.format == Format::Json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("reports serialize")
                );
            }
            Ok(if any_fail {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Mds { n, p } => {
            check_rank_guard(base_rank(*n)? + p.iter().sum::<usize>())?;
            let cert = verify::mds_certificate(*n, p).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&cert).expect("certificate serializes")
                ),
                Format::Text => {
                    println!(
                        "n={} p={:?} rank={} picard_structure={}",
                        cert.n, cert.p, cert.rank, cert.picard_structure
                    );
                    println!(
                        "curve cone: {} generators; nef cone: {} extreme rays",
                        cert.curve_rays.len(),
                        cert.nef_rays.len()
                    );
                    println!("{}", cert.semiample_note);
                }
            }
            Ok(if cert.picard_structure {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn emit_cone(format: Format, cone: &RationalCone) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&cone_json(cone)).expect("serializes")
        ),
        Format::Text => print!("{}", cone_text(cone)),
    }
}

fn base_rank(n: usize) -> Result<usize, String> {
    SurfaceModel::base_surface(n)
        .map(|m| m.form.rank)
        .map_err(|e| e.to_string())
}
