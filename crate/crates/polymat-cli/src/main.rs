//! `polymat` — exact invariants of monomial ideals generated in one degree.
//!
//! Every subcommand reads ideals in the on-disk format of the `polymat`
//! library (a `n=<count>` header followed by one monomial per line, or the
//! equivalent JSON document) and prints either a human-readable line or, with
//! `--format structured`, a JSON record carrying the same information.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a genuine violation of a
//! checked property, 2 on input or usage errors.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use polymat::{
    census_unmixed, classify, dual_exchange_check, exchange_path, linear_quotients_revlex,
    minimal_vertex_covers, parse_ideal, parse_monomial, polymatroidal_check, product, radical,
    render_ideal_json, render_ideal_text, verify_classification, EnumSpec, Error, MonomialIdeal,
    Verdict, CENSUS_TSV_HEADER,
};

#[derive(Parser)]
#[command(
    name = "polymat",
    version,
    about = "Exact invariants of monomial ideals generated in one degree",
    long_about = "Computes vertex covers, linear quotients, the exchange property and the \
                  Cohen-Macaulay classification of monomial ideals generated in one degree, \
                  using exact integer arithmetic throughout."
)]
struct Cli {
    /// Output format: a human-readable line or a JSON record.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for the enumeration-backed subcommands.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    /// Drop variables dividing no generator before computing invariants.
    #[arg(long, global = true)]
    shrink: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the exchange property, printing a witness when it fails.
    Check { file: PathBuf },
    /// Print h, dimension, unmixedness, q, depth and Cohen-Macaulayness.
    Invariants { file: PathBuf },
    /// Print the full classification record for the ideal.
    Classify { file: PathBuf },
    /// Print the radical of the ideal in the ideal file format.
    Radical { file: PathBuf },
    /// Multiply two ideals and print the product in the ideal file format.
    Product { left: PathBuf, right: PathBuf },
    /// Walk the exchange path from generator v toward generator u.
    Path {
        file: PathBuf,
        /// Target generator, e.g. "x1*x2^2".
        #[arg(long)]
        u: String,
        /// Starting generator.
        #[arg(long)]
        v: String,
        /// 1-based variable index with u_i < v_i; the path pins v's exponent
        /// of x_i while approaching u everywhere else.
        #[arg(long)]
        i: usize,
    },
    /// Scan a generator space and print the census of unmixed non-CM
    /// polymatroidal ideals as TSV.
    Enumerate(SpaceArgs),
    /// Scan a generator space, verifying the classification and the exchange
    /// paths on every ideal in it.
    Verify(SpaceArgs),
}

/// The generator space `--n --d --cap` with optional cardinality bounds and
/// symmetry reduction.
#[derive(Args)]
struct SpaceArgs {
    /// Number of variables of the ambient ring.
    #[arg(long)]
    n: usize,
    /// Common degree of the candidate generators.
    #[arg(long)]
    d: u64,
    /// Upper bound on any single exponent (1 = squarefree).
    #[arg(long)]
    cap: u32,
    /// Smallest generator count to scan (default 1).
    #[arg(long = "min-gens")]
    min_gens: Option<usize>,
    /// Largest generator count to scan (default: the whole pool).
    #[arg(long = "max-gens")]
    max_gens: Option<usize>,
    /// Keep one representative per variable-permutation orbit (needs n <= 7).
    #[arg(long = "mod-sym")]
    mod_sym: bool,
}

impl SpaceArgs {
    fn to_spec(&self) -> EnumSpec {
        let mut spec = EnumSpec::new(self.n, self.d, self.cap);
        if let Some(lo) = self.min_gens {
            spec.min_gens = lo;
        }
        spec.max_gens = self.max_gens;
        spec.modulo_symmetry = self.mod_sym;
        spec
    }
}

fn main() -> ExitCode {
    // The census output is meant to be piped (`polymat enumerate ... | head`);
    // die quietly when the reader closes the pipe instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn load_ideal(path: &Path, shrink: bool) -> Result<MonomialIdeal, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let ideal = parse_ideal(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(if shrink {
        ideal.shrink_to_support().0
    } else {
        ideal
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => "none".to_string(),
    }
}

fn vars_set(vars: &[usize]) -> String {
    let inner = vars
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

fn run(cli: &Cli) -> Result<ExitCode, String> {
    let structured = cli.format == Format::Structured;
    match &cli.command {
        Command::Check { file } => {
            let ideal = load_ideal(file, cli.shrink)?;
            let check = polymatroidal_check(&ideal).map_err(|e| e.to_string())?;
            let matroidal = check.holds() && ideal.gens().iter().all(|g| g.is_squarefree());
            if structured {
                let dual = dual_exchange_check(&ideal).map_err(|e| e.to_string())?;
                let doc = json!({
                    "polymatroidal": check.holds(),
                    "matroidal": matroidal,
                    "dual_holds": dual.holds(),
                    "witness": check.witness(),
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!(
                    "polymatroidal={} matroidal={}",
                    yes_no(check.holds()),
                    yes_no(matroidal)
                );
                if let Some(w) = check.witness() {
                    println!(
                        "witness: u={} v={} i={} (u_i > v_i, but no j with u_j < v_j \
                         keeps x_j*u/x_i in the ideal)",
                        w.u, w.v, w.i
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Invariants { file } => {
            let ideal = load_ideal(file, cli.shrink)?;
            let covers = minimal_vertex_covers(&ideal).map_err(|e| e.to_string())?;
            let quotients = match linear_quotients_revlex(&ideal) {
                Ok(report) => Some(report),
                Err(Error::NotEquigenerated) => None,
                Err(e) => return Err(e.to_string()),
            };
            let n = ideal.num_vars();
            let q = quotients.as_ref().and_then(|r| r.q);
            let depth = quotients.as_ref().and_then(|r| r.depth);
            let cm = q.map(|q| covers.h == q + 1);
            if structured {
                let doc = json!({
                    "n": n,
                    "num_gens": ideal.num_gens(),
                    "h": covers.h,
                    "unmixed": covers.unmixed,
                    "dim": covers.dim,
                    "minimal_covers": covers.minimal_covers,
                    "linear": quotients.as_ref().map(|r| r.linear),
                    "q": q,
                    "depth": depth,
                    "cohen_macaulay": cm,
                });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                let mut line = format!(
                    "n={n} h={} unmixed={} q={} CM={}",
                    covers.h,
                    yes_no(covers.unmixed),
                    opt(&q),
                    match cm {
                        Some(b) => yes_no(b),
                        None => "unknown",
                    }
                );
                let _ = write!(line, " dim={} depth={}", covers.dim, opt(&depth));
                println!("{line}");
                match &quotients {
                    None => println!(
                        "note: generators have mixed degrees; q, depth and CM need a \
                         single-degree ideal"
                    ),
                    Some(r) if !r.linear => println!(
                        "note: no linear quotients in the reverse-lexicographic order \
                         (first failure at step {})",
                        opt(&r.first_nonlinear_step)
                    ),
                    _ => {}
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { file } => {
            let ideal = load_ideal(file, cli.shrink)?;
            let c = classify(&ideal).map_err(|e| e.to_string())?;
            if structured {
                println!("{}", serde_json::to_string_pretty(&c).unwrap());
            } else {
                let shape = match c.verdict {
                    Verdict::Principal => {
                        Some((ideal.gens()[0].support(), ideal.gens()[0].degree()))
                    }
                    Verdict::Veronese => c.veronese.as_ref().map(|s| (s.vars.clone(), s.degree)),
                    Verdict::SquarefreeVeronese => c
                        .squarefree_veronese
                        .as_ref()
                        .map(|s| (s.vars.clone(), s.degree)),
                    _ => None,
                };
                let mut line = format!("verdict={}", c.verdict);
                if let Some((vars, d)) = shape {
                    let _ = write!(line, " vars={} d={d}", vars_set(&vars));
                }
                let _ = write!(
                    line,
                    " h={} q={} CM={} dim={} depth={} polymatroidal={} matroidal={} unmixed={}",
                    c.h,
                    opt(&c.q),
                    match c.cohen_macaulay {
                        Some(b) => yes_no(b),
                        None => "unknown",
                    },
                    c.dim,
                    opt(&c.depth),
                    yes_no(c.polymatroidal),
                    yes_no(c.matroidal),
                    yes_no(c.unmixed)
                );
                println!("{line}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Radical { file } => {
            let ideal = load_ideal(file, cli.shrink)?;
            let rad = radical(&ideal);
            if structured {
                println!("{}", render_ideal_json(&rad));
            } else {
                print!("{}", render_ideal_text(&rad));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product { left, right } => {
            // Shrinking before multiplying could leave the factors in
            // different ambient rings, so it is applied to the product.
            let lhs = load_ideal(left, false)?;
            let rhs = load_ideal(right, false)?;
            let mut prod = product(&lhs, &rhs).map_err(|e| e.to_string())?;
            if cli.shrink {
                prod = prod.shrink_to_support().0;
            }
            if structured {
                println!("{}", render_ideal_json(&prod));
            } else {
                print!("{}", render_ideal_text(&prod));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Path { file, u, v, i } => {
            let ideal = load_ideal(file, cli.shrink)?;
            let n = ideal.num_vars();
            let u = parse_monomial(u, n).map_err(|e| format!("--u: {e}"))?;
            let v = parse_monomial(v, n).map_err(|e| format!("--v: {e}"))?;
            let path = exchange_path(&ideal, &u, &v, *i).map_err(|e| e.to_string())?;
            if structured {
                println!("{}", serde_json::to_string_pretty(&path).unwrap());
            } else {
                let steps = path
                    .steps
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" -> ");
                let distances = path
                    .distances
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" -> ");
                println!("path: {steps}");
                println!("distances to u: {distances}");
                let w = &path.witness;
                println!(
                    "witness: u={} v={} i={} j={} result={}",
                    w.u,
                    w.v,
                    w.i,
                    opt(&w.j),
                    opt(&w.result)
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate(space) => {
            let spec = space.to_spec();
            let (rows, summary) =
                census_unmixed(&spec, cli.workers).map_err(|e| e.to_string())?;
            if structured {
                let doc = json!({ "rows": rows, "summary": summary });
                println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            } else {
                println!("{CENSUS_TSV_HEADER}");
                for row in &rows {
                    println!("{}", row.tsv_line());
                }
                let c = &summary.counts;
                println!(
                    "# scanned={} rows={} principal={} veronese={} squarefree_veronese={} \
                     not_cm={} not_polymatroidal={} elapsed={:?}",
                    summary.ideals_scanned,
                    summary.rows_emitted,
                    c.principal,
                    c.veronese,
                    c.squarefree_veronese,
                    c.not_cohen_macaulay,
                    c.not_polymatroidal,
                    summary.elapsed
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(space) => {
            let spec = space.to_spec();
            match verify_classification(&spec, cli.workers) {
                Ok(report) => {
                    if structured {
                        println!("{}", serde_json::to_string_pretty(&report).unwrap());
                    } else {
                        let c = &report.counts;
                        println!(
                            "ideals={} polymatroidal={} violations=0 paths={} principal={} \
                             veronese={} squarefree_veronese={} not_cm={} not_polymatroidal={} \
                             elapsed={:?}",
                            report.ideals_checked,
                            c.cohen_macaulay() + c.not_cohen_macaulay,
                            report.paths_checked,
                            c.principal,
                            c.veronese,
                            c.squarefree_veronese,
                            c.not_cohen_macaulay,
                            c.not_polymatroidal,
                            report.elapsed
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::Violation { check, row }) => {
                    if structured {
                        let doc = json!({ "violation": check, "row": row });
                        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                    } else {
                        println!("violation found: {check}");
                        println!("{row}");
                    }
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.to_string()),
            }
        }
    }
}
