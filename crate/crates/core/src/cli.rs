//! Command-line surface: graph generation, eigenvalue printing, bound
//! audits, Loewner checks, and the full sweep.
//!
//! Exit codes: 0 success, 2 invalid spec or unreadable input, 3 solver
//! failure, 4 hard-assertion failure in an audit. Data goes to stdout,
//! diagnostics to stderr.

use crate::bounds::{
    default_grid, errata_report, errata_table, hard_assertion_failures, random_connected_graph,
    to_csv, verify, GridInstance, InstanceParams,
};
use crate::eigensolver::{eig_symmetric, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::graph::{build_laplacian, Graph};
use crate::io::{parse_edge_list, write_dot, write_edge_list, write_json};
use crate::loewner::{domination_lower_bound, loewner_geq, path_inequality_check};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;

pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_SOLVER_FAILURE: i32 = 3;
pub const EXIT_HARD_ASSERTION: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "bridge-spectra",
    version,
    about = "Bridge-graph spectra and certified bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a family instance and write it in the chosen format.
    Gen(GenArgs),
    /// Print the Laplacian spectrum of a graph.
    Eig(EigArgs),
    /// Audit the registered bounds for one family instance (or a batch
    /// of random chain bases).
    Bound(BoundArgs),
    /// Certify Loewner order relations.
    Loewner(LoewnerArgs),
    /// Run the full default grid and write the report CSV plus errata table.
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Edgelist,
    Dot,
    Json,
}

/// Family selection flags shared by gen/eig/bound/loewner.
#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// Family name: complete, path, star, full-binary-tree, dumbbell,
    /// dumbbell-multi, star-bridge, tree-bridge, tree-multi, tree-chain,
    /// bridge-chain, general-bridge2k.
    #[arg(long)]
    pub family: Option<String>,
    /// Block size n.
    #[arg(long)]
    pub n: Option<usize>,
    /// Path length m (vertices).
    #[arg(long)]
    pub m: Option<usize>,
    /// Cross-edge count k.
    #[arg(long)]
    pub k: Option<usize>,
    /// Chain length l.
    #[arg(long)]
    pub l: Option<usize>,
    /// First attachment vertex (default: first block's center/root).
    #[arg(long)]
    pub attach1: Option<usize>,
    /// Second attachment vertex (default: second block's center/root).
    #[arg(long)]
    pub attach2: Option<usize>,
    /// Base graph edge-list file for bridge-chain / general-bridge2k.
    #[arg(long)]
    pub base: Option<PathBuf>,
}

impl FamilyArgs {
    pub fn to_spec(&self) -> Result<FamilySpec> {
        let family = self
            .family
            .as_deref()
            .ok_or_else(|| Error::InvalidParameter("--family is required".into()))?;
        let need = |opt: Option<usize>, name: &str| {
            opt.ok_or_else(|| Error::InvalidParameter(format!("{family} needs --{name}")))
        };
        let base = || -> Result<Graph> {
            let path = self
                .base
                .as_ref()
                .ok_or_else(|| Error::InvalidParameter(format!("{family} needs --base FILE")))?;
            parse_edge_list(&std::fs::read_to_string(path)?)
        };
        Ok(match family {
            "complete" => FamilySpec::Complete {
                n: need(self.n, "n")?,
            },
            "path" => FamilySpec::Path {
                m: need(self.m, "m")?,
            },
            "star" => FamilySpec::Star {
                n: need(self.n, "n")?,
            },
            "full-binary-tree" => FamilySpec::FullBinaryTree {
                h: crate::families::tree_height(need(self.n, "n")?)?,
            },
            "dumbbell" => FamilySpec::Dumbbell {
                n: need(self.n, "n")?,
                m: need(self.m, "m")?,
            },
            "dumbbell-multi" => FamilySpec::DumbbellMulti {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
                pairing: None,
            },
            "star-bridge" => {
                let n = need(self.n, "n")?;
                let m = need(self.m, "m")?;
                FamilySpec::StarBridge {
                    n,
                    m,
                    attach1: self.attach1.unwrap_or(1),
                    attach2: self.attach2.unwrap_or(n + m - 1),
                }
            }
            "tree-bridge" => {
                let n = need(self.n, "n")?;
                let m = need(self.m, "m")?;
                FamilySpec::TreeBridge {
                    n,
                    m,
                    attach1: self.attach1.unwrap_or(1),
                    attach2: self.attach2.unwrap_or(n + m - 1),
                }
            }
            "tree-multi" => FamilySpec::TreeMulti {
                n: need(self.n, "n")?,
                k: need(self.k, "k")?,
                pairing: None,
            },
            "tree-chain" => FamilySpec::TreeChain {
                n: need(self.n, "n")?,
                l: need(self.l, "l")?,
            },
            "bridge-chain" => FamilySpec::BridgeChain {
                base: base()?,
                l: need(self.l, "l")?,
                out_v: self.attach1.unwrap_or(1),
                in_v: self.attach2.unwrap_or(1),
            },
            "general-bridge2k" => FamilySpec::GeneralBridge2k {
                base: base()?,
                k: need(self.k, "k")?,
                pairing: None,
            },
            other => return Err(Error::InvalidParameter(format!("unknown family {other:?}"))),
        })
    }

    fn params(&self) -> InstanceParams {
        InstanceParams {
            n: self.n,
            m: self.m,
            k: self.k,
            l: self.l,
        }
    }
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    #[arg(long, value_enum, default_value = "edgelist")]
    pub format: Format,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct EigArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Read the graph from an edge-list file instead of a family spec.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Print only the second-smallest eigenvalue.
    #[arg(long)]
    pub lambda2: bool,
    /// Solver tolerance override (also via BRIDGE_SPECTRA_TOL).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Audit this many seeded random connected bases (bridge-chain /
    /// general-bridge2k).
    #[arg(long)]
    pub base_random: Option<usize>,
    #[arg(long, default_value = "42")]
    pub seed: u64,
    /// Print the family test vector as index:value pairs.
    #[arg(long)]
    pub show_vector: bool,
    /// CSV output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LoewnerArgs {
    /// Which check to run: pair, path, or domination.
    #[arg(long)]
    pub check: String,
    /// Path length for --check path.
    #[arg(long)]
    pub len: Option<usize>,
    /// Edge-list files for --check pair.
    #[arg(long)]
    pub g1: Option<PathBuf>,
    #[arg(long)]
    pub g2: Option<PathBuf>,
    /// Scale constant c; defaults to the proof-chain constant for
    /// domination on families that have one.
    #[arg(long)]
    pub c: Option<f64>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, default_value = "42")]
    pub seed: u64,
    /// Report CSV path.
    #[arg(long, default_value = "sweep.csv")]
    pub out: PathBuf,
    /// Errata table path; the table is also printed to stdout.
    #[arg(long)]
    pub errata_out: Option<PathBuf>,
    /// Worker threads for the grid (default 1 for byte-stable output).
    #[arg(long, default_value = "1")]
    pub jobs: usize,
}

fn fmt_sig(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let rounded: f64 = format!("{v:.14e}").parse().unwrap();
    format!("{rounded}")
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn effective_tol(flag: Option<f64>) -> f64 {
    flag.or_else(|| {
        std::env::var("BRIDGE_SPECTRA_TOL")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or(DEFAULT_TOL)
}

pub fn cmd_gen(args: &GenArgs) -> Result<()> {
    let spec = args.family.to_spec()?;
    let g = spec.build()?;
    let text = match args.format {
        Format::Edgelist => write_edge_list(&g),
        Format::Dot => write_dot(&g),
        Format::Json => write_json(&g, Some(&spec))?,
    };
    emit(&args.out, &text)
}

pub fn cmd_eig(args: &EigArgs) -> Result<()> {
    let g = match &args.input {
        Some(path) => parse_edge_list(&std::fs::read_to_string(path)?),
        None => args.family.to_spec()?.build(),
    }?;
    let tol = effective_tol(args.tol);
    let spectrum = eig_symmetric(build_laplacian(&g).matrix(), tol)?;
    if args.lambda2 {
        println!("{}", fmt_sig(spectrum.eigenvalues()[1]));
    } else {
        for ev in spectrum.eigenvalues() {
            println!("{}", fmt_sig(*ev));
        }
    }
    Ok(())
}

fn bound_grid(args: &BoundArgs) -> Result<Vec<GridInstance>> {
    if let Some(count) = args.base_random {
        let family = args.family.family.as_deref().unwrap_or("bridge-chain");
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let mut grid = Vec::with_capacity(count);
        for i in 0..count {
            let n = args.family.n.unwrap_or(2 + (i % 9));
            let base = random_connected_graph(&mut rng, n)?;
            let spec = match family {
                "bridge-chain" => {
                    let l = args.family.l.unwrap_or(2 + (i % 4));
                    FamilySpec::BridgeChain {
                        base,
                        l,
                        out_v: 1,
                        in_v: 1,
                    }
                }
                "general-bridge2k" => {
                    let k = args.family.k.unwrap_or(1 + (i % n.min(3)));
                    FamilySpec::GeneralBridge2k {
                        base,
                        k,
                        pairing: None,
                    }
                }
                other => {
                    return Err(Error::InvalidParameter(format!(
                        "--base-random applies to bridge-chain or general-bridge2k, not {other}"
                    )))
                }
            };
            let params = match &spec {
                FamilySpec::BridgeChain { l, .. } => InstanceParams {
                    n: Some(n),
                    l: Some(*l),
                    ..Default::default()
                },
                FamilySpec::GeneralBridge2k { k, .. } => InstanceParams {
                    n: Some(n),
                    k: Some(*k),
                    ..Default::default()
                },
                _ => unreachable!(),
            };
            grid.push(GridInstance { spec, params });
        }
        return Ok(grid);
    }
    let spec = args.family.to_spec()?;
    let mut params = args.family.params();
    if let FamilySpec::BridgeChain { base, .. } | FamilySpec::GeneralBridge2k { base, .. } = &spec {
        params.n = Some(base.num_vertices());
    }
    Ok(vec![GridInstance { spec, params }])
}

pub fn cmd_bound(args: &BoundArgs) -> Result<i32> {
    let grid = bound_grid(args)?;
    if args.show_vector {
        for inst in &grid {
            let vector = crate::bounds::family_test_vector(&inst.spec)?;
            let pairs: Vec<String> = vector
                .values()
                .iter()
                .enumerate()
                .map(|(i, v)| format!("{}:{}", i + 1, fmt_sig(*v)))
                .collect();
            println!("# {}", vector.label());
            println!("{}", pairs.join(" "));
        }
    }
    let reports = verify(&grid);
    emit(&args.out, &to_csv(&reports))?;
    let failures = hard_assertion_failures(&reports);
    for f in &failures {
        eprintln!("hard assertion failed: {f}");
    }
    Ok(if failures.is_empty() {
        0
    } else {
        EXIT_HARD_ASSERTION
    })
}

pub fn cmd_loewner(args: &LoewnerArgs) -> Result<()> {
    match args.check.as_str() {
        "path" => {
            let len = args
                .len
                .ok_or_else(|| Error::InvalidParameter("--check path needs --len".into()))?;
            let cert = path_inequality_check(len)?;
            println!(
                "{} c={} min_eig={}",
                if cert.holds { "holds" } else { "fails" },
                fmt_sig(cert.scale_c),
                fmt_sig(cert.min_eig_of_difference),
            );
        }
        "pair" => {
            let read = |p: &Option<PathBuf>, name: &str| -> Result<Graph> {
                let p = p.as_ref().ok_or_else(|| {
                    Error::InvalidParameter(format!("--check pair needs --{name} FILE"))
                })?;
                parse_edge_list(&std::fs::read_to_string(p)?)
            };
            let g1 = read(&args.g1, "g1")?;
            let g2 = read(&args.g2, "g2")?;
            let cert = loewner_geq(&g1, &g2, args.c.unwrap_or(1.0))?;
            println!(
                "{} c={} min_eig={}",
                if cert.holds { "holds" } else { "fails" },
                fmt_sig(cert.scale_c),
                fmt_sig(cert.min_eig_of_difference),
            );
        }
        "domination" => {
            let spec = args.family.to_spec()?;
            let g = spec.build()?;
            let c = match args.c {
                Some(c) => c,
                None => crate::bounds::proof_domination_scale(&spec, g.num_vertices()).ok_or_else(
                    || {
                        Error::InvalidParameter(
                            "no proof-chain constant for this family; pass --c".into(),
                        )
                    },
                )?,
            };
            let bound = domination_lower_bound(&g, c)?;
            println!("certified c={} lower_bound={}", fmt_sig(c), fmt_sig(bound));
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown check {other:?}; expected pair, path, or domination"
            )))
        }
    }
    Ok(())
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<i32> {
    let grid = default_grid(args.seed);
    let reports = if args.jobs <= 1 {
        verify(&grid)
    } else {
        // chunked workers; output order preserved
        let chunk = grid.len().div_ceil(args.jobs);
        let mut out = Vec::with_capacity(grid.len());
        std::thread::scope(|scope| {
            let handles: Vec<_> = grid
                .chunks(chunk)
                .map(|part| scope.spawn(move || verify(part)))
                .collect();
            for h in handles {
                out.extend(h.join().expect("worker panicked"));
            }
        });
        out
    };
    std::fs::write(&args.out, to_csv(&reports))?;
    let table = errata_table(&errata_report(&reports));
    print!("{table}");
    if let Some(path) = &args.errata_out {
        std::fs::write(path, &table)?;
    }
    let failures = hard_assertion_failures(&reports);
    for f in &failures {
        eprintln!("hard assertion failed: {f}");
    }
    eprintln!(
        "sweep: {} instances, {} claim rows, {} hard failures",
        grid.len(),
        reports.iter().map(|r| r.verdicts.len()).sum::<usize>(),
        failures.len(),
    );
    Ok(if failures.is_empty() {
        0
    } else {
        EXIT_HARD_ASSERTION
    })
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::NoConvergence { .. } | Error::Asymmetric { .. } => EXIT_SOLVER_FAILURE,
        Error::CertificationFailed { .. } => 1,
        _ => EXIT_INVALID_INPUT,
    }
}

/// Dispatches a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match &cli.command {
        Command::Gen(args) => cmd_gen(args).map(|()| 0),
        Command::Eig(args) => cmd_eig(args).map(|()| 0),
        Command::Bound(args) => cmd_bound(args),
        Command::Loewner(args) => cmd_loewner(args).map(|()| 0),
        Command::Sweep(args) => cmd_sweep(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}
