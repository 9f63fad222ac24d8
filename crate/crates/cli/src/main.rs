//! `fabal`: inspect, count, enumerate, map and order the faithfully
//! balanced modules of linear Nakayama algebras from the command line.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fabal_core::{
    accept, approx, biject, count, fbcheck, fixtures, grid, oracle, poset, BasicModule,
    FabalError, NakayamaPresentation,
};

#[derive(Parser)]
#[command(name = "fabal", version, about = "Faithfully balanced modules over linear Nakayama algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Grid,
    Json,
}

/// How a module arrives on the command line: inline text, a file path, or
/// standard input.
#[derive(Args, Clone)]
struct ModuleInput {
    /// Module as a text grid (rows separated by newlines, `/` or `\n`)
    #[arg(long)]
    grid: Option<String>,

    /// Module as JSON `{"n": 3, "summands": [[1,3],...]}`
    #[arg(long)]
    json: Option<String>,
}

impl ModuleInput {
    fn read(&self) -> Result<BasicModule, FabalError> {
        match (&self.grid, &self.json) {
            (Some(g), None) => grid::parse_grid(g),
            (None, Some(j)) => {
                serde_json::from_str(j).map_err(|e| FabalError::Parse(e.to_string()))
            }
            (None, None) => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| FabalError::Parse(e.to_string()))?;
                let trimmed = buf.trim();
                if trimmed.starts_with('{') {
                    serde_json::from_str(trimmed).map_err(|e| FabalError::Parse(e.to_string()))
                } else {
                    grid::parse_grid(trimmed)
                }
            }
            _ => Err(FabalError::Parse("give at most one of --grid and --json".into())),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classification verdict for one module
    Check {
        #[command(flatten)]
        module: ModuleInput,
        /// Valleys of the presentation, e.g. `3,4` (default: none)
        #[arg(long, value_delimiter = ',')]
        valleys: Vec<usize>,
        /// Also run the exact linear-algebra verification and print it
        #[arg(long)]
        oracle: bool,
    },
    /// Count faithfully balanced modules
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        valleys: Vec<usize>,
        /// Print the histogram by summand count instead of the total
        #[arg(long)]
        by_size: bool,
        /// Print the histogram by row-count vector instead of the total
        #[arg(long)]
        multi: bool,
        /// Count with summand multiplicities up to this bound
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, value_enum, default_value = "grid")]
        format: Format,
    },
    /// Stream every faithfully balanced module
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        valleys: Vec<usize>,
        /// Keep only the modules with exactly n summands
        #[arg(long)]
        minimal_size: bool,
        #[arg(long, value_enum, default_value = "grid")]
        format: Format,
    },
    /// Map an n-summand module through the bijections
    Map {
        #[command(flatten)]
        module: ModuleInput,
        /// Input format of the module (auto-detected when omitted)
        #[arg(long)]
        from: Option<String>,
        /// Target encoding
        #[arg(long, default_value = "sbf")]
        to: String,
        /// Replay a bundled worked example (`fig5`)
        #[arg(long)]
        fixtures: Option<String>,
    },
    /// Order structure: Hasse diagram, meets and joins
    Poset {
        #[arg(long)]
        n: Option<usize>,
        /// Write the cover digraph to this DOT file
        #[arg(long)]
        dot: Option<std::path::PathBuf>,
        /// Meet of two modules given as JSON files
        #[arg(long, num_args = 2)]
        meet: Option<Vec<std::path::PathBuf>>,
        /// Join of two modules given as JSON files
        #[arg(long, num_args = 2)]
        join: Option<Vec<std::path::PathBuf>>,
    },
    /// The smallest module presenting the same category
    Critical {
        #[command(flatten)]
        module: ModuleInput,
        #[arg(long, value_enum, default_value = "grid")]
        format: Format,
    },
    /// Exact double-centralizer verification report
    Oracle {
        #[command(flatten)]
        module: ModuleInput,
        #[arg(long, value_delimiter = ',')]
        valleys: Vec<usize>,
    },
    /// Run the acceptance suite and print a pass/fail table
    Repro {
        /// Cap the rank of the expensive sweeps (full suite: 6)
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

fn max_subsets_from_env() -> u64 {
    std::env::var("FABAL_MAX_SUBSETS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1 << 28)
}

fn presentation(n: usize, valleys: &[usize]) -> Result<NakayamaPresentation, FabalError> {
    if valleys.is_empty() {
        Ok(NakayamaPresentation::linear(n))
    } else {
        NakayamaPresentation::new(n, valleys)
    }
}

fn print_module(m: &BasicModule, format: Format) {
    match format {
        Format::Grid => println!("{}", grid::grid_string(m, false)),
        Format::Json => println!("{}", serde_json::to_string(m).unwrap()),
    }
}

fn run() -> Result<(), FabalError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Check { module, valleys, oracle: with_oracle } => {
            let m = module.read()?;
            let pres = presentation(m.n(), &valleys)?;
            m.validate_for(&pres)?;
            let mut verdict = Vec::new();
            if fbcheck::is_fb(&pres, &m) {
                verdict.push("fb".to_string());
                if fbcheck::is_minimal_fb(&pres, &m)? {
                    verdict.push("minimal".into());
                }
                if pres.is_linear() && count::is_tilting(&m) {
                    verdict.push("tilting".into());
                }
            } else {
                verdict.push("not-fb".into());
                verdict.push(
                    if fbcheck::is_balanced(&pres, &m) { "balanced" } else { "not-balanced" }
                        .into(),
                );
                verdict.push(
                    if fbcheck::is_faithful(&pres, &m) { "faithful" } else { "not-faithful" }
                        .into(),
                );
            }
            println!("{}", verdict.join(" "));
            if with_oracle {
                let report = oracle::oracle(&pres, &m)?;
                println!("{}", serde_json::to_string(&report).unwrap());
            }
        }
        Command::Count { n, valleys, by_size, multi, q, format } => {
            let pres = presentation(n, &valleys)?;
            if by_size {
                let hist = if pres.is_linear() {
                    count::size_polynomial(n).coeffs
                } else {
                    count::size_histogram(&pres)?
                };
                match format {
                    Format::Json => {
                        let obj: serde_json::Map<String, serde_json::Value> = hist
                            .iter()
                            .map(|(s, c)| (s.to_string(), serde_json::Value::String(c.to_string())))
                            .collect();
                        println!("{}", serde_json::Value::Object(obj));
                    }
                    Format::Grid => {
                        for (s, c) in &hist {
                            println!("{s:>3}  {c}");
                        }
                    }
                }
            } else if multi {
                let mc = if pres.is_linear() {
                    count::multi_count(n)?.coeffs
                } else {
                    count::row_histogram(&pres)?
                };
                for (expo, c) in &mc {
                    let key: Vec<String> = expo.iter().map(usize::to_string).collect();
                    println!("({})  {c}", key.join(","));
                }
            } else if let Some(q) = q {
                if !pres.is_linear() {
                    return Err(FabalError::InvalidPresentation(
                        "multiplicity counts are only available without valleys".into(),
                    ));
                }
                println!("{}", count::q_count(n, q));
            } else if pres.is_linear() {
                println!("{}", count::two_factorial(n));
            } else {
                println!("{}", count::nakayama_count(&pres));
            }
        }
        Command::Enumerate { n, valleys, minimal_size, format } => {
            let pres = presentation(n, &valleys)?;
            let stream = count::fb_enumerate_capped(&pres, max_subsets_from_env())?;
            let mut first = true;
            for m in stream {
                if minimal_size && m.summand_count() != n {
                    continue;
                }
                if format == Format::Grid {
                    if !first {
                        println!();
                    }
                    first = false;
                }
                print_module(&m, format);
            }
        }
        Command::Map { module, from, to, fixtures: fixture } => {
            if let Some(name) = fixture {
                return replay_fixture(&name);
            }
            let m = match from.as_deref() {
                None | Some("grid") | Some("json") => module.read()?,
                Some("sbf") => {
                    let raw = module
                        .json
                        .clone()
                        .ok_or_else(|| FabalError::Parse("--from sbf needs --json".into()))?;
                    let values: Vec<usize> = serde_json::from_str(&raw)
                        .map_err(|e| FabalError::Parse(e.to_string()))?;
                    biject::from_self_bounded(&biject::SelfBounded::new(values)?)?
                }
                Some(other) => {
                    return Err(FabalError::Parse(format!("unknown input format {other}")))
                }
            };
            match to.as_str() {
                "sbf" => println!(
                    "{}",
                    serde_json::to_string(&biject::to_self_bounded(&m)?).unwrap()
                ),
                "perm" => {
                    println!("{}", serde_json::to_string(&biject::to_permutation(&m)?).unwrap())
                }
                "tree" => {
                    println!("{}", serde_json::to_string(&biject::to_tree(&m)?).unwrap())
                }
                "increasing" => {
                    let it = biject::untangle(&biject::to_tree(&m)?)?;
                    println!("{}", serde_json::to_string(&it).unwrap());
                }
                "tableau" => {
                    println!("{}", serde_json::to_string(&biject::shrink(&m)?).unwrap())
                }
                "grid" => print_module(&m, Format::Grid),
                "json" => print_module(&m, Format::Json),
                other => return Err(FabalError::Parse(format!("unknown target {other}"))),
            }
        }
        Command::Poset { n, dot, meet, join } => {
            if let Some(paths) = meet {
                let (a, b) = read_pair(&paths)?;
                print_module(&poset::meet(&a, &b)?, Format::Json);
            } else if let Some(paths) = join {
                let (a, b) = read_pair(&paths)?;
                print_module(&poset::join(&a, &b)?, Format::Json);
            } else if let Some(n) = n {
                let p = poset::hasse(n)?;
                let rendered = p.to_dot();
                match dot {
                    Some(path) => std::fs::write(&path, rendered)
                        .map_err(|e| FabalError::Parse(e.to_string()))?,
                    None => print!("{rendered}"),
                }
                eprintln!("{} elements, {} cover edges", p.elements.len(), p.covers.len());
            } else {
                return Err(FabalError::Parse("poset needs --n, --meet or --join".into()));
            }
        }
        Command::Critical { module, format } => {
            let m = module.read()?;
            let pres = NakayamaPresentation::linear(m.n());
            m.validate_for(&pres)?;
            print_module(&approx::gen1_critical(&pres, &m), format);
        }
        Command::Oracle { module, valleys } => {
            let m = module.read()?;
            let pres = presentation(m.n(), &valleys)?;
            let report = oracle::oracle(&pres, &m)?;
            println!("{}", serde_json::to_string_pretty(&report).unwrap());
        }
        Command::Repro { n_max } => {
            let outcomes = accept::run_all(n_max);
            let mut failed = 0usize;
            for o in &outcomes {
                let status = if o.passed { "PASS" } else { "FAIL" };
                println!("{status} {:<28} [{:>6} ms] {}", o.name, o.millis, o.detail);
                if !o.passed {
                    failed += 1;
                }
            }
            println!(
                "{} criteria, {} passed, {} failed",
                outcomes.len(),
                outcomes.len() - failed,
                failed
            );
            if failed > 0 {
                std::process::exit(1);
            }
        }
    }
    Ok(())
}

fn read_pair(paths: &[std::path::PathBuf]) -> Result<(BasicModule, BasicModule), FabalError> {
    let read_one = |p: &std::path::PathBuf| -> Result<BasicModule, FabalError> {
        let text = std::fs::read_to_string(p).map_err(|e| FabalError::Parse(e.to_string()))?;
        let trimmed = text.trim();
        if trimmed.starts_with('{') {
            serde_json::from_str(trimmed).map_err(|e| FabalError::Parse(e.to_string()))
        } else {
            grid::parse_grid(trimmed)
        }
    };
    Ok((read_one(&paths[0])?, read_one(&paths[1])?))
}

/// Replays the bundled ten-vertex worked example.
fn replay_fixture(name: &str) -> Result<(), FabalError> {
    if name != "fig5" {
        return Err(FabalError::Parse(format!("unknown fixture {name}")));
    }
    let wt = fixtures::worked_tree();
    let wf = fixtures::worked_function();
    println!("module:");
    println!("{}", grid::grid_string(&wt.module, false));
    let tree = biject::to_tree(&wt.module)?;
    assert_eq!(tree, wt.tree, "bundled tree matches the module");
    let (stepped, labels) = biject::untangle_step(&tree, &(1..=wt.n).collect::<Vec<_>>())?;
    println!("first untangling step relabels to: {labels:?}");
    assert_eq!(labels, wt.step_labels);
    assert!(matches!(stepped, biject::InterleavedTree::Node { .. }));
    let it = biject::untangle(&tree)?;
    assert_eq!(it, wt.final_tree, "bundled increasing tree matches");
    println!("untangled tree: {}", serde_json::to_string(&it).unwrap());
    let f = biject::to_self_bounded(&wt.module)?;
    println!("f   = {f}");
    let split = biject::sub_functions(&f);
    println!("F_R = {:?}", split.positions_r);
    println!("F_L = {:?}", split.positions_l);
    println!("f_R = {}", split.f_r);
    println!("f_L = {}", split.f_l);
    assert_eq!(f, wf.f);
    assert_eq!(split.positions_r, wf.positions_r);
    assert_eq!(split.positions_l, wf.positions_l);
    assert_eq!(split.f_r, wf.f_r);
    assert_eq!(split.f_l, wf.f_l);
    println!("permutation: {:?}", biject::to_permutation(&wt.module)?);
    Ok(())
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
