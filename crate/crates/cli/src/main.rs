use std::fmt::Write as _;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lcorbit::bench::{self, Family};
use lcorbit::formats::{from_edge_list, from_graph6, to_graph6};
use lcorbit::isotropic::DEFAULT_EULERIAN_CAP;
use lcorbit::mu::k_index_report;
use lcorbit::orbit::{enumerate_orbit, DEFAULT_ORBIT_CAP};
use lcorbit::reduction::{count_tours, Caps, Method, SCHEMA_VERSION};
use lcorbit::verify::{self, Suite, VerifyOptions};
use lcorbit::{e_of_graph, Error, LabelledGraph, MultiGraph4};

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "lcorbit",
    version,
    about = "Local-complementation orbits, isotropic systems and Eulerian tours"
)]
struct Cli {
    /// Graph input format (multigraph commands always read the `k m` text format).
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Write the structured key/value report here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Maximum number of orbit members to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_CAP)]
    cap: u64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include per-stage timings in the structured report.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Reduction,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Quantum,
    Oracles,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    RandomGraph,
    #[value(name = "random-4regular")]
    Random4regular,
}

#[derive(Subcommand)]
enum Command {
    /// Size of the local-complementation orbit of a graph.
    Orbit {
        /// Input file; standard input when omitted or `-`.
        input: Option<PathBuf>,
        /// Print every member as graph6.
        #[arg(long)]
        list: bool,
    },
    /// The index k(G) with a class-μ witness.
    KIndex { input: Option<PathBuf> },
    /// Number of Eulerian tours of a connected 4-regular multigraph.
    CountTours {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Reduction)]
        method: MethodArg,
    },
    /// Number of Eulerian vectors of the canonical isotropic system of a graph.
    EulerianVectors { input: Option<PathBuf> },
    /// Run the built-in cross-check suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Time k(G) or the full reduction on seeded random instances.
    Bench {
        #[arg(long, value_enum, default_value_t = FamilyArg::RandomGraph)]
        family: FamilyArg,
        /// Comma-separated instance sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

struct Outcome {
    summary: String,
    report: String,
    ok: bool,
}

fn read_input(path: &Option<PathBuf>) -> Result<(String, String), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map(|s| (s, p.display().to_string()))
            .map_err(|e| Failure::Io(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            Ok((s, "stdin".into()))
        }
    }
}

fn read_graph(cli: &Cli, path: &Option<PathBuf>) -> Result<(LabelledGraph, String), Failure> {
    let (text, name) = read_input(path)?;
    let g = match cli.format {
        Format::Graph6 => {
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .unwrap_or("");
            from_graph6(line)?
        }
        Format::Edgelist => from_edge_list(&text)?,
    };
    Ok((g, name))
}

fn header(command: &str, input: &str) -> String {
    format!("schema: {SCHEMA_VERSION}\ncommand: {command}\ninput: {input}\n")
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Orbit { input, list } => {
            let (g, name) = read_graph(cli, input)?;
            let orbit = enumerate_orbit(&g, *list, cli.cap)?;
            let mut summary = format!(
                "orbit size: {}\nrepresentative: {}\n",
                orbit.size,
                to_graph6(&orbit.representative)
            );
            let mut report = header("orbit", &name);
            let _ = writeln!(report, "graph6: {}", to_graph6(&g));
            let _ = writeln!(report, "vertices: {}", g.n());
            let _ = writeln!(report, "size: {}", orbit.size);
            let _ = writeln!(
                report,
                "representative: {}",
                to_graph6(&orbit.representative)
            );
            if let Some(members) = &orbit.members {
                for m in members {
                    let _ = writeln!(summary, "{}", to_graph6(m));
                    let _ = writeln!(report, "member: {}", to_graph6(m));
                }
            }
            Ok(Outcome {
                summary,
                report,
                ok: true,
            })
        }
        Command::KIndex { input } => {
            let (g, name) = read_graph(cli, input)?;
            let idx = k_index_report(&g);
            let mu = if idx.whole_graph_in_mu() { "yes" } else { "no" };
            let mut summary = format!("k: {}\nmu: {mu}\n", idx.k);
            let mut report = header("k-index", &name);
            let _ = writeln!(report, "graph6: {}", to_graph6(&g));
            let _ = writeln!(report, "k: {}", idx.k);
            let _ = writeln!(report, "mu: {mu}");
            let _ = writeln!(report, "components: {}", idx.components.len());
            for (i, c) in idx.components.iter().enumerate() {
                let verts: Vec<String> = c.vertices.iter().map(usize::to_string).collect();
                let witness = match &c.mu {
                    Ok(()) => "in class mu".to_string(),
                    Err(v) => v.to_string(),
                };
                if idx.components.len() > 1 {
                    let _ = writeln!(
                        summary,
                        "component {{{}}}: k = {}, {witness}",
                        verts.join(","),
                        c.k
                    );
                } else if let Err(v) = &c.mu {
                    let _ = writeln!(summary, "witness: {v}");
                }
                let _ = writeln!(report, "component_{i}_vertices: {}", verts.join(" "));
                let _ = writeln!(report, "component_{i}_nu_dim: {}", c.nu_dim);
                let _ = writeln!(report, "component_{i}_k: {}", c.k);
                let _ = writeln!(report, "component_{i}_mu: {witness}");
            }
            Ok(Outcome {
                summary,
                report,
                ok: true,
            })
        }
        Command::CountTours { input, method } => {
            let (text, name) = read_input(input)?;
            let f = MultiGraph4::parse(&text)?;
            let method = match method {
                MethodArg::Reduction => Method::Reduction,
                MethodArg::Brute => Method::Brute,
                MethodArg::Both => Method::Both,
            };
            let caps = Caps {
                orbit: cli.cap,
                ..Caps::default()
            };
            let rep = count_tours(&f, &name, method, caps)?;
            let mut summary = String::new();
            let _ = writeln!(summary, "tour: {}", rep.tour);
            let _ = writeln!(summary, "alternance graph: {}", to_graph6(&rep.alternance));
            if let (Some(l), Some(k)) = (rep.orbit_size, &rep.k) {
                let _ = writeln!(summary, "l: {l}\nk: {k}");
            }
            for (what, n) in rep.counts() {
                let _ = writeln!(summary, "{what}: {n}");
            }
            let ok = rep.consistent();
            let _ = writeln!(summary, "status: {}", if ok { "OK" } else { "FAILED" });
            Ok(Outcome {
                summary,
                report: rep.to_kv(cli.timings),
                ok,
            })
        }
        Command::EulerianVectors { input } => {
            let (g, name) = read_graph(cli, input)?;
            let e = e_of_graph(&g, DEFAULT_EULERIAN_CAP)?;
            let mut report = header("eulerian-vectors", &name);
            let _ = writeln!(report, "graph6: {}", to_graph6(&g));
            let _ = writeln!(report, "e: {e}");
            Ok(Outcome {
                summary: format!("eulerian vectors: {e}\n"),
                report,
                ok: true,
            })
        }
        Command::Verify {
            suite,
            max_n,
            inject_fault,
        } => {
            let suite = match suite {
                SuiteArg::Quantum => Suite::Quantum,
                SuiteArg::Oracles => Suite::Oracles,
                SuiteArg::All => Suite::All,
            };
            let opts = VerifyOptions {
                suite,
                max_n: *max_n,
                seed: cli.seed,
                inject_fault: *inject_fault,
            };
            let rep = verify::run(&opts)?;
            let mut summary = String::new();
            let mut report = header("verify", "-");
            let _ = writeln!(report, "max_n: {max_n}");
            let _ = writeln!(report, "seed: {}", cli.seed);
            for c in &rep.checks {
                let _ = writeln!(summary, "{c}");
                let _ = writeln!(report, "check: {c}");
            }
            let ok = rep.passed();
            let status = if ok { "OK" } else { "FAILED" };
            let _ = writeln!(summary, "status: {status}");
            let _ = writeln!(report, "status: {status}");
            Ok(Outcome {
                summary,
                report,
                ok,
            })
        }
        Command::Bench {
            family,
            sizes,
            reps,
        } => {
            if sizes.is_empty() {
                return Err(Failure::Usage("--sizes needs at least one size".into()));
            }
            let (family, label) = match family {
                FamilyArg::RandomGraph => (Family::RandomGraph, "random-graph"),
                FamilyArg::Random4regular => (Family::Random4Regular, "random-4regular"),
            };
            let samples = bench::run(family, sizes, cli.seed, *reps)?;
            let mut summary = format!("{:>8}  {:>14}  value\n", "size", "median");
            let mut report = header("bench", label);
            let _ = writeln!(report, "seed: {}", cli.seed);
            for s in &samples {
                let _ = writeln!(summary, "{:>8}  {:>14.3?}  {}", s.size, s.elapsed, s.value);
                let _ = writeln!(
                    report,
                    "sample: {} {} {}",
                    s.size,
                    s.elapsed.as_micros(),
                    s.value
                );
            }
            if let Some(slope) = bench::loglog_slope(&samples) {
                let _ = writeln!(summary, "log-log slope: {slope:.2}");
                let _ = writeln!(report, "loglog_slope: {slope:.4}");
            }
            Ok(Outcome {
                summary,
                report,
                ok: true,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT);
        }
    }
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.summary);
            if let Some(path) = &cli.out {
                if let Err(e) = std::fs::write(path, &outcome.report) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(EXIT_INPUT);
                }
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_CAP
            })
        }
        Err(Failure::Usage(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
