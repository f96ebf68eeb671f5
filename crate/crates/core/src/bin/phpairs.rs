use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use phpairs::corpus::{planted_ph_graph, random_graph, random_weights, rng};
use phpairs::oracles::Oracle;
use phpairs::reduce::{color_count, is_proper_coloring, is_stable_set};
use phpairs::solution::{expand_coloring, parse_coloring, parse_stable_set, write_coloring, write_stable_set};
use phpairs::{
    eliminate_all, find_any_ph_pair, find_ph_embedding, lift_coloring, lift_stable_set, read_dimacs_file, write_dimacs,
    CliquePair, Error, Graph, ReductionTrace, StrategyKind, VertexPair,
};

#[derive(Parser)]
#[command(
    name = "phpairs",
    version,
    about = "Find and eliminate proper homogeneous pairs of cliques"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a PH pair of the graph, or one containing a given seed edge.
    Detect {
        input: PathBuf,
        /// Seed edge, 1-indexed.
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        seed_pair: Option<Vec<usize>>,
    },
    /// Eliminate every PH pair and write the reduced graph and its trace.
    Reduce {
        input: PathBuf,
        #[arg(long, default_value = "max-clique")]
        strategy: StrategyKind,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Map a solution of the reduced graph back to the input graph.
    Lift {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        solution: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Defaults to standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check that a graph is PH-free; with --deep, cross-check against brute force.
    Verify {
        input: PathBuf,
        #[arg(long)]
        deep: bool,
        /// Largest graph the brute-force checks accept.
        #[arg(long, default_value_t = 12)]
        cap: usize,
        /// Trace whose reduced graph is `input`; enables invariant checks.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Write a random graph.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Plant a PH pair.
        #[arg(long)]
        planted: bool,
        /// Attach weights drawn from 1..=W.
        #[arg(long, value_name = "W")]
        max_weight: Option<i64>,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Coloring,
    StableSet,
}

enum Failure {
    Verify(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSolution(_) | Error::Internal(_) => Failure::Verify(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    read_dimacs_file(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn show_pair(p: &CliquePair) -> String {
    let side = |s: Vec<usize>| s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",");
    format!("({{{}}},{{{}}})", side(p.k1().to_vec()), side(p.k2().to_vec()))
}

fn detect(input: &Path, seed: Option<Vec<usize>>) -> Outcome {
    let g = load_graph(input)?;
    match seed {
        Some(s) => {
            let (u, v) = (s[0], s[1]);
            if u == 0 || v == 0 || u > g.order() || v > g.order() {
                return Err(Failure::Usage(format!("seed vertices must lie in 1..={}", g.order())));
            }
            match find_ph_embedding(&g, u - 1, v - 1)? {
                Some(e) => println!("{}", show_pair(&e.pair)),
                None => println!("none"),
            }
        }
        None => match find_any_ph_pair(&g)? {
            Some(e) => println!("{}", show_pair(&e.pair)),
            None => println!("PH-free"),
        },
    }
    Ok(())
}

fn reduce(input: &Path, strategy: StrategyKind, trace_path: Option<&Path>, output: Option<&Path>) -> Outcome {
    let g = load_graph(input)?;
    let (reduced, trace) = eliminate_all(&g, &strategy)?;
    println!("strategy {strategy}");
    println!("q {}", trace.len());
    println!("before |V| {} |E| {}", g.order(), g.edge_count());
    println!("after |V| {} |E| {}", reduced.order(), reduced.edge_count());
    if let Some(p) = output {
        write(Some(p), &write_dimacs(&reduced))?;
    }
    if let Some(p) = trace_path {
        write(Some(p), &trace.to_json())?;
    }
    Ok(())
}

fn lift(trace_path: &Path, solution: &Path, kind: Kind, output: Option<&Path>) -> Outcome {
    let trace = ReductionTrace::from_json(&read(trace_path)?)?;
    let text = read(solution)?;
    let ids = trace.final_graph().live().to_vec();
    let g0 = trace.original();
    let out = match kind {
        Kind::Coloring => {
            let compact = parse_coloring(&text, ids.len())?;
            let coloring = expand_coloring(&compact, &ids, trace.final_graph().capacity());
            let lifted = lift_coloring(&trace, &coloring)?;
            if !is_proper_coloring(g0, &lifted) {
                return Err(Failure::Verify("lifted colouring is not proper".into()));
            }
            eprintln!("lifted colouring uses {} colours", color_count(g0, &lifted));
            write_coloring(&lifted)
        }
        Kind::StableSet => {
            let set: Vec<usize> = parse_stable_set(&text, ids.len())?
                .into_iter()
                .map(|i| ids[i])
                .collect();
            let lifted = lift_stable_set(&trace, &set)?;
            if !is_stable_set(g0, &lifted) {
                return Err(Failure::Verify("lifted set is not stable".into()));
            }
            eprintln!("lifted stable set has weight {}", g0.weight_of(&lifted));
            write_stable_set(&lifted)
        }
    };
    write(output, &out)
}

struct Report {
    failed: bool,
}

impl Report {
    fn check(&mut self, name: &str, ok: bool, detail: String) {
        let status = if ok { "pass" } else { "FAIL" };
        if detail.is_empty() {
            println!("{status}  {name}");
        } else {
            println!("{status}  {name} ({detail})");
        }
        self.failed |= !ok;
    }
}

fn verify(input: &Path, deep: bool, cap: usize, trace_path: Option<&Path>) -> Outcome {
    let g = load_graph(input)?;
    let trace = match trace_path {
        Some(p) => Some(ReductionTrace::from_json(&read(p)?)?),
        None => None,
    };
    let oracle = Oracle::with_cap(cap);
    if deep && g.order() > cap {
        return Err(Error::OracleCap { n: g.order(), cap }.into());
    }
    let mut report = Report { failed: false };

    let found = find_any_ph_pair(&g)?;
    let shown = found.as_ref().map(|e| show_pair(&e.pair)).unwrap_or_default();
    report.check("no PH-embedding found", found.is_none(), shown);

    if deep {
        let pairs = oracle.ph_pairs(&g)?;
        let shown = pairs.first().map(show_pair).unwrap_or_default();
        report.check("brute force finds no PH pair", pairs.is_empty(), shown);

        let expected = oracle.ph_seed_pairs(&g)?;
        let mut searched = std::collections::BTreeSet::new();
        for (u, v) in g.edges() {
            if find_ph_embedding(&g, u, v)?.is_some() {
                searched.insert(VertexPair::new(u, v));
            }
        }
        report.check(
            "search agrees with brute force on every edge",
            searched == expected,
            String::new(),
        );
    }

    if let Some(trace) = &trace {
        let (reduced, _) = trace.final_graph().compact();
        report.check(
            "input equals the trace's reduced graph",
            write_dimacs(&reduced) == write_dimacs(&g),
            String::new(),
        );
        if deep {
            let g0 = trace.original();
            if g0.order() > cap {
                return Err(Error::OracleCap { n: g0.order(), cap }.into());
            }
            match trace.strategy() {
                "max-clique" => {
                    let (a, b) = (oracle.chromatic(g0)?, oracle.chromatic(&g)?);
                    report.check("chromatic number preserved", a == b, format!("{a} vs {b}"));
                    let (a, b) = (oracle.clique(g0)?, oracle.clique(&g)?);
                    report.check("clique number preserved", a == b, format!("{a} vs {b}"));
                }
                "stable-set" => {
                    let (a, b) = (oracle.mwss(g0)?.1, oracle.mwss(&g)?.1);
                    report.check("maximum stable set weight preserved", a == b, format!("{a} vs {b}"));
                }
                _ => {}
            }
        }
    }

    if found.is_none() {
        println!("PH-free confirmed");
    }
    if report.failed {
        Err(Failure::Verify("verification failed".into()))
    } else {
        Ok(())
    }
}

fn generate(
    n: usize,
    density: f64,
    seed: u64,
    planted: bool,
    max_weight: Option<i64>,
    output: Option<&Path>,
) -> Outcome {
    if !(0.0..=1.0).contains(&density) {
        return Err(Failure::Usage("density must lie in [0, 1]".into()));
    }
    if planted && n < 4 {
        return Err(Failure::Usage("--planted needs n >= 4".into()));
    }
    let mut r = rng(seed);
    let mut g = if planted {
        planted_ph_graph(n, density, &mut r)
    } else {
        random_graph(n, density, &mut r)
    };
    if let Some(w) = max_weight {
        if w < 1 {
            return Err(Failure::Usage("--max-weight must be at least 1".into()));
        }
        let weights = random_weights(&g, 1, w, &mut r);
        g.set_weights(Some(weights));
    }
    write(output, &write_dimacs(&g))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Detect { input, seed_pair } => detect(&input, seed_pair),
        Command::Reduce {
            input,
            strategy,
            trace,
            output,
        } => reduce(&input, strategy, trace.as_deref(), output.as_deref()),
        Command::Lift {
            trace,
            solution,
            kind,
            output,
        } => lift(&trace, &solution, kind, output.as_deref()),
        Command::Verify {
            input,
            deep,
            cap,
            trace,
        } => verify(&input, deep, cap, trace.as_deref()),
        Command::Generate {
            n,
            density,
            seed,
            planted,
            max_weight,
            output,
        } => generate(n, density, seed, planted, max_weight, output.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
