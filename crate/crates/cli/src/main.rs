use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bipwqo::families::{by_key, universal_grid};
use bipwqo::graph::{find_bipartition, parse_graph, serialize_graph, Bipartition, Graph};
use bipwqo::harness::{antichain_check, run_suite, Family, Status, SuiteConfig, SuiteReport, Verdict};
use bipwqo::matcher::{find_induced_embedding_with, has_path_subgraph, is_free_with, Freeness, SearchOptions, SearchOutcome};
use bipwqo::perm::{
    compose, find_pattern, inverse, is_convex, mu_star, permutation_graph, rho_star, star_perm_s, star_perm_t,
    Permutation,
};
use bipwqo::structure::{decode_letter, decompose, find_biconvex_order, letter_representation_grid, verify_letter};
use clap::{Args, Parser, Subcommand};

/// Bipartite graph families, induced-subgraph search and verification
/// suites. Graph arguments are files in the `p`/`b`/`e` text format; `-`
/// reads standard input.
#[derive(Parser)]
#[command(name = "bipwqo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named graph family member.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Permutation utilities.
    #[command(subcommand)]
    Perm(PermCommand),
    /// Freeness checks.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Find an induced embedding of PATTERN into HOST.
    Embed {
        pattern: String,
        host: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Whether GRAPH has a path on K vertices as a subgraph.
    Paths { graph: String, k: usize },
    /// Decompose GRAPH into single vertices by union, join and skew join.
    Decompose { graph: String },
    /// Letter representations.
    #[command(subcommand)]
    Letter(LetterCommand),
    /// Search for a biconvex order pair.
    Biconvex { graph: String },
    /// Pairwise non-containment inside a family (T, S, H, permT, permS).
    Antichain {
        family: String,
        indices: Vec<usize>,
        #[command(flatten)]
        search: SearchArgs,
        /// Write each failing witness to a file in this directory.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Run a verification suite, or `all`.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum PermCommand {
    Compose { outer: String, inner: String },
    Inverse { p: String },
    /// Whether HOST contains PATTERN.
    Contains { host: String, pattern: String },
    Convex { p: String },
    StarT { n: usize },
    StarS { n: usize },
    Rho { n: usize },
    Mu { n: usize },
    /// Permutation graph, in the graph text format.
    Graph { p: String },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Whether GRAPH avoids every `--forbid` graph as an induced subgraph.
    Free {
        graph: String,
        #[arg(long = "forbid", required = true)]
        forbid: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
}

#[derive(Subcommand)]
enum LetterCommand {
    /// The grid's letter representation; `--verify` checks it against a graph.
    Grid {
        k: usize,
        m: usize,
        #[arg(long)]
        verify: Option<String>,
    },
}

#[derive(Args, Clone, Copy)]
struct SearchArgs {
    /// Step budget per embedding search; 0 means unbounded.
    #[arg(long, default_value_t = bipwqo::matcher::DEFAULT_BUDGET)]
    budget: u64,
}

impl SearchArgs {
    fn options(self) -> SearchOptions {
        SearchOptions {
            budget: (self.budget > 0).then_some(self.budget),
            parallel: false,
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[command(flatten)]
    search: SearchArgs,
    /// Run cases on one thread.
    #[arg(long)]
    sequential: bool,
    #[arg(long, default_value_t = 11)]
    lemma_key_n_max: usize,
    #[arg(long, default_value_t = 10)]
    reduction_n_max: usize,
    #[arg(long, default_value_t = 10)]
    closure_n_max: usize,
    #[arg(long, default_value_t = 6)]
    universality_m_max: usize,
    #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [6, 8])]
    t_pair: Vec<usize>,
    #[arg(long, num_args = 2, value_names = ["A", "B"], default_values_t = [8, 10])]
    s_pair: Vec<usize>,
    #[arg(long, default_value_t = 300)]
    random_trees: usize,
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    /// Write each failing witness to a file in this directory.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
    /// Write the JSON summary here instead of standard output.
    #[arg(long)]
    json: Option<PathBuf>,
}

type CliResult = Result<ExitCode, String>;

fn read_text(arg: &str) -> Result<String, String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))
    }
}

fn read_graph(arg: &str) -> Result<(Graph, Option<Bipartition>), String> {
    parse_graph(&read_text(arg)?).map_err(|e| format!("{arg}: {e}"))
}

/// `(3,1,4,2)` or `3,1,4,2`.
fn parse_perm(s: &str) -> Result<Permutation, String> {
    let t = s.trim();
    let wrapped = if t.starts_with('(') { t.to_string() } else { format!("({t})") };
    wrapped.parse().map_err(|e| format!("{s}: {e}"))
}

/// Attached bipartition, or the BFS one.
fn parts_of(arg: &str, g: &Graph, b: Option<Bipartition>) -> Result<Bipartition, String> {
    match b {
        Some(b) => Ok(b),
        None => find_bipartition(g).ok_or_else(|| format!("{arg}: graph is not bipartite")),
    }
}

fn yes_no(ok: bool) -> ExitCode {
    println!("{}", if ok { "true" } else { "false" });
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn perm_command(cmd: PermCommand) -> CliResult {
    let e = |r: bipwqo::Result<Permutation>| r.map_err(|e| e.to_string());
    let p = match cmd {
        PermCommand::Compose { outer, inner } => {
            e(compose(&parse_perm(&outer)?, &parse_perm(&inner)?))?
        }
        PermCommand::Inverse { p } => inverse(&parse_perm(&p)?),
        PermCommand::Contains { host, pattern } => {
            let found = find_pattern(&parse_perm(&host)?, &parse_perm(&pattern)?);
            if let Some(pos) = &found {
                println!("# positions {pos:?}");
            }
            return Ok(yes_no(found.is_some()));
        }
        PermCommand::Convex { p } => return Ok(yes_no(is_convex(&parse_perm(&p)?))),
        PermCommand::StarT { n } => e(star_perm_t(n))?,
        PermCommand::StarS { n } => e(star_perm_s(n))?,
        PermCommand::Rho { n } => e(rho_star(n))?,
        PermCommand::Mu { n } => e(mu_star(n))?,
        PermCommand::Graph { p } => {
            let g = permutation_graph(&parse_perm(&p)?);
            print!("{}", serialize_graph(&g, find_bipartition(&g).as_ref()));
            return Ok(ExitCode::SUCCESS);
        }
    };
    println!("{p}");
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &SuiteReport, witness_dir: Option<&Path>, json: Option<&Path>) -> Result<(), String> {
    if let Some(dir) = witness_dir {
        fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    for (i, (line, case)) in report.lines().into_iter().zip(&report.cases).enumerate() {
        match (&case.verdict, witness_dir) {
            (Verdict::Fail { witness }, Some(dir)) => {
                let name = format!("{i:04}-{}-{}.txt", report.suite, case.case).replace('/', "_");
                let path = dir.join(name);
                fs::write(&path, &witness.text).map_err(|e| format!("{}: {e}", path.display()))?;
                println!("{line} {}", path.display());
            }
            _ => println!("{line}"),
        }
    }
    let summary = report.to_json();
    match json {
        Some(p) => fs::write(p, summary).map_err(|e| format!("{}: {e}", p.display()))?,
        None => println!("{summary}"),
    }
    Ok(())
}

fn verify(args: VerifyArgs) -> CliResult {
    let cfg = SuiteConfig {
        parallel: !args.sequential,
        budget: args.search.options().budget,
        lemma_key_n_max: args.lemma_key_n_max,
        reduction_n_max: args.reduction_n_max,
        closure_n_max: args.closure_n_max,
        universality_m_max: args.universality_m_max,
        t_pair: (args.t_pair[0], args.t_pair[1]),
        s_pair: (args.s_pair[0], args.s_pair[1]),
        random_trees: args.random_trees,
        seed: args.seed,
        ..SuiteConfig::default()
    };
    let report = run_suite(&args.suite, &cfg).map_err(|e| e.to_string())?;
    print_report(&report, args.witness_dir.as_deref(), args.json.as_deref())?;
    Ok(code(report.status().exit_code()))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen { family, params, out } => {
            let (g, b) = by_key(&family, &params).map_err(|e| e.to_string())?;
            emit(&serialize_graph(&g, b.as_ref()), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Perm(cmd) => perm_command(cmd),
        Command::Check(CheckCommand::Free { graph, forbid, search }) => {
            let (g, _) = read_graph(&graph)?;
            let hs = forbid.iter().map(|f| read_graph(f).map(|x| x.0)).collect::<Result<Vec<_>, _>>()?;
            Ok(match is_free_with(&g, &hs, search.options()) {
                Freeness::Free => {
                    println!("free");
                    ExitCode::SUCCESS
                }
                Freeness::Contains { pattern, embedding } => {
                    println!("# contains {}", forbid[pattern]);
                    print!("{}", embedding.to_text());
                    code(Status::Fail.exit_code())
                }
                Freeness::Undecided { pattern } => {
                    println!("undecided: budget exhausted on {}", forbid[pattern]);
                    code(Status::Undecided.exit_code())
                }
            })
        }
        Command::Embed { pattern, host, search } => {
            let (p, _) = read_graph(&pattern)?;
            let (h, _) = read_graph(&host)?;
            Ok(match find_induced_embedding_with(&p, &h, search.options()) {
                SearchOutcome::Found(e) => {
                    print!("{}", e.to_text());
                    ExitCode::SUCCESS
                }
                SearchOutcome::NotFound => {
                    println!("none");
                    ExitCode::from(1)
                }
                SearchOutcome::Undecided => {
                    println!("undecided");
                    code(Status::Undecided.exit_code())
                }
            })
        }
        Command::Paths { graph, k } => {
            if k == 0 {
                return Err("K must be at least 1".into());
            }
            let (g, _) = read_graph(&graph)?;
            Ok(yes_no(has_path_subgraph(&g, k)))
        }
        Command::Decompose { graph } => {
            let (g, b) = read_graph(&graph)?;
            let b = parts_of(&graph, &g, b)?;
            Ok(match decompose(&g, &b).map_err(|e| e.to_string())? {
                SearchOutcome::Found(t) => {
                    println!("{t}");
                    ExitCode::SUCCESS
                }
                SearchOutcome::NotFound => {
                    println!("none");
                    ExitCode::from(1)
                }
                SearchOutcome::Undecided => {
                    println!("undecided: more than {} vertices", bipwqo::structure::DECOMPOSE_LIMIT);
                    code(Status::Undecided.exit_code())
                }
            })
        }
        Command::Letter(LetterCommand::Grid { k, m, verify }) => {
            if k == 0 || m == 0 {
                return Err("grid needs K, M >= 1".into());
            }
            let rep = letter_representation_grid(k, m);
            match verify {
                None => {
                    print!("{rep}");
                    let decoded = decode_letter(&rep).map_err(|e| e.to_string())?;
                    debug_assert_eq!(decoded, universal_grid(k, m).graph);
                    Ok(ExitCode::SUCCESS)
                }
                Some(path) => {
                    let (g, _) = read_graph(&path)?;
                    Ok(yes_no(verify_letter(&rep, &g)))
                }
            }
        }
        Command::Biconvex { graph } => {
            let (g, b) = read_graph(&graph)?;
            let b = parts_of(&graph, &g, b)?;
            match find_biconvex_order(&g, &b).map_err(|e| e.to_string())? {
                Some((oa, ob)) => {
                    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
                    println!("A {}", join(&oa));
                    println!("B {}", join(&ob));
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("none");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Antichain { family, indices, search, witness_dir } => {
            let family: Family = family.parse().map_err(|e: bipwqo::Error| e.to_string())?;
            let cfg = SuiteConfig {
                budget: search.options().budget,
                ..SuiteConfig::default()
            };
            let report = antichain_check(family, &indices, &cfg).map_err(|e| e.to_string())?;
            print_report(&report, witness_dir.as_deref(), None)?;
            Ok(code(report.status().exit_code()))
        }
        Command::Verify(args) => verify(args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
