mod check;

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use perfdiv::battery::{self, Fixtures, Sizes};
use perfdiv::conjectures::{self, enumerate, random, CorpusItem, Status};
use perfdiv::{catalog, parse_graph6, write_graph6, Error, Graph, Limits};

/// Input could not be used: bad flags, unparseable graph, unknown id.
const EXIT_INPUT: u8 = 2;
const EXIT_THEOREM_VIOLATED: u8 = 1;
const EXIT_DISCOVERY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "perfdiv",
    version,
    about = "Perfect divisibility toolkit for small graphs"
)]
#[command(
    after_help = "Exponential procedures are capped at PERFDIV_CAP vertices (default 16); \
    single good-partition and perfection searches at PERFDIV_SEARCH_CAP (default 22)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph.
    Check(CheckArgs),
    /// Scan a corpus for counterexamples to a registered statement.
    Scan(ScanArgs),
    /// Run the acceptance battery.
    VerifyPaper(VerifyArgs),
    /// Emit graph6 fixtures.
    Gen(GenArgs),
    /// List registered statements.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// A graph6 line.
    graph6: Option<String>,
    /// A catalog key such as figure1, c5, petersen or cycle(7).
    #[arg(long, conflicts_with_all = ["graph6", "edges"])]
    name: Option<String>,
    /// `n:u-v,u-v,...`, e.g. `3:0-1,1-2`.
    #[arg(long, conflicts_with = "graph6")]
    edges: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    conjecture: String,
    /// graph6 file, one graph per line; `-` reads stdin.
    #[arg(long, conflicts_with = "all_n", required_unless_present = "all_n")]
    input: Option<String>,
    /// Every graph with at most this many vertices (up to 7).
    #[arg(long)]
    all_n: Option<usize>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Substitute graph6 for the built-in figure1 graph.
    #[arg(long)]
    figure1: Option<String>,
    #[arg(long, default_value_t = 4)]
    jobs: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GenArgs {
    /// Every graph on exactly this many vertices (up to 7).
    #[arg(long)]
    all_n: Option<usize>,
    /// `N P SEED`: one G(n, p) graph.
    #[arg(long, num_args = 3, value_names = ["N", "P", "SEED"])]
    random: Option<Vec<String>>,
    /// `N1 N2 C P SEED`: two random sides glued along a clique.
    #[arg(long, num_args = 5, value_names = ["N1", "N2", "C", "P", "SEED"])]
    glued: Option<Vec<String>>,
}

/// A failure carrying its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: message.into(),
    }
}

fn parse_edges(spec: &str) -> Result<Graph, Failure> {
    let bad = |why: &str| input_error(format!("--edges {spec:?}: {why}"));
    let (n, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad("expected n:u-v,..."))?;
    let n: usize = n
        .trim()
        .parse()
        .map_err(|_| bad("vertex count is not a number"))?;
    let mut edges = Vec::new();
    for pair in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (u, v) = pair
            .split_once('-')
            .ok_or_else(|| bad("edge must be u-v"))?;
        let u = u.trim().parse().map_err(|_| bad("bad vertex"))?;
        let v = v.trim().parse().map_err(|_| bad("bad vertex"))?;
        edges.push((u, v));
    }
    Ok(Graph::from_edges(n, edges)?)
}

fn emit(out: &str) {
    let mut stdout = io::stdout().lock();
    // a closed pipe is not an error worth reporting
    let _ = stdout.write_all(out.as_bytes());
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_check(args: CheckArgs, limits: &Limits) -> Result<(), Failure> {
    let g = match (&args.graph6, &args.name, &args.edges) {
        (Some(s), _, _) => parse_graph6(s)?,
        (_, Some(k), _) => catalog::named(k)?,
        (_, _, Some(e)) => parse_edges(e)?,
        _ => return Err(input_error("give a graph6 line, --name or --edges")),
    };
    let report = check::analyze(&g, limits)?;
    emit(&match args.format {
        Format::Text => report.to_string(),
        Format::Json => json(&report),
    });
    Ok(())
}

fn cmd_scan(args: ScanArgs, limits: &Limits) -> Result<(), Failure> {
    let spec = conjectures::lookup(&args.conjecture).ok_or_else(|| {
        input_error(format!(
            "unknown statement id {:?}; see `perfdiv list`",
            args.conjecture
        ))
    })?;
    let (items, source): (Vec<CorpusItem>, String) = match (&args.input, args.all_n) {
        (Some(path), _) => {
            let mut text = String::new();
            if path == "-" {
                io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| input_error(format!("stdin: {e}")))?;
            } else {
                text = std::fs::read_to_string(path)
                    .map_err(|e| input_error(format!("{path}: {e}")))?;
            }
            (conjectures::read_graph6_corpus(&text), path.clone())
        }
        (None, Some(k)) => {
            if k > enumerate::SMALL_MAX {
                return Err(input_error(format!(
                    "--all-n is limited to {}; pass larger corpora with --input",
                    enumerate::SMALL_MAX
                )));
            }
            let corpus = enumerate::corpus_up_to(k)?;
            (corpus.into_iter().map(Ok).collect(), format!("all n<={k}"))
        }
        (None, None) => return Err(input_error("give --input or --all-n")),
    };
    let report = conjectures::scan(&items, &spec, limits, args.jobs, &source)?;
    emit(&match args.format {
        Format::Text => report.to_string(),
        Format::Json => json(&report),
    });
    if report.counterexamples.is_empty() {
        Ok(())
    } else if spec.status == Status::Theorem {
        Err(Failure {
            code: EXIT_THEOREM_VIOLATED,
            message: format!("theorem {} violated", spec.id),
        })
    } else {
        Err(Failure {
            code: EXIT_DISCOVERY,
            message: format!(
                "{} counterexample(s) to {}",
                report.counterexamples.len(),
                spec.id
            ),
        })
    }
}

fn cmd_verify(args: VerifyArgs, limits: &Limits) -> Result<(), Failure> {
    let mut fixtures = Fixtures::default();
    if let Some(s) = &args.figure1 {
        fixtures.figure1 = parse_graph6(s)?;
    }
    let sizes = Sizes {
        jobs: args.jobs,
        ..Sizes::default()
    };
    let outcomes = battery::run_all(&fixtures, &sizes, limits)?;
    let mut out = String::from("acceptance battery\n");
    for o in &outcomes {
        out.push_str(&o.to_string());
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    out.push_str(&format!("{passed}/{} checks passed\n", outcomes.len()));
    emit(&out);
    if passed == outcomes.len() {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: "acceptance battery failed".into(),
        })
    }
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Failure> {
    s.parse()
        .map_err(|_| input_error(format!("{what}: {s:?} is not a valid number")))
}

fn cmd_gen(args: GenArgs) -> Result<(), Failure> {
    let graphs = if let Some(k) = args.all_n {
        enumerate::enumerate_small(k)?
    } else if let Some(v) = &args.random {
        let g = random::random_graph(
            parse_num(&v[0], "N")?,
            parse_num(&v[1], "P")?,
            parse_num(&v[2], "SEED")?,
        )?;
        vec![g]
    } else if let Some(v) = &args.glued {
        let (g, _) = random::random_glued(
            parse_num(&v[0], "N1")?,
            parse_num(&v[1], "N2")?,
            parse_num(&v[2], "C")?,
            parse_num(&v[3], "P")?,
            parse_num(&v[4], "SEED")?,
        )?;
        vec![g]
    } else {
        return Err(input_error("give --all-n, --random or --glued"));
    };
    let mut out = String::new();
    for g in &graphs {
        out.push_str(&write_graph6(g));
        out.push('\n');
    }
    emit(&out);
    Ok(())
}

fn cmd_list() {
    let mut out = String::new();
    for spec in conjectures::registry() {
        out.push_str(&format!("{spec}\n"));
    }
    emit(&out);
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let limits = Limits::from_env();
    let result = match cli.command {
        Command::Check(a) => cmd_check(a, &limits),
        Command::Scan(a) => cmd_scan(a, &limits),
        Command::VerifyPaper(a) => cmd_verify(a, &limits),
        Command::Gen(a) => cmd_gen(a),
        Command::List => {
            cmd_list();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("perfdiv: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
