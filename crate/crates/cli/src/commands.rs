use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use graph_energy::distance::DistanceMatrix;
use graph_energy::io::{parse_graphs, to_edge_list, to_graph6};
use graph_energy::verify::{self, CorpusConfig, ReportFormat, Theorem};
use graph_energy::weights::weight_vector_with;
use graph_energy::{energy_report_for, generate, FamilySpec, Graph, IndexReport, WeightKind};

#[derive(Debug, Parser)]
#[command(name = "graph-energy", version, about = "Graph energy and weighted Laplacian energies")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Topological indices and the six vertex weights of each graph in a file.
    Indices(IndicesArgs),
    /// Graph energy and weighted Laplacian energies of each graph in a file.
    Energy(EnergyArgs),
    /// Check the energy inequalities over a corpus of graphs.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,
    RandomConnected,
    RandomTree,
    RandomBipartite,
    Nanotorus,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    /// Nanotorus parameter p.
    #[arg(long)]
    p: Option<usize>,
    /// Nanotorus parameter q.
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Edge probability for random families.
    #[arg(long, default_value_t = 0.5)]
    prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output path; standard output when omitted or `-`.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Tsv,
}

#[derive(Debug, Args)]
struct IndicesArgs {
    graphfile: PathBuf,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

#[derive(Debug, Args)]
struct EnergyArgs {
    graphfile: PathBuf,
    /// deg, tr, two_degree, deg2, ecc, deg3 or all.
    #[arg(long, default_value = "all")]
    kind: String,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// TOML corpus configuration; flags given alongside override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// upper_bound, bipartite_lower, sandwich, vt_equality or all.
    #[arg(long = "theorem", num_args = 1.., value_delimiter = ',')]
    theorems: Vec<String>,
    /// Corpus entries `family:count[:key=value,...]`.
    #[arg(long, num_args = 1..)]
    families: Vec<String>,
    /// Glob patterns of graph files.
    #[arg(long, num_args = 1..)]
    inputs: Vec<String>,
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    kinds: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    format: Option<String>,
    /// Run the checkers on deliberately corrupted energies; a sound harness
    /// reports failures and exits with status 1.
    #[arg(long)]
    self_test: bool,
}

pub fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => gen(&args).map(|()| ExitCode::SUCCESS),
        Command::Indices(args) => indices(&args).map(|()| ExitCode::SUCCESS),
        Command::Energy(args) => energy(&args).map(|()| ExitCode::SUCCESS),
        Command::Verify(args) => verify(&args),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out.filter(|p| *p != Path::new("-")) {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn family_spec(args: &GenArgs) -> Result<FamilySpec> {
    let need = |v: Option<usize>, name: &str| v.with_context(|| format!("--{name} is required for this family"));
    Ok(match args.family {
        Family::Path => FamilySpec::Path { n: need(args.n, "n")? },
        Family::Cycle => FamilySpec::Cycle { n: need(args.n, "n")? },
        Family::Complete => FamilySpec::Complete { n: need(args.n, "n")? },
        Family::Star => FamilySpec::Star { n: need(args.n, "n")? },
        Family::CompleteBipartite => FamilySpec::CompleteBipartite {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
        },
        Family::RandomConnected => FamilySpec::RandomConnected {
            n: need(args.n, "n")?,
            p: args.prob,
            seed: args.seed,
        },
        Family::RandomTree => FamilySpec::RandomTree {
            n: need(args.n, "n")?,
            seed: args.seed,
        },
        Family::RandomBipartite => FamilySpec::RandomBipartite {
            a: need(args.a, "a")?,
            b: need(args.b, "b")?,
            p: args.prob,
            seed: args.seed,
        },
        Family::Nanotorus => FamilySpec::Nanotorus {
            p: need(args.p, "p")?,
            q: need(args.q, "q")?,
        },
    })
}

fn gen(args: &GenArgs) -> Result<()> {
    let spec = family_spec(args)?;
    let g = generate(&spec).with_context(|| spec.to_string())?;
    let text = match args.format {
        GraphFormat::Edgelist => to_edge_list(&g),
        GraphFormat::Graph6 => to_graph6(&g) + "\n",
    };
    emit(args.out.as_deref(), &text)
}

fn read_graphs(path: &Path) -> Result<Vec<(usize, Graph)>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_graphs(&text).with_context(|| format!("parsing {}", path.display()))
}

fn label(path: &Path, line: usize) -> String {
    format!("{}:{line}", path.display())
}

fn indices(args: &IndicesArgs) -> Result<()> {
    let mut out = String::new();
    for (line, g) in read_graphs(&args.graphfile)? {
        let distances = DistanceMatrix::new(&g).ok();
        let report = IndexReport::with_distances(&g, distances.as_ref());
        let kinds: Vec<WeightKind> = WeightKind::ALL
            .into_iter()
            .filter(|k| distances.is_some() || !k.is_distance_based())
            .collect();
        let weights: Vec<_> = kinds
            .iter()
            .map(|&k| weight_vector_with(&g, k, distances.as_ref()))
            .collect();
        let id = label(&args.graphfile, line);

        match args.format {
            TableFormat::Json => {
                let weight_map: serde_json::Map<_, _> = weights
                    .iter()
                    .map(|w| (w.kind().to_string(), serde_json::json!(w.values())))
                    .collect();
                let obj = serde_json::json!({
                    "graph": id,
                    "n": g.order(),
                    "m": g.size(),
                    "indices": report,
                    "weights": weight_map,
                });
                writeln!(out, "{obj}")?;
            }
            TableFormat::Tsv => {
                let show = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
                writeln!(out, "# graph\t{id}\tn\t{}\tm\t{}", g.order(), g.size())?;
                writeln!(out, "# wiener\t{}", show(report.wiener))?;
                writeln!(out, "# first_zagreb\t{}", report.first_zagreb)?;
                writeln!(out, "# total_eccentricity\t{}", show(report.total_eccentricity))?;
                writeln!(out, "# forgotten\t{}", report.forgotten)?;
                writeln!(out, "# radius\t{}", show(report.radius.map(u64::from)))?;
                writeln!(out, "# diameter\t{}", show(report.diameter.map(u64::from)))?;
                let header: Vec<_> = kinds.iter().map(|k| k.as_str()).collect();
                writeln!(out, "vertex\t{}", header.join("\t"))?;
                for v in 0..g.order() {
                    let row: Vec<_> = weights.iter().map(|w| w.values()[v].to_string()).collect();
                    writeln!(out, "{v}\t{}", row.join("\t"))?;
                }
            }
        }
    }
    emit(None, &out)
}

fn energy(args: &EnergyArgs) -> Result<()> {
    let kinds: Vec<WeightKind> = if args.kind == "all" {
        WeightKind::ALL.to_vec()
    } else {
        vec![args.kind.parse()?]
    };
    let mut out = String::new();
    for (line, g) in read_graphs(&args.graphfile)? {
        let id = label(&args.graphfile, line);
        let report = energy_report_for(&g, &kinds).with_context(|| id.clone())?;
        let mut obj = serde_json::to_value(&report)?;
        obj["graph"] = serde_json::Value::String(id);
        writeln!(out, "{obj}")?;
    }
    emit(None, &out)
}

fn verify_config(args: &VerifyArgs) -> Result<CorpusConfig> {
    let mut config = match &args.config {
        Some(path) => CorpusConfig::from_path(path)?,
        None => CorpusConfig::default(),
    };
    if !args.families.is_empty() {
        config.families = args.families.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
    }
    if !args.inputs.is_empty() {
        config.inputs.clone_from(&args.inputs);
    }
    if !args.kinds.is_empty() {
        config.kinds = names(&args.kinds, &WeightKind::ALL)?;
    }
    if !args.theorems.is_empty() {
        config.theorems = names(&args.theorems, &Theorem::ALL)?;
    }
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(tol) = args.tol {
        config.tolerance = tol;
    }
    if let Some(out) = &args.out {
        config.out = Some(out.clone());
    }
    if let Some(format) = &args.format {
        config.format = format.parse::<ReportFormat>()?;
    }
    config.validate()?;
    Ok(config)
}

fn names<T>(names: &[String], all: &[T]) -> Result<Vec<T>>
where
    T: Copy + std::str::FromStr<Err = graph_energy::Error>,
{
    if names.iter().any(|n| n == "all") {
        return Ok(all.to_vec());
    }
    Ok(names.iter().map(|n| n.parse()).collect::<Result<_, _>>()?)
}

fn verify(args: &VerifyArgs) -> Result<ExitCode> {
    let (report, out, format) = if args.self_test {
        let tol = args.tol.unwrap_or(verify::DEFAULT_TOLERANCE);
        if tol.is_nan() || tol <= 0.0 {
            bail!("tolerance must be positive");
        }
        let format = args.format.as_deref().map(str::parse).transpose()?.unwrap_or_default();
        (verify::self_test(tol)?, args.out.clone(), format)
    } else {
        let config = verify_config(args)?;
        (verify::run_corpus(&config)?, config.out.clone(), config.format)
    };

    let body = match format {
        ReportFormat::Jsonl => report.to_jsonl(),
        ReportFormat::Tsv => report.to_tsv(),
    };
    emit(out.as_deref(), &body)?;

    let s = &report.summary;
    eprintln!(
        "{} graphs, {} records: {} violations, {} inconsistent, {} skipped",
        s.graphs, s.records, s.violations, s.inconsistent, s.skipped
    );
    Ok(if s.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
