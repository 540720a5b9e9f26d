//! Corpus configuration and the batch runner.
//!
//! A family entry reads `family:count[:key=value,...]`, where a value is a
//! number or an inclusive integer range `lo..hi`, e.g.
//! `random_connected:200:n=4..12` or `nanotorus:1:p=3,q=2`. Entry `f`
//! (0-based) draws from `GraphRng::new(seed ^ (f + 1) · 0x9E3779B97F4A7C15)`:
//! for each graph, ranged parameters are sampled with `between` in the
//! family's parameter order, then random families take one `next_u64` as
//! their own seed.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Deserialize;

use super::{
    bipartite_lower_record, sandwich_record, upper_bound_record, vt_record, Report, Theorem,
    VerificationRecord, DEFAULT_TOLERANCE,
};
use crate::distance::DistanceMatrix;
use crate::energy::{graph_energy, KindEnergy};
use crate::error::{Error, Result};
use crate::generators::{generate, FamilySpec};
use crate::graph::Graph;
use crate::io::parse_graphs;
use crate::rng::GraphRng;
use crate::weights::{weight_vector_with, WeightKind};

const DEFAULT_PROBABILITY: f64 = 0.5;
const ENTRY_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

#[derive(Debug, Clone, Copy, PartialEq)]
enum Param {
    Range(u64, u64),
    Value(f64),
}

/// One `family:count:params` line of a corpus.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusEntry {
    pub family: String,
    pub count: usize,
    params: BTreeMap<String, Param>,
}

fn family_params(family: &str) -> Option<&'static [&'static str]> {
    Some(match family {
        "path" | "cycle" | "complete" | "star" | "random_tree" => &["n"],
        "complete_bipartite" => &["a", "b"],
        "random_connected" => &["n", "p"],
        "random_bipartite" => &["a", "b", "p"],
        "nanotorus" => &["p", "q"],
        _ => return None,
    })
}

fn is_random(family: &str) -> bool {
    family.starts_with("random_")
}

impl std::str::FromStr for CorpusEntry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Config(format!("corpus entry `{s}`: {msg}"));
        let mut parts = s.trim().splitn(3, ':');
        let family = parts.next().unwrap_or_default().to_string();
        let allowed = family_params(&family).ok_or_else(|| bad(format!("unknown family `{family}`")))?;
        let count = parts
            .next()
            .ok_or_else(|| bad("missing count".into()))?
            .parse::<usize>()
            .map_err(|e| bad(format!("count: {e}")))?;

        let mut params = BTreeMap::new();
        for item in parts.next().unwrap_or("").split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, got `{item}`")))?;
            let key = key.trim();
            if !allowed.contains(&key) {
                return Err(bad(format!("`{key}` is not a parameter of {family}")));
            }
            let value = value.trim();
            let param = if let Some((lo, hi)) = value.split_once("..") {
                let lo = lo.parse().map_err(|_| bad(format!("bad range `{value}`")))?;
                let hi = hi.parse().map_err(|_| bad(format!("bad range `{value}`")))?;
                if lo > hi {
                    return Err(bad(format!("empty range `{value}`")));
                }
                Param::Range(lo, hi)
            } else {
                Param::Value(value.parse().map_err(|_| bad(format!("bad value `{value}`")))?)
            };
            params.insert(key.to_string(), param);
        }
        for key in allowed {
            let defaulted = *key == "p" && is_random(&family);
            if !params.contains_key(*key) && !defaulted {
                return Err(bad(format!("missing parameter `{key}`")));
            }
        }
        Ok(CorpusEntry { family, count, params })
    }
}

/// Expands entry number `entry_index` of a corpus seeded with `seed`.
pub fn expand_entry(entry: &CorpusEntry, entry_index: usize, seed: u64) -> Result<Vec<FamilySpec>> {
    let mut rng = GraphRng::new(seed ^ (entry_index as u64 + 1).wrapping_mul(ENTRY_STRIDE));
    let order = family_params(&entry.family).expect("validated on parse");
    let mut specs = Vec::with_capacity(entry.count);
    for _ in 0..entry.count {
        let mut values = BTreeMap::new();
        for key in order {
            let v = match entry.params.get(*key) {
                Some(Param::Range(lo, hi)) => rng.between(*lo, *hi) as f64,
                Some(Param::Value(v)) => *v,
                None => DEFAULT_PROBABILITY,
            };
            values.insert(*key, v);
        }
        let int = |key: &str| -> Result<usize> {
            let v = values[key];
            if v < 0.0 || v.fract() != 0.0 {
                return Err(Error::Config(format!("{}: `{key}` must be a non-negative integer", entry.family)));
            }
            Ok(v as usize)
        };
        let graph_seed = if is_random(&entry.family) { rng.next_u64() } else { 0 };
        let spec = match entry.family.as_str() {
            "path" => FamilySpec::Path { n: int("n")? },
            "cycle" => FamilySpec::Cycle { n: int("n")? },
            "complete" => FamilySpec::Complete { n: int("n")? },
            "star" => FamilySpec::Star { n: int("n")? },
            "complete_bipartite" => FamilySpec::CompleteBipartite { a: int("a")?, b: int("b")? },
            "random_tree" => FamilySpec::RandomTree { n: int("n")?, seed: graph_seed },
            "random_connected" => FamilySpec::RandomConnected {
                n: int("n")?,
                p: values["p"],
                seed: graph_seed,
            },
            "random_bipartite" => FamilySpec::RandomBipartite {
                a: int("a")?,
                b: int("b")?,
                p: values["p"],
                seed: graph_seed,
            },
            "nanotorus" => FamilySpec::Nanotorus { p: int("p")?, q: int("q")? },
            other => unreachable!("family `{other}` validated on parse"),
        };
        specs.push(spec);
    }
    Ok(specs)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    #[default]
    Jsonl,
    Tsv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jsonl" => Ok(ReportFormat::Jsonl),
            "tsv" => Ok(ReportFormat::Tsv),
            _ => Err(Error::Config(format!("unknown report format `{s}`"))),
        }
    }
}

/// What to verify, on which graphs.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusConfig {
    pub families: Vec<CorpusEntry>,
    /// Glob patterns of graph files (edge list or graph6).
    pub inputs: Vec<String>,
    pub kinds: Vec<WeightKind>,
    pub theorems: Vec<Theorem>,
    pub tolerance: f64,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub format: ReportFormat,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            families: Vec::new(),
            inputs: Vec::new(),
            kinds: WeightKind::ALL.to_vec(),
            theorems: Theorem::ALL.to_vec(),
            tolerance: DEFAULT_TOLERANCE,
            seed: 0,
            out: None,
            format: ReportFormat::Jsonl,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    #[serde(default)]
    families: Vec<String>,
    #[serde(default)]
    inputs: Vec<String>,
    #[serde(default)]
    kinds: Vec<String>,
    #[serde(default)]
    theorems: Vec<String>,
    #[serde(alias = "tol")]
    tolerance: Option<f64>,
    seed: Option<u64>,
    out: Option<PathBuf>,
    format: Option<ReportFormat>,
}

/// Parses a list of names where `all` stands for every member.
pub(crate) fn parse_names<T: Copy + std::str::FromStr<Err = Error>>(names: &[String], all: &[T]) -> Result<Vec<T>> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        return Ok(all.to_vec());
    }
    names
        .iter()
        .map(|n| n.parse().map_err(|e: Error| Error::Config(e.to_string())))
        .collect()
}

impl CorpusConfig {
    /// Parses the TOML config file format:
    ///
    /// ```toml
    /// families = ["random_connected:200:n=4..12"]
    /// inputs = ["graphs/*.g6"]
    /// kinds = ["all"]
    /// theorems = ["upper_bound"]
    /// tolerance = 1e-8
    /// seed = 42
    /// out = "report.jsonl"
    /// format = "jsonl"
    /// ```
    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawConfig = toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let config = CorpusConfig {
            families: raw.families.iter().map(|s| s.parse()).collect::<Result<_>>()?,
            inputs: raw.inputs,
            kinds: parse_names(&raw.kinds, &WeightKind::ALL)?,
            theorems: parse_names(&raw.theorems, &Theorem::ALL)?,
            tolerance: raw.tolerance.unwrap_or(DEFAULT_TOLERANCE),
            seed: raw.seed.unwrap_or(0),
            out: raw.out,
            format: raw.format.unwrap_or_default(),
        };
        config.validate()?;
        Ok(config)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        Self::from_toml(&text)
    }

    pub fn validate(&self) -> Result<()> {
        if self.families.is_empty() && self.inputs.is_empty() {
            return Err(Error::Config("no graph source: give families or inputs".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Config(format!("tolerance must be positive, got {}", self.tolerance)));
        }
        if self.kinds.is_empty() || self.theorems.is_empty() {
            return Err(Error::Config("no kinds or theorems selected".into()));
        }
        Ok(())
    }
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    Family(FamilySpec),
    File { path: PathBuf, line: usize },
}

impl GraphSource {
    fn label(&self) -> String {
        match self {
            GraphSource::Family(spec) => spec.to_string(),
            GraphSource::File { path, line } => format!("{}:{line}", path.display()),
        }
    }

    fn vertex_transitive(&self) -> bool {
        matches!(self, GraphSource::Family(spec) if spec.is_vertex_transitive())
    }
}

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub source: GraphSource,
    pub graph: Graph,
}

impl CorpusConfig {
    /// Every graph of the corpus, families first, then files in sorted
    /// path order.
    pub fn graphs(&self) -> Result<Vec<CorpusGraph>> {
        let mut out = Vec::new();
        for (f, entry) in self.families.iter().enumerate() {
            for spec in expand_entry(entry, f, self.seed)? {
                let graph = generate(&spec).map_err(|e| Error::Config(format!("{spec}: {e}")))?;
                out.push(CorpusGraph {
                    source: GraphSource::Family(spec),
                    graph,
                });
            }
        }
        for pattern in &self.inputs {
            let mut paths = glob::glob(pattern)
                .map_err(|e| Error::Config(format!("bad glob `{pattern}`: {e}")))?
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| io_error(e.path(), e.error()))?;
            if paths.is_empty() {
                return Err(Error::Config(format!("`{pattern}` matches no files")));
            }
            paths.sort();
            for path in paths {
                let text = std::fs::read_to_string(&path).map_err(|e| io_error(&path, e))?;
                for (line, graph) in parse_graphs(&text).map_err(|e| io_error(&path, e))? {
                    out.push(CorpusGraph {
                        source: GraphSource::File { path: path.clone(), line },
                        graph,
                    });
                }
            }
        }
        Ok(out)
    }
}

/// Evaluates every applicable (graph, theorem, kind) combination. Graphs
/// are processed in parallel; records keep corpus order.
pub fn run_corpus(config: &CorpusConfig) -> Result<Report> {
    config.validate()?;
    let graphs = config.graphs()?;
    let per_graph = graphs
        .par_iter()
        .enumerate()
        .map(|(i, cg)| verify_graph(i, cg, config))
        .collect::<Result<Vec<_>>>()?;
    let skipped = per_graph.iter().map(|(_, s)| s).sum();
    let records = per_graph.into_iter().flat_map(|(r, _)| r).collect();
    Ok(Report::new(records, graphs.len(), skipped))
}

fn verify_graph(index: usize, cg: &CorpusGraph, config: &CorpusConfig) -> Result<(Vec<VerificationRecord>, usize)> {
    let g = &cg.graph;
    let tol = config.tolerance;
    let distances = DistanceMatrix::new(g).ok();
    let connected = distances.is_some();
    let bipartite = g.is_bipartite();

    let energy = graph_energy(g)?;
    let mut energies: BTreeMap<WeightKind, KindEnergy> = BTreeMap::new();
    let wanted_vt = config.theorems.contains(&Theorem::VtEquality) && cg.source.vertex_transitive() && connected;
    let needed: Vec<WeightKind> = if wanted_vt { WeightKind::ALL.to_vec() } else { config.kinds.clone() };
    for kind in needed {
        if kind.is_distance_based() && !connected {
            continue;
        }
        let w = weight_vector_with(g, kind, distances.as_ref());
        energies.insert(kind, KindEnergy::compute(g, &w)?);
    }

    let mut records = Vec::new();
    let mut skipped = 0;
    for &theorem in &config.theorems {
        if theorem == Theorem::VtEquality {
            if wanted_vt {
                let all: Vec<_> = energies.values().cloned().collect();
                records.push(vt_record(energy, &all, tol));
            } else {
                skipped += 1;
            }
            continue;
        }
        for &kind in &config.kinds {
            let applicable = match theorem {
                Theorem::UpperBound => connected,
                _ => bipartite,
            };
            match energies.get(&kind) {
                Some(k) if applicable => records.push(match theorem {
                    Theorem::UpperBound => upper_bound_record(energy, k, tol),
                    Theorem::BipartiteLower => bipartite_lower_record(energy, k, tol),
                    Theorem::Sandwich => sandwich_record(energy, k, tol),
                    Theorem::VtEquality => unreachable!(),
                }),
                _ => skipped += 1,
            }
        }
    }
    let label = cg.source.label();
    for r in &mut records {
        r.index = index;
        r.graph.clone_from(&label);
    }
    Ok((records, skipped))
}
