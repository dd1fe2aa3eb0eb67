//! Batch front end for curvature pooling: generate datasets, compute
//! per-edge curvature, pool graphs, report distributions, and benchmark
//! the precompute stage.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error. Every command is
//! deterministic given its flags and seed; the thread count never
//! changes output bytes, only wall-clock time.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use curvpool_cli::formats;
use curvpool_cli::manifest::{
    load_entry, load_manifest, DatasetManifest, ManifestEntry, DEGREE_FEATURES,
};
use curvpool_cli::report::{
    histogram_text, to_json_pretty, GraphStats, HistogramJson, PoolingReportJson, StatsReport,
};
use curvpool_core::{
    bfc_all, caveman, clique_pool, curvpool_precomputed, degree_features, histogram,
    mean_curvature, pooling_report, recommend_threshold, Aggregator, CavemanSpec, EdgeCurvature,
    FeatureMatrix, Graph, Strategy,
};

#[derive(Parser)]
#[command(
    name = "curvpool",
    version,
    about = "Balanced-Forman-curvature pooling over graph datasets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute per-edge curvature for a graph or a whole dataset
    Curvature(CurvatureArgs),
    /// Pool a graph or dataset across curvature-selected edges
    Pool(PoolArgs),
    /// Pool by maximal cliques (baseline)
    Cliquepool(CliquePoolArgs),
    /// Generate a labeled connected-caveman dataset
    Generate(GenerateArgs),
    /// Curvature distribution, summary statistics, and a threshold recommendation
    Stats(StatsArgs),
    /// Time curvature and pooling over a ladder of caveman graphs
    Bench(BenchArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Single edge-list graph file
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Dataset manifest (JSON)
    #[arg(long)]
    manifest: Option<PathBuf>,
}

#[derive(Args)]
struct CurvatureArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Output curvature file (single graph) or directory (manifest)
    #[arg(long)]
    out: PathBuf,
    /// Worker threads for manifest fan-out; 0 or absent = all cores
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    High,
    Low,
    Mixed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AggArg {
    Sum,
    Avg,
    Max,
}

impl From<AggArg> for Aggregator {
    fn from(a: AggArg) -> Self {
        match a {
            AggArg::Sum => Aggregator::Sum,
            AggArg::Avg => Aggregator::Avg,
            AggArg::Max => Aggregator::Max,
        }
    }
}

#[derive(Args)]
struct PoolArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Candidate selection rule
    #[arg(long, value_enum)]
    strategy: StrategyArg,
    /// Lower threshold (required by low and mixed)
    #[arg(long, allow_hyphen_values = true)]
    t_low: Option<f64>,
    /// Upper threshold (required by high and mixed)
    #[arg(long, allow_hyphen_values = true)]
    t_high: Option<f64>,
    /// Feature aggregation inside each pool
    #[arg(long, value_enum, default_value = "sum")]
    agg: AggArg,
    /// Precomputed curvature: file (single graph) or directory of
    /// <stem>.curv files (manifest); skips recomputation
    #[arg(long)]
    curvature: Option<PathBuf>,
    /// Features for a single graph: a file path or `degrees`
    #[arg(long)]
    features: Option<String>,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct CliquePoolArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "sum")]
    agg: AggArg,
    /// Features for a single graph: a file path or `degrees`
    #[arg(long)]
    features: Option<String>,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Cliques per label-0 graph (>= 2)
    #[arg(long)]
    cliques: usize,
    /// Nodes per clique for label-0 graphs (>= 3)
    #[arg(long)]
    clique_size: usize,
    /// Cliques per label-1 graph; defaults to --cliques + 1
    #[arg(long)]
    cliques_alt: Option<usize>,
    /// Nodes per clique for label-1 graphs; defaults to --clique-size
    #[arg(long)]
    clique_size_alt: Option<usize>,
    /// Number of graphs (labels alternate 0, 1, 0, 1, ...)
    #[arg(long)]
    count: usize,
    /// Base RNG seed; graph i uses seed + i
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Dataset name written into the manifest
    #[arg(long, default_value = "caveman")]
    name: String,
    /// Output directory
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct StatsArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Precomputed curvature: file (single graph) or directory (manifest)
    #[arg(long)]
    curvature: Option<PathBuf>,
    /// Histogram bins
    #[arg(long, default_value_t = 40)]
    bins: usize,
    /// Write the JSON stats report here
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the two-column `bin_center count` histogram here
    #[arg(long)]
    histogram: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    /// Comma-separated clique counts of the caveman ladder
    #[arg(long, default_value = "50,100,200,400")]
    ladder: String,
    /// Clique size of every ladder rung
    #[arg(long, default_value_t = 6)]
    clique_size: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Timing repetitions per rung; the minimum is reported
    #[arg(long, default_value_t = 5)]
    reps: usize,
    /// Threshold for the timed high-curvature pooling stage
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t_high: f64,
    #[arg(long, value_enum, default_value = "sum")]
    agg: AggArg,
}

enum CliError {
    Usage(String),
    Data(String),
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn data(msg: impl Into<String>) -> CliError {
    CliError::Data(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let ok = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    let result = match cli.command {
        Command::Curvature(args) => cmd_curvature(args),
        Command::Pool(args) => cmd_pool(args),
        Command::Cliquepool(args) => cmd_cliquepool(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Stats(args) => cmd_stats(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

// ---- shared helpers ----

fn read_text(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn create_dir(path: &Path) -> CliResult<()> {
    fs::create_dir_all(path).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn read_graph_file(path: &Path) -> CliResult<Graph> {
    formats::read_edge_list(&read_text(path)?).map_err(|e| data(format!("{}: {e}", path.display())))
}

fn read_curvature_file(path: &Path, g: &Graph) -> CliResult<EdgeCurvature> {
    let curv = formats::read_curvature(&read_text(path)?)
        .map_err(|e| data(format!("{}: {e}", path.display())))?;
    if !curv.matches_graph(g) {
        return Err(data(format!(
            "{}: curvature entries do not cover the graph's edge set",
            path.display()
        )));
    }
    Ok(curv)
}

/// File stem used to derive per-graph output names from a manifest entry.
fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.to_string_lossy().into_owned())
}

fn entry_stem(entry: &ManifestEntry) -> String {
    stem(Path::new(&entry.graph))
}

fn with_pool<T: Send>(threads: Option<usize>, run: impl FnOnce() -> T + Send) -> CliResult<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| usage(format!("--threads: {e}")))?;
    Ok(pool.install(run))
}

fn single_graph_features(g: &Graph, flag: Option<&str>) -> CliResult<FeatureMatrix> {
    match flag {
        None => Ok(degree_features(g)),
        Some(DEGREE_FEATURES) => Ok(degree_features(g)),
        Some(path) => {
            let path = Path::new(path);
            let feats = formats::read_features(&read_text(path)?)
                .map_err(|e| data(format!("{}: {e}", path.display())))?;
            if feats.rows() != g.num_nodes() {
                return Err(data(format!(
                    "{}: {} feature rows for a {}-node graph",
                    path.display(),
                    feats.rows(),
                    g.num_nodes()
                )));
            }
            Ok(feats)
        }
    }
}

fn build_strategy(
    kind: StrategyArg,
    t_low: Option<f64>,
    t_high: Option<f64>,
) -> CliResult<Strategy> {
    let strategy = match kind {
        StrategyArg::High => Strategy::High {
            t_high: t_high.ok_or_else(|| usage("--strategy high requires --t-high"))?,
        },
        StrategyArg::Low => Strategy::Low {
            t_low: t_low.ok_or_else(|| usage("--strategy low requires --t-low"))?,
        },
        StrategyArg::Mixed => Strategy::Mixed {
            t_low: t_low.ok_or_else(|| usage("--strategy mixed requires --t-low"))?,
            t_high: t_high.ok_or_else(|| usage("--strategy mixed requires --t-high"))?,
        },
    };
    strategy.validate().map_err(|e| usage(e.to_string()))?;
    Ok(strategy)
}

/// One manifest entry loaded into memory: output stem, graph, features.
type LoadedEntry = (String, Graph, FeatureMatrix);

fn load_dataset(path: &Path) -> CliResult<(DatasetManifest, Vec<LoadedEntry>)> {
    let (manifest, base) =
        load_manifest(path).map_err(|e| data(format!("{}: {e}", path.display())))?;
    let mut stems = std::collections::BTreeSet::new();
    let mut loaded = Vec::with_capacity(manifest.graphs.len());
    for entry in &manifest.graphs {
        let name = entry_stem(entry);
        if !stems.insert(name.clone()) {
            return Err(data(format!(
                "{}: duplicate graph stem `{name}`; per-graph output names would collide",
                path.display()
            )));
        }
        let (g, feats) = load_entry(&base, entry).map_err(|e| data(format!("{name}: {e}")))?;
        loaded.push((name, g, feats));
    }
    Ok((manifest, loaded))
}

/// Curvature per entry: read `<stem>.curv` from `dir` when given,
/// otherwise compute in parallel and report the wall-clock spent.
fn dataset_curvatures(
    dataset_name: &str,
    entries: &[LoadedEntry],
    curvature_dir: Option<&Path>,
    threads: Option<usize>,
) -> CliResult<Vec<EdgeCurvature>> {
    match curvature_dir {
        Some(dir) => entries
            .iter()
            .map(|(name, g, _)| read_curvature_file(&dir.join(format!("{name}.curv")), g))
            .collect(),
        None => {
            let started = Instant::now();
            let curvs = with_pool(threads, || {
                entries
                    .par_iter()
                    .map(|(_, g, _)| bfc_all(g))
                    .collect::<Vec<_>>()
            })?;
            println!(
                "dataset={dataset_name} stage=pre seconds={:.6}",
                started.elapsed().as_secs_f64()
            );
            Ok(curvs)
        }
    }
}

// ---- curvature ----

fn cmd_curvature(args: CurvatureArgs) -> CliResult<()> {
    if let Some(path) = &args.input.graph {
        let g = read_graph_file(path)?;
        let started = Instant::now();
        let curv = bfc_all(&g);
        let seconds = started.elapsed().as_secs_f64();
        write_text(&args.out, &formats::write_curvature(&curv))?;
        println!("dataset={} stage=pre seconds={seconds:.6}", stem(path));
        return Ok(());
    }
    let manifest_path = args
        .input
        .manifest
        .as_ref()
        .expect("clap enforces the input group");
    let (manifest, entries) = load_dataset(manifest_path)?;
    create_dir(&args.out)?;
    let started = Instant::now();
    let curvs = with_pool(args.threads, || {
        entries
            .par_iter()
            .map(|(_, g, _)| bfc_all(g))
            .collect::<Vec<_>>()
    })?;
    let seconds = started.elapsed().as_secs_f64();
    for ((name, _, _), curv) in entries.iter().zip(&curvs) {
        write_text(
            &args.out.join(format!("{name}.curv")),
            &formats::write_curvature(curv),
        )?;
    }
    println!("dataset={} stage=pre seconds={seconds:.6}", manifest.name);
    Ok(())
}

// ---- pool / cliquepool ----

struct PoolOutputs {
    graph_text: String,
    features_text: String,
    pools_text: String,
    report_text: String,
}

fn pool_one(
    g: &Graph,
    feats: &FeatureMatrix,
    curv: &EdgeCurvature,
    strategy: Strategy,
    agg: Aggregator,
) -> Result<PoolOutputs, curvpool_core::Error> {
    let (pooled, pooled_feats) = curvpool_precomputed(g, feats, curv, strategy, agg)?;
    let curv_after = bfc_all(&pooled.graph);
    let report = pooling_report(g, curv, &pooled.graph, &curv_after, &pooled.origin)?;
    Ok(PoolOutputs {
        graph_text: formats::write_edge_list(&pooled.graph),
        features_text: formats::write_features(&pooled_feats),
        pools_text: formats::write_pools(&pooled.origin),
        report_text: to_json_pretty(&PoolingReportJson::from(&report)),
    })
}

fn clique_pool_one(
    g: &Graph,
    feats: &FeatureMatrix,
    agg: Aggregator,
) -> Result<PoolOutputs, curvpool_core::Error> {
    let (pooled, pooled_feats) = clique_pool(g, feats, agg)?;
    let curv_before = bfc_all(g);
    let curv_after = bfc_all(&pooled.graph);
    let report = pooling_report(g, &curv_before, &pooled.graph, &curv_after, &pooled.origin)?;
    Ok(PoolOutputs {
        graph_text: formats::write_edge_list(&pooled.graph),
        features_text: formats::write_features(&pooled_feats),
        pools_text: formats::write_pools(&pooled.origin),
        report_text: to_json_pretty(&PoolingReportJson::from(&report)),
    })
}

fn write_pool_outputs(dir: &Path, prefix: Option<&str>, out: &PoolOutputs) -> CliResult<()> {
    let name = |base: &str| match prefix {
        Some(p) => format!("{p}.{base}"),
        None => base.to_string(),
    };
    write_text(&dir.join(name("pooled.graph")), &out.graph_text)?;
    write_text(&dir.join(name("pooled.features")), &out.features_text)?;
    write_text(&dir.join(name("pools.json")), &out.pools_text)?;
    write_text(&dir.join(name("report.json")), &out.report_text)?;
    Ok(())
}

fn cmd_pool(args: PoolArgs) -> CliResult<()> {
    let strategy = build_strategy(args.strategy, args.t_low, args.t_high)?;
    let agg: Aggregator = args.agg.into();

    if let Some(path) = &args.input.graph {
        let g = read_graph_file(path)?;
        let feats = single_graph_features(&g, args.features.as_deref())?;
        let name = stem(path);
        let curv = match &args.curvature {
            Some(cpath) => read_curvature_file(cpath, &g)?,
            None => {
                let started = Instant::now();
                let curv = bfc_all(&g);
                println!(
                    "dataset={name} stage=pre seconds={:.6}",
                    started.elapsed().as_secs_f64()
                );
                curv
            }
        };
        let started = Instant::now();
        let outputs =
            pool_one(&g, &feats, &curv, strategy, agg).map_err(|e| data(e.to_string()))?;
        let seconds = started.elapsed().as_secs_f64();
        create_dir(&args.out)?;
        write_pool_outputs(&args.out, None, &outputs)?;
        println!("dataset={name} stage=pool seconds={seconds:.6}");
        return Ok(());
    }

    if args.features.is_some() {
        return Err(usage(
            "--features applies to --graph runs; manifests name feature sources per entry",
        ));
    }
    let manifest_path = args
        .input
        .manifest
        .as_ref()
        .expect("clap enforces the input group");
    let (manifest, entries) = load_dataset(manifest_path)?;
    let curvs = dataset_curvatures(
        &manifest.name,
        &entries,
        args.curvature.as_deref(),
        args.threads,
    )?;

    let started = Instant::now();
    let results: Vec<PoolOutputs> = with_pool(args.threads, || {
        entries
            .par_iter()
            .zip(&curvs)
            .map(|((name, g, feats), curv)| {
                pool_one(g, feats, curv, strategy, agg).map_err(|e| data(format!("{name}: {e}")))
            })
            .collect::<CliResult<Vec<_>>>()
    })??;
    let seconds = started.elapsed().as_secs_f64();

    create_dir(&args.out)?;
    let mut pooled_entries = Vec::with_capacity(entries.len());
    for (((name, _, _), outputs), entry) in entries.iter().zip(&results).zip(&manifest.graphs) {
        write_pool_outputs(&args.out, Some(name), outputs)?;
        pooled_entries.push(ManifestEntry {
            graph: format!("{name}.pooled.graph"),
            features: format!("{name}.pooled.features"),
            label: entry.label,
        });
    }
    let pooled_manifest = DatasetManifest {
        name: format!("{}-pooled", manifest.name),
        graphs: pooled_entries,
    };
    write_text(&args.out.join("manifest.json"), &pooled_manifest.to_json())?;
    println!("dataset={} stage=pool seconds={seconds:.6}", manifest.name);
    Ok(())
}

fn cmd_cliquepool(args: CliquePoolArgs) -> CliResult<()> {
    let agg: Aggregator = args.agg.into();

    if let Some(path) = &args.input.graph {
        let g = read_graph_file(path)?;
        let feats = single_graph_features(&g, args.features.as_deref())?;
        let started = Instant::now();
        let outputs = clique_pool_one(&g, &feats, agg).map_err(|e| data(e.to_string()))?;
        let seconds = started.elapsed().as_secs_f64();
        create_dir(&args.out)?;
        write_pool_outputs(&args.out, None, &outputs)?;
        println!("dataset={} stage=pool seconds={seconds:.6}", stem(path));
        return Ok(());
    }

    if args.features.is_some() {
        return Err(usage(
            "--features applies to --graph runs; manifests name feature sources per entry",
        ));
    }
    let manifest_path = args
        .input
        .manifest
        .as_ref()
        .expect("clap enforces the input group");
    let (manifest, entries) = load_dataset(manifest_path)?;
    let started = Instant::now();
    let results: Vec<PoolOutputs> = with_pool(args.threads, || {
        entries
            .par_iter()
            .map(|(name, g, feats)| {
                clique_pool_one(g, feats, agg).map_err(|e| data(format!("{name}: {e}")))
            })
            .collect::<CliResult<Vec<_>>>()
    })??;
    let seconds = started.elapsed().as_secs_f64();

    create_dir(&args.out)?;
    let mut pooled_entries = Vec::with_capacity(entries.len());
    for (((name, _, _), outputs), entry) in entries.iter().zip(&results).zip(&manifest.graphs) {
        write_pool_outputs(&args.out, Some(name), outputs)?;
        pooled_entries.push(ManifestEntry {
            graph: format!("{name}.pooled.graph"),
            features: format!("{name}.pooled.features"),
            label: entry.label,
        });
    }
    let pooled_manifest = DatasetManifest {
        name: format!("{}-cliquepool", manifest.name),
        graphs: pooled_entries,
    };
    write_text(&args.out.join("manifest.json"), &pooled_manifest.to_json())?;
    println!("dataset={} stage=pool seconds={seconds:.6}", manifest.name);
    Ok(())
}

// ---- generate ----

fn cmd_generate(args: GenerateArgs) -> CliResult<()> {
    let cliques_alt = args.cliques_alt.unwrap_or(args.cliques + 1);
    let clique_size_alt = args.clique_size_alt.unwrap_or(args.clique_size);
    for (flag, l, k) in [
        ("--cliques/--clique-size", args.cliques, args.clique_size),
        (
            "--cliques-alt/--clique-size-alt",
            cliques_alt,
            clique_size_alt,
        ),
    ] {
        if l < 2 {
            return Err(usage(format!(
                "{flag}: caveman needs at least 2 cliques, got {l}"
            )));
        }
        if k < 3 {
            return Err(usage(format!(
                "{flag}: caveman cliques need at least 3 nodes, got {k}"
            )));
        }
    }

    create_dir(&args.out)?;
    let mut entries = Vec::with_capacity(args.count);
    for idx in 0..args.count {
        let label = (idx % 2) as u64;
        let (l, k) = if label == 0 {
            (args.cliques, args.clique_size)
        } else {
            (cliques_alt, clique_size_alt)
        };
        let spec = CavemanSpec {
            num_cliques: l,
            clique_size: k,
            seed: args.seed.wrapping_add(idx as u64),
        };
        let g = caveman(&spec).map_err(|e| usage(e.to_string()))?;
        let file = format!("g{idx:04}.graph");
        write_text(&args.out.join(&file), &formats::write_edge_list(&g))?;
        entries.push(ManifestEntry {
            graph: file,
            features: DEGREE_FEATURES.into(),
            label,
        });
    }
    let manifest = DatasetManifest {
        name: args.name,
        graphs: entries,
    };
    write_text(&args.out.join("manifest.json"), &manifest.to_json())?;
    println!(
        "generated {} graphs into {}",
        args.count,
        args.out.display()
    );
    Ok(())
}

// ---- stats ----

fn float(v: f64) -> String {
    format!("{v}")
}

fn cmd_stats(args: StatsArgs) -> CliResult<()> {
    // (name, curvature) per graph
    let (dataset_name, per_graph_curv): (String, Vec<(String, EdgeCurvature)>) =
        if let Some(path) = &args.input.graph {
            let g = read_graph_file(path)?;
            let name = stem(path);
            let curv = match &args.curvature {
                Some(cpath) => read_curvature_file(cpath, &g)?,
                None => bfc_all(&g),
            };
            (name.clone(), vec![(name, curv)])
        } else {
            let manifest_path = args
                .input
                .manifest
                .as_ref()
                .expect("clap enforces the input group");
            let (manifest, entries) = load_dataset(manifest_path)?;
            let curvs = match &args.curvature {
                Some(dir) => entries
                    .iter()
                    .map(|(name, g, _)| read_curvature_file(&dir.join(format!("{name}.curv")), g))
                    .collect::<CliResult<Vec<_>>>()?,
                None => with_pool(args.threads, || {
                    entries
                        .par_iter()
                        .map(|(_, g, _)| bfc_all(g))
                        .collect::<Vec<_>>()
                })?,
            };
            let named = entries
                .iter()
                .zip(curvs)
                .map(|((name, _, _), curv)| (name.clone(), curv))
                .collect();
            (manifest.name, named)
        };

    let mut rows = Vec::with_capacity(per_graph_curv.len());
    let mut all_values = Vec::new();
    for (name, curv) in &per_graph_curv {
        let values: Vec<f64> = curv.values().collect();
        if values.is_empty() {
            println!("graph={name} edges=0");
            rows.push(GraphStats {
                name: name.clone(),
                edges: 0,
                min: None,
                max: None,
                mean: None,
                median: None,
            });
        } else {
            let h = histogram(&values, 1).map_err(|e| data(e.to_string()))?;
            println!(
                "graph={name} edges={} min={} max={} mean={} median={}",
                values.len(),
                float(h.min),
                float(h.max),
                float(h.mean),
                float(h.median)
            );
            rows.push(GraphStats {
                name: name.clone(),
                edges: values.len(),
                min: Some(h.min),
                max: Some(h.max),
                mean: Some(h.mean),
                median: Some(h.median),
            });
        }
        all_values.extend(values);
    }

    if all_values.is_empty() {
        return Err(data(
            "no edges anywhere in the input; curvature statistics are undefined",
        ));
    }
    let hist = histogram(&all_values, args.bins).map_err(|e| usage(e.to_string()))?;
    let threshold = recommend_threshold(&all_values).map_err(|e| data(e.to_string()))?;
    println!(
        "dataset={dataset_name} edges={} min={} max={} mean={} median={}",
        all_values.len(),
        float(hist.min),
        float(hist.max),
        float(hist.mean),
        float(hist.median)
    );
    println!("recommended_threshold={}", float(threshold));
    if hist.min == hist.max {
        println!(
            "warning: all curvature values are equal; strict thresholds pool nothing or everything"
        );
    }

    if let Some(path) = &args.histogram {
        write_text(path, &histogram_text(&hist))?;
    }
    if let Some(path) = &args.out {
        let report = StatsReport {
            name: dataset_name,
            num_graphs: per_graph_curv.len(),
            num_edges: all_values.len(),
            recommended_threshold: threshold,
            histogram: HistogramJson::from(&hist),
            per_graph: rows,
        };
        write_text(path, &to_json_pretty(&report))?;
    }
    Ok(())
}

// ---- bench ----

fn cmd_bench(args: BenchArgs) -> CliResult<()> {
    let ladder: Vec<usize> = args
        .ladder
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("--ladder: bad clique count `{tok}`")))
        })
        .collect::<CliResult<Vec<_>>>()?;
    if ladder.is_empty() {
        return Err(usage("--ladder needs at least one clique count"));
    }
    if args.reps == 0 {
        return Err(usage("--reps must be positive"));
    }
    let agg: Aggregator = args.agg.into();
    let strategy = Strategy::High {
        t_high: args.t_high,
    };

    for l in ladder {
        let spec = CavemanSpec {
            num_cliques: l,
            clique_size: args.clique_size,
            seed: args.seed,
        };
        let g = caveman(&spec).map_err(|e| usage(e.to_string()))?;
        let feats = degree_features(&g);
        let name = format!("caveman_l{l}_k{}", args.clique_size);
        println!("# {name}: nodes={} edges={}", g.num_nodes(), g.num_edges());

        let mut pre = f64::INFINITY;
        let mut curv = None;
        for _ in 0..args.reps {
            let started = Instant::now();
            let c = bfc_all(&g);
            pre = pre.min(started.elapsed().as_secs_f64());
            curv = Some(c);
        }
        let curv = curv.expect("reps >= 1");

        let mut pool_time = f64::INFINITY;
        for _ in 0..args.reps {
            let started = Instant::now();
            let result = curvpool_precomputed(&g, &feats, &curv, strategy, agg)
                .map_err(|e| data(e.to_string()))?;
            pool_time = pool_time.min(started.elapsed().as_secs_f64());
            drop(result);
        }
        let mean = mean_curvature(&curv).expect("caveman graphs have edges");
        println!("# {name}: mean_curvature={}", float(mean));
        println!("dataset={name} stage=pre seconds={pre:.6}");
        println!("dataset={name} stage=pool seconds={pool_time:.6}");
    }
    Ok(())
}
