//! Command-line surface. Each subcommand returns a [`RunReport`]; `main`
//! prints it as one JSON line on stdout and a short summary on stderr.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use xclust_core::objectives::{self, representatives};
use xclust_core::oracle::{self, Limits};
use xclust_core::reductions::{self, GraphFamily};
use xclust_core::{fit, Dataset, Metric, Objective};

use crate::report::RunReport;
use crate::{csv_io, graph_io, tree_json, Error, Result};

#[derive(Debug, Parser)]
#[command(name = "xclust", version, about = "Explainable clustering with axis-aligned threshold trees")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Dataset CSV file.
    #[arg(long)]
    pub input: PathBuf,
    /// Treat the first CSV row as feature names.
    #[arg(long)]
    pub header: bool,
}

#[derive(Debug, Args)]
pub struct OracleLimits {
    #[arg(long, default_value_t = 12)]
    pub max_points: usize,
    #[arg(long, default_value_t = 4)]
    pub max_k: usize,
    #[arg(long, default_value_t = 3)]
    pub max_dim: usize,
}

impl From<&OracleLimits> for Limits {
    fn from(l: &OracleLimits) -> Self {
        Limits {
            max_points: l.max_points,
            max_k: l.max_k,
            max_dim: l.max_dim,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ObjectiveName {
    Kmeans,
    Kmedians,
    Kcenters,
    Spacing,
}

impl ObjectiveName {
    fn with_metric(self, metric: Metric) -> Objective {
        match self {
            ObjectiveName::Kmeans => Objective::KMeans,
            ObjectiveName::Kmedians => Objective::KMedians,
            ObjectiveName::Kcenters => Objective::KCenters,
            ObjectiveName::Spacing => Objective::Spacing(metric),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyName {
    Path,
    Cycle,
    Star,
    Grid,
    /// Random triangle-free graph, degree bounded by `--max-degree`.
    RandomTf,
}

fn parse_metric(s: &str) -> std::result::Result<Metric, String> {
    s.parse()
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit a maximum-spacing threshold tree with k leaves.
    Fit {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
        /// Write the tree JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a tree's induced partition under an objective.
    Eval {
        #[arg(long)]
        tree: PathBuf,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        objective: ObjectiveName,
        /// Distance used by the spacing objective.
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
    },
    /// Exhaustively search for the optimal explainable clustering.
    Oracle {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        objective: ObjectiveName,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
        #[command(flatten)]
        limits: OracleLimits,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Best spacing of any (not necessarily explainable) partition.
    BaselineSpacing {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
    },
    /// Exact minimum vertex cover of a graph.
    Vc {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 30)]
        max_vertices: usize,
    },
    /// Embed a graph's edges as 0/1 points and write them as CSV.
    Reduce {
        #[arg(long)]
        graph: PathBuf,
        /// Write the CSV here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the chain tree of a vertex cover on the embedded graph.
    CoverTree {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated increasing vertex ids; defaults to an exact minimum cover.
        #[arg(long, value_delimiter = ',')]
        cover: Option<Vec<usize>>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Ratio between the optimal explainable and the optimal unrestricted cost.
    Price {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        objective: ObjectiveName,
        #[arg(long, default_value = "l2", value_parser = parse_metric)]
        metric: Metric,
        #[command(flatten)]
        limits: OracleLimits,
    },
    /// Generate a triangle-free graph.
    GenGraph {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[arg(long, default_value_t = 0)]
        vertices: usize,
        #[arg(long, default_value_t = 0)]
        edges: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        arms: usize,
        #[arg(long, default_value_t = 0)]
        rows: usize,
        #[arg(long, default_value_t = 0)]
        cols: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn load(input: &Input) -> Result<Dataset> {
    csv_io::load_dataset(&input.input, input.header)
}

fn shape(report: &mut RunReport, ds: &Dataset, k: Option<usize>) {
    report.n = Some(ds.len());
    report.d = Some(ds.dim());
    report.k = k;
}

fn objective_label(obj: Objective) -> String {
    obj.to_string()
}

/// Runs one command. `args` is echoed into the report.
pub fn run(cli: &Cli, args: Vec<String>) -> Result<RunReport> {
    let start = Instant::now();
    let mut report = execute(&cli.command)?;
    report.args = args;
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn execute(command: &Command) -> Result<RunReport> {
    match command {
        Command::Fit {
            input,
            k,
            metric,
            out,
        } => {
            let ds = load(input)?;
            let (tree, trace) = fit(&ds, *k, *metric)?;
            if let Some(path) = out {
                write_file(path, &tree_json::to_string(&tree))?;
            }
            let mut r = RunReport::new("fit");
            shape(&mut r, &ds, Some(*k));
            r.objective = Some(objective_label(Objective::Spacing(*metric)));
            r.cost = trace.final_spacing();
            r.tree = Some(tree_json::to_value(&tree));
            let steps: Vec<Value> = trace
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "leaf": s.leaf,
                        "dim": s.cut.dim,
                        "theta": s.cut.theta,
                        "spacing": s.spacing,
                        "candidates": s.candidates,
                    })
                })
                .collect();
            r.detail("spacings", trace.spacings());
            r.detail("steps", steps);
            Ok(r)
        }
        Command::Eval {
            tree,
            input,
            objective,
            metric,
        } => {
            let ds = load(input)?;
            let text = std::fs::read_to_string(tree).map_err(|e| Error::io(tree, e))?;
            let tree = tree_json::from_str(&text)?;
            let obj = objective.with_metric(*metric);
            let partition = tree.induced_partition(&ds)?;
            let mut r = RunReport::new("eval");
            shape(&mut r, &ds, Some(tree.num_leaves()));
            r.objective = Some(objective_label(obj));
            r.cost = Some(objectives::cost(&partition, &ds, obj)?);
            if obj.is_center_based() {
                r.detail("representatives", representatives(&partition, &ds, obj)?);
            }
            let sizes: Vec<usize> = partition.clusters().iter().map(Vec::len).collect();
            r.detail("cluster_sizes", sizes);
            r.detail("empty_leaves", partition.empty_clusters());
            Ok(r)
        }
        Command::Oracle {
            input,
            k,
            objective,
            metric,
            limits,
            out,
        } => {
            let ds = load(input)?;
            let obj = objective.with_metric(*metric);
            let res = oracle::optimal_explainable_with(&ds, *k, obj, limits.into())?;
            if let Some(path) = out {
                write_file(path, &tree_json::to_string(&res.tree))?;
            }
            let mut r = RunReport::new("oracle");
            shape(&mut r, &ds, Some(*k));
            r.objective = Some(objective_label(obj));
            r.cost = Some(res.cost);
            r.tree = Some(tree_json::to_value(&res.tree));
            r.detail("examined", res.examined);
            Ok(r)
        }
        Command::BaselineSpacing { input, k, metric } => {
            let ds = load(input)?;
            let mut r = RunReport::new("baseline-spacing");
            shape(&mut r, &ds, Some(*k));
            r.objective = Some(objective_label(Objective::Spacing(*metric)));
            r.cost = Some(oracle::unrestricted_max_spacing(&ds, *k, *metric)?);
            Ok(r)
        }
        Command::Vc {
            graph,
            max_vertices,
        } => {
            let g = graph_io::load_graph(graph)?;
            let cover = oracle::min_vertex_cover_with(&g, *max_vertices)?;
            let mut r = RunReport::new("vc");
            r.n = Some(g.num_vertices());
            r.k = Some(cover.len());
            r.detail("edges", g.num_edges());
            r.detail("cover", cover.clone());
            r.detail("size", cover.len());
            Ok(r)
        }
        Command::Reduce { graph, out } => {
            let g = graph_io::load_graph(graph)?;
            let inst = reductions::edges_to_points(&g)?;
            let text = csv_io::dataset_to_string(&inst.dataset);
            let mut r = RunReport::new("reduce");
            shape(&mut r, &inst.dataset, None);
            match out {
                Some(path) => write_file(path, &text)?,
                None => {
                    r.detail("csv", text);
                }
            }
            Ok(r)
        }
        Command::CoverTree { graph, cover, out } => {
            let g = graph_io::load_graph(graph)?;
            let cover = match cover {
                Some(c) => c.clone(),
                None => oracle::min_vertex_cover(&g)?,
            };
            let inst = reductions::edges_to_points(&g)?;
            let tree = reductions::cover_to_tree(&inst, &cover)?;
            if let Some(path) = out {
                write_file(path, &tree_json::to_string(&tree))?;
            }
            let groups = reductions::cover_partition(&g, &cover)?;
            let mut r = RunReport::new("cover-tree");
            shape(&mut r, &inst.dataset, Some(cover.len()));
            r.objective = Some(objective_label(Objective::KMeans));
            r.tree = Some(tree_json::to_value(&tree));
            r.detail("cover", cover.clone());
            match reductions::predicted_kmeans_cost(&g, &cover) {
                Ok(p) => {
                    r.cost = Some(objectives::cost(&groups, &inst.dataset, Objective::KMeans)?);
                    r.detail("predicted_kmeans", p);
                    r.detail(
                        "kmedians",
                        objectives::cost(&groups, &inst.dataset, Objective::KMedians)?,
                    );
                }
                Err(e @ xclust_core::Error::NonMinimalCover(_)) => {
                    r.detail("note", e.to_string());
                }
                Err(e) => return Err(e.into()),
            }
            Ok(r)
        }
        Command::Price {
            input,
            k,
            objective,
            metric,
            limits,
        } => {
            let ds = load(input)?;
            let obj = objective.with_metric(*metric);
            let limits: Limits = limits.into();
            let explainable = oracle::optimal_explainable_with(&ds, *k, obj, limits)?.cost;
            let unrestricted = oracle::optimal_unrestricted(&ds, *k, obj, limits)?;
            let ratio = if obj.is_maximized() {
                unrestricted / explainable
            } else {
                explainable / unrestricted
            };
            let mut r = RunReport::new("price");
            shape(&mut r, &ds, Some(*k));
            r.objective = Some(objective_label(obj));
            r.cost = Some(ratio);
            r.detail("explainable", explainable);
            r.detail("unrestricted", unrestricted);
            Ok(r)
        }
        Command::GenGraph {
            family,
            vertices,
            edges,
            max_degree,
            arms,
            rows,
            cols,
            seed,
            out,
        } => {
            let fam = match family {
                FamilyName::Path => GraphFamily::Path {
                    vertices: *vertices,
                },
                FamilyName::Cycle => GraphFamily::Cycle {
                    vertices: *vertices,
                },
                FamilyName::Star => GraphFamily::Star { arms: *arms },
                FamilyName::Grid => GraphFamily::Grid {
                    rows: *rows,
                    cols: *cols,
                },
                FamilyName::RandomTf => GraphFamily::RandomTriangleFree {
                    vertices: *vertices,
                    edges: *edges,
                    max_degree: *max_degree,
                },
            };
            let g = reductions::generate_graph(fam, *seed)?;
            let text = graph_io::format_graph(&g);
            let mut r = RunReport::new("gen-graph");
            r.n = Some(g.num_vertices());
            r.detail("edges", g.num_edges());
            r.detail("max_degree", g.max_degree());
            r.detail("triangle_free", g.is_triangle_free());
            match out {
                Some(path) => write_file(path, &text)?,
                None => {
                    r.detail("graph", text);
                }
            }
            Ok(r)
        }
    }
}

/// One-line human summary for stderr.
pub fn summary(r: &RunReport) -> String {
    let mut s = r.command.clone();
    if let (Some(n), Some(d)) = (r.n, r.d) {
        s.push_str(&format!(" n={n} d={d}"));
    }
    if let Some(k) = r.k {
        s.push_str(&format!(" k={k}"));
    }
    if let Some(o) = &r.objective {
        s.push_str(&format!(" {o}"));
    }
    if let Some(c) = r.cost {
        s.push_str(&format!(" -> {c}"));
    }
    s
}
