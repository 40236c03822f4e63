//! `monolip`: file-based front end for the monolip library.
//!
//! Exit status is 0 on success, 1 when the answer is negative (not radial,
//! no extension, failed certificate, oracle disagreement) and 2 on usage,
//! input or validation errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use monolip::extension::{extend, ExtensionOutcome, ExtensionPolicy, PointOrder, Selector};
use monolip::generators::{random_function, random_instance, GeneratorSpec, TreeMetric};
use monolip::io::{point_table, read_function, read_instance, read_json, to_json, values_table, write_text, FileError, InstanceFile};
use monolip::oracle::oracle_solve;
use monolip::radiality::{check_radial_convexity, check_radiality};
use monolip::representation::{normalize_family, representing_family, strict_monotone_map_weighted, MemberTag, Weighting};
use monolip::uniform::extend_uniform;
use monolip::{Context, Error, MetricPoset};

#[derive(Debug, Parser)]
#[command(name = "monolip", version, about = "Order-preserving Lipschitz extensions on finite metric posets")]
struct Cli {
    /// Slack allowed in every non-strict inequality.
    #[arg(long, global = true, default_value_t = monolip::DEFAULT_EPSILON)]
    epsilon: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file (a directory for `remetrize`); stdout when absent.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide radiality of an instance; exits 1 when it is not radial.
    Check {
        instance: PathBuf,
        /// Only check radial convexity.
        #[arg(long)]
        convexity_only: bool,
    },
    /// Extend a partial function to every point; exits 1 when no extension exists.
    Extend {
        instance: PathBuf,
        function: PathBuf,
        #[command(flatten)]
        policy: PolicyArgs,
        /// Compare against the difference-constraint solver; exits 1 on disagreement.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Build the family of increasing 1-Lipschitz functions representing the order.
    Represent {
        instance: PathBuf,
        /// Output one strictly increasing map instead of the family.
        #[arg(long)]
        strict: bool,
        /// Shift every member to vanish at this point.
        #[arg(long)]
        normalize: Option<usize>,
        #[arg(long, value_enum, default_value_t = WeightingArg::Uniform)]
        weighting: WeightingArg,
    },
    /// Extend a bounded increasing function through a concave remetrization.
    Remetrize {
        instance: PathBuf,
        function: PathBuf,
        #[command(flatten)]
        policy: PolicyArgs,
    },
    /// Write a generated instance.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
struct PolicyArgs {
    #[arg(long, value_enum, default_value_t = SelectorArg::Min)]
    policy: SelectorArg,
    /// `ascending`, `descending`, or a comma-separated permutation of all points.
    #[arg(long, default_value = "ascending")]
    order: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SelectorArg {
    Min,
    Max,
    Mid,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum WeightingArg {
    Uniform,
    Geometric,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write a random valid partial function to this file.
    #[arg(long)]
    function: Option<PathBuf>,
    /// Lipschitz budget of the random function.
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    /// Number of coordinates of the random function.
    #[arg(long, default_value_t = 1)]
    width: usize,
    #[command(subcommand)]
    kind: GeneratorArg,
}

#[derive(Debug, Subcommand)]
enum GeneratorArg {
    /// The four-point family with parameters a and b.
    Example1 {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
    },
    /// A rooted tree under the ancestor order.
    Example2 {
        /// Edges as `u-v`, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = parse_edge)]
        edges: Vec<(usize, usize)>,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Vertex count; defaults to one more than the largest endpoint.
        #[arg(long)]
        vertices: Option<usize>,
        /// Use the path-length metric instead of the truncated one.
        #[arg(long)]
        path_length: bool,
    },
    /// Disjoint sum of two real losets.
    Example3 {
        #[arg(long, value_delimiter = ',', required = true)]
        left: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        right: Vec<f64>,
        #[arg(long)]
        theta: Option<f64>,
    },
    /// Samples of the unit interval below an antichain.
    Example4 {
        #[arg(long, value_delimiter = ',', required = true)]
        samples: Vec<f64>,
        #[arg(long, default_value_t = 0)]
        antichain: usize,
    },
    /// A random order under the discrete metric.
    RandomDiscrete {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
    /// Random points of the plane, coordinatewise order.
    RandomEuclidean {
        #[arg(long)]
        n: usize,
    },
    /// Random reals in their natural order.
    RandomLoset {
        #[arg(long)]
        n: usize,
    },
    /// Read the generator description from a JSON file.
    Spec { path: PathBuf },
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (u, v) = s.split_once('-').ok_or_else(|| format!("edge `{s}` is not of the form u-v"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("edge `{s}`: {e}"));
    Ok((parse(u)?, parse(v)?))
}

#[derive(Debug, Error)]
enum Failure {
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl PolicyArgs {
    fn into_policy(self) -> Result<ExtensionPolicy, Failure> {
        let selector = match self.policy {
            SelectorArg::Min => Selector::Min,
            SelectorArg::Max => Selector::Max,
            SelectorArg::Mid => Selector::Mid,
        };
        let point_order = match self.order.as_str() {
            "ascending" => PointOrder::Ascending,
            "descending" => PointOrder::Descending,
            list => PointOrder::Custom(
                list.split(',')
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|e| Failure::Usage(format!("--order `{list}`: {e}")))?,
            ),
        };
        Ok(ExtensionPolicy::new(selector).with_order(point_order))
    }
}

struct Runner {
    ctx: Context,
    format: Format,
    output: Option<PathBuf>,
}

impl Runner {
    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.output {
            Some(path) => write_text(path, text)?,
            None => print!("{text}"),
        }
        Ok(())
    }

    fn emit_json<T: Serialize>(&self, value: &T) -> Result<(), Failure> {
        self.emit(&to_json(value))
    }

    fn check(&self, instance: &Path, convexity_only: bool) -> Result<bool, Failure> {
        let poset = read_instance(instance, &self.ctx)?;
        let (verdict, report) = if convexity_only {
            let (holds, violations) = check_radial_convexity(&poset, &self.ctx);
            (holds, serde_json::json!({ "radially_convex": holds, "violations": violations }))
        } else {
            let report = check_radiality(&poset, &self.ctx);
            (report.radial, serde_json::to_value(&report).expect("reports serialize"))
        };
        match self.format {
            Format::Json => self.emit_json(&report)?,
            Format::Tsv => {
                let mut out = String::new();
                for key in ["radially_convex", "d1", "d2", "radial"] {
                    if let Some(v) = report.get(key) {
                        out.push_str(&format!("{key}\t{v}\n"));
                    }
                }
                out.push_str("\nkind\tx\ty\tz\tlhs\trhs\n");
                for w in report["violations"].as_array().into_iter().flatten() {
                    let t = &w["triple"];
                    out.push_str(&format!(
                        "{}\t{}\t{}\t{}\t{}\t{}\n",
                        w["kind"].as_str().unwrap_or_default(),
                        t[0],
                        t[1],
                        t[2],
                        w["lhs"],
                        w["rhs"]
                    ));
                }
                self.emit(&out)?;
            }
        }
        Ok(verdict)
    }

    fn emit_outcome(&self, poset: &MetricPoset, outcome: &ExtensionOutcome) -> Result<(), Failure> {
        match self.format {
            Format::Json => self.emit_json(outcome),
            Format::Tsv => self.emit(&values_table(poset, &outcome.values)),
        }
    }

    fn extend(&self, instance: &Path, function: &Path, policy: ExtensionPolicy, oracle_check: bool) -> Result<bool, Failure> {
        let poset = read_instance(instance, &self.ctx)?;
        let f = read_function(function)?;
        let outcome = extend(&poset, &f, &policy, &self.ctx)?;
        self.emit_outcome(&poset, &outcome)?;
        if oracle_check {
            let solution = oracle_solve(&poset, &f, &self.ctx)?;
            if let Some(problem) = oracle_disagreement(&outcome, &solution, &policy, self.ctx.epsilon) {
                eprintln!("oracle disagreement: {problem}");
                return Ok(false);
            }
        }
        if !outcome.is_feasible() {
            eprintln!("no order-preserving {}-Lipschitz extension exists", f.k());
        }
        Ok(outcome.is_feasible())
    }

    fn represent(&self, instance: &Path, strict: bool, normalize: Option<usize>, weighting: WeightingArg) -> Result<(), Failure> {
        let poset = read_instance(instance, &self.ctx)?;
        if strict {
            let weighting = match weighting {
                WeightingArg::Uniform => Weighting::Uniform,
                WeightingArg::Geometric => Weighting::Geometric,
            };
            let map = strict_monotone_map_weighted(&poset, weighting, &self.ctx)?;
            return match self.format {
                Format::Json => self.emit_json(&map),
                Format::Tsv => self.emit(&point_table(&poset, &["G".into()], &[map.values])),
            };
        }
        let mut family = representing_family(&poset, &self.ctx)?;
        if let Some(base) = normalize {
            family = normalize_family(&poset, &family, base)?;
        }
        match self.format {
            Format::Json => self.emit_json(&family),
            Format::Tsv => {
                let headers: Vec<String> = family
                    .tags
                    .iter()
                    .map(|t| match t {
                        MemberTag::Pair(x, y) => format!("F[{x},{y}]"),
                        MemberTag::Derived => "derived".into(),
                    })
                    .collect();
                self.emit(&point_table(&poset, &headers, &family.members))
            }
        }
    }

    fn remetrize(&self, instance: &Path, function: &Path, policy: ExtensionPolicy) -> Result<bool, Failure> {
        let poset = read_instance(instance, &self.ctx)?;
        let f = read_function(function)?;
        let run = extend_uniform(&poset, &f, &policy, &self.ctx)?;
        let remetrized = run.remetrized.as_ref().map(InstanceFile::from_poset);
        match &self.output {
            Some(dir) => {
                std::fs::create_dir_all(dir).map_err(|source| FileError::Io {
                    path: dir.clone(),
                    source,
                })?;
                write_text(&dir.join("omega.json"), &to_json(&run.modulus))?;
                write_text(&dir.join("phi.json"), &to_json(&run.majorant))?;
                write_text(&dir.join("remetrized.json"), &to_json(&remetrized))?;
                match self.format {
                    Format::Json => write_text(&dir.join("extension.json"), &to_json(&run.outcome))?,
                    Format::Tsv => write_text(&dir.join("extension.tsv"), &values_table(&poset, &run.outcome.values))?,
                }
                write_text(&dir.join("certificate.json"), &to_json(&run.certificate))?;
            }
            None => match self.format {
                Format::Json => self.emit_json(&serde_json::json!({
                    "omega": run.modulus,
                    "phi": run.majorant,
                    "remetrized": remetrized,
                    "extension": run.outcome,
                    "certificate": run.certificate,
                }))?,
                Format::Tsv => self.emit(&values_table(&poset, &run.outcome.values))?,
            },
        }
        if !run.certificate.holds {
            eprintln!("modulus certificate fails by {}", run.certificate.max_violation);
        }
        Ok(run.outcome.is_feasible() && run.certificate.holds)
    }

    fn generate(&self, args: GenerateArgs) -> Result<(), Failure> {
        let spec = match args.kind {
            GeneratorArg::Example1 { a, b } => GeneratorSpec::Example1 { a, b },
            GeneratorArg::Example2 {
                edges,
                root,
                vertices,
                path_length,
            } => GeneratorSpec::Example2Tree {
                vertices: vertices.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(1)),
                edges,
                root,
                metric: if path_length {
                    TreeMetric::PathLength
                } else {
                    TreeMetric::Truncated
                },
            },
            GeneratorArg::Example3 { left, right, theta } => GeneratorSpec::Example3Sum { a: left, b: right, theta },
            GeneratorArg::Example4 { samples, antichain } => GeneratorSpec::Example4Mixed { samples, antichain },
            GeneratorArg::RandomDiscrete { n, density } => GeneratorSpec::RandomDiscrete { n, density },
            GeneratorArg::RandomEuclidean { n } => GeneratorSpec::RandomEuclidean { n },
            GeneratorArg::RandomLoset { n } => GeneratorSpec::RandomLoset { n },
            GeneratorArg::Spec { path } => read_json(&path)?,
        };
        let poset = random_instance(&spec, args.seed, &self.ctx)?;
        if let Some(path) = &args.function {
            if poset.is_empty() {
                return Err(Failure::Usage("cannot draw a function on an empty instance".into()));
            }
            let f = random_function(&poset, args.k, args.width.max(1), args.seed)?;
            write_text(path, &to_json(&f))?;
        }
        match self.format {
            Format::Json => self.emit_json(&InstanceFile::from_poset(&poset)),
            Format::Tsv => {
                let headers: Vec<String> = (0..poset.len()).map(|j| poset.label(j)).collect();
                let columns: Vec<Vec<f64>> = (0..poset.len()).map(|j| (0..poset.len()).map(|i| poset.d(i, j)).collect()).collect();
                self.emit(&point_table(&poset, &headers, &columns))
            }
        }
    }
}

/// Describes the first way the outcome departs from the extremal solutions.
fn oracle_disagreement(
    outcome: &ExtensionOutcome,
    solution: &monolip::oracle::OracleSolution,
    policy: &ExtensionPolicy,
    eps: f64,
) -> Option<String> {
    if outcome.is_feasible() != solution.feasible {
        return Some(format!(
            "extension feasible = {}, solver feasible = {}",
            outcome.is_feasible(),
            solution.feasible
        ));
    }
    if !solution.feasible {
        return None;
    }
    for (x, row) in outcome.values.iter().enumerate() {
        for (t, &v) in row.iter().enumerate() {
            let (lo, hi) = (solution.fmin[x][t], solution.fmax[x][t]);
            let off = match policy.selector {
                Selector::Min => (v - lo).abs() > eps,
                Selector::Max => (v - hi).abs() > eps,
                Selector::Mid => v < lo - eps || v > hi + eps,
            };
            if off {
                return Some(format!("point {x} coordinate {t}: value {v}, solver range [{lo}, {hi}]"));
            }
        }
    }
    None
}

fn run(cli: Cli) -> Result<bool, Failure> {
    if !(cli.epsilon > 0.0 && cli.epsilon.is_finite()) {
        return Err(Failure::Usage(format!("--epsilon must be positive, got {}", cli.epsilon)));
    }
    let runner = Runner {
        ctx: Context::with_epsilon(cli.epsilon),
        format: cli.format,
        output: cli.output,
    };
    match cli.command {
        Command::Check {
            instance,
            convexity_only,
        } => runner.check(&instance, convexity_only),
        Command::Extend {
            instance,
            function,
            policy,
            oracle_check,
        } => runner.extend(&instance, &function, policy.into_policy()?, oracle_check),
        Command::Represent {
            instance,
            strict,
            normalize,
            weighting,
        } => runner.represent(&instance, strict, normalize, weighting).map(|()| true),
        Command::Remetrize {
            instance,
            function,
            policy,
        } => runner.remetrize(&instance, &function, policy.into_policy()?),
        Command::Generate(args) => runner.generate(args).map(|()| true),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Core(Error::NotRadial)) => {
            eprintln!("error: {}", Error::NotRadial);
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
