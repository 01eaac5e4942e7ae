//! The `run`, `front` and `compare` subcommands.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;

use tgp::classic::{run_classic_batch, FitnessCases};
use tgp::engine::{run_batch, AlgoConfig, Variant};
use tgp::metrics::REFERENCE_FRONT_SIZE;
use tgp::problems::{ObjectivePoint, Zdt};
use tgp::rng::RandomSource;
use tgp::symbols::classic_function_set;

use crate::baseline::{methods, parse_baseline, BaselineTable, EMBEDDED_BASELINE};
use crate::summary::{Aggregate, ConfigEcho, RunStats, Summary};
use crate::{fmt_float, CliError};

/// Archive size used when `--archive-capacity` is not given.
pub const DEFAULT_ARCHIVE_CAPACITY: usize = 300;

/// The classic variant optimizes a fixed 20-case instance with target
/// `(v1 + v2) * v3`, generated from this seed.
pub const CLASSIC_INSTANCE_SEED: u64 = 9000;
pub const CLASSIC_INSTANCE_CASES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    Csv,
    Json,
}

impl FileFormat {
    pub fn from_name(name: &str) -> Result<Self, CliError> {
        match name.to_ascii_lowercase().as_str() {
            "csv" => Ok(FileFormat::Csv),
            "json" => Ok(FileFormat::Json),
            other => Err(CliError::Usage(format!(
                "unknown format {other:?} (expected csv or json)"
            ))),
        }
    }

    fn extension(self) -> &'static str {
        match self {
            FileFormat::Csv => "csv",
            FileFormat::Json => "json",
        }
    }
}

/// A fully described experiment invocation.
#[derive(Debug, Clone)]
pub struct RunSpec {
    pub problem: Option<String>,
    pub variant: String,
    pub runs: Option<usize>,
    pub pop_size: Option<usize>,
    pub generations: Option<usize>,
    pub p_insert: Option<f64>,
    pub tournament_size: Option<usize>,
    pub archive_capacity: Option<usize>,
    pub metric_stride: Option<usize>,
    pub seed: Option<u64>,
    pub out_dir: PathBuf,
    pub format: FileFormat,
}

impl RunSpec {
    fn config(&self, variant_kind: &VariantKind) -> Result<AlgoConfig, CliError> {
        let mut cfg = AlgoConfig::default();
        if let Some(v) = self.runs {
            cfg.runs = v;
        }
        if let Some(v) = self.pop_size {
            cfg.pop_size = v;
        }
        if let Some(v) = self.generations {
            cfg.generations = v;
        }
        if let Some(v) = self.p_insert {
            cfg.p_insert = v;
        }
        if let Some(v) = self.tournament_size {
            cfg.tournament_size = v;
        }
        if let Some(v) = self.metric_stride {
            cfg.metric_stride = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        match variant_kind {
            VariantKind::Mo(_, Variant::Archive) => {
                cfg.archive_capacity =
                    Some(self.archive_capacity.unwrap_or(DEFAULT_ARCHIVE_CAPACITY));
            }
            VariantKind::Mo(_, Variant::Plain) => {
                cfg.archive_capacity = None;
            }
            VariantKind::Classic => {
                cfg.function_set = classic_function_set();
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

enum VariantKind {
    Mo(Zdt, Variant),
    Classic,
}

fn resolve_variant(spec: &RunSpec) -> Result<VariantKind, CliError> {
    match spec.variant.to_ascii_lowercase().as_str() {
        "plain" | "archive" => {
            let name = spec
                .problem
                .as_deref()
                .ok_or_else(|| CliError::Usage("missing --problem".into()))?;
            let problem = Zdt::from_name(name).ok_or_else(|| {
                CliError::Usage(format!(
                    "unknown problem {name:?} (expected zdt1|zdt2|zdt3|zdt4|zdt6)"
                ))
            })?;
            let variant = if spec.variant.eq_ignore_ascii_case("plain") {
                Variant::Plain
            } else {
                Variant::Archive
            };
            Ok(VariantKind::Mo(problem, variant))
        }
        "classic" => Ok(VariantKind::Classic),
        other => Err(CliError::Usage(format!(
            "unknown variant {other:?} (expected plain|archive|classic)"
        ))),
    }
}

/// Executes the batch described by `spec`, writes the per-run files plus
/// `summary.json` into the output directory, and returns the summary.
pub fn cmd_run(spec: &RunSpec) -> Result<Summary, CliError> {
    let kind = resolve_variant(spec)?;
    let cfg = spec.config(&kind)?;
    fs::create_dir_all(&spec.out_dir).map_err(|e| {
        CliError::Runtime(format!(
            "cannot create output directory {}: {e}",
            spec.out_dir.display()
        ))
    })?;

    let summary = match &kind {
        VariantKind::Mo(problem, variant) => run_mo(spec, &cfg, *problem, *variant)?,
        VariantKind::Classic => run_classic_demo(spec, &cfg)?,
    };

    write_file(&spec.out_dir.join("summary.json"), &summary.to_json())?;

    let agg = &summary.aggregate;
    match (agg.mean_cm, agg.mean_dm, agg.mean_q) {
        (Some(cm), Some(dm), _) => println!(
            "{} {}: {} runs, mean final cm {:.6e}, mean final dm {:.6e}",
            summary.problem, summary.variant, cfg.runs, cm, dm
        ),
        (_, _, Some(q)) => println!(
            "{} {}: {} runs, mean final q {:.6e}",
            summary.problem, summary.variant, cfg.runs, q
        ),
        _ => {}
    }
    println!("wrote {}", spec.out_dir.display());
    Ok(summary)
}

fn run_mo(
    spec: &RunSpec,
    cfg: &AlgoConfig,
    problem: Zdt,
    variant: Variant,
) -> Result<Summary, CliError> {
    let records = run_batch(problem, variant, cfg)?;

    let mut run_stats = Vec::with_capacity(records.len());
    for (i, record) in records.iter().enumerate() {
        let mut points: Vec<ObjectivePoint> = record.front.iter().map(|m| m.objectives).collect();
        points.sort_by(|a, b| a.f1.total_cmp(&b.f1).then(a.f2.total_cmp(&b.f2)));
        write_front_file(
            &spec
                .out_dir
                .join(format!("run_{i}_front.{}", spec.format.extension())),
            &points,
            spec.format,
        )?;
        write_metric_file(
            &spec
                .out_dir
                .join(format!("run_{i}_metrics.{}", spec.format.extension())),
            record,
            spec.format,
        )?;
        let last = record.final_sample();
        run_stats.push(RunStats {
            run: i,
            seed: record.seed,
            final_cm: Some(last.cm),
            final_dm: Some(last.dm),
            final_q: None,
            front_size: Some(record.front.len()),
            evaluations: record.evaluations,
        });
    }

    let n = records.len() as f64;
    let mean_cm = run_stats.iter().filter_map(|r| r.final_cm).sum::<f64>() / n;
    let mean_dm = run_stats.iter().filter_map(|r| r.final_dm).sum::<f64>() / n;
    let mean_front = run_stats.iter().filter_map(|r| r.front_size).sum::<usize>() as f64 / n;
    let mean_wall = records.iter().map(|r| r.wall_seconds).sum::<f64>() / n;
    eprintln!("mean wall-clock seconds per run: {mean_wall:.3}");

    Ok(Summary {
        problem: problem.name().to_string(),
        variant: variant.name().to_string(),
        config: echo_config(cfg),
        runs: run_stats,
        aggregate: Aggregate {
            mean_cm: Some(mean_cm),
            mean_dm: Some(mean_dm),
            mean_q: None,
            mean_front_size: Some(mean_front),
        },
    })
}

fn run_classic_demo(spec: &RunSpec, cfg: &AlgoConfig) -> Result<Summary, CliError> {
    let mut instance_rng = RandomSource::from_seed(CLASSIC_INSTANCE_SEED);
    let cases = FitnessCases::sum_product_instance(CLASSIC_INSTANCE_CASES, &mut instance_rng);
    let records = run_classic_batch(&cases, cfg)?;

    let mut run_stats = Vec::with_capacity(records.len());
    for (i, record) in records.iter().enumerate() {
        let mut text = String::from("generation,q\n");
        for (generation, q) in &record.samples {
            text.push_str(&format!("{generation},{}\n", fmt_float(*q)));
        }
        match spec.format {
            FileFormat::Csv => {
                write_file(&spec.out_dir.join(format!("run_{i}_metrics.csv")), &text)?
            }
            FileFormat::Json => {
                #[derive(Serialize)]
                struct Row {
                    generation: u32,
                    q: f64,
                }
                let rows: Vec<Row> = record
                    .samples
                    .iter()
                    .map(|&(generation, q)| Row { generation, q })
                    .collect();
                write_json_rows(&spec.out_dir.join(format!("run_{i}_metrics.json")), &rows)?;
            }
        }
        run_stats.push(RunStats {
            run: i,
            seed: record.seed,
            final_cm: None,
            final_dm: None,
            final_q: Some(record.best_q),
            front_size: None,
            evaluations: record.evaluations,
        });
    }

    let n = records.len() as f64;
    let mean_q = run_stats.iter().filter_map(|r| r.final_q).sum::<f64>() / n;
    let mean_wall = records.iter().map(|r| r.wall_seconds).sum::<f64>() / n;
    eprintln!("mean wall-clock seconds per run: {mean_wall:.3}");

    Ok(Summary {
        problem: format!("sum-product-{CLASSIC_INSTANCE_CASES}-cases-seed-{CLASSIC_INSTANCE_SEED}"),
        variant: "classic".to_string(),
        config: echo_config(cfg),
        runs: run_stats,
        aggregate: Aggregate {
            mean_cm: None,
            mean_dm: None,
            mean_q: Some(mean_q),
            mean_front_size: None,
        },
    })
}

/// Writes the 200-point reference front of a problem.
pub fn cmd_front(
    problem_name: &str,
    out_dir: &Path,
    format: FileFormat,
) -> Result<PathBuf, CliError> {
    let problem = Zdt::from_name(problem_name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown problem {problem_name:?} (expected zdt1|zdt2|zdt3|zdt4|zdt6)"
        ))
    })?;
    fs::create_dir_all(out_dir).map_err(|e| {
        CliError::Runtime(format!(
            "cannot create output directory {}: {e}",
            out_dir.display()
        ))
    })?;
    let front = problem.true_front(REFERENCE_FRONT_SIZE);
    let path = out_dir.join(format!("front_{}.{}", problem.name(), format.extension()));
    write_front_file(&path, &front, format)?;
    println!("wrote {}", path.display());
    Ok(path)
}

/// Renders the comparison table for one or more summaries, optionally
/// writing it as CSV.
pub fn cmd_compare(
    summary_paths: &[PathBuf],
    baseline_path: Option<&Path>,
    out: Option<&Path>,
) -> Result<String, CliError> {
    if summary_paths.is_empty() {
        return Err(CliError::Usage("no summary files given".into()));
    }
    let mut rows = Vec::new();
    for path in summary_paths {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Runtime(format!("cannot read {}: {e}", path.display())))?;
        let summary: Summary = serde_json::from_str(&text).map_err(|e| {
            CliError::Runtime(format!(
                "{}:{}:{}: malformed summary: {e}",
                path.display(),
                e.line(),
                e.column()
            ))
        })?;
        rows.push(summary);
    }

    let baseline = load_baseline(baseline_path)?;

    let table = render_table(&rows, baseline.as_ref());
    if let Some(out_path) = out {
        write_file(out_path, &render_csv(&rows, baseline.as_ref()))?;
    }
    Ok(table)
}

fn load_baseline(path: Option<&Path>) -> Result<Option<BaselineTable>, CliError> {
    match path {
        None => Ok(Some(parse_baseline(
            EMBEDDED_BASELINE,
            "embedded baseline",
        )?)),
        Some(p) => match fs::read_to_string(p) {
            Ok(text) => Ok(Some(parse_baseline(&text, &p.display().to_string())?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => {
                eprintln!(
                    "baseline {} not found; printing summary without comparison flags",
                    p.display()
                );
                Ok(None)
            }
            Err(e) => Err(CliError::Runtime(format!(
                "cannot read baseline {}: {e}",
                p.display()
            ))),
        },
    }
}

fn flags_for(
    cm: f64,
    dm: f64,
    problem: &str,
    baseline: &BaselineTable,
    method_names: &[String],
) -> String {
    let mut flags = Vec::new();
    for method in method_names {
        if let Some(&(base_cm, base_dm)) = baseline.get(&(method.clone(), problem.to_string())) {
            if cm < base_cm {
                flags.push(format!("cm<{method}"));
            }
            if dm > base_dm {
                flags.push(format!("dm>{method}"));
            }
        }
    }
    flags.join(" ")
}

fn render_table(rows: &[Summary], baseline: Option<&BaselineTable>) -> String {
    let method_names = baseline.map(methods).unwrap_or_default();
    let mut out = String::new();
    let mut header = format!(
        "{:<10} {:<8} {:>12} {:>12}",
        "problem", "variant", "cm", "dm"
    );
    for m in &method_names {
        header.push_str(&format!(
            " {:>12} {:>12}",
            format!("{m}_cm"),
            format!("{m}_dm")
        ));
    }
    if baseline.is_some() {
        header.push_str("  beats");
    }
    out.push_str(&header);
    out.push('\n');

    for s in rows {
        let (cm, dm) = match (s.aggregate.mean_cm, s.aggregate.mean_dm) {
            (Some(cm), Some(dm)) => (cm, dm),
            _ => {
                out.push_str(&format!(
                    "{:<10} {:<8} {:>12} {:>12}  (no cm/dm: classic run)\n",
                    s.problem, s.variant, "-", "-"
                ));
                continue;
            }
        };
        let mut line = format!(
            "{:<10} {:<8} {:>12.6e} {:>12.6e}",
            s.problem, s.variant, cm, dm
        );
        if let Some(table) = baseline {
            for m in &method_names {
                match table.get(&(m.clone(), s.problem.clone())) {
                    Some(&(bcm, bdm)) => line.push_str(&format!(" {bcm:>12.6e} {bdm:>12.6e}")),
                    None => line.push_str(&format!(" {:>12} {:>12}", "-", "-")),
                }
            }
            line.push_str("  ");
            line.push_str(&flags_for(cm, dm, &s.problem, table, &method_names));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn render_csv(rows: &[Summary], baseline: Option<&BaselineTable>) -> String {
    let method_names = baseline.map(methods).unwrap_or_default();
    let mut out = String::from("problem,variant,cm,dm");
    for m in &method_names {
        out.push_str(&format!(",{m}_cm,{m}_dm"));
    }
    if baseline.is_some() {
        out.push_str(",beats");
    }
    out.push('\n');
    for s in rows {
        let (cm, dm) = match (s.aggregate.mean_cm, s.aggregate.mean_dm) {
            (Some(cm), Some(dm)) => (cm, dm),
            _ => continue,
        };
        out.push_str(&format!(
            "{},{},{},{}",
            s.problem,
            s.variant,
            fmt_float(cm),
            fmt_float(dm)
        ));
        if let Some(table) = baseline {
            for m in &method_names {
                match table.get(&(m.clone(), s.problem.clone())) {
                    Some(&(bcm, bdm)) => {
                        out.push_str(&format!(",{},{}", fmt_float(bcm), fmt_float(bdm)))
                    }
                    None => out.push_str(",,"),
                }
            }
            out.push(',');
            out.push_str(&flags_for(cm, dm, &s.problem, table, &method_names));
        }
        out.push('\n');
    }
    out
}

fn echo_config(cfg: &AlgoConfig) -> ConfigEcho {
    ConfigEcho {
        pop_size: cfg.pop_size,
        generations: cfg.generations,
        p_insert: cfg.p_insert,
        tournament_size: cfg.tournament_size,
        function_set: cfg
            .function_set
            .iter()
            .map(|s| s.name().to_string())
            .collect(),
        archive_capacity: cfg.archive_capacity,
        runs: cfg.runs,
        metric_stride: cfg.metric_stride,
        seed: cfg.seed,
    }
}

fn write_front_file(
    path: &Path,
    points: &[ObjectivePoint],
    format: FileFormat,
) -> Result<(), CliError> {
    match format {
        FileFormat::Csv => {
            let mut text = String::from("f1,f2\n");
            for p in points {
                text.push_str(&format!("{},{}\n", fmt_float(p.f1), fmt_float(p.f2)));
            }
            write_file(path, &text)
        }
        FileFormat::Json => {
            #[derive(Serialize)]
            struct Row {
                f1: f64,
                f2: f64,
            }
            let rows: Vec<Row> = points.iter().map(|p| Row { f1: p.f1, f2: p.f2 }).collect();
            write_json_rows(path, &rows)
        }
    }
}

fn write_metric_file(
    path: &Path,
    record: &tgp::engine::RunRecord,
    format: FileFormat,
) -> Result<(), CliError> {
    match format {
        FileFormat::Csv => {
            let mut text = String::from("generation,cm,dm\n");
            for s in &record.samples {
                text.push_str(&format!(
                    "{},{},{}\n",
                    s.generation,
                    fmt_float(s.cm),
                    fmt_float(s.dm)
                ));
            }
            write_file(path, &text)
        }
        FileFormat::Json => {
            #[derive(Serialize)]
            struct Row {
                generation: u32,
                cm: f64,
                dm: f64,
            }
            let rows: Vec<Row> = record
                .samples
                .iter()
                .map(|s| Row {
                    generation: s.generation,
                    cm: s.cm,
                    dm: s.dm,
                })
                .collect();
            write_json_rows(path, &rows)
        }
    }
}

fn write_json_rows<T: Serialize>(path: &Path, rows: &[T]) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(rows)
        .map_err(|e| CliError::Runtime(format!("cannot serialize {}: {e}", path.display())))?;
    text.push('\n');
    write_file(path, &text)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents)
        .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display())))
}
