//! Runs algorithms over a directory of instance files and reports costs against
//! the exact optimum.

use std::path::{Path, PathBuf};
use std::time::Instant;

use cvd_core::{OracleBudget, Rational};
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::format::read_instance;
use crate::solve::{oracle_cost, rational_string, run_algo, Algo};

/// Extension of instance files picked up from a corpus directory.
pub const INSTANCE_EXTENSION: &str = "cvd";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub algorithm: String,
    pub cost: Option<String>,
    pub oracle_cost: Option<String>,
    /// `cost / oracle_cost`; 1 when both are zero.
    pub ratio: Option<String>,
    pub ratio_approx: Option<f64>,
    pub steps: Option<usize>,
    pub wall_ms: f64,
    pub status: String,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub algorithms: Vec<Algo>,
    /// The oracle runs only on instances with at most this many vertices; 0
    /// disables it.
    pub oracle_max_n: usize,
    pub oracle_budget: OracleBudget,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig { algorithms: vec![Algo::Lr94, Algo::Naive3], oracle_max_n: 16, oracle_budget: OracleBudget::default() }
    }
}

/// Instance files of `dir`, sorted by file name.
pub fn corpus_files(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == INSTANCE_EXTENSION))
        .collect();
    files.sort();
    Ok(files)
}

fn ratio(cost: &Rational, opt: &Rational) -> Rational {
    if opt.is_zero() {
        Rational::one()
    } else {
        cost / opt
    }
}

fn bench_instance(path: &Path, config: &BenchConfig) -> Vec<BenchRow> {
    let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    let wg = match read_instance(path) {
        Ok(wg) => wg,
        Err(e) => {
            return vec![BenchRow {
                instance: id,
                n: None,
                m: None,
                algorithm: String::new(),
                cost: None,
                oracle_cost: None,
                ratio: None,
                ratio_approx: None,
                steps: None,
                wall_ms: 0.0,
                status: format!("error: {e}"),
            }]
        }
    };
    let (n, m) = (wg.graph().vertex_count(), wg.graph().edge_count());
    let use_oracle = config.oracle_max_n > 0 && n <= config.oracle_max_n;
    let mut cluster_opt: Option<Option<Rational>> = None;
    let mut subgraph_opt: Option<Option<Rational>> = None;

    config
        .algorithms
        .iter()
        .map(|&algo| {
            let start = Instant::now();
            let outcome = run_algo(algo, &wg, &config.oracle_budget);
            let wall_ms = start.elapsed().as_secs_f64() * 1e3;
            let mut row = BenchRow {
                instance: id.clone(),
                n: Some(n),
                m: Some(m),
                algorithm: algo.name().to_string(),
                cost: None,
                oracle_cost: None,
                ratio: None,
                ratio_approx: None,
                steps: None,
                wall_ms,
                status: "ok".into(),
            };
            let outcome = match outcome {
                Ok(o) => o,
                Err(e) => {
                    row.status = format!("error: {e}");
                    return row;
                }
            };
            let cost = outcome.solution.cost(&wg);
            row.cost = Some(rational_string(&cost));
            row.steps = outcome.trace.as_ref().map(|t| t.len());
            if use_oracle {
                let slot = if algo.hits_subgraphs() { &mut subgraph_opt } else { &mut cluster_opt };
                let opt = slot.get_or_insert_with(|| oracle_cost(algo, &wg, &config.oracle_budget).ok());
                if let Some(opt) = opt {
                    let r = ratio(&cost, opt);
                    row.oracle_cost = Some(rational_string(opt));
                    row.ratio_approx = r.to_f64();
                    row.ratio = Some(rational_string(&r));
                }
            }
            row
        })
        .collect()
}

/// Benchmarks every instance file in `dir`. Instances run in parallel; rows
/// come out sorted by instance id, then in the order of `config.algorithms`.
pub fn run_bench(dir: &Path, config: &BenchConfig) -> std::io::Result<BenchReport> {
    let files = corpus_files(dir)?;
    let per_file: Vec<Vec<BenchRow>> = files.par_iter().map(|p| bench_instance(p, config)).collect();
    let mut rows: Vec<BenchRow> = per_file.into_iter().flatten().collect();
    rows.sort_by(|a, b| a.instance.cmp(&b.instance));
    Ok(BenchReport { rows })
}

impl BenchReport {
    pub fn to_csv(&self) -> anyhow::Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row)?;
        }
        if self.rows.is_empty() {
            w.write_record([
                "instance", "n", "m", "algorithm", "cost", "oracle_cost", "ratio", "ratio_approx", "steps", "wall_ms",
                "status",
            ])?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn errors(&self) -> usize {
        self.rows.iter().filter(|r| r.status != "ok").count()
    }
}
