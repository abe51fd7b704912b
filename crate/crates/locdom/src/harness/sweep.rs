//! Aggregation of theorem checks over graph streams, the specialized
//! high-volume tree sweep, and the Cartesian-product bound checks.

use std::sync::atomic::{AtomicBool, Ordering};

use serde::Serialize;

use crate::codes::CodeKind;
use crate::error::Result;
use crate::graph::Graph;
use crate::solvers::{
    independence_number_with, minimum_code_with, tree_beta_rows, tree_gamma2_rows,
    tree_prune_dld_rows, two_domination_number_with, SolverConfig, TreeScratch,
};

use super::checks::{CheckStatus, CHECK_IDS};
use super::enumerate::{decode_prufer, labeled_graph, labeled_graph_count, prufer_tree_count};
use super::{check_graph, graph_id};

#[derive(Clone, Copy, Debug)]
pub struct SweepOptions {
    /// Keep evaluating after a failure instead of halting.
    pub keep_going: bool,
    /// Worker threads; one means fully sequential.
    pub jobs: usize,
    pub cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            keep_going: false,
            jobs: 1,
            cap: crate::solvers::DEFAULT_CAP,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckTotals {
    pub id: &'static str,
    pub pass: u64,
    pub fail: u64,
    pub not_applicable: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepFailure {
    pub graph6: String,
    pub check: &'static str,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub graphs_checked: u64,
    /// Graphs skipped because they exceed the solver cap.
    pub incomplete: u64,
    pub totals: Vec<CheckTotals>,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    fn empty() -> Self {
        SweepReport {
            graphs_checked: 0,
            incomplete: 0,
            totals: CHECK_IDS
                .iter()
                .map(|id| CheckTotals {
                    id,
                    pass: 0,
                    fail: 0,
                    not_applicable: 0,
                })
                .collect(),
            failures: Vec::new(),
        }
    }

    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }

    fn absorb(&mut self, other: SweepReport) {
        self.graphs_checked += other.graphs_checked;
        self.incomplete += other.incomplete;
        for (mine, theirs) in self.totals.iter_mut().zip(other.totals) {
            mine.pass += theirs.pass;
            mine.fail += theirs.fail;
            mine.not_applicable += theirs.not_applicable;
        }
        self.failures.extend(other.failures);
    }

    fn finish(mut self) -> Self {
        self.failures
            .sort_by(|a, b| (&a.graph6, a.check).cmp(&(&b.graph6, b.check)));
        self
    }
}

fn sweep_one(g: &Graph, report: &mut SweepReport, cfg: &SolverConfig) -> Result<bool> {
    let theorem_report = check_graph(g, cfg)?;
    report.graphs_checked += 1;
    if !theorem_report.complete {
        report.incomplete += 1;
        return Ok(false);
    }
    let mut failed = false;
    for (i, check) in theorem_report.checks.iter().enumerate() {
        match &check.status {
            CheckStatus::Pass => report.totals[i].pass += 1,
            CheckStatus::NotApplicable => report.totals[i].not_applicable += 1,
            CheckStatus::Fail(detail) => {
                report.totals[i].fail += 1;
                report.failures.push(SweepFailure {
                    graph6: theorem_report.graph6.clone(),
                    check: check.id,
                    detail: detail.clone(),
                });
                failed = true;
            }
        }
    }
    Ok(failed)
}

/// Runs every theorem check over an explicit list of graphs.
pub fn sweep_graphs(graphs: &[Graph], opts: &SweepOptions) -> Result<SweepReport> {
    let cfg = SolverConfig {
        cap: opts.cap,
        extra_lower_bound: None,
    };
    run_indexed(graphs.len() as u64, opts, |i, report| {
        sweep_one(&graphs[i as usize], report, &cfg)
    })
}

/// Runs every theorem check over all labeled graphs on `n` vertices.
pub fn sweep_all_labeled(n: usize, opts: &SweepOptions) -> Result<SweepReport> {
    labeled_graph(n, 0)?;
    let cfg = SolverConfig {
        cap: opts.cap,
        extra_lower_bound: None,
    };
    run_indexed(labeled_graph_count(n), opts, move |i, report| {
        sweep_one(&labeled_graph(n, i).expect("valid index"), report, &cfg)
    })
}

/// Drives `work` over 0..count, fanning out over chunk boundaries when
/// more than one job is requested. Counts are additive and failures
/// are sorted afterwards, so the aggregate does not depend on the
/// parallelism degree (halting early on a failure may truncate the
/// failure list, never the zero-failure outcome).
fn run_indexed<F>(count: u64, opts: &SweepOptions, work: F) -> Result<SweepReport>
where
    F: Fn(u64, &mut SweepReport) -> Result<bool> + Sync,
{
    let jobs = opts.jobs.max(1);
    let stop = AtomicBool::new(false);
    let chunk = |lo: u64, hi: u64| -> Result<SweepReport> {
        let mut report = SweepReport::empty();
        for i in lo..hi {
            if stop.load(Ordering::Relaxed) {
                break;
            }
            let failed = work(i, &mut report)?;
            if failed && !opts.keep_going {
                stop.store(true, Ordering::Relaxed);
                break;
            }
        }
        Ok(report)
    };
    if jobs == 1 {
        return chunk(0, count).map(SweepReport::finish);
    }
    let per = count.div_ceil(jobs as u64).max(1);
    let partials: Vec<Result<SweepReport>> = std::thread::scope(|scope| {
        let mut handles = Vec::new();
        let chunk = &chunk;
        let mut lo = 0;
        while lo < count {
            let hi = (lo + per).min(count);
            handles.push(scope.spawn(move || chunk(lo, hi)));
            lo = hi;
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut total = SweepReport::empty();
    for partial in partials {
        total.absorb(partial?);
    }
    Ok(total.finish())
}

#[derive(Clone, Copy, Debug)]
pub struct TreeSweepOptions {
    pub max_n: usize,
    /// Orders up to this get the exhaustive solver cross-check on
    /// every tree.
    pub full_solver_max_n: usize,
    /// Above that, about this many trees per order are solver-checked,
    /// at a deterministic stride; the linear-algorithm pair is still
    /// checked on every tree.
    pub solver_samples_per_order: u64,
}

impl Default for TreeSweepOptions {
    fn default() -> Self {
        TreeSweepOptions {
            max_n: 10,
            full_solver_max_n: 8,
            solver_samples_per_order: 1000,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeOrderReport {
    pub n: usize,
    pub trees: u64,
    pub solver_checked: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeSweepReport {
    pub orders: Vec<TreeOrderReport>,
    pub mismatches: Vec<String>,
}

impl TreeSweepReport {
    pub fn failed(&self) -> bool {
        !self.mismatches.is_empty()
    }
}

/// Sweeps every labeled tree up to `max_n` vertices.
///
/// On every tree the support-pruning value is compared against the
/// independence dynamic program (the two linear routes to the solid
/// number). The exhaustive solver cross-check of all four parameters
/// runs on every tree of small order and on a deterministic sample of
/// the larger orders, where the full product of a hundred million
/// trees and an exponential solver would not terminate in useful time.
pub fn tree_sweep(opts: &TreeSweepOptions) -> Result<TreeSweepReport> {
    let mut report = TreeSweepReport {
        orders: Vec::new(),
        mismatches: Vec::new(),
    };
    let mut rows = [0u64; 64];
    let mut degree = [0u8; 64];
    let mut seq = [0usize; 64];
    let mut scratch = TreeScratch::new(opts.max_n.max(1));
    let cfg = SolverConfig::default();
    for n in 1..=opts.max_n {
        let count = prufer_tree_count(n);
        let stride = if n <= opts.full_solver_max_n {
            1
        } else {
            (count / opts.solver_samples_per_order.max(1)).max(1)
        };
        let mut solver_checked = 0u64;
        for index in 0..count {
            decode_prufer(n, index, &mut rows, &mut degree, &mut seq);
            let rows = &rows[..n];
            let (prune, beta, gamma2);
            if n == 1 {
                (prune, beta, gamma2) = (1, 1, 1);
            } else {
                prune = tree_prune_dld_rows(rows);
                beta = tree_beta_rows(rows, &mut scratch);
                gamma2 = tree_gamma2_rows(rows, &mut scratch);
            }
            if prune != beta {
                let g = Graph::from_rows(rows.to_vec());
                report.mismatches.push(format!(
                    "{}: pruning gives {prune}, independence program gives {beta}",
                    graph_id(&g)
                ));
                continue;
            }
            if index % stride == 0 {
                solver_checked += 1;
                let g = Graph::from_rows(rows.to_vec());
                let dld = minimum_code_with(&g, CodeKind::Dld, &cfg)?.value;
                let sld = minimum_code_with(&g, CodeKind::Sld, &cfg)?.value;
                let beta_exact = independence_number_with(&g, &cfg)?.value;
                let gamma2_exact = two_domination_number_with(&g, &cfg)?.value;
                if dld != prune || beta_exact != beta || sld != gamma2 || gamma2_exact != gamma2 {
                    report.mismatches.push(format!(
                        "{}: solver disagrees (dld {dld} vs {prune}, beta {beta_exact} vs {beta}, \
                         sld {sld} vs gamma2 {gamma2}, gamma2 {gamma2_exact})",
                        graph_id(&g)
                    ));
                }
            }
        }
        report.orders.push(TreeOrderReport {
            n,
            trees: count,
            solver_checked,
        });
    }
    Ok(report)
}

/// The sandwich bounds for the code numbers of a Cartesian product:
/// max of the factors' numbers below, the cheaper product of one
/// factor's number with the other's order above.
#[derive(Clone, Debug, Serialize)]
pub struct ProductBoundsReport {
    pub kind: CodeKind,
    pub factor_g: usize,
    pub factor_h: usize,
    pub product: usize,
    pub ok: bool,
}

pub fn check_product_bounds(
    g: &Graph,
    h: &Graph,
    cfg: &SolverConfig,
) -> Result<Vec<ProductBoundsReport>> {
    let product = g.cartesian_product(h)?;
    [CodeKind::Sld, CodeKind::Dld]
        .into_iter()
        .map(|kind| {
            let vg = minimum_code_with(g, kind, cfg)?.value;
            let vh = minimum_code_with(h, kind, cfg)?.value;
            let vp = minimum_code_with(&product, kind, cfg)?.value;
            let lower = vg.max(vh);
            let upper = (h.n() * vg).min(g.n() * vh);
            Ok(ProductBoundsReport {
                kind,
                factor_g: vg,
                factor_h: vh,
                product: vp,
                ok: lower <= vp && vp <= upper,
            })
        })
        .collect()
}
