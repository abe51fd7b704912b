//! Theorem sweep engine: computes the full parameter table of a graph,
//! evaluates every in-scope inequality and equivalence against it, and
//! aggregates pass/fail/not-applicable outcomes over graph streams.

mod checks;
pub mod enumerate;
mod sweep;

pub use checks::{CheckResult, CheckStatus, CHECK_IDS};
pub use sweep::{
    check_product_bounds, sweep_all_labeled, sweep_graphs, tree_sweep, ProductBoundsReport,
    SweepFailure, SweepOptions, SweepReport, TreeSweepOptions, TreeSweepReport,
};

use serde::Serialize;

use crate::codes::{forced_sld_codewords, Code, CodeKind};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::order::{dilworth_number, is_threshold, is_twin_free, vicinal_preorder};
use crate::solvers::{
    distance3_independence_number_with, independence_number_with, minimum_code_with,
    tree_gamma_dld, tree_gamma_sld, SolverConfig,
};
use crate::constructions::{ClaimParameter, ConstructionClaim};

/// Everything the checks need to know about one graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphParams {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    /// None encodes infinite girth (forests).
    pub girth: Option<usize>,
    pub connected: bool,
    pub tree: bool,
    pub gamma: usize,
    pub gamma_ld: usize,
    pub gamma_dld: usize,
    pub gamma_sld: usize,
    pub gamma_2: usize,
    pub beta: usize,
    pub beta_2: usize,
    pub dilworth: usize,
    pub gamma_dld_complement: usize,
    pub forced_count: usize,
    pub threshold: bool,
    pub twin_free: bool,
    /// Leaf and support-vertex counts; zero on non-trees.
    pub leaves: usize,
    pub support_vertices: usize,
    pub tree_gamma_dld: Option<usize>,
    pub tree_gamma_sld: Option<usize>,
    pub witness_sld: Code,
    pub witness_dld: Code,
    pub witness_gamma_2: Code,
    #[serde(skip)]
    pub forced: Code,
    #[serde(skip)]
    pub dilworth_antichain: Code,
}

/// Per-graph evaluation of every in-scope result.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub graph6: String,
    /// False when the solver cap stopped the parameter computation.
    pub complete: bool,
    pub params: Option<GraphParams>,
    pub checks: Vec<CheckResult>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks
            .iter()
            .filter(|c| matches!(c.status, CheckStatus::Fail(_)))
    }
}

pub(crate) fn graph_id(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| format!("<order {}>", g.n()))
}

/// Computes the full parameter table. Solves reuse the chain
/// γ <= γ^LD <= γ^DLD <= γ^SLD as lower bounds.
pub fn compute_params(g: &Graph, cfg: &SolverConfig) -> Result<GraphParams> {
    let bound = |extra: Option<usize>| SolverConfig {
        cap: cfg.cap,
        extra_lower_bound: extra,
    };
    let gamma = minimum_code_with(g, CodeKind::Dom, cfg)?.value;
    let ld = minimum_code_with(g, CodeKind::Ld, &bound(Some(gamma)))?.value;
    let dld = minimum_code_with(g, CodeKind::Dld, &bound(Some(ld)))?;
    let sld = minimum_code_with(g, CodeKind::Sld, &bound(Some(dld.value)))?;
    let gamma_2 = minimum_code_with(g, CodeKind::Dom2, &bound(Some(gamma)))?;
    let beta = independence_number_with(g, cfg)?.value;
    let beta_2 = distance3_independence_number_with(g, cfg)?.value;
    let dilworth = dilworth_number(g)?;
    let complement = g.complement();
    let dld_complement = minimum_code_with(&complement, CodeKind::Dld, cfg)?.value;
    let forced = forced_sld_codewords(g);
    let tree = g.is_tree();
    let (leaves, support) = if tree {
        let leaves: Vec<usize> = (0..g.n()).filter(|&u| g.degree(u) == 1).collect();
        let support = (0..g.n())
            .filter(|&u| leaves.iter().any(|&l| g.has_edge(u, l)))
            .count();
        (leaves.len(), support)
    } else {
        (0, 0)
    };
    Ok(GraphParams {
        n: g.n(),
        m: g.edge_count(),
        max_degree: g.max_degree(),
        girth: g.girth(),
        connected: g.is_connected(),
        tree,
        gamma,
        gamma_ld: ld,
        gamma_dld: dld.value,
        gamma_sld: sld.value,
        gamma_2: gamma_2.value,
        beta,
        beta_2,
        dilworth: dilworth.value,
        gamma_dld_complement: dld_complement,
        forced_count: forced.len(),
        threshold: is_threshold(g)?,
        twin_free: is_twin_free(g),
        leaves,
        support_vertices: support,
        tree_gamma_dld: if tree { Some(tree_gamma_dld(g)?.value) } else { None },
        tree_gamma_sld: if tree { Some(tree_gamma_sld(g)?.value) } else { None },
        witness_sld: sld.witness,
        witness_dld: dld.witness,
        witness_gamma_2: gamma_2.witness,
        forced,
        dilworth_antichain: dilworth.antichain,
    })
}

/// Evaluates every check on one graph. A graph beyond the solver cap
/// yields a report flagged incomplete instead of an error.
pub fn check_graph(g: &Graph, cfg: &SolverConfig) -> Result<TheoremReport> {
    let graph6 = graph_id(g);
    match compute_params(g, cfg) {
        Ok(params) => {
            let preorder = vicinal_preorder(g);
            let checks = checks::run_all(g, &params, &preorder);
            Ok(TheoremReport {
                graph6,
                complete: true,
                params: Some(params),
                checks: checks?,
            })
        }
        Err(Error::SearchTooLarge { .. }) => Ok(TheoremReport {
            graph6,
            complete: false,
            params: None,
            checks: Vec::new(),
        }),
        Err(e) => Err(e),
    }
}

/// Checks each claimed parameter of a construction against the exact
/// solver value.
#[derive(Clone, Debug, Serialize)]
pub struct ClaimCheck {
    pub parameter: ClaimParameter,
    pub claimed: u64,
    pub actual: u64,
    pub ok: bool,
}

pub fn verify_claims(c: &ConstructionClaim, cfg: &SolverConfig) -> Result<Vec<ClaimCheck>> {
    c.claims
        .iter()
        .map(|claim| {
            let actual = match claim.parameter {
                ClaimParameter::Order => c.graph.n() as u64,
                ClaimParameter::GammaLd => {
                    minimum_code_with(&c.graph, CodeKind::Ld, cfg)?.value as u64
                }
                ClaimParameter::GammaSld => {
                    minimum_code_with(&c.graph, CodeKind::Sld, cfg)?.value as u64
                }
                ClaimParameter::GammaDld => {
                    minimum_code_with(&c.graph, CodeKind::Dld, cfg)?.value as u64
                }
            };
            Ok(ClaimCheck {
                parameter: claim.parameter,
                claimed: claim.value,
                actual,
                ok: actual == claim.value,
            })
        })
        .collect()
}
