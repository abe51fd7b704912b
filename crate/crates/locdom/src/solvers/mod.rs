//! Exact solvers: minimum codes of every kind via branch and bound,
//! maximum independent sets, 3-distance independence, 2-domination,
//! the greedy code behind the degree bound, linear-time tree
//! algorithms, and the closed-form evaluators for families the
//! results pin down exactly.

mod closed_form;
mod greedy;
mod search;
mod sets;
mod trees;

pub use closed_form::{closed_form, ClosedFormFamily, ClosedFormQuery};
pub use greedy::greedy_3distance_code;
pub use sets::{
    distance3_independence_number, distance3_independence_number_with, independence_number,
    independence_number_with, IndependentSetResult,
};
pub use trees::{tree_gamma_dld, tree_gamma_sld};
pub(crate) use trees::{tree_beta_rows, tree_gamma2_rows, tree_prune_dld_rows, TreeScratch};

use serde::Serialize;

use crate::codes::{Code, CodeKind};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default exactness cap: orders above this are refused unless the
/// caller raises the cap, since the search is exponential in the worst
/// case.
pub const DEFAULT_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    BranchAndBound,
    TreeLinear,
    ClosedForm,
}

/// An exact optimum with one witness and search statistics.
#[derive(Clone, Debug, Serialize)]
pub struct SolverResult {
    pub value: usize,
    pub witness: Code,
    pub nodes_explored: u64,
    pub lower_bound_used: usize,
    pub method: Method,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Largest order solved without an explicit override.
    pub cap: usize,
    /// A caller-supplied lower bound on the optimum, used to prune and
    /// to stop as soon as it is met (the chain of code numbers makes
    /// earlier solves reusable here).
    pub extra_lower_bound: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            cap: DEFAULT_CAP,
            extra_lower_bound: None,
        }
    }
}

/// Exact minimum cardinality of a code of the requested kind, with a
/// deterministic witness: among all optimal codes, the one whose
/// sorted vertex list is lexicographically smallest.
pub fn minimum_code(g: &Graph, kind: CodeKind) -> Result<SolverResult> {
    minimum_code_with(g, kind, &SolverConfig::default())
}

pub fn minimum_code_with(g: &Graph, kind: CodeKind, cfg: &SolverConfig) -> Result<SolverResult> {
    if g.n() > cfg.cap {
        return Err(Error::SearchTooLarge {
            n: g.n(),
            cap: cfg.cap,
        });
    }
    search::solve(g, kind, cfg)
}

/// γ₂(G): the minimum size of a set 2-dominating every outside vertex.
pub fn two_domination_number(g: &Graph) -> Result<SolverResult> {
    minimum_code(g, CodeKind::Dom2)
}

pub fn two_domination_number_with(g: &Graph, cfg: &SolverConfig) -> Result<SolverResult> {
    minimum_code_with(g, CodeKind::Dom2, cfg)
}
