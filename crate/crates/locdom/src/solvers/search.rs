//! Branch-and-bound search for minimum codes.
//!
//! Vertices are branched on in descending degree order, include before
//! exclude. A branch dies when it cannot beat the incumbent, when an
//! already-excluded vertex can no longer collect enough dominators
//! (two for the kinds that force 2-domination, one otherwise), or when
//! the incumbent has reached the global lower bound. Self-locating
//! searches pre-include the forced codewords.
//!
//! The value search keeps no witness; once the optimum v is known, a
//! second pass finds the lexicographically smallest code of size v by
//! enumerating candidate sets in lexicographic order with the same
//! feasibility pruning.

use crate::codes::{forced_sld_mask, is_code_mask, CheckForm, Code, CodeKind};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::order::{dilworth_number, sperner_lower_bound};
use crate::solvers::{Method, SolverConfig, SolverResult};

/// Dominators required by every vertex left outside the code: codes of
/// the self-locating kind are always 2-dominating.
fn domination_threshold(kind: CodeKind) -> u32 {
    match kind {
        CodeKind::Sld | CodeKind::Dom2 => 2,
        _ => 1,
    }
}

fn global_lower_bound(g: &Graph, kind: CodeKind, forced: u64, cfg: &SolverConfig) -> Result<usize> {
    let mut lb = 1usize.max(forced.count_ones() as usize);
    match kind {
        CodeKind::Sld | CodeKind::Dld => {
            lb = lb.max(sperner_lower_bound(g.n() as u64)? as usize);
        }
        _ => {}
    }
    if kind == CodeKind::Dld {
        lb = lb.max(g.n() - dilworth_number(g)?.value);
    }
    if let Some(extra) = cfg.extra_lower_bound {
        lb = lb.max(extra);
    }
    Ok(lb.min(g.n()))
}

struct Search<'a> {
    g: &'a Graph,
    kind: CodeKind,
    threshold: u32,
    order: Vec<usize>,
    /// suffix[i] = mask of order[i..], the still-undecided vertices.
    suffix: Vec<u64>,
    incumbent: usize,
    lower: usize,
    nodes: u64,
}

impl Search<'_> {
    /// True when some excluded vertex can no longer be dominated often
    /// enough by `avail` (chosen plus undecided vertices).
    fn infeasible(&self, avail: u64) -> bool {
        let excluded = self.g.all_mask() & !avail;
        bits(excluded).any(|u| (self.g.closed(u) & avail).count_ones() < self.threshold)
    }

    fn descend(&mut self, include: u64, pos: usize) -> bool {
        self.nodes += 1;
        let count = include.count_ones() as usize;
        if count >= self.incumbent {
            return false;
        }
        if self.infeasible(include | self.suffix[pos]) {
            return false;
        }
        if pos == self.order.len() {
            // complete assignment below the incumbent
            if is_code_mask(self.g, include, self.kind, CheckForm::Definition) {
                self.incumbent = count;
                return count == self.lower;
            }
            return false;
        }
        let v = self.order[pos];
        if self.descend(include | 1 << v, pos + 1) {
            return true;
        }
        self.descend(include, pos + 1)
    }
}

pub(super) fn solve(g: &Graph, kind: CodeKind, cfg: &SolverConfig) -> Result<SolverResult> {
    let forced = if kind == CodeKind::Sld {
        forced_sld_mask(g)
    } else {
        0
    };
    let lower = global_lower_bound(g, kind, forced, cfg)?;

    let mut order: Vec<usize> = (0..g.n()).filter(|&v| forced >> v & 1 == 0).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut suffix = vec![0u64; order.len() + 1];
    for i in (0..order.len()).rev() {
        suffix[i] = suffix[i + 1] | 1 << order[i];
    }

    let mut search = Search {
        g,
        kind,
        threshold: domination_threshold(kind),
        order,
        suffix,
        // the whole vertex set is a code of every kind
        incumbent: g.n(),
        lower,
        nodes: 0,
    };
    search.descend(forced, 0);
    let value = search.incumbent;

    let mut nodes = search.nodes;
    let witness = lex_min_code_of_size(g, kind, value, forced, &mut nodes)
        .ok_or_else(|| Error::SelfCheck(format!("no witness at the computed optimum {value}")))?;
    debug_assert!(is_code_mask(g, witness, kind, CheckForm::Definition));

    Ok(SolverResult {
        value,
        witness: Code::from_mask(witness),
        nodes_explored: nodes,
        lower_bound_used: lower,
        method: Method::BranchAndBound,
    })
}

/// The lexicographically smallest code of exactly `size` vertices
/// containing `forced`, or None. Candidate sets are visited in
/// lexicographic order of their sorted vertex lists, so the first hit
/// is the minimum.
pub(crate) fn lex_min_code_of_size(
    g: &Graph,
    kind: CodeKind,
    size: usize,
    forced: u64,
    nodes: &mut u64,
) -> Option<u64> {
    let need = size.checked_sub(forced.count_ones() as usize)?;
    let free: Vec<usize> = (0..g.n()).filter(|&v| forced >> v & 1 == 0).collect();
    let threshold = domination_threshold(kind);

    fn rec(
        g: &Graph,
        kind: CodeKind,
        threshold: u32,
        free: &[usize],
        chosen: u64,
        next: usize,
        left: usize,
        nodes: &mut u64,
    ) -> Option<u64> {
        *nodes += 1;
        if left == 0 {
            return is_code_mask(g, chosen, kind, CheckForm::Definition).then_some(chosen);
        }
        if free.len() - next < left {
            return None;
        }
        // everything before `next` is settled; undecided vertices may
        // still dominate the settled exclusions
        let mut avail = chosen;
        for &v in &free[next..] {
            avail |= 1 << v;
        }
        let excluded = g.all_mask() & !avail;
        if bits(excluded).any(|u| (g.closed(u) & avail).count_ones() < threshold) {
            return None;
        }
        for i in next..free.len() {
            if let Some(hit) = rec(
                g,
                kind,
                threshold,
                free,
                chosen | 1 << free[i],
                i + 1,
                left - 1,
                nodes,
            ) {
                return Some(hit);
            }
        }
        None
    }

    if size > g.n() {
        return None;
    }
    rec(g, kind, threshold, &free, forced, 0, need, nodes)
}
