//! Linear-time tree algorithms.
//!
//! For a tree, the solid-location-domination number equals the
//! independence number and is computable by repeatedly pruning a
//! support vertex together with its leaves; the self-location-
//! domination number equals the 2-domination number, computable by a
//! three-state dynamic program. Both are cross-checked against the
//! exhaustive solver in the test suites.

use crate::codes::{is_code_mask, CheckForm, Code, CodeKind};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::solvers::{Method, SolverResult};

const INF: u32 = u32::MAX / 2;

fn ensure_tree(g: &Graph) -> Result<()> {
    if g.is_tree() {
        Ok(())
    } else {
        Err(Error::NotATree)
    }
}

/// γ^DLD of a tree by support-vertex pruning.
///
/// While the remainder is not a star, some support vertex u has
/// exactly one non-leaf neighbor; removing u with its leaves L_u costs
/// |L_u| codewords. A final star on c vertices costs c - 1 (or 1 for
/// the single-vertex tree). The witness is reassembled on the way back
/// up: the pruned leaves join the code, except that when the deeper
/// code already holds the non-leaf neighbor, one leaf is swapped for
/// the support vertex.
pub fn tree_gamma_dld(t: &Graph) -> Result<SolverResult> {
    ensure_tree(t)?;
    let rows: Vec<u64> = (0..t.n()).map(|u| t.open(u)).collect();
    let mut steps = 0u64;
    let witness = prune_dld_witness(&rows, t.all_mask(), &mut steps);
    debug_assert!(is_code_mask(t, witness, CodeKind::Dld, CheckForm::Definition));
    Ok(SolverResult {
        value: witness.count_ones() as usize,
        witness: Code::from_mask(witness),
        nodes_explored: steps,
        lower_bound_used: 0,
        method: Method::TreeLinear,
    })
}

/// Locates a support vertex with exactly one non-leaf neighbor in the
/// `alive` induced subtree; returns (support, leaves, the neighbor).
fn prunable_support(rows: &[u64], alive: u64) -> Option<(usize, u64, usize)> {
    for u in bits(alive) {
        let nbrs = rows[u] & alive;
        let leaves = bits(nbrs)
            .filter(|&w| (rows[w] & alive).count_ones() == 1)
            .fold(0u64, |m, w| m | 1 << w);
        if leaves != 0 && (nbrs & !leaves).count_ones() == 1 {
            let v = (nbrs & !leaves).trailing_zeros() as usize;
            return Some((u, leaves, v));
        }
    }
    None
}

fn star_center(rows: &[u64], alive: u64) -> Option<usize> {
    let c = alive.count_ones();
    bits(alive).find(|&u| (rows[u] & alive).count_ones() == c - 1)
}

fn prune_dld_witness(rows: &[u64], alive: u64, steps: &mut u64) -> u64 {
    *steps += 1;
    let c = alive.count_ones();
    if c == 1 {
        return alive;
    }
    if let Some(center) = star_center(rows, alive) {
        return alive & !(1 << center);
    }
    let (u, leaves, v) = prunable_support(rows, alive)
        .expect("a tree that is not a star has a prunable support vertex");
    let deeper = prune_dld_witness(rows, alive & !(leaves | 1 << u), steps);
    if deeper >> v & 1 == 1 {
        // swap one leaf for the support vertex to keep the code optimal
        let x = 1u64 << leaves.trailing_zeros();
        deeper | (leaves & !x) | 1 << u
    } else {
        deeper | leaves
    }
}

/// Value-only variant on raw open-neighborhood rows, used by the mass
/// tree sweeps.
pub(crate) fn tree_prune_dld_rows(rows: &[u64]) -> usize {
    let n = rows.len();
    let mut alive = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut acc = 0usize;
    loop {
        let c = alive.count_ones() as usize;
        if c == 1 {
            return acc + 1;
        }
        if star_center(rows, alive).is_some() {
            return acc + c - 1;
        }
        let (u, leaves, _) =
            prunable_support(rows, alive).expect("non-star tree has a prunable support vertex");
        acc += leaves.count_ones() as usize;
        alive &= !(leaves | 1 << u);
    }
}

/// β of a tree by the in/out dynamic program, on raw rows.
pub(crate) fn tree_beta_rows(rows: &[u64], scratch: &mut TreeScratch) -> usize {
    let n = rows.len();
    scratch.fill_order(rows);
    let (order, parent) = (&scratch.order[..n], &scratch.parent[..n]);
    let (inc, out) = (&mut scratch.a, &mut scratch.b);
    for &v in order.iter().rev() {
        let mut take = 1u32;
        let mut skip = 0u32;
        for w in bits(rows[v]) {
            if parent[v] == w as i8 {
                continue;
            }
            take += out[w];
            skip += inc[w].max(out[w]);
        }
        inc[v] = take;
        out[v] = skip;
    }
    let root = order[0];
    inc[root].max(out[root]) as usize
}

/// γ₂ of a tree: three states per vertex — in the set, out with the
/// parent in the set (one more dominator needed from below), or out
/// with no help from the parent (two needed from below).
pub(crate) fn tree_gamma2_rows(rows: &[u64], scratch: &mut TreeScratch) -> usize {
    let n = rows.len();
    scratch.fill_order(rows);
    let (order, parent) = (&scratch.order[..n], &scratch.parent[..n]);
    let inc = &mut scratch.a;
    let out1 = &mut scratch.b;
    let out2 = &mut scratch.c;
    for &v in order.iter().rev() {
        let mut in_cost = 1u32;
        let mut base = 0u32;
        // cheapest upgrades from the out-choice to the in-choice
        let mut up1 = INF;
        let mut up2 = INF;
        let mut chosen_in = 0u32;
        for w in bits(rows[v]) {
            if parent[v] == w as i8 {
                continue;
            }
            in_cost = (in_cost + inc[w].min(out1[w])).min(INF);
            let keep_out = out2[w];
            if inc[w] <= keep_out {
                base = (base + inc[w]).min(INF);
                chosen_in += 1;
            } else {
                base = (base + keep_out).min(INF);
                let delta = inc[w] - keep_out;
                if delta < up1 {
                    up2 = up1;
                    up1 = delta;
                } else if delta < up2 {
                    up2 = delta;
                }
            }
        }
        inc[v] = in_cost;
        out1[v] = match chosen_in {
            0 => (base + up1).min(INF),
            _ => base,
        };
        out2[v] = match chosen_in {
            0 => base.saturating_add(up1).saturating_add(up2).min(INF),
            1 => (base + up1).min(INF),
            _ => base,
        };
    }
    let root = order[0];
    inc[root].min(out2[root]) as usize
}

/// Reusable buffers for the row-based tree programs.
pub(crate) struct TreeScratch {
    order: Vec<usize>,
    parent: Vec<i8>,
    a: Vec<u32>,
    b: Vec<u32>,
    c: Vec<u32>,
}

impl TreeScratch {
    pub(crate) fn new(max_n: usize) -> Self {
        TreeScratch {
            order: vec![0; max_n],
            parent: vec![-1; max_n],
            a: vec![0; max_n],
            b: vec![0; max_n],
            c: vec![0; max_n],
        }
    }

    /// BFS order from vertex 0 with parent pointers.
    fn fill_order(&mut self, rows: &[u64]) {
        let n = rows.len();
        self.parent[..n].fill(-2);
        self.parent[0] = -1;
        self.order[0] = 0;
        let mut head = 0;
        let mut tail = 1;
        while head < tail {
            let v = self.order[head];
            head += 1;
            for w in bits(rows[v]) {
                if self.parent[w] == -2 {
                    self.parent[w] = v as i8;
                    self.order[tail] = w;
                    tail += 1;
                }
            }
        }
        debug_assert_eq!(tail, n, "rows must describe a connected graph");
    }
}

/// γ^SLD of a tree: equals γ₂(T) because trees have girth at least
/// five, so the 2-dominating witness produced by the dynamic program
/// is itself a self-locating-dominating code.
pub fn tree_gamma_sld(t: &Graph) -> Result<SolverResult> {
    ensure_tree(t)?;
    let n = t.n();
    let rows: Vec<u64> = (0..n).map(|u| t.open(u)).collect();
    let mut scratch = TreeScratch::new(n);
    let value = tree_gamma2_rows(&rows, &mut scratch);
    let witness = gamma2_witness(&rows, &scratch);
    debug_assert_eq!(witness.count_ones() as usize, value);
    debug_assert!(is_code_mask(t, witness, CodeKind::Dom2, CheckForm::Definition));
    debug_assert!(is_code_mask(t, witness, CodeKind::Sld, CheckForm::Definition));
    Ok(SolverResult {
        value,
        witness: Code::from_mask(witness),
        nodes_explored: n as u64,
        lower_bound_used: 0,
        method: Method::TreeLinear,
    })
}

/// Replays the γ₂ dynamic program top-down, committing each vertex to
/// the state that realized the minima.
fn gamma2_witness(rows: &[u64], scratch: &TreeScratch) -> u64 {
    let n = rows.len();
    let (order, parent) = (&scratch.order[..n], &scratch.parent[..n]);
    let (inc, out1, out2) = (&scratch.a, &scratch.b, &scratch.c);
    // state per vertex: 0 = in, 1 = out needing one child, 2 = out needing two
    let mut state = vec![0u8; n];
    let root = order[0];
    state[root] = if inc[root] <= out2[root] { 0 } else { 2 };
    let mut witness = 0u64;
    for &v in order.iter() {
        let children: Vec<usize> = bits(rows[v]).filter(|&w| parent[w] == v as i8).collect();
        match state[v] {
            0 => {
                witness |= 1 << v;
                for &w in &children {
                    state[w] = if inc[w] <= out1[w] { 0 } else { 1 };
                }
            }
            need => {
                // replay the base choice, then upgrade the cheapest
                // children until enough of them are in the set
                let mut ins: Vec<usize> = Vec::new();
                let mut upgrades: Vec<(u32, usize)> = Vec::new();
                for &w in &children {
                    if inc[w] <= out2[w] {
                        state[w] = 0;
                        ins.push(w);
                    } else {
                        state[w] = 2;
                        upgrades.push((inc[w] - out2[w], w));
                    }
                }
                upgrades.sort_unstable();
                let mut missing = (need as usize).saturating_sub(ins.len());
                for (_, w) in upgrades {
                    if missing == 0 {
                        break;
                    }
                    state[w] = 0;
                    missing -= 1;
                }
                debug_assert_eq!(missing, 0, "dynamic program admits the replayed choice");
            }
        }
    }
    witness
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, GraphFamily};

    #[test]
    fn rejects_non_trees() {
        let c4 = generate(&GraphFamily::Cycle { n: 4 }).unwrap();
        assert!(matches!(tree_gamma_dld(&c4), Err(Error::NotATree)));
        let d2 = generate(&GraphFamily::Discrete { n: 2 }).unwrap();
        assert!(matches!(tree_gamma_sld(&d2), Err(Error::NotATree)));
    }

    #[test]
    fn path_values() {
        for n in 1..=12 {
            let p = generate(&GraphFamily::Path { n }).unwrap();
            assert_eq!(tree_gamma_dld(&p).unwrap().value, n.div_ceil(2), "dld P{n}");
            if n >= 2 {
                assert_eq!(
                    tree_gamma_sld(&p).unwrap().value,
                    (n + 1).div_ceil(2),
                    "sld P{n}"
                );
            }
        }
        assert_eq!(tree_gamma_sld(&generate(&GraphFamily::Path { n: 2 }).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn star_values() {
        for n in 2..=9 {
            let star = generate(&GraphFamily::Star { n }).unwrap();
            assert_eq!(tree_gamma_dld(&star).unwrap().value, n - 1);
        }
        // every leaf needs two dominators, and a single edge needs both ends
        assert_eq!(tree_gamma_sld(&generate(&GraphFamily::Star { n: 2 }).unwrap()).unwrap().value, 2);
        for n in 3..=9 {
            let star = generate(&GraphFamily::Star { n }).unwrap();
            assert_eq!(tree_gamma_sld(&star).unwrap().value, n - 1);
        }
    }

    #[test]
    fn single_vertex() {
        let k1 = generate(&GraphFamily::Discrete { n: 1 }).unwrap();
        assert_eq!(tree_gamma_dld(&k1).unwrap().value, 1);
        assert_eq!(tree_gamma_sld(&k1).unwrap().value, 1);
    }

    #[test]
    fn spider_and_caterpillar() {
        // spider with three legs of length two: gamma2 = 4, beta = 4
        let spider =
            Graph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(tree_gamma_dld(&spider).unwrap().value, 4);
        assert_eq!(tree_gamma_sld(&spider).unwrap().value, 4);
        // caterpillar: path 0-1-2-3 with a leaf on each inner vertex
        let cat = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5)]).unwrap();
        let dld = tree_gamma_dld(&cat).unwrap();
        let beta = crate::solvers::independence_number(&cat).unwrap();
        assert_eq!(dld.value, beta.value);
    }
}
