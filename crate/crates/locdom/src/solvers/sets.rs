//! Exact maximum independent sets, plain and at pairwise distance at
//! least three.

use serde::Serialize;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::solvers::SolverConfig;

#[derive(Clone, Debug, Serialize)]
pub struct IndependentSetResult {
    pub value: usize,
    pub witness: Code,
    pub nodes_explored: u64,
}

/// β(G): the maximum size of a set with no two adjacent vertices.
pub fn independence_number(g: &Graph) -> Result<IndependentSetResult> {
    independence_number_with(g, &SolverConfig::default())
}

pub fn independence_number_with(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<IndependentSetResult> {
    if g.n() > cfg.cap {
        return Err(Error::SearchTooLarge {
            n: g.n(),
            cap: cfg.cap,
        });
    }
    let rows: Vec<u64> = (0..g.n()).map(|u| g.closed(u)).collect();
    Ok(max_independent(&rows))
}

/// β₂(G) in this toolkit's sense: the maximum number of vertices at
/// pairwise distance at least three, computed as the independence
/// number of the square graph (edges between all pairs at distance
/// one or two).
pub fn distance3_independence_number(g: &Graph) -> Result<IndependentSetResult> {
    distance3_independence_number_with(g, &SolverConfig::default())
}

pub fn distance3_independence_number_with(
    g: &Graph,
    cfg: &SolverConfig,
) -> Result<IndependentSetResult> {
    if g.n() > cfg.cap {
        return Err(Error::SearchTooLarge {
            n: g.n(),
            cap: cfg.cap,
        });
    }
    let rows: Vec<u64> = (0..g.n())
        .map(|u| bits(g.closed(u)).fold(0u64, |acc, w| acc | g.closed(w)))
        .collect();
    Ok(max_independent(&rows))
}

/// Branch and bound over closed-neighborhood rows: branch on a vertex
/// of maximum remaining degree, either taking it (and dropping its
/// closed neighborhood) or discarding it.
pub(crate) fn max_independent(closed: &[u64]) -> IndependentSetResult {
    struct State<'a> {
        closed: &'a [u64],
        best: usize,
        best_set: u64,
        nodes: u64,
    }

    fn rec(s: &mut State, pool: u64, taken: u64, count: usize) {
        s.nodes += 1;
        if count + pool.count_ones() as usize <= s.best {
            return;
        }
        if pool == 0 {
            // count > best, guaranteed by the bound above
            s.best = count;
            s.best_set = taken;
            return;
        }
        let v = bits(pool)
            .max_by_key(|&v| ((s.closed[v] & pool).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        rec(s, pool & !s.closed[v], taken | 1 << v, count + 1);
        rec(s, pool & !(1 << v), taken, count);
    }

    let n = closed.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut state = State {
        closed,
        best: 0,
        best_set: 0,
        nodes: 0,
    };
    rec(&mut state, all, 0, 0);
    IndependentSetResult {
        value: state.best,
        witness: Code::from_mask(state.best_set),
        nodes_explored: state.nodes,
    }
}
