//! The greedy construction behind the maximum-degree upper bound: pick
//! vertices at pairwise distance at least three until none remain;
//! the complement of the picked set is solid-locating-dominating.

use crate::codes::{is_code_mask, CheckForm, Code, CodeKind};
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Builds a solid-locating-dominating code of size at most
/// n(1 - 1/(Δ²+1)) on a connected graph with at least two vertices.
///
/// Repeatedly the smallest-index remaining vertex u is selected and
/// everything within distance two of u is discarded; the selected set
/// S is 3-distance independent and grows by one while at most Δ²+1
/// vertices disappear, so |S| >= n/(Δ²+1). The returned code is
/// V \ S.
pub fn greedy_3distance_code(g: &Graph) -> Result<Code> {
    if g.n() < 2 {
        return Err(Error::BelowMinimum { min: 2, got: g.n() as u64 });
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut remaining = g.all_mask();
    let mut selected = 0u64;
    while remaining != 0 {
        let u = remaining.trailing_zeros() as usize;
        selected |= 1 << u;
        let ball = bits(g.open(u)).fold(0u64, |acc, v| acc | g.closed(v));
        remaining &= !ball;
        debug_assert!(remaining >> u & 1 == 0, "connected graphs have no isolated vertices");
    }
    let code = g.all_mask() & !selected;
    debug_assert!(is_code_mask(g, code, CodeKind::Dld, CheckForm::Definition));
    Ok(Code::from_mask(code))
}
