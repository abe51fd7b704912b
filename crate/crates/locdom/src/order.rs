//! The vicinal preorder x ≲ y ⟺ N(x) ⊆ N[y], twins, the Dilworth
//! number (minimum chain cover = maximum antichain of that preorder),
//! threshold recognition, and the Sperner-bound arithmetic.

use serde::Serialize;

use crate::codes::Code;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// The vicinal preorder of a graph, with its equivalence classes
/// (exactly the twin classes) precomputed.
#[derive(Clone, Debug)]
pub struct VicinalPreorder {
    n: usize,
    /// `above[x]` = mask of all y with x ≲ y (reflexive).
    above: Vec<u64>,
    /// Equivalence classes under x ≲ y and y ≲ x, sorted by least member.
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

/// x ≲ y ⟺ N(x) ⊆ N[y].
pub fn vicinal_preorder(g: &Graph) -> VicinalPreorder {
    let n = g.n();
    let above: Vec<u64> = (0..n)
        .map(|x| {
            let nx = g.open(x);
            (0..n)
                .filter(|&y| nx & !g.closed(y) == 0)
                .fold(0u64, |m, y| m | 1 << y)
        })
        .collect();
    debug_assert!((0..n).all(|x| above[x] >> x & 1 == 1), "reflexivity");
    debug_assert!(
        (0..n).all(|x| bits(above[x]).all(|y| above[y] & !above[x] == 0)),
        "transitivity"
    );
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if class_of[x] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let members: Vec<usize> = (x..n)
            .filter(|&y| above[x] >> y & 1 == 1 && above[y] >> x & 1 == 1)
            .collect();
        for &y in &members {
            class_of[y] = id;
        }
        classes.push(members);
    }
    VicinalPreorder {
        n,
        above,
        classes,
        class_of,
    }
}

impl VicinalPreorder {
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.above[x] >> y & 1 == 1
    }

    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    pub fn strictly_less(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && !self.leq(y, x)
    }

    /// x is maximal when no y satisfies x < y.
    pub fn is_maximal(&self, x: usize) -> bool {
        (0..self.n).all(|y| !self.strictly_less(x, y))
    }

    pub fn maximal_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.is_maximal(x)).collect()
    }

    /// The preorder is total iff every two vertices are comparable.
    pub fn is_total(&self) -> bool {
        (0..self.n).all(|x| (0..x).all(|y| self.leq(x, y) || self.leq(y, x)))
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    /// An antichain contains no two distinct comparable vertices.
    pub fn is_antichain(&self, vertices: &[usize]) -> bool {
        vertices.iter().all(|&x| {
            vertices
                .iter()
                .all(|&y| x == y || !(self.leq(x, y) || self.leq(y, x)))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TwinClass {
    TrueTwins,
    FalseTwins,
    NotTwins,
}

/// Classifies a vertex pair: false twins share the open neighborhood,
/// true twins share the closed one.
pub fn twins(g: &Graph, u: usize, v: usize) -> Result<TwinClass> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    if g.closed(u) == g.closed(v) {
        Ok(TwinClass::TrueTwins)
    } else if g.open(u) == g.open(v) {
        Ok(TwinClass::FalseTwins)
    } else {
        Ok(TwinClass::NotTwins)
    }
}

pub fn is_twin_free(g: &Graph) -> bool {
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| twins(g, u, v).unwrap() == TwinClass::NotTwins))
}

/// The Dilworth number together with a maximum antichain witness.
#[derive(Clone, Debug, Serialize)]
pub struct DilworthResult {
    pub value: usize,
    /// One vertex per antichain class, sorted.
    pub antichain: Code,
}

/// Computes ∇(G): the minimum number of chains of the vicinal preorder
/// covering the vertex set, equal to the maximum antichain size.
///
/// The preorder is collapsed to its equivalence-class quotient, a
/// poset, and the minimum chain cover is obtained from a maximum
/// bipartite matching on the strict order. The antichain extracted
/// from the matching is re-verified before returning.
pub fn dilworth_number(g: &Graph) -> Result<DilworthResult> {
    let pre = vicinal_preorder(g);
    let k = pre.classes.len();
    // strict order between classes, via representatives
    let less: Vec<u64> = (0..k)
        .map(|a| {
            let ra = pre.classes[a][0];
            (0..k)
                .filter(|&b| {
                    a != b && pre.strictly_less(ra, pre.classes[b][0])
                })
                .fold(0u64, |m, b| m | 1 << b)
        })
        .collect();

    // maximum matching on the bipartite graph L = R = classes,
    // edges a -> b for a < b
    let mut match_right = vec![usize::MAX; k];
    let mut match_left = vec![usize::MAX; k];
    fn augment(
        a: usize,
        less: &[u64],
        match_right: &mut [usize],
        match_left: &mut [usize],
        visited: &mut u64,
    ) -> bool {
        for b in bits(less[a]) {
            if *visited >> b & 1 == 1 {
                continue;
            }
            *visited |= 1 << b;
            if match_right[b] == usize::MAX
                || augment(match_right[b], less, match_right, match_left, visited)
            {
                match_right[b] = a;
                match_left[a] = b;
                return true;
            }
        }
        false
    }
    let mut matching = 0usize;
    for a in 0..k {
        let mut visited = 0u64;
        if augment(a, &less, &mut match_right, &mut match_left, &mut visited) {
            matching += 1;
        }
    }
    let width = k - matching;

    // Koenig: alternating reachability from unmatched left vertices;
    // the antichain is the classes covered on neither side.
    let mut reach_left = 0u64;
    let mut reach_right = 0u64;
    let mut stack: Vec<usize> = (0..k).filter(|&a| match_left[a] == usize::MAX).collect();
    for &a in &stack {
        reach_left |= 1 << a;
    }
    while let Some(a) = stack.pop() {
        for b in bits(less[a] & !reach_right) {
            reach_right |= 1 << b;
            let a2 = match_right[b];
            if a2 != usize::MAX && reach_left >> a2 & 1 == 0 {
                reach_left |= 1 << a2;
                stack.push(a2);
            }
        }
    }
    let in_cover = |c: usize| reach_left >> c & 1 == 0 || reach_right >> c & 1 == 1;
    let antichain: Vec<usize> = (0..k)
        .filter(|&c| !in_cover(c))
        .map(|c| pre.classes[c][0])
        .collect();

    if antichain.len() != width || !pre.is_antichain(&antichain) {
        return Err(Error::SelfCheck(format!(
            "Dilworth witness of size {} does not match width {width}",
            antichain.len()
        )));
    }
    Ok(DilworthResult {
        value: width,
        antichain: Code::new(antichain),
    })
}

/// Threshold test: ∇(G) = 1, cross-checked against the constructive
/// characterization by repeatedly peeling an isolated or universal
/// vertex. The two must agree.
pub fn is_threshold(g: &Graph) -> Result<bool> {
    let by_dilworth = dilworth_number(g)?.value == 1;
    let by_peeling = peels_to_empty(g);
    if by_dilworth != by_peeling {
        return Err(Error::SelfCheck(format!(
            "threshold tests disagree: dilworth says {by_dilworth}, peeling says {by_peeling}"
        )));
    }
    Ok(by_dilworth)
}

fn peels_to_empty(g: &Graph) -> bool {
    let mut alive = g.all_mask();
    while alive != 0 {
        let found = bits(alive).find(|&u| {
            let deg = g.open(u) & alive;
            deg == 0 || deg == alive & !(1 << u)
        });
        match found {
            Some(u) => alive &= !(1 << u),
            None => return false,
        }
    }
    true
}

/// k + C(k, ⌊k/2⌋): the largest order a graph can have when it admits
/// a solid-locating-dominating code with k codewords.
pub fn sperner_capacity(k: u64) -> Result<u64> {
    if k < 1 {
        return Err(Error::BelowMinimum { min: 1, got: k });
    }
    let b = binomial(k, k / 2)?;
    k.checked_add(b).ok_or(Error::BinomialOverflow { n: k, k: k / 2 })
}

/// The smallest k whose capacity reaches n: a lower bound on both the
/// solid- and self-location-domination numbers of any graph of order n.
pub fn sperner_lower_bound(n: u64) -> Result<u64> {
    if n < 1 {
        return Err(Error::BelowMinimum { min: 1, got: n });
    }
    let mut k = 1u64;
    loop {
        match sperner_capacity(k) {
            Ok(c) if c >= n => return Ok(k),
            // an overflowing capacity certainly exceeds n
            Err(_) => return Ok(k),
            Ok(_) => k += 1,
        }
    }
}

/// Exact binomial coefficient with an explicit overflow error.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return Err(Error::BinomialOverflow { n, k });
        }
    }
    Ok(acc as u64)
}
