//! Deterministic generators for the extremal and realization
//! constructions, each emitted together with its claimed parameters.
//!
//! Constructions never assert their own claims; they emit them as data
//! for the harness and the solvers to verify, which keeps any
//! transcription error detectable.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::order::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimParameter {
    Order,
    GammaLd,
    GammaSld,
    GammaDld,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub parameter: ClaimParameter,
    pub value: u64,
}

/// A generated graph plus the parameter values the construction is
/// supposed to realize.
#[derive(Clone, Debug)]
pub struct ConstructionClaim {
    pub name: String,
    pub graph: Graph,
    pub claims: Vec<Claim>,
}

fn claim(parameter: ClaimParameter, value: u64) -> Claim {
    Claim { parameter, value }
}

/// All non-empty subsets of 0..k-1 in lexicographic order of their
/// sorted element lists.
fn lex_nonempty_subsets(k: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, prefix: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
        for i in start..k {
            prefix.push(i);
            out.push(prefix.clone());
            rec(k, prefix, i + 1, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, &mut Vec::new(), 0, &mut out);
    out
}

/// The size-`size` subsets of 0..k-1 in lexicographic order.
fn lex_subsets_of_size(k: usize, size: usize) -> Vec<Vec<usize>> {
    lex_nonempty_subsets(k)
        .into_iter()
        .filter(|s| s.len() == size)
        .collect()
}

/// Bipartite graph attaining the Sperner order bound: k left vertices,
/// one right vertex per middle-layer subset of the left side, wired to
/// exactly that subset. Claims γ^SLD = k and order k + C(k, ⌊k/2⌋).
///
/// The middle layer is taken at size ⌈k/2⌉. For even k this is the
/// unique maximum layer; for odd k the two middle layers tie and the
/// upper one is the choice that actually makes the left side a
/// self-locating-dominating code, since lower-layer singletons would
/// collide with codeword I-sets.
pub fn sperner_extremal(k: u64) -> Result<ConstructionClaim> {
    if k < 1 {
        return Err(Error::BelowMinimum { min: 1, got: k });
    }
    let width = binomial(k, k / 2)?;
    let order = k.checked_add(width).ok_or(Error::BinomialOverflow { n: k, k: k / 2 })?;
    let ku = k as usize;
    let subsets = lex_subsets_of_size(ku, ku.div_ceil(2));
    debug_assert_eq!(subsets.len() as u64, width);
    let mut edges = Vec::new();
    for (i, subset) in subsets.iter().enumerate() {
        for &u in subset {
            edges.push((u, ku + i));
        }
    }
    let graph = Graph::new(order as usize, &edges)?;
    Ok(ConstructionClaim {
        name: format!("sperner-extremal({k})"),
        graph,
        claims: vec![claim(ClaimParameter::Order, order), claim(ClaimParameter::GammaSld, k)],
    })
}

/// The pair exhibiting an arbitrarily large self-location-domination
/// gap between a graph and its complement: the Sperner extremal graph
/// with the left side completed to a clique, and its complement.
/// Claims γ^SLD(G') = C(k, ⌊k/2⌋) and γ^SLD of the complement = k.
pub fn complement_gap(k: u64) -> Result<(ConstructionClaim, ConstructionClaim)> {
    if k < 4 {
        return Err(Error::BelowMinimum { min: 4, got: k });
    }
    let base = sperner_extremal(k)?;
    let ku = k as usize;
    let mut edges: Vec<(usize, usize)> = base.graph.edges().collect();
    for u in 0..ku {
        for v in u + 1..ku {
            edges.push((u, v));
        }
    }
    let graph = Graph::new(base.graph.n(), &edges)?;
    let complement = graph.complement();
    let width = binomial(k, k / 2)?;
    let primal = ConstructionClaim {
        name: format!("complement-gap({k})"),
        graph,
        claims: vec![claim(ClaimParameter::GammaSld, width)],
    };
    let dual = ConstructionClaim {
        name: format!("complement-gap({k}) complement"),
        graph: complement,
        claims: vec![claim(ClaimParameter::GammaSld, k)],
    };
    Ok((primal, dual))
}

/// Feasibility bound for [`realize_ld_sld`]: b - a <= 2^a - 1.
fn sld_gap_limit(a: u64) -> Result<u64> {
     (1u64.checked_shl(a as u32))
        .map(|p| p - 1)
        .ok_or(Error::Infeasible(format!("2^{a} overflows")))
}

/// A graph with location-domination number `a` and self-location-
/// domination number `b`, for any 0 <= b - a <= 2^a - 1.
pub fn realize_ld_sld(a: u64, b: u64) -> Result<ConstructionClaim> {
    if a < 1 {
        return Err(Error::BelowMinimum { min: 1, got: a });
    }
    if b < a || b - a > sld_gap_limit(a)? {
        return Err(Error::Infeasible(format!(
            "need 0 <= b-a <= 2^a-1 = {}, got a={a}, b={b}",
            sld_gap_limit(a)?
        )));
    }
    let graph = realize_ld_sld_graph(a as usize, b as usize)?;
    Ok(ConstructionClaim {
        name: format!("realize-ld-sld({a},{b})"),
        graph,
        claims: vec![claim(ClaimParameter::GammaLd, a), claim(ClaimParameter::GammaSld, b)],
    })
}

fn realize_ld_sld_graph(a: usize, b: usize) -> Result<Graph> {
    // the two realizations without a general construction are
    // transcribed five-vertex graphs, solver-verified in the tests
    const FIVE_2_4: [(usize, usize); 5] = [(0, 1), (0, 2), (0, 3), (1, 2), (3, 4)];
    const FIVE_2_5: [(usize, usize); 7] =
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)];
    match (a, b - a) {
        (_, 0) => Graph::new(a, &[]),
        (_, 1) => Graph::new(b, &[(0, 1)]),
        (2, 2) => Graph::new(5, &FIVE_2_4),
        (2, 3) => Graph::new(5, &FIVE_2_5),
        (_, gap) if gap == (1 << a) - 1 => realize_sld_extremal(a, b),
        _ => realize_sld_general(a, b),
    }
}

/// The interior case 2 <= b-a <= 2^a-2 with a >= 3: a universal hub
/// u1, singleton tags for the first k left vertices, and distinct
/// proper subsets of the k-set for the remaining right vertices.
fn realize_sld_general(a: usize, b: usize) -> Result<Graph> {
    let gap = b - a;
    // unique k with 2^(k-1) - 2 < b - a <= 2^k - 2
    let k = (2..=a).find(|&k| gap <= (1 << k) - 2).expect("gap <= 2^a - 2");
    let p = b + 1 - a;
    let n = b + 1;
    let hub = a; // u1
    let u = |i: usize| a + i - 1;
    let mut edges: Vec<(usize, usize)> = (0..n).filter(|&w| w != hub).map(|w| (hub, w)).collect();
    let mut used: Vec<Vec<usize>> = vec![(0..k).collect()];
    for i in 2..=k + 1 {
        edges.push((u(i), i - 2));
        used.push(vec![i - 2]);
    }
    let mut stream = lex_nonempty_subsets(k)
        .into_iter()
        .filter(|s| s.len() < k && !used.contains(s));
    for i in k + 2..=p {
        let subset = stream.next().expect("enough unused proper subsets");
        for &v in &subset {
            edges.push((u(i), v));
        }
    }
    Graph::new(n, &edges)
}

/// The extremal case b - a = 2^a - 1: the right side realizes every
/// non-empty subset of the a-set as its left neighborhood, and extra
/// edges make every vertex share a closed neighborhood with another,
/// so all 2^a + a - 1 vertices are forced codewords.
fn realize_sld_extremal(a: usize, b: usize) -> Result<Graph> {
    let p = b - a; // 2^a - 1 right vertices
    let n = a + p;
    let u = |i: usize| a + i - 1;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for i in 1..a {
        edges.push((0, i)); // v1 ~ v_i
    }
    let mut subset_of: Vec<Vec<usize>> = vec![Vec::new(); p + 1];
    subset_of[1] = (0..a).collect();
    for i in 0..a {
        edges.push((u(1), i)); // u1 ~ K
    }
    for i in 2..=a {
        edges.push((u(i), 0));
        edges.push((u(i), i - 1));
        subset_of[i] = vec![0, i - 1];
    }
    let used: Vec<Vec<usize>> = subset_of[1..=a].to_vec();
    let mut stream = lex_nonempty_subsets(a)
        .into_iter()
        .filter(move |s| !used.contains(s));
    for i in a + 1..=p {
        let subset = stream.next().expect("all remaining subsets are distinct");
        for &v in &subset {
            edges.push((u(i), v));
        }
        subset_of[i] = subset;
    }
    for i in 2..=p {
        if subset_of[i].contains(&0) {
            edges.push((u(1), u(i))); // u1 ~ u_i when u_i ~ v1
        }
    }
    for i in 2..=a {
        for j in a + 1..=p {
            if subset_of[j].contains(&(i - 1)) {
                edges.push((u(i), u(j))); // u_i ~ u_j when u_j ~ v_i
            }
        }
    }
    Graph::new(n, &edges)
}

/// Feasibility bound for [`realize_ld_dld`]: b - a <= 2^a - 1 - C(a, ⌈a/2⌉).
fn dld_gap_limit(a: u64) -> Result<u64> {
    Ok(sld_gap_limit(a)? - binomial(a, a.div_ceil(2))?)
}

/// A graph with location-domination number `a` and solid-location-
/// domination number `b`, for any 0 <= b - a <= 2^a - 1 - C(a, ⌈a/2⌉).
pub fn realize_ld_dld(a: u64, b: u64) -> Result<ConstructionClaim> {
    if a < 1 {
        return Err(Error::BelowMinimum { min: 1, got: a });
    }
    if b < a || b - a > dld_gap_limit(a)? {
        return Err(Error::Infeasible(format!(
            "need 0 <= b-a <= 2^a-1-C(a,ceil(a/2)) = {}, got a={a}, b={b}",
            dld_gap_limit(a)?
        )));
    }
    let graph = realize_ld_dld_graph(a as usize, b as usize)?;
    Ok(ConstructionClaim {
        name: format!("realize-ld-dld({a},{b})"),
        graph,
        claims: vec![claim(ClaimParameter::GammaLd, a), claim(ClaimParameter::GammaDld, b)],
    })
}

fn realize_ld_dld_graph(a: usize, b: usize) -> Result<Graph> {
    if a == b {
        // the star with a pendant vertices
        let edges: Vec<(usize, usize)> = (1..=a).map(|i| (0, i)).collect();
        return Graph::new(a + 1, &edges);
    }
    let gap = b - a;
    let limit = |k: usize| (1usize << k) - 1 - binomial(k as u64, k.div_ceil(2) as u64).unwrap() as usize;
    let k = (2..=a).find(|&k| gap <= limit(k)).expect("gap <= limit(a)");
    let mid = binomial(k as u64, (k / 2) as u64).unwrap() as usize;
    let p = gap + mid;
    let n = a + p;
    let u = |i: usize| a + i - 1;
    // complete graph on the a left vertices
    let mut edges: Vec<(usize, usize)> =
        (0..a).flat_map(|i| (i + 1..a).map(move |j| (i, j))).collect();
    let mut used: Vec<Vec<usize>> = vec![(0..k).collect()];
    for i in 0..a {
        edges.push((u(1), i)); // u1 ~ K u K'
    }
    // one right vertex per middle-layer subset of the k-set
    for (off, subset) in lex_subsets_of_size(k, k / 2).into_iter().enumerate() {
        let i = 2 + off;
        for &v in &subset {
            edges.push((u(i), v));
        }
        used.push(subset);
    }
    let mut next = mid + 2;
    if k >= 4 {
        // singleton tags, only needed once the middle layer misses them
        for j in 0..k {
            edges.push((u(next), j));
            used.push(vec![j]);
            next += 1;
        }
    }
    let mut stream = lex_nonempty_subsets(k).into_iter().filter(|s| !used.contains(s));
    for i in next..=p {
        let subset = stream.next().expect("enough unused subsets");
        for &v in &subset {
            edges.push((u(i), v));
        }
    }
    Graph::new(n, &edges)
}

/// Every feasible (a, b) realization input with a bounded below the
/// given limits; used by sweeps and the acceptance tests.
pub fn feasible_sld_pairs(max_a: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for a in 1..=max_a {
        let limit = sld_gap_limit(a).unwrap();
        for gap in 0..=limit {
            out.push((a, a + gap));
        }
    }
    out
}

pub fn feasible_dld_pairs(max_a: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for a in 1..=max_a {
        let limit = dld_gap_limit(a).unwrap();
        for gap in 0..=limit {
            out.push((a, a + gap));
        }
    }
    out
}
