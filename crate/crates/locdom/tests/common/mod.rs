//! Independent oracles for the integration suites. Everything here
//! recomputes results from first principles on plain set structures,
//! deliberately avoiding the bitmask paths of the library under test.

use std::collections::BTreeSet;

use locdom::codes::CodeKind;
use locdom::graph::Graph;

pub type AdjList = Vec<BTreeSet<usize>>;

pub fn adjacency(g: &Graph) -> AdjList {
    let mut adj = vec![BTreeSet::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

pub fn closed_set(adj: &AdjList, u: usize) -> BTreeSet<usize> {
    let mut s = adj[u].clone();
    s.insert(u);
    s
}

fn iset(adj: &AdjList, code: &BTreeSet<usize>, u: usize) -> BTreeSet<usize> {
    closed_set(adj, u).intersection(code).copied().collect()
}

/// Definitional code predicate over plain sets.
pub fn oracle_is_code(adj: &AdjList, code: &BTreeSet<usize>, kind: CodeKind) -> bool {
    assert!(!code.is_empty());
    let n = adj.len();
    let outside: Vec<usize> = (0..n).filter(|u| !code.contains(u)).collect();
    let isets: Vec<BTreeSet<usize>> = outside.iter().map(|&u| iset(adj, code, u)).collect();
    match kind {
        CodeKind::Dom => isets.iter().all(|s| !s.is_empty()),
        CodeKind::Dom2 => isets.iter().all(|s| s.len() >= 2),
        CodeKind::Ld => {
            isets.iter().all(|s| !s.is_empty())
                && (0..isets.len())
                    .all(|i| (i + 1..isets.len()).all(|j| isets[i] != isets[j]))
        }
        CodeKind::Dld => {
            isets.iter().all(|s| !s.is_empty())
                && (0..isets.len()).all(|i| {
                    (0..isets.len())
                        .all(|j| i == j || !isets[i].is_subset(&isets[j]))
                })
        }
        CodeKind::Sld => outside.iter().zip(&isets).all(|(&u, s)| {
            if s.is_empty() {
                return false;
            }
            let mut inter: Option<BTreeSet<usize>> = None;
            for &c in s {
                let nc = closed_set(adj, c);
                inter = Some(match inter {
                    None => nc,
                    Some(acc) => acc.intersection(&nc).copied().collect(),
                });
            }
            inter.unwrap() == BTreeSet::from([u])
        }),
    }
}

/// All non-empty vertex subsets as sorted sets.
pub fn all_subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (1u64..1 << n)
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect()
}

/// Exhaustive minimum code size by scanning every subset.
pub fn oracle_minimum(adj: &AdjList, kind: CodeKind) -> usize {
    let n = adj.len();
    all_subsets(n)
        .iter()
        .filter(|c| oracle_is_code(adj, c, kind))
        .map(|c| c.len())
        .min()
        .expect("the whole vertex set is a code of every kind")
}

/// Maximum antichain of the vicinal preorder by subset scan.
pub fn oracle_dilworth_antichain(adj: &AdjList) -> usize {
    let n = adj.len();
    let leq = |x: usize, y: usize| adj[x].is_subset(&closed_set(adj, y));
    all_subsets(n)
        .iter()
        .filter(|s| {
            s.iter()
                .all(|&x| s.iter().all(|&y| x == y || !(leq(x, y) || leq(y, x))))
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Minimum chain cover of the vicinal preorder by dynamic programming
/// over vertex subsets.
pub fn oracle_chain_cover(adj: &AdjList) -> usize {
    let n = adj.len();
    let leq = |x: usize, y: usize| adj[x].is_subset(&closed_set(adj, y));
    let is_chain = |mask: u64| {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        members
            .iter()
            .all(|&x| members.iter().all(|&y| leq(x, y) || leq(y, x)))
    };
    let full = (1u64 << n) - 1;
    let mut cover = vec![u32::MAX; (full + 1) as usize];
    cover[0] = 0;
    for mask in 1..=full {
        // branch on the lowest uncovered vertex
        let low = mask.trailing_zeros();
        let mut sub = mask;
        let mut best = u32::MAX;
        while sub > 0 {
            if sub >> low & 1 == 1 && is_chain(sub) {
                best = best.min(cover[(mask & !sub) as usize].saturating_add(1));
            }
            sub = (sub - 1) & mask;
        }
        cover[mask as usize] = best;
    }
    cover[full as usize] as usize
}

/// Reference graph6 decoder, written against the format description
/// independently of the library implementation: the first byte is
/// 63 + n, the remaining bytes hold the column-major upper triangle,
/// six bits per byte, most significant first.
pub fn reference_graph6_decode(record: &str) -> (usize, Vec<(usize, usize)>) {
    let values: Vec<u8> = record.bytes().map(|b| {
        assert!((63..=126).contains(&b), "printable graph6 byte");
        b - 63
    }).collect();
    let n = values[0] as usize;
    let mut bitstream = Vec::new();
    for &v in &values[1..] {
        for shift in (0..6).rev() {
            bitstream.push(v >> shift & 1 == 1);
        }
    }
    assert!(bitstream.len() >= n * (n - 1) / 2, "record long enough");
    let mut edges = Vec::new();
    let mut next = 0;
    for col in 1..n {
        for row in 0..col {
            if bitstream[next] {
                edges.push((row, col));
            }
            next += 1;
        }
    }
    (n, edges)
}

/// Deterministic xorshift generator for reproducible random graphs.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Random labeled graph with each edge flipped independently.
pub fn random_graph(rng: &mut Rng, n: usize, density_percent: u64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.below(100) < density_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid random graph")
}

/// The six-vertex graph used in the worked examples: vertices a..f
/// are 0..5, edges ab, ad, bc, be, cf, de, ef.
pub fn example_graph() -> Graph {
    Graph::new(6, &[(0, 1), (0, 3), (1, 2), (1, 4), (2, 5), (3, 4), (4, 5)]).unwrap()
}

/// Labeled graphs on n vertices, indexed by edge mask over the pairs
/// (0,1), (0,2), ..., (n-2,n-1); a reimplementation of the harness
/// enumerator so the tests do not depend on it.
pub fn enumerate_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::new(n, &edges).expect("valid enumerated graph")
    })
}
