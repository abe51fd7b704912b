//! Built-in graph streams: all labeled graphs on a small vertex set
//! (indexed by edge mask, no isomorphism reduction) and all labeled
//! trees via Pruefer sequences (indexed by the sequence read as a base-n
//! number).

use crate::error::{Error, Result};
use crate::graph::Graph;

/// 2^(n(n-1)/2).
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * (n - 1) / 2)
}

/// Largest order the labeled enumerator accepts; 2^21 graphs on seven
/// vertices are already a stretch for exhaustive sweeps.
pub const MAX_LABELED_N: usize = 7;

/// The labeled graph whose edge set is the binary expansion of
/// `index` over the pairs (0,1), (0,2), ..., (n-2,n-1).
pub fn labeled_graph(n: usize, index: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_LABELED_N {
        return Err(Error::TooManyVertices(n));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if index >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges)
}

pub fn labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    labeled_graph(n, 0)?;
    Ok((0..labeled_graph_count(n)).map(move |i| {
        labeled_graph(n, i).expect("index below the labeled graph count")
    }))
}

/// n^(n-2) labeled trees for n >= 2, one for n = 1.
pub fn prufer_tree_count(n: usize) -> u64 {
    match n {
        0 => 0,
        1 | 2 => 1,
        _ => (n as u64).pow(n as u32 - 2),
    }
}

/// Decodes the `index`-th Pruefer sequence into open-neighborhood
/// rows. Buffers must hold `n` entries each.
pub(crate) fn decode_prufer(n: usize, mut index: u64, rows: &mut [u64], degree: &mut [u8], seq: &mut [usize]) {
    debug_assert!(n >= 1);
    rows[..n].fill(0);
    if n == 1 {
        return;
    }
    let len = n - 2;
    degree[..n].fill(1);
    for slot in seq[..len].iter_mut() {
        let digit = (index % n as u64) as usize;
        index /= n as u64;
        *slot = digit;
        degree[digit] += 1;
    }
    let add_edge = |rows: &mut [u64], a: usize, b: usize| {
        rows[a] |= 1 << b;
        rows[b] |= 1 << a;
    };
    let mut ptr = (0..n).find(|&v| degree[v] == 1).expect("a tree has a leaf");
    let mut leaf = ptr;
    for i in 0..len {
        let a = seq[i];
        add_edge(rows, leaf, a);
        degree[a] -= 1;
        if degree[a] == 1 && a < ptr {
            leaf = a;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    add_edge(rows, leaf, n - 1);
}

/// The labeled tree encoded by the `index`-th Pruefer sequence.
pub fn prufer_tree(n: usize, index: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > 64 {
        return Err(Error::TooManyVertices(n));
    }
    let mut rows = vec![0u64; n];
    let mut degree = vec![0u8; n];
    let mut seq = vec![0usize; n];
    decode_prufer(n, index, &mut rows, &mut degree, &mut seq);
    let g = Graph::from_rows(rows);
    debug_assert!(g.is_tree());
    Ok(g)
}

pub fn prufer_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    prufer_tree(n, 0)?;
    Ok((0..prufer_tree_count(n))
        .map(move |i| prufer_tree(n, i).expect("index below the tree count")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labeled_enumeration_counts() {
        assert_eq!(labeled_graph_count(4), 64);
        let graphs: Vec<Graph> = labeled_graphs(4).unwrap().collect();
        assert_eq!(graphs.len(), 64);
        let distinct: HashSet<Graph> = graphs.into_iter().collect();
        assert_eq!(distinct.len(), 64);
        assert!(labeled_graphs(8).is_err());
    }

    #[test]
    fn prufer_trees_are_distinct_labeled_trees() {
        for n in 2..=6 {
            let mut seen = HashSet::new();
            for t in prufer_trees(n).unwrap() {
                assert!(t.is_tree());
                assert!(seen.insert(t));
            }
            assert_eq!(seen.len() as u64, prufer_tree_count(n));
        }
    }

    #[test]
    fn single_vertex_tree() {
        let t = prufer_tree(1, 0).unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(prufer_tree_count(1), 1);
    }
}
