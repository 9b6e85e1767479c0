//! Named graph families and exhaustive lists of small graphs.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Path `0 - 1 - ... - (k-1)`.
pub fn path(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidGraph("path needs at least one node".into()));
    }
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Graph::new(k, &edges)
}

pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidGraph(format!(
            "a simple cycle needs at least 3 nodes, got {k}"
        )));
    }
    let mut edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    edges.push((0, k - 1));
    Graph::new(k, &edges)
}

pub fn complete(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidGraph("complete graph needs at least one node".into()));
    }
    let edges: Vec<_> = (0..k).tuple_combinations().collect();
    Graph::new(k, &edges)
}

/// Star with center `0` and `leaves` leaves `1..=leaves`.
pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    Graph::new(leaves + 1, &edges)
}

/// Parses `path:k`, `cycle:k`, `complete:k` or `star:k`. Returns `None` when
/// the name is not one of these families.
pub fn parse_family(name: &str) -> Option<Result<Graph>> {
    let (family, arg) = name.split_once(':')?;
    let build: fn(usize) -> Result<Graph> = match family {
        "path" => path,
        "cycle" => cycle,
        "complete" => complete,
        "star" => star,
        _ => return None,
    };
    Some(
        arg.parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad size in {name:?}")))
            .and_then(build),
    )
}

/// Encodes the upper triangle of the adjacency matrix under a relabeling.
fn encode(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.node_count();
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(perm[i], perm[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// Canonical form: the largest adjacency code over all relabelings.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.node_count();
    assert!(n <= 11, "canonical_code is brute force; {n} nodes is too many");
    (0..n)
        .permutations(n)
        .map(|p| encode(g, &p))
        .max()
        .unwrap_or(0)
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if code & (1 << bit) != 0 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::new(n, &edges).expect("decoded graph is simple")
}

/// One representative of every isomorphism class of graphs on `n` nodes.
///
/// Built by adding a node to each class on `n - 1` nodes in every possible
/// way; brute-force canonical forms keep this practical up to `n = 7`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![Graph::empty(0).expect("empty graph")];
    }
    let mut codes = BTreeSet::new();
    for base in all_graphs(n - 1) {
        let old_edges = base.edges();
        for nbrs in 0u64..(1 << (n - 1)) {
            let mut edges = old_edges.clone();
            edges.extend((0..n - 1).filter(|&v| nbrs & (1 << v) != 0).map(|v| (v, n - 1)));
            let g = Graph::new(n, &edges).expect("simple");
            codes.insert(canonical_code(&g));
        }
    }
    codes.into_iter().map(|c| decode(n, c)).collect()
}

/// Connected graphs on `n` nodes, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(path(3).unwrap().edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(cycle(3).unwrap().edge_count(), 3);
        assert_eq!(complete(4).unwrap().edge_count(), 6);
        assert_eq!(star(3).unwrap().node_count(), 4);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert!(parse_family("tree:3").is_none());
        assert!(parse_family("path:x").unwrap().is_err());
        assert_eq!(parse_family("cycle:5").unwrap().unwrap(), cycle(5).unwrap());
    }

    #[test]
    fn isomorphism_class_counts() {
        // OEIS A000088 and A001349
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }
}
