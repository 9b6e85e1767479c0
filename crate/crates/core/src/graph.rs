//! Simple graphs on dense node indices, their tubes, and reconnected
//! complements.
//!
//! Node sets are bitmasks, so graphs are capped at [`MAX_NODES`] nodes. That
//! is far beyond anything whose tubings can be enumerated.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_NODES: usize = 64;

/// A set of node indices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// All nodes `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        NodeSet(1u64 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: NodeSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> NodeIter {
        NodeIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the sorted node lists.
    pub fn cmp_lex(self, other: NodeSet) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let d = diff.trailing_zeros();
        let at_or_above = !0u64 << d;
        if self.0 & (1u64 << d) != 0 {
            // self continues with d; other continues with something larger or ends
            if other.0 & at_or_above != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else if self.0 & at_or_above != 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = NodeSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct NodeIter(u64);

impl Iterator for NodeIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// A simple undirected graph on nodes `0..node_count`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    node_count: usize,
    adj: Vec<NodeSet>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and bad indices.
    pub fn new(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if node_count > MAX_NODES {
            return Err(Error::TooManyNodes {
                got: node_count,
                max: MAX_NODES,
            });
        }
        let mut adj = vec![NodeSet::EMPTY; node_count];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= node_count {
                    return Err(Error::InvalidNode {
                        node: w,
                        node_count,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at node {u}")));
            }
            if adj[u].contains(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {u}-{v}")));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { node_count, adj })
    }

    pub fn empty(node_count: usize) -> Result<Self> {
        Self::new(node_count, &[])
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.node_count)
    }

    pub fn neighbors(&self, v: usize) -> NodeSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.node_count && self.adj[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.node_count {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn check_nodes(&self, set: &[usize]) -> Result<NodeSet> {
        let mut s = NodeSet::EMPTY;
        for &v in set {
            if v >= self.node_count {
                return Err(Error::InvalidNode {
                    node: v,
                    node_count: self.node_count,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Union of the neighborhoods of `set`, minus `set` itself.
    pub fn boundary(&self, set: NodeSet) -> NodeSet {
        let mut n = NodeSet::EMPTY;
        for v in set.iter() {
            n = n.union(self.adj[v]);
        }
        n.difference(set)
    }

    /// Whether `set` induces a connected subgraph. The empty set is not connected.
    pub fn is_connected_set(&self, set: NodeSet) -> bool {
        let Some(start) = set.min() else {
            return false;
        };
        let mut seen = NodeSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = NodeSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            next = next.intersection(set).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == set
    }

    pub fn is_connected(&self) -> bool {
        self.node_count > 0 && self.is_connected_set(self.nodes())
    }

    /// Connected components, each as a node set, ordered by smallest node.
    pub fn components(&self) -> Vec<NodeSet> {
        let mut rest = self.nodes();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let mut comp = NodeSet::singleton(v);
            loop {
                let grown = comp.union(self.boundary(comp));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `set`, re-indexed densely in increasing node order.
    pub fn induced_subgraph(&self, set: NodeSet) -> Relabeled {
        let new_to_old = set.to_vec();
        let mut old_to_new = vec![None; self.node_count];
        for (i, &v) in new_to_old.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let mut edges = Vec::new();
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (old_to_new[u], old_to_new[v]) {
                edges.push((a, b));
            }
        }
        let graph = Graph::new(new_to_old.len(), &edges).expect("induced subgraph is simple");
        Relabeled {
            graph,
            old_to_new,
            new_to_old,
        }
    }

    /// Text format: `n <count>` then one `e <u> <v>` per edge.
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.node_count);
        for (u, v) in self.edges() {
            s.push_str(&format!("e {u} {v}\n"));
        }
        s
    }

    /// Parses the text format. Blank lines and `#` comments are skipped.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut node_count = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = || Error::Parse(format!("line {}: {raw:?}", lineno + 1));
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("n") => {
                    if node_count.is_some() {
                        return Err(Error::Parse(format!(
                            "line {}: node count given twice",
                            lineno + 1
                        )));
                    }
                    let n: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    node_count = Some(n);
                }
                Some("e") => {
                    if node_count.is_none() {
                        return Err(Error::Parse(format!(
                            "line {}: edge before the `n` line",
                            lineno + 1
                        )));
                    }
                    let u: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    let v: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
                    edges.push((u, v));
                }
                _ => return Err(bad()),
            }
            if parts.next().is_some() {
                return Err(Error::Parse(format!(
                    "line {}: trailing tokens in {raw:?}",
                    lineno + 1
                )));
            }
        }
        let n = node_count.ok_or_else(|| Error::Parse("missing `n <node_count>` line".into()))?;
        Graph::new(n, &edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.node_count, self.edges())
    }
}

/// A graph derived from another one together with the node transport maps.
#[derive(Clone, Debug)]
pub struct Relabeled {
    pub graph: Graph,
    pub old_to_new: Vec<Option<usize>>,
    pub new_to_old: Vec<usize>,
}

impl Relabeled {
    pub fn to_old(&self, set: NodeSet) -> NodeSet {
        set.iter().map(|v| self.new_to_old[v]).collect()
    }

    /// Maps an old node set into the new labels; nodes absent from the new
    /// graph are dropped.
    pub fn to_new(&self, set: NodeSet) -> NodeSet {
        set.iter()
            .filter_map(|v| self.old_to_new.get(v).copied().flatten())
            .collect()
    }
}

/// A proper, nonempty node set inducing a connected subgraph.
///
/// A `Tube` does not carry its graph; constructors validate against one.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Tube(NodeSet);

impl Tube {
    pub fn new(g: &Graph, nodes: &[usize]) -> Result<Self> {
        let set = g.check_nodes(nodes)?;
        Self::from_set(g, set)
    }

    pub fn from_set(g: &Graph, set: NodeSet) -> Result<Self> {
        if !set.is_subset(g.nodes()) {
            let bad = set.difference(g.nodes()).min().unwrap_or(0);
            return Err(Error::InvalidNode {
                node: bad,
                node_count: g.node_count(),
            });
        }
        if is_tube_set(g, set) {
            Ok(Tube(set))
        } else {
            Err(Error::NotATube(set.to_vec()))
        }
    }

    /// Wraps a set already known to be a tube.
    pub(crate) fn unchecked(set: NodeSet) -> Self {
        Tube(set)
    }

    pub fn nodes(self) -> NodeSet {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.len()
    }

    pub fn is_empty(self) -> bool {
        false
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.0.to_vec()
    }
}

impl Ord for Tube {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp_lex(other.0)
    }
}

impl PartialOrd for Tube {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Tube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Tube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_tube_set(g: &Graph, set: NodeSet) -> bool {
    !set.is_empty() && set != g.nodes() && g.is_connected_set(set)
}

pub fn is_tube(g: &Graph, nodes: &[usize]) -> Result<bool> {
    let set = g.check_nodes(nodes)?;
    Ok(is_tube_set(g, set))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Containment {
    /// The first tube lies inside the second.
    FirstInSecond,
    SecondInFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TubeRelation {
    Nested(Containment),
    Intersecting,
    Adjacent,
    DisjointSeparated,
}

impl TubeRelation {
    pub fn is_compatible(self) -> bool {
        matches!(self, TubeRelation::Nested(_) | TubeRelation::DisjointSeparated)
    }
}

pub(crate) fn relation(g: &Graph, a: NodeSet, b: NodeSet) -> TubeRelation {
    if a.is_subset(b) {
        TubeRelation::Nested(Containment::FirstInSecond)
    } else if b.is_subset(a) {
        TubeRelation::Nested(Containment::SecondInFirst)
    } else if !a.is_disjoint(b) {
        TubeRelation::Intersecting
    } else if !g.boundary(a).is_disjoint(b) {
        // disjoint and some edge joins them, so the union is connected
        TubeRelation::Adjacent
    } else {
        TubeRelation::DisjointSeparated
    }
}

/// Pairwise compatibility test for two tubes of the same graph.
pub(crate) fn compatible(g: &Graph, a: NodeSet, b: NodeSet) -> bool {
    if a.is_subset(b) || b.is_subset(a) {
        return true;
    }
    a.is_disjoint(b) && g.boundary(a).is_disjoint(b)
}

pub fn classify_tubes(g: &Graph, t1: Tube, t2: Tube) -> Result<TubeRelation> {
    for t in [t1, t2] {
        Tube::from_set(g, t.nodes())?;
    }
    if t1 == t2 {
        return Err(Error::EqualTubes(t1.to_vec()));
    }
    Ok(relation(g, t1.nodes(), t2.nodes()))
}

pub fn is_tubing(g: &Graph, tubes: &[Tube]) -> Result<bool> {
    for t in tubes {
        Tube::from_set(g, t.nodes())?;
    }
    for (i, a) in tubes.iter().enumerate() {
        for b in &tubes[i + 1..] {
            if a != b && !compatible(g, a.nodes(), b.nodes()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Orders tubes by decreasing size, ties broken lexicographically.
pub fn decreasing_size_order(a: &Tube, b: &Tube) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

/// Every tube of `g`, sorted by decreasing size and then lexicographically.
pub fn enumerate_tubes(g: &Graph) -> Vec<Tube> {
    let full = g.nodes();
    let mut seen: HashSet<NodeSet> = HashSet::new();
    let mut frontier: Vec<NodeSet> = (0..g.node_count()).map(NodeSet::singleton).collect();
    seen.extend(frontier.iter().copied());
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in frontier {
            for v in g.boundary(s).iter() {
                let grown = s.union(NodeSet::singleton(v));
                if seen.insert(grown) {
                    next.push(grown);
                }
            }
        }
        frontier = next;
    }
    let mut tubes: Vec<Tube> = seen
        .into_iter()
        .filter(|&s| s != full)
        .map(Tube)
        .collect();
    tubes.sort_by(decreasing_size_order);
    tubes
}

/// The reconnected complement of `t`: nodes outside `t`, with `a`-`b` joined
/// whenever `{a, b}` or `{a, b} ∪ t` is connected in `g`.
pub fn reconnected_complement(g: &Graph, t: Tube) -> Result<Relabeled> {
    Tube::from_set(g, t.nodes())?;
    let rest = g.nodes().difference(t.nodes());
    let new_to_old = rest.to_vec();
    let mut old_to_new = vec![None; g.node_count()];
    for (i, &v) in new_to_old.iter().enumerate() {
        old_to_new[v] = Some(i);
    }
    let touches_t = g.boundary(t.nodes());
    let mut edges = Vec::new();
    for (i, &a) in new_to_old.iter().enumerate() {
        for (j, &b) in new_to_old.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) || (touches_t.contains(a) && touches_t.contains(b)) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(new_to_old.len(), &edges)?;
    Ok(Relabeled {
        graph,
        old_to_new,
        new_to_old,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    fn path3() -> Graph {
        catalog::path(3).unwrap()
    }

    fn tube(g: &Graph, nodes: &[usize]) -> Tube {
        Tube::new(g, nodes).unwrap()
    }

    #[test]
    fn tube_predicate() {
        let g = path3();
        assert!(is_tube(&g, &[0, 1]).unwrap());
        assert!(!is_tube(&g, &[0, 2]).unwrap());
        assert!(!is_tube(&g, &[0, 1, 2]).unwrap());
        assert!(!is_tube(&g, &[]).unwrap());
        assert_eq!(
            is_tube(&g, &[3]),
            Err(Error::InvalidNode {
                node: 3,
                node_count: 3
            })
        );
    }

    #[test]
    fn classification_on_the_path() {
        let g = path3();
        use TubeRelation::*;
        assert_eq!(
            classify_tubes(&g, tube(&g, &[0]), tube(&g, &[0, 1])).unwrap(),
            Nested(Containment::FirstInSecond)
        );
        assert_eq!(
            classify_tubes(&g, tube(&g, &[0, 1]), tube(&g, &[0])).unwrap(),
            Nested(Containment::SecondInFirst)
        );
        assert_eq!(
            classify_tubes(&g, tube(&g, &[0, 1]), tube(&g, &[1, 2])).unwrap(),
            Intersecting
        );
        assert_eq!(
            classify_tubes(&g, tube(&g, &[0]), tube(&g, &[1])).unwrap(),
            Adjacent
        );
        assert_eq!(
            classify_tubes(&g, tube(&g, &[0]), tube(&g, &[2])).unwrap(),
            DisjointSeparated
        );
        let t = tube(&g, &[1]);
        assert_eq!(classify_tubes(&g, t, t), Err(Error::EqualTubes(vec![1])));
        let fake = Tube::unchecked(NodeSet::from_iter([0, 2]));
        assert!(matches!(
            classify_tubes(&g, fake, t),
            Err(Error::NotATube(_))
        ));
    }

    #[test]
    fn tubing_predicate() {
        let g = path3();
        assert!(is_tubing(&g, &[tube(&g, &[0]), tube(&g, &[2])]).unwrap());
        assert!(!is_tubing(&g, &[tube(&g, &[0]), tube(&g, &[1])]).unwrap());
        assert!(is_tubing(&g, &[]).unwrap());
        let fake = Tube::unchecked(NodeSet::from_iter([0, 2]));
        assert!(is_tubing(&g, &[fake]).is_err());
    }

    #[test]
    fn tubes_of_small_graphs() {
        let g = path3();
        let got: Vec<Vec<usize>> = enumerate_tubes(&g).into_iter().map(Tube::to_vec).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 2], vec![0], vec![1], vec![2]]);
        assert_eq!(enumerate_tubes(&catalog::complete(3).unwrap()).len(), 6);
        assert!(enumerate_tubes(&Graph::empty(1).unwrap()).is_empty());
    }

    #[test]
    fn path_tube_count_matches_interval_count() {
        for m in 1..=8 {
            let g = catalog::path(m).unwrap();
            // brute force over all proper nonempty subsets
            let brute = (1u64..(1 << m) - 1)
                .filter(|&b| g.is_connected_set(NodeSet::from_bits(b)))
                .count();
            assert_eq!(enumerate_tubes(&g).len(), brute);
            assert_eq!(brute, m * (m + 1) / 2 - 1);
        }
    }

    #[test]
    fn disconnected_graph_tubes_include_components() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        let tubes: Vec<_> = enumerate_tubes(&g).into_iter().map(Tube::to_vec).collect();
        assert!(tubes.contains(&vec![0, 1]));
        assert!(tubes.contains(&vec![2]));
    }

    #[test]
    fn reconnected_complements() {
        let g = path3();
        let r = reconnected_complement(&g, tube(&g, &[1])).unwrap();
        assert_eq!(r.graph.edges(), vec![(0, 1)]);
        assert_eq!(r.new_to_old, vec![0, 2]);

        let p4 = catalog::path(4).unwrap();
        let r = reconnected_complement(&p4, tube(&p4, &[1, 2])).unwrap();
        assert_eq!(r.new_to_old, vec![0, 3]);
        assert_eq!(r.graph.edges(), vec![(0, 1)]);

        let c4 = catalog::cycle(4).unwrap();
        let r = reconnected_complement(&c4, tube(&c4, &[0])).unwrap();
        assert_eq!(r.new_to_old, vec![1, 2, 3]);
        assert_eq!(r.graph.edges(), vec![(0, 1), (0, 2), (1, 2)]);

        let fake = Tube::unchecked(NodeSet::from_iter([0, 2]));
        assert!(reconnected_complement(&g, fake).is_err());
    }

    #[test]
    fn classification_is_exclusive_and_symmetric() {
        for n in 1..=5 {
            for g in catalog::connected_graphs(n) {
                let tubes = enumerate_tubes(&g);
                for &a in &tubes {
                    for &b in &tubes {
                        if a == b {
                            continue;
                        }
                        let ab = classify_tubes(&g, a, b).unwrap();
                        let ba = classify_tubes(&g, b, a).unwrap();
                        let flipped = match ab {
                            TubeRelation::Nested(Containment::FirstInSecond) => {
                                TubeRelation::Nested(Containment::SecondInFirst)
                            }
                            TubeRelation::Nested(Containment::SecondInFirst) => {
                                TubeRelation::Nested(Containment::FirstInSecond)
                            }
                            other => other,
                        };
                        assert_eq!(ba, flipped);
                        // independent restatement of the definitions
                        let (x, y) = (a.nodes(), b.nodes());
                        let expect = if x.is_subset(y) || y.is_subset(x) {
                            "nested"
                        } else if !x.is_disjoint(y) {
                            "intersecting"
                        } else if g.is_connected_set(x.union(y)) {
                            "adjacent"
                        } else {
                            "separated"
                        };
                        let got = match ab {
                            TubeRelation::Nested(_) => "nested",
                            TubeRelation::Intersecting => "intersecting",
                            TubeRelation::Adjacent => "adjacent",
                            TubeRelation::DisjointSeparated => "separated",
                        };
                        assert_eq!(got, expect, "{g:?} {a} {b}");
                        assert_eq!(ab.is_compatible(), compatible(&g, x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn reconnected_complement_stays_connected() {
        for n in 2..=6 {
            for g in catalog::connected_graphs(n) {
                for t in enumerate_tubes(&g) {
                    let r = reconnected_complement(&g, t).unwrap();
                    assert!(r.graph.is_connected(), "{g:?} minus {t}");
                }
            }
        }
    }

    #[test]
    fn text_format_round_trip_and_errors() {
        let g = catalog::cycle(4).unwrap();
        assert_eq!(Graph::parse_text(&g.to_text()).unwrap(), g);
        let parsed = Graph::parse_text("# a triangle\n\nn 3\ne 0 1 # first\ne 1 2\ne 2 0\n").unwrap();
        assert_eq!(parsed, catalog::complete(3).unwrap());
        assert!(Graph::parse_text("e 0 1\n").is_err());
        assert!(Graph::parse_text("n 2\ne 0 0\n").is_err());
        assert!(Graph::parse_text("n 2\ne 0 1\ne 1 0\n").is_err());
        assert!(Graph::parse_text("n 2\ne 0 2\n").is_err());
        assert!(Graph::parse_text("n 2\nx\n").is_err());
    }

    proptest! {
        #[test]
        fn lex_order_matches_sorted_lists(a in 0u64..4096, b in 0u64..4096) {
            let (x, y) = (NodeSet::from_bits(a), NodeSet::from_bits(b));
            prop_assert_eq!(x.cmp_lex(y), x.to_vec().cmp(&y.to_vec()));
        }

        #[test]
        fn tube_enumeration_ignores_edge_order(
            mask in 0u32..(1 << 15),
            seed in any::<u64>(),
        ) {
            let all: Vec<(usize, usize)> =
                (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).collect();
            let mut edges: Vec<(usize, usize)> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let g1 = Graph::new(6, &edges).unwrap();
            // deterministic shuffle and endpoint flip
            let mut s = seed;
            for i in (1..edges.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (s >> 33) as usize % (i + 1);
                edges.swap(i, j);
            }
            let flipped: Vec<_> = edges
                .iter()
                .enumerate()
                .map(|(i, &(u, v))| if (seed >> (i % 64)) & 1 == 1 { (v, u) } else { (u, v) })
                .collect();
            let g2 = Graph::new(6, &flipped).unwrap();
            prop_assert_eq!(enumerate_tubes(&g1), enumerate_tubes(&g2));
        }
    }
}
