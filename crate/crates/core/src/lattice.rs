//! Tubings and the face lattice of a graph-associahedron.
//!
//! Faces of the polytope of a connected graph on `n` nodes are exactly its
//! tubings; a tubing with `k` tubes is a face of dimension `n - 1 - k`, and
//! `T` lies in the boundary of `T'` when `T ⊇ T'`.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{self, enumerate_tubes, Graph, NodeSet, Relabeled, Tube};
use crate::poset::Poset;

/// A set of pairwise compatible tubes, kept sorted for a canonical identity.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Tubing(Vec<Tube>);

impl Tubing {
    pub fn empty() -> Self {
        Tubing(Vec::new())
    }

    /// Validates the tubes against `g` and checks pairwise compatibility.
    pub fn new(g: &Graph, tubes: &[Tube]) -> Result<Self> {
        let mut v = tubes.to_vec();
        v.sort();
        v.dedup();
        if !graph::is_tubing(g, &v)? {
            return Err(Error::NotATubing(
                v.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" "),
            ));
        }
        Ok(Tubing(v))
    }

    /// Parses node lists, e.g. `[[0], [0, 1]]`.
    pub fn from_lists(g: &Graph, lists: &[&[usize]]) -> Result<Self> {
        let tubes = lists
            .iter()
            .map(|l| Tube::new(g, l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, &tubes)
    }

    pub(crate) fn from_sorted(tubes: Vec<Tube>) -> Self {
        debug_assert!(tubes.windows(2).all(|w| w[0] < w[1]));
        Tubing(tubes)
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, t: Tube) -> bool {
        self.0.binary_search(&t).is_ok()
    }

    pub fn with(&self, t: Tube) -> Tubing {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&t) {
            v.insert(pos, t);
        }
        Tubing(v)
    }

    pub fn without(&self, t: Tube) -> Tubing {
        Tubing(self.0.iter().copied().filter(|&u| u != t).collect())
    }

    pub fn is_superset(&self, other: &Tubing) -> bool {
        other.0.iter().all(|&t| self.contains(t))
    }

    /// Applies `f` to every tube and re-sorts.
    pub fn map(&self, f: impl Fn(Tube) -> Tube) -> Tubing {
        let mut v: Vec<Tube> = self.0.iter().map(|&t| f(t)).collect();
        v.sort();
        Tubing(v)
    }

    pub fn to_lists(&self) -> Vec<Vec<usize>> {
        self.0.iter().map(|t| t.to_vec()).collect()
    }

    pub fn union_nodes(&self) -> NodeSet {
        self.0.iter().fold(NodeSet::EMPTY, |acc, t| acc.union(t.nodes()))
    }
}

impl Ord for Tubing {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Tubing {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Tubing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Tubing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Whether graphs with several components are admitted.
///
/// Disconnected graphs get one extra rule: the tubes of a tubing may not
/// cover every node. For connected graphs that rule is automatic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Connectivity {
    #[default]
    RequireConnected,
    AllowDisconnected,
}

fn check_connectivity(g: &Graph, mode: Connectivity) -> Result<()> {
    if mode == Connectivity::RequireConnected && !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.node_count() == 0 {
        return Err(Error::InvalidGraph("graph has no nodes".into()));
    }
    Ok(())
}

/// Compatibility rows over a fixed tube list.
pub(crate) fn compatibility_rows(g: &Graph, tubes: &[Tube]) -> Vec<FixedBitSet> {
    let k = tubes.len();
    let mut rows = vec![FixedBitSet::with_capacity(k); k];
    for i in 0..k {
        for j in 0..k {
            if i != j && graph::compatible(g, tubes[i].nodes(), tubes[j].nodes()) {
                rows[i].insert(j);
            }
        }
    }
    rows
}

pub fn enumerate_tubings(g: &Graph) -> Result<Vec<Tubing>> {
    enumerate_tubings_with(g, Connectivity::RequireConnected)
}

/// All tubings, sorted by size and then lexicographically.
pub fn enumerate_tubings_with(g: &Graph, mode: Connectivity) -> Result<Vec<Tubing>> {
    check_connectivity(g, mode)?;
    let mut tubes = enumerate_tubes(g);
    tubes.sort();
    let rows = compatibility_rows(g, &tubes);
    let full = g.nodes();

    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut all = FixedBitSet::with_capacity(tubes.len());
    all.insert_range(..);
    grow(&tubes, &rows, full, 0, &all, &mut current, &mut out);
    out.sort();
    Ok(out)
}

fn grow(
    tubes: &[Tube],
    rows: &[FixedBitSet],
    full: NodeSet,
    start: usize,
    candidates: &FixedBitSet,
    current: &mut Vec<usize>,
    out: &mut Vec<Tubing>,
) {
    let covered = current
        .iter()
        .fold(NodeSet::EMPTY, |acc, &i| acc.union(tubes[i].nodes()));
    if covered == full {
        return;
    }
    out.push(Tubing::from_sorted(current.iter().map(|&i| tubes[i]).collect()));
    for i in candidates.ones().filter(|&i| i >= start) {
        let mut next = candidates.clone();
        next.intersect_with(&rows[i]);
        current.push(i);
        grow(tubes, rows, full, i + 1, &next, current, out);
        current.pop();
    }
}

/// The face poset of a graph-associahedron, faces labeled by tubings.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    graph: Graph,
    faces: Vec<Tubing>,
    dims: Vec<usize>,
    covers: Vec<(usize, usize)>,
    index: HashMap<Tubing, usize>,
}

impl PartialEq for FaceLattice {
    fn eq(&self, other: &Self) -> bool {
        self.graph == other.graph
            && self.faces == other.faces
            && self.dims == other.dims
            && self.covers == other.covers
    }
}

impl FaceLattice {
    /// Builds a lattice from a list of tubings; covers connect tubings that
    /// differ by exactly one tube, dimensions are `n - 1 - |T|`.
    pub(crate) fn from_tubings(graph: &Graph, mut faces: Vec<Tubing>) -> FaceLattice {
        faces.sort();
        let n = graph.node_count();
        let index: HashMap<Tubing, usize> =
            faces.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let dims = faces.iter().map(|t| n - 1 - t.len()).collect();
        let mut covers = Vec::new();
        for (i, face) in faces.iter().enumerate() {
            for &t in face.tubes() {
                if let Some(&j) = index.get(&face.without(t)) {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        FaceLattice {
            graph: graph.clone(),
            faces,
            dims,
            covers,
            index,
        }
    }

    pub(crate) fn from_parts(
        graph: &Graph,
        faces: Vec<Tubing>,
        dims: Vec<usize>,
        mut covers: Vec<(usize, usize)>,
    ) -> FaceLattice {
        let index = faces.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        covers.sort_unstable();
        FaceLattice {
            graph: graph.clone(),
            faces,
            dims,
            covers,
            index,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn faces(&self) -> &[Tubing] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `(i, j)` means face `i` is a facet of face `j`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn index_of(&self, t: &Tubing) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.to_poset().rank_counts()
    }

    pub fn to_poset(&self) -> Poset {
        Poset::new(self.dims.clone(), &self.covers)
    }

    /// Faces of dimension zero.
    pub fn vertices(&self) -> impl Iterator<Item = &Tubing> {
        self.faces.iter().zip(&self.dims).filter(|(_, &d)| d == 0).map(|(t, _)| t)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "graph": graph_json(&self.graph),
            "faces": self.faces.iter().zip(&self.dims).map(|(t, d)| json!({
                "tubes": t.to_lists(),
                "dim": d,
            })).collect::<Vec<_>>(),
            "covers": self.covers.iter().map(|&(i, j)| json!([i, j])).collect::<Vec<_>>(),
        })
    }

    /// Hasse diagram in Graphviz DOT, edges pointing from a face to the faces
    /// it bounds.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n");
        for (i, (t, d)) in self.faces.iter().zip(&self.dims).enumerate() {
            s.push_str(&format!("  f{i} [label=\"{t}\" dim={d}];\n"));
        }
        for &(i, j) in &self.covers {
            s.push_str(&format!("  f{i} -> f{j};\n"));
        }
        s.push_str("}\n");
        s
    }
}

pub fn graph_json(g: &Graph) -> serde_json::Value {
    json!({
        "nodes": g.node_count(),
        "edges": g.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
    })
}

pub fn face_poset(g: &Graph) -> Result<FaceLattice> {
    face_poset_with(g, Connectivity::RequireConnected)
}

pub fn face_poset_with(g: &Graph, mode: Connectivity) -> Result<FaceLattice> {
    let faces = enumerate_tubings_with(g, mode)?;
    Ok(FaceLattice::from_tubings(g, faces))
}

/// Face counts indexed by dimension.
pub fn f_vector(g: &Graph) -> Result<Vec<usize>> {
    let n = g.node_count();
    let tubings = enumerate_tubings(g)?;
    let mut counts = vec![0; n];
    for t in &tubings {
        counts[n - 1 - t.len()] += 1;
    }
    Ok(counts)
}

/// Tubings with `n - 1` tubes: the vertices of the polytope.
pub fn maximal_tubings(g: &Graph) -> Result<Vec<Tubing>> {
    let n = g.node_count();
    Ok(enumerate_tubings(g)?
        .into_iter()
        .filter(|t| t.len() + 1 == n)
        .collect())
}

/// The faces of the facet labeled by `t`: all tubings containing `t`.
pub fn facet_interval(g: &Graph, t: Tube) -> Result<FaceLattice> {
    Tube::from_set(g, t.nodes())?;
    let faces = enumerate_tubings(g)?
        .into_iter()
        .filter(|x| x.contains(t))
        .collect();
    Ok(FaceLattice::from_tubings(g, faces))
}

/// The data of the product decomposition of one facet: the facet labeled by
/// `t` against the lattices of the induced subgraph on `t` and of the
/// reconnected complement of `t`.
#[derive(Clone, Debug)]
pub struct FacetProduct {
    pub tube: Tube,
    pub inner: Relabeled,
    pub complement: Relabeled,
    pub inner_lattice: FaceLattice,
    pub complement_lattice: FaceLattice,
    pub interval: FaceLattice,
    /// `map[i][j]` is the interval index of the image of the pair
    /// (inner face `i`, complement face `j`), when that image is a face.
    pub map: Vec<Vec<Option<usize>>>,
    pub is_isomorphism: bool,
    /// First failure found, if any.
    pub failure: Option<String>,
}

impl FacetProduct {
    /// Transport of a complement tube back into `g`, absorbing `t` when the
    /// union is connected.
    pub fn rho(&self, g: &Graph, u: Tube) -> Tube {
        rho(g, self.tube, &self.complement, u)
    }

    pub fn rho_hat(&self, g: &Graph, inner: &Tubing, complement: &Tubing) -> Tubing {
        rho_hat(g, self.tube, &self.inner, &self.complement, inner, complement)
    }
}

fn rho(g: &Graph, t: Tube, complement: &Relabeled, u: Tube) -> Tube {
    let old = complement.to_old(u.nodes());
    let with_t = old.union(t.nodes());
    if g.is_connected_set(with_t) {
        Tube::unchecked(with_t)
    } else {
        Tube::unchecked(old)
    }
}

fn rho_hat(
    g: &Graph,
    t: Tube,
    inner: &Relabeled,
    complement: &Relabeled,
    a: &Tubing,
    b: &Tubing,
) -> Tubing {
    let mut tubes = vec![t];
    tubes.extend(a.tubes().iter().map(|&x| Tube::unchecked(inner.to_old(x.nodes()))));
    tubes.extend(b.tubes().iter().map(|&x| rho(g, t, complement, x)));
    tubes.sort();
    Tubing(tubes)
}

/// Checks that the facet of `t` is combinatorially the product of the
/// polytopes of the induced subgraph on `t` and of its reconnected
/// complement, through the explicit map `rho_hat`.
pub fn facet_product_check(g: &Graph, t: Tube) -> Result<FacetProduct> {
    let interval = facet_interval(g, t)?;
    let inner = g.induced_subgraph(t.nodes());
    let complement = graph::reconnected_complement(g, t)?;
    let inner_lattice = face_poset(&inner.graph)?;
    let complement_lattice = face_poset(&complement.graph)?;

    let mut failure = None;
    let mut map = vec![vec![None; complement_lattice.len()]; inner_lattice.len()];
    let mut hit = HashSet::new();
    for (i, a) in inner_lattice.faces().iter().enumerate() {
        for (j, b) in complement_lattice.faces().iter().enumerate() {
            let image = rho_hat(g, t, &inner, &complement, a, b);
            match interval.index_of(&image) {
                Some(k) => {
                    if interval.dim(k) != inner_lattice.dim(i) + complement_lattice.dim(j) {
                        failure.get_or_insert_with(|| format!("dimension mismatch at {image}"));
                    }
                    if !hit.insert(k) {
                        failure.get_or_insert_with(|| format!("{image} hit twice"));
                    }
                    map[i][j] = Some(k);
                }
                None => {
                    failure.get_or_insert_with(|| format!("{a} x {b} maps to non-face {image}"));
                }
            }
        }
    }
    if failure.is_none() && hit.len() != interval.len() {
        failure = Some(format!(
            "map covers {} of {} faces of the facet",
            hit.len(),
            interval.len()
        ));
    }
    if failure.is_none() {
        // Covers of the product must map exactly onto covers of the facet.
        let mut mapped = HashSet::new();
        for &(lo, hi) in inner_lattice.covers() {
            for j in 0..complement_lattice.len() {
                mapped.insert((map[lo][j].unwrap(), map[hi][j].unwrap()));
            }
        }
        for &(lo, hi) in complement_lattice.covers() {
            for i in 0..inner_lattice.len() {
                mapped.insert((map[i][lo].unwrap(), map[i][hi].unwrap()));
            }
        }
        let target: HashSet<(usize, usize)> = interval.covers().iter().copied().collect();
        if mapped != target {
            failure = Some(format!(
                "cover relations differ: {} mapped vs {} in the facet",
                mapped.len(),
                target.len()
            ));
        }
    }
    Ok(FacetProduct {
        tube: t,
        inner,
        complement,
        inner_lattice,
        complement_lattice,
        interval,
        map,
        is_isomorphism: failure.is_none(),
        failure,
    })
}
