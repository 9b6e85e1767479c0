//! The minimally blown-up Coxeter complex, assembled from one copy of the
//! graph-associahedron per group element.
//!
//! A cell is a class of pairs `(w, T)` with `T` a tubing of the Coxeter
//! graph. Crossing the facet `t` of chamber `w` lands in chamber `w s_t`,
//! where `s_t` is the mock reflection of `t`. Inside the neighbouring
//! chamber the tubes nested in `t` carry different labels: conjugation by
//! `s_t` permutes the generators of `t` by a diagram automorphism `sigma_t`,
//! so the move is
//!
//! ```text
//! (w, T)  ~  (w s_t, sigma_t(T))      for every t in T,
//! ```
//!
//! with `sigma_t` acting on tubes contained in `t` and fixing all others.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{enumerate_tubes, Graph, NodeSet, Tube};
use crate::lattice::{face_poset, FaceLattice, Tubing};

use super::group::{CoxeterGroup, GroupElement, GroupLimits};
use super::system::CoxeterSystem;

/// Applies the diagram automorphism of `t` to the tubes nested in `t`.
fn twist_tubing(t: Tube, sigma: &[usize], tubing: &Tubing) -> Tubing {
    tubing.map(|u| twist_tube(t, sigma, u))
}

fn twist_tube(t: Tube, sigma: &[usize], u: Tube) -> Tube {
    if u.nodes().is_subset(t.nodes()) {
        Tube::unchecked(u.nodes().iter().map(|v| sigma[v]).collect())
    } else {
        u
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] as usize != r {
            r = self.0[r] as usize;
        }
        let mut y = x;
        while self.0[y] as usize != r {
            let next = self.0[y] as usize;
            self.0[y] = r as u32;
            y = next;
        }
        r
    }

    /// Keeps the smaller index as root so roots are minimal members.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo as u32;
        }
    }
}

/// One cell of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub dim: usize,
    /// The minimal member under (element index, tubing order).
    pub rep: (GroupElement, Tubing),
    pub members: Vec<(GroupElement, Tubing)>,
    /// Indices of the cells of dimension `dim - 1` on the boundary.
    pub boundary: Vec<usize>,
    /// Indices of the cells of dimension `dim + 1` containing this one.
    pub coboundary: Vec<usize>,
}

/// Cells of the complex, sorted by dimension and then representative.
#[derive(Clone, Debug)]
pub struct TiledComplex {
    group: CoxeterGroup,
    lattice: FaceLattice,
    cells: Vec<Cell>,
    /// Cell of each `(element, tubing index)` pair.
    cell_of: Vec<u32>,
    /// Members whose own boundary differed from their class's.
    boundary_conflicts: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexReport {
    pub counts: Vec<usize>,
    pub top_cells: usize,
    pub group_order: usize,
    pub euler_characteristic: i64,
    pub failures: Vec<String>,
}

impl ComplexReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Twists of every tube, indexed like `enumerate_tubes`.
fn tube_twists(group: &CoxeterGroup, tubes: &[Tube]) -> Result<HashMap<Tube, Vec<usize>>> {
    tubes
        .iter()
        .map(|&t| Ok((t, group.longest_element_twist(t.nodes())?)))
        .collect()
}

impl TiledComplex {
    pub fn build(sys: &CoxeterSystem) -> Result<Self> {
        Self::build_with(sys, GroupLimits::from_env()?)
    }

    pub fn build_with(sys: &CoxeterSystem, limits: GroupLimits) -> Result<Self> {
        let group = CoxeterGroup::enumerate(sys, limits)?;
        Self::from_group(group)
    }

    pub fn from_group(group: CoxeterGroup) -> Result<Self> {
        let graph = group.graph();
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let lattice = face_poset(&graph)?;
        let faces = lattice.faces();
        let nf = faces.len();
        let twists = tube_twists(&group, &enumerate_tubes(&graph))?;
        let mocks: HashMap<Tube, GroupElement> = twists
            .keys()
            .map(|&t| Ok((t, group.mock_reflection(t)?)))
            .collect::<Result<_>>()?;

        // moves[f] = (mock reflection, target tubing) for every tube of face f
        let mut moves: Vec<Vec<(GroupElement, usize)>> = Vec::with_capacity(nf);
        for face in faces {
            let mut row = Vec::new();
            for &t in face.tubes() {
                let image = twist_tubing(t, &twists[&t], face);
                let j = lattice.index_of(&image).ok_or_else(|| {
                    Error::Consistency(format!("twist of {face} across {t} is not a tubing"))
                })?;
                row.push((mocks[&t], j));
            }
            moves.push(row);
        }

        let order = group.order();
        let key = |w: GroupElement, f: usize| w.index() * nf + f;
        let mut uf = UnionFind::new(order * nf);
        for w in group.elements() {
            for (f, row) in moves.iter().enumerate() {
                for &(s, target) in row {
                    uf.union(key(w, f), key(group.mul(w, s), target));
                }
            }
        }

        // classes keyed by their minimal member
        let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for k in 0..order * nf {
            let root = uf.find(k);
            // the root is the minimal key, hence minimal (element, tubing)
            classes
                .entry((lattice.dim(root % nf), root))
                .or_default()
                .push(k);
        }
        let mut cell_of = vec![0u32; order * nf];
        let mut cells = Vec::with_capacity(classes.len());
        for ((dim, root), members) in classes {
            for &k in &members {
                cell_of[k] = cells.len() as u32;
            }
            let pair = |k: usize| (group.element(k / nf), faces[k % nf].clone());
            cells.push(Cell {
                dim,
                rep: pair(root),
                members: members.iter().map(|&k| pair(k)).collect(),
                boundary: Vec::new(),
                coboundary: Vec::new(),
            });
        }

        // boundary of a pair: the pairs (w, T') with T' one tube larger
        let mut lower: Vec<Vec<usize>> = vec![Vec::new(); nf];
        for &(lo, hi) in lattice.covers() {
            lower[hi].push(lo);
        }
        let mut boundary_conflicts = 0;
        let mut class_keys: Vec<Vec<usize>> = vec![Vec::new(); cells.len()];
        for k in 0..order * nf {
            class_keys[cell_of[k] as usize].push(k);
        }
        for (c, keys) in class_keys.iter().enumerate() {
            let mut union = BTreeSet::new();
            let mut per_member = Vec::with_capacity(keys.len());
            for &k in keys {
                let w = k / nf;
                let b: BTreeSet<usize> = lower[k % nf]
                    .iter()
                    .map(|&lo| cell_of[w * nf + lo] as usize)
                    .collect();
                union.extend(b.iter().copied());
                per_member.push(b);
            }
            boundary_conflicts += per_member.iter().filter(|b| **b != union).count();
            cells[c].boundary = union.into_iter().collect();
        }
        for c in 0..cells.len() {
            for b in cells[c].boundary.clone() {
                cells[b].coboundary.push(c);
            }
        }
        Ok(TiledComplex {
            group,
            lattice,
            cells,
            cell_of,
            boundary_conflicts,
        })
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn graph(&self) -> &Graph {
        self.lattice.graph()
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn dimension(&self) -> usize {
        self.graph().node_count() - 1
    }

    /// The cell containing the pair `(w, T)`.
    pub fn cell_of(&self, w: GroupElement, t: &Tubing) -> Result<usize> {
        let f = self
            .lattice
            .index_of(t)
            .ok_or_else(|| Error::NotATubing(t.to_string()))?;
        Ok(self.cell_of[w.index() * self.lattice.len() + f] as usize)
    }

    /// Cell counts indexed by dimension.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.dimension() + 1];
        for c in &self.cells {
            counts[c.dim] += 1;
        }
        counts
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// Checks class sizes, chamber bijection, the pseudo-manifold property,
    /// normal crossings in rank 3, and well-defined boundaries.
    pub fn verify(&self) -> ComplexReport {
        let mut failures = Vec::new();
        let top = self.dimension();
        let counts = self.counts();
        for c in &self.cells {
            let codim = top - c.dim;
            if c.members.len() != 1 << codim {
                failures.push(format!(
                    "cell {} has {} members, expected {}",
                    describe(&self.group, &c.rep),
                    c.members.len(),
                    1usize << codim
                ));
            }
            let chambers: BTreeSet<GroupElement> = c.members.iter().map(|m| m.0).collect();
            if chambers.len() != c.members.len() {
                failures.push(format!("cell {} meets a chamber twice", describe(&self.group, &c.rep)));
            }
            if top > 0 && codim == 1 && c.coboundary.len() != 2 {
                failures.push(format!(
                    "codimension-1 cell {} lies in {} top cells",
                    describe(&self.group, &c.rep),
                    c.coboundary.len()
                ));
            }
            if top == 2 && c.dim == 0 && chambers.len() != 4 {
                failures.push(format!(
                    "vertex {} lies in {} top cells",
                    describe(&self.group, &c.rep),
                    chambers.len()
                ));
            }
        }
        let top_cells: BTreeSet<GroupElement> = self
            .cells
            .iter()
            .filter(|c| c.dim == top)
            .map(|c| c.rep.0)
            .collect();
        if top_cells.len() != self.group.order() || counts[top] != self.group.order() {
            failures.push(format!(
                "{} top cells for a group of order {}",
                counts[top],
                self.group.order()
            ));
        }
        if self.boundary_conflicts > 0 {
            failures.push(format!(
                "{} members disagree with their class boundary",
                self.boundary_conflicts
            ));
        }
        ComplexReport {
            counts: counts.clone(),
            top_cells: counts[top],
            group_order: self.group.order(),
            euler_characteristic: self.euler_characteristic(),
            failures,
        }
    }

    /// Facets whose tube has at least two nodes, grouped into connected
    /// circles through vertices shared by two such facets of one tube type.
    /// Surfaces only.
    pub fn exceptional_divisors(&self) -> Result<Vec<DivisorComponent>> {
        if self.dimension() != 2 {
            return Err(Error::UnsupportedDimension(format!(
                "exceptional divisors are computed for rank 3, got rank {}",
                self.group.rank()
            )));
        }
        let tube_of = |c: &Cell| c.rep.1.tubes()[0];
        let divisor: Vec<usize> = (0..self.cells.len())
            .filter(|&i| self.cells[i].dim == 1 && tube_of(&self.cells[i]).len() >= 2)
            .collect();
        let pos: HashMap<usize, usize> = divisor.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let mut uf = UnionFind::new(divisor.len());
        for v in self.cells.iter().filter(|c| c.dim == 0) {
            let mut by_tube: BTreeMap<Tube, Vec<usize>> = BTreeMap::new();
            for &e in &v.coboundary {
                if let Some(&i) = pos.get(&e) {
                    by_tube.entry(tube_of(&self.cells[e])).or_default().push(i);
                }
            }
            for edges in by_tube.values() {
                for w in edges.windows(2) {
                    uf.union(w[0], w[1]);
                }
            }
        }
        let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..divisor.len() {
            comps.entry(uf.find(i)).or_default().push(divisor[i]);
        }
        Ok(comps
            .into_values()
            .map(|edges| DivisorComponent {
                tube: tube_of(&self.cells[edges[0]]),
                edges,
            })
            .collect())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut by_dim: Vec<Vec<serde_json::Value>> = vec![Vec::new(); self.dimension() + 1];
        for (i, c) in self.cells.iter().enumerate() {
            by_dim[c.dim].push(json!({
                "id": i,
                "element": self.group.word_string(c.rep.0),
                "tubing": c.rep.1.to_lists(),
                "members": c.members.len(),
                "boundary": c.boundary,
            }));
        }
        let divisors = match self.exceptional_divisors() {
            Ok(d) => json!(d
                .iter()
                .map(|c| json!({ "tube": c.tube.to_vec(), "edges": c.edges }))
                .collect::<Vec<_>>()),
            Err(_) => serde_json::Value::Null,
        };
        json!({
            "system": self.group.system().label(),
            "group_order": self.group.order(),
            "counts": self.counts(),
            "euler_characteristic": self.euler_characteristic(),
            "cells": by_dim,
            "divisors": divisors,
        })
    }
}

fn describe(group: &CoxeterGroup, (w, t): &(GroupElement, Tubing)) -> String {
    format!("({}, {})", group.word_string(*w), t)
}

/// A connected circle of blow-up facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorComponent {
    pub tube: Tube,
    /// Cell indices of the edges.
    pub edges: Vec<usize>,
}

pub fn build_tiled_complex(sys: &CoxeterSystem) -> Result<TiledComplex> {
    TiledComplex::build(sys)
}

pub fn euler_characteristic(c: &TiledComplex) -> i64 {
    c.euler_characteristic()
}

pub fn exceptional_divisors(sys: &CoxeterSystem) -> Result<Vec<DivisorComponent>> {
    if sys.rank() != 3 {
        return Err(Error::UnsupportedDimension(format!(
            "exceptional divisors are computed for rank 3, got rank {}",
            sys.rank()
        )));
    }
    TiledComplex::build(sys)?.exceptional_divisors()
}

/// The local group around a face: generated by the facet crossings of the
/// chambers meeting the face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStabilizer {
    /// Chambers meeting the face, starting from the given one.
    pub chambers: Vec<GroupElement>,
    /// Mock reflections of the tubes as seen from the given chamber.
    pub generators: Vec<GroupElement>,
    pub order: usize,
}

/// Orbit of `(w, labels)` under the facet crossings; crossing `i` moves to
/// `w s_{labels[i]}` and twists every label.
fn crossing(
    group: &CoxeterGroup,
    twists: &HashMap<Tube, Vec<usize>>,
    (w, labels): &(GroupElement, Vec<Tube>),
    i: usize,
) -> Result<(GroupElement, Vec<Tube>)> {
    let t = labels[i];
    let sigma = &twists[&t];
    let next = group.mul(*w, group.mock_reflection(t)?);
    Ok((next, labels.iter().map(|&u| twist_tube(t, sigma, u)).collect()))
}

/// The stabilizer of the face `(w, T)`: the crossings through the facets
/// of `T` generate `(Z/2)^|T|`. Order and commutation are checked; a
/// violation is a consistency error.
pub fn face_stabilizer(group: &CoxeterGroup, w: GroupElement, tubing: &Tubing) -> Result<FaceStabilizer> {
    let graph = group.graph();
    let tubing = Tubing::new(&graph, tubing.tubes())?;
    // crossings relabel nested tubes, so every tube may need its twist
    let twists = tube_twists(group, &enumerate_tubes(&graph))?;
    let k = tubing.len();
    let start = (w, tubing.tubes().to_vec());
    let mut orbit = vec![start.clone()];
    let mut i = 0;
    while i < orbit.len() {
        let state = orbit[i].clone();
        i += 1;
        for g in 0..k {
            let next = crossing(group, &twists, &state, g)?;
            if crossing(group, &twists, &next, g)? != state {
                return Err(Error::Consistency(format!("crossing {g} is not an involution")));
            }
            for h in 0..g {
                let gh = crossing(group, &twists, &crossing(group, &twists, &state, h)?, g)?;
                let hg = crossing(group, &twists, &next, h)?;
                if gh != hg {
                    return Err(Error::Consistency(format!(
                        "crossings through {} and {} do not commute at {}",
                        state.1[g],
                        state.1[h],
                        group.word_string(state.0)
                    )));
                }
            }
            if !orbit.contains(&next) {
                orbit.push(next);
            }
        }
    }
    if orbit.len() != 1 << k {
        return Err(Error::Consistency(format!(
            "stabilizer of {tubing} has order {}, expected {}",
            orbit.len(),
            1usize << k
        )));
    }
    let chambers: Vec<GroupElement> = orbit.iter().map(|s| s.0).collect();
    if chambers.iter().collect::<BTreeSet<_>>().len() != chambers.len() {
        return Err(Error::Consistency(format!("stabilizer of {tubing} repeats a chamber")));
    }
    Ok(FaceStabilizer {
        chambers,
        generators: tubing
            .tubes()
            .iter()
            .map(|&t| group.mock_reflection(t))
            .collect::<Result<_>>()?,
        order: orbit.len(),
    })
}

/// The subgroup of `W` generated by the mock reflections of `T`, without
/// relabeling across facets. Non-abelian as soon as two nested tubes have
/// a nontrivial twist between them.
pub fn untwisted_mock_subgroup(group: &CoxeterGroup, tubing: &Tubing) -> Result<Vec<GroupElement>> {
    let gens: Vec<GroupElement> = tubing
        .tubes()
        .iter()
        .map(|&t| group.mock_reflection(t))
        .collect::<Result<_>>()?;
    let mut seen = vec![group.identity()];
    let mut mark = BTreeSet::from([group.identity()]);
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        i += 1;
        for &g in &gens {
            let y = group.mul(x, g);
            if mark.insert(y) {
                seen.push(y);
            }
        }
    }
    Ok(mark.into_iter().collect())
}

/// Points blown up in a rank-3 complex: one per left coset of each rank-2
/// parabolic subgroup with `m >= 3`, counted from the group directly.
pub fn blown_up_points(group: &CoxeterGroup) -> Result<usize> {
    if group.rank() != 3 {
        return Err(Error::UnsupportedDimension(format!(
            "blown-up points are counted for rank 3, got rank {}",
            group.rank()
        )));
    }
    let sys = group.system();
    let mut total = 0;
    for i in 0..3 {
        for j in i + 1..3 {
            if sys.m(i, j) >= 3 {
                total += group.coset_count(NodeSet::from_iter([i, j]));
            }
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(name: &str) -> TiledComplex {
        TiledComplex::build_with(&CoxeterSystem::parse(name).unwrap(), GroupLimits::default()).unwrap()
    }

    #[test]
    fn a2_is_a_hexagon() {
        let c = complex("A2");
        assert_eq!(c.counts(), vec![6, 6]);
        assert_eq!(c.euler_characteristic(), 0);
        assert!(c.verify().ok(), "{:?}", c.verify());
    }

    #[test]
    fn a3_counts() {
        let c = complex("A3");
        let report = c.verify();
        assert!(report.ok(), "{report:?}");
        assert_eq!(c.counts(), vec![30, 60, 24]);
        assert_eq!(c.euler_characteristic(), -6);
        assert_eq!(blown_up_points(c.group()).unwrap(), 8);
    }

    #[test]
    fn b3_counts() {
        let c = complex("B3");
        assert!(c.verify().ok());
        assert_eq!(c.counts(), vec![60, 120, 48]);
        assert_eq!(c.euler_characteristic(), -12);
        assert_eq!(blown_up_points(c.group()).unwrap(), 14);
    }

    #[test]
    fn every_chamber_is_a_pentagon() {
        let c = complex("A3");
        for cell in c.cells().iter().filter(|c| c.dim == 2) {
            assert_eq!(cell.boundary.len(), 5);
        }
    }

    #[test]
    fn divisors_of_a3() {
        let c = complex("A3");
        let d = c.exceptional_divisors().unwrap();
        let total: usize = d.iter().map(|c| c.edges.len()).sum();
        assert_eq!(total, 24);
        // one circle per blown-up point, each the antipodal quotient of a hexagon
        assert_eq!(d.len(), 8);
        assert!(d.iter().all(|c| c.edges.len() == 3));
        assert!(complex("A4").exceptional_divisors().is_err());
    }

    #[test]
    fn stabilizers_in_a3() {
        let g = CoxeterGroup::enumerate(&CoxeterSystem::parse("A3").unwrap(), GroupLimits::default()).unwrap();
        let graph = g.graph();
        let f = Tubing::from_lists(&graph, &[&[0, 1]]).unwrap();
        let st = face_stabilizer(&g, g.identity(), &f).unwrap();
        assert_eq!(st.chambers, vec![g.identity(), g.from_word(&[0, 1, 0])]);
        let klein = Tubing::from_lists(&graph, &[&[0], &[2]]).unwrap();
        let st = face_stabilizer(&g, g.identity(), &klein).unwrap();
        assert_eq!(st.order, 4);
        let mut ch = st.chambers.clone();
        ch.sort();
        let mut expect = vec![g.identity(), g.generator(0), g.generator(2), g.from_word(&[0, 2])];
        expect.sort();
        assert_eq!(ch, expect);
        assert_eq!(face_stabilizer(&g, g.identity(), &Tubing::empty()).unwrap().order, 1);

        // the vertex between facets {1} and {0,1}
        let alpha = Tubing::from_lists(&graph, &[&[1], &[0, 1]]).unwrap();
        let st = face_stabilizer(&g, g.identity(), &alpha).unwrap();
        let mut ch = st.chambers.clone();
        ch.sort();
        let mut expect = vec![g.identity(), g.generator(1), g.from_word(&[0, 1, 0]), g.from_word(&[0, 1])];
        expect.sort();
        assert_eq!(ch, expect);
        // without relabeling the generated subgroup is all of W_{x,y}
        assert_eq!(untwisted_mock_subgroup(&g, &alpha).unwrap().len(), 6);
    }

    #[test]
    fn json_export() {
        let c = complex("A3");
        let v = c.to_json();
        assert_eq!(v["counts"], json!([30, 60, 24]));
        assert_eq!(v["euler_characteristic"], json!(-6));
        assert_eq!(v["cells"][2].as_array().unwrap().len(), 24);
        assert_eq!(v["divisors"].as_array().unwrap().len(), 8);
    }
}
