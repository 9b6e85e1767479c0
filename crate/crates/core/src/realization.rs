//! Exact realization of graph-associahedra as truncated simplices.
//!
//! The polytope of a connected graph on `n` nodes lives in the hyperplane
//! `x_0 + ... + x_{n-1} = 3^n`. Every tube `t` cuts with the halfspace
//! `sum_{v in t} x_v >= 3^|t|`. Because `3^a + 3^b < 3^(a+b)`, two tubes whose
//! union is connected can never be tight at the same point, which is what
//! makes the vertices line up with maximal tubings.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::json;

use crate::error::{Error, Result};
use crate::exact;
use crate::graph::{enumerate_tubes, Graph, Tube};
use crate::lattice::{face_poset, maximal_tubings, FaceLattice, Tubing};

pub type Point = Vec<BigRational>;

/// `sum_{v in tube} x_v >= bound`.
#[derive(Clone, Debug, PartialEq)]
pub struct Halfspace {
    pub tube: Tube,
    pub bound: BigRational,
}

impl Halfspace {
    pub fn value(&self, x: &[BigRational]) -> BigRational {
        self.tube.nodes().iter().map(|v| &x[v]).sum()
    }

    pub fn slack(&self, x: &[BigRational]) -> BigRational {
        self.value(x) - &self.bound
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeHRep {
    graph: Graph,
    ambient_sum: BigRational,
    halfspaces: Vec<Halfspace>,
}

pub fn h_representation(g: &Graph) -> Result<PolytopeHRep> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let halfspaces = enumerate_tubes(g)
        .into_iter()
        .map(|tube| Halfspace {
            tube,
            bound: exact::pow3(tube.len()),
        })
        .collect();
    Ok(PolytopeHRep {
        graph: g.clone(),
        ambient_sum: exact::pow3(g.node_count()),
        halfspaces,
    })
}

impl PolytopeHRep {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn ambient_sum(&self) -> &BigRational {
        &self.ambient_sum
    }

    /// One halfspace per tube, in decreasing tube size.
    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn halfspace(&self, t: Tube) -> Option<&Halfspace> {
        self.halfspaces.iter().find(|h| h.tube == t)
    }

    /// Multiplies every bound and the ambient sum by `factor`.
    pub fn scaled(&self, factor: &BigRational) -> Result<PolytopeHRep> {
        if !factor.is_positive() {
            return Err(Error::RealizationFailure("scale factor must be positive".into()));
        }
        Ok(PolytopeHRep {
            graph: self.graph.clone(),
            ambient_sum: &self.ambient_sum * factor,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| Halfspace {
                    tube: h.tube,
                    bound: &h.bound * factor,
                })
                .collect(),
        })
    }

    /// Whether `x` lies on the ambient hyperplane and in every halfspace.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        x.iter().sum::<BigRational>() == self.ambient_sum
            && self.halfspaces.iter().all(|h| !h.slack(x).is_negative())
    }

    /// Indices of the halfspaces tight at `x`.
    pub fn tight_at(&self, x: &[BigRational]) -> Vec<usize> {
        (0..self.halfspaces.len())
            .filter(|&i| self.halfspaces[i].slack(x).is_zero())
            .collect()
    }

    /// Solves the tight equations of a maximal tubing together with the
    /// ambient equation, then checks every other inequality holds strictly.
    pub fn vertex_for(&self, tubing: &Tubing) -> Result<Point> {
        let n = self.graph.node_count();
        if tubing.len() + 1 != n {
            return Err(Error::NotATubing(format!(
                "{tubing} has {} tubes; a vertex needs {}",
                tubing.len(),
                n - 1
            )));
        }
        Tubing::new(&self.graph, tubing.tubes())?;
        let mut rows = Vec::with_capacity(n);
        let mut rhs = Vec::with_capacity(n);
        for &t in tubing.tubes() {
            let h = self
                .halfspace(t)
                .ok_or_else(|| Error::NotATube(t.to_vec()))?;
            rows.push((0..n).map(|v| exact::int(t.nodes().contains(v) as i64)).collect());
            rhs.push(h.bound.clone());
        }
        rows.push(vec![exact::int(1); n]);
        rhs.push(self.ambient_sum.clone());
        let x = exact::solve(&rows, &rhs).ok_or_else(|| {
            Error::RealizationFailure(format!("tight system of {tubing} is singular"))
        })?;
        for h in &self.halfspaces {
            let slack = h.slack(&x);
            let tight = tubing.contains(h.tube);
            if (tight && !slack.is_zero()) || (!tight && !slack.is_positive()) {
                return Err(Error::RealizationFailure(format!(
                    "vertex of {tubing} has slack {slack} on tube {}",
                    h.tube
                )));
            }
        }
        Ok(x)
    }
}

pub fn vertex_for(g: &Graph, tubing: &Tubing) -> Result<Point> {
    h_representation(g)?.vertex_for(tubing)
}

/// Vertices keyed by maximal tubing, in canonical tubing order.
#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeVRep {
    pub vertices: Vec<(Tubing, Point)>,
}

impl PolytopeVRep {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn point(&self, t: &Tubing) -> Option<&Point> {
        self.vertices.iter().find(|(u, _)| u == t).map(|(_, p)| p)
    }
}

pub fn enumerate_vertices(g: &Graph) -> Result<PolytopeVRep> {
    enumerate_vertices_of(&h_representation(g)?)
}

pub fn enumerate_vertices_of(h: &PolytopeHRep) -> Result<PolytopeVRep> {
    let mut vertices = Vec::new();
    let mut seen = HashSet::new();
    for t in maximal_tubings(&h.graph)? {
        let x = h.vertex_for(&t)?;
        if !seen.insert(x.clone()) {
            return Err(Error::RealizationFailure(format!(
                "vertex of {t} coincides with another vertex"
            )));
        }
        vertices.push((t, x));
    }
    Ok(PolytopeVRep { vertices })
}

/// Outcome of comparing the realized polytope against the tubing lattice.
#[derive(Clone, Debug, Default)]
pub struct RealizationReport {
    pub vertex_count: usize,
    pub face_count: usize,
    /// Face counts of the realized polytope, by affine dimension.
    pub f_vector: Vec<usize>,
    /// Every vertex is tight on exactly `n - 1` facets.
    pub simple: bool,
    /// The facets tight at each vertex are exactly the tubes of its tubing.
    pub tightness_matches: bool,
    /// The incidence lattice equals the tubing lattice, facet labels included.
    pub lattice_matches: bool,
    pub failures: Vec<String>,
}

impl RealizationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.simple && self.tightness_matches && self.lattice_matches
    }
}

/// A face of the realized polytope: its vertex set, the facets containing
/// it, and the dimension of its affine hull.
#[derive(Clone, Debug)]
pub struct GeometricFace {
    pub vertices: FixedBitSet,
    pub facets: Vec<usize>,
    pub dim: usize,
}

/// Faces of the realized polytope: every nonempty intersection of facets,
/// found from the exact vertex-facet incidences.
pub fn geometric_faces(h: &PolytopeHRep, v: &PolytopeVRep) -> Vec<GeometricFace> {
    let nv = v.len();
    let facet_sets: Vec<FixedBitSet> = h
        .halfspaces
        .iter()
        .map(|hs| {
            let mut s = FixedBitSet::with_capacity(nv);
            for (i, (_, x)) in v.vertices.iter().enumerate() {
                if hs.slack(x).is_zero() {
                    s.insert(i);
                }
            }
            s
        })
        .collect();
    let mut whole = FixedBitSet::with_capacity(nv);
    whole.insert_range(..);
    let mut seen: HashSet<FixedBitSet> = HashSet::from([whole.clone()]);
    let mut queue = vec![whole];
    let mut i = 0;
    while i < queue.len() {
        let face = queue[i].clone();
        i += 1;
        for f in &facet_sets {
            let mut next = face.clone();
            next.intersect_with(f);
            if !next.is_clear() && seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    queue
        .into_iter()
        .map(|vertices| {
            let facets = (0..facet_sets.len())
                .filter(|&k| vertices.is_subset(&facet_sets[k]))
                .collect();
            let pts: Vec<&[BigRational]> = vertices.ones().map(|i| v.vertices[i].1.as_slice()).collect();
            let dim = exact::affine_dimension(&pts).unwrap_or(0);
            GeometricFace {
                vertices,
                facets,
                dim,
            }
        })
        .collect()
}

pub fn verify_realization(g: &Graph) -> Result<RealizationReport> {
    let h = h_representation(g)?;
    let lattice = face_poset(g)?;
    let mut report = RealizationReport::default();
    let v = match enumerate_vertices_of(&h) {
        Ok(v) => v,
        Err(e) => {
            report.failures.push(e.to_string());
            return Ok(report);
        }
    };
    verify_against(&h, &v, &lattice, &mut report);
    Ok(report)
}

fn verify_against(h: &PolytopeHRep, v: &PolytopeVRep, lattice: &FaceLattice, report: &mut RealizationReport) {
    let n = h.graph.node_count();
    report.vertex_count = v.len();
    report.simple = true;
    report.tightness_matches = true;
    for (t, x) in &v.vertices {
        let tight = h.tight_at(x);
        if tight.len() + 1 != n {
            report.simple = false;
            report.failures.push(format!("vertex {t} is tight on {} facets", tight.len()));
        }
        let tight_tubing = Tubing::from_sorted({
            let mut tubes: Vec<Tube> = tight.iter().map(|&k| h.halfspaces[k].tube).collect();
            tubes.sort();
            tubes
        });
        if &tight_tubing != t {
            report.tightness_matches = false;
            report.failures.push(format!("vertex {t} is tight on {tight_tubing}"));
        }
    }

    let faces = geometric_faces(h, v);
    report.face_count = faces.len();
    let mut f_vector = vec![0; n];
    for f in &faces {
        if f.dim < n {
            f_vector[f.dim] += 1;
        }
    }
    report.f_vector = f_vector;

    // label each geometric face by the tubing of the facets containing it
    let mut to_lattice: Vec<usize> = Vec::with_capacity(faces.len());
    let mut matched = HashMap::new();
    report.lattice_matches = true;
    for (gi, f) in faces.iter().enumerate() {
        let mut tubes: Vec<Tube> = f.facets.iter().map(|&k| h.halfspaces[k].tube).collect();
        tubes.sort();
        let label = Tubing::from_sorted(tubes);
        match lattice.index_of(&label) {
            Some(li) => {
                if lattice.dim(li) != f.dim {
                    report.lattice_matches = false;
                    report.failures.push(format!(
                        "face {label} has dimension {} but its tubing says {}",
                        f.dim,
                        lattice.dim(li)
                    ));
                }
                if let Some(prev) = matched.insert(li, gi) {
                    report.lattice_matches = false;
                    report.failures.push(format!("faces {prev} and {gi} share label {label}"));
                }
                to_lattice.push(li);
            }
            None => {
                report.lattice_matches = false;
                report.failures.push(format!("face labeled {label} is not a tubing"));
                to_lattice.push(usize::MAX);
            }
        }
    }
    if matched.len() != lattice.len() {
        report.lattice_matches = false;
        report.failures.push(format!(
            "{} geometric faces for {} tubings",
            matched.len(),
            lattice.len()
        ));
    }
    if !report.lattice_matches {
        return;
    }
    let mut geo_covers = HashSet::new();
    for (a, fa) in faces.iter().enumerate() {
        for (b, fb) in faces.iter().enumerate() {
            if fb.dim == fa.dim + 1 && fa.vertices.is_subset(&fb.vertices) {
                geo_covers.insert((to_lattice[a], to_lattice[b]));
            }
        }
    }
    let comb: HashSet<(usize, usize)> = lattice.covers().iter().copied().collect();
    if geo_covers != comb {
        report.lattice_matches = false;
        let extra = geo_covers.difference(&comb).next();
        let missing = comb.difference(&geo_covers).next();
        report.failures.push(format!(
            "cover relations differ (extra {extra:?}, missing {missing:?})"
        ));
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    /// OFF mesh; coordinates rendered with the given number of decimals.
    Off { digits: usize },
    Json,
}

pub fn export_polytope(g: &Graph, format: ExportFormat) -> Result<String> {
    match format {
        ExportFormat::Off { digits } => export_off(g, digits),
        ExportFormat::Json => Ok(serde_json::to_string_pretty(&polytope_json(g)?).expect("json")),
    }
}

fn rational_json(r: &BigRational) -> serde_json::Value {
    let num = |b: &BigInt| match i64::try_from(b) {
        Ok(v) => json!(v),
        Err(_) => json!(b.to_string()),
    };
    json!([num(r.numer()), num(r.denom())])
}

pub fn polytope_json(g: &Graph) -> Result<serde_json::Value> {
    let h = h_representation(g)?;
    let v = enumerate_vertices_of(&h)?;
    let halfspaces: Vec<_> = h
        .halfspaces
        .iter()
        .map(|hs| {
            let b = rational_json(&hs.bound);
            json!({ "tube": hs.tube.to_vec(), "bound_num": b[0], "bound_den": b[1] })
        })
        .collect();
    let vertices: Vec<_> = v
        .vertices
        .iter()
        .map(|(t, x)| {
            json!({
                "tubing": t.to_lists(),
                "coords": x.iter().map(rational_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(json!({
        "ambient_sum": h.ambient_sum.to_string(),
        "halfspaces": halfspaces,
        "vertices": vertices,
    }))
}

/// Projected 3-d coordinates: centered, last coordinate dropped, padded.
fn project(points: &[Point], n: usize) -> Vec<[BigRational; 3]> {
    let count = exact::int(points.len() as i64);
    let centroid: Vec<BigRational> = (0..n)
        .map(|i| points.iter().map(|p| &p[i]).sum::<BigRational>() / &count)
        .collect();
    points
        .iter()
        .map(|p| {
            let mut out = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
            for i in 0..n.saturating_sub(1).min(3) {
                out[i] = &p[i] - &centroid[i];
            }
            out
        })
        .collect()
}

fn sub3(a: &[BigRational; 3], b: &[BigRational; 3]) -> [BigRational; 3] {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn cross_dot(u: &[BigRational; 3], v: &[BigRational; 3], w: &[BigRational; 3]) -> BigRational {
    let c = [
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ];
    &c[0] * &w[0] + &c[1] * &w[1] + &c[2] * &w[2]
}

fn export_off(g: &Graph, digits: usize) -> Result<String> {
    let n = g.node_count();
    if n > 4 {
        return Err(Error::UnsupportedDimension(format!(
            "OFF export needs n <= 4, the graph has {n} nodes"
        )));
    }
    let h = h_representation(g)?;
    let v = enumerate_vertices_of(&h)?;
    let lattice = face_poset(g)?;
    let points: Vec<Point> = v.vertices.iter().map(|(_, x)| x.clone()).collect();
    let coords = project(&points, n);
    let vertex_index: HashMap<&Tubing, usize> = v.vertices.iter().enumerate().map(|(i, (t, _))| (t, i)).collect();

    let mut polygons = Vec::new();
    for (fi, face) in lattice.faces().iter().enumerate() {
        if lattice.dim(fi) != 2 {
            continue;
        }
        // edges of this polygon are the one-dimensional faces below it
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for &(lo, hi) in lattice.covers() {
            if hi != fi {
                continue;
            }
            let ends: Vec<usize> = lattice
                .covers()
                .iter()
                .filter(|&&(_, up)| up == lo)
                .map(|&(vtx, _)| vertex_index[&lattice.faces()[vtx]])
                .collect();
            if let [a, b] = ends[..] {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
        }
        let start = *adj.keys().min().ok_or_else(|| {
            Error::Consistency(format!("two-face {face} has no edges"))
        })?;
        let mut cycle = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = adj[&cur].iter().copied().filter(|&x| x != prev).min().unwrap();
            if next == start {
                break;
            }
            cycle.push(next);
            prev = cur;
            cur = next;
            if cycle.len() > adj.len() {
                return Err(Error::Consistency(format!("edges of {face} do not form a cycle")));
            }
        }
        // orient counterclockwise as seen from outside
        let normal: [BigRational; 3] = if n == 4 {
            let t = face.tubes()[0];
            let last = t.nodes().contains(3) as i64;
            let mut out = [BigRational::zero(), BigRational::zero(), BigRational::zero()];
            for (i, o) in out.iter_mut().enumerate() {
                *o = exact::int(last - t.nodes().contains(i) as i64);
            }
            out
        } else {
            [BigRational::zero(), BigRational::zero(), exact::int(1)]
        };
        let orient = cross_dot(
            &sub3(&coords[cycle[1]], &coords[cycle[0]]),
            &sub3(&coords[cycle[2]], &coords[cycle[0]]),
            &normal,
        );
        if orient.is_negative() {
            cycle[1..].reverse();
        }
        polygons.push(cycle);
    }
    let edge_count = lattice.dims().iter().filter(|&&d| d == 1).count();
    let mut s = String::from("OFF\n");
    s.push_str(&format!("{} {} {}\n", coords.len(), polygons.len(), edge_count));
    for c in &coords {
        let parts: Vec<String> = c.iter().map(|x| exact::to_decimal(x, digits)).collect();
        s.push_str(&parts.join(" "));
        s.push('\n');
    }
    for p in &polygons {
        s.push_str(&p.len().to_string());
        for i in p {
            s.push_str(&format!(" {i}"));
        }
        s.push('\n');
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exact::int;

    fn ints(v: &[i64]) -> Point {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn pentagon_h_rep() {
        let g = catalog::path(3).unwrap();
        let h = h_representation(&g).unwrap();
        assert_eq!(h.ambient_sum(), &int(27));
        let got: Vec<(Vec<usize>, BigRational)> =
            h.halfspaces().iter().map(|hs| (hs.tube.to_vec(), hs.bound.clone())).collect();
        assert_eq!(
            got,
            vec![
                (vec![0, 1], int(9)),
                (vec![1, 2], int(9)),
                (vec![0], int(3)),
                (vec![1], int(3)),
                (vec![2], int(3)),
            ]
        );
        let point = h_representation(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(point.ambient_sum(), &int(3));
        assert!(point.halfspaces().is_empty());
        assert_eq!(h_representation(&catalog::complete(3).unwrap()).unwrap().halfspaces().len(), 6);
        assert_eq!(h_representation(&Graph::empty(2).unwrap()), Err(Error::Disconnected));
    }

    #[test]
    fn pentagon_vertices() {
        let g = catalog::path(3).unwrap();
        let t = Tubing::from_lists(&g, &[&[0], &[0, 1]]).unwrap();
        assert_eq!(vertex_for(&g, &t).unwrap(), ints(&[3, 6, 18]));
        let t = Tubing::from_lists(&g, &[&[0], &[2]]).unwrap();
        assert_eq!(vertex_for(&g, &t).unwrap(), ints(&[3, 21, 3]));
        let point = Graph::empty(1).unwrap();
        assert_eq!(vertex_for(&point, &Tubing::empty()).unwrap(), ints(&[3]));
        // not maximal
        assert!(vertex_for(&g, &Tubing::from_lists(&g, &[&[0]]).unwrap()).is_err());
    }

    #[test]
    fn vertex_counts() {
        assert_eq!(enumerate_vertices(&catalog::path(3).unwrap()).unwrap().len(), 5);
        assert_eq!(enumerate_vertices(&catalog::cycle(3).unwrap()).unwrap().len(), 6);
        assert_eq!(enumerate_vertices(&catalog::path(4).unwrap()).unwrap().len(), 14);
        let v = enumerate_vertices(&catalog::path(3).unwrap()).unwrap();
        for (_, x) in &v.vertices {
            assert_eq!(x.iter().sum::<BigRational>(), int(27));
        }
    }

    #[test]
    fn pentagon_verifies() {
        let r = verify_realization(&catalog::path(3).unwrap()).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        assert_eq!(r.f_vector, vec![5, 5, 1]);
        let r = verify_realization(&catalog::complete(4).unwrap()).unwrap();
        assert!(r.ok(), "{:?}", r.failures);
        assert_eq!(r.vertex_count, 24);
    }

    #[test]
    fn scaling_keeps_incidences() {
        let g = catalog::cycle(4).unwrap();
        let h = h_representation(&g).unwrap();
        let factor = BigRational::new(BigInt::from(7), BigInt::from(5));
        let scaled = h.scaled(&factor).unwrap();
        let v1 = enumerate_vertices_of(&h).unwrap();
        let v2 = enumerate_vertices_of(&scaled).unwrap();
        for ((t1, x1), (t2, x2)) in v1.vertices.iter().zip(&v2.vertices) {
            assert_eq!(t1, t2);
            assert_eq!(h.tight_at(x1), scaled.tight_at(x2));
        }
        assert!(h.scaled(&int(0)).is_err());
    }

    #[test]
    fn off_export() {
        let off = export_polytope(&catalog::path(3).unwrap(), ExportFormat::Off { digits: 3 }).unwrap();
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("5 1 5"));
        assert!(off.lines().last().unwrap().starts_with("5 "));

        let off = export_polytope(&catalog::path(4).unwrap(), ExportFormat::Off { digits: 12 }).unwrap();
        assert_eq!(off.lines().nth(1), Some("14 9 21"));
        let polys: Vec<&str> = off.lines().skip(2 + 14).collect();
        assert_eq!(polys.len(), 9);
        // K5 has 6 pentagons and 3 squares
        let mut sides: Vec<usize> = polys.iter().map(|l| l.split(' ').next().unwrap().parse().unwrap()).collect();
        sides.sort_unstable();
        assert_eq!(sides, vec![4, 4, 4, 5, 5, 5, 5, 5, 5]);

        assert!(matches!(
            export_polytope(&catalog::path(5).unwrap(), ExportFormat::Off { digits: 3 }),
            Err(Error::UnsupportedDimension(_))
        ));
    }

    #[test]
    fn off_faces_are_outward_oriented() {
        // with the centroid at the origin, an outward counterclockwise face
        // has positive signed volume against the origin
        let g = catalog::complete(4).unwrap();
        let h = h_representation(&g).unwrap();
        let v = enumerate_vertices_of(&h).unwrap();
        let pts: Vec<Point> = v.vertices.iter().map(|(_, x)| x.clone()).collect();
        let coords = project(&pts, 4);
        let off = export_off(&g, 6).unwrap();
        for line in off.lines().skip(2 + 24) {
            let idx: Vec<usize> = line.split(' ').skip(1).map(|s| s.parse().unwrap()).collect();
            let vol = cross_dot(&coords[idx[0]], &coords[idx[1]], &coords[idx[2]]);
            assert!(vol.is_positive(), "{line}");
        }
    }

    #[test]
    fn json_export() {
        let text = export_polytope(&catalog::complete(3).unwrap(), ExportFormat::Json).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
        assert_eq!(v["ambient_sum"], "27");
        assert_eq!(v["halfspaces"][0]["bound_den"], 1);
    }
}
