//! Vertices of the realization recomputed by brute force: every choice of
//! `n - 1` inequalities made tight, solved with an independent 128-bit
//! rational eliminator, kept when feasible.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use tubings::catalog;
use tubings::graph::{enumerate_tubes, Graph, Tube};
use tubings::realization::enumerate_vertices;

type Q = Ratio<i128>;

fn solve(mut a: Vec<Vec<Q>>) -> Option<Vec<Q>> {
    let n = a.len();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if !f.is_zero() {
                    for c in 0..=n {
                        let d = f * a[col][c];
                        a[r][c] -= d;
                    }
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n]).collect())
}

fn brute_force_vertices(g: &Graph) -> BTreeSet<Vec<Q>> {
    let n = g.node_count();
    let tubes: Vec<Tube> = enumerate_tubes(g);
    let bound = |t: &Tube| Q::from_integer(3i128.pow(t.len() as u32));
    let mut out = BTreeSet::new();
    for chosen in tubes.iter().combinations(n - 1) {
        let mut rows: Vec<Vec<Q>> = chosen
            .iter()
            .map(|t| {
                let mut row: Vec<Q> = (0..n).map(|v| Q::from_integer(t.nodes().contains(v) as i128)).collect();
                row.push(bound(t));
                row
            })
            .collect();
        let mut sum = vec![Q::from_integer(1); n];
        sum.push(Q::from_integer(3i128.pow(n as u32)));
        rows.push(sum);
        let Some(x) = solve(rows) else { continue };
        let feasible = tubes.iter().all(|t| t.nodes().iter().map(|v| x[v]).sum::<Q>() >= bound(t));
        if feasible {
            out.insert(x);
        }
    }
    out
}

#[test]
fn vertices_match_brute_force() {
    for n in 2..=4 {
        for g in catalog::connected_graphs(n) {
            let expected = brute_force_vertices(&g);
            let v = enumerate_vertices(&g).unwrap();
            let got: BTreeSet<Vec<Q>> = v
                .vertices
                .iter()
                .map(|(_, p)| {
                    p.iter()
                        .map(|c| Q::new(c.numer().to_i128().unwrap(), c.denom().to_i128().unwrap()))
                        .collect()
                })
                .collect();
            assert_eq!(got.len(), v.vertices.len());
            assert_eq!(got, expected, "{:?}", g.edges());
        }
    }
}

#[test]
fn single_node_is_a_point() {
    let g = Graph::empty(1).unwrap();
    assert_eq!(enumerate_vertices(&g).unwrap().vertices.len(), 1);
}
