//! Counting the minimal building set of the type-A arrangement.
//!
//! For `A_n` acting on `n + 1` coordinates, an element of the minimal
//! building set is the subspace where the coordinates of one block `S`
//! agree (`2 <= |S| <= n`); its stabilizer `A_{|S|-1}` is irreducible.
//! On the unit sphere it has dimension `k = n - |S|`.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};

/// Counts for one dimension `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinBuildingRow {
    pub k: usize,
    pub block_size: usize,
    /// Irreducible single-block set partitions found by enumeration.
    pub blocks: usize,
    /// Connected components on the sphere: a 0-sphere is two points, higher
    /// spheres are connected.
    pub sphere_components: usize,
    /// Elements after the antipodal quotient.
    pub projective: usize,
    /// The closed form `2 * binom(n + 1, n - k)`.
    pub formula: u64,
    /// `formula != sphere_components`.
    pub discrepancy: bool,
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All set partitions of `0..m`, blocks sorted.
fn set_partitions(m: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, m: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == m {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(i);
            go(i + 1, m, cur, out);
            cur[b].pop();
        }
        cur.push(vec![i]);
        go(i + 1, m, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, m, &mut Vec::new(), &mut out);
    out
}

/// Rows for `k = 0 ..= n - 2`, `2 <= n <= 6`.
pub fn min_building_elements_type_a(n: usize) -> Result<Vec<MinBuildingRow>> {
    if !(2..=6).contains(&n) {
        return Err(Error::Unsupported(format!("type A_n building counts need 2 <= n <= 6, got {n}")));
    }
    let m = n + 1;
    // one block of size >= 2, everything else singletons, not all merged
    let counts = set_partitions(m)
        .into_iter()
        .filter_map(|p| {
            let big: Vec<&Vec<usize>> = p.iter().filter(|b| b.len() >= 2).collect();
            (big.len() == 1 && p.len() >= 2).then(|| p.len() - 2)
        })
        .counts();
    Ok((0..=n - 2)
        .map(|k| {
            let blocks = counts.get(&k).copied().unwrap_or(0);
            let sphere_components = if k == 0 { 2 * blocks } else { blocks };
            let formula = 2 * binom(m as u64, (n - k) as u64);
            MinBuildingRow {
                k,
                block_size: n - k,
                blocks,
                sphere_components,
                projective: blocks,
                formula,
                discrepancy: formula != sphere_components as u64,
            }
        })
        .collect())
}
