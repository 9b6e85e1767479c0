//! Building the face poset combinatorially by promoting tubes one at a time,
//! starting from the non-nested tubings that describe the simplex.
//!
//! The tube order `le` starts as inclusion. Promoting `t*` adds `T ∪ {t*}`
//! for every current tubing `T` where that is still a tubing, and makes `t*`
//! incomparable to every other tube. Tubings are compared through the tube
//! order: `A <= B` iff every tube of `B` lies below some tube of `A`.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::{self, decreasing_size_order, enumerate_tubes, Graph, Tube};
use crate::lattice::{compatibility_rows, FaceLattice, Tubing};

/// Tubings accumulated so far plus the current order on tubes.
#[derive(Clone, Debug)]
pub struct PromotionState {
    graph: Graph,
    tubes: Vec<Tube>,
    compat: Vec<FixedBitSet>,
    /// `down[a]` = tubes `b` with `b <= a`; reflexive.
    down: Vec<FixedBitSet>,
    tubings: Vec<FixedBitSet>,
    seen: HashSet<FixedBitSet>,
    promoted: Vec<usize>,
}

impl PromotionState {
    /// The non-nested tubings of `g` under the inclusion order on tubes.
    pub fn initial(g: &Graph) -> Result<Self> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut tubes = enumerate_tubes(g);
        tubes.sort_by(decreasing_size_order);
        let k = tubes.len();
        let compat = compatibility_rows(g, &tubes);
        let mut down = vec![FixedBitSet::with_capacity(k); k];
        for a in 0..k {
            for b in 0..k {
                if tubes[b].nodes().is_subset(tubes[a].nodes()) {
                    down[a].insert(b);
                }
            }
        }
        // separated = compatible and not nested
        let separated: Vec<FixedBitSet> = (0..k)
            .map(|a| {
                let mut row = compat[a].clone();
                row.difference_with(&down[a]);
                for b in 0..k {
                    if tubes[a].nodes().is_subset(tubes[b].nodes()) {
                        row.set(b, false);
                    }
                }
                row
            })
            .collect();
        let mut tubings = Vec::new();
        let mut current = FixedBitSet::with_capacity(k);
        let mut all = FixedBitSet::with_capacity(k);
        all.insert_range(..);
        collect_antichains(&separated, 0, &all, &mut current, &mut tubings);
        let seen = tubings.iter().cloned().collect();
        Ok(PromotionState {
            graph: g.clone(),
            tubes,
            compat,
            down,
            tubings,
            seen,
            promoted: Vec::new(),
        })
    }

    /// Tubes in the default promotion order: decreasing size, ties broken
    /// lexicographically.
    pub fn tubes(&self) -> &[Tube] {
        &self.tubes
    }

    pub fn promoted(&self) -> Vec<Tube> {
        self.promoted.iter().map(|&i| self.tubes[i]).collect()
    }

    fn tube_index(&self, t: Tube) -> Result<usize> {
        self.tubes
            .iter()
            .position(|&u| u == t)
            .ok_or_else(|| Error::NotATube(t.to_vec()))
    }

    pub fn promote(&mut self, t: Tube) -> Result<()> {
        let star = self.tube_index(t)?;
        if self.promoted.contains(&star) {
            return Err(Error::Consistency(format!("tube {t} promoted twice")));
        }
        let mut added = Vec::new();
        for tubing in &self.tubings {
            if tubing.contains(star) {
                continue;
            }
            // T ∪ {t*} must still be pairwise compatible
            if tubing.is_subset(&self.compat[star]) {
                let mut grown = tubing.clone();
                grown.insert(star);
                if !self.seen.contains(&grown) {
                    added.push(grown);
                }
            }
        }
        for g in added {
            if self.seen.insert(g.clone()) {
                self.tubings.push(g);
            }
        }
        for (a, row) in self.down.iter_mut().enumerate() {
            if a == star {
                row.clear();
                row.insert(star);
            } else {
                row.set(star, false);
            }
        }
        self.promoted.push(star);
        Ok(())
    }

    /// Whether tube `a` lies below tube `b` in the current order.
    pub fn tube_le(&self, a: Tube, b: Tube) -> Result<bool> {
        let (a, b) = (self.tube_index(a)?, self.tube_index(b)?);
        Ok(self.down[b].contains(a))
    }

    pub fn tubings(&self) -> Vec<Tubing> {
        let mut out: Vec<Tubing> = self.tubings.iter().map(|s| self.to_tubing(s)).collect();
        out.sort();
        out
    }

    fn to_tubing(&self, s: &FixedBitSet) -> Tubing {
        let mut v: Vec<Tube> = s.ones().map(|i| self.tubes[i]).collect();
        v.sort();
        Tubing::from_sorted(v)
    }

    /// Materializes the current poset: covers are the transitive reduction
    /// of the induced order on tubings, ranks are heights above the minimal
    /// elements.
    pub fn to_lattice(&self) -> Result<FaceLattice> {
        let mut order: Vec<usize> = (0..self.tubings.len()).collect();
        let labels: Vec<Tubing> = self.tubings.iter().map(|s| self.to_tubing(s)).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let tubings: Vec<&FixedBitSet> = order.iter().map(|&i| &self.tubings[i]).collect();
        let faces: Vec<Tubing> = order.iter().map(|&i| labels[i].clone()).collect();
        let n = tubings.len();
        let k = self.tubes.len();

        // below[i] = union of down-sets of the tubes of tubing i
        let below: Vec<FixedBitSet> = tubings
            .iter()
            .map(|s| {
                let mut acc = FixedBitSet::with_capacity(k);
                for t in s.ones() {
                    acc.union_with(&self.down[t]);
                }
                acc
            })
            .collect();
        // up[i] = strictly greater elements
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut up_bits: Vec<FixedBitSet> = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && tubings[j].is_subset(&below[i]) {
                    if below[j].is_superset(tubings[i]) {
                        return Err(Error::Consistency(format!(
                            "tubing order is not antisymmetric: {} and {}",
                            faces[i], faces[j]
                        )));
                    }
                    up[i].push(j);
                    up_bits[i].insert(j);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for &j in &up[i] {
                let between = up[i].iter().any(|&m| m != j && up_bits[m].contains(j));
                if !between {
                    covers.push((i, j));
                }
            }
        }
        // rank = longest chain down to a minimal element
        let mut by_depth: Vec<usize> = (0..n).collect();
        by_depth.sort_by_key(|&i| std::cmp::Reverse(up[i].len()));
        let mut down_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            down_covers[hi].push(lo);
        }
        let mut rank = vec![0usize; n];
        // elements with larger up-sets come first, so every lower cover is
        // ranked before the element itself
        for &i in &by_depth {
            rank[i] = down_covers[i].iter().map(|&lo| rank[lo] + 1).max().unwrap_or(0);
        }
        Ok(FaceLattice::from_parts(&self.graph, faces, rank, covers))
    }
}

fn collect_antichains(
    rows: &[FixedBitSet],
    start: usize,
    candidates: &FixedBitSet,
    current: &mut FixedBitSet,
    out: &mut Vec<FixedBitSet>,
) {
    out.push(current.clone());
    for i in candidates.ones().filter(|&i| i >= start) {
        let mut next = candidates.clone();
        next.intersect_with(&rows[i]);
        current.insert(i);
        collect_antichains(rows, i + 1, &next, current, out);
        current.set(i, false);
    }
}

/// Promotes every tube in decreasing-size order and returns the final poset.
pub fn build_by_promotion(g: &Graph) -> Result<FaceLattice> {
    let state = PromotionState::initial(g)?;
    let order = state.tubes().to_vec();
    build_by_promotion_in_order(g, &order)
}

/// Like [`build_by_promotion`] with an explicit tube order, which must list
/// every tube once with sizes non-increasing.
pub fn build_by_promotion_in_order(g: &Graph, order: &[Tube]) -> Result<FaceLattice> {
    let mut state = PromotionState::initial(g)?;
    if order.len() != state.tubes().len() {
        return Err(Error::Consistency(format!(
            "promotion order lists {} tubes, graph has {}",
            order.len(),
            state.tubes().len()
        )));
    }
    if order.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::Consistency("promotion order must not increase tube size".into()));
    }
    for &t in order {
        graph::Tube::from_set(g, t.nodes())?;
        state.promote(t)?;
    }
    state.to_lattice()
}
