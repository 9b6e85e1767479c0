//! Ranked finite posets given by their covering relations, and a
//! backtracking isomorphism search for comparing unlabeled posets.

use std::collections::{BTreeMap, HashSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    ranks: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl Poset {
    /// `covers` holds `(lower, upper)` pairs.
    pub fn new(ranks: Vec<usize>, covers: &[(usize, usize)]) -> Self {
        let n = ranks.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            up[lo].push(hi);
            down[hi].push(lo);
        }
        for v in up.iter_mut().chain(down.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }
        Poset { ranks, up, down }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (lo, ups) in self.up.iter().enumerate() {
            out.extend(ups.iter().map(|&hi| (lo, hi)));
        }
        out
    }

    /// Number of elements of each rank, indexed by rank.
    pub fn rank_counts(&self) -> Vec<usize> {
        let top = self.ranks.iter().copied().max().map_or(0, |r| r + 1);
        let mut counts = vec![0; top];
        for &r in &self.ranks {
            counts[r] += 1;
        }
        counts
    }

    /// Every cover raises the rank by exactly one, and every element that is
    /// not of minimal (maximal) rank has a lower (upper) cover.
    pub fn is_graded(&self) -> bool {
        let (Some(&lo), Some(&hi)) = (self.ranks.iter().min(), self.ranks.iter().max()) else {
            return true;
        };
        (0..self.len()).all(|i| {
            self.up[i].iter().all(|&j| self.ranks[j] == self.ranks[i] + 1)
                && (self.ranks[i] == lo || !self.down[i].is_empty())
                && (self.ranks[i] == hi || !self.up[i].is_empty())
        })
    }

    /// Product order: `(a, b) <= (a', b')` iff both coordinates compare.
    /// Element `(i, j)` gets index `i * other.len() + j`.
    pub fn product(&self, other: &Poset) -> Poset {
        let m = other.len();
        let mut ranks = Vec::with_capacity(self.len() * m);
        for i in 0..self.len() {
            for j in 0..m {
                ranks.push(self.ranks[i] + other.ranks[j]);
            }
        }
        let mut covers = Vec::new();
        for i in 0..self.len() {
            for j in 0..m {
                for &i2 in &self.up[i] {
                    covers.push((i * m + j, i2 * m + j));
                }
                for &j2 in &other.up[j] {
                    covers.push((i * m + j, i * m + j2));
                }
            }
        }
        Poset::new(ranks, &covers)
    }

    fn signature(&self, i: usize) -> (usize, usize, usize) {
        (self.ranks[i], self.up[i].len(), self.down[i].len())
    }

    /// Searches for a rank- and cover-preserving bijection onto `other`.
    /// Returns `map` with `map[i]` the image of element `i`.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let hist = |p: &Poset| {
            let mut h: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
            for i in 0..p.len() {
                *h.entry(p.signature(i)).or_default() += 1;
            }
            h
        };
        if hist(self) != hist(other) {
            return None;
        }
        if self.up.iter().map(Vec::len).sum::<usize>() != other.up.iter().map(Vec::len).sum::<usize>() {
            return None;
        }

        // Visit elements so that each one (after the first in its component)
        // has an already-placed neighbor.
        let mut order = Vec::with_capacity(n);
        let mut placed = vec![false; n];
        let mut by_rank: Vec<usize> = (0..n).collect();
        by_rank.sort_by_key(|&i| std::cmp::Reverse(self.ranks[i]));
        for &root in &by_rank {
            if placed[root] {
                continue;
            }
            placed[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                for &y in self.up[x].iter().chain(&self.down[x]) {
                    if !placed[y] {
                        placed[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }

        let other_up: Vec<HashSet<usize>> = other.up.iter().map(|v| v.iter().copied().collect()).collect();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if self.extend(other, &other_up, &order, 0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    fn extend(
        &self,
        other: &Poset,
        other_up: &[HashSet<usize>],
        order: &[usize],
        k: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&x) = order.get(k) else {
            return true;
        };
        let sig = self.signature(x);
        // Restrict candidates through an already-mapped neighbor when possible.
        let anchored: Option<Vec<usize>> = self
            .up[x]
            .iter()
            .find(|&&y| map[y] != usize::MAX)
            .map(|&y| other.down[map[y]].clone())
            .or_else(|| {
                self.down[x]
                    .iter()
                    .find(|&&y| map[y] != usize::MAX)
                    .map(|&y| other.up[map[y]].clone())
            });
        let candidates: Vec<usize> = anchored.unwrap_or_else(|| (0..other.len()).collect());
        for c in candidates {
            if used[c] || other.signature(c) != sig {
                continue;
            }
            let consistent = self.up[x]
                .iter()
                .all(|&y| map[y] == usize::MAX || other_up[c].contains(&map[y]))
                && self
                    .down[x]
                    .iter()
                    .all(|&y| map[y] == usize::MAX || other_up[map[y]].contains(&c));
            if !consistent {
                continue;
            }
            map[x] = c;
            used[c] = true;
            if self.extend(other, other_up, order, k + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[c] = false;
        }
        false
    }
}
