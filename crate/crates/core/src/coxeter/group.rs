//! Finite Coxeter groups enumerated into a right Cayley table.
//!
//! Each family is realized by a concrete faithful model (permutations,
//! signed permutations, dihedral pairs, or exact integer/golden-ratio
//! matrices). The model only exists while the table is being built; after
//! that an element is its index, assigned in breadth-first order from the
//! identity so that indices grow with length.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet, Tube};

use super::system::{CoxeterSystem, CoxeterType};

/// Largest group built unless the caller raises the limit.
pub const DEFAULT_MAX_ORDER: u64 = 20_000;
/// No limit may exceed this.
pub const HARD_MAX_ORDER: u64 = 100_000;
pub const MAX_ORDER_ENV: &str = "TUBINGS_MAX_W";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupLimits {
    pub max_order: u64,
}

impl Default for GroupLimits {
    fn default() -> Self {
        GroupLimits {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

impl GroupLimits {
    pub fn new(max_order: u64) -> Result<Self> {
        if max_order > HARD_MAX_ORDER {
            return Err(Error::Unsupported(format!(
                "group order limit {max_order} exceeds the hard cap {HARD_MAX_ORDER}"
            )));
        }
        Ok(GroupLimits { max_order })
    }

    /// Reads the limit from `TUBINGS_MAX_W`, falling back to the default.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_ORDER_ENV) {
            Ok(v) => {
                let n: u64 = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{MAX_ORDER_ENV}={v:?} is not a number")))?;
                Self::new(n)
            }
            Err(_) => Ok(Self::default()),
        }
    }
}

/// An element of an enumerated group: its index in the Cayley table.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement(u32);

impl GroupElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

trait Model {
    type Elem: Clone + Eq + Hash;
    fn identity(&self) -> Self::Elem;
    fn mul_gen(&self, w: &Self::Elem, i: usize) -> Self::Elem;
}

/// `A_n`: permutations of `n + 1` letters in one-line notation;
/// `s_i` swaps positions `i` and `i + 1`.
struct Permutations(usize);

impl Model for Permutations {
    type Elem = Vec<u8>;
    fn identity(&self) -> Vec<u8> {
        (0..=self.0 as u8).collect()
    }
    fn mul_gen(&self, w: &Vec<u8>, i: usize) -> Vec<u8> {
        let mut v = w.clone();
        v.swap(i, i + 1);
        v
    }
}

/// `B_n` and `D_n`: signed permutations of `n` letters, stored with
/// 1-based magnitudes. `s_0` negates position 0 (`B_n`) or swaps and negates
/// positions 0 and 1 (`D_n`); `s_i` for `i >= 1` swaps positions `i - 1`, `i`.
struct SignedPermutations {
    n: usize,
    even: bool,
}

impl Model for SignedPermutations {
    type Elem = Vec<i8>;
    fn identity(&self) -> Vec<i8> {
        (1..=self.n as i8).collect()
    }
    fn mul_gen(&self, w: &Vec<i8>, i: usize) -> Vec<i8> {
        let mut v = w.clone();
        match (i, self.even) {
            (0, false) => v[0] = -v[0],
            (0, true) => {
                v.swap(0, 1);
                v[0] = -v[0];
                v[1] = -v[1];
            }
            _ => v.swap(i - 1, i),
        }
        v
    }
}

/// `I_2(m)`: `(r, f)` stands for `rho^r sigma^f`; `s_0 = sigma`,
/// `s_1 = rho sigma`.
struct Dihedral(u32);

impl Model for Dihedral {
    type Elem = (u32, bool);
    fn identity(&self) -> (u32, bool) {
        (0, false)
    }
    fn mul_gen(&self, &(r, f): &(u32, bool), i: usize) -> (u32, bool) {
        let m = self.0;
        let shift = i as u32 % m;
        let r = if f { (r + m - shift) % m } else { (r + shift) % m };
        (r, !f)
    }
}

/// Elements `a + b*phi` of `Z[phi]`, `phi^2 = phi + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
struct GoldenInt {
    a: i64,
    b: i64,
}

impl GoldenInt {
    const ZERO: GoldenInt = GoldenInt { a: 0, b: 0 };
    const ONE: GoldenInt = GoldenInt { a: 1, b: 0 };

    fn int(a: i64) -> Self {
        GoldenInt { a, b: 0 }
    }

    fn mul(self, o: GoldenInt) -> GoldenInt {
        GoldenInt {
            a: self.a * o.a + self.b * o.b,
            b: self.a * o.b + self.b * o.a + self.b * o.b,
        }
    }

    fn sub(self, o: GoldenInt) -> GoldenInt {
        GoldenInt {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

/// Geometric representation on the root basis: `s_i(e_j) = e_j - c_ij e_i`
/// with `c_ij c_ji = 4 cos^2(pi / m_ij)`. Covers bonds 2, 3, 4, 5 and 6.
struct RootMatrices {
    n: usize,
    cartan: Vec<Vec<GoldenInt>>,
}

impl RootMatrices {
    fn new(sys: &CoxeterSystem) -> Result<Self> {
        let n = sys.rank();
        let mut cartan = vec![vec![GoldenInt::ZERO; n]; n];
        for i in 0..n {
            for j in 0..n {
                cartan[i][j] = match (sys.m(i, j), i < j) {
                    (1, _) => GoldenInt::int(2),
                    (2, _) => GoldenInt::ZERO,
                    (3, _) => GoldenInt::int(-1),
                    (4, true) => GoldenInt::int(-2),
                    (4, false) => GoldenInt::int(-1),
                    (5, _) => GoldenInt { a: 0, b: -1 },
                    (6, true) => GoldenInt::int(-3),
                    (6, false) => GoldenInt::int(-1),
                    (m, _) => {
                        return Err(Error::Unsupported(format!(
                            "no exact matrix model for bond m = {m}"
                        )))
                    }
                };
            }
        }
        Ok(RootMatrices { n, cartan })
    }
}

impl Model for RootMatrices {
    /// Row-major `n x n`.
    type Elem = Vec<GoldenInt>;
    fn identity(&self) -> Vec<GoldenInt> {
        let n = self.n;
        let mut m = vec![GoldenInt::ZERO; n * n];
        for i in 0..n {
            m[i * n + i] = GoldenInt::ONE;
        }
        m
    }
    fn mul_gen(&self, w: &Vec<GoldenInt>, i: usize) -> Vec<GoldenInt> {
        // (W S_i) e_j = W e_j - c_ij W e_i: column j minus c_ij times column i
        let n = self.n;
        let mut out = w.clone();
        for j in 0..n {
            let c = self.cartan[i][j];
            if j == i || c == GoldenInt::ZERO {
                continue;
            }
            for r in 0..n {
                out[r * n + j] = out[r * n + j].sub(c.mul(w[r * n + i]));
            }
        }
        for r in 0..n {
            out[r * n + i] = GoldenInt::ZERO.sub(w[r * n + i]);
        }
        out
    }
}

/// A finite Coxeter group with its right Cayley table.
#[derive(Clone)]
pub struct CoxeterGroup {
    system: CoxeterSystem,
    rank: usize,
    /// `right[w * rank + i]` = index of `w s_i`.
    right: Vec<u32>,
    /// Breadth-first parent and the generator leading from it.
    parent: Vec<(u32, u8)>,
    length: Vec<u32>,
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterGroup({}, order {})", self.system.label(), self.order())
    }
}

/// Right Cayley table, breadth-first parents, lengths.
type Table = (Vec<u32>, Vec<(u32, u8)>, Vec<u32>);

fn breadth_first<M: Model>(model: &M, rank: usize, max_order: u64) -> Result<Table> {
    let mut index: HashMap<M::Elem, u32> = HashMap::new();
    let mut elems = vec![model.identity()];
    index.insert(model.identity(), 0);
    let mut parent = vec![(0u32, 0u8)];
    let mut length = vec![0u32];
    let mut right: Vec<u32> = Vec::new();
    let mut queue = VecDeque::from([0u32]);
    while let Some(w) = queue.pop_front() {
        for i in 0..rank {
            let next = model.mul_gen(&elems[w as usize], i);
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = elems.len() as u32;
                    if id as u64 >= max_order {
                        return Err(Error::Unsupported(format!(
                            "group has more than {max_order} elements"
                        )));
                    }
                    index.insert(next.clone(), id);
                    elems.push(next);
                    parent.push((w, i as u8));
                    length.push(length[w as usize] + 1);
                    queue.push_back(id);
                    id
                }
            };
            right.push(id);
        }
    }
    // rows were filled in queue order, which is index order
    Ok((right, parent, length))
}

impl CoxeterGroup {
    pub fn enumerate(sys: &CoxeterSystem, limits: GroupLimits) -> Result<Self> {
        let rank = sys.rank();
        if rank == 0 {
            return Err(Error::Unsupported("rank-0 Coxeter system".into()));
        }
        match sys.kind() {
            Some(k) if k.is_affine() => {
                return Err(Error::Unsupported(format!("{k} is infinite")));
            }
            _ => {}
        }
        if let Some(order) = sys.order() {
            if order > limits.max_order {
                return Err(Error::Unsupported(format!(
                    "{} has {order} elements, above the limit {} (raise it with {MAX_ORDER_ENV})",
                    sys.label(),
                    limits.max_order
                )));
            }
        }
        let (right, parent, length) = match sys.kind() {
            Some(CoxeterType::A(n)) => breadth_first(&Permutations(n), rank, limits.max_order)?,
            Some(CoxeterType::B(n)) => {
                breadth_first(&SignedPermutations { n, even: false }, rank, limits.max_order)?
            }
            Some(CoxeterType::D(n)) => {
                breadth_first(&SignedPermutations { n, even: true }, rank, limits.max_order)?
            }
            Some(CoxeterType::I2(m)) => breadth_first(&Dihedral(m), rank, limits.max_order)?,
            _ => breadth_first(&RootMatrices::new(sys)?, rank, limits.max_order)?,
        };
        let group = CoxeterGroup {
            system: sys.clone(),
            rank,
            right,
            parent,
            length,
        };
        if let Some(order) = sys.order() {
            if group.order() as u64 != order {
                return Err(Error::Consistency(format!(
                    "{} enumerated to {} elements, expected {order}",
                    sys.label(),
                    group.order()
                )));
            }
        }
        Ok(group)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn graph(&self) -> Graph {
        self.system.coxeter_graph()
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> {
        (0..self.order() as u32).map(GroupElement)
    }

    pub fn element(&self, index: usize) -> GroupElement {
        assert!(index < self.order());
        GroupElement(index as u32)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(0)
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        self.mul_gen(self.identity(), i)
    }

    pub fn mul_gen(&self, w: GroupElement, i: usize) -> GroupElement {
        assert!(i < self.rank, "generator {i} out of range");
        GroupElement(self.right[w.index() * self.rank + i])
    }

    pub fn length(&self, w: GroupElement) -> usize {
        self.length[w.index()] as usize
    }

    /// A reduced word for `w` (0-based generator indices).
    pub fn word(&self, w: GroupElement) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.length(w));
        let mut x = w.0;
        while x != 0 {
            let (p, g) = self.parent[x as usize];
            out.push(g as usize);
            x = p;
        }
        out.reverse();
        out
    }

    /// `s1s2s1` style, generators 1-based; the identity is `e`.
    pub fn word_string(&self, w: GroupElement) -> String {
        let word = self.word(w);
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|g| format!("s{}", g + 1)).collect()
    }

    pub fn from_word(&self, word: &[usize]) -> GroupElement {
        word.iter().fold(self.identity(), |w, &i| self.mul_gen(w, i))
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        self.word(b).into_iter().fold(a, |w, i| self.mul_gen(w, i))
    }

    pub fn inverse(&self, w: GroupElement) -> GroupElement {
        self.word(w)
            .into_iter()
            .rev()
            .fold(self.identity(), |x, i| self.mul_gen(x, i))
    }

    /// Order of `w` in the group.
    pub fn element_order(&self, w: GroupElement) -> usize {
        let mut x = w;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, w);
            k += 1;
        }
        k
    }

    /// The subgroup generated by the simple reflections in `subset`.
    pub fn parabolic_subgroup(&self, subset: NodeSet) -> Vec<GroupElement> {
        self.closure_under(self.identity(), subset)
    }

    /// `w W_S`, found by right-multiplying with generators of `S`.
    fn closure_under(&self, w: GroupElement, subset: NodeSet) -> Vec<GroupElement> {
        let mut seen = vec![w];
        let mut mark = std::collections::HashSet::from([w]);
        let mut i = 0;
        while i < seen.len() {
            let x = seen[i];
            i += 1;
            for g in subset.iter() {
                let y = self.mul_gen(x, g);
                if mark.insert(y) {
                    seen.push(y);
                }
            }
        }
        seen.sort();
        seen
    }

    /// Number of left cosets `w W_S`, counted by marking each coset.
    pub fn coset_count(&self, subset: NodeSet) -> usize {
        let mut marked = vec![false; self.order()];
        let mut count = 0;
        for w in self.elements() {
            if marked[w.index()] {
                continue;
            }
            count += 1;
            for x in self.closure_under(w, subset) {
                marked[x.index()] = true;
            }
        }
        count
    }

    fn check_subset(&self, subset: NodeSet) -> Result<()> {
        if !subset.is_subset(NodeSet::full(self.rank)) {
            return Err(Error::InvalidNode {
                node: subset.difference(NodeSet::full(self.rank)).min().unwrap_or(0),
                node_count: self.rank,
            });
        }
        Ok(())
    }

    /// The longest element of the parabolic subgroup on `subset`, found by
    /// greedily multiplying with any generator of `subset` that increases
    /// length, lowest index first.
    pub fn longest_parabolic_element(&self, subset: NodeSet) -> Result<GroupElement> {
        self.check_subset(subset)?;
        let mut w = self.identity();
        'grow: loop {
            for i in subset.iter() {
                let next = self.mul_gen(w, i);
                if self.length(next) > self.length(w) {
                    w = next;
                    continue 'grow;
                }
            }
            return Ok(w);
        }
    }

    /// The longest element of the parabolic subgroup of the tube.
    pub fn mock_reflection(&self, t: Tube) -> Result<GroupElement> {
        Tube::from_set(&self.graph(), t.nodes())?;
        self.longest_parabolic_element(t.nodes())
    }

    pub fn mock_reflection_of(&self, nodes: &[usize]) -> Result<GroupElement> {
        self.mock_reflection(Tube::new(&self.graph(), nodes)?)
    }

    /// The chamber across the facet labeled `t` of chamber `w`.
    pub fn neighbor(&self, w: GroupElement, t: Tube) -> Result<GroupElement> {
        Ok(self.mul(w, self.mock_reflection(t)?))
    }

    /// The permutation of `subset` induced by conjugating its generators with
    /// the longest element `w0` of `W_subset`: `w0 s_i w0 = s_{sigma(i)}`.
    pub fn longest_element_twist(&self, subset: NodeSet) -> Result<Vec<usize>> {
        let w0 = self.longest_parabolic_element(subset)?;
        let mut sigma: Vec<usize> = (0..self.rank).collect();
        for i in subset.iter() {
            let conj = self.mul(self.mul(w0, self.generator(i)), w0);
            sigma[i] = subset
                .iter()
                .find(|&j| self.generator(j) == conj)
                .ok_or_else(|| {
                    Error::Consistency(format!("w0 s_{i} w0 is not a simple reflection"))
                })?;
        }
        Ok(sigma)
    }
}
