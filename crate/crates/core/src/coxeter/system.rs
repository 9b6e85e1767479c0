use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Catalog families. Affine types only supply Coxeter graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H3,
    H4,
    I2(u32),
    AffineA(usize),
    AffineB(usize),
    AffineC(usize),
}

impl CoxeterType {
    pub fn is_affine(self) -> bool {
        matches!(
            self,
            CoxeterType::AffineA(_) | CoxeterType::AffineB(_) | CoxeterType::AffineC(_)
        )
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoxeterType::A(n) => write!(f, "A{n}"),
            CoxeterType::B(n) => write!(f, "B{n}"),
            CoxeterType::D(n) => write!(f, "D{n}"),
            CoxeterType::E(n) => write!(f, "E{n}"),
            CoxeterType::F4 => write!(f, "F4"),
            CoxeterType::H3 => write!(f, "H3"),
            CoxeterType::H4 => write!(f, "H4"),
            CoxeterType::I2(m) => write!(f, "I2:{m}"),
            CoxeterType::AffineA(n) => write!(f, "affineA:{n}"),
            CoxeterType::AffineB(n) => write!(f, "affineB:{n}"),
            CoxeterType::AffineC(n) => write!(f, "affineC:{n}"),
        }
    }
}

/// A Coxeter matrix with a label. `matrix[i][j]` is the order of
/// `s_i s_j`; the diagonal is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterSystem {
    label: String,
    kind: Option<CoxeterType>,
    matrix: Vec<Vec<u32>>,
}

fn path_matrix(n: usize) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in 1..n {
        m[i - 1][i] = 3;
        m[i][i - 1] = 3;
    }
    m
}

fn set(m: &mut [Vec<u32>], i: usize, j: usize, v: u32) {
    m[i][j] = v;
    m[j][i] = v;
}

fn matrix_for(kind: CoxeterType) -> Result<Vec<Vec<u32>>> {
    let bad = || Error::Unsupported(format!("no Coxeter system {kind}"));
    Ok(match kind {
        CoxeterType::A(n) if n >= 1 => path_matrix(n),
        CoxeterType::B(n) if n >= 2 => {
            let mut m = path_matrix(n);
            set(&mut m, 0, 1, 4);
            m
        }
        CoxeterType::D(n) if n >= 4 => {
            // nodes 0 and 1 both hang off node 2
            let mut m = vec![vec![2u32; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            set(&mut m, 0, 2, 3);
            for i in 2..n {
                set(&mut m, i - 1, i, 3);
            }
            set(&mut m, 0, 1, 2);
            m
        }
        CoxeterType::E(n) if (6..=8).contains(&n) => {
            // chain 0..n-2 with node n-1 attached to node 2
            let mut m = vec![vec![2u32; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            for i in 1..n - 1 {
                set(&mut m, i - 1, i, 3);
            }
            set(&mut m, 2, n - 1, 3);
            m
        }
        CoxeterType::F4 => {
            let mut m = path_matrix(4);
            set(&mut m, 1, 2, 4);
            m
        }
        CoxeterType::H3 | CoxeterType::H4 => {
            let mut m = path_matrix(if kind == CoxeterType::H3 { 3 } else { 4 });
            set(&mut m, 0, 1, 5);
            m
        }
        CoxeterType::I2(p) if p >= 2 => vec![vec![1, p], vec![p, 1]],
        CoxeterType::AffineA(n) if n >= 2 => {
            let mut m = path_matrix(n + 1);
            set(&mut m, 0, n, 3);
            m
        }
        CoxeterType::AffineB(n) if n >= 3 => {
            let mut m = vec![vec![2u32; n + 1]; n + 1];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 1;
            }
            set(&mut m, 0, 2, 3);
            for i in 2..n {
                set(&mut m, i - 1, i, 3);
            }
            set(&mut m, 0, 1, 2);
            set(&mut m, n - 1, n, 4);
            m
        }
        CoxeterType::AffineC(n) if n >= 2 => {
            let mut m = path_matrix(n + 1);
            set(&mut m, 0, 1, 4);
            set(&mut m, n - 1, n, 4);
            m
        }
        _ => return Err(bad()),
    })
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

impl CoxeterSystem {
    pub fn of_type(kind: CoxeterType) -> Result<Self> {
        Ok(CoxeterSystem {
            label: kind.to_string(),
            kind: Some(kind),
            matrix: matrix_for(kind)?,
        })
    }

    /// A system given directly by its matrix; `0` entries are not allowed
    /// (no infinite bonds).
    pub fn from_matrix(label: &str, matrix: Vec<Vec<u32>>) -> Result<Self> {
        let n = matrix.len();
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!("Coxeter matrix row {i} has the wrong length")));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 1 {
                    return Err(Error::InvalidGraph(format!("m[{i}][{i}] must be 1, got {m}")));
                }
                if i != j && m < 2 {
                    return Err(Error::InvalidGraph(format!("m[{i}][{j}] must be at least 2, got {m}")));
                }
                if matrix[j][i] != m {
                    return Err(Error::InvalidGraph(format!("Coxeter matrix is not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(CoxeterSystem {
            label: label.to_string(),
            kind: None,
            matrix,
        })
    }

    /// Parses catalog names such as `A3`, `B4`, `D5`, `E6`, `F4`, `H3`,
    /// `I2:7`, `affineA:2`, `affineB:3`, `affineC:2`.
    pub fn parse(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown Coxeter system {name:?}"));
        let kind = if let Some((family, arg)) = name.split_once(':') {
            let k: usize = arg.parse().map_err(|_| bad())?;
            match family {
                "I2" => CoxeterType::I2(u32::try_from(k).map_err(|_| bad())?),
                "affineA" => CoxeterType::AffineA(k),
                "affineB" => CoxeterType::AffineB(k),
                "affineC" => CoxeterType::AffineC(k),
                _ => return Err(bad()),
            }
        } else {
            match name {
                "F4" => CoxeterType::F4,
                "H3" => CoxeterType::H3,
                "H4" => CoxeterType::H4,
                _ => {
                    let mut chars = name.chars();
                    let head = chars.next().ok_or_else(bad)?;
                    let k: usize = chars.as_str().parse().map_err(|_| bad())?;
                    match head {
                        'A' => CoxeterType::A(k),
                        'B' => CoxeterType::B(k),
                        'D' => CoxeterType::D(k),
                        'E' => CoxeterType::E(k),
                        _ => return Err(bad()),
                    }
                }
            }
        };
        Self::of_type(kind)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> Option<CoxeterType> {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.matrix
    }

    /// Group order for catalog types; `None` for affine or unknown systems.
    pub fn order(&self) -> Option<u64> {
        let n = self.rank() as u64;
        Some(match self.kind? {
            CoxeterType::A(_) => factorial(n + 1),
            CoxeterType::B(_) => (1u64 << n) * factorial(n),
            CoxeterType::D(_) => (1u64 << (n - 1)) * factorial(n),
            CoxeterType::E(6) => 51_840,
            CoxeterType::E(7) => 2_903_040,
            CoxeterType::E(_) => 696_729_600,
            CoxeterType::F4 => 1_152,
            CoxeterType::H3 => 120,
            CoxeterType::H4 => 14_400,
            CoxeterType::I2(m) => 2 * m as u64,
            _ => return None,
        })
    }

    /// Nodes are generators; `i - j` is an edge iff `m_ij >= 3`.
    pub fn coxeter_graph(&self) -> Graph {
        let n = self.rank();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.matrix[i][j] >= 3 {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(n, &edges).expect("Coxeter graph is simple")
    }
}

pub fn coxeter_graph(sys: &CoxeterSystem) -> Graph {
    sys.coxeter_graph()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn graphs_of_catalog_types() {
        let a3 = CoxeterSystem::parse("A3").unwrap();
        assert_eq!(a3.coxeter_graph(), catalog::path(3).unwrap());
        let b3 = CoxeterSystem::parse("B3").unwrap();
        assert_eq!(b3.m(0, 1), 4);
        assert_eq!(b3.coxeter_graph(), catalog::path(3).unwrap());
        let aff = CoxeterSystem::parse("affineA:2").unwrap();
        assert_eq!(aff.coxeter_graph(), catalog::cycle(3).unwrap());
        assert_eq!(aff.order(), None);
        let d4 = CoxeterSystem::parse("D4").unwrap();
        assert_eq!(d4.coxeter_graph().edges(), vec![(0, 2), (1, 2), (2, 3)]);
        let e6 = CoxeterSystem::parse("E6").unwrap();
        assert_eq!(e6.coxeter_graph().edge_count(), 5);
        assert!(e6.coxeter_graph().is_connected());
        assert_eq!(CoxeterSystem::parse("I2:7").unwrap().order(), Some(14));
        assert_eq!(CoxeterSystem::parse("affineB:3").unwrap().rank(), 4);
        assert_eq!(CoxeterSystem::parse("affineC:2").unwrap().coxeter_graph(), catalog::path(3).unwrap());
    }

    #[test]
    fn orders() {
        let o = |s: &str| CoxeterSystem::parse(s).unwrap().order().unwrap();
        assert_eq!(o("A3"), 24);
        assert_eq!(o("B3"), 48);
        assert_eq!(o("D4"), 192);
        assert_eq!(o("F4"), 1152);
        assert_eq!(o("H4"), 14400);
        assert_eq!(o("E7"), 2_903_040);
    }

    #[test]
    fn rejects_malformed() {
        assert!(CoxeterSystem::parse("Z3").is_err());
        assert!(CoxeterSystem::parse("D3").is_err());
        assert!(CoxeterSystem::parse("E9").is_err());
        assert!(CoxeterSystem::parse("I2:x").is_err());
        assert!(CoxeterSystem::from_matrix("bad", vec![vec![1, 3], vec![2, 1]]).is_err());
        assert!(CoxeterSystem::from_matrix("bad", vec![vec![2, 3], vec![3, 1]]).is_err());
        assert!(CoxeterSystem::from_matrix("bad", vec![vec![1, 1], vec![1, 1]]).is_err());
        let ok = CoxeterSystem::from_matrix("A2", vec![vec![1, 3], vec![3, 1]]).unwrap();
        assert_eq!(ok.coxeter_graph().edges(), vec![(0, 1)]);
    }
}
