//! The base graphs and the four extremal tricyclic families.
//!
//! Each family member `T_i(n, k)` is a tricyclic base graph with `k` pendant
//! paths of nearly equal lengths hung from its vertex 0:
//!
//! | family | base | base order | cycles | degree of vertex 0 |
//! |--------|------|-----------:|-------:|-------------------:|
//! | `T3`   | three triangles sharing vertex 0 | 7 | 3 | 6 |
//! | `T4`   | theta graph with paths of lengths 1, 2, 2 between 0 and 1, plus a triangle at 0 | 6 | 4 | 5 |
//! | `T6`   | vertices 0 and 1 joined by paths of lengths 1, 2, 2, 2 | 5 | 6 | 4 |
//! | `T7`   | `K4` | 4 | 7 | 3 |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{CycleClass, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("k must be at least 1")]
    ZeroPendants,
    #[error("{family} needs n >= {min} for k = {k}, got n = {order}")]
    OrderTooSmall { family: FamilyId, order: usize, k: usize, min: usize },
    #[error("T3 requires k <= n - 7 (n = {order}, k = {k})")]
    TooManyPendants { order: usize, k: usize },
    #[error("cannot split {total} vertices into {paths} nonempty paths")]
    TooFewVertices { total: usize, paths: usize },
    #[error("unknown family {0:?}")]
    Unknown(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseId {
    G1,
    G2,
    G3,
    K4,
}

impl BaseId {
    pub fn order(self) -> usize {
        match self {
            BaseId::G1 => 7,
            BaseId::G2 => 6,
            BaseId::G3 => 5,
            BaseId::K4 => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyId {
    T3,
    T4,
    T6,
    T7,
}

impl FamilyId {
    pub const ALL: [FamilyId; 4] = [FamilyId::T3, FamilyId::T4, FamilyId::T6, FamilyId::T7];

    pub fn base(self) -> BaseId {
        match self {
            FamilyId::T3 => BaseId::G1,
            FamilyId::T4 => BaseId::G2,
            FamilyId::T6 => BaseId::G3,
            FamilyId::T7 => BaseId::K4,
        }
    }

    pub fn cycle_class(self) -> CycleClass {
        let count = match self {
            FamilyId::T3 => 3,
            FamilyId::T4 => 4,
            FamilyId::T6 => 6,
            FamilyId::T7 => 7,
        };
        CycleClass::new(count).expect("valid class")
    }

    pub fn for_class(class: CycleClass) -> FamilyId {
        match class.count() {
            3 => FamilyId::T3,
            4 => FamilyId::T4,
            6 => FamilyId::T6,
            _ => FamilyId::T7,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "T3" => Ok(FamilyId::T3),
            "T4" => Ok(FamilyId::T4),
            "T6" => Ok(FamilyId::T6),
            "T7" => Ok(FamilyId::T7),
            _ => Err(FamilyError::Unknown(s.to_owned())),
        }
    }
}

/// A validated `(family, n, k)` triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    family: FamilyId,
    order: usize,
    pendants: usize,
}

impl FamilySpec {
    pub fn new(family: FamilyId, order: usize, pendants: usize) -> Result<Self, FamilyError> {
        if pendants == 0 {
            return Err(FamilyError::ZeroPendants);
        }
        let min = family.base().order() + pendants;
        if order < min {
            return Err(FamilyError::OrderTooSmall { family, order, k: pendants, min });
        }
        if family == FamilyId::T3 && pendants + 7 > order {
            return Err(FamilyError::TooManyPendants { order, k: pendants });
        }
        Ok(FamilySpec { family, order, pendants })
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn pendants(&self) -> usize {
        self.pendants
    }
}

/// `k` lengths summing to `total`, each `floor(total/k)` or `ceil(total/k)`,
/// longest first.
pub fn nearly_equal_lengths(total: usize, k: usize) -> Result<Vec<usize>, FamilyError> {
    if k == 0 {
        return Err(FamilyError::ZeroPendants);
    }
    if total < k {
        return Err(FamilyError::TooFewVertices { total, paths: k });
    }
    let (q, r) = (total / k, total % k);
    Ok((0..k).map(|i| if i < r { q + 1 } else { q }).collect())
}

pub fn base_graph(id: BaseId) -> Graph {
    let edges: &[(usize, usize)] = match id {
        // hub 0; triangles 0-1-2, 0-3-4, 0-5-6
        BaseId::G1 => &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5), (0, 6), (5, 6)],
        // 0 and 1 joined directly, through 2 and through 3; triangle 0-4-5
        BaseId::G2 => &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (0, 5), (4, 5)],
        // 0 and 1 joined directly and through 2, 3 and 4
        BaseId::G3 => &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4)],
        BaseId::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    };
    Graph::new(id.order(), edges.iter().copied()).expect("base graphs are simple")
}

pub fn construct_family(spec: &FamilySpec) -> Graph {
    let base = base_graph(spec.family.base());
    let lengths = nearly_equal_lengths(spec.order - base.order(), spec.pendants)
        .expect("spec guarantees at least one vertex per path");
    base.attach_pendant_paths(0, &lengths).expect("vertex 0 exists and lengths are positive")
}

/// Degree of the vertex carrying the pendant paths, which is the maximum degree.
pub fn family_max_degree(family: FamilyId, k: usize) -> usize {
    k + match family {
        FamilyId::T3 => 6,
        FamilyId::T4 => 5,
        FamilyId::T6 => 4,
        FamilyId::T7 => 3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_cycles, cycle_class};

    #[test]
    fn lengths() {
        assert_eq!(nearly_equal_lengths(7, 3).unwrap(), vec![3, 2, 2]);
        assert_eq!(nearly_equal_lengths(5, 5).unwrap(), vec![1; 5]);
        assert_eq!(nearly_equal_lengths(4, 1).unwrap(), vec![4]);
        assert!(nearly_equal_lengths(2, 3).is_err());
    }

    #[test]
    fn base_graphs() {
        let g1 = base_graph(BaseId::G1);
        assert_eq!((g1.order(), g1.size()), (7, 9));
        assert_eq!(g1.degrees(), vec![6, 2, 2, 2, 2, 2, 2]);
        let k4 = base_graph(BaseId::K4);
        assert_eq!((k4.order(), k4.size()), (4, 6));
        assert!(k4.is_regular());
        let g3 = base_graph(BaseId::G3);
        assert_eq!(g3.degrees(), vec![4, 4, 2, 2, 2]);
        let g2 = base_graph(BaseId::G2);
        assert_eq!(g2.degrees(), vec![5, 3, 2, 2, 2, 2]);
        for id in [BaseId::G1, BaseId::G2, BaseId::G3, BaseId::K4] {
            let g = base_graph(id);
            assert!(g.is_tricyclic());
            assert_eq!(g.size(), id.order() + 2);
        }
        assert_eq!(count_cycles(&g2).unwrap(), 4);
        assert_eq!(count_cycles(&g3).unwrap(), 6);
    }

    #[test]
    fn spec_validation() {
        assert!(FamilySpec::new(FamilyId::T3, 8, 2).is_err());
        assert!(FamilySpec::new(FamilyId::T3, 8, 0).is_err());
        assert!(FamilySpec::new(FamilyId::T7, 5, 2).is_err());
        assert!(FamilySpec::new(FamilyId::T7, 6, 2).is_ok());
    }

    #[test]
    fn examples() {
        let t3 = construct_family(&FamilySpec::new(FamilyId::T3, 8, 1).unwrap());
        assert_eq!((t3.order(), t3.size(), t3.max_degree()), (8, 10, 7));
        assert_eq!(cycle_class(&t3).unwrap().count(), 3);
        let t7 = construct_family(&FamilySpec::new(FamilyId::T7, 8, 1).unwrap());
        assert_eq!(t7.max_degree(), 4);
        assert_eq!(cycle_class(&t7).unwrap().count(), 7);
        let t4 = construct_family(&FamilySpec::new(FamilyId::T4, 9, 2).unwrap());
        assert_eq!(t4.max_degree(), 7);
        assert_eq!(cycle_class(&t4).unwrap().count(), 4);
    }

    #[test]
    fn max_degree_table() {
        assert_eq!(family_max_degree(FamilyId::T3, 1), 7);
        assert_eq!(family_max_degree(FamilyId::T6, 2), 6);
        assert_eq!(family_max_degree(FamilyId::T7, 3), 6);
    }

    #[test]
    fn parses_ids() {
        assert_eq!("t6".parse::<FamilyId>().unwrap(), FamilyId::T6);
        assert!("T5".parse::<FamilyId>().is_err());
    }
}
