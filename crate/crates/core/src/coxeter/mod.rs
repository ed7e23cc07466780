//! Crystallographic Coxeter systems `(W, S)`.
//!
//! A system is given by its Coxeter matrix. Group elements are handled
//! through the action of `W` on the root lattice of an associated
//! generalized Cartan matrix: `s_i` is a left descent of `w` exactly when
//! `w^-1(alpha_i)` is a negative root, which decides `|s_i w|` against `|w|`
//! with integer arithmetic only. Every element is stored as its
//! ShortLex-least reduced word, so equal elements have equal words.

mod classes;
mod element;
mod label;
mod table;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use classes::{ConjugacyClass, SpecialElements};
pub use element::Element;
pub use label::{Family, TypeLabel};
pub use table::{ElemId, GroupTable};

/// Upper bound on generator count; words are stored as bytes.
pub const MAX_RANK: usize = 64;

/// An entry `m_ij` of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bond {
    Order(u32),
    Infinite,
}

impl Bond {
    pub fn is_odd(self) -> bool {
        matches!(self, Bond::Order(m) if m % 2 == 1)
    }

    /// `m_ij = 2`, i.e. the generators commute.
    pub fn commutes(self) -> bool {
        self == Bond::Order(2)
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Order(m) => write!(f, "{m}"),
            Bond::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("Coxeter matrix is not square")]
    NotSquare,
    #[error("Coxeter matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("diagonal entry m_{0}{0} must be 1")]
    BadDiagonal(usize),
    #[error("off-diagonal entry m_{0}{1} must be at least 2")]
    BondTooSmall(usize, usize),
    #[error("bond order {0} is not crystallographic (allowed: 2, 3, 4, 6, inf)")]
    UnsupportedBond(u32),
    #[error("rank {0} exceeds the supported maximum")]
    RankTooLarge(usize),
    #[error("unknown type label `{0}`")]
    UnknownLabel(String),
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("element does not belong to this system")]
    MixedSystems,
    #[error("the group is infinite; a length bound is required")]
    InfiniteGroup,
    #[error("the system is reducible")]
    Reducible,
    #[error("root coordinates overflowed while reducing a word")]
    Overflow,
    #[error("group table would exceed {0} elements")]
    TooLarge(usize),
}

/// A validated Coxeter system together with its reflection data.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterSystem {
    rank: usize,
    matrix: Vec<Bond>,
    // generalized Cartan matrix, row-major: s_i(alpha_j) = alpha_j - a_ij alpha_i
    cartan: Vec<i64>,
    label: Option<String>,
    components: Vec<Component>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Component {
    nodes: Vec<usize>,
    kind: Option<TypeLabel>,
}

impl Component {
    fn is_finite(&self) -> bool {
        self.kind.as_ref().is_some_and(|k| !k.affine)
    }
}

impl CoxeterSystem {
    /// Builds a system from a type label such as `B3` or `~G2`.
    pub fn from_label(label: &str) -> Result<Self, CoxeterError> {
        let ty: TypeLabel = label.parse()?;
        Self::from_type(ty)
    }

    pub fn from_type(ty: TypeLabel) -> Result<Self, CoxeterError> {
        let mut sys = Self::from_matrix(ty.coxeter_matrix())?;
        sys.label = Some(alloc::format!("{ty}"));
        Ok(sys)
    }

    /// Builds a system from an explicit Coxeter matrix.
    pub fn from_matrix(rows: Vec<Vec<Bond>>) -> Result<Self, CoxeterError> {
        let rank = rows.len();
        if rank > MAX_RANK {
            return Err(CoxeterError::RankTooLarge(rank));
        }
        if rows.iter().any(|r| r.len() != rank) {
            return Err(CoxeterError::NotSquare);
        }
        for i in 0..rank {
            if rows[i][i] != Bond::Order(1) {
                return Err(CoxeterError::BadDiagonal(i));
            }
            for j in 0..rank {
                if rows[i][j] != rows[j][i] {
                    return Err(CoxeterError::Asymmetric(i, j));
                }
                if i != j {
                    match rows[i][j] {
                        Bond::Order(m) if m < 2 => return Err(CoxeterError::BondTooSmall(i, j)),
                        Bond::Order(m) if !matches!(m, 2 | 3 | 4 | 6) => {
                            return Err(CoxeterError::UnsupportedBond(m))
                        }
                        _ => {}
                    }
                }
            }
        }
        let matrix: Vec<Bond> = rows.into_iter().flatten().collect();
        let mut cartan = vec![0i64; rank * rank];
        for i in 0..rank {
            cartan[i * rank + i] = 2;
            for j in (i + 1)..rank {
                // any pair with a_ij * a_ji = 4 cos^2(pi / m) realizes the bond
                let (a, b) = match matrix[i * rank + j] {
                    Bond::Order(2) => (0, 0),
                    Bond::Order(3) => (-1, -1),
                    Bond::Order(4) => (-1, -2),
                    Bond::Order(6) => (-1, -3),
                    Bond::Infinite => (-2, -2),
                    Bond::Order(_) => unreachable!(),
                };
                cartan[i * rank + j] = a;
                cartan[j * rank + i] = b;
            }
        }
        let components = label::components(rank, &matrix)
            .into_iter()
            .map(|nodes| {
                let kind = label::classify(&nodes, rank, &matrix);
                Component { nodes, kind }
            })
            .collect::<Vec<_>>();
        let label = if !components.is_empty() && components.iter().all(|c| c.kind.is_some()) {
            let names: Vec<String> = components
                .iter()
                .map(|c| alloc::format!("{}", c.kind.as_ref().unwrap()))
                .collect();
            Some(names.join("x"))
        } else {
            None
        };
        Ok(CoxeterSystem { rank, matrix, cartan, label, components })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bond(&self, i: usize, j: usize) -> Bond {
        self.matrix[i * self.rank + j]
    }

    /// The Coxeter matrix as rows.
    pub fn matrix(&self) -> Vec<Vec<Bond>> {
        self.matrix.chunks(self.rank.max(1)).take(self.rank).map(|r| r.to_vec()).collect()
    }

    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i * self.rank + j]
    }

    pub fn type_label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// True exactly when every irreducible component is of finite type.
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(Component::is_finite)
    }

    pub fn is_irreducible(&self) -> bool {
        self.components.len() == 1
    }

    /// Group order from the classification, when finite.
    pub fn order(&self) -> Option<u128> {
        self.components
            .iter()
            .map(|c| c.kind.as_ref().filter(|k| !k.affine).map(TypeLabel::finite_order))
            .product::<Option<u128>>()
    }

    /// Node sets of the irreducible components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components.iter().map(|c| c.nodes.clone()).collect()
    }

    /// The action matrix of `w^-1` on simple roots, built for the word
    /// `s_{a_1} ... s_{a_k}` by left multiplications.
    fn inverse_action(&self, word: &[usize]) -> Result<RootAction, CoxeterError> {
        let mut act = RootAction::identity(self.rank);
        for &s in word.iter().rev() {
            if s >= self.rank {
                return Err(CoxeterError::IndexOutOfRange { index: s, rank: self.rank });
            }
            act.left_mul(self, s)?;
        }
        Ok(act)
    }
}

/// Columns hold `w^-1(alpha_j)` in simple-root coordinates.
#[derive(Debug, Clone)]
struct RootAction {
    rank: usize,
    // column-major: cols[j * rank + k] = coefficient of alpha_k in w^-1(alpha_j)
    cols: Vec<i64>,
}

impl RootAction {
    fn identity(rank: usize) -> Self {
        let mut cols = vec![0; rank * rank];
        for i in 0..rank {
            cols[i * rank + i] = 1;
        }
        RootAction { rank, cols }
    }

    fn column(&self, j: usize) -> &[i64] {
        &self.cols[j * self.rank..(j + 1) * self.rank]
    }

    /// Whether `s_i` is a left descent, i.e. `w^-1(alpha_i) < 0`.
    fn is_left_descent(&self, i: usize) -> bool {
        self.column(i).iter().find(|&&c| c != 0).is_some_and(|&c| c < 0)
    }

    fn first_left_descent(&self) -> Option<usize> {
        (0..self.rank).find(|&i| self.is_left_descent(i))
    }

    /// `w -> s_i w`, i.e. `w^-1 -> w^-1 s_i`.
    fn left_mul(&mut self, sys: &CoxeterSystem, i: usize) -> Result<(), CoxeterError> {
        let r = self.rank;
        let mut pivot = [0i64; MAX_RANK];
        pivot[..r].copy_from_slice(self.column(i));
        for j in 0..r {
            let a = sys.cartan(i, j);
            if a == 0 {
                continue;
            }
            for k in 0..r {
                let delta = a.checked_mul(pivot[k]).ok_or(CoxeterError::Overflow)?;
                let cell = &mut self.cols[j * r + k];
                *cell = cell.checked_sub(delta).ok_or(CoxeterError::Overflow)?;
            }
        }
        Ok(())
    }
}
