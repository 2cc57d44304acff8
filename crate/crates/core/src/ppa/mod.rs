//! Deformed preprojective algebras `P^f(Delta)` over `GF(p)`.
//!
//! ```
//! use loctri::dynkin::{DynkinTree, Family};
//! use loctri::ppa::{build_algebra, NCPolynomial};
//!
//! let a2 = DynkinTree::build(Family::A, 2).unwrap();
//! let alg = build_algebra(&a2, &NCPolynomial::zero(), 5, None).unwrap();
//! assert_eq!(alg.dim(), 4);
//! assert_eq!(alg.nakayama_permutation().unwrap(), vec![1, 0]);
//! ```

mod algebra;
mod engine;
mod poly;
mod quiver;
mod relations;

pub use algebra::{build_algebra, invariant_report, InvariantDiff, InvariantReport, PathQuotientAlgebra};
pub use engine::SparseVec;
pub use poly::{display_terms, word_name, NCPolynomial, Word};
pub use quiver::{Arrow, DoubleQuiver, DoubleQuiverJson, Element, Path, Quiver};
pub use relations::{deformed_relations, local_ring, local_ring_basis, reduce_deformation};

use crate::dynkin::DynkinError;

pub const DEFAULT_CHARACTERISTIC: u64 = 32003;
/// Paths enumerated by the mixed-degree engine before giving up.
pub const WORD_BUDGET: usize = 1_000_000;

pub fn default_degree_cap(rank: usize) -> usize {
    4 * rank + 8
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PpaError {
    #[error("deformation does not fit R({family}): expected at most {arity} variable(s)")]
    DeformationArityMismatch { family: String, arity: usize },
    #[error("deformation term {word} is not in rad^2")]
    NotInRadicalSquare { word: String },
    #[error("no vanishing length level up to degree cap {cap}")]
    DegreeCapExceeded { cap: usize },
    #[error("socle of e_{vertex} A is not simple")]
    NotSelfinjective { vertex: usize },
    #[error("characteristic {0} is not a supported prime")]
    InvalidCharacteristic(u64),
    #[error("more than {budget} paths below the truncation length")]
    WordBudgetExceeded { budget: usize },
    #[error("parse error at offset {offset}: {message}")]
    ParseError { offset: usize, message: String },
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
}

impl PpaError {
    pub fn code(&self) -> &'static str {
        match self {
            PpaError::DeformationArityMismatch { .. } => "DeformationArityMismatch",
            PpaError::NotInRadicalSquare { .. } => "NotInRadicalSquare",
            PpaError::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            PpaError::NotSelfinjective { .. } => "NotSelfinjective",
            PpaError::InvalidCharacteristic(_) => "InvalidCharacteristic",
            PpaError::WordBudgetExceeded { .. } => "WordBudgetExceeded",
            PpaError::ParseError { .. } => "ParseError",
            PpaError::Dynkin(e) => e.code(),
        }
    }
}
