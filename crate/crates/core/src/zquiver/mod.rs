//! The repetition quiver `Z Delta` and its finite orbit quivers.

pub mod identify;
pub mod quotient;
pub mod repetition;
pub mod validate;

pub use identify::{identify_type, subadditive_function, IdentifiedType};
pub use quotient::{orbit_quotient, OrbitQuiver, ValuedArrow};
pub use repetition::{neighbors, parse_vertex, ZVertex};
pub use validate::{validate_translation_quiver, Violation};

use crate::automorphism::AutError;
use crate::dynkin::DynkinError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("invalid vertex `{0}`")]
    InvalidVertex(String),
    #[error("{0} does not generate a weakly admissible group")]
    NotWeaklyAdmissible(String),
    #[error("{0} has net shift zero; the orbit quiver is infinite")]
    InfiniteQuotient(String),
    #[error("not of Dynkin type: {0}")]
    NotDynkinType(String),
    #[error(transparent)]
    Aut(#[from] AutError),
}

impl From<DynkinError> for QuiverError {
    fn from(e: DynkinError) -> Self {
        QuiverError::Aut(e.into())
    }
}

impl QuiverError {
    pub fn code(&self) -> &'static str {
        match self {
            QuiverError::InvalidVertex(_) => "InvalidVertex",
            QuiverError::NotWeaklyAdmissible(_) => "NotWeaklyAdmissible",
            QuiverError::InfiniteQuotient(_) => "InfiniteQuotient",
            QuiverError::NotDynkinType(_) => "NotDynkinType",
            QuiverError::Aut(e) => e.code(),
        }
    }
}
