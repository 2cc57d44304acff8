//! Combinatorics of locally finite triangulated categories.
//!
//! * [`dynkin`]: Dynkin trees with a fixed numbering and orientation.
//! * [`automorphism`]: automorphisms of the repetition quiver `Z Delta`.
//! * [`zquiver`]: `Z Delta`, orbit quivers `Z Delta / G`, type identification.
//! * [`mesh`]: Hom dimensions in the mesh category and its orbit categories.
//! * [`classify`]: standardness criteria and quiver-level Calabi-Yau dimension.
//! * [`ppa`]: deformed preprojective algebras over prime fields.
//!
//! Linear algebra is generic over a [`field::Field`] context; the two
//! concrete fields used throughout are [`RationalField`] and [`Gf`].

pub mod automorphism;
pub mod classify;
pub mod dynkin;
pub mod field;
pub mod linalg;
pub mod mesh;
pub mod ppa;
pub mod zquiver;

pub use automorphism::{AutError, SlicedAutomorphism};
pub use dynkin::{DynkinError, DynkinTree, Family};
pub use zquiver::{OrbitQuiver, QuiverError, ZVertex};

/// Exact rationals.
pub type Rational = num_rational::BigRational;
/// Field context for [`Rational`].
pub type RationalField = field::Exact<Rational>;
/// Prime field with a runtime modulus.
pub type Gf = field::PrimeField;

/// Any error raised by the library, with a stable machine-readable code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Dynkin(#[from] DynkinError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Mesh(#[from] mesh::MeshError),
    #[error(transparent)]
    Classify(#[from] classify::ClassifyError),
    #[error(transparent)]
    Ppa(#[from] ppa::PpaError),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Dynkin(e) => e.code(),
            Error::Aut(e) => e.code(),
            Error::Quiver(e) => e.code(),
            Error::Mesh(e) => e.code(),
            Error::Classify(e) => e.code(),
            Error::Ppa(e) => e.code(),
        }
    }
}
