//! Exact combinatorics of Nakayama algebras.
//!
//! The crate models cyclic and linear Nakayama algebras by their Kupisch
//! series and computes, in exact arithmetic:
//!
//! - Hom and Ext dimensions between indecomposable (uniserial) modules,
//! - syzygy orbits and periodicity,
//! - the strip-lattice picture of the AR quiver for selfinjective algebras,
//!   with trapezoidal Hom/Ext support regions,
//! - weak and standard exceptional sequences: validation and exhaustive
//!   enumeration (maximum size, exact big-integer counts, witnesses),
//! - closed-form count predictions for the families where they are known,
//!   used as independent cross-checks of the enumerator.
//!
//! Start with [`NakayamaAlgebra::parse`], then branch into [`homology`] for
//! dimensions, [`excseq`] for sequences, and [`render`] for pictures. The
//! `examples/` directory has a runnable tour per capability; `nakaseq` is
//! the command-line wrapper.

pub mod algebra;
pub mod cli;
pub mod excseq;
pub mod formulas;
pub mod homology;
pub mod modcat;
pub mod render;

pub use algebra::{AlgebraError, NakayamaAlgebra, Shape};
pub use excseq::{enumerate, EnumOptions, EnumResult, ExcSequence, Mode};
pub use modcat::{Indec, LatticePoint, ModuleError, Selfinjective};
