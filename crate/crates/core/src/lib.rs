//! Exact computations with root systems and representation degrees of simple
//! compact Lie groups: Weyl dimensions, exponent profiles and the zeta bound
//! on the Witten zeta function, exhaustive low-degree enumeration, weight
//! multiplicities with eigenspace profiles, and a census of faithful
//! irreducible pairs of a given dimension.

mod bigdec;
pub mod census;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod multiplicity;
pub mod rootsys;
pub mod weyldim;
pub mod zetabounds;

pub use error::{Error, Result};
pub use rootsys::{Family, Root, RootSystemData, RootSystemId};
pub use weyldim::{CVector, WeylDimension};
