//! Exact evaluation of the highest coefficient `Z_{a,b}` of SU(3)-invariant
//! Bethe-vector scalar products, by sum formulas, residue-evaluated contour
//! integrals and the vertex-model partition function.

pub mod arith;
pub mod cli;
pub mod error;
pub mod khc;
pub mod lattice;
pub mod repr;
pub mod residue;
pub mod sampler;
pub mod zhc;

pub use arith::{Rational, VarSet};
pub use error::{Error, Result};
pub use repr::Representation;
pub use zhc::{PointConfig, SumFormulaId};
