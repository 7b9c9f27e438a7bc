//! Every way of computing `Z_{a,b}` behind one identifier.

use std::fmt;
use std::str::FromStr;

use crate::arith::Rational;
use crate::error::Result;
use crate::lattice::{z_lattice_enum_with_budget, z_lattice_transfer, LatticeSpec, DEFAULT_ENUM_BUDGET};
use crate::residue::{z_integral, IntegralFormulaId};
use crate::zhc::{z_sum, PointConfig, SumFormulaId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    Sum(SumFormulaId),
    Integral(IntegralFormulaId),
    LatticeEnum,
    LatticeTransfer,
}

impl Representation {
    /// The eleven closed-form representations (sums and residue-evaluated
    /// integrals).
    pub fn formulas() -> Vec<Representation> {
        SumFormulaId::ALL
            .into_iter()
            .map(Representation::Sum)
            .chain(IntegralFormulaId::ALL.into_iter().map(Representation::Integral))
            .collect()
    }

    /// Formulas followed by the two lattice oracles.
    pub fn all() -> Vec<Representation> {
        let mut reps = Self::formulas();
        reps.push(Representation::LatticeEnum);
        reps.push(Representation::LatticeTransfer);
        reps
    }

    pub fn name(self) -> &'static str {
        match self {
            Representation::Sum(id) => id.name(),
            Representation::Integral(id) => id.name(),
            Representation::LatticeEnum => "LATTICE_ENUM",
            Representation::LatticeTransfer => "LATTICE_TRANSFER",
        }
    }

    pub fn is_lattice(self) -> bool {
        matches!(self, Representation::LatticeEnum | Representation::LatticeTransfer)
    }

    pub fn evaluate(self, pt: &PointConfig) -> Result<Rational> {
        self.evaluate_with_budget(pt, DEFAULT_ENUM_BUDGET)
    }

    /// `budget` caps the vertex count accepted by [`Representation::LatticeEnum`].
    pub fn evaluate_with_budget(self, pt: &PointConfig, budget: usize) -> Result<Rational> {
        match self {
            Representation::Sum(id) => z_sum(id, pt),
            Representation::Integral(id) => z_integral(id, pt),
            Representation::LatticeEnum => z_lattice_enum_with_budget(&LatticeSpec::canonical(pt), budget),
            Representation::LatticeTransfer => z_lattice_transfer(&LatticeSpec::canonical(pt)),
        }
    }

    /// Number of summands (partition terms or pole subsets); `None` for the
    /// lattice paths, whose work is not a fixed term count.
    pub fn term_count(self, a: usize, b: usize) -> Option<u128> {
        match self {
            Representation::Sum(id) => Some(id.term_count(a, b)),
            Representation::Integral(id) => Some(id.term_count(a, b)),
            Representation::LatticeEnum | Representation::LatticeTransfer => None,
        }
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Representation {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let key = s.replace('-', "_");
        Representation::all()
            .into_iter()
            .find(|rep| rep.name().eq_ignore_ascii_case(&key))
            .ok_or_else(|| format!("unknown representation {s:?}"))
    }
}
