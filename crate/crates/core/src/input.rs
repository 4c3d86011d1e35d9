//! JSON input formats: degree-data specifications and raw Betti tables.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    DegreeData, DivisorData, SquareDegreeData, StandardDegreeData, SymmetricDegreeData,
};
use crate::resolutions::ci_power_standard;
use crate::table::BettiTable;

/// Parameters of one family member, as read from an input file.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InputSpec {
    Standard { b: Vec<i64>, a: Vec<i64> },
    Symmetric { two_a: Vec<i64> },
    Square { b: Vec<i64>, a: Vec<i64> },
    Divisor { c: i64, t: i64, p: i64 },
    CiPower { d1: i64, d2: i64, s: i64 },
}

impl InputSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Validated degree data; `ci_power` becomes its standard matrix.
    pub fn degree_data(&self) -> Result<DegreeData> {
        Ok(match self {
            InputSpec::Standard { b, a } => {
                DegreeData::Standard(StandardDegreeData::new(b.clone(), a.clone())?)
            }
            InputSpec::Symmetric { two_a } => {
                DegreeData::Symmetric(SymmetricDegreeData::new(two_a.clone())?)
            }
            InputSpec::Square { b, a } => {
                DegreeData::Square(SquareDegreeData::new(b.clone(), a.clone())?)
            }
            InputSpec::Divisor { c, t, p } => DegreeData::Divisor(DivisorData::new(*c, *t, *p)?),
            InputSpec::CiPower { d1, d2, s } => {
                DegreeData::Standard(ci_power_standard(*d1, *d2, *s)?)
            }
        })
    }

    pub fn kind(&self) -> &'static str {
        match self {
            InputSpec::Standard { .. } => "standard",
            InputSpec::Symmetric { .. } => "symmetric",
            InputSpec::Square { .. } => "square",
            InputSpec::Divisor { .. } => "divisor",
            InputSpec::CiPower { .. } => "ci_power",
        }
    }
}

/// A table given directly by its nonzero entries. Extra keys (such as the
/// shifts written next to the entries by `table --format json`) are ignored.
#[derive(Debug, Clone, Deserialize)]
pub struct RawTable {
    pub codim: usize,
    pub betti: Vec<(usize, i64, u64)>,
}

impl RawTable {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn into_table(self) -> Result<BettiTable> {
        BettiTable::from_entries(self.codim, self.betti)
    }
}
