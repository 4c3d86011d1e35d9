//! Betti tables of the four resolution families and their closed-form
//! shift/total predictions.

mod ci_power;
mod divisor;
mod eagon_northcott;
mod gulliksen_negard;
mod jozefiak;

use serde::Serialize;

pub use ci_power::ci_power_standard;
pub use divisor::{blocks as divisor_blocks, divisor_closed_form, divisor_table};
pub use eagon_northcott::{
    en_closed_form, en_generators, en_table, en_table_with_cap, generator_count, EnGenerator,
    DEFAULT_GENERATOR_CAP,
};
pub use gulliksen_negard::{gn_closed_form, gn_table, printed_middle_total};
pub use jozefiak::{
    jozefiak_closed_form, jozefiak_table, printed_step_one_degrees, step_one_degrees,
};

use crate::error::Result;
use crate::model::DegreeData;
use crate::table::BettiTable;

/// Formula-level prediction of the shifts and totals of a family member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedForm {
    pub m: Vec<i64>,
    #[serde(rename = "M")]
    pub big_m: Vec<i64>,
    pub total: Vec<u64>,
}

/// A structured record of a place where a printed formula and the
/// implemented resolution disagree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Note {
    /// The middle total of the square-matrix resolution is printed as
    /// `t^2 - 2`; rank exactness forces `2t^2 - 2`.
    GnMiddleTotal {
        t: usize,
        printed: u64,
        rank: u64,
        printed_alternating_sum: i64,
        rank_alternating_sum: i64,
    },
    /// The first-step twist of the symmetric resolution is printed with
    /// `a_i + a_t`; the table uses `a_i + a_j`.
    JozefiakStepOneTwist {
        printed_degrees: Vec<i64>,
        used_degrees: Vec<i64>,
    },
    /// `m_c = c + 1` is stated for divisors, but `alpha_c = 0`.
    DivisorLastShift {
        c: usize,
        formula_m_c: i64,
        table_m_c: i64,
    },
}

pub fn build_table(data: &DegreeData) -> Result<BettiTable> {
    build_table_with_cap(data, DEFAULT_GENERATOR_CAP)
}

/// As [`build_table`], with `cap` bounding the generators per step of a
/// standard table.
pub fn build_table_with_cap(data: &DegreeData, cap: u64) -> Result<BettiTable> {
    match data {
        DegreeData::Standard(dd) => en_table_with_cap(dd, cap),
        DegreeData::Symmetric(sd) => jozefiak_table(sd),
        DegreeData::Square(qd) => gn_table(qd),
        DegreeData::Divisor(dv) => divisor_table(dv),
    }
}

pub fn closed_form(data: &DegreeData) -> ClosedForm {
    match data {
        DegreeData::Standard(dd) => en_closed_form(dd),
        DegreeData::Symmetric(sd) => jozefiak_closed_form(sd),
        DegreeData::Square(qd) => gn_closed_form(qd),
        DegreeData::Divisor(dv) => divisor_closed_form(dv),
    }
}

/// Erratum notes relevant to `data`, given its assembled table.
pub fn notes_for(data: &DegreeData, table: &BettiTable) -> Vec<Note> {
    match data {
        DegreeData::Standard(_) => Vec::new(),
        DegreeData::Symmetric(sd) => {
            let printed_degrees = printed_step_one_degrees(sd);
            let used_degrees = step_one_degrees(sd);
            if printed_degrees == used_degrees {
                Vec::new()
            } else {
                vec![Note::JozefiakStepOneTwist {
                    printed_degrees,
                    used_degrees,
                }]
            }
        }
        DegreeData::Square(qd) => {
            let t = qd.t();
            let rank = 2 * (t * t) as u64 - 2;
            let printed = printed_middle_total(t);
            let sq = (t * t) as i64;
            vec![Note::GnMiddleTotal {
                t,
                printed,
                rank,
                printed_alternating_sum: 1 - sq + printed as i64 - sq + 1,
                rank_alternating_sum: 1 - sq + rank as i64 - sq + 1,
            }]
        }
        DegreeData::Divisor(dv) => {
            let c = dv.c();
            let formula_m_c = c as i64 + 1;
            let table_m_c = table.min_shifts()[c - 1];
            if formula_m_c == table_m_c {
                Vec::new()
            } else {
                vec![Note::DivisorLastShift {
                    c,
                    formula_m_c,
                    table_m_c,
                }]
            }
        }
    }
}
