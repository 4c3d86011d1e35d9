//! Length-3 resolution of the submaximal minors of a `t x t` symmetric
//! matrix. All degrees are computed from the doubled `a_i` and halved once.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::model::SymmetricDegreeData;
use crate::table::BettiTable;

use super::ClosedForm;

pub fn jozefiak_table(sd: &SymmetricDegreeData) -> Result<BettiTable> {
    let a2 = sd.two_a();
    let t = sd.t();
    let ell = sd.ell();
    let mut rows = vec![BTreeMap::from([(0i64, 1u64)])];
    rows.extend((0..3).map(|_| BTreeMap::new()));
    let mut bump = |i: usize, deg: i64| *rows[i].entry(deg).or_insert(0u64) += 1;
    for i in 0..t {
        for j in i..t {
            // generators: submaximal minors, degree ell - a_i - a_j
            bump(1, ell - (a2[i] + a2[j]) / 2);
        }
    }
    for i in 0..t {
        for j in 0..t {
            bump(2, ell + (a2[j] - a2[i]) / 2);
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            bump(3, ell + (a2[i] + a2[j]) / 2);
        }
    }
    // the trace-zero condition removes one copy of degree ell
    let middle = rows[2].get_mut(&ell).expect("diagonal pairs land on ell");
    *middle -= 1;
    if *middle == 0 {
        rows[2].remove(&ell);
    }
    BettiTable::from_rows(rows)
}

pub fn jozefiak_closed_form(sd: &SymmetricDegreeData) -> ClosedForm {
    let a2 = sd.two_a();
    let t = sd.t();
    let ell2 = 2 * sd.ell();
    let (first, second, last, penult) = (a2[0], a2[1], a2[t - 1], a2[t - 2]);
    // doubled values, all even by the parity invariant
    let m2 = [ell2 - 2 * last, ell2 - last + first, ell2 + first + second];
    let big_m2 = [ell2 - 2 * first, ell2 - first + last, ell2 + penult + last];
    let t = t as u64;
    ClosedForm {
        m: m2.iter().map(|v| v / 2).collect(),
        big_m: big_m2.iter().map(|v| v / 2).collect(),
        total: vec![t * (t + 1) / 2, t * t - 1, t * (t - 1) / 2],
    }
}

/// Step-1 degrees if the twist printed as `a_i + a_t - ell` over
/// `1 <= i <= j <= t` were used literally, sorted.
pub fn printed_step_one_degrees(sd: &SymmetricDegreeData) -> Vec<i64> {
    let a2 = sd.two_a();
    let t = sd.t();
    let mut out: Vec<i64> = (0..t)
        .flat_map(|i| (i..t).map(move |_| sd.ell() - (a2[i] + a2[t - 1]) / 2))
        .collect();
    out.sort_unstable();
    out
}

/// Step-1 degrees used by [`jozefiak_table`], sorted.
pub fn step_one_degrees(sd: &SymmetricDegreeData) -> Vec<i64> {
    let a2 = sd.two_a();
    let t = sd.t();
    let mut out: Vec<i64> = (0..t)
        .flat_map(|i| (i..t).map(move |j| sd.ell() - (a2[i] + a2[j]) / 2))
        .collect();
    out.sort_unstable();
    out
}
