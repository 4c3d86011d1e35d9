//! Eagon–Northcott resolution of the maximal minors of a `t x (t+c-1)`
//! matrix.
//!
//! The free module at step `i` is `wedge^{t+i-1} G* (x) S_{i-1}(F) (x)
//! wedge^t F`, so its generators are indexed by a `(t+i-1)`-subset of the
//! columns together with an `(i-1)`-multiset of the rows.

use std::collections::BTreeMap;

use crate::combinatorics::{binomial, for_each_multiset, for_each_subset};
use crate::error::{Error, Result};
use crate::model::StandardDegreeData;
use crate::table::BettiTable;

use super::ClosedForm;

pub const DEFAULT_GENERATOR_CAP: u64 = 10_000_000;

/// One generator of the Eagon–Northcott complex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnGenerator {
    /// Zero-based column indices, strictly increasing.
    pub subset: Vec<usize>,
    /// Zero-based row indices, non-decreasing.
    pub multiset: Vec<usize>,
    pub degree: i64,
}

/// Number of generators at homological step `i`:
/// `C(t+c-1, t+i-1) * C(t+i-2, i-1)`.
pub fn generator_count(t: usize, c: usize, i: usize) -> u128 {
    let (t, c, i) = (t as i64, c as i64, i as i64);
    binomial(t + c - 1, t + i - 1) * binomial(t + i - 2, i - 1)
}

fn check_budget(dd: &StandardDegreeData, i: usize, cap: u64) -> Result<()> {
    let count = generator_count(dd.t(), dd.c(), i);
    if count > cap as u128 {
        return Err(Error::BudgetExceeded { row: i, count, cap });
    }
    Ok(())
}

/// Generators at step `i` in lexicographic `(subset, multiset)` order.
pub fn en_generators(dd: &StandardDegreeData, i: usize, cap: u64) -> Result<Vec<EnGenerator>> {
    check_budget(dd, i, cap)?;
    let (t, n) = (dd.t(), dd.a().len());
    let b_sum: i64 = dd.b().iter().sum();
    let mut out = Vec::new();
    for_each_subset(n, t + i - 1, |subset| {
        let col_deg: i64 = subset.iter().map(|&s| dd.a()[s]).sum();
        for_each_multiset(t, i - 1, |multiset| {
            let row_deg: i64 = multiset.iter().map(|&r| dd.b()[r]).sum();
            out.push(EnGenerator {
                subset: subset.to_vec(),
                multiset: multiset.to_vec(),
                degree: col_deg - row_deg - b_sum,
            });
        });
    });
    Ok(out)
}

/// Calls the visitor on every index selection of a given size.
type Selections = fn(usize, usize, &mut dyn FnMut(&[usize]));

/// Histogram of subset sums (or multiset sums) of `values`.
fn sum_histogram(values: &[i64], size: usize, each: Selections) -> BTreeMap<i64, u64> {
    let mut hist = BTreeMap::new();
    each(values.len(), size, &mut |idx| {
        let s: i64 = idx.iter().map(|&k| values[k]).sum();
        *hist.entry(s).or_insert(0u64) += 1;
    });
    hist
}

/// Graded Betti table of `R/I` with the default generator cap.
pub fn en_table(dd: &StandardDegreeData) -> Result<BettiTable> {
    en_table_with_cap(dd, DEFAULT_GENERATOR_CAP)
}

/// Graded Betti table of `R/I`. Every generator of every step is counted;
/// column-subset and row-multiset degrees are tallied separately and
/// combined, which yields the same multiset of degrees as walking the
/// product.
pub fn en_table_with_cap(dd: &StandardDegreeData, cap: u64) -> Result<BettiTable> {
    let c = dd.c();
    let b_sum: i64 = dd.b().iter().sum();
    let mut rows = vec![BTreeMap::from([(0i64, 1u64)])];
    for i in 1..=c {
        check_budget(dd, i, cap)?;
        let cols = sum_histogram(dd.a(), dd.t() + i - 1, |n, k, f| for_each_subset(n, k, f));
        let mults = sum_histogram(dd.b(), i - 1, |n, k, f| for_each_multiset(n, k, f));
        let mut row = BTreeMap::new();
        for (&cs, &cn) in &cols {
            for (&ms, &mn) in &mults {
                *row.entry(cs - ms - b_sum).or_insert(0u64) += cn * mn;
            }
        }
        rows.push(row);
    }
    BettiTable::from_rows(rows)
}

/// Shifts and totals as closed formulas in the degree matrix.
pub fn en_closed_form(dd: &StandardDegreeData) -> ClosedForm {
    let (t, c) = (dd.t(), dd.c());
    let u = |i: usize, j: usize| dd.entry(i - 1, j - 1);
    let mut m = Vec::with_capacity(c);
    let mut big_m = Vec::with_capacity(c);
    let mut total = Vec::with_capacity(c);
    for i in 1..=c {
        // u_{1,1} + ... + u_{1,i} + u_{2,i+1} + ... + u_{t,t+i-1}
        let low: i64 =
            (1..=i).map(|j| u(1, j)).sum::<i64>() + (2..=t).map(|r| u(r, r + i - 1)).sum::<i64>();
        // u_{1,c-i+1} + ... + u_{t,t+c-i} + u_{t,t+c-i+1} + ... + u_{t,t+c-1}
        let high: i64 = (1..=t).map(|r| u(r, r + c - i)).sum::<i64>()
            + (t + c - i + 1..=t + c - 1).map(|j| u(t, j)).sum::<i64>();
        m.push(low);
        big_m.push(high);
        total.push(generator_count(t, c, i) as u64);
    }
    ClosedForm { m, big_m, total }
}
