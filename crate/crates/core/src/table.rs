//! Graded Betti tables of Cohen–Macaulay quotients `R/I`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};

/// Sparse graded Betti table `beta_{i,j}` of a resolution of length `c`.
///
/// Row 0 is always the single entry `beta_{0,0} = 1`. Rows `1..=c` are
/// non-empty, their minimal degrees strictly increase, and the alternating
/// sum of the row totals vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiTable {
    rows: Vec<BTreeMap<i64, u64>>,
}

impl BettiTable {
    /// Builds a table from `(i, j, count)` triples; repeated `(i, j)` pairs
    /// accumulate and zero counts are dropped. Row 0 may be omitted.
    pub fn from_entries<I>(codim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64, u64)>,
    {
        if codim == 0 {
            return Err(Error::InconsistentTable("codimension must be >= 1".into()));
        }
        let mut rows = vec![BTreeMap::new(); codim + 1];
        for (i, j, count) in entries {
            if i > codim {
                return Err(Error::InconsistentTable(format!(
                    "homological index {i} exceeds codimension {codim}"
                )));
            }
            if count == 0 {
                continue;
            }
            *rows[i].entry(j).or_insert(0u64) += count;
        }
        if rows[0].is_empty() {
            rows[0].insert(0, 1);
        }
        if rows[0].len() != 1 || rows[0].get(&0) != Some(&1) {
            return Err(Error::InconsistentTable(
                "row 0 must be exactly beta_{0,0} = 1".into(),
            ));
        }
        Self::from_rows(rows)
    }

    pub(crate) fn from_rows(rows: Vec<BTreeMap<i64, u64>>) -> Result<Self> {
        let table = Self { rows };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        let c = self.codim();
        if let Some(i) = (1..=c).find(|&i| self.rows[i].is_empty()) {
            return Err(Error::InconsistentTable(format!("row {i} is empty")));
        }
        let m = self.min_shifts();
        if let Some(k) = m.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::InconsistentTable(format!(
                "minimal shifts must strictly increase (m_{} = {} >= m_{} = {})",
                k + 1,
                m[k],
                k + 2,
                m[k + 1]
            )));
        }
        let rank_sum = self.alternating_rank_sum();
        if rank_sum != 0 {
            return Err(Error::InconsistentTable(format!(
                "alternating sum of ranks is {rank_sum}, expected 0"
            )));
        }
        Ok(())
    }

    /// Codimension, which equals the length of the resolution.
    pub fn codim(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.rows
            .get(i)
            .and_then(|row| row.get(&j))
            .copied()
            .unwrap_or(0)
    }

    pub fn row(&self, i: usize) -> &BTreeMap<i64, u64> {
        &self.rows[i]
    }

    /// All nonzero `(i, j, count)` triples in lexicographic order, row 0
    /// included.
    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(&j, &n)| (i, j, n)))
    }

    /// `m_1..m_c`.
    pub fn min_shifts(&self) -> Vec<i64> {
        self.rows[1..]
            .iter()
            .map(|row| *row.keys().next().expect("rows are non-empty"))
            .collect()
    }

    /// `M_1..M_c`.
    pub fn max_shifts(&self) -> Vec<i64> {
        self.rows[1..]
            .iter()
            .map(|row| *row.keys().next_back().expect("rows are non-empty"))
            .collect()
    }

    pub fn shifts(&self) -> (Vec<i64>, Vec<i64>) {
        (self.min_shifts(), self.max_shifts())
    }

    /// Total Betti numbers `beta_1..beta_c`.
    pub fn totals(&self) -> Vec<u64> {
        self.rows[1..]
            .iter()
            .map(|row| row.values().sum())
            .collect()
    }

    pub fn alternating_rank_sum(&self) -> i128 {
        self.rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let total: i128 = row.values().map(|&n| n as i128).sum();
                if i % 2 == 0 {
                    total
                } else {
                    -total
                }
            })
            .sum()
    }

    pub fn is_pure(&self) -> bool {
        self.rows[1..].iter().all(|row| row.len() == 1)
    }

    /// `m_i > M_{i-1}` for `2 <= i <= c`.
    pub fn is_strictly_quasi_pure(&self) -> bool {
        let (m, big_m) = self.shifts();
        (1..m.len()).all(|i| m[i] > big_m[i - 1])
    }

    /// `sum_i (-1)^i sum_j beta_{i,j} j^k`.
    pub fn power_sum(&self, k: u32) -> BigInt {
        let mut acc = BigInt::zero();
        for (i, j, n) in self.entries() {
            let term = BigInt::from(n) * BigInt::from(j).pow(k);
            if i % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Multiplicity of `R/I` read off the Hilbert series numerator:
    /// `e = (-1)^c / c! * sum_i (-1)^i sum_j beta_{i,j} j^c`, valid once the
    /// power sums of order `0..c` vanish.
    pub fn multiplicity(&self) -> Result<u64> {
        let c = self.codim();
        for k in 0..c as u32 {
            let s = self.power_sum(k);
            if !s.is_zero() {
                return Err(Error::InconsistentTable(format!(
                    "power sum of order {k} is {s}, expected 0"
                )));
            }
        }
        let mut top = self.power_sum(c as u32);
        if c % 2 == 1 {
            top = -top;
        }
        let (e, rem) = top.div_rem(&factorial(c));
        if !rem.is_zero() || !e.is_positive() {
            return Err(Error::InconsistentTable(format!(
                "multiplicity {top}/{c}! is not a positive integer"
            )));
        }
        e.to_u64()
            .ok_or_else(|| Error::InconsistentTable(format!("multiplicity {e} overflows u64")))
    }
}
