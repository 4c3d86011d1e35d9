//! Exact evaluation of shift-based bounds on total Betti numbers and on the
//! multiplicity.
//!
//! For shift vectors `m` (minimal) and `M` (maximal) of a resolution of
//! length `c`:
//!
//! * naive: `prod_{j<i} m_j/(m_i-m_j) prod_{j>i} m_j/(m_j-m_i) <= beta_i`, and
//!   the same product over `M` as an upper bound. Diagnostic only.
//! * mixed lower: `prod_{j<i} m_j/(M_i-m_j) prod_{j>i} m_j/(M_j-m_i) <= beta_i`.
//! * factorial upper: `beta_i <= prod_{j!=i} M_j / ((i-1)!(c-i)!)`.
//! * multiplicity: `prod m_i / c! <= e <= prod M_i / c!`.
//!
//! Everything is computed in `BigRational`; comparisons are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::table::BettiTable;

/// `p/q` in lowest terms, or `n` when integral.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn check_index(len: usize, i: usize) -> Result<()> {
    if i == 0 || i > len {
        return Err(Error::RangeError(format!("index {i} outside 1..={len}")));
    }
    Ok(())
}

/// `prod_{j<i} d_j/(d_i-d_j) * prod_{j>i} d_j/(d_j-d_i)`, `i` one-based.
fn pure_shape_product(d: &[i64], i: usize) -> Result<BigRational> {
    check_index(d.len(), i)?;
    let k = i - 1;
    let mut acc = BigRational::one();
    for (j, &dj) in d.iter().enumerate() {
        let den = match j.cmp(&k) {
            std::cmp::Ordering::Less => d[k] - dj,
            std::cmp::Ordering::Greater => dj - d[k],
            std::cmp::Ordering::Equal => continue,
        };
        if den <= 0 {
            return Err(Error::DenominatorError { index: i });
        }
        acc *= ratio(dj, den);
    }
    Ok(acc)
}

/// Lower and upper naive bounds at index `i` (one-based).
pub fn naive_bounds(m: &[i64], big_m: &[i64], i: usize) -> Result<(BigRational, BigRational)> {
    Ok((pure_shape_product(m, i)?, pure_shape_product(big_m, i)?))
}

/// Mixed lower bound at index `i` (one-based).
pub fn mixed_lower(m: &[i64], big_m: &[i64], i: usize) -> Result<BigRational> {
    check_index(m.len(), i)?;
    if big_m.len() != m.len() {
        return Err(Error::SizeError("m and M differ in length".into()));
    }
    let k = i - 1;
    let mut acc = BigRational::one();
    for j in 0..m.len() {
        let den = match j.cmp(&k) {
            std::cmp::Ordering::Less => big_m[k] - m[j],
            std::cmp::Ordering::Greater => big_m[j] - m[k],
            std::cmp::Ordering::Equal => continue,
        };
        if den <= 0 {
            return Err(Error::DenominatorError { index: i });
        }
        acc *= ratio(m[j], den);
    }
    Ok(acc)
}

/// Factorial upper bound at index `i` (one-based) for codimension `c`.
pub fn factorial_upper(big_m: &[i64], i: usize, c: usize) -> Result<BigRational> {
    check_index(c, i)?;
    if big_m.len() != c {
        return Err(Error::SizeError(format!(
            "M has length {}, expected {c}",
            big_m.len()
        )));
    }
    let num: BigInt = big_m
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i - 1)
        .map(|(_, &v)| BigInt::from(v))
        .product();
    Ok(BigRational::new(num, factorial(i - 1) * factorial(c - i)))
}

/// `(prod m_i / c!, prod M_i / c!)`.
pub fn multiplicity_bounds(m: &[i64], big_m: &[i64]) -> (BigRational, BigRational) {
    let c = m.len();
    let prod = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).product::<BigInt>();
    (
        BigRational::new(prod(m), factorial(c)),
        BigRational::new(prod(big_m), factorial(c)),
    )
}

/// Total Betti number of a pure Cohen–Macaulay resolution with shifts `d`:
/// `(-1)^{i+1} prod_{j != i} d_j / (d_j - d_i)`.
pub fn pure_betti(d: &[i64], i: usize) -> Result<u64> {
    check_index(d.len(), i)?;
    if d.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::RangeError(
            "pure shifts must strictly increase".into(),
        ));
    }
    let k = i - 1;
    let mut acc = BigRational::one();
    for (j, &dj) in d.iter().enumerate() {
        if j != k {
            acc *= ratio(dj, dj - d[k]);
        }
    }
    if i.is_multiple_of(2) {
        acc = -acc;
    }
    if !acc.is_integer() || !acc.is_positive() {
        return Err(Error::NonIntegralResult(format!(
            "pure Betti formula gives {} at index {i}",
            format_rational(&acc)
        )));
    }
    acc.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegralResult("pure Betti number overflows u64".into()))
}

/// Bounds evaluated at one homological index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexBounds {
    pub i: usize,
    pub beta: u64,
    /// `None` when a denominator is non-positive.
    pub naive_lower: Option<BigRational>,
    pub naive_upper: Option<BigRational>,
    pub mixed_lower: BigRational,
    pub factorial_upper: BigRational,
}

impl IndexBounds {
    fn beta_q(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.beta))
    }

    pub fn naive_lower_ok(&self) -> Option<bool> {
        self.naive_lower.as_ref().map(|b| *b <= self.beta_q())
    }

    pub fn naive_upper_ok(&self) -> Option<bool> {
        self.naive_upper.as_ref().map(|b| self.beta_q() <= *b)
    }

    pub fn mixed_lower_ok(&self) -> bool {
        self.mixed_lower <= self.beta_q()
    }

    pub fn factorial_upper_ok(&self) -> bool {
        self.beta_q() <= self.factorial_upper
    }

    pub fn mixed_tight(&self) -> bool {
        self.mixed_lower == self.beta_q()
    }

    pub fn factorial_tight(&self) -> bool {
        self.factorial_upper == self.beta_q()
    }
}

/// Every bound evaluated against one table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub c: usize,
    pub m: Vec<i64>,
    pub big_m: Vec<i64>,
    pub indices: Vec<IndexBounds>,
    pub mult_lower: BigRational,
    pub mult_upper: BigRational,
    pub e: u64,
    pub pure: bool,
}

impl BoundsReport {
    pub fn mult_ok(&self) -> bool {
        let e = BigRational::from_integer(BigInt::from(self.e));
        self.mult_lower <= e && e <= self.mult_upper
    }

    pub fn mult_tight(&self) -> bool {
        let e = BigRational::from_integer(BigInt::from(self.e));
        self.mult_lower == e && e == self.mult_upper
    }

    pub fn mixed_lower_ok(&self) -> bool {
        self.indices.iter().all(IndexBounds::mixed_lower_ok)
    }

    pub fn factorial_upper_ok(&self) -> bool {
        self.indices.iter().all(IndexBounds::factorial_upper_ok)
    }

    /// Mixed lower, factorial upper, and multiplicity bounds all hold.
    pub fn all_ok(&self) -> bool {
        self.mixed_lower_ok() && self.factorial_upper_ok() && self.mult_ok()
    }

    pub fn mixed_tight(&self) -> bool {
        self.indices.iter().all(IndexBounds::mixed_tight)
    }

    pub fn factorial_tight(&self) -> bool {
        self.indices.iter().all(IndexBounds::factorial_tight)
    }

    /// Both the mixed lower and the factorial upper bound are reached at
    /// every index.
    pub fn all_tight(&self) -> bool {
        self.mixed_tight() && self.factorial_tight()
    }

    /// Naive bounds that were evaluable and failed.
    pub fn naive_failures(&self) -> usize {
        self.indices
            .iter()
            .map(|ix| {
                usize::from(ix.naive_lower_ok() == Some(false))
                    + usize::from(ix.naive_upper_ok() == Some(false))
            })
            .sum()
    }

    pub fn naive_not_evaluable(&self) -> usize {
        self.indices
            .iter()
            .map(|ix| usize::from(ix.naive_lower.is_none()) + usize::from(ix.naive_upper.is_none()))
            .sum()
    }

    pub fn betas(&self) -> Vec<u64> {
        self.indices.iter().map(|ix| ix.beta).collect()
    }
}

/// Evaluates every bound against the shifts and totals of `table`.
pub fn check_table(table: &BettiTable) -> Result<BoundsReport> {
    let c = table.codim();
    let (m, big_m) = table.shifts();
    let totals = table.totals();
    let e = table.multiplicity()?;
    let mut indices = Vec::with_capacity(c);
    for i in 1..=c {
        indices.push(IndexBounds {
            i,
            beta: totals[i - 1],
            naive_lower: pure_shape_product(&m, i).ok(),
            naive_upper: pure_shape_product(&big_m, i).ok(),
            mixed_lower: mixed_lower(&m, &big_m, i)?,
            factorial_upper: factorial_upper(&big_m, i, c)?,
        });
    }
    let (mult_lower, mult_upper) = multiplicity_bounds(&m, &big_m);
    Ok(BoundsReport {
        c,
        m,
        big_m,
        indices,
        mult_lower,
        mult_upper,
        e,
        pure: table.is_pure(),
    })
}

#[derive(Serialize)]
struct ReportView<'a> {
    codim: usize,
    beta: Vec<u64>,
    m: &'a [i64],
    #[serde(rename = "M")]
    big_m: &'a [i64],
    naive_lower: Vec<Option<String>>,
    naive_upper: Vec<Option<String>>,
    mixed_lower: Vec<String>,
    factorial_upper: Vec<String>,
    naive_lower_ok: Vec<Option<bool>>,
    naive_upper_ok: Vec<Option<bool>>,
    mixed_lower_ok: Vec<bool>,
    factorial_upper_ok: Vec<bool>,
    mixed_tight: Vec<bool>,
    factorial_tight: Vec<bool>,
    multiplicity: u64,
    mult_bounds: [String; 2],
    mult_ok: bool,
    pure: bool,
    all_ok: bool,
}

impl Serialize for BoundsReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let col = |f: &dyn Fn(&IndexBounds) -> String| self.indices.iter().map(f).collect();
        let view = ReportView {
            codim: self.c,
            beta: self.betas(),
            m: &self.m,
            big_m: &self.big_m,
            naive_lower: self
                .indices
                .iter()
                .map(|ix| ix.naive_lower.as_ref().map(format_rational))
                .collect(),
            naive_upper: self
                .indices
                .iter()
                .map(|ix| ix.naive_upper.as_ref().map(format_rational))
                .collect(),
            mixed_lower: col(&|ix| format_rational(&ix.mixed_lower)),
            factorial_upper: col(&|ix| format_rational(&ix.factorial_upper)),
            naive_lower_ok: self
                .indices
                .iter()
                .map(IndexBounds::naive_lower_ok)
                .collect(),
            naive_upper_ok: self
                .indices
                .iter()
                .map(IndexBounds::naive_upper_ok)
                .collect(),
            mixed_lower_ok: self
                .indices
                .iter()
                .map(IndexBounds::mixed_lower_ok)
                .collect(),
            factorial_upper_ok: self
                .indices
                .iter()
                .map(IndexBounds::factorial_upper_ok)
                .collect(),
            mixed_tight: self.indices.iter().map(IndexBounds::mixed_tight).collect(),
            factorial_tight: self
                .indices
                .iter()
                .map(IndexBounds::factorial_tight)
                .collect(),
            multiplicity: self.e,
            mult_bounds: [
                format_rational(&self.mult_lower),
                format_rational(&self.mult_upper),
            ],
            mult_ok: self.mult_ok(),
            pure: self.pure,
            all_ok: self.all_ok(),
        };
        view.serialize(serializer)
    }
}

/// `num / den` as an exact rational; `None` when `den` is zero.
pub fn exact_ratio(num: &BigRational, den: &BigRational) -> Option<BigRational> {
    if den.is_zero() {
        None
    } else {
        Some(num / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> BigRational {
        match s.split_once('/') {
            Some((n, d)) => ratio(n.parse().unwrap(), d.parse().unwrap()),
            None => ratio(s.parse().unwrap(), 1),
        }
    }

    #[test]
    fn naive_examples() {
        assert_eq!(
            naive_bounds(&[2, 3, 4], &[2, 3, 4], 2).unwrap(),
            (q("8"), q("8"))
        );
        assert_eq!(
            naive_bounds(&[3, 5], &[4, 6], 1).unwrap(),
            (q("5/2"), q("3"))
        );
        assert_eq!(naive_bounds(&[1, 2], &[1, 2], 2).unwrap(), (q("1"), q("1")));
        assert!(matches!(
            naive_bounds(&[2, 2], &[2, 3], 1),
            Err(Error::DenominatorError { index: 1 })
        ));
    }

    #[test]
    fn mixed_examples() {
        assert_eq!(mixed_lower(&[3, 5], &[4, 6], 1).unwrap(), q("5/3"));
        assert_eq!(mixed_lower(&[3, 5], &[4, 6], 2).unwrap(), q("1"));
        assert_eq!(mixed_lower(&[2, 3, 4], &[2, 3, 4], 3).unwrap(), q("3"));
        assert!(matches!(
            mixed_lower(&[3, 5], &[4, 3], 2),
            Err(Error::DenominatorError { index: 2 })
        ));
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial_upper(&[4, 6], 1, 2).unwrap(), q("6"));
        assert_eq!(factorial_upper(&[2, 3, 4], 2, 3).unwrap(), q("8"));
        assert_eq!(factorial_upper(&[1, 2, 3, 4], 1, 4).unwrap(), q("4"));
        assert!(factorial_upper(&[1, 2], 3, 2).is_err());
    }

    #[test]
    fn multiplicity_examples() {
        assert_eq!(
            multiplicity_bounds(&[2, 3, 4], &[2, 3, 4]),
            (q("4"), q("4"))
        );
        assert_eq!(multiplicity_bounds(&[3, 5], &[4, 6]), (q("15/2"), q("12")));
        assert_eq!(multiplicity_bounds(&[1, 2], &[1, 2]), (q("1"), q("1")));
    }

    #[test]
    fn pure_betti_examples() {
        assert_eq!(pure_betti(&[2, 3, 4, 6], 2).unwrap(), 16);
        assert_eq!(pure_betti(&[1, 2], 1).unwrap(), 2);
        assert_eq!(pure_betti(&[2, 3, 4], 3).unwrap(), 3);
        // no pure resolution has shifts (2, 5): beta_1 would be 5/3
        assert!(matches!(
            pure_betti(&[2, 5], 1),
            Err(Error::NonIntegralResult(_))
        ));
        assert!(matches!(pure_betti(&[3, 2], 1), Err(Error::RangeError(_))));
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&q("10/4")), "5/2");
        assert_eq!(format_rational(&q("6/3")), "2");
        assert_eq!(format_rational(&q("-3/9")), "-1/3");
    }

    #[test]
    fn report_on_veronese_is_tight() {
        let t = BettiTable::from_entries(3, [(1, 2, 6), (2, 3, 8), (3, 4, 3)]).unwrap();
        let r = check_table(&t).unwrap();
        assert!(r.all_ok() && r.all_tight() && r.pure && r.mult_tight());
        assert_eq!(r.e, 4);
        assert_eq!(r.naive_failures(), 0);
    }

    #[test]
    fn report_on_mixed_table() {
        let t = BettiTable::from_entries(2, [(1, 3, 1), (1, 4, 2), (2, 5, 1), (2, 6, 1)]).unwrap();
        let r = check_table(&t).unwrap();
        let mixed: Vec<_> = r
            .indices
            .iter()
            .map(|ix| format_rational(&ix.mixed_lower))
            .collect();
        let fact: Vec<_> = r
            .indices
            .iter()
            .map(|ix| format_rational(&ix.factorial_upper))
            .collect();
        assert_eq!(mixed, vec!["5/3", "1"]);
        assert_eq!(fact, vec!["6", "4"]);
        assert_eq!(r.betas(), vec![3, 2]);
        assert!(r.all_ok());
        assert!(!r.mixed_tight() && !r.factorial_tight() && !r.pure);
        assert!(r
            .indices
            .iter()
            .all(|ix| !ix.mixed_tight() && !ix.factorial_tight()));
        assert_eq!(r.e, 10);
        assert_eq!(
            (
                format_rational(&r.mult_lower),
                format_rational(&r.mult_upper)
            ),
            ("15/2".to_string(), "12".to_string())
        );
    }

    #[test]
    fn report_json_uses_lowest_term_strings() {
        let t = BettiTable::from_entries(2, [(1, 3, 1), (1, 4, 2), (2, 5, 1), (2, 6, 1)]).unwrap();
        let v = serde_json::to_value(check_table(&t).unwrap()).unwrap();
        assert_eq!(v["mixed_lower"], serde_json::json!(["5/3", "1"]));
        assert_eq!(v["factorial_upper"], serde_json::json!(["6", "4"]));
        assert_eq!(v["mult_bounds"], serde_json::json!(["15/2", "12"]));
        assert_eq!(v["multiplicity"], 10);
        assert_eq!(v["all_ok"], true);
    }
}
