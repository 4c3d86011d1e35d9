//! Degree data for the four determinantal families.
//!
//! Every family is described by integer parameters only; no polynomial
//! entries are ever represented. Constructors validate the ordering
//! conventions and positivity conditions and are the only way to obtain a
//! value, so downstream builders can rely on them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// How much positivity to demand of a standard degree matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityPolicy {
    /// `U[i][t+1-i] >= 1` for every row `i`: no `p x q` block of zero-degree
    /// entries with `p + q = t + 1` in the upper-left corner. Entries of
    /// non-positive degree are allowed elsewhere (they are zero forms).
    #[default]
    AntiDiagonal,
    /// Every entry of `U` has degree at least one.
    Strict,
}

fn check_non_decreasing(name: &str, seq: &[i64]) -> Result<()> {
    match seq.windows(2).position(|w| w[0] > w[1]) {
        Some(k) => Err(Error::OrderViolation(format!(
            "{name} must be non-decreasing ({name}[{}] = {} > {name}[{}] = {})",
            k + 1,
            seq[k],
            k + 2,
            seq[k + 1]
        ))),
        None => Ok(()),
    }
}

fn check_non_increasing(name: &str, seq: &[i64]) -> Result<()> {
    match seq.windows(2).position(|w| w[0] < w[1]) {
        Some(k) => Err(Error::OrderViolation(format!(
            "{name} must be non-increasing ({name}[{}] = {} < {name}[{}] = {})",
            k + 1,
            seq[k],
            k + 2,
            seq[k + 1]
        ))),
        None => Ok(()),
    }
}

/// Degrees of a `t x (t+c-1)` homogeneous matrix whose maximal minors
/// generate a standard determinantal ideal of codimension `c`.
///
/// Entry `(i, j)` has degree `a_j - b_i`, with `b` non-increasing and `a`
/// non-decreasing, so the degree matrix increases along rows and columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardDegreeData {
    b: Vec<i64>,
    a: Vec<i64>,
}

impl StandardDegreeData {
    pub fn new(b: Vec<i64>, a: Vec<i64>) -> Result<Self> {
        Self::with_policy(b, a, PositivityPolicy::default())
    }

    pub fn with_policy(b: Vec<i64>, a: Vec<i64>, policy: PositivityPolicy) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::SizeError("b must be non-empty".into()));
        }
        if a.len() < b.len() {
            return Err(Error::SizeError(format!(
                "need len(a) >= len(b), got {} < {}",
                a.len(),
                b.len()
            )));
        }
        check_non_increasing("b", &b)?;
        check_non_decreasing("a", &a)?;
        let data = Self { b, a };
        data.check_positivity(policy)?;
        Ok(data)
    }

    fn check_positivity(&self, policy: PositivityPolicy) -> Result<()> {
        let t = self.t();
        match policy {
            PositivityPolicy::AntiDiagonal => {
                for i in 0..t {
                    let j = t - 1 - i;
                    if self.entry(i, j) < 1 {
                        return Err(Error::PositivityViolation(format!(
                            "U[{}][{}] = {} < 1",
                            i + 1,
                            j + 1,
                            self.entry(i, j)
                        )));
                    }
                }
            }
            PositivityPolicy::Strict => {
                // U is smallest in its top-left corner
                if self.entry(0, 0) < 1 {
                    return Err(Error::PositivityViolation(format!(
                        "U[1][1] = {} < 1 (strict mode)",
                        self.entry(0, 0)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn t(&self) -> usize {
        self.b.len()
    }

    pub fn c(&self) -> usize {
        self.a.len() - self.b.len() + 1
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// `U[i][j] = a_j - b_i`, zero-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[j] - self.b[i]
    }

    pub fn degree_matrix(&self) -> Vec<Vec<i64>> {
        (0..self.t())
            .map(|i| (0..self.a.len()).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    pub fn is_constant(&self) -> bool {
        self.b.first() == self.b.last() && self.a.first() == self.a.last()
    }

    /// The representative with `b_1 = 0`; the degree matrix is unchanged.
    pub fn canonical(&self) -> Self {
        let shift = self.b[0];
        Self {
            b: self.b.iter().map(|v| v - shift).collect(),
            a: self.a.iter().map(|v| v - shift).collect(),
        }
    }
}

/// Degrees of a `t x t` symmetric matrix with entry degrees `a_i + a_j`.
///
/// The `a_i` may be half-integers, so they are stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricDegreeData {
    two_a: Vec<i64>,
}

impl SymmetricDegreeData {
    pub fn new(two_a: Vec<i64>) -> Result<Self> {
        if two_a.len() < 2 {
            return Err(Error::SizeError(format!(
                "symmetric data needs t >= 2, got t = {}",
                two_a.len()
            )));
        }
        check_non_decreasing("two_a", &two_a)?;
        let parity = two_a[0].rem_euclid(2);
        if let Some(k) = two_a.iter().position(|v| v.rem_euclid(2) != parity) {
            return Err(Error::ParityViolation(format!(
                "two_a[{}] = {} and two_a[1] = {} differ in parity",
                k + 1,
                two_a[k],
                two_a[0]
            )));
        }
        if two_a[0] < 1 {
            return Err(Error::PositivityViolation(format!(
                "two_a[1] = {} < 1",
                two_a[0]
            )));
        }
        Ok(Self { two_a })
    }

    pub fn t(&self) -> usize {
        self.two_a.len()
    }

    pub fn two_a(&self) -> &[i64] {
        &self.two_a
    }

    /// Degree of the determinant, `2(a_1 + ... + a_t)`.
    pub fn ell(&self) -> i64 {
        self.two_a.iter().sum()
    }

    /// Entry degree `a_i + a_j` (zero-based).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        (self.two_a[i] + self.two_a[j]) / 2
    }

    pub fn is_constant(&self) -> bool {
        self.two_a.first() == self.two_a.last()
    }
}

/// Degrees of a `t x t` matrix with entry `(j, i)` of degree `a_j - b_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SquareDegreeData {
    b: Vec<i64>,
    a: Vec<i64>,
}

impl SquareDegreeData {
    pub fn new(b: Vec<i64>, a: Vec<i64>) -> Result<Self> {
        if b.len() != a.len() {
            return Err(Error::SizeError(format!(
                "square data needs len(a) = len(b), got {} and {}",
                a.len(),
                b.len()
            )));
        }
        if b.len() < 2 {
            return Err(Error::SizeError(format!(
                "square data needs t >= 2, got t = {}",
                b.len()
            )));
        }
        check_non_decreasing("b", &b)?;
        check_non_decreasing("a", &a)?;
        // smallest entry is a_1 - b_t
        let t = b.len();
        if a[0] - b[t - 1] < 1 {
            return Err(Error::PositivityViolation(format!(
                "a_1 - b_{t} = {} < 1",
                a[0] - b[t - 1]
            )));
        }
        Ok(Self { b, a })
    }

    pub fn t(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self) -> &[i64] {
        &self.b
    }

    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// Degree of the determinant.
    pub fn s(&self) -> i64 {
        self.a.iter().sum::<i64>() - self.b.iter().sum::<i64>()
    }

    pub fn is_constant(&self) -> bool {
        self.b.first() == self.b.last() && self.a.first() == self.a.last()
    }
}

/// Parameters of an arithmetically Cohen–Macaulay divisor on a variety of
/// minimal degree: codimension `c`, the integer `t >= 2`, and `p` with
/// `deg X = tc + 1 - p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorData {
    c: usize,
    t: usize,
    p: usize,
}

impl DivisorData {
    pub fn new(c: i64, t: i64, p: i64) -> Result<Self> {
        if c < 1 {
            return Err(Error::RangeError(format!("c = {c} must be >= 1")));
        }
        if t < 2 {
            return Err(Error::RangeError(format!("t = {t} must be >= 2")));
        }
        if p < 1 || p > c {
            return Err(Error::RangeError(format!("p = {p} must lie in 1..={c}")));
        }
        let data = Self {
            c: c as usize,
            t: t as usize,
            p: p as usize,
        };
        if data.d() <= c {
            return Err(Error::RangeError(format!(
                "degree d = {} must exceed c = {c}",
                data.d()
            )));
        }
        Ok(data)
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// `deg X = tc + 1 - p`.
    pub fn d(&self) -> i64 {
        (self.t * self.c + 1) as i64 - self.p as i64
    }
}

/// Any of the four degree-data families.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DegreeData {
    Standard(StandardDegreeData),
    Symmetric(SymmetricDegreeData),
    Square(SquareDegreeData),
    Divisor(DivisorData),
}

impl DegreeData {
    pub fn codim(&self) -> usize {
        match self {
            DegreeData::Standard(dd) => dd.c(),
            DegreeData::Symmetric(_) => 3,
            DegreeData::Square(_) => 4,
            DegreeData::Divisor(dv) => dv.c(),
        }
    }

    /// Whether every entry of the degree matrix is equal; `None` for
    /// divisors, which carry no matrix.
    pub fn is_constant(&self) -> Option<bool> {
        match self {
            DegreeData::Standard(dd) => Some(dd.is_constant()),
            DegreeData::Symmetric(sd) => Some(sd.is_constant()),
            DegreeData::Square(qd) => Some(qd.is_constant()),
            DegreeData::Divisor(_) => None,
        }
    }
}
