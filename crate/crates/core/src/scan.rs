//! Exhaustive enumeration of degree-data families and aggregation of the
//! bound checks over them.
//!
//! Instances are evaluated independently (optionally on a thread pool) and
//! folded into an accumulator whose merge is insensitive to order; every
//! list in the final report is sorted, so reports are byte-identical for
//! any worker count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{check_table, format_rational, BoundsReport};
use crate::combinatorics::nondecreasing_sequences;
use crate::error::{Error, Result};
use crate::input::InputSpec;
use crate::model::{DivisorData, SquareDegreeData, StandardDegreeData, SymmetricDegreeData};
use crate::resolutions::{build_table_with_cap, notes_for, Note, DEFAULT_GENERATOR_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Standard,
    Symmetric,
    Square,
    Divisor,
    CiPower,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Standard,
        Family::Symmetric,
        Family::Square,
        Family::Divisor,
        Family::CiPower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Standard => "standard",
            Family::Symmetric => "symmetric",
            Family::Square => "square",
            Family::Divisor => "divisor",
            Family::CiPower => "ci_power",
        }
    }

    /// Smallest codimension enumerated unless overridden. Standard matrices
    /// start at `c = 2` (a single `t x t` determinant is a hypersurface).
    pub fn default_c_min(self) -> usize {
        match self {
            Family::Divisor => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// Grid description for one family.
///
/// * standard: `t <= t_max`, `c_min <= c <= c_max`, every degree-matrix
///   entry in `min_entry..=max_entry`, canonical `b_1 = 0`.
/// * symmetric: `2 <= t <= t_max`, doubled degrees in `1..=max_entry`.
/// * square: `2 <= t <= t_max`, entries in `1..=max_entry`, `b_1 = 0`.
/// * divisor: `c_min <= c <= c_max`, `2 <= t <= t_max`, `1 <= p <= c`.
/// * ci_power: `1 <= d1 <= d2 <= max_entry`, `1 <= s <= t_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub t_max: usize,
    pub c_min: usize,
    pub c_max: usize,
    pub min_entry: i64,
    pub max_entry: i64,
    /// Maximum number of instances enumerated.
    pub budget: usize,
    /// Maximum generators per resolution step of a standard table.
    pub generator_cap: u64,
}

impl FamilySpec {
    pub fn new(family: Family) -> Self {
        Self {
            family,
            t_max: 2,
            c_min: family.default_c_min(),
            c_max: 3,
            min_entry: if family == Family::Standard { 0 } else { 1 },
            max_entry: 3,
            budget: 1_000_000,
            generator_cap: DEFAULT_GENERATOR_CAP,
        }
    }

    pub fn t_max(mut self, v: usize) -> Self {
        self.t_max = v;
        self
    }

    pub fn c_range(mut self, lo: usize, hi: usize) -> Self {
        self.c_min = lo;
        self.c_max = hi;
        self
    }

    pub fn c_max(mut self, v: usize) -> Self {
        self.c_max = v;
        self
    }

    pub fn max_entry(mut self, v: i64) -> Self {
        self.max_entry = v;
        self
    }

    pub fn budget(mut self, v: usize) -> Self {
        self.budget = v;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("t_max", self.t_max as u64),
            ("c_min", self.c_min as u64),
            ("c_max", self.c_max as u64),
            ("budget", self.budget as u64),
            ("generator_cap", self.generator_cap),
        ];
        if let Some((name, _)) = positive.iter().find(|(_, v)| *v == 0) {
            return Err(Error::RangeError(format!("{name} must be >= 1")));
        }
        if self.max_entry < 1 {
            return Err(Error::RangeError(format!(
                "max_entry must be >= 1, got {}",
                self.max_entry
            )));
        }
        if self.min_entry < 0 || self.min_entry > self.max_entry {
            return Err(Error::RangeError(format!(
                "min_entry must lie in 0..={}, got {}",
                self.max_entry, self.min_entry
            )));
        }
        if self.c_min > self.c_max {
            return Err(Error::RangeError(format!(
                "c_min = {} exceeds c_max = {}",
                self.c_min, self.c_max
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub instances: Vec<InputSpec>,
    /// More instances exist beyond the budget.
    pub truncated: bool,
}

fn standard_grid(spec: &FamilySpec) -> impl Iterator<Item = InputSpec> + '_ {
    let (lo, hi) = (spec.min_entry, spec.max_entry);
    (1..=spec.t_max).flat_map(move |t| {
        (spec.c_min..=spec.c_max).flat_map(move |c| {
            // b_1 = 0 >= b_2 >= ... >= b_t >= lo - hi
            nondecreasing_sequences(t - 1, lo - hi, 0)
                .into_iter()
                .flat_map(move |tail| {
                    let b: Vec<i64> = std::iter::once(0).chain(tail.into_iter().rev()).collect();
                    let b_t = *b.last().unwrap();
                    nondecreasing_sequences(t + c - 1, lo, hi + b_t)
                        .into_iter()
                        .filter_map(move |a| {
                            StandardDegreeData::new(b.clone(), a.clone())
                                .ok()
                                .map(|_| InputSpec::Standard { b: b.clone(), a })
                        })
                })
        })
    })
}

fn symmetric_grid(spec: &FamilySpec) -> impl Iterator<Item = InputSpec> + '_ {
    let lo = spec.min_entry.max(1);
    (2..=spec.t_max).flat_map(move |t| {
        nondecreasing_sequences(t, lo, spec.max_entry)
            .into_iter()
            .filter(|v| SymmetricDegreeData::new(v.clone()).is_ok())
            .map(|two_a| InputSpec::Symmetric { two_a })
    })
}

fn square_grid(spec: &FamilySpec) -> impl Iterator<Item = InputSpec> + '_ {
    let (lo, hi) = (spec.min_entry.max(1), spec.max_entry);
    (2..=spec.t_max).flat_map(move |t| {
        // 0 = b_1 <= ... <= b_t <= hi - lo
        nondecreasing_sequences(t - 1, 0, hi - lo)
            .into_iter()
            .flat_map(move |tail| {
                let b: Vec<i64> = std::iter::once(0).chain(tail).collect();
                let b_t = *b.last().unwrap();
                nondecreasing_sequences(t, lo + b_t, hi)
                    .into_iter()
                    .filter_map(move |a| {
                        SquareDegreeData::new(b.clone(), a.clone())
                            .ok()
                            .map(|_| InputSpec::Square { b: b.clone(), a })
                    })
            })
    })
}

fn divisor_grid(spec: &FamilySpec) -> impl Iterator<Item = InputSpec> + '_ {
    (spec.c_min as i64..=spec.c_max as i64).flat_map(move |c| {
        (2..=spec.t_max as i64).flat_map(move |t| {
            (1..=c)
                .filter(move |&p| DivisorData::new(c, t, p).is_ok())
                .map(move |p| InputSpec::Divisor { c, t, p })
        })
    })
}

fn ci_power_grid(spec: &FamilySpec) -> impl Iterator<Item = InputSpec> + '_ {
    let lo = spec.min_entry.max(1);
    (lo..=spec.max_entry).flat_map(move |d1| {
        (d1..=spec.max_entry).flat_map(move |d2| {
            (1..=spec.t_max as i64).map(move |s| InputSpec::CiPower { d1, d2, s })
        })
    })
}

/// Every instance of the grid, in a fixed order, cut off at the budget.
pub fn enumerate(spec: &FamilySpec) -> Enumeration {
    let all: Box<dyn Iterator<Item = InputSpec>> = match spec.family {
        Family::Standard => Box::new(standard_grid(spec)),
        Family::Symmetric => Box::new(symmetric_grid(spec)),
        Family::Square => Box::new(square_grid(spec)),
        Family::Divisor => Box::new(divisor_grid(spec)),
        Family::CiPower => Box::new(ci_power_grid(spec)),
    };
    let mut instances: Vec<InputSpec> = all.take(spec.budget.saturating_add(1)).collect();
    let truncated = instances.len() > spec.budget;
    instances.truncate(spec.budget);
    Enumeration {
        instances,
        truncated,
    }
}

/// Everything learned from one instance.
#[derive(Debug, Clone)]
pub struct Checked {
    pub report: BoundsReport,
    pub notes: Vec<Note>,
    pub constant: Option<bool>,
    /// Multiplicity known independently of the table, when there is one.
    pub expected_degree: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct Evaluation {
    pub params: InputSpec,
    pub outcome: Result<Checked>,
}

fn expected_degree(params: &InputSpec) -> Option<u64> {
    match *params {
        InputSpec::Divisor { c, t, p } => Some((t * c + 1 - p) as u64),
        // e((f, g)^s) = C(s+1, 2) deg f deg g
        InputSpec::CiPower { d1, d2, s } => Some((s * (s + 1) / 2 * d1 * d2) as u64),
        _ => None,
    }
}

pub fn evaluate(params: &InputSpec, generator_cap: u64) -> Evaluation {
    let outcome = params.degree_data().and_then(|data| {
        let table = build_table_with_cap(&data, generator_cap)?;
        Ok(Checked {
            report: check_table(&table)?,
            notes: notes_for(&data, &table),
            constant: data.is_constant(),
            expected_degree: expected_degree(params),
        })
    });
    Evaluation {
        params: params.clone(),
        outcome,
    }
}

/// One bound failing at one index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BoundViolation {
    pub params: InputSpec,
    pub i: usize,
    pub bound: String,
    pub beta: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MultViolation {
    pub params: InputSpec,
    pub lower: String,
    pub upper: String,
    pub e: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DegreeMismatch {
    pub params: InputSpec,
    pub expected: u64,
    pub e: u64,
}

/// Minimal ratios over the grid: `bound / beta` for lower bounds and
/// `beta / bound` for upper bounds, so 1 means tight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Slack {
    pub mixed_lower: Option<String>,
    pub factorial_upper: Option<String>,
    pub mult_lower: Option<String>,
    pub mult_upper: Option<String>,
}

/// The non-pure instance whose mixed lower bounds come closest to tight:
/// it maximizes the smallest per-index ratio `bound / beta`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NearTight {
    pub params: InputSpec,
    pub ratio: String,
}

/// All notes of one kind seen during a scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NoteSummary {
    /// The first occurrence in canonical order.
    pub note: Note,
    pub occurrences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ErrorSummary {
    pub message: String,
    pub occurrences: usize,
    pub first: InputSpec,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub family: Family,
    pub instances: usize,
    pub checked: usize,
    pub truncated: bool,
    /// Instances skipped because a resolution step exceeded the generator cap.
    pub budget_skipped: usize,
    pub violations: usize,
    pub mixed_lower_violations: Vec<BoundViolation>,
    pub factorial_upper_violations: Vec<BoundViolation>,
    pub mult_violations: Vec<MultViolation>,
    pub naive_failures: usize,
    pub naive_not_evaluable: usize,
    pub tight_count: usize,
    pub mixed_tight_count: usize,
    pub factorial_tight_count: usize,
    pub mult_tight_count: usize,
    pub pure_count: usize,
    pub constant_count: usize,
    pub degree_checked: usize,
    pub degree_mismatches: Vec<DegreeMismatch>,
    pub min_slack: Slack,
    pub nearest_non_pure: Option<NearTight>,
    pub notes: Vec<NoteSummary>,
    pub errors: Vec<ErrorSummary>,
}

impl ScanReport {
    /// No bound violation, no degree mismatch, and no instance error.
    pub fn clean(&self) -> bool {
        self.violations == 0 && self.degree_mismatches.is_empty() && self.errors.is_empty()
    }
}

fn q(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Keeps the extreme value; ties go to the smaller parameters so the result
/// does not depend on the order of arrival.
fn keep_extreme(
    slot: &mut Option<(BigRational, InputSpec)>,
    value: BigRational,
    params: &InputSpec,
    prefer_larger: bool,
) {
    let replace = match slot {
        None => true,
        Some((cur, cur_params)) => {
            let better = if prefer_larger {
                value > *cur
            } else {
                value < *cur
            };
            better || (value == *cur && params < cur_params)
        }
    };
    if replace {
        *slot = Some((value, params.clone()));
    }
}

/// Order-insensitive fold of evaluations.
#[derive(Debug, Default)]
struct Accumulator {
    checked: usize,
    budget_skipped: usize,
    mixed: Vec<BoundViolation>,
    factorial: Vec<BoundViolation>,
    mult: Vec<MultViolation>,
    naive_failures: usize,
    naive_not_evaluable: usize,
    tight: usize,
    mixed_tight: usize,
    factorial_tight: usize,
    mult_tight: usize,
    pure: usize,
    constant: usize,
    degree_checked: usize,
    degree_mismatches: Vec<DegreeMismatch>,
    slack: [Option<(BigRational, InputSpec)>; 4],
    near: Option<(BigRational, InputSpec)>,
    notes: BTreeMap<&'static str, (Note, usize)>,
    errors: BTreeMap<String, (usize, InputSpec)>,
}

fn note_kind(note: &Note) -> &'static str {
    match note {
        Note::GnMiddleTotal { .. } => "gn_middle_total",
        Note::JozefiakStepOneTwist { .. } => "jozefiak_step_one_twist",
        Note::DivisorLastShift { .. } => "divisor_last_shift",
    }
}

impl Accumulator {
    fn absorb(&mut self, ev: &Evaluation) {
        let params = &ev.params;
        let checked = match &ev.outcome {
            Ok(checked) => checked,
            Err(Error::BudgetExceeded { .. }) => {
                self.budget_skipped += 1;
                return;
            }
            Err(e) => {
                let slot = self
                    .errors
                    .entry(e.to_string())
                    .or_insert((0, params.clone()));
                slot.0 += 1;
                if *params < slot.1 {
                    slot.1 = params.clone();
                }
                return;
            }
        };
        let r = &checked.report;
        self.checked += 1;
        let mut worst_mixed: Option<BigRational> = None;
        for ix in &r.indices {
            if !ix.mixed_lower_ok() {
                self.mixed.push(BoundViolation {
                    params: params.clone(),
                    i: ix.i,
                    bound: format_rational(&ix.mixed_lower),
                    beta: ix.beta,
                });
            }
            if !ix.factorial_upper_ok() {
                self.factorial.push(BoundViolation {
                    params: params.clone(),
                    i: ix.i,
                    bound: format_rational(&ix.factorial_upper),
                    beta: ix.beta,
                });
            }
            let lower = &ix.mixed_lower / q(ix.beta);
            let upper = q(ix.beta) / &ix.factorial_upper;
            worst_mixed = Some(match worst_mixed {
                Some(w) if w <= lower => w,
                _ => lower.clone(),
            });
            keep_extreme(&mut self.slack[0], lower, params, false);
            keep_extreme(&mut self.slack[1], upper, params, false);
        }
        let e = q(r.e);
        keep_extreme(&mut self.slack[2], &r.mult_lower / &e, params, false);
        keep_extreme(&mut self.slack[3], &e / &r.mult_upper, params, false);
        if !r.mult_ok() {
            self.mult.push(MultViolation {
                params: params.clone(),
                lower: format_rational(&r.mult_lower),
                upper: format_rational(&r.mult_upper),
                e: r.e,
            });
        }
        self.naive_failures += r.naive_failures();
        self.naive_not_evaluable += r.naive_not_evaluable();
        self.tight += usize::from(r.all_tight());
        self.mixed_tight += usize::from(r.mixed_tight());
        self.factorial_tight += usize::from(r.factorial_tight());
        self.mult_tight += usize::from(r.mult_tight());
        self.pure += usize::from(r.pure);
        self.constant += usize::from(checked.constant == Some(true));
        if !r.pure {
            if let Some(w) = worst_mixed {
                keep_extreme(&mut self.near, w, params, true);
            }
        }
        if let Some(expected) = checked.expected_degree {
            self.degree_checked += 1;
            if expected != r.e {
                self.degree_mismatches.push(DegreeMismatch {
                    params: params.clone(),
                    expected,
                    e: r.e,
                });
            }
        }
        for note in &checked.notes {
            let slot = self
                .notes
                .entry(note_kind(note))
                .or_insert((note.clone(), 0));
            slot.1 += 1;
            if *note < slot.0 {
                slot.0 = note.clone();
            }
        }
    }

    fn finish(mut self, family: Family, instances: usize, truncated: bool) -> ScanReport {
        self.mixed.sort();
        self.factorial.sort();
        self.mult.sort();
        self.degree_mismatches.sort();
        let show = |slot: &Option<(BigRational, InputSpec)>| {
            slot.as_ref().map(|(v, _)| format_rational(v))
        };
        ScanReport {
            family,
            instances,
            checked: self.checked,
            truncated: truncated || self.budget_skipped > 0,
            budget_skipped: self.budget_skipped,
            violations: self.mixed.len() + self.factorial.len() + self.mult.len(),
            mixed_lower_violations: self.mixed,
            factorial_upper_violations: self.factorial,
            mult_violations: self.mult,
            naive_failures: self.naive_failures,
            naive_not_evaluable: self.naive_not_evaluable,
            tight_count: self.tight,
            mixed_tight_count: self.mixed_tight,
            factorial_tight_count: self.factorial_tight,
            mult_tight_count: self.mult_tight,
            pure_count: self.pure,
            constant_count: self.constant,
            degree_checked: self.degree_checked,
            degree_mismatches: self.degree_mismatches,
            min_slack: Slack {
                mixed_lower: show(&self.slack[0]),
                factorial_upper: show(&self.slack[1]),
                mult_lower: show(&self.slack[2]),
                mult_upper: show(&self.slack[3]),
            },
            nearest_non_pure: self.near.map(|(v, params)| NearTight {
                params,
                ratio: format_rational(&v),
            }),
            notes: self
                .notes
                .into_values()
                .map(|(note, occurrences)| NoteSummary { note, occurrences })
                .collect(),
            errors: self
                .errors
                .into_iter()
                .map(|(message, (occurrences, first))| ErrorSummary {
                    message,
                    occurrences,
                    first,
                })
                .collect(),
        }
    }
}

/// Aggregates evaluations in any order into a report.
pub fn aggregate<'a>(
    family: Family,
    evaluations: impl IntoIterator<Item = &'a Evaluation>,
    truncated: bool,
) -> ScanReport {
    let mut acc = Accumulator::default();
    let mut instances = 0;
    for ev in evaluations {
        instances += 1;
        acc.absorb(ev);
    }
    acc.finish(family, instances, truncated)
}

/// Per-instance line of the JSONL output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceRecord {
    pub params: InputSpec,
    pub total: Vec<u64>,
    pub m: Vec<i64>,
    #[serde(rename = "M")]
    pub big_m: Vec<i64>,
    pub mixed_lower: Vec<String>,
    pub factorial_upper: Vec<String>,
    pub ok: bool,
    pub tight: bool,
}

impl InstanceRecord {
    pub fn from_evaluation(ev: &Evaluation) -> Option<Self> {
        let r = &ev.outcome.as_ref().ok()?.report;
        Some(Self {
            params: ev.params.clone(),
            total: r.betas(),
            m: r.m.clone(),
            big_m: r.big_m.clone(),
            mixed_lower: r
                .indices
                .iter()
                .map(|ix| format_rational(&ix.mixed_lower))
                .collect(),
            factorial_upper: r
                .indices
                .iter()
                .map(|ix| format_rational(&ix.factorial_upper))
                .collect(),
            ok: r.all_ok(),
            tight: r.all_tight(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct ScanOutput {
    pub report: ScanReport,
    /// Evaluations in enumeration order.
    pub evaluations: Vec<Evaluation>,
}

impl ScanOutput {
    pub fn records(&self) -> impl Iterator<Item = InstanceRecord> + '_ {
        self.evaluations
            .iter()
            .filter_map(InstanceRecord::from_evaluation)
    }
}

/// Enumerates, evaluates on `jobs` worker threads, and aggregates.
pub fn run_scan_with(spec: &FamilySpec, jobs: usize) -> Result<ScanOutput> {
    spec.validate()?;
    if jobs == 0 {
        return Err(Error::RangeError("jobs must be >= 1".into()));
    }
    let grid = enumerate(spec);
    let cap = spec.generator_cap;
    let evaluations: Vec<Evaluation> = if jobs == 1 {
        grid.instances.iter().map(|p| evaluate(p, cap)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::RangeError(format!("cannot start {jobs} workers: {e}")))?;
        pool.install(|| {
            grid.instances
                .par_iter()
                .map(|p| evaluate(p, cap))
                .collect()
        })
    };
    let report = aggregate(spec.family, &evaluations, grid.truncated);
    Ok(ScanOutput {
        report,
        evaluations,
    })
}

pub fn run_scan(spec: &FamilySpec) -> Result<ScanReport> {
    run_scan_with(spec, 1).map(|out| out.report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_enumeration_of_complete_intersections() {
        let spec = FamilySpec::new(Family::Standard)
            .t_max(1)
            .c_max(2)
            .max_entry(2);
        let grid = enumerate(&spec);
        assert!(!grid.truncated);
        let degrees: Vec<_> = grid
            .instances
            .iter()
            .map(|s| match s {
                InputSpec::Standard { a, .. } => a.clone(),
                other => panic!("unexpected {other:?}"),
            })
            .collect();
        assert_eq!(degrees, vec![vec![1, 1], vec![1, 2], vec![2, 2]]);
    }

    #[test]
    fn symmetric_enumeration_is_parity_consistent() {
        let spec = FamilySpec::new(Family::Symmetric).t_max(2).max_entry(3);
        let got: Vec<_> = enumerate(&spec).instances;
        let want: Vec<_> = [[1, 1], [1, 3], [2, 2], [3, 3]]
            .iter()
            .map(|v| InputSpec::Symmetric { two_a: v.to_vec() })
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn divisor_enumeration_counts_products() {
        let spec = FamilySpec::new(Family::Divisor).t_max(3).c_max(2);
        let got: Vec<_> = enumerate(&spec)
            .instances
            .into_iter()
            .map(|s| match s {
                InputSpec::Divisor { c, t, p } => (c, t, p),
                other => panic!("unexpected {other:?}"),
            })
            .collect();
        assert_eq!(
            got,
            vec![
                (1, 2, 1),
                (1, 3, 1),
                (2, 2, 1),
                (2, 2, 2),
                (2, 3, 1),
                (2, 3, 2)
            ]
        );
    }

    #[test]
    fn standard_grid_is_canonical_and_duplicate_free() {
        let spec = FamilySpec::new(Family::Standard)
            .t_max(3)
            .c_max(3)
            .max_entry(3);
        let grid = enumerate(&spec).instances;
        let mut seen = std::collections::BTreeSet::new();
        for s in &grid {
            let InputSpec::Standard { b, a } = s else {
                unreachable!()
            };
            assert_eq!(b[0], 0);
            let dd = StandardDegreeData::new(b.clone(), a.clone()).unwrap();
            let u = dd.degree_matrix();
            assert!(u.iter().flatten().all(|&x| (0..=3).contains(&x)));
            assert!(seen.insert(u));
        }
    }

    #[test]
    fn budget_truncates_explicitly() {
        let spec = FamilySpec::new(Family::Divisor).t_max(3).c_max(2).budget(4);
        let grid = enumerate(&spec);
        assert_eq!(grid.instances.len(), 4);
        assert!(grid.truncated);
        let exact = FamilySpec::new(Family::Divisor).t_max(3).c_max(2).budget(6);
        assert!(!enumerate(&exact).truncated);
    }

    #[test]
    fn generator_cap_is_reported_as_truncation() {
        let mut spec = FamilySpec::new(Family::Standard)
            .t_max(2)
            .c_max(2)
            .max_entry(1);
        spec.generator_cap = 2;
        let report = run_scan(&spec).unwrap();
        assert!(report.truncated);
        assert!(report.budget_skipped > 0);
        assert!(report.errors.is_empty());
    }

    #[test]
    fn small_standard_scan_is_clean() {
        let spec = FamilySpec::new(Family::Standard)
            .t_max(2)
            .c_max(2)
            .max_entry(2);
        let report = run_scan(&spec).unwrap();
        assert!(report.clean());
        assert_eq!(report.checked, report.instances);
        assert_eq!(report.mixed_tight_count, report.constant_count);
        assert_eq!(report.pure_count, report.constant_count);
        assert!(report.min_slack.mult_upper.is_some());
        assert!(report.nearest_non_pure.is_some());
    }

    #[test]
    fn square_notes_are_grouped() {
        let spec = FamilySpec::new(Family::Square).t_max(3).max_entry(2);
        let report = run_scan(&spec).unwrap();
        assert!(report.clean());
        assert_eq!(report.notes.len(), 1);
        assert_eq!(report.notes[0].occurrences, report.instances);
    }

    #[test]
    fn parallel_and_permuted_runs_agree() {
        let spec = FamilySpec::new(Family::Standard)
            .t_max(2)
            .c_max(3)
            .max_entry(3);
        let serial = run_scan_with(&spec, 1).unwrap();
        let parallel = run_scan_with(&spec, 4).unwrap();
        assert_eq!(serial.report, parallel.report);
        let a = serde_json::to_string(&serial.report).unwrap();
        let b = serde_json::to_string(&parallel.report).unwrap();
        assert_eq!(a, b);
        let reversed = aggregate(spec.family, serial.evaluations.iter().rev(), false);
        assert_eq!(reversed, serial.report);
    }

    #[test]
    fn degree_identities_hold() {
        let divisors = run_scan(&FamilySpec::new(Family::Divisor).t_max(4).c_max(4)).unwrap();
        assert!(divisors.degree_checked > 0);
        assert!(divisors.degree_mismatches.is_empty());
        let powers = run_scan(&FamilySpec::new(Family::CiPower).t_max(4).max_entry(3)).unwrap();
        assert_eq!(powers.degree_checked, powers.instances);
        assert!(powers.clean());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let mut spec = FamilySpec::new(Family::Standard);
        spec.t_max = 0;
        assert!(spec.validate().is_err());
        let spec = FamilySpec::new(Family::Standard).c_range(3, 2);
        assert!(spec.validate().is_err());
        assert!(run_scan_with(&FamilySpec::new(Family::Square), 0).is_err());
        assert_eq!("ci_power".parse::<Family>().unwrap(), Family::CiPower);
        assert!("cubic".parse::<Family>().is_err());
    }
}
