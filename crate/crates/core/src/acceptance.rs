//! The acceptance suite: one check per criterion, shared by `selftest` and
//! the `acceptance` test target.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::bounds::{check_table, multiplicity_bounds, pure_betti, BoundsReport};
use crate::combinatorics::{binomial, nondecreasing_sequences};
use crate::error::Result;
use crate::input::InputSpec;
use crate::model::{
    DegreeData, DivisorData, SquareDegreeData, StandardDegreeData, SymmetricDegreeData,
};
use crate::resolutions::{
    build_table, ci_power_standard, divisor_closed_form, divisor_table, en_closed_form,
    en_generators, en_table, gn_table, jozefiak_table, notes_for, Note, DEFAULT_GENERATOR_CAP,
};
use crate::scan::{enumerate, run_scan, Family, FamilySpec};
use crate::table::BettiTable;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// Smaller grids.
    pub quick: bool,
    /// Replace the Veronese golden table by a wrong one.
    pub corrupt_golden: bool,
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:<3} {} ({:.3}s",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(limit) = self.limit {
            write!(f, ", limit {}s", limit.as_secs())?;
        }
        write!(f, "): {}", self.detail)
    }
}

fn timed(
    id: &'static str,
    name: &'static str,
    limit: Option<Duration>,
    body: impl FnOnce() -> Result<(bool, String)>,
) -> CriterionResult {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail = format!("{detail}; exceeded runtime limit");
        }
    }
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed,
        limit,
    }
}

fn body(t: &BettiTable) -> Vec<(usize, i64, u64)> {
    t.entries().filter(|e| e.0 > 0).collect()
}

fn q(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Every bound in the report, naive ones included, equals its target.
fn exactly_tight(r: &BoundsReport) -> bool {
    r.all_tight()
        && r.mult_tight()
        && r.indices.iter().all(|ix| {
            ix.naive_lower.as_ref() == Some(&q(ix.beta))
                && ix.naive_upper.as_ref() == Some(&q(ix.beta))
        })
}

pub fn veronese_golden(opts: &Options) -> CriterionResult {
    timed(
        "1",
        "Veronese golden case",
        Some(Duration::from_secs(1)),
        || {
            let golden: Vec<(usize, i64, u64)> = if opts.corrupt_golden {
                vec![(1, 2, 6), (2, 3, 9), (3, 4, 3)]
            } else {
                vec![(1, 2, 6), (2, 3, 8), (3, 4, 3)]
            };
            let table = jozefiak_table(&SymmetricDegreeData::new(vec![1, 1, 1])?)?;
            let report = check_table(&table)?;
            let shifts_ok = table.shifts() == (vec![2, 3, 4], vec![2, 3, 4]);
            let ok = body(&table) == golden && shifts_ok && report.e == 4 && exactly_tight(&report);
            Ok((
                ok,
                format!(
                    "table {:?}, shifts {:?}, e = {}, all bounds equal: {}",
                    body(&table),
                    table.min_shifts(),
                    report.e,
                    exactly_tight(&report)
                ),
            ))
        },
    )
}

/// Standard data with `b_1 = 0`, `b_i >= b_min`, `a_j` in `0..=a_max`.
pub fn oracle_grid(t_max: usize, c_max: usize, b_min: i64, a_max: i64) -> Vec<StandardDegreeData> {
    let mut out = Vec::new();
    for t in 1..=t_max {
        for c in 2..=c_max {
            for tail in nondecreasing_sequences(t - 1, b_min, 0) {
                let b: Vec<i64> = std::iter::once(0).chain(tail.into_iter().rev()).collect();
                for a in nondecreasing_sequences(t + c - 1, 0, a_max) {
                    if let Ok(dd) = StandardDegreeData::new(b.clone(), a) {
                        out.push(dd);
                    }
                }
            }
        }
    }
    out
}

fn oracle_grid_for(opts: &Options) -> Vec<StandardDegreeData> {
    if opts.quick {
        oracle_grid(2, 3, -2, 3)
    } else {
        oracle_grid(3, 4, -3, 5)
    }
}

pub fn closed_form_oracle(opts: &Options) -> CriterionResult {
    timed(
        "2",
        "closed form agrees with enumeration",
        Some(Duration::from_secs(60)),
        || {
            let grid = oracle_grid_for(opts);
            let mut mismatches = Vec::new();
            for dd in &grid {
                let table = en_table(dd)?;
                let cf = en_closed_form(dd);
                let (t, c) = (dd.t() as i64, dd.c() as i64);
                let formula: Vec<u64> = (1..=c)
                    .map(|i| (binomial(t + c - 1, t + i - 1) * binomial(t + i - 2, i - 1)) as u64)
                    .collect();
                let mut walked = true;
                for i in 1..=dd.c() {
                    let mut degrees: Vec<i64> = en_generators(dd, i, DEFAULT_GENERATOR_CAP)?
                        .into_iter()
                        .map(|g| g.degree)
                        .collect();
                    degrees.sort_unstable();
                    let flat: Vec<i64> = table
                        .row(i)
                        .iter()
                        .flat_map(|(&j, &n)| std::iter::repeat_n(j, n as usize))
                        .collect();
                    walked &= degrees == flat;
                }
                if cf.m != table.min_shifts()
                    || cf.big_m != table.max_shifts()
                    || cf.total != table.totals()
                    || formula != table.totals()
                    || !walked
                {
                    mismatches.push(format!("b={:?} a={:?}", dd.b(), dd.a()));
                }
            }
            Ok((
                mismatches.is_empty() && !grid.is_empty(),
                format!(
                    "{} instances, {} mismatches{}",
                    grid.len(),
                    mismatches.len(),
                    mismatches
                        .first()
                        .map(|m| format!(", first {m}"))
                        .unwrap_or_default()
                ),
            ))
        },
    )
}

/// The four family grids scanned for bound violations.
pub fn scan_grids(opts: &Options) -> Vec<FamilySpec> {
    let mut specs = if opts.quick {
        vec![
            FamilySpec::new(Family::Standard)
                .t_max(2)
                .c_max(3)
                .max_entry(2),
            FamilySpec::new(Family::Symmetric).t_max(3).max_entry(3),
            FamilySpec::new(Family::Square).t_max(2).max_entry(2),
            FamilySpec::new(Family::Divisor).t_max(3).c_max(3),
        ]
    } else {
        vec![
            FamilySpec::new(Family::Standard)
                .t_max(3)
                .c_max(4)
                .max_entry(3),
            FamilySpec::new(Family::Symmetric).t_max(5).max_entry(5),
            FamilySpec::new(Family::Square).t_max(4).max_entry(3),
            FamilySpec::new(Family::Divisor).t_max(6).c_max(6),
        ]
    };
    for spec in &mut specs {
        spec.budget = usize::MAX;
    }
    specs
}

pub fn bound_scan(opts: &Options) -> CriterionResult {
    timed(
        "3",
        "bound scan, zero violations",
        Some(Duration::from_secs(120)),
        || {
            let mut ok = true;
            let mut parts = Vec::new();
            for spec in scan_grids(opts) {
                let r = run_scan(&spec)?;
                ok &= r.clean() && !r.truncated && r.checked == r.instances && r.instances > 0;
                parts.push(format!(
                    "{} {} instances / {} violations",
                    spec.family, r.instances, r.violations
                ));
            }
            Ok((ok, parts.join(", ")))
        },
    )
}

pub fn erratum_detection(_opts: &Options) -> CriterionResult {
    timed(
        "4",
        "middle-rank erratum detection",
        Some(Duration::from_secs(1)),
        || {
            let qd = SquareDegreeData::new(vec![0, 0], vec![1, 1])?;
            let table = gn_table(&qd)?;
            let koszul = body(&table) == vec![(1, 1, 4), (2, 2, 6), (3, 3, 4), (4, 4, 1)];
            let notes = notes_for(&DegreeData::Square(qd), &table);
            let note_ok = matches!(
                notes.as_slice(),
                [Note::GnMiddleTotal {
                    t: 2,
                    printed: 2,
                    rank: 6,
                    printed_alternating_sum,
                    rank_alternating_sum: 0,
                }] if *printed_alternating_sum != 0
            );
            let ok = koszul && note_ok && table.alternating_rank_sum() == 0;
            Ok((ok, format!("table {:?}, notes {:?}", body(&table), notes)))
        },
    )
}

fn standard_grid_reports(opts: &Options) -> Result<Vec<(StandardDegreeData, BoundsReport)>> {
    let spec = scan_grids(opts).remove(0);
    enumerate(&spec)
        .instances
        .iter()
        .map(|p| {
            let InputSpec::Standard { b, a } = p else {
                unreachable!("standard grid")
            };
            let dd = StandardDegreeData::new(b.clone(), a.clone())?;
            let report = check_table(&en_table(&dd)?)?;
            Ok((dd, report))
        })
        .collect()
}

fn mismatch_detail<F, G>(
    rows: &[(StandardDegreeData, BoundsReport)],
    left: F,
    right: G,
    names: (&str, &str),
) -> (usize, String)
where
    F: Fn(&StandardDegreeData, &BoundsReport) -> bool,
    G: Fn(&StandardDegreeData, &BoundsReport) -> bool,
{
    let bad: Vec<_> = rows
        .iter()
        .filter(|(dd, r)| left(dd, r) != right(dd, r))
        .collect();
    let detail = match bad.first() {
        Some((dd, r)) => format!(
            "; e.g. b={:?} a={:?}: {} = {}, {} = {}",
            dd.b(),
            dd.a(),
            names.0,
            left(dd, r),
            names.1,
            right(dd, r)
        ),
        None => String::new(),
    };
    (bad.len(), detail)
}

pub fn tightness_purity(opts: &Options) -> CriterionResult {
    timed(
        "5",
        "all bounds tight <=> constant matrix <=> pure",
        None,
        || {
            let rows = standard_grid_reports(opts)?;
            let count = |f: &dyn Fn(&StandardDegreeData, &BoundsReport) -> bool| {
                rows.iter().filter(|(dd, r)| f(dd, r)).count()
            };
            let (tc, tc_detail) = mismatch_detail(
                &rows,
                |_, r| r.all_tight(),
                |dd, _| dd.is_constant(),
                ("tight", "constant"),
            );
            let (cp, cp_detail) = mismatch_detail(
                &rows,
                |dd, _| dd.is_constant(),
                |_, r| r.pure,
                ("constant", "pure"),
            );
            Ok((
            tc == 0 && cp == 0,
            format!(
                "{} instances: {} all-tight, {} constant, {} pure; {} tight/constant disagreements, {} constant/pure disagreements{}{}",
                rows.len(),
                count(&|_, r| r.all_tight()),
                count(&|dd, _| dd.is_constant()),
                count(&|_, r| r.pure),
                tc,
                cp,
                tc_detail,
                cp_detail
            ),
        ))
        },
    )
}

pub fn mixed_tightness(opts: &Options) -> CriterionResult {
    timed(
        "5a",
        "mixed lower bounds tight <=> constant matrix <=> pure",
        None,
        || {
            let rows = standard_grid_reports(opts)?;
            let (mc, mc_detail) = mismatch_detail(
                &rows,
                |_, r| r.mixed_tight() && r.mult_tight(),
                |dd, _| dd.is_constant(),
                ("mixed and multiplicity tight", "constant"),
            );
            let (cp, _) = mismatch_detail(&rows, |dd, _| dd.is_constant(), |_, r| r.pure, ("", ""));
            Ok((
                mc == 0 && cp == 0,
                format!(
                    "{} instances, {} disagreements{}",
                    rows.len(),
                    mc + cp,
                    mc_detail
                ),
            ))
        },
    )
}

pub fn factorial_tightness(opts: &Options) -> CriterionResult {
    timed(
        "5b",
        "factorial upper bounds tight <=> all entries equal 1",
        None,
        || {
            let rows = standard_grid_reports(opts)?;
            let ones =
                |dd: &StandardDegreeData| dd.degree_matrix().iter().flatten().all(|&u| u == 1);
            let (n, detail) = mismatch_detail(
                &rows,
                |_, r| r.factorial_tight(),
                |dd, _| ones(dd),
                ("factorial tight", "all ones"),
            );
            Ok((
                n == 0,
                format!("{} instances, {} disagreements{}", rows.len(), n, detail),
            ))
        },
    )
}

/// Power sums below the codimension vanish, the multiplicity is a positive
/// integer, and pure tables agree with the pure-resolution formulas.
fn hilbert_consistent(table: &BettiTable) -> Result<bool> {
    let c = table.codim();
    if (0..c as u32).any(|k| !table.power_sum(k).is_zero()) {
        return Ok(false);
    }
    let e = table.multiplicity()?;
    if e == 0 {
        return Ok(false);
    }
    if table.is_pure() {
        let d = table.min_shifts();
        let (lower, _) = multiplicity_bounds(&d, &d);
        if lower != q(e) {
            return Ok(false);
        }
        let totals = table.totals();
        for i in 1..=c {
            if pure_betti(&d, i)? != totals[i - 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every table the other criteria generate.
fn all_tables(opts: &Options) -> Result<Vec<(String, BettiTable)>> {
    let mut out = Vec::new();
    out.push((
        "veronese".to_string(),
        jozefiak_table(&SymmetricDegreeData::new(vec![1, 1, 1])?)?,
    ));
    for dd in oracle_grid_for(opts) {
        out.push((
            format!("standard b={:?} a={:?}", dd.b(), dd.a()),
            en_table(&dd)?,
        ));
    }
    for spec in scan_grids(opts) {
        for p in enumerate(&spec).instances {
            let table = build_table(&p.degree_data()?)?;
            out.push((serde_json::to_string(&p).expect("params serialize"), table));
        }
    }
    out.push((
        "square linear t=2".to_string(),
        gn_table(&SquareDegreeData::new(vec![0, 0], vec![1, 1])?)?,
    ));
    out.push((
        "ci_power 1 2 2".to_string(),
        en_table(&ci_power_standard(1, 2, 2)?)?,
    ));
    Ok(out)
}

pub fn hilbert_consistency(opts: &Options) -> CriterionResult {
    timed("6", "Hilbert consistency", None, || {
        let tables = all_tables(opts)?;
        let mut bad = Vec::new();
        let mut pure = 0;
        for (label, table) in &tables {
            pure += usize::from(table.is_pure());
            if !hilbert_consistent(table).unwrap_or(false) {
                bad.push(label.clone());
            }
        }
        let d = [2, 3, 4, 6];
        let hk: Vec<u64> = (1..=4).map(|i| pure_betti(&d, i)).collect::<Result<_>>()?;
        let ok = bad.is_empty() && hk == vec![9, 16, 9, 1];
        Ok((
            ok,
            format!(
                "{} tables ({} pure), {} inconsistent{}; pure_betti(2,3,4,6) = {:?}",
                tables.len(),
                pure,
                bad.len(),
                bad.first()
                    .map(|b| format!(", first {b}"))
                    .unwrap_or_default(),
                hk
            ),
        ))
    })
}

pub fn divisor_degree(opts: &Options) -> CriterionResult {
    timed("7", "divisor degree identity", None, || {
        let (c_max, t_max) = if opts.quick { (3, 3) } else { (6, 6) };
        let mut instances = 0;
        let mut failures = Vec::new();
        let mut notes = 0;
        for c in 1..=c_max {
            for t in 2..=t_max {
                for p in 1..=c {
                    let dv = DivisorData::new(c, t, p)?;
                    let table = divisor_table(&dv)?;
                    let cf = divisor_closed_form(&dv);
                    let m = table.min_shifts();
                    let cu = dv.c();
                    let note = notes_for(&DegreeData::Divisor(dv), &table);
                    notes += note.len();
                    let note_ok = note.is_empty() == (m[cu - 1] == cf.m[cu - 1]);
                    let ok = table.multiplicity()? == dv.d() as u64
                        && cf.m[..cu - 1] == m[..cu - 1]
                        && cf.big_m == table.max_shifts()
                        && cf.total == table.totals()
                        && note_ok;
                    instances += 1;
                    if !ok {
                        failures.push((c, t, p));
                    }
                }
            }
        }
        Ok((
            failures.is_empty() && notes > 0,
            format!(
                "{instances} instances, {} failures, {notes} last-shift notes{}",
                failures.len(),
                failures
                    .first()
                    .map(|f| format!(", first {f:?}"))
                    .unwrap_or_default()
            ),
        ))
    })
}

pub fn ci_powers(_opts: &Options) -> CriterionResult {
    timed("8", "complete intersection powers", None, || {
        let dd = ci_power_standard(1, 2, 2)?;
        let table = en_table(&dd)?;
        let r = check_table(&table)?;
        let expected_e = (binomial(3, 2) * 2) as u64;
        let ok = table.totals() == vec![3, 2]
            && table.shifts() == (vec![2, 4], vec![4, 5])
            && r.e == 6
            && r.e == expected_e
            && r.all_ok();
        Ok((
            ok,
            format!(
                "totals {:?}, m {:?}, M {:?}, e = {}, bounds hold: {}",
                table.totals(),
                table.min_shifts(),
                table.max_shifts(),
                r.e,
                r.all_ok()
            ),
        ))
    })
}

pub fn run_all(opts: &Options) -> Vec<CriterionResult> {
    vec![
        veronese_golden(opts),
        closed_form_oracle(opts),
        bound_scan(opts),
        erratum_detection(opts),
        tightness_purity(opts),
        mixed_tightness(opts),
        factorial_tightness(opts),
        hilbert_consistency(opts),
        divisor_degree(opts),
        ci_powers(opts),
    ]
}
