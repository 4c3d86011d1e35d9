//! C ABI over `detbetti`.
//!
//! Tables and bound reports are opaque heap handles released with their
//! `*_free` function. Every fallible call returns a [`DbStatus`]; on
//! failure a message is kept per thread and can be read with
//! [`db_last_error`]. Strings returned through `char **` are owned by the
//! caller and released with [`db_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use detbetti::input::{InputSpec, RawTable};
use detbetti::resolutions::notes_for;
use detbetti::{build_table, check_table, BettiTable, BoundsReport, DegreeData, Error, Note};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbStatus {
    Ok = 0,
    NullPointer = 1,
    /// Degree data or JSON rejected by validation.
    InvalidInput = 2,
    /// Table entries do not form a consistent resolution.
    Inconsistent = 3,
    /// A resolution step has more generators than the cap.
    BudgetExceeded = 4,
    /// Non-positive denominator or non-integral result.
    Arithmetic = 5,
    /// The output buffer is shorter than required.
    BufferTooSmall = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// One graded Betti number `beta_{i,j} = count`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DbEntry {
    pub i: usize,
    pub j: i64,
    pub count: u64,
}

/// Opaque table handle.
pub struct DbTable {
    table: BettiTable,
    notes: Vec<Note>,
}

/// Opaque bound-report handle.
pub struct DbReport {
    report: BoundsReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> DbStatus {
    match e {
        Error::InconsistentTable(_) => DbStatus::Inconsistent,
        Error::BudgetExceeded { .. } => DbStatus::BudgetExceeded,
        Error::DenominatorError { .. } | Error::NonIntegralResult(_) => DbStatus::Arithmetic,
        _ => DbStatus::InvalidInput,
    }
}

struct Fail(DbStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(DbStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> DbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            DbStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            DbStatus::Internal
        }
    }
}

unsafe fn as_ref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

unsafe fn int_slice<'a>(p: *const i64, len: usize, what: &str) -> Result<&'a [i64], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len))
}

unsafe fn c_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(DbStatus::InvalidInput, format!("{what} is not UTF-8: {e}")))
}

fn boxed(data: DegreeData) -> Result<*mut DbTable, Fail> {
    let table = build_table(&data)?;
    let notes = notes_for(&data, &table);
    Ok(Box::into_raw(Box::new(DbTable { table, notes })))
}

unsafe fn from_spec(spec: InputSpec, out: *mut *mut DbTable) -> Result<(), Fail> {
    let out = out_ref(out, "out")?;
    *out = boxed(spec.degree_data()?)?;
    Ok(())
}

/// Builds a table from a JSON degree-data object such as
/// `{"kind":"symmetric","two_a":[1,1,1]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_from_json(
    json: *const c_char,
    out: *mut *mut DbTable,
) -> DbStatus {
    guard(|| from_spec(InputSpec::parse(c_str(json, "json")?)?, out))
}

/// Maximal minors of a `t x n` matrix with entry degrees `a_j - b_i`.
///
/// # Safety
/// `b` must hold `t` values and `a` must hold `n`; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_standard(
    b: *const i64,
    t: usize,
    a: *const i64,
    n: usize,
    out: *mut *mut DbTable,
) -> DbStatus {
    guard(|| {
        let spec = InputSpec::Standard {
            b: int_slice(b, t, "b")?.to_vec(),
            a: int_slice(a, n, "a")?.to_vec(),
        };
        from_spec(spec, out)
    })
}

/// Submaximal minors of a symmetric `t x t` matrix; `two_a` holds `2 a_i`.
///
/// # Safety
/// `two_a` must hold `t` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_symmetric(
    two_a: *const i64,
    t: usize,
    out: *mut *mut DbTable,
) -> DbStatus {
    guard(|| {
        let spec = InputSpec::Symmetric {
            two_a: int_slice(two_a, t, "two_a")?.to_vec(),
        };
        from_spec(spec, out)
    })
}

/// Submaximal minors of a square `t x t` matrix.
///
/// # Safety
/// `b` and `a` must each hold `t` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_square(
    b: *const i64,
    a: *const i64,
    t: usize,
    out: *mut *mut DbTable,
) -> DbStatus {
    guard(|| {
        let spec = InputSpec::Square {
            b: int_slice(b, t, "b")?.to_vec(),
            a: int_slice(a, t, "a")?.to_vec(),
        };
        from_spec(spec, out)
    })
}

/// ACM divisor of degree `tc + 1 - p` on a variety of minimal degree.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_divisor(
    c: i64,
    t: i64,
    p: i64,
    out: *mut *mut DbTable,
) -> DbStatus {
    guard(|| from_spec(InputSpec::Divisor { c, t, p }, out))
}

/// `(f, g)^s` for forms of degrees `d1` and `d2`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_ci_power(
    d1: i64,
    d2: i64,
    s: i64,
    out: *mut *mut DbTable,
) -> DbStatus {
    guard(|| from_spec(InputSpec::CiPower { d1, d2, s }, out))
}

/// A table given by its entries; row 0 may be omitted.
///
/// # Safety
/// `entries` must hold `len` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_from_entries(
    codim: usize,
    entries: *const DbEntry,
    len: usize,
    out: *mut *mut DbTable,
) -> DbStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let items: &[DbEntry] = if len == 0 {
            &[]
        } else if entries.is_null() {
            return Err(null("entries"));
        } else {
            slice::from_raw_parts(entries, len)
        };
        let raw = RawTable {
            codim,
            betti: items.iter().map(|e| (e.i, e.j, e.count)).collect(),
        };
        let table = raw.into_table()?;
        *out = Box::into_raw(Box::new(DbTable {
            table,
            notes: Vec::new(),
        }));
        Ok(())
    })
}

/// # Safety
/// `table` must come from a `db_table_*` constructor or be null.
#[no_mangle]
pub unsafe extern "C" fn db_table_free(table: *mut DbTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_codim(table: *const DbTable, out: *mut usize) -> DbStatus {
    guard(|| {
        *out_ref(out, "out")? = as_ref(table, "table")?.table.codim();
        Ok(())
    })
}

/// Copies the nonzero entries, row 0 included, in lexicographic order.
/// `written` always receives the number of entries; if `cap` is too small
/// nothing is copied and `DB_STATUS_BUFFER_TOO_SMALL` is returned.
///
/// # Safety
/// `buf` must have room for `cap` entries (it may be null when `cap` is 0);
/// `written` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_entries(
    table: *const DbTable,
    buf: *mut DbEntry,
    cap: usize,
    written: *mut usize,
) -> DbStatus {
    guard(|| {
        let table = &as_ref(table, "table")?.table;
        let written = out_ref(written, "written")?;
        let entries: Vec<DbEntry> = table
            .entries()
            .map(|(i, j, count)| DbEntry { i, j, count })
            .collect();
        *written = entries.len();
        if cap < entries.len() {
            return Err(Fail(
                DbStatus::BufferTooSmall,
                format!("{} entries, buffer holds {cap}", entries.len()),
            ));
        }
        if buf.is_null() && !entries.is_empty() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(entries.as_ptr(), buf, entries.len());
        Ok(())
    })
}

unsafe fn copy_out<T: Copy>(values: &[T], buf: *mut T, cap: usize, what: &str) -> Result<(), Fail> {
    if cap < values.len() {
        return Err(Fail(
            DbStatus::BufferTooSmall,
            format!("{what} needs {} slots, buffer holds {cap}", values.len()),
        ));
    }
    if buf.is_null() {
        return Err(null(what));
    }
    ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    Ok(())
}

/// Writes `m_1..m_c` and `M_1..M_c`; both buffers need `codim` slots.
///
/// # Safety
/// `m` and `big_m` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn db_table_shifts(
    table: *const DbTable,
    m: *mut i64,
    big_m: *mut i64,
    cap: usize,
) -> DbStatus {
    guard(|| {
        let (lo, hi) = as_ref(table, "table")?.table.shifts();
        copy_out(&lo, m, cap, "m")?;
        copy_out(&hi, big_m, cap, "M")
    })
}

/// Writes the totals `beta_1..beta_c`.
///
/// # Safety
/// `out` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn db_table_totals(
    table: *const DbTable,
    out: *mut u64,
    cap: usize,
) -> DbStatus {
    guard(|| copy_out(&as_ref(table, "table")?.table.totals(), out, cap, "totals"))
}

/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_is_pure(table: *const DbTable, out: *mut bool) -> DbStatus {
    guard(|| {
        *out_ref(out, "out")? = as_ref(table, "table")?.table.is_pure();
        Ok(())
    })
}

/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_table_multiplicity(table: *const DbTable, out: *mut u64) -> DbStatus {
    guard(|| {
        *out_ref(out, "out")? = as_ref(table, "table")?.table.multiplicity()?;
        Ok(())
    })
}

fn give_string(s: String, out: &mut *mut c_char) {
    *out = CString::new(s).expect("JSON has no NUL").into_raw();
}

/// The same JSON object as `detbetti table --format json`.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable. Release the
/// string with `db_string_free`.
#[no_mangle]
pub unsafe extern "C" fn db_table_to_json(
    table: *const DbTable,
    out: *mut *mut c_char,
) -> DbStatus {
    guard(|| {
        let h = as_ref(table, "table")?;
        let out = out_ref(out, "out")?;
        give_string(detbetti::render::to_json(&h.table, &h.notes)?, out);
        Ok(())
    })
}

/// Evaluates every bound against the table.
///
/// # Safety
/// `table` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_check(table: *const DbTable, out: *mut *mut DbReport) -> DbStatus {
    guard(|| {
        let report = check_table(&as_ref(table, "table")?.table)?;
        *out_ref(out, "out")? = Box::into_raw(Box::new(DbReport { report }));
        Ok(())
    })
}

/// # Safety
/// `report` must come from `db_check` or be null.
#[no_mangle]
pub unsafe extern "C" fn db_report_free(report: *mut DbReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Mixed lower, factorial upper, and multiplicity bounds all hold.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_report_all_ok(report: *const DbReport, out: *mut bool) -> DbStatus {
    guard(|| {
        *out_ref(out, "out")? = as_ref(report, "report")?.report.all_ok();
        Ok(())
    })
}

/// Mixed lower and factorial upper bounds are reached at every index.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_report_all_tight(report: *const DbReport, out: *mut bool) -> DbStatus {
    guard(|| {
        *out_ref(out, "out")? = as_ref(report, "report")?.report.all_tight();
        Ok(())
    })
}

/// The same JSON object as `detbetti check`, on one line.
///
/// # Safety
/// `report` must be a live handle; `out` must be writable. Release the
/// string with `db_string_free`.
#[no_mangle]
pub unsafe extern "C" fn db_report_to_json(
    report: *const DbReport,
    out: *mut *mut c_char,
) -> DbStatus {
    guard(|| {
        let r = as_ref(report, "report")?;
        let out = out_ref(out, "out")?;
        give_string(
            serde_json::to_string(&r.report).expect("report serializes"),
            out,
        );
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library or be null.
#[no_mangle]
pub unsafe extern "C" fn db_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn db_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// NUL-terminated library version.
#[no_mangle]
pub extern "C" fn db_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
