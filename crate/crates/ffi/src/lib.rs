//! C interface to `sgvariety`.
//!
//! Semigroups and automata are handed out as opaque pointers that the caller
//! releases with the matching `*_free`. Every fallible call returns an
//! [`SgvStatus`]; on failure [`sgv_last_error`] describes what went wrong on
//! the calling thread. Strings returned through `out` parameters belong to
//! the caller and go back through [`sgv_string_free`].

use sgvariety::hierarchy::{classify, in_da, in_lm, in_rm, DaRoute};
use sgvariety::lang::{classify_language, Dfa};
use sgvariety::malcev::{sim_d, sim_k};
use sgvariety::omega::IdentitySet;
use sgvariety::semigroup::io::parse_semigroup_file;
use sgvariety::{Budget, Error, FiniteSemigroup};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SgvStatus {
    Ok = 0,
    NullPointer = 1,
    /// Malformed table, text, identity or argument.
    InvalidInput = 2,
    BudgetExceeded = 3,
    /// Any other library error.
    Failed = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SgvSide {
    K = 0,
    D = 1,
}

/// Opaque semigroup handle.
pub struct SgvSemigroup(FiniteSemigroup);

/// Opaque DFA handle.
pub struct SgvDfa(Dfa);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SgvStatus {
    if e.is_budget() {
        SgvStatus::BudgetExceeded
    } else if e.is_input() {
        SgvStatus::InvalidInput
    } else {
        SgvStatus::Failed
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SgvStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SgvStatus::Ok
        }
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("{what} is null"));
            SgvStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            SgvStatus::Panic
        }
    }
}

unsafe fn nonnull<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn out_ref<'a, T>(p: *mut T, what: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(what))
}

unsafe fn utf8<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Lib(Error::InvalidArgument(format!("{what} is not UTF-8"))))
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("JSON has no nul bytes").into_raw()
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn sgv_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds a semigroup from a row-major `order × order` table of 0-based
/// indices. `identity` is the identity element, or negative for none.
///
/// # Safety
/// `table` must point to `order * order` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_semigroup_from_table(
    order: usize,
    table: *const u32,
    identity: i64,
    out: *mut *mut SgvSemigroup,
) -> SgvStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        if table.is_null() {
            return Err(Fail::Null("table"));
        }
        let len = order.checked_mul(order).ok_or(Error::InvalidArgument("order too large".into()))?;
        let cells = std::slice::from_raw_parts(table, len);
        let id = if identity < 0 { None } else { Some(identity as usize) };
        let s = FiniteSemigroup::from_flat(order, cells, id)?;
        *out = Box::into_raw(Box::new(SgvSemigroup(s)));
        Ok(())
    })
}

/// Parses a Cayley-table or transformation-generator file.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_semigroup_from_text(text: *const c_char, out: *mut *mut SgvSemigroup) -> SgvStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let t = utf8(text, "text")?;
        *out = Box::into_raw(Box::new(SgvSemigroup(parse_semigroup_file(t, &Budget::default())?)));
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sgv_semigroup_free(s: *mut SgvSemigroup) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of elements, or 0 for null.
///
/// # Safety
/// `s` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn sgv_semigroup_order(s: *const SgvSemigroup) -> usize {
    s.as_ref().map_or(0, |s| s.0.order())
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_semigroup_product(s: *const SgvSemigroup, a: u32, b: u32, out: *mut u32) -> SgvStatus {
    guard(|| {
        let s = &nonnull(s, "semigroup")?.0;
        let out = out_ref(out, "out")?;
        for x in [a, b] {
            if x as usize >= s.order() {
                return Err(Error::NoSuchElement(x as usize).into());
            }
        }
        *out = s.mul(a as usize, b as usize) as u32;
        Ok(())
    })
}

/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_in_da(s: *const SgvSemigroup, out: *mut bool) -> SgvStatus {
    guard(|| {
        let s = &nonnull(s, "semigroup")?.0;
        *out_ref(out, "out")? = in_da(s, DaRoute::Regular)?;
        Ok(())
    })
}

/// Membership in `R_m`, `m ≥ 1`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_in_rm(s: *const SgvSemigroup, m: usize, out: *mut bool) -> SgvStatus {
    guard(|| {
        let s = &nonnull(s, "semigroup")?.0;
        *out_ref(out, "out")? = in_rm(s, m)?;
        Ok(())
    })
}

/// Membership in `L_m`, `m ≥ 1`.
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_in_lm(s: *const SgvSemigroup, m: usize, out: *mut bool) -> SgvStatus {
    guard(|| {
        let s = &nonnull(s, "semigroup")?.0;
        *out_ref(out, "out")? = in_lm(s, m)?;
        Ok(())
    })
}

/// Quotient by `~K` or `~D`. If `projection` is non-null it receives the
/// class of each element (`order` entries).
///
/// # Safety
/// `s` must be a live handle, `out` writable, and `projection` null or
/// writable for `sgv_semigroup_order(s)` values.
#[no_mangle]
pub unsafe extern "C" fn sgv_quotient(
    s: *const SgvSemigroup,
    side: SgvSide,
    out: *mut *mut SgvSemigroup,
    projection: *mut u32,
) -> SgvStatus {
    guard(|| {
        let s = &nonnull(s, "semigroup")?.0;
        let out = out_ref(out, "out")?;
        let c = match side {
            SgvSide::K => sim_k(s)?,
            SgvSide::D => sim_d(s)?,
        };
        let (q, proj) = s.quotient(&c)?;
        if !projection.is_null() {
            let dst = std::slice::from_raw_parts_mut(projection, proj.len());
            for (d, &p) in dst.iter_mut().zip(&proj) {
                *d = p as u32;
            }
        }
        *out = Box::into_raw(Box::new(SgvSemigroup(q)));
        Ok(())
    })
}

/// Checks identities (one per line, `lhs = rhs`) over all assignments.
///
/// # Safety
/// `s` must be a live handle, `identity` nul-terminated, `holds` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_check_identity(
    s: *const SgvSemigroup,
    identity: *const c_char,
    holds: *mut bool,
) -> SgvStatus {
    guard(|| {
        let s = &nonnull(s, "semigroup")?.0;
        let set = IdentitySet::parse(utf8(identity, "identity")?)?;
        *out_ref(holds, "holds")? = set.satisfied_by(s, &Budget::default())?;
        Ok(())
    })
}

/// Hierarchy report as JSON; free the result with [`sgv_string_free`].
///
/// # Safety
/// `s` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_classify_json(s: *const SgvSemigroup, max_m: usize, out: *mut *mut c_char) -> SgvStatus {
    guard(|| {
        let s = &nonnull(s, "semigroup")?.0;
        let out = out_ref(out, "out")?;
        let report = classify(s, max_m)?;
        *out = into_c_string(serde_json::to_string(&report).expect("serialisable"));
        Ok(())
    })
}

/// # Safety
/// `p` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn sgv_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Parses a DFA in the text format (`alphabet`, `states`, `initial`,
/// `accepting`, then `p a q` lines).
///
/// # Safety
/// `text` must be nul-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_dfa_from_text(text: *const c_char, out: *mut *mut SgvDfa) -> SgvStatus {
    guard(|| {
        let out = out_ref(out, "out")?;
        let d = Dfa::parse(utf8(text, "text")?)?;
        *out = Box::into_raw(Box::new(SgvDfa(d)));
        Ok(())
    })
}

/// # Safety
/// `d` must come from this library and not have been freed; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sgv_dfa_free(d: *mut SgvDfa) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Language report (syntactic monoid and hierarchy levels) as JSON.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn sgv_classify_language_json(d: *const SgvDfa, max_m: usize, out: *mut *mut c_char) -> SgvStatus {
    guard(|| {
        let d = &nonnull(d, "dfa")?.0;
        let out = out_ref(out, "out")?;
        let report = classify_language(d, max_m, &Budget::default())?;
        *out = into_c_string(serde_json::to_string(&report).expect("serialisable"));
        Ok(())
    })
}
