//! C interface to `dproj`.
//!
//! Rings and atlases are opaque handles owned by the caller and released with the
//! matching `_free` function. Every fallible call returns a [`DprojStatus`]; on failure
//! the message is available from [`dproj_last_error`] on the same thread. Strings
//! returned through out-parameters are released with [`dproj_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dproj::cli::report;
use dproj::proj::{self, ProjAtlas};
use dproj::{relevance, Error, GradedRing, SolverBudget};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DprojStatus {
    Ok = 0,
    InvalidInput = 1,
    Syntax = 2,
    Precondition = 3,
    Domain = 4,
    ResourceLimit = 5,
    Internal = 6,
    NullPointer = 7,
    OutOfRange = 8,
    Panic = 9,
}

pub struct DprojRing {
    ring: GradedRing,
}

pub struct DprojAtlas {
    atlas: ProjAtlas,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn status_of(err: &Error) -> DprojStatus {
    match err {
        Error::InvalidInput(_) => DprojStatus::InvalidInput,
        Error::Syntax { .. } => DprojStatus::Syntax,
        Error::Precondition(_) => DprojStatus::Precondition,
        Error::Domain(_) => DprojStatus::Domain,
        Error::ResourceLimit { .. } => DprojStatus::ResourceLimit,
        Error::Internal(_) => DprojStatus::Internal,
    }
}

/// Runs `f`, recording any error or panic as the thread's last error.
fn guard(f: impl FnOnce() -> Result<(), DprojStatus>) -> DprojStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DprojStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("panic inside dproj");
            DprojStatus::Panic
        }
    }
}

fn fail(err: Error) -> DprojStatus {
    set_error(err.to_string());
    status_of(&err)
}

fn null(what: &str) -> DprojStatus {
    set_error(format!("{what} is NULL"));
    DprojStatus::NullPointer
}

fn to_c_string(s: String) -> Result<*mut c_char, DprojStatus> {
    CString::new(s).map(CString::into_raw).map_err(|_| {
        set_error("output contains a NUL byte");
        DprojStatus::Internal
    })
}

/// Parses a ring spec given as JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_ring_from_json(json: *const c_char, out: *mut *mut DprojRing) -> DprojStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| {
            set_error(format!("ring spec is not UTF-8: {e}"));
            DprojStatus::InvalidInput
        })?;
        let ring = dproj::cli::parse_ring_spec(text).map_err(fail)?;
        *out = Box::into_raw(Box::new(DprojRing { ring }));
        Ok(())
    })
}

/// # Safety
/// `ring` must be NULL or a handle from [`dproj_ring_from_json`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dproj_ring_free(ring: *mut DprojRing) {
    if !ring.is_null() {
        drop(Box::from_raw(ring));
    }
}

/// # Safety
/// `ring` must be a live ring handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_ring_is_effective(ring: *const DprojRing, out: *mut bool) -> DprojStatus {
    guard(|| {
        let ring = ring.as_ref().ok_or_else(|| null("ring"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ring.ring.effective();
        Ok(())
    })
}

/// The monomic relevant generators of `S+` as a JSON array of strings.
///
/// # Safety
/// `ring` must be a live ring handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_gens_json(ring: *const DprojRing, out: *mut *mut c_char) -> DprojStatus {
    guard(|| {
        let ring = ring.as_ref().ok_or_else(|| null("ring"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let gens = relevance::monomic_generators(&ring.ring).map_err(fail)?;
        *out = to_c_string(report::to_json(&report::monomial_list(&ring.ring, &gens)))?;
        Ok(())
    })
}

/// Builds the chart atlas. A `budget` of 0 selects the default step budget.
///
/// # Safety
/// `ring` must be a live ring handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_atlas_build(
    ring: *const DprojRing,
    budget: u64,
    out: *mut *mut DprojAtlas,
) -> DprojStatus {
    guard(|| {
        let ring = ring.as_ref().ok_or_else(|| null("ring"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let budget = if budget == 0 {
            SolverBudget::default()
        } else {
            SolverBudget::new(budget)
        };
        let atlas = proj::build_atlas(&ring.ring, &budget).map_err(fail)?;
        *out = Box::into_raw(Box::new(DprojAtlas { atlas }));
        Ok(())
    })
}

/// # Safety
/// `atlas` must be NULL or a handle from [`dproj_atlas_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dproj_atlas_free(atlas: *mut DprojAtlas) {
    if !atlas.is_null() {
        drop(Box::from_raw(atlas));
    }
}

/// Number of charts; 0 for a NULL handle.
///
/// # Safety
/// `atlas` must be NULL or a live atlas handle.
#[no_mangle]
pub unsafe extern "C" fn dproj_atlas_chart_count(atlas: *const DprojAtlas) -> usize {
    atlas.as_ref().map_or(0, |a| a.atlas.charts.len())
}

unsafe fn chart_at<'a>(atlas: *const DprojAtlas, index: usize) -> Result<&'a proj::Chart, DprojStatus> {
    let atlas = atlas.as_ref().ok_or_else(|| null("atlas"))?;
    atlas.atlas.charts.get(index).ok_or_else(|| {
        set_error(format!("chart {index} of {}", atlas.atlas.charts.len()));
        DprojStatus::OutOfRange
    })
}

/// # Safety
/// `atlas` must be a live atlas handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_atlas_chart_dimension(
    atlas: *const DprojAtlas,
    index: usize,
    out: *mut usize,
) -> DprojStatus {
    guard(|| {
        let chart = chart_at(atlas, index)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = chart.dimension;
        Ok(())
    })
}

/// The chart's monomial `f`, e.g. `x*y`.
///
/// # Safety
/// `atlas` must be a live atlas handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_atlas_chart_monomial(
    atlas: *const DprojAtlas,
    index: usize,
    out: *mut *mut c_char,
) -> DprojStatus {
    guard(|| {
        let chart = chart_at(atlas, index)?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = to_c_string((*atlas).atlas.ring.render_monomial(&chart.f))?;
        Ok(())
    })
}

/// Generators of `S_(f)` joined by `", "`; empty for a zero-dimensional chart.
///
/// # Safety
/// `atlas` must be a live atlas handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_atlas_chart_generators(
    atlas: *const DprojAtlas,
    index: usize,
    out: *mut *mut c_char,
) -> DprojStatus {
    guard(|| {
        let chart = chart_at(atlas, index)?;
        if out.is_null() {
            return Err(null("out"));
        }
        let ring = &(*atlas).atlas.ring;
        let gens: Vec<String> = chart.generators.iter().map(|g| g.render(ring)).collect();
        *out = to_c_string(gens.join(", "))?;
        Ok(())
    })
}

/// # Safety
/// `atlas` must be a live atlas handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn dproj_atlas_to_json(atlas: *const DprojAtlas, out: *mut *mut c_char) -> DprojStatus {
    guard(|| {
        let atlas = atlas.as_ref().ok_or_else(|| null("atlas"))?;
        if out.is_null() {
            return Err(null("out"));
        }
        let json = report::atlas_json(&atlas.atlas).map_err(fail)?;
        *out = to_c_string(report::to_json(&json))?;
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn dproj_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The message of the last failed call on this thread, or NULL. The pointer is
/// valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn dproj_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
