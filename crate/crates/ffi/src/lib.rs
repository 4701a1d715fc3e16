//! C ABI over `dyck-poset`.
//!
//! A poset is built once with [`dyck_poset_new`] and queried through the
//! opaque [`DyckPoset`] handle. Every fallible call returns a [`DyckStatus`];
//! on failure, [`dyck_last_error`] describes what went wrong on the calling
//! thread. Big integers and polynomials come back as NUL-terminated decimal
//! or text strings that the caller releases with [`dyck_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dyck_poset::catalan::catalan_closed;
use dyck_poset::chromatic::{chromatic_polynomial, hasse_graph};
use dyck_poset::incidence::{chain_polynomial, interval_count, maximal_chain_count, total_chains};
use dyck_poset::poset::CensusMode;
use dyck_poset::qt::qt_catalan;
use dyck_poset::{DyckPath, Error, Limits, Poset};

/// Status returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyckStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    LimitExceeded = 3,
    /// Two independent computations disagreed.
    Mismatch = 4,
    Internal = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyckAntichainMode {
    All = 0,
    Maximal = 1,
    Maximum = 2,
}

/// Opaque handle to the poset of Dyck paths of one order.
pub struct DyckPoset {
    poset: Poset,
    limits: Limits,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> DyckStatus {
    match e {
        _ if e.is_limit() => DyckStatus::LimitExceeded,
        Error::RouteMismatch { .. } => DyckStatus::Mismatch,
        Error::NotUnitriangular | Error::InexactDivision | Error::PoleDetected(_) => DyckStatus::Internal,
        _ => DyckStatus::InvalidArgument,
    }
}

/// Runs `f`, turning errors and panics into a status plus a stored message.
fn guard(f: impl FnOnce() -> Result<(), (DyckStatus, String)>) -> DyckStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            DyckStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".to_string());
            DyckStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (DyckStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (DyckStatus, String) {
    (DyckStatus::NullPointer, format!("{what} is null"))
}

unsafe fn handle<'a>(p: *const DyckPoset) -> Result<&'a DyckPoset, (DyckStatus, String)> {
    // SAFETY: the caller passes null or a live handle from dyck_poset_new.
    unsafe { p.as_ref() }.ok_or_else(|| null("poset handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), (DyckStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    // SAFETY: non-null and, per the caller contract, valid for writes.
    unsafe { out.write(value) };
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (DyckStatus, String)> {
    let c = CString::new(s).map_err(|_| (DyckStatus::Internal, "string contains NUL".to_string()))?;
    // SAFETY: forwarded caller contract.
    unsafe { write_out(out, c.into_raw()) }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, (DyckStatus, String)> {
    if s.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and, per the caller contract, NUL-terminated.
    unsafe { CStr::from_ptr(s) }
        .to_str()
        .map_err(|_| (DyckStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

fn check_index(h: &DyckPoset, i: usize) -> Result<(), (DyckStatus, String)> {
    if i < h.poset.len() {
        Ok(())
    } else {
        Err((
            DyckStatus::InvalidArgument,
            format!("index {i} out of range for {} elements", h.poset.len()),
        ))
    }
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn dyck_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn dyck_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: produced by CString::into_raw in write_string.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Builds `D_n` under the default limits (overridable through `DYCK_MAX_N`).
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_new(n: usize, out: *mut *mut DyckPoset) -> DyckStatus {
    guard(|| {
        let limits = Limits::from_env();
        let poset = Poset::build(n, &limits).map_err(lib_err)?;
        let boxed = Box::into_raw(Box::new(DyckPoset { poset, limits }));
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, boxed) }.inspect_err(|_| {
            // SAFETY: just allocated above and never shared.
            drop(unsafe { Box::from_raw(boxed) });
        })
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle from [`dyck_poset_new`], freed once.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_free(p: *mut DyckPoset) {
    if !p.is_null() {
        // SAFETY: produced by Box::into_raw in dyck_poset_new.
        drop(unsafe { Box::from_raw(p) });
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_len(p: *const DyckPoset) -> usize {
    // SAFETY: forwarded caller contract.
    unsafe { p.as_ref() }.map_or(0, |h| h.poset.len())
}

/// The `i`-th element in canonical order as an `N`/`E` word.
///
/// # Safety
/// `p` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_element(p: *const DyckPoset, i: usize, out: *mut *mut c_char) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        check_index(h, i)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_string(out, h.poset.elements()[i].to_string()) }
    })
}

/// Canonical index of the path spelled by `path`.
///
/// # Safety
/// `p` must be a live handle, `path` a NUL-terminated string and `out`
/// valid for a write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_index_of(p: *const DyckPoset, path: *const c_char, out: *mut usize) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        // SAFETY: forwarded caller contract.
        let text = unsafe { read_str(path, "path") }?;
        let d: DyckPath = text.parse().map_err(lib_err)?;
        let i = h.poset.index_of(&d).ok_or_else(|| {
            (
                DyckStatus::InvalidArgument,
                format!("{d} is not of order {}", h.poset.order()),
            )
        })?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, i) }
    })
}

/// Whether element `i` lies weakly below element `j`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_leq(p: *const DyckPoset, i: usize, j: usize, out: *mut bool) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        check_index(h, i)?;
        check_index(h, j)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, h.poset.leq(i, j)) }
    })
}

/// Möbius value `mu(i, j)`, read off the point-poset ideals.
///
/// # Safety
/// `p` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_mobius(p: *const DyckPoset, i: usize, j: usize, out: *mut i32) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        check_index(h, i)?;
        check_index(h, j)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, i32::from(h.poset.mobius_direct(i, j).value)) }
    })
}

/// Which count a poset query returns.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DyckCount {
    /// Pairs `x <= y`.
    Intervals = 0,
    /// Chains, the empty one included.
    TotalChains = 1,
    MaximalChains = 2,
}

/// One of the [`DyckCount`] quantities as a decimal string.
///
/// # Safety
/// `p` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_count(p: *const DyckPoset, what: DyckCount, out: *mut *mut c_char) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        let value = match what {
            DyckCount::Intervals => interval_count(&h.poset),
            DyckCount::TotalChains => total_chains(&h.poset).map_err(lib_err)?,
            DyckCount::MaximalChains => maximal_chain_count(&h.poset).map_err(lib_err)?,
        };
        // SAFETY: forwarded caller contract.
        unsafe { write_string(out, value.to_string()) }
    })
}

/// Antichain count in the given mode as a decimal string; `largest`, if
/// non-null, receives the size of the largest antichain counted.
///
/// # Safety
/// `p` must be a live handle, `out` valid for a pointer write and `largest`
/// null or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_antichains(
    p: *const DyckPoset,
    mode: DyckAntichainMode,
    out: *mut *mut c_char,
    largest: *mut usize,
) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        let mode = match mode {
            DyckAntichainMode::All => CensusMode::All,
            DyckAntichainMode::Maximal => CensusMode::Maximal,
            DyckAntichainMode::Maximum => CensusMode::Maximum,
        };
        let census = h.poset.antichain_census(mode, &h.limits).map_err(lib_err)?;
        if !largest.is_null() {
            // SAFETY: non-null and valid per the caller contract.
            unsafe { largest.write(census.largest) };
        }
        // SAFETY: forwarded caller contract.
        unsafe { write_string(out, census.total.to_string()) }
    })
}

/// Chain polynomial in `t`, e.g. `2t^4 + 7t^3 + 9t^2 + 5t + 1`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_chain_polynomial(p: *const DyckPoset, out: *mut *mut c_char) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        // SAFETY: forwarded caller contract.
        unsafe { write_string(out, chain_polynomial(&h.poset).to_string()) }
    })
}

/// Chromatic polynomial in `t` of the Hasse diagram.
///
/// # Safety
/// `p` must be a live handle and `out` valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn dyck_poset_chromatic(p: *const DyckPoset, out: *mut *mut c_char) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let h = unsafe { handle(p) }?;
        let poly = chromatic_polynomial(&hasse_graph(&h.poset)).map_err(lib_err)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_string(out, poly.to_string()) }
    })
}

/// Catalan number `C_n` as a decimal string.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn dyck_catalan(n: usize, out: *mut *mut c_char) -> DyckStatus {
    // SAFETY: forwarded caller contract.
    guard(|| unsafe { write_string(out, catalan_closed(n).to_string()) })
}

/// The q,t-Catalan polynomial of order `n` as text.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn dyck_qt_catalan(n: usize, out: *mut *mut c_char) -> DyckStatus {
    guard(|| {
        let poly = qt_catalan(n, &Limits::from_env()).map_err(lib_err)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_string(out, poly.to_string()) }
    })
}

/// Whether the path `lower` lies weakly below the path `upper`.
///
/// # Safety
/// Both strings must be NUL-terminated and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn dyck_is_below(lower: *const c_char, upper: *const c_char, out: *mut bool) -> DyckStatus {
    guard(|| {
        // SAFETY: forwarded caller contract.
        let (a, b) = unsafe { (read_str(lower, "lower")?, read_str(upper, "upper")?) };
        let a: DyckPath = a.parse().map_err(lib_err)?;
        let b: DyckPath = b.parse().map_err(lib_err)?;
        let below = a.is_below(&b).map_err(lib_err)?;
        // SAFETY: forwarded caller contract.
        unsafe { write_out(out, below) }
    })
}
