//! C interface to `wreath-specht`.
//!
//! Partitions and multipartitions are passed as JSON arrays in NUL-terminated
//! UTF-8 strings (`"[2,1]"`, `"[[2],[1,1],[]]"`). Every fallible function
//! returns a [`WsStatus`]; on failure a description is available from
//! [`ws_last_error_message`] on the same thread. Strings returned by this
//! library must be released with [`ws_string_free`], map handles with
//! [`ws_map_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wreath_specht::branching::{BranchDocument, BranchRule};
use wreath_specht::notation::{parse_multipartition, parse_partition, parse_partition_list};
use wreath_specht::{Error, Multipartition};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidInput = 4,
    SizeMismatch = 5,
    Overflow = 6,
    OutOfRange = 7,
    Panic = 8,
}

impl From<&Error> for WsStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => WsStatus::ParseError,
            Error::SizeMismatch(_) | Error::DegreeMismatch { .. } | Error::ComponentMismatch { .. } => {
                WsStatus::SizeMismatch
            }
            Error::Overflow(_) => WsStatus::Overflow,
            Error::OracleBoundExceeded { .. } => WsStatus::OutOfRange,
            _ => WsStatus::InvalidInput,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(WsStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(WsStatus::from(&e), format!("{} ({})", e, e.code()))
    }
}

/// Runs `body`, recording any failure or panic as the thread's last error.
fn guard<F: FnOnce() -> Result<(), Failure>>(body: F) -> WsStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => WsStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            WsStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(WsStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `s` must be null or point to a NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and NUL-terminated by the caller's contract.
    unsafe { CStr::from_ptr(s) }.to_str().map_err(|_| Failure(WsStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    // SAFETY: non-null and writable by the caller's contract.
    unsafe { out.write(value) };
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library output has no NULs").into_raw()
}

/// A branching result: multiplicities indexed by multipartitions, listed in
/// descending lexicographic order of their flattened parts.
pub struct WsMultiplicityMap {
    m: usize,
    rule: BranchRule,
    lambda: Multipartition,
    map: wreath_specht::MultiplicityMap,
    entries: Vec<(Multipartition, u64)>,
}

impl WsMultiplicityMap {
    fn new(m: usize, rule: BranchRule, lambda: Multipartition, map: wreath_specht::MultiplicityMap) -> Self {
        let entries = map.sorted_entries().into_iter().map(|(k, v)| (k.clone(), v)).collect();
        WsMultiplicityMap { m, rule, lambda, map, entries }
    }
}

/// Message describing the last failure on this thread, or null if the last
/// call succeeded. The caller owns the returned string.
#[no_mangle]
pub extern "C" fn ws_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |c| c.clone().into_raw()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ws_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: allocated by `CString::into_raw` in this library.
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Dimension of the Specht module of a partition.
///
/// # Safety
/// `partition` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_specht_dimension(partition: *const c_char, out: *mut u64) -> WsStatus {
    guard(|| {
        let p = parse_partition(unsafe { read_str(partition, "partition")? })?;
        let d = p.specht_dimension()?;
        unsafe { write_out(out, d, "out") }
    })
}

/// Littlewood-Richardson coefficient `c^lambda_{alpha,beta}`.
///
/// # Safety
/// The strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_lr_coefficient(
    lambda: *const c_char,
    alpha: *const c_char,
    beta: *const c_char,
    out: *mut u64,
) -> WsStatus {
    guard(|| {
        let l = parse_partition(unsafe { read_str(lambda, "lambda")? })?;
        let a = parse_partition(unsafe { read_str(alpha, "alpha")? })?;
        let b = parse_partition(unsafe { read_str(beta, "beta")? })?;
        unsafe { write_out(out, wreath_specht::lr_coefficient(&l, &a, &b), "out") }
    })
}

/// Generalized coefficient `c(lambda; parts)`, with `parts` a `;`-separated
/// list of partitions such as `"[2,1];[1]"`.
///
/// # Safety
/// The strings must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_lr_multi(lambda: *const c_char, parts: *const c_char, out: *mut u64) -> WsStatus {
    guard(|| {
        let l = parse_partition(unsafe { read_str(lambda, "lambda")? })?;
        let ps = parse_partition_list(unsafe { read_str(parts, "parts")? })?;
        let c = wreath_specht::lr_multi(&l, &ps)?;
        unsafe { write_out(out, c, "out") }
    })
}

/// Dimension of the Specht module of `S_m wr S_n` indexed by `lambda`.
///
/// # Safety
/// `lambda` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_wreath_dimension(m: usize, lambda: *const c_char, out: *mut u64) -> WsStatus {
    guard(|| {
        let l = parse_multipartition(unsafe { read_str(lambda, "lambda")? })?;
        let d = wreath_specht::wreath_specht_dimension(m, &l)?;
        unsafe { write_out(out, d, "out") }
    })
}

unsafe fn branch(m: usize, lambda: *const c_char, out: *mut *mut WsMultiplicityMap, rule: BranchRule) -> WsStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let l = parse_multipartition(unsafe { read_str(lambda, "lambda")? })?;
        let map = match rule {
            BranchRule::First => wreath_specht::branch_first(m, &l)?,
            BranchRule::Second => wreath_specht::branch_second(m, &l)?,
        };
        let handle = Box::into_raw(Box::new(WsMultiplicityMap::new(m, rule, l, map)));
        unsafe { write_out(out, handle, "out") }
    })
}

/// Restriction from `S_m wr S_n` to `S_{m-1} wr S_n`. On success `*out`
/// holds a new handle.
///
/// # Safety
/// `lambda` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_branch_first(
    m: usize,
    lambda: *const c_char,
    out: *mut *mut WsMultiplicityMap,
) -> WsStatus {
    unsafe { branch(m, lambda, out, BranchRule::First) }
}

/// Restriction from `S_m wr S_n` to `S_m wr S_{n-1}`. On success `*out`
/// holds a new handle.
///
/// # Safety
/// `lambda` must be NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_branch_second(
    m: usize,
    lambda: *const c_char,
    out: *mut *mut WsMultiplicityMap,
) -> WsStatus {
    unsafe { branch(m, lambda, out, BranchRule::Second) }
}

/// # Safety
/// `map` must be null or a live handle.
unsafe fn handle<'a>(map: *const WsMultiplicityMap) -> Result<&'a WsMultiplicityMap, Failure> {
    // SAFETY: live handle by the caller's contract.
    unsafe { map.as_ref() }.ok_or_else(|| null("map"))
}

/// Number of entries with non-zero multiplicity; 0 for a null handle.
///
/// # Safety
/// `map` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ws_map_len(map: *const WsMultiplicityMap) -> usize {
    unsafe { map.as_ref() }.map_or(0, |m| m.entries.len())
}

fn entry(map: &WsMultiplicityMap, index: usize) -> Result<&(Multipartition, u64), Failure> {
    map.entries.get(index).ok_or_else(|| {
        Failure(WsStatus::OutOfRange, format!("index {index} out of range for {} entries", map.entries.len()))
    })
}

/// Multiplicity of entry `index`.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_map_multiplicity(map: *const WsMultiplicityMap, index: usize, out: *mut u64) -> WsStatus {
    guard(|| {
        let (_, mult) = entry(unsafe { handle(map)? }, index)?;
        unsafe { write_out(out, *mult, "out") }
    })
}

/// Multipartition of entry `index` as JSON. The caller owns `*out`.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_map_key_json(
    map: *const WsMultiplicityMap,
    index: usize,
    out: *mut *mut c_char,
) -> WsStatus {
    guard(|| {
        let (key, _) = entry(unsafe { handle(map)? }, index)?;
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { write_out(out, into_c_string(key.to_string()), "out") }
    })
}

/// Multiplicity of the multipartition `nu` (JSON), zero if absent.
///
/// # Safety
/// `map` must be a live handle, `nu` NUL-terminated, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ws_map_get(map: *const WsMultiplicityMap, nu: *const c_char, out: *mut u64) -> WsStatus {
    guard(|| {
        let h = unsafe { handle(map)? };
        let key = parse_multipartition(unsafe { read_str(nu, "nu")? })?;
        unsafe { write_out(out, h.map.get(&key), "out") }
    })
}

/// The whole result as a JSON document with fields `m`, `n`, `rule`,
/// `lambda` and `multiplicities`. The caller owns `*out`.
///
/// # Safety
/// `map` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ws_map_to_json(map: *const WsMultiplicityMap, out: *mut *mut c_char) -> WsStatus {
    guard(|| {
        let h = unsafe { handle(map)? };
        if out.is_null() {
            return Err(null("out"));
        }
        let doc = BranchDocument::new(h.m, h.rule, &h.lambda, &h.map).to_json();
        unsafe { write_out(out, into_c_string(doc), "out") }
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `map` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ws_map_free(map: *mut WsMultiplicityMap) {
    if !map.is_null() {
        // SAFETY: allocated by `Box::into_raw` in `branch`.
        drop(unsafe { Box::from_raw(map) });
    }
}
