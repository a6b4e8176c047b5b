//! C ABI over `polyomino-core`.
//!
//! Collections live behind an opaque [`PolyominoCells`] handle. Every call returns a
//! [`PolyominoStatus`]; on failure [`polyomino_last_error`] describes the error for the
//! calling thread. Strings and sequences handed out must be released with
//! [`polyomino_string_free`] and [`polyomino_seq_free`].

use polyomino_core::algebra::text::format_generators;
use polyomino_core::algebra::{groebner_basis, GbOptions};
use polyomino_core::error::Error;
use polyomino_core::grid::{format_cells, parse_cells, CellCollection};
use polyomino_core::ideals::{default_ring, inner_minor_ideal, is_prime, PrimeOptions, PrimeStatus};
use polyomino_core::invariants::default_hilbert_data;
use polyomino_core::rook::{rook_polynomial, switching_rook_polynomial};
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyominoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Budget = 4,
    Domain = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyominoPrimality {
    NotPrime = 0,
    Prime = 1,
    Indeterminate = 2,
}

/// Opaque cell collection.
pub struct PolyominoCells(CellCollection);

/// Owned integer sequence; coefficient `k` of a polynomial sits at `data[k]`.
#[repr(C)]
pub struct PolyominoSeq {
    pub data: *mut i64,
    pub len: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> PolyominoStatus {
    match e {
        Error::Parse(_) => PolyominoStatus::Parse,
        e if e.is_budget() => PolyominoStatus::Budget,
        _ => PolyominoStatus::Domain,
    }
}

// Runs `f`, mapping errors and panics to a status and recording the message.
fn guard(f: impl FnOnce() -> Result<(), (PolyominoStatus, String)>) -> PolyominoStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PolyominoStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PolyominoStatus::Panic
        }
    }
}

fn core(e: Error) -> (PolyominoStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (PolyominoStatus, String) {
    (PolyominoStatus::NullPointer, "null pointer argument".into())
}

unsafe fn cells<'a>(h: *const PolyominoCells) -> Result<&'a CellCollection, (PolyominoStatus, String)> {
    h.as_ref().map(|c| &c.0).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, v: T) -> Result<(), (PolyominoStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(v);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("library text has no nul bytes").into_raw()
}

fn into_seq(v: Vec<i64>) -> PolyominoSeq {
    let mut b = v.into_boxed_slice();
    let seq = PolyominoSeq { data: b.as_mut_ptr(), len: b.len() };
    std::mem::forget(b);
    seq
}

/// Message of the last failed call on this thread, or null. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn polyomino_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses `{{i,j},...}` or a JSON cell list into a new handle.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polyomino_cells_parse(text: *const c_char, out: *mut *mut PolyominoCells) -> PolyominoStatus {
    guard(|| {
        if text.is_null() {
            return Err(null());
        }
        let s = CStr::from_ptr(text).to_str().map_err(|e| (PolyominoStatus::InvalidUtf8, e.to_string()))?;
        let p = parse_cells(s).map_err(core)?;
        write(out, Box::into_raw(Box::new(PolyominoCells(p))))
    })
}

/// # Safety
/// `h` must come from [`polyomino_cells_parse`] and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn polyomino_cells_free(h: *mut PolyominoCells) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polyomino_cells_rank(h: *const PolyominoCells, out: *mut usize) -> PolyominoStatus {
    guard(|| write(out, cells(h)?.rank()))
}

/// Canonical `{{i,j},...}` text of the collection.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polyomino_cells_format(h: *const PolyominoCells, out: *mut *mut c_char) -> PolyominoStatus {
    guard(|| write(out, into_c_string(format_cells(cells(h)?))))
}

/// Inner 2-minors, one per line.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polyomino_ideal(h: *const PolyominoCells, out: *mut *mut c_char) -> PolyominoStatus {
    guard(|| {
        let p = cells(h)?;
        let r = default_ring(p);
        let lines = format_generators(&r, &inner_minor_ideal(&r, p).map_err(core)?);
        write(out, into_c_string(lines.join("\n")))
    })
}

/// Reduced Gröbner basis of the inner 2-minor ideal, one element per line.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polyomino_groebner(
    h: *const PolyominoCells,
    max_pairs: u64,
    out: *mut *mut c_char,
) -> PolyominoStatus {
    guard(|| {
        let p = cells(h)?;
        let r = default_ring(p);
        let gens = inner_minor_ideal(&r, p).map_err(core)?;
        let gb = groebner_basis(&r, &gens, &GbOptions::with_budget(max_pairs)).map_err(core)?;
        let lines = format_generators(&r, gb.gens());
        write(out, into_c_string(lines.join("\n")))
    })
}

/// h-polynomial and Krull dimension of the coordinate ring.
///
/// # Safety
/// `h` must be a live handle; `out` and `krull_dim` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn polyomino_h_polynomial(
    h: *const PolyominoCells,
    out: *mut PolyominoSeq,
    krull_dim: *mut usize,
) -> PolyominoStatus {
    guard(|| {
        if krull_dim.is_null() || out.is_null() {
            return Err(null());
        }
        let d = default_hilbert_data(cells(h)?, &GbOptions::default()).map_err(core)?;
        write(krull_dim, d.dim)?;
        write(out, into_seq(d.h))
    })
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polyomino_rook_polynomial(
    h: *const PolyominoCells,
    out: *mut PolyominoSeq,
) -> PolyominoStatus {
    guard(|| {
        let r = rook_polynomial(cells(h)?).map_err(core)?;
        write(out, into_seq(r.into_iter().map(|c| c as i64).collect()))
    })
}

/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn polyomino_switching_rook_polynomial(
    h: *const PolyominoCells,
    out: *mut PolyominoSeq,
) -> PolyominoStatus {
    guard(|| {
        let r = switching_rook_polynomial(cells(h)?).map_err(core)?;
        write(out, into_seq(r.into_iter().map(|c| c as i64).collect()))
    })
}

/// Primality of the inner 2-minor ideal; `certificate` (may be null) receives the certificate name.
///
/// # Safety
/// `h` must be a live handle, `out` a valid pointer, `certificate` valid or null.
#[no_mangle]
pub unsafe extern "C" fn polyomino_is_prime(
    h: *const PolyominoCells,
    out: *mut PolyominoPrimality,
    certificate: *mut *mut c_char,
) -> PolyominoStatus {
    guard(|| {
        let v = is_prime(cells(h)?, &PrimeOptions::default()).map_err(core)?;
        let status = match v.status {
            PrimeStatus::Prime => PolyominoPrimality::Prime,
            PrimeStatus::NotPrime => PolyominoPrimality::NotPrime,
            PrimeStatus::Indeterminate => PolyominoPrimality::Indeterminate,
        };
        if !certificate.is_null() {
            certificate.write(into_c_string(v.certificate.name().to_string()));
        }
        write(out, status)
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn polyomino_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `seq` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn polyomino_seq_free(seq: PolyominoSeq) {
    if !seq.data.is_null() {
        drop(Box::from_raw(ptr::slice_from_raw_parts_mut(seq.data, seq.len)));
    }
}
