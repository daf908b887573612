//! C ABI over the `bier` crate.
//!
//! A complex `Δ` lives behind an opaque `BierDelta` handle. Every call returns a
//! [`BierStatus`]; on failure [`bier_last_error`] describes the cause. Vector
//! outputs use caller buffers: `*len` always receives the full length, and the
//! call fails with `BIER_BUFFER_TOO_SMALL` when `cap` is less than that.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bier::complex::io::parse_complex;
use bier::complex::is_shelling;
use bier::sphere::{add_face_flip, bier_complex, delta_prime, g_bier, shelling_order, sphere_vectors, Delta};
use bier::Error;

/// Opaque handle to a proper ideal `Δ` of the boolean lattice on `[1, n]`.
pub struct BierDelta {
    inner: Delta,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BierStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    BufferTooSmall = 3,
    TooLarge = 4,
    NotAddable = 5,
    Parse = 6,
    Internal = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> BierStatus {
    match e {
        Error::TooLarge(_) => BierStatus::TooLarge,
        Error::NotAddable(..) => BierStatus::NotAddable,
        Error::Parse(_) => BierStatus::Parse,
        _ => BierStatus::InvalidArgument,
    }
}

/// Runs `body`, turning errors and panics into a status plus the thread's last error.
fn guard(body: impl FnOnce() -> Result<(), (BierStatus, String)>) -> BierStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BierStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            BierStatus::Internal
        }
    }
}

fn lib(e: Error) -> (BierStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn handle<'a>(d: *const BierDelta) -> Result<&'a Delta, (BierStatus, String)> {
    d.as_ref().map(|h| &h.inner).ok_or((BierStatus::NullPointer, "null handle".into()))
}

unsafe fn write_out<T: Copy>(values: &[T], out: *mut T, cap: usize, len: *mut usize) -> Result<(), (BierStatus, String)> {
    if len.is_null() {
        return Err((BierStatus::NullPointer, "null length pointer".into()));
    }
    *len = values.len();
    if cap < values.len() {
        return Err((BierStatus::BufferTooSmall, format!("need {} entries, have {cap}", values.len())));
    }
    if !values.is_empty() {
        if out.is_null() {
            return Err((BierStatus::NullPointer, "null output buffer".into()));
        }
        ptr::copy_nonoverlapping(values.as_ptr(), out, values.len());
    }
    Ok(())
}

unsafe fn store(out: *mut *mut BierDelta, delta: Delta) -> Result<(), (BierStatus, String)> {
    if out.is_null() {
        return Err((BierStatus::NullPointer, "null output handle".into()));
    }
    *out = Box::into_raw(Box::new(BierDelta { inner: delta }));
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bier_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// The downward closure of `count` generator masks (bit `v-1` is element `v`).
///
/// # Safety
/// `generators` must point to `count` readable masks; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_delta_new(n: u32, generators: *const u64, count: usize, out: *mut *mut BierDelta) -> BierStatus {
    guard(|| {
        let gens: &[u64] = if count == 0 {
            &[]
        } else if generators.is_null() {
            return Err((BierStatus::NullPointer, "null generator array".into()));
        } else {
            std::slice::from_raw_parts(generators, count)
        };
        let delta = Delta::generated(n as usize, gens.iter().copied()).map_err(lib)?;
        store(out, delta)
    })
}

/// Parses a complex file (one facet per line) on the ground set `[1, n]`.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_delta_parse(n: u32, text: *const c_char, out: *mut *mut BierDelta) -> BierStatus {
    guard(|| {
        if text.is_null() {
            return Err((BierStatus::NullPointer, "null text".into()));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|e| (BierStatus::Parse, e.to_string()))?;
        let k = parse_complex(text).map_err(lib)?;
        store(out, Delta::from_complex(&k, n as usize).map_err(lib)?)
    })
}

/// Releases a handle; NULL is ignored.
///
/// # Safety
/// `d` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn bier_delta_free(d: *mut BierDelta) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bier_delta_n(d: *const BierDelta) -> u32 {
    handle(d).map_or(0, |d| d.n() as u32)
}

/// `f_0..f_n` of `Δ` (`n + 1` entries).
///
/// # Safety
/// `d` must be a live handle; `out` must hold `cap` entries; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_delta_f_vector(d: *const BierDelta, out: *mut i64, cap: usize, len: *mut usize) -> BierStatus {
    guard(|| write_out(&handle(d)?.f_vector(), out, cap, len))
}

/// `g_i = f_i(Δ) - f_{n-i}(Δ)` for `i <= (n-1)/2`.
///
/// # Safety
/// As for [`bier_delta_f_vector`].
#[no_mangle]
pub unsafe extern "C" fn bier_g_vector(d: *const BierDelta, out: *mut i64, cap: usize, len: *mut usize) -> BierStatus {
    guard(|| write_out(&g_bier(handle(d)?), out, cap, len))
}

/// h-vector of the Bier sphere (`n` entries).
///
/// # Safety
/// As for [`bier_delta_f_vector`].
#[no_mangle]
pub unsafe extern "C" fn bier_h_vector(d: *const BierDelta, out: *mut i64, cap: usize, len: *mut usize) -> BierStatus {
    guard(|| write_out(&sphere_vectors(handle(d)?).map_err(lib)?.h, out, cap, len))
}

/// f-vector of the Bier sphere, `f_0` (the empty face) to `f_{n-1}`.
///
/// # Safety
/// As for [`bier_delta_f_vector`].
#[no_mangle]
pub unsafe extern "C" fn bier_sphere_f_vector(d: *const BierDelta, out: *mut i64, cap: usize, len: *mut usize) -> BierStatus {
    guard(|| write_out(&sphere_vectors(handle(d)?).map_err(lib)?.f, out, cap, len))
}

/// Facets `(A; x)` in χ-lex shelling order: `a_out[i]` is the mask of `A`,
/// `x_out[i]` the element `x`.
///
/// # Safety
/// `a_out` and `x_out` must each hold `cap` entries; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_facets(
    d: *const BierDelta,
    a_out: *mut u64,
    x_out: *mut u32,
    cap: usize,
    len: *mut usize,
) -> BierStatus {
    guard(|| {
        let order = shelling_order(handle(d)?);
        let a: Vec<u64> = order.iter().map(|f| f.a).collect();
        let x: Vec<u32> = order.iter().map(|f| f.x as u32).collect();
        write_out(&a, a_out, cap, len)?;
        write_out(&x, x_out, cap, len)
    })
}

/// Whether the χ-lex order is a shelling of the Bier sphere.
///
/// # Safety
/// `d` must be a live handle; `valid` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_shelling_valid(d: *const BierDelta, valid: *mut bool) -> BierStatus {
    guard(|| {
        let delta = handle(d)?;
        if valid.is_null() {
            return Err((BierStatus::NullPointer, "null output".into()));
        }
        let sphere = bier_complex(delta);
        let faces: Vec<u64> = shelling_order(delta).iter().map(|f| sphere.facet_face(f)).collect();
        *valid = is_shelling(sphere.complex(), &faces).map_err(lib)?.valid;
        Ok(())
    })
}

/// The subcomplex `Δ'` as a new handle.
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_delta_prime(d: *const BierDelta, out: *mut *mut BierDelta) -> BierStatus {
    guard(|| store(out, delta_prime(handle(d)?)))
}

/// `Δ ∪ {face}` as a new handle; `index` receives the index of the bistellar
/// flip this induces on the Bier sphere.
///
/// # Safety
/// `d` must be a live handle; `out` and `index` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_add_face(d: *const BierDelta, face: u64, out: *mut *mut BierDelta, index: *mut u32) -> BierStatus {
    guard(|| {
        if index.is_null() {
            return Err((BierStatus::NullPointer, "null index".into()));
        }
        let flip = add_face_flip(handle(d)?, face).map_err(lib)?;
        if !flip.matches_labeled {
            return Err((BierStatus::Internal, "flip output differs from the constructed sphere".into()));
        }
        *index = flip.index as u32;
        store(out, flip.result)
    })
}

/// The Bier sphere as complex-file text; free with [`bier_string_free`].
///
/// # Safety
/// `d` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bier_sphere_text(d: *const BierDelta, out: *mut *mut c_char) -> BierStatus {
    guard(|| {
        if out.is_null() {
            return Err((BierStatus::NullPointer, "null output".into()));
        }
        let text = bier_complex(handle(d)?).to_file();
        *out = CString::new(text).map_err(|e| (BierStatus::Internal, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from [`bier_sphere_text`] and not have been freed; NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn bier_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
