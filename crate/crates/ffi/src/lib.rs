//! C ABI over the `sturmian` crate.
//!
//! Words and braids cross the boundary as opaque handles created by the
//! `*_parse` functions and released with the matching `*_free`. Every
//! fallible call returns a [`SturmianStatus`]; on failure the message is
//! available from [`sturmian_last_error_message`] until the next failing
//! call on the same thread. Strings returned through out-parameters are
//! owned by the caller and released with [`sturmian_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use sturmian::braids::{BraidGroup, BraidWord, ExtBraidElement};
use sturmian::{chains, christoffel, Error, FreeWord};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SturmianStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Precondition = 4,
    NotBasis = 5,
    NotCoprime = 6,
    Internal = 7,
}

/// Opaque reduced word of F2.
pub struct SturmianWord {
    word: FreeWord,
}

/// Opaque word of the braid group B4.
pub struct SturmianBraid {
    braid: BraidWord,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(status: SturmianStatus, message: impl Into<String>) -> SturmianStatus {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

fn from_error(e: Error) -> SturmianStatus {
    let status = match e {
        Error::Parse(_) | Error::UnknownName(_) => SturmianStatus::Parse,
        Error::NotBasis => SturmianStatus::NotBasis,
        Error::NotCoprime(..) => SturmianStatus::NotCoprime,
        _ => SturmianStatus::Precondition,
    };
    set_error(status, e.to_string())
}

/// Runs `f`, turning a panic into `Internal` so it never unwinds into C.
fn guard(f: impl FnOnce() -> SturmianStatus) -> SturmianStatus {
    std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
        .unwrap_or_else(|_| set_error(SturmianStatus::Internal, "internal panic"))
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, SturmianStatus> {
    if s.is_null() {
        return Err(set_error(SturmianStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| set_error(SturmianStatus::InvalidUtf8, "argument is not UTF-8"))
}

unsafe fn read_word<'a>(w: *const SturmianWord) -> Result<&'a FreeWord, SturmianStatus> {
    w.as_ref().map(|w| &w.word).ok_or_else(|| set_error(SturmianStatus::NullPointer, "null word handle"))
}

unsafe fn read_braid<'a>(b: *const SturmianBraid) -> Result<&'a BraidWord, SturmianStatus> {
    b.as_ref().map(|b| &b.braid).ok_or_else(|| set_error(SturmianStatus::NullPointer, "null braid handle"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> SturmianStatus {
    if out.is_null() {
        return set_error(SturmianStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    SturmianStatus::Ok
}

fn word_handle(word: FreeWord) -> *mut SturmianWord {
    Box::into_raw(Box::new(SturmianWord { word }))
}

fn string_ptr(s: String) -> *mut c_char {
    CString::new(s).expect("words contain no nul bytes").into_raw()
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

macro_rules! lib {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return from_error(e),
        }
    };
}

/// Message of the last failure on this thread, or null. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sturmian_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a word over `a b A B` (`1` is the empty word).
///
/// # Safety
/// `text` must be null or a valid C string; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_word_parse(text: *const c_char, out: *mut *mut SturmianWord) -> SturmianStatus {
    guard(|| {
        let text = tri!(read_str(text));
        let word: FreeWord = lib!(text.parse());
        write_out(out, word_handle(word))
    })
}

/// # Safety
/// `word` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sturmian_word_free(word: *mut SturmianWord) {
    if !word.is_null() {
        drop(Box::from_raw(word));
    }
}

/// Writes a newly allocated string; free it with [`sturmian_string_free`].
///
/// # Safety
/// `word` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_word_to_string(word: *const SturmianWord, out: *mut *mut c_char) -> SturmianStatus {
    guard(|| {
        let word = tri!(read_word(word));
        write_out(out, string_ptr(word.to_string()))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sturmian_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of letters of the reduced word, or 0 for a null handle.
///
/// # Safety
/// `word` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn sturmian_word_len(word: *const SturmianWord) -> usize {
    word.as_ref().map_or(0, |w| w.word.len())
}

/// # Safety
/// `x`, `y` must be live handles or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_word_multiply(
    x: *const SturmianWord,
    y: *const SturmianWord,
    out: *mut *mut SturmianWord,
) -> SturmianStatus {
    guard(|| {
        let (x, y) = (tri!(read_word(x)), tri!(read_word(y)));
        write_out(out, word_handle(x.multiply(y)))
    })
}

/// # Safety
/// `x` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_word_inverse(x: *const SturmianWord, out: *mut *mut SturmianWord) -> SturmianStatus {
    guard(|| {
        let x = tri!(read_word(x));
        write_out(out, word_handle(x.inverse()))
    })
}

/// Christoffel word of the coprime pair `(p, q)`.
///
/// # Safety
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_christoffel(p: i64, q: i64, out: *mut *mut SturmianWord) -> SturmianStatus {
    guard(|| {
        let word = lib!(christoffel::christoffel_word(p, q));
        write_out(out, word_handle(word))
    })
}

/// Chain-based basis test.
///
/// # Safety
/// `u`, `v` must be live handles or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_is_basis(
    u: *const SturmianWord,
    v: *const SturmianWord,
    out: *mut bool,
) -> SturmianStatus {
    guard(|| {
        let (u, v) = (tri!(read_word(u)), tri!(read_word(v)));
        write_out(out, chains::is_basis(u, v).is_basis)
    })
}

/// Basis test by the commutator criterion.
///
/// # Safety
/// `u`, `v` must be live handles or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_nielsen_dehn(
    u: *const SturmianWord,
    v: *const SturmianWord,
    out: *mut bool,
) -> SturmianStatus {
    guard(|| {
        let (u, v) = (tri!(read_word(u)), tri!(read_word(v)));
        write_out(out, chains::nielsen_dehn_oracle(u, v))
    })
}

/// # Safety
/// `w` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_is_primitive(w: *const SturmianWord, out: *mut bool) -> SturmianStatus {
    guard(|| {
        let w = tri!(read_word(w));
        write_out(out, christoffel::is_primitive(w))
    })
}

/// Palindromic conjugate of a cyclically reduced basis with odd lengths.
///
/// # Safety
/// `u`, `v` must be live handles or null; the out pointers must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_palindromize(
    u: *const SturmianWord,
    v: *const SturmianWord,
    out_u: *mut *mut SturmianWord,
    out_v: *mut *mut SturmianWord,
) -> SturmianStatus {
    guard(|| {
        let (u, v) = (tri!(read_word(u)), tri!(read_word(v)));
        if out_u.is_null() || out_v.is_null() {
            return set_error(SturmianStatus::NullPointer, "null output pointer");
        }
        let (x, y) = lib!(chains::palindromize(u, v));
        out_u.write(word_handle(x));
        out_v.write(word_handle(y));
        SturmianStatus::Ok
    })
}

/// Parses B4 braid text such as `"1 -2 3 4"`; the empty string is the identity.
///
/// # Safety
/// `text` must be null or a valid C string; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_braid_parse(text: *const c_char, out: *mut *mut SturmianBraid) -> SturmianStatus {
    guard(|| {
        let text = tri!(read_str(text));
        let braid = lib!(BraidWord::parse(BraidGroup::B4, text));
        write_out(out, Box::into_raw(Box::new(SturmianBraid { braid })))
    })
}

/// # Safety
/// `braid` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sturmian_braid_free(braid: *mut SturmianBraid) {
    if !braid.is_null() {
        drop(Box::from_raw(braid));
    }
}

/// Equality in B4, or modulo its center when `mod_center` is set.
///
/// # Safety
/// `x`, `y` must be live handles or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_braid_equal(
    x: *const SturmianBraid,
    y: *const SturmianBraid,
    mod_center: bool,
    out: *mut bool,
) -> SturmianStatus {
    guard(|| {
        let (x, y) = (tri!(read_braid(x)), tri!(read_braid(y)));
        let equal = lib!(if mod_center { x.eq_mod_center(y) } else { x.braid_equal(y) });
        write_out(out, equal)
    })
}

/// Images of `a` and `b` under the automorphism of F2 attached to the braid,
/// composed with the swap `a ↔ b` on the right when `omega` is set.
///
/// # Safety
/// `braid` must be a live handle or null; the out pointers must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn sturmian_braid_f_image(
    braid: *const SturmianBraid,
    omega: bool,
    out_a: *mut *mut SturmianWord,
    out_b: *mut *mut SturmianWord,
) -> SturmianStatus {
    guard(|| {
        let braid = tri!(read_braid(braid));
        if out_a.is_null() || out_b.is_null() {
            return set_error(SturmianStatus::NullPointer, "null output pointer");
        }
        let phi = lib!(ExtBraidElement::new(braid.clone(), omega)).f_ext();
        out_a.write(word_handle(phi.image_a().clone()));
        out_b.write(word_handle(phi.image_b().clone()));
        SturmianStatus::Ok
    })
}
