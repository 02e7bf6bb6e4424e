//! C ABI for the `hessenberg` ordinal engine.
//!
//! Values cross the boundary as opaque heap handles. Every function returns
//! an [`HbStatus`]; on failure a description is available from
//! [`hb_last_error_message`] on the same thread. Results are written through
//! out-pointers only on success. Handles and strings returned to the caller
//! must be released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hessenberg::mixed::{realize_inat_sum, validate_certificate};
use hessenberg::{parse_ordinal, parse_sequence, OmegaSequence, Ordinal};

/// An ordinal below ε₀.
pub struct HbOrdinal(Ordinal);

/// A finitely described ω-sequence of ordinals.
pub struct HbSequence(OmegaSequence);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    DomainError = 4,
    InvariantFailed = 5,
    Panic = 6,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', "\\0")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(HbStatus, String);

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> HbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HbStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("panic: {msg}"));
            HbStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T, name: &str) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(HbStatus::NullPointer, format!("{name} is null")))
}

unsafe fn read_str<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(HbStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(HbStatus::InvalidUtf8, format!("{name}: {e}")))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(HbStatus::NullPointer, "out is null".into()));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(HbStatus::NullPointer, "out is null".into()));
    }
    *out = CString::new(s)
        .map_err(|e| Failure(HbStatus::InvariantFailed, e.to_string()))?
        .into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses an expression such as `w^2*3 + w # 5`.
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hb_ordinal_parse(
    text: *const c_char,
    out: *mut *mut HbOrdinal,
) -> HbStatus {
    guard(|| {
        let src = read_str(text, "text")?;
        let value = parse_ordinal(src).map_err(|e| Failure(HbStatus::ParseError, e.to_string()))?;
        put(out, HbOrdinal(value))
    })
}

/// # Safety
/// `ordinal` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hb_ordinal_free(ordinal: *mut HbOrdinal) {
    if !ordinal.is_null() {
        drop(Box::from_raw(ordinal));
    }
}

/// Canonical rendering, e.g. `w^2*3 + w + 5`. Free with [`hb_string_free`].
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_ordinal_to_string(
    ordinal: *const HbOrdinal,
    out: *mut *mut c_char,
) -> HbStatus {
    guard(|| put_string(out, get(ordinal, "ordinal")?.0.to_string()))
}

/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes -1, 0 or 1 to `out`.
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_ordinal_compare(
    a: *const HbOrdinal,
    b: *const HbOrdinal,
    out: *mut i32,
) -> HbStatus {
    guard(|| {
        let ord = get(a, "a")?.0.cmp(&get(b, "b")?.0);
        if out.is_null() {
            return Err(Failure(HbStatus::NullPointer, "out is null".into()));
        }
        *out = ord as i32;
        Ok(())
    })
}

unsafe fn binary(
    a: *const HbOrdinal,
    b: *const HbOrdinal,
    out: *mut *mut HbOrdinal,
    op: fn(&Ordinal, &Ordinal) -> Ordinal,
) -> HbStatus {
    guard(|| {
        let value = op(&get(a, "a")?.0, &get(b, "b")?.0);
        put(out, HbOrdinal(value))
    })
}

/// Ordered sum `a + b`.
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_ordinal_add(
    a: *const HbOrdinal,
    b: *const HbOrdinal,
    out: *mut *mut HbOrdinal,
) -> HbStatus {
    binary(a, b, out, Ordinal::add)
}

/// Natural sum `a # b`.
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_ordinal_nat_sum(
    a: *const HbOrdinal,
    b: *const HbOrdinal,
    out: *mut *mut HbOrdinal,
) -> HbStatus {
    binary(a, b, out, Ordinal::nat_sum)
}

/// Terms of `a` with exponent at least `at`.
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_ordinal_truncate(
    a: *const HbOrdinal,
    at: *const HbOrdinal,
    out: *mut *mut HbOrdinal,
) -> HbStatus {
    binary(a, at, out, Ordinal::truncate)
}

/// Parses a sequence descriptor (`head: ...` line, then `tail: ...`).
///
/// # Safety
/// `text` must be null or a NUL-terminated string; `out` must be null or
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hb_sequence_parse(
    text: *const c_char,
    out: *mut *mut HbSequence,
) -> HbStatus {
    guard(|| {
        let src = read_str(text, "text")?;
        let s = parse_sequence(src).map_err(|e| Failure(HbStatus::ParseError, e.to_string()))?;
        put(out, HbSequence(s))
    })
}

/// # Safety
/// `sequence` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hb_sequence_free(sequence: *mut HbSequence) {
    if !sequence.is_null() {
        drop(Box::from_raw(sequence));
    }
}

unsafe fn derived(
    s: *const HbSequence,
    out: *mut *mut HbOrdinal,
    f: fn(&OmegaSequence) -> Ordinal,
) -> HbStatus {
    guard(|| {
        let value = f(&get(s, "sequence")?.0);
        put(out, HbOrdinal(value))
    })
}

/// Infinite natural sum.
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_sequence_inat_sum(
    s: *const HbSequence,
    out: *mut *mut HbOrdinal,
) -> HbStatus {
    derived(s, out, OmegaSequence::inat_sum)
}

/// Infinite ordered sum.
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_sequence_iord_sum(
    s: *const HbSequence,
    out: *mut *mut HbOrdinal,
) -> HbStatus {
    derived(s, out, OmegaSequence::iord_sum)
}

/// Least `ξ` such that only finitely many elements are `≥ ω^ξ`.
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_sequence_xi(
    s: *const HbSequence,
    out: *mut *mut HbOrdinal,
) -> HbStatus {
    derived(s, out, OmegaSequence::xi)
}

/// Element-wise truncation at `eps`, which must be below the sequence's
/// `ξ`; otherwise [`HbStatus::DomainError`].
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_sequence_truncate(
    s: *const HbSequence,
    eps: *const HbOrdinal,
    out: *mut *mut HbSequence,
) -> HbStatus {
    guard(|| {
        let t = get(s, "sequence")?
            .0
            .truncate(&get(eps, "eps")?.0)
            .map_err(|e| Failure(HbStatus::DomainError, e.to_string()))?;
        put(out, HbSequence(t))
    })
}

/// Certificate text for the largest left-finite mixed sum, after checking
/// it. Free with [`hb_string_free`].
///
/// # Safety
/// Pointers must be null or valid as described in the module docs.
#[no_mangle]
pub unsafe extern "C" fn hb_sequence_certify(
    s: *const HbSequence,
    out: *mut *mut c_char,
) -> HbStatus {
    guard(|| {
        let s = &get(s, "sequence")?.0;
        let cert = realize_inat_sum(s);
        let value = validate_certificate(&cert, s)
            .map_err(|e| Failure(HbStatus::InvariantFailed, e.to_string()))?;
        if value != s.inat_sum() {
            return Err(Failure(
                HbStatus::InvariantFailed,
                format!("certificate realizes {value}, expected {}", s.inat_sum()),
            ));
        }
        put_string(out, cert.to_string())
    })
}
