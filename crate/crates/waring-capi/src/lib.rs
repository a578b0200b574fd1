//! C ABI for the waring library.
//!
//! Everything crosses the boundary as either a plain integer, a
//! NUL-terminated UTF-8 string, or an opaque `WaringForm` handle.
//! Functions return a `WaringStatus`; on any non-OK status the
//! thread-local message behind `waring_last_error_message` describes
//! what went wrong. Strings handed out by this library must be
//! released with `waring_string_free`, handles with
//! `waring_form_free`.

use libc::c_char;
use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use waring::json::ParsedForm;

/// Result of every fallible call in this interface.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WaringStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An input string was not valid UTF-8.
    Utf8 = 2,
    /// Malformed JSON or coefficient text.
    Parse = 3,
    /// Input outside the mathematical domain (zero form, bad exponents, ...).
    Domain = 4,
    /// An internal cross-check failed; this signals a library bug.
    Verification = 5,
    /// A panic was caught at the boundary.
    Panic = 6,
}

/// Opaque handle to a parsed binary form.
pub struct WaringForm {
    inner: ParsedForm,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn clear_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn fail(status: WaringStatus, message: String) -> WaringStatus {
    let text = CString::new(message)
        .unwrap_or_else(|_| CString::new("error message contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(text));
    status
}

fn status_for(e: &waring::Error) -> WaringStatus {
    match e {
        waring::Error::Parse(_) => WaringStatus::Parse,
        waring::Error::Verification(_) => WaringStatus::Verification,
        _ => WaringStatus::Domain,
    }
}

fn fail_with(e: waring::Error) -> WaringStatus {
    fail(status_for(&e), e.to_string())
}

/// Message for the most recent failure on this thread, or null if the
/// last call succeeded. The pointer stays valid until the next failing
/// call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn waring_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map(|c| c.as_ptr())
            .unwrap_or(std::ptr::null())
    })
}

/// Releases a string returned by this library. Null is a no-op.
#[no_mangle]
pub extern "C" fn waring_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

unsafe fn read_utf8<'a>(p: *const c_char) -> Result<&'a str, WaringStatus> {
    if p.is_null() {
        return Err(fail(WaringStatus::NullPointer, "string argument is null".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(WaringStatus::Utf8, "string argument is not valid UTF-8".into()))
}

fn emit_string(
    out: *mut *mut c_char,
    produce: impl FnOnce() -> waring::Result<String>,
) -> WaringStatus {
    if out.is_null() {
        return fail(WaringStatus::NullPointer, "output pointer is null".into());
    }
    match catch_unwind(AssertUnwindSafe(produce)) {
        Ok(Ok(text)) => match CString::new(text) {
            Ok(c) => {
                unsafe { *out = c.into_raw() };
                clear_error();
                WaringStatus::Ok
            }
            Err(_) => fail(WaringStatus::Panic, "produced text contained a NUL byte".into()),
        },
        Ok(Err(e)) => fail_with(e),
        Err(_) => fail(WaringStatus::Panic, "panic caught at the FFI boundary".into()),
    }
}

fn emit_u64(out: *mut u64, produce: impl FnOnce() -> waring::Result<u64>) -> WaringStatus {
    if out.is_null() {
        return fail(WaringStatus::NullPointer, "output pointer is null".into());
    }
    match catch_unwind(AssertUnwindSafe(produce)) {
        Ok(Ok(value)) => {
            unsafe { *out = value };
            clear_error();
            WaringStatus::Ok
        }
        Ok(Err(e)) => fail_with(e),
        Err(_) => fail(WaringStatus::Panic, "panic caught at the FFI boundary".into()),
    }
}

unsafe fn borrow_form<'a>(form: *const WaringForm) -> Result<&'a ParsedForm, WaringStatus> {
    if form.is_null() {
        return Err(fail(WaringStatus::NullPointer, "form handle is null".into()));
    }
    Ok(&(*form).inner)
}

/// Parses a form from JSON text, e.g.
/// {"degree":3,"field":"rational","coeffs":["0","1","0","0"]}.
/// On success writes a fresh handle to `out`.
#[no_mangle]
pub extern "C" fn waring_form_parse(json: *const c_char, out: *mut *mut WaringForm) -> WaringStatus {
    if out.is_null() {
        return fail(WaringStatus::NullPointer, "output pointer is null".into());
    }
    let text = match unsafe { read_utf8(json) } {
        Ok(t) => t,
        Err(status) => return status,
    };
    match catch_unwind(|| waring::json::form_from_str(text)) {
        Ok(Ok(parsed)) => {
            let handle = Box::new(WaringForm { inner: parsed });
            unsafe { *out = Box::into_raw(handle) };
            clear_error();
            WaringStatus::Ok
        }
        Ok(Err(e)) => fail_with(e),
        Err(_) => fail(WaringStatus::Panic, "panic caught at the FFI boundary".into()),
    }
}

/// Releases a form handle. Null is a no-op.
#[no_mangle]
pub extern "C" fn waring_form_free(form: *mut WaringForm) {
    if !form.is_null() {
        drop(unsafe { Box::from_raw(form) });
    }
}

/// Degree of the form behind the handle, or -1 if the handle is null.
#[no_mangle]
pub extern "C" fn waring_form_degree(form: *const WaringForm) -> i64 {
    match unsafe { borrow_form(form) } {
        Ok(parsed) => parsed.degree() as i64,
        Err(_) => -1,
    }
}

/// Canonical JSON for the form behind the handle.
#[no_mangle]
pub extern "C" fn waring_form_to_json(form: *const WaringForm, out: *mut *mut c_char) -> WaringStatus {
    let parsed = match unsafe { borrow_form(form) } {
        Ok(p) => p,
        Err(status) => return status,
    };
    emit_string(out, || Ok(parsed.to_json().to_string()))
}

fn rank_of(parsed: &ParsedForm) -> waring::Result<u64> {
    let rank = match parsed {
        ParsedForm::Rational(f) => waring::sylvester::waring_rank(f)?.rank,
        ParsedForm::Cyclotomic(f) => waring::sylvester::waring_rank(f)?.rank,
    };
    Ok(rank as u64)
}

/// Waring rank of the form behind the handle.
#[no_mangle]
pub extern "C" fn waring_rank(form: *const WaringForm, out_rank: *mut u64) -> WaringStatus {
    let parsed = match unsafe { borrow_form(form) } {
        Ok(p) => p,
        Err(status) => return status,
    };
    emit_u64(out_rank, || rank_of(parsed))
}

/// Full rank certificate (rank, witness, branch, ...) as JSON text.
#[no_mangle]
pub extern "C" fn waring_rank_certificate_json(
    form: *const WaringForm,
    out: *mut *mut c_char,
) -> WaringStatus {
    let parsed = match unsafe { borrow_form(form) } {
        Ok(p) => p,
        Err(status) => return status,
    };
    emit_string(out, || {
        let value = match parsed {
            ParsedForm::Rational(f) => {
                waring::json::rational_certificate_to_json(&waring::sylvester::waring_rank(f)?)
            }
            ParsedForm::Cyclotomic(f) => {
                waring::json::cyclotomic_certificate_to_json(&waring::sylvester::waring_rank(f)?)
            }
        };
        Ok(value.to_string())
    })
}

/// Closed-form rank of a·x^r·y^(s+alpha) + b·x^(r+alpha)·y^s for
/// nonzero a, b; requires r <= s and alpha >= 1.
#[no_mangle]
pub extern "C" fn waring_binomial_rank(r: u64, s: u64, alpha: u64, out_rank: *mut u64) -> WaringStatus {
    emit_u64(out_rank, || {
        let spec = waring::binomial::BinomialSpec::new(r as usize, s as usize, alpha as usize)?;
        Ok(waring::binomial::binomial_rank(&spec) as u64)
    })
}

/// Value of the Hilbert function (catalecticant rank) at i.
#[no_mangle]
pub extern "C" fn waring_hilbert_function(
    form: *const WaringForm,
    i: u64,
    out: *mut u64,
) -> WaringStatus {
    let parsed = match unsafe { borrow_form(form) } {
        Ok(p) => p,
        Err(status) => return status,
    };
    emit_u64(out, || {
        let value = match parsed {
            ParsedForm::Rational(f) => waring::forms::hilbert_function(f, i as usize)?,
            ParsedForm::Cyclotomic(f) => waring::forms::hilbert_function(f, i as usize)?,
        };
        Ok(value as u64)
    })
}

/// Position of the form relative to the rational normal curve:
/// "ON_CURVE", "TANGENT", "SECANT" or "OUTSIDE".
#[no_mangle]
pub extern "C" fn waring_classify(form: *const WaringForm, out: *mut *mut c_char) -> WaringStatus {
    let parsed = match unsafe { borrow_form(form) } {
        Ok(p) => p,
        Err(status) => return status,
    };
    emit_string(out, || {
        let class = match parsed {
            ParsedForm::Rational(f) => waring::sylvester::classify_secant_point(f)?,
            ParsedForm::Cyclotomic(f) => waring::sylvester::classify_secant_point(f)?,
        };
        Ok(class.as_str().to_string())
    })
}

/// JSON array of every degree-d form of rank two divisible by x, y and
/// x+y; there are (d-1)(d-2)/2 of them.
#[no_mangle]
pub extern "C" fn waring_enumerate_json(d: u64, out: *mut *mut c_char) -> WaringStatus {
    emit_string(out, || {
        let roots = waring::cover::RootsOfUnity::new(d as usize)?;
        let frame = waring::cover::canonical_frame(roots.field());
        let forms = waring::cover::enumerate_rank_two(&roots, &frame)?;
        let values: Vec<_> = forms.iter().map(waring::json::cyclotomic_form_to_json).collect();
        Ok(serde_json::Value::Array(values).to_string())
    })
}

/// Full verification report for degree d: orbit and image counts,
/// partition comparison and transversality, as JSON text.
#[no_mangle]
pub extern "C" fn waring_cover_report_json(d: u64, out: *mut *mut c_char) -> WaringStatus {
    emit_string(out, || {
        let report = waring::cover::build_cover_report(d as usize)?;
        Ok(waring::json::cover_report_to_json(&report).to_string())
    })
}
