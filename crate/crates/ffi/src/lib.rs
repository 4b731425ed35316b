//! C ABI over `aflt-core`.
//!
//! Fields are opaque [`AfltField`] handles created by [`aflt_field_new`] and
//! released with [`aflt_field_free`]. Every fallible call returns an
//! [`AfltStatus`]; on failure a message is available from
//! [`aflt_last_error`] on the same thread. Strings handed out through `out`
//! parameters are NUL-terminated UTF-8 and must be released with
//! [`aflt_string_free`]. Elements are passed as power-basis coordinate
//! strings `c0;c1;...` (a single rational is also accepted).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use aflt_core::class;
use aflt_core::error::Error;
use aflt_core::nf::{FieldKind, NumberField};
use aflt_core::report::{
    emit_split2, emit_survey, emit_verdict, run_pipeline_with_list, run_survey, split2_report, FieldConfig, Format,
};
use aflt_core::sunit::{compute_st, is_s_unit};

/// Result codes of the C interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AfltStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    UnsupportedField = 4,
    Precondition = 5,
    Arithmetic = 6,
    Range = 7,
    Io = 8,
    Panic = 9,
}

impl From<&Error> for AfltStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse { .. } | Error::UnknownFormat(_) => AfltStatus::Parse,
            Error::UnsupportedField(_) | Error::WrongFamily(_) => AfltStatus::UnsupportedField,
            Error::DivisionByZero | Error::ValuationOfZero => AfltStatus::Arithmetic,
            Error::DegenerateLambda(_)
            | Error::TrivialSolution
            | Error::PreconditionViolation(_)
            | Error::UnsupportedExponent(_) => AfltStatus::Precondition,
            Error::Range(_) => AfltStatus::Range,
            Error::Io(_) => AfltStatus::Io,
        }
    }
}

/// Opaque handle to a number field.
pub struct AfltField {
    kind: FieldKind,
    parameter: i64,
    field: NumberField,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

enum Failure {
    Status(AfltStatus, String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

/// Run `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> AfltStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            AfltStatus::Ok
        }
        Ok(Err(Failure::Status(s, msg))) => {
            set_last_error(&msg);
            s
        }
        Ok(Err(Failure::Core(e))) => {
            set_last_error(&e.to_string());
            AfltStatus::from(&e)
        }
        Err(_) => {
            set_last_error("internal panic");
            AfltStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure::Status(AfltStatus::NullPointer, format!("{name} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::Status(AfltStatus::InvalidUtf8, format!("{name} is not UTF-8")))
}

unsafe fn field_arg<'a>(p: *const AfltField) -> Result<&'a AfltField, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure::Status(AfltStatus::NullPointer, "field handle is null".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Status(AfltStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure::Status(AfltStatus::Panic, "interior NUL in output".into()))?;
    write_out(out, c.into_raw())
}

fn format_arg(s: &str) -> Result<Format, Failure> {
    Ok(s.parse::<Format>()?)
}

/// Create a field. `kind` is `"quadratic"` (parameter `m`, squarefree,
/// not 0 or 1) or `"cyclotomic2"` (parameter `k` in 2..=5 for `Q(zeta_{2^k})`).
///
/// # Safety
/// `kind` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aflt_field_new(kind: *const c_char, parameter: i64, out: *mut *mut AfltField) -> AfltStatus {
    guard(|| {
        let kind_str = str_arg(kind, "kind")?;
        let kind = FieldKind::parse(kind_str)
            .ok_or_else(|| Failure::Core(Error::UnsupportedField(format!("unknown field kind {kind_str:?}"))))?;
        let field = NumberField::make(kind, parameter)?;
        let handle = Box::new(AfltField { kind, parameter, field });
        write_out(out, Box::into_raw(handle))
    })
}

/// Release a field handle. Null is ignored.
///
/// # Safety
/// `field` must come from [`aflt_field_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn aflt_field_free(field: *mut AfltField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Degree of the field over Q, or 0 for a null handle.
///
/// # Safety
/// `field` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn aflt_field_degree(field: *const AfltField) -> usize {
    field.as_ref().map_or(0, |f| f.field.degree())
}

/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aflt_field_name(field: *const AfltField, out: *mut *mut c_char) -> AfltStatus {
    guard(|| {
        let f = field_arg(field)?;
        write_string(out, f.field.name())
    })
}

/// Class number of an imaginary quadratic field.
///
/// # Safety
/// `field` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aflt_class_number(field: *const AfltField, out: *mut u64) -> AfltStatus {
    guard(|| {
        let f = field_arg(field)?;
        let h = class::class_number(&f.field)?;
        write_out(out, h)
    })
}

/// Whether `element` is a unit away from the primes above 2.
///
/// # Safety
/// `field` must be a live handle, `element` a NUL-terminated string and
/// `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aflt_is_s_unit(field: *const AfltField, element: *const c_char, out: *mut bool) -> AfltStatus {
    guard(|| {
        let f = field_arg(field)?;
        let x = f
            .field
            .parse_element(str_arg(element, "element")?)
            .map_err(|msg| Failure::Status(AfltStatus::Parse, msg))?;
        let st = compute_st(&f.field);
        let r = is_s_unit(&f.field, &x, st.s())?;
        write_out(out, r)
    })
}

/// Decomposition of 2 rendered in `format` (`json`, `csv` or `text`).
///
/// # Safety
/// `field` must be a live handle, `format` a NUL-terminated string and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aflt_split2(field: *const AfltField, format: *const c_char, out: *mut *mut c_char) -> AfltStatus {
    guard(|| {
        let f = field_arg(field)?;
        let format = format_arg(str_arg(format, "format")?)?;
        write_string(out, emit_split2(&split2_report(&f.field), format))
    })
}

/// Run the criterion pipeline. `solutions` is an optional solution list
/// (null for none), `complete` declares it complete, and `search_box` of 0
/// selects the default box.
///
/// # Safety
/// `field` must be a live handle, `solutions` null or a NUL-terminated
/// string, `format` a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aflt_check(
    field: *const AfltField,
    solutions: *const c_char,
    complete: bool,
    search_box: u32,
    format: *const c_char,
    out: *mut *mut c_char,
) -> AfltStatus {
    guard(|| {
        let f = field_arg(field)?;
        let format = format_arg(str_arg(format, "format")?)?;
        let list = if solutions.is_null() {
            None
        } else {
            Some(str_arg(solutions, "solutions")?)
        };
        let mut config = FieldConfig::for_field(f.kind, f.parameter);
        config.solutions_complete = complete;
        config.search_box = (search_box > 0).then_some(search_box);
        let result = run_pipeline_with_list(&config, list)?;
        write_string(out, emit_verdict(&result, format))
    })
}

/// Survey `Q(sqrt(-d))` for squarefree `d` in `[d_min, d_max]`.
///
/// # Safety
/// `format` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn aflt_survey(d_min: u64, d_max: u64, format: *const c_char, out: *mut *mut c_char) -> AfltStatus {
    guard(|| {
        let format = format_arg(str_arg(format, "format")?)?;
        let rows = run_survey(d_min, d_max)?;
        write_string(out, emit_survey(&rows, format))
    })
}

/// Message for the last failing call on this thread; empty after success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn aflt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn aflt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    unsafe fn take(s: *mut c_char) -> String {
        let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
        aflt_string_free(s);
        out
    }

    #[test]
    fn field_lifecycle() {
        unsafe {
            let mut f = ptr::null_mut();
            assert_eq!(aflt_field_new(c"quadratic".as_ptr(), -5, &mut f), AfltStatus::Ok);
            assert_eq!(aflt_field_degree(f), 2);
            let mut name = ptr::null_mut();
            assert_eq!(aflt_field_name(f, &mut name), AfltStatus::Ok);
            assert_eq!(take(name), "Q(sqrt(-5))");
            let mut h = 0u64;
            assert_eq!(aflt_class_number(f, &mut h), AfltStatus::Ok);
            assert_eq!(h, 2);
            aflt_field_free(f);
        }
    }

    #[test]
    fn errors_have_codes_and_messages() {
        unsafe {
            let mut f = ptr::null_mut();
            assert_eq!(aflt_field_new(c"quadratic".as_ptr(), 12, &mut f), AfltStatus::UnsupportedField);
            assert!(f.is_null());
            let msg = CStr::from_ptr(aflt_last_error()).to_str().unwrap();
            assert!(msg.contains("unsupported field"), "{msg}");
            assert_eq!(aflt_field_new(ptr::null(), 2, &mut f), AfltStatus::NullPointer);
            assert_eq!(aflt_field_degree(ptr::null()), 0);
            let mut s = ptr::null_mut();
            assert_eq!(aflt_survey(4, 1, c"csv".as_ptr(), &mut s), AfltStatus::Range);
            assert_eq!(aflt_survey(1, 4, c"xml".as_ptr(), &mut s), AfltStatus::Parse);
        }
    }

    #[test]
    fn check_and_s_units() {
        unsafe {
            let mut f = ptr::null_mut();
            assert_eq!(aflt_field_new(c"cyclotomic2".as_ptr(), 4, &mut f), AfltStatus::Ok);
            let mut yes = false;
            assert_eq!(aflt_is_s_unit(f, c"1;-1;0;0;0;0;0;0".as_ptr(), &mut yes), AfltStatus::Ok);
            assert!(yes);
            assert_eq!(aflt_is_s_unit(f, c"3".as_ptr(), &mut yes), AfltStatus::Ok);
            assert!(!yes);
            assert_eq!(aflt_is_s_unit(f, c"1;2".as_ptr(), &mut yes), AfltStatus::Parse);

            let mut out = ptr::null_mut();
            let list = c"2\n-1\n0;1;0;0;0;0;0;0\n";
            assert_eq!(aflt_check(f, list.as_ptr(), false, 0, c"json".as_ptr(), &mut out), AfltStatus::Ok);
            let json = take(out);
            assert!(json.contains("\"verdict\": \"UNKNOWN\""), "{json}");
            assert!(json.contains("\"bound_per_P\": [\n    32\n  ]"), "{json}");
            aflt_field_free(f);

            assert_eq!(aflt_survey(1, 10, c"csv".as_ptr(), &mut out), AfltStatus::Ok);
            assert!(take(out).starts_with("d,splitting,verdict,solutions,max_t\n"));
        }
    }
}
