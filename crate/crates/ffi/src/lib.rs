//! C interface to ellsurf.
//!
//! Surfaces live behind an opaque handle. Every function returns an
//! [`EllsurfStatus`]; results come back through out-pointers. Strings
//! returned by the library must be released with [`ellsurf_string_free`].
//! On failure, [`ellsurf_last_error_message`] describes the last error on
//! the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ellsurf::algebra::field::is_prime_u64;
use ellsurf::cli::{parse_polynomial, render, run, Command, ExitCode, Flags};
use ellsurf::sieve::{bad_primes, check_star};
use ellsurf::weierstrass::{fibre_configuration, WeierstrassSurface};

/// Status codes. 0 to 3 match the exit codes of the command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllsurfStatus {
    Ok = 0,
    /// The computation is undefined for this input (e.g. a 2-torsion section).
    DomainError = 1,
    /// Malformed polynomial, unsupported prime, degenerate surface.
    InputError = 2,
    InternalError = 3,
    /// A required pointer was null or a string was not UTF-8.
    InvalidArgument = 4,
    /// A panic was caught at the boundary.
    Panic = 5,
}

/// Opaque surface handle.
pub struct EllsurfSurface {
    a4_text: String,
    a6_text: String,
    surface: WeierstrassSurface,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn from_exit(code: ExitCode) -> EllsurfStatus {
    match code {
        ExitCode::Ok => EllsurfStatus::Ok,
        ExitCode::Domain => EllsurfStatus::DomainError,
        ExitCode::Input => EllsurfStatus::InputError,
        ExitCode::Internal => EllsurfStatus::InternalError,
    }
}

struct Fail(EllsurfStatus, String);

fn invalid(what: &str) -> Fail {
    Fail(EllsurfStatus::InvalidArgument, what.to_string())
}

/// Runs `f` behind a panic guard and records any error message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> EllsurfStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EllsurfStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            EllsurfStatus::Panic
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(invalid(&format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| invalid(&format!("{what} is not UTF-8")))
}

unsafe fn handle<'a>(s: *const EllsurfSurface) -> Result<&'a EllsurfSurface, Fail> {
    s.as_ref().ok_or_else(|| invalid("surface is null"))
}

fn check_prime(p: u64) -> Result<(), Fail> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Fail(EllsurfStatus::InputError, format!("{p} is not prime")))
    }
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(invalid("output pointer is null"));
    }
    out.write(value);
    Ok(())
}

/// Parses `a4` and `a6` (polynomials in `t`) and builds the minimal model.
///
/// # Safety
/// `a4` and `a6` must be null or NUL-terminated strings; `out` must be null
/// or valid for a write.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_surface_new(
    a4: *const c_char,
    a6: *const c_char,
    out: *mut *mut EllsurfSurface,
) -> EllsurfStatus {
    guard(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        out.write(ptr::null_mut());
        let (a4_text, a6_text) = (read_str(a4, "a4")?, read_str(a6, "a6")?);
        let parse = |name: &str, text: &str| {
            parse_polynomial(text)
                .map_err(|e| Fail(EllsurfStatus::InputError, format!("{name}: {e}")))
        };
        let surface = WeierstrassSurface::from_polys(parse("a4", a4_text)?, parse("a6", a6_text)?)
            .map_err(|e| Fail(EllsurfStatus::InputError, e.to_string()))?;
        let boxed = Box::new(EllsurfSurface {
            a4_text: a4_text.to_string(),
            a6_text: a6_text.to_string(),
            surface,
        });
        out.write(Box::into_raw(boxed));
        Ok(())
    })
}

/// Releases a surface. Null is ignored.
///
/// # Safety
/// `s` must be null or a handle from [`ellsurf_surface_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_surface_free(s: *mut EllsurfSurface) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// The integer `d` of the minimal model.
///
/// # Safety
/// `s` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_surface_degree(
    s: *const EllsurfSurface,
    out: *mut u32,
) -> EllsurfStatus {
    guard(|| write_out(out, handle(s)?.surface.d() as u32))
}

/// Sum of the Euler numbers of the singular fibres.
///
/// # Safety
/// `s` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_euler_sum(
    s: *const EllsurfSurface,
    out: *mut u64,
) -> EllsurfStatus {
    guard(|| write_out(out, fibre_configuration(&handle(s)?.surface).euler_sum()))
}

/// Whether `p` passes the good-reduction check.
///
/// # Safety
/// `s` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_check_star(
    s: *const EllsurfSurface,
    p: u64,
    out: *mut bool,
) -> EllsurfStatus {
    guard(|| {
        let s = handle(s)?;
        check_prime(p)?;
        write_out(out, check_star(&s.surface, p).verdict)
    })
}

/// Whether `p` is in the certified bad-prime set.
///
/// # Safety
/// `s` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_is_bad_prime(
    s: *const EllsurfSurface,
    p: u64,
    out: *mut bool,
) -> EllsurfStatus {
    guard(|| {
        let s = handle(s)?;
        check_prime(p)?;
        write_out(out, bad_primes(&s.surface).contains(p))
    })
}

unsafe fn report(
    s: *const EllsurfSurface,
    command: Command,
    flags: Flags,
    out: *mut *mut c_char,
) -> EllsurfStatus {
    let mut status = EllsurfStatus::Ok;
    let guarded = guard(|| {
        if out.is_null() {
            return Err(invalid("output pointer is null"));
        }
        out.write(ptr::null_mut());
        let s = handle(s)?;
        let text = format!("a4 = {}\na6 = {}\n", s.a4_text, s.a6_text);
        let outcome = run(command, &text, &flags);
        status = from_exit(outcome.exit);
        if status != EllsurfStatus::Ok {
            set_error(
                outcome.report["error"]["message"]
                    .as_str()
                    .unwrap_or("error")
                    .to_string(),
            );
        }
        let json = CString::new(render(&outcome.report))
            .map_err(|_| Fail(EllsurfStatus::InternalError, "NUL in report".into()))?;
        out.write(json.into_raw());
        Ok(())
    });
    if guarded != EllsurfStatus::Ok {
        guarded
    } else {
        status
    }
}

/// JSON report of the `analyze` command.
///
/// The report is written to `out` whenever the status is 0 to 3.
///
/// # Safety
/// `s` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_analyze_json(
    s: *const EllsurfSurface,
    out: *mut *mut c_char,
) -> EllsurfStatus {
    report(s, Command::Analyze, Flags::default(), out)
}

/// JSON report of the `sections` command. Negative degree bounds select the defaults.
///
/// # Safety
/// `s` must be a live handle or null; `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_sections_json(
    s: *const EllsurfSurface,
    p: u64,
    num_deg: i32,
    den_deg: i32,
    out: *mut *mut c_char,
) -> EllsurfStatus {
    let flags = Flags {
        prime: Some(p),
        num_deg: usize::try_from(num_deg).ok(),
        den_deg: usize::try_from(den_deg).ok(),
        ..Flags::default()
    };
    report(s, Command::Sections, flags, out)
}

/// JSON report of the `cover` command for the section with x-coordinate `x`.
/// `lambda_max` of 0 selects the default.
///
/// # Safety
/// `s` must be a live handle or null; `x` a NUL-terminated string or null
/// (null reports a missing x-coordinate);
/// `out` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_cover_json(
    s: *const EllsurfSurface,
    p: u64,
    x: *const c_char,
    lambda_max: u64,
    force: bool,
    out: *mut *mut c_char,
) -> EllsurfStatus {
    let x = if x.is_null() {
        None
    } else {
        match CStr::from_ptr(x).to_str() {
            Ok(x) => Some(x.to_string()),
            Err(_) => {
                set_error("x is not UTF-8");
                return EllsurfStatus::InvalidArgument;
            }
        }
    };
    let flags = Flags {
        prime: Some(p),
        x,
        lambda_max: (lambda_max > 0).then_some(lambda_max),
        force,
        ..Flags::default()
    };
    report(s, Command::Cover, flags, out)
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `p` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ellsurf_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message for the last failure on this thread, or null. Valid until the
/// next call into the library on the same thread; do not free.
#[no_mangle]
pub extern "C" fn ellsurf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}
