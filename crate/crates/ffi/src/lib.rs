//! C ABI over `gqlab`.
//!
//! Every function returns a [`GqlabStatus`]; on failure the message is
//! available from [`gqlab_last_error`] on the same thread. Handles are opaque
//! and owned by the caller until passed to their `_free` function. Strings
//! returned through `out` parameters must be released with
//! [`gqlab_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gqlab::atlas::{Atlas, MatrixClass};
use gqlab::checks::{render_json, run_suite};
use gqlab::export::{render, Format, What};
use gqlab::gf2::SymMat3;
use gqlab::planes::build_pi_plane_model;
use gqlab::quadrangle::{build_doily_model, build_gq_q, build_gq_s, collinear_matrices, find_isomorphism, verify_gq_axioms, IncidenceStructure};
use gqlab::report::SuiteResult;
use gqlab::GqError;

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GqlabStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    NotInS = 4,
    UnknownCheck = 5,
    Unsupported = 6,
    Io = 7,
    OutOfRange = 8,
    NotGq = 9,
    Internal = 10,
    Panic = 11,
}

/// The quadric model on the points of Q.
pub const GQLAB_MODEL_QUADRIC: u32 = 0;
/// The 27 matrices of S with determinant collinearity.
pub const GQLAB_MODEL_MATRICES: u32 = 1;
/// The translated plane model.
pub const GQLAB_MODEL_PLANES: u32 = 2;
/// The doily with its double-six.
pub const GQLAB_MODEL_DOILY: u32 = 3;

pub const GQLAB_CLASS_IDENTITY: u32 = 0;
pub const GQLAB_CLASS_D: u32 = 1;
pub const GQLAB_CLASS_U: u32 = 2;
pub const GQLAB_CLASS_V: u32 = 3;

/// An incidence structure.
pub struct GqlabModel {
    inner: IncidenceStructure,
    // NUL-terminated copies of the point labels for borrowed access
    labels: Vec<CString>,
}

/// The reports of one verification run.
pub struct GqlabSuite {
    inner: SuiteResult,
    ids: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &GqError) -> GqlabStatus {
    match e {
        GqError::Parse(_) => GqlabStatus::Parse,
        GqError::NotInS(..) | GqError::NotInvertible(_) | GqError::WrongClass(..) => GqlabStatus::NotInS,
        GqError::UnknownCheckId(_) => GqlabStatus::UnknownCheck,
        GqError::UnsupportedFormat { .. } => GqlabStatus::Unsupported,
        GqError::Io { .. } => GqlabStatus::Io,
        GqError::UnknownLabel(_) | GqError::UndefinedAtCenter(_) | GqError::SingularMatrix(_) => GqlabStatus::InvalidArgument,
        GqError::Internal(_) => GqlabStatus::Internal,
    }
}

type FfiResult = Result<(), (GqlabStatus, String)>;

fn fail<T>(status: GqlabStatus, msg: impl Into<String>) -> Result<T, (GqlabStatus, String)> {
    Err((status, msg.into()))
}

fn lift<T>(r: gqlab::Result<T>) -> Result<T, (GqlabStatus, String)> {
    r.map_err(|e| (status_of(&e), e.to_string()))
}

/// Runs `f`, converting errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> FfiResult) -> GqlabStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => GqlabStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside gqlab");
            GqlabStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, name: &str) -> Result<&'a str, (GqlabStatus, String)> {
    if p.is_null() {
        return fail(GqlabStatus::NullPointer, format!("{name} is null"));
    }
    CStr::from_ptr(p).to_str().or_else(|_| fail(GqlabStatus::Parse, format!("{name} is not UTF-8")))
}

unsafe fn write_out<T>(out: *mut T, value: T, name: &str) -> FfiResult {
    if out.is_null() {
        return fail(GqlabStatus::NullPointer, format!("{name} is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult {
    let c = CString::new(s).or_else(|_| fail(GqlabStatus::Internal, "string contains NUL"))?;
    write_out(out, c.into_raw(), "out")
}

unsafe fn model_ref<'a>(m: *const GqlabModel) -> Result<&'a GqlabModel, (GqlabStatus, String)> {
    m.as_ref().ok_or((GqlabStatus::NullPointer, "model is null".to_string()))
}

unsafe fn suite_ref<'a>(s: *const GqlabSuite) -> Result<&'a GqlabSuite, (GqlabStatus, String)> {
    s.as_ref().ok_or((GqlabStatus::NullPointer, "suite is null".to_string()))
}

/// Message of the last failed call on this thread, or NULL. Valid until the next failing call.
#[no_mangle]
pub extern "C" fn gqlab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gqlab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds one of the four models (`GQLAB_MODEL_*`).
///
/// # Safety
/// `out` must be valid for writing a pointer.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_new(kind: u32, out: *mut *mut GqlabModel) -> GqlabStatus {
    guard(|| {
        let inner = match kind {
            GQLAB_MODEL_QUADRIC => build_gq_q(),
            GQLAB_MODEL_MATRICES => build_gq_s(),
            GQLAB_MODEL_PLANES => build_pi_plane_model(),
            GQLAB_MODEL_DOILY => build_doily_model(),
            k => return fail(GqlabStatus::InvalidArgument, format!("unknown model kind {k}")),
        };
        let labels = inner.points.iter().map(|p| CString::new(p.as_str()).expect("labels have no NUL")).collect();
        write_out(out, Box::into_raw(Box::new(GqlabModel { inner, labels })), "out")
    })
}

/// # Safety
/// `m` must be NULL or a handle from [`gqlab_model_new`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_free(m: *mut GqlabModel) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of points; 0 for a NULL handle.
///
/// # Safety
/// `m` must be NULL or a live model handle.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_point_count(m: *const GqlabModel) -> usize {
    m.as_ref().map_or(0, |m| m.inner.point_count())
}

/// Number of lines; 0 for a NULL handle.
///
/// # Safety
/// `m` must be NULL or a live model handle.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_line_count(m: *const GqlabModel) -> usize {
    m.as_ref().map_or(0, |m| m.inner.line_count())
}

/// Checks the GQ axioms and writes the order `(s, t)`.
///
/// # Safety
/// `m` must be a live model handle; `s` and `t` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_verify(m: *const GqlabModel, s: *mut usize, t: *mut usize) -> GqlabStatus {
    guard(|| {
        let m = model_ref(m)?;
        let order = verify_gq_axioms(&m.inner).or_else(|v| fail(GqlabStatus::NotGq, v.to_string()))?;
        write_out(s, order.s, "s")?;
        write_out(t, order.t, "t")
    })
}

/// Label of point `i`, borrowed from the model and valid until it is freed.
///
/// # Safety
/// `m` must be a live model handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_point_label(m: *const GqlabModel, i: usize, out: *mut *const c_char) -> GqlabStatus {
    guard(|| {
        let m = model_ref(m)?;
        let label = m.labels.get(i).ok_or((GqlabStatus::OutOfRange, format!("point {i} out of range")))?;
        write_out(out, label.as_ptr(), "out")
    })
}

/// Writes the point indices of line `i` into `points[0..cap]` and its length into `len`.
///
/// # Safety
/// `m` must be a live model handle; `points` must hold `cap` writable entries; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_line(m: *const GqlabModel, i: usize, points: *mut usize, cap: usize, len: *mut usize) -> GqlabStatus {
    guard(|| {
        let m = model_ref(m)?;
        let line = m.inner.lines.get(i).ok_or((GqlabStatus::OutOfRange, format!("line {i} out of range")))?;
        write_out(len, line.len(), "len")?;
        if points.is_null() {
            return fail(GqlabStatus::NullPointer, "points is null");
        }
        if cap < line.len() {
            return fail(GqlabStatus::OutOfRange, format!("buffer holds {cap}, line has {}", line.len()));
        }
        ptr::copy_nonoverlapping(line.as_ptr(), points, line.len());
        Ok(())
    })
}

/// Searches for an isomorphism `a → b`. On success `map[i]` is the image of point `i`
/// (both models have `cap` points or fewer) and `found` is set to 1; 0 if none exists.
///
/// # Safety
/// `a`, `b` must be live model handles; `map` must hold `cap` writable entries; `found` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gqlab_model_isomorphism(a: *const GqlabModel, b: *const GqlabModel, map: *mut usize, cap: usize, found: *mut i32) -> GqlabStatus {
    guard(|| {
        let (a, b) = (model_ref(a)?, model_ref(b)?);
        match find_isomorphism(&a.inner, &b.inner) {
            None => write_out(found, 0, "found"),
            Some(f) => {
                if map.is_null() {
                    return fail(GqlabStatus::NullPointer, "map is null");
                }
                if cap < f.map.len() {
                    return fail(GqlabStatus::OutOfRange, format!("buffer holds {cap}, map has {}", f.map.len()));
                }
                ptr::copy_nonoverlapping(f.map.as_ptr(), map, f.map.len());
                write_out(found, 1, "found")
            }
        }
    })
}

/// Runs the checks whose id starts with `prefix` (all when NULL).
///
/// # Safety
/// `prefix` must be NULL or a NUL-terminated string; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_suite_run(prefix: *const c_char, out: *mut *mut GqlabSuite) -> GqlabStatus {
    guard(|| {
        let filter = if prefix.is_null() { None } else { Some(str_arg(prefix, "prefix")?) };
        let inner = lift(run_suite(filter))?;
        let ids = inner.reports.iter().map(|r| CString::new(r.check_id.as_str()).expect("ids have no NUL")).collect();
        write_out(out, Box::into_raw(Box::new(GqlabSuite { inner, ids })), "out")
    })
}

/// # Safety
/// `s` must be NULL or a handle from [`gqlab_suite_run`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn gqlab_suite_free(s: *mut GqlabSuite) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Number of reports; 0 for a NULL handle.
///
/// # Safety
/// `s` must be NULL or a live suite handle.
#[no_mangle]
pub unsafe extern "C" fn gqlab_suite_len(s: *const GqlabSuite) -> usize {
    s.as_ref().map_or(0, |s| s.inner.reports.len())
}

/// 1 if every check passed, 0 if any failed, -1 for a NULL handle.
///
/// # Safety
/// `s` must be NULL or a live suite handle.
#[no_mangle]
pub unsafe extern "C" fn gqlab_suite_passed(s: *const GqlabSuite) -> i32 {
    s.as_ref().map_or(-1, |s| i32::from(s.inner.pass()))
}

/// Id of report `i`, borrowed from the suite.
///
/// # Safety
/// `s` must be a live suite handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_suite_check_id(s: *const GqlabSuite, i: usize, out: *mut *const c_char) -> GqlabStatus {
    guard(|| {
        let s = suite_ref(s)?;
        let id = s.ids.get(i).ok_or((GqlabStatus::OutOfRange, format!("report {i} out of range")))?;
        write_out(out, id.as_ptr(), "out")
    })
}

/// Writes 1 if report `i` passed, else 0.
///
/// # Safety
/// `s` must be a live suite handle; `pass` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_suite_check_pass(s: *const GqlabSuite, i: usize, pass: *mut i32) -> GqlabStatus {
    guard(|| {
        let s = suite_ref(s)?;
        let r = s.inner.reports.get(i).ok_or((GqlabStatus::OutOfRange, format!("report {i} out of range")))?;
        write_out(pass, i32::from(r.pass), "pass")
    })
}

/// The suite as versioned JSON; free with [`gqlab_string_free`].
///
/// # Safety
/// `s` must be a live suite handle; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_suite_json(s: *const GqlabSuite, out: *mut *mut c_char) -> GqlabStatus {
    guard(|| {
        let s = suite_ref(s)?;
        write_string(out, render_json(&s.inner))
    })
}

/// Classifies a matrix given by six bits `abcdef`. Writes its label and a
/// `GQLAB_CLASS_*` code; singular matrices give [`GqlabStatus::NotInS`].
/// The identity succeeds with label `I`.
///
/// # Safety
/// `bits` must be a NUL-terminated string; `label` and `class` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_classify(bits: *const c_char, label: *mut *mut c_char, class: *mut u32) -> GqlabStatus {
    guard(|| {
        let x: SymMat3 = lift(str_arg(bits, "bits")?.parse())?;
        let l = Atlas::global().label_of(x).ok_or((GqlabStatus::NotInS, format!("matrix {x} is singular")))?;
        let code = match l.class {
            MatrixClass::Identity => GQLAB_CLASS_IDENTITY,
            MatrixClass::D => GQLAB_CLASS_D,
            MatrixClass::U => GQLAB_CLASS_U,
            MatrixClass::V => GQLAB_CLASS_V,
        };
        write_out(class, code, "class")?;
        write_string(label, l.to_string())
    })
}

/// Writes 1 if the points `x`, `y` of S (six-bit strings) are collinear in GQ(S), else 0.
///
/// # Safety
/// `x` and `y` must be NUL-terminated strings; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_collinear(x: *const c_char, y: *const c_char, out: *mut i32) -> GqlabStatus {
    guard(|| {
        let x: SymMat3 = lift(str_arg(x, "x")?.parse())?;
        let y: SymMat3 = lift(str_arg(y, "y")?.parse())?;
        let c = lift(collinear_matrices(x, y))?;
        write_out(out, i32::from(c), "out")
    })
}

/// Renders an export (`what`: atlas|incidence|quadric|planes|isomorphism,
/// `format`: json|dot|csv) into a new string.
///
/// # Safety
/// `what` and `format` must be NUL-terminated strings; `out` must be valid for writing.
#[no_mangle]
pub unsafe extern "C" fn gqlab_export(what: *const c_char, format: *const c_char, out: *mut *mut c_char) -> GqlabStatus {
    guard(|| {
        let w: What = lift(str_arg(what, "what")?.parse())?;
        let f: Format = lift(str_arg(format, "format")?.parse())?;
        let text = lift(render(w, f, None))?;
        write_string(out, text)
    })
}
