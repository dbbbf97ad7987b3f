//! C ABI over `ochrom`.
//!
//! Graphs and polynomials cross the boundary as opaque handles created by
//! `ochrom_*` constructors and released with the matching `*_free`. Every
//! fallible call returns an [`OchromStatus`]; on failure
//! [`ochrom_last_error`] describes what went wrong on the calling thread.
//! Strings handed out by the library are NUL-terminated UTF-8 and must be
//! released with [`ochrom_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ochrom::colouring::{poly_bruteforce, poly_reduction, ReductionOptions};
use ochrom::graph::format::{parse_inline, to_inline};
use ochrom::graph::{parse, serialize, Format};
use ochrom::invariance::{chrom_invar, ochrom_equiv, ochrom_invar};
use ochrom::roots::isolate_real_roots;
use ochrom::structure::{check_coefficients, predict_coefficients};
use ochrom::{Error, IntPolynomial, MixedGraph};

/// Opaque graph handle.
pub struct OchromGraph {
    inner: MixedGraph,
}

/// Opaque integer polynomial handle.
pub struct OchromPoly {
    inner: IntPolynomial,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OchromStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidArgument = 4,
    SizeGuard = 5,
    KindMismatch = 6,
    Internal = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OchromFormat {
    /// Guess from the text: `n=` means mixed-text, a leading `&` digraph6,
    /// otherwise graph6.
    Auto = 0,
    Graph6 = 1,
    Digraph6 = 2,
    MixedText = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NUL bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> OchromStatus {
    match e {
        Error::Parse { .. } => OchromStatus::Parse,
        Error::SizeGuard { .. } => OchromStatus::SizeGuard,
        Error::KindMismatch { .. } => OchromStatus::KindMismatch,
        _ => OchromStatus::InvalidArgument,
    }
}

fn fail(status: OchromStatus, msg: impl Into<String>) -> OchromStatus {
    set_error(msg.into());
    status
}

fn from_result<T>(r: Result<T, Error>, out: impl FnOnce(T)) -> OchromStatus {
    match r {
        Ok(v) => {
            clear_error();
            out(v);
            OchromStatus::Ok
        }
        Err(e) => fail(status_of(&e), e.to_string()),
    }
}

/// Runs `body`, turning a panic into [`OchromStatus::Internal`] so unwinding
/// never crosses the boundary.
fn guarded(body: impl FnOnce() -> OchromStatus) -> OchromStatus {
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(body)) {
        Ok(s) => s,
        Err(_) => fail(OchromStatus::Internal, "internal error"),
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, OchromStatus> {
    if p.is_null() {
        return Err(fail(OchromStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(OchromStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) {
    *out = CString::new(s)
        .expect("library strings hold no NUL")
        .into_raw();
}

fn core_format(f: OchromFormat) -> Option<Format> {
    match f {
        OchromFormat::Auto => None,
        OchromFormat::Graph6 => Some(Format::Graph6),
        OchromFormat::Digraph6 => Some(Format::Digraph6),
        OchromFormat::MixedText => Some(Format::MixedText),
    }
}

fn detect(text: &str) -> Format {
    let t = text.trim_start();
    if t.starts_with('&') || t.starts_with(">>digraph6<<") {
        Format::Digraph6
    } else if t.contains("n=") || t.starts_with('#') {
        Format::MixedText
    } else {
        Format::Graph6
    }
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(OchromStatus::NullPointer, concat!("null argument: ", stringify!($p)));
        })+
    };
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ochrom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next library call on the same thread.
#[no_mangle]
pub extern "C" fn ochrom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses `text`; mixed-text accepts `;` in place of newlines.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_graph_parse(
    text: *const c_char,
    format: OchromFormat,
    out: *mut *mut OchromGraph,
) -> OchromStatus {
    guarded(|| {
        non_null!(out);
        let text = match read_str(text) {
            Ok(t) => t,
            Err(s) => return s,
        };
        let parsed = match core_format(format).unwrap_or_else(|| detect(text)) {
            Format::MixedText => parse_inline(text),
            f => parse(text.trim(), f),
        };
        from_result(parsed, |g| {
            *out = Box::into_raw(Box::new(OchromGraph { inner: g }))
        })
    })
}

/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ochrom_graph_free(graph: *mut OchromGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for NULL.
///
/// # Safety
/// `graph` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ochrom_graph_vertex_count(graph: *const OchromGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// Encodes the graph; `OchromFormat::Auto` yields the inline mixed-text form.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_graph_serialize(
    graph: *const OchromGraph,
    format: OchromFormat,
    out: *mut *mut c_char,
) -> OchromStatus {
    guarded(|| {
        non_null!(graph, out);
        let g = &(*graph).inner;
        let s = match core_format(format) {
            None => Ok(to_inline(g)),
            Some(f) => serialize(g, f),
        };
        from_result(s, |s| write_string(out, s))
    })
}

/// Polynomial by the addition-identification recursion.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_poly_reduction(
    graph: *const OchromGraph,
    max_vertices: usize,
    out: *mut *mut OchromPoly,
) -> OchromStatus {
    guarded(|| {
        non_null!(graph, out);
        let opts = ReductionOptions {
            max_vertices,
            ..ReductionOptions::default()
        };
        from_result(poly_reduction(&(*graph).inner, opts), |(p, _)| {
            *out = Box::into_raw(Box::new(OchromPoly { inner: p }))
        })
    })
}

/// Polynomial interpolated from exhaustive colouring counts.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_poly_bruteforce(
    graph: *const OchromGraph,
    max_vertices: usize,
    out: *mut *mut OchromPoly,
) -> OchromStatus {
    guarded(|| {
        non_null!(graph, out);
        from_result(poly_bruteforce(&(*graph).inner, max_vertices), |p| {
            *out = Box::into_raw(Box::new(OchromPoly { inner: p }))
        })
    })
}

/// # Safety
/// `poly` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ochrom_poly_free(poly: *mut OchromPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Degree, or -1 for the zero polynomial or NULL.
///
/// # Safety
/// `poly` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ochrom_poly_degree(poly: *const OchromPoly) -> isize {
    poly.as_ref()
        .and_then(|p| p.inner.degree())
        .map_or(-1, |d| d as isize)
}

/// Whether both handles hold the same polynomial; false if either is NULL.
///
/// # Safety
/// Both arguments must be NULL or live handles.
#[no_mangle]
pub unsafe extern "C" fn ochrom_poly_equal(a: *const OchromPoly, b: *const OchromPoly) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.inner == b.inner,
        _ => false,
    }
}

/// Text such as `x^4 - 4x^3 + 5x^2 - 2x`.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_poly_to_string(
    poly: *const OchromPoly,
    out: *mut *mut c_char,
) -> OchromStatus {
    guarded(|| {
        non_null!(poly, out);
        clear_error();
        write_string(out, (*poly).inner.to_string());
        OchromStatus::Ok
    })
}

/// JSON array of decimal strings, constant term first.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_poly_to_json(
    poly: *const OchromPoly,
    out: *mut *mut c_char,
) -> OchromStatus {
    guarded(|| {
        non_null!(poly, out);
        clear_error();
        write_string(
            out,
            serde_json::to_string(&(*poly).inner).expect("serializable"),
        );
        OchromStatus::Ok
    })
}

unsafe fn graph_json(
    graph: *const OchromGraph,
    out: *mut *mut c_char,
    f: impl FnOnce(&MixedGraph) -> Result<serde_json::Value, Error>,
) -> OchromStatus {
    guarded(|| {
        non_null!(graph, out);
        from_result(f(&(*graph).inner), |v| write_string(out, v.to_string()))
    })
}

/// Structure report with predicted and computed coefficients, as JSON.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_analyze_json(
    graph: *const OchromGraph,
    max_vertices: usize,
    out: *mut *mut c_char,
) -> OchromStatus {
    graph_json(graph, out, |g| {
        let report = predict_coefficients(g);
        let opts = ReductionOptions {
            max_vertices,
            ..ReductionOptions::default()
        };
        let (p, _) = poly_reduction(g, opts)?;
        let check = check_coefficients(&report, &p);
        Ok(serde_json::json!({
            "structure": report,
            "polynomial": p,
            "check": check,
            "agrees": check.agrees(),
            "closure_agrees": check.closure_agrees(),
        }))
    })
}

/// Invariance verdict for an oriented graph, as JSON.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_invar_json(
    graph: *const OchromGraph,
    out: *mut *mut c_char,
) -> OchromStatus {
    graph_json(graph, out, |g| {
        Ok(serde_json::to_value(ochrom_invar(g)?).expect("serializable"))
    })
}

/// Invariant-orientation verdict for a simple graph, as JSON.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_orient_json(
    graph: *const OchromGraph,
    out: *mut *mut c_char,
) -> OchromStatus {
    graph_json(graph, out, |g| {
        Ok(serde_json::to_value(chrom_invar(g)?).expect("serializable"))
    })
}

/// Equivalence verdict for an oriented graph, as JSON; exhaustive search up
/// to `search_limit` vertices.
///
/// # Safety
/// `graph` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_equiv_json(
    graph: *const OchromGraph,
    search_limit: usize,
    out: *mut *mut c_char,
) -> OchromStatus {
    graph_json(graph, out, |g| {
        Ok(serde_json::to_value(ochrom_equiv(g, search_limit)?).expect("serializable"))
    })
}

/// Isolating intervals of width at most `2^-precision` for every real root,
/// as a JSON array.
///
/// # Safety
/// `poly` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ochrom_roots_json(
    poly: *const OchromPoly,
    precision: u32,
    out: *mut *mut c_char,
) -> OchromStatus {
    guarded(|| {
        non_null!(poly, out);
        let p = &(*poly).inner;
        if precision == 0 {
            return fail(OchromStatus::InvalidArgument, "precision must be positive");
        }
        if p.is_zero() {
            return fail(
                OchromStatus::InvalidArgument,
                "the zero polynomial has no isolated roots",
            );
        }
        clear_error();
        write_string(
            out,
            serde_json::to_string(&isolate_real_roots(p, precision)).expect("serializable"),
        );
        OchromStatus::Ok
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ochrom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
