//! C ABI over the hypergraphic engine.
//!
//! Objects cross the boundary as opaque handles owned by the caller and
//! released with the matching `*_free`. Every call returns an [`HgStatus`];
//! on failure a description is available from [`hg_last_error_message`].
//! Strings handed out by the library are released with [`hg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hypergraphic::{
    antipode_from_faces, enumerate_faces, f_vector, is_simple, normalized_volume, orientation_antipode,
    takeuchi_antipode, AntipodeResult, Error, Hypergraph, Limits,
};

/// Result of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    BoundExceeded = 3,
    BufferTooSmall = 4,
    Internal = 5,
    Panic = 6,
}

/// Engine for [`hg_antipode`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HgAntipodeMethod {
    Takeuchi = 0,
    Orientation = 1,
    Faces = 2,
}

pub struct HgHypergraph {
    inner: Hypergraph,
}

pub struct HgAntipode {
    inner: AntipodeResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).ok());
}

fn status_of(e: &Error) -> HgStatus {
    match e {
        Error::BoundExceeded { .. } | Error::TooManyVertices { .. } | Error::TooManyCandidates { .. } => {
            HgStatus::BoundExceeded
        }
        Error::Invariant { .. } | Error::Overflow(_) => HgStatus::Internal,
        _ => HgStatus::InvalidInput,
    }
}

struct Fail(HgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null() -> Fail {
    Fail(HgStatus::NullPointer, "null pointer argument".into())
}

/// Runs `f`, recording any failure or panic for [`hg_last_error_message`].
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> HgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => HgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("panic: {msg}"));
            HgStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(null)
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn limits(max_n: usize) -> Limits {
    if max_n == 0 {
        Limits::default()
    } else {
        Limits::with_max_n(max_n)
    }
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail(HgStatus::Internal, "output contains a NUL byte".into()))
}

/// Copies `values` into `buf` when it fits; `out_len` always receives the full length.
unsafe fn fill<T: Copy>(values: &[T], buf: *mut T, cap: usize, out_len: *mut usize) -> Result<(), Fail> {
    put(out_len, values.len())?;
    if values.len() > cap {
        return Err(Fail(
            HgStatus::BufferTooSmall,
            format!("{} entries needed, buffer holds {cap}", values.len()),
        ));
    }
    if !values.is_empty() {
        if buf.is_null() {
            return Err(null());
        }
        ptr::copy_nonoverlapping(values.as_ptr(), buf, values.len());
    }
    Ok(())
}

/// Message for the most recent failure on this thread, or null.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hg_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses `{"n": <int>, "edges": [[v, ...], ...]}`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_from_json(json: *const c_char, out: *mut *mut HgHypergraph) -> HgStatus {
    guard(|| {
        if json.is_null() {
            return Err(null());
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|_| Fail(HgStatus::InvalidInput, "input is not UTF-8".into()))?;
        let inner = Hypergraph::from_json(text).map_err(|e| match e {
            hypergraphic::HypergraphParseError::Invalid(err) => Fail::from(err),
            other => Fail(HgStatus::InvalidInput, other.to_string()),
        })?;
        put(out, Box::into_raw(Box::new(HgHypergraph { inner })))
    })
}

/// Builds a hypergraph on `{1..n}` from `edge_count` vertex lists stored back to back
/// in `vertices`; edge `i` is `vertices[offsets[i]..offsets[i + 1]]`.
///
/// # Safety
/// `offsets` must hold `edge_count + 1` entries and `vertices` at least `offsets[edge_count]`.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_new(
    n: usize,
    offsets: *const usize,
    vertices: *const u32,
    edge_count: usize,
    out: *mut *mut HgHypergraph,
) -> HgStatus {
    guard(|| {
        let mut edges: Vec<&[u32]> = Vec::with_capacity(edge_count);
        if edge_count > 0 {
            if offsets.is_null() {
                return Err(null());
            }
            let offsets = std::slice::from_raw_parts(offsets, edge_count + 1);
            if offsets.windows(2).any(|w| w[0] > w[1]) {
                return Err(Fail(HgStatus::InvalidInput, "offsets must be non-decreasing".into()));
            }
            let total = offsets[edge_count];
            if total > 0 && vertices.is_null() {
                return Err(null());
            }
            let all = if total == 0 { &[][..] } else { std::slice::from_raw_parts(vertices, total) };
            edges.extend(offsets.windows(2).map(|w| &all[w[0]..w[1]]));
        }
        let inner = Hypergraph::new(n, &edges)?;
        put(out, Box::into_raw(Box::new(HgHypergraph { inner })))
    })
}

/// # Safety
/// `h` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_free(h: *mut HgHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_vertex_count(h: *const HgHypergraph, out: *mut usize) -> HgStatus {
    guard(|| put(out, get(h)?.inner.n()))
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_hypergraph_edge_count(h: *const HgHypergraph, out: *mut usize) -> HgStatus {
    guard(|| put(out, get(h)?.inner.edge_count()))
}

/// Computes the antipode; `max_n = 0` keeps the default enumeration bound.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_antipode(
    h: *const HgHypergraph,
    method: HgAntipodeMethod,
    max_n: usize,
    out: *mut *mut HgAntipode,
) -> HgStatus {
    guard(|| {
        let g = &get(h)?.inner;
        let lim = limits(max_n);
        let inner = match method {
            HgAntipodeMethod::Takeuchi => takeuchi_antipode(g, &lim)?,
            HgAntipodeMethod::Orientation => orientation_antipode(g, &lim)?,
            HgAntipodeMethod::Faces => antipode_from_faces(g, &lim)?,
        };
        put(out, Box::into_raw(Box::new(HgAntipode { inner })))
    })
}

/// # Safety
/// `a` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hg_antipode_free(a: *mut HgAntipode) {
    if !a.is_null() {
        drop(Box::from_raw(a));
    }
}

/// Number of flats, one term each.
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_antipode_len(a: *const HgAntipode, out: *mut usize) -> HgStatus {
    guard(|| put(out, get(a)?.inner.len()))
}

fn term(a: &HgAntipode, index: usize) -> Result<&(hypergraphic::Flat, i64), Fail> {
    a.inner
        .terms()
        .get(index)
        .ok_or_else(|| Fail(HgStatus::InvalidInput, format!("term {index} out of range")))
}

/// Coefficient of term `index`.
///
/// # Safety
/// `a` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_antipode_coefficient(a: *const HgAntipode, index: usize, out: *mut i64) -> HgStatus {
    guard(|| put(out, term(get(a)?, index)?.1))
}

/// Edge indices of the flat of term `index`, in increasing order.
///
/// # Safety
/// `a` must be a live handle; `buf` must hold `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn hg_antipode_flat(
    a: *const HgAntipode,
    index: usize,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> HgStatus {
    guard(|| {
        let edges = term(get(a)?, index)?.0.edges().to_vec();
        fill(&edges, buf, cap, out_len)
    })
}

/// `[{"flat": [...], "coefficient": c}, ...]`, released with [`hg_string_free`].
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_antipode_to_json(a: *const HgAntipode, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let text = get(a)?.inner.to_json().to_string();
        put(out, c_string(text)?)
    })
}

/// Writes `f_0, ..., f_d` into `buf`. With too small a buffer the call fails with
/// `BufferTooSmall` after storing the needed length in `out_len`.
///
/// # Safety
/// `h` must be a live handle; `buf` must hold `cap` entries.
#[no_mangle]
pub unsafe extern "C" fn hg_f_vector(
    h: *const HgHypergraph,
    max_n: usize,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> HgStatus {
    guard(|| {
        let f = f_vector(&get(h)?.inner, &limits(max_n))?;
        fill(f.counts(), buf, cap, out_len)
    })
}

/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_is_simple(h: *const HgHypergraph, max_n: usize, out: *mut bool) -> HgStatus {
    guard(|| put(out, is_simple(&get(h)?.inner, &limits(max_n))?))
}

/// Normalized volume of a connected hypergraph.
///
/// # Safety
/// `h` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hg_normalized_volume(h: *const HgHypergraph, out: *mut u64) -> HgStatus {
    guard(|| put(out, normalized_volume(&get(h)?.inner)?))
}

/// Every face as a JSON array of keys, released with [`hg_string_free`].
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hg_faces_json(h: *const HgHypergraph, max_n: usize, out: *mut *mut c_char) -> HgStatus {
    guard(|| {
        let faces = enumerate_faces(&get(h)?.inner, &limits(max_n))?;
        let doc: Vec<_> = faces.iter().map(|k| k.to_json()).collect();
        put(out, c_string(serde_json::Value::Array(doc).to_string())?)
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn hg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
