//! C ABI over `degencrit`.
//!
//! Graphs live behind an opaque `DcGraph` handle created by one of the
//! `dc_graph_*` constructors and released with `dc_graph_free`. Every fallible
//! call returns a `DcStatus`; on failure a description is kept per thread and
//! can be read with `dc_last_error`. Panics never cross the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use degencrit::cli::family_graph;
use degencrit::criticality::{criticality_report, double_col_critical_edges};
use degencrit::io::{parse_graph6, to_graph6};
use degencrit::{are_isomorphic, classify_dcc5, colouring_number, Error, Graph};

/// Opaque graph handle.
pub struct DcGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    SizeLimit = 4,
    BufferTooSmall = 5,
    ClaimViolated = 6,
    Panic = 7,
}

/// Summary of `dc_criticality`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DcCriticality {
    pub col: usize,
    pub is_col_critical: bool,
    pub is_col_vertex_critical: bool,
    pub is_double_col_critical: bool,
    pub is_two_connected: bool,
    pub dcc_edge_count: usize,
    pub edge_count: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> DcStatus {
    match e {
        Error::Graph6(_) | Error::EdgeList(_) => DcStatus::ParseError,
        Error::SizeGuard { .. } => DcStatus::SizeLimit,
        Error::ClaimViolated(_) => DcStatus::ClaimViolated,
        _ => DcStatus::InvalidArgument,
    }
}

struct Fail(DcStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(DcStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, records any error and converts panics to `DcStatus::Panic`.
fn guarded(body: impl FnOnce() -> Result<(), Fail>) -> DcStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => DcStatus::Ok,
        Ok(Err(Fail(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {message}"));
            DcStatus::Panic
        }
    }
}

unsafe fn graph<'a>(g: *const DcGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Fail(DcStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn store_handle(out: *mut *mut DcGraph, g: Graph) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output handle"));
    }
    *out = Box::into_raw(Box::new(DcGraph(g)));
    Ok(())
}

/// Copies `s` plus a terminating nul into `buf`. `needed` (if non-null)
/// receives the required size including the nul, also on failure.
unsafe fn write_text(s: &str, buf: *mut c_char, len: usize, needed: *mut usize) -> Result<(), Fail> {
    let size = s.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() || len < size {
        return Err(Fail(DcStatus::BufferTooSmall, format!("buffer holds {len} bytes, {size} needed")));
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    *buf.add(s.len()) = 0;
    Ok(())
}

/// Parses one graph6 string.
///
/// # Safety
/// `graph6` must be a valid nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_graph6(graph6: *const c_char, out: *mut *mut DcGraph) -> DcStatus {
    guarded(|| {
        let g = parse_graph6(text(graph6, "graph6")?)?;
        store_handle(out, g)
    })
}

/// Builds a graph on `n` vertices from `m` edges stored as `2m` consecutive
/// endpoints.
///
/// # Safety
/// `endpoints` must point to `2 * m` readable values (or be null when
/// `m == 0`) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_from_edges(
    n: usize,
    endpoints: *const usize,
    m: usize,
    out: *mut *mut DcGraph,
) -> DcStatus {
    guarded(|| {
        let flat: &[usize] = if m == 0 {
            &[]
        } else if endpoints.is_null() {
            return Err(null("endpoints"));
        } else {
            std::slice::from_raw_parts(endpoints, 2 * m)
        };
        let g = Graph::from_edge_list(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        store_handle(out, g)
    })
}

/// Builds a named family member from its command-line spelling, such as
/// `"cycle-square 6"`, `"glued k5 k222"` or `"torus 4 4"`.
///
/// # Safety
/// `family` must be a valid nul-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_family(family: *const c_char, out: *mut *mut DcGraph) -> DcStatus {
    guarded(|| {
        let mut words = text(family, "family")?.split_whitespace();
        let family = words
            .next()
            .ok_or_else(|| Fail(DcStatus::InvalidArgument, "empty family name".into()))?;
        let params: Vec<String> = words.map(String::from).collect();
        store_handle(out, family_graph(family, &params)?)
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `g` must come from a `dc_graph_*` constructor and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_free(g: *mut DcGraph) {
    if !g.is_null() {
        let _ = catch_unwind(AssertUnwindSafe(|| drop(Box::from_raw(g))));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_vertex_count(g: *const DcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.n())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_edge_count(g: *const DcGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.m())
}

/// Writes the graph6 encoding, nul-terminated.
///
/// # Safety
/// `g` must be a live handle, `buf` writable for `len` bytes, `needed` null
/// or writable.
#[no_mangle]
pub unsafe extern "C" fn dc_graph_to_graph6(
    g: *const DcGraph,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> DcStatus {
    guarded(|| write_text(&to_graph6(graph(g)?)?, buf, len, needed))
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_colouring_number(g: *const DcGraph, out: *mut usize) -> DcStatus {
    guarded(|| {
        let col = colouring_number(graph(g)?);
        *out.as_mut().ok_or_else(|| null("output"))? = col;
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_criticality(g: *const DcGraph, out: *mut DcCriticality) -> DcStatus {
    guarded(|| {
        let r = criticality_report(graph(g)?);
        *out.as_mut().ok_or_else(|| null("output"))? = DcCriticality {
            col: r.col,
            is_col_critical: r.is_col_critical,
            is_col_vertex_critical: r.is_col_vertex_critical,
            is_double_col_critical: r.is_double_col_critical,
            is_two_connected: r.is_two_connected,
            dcc_edge_count: r.dcc_edge_count,
            edge_count: r.edge_count,
        };
        Ok(())
    })
}

/// Writes the double-col-critical edges as `u, v` pairs into `endpoints`,
/// which holds `capacity` edges (`2 * capacity` values). `count` receives the
/// number of such edges, also when the buffer is too small.
///
/// # Safety
/// `g` must be a live handle, `endpoints` writable for `2 * capacity`
/// values (or null when `capacity == 0`), `count` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_dcc_edges(
    g: *const DcGraph,
    endpoints: *mut usize,
    capacity: usize,
    count: *mut usize,
) -> DcStatus {
    guarded(|| {
        let edges = double_col_critical_edges(graph(g)?);
        *count.as_mut().ok_or_else(|| null("count"))? = edges.len();
        if edges.len() > capacity || (!edges.is_empty() && endpoints.is_null()) {
            return Err(Fail(
                DcStatus::BufferTooSmall,
                format!("room for {capacity} edges, {} needed", edges.len()),
            ));
        }
        for (i, e) in edges.iter().enumerate() {
            *endpoints.add(2 * i) = e.u;
            *endpoints.add(2 * i + 1) = e.v;
        }
        Ok(())
    })
}

/// Writes the class label (for example `CycleSquare(6)`), nul-terminated.
///
/// # Safety
/// As for `dc_graph_to_graph6`.
#[no_mangle]
pub unsafe extern "C" fn dc_classify(g: *const DcGraph, buf: *mut c_char, len: usize, needed: *mut usize) -> DcStatus {
    guarded(|| write_text(&classify_dcc5(graph(g)?)?.to_string(), buf, len, needed))
}

/// # Safety
/// `a` and `b` must be live handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn dc_are_isomorphic(a: *const DcGraph, b: *const DcGraph, out: *mut bool) -> DcStatus {
    guarded(|| {
        let iso = are_isomorphic(graph(a)?, graph(b)?)?;
        *out.as_mut().ok_or_else(|| null("output"))? = iso;
        Ok(())
    })
}

/// Message of the last failed call on this thread, or null if it succeeded.
/// Valid until the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn dc_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}
