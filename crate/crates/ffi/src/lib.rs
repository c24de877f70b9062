//! C ABI over `peanocube`. Every function returns a [`PcStatus`]; results go through out-pointers.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use peanocube::euler::{beta_table, euler_characteristic};
use peanocube::hypermedian::{helly_number, is_hyper_median};
use peanocube::report::analyze;
use peanocube::{Error, Graph, Space};

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    OutOfRange = 4,
    InvalidEdge = 5,
    EmptyGraph = 6,
    NotPartialCube = 7,
    NotPeano = 8,
    NotHyperMedian = 9,
    TooLarge = 10,
    BadParams = 11,
    CertificationFailed = 12,
    Other = 13,
    Panic = 14,
}

impl From<&Error> for PcStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Parse(_) => PcStatus::Parse,
            Error::OutOfRange(_) => PcStatus::OutOfRange,
            Error::InvalidEdge(_) => PcStatus::InvalidEdge,
            Error::EmptyGraph => PcStatus::EmptyGraph,
            Error::NotPartialCube | Error::NotBipartite | Error::Disconnected => PcStatus::NotPartialCube,
            Error::NotPeano => PcStatus::NotPeano,
            Error::NotHyperMedian => PcStatus::NotHyperMedian,
            Error::TooLarge(..) | Error::TooLargeForOracle(..) => PcStatus::TooLarge,
            Error::BadParams(_) => PcStatus::BadParams,
            Error::CertificationFailed(_) => PcStatus::CertificationFailed,
            _ => PcStatus::Other,
        }
    }
}

/// Opaque graph handle.
pub struct PcGraph {
    graph: Graph,
}

fn guard(f: impl FnOnce() -> Result<(), PcStatus>) -> PcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PcStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => PcStatus::Panic,
    }
}

fn lift<T>(r: peanocube::Result<T>) -> Result<T, PcStatus> {
    r.map_err(|e| PcStatus::from(&e))
}

unsafe fn graph_ref<'a>(g: *const PcGraph) -> Result<&'a Graph, PcStatus> {
    g.as_ref().map(|h| &h.graph).ok_or(PcStatus::NullPointer)
}

/// Parses `{"vertices": n, "edges": [[u, v], ...]}` into a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_json(json: *const c_char, out: *mut *mut PcGraph) -> PcStatus {
    guard(|| {
        if json.is_null() || out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        let s = CStr::from_ptr(json).to_str().map_err(|_| PcStatus::InvalidUtf8)?;
        let graph = lift(Graph::from_json(s))?;
        *out = Box::into_raw(Box::new(PcGraph { graph }));
        Ok(())
    })
}

/// Builds a graph from `m` edges stored as `2 * m` endpoints.
///
/// # Safety
/// `edges` must point to `2 * m` values (may be null when `m` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_from_edges(
    n: usize,
    edges: *const usize,
    m: usize,
    out: *mut *mut PcGraph,
) -> PcStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && m > 0) {
            return Err(PcStatus::NullPointer);
        }
        let flat: &[usize] = if m == 0 { &[] } else { std::slice::from_raw_parts(edges, 2 * m) };
        let graph = lift(Graph::new(n, flat.chunks(2).map(|c| (c[0], c[1]))))?;
        *out = Box::into_raw(Box::new(PcGraph { graph }));
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_free(g: *mut PcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `n` and `m` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_graph_size(g: *const PcGraph, n: *mut usize, m: *mut usize) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if n.is_null() || m.is_null() {
            return Err(PcStatus::NullPointer);
        }
        *n = g.n();
        *m = g.m();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_is_partial_cube(g: *const PcGraph, out: *mut bool) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out.as_mut().ok_or(PcStatus::NullPointer)? = Space::new(g).is_partial_cube();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_is_peano(g: *const PcGraph, out: *mut bool) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out.as_mut().ok_or(PcStatus::NullPointer)? = Space::new(g).is_peano();
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_is_hyper_median(g: *const PcGraph, out: *mut bool) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        *out.as_mut().ok_or(PcStatus::NullPointer)? = is_hyper_median(&Space::new(g)).hyper_median;
        Ok(())
    })
}

/// Number of Θ-classes.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_isometric_dimension(g: *const PcGraph, out: *mut usize) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out.as_mut().ok_or(PcStatus::NullPointer)?;
        *out = lift(Space::new(g).idim())?;
        Ok(())
    })
}

/// Alternating sum of convex quasi-hypertori counts by dimension.
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_euler_sum(g: *const PcGraph, out: *mut i64) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out.as_mut().ok_or(PcStatus::NullPointer)?;
        let sp = Space::new(g);
        *out = euler_characteristic(&lift(beta_table(&sp))?);
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_helly_number(g: *const PcGraph, out: *mut usize) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        let out = out.as_mut().ok_or(PcStatus::NullPointer)?;
        *out = lift(helly_number(&Space::new(g)))?;
        Ok(())
    })
}

/// Full analysis report as JSON; release it with [`pc_string_free`].
///
/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pc_analyze_json(g: *const PcGraph, out: *mut *mut c_char) -> PcStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if out.is_null() {
            return Err(PcStatus::NullPointer);
        }
        *out = ptr::null_mut();
        let report = lift(analyze(g))?;
        let s = serde_json::to_string(&report).map_err(|_| PcStatus::Other)?;
        *out = CString::new(s).map_err(|_| PcStatus::Other)?.into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn pc_status_name(status: PcStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PcStatus::Ok => c"Ok",
        PcStatus::NullPointer => c"NullPointer",
        PcStatus::InvalidUtf8 => c"InvalidUtf8",
        PcStatus::Parse => c"ParseError",
        PcStatus::OutOfRange => c"OutOfRange",
        PcStatus::InvalidEdge => c"InvalidEdge",
        PcStatus::EmptyGraph => c"EmptyGraph",
        PcStatus::NotPartialCube => c"NotPartialCube",
        PcStatus::NotPeano => c"NotPeano",
        PcStatus::NotHyperMedian => c"NotHyperMedian",
        PcStatus::TooLarge => c"TooLarge",
        PcStatus::BadParams => c"BadParams",
        PcStatus::CertificationFailed => c"CertificationFailed",
        PcStatus::Other => c"Other",
        PcStatus::Panic => c"Panic",
    };
    s.as_ptr()
}
