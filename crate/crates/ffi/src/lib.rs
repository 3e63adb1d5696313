//! C interface to `wiener-ecc`.
//!
//! Graphs live behind the opaque [`WeGraph`] handle. Every function returns a
//! [`WeStatus`]; on failure [`we_last_error`] describes the problem for the
//! calling thread. Strings returned by the library are released with
//! [`we_string_free`], graphs with [`we_graph_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use wiener_ecc::classify::classify_with;
use wiener_ecc::codec::{decode_record, encode_graph6_string, Padding};
use wiener_ecc::construct::FamilySpec;
use wiener_ecc::enumerate::{count, GeneratorConfig};
use wiener_ecc::harness::{run_search, Collect, HarnessError, SearchOptions, SearchTask};
use wiener_ecc::{profile, CodecError, Graph, GraphError};

/// Result codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DecodeError = 3,
    Disconnected = 4,
    TooLarge = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct WeGraph(Graph);

/// Scalar invariants of a connected graph.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WeProfile {
    pub order: u64,
    pub wiener: u64,
    pub c_w: u64,
    pub c_ec: u64,
    pub diam: u32,
    pub rad: u32,
}

/// Class memberships. `arithmetic_step` is 0 when the transmissions do not
/// form a progression with at least two terms.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WeClasses {
    pub transmission_regular: bool,
    pub transmission_irregular: bool,
    pub transmission_indivisible: bool,
    pub interval_irregular: bool,
    pub self_centered: bool,
    pub bidegreed: bool,
    pub center_regular_tree: bool,
    pub arithmetic_step: u64,
    pub ud_pair_count: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = s);
}

fn fail(status: WeStatus, msg: impl Into<String>) -> WeStatus {
    set_error(msg);
    status
}

fn graph_status(e: &GraphError) -> WeStatus {
    let status = match e {
        GraphError::Disconnected => WeStatus::Disconnected,
        GraphError::TooLarge { .. } => WeStatus::TooLarge,
        _ => WeStatus::InvalidArgument,
    };
    fail(status, e.to_string())
}

fn codec_status(e: &CodecError) -> WeStatus {
    fail(WeStatus::DecodeError, e.to_string())
}

fn guard(f: impl FnOnce() -> WeStatus) -> WeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(WeStatus::Panic, "internal panic"),
    }
}

unsafe fn c_str<'a>(s: *const c_char) -> Result<&'a str, WeStatus> {
    if s.is_null() {
        return Err(fail(WeStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(s).to_str().map_err(|_| fail(WeStatus::InvalidArgument, "string is not UTF-8"))
}

unsafe fn emit_graph(g: Graph, out: *mut *mut WeGraph) -> WeStatus {
    *out = Box::into_raw(Box::new(WeGraph(g)));
    WeStatus::Ok
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn we_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Decodes one graph6 or sparse6 record.
///
/// # Safety
/// `record` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn we_graph_from_graph6(record: *const c_char, out: *mut *mut WeGraph) -> WeStatus {
    guard(|| {
        if out.is_null() {
            return fail(WeStatus::NullPointer, "null output pointer");
        }
        let s = match c_str(record) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match decode_record(s.trim_end().as_bytes(), Padding::Strict) {
            Ok(g) => emit_graph(g, out),
            Err(e) => codec_status(&e),
        }
    })
}

/// Builds a graph on `order` vertices from `edge_count` pairs stored as
/// `edges[2i], edges[2i+1]`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` integers (or be null when
/// `edge_count` is 0) and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn we_graph_from_edges(
    order: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut WeGraph,
) -> WeStatus {
    guard(|| {
        if out.is_null() || (edges.is_null() && edge_count > 0) {
            return fail(WeStatus::NullPointer, "null pointer argument");
        }
        let flat = if edge_count == 0 { &[][..] } else { std::slice::from_raw_parts(edges, 2 * edge_count) };
        let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        match Graph::new(order, &pairs) {
            Ok(g) => emit_graph(g, out),
            Err(e) => graph_status(&e),
        }
    })
}

/// Builds a family member from a name such as `z:3` or `qminus:5`.
///
/// # Safety
/// `spec` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn we_graph_from_family(spec: *const c_char, out: *mut *mut WeGraph) -> WeStatus {
    guard(|| {
        if out.is_null() {
            return fail(WeStatus::NullPointer, "null output pointer");
        }
        let s = match c_str(spec) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match s.parse::<FamilySpec>().and_then(|f| f.build()) {
            Ok(g) => emit_graph(g, out),
            Err(e) => graph_status(&e),
        }
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn we_graph_free(g: *mut WeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn we_graph_order(g: *const WeGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// graph6 record of the graph, released with [`we_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn we_graph_to_graph6(g: *const WeGraph, out: *mut *mut c_char) -> WeStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(WeStatus::NullPointer, "null pointer argument");
        };
        let s = CString::new(encode_graph6_string(&g.0)).expect("graph6 is printable ASCII");
        *out = s.into_raw();
        WeStatus::Ok
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn we_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Scalar invariants of a connected graph.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn we_profile(g: *const WeGraph, out: *mut WeProfile) -> WeStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(WeStatus::NullPointer, "null pointer argument");
        };
        match profile(&g.0) {
            Ok(p) => {
                *out = WeProfile {
                    order: p.n as u64,
                    wiener: p.wiener,
                    c_w: p.c_w as u64,
                    c_ec: p.c_ec as u64,
                    diam: p.diam,
                    rad: p.rad,
                };
                WeStatus::Ok
            }
            Err(e) => graph_status(&e),
        }
    })
}

/// Writes the transmission of every vertex into `buf`, which must hold at
/// least `order` entries.
///
/// # Safety
/// `g` must be a live handle and `buf` must point to `len` writable values.
#[no_mangle]
pub unsafe extern "C" fn we_transmissions(g: *const WeGraph, buf: *mut u64, len: usize) -> WeStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), buf.is_null()) else {
            return fail(WeStatus::NullPointer, "null pointer argument");
        };
        if len < g.0.order() {
            return fail(WeStatus::BufferTooSmall, format!("buffer holds {len}, need {}", g.0.order()));
        }
        match profile(&g.0) {
            Ok(p) => {
                ptr::copy_nonoverlapping(p.tr.as_ptr(), buf, p.n);
                WeStatus::Ok
            }
            Err(e) => graph_status(&e),
        }
    })
}

/// Writes the eccentricity of every vertex into `buf`.
///
/// # Safety
/// As for [`we_transmissions`].
#[no_mangle]
pub unsafe extern "C" fn we_eccentricities(g: *const WeGraph, buf: *mut u32, len: usize) -> WeStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), buf.is_null()) else {
            return fail(WeStatus::NullPointer, "null pointer argument");
        };
        if len < g.0.order() {
            return fail(WeStatus::BufferTooSmall, format!("buffer holds {len}, need {}", g.0.order()));
        }
        match profile(&g.0) {
            Ok(p) => {
                ptr::copy_nonoverlapping(p.ec.as_ptr(), buf, p.n);
                WeStatus::Ok
            }
            Err(e) => graph_status(&e),
        }
    })
}

/// Class memberships of a connected graph.
///
/// # Safety
/// `g` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn we_classify(g: *const WeGraph, out: *mut WeClasses) -> WeStatus {
    guard(|| {
        let (Some(g), false) = (g.as_ref(), out.is_null()) else {
            return fail(WeStatus::NullPointer, "null pointer argument");
        };
        let r = match profile(&g.0).and_then(|p| classify_with(&g.0, &p)) {
            Ok(r) => r,
            Err(e) => return graph_status(&e),
        };
        *out = WeClasses {
            transmission_regular: r.transmission_regular,
            transmission_irregular: r.transmission_irregular,
            transmission_indivisible: r.transmission_indivisible,
            interval_irregular: r.interval_irregular,
            self_centered: r.self_centered,
            bidegreed: r.bidegreed,
            center_regular_tree: r.center_regular_tree,
            arithmetic_step: r.arithmetic_step.unwrap_or(0),
            ud_pair_count: r.ud_pairs.len() as u64,
        };
        WeStatus::Ok
    })
}

/// Number of connected graphs (`trees == false`) or free trees of order `n`
/// up to isomorphism.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn we_count_graphs(n: usize, trees: bool, out: *mut u64) -> WeStatus {
    guard(|| {
        if out.is_null() {
            return fail(WeStatus::NullPointer, "null output pointer");
        }
        let cfg = if trees { GeneratorConfig::trees(n) } else { GeneratorConfig::connected(n) };
        match count(&cfg) {
            Ok(c) => {
                *out = c;
                WeStatus::Ok
            }
            Err(e) => graph_status(&e),
        }
    })
}

/// Number of graphs of `universe` (e.g. `connected:8`, `trees:12`,
/// `g6:/path/file.g6`) satisfying `predicate` (e.g. `interval-irregular`).
/// `workers` of 0 uses all available cores.
///
/// # Safety
/// Both strings must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn we_search_count(
    universe: *const c_char,
    predicate: *const c_char,
    workers: usize,
    out: *mut u64,
) -> WeStatus {
    guard(|| {
        if out.is_null() {
            return fail(WeStatus::NullPointer, "null output pointer");
        }
        let (u, p) = match (c_str(universe), c_str(predicate)) {
            (Ok(u), Ok(p)) => (u, p),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        let task = (|| -> Result<SearchTask, HarnessError> {
            Ok(SearchTask {
                name: "ffi".into(),
                universe: u.parse()?,
                predicate: p.parse()?,
                collect: Collect::default(),
            })
        })();
        let task = match task {
            Ok(t) => t,
            Err(e) => return fail(WeStatus::InvalidArgument, e.to_string()),
        };
        let mut opts = SearchOptions::default();
        if workers > 0 {
            opts.workers = workers;
        }
        match run_search(&task, &opts) {
            Ok(r) => {
                *out = r.matches;
                WeStatus::Ok
            }
            Err(HarnessError::Codec { path, source }) => fail(WeStatus::DecodeError, format!("{path}: {source}")),
            Err(e) => fail(WeStatus::InvalidArgument, e.to_string()),
        }
    })
}
