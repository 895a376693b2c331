//! C ABI over `gdiff-core`.
//!
//! Graphs are opaque `GdiffGraph` handles owned by the caller and released
//! with `gdiff_graph_free`. Every fallible call returns a `GdiffStatus`; on
//! failure `gdiff_last_error_message` describes the error for the calling
//! thread. Strings returned through `char **` out-parameters are owned by the
//! caller and released with `gdiff_string_free`. Vertex sets cross the
//! boundary as 64-bit masks, bit `v` standing for vertex `v`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use gdiff_core::codec::{parse_graph6, write_graph6};
use gdiff_core::families::{generate, FamilySpec};
use gdiff_core::harness::{run_proposition, CheckStatus, PropId};
use gdiff_core::solvers::{
    differential_exact, differential_of_r, domination_number, full_record, independence_number,
    roman_domination_number, vertex_cover_number, RMode,
};
use gdiff_core::{build_r, Error, Graph, SearchOptions, VertexSet};

/// Opaque graph handle.
pub struct GdiffGraph(Graph);

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GdiffStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    OutOfRange = 4,
    CapacityExceeded = 5,
    InvalidArgument = 6,
    BudgetExceeded = 7,
    TooLarge = 8,
    NotConnectedOrTooSmall = 9,
    EmptyGraph = 10,
    Internal = 99,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GdiffCheckStatus {
    Pass = 0,
    Fail = 1,
    Vacuous = 2,
    Skipped = 3,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> GdiffStatus {
    match e {
        Error::VertexOutOfRange { .. } | Error::NotAMember(_) | Error::NotAnEdge(..) => GdiffStatus::OutOfRange,
        Error::CapacityExceeded(_) => GdiffStatus::CapacityExceeded,
        Error::SelfLoop(_) | Error::DuplicateEdge(..) | Error::InvalidFamily(_) => GdiffStatus::InvalidArgument,
        Error::BudgetExceeded(_) => GdiffStatus::BudgetExceeded,
        Error::TooLarge { .. } => GdiffStatus::TooLarge,
        Error::NotConnectedOrTooSmall => GdiffStatus::NotConnectedOrTooSmall,
        Error::EmptyGraph => GdiffStatus::EmptyGraph,
        Error::Graph6(_) | Error::EdgeList { .. } => GdiffStatus::ParseError,
    }
}

struct Fault(GdiffStatus, String);

impl From<Error> for Fault {
    fn from(e: Error) -> Self {
        Fault(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fault {
    Fault(GdiffStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fault>) -> GdiffStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            GdiffStatus::Ok
        }
        Ok(Err(Fault(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            GdiffStatus::Internal
        }
    }
}

unsafe fn graph<'a>(g: *const GdiffGraph) -> Result<&'a Graph, Fault> {
    g.as_ref().map(|h| &h.0).ok_or_else(|| null("graph"))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Fault> {
    if s.is_null() {
        return Err(null("string"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Fault(GdiffStatus::InvalidUtf8, e.to_string()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Fault> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_graph(out: *mut *mut GdiffGraph, g: Graph) -> Result<(), Fault> {
    put(out, Box::into_raw(Box::new(GdiffGraph(g))))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fault> {
    let c = CString::new(s).map_err(|e| Fault(GdiffStatus::Internal, e.to_string()))?;
    put(out, c.into_raw())
}

fn opts(budget: u64) -> SearchOptions {
    SearchOptions::default().with_budget(budget)
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn gdiff_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses one graph6 string.
#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_from_graph6(text6: *const c_char, out: *mut *mut GdiffGraph) -> GdiffStatus {
    guard(|| put_graph(out, parse_graph6(text(text6)?)?))
}

/// Builds a graph on `n` vertices from `edge_count` pairs stored flat in
/// `edges` (`a0, b0, a1, b1, ...`).
#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut GdiffGraph,
) -> GdiffStatus {
    guard(|| {
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1])))?;
        put_graph(out, g)
    })
}

/// Builds a family member from a spec such as `wheel:6` or
/// `complete_bipartite:2,3`.
#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_family(spec: *const c_char, out: *mut *mut GdiffGraph) -> GdiffStatus {
    guard(|| {
        let spec: FamilySpec = text(spec)?.parse()?;
        put_graph(out, generate(&spec)?)
    })
}

/// Releases a handle; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_free(g: *mut GdiffGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_order(g: *const GdiffGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.order())
}

/// Number of edges, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_size(g: *const GdiffGraph) -> usize {
    g.as_ref().map_or(0, |h| h.0.size())
}

#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_to_graph6(g: *const GdiffGraph, out: *mut *mut c_char) -> GdiffStatus {
    guard(|| put_string(out, write_graph6(graph(g)?)))
}

/// Releases a string returned by this library; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn gdiff_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `R(G)` as a new handle; base vertices keep their indices and edge
/// vertices follow in lexicographic edge order.
#[no_mangle]
pub unsafe extern "C" fn gdiff_graph_roperator(g: *const GdiffGraph, out: *mut *mut GdiffGraph) -> GdiffStatus {
    guard(|| put_graph(out, build_r(graph(g)?)?.total().clone()))
}

/// `|B(S)| - |S|` for the set `mask`.
#[no_mangle]
pub unsafe extern "C" fn gdiff_set_differential(g: *const GdiffGraph, mask: u64, out: *mut i64) -> GdiffStatus {
    guard(|| put(out, graph(g)?.set_differential(VertexSet::from_bits(mask))?))
}

/// `∂(G)` with the lexicographically smallest differential set.
#[no_mangle]
pub unsafe extern "C" fn gdiff_differential(
    g: *const GdiffGraph,
    budget: u64,
    value: *mut i64,
    witness: *mut u64,
) -> GdiffStatus {
    guard(|| {
        let r = differential_exact(graph(g)?, None, &opts(budget))?;
        put(value, r.value)?;
        put(witness, r.witness.bits())
    })
}

/// `∂(R(G))` for connected `G` of order at least 3, searched inside `V`.
#[no_mangle]
pub unsafe extern "C" fn gdiff_differential_of_r(
    g: *const GdiffGraph,
    budget: u64,
    value: *mut i64,
    witness: *mut u64,
) -> GdiffStatus {
    guard(|| {
        let rg = build_r(graph(g)?)?;
        let r = differential_of_r(&rg, RMode::VRestricted, &opts(budget))?;
        put(value, r.value)?;
        put(witness, r.witness.bits())
    })
}

/// Which classical invariant `gdiff_invariant` computes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GdiffInvariant {
    Domination = 0,
    VertexCover = 1,
    Independence = 2,
    RomanDomination = 3,
}

#[no_mangle]
pub unsafe extern "C" fn gdiff_invariant(
    g: *const GdiffGraph,
    which: GdiffInvariant,
    budget: u64,
    out: *mut usize,
) -> GdiffStatus {
    guard(|| {
        let g = graph(g)?;
        let o = opts(budget);
        let v = match which {
            GdiffInvariant::Domination => domination_number(g, false, &o)?.gamma,
            GdiffInvariant::VertexCover => vertex_cover_number(g, &o)?.tau,
            GdiffInvariant::Independence => independence_number(g, &o)?.alpha,
            GdiffInvariant::RomanDomination => roman_domination_number(g, &o)?.gamma_r,
        };
        put(out, v)
    })
}

/// The full invariant record as a JSON object.
#[no_mangle]
pub unsafe extern "C" fn gdiff_record_json(g: *const GdiffGraph, budget: u64, out: *mut *mut c_char) -> GdiffStatus {
    guard(|| {
        let rec = full_record(graph(g)?, &opts(budget))?;
        put_string(out, serde_json::to_string(&rec).expect("records serialize"))
    })
}

/// Runs check `prop` (1..=18) on `g`. `report_json` may be null; otherwise
/// it receives the report as a JSON object.
#[no_mangle]
pub unsafe extern "C" fn gdiff_verify(
    g: *const GdiffGraph,
    prop: u32,
    budget: u64,
    status: *mut GdiffCheckStatus,
    report_json: *mut *mut c_char,
) -> GdiffStatus {
    guard(|| {
        let id: PropId = prop
            .to_string()
            .parse()
            .map_err(|_| Fault(GdiffStatus::InvalidArgument, format!("no proposition {prop}")))?;
        let report = run_proposition(id, graph(g)?, &opts(budget));
        put(
            status,
            match report.status {
                CheckStatus::Pass => GdiffCheckStatus::Pass,
                CheckStatus::Fail => GdiffCheckStatus::Fail,
                CheckStatus::Vacuous => GdiffCheckStatus::Vacuous,
                CheckStatus::Skipped => GdiffCheckStatus::Skipped,
            },
        )?;
        if !report_json.is_null() {
            put_string(report_json, serde_json::to_string(&report).expect("reports serialize"))?;
        }
        Ok(())
    })
}
