//! C ABI over the `imcg` library.
//!
//! Graphs and colorings are opaque heap handles released with their `_free`
//! functions. Every fallible call returns an [`ImcgStatus`]; the message of
//! the most recent failure on the calling thread is available from
//! [`imcg_last_error`]. Vertex and edge ids are 1-based, as in the file
//! formats.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use imcg::coloring::{self, VertexSet};
use imcg::{algorithms, format, oracle};
use imcg::{
    Bipartition, EdgeColoring, EdgeId, Error, Multigraph, Part, SearchLimits, Verdict, VertexId,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImcgStatus {
    Ok = 0,
    NotExists = 1,
    InvalidInput = 2,
    Capped = 3,
    Internal = 4,
    NullPointer = 5,
}

/// Vertex set selector for validators and oracle queries.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImcgPart {
    All = 0,
    One = 1,
    Two = 2,
}

/// A multigraph, optionally with a bipartition.
pub struct ImcgGraph {
    graph: Multigraph,
    bipartition: Option<Bipartition>,
}

pub struct ImcgColoring {
    coloring: EdgeColoring,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn fail(e: Error) -> ImcgStatus {
    let status = match e {
        Error::Capped { .. } => ImcgStatus::Capped,
        Error::Invariant(_) => ImcgStatus::Internal,
        Error::OutOfRange { .. } => ImcgStatus::NotExists,
        _ => ImcgStatus::InvalidInput,
    };
    set_error(e.to_string());
    status
}

fn null_pointer(what: &str) -> ImcgStatus {
    set_error(format!("{what} is NULL"));
    ImcgStatus::NullPointer
}

/// Runs `f`, turning a panic into `Internal`.
fn guard(f: impl FnOnce() -> ImcgStatus) -> ImcgStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| {
        set_error("panic inside imcg");
        ImcgStatus::Internal
    })
}

fn limits(node_cap: u64) -> SearchLimits {
    let l = SearchLimits::default();
    if node_cap == 0 {
        l
    } else {
        l.with_cap(node_cap)
    }
}

fn vertex_set(g: &ImcgGraph, part: ImcgPart) -> Result<VertexSet, ImcgStatus> {
    let side = match part {
        ImcgPart::All => return Ok(VertexSet::all(&g.graph)),
        ImcgPart::One => Part::One,
        ImcgPart::Two => Part::Two,
    };
    match &g.bipartition {
        Some(b) => Ok(VertexSet::part(b, side)),
        None => {
            set_error("graph has no bipartition");
            Err(ImcgStatus::InvalidInput)
        }
    }
}

fn bipartition(g: &ImcgGraph) -> Result<&Bipartition, ImcgStatus> {
    g.bipartition.as_ref().ok_or_else(|| {
        set_error("graph has no bipartition");
        ImcgStatus::InvalidInput
    })
}

unsafe fn str_arg<'a>(text: *const c_char) -> Result<&'a str, ImcgStatus> {
    if text.is_null() {
        return Err(null_pointer("text"));
    }
    CStr::from_ptr(text).to_str().map_err(|_| {
        set_error("text is not valid UTF-8");
        ImcgStatus::InvalidInput
    })
}

unsafe fn emit_coloring(c: EdgeColoring, out: *mut *mut ImcgColoring) -> ImcgStatus {
    *out = Box::into_raw(Box::new(ImcgColoring { coloring: c }));
    ImcgStatus::Ok
}

fn emit_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! try_lib {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

macro_rules! deref {
    ($p:expr, $name:literal) => {
        match unsafe { $p.as_ref() } {
            Some(r) => r,
            None => return null_pointer($name),
        }
    };
}

/// Copies the message of the last failure on this thread, or returns NULL
/// if there was none. Free the result with [`imcg_string_free`].
#[no_mangle]
pub extern "C" fn imcg_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| {
        e.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |s| s.clone().into_raw())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn imcg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a graph file (`p imcg n m`, optional `b`/`bp` line, `e u v` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_parse(
    text: *const c_char,
    out: *mut *mut ImcgGraph,
) -> ImcgStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let text = try_status!(str_arg(text));
        let file = try_lib!(format::parse_graph(text));
        *out = Box::into_raw(Box::new(ImcgGraph {
            graph: file.graph,
            bipartition: file.bipartition,
        }));
        ImcgStatus::Ok
    })
}

/// Builds a graph on vertices `1..=n` from `m` endpoint pairs stored as
/// `endpoints[2i], endpoints[2i+1]`. `parts` is NULL or points to `n`
/// entries, each 1 or 2.
///
/// # Safety
/// `endpoints` must point to `2 * m` values, `parts` to `n` values or be
/// NULL, and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_new(
    n: usize,
    endpoints: *const usize,
    m: usize,
    parts: *const u8,
    out: *mut *mut ImcgGraph,
) -> ImcgStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    if endpoints.is_null() && m > 0 {
        return null_pointer("endpoints");
    }
    guard(|| {
        let flat = if m == 0 {
            &[][..]
        } else {
            std::slice::from_raw_parts(endpoints, 2 * m)
        };
        let edges: Vec<(VertexId, VertexId)> = flat
            .chunks_exact(2)
            .map(|p| (VertexId(p[0]), VertexId(p[1])))
            .collect();
        let graph = try_lib!(Multigraph::new(n, edges));
        let bipartition = if parts.is_null() {
            None
        } else {
            let raw = std::slice::from_raw_parts(parts, n);
            let mut sides = Vec::with_capacity(n);
            for (i, &p) in raw.iter().enumerate() {
                sides.push(match p {
                    1 => Part::One,
                    2 => Part::Two,
                    _ => {
                        set_error(format!("vertex {} has part {p}, expected 1 or 2", i + 1));
                        return ImcgStatus::InvalidInput;
                    }
                });
            }
            Some(try_lib!(Bipartition::new(&graph, sides)))
        };
        *out = Box::into_raw(Box::new(ImcgGraph { graph, bipartition }));
        ImcgStatus::Ok
    })
}

/// # Safety
/// `g` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_free(g: *mut ImcgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a valid handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_vertex_count(g: *const ImcgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.vertex_count())
}

/// # Safety
/// `g` must be a valid handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_edge_count(g: *const ImcgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.edge_count())
}

/// # Safety
/// `g` must be a valid handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_max_degree(g: *const ImcgGraph) -> usize {
    g.as_ref().map_or(0, |g| g.graph.max_degree())
}

/// # Safety
/// `g` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_degree(
    g: *const ImcgGraph,
    vertex: usize,
    out: *mut usize,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    if out.is_null() {
        return null_pointer("out");
    }
    *out = try_lib!(g.graph.degree(VertexId(vertex)));
    ImcgStatus::Ok
}

/// Serializes the graph in the file format. Free with [`imcg_string_free`].
///
/// # Safety
/// `g` must be a valid handle or NULL (which yields NULL).
#[no_mangle]
pub unsafe extern "C" fn imcg_graph_serialize(g: *const ImcgGraph) -> *mut c_char {
    match g.as_ref() {
        Some(g) => emit_string(format::serialize_graph(&g.graph, g.bipartition.as_ref())),
        None => ptr::null_mut(),
    }
}

/// Creates a coloring from `m` colors, color of edge `i` at `colors[i-1]`.
///
/// # Safety
/// `colors` must point to `m` values and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_coloring_new(
    colors: *const u32,
    m: usize,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    if colors.is_null() && m > 0 {
        return null_pointer("colors");
    }
    let v = if m == 0 {
        Vec::new()
    } else {
        std::slice::from_raw_parts(colors, m).to_vec()
    };
    emit_coloring(try_lib!(EdgeColoring::new(v)), out)
}

/// Parses a coloring file (`p imcol m t`, `c e col` lines).
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_coloring_parse(
    text: *const c_char,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let text = try_status!(str_arg(text));
        emit_coloring(try_lib!(format::parse_coloring(text)), out)
    })
}

/// # Safety
/// `c` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn imcg_coloring_free(c: *mut ImcgColoring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` must be a valid handle or NULL (which yields 0).
#[no_mangle]
pub unsafe extern "C" fn imcg_coloring_len(c: *const ImcgColoring) -> usize {
    c.as_ref().map_or(0, |c| c.coloring.len())
}

/// Color of edge `edge` (1-based).
///
/// # Safety
/// `c` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_coloring_get(
    c: *const ImcgColoring,
    edge: usize,
    out: *mut u32,
) -> ImcgStatus {
    let c = deref!(c, "coloring");
    if out.is_null() {
        return null_pointer("out");
    }
    if edge == 0 || edge > c.coloring.len() {
        set_error(format!(
            "edge {edge} is out of range 1..={}",
            c.coloring.len()
        ));
        return ImcgStatus::InvalidInput;
    }
    *out = c.coloring.color(EdgeId(edge));
    ImcgStatus::Ok
}

/// Serializes the coloring in the file format. Free with [`imcg_string_free`].
///
/// # Safety
/// `c` must be a valid handle or NULL (which yields NULL).
#[no_mangle]
pub unsafe extern "C" fn imcg_coloring_serialize(c: *const ImcgColoring) -> *mut c_char {
    match c.as_ref() {
        Some(c) => emit_string(format::serialize_coloring(&c.coloring)),
        None => ptr::null_mut(),
    }
}

/// Checks properness. Writes whether the coloring passes to `*valid`.
///
/// # Safety
/// `g`, `c` must be valid handles and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_is_proper(
    g: *const ImcgGraph,
    c: *const ImcgColoring,
    valid: *mut bool,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    let c = deref!(c, "coloring");
    if valid.is_null() {
        return null_pointer("valid");
    }
    *valid = coloring::is_proper(&g.graph, &c.coloring);
    ImcgStatus::Ok
}

/// Checks that `c` is an interval `t`-coloring on `part`.
///
/// # Safety
/// `g`, `c` must be valid handles and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_is_interval_on(
    g: *const ImcgGraph,
    c: *const ImcgColoring,
    part: ImcgPart,
    t: u32,
    valid: *mut bool,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    let c = deref!(c, "coloring");
    if valid.is_null() {
        return null_pointer("valid");
    }
    let r = try_status!(vertex_set(g, part));
    *valid = coloring::is_interval_on(&g.graph, &c.coloring, &r, t);
    ImcgStatus::Ok
}

/// Checks that `c` is a continuous `t`-coloring on `part`.
///
/// # Safety
/// `g`, `c` must be valid handles and `valid` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_is_continuous_on(
    g: *const ImcgGraph,
    c: *const ImcgColoring,
    part: ImcgPart,
    t: u32,
    valid: *mut bool,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    let c = deref!(c, "coloring");
    if valid.is_null() {
        return null_pointer("valid");
    }
    let r = try_status!(vertex_set(g, part));
    *valid = coloring::is_continuous_on(&g.graph, &c.coloring, &r, t);
    ImcgStatus::Ok
}

/// Continuous coloring on part 1 of a bipartite graph whose edges all have
/// a part-1 endpoint of degree at least the other endpoint's.
///
/// # Safety
/// `g` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_continuous_on_part(
    g: *const ImcgGraph,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let bip = try_status!(bipartition(g));
        emit_coloring(try_lib!(algorithms::continuous_on_part(&g.graph, bip)), out)
    })
}

/// Interval coloring on part 1 using every color once.
///
/// # Safety
/// `g` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_sequential_max_coloring(
    g: *const ImcgGraph,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let bip = try_status!(bipartition(g));
        emit_coloring(
            try_lib!(algorithms::sequential_max_coloring(&g.graph, bip)),
            out,
        )
    })
}

/// Folds an interval coloring on all vertices onto `Δ` colors.
///
/// # Safety
/// `g`, `c` must be valid handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_compress_to_delta(
    g: *const ImcgGraph,
    c: *const ImcgColoring,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    let c = deref!(c, "coloring");
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        emit_coloring(
            try_lib!(algorithms::compress_to_delta(&g.graph, &c.coloring)),
            out,
        )
    })
}

/// Steps an interval `t`-coloring of a regular graph down to `t - 1`.
///
/// # Safety
/// `g`, `c` must be valid handles and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_regular_step_down(
    g: *const ImcgGraph,
    c: *const ImcgColoring,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    let c = deref!(c, "coloring");
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        emit_coloring(
            try_lib!(algorithms::regular_step_down(&g.graph, &c.coloring)),
            out,
        )
    })
}

/// Interval coloring on part 1 with exactly `t` colors. Returns
/// `NotExists` when `t` lies outside `[w1, m]`. `node_cap = 0` selects the
/// default search budget.
///
/// # Safety
/// `g` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_realize_spectrum(
    g: *const ImcgGraph,
    t: u32,
    node_cap: u64,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        let bip = try_status!(bipartition(g));
        let r = try_lib!(algorithms::realize_spectrum(
            &g.graph,
            bip,
            t,
            &limits(node_cap)
        ));
        emit_coloring(r.coloring, out)
    })
}

/// Least and greatest `t` with an interval `t`-coloring on `part`.
/// Returns `NotExists` when there is none.
///
/// # Safety
/// `g` must be a valid handle; `least` and `greatest` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_interval_stats(
    g: *const ImcgGraph,
    part: ImcgPart,
    node_cap: u64,
    least: *mut u32,
    greatest: *mut u32,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    if least.is_null() || greatest.is_null() {
        return null_pointer("least/greatest");
    }
    guard(|| {
        let r = try_status!(vertex_set(g, part));
        let stats = try_lib!(oracle::interval_stats(&g.graph, &r, &limits(node_cap)));
        match (stats.w(), stats.big_w()) {
            (Some(w), Some(big)) => {
                *least = w;
                *greatest = big;
                ImcgStatus::Ok
            }
            _ => {
                set_error("no interval coloring exists");
                ImcgStatus::NotExists
            }
        }
    })
}

/// Whether an interval `t`-coloring on `part` exists. Writes the witness
/// to `out` when `out` is non-NULL and one exists.
///
/// # Safety
/// `g` must be a valid handle; `out` must be NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_solve_interval_on(
    g: *const ImcgGraph,
    part: ImcgPart,
    t: u32,
    node_cap: u64,
    out: *mut *mut ImcgColoring,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    guard(|| {
        let r = try_status!(vertex_set(g, part));
        let res = try_lib!(oracle::solve_interval_on(
            &g.graph,
            &r,
            t,
            &limits(node_cap)
        ));
        match (res.verdict, res.witness) {
            (Verdict::Exists, Some(w)) => {
                if !out.is_null() {
                    emit_coloring(w, out);
                }
                ImcgStatus::Ok
            }
            (Verdict::Capped, _) => fail(Error::Capped {
                nodes: res.nodes_explored,
            }),
            _ => ImcgStatus::NotExists,
        }
    })
}

/// Chromatic index by exhaustive search.
///
/// # Safety
/// `g` must be a valid handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn imcg_chromatic_index(
    g: *const ImcgGraph,
    node_cap: u64,
    out: *mut u32,
) -> ImcgStatus {
    let g = deref!(g, "graph");
    if out.is_null() {
        return null_pointer("out");
    }
    guard(|| {
        *out = try_lib!(oracle::chromatic_index(&g.graph, &limits(node_cap))).value;
        ImcgStatus::Ok
    })
}
