//! C interface to `short_links`.
//!
//! Objects are opaque handles created by `sl_*_parse` or `sl_*_build_*` and
//! released with the matching `sl_*_free`. Every fallible function returns an
//! [`SlStatus`] and writes its result through an out-pointer; on failure
//! [`sl_last_error`] describes the problem. Strings returned through `char **`
//! are owned by the caller and released with [`sl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use short_links::format;
use short_links::metric::{cut_cone_decompose, five_gonal_violations, kgonal_violations, partial_cube};
use short_links::{build_kp, classify, kp_summary, report, Error, Graph, Partition, Quadrillage, SimplicialComplex};

/// Result of every fallible call. Input and guard codes match the exit codes
/// of the command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    /// Malformed text or an invalid argument.
    ErrInput = 2,
    /// The instance exceeds a size limit.
    ErrGuard = 3,
    /// A required pointer argument was null.
    ErrNullPointer = 4,
    /// A bug: the library panicked or produced an unrepresentable value.
    ErrInternal = 5,
}

/// Opaque simplicial complex.
pub struct SlComplex(SimplicialComplex);
/// Opaque graph.
pub struct SlGraph(Graph);
/// Opaque quadrillage.
pub struct SlQuad(Quadrillage);

/// Closed-form invariants of `K(P)`.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SlKpSummary {
    pub facet_count: u64,
    pub skeleton_m: usize,
    pub skeleton_h: usize,
    pub aut_order: u64,
    pub cox_order: u64,
    pub vertex_orbit_count: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

struct Failure(SlStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = if e.is_guard() { SlStatus::ErrGuard } else { SlStatus::ErrInput };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(SlStatus::ErrNullPointer, format!("{what} is null"))
}

/// Runs `body`, turning errors and panics into a status and a stored message.
fn call(body: impl FnOnce() -> Result<(), Failure>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SlStatus::Ok,
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal error");
            SlStatus::ErrInternal
        }
    }
}

unsafe fn read_str<'a>(s: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| Failure(SlStatus::ErrInput, format!("{what} is not UTF-8")))
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|_| Failure(SlStatus::ErrInternal, "string contains NUL".into()))?;
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn put_handle<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(Box::into_raw(Box::new(value)));
    Ok(())
}

fn partition(spec: &str) -> Result<Partition, Failure> {
    spec.parse::<Partition>().map_err(Failure::from)
}

/// Message for the most recent failure on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a `simplicial <n>` document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_parse(text: *const c_char, out: *mut *mut SlComplex) -> SlStatus {
    call(|| {
        let complex = format::parse_simplicial(read_str(text, "text")?)?;
        put_handle(out, SlComplex(complex))
    })
}

/// Builds `K(P)` for a partition written like `"1,2|3,4,5"`.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_build_kp(spec: *const c_char, out: *mut *mut SlComplex) -> SlStatus {
    call(|| {
        let p = partition(read_str(spec, "partition")?)?;
        put_handle(out, SlComplex(build_kp(&p)))
    })
}

/// # Safety
/// `complex` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_free(complex: *mut SlComplex) {
    if !complex.is_null() {
        drop(Box::from_raw(complex));
    }
}

/// Dimension, vertex count and facet count; any out-pointer may be null.
///
/// # Safety
/// `complex` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_counts(
    complex: *const SlComplex,
    dim: *mut usize,
    vertices: *mut usize,
    facets: *mut usize,
) -> SlStatus {
    call(|| {
        let k = &get(complex, "complex")?.0;
        for (out, value) in [(dim, k.dim()), (vertices, k.vertex_count()), (facets, k.facet_count())] {
            if !out.is_null() {
                out.write(value);
            }
        }
        Ok(())
    })
}

/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_euler_characteristic(complex: *const SlComplex, out: *mut i64) -> SlStatus {
    call(|| put(out, get(complex, "complex")?.0.euler_characteristic()))
}

/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_is_closed(complex: *const SlComplex, out: *mut bool) -> SlStatus {
    call(|| put(out, get(complex, "complex")?.0.is_closed()))
}

/// Link lengths as text, e.g. `"{3,4}"`. Requires a closed complex of
/// dimension at least 2.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_type(complex: *const SlComplex, out: *mut *mut c_char) -> SlStatus {
    call(|| {
        let ty = get(complex, "complex")?.0.complex_type()?;
        let items: Vec<String> = ty.iter().map(usize::to_string).collect();
        put_string(out, format!("{{{}}}", items.join(",")))
    })
}

/// The partition `P` with `complex ≅ K(P)`, e.g. `"1|2,3"`.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_classify(complex: *const SlComplex, out: *mut *mut c_char) -> SlStatus {
    call(|| {
        let p = classify(&get(complex, "complex")?.0)?;
        put_string(out, p.to_string())
    })
}

/// The complex in `simplicial <n>` format.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_to_string(complex: *const SlComplex, out: *mut *mut c_char) -> SlStatus {
    call(|| put_string(out, format::write_simplicial(&get(complex, "complex")?.0)))
}

/// The 1-skeleton as a new graph handle, vertices in increasing id order.
///
/// # Safety
/// `complex` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_complex_skeleton(complex: *const SlComplex, out: *mut *mut SlGraph) -> SlStatus {
    call(|| put_handle(out, SlGraph(get(complex, "complex")?.0.skeleton())))
}

/// Parses a `graph <n>` document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_graph_parse(text: *const c_char, out: *mut *mut SlGraph) -> SlStatus {
    call(|| {
        let graph = format::parse_graph(read_str(text, "text")?)?;
        put_handle(out, SlGraph(graph))
    })
}

/// # Safety
/// `graph` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sl_graph_free(graph: *mut SlGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// # Safety
/// `graph` must be a live handle; non-null outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_graph_counts(graph: *const SlGraph, vertices: *mut usize, edges: *mut usize) -> SlStatus {
    call(|| {
        let g = &get(graph, "graph")?.0;
        for (out, value) in [(vertices, g.vertex_count()), (edges, g.edge_count())] {
            if !out.is_null() {
                out.write(value);
            }
        }
        Ok(())
    })
}

/// Whether the graph is an isometric subgraph of a hypercube; `dim` (may be
/// null) receives the hypercube dimension, or 0.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_graph_is_partial_cube(graph: *const SlGraph, out: *mut bool, dim: *mut usize) -> SlStatus {
    call(|| {
        let labeling = partial_cube(&get(graph, "graph")?.0)?;
        if !dim.is_null() {
            dim.write(labeling.as_ref().map_or(0, |l| l.dim));
        }
        put(out, labeling.is_some())
    })
}

/// Whether the path metric satisfies every 5-gonal inequality.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_graph_is_five_gonal(graph: *const SlGraph, out: *mut bool) -> SlStatus {
    call(|| put(out, five_gonal_violations(&get(graph, "graph")?.0)?.is_empty()))
}

/// Whether the path metric satisfies the hypermetric inequalities with
/// `Σ|b_i| <= 2 * bound + 1`.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_graph_is_hypermetric(graph: *const SlGraph, bound: usize, out: *mut bool) -> SlStatus {
    call(|| put(out, kgonal_violations(&get(graph, "graph")?.0, bound)?.is_empty()))
}

/// Whether the path metric lies in the cut cone, decided exactly.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_graph_is_l1_embeddable(graph: *const SlGraph, out: *mut bool) -> SlStatus {
    call(|| put(out, cut_cone_decompose(&get(graph, "graph")?.0)?.is_feasible()))
}

/// Parses a `quad <n>` document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_quad_parse(text: *const c_char, out: *mut *mut SlQuad) -> SlStatus {
    call(|| {
        let quad = format::parse_quad(read_str(text, "text")?)?;
        put_handle(out, SlQuad(quad))
    })
}

/// # Safety
/// `quad` must be null or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn sl_quad_free(quad: *mut SlQuad) {
    if !quad.is_null() {
        drop(Box::from_raw(quad));
    }
}

/// # Safety
/// `quad` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_quad_zone_count(quad: *const SlQuad, out: *mut usize) -> SlStatus {
    call(|| put(out, get(quad, "quadrillage")?.0.zones().len()))
}

/// Zone criterion: `embeddable` when every zone is simple and convex;
/// `planar_bipartite` (may be null) tells whether the criterion applies.
///
/// # Safety
/// `quad` must be a live handle; `embeddable` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_quad_embeddable_by_zones(
    quad: *const SlQuad,
    embeddable: *mut bool,
    planar_bipartite: *mut bool,
) -> SlStatus {
    call(|| {
        let verdict = get(quad, "quadrillage")?.0.embeddable_by_zones();
        if !planar_bipartite.is_null() {
            planar_bipartite.write(verdict.planar_bipartite);
        }
        put(embeddable, verdict.embeddable)
    })
}

/// Closed-form invariants of `K(P)`. Fails with a guard error when an order
/// does not fit in 64 bits.
///
/// # Safety
/// `spec` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_kp_summary(spec: *const c_char, out: *mut SlKpSummary) -> SlStatus {
    call(|| {
        let s = kp_summary(&partition(read_str(spec, "partition")?)?);
        let narrow = |v: u128| {
            u64::try_from(v).map_err(|_| Failure(SlStatus::ErrGuard, format!("{v} does not fit in 64 bits")))
        };
        put(
            out,
            SlKpSummary {
                facet_count: narrow(s.facet_count)?,
                skeleton_m: s.skeleton_m,
                skeleton_h: s.skeleton_h,
                aut_order: narrow(s.aut_order)?,
                cox_order: narrow(s.cox_order)?,
                vertex_orbit_count: s.vertex_orbit_count,
            },
        )
    })
}

/// The table of type-`{3,4}` complexes up to `max_dim` (2 to 6) as TSV.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn sl_table_tsv(max_dim: usize, verify: bool, out: *mut *mut c_char) -> SlStatus {
    call(|| put_string(out, report::table(max_dim, verify)?))
}
