//! C ABI over the ditopo engine.
//!
//! Every function returns a [`DitopoError`] and writes results through out
//! pointers. Spaces and presentations are opaque handles owned by the caller
//! and released with their `_free` function. Strings handed out are owned by
//! the caller and released with [`ditopo_string_free`]. After a non-zero
//! return, [`ditopo_last_error_message`] describes the failure on the
//! calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ditopo::cat::{endo_monoid_with_depth, hom_count, PresentedCategory};
use ditopo::catalog::example;
use ditopo::cli::{parse_args, run, Format};
use ditopo::cover::Cover;
use ditopo::cubical::{dihomotopy_classes, Vertex};
use ditopo::error::Error;
use ditopo::model::SpaceModel;
use ditopo::report::Status;
use ditopo::vankampen::van_kampen_check;

/// Return code of every call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DitopoError {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed JSON or document structure.
    Document = 3,
    /// Well-formed input that violates the rules of its kind.
    InvalidInput = 4,
    LimitExceeded = 5,
    /// A Rust panic was caught at the boundary.
    Panic = 6,
}

/// Outcome of a check; the numbers match the command-line exit codes.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DitopoStatus {
    Pass = 0,
    Fail = 1,
    Unknown = 2,
}

impl From<Status> for DitopoStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Pass => DitopoStatus::Pass,
            Status::Fail => DitopoStatus::Fail,
            Status::Unknown => DitopoStatus::Unknown,
        }
    }
}

/// A space with an optional two-piece cover.
pub struct DitopoSpace {
    model: SpaceModel,
    cover: Option<Cover>,
}

/// A finitely presented category.
pub struct DitopoPresentation {
    inner: PresentedCategory,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(DitopoError, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Document(_) => DitopoError::Document,
            Error::TooLarge { .. } | Error::LimitExceeded(_) => DitopoError::LimitExceeded,
            _ => DitopoError::InvalidInput,
        };
        Failure(code, e.to_string())
    }
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> DitopoError {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => DitopoError::Ok,
        Ok(Err(Failure(code, msg))) => {
            set_last_error(&msg);
            code
        }
        Err(_) => {
            set_last_error("internal panic");
            DitopoError::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(DitopoError::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(DitopoError::InvalidUtf8, "string argument is not UTF-8".into()))
}

unsafe fn put<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(DitopoError::NullPointer, "null out pointer".into()));
    }
    out.write(value);
    Ok(())
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(DitopoError::NullPointer, "null handle".into()))
}

fn owned(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .expect("nul bytes removed")
        .into_raw()
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call on the same thread.
#[no_mangle]
pub extern "C" fn ditopo_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn ditopo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a named example space with its default cover.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_space_from_example(name: *const c_char, out: *mut *mut DitopoSpace) -> DitopoError {
    guard(|| {
        let ex = example(text(name)?)?;
        let space = Box::new(DitopoSpace {
            model: ex.model,
            cover: ex.cover,
        });
        put(out, Box::into_raw(space))
    })
}

/// Parses a grid or finite-space document, with an optional embedded cover.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_space_from_json(json: *const c_char, out: *mut *mut DitopoSpace) -> DitopoError {
    guard(|| {
        let (model, cover) = SpaceModel::from_json(text(json)?)?;
        if let Some(c) = &cover {
            model.validate_cover(c)?;
        }
        put(out, Box::into_raw(Box::new(DitopoSpace { model, cover })))
    })
}

/// # Safety
/// `space` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ditopo_space_free(space: *mut DitopoSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Serializes a space (and its cover) as JSON.
///
/// # Safety
/// `space` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_space_to_json(space: *const DitopoSpace, out: *mut *mut c_char) -> DitopoError {
    guard(|| {
        let s = handle(space)?;
        put(out, owned(s.model.to_json(s.cover.as_ref())))
    })
}

/// Number of points (allowed vertices on grids).
///
/// # Safety
/// `space` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_space_point_count(space: *const DitopoSpace, out: *mut usize) -> DitopoError {
    guard(|| put(out, handle(space)?.model.points().len()))
}

/// Counts corner-to-corner paths of a grid and their dihomotopy classes.
///
/// # Safety
/// `space` must be a live handle; both out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_grid_classes(
    space: *const DitopoSpace,
    limit: usize,
    out_paths: *mut usize,
    out_classes: *mut usize,
) -> DitopoError {
    guard(|| {
        let SpaceModel::Grid(g) = &handle(space)?.model else {
            return Err(Failure(DitopoError::InvalidInput, "space is not a grid".into()));
        };
        let set = dihomotopy_classes(g, Vertex::new(0, 0), Vertex::new(g.width(), g.height()), limit)?;
        put(out_paths, set.paths.len())?;
        put(out_classes, set.classes.len())
    })
}

/// The presented fundamental category of a space.
///
/// # Safety
/// `space` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_space_presentation(
    space: *const DitopoSpace,
    out: *mut *mut DitopoPresentation,
) -> DitopoError {
    guard(|| {
        let inner = handle(space)?.model.presentation();
        put(out, Box::into_raw(Box::new(DitopoPresentation { inner })))
    })
}

/// Parses a presentation document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_presentation_from_json(
    json: *const c_char,
    out: *mut *mut DitopoPresentation,
) -> DitopoError {
    guard(|| {
        let inner = PresentedCategory::from_json(text(json)?)?;
        put(out, Box::into_raw(Box::new(DitopoPresentation { inner })))
    })
}

/// # Safety
/// `p` must come from this library and not be freed twice. NULL is ignored.
#[no_mangle]
pub unsafe extern "C" fn ditopo_presentation_free(p: *mut DitopoPresentation) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// # Safety
/// `p` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_presentation_to_json(
    p: *const DitopoPresentation,
    out: *mut *mut c_char,
) -> DitopoError {
    guard(|| put(out, owned(handle(p)?.inner.to_json())))
}

/// Numbers of objects, generators and relations.
///
/// # Safety
/// `p` must be a live handle; all out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_presentation_sizes(
    p: *const DitopoPresentation,
    objects: *mut usize,
    generators: *mut usize,
    relations: *mut usize,
) -> DitopoError {
    guard(|| {
        let c = &handle(p)?.inner;
        put(objects, c.objects().len())?;
        put(generators, c.generators().len())?;
        put(relations, c.relations().len())
    })
}

/// Classes of words from `from` to `to` of length at most `max_len`.
/// `status` is unknown when some class did not close within `depth`.
///
/// # Safety
/// `p` must be a live handle, names NUL-terminated, out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_hom_count(
    p: *const DitopoPresentation,
    from: *const c_char,
    to: *const c_char,
    max_len: usize,
    depth: usize,
    count: *mut usize,
    status: *mut DitopoStatus,
) -> DitopoError {
    guard(|| {
        let h = hom_count(&handle(p)?.inner, text(from)?, text(to)?, max_len, depth)?;
        put(count, h.count)?;
        put(
            status,
            if h.exact {
                DitopoStatus::Pass
            } else {
                DitopoStatus::Unknown
            },
        )
    })
}

/// Endomorphism classes at `base` and the detected structure, written as
/// `trivial`, `free(k)` or `unknown`.
///
/// # Safety
/// `p` must be a live handle, `base` NUL-terminated, out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_endo_monoid(
    p: *const DitopoPresentation,
    base: *const c_char,
    max_len: usize,
    depth: usize,
    classes: *mut usize,
    structure: *mut *mut c_char,
) -> DitopoError {
    guard(|| {
        let r = endo_monoid_with_depth(&handle(p)?.inner, text(base)?, max_len, depth)?;
        put(classes, r.classes)?;
        put(structure, owned(r.structure.to_string()))
    })
}

/// Compares hom-counts of the space with those of the pushout of its cover
/// pieces. `report` receives the JSON report and may be NULL.
///
/// # Safety
/// `space` must be a live handle with a cover; `status` writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_van_kampen_check(
    space: *const DitopoSpace,
    max_len: usize,
    depth: usize,
    status: *mut DitopoStatus,
    report: *mut *mut c_char,
) -> DitopoError {
    guard(|| {
        let s = handle(space)?;
        let cover = s
            .cover
            .as_ref()
            .ok_or_else(|| Failure(DitopoError::InvalidInput, "space has no cover".into()))?;
        let r = van_kampen_check(&s.model, cover, max_len, depth)?;
        put(status, r.status.into())?;
        if !report.is_null() {
            let json = serde_json::to_string(&r).map_err(|e| Failure(DitopoError::Panic, e.to_string()))?;
            put(report, owned(json))?;
        }
        Ok(())
    })
}

/// Runs a command-line invocation (without the program name) and returns
/// its JSON report. `status` is the command's outcome.
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; out pointers writable.
#[no_mangle]
pub unsafe extern "C" fn ditopo_run(
    argc: c_int,
    argv: *const *const c_char,
    report: *mut *mut c_char,
    status: *mut DitopoStatus,
) -> DitopoError {
    guard(|| {
        if argc < 0 || (argc > 0 && argv.is_null()) {
            return Err(Failure(DitopoError::NullPointer, "bad argument vector".into()));
        }
        let mut args = vec!["ditopo"];
        for i in 0..argc as usize {
            args.push(text(*argv.add(i))?);
        }
        let cli = parse_args(args)?;
        let outcome = run(&cli.command)?;
        put(report, owned(outcome.render(Format::Json)))?;
        put(status, outcome.status.into())
    })
}
