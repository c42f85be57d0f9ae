//! C interface. Handles are opaque and owned by the caller once returned;
//! release them with the matching `_free` function. Every fallible call
//! returns a `SymindexStatus` and leaves a message for
//! `symindex_last_error` on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::path::Path;

use symindex::catalog::{Catalog, Product};
use symindex::elimination::{eliminate_sp, Options};
use symindex::index_core::{IndexTable, Verdict};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymindexStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    UnknownSpace = 3,
    NotIrreducible = 4,
    CatalogLoad = 5,
    IndexUnknown = 6,
    Unsupported = 7,
    BufferTooSmall = 8,
}

/// Outcome of the necessary-condition check for a totally geodesic embedding.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymindexVerdict {
    Pass = 0,
    Fail = 1,
    Indeterminate = 2,
}

/// Index data of one irreducible space.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SymindexIndex {
    pub dim: u64,
    pub rank: u32,
    pub index: u64,
    pub reflective_index: u64,
    pub exceptional: bool,
}

enum TableRef {
    Builtin,
    Owned(IndexTable),
}

/// An index table together with its catalog.
pub struct SymindexTable(TableRef);

impl SymindexTable {
    fn get(&self) -> &IndexTable {
        match &self.0 {
            TableRef::Builtin => IndexTable::builtin(),
            TableRef::Owned(t) => t,
        }
    }
}

/// A resolved space name, possibly a product.
pub struct SymindexSpace(Product);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: SymindexStatus, msg: impl ToString) -> SymindexStatus {
    let text = CString::new(msg.to_string().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
    status
}

fn clear() -> SymindexStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::default());
    SymindexStatus::Ok
}

/// Borrow a C string, or the status to return.
///
/// # Safety
/// `s` must be null or a valid NUL-terminated string.
unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, SymindexStatus> {
    if s.is_null() {
        return Err(fail(SymindexStatus::NullArgument, "null string argument"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| fail(SymindexStatus::InvalidUtf8, e))
}

macro_rules! try_ffi {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:ident),+) => {
        $(if $p.is_null() {
            return fail(SymindexStatus::NullArgument, concat!("null argument ", stringify!($p)));
        })+
    };
}

/// Message for the last failed call on this thread. Valid until the next
/// call into this library on the same thread; empty after a success.
#[no_mangle]
pub extern "C" fn symindex_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// The embedded table.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn symindex_table_builtin(out: *mut *mut SymindexTable) -> SymindexStatus {
    non_null!(out);
    *out = Box::into_raw(Box::new(SymindexTable(TableRef::Builtin)));
    clear()
}

/// A table over a catalog read from `path`.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn symindex_table_from_catalog(
    path: *const c_char,
    out: *mut *mut SymindexTable,
) -> SymindexStatus {
    non_null!(out);
    let path = try_ffi!(text(path));
    let table = Catalog::from_path(Path::new(path))
        .map_err(|e| e.to_string())
        .and_then(|c| IndexTable::with_catalog(c).map_err(|e| e.to_string()));
    match table {
        Ok(t) => {
            *out = Box::into_raw(Box::new(SymindexTable(TableRef::Owned(t))));
            clear()
        }
        Err(e) => fail(SymindexStatus::CatalogLoad, e),
    }
}

/// # Safety
/// `table` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn symindex_table_free(table: *mut SymindexTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Resolve a name such as `Sp(2,2)/Sp2xSp2` or `S^5 x S^3`.
///
/// # Safety
/// `table` must be a live handle, `name` a NUL-terminated string and `out`
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn symindex_space_lookup(
    table: *const SymindexTable,
    name: *const c_char,
    out: *mut *mut SymindexSpace,
) -> SymindexStatus {
    non_null!(table, out);
    let name = try_ffi!(text(name));
    match (*table).get().catalog().lookup(name) {
        Ok(p) => {
            *out = Box::into_raw(Box::new(SymindexSpace(p)));
            clear()
        }
        Err(e) => fail(SymindexStatus::UnknownSpace, e),
    }
}

/// # Safety
/// `space` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn symindex_space_free(space: *mut SymindexSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Copy the canonical name into `buf`, NUL-terminated. `needed` receives
/// the size including the terminator, also on `BUFFER_TOO_SMALL`.
///
/// # Safety
/// `space` must be a live handle, `buf` valid for `len` bytes (or null
/// when `len` is 0), and `needed` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn symindex_space_name(
    space: *const SymindexSpace,
    buf: *mut c_char,
    len: usize,
    needed: *mut usize,
) -> SymindexStatus {
    non_null!(space);
    let name = (*space).0.name();
    let size = name.len() + 1;
    if !needed.is_null() {
        *needed = size;
    }
    if buf.is_null() || len < size {
        return fail(SymindexStatus::BufferTooSmall, format!("name needs {size} bytes"));
    }
    std::ptr::copy_nonoverlapping(name.as_ptr().cast::<c_char>(), buf, name.len());
    *buf.add(name.len()) = 0;
    clear()
}

/// # Safety
/// `space` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn symindex_space_dim(space: *const SymindexSpace) -> u64 {
    if space.is_null() {
        return 0;
    }
    (*space).0.dim()
}

/// # Safety
/// `space` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn symindex_space_rank(space: *const SymindexSpace) -> u32 {
    if space.is_null() {
        return 0;
    }
    (*space).0.rank()
}

/// Index data of an irreducible space.
///
/// # Safety
/// Both handles must be live and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn symindex_index(
    table: *const SymindexTable,
    space: *const SymindexSpace,
    out: *mut SymindexIndex,
) -> SymindexStatus {
    non_null!(table, space, out);
    let p = &(*space).0;
    let Some(s) = p.irreducible() else {
        return fail(SymindexStatus::NotIrreducible, format!("{p} is not irreducible"));
    };
    match (*table).get().index(s) {
        Ok(rec) => {
            *out = SymindexIndex {
                dim: rec.dim,
                rank: rec.rank,
                index: rec.index,
                reflective_index: rec.reflective_index,
                exceptional: rec.exceptional,
            };
            clear()
        }
        Err(e) => fail(SymindexStatus::IndexUnknown, e),
    }
}

/// Necessary conditions for `sub` to sit totally geodesically in the
/// irreducible `ambient`. On `FAIL` and `INDETERMINATE` the reason is left in
/// `symindex_last_error`.
///
/// # Safety
/// All handles must be live and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn symindex_obstruction_check(
    table: *const SymindexTable,
    sub: *const SymindexSpace,
    ambient: *const SymindexSpace,
    out: *mut SymindexVerdict,
) -> SymindexStatus {
    non_null!(table, sub, ambient, out);
    let amb = &(*ambient).0;
    let Some(m) = amb.irreducible() else {
        return fail(SymindexStatus::NotIrreducible, format!("{amb} is not irreducible"));
    };
    let v = (*table).get().obstruction_check(&(*sub).0, m);
    let status = match &v {
        Verdict::Pass => clear(),
        other => fail(SymindexStatus::Ok, other),
    };
    *out = match v {
        Verdict::Pass => SymindexVerdict::Pass,
        Verdict::Fail(_) => SymindexVerdict::Fail,
        Verdict::Indeterminate(_) => SymindexVerdict::Indeterminate,
    };
    status
}

/// Run the case elimination for Sp(2r)/Sp(r)Sp(r) and report how many
/// candidates survive. Zero survivors establishes index 4r.
///
/// # Safety
/// `survivors` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn symindex_eliminate_sp(
    r: u32,
    external_assumptions: bool,
    survivors: *mut usize,
) -> SymindexStatus {
    non_null!(survivors);
    match eliminate_sp(r, Options { external_assumptions }) {
        Ok(rep) => {
            *survivors = rep.survivors.len();
            clear()
        }
        Err(e) => fail(SymindexStatus::Unsupported, e),
    }
}
