//! C ABI over `dualbraid`.
//!
//! Every function returns a [`DbStatus`]; results go through out-pointers.
//! Strings returned by the library are owned by the caller and released
//! with [`db_string_free`]. After a non-`OK` status, [`db_last_error`]
//! holds a message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use dualbraid::garside::group_normal_form;
use dualbraid::interval::GarsideData;
use dualbraid::presentation::{
    classical_presentation, completed_dual_presentation, dual_presentation, parse_signed_word,
    Presentation,
};
use dualbraid::table::dual_count_interval;
use dualbraid::{CoxeterType, Error};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Unknown type token, unsupported rank or family.
    InvalidType = 3,
    /// Malformed word or atom not in the presentation.
    InvalidWord = 4,
    Unsupported = 5,
    /// A size or step guard was hit.
    ResourceLimit = 6,
    Internal = 7,
}

/// Opaque Garside structure together with the presentation its words are
/// parsed against.
pub struct DbGarside {
    data: GarsideData,
    presentation: Presentation,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> DbStatus {
    match e {
        Error::UnknownType { .. } | Error::UnsupportedRank { .. } | Error::InvalidFamily { .. } => DbStatus::InvalidType,
        Error::Syntax { .. }
        | Error::Index { .. }
        | Error::UnknownAtom { .. }
        | Error::AtomTypeMismatch { .. }
        | Error::EmptyFamilyWord
        | Error::InvalidRelation { .. } => DbStatus::InvalidWord,
        Error::Unsupported { .. } => DbStatus::Unsupported,
        Error::ClassCap { .. } | Error::ResourceGuard { .. } => DbStatus::ResourceLimit,
        Error::NotSimple { .. } | Error::Structure { .. } => DbStatus::Internal,
    }
}

enum Fail {
    Status(DbStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> DbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            DbStatus::Ok
        }
        Ok(Err(Fail::Status(s, msg))) => {
            set_error(&msg);
            s
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("panic inside dualbraid");
            DbStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Status(DbStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(DbStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    // SAFETY: non-null out-pointers are required to be valid for writes.
    unsafe { p.as_mut() }.ok_or_else(|| Fail::Status(DbStatus::NullPointer, format!("{what} is null")))
}

fn live<'a>(h: *const DbGarside) -> Result<&'a DbGarside, Fail> {
    // SAFETY: handles come from `db_garside_new` and are not yet freed.
    unsafe { h.as_ref() }.ok_or_else(|| Fail::Status(DbStatus::NullPointer, "handle is null".into()))
}

fn coxeter_type(token: *const c_char, rank: u32) -> Result<CoxeterType, Fail> {
    let token = unsafe { text(token, "type")? };
    Ok(CoxeterType::from_parts(token, (rank != 0).then_some(rank))?)
}

fn c_string(s: String) -> Result<*mut c_char, Fail> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Fail::Status(DbStatus::Internal, "interior NUL in output".into()))
}

/// Message for the last failing call on this thread. Valid until the next
/// call into the library; never null.
#[no_mangle]
pub extern "C" fn db_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by the library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn db_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds the dual (`classical == false`) or classical Garside structure.
/// `rank` is 0 for types whose token carries it (`H3`, `I2:5`, `B3`).
///
/// # Safety
/// `type_token` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_garside_new(
    type_token: *const c_char,
    rank: u32,
    classical: bool,
    out_handle: *mut *mut DbGarside,
) -> DbStatus {
    guard(|| {
        let slot = out(out_handle, "out_handle")?;
        *slot = ptr::null_mut();
        let ty = coxeter_type(type_token, rank)?;
        let (data, presentation) = if classical {
            (GarsideData::classical(ty)?, classical_presentation(ty)?)
        } else {
            (GarsideData::dual(ty)?, completed_dual_presentation(ty)?)
        };
        *slot = Box::into_raw(Box::new(DbGarside { data, presentation }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `handle` must come from [`db_garside_new`] and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn db_garside_free(handle: *mut DbGarside) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Number of simple elements of the structure.
///
/// # Safety
/// `handle` must be live; `out_count` must be writable.
#[no_mangle]
pub unsafe extern "C" fn db_garside_simple_count(handle: *const DbGarside, out_count: *mut u64) -> DbStatus {
    guard(|| {
        let h = live(handle)?;
        *out(out_count, "out_count")? = h.data.simple_count() as u64;
        Ok(())
    })
}

/// Normal form of a group word as JSON `{"delta_power":k,"factors":[...]}`.
///
/// # Safety
/// `handle` must be live, `word` NUL-terminated, `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn db_normal_form_json(
    handle: *const DbGarside,
    word: *const c_char,
    out_json: *mut *mut c_char,
) -> DbStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        *slot = ptr::null_mut();
        let h = live(handle)?;
        let w = parse_signed_word(text(word, "word")?, &h.presentation)?;
        let nf = group_normal_form(&h.data, &w)?.to_json(&h.data);
        let json = serde_json::to_string(&nf).map_err(|e| Fail::Status(DbStatus::Internal, e.to_string()))?;
        *slot = c_string(json)?;
        Ok(())
    })
}

/// Whether two group words represent the same element.
///
/// # Safety
/// `handle` must be live, both words NUL-terminated, `out_equal` writable.
#[no_mangle]
pub unsafe extern "C" fn db_words_equal(
    handle: *const DbGarside,
    lhs: *const c_char,
    rhs: *const c_char,
    out_equal: *mut bool,
) -> DbStatus {
    guard(|| {
        let slot = out(out_equal, "out_equal")?;
        let h = live(handle)?;
        let u = parse_signed_word(text(lhs, "lhs")?, &h.presentation)?;
        let v = parse_signed_word(text(rhs, "rhs")?, &h.presentation)?;
        *slot = group_normal_form(&h.data, &u)? == group_normal_form(&h.data, &v)?;
        Ok(())
    })
}

/// Size of the interval `[1, c]` for any finite type.
///
/// # Safety
/// `type_token` must be NUL-terminated; `out_count` writable.
#[no_mangle]
pub unsafe extern "C" fn db_dual_simple_count(type_token: *const c_char, rank: u32, out_count: *mut u64) -> DbStatus {
    guard(|| {
        let slot = out(out_count, "out_count")?;
        *slot = dual_count_interval(coxeter_type(type_token, rank)?)? as u64;
        Ok(())
    })
}

/// A presentation as JSON. `flavor` is `classical`, `dual` or `completed`.
///
/// # Safety
/// Strings must be NUL-terminated; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn db_presentation_json(
    type_token: *const c_char,
    rank: u32,
    flavor: *const c_char,
    out_json: *mut *mut c_char,
) -> DbStatus {
    guard(|| {
        let slot = out(out_json, "out_json")?;
        *slot = ptr::null_mut();
        let ty = coxeter_type(type_token, rank)?;
        let p = match text(flavor, "flavor")? {
            "classical" => classical_presentation(ty)?,
            "dual" => dual_presentation(ty)?,
            "completed" => completed_dual_presentation(ty)?,
            other => {
                return Err(Fail::Status(DbStatus::Unsupported, format!("unknown flavor `{other}`")));
            }
        };
        let json = serde_json::to_string(&p.to_json()).map_err(|e| Fail::Status(DbStatus::Internal, e.to_string()))?;
        *slot = c_string(json)?;
        Ok(())
    })
}
