use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use dualbraid_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(db_last_error()) }.to_string_lossy().into_owned()
}

fn take(s: *mut c_char) -> String {
    let out = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { db_string_free(s) };
    out
}

fn garside(ty: &str, rank: u32, classical: bool) -> *mut DbGarside {
    let mut h = ptr::null_mut();
    let status = unsafe { db_garside_new(c(ty).as_ptr(), rank, classical, &mut h) };
    assert_eq!(status, DbStatus::Ok, "{}", last_error());
    assert!(!h.is_null());
    h
}

#[test]
fn normal_forms_through_handle() {
    let h = garside("B", 2, false);
    let mut n = 0u64;
    assert_eq!(unsafe { db_garside_simple_count(h, &mut n) }, DbStatus::Ok);
    assert_eq!(n, 6);

    let mut json = ptr::null_mut();
    let w = c("a[2,1] t[1] a[2,1]^-1");
    assert_eq!(unsafe { db_normal_form_json(h, w.as_ptr(), &mut json) }, DbStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v["delta_power"], 0);
    assert_eq!(v["factors"][0], "t[2]");

    let mut eq = false;
    let (u, v) = (c("b[2,1] t[2]"), c("a[2,1] t[1]"));
    assert_eq!(unsafe { db_words_equal(h, u.as_ptr(), v.as_ptr(), &mut eq) }, DbStatus::Ok);
    assert!(eq);
    let u = c("t[1] a[2,1]");
    assert_eq!(unsafe { db_words_equal(h, u.as_ptr(), v.as_ptr(), &mut eq) }, DbStatus::Ok);
    assert!(!eq);
    unsafe { db_garside_free(h) };
}

#[test]
fn classical_handle() {
    let h = garside("A", 3, true);
    let mut n = 0u64;
    unsafe { db_garside_simple_count(h, &mut n) };
    assert_eq!(n, 24);
    unsafe { db_garside_free(h) };
}

#[test]
fn counts_and_presentations() {
    let mut n = 0u64;
    assert_eq!(unsafe { db_dual_simple_count(c("H3").as_ptr(), 0, &mut n) }, DbStatus::Ok);
    assert_eq!(n, 32);
    assert_eq!(unsafe { db_dual_simple_count(c("I2:9").as_ptr(), 0, &mut n) }, DbStatus::Ok);
    assert_eq!(n, 11);
    let mut json = ptr::null_mut();
    let status = unsafe { db_presentation_json(c("D").as_ptr(), 4, c("completed").as_ptr(), &mut json) };
    assert_eq!(status, DbStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take(json)).unwrap();
    assert_eq!(v["atoms"].as_array().unwrap().len(), 12);
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { db_garside_new(c("X").as_ptr(), 3, false, &mut h) }, DbStatus::InvalidType);
    assert!(h.is_null());
    assert!(last_error().contains("X"));
    assert_eq!(unsafe { db_garside_new(ptr::null(), 3, false, &mut h) }, DbStatus::NullPointer);
    assert_eq!(unsafe { db_garside_new(c("B").as_ptr(), 2, false, ptr::null_mut()) }, DbStatus::NullPointer);

    let h = garside("B", 2, false);
    let mut json = ptr::null_mut();
    let bad = c("a[3,1]");
    assert_eq!(unsafe { db_normal_form_json(h, bad.as_ptr(), &mut json) }, DbStatus::InvalidWord);
    assert!(json.is_null());
    assert!(!last_error().is_empty());
    let invalid = [0xffu8, 0];
    let status = unsafe { db_normal_form_json(h, invalid.as_ptr().cast(), &mut json) };
    assert_eq!(status, DbStatus::InvalidUtf8);
    let mut n = 0u64;
    assert_eq!(unsafe { db_garside_simple_count(ptr::null(), &mut n) }, DbStatus::NullPointer);
    let status = unsafe { db_presentation_json(c("B").as_ptr(), 2, c("other").as_ptr(), &mut json) };
    assert_eq!(status, DbStatus::Unsupported);
    unsafe {
        db_garside_free(h);
        db_garside_free(ptr::null_mut());
        db_string_free(ptr::null_mut());
    }
}

#[test]
fn header_compiles_as_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/dualbraid.h");
    let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-x", "c", header]).output() else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(header).unwrap();
    for name in ["db_garside_new", "db_normal_form_json", "db_last_error", "DB_STATUS_INVALID_WORD"] {
        assert!(text.contains(name), "{name}");
    }
}
