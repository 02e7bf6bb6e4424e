use std::ffi::{c_char, CStr, CString};
use std::ptr;

use hessenberg_ffi::*;

fn parse(text: &str) -> *mut HbOrdinal {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { hb_ordinal_parse(c.as_ptr(), &mut out) },
        HbStatus::Ok
    );
    out
}

fn sequence(text: &str) -> *mut HbSequence {
    let c = CString::new(text).unwrap();
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { hb_sequence_parse(c.as_ptr(), &mut out) },
        HbStatus::Ok
    );
    out
}

fn take_string(s: *mut c_char) -> String {
    let owned = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { hb_string_free(s) };
    owned
}

fn render(o: *const HbOrdinal) -> String {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { hb_ordinal_to_string(o, &mut s) }, HbStatus::Ok);
    take_string(s)
}

fn last_error() -> String {
    let p = hb_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned()
}

#[test]
fn arithmetic() {
    let (one, w) = (parse("1"), parse("w"));
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(hb_ordinal_add(one, w, &mut out), HbStatus::Ok);
        assert_eq!(render(out), "w");
        hb_ordinal_free(out);
        assert_eq!(hb_ordinal_nat_sum(one, w, &mut out), HbStatus::Ok);
        assert_eq!(render(out), "w + 1");
        let mut cmp = 0;
        assert_eq!(hb_ordinal_compare(out, w, &mut cmp), HbStatus::Ok);
        assert_eq!(cmp, 1);
        assert_eq!(hb_ordinal_compare(w, w, &mut cmp), HbStatus::Ok);
        assert_eq!(cmp, 0);
        let mut cut = ptr::null_mut();
        assert_eq!(hb_ordinal_truncate(out, one, &mut cut), HbStatus::Ok);
        assert_eq!(render(cut), "w");
        for p in [one, w, out, cut] {
            hb_ordinal_free(p);
        }
    }
}

#[test]
fn sequences() {
    let s = sequence("head: w^2+w, w^2+w\ntail: periodic 1\n");
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(hb_sequence_inat_sum(s, &mut out), HbStatus::Ok);
        assert_eq!(render(out), "w^2*2 + w*3");
        hb_ordinal_free(out);
        assert_eq!(hb_sequence_iord_sum(s, &mut out), HbStatus::Ok);
        assert_eq!(render(out), "w^2*2 + w*2");
        hb_ordinal_free(out);
        assert_eq!(hb_sequence_xi(s, &mut out), HbStatus::Ok);
        assert_eq!(render(out), "1");

        let mut cert = ptr::null_mut();
        assert_eq!(hb_sequence_certify(s, &mut cert), HbStatus::Ok);
        assert!(take_string(cert).ends_with("tail from 2\nvalue: w^2*2 + w*3"));

        let zero = parse("0");
        let mut t = ptr::null_mut();
        assert_eq!(hb_sequence_truncate(s, zero, &mut t), HbStatus::Ok);
        hb_sequence_free(t);
        assert_eq!(hb_sequence_truncate(s, out, &mut t), HbStatus::DomainError);
        assert!(last_error().contains("critical exponent"));
        hb_ordinal_free(zero);
        hb_ordinal_free(out);
        hb_sequence_free(s);
    }
}

#[test]
fn errors() {
    let mut out = ptr::null_mut();
    let bad = CString::new("w + ").unwrap();
    unsafe {
        assert_eq!(
            hb_ordinal_parse(bad.as_ptr(), &mut out),
            HbStatus::ParseError
        );
        assert!(out.is_null());
        assert!(last_error().contains("position 4"));

        assert_eq!(
            hb_ordinal_parse(ptr::null(), &mut out),
            HbStatus::NullPointer
        );
        let w = CString::new("w").unwrap();
        assert_eq!(
            hb_ordinal_parse(w.as_ptr(), ptr::null_mut()),
            HbStatus::NullPointer
        );

        let invalid = [0xffu8, 0];
        assert_eq!(
            hb_ordinal_parse(invalid.as_ptr().cast(), &mut out),
            HbStatus::InvalidUtf8
        );

        let mut seq = ptr::null_mut();
        let text = CString::new("tail: periodic").unwrap();
        assert_eq!(
            hb_sequence_parse(text.as_ptr(), &mut seq),
            HbStatus::ParseError
        );

        let mut cmp = 0;
        assert_eq!(
            hb_ordinal_compare(ptr::null(), ptr::null(), &mut cmp),
            HbStatus::NullPointer
        );

        hb_ordinal_free(ptr::null_mut());
        hb_sequence_free(ptr::null_mut());
        hb_string_free(ptr::null_mut());
    }
}

#[test]
fn status_codes_are_stable() {
    assert_eq!(HbStatus::Ok as i32, 0);
    assert_eq!(HbStatus::NullPointer as i32, 1);
    assert_eq!(HbStatus::InvalidUtf8 as i32, 2);
    assert_eq!(HbStatus::ParseError as i32, 3);
    assert_eq!(HbStatus::DomainError as i32, 4);
    assert_eq!(HbStatus::InvariantFailed as i32, 5);
    assert_eq!(HbStatus::Panic as i32, 6);
}
