use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ochrom_ffi::*;

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { ochrom_string_free(p) };
    s
}

fn parse(text: &str, format: OchromFormat) -> Result<*mut OchromGraph, (OchromStatus, String)> {
    let c = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    let s = unsafe { ochrom_graph_parse(c.as_ptr(), format, &mut g) };
    if s == OchromStatus::Ok {
        Ok(g)
    } else {
        let msg = unsafe { CStr::from_ptr(ochrom_last_error()) }
            .to_str()
            .unwrap()
            .to_owned();
        Err((s, msg))
    }
}

const H: &str = "n=4;e 0 1;e 2 3;a 1 3;a 0 2";

#[test]
fn polynomial_round_trip() {
    let g = parse(H, OchromFormat::Auto).unwrap();
    assert_eq!(unsafe { ochrom_graph_vertex_count(g) }, 4);
    let (mut a, mut b) = (ptr::null_mut(), ptr::null_mut());
    unsafe {
        assert_eq!(ochrom_poly_reduction(g, 14, &mut a), OchromStatus::Ok);
        assert_eq!(ochrom_poly_bruteforce(g, 8, &mut b), OchromStatus::Ok);
        assert!(ochrom_poly_equal(a, b));
        assert_eq!(ochrom_poly_degree(a), 4);
        assert!(ochrom_last_error().is_null());
    }
    let mut s = ptr::null_mut();
    unsafe { assert_eq!(ochrom_poly_to_string(a, &mut s), OchromStatus::Ok) };
    assert_eq!(take_string(s), "x^4 - 4x^3 + 5x^2 - 2x");
    unsafe { assert_eq!(ochrom_poly_to_json(a, &mut s), OchromStatus::Ok) };
    assert_eq!(take_string(s), r#"["0","-2","5","-4","1"]"#);
    unsafe { assert_eq!(ochrom_roots_json(a, 20, &mut s), OchromStatus::Ok) };
    let roots: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    let exact: Vec<&str> = roots
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["lo"].as_str().unwrap())
        .collect();
    assert_eq!(exact, ["0", "1", "2"]);
    unsafe {
        ochrom_poly_free(a);
        ochrom_poly_free(b);
        ochrom_graph_free(g);
    }
}

#[test]
fn serialization() {
    let g = parse("C~", OchromFormat::Graph6).unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(
            ochrom_graph_serialize(g, OchromFormat::Graph6, &mut s),
            OchromStatus::Ok
        )
    };
    assert_eq!(take_string(s), "C~");
    unsafe {
        assert_eq!(
            ochrom_graph_serialize(g, OchromFormat::Auto, &mut s),
            OchromStatus::Ok
        )
    };
    assert_eq!(take_string(s), "n=4;e 0 1;e 0 2;e 0 3;e 1 2;e 1 3;e 2 3");
    // digraph6 cannot hold edges
    unsafe {
        assert_eq!(
            ochrom_graph_serialize(g, OchromFormat::Digraph6, &mut s),
            OchromStatus::KindMismatch
        )
    };
    unsafe { ochrom_graph_free(g) };
}

#[test]
fn error_codes() {
    assert_eq!(
        parse("n=2;x 0 1", OchromFormat::Auto).unwrap_err().0,
        OchromStatus::Parse
    );
    let (status, msg) = parse("n=2;a 0 5", OchromFormat::MixedText).unwrap_err();
    assert_eq!(status, OchromStatus::Parse);
    assert!(msg.contains('5'), "{msg}");
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            ochrom_graph_parse(ptr::null(), OchromFormat::Auto, &mut g),
            OchromStatus::NullPointer
        );
        let bad = [0xffu8, 0];
        assert_eq!(
            ochrom_graph_parse(bad.as_ptr().cast(), OchromFormat::Auto, &mut g),
            OchromStatus::InvalidUtf8
        );
    }
    let big = parse("n=20", OchromFormat::Auto).unwrap();
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            ochrom_poly_bruteforce(big, 8, &mut p),
            OchromStatus::SizeGuard
        );
        assert!(p.is_null());
        ochrom_graph_free(big);
        ochrom_graph_free(ptr::null_mut());
        ochrom_poly_free(ptr::null_mut());
        ochrom_string_free(ptr::null_mut());
        assert_eq!(ochrom_poly_degree(ptr::null()), -1);
    }
}

#[test]
fn verdicts_as_json() {
    let mut s = ptr::null_mut();
    let tk2 = parse("n=4;a 0 1;a 2 3", OchromFormat::Auto).unwrap();
    unsafe { assert_eq!(ochrom_invar_json(tk2, &mut s), OchromStatus::Ok) };
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["verdict"], "no");
    assert_eq!(v["certificate"]["kind"], "violating2k2");
    unsafe { assert_eq!(ochrom_equiv_json(tk2, 6, &mut s), OchromStatus::Ok) };
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["certificate"]["kind"], "exhausted_search");
    unsafe { assert_eq!(ochrom_orient_json(tk2, &mut s), OchromStatus::KindMismatch) };

    let c4 = parse("n=4;e 0 1;e 1 2;e 2 3;e 0 3", OchromFormat::Auto).unwrap();
    unsafe { assert_eq!(ochrom_orient_json(c4, &mut s), OchromStatus::Ok) };
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["verdict"], "yes");

    unsafe { assert_eq!(ochrom_analyze_json(tk2, 14, &mut s), OchromStatus::Ok) };
    let v: serde_json::Value = serde_json::from_str(&take_string(s)).unwrap();
    assert_eq!(v["check"]["actual_c2"], "0");
    assert_eq!(v["agrees"], true);
    unsafe {
        ochrom_graph_free(tk2);
        ochrom_graph_free(c4);
    }
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(ochrom_version()) }
        .to_str()
        .unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
