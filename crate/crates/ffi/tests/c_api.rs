use std::ffi::{c_char, CStr, CString};
use std::ptr;

use dproj_ffi::*;

fn fixture(name: &str) -> CString {
    let path = format!("{}/../core/tests/fixtures/{name}.json", env!("CARGO_MANIFEST_DIR"));
    CString::new(std::fs::read_to_string(path).unwrap()).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = CStr::from_ptr(s).to_str().unwrap().to_owned();
    dproj_string_free(s);
    out
}

unsafe fn last_error() -> String {
    let p = dproj_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn ring(name: &str) -> *mut DprojRing {
    let mut r = ptr::null_mut();
    assert_eq!(dproj_ring_from_json(fixture(name).as_ptr(), &mut r), DprojStatus::Ok);
    r
}

#[test]
fn doubled_origin_through_the_c_api() {
    unsafe {
        let r = ring("double_origin");
        let mut eff = false;
        assert_eq!(dproj_ring_is_effective(r, &mut eff), DprojStatus::Ok);
        assert!(eff);

        let mut s = ptr::null_mut();
        assert_eq!(dproj_gens_json(r, &mut s), DprojStatus::Ok);
        let gens = take(s);
        assert!(gens.contains("\"x*y\"") && gens.contains("\"y*z\""), "{gens}");

        let mut a = ptr::null_mut();
        assert_eq!(dproj_atlas_build(r, 0, &mut a), DprojStatus::Ok);
        assert_eq!(dproj_atlas_chart_count(a), 3);
        let mut dim = 0usize;
        assert_eq!(dproj_atlas_chart_dimension(a, 0, &mut dim), DprojStatus::Ok);
        assert_eq!(dim, 1);
        assert_eq!(dproj_atlas_chart_monomial(a, 1, &mut s), DprojStatus::Ok);
        assert_eq!(take(s), "x*z");
        assert_eq!(dproj_atlas_chart_generators(a, 1, &mut s), DprojStatus::Ok);
        assert_eq!(take(s), "(x*y)/z");
        assert_eq!(dproj_atlas_chart_generators(a, 3, &mut s), DprojStatus::OutOfRange);
        assert!(last_error().contains("chart 3"));

        assert_eq!(dproj_atlas_to_json(a, &mut s), DprojStatus::Ok);
        let golden = std::fs::read_to_string(format!(
            "{}/../core/tests/golden/double_origin.atlas.json",
            env!("CARGO_MANIFEST_DIR")
        ))
        .unwrap();
        assert_eq!(take(s).trim_end(), golden.trim_end());

        dproj_atlas_free(a);
        dproj_ring_free(r);
    }
}

#[test]
fn errors_map_to_status_codes() {
    unsafe {
        let mut r = ptr::null_mut();
        let bad = CString::new("{\"rank\": 1, \"vars\": [").unwrap();
        assert_eq!(dproj_ring_from_json(bad.as_ptr(), &mut r), DprojStatus::Syntax);
        assert!(r.is_null());
        assert!(last_error().contains("line 1"));

        assert_eq!(dproj_ring_from_json(ptr::null(), &mut r), DprojStatus::NullPointer);

        let r = ring("non_effective");
        let mut a = ptr::null_mut();
        assert_eq!(dproj_atlas_build(r, 0, &mut a), DprojStatus::Precondition);
        assert!(a.is_null());
        dproj_ring_free(r);

        let r = ring("weighted_123");
        assert_eq!(dproj_atlas_build(r, 2, &mut a), DprojStatus::ResourceLimit);
        assert!(last_error().contains("S_(z)"));
        assert_eq!(dproj_atlas_build(r, 0, &mut a), DprojStatus::Ok);
        assert!(dproj_last_error().is_null());
        dproj_atlas_free(a);
        dproj_ring_free(r);

        dproj_ring_free(ptr::null_mut());
        dproj_atlas_free(ptr::null_mut());
        dproj_string_free(ptr::null_mut());
        assert_eq!(dproj_atlas_chart_count(ptr::null()), 0);
    }
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(format!("{}/include/dproj.h", env!("CARGO_MANIFEST_DIR"))).unwrap();
    for name in [
        "dproj_ring_from_json",
        "dproj_ring_free",
        "dproj_ring_is_effective",
        "dproj_gens_json",
        "dproj_atlas_build",
        "dproj_atlas_free",
        "dproj_atlas_chart_count",
        "dproj_atlas_chart_dimension",
        "dproj_atlas_chart_monomial",
        "dproj_atlas_chart_generators",
        "dproj_atlas_to_json",
        "dproj_string_free",
        "dproj_last_error",
        "typedef struct DprojRing DprojRing",
        "DPROJ_STATUS_RESOURCE_LIMIT = 5",
    ] {
        assert!(header.contains(name), "missing {name}");
    }
}
