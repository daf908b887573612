use std::ffi::{CStr, CString};
use std::ptr;

use bier_ffi::*;

fn new_delta(n: u32, gens: &[u64]) -> *mut BierDelta {
    let mut d = ptr::null_mut();
    let status = unsafe { bier_delta_new(n, gens.as_ptr(), gens.len(), &mut d) };
    assert_eq!(status, BierStatus::Ok);
    assert!(!d.is_null());
    d
}

fn vector(d: *const BierDelta, f: unsafe extern "C" fn(*const BierDelta, *mut i64, usize, *mut usize) -> BierStatus) -> Vec<i64> {
    let mut len = 0;
    let status = unsafe { f(d, ptr::null_mut(), 0, &mut len) };
    assert!(status == BierStatus::BufferTooSmall || (status == BierStatus::Ok && len == 0));
    let mut buf = vec![0i64; len];
    assert_eq!(unsafe { f(d, buf.as_mut_ptr(), buf.len(), &mut len) }, BierStatus::Ok);
    buf
}

#[test]
fn three_singletons() {
    let d = new_delta(4, &[0b001, 0b010, 0b100]);
    assert_eq!(unsafe { bier_delta_n(d) }, 4);
    assert_eq!(vector(d, bier_delta_f_vector), vec![1, 3, 0, 0, 0]);
    assert_eq!(vector(d, bier_g_vector), vec![1, 3]);
    assert_eq!(vector(d, bier_sphere_f_vector), vec![1, 7, 15, 10]);
    assert_eq!(vector(d, bier_h_vector), vec![1, 4, 4, 1]);

    let mut valid = false;
    assert_eq!(unsafe { bier_shelling_valid(d, &mut valid) }, BierStatus::Ok);
    assert!(valid);

    let (mut a, mut x, mut len) = (vec![0u64; 10], vec![0u32; 10], 0);
    assert_eq!(unsafe { bier_facets(d, a.as_mut_ptr(), x.as_mut_ptr(), 10, &mut len) }, BierStatus::Ok);
    assert_eq!(len, 10);
    // the χ-lex order starts with 1 | 2
    assert_eq!((a[0], x[0]), (0b001, 2));
    unsafe { bier_delta_free(d) };
}

#[test]
fn hexagon_flips_to_pentagon() {
    let d = new_delta(3, &[0b001, 0b010, 0b100]);
    let (mut next, mut index) = (ptr::null_mut(), 99);
    assert_eq!(unsafe { bier_add_face(d, 0b011, &mut next, &mut index) }, BierStatus::Ok);
    assert_eq!(index, 1);
    assert_eq!(vector(next, bier_sphere_f_vector), vec![1, 5, 5]);

    let mut again = ptr::null_mut();
    assert_eq!(unsafe { bier_add_face(next, 0b011, &mut again, &mut index) }, BierStatus::NotAddable);
    let msg = unsafe { CStr::from_ptr(bier_last_error()) }.to_str().unwrap();
    assert!(msg.contains("already a face"), "{msg}");
    unsafe {
        bier_delta_free(next);
        bier_delta_free(d);
    }
}

#[test]
fn parse_prime_and_text() {
    let text = CString::new("1 2\n3\n").unwrap();
    let mut d = ptr::null_mut();
    assert_eq!(unsafe { bier_delta_parse(3, text.as_ptr(), &mut d) }, BierStatus::Ok);
    let mut p = ptr::null_mut();
    assert_eq!(unsafe { bier_delta_prime(d, &mut p) }, BierStatus::Ok);
    assert_eq!(vector(p, bier_delta_f_vector), vec![1, 2, 0, 0]);

    let mut s = ptr::null_mut();
    assert_eq!(unsafe { bier_sphere_text(d, &mut s) }, BierStatus::Ok);
    let body = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    assert!(body.contains("\nn=6\n"));
    unsafe {
        bier_string_free(s);
        bier_delta_free(p);
        bier_delta_free(d);
    }
}

#[test]
fn errors_and_null_handles() {
    let mut d = ptr::null_mut();
    // the full set is not a proper ideal
    assert_eq!(unsafe { bier_delta_new(2, [0b11u64].as_ptr(), 1, &mut d) }, BierStatus::InvalidArgument);
    assert!(d.is_null());
    assert!(!bier_last_error().is_null());
    let mut len = 0;
    assert_eq!(unsafe { bier_g_vector(ptr::null(), ptr::null_mut(), 0, &mut len) }, BierStatus::NullPointer);
    let bad = CString::new("1 x\n").unwrap();
    assert_eq!(unsafe { bier_delta_parse(3, bad.as_ptr(), &mut d) }, BierStatus::Parse);
    unsafe { bier_delta_free(ptr::null_mut()) };
}

#[test]
fn header_compiles_as_c() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR"));
    let header = std::fs::read_to_string(dir.join("include/bier.h")).unwrap();
    for name in ["bier_delta_new", "bier_g_vector", "bier_facets", "bier_delta_prime", "BIER_STATUS_OK"] {
        assert!(header.contains(name), "{name} missing from header");
    }
    let Ok(status) = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c", "-"])
        .arg("-I")
        .arg(dir.join("include"))
        .stdin(std::process::Stdio::piped())
        .spawn()
        .and_then(|mut child| {
            use std::io::Write;
            child.stdin.take().unwrap().write_all(b"#include \"bier.h\"\nint main(void) { return bier_delta_n(0); }\n")?;
            child.wait()
        })
    else {
        eprintln!("no C compiler; header syntax not checked");
        return;
    };
    assert!(status.success());
}
