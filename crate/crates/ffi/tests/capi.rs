use sgvariety_ffi::*;
use std::ffi::{CStr, CString};
use std::ptr;

const B2: [u32; 25] = [4, 2, 4, 0, 4, 3, 4, 1, 4, 4, 0, 4, 2, 4, 4, 4, 1, 4, 3, 4, 4, 4, 4, 4, 4];

fn last_error() -> String {
    let p = sgv_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    sgv_string_free(p);
    s
}

#[test]
fn table_round_trip() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(sgv_semigroup_from_table(5, B2.as_ptr(), -1, &mut s), SgvStatus::Ok);
        assert_eq!(sgv_semigroup_order(s), 5);
        let mut v = 0;
        assert_eq!(sgv_semigroup_product(s, 0, 1, &mut v), SgvStatus::Ok);
        assert_eq!(v, 2);
        assert_eq!(sgv_semigroup_product(s, 9, 1, &mut v), SgvStatus::InvalidInput);
        let mut da = true;
        assert_eq!(sgv_in_da(s, &mut da), SgvStatus::Ok);
        assert!(!da);
        let mut holds = true;
        let id = CString::new("(xy)^w x (xy)^w = (xy)^w").unwrap();
        assert_eq!(sgv_check_identity(s, id.as_ptr(), &mut holds), SgvStatus::Ok);
        assert!(!holds);
        let mut json = ptr::null_mut();
        assert_eq!(sgv_classify_json(s, 3, &mut json), SgvStatus::Ok);
        assert!(take_string(json).contains("\"inDA\":false"));
        sgv_semigroup_free(s);
    }
}

#[test]
fn levels_and_quotients() {
    unsafe {
        let text = CString::new("n 2\n0 0\n1 1\n").unwrap();
        let mut lz = ptr::null_mut();
        assert_eq!(sgv_semigroup_from_text(text.as_ptr(), &mut lz), SgvStatus::Ok);
        let (mut r1, mut r2, mut l2) = (true, false, true);
        assert_eq!(sgv_in_rm(lz, 1, &mut r1), SgvStatus::Ok);
        assert_eq!(sgv_in_rm(lz, 2, &mut r2), SgvStatus::Ok);
        assert_eq!(sgv_in_lm(lz, 2, &mut l2), SgvStatus::Ok);
        assert!(!r1 && r2 && !l2);
        assert_eq!(sgv_in_rm(lz, 0, &mut r1), SgvStatus::InvalidInput);
        let mut q = ptr::null_mut();
        let mut proj = [7u32; 2];
        assert_eq!(sgv_quotient(lz, SgvSide::K, &mut q, proj.as_mut_ptr()), SgvStatus::Ok);
        assert_eq!(sgv_semigroup_order(q), 1);
        assert_eq!(proj, [0, 0]);
        sgv_semigroup_free(q);
        assert_eq!(sgv_quotient(lz, SgvSide::D, &mut q, ptr::null_mut()), SgvStatus::Ok);
        assert_eq!(sgv_semigroup_order(q), 2);
        sgv_semigroup_free(q);
        sgv_semigroup_free(lz);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut s = ptr::null_mut();
        let bad = [1u32, 0, 0, 0];
        assert_eq!(sgv_semigroup_from_table(2, bad.as_ptr(), -1, &mut s), SgvStatus::InvalidInput);
        assert!(last_error().contains("associativity"));
        assert!(s.is_null());
        assert_eq!(sgv_semigroup_from_table(2, ptr::null(), -1, &mut s), SgvStatus::NullPointer);
        assert_eq!(last_error(), "table is null");
        let text = CString::new("n 2\n0 x\n").unwrap();
        assert_eq!(sgv_semigroup_from_text(text.as_ptr(), &mut s), SgvStatus::InvalidInput);
        assert!(last_error().starts_with("line 2"));
        let mut v = false;
        assert_eq!(sgv_in_da(ptr::null(), &mut v), SgvStatus::NullPointer);
        assert_eq!(sgv_semigroup_order(ptr::null()), 0);
        sgv_semigroup_free(ptr::null_mut());
        sgv_string_free(ptr::null_mut());
        // success clears the message
        let ok = CString::new("n 1\n0\n").unwrap();
        assert_eq!(sgv_semigroup_from_text(ok.as_ptr(), &mut s), SgvStatus::Ok);
        assert!(sgv_last_error().is_null());
        sgv_semigroup_free(s);
    }
}

#[test]
fn languages() {
    unsafe {
        let text = CString::new("alphabet a b\nstates 2\ninitial 0\naccepting 1\n0 a 1\n1 a 1\n1 b 1\n").unwrap();
        let mut d = ptr::null_mut();
        assert_eq!(sgv_dfa_from_text(text.as_ptr(), &mut d), SgvStatus::Ok);
        let mut json = ptr::null_mut();
        assert_eq!(sgv_classify_language_json(d, 4, &mut json), SgvStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(v["monoidOrder"], 3);
        assert_eq!(v["report"]["minR"], 2);
        sgv_dfa_free(d);
        let bad = CString::new("alphabet a\nstates 1\n0 b 0\n").unwrap();
        assert_eq!(sgv_dfa_from_text(bad.as_ptr(), &mut d), SgvStatus::InvalidInput);
    }
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/sgvariety.h");
    let text = std::fs::read_to_string(header).unwrap();
    for f in ["sgv_semigroup_from_table", "sgv_classify_language_json", "sgv_last_error", "SGV_STATUS_BUDGET_EXCEEDED"] {
        assert!(text.contains(f), "{f} missing from header");
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use_header.c");
    std::fs::write(
        &src,
        "#include \"sgvariety.h\"\nint main(void) { SgvSemigroup *s = 0; return (int)sgv_semigroup_order(s); }\n",
    )
    .unwrap();
    let status = std::process::Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(concat!(env!("CARGO_MANIFEST_DIR"), "/include"))
        .arg(&src)
        .status()
        .expect("a C compiler is available");
    assert!(status.success());
}
