use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use degencrit_ffi::*;

fn handle(family: &str) -> *mut DcGraph {
    let family = CString::new(family).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { dc_graph_family(family.as_ptr(), &mut g) }, DcStatus::Ok);
    g
}

fn last_error() -> Option<String> {
    let p = dc_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

#[test]
fn criticality_of_c6_squared() {
    let g = handle("cycle-square 6");
    unsafe {
        assert_eq!((dc_graph_vertex_count(g), dc_graph_edge_count(g)), (6, 12));
        let mut r = DcCriticality::default();
        assert_eq!(dc_criticality(g, &mut r), DcStatus::Ok);
        assert_eq!(r.col, 5);
        assert!(r.is_col_critical && r.is_double_col_critical && r.is_two_connected);
        assert_eq!((r.dcc_edge_count, r.edge_count), (12, 12));

        let mut count = 0;
        assert_eq!(dc_dcc_edges(g, ptr::null_mut(), 0, &mut count), DcStatus::BufferTooSmall);
        assert_eq!(count, 12);
        let mut buf = vec![0usize; 2 * count];
        assert_eq!(dc_dcc_edges(g, buf.as_mut_ptr(), count, &mut count), DcStatus::Ok);
        assert_eq!(&buf[..2], &[0, 1]);
        dc_graph_free(g);
    }
}

#[test]
fn graph6_and_edges_round_trip() {
    let text = CString::new("E}lw").unwrap();
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(dc_graph_from_graph6(text.as_ptr(), &mut g), DcStatus::Ok);
        let mut buf = [0 as std::ffi::c_char; 16];
        let mut needed = 0;
        assert_eq!(dc_graph_to_graph6(g, buf.as_mut_ptr(), buf.len(), &mut needed), DcStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "E}lw");
        assert_eq!(needed, 5);

        let ends = [0usize, 1, 1, 2, 2, 0];
        let mut t = ptr::null_mut();
        assert_eq!(dc_graph_from_edges(3, ends.as_ptr(), 3, &mut t), DcStatus::Ok);
        let mut col = 0;
        assert_eq!(dc_colouring_number(t, &mut col), DcStatus::Ok);
        assert_eq!(col, 3);
        let mut iso = true;
        assert_eq!(dc_are_isomorphic(g, t, &mut iso), DcStatus::Ok);
        assert!(!iso);
        dc_graph_free(g);
        dc_graph_free(t);
    }
}

#[test]
fn errors_are_reported_with_messages() {
    let mut g = ptr::null_mut();
    unsafe {
        let bad = CString::new("E}l").unwrap();
        assert_eq!(dc_graph_from_graph6(bad.as_ptr(), &mut g), DcStatus::ParseError);
        assert!(g.is_null());
        assert!(last_error().unwrap().contains("graph6"));

        assert_eq!(dc_graph_from_graph6(ptr::null(), &mut g), DcStatus::NullPointer);
        let ends = [0usize, 5];
        assert_eq!(dc_graph_from_edges(3, ends.as_ptr(), 1, &mut g), DcStatus::InvalidArgument);
        let unknown = CString::new("petersen").unwrap();
        assert_eq!(dc_graph_family(unknown.as_ptr(), &mut g), DcStatus::InvalidArgument);

        let mut col = 0;
        assert_eq!(dc_colouring_number(ptr::null(), &mut col), DcStatus::NullPointer);

        let big = handle("cycle-square 13");
        let mut buf = [0 as std::ffi::c_char; 64];
        assert_eq!(dc_classify(big, buf.as_mut_ptr(), buf.len(), ptr::null_mut()), DcStatus::SizeLimit);
        dc_graph_free(big);
        dc_graph_free(ptr::null_mut());

        let k5 = handle("complete 5");
        assert_eq!(dc_classify(k5, buf.as_mut_ptr(), buf.len(), ptr::null_mut()), DcStatus::Ok);
        assert_eq!(CStr::from_ptr(buf.as_ptr()).to_str().unwrap(), "CycleSquare(5)");
        assert!(last_error().is_none());
        dc_graph_free(k5);
    }
}

/// Compiles a C program against the generated header and the static library.
#[test]
fn c_program_links_against_static_library() {
    let crate_dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let exe = std::env::current_exe().unwrap();
    let target = exe.parent().and_then(|deps| deps.parent()).unwrap().to_path_buf();
    let lib = target.join("libdegencrit_ffi.a");
    if !lib.exists() || Command::new("cc").arg("--version").output().is_err() {
        eprintln!("skipping: no static library at {} or no C compiler", lib.display());
        return;
    }
    let out = tempfile_path("degencrit_smoke");
    let status = Command::new("cc")
        .arg(crate_dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(crate_dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(status.success(), "C compilation failed");
    let run = Command::new(&out).output().unwrap();
    let _ = std::fs::remove_file(&out);
    assert!(run.status.success(), "{}", String::from_utf8_lossy(&run.stderr));
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}
