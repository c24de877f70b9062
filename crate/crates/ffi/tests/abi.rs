use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use peanocube_ffi::*;

fn from_json(s: &str) -> (PcStatus, *mut PcGraph) {
    let c = CString::new(s).unwrap();
    let mut g = ptr::null_mut();
    let st = unsafe { pc_graph_from_json(c.as_ptr(), &mut g) };
    (st, g)
}

const C6: &str = r#"{"vertices":6,"edges":[[0,1],[1,2],[2,3],[3,4],[4,5],[0,5]]}"#;

#[test]
fn hexagon_round_trip() {
    let (st, g) = from_json(C6);
    assert_eq!(st, PcStatus::Ok);
    let (mut n, mut m) = (0, 0);
    let (mut peano, mut hm) = (false, false);
    let (mut idim, mut helly, mut euler) = (0usize, 0usize, 0i64);
    unsafe {
        assert_eq!(pc_graph_size(g, &mut n, &mut m), PcStatus::Ok);
        assert_eq!(pc_is_peano(g, &mut peano), PcStatus::Ok);
        assert_eq!(pc_is_hyper_median(g, &mut hm), PcStatus::Ok);
        assert_eq!(pc_isometric_dimension(g, &mut idim), PcStatus::Ok);
        assert_eq!(pc_helly_number(g, &mut helly), PcStatus::Ok);
        assert_eq!(pc_euler_sum(g, &mut euler), PcStatus::Ok);
        pc_graph_free(g);
    }
    assert_eq!((n, m, peano, hm, idim, helly, euler), (6, 6, true, true, 3, 3, 1));
}

#[test]
fn analysis_json() {
    let edges: [usize; 8] = [0, 1, 1, 2, 2, 3, 0, 3];
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pc_graph_from_edges(4, edges.as_ptr(), 4, &mut g) }, PcStatus::Ok);
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { pc_analyze_json(g, &mut s) }, PcStatus::Ok);
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe {
        pc_string_free(s);
        pc_graph_free(g);
    }
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["flags"]["median"], true);
    assert_eq!(v["eulerSum"], 1);
}

#[test]
fn error_codes() {
    assert_eq!(from_json("{").0, PcStatus::Parse);
    assert_eq!(from_json(r#"{"vertices":2,"edges":[[0,5]]}"#).0, PcStatus::Parse);
    let mut g = ptr::null_mut();
    assert_eq!(unsafe { pc_graph_from_json(ptr::null(), &mut g) }, PcStatus::NullPointer);
    let edges: [usize; 2] = [0, 0];
    assert_eq!(unsafe { pc_graph_from_edges(1, edges.as_ptr(), 1, &mut g) }, PcStatus::InvalidEdge);
    let (_, k23) = from_json(r#"{"vertices":5,"edges":[[0,2],[0,3],[0,4],[1,2],[1,3],[1,4]]}"#);
    let mut idim = 0;
    assert_eq!(unsafe { pc_isometric_dimension(k23, &mut idim) }, PcStatus::NotPartialCube);
    let mut b = false;
    assert_eq!(unsafe { pc_is_peano(ptr::null(), &mut b) }, PcStatus::NullPointer);
    unsafe { pc_graph_free(k23) };
    let name = unsafe { CStr::from_ptr(pc_status_name(PcStatus::NotPartialCube)) };
    assert_eq!(name.to_str().unwrap(), "NotPartialCube");
}

#[test]
fn header_is_valid_c() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/peanocube.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for f in ["pc_graph_from_json", "pc_analyze_json", "pc_string_free", "PC_STATUS_NOT_PEANO"] {
        assert!(text.contains(f), "{f}");
    }
    if let Ok(out) = Command::new("cc").args(["-fsyntax-only", "-x", "c"]).arg(&header).output() {
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
}
