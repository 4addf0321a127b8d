use std::ffi::{CStr, CString};
use std::ptr;

use imcg_ffi::*;

const C4: &str = "p imcg 4 4\nb 2\ne 1 3\ne 3 2\ne 2 4\ne 4 1\n";

fn parse(text: &str) -> *mut ImcgGraph {
    let text = CString::new(text).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { imcg_graph_parse(text.as_ptr(), &mut g) },
        ImcgStatus::Ok
    );
    g
}

fn colors(c: *const ImcgColoring) -> Vec<u32> {
    let n = unsafe { imcg_coloring_len(c) };
    (1..=n)
        .map(|e| {
            let mut v = 0;
            assert_eq!(unsafe { imcg_coloring_get(c, e, &mut v) }, ImcgStatus::Ok);
            v
        })
        .collect()
}

fn last_error() -> String {
    let p = imcg_last_error();
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { imcg_string_free(p) };
    s
}

#[test]
fn graph_round_trip_and_queries() {
    let g = parse(C4);
    unsafe {
        assert_eq!(imcg_graph_vertex_count(g), 4);
        assert_eq!(imcg_graph_edge_count(g), 4);
        assert_eq!(imcg_graph_max_degree(g), 2);
        let mut d = 0;
        assert_eq!(imcg_graph_degree(g, 3, &mut d), ImcgStatus::Ok);
        assert_eq!(d, 2);
        assert_eq!(imcg_graph_degree(g, 9, &mut d), ImcgStatus::InvalidInput);
        let s = imcg_graph_serialize(g);
        assert_eq!(CStr::from_ptr(s).to_str().unwrap(), C4);
        imcg_string_free(s);
        imcg_graph_free(g);
    }
}

#[test]
fn build_from_arrays() {
    let ends = [1usize, 2, 1, 3, 1, 4];
    let parts = [1u8, 2, 2, 2];
    let mut g = ptr::null_mut();
    unsafe {
        assert_eq!(
            imcg_graph_new(4, ends.as_ptr(), 3, parts.as_ptr(), &mut g),
            ImcgStatus::Ok
        );
        let mut c = ptr::null_mut();
        assert_eq!(imcg_continuous_on_part(g, &mut c), ImcgStatus::Ok);
        assert_eq!(colors(c), vec![1, 2, 3]);
        let mut ok = false;
        assert_eq!(
            imcg_is_continuous_on(g, c, ImcgPart::One, 3, &mut ok),
            ImcgStatus::Ok
        );
        assert!(ok);
        imcg_coloring_free(c);
        imcg_graph_free(g);

        let bad = [1u8, 1, 2, 2];
        assert_eq!(
            imcg_graph_new(4, ends.as_ptr(), 3, bad.as_ptr(), &mut g),
            ImcgStatus::InvalidInput
        );
        assert!(last_error().contains("both in part"));
        let looped = [1usize, 1];
        assert_eq!(
            imcg_graph_new(2, looped.as_ptr(), 1, ptr::null(), &mut g),
            ImcgStatus::InvalidInput
        );
    }
}

#[test]
fn validators_and_transforms() {
    let g = parse(C4);
    unsafe {
        let mut c = ptr::null_mut();
        assert_eq!(
            imcg_coloring_new([1, 2, 3, 2].as_ptr(), 4, &mut c),
            ImcgStatus::Ok
        );
        let mut ok = false;
        assert_eq!(imcg_is_proper(g, c, &mut ok), ImcgStatus::Ok);
        assert!(ok);
        assert_eq!(
            imcg_is_interval_on(g, c, ImcgPart::All, 3, &mut ok),
            ImcgStatus::Ok
        );
        assert!(ok);
        assert_eq!(
            imcg_is_interval_on(g, c, ImcgPart::All, 4, &mut ok),
            ImcgStatus::Ok
        );
        assert!(!ok);

        let mut folded = ptr::null_mut();
        assert_eq!(imcg_compress_to_delta(g, c, &mut folded), ImcgStatus::Ok);
        assert_eq!(colors(folded), vec![1, 2, 1, 2]);
        let mut down = ptr::null_mut();
        assert_eq!(imcg_regular_step_down(g, c, &mut down), ImcgStatus::Ok);
        assert_eq!(colors(down), vec![1, 2, 1, 2]);
        let mut again = ptr::null_mut();
        assert_eq!(
            imcg_regular_step_down(g, down, &mut again),
            ImcgStatus::InvalidInput
        );
        for h in [c, folded, down] {
            imcg_coloring_free(h);
        }
        imcg_graph_free(g);
    }
}

#[test]
fn oracle_and_spectrum() {
    let g = parse(C4);
    unsafe {
        let (mut w, mut big) = (0, 0);
        assert_eq!(
            imcg_interval_stats(g, ImcgPart::All, 0, &mut w, &mut big),
            ImcgStatus::Ok
        );
        assert_eq!((w, big), (2, 3));
        let mut chi = 0;
        assert_eq!(imcg_chromatic_index(g, 0, &mut chi), ImcgStatus::Ok);
        assert_eq!(chi, 2);
        assert_eq!(
            imcg_solve_interval_on(g, ImcgPart::All, 4, 0, ptr::null_mut()),
            ImcgStatus::NotExists
        );
        let mut wit = ptr::null_mut();
        assert_eq!(
            imcg_solve_interval_on(g, ImcgPart::All, 3, 0, &mut wit),
            ImcgStatus::Ok
        );
        assert_eq!(colors(wit), vec![1, 2, 3, 2]);
        imcg_coloring_free(wit);
        assert_eq!(
            imcg_interval_stats(g, ImcgPart::All, 1, &mut w, &mut big),
            ImcgStatus::Capped
        );

        for t in 2..=4 {
            let mut c = ptr::null_mut();
            assert_eq!(imcg_realize_spectrum(g, t, 0, &mut c), ImcgStatus::Ok);
            let mut ok = false;
            imcg_is_interval_on(g, c, ImcgPart::One, t, &mut ok);
            assert!(ok);
            imcg_coloring_free(c);
        }
        let mut c = ptr::null_mut();
        assert_eq!(
            imcg_realize_spectrum(g, 5, 0, &mut c),
            ImcgStatus::NotExists
        );
        assert!(last_error().contains("outside the realizable range"));
        imcg_graph_free(g);
    }
}

#[test]
fn null_and_bad_text() {
    unsafe {
        let mut g = ptr::null_mut();
        assert_eq!(
            imcg_graph_parse(ptr::null(), &mut g),
            ImcgStatus::NullPointer
        );
        let bad = CString::new("p imcg 2 1\ne 1 1\n").unwrap();
        assert_eq!(
            imcg_graph_parse(bad.as_ptr(), &mut g),
            ImcgStatus::InvalidInput
        );
        assert!(last_error().starts_with("line 2"));
        let mut d = 0;
        assert_eq!(
            imcg_graph_degree(ptr::null(), 1, &mut d),
            ImcgStatus::NullPointer
        );
        assert!(imcg_graph_serialize(ptr::null()).is_null());
        imcg_graph_free(ptr::null_mut());
        imcg_coloring_free(ptr::null_mut());

        let text = CString::new("p imcol 2 2\nc 1 2\nc 2 1\n").unwrap();
        let mut c = ptr::null_mut();
        assert_eq!(imcg_coloring_parse(text.as_ptr(), &mut c), ImcgStatus::Ok);
        let s = imcg_coloring_serialize(c);
        assert_eq!(
            CStr::from_ptr(s).to_str().unwrap(),
            "p imcol 2 2\nc 1 2\nc 2 1\n"
        );
        imcg_string_free(s);
        imcg_coloring_free(c);
    }
}
