//! Shared helpers for the integration tests, including a naive checker that
//! tries every assignment in `{1..t}^m`.
#![allow(dead_code)]

use imcg::coloring::{self, Color, VertexSet};
use imcg::{EdgeColoring, Multigraph};

/// Calls `f` on every coloring in `{1..=t}^m` until it returns `true`.
pub fn any_assignment(m: usize, t: Color, mut f: impl FnMut(&[Color]) -> bool) -> bool {
    if t == 0 {
        return m == 0 && f(&[]);
    }
    let mut c = vec![1; m];
    loop {
        if f(&c) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            if c[i] < t {
                c[i] += 1;
                break;
            }
            c[i] = 1;
            i += 1;
        }
    }
}

pub fn naive_interval_exists(g: &Multigraph, r: &VertexSet, t: Color) -> bool {
    any_assignment(g.edge_count(), t, |c| {
        coloring::is_interval_on(g, &EdgeColoring::new(c.to_vec()).unwrap(), r, t)
    })
}

pub fn naive_continuous_exists(g: &Multigraph, r: &VertexSet, t: Color) -> bool {
    any_assignment(g.edge_count(), t, |c| {
        coloring::is_continuous_on(g, &EdgeColoring::new(c.to_vec()).unwrap(), r, t)
    })
}

/// Every feasible `t` in `1..=m` for interval colorings on `r`.
pub fn naive_interval_spectrum(g: &Multigraph, r: &VertexSet) -> Vec<Color> {
    (1..=g.edge_count() as Color)
        .filter(|&t| naive_interval_exists(g, r, t))
        .collect()
}

pub fn naive_chromatic_index(g: &Multigraph) -> Color {
    (1..)
        .find(|&t| {
            any_assignment(g.edge_count(), t, |c| {
                coloring::is_proper(g, &EdgeColoring::new(c.to_vec()).unwrap())
            })
        })
        .unwrap()
}

pub fn graph(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
    Multigraph::from_pairs(n, pairs).unwrap()
}

pub fn cycle(n: usize) -> Multigraph {
    let pairs: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
    graph(n, &pairs)
}

pub fn star(k: usize) -> Multigraph {
    let pairs: Vec<_> = (2..=k + 1).map(|i| (1, i)).collect();
    graph(k + 1, &pairs)
}
