//! Small-graph corpora for exhaustive property checks.
//!
//! [`enumerate_bipartite_multigraphs`] streams every labeled bipartite
//! multigraph within the bounds. The `*_corpus` / [`connected_multigraphs`]
//! builders produce one representative per isomorphism class instead, grown
//! edge by edge and deduplicated by canonical form; representatives are
//! relabeled canonically so the output does not depend on discovery order.

use std::collections::BTreeMap;

use rand::Rng;

use crate::graph::{Bipartition, Multigraph, Part, VertexId};

use super::canon::canonical;

/// Edge multiplicity used by the enumerators unless told otherwise.
pub const DEFAULT_MAX_MULTIPLICITY: u8 = 3;

/// Labeled bipartite multigraphs with `1..=max_n1` part-1 vertices
/// (numbered first), `1..=max_n2` part-2 vertices and `1..=max_m` edges,
/// each vertex pair carrying at most 3 parallel edges.
///
/// Order: by `n1`, then `n2`, then the multiplicity vector over pairs
/// `(i, j)` in lexicographic order. Edges are listed pair by pair.
pub fn enumerate_bipartite_multigraphs(
    max_n1: usize,
    max_n2: usize,
    max_m: usize,
) -> BipartiteMultigraphs {
    BipartiteMultigraphs {
        max_n1,
        max_n2,
        max_m,
        n1: 1,
        n2: 1,
        mult: Vec::new(),
        started: false,
    }
}

#[derive(Debug, Clone)]
pub struct BipartiteMultigraphs {
    max_n1: usize,
    max_n2: usize,
    max_m: usize,
    n1: usize,
    n2: usize,
    mult: Vec<u8>,
    started: bool,
}

impl BipartiteMultigraphs {
    /// Advances `mult` to the next vector in lexicographic order whose sum
    /// stays within `max_m`. Returns `false` when exhausted.
    fn advance(&mut self) -> bool {
        let mut prefix: Vec<usize> = Vec::with_capacity(self.mult.len());
        let mut acc = 0;
        for &x in &self.mult {
            acc += x as usize;
            prefix.push(acc);
        }
        for i in (0..self.mult.len()).rev() {
            if self.mult[i] < DEFAULT_MAX_MULTIPLICITY && prefix[i] < self.max_m {
                self.mult[i] += 1;
                for x in &mut self.mult[i + 1..] {
                    *x = 0;
                }
                return true;
            }
        }
        false
    }

    fn build(&self) -> (Multigraph, Bipartition) {
        let mut edges = Vec::new();
        for i in 0..self.n1 {
            for j in 0..self.n2 {
                for _ in 0..self.mult[i * self.n2 + j] {
                    edges.push((VertexId(i + 1), VertexId(self.n1 + j + 1)));
                }
            }
        }
        let g = Multigraph::new(self.n1 + self.n2, edges).expect("enumerated graph is valid");
        let b = Bipartition::split_at(&g, self.n1).expect("enumerated graph is bipartite");
        (g, b)
    }
}

impl Iterator for BipartiteMultigraphs {
    type Item = (Multigraph, Bipartition);

    fn next(&mut self) -> Option<Self::Item> {
        if self.max_n1 == 0 || self.max_n2 == 0 || self.max_m == 0 {
            return None;
        }
        loop {
            if !self.started {
                self.mult = vec![0; self.n1 * self.n2];
                self.started = true;
            }
            if self.advance() {
                return Some(self.build());
            }
            self.started = false;
            if self.n2 < self.max_n2 {
                self.n2 += 1;
            } else if self.n1 < self.max_n1 {
                self.n1 += 1;
                self.n2 = 1;
            } else {
                return None;
            }
        }
    }
}

/// A multigraph stored as a symmetric multiplicity matrix with vertex colors
/// (part labels for bipartite graphs, all zero otherwise).
#[derive(Debug, Clone, PartialEq, Eq)]
struct Labeled {
    n: usize,
    adj: Vec<u8>,
    colors: Vec<u32>,
}

impl Labeled {
    fn single_vertex() -> Self {
        Labeled {
            n: 1,
            adj: vec![0],
            colors: vec![0],
        }
    }

    fn with_vertex(&self, color: u32) -> Self {
        let n = self.n + 1;
        let mut adj = vec![0u8; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                adj[i * n + j] = self.adj[i * self.n + j];
            }
        }
        let mut colors = self.colors.clone();
        colors.push(color);
        Labeled { n, adj, colors }
    }

    fn with_edge(&self, a: usize, b: usize) -> Self {
        let mut out = self.clone();
        out.adj[a * self.n + b] += 1;
        out.adj[b * self.n + a] += 1;
        out
    }

    fn has_triangle(&self) -> bool {
        let n = self.n;
        (0..n).any(|a| {
            (a + 1..n).any(|b| {
                self.adj[a * n + b] > 0
                    && (b + 1..n).any(|c| self.adj[a * n + c] > 0 && self.adj[b * n + c] > 0)
            })
        })
    }

    /// Canonically relabeled copy with its key.
    fn canonicalize(&self) -> (Vec<u8>, Labeled) {
        let c = canonical(self.n, &self.adj, &self.colors);
        let n = self.n;
        let mut adj = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                adj[i * n + j] = self.adj[c.order[i] * n + c.order[j]];
            }
        }
        let colors = c.order.iter().map(|&v| self.colors[v]).collect();
        (c.key, Labeled { n, adj, colors })
    }

    fn to_multigraph(&self) -> Multigraph {
        let n = self.n;
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for _ in 0..self.adj[i * n + j] {
                    edges.push((VertexId(i + 1), VertexId(j + 1)));
                }
            }
        }
        Multigraph::new(n, edges).expect("corpus graph is valid")
    }
}

type Level = BTreeMap<Vec<u8>, Labeled>;

fn insert(level: &mut Level, g: Labeled) {
    let (key, canon) = g.canonicalize();
    level.entry(key).or_insert(canon);
}

/// One representative of every connected multigraph with `1..=max_m`
/// edges, at most `max_n` vertices and multiplicity at most
/// `max_multiplicity`. With `triangle_free` only graphs without three
/// mutually adjacent vertices are produced. Ordered by edge count, then
/// canonical key.
pub fn connected_multigraphs(
    max_n: usize,
    max_m: usize,
    max_multiplicity: u8,
    triangle_free: bool,
) -> Vec<Multigraph> {
    // Every connected graph with m >= 1 edges loses an edge (on a cycle) or a
    // leaf and stays connected, so growing level by level reaches all of them;
    // both moves also keep a graph triangle-free.
    let mut out = Vec::new();
    if max_n < 2 {
        return out;
    }
    let mut level: Level = BTreeMap::new();
    insert(&mut level, Labeled::single_vertex());
    for _ in 1..=max_m {
        let mut next: Level = BTreeMap::new();
        for g in level.values() {
            let n = g.n;
            for a in 0..n {
                for b in a + 1..n {
                    if g.adj[a * n + b] < max_multiplicity {
                        let h = g.with_edge(a, b);
                        if !(triangle_free && h.has_triangle()) {
                            insert(&mut next, h);
                        }
                    }
                }
                if n < max_n {
                    insert(&mut next, g.with_vertex(0).with_edge(a, n));
                }
            }
        }
        out.extend(next.values().map(Labeled::to_multigraph));
        level = next;
    }
    out
}

/// One representative of every bipartite multigraph (parts distinguished,
/// not necessarily connected, no isolated vertices) with `1..=max_m` edges,
/// at most `max_n1`/`max_n2` vertices per part and multiplicity at most
/// `max_multiplicity`. Part 1 is numbered first in each representative.
pub fn bipartite_corpus(
    max_n1: usize,
    max_n2: usize,
    max_m: usize,
    max_multiplicity: u8,
) -> Vec<(Multigraph, Bipartition)> {
    // Deleting any edge and then any vertices it leaves isolated gives a
    // smaller member, so "add an edge", "add a pendant in either part" and
    // "add a disjoint K2" generate everything.
    let mut out = Vec::new();
    if max_n1 == 0 || max_n2 == 0 {
        return out;
    }
    let k2 = Labeled {
        n: 2,
        adj: vec![0, 1, 1, 0],
        colors: vec![0, 1],
    };
    let mut level: Level = BTreeMap::new();
    insert(&mut level, k2);
    let sizes = |g: &Labeled| {
        let n1 = g.colors.iter().filter(|&&c| c == 0).count();
        (n1, g.n - n1)
    };
    for m in 1..=max_m {
        if m > 1 {
            let mut next: Level = BTreeMap::new();
            for g in level.values() {
                let n = g.n;
                let (n1, n2) = sizes(g);
                for a in 0..n {
                    for b in a + 1..n {
                        if g.colors[a] != g.colors[b] && g.adj[a * n + b] < max_multiplicity {
                            insert(&mut next, g.with_edge(a, b));
                        }
                    }
                    let other = 1 - g.colors[a];
                    let room = if other == 0 { n1 < max_n1 } else { n2 < max_n2 };
                    if room {
                        insert(&mut next, g.with_vertex(other).with_edge(a, n));
                    }
                }
                if n1 < max_n1 && n2 < max_n2 {
                    insert(
                        &mut next,
                        g.with_vertex(0).with_vertex(1).with_edge(n, n + 1),
                    );
                }
            }
            level = next;
        }
        for g in level.values() {
            let mg = g.to_multigraph();
            let parts = g
                .colors
                .iter()
                .map(|&c| if c == 0 { Part::One } else { Part::Two })
                .collect();
            let bip = Bipartition::new(&mg, parts).expect("corpus graph is bipartite");
            out.push((mg, bip));
        }
    }
    out
}

/// A random bipartite multigraph with `n1` + `n2` vertices (part 1 first) and
/// `m` edges, pairs drawn uniformly among those below `max_multiplicity`.
/// Returns `None` when `m` edges cannot fit.
pub fn sample_bipartite_multigraph<R: Rng>(
    rng: &mut R,
    n1: usize,
    n2: usize,
    m: usize,
    max_multiplicity: u8,
) -> Option<(Multigraph, Bipartition)> {
    if m > n1 * n2 * max_multiplicity as usize {
        return None;
    }
    let mut mult = vec![0u8; n1 * n2];
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let i = rng.gen_range(0..n1);
        let j = rng.gen_range(0..n2);
        if mult[i * n2 + j] < max_multiplicity {
            mult[i * n2 + j] += 1;
            edges.push((VertexId(i + 1), VertexId(n1 + j + 1)));
        }
    }
    let g = Multigraph::new(n1 + n2, edges).ok()?;
    let b = Bipartition::split_at(&g, n1).ok()?;
    Some((g, b))
}
