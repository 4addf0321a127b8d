//! Depth-first edge-by-edge backtracking shared by every oracle query.
//!
//! Edges are assigned in ascending id order and colors are tried in
//! ascending order, so the first witness found is canonical. One node is
//! counted per recursive call, the root included. When the budget is
//! exceeded the run stops and reports exactly `node_cap` nodes.
//!
//! With `jobs > 1` the colors of the first edge are explored as independent
//! subtrees on a thread pool. Subtree results are merged in color order
//! using the same budget arithmetic as the sequential run, so verdicts,
//! witnesses and node counts do not depend on the thread count.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Multigraph;

use super::{OracleResult, SearchLimits, Verdict};

/// Largest color the bitmask search can represent.
pub(crate) const MAX_COLORS: Color = 63;

/// Constraint set for one search.
#[derive(Debug, Clone)]
pub(crate) struct Problem {
    pub t: Color,
    /// Every color `1..=t` must appear.
    pub all_colors: bool,
    /// Vertices whose spectrum must be consecutive.
    pub interval: Vec<bool>,
    /// Per-vertex allowed colors, bit `c` for color `c`.
    pub allowed: Vec<u64>,
    /// Exact number of edges per color, indexed by color (entry 0 unused).
    pub class_sizes: Option<Vec<u32>>,
}

impl Problem {
    pub fn new(g: &Multigraph, t: Color) -> Self {
        let full = palette(t);
        Problem {
            t,
            all_colors: false,
            interval: vec![false; g.vertex_count()],
            allowed: vec![full; g.vertex_count()],
            class_sizes: None,
        }
    }
}

/// Bitmask of colors `1..=t`.
pub(crate) fn palette(t: Color) -> u64 {
    if t == 0 {
        0
    } else {
        (u64::MAX >> (63 - t.min(MAX_COLORS))) & !1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Found,
    Exhausted,
    Capped,
    Cancelled,
}

struct Dfs<'a> {
    ends: &'a [(usize, usize)],
    deg: &'a [u32],
    p: &'a Problem,
    used: Vec<u64>,
    count: Vec<u32>,
    distinct: u32,
    colors: Vec<Color>,
    nodes: u64,
    cap: u64,
    cancel: Option<(&'a AtomicUsize, usize)>,
}

impl<'a> Dfs<'a> {
    fn new(ends: &'a [(usize, usize)], deg: &'a [u32], p: &'a Problem, cap: u64) -> Self {
        Dfs {
            ends,
            deg,
            p,
            used: vec![0; deg.len()],
            count: vec![0; p.t as usize + 1],
            distinct: 0,
            colors: vec![0; ends.len()],
            nodes: 0,
            cap,
            cancel: None,
        }
    }

    #[inline]
    fn span_ok(&self, v: usize, bit: u64) -> bool {
        if !self.p.interval[v] {
            return true;
        }
        let mask = self.used[v] | bit;
        let span = (63 - mask.leading_zeros()) - mask.trailing_zeros() + 1;
        span <= self.deg[v]
    }

    #[inline]
    fn feasible(&self, i: usize, c: Color) -> bool {
        let (u, v) = self.ends[i];
        let bit = 1u64 << c;
        if (self.used[u] | self.used[v]) & bit != 0 {
            return false;
        }
        if self.p.allowed[u] & self.p.allowed[v] & bit == 0 {
            return false;
        }
        if !self.span_ok(u, bit) || !self.span_ok(v, bit) {
            return false;
        }
        if let Some(sizes) = &self.p.class_sizes {
            if self.count[c as usize] >= sizes[c as usize] {
                return false;
            }
        }
        if self.p.all_colors {
            let distinct = self.distinct + u32::from(self.count[c as usize] == 0);
            let remaining = (self.ends.len() - i - 1) as u32;
            if self.p.t - distinct > remaining {
                return false;
            }
        }
        true
    }

    #[inline]
    fn assign(&mut self, i: usize, c: Color) {
        let (u, v) = self.ends[i];
        let bit = 1u64 << c;
        self.used[u] |= bit;
        self.used[v] |= bit;
        if self.count[c as usize] == 0 {
            self.distinct += 1;
        }
        self.count[c as usize] += 1;
        self.colors[i] = c;
    }

    #[inline]
    fn unassign(&mut self, i: usize, c: Color) {
        let (u, v) = self.ends[i];
        let bit = !(1u64 << c);
        self.used[u] &= bit;
        self.used[v] &= bit;
        self.count[c as usize] -= 1;
        if self.count[c as usize] == 0 {
            self.distinct -= 1;
        }
        self.colors[i] = 0;
    }

    fn complete(&self) -> bool {
        if self.p.all_colors && self.distinct != self.p.t {
            return false;
        }
        match &self.p.class_sizes {
            Some(sizes) => (1..=self.p.t as usize).all(|c| self.count[c] == sizes[c]),
            None => true,
        }
    }

    fn rec(&mut self, i: usize) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Outcome::Capped;
        }
        if let Some((flag, me)) = self.cancel {
            if flag.load(Ordering::Relaxed) < me {
                return Outcome::Cancelled;
            }
        }
        if i == self.ends.len() {
            return if self.complete() {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        for c in 1..=self.p.t {
            if !self.feasible(i, c) {
                continue;
            }
            self.assign(i, c);
            match self.rec(i + 1) {
                Outcome::Exhausted => self.unassign(i, c),
                other => return other,
            }
        }
        Outcome::Exhausted
    }
}

fn guard(g: &Multigraph, p: &Problem, limits: &SearchLimits) -> Result<()> {
    if g.edge_count() > limits.max_edges {
        return Err(Error::input(format!(
            "graph has {} edges; the oracle is limited to {} (raise the limit to override)",
            g.edge_count(),
            limits.max_edges
        )));
    }
    if p.t > MAX_COLORS {
        return Err(Error::input(format!(
            "oracle supports at most {MAX_COLORS} colors"
        )));
    }
    Ok(())
}

fn witness(colors: Vec<Color>) -> EdgeColoring {
    EdgeColoring::from_vec_unchecked(colors)
}

/// Runs the backtracking search for `p` on `g`.
pub(crate) fn solve(g: &Multigraph, p: &Problem, limits: &SearchLimits) -> Result<OracleResult> {
    guard(g, p, limits)?;
    let ends: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.index(), v.index()))
        .collect();
    let deg: Vec<u32> = g.degrees().into_iter().map(|d| d as u32).collect();
    let cap = limits.node_cap;

    if limits.jobs <= 1 || ends.is_empty() {
        let mut dfs = Dfs::new(&ends, &deg, p, cap);
        let outcome = dfs.rec(0);
        return Ok(match outcome {
            Outcome::Found => OracleResult {
                verdict: Verdict::Exists,
                witness: Some(witness(dfs.colors)),
                nodes_explored: dfs.nodes,
            },
            Outcome::Exhausted => OracleResult {
                verdict: Verdict::NotExists,
                witness: None,
                nodes_explored: dfs.nodes,
            },
            Outcome::Capped => OracleResult::capped(cap),
            Outcome::Cancelled => unreachable!("sequential search is never cancelled"),
        });
    }

    if cap == 0 {
        return Ok(OracleResult::capped(cap));
    }
    let root = Dfs::new(&ends, &deg, p, cap);
    let branches: Vec<Color> = (1..=p.t).filter(|&c| root.feasible(0, c)).collect();
    let found = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(limits.jobs)
        .build()
        .map_err(|e| Error::input(format!("cannot start worker pool: {e}")))?;
    let results: Vec<(Outcome, u64, Vec<Color>)> = pool.install(|| {
        branches
            .par_iter()
            .enumerate()
            .map(|(b, &c)| {
                let mut dfs = Dfs::new(&ends, &deg, p, cap - 1);
                dfs.cancel = Some((&found, b));
                dfs.assign(0, c);
                let outcome = dfs.rec(1);
                if outcome == Outcome::Found {
                    found.fetch_min(b, Ordering::Relaxed);
                }
                (outcome, dfs.nodes, dfs.colors)
            })
            .collect()
    });

    let mut nodes = 1u64;
    for (outcome, sub, colors) in results {
        match outcome {
            Outcome::Found => {
                if nodes + sub > cap {
                    return Ok(OracleResult::capped(cap));
                }
                return Ok(OracleResult {
                    verdict: Verdict::Exists,
                    witness: Some(witness(colors)),
                    nodes_explored: nodes + sub,
                });
            }
            Outcome::Exhausted => {
                nodes += sub;
                if nodes > cap {
                    return Ok(OracleResult::capped(cap));
                }
            }
            Outcome::Capped => return Ok(OracleResult::capped(cap)),
            Outcome::Cancelled => {
                return Err(Error::invariant(
                    "subtree cancelled without an earlier witness",
                ))
            }
        }
    }
    Ok(OracleResult {
        verdict: Verdict::NotExists,
        witness: None,
        nodes_explored: nodes,
    })
}
