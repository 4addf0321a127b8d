//! Exhaustive solvers used as ground truth: interval and continuous
//! colorings on a vertex set, chromatic index, list edge coloring and
//! colorings with prescribed class sizes, plus the small-graph corpora the
//! property checks run over.
//!
//! Every solver returns a three-way [`Verdict`]; running out of node budget
//! is reported as [`Verdict::Capped`] and never as non-existence. Witnesses
//! are re-checked with the validators before they are returned.

mod canon;
pub mod enumerate;
mod search;

use crate::coloring::{self, Color, EdgeColoring, VertexSet};
use crate::error::{Error, Result};
use crate::gadgets::{ColorSet, Preassignment};
use crate::graph::{Bipartition, Multigraph, Part};

pub use enumerate::{
    bipartite_corpus, connected_multigraphs, enumerate_bipartite_multigraphs,
    sample_bipartite_multigraph, BipartiteMultigraphs,
};

use search::{palette, Problem};

pub const DEFAULT_NODE_CAP: u64 = 10_000_000;
pub const DEFAULT_MAX_EDGES: usize = 12;

/// Resource bounds for a search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub node_cap: u64,
    /// Hard guard on the number of edges of the input graph.
    pub max_edges: usize,
    /// Worker threads splitting the first edge's colors; results do not
    /// depend on this value.
    pub jobs: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_cap: DEFAULT_NODE_CAP,
            max_edges: DEFAULT_MAX_EDGES,
            jobs: 1,
        }
    }
}

impl SearchLimits {
    pub fn with_cap(mut self, node_cap: u64) -> Self {
        self.node_cap = node_cap;
        self
    }

    pub fn with_max_edges(mut self, max_edges: usize) -> Self {
        self.max_edges = max_edges;
        self
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Exists,
    NotExists,
    /// The node budget ran out; existence is unknown.
    Capped,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub verdict: Verdict,
    pub witness: Option<EdgeColoring>,
    pub nodes_explored: u64,
}

impl OracleResult {
    pub(crate) fn capped(nodes: u64) -> Self {
        OracleResult {
            verdict: Verdict::Capped,
            witness: None,
            nodes_explored: nodes,
        }
    }

    pub fn exists(&self) -> bool {
        self.verdict == Verdict::Exists
    }

    pub fn is_capped(&self) -> bool {
        self.verdict == Verdict::Capped
    }

    /// `Some(exists)` for a decided search, `None` when capped.
    pub fn decided(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Exists => Some(true),
            Verdict::NotExists => Some(false),
            Verdict::Capped => None,
        }
    }

    fn into_decided(self) -> Result<Self> {
        if self.is_capped() {
            Err(Error::Capped {
                nodes: self.nodes_explored,
            })
        } else {
            Ok(self)
        }
    }
}

/// Checks a returned witness with `check`; a failure is a solver bug.
fn certify(
    mut res: OracleResult,
    check: impl FnOnce(&EdgeColoring) -> std::result::Result<(), String>,
) -> Result<OracleResult> {
    if let Some(w) = res.witness.take() {
        check(&w).map_err(|why| Error::invariant(format!("oracle witness rejected: {why}")))?;
        res.witness = Some(w);
    }
    Ok(res)
}

/// Searches for an interval-on-`r` coloring with exactly the colors `1..=t`.
pub fn solve_interval_on(
    g: &Multigraph,
    r: &VertexSet,
    t: Color,
    limits: &SearchLimits,
) -> Result<OracleResult> {
    if t == 0 {
        return Err(Error::input("t must be at least 1"));
    }
    let mut p = Problem::new(g, t);
    p.all_colors = true;
    p.interval = r.mask().to_vec();
    let res = search::solve(g, &p, limits)?;
    certify(res, |w| {
        coloring::check_interval_on(g, w, r, t).map_err(|v| v.to_string())
    })
}

/// Searches for a continuous-on-`r` coloring with exactly the colors `1..=t`.
pub fn solve_continuous_on(
    g: &Multigraph,
    r: &VertexSet,
    t: Color,
    limits: &SearchLimits,
) -> Result<OracleResult> {
    if t == 0 {
        return Err(Error::input("t must be at least 1"));
    }
    let mut p = Problem::new(g, t);
    p.all_colors = true;
    p.interval = r.mask().to_vec();
    for v in r.iter() {
        p.allowed[v.index()] = palette((g.deg(v) as Color).min(t));
    }
    let res = search::solve(g, &p, limits)?;
    certify(res, |w| {
        coloring::check_continuous_on(g, w, r, t).map_err(|v| v.to_string())
    })
}

/// Any proper coloring with colors from `1..=t` (not all need appear).
pub fn solve_proper(g: &Multigraph, t: Color, limits: &SearchLimits) -> Result<OracleResult> {
    let p = Problem::new(g, t);
    let res = search::solve(g, &p, limits)?;
    certify(res, |w| {
        coloring::check_proper(g, w).map_err(|v| v.to_string())?;
        if w.max_color().unwrap_or(0) > t {
            return Err(format!("color above {t}"));
        }
        Ok(())
    })
}

/// Least and greatest `t` admitting an interval-on-`R` `t`-coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalStats {
    pub least: Option<(Color, EdgeColoring)>,
    pub greatest: Option<(Color, EdgeColoring)>,
    /// Every feasible `t`, ascending.
    pub feasible: Vec<Color>,
    pub nodes_explored: u64,
}

impl IntervalStats {
    pub fn w(&self) -> Option<Color> {
        self.least.as_ref().map(|(t, _)| *t)
    }

    pub fn big_w(&self) -> Option<Color> {
        self.greatest.as_ref().map(|(t, _)| *t)
    }
}

/// Scans `t = 1..=m`. Values below `Δ` are skipped, since no proper
/// coloring has fewer than `Δ` colors.
pub fn interval_stats(
    g: &Multigraph,
    r: &VertexSet,
    limits: &SearchLimits,
) -> Result<IntervalStats> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::input("interval statistics need at least one edge"));
    }
    let mut stats = IntervalStats {
        least: None,
        greatest: None,
        feasible: Vec::new(),
        nodes_explored: 0,
    };
    for t in g.max_degree().max(1)..=m {
        let t = t as Color;
        let res = solve_interval_on(g, r, t, limits)?;
        stats.nodes_explored += res.nodes_explored;
        let res = res.into_decided()?;
        if let Some(w) = res.witness {
            stats.feasible.push(t);
            if stats.least.is_none() {
                stats.least = Some((t, w.clone()));
            }
            stats.greatest = Some((t, w));
        }
    }
    Ok(stats)
}

/// Least `t` with an interval-on-`r` `t`-coloring, with its witness. A capped
/// search at a smaller `t` makes the answer capped.
pub fn least_interval(
    g: &Multigraph,
    r: &VertexSet,
    limits: &SearchLimits,
) -> Result<OracleResult> {
    let mut nodes = 0;
    let mut capped = false;
    for t in g.max_degree().max(1)..=g.edge_count() {
        let res = solve_interval_on(g, r, t as Color, limits)?;
        nodes += res.nodes_explored;
        match res.verdict {
            Verdict::Exists if capped => return Ok(OracleResult::capped(nodes)),
            Verdict::Exists => {
                return Ok(OracleResult {
                    nodes_explored: nodes,
                    ..res
                })
            }
            Verdict::Capped => capped = true,
            Verdict::NotExists => {}
        }
    }
    Ok(OracleResult {
        verdict: if capped {
            Verdict::Capped
        } else {
            Verdict::NotExists
        },
        witness: None,
        nodes_explored: nodes,
    })
}

/// Whether `g` has an interval coloring on all of `V(G)` for some `t`. The
/// witness uses the least `t` that was decided feasible.
pub fn membership(g: &Multigraph, limits: &SearchLimits) -> Result<OracleResult> {
    if g.edge_count() == 0 {
        return Ok(OracleResult {
            verdict: Verdict::NotExists,
            witness: None,
            nodes_explored: 0,
        });
    }
    let all = VertexSet::all(g);
    let mut nodes = 0;
    let mut capped = false;
    for t in g.max_degree()..=g.edge_count() {
        let res = solve_interval_on(g, &all, t as Color, limits)?;
        nodes += res.nodes_explored;
        match res.verdict {
            Verdict::Exists => {
                return Ok(OracleResult {
                    nodes_explored: nodes,
                    ..res
                })
            }
            Verdict::Capped => capped = true,
            Verdict::NotExists => {}
        }
    }
    Ok(OracleResult {
        verdict: if capped {
            Verdict::Capped
        } else {
            Verdict::NotExists
        },
        witness: None,
        nodes_explored: nodes,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticIndex {
    pub value: Color,
    pub witness: EdgeColoring,
    pub nodes_explored: u64,
}

pub fn chromatic_index(g: &Multigraph, limits: &SearchLimits) -> Result<ChromaticIndex> {
    if g.edge_count() == 0 {
        return Err(Error::input("chromatic index needs at least one edge"));
    }
    let mut nodes = 0;
    let mut t = g.max_degree() as Color;
    loop {
        let res = solve_proper(g, t, limits)?;
        nodes += res.nodes_explored;
        let res = res.into_decided().map_err(|_| Error::Capped { nodes })?;
        if let Some(witness) = res.witness {
            return Ok(ChromaticIndex {
                value: t,
                witness,
                nodes_explored: nodes,
            });
        }
        t += 1;
    }
}

/// Proper coloring of `g` with colors from `lists[v]` at every vertex `v`.
pub fn solve_list_coloring(
    g: &Multigraph,
    lists: &[ColorSet],
    limits: &SearchLimits,
) -> Result<OracleResult> {
    if lists.len() != g.vertex_count() {
        return Err(Error::input("one color list per vertex is required"));
    }
    let t = lists
        .iter()
        .filter_map(|s| s.iter().max())
        .max()
        .unwrap_or(1);
    let mut p = Problem::new(g, t);
    for (i, s) in lists.iter().enumerate() {
        p.allowed[i] = s.mask();
    }
    let res = search::solve(g, &p, limits)?;
    certify(res, |w| {
        coloring::check_proper(g, w).map_err(|v| v.to_string())?;
        for v in g.vertices() {
            if let Some(e) = g
                .incident_edges(v)
                .find(|&e| !lists[v.index()].contains(w.color(e)))
            {
                return Err(format!("edge {e} leaves the list of vertex {v}"));
            }
        }
        Ok(())
    })
}

/// Proper 3-coloring of `h` where each preassigned part-1 vertex `x` is
/// colored exactly by `T(x)`. Part-1 vertices without an entry and all
/// part-2 vertices may use any of the three colors.
pub fn solve_list_edge_coloring(
    h: &Multigraph,
    bip: &Bipartition,
    pre: &Preassignment,
    limits: &SearchLimits,
) -> Result<OracleResult> {
    if h.max_degree() > 3 {
        return Err(Error::input(format!(
            "maximum degree {} exceeds 3",
            h.max_degree()
        )));
    }
    pre.validate(h, bip)?;
    let lists: Vec<ColorSet> = h
        .vertices()
        .map(|v| pre.get(v).unwrap_or_else(ColorSet::full))
        .collect();
    let res = solve_list_coloring(h, &lists, limits)?;
    certify(res, |w| {
        for (v, set) in pre.iter() {
            let spec = coloring::spectrum(h, w, v);
            if spec.colors != set.iter().collect::<Vec<_>>() {
                return Err(format!(
                    "vertex {v} does not use exactly its preassigned colors"
                ));
            }
        }
        Ok(())
    })
}

/// Proper coloring with exactly `sizes[i-1]` edges of color `i`.
pub fn solve_fixed_class_sizes(
    g: &Multigraph,
    sizes: &[u32],
    limits: &SearchLimits,
) -> Result<OracleResult> {
    let total: u64 = sizes.iter().map(|&s| u64::from(s)).sum();
    if total != g.edge_count() as u64 {
        return Err(Error::input(format!(
            "class sizes sum to {total}, graph has {} edges",
            g.edge_count()
        )));
    }
    let t = sizes.len() as Color;
    let mut p = Problem::new(g, t);
    let mut table = vec![0];
    table.extend_from_slice(sizes);
    p.class_sizes = Some(table);
    let res = search::solve(g, &p, limits)?;
    certify(res, |w| {
        coloring::check_proper(g, w).map_err(|v| v.to_string())?;
        for (i, &s) in sizes.iter().enumerate() {
            if w.count_of(i as Color + 1) != s as usize {
                return Err(format!(
                    "color {} used {} times, expected {s}",
                    i + 1,
                    w.count_of(i as Color + 1)
                ));
            }
        }
        Ok(())
    })
}

/// Part-1 vertex set of a bipartite graph.
pub fn part_one(bip: &Bipartition) -> VertexSet {
    VertexSet::part(bip, Part::One)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Multigraph {
        Multigraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap()
    }

    fn star3() -> Multigraph {
        Multigraph::from_pairs(4, &[(1, 2), (1, 3), (1, 4)]).unwrap()
    }

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn interval_on_c4() {
        let g = c4();
        let all = VertexSet::all(&g);
        let r = solve_interval_on(&g, &all, 3, &lim()).unwrap();
        assert!(r.exists());
        // First witness in (edge asc, color asc) order.
        assert_eq!(r.witness.unwrap().colors(), &[1, 2, 3, 2]);
        assert_eq!(
            solve_interval_on(&g, &all, 4, &lim()).unwrap().verdict,
            Verdict::NotExists
        );
        let e = Multigraph::from_pairs(2, &[(1, 2)]).unwrap();
        assert!(solve_interval_on(&e, &VertexSet::all(&e), 1, &lim())
            .unwrap()
            .exists());
    }

    #[test]
    fn stats() {
        let g = c4();
        let s = interval_stats(&g, &VertexSet::all(&g), &lim()).unwrap();
        assert_eq!((s.w(), s.big_w()), (Some(2), Some(3)));
        let g = star3();
        let s = interval_stats(&g, &VertexSet::all(&g), &lim()).unwrap();
        assert_eq!((s.w(), s.big_w()), (Some(3), Some(3)));
        let g = Multigraph::from_pairs(4, &[(1, 3), (1, 4), (2, 3)]).unwrap();
        let bip = Bipartition::split_at(&g, 2).unwrap();
        let s = interval_stats(&g, &part_one(&bip), &lim()).unwrap();
        assert_eq!((s.w(), s.big_w()), (Some(2), Some(3)));
    }

    #[test]
    fn member_and_chromatic() {
        assert!(membership(&c4(), &lim()).unwrap().exists());
        let k3 = Multigraph::from_pairs(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(membership(&k3, &lim()).unwrap().verdict, Verdict::NotExists);
        assert_eq!(chromatic_index(&k3, &lim()).unwrap().value, 3);
        assert_eq!(chromatic_index(&c4(), &lim()).unwrap().value, 2);
        assert_eq!(chromatic_index(&star3(), &lim()).unwrap().value, 3);
        let e = Multigraph::from_pairs(2, &[(1, 2)]).unwrap();
        assert!(membership(&e, &lim()).unwrap().exists());
    }

    #[test]
    fn capped_is_distinct() {
        let g = c4();
        let r = solve_interval_on(&g, &VertexSet::all(&g), 4, &lim().with_cap(3)).unwrap();
        assert_eq!(r.verdict, Verdict::Capped);
        assert_eq!(r.nodes_explored, 3);
        assert!(matches!(
            interval_stats(&g, &VertexSet::all(&g), &lim().with_cap(2)),
            Err(Error::Capped { .. })
        ));
    }

    #[test]
    fn edge_guard() {
        let pairs: Vec<_> = (0..13).map(|i| (1, i + 2)).collect();
        let g = Multigraph::from_pairs(14, &pairs).unwrap();
        assert!(matches!(solve_proper(&g, 13, &lim()), Err(Error::Input(_))));
        assert!(solve_proper(&g, 13, &lim().with_max_edges(20))
            .unwrap()
            .exists());
    }

    #[test]
    fn list_edge_coloring_examples() {
        let h = Multigraph::from_pairs(3, &[(1, 2), (1, 3)]).unwrap();
        let bip = Bipartition::split_at(&h, 1).unwrap();
        let pre = Preassignment::from_pairs(&[(1, &[1, 3])]).unwrap();
        let r = solve_list_edge_coloring(&h, &bip, &pre, &lim()).unwrap();
        assert_eq!(r.witness.unwrap().colors(), &[1, 3]);

        let h = Multigraph::from_pairs(4, &[(1, 3), (1, 4), (2, 3), (2, 4)]).unwrap();
        let bip = Bipartition::split_at(&h, 2).unwrap();
        let pre = Preassignment::from_pairs(&[(1, &[1, 2]), (2, &[1, 2])]).unwrap();
        // 1 and 2 both need colors {1,2} on shared neighbors 3 and 4: the
        // only options are a 2-edge-colored 4-cycle, which is proper.
        assert!(solve_list_edge_coloring(&h, &bip, &pre, &lim())
            .unwrap()
            .exists());

        let h = Multigraph::from_pairs(2, &[]).unwrap();
        let bip = Bipartition::split_at(&h, 0).unwrap();
        assert!(
            solve_list_edge_coloring(&h, &bip, &Preassignment::default(), &lim())
                .unwrap()
                .exists()
        );
    }

    #[test]
    fn list_edge_coloring_clash() {
        // Three part-1 vertices on the same two neighbors, each wanting {1,2}:
        // neighbor 4 would need color 1 three times.
        let h =
            Multigraph::from_pairs(5, &[(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)]).unwrap();
        let bip = Bipartition::split_at(&h, 3).unwrap();
        let pre = Preassignment::from_pairs(&[(1, &[1, 2]), (2, &[1, 2]), (3, &[1, 2])]).unwrap();
        assert_eq!(
            solve_list_edge_coloring(&h, &bip, &pre, &lim())
                .unwrap()
                .verdict,
            Verdict::NotExists
        );
    }

    #[test]
    fn fixed_class_sizes_examples() {
        let p = Multigraph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(solve_fixed_class_sizes(&p, &[1, 1], &lim())
            .unwrap()
            .exists());
        assert_eq!(
            solve_fixed_class_sizes(&p, &[2, 0], &lim())
                .unwrap()
                .verdict,
            Verdict::NotExists
        );
        assert!(matches!(
            solve_fixed_class_sizes(&p, &[1], &lim()),
            Err(Error::Input(_))
        ));
    }
}
