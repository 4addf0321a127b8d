//! Reduction from 3-coloring a bipartite graph with preassigned color sets
//! on one part to continuous 3-coloring of a bipartite multigraph, and the
//! class-size vector linking continuous colorings to colorings with fixed
//! color-class sizes.
//!
//! Given `(H, T)`, [`build_reduction`] forms `G1` from `H` and a mirrored
//! copy `H'`, joining each part-2 vertex `y` to its copy `y'` by `3 - d(y)`
//! parallel edges, and carrying the sets `T` over to both copies. `G` is
//! `G1` with pendant gadgets that force the sets structurally: a pendant
//! edge at each vertex with `T = {2,3}` and a pendant path of two edges at
//! each vertex with `T = {1,3}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::coloring::{Color, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Multigraph, Part, VertexId};
use crate::oracle::{self, SearchLimits, Verdict};

/// A subset of `{1, 2, 3}`, bit `c` set for color `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn full() -> Self {
        ColorSet(0b1110)
    }

    pub fn from_colors(colors: &[Color]) -> Result<Self> {
        let mut bits = 0u8;
        for &c in colors {
            if !(1..=3).contains(&c) {
                return Err(Error::input(format!("color {c} is not in {{1,2,3}}")));
            }
            if bits & (1 << c) != 0 {
                return Err(Error::input(format!("color {c} listed twice")));
            }
            bits |= 1 << c;
        }
        Ok(ColorSet(bits))
    }

    pub fn contains(self, c: Color) -> bool {
        c <= 3 && self.0 & (1 << c) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        (1..=3).filter(move |&c| self.contains(c))
    }

    pub(crate) fn mask(self) -> u64 {
        u64::from(self.0)
    }
}

impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|c| c.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Preassigned color sets `T(x)` for part-1 vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Preassignment {
    sets: BTreeMap<VertexId, ColorSet>,
}

impl Preassignment {
    pub fn from_map(sets: BTreeMap<VertexId, ColorSet>) -> Self {
        Preassignment { sets }
    }

    pub fn from_pairs(pairs: &[(usize, &[Color])]) -> Result<Self> {
        let mut sets = BTreeMap::new();
        for &(v, colors) in pairs {
            if sets
                .insert(VertexId(v), ColorSet::from_colors(colors)?)
                .is_some()
            {
                return Err(Error::input(format!("vertex {v} preassigned twice")));
            }
        }
        Ok(Preassignment { sets })
    }

    pub fn get(&self, v: VertexId) -> Option<ColorSet> {
        self.sets.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, ColorSet)> + '_ {
        self.sets.iter().map(|(&v, &s)| (v, s))
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Entries must name part-1 vertices of `g` and have `|T(x)| = d(x)`.
    pub fn validate(&self, g: &Multigraph, bip: &Bipartition) -> Result<()> {
        for (v, set) in self.iter() {
            g.check_vertex(v)?;
            if bip.part(v) != Part::One {
                return Err(Error::input(format!(
                    "preassigned vertex {v} is not in part 1"
                )));
            }
            if set.len() != g.deg(v) {
                return Err(Error::input(format!(
                    "vertex {v} has degree {} but T = {set}",
                    g.deg(v)
                )));
            }
        }
        Ok(())
    }
}

/// Where a vertex of the reduction graph comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    /// A vertex of `H`.
    Original(VertexId),
    /// The copy in `H'` of a vertex of `H`.
    Mirror(VertexId),
    /// First pendant vertex attached to the given vertex of `G`.
    Pendant1(VertexId),
    /// Second vertex of a pendant path attached to the given vertex of `G`.
    Pendant2(VertexId),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Original(v) => write!(f, "h:{v}"),
            Origin::Mirror(v) => write!(f, "h':{v}"),
            Origin::Pendant1(v) => write!(f, "p1:{v}"),
            Origin::Pendant2(v) => write!(f, "p2:{v}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub g1: Multigraph,
    pub g1_bipartition: Bipartition,
    /// `T(v)` for every vertex of `G1`; part-2 vertices of `H` and their
    /// copies carry `{1,2,3}`.
    pub g1_sets: Vec<ColorSet>,
    pub g: Multigraph,
    pub g_bipartition: Bipartition,
    /// Origin of each vertex of `G`, indexed by vertex id − 1. The first
    /// `|V(G1)|` entries are the vertices of `G1` with the same ids.
    pub trace: Vec<Origin>,
}

fn check_reduction_input(h: &Multigraph, bip_h: &Bipartition, pre: &Preassignment) -> Result<()> {
    if h.edge_count() == 0 || h.max_degree() > 3 {
        return Err(Error::input(format!(
            "H must have maximum degree 1..=3, found {}",
            h.max_degree()
        )));
    }
    pre.validate(h, bip_h)?;
    for x in bip_h.members(Part::One) {
        let d = h.deg(x);
        if d == 1 {
            return Err(Error::input(format!("part-1 vertex {x} of H is pendant")));
        }
        if d == 2 && pre.get(x).is_none() {
            return Err(Error::input(format!(
                "part-1 vertex {x} has degree 2 but no preassigned set"
            )));
        }
    }
    Ok(())
}

/// Builds `G1` and `G` for the instance `(H, T)`.
///
/// Vertex numbering: `H` keeps its ids `1..=n`, the copy of `v` is `n + v`,
/// then pendant vertices follow in ascending order of the vertex they hang
/// from (the first pendant before the second). Part 1 of `G` is part 1 of
/// `H` plus the copies of part 2; pendants alternate parts away from their
/// attachment vertex. A part-1 vertex of degree 3 without an entry gets
/// `T = {1,2,3}`.
pub fn build_reduction(
    h: &Multigraph,
    bip_h: &Bipartition,
    pre: &Preassignment,
) -> Result<ReductionOutput> {
    check_reduction_input(h, bip_h, pre)?;
    let n = h.vertex_count();

    let mut edges = h.edges().to_vec();
    edges.extend(
        h.edges()
            .iter()
            .map(|&(u, v)| (VertexId(u.0 + n), VertexId(v.0 + n))),
    );
    for y in bip_h.members(Part::Two) {
        let links = match h.deg(y) {
            1 => 2,
            2 => 1,
            _ => 0,
        };
        for _ in 0..links {
            edges.push((y, VertexId(y.0 + n)));
        }
    }
    let g1 = Multigraph::new(2 * n, edges.clone())?;
    let mut parts: Vec<Part> = bip_h.parts().to_vec();
    parts.extend(bip_h.parts().iter().map(|p| p.other()));
    let g1_bipartition = Bipartition::new(&g1, parts.clone())?;

    let mut g1_sets = vec![ColorSet::full(); 2 * n];
    for x in bip_h.members(Part::One) {
        let set = pre.get(x).unwrap_or_else(ColorSet::full);
        g1_sets[x.index()] = set;
        g1_sets[x.index() + n] = set;
    }
    if g1.max_degree() != 3 {
        return Err(Error::invariant(format!(
            "G1 has maximum degree {}",
            g1.max_degree()
        )));
    }

    let mut trace: Vec<Origin> = (1..=n).map(|v| Origin::Original(VertexId(v))).collect();
    trace.extend((1..=n).map(|v| Origin::Mirror(VertexId(v))));
    let two_three = ColorSet::from_colors(&[2, 3])?;
    let one_three = ColorSet::from_colors(&[1, 3])?;
    for x in g1.vertices() {
        let set = g1_sets[x.index()];
        if set != two_three && set != one_three {
            continue;
        }
        let p1 = VertexId(trace.len() + 1);
        trace.push(Origin::Pendant1(x));
        parts.push(parts[x.index()].other());
        edges.push((x, p1));
        if set == one_three {
            let p2 = VertexId(trace.len() + 1);
            trace.push(Origin::Pendant2(x));
            parts.push(parts[x.index()]);
            edges.push((p1, p2));
        }
    }
    let g = Multigraph::new(trace.len(), edges)?;
    let g_bipartition = Bipartition::new(&g, parts)?;
    if g.max_degree() != 3 {
        return Err(Error::invariant(format!(
            "G has maximum degree {}",
            g.max_degree()
        )));
    }
    let degree_multiset = |p: Part| {
        let mut d: Vec<usize> = g_bipartition.members(p).map(|v| g.deg(v)).collect();
        d.sort_unstable();
        d
    };
    if degree_multiset(Part::One) != degree_multiset(Part::Two) {
        return Err(Error::invariant(
            "degree collections of the two parts of G differ",
        ));
    }
    Ok(ReductionOutput {
        g1,
        g1_bipartition,
        g1_sets,
        g,
        g_bipartition,
        trace,
    })
}

/// `n_i` = number of part-1 vertices of degree at least `i`, for `i = 1, 2, 3`.
pub fn class_size_vector(g: &Multigraph, bip: &Bipartition) -> Result<[u32; 3]> {
    if g.max_degree() > 3 {
        return Err(Error::input(format!(
            "maximum degree {} exceeds 3",
            g.max_degree()
        )));
    }
    let mut n = [0u32; 3];
    for x in bip.members(Part::One) {
        for (i, slot) in n.iter_mut().enumerate() {
            if g.deg(x) > i {
                *slot += 1;
            }
        }
    }
    Ok(n)
}

/// Oracle verdicts for the equivalent formulations of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    /// `H` has a 3-coloring respecting `T` on part 1.
    pub list_h: Verdict,
    /// `G1` has a 3-coloring in which every vertex uses colors from its set.
    pub constrained_g1: Verdict,
    /// `G` has a continuous 3-coloring on all of `V(G)`.
    pub continuous_all: Verdict,
    /// `G` has a continuous 3-coloring on part 1.
    pub continuous_part1: Verdict,
    /// `G` has a proper coloring with class sizes `(n1, n2, n3)`.
    pub fixed_class_sizes: Verdict,
    pub class_sizes: [u32; 3],
}

impl EquivalenceReport {
    pub fn verdicts(&self) -> [Verdict; 5] {
        [
            self.list_h,
            self.constrained_g1,
            self.continuous_all,
            self.continuous_part1,
            self.fixed_class_sizes,
        ]
    }

    pub fn is_inconclusive(&self) -> bool {
        self.verdicts().contains(&Verdict::Capped)
    }

    /// `true` when every formulation reached the same decided verdict.
    pub fn agrees(&self) -> bool {
        let v = self.verdicts();
        !self.is_inconclusive() && v.iter().all(|&x| x == v[0])
    }
}

/// Edge guard used for the reduction graphs, which are several times larger
/// than `H`.
pub const REDUCTION_MAX_EDGES: usize = 48;

/// Solves every formulation of `(H, T)` with the oracle.
pub fn verify_equivalences(
    h: &Multigraph,
    bip_h: &Bipartition,
    pre: &Preassignment,
    limits: &SearchLimits,
) -> Result<EquivalenceReport> {
    let red = build_reduction(h, bip_h, pre)?;
    let limits = SearchLimits {
        max_edges: limits.max_edges.max(REDUCTION_MAX_EDGES),
        ..*limits
    };
    let list_h = oracle::solve_list_edge_coloring(h, bip_h, pre, &limits)?.verdict;
    let constrained_g1 = oracle::solve_list_coloring(&red.g1, &red.g1_sets, &limits)?.verdict;
    let continuous_all =
        oracle::solve_continuous_on(&red.g, &VertexSet::all(&red.g), 3, &limits)?.verdict;
    let part1 = VertexSet::part(&red.g_bipartition, Part::One);
    let continuous_part1 = oracle::solve_continuous_on(&red.g, &part1, 3, &limits)?.verdict;
    let class_sizes = class_size_vector(&red.g, &red.g_bipartition)?;
    let fixed_class_sizes = oracle::solve_fixed_class_sizes(&red.g, &class_sizes, &limits)?.verdict;
    Ok(EquivalenceReport {
        list_h,
        constrained_g1,
        continuous_all,
        continuous_part1,
        fixed_class_sizes,
        class_sizes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One part-1 vertex of degree 2 with two pendant neighbors.
    fn cherry() -> (Multigraph, Bipartition) {
        let h = Multigraph::from_pairs(3, &[(1, 2), (1, 3)]).unwrap();
        let b = Bipartition::split_at(&h, 1).unwrap();
        (h, b)
    }

    /// `H` needs maximum degree 3: a degree-3 part-2 vertex joined to three
    /// part-1 vertices, one of which also reaches a pendant.
    fn claw_with_tail() -> (Multigraph, Bipartition) {
        // Part 1: 1, 2, 3; part 2: 4 (degree 3), 5, 6, 7.
        let h =
            Multigraph::from_pairs(7, &[(1, 4), (2, 4), (3, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let b = Bipartition::split_at(&h, 3).unwrap();
        (h, b)
    }

    #[test]
    fn cherry_reduction_shape() {
        let (h, b) = cherry();
        let pre = Preassignment::from_pairs(&[(1, &[1, 3])]).unwrap();
        let red = build_reduction(&h, &b, &pre).unwrap();
        // 2 + 2 edges of H and H', 2 + 2 connectors, 2 + 2 pendant-path edges.
        assert_eq!(red.g.vertex_count(), 10);
        assert_eq!(red.g.edge_count(), 12);
        assert_eq!(red.g1.max_degree(), 3);
        assert_eq!(red.g1_sets[3], ColorSet::from_colors(&[1, 3]).unwrap());
        let tags: Vec<String> = red.trace.iter().map(|o| o.to_string()).collect();
        assert_eq!(
            tags,
            ["h:1", "h:2", "h:3", "h':1", "h':2", "h':3", "p1:1", "p2:1", "p1:4", "p2:4"]
        );
    }

    #[test]
    fn trivial_instances_agree() {
        let (h, b) = cherry();
        let lim = SearchLimits::default();
        for (set, expect) in [
            (&[1, 2][..], Verdict::Exists),
            (&[1, 3][..], Verdict::Exists),
        ] {
            let pre = Preassignment::from_pairs(&[(1, set)]).unwrap();
            let r = verify_equivalences(&h, &b, &pre, &lim).unwrap();
            assert!(r.agrees(), "{r:?}");
            assert_eq!(r.list_h, expect);
        }
    }

    #[test]
    fn counts_follow_the_construction() {
        let (h, b) = claw_with_tail();
        let pre = Preassignment::from_pairs(&[(1, &[1, 3]), (2, &[2, 3]), (3, &[1, 2])]).unwrap();
        let red = build_reduction(&h, &b, &pre).unwrap();
        // Copy: 6 edges. Connectors: 5, 6, 7 have degree 1 (two edges each), 4 has degree 3 (none).
        assert_eq!(red.g1.edge_count(), 6 + 6 + 6);
        assert_eq!(red.g1.vertex_count(), 14);
        assert_eq!(red.g1.max_degree(), 3);
        // V13 = {1, 8}: two pendant paths; V23 = {2, 9}: two pendant edges; V12 adds nothing.
        assert_eq!(red.g.vertex_count(), 14 + 4 + 2);
        assert_eq!(red.g.edge_count(), 18 + 4 + 2);
        assert_eq!(
            red.trace[14..].to_vec(),
            vec![
                Origin::Pendant1(VertexId(1)),
                Origin::Pendant2(VertexId(1)),
                Origin::Pendant1(VertexId(2)),
                Origin::Pendant1(VertexId(8)),
                Origin::Pendant2(VertexId(8)),
                Origin::Pendant1(VertexId(9)),
            ]
        );
        assert_eq!(red.g_bipartition.part(VertexId(15)), Part::Two);
        assert_eq!(red.g_bipartition.part(VertexId(16)), Part::One);
        assert_eq!(red.g_bipartition.part(VertexId(18)), Part::One);
    }

    #[test]
    fn degree_three_part_two_vertex_gets_no_connector() {
        let (h, b) = claw_with_tail();
        let pre = Preassignment::from_pairs(&[(1, &[1, 2]), (2, &[1, 2]), (3, &[1, 2])]).unwrap();
        let red = build_reduction(&h, &b, &pre).unwrap();
        let links = red
            .g1
            .edges()
            .iter()
            .filter(|&&(u, v)| (u.0, v.0) == (4, 11))
            .count();
        assert_eq!(links, 0);
        // All sets are {1,2}: no pendants at all.
        assert_eq!(red.g.edge_count(), red.g1.edge_count());
    }

    #[test]
    fn rejects_pendant_part_one_vertices() {
        let h = Multigraph::from_pairs(5, &[(1, 3), (1, 4), (1, 5), (2, 3)]).unwrap();
        let b = Bipartition::split_at(&h, 2).unwrap();
        let pre = Preassignment::from_pairs(&[(2, &[1])]).unwrap();
        let err = build_reduction(&h, &b, &pre).unwrap_err();
        assert!(err.to_string().contains("vertex 2"), "{err}");
    }

    #[test]
    fn class_sizes() {
        let g =
            Multigraph::from_pairs(6, &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (3, 4)]).unwrap();
        let b = Bipartition::split_at(&g, 3).unwrap();
        assert_eq!(class_size_vector(&g, &b).unwrap(), [3, 2, 1]);
        let g =
            Multigraph::from_pairs(6, &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (3, 4), (3, 5)])
                .unwrap();
        let b = Bipartition::split_at(&g, 3).unwrap();
        assert_eq!(class_size_vector(&g, &b).unwrap(), [3, 3, 1]);
        let e = Multigraph::from_pairs(2, &[]).unwrap();
        let b = Bipartition::split_at(&e, 0).unwrap();
        assert_eq!(class_size_vector(&e, &b).unwrap(), [0, 0, 0]);
    }

    #[test]
    fn equivalences_on_small_instances() {
        let (h, b) = claw_with_tail();
        let lim = SearchLimits::default();
        let sat = Preassignment::from_pairs(&[(1, &[1, 3]), (2, &[2, 3]), (3, &[1, 2])]).unwrap();
        let r = verify_equivalences(&h, &b, &sat, &lim).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.list_h, Verdict::Exists);

        // Three part-1 vertices on one degree-3 neighbor all excluding color 3.
        let h =
            Multigraph::from_pairs(5, &[(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5)]).unwrap();
        let b = Bipartition::split_at(&h, 3).unwrap();
        let unsat = Preassignment::from_pairs(&[(1, &[1, 2]), (2, &[1, 2]), (3, &[1, 2])]).unwrap();
        let r = verify_equivalences(&h, &b, &unsat, &lim).unwrap();
        assert!(r.agrees(), "{r:?}");
        assert_eq!(r.list_h, Verdict::NotExists);
    }
}
