//! Constructive procedures on interval and continuous colorings.
//!
//! All tie-breaking is by ascending id: vertex choices prefer the smaller
//! degree and then the smaller id, edges at a vertex are taken by
//! (partner id, edge id), and the smallest admissible color is chosen.

use crate::coloring::{
    self, alternating_path, check_interval_on, is_interval_on, Color, EdgeColoring, VertexSet,
};
use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, Multigraph, Part, VertexId};
use crate::oracle::{self, SearchLimits, Verdict};

/// Residue classes `T(j) = { i in 1..=t : i ≡ j (mod Δ) }`, `j = 1..=Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueClassPlan {
    pub delta: Color,
    /// `classes[j - 1]` lists the colors of class `j`, ascending.
    pub classes: Vec<Vec<Color>>,
}

impl ResidueClassPlan {
    pub fn new(delta: Color, t: Color) -> Result<Self> {
        if delta == 0 {
            return Err(Error::input("residue classes need Δ ≥ 1"));
        }
        let mut classes = vec![Vec::new(); delta as usize];
        for i in 1..=t {
            classes[((i - 1) % delta) as usize].push(i);
        }
        Ok(ResidueClassPlan { delta, classes })
    }

    /// Class index `j` of color `i`.
    pub fn class_of(&self, i: Color) -> Color {
        (i - 1) % self.delta + 1
    }
}

/// Folds an interval coloring on `V(G)` onto `Δ(G)` colors by sending color
/// `i` to its residue class modulo `Δ`.
pub fn compress_to_delta(g: &Multigraph, c: &EdgeColoring) -> Result<EdgeColoring> {
    let t = c
        .max_color()
        .ok_or_else(|| Error::input("graph has no edges"))?;
    check_interval_on(g, c, &VertexSet::all(g), t)
        .map_err(|v| Error::input(format!("input is not an interval coloring on V(G): {v}")))?;
    let plan = ResidueClassPlan::new(g.max_degree() as Color, t)?;
    let out =
        EdgeColoring::from_vec_unchecked(c.colors().iter().map(|&i| plan.class_of(i)).collect());
    if !coloring::is_proper(g, &out) {
        return Err(Error::invariant(
            "residue classes of an interval coloring are not matchings",
        ));
    }
    Ok(out)
}

/// For a regular graph with an interval `t`-coloring, `t > Δ`, recolors
/// the edges of color `t` with `t - Δ`, giving an interval `(t-1)`-coloring.
pub fn regular_step_down(g: &Multigraph, c: &EdgeColoring) -> Result<EdgeColoring> {
    if !g.is_regular() {
        return Err(Error::input("graph is not regular"));
    }
    let t = c
        .max_color()
        .ok_or_else(|| Error::input("graph has no edges"))?;
    let delta = g.max_degree() as Color;
    if t <= delta {
        return Err(Error::input(format!("t = {t} is not above Δ = {delta}")));
    }
    let all = VertexSet::all(g);
    check_interval_on(g, c, &all, t)
        .map_err(|v| Error::input(format!("input is not an interval coloring on V(G): {v}")))?;
    let out = EdgeColoring::from_vec_unchecked(
        c.colors()
            .iter()
            .map(|&i| if i == t { t - delta } else { i })
            .collect(),
    );
    check_interval_on(g, &out, &all, t - 1)
        .map_err(|v| Error::invariant(format!("step-down produced an invalid coloring: {v}")))?;
    Ok(out)
}

/// Colors part 1 in ascending id order, giving each vertex the next block
/// of fresh colors. Every color is used once, so the result is an interval
/// coloring on part 1 with `m` colors.
pub fn sequential_max_coloring(g: &Multigraph, bip: &Bipartition) -> Result<EdgeColoring> {
    if g.edge_count() == 0 {
        return Err(Error::input("graph has no edges"));
    }
    let mut colors = vec![0; g.edge_count()];
    let mut next = 1;
    for x in bip.members(Part::One) {
        for e in g.incident_edges(x) {
            colors[e.index()] = next;
            next += 1;
        }
    }
    Ok(EdgeColoring::from_vec_unchecked(colors))
}

/// An alternating-path swap performed while building a continuous coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeStep {
    pub start: VertexId,
    pub j: Color,
    pub k: Color,
    pub path: Vec<EdgeId>,
}

/// One edge assignment of [`continuous_on_part_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuousStep {
    pub vertex: VertexId,
    pub edge: EdgeId,
    pub color: Color,
    pub swap: Option<KempeStep>,
}

/// Continuous coloring on part 1 for graphs where every edge `(x, y)` with
/// `x` in part 1 has `d(x) ≥ d(y)`.
pub fn continuous_on_part(g: &Multigraph, bip: &Bipartition) -> Result<EdgeColoring> {
    continuous_on_part_traced(g, bip).map(|(c, _)| c)
}

/// Like [`continuous_on_part`], also returning every assignment and swap.
///
/// Part-1 vertices are processed by non-increasing degree. For the `j`-th
/// edge `(x, y)` at `x`: if `y` lacks color `j` the edge gets `j`; otherwise
/// the smallest color `k ≤ d(x)` missing at `y` is swapped with `j` along
/// the alternating path from `y`, and then the edge gets `j`.
pub fn continuous_on_part_traced(
    g: &Multigraph,
    bip: &Bipartition,
) -> Result<(EdgeColoring, Vec<ContinuousStep>)> {
    for e in g.edge_ids() {
        let x = bip.endpoint_in(g, e, Part::One);
        let y = g.opposite(e, x);
        if g.deg(x) < g.deg(y) {
            return Err(Error::precondition(format!(
                "edge {e} joins part-1 vertex {x} of degree {} to vertex {y} of degree {}",
                g.deg(x),
                g.deg(y)
            )));
        }
    }
    let mut order: Vec<VertexId> = bip.members(Part::One).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(g.deg(x)), x));

    let mut colors: Vec<Option<Color>> = vec![None; g.edge_count()];
    let mut steps = Vec::with_capacity(g.edge_count());
    let has = |colors: &[Option<Color>], v: VertexId, col: Color| {
        g.incident_indices(v)
            .iter()
            .any(|&e| colors[e] == Some(col))
    };
    for (done, &x) in order.iter().enumerate() {
        let dx = g.deg(x) as Color;
        for (j, e) in (1..=dx).zip(g.incident_by_partner(x)) {
            let y = g.opposite(e, x);
            let mut swap = None;
            if has(&colors, y, j) {
                let k = (1..=dx)
                    .find(|&k| !has(&colors, y, k))
                    .ok_or_else(|| Error::invariant(format!("no free color at vertex {y}")))?;
                let path = alternating_path(g, |i| colors[i], y, j, k)?;
                for &i in &path {
                    colors[i] = colors[i].map(|c| if c == j { k } else { j });
                }
                swap = Some(KempeStep {
                    start: y,
                    j,
                    k,
                    path: path.into_iter().map(EdgeId::from_index).collect(),
                });
                debug_assert!(
                    order[..done]
                        .iter()
                        .all(|&z| spectrum_is_initial(g, &colors, z)),
                    "swap at {y} broke a completed part-1 vertex"
                );
            }
            colors[e.index()] = Some(j);
            steps.push(ContinuousStep {
                vertex: x,
                edge: e,
                color: j,
                swap,
            });
        }
    }
    let colors: Vec<Color> = colors
        .into_iter()
        .map(|c| c.ok_or_else(|| Error::invariant("edge left uncolored")))
        .collect::<Result<_>>()?;
    let out = EdgeColoring::from_vec_unchecked(colors);
    let delta = g.max_degree() as Color;
    if g.edge_count() > 0 {
        coloring::check_continuous_on(g, &out, &VertexSet::part(bip, Part::One), delta)
            .map_err(|v| Error::invariant(format!("continuous construction failed: {v}")))?;
    }
    Ok((out, steps))
}

fn spectrum_is_initial(g: &Multigraph, colors: &[Option<Color>], v: VertexId) -> bool {
    let mut seen: Vec<Color> = g
        .incident_indices(v)
        .iter()
        .filter_map(|&e| colors[e])
        .collect();
    seen.sort_unstable();
    seen.len() == g.deg(v) && seen.iter().enumerate().all(|(i, &c)| c as usize == i + 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepUpKind {
    /// The bottom color of the chosen vertex is shared; move that edge to `t+1`.
    Case1,
    /// Rotate the chosen vertex's color window, then apply case 1.
    Case2a,
    /// Remove the chosen vertex, step up the rest, re-attach on top.
    Case2b,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepUpCase {
    pub kind: StepUpKind,
    pub x1: VertexId,
    pub e1: EdgeId,
    /// Largest color used on more than one edge (cases 2a and 2b).
    pub s: Option<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepUp {
    pub coloring: EdgeColoring,
    pub case: StepUpCase,
    /// Number of times the construction (here or in a recursive call) failed
    /// validation and the oracle supplied the coloring instead.
    pub fallbacks: usize,
    pub diagnostics: Vec<String>,
}

/// Minimum-degree part-1 vertex incident with color `t`, ties by id.
fn lowest_vertex_with(
    g: &Multigraph,
    bip: &Bipartition,
    colors: &[Color],
    t: Color,
) -> Option<VertexId> {
    bip.members(Part::One)
        .filter(|&x| g.incident_indices(x).iter().any(|&e| colors[e] == t))
        .min_by_key(|&x| (g.deg(x), x))
}

fn edge_with(g: &Multigraph, colors: &[Color], x: VertexId, col: Color) -> Option<EdgeId> {
    g.incident_indices(x)
        .iter()
        .find(|&&e| colors[e] == col)
        .map(|&e| EdgeId::from_index(e))
}

struct Construction {
    colors: Vec<Color>,
    case: StepUpCase,
    fallbacks: usize,
    diagnostics: Vec<String>,
}

fn construct_step_up(
    g: &Multigraph,
    bip: &Bipartition,
    c: &EdgeColoring,
    t: Color,
    limits: &SearchLimits,
) -> Result<std::result::Result<Construction, (StepUpCase, String)>> {
    let mut colors = c.colors().to_vec();
    let x1 = lowest_vertex_with(g, bip, &colors, t)
        .ok_or_else(|| Error::invariant(format!("no part-1 vertex carries color {t}")))?;
    let d1 = g.deg(x1) as Color;
    let bottom = t + 1 - d1;
    let e1 = edge_with(g, &colors, x1, bottom)
        .ok_or_else(|| Error::invariant(format!("vertex {x1} lacks color {bottom}")))?;
    let mut case = StepUpCase {
        kind: StepUpKind::Case1,
        x1,
        e1,
        s: None,
    };

    if c.count_of(bottom) >= 2 {
        colors[e1.index()] = t + 1;
        return Ok(Ok(Construction {
            colors,
            case,
            fallbacks: 0,
            diagnostics: Vec::new(),
        }));
    }

    let s = (1..=t)
        .rev()
        .find(|&col| c.count_of(col) >= 2)
        .ok_or_else(|| Error::invariant("t < m but every color is used once"))?;
    case.s = Some(s);
    if bottom < s && s < t {
        case.kind = StepUpKind::Case2a;
        for col in &mut colors {
            let i = *col;
            if (bottom..=s).contains(&i) {
                *col = i + t - s;
            } else if (s + 1..=t).contains(&i) {
                *col = i - s + bottom - 1;
            }
        }
        let Some(x2) = lowest_vertex_with(g, bip, &colors, t) else {
            return Ok(Err((
                case,
                "no part-1 vertex carries color t after rotation".into(),
            )));
        };
        let low = t + 1 - g.deg(x2) as Color;
        let Some(e2) = edge_with(g, &colors, x2, low) else {
            return Ok(Err((
                case,
                format!("vertex {x2} lacks color {low} after rotation"),
            )));
        };
        colors[e2.index()] = t + 1;
        return Ok(Ok(Construction {
            colors,
            case,
            fallbacks: 0,
            diagnostics: Vec::new(),
        }));
    }
    if s >= bottom {
        return Ok(Err((
            case,
            format!("s = {s} outside both case ranges (bottom {bottom}, t {t})"),
        )));
    }

    case.kind = StepUpKind::Case2b;
    let del = g.delete_vertex(x1)?;
    let sub_bip = bip.after_deletion(&del);
    let mut sub_colors = vec![0; del.graph.edge_count()];
    for (old, new) in del.edge_map.iter().enumerate() {
        if let Some(new) = new {
            sub_colors[new.index()] = colors[old];
        }
    }
    let sub = match interval_step_up(
        &del.graph,
        &sub_bip,
        &EdgeColoring::from_vec_unchecked(sub_colors),
        limits,
    ) {
        Ok(sub) => sub,
        Err(e @ Error::Capped { .. }) => return Err(e),
        Err(e) => {
            return Ok(Err((
                case,
                format!("recursive step on G - {x1} failed: {e}"),
            )))
        }
    };
    for (old, new) in del.edge_map.iter().enumerate() {
        if let Some(new) = new {
            colors[old] = sub.coloring.color(*new);
        }
    }
    for (offset, e) in g.incident_by_partner(x1).into_iter().enumerate() {
        colors[e.index()] = t + 2 - d1 + offset as Color;
    }
    Ok(Ok(Construction {
        colors,
        case,
        fallbacks: sub.fallbacks,
        diagnostics: sub.diagnostics,
    }))
}

/// Turns an interval coloring on part 1 with `t < m` colors into one with
/// `t + 1` colors. The result is always revalidated; if the construction
/// does not validate, the oracle supplies a `(t+1)`-coloring and the
/// fallback is counted and described in `diagnostics`.
pub fn interval_step_up(
    g: &Multigraph,
    bip: &Bipartition,
    c: &EdgeColoring,
    limits: &SearchLimits,
) -> Result<StepUp> {
    let part1 = VertexSet::part(bip, Part::One);
    let t = c
        .max_color()
        .ok_or_else(|| Error::input("graph has no edges"))?;
    check_interval_on(g, c, &part1, t)
        .map_err(|v| Error::input(format!("input is not an interval coloring on part 1: {v}")))?;
    if t as usize >= g.edge_count() {
        return Err(Error::input(format!("spectrum exhausted: t = m = {t}")));
    }
    let (case, reason, mut fallbacks, mut diagnostics) =
        match construct_step_up(g, bip, c, t, limits)? {
            Ok(built) => {
                let candidate = EdgeColoring::from_vec_unchecked(built.colors);
                match check_interval_on(g, &candidate, &part1, t + 1) {
                    Ok(()) => {
                        return Ok(StepUp {
                            coloring: candidate,
                            case: built.case,
                            fallbacks: built.fallbacks,
                            diagnostics: built.diagnostics,
                        })
                    }
                    Err(v) => (
                        built.case,
                        format!("constructed coloring rejected: {v}"),
                        built.fallbacks,
                        built.diagnostics,
                    ),
                }
            }
            Err((case, reason)) => (case, reason, 0, Vec::new()),
        };
    let res = oracle::solve_interval_on(g, &part1, t + 1, limits)?;
    match res.verdict {
        Verdict::Exists => {
            fallbacks += 1;
            diagnostics.push(format!(
                "step {t}->{} ({:?} at vertex {}): {reason}; used oracle witness",
                t + 1,
                case.kind,
                case.x1
            ));
            let coloring = res
                .witness
                .ok_or_else(|| Error::invariant("oracle reported a witness it did not return"))?;
            Ok(StepUp {
                coloring,
                case,
                fallbacks,
                diagnostics,
            })
        }
        Verdict::NotExists => Err(Error::invariant(format!(
            "no interval coloring on part 1 with {} colors exists although one with {t} does",
            t + 1
        ))),
        Verdict::Capped => Err(Error::Capped {
            nodes: res.nodes_explored,
        }),
    }
}

/// Interval coloring on part 1 with exactly `t` colors, `w1 ≤ t ≤ m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub coloring: EdgeColoring,
    /// The least feasible `t`, when the oracle was consulted.
    pub w1: Option<Color>,
    pub steps: Vec<StepUpCase>,
    pub fallbacks: usize,
    pub diagnostics: Vec<String>,
}

/// Builds an interval coloring on part 1 with `t` colors by taking the
/// oracle's witness at `w1` and stepping it up. `t = m` is served directly
/// by [`sequential_max_coloring`].
pub fn realize_spectrum(
    g: &Multigraph,
    bip: &Bipartition,
    t: Color,
    limits: &SearchLimits,
) -> Result<Realization> {
    let m = g.edge_count();
    if m == 0 {
        return Err(Error::input("graph has no edges"));
    }
    if t as usize == m {
        return Ok(Realization {
            coloring: sequential_max_coloring(g, bip)?,
            w1: None,
            steps: Vec::new(),
            fallbacks: 0,
            diagnostics: Vec::new(),
        });
    }
    let part1 = VertexSet::part(bip, Part::One);
    let least = oracle::least_interval(g, &part1, limits)?;
    let (w1, mut coloring) = match (least.verdict, least.witness) {
        (Verdict::Exists, Some(w)) => (w.max_color().unwrap_or(0), w),
        (Verdict::Capped, _) => {
            return Err(Error::Capped {
                nodes: least.nodes_explored,
            })
        }
        _ => {
            return Err(Error::invariant(
                "bipartite graph without any interval coloring on part 1",
            ))
        }
    };
    if t < w1 || t as usize > m {
        return Err(Error::OutOfRange {
            t,
            lo: w1,
            hi: m as Color,
        });
    }
    let mut steps = Vec::new();
    let mut fallbacks = 0;
    let mut diagnostics = Vec::new();
    for _ in w1..t {
        let up = interval_step_up(g, bip, &coloring, limits)?;
        steps.push(up.case);
        fallbacks += up.fallbacks;
        diagnostics.extend(up.diagnostics);
        coloring = up.coloring;
    }
    debug_assert!(is_interval_on(g, &coloring, &part1, t));
    Ok(Realization {
        coloring,
        w1: Some(w1),
        steps,
        fallbacks,
        diagnostics,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(v: &[Color]) -> EdgeColoring {
        EdgeColoring::new(v.to_vec()).unwrap()
    }

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    /// Part 1 = {u, v} = {1, 2}; edges u-a, u-b, v-a with a = 3, b = 4.
    fn small_bip() -> (Multigraph, Bipartition) {
        let g = Multigraph::from_pairs(4, &[(1, 3), (1, 4), (2, 3)]).unwrap();
        let b = Bipartition::split_at(&g, 2).unwrap();
        (g, b)
    }

    fn k33() -> (Multigraph, Bipartition) {
        let mut pairs = Vec::new();
        for i in 1..=3 {
            for j in 4..=6 {
                pairs.push((i, j));
            }
        }
        let g = Multigraph::from_pairs(6, &pairs).unwrap();
        let b = Bipartition::split_at(&g, 3).unwrap();
        (g, b)
    }

    #[test]
    fn residue_plan() {
        let p = ResidueClassPlan::new(2, 5).unwrap();
        assert_eq!(p.classes, vec![vec![1, 3, 5], vec![2, 4]]);
        assert_eq!(p.class_of(4), 2);
    }

    #[test]
    fn compress_examples() {
        let p4 = Multigraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(
            compress_to_delta(&p4, &col(&[1, 2, 3])).unwrap(),
            col(&[1, 2, 1])
        );
        let star = Multigraph::from_pairs(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(
            compress_to_delta(&star, &col(&[1, 2, 3])).unwrap(),
            col(&[1, 2, 3])
        );
        let c4 = Multigraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        assert_eq!(
            compress_to_delta(&c4, &col(&[1, 2, 3, 2])).unwrap(),
            col(&[1, 2, 1, 2])
        );
        assert!(compress_to_delta(&p4, &col(&[1, 3, 2])).is_err());
    }

    #[test]
    fn step_down_examples() {
        let c4 = Multigraph::from_pairs(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let out = regular_step_down(&c4, &col(&[1, 2, 3, 2])).unwrap();
        assert_eq!(out, col(&[1, 2, 1, 2]));
        assert!(regular_step_down(&c4, &out).is_err());
        let path = Multigraph::from_pairs(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(regular_step_down(&path, &col(&[1, 2])).is_err());
    }

    #[test]
    fn step_down_c6() {
        let c6 =
            Multigraph::from_pairs(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1)]).unwrap();
        let all = VertexSet::all(&c6);
        let w3 = oracle::solve_interval_on(&c6, &all, 3, &lim())
            .unwrap()
            .witness
            .unwrap();
        let w2 = regular_step_down(&c6, &w3).unwrap();
        assert!(is_interval_on(&c6, &w2, &all, 2));
    }

    #[test]
    fn sequential_examples() {
        let e = Multigraph::from_pairs(2, &[(1, 2)]).unwrap();
        assert_eq!(
            sequential_max_coloring(&e, &Bipartition::split_at(&e, 1).unwrap()).unwrap(),
            col(&[1])
        );
        let star = Multigraph::from_pairs(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let b = Bipartition::split_at(&star, 1).unwrap();
        assert_eq!(sequential_max_coloring(&star, &b).unwrap(), col(&[1, 2, 3]));
        let (g, b) = small_bip();
        let c = sequential_max_coloring(&g, &b).unwrap();
        assert_eq!(c, col(&[1, 2, 3]));
        assert_eq!(coloring::spectrum(&g, &c, VertexId(1)).colors, vec![1, 2]);
        assert_eq!(coloring::spectrum(&g, &c, VertexId(2)).colors, vec![3]);
        assert!(is_interval_on(&g, &c, &VertexSet::part(&b, Part::One), 3));
        let empty = Multigraph::from_pairs(2, &[]).unwrap();
        assert!(
            sequential_max_coloring(&empty, &Bipartition::split_at(&empty, 1).unwrap()).is_err()
        );
    }

    #[test]
    fn continuous_examples() {
        let star = Multigraph::from_pairs(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        let b = Bipartition::split_at(&star, 1).unwrap();
        assert_eq!(continuous_on_part(&star, &b).unwrap(), col(&[1, 2, 3]));

        let (g, b) = k33();
        let c = continuous_on_part(&g, &b).unwrap();
        assert!(coloring::is_continuous_on(
            &g,
            &c,
            &VertexSet::part(&b, Part::One),
            3
        ));

        let bad = Multigraph::from_pairs(3, &[(1, 2), (3, 2)]).unwrap();
        let err = continuous_on_part(
            &bad,
            &Bipartition::new(&bad, vec![Part::One, Part::Two, Part::One]).unwrap(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn continuous_trace_on_k33() {
        let (g, b) = k33();
        let (c, steps) = continuous_on_part_traced(&g, &b).unwrap();
        assert_eq!(steps.len(), 9);
        // Replay the trace on a partial coloring: each swap must free color
        // j at its start vertex and keep the partial coloring proper.
        let mut partial: Vec<Option<Color>> = vec![None; 9];
        for step in &steps {
            if let Some(sw) = &step.swap {
                for e in &sw.path {
                    let c = partial[e.index()].unwrap();
                    partial[e.index()] = Some(if c == sw.j { sw.k } else { sw.j });
                }
                let start_has_j = g
                    .incident_edges(sw.start)
                    .any(|e| partial[e.index()] == Some(sw.j));
                assert!(!start_has_j);
            }
            partial[step.edge.index()] = Some(step.color);
            for v in g.vertices() {
                let mut seen: Vec<Color> = g
                    .incident_edges(v)
                    .filter_map(|e| partial[e.index()])
                    .collect();
                let n = seen.len();
                seen.sort_unstable();
                seen.dedup();
                assert_eq!(seen.len(), n, "partial coloring improper at {v}");
            }
        }
        assert_eq!(
            partial.into_iter().map(Option::unwrap).collect::<Vec<_>>(),
            c.colors()
        );
        assert!(steps.iter().filter(|s| s.swap.is_some()).count() >= 1);
        // The first swap happens at vertex 4 (partner of the second part-1 vertex's first edge).
        let first = steps.iter().find_map(|s| s.swap.clone()).unwrap();
        assert_eq!((first.start, first.j, first.k), (VertexId(4), 1, 2));
        assert_eq!(first.path, vec![EdgeId(1), EdgeId(2)]);
    }

    #[test]
    fn step_up_case1_example() {
        let (g, b) = small_bip();
        let up = interval_step_up(&g, &b, &col(&[1, 2, 2]), &lim()).unwrap();
        assert_eq!(up.case.kind, StepUpKind::Case1);
        assert_eq!(up.case.x1, VertexId(2));
        assert_eq!(up.case.e1, EdgeId(3));
        assert_eq!(up.coloring, col(&[1, 2, 3]));
        assert_eq!(up.fallbacks, 0);
        let err = interval_step_up(&g, &b, &col(&[1, 2, 3]), &lim()).unwrap_err();
        assert!(err.to_string().contains("spectrum exhausted"));
        assert!(interval_step_up(&g, &b, &col(&[1, 3, 2]), &lim()).is_err());
    }

    #[test]
    fn step_up_case2a_rotation() {
        // Part 1 = {1, 2, 3}: vertex 1 has colors 2,3,4; vertex 2 has 3; vertex 3 has 1.
        let g = Multigraph::from_pairs(8, &[(1, 4), (1, 5), (1, 6), (2, 7), (3, 8)]).unwrap();
        let b = Bipartition::split_at(&g, 3).unwrap();
        let up = interval_step_up(&g, &b, &col(&[2, 3, 4, 3, 1]), &lim()).unwrap();
        assert_eq!(up.case.kind, StepUpKind::Case2a);
        assert_eq!(up.case.x1, VertexId(1));
        assert_eq!(up.case.s, Some(3));
        assert_eq!(up.coloring, col(&[3, 4, 2, 5, 1]));
        assert_eq!(up.fallbacks, 0);
    }

    #[test]
    fn step_up_case2b_recursion() {
        // Vertex 1 alone carries 3,4; the only shared color is 1.
        let g = Multigraph::from_pairs(8, &[(1, 4), (1, 5), (2, 6), (2, 7), (3, 8)]).unwrap();
        let b = Bipartition::split_at(&g, 3).unwrap();
        let up = interval_step_up(&g, &b, &col(&[3, 4, 1, 2, 1]), &lim()).unwrap();
        assert_eq!(up.case.kind, StepUpKind::Case2b);
        assert_eq!(up.case.s, Some(1));
        assert_eq!(up.coloring, col(&[4, 5, 3, 2, 1]));
        assert_eq!(up.fallbacks, 0);
    }

    #[test]
    fn realize_examples() {
        let (g, b) = small_bip();
        let part1 = VertexSet::part(&b, Part::One);
        for t in 2..=3 {
            let r = realize_spectrum(&g, &b, t, &lim()).unwrap();
            assert!(is_interval_on(&g, &r.coloring, &part1, t));
            assert_eq!(r.fallbacks, 0);
        }
        let r = realize_spectrum(&g, &b, 2, &lim()).unwrap();
        assert_eq!(r.w1, Some(2));
        assert!(r.steps.is_empty());
        assert_eq!(
            realize_spectrum(&g, &b, 1, &lim()).unwrap_err(),
            Error::OutOfRange { t: 1, lo: 2, hi: 3 }
        );
        assert!(matches!(
            realize_spectrum(&g, &b, 4, &lim()),
            Err(Error::OutOfRange { .. })
        ));
        let e = Multigraph::from_pairs(2, &[(1, 2)]).unwrap();
        let r = realize_spectrum(&e, &Bipartition::split_at(&e, 1).unwrap(), 1, &lim()).unwrap();
        assert_eq!(r.coloring, col(&[1]));
    }
}
