//! Edge colorings, the three validators and the alternating-path swap.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, EdgeId, Multigraph, Part, VertexId};

pub type Color = u32;

/// A total assignment of positive colors to the edges of a graph, indexed
/// by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    colors: Vec<Color>,
}

impl EdgeColoring {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::input(format!(
                "edge {} has color 0; colors start at 1",
                i + 1
            )));
        }
        Ok(EdgeColoring { colors })
    }

    /// Like [`EdgeColoring::new`], also checking that every edge of `g` is covered.
    pub fn for_graph(g: &Multigraph, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != g.edge_count() {
            return Err(Error::input(format!(
                "coloring has {} entries, graph has {} edges",
                colors.len(),
                g.edge_count()
            )));
        }
        Self::new(colors)
    }

    pub(crate) fn from_vec_unchecked(colors: Vec<Color>) -> Self {
        debug_assert!(colors.iter().all(|&c| c >= 1));
        EdgeColoring { colors }
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.colors[e.index()]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn max_color(&self) -> Option<Color> {
        self.colors.iter().copied().max()
    }

    pub fn min_color(&self) -> Option<Color> {
        self.colors.iter().copied().min()
    }

    pub fn count_of(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }
}

/// The set `R` of vertices whose spectra are constrained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    mask: Vec<bool>,
}

impl VertexSet {
    pub fn all(g: &Multigraph) -> Self {
        VertexSet {
            mask: vec![true; g.vertex_count()],
        }
    }

    pub fn empty(g: &Multigraph) -> Self {
        VertexSet {
            mask: vec![false; g.vertex_count()],
        }
    }

    pub fn part(bip: &Bipartition, p: Part) -> Self {
        VertexSet {
            mask: bip.parts().iter().map(|&q| q == p).collect(),
        }
    }

    pub fn from_ids(g: &Multigraph, ids: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut set = Self::empty(g);
        for v in ids {
            g.check_vertex(v)?;
            set.mask[v.index()] = true;
        }
        Ok(set)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.mask.get(v.index()).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| VertexId::from_index(i))
    }

    pub(crate) fn mask(&self) -> &[bool] {
        &self.mask
    }
}

/// Set of colors seen at a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub vertex: VertexId,
    pub colors: Vec<Color>,
}

impl Spectrum {
    pub fn is_consecutive(&self) -> bool {
        match (self.colors.first(), self.colors.last()) {
            (Some(&lo), Some(&hi)) => (hi - lo) as usize + 1 == self.colors.len(),
            _ => true,
        }
    }

    /// `true` when the spectrum is exactly `{1, ..., len}`.
    pub fn is_initial_segment(&self) -> bool {
        self.colors
            .iter()
            .enumerate()
            .all(|(i, &c)| c as usize == i + 1)
    }
}

pub fn spectrum(g: &Multigraph, c: &EdgeColoring, v: VertexId) -> Spectrum {
    let mut colors: Vec<Color> = g.incident_edges(v).map(|e| c.color(e)).collect();
    colors.sort_unstable();
    colors.dedup();
    Spectrum { vertex: v, colors }
}

/// First reason a coloring fails a validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongLength {
        colors: usize,
        edges: usize,
    },
    ZeroColor {
        edge: EdgeId,
    },
    Clash {
        vertex: VertexId,
        first: EdgeId,
        second: EdgeId,
        color: Color,
    },
    MaxColor {
        max: Color,
        t: Color,
    },
    Unused {
        color: Color,
    },
    NotConsecutive {
        vertex: VertexId,
    },
    NotContinuous {
        vertex: VertexId,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { colors, edges } => {
                write!(f, "coloring has {colors} entries for {edges} edges")
            }
            Violation::ZeroColor { edge } => write!(f, "edge {edge} has color 0"),
            Violation::Clash {
                vertex,
                first,
                second,
                color,
            } => {
                write!(
                    f,
                    "edges {first} and {second} share color {color} at vertex {vertex}"
                )
            }
            Violation::MaxColor { max, t } => write!(f, "largest color is {max}, expected {t}"),
            Violation::Unused { color } => write!(f, "color {color} is unused"),
            Violation::NotConsecutive { vertex } => {
                write!(f, "spectrum of vertex {vertex} is not consecutive")
            }
            Violation::NotContinuous { vertex } => {
                write!(f, "spectrum of vertex {vertex} is not 1..d")
            }
        }
    }
}

pub fn check_proper(g: &Multigraph, c: &EdgeColoring) -> Result<(), Violation> {
    if c.len() != g.edge_count() {
        return Err(Violation::WrongLength {
            colors: c.len(),
            edges: g.edge_count(),
        });
    }
    if let Some(i) = c.colors.iter().position(|&x| x == 0) {
        return Err(Violation::ZeroColor {
            edge: EdgeId::from_index(i),
        });
    }
    let mut seen: Vec<(Color, usize)> = Vec::new();
    for v in g.vertices() {
        seen.clear();
        seen.extend(g.incident_indices(v).iter().map(|&i| (c.colors[i], i)));
        seen.sort_unstable();
        for w in seen.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Violation::Clash {
                    vertex: v,
                    first: EdgeId::from_index(w[0].1),
                    second: EdgeId::from_index(w[1].1),
                    color: w[0].0,
                });
            }
        }
    }
    Ok(())
}

/// Proper, uses exactly the colors `1..=t`, and every vertex of `r` sees
/// `d(x)` consecutive colors.
pub fn check_interval_on(
    g: &Multigraph,
    c: &EdgeColoring,
    r: &VertexSet,
    t: Color,
) -> Result<(), Violation> {
    check_proper(g, c)?;
    check_palette(c, t)?;
    for v in r.iter() {
        if !spectrum(g, c, v).is_consecutive() {
            return Err(Violation::NotConsecutive { vertex: v });
        }
    }
    Ok(())
}

/// Interval on `r`, and additionally every vertex of `r` sees exactly `1..=d(x)`.
pub fn check_continuous_on(
    g: &Multigraph,
    c: &EdgeColoring,
    r: &VertexSet,
    t: Color,
) -> Result<(), Violation> {
    check_interval_on(g, c, r, t)?;
    for v in r.iter() {
        if !spectrum(g, c, v).is_initial_segment() {
            return Err(Violation::NotContinuous { vertex: v });
        }
    }
    Ok(())
}

fn check_palette(c: &EdgeColoring, t: Color) -> Result<(), Violation> {
    let max = c.max_color().unwrap_or(0);
    if max != t {
        return Err(Violation::MaxColor { max, t });
    }
    let mut used = vec![false; t as usize + 1];
    for &x in &c.colors {
        used[x as usize] = true;
    }
    match (1..=t).find(|&x| !used[x as usize]) {
        Some(color) => Err(Violation::Unused { color }),
        None => Ok(()),
    }
}

pub fn is_proper(g: &Multigraph, c: &EdgeColoring) -> bool {
    check_proper(g, c).is_ok()
}

pub fn is_interval_on(g: &Multigraph, c: &EdgeColoring, r: &VertexSet, t: Color) -> bool {
    check_interval_on(g, c, r, t).is_ok()
}

pub fn is_continuous_on(g: &Multigraph, c: &EdgeColoring, r: &VertexSet, t: Color) -> bool {
    check_continuous_on(g, c, r, t).is_ok()
}

/// Shifts all colors by one constant so the smallest becomes 1.
pub fn normalize_shift(c: &EdgeColoring) -> Result<EdgeColoring> {
    let min = c
        .min_color()
        .ok_or_else(|| Error::input("cannot normalize a coloring of no edges"))?;
    Ok(EdgeColoring {
        colors: c.colors.iter().map(|&x| x - min + 1).collect(),
    })
}

/// For a connected graph whose coloring is proper with consecutive spectra
/// everywhere, normalizes it and returns the number of colors `t`. Every
/// color of `1..=t` is then in use; a gap is reported as an invariant failure.
pub fn interval_closure_check(g: &Multigraph, c: &EdgeColoring) -> Result<Color> {
    if !g.is_connected() {
        return Err(Error::input("graph is not connected"));
    }
    check_proper(g, c).map_err(|v| Error::input(v.to_string()))?;
    if let Some(v) = g.vertices().find(|&v| !spectrum(g, c, v).is_consecutive()) {
        return Err(Error::input(format!(
            "spectrum of vertex {v} is not consecutive"
        )));
    }
    let normalized = normalize_shift(c)?;
    let t = normalized.max_color().unwrap_or(0);
    check_palette(&normalized, t)
        .map_err(|v| Error::invariant(format!("connected interval coloring has a gap: {v}")))?;
    Ok(t)
}

/// Edges (0-based) of the maximal path starting at `start` whose colors
/// alternate between `j` and `k`, in walk order. `color_of` may return `None`
/// for uncolored edges, which never belong to the path.
pub(crate) fn alternating_path(
    g: &Multigraph,
    color_of: impl Fn(usize) -> Option<Color>,
    start: VertexId,
    j: Color,
    k: Color,
) -> Result<Vec<usize>> {
    if j == k {
        return Err(Error::input("swap colors must differ"));
    }
    let edge_with = |v: VertexId, col: Color| -> Result<Option<usize>> {
        let mut found = None;
        for &e in g.incident_indices(v) {
            if color_of(e) == Some(col) {
                if found.is_some() {
                    return Err(Error::input(format!(
                        "coloring is not proper: two edges of color {col} at vertex {v}"
                    )));
                }
                found = Some(e);
            }
        }
        Ok(found)
    };
    let first = match (edge_with(start, j)?, edge_with(start, k)?) {
        (Some(_), Some(_)) => {
            return Err(Error::input(format!(
                "vertex {start} carries both colors {j} and {k}; the swap path is not anchored"
            )))
        }
        (Some(_), None) => j,
        (None, Some(_)) => k,
        (None, None) => return Ok(Vec::new()),
    };
    let mut visited = vec![false; g.vertex_count()];
    visited[start.index()] = true;
    let mut path = Vec::new();
    let (mut cur, mut col) = (start, first);
    while let Some(e) = edge_with(cur, col)? {
        path.push(e);
        let next = g.opposite(EdgeId::from_index(e), cur);
        if visited[next.index()] {
            return Err(Error::input(format!(
                "alternating walk revisits vertex {next}; input is not a proper coloring"
            )));
        }
        visited[next.index()] = true;
        cur = next;
        col = if col == j { k } else { j };
    }
    Ok(path)
}

/// Exchanges colors `j` and `k` along the maximal `j`/`k` alternating path
/// that starts at `start`. If `start` has neither color the coloring is
/// returned unchanged.
pub fn kempe_swap(
    g: &Multigraph,
    c: &EdgeColoring,
    start: VertexId,
    j: Color,
    k: Color,
) -> Result<EdgeColoring> {
    g.check_vertex(start)?;
    if c.len() != g.edge_count() {
        return Err(Error::input("coloring does not match graph"));
    }
    let path = alternating_path(g, |e| Some(c.colors[e]), start, j, k)?;
    let mut out = c.clone();
    for e in path {
        out.colors[e] = if out.colors[e] == j { k } else { j };
    }
    Ok(out)
}
