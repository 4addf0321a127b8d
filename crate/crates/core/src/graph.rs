//! Loopless multigraphs with stable edge identifiers and an optional
//! bipartition overlay.
//!
//! Vertices and edges are both numbered from 1. The `i`-th entry of the edge
//! list is edge `i`; parallel edges are distinct entries with the same
//! endpoints. Graphs are immutable once built; operations that change the
//! structure return a new graph.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A vertex, numbered `1..=n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

/// An edge, numbered `1..=m` by its position in the edge list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 - 1
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        VertexId(i + 1)
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 - 1
    }

    #[inline]
    pub fn from_index(i: usize) -> Self {
        EdgeId(i + 1)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<usize>>,
}

impl Multigraph {
    /// Builds a graph on `n` vertices. Endpoints must lie in `1..=n` and no
    /// edge may be a loop.
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut incidence = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            for w in [u, v] {
                if w.0 == 0 || w.0 > n {
                    return Err(Error::InvalidVertex { vertex: w.0, n });
                }
            }
            if u == v {
                return Err(Error::Loop {
                    edge: i + 1,
                    vertex: u.0,
                });
            }
            incidence[u.index()].push(i);
            incidence[v.index()].push(i);
        }
        Ok(Multigraph {
            n,
            edges,
            incidence,
        })
    }

    /// Convenience constructor from 1-based endpoint pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(
            n,
            pairs
                .iter()
                .map(|&(u, v)| (VertexId(u), VertexId(v)))
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (1..=self.n).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> {
        (1..=self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.index()]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn opposite(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e.index()];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 == 0 || v.0 > self.n {
            Err(Error::InvalidVertex {
                vertex: v.0,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Edge indices (0-based) incident with `v`, ascending.
    pub(crate) fn incident_indices(&self, v: VertexId) -> &[usize] {
        &self.incidence[v.index()]
    }

    /// Edges incident with `v` in ascending id order.
    pub fn incident_edges(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.incidence[v.index()]
            .iter()
            .map(|&i| EdgeId::from_index(i))
    }

    /// Edges incident with `v` ordered by (partner id, edge id).
    pub fn incident_by_partner(&self, v: VertexId) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> = self.incident_edges(v).collect();
        out.sort_by_key(|&e| (self.opposite(e, v), e));
        out
    }

    /// Degree of `v`; each parallel edge counts once.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.incidence[v.index()].len())
    }

    /// Degree of `v`. Panics if `v` is out of range.
    #[inline]
    pub fn deg(&self, v: VertexId) -> usize {
        self.incidence[v.index()].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let mut degs = self.incidence.iter().map(Vec::len);
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    /// `true` when every vertex is reachable from vertex 1. A graph with a
    /// single vertex is connected; an empty vertex set counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop_front() {
            for &e in &self.incidence[x] {
                let (a, b) = self.edges[e];
                let y = if a.index() == x { b.index() } else { a.index() };
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    queue.push_back(y);
                }
            }
        }
        reached == self.n
    }

    /// Multiplicity matrix, row-major `n × n`.
    pub(crate) fn multiplicities(&self) -> Vec<u8> {
        let mut adj = vec![0u8; self.n * self.n];
        for &(u, v) in &self.edges {
            adj[u.index() * self.n + v.index()] += 1;
            adj[v.index() * self.n + u.index()] += 1;
        }
        adj
    }

    /// Largest number of parallel edges between any pair.
    pub fn max_multiplicity(&self) -> usize {
        self.multiplicities()
            .into_iter()
            .map(usize::from)
            .max()
            .unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// `true` when no three distinct vertices are pairwise adjacent.
    pub fn is_triangle_free(&self) -> bool {
        let adj = self.multiplicities();
        let n = self.n;
        for a in 0..n {
            for b in a + 1..n {
                if adj[a * n + b] == 0 {
                    continue;
                }
                for c in b + 1..n {
                    if adj[a * n + c] > 0 && adj[b * n + c] > 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Removes `v` with its incident edges. Remaining vertices are renumbered
    /// densely in their old order; surviving edges keep their relative order.
    pub fn delete_vertex(&self, v: VertexId) -> Result<VertexDeletion> {
        self.check_vertex(v)?;
        let vertex_map: Vec<Option<VertexId>> = self
            .vertices()
            .map(|x| match x.cmp(&v) {
                std::cmp::Ordering::Less => Some(x),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(VertexId(x.0 - 1)),
            })
            .collect();
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut edge_map = Vec::with_capacity(self.edges.len());
        for &(a, b) in &self.edges {
            match (vertex_map[a.index()], vertex_map[b.index()]) {
                (Some(na), Some(nb)) => {
                    edges.push((na, nb));
                    edge_map.push(Some(EdgeId(edges.len())));
                }
                _ => edge_map.push(None),
            }
        }
        let graph = Multigraph::new(self.n - 1, edges)?;
        Ok(VertexDeletion {
            graph,
            vertex_map,
            edge_map,
        })
    }
}

/// Result of [`Multigraph::delete_vertex`].
#[derive(Debug, Clone)]
pub struct VertexDeletion {
    pub graph: Multigraph,
    /// Old vertex (by index) to its new id, `None` for the deleted vertex.
    pub vertex_map: Vec<Option<VertexId>>,
    /// Old edge (by index) to its new id, `None` for removed edges.
    pub edge_map: Vec<Option<EdgeId>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    One,
    Two,
}

impl Part {
    pub fn label(self) -> u8 {
        match self {
            Part::One => 1,
            Part::Two => 2,
        }
    }

    pub fn other(self) -> Part {
        match self {
            Part::One => Part::Two,
            Part::Two => Part::One,
        }
    }
}

/// Assignment of every vertex to part 1 or part 2 such that each edge
/// crosses the parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    parts: Vec<Part>,
}

impl Bipartition {
    pub fn new(g: &Multigraph, parts: Vec<Part>) -> Result<Self> {
        if parts.len() != g.vertex_count() {
            return Err(Error::input(format!(
                "bipartition covers {} vertices, graph has {}",
                parts.len(),
                g.vertex_count()
            )));
        }
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let pu = parts[u.index()];
            if pu == parts[v.index()] {
                return Err(Error::SamePart {
                    edge: i + 1,
                    u: u.0,
                    v: v.0,
                    part: pu.label(),
                });
            }
        }
        Ok(Bipartition { parts })
    }

    /// Vertices `1..=k` in part 1, the rest in part 2.
    pub fn split_at(g: &Multigraph, k: usize) -> Result<Self> {
        if k > g.vertex_count() {
            return Err(Error::input(format!(
                "part-1 size {k} exceeds vertex count {}",
                g.vertex_count()
            )));
        }
        let parts = (0..g.vertex_count())
            .map(|i| if i < k { Part::One } else { Part::Two })
            .collect();
        Self::new(g, parts)
    }

    pub fn part(&self, v: VertexId) -> Part {
        self.parts[v.index()]
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn members(&self, p: Part) -> impl Iterator<Item = VertexId> + '_ {
        self.parts
            .iter()
            .enumerate()
            .filter(move |(_, &q)| q == p)
            .map(|(i, _)| VertexId::from_index(i))
    }

    pub fn part_size(&self, p: Part) -> usize {
        self.parts.iter().filter(|&&q| q == p).count()
    }

    /// `Some(k)` when part 1 is exactly `1..=k`.
    pub fn prefix_len(&self) -> Option<usize> {
        let k = self.part_size(Part::One);
        self.parts[..k].iter().all(|&p| p == Part::One).then_some(k)
    }

    /// The endpoint of edge `e` that lies in `p`.
    pub fn endpoint_in(&self, g: &Multigraph, e: EdgeId, p: Part) -> VertexId {
        let (a, b) = g.endpoints(e);
        if self.part(a) == p {
            a
        } else {
            b
        }
    }

    /// Restriction to the graph left after a vertex deletion.
    pub fn after_deletion(&self, del: &VertexDeletion) -> Bipartition {
        let mut parts = vec![Part::One; del.graph.vertex_count()];
        for (old, new) in del.vertex_map.iter().enumerate() {
            if let Some(new) = new {
                parts[new.index()] = self.parts[old];
            }
        }
        Bipartition { parts }
    }
}
