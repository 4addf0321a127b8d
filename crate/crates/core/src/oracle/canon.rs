//! Canonical labeling of small vertex-colored multigraphs by color
//! refinement plus individualization. Used only to deduplicate the
//! enumerated corpora, so it favours simplicity over speed.

/// Canonical form of a multigraph given as an `n × n` multiplicity matrix
/// with an initial vertex coloring. Two inputs get the same `key` iff they
/// are isomorphic by a color-preserving bijection; `order[pos]` is the
/// vertex placed at position `pos` in the canonical relabeling.
#[derive(Debug, Clone)]
pub(crate) struct Canonical {
    pub key: Vec<u8>,
    pub order: Vec<usize>,
}

pub(crate) fn canonical(n: usize, adj: &[u8], initial: &[u32]) -> Canonical {
    debug_assert_eq!(adj.len(), n * n);
    let start = refine(n, adj, initial.to_vec());
    let mut best: Option<Canonical> = None;
    search(n, adj, initial, start, &mut best);
    best.unwrap_or(Canonical {
        key: Vec::new(),
        order: Vec::new(),
    })
}

/// Equitable refinement. Colors are dense ranks of
/// (old color, sorted neighbor signature), so the result is isomorphism
/// invariant and never merges previously distinct cells.
fn refine(n: usize, adj: &[u8], mut colors: Vec<u32>) -> Vec<u32> {
    let mut cells = count_distinct(&colors);
    loop {
        let sigs: Vec<(u32, Vec<(u32, u8)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(u32, u8)> = (0..n)
                    .filter(|&w| adj[v * n + w] > 0)
                    .map(|w| (colors[w], adj[v * n + w]))
                    .collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(u32, Vec<(u32, u8)>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature present") as u32)
            .collect();
        let next_cells = distinct.len();
        colors = next;
        if next_cells == cells {
            return colors;
        }
        cells = next_cells;
    }
}

fn count_distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn are_twins(n: usize, adj: &[u8], a: usize, b: usize) -> bool {
    (0..n).all(|w| w == a || w == b || adj[a * n + w] == adj[b * n + w])
}

fn search(n: usize, adj: &[u8], initial: &[u32], colors: Vec<u32>, best: &mut Option<Canonical>) {
    if count_distinct(&colors) == n {
        let mut order = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            order[c as usize] = v;
        }
        let mut key = Vec::with_capacity(n + n * (n - 1) / 2);
        key.extend(order.iter().map(|&v| initial[v] as u8));
        for i in 0..n {
            for j in i + 1..n {
                key.push(adj[order[i] * n + order[j]]);
            }
        }
        if best.as_ref().is_none_or(|b| key < b.key) {
            *best = Some(Canonical { key, order });
        }
        return;
    }
    // First non-singleton cell by color value.
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c as usize] += 1;
    }
    let target = (0..n)
        .find(|&c| sizes[c] > 1)
        .expect("non-discrete partition") as u32;
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| are_twins(n, adj, u, v)) {
            continue;
        }
        tried.push(v);
        let split: Vec<u32> = colors
            .iter()
            .enumerate()
            .map(|(w, &c)| 2 * c + u32::from(w != v))
            .collect();
        search(n, adj, initial, refine(n, adj, split), best);
    }
}
