//! Canonical labeling for graphs on at most 16 vertices.
//!
//! Equitable refinement plus individualization; the canonical code is the
//! largest adjacency code over all leaves of the search tree. Subtrees are
//! pruned by automorphisms fixing the individualized prefix (twin
//! transpositions up front, more as equal-code leaves are found).

use crate::graph::{Graph, GraphBuilder};

pub const CANON_LIMIT: usize = 16;
const MAX_GENERATORS: usize = 64;

/// Adjacency as one bitmask per vertex, bit `u` meaning edge to `u`
/// (0-based).
pub type Masks = Vec<u16>;

pub fn masks_of(g: &Graph) -> Masks {
    assert!(g.n() <= CANON_LIMIT, "graph too large for mask form");
    (1..=g.n())
        .map(|v| g.neighbors(v).fold(0u16, |m, u| m | 1 << (u - 1)))
        .collect()
}

pub fn graph_of(adj: &[u16]) -> Graph {
    let mut b = GraphBuilder::new(adj.len());
    for (i, &m) in adj.iter().enumerate() {
        for j in bits(m).filter(|&j| j > i) {
            b.add_edge(i + 1, j + 1);
        }
    }
    b.build()
}

pub(crate) fn bits(mut m: u16) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

/// Upper-triangle adjacency bits read in the given vertex order.
fn code_of(adj: &[u16], order: &[usize]) -> u128 {
    let mut code = 0u128;
    for (i, &u) in order.iter().enumerate() {
        for &v in &order[i + 1..] {
            code = code << 1 | u128::from(adj[u] >> v & 1);
        }
    }
    code
}

#[derive(Clone, Debug)]
pub struct Canon {
    pub code: u128,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
}

impl Canon {
    /// The graph relabeled into canonical order.
    pub fn relabeled(&self, adj: &[u16]) -> Masks {
        let mut pos = vec![0; adj.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        self.order
            .iter()
            .map(|&v| bits(adj[v]).fold(0u16, |m, u| m | 1 << pos[u]))
            .collect()
    }
}

struct Search<'a> {
    adj: &'a [u16],
    generators: Vec<Vec<usize>>,
    first: Option<(u128, Vec<usize>)>,
    best: Option<(u128, Vec<usize>)>,
}

fn refine(adj: &[u16], cells: &mut Vec<u16>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut out = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for &c in cells.iter() {
                if c.count_ones() == 1 {
                    out.push(c);
                    continue;
                }
                let mut groups: Vec<(u32, u16)> = Vec::new();
                for v in bits(c) {
                    let k = (adj[v] & splitter).count_ones();
                    match groups.iter_mut().find(|g| g.0 == k) {
                        Some(g) => g.1 |= 1 << v,
                        None => groups.push((k, 1 << v)),
                    }
                }
                if groups.len() > 1 {
                    split = true;
                    groups.sort_unstable_by_key(|g| g.0);
                }
                out.extend(groups.into_iter().map(|g| g.1));
            }
            if split {
                *cells = out;
                continue 'outer;
            }
        }
        return;
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

impl Search<'_> {
    fn orbits_fixing(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        for g in &self.generators {
            if prefix.iter().any(|&p| g[p] != p) {
                continue;
            }
            for (v, &w) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn record_automorphism(&mut self, from: &[usize], to: &[usize]) {
        if self.generators.len() >= MAX_GENERATORS || from == to {
            return;
        }
        let mut g = vec![0; self.adj.len()];
        for (&a, &b) in from.iter().zip(to) {
            g[a] = b;
        }
        self.generators.push(g);
    }

    fn leaf(&mut self, cells: &[u16]) {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = code_of(self.adj, &order);
        match &self.first {
            None => {
                self.first = Some((code, order.clone()));
                self.best = Some((code, order));
                return;
            }
            Some((c, f)) if *c == code => {
                let f = f.clone();
                self.record_automorphism(&f, &order);
                return;
            }
            _ => {}
        }
        let (best_code, best_order) = self.best.as_ref().expect("set with first leaf");
        if code == *best_code {
            let b = best_order.clone();
            self.record_automorphism(&b, &order);
        } else if code > *best_code {
            self.best = Some((code, order));
        }
    }

    fn run(&mut self, mut cells: Vec<u16>, prefix: &mut Vec<usize>) {
        refine(self.adj, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target];
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() {
                let orbits = self.orbits_fixing(prefix);
                if explored.iter().any(|&e| orbits[e] == orbits[v]) {
                    continue;
                }
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(1 << v);
            next.push(cell & !(1 << v));
            next.extend_from_slice(&cells[target + 1..]);
            prefix.push(v);
            self.run(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Transpositions of consecutive members of each twin class (equal open
/// or equal closed neighborhoods).
fn twin_generators(adj: &[u16]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut used = vec![false; n];
    for u in 0..n {
        if used[u] {
            continue;
        }
        let mut class = vec![u];
        for v in u + 1..n {
            let strip = !(1u16 << u | 1u16 << v);
            if !used[v] && adj[u] & strip == adj[v] & strip {
                used[v] = true;
                class.push(v);
            }
        }
        for w in class.windows(2) {
            let mut g: Vec<usize> = (0..n).collect();
            g.swap(w[0], w[1]);
            out.push(g);
        }
    }
    out
}

pub fn canonical(adj: &[u16]) -> Canon {
    let n = adj.len();
    assert!(n <= CANON_LIMIT, "graph too large for canonical labeling");
    if n == 0 {
        return Canon {
            code: 0,
            order: Vec::new(),
        };
    }
    let mut s = Search {
        adj,
        generators: twin_generators(adj),
        first: None,
        best: None,
    };
    let all = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    s.run(vec![all], &mut Vec::new());
    let (code, order) = s.best.expect("at least one leaf");
    Canon { code, order }
}

/// `(n, code)` identifies the isomorphism class.
pub fn canonical_key(g: &Graph) -> (usize, u128) {
    (g.n(), canonical(&masks_of(g)).code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle, path, sun4};
    use crate::matcher::are_isomorphic;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn shuffled(g: &Graph, rng: &mut ChaCha8Rng) -> Graph {
        let mut ids: Vec<usize> = (1..=g.n()).collect();
        ids.shuffle(rng);
        g.relabel(&ids).unwrap()
    }

    #[test]
    fn invariant_under_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for g in [path(9), cycle(10), sun4(), complete_bipartite(4, 5), Graph::empty(12)] {
            let key = canonical_key(&g);
            for _ in 0..10 {
                assert_eq!(canonical_key(&shuffled(&g, &mut rng)), key);
            }
        }
    }

    #[test]
    fn distinguishes_classes() {
        assert_ne!(canonical_key(&cycle(6)), canonical_key(&crate::families::two_p3()));
        assert_ne!(canonical_key(&path(4)), canonical_key(&complete_bipartite(1, 3)));
    }

    #[test]
    fn relabeled_graph_is_isomorphic() {
        let g = sun4();
        let adj = masks_of(&g);
        let c = canonical(&adj);
        let h = graph_of(&c.relabeled(&adj));
        assert!(are_isomorphic(&g, &h));
        assert_eq!(code_of(&c.relabeled(&adj), &(0..8).collect::<Vec<_>>()), c.code);
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        // 6K2 and C12 have large automorphism groups.
        let mut b = GraphBuilder::new(12);
        for i in 0..6 {
            b.add_edge(2 * i + 1, 2 * i + 2);
        }
        let g = b.build();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        assert_eq!(canonical_key(&g), canonical_key(&shuffled(&g, &mut rng)));
        let c12 = cycle(12);
        assert_eq!(canonical_key(&c12), canonical_key(&shuffled(&c12, &mut rng)));
    }

    #[test]
    fn random_graphs_agree_with_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        use rand::Rng;
        for _ in 0..200 {
            let n = rng.gen_range(1..=9);
            let mut b = GraphBuilder::new(n);
            for u in 1..=n {
                for v in u + 1..=n {
                    if rng.gen_bool(0.35) {
                        b.add_edge(u, v);
                    }
                }
            }
            let g = b.build();
            let h = shuffled(&g, &mut rng);
            assert_eq!(canonical_key(&g), canonical_key(&h));
        }
    }
}
