//! Exact induced-subgraph search.
//!
//! Backtracking over pattern vertices with forward checking: every
//! unassigned pattern vertex keeps a candidate domain of host vertices, and
//! each assignment `u -> x` narrows the domain of every other unassigned `w`
//! to `N(x)` or to the non-neighbors of `x`, depending on whether `uw` is a
//! pattern edge. Domains also respect degree, non-degree, neighbor-degree
//! dominance and common-neighbor counts. The next vertex is the unassigned
//! one with the smallest domain, ties broken by larger pattern degree, then
//! smaller id, so runs are reproducible.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};

/// Basic-step budget used when the caller does not pick one.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    NotFound,
    /// The step budget ran out before the search space was exhausted.
    Undecided,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(_))
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, SearchOutcome::Undecided)
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SearchOutcome<U> {
        match self {
            SearchOutcome::Found(t) => SearchOutcome::Found(f(t)),
            SearchOutcome::NotFound => SearchOutcome::NotFound,
            SearchOutcome::Undecided => SearchOutcome::Undecided,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Maximum number of candidate assignments tried; `None` is unbounded.
    pub budget: Option<u64>,
    /// Fan the root-level candidates out over the rayon pool.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Some(DEFAULT_BUDGET),
            parallel: false,
        }
    }
}

impl SearchOptions {
    pub fn unbounded() -> Self {
        SearchOptions {
            budget: None,
            parallel: false,
        }
    }

    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget: Some(budget),
            parallel: false,
        }
    }

    pub fn parallel(mut self, on: bool) -> Self {
        self.parallel = on;
        self
    }
}

/// Injective map from pattern ids to host ids; `image(u)` is the host
/// vertex playing pattern vertex `u`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    map: Vec<usize>,
}

impl Embedding {
    pub fn new(map: Vec<usize>) -> Embedding {
        Embedding { map }
    }

    pub fn image(&self, u: usize) -> usize {
        self.map[u - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `self` followed by `outer`: pattern -> middle -> host.
    pub fn then(&self, outer: &Embedding) -> Embedding {
        Embedding::new(self.map.iter().map(|&m| outer.image(m)).collect())
    }

    /// Re-checks every vertex pair; shares no code with the search.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = HashSet::new();
        if !self
            .map
            .iter()
            .all(|&x| x >= 1 && x <= host.n() && seen.insert(x))
        {
            return false;
        }
        for u in 1..=pattern.n() {
            for v in (u + 1)..=pattern.n() {
                if pattern.has_edge(u, v) != host.has_edge(self.image(u), self.image(v)) {
                    return false;
                }
            }
        }
        true
    }

    /// Serialized as `u->x` pairs, one per line.
    pub fn to_text(&self) -> String {
        self.map
            .iter()
            .enumerate()
            .map(|(i, x)| format!("{} -> {}\n", i + 1, x))
            .collect()
    }

    /// Parses the [`Embedding::to_text`] form; `#` lines are skipped and
    /// pattern ids must appear as `1, 2, ...` in order.
    pub fn from_text(text: &str) -> Result<Embedding> {
        let mut map = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::Parse {
                line: i + 1,
                msg: format!("expected `u -> x`, found `{line}`"),
            };
            let (u, x) = line.split_once("->").ok_or_else(bad)?;
            let u: usize = u.trim().parse().map_err(|_| bad())?;
            let x: usize = x.trim().parse().map_err(|_| bad())?;
            if u != map.len() + 1 {
                return Err(bad());
            }
            map.push(x);
        }
        Ok(Embedding::new(map))
    }
}

pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    match find_induced_embedding_with(pattern, host, SearchOptions::unbounded()) {
        SearchOutcome::Found(e) => Some(e),
        _ => None,
    }
}

pub fn find_induced_embedding_with(
    pattern: &Graph,
    host: &Graph,
    opts: SearchOptions,
) -> SearchOutcome<Embedding> {
    let problem = match Problem::new(pattern, host) {
        Some(p) => p,
        None => return SearchOutcome::NotFound,
    };
    let steps = AtomicU64::new(0);
    if opts.parallel {
        problem.first_parallel(&steps, opts.budget)
    } else {
        let mut found = None;
        let flow = problem.run(&steps, opts.budget, &mut |m| {
            found = Some(Embedding::new(m.to_vec()));
            false
        });
        match (found, flow) {
            (Some(e), _) => SearchOutcome::Found(e),
            (None, Flow::OutOfBudget) => SearchOutcome::Undecided,
            (None, _) => SearchOutcome::NotFound,
        }
    }
}

/// Number of distinct induced embeddings, counting at most `limit`.
pub fn count_induced_embeddings(pattern: &Graph, host: &Graph, limit: usize) -> usize {
    assert!(limit >= 1, "limit must be positive");
    let problem = match Problem::new(pattern, host) {
        Some(p) => p,
        None => return 0,
    };
    let mut count = 0;
    problem.run(&AtomicU64::new(0), None, &mut |_| {
        count += 1;
        count < limit
    });
    count
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Freeness {
    Free,
    /// `forbidden[pattern]` embeds via `embedding`.
    Contains { pattern: usize, embedding: Embedding },
    Undecided { pattern: usize },
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

pub fn is_free(g: &Graph, forbidden: &[Graph]) -> Freeness {
    is_free_with(g, forbidden, SearchOptions::default())
}

pub fn is_free_with(g: &Graph, forbidden: &[Graph], opts: SearchOptions) -> Freeness {
    for (i, h) in forbidden.iter().enumerate() {
        match find_induced_embedding_with(h, g, opts) {
            SearchOutcome::Found(embedding) => {
                return Freeness::Contains {
                    pattern: i,
                    embedding,
                }
            }
            SearchOutcome::Undecided => return Freeness::Undecided { pattern: i },
            SearchOutcome::NotFound => {}
        }
    }
    Freeness::Free
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let degrees = |x: &Graph| {
        let mut d: Vec<usize> = x.vertices().map(|v| x.degree(v)).collect();
        d.sort_unstable();
        d
    };
    degrees(g) == degrees(h) && find_induced_embedding(g, h).is_some()
}

/// Vertex count above which [`has_path_subgraph`] switches from path DFS to
/// the subset dynamic program.
pub const PATH_DFS_LIMIT: usize = 16;

/// Whether `g` has a (not necessarily induced) path on `k` vertices.
pub fn has_path_subgraph(g: &Graph, k: usize) -> bool {
    assert!(k >= 1, "path length must be positive");
    if g.n() > PATH_DFS_LIMIT && g.n() <= 128 {
        path_subgraph_dp(g, k)
    } else {
        path_subgraph_dfs(g, k)
    }
}

/// Exact DFS over simple paths. Abandons a branch when the unvisited part
/// reachable from the current end is too small to finish the path.
pub fn path_subgraph_dfs(g: &Graph, k: usize) -> bool {
    let words = words_for(g.n());
    let adj = adjacency_words(g, words);
    let mut visited = vec![0u64; words];
    for comp in connected_components(g) {
        if comp.len() < k {
            continue;
        }
        for &start in &comp {
            set_bit(&mut visited, start);
            if path_dfs(&adj, words, start, 1, k, &mut visited) {
                return true;
            }
            clear_bit(&mut visited, start);
        }
    }
    false
}

fn path_dfs(adj: &[u64], words: usize, end: usize, len: usize, k: usize, visited: &mut [u64]) -> bool {
    if len == k {
        return true;
    }
    if reachable_unvisited(adj, words, end, visited) < k - len {
        return false;
    }
    let row = &adj[end * words..(end + 1) * words];
    for w in 0..words {
        let mut bits = row[w] & !visited[w];
        while bits != 0 {
            let next = w * 64 + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            set_bit(visited, next);
            if path_dfs(adj, words, next, len + 1, k, visited) {
                return true;
            }
            clear_bit(visited, next);
        }
    }
    false
}

fn reachable_unvisited(adj: &[u64], words: usize, from: usize, visited: &[u64]) -> usize {
    let mut seen = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    for w in 0..words {
        frontier[w] = adj[from * words + w] & !visited[w];
    }
    loop {
        let mut grew = false;
        let mut next = vec![0u64; words];
        for w in 0..words {
            let mut bits = frontier[w] & !seen[w];
            seen[w] |= bits;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for x in 0..words {
                    next[x] |= adj[v * words + x];
                }
                grew = true;
            }
        }
        if !grew {
            break;
        }
        for w in 0..words {
            frontier[w] = next[w] & !visited[w] & !seen[w];
        }
    }
    seen.iter().map(|w| w.count_ones() as usize).sum()
}

/// Layered dynamic program over `(vertex set, end vertex)` states; two
/// paths with the same set and end are interchangeable for extension.
pub fn path_subgraph_dp(g: &Graph, k: usize) -> bool {
    assert!(g.n() <= 128, "subset DP supports at most 128 vertices");
    if k > g.n() {
        return false;
    }
    let mut layer: HashSet<(u128, usize)> = g.vertices().map(|v| (1u128 << (v - 1), v)).collect();
    for _ in 1..k {
        let mut next = HashSet::new();
        for &(set, end) in &layer {
            for u in g.neighbors(end) {
                let bit = 1u128 << (u - 1);
                if set & bit == 0 {
                    next.insert((set | bit, u));
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        layer = next;
    }
    !layer.is_empty()
}

fn words_for(n: usize) -> usize {
    (n + 1).div_ceil(64)
}

fn adjacency_words(g: &Graph, words: usize) -> Vec<u64> {
    let mut adj = vec![0u64; (g.n() + 1) * words];
    for (u, v) in g.edges() {
        adj[u * words + v / 64] |= 1 << (v % 64);
        adj[v * words + u / 64] |= 1 << (u % 64);
    }
    adj
}

fn set_bit(s: &mut [u64], v: usize) {
    s[v / 64] |= 1 << (v % 64);
}

fn clear_bit(s: &mut [u64], v: usize) {
    s[v / 64] &= !(1 << (v % 64));
}

fn popcount(s: &[u64]) -> usize {
    s.iter().map(|w| w.count_ones() as usize).sum()
}

fn ones(s: &[u64]) -> impl Iterator<Item = usize> + '_ {
    s.iter().enumerate().flat_map(|(w, &word)| {
        let mut bits = word;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            }
        })
    })
}

enum Flow {
    Continue,
    Stop,
    OutOfBudget,
}

struct Problem<'a> {
    pattern: &'a Graph,
    p: usize,
    words: usize,
    host_adj: Vec<u64>,
    /// Host non-neighbors of each vertex, excluding the vertex itself.
    host_non: Vec<u64>,
    host_common: Vec<u32>,
    host_n: usize,
    pattern_common: Vec<u32>,
    pattern_degree: Vec<usize>,
    initial: Vec<u64>,
}

impl<'a> Problem<'a> {
    /// `None` when some pattern vertex has no candidate at all.
    fn new(pattern: &'a Graph, host: &Graph) -> Option<Problem<'a>> {
        let p = pattern.n();
        let hn = host.n();
        if p > hn {
            return None;
        }
        let words = words_for(hn);
        let host_adj = adjacency_words(host, words);
        let mut host_non = vec![0u64; (hn + 1) * words];
        for x in 1..=hn {
            for y in 1..=hn {
                if x != y && !host.has_edge(x, y) {
                    set_bit(&mut host_non[x * words..(x + 1) * words], y);
                }
            }
        }
        let common = |g: &Graph| {
            let n = g.n();
            let mut c = vec![0u32; (n + 1) * (n + 1)];
            for x in 1..=n {
                for y in (x + 1)..=n {
                    let k = g.neighborhood(x).intersection_count(g.neighborhood(y)) as u32;
                    c[x * (n + 1) + y] = k;
                    c[y * (n + 1) + x] = k;
                }
            }
            c
        };
        let host_common = common(host);
        let pattern_common = common(pattern);

        let sorted_nbr_degrees = |g: &Graph, v: usize| {
            let mut d: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            d.sort_unstable_by(|a, b| b.cmp(a));
            d
        };
        let host_nd: Vec<Vec<usize>> = (0..=hn)
            .map(|x| if x == 0 { vec![] } else { sorted_nbr_degrees(host, x) })
            .collect();

        let mut initial = vec![0u64; (p + 1) * words];
        let pattern_degree: Vec<usize> = (0..=p)
            .map(|u| if u == 0 { 0 } else { pattern.degree(u) })
            .collect();
        for u in 1..=p {
            let du = pattern_degree[u];
            let nu = p - 1 - du;
            let pnd = sorted_nbr_degrees(pattern, u);
            let dom = &mut initial[u * words..(u + 1) * words];
            for x in 1..=hn {
                let dx = host.degree(x);
                if dx < du || hn - 1 - dx < nu {
                    continue;
                }
                if pnd.iter().zip(&host_nd[x]).any(|(a, b)| a > b) {
                    continue;
                }
                set_bit(dom, x);
            }
            if dom.iter().all(|&w| w == 0) {
                return None;
            }
        }
        Some(Problem {
            pattern,
            p,
            words,
            host_adj,
            host_non,
            host_common,
            host_n: hn,
            pattern_common,
            pattern_degree,
            initial,
        })
    }

    fn domain<'d>(&self, doms: &'d [u64], u: usize) -> &'d [u64] {
        &doms[u * self.words..(u + 1) * self.words]
    }

    fn pick(&self, doms: &[u64], assign: &[usize]) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for u in 1..=self.p {
            if assign[u] != 0 {
                continue;
            }
            let size = popcount(self.domain(doms, u));
            let better = match best {
                None => true,
                Some((bu, bs)) => {
                    size < bs || (size == bs && self.pattern_degree[u] > self.pattern_degree[bu])
                }
            };
            if better {
                best = Some((u, size));
            }
        }
        best.map(|(u, _)| u)
    }

    /// Narrows `doms` after `u -> x` into `out`; false on a wipe-out.
    fn propagate(&self, doms: &[u64], assign: &[usize], u: usize, x: usize, out: &mut [u64]) -> bool {
        let w = self.words;
        out.copy_from_slice(doms);
        let nx = &self.host_adj[x * w..(x + 1) * w];
        let non = &self.host_non[x * w..(x + 1) * w];
        let mut union = vec![0u64; w];
        let mut open = 0usize;
        for v in 1..=self.p {
            if v == u || assign[v] != 0 {
                continue;
            }
            open += 1;
            let mask = if self.pattern.has_edge(u, v) { nx } else { non };
            let dom = &mut out[v * w..(v + 1) * w];
            let need = self.pattern_common[u * (self.p + 1) + v];
            let mut empty = true;
            for i in 0..w {
                dom[i] &= mask[i];
            }
            if need > 0 {
                for i in 0..w {
                    let mut bits = dom[i];
                    while bits != 0 {
                        let b = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        let y = i * 64 + b;
                        if self.host_common[x * (self.host_n + 1) + y] < need {
                            dom[i] &= !(1 << b);
                        }
                    }
                }
            }
            for i in 0..w {
                if dom[i] != 0 {
                    empty = false;
                }
                union[i] |= dom[i];
            }
            if empty {
                return false;
            }
        }
        popcount(&union) >= open
    }

    /// Runs the search, calling `visit` on each complete map (indexed by
    /// pattern id minus one). `visit` returns whether to keep going.
    fn run(&self, steps: &AtomicU64, budget: Option<u64>, visit: &mut dyn FnMut(&[usize]) -> bool) -> Flow {
        let mut assign = vec![0usize; self.p + 1];
        let mut arena = vec![0u64; (self.p + 1) * (self.p + 1) * self.words];
        let size = (self.p + 1) * self.words;
        arena[..size].copy_from_slice(&self.initial);
        self.extend(0, &mut assign, &mut arena, steps, budget, visit)
    }

    fn extend(
        &self,
        depth: usize,
        assign: &mut Vec<usize>,
        arena: &mut [u64],
        steps: &AtomicU64,
        budget: Option<u64>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Flow {
        if depth == self.p {
            return if visit(&assign[1..]) { Flow::Continue } else { Flow::Stop };
        }
        let size = (self.p + 1) * self.words;
        let (u, candidates) = {
            let cur = &arena[depth * size..(depth + 1) * size];
            let u = self.pick(cur, assign).expect("unassigned vertex");
            (u, ones(self.domain(cur, u)).collect::<Vec<usize>>())
        };
        for x in candidates {
            let taken = steps.fetch_add(1, Ordering::Relaxed) + 1;
            if budget.is_some_and(|b| taken > b) {
                return Flow::OutOfBudget;
            }
            let (cur, rest) = arena[depth * size..].split_at_mut(size);
            if !self.propagate(cur, assign, u, x, &mut rest[..size]) {
                continue;
            }
            assign[u] = x;
            let flow = self.extend(depth + 1, assign, arena, steps, budget, visit);
            assign[u] = 0;
            match flow {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }

    fn first_parallel(&self, steps: &AtomicU64, budget: Option<u64>) -> SearchOutcome<Embedding> {
        if self.p == 0 {
            return SearchOutcome::Found(Embedding::new(vec![]));
        }
        let assign0 = vec![0usize; self.p + 1];
        let u = self.pick(&self.initial, &assign0).expect("nonempty pattern");
        let candidates: Vec<usize> = ones(self.domain(&self.initial, u)).collect();
        let size = (self.p + 1) * self.words;
        let first_hit = AtomicUsize::new(usize::MAX);
        let outcomes: Vec<SearchOutcome<Embedding>> = candidates
            .par_iter()
            .enumerate()
            .map(|(i, &x)| {
                if i > first_hit.load(Ordering::Relaxed) {
                    return SearchOutcome::NotFound;
                }
                let taken = steps.fetch_add(1, Ordering::Relaxed) + 1;
                if budget.is_some_and(|b| taken > b) {
                    return SearchOutcome::Undecided;
                }
                let mut arena = vec![0u64; (self.p + 1) * size];
                let (first, rest) = arena.split_at_mut(size);
                first.copy_from_slice(&self.initial);
                if !self.propagate(first, &assign0, u, x, &mut rest[..size]) {
                    return SearchOutcome::NotFound;
                }
                let mut assign = assign0.clone();
                assign[u] = x;
                let mut found = None;
                let flow = self.extend(1, &mut assign, &mut arena, steps, budget, &mut |m| {
                    found = Some(Embedding::new(m.to_vec()));
                    false
                });
                match (found, flow) {
                    (Some(e), _) => {
                        first_hit.fetch_min(i, Ordering::Relaxed);
                        SearchOutcome::Found(e)
                    }
                    (None, Flow::OutOfBudget) => SearchOutcome::Undecided,
                    (None, _) => SearchOutcome::NotFound,
                }
            })
            .collect();
        outcomes
            .into_iter()
            .find(|o| !matches!(o, SearchOutcome::NotFound))
            .unwrap_or(SearchOutcome::NotFound)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        complete, complete_bipartite, cycle, p_tilde, path, s123, s_graph_star, sun4, t_graph,
        two_p3,
    };
    use crate::graph::{bipartite_complement, Bipartition};
    use crate::perm::star_perm_t;

    #[test]
    fn p3_in_p4() {
        let e = find_induced_embedding(&path(3), &path(4)).unwrap();
        assert!(e.verify(&path(3), &path(4)));
    }

    #[test]
    fn c4_not_in_path() {
        assert!(find_induced_embedding(&cycle(4), &path(4)).is_none());
        assert!(find_induced_embedding(&path(5), &path(4)).is_none());
    }

    #[test]
    fn sun4_not_in_t6() {
        let t6 = t_graph(&star_perm_t(6).unwrap()).graph;
        assert!(find_induced_embedding(&sun4(), &t6).is_none());
    }

    #[test]
    fn freeness_examples() {
        assert!(is_free(&path(6), &[path(7)]).is_free());
        let t10 = t_graph(&star_perm_t(10).unwrap()).graph;
        assert!(is_free(&t10, &[two_p3(), sun4()]).is_free());
        let s8 = s_graph_star(8).unwrap().graph;
        assert!(is_free(&s8, &[path(8), p_tilde(8).unwrap()]).is_free());
    }

    #[test]
    fn freeness_reports_first_witness() {
        match is_free(&path(7), &[cycle(4), path(3)]) {
            Freeness::Contains { pattern, embedding } => {
                assert_eq!(pattern, 1);
                assert!(embedding.verify(&path(3), &path(7)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn isomorphism_examples() {
        let relabeled = path(4).relabel(&[3, 1, 4, 2]).unwrap();
        assert!(are_isomorphic(&path(4), &relabeled));
        assert!(!are_isomorphic(&cycle(6), &two_p3()));
        let p7 = path(7);
        let b = Bipartition::new(&p7, &[1, 3, 5, 7]).unwrap();
        assert!(are_isomorphic(&bipartite_complement(&p7, &b).unwrap(), &p7));
    }

    #[test]
    fn path_subgraph_examples() {
        assert!(has_path_subgraph(&cycle(9), 9));
        assert!(!has_path_subgraph(&s123(), 9));
        assert!(has_path_subgraph(&complete_bipartite(5, 4), 9));
        assert!(!has_path_subgraph(&complete_bipartite(5, 3), 9));
        assert!(has_path_subgraph(&Graph::empty(1), 1));
    }

    #[test]
    fn path_dfs_and_dp_agree() {
        let graphs = [
            cycle(9),
            s123(),
            complete_bipartite(5, 4),
            complete_bipartite(6, 3),
            two_p3(),
            sun4(),
            path(12),
        ];
        for g in &graphs {
            for k in 1..=g.n() + 1 {
                assert_eq!(path_subgraph_dfs(g, k), path_subgraph_dp(g, k), "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn counting() {
        assert_eq!(count_induced_embeddings(&Graph::empty(1), &path(3), 10), 3);
        assert_eq!(count_induced_embeddings(&complete(2), &cycle(4), 10), 8);
        assert_eq!(count_induced_embeddings(&path(3), &cycle(4), 100), 8);
        assert_eq!(count_induced_embeddings(&path(3), &cycle(4), 5), 5);
    }

    #[test]
    fn budget_yields_undecided() {
        let t6 = t_graph(&star_perm_t(6).unwrap()).graph;
        let t8 = t_graph(&star_perm_t(8).unwrap()).graph;
        let out = find_induced_embedding_with(&t6, &t8, SearchOptions::with_budget(10));
        assert_eq!(out, SearchOutcome::Undecided);
    }

    #[test]
    fn parallel_matches_sequential() {
        let host = t_graph(&star_perm_t(6).unwrap()).graph;
        for pattern in [path(5), cycle(6), two_p3(), path(6), complete_bipartite(2, 3)] {
            let seq = find_induced_embedding_with(&pattern, &host, SearchOptions::unbounded());
            let par = find_induced_embedding_with(
                &pattern,
                &host,
                SearchOptions::unbounded().parallel(true),
            );
            assert_eq!(seq, par, "{pattern:?}");
        }
    }

    #[test]
    fn empty_pattern_embeds() {
        let e = find_induced_embedding(&Graph::empty(0), &path(2)).unwrap();
        assert!(e.is_empty());
    }
}
