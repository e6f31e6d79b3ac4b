use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::enumerate::{enumerate_bipartite_upto, Filter};
use super::report::{CaseResult, SuiteReport, Witness};
use crate::error::{Error, Result};
use crate::families::{
    complete_bipartite, cycle, grid_permutation, h_antichain, p_tilde, path, s123, s_graph_star, sun1, sun4,
    t_graph_star, two_p3, universal_grid, Zone,
};
use crate::graph::{connected_components, find_bipartition, induced_subgraph, serialize_graph, Graph};
use crate::matcher::{
    are_isomorphic, find_induced_embedding_with, has_path_subgraph, is_free_with, Embedding, Freeness,
    SearchOptions, SearchOutcome, DEFAULT_BUDGET,
};
use crate::perm::{
    compose, find_pattern, inverse, is_convex, mu_star, permutation_graph, rho_star, star_perm_s, star_perm_t,
    Permutation,
};
use crate::structure::{
    decompose, find_biconvex_order, incomparability_graph, neighborhoods_nested, random_tree, recompose,
    s_graph_order, verify_biconvex_order,
};

/// Knobs shared by every suite. The defaults are the desk-scale settings.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub parallel: bool,
    pub budget: Option<u64>,
    pub lemma_key_n_max: usize,
    pub reduction_n_max: usize,
    pub closure_n_max: usize,
    pub universality_m_max: usize,
    pub t_pair: (usize, usize),
    pub s_pair: (usize, usize),
    pub random_trees: usize,
    pub tree_depth: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            parallel: true,
            budget: Some(DEFAULT_BUDGET),
            lemma_key_n_max: 11,
            reduction_n_max: 10,
            closure_n_max: 10,
            universality_m_max: 6,
            t_pair: (6, 8),
            s_pair: (8, 10),
            random_trees: 300,
            tree_depth: 6,
            seed: 0x5eed,
        }
    }
}

impl SuiteConfig {
    fn search(&self) -> SearchOptions {
        SearchOptions {
            budget: self.budget,
            parallel: false,
        }
    }

    fn map<T: Sync, R: Send>(&self, items: &[T], f: impl Fn(&T) -> R + Sync + Send) -> Vec<R> {
        if self.parallel {
            items.par_iter().map(f).collect()
        } else {
            items.iter().map(f).collect()
        }
    }
}

pub const SUITES: [&str; 9] = [
    "identities",
    "t-free",
    "t-antichain",
    "s-structure",
    "s-antichain",
    "lemma-key",
    "lemma-reduction",
    "universality",
    "closure",
];

/// Runs a suite by name; `all` runs every suite in [`SUITES`] order.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    Ok(match name {
        "identities" => suite_identities(),
        "t-free" => suite_t_free(cfg),
        "t-antichain" => suite_t_antichain(cfg),
        "s-structure" => suite_s_structure(cfg),
        "s-antichain" => suite_s_antichain(cfg),
        "lemma-key" => suite_lemma_key(cfg.lemma_key_n_max, cfg)?,
        "lemma-reduction" => suite_lemma_reduction(cfg.reduction_n_max, cfg)?,
        "universality" => suite_universality(cfg.universality_m_max, cfg)?,
        "closure" => suite_closure(cfg)?,
        "all" => {
            let started = Instant::now();
            let parts = SUITES.iter().map(|s| run_suite(s, cfg)).collect::<Result<Vec<_>>>()?;
            SuiteReport::merge("all", parts, started)
        }
        other => return Err(Error::InvalidParameter(format!("unknown suite `{other}`"))),
    })
}

fn graph_witness(g: &Graph) -> Witness {
    Witness::new("graph", serialize_graph(g, None))
}

fn embedding_witness(pattern: &str, host: &str, e: &Embedding) -> Witness {
    Witness::new("embedding", format!("# {pattern} into {host}\n{}", e.to_text()))
}

fn perm_witness(p: &Permutation) -> Witness {
    Witness::new("permutation", p.to_string())
}

fn freeness_case(case: String, g: &Graph, forbidden: &[(&str, Graph)], cfg: &SuiteConfig) -> CaseResult {
    let graphs: Vec<Graph> = forbidden.iter().map(|(_, h)| h.clone()).collect();
    match is_free_with(g, &graphs, cfg.search()) {
        Freeness::Free => CaseResult::pass(case),
        Freeness::Contains { pattern, embedding } => {
            let w = embedding_witness(forbidden[pattern].0, &case, &embedding);
            CaseResult::fail(case, w)
        }
        Freeness::Undecided { pattern } => {
            CaseResult::undecided(case, format!("budget exhausted searching for {}", forbidden[pattern].0))
        }
    }
}

fn even(lo: usize, hi: usize) -> Vec<usize> {
    (lo..=hi).step_by(2).collect()
}

pub fn suite_identities() -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    for n in even(8, 40) {
        let (mu, rho, s) = (mu_star(n).unwrap(), rho_star(n).unwrap(), star_perm_s(n).unwrap());
        let pi = compose(&mu, &inverse(&rho)).expect("equal sizes");
        cases.push(CaseResult::check(format!("factorization-n{n}"), pi == s, || perm_witness(&pi)));
        cases.push(CaseResult::check(
            format!("convex-n{n}"),
            is_convex(&rho) && is_convex(&mu),
            || Witness::new("permutation", format!("rho {rho}\nmu {mu}")),
        ));
    }
    for n in even(6, 40) {
        let t = star_perm_t(n).unwrap();
        let inv = inverse(&t);
        cases.push(CaseResult::check(format!("involution-n{n}"), inv == t, || perm_witness(&inv)));
    }
    let printed: [(&str, Permutation, &str); 7] = [
        ("t6", star_perm_t(6).unwrap(), "(4,2,6,1,5,3)"),
        ("t8", star_perm_t(8).unwrap(), "(4,2,6,1,8,3,7,5)"),
        ("t10", star_perm_t(10).unwrap(), "(4,2,6,1,8,3,10,5,9,7)"),
        ("s8", star_perm_s(8).unwrap(), "(2,3,5,1,8,4,7,6)"),
        ("s10", star_perm_s(10).unwrap(), "(2,3,5,1,7,4,10,6,9,8)"),
        ("s12", star_perm_s(12).unwrap(), "(2,3,5,1,7,4,9,6,12,8,11,10)"),
        ("rho10", rho_star(10).unwrap(), "(1,2,3,5,7,9,10,8,6,4)"),
    ];
    for (name, p, text) in printed {
        cases.push(CaseResult::check(format!("printed-{name}"), p.to_string() == text, || perm_witness(&p)));
    }
    let mu10 = mu_star(10).unwrap();
    cases.push(CaseResult::check(
        "printed-mu10",
        mu10.to_string() == "(2,3,5,7,10,9,8,6,4,1)",
        || perm_witness(&mu10),
    ));
    let pi10 = compose(&mu10, &inverse(&rho_star(10).unwrap())).unwrap();
    cases.push(CaseResult::check("pi10-at-3", pi10.apply(3) == 5, || perm_witness(&pi10)));
    let g = permutation_graph(&star_perm_t(10).unwrap());
    let nbrs = |v: usize| g.neighbors(v).collect::<Vec<_>>();
    cases.push(CaseResult::check(
        "t10-permutation-graph",
        g.edge_count() == 14 && nbrs(2) == [1, 4] && nbrs(9) == [7, 10],
        || graph_witness(&g),
    ));
    SuiteReport::new("identities", cases, started)
}

fn nested_both_sides(g: &Graph, n: usize) -> bool {
    let left: Vec<usize> = (1..=n).collect();
    let right: Vec<usize> = (n + 1..=2 * n).collect();
    matches!(neighborhoods_nested(g, &left), Ok(Some(_))) && matches!(neighborhoods_nested(g, &right), Ok(Some(_)))
}

pub fn suite_t_free(cfg: &SuiteConfig) -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    for n in even(6, 16) {
        let t = t_graph_star(n).unwrap();
        let v = t.violations();
        cases.push(CaseResult::check(format!("layout-n{n}"), v.is_empty(), || {
            Witness::new("graph", format!("# {}\n{}", v.join("; "), serialize_graph(&t.graph, Some(&t.parts))))
        }));
        let zone_pair = |x: Zone, y: Zone| {
            let mut s = t.zone(x);
            s.extend(t.zone(y));
            induced_subgraph(&t.graph, &s).expect("zone ids in range")
        };
        let (zp, zpp) = (zone_pair(Zone::A, Zone::D), zone_pair(Zone::B, Zone::C));
        cases.push(CaseResult::check(
            format!("chain-zones-n{n}"),
            nested_both_sides(&zp, n) && nested_both_sides(&zpp, n),
            || graph_witness(&t.graph),
        ));
        let comps = connected_components(&t.graph);
        cases.push(CaseResult::check(format!("connected-n{n}"), comps.len() == 1, || {
            graph_witness(&t.graph)
        }));
    }
    let forbidden = [("2P3", two_p3()), ("Sun4", sun4())];
    let ns = even(6, 14);
    cases.extend(cfg.map(&ns, |&n| {
        let t = t_graph_star(n).unwrap();
        freeness_case(format!("free-n{n}"), &t.graph, &forbidden, cfg)
    }));
    SuiteReport::new("t-free", cases, started)
}

/// Families accepted by [`antichain_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    T,
    S,
    H,
    PermT,
    PermS,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Ok(match s {
            "T" | "t" => Family::T,
            "S" | "s" => Family::S,
            "H" | "h" => Family::H,
            "permT" | "perm-t" => Family::PermT,
            "permS" | "perm-s" => Family::PermS,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        })
    }
}

impl Family {
    fn tag(self) -> &'static str {
        match self {
            Family::T => "T",
            Family::S => "S",
            Family::H => "H",
            Family::PermT => "permT",
            Family::PermS => "permS",
        }
    }

    fn graph(self, i: usize) -> Result<Graph> {
        match self {
            Family::T => Ok(t_graph_star(i)?.graph),
            Family::S => Ok(s_graph_star(i)?.graph),
            Family::H => h_antichain(i),
            _ => unreachable!("permutation family"),
        }
    }

    fn perm(self, i: usize) -> Result<Permutation> {
        match self {
            Family::PermT => star_perm_t(i),
            Family::PermS => star_perm_s(i),
            _ => unreachable!("graph family"),
        }
    }
}

/// For each ordered pair `(i, j)` of distinct positions in `indices`,
/// checks that member `i` is not contained in member `j`.
pub fn antichain_check(family: Family, indices: &[usize], cfg: &SuiteConfig) -> Result<SuiteReport> {
    let started = Instant::now();
    let tag = family.tag();
    let pairs: Vec<(usize, usize)> = (0..indices.len())
        .flat_map(|a| (0..indices.len()).filter(move |&b| b != a).map(move |b| (a, b)))
        .map(|(a, b)| (indices[a], indices[b]))
        .collect();
    let cases = match family {
        Family::PermT | Family::PermS => {
            let perms = indices.iter().map(|&i| family.perm(i)).collect::<Result<Vec<_>>>()?;
            let get = |i: usize| &perms[indices.iter().position(|&x| x == i).expect("listed")];
            cfg.map(&pairs, |&(i, j)| {
                let case = format!("{tag}{i}-in-{tag}{j}");
                match find_pattern(get(j), get(i)) {
                    None => CaseResult::pass(case),
                    Some(pos) => {
                        let text = format!(
                            "# {} in {}\n{}",
                            get(i),
                            get(j),
                            pos.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
                        );
                        CaseResult::fail(case, Witness::new("occurrence", text))
                    }
                }
            })
        }
        _ => {
            let graphs = indices.iter().map(|&i| family.graph(i)).collect::<Result<Vec<_>>>()?;
            let get = |i: usize| &graphs[indices.iter().position(|&x| x == i).expect("listed")];
            cfg.map(&pairs, |&(i, j)| {
                let case = format!("{tag}{i}-in-{tag}{j}");
                match find_induced_embedding_with(get(i), get(j), cfg.search()) {
                    SearchOutcome::NotFound => CaseResult::pass(case),
                    SearchOutcome::Found(e) => {
                        let w = embedding_witness(&format!("{tag}{i}"), &format!("{tag}{j}"), &e);
                        CaseResult::fail(case, w)
                    }
                    SearchOutcome::Undecided => CaseResult::undecided(case, "step budget exhausted"),
                }
            })
        }
    };
    Ok(SuiteReport::new(&format!("antichain-{tag}"), cases, started))
}

pub fn suite_t_antichain(cfg: &SuiteConfig) -> SuiteReport {
    let started = Instant::now();
    let (a, b) = cfg.t_pair;
    let parts = vec![
        antichain_check(Family::PermT, &[6, 8, 10, 12], cfg).expect("valid sizes"),
        antichain_check(Family::T, &[a, b], cfg).expect("valid sizes"),
        antichain_check(Family::H, &[1, 2, 3, 4, 5, 6], cfg).expect("valid sizes"),
    ];
    SuiteReport::merge("t-antichain", parts, started)
}

pub fn suite_s_antichain(cfg: &SuiteConfig) -> SuiteReport {
    let started = Instant::now();
    let (a, b) = cfg.s_pair;
    let parts = vec![
        antichain_check(Family::PermS, &[8, 10, 12, 14], cfg).expect("valid sizes"),
        antichain_check(Family::S, &[a, b], cfg).expect("valid sizes"),
    ];
    SuiteReport::merge("s-antichain", parts, started)
}

/// Incomparability edges of zone `B` in the smallest S-graph.
pub const S8_INCOMPARABILITY_EDGES: [(usize, usize); 8] =
    [(1, 8), (2, 8), (3, 8), (3, 7), (4, 7), (4, 5), (4, 6), (5, 6)];

pub fn suite_s_structure(cfg: &SuiteConfig) -> SuiteReport {
    let started = Instant::now();
    let mut cases = Vec::new();
    let forbidden = [("P8", path(8)), ("P~8", p_tilde(8).expect("valid size"))];
    for n in even(8, 16) {
        let s = s_graph_star(n).unwrap();
        let v = s.violations();
        cases.push(CaseResult::check(format!("layout-n{n}"), v.is_empty(), || {
            Witness::new("graph", format!("# {}\n{}", v.join("; "), serialize_graph(&s.graph, Some(&s.parts))))
        }));
        let (oa, ob) = s_graph_order(&s);
        let ok = verify_biconvex_order(&s.graph, &s.parts, &oa, &ob).unwrap_or(false);
        cases.push(CaseResult::check(format!("biconvex-order-n{n}"), ok, || {
            Witness::new("order", format!("{oa:?}\n{ob:?}"))
        }));
    }
    let ns = even(8, 16);
    cases.extend(cfg.map(&ns, |&n| {
        let s = s_graph_star(n).unwrap();
        freeness_case(format!("free-n{n}"), &s.graph, &forbidden, cfg)
    }));
    let c6 = cycle(6);
    let found = find_biconvex_order(&c6, &find_bipartition(&c6).expect("even cycle")).expect("small parts");
    cases.push(CaseResult::check("c6-not-biconvex", found.is_none(), || {
        Witness::new("order", format!("{found:?}"))
    }));
    for n in [8, 10, 12] {
        let s = s_graph_star(n).unwrap();
        let b = incomparability_graph(&s.graph, &s.zone(Zone::B)).expect("zone B independent");
        let ok = are_isomorphic(&b, &permutation_graph(&star_perm_s(n).unwrap()));
        cases.push(CaseResult::check(format!("incomparability-n{n}"), ok, || graph_witness(&b)));
        if n == 8 {
            let expected = Graph::from_edges(8, &S8_INCOMPARABILITY_EDGES).expect("valid edges");
            cases.push(CaseResult::check("incomparability-edges-n8", b == expected, || {
                graph_witness(&b)
            }));
        }
    }
    SuiteReport::new("s-structure", cases, started)
}

fn free_filter(forbidden: Vec<Graph>, budget: Option<u64>) -> impl Fn(&Graph) -> bool + Sync {
    move |g: &Graph| match is_free_with(g, &forbidden, SearchOptions { budget, parallel: false }) {
        Freeness::Free => true,
        Freeness::Contains { .. } => false,
        Freeness::Undecided { .. } => panic!("freeness undecided on a {}-vertex graph", g.n()),
    }
}

/// All simple paths on `k` vertices, each listed once (first end smaller).
pub fn path_subgraphs(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, k: usize, path: &mut Vec<usize>, on: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if path.len() == k {
            if path[0] < path[k - 1] || k == 1 {
                out.push(path.clone());
            }
            return;
        }
        let end = *path.last().expect("nonempty");
        for u in g.neighbors(end) {
            if !on[u] {
                on[u] = true;
                path.push(u);
                grow(g, k, path, on, out);
                path.pop();
                on[u] = false;
            }
        }
    }
    let mut out = Vec::new();
    let mut on = vec![false; g.n() + 1];
    for s in g.vertices() {
        on[s] = true;
        grow(g, k, &mut vec![s], &mut on, &mut out);
        on[s] = false;
    }
    out
}

/// Chords of a path (pairs at index distance at least 2), 1-based indices.
fn chords(g: &Graph, p: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..p.len() {
        for j in i + 2..p.len() {
            if g.has_edge(p[i], p[j]) {
                out.push((i + 1, j + 1));
            }
        }
    }
    out
}

fn level_case<F>(case: String, graphs: &[Graph], cfg: &SuiteConfig, bad: F) -> CaseResult
where
    F: Fn(&Graph) -> Option<Witness> + Sync + Send,
{
    let failures: Vec<Witness> = cfg.map(graphs, |g| bad(g)).into_iter().flatten().collect();
    let detail = format!("{} graphs", graphs.len());
    match failures.into_iter().next() {
        None => CaseResult::pass(case).with_detail(detail),
        Some(w) => CaseResult::fail(case, w).with_detail(detail),
    }
}

pub fn suite_lemma_key(n_max: usize, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if !(9..=12).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("lemma-key needs 9 <= n_max <= 12, got {n_max}")));
    }
    let started = Instant::now();
    let forbidden = vec![path(7), cycle(4)];
    let filter = free_filter(forbidden.clone(), cfg.budget);
    let levels = enumerate_bipartite_upto(n_max, true, Some(&filter as Filter), cfg.parallel)?;
    let mut cases = Vec::new();
    for stream in levels {
        let n = stream.n();
        let graphs: Vec<Graph> = stream.collect();
        if n >= 9 {
            cases.push(level_case(format!("no-p9-n{n}"), &graphs, cfg, |g| {
                has_path_subgraph(g, 9).then(|| graph_witness(g))
            }));
        }
        if n >= 7 {
            cases.push(level_case(format!("p7-chord-n{n}"), &graphs, cfg, |g| {
                path_subgraphs(g, 7).into_iter().find_map(|p| {
                    let c = chords(g, &p);
                    let ok = c == [(1, 6)] || c == [(2, 7)];
                    (!ok).then(|| {
                        Witness::new("path", format!("# chords {c:?}\n# path {p:?}\n{}", serialize_graph(g, None)))
                    })
                })
            }));
        }
    }
    let spot = s123();
    cases.push(CaseResult::check(
        "spot-s123",
        filter(&spot) && !has_path_subgraph(&spot, 9),
        || graph_witness(&spot),
    ));
    let c8 = cycle(8);
    cases.push(CaseResult::check(
        "spot-c8-excluded",
        !filter(&c8) && is_free_with(&c8, &[cycle(4)], cfg.search()).is_free(),
        || graph_witness(&c8),
    ));
    Ok(SuiteReport::new("lemma-key", cases, started))
}

fn is_complete_bipartite(g: &Graph) -> bool {
    match find_bipartition(g) {
        Some(b) => g.edge_count() == b.part_a().len() * b.part_b().len(),
        None => false,
    }
}

pub fn suite_lemma_reduction(n_max: usize, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if !(1..=12).contains(&n_max) {
        return Err(Error::InvalidParameter(format!("lemma-reduction needs n_max <= 12, got {n_max}")));
    }
    let started = Instant::now();
    let filter = free_filter(vec![path(7), sun1()], cfg.budget);
    let levels = enumerate_bipartite_upto(n_max, true, Some(&filter as Filter), cfg.parallel)?;
    let c4 = [cycle(4)];
    let mut cases = Vec::new();
    for stream in levels {
        let n = stream.n();
        let graphs: Vec<Graph> = stream.collect();
        cases.push(level_case(format!("c4-implies-biclique-n{n}"), &graphs, cfg, |g| {
            let has_c4 = !is_free_with(g, &c4, cfg.search()).is_free();
            (has_c4 && !is_complete_bipartite(g)).then(|| graph_witness(g))
        }));
    }
    let k33 = complete_bipartite(3, 3);
    cases.push(CaseResult::check(
        "spot-k33",
        filter(&k33) && is_complete_bipartite(&k33),
        || graph_witness(&k33),
    ));
    let s1 = sun1();
    cases.push(CaseResult::check("spot-sun1-excluded", !filter(&s1), || graph_witness(&s1)));
    Ok(SuiteReport::new("lemma-reduction", cases, started))
}

/// Every permutation of `1..=m` in lexicographic order.
pub fn all_permutations(m: usize) -> Vec<Permutation> {
    let mut cur: Vec<usize> = (1..=m).collect();
    let mut out = vec![Permutation::new(cur.clone()).expect("identity")];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).expect("exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(Permutation::new(cur.clone()).expect("still a permutation"));
    }
}

/// Rows of `H_{k,m}` (1-based) touched by the image of an embedding.
fn rows_used(e: &Embedding, m: usize) -> Vec<usize> {
    let mut rows: Vec<usize> = e.as_slice().iter().map(|&x| (x - 1) / m + 1).collect();
    rows.sort_unstable();
    rows.dedup();
    rows
}

pub fn suite_universality(m_max: usize, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if !(1..=6).contains(&m_max) {
        return Err(Error::InvalidParameter(format!("universality needs 1 <= m_max <= 6, got {m_max}")));
    }
    let started = Instant::now();
    let mut cases = Vec::new();
    let p4 = [path(4)];
    for m in 1..=m_max {
        let grid = universal_grid(m, m).graph;
        let perms = all_permutations(m);
        let bipartite: Vec<(Permutation, Graph)> = perms
            .into_iter()
            .map(|p| {
                let g = permutation_graph(&p);
                (p, g)
            })
            .filter(|(_, g)| find_bipartition(g).is_some())
            .collect();
        let outcomes = cfg.map(&bipartite, |(p, g)| {
            (p.clone(), find_induced_embedding_with(g, &grid, cfg.search()))
        });
        let detail = format!("{} bipartite of {} permutations", bipartite.len(), (1..=m).product::<usize>());
        let first_bad = outcomes.iter().find(|(_, o)| !o.is_found());
        cases.push(match first_bad {
            None => CaseResult::pass(format!("embed-m{m}")).with_detail(detail),
            Some((p, SearchOutcome::Undecided)) => {
                CaseResult::undecided(format!("embed-m{m}"), format!("budget exhausted on {p}"))
            }
            Some((p, _)) => CaseResult::fail(format!("embed-m{m}"), perm_witness(p)).with_detail(detail),
        });

        let h4 = universal_grid(4, m).graph;
        let mut span_bad = None;
        for (p, g) in &bipartite {
            if !(crate::graph::is_connected(g) && is_free_with(g, &p4, cfg.search()).is_free()) {
                continue;
            }
            if let SearchOutcome::Found(e) = find_induced_embedding_with(g, &h4, cfg.search()) {
                let rows = rows_used(&e, m);
                if rows.len() > 4 || rows.last().expect("nonempty") - rows[0] + 1 != rows.len() {
                    span_bad = Some(p.clone());
                }
            } else {
                span_bad = Some(p.clone());
            }
        }
        cases.push(match span_bad {
            None => CaseResult::pass(format!("p4-free-rows-m{m}")),
            Some(p) => CaseResult::fail(format!("p4-free-rows-m{m}"), perm_witness(&p)),
        });

        let (pi, values) = grid_permutation(m, m);
        let pg = permutation_graph(&pi);
        let ok = grid
            .vertices()
            .all(|u| grid.vertices().all(|v| u == v || grid.has_edge(u, v) == pg.has_edge(values[u - 1], values[v - 1])));
        cases.push(CaseResult::check(format!("grid-is-permutation-graph-m{m}"), ok, || {
            perm_witness(&pi)
        }));
    }
    Ok(SuiteReport::new("universality", cases, started))
}

pub fn suite_closure(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let started = Instant::now();
    let forbidden = vec![path(7), s123()];
    let filter = free_filter(forbidden.clone(), cfg.budget);
    let levels = enumerate_bipartite_upto(cfg.closure_n_max, true, Some(&filter as Filter), cfg.parallel)?;
    let mut cases = Vec::new();
    for stream in levels {
        let n = stream.n();
        let graphs: Vec<Graph> = stream.collect();
        cases.push(level_case(format!("decompose-n{n}"), &graphs, cfg, |g| {
            let parts = find_bipartition(g).expect("enumerated graphs are bipartite");
            match decompose(g, &parts) {
                Ok(SearchOutcome::Found(t)) => match recompose(&t) {
                    Ok(back) if back.graph == *g => None,
                    _ => Some(Witness::new("tree", format!("# {}\n{t}", serialize_graph(g, None)))),
                },
                _ => Some(graph_witness(g)),
            }
        }));
    }
    let p7 = path(7);
    let outcome = decompose(&p7, &find_bipartition(&p7).expect("paths are bipartite"))?;
    cases.push(match outcome {
        SearchOutcome::NotFound => CaseResult::pass("p7-not-decomposable"),
        SearchOutcome::Found(t) => CaseResult::fail("p7-not-decomposable", Witness::new("tree", t.to_string())),
        SearchOutcome::Undecided => CaseResult::undecided("p7-not-decomposable", "size guard"),
    });

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let trees: Vec<_> = (0..cfg.random_trees).map(|_| random_tree(&mut rng, cfg.tree_depth)).collect();
    let failures: Vec<Witness> = cfg
        .map(&trees, |t| {
            let g = recompose(t).expect("generated trees are well formed");
            (!filter(&g.graph)).then(|| Witness::new("tree", t.to_string()))
        })
        .into_iter()
        .flatten()
        .collect();
    let detail = format!("{} trees, depth <= {}", trees.len(), cfg.tree_depth);
    cases.push(match failures.into_iter().next() {
        None => CaseResult::pass("random-trees-free").with_detail(detail),
        Some(w) => CaseResult::fail("random-trees-free", w).with_detail(detail),
    });
    Ok(SuiteReport::new("closure", cases, started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::verify_occurrence;

    fn quick() -> SuiteConfig {
        SuiteConfig {
            lemma_key_n_max: 9,
            reduction_n_max: 7,
            closure_n_max: 7,
            universality_m_max: 4,
            random_trees: 20,
            tree_depth: 4,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn fast_suites_pass() {
        for s in ["identities", "t-antichain", "s-antichain", "universality", "closure", "lemma-reduction"] {
            let r = run_suite(s, &quick()).unwrap();
            assert_eq!(r.failed + r.undecided, 0, "{s}: {:?}", r.lines());
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &quick()).is_err());
        assert!("Q".parse::<Family>().is_err());
    }

    #[test]
    fn failing_witnesses_reverify() {
        let cfg = quick();
        let r = antichain_check(Family::H, &[2, 2], &cfg).unwrap();
        assert_eq!(r.failed, 2);
        let h2 = h_antichain(2).unwrap();
        for (_, w) in r.fails() {
            let e = Embedding::from_text(&w.text).unwrap();
            assert!(e.verify(&h2, &h2));
        }
        let r = antichain_check(Family::PermT, &[6, 6], &cfg).unwrap();
        let t6 = star_perm_t(6).unwrap();
        for (_, w) in r.fails() {
            let pos: Vec<usize> = w.text.lines().last().unwrap().split(' ').map(|x| x.parse().unwrap()).collect();
            assert!(verify_occurrence(&t6, &t6, &pos));
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let mut cfg = quick();
        let a = run_suite("closure", &cfg).unwrap();
        cfg.parallel = false;
        let b = run_suite("closure", &cfg).unwrap();
        assert_eq!(a.to_json_without_time(), b.to_json_without_time());
    }

    #[test]
    fn path_subgraph_listing() {
        assert_eq!(path_subgraphs(&path(4), 4), vec![vec![1, 2, 3, 4]]);
        assert_eq!(path_subgraphs(&cycle(4), 4).len(), 4);
        assert_eq!(chords(&cycle(6), &[1, 2, 3, 4, 5, 6]), vec![(1, 6)]);
    }

    #[test]
    fn permutations_listed() {
        assert_eq!(all_permutations(3).len(), 6);
        assert_eq!(all_permutations(4)[1].to_string(), "(1,2,4,3)");
    }
}
