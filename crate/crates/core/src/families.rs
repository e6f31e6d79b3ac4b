//! Constructors for every concrete graph family: the four-zone T-graphs,
//! the three-zone S-graphs, the universal grid and the small named graphs.
//!
//! Zoned graphs number their vertices zone by zone (A, B, C, D), index
//! ascending inside a zone, and label them `a1`, `b3`, ... Grid vertex
//! `v(i,j)` has id `(i-1)*m + j`.

use crate::error::{Error, Result};
use crate::graph::{bipartite_complement, find_bipartition, Bigraph, Bipartition, Graph, GraphBuilder};
use crate::perm::{
    inverse, permutation_graph, star_perm_s, star_perm_t, star_witness, verify_biconvex_witness,
    BiconvexWitness, Permutation,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Zone {
    A,
    B,
    C,
    D,
}

impl Zone {
    fn offset(self) -> usize {
        match self {
            Zone::A => 0,
            Zone::B => 1,
            Zone::C => 2,
            Zone::D => 3,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Zone::A => 'a',
            Zone::B => 'b',
            Zone::C => 'c',
            Zone::D => 'd',
        }
    }
}

fn zone_labels(zones: &[Zone], n: usize) -> Vec<String> {
    zones
        .iter()
        .flat_map(|z| (1..=n).map(move |i| format!("{}{}", z.letter(), i)))
        .collect()
}

/// `T_π`: parts `A ∪ C` and `B ∪ D`; `a_i b_π(i)` is a perfect matching,
/// `C ∪ D` is a biclique, `N(a_i) ∩ D = {d_1..d_i}` and
/// `N(b_i) ∩ C = {c_1..c_i}`.
#[derive(Clone, Debug)]
pub struct TGraphLayout {
    pub graph: Graph,
    pub parts: Bipartition,
    pub perm: Permutation,
}

impl TGraphLayout {
    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn vertex(&self, zone: Zone, i: usize) -> usize {
        assert!((1..=self.size()).contains(&i));
        zone.offset() * self.size() + i
    }

    pub fn zone_of(&self, v: usize) -> (Zone, usize) {
        let n = self.size();
        let z = [Zone::A, Zone::B, Zone::C, Zone::D][(v - 1) / n];
        (z, (v - 1) % n + 1)
    }

    pub fn zone(&self, zone: Zone) -> Vec<usize> {
        (1..=self.size()).map(|i| self.vertex(zone, i)).collect()
    }

    pub fn bigraph(&self) -> Bigraph {
        Bigraph {
            graph: self.graph.clone(),
            parts: self.parts.clone(),
        }
    }

    /// Scans the four defining properties; returns one message per
    /// violation.
    pub fn violations(&self) -> Vec<String> {
        let n = self.size();
        let g = &self.graph;
        let mut out = Vec::new();
        for z in [Zone::A, Zone::B, Zone::C, Zone::D] {
            if let Err(e) = g.is_independent(&self.zone(z)) {
                out.push(format!("zone {z:?} not independent: {e}"));
            }
        }
        for i in 1..=n {
            let a = self.vertex(Zone::A, i);
            let in_b: Vec<usize> = g.neighbors(a).filter(|&v| self.zone_of(v).0 == Zone::B).collect();
            if in_b != [self.vertex(Zone::B, self.perm.apply(i))] {
                out.push(format!("a{i} matched to {in_b:?}"));
            }
            let in_d: Vec<usize> = g.neighbors(a).filter(|&v| self.zone_of(v).0 == Zone::D).collect();
            if in_d != (1..=i).map(|j| self.vertex(Zone::D, j)).collect::<Vec<_>>() {
                out.push(format!("a{i} has D-neighbors {in_d:?}"));
            }
            let b = self.vertex(Zone::B, i);
            let in_a = g.neighbors(b).filter(|&v| self.zone_of(v).0 == Zone::A).count();
            if in_a != 1 {
                out.push(format!("b{i} has {in_a} A-neighbors"));
            }
            let in_c: Vec<usize> = g.neighbors(b).filter(|&v| self.zone_of(v).0 == Zone::C).collect();
            if in_c != (1..=i).map(|j| self.vertex(Zone::C, j)).collect::<Vec<_>>() {
                out.push(format!("b{i} has C-neighbors {in_c:?}"));
            }
            for j in 1..=n {
                if !g.has_edge(self.vertex(Zone::C, i), self.vertex(Zone::D, j)) {
                    out.push(format!("c{i}d{j} missing"));
                }
            }
        }
        for (u, v) in g.edges() {
            let pair = (self.zone_of(u).0, self.zone_of(v).0);
            if matches!(pair, (Zone::A, Zone::C) | (Zone::B, Zone::D)) {
                out.push(format!("edge {u}-{v} inside a part"));
            }
        }
        out
    }
}

pub fn t_graph(p: &Permutation) -> TGraphLayout {
    let n = p.len();
    let id = |z: Zone, i: usize| z.offset() * n + i;
    let mut b = GraphBuilder::new(4 * n);
    for i in 1..=n {
        b.add_edge(id(Zone::A, i), id(Zone::B, p.apply(i)));
        for j in 1..=n {
            b.add_edge(id(Zone::C, i), id(Zone::D, j));
        }
        for j in 1..=i {
            b.add_edge(id(Zone::A, i), id(Zone::D, j));
            b.add_edge(id(Zone::B, i), id(Zone::C, j));
        }
    }
    b.labels(zone_labels(&[Zone::A, Zone::B, Zone::C, Zone::D], n));
    let graph = b.build();
    let part_a: Vec<usize> = (1..=n).chain(2 * n + 1..=3 * n).collect();
    let parts = Bipartition::new(&graph, &part_a).expect("T-graph parts are independent");
    TGraphLayout {
        graph,
        parts,
        perm: p.clone(),
    }
}

pub fn t_graph_star(n: usize) -> Result<TGraphLayout> {
    Ok(t_graph(&star_perm_t(n)?))
}

/// `S_π[μ,ρ]`: parts `A ∪ C` and `B`, with `N(b_i) ∩ A = {a_1..a_ρ(i)}`
/// and `N(b_i) ∩ C = {c_1..c_μ(i)}`.
#[derive(Clone, Debug)]
pub struct SGraphLayout {
    pub graph: Graph,
    pub parts: Bipartition,
    pub perm: Permutation,
    pub witness: BiconvexWitness,
}

impl SGraphLayout {
    pub fn size(&self) -> usize {
        self.perm.len()
    }

    pub fn vertex(&self, zone: Zone, i: usize) -> usize {
        assert!(zone != Zone::D && (1..=self.size()).contains(&i));
        zone.offset() * self.size() + i
    }

    pub fn zone(&self, zone: Zone) -> Vec<usize> {
        (1..=self.size()).map(|i| self.vertex(zone, i)).collect()
    }

    pub fn zone_of(&self, v: usize) -> (Zone, usize) {
        let n = self.size();
        let z = [Zone::A, Zone::B, Zone::C][(v - 1) / n];
        (z, (v - 1) % n + 1)
    }

    pub fn bigraph(&self) -> Bigraph {
        Bigraph {
            graph: self.graph.clone(),
            parts: self.parts.clone(),
        }
    }

    /// Checks the defining neighborhoods of `B` and the derived ones of
    /// `A` and `C` (`N(a_i) = {b_j : ρ(j) >= i}`, likewise for `μ`).
    pub fn violations(&self) -> Vec<String> {
        let n = self.size();
        let g = &self.graph;
        let (rho, mu) = (&self.witness.rho, &self.witness.mu);
        let mut out = Vec::new();
        for z in [Zone::A, Zone::B, Zone::C] {
            if let Err(e) = g.is_independent(&self.zone(z)) {
                out.push(format!("zone {z:?} not independent: {e}"));
            }
        }
        let zone_nbrs = |v: usize, z: Zone| -> Vec<usize> {
            g.neighbors(v).filter(|&u| self.zone_of(u).0 == z).collect()
        };
        let prefix = |z: Zone, k: usize| (1..=k).map(|j| self.vertex(z, j)).collect::<Vec<_>>();
        let (rho_inv, mu_inv) = (inverse(rho), inverse(mu));
        for i in 1..=n {
            let b = self.vertex(Zone::B, i);
            if zone_nbrs(b, Zone::A) != prefix(Zone::A, rho.apply(i)) {
                out.push(format!("b{i} A-neighborhood"));
            }
            if zone_nbrs(b, Zone::C) != prefix(Zone::C, mu.apply(i)) {
                out.push(format!("b{i} C-neighborhood"));
            }
            // N(a_i) is the B-image of positions rho⁻¹(i), ..., rho⁻¹(n).
            for (z, sigma_inv, sigma) in [(Zone::A, &rho_inv, rho), (Zone::C, &mu_inv, mu)] {
                let mut expect: Vec<usize> = (i..=n)
                    .map(|v| self.vertex(Zone::B, sigma_inv.apply(v)))
                    .collect();
                expect.sort_unstable();
                let got = zone_nbrs(self.vertex(z, i), Zone::B);
                let by_value: Vec<usize> = (1..=n)
                    .filter(|&j| sigma.apply(j) >= i)
                    .map(|j| self.vertex(Zone::B, j))
                    .collect();
                if got != expect || got != by_value {
                    out.push(format!("{}{i} B-neighborhood", z.letter()));
                }
            }
        }
        out
    }
}

pub fn s_graph(p: &Permutation, w: &BiconvexWitness) -> Result<SGraphLayout> {
    if !verify_biconvex_witness(p, w) {
        return Err(Error::WitnessRejected);
    }
    let n = p.len();
    let mut b = GraphBuilder::new(3 * n);
    for i in 1..=n {
        let bi = n + i;
        for j in 1..=w.rho.apply(i) {
            b.add_edge(bi, j);
        }
        for j in 1..=w.mu.apply(i) {
            b.add_edge(bi, 2 * n + j);
        }
    }
    b.labels(zone_labels(&[Zone::A, Zone::B, Zone::C], n));
    let graph = b.build();
    let part_a: Vec<usize> = (1..=n).chain(2 * n + 1..=3 * n).collect();
    let parts = Bipartition::new(&graph, &part_a).expect("S-graph parts are independent");
    Ok(SGraphLayout {
        graph,
        parts,
        perm: p.clone(),
        witness: w.clone(),
    })
}

/// `S` built on the named biconvex family with its convex factorization.
pub fn s_graph_star(n: usize) -> Result<SGraphLayout> {
    s_graph(&star_perm_s(n)?, &star_witness(n)?)
}

/// `H_{k,m}`: rows `V_1..V_k` of `m` vertices; `v(i,j)` is adjacent to
/// `v(i+1,1..=j)`. Parts are odd rows versus even rows.
pub fn universal_grid(k: usize, m: usize) -> Bigraph {
    assert!(k >= 1 && m >= 1, "grid needs at least one row and column");
    let id = |i: usize, j: usize| (i - 1) * m + j;
    let mut b = GraphBuilder::new(k * m);
    for i in 1..k {
        for j in 1..=m {
            for l in 1..=j {
                b.add_edge(id(i, j), id(i + 1, l));
            }
        }
    }
    b.labels(
        (1..=k)
            .flat_map(|i| (1..=m).map(move |j| format!("v{i},{j}")))
            .collect(),
    );
    let graph = b.build();
    let odd_rows: Vec<usize> = (1..=k)
        .step_by(2)
        .flat_map(|i| (1..=m).map(move |j| id(i, j)))
        .collect();
    let parts = Bipartition::new(&graph, &odd_rows).expect("rows alternate sides");
    Bigraph { graph, parts }
}

/// A permutation whose permutation graph is `H_{k,m}`, with the vertex
/// correspondence: `values[id - 1]` is the value playing grid vertex `id`.
///
/// Odd-row vertices form one increasing chain, ordered row by row
/// (1, 3, 5, ...) and by column inside a row. An even-row vertex `v(i,j)`
/// is adjacent exactly to the chain interval from `v(i-1,j)` to
/// `v(i+1,j)` (or to the end of row `i-1` when `i = k`), so it becomes a
/// point above the diagonal spanning that interval. Interval endpoints
/// increase together, so even-row points never cross each other.
pub fn grid_permutation(k: usize, m: usize) -> (Permutation, Vec<usize>) {
    assert!(k >= 1 && m >= 1);
    let id = |i: usize, j: usize| (i - 1) * m + j;
    let mut chain_index = vec![0usize; k * m + 1];
    let mut t = 0;
    for i in (1..=k).step_by(2) {
        for j in 1..=m {
            t += 1;
            chain_index[id(i, j)] = t;
        }
    }
    // (x, y, id) with x and y in a common integer scale.
    let mut points: Vec<(usize, usize, usize)> = Vec::with_capacity(k * m);
    for i in 1..=k {
        for j in 1..=m {
            let v = id(i, j);
            if i % 2 == 1 {
                let c = 4 * chain_index[v];
                points.push((c, c, v));
            } else {
                let lo = chain_index[id(i - 1, j)];
                let hi = if i < k { chain_index[id(i + 1, j)] } else { chain_index[id(i - 1, m)] };
                // Equal right ends (last row) are broken by x below.
                points.push((4 * lo - 2, 4 * hi + 1, v));
            }
        }
    }
    let n = k * m;
    let mut by_x: Vec<usize> = (0..n).collect();
    by_x.sort_by_key(|&p| (points[p].0, points[p].2));
    let mut by_y: Vec<usize> = (0..n).collect();
    by_y.sort_by_key(|&p| (points[p].1, points[p].0));
    let mut value_of = vec![0usize; n];
    for (rank, &p) in by_y.iter().enumerate() {
        value_of[p] = rank + 1;
    }
    let oneline: Vec<usize> = by_x.iter().map(|&p| value_of[p]).collect();
    let mut values = vec![0usize; n];
    for (p, &(_, _, v)) in points.iter().enumerate() {
        values[v - 1] = value_of[p];
    }
    (
        Permutation::new(oneline).expect("ranks form a permutation"),
        values,
    )
}

pub fn path(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v, v + 1);
    }
    b.build()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.add_edge(v, v + 1);
    }
    b.add_edge(n, 1);
    b.build()
}

pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 1..=n {
        for v in (u + 1)..=n {
            b.add_edge(u, v);
        }
    }
    b.build()
}

/// Parts `1..=a` and `a+1..=a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = GraphBuilder::new(a + b);
    for u in 1..=a {
        for v in (a + 1)..=(a + b) {
            g.add_edge(u, v);
        }
    }
    g.build()
}

/// Two disjoint copies of `P3`: `1-2-3` and `4-5-6`.
pub fn two_p3() -> Graph {
    Graph::from_edges(6, &[(1, 2), (2, 3), (4, 5), (5, 6)]).unwrap()
}

/// The 4-cycle `1-2-3-4` with pendant `4 + i` on cycle vertex `i`.
pub fn sun4() -> Graph {
    Graph::from_edges(
        8,
        &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 6), (3, 7), (4, 8)],
    )
    .unwrap()
}

/// The 4-cycle `1-2-3-4` with pendant 5 on vertex 1.
pub fn sun1() -> Graph {
    Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5)]).unwrap()
}

/// Spider with center 1 and legs `1-2`, `1-3-4`, `1-5-6-7`.
pub fn s123() -> Graph {
    Graph::from_edges(7, &[(1, 2), (1, 3), (3, 4), (1, 5), (5, 6), (6, 7)]).unwrap()
}

/// `H_i`: a spine `1..=i+1` of `i` edges, with pendants `i+2`, `i+3` on
/// vertex 1 and `i+4`, `i+5` on vertex `i+1`.
pub fn h_antichain(i: usize) -> Result<Graph> {
    if i == 0 {
        return Err(Error::InvalidParameter("H_i needs i >= 1".into()));
    }
    let mut b = GraphBuilder::new(i + 5);
    for v in 1..=i {
        b.add_edge(v, v + 1);
    }
    b.add_edge(1, i + 2)
        .add_edge(1, i + 3)
        .add_edge(i + 1, i + 4)
        .add_edge(i + 1, i + 5);
    Ok(b.build())
}

/// Bipartite complement of `P_k` with parts odd / even positions.
pub fn p_tilde(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidParameter("p-tilde needs k >= 1".into()));
    }
    let p = path(k);
    let parts = find_bipartition(&p).expect("paths are bipartite");
    bipartite_complement(&p, &parts)
}

/// Builds a family by its command-line key. Every result carries a
/// bipartition when the graph is bipartite.
pub fn by_key(family: &str, params: &[String]) -> Result<(Graph, Option<Bipartition>)> {
    let num = |i: usize| -> Result<usize> {
        params
            .get(i)
            .ok_or_else(|| Error::InvalidParameter(format!("`{family}` needs parameter {}", i + 1)))?
            .parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad number `{}`", params[i])))
    };
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            Err(Error::InvalidParameter(format!(
                "`{family}` takes {k} parameter(s), got {}",
                params.len()
            )))
        } else {
            Ok(())
        }
    };
    let plain = |g: Graph| {
        let b = find_bipartition(&g);
        (g, b)
    };
    Ok(match family {
        "path" => {
            want(1)?;
            plain(path(num(0)?))
        }
        "cycle" => {
            want(1)?;
            let n = num(0)?;
            if n < 3 {
                return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
            }
            plain(cycle(n))
        }
        "complete" => {
            want(1)?;
            plain(complete(num(0)?))
        }
        "kab" => {
            want(2)?;
            let (a, b) = (num(0)?, num(1)?);
            let g = complete_bipartite(a, b);
            let parts = Bipartition::new(&g, &(1..=a).collect::<Vec<_>>())?;
            (g, Some(parts))
        }
        "sun4" => {
            want(0)?;
            plain(sun4())
        }
        "sun1" => {
            want(0)?;
            plain(sun1())
        }
        "s123" => {
            want(0)?;
            plain(s123())
        }
        "two-p3" => {
            want(0)?;
            plain(two_p3())
        }
        "h" => {
            want(1)?;
            plain(h_antichain(num(0)?)?)
        }
        "p-tilde" => {
            want(1)?;
            plain(p_tilde(num(0)?)?)
        }
        "t-graph" => {
            want(1)?;
            let t = t_graph_star(num(0)?)?;
            (t.graph, Some(t.parts))
        }
        "s-graph" => {
            want(1)?;
            let s = s_graph_star(num(0)?)?;
            (s.graph, Some(s.parts))
        }
        "grid" => {
            want(2)?;
            let (k, m) = (num(0)?, num(1)?);
            if k == 0 || m == 0 {
                return Err(Error::InvalidParameter("grid needs k, m >= 1".into()));
            }
            let h = universal_grid(k, m);
            (h.graph, Some(h.parts))
        }
        "perm-graph" => {
            want(1)?;
            let p: Permutation = params[0].parse()?;
            plain(permutation_graph(&p))
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcher::{are_isomorphic, find_induced_embedding};
    use crate::perm::{mu_star, rho_star};

    #[test]
    fn t_graph_counts() {
        let t = t_graph_star(6).unwrap();
        assert_eq!(t.graph.n(), 24);
        assert_eq!(t.graph.edge_count(), 84);
        for i in 1..=6 {
            assert_eq!(t.graph.degree(t.vertex(Zone::A, i)), i + 1);
        }
        assert!(t.graph.is_independent(&t.zone(Zone::A)).is_ok());
        assert!(t.violations().is_empty(), "{:?}", t.violations());
        assert_eq!(t.graph.label(t.vertex(Zone::D, 1)), Some("d1"));
    }

    #[test]
    fn s_graph_counts() {
        let s = s_graph_star(8).unwrap();
        assert_eq!(s.graph.n(), 24);
        assert_eq!(s.graph.edge_count(), 72);
        let (rho, mu) = (rho_star(8).unwrap(), mu_star(8).unwrap());
        for i in 1..=8 {
            assert_eq!(s.graph.degree(s.vertex(Zone::B, i)), rho.apply(i) + mu.apply(i));
        }
        assert_eq!(s.graph.degree(s.vertex(Zone::B, 1)), 3);
        assert!(s.violations().is_empty(), "{:?}", s.violations());
    }

    #[test]
    fn s_graph_rejects_bad_witness() {
        let p = star_perm_s(8).unwrap();
        let w = BiconvexWitness {
            mu: rho_star(8).unwrap(),
            rho: mu_star(8).unwrap(),
        };
        assert_eq!(s_graph(&p, &w).unwrap_err(), Error::WitnessRejected);
    }

    #[test]
    fn grid_examples() {
        let h = universal_grid(5, 5);
        assert_eq!((h.graph.n(), h.graph.edge_count()), (25, 60));
        assert_eq!(universal_grid(1, 4).graph.edge_count(), 0);
        let h22 = universal_grid(2, 2).graph;
        // v11-v21, v12-v21, v12-v22
        assert_eq!(h22, Graph::from_edges(4, &[(1, 3), (2, 3), (2, 4)]).unwrap());
        assert!(are_isomorphic(&h22, &path(4)));
    }

    #[test]
    fn grid_permutation_realizes_grid() {
        for k in 1..=6 {
            for m in 1..=6 {
                let (p, values) = grid_permutation(k, m);
                let h = universal_grid(k, m).graph;
                let g = permutation_graph(&p);
                for u in 1..=k * m {
                    for v in (u + 1)..=k * m {
                        assert_eq!(
                            h.has_edge(u, v),
                            g.has_edge(values[u - 1], values[v - 1]),
                            "k={k} m={m} {u}-{v}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn named_graphs() {
        let s = sun4();
        assert_eq!((s.n(), s.edge_count()), (8, 8));
        let s1 = sun1();
        assert_eq!((s1.n(), s1.edge_count()), (5, 5));
        assert!(find_induced_embedding(&s1, &s).is_some());
        let mut degrees: Vec<usize> = s123().vertices().map(|v| s123().degree(v)).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![3, 2, 2, 2, 1, 1, 1]);
        for i in 1..=5 {
            let h = h_antichain(i).unwrap();
            assert_eq!((h.n(), h.edge_count()), (i + 5, i + 4));
        }
        assert!(h_antichain(0).is_err());
        assert!(are_isomorphic(&p_tilde(7).unwrap(), &path(7)));
        assert_eq!(p_tilde(8).unwrap().edge_count(), 9);
    }

    #[test]
    fn keys() {
        let (g, b) = by_key("t-graph", &["6".into()]).unwrap();
        assert_eq!(g.n(), 24);
        assert!(b.is_some());
        let (g, _) = by_key("perm-graph", &["(2,1)".into()]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(by_key("nope", &[]), Err(Error::UnknownFamily(_))));
        assert!(by_key("path", &[]).is_err());
        assert!(by_key("cycle", &["2".into()]).is_err());
        let (_, b) = by_key("cycle", &["5".into()]).unwrap();
        assert!(b.is_none());
    }
}
