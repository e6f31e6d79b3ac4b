//! Immutable simple graphs on vertex ids `1..=n`, explicit bipartitions and
//! the line-oriented text format shared by every CLI command.
//!
//! Adjacency is one bitset row per vertex. Row `v` has `n + 1` bits and bit
//! `u` is set iff `uv` is an edge, so ids index rows and bits directly and
//! bit 0 is never set.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

/// Incremental edge collector. `Graph` itself is never mutated once built.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            adj: vec![FixedBitSet::with_capacity(n + 1); n + 1],
            labels: None,
        }
    }

    /// Adds `uv`; returns `false` if the edge was already present.
    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let fresh = !self.adj[u].contains(v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    /// Panics on an invalid edge; for generators whose ids are correct by
    /// construction.
    pub fn add_edge(&mut self, u: usize, v: usize) -> &mut Self {
        self.try_add_edge(u, v)
            .unwrap_or_else(|e| panic!("bad edge {u}-{v}: {e}"));
        self
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u <= self.n && v <= self.n && self.adj[u].contains(v)
    }

    pub fn labels(&mut self, labels: Vec<String>) -> &mut Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
            labels: self.labels,
        }
    }

    fn check(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.try_add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && v <= self.n && self.adj[u].contains(v)
    }

    /// Neighborhood of `v` as a bitset indexed by vertex id.
    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v - 1].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    /// Vertex ids carrying exactly `label`.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels
            .as_ref()?
            .iter()
            .position(|l| l == label)
            .map(|i| i + 1)
    }

    /// Renames vertex `v` to `new_id[v - 1]`; `new_id` must be a bijection
    /// onto `1..=n`.
    pub fn relabel(&self, new_id: &[usize]) -> Result<Graph> {
        check_bijection(new_id, self.n)?;
        let mut b = GraphBuilder::new(self.n);
        for (u, v) in self.edges() {
            b.add_edge(new_id[u - 1], new_id[v - 1]);
        }
        if let Some(labels) = &self.labels {
            let mut out = vec![String::new(); self.n];
            for (i, l) in labels.iter().enumerate() {
                out[new_id[i] - 1] = l.clone();
            }
            b.labels(out);
        }
        Ok(b.build())
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Bitset (indexed by id) of the given vertices.
    pub fn vertex_set(&self, vs: &[usize]) -> Result<FixedBitSet> {
        let mut s = FixedBitSet::with_capacity(self.n + 1);
        for &v in vs {
            self.check_vertex(v)?;
            s.insert(v);
        }
        Ok(s)
    }

    pub fn is_independent(&self, vs: &[usize]) -> Result<()> {
        let set = self.vertex_set(vs)?;
        for &v in vs {
            if let Some(u) = self.adj[v].intersection(&set).next() {
                return Err(Error::NotIndependent(v.min(u), v.max(u)));
            }
        }
        Ok(())
    }
}

fn check_bijection(map: &[usize], n: usize) -> Result<()> {
    if map.len() != n {
        return Err(Error::SizeMismatch { left: map.len(), right: n });
    }
    let mut seen = vec![false; n + 1];
    for &x in map {
        if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
            return Err(Error::InvalidParameter(format!(
                "relabeling is not a bijection onto 1..={n}"
            )));
        }
    }
    Ok(())
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// Two disjoint parts covering `1..=n`. Orientation matters: the skew join
/// and several constructions distinguish part A from part B.
#[derive(Clone, PartialEq, Eq)]
pub struct Bipartition {
    n: usize,
    in_a: FixedBitSet,
}

impl Bipartition {
    /// Builds the bipartition whose part A is `part_a`, and checks it
    /// against `g`.
    pub fn new(g: &Graph, part_a: &[usize]) -> Result<Bipartition> {
        let b = Bipartition::from_part_a(g.n(), part_a)?;
        b.validate(g)?;
        Ok(b)
    }

    /// Range-checked but not validated against any graph.
    pub fn from_part_a(n: usize, part_a: &[usize]) -> Result<Bipartition> {
        let mut in_a = FixedBitSet::with_capacity(n + 1);
        for &v in part_a {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            in_a.insert(v);
        }
        Ok(Bipartition { n, in_a })
    }

    pub fn from_sides(sides: &[Side]) -> Bipartition {
        let n = sides.len();
        let mut in_a = FixedBitSet::with_capacity(n + 1);
        for (i, s) in sides.iter().enumerate() {
            if *s == Side::A {
                in_a.insert(i + 1);
            }
        }
        Bipartition { n, in_a }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.n != g.n() {
            return Err(Error::InvalidBipartition(format!(
                "covers {} vertices, graph has {}",
                self.n,
                g.n()
            )));
        }
        for (u, v) in g.edges() {
            if self.side(u) == self.side(v) {
                return Err(Error::InvalidBipartition(format!(
                    "edge {u}-{v} inside part {:?}",
                    self.side(u)
                )));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn side(&self, v: usize) -> Side {
        if self.in_a.contains(v) {
            Side::A
        } else {
            Side::B
        }
    }

    pub fn part(&self, side: Side) -> Vec<usize> {
        (1..=self.n).filter(|&v| self.side(v) == side).collect()
    }

    pub fn part_a(&self) -> Vec<usize> {
        self.part(Side::A)
    }

    pub fn part_b(&self) -> Vec<usize> {
        self.part(Side::B)
    }

    /// Bitset of part A, indexed by id.
    pub fn a_set(&self) -> &FixedBitSet {
        &self.in_a
    }

    pub fn swapped(&self) -> Bipartition {
        let mut in_a = FixedBitSet::with_capacity(self.n + 1);
        for v in 1..=self.n {
            if !self.in_a.contains(v) {
                in_a.insert(v);
            }
        }
        Bipartition { n: self.n, in_a }
    }

    /// Restriction to the sorted vertex list `s`, relabeled `1..=|s|` in the
    /// same way as [`induced_subgraph`].
    pub fn restrict(&self, s: &[usize]) -> Bipartition {
        let sides: Vec<Side> = s.iter().map(|&v| self.side(v)).collect();
        Bipartition::from_sides(&sides)
    }

    pub fn relabel(&self, new_id: &[usize]) -> Bipartition {
        let mut sides = vec![Side::B; self.n];
        for v in 1..=self.n {
            sides[new_id[v - 1] - 1] = self.side(v);
        }
        Bipartition::from_sides(&sides)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bipartition({:?} | {:?})", self.part_a(), self.part_b())
    }
}

/// A graph together with a fixed bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bigraph {
    pub graph: Graph,
    pub parts: Bipartition,
}

impl Bigraph {
    pub fn new(graph: Graph, parts: Bipartition) -> Result<Bigraph> {
        parts.validate(&graph)?;
        Ok(Bigraph { graph, parts })
    }

    /// Uses the 2-coloring from [`find_bipartition`].
    pub fn from_graph(graph: Graph) -> Result<Bigraph> {
        let parts = find_bipartition(&graph)
            .ok_or_else(|| Error::InvalidBipartition("graph has an odd cycle".into()))?;
        Ok(Bigraph { graph, parts })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }
}

fn sorted_unique(g: &Graph, s: &[usize]) -> Result<Vec<usize>> {
    for &v in s {
        g.check_vertex(v)?;
    }
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    Ok(s)
}

/// Subgraph induced by `s`, relabeled `1..=|s|` by ascending original id.
/// Labels are carried over.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<Graph> {
    let s = sorted_unique(g, s)?;
    let mut new_id = vec![0usize; g.n() + 1];
    for (i, &v) in s.iter().enumerate() {
        new_id[v] = i + 1;
    }
    let mut b = GraphBuilder::new(s.len());
    for (i, &v) in s.iter().enumerate() {
        for u in g.neighbors(v) {
            if new_id[u] > i + 1 {
                b.add_edge(i + 1, new_id[u]);
            }
        }
    }
    if let Some(labels) = g.labels() {
        b.labels(s.iter().map(|&v| labels[v - 1].clone()).collect());
    }
    Ok(b.build())
}

/// Complement across the parts only: `xy` (x in A, y in B) is an edge of the
/// result iff it is not an edge of `g`.
pub fn bipartite_complement(g: &Graph, b: &Bipartition) -> Result<Graph> {
    b.validate(g)?;
    let part_b = b.part_b();
    let mut out = GraphBuilder::new(g.n());
    for x in b.part_a() {
        for &y in &part_b {
            if !g.has_edge(x, y) {
                out.add_edge(x, y);
            }
        }
    }
    if let Some(labels) = g.labels() {
        out.labels(labels.to_vec());
    }
    Ok(out.build())
}

/// BFS 2-coloring component by component; the lowest id of each component
/// goes to part A. `None` iff `g` has an odd cycle.
pub fn find_bipartition(g: &Graph) -> Option<Bipartition> {
    let mut side: Vec<Option<Side>> = vec![None; g.n() + 1];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(Side::A);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for u in g.neighbors(v) {
                match side[u] {
                    None => {
                        side[u] = Some(s.other());
                        queue.push_back(u);
                    }
                    Some(t) if t == s => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let sides: Vec<Side> = side[1..].iter().map(|s| s.unwrap()).collect();
    Some(Bipartition::from_sides(&sides))
}

/// Components as sorted id lists, ordered by their minimum element.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.n() + 1];
    let mut out = Vec::new();
    for root in g.vertices() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut i = 0;
        while i < comp.len() {
            let v = comp[i];
            i += 1;
            for u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Parses the text graph format:
///
/// ```text
/// # comment
/// p <n>
/// b <id> <id> ...     (optional, lists part A)
/// e <u> <v>           (1 <= u < v <= n)
/// ```
pub fn parse_graph(text: &str) -> Result<(Graph, Option<Bipartition>)> {
    let err = |line: usize, msg: String| Error::Parse { line, msg };
    let mut builder: Option<GraphBuilder> = None;
    let mut part_a: Option<(usize, Vec<usize>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let tag = toks.next().unwrap();
        let nums: Vec<usize> = toks
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| err(line_no, format!("bad integer `{t}`")))
            })
            .collect::<Result<_>>()?;
        match tag {
            "p" => {
                if builder.is_some() {
                    return Err(err(line_no, "duplicate header".into()));
                }
                if nums.len() != 1 {
                    return Err(err(line_no, "header must be `p <n>`".into()));
                }
                builder = Some(GraphBuilder::new(nums[0]));
            }
            "b" => {
                let n = builder
                    .as_ref()
                    .ok_or_else(|| err(line_no, "`b` before header".into()))?
                    .n;
                if part_a.is_some() {
                    return Err(err(line_no, "duplicate `b` line".into()));
                }
                if let Some(&v) = nums.iter().find(|&&v| v == 0 || v > n) {
                    return Err(err(line_no, format!("vertex {v} out of range 1..={n}")));
                }
                part_a = Some((line_no, nums));
            }
            "e" => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| err(line_no, "edge before header".into()))?;
                if nums.len() != 2 {
                    return Err(err(line_no, "edge must be `e <u> <v>`".into()));
                }
                let (u, v) = (nums[0], nums[1]);
                if u >= v {
                    return Err(err(line_no, format!("edge {u} {v} must have u < v")));
                }
                match b.try_add_edge(u, v) {
                    Ok(true) => {}
                    Ok(false) => return Err(err(line_no, format!("duplicate edge {u} {v}"))),
                    Err(e) => return Err(err(line_no, e.to_string())),
                }
            }
            other => return Err(err(line_no, format!("unknown line tag `{other}`"))),
        }
    }

    let g = builder
        .ok_or_else(|| err(text.lines().count().max(1), "missing `p <n>` header".into()))?
        .build();
    let parts = match part_a {
        None => None,
        Some((line_no, a)) => {
            let b = Bipartition::from_part_a(g.n(), &a)?;
            b.validate(&g).map_err(|e| err(line_no, e.to_string()))?;
            Some(b)
        }
    };
    Ok((g, parts))
}

pub fn serialize_graph(g: &Graph, parts: Option<&Bipartition>) -> String {
    let mut out = format!("p {}\n", g.n());
    if let Some(b) = parts {
        out.push('b');
        for v in b.part_a() {
            out.push_str(&format!(" {v}"));
        }
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
