use std::fmt;
use std::str::FromStr;

use rand::Rng;

use super::ops::{disjoint_union, join, k1, skew_join};
use crate::error::{Error, Result};
use crate::graph::{Bigraph, Bipartition, Graph, Side};
use crate::matcher::SearchOutcome;

/// Largest graph [`decompose`] will search.
pub const DECOMPOSE_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Union,
    Join,
    Skew,
}

impl Op {
    fn keyword(self) -> &'static str {
        match self {
            Op::Union => "union",
            Op::Join => "join",
            Op::Skew => "skew",
        }
    }

    fn apply(self, g1: &Bigraph, g2: &Bigraph) -> Bigraph {
        match self {
            Op::Union => disjoint_union(g1, g2),
            Op::Join => join(g1, g2),
            Op::Skew => skew_join(g1, g2),
        }
    }
}

/// A certificate that a bipartite graph is built from single vertices by
/// the three operations. Leaves name the original vertex and its side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecompositionTree {
    Leaf { vertex: usize, side: Side },
    Node {
        op: Op,
        left: Box<DecompositionTree>,
        right: Box<DecompositionTree>,
    },
}

impl DecompositionTree {
    pub fn leaf(vertex: usize, side: Side) -> Self {
        DecompositionTree::Leaf { vertex, side }
    }

    pub fn node(op: Op, left: DecompositionTree, right: DecompositionTree) -> Self {
        DecompositionTree::Node {
            op,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    /// Leaf vertices in left-to-right order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk(&mut |v, _| out.push(v));
        out
    }

    /// Sorted vertices on one side below this node.
    pub fn side_set(&self, side: Side) -> Vec<usize> {
        let mut out = Vec::new();
        self.walk(&mut |v, s| {
            if s == side {
                out.push(v)
            }
        });
        out.sort_unstable();
        out
    }

    fn walk(&self, f: &mut impl FnMut(usize, Side)) {
        match self {
            DecompositionTree::Leaf { vertex, side } => f(*vertex, *side),
            DecompositionTree::Node { left, right, .. } => {
                left.walk(f);
                right.walk(f);
            }
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 1,
            DecompositionTree::Node { left, right, .. } => left.leaf_count() + right.leaf_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecompositionTree::Leaf { .. } => 0,
            DecompositionTree::Node { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }
}

impl fmt::Display for DecompositionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, tag: &str, vs: Vec<usize>| {
            write!(f, "({tag}")?;
            for v in vs {
                write!(f, " {v}")?;
            }
            write!(f, ")")
        };
        match self {
            DecompositionTree::Leaf { vertex, side } => {
                let s = if *side == Side::A { "x" } else { "y" };
                write!(f, "(leaf {vertex} {s})")
            }
            DecompositionTree::Node { op, left, right } => {
                write!(f, "({} ", op.keyword())?;
                list(f, "x", self.side_set(Side::A))?;
                write!(f, " ")?;
                list(f, "y", self.side_set(Side::B))?;
                write!(f, " {left} {right})")
            }
        }
    }
}

#[derive(Debug, PartialEq)]
enum Token {
    Open,
    Close,
    Atom(String),
}

fn tokenize(s: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut atom = String::new();
    let flush = |atom: &mut String, out: &mut Vec<Token>| {
        if !atom.is_empty() {
            out.push(Token::Atom(std::mem::take(atom)));
        }
    };
    for c in s.chars() {
        match c {
            '(' | ')' => {
                flush(&mut atom, &mut out);
                out.push(if c == '(' { Token::Open } else { Token::Close });
            }
            c if c.is_whitespace() => flush(&mut atom, &mut out),
            c => atom.push(c),
        }
    }
    flush(&mut atom, &mut out);
    out
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedTree(msg.into())
}

impl Parser {
    fn next(&mut self) -> Result<&Token> {
        let t = self.tokens.get(self.pos).ok_or_else(|| malformed("unexpected end"))?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        let got = self.next()?;
        if *got != want {
            return Err(malformed(format!("expected {want:?}, found {got:?}")));
        }
        Ok(())
    }

    fn atom(&mut self) -> Result<String> {
        match self.next()? {
            Token::Atom(a) => Ok(a.clone()),
            t => Err(malformed(format!("expected atom, found {t:?}"))),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let a = self.atom()?;
        a.parse().map_err(|_| malformed(format!("bad vertex `{a}`")))
    }

    fn id_list(&mut self, tag: &str) -> Result<Vec<usize>> {
        self.expect(Token::Open)?;
        if self.atom()? != tag {
            return Err(malformed(format!("expected ({tag} ...)")));
        }
        let mut out = Vec::new();
        while self.tokens.get(self.pos) != Some(&Token::Close) {
            out.push(self.number()?);
        }
        self.pos += 1;
        Ok(out)
    }

    fn tree(&mut self) -> Result<DecompositionTree> {
        self.expect(Token::Open)?;
        let head = self.atom()?;
        let tree = if head == "leaf" {
            let vertex = self.number()?;
            let side = match self.atom()?.as_str() {
                "x" => Side::A,
                "y" => Side::B,
                s => return Err(malformed(format!("bad side `{s}`"))),
            };
            DecompositionTree::leaf(vertex, side)
        } else {
            let op = match head.as_str() {
                "union" => Op::Union,
                "join" => Op::Join,
                "skew" => Op::Skew,
                h => return Err(malformed(format!("unknown node `{h}`"))),
            };
            let mut xs = self.id_list("x")?;
            let mut ys = self.id_list("y")?;
            let t = DecompositionTree::node(op, self.tree()?, self.tree()?);
            xs.sort_unstable();
            ys.sort_unstable();
            if xs != t.side_set(Side::A) || ys != t.side_set(Side::B) {
                return Err(malformed(format!("vertex lists of ({head} ...) disagree with its leaves")));
            }
            t
        };
        self.expect(Token::Close)?;
        Ok(tree)
    }
}

impl FromStr for DecompositionTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            tokens: tokenize(s),
            pos: 0,
        };
        let t = p.tree()?;
        if p.pos != p.tokens.len() {
            return Err(malformed("trailing input"));
        }
        Ok(t)
    }
}

/// Replays the operations. Leaves must name exactly `1..=n`.
pub fn recompose(t: &DecompositionTree) -> Result<Bigraph> {
    fn build(t: &DecompositionTree) -> (Bigraph, Vec<usize>) {
        match t {
            DecompositionTree::Leaf { vertex, side } => (k1(*side), vec![*vertex]),
            DecompositionTree::Node { op, left, right } => {
                let (g1, mut ids) = build(left);
                let (g2, ids2) = build(right);
                ids.extend(ids2);
                (op.apply(&g1, &g2), ids)
            }
        }
    }
    let (g, ids) = build(t);
    let n = ids.len();
    let mut seen = vec![false; n + 1];
    for &v in &ids {
        if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
            return Err(malformed(format!("leaves must be exactly 1..={n}")));
        }
    }
    Ok(Bigraph {
        graph: g.graph.relabel(&ids)?,
        parts: g.parts.relabel(&ids),
    })
}

struct Search {
    adj: Vec<u32>,
    a: u32,
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

impl Search {
    fn new(g: &Graph, b: &Bipartition) -> Search {
        let adj = (1..=g.n())
            .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << (u - 1)))
            .collect();
        let a = b.part_a().iter().fold(0u32, |m, &v| m | 1 << (v - 1));
        Search { adj, a }
    }

    fn side(&self, i: usize) -> Side {
        if self.a >> i & 1 == 1 {
            Side::A
        } else {
            Side::B
        }
    }

    fn complement_adj(&self, i: usize) -> u32 {
        let other = if self.a >> i & 1 == 1 { !self.a } else { self.a };
        other & !self.adj[i]
    }

    /// Component containing the lowest vertex of `mask`.
    fn first_component(&self, mask: u32, nbrs: impl Fn(usize) -> u32) -> u32 {
        let mut comp = mask & mask.wrapping_neg();
        let mut frontier = comp;
        while frontier != 0 {
            let reach = bits(frontier).fold(0, |m, i| m | nbrs(i)) & mask & !comp;
            comp |= reach;
            frontier = reach;
        }
        comp
    }

    fn is_skew(&self, s1: u32, s2: u32) -> bool {
        let (y1, y2) = (s1 & !self.a, s2 & !self.a);
        bits(s1 & self.a).all(|i| self.adj[i] & y2 == y2)
            && bits(s2 & self.a).all(|i| self.adj[i] & y1 == 0)
    }

    fn skew_split(&self, mask: u32) -> Option<(u32, u32)> {
        let low = mask & mask.wrapping_neg();
        let rest: Vec<usize> = bits(mask & !low).collect();
        for sub in 0u32..(1 << rest.len()) - 1 {
            let t = low | bits(sub).fold(0, |m, k| m | 1 << rest[k]);
            let u = mask & !t;
            if self.is_skew(t, u) {
                return Some((t, u));
            }
            if self.is_skew(u, t) {
                return Some((u, t));
            }
        }
        None
    }

    /// The class is closed under induced subgraphs, so the operands of any
    /// valid split are members iff the whole graph is. Taking the first
    /// split found is therefore complete and no backtracking is needed.
    fn solve(&self, mask: u32) -> Option<DecompositionTree> {
        if mask.count_ones() == 1 {
            let i = mask.trailing_zeros() as usize;
            return Some(DecompositionTree::leaf(i + 1, self.side(i)));
        }
        let (op, s1, s2) = {
            let c = self.first_component(mask, |i| self.adj[i]);
            if c != mask {
                (Op::Union, c, mask & !c)
            } else {
                let c = self.first_component(mask, |i| self.complement_adj(i));
                if c != mask {
                    (Op::Join, c, mask & !c)
                } else {
                    let (s1, s2) = self.skew_split(mask)?;
                    (Op::Skew, s1, s2)
                }
            }
        };
        Some(DecompositionTree::node(op, self.solve(s1)?, self.solve(s2)?))
    }
}

/// Finds a decomposition over single vertices, trying the given
/// orientation first and then the swapped one. Graphs above
/// [`DECOMPOSE_LIMIT`] vertices are reported undecided.
pub fn decompose(g: &Graph, b: &Bipartition) -> Result<SearchOutcome<DecompositionTree>> {
    b.validate(g)?;
    if g.n() == 0 {
        return Err(Error::InvalidParameter("cannot decompose the empty graph".into()));
    }
    if g.n() > DECOMPOSE_LIMIT {
        return Ok(SearchOutcome::Undecided);
    }
    let full = u32::MAX >> (32 - g.n());
    for parts in [b.clone(), b.swapped()] {
        if let Some(t) = Search::new(g, &parts).solve(full) {
            return Ok(SearchOutcome::Found(t));
        }
    }
    Ok(SearchOutcome::NotFound)
}

/// A random tree with at most `max_depth` operation levels; leaves are
/// numbered `1..` in left-to-right order with uniformly random sides.
pub fn random_tree<R: Rng + ?Sized>(rng: &mut R, max_depth: usize) -> DecompositionTree {
    fn grow<R: Rng + ?Sized>(rng: &mut R, depth: usize, next: &mut usize) -> DecompositionTree {
        if depth == 0 || rng.gen_bool(0.3) {
            *next += 1;
            let side = if rng.gen_bool(0.5) { Side::A } else { Side::B };
            return DecompositionTree::leaf(*next, side);
        }
        let op = [Op::Union, Op::Join, Op::Skew][rng.gen_range(0..3)];
        let left = grow(rng, depth - 1, next);
        let right = grow(rng, depth - 1, next);
        DecompositionTree::node(op, left, right)
    }
    grow(rng, max_depth, &mut 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, cycle, path, s123};
    use crate::graph::find_bipartition;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn decompose_auto(g: &Graph) -> SearchOutcome<DecompositionTree> {
        decompose(g, &find_bipartition(g).unwrap()).unwrap()
    }

    #[test]
    fn single_vertex_is_a_leaf() {
        let t = decompose_auto(&Graph::empty(1)).found().unwrap();
        assert_eq!(t, DecompositionTree::leaf(1, Side::A));
        assert_eq!(recompose(&t).unwrap().graph, Graph::empty(1));
    }

    #[test]
    fn p6_round_trips_and_p7_fails() {
        let p6 = path(6);
        let t = decompose_auto(&p6).found().unwrap();
        assert_eq!(t.leaf_count(), 6);
        let back = recompose(&t).unwrap();
        assert_eq!(back.graph, p6);
        assert_eq!(back.parts, find_bipartition(&p6).unwrap());
        assert_eq!(decompose_auto(&path(7)), SearchOutcome::NotFound);
    }

    #[test]
    fn more_members_and_non_members() {
        for g in [complete_bipartite(3, 4), cycle(4), Graph::empty(5)] {
            let t = decompose_auto(&g).found().unwrap();
            assert_eq!(recompose(&t).unwrap().graph, g);
        }
        assert_eq!(decompose_auto(&s123()), SearchOutcome::NotFound);
        assert_eq!(decompose_auto(&cycle(8)), SearchOutcome::NotFound);
    }

    #[test]
    fn hand_built_skew_is_k2() {
        let t = DecompositionTree::node(
            Op::Skew,
            DecompositionTree::leaf(1, Side::A),
            DecompositionTree::leaf(2, Side::B),
        );
        assert_eq!(recompose(&t).unwrap().graph, path(2));
    }

    #[test]
    fn recompose_rejects_bad_leaves() {
        let dup = DecompositionTree::node(
            Op::Union,
            DecompositionTree::leaf(1, Side::A),
            DecompositionTree::leaf(1, Side::B),
        );
        assert!(matches!(recompose(&dup), Err(Error::MalformedTree(_))));
        let gap = DecompositionTree::leaf(2, Side::A);
        assert!(matches!(recompose(&gap), Err(Error::MalformedTree(_))));
    }

    #[test]
    fn guard_reports_undecided() {
        assert_eq!(decompose_auto(&path(17)), SearchOutcome::Undecided);
    }

    #[test]
    fn sexpr_round_trip() {
        let t = decompose_auto(&path(6)).found().unwrap();
        let text = t.to_string();
        assert!(text.starts_with('('));
        assert_eq!(text.parse::<DecompositionTree>().unwrap(), t);
        let k2 = "(skew (x 1) (y 2) (leaf 1 x) (leaf 2 y))";
        assert_eq!(k2.parse::<DecompositionTree>().unwrap().to_string(), k2);
    }

    #[test]
    fn sexpr_errors() {
        for bad in [
            "(leaf 1 z)",
            "(skew (x 1) (y) (leaf 1 x) (leaf 2 y))",
            "(fork (x 1) (y 2) (leaf 1 x) (leaf 2 y))",
            "(leaf 1 x) extra",
            "(leaf 1",
        ] {
            assert!(bad.parse::<DecompositionTree>().is_err(), "{bad}");
        }
    }

    #[test]
    fn random_trees_decompose_again() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let t = random_tree(&mut rng, 4);
            assert!(t.depth() <= 4);
            let g = recompose(&t).unwrap();
            let again = decompose(&g.graph, &g.parts).unwrap().found().unwrap();
            assert_eq!(recompose(&again).unwrap(), g);
        }
    }
}
