use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// How edges between two parts `V_i`, `V_j` are read off the order `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decoder {
    /// `u ∈ V_i`, `v ∈ V_j` adjacent iff `u` precedes `v`.
    Forward,
    /// Adjacent iff `v` precedes `u`.
    Backward,
    Complete,
    Empty,
}

impl Decoder {
    pub fn symbol(self) -> char {
        match self {
            Decoder::Forward => 'F',
            Decoder::Backward => 'B',
            Decoder::Complete => 'C',
            Decoder::Empty => 'E',
        }
    }

    pub fn from_symbol(c: char) -> Option<Decoder> {
        Some(match c {
            'F' => Decoder::Forward,
            'B' => Decoder::Backward,
            'C' => Decoder::Complete,
            'E' => Decoder::Empty,
            _ => return None,
        })
    }

    /// The same relation read from the other part's side.
    pub fn transposed(self) -> Decoder {
        match self {
            Decoder::Forward => Decoder::Backward,
            Decoder::Backward => Decoder::Forward,
            d => d,
        }
    }

    fn adjacent(self, u_first: bool) -> bool {
        match self {
            Decoder::Forward => u_first,
            Decoder::Backward => !u_first,
            Decoder::Complete => true,
            Decoder::Empty => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartKind {
    Clique,
    Independent,
}

/// Parts `V_1..V_p`, a linear order on all vertices and a `p×p` decoder
/// table. Diagonal decoder entries are ignored; `kinds` fixes each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterRepresentation {
    pub parts: Vec<Vec<usize>>,
    pub kinds: Vec<PartKind>,
    pub order: Vec<usize>,
    pub decoder: Vec<Vec<Decoder>>,
}

struct Indexed {
    n: usize,
    part_of: Vec<usize>,
    rank: Vec<usize>,
}

impl LetterRepresentation {
    pub fn n(&self) -> usize {
        self.order.len()
    }

    fn index(&self) -> Result<Indexed> {
        let bad = |m: String| Error::InvalidParameter(format!("letter representation: {m}"));
        let n = self.order.len();
        let p = self.parts.len();
        if self.kinds.len() != p || self.decoder.len() != p || self.decoder.iter().any(|r| r.len() != p) {
            return Err(bad("table sizes disagree with the number of parts".into()));
        }
        let mut part_of = vec![usize::MAX; n + 1];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v == 0 || v > n || part_of[v] != usize::MAX {
                    return Err(bad(format!("vertex {v} misplaced in parts")));
                }
                part_of[v] = i;
            }
        }
        if part_of[1..].contains(&usize::MAX) {
            return Err(bad("parts do not cover every vertex".into()));
        }
        let mut rank = vec![usize::MAX; n + 1];
        for (r, &v) in self.order.iter().enumerate() {
            if v == 0 || v > n || rank[v] != usize::MAX {
                return Err(bad(format!("vertex {v} misplaced in order")));
            }
            rank[v] = r;
        }
        for i in 0..p {
            for j in 0..p {
                if i != j && self.decoder[i][j] != self.decoder[j][i].transposed() {
                    return Err(bad(format!("decoder entries ({},{}) and ({},{}) disagree", i + 1, j + 1, j + 1, i + 1)));
                }
            }
        }
        Ok(Indexed { n, part_of, rank })
    }

    /// Whether `u`, `v` are adjacent in the represented graph.
    fn prescribed(&self, ix: &Indexed, u: usize, v: usize) -> bool {
        let (i, j) = (ix.part_of[u], ix.part_of[v]);
        if i == j {
            return self.kinds[i] == PartKind::Clique;
        }
        self.decoder[i][j].adjacent(ix.rank[u] < ix.rank[v])
    }
}

/// The grid with part `i` = row `i` and `L` listing the columns left to
/// right, each from the highest row index down to row 1. Rows `i+1` and
/// `i` then read Forward: `v(i+1,j')` precedes `v(i,j)` iff `j' <= j`.
pub fn letter_representation_grid(k: usize, m: usize) -> LetterRepresentation {
    let id = |i: usize, j: usize| (i - 1) * m + j;
    let parts = (1..=k).map(|i| (1..=m).map(|j| id(i, j)).collect()).collect();
    let order = (1..=m).flat_map(|j| (1..=k).rev().map(move |i| id(i, j))).collect();
    let decoder = (1..=k)
        .map(|i| {
            (1..=k)
                .map(|j| match i.abs_diff(j) {
                    1 if i > j => Decoder::Forward,
                    1 => Decoder::Backward,
                    _ => Decoder::Empty,
                })
                .collect()
        })
        .collect();
    LetterRepresentation {
        parts,
        kinds: vec![PartKind::Independent; k],
        order,
        decoder,
    }
}

pub fn decode_letter(rep: &LetterRepresentation) -> Result<Graph> {
    let ix = rep.index()?;
    let mut b = GraphBuilder::new(ix.n);
    for u in 1..=ix.n {
        for v in u + 1..=ix.n {
            if rep.prescribed(&ix, u, v) {
                b.add_edge(u, v);
            }
        }
    }
    Ok(b.build())
}

/// Checks each part is a clique or independent set as flagged and that
/// every cross-part pair agrees with its decoder entry. A malformed
/// representation or a size mismatch verifies as `false`.
pub fn verify_letter(rep: &LetterRepresentation, g: &Graph) -> bool {
    let Ok(ix) = rep.index() else { return false };
    ix.n == g.n()
        && (1..=ix.n).all(|u| (u + 1..=ix.n).all(|v| g.has_edge(u, v) == rep.prescribed(&ix, u, v)))
}

impl fmt::Display for LetterRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids = |vs: &[usize]| vs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "parts {}", self.parts.len())?;
        for (part, kind) in self.parts.iter().zip(&self.kinds) {
            let k = if *kind == PartKind::Clique { 'C' } else { 'I' };
            writeln!(f, "part {k} {}", ids(part))?;
        }
        writeln!(f, "order {}", ids(&self.order))?;
        writeln!(f, "decoder")?;
        for (i, row) in self.decoder.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .enumerate()
                .map(|(j, d)| if i == j { "-".into() } else { d.symbol().to_string() })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for LetterRepresentation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut next = |what: &str| {
            lines.next().ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("missing {what}"),
            })
        };
        let err = |line: usize, msg: String| Error::Parse { line, msg };
        let ids = |line: usize, toks: &[&str]| -> Result<Vec<usize>> {
            toks.iter()
                .map(|t| t.parse().map_err(|_| err(line, format!("bad id `{t}`"))))
                .collect()
        };

        let (ln, l) = next("parts header")?;
        let p: usize = l
            .strip_prefix("parts ")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| err(ln, "expected `parts <p>`".into()))?;
        let mut parts = Vec::with_capacity(p);
        let mut kinds = Vec::with_capacity(p);
        for _ in 0..p {
            let (ln, l) = next("part line")?;
            let toks: Vec<&str> = l.split_whitespace().collect();
            let kind = match toks.get(..2) {
                Some(["part", "C"]) => PartKind::Clique,
                Some(["part", "I"]) => PartKind::Independent,
                _ => return Err(err(ln, "expected `part C|I <ids>`".into())),
            };
            kinds.push(kind);
            parts.push(ids(ln, &toks[2..])?);
        }
        let (ln, l) = next("order line")?;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.first() != Some(&"order") {
            return Err(err(ln, "expected `order <ids>`".into()));
        }
        let order = ids(ln, &toks[1..])?;
        let (ln, l) = next("decoder header")?;
        if l != "decoder" {
            return Err(err(ln, "expected `decoder`".into()));
        }
        let mut decoder = Vec::with_capacity(p);
        for i in 0..p {
            let (ln, l) = next("decoder row")?;
            let cells: Vec<&str> = l.split_whitespace().collect();
            if cells.len() != p {
                return Err(err(ln, format!("decoder row needs {p} cells")));
            }
            let row = cells
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    if i == j {
                        return Ok(Decoder::Empty);
                    }
                    let mut ch = c.chars();
                    match (ch.next().and_then(Decoder::from_symbol), ch.next()) {
                        (Some(d), None) => Ok(d),
                        _ => Err(err(ln, format!("bad decoder symbol `{c}`"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            decoder.push(row);
        }
        let rep = LetterRepresentation {
            parts,
            kinds,
            order,
            decoder,
        };
        rep.index()?;
        Ok(rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{path, universal_grid};

    #[test]
    fn grid_decodes_to_grid() {
        for (k, m) in [(1, 4), (2, 2), (3, 4), (5, 5)] {
            let rep = letter_representation_grid(k, m);
            let g = decode_letter(&rep).unwrap();
            assert_eq!(g, universal_grid(k, m).graph, "H({k},{m})");
            assert!(verify_letter(&rep, &g));
        }
    }

    #[test]
    fn single_row_is_edgeless() {
        assert_eq!(decode_letter(&letter_representation_grid(1, 6)).unwrap().edge_count(), 0);
    }

    #[test]
    fn removing_an_edge_breaks_consistency() {
        let rep = letter_representation_grid(3, 3);
        let g = decode_letter(&rep).unwrap();
        let (u, v) = g.edges().next().unwrap();
        let kept: Vec<(usize, usize)> = g.edges().filter(|&e| e != (u, v)).collect();
        let h = Graph::from_edges(g.n(), &kept).unwrap();
        assert!(!verify_letter(&rep, &h));
    }

    #[test]
    fn clique_parts_and_complete_decoder() {
        let rep = LetterRepresentation {
            parts: vec![vec![1, 2], vec![3]],
            kinds: vec![PartKind::Clique, PartKind::Independent],
            order: vec![1, 2, 3],
            decoder: vec![
                vec![Decoder::Empty, Decoder::Complete],
                vec![Decoder::Complete, Decoder::Empty],
            ],
        };
        assert_eq!(decode_letter(&rep).unwrap().edge_count(), 3);
    }

    #[test]
    fn p3_as_two_letters() {
        // Middle vertex alone; ends share a part, read backward.
        let rep = LetterRepresentation {
            parts: vec![vec![1, 3], vec![2]],
            kinds: vec![PartKind::Independent; 2],
            order: vec![2, 1, 3],
            decoder: vec![
                vec![Decoder::Empty, Decoder::Backward],
                vec![Decoder::Forward, Decoder::Empty],
            ],
        };
        assert!(verify_letter(&rep, &path(3)));
    }

    #[test]
    fn inconsistent_tables_rejected() {
        let mut rep = letter_representation_grid(2, 2);
        rep.decoder[0][1] = Decoder::Forward;
        assert!(decode_letter(&rep).is_err());
        assert!(!verify_letter(&rep, &universal_grid(2, 2).graph));
        let mut rep = letter_representation_grid(2, 2);
        rep.order.pop();
        assert!(decode_letter(&rep).is_err());
    }

    #[test]
    fn text_round_trip() {
        let rep = letter_representation_grid(3, 2);
        let text = rep.to_string();
        assert!(text.contains("decoder\n- B E\nF - B\nE F -\n"));
        assert_eq!(text.parse::<LetterRepresentation>().unwrap(), rep);
        assert!("parts 1\npart X 1\norder 1\ndecoder\n-\n".parse::<LetterRepresentation>().is_err());
    }
}
