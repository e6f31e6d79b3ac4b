//! Bipartite graphs up to isomorphism by vertex augmentation.
//!
//! A child `G'` of parent `P` (new vertex `v`) is kept iff `G' - v` and
//! `G' - w` are isomorphic, where `w` is chosen invariantly: among the
//! vertices maximizing a cheap local invariant, the one placed last by the
//! canonical labeling. Every class then has exactly one parent class, and
//! per-parent deduplication by canonical code removes repeats.

use std::collections::HashSet;

use rayon::prelude::*;

use super::canon::{bits, canonical, graph_of, Masks};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ENUMERATE_LIMIT: usize = 12;

/// Hereditary filter applied at every level; a rejected graph is dropped
/// together with all its extensions.
pub type Filter<'a> = &'a (dyn Fn(&Graph) -> bool + Sync);

#[derive(Clone)]
struct Rep {
    adj: Masks,
    code: u128,
}

fn invariant(adj: &[u16], v: usize) -> (u32, u32) {
    let deg = adj[v].count_ones();
    let nsum = bits(adj[v]).map(|u| adj[u].count_ones()).sum();
    (deg, nsum)
}

fn delete(adj: &[u16], w: usize) -> Masks {
    let low = (1u16 << w) - 1;
    adj.iter()
        .enumerate()
        .filter(|&(i, _)| i != w)
        .map(|(_, &m)| (m & low) | ((m >> 1) & !low))
        .collect()
}

/// Per component, its two color classes.
fn color_classes(adj: &[u16]) -> Vec<(u16, u16)> {
    let n = adj.len();
    let mut seen = 0u16;
    let mut out = Vec::new();
    for s in 0..n {
        if seen >> s & 1 == 1 {
            continue;
        }
        let (mut c0, mut c1) = (1u16 << s, 0u16);
        let mut frontier = c0;
        let mut even = true;
        while frontier != 0 {
            let reach = bits(frontier).fold(0, |m, v| m | adj[v]) & !(c0 | c1);
            if even {
                c1 |= reach;
            } else {
                c0 |= reach;
            }
            frontier = reach;
            even = !even;
        }
        seen |= c0 | c1;
        out.push((c0, c1));
    }
    out
}

fn children(parent: &Rep, filter: Option<Filter>) -> Vec<Rep> {
    let m = parent.adj.len();
    let v = m;
    let classes = color_classes(&parent.adj);
    let mut seen: HashSet<u128> = HashSet::new();
    let mut out = Vec::new();
    let mut child: Masks = parent.adj.clone();
    child.push(0);
    for s in 0u16..(1 << m) {
        if !classes.iter().all(|&(c0, c1)| s & c0 == 0 || s & c1 == 0) {
            continue;
        }
        for (i, a) in child.iter_mut().take(m).enumerate() {
            *a = parent.adj[i] | (s >> i & 1) << v;
        }
        child[v] = s;
        let inv: Vec<(u32, u32)> = (0..=m).map(|u| invariant(&child, u)).collect();
        let top = *inv.iter().max().expect("nonempty");
        if inv[v] != top {
            continue;
        }
        let canon = canonical(&child);
        if seen.contains(&canon.code) {
            continue;
        }
        let w = *canon
            .order
            .iter()
            .rev()
            .find(|&&u| inv[u] == top)
            .expect("some vertex attains the maximum");
        if w != v && canonical(&delete(&child, w)).code != parent.code {
            continue;
        }
        seen.insert(canon.code);
        let adj = canon.relabeled(&child);
        if filter.is_some_and(|f| !f(&graph_of(&adj))) {
            continue;
        }
        out.push(Rep {
            adj,
            code: canon.code,
        });
    }
    out
}

fn levels(n_max: usize, filter: Option<Filter>, parallel: bool) -> Result<Vec<Vec<Rep>>> {
    if n_max == 0 || n_max > ENUMERATE_LIMIT {
        return Err(Error::InvalidParameter(format!(
            "enumeration size must be in 1..={ENUMERATE_LIMIT}, got {n_max}"
        )));
    }
    let k1 = Rep {
        adj: vec![0],
        code: 0,
    };
    let mut out = vec![if filter.is_none_or(|f| f(&graph_of(&k1.adj))) {
        vec![k1]
    } else {
        Vec::new()
    }];
    for _ in 2..=n_max {
        let prev = out.last().expect("level 1 present");
        let mut next: Vec<Rep> = if parallel {
            prev.par_iter().flat_map_iter(|p| children(p, filter)).collect()
        } else {
            prev.iter().flat_map(|p| children(p, filter)).collect()
        };
        next.sort_unstable_by_key(|r| r.code);
        out.push(next);
    }
    Ok(out)
}

fn connected(adj: &[u16]) -> bool {
    color_classes(adj).len() == 1
}

/// One representative per isomorphism class, in canonical form, ordered
/// by canonical code.
pub struct EnumerationStream {
    n: usize,
    connected_only: bool,
    inner: std::vec::IntoIter<Graph>,
}

impl EnumerationStream {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn connected_only(&self) -> bool {
        self.connected_only
    }
}

impl Iterator for EnumerationStream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.inner.next()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl ExactSizeIterator for EnumerationStream {}

fn finish(level: Vec<Rep>, n: usize, connected_only: bool) -> EnumerationStream {
    let graphs: Vec<Graph> = level
        .into_iter()
        .filter(|r| !connected_only || connected(&r.adj))
        .map(|r| graph_of(&r.adj))
        .collect();
    EnumerationStream {
        n,
        connected_only,
        inner: graphs.into_iter(),
    }
}

pub fn enumerate_bipartite(n: usize, connected_only: bool) -> Result<EnumerationStream> {
    enumerate_bipartite_filtered(n, connected_only, None, true)
}

pub fn enumerate_bipartite_filtered(
    n: usize,
    connected_only: bool,
    filter: Option<Filter>,
    parallel: bool,
) -> Result<EnumerationStream> {
    let mut lv = levels(n, filter, parallel)?;
    Ok(finish(lv.pop().expect("n >= 1"), n, connected_only))
}

/// Streams for every size `1..=n_max`, sharing the work between levels.
pub fn enumerate_bipartite_upto(
    n_max: usize,
    connected_only: bool,
    filter: Option<Filter>,
    parallel: bool,
) -> Result<Vec<EnumerationStream>> {
    Ok(levels(n_max, filter, parallel)?
        .into_iter()
        .enumerate()
        .map(|(i, l)| finish(l, i + 1, connected_only))
        .collect())
}
