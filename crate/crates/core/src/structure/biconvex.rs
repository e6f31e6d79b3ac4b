//! Biconvex orders: one order per part such that every neighborhood is
//! consecutive in the order of the opposite part.

use crate::error::{Error, Result};
use crate::families::{SGraphLayout, Zone};
use crate::graph::{Bipartition, Graph, Side};

/// Largest part [`find_biconvex_order`] will search exhaustively.
pub const BICONVEX_SEARCH_LIMIT: usize = 8;

fn check_order(order: &[usize], part: &[usize], name: &str) -> Result<()> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != part {
        return Err(Error::InvalidParameter(format!(
            "{name} order is not a permutation of its part"
        )));
    }
    Ok(())
}

/// Every vertex of `side` has its neighborhood consecutive in `order`.
fn intervals_in(g: &Graph, b: &Bipartition, side: Side, order: &[usize]) -> bool {
    let mut rank = vec![usize::MAX; g.n() + 1];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    b.part(side).into_iter().all(|v| {
        let ranks: Vec<usize> = g.neighbors(v).map(|u| rank[u]).collect();
        match (ranks.iter().min(), ranks.iter().max()) {
            (Some(&lo), Some(&hi)) => hi - lo + 1 == ranks.len(),
            _ => true,
        }
    })
}

pub fn verify_biconvex_order(
    g: &Graph,
    b: &Bipartition,
    order_a: &[usize],
    order_b: &[usize],
) -> Result<bool> {
    b.validate(g)?;
    check_order(order_a, &b.part_a(), "part A")?;
    check_order(order_b, &b.part_b(), "part B")?;
    Ok(intervals_in(g, b, Side::A, order_b) && intervals_in(g, b, Side::B, order_a))
}

/// Exhaustive search. The two orders are independent (A-neighborhoods only
/// constrain the B order and vice versa), so each is searched separately in
/// lexicographic order and the first hit is returned.
pub fn find_biconvex_order(g: &Graph, b: &Bipartition) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    b.validate(g)?;
    let (a, bb) = (b.part_a(), b.part_b());
    for part in [&a, &bb] {
        if part.len() > BICONVEX_SEARCH_LIMIT {
            return Err(Error::TooLarge {
                what: "part",
                size: part.len(),
                limit: BICONVEX_SEARCH_LIMIT,
            });
        }
    }
    let first = |mut order: Vec<usize>, constrained: Side| loop {
        if intervals_in(g, b, constrained, &order) {
            return Some(order);
        }
        if !next_permutation(&mut order) {
            return None;
        }
    };
    let order_b = match first(bb, Side::A) {
        Some(o) => o,
        None => return Ok(None),
    };
    Ok(first(a, Side::B).map(|order_a| (order_a, order_b)))
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// The order used to show S-graphs are biconvex: `B` in natural order;
/// `A` by increasing neighborhood followed by `C` by decreasing
/// neighborhood, so the largest neighborhoods meet in the middle.
pub fn s_graph_order(s: &SGraphLayout) -> (Vec<usize>, Vec<usize>) {
    let g = &s.graph;
    let mut a = s.zone(Zone::A);
    a.sort_by_key(|&v| (g.degree(v), v));
    let mut c = s.zone(Zone::C);
    c.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    a.extend(c);
    (a, s.zone(Zone::B))
}
