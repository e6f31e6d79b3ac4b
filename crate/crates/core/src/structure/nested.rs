use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::graph::{Graph, GraphBuilder};

/// If the neighborhoods of `part` form a chain under inclusion, returns
/// `part` sorted from smallest to largest neighborhood (ties by id).
/// `part` must be independent.
pub fn neighborhoods_nested(g: &Graph, part: &[usize]) -> Result<Option<Vec<usize>>> {
    g.is_independent(part)?;
    let mut chain = part.to_vec();
    chain.sort_unstable();
    chain.dedup();
    chain.sort_by_key(|&v| g.degree(v));
    let nested = chain
        .windows(2)
        .all(|w| g.neighborhood(w[0]).is_subset(g.neighborhood(w[1])));
    Ok(nested.then_some(chain))
}

fn comparable(a: &FixedBitSet, b: &FixedBitSet) -> bool {
    a.is_subset(b) || b.is_subset(a)
}

/// Graph on `part` (relabeled `1..=|part|` by ascending id, labels kept)
/// joining two vertices iff their neighborhoods are incomparable under
/// inclusion.
pub fn incomparability_graph(g: &Graph, part: &[usize]) -> Result<Graph> {
    g.is_independent(part)?;
    let mut vs = part.to_vec();
    vs.sort_unstable();
    vs.dedup();
    let mut b = GraphBuilder::new(vs.len());
    for (i, &u) in vs.iter().enumerate() {
        for (j, &v) in vs.iter().enumerate().skip(i + 1) {
            if !comparable(g.neighborhood(u), g.neighborhood(v)) {
                b.add_edge(i + 1, j + 1);
            }
        }
    }
    if let Some(labels) = g.labels() {
        b.labels(vs.iter().map(|&v| labels[v - 1].clone()).collect());
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::families::{complete_bipartite, path, s_graph_star, t_graph_star, Zone};
    use crate::graph::induced_subgraph;
    use crate::matcher::are_isomorphic;
    use crate::perm::{permutation_graph, star_perm_s};

    #[test]
    fn biclique_parts_are_nested() {
        let k = complete_bipartite(3, 4);
        assert!(neighborhoods_nested(&k, &[1, 2, 3]).unwrap().is_some());
        assert!(neighborhoods_nested(&k, &[4, 5, 6, 7]).unwrap().is_some());
    }

    #[test]
    fn p5_ends_are_incomparable() {
        assert_eq!(neighborhoods_nested(&path(5), &[1, 3, 5]).unwrap(), None);
    }

    #[test]
    fn rejects_dependent_part() {
        assert_eq!(
            neighborhoods_nested(&path(3), &[1, 2]).unwrap_err(),
            Error::NotIndependent(1, 2)
        );
        assert!(incomparability_graph(&path(3), &[2, 3]).is_err());
    }

    #[test]
    fn t_graph_zone_a_chain() {
        let t = t_graph_star(6).unwrap();
        let mut ad = t.zone(Zone::A);
        ad.extend(t.zone(Zone::D));
        let z = induced_subgraph(&t.graph, &ad).unwrap();
        // A occupies ids 1..=6 of the induced subgraph.
        let chain = neighborhoods_nested(&z, &[1, 2, 3, 4, 5, 6]).unwrap().unwrap();
        assert_eq!(chain, vec![1, 2, 3, 4, 5, 6]);
        for w in chain.windows(2) {
            assert!(z.degree(w[0]) < z.degree(w[1]));
        }
    }

    #[test]
    fn s_graph_zone_b_incomparability() {
        let s = s_graph_star(8).unwrap();
        let g = incomparability_graph(&s.graph, &s.zone(Zone::B)).unwrap();
        let expected = crate::graph::Graph::from_edges(
            8,
            &[(1, 8), (2, 8), (3, 8), (3, 7), (4, 7), (4, 5), (4, 6), (5, 6)],
        )
        .unwrap();
        assert_eq!(g, expected);
        assert_eq!(g.label(1), Some("b1"));
        assert!(are_isomorphic(&g, &permutation_graph(&star_perm_s(8).unwrap())));
    }

    #[test]
    fn biclique_incomparability_is_edgeless() {
        let k = complete_bipartite(2, 3);
        assert_eq!(incomparability_graph(&k, &[3, 4, 5]).unwrap().edge_count(), 0);
    }
}
