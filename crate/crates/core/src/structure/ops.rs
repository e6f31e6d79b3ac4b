//! The three binary operations on bipartite graphs `G1 = (X1, Y1, E1)` and
//! `G2 = (X2, Y2, E2)`. The second operand's ids are shifted past the
//! first's; the result has parts `(X1 ∪ X2, Y1 ∪ Y2)`.

use crate::graph::{bipartite_complement, Bigraph, Bipartition, GraphBuilder, Side};

fn sides(b: &Bigraph) -> impl Iterator<Item = Side> + '_ {
    (1..=b.n()).map(|v| b.parts.side(v))
}

fn combined_parts(g1: &Bigraph, g2: &Bigraph) -> Bipartition {
    let all: Vec<Side> = sides(g1).chain(sides(g2)).collect();
    Bipartition::from_sides(&all)
}

fn union_builder(g1: &Bigraph, g2: &Bigraph) -> GraphBuilder {
    let shift = g1.n();
    let mut b = GraphBuilder::new(g1.n() + g2.n());
    for (u, v) in g1.graph.edges() {
        b.add_edge(u, v);
    }
    for (u, v) in g2.graph.edges() {
        b.add_edge(u + shift, v + shift);
    }
    b
}

pub fn disjoint_union(g1: &Bigraph, g2: &Bigraph) -> Bigraph {
    Bigraph {
        graph: union_builder(g1, g2).build(),
        parts: combined_parts(g1, g2),
    }
}

fn complemented(g: &Bigraph) -> Bigraph {
    Bigraph {
        graph: bipartite_complement(&g.graph, &g.parts).expect("bipartition is valid"),
        parts: g.parts.clone(),
    }
}

/// Bipartite complement of the disjoint union of the two complements.
pub fn join(g1: &Bigraph, g2: &Bigraph) -> Bigraph {
    complemented(&disjoint_union(&complemented(g1), &complemented(g2)))
}

/// Disjoint union plus every edge from `X1` to `Y2`.
pub fn skew_join(g1: &Bigraph, g2: &Bigraph) -> Bigraph {
    let shift = g1.n();
    let mut b = union_builder(g1, g2);
    for x in g1.parts.part(Side::A) {
        for y in g2.parts.part(Side::B) {
            b.add_edge(x, y + shift);
        }
    }
    Bigraph {
        graph: b.build(),
        parts: combined_parts(g1, g2),
    }
}

/// A single vertex on the given side.
pub fn k1(side: Side) -> Bigraph {
    Bigraph {
        graph: GraphBuilder::new(1).build(),
        parts: Bipartition::from_sides(&[side]),
    }
}
