//! Generators, the edge-list format, minimum separators and balanced separators.

use slimtw::graph::{
    components, delete_vertices, generate, is_balanced_separator, min_separator, Graph, GraphKind, VertexSet,
    WeightFunction,
};

fn main() {
    for kind in [
        GraphKind::Path { n: 6 },
        GraphKind::Cycle { n: 6 },
        GraphKind::CompleteBipartite { s: 2, t: 3 },
        GraphKind::HexGrid { t: 2 },
        GraphKind::Caterpillar { x: 4 },
        GraphKind::Random { n: 12, m: 18, seed: 1 },
    ] {
        let g = generate(&kind).unwrap();
        println!("{kind:?}: n={} m={} Δ={} components={}", g.n(), g.m(), g.max_degree(), components(&g).len());
    }

    // The text format round-trips.
    let hex = generate(&GraphKind::HexGrid { t: 1 }).unwrap();
    let text = hex.to_edge_list();
    print!("hex t=1 as an edge list:\n{text}");
    assert_eq!(Graph::parse_edge_list(&text).unwrap(), hex);

    // A smallest set of vertices cutting opposite corners of the 2×2 hex grid.
    let g = generate(&GraphKind::HexGrid { t: 2 }).unwrap();
    let (a, b) = (0, g.n() - 1);
    let s = min_separator(&g, a, b).unwrap();
    println!("min separator between {a} and {b}: {:?}", s.to_vec());
    let rest = delete_vertices(&g, &s).unwrap();
    println!("G − S has {} components", components(&rest.graph).len());

    // Balanced separators: every component of G − X carries at most half the weight.
    let p = generate(&GraphKind::Path { n: 9 }).unwrap();
    let w = WeightFunction::uniform(p.n());
    for x in [VertexSet::singleton(4), VertexSet::singleton(1), [2, 6].into()] {
        println!("path P9, X={:?}: ½-balanced = {}", x.to_vec(), is_balanced_separator(&p, &w, &x, 0.5));
    }
}
