//! Degeneracy orderings, the extraction step and the good-pair graph on a subdivided clique.
//!
//! Subdividing every edge of K_n gives a bipartite graph whose subdivision side has no twins.

use slimtw::bipartite::{
    check_edge_bound, degeneracy, edge_factor, extract, good_pair_graph, twin_classes, Bipartition,
};
use slimtw::graph::{generate, Graph, GraphKind, VertexSet};

fn subdivided_clique(n: usize) -> (Graph, Bipartition) {
    let k = generate(&GraphKind::Complete { n }).unwrap();
    let edges = k.edges();
    let mut g = Graph::empty(n + edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        g.add_edge(u, n + i).unwrap();
        g.add_edge(v, n + i).unwrap();
    }
    let a: VertexSet = (0..n).collect();
    let b: VertexSet = (n..g.n()).collect();
    (g, Bipartition { a, b })
}

fn main() {
    let (g, bip) = subdivided_clique(8);
    println!(
        "subdivided K8: n={} m={} degeneracy={} twin classes={}",
        g.n(),
        g.m(),
        degeneracy(&g),
        twin_classes(&g).len()
    );

    let ex = extract(&g, &bip, 40).unwrap();
    println!("extraction with r=40: |B1|={} a1={:?} |A2|={} |B2|={}", ex.b1.len(), ex.a1, ex.a2.len(), ex.b2.len());

    for seed in 0..3 {
        let gp = good_pair_graph(&g, &bip, &bip.a, 2, seed).unwrap();
        let gamma = gp.gamma();
        println!(
            "seed {seed}: sample {:?}, Γ has {} edges (a clique: {})",
            gp.sample,
            gamma.m(),
            gamma.is_clique(&gamma.vertices())
        );
    }

    let factor = edge_factor(2.0, 2.0);
    let report = check_edge_bound(&g, &bip, factor * bip.a.len() as f64).unwrap();
    println!("|E| = {} ≤ {:.3e}: {}", report.edges, report.bound, report.pass);
}
