//! Star colourings, the colour-pair edge partition, contraction and lifting, and the full
//! treewidth pipeline with its per-level trace.

use slimtw::bounds::BoundParams;
use slimtw::decomposition::heuristic_td;
use slimtw::graph::{generate, Graph, GraphKind};
use slimtw::pipeline::{
    contract_star_forest, dimension, edge_partition, lift_decomposition, star_coloring_greedy,
    treewidth_bound_pipeline, verify_star_coloring, PipelineError,
};

fn main() {
    let g = generate(&GraphKind::Random { n: 30, m: 45, seed: 11 }).unwrap();
    let col = star_coloring_greedy(&g);
    println!("random n=30 m=45: {} colours, star colouring ok = {}", col.k, verify_star_coloring(&g, &col).is_ok());

    let part = edge_partition(&g, &col).unwrap();
    let dim = dimension(&g, &part);
    println!("{} colour-pair classes, dimension {} (active {:?})", part.classes.len(), dim.value, dim.active);

    let class = part.classes.iter().max_by_key(|c| c.edges.len()).unwrap();
    let c = contract_star_forest(&g, &class.forest).unwrap();
    let td = heuristic_td(&c.graph, 10);
    let fr = lift_decomposition(&g, &class.forest, &c, &td).unwrap();
    println!(
        "pair ({}, {}): {} stars, contracted to n={}, width {} lifts to an (F, {})-decomposition",
        class.i,
        class.j,
        class.forest.stars.len(),
        c.graph.n(),
        td.width(),
        fr.r
    );

    let params = BoundParams::default();
    for kind in [
        GraphKind::Cycle { n: 12 },
        GraphKind::HexGrid { t: 2 },
        GraphKind::Caterpillar { x: 12 },
        GraphKind::Random { n: 24, m: 30, seed: 2 },
    ] {
        report(&format!("{kind:?}"), &generate(&kind).unwrap(), &params);
    }
    // A fan: one vertex meets many edges of a single colour pair.
    let mut edges: Vec<(usize, usize)> = (1..=10).map(|i| (0, i)).collect();
    edges.extend((1..10).map(|i| (i, i + 1)));
    report("fan with 10 blades", &Graph::from_edges(11, &edges).unwrap(), &params);
}

fn report(name: &str, g: &Graph, params: &BoundParams) {
    let res = match treewidth_bound_pipeline(g, params, 2_000_000) {
        Ok(res) => res,
        Err(PipelineError::Refuted(m)) => {
            let sizes: Vec<usize> = m.branch_sets.iter().map(|s| s.len()).collect();
            println!("{name}: outside the class, forbidden model with branch sets {sizes:?}");
            return;
        }
        Err(e) => panic!("{e}"),
    };
    println!(
        "{name}: width {}, dimension {}, membership {}, log2 bound {:.1}",
        res.reported_width, res.dimension, res.membership, res.log2_theoretical_bound
    );
    for l in &res.trace {
        println!(
            "  level {}: n={} colours={} dim={} pair={:?} width={}",
            l.level, l.n, l.colors, l.dimension, l.chosen_pair, l.achieved_width
        );
    }
}
