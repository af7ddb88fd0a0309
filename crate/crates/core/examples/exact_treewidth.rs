//! Exact treewidth of small named graphs, with the witness in PACE format.
//!
//! Also prints the `tw(G) ≥ √|V(G)|` comparison for cliques, bicliques and hex grids.

use slimtw::decomposition::{exact_treewidth, verify_td};
use slimtw::graph::{generate, GraphKind};

fn main() {
    let kinds = [
        GraphKind::Complete { n: 3 },
        GraphKind::Complete { n: 6 },
        GraphKind::CompleteBipartite { s: 3, t: 3 },
        GraphKind::CompleteBipartite { s: 4, t: 4 },
        GraphKind::Cycle { n: 7 },
        GraphKind::HexGrid { t: 1 },
        GraphKind::HexGrid { t: 2 },
    ];
    for kind in kinds {
        let g = generate(&kind).unwrap();
        let ex = exact_treewidth(&g, 16).unwrap();
        let ok = verify_td(&g, &ex.td).valid;
        let root = (g.n() as f64).sqrt();
        println!(
            "{kind:?}: n={} tw={} witness_ok={ok} sqrt(n)={root:.3} tw>=sqrt(n): {}",
            g.n(),
            ex.width,
            ex.width as f64 >= root
        );
    }
    let c5 = generate(&GraphKind::Cycle { n: 5 }).unwrap();
    print!("{}", exact_treewidth(&c5, 14).unwrap().td.to_pace(c5.n()));
}
