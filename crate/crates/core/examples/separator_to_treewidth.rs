//! Tree decompositions assembled from a balanced-separator oracle, and balanced bags read back
//! out of a decomposition.

use slimtw::decomposition::{
    balanced_bag, exact_treewidth, heuristic_td, td_from_balanced_separators, verify_td, weighted_centroid,
};
use slimtw::graph::{generate, min_separator, GraphKind, Subgraph, VertexSet, WeightFunction};

fn main() {
    // On trees a single weighted centroid balances any weight.
    let tree = generate(&GraphKind::Caterpillar { x: 20 }).unwrap();
    let out =
        td_from_balanced_separators(&tree, |s: &Subgraph, w: &WeightFunction| weighted_centroid(&s.graph, w), 0.5, 1)
            .unwrap();
    println!(
        "caterpillar x=20: width {} (bound {:.1}), {} oracle calls, valid = {}",
        out.width,
        out.bound,
        out.calls.len(),
        verify_td(&tree, &out.td).valid
    );

    // A generic oracle: the middle bag of a heuristic decomposition of each piece.
    let g = generate(&GraphKind::HexGrid { t: 3 }).unwrap();
    let oracle = |s: &Subgraph, w: &WeightFunction| -> Result<VertexSet, String> {
        let td = heuristic_td(&s.graph, 10);
        let node = balanced_bag(&s.graph, &td, w, 0.5).map_err(|e| e.to_string())?;
        Ok(td.bags[node].clone())
    };
    let d = heuristic_td(&g, 0).width() + 1;
    let out = td_from_balanced_separators(&g, oracle, 0.5, d).unwrap();
    println!("hex t=3: separators of size ≤ {d} give width {} (bound {:.1})", out.width, out.bound);

    // Reading a balanced bag back out, and comparing against a minimum vertex cut.
    let small = generate(&GraphKind::HexGrid { t: 2 }).unwrap();
    let ex = exact_treewidth(&small, 16).unwrap();
    let node = balanced_bag(&small, &ex.td, &WeightFunction::uniform(small.n()), 0.5).unwrap();
    let cut = min_separator(&small, 0, small.n() - 1).unwrap();
    println!(
        "hex t=2: tw={}, balanced bag {:?}, corner-to-corner cut {:?}",
        ex.width,
        ex.td.bags[node].to_vec(),
        cut.to_vec()
    );
}
