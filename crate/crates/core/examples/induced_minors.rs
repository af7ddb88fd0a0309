//! Induced-minor search, model verification, clique bounds and class membership.

use slimtw::graph::{generate, GraphKind};
use slimtw::minors::{
    class_membership, contract_connected_sets, find_induced_minor, max_clique, verify_model, Membership, MinorSearch,
};

const BUDGET: u64 = 5_000_000;

fn main() {
    let hex = generate(&GraphKind::HexGrid { t: 2 }).unwrap();
    let c6 = generate(&GraphKind::Cycle { n: 6 }).unwrap();
    let k4 = generate(&GraphKind::Complete { n: 4 }).unwrap();
    let k33 = generate(&GraphKind::CompleteBipartite { s: 3, t: 3 }).unwrap();

    for (name, g, hname, h) in [("W2x2", &hex, "C6", &c6), ("W2x2", &hex, "K4", &k4), ("K3,3", &k33, "C6", &c6)] {
        match find_induced_minor(g, h, BUDGET).unwrap() {
            MinorSearch::Found(m) => {
                let sizes: Vec<usize> = m.branch_sets.iter().map(|s| s.len()).collect();
                println!(
                    "{hname} ≤ {name}: branch-set sizes {sizes:?}, model valid = {}",
                    verify_model(g, &m).unwrap().valid
                );
            }
            MinorSearch::NotFound => println!("{hname} is not an induced minor of {name}"),
            MinorSearch::BudgetExhausted => println!("{hname} vs {name}: budget exhausted"),
        }
    }

    // Contracting the two halves of a 6-cycle leaves an edge.
    let c = contract_connected_sets(&c6, &[[0, 1, 2].into(), [3, 4, 5].into()]).unwrap();
    println!("C6 with both halves contracted: n={} m={}", c.graph.n(), c.graph.m());

    for (name, g) in [("C6", &c6), ("K4", &k4), ("K3,3", &k33), ("W2x2", &hex)] {
        let omega = max_clique(g).len();
        let member = match class_membership(g, 3, BUDGET).unwrap() {
            Membership::InClass => "excludes K3,3 and W3x3".to_string(),
            Membership::NotInClass(m) => format!("contains a forbidden minor on {} vertices", m.pattern.n()),
            Membership::Unknown => "unknown within budget".to_string(),
        };
        println!("{name}: ω={omega}, t=3: {member}");
    }
}
