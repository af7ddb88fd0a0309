//! Families of anticomplete induced paths, slim pairs and the (t, s)-slim property.

use slimtw::graph::{generate, GraphKind};
use slimtw::slimness::{check_path_family, check_tq_slim, is_slim_pair, max_anticomplete_paths, SlimCheck};

fn main() {
    let c8 = generate(&GraphKind::Cycle { n: 8 }).unwrap();
    let fam = max_anticomplete_paths(&c8, 0, 4, 8).unwrap();
    println!(
        "C8, pair (0, 4): {} paths {:?}, family ok = {}",
        fam.len(),
        fam.paths,
        check_path_family(&c8, &fam).is_ok()
    );
    for s in 1..=3 {
        println!("  {s}-slim: {}", is_slim_pair(&c8, 0, 4, s).unwrap());
    }

    // In K_{s,t} two vertices on the same side see t anticomplete paths of length two.
    let k34 = generate(&GraphKind::CompleteBipartite { s: 3, t: 4 }).unwrap();
    let fam = max_anticomplete_paths(&k34, 0, 1, 10).unwrap();
    println!("K3,4, pair (0, 1): {} paths", fam.len());

    // A caterpillar's ends are joined by a single induced path.
    let cat = generate(&GraphKind::Caterpillar { x: 6 }).unwrap();
    println!("caterpillar x=6: (a, b) is 2-slim = {}", is_slim_pair(&cat, 0, 7, 2).unwrap());

    for (name, g) in [("C8", &c8), ("K3,4", &k34), ("caterpillar", &cat)] {
        match check_tq_slim(g, 2, 3).unwrap() {
            SlimCheck::Ok => println!("{name}: every stable pair is 3-slim"),
            SlimCheck::Counterexample { stable_set, families } => {
                println!("{name}: stable set {stable_set:?} is 3-wide ({} paths)", families[0].len())
            }
        }
    }
}
