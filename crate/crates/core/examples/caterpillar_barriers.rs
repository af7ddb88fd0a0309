//! Mineable pairs to barriers on the caterpillar, where every step can be followed by hand.

use slimtw::barriers::{
    barrier_separates, caterpillar_certificate, mineable_to_barrier, mines_to_barriers, select_good_barrier,
    verify_barrier, verify_mineable,
};
use slimtw::graph::{generate, GraphKind};

fn main() {
    let x = 30;
    let g = generate(&GraphKind::Caterpillar { x }).unwrap();
    let (a, b) = (0, x + 1);
    let cert = caterpillar_certificate(x);
    let rep = verify_mineable(&g, a, b, &cert).unwrap();
    println!("caterpillar x={x}: n={}, certificate valid = {}", g.n(), rep.valid);

    let t = 1;
    let mined = mines_to_barriers(&g, a, b, &cert, t).unwrap();
    println!(
        "{} candidates, {} barriers kept (needed {}), layers {:?}",
        mined.formed,
        mined.barriers.len(),
        mined.w,
        mined.layer_index
    );
    for bar in &mined.barriers {
        println!(
            "  X={:?} Y={:?} Z={:?} |C|={} valid={} separates={}",
            bar.x.to_vec(),
            bar.y.to_vec(),
            bar.z.to_vec(),
            bar.c.len(),
            verify_barrier(&g, bar).unwrap().valid,
            barrier_separates(&g, bar, a, b).unwrap()
        );
    }

    let sel = select_good_barrier(&g, a, b, &mined.barriers, t, 1.0).unwrap();
    println!(
        "selected barrier {}: |cc(C)|={} → |cc(C′)|={} (bound {:.2}), |M|={}",
        sel.index,
        sel.cc_c,
        sel.cc_c_prime,
        sel.phi_bound,
        sel.m.len()
    );

    let mb = mineable_to_barrier(&g, a, b, &cert, t, 1.0).unwrap();
    println!("end to end: barrier valid in G \\ M = {}", mb.valid_in_remainder);
    for c in &mb.checks {
        println!("  {c:?}");
    }
}
