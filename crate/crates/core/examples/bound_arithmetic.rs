//! The numeric side: ψ, the r_i recursion against its closed form, and the slim-barred bound.

use slimtw::bounds::{
    bound_H_recursive, bound_h, bound_r_sequence, closed_form_check, hypotheses_at, psi, BarredBounds, BoundFn,
    BoundParams,
};

fn main() {
    for (t, q) in [(1, 2), (3, 2), (3, 3), (4, 2)] {
        println!("ψ({t}, {q}) = {:.0}", psi(t, q, 1.0));
    }

    let params = BoundParams::default();
    println!("defaults: r={} r0={:.2} c0={:.2}", params.r(), params.r0(), params.c0());
    for n in [1e3, 1e6, 1e12] {
        let seq = bound_r_sequence(n, &params).unwrap();
        let shown: Vec<String> = seq.log2.iter().take(4).map(|v| format!("{v:.1}")).collect();
        println!("n={n:e}: log2 r_i = [{}, …]", shown.join(", "));
        for i in 0..3 {
            let c = closed_form_check(n, i, &params).unwrap();
            println!("  i={i}: {:.1} ≤ {:.1}: {}", c.lhs, c.rhs, c.pass);
        }
    }

    let b = BarredBounds {
        c: BoundFn::Const { value: 3.0 },
        f: BoundFn::Const { value: 10.0 },
        g: BoundFn::Linear { coef: 0.6 },
        p: 2.0,
    };
    for n in [20.0, 1e3, 1e5] {
        let h = bound_h(n, &b).unwrap();
        let hh = bound_H_recursive(n, n, &b).unwrap();
        println!("n={n:e}: recursion {hh:.3e} ≤ closed form {h:.3e}, hypothesis issues: {:?}", hypotheses_at(n, &b));
    }
}
