//! The slim-pair separator engine: mining, the barrier branch, balanced separators and the
//! JSON-lines trace.

use slimtw::barriers::caterpillar_certificate;
use slimtw::bounds::BoundParams;
use slimtw::decomposition::StarForest;
use slimtw::graph::{generate, is_separator, GraphKind, VertexSet, WeightFunction};
use slimtw::pipeline::contraction_provider;
use slimtw::separator::{MineOutcome, SlimEngine, SlimParams};

fn main() {
    let params = SlimParams::from(&BoundParams::default());
    println!("params: t={} p={} q={} r={} x={}", params.t, params.p, params.q, params.r, params.x);

    let x = 30;
    let g = generate(&GraphKind::Caterpillar { x }).unwrap();
    let (a, b) = (0, x + 1);
    let f = StarForest::empty();
    let mut eng = SlimEngine::new(params.clone(), contraction_provider);

    match eng.mineslim(&g, &f, a, b).unwrap() {
        MineOutcome::Separator { d, iterations } => {
            println!("mineslim: separator {:?} after {iterations} rounds", d.to_vec())
        }
        MineOutcome::Mineable { d, cert } => {
            println!("mineslim: mineable after deleting {} vertices (x={})", d.len(), cert.x)
        }
    }
    let s = eng.separate_slim_pair(&g, &f, a, b).unwrap();
    println!("separate_slim_pair: {:?}, separates = {}", s.to_vec(), is_separator(&g, &s, a, b).unwrap());

    // Force the barrier branch with a hand-made certificate.
    let mut eng = SlimEngine::new(SlimParams { t: 1, ..params.clone() }, contraction_provider);
    let s = eng.separate_from_certificate(&g, &f, a, b, &VertexSet::new(), &caterpillar_certificate(x)).unwrap();
    println!("barrier branch: separator of size {}, separates = {}", s.len(), is_separator(&g, &s, a, b).unwrap());
    for node in &eng.trace {
        println!("  depth {} n={} route={:?}", node.depth, node.n, node.route);
    }
    print!("{}", eng.trace_jsonl().lines().next().map(|l| format!("first trace line: {l}\n")).unwrap_or_default());

    let h = generate(&GraphKind::HexGrid { t: 2 }).unwrap();
    let mut eng = SlimEngine::new(params, contraction_provider);
    let out = eng.balanced_separator(&h, &WeightFunction::uniform(h.n()), &f).unwrap();
    println!(
        "hex t=2: balanced separator {:?} from {} slim pairs over {} rounds",
        out.separator.to_vec(),
        out.slim_pairs,
        out.rounds.len()
    );
}
