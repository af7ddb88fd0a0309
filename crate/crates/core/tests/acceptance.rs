//! Acceptance run: one PASS/FAIL line per criterion. Runs without the test harness so the
//! lines are always printed. Exits non-zero if a criterion fails that is not a documented
//! red (see `KNOWN_RED`).

mod common;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use slimtw::barriers::{
    barrier_separates, caterpillar_certificate, mineable_to_barrier, mines_to_barriers, verify_barrier, verify_mineable,
};
use slimtw::bounds::{
    bound_H_recursive, bound_h, chain_check, closed_form_check, psi, BarredBounds, BoundFn, BoundParams,
};
use slimtw::decomposition::{
    balanced_bag, exact_treewidth, heuristic_td, td_from_balanced_separators, weighted_centroid, StarForest,
};
use slimtw::graph::{
    components_of_set, delete_vertices, generate, min_separator, Graph, GraphKind, Subgraph, VertexSet, WeightFunction,
};
use slimtw::minors::{class_membership, verify_model, Membership};
use slimtw::pipeline::{
    contraction_provider, dimension, edge_partition, star_coloring_greedy, treewidth_bound_pipeline, PipelineError,
};
use slimtw::separator::{MineOutcome, SlimEngine, SlimParams};
use slimtw::slimness::{is_slim_pair, max_anticomplete_paths};

use common::*;

/// Criteria expected to report FAIL, with the reason. Each is still computed and printed.
const KNOWN_RED: &[(u8, &str)] =
    &[(6, "tw(W_2x2) = 3 < sqrt(16) under the brick-wall convention; the inequality holds only up to a constant for hex grids")];

struct Line {
    pass: bool,
    detail: String,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line { pass, detail: detail.into() }
}

/// `"; first: …"` for a non-empty failure list.
fn first_failure(v: &[String]) -> String {
    v.first().map(|f| format!("; first: {f}")).unwrap_or_default()
}

fn within(elapsed: Duration, limit_s: u64) -> bool {
    elapsed < Duration::from_secs(limit_s)
}

fn slim_params(t: usize, q: usize, x: usize) -> SlimParams {
    SlimParams { t, p: 2, q, r: psi(t, q, 1.0).ceil() as usize, x, phi: 1.0, depth_guard: 32, enforce_psi: true }
}

fn random_instance(seed: u64, n_max: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(4..=n_max);
    match seed % 4 {
        0 => random_tree(n, &mut rng),
        1 => random_series_parallel(n, &mut rng),
        _ => {
            let m = rng.gen_range(n - 1..=(2 * n).min(n * (n - 1) / 2));
            generate(&GraphKind::Random { n, m, seed }).unwrap()
        }
    }
}

fn first_active_forest(g: &Graph) -> StarForest {
    let part = edge_partition(g, &star_coloring_greedy(g)).unwrap();
    part.classes.first().map(|c| c.forest.clone()).unwrap_or_else(StarForest::empty)
}

fn criterion_1() -> Line {
    let start = Instant::now();
    let (mut checked, mut failures, mut pairs) = (0usize, Vec::new(), 0usize);
    for seed in 0..220u64 {
        let g = random_instance(seed, 25);
        let n = g.n();
        let f = first_active_forest(&g);
        let mut eng = SlimEngine::new(slim_params(1, 3, 4), contraction_provider);
        for a in 0..n {
            for b in a + 1..n {
                if g.adjacent(a, b) {
                    continue;
                }
                let s = min_separator(&g, a, b).unwrap();
                checked += 1;
                if !separates(&g, &s, a, b) {
                    failures.push(format!("min_separator seed {seed} ({a},{b})"));
                }
            }
        }
        let slim = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| !g.adjacent(a, b) && is_slim_pair(&g, a, b, 3).unwrap());
        if let Some((a, b)) = slim {
            pairs += 1;
            match eng.separate_slim_pair(&g, &f, a, b) {
                Ok(s) if separates(&g, &s, a, b) => {}
                other => failures.push(format!("separate_slim_pair seed {seed}: {other:?}")),
            }
            match eng.mineslim(&g, &f, a, b) {
                Ok(MineOutcome::Separator { d, .. }) if separates(&g, &d, a, b) => {}
                Ok(MineOutcome::Mineable { d, cert }) => {
                    let sub = delete_vertices(&g, &d).unwrap();
                    let local = cert.map_sets(|s| sub.localize(s));
                    let ok = verify_mineable(&sub.graph, sub.local(a).unwrap(), sub.local(b).unwrap(), &local)
                        .map(|r| r.valid)
                        .unwrap_or(false);
                    if !ok {
                        failures.push(format!("mineslim certificate seed {seed}"));
                    }
                }
                other => failures.push(format!("mineslim seed {seed}: {other:?}")),
            }
            checked += 2;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xbeef);
        let raw: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..1.0)).collect();
        let total: f64 = raw.iter().sum();
        let w = WeightFunction::new(raw.iter().map(|x| x / total).collect()).unwrap();
        match eng.balanced_separator(&g, &w, &f) {
            Ok(o) if balanced(&g, w.as_slice(), &o.separator, 0.5) => {}
            other => failures.push(format!("balanced_separator seed {seed}: {other:?}")),
        }
        checked += 1;
    }
    // The barrier branch of the recursion, from the caterpillar certificate.
    for x in [30usize, 60] {
        let g = generate(&GraphKind::Caterpillar { x }).unwrap();
        let mut eng = SlimEngine::new(slim_params(1, 2, 4), contraction_provider);
        match eng.separate_from_certificate(
            &g,
            &StarForest::empty(),
            0,
            x + 1,
            &VertexSet::new(),
            &caterpillar_certificate(x),
        ) {
            Ok(s) if separates(&g, &s, 0, x + 1) && s.len() <= eng.trace[0].audit => {}
            other => failures.push(format!("barrier branch x={x}: {other:?}")),
        }
        checked += 1;
    }
    let el = start.elapsed();
    line(
        failures.is_empty() && within(el, 120),
        format!(
            "220 instances, {checked} outputs checked ({pairs} slim pairs), {} failures, {el:.1?}{}",
            failures.len(),
            first_failure(&failures)
        ),
    )
}

fn criterion_2() -> Line {
    let start = Instant::now();
    let mut graphs: Vec<Graph> = (0..=6).flat_map(canonical_graphs).collect();
    let exhaustive = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..520 {
        let n = rng.gen_range(7..=8);
        let pairs = n * (n - 1) / 2;
        let density = rng.gen_range(0.15..0.6);
        let mask = (0..pairs).fold(0u64, |m, k| if rng.gen_bool(density) { m | 1 << k } else { m });
        graphs.push(graph_from_mask(n, mask));
    }
    let (mut sep_checks, mut path_checks, mut tw_checks) = (0, 0, 0);
    let mut bad = Vec::new();
    for (gi, g) in graphs.iter().enumerate() {
        let n = g.n();
        for a in 0..n {
            for b in a + 1..n {
                if g.adjacent(a, b) {
                    continue;
                }
                let s = min_separator(g, a, b).unwrap();
                sep_checks += 1;
                if s.len() != brute_min_sep(g, a, b) || !separates(g, &s, a, b) {
                    bad.push(format!("min_separator graph {gi} ({a},{b})"));
                }
                let fam = max_anticomplete_paths(g, a, b, n).unwrap();
                path_checks += 1;
                if fam.len() != naive_max_paths(g, a, b) {
                    bad.push(format!("paths graph {gi} ({a},{b}): {} vs {}", fam.len(), naive_max_paths(g, a, b)));
                }
            }
        }
        let ex = exact_treewidth(g, 14).unwrap();
        tw_checks += 1;
        if td_ok(g, &ex.td) != Some(ex.width) || (n <= 7 && ex.width != brute_treewidth(g)) {
            bad.push(format!("treewidth graph {gi}"));
        }
    }
    let el = start.elapsed();
    line(
        bad.is_empty() && within(el, 300),
        format!(
            "{exhaustive} iso classes n<=6 + {} sampled n in 7..8: {sep_checks} separator, {path_checks} path-family, {tw_checks} treewidth comparisons, {} discrepancies, {el:.1?}{}",
            graphs.len() - exhaustive,
            bad.len(),
            first_failure(&bad)
        ),
    )
}

fn anticomplete(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    x.iter().all(|u| y.iter().all(|v| u != v && !g.adjacent(u, v)))
}

fn criterion_3_and_4() -> (Line, Line) {
    let start = Instant::now();
    let (mut bad3, mut bad4) = (Vec::new(), Vec::new());
    let mut counts = Vec::new();
    for x in [30usize, 60, 600] {
        let g = generate(&GraphKind::Caterpillar { x }).unwrap();
        let n = g.n() as f64;
        let cert = caterpillar_certificate(x);
        let (y, p) = (cert.y, cert.p);
        let expected = (99 * x).div_ceil(100 * 6);
        let mb = mines_to_barriers(&g, 0, x + 1, &cert, 1).unwrap();
        counts.push(format!("x={x}: {}", mb.barriers.len()));
        if mb.barriers.len() != expected {
            bad3.push(format!("x={x}: {} barriers, expected {expected}", mb.barriers.len()));
        }
        for (i, b) in mb.barriers.iter().enumerate() {
            if !verify_barrier(&g, b).unwrap().valid {
                bad3.push(format!("x={x}: barrier {i} invalid"));
            }
            if (b.body().len() as f64) > 100.0 * n * 36.0 / x as f64 {
                bad3.push(format!("x={x}: barrier {i} too large"));
            }
            for b2 in &mb.barriers[i + 1..] {
                if !anticomplete(&g, &b.body(), &b2.body()) {
                    bad3.push(format!("x={x}: barriers not anticomplete"));
                }
            }
        }
        if components_of_set(&g, &mb.c).len() > x * y {
            bad3.push(format!("x={x}: cc(C) > xy"));
        }
        match mineable_to_barrier(&g, 0, x + 1, &cert, 1, 1.0) {
            Ok(r) => {
                if r.m.len() > x * y * p {
                    bad4.push(format!("x={x}: |M| = {} > xyp", r.m.len()));
                }
                let sub = delete_vertices(&g, &r.m).unwrap();
                let local = r.barrier.localize(&sub);
                let ok = verify_barrier(&sub.graph, &local).unwrap().valid
                    && barrier_separates(&sub.graph, &local, sub.local(0).unwrap(), sub.local(x + 1).unwrap()).unwrap();
                if !ok {
                    bad4.push(format!("x={x}: selected barrier fails in G \\ M"));
                }
            }
            Err(e) => bad4.push(format!("x={x}: {e}")),
        }
    }
    let el = start.elapsed();
    (
        line(
            bad3.is_empty() && within(el, 60),
            format!("barrier counts {counts:?}, {} violations, {el:.1?}{}", bad3.len(), first_failure(&bad3)),
        ),
        line(bad4.is_empty(), format!("{} violations{}", bad4.len(), first_failure(&bad4))),
    )
}

fn criterion_5() -> Line {
    let start = Instant::now();
    let mut bad = Vec::new();
    let (mut worst_tree, mut worst_sp) = (0, 0);
    for seed in 0..100u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=50);
        let t = random_tree(n, &mut rng);
        let out =
            td_from_balanced_separators(&t, |s: &Subgraph, w: &WeightFunction| weighted_centroid(&s.graph, w), 0.5, 1);
        match out {
            Ok(o) if td_ok(&t, &o.td) == Some(o.width) && o.width <= 2 => worst_tree = worst_tree.max(o.width),
            other => bad.push(format!("tree seed {seed}: {:?}", other.map(|o| o.width))),
        }
        let g = random_series_parallel(rng.gen_range(3..=50), &mut rng);
        let d = 3;
        let provider = |s: &Subgraph, w: &WeightFunction| -> Result<VertexSet, String> {
            let td = heuristic_td(&s.graph, 12);
            let node = balanced_bag(&s.graph, &td, w, 0.5).map_err(|e| e.to_string())?;
            Ok(td.bags[node].clone())
        };
        match td_from_balanced_separators(&g, provider, 0.5, d) {
            Ok(o) if td_ok(&g, &o.td) == Some(o.width) && o.width <= 2 * d => worst_sp = worst_sp.max(o.width),
            other => bad.push(format!("series-parallel seed {seed}: {:?}", other.map(|o| o.width))),
        }
    }
    let el = start.elapsed();
    line(
        bad.is_empty() && within(el, 60),
        format!("100 trees (d=1, worst width {worst_tree} <= 2) + 100 series-parallel (d=3, worst width {worst_sp} <= 6), {} violations, {el:.1?}{}", bad.len(), first_failure(&bad)),
    )
}

fn criterion_6() -> (Line, bool) {
    let tw = |g: &Graph| exact_treewidth(g, 20).unwrap().width;
    let mut parts = Vec::new();
    let kn_ok = (3..=8).all(|n| {
        let w = tw(&generate(&GraphKind::Complete { n }).unwrap());
        w == n - 1 && (w * w) >= n
    });
    parts.push(format!("K_n (n=3..8) {}", if kn_ok { "ok" } else { "FAIL" }));
    let knn_ok = (2..=4).all(|n| {
        let w = tw(&generate(&GraphKind::CompleteBipartite { s: n, t: n }).unwrap());
        w == n && w * w >= 2 * n
    });
    parts.push(format!("K_nn (n=2..4) {}", if knn_ok { "ok" } else { "FAIL" }));
    let hex = generate(&GraphKind::HexGrid { t: 2 }).unwrap();
    let hw = tw(&hex);
    let hex_ok = hw * hw >= hex.n();
    parts.push(format!(
        "W_2x2: tw = {hw}, |V| = {}, sqrt|V| = {:.2} -> {}",
        hex.n(),
        (hex.n() as f64).sqrt(),
        if hex_ok { "ok" } else { "FAIL" }
    ));
    // Degenerate cases, printed only.
    let k1 = tw(&generate(&GraphKind::Complete { n: 1 }).unwrap());
    let k2 = tw(&generate(&GraphKind::Complete { n: 2 }).unwrap());
    let k11 = tw(&generate(&GraphKind::CompleteBipartite { s: 1, t: 1 }).unwrap());
    println!(
        "  info: tw(K_1) = {k1} < 1, tw(K_2) = {k2} < sqrt 2, tw(K_1,1) = {k11} < sqrt 2 (outside the checked ranges)"
    );
    let documented = kn_ok && knn_ok && !hex_ok && hw == 3;
    (line(kn_ok && knn_ok && hex_ok, parts.join("; ")), documented)
}

fn criterion_7() -> Line {
    let start = Instant::now();
    let fixture = BarredBounds {
        c: BoundFn::Const { value: 3.0 },
        f: BoundFn::Const { value: 10.0 },
        g: BoundFn::Linear { coef: 0.6 },
        p: 2.0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    let mut min_slack = f64::INFINITY;
    for _ in 0..10_000 {
        let n = 10f64.powf(rng.gen_range(11f64.log10()..6.0));
        let hh = bound_H_recursive(n, n, &fixture).unwrap();
        let h = bound_h(n, &fixture).unwrap();
        let slack = (h - hh) / h;
        min_slack = min_slack.min(slack);
        if slack < 0.0 {
            bad.push(format!("H > h at n = {n}"));
        }
    }
    let params = BoundParams::default();
    let mut grid = 0;
    for e in 4..=60 {
        let n = 2f64.powi(e);
        for i in 0..=10 {
            grid += 1;
            let c = closed_form_check(n, i, &params).unwrap();
            if !c.pass {
                bad.push(format!("closed form fails at n = 2^{e}, i = {i}"));
            }
            let (lhs, rhs) = chain_check(n, i, &params).unwrap();
            if lhs > rhs {
                bad.push(format!("chain fails at n = 2^{e}, i = {i}"));
            }
        }
    }
    let el = start.elapsed();
    line(
        bad.is_empty() && within(el, 30),
        format!("10^4 samples of H <= h (min relative slack {min_slack:.3}), {grid} closed-form/chain grid points with c0 = r0 + 18 d3 = {:.1}, {} failures, {el:.1?}{}", params.c0(), bad.len(), first_failure(&bad)),
    )
}

fn criterion_8() -> Line {
    let mut bad = Vec::new();
    let p4 = generate(&GraphKind::Path { n: 4 }).unwrap();
    let c4 = generate(&GraphKind::Cycle { n: 4 }).unwrap();
    let (bp4, bc4) = (brute_star_chromatic(&p4), brute_star_chromatic(&c4));
    if bp4 != 3 || bc4 != 3 {
        bad.push(format!("brute force: P4 {bp4}, C4 {bc4}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut small: Vec<Graph> = (0..=5).flat_map(canonical_graphs).collect();
    for _ in 0..40 {
        let n = rng.gen_range(6..=7);
        let mask = (0..n * (n - 1) / 2).fold(0u64, |m, k| if rng.gen_bool(0.35) { m | 1 << k } else { m });
        small.push(graph_from_mask(n, mask));
    }
    for g in &small {
        let col = star_coloring_greedy(g);
        if !star_coloring_ok(g, &col.colors) || col.k < brute_star_chromatic(g) {
            bad.push(format!("greedy below optimum or invalid on n={}", g.n()));
        }
    }
    let mut dim0 = 0;
    for seed in 0..500u64 {
        let n = rng.gen_range(1..=40);
        let m = rng.gen_range(0..=(2 * n).min(n * (n - 1) / 2));
        let g = generate(&GraphKind::Random { n, m, seed }).unwrap();
        let col = star_coloring_greedy(&g);
        if !star_coloring_ok(&g, &col.colors) {
            bad.push(format!("greedy invalid, seed {seed}"));
            continue;
        }
        let part = edge_partition(&g, &col).unwrap();
        let mut covered: Vec<(usize, usize)> = part.classes.iter().flat_map(|c| c.edges.iter().copied()).collect();
        covered.sort_unstable();
        let mut edges = g.edges();
        edges.sort_unstable();
        if covered != edges {
            bad.push(format!("edge partition does not cover E exactly, seed {seed}"));
        }
        if part.classes.iter().any(|c| c.forest.validate(&g).is_err()) {
            bad.push(format!("class forest invalid, seed {seed}"));
        }
        if dimension(&g, &part).value == 0 {
            dim0 += 1;
            if g.max_degree() > 3 * col.k * col.k {
                bad.push(format!("dimension 0 with degree above 3k^2, seed {seed}"));
            }
        }
    }
    line(
        bad.is_empty(),
        format!("P4 = {bp4}, C4 = {bc4}; greedy >= optimum on {} small graphs; 500 random graphs verified ({dim0} of dimension 0); {} failures{}", small.len(), bad.len(), first_failure(&bad)),
    )
}

fn criterion_9() -> Line {
    let start = Instant::now();
    let params = BoundParams { t: 3, ..Default::default() };
    let (mut in_class, mut refuted, mut skipped, mut oracle) = (0, 0, 0, 0);
    let mut bad = Vec::new();
    let mut dims = [0usize; 4];
    let mut seed = 0u64;
    while in_class < 50 && seed < 400 {
        let g = random_instance(seed, 18);
        seed += 1;
        let certified = match class_membership(&g, 3, 300_000).unwrap() {
            Membership::InClass => true,
            Membership::NotInClass(_) => false,
            // treewidth at most 2 rules out both K_{3,3} and W_{3x3} as minors
            Membership::Unknown => exact_treewidth(&g, 18).map(|e| e.width <= 2).unwrap_or(false),
        };
        match treewidth_bound_pipeline(&g, &params, 300_000) {
            Ok(r) => {
                if !certified {
                    skipped += 1;
                    continue;
                }
                in_class += 1;
                dims[r.dimension.min(3)] += 1;
                if td_ok(&g, &r.td) != Some(r.reported_width) {
                    bad.push(format!("seed {}: decomposition fails", seed - 1));
                }
                if g.n() <= 12 {
                    oracle += 1;
                    let ex = exact_treewidth(&g, 12).unwrap().width;
                    if r.reported_width < ex {
                        bad.push(format!("seed {}: width below exact", seed - 1));
                    }
                }
                let complete = !r.trace.is_empty()
                    && r.trace[0].achieved_width == r.reported_width
                    && r.trace.iter().all(|l| {
                        l.dimension == 0
                            || (l.chosen_pair.is_some()
                                && l.contracted_n.is_some()
                                && l.lifted_r.is_some()
                                && l.separator_bound_d.is_some())
                    });
                if !complete {
                    bad.push(format!("seed {}: incomplete trace", seed - 1));
                }
            }
            Err(PipelineError::Refuted(model)) => {
                refuted += 1;
                if !verify_model(&g, &model).unwrap().valid {
                    bad.push(format!("seed {}: refutation model does not verify", seed - 1));
                }
            }
            Err(e) => bad.push(format!("seed {}: {e}", seed - 1)),
        }
    }
    let el = start.elapsed();
    line(
        bad.is_empty() && in_class >= 50 && within(el, 300),
        format!(
            "{in_class} in-class instances (dimension 0/1/2/3+: {dims:?}), {oracle} checked against the exact oracle, {refuted} refutations with verified models, {skipped} undecided skipped, {} failures, {el:.1?}{}",
            bad.len(),
            first_failure(&bad)
        ),
    )
}

fn criterion_10() -> Line {
    let run_once = |dir: &std::path::Path| -> Vec<Vec<u8>> {
        let p = |name: &str| dir.join(name).to_string_lossy().into_owned();
        let cmds: Vec<Vec<String>> = vec![
            vec!["gen", "--kind", "random", "--n", "16", "--m", "24", "--seed", "5", "-o", &p("g.txt")],
            vec!["gen", "--kind", "caterpillar", "--x", "8", "-o", &p("cat.txt")],
            vec![
                "separate",
                "--graph",
                &p("cat.txt"),
                "--a",
                "0",
                "--b",
                "9",
                "--q",
                "2",
                "-o",
                &p("sep.json"),
                "--trace",
                &p("trace.jsonl"),
            ],
            vec!["balanced-sep", "--graph", &p("g.txt"), "--q", "3", "-o", &p("bal.json")],
            vec!["decompose", "--graph", &p("g.txt"), "-o", &p("dec.json"), "--pace", &p("dec.td")],
            vec!["bound", "--n", "1e6", "-o", &p("bound.json")],
        ]
        .into_iter()
        .map(|c| c.into_iter().map(String::from).collect())
        .collect();
        for c in cmds {
            let argv = ["slimtw", "--format", "json"].into_iter().map(String::from).chain(c);
            let _ = slimtw::cli::run(argv);
        }
        ["g.txt", "cat.txt", "sep.json", "trace.jsonl", "bal.json", "dec.json", "dec.td", "bound.json"]
            .iter()
            .map(|f| std::fs::read(dir.join(f)).unwrap_or_default())
            .collect()
    };
    let d1 = tempfile::tempdir().unwrap();
    let d2 = tempfile::tempdir().unwrap();
    let (a, b) = (run_once(d1.path()), run_once(d2.path()));
    let nonempty = a.iter().all(|f| !f.is_empty());
    // Library-level: the same seeded separator run serialised twice.
    let lib = || {
        let g = random_instance(11, 25);
        let mut eng = SlimEngine::new(slim_params(1, 3, 4), contraction_provider);
        let w = WeightFunction::uniform(g.n());
        let out = eng.balanced_separator(&g, &w, &first_active_forest(&g)).unwrap();
        serde_json::to_string(&out).unwrap() + &eng.trace_jsonl()
    };
    let lib_same = lib() == lib();
    line(
        a == b && nonempty && lib_same,
        format!(
            "{} CLI artifacts byte-identical across two runs: {}; library outputs identical: {lib_same}",
            a.len(),
            a == b && nonempty
        ),
    )
}

fn main() {
    let mut lines: Vec<(u8, Line)> = Vec::new();
    let mut documented_red6 = false;
    let mut record = |k: u8, l: Line| {
        println!("criterion {k}: {} — {}", if l.pass { "PASS" } else { "FAIL" }, l.detail);
        lines.push((k, l));
    };
    record(1, criterion_1());
    record(2, criterion_2());
    let (c3, c4) = criterion_3_and_4();
    record(3, c3);
    record(4, c4);
    record(5, criterion_5());
    let (c6, doc6) = criterion_6();
    documented_red6 |= doc6;
    record(6, c6);
    record(7, criterion_7());
    record(8, criterion_8());
    record(9, criterion_9());
    record(10, criterion_10());

    let mut unexpected = Vec::new();
    for (k, l) in &lines {
        let known = KNOWN_RED.iter().find(|(c, _)| c == k);
        match (l.pass, known) {
            (true, _) => {}
            (false, Some((6, why))) if documented_red6 => println!("  known red {k}: {why}"),
            (false, _) => unexpected.push(*k),
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria PASS except documented reds");
    } else {
        println!("acceptance: unexpected FAIL in criteria {unexpected:?}");
        std::process::exit(1);
    }
}
