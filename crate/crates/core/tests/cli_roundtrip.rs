use std::path::Path;
use std::process::{Command, Output};

fn slimtw(args: &[&str], env_budget: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_slimtw"));
    c.args(args).env_remove("SLIMTW_BUDGET");
    if let Some(b) = env_budget {
        c.env("SLIMTW_BUDGET", b);
    }
    c.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap_or(-1)
}

fn p(dir: &Path, f: &str) -> String {
    dir.join(f).to_string_lossy().into_owned()
}

fn verify(dir: &Path, graph: &str, artifact: &str) {
    let o = slimtw(&["verify", "--graph", &p(dir, graph), "--artifact", &p(dir, artifact)], None);
    assert_eq!(code(&o), 0, "{artifact}: {}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn every_artifact_reverifies() {
    let d = tempfile::tempdir().unwrap();
    let dir = d.path();
    for (args, file) in [
        (vec!["gen", "--kind", "caterpillar", "--x", "8"], "cat.txt"),
        (vec!["gen", "--kind", "bipartite", "--s", "3", "--t", "3"], "k33.txt"),
        (vec!["gen", "--kind", "cycle", "--n", "8"], "c8.txt"),
        (vec!["gen", "--kind", "caterpillar", "--x", "30"], "cat30.txt"),
        (vec!["gen", "--kind", "random", "--n", "14", "--m", "20", "--seed", "3"], "rnd.txt"),
    ] {
        let mut a = args.clone();
        let out = p(dir, file);
        a.extend(["-o", &out]);
        assert_eq!(code(&slimtw(&a, None)), 0);
    }
    // (arguments, artifact, graph, expected exit)
    let cases: Vec<(Vec<String>, &str, &str, i32)> = vec![
        (vec!["separate", "--graph", &p(dir, "cat.txt"), "--a", "0", "--b", "9", "--q", "2"], "sep.json", "cat.txt", 0),
        (
            vec!["mine", "--graph", &p(dir, "cat.txt"), "--a", "0", "--b", "9", "--q", "2", "--x", "3"],
            "mine.json",
            "cat.txt",
            0,
        ),
        (
            vec!["basket", "--graph", &p(dir, "cat.txt"), "--a", "0", "--b", "9", "--q", "2"],
            "basket.json",
            "cat.txt",
            0,
        ),
        (
            vec![
                "barrier",
                "--graph",
                &p(dir, "cat30.txt"),
                "--a",
                "0",
                "--b",
                "31",
                "--caterpillar",
                "30",
                "--t",
                "1",
            ],
            "barrier.json",
            "cat30.txt",
            0,
        ),
        (vec!["balanced-sep", "--graph", &p(dir, "rnd.txt"), "--q", "3"], "bal.json", "rnd.txt", 0),
        (vec!["decompose", "--graph", &p(dir, "rnd.txt")], "dec.json", "rnd.txt", 0),
        (vec!["tw-exact", "--graph", &p(dir, "rnd.txt")], "tw.json", "rnd.txt", 0),
        (vec!["clique", "--graph", &p(dir, "c8.txt"), "--t", "3"], "clique.json", "c8.txt", 0),
        (vec!["slim", "--graph", &p(dir, "c8.txt"), "--a", "0", "--b", "4", "--s", "3"], "slim.json", "c8.txt", 0),
        (vec!["slim", "--graph", &p(dir, "c8.txt"), "--t", "2", "--s", "3"], "tq.json", "c8.txt", 0),
        (vec!["check-minor", "--graph", &p(dir, "c8.txt"), "--t", "3"], "free.json", "c8.txt", 0),
        (vec!["check-minor", "--graph", &p(dir, "k33.txt"), "--t", "3"], "model.json", "k33.txt", 1),
        (vec!["slim", "--graph", &p(dir, "k33.txt"), "--t", "2", "--s", "3"], "wide.json", "k33.txt", 1),
    ]
    .into_iter()
    .map(|(a, f, g, c)| (a.into_iter().map(String::from).collect(), f, g, c))
    .collect();
    for (mut args, artifact, graph, expected) in cases {
        let out = p(dir, artifact);
        args.extend(["-o".to_string(), out]);
        let argv: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = slimtw(&argv, None);
        assert_eq!(code(&o), expected, "{argv:?}: {}", String::from_utf8_lossy(&o.stderr));
        verify(dir, graph, artifact);
    }
    // PACE output verifies as well, and a bound artifact needs no graph.
    assert_eq!(code(&slimtw(&["decompose", "--graph", &p(dir, "cat.txt"), "--pace", &p(dir, "cat.td")], None)), 0);
    verify(dir, "cat.txt", "cat.td");
    assert_eq!(code(&slimtw(&["bound", "--n", "65536", "-o", &p(dir, "bound.json")], None)), 0);
    assert_eq!(code(&slimtw(&["verify", "--artifact", &p(dir, "bound.json")], None)), 0);
}

#[test]
fn tampered_artifacts_are_rejected() {
    let d = tempfile::tempdir().unwrap();
    let dir = d.path();
    slimtw(&["gen", "--kind", "path", "--n", "6", "-o", &p(dir, "p6.txt")], None);
    std::fs::write(p(dir, "bad.json"), r#"{"kind":"separator","a":0,"b":5,"separator":[]}"#).unwrap();
    let o = slimtw(&["verify", "--graph", &p(dir, "p6.txt"), "--artifact", &p(dir, "bad.json")], None);
    assert_eq!(code(&o), 1);
    std::fs::write(p(dir, "junk.json"), "{not json").unwrap();
    let o = slimtw(&["verify", "--graph", &p(dir, "p6.txt"), "--artifact", &p(dir, "junk.json")], None);
    assert_eq!(code(&o), 2);
}

#[test]
fn documented_cli_usage() {
    let d = tempfile::tempdir().unwrap();
    let dir = d.path();
    let a = slimtw(&["gen", "--kind", "hex", "--t", "2"], None);
    let b = slimtw(&["gen", "--kind", "hex", "--t", "2"], None);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stdout).starts_with("16 19\n"));

    slimtw(&["gen", "--kind", "complete", "--n", "4", "-o", &p(dir, "k4.txt")], None);
    let o = slimtw(&["tw-exact", "--graph", &p(dir, "k4.txt")], None);
    assert_eq!(String::from_utf8_lossy(&o.stdout).trim(), "3");
}

#[test]
fn budget_and_config_precedence() {
    let d = tempfile::tempdir().unwrap();
    let dir = d.path();
    slimtw(&["gen", "--kind", "bipartite", "--s", "3", "--t", "3", "-o", &p(dir, "k33.txt")], None);
    let g = p(dir, "k33.txt");
    // tiny budget from the environment → exit 3
    assert_eq!(code(&slimtw(&["check-minor", "--graph", &g, "--t", "3"], Some("1"))), 3);
    // the flag overrides the environment
    assert_eq!(code(&slimtw(&["check-minor", "--graph", &g, "--t", "3", "--budget", "1000000"], Some("1"))), 1);
    // config values apply, flags override them
    std::fs::write(p(dir, "cfg.json"), r#"{"t": 2, "budget": 1000000}"#).unwrap();
    let cfg = p(dir, "cfg.json");
    let o = slimtw(&["--config", &cfg, "clique", "--graph", &g], Some("1"));
    assert_eq!(code(&o), 1, "K_{{3,3}} has a 2-clique");
    assert_eq!(code(&slimtw(&["--config", &cfg, "clique", "--graph", &g, "--t", "3"], None)), 0);
    // usage errors
    assert_eq!(code(&slimtw(&["gen", "--kind", "random", "--n", "5", "--m", "2"], None)), 2);
    assert_eq!(code(&slimtw(&["separate", "--graph", &p(dir, "missing.txt"), "--a", "0", "--b", "1"], None)), 2);
}
