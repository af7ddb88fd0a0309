//! Twin classes, late-set degeneracy orderings, the second-neighbourhood
//! extraction and good-pair sampling behind the linear edge bound for
//! bipartite `K_{t,t}`-induced-minor-free graphs.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::minors::MinorModel;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BipartiteError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("invalid bipartition: {0}")]
    BadBipartition(String),
    #[error("sampling needs delta >= 2, got {0}")]
    DeltaTooSmall(usize),
    #[error("A'' must be a subset of A")]
    NotInA,
    #[error("vertices {0} and {1} of B are twins")]
    TwinsInB(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a: VertexSet,
    pub b: VertexSet,
}

impl Bipartition {
    pub fn validate(&self, g: &Graph) -> Result<(), BipartiteError> {
        g.check_set(&self.a)?;
        g.check_set(&self.b)?;
        if !self.a.is_disjoint(&self.b) || self.a.len() + self.b.len() != g.n() {
            return Err(BipartiteError::BadBipartition("sides must partition V(G)".into()));
        }
        if !g.is_stable(&self.a) || !g.is_stable(&self.b) {
            return Err(BipartiteError::BadBipartition("a side contains an edge".into()));
        }
        Ok(())
    }
}

/// `N(u) \ {v} = N(v) \ {u}`.
pub fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |x: usize, y: usize| g.neighbors(x).iter().copied().filter(move |&w| w != y);
    u != v && strip(u, v).eq(strip(v, u))
}

/// Twin classes, each sorted, ordered by least member.
pub fn twin_classes(g: &Graph) -> Vec<VertexSet> {
    // Non-adjacent twins share N(v); adjacent twins share N[v]. No vertex has both kinds.
    let mut by_key: BTreeMap<(bool, Vec<usize>), VertexSet> = BTreeMap::new();
    let mut class_of = vec![usize::MAX; g.n()];
    for v in 0..g.n() {
        let open = g.neighbors(v).to_vec();
        let mut closed = open.clone();
        closed.insert(closed.binary_search(&v).unwrap_err(), v);
        by_key.entry((false, open)).or_default().insert(v);
        by_key.entry((true, closed)).or_default().insert(v);
    }
    let mut classes: Vec<VertexSet> = Vec::new();
    for set in by_key.into_values().filter(|s| s.len() > 1) {
        let id = classes.len();
        for v in set.iter() {
            class_of[v] = id;
        }
        classes.push(set);
    }
    let mut out: Vec<VertexSet> = classes;
    for v in 0..g.n() {
        if class_of[v] == usize::MAX {
            out.push(VertexSet::singleton(v));
        }
    }
    out.sort_by_key(|s| s.first());
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenerateOrdering {
    pub order: Vec<usize>,
    pub degeneracy: usize,
}

impl DegenerateOrdering {
    /// Largest number of later neighbours of any vertex.
    pub fn forward_degree(&self, g: &Graph) -> usize {
        let mut pos = vec![0; g.n()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        (0..g.n()).map(|v| g.neighbors(v).iter().filter(|&&w| pos[w] > pos[v]).count()).max().unwrap_or(0)
    }
}

/// Classic min-degree peeling value.
pub fn degeneracy(g: &Graph) -> usize {
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut best = 0;
    for _ in 0..g.n() {
        let v = (0..g.n()).filter(|&v| alive[v]).min_by_key(|&v| (deg[v], v)).expect("vertex left");
        best = best.max(deg[v]);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    best
}

/// Peels vertices of remaining degree at most the degeneracy, taking vertices outside
/// `late` whenever one qualifies, so that `late` vertices appear as late as possible.
pub fn degeneracy_ordering(g: &Graph, late: &VertexSet) -> DegenerateOrdering {
    let d = degeneracy(g);
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut alive = vec![true; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = (0..g.n())
            .filter(|&v| alive[v] && deg[v] <= d)
            .min_by_key(|&v| (late.contains(v), deg[v], v))
            .expect("a vertex of degree at most the degeneracy always remains");
        order.push(v);
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
    }
    DegenerateOrdering { order, degeneracy: d }
}

/// The sets produced on the way from `G` to `G″ = G[A″ ∪ B″]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub ordering: DegenerateOrdering,
    /// `B ∩ {v_s, …, v_n}` where `v_s` is the first vertex of `A`.
    pub b1: VertexSet,
    pub a1: Vec<usize>,
    pub a2: VertexSet,
    pub b2: VertexSet,
}

/// Runs the ordering, removes `B_1`, then greedily collects `a_1, …, a_k` whose
/// second neighbourhood (after deleting earlier closed neighbourhoods) has at most `r` vertices.
pub fn extract(g: &Graph, bip: &Bipartition, r: usize) -> Result<Extraction, BipartiteError> {
    bip.validate(g)?;
    let ordering = degeneracy_ordering(g, &bip.a);
    let s = ordering.order.iter().position(|&v| bip.a.contains(v)).unwrap_or(g.n());
    let b1: VertexSet = ordering.order[s..].iter().copied().filter(|&v| bip.b.contains(v)).collect();
    let mut alive = vec![true; g.n()];
    for v in b1.iter() {
        alive[v] = false;
    }
    let b_prime = bip.b.difference(&b1);
    let mut a1 = Vec::new();
    let mut removed = alive.clone();
    loop {
        let pick = bip.a.iter().filter(|v| !a1.contains(v)).find(|&v| second_nbhd_size(g, &removed, v) <= r);
        match pick {
            Some(v) => {
                a1.push(v);
                removed[v] = false;
                for &w in g.neighbors(v) {
                    removed[w] = false;
                }
            }
            None => break,
        }
    }
    let a2: VertexSet = bip.a.iter().filter(|v| !a1.contains(v)).collect();
    let mut n_a1 = VertexSet::new();
    for &v in &a1 {
        for &w in g.neighbors(v) {
            if alive[w] {
                n_a1.insert(w);
            }
        }
    }
    let b2 = b_prime.difference(&n_a1);
    Ok(Extraction { ordering, b1, a1, a2, b2 })
}

fn second_nbhd_size(g: &Graph, alive: &[bool], v: usize) -> usize {
    let mut first = vec![false; g.n()];
    for &w in g.neighbors(v) {
        if alive[w] {
            first[w] = true;
        }
    }
    let mut second = VertexSet::new();
    for &w in g.neighbors(v) {
        if alive[w] {
            for &x in g.neighbors(w) {
                if alive[x] && x != v && !first[x] {
                    second.insert(x);
                }
            }
        }
    }
    second.len()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodPairGraph {
    /// The sample `X*`; Γ vertex `i` is `sample[i]`.
    pub sample: Vec<usize>,
    pub gamma_edges: Vec<(usize, usize)>,
    /// One `b` with `N(b) ∩ X* = {u, v}` per Γ edge, keyed by host vertices.
    pub witnesses: BTreeMap<(usize, usize), usize>,
}

impl GoodPairGraph {
    pub fn gamma(&self) -> Graph {
        Graph::from_edges(self.sample.len(), &self.gamma_edges).expect("edges are distinct pairs")
    }

    /// Γ as an induced minor of `G`: `{u}` plus the witnesses folded into their smaller end.
    pub fn model(&self) -> MinorModel {
        let mut sets: Vec<VertexSet> = self.sample.iter().map(|&u| VertexSet::singleton(u)).collect();
        for (&(u, _), &b) in &self.witnesses {
            let i = self.sample.binary_search(&u).expect("witness ends are sampled");
            sets[i].insert(b);
        }
        MinorModel { pattern: self.gamma(), branch_sets: sets }
    }
}

/// Γ on a given sample: `uv` is an edge iff some `b ∈ b_pool` has `N(b) ∩ X* = {u, v}`.
pub fn good_pair_graph_on(g: &Graph, b_pool: &VertexSet, sample: &VertexSet) -> GoodPairGraph {
    let xs = sample.to_vec();
    let mut witnesses = BTreeMap::new();
    for b in b_pool.iter() {
        let hit: Vec<usize> = g.neighbors(b).iter().copied().filter(|&v| sample.contains(v)).collect();
        if let [u, v] = hit[..] {
            witnesses.entry((u, v)).or_insert(b);
        }
    }
    let idx = |v: usize| xs.binary_search(&v).expect("sampled");
    let gamma_edges = witnesses.keys().map(|&(u, v)| (idx(u), idx(v))).collect();
    GoodPairGraph { sample: xs, gamma_edges, witnesses }
}

/// Samples each vertex of `A″` independently with probability `1/Δ` and builds Γ over `B`.
pub fn good_pair_graph(
    g: &Graph,
    bip: &Bipartition,
    a2: &VertexSet,
    delta: usize,
    seed: u64,
) -> Result<GoodPairGraph, BipartiteError> {
    bip.validate(g)?;
    if delta < 2 {
        return Err(BipartiteError::DeltaTooSmall(delta));
    }
    if !a2.is_subset(&bip.a) {
        return Err(BipartiteError::NotInA);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = 1.0 / delta as f64;
    let sample: VertexSet = a2.iter().filter(|_| rng.gen::<f64>() < p).collect();
    Ok(good_pair_graph_on(g, &bip.b, &sample))
}

/// `2^{40Δ²Δ′}Δ + (Δ+1)Δ`, saturating to infinity.
pub fn edge_factor(delta: f64, delta_prime: f64) -> f64 {
    2f64.powf(40.0 * delta * delta * delta_prime) * delta + (delta + 1.0) * delta
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeBoundReport {
    pub edges: usize,
    pub bound: f64,
    pub pass: bool,
    pub twin_violations: Vec<(usize, usize)>,
}

/// Twin pairs inside `B`.
pub fn twins_in(g: &Graph, side: &VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for class in twin_classes(g) {
        let inside: Vec<usize> = class.iter().filter(|&v| side.contains(v)).collect();
        for i in 0..inside.len() {
            for j in i + 1..inside.len() {
                out.push((inside[i], inside[j]));
            }
        }
    }
    out
}

/// `|E(G)| ≤ f_bound·|A|`, requiring `B` twin-free.
pub fn check_edge_bound(g: &Graph, bip: &Bipartition, f_bound: f64) -> Result<EdgeBoundReport, BipartiteError> {
    bip.validate(g)?;
    if let Some(&(u, v)) = twins_in(g, &bip.b).first() {
        return Err(BipartiteError::TwinsInB(u, v));
    }
    let bound = f_bound * bip.a.len() as f64;
    let edges = g.m();
    Ok(EdgeBoundReport { edges, bound, pass: edges as f64 <= bound, twin_violations: Vec::new() })
}
