//! Barriers, mineable certificates, ψ-distance layering, and the passage from
//! a mineable pair to one good barrier.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    components_of_set, components_within, connected_within, delete_vertices, is_anticomplete, is_separator,
    neighborhood, Graph, GraphError, VertexSet,
};

/// Default cap on path-extension steps when verifying a barrier.
pub const DEFAULT_PATH_BUDGET: u64 = 20_000_000;
/// Default cap on label-set states explored while computing `d_a`.
pub const DEFAULT_STATE_BUDGET: usize = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BarrierError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("barrier sets {0} and {1} overlap")]
    Overlap(&'static str, &'static str),
    #[error("vertex {0} lies in the barrier")]
    EndpointInBarrier(usize),
    #[error("path enumeration exceeded {0} steps")]
    PathBudget(u64),
    #[error("distance computation exceeded {0} states")]
    StateBudget(usize),
    #[error("barrier fails verification: {0:?}")]
    NotABarrier(BarrierViolation),
    #[error("barrier does not separate {0} from {1}")]
    DoesNotSeparate(usize, usize),
    #[error("certificate fails verification: {0:?}")]
    BadCertificate(MineViolation),
    #[error("insufficient mineability: {0}")]
    InsufficientMineability(String),
    #[error("only {surviving} of {formed} barriers survive the size filter, {required} required")]
    TooFewBarriers { formed: usize, surviving: usize, required: usize },
    #[error("no barriers given")]
    NoBarriers,
    #[error("barriers {0} and {1} are not anticomplete")]
    NotAnticomplete(usize, usize),
    #[error("barriers disagree on C")]
    MixedC,
    #[error("internal guard failed: {0}")]
    Internal(String),
}

/// A `(t,p)`-barrier `(X, Y, Z, C)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Barrier {
    #[serde(rename = "X")]
    pub x: VertexSet,
    #[serde(rename = "Y")]
    pub y: VertexSet,
    #[serde(rename = "Z")]
    pub z: VertexSet,
    #[serde(rename = "C")]
    pub c: VertexSet,
    pub t: usize,
    pub p: usize,
}

impl Barrier {
    /// `X ∪ Y ∪ Z`.
    pub fn body(&self) -> VertexSet {
        self.x.union(&self.y).union(&self.z)
    }

    pub fn all(&self) -> VertexSet {
        self.body().union(&self.c)
    }

    fn check_disjoint(&self) -> Result<(), BarrierError> {
        let named = [("X", &self.x), ("Y", &self.y), ("Z", &self.z), ("C", &self.c)];
        for i in 0..4 {
            for j in i + 1..4 {
                if !named[i].1.is_disjoint(named[j].1) {
                    return Err(BarrierError::Overlap(named[i].0, named[j].0));
                }
            }
        }
        Ok(())
    }

    /// Re-expresses the barrier in the indices of an induced subgraph.
    pub fn localize(&self, sub: &crate::graph::Subgraph) -> Barrier {
        Barrier {
            x: sub.localize(&self.x),
            y: sub.localize(&self.y),
            z: sub.localize(&self.z),
            c: sub.localize(&self.c),
            t: self.t,
            p: self.p,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum BarrierViolation {
    /// Condition 1: a minimal `X`–`Z` path with an interior vertex outside `Y`.
    InteriorOutsideY { path: Vec<usize> },
    /// Condition 2: an `X`–`Z` path whose neighbourhood meets fewer than `t` components of `C`.
    TooFewComponents { path: Vec<usize>, touched: usize },
    /// Condition 3: a component of `C` with more than `p` vertices.
    ComponentTooLarge { component: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BarrierReport {
    pub valid: bool,
    pub violation: Option<BarrierViolation>,
}

pub fn verify_barrier(g: &Graph, b: &Barrier) -> Result<BarrierReport, BarrierError> {
    verify_barrier_with_budget(g, b, DEFAULT_PATH_BUDGET)
}

struct PathWalk<'a> {
    g: &'a Graph,
    /// 0 = forbidden, 1 = interior allowed, 2 = target (Z).
    role: Vec<u8>,
    comp: Vec<usize>,
    steps: u64,
    budget: u64,
}

const NO_COMP: usize = usize::MAX;

impl PathWalk<'_> {
    fn tick(&mut self) -> Result<(), BarrierError> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(BarrierError::PathBudget(self.budget))
        } else {
            Ok(())
        }
    }

    /// Induced paths from `path[0]` through role-1 vertices to a role-2 vertex; calls `hit`
    /// on each, stopping when it returns true. `prune` cuts partial paths.
    fn walk(
        &mut self,
        path: &mut Vec<usize>,
        touch: &mut Vec<u32>,
        hit: &mut dyn FnMut(&[usize]) -> bool,
        prune: &dyn Fn(&[usize]) -> bool,
    ) -> Result<bool, BarrierError> {
        self.tick()?;
        let last = *path.last().expect("non-empty path");
        if prune(path) {
            return Ok(false);
        }
        let nbrs: Vec<usize> = self.g.neighbors(last).to_vec();
        // A Z-neighbour of the last vertex must end the path (otherwise a chord appears).
        let mut ends = false;
        for &v in &nbrs {
            if self.role[v] == 2 {
                ends = true;
                if touch[v] == 1 {
                    path.push(v);
                    let stop = hit(path);
                    path.pop();
                    if stop {
                        return Ok(true);
                    }
                }
            }
        }
        if ends {
            return Ok(false);
        }
        for &v in &nbrs {
            if self.role[v] != 1 || touch[v] != 1 || path.contains(&v) {
                continue;
            }
            path.push(v);
            bump(self.g, touch, v, 1);
            let stop = self.walk(path, touch, hit, prune)?;
            bump(self.g, touch, v, -1);
            path.pop();
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn from_each(
        &mut self,
        starts: &VertexSet,
        hit: &mut dyn FnMut(&[usize]) -> bool,
        prune: &dyn Fn(&[usize]) -> bool,
    ) -> Result<bool, BarrierError> {
        for x in starts.iter() {
            let mut touch = vec![0u32; self.g.n()];
            bump(self.g, &mut touch, x, 1);
            let mut path = vec![x];
            if self.walk(&mut path, &mut touch, hit, prune)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn touched(&self, path: &[usize]) -> BTreeSet<usize> {
        let mut s = BTreeSet::new();
        for &v in path {
            for &w in self.g.neighbors(v) {
                if self.comp[w] != NO_COMP {
                    s.insert(self.comp[w]);
                }
            }
        }
        s
    }
}

fn bump(g: &Graph, touch: &mut [u32], v: usize, d: i32) {
    for &w in g.neighbors(v) {
        touch[w] = (touch[w] as i32 + d) as u32;
    }
}

/// Exhaustive check of the three barrier conditions. Minimal `X`–`Z` paths
/// (interior avoiding `X ∪ Z ∪ C`) suffice for both path conditions.
pub fn verify_barrier_with_budget(g: &Graph, b: &Barrier, budget: u64) -> Result<BarrierReport, BarrierError> {
    for s in [&b.x, &b.y, &b.z, &b.c] {
        g.check_set(s)?;
    }
    b.check_disjoint()?;
    let fail = |v| Ok(BarrierReport { valid: false, violation: Some(v) });
    let comps = components_of_set(g, &b.c);
    if let Some(big) = comps.iter().find(|k| k.len() > b.p) {
        return fail(BarrierViolation::ComponentTooLarge { component: big.to_vec() });
    }
    let n = g.n();
    let mut comp = vec![NO_COMP; n];
    for (i, k) in comps.iter().enumerate() {
        for v in k.iter() {
            comp[v] = i;
        }
    }
    let mut role = vec![1u8; n];
    for v in b.x.iter().chain(b.c.iter()) {
        role[v] = 0;
    }
    for v in b.z.iter() {
        role[v] = 2;
    }
    let mut walk = PathWalk { g, role, comp, steps: 0, budget };

    let mut bad: Option<Vec<usize>> = None;
    walk.from_each(
        &b.x,
        &mut |p: &[usize]| {
            if p[1..p.len() - 1].iter().any(|&v| !b.y.contains(v)) {
                bad = Some(p.to_vec());
                true
            } else {
                false
            }
        },
        &|_| false,
    )?;
    if let Some(path) = bad {
        return fail(BarrierViolation::InteriorOutsideY { path });
    }

    if b.t > 0 {
        for v in 0..n {
            if walk.role[v] == 1 && !b.y.contains(v) {
                walk.role[v] = 0;
            }
        }
        let comp_of = walk.comp.clone();
        let t = b.t;
        let touched = move |p: &[usize]| {
            let mut s = BTreeSet::new();
            for &v in p {
                for &w in g.neighbors(v) {
                    if comp_of[w] != NO_COMP {
                        s.insert(comp_of[w]);
                    }
                }
            }
            s.len()
        };
        let prune = |p: &[usize]| touched(p) >= t;
        let mut few: Option<Vec<usize>> = None;
        walk.from_each(
            &b.x,
            &mut |p: &[usize]| {
                if touched(p) < t {
                    few = Some(p.to_vec());
                    true
                } else {
                    false
                }
            },
            &prune,
        )?;
        if let Some(path) = few {
            let touched = walk.touched(&path).len();
            return fail(BarrierViolation::TooFewComponents { path, touched });
        }
    }
    Ok(BarrierReport { valid: true, violation: None })
}

/// Both `X ∪ C` and `Z ∪ C` separate `u` from `v`.
pub fn barrier_separates(g: &Graph, b: &Barrier, u: usize, v: usize) -> Result<bool, BarrierError> {
    let all = b.all();
    for w in [u, v] {
        if all.contains(w) {
            return Err(BarrierError::EndpointInBarrier(w));
        }
    }
    Ok(is_separator(g, &b.x.union(&b.c), u, v)? && is_separator(g, &b.z.union(&b.c), u, v)?)
}

/// Every component of `G[X ∪ Y ∪ Z]` meets both `X` and `Z`.
pub fn is_reduced(g: &Graph, b: &Barrier) -> bool {
    components_of_set(g, &b.body()).iter().all(|k| !k.is_disjoint(&b.x) && !k.is_disjoint(&b.z))
}

/// Keeps the components of `G[X ∪ Y ∪ Z]` that meet both `X` and `Z`.
pub fn reduce_barrier(g: &Graph, b: &Barrier, u: usize, v: usize) -> Result<Barrier, BarrierError> {
    let report = verify_barrier(g, b)?;
    if let Some(viol) = report.violation {
        return Err(BarrierError::NotABarrier(viol));
    }
    if !barrier_separates(g, b, u, v)? {
        return Err(BarrierError::DoesNotSeparate(u, v));
    }
    Ok(reduce_unchecked(g, b))
}

fn reduce_unchecked(g: &Graph, b: &Barrier) -> Barrier {
    let mut keep = VertexSet::new();
    for k in components_of_set(g, &b.body()) {
        if !k.is_disjoint(&b.x) && !k.is_disjoint(&b.z) {
            keep.extend_from(&k);
        }
    }
    Barrier {
        x: b.x.intersection(&keep),
        y: b.y.intersection(&keep),
        z: b.z.intersection(&keep),
        c: b.c.clone(),
        t: b.t,
        p: b.p,
    }
}

/// Witness that the pair `(a, b)` is `(x, y, z, p)`-mineable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MineCertificate {
    #[serde(rename = "Y_sets")]
    pub y_sets: Vec<VertexSet>,
    #[serde(rename = "X_sets")]
    pub x_sets: Vec<VertexSet>,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub p: usize,
}

impl MineCertificate {
    /// `C = ⋃ Y_i`.
    pub fn c(&self) -> VertexSet {
        let mut c = VertexSet::new();
        for y in &self.y_sets {
            c.extend_from(y);
        }
        c
    }

    /// Maps every set through `f` (e.g. into or out of an induced subgraph).
    pub fn map_sets(&self, f: impl Fn(&VertexSet) -> VertexSet) -> MineCertificate {
        MineCertificate {
            y_sets: self.y_sets.iter().map(&f).collect(),
            x_sets: self.x_sets.iter().map(&f).collect(),
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MineViolation {
    /// 0 = shape/disjointness, 1–6 = the numbered conditions.
    pub condition: u8,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MineReport {
    pub valid: bool,
    pub violation: Option<MineViolation>,
}

pub fn verify_mineable(g: &Graph, a: usize, b: usize, cert: &MineCertificate) -> Result<MineReport, BarrierError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    for s in cert.y_sets.iter().chain(cert.x_sets.iter()) {
        g.check_set(s)?;
    }
    let fail = |condition: u8, detail: String| {
        Ok(MineReport { valid: false, violation: Some(MineViolation { condition, detail }) })
    };
    let x = cert.x;
    if cert.y_sets.len() != x || cert.x_sets.len() != x {
        return fail(0, format!("expected {x} Y-sets and X-sets"));
    }
    if a == b {
        return fail(0, "a equals b".into());
    }
    for i in 0..x {
        if cert.y_sets[i].contains(a) || cert.y_sets[i].contains(b) {
            return fail(0, format!("Y_{} contains an end", i + 1));
        }
        for j in i + 1..x {
            if !cert.y_sets[i].is_disjoint(&cert.y_sets[j]) {
                return fail(0, format!("Y_{} and Y_{} share a vertex", i + 1, j + 1));
            }
        }
    }
    let mut earlier = VertexSet::new();
    for i in 0..x {
        let (yi, xi) = (&cert.y_sets[i], &cert.x_sets[i]);
        if xi.is_empty() {
            return fail(1, format!("X_{} is empty", i + 1));
        }
        let allowed = neighborhood(g, yi);
        if xi.contains(a) || xi.contains(b) || !xi.is_subset(&allowed) {
            return fail(1, format!("X_{} is not inside N(Y_{}) minus the ends", i + 1, i + 1));
        }
        if g.adjacent(a, b) {
            return fail(1, "a and b are adjacent".into());
        }
        let sep = yi.union(xi).union(&earlier);
        if !is_separator(g, &sep, a, b)? {
            return fail(1, format!("X'_{} does not separate a from b", i + 1));
        }
        earlier.extend_from(yi);
    }
    let mut alive = vec![true; g.n()];
    for v in earlier.iter() {
        alive[v] = false;
    }
    if !connected_within(g, &alive, a, b) {
        return fail(2, "a and b are separated by the union of the Y_i".into());
    }
    for i in 0..x {
        for j in i + 1..x {
            if !is_anticomplete(g, &cert.y_sets[i], &cert.y_sets[j]) {
                return fail(3, format!("Y_{} and Y_{} are not anticomplete", i + 1, j + 1));
            }
        }
    }
    for (i, yi) in cert.y_sets.iter().enumerate() {
        let comps = components_of_set(g, yi);
        if comps.len() > cert.y {
            return fail(4, format!("Y_{} has {} components", i + 1, comps.len()));
        }
        if let Some(k) = comps.iter().find(|k| k.len() > cert.p) {
            return fail(5, format!("Y_{} has a component of size {}", i + 1, k.len()));
        }
    }
    let mut load = vec![0usize; g.n()];
    for i in 0..x {
        for v in cert.y_sets[i].union(&cert.x_sets[i]).iter() {
            load[v] += 1;
            if load[v] > cert.z {
                return fail(6, format!("vertex {v} lies in more than {} of the X'_i", cert.z));
            }
        }
    }
    Ok(MineReport { valid: true, violation: None })
}

fn require_valid(g: &Graph, a: usize, b: usize, cert: &MineCertificate) -> Result<(), BarrierError> {
    match verify_mineable(g, a, b, cert)?.violation {
        Some(v) => Err(BarrierError::BadCertificate(v)),
        None => Ok(()),
    }
}

/// `d_a` over `G \ C` with respect to the certificate's `X_i`, plus the `ψ` count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceOracle {
    /// `None` for `∞` and for vertices of `C`.
    pub dist: Vec<Option<usize>>,
    /// Indices `i` (0-based) with `v ∈ X_i`.
    pub labels: Vec<Vec<usize>>,
    pub c: VertexSet,
}

impl DistanceOracle {
    /// `ψ(W)`: number of `X_i` met by `W`.
    pub fn psi(&self, w: &[usize]) -> usize {
        let mut s = BTreeSet::new();
        for &v in w {
            s.extend(self.labels[v].iter().copied());
        }
        s.len()
    }

    /// `S_j`: vertices of `⋃X_i` at distance exactly `j`.
    pub fn layer(&self, j: usize) -> VertexSet {
        (0..self.dist.len()).filter(|&v| !self.labels[v].is_empty() && self.dist[v] == Some(j)).collect()
    }
}

fn is_subset_sorted(a: &[u32], b: &[u32]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.by_ref().any(|y| y == x))
}

fn merge(a: &[u32], b: &[usize]) -> Vec<u32> {
    let mut out: Vec<u32> = a.to_vec();
    for &x in b {
        if let Err(p) = out.binary_search(&(x as u32)) {
            out.insert(p, x as u32);
        }
    }
    out
}

/// Exact `d_a(v) = min ψ(P)` over `a`–`v` paths in `G \ C`: a best-first search over
/// (vertex, set of `X_i` met) states with subset dominance.
pub fn distance_layers(g: &Graph, a: usize, b: usize, cert: &MineCertificate) -> Result<DistanceOracle, BarrierError> {
    distance_layers_with_budget(g, a, b, cert, DEFAULT_STATE_BUDGET)
}

pub fn distance_layers_with_budget(
    g: &Graph,
    a: usize,
    b: usize,
    cert: &MineCertificate,
    budget: usize,
) -> Result<DistanceOracle, BarrierError> {
    require_valid(g, a, b, cert)?;
    let n = g.n();
    let c = cert.c();
    let mut labels = vec![Vec::new(); n];
    for (i, xi) in cert.x_sets.iter().enumerate() {
        for v in xi.iter() {
            labels[v].push(i);
        }
    }
    let mut dist = vec![None; n];
    let mut settled: Vec<Vec<Vec<u32>>> = vec![Vec::new(); n];
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((labels[a].len(), a, merge(&[], &labels[a]))));
    let mut states = 0usize;
    while let Some(Reverse((cost, v, set))) = heap.pop() {
        if settled[v].iter().any(|s| is_subset_sorted(s, &set)) {
            continue;
        }
        states += 1;
        if states > budget {
            return Err(BarrierError::StateBudget(budget));
        }
        settled[v].push(set.clone());
        if dist[v].is_none() {
            dist[v] = Some(cost);
        }
        for &w in g.neighbors(v) {
            if c.contains(w) {
                continue;
            }
            let next = merge(&set, &labels[w]);
            if !settled[w].iter().any(|s| is_subset_sorted(s, &next)) {
                heap.push(Reverse((next.len(), w, next)));
            }
        }
    }
    Ok(DistanceOracle { dist, labels, c })
}

/// Output of the layering construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinedBarriers {
    #[serde(rename = "C")]
    pub c: VertexSet,
    pub barriers: Vec<Barrier>,
    /// Layer index `j` of each returned barrier `B_j`.
    pub layer_index: Vec<usize>,
    /// `⌈0.99·x/(4z+2t)⌉`.
    pub w: usize,
    /// Number of candidate barriers before filtering.
    pub formed: usize,
}

/// `⌈(99/100)·x/(4z+2t)⌉` in exact integer arithmetic.
pub fn required_barriers(x: usize, z: usize, t: usize) -> usize {
    let den = 100 * (4 * z + 2 * t);
    (99 * x).div_ceil(den)
}

/// `|X ∪ Y ∪ Z| ≤ 100·n·(4z+2t)²/x`, compared exactly.
pub fn within_size_bound(size: usize, n: usize, x: usize, z: usize, t: usize) -> bool {
    let k = (4 * z + 2 * t) as u128;
    (size as u128) * (x as u128) <= 100 * (n as u128) * k * k
}

/// Layers the graph by `d_a` and cuts out pairwise anticomplete barriers.
///
/// Barriers are taken at odd layer indices `B_1, B_3, …, B_{2m'−1}`: each `B_j` needs
/// `W_{j+1}` to be a separating layer, which fails for `j = m` when `x` is a multiple
/// of `2z + t`.
pub fn mines_to_barriers(
    g: &Graph,
    a: usize,
    b: usize,
    cert: &MineCertificate,
    t: usize,
) -> Result<MinedBarriers, BarrierError> {
    let oracle = distance_layers(g, a, b, cert)?;
    let (x, z) = (cert.x, cert.z);
    let step = 2 * z + t;
    if step == 0 {
        return Err(BarrierError::InsufficientMineability("2z + t must be positive".into()));
    }
    let w = required_barriers(x, z, t);
    if w == 0 {
        return Err(BarrierError::InsufficientMineability("x = 0 yields no barriers".into()));
    }
    let m = x / step;
    let m_half = m / 2;
    let lo = |j: usize| (j - 1) * step + 1;
    let hi = |j: usize| lo(j) + z;
    let mut s_by_dist: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        if let Some(d) = oracle.dist[v] {
            if !oracle.labels[v].is_empty() {
                s_by_dist.entry(d).or_default().push(v);
            }
        }
    }
    let layer_w =
        |j: usize| -> VertexSet { s_by_dist.range(lo(j)..=hi(j)).flat_map(|(_, vs)| vs.iter().copied()).collect() };
    let c = oracle.c.clone();
    let mut candidates = Vec::new();
    for i in 1..=m_half {
        let j = 2 * i - 1;
        let (wj, wj1) = (layer_w(j), layer_w(j + 1));
        let l: VertexSet = (0..g.n())
            .filter(|&v| !c.contains(v) && !wj.contains(v) && !wj1.contains(v))
            .filter(|&v| matches!(oracle.dist[v], Some(d) if lo(j) <= d && d < lo(j + 1)))
            .collect();
        candidates.push((j, Barrier { x: wj, y: l, z: wj1, c: c.clone(), t, p: cert.p }));
    }
    let formed = candidates.len();
    let survivors: Vec<(usize, Barrier)> =
        candidates.into_iter().filter(|(_, bar)| within_size_bound(bar.body().len(), g.n(), x, z, t)).collect();
    if survivors.len() < w {
        return Err(BarrierError::TooFewBarriers { formed, surviving: survivors.len(), required: w });
    }
    let (layer_index, barriers): (Vec<usize>, Vec<Barrier>) = survivors.into_iter().take(w).unzip();
    for (k, bar) in barriers.iter().enumerate() {
        if let Some(v) = verify_barrier(g, bar)?.violation {
            return Err(BarrierError::Internal(format!("barrier {k} fails: {v:?}")));
        }
        if !barrier_separates(g, bar, a, b)? {
            return Err(BarrierError::Internal(format!("barrier {k} does not separate a from b")));
        }
        for (l, other) in barriers.iter().enumerate().skip(k + 1) {
            if !is_anticomplete(g, &bar.body(), &other.body()) {
                return Err(BarrierError::Internal(format!("barriers {k} and {l} touch")));
            }
        }
    }
    Ok(MinedBarriers { c, barriers, layer_index, w, formed })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SelectedBarrier {
    /// Position of the chosen barrier in the input list.
    pub index: usize,
    /// The reduced chosen barrier with `C` replaced by `C′`.
    pub barrier: Barrier,
    #[serde(rename = "M")]
    pub m: VertexSet,
    pub cc_c: usize,
    pub cc_c_prime: usize,
    /// Edges of the bipartite incidence graph between barrier components and components of `C`.
    pub gamma_edges: usize,
    /// `φ·|cc(C)|·t/β`.
    pub phi_bound: f64,
    pub within_phi_bound: bool,
}

/// Reduces every barrier and keeps the one whose body touches the fewest components of `C`.
pub fn select_good_barrier(
    g: &Graph,
    a: usize,
    b: usize,
    barriers: &[Barrier],
    t: usize,
    phi: f64,
) -> Result<SelectedBarrier, BarrierError> {
    let first = barriers.first().ok_or(BarrierError::NoBarriers)?;
    let c = first.c.clone();
    if barriers.iter().any(|bar| bar.c != c) {
        return Err(BarrierError::MixedC);
    }
    for i in 0..barriers.len() {
        for j in i + 1..barriers.len() {
            if !is_anticomplete(g, &barriers[i].body(), &barriers[j].body()) {
                return Err(BarrierError::NotAnticomplete(i, j));
            }
        }
    }
    let reduced: Vec<Barrier> = barriers.iter().map(|bar| reduce_barrier(g, bar, a, b)).collect::<Result<_, _>>()?;
    let comps = components_of_set(g, &c);
    let mut comp_of = vec![usize::MAX; g.n()];
    for (i, k) in comps.iter().enumerate() {
        for v in k.iter() {
            comp_of[v] = i;
        }
    }
    let touched = |s: &VertexSet| -> BTreeSet<usize> {
        neighborhood(g, s).iter().filter(|&v| comp_of[v] != usize::MAX).map(|v| comp_of[v]).collect()
    };
    let mut gamma_edges = 0;
    let mut best: Option<(usize, BTreeSet<usize>)> = None;
    for (i, bar) in reduced.iter().enumerate() {
        for d in components_of_set(g, &bar.body()) {
            gamma_edges += touched(&d).len();
        }
        let tc = touched(&bar.body());
        if best.as_ref().is_none_or(|(_, b)| tc.len() < b.len()) {
            best = Some((i, tc));
        }
    }
    let (index, keep) = best.expect("at least one barrier");
    let mut c_prime = VertexSet::new();
    for &k in &keep {
        c_prime.extend_from(&comps[k]);
    }
    let m = c.difference(&c_prime);
    let chosen = Barrier { c: c_prime, ..reduced[index].clone() };
    let beta = barriers.len() as f64;
    let phi_bound = phi * comps.len() as f64 * t as f64 / beta;
    Ok(SelectedBarrier {
        index,
        cc_c: comps.len(),
        cc_c_prime: keep.len(),
        gamma_edges,
        phi_bound,
        within_phi_bound: keep.len() as f64 <= phi_bound + 1e-9,
        barrier: chosen,
        m,
    })
}

/// Re-verifies `bar` inside `G \ m` and checks that it separates `a` from `b` there.
pub fn verify_in_remainder(g: &Graph, bar: &Barrier, m: &VertexSet, a: usize, b: usize) -> Result<bool, BarrierError> {
    let sub = delete_vertices(g, m)?;
    let local = bar.localize(&sub);
    let (la, lb) = match (sub.local(a), sub.local(b)) {
        (Some(x), Some(y)) => (x, y),
        _ => return Ok(false),
    };
    Ok(verify_barrier(&sub.graph, &local)?.valid && barrier_separates(&sub.graph, &local, la, lb)?)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    pub pass: bool,
}

impl BoundCheck {
    pub fn new(name: &str, value: f64, bound: f64) -> Self {
        Self { name: name.into(), value, bound, pass: value <= bound + 1e-9 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MineableBarrier {
    pub barrier: Barrier,
    #[serde(rename = "M")]
    pub m: VertexSet,
    pub selected: SelectedBarrier,
    pub valid_in_remainder: bool,
    pub checks: Vec<BoundCheck>,
}

/// A mineable pair yields one `(t, p)`-barrier separating it after deleting `M`.
pub fn mineable_to_barrier(
    g: &Graph,
    a: usize,
    b: usize,
    cert: &MineCertificate,
    t: usize,
    phi: f64,
) -> Result<MineableBarrier, BarrierError> {
    if cert.x == 0 {
        return Err(BarrierError::InsufficientMineability("x = 0 yields no barriers".into()));
    }
    let mined = mines_to_barriers(g, a, b, cert, t)?;
    let selected = select_good_barrier(g, a, b, &mined.barriers, t, phi)?;
    let bar = selected.barrier.clone();
    let m = selected.m.clone();
    let valid_in_remainder = verify_in_remainder(g, &bar, &m, a, b)?;
    let (x, y, z, p) = (cert.x as f64, cert.y as f64, cert.z as f64, cert.p as f64);
    let k = 4.0 * z + 2.0 * t as f64;
    let checks = vec![
        BoundCheck::new("valid_in_G_minus_M", if valid_in_remainder { 0.0 } else { 1.0 }, 0.0),
        BoundCheck::new("cc_C", selected.cc_c_prime as f64, 100.0 / 99.0 * k * phi * y * t as f64),
        BoundCheck::new("M", m.len() as f64, x * y * p),
        BoundCheck::new("XYZ", bar.body().len() as f64, 100.0 * g.n() as f64 * k * k / x),
    ];
    Ok(MineableBarrier { barrier: bar, m, selected, valid_in_remainder, checks })
}

/// Components of `G \ s` as a quick helper for callers holding masks.
pub fn components_avoiding(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    let mut alive = vec![true; g.n()];
    for v in s.iter() {
        alive[v] = false;
    }
    components_within(g, &alive)
}

/// The caterpillar certificate `Y_i = {y_i}`, `X_i = {x_i}` with `y = z = p = 1`.
pub fn caterpillar_certificate(x: usize) -> MineCertificate {
    use crate::graph::caterpillar::{pendant, spine};
    MineCertificate {
        y_sets: (1..=x).map(|i| VertexSet::singleton(pendant(x, i))).collect(),
        x_sets: (1..=x).map(|i| VertexSet::singleton(spine(i))).collect(),
        x,
        y: 1,
        z: 1,
        p: 1,
    }
}
