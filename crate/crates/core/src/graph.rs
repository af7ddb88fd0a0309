//! Simple undirected graphs, vertex sets, weight functions, generators and
//! the plain-text edge-list format.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Absolute tolerance used for every floating-point weight comparison.
pub const WEIGHT_EPS: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("endpoints {0} and {1} are adjacent")]
    AdjacentEndpoints(usize, usize),
    #[error("endpoints must be distinct (got {0} twice)")]
    SameEndpoint(usize),
    #[error("endpoint {0} lies in the candidate set")]
    EndpointInSet(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid weight function: {0}")]
    BadWeights(String),
    #[error("invalid generator request: {0}")]
    BadGenerator(String),
}

/// Ordered set of vertex indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }
    pub fn singleton(v: usize) -> Self {
        Self(BTreeSet::from([v]))
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }
    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }
    pub fn remove(&mut self, v: usize) -> bool {
        self.0.remove(&v)
    }
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }
    pub fn last(&self) -> Option<usize> {
        self.0.last().copied()
    }
    pub fn extend_from(&mut self, other: &VertexSet) {
        self.0.extend(other.iter());
    }
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.union(&other.0).copied().collect())
    }
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.intersection(&other.0).copied().collect())
    }
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        Self(self.0.difference(&other.0).copied().collect())
    }
    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.is_disjoint(&other.0)
    }
    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.is_subset(&other.0)
    }
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
    /// Boolean membership mask over `0..n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            if v < n {
                m[v] = true;
            }
        }
        m
    }
    pub fn from_mask(mask: &[bool]) -> VertexSet {
        mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, usize>>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(a: [usize; N]) -> Self {
        a.into_iter().collect()
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

/// Finite simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph, rejecting out-of-range endpoints, loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { v: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> VertexSet {
        (0..self.n()).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, nb) in self.adj.iter().enumerate() {
            for &v in nb {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { v, n: self.n() })
        }
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        match s.last() {
            Some(v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|u| self.adj[u].iter().all(|&v| !s.contains(v)))
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let v: Vec<usize> = s.to_vec();
        v.iter().enumerate().all(|(i, &x)| v[i + 1..].iter().all(|&y| self.adjacent(x, y)))
    }

    /// Serialises to the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Parses the edge-list text format (`n m` header, `u v` lines, `#` comments).
    pub fn parse_edge_list(text: &str) -> Result<Self, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut g = Graph::empty(0);
        let mut seen = 0usize;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let nums: Vec<&str> = line.split_whitespace().collect();
            let bad = |msg: &str| GraphError::Parse { line: i + 1, msg: msg.to_string() };
            if nums.len() != 2 {
                return Err(bad("expected exactly two integers"));
            }
            let a = usize::from_str(nums[0]).map_err(|_| bad("not a non-negative integer"))?;
            let b = usize::from_str(nums[1]).map_err(|_| bad("not a non-negative integer"))?;
            match header {
                None => {
                    header = Some((a, b));
                    g = Graph::empty(a);
                }
                Some(_) => {
                    g.add_edge(a, b).map_err(|e| GraphError::Parse { line: i + 1, msg: e.to_string() })?;
                    seen += 1;
                }
            }
        }
        let (_, m) = header.ok_or(GraphError::Parse { line: 0, msg: "missing header".into() })?;
        if seen != m {
            return Err(GraphError::Parse { line: 0, msg: format!("header announces {m} edges, found {seen}") });
        }
        Ok(g)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

/// An induced subgraph together with the map back to parent indices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `to_parent[i]` is the parent index of local vertex `i`.
    pub to_parent: Vec<usize>,
    from_parent: Vec<Option<usize>>,
}

impl Subgraph {
    pub fn local(&self, parent_v: usize) -> Option<usize> {
        self.from_parent.get(parent_v).copied().flatten()
    }
    pub fn parent(&self, local_v: usize) -> usize {
        self.to_parent[local_v]
    }
    /// Maps a parent-indexed set into local indices, dropping vertices not kept.
    pub fn localize(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.local(v)).collect()
    }
    pub fn lift(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_parent[v]).collect()
    }
}

pub fn induced_subgraph(g: &Graph, keep: &VertexSet) -> Result<Subgraph, GraphError> {
    g.check_set(keep)?;
    let to_parent: Vec<usize> = keep.to_vec();
    let mut from_parent = vec![None; g.n()];
    for (i, &v) in to_parent.iter().enumerate() {
        from_parent[v] = Some(i);
    }
    let mut h = Graph::empty(to_parent.len());
    for (i, &v) in to_parent.iter().enumerate() {
        h.adj[i] = g.adj[v].iter().filter_map(|&u| from_parent[u]).collect();
    }
    Ok(Subgraph { graph: h, to_parent, from_parent })
}

/// `G \ removed` as an induced subgraph.
pub fn delete_vertices(g: &Graph, removed: &VertexSet) -> Result<Subgraph, GraphError> {
    g.check_set(removed)?;
    induced_subgraph(g, &g.vertices().difference(removed))
}

/// Connected components of `G[alive]`, each as a vertex set, ordered by least vertex.
pub fn components_within(g: &Graph, alive: &[bool]) -> Vec<VertexSet> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        let mut comp = VertexSet::new();
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            comp.insert(u);
            for &w in g.neighbors(u) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, &vec![true; g.n()])
}

/// Components of `G[s]`.
pub fn components_of_set(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    components_within(g, &s.mask(g.n()))
}

pub fn is_connected_set(g: &Graph, s: &VertexSet) -> bool {
    !s.is_empty() && components_of_set(g, s).len() == 1
}

/// No edge joins `x` and `y` (the sets may not overlap either).
pub fn is_anticomplete(g: &Graph, x: &VertexSet, y: &VertexSet) -> bool {
    x.is_disjoint(y) && x.iter().all(|u| g.neighbors(u).iter().all(|&v| !y.contains(v)))
}

/// Open neighbourhood `N(X)`.
pub fn neighborhood(g: &Graph, x: &VertexSet) -> VertexSet {
    let mut out = VertexSet::new();
    for u in x.iter() {
        for &v in g.neighbors(u) {
            if !x.contains(v) {
                out.insert(v);
            }
        }
    }
    out
}

/// Vertices at distance exactly two from `v`.
pub fn second_neighborhood(g: &Graph, v: usize) -> VertexSet {
    let x = VertexSet::singleton(v);
    let closed = x.union(&neighborhood(g, &x));
    neighborhood(g, &closed)
}

/// Whether `a` and `b` lie in one component of `G[alive]`.
pub fn connected_within(g: &Graph, alive: &[bool], a: usize, b: usize) -> bool {
    if !alive[a] || !alive[b] {
        return false;
    }
    let mut seen = vec![false; g.n()];
    let mut q = VecDeque::from([a]);
    seen[a] = true;
    while let Some(u) = q.pop_front() {
        if u == b {
            return true;
        }
        for &w in g.neighbors(u) {
            if alive[w] && !seen[w] {
                seen[w] = true;
                q.push_back(w);
            }
        }
    }
    false
}

fn check_pair(g: &Graph, a: usize, b: usize) -> Result<(), GraphError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameEndpoint(a));
    }
    if g.adjacent(a, b) {
        return Err(GraphError::AdjacentEndpoints(a, b));
    }
    Ok(())
}

/// Whether `s` separates non-adjacent `a` and `b`.
pub fn is_separator(g: &Graph, s: &VertexSet, a: usize, b: usize) -> Result<bool, GraphError> {
    check_pair(g, a, b)?;
    g.check_set(s)?;
    for v in [a, b] {
        if s.contains(v) {
            return Err(GraphError::EndpointInSet(v));
        }
    }
    let mut alive = vec![true; g.n()];
    for v in s.iter() {
        alive[v] = false;
    }
    Ok(!connected_within(g, &alive, a, b))
}

struct FlowNet {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        Self { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new() }
    }
    fn arc(&mut self, u: usize, v: usize, c: u32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }
    /// Nodes reachable from `s` in the residual network, or the BFS parent arcs when `t` is hit.
    fn bfs(&self, s: usize, t: usize) -> (Vec<bool>, Option<Vec<usize>>) {
        let mut seen = vec![false; self.head.len()];
        let mut via = vec![usize::MAX; self.head.len()];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    via[v] = e;
                    if v == t {
                        return (seen, Some(via));
                    }
                    q.push_back(v);
                }
            }
        }
        (seen, None)
    }
}

/// Minimum vertex separator between non-adjacent `a` and `b`, via unit vertex capacities.
pub fn min_separator(g: &Graph, a: usize, b: usize) -> Result<VertexSet, GraphError> {
    check_pair(g, a, b)?;
    let n = g.n();
    let big = n as u32 + 1;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == a || v == b { big } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, big);
        net.arc(2 * v + 1, 2 * u, big);
    }
    let (s, t) = (2 * a + 1, 2 * b);
    loop {
        let (seen, via) = net.bfs(s, t);
        match via {
            Some(via) => {
                let mut x = t;
                while x != s {
                    let e = via[x];
                    net.cap[e] -= 1;
                    net.cap[e ^ 1] += 1;
                    x = net.to[e ^ 1];
                }
            }
            None => {
                return Ok((0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect());
            }
        }
    }
}

/// Normalised non-negative vertex weights (total 1 within [`WEIGHT_EPS`]).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightFunction(Vec<f64>);

impl WeightFunction {
    pub fn new(weights: Vec<f64>) -> Result<Self, GraphError> {
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(GraphError::BadWeights("weights must be finite and non-negative".into()));
        }
        let total: f64 = weights.iter().sum();
        if (total - 1.0).abs() > WEIGHT_EPS {
            return Err(GraphError::BadWeights(format!("weights sum to {total}, not 1")));
        }
        Ok(Self(weights))
    }
    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }
    /// Uniform on `s`, zero elsewhere.
    pub fn uniform_on(n: usize, s: &VertexSet) -> Result<Self, GraphError> {
        if s.is_empty() {
            return Err(GraphError::BadWeights("support is empty".into()));
        }
        let mut w = vec![0.0; n];
        for v in s.iter() {
            w[v] = 1.0 / s.len() as f64;
        }
        Ok(Self(w))
    }
    pub fn get(&self, v: usize) -> f64 {
        self.0[v]
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn of(&self, s: &VertexSet) -> f64 {
        s.iter().map(|v| self.0[v]).sum()
    }
    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }
    /// Restriction to the kept vertices of `sub`, renormalised; `None` when no weight survives.
    pub fn restrict(&self, sub: &Subgraph) -> Option<WeightFunction> {
        let w: Vec<f64> = sub.to_parent.iter().map(|&v| self.0[v]).collect();
        let total: f64 = w.iter().sum();
        if total <= WEIGHT_EPS {
            return None;
        }
        Some(Self(w.into_iter().map(|x| x / total).collect()))
    }
}

/// Every component of `G \ x` has weight at most `c`.
pub fn is_balanced_separator(g: &Graph, w: &WeightFunction, x: &VertexSet, c: f64) -> bool {
    let mut alive = vec![true; g.n()];
    for v in x.iter() {
        alive[v] = false;
    }
    components_within(g, &alive).iter().all(|d| w.of(d) <= c + WEIGHT_EPS)
}

/// Generator families.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphKind {
    Complete {
        n: usize,
    },
    CompleteBipartite {
        s: usize,
        t: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Brick-wall hexagonal grid with `t` rows of `t` hexagonal faces.
    HexGrid {
        t: usize,
    },
    Random {
        n: usize,
        m: usize,
        seed: u64,
    },
    /// Path `a, x_1..x_x, b` with a pendant `y_i` on every `x_i`.
    Caterpillar {
        x: usize,
    },
}

pub fn generate(kind: &GraphKind) -> Result<Graph, GraphError> {
    let bad = |m: &str| Err(GraphError::BadGenerator(m.to_string()));
    match *kind {
        GraphKind::Complete { n } => {
            let mut e = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    e.push((u, v));
                }
            }
            Graph::from_edges(n, &e)
        }
        GraphKind::CompleteBipartite { s, t } => {
            let mut e = Vec::new();
            for u in 0..s {
                for v in 0..t {
                    e.push((u, s + v));
                }
            }
            Graph::from_edges(s + t, &e)
        }
        GraphKind::Path { n } => {
            let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::from_edges(n, &e)
        }
        GraphKind::Cycle { n } => {
            if n < 3 {
                return bad("a cycle needs at least 3 vertices");
            }
            let mut e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            e.push((0, n - 1));
            Graph::from_edges(n, &e)
        }
        GraphKind::HexGrid { t } => hex_grid(t),
        GraphKind::Random { n, m, seed } => {
            let pairs = n * n.saturating_sub(1) / 2;
            if m > pairs {
                return bad("more edges requested than vertex pairs");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut chosen: Vec<usize> = sample(&mut rng, pairs, m).into_vec();
            chosen.sort_unstable();
            let e: Vec<_> = chosen.into_iter().map(|k| unrank_pair(n, k)).collect();
            Graph::from_edges(n, &e)
        }
        GraphKind::Caterpillar { x } => {
            // a = 0, x_i = i, b = x + 1, y_i = x + 1 + i
            let n = 2 * x + 2;
            let mut e: Vec<_> = (1..=x + 1).map(|i| (i - 1, i)).collect();
            for i in 1..=x {
                e.push((i, x + 1 + i));
            }
            Graph::from_edges(n, &e)
        }
    }
}

/// k-th pair `(u, v)`, `u < v`, in lexicographic order.
fn unrank_pair(n: usize, mut k: usize) -> (usize, usize) {
    let mut u = 0;
    while k >= n - 1 - u {
        k -= n - 1 - u;
        u += 1;
    }
    (u, u + 1 + k)
}

fn hex_grid(t: usize) -> Result<Graph, GraphError> {
    if t == 0 {
        return Err(GraphError::BadGenerator("hex grid needs t >= 1".into()));
    }
    // Rows 0..=t of 2t+2 vertices; rung between rows i and i+1 at column j when i+j is even.
    let cols = 2 * t + 2;
    let id = |i: usize, j: usize| i * cols + j;
    let mut full = Graph::empty((t + 1) * cols);
    for i in 0..=t {
        for j in 0..cols - 1 {
            full.add_edge(id(i, j), id(i, j + 1))?;
        }
        if i < t {
            for j in (0..cols).filter(|j| (i + j) % 2 == 0) {
                full.add_edge(id(i, j), id(i + 1, j))?;
            }
        }
    }
    // The two corner vertices without a rung dangle; drop them.
    let keep: VertexSet = (0..full.n()).filter(|&v| full.degree(v) >= 2).collect();
    Ok(induced_subgraph(&full, &keep)?.graph)
}

/// Vertex roles of [`GraphKind::Caterpillar`].
pub mod caterpillar {
    pub fn a() -> usize {
        0
    }
    pub fn b(x: usize) -> usize {
        x + 1
    }
    pub fn spine(i: usize) -> usize {
        i
    }
    pub fn pendant(x: usize, i: usize) -> usize {
        x + 1 + i
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caterpillar_three_has_eight_vertices_seven_edges() {
        let g = generate(&GraphKind::Caterpillar { x: 3 }).unwrap();
        assert_eq!((g.n(), g.m()), (8, 7));
        assert!(g.adjacent(caterpillar::spine(2), caterpillar::pendant(3, 2)));
    }

    #[test]
    fn hex_grid_one_is_six_cycle() {
        let g = generate(&GraphKind::HexGrid { t: 1 }).unwrap();
        assert_eq!((g.n(), g.m()), (6, 6));
        assert!((0..6).all(|v| g.degree(v) == 2));
        assert_eq!(components(&g).len(), 1);
    }

    #[test]
    fn hex_grid_counts() {
        for t in 1..6 {
            let g = generate(&GraphKind::HexGrid { t }).unwrap();
            assert_eq!(g.n(), 2 * t * t + 4 * t);
            assert_eq!(g.m(), (t + 1) * (3 * t + 1) - 2);
            assert!(g.max_degree() <= 3);
        }
    }

    #[test]
    fn separator_on_cycle() {
        let g = generate(&GraphKind::Cycle { n: 4 }).unwrap();
        assert!(is_separator(&g, &[1, 3].into(), 0, 2).unwrap());
        assert!(!is_separator(&g, &[1].into(), 0, 2).unwrap());
        assert_eq!(is_separator(&g, &[2].into(), 0, 1), Err(GraphError::AdjacentEndpoints(0, 1)));
        assert_eq!(min_separator(&g, 0, 2).unwrap(), [1, 3].into());
    }

    #[test]
    fn endpoint_in_set_rejected() {
        let g = generate(&GraphKind::Path { n: 4 }).unwrap();
        assert_eq!(is_separator(&g, &[0, 1].into(), 0, 3), Err(GraphError::EndpointInSet(0)));
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = generate(&GraphKind::Random { n: 12, m: 20, seed: 5 }).unwrap();
        let text = g.to_edge_list();
        assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
        assert_eq!(Graph::parse_edge_list(&text).unwrap().to_edge_list(), text);
        let with_comments = format!("# header\n{}", text.replace('\n', " # c\n"));
        assert_eq!(Graph::parse_edge_list(&with_comments).unwrap(), g);
        assert!(Graph::parse_edge_list("3 1\n0 3\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n1 1\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n1 0\n").is_err());
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
    }

    #[test]
    fn random_is_deterministic() {
        let k = GraphKind::Random { n: 15, m: 30, seed: 9 };
        assert_eq!(generate(&k).unwrap(), generate(&k).unwrap());
        assert_eq!(generate(&k).unwrap().m(), 30);
    }

    #[test]
    fn induced_subgraph_maps() {
        let g = generate(&GraphKind::Cycle { n: 5 }).unwrap();
        let s = induced_subgraph(&g, &[0, 1, 2].into()).unwrap();
        assert_eq!(s.graph.m(), 2);
        assert_eq!(s.local(2), Some(2));
        assert_eq!(s.local(4), None);
        assert_eq!(s.lift(&[0, 2].into()), [0, 2].into());
    }

    #[test]
    fn weights() {
        assert!(WeightFunction::new(vec![0.5, 0.6]).is_err());
        assert!(WeightFunction::new(vec![-0.5, 1.5]).is_err());
        let w = WeightFunction::uniform(4);
        let g = generate(&GraphKind::Path { n: 4 }).unwrap();
        assert!(is_balanced_separator(&g, &w, &[1].into(), 0.5));
        assert!(!is_balanced_separator(&g, &w, &[0].into(), 0.5));
    }

    #[test]
    fn second_neighborhood_on_path() {
        let g = generate(&GraphKind::Path { n: 5 }).unwrap();
        assert_eq!(second_neighborhood(&g, 0), [2].into());
        let k4 = generate(&GraphKind::Complete { n: 4 }).unwrap();
        assert!(second_neighborhood(&k4, 1).is_empty());
    }
}
