//! Induced-minor models: verification, bounded exhaustive search, contraction,
//! and membership checks for the classes excluding `K_{t,t}` and `W_{t×t}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    components_within, generate, is_anticomplete, is_connected_set, Graph, GraphError, GraphKind, VertexSet,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MinorError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("pattern has {pattern} vertices but {sets} branch sets were given")]
    ShapeMismatch { pattern: usize, sets: usize },
    #[error("part {0} is empty or disconnected")]
    BadPart(usize),
    #[error("parts {0} and {1} overlap")]
    OverlappingParts(usize, usize),
    #[error("t must be at least 1")]
    BadT,
}

/// Branch sets realising `pattern` as an induced minor of some host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ModelJson", try_from = "ModelJson")]
pub struct MinorModel {
    pub pattern: Graph,
    pub branch_sets: Vec<VertexSet>,
}

#[derive(Clone, Serialize, Deserialize)]
struct ModelJson {
    pattern: Vec<(usize, usize)>,
    branch_sets: Vec<Vec<usize>>,
}

impl From<MinorModel> for ModelJson {
    fn from(m: MinorModel) -> Self {
        Self { pattern: m.pattern.edges(), branch_sets: m.branch_sets.iter().map(VertexSet::to_vec).collect() }
    }
}

impl TryFrom<ModelJson> for MinorModel {
    type Error = GraphError;
    fn try_from(j: ModelJson) -> Result<Self, Self::Error> {
        let pattern = Graph::from_edges(j.branch_sets.len(), &j.pattern)?;
        Ok(Self { pattern, branch_sets: j.branch_sets.into_iter().map(VertexSet::from).collect() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum ModelViolation {
    EmptySet { set: usize },
    Disconnected { set: usize },
    Overlap { first: usize, second: usize },
    MissingEdge { first: usize, second: usize },
    UnexpectedEdge { first: usize, second: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub valid: bool,
    pub violations: Vec<ModelViolation>,
}

pub fn verify_model(g: &Graph, model: &MinorModel) -> Result<ModelReport, MinorError> {
    let h = &model.pattern;
    if h.n() != model.branch_sets.len() {
        return Err(MinorError::ShapeMismatch { pattern: h.n(), sets: model.branch_sets.len() });
    }
    for x in &model.branch_sets {
        g.check_set(x)?;
    }
    let mut violations = Vec::new();
    for (i, x) in model.branch_sets.iter().enumerate() {
        if x.is_empty() {
            violations.push(ModelViolation::EmptySet { set: i });
        } else if !is_connected_set(g, x) {
            violations.push(ModelViolation::Disconnected { set: i });
        }
    }
    for i in 0..h.n() {
        for j in i + 1..h.n() {
            let (xi, xj) = (&model.branch_sets[i], &model.branch_sets[j]);
            if !xi.is_disjoint(xj) {
                violations.push(ModelViolation::Overlap { first: i, second: j });
                continue;
            }
            let anti = is_anticomplete(g, xi, xj);
            if h.adjacent(i, j) && anti {
                violations.push(ModelViolation::MissingEdge { first: i, second: j });
            } else if !h.adjacent(i, j) && !anti {
                violations.push(ModelViolation::UnexpectedEdge { first: i, second: j });
            }
        }
    }
    Ok(ModelReport { valid: violations.is_empty(), violations })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorSearch {
    Found(MinorModel),
    NotFound,
    BudgetExhausted,
}

const FREE: usize = usize::MAX;

enum Flow {
    Continue,
    Found,
    Exhausted,
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: Vec<usize>,
    owner: Vec<usize>,
    sets: Vec<Vec<usize>>,
    placed: Vec<bool>,
    steps: u64,
    budget: u64,
}

impl Search<'_> {
    /// Vertices still available to the branch set of `u`.
    fn pool(&self, u: usize) -> Vec<bool> {
        let n = self.g.n();
        let mut pool = vec![true; n];
        for v in 0..n {
            if self.owner[v] != FREE {
                pool[v] = false;
                let w = self.owner[v];
                if !self.h.adjacent(u, w) {
                    for &x in self.g.neighbors(v) {
                        pool[x] = false;
                    }
                }
            }
        }
        pool
    }

    /// Marks `N(X_w)` for the placed pattern-neighbours `w` of `u`.
    fn required(&self, u: usize) -> Vec<Vec<bool>> {
        self.h
            .neighbors(u)
            .iter()
            .filter(|&&w| self.placed[w])
            .map(|&w| {
                let mut m = vec![false; self.g.n()];
                for &x in &self.sets[w] {
                    for &y in self.g.neighbors(x) {
                        m[y] = true;
                    }
                }
                m
            })
            .collect()
    }

    /// Some component of the pool touches every required neighbourhood.
    fn feasible(&self, u: usize) -> bool {
        let pool = self.pool(u);
        let req = self.required(u);
        components_within(self.g, &pool).iter().any(|c| req.iter().all(|m| c.iter().any(|v| m[v])))
    }

    fn run(&mut self, k: usize) -> Flow {
        if k == self.order.len() {
            return Flow::Found;
        }
        let u = self.order[k];
        let pool = self.pool(u);
        let req = self.required(u);
        let n = self.g.n();
        let mut marks = vec![0u32; n];
        let mut set = Vec::new();
        for root in 0..n {
            if !pool[root] {
                continue;
            }
            set.push(root);
            bump(self.g, &mut marks, root, 1);
            let ext: Vec<usize> = self.g.neighbors(root).iter().copied().filter(|&x| x > root && pool[x]).collect();
            let flow = self.extend(k, u, &pool, &req, &mut set, &mut marks, ext, root);
            bump(self.g, &mut marks, root, -1);
            set.pop();
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        k: usize,
        u: usize,
        pool: &[bool],
        req: &[Vec<bool>],
        set: &mut Vec<usize>,
        marks: &mut Vec<u32>,
        mut ext: Vec<usize>,
        root: usize,
    ) -> Flow {
        self.steps += 1;
        if self.steps > self.budget {
            return Flow::Exhausted;
        }
        if req.iter().all(|m| set.iter().any(|&v| m[v])) {
            self.place(u, set);
            let ok = self.order[k + 1..].iter().all(|&w| self.feasible(w));
            let flow = if ok { self.run(k + 1) } else { Flow::Continue };
            if matches!(flow, Flow::Found) {
                return flow;
            }
            self.unplace(u);
            if matches!(flow, Flow::Exhausted) {
                return flow;
            }
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &x in self.g.neighbors(w) {
                if x > root && pool[x] && marks[x] == 0 && !next.contains(&x) {
                    next.push(x);
                }
            }
            set.push(w);
            bump(self.g, marks, w, 1);
            let flow = self.extend(k, u, pool, req, set, marks, next, root);
            bump(self.g, marks, w, -1);
            set.pop();
            if !matches!(flow, Flow::Continue) {
                return flow;
            }
        }
        Flow::Continue
    }

    fn place(&mut self, u: usize, set: &[usize]) {
        for &v in set {
            self.owner[v] = u;
        }
        self.sets[u] = set.to_vec();
        self.placed[u] = true;
    }

    fn unplace(&mut self, u: usize) {
        for &v in &self.sets[u] {
            self.owner[v] = FREE;
        }
        self.sets[u].clear();
        self.placed[u] = false;
    }
}

fn bump(g: &Graph, marks: &mut [u32], v: usize, d: i32) {
    let apply = |m: &mut u32| *m = (*m as i32 + d) as u32;
    apply(&mut marks[v]);
    for &x in g.neighbors(v) {
        apply(&mut marks[x]);
    }
}

/// Pattern vertices starting from a minimum-degree vertex, then repeatedly the
/// unplaced vertex with most placed neighbours (ties: smaller degree, index).
fn pattern_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut done = vec![false; h.n()];
    while order.len() < h.n() {
        let best = (0..h.n())
            .filter(|&v| !done[v])
            .min_by_key(|&v| {
                let placed = h.neighbors(v).iter().filter(|&&w| done[w]).count();
                (std::cmp::Reverse(placed), h.degree(v), v)
            })
            .expect("an unplaced vertex remains");
        done[best] = true;
        order.push(best);
    }
    order
}

/// Exhaustive search for an induced-minor model of `h` in `g`, counting every
/// candidate branch set against `budget`.
pub fn find_induced_minor(g: &Graph, h: &Graph, budget: u64) -> Result<MinorSearch, MinorError> {
    if budget == 0 {
        return Err(MinorError::ZeroBudget);
    }
    if h.n() > g.n() {
        return Ok(MinorSearch::NotFound);
    }
    let mut s = Search {
        g,
        h,
        order: pattern_order(h),
        owner: vec![FREE; g.n()],
        sets: vec![Vec::new(); h.n()],
        placed: vec![false; h.n()],
        steps: 0,
        budget,
    };
    Ok(match s.run(0) {
        Flow::Found => {
            let model = MinorModel {
                pattern: h.clone(),
                branch_sets: s.sets.iter().map(|x| x.iter().copied().collect()).collect(),
            };
            debug_assert!(verify_model(g, &model).map(|r| r.valid).unwrap_or(false));
            MinorSearch::Found(model)
        }
        Flow::Continue => MinorSearch::NotFound,
        Flow::Exhausted => MinorSearch::BudgetExhausted,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// Old vertex → new vertex.
    pub map: Vec<usize>,
}

/// Contracts each part to a single vertex; new indices follow least old vertex.
pub fn contract_connected_sets(g: &Graph, parts: &[VertexSet]) -> Result<Contraction, MinorError> {
    let n = g.n();
    let mut part_of = vec![FREE; n];
    for (i, p) in parts.iter().enumerate() {
        g.check_set(p)?;
        if !is_connected_set(g, p) {
            return Err(MinorError::BadPart(i));
        }
        for v in p.iter() {
            if part_of[v] != FREE {
                return Err(MinorError::OverlappingParts(part_of[v], i));
            }
            part_of[v] = i;
        }
    }
    let mut map = vec![FREE; n];
    let mut part_new = vec![FREE; parts.len()];
    let mut next = 0;
    for v in 0..n {
        let p = part_of[v];
        if p == FREE {
            map[v] = next;
            next += 1;
        } else {
            if part_new[p] == FREE {
                part_new[p] = next;
                next += 1;
            }
            map[v] = part_new[p];
        }
    }
    let mut out = Graph::empty(next);
    for (u, v) in g.edges() {
        let (a, b) = (map[u], map[v]);
        if a != b && !out.adjacent(a, b) {
            out.add_edge(a, b)?;
        }
    }
    Ok(Contraction { graph: out, map })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    InClass,
    NotInClass(MinorModel),
    Unknown,
}

/// Tests for `K_{t,t}` and `W_{t×t}` induced minors (each search gets `budget`).
pub fn class_membership(g: &Graph, t: usize, budget: u64) -> Result<Membership, MinorError> {
    if t == 0 {
        return Err(MinorError::BadT);
    }
    if budget == 0 {
        return Err(MinorError::ZeroBudget);
    }
    let mut unknown = false;
    for kind in [GraphKind::CompleteBipartite { s: t, t }, GraphKind::HexGrid { t }] {
        let h = generate(&kind)?;
        match find_induced_minor(g, &h, budget)? {
            MinorSearch::Found(m) => return Ok(Membership::NotInClass(m)),
            MinorSearch::BudgetExhausted => unknown = true,
            MinorSearch::NotFound => {}
        }
    }
    Ok(if unknown { Membership::Unknown } else { Membership::InClass })
}

/// A maximum clique (Bron–Kerbosch with pivoting; ties resolved by first found).
pub fn max_clique(g: &Graph) -> VertexSet {
    fn bk(g: &Graph, r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, best: &mut Vec<usize>) {
        if p.is_empty() && x.is_empty() {
            if r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        if r.len() + p.len() <= best.len() {
            return;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| p.iter().filter(|&&v| g.adjacent(u, v)).count())
            .expect("p or x non-empty");
        let cand: Vec<usize> = p.iter().copied().filter(|&v| !g.adjacent(pivot, v)).collect();
        let (mut p, mut x) = (p, x);
        for v in cand {
            let np = p.iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            let nx = x.iter().copied().filter(|&w| g.adjacent(v, w)).collect();
            r.push(v);
            bk(g, r, np, nx, best);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut best = Vec::new();
    bk(g, &mut Vec::new(), (0..g.n()).collect(), Vec::new(), &mut best);
    best.into_iter().collect()
}

/// `G` has no clique of size `t`.
pub fn clique_below(g: &Graph, t: usize) -> bool {
    max_clique(g).len() < t
}
