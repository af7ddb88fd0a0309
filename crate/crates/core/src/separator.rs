//! The slim-pair separator engine: baskets, mining a certificate out of an
//! (F,r)-decomposition provider, the barrier recursion, and slim balanced separators.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::barriers::{mineable_to_barrier, verify_mineable, BarrierError, MineCertificate};
use crate::bounds::{psi, BoundParams};
use crate::decomposition::{balanced_bag, project_forest, verify_fr, DecompError, StarForest, TreeDecomposition};
use crate::graph::{
    connected_within, delete_vertices, induced_subgraph, is_balanced_separator, is_separator, min_separator, Graph,
    GraphError, VertexSet, WeightFunction, WEIGHT_EPS,
};
use crate::slimness::{is_slim_pair, SlimError};

/// Graphs up to this size are separated directly by a minimum separator.
pub const BASE_CASE: usize = 10;
pub const DEFAULT_DEPTH_GUARD: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SepError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Slim(#[from] SlimError),
    #[error(transparent)]
    Barrier(#[from] BarrierError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("falsification: {0}")]
    Falsification(String),
    #[error("recursion depth exceeded {0}")]
    DepthGuard(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("decomposition provider failed: {0}")]
    Provider(String),
}

fn endpoints(g: &Graph, a: usize, b: usize) -> Result<(), SepError> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    if a == b {
        return Err(GraphError::SameEndpoint(a).into());
    }
    if g.adjacent(a, b) {
        return Err(GraphError::AdjacentEndpoints(a, b).into());
    }
    Ok(())
}

fn connected(g: &Graph, removed: &VertexSet, a: usize, b: usize) -> bool {
    let mut alive = vec![true; g.n()];
    for v in removed.iter() {
        alive[v] = false;
    }
    connected_within(g, &alive, a, b)
}

fn bag_union(td: &TreeDecomposition, nodes: &[usize]) -> VertexSet {
    let mut u = VertexSet::new();
    for &i in nodes {
        u.extend_from(&td.bags[i]);
    }
    u
}

/// Fewer than `q` bags whose union meets the interior of every `a`–`b` path.
pub fn basket(g: &Graph, td: &TreeDecomposition, a: usize, b: usize, q: usize) -> Result<Vec<usize>, SepError> {
    endpoints(g, a, b)?;
    if let Some(v) = crate::decomposition::verify_td(g, td).violation {
        return Err(DecompError::BadTd(v).into());
    }
    if !is_slim_pair(g, a, b, q)? {
        return Err(SepError::Hypothesis(format!("({a}, {b}) is not {q}-slim")));
    }
    let hits = |nodes: &[usize]| -> Result<bool, SepError> {
        let mut u = bag_union(td, nodes);
        u.remove(a);
        u.remove(b);
        Ok(is_separator(g, &u, a, b)?)
    };
    if hits(&[])? {
        return Ok(Vec::new());
    }
    // Single bags first, then all subsets of size < q.
    for k in 1..q {
        let mut pick: Vec<usize> = (0..k).collect();
        if k > td.len() {
            break;
        }
        loop {
            if hits(&pick)? {
                return Ok(pick);
            }
            // next k-combination of 0..len
            let mut i = k;
            while i > 0 && pick[i - 1] == td.len() - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            pick[i - 1] += 1;
            for j in i..k {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    Err(SepError::Falsification(format!("no set of fewer than {q} bags meets every {a}-{b} path")))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MineOutcome {
    /// `D` separates `a` from `b`.
    Separator { d: VertexSet, iterations: usize },
    /// `(a, b)` is `(x, r(q−1), 1, 1)`-mineable in `G \ D`; the certificate uses indices of `G`.
    Mineable { d: VertexSet, cert: MineCertificate },
}

impl MineOutcome {
    pub fn d(&self) -> &VertexSet {
        match self {
            MineOutcome::Separator { d, .. } | MineOutcome::Mineable { d, .. } => d,
        }
    }
}

/// Parameters of the slim-pair engine.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SlimParams {
    pub t: usize,
    /// Stable-set size for the (p, q)-slimness used by balanced separators.
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub x: usize,
    pub phi: f64,
    pub depth_guard: usize,
    /// Require `r ≥ ψ(t, q)`.
    pub enforce_psi: bool,
}

impl From<&BoundParams> for SlimParams {
    fn from(b: &BoundParams) -> Self {
        Self {
            t: b.t,
            p: b.p,
            q: b.q,
            r: b.r(),
            x: b.x,
            phi: b.phi,
            depth_guard: DEFAULT_DEPTH_GUARD,
            enforce_psi: true,
        }
    }
}

impl SlimParams {
    pub fn validate(&self) -> Result<(), SepError> {
        if self.q < 2 || self.t == 0 || self.x == 0 || self.r == 0 || self.p < 2 {
            return Err(SepError::Precondition("need q, p ≥ 2 and t, x, r ≥ 1".into()));
        }
        let need = psi(self.t, self.q, self.phi);
        if self.enforce_psi && (self.r as f64) < need - 1e-9 {
            return Err(SepError::Precondition(format!("r = {} < ψ(t, q) = {need:.2}", self.r)));
        }
        Ok(())
    }
}

/// One node of the recursion, written as a JSON line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceNode {
    pub depth: usize,
    pub n: usize,
    /// The pair in the indices of the top-level graph.
    pub pair: (usize, usize),
    pub route: String,
    pub d: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub c: usize,
    pub m: usize,
    pub slim_pairs: usize,
    pub separator: usize,
    /// `|M| + |C| + Σ|M_uv|`, recomputed for audit.
    pub audit: usize,
    pub note: Option<String>,
}

impl TraceNode {
    fn new(depth: usize, n: usize, pair: (usize, usize), route: &str) -> Self {
        Self {
            depth,
            n,
            pair,
            route: route.into(),
            d: 0,
            x: 0,
            y: 0,
            z: 0,
            c: 0,
            m: 0,
            slim_pairs: 0,
            separator: 0,
            audit: 0,
            note: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BalancedOutcome {
    pub separator: VertexSet,
    /// The sets `X_i` (bags minus leaves) in host indices.
    pub rounds: Vec<VertexSet>,
    pub slim_pairs: usize,
    pub early: bool,
}

/// Engine state: parameters, the `(F, r)`-decomposition provider and the trace.
pub struct SlimEngine<P> {
    pub params: SlimParams,
    provider: P,
    pub trace: Vec<TraceNode>,
}

impl<P> SlimEngine<P>
where
    P: FnMut(&Graph, &StarForest) -> Result<TreeDecomposition, String>,
{
    pub fn new(params: SlimParams, provider: P) -> Self {
        Self { params, provider, trace: Vec::new() }
    }

    pub fn trace_jsonl(&self) -> String {
        self.trace.iter().map(|t| serde_json::to_string(t).expect("trace serialises") + "\n").collect()
    }

    fn decompose(&mut self, h: &Graph, f: &StarForest) -> Result<TreeDecomposition, SepError> {
        let td = (self.provider)(h, f).map_err(SepError::Provider)?;
        let rep = verify_fr(h, f, &td, self.params.r);
        if !rep.valid {
            return Err(SepError::Provider(format!("not an (F, r)-decomposition: {:?}", rep.violation)));
        }
        Ok(td)
    }

    /// Iterative extraction: basket bags split into non-forest part (to `C`), centres (`Y_i`)
    /// and leaves (`X_i`), until `a` and `b` separate or `x` rounds are done.
    pub fn mineslim(&mut self, g: &Graph, f: &StarForest, a: usize, b: usize) -> Result<MineOutcome, SepError> {
        endpoints(g, a, b)?;
        f.validate(g)?;
        let (q, x) = (self.params.q, self.params.x);
        if !connected(g, &VertexSet::new(), a, b) {
            return Ok(MineOutcome::Separator { d: VertexSet::new(), iterations: 0 });
        }
        let mut c_set = VertexSet::new();
        let mut ys: Vec<VertexSet> = Vec::new();
        let mut xs: Vec<VertexSet> = Vec::new();
        let mut removed = VertexSet::new();
        for i in 0..x {
            let sub = delete_vertices(g, &removed)?;
            let (la, lb) = (sub.local(a).expect("a kept"), sub.local(b).expect("b kept"));
            let fi = project_forest(f, &sub);
            let td = self.decompose(&sub.graph, &fi)?;
            let nodes = basket(&sub.graph, &td, la, lb, q)?;
            let mut u = bag_union(&td, &nodes);
            u.remove(la);
            u.remove(lb);
            let star_of = fi.star_of(sub.graph.n());
            let (mut cp, mut yp, mut xp) = (VertexSet::new(), VertexSet::new(), VertexSet::new());
            for v in u.iter() {
                match star_of[v] {
                    None => cp.insert(v),
                    Some(s) if fi.centers[s] == v => yp.insert(v),
                    Some(s) if fi.centers[s] == la || fi.centers[s] == lb => cp.insert(v),
                    Some(_) => xp.insert(v),
                };
            }
            c_set.extend_from(&sub.lift(&cp));
            let yi = sub.lift(&yp);
            removed.extend_from(&sub.lift(&cp));
            removed.extend_from(&yi);
            ys.push(yi);
            xs.push(sub.lift(&xp));
            if !connected(g, &removed, a, b) {
                return Ok(MineOutcome::Separator { d: removed, iterations: i + 1 });
            }
        }
        let cert = MineCertificate { y_sets: ys, x_sets: xs, x, y: self.params.r * (q - 1), z: 1, p: 1 };
        let sub = delete_vertices(g, &c_set)?;
        let local = cert.map_sets(|s| sub.localize(s));
        let rep = verify_mineable(&sub.graph, sub.local(a).unwrap(), sub.local(b).unwrap(), &local)?;
        if let Some(v) = rep.violation {
            return Err(SepError::Falsification(format!(
                "mined certificate fails condition {}: {}",
                v.condition, v.detail
            )));
        }
        Ok(MineOutcome::Mineable { d: c_set, cert })
    }

    /// Separator for a `q`-slim pair, verified with `is_separator`.
    pub fn separate_slim_pair(&mut self, g: &Graph, f: &StarForest, a: usize, b: usize) -> Result<VertexSet, SepError> {
        self.params.validate()?;
        endpoints(g, a, b)?;
        f.validate(g)?;
        if !is_slim_pair(g, a, b, self.params.q)? {
            return Err(SepError::Hypothesis(format!("({a}, {b}) is not {}-slim", self.params.q)));
        }
        let top: Vec<usize> = (0..g.n()).collect();
        let s = self.recurse(g, f, a, b, &top, 0)?;
        if !is_separator(g, &s, a, b)? {
            return Err(SepError::Falsification("returned set does not separate".into()));
        }
        Ok(s)
    }

    fn recurse(
        &mut self,
        g: &Graph,
        f: &StarForest,
        a: usize,
        b: usize,
        top: &[usize],
        depth: usize,
    ) -> Result<VertexSet, SepError> {
        if depth > self.params.depth_guard {
            return Err(SepError::DepthGuard(self.params.depth_guard));
        }
        let pair = (top[a], top[b]);
        let slot = self.trace.len();
        self.trace.push(TraceNode::new(depth, g.n(), pair, "pending"));
        let finish = |eng: &mut Self, route: &str, s: VertexSet| {
            let node = &mut eng.trace[slot];
            node.route = route.into();
            node.separator = s.len();
            s
        };
        if !connected(g, &VertexSet::new(), a, b) {
            return Ok(finish(self, "disconnected", VertexSet::new()));
        }
        if g.n() <= BASE_CASE {
            return Ok(finish(self, "base", min_separator(g, a, b)?));
        }
        let (d, cert) = match self.mineslim(g, f, a, b)? {
            MineOutcome::Separator { d, .. } => {
                self.trace[slot].d = d.len();
                self.trace[slot].audit = d.len();
                return Ok(finish(self, "mined_separator", d));
            }
            MineOutcome::Mineable { d, cert } => (d, cert),
        };
        self.barrier_step(g, f, a, b, &d, &cert, top, depth, slot)
    }

    /// Recursion step from a certificate that holds in `G \ D` (indices of `G`): barrier,
    /// then the slim pairs inside `C`, each separated within the barrier body.
    pub fn separate_from_certificate(
        &mut self,
        g: &Graph,
        f: &StarForest,
        a: usize,
        b: usize,
        d: &VertexSet,
        cert: &MineCertificate,
    ) -> Result<VertexSet, SepError> {
        self.params.validate()?;
        endpoints(g, a, b)?;
        f.validate(g)?;
        g.check_set(d)?;
        let top: Vec<usize> = (0..g.n()).collect();
        let slot = self.trace.len();
        self.trace.push(TraceNode::new(0, g.n(), (a, b), "pending"));
        let s = self.barrier_step(g, f, a, b, d, cert, &top, 0, slot)?;
        if !is_separator(g, &s, a, b)? {
            return Err(SepError::Falsification("returned set does not separate".into()));
        }
        Ok(s)
    }

    #[allow(clippy::too_many_arguments)]
    fn barrier_step(
        &mut self,
        g: &Graph,
        f: &StarForest,
        a: usize,
        b: usize,
        d: &VertexSet,
        cert: &MineCertificate,
        top: &[usize],
        depth: usize,
        slot: usize,
    ) -> Result<VertexSet, SepError> {
        let finish = |eng: &mut Self, route: &str, s: VertexSet| {
            let node = &mut eng.trace[slot];
            node.route = route.into();
            node.separator = s.len();
            s
        };
        self.trace[slot].d = d.len();
        let sub = delete_vertices(g, d)?;
        let (Some(la), Some(lb)) = (sub.local(a), sub.local(b)) else {
            return Err(SepError::Precondition("an endpoint lies in D".into()));
        };
        let local = cert.map_sets(|s| sub.localize(s));
        let mb = match mineable_to_barrier(&sub.graph, la, lb, &local, self.params.t, self.params.phi) {
            Ok(mb) => mb,
            Err(e) => {
                self.trace[slot].note = Some(format!("barrier step failed: {e}"));
                return Ok(finish(self, "fallback_min_separator", min_separator(g, a, b)?));
            }
        };
        let bar = &mb.barrier;
        let (bx, by, bz, bc) = (sub.lift(&bar.x), sub.lift(&bar.y), sub.lift(&bar.z), sub.lift(&bar.c));
        let m = d.union(&sub.lift(&mb.m));
        {
            let node = &mut self.trace[slot];
            node.x = bx.len();
            node.y = by.len();
            node.z = bz.len();
            node.c = bc.len();
            node.m = m.len();
        }
        let body = bx.union(&by).union(&bz);
        let cs = bc.to_vec();
        let mut out = m.union(&bc);
        let mut audit = m.len() + bc.len();
        let mut slim_pairs = 0;
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                let (u, v) = (cs[i], cs[j]);
                if g.adjacent(u, v) {
                    continue;
                }
                let mut keep = body.clone();
                keep.insert(u);
                keep.insert(v);
                let js = induced_subgraph(g, &keep)?;
                let (lu, lv) = (js.local(u).unwrap(), js.local(v).unwrap());
                if !is_slim_pair(&js.graph, lu, lv, self.params.q)? {
                    continue;
                }
                slim_pairs += 1;
                let muv = if js.graph.n() < g.n() {
                    let jf = project_forest(f, &js);
                    let jtop: Vec<usize> = js.to_parent.iter().map(|&p| top[p]).collect();
                    self.recurse(&js.graph, &jf, lu, lv, &jtop, depth + 1)?
                } else {
                    min_separator(&js.graph, lu, lv)?
                };
                audit += muv.len();
                out.extend_from(&js.lift(&muv));
            }
        }
        self.trace[slot].slim_pairs = slim_pairs;
        self.trace[slot].audit = audit;
        if out.len() > audit {
            return Err(SepError::Falsification("separator larger than its audited parts".into()));
        }
        if is_separator(g, &out, a, b)? {
            Ok(finish(self, "barrier", out))
        } else {
            self.trace[slot].note = Some("barrier pieces did not separate; repaired with a minimum separator".into());
            Ok(finish(self, "repaired", min_separator(g, a, b)?))
        }
    }

    /// `p` rounds of balanced bags minus leaves, joined with separators for every `q`-slim pair
    /// drawn from two different rounds; verified `(w, 1/2)`-balanced.
    pub fn balanced_separator(
        &mut self,
        g: &Graph,
        w: &WeightFunction,
        f: &StarForest,
    ) -> Result<BalancedOutcome, SepError> {
        self.params.validate()?;
        f.validate(g)?;
        if w.len() != g.n() {
            return Err(GraphError::BadWeights("weight vector length differs from n".into()).into());
        }
        let mut removed = VertexSet::new();
        let mut rounds: Vec<VertexSet> = Vec::new();
        let mut early = false;
        for _ in 0..self.params.p {
            let sub = delete_vertices(g, &removed)?;
            if sub.graph.n() == 0 {
                break;
            }
            let Some(wi) = w.restrict(&sub) else {
                early = true;
                break;
            };
            let fi = project_forest(f, &sub);
            let td = self.decompose(&sub.graph, &fi)?;
            let node = balanced_bag(&sub.graph, &td, &wi, 0.5)?;
            let xi_local = td.bags[node].difference(&fi.leaf_set());
            let full = wi.of(&xi_local) >= 1.0 - WEIGHT_EPS;
            let xi = sub.lift(&xi_local);
            removed.extend_from(&xi);
            rounds.push(xi);
            if full {
                early = true;
                break;
            }
        }
        let mut sep = removed.clone();
        let mut slim_pairs = 0;
        if !early {
            for i in 0..rounds.len() {
                for j in i + 1..rounds.len() {
                    for v in rounds[i].iter() {
                        for v2 in rounds[j].iter() {
                            if g.adjacent(v, v2) || !is_slim_pair(g, v, v2, self.params.q)? {
                                continue;
                            }
                            slim_pairs += 1;
                            let s = self.separate_slim_pair(g, f, v, v2)?;
                            sep.extend_from(&s);
                        }
                    }
                }
            }
        }
        if !is_balanced_separator(g, w, &sep, 0.5) {
            return Err(SepError::Falsification("union of rounds and slim-pair separators is not balanced".into()));
        }
        Ok(BalancedOutcome { separator: sep, rounds, slim_pairs, early })
    }
}

/// Free-function form of the mining step.
#[allow(clippy::too_many_arguments)]
pub fn mineslim<P>(
    g: &Graph,
    f: &StarForest,
    r: usize,
    q: usize,
    x: usize,
    a: usize,
    b: usize,
    provider: P,
) -> Result<MineOutcome, SepError>
where
    P: FnMut(&Graph, &StarForest) -> Result<TreeDecomposition, String>,
{
    let params = SlimParams { t: 1, p: 2, q, r, x, phi: 1.0, depth_guard: DEFAULT_DEPTH_GUARD, enforce_psi: false };
    SlimEngine::new(params, provider).mineslim(g, f, a, b)
}

/// Separator for a `q`-slim pair with the engine's trace discarded.
pub fn separate_slim_pair<P>(
    g: &Graph,
    f: &StarForest,
    a: usize,
    b: usize,
    params: SlimParams,
    provider: P,
) -> Result<VertexSet, SepError>
where
    P: FnMut(&Graph, &StarForest) -> Result<TreeDecomposition, String>,
{
    SlimEngine::new(params, provider).separate_slim_pair(g, f, a, b)
}

pub fn balanced_separator_slim<P>(
    g: &Graph,
    w: &WeightFunction,
    f: &StarForest,
    params: SlimParams,
    provider: P,
) -> Result<VertexSet, SepError>
where
    P: FnMut(&Graph, &StarForest) -> Result<TreeDecomposition, String>,
{
    SlimEngine::new(params, provider).balanced_separator(g, w, f).map(|o| o.separator)
}
