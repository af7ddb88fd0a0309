//! Tree decompositions: verification, PACE text format, an exact oracle,
//! balanced bags, star forests with the μ measure, and the separator-driven
//! construction.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{
    components_within, induced_subgraph, is_anticomplete, is_balanced_separator, neighborhood, Graph, GraphError,
    Subgraph, VertexSet, WeightFunction, WEIGHT_EPS,
};

pub const DEFAULT_EXACT_CAP: usize = 14;
/// Bitmask DP table is `2^n` bytes; beyond this it is not worth attempting.
pub const HARD_EXACT_CAP: usize = 26;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum DecompError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has {n} vertices, above the exact-treewidth cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("set is not F-based: it meets star {0} without containing it")]
    NotFBased(usize),
    #[error("invalid star forest: {0}")]
    BadForest(String),
    #[error("invalid tree decomposition: {0:?}")]
    BadTd(TdViolation),
    #[error("balance parameter c = {0} outside [1/2, 1)")]
    BadC(f64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("separator provider failed: {reason}")]
    Provider { reason: String, transcript: Vec<SepCall> },
    #[error("no balanced bag found")]
    NoBalancedBag,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    /// Adjacency lists of the decomposition tree.
    pub tree: Vec<Vec<usize>>,
    pub bags: Vec<VertexSet>,
}

impl TreeDecomposition {
    pub fn single(bag: VertexSet) -> Self {
        Self { tree: vec![Vec::new()], bags: vec![bag] }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn add_node(&mut self, bag: VertexSet) -> usize {
        self.bags.push(bag);
        self.tree.push(Vec::new());
        self.bags.len() - 1
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        self.tree[i].push(j);
        self.tree[j].push(i);
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> =
            (0..self.len()).flat_map(|i| self.tree[i].iter().filter(move |&&j| i < j).map(move |&j| (i, j))).collect();
        e.sort_unstable();
        e
    }

    /// Largest bag size minus one (0 for the empty decomposition).
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// PACE `.td` text; bags and vertices are 1-based.
    pub fn to_pace(&self, n: usize) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "s td {} {} {}", self.len(), self.bags.iter().map(|b| b.len()).max().unwrap_or(0), n);
        for (i, b) in self.bags.iter().enumerate() {
            let _ = write!(s, "b {}", i + 1);
            for v in b.iter() {
                let _ = write!(s, " {}", v + 1);
            }
            s.push('\n');
        }
        for (i, j) in self.edges() {
            let _ = writeln!(s, "{} {}", i + 1, j + 1);
        }
        s
    }

    /// Parses PACE `.td` text, returning the decomposition and the declared vertex count.
    pub fn from_pace(text: &str) -> Result<(Self, usize), DecompError> {
        let err = |line: usize, msg: &str| DecompError::Parse { line, msg: msg.into() };
        let mut td = TreeDecomposition::default();
        let mut n = None;
        let mut declared = 0;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            let num = |t: &str| t.parse::<usize>().map_err(|_| err(line, "expected a number"));
            match toks.first().copied() {
                None | Some("c") => continue,
                Some("s") => {
                    if toks.len() != 5 || toks[1] != "td" || n.is_some() {
                        return Err(err(line, "bad solution line"));
                    }
                    declared = num(toks[2])?;
                    n = Some(num(toks[4])?);
                    td.bags = vec![VertexSet::new(); declared];
                    td.tree = vec![Vec::new(); declared];
                }
                Some("b") => {
                    let nv = n.ok_or_else(|| err(line, "bag before solution line"))?;
                    let id = toks.get(1).ok_or_else(|| err(line, "missing bag id")).and_then(|t| num(t))?;
                    if id == 0 || id > declared {
                        return Err(err(line, "bag id out of range"));
                    }
                    for t in &toks[2..] {
                        let v = num(t)?;
                        if v == 0 || v > nv {
                            return Err(err(line, "vertex out of range"));
                        }
                        td.bags[id - 1].insert(v - 1);
                    }
                }
                Some(_) => {
                    if n.is_none() || toks.len() != 2 {
                        return Err(err(line, "bad edge line"));
                    }
                    let (i, j) = (num(toks[0])?, num(toks[1])?);
                    if i == 0 || j == 0 || i > declared || j > declared {
                        return Err(err(line, "edge endpoint out of range"));
                    }
                    td.add_edge(i - 1, j - 1);
                }
            }
        }
        let n = n.ok_or_else(|| err(0, "missing solution line"))?;
        Ok((td, n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum TdViolation {
    NotATree,
    BagOutOfRange { bag: usize, vertex: usize },
    VertexUncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    Disconnected { vertex: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TdReport {
    pub valid: bool,
    pub width: usize,
    pub violation: Option<TdViolation>,
}

fn is_tree(adj: &[Vec<usize>]) -> bool {
    let k = adj.len();
    if k == 0 {
        return true;
    }
    let edges: usize = adj.iter().map(|a| a.len()).sum::<usize>();
    if edges != 2 * (k - 1) {
        return false;
    }
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for &j in &adj[i] {
            if j >= k {
                return false;
            }
            if !seen[j] {
                seen[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == k
}

/// Checks vertex coverage, edge coverage and connectivity of every vertex's occurrence set.
pub fn verify_td(g: &Graph, td: &TreeDecomposition) -> TdReport {
    let width = td.width();
    let fail = |v| TdReport { valid: false, width, violation: Some(v) };
    if td.tree.len() != td.bags.len() || !is_tree(&td.tree) || (g.n() > 0 && td.is_empty()) {
        return fail(TdViolation::NotATree);
    }
    let mut occ: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, b) in td.bags.iter().enumerate() {
        for v in b.iter() {
            if v >= g.n() {
                return fail(TdViolation::BagOutOfRange { bag: i, vertex: v });
            }
            occ[v].push(i);
        }
    }
    if let Some(v) = (0..g.n()).find(|&v| occ[v].is_empty()) {
        return fail(TdViolation::VertexUncovered { vertex: v });
    }
    for (u, v) in g.edges() {
        if !occ[u].iter().any(|&i| td.bags[i].contains(v)) {
            return fail(TdViolation::EdgeUncovered { u, v });
        }
    }
    let mut mark = vec![usize::MAX; td.len()];
    for v in 0..g.n() {
        for &i in &occ[v] {
            mark[i] = v;
        }
        let mut stack = vec![occ[v][0]];
        let mut seen = vec![false; td.len()];
        seen[occ[v][0]] = true;
        let mut reached = 1;
        while let Some(i) = stack.pop() {
            for &j in &td.tree[i] {
                if mark[j] == v && !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    stack.push(j);
                }
            }
        }
        if reached != occ[v].len() {
            return fail(TdViolation::Disconnected { vertex: v });
        }
    }
    TdReport { valid: true, width, violation: None }
}

fn require_td(g: &Graph, td: &TreeDecomposition) -> Result<(), DecompError> {
    match verify_td(g, td).violation {
        Some(v) => Err(DecompError::BadTd(v)),
        None => Ok(()),
    }
}

/// Decomposition induced by an elimination ordering: bag of `v` is `v` plus its later
/// neighbours in the fill-in graph, attached to the earliest of those.
pub fn td_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut td = TreeDecomposition::default();
    let mut parent_vertex = vec![None; n];
    for &v in order {
        let later: Vec<usize> = adj[v].iter().filter(|&u| pos[u] > pos[v]).collect();
        for (i, &x) in later.iter().enumerate() {
            for &y in &later[i + 1..] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
        parent_vertex[v] = later.iter().copied().min_by_key(|&u| pos[u]);
        let mut bag: VertexSet = later.iter().copied().collect();
        bag.insert(v);
        td.add_node(bag);
    }
    let mut last_root: Option<usize> = None;
    for (i, &v) in order.iter().enumerate() {
        match parent_vertex[v] {
            Some(p) => td.add_edge(i, pos[p]),
            None => {
                if let Some(r) = last_root {
                    td.add_edge(r, i);
                }
                last_root = Some(i);
            }
        }
    }
    td
}

/// Greedy minimum-degree elimination ordering (ties by index), on the fill-in graph.
pub fn min_degree_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| (adj[v].len(), v)).expect("vertices remain");
        let nb = adj[v].to_vec();
        for (i, &x) in nb.iter().enumerate() {
            adj[x].remove(v);
            for &y in &nb[i + 1..] {
                adj[x].insert(y);
                adj[y].insert(x);
            }
        }
        gone[v] = true;
        order.push(v);
    }
    order
}

/// Exact decomposition up to `exact_up_to` vertices, min-degree elimination beyond.
pub fn heuristic_td(g: &Graph, exact_up_to: usize) -> TreeDecomposition {
    if g.n() <= exact_up_to {
        if let Ok(ex) = exact_treewidth(g, exact_up_to) {
            return ex.td;
        }
    }
    td_from_elimination(g, &min_degree_order(g))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactTreewidth {
    pub width: usize,
    pub order: Vec<usize>,
    pub td: TreeDecomposition,
}

/// Exact treewidth by dynamic programming over elimination prefixes:
/// `TW(S) = min_{v∈S} max(TW(S∖v), |Q(S∖v, v)|)`.
pub fn exact_treewidth(g: &Graph, cap: usize) -> Result<ExactTreewidth, DecompError> {
    let n = g.n();
    if n > cap.min(HARD_EXACT_CAP) {
        return Err(DecompError::CapExceeded { n, cap: cap.min(HARD_EXACT_CAP) });
    }
    if n == 0 {
        return Ok(ExactTreewidth { width: 0, order: Vec::new(), td: TreeDecomposition::default() });
    }
    let nb: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    let q = |s: u32, v: usize| -> u32 {
        let inside = s | (1 << v);
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        while frontier != 0 {
            let mut grow = 0u32;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                grow |= nb[u];
            }
            let new = grow & s & !comp;
            comp |= new;
            frontier = new;
        }
        let mut out = 0u32;
        let mut c = comp;
        while c != 0 {
            let u = c.trailing_zeros() as usize;
            c &= c - 1;
            out |= nb[u];
        }
        (out & !inside).count_ones()
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut tw = vec![u8::MAX; 1usize << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut bits = s;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            let prev = tw[rest as usize];
            if prev >= best {
                continue;
            }
            let cand = prev.max(q(rest, v) as u8);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = tw[s as usize];
        let mut bits = s;
        loop {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let rest = s & !(1 << v);
            if tw[rest as usize].max(q(rest, v) as u8) == target {
                order.push(v);
                s = rest;
                break;
            }
        }
    }
    order.reverse();
    let td = td_from_elimination(g, &order);
    Ok(ExactTreewidth { width: tw[full as usize] as usize, order, td })
}

/// A bag whose removal leaves no component heavier than `c`, found by walking towards
/// the heavy side.
pub fn balanced_bag(g: &Graph, td: &TreeDecomposition, w: &WeightFunction, c: f64) -> Result<usize, DecompError> {
    require_td(g, td)?;
    let mut node = 0;
    let mut came_from = usize::MAX;
    for _ in 0..=td.len() {
        let bag = &td.bags[node];
        let mut alive = vec![true; g.n()];
        for v in bag.iter() {
            alive[v] = false;
        }
        let heavy = components_within(g, &alive).into_iter().find(|d| w.of(d) > c + WEIGHT_EPS);
        let Some(heavy) = heavy else { return Ok(node) };
        let probe = heavy.first().expect("components are non-empty");
        let next = td.tree[node].iter().copied().find(|&j| j != came_from && subtree_has(td, j, node, probe));
        // Fall back to any branch (including the one we came from) if the orientation is ambiguous.
        let next = next.or_else(|| td.tree[node].iter().copied().find(|&j| subtree_has(td, j, node, probe)));
        match next {
            Some(j) => {
                came_from = node;
                node = j;
            }
            None => return Err(DecompError::NoBalancedBag),
        }
    }
    Err(DecompError::NoBalancedBag)
}

fn subtree_has(td: &TreeDecomposition, root: usize, avoid: usize, v: usize) -> bool {
    let mut stack = vec![(root, avoid)];
    while let Some((i, from)) = stack.pop() {
        if td.bags[i].contains(v) {
            return true;
        }
        for &j in &td.tree[i] {
            if j != from {
                stack.push((j, i));
            }
        }
    }
    false
}

/// Vertex-disjoint, pairwise anticomplete induced stars, each with a designated centre.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarForest {
    pub stars: Vec<VertexSet>,
    pub centers: Vec<usize>,
}

impl StarForest {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates and keeps the given centres.
    pub fn new(g: &Graph, stars: Vec<VertexSet>, centers: Vec<usize>) -> Result<Self, DecompError> {
        let f = Self { stars, centers };
        f.validate(g)?;
        Ok(f)
    }

    /// Infers centres: the unique vertex of degree above one, or the lower index for an edge.
    pub fn from_stars(g: &Graph, stars: Vec<VertexSet>) -> Result<Self, DecompError> {
        let mut centers = Vec::with_capacity(stars.len());
        for s in &stars {
            let deg = |v: usize| g.neighbors(v).iter().filter(|&&u| s.contains(u)).count();
            let c = if s.len() == 2 { s.first() } else { s.iter().find(|&v| deg(v) > 1) };
            centers.push(c.ok_or_else(|| DecompError::BadForest(format!("no centre in {:?}", s.to_vec())))?);
        }
        Self::new(g, stars, centers)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), DecompError> {
        let bad = |m: String| Err(DecompError::BadForest(m));
        if self.stars.len() != self.centers.len() {
            return bad("one centre per star required".into());
        }
        for (i, s) in self.stars.iter().enumerate() {
            g.check_set(s)?;
            let c = self.centers[i];
            if s.len() < 2 || !s.contains(c) {
                return bad(format!("star {i} is too small or misses its centre"));
            }
            for v in s.iter().filter(|&v| v != c) {
                if !g.adjacent(c, v) {
                    return bad(format!("leaf {v} of star {i} is not adjacent to the centre"));
                }
            }
            let leaves = s.difference(&VertexSet::singleton(c));
            if !g.is_stable(&leaves) {
                return bad(format!("star {i} is not induced"));
            }
            for j in i + 1..self.stars.len() {
                if !s.is_disjoint(&self.stars[j]) || !is_anticomplete(g, s, &self.stars[j]) {
                    return bad(format!("stars {i} and {j} touch"));
                }
            }
        }
        Ok(())
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        let mut all = VertexSet::new();
        for s in &self.stars {
            all.extend_from(s);
        }
        all
    }

    pub fn center_set(&self) -> VertexSet {
        self.centers.iter().copied().collect()
    }

    pub fn leaf_set(&self) -> VertexSet {
        self.vertices().difference(&self.center_set())
    }

    /// Star index of every vertex (`None` outside the forest), for a host on `n` vertices.
    pub fn star_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, s) in self.stars.iter().enumerate() {
            for v in s.iter() {
                if v < n {
                    out[v] = Some(i);
                }
            }
        }
        out
    }
}

/// Projection onto an induced subgraph, in the subgraph's indices: a star survives when its
/// centre and at least one leaf survive.
pub fn project_forest(f: &StarForest, sub: &Subgraph) -> StarForest {
    let mut out = StarForest::empty();
    for (s, &c) in f.stars.iter().zip(&f.centers) {
        let Some(lc) = sub.local(c) else { continue };
        let kept = sub.localize(s);
        if kept.len() >= 2 {
            out.stars.push(kept);
            out.centers.push(lc);
        }
    }
    out
}

pub fn is_f_based(f: &StarForest, x: &VertexSet) -> bool {
    f.stars.iter().all(|s| s.is_disjoint(x) || s.is_subset(x))
}

/// `μ_F(X)`: stars met by `X` plus vertices of `X` outside the forest.
pub fn f_measure(f: &StarForest, x: &VertexSet) -> Result<usize, DecompError> {
    let mut stars = 0;
    let mut covered = 0;
    for (i, s) in f.stars.iter().enumerate() {
        if s.is_disjoint(x) {
            continue;
        }
        if !s.is_subset(x) {
            return Err(DecompError::NotFBased(i));
        }
        stars += 1;
        covered += s.len();
    }
    Ok(stars + x.len() - covered)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrReport {
    pub valid: bool,
    pub max_measure: usize,
    pub violation: Option<String>,
}

/// `td` is a tree decomposition all of whose bags are `F`-based with `μ_F ≤ r`.
pub fn verify_fr(g: &Graph, f: &StarForest, td: &TreeDecomposition, r: usize) -> FrReport {
    let fail = |m: String, mu| FrReport { valid: false, max_measure: mu, violation: Some(m) };
    if let Err(e) = f.validate(g) {
        return fail(e.to_string(), 0);
    }
    if let Some(v) = verify_td(g, td).violation {
        return fail(format!("{v:?}"), 0);
    }
    let mut max_mu = 0;
    for (i, bag) in td.bags.iter().enumerate() {
        match f_measure(f, bag) {
            Ok(mu) => {
                max_mu = max_mu.max(mu);
                if mu > r {
                    return fail(format!("bag {i} has measure {mu} > {r}"), max_mu);
                }
            }
            Err(e) => return fail(format!("bag {i}: {e}"), max_mu),
        }
    }
    FrReport { valid: true, max_measure: max_mu, violation: None }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrDecomposition {
    pub td: TreeDecomposition,
    pub forest: StarForest,
    pub r: usize,
}

/// One provider invocation during the separator-driven construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SepCall {
    pub piece: usize,
    pub interface: usize,
    /// `interface` when the weight sat (mostly) on the interface, `rest` otherwise.
    pub weight_on: String,
    pub separator: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SepTd {
    pub td: TreeDecomposition,
    pub width: usize,
    /// `d/(1−c)`.
    pub bound: f64,
    pub calls: Vec<SepCall>,
}

/// Builds a tree decomposition from a balanced-separator oracle. The provider sees each piece
/// as an induced subgraph (with its map to `g`) and answers in the piece's indices.
///
/// Each piece `(U, W)` with interface `W ⊆ U` gets the bag `W ∪ S`, where `S` balances the
/// interface (when it is full) or the rest of the piece (when there is room); the pieces
/// below are `D ∪ N(D)` for the components `D` of `G[U] − (W ∪ S)`.
pub fn td_from_balanced_separators<P>(g: &Graph, mut provider: P, c: f64, d: usize) -> Result<SepTd, DecompError>
where
    P: FnMut(&Subgraph, &WeightFunction) -> Result<VertexSet, String>,
{
    if !(0.5..1.0).contains(&c) {
        return Err(DecompError::BadC(c));
    }
    let bound = d as f64 / (1.0 - c);
    let k = ((bound - 1e-9).ceil() as usize).max(1);
    let mut td = TreeDecomposition::default();
    let mut calls = Vec::new();
    if g.n() == 0 {
        return Ok(SepTd { td, width: 0, bound, calls });
    }
    let mut roots = Vec::new();
    // Pieces still to expand: (U, W, parent node).
    let mut work: VecDeque<(VertexSet, VertexSet, Option<usize>)> = VecDeque::new();
    let mut alive = vec![true; g.n()];
    for comp in components_within(g, &alive) {
        work.push_back((comp, VertexSet::new(), None));
    }
    alive.clear();
    while let Some((u, w, parent)) = work.pop_front() {
        let node = if u.len() <= k + 1 {
            leaf(g, &u, &w, &mut td)?
        } else {
            let sub = induced_subgraph(g, &u)?;
            let lw = sub.localize(&w);
            let rest = sub.graph.vertices().difference(&lw);
            let (mut s, mut on) = if lw.len() + d <= k || lw.is_empty() {
                (call(&mut provider, &sub, &rest, None, &mut calls, c, d)?, "rest")
            } else {
                (call(&mut provider, &sub, &lw, Some(&rest), &mut calls, c, d)?, "interface")
            };
            if stuck(&sub.graph, &lw, &s) {
                s = call(&mut provider, &sub, &rest, None, &mut calls, c, d)?;
                on = "rest";
            }
            if let Some(last) = calls.last_mut() {
                last.weight_on = on.into();
            }
            let bag_local = lw.union(&s);
            let node = td.add_node(sub.lift(&bag_local));
            let mut alive = vec![true; sub.graph.n()];
            for v in bag_local.iter() {
                alive[v] = false;
            }
            for comp in components_within(&sub.graph, &alive) {
                let iface = neighborhood(&sub.graph, &comp);
                work.push_back((sub.lift(&comp.union(&iface)), sub.lift(&iface), Some(node)));
            }
            node
        };
        match parent {
            Some(p) => td.add_edge(p, node),
            None => roots.push(node),
        }
    }
    for pair in roots.windows(2) {
        td.add_edge(pair[0], pair[1]);
    }
    let width = td.width();
    Ok(SepTd { td, width, bound, calls })
}

/// Small piece: min-degree elimination of `G[U]` with the interface completed to a clique,
/// so the interface lands in one bag; returns that bag's node.
fn leaf(g: &Graph, u: &VertexSet, w: &VertexSet, td: &mut TreeDecomposition) -> Result<usize, DecompError> {
    let sub = induced_subgraph(g, u)?;
    let mut h = sub.graph.clone();
    let lw = sub.localize(w).to_vec();
    for (i, &x) in lw.iter().enumerate() {
        for &y in &lw[i + 1..] {
            if !h.adjacent(x, y) {
                h.add_edge(x, y)?;
            }
        }
    }
    let local = td_from_elimination(&h, &min_degree_order(&h));
    let lw: VertexSet = lw.into();
    let anchor = local.bags.iter().position(|b| lw.is_subset(b)).unwrap_or(0);
    let base = td.len();
    for b in &local.bags {
        td.add_node(sub.lift(b));
    }
    for (i, j) in local.edges() {
        td.add_edge(base + i, base + j);
    }
    Ok(base + anchor)
}

/// The only child piece would equal the current one.
fn stuck(h: &Graph, w: &VertexSet, s: &VertexSet) -> bool {
    if !s.is_subset(w) {
        return false;
    }
    let mut alive = vec![true; h.n()];
    for v in w.iter() {
        alive[v] = false;
    }
    let comps = components_within(h, &alive);
    comps.len() == 1 && neighborhood(h, &comps[0]) == *w
}

fn call<P>(
    provider: &mut P,
    sub: &Subgraph,
    support: &VertexSet,
    background: Option<&VertexSet>,
    calls: &mut Vec<SepCall>,
    c: f64,
    d: usize,
) -> Result<VertexSet, DecompError>
where
    P: FnMut(&Subgraph, &WeightFunction) -> Result<VertexSet, String>,
{
    let h = &sub.graph;
    let n = h.n();
    let mut wv = vec![0.0; n];
    // A little weight on the background keeps the separator from sitting inside the interface.
    let eps = match background {
        Some(b) if !b.is_empty() => 1.0 / (4.0 * (support.len() as f64 + 1.0)),
        _ => 0.0,
    };
    for v in support.iter() {
        wv[v] += (1.0 - eps) / support.len() as f64;
    }
    if let Some(b) = background.filter(|_| eps > 0.0) {
        for v in b.iter() {
            wv[v] += eps / b.len() as f64;
        }
    }
    let w = WeightFunction::new(wv)?;
    let transcript_entry = |sep: Vec<usize>| SepCall {
        piece: n,
        interface: n - support.len(),
        weight_on: if background.is_some() { "interface" } else { "rest" }.into(),
        separator: sep,
    };
    let s = match provider(sub, &w) {
        Ok(s) => s,
        Err(reason) => return Err(DecompError::Provider { reason, transcript: calls.clone() }),
    };
    calls.push(transcript_entry(sub.lift(&s.iter().filter(|&v| v < n).collect()).to_vec()));
    if s.iter().any(|v| v >= n) {
        return Err(DecompError::Provider { reason: "separator leaves the piece".into(), transcript: calls.clone() });
    }
    if s.len() > d {
        return Err(DecompError::Provider {
            reason: format!("separator of size {} exceeds {d}", s.len()),
            transcript: calls.clone(),
        });
    }
    if !is_balanced_separator(h, &w, &s, c) {
        return Err(DecompError::Provider { reason: "separator is not balanced".into(), transcript: calls.clone() });
    }
    Ok(s)
}

/// Weighted centroid of a forest: a vertex whose removal leaves components of weight
/// at most 1/2. Used as the reference provider for trees.
pub fn weighted_centroid(h: &Graph, w: &WeightFunction) -> Result<VertexSet, String> {
    let comps = components_within(h, &vec![true; h.n()]);
    if let Some(d) = comps.iter().find(|d| w.of(d) > 0.5 + WEIGHT_EPS) {
        // Walk inside the heavy component towards heavier branches.
        let mut v = d.first().ok_or("empty component")?;
        let mut from = usize::MAX;
        loop {
            let mut alive = vec![true; h.n()];
            alive[v] = false;
            let heavy = components_within(h, &alive).into_iter().find(|k| w.of(k) > 0.5 + WEIGHT_EPS);
            let Some(heavy) = heavy else { return Ok(VertexSet::singleton(v)) };
            let next = h.neighbors(v).iter().copied().find(|&u| heavy.contains(u));
            match next {
                Some(u) if u != from => {
                    from = v;
                    v = u;
                }
                _ => return Err("graph is not a forest".into()),
            }
        }
    }
    Ok(VertexSet::new())
}

/// Groups `(node → bag)` as a map, handy for printing.
pub fn bag_map(td: &TreeDecomposition) -> BTreeMap<usize, Vec<usize>> {
    td.bags.iter().enumerate().map(|(i, b)| (i, b.to_vec())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphKind};

    #[test]
    fn trivial_decompositions() {
        let e = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(verify_td(&e, &TreeDecomposition::single([0, 1].into())).valid);
        let p3 = generate(&GraphKind::Path { n: 3 }).unwrap();
        let mut td = TreeDecomposition::default();
        let a = td.add_node([0, 1].into());
        let b = td.add_node([1, 2].into());
        td.add_edge(a, b);
        let r = verify_td(&p3, &td);
        assert!(r.valid && r.width == 1);
        let bad = TreeDecomposition { tree: vec![vec![1], vec![0]], bags: vec![[0].into(), [1, 2].into()] };
        assert_eq!(verify_td(&p3, &bad).violation, Some(TdViolation::EdgeUncovered { u: 0, v: 1 }));
    }

    #[test]
    fn disconnected_occurrence() {
        let p3 = generate(&GraphKind::Path { n: 3 }).unwrap();
        let td = TreeDecomposition {
            tree: vec![vec![1], vec![0, 2], vec![1]],
            bags: vec![[0, 1].into(), [1, 2].into(), [0].into()],
        };
        assert_eq!(verify_td(&p3, &td).violation, Some(TdViolation::Disconnected { vertex: 0 }));
    }

    #[test]
    fn exact_small_values() {
        let cases = [
            (GraphKind::Complete { n: 4 }, 3),
            (GraphKind::Path { n: 6 }, 1),
            (GraphKind::Cycle { n: 5 }, 2),
            (GraphKind::CompleteBipartite { s: 3, t: 3 }, 3),
        ];
        for (kind, want) in cases {
            let g = generate(&kind).unwrap();
            let ex = exact_treewidth(&g, DEFAULT_EXACT_CAP).unwrap();
            assert_eq!(ex.width, want, "{kind:?}");
            let r = verify_td(&g, &ex.td);
            assert!(r.valid && r.width == want);
        }
        let big = generate(&GraphKind::Path { n: 15 }).unwrap();
        assert!(matches!(exact_treewidth(&big, 14), Err(DecompError::CapExceeded { .. })));
    }

    #[test]
    fn pace_roundtrip() {
        let g = generate(&GraphKind::Cycle { n: 5 }).unwrap();
        let td = exact_treewidth(&g, 14).unwrap().td;
        let text = td.to_pace(5);
        assert!(text.starts_with("s td 5 3 5\n"));
        let (back, n) = TreeDecomposition::from_pace(&text).unwrap();
        assert_eq!(n, 5);
        assert_eq!(back.bags, td.bags);
        assert_eq!(back.edges(), td.edges());
    }

    #[test]
    fn balanced_bag_on_path() {
        let g = generate(&GraphKind::Path { n: 5 }).unwrap();
        let mut td = TreeDecomposition::default();
        for i in 0..4 {
            td.add_node([i, i + 1].into());
            if i > 0 {
                td.add_edge(i - 1, i);
            }
        }
        let w = WeightFunction::uniform(5);
        let node = balanced_bag(&g, &td, &w, 0.5).unwrap();
        assert!(is_balanced_separator(&g, &w, &td.bags[node], 0.5));
        let point = WeightFunction::new(vec![0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert!(td.bags[balanced_bag(&g, &td, &point, 0.5).unwrap()].contains(4));
    }

    #[test]
    fn forest_projection_and_measure() {
        // star 0-{1,2} plus isolated 3
        let g = Graph::from_edges(4, &[(0, 1), (0, 2)]).unwrap();
        let f = StarForest::from_stars(&g, vec![[0, 1, 2].into()]).unwrap();
        assert_eq!(f.centers, vec![0]);
        assert_eq!(f_measure(&f, &[0, 1, 2].into()).unwrap(), 1);
        assert_eq!(f_measure(&f, &[0, 1, 2, 3].into()).unwrap(), 2);
        assert!(f_measure(&f, &[0, 1].into()).is_err());
        let sub = induced_subgraph(&g, &[0, 1, 3].into()).unwrap();
        let p = project_forest(&f, &sub);
        assert_eq!(p.stars, vec![[0, 1].into()]);
        let sub = induced_subgraph(&g, &[1, 2, 3].into()).unwrap();
        assert!(project_forest(&f, &sub).is_empty());
        let whole = induced_subgraph(&g, &g.vertices()).unwrap();
        assert_eq!(project_forest(&f, &whole), f);
    }

    #[test]
    fn fr_verification() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (2, 3)]).unwrap();
        let f = StarForest::from_stars(&g, vec![[0, 1].into()]).unwrap();
        let mut td = TreeDecomposition::default();
        td.add_node([0, 1, 2].into());
        td.add_node([2, 3].into());
        td.add_edge(0, 1);
        let r = verify_fr(&g, &f, &td, 2);
        assert!(r.valid && r.max_measure == 2);
        let mut split = TreeDecomposition::default();
        split.add_node([0, 1].into());
        split.add_node([0, 2].into());
        split.add_node([2, 3].into());
        split.add_edge(0, 1);
        split.add_edge(1, 2);
        assert!(!verify_fr(&g, &f, &split, 3).valid);
        assert!(verify_fr(&g, &StarForest::empty(), &split, 2).valid);
    }

    fn centroid(s: &Subgraph, w: &WeightFunction) -> Result<VertexSet, String> {
        weighted_centroid(&s.graph, w)
    }

    #[test]
    fn centroid_construction_on_a_path() {
        let g = generate(&GraphKind::Path { n: 20 }).unwrap();
        let out = td_from_balanced_separators(&g, centroid, 0.5, 1).unwrap();
        assert!(verify_td(&g, &out.td).valid);
        assert!(out.width <= 2, "width {}", out.width);
        let empty = Graph::empty(0);
        assert!(td_from_balanced_separators(&empty, centroid, 0.5, 1).unwrap().td.is_empty());
    }

    #[test]
    fn oversized_provider_aborts() {
        let g = generate(&GraphKind::Complete { n: 6 }).unwrap();
        let all_but = |h: &Subgraph, _: &WeightFunction| Ok((1..h.graph.n()).collect::<VertexSet>());
        assert!(matches!(td_from_balanced_separators(&g, all_but, 0.5, 2), Err(DecompError::Provider { .. })));
        let out = td_from_balanced_separators(&g, all_but, 0.5, 5).unwrap();
        assert!(verify_td(&g, &out.td).valid && out.width as f64 <= out.bound);
    }
}
