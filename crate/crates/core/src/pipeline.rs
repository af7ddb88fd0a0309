//! Star colourings, colour-pair edge classes and dimension, star-forest
//! contraction with decomposition lifting, and the top-level treewidth pipeline.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{bound_r_sequence, BoundError, BoundParams};
use crate::decomposition::{
    balanced_bag, exact_treewidth, heuristic_td, project_forest, td_from_balanced_separators, verify_fr, verify_td,
    DecompError, FrDecomposition, StarForest, TreeDecomposition,
};
use crate::graph::{components_within, Graph, GraphError, Subgraph, VertexSet, WeightFunction};
use crate::minors::{class_membership, clique_below, contract_connected_sets, Membership, MinorError, MinorModel};
use crate::separator::{SlimEngine, SlimParams};

/// Contracted graphs up to this size get an exact decomposition inside providers.
pub const PROVIDER_EXACT_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PipelineError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decomp(#[from] DecompError),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error("invalid star colouring: {0:?}")]
    BadColoring(StarViolation),
    #[error("graph is not in the class: it contains the model {}", serde_json::to_string(.0).unwrap_or_default())]
    Refuted(MinorModel),
    #[error("input decomposition does not verify")]
    UnverifiedTd,
    #[error("internal guard failed: {0}")]
    Internal(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarColoring {
    pub colors: Vec<usize>,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum StarViolation {
    WrongLength,
    Improper { u: usize, v: usize },
    BicoloredP4 { path: [usize; 4] },
}

/// Proper, and no path on four vertices uses only two colours.
pub fn verify_star_coloring(g: &Graph, col: &StarColoring) -> Result<(), StarViolation> {
    let c = &col.colors;
    if c.len() != g.n() || c.iter().any(|&x| x >= col.k.max(1)) && g.n() > 0 {
        return Err(StarViolation::WrongLength);
    }
    for (u, v) in g.edges() {
        if c[u] == c[v] {
            return Err(StarViolation::Improper { u, v });
        }
    }
    for (b, cc) in g.edges() {
        for (x, y) in [(b, cc), (cc, b)] {
            for &a in g.neighbors(x) {
                if a == y || c[a] != c[y] {
                    continue;
                }
                for &d in g.neighbors(y) {
                    if d != x && d != a && c[d] == c[x] {
                        return Err(StarViolation::BicoloredP4 { path: [a, x, y, d] });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Would colouring `v` with `c` create a two-coloured path on four vertices through `v`?
fn creates_p4(g: &Graph, col: &[Option<usize>], v: usize, c: usize) -> bool {
    let colour = |u: usize| if u == v { Some(c) } else { col[u] };
    for &u in g.neighbors(v) {
        let Some(cu) = col[u] else { continue };
        // v at an end: v-u-w-x
        for &w in g.neighbors(u) {
            if w == v || colour(w) != Some(c) {
                continue;
            }
            if g.neighbors(w).iter().any(|&x| x != u && x != v && colour(x) == Some(cu)) {
                return true;
            }
        }
        // v inside: x-v-u-w
        for &x in g.neighbors(v) {
            if x == u || colour(x) != Some(cu) {
                continue;
            }
            if g.neighbors(u).iter().any(|&w| w != v && w != x && colour(w) == Some(c)) {
                return true;
            }
        }
    }
    false
}

/// Greedy star colouring: vertices by decreasing degree, each takes the least colour that
/// keeps the colouring proper and free of two-coloured `P_4`.
pub fn star_coloring_greedy(g: &Graph) -> StarColoring {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut col: Vec<Option<usize>> = vec![None; n];
    for v in order {
        let mut c = 0;
        while g.neighbors(v).iter().any(|&u| col[u] == Some(c)) || creates_p4(g, &col, v, c) {
            c += 1;
        }
        col[v] = Some(c);
    }
    let colors: Vec<usize> = col.into_iter().map(|c| c.unwrap_or(0)).collect();
    let k = colors.iter().max().map_or(0, |m| m + 1);
    StarColoring { colors, k }
}

/// The edges between colour classes `i < j` and the star forest they form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairClass {
    pub i: usize,
    pub j: usize,
    pub edges: Vec<(usize, usize)>,
    pub forest: StarForest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePartition {
    pub classes: Vec<PairClass>,
}

pub fn edge_partition(g: &Graph, col: &StarColoring) -> Result<EdgePartition, PipelineError> {
    verify_star_coloring(g, col).map_err(PipelineError::BadColoring)?;
    let c = &col.colors;
    let mut classes = Vec::new();
    for i in 0..col.k {
        for j in i + 1..col.k {
            let edges: Vec<(usize, usize)> =
                g.edges().into_iter().filter(|&(u, v)| (c[u] == i && c[v] == j) || (c[u] == j && c[v] == i)).collect();
            if edges.is_empty() {
                continue;
            }
            let alive: Vec<bool> = (0..g.n()).map(|v| c[v] == i || c[v] == j).collect();
            let stars: Vec<VertexSet> = components_within(g, &alive).into_iter().filter(|s| s.len() >= 2).collect();
            let forest = StarForest::from_stars(g, stars)?;
            classes.push(PairClass { i, j, edges, forest });
        }
    }
    Ok(EdgePartition { classes })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimension {
    pub value: usize,
    /// Active colour pairs in lexicographic order.
    pub active: Vec<(usize, usize)>,
}

/// A pair is active when some vertex meets more than three of its edges.
pub fn dimension(g: &Graph, part: &EdgePartition) -> Dimension {
    let mut active = Vec::new();
    for class in &part.classes {
        let mut deg = vec![0usize; g.n()];
        for &(u, v) in &class.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d > 3) {
            active.push((class.i, class.j));
        }
    }
    Dimension { value: active.len(), active }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedForest {
    pub graph: Graph,
    /// Old vertex → new vertex.
    pub map: Vec<usize>,
    /// New vertex → the old vertices it stands for.
    pub groups: Vec<VertexSet>,
}

/// Contracts every star of `f` into a single star vertex.
pub fn contract_star_forest(g: &Graph, f: &StarForest) -> Result<ContractedForest, PipelineError> {
    f.validate(g)?;
    let c = contract_connected_sets(g, &f.stars)?;
    let mut groups = vec![VertexSet::new(); c.graph.n()];
    for (v, &nv) in c.map.iter().enumerate() {
        groups[nv].insert(v);
    }
    Ok(ContractedForest { graph: c.graph, map: c.map, groups })
}

/// Replaces every star vertex in every bag by its star; `r` is the width of the source plus one.
pub fn lift_decomposition(
    g: &Graph,
    f: &StarForest,
    contracted: &ContractedForest,
    td: &TreeDecomposition,
) -> Result<FrDecomposition, PipelineError> {
    if !verify_td(&contracted.graph, td).valid {
        return Err(PipelineError::UnverifiedTd);
    }
    let bags = td
        .bags
        .iter()
        .map(|b| {
            let mut out = VertexSet::new();
            for v in b.iter() {
                out.extend_from(&contracted.groups[v]);
            }
            out
        })
        .collect();
    let lifted = TreeDecomposition { tree: td.tree.clone(), bags };
    let r = td.width() + 1;
    let report = verify_fr(g, f, &lifted, r);
    if !report.valid {
        return Err(PipelineError::Internal(format!("lifted decomposition fails: {:?}", report.violation)));
    }
    Ok(FrDecomposition { td: lifted, forest: f.clone(), r })
}

/// `(F, r)`-decomposition provider: contract the forest, decompose the contraction, lift.
pub fn contraction_provider(h: &Graph, f: &StarForest) -> Result<TreeDecomposition, String> {
    let c = contract_star_forest(h, f).map_err(|e| e.to_string())?;
    let td = heuristic_td(&c.graph, PROVIDER_EXACT_CAP);
    lift_decomposition(h, f, &c, &td).map(|fr| fr.td).map_err(|e| e.to_string())
}

/// One level of the dimension recursion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineLevel {
    pub level: usize,
    pub n: usize,
    pub colors: usize,
    pub dimension: usize,
    pub chosen_pair: Option<(usize, usize)>,
    pub contracted_n: Option<usize>,
    pub lifted_r: Option<usize>,
    pub separator_bound_d: Option<usize>,
    pub provider_calls: usize,
    pub fallbacks: usize,
    pub achieved_width: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineResult {
    pub td: TreeDecomposition,
    pub reported_width: usize,
    pub dimension: usize,
    /// `log2 r_{dim(G)}`.
    pub log2_theoretical_bound: f64,
    pub membership: String,
    pub clique_below_t: bool,
    pub trace: Vec<PipelineLevel>,
}

/// Treewidth via the dimension induction: contract an active star forest, decompose the
/// contraction recursively, lift, then rebuild the decomposition from slim balanced separators.
pub fn treewidth_bound_pipeline(g: &Graph, params: &BoundParams, budget: u64) -> Result<PipelineResult, PipelineError> {
    params.validate()?;
    let membership = match class_membership(g, params.t, budget)? {
        Membership::NotInClass(model) => return Err(PipelineError::Refuted(model)),
        Membership::InClass => "in_class",
        Membership::Unknown => "unknown",
    };
    let mut trace = Vec::new();
    let (td, dim) = level(g, params, 0, &mut trace)?;
    let report = verify_td(g, &td);
    if !report.valid {
        return Err(PipelineError::Internal(format!("pipeline output fails: {:?}", report.violation)));
    }
    let seq = bound_r_sequence((g.n() as f64).max(2.0), params)?;
    let log2_theoretical_bound = seq.log2[dim.min(seq.log2.len() - 1)];
    Ok(PipelineResult {
        reported_width: td.width(),
        td,
        dimension: dim,
        log2_theoretical_bound,
        membership: membership.into(),
        clique_below_t: clique_below(g, params.t),
        trace,
    })
}

fn level(
    g: &Graph,
    params: &BoundParams,
    depth: usize,
    trace: &mut Vec<PipelineLevel>,
) -> Result<(TreeDecomposition, usize), PipelineError> {
    let col = star_coloring_greedy(g);
    let part = edge_partition(g, &col)?;
    let dim = dimension(g, &part);
    let slot = trace.len();
    trace.push(PipelineLevel {
        level: depth,
        n: g.n(),
        colors: col.k,
        dimension: dim.value,
        chosen_pair: None,
        contracted_n: None,
        lifted_r: None,
        separator_bound_d: None,
        provider_calls: 0,
        fallbacks: 0,
        achieved_width: 0,
    });
    if dim.value == 0 {
        if g.max_degree() > 3 * col.k * col.k {
            return Err(PipelineError::Internal("dimension 0 but degree above 3k²".into()));
        }
        let td = heuristic_td(g, PROVIDER_EXACT_CAP);
        trace[slot].achieved_width = td.width();
        return Ok((td, 0));
    }
    let (i0, j0) = dim.active[0];
    let forest = part.classes.iter().find(|c| (c.i, c.j) == (i0, j0)).expect("active pair has a class").forest.clone();
    let contracted = contract_star_forest(g, &forest)?;
    if contracted.graph.n() >= g.n() {
        return Err(PipelineError::Internal("contraction did not shrink the graph".into()));
    }
    let (td_c, _) = level(&contracted.graph, params, depth + 1, trace)?;
    let fr = lift_decomposition(g, &forest, &contracted, &td_c)?;
    trace[slot].chosen_pair = Some((i0, j0));
    trace[slot].contracted_n = Some(contracted.graph.n());
    trace[slot].lifted_r = Some(fr.r);

    let mut calls = 0usize;
    let mut fallbacks = 0usize;
    let mut d = fr.r;
    let td = loop {
        let mut engine = SlimEngine::new(SlimParams::from(params), contraction_provider);
        let provider = |sub: &Subgraph, w: &WeightFunction| -> Result<VertexSet, String> {
            calls += 1;
            let h = &sub.graph;
            let hf = project_forest(&forest, sub);
            match engine.balanced_separator(h, w, &hf) {
                Ok(out) => Ok(out.separator),
                Err(_) => {
                    fallbacks += 1;
                    let td = contraction_provider(h, &hf)?;
                    let node = balanced_bag(h, &td, w, 0.5).map_err(|e| e.to_string())?;
                    Ok(td.bags[node].clone())
                }
            }
        };
        match td_from_balanced_separators(g, provider, 0.5, d) {
            Ok(out) => break out.td,
            Err(DecompError::Provider { reason, .. }) if reason.contains("exceeds") && d < g.n() => {
                d = (2 * d).min(g.n());
            }
            Err(e) => return Err(e.into()),
        }
    };
    trace[slot].separator_bound_d = Some(d);
    trace[slot].provider_calls = calls;
    trace[slot].fallbacks = fallbacks;
    trace[slot].achieved_width = td.width();
    Ok((td, dim.value))
}

/// Exact treewidth when small enough, used to cross-check pipeline output.
pub fn exact_if_small(g: &Graph, cap: usize) -> Option<usize> {
    exact_treewidth(g, cap).ok().map(|e| e.width)
}
