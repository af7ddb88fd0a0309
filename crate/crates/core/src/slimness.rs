//! s-wide / s-slim pairs and (t,s)-slimness, decided by exhaustive backtracking.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SlimError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("t must be at least 2")]
    BadT,
}

/// Induced `a`–`b` paths whose interiors are pairwise disjoint and anticomplete.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathFamily {
    pub a: usize,
    pub b: usize,
    pub paths: Vec<Vec<usize>>,
}

impl PathFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }
    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
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

struct PathSearch<'a> {
    g: &'a Graph,
    a: usize,
    b: usize,
    cap: usize,
    best: Vec<Vec<usize>>,
    chosen: Vec<Vec<usize>>,
}

impl PathSearch<'_> {
    fn family(&mut self, allowed: &[bool], min_second: usize) {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
        }
        if self.best.len() >= self.cap {
            return;
        }
        let na = self.g.neighbors(self.a).iter().filter(|&&v| v >= min_second && allowed[v]).count();
        let nb = self.g.neighbors(self.b).iter().filter(|&&v| allowed[v]).count();
        if self.chosen.len() + na.min(nb) <= self.best.len() {
            return;
        }
        let starts: Vec<usize> =
            self.g.neighbors(self.a).iter().copied().filter(|&v| v >= min_second && allowed[v]).collect();
        for s in starts {
            let mut path = vec![self.a, s];
            let mut touch = vec![0u32; self.g.n()];
            for &v in &path {
                mark(self.g, &mut touch, v, 1);
            }
            self.paths_from(allowed, &mut path, &mut touch);
            if self.best.len() >= self.cap {
                return;
            }
        }
    }

    /// Extends `path` to induced `a`–`b` paths through `allowed`, recursing into `family` for each.
    fn paths_from(&mut self, allowed: &[bool], path: &mut Vec<usize>, touch: &mut Vec<u32>) {
        let last = *path.last().expect("path has at least two vertices");
        if self.g.adjacent(last, self.b) {
            if touch[self.b] == 1 {
                path.push(self.b);
                let mut next = allowed.to_vec();
                for &v in &path[1..path.len() - 1] {
                    next[v] = false;
                    for &w in self.g.neighbors(v) {
                        next[w] = false;
                    }
                }
                self.chosen.push(path.clone());
                self.family(&next, path[1] + 1);
                self.chosen.pop();
                path.pop();
            }
            return;
        }
        for &v in self.g.neighbors(last) {
            if self.best.len() >= self.cap {
                return;
            }
            if !allowed[v] || touch[v] != 1 || path.contains(&v) {
                continue;
            }
            path.push(v);
            mark(self.g, touch, v, 1);
            self.paths_from(allowed, path, touch);
            mark(self.g, touch, v, -1);
            path.pop();
        }
    }
}

fn mark(g: &Graph, touch: &mut [u32], v: usize, d: i32) {
    for &w in g.neighbors(v) {
        touch[w] = (touch[w] as i32 + d) as u32;
    }
}

/// A largest family of internally anticomplete induced `a`–`b` paths, stopping at `cap`.
pub fn max_anticomplete_paths(g: &Graph, a: usize, b: usize, cap: usize) -> Result<PathFamily, SlimError> {
    check_pair(g, a, b)?;
    let mut allowed = vec![true; g.n()];
    allowed[a] = false;
    allowed[b] = false;
    let mut s = PathSearch { g, a, b, cap, best: Vec::new(), chosen: Vec::new() };
    if cap > 0 {
        s.family(&allowed, 0);
    }
    Ok(PathFamily { a, b, paths: s.best })
}

/// Fewer than `s` internally anticomplete `a`–`b` paths exist.
pub fn is_slim_pair(g: &Graph, a: usize, b: usize, s: usize) -> Result<bool, SlimError> {
    Ok(max_anticomplete_paths(g, a, b, s)?.len() < s)
}

/// Independent check of the family invariants; returns a description of the first failure.
pub fn check_path_family(g: &Graph, fam: &PathFamily) -> Result<(), String> {
    let interiors: Vec<&[usize]> = fam.paths.iter().map(|p| &p[1..p.len().saturating_sub(1)]).collect();
    for (i, p) in fam.paths.iter().enumerate() {
        if p.len() < 3 || p[0] != fam.a || p[p.len() - 1] != fam.b {
            return Err(format!("path {i} does not run from a to b through an interior"));
        }
        if p.iter().any(|&v| v >= g.n()) {
            return Err(format!("path {i} leaves the graph"));
        }
        for x in 0..p.len() {
            for y in x + 1..p.len() {
                if p[x] == p[y] {
                    return Err(format!("path {i} repeats vertex {}", p[x]));
                }
                if g.adjacent(p[x], p[y]) != (y == x + 1) {
                    return Err(format!("path {i} is not induced at {}-{}", p[x], p[y]));
                }
            }
        }
    }
    for i in 0..interiors.len() {
        for j in i + 1..interiors.len() {
            for &u in interiors[i] {
                for &v in interiors[j] {
                    if u == v || g.adjacent(u, v) {
                        return Err(format!("paths {i} and {j} touch at {u}/{v}"));
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum SlimCheck {
    Ok,
    /// A stable set all of whose pairs are `s`-wide, with one family per pair.
    Counterexample {
        stable_set: Vec<usize>,
        families: Vec<PathFamily>,
    },
}

/// Whether every stable set of size `t` contains an `s`-slim pair.
pub fn check_tq_slim(g: &Graph, t: usize, s: usize) -> Result<SlimCheck, SlimError> {
    if t < 2 {
        return Err(SlimError::BadT);
    }
    let mut memo: BTreeMap<(usize, usize), PathFamily> = BTreeMap::new();
    let mut wide = |u: usize, v: usize| -> Result<bool, SlimError> {
        let key = (u.min(v), u.max(v));
        if let std::collections::btree_map::Entry::Vacant(e) = memo.entry(key) {
            e.insert(max_anticomplete_paths(g, key.0, key.1, s)?);
        }
        Ok(memo[&key].len() >= s)
    };
    // Cliques of size t in the "non-adjacent and wide" graph, in lexicographic order.
    fn grow(
        g: &Graph,
        t: usize,
        set: &mut Vec<usize>,
        from: usize,
        wide: &mut dyn FnMut(usize, usize) -> Result<bool, SlimError>,
    ) -> Result<bool, SlimError> {
        if set.len() == t {
            return Ok(true);
        }
        for v in from..g.n() {
            let mut ok = true;
            for &u in set.iter() {
                if g.adjacent(u, v) || !wide(u, v)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                set.push(v);
                if grow(g, t, set, v + 1, wide)? {
                    return Ok(true);
                }
                set.pop();
            }
        }
        Ok(false)
    }
    let mut set = Vec::new();
    if !grow(g, t, &mut set, 0, &mut wide)? {
        return Ok(SlimCheck::Ok);
    }
    let mut families = Vec::new();
    for i in 0..set.len() {
        for j in i + 1..set.len() {
            families.push(memo[&(set[i], set[j])].clone());
        }
    }
    Ok(SlimCheck::Counterexample { stable_set: set, families })
}
