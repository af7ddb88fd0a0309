//! Independent oracles for the integration tests. Everything here works from adjacency
//! queries only and shares no code with the library's algorithms.
#![allow(dead_code)]

use slimtw::decomposition::TreeDecomposition;
use slimtw::graph::{Graph, VertexSet};

pub fn reach(g: &Graph, removed: &[bool], a: usize) -> Vec<bool> {
    let mut seen = vec![false; g.n()];
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        for u in 0..g.n() {
            if !seen[u] && !removed[u] && g.adjacent(v, u) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    seen
}

pub fn separates(g: &Graph, s: &VertexSet, a: usize, b: usize) -> bool {
    if s.contains(a) || s.contains(b) {
        return false;
    }
    let removed: Vec<bool> = (0..g.n()).map(|v| s.contains(v)).collect();
    !reach(g, &removed, a)[b]
}

/// Smallest separator size by trying all subsets in increasing size (non-adjacent a, b).
pub fn brute_min_sep(g: &Graph, a: usize, b: usize) -> usize {
    let others: Vec<usize> = (0..g.n()).filter(|&v| v != a && v != b).collect();
    let mut best = usize::MAX;
    for mask in 0u32..(1 << others.len()) {
        let k = mask.count_ones() as usize;
        if k >= best {
            continue;
        }
        let s: VertexSet = others.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        if separates(g, &s, a, b) {
            best = k;
        }
    }
    best
}

/// All induced a–b paths.
pub fn induced_paths(g: &Graph, a: usize, b: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, b: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        if v == b {
            out.push(path.clone());
            return;
        }
        for u in 0..g.n() {
            if !g.adjacent(v, u) || path.contains(&u) {
                continue;
            }
            // u must not touch any earlier path vertex except v (inducedness)
            if path[..path.len() - 1].iter().any(|&w| g.adjacent(w, u)) {
                continue;
            }
            path.push(u);
            go(g, b, path, out);
            path.pop();
        }
    }
    let mut out = Vec::new();
    go(g, b, &mut vec![a], &mut out);
    out
}

/// Largest family of induced a–b paths with disjoint, pairwise anticomplete interiors.
pub fn naive_max_paths(g: &Graph, a: usize, b: usize) -> usize {
    let paths = induced_paths(g, a, b);
    let interiors: Vec<Vec<usize>> = paths.iter().map(|p| p[1..p.len() - 1].to_vec()).collect();
    let compatible = |i: usize, j: usize| {
        let (p, q) = (&interiors[i], &interiors[j]);
        if p.is_empty() && q.is_empty() {
            return false; // the edge ab can be used only once (and a, b are non-adjacent anyway)
        }
        p.iter().all(|&x| q.iter().all(|&y| x != y && !g.adjacent(x, y)))
    };
    fn grow(k: usize, chosen: &mut Vec<usize>, n: usize, ok: &dyn Fn(usize, usize) -> bool, best: &mut usize) {
        *best = (*best).max(chosen.len());
        for i in k..n {
            if chosen.iter().all(|&c| ok(c, i)) {
                chosen.push(i);
                grow(i + 1, chosen, n, ok, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    grow(0, &mut Vec::new(), interiors.len(), &compatible, &mut best);
    best
}

/// Tree decomposition check written from the definition.
pub fn td_ok(g: &Graph, td: &TreeDecomposition) -> Option<usize> {
    let k = td.bags.len();
    if g.n() > 0 && k == 0 {
        return None;
    }
    // tree: connected with k−1 edges
    let mut edges = 0;
    for (i, nb) in td.tree.iter().enumerate() {
        edges += nb.iter().filter(|&&j| j > i).count();
    }
    if k > 0 && edges != k - 1 {
        return None;
    }
    let connected_nodes = |keep: &dyn Fn(usize) -> bool| -> bool {
        let nodes: Vec<usize> = (0..k).filter(|&i| keep(i)).collect();
        let Some(&s) = nodes.first() else { return true };
        let mut seen = vec![false; k];
        seen[s] = true;
        let mut st = vec![s];
        while let Some(i) = st.pop() {
            for &j in &td.tree[i] {
                if keep(j) && !seen[j] {
                    seen[j] = true;
                    st.push(j);
                }
            }
        }
        nodes.iter().all(|&i| seen[i])
    };
    if !connected_nodes(&|_| true) {
        return None;
    }
    for v in 0..g.n() {
        if !td.bags.iter().any(|b| b.contains(v)) || !connected_nodes(&|i| td.bags[i].contains(v)) {
            return None;
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.adjacent(u, v) && !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return None;
            }
        }
    }
    Some(td.bags.iter().map(|b| b.len()).max().unwrap_or(1).saturating_sub(1))
}

/// Treewidth as the minimum over all elimination orders of the largest higher neighbourhood.
pub fn brute_treewidth(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = n - 1;
    loop {
        let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.adjacent(u, v)).collect()).collect();
        let mut gone = vec![false; n];
        let mut w = 0;
        for &v in &perm {
            let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && u != v && adj[v][u]).collect();
            w = w.max(nb.len());
            for &x in &nb {
                for &y in &nb {
                    if x != y {
                        adj[x][y] = true;
                    }
                }
            }
            gone[v] = true;
            if w >= best {
                break;
            }
        }
        best = best.min(w);
        // next permutation
        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    best
}

/// Proper and no two-coloured path on four vertices, by enumerating all such paths.
pub fn star_coloring_ok(g: &Graph, c: &[usize]) -> bool {
    let n = g.n();
    for u in 0..n {
        for v in 0..n {
            if g.adjacent(u, v) && c[u] == c[v] {
                return false;
            }
        }
    }
    for p0 in 0..n {
        for p1 in 0..n {
            if !g.adjacent(p0, p1) {
                continue;
            }
            for p2 in 0..n {
                if p2 == p0 || !g.adjacent(p1, p2) {
                    continue;
                }
                for p3 in 0..n {
                    if p3 == p1 || p3 == p0 || !g.adjacent(p2, p3) {
                        continue;
                    }
                    if c[p0] == c[p2] && c[p1] == c[p3] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Star chromatic number by trying k = 1, 2, … over all colourings.
pub fn brute_star_chromatic(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut c = vec![0usize; n];
        loop {
            if star_coloring_ok(g, &c) {
                return k;
            }
            let mut i = 0;
            while i < n && c[i] == k - 1 {
                c[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            c[i] += 1;
        }
    }
    n
}

/// Every component of G − S has weight at most c.
pub fn balanced(g: &Graph, w: &[f64], s: &VertexSet, c: f64) -> bool {
    let removed: Vec<bool> = (0..g.n()).map(|v| s.contains(v)).collect();
    let mut done = vec![false; g.n()];
    for v in 0..g.n() {
        if removed[v] || done[v] {
            continue;
        }
        let comp = reach(g, &removed, v);
        let mut total = 0.0;
        for u in 0..g.n() {
            if comp[u] {
                done[u] = true;
                total += w[u];
            }
        }
        if total > c + 1e-9 {
            return false;
        }
    }
    true
}

/// Graph on `n` vertices from a bitmask over the pairs (0,1), (0,2), …, (n−2,n−1).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

/// Representatives of all isomorphism classes on `n ≤ 6` vertices (mask minimal in its orbit).
pub fn canonical_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let idx = |u: usize, v: usize| {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        pairs.iter().position(|&p| p == (u, v)).unwrap()
    };
    let mut perms = vec![];
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.iter().map(|_| 0).collect::<Vec<usize>>());
        let table: Vec<usize> = pairs.iter().map(|&(u, v)| idx(p[u], p[v])).collect();
        *perms.last_mut().unwrap() = table;
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let minimal = perms.iter().all(|t| {
            let mut m = 0u64;
            for (k, &tk) in t.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    m |= 1 << tk;
                }
            }
            m >= mask
        });
        if minimal {
            out.push(graph_from_mask(n, mask));
        }
    }
    out
}

/// Random tree on `n` vertices (each vertex attaches to an earlier one).
pub fn random_tree(n: usize, rng: &mut impl rand::Rng) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let p = rng.gen_range(0..v);
        g.add_edge(p, v).unwrap();
    }
    g
}

/// Random series-parallel graph: start from an edge, repeatedly subdivide an edge or add a
/// parallel path of length two.
pub fn random_series_parallel(n: usize, rng: &mut impl rand::Rng) -> Graph {
    let n = n.max(2);
    let mut edges = vec![(0usize, 1usize)];
    for m in 2..n {
        let i = rng.gen_range(0..edges.len());
        let (u, v) = edges[i];
        if rng.gen_bool(0.5) {
            edges[i] = (u, m);
        } else {
            edges.push((u, m));
        }
        edges.push((m, v));
    }
    let mut g = Graph::empty(n);
    for (u, v) in edges {
        if !g.adjacent(u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}
