//! Finite simple undirected graphs and the generators used throughout.

use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::VecDeque;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted with `u < v`; construction rejects loops and
/// deduplicates parallel edges, so every value of this type is simple.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl SimpleGraph {
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(u, v) in pairs {
            if u >= n {
                return Err(Error::IndexOutOfRange { index: u, n });
            }
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            edges.push((u.min(v), u.max(v)));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(SimpleGraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        SimpleGraph { n, edges: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let e = (u.min(v), u.max(v));
        self.edges.binary_search(&e).is_ok()
    }

    /// Adjacency lists, built on demand.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Adjacency rows as bitmasks; only valid for n <= 64.
    pub fn adjacency_bits(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        let mut rows = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        rows
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Girth of the graph, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.shortest_cycle_edge().map(|(g, _)| g)
    }

    /// Length of a shortest cycle together with one edge lying on such a
    /// cycle. BFS from every vertex; the first non-tree edge closing a
    /// walk of minimal total length witnesses a shortest cycle.
    pub fn shortest_cycle_edge(&self) -> Option<(usize, (usize, usize))> {
        let adj = self.adjacency();
        let mut best: Option<(usize, (usize, usize))> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            for d in dist.iter_mut() {
                *d = usize::MAX;
            }
            dist[s] = 0;
            parent[s] = usize::MAX;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] {
                        // Cycle through s of length at most dist[u]+dist[w]+1.
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |(b, _)| len < b) {
                            best = Some((len, (u.min(w), u.max(w))));
                        }
                    }
                }
            }
        }
        best
    }

    pub fn is_forest(&self) -> bool {
        self.girth().is_none()
    }

    /// Induced subgraph on the given vertices (relabelled 0.. in the given
    /// order); returns the graph and the map from new labels to old.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                edges.push((index[u], index[v]));
            }
        }
        SimpleGraph::from_edge_list(vertices.len(), &edges).expect("induced subgraph is simple")
    }

    /// Relabel the graph by a permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        SimpleGraph::from_edge_list(self.n, &edges).expect("relabelling preserves simplicity")
    }

    /// Delete one edge.
    pub fn delete_edge(&self, e: (usize, usize)) -> SimpleGraph {
        let e = (e.0.min(e.1), e.0.max(e.1));
        let edges: Vec<_> = self.edges.iter().copied().filter(|&f| f != e).collect();
        SimpleGraph { n: self.n, edges }
    }

    /// Contract one edge: glue the endpoints and erase the multi-edges and
    /// loops the gluing creates. The contracted vertex keeps the smaller
    /// label; the last vertex moves into the freed slot.
    pub fn contract_edge(&self, e: (usize, usize)) -> SimpleGraph {
        let (a, b) = (e.0.min(e.1), e.0.max(e.1));
        let map = |v: usize| -> usize {
            if v == b {
                a
            } else if v == self.n - 1 {
                b.min(self.n - 1)
            } else {
                v
            }
        };
        // b's slot is reused for the old last vertex (unless b was last).
        let mut edges = Vec::with_capacity(self.edges.len());
        for &(u, v) in &self.edges {
            let (u, v) = (map(u), map(v));
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        SimpleGraph { n: self.n - 1, edges }
    }

    /// Disjoint union, `other`'s vertices shifted past `self`'s.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + self.n, v + self.n)));
        SimpleGraph { n: self.n + other.n, edges }
    }

    /// Distances from `v` by BFS; unreachable vertices get `usize::MAX`.
    pub fn distances_from(&self, v: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.n];
        dist[v] = 0;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// A graph together with a distinguished root vertex; every vertex lies
/// within `radius` of the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedBall {
    pub graph: SimpleGraph,
    pub root: usize,
    pub radius: usize,
}

/// The induced ball of radius `r` around `v`, rooted at `v`.
pub fn ball(g: &SimpleGraph, v: usize, r: usize) -> Result<RootedBall> {
    if v >= g.n() {
        return Err(Error::IndexOutOfRange { index: v, n: g.n() });
    }
    let dist = g.distances_from(v);
    let vertices: Vec<usize> = (0..g.n()).filter(|&u| dist[u] <= r).collect();
    let root = vertices.iter().position(|&u| u == v).unwrap();
    Ok(RootedBall { graph: g.induced(&vertices), root, radius: r })
}

pub fn path(n: usize) -> SimpleGraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SimpleGraph::from_edge_list(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    SimpleGraph::from_edge_list(n, &edges).unwrap()
}

pub fn complete(n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    SimpleGraph::from_edge_list(n, &edges).unwrap()
}

pub fn petersen() -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer 5-cycle
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    SimpleGraph::from_edge_list(10, &edges).unwrap()
}

/// Cartesian product: (u1,u2) ~ (v1,v2) iff u1=v1, u2~v2 or u2=v2, u1~v1.
pub fn cartesian_product(g: &SimpleGraph, h: &SimpleGraph) -> SimpleGraph {
    let id = |u: usize, v: usize| u * h.n() + v;
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for &(a, b) in h.edges() {
            edges.push((id(u, a), id(u, b)));
        }
    }
    for v in 0..h.n() {
        for &(a, b) in g.edges() {
            edges.push((id(a, v), id(b, v)));
        }
    }
    SimpleGraph::from_edge_list(g.n() * h.n(), &edges).unwrap()
}

/// The 4xn tube C4 x P_n.
pub fn tube(n: usize) -> SimpleGraph {
    cartesian_product(&cycle(4), &path(n))
}

/// Box fragment of Z^d with side length n (n^d vertices, grid edges).
pub fn grid_box(d: usize, n: usize) -> SimpleGraph {
    assert!(n >= 1 && d >= 1);
    let total = n.pow(d as u32);
    let mut edges = Vec::new();
    for v in 0..total {
        let mut coords = Vec::with_capacity(d);
        let mut x = v;
        for _ in 0..d {
            coords.push(x % n);
            x /= n;
        }
        let mut stride = 1;
        for axis in 0..d {
            if coords[axis] + 1 < n {
                edges.push((v, v + stride));
            }
            stride *= n;
        }
    }
    SimpleGraph::from_edge_list(total, &edges).unwrap()
}

/// The d-dimensional discrete torus (Z/nZ)^d.
pub fn torus(d: usize, n: usize) -> SimpleGraph {
    assert!(n >= 3 && d >= 1, "torus needs side length >= 3");
    let total = n.pow(d as u32);
    let mut edges = Vec::new();
    for v in 0..total {
        let mut coords = Vec::with_capacity(d);
        let mut x = v;
        for _ in 0..d {
            coords.push(x % n);
            x /= n;
        }
        let mut stride = 1;
        for axis in 0..d {
            let up = v - coords[axis] * stride + ((coords[axis] + 1) % n) * stride;
            edges.push((v, up));
            stride *= n;
        }
    }
    SimpleGraph::from_edge_list(total, &edges).unwrap()
}

/// Random d-regular graph by the pairing (configuration) model, rejecting
/// pairings with loops, multi-edges, or any cycle shorter than `min_girth`.
/// Deterministic for a fixed seed.
pub fn random_regular(d: usize, n: usize, min_girth: usize, seed: u64) -> Result<SimpleGraph> {
    if d * n % 2 != 0 || d >= n {
        return Err(Error::InfeasibleDegrees { d, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let attempts = 100_000;
    'attempt: for _ in 0..attempts {
        let mut stubs: Vec<usize> = (0..d * n).map(|i| i / d).collect();
        stubs.shuffle(&mut rng);
        let mut pairs = Vec::with_capacity(d * n / 2);
        for c in stubs.chunks(2) {
            if c[0] == c[1] {
                continue 'attempt;
            }
            pairs.push((c[0], c[1]));
        }
        let g = match SimpleGraph::from_edge_list(n, &pairs) {
            Ok(g) => g,
            Err(_) => continue,
        };
        if g.m() != d * n / 2 {
            continue; // multi-edge collapsed
        }
        if min_girth > 3 {
            if let Some(girth) = g.girth() {
                if girth < min_girth {
                    continue;
                }
            }
        }
        return Ok(g);
    }
    Err(Error::RejectionBudget(attempts))
}

/// Parse the edge-list text format: first line `n m`, then one `u v` pair
/// per line, 0-indexed.
pub fn parse_edge_list_text(text: &str) -> Result<SimpleGraph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| Error::Malformed("empty edge list".into()))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Malformed("bad header".into()))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::Malformed("bad header".into()))?;
    let mut pairs = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("bad edge line: {line}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("bad edge line: {line}")))?;
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::Malformed(format!("expected {m} edges, found {}", pairs.len())));
    }
    SimpleGraph::from_edge_list(n, &pairs)
}

pub fn emit_edge_list_text(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_dedups() {
        let g = SimpleGraph::from_edge_list(3, &[(0, 1), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn single_vertex() {
        let g = SimpleGraph::from_edge_list(1, &[]).unwrap();
        assert_eq!((g.n(), g.m()), (1, 0));
    }

    #[test]
    fn loops_rejected() {
        assert!(matches!(SimpleGraph::from_edge_list(2, &[(0, 0)]), Err(Error::LoopEdge(0))));
        assert!(matches!(
            SimpleGraph::from_edge_list(2, &[(0, 5)]),
            Err(Error::IndexOutOfRange { index: 5, n: 2 })
        ));
    }

    #[test]
    fn girth_and_degrees() {
        let p = petersen();
        assert_eq!(p.girth(), Some(5));
        assert_eq!(p.max_degree(), 3);
        assert_eq!(path(5).girth(), None);
        assert_eq!(cycle(7).girth(), Some(7));
        assert_eq!(grid_box(2, 3).girth(), Some(4));
    }

    #[test]
    fn product_counts() {
        let g = cartesian_product(&cycle(4), &path(3));
        assert_eq!(g.n(), 12);
        assert_eq!(g.m(), 4 * 2 + 3 * 4);
        // |E| = |V(G)||E(H)| + |V(H)||E(G)| in general
        let h = cartesian_product(&petersen(), &complete(3));
        assert_eq!(h.n(), 30);
        assert_eq!(h.m(), 10 * 3 + 3 * 15);
    }

    #[test]
    fn product_with_point_is_identity() {
        let g = cartesian_product(&cycle(4), &path(1));
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 4);
        assert_eq!(g.girth(), Some(4));
    }

    #[test]
    fn torus_is_regular() {
        let t = torus(2, 3);
        assert_eq!(t.n(), 9);
        assert!(t.degrees().iter().all(|&d| d == 4));
    }

    #[test]
    fn random_regular_girth() {
        let g = random_regular(3, 20, 5, 7).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert!(g.girth().unwrap() >= 5);
        // deterministic under the seed
        let h = random_regular(3, 20, 5, 7).unwrap();
        assert_eq!(g, h);
        assert!(random_regular(3, 5, 3, 0).is_err());
    }

    #[test]
    fn balls() {
        let b = ball(&path(5), 0, 1).unwrap();
        assert_eq!(b.graph.n(), 2);
        assert_eq!(b.graph.m(), 1);
        let b = ball(&cycle(10), 3, 2).unwrap();
        assert_eq!(b.graph.n(), 5);
        assert_eq!(b.graph.m(), 4);
        assert!(b.graph.is_forest());
        let b = ball(&petersen(), 0, 0).unwrap();
        assert_eq!(b.graph.n(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = petersen();
        let text = emit_edge_list_text(&g);
        assert_eq!(parse_edge_list_text(&text).unwrap(), g);
        assert!(parse_edge_list_text("").is_err());
        assert!(parse_edge_list_text("2 1\n0 0\n").is_err());
    }

    #[test]
    fn contraction_stays_simple() {
        let g = complete(4);
        let c = g.contract_edge((0, 1));
        assert_eq!(c.n(), 3);
        assert_eq!(c.m(), 3); // K3, multi-edges erased
        let t = path(4).contract_edge((1, 2));
        assert_eq!((t.n(), t.m()), (3, 2));
    }
}
