//! Homomorphism and injective-homomorphism counting, the independent
//! partition lattice of a graph, quotients, partition weights, and the
//! Mobius bridge between inj and hom.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Partition of `0..n` into nonempty blocks. Blocks and their contents are
/// kept sorted, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPartition {
    blocks: Vec<Vec<usize>>,
    n: usize,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::Malformed("empty block".into()));
            }
            b.sort_unstable();
            for &v in b.iter() {
                if v >= n {
                    return Err(Error::IndexOutOfRange { index: v, n });
                }
                if seen[v] {
                    return Err(Error::Malformed(format!("vertex {v} in two blocks")));
                }
                seen[v] = true;
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::Malformed("blocks do not cover the vertex set".into()));
        }
        blocks.sort();
        Ok(SetPartition { blocks, n })
    }

    pub fn discrete(n: usize) -> Self {
        SetPartition { blocks: (0..n).map(|v| vec![v]).collect(), n }
    }

    pub fn from_labels(labels: &[usize]) -> Self {
        let k = labels.iter().copied().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); k];
        for (v, &b) in labels.iter().enumerate() {
            blocks[b].push(v);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        SetPartition { blocks, n: labels.len() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Block index of each vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut out = vec![0; self.n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                out[v] = i;
            }
        }
        out
    }

    /// Whether `self` refines `other` (every block of self inside a block
    /// of other).
    pub fn refines(&self, other: &SetPartition) -> bool {
        let coarse = other.labels();
        self.blocks.iter().all(|b| b.iter().all(|&v| coarse[v] == coarse[b[0]]))
    }

    /// The Mobius weight `||P|| = prod over blocks (|block|-1)!`.
    pub fn weight(&self) -> BigInt {
        let mut acc = BigInt::one();
        for b in &self.blocks {
            for i in 2..b.len() {
                acc *= BigInt::from(i as u64);
            }
        }
        acc
    }

    /// No block contains an edge of `g`.
    pub fn is_independent_in(&self, g: &SimpleGraph) -> bool {
        let labels = self.labels();
        g.edges().iter().all(|&(u, v)| labels[u] != labels[v])
    }
}

/// Mobius function of the partition refinement poset on the interval
/// [fine, coarse]: `(-1)^{r+s} * prod (a_i - 1)!` where r = #coarse blocks,
/// s = #fine blocks and a_i = number of fine blocks inside coarse block i.
pub fn mobius(fine: &SetPartition, coarse: &SetPartition) -> Result<BigInt> {
    if !fine.refines(coarse) {
        return Err(Error::Malformed("mobius requires a refinement pair".into()));
    }
    let coarse_labels = coarse.labels();
    let mut counts = vec![0usize; coarse.block_count()];
    for b in fine.blocks() {
        counts[coarse_labels[b[0]]] += 1;
    }
    let r = coarse.block_count();
    let s = fine.block_count();
    let mut acc = BigInt::one();
    for &a in &counts {
        for i in 2..a {
            acc *= BigInt::from(i as u64);
        }
    }
    if (r + s) % 2 == 1 {
        acc = -acc;
    }
    Ok(acc)
}

/// All partitions of `V(G)` into independent blocks, enumerated through
/// restricted-growth strings with a block pruned as soon as it would
/// contain an edge. Deterministic order.
pub fn independent_partitions(g: &SimpleGraph) -> Result<Vec<SetPartition>> {
    if g.n() > 14 {
        return Err(Error::SizeCap { n: g.n(), cap: 14 });
    }
    let n = g.n();
    if n == 0 {
        return Ok(vec![SetPartition { blocks: Vec::new(), n: 0 }]);
    }
    let adj = g.adjacency_bits();
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    let mut block_members: Vec<u64> = Vec::new();
    fn go(
        v: usize,
        n: usize,
        adj: &[u64],
        labels: &mut [usize],
        blocks: &mut Vec<u64>,
        out: &mut Vec<SetPartition>,
    ) {
        if v == n {
            out.push(SetPartition::from_labels(labels));
            return;
        }
        for b in 0..=blocks.len() {
            if b < blocks.len() {
                if adj[v] & blocks[b] != 0 {
                    continue; // an edge would land inside the block
                }
                blocks[b] |= 1 << v;
                labels[v] = b;
                go(v + 1, n, adj, labels, blocks, out);
                blocks[b] &= !(1 << v);
            } else {
                blocks.push(1 << v);
                labels[v] = b;
                go(v + 1, n, adj, labels, blocks, out);
                blocks.pop();
            }
        }
    }
    go(0, n, &adj, &mut labels, &mut block_members, &mut out);
    Ok(out)
}

/// Quotient graph: one vertex per block, an edge between blocks iff some
/// edge of `g` crosses them. Requires an independent partition.
pub fn quotient(g: &SimpleGraph, p: &SetPartition) -> Result<SimpleGraph> {
    if !p.is_independent_in(g) {
        return Err(Error::InternalEdge);
    }
    let labels = p.labels();
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (labels[u], labels[v])).collect();
    SimpleGraph::from_edge_list(p.block_count(), &edges)
}

fn bfs_order_from_max_degree(h: &SimpleGraph) -> Vec<usize> {
    let n = h.n();
    let adj = h.adjacency();
    let deg = h.degrees();
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    // BFS component by component, each seeded at its max-degree vertex
    loop {
        let start = (0..n).filter(|&v| !seen[v]).max_by_key(|&v| deg[v]);
        let Some(start) = start else { break };
        seen[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    order
}

fn count_maps(h: &SimpleGraph, g: &SimpleGraph, injective: bool) -> BigInt {
    let nh = h.n();
    if nh == 0 {
        return BigInt::one();
    }
    if g.n() == 0 {
        return BigInt::zero();
    }
    let order = bfs_order_from_max_degree(h);
    let hadj = h.adjacency();
    let mut pos = vec![usize::MAX; nh];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    // neighbors of order[i] already placed when i is reached
    let placed_neighbors: Vec<Vec<usize>> = order
        .iter()
        .map(|&v| hadj[v].iter().copied().filter(|&w| pos[w] < pos[v]).collect())
        .collect();
    let mut image = vec![usize::MAX; nh];
    let mut used = vec![false; g.n()];
    let mut count = BigInt::zero();
    struct Ctx<'a> {
        order: &'a [usize],
        placed: &'a [Vec<usize>],
        g: &'a SimpleGraph,
        injective: bool,
    }
    fn go(i: usize, ctx: &Ctx, image: &mut [usize], used: &mut [bool], count: &mut BigInt) {
        if i == ctx.order.len() {
            *count += BigInt::one();
            return;
        }
        let v = ctx.order[i];
        'cand: for t in 0..ctx.g.n() {
            if ctx.injective && used[t] {
                continue;
            }
            for &w in &ctx.placed[i] {
                if !ctx.g.has_edge(image[w], t) {
                    continue 'cand;
                }
            }
            image[v] = t;
            used[t] = true;
            go(i + 1, ctx, image, used, count);
            used[t] = false;
            image[v] = usize::MAX;
        }
    }
    let ctx = Ctx { order: &order, placed: &placed_neighbors, g, injective };
    go(0, &ctx, &mut image, &mut used, &mut count);
    count
}

/// Number of edge-preserving maps `V(H) -> V(G)`.
pub fn hom_count(h: &SimpleGraph, g: &SimpleGraph) -> BigInt {
    count_maps(h, g, false)
}

/// Number of injective edge-preserving maps `V(H) -> V(G)`.
pub fn inj_count(h: &SimpleGraph, g: &SimpleGraph) -> BigInt {
    count_maps(h, g, true)
}

/// `inj(G,H)` recovered from hom counts over the partition lattice:
/// `inj(G,H) = sum over P of (-1)^{|V(G)|+|V(G/P)|} ||P|| hom(G/P, H)`.
pub fn inj_from_hom_mobius(g: &SimpleGraph, h: &SimpleGraph) -> Result<BigInt> {
    if g.n() > 12 {
        return Err(Error::SizeCap { n: g.n(), cap: 12 });
    }
    let mut acc = BigInt::zero();
    for p in independent_partitions(g)? {
        let q = quotient(g, &p)?;
        let term = p.weight() * hom_count(&q, h);
        if (g.n() + q.n()) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// The inverse direction of the Mobius bridge:
/// `hom(G/P', H) = sum over P coarsening P' of inj(G/P, H)`.
pub fn hom_from_inj(g: &SimpleGraph, base: &SetPartition, h: &SimpleGraph) -> Result<BigInt> {
    if g.n() > 12 {
        return Err(Error::SizeCap { n: g.n(), cap: 12 });
    }
    let mut acc = BigInt::zero();
    for p in independent_partitions(g)? {
        if base.refines(&p) {
            acc += inj_count(&quotient(g, &p)?, h);
        }
    }
    Ok(acc)
}
