//! Canonical forms and automorphisms by individualization-refinement.
//!
//! Adequate for the size cap of 16 vertices used by the partition and basis
//! machinery; the search is exponential for highly symmetric dense graphs,
//! which a leaf budget turns into an explicit error.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Isomorphism-invariant byte code: `code(G) = code(H)` iff `G ≅ H`
/// (respecting vertex colors for the colored variant).
pub type CanonicalCode = Vec<u8>;

pub const SIZE_CAP: usize = 16;
const LEAF_BUDGET: usize = 200_000;

/// Stable color refinement: repeatedly split classes by the multiset of
/// neighbor colors until nothing changes. Returns colors as ranks 0..k
/// in a label-independent order.
fn refine(adj: &[u64], colors: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut cur: Vec<u32> = colors.to_vec();
    loop {
        let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..n)
            .map(|v| {
                let mut ns: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| cur[w]).collect();
                ns.sort_unstable();
                (cur[v], ns, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0u32; n];
        let mut rank = 0u32;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

struct Search<'a> {
    adj: &'a [u64],
    n: usize,
    best: Option<Vec<u8>>,
    leaves: usize,
}

impl Search<'_> {
    fn leaf_code(&self, colors: &[u32], init: &[u32]) -> Vec<u8> {
        // Vertices in refined-color order; ties impossible at a leaf.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| colors[v]);
        let mut pos = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut code = vec![self.n as u8];
        for &v in &order {
            code.push(init[v] as u8);
        }
        let mut bits: Vec<bool> = Vec::with_capacity(self.n * (self.n.saturating_sub(1)) / 2);
        for j in 1..self.n {
            for i in 0..j {
                let (u, v) = (order[i], order[j]);
                bits.push(self.adj[u] >> v & 1 == 1);
            }
        }
        while bits.len() % 8 != 0 {
            bits.push(false);
        }
        for chunk in bits.chunks(8) {
            let mut b = 0u8;
            for &x in chunk {
                b = b << 1 | x as u8;
            }
            code.push(b);
        }
        code
    }

    fn descend(&mut self, colors: Vec<u32>, init: &[u32]) -> Result<()> {
        let refined = refine(self.adj, &colors);
        // first non-singleton cell by color rank
        let mut count = vec![0usize; self.n + 1];
        for &c in &refined {
            count[c as usize] += 1;
        }
        let target = (0..=self.n).find(|&c| count[c] > 1);
        match target {
            None => {
                self.leaves += 1;
                if self.leaves > LEAF_BUDGET {
                    return Err(Error::Budget("canonical labeling leaf budget".into()));
                }
                let code = self.leaf_code(&refined, init);
                if self.best.as_ref().map_or(true, |b| code < *b) {
                    self.best = Some(code);
                }
                Ok(())
            }
            Some(c) => {
                for v in 0..self.n {
                    if refined[v] as usize == c {
                        // individualize v just before its cell
                        let mut next: Vec<u32> = refined.iter().map(|&x| x * 2 + 1).collect();
                        next[v] -= 1;
                        self.descend(next, init)?;
                    }
                }
                Ok(())
            }
        }
    }
}

/// Canonical code of a vertex-colored graph; colors are part of the
/// isomorphism type.
pub fn canonical_code_colored(g: &SimpleGraph, colors: &[u32]) -> Result<CanonicalCode> {
    let n = g.n();
    if n > SIZE_CAP {
        return Err(Error::SizeCap { n, cap: SIZE_CAP });
    }
    if n == 0 {
        return Ok(vec![0]);
    }
    let adj = g.adjacency_bits();
    let mut search = Search { adj: &adj, n, best: None, leaves: 0 };
    search.descend(colors.to_vec(), colors)?;
    Ok(search.best.unwrap())
}

pub fn canonical_code(g: &SimpleGraph) -> Result<CanonicalCode> {
    canonical_code_colored(g, &vec![0; g.n()])
}

/// A relabelling of `g` realizing its canonical code, i.e. a canonical
/// representative of the isomorphism class.
pub fn canonical_form(g: &SimpleGraph) -> Result<SimpleGraph> {
    let code = canonical_code(g)?;
    decode(&code)
}

/// Inverse of `canonical_code` for uncolored graphs (rebuilds the
/// representative stored in the code bytes).
pub fn decode(code: &[u8]) -> Result<SimpleGraph> {
    let n = *code.first().ok_or_else(|| Error::Malformed("empty canonical code".into()))? as usize;
    let bits_start = 1 + n;
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = code
                .get(bits_start + idx / 8)
                .ok_or_else(|| Error::Malformed("truncated canonical code".into()))?;
            if byte >> (7 - idx % 8) & 1 == 1 {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    SimpleGraph::from_edge_list(n, &edges)
}

/// |Aut(G)|: number of adjacency-preserving vertex permutations, by
/// backtracking constrained to the stable coloring classes.
pub fn automorphism_count(g: &SimpleGraph) -> Result<u64> {
    let n = g.n();
    if n > SIZE_CAP {
        return Err(Error::SizeCap { n, cap: SIZE_CAP });
    }
    if n == 0 {
        return Ok(1);
    }
    let adj = g.adjacency_bits();
    let colors = refine(&adj, &vec![0; n]);
    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    let mut count = 0u64;
    fn go(
        v: usize,
        n: usize,
        adj: &[u64],
        colors: &[u32],
        image: &mut [usize],
        used: &mut u64,
        count: &mut u64,
    ) {
        if v == n {
            *count += 1;
            return;
        }
        for w in 0..n {
            if *used >> w & 1 == 1 || colors[w] != colors[v] {
                continue;
            }
            // adjacency to already-placed vertices must be preserved
            let ok = (0..v).all(|u| (adj[v] >> u & 1) == (adj[w] >> image[u] & 1));
            if ok {
                image[v] = w;
                *used |= 1 << w;
                go(v + 1, n, adj, colors, image, used, count);
                *used &= !(1 << w);
                image[v] = usize::MAX;
            }
        }
    }
    go(0, n, &adj, &colors, &mut image, &mut used, &mut count);
    Ok(count)
}

/// Brute-force isomorphism test over all vertex permutations. Test oracle;
/// factorial time, only sensible for very small graphs.
pub fn isomorphic_bruteforce(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g.edges().iter().all(|&(u, v)| h.has_edge(perm[u], perm[v])) {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph;
    use proptest::prelude::*;

    #[test]
    fn invariance_under_relabel() {
        let p = graph::path(3);
        let q = p.relabel(&[2, 0, 1]);
        assert_eq!(canonical_code(&p).unwrap(), canonical_code(&q).unwrap());
    }

    #[test]
    fn distinguishes_path_and_star() {
        let p4 = graph::path(4);
        let star = SimpleGraph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&p4).unwrap(), canonical_code(&star).unwrap());
    }

    #[test]
    fn all_four_vertex_graphs_distinct() {
        // 11 iso classes on 4 vertices; codes must be pairwise distinct and
        // agree with the brute-force isomorphism oracle.
        let all_edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let mut reps: Vec<(CanonicalCode, SimpleGraph)> = Vec::new();
        for mask in 0u32..64 {
            let edges: Vec<_> =
                (0..6).filter(|&i| mask >> i & 1 == 1).map(|i| all_edges[i]).collect();
            let g = SimpleGraph::from_edge_list(4, &edges).unwrap();
            let code = canonical_code(&g).unwrap();
            match reps.iter().find(|(c, _)| *c == code) {
                Some((_, h)) => assert!(isomorphic_bruteforce(&g, h)),
                None => {
                    for (_, h) in &reps {
                        assert!(!isomorphic_bruteforce(&g, h));
                    }
                    reps.push((code, g));
                }
            }
        }
        assert_eq!(reps.len(), 11);
    }

    #[test]
    fn automorphisms() {
        assert_eq!(automorphism_count(&graph::cycle(4)).unwrap(), 8);
        assert_eq!(automorphism_count(&graph::complete(3)).unwrap(), 6);
        assert_eq!(automorphism_count(&graph::path(2)).unwrap(), 2);
        assert_eq!(automorphism_count(&graph::petersen()).unwrap(), 120);
        assert_eq!(automorphism_count(&graph::path(1)).unwrap(), 1);
    }

    #[test]
    fn cycle4_aut_brute_force() {
        // cross-check |Aut(C4)| = 8 against all 24 permutations
        let c4 = graph::cycle(4);
        let mut perm: Vec<usize> = (0..4).collect();
        let mut count = 0;
        loop {
            if c4.edges().iter().all(|&(u, v)| c4.has_edge(perm[u], perm[v])) {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert_eq!(count, 8);
    }

    #[test]
    fn colored_codes_separate_roots() {
        // P3 rooted at an end vs rooted at the center
        let p3 = graph::path(3);
        let end = canonical_code_colored(&p3, &[1, 0, 0]).unwrap();
        let mid = canonical_code_colored(&p3, &[0, 1, 0]).unwrap();
        let other_end = canonical_code_colored(&p3, &[0, 0, 1]).unwrap();
        assert_ne!(end, mid);
        assert_eq!(end, other_end);
    }

    #[test]
    fn decode_round_trip() {
        for g in [graph::petersen(), graph::path(6), graph::complete(5), SimpleGraph::empty(3)] {
            let code = canonical_code(&g).unwrap();
            let back = decode(&code).unwrap();
            assert_eq!(canonical_code(&back).unwrap(), code);
        }
    }

    #[test]
    fn size_cap_enforced() {
        assert!(canonical_code(&graph::path(17)).is_err());
    }

    proptest! {
        #[test]
        fn prop_code_invariant_under_permutation(
            n in 1usize..8,
            edge_bits in 0u64..(1 << 28),
            perm_seed in 0u64..10_000,
        ) {
            let mut pairs = Vec::new();
            let mut idx = 0;
            for u in 0..n { for v in u+1..n {
                if edge_bits >> idx & 1 == 1 { pairs.push((u, v)); }
                idx += 1;
            }}
            let g = SimpleGraph::from_edge_list(n, &pairs).unwrap();
            // a permutation from the seed
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = perm_seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        }
    }
}
