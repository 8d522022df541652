//! Exact chromatic polynomials: deletion-contraction with canonical-code
//! memoization, the spanning-subgraph expansion oracle, coefficient
//! extraction, and a brute-force coloring counter.

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poly::{binomial_power, IntPolynomial};
use dashmap::DashMap;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;

/// Shared memo table: canonical code of a connected component -> its
/// chromatic polynomial. Get-or-insert through DashMap is linearizable.
static MEMO: Lazy<DashMap<Vec<u8>, IntPolynomial>> = Lazy::new(DashMap::new);

const DEFAULT_NODE_BUDGET: usize = 5_000_000;

/// Chromatic polynomial by the deletion-contraction recursion
/// `ch_H = ch_{H\e} - ch_{H/e}`, with multiplicative splitting over
/// connected components and a closed form for forests.
pub fn chromatic_dc(g: &SimpleGraph) -> Result<IntPolynomial> {
    chromatic_dc_budgeted(g, DEFAULT_NODE_BUDGET)
}

/// As [`chromatic_dc`] with an explicit recursion-node budget; exceeding it
/// reports a budget error instead of running away.
pub fn chromatic_dc_budgeted(g: &SimpleGraph, budget: usize) -> Result<IntPolynomial> {
    let mut nodes = 0usize;
    let mut acc = IntPolynomial::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        acc = &acc * &dc_component(&sub, &mut nodes, budget)?;
    }
    Ok(acc)
}

fn dc_component(g: &SimpleGraph, nodes: &mut usize, budget: usize) -> Result<IntPolynomial> {
    *nodes += 1;
    if *nodes > budget {
        return Err(Error::Budget(format!("deletion-contraction exceeded {budget} nodes")));
    }
    let (n, m) = (g.n(), g.m());
    // connected graph with m = n-1 edges is a tree: z(z-1)^m; this also
    // catches n<=1 and the single edge
    if m + 1 == n || m == 0 {
        debug_assert!(m == 0 || m + 1 == n);
        if m == 0 {
            return Ok(IntPolynomial::monomial(n));
        }
        return Ok(&IntPolynomial::monomial(1) * &binomial_power(-1, m));
    }
    let code = if n <= canon::SIZE_CAP {
        match canon::canonical_code(g) {
            Ok(c) => {
                if let Some(hit) = MEMO.get(&c) {
                    return Ok(hit.clone());
                }
                Some(c)
            }
            Err(Error::Budget(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    // pick an edge on a shortest cycle so that both branches simplify fast
    let (_, e) = g.shortest_cycle_edge().expect("non-forest component has a cycle");
    let deleted = g.delete_edge(e);
    let contracted = g.contract_edge(e);
    // deleting a cycle edge keeps the component connected, and contraction
    // never disconnects, so both branches stay single components
    let p = dc_component(&deleted, nodes, budget)?;
    let q = dc_component(&contracted, nodes, budget)?;
    let p = &p - &q;
    if let Some(code) = code {
        MEMO.insert(code, p.clone());
    }
    Ok(p)
}

/// Chromatic polynomial by the spanning-subgraph expansion
/// `ch_H(z) = sum over spanning G of (-1)^{|E(G)|} z^{c(G)}`;
/// an independent oracle for [`chromatic_dc`], exponential in |E|.
pub fn chromatic_expansion(g: &SimpleGraph) -> Result<IntPolynomial> {
    let m = g.m();
    if m > 24 {
        return Err(Error::Budget(format!("expansion over 2^{m} spanning subgraphs")));
    }
    let n = g.n();
    let edges = g.edges();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    let mut dsu = vec![0usize; n];
    for mask in 0u64..1 << m {
        // components of the spanning subgraph via union-find
        for (v, slot) in dsu.iter_mut().enumerate() {
            *slot = v;
        }
        fn find(dsu: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while dsu[r] != r {
                r = dsu[r];
            }
            let mut v = v;
            while dsu[v] != r {
                let next = dsu[v];
                dsu[v] = r;
                v = next;
            }
            r
        }
        let mut comps = n;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
                if ru != rv {
                    dsu[ru] = rv;
                    comps -= 1;
                }
            }
        }
        let sign = if (mask.count_ones() & 1) == 1 { -1 } else { 1 };
        coeffs[comps] += BigInt::from(sign);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// Signed coefficients `e_0..e_{n-1}` with
/// `ch(z) = z^n - e_1 z^{n-1} + ... + (-1)^{n-1} e_{n-1} z`.
pub fn chromatic_coefficients(p: &IntPolynomial) -> Result<Vec<BigInt>> {
    if p.is_zero() || !p.leading().is_one() {
        return Err(Error::BadShape("chromatic polynomials are monic".into()));
    }
    let n = p.degree();
    if n >= 1 && !p.coeff(0).is_zero() {
        return Err(Error::BadShape("chromatic polynomials have zero constant term".into()));
    }
    Ok((0..n.max(1))
        .map(|k| {
            let c = p.coeff(n - k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect())
}

/// Number of proper q-colorings by backtracking; exact, with a vertex-count
/// feasibility cap.
pub fn count_colorings(g: &SimpleGraph, q: u32) -> Result<BigInt> {
    if g.n() > 20 {
        return Err(Error::Budget(format!("coloring count on {} vertices", g.n())));
    }
    let mut acc = BigInt::one();
    for comp in g.components() {
        let sub = g.induced(&comp);
        acc *= count_component(&sub, q);
    }
    Ok(acc)
}

fn count_component(g: &SimpleGraph, q: u32) -> BigInt {
    let n = g.n();
    if n == 0 {
        return BigInt::one();
    }
    let adj = g.adjacency();
    // BFS order so each vertex after the first has a colored neighbor
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut head = 0;
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
    let mut colors = vec![u32::MAX; n];
    let mut count = BigInt::zero();
    fn go(
        i: usize,
        order: &[usize],
        adj: &[Vec<usize>],
        q: u32,
        colors: &mut [u32],
        count: &mut BigInt,
    ) {
        if i == order.len() {
            *count += BigInt::one();
            return;
        }
        let v = order[i];
        'color: for c in 0..q {
            for &w in &adj[v] {
                if colors[w] == c {
                    continue 'color;
                }
            }
            colors[v] = c;
            go(i + 1, order, adj, q, colors, count);
            colors[v] = u32::MAX;
        }
    }
    go(0, &order, &adj, q, &mut colors, &mut count);
    count
}

/// Closed form for the path: `z(z-1)^{n-1}`.
pub fn path_chromatic(n: usize) -> IntPolynomial {
    assert!(n >= 1);
    &IntPolynomial::monomial(1) * &binomial_power(-1, n - 1)
}

/// Closed form for the cycle: `(z-1)^n + (-1)^n (z-1)`.
pub fn cycle_chromatic(n: usize) -> IntPolynomial {
    assert!(n >= 3);
    let zm1 = IntPolynomial::from_i64(&[-1, 1]);
    let sign = if n % 2 == 0 { 1 } else { -1 };
    &zm1.pow(n) + &zm1.scale(&BigInt::from(sign))
}
