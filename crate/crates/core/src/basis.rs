//! The graph classes G(k), the exact rational base parameters c_k(T), the
//! convolution and detach identities, and the hom-combination formulas
//! expressing chromatic coefficients e_k and root power sums p_k.
//!
//! Everything here is exact rational arithmetic; floating point is
//! deliberately absent.

use crate::canon::{self, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::hom;
use dashmap::DashMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

pub const DEFAULT_K_CAP: usize = 5;
pub const K_CAP: usize = 6;
const CONNECTED_CAP: usize = 8;

/// One isomorphism class in G(k): a graph without isolated vertices whose
/// vertex count minus component count equals `k_value`.
#[derive(Debug, Clone)]
pub struct GraphClassEntry {
    pub code: CanonicalCode,
    pub graph: SimpleGraph,
    pub aut: BigInt,
    pub k_value: usize,
}

/// Deterministic ordering key for formula terms: vertex count, edge count,
/// then canonical code.
pub type TermKey = (usize, usize, CanonicalCode);

pub fn term_key(g: &SimpleGraph) -> Result<TermKey> {
    Ok((g.n(), g.m(), canon::canonical_code(g)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaKind {
    /// e_k(H) as a hom combination.
    Coefficient,
    /// p_k(H) as a hom combination over connected graphs.
    Moment,
}

/// A formal linear combination `sum c_T * hom(T, .)` over canonical classes.
#[derive(Debug, Clone)]
pub struct HomLinearCombination {
    pub kind: FormulaKind,
    pub k: usize,
    terms: BTreeMap<TermKey, (SimpleGraph, BigRational)>,
}

impl HomLinearCombination {
    pub fn terms(&self) -> impl Iterator<Item = (&SimpleGraph, &BigRational)> {
        self.terms.values().map(|(g, c)| (g, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_of(&self, t: &SimpleGraph) -> Result<BigRational> {
        let key = term_key(t)?;
        Ok(self.terms.get(&key).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero))
    }

    /// Evaluate the combination at `h`, multiplying hom over pattern
    /// components so each connected hom count is computed once.
    pub fn evaluate(&self, h: &SimpleGraph) -> Result<BigRational> {
        let mut cache: HashMap<CanonicalCode, BigInt> = HashMap::new();
        let mut acc = BigRational::zero();
        for (t, c) in self.terms.values() {
            acc += c * BigRational::from(hom_by_components(t, h, &mut cache)?);
        }
        Ok(acc)
    }

    /// Evaluate, asserting the result is an exact integer.
    pub fn evaluate_int(&self, h: &SimpleGraph) -> Result<BigInt> {
        let v = self.evaluate(h)?;
        if !v.is_integer() {
            return Err(Error::Malformed(format!("formula value {v} is not an integer")));
        }
        Ok(v.to_integer())
    }
}

fn hom_by_components(
    t: &SimpleGraph,
    h: &SimpleGraph,
    cache: &mut HashMap<CanonicalCode, BigInt>,
) -> Result<BigInt> {
    let mut acc = BigInt::one();
    for comp in t.components() {
        let sub = t.induced(&comp);
        let code = canon::canonical_code(&sub)?;
        let v = match cache.get(&code) {
            Some(v) => v.clone(),
            None => {
                let v = hom::hom_count(&sub, h);
                cache.insert(code, v.clone());
                v
            }
        };
        acc *= v;
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// enumeration of connected classes and of G(k)

static CONNECTED_CACHE: Lazy<DashMap<usize, Arc<Vec<GraphClassEntry>>>> = Lazy::new(DashMap::new);

/// All connected isomorphism classes on exactly `v` vertices, built by
/// attaching a new vertex to every connected class on `v-1` vertices and
/// deduplicating by canonical code. Every connected graph has a removable
/// non-cut vertex, so the augmentation is exhaustive.
pub fn enumerate_connected(v: usize) -> Result<Arc<Vec<GraphClassEntry>>> {
    if v > CONNECTED_CAP {
        return Err(Error::SizeCap { n: v, cap: CONNECTED_CAP });
    }
    if let Some(hit) = CONNECTED_CACHE.get(&v) {
        return Ok(hit.clone());
    }
    let entries: Vec<GraphClassEntry> = if v == 0 {
        Vec::new()
    } else if v == 1 {
        let g = SimpleGraph::empty(1);
        vec![GraphClassEntry {
            code: canon::canonical_code(&g)?,
            aut: BigInt::one(),
            k_value: 0,
            graph: g,
        }]
    } else {
        let smaller = enumerate_connected(v - 1)?;
        let mut seen: BTreeMap<CanonicalCode, SimpleGraph> = BTreeMap::new();
        for entry in smaller.iter() {
            let base = &entry.graph;
            for mask in 1u64..1 << (v - 1) {
                let mut edges: Vec<(usize, usize)> = base.edges().to_vec();
                for u in 0..v - 1 {
                    if mask >> u & 1 == 1 {
                        edges.push((u, v - 1));
                    }
                }
                let g = SimpleGraph::from_edge_list(v, &edges)?;
                let code = canon::canonical_code(&g)?;
                seen.entry(code).or_insert(g);
            }
        }
        seen.into_iter()
            .map(|(code, graph)| {
                let aut = BigInt::from(canon::automorphism_count(&graph)?);
                Ok(GraphClassEntry { code, k_value: v - 1, aut, graph })
            })
            .collect::<Result<Vec<_>>>()?
    };
    let arc = Arc::new(entries);
    CONNECTED_CACHE.insert(v, arc.clone());
    Ok(arc)
}

static CLASS_CACHE: Lazy<DashMap<usize, Arc<Vec<GraphClassEntry>>>> = Lazy::new(DashMap::new);

/// All classes of G(k): graphs without isolated vertices with
/// |V| - #components = k, assembled as multisets of connected classes
/// (a connected member of G(j) has j+1 vertices).
pub fn enumerate_class(k: usize) -> Result<Arc<Vec<GraphClassEntry>>> {
    if k > K_CAP {
        return Err(Error::SizeCap { n: k, cap: K_CAP });
    }
    if k == 0 {
        return Ok(Arc::new(Vec::new()));
    }
    if let Some(hit) = CLASS_CACHE.get(&k) {
        return Ok(hit.clone());
    }
    // connected classes of G(j) live on j+1 vertices; pool[j] holds them
    let pools: Vec<Arc<Vec<GraphClassEntry>>> =
        (0..=k).map(|j| enumerate_connected(j + 1)).collect::<Result<_>>()?;
    let mut out: Vec<GraphClassEntry> = Vec::new();
    let mut chosen: Vec<(usize, usize)> = Vec::new(); // (part, index in pool)
    fn assemble(
        remaining: usize,
        max_part: usize,
        pools: &[Arc<Vec<GraphClassEntry>>],
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<GraphClassEntry>,
    ) -> Result<()> {
        if remaining == 0 {
            let picked: Vec<&GraphClassEntry> =
                chosen.iter().map(|&(part, idx)| &pools[part][idx]).collect();
            let mut graph = SimpleGraph::empty(0);
            for entry in &picked {
                graph = graph.disjoint_union(&entry.graph);
            }
            // |Aut| = prod |Aut(component)| * prod multiplicity!
            let mut aut = BigInt::one();
            let mut i = 0;
            while i < picked.len() {
                let mut j = i;
                while j < picked.len() && picked[j].code == picked[i].code {
                    j += 1;
                }
                let mult = j - i;
                for _ in 0..mult {
                    aut *= &picked[i].aut;
                }
                for f in 2..=mult {
                    aut *= BigInt::from(f as u64);
                }
                i = j;
            }
            let code = canon::canonical_code(&graph)?;
            let k_value = graph.n() - graph.components().len();
            out.push(GraphClassEntry { code, graph, aut, k_value });
            return Ok(());
        }
        for part in (1..=remaining.min(max_part)).rev() {
            for idx in 0..pools[part].len() {
                // enforce non-decreasing (part, code) so each multiset is
                // produced exactly once
                if let Some(&(last_part, last_idx)) = chosen.last() {
                    if part == last_part && idx < last_idx {
                        continue;
                    }
                }
                chosen.push((part, idx));
                assemble(remaining - part, part, pools, chosen, out)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    assemble(k, k, &pools, &mut chosen, &mut out)?;
    out.sort_by(|a, b| (a.graph.n(), a.graph.m(), &a.code).cmp(&(b.graph.n(), b.graph.m(), &b.code)));
    out.dedup_by(|a, b| a.code == b.code);
    let arc = Arc::new(out);
    CLASS_CACHE.insert(k, arc.clone());
    Ok(arc)
}

// ---------------------------------------------------------------------------
// base parameters c_k(T)

static BASE_CACHE: Lazy<DashMap<usize, Arc<BTreeMap<TermKey, (SimpleGraph, BigRational)>>>> =
    Lazy::new(DashMap::new);

/// All nonzero c_k(T) at once:
/// `c_k(T) = sum over G in G(k) of
///   (-1)^{|E(G)|+|V(G)|+|V(T)|+k} / |Aut(G)| * sum over P in P(G,T) ||P||`.
pub fn base_params(k: usize) -> Result<Arc<BTreeMap<TermKey, (SimpleGraph, BigRational)>>> {
    if k == 0 || k > K_CAP {
        return Err(Error::SizeCap { n: k, cap: K_CAP });
    }
    if let Some(hit) = BASE_CACHE.get(&k) {
        return Ok(hit.clone());
    }
    let members = enumerate_class(k)?;
    let partials: Vec<BTreeMap<TermKey, (SimpleGraph, BigRational)>> = members
        .par_iter()
        .map(|entry| -> Result<_> {
            let g = &entry.graph;
            let mut weights: BTreeMap<TermKey, (SimpleGraph, BigInt)> = BTreeMap::new();
            for p in hom::independent_partitions(g)? {
                let t = hom::quotient(g, &p)?;
                let key = term_key(&t)?;
                let w = p.weight();
                weights
                    .entry(key)
                    .and_modify(|(_, acc)| *acc += &w)
                    .or_insert((t, w));
            }
            let mut local: BTreeMap<TermKey, (SimpleGraph, BigRational)> = BTreeMap::new();
            for (key, (t, w)) in weights {
                let exponent = g.m() + g.n() + t.n() + k;
                let mut num = w;
                if exponent % 2 == 1 {
                    num = -num;
                }
                let c = BigRational::new(num, entry.aut.clone());
                local.insert(key, (t, c));
            }
            Ok(local)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total: BTreeMap<TermKey, (SimpleGraph, BigRational)> = BTreeMap::new();
    for partial in partials {
        for (key, (t, c)) in partial {
            match total.get_mut(&key) {
                Some((_, acc)) => *acc += c,
                None => {
                    total.insert(key, (t, c));
                }
            }
        }
    }
    total.retain(|_, (_, c)| !c.is_zero());
    let arc = Arc::new(total);
    BASE_CACHE.insert(k, arc.clone());
    Ok(arc)
}

/// The single base parameter c_k(T); zero when T is not a quotient of any
/// member of G(k).
pub fn base_param(k: usize, t: &SimpleGraph) -> Result<BigRational> {
    if t.degrees().iter().any(|&d| d == 0) {
        return Err(Error::Malformed("base parameters require no isolated vertices".into()));
    }
    let key = term_key(t)?;
    Ok(base_params(k)?.get(&key).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero))
}

// ---------------------------------------------------------------------------
// lattice identities

/// Structured outcome of an exact identity check.
#[derive(Debug, Clone)]
pub struct IdentityReport {
    pub holds: bool,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

/// The convolution identity for a disjoint union `T = T_1 u ... u T_l`:
/// `c_k(T) = (1/sigma) sum over x_1+...+x_l=k of prod c_{x_j}(T_j)` with
/// `sigma = prod over distinct classes of multiplicity!`.
pub fn convolution_check(parts: &[SimpleGraph], k: usize) -> Result<IdentityReport> {
    if parts.iter().any(|t| !t.is_connected() || t.n() < 2) {
        return Err(Error::NotConnected);
    }
    let mut union = SimpleGraph::empty(0);
    for t in parts {
        union = union.disjoint_union(t);
    }
    let lhs = base_param(k, &union)?;
    let codes: Vec<CanonicalCode> =
        parts.iter().map(canon::canonical_code).collect::<Result<_>>()?;
    let mut sigma = BigInt::one();
    {
        let mut sorted = codes.clone();
        sorted.sort();
        let mut i = 0;
        while i < sorted.len() {
            let mut j = i;
            while j < sorted.len() && sorted[j] == sorted[i] {
                j += 1;
            }
            for f in 2..=(j - i) {
                sigma *= BigInt::from(f as u64);
            }
            i = j;
        }
    }
    let mut rhs = BigRational::zero();
    let l = parts.len();
    let mut xs = vec![1usize; l];
    // all compositions of k into l positive parts
    fn compositions(
        idx: usize,
        remaining: usize,
        parts: &[SimpleGraph],
        xs: &mut [usize],
        acc: &mut BigRational,
    ) -> Result<()> {
        let l = parts.len();
        if idx == l - 1 {
            if remaining == 0 {
                return Ok(());
            }
            xs[idx] = remaining;
            let mut prod = BigRational::one();
            for (x, t) in xs.iter().zip(parts) {
                let c = base_param(*x, t)?;
                if c.is_zero() {
                    return Ok(());
                }
                prod *= c;
            }
            *acc += prod;
            return Ok(());
        }
        for x in 1..=remaining.saturating_sub(l - idx - 1) {
            xs[idx] = x;
            compositions(idx + 1, remaining - x, parts, xs, acc)?;
        }
        Ok(())
    }
    if l >= 1 {
        compositions(0, k, parts, &mut xs, &mut rhs)?;
    }
    rhs /= BigRational::from(sigma);
    Ok(IdentityReport { holds: lhs == rhs, lhs, rhs })
}

/// The detach identity for disconnected T:
/// `k c_k(T) = sum_{i=1}^{k-1} sum over distinct components T_j of
///  i c_i(T_j) c_{k-i}(T \ T_j)`.
pub fn detach_check(t: &SimpleGraph, k: usize) -> Result<IdentityReport> {
    let comps = t.components();
    if comps.len() < 2 {
        return Err(Error::NotDisconnected);
    }
    let parts: Vec<SimpleGraph> = comps.iter().map(|c| t.induced(c)).collect();
    let codes: Vec<CanonicalCode> =
        parts.iter().map(canon::canonical_code).collect::<Result<_>>()?;
    let lhs = BigRational::from(BigInt::from(k as u64)) * base_param(k, t)?;
    let mut rhs = BigRational::zero();
    let mut seen: Vec<&CanonicalCode> = Vec::new();
    for (j, part) in parts.iter().enumerate() {
        if seen.contains(&&codes[j]) {
            continue; // only distinct component classes
        }
        seen.push(&codes[j]);
        let mut rest = SimpleGraph::empty(0);
        for (i, other) in parts.iter().enumerate() {
            if i != j {
                rest = rest.disjoint_union(other);
            }
        }
        for i in 1..k {
            let a = base_param(i, part)?;
            if a.is_zero() {
                continue;
            }
            let b = base_param(k - i, &rest)?;
            rhs += BigRational::from(BigInt::from(i as u64)) * a * b;
        }
    }
    Ok(IdentityReport { holds: lhs == rhs, lhs, rhs })
}

// ---------------------------------------------------------------------------
// formulas

/// `e_k(H) = sum over T in G(<=k) of c_k(T) hom(T,H)`; k = 0 gives the
/// constant 1 as the empty-graph term.
pub fn coefficient_formula(k: usize) -> Result<HomLinearCombination> {
    if k > K_CAP {
        return Err(Error::SizeCap { n: k, cap: K_CAP });
    }
    let mut terms = BTreeMap::new();
    if k == 0 {
        let empty = SimpleGraph::empty(0);
        terms.insert(term_key(&empty)?, (empty, BigRational::one()));
    } else {
        terms = base_params(k)?.as_ref().clone();
    }
    Ok(HomLinearCombination { kind: FormulaKind::Coefficient, k, terms })
}

type Combo = BTreeMap<TermKey, (SimpleGraph, BigRational)>;

fn combo_add(acc: &mut Combo, key: TermKey, graph: SimpleGraph, c: BigRational) {
    match acc.get_mut(&key) {
        Some((_, old)) => *old += c,
        None => {
            acc.insert(key, (graph, c));
        }
    }
}

/// Formal product: hom is multiplicative over disjoint unions, so the
/// product of two terms is the disjoint union of their graphs.
fn combo_mul(a: &Combo, b: &Combo) -> Result<Combo> {
    let mut out = Combo::new();
    for (t1, c1) in a.values() {
        for (t2, c2) in b.values() {
            let u = t1.disjoint_union(t2);
            let key = term_key(&u)?;
            combo_add(&mut out, key, u, c1 * c2);
        }
    }
    Ok(out)
}

fn combo_scale(a: &Combo, s: &BigRational) -> Combo {
    a.iter().map(|(k, (g, c))| (k.clone(), (g.clone(), c * s))).collect()
}

static MOMENT_CACHE: Lazy<DashMap<usize, Arc<Combo>>> = Lazy::new(DashMap::new);

/// The full (pre-cancellation) formal Newton expansion of p_k as a combo
/// over G(<=k), including the disconnected terms that must cancel.
fn moment_combo(k: usize) -> Result<Arc<Combo>> {
    if let Some(hit) = MOMENT_CACHE.get(&k) {
        return Ok(hit.clone());
    }
    // p_k = (-1)^{k-1} k e_k + sum_{i<k} (-1)^{k-i-1} p_i e_{k-i}
    let sign = |even: bool, v: BigRational| if even { v } else { -v };
    let mut acc =
        combo_scale(base_params(k)?.as_ref(), &sign((k - 1) % 2 == 0, BigRational::from(BigInt::from(k as u64))));
    for i in 1..k {
        let pi = moment_combo(i)?;
        let ekisub = base_params(k - i)?;
        let prod = combo_mul(&pi, &ekisub)?;
        let prod = combo_scale(&prod, &sign((k - i - 1) % 2 == 0, BigRational::one()));
        for (key, (g, c)) in prod {
            combo_add(&mut acc, key, g, c);
        }
    }
    acc.retain(|_, (_, c)| !c.is_zero());
    let arc = Arc::new(acc);
    MOMENT_CACHE.insert(k, arc.clone());
    Ok(arc)
}

/// `p_k(H) = sum over connected T in G(<=k) of (-1)^{k-1} k c_k(T) hom(T,H)`.
///
/// Assembled through the Newton recursion over formulas; the coefficients
/// on disconnected T must cancel to exactly zero, and the surviving
/// connected coefficients must equal `(-1)^{k-1} k c_k(T)`. Both facts are
/// asserted here on every call path.
pub fn moment_formula(k: usize) -> Result<HomLinearCombination> {
    if k == 0 || k > K_CAP {
        return Err(Error::SizeCap { n: k, cap: K_CAP });
    }
    let combo = moment_combo(k)?;
    let ck = base_params(k)?;
    let mut terms = Combo::new();
    for (key, (g, c)) in combo.iter() {
        if !g.is_connected() {
            return Err(Error::Malformed(format!(
                "disconnected term survived the Newton cancellation with coefficient {c}"
            )));
        }
        let mut expect = ck.get(key).map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
            * BigRational::from(BigInt::from(k as u64));
        if k % 2 == 0 {
            expect = -expect;
        }
        if *c != expect {
            return Err(Error::Malformed(format!(
                "connected coefficient {c} differs from (-1)^(k-1) k c_k(T) = {expect}"
            )));
        }
        terms.insert(key.clone(), (g.clone(), c.clone()));
    }
    Ok(HomLinearCombination { kind: FormulaKind::Moment, k, terms })
}

/// p_0(H) = |V(H)| = hom(K1, H), kept separate since the Newton recursion
/// starts at k = 1.
pub fn moment_zero_formula() -> Result<HomLinearCombination> {
    let k1 = SimpleGraph::empty(1);
    let mut terms = Combo::new();
    terms.insert(term_key(&k1)?, (k1, BigRational::one()));
    Ok(HomLinearCombination { kind: FormulaKind::Moment, k: 0, terms })
}

// ---------------------------------------------------------------------------
// appendix regeneration

/// The regenerated appendix: e_0..e_{kmax-1} and p_0..p_{kmax}.
#[derive(Debug, Clone)]
pub struct AppendixTable {
    pub e: Vec<HomLinearCombination>,
    pub p: Vec<HomLinearCombination>,
}

pub fn emit_appendix(kmax: usize) -> Result<AppendixTable> {
    if kmax > K_CAP {
        return Err(Error::SizeCap { n: kmax, cap: K_CAP });
    }
    let e = (0..kmax).map(coefficient_formula).collect::<Result<Vec<_>>>()?;
    let mut p = vec![moment_zero_formula()?];
    for k in 1..=kmax {
        p.push(moment_formula(k)?);
    }
    Ok(AppendixTable { e, p })
}

fn formula_label(f: &HomLinearCombination) -> String {
    match f.kind {
        FormulaKind::Coefficient => format!("e_{}", f.k),
        FormulaKind::Moment => format!("p_{}", f.k),
    }
}

impl HomLinearCombination {
    /// One line per term: `coefficient * hom(graph6, .)  edges=[...]`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}(H) =\n", formula_label(self));
        if self.terms.is_empty() {
            out.push_str("  0\n");
        }
        for (g, c) in self.terms.values() {
            let edges: Vec<String> =
                g.edges().iter().map(|&(u, v)| format!("({u},{v})")).collect();
            out.push_str(&format!(
                "  {c} * hom({}, H)   edges=[{}]\n",
                crate::graph6::emit_graph6(g),
                edges.join(", ")
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .values()
            .map(|(g, c)| {
                serde_json::json!({
                    "coefficient": format!("{}/{}", c.numer(), c.denom()),
                    "graph6": crate::graph6::emit_graph6(g),
                    "vertices": g.n(),
                    "edges": g.edges().iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "formula": formula_label(self),
            "k": self.k,
            "terms": terms,
        })
    }
}

impl AppendixTable {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for f in self.e.iter().chain(self.p.iter()) {
            out.push_str(&f.to_text());
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "e": self.e.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
            "p": self.p.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chromatic_coefficients, chromatic_dc};
    use crate::graph;
    use crate::spectra::power_sums_newton;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn connected_counts() {
        assert_eq!(enumerate_connected(2).unwrap().len(), 1);
        assert_eq!(enumerate_connected(3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(4).unwrap().len(), 6);
        assert_eq!(enumerate_connected(5).unwrap().len(), 21);
        assert_eq!(enumerate_connected(6).unwrap().len(), 112);
    }

    #[test]
    fn class_structure() {
        let g1 = enumerate_class(1).unwrap();
        assert_eq!(g1.len(), 1);
        assert_eq!((g1[0].graph.n(), g1[0].graph.m()), (2, 1));
        let g2 = enumerate_class(2).unwrap();
        // P3, K3, 2K2
        assert_eq!(g2.len(), 3);
        for entry in enumerate_class(3).unwrap().iter() {
            assert_eq!(entry.k_value, 3);
            assert!(entry.graph.n() >= 2 && entry.graph.n() <= 6);
            assert!(entry.graph.degrees().iter().all(|&d| d > 0));
        }
    }

    #[test]
    fn aut_of_disjoint_unions() {
        // 2K2 has |Aut| = 2*2*2! = 8
        let g2 = enumerate_class(2).unwrap();
        let two_k2 = g2.iter().find(|e| e.graph.n() == 4).unwrap();
        assert_eq!(two_k2.aut, BigInt::from(8));
    }

    #[test]
    fn c1_values() {
        assert_eq!(base_param(1, &graph::path(2)).unwrap(), rat(1, 2));
        assert_eq!(base_param(1, &graph::path(3)).unwrap(), BigRational::zero());
    }

    #[test]
    fn c2_of_two_k2() {
        let two_k2 = SimpleGraph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(base_param(2, &two_k2).unwrap(), rat(1, 8));
    }

    #[test]
    fn e_formula_matches_deletion_contraction() {
        let corpus = [
            graph::complete(4),
            graph::cycle(5),
            graph::petersen(),
            graph::grid_box(2, 3),
            graph::path(6),
        ];
        for h in &corpus {
            let e = chromatic_coefficients(&chromatic_dc(h).unwrap()).unwrap();
            for k in 0..=3usize {
                let f = coefficient_formula(k).unwrap();
                let got = f.evaluate_int(h).unwrap();
                let expect = e.get(k).cloned().unwrap_or_else(BigInt::zero);
                assert_eq!(got, expect, "e_{k} on n={}", h.n());
            }
        }
        // e_2(C5) = binom(5,2)
        let f2 = coefficient_formula(2).unwrap();
        assert_eq!(f2.evaluate_int(&graph::cycle(5)).unwrap(), BigInt::from(10));
        // e_2(K4) = binom(6,2) - 4
        assert_eq!(f2.evaluate_int(&graph::complete(4)).unwrap(), BigInt::from(11));
    }

    #[test]
    fn p_formula_matches_newton() {
        let corpus = [graph::complete(4), graph::cycle(6), graph::petersen()];
        for h in &corpus {
            let e = chromatic_coefficients(&chromatic_dc(h).unwrap()).unwrap();
            let p = power_sums_newton(&e, 4).unwrap();
            for k in 1..=4usize {
                let f = moment_formula(k).unwrap();
                assert!(f.terms().all(|(t, _)| t.is_connected()));
                assert_eq!(f.evaluate_int(h).unwrap(), p[k - 1], "p_{k} on n={}", h.n());
            }
        }
    }

    #[test]
    fn p1_is_edge_count() {
        let f = moment_formula(1).unwrap();
        assert_eq!(f.len(), 1);
        assert_eq!(f.coefficient_of(&graph::path(2)).unwrap(), rat(1, 2));
    }

    #[test]
    fn convolution_and_detach() {
        let k2 = graph::path(2);
        let r = convolution_check(&[k2.clone(), k2.clone()], 2).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, rat(1, 8));
        let k3 = graph::complete(3);
        let r = convolution_check(&[k2.clone(), k3.clone()], 3).unwrap();
        assert!(r.holds);
        let two_k2 = k2.disjoint_union(&k2);
        let r = detach_check(&two_k2, 2).unwrap();
        assert!(r.holds);
        assert!(matches!(detach_check(&k3, 2), Err(Error::NotDisconnected)));
    }
}
