//! Benjamini-Schramm local statistics, convergence experiments, and the
//! large-girth entropy estimate with its explicit error bound.

use crate::basis;
use crate::canon::{self, CanonicalCode};
use crate::chromatic::{self, chromatic_coefficients};
use crate::error::{Error, Result};
use crate::graph::{self, SimpleGraph};
use crate::hom;
use crate::poly::{big_rational_to_f64, ln_big_rational, IntPolynomial};
use crate::spectra::{self, SOKAL_C};
use crate::tube;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

pub const BALL_RADIUS_CAP: usize = 5;

/// Exact distribution of the isomorphism class of the R-ball around a
/// uniform random vertex.
#[derive(Debug, Clone)]
pub struct BallDistribution {
    pub radius: usize,
    weights: BTreeMap<CanonicalCode, (graph::RootedBall, BigRational)>,
}

impl BallDistribution {
    pub fn atoms(&self) -> impl Iterator<Item = (&graph::RootedBall, &BigRational)> {
        self.weights.values().map(|(b, w)| (b, w))
    }

    pub fn atom_count(&self) -> usize {
        self.weights.len()
    }

    pub fn total(&self) -> BigRational {
        self.weights.values().map(|(_, w)| w).sum()
    }

    /// Total variation distance, exact.
    pub fn tv_distance(&self, other: &BallDistribution) -> BigRational {
        let mut acc = BigRational::zero();
        for (code, (_, w)) in &self.weights {
            let v = other.weights.get(code).map(|(_, v)| v.clone()).unwrap_or_else(BigRational::zero);
            acc += (w - v).abs();
        }
        for (code, (_, v)) in &other.weights {
            if !self.weights.contains_key(code) {
                acc += v.abs();
            }
        }
        acc / BigRational::from(BigInt::from(2))
    }
}

/// Canonical code of a rooted ball: the root is distinguished by color.
fn rooted_code(ball: &graph::RootedBall) -> Result<CanonicalCode> {
    let mut colors = vec![0u32; ball.graph.n()];
    colors[ball.root] = 1;
    canon::canonical_code_colored(&ball.graph, &colors)
}

pub fn ball_distribution(g: &SimpleGraph, r: usize) -> Result<BallDistribution> {
    if r > BALL_RADIUS_CAP {
        return Err(Error::OutOfRange(format!("ball radius {r} beyond cap {BALL_RADIUS_CAP}")));
    }
    if g.n() == 0 {
        return Err(Error::Malformed("ball distribution of the empty graph".into()));
    }
    let n = BigInt::from(g.n() as u64);
    let mut weights: BTreeMap<CanonicalCode, (graph::RootedBall, BigRational)> = BTreeMap::new();
    for v in 0..g.n() {
        let ball = graph::ball(g, v, r)?;
        let code = rooted_code(&ball)?;
        let w = BigRational::new(BigInt::one(), n.clone());
        weights
            .entry(code)
            .and_modify(|(_, acc)| *acc += &w)
            .or_insert((ball, w));
    }
    Ok(BallDistribution { radius: r, weights })
}

/// hom(T, G) / |V(G)| as an exact rational; T must be connected, since for
/// disconnected T the count scales like a higher power of |V|.
pub fn hom_density(t: &SimpleGraph, g: &SimpleGraph) -> Result<BigRational> {
    if !t.is_connected() || t.n() == 0 {
        return Err(Error::NotConnected);
    }
    if g.n() == 0 {
        return Err(Error::Malformed("hom density into the empty graph".into()));
    }
    Ok(BigRational::new(hom::hom_count(t, g), BigInt::from(g.n() as u64)))
}

/// The large-girth d-regular limit `ln q + (d/2) ln(1 - 1/q)`.
pub fn tree_entropy(d: usize, q: f64) -> Result<f64> {
    if !(q > 1.0) {
        return Err(Error::OutOfRange(format!("tree entropy needs q > 1, got {q}")));
    }
    Ok(q.ln() + d as f64 / 2.0 * (1.0 - 1.0 / q).ln())
}

/// Girth-based entropy estimate at a rational q.
#[derive(Debug, Clone)]
pub struct GirthEstimate {
    pub q: BigRational,
    /// `ln q + (|E|/|V|) ln(1 - 1/q)`.
    pub estimate: f64,
    /// `2 (Cd/q)^{g-1} / (1 - Cd/q)`; exactly 0 for forests.
    pub bound: f64,
    /// `ln ch_G(q) / |V|` when ch was computable under budget.
    pub exact: Option<f64>,
    pub girth: Option<usize>,
    pub forest: bool,
}

impl GirthEstimate {
    /// Whether `|exact - estimate| <= bound` (with a hair of f64 slack);
    /// `None` when no exact value is available.
    pub fn within_bound(&self, slack: f64) -> Option<bool> {
        self.exact.map(|e| (e - self.estimate).abs() <= self.bound + slack)
    }
}

/// The estimate, its explicit girth-based error bound, and (budget allowing)
/// the exact entropy for comparison. Requires q > C*d so the bound is
/// meaningful; for forests the estimate is an identity and the bound is 0.
pub fn girth_estimate(g: &SimpleGraph, q: &BigRational, c: Option<f64>) -> Result<GirthEstimate> {
    let c = c.unwrap_or(SOKAL_C);
    let d = g.max_degree();
    let qf = big_rational_to_f64(q);
    if !(qf > c * d as f64) {
        return Err(Error::OutOfRange(format!(
            "girth estimate needs q > C*d = {}, got {qf}",
            c * d as f64
        )));
    }
    if g.n() == 0 {
        return Err(Error::Malformed("girth estimate of the empty graph".into()));
    }
    let n = g.n() as f64;
    let m = g.m() as f64;
    // ln q and ln(1 - 1/q) of exact rationals, so the estimate itself does
    // not leak rounding from q
    let one = BigRational::one();
    let estimate = ln_big_rational(q) + m / n * ln_big_rational(&(&one - &(&one / q)));
    let girth = g.girth();
    let forest = girth.is_none();
    let bound = match girth {
        None => 0.0,
        Some(girt) => {
            let x = c * d as f64 / qf;
            2.0 * x.powi(girt as i32 - 1) / (1.0 - x)
        }
    };
    let exact = chromatic::chromatic_dc(g).ok().map(|ch| {
        let value = ch.eval_rational(q);
        ln_big_rational(&value) / n
    });
    Ok(GirthEstimate { q: q.clone(), estimate, bound, exact, girth, forest })
}

/// Per-graph report for the girth-moment identities: `p_i = |E|` and
/// `e_i = binom(|E|, i)` for `i <= girth - 2`.
#[derive(Debug, Clone)]
pub struct GirthMomentReport {
    pub girth: usize,
    pub edges: usize,
    pub power_sums: Vec<BigInt>,
    pub coefficients: Vec<BigInt>,
    pub holds: bool,
}

pub fn girth_moment_check(g: &SimpleGraph) -> Result<GirthMomentReport> {
    let girth = g.girth().ok_or(Error::OutOfRange("girth moment check needs a cycle".into()))?;
    let ch = chromatic::chromatic_dc(g)?;
    let e = chromatic_coefficients(&ch)?;
    let kmax = girth.saturating_sub(2);
    let p = if kmax > 0 { spectra::power_sums_newton(&e, kmax)? } else { Vec::new() };
    let m = BigInt::from(g.m() as u64);
    let mut holds = p.iter().all(|pi| *pi == m);
    let coefficients: Vec<BigInt> = (1..=kmax).map(|i| e.get(i).cloned().unwrap_or_else(BigInt::zero)).collect();
    for (i, ei) in coefficients.iter().enumerate() {
        holds &= *ei == crate::poly::binomial(g.m(), i + 1);
    }
    Ok(GirthMomentReport { girth, edges: g.m(), power_sums: p, coefficients, holds })
}

/// Graph families for the convergence experiments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    /// d-dimensional discrete torus (Z/nZ)^d.
    Torus { d: usize },
    /// T_n = C4 x P_n.
    Tube,
    RandomRegular { d: usize, girth: usize, seed: u64 },
}

impl Family {
    pub fn name(&self) -> String {
        match self {
            Family::Path => "path".into(),
            Family::Cycle => "cycle".into(),
            Family::Torus { d } => format!("torus({d})"),
            Family::Tube => "tube".into(),
            Family::RandomRegular { d, girth, seed } => {
                format!("random-regular(d={d},girth={girth},seed={seed})")
            }
        }
    }

    pub fn build(&self, size: usize) -> Result<SimpleGraph> {
        Ok(match self {
            Family::Path => graph::path(size),
            Family::Cycle => graph::cycle(size),
            Family::Torus { d } => graph::torus(*d, size),
            Family::Tube => graph::tube(size),
            Family::RandomRegular { d, girth, seed } => {
                graph::random_regular(*d, size, *girth, *seed)?
            }
        })
    }

    /// Exact chromatic polynomial along the fast lane where one exists.
    fn chromatic(&self, size: usize, g: &SimpleGraph) -> Result<IntPolynomial> {
        match self {
            Family::Path => Ok(chromatic::path_chromatic(size)),
            Family::Cycle => Ok(chromatic::cycle_chromatic(size)),
            Family::Tube => tube::tube_chromatic(size),
            Family::Torus { .. } | Family::RandomRegular { .. } => {
                // deletion-contraction cost grows like phi^(n+m); gate on
                // size before spending the node budget on a lost cause
                if g.n() > 20 || g.m() > 40 {
                    return Err(Error::Budget(format!(
                        "deletion-contraction infeasible for n={}, m={}",
                        g.n(),
                        g.m()
                    )));
                }
                chromatic::chromatic_dc_budgeted(g, CONVERGENCE_DC_BUDGET)
            }
        }
    }
}

/// Deletion-contraction node budget per convergence record; families without
/// a closed form get this much work before falling back to hom-only output.
const CONVERGENCE_DC_BUDGET: usize = 100_000;

/// One row of a convergence experiment.
#[derive(Debug, Clone)]
pub struct SizeRecord {
    pub size: usize,
    pub vertices: usize,
    pub edges: usize,
    /// p_k / n for k = 1..=kmax via coefficients + Newton, when ch was
    /// computable under budget.
    pub moments_newton: Option<Vec<BigRational>>,
    /// p_k / n for k = 1..=min(kmax, 5) via the hom formula; always present.
    pub moments_hom: Vec<BigRational>,
    /// (q, ln ch(q)/n) at the requested integer points, when ch is known.
    pub entropy: Vec<(u64, f64)>,
    /// budget failures and similar non-fatal conditions
    pub note: Option<String>,
}

#[derive(Debug, Clone)]
pub struct ConvergenceSeries {
    pub family: String,
    pub kmax: usize,
    pub records: Vec<SizeRecord>,
}

/// Run the experiment across sizes (in parallel, deterministically ordered).
/// Wherever both moment paths are available they are asserted exactly equal.
pub fn run_convergence(
    family: Family,
    sizes: &[usize],
    kmax: usize,
    q_list: &[u64],
) -> Result<ConvergenceSeries> {
    let hom_kmax = kmax.min(basis::DEFAULT_K_CAP);
    // warm the formula caches once before going parallel
    for k in 1..=hom_kmax {
        basis::moment_formula(k)?;
    }
    let records: Vec<SizeRecord> = sizes
        .par_iter()
        .map(|&size| -> Result<SizeRecord> {
            let g = family.build(size)?;
            let n = BigInt::from(g.n() as u64);
            let mut note = None;
            let mut moments_hom = Vec::new();
            for k in 1..=hom_kmax {
                let f = basis::moment_formula(k)?;
                moments_hom.push(BigRational::from(f.evaluate_int(&g)?) / BigRational::from(n.clone()));
            }
            let mut moments_newton = None;
            let mut entropy = Vec::new();
            match family.chromatic(size, &g) {
                Ok(ch) => {
                    let e = chromatic_coefficients(&ch)?;
                    let p = spectra::power_sums_newton(&e, kmax)?;
                    let newton: Vec<BigRational> = p
                        .into_iter()
                        .map(|pk| BigRational::from(pk) / BigRational::from(n.clone()))
                        .collect();
                    for (k, hom_val) in moments_hom.iter().enumerate() {
                        if newton[k] != *hom_val {
                            return Err(Error::Malformed(format!(
                                "moment path mismatch at size {size}, k = {}",
                                k + 1
                            )));
                        }
                    }
                    for &q in q_list {
                        entropy.push((q, spectra::entropy_at_integer(&g, &ch, q)?));
                    }
                    moments_newton = Some(newton);
                }
                Err(err) => note = Some(format!("chromatic polynomial unavailable: {err}")),
            }
            Ok(SizeRecord {
                size,
                vertices: g.n(),
                edges: g.m(),
                moments_newton,
                moments_hom,
                entropy,
                note,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceSeries { family: family.name(), kmax, records })
}

fn rational_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl ConvergenceSeries {
    /// One JSON object per size record, newline separated.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for rec in &self.records {
            let v = serde_json::json!({
                "family": self.family,
                "kmax": self.kmax,
                "size": rec.size,
                "vertices": rec.vertices,
                "edges": rec.edges,
                "moments_newton": rec
                    .moments_newton
                    .as_ref()
                    .map(|ms| ms.iter().map(rational_string).collect::<Vec<_>>()),
                "moments_hom": rec.moments_hom.iter().map(rational_string).collect::<Vec<_>>(),
                "entropy": rec.entropy.iter().map(|&(q, t)| serde_json::json!([q, t])).collect::<Vec<_>>(),
                "note": rec.note,
            });
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }

    /// Summary CSV: hom-path moments and entropy values as floats.
    pub fn to_csv(&self) -> String {
        let kmax_hom = self.records.first().map(|r| r.moments_hom.len()).unwrap_or(0);
        let qs: Vec<u64> = self
            .records
            .first()
            .map(|r| r.entropy.iter().map(|&(q, _)| q).collect())
            .unwrap_or_default();
        let mut out = String::from("size,vertices,edges");
        for k in 1..=kmax_hom {
            out.push_str(&format!(",p{k}_over_n"));
        }
        for q in &qs {
            out.push_str(&format!(",t_at_{q}"));
        }
        out.push('\n');
        for rec in &self.records {
            out.push_str(&format!("{},{},{}", rec.size, rec.vertices, rec.edges));
            for m in &rec.moments_hom {
                out.push_str(&format!(",{:.14e}", big_rational_to_f64(m)));
            }
            for &(_, t) in &rec.entropy {
                out.push_str(&format!(",{t:.14e}"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn ball_distributions() {
        // C_n is vertex transitive: single atom
        let c = ball_distribution(&graph::cycle(9), 1).unwrap();
        assert_eq!(c.atom_count(), 1);
        assert_eq!(c.total(), BigRational::one());
        // P_n at radius 1: end ball (2/n) and interior ball ((n-2)/n)
        let p = ball_distribution(&graph::path(9), 1).unwrap();
        assert_eq!(p.atom_count(), 2);
        assert_eq!(p.total(), BigRational::one());
        let mut weights: Vec<BigRational> = p.atoms().map(|(_, w)| w.clone()).collect();
        weights.sort();
        assert_eq!(weights, vec![rat(2, 9), rat(7, 9)]);
    }

    #[test]
    fn ball_tv_distance_shrinks() {
        for n in [10usize, 40, 160] {
            let r = 2;
            let d = ball_distribution(&graph::path(n), r)
                .unwrap()
                .tv_distance(&ball_distribution(&graph::cycle(n), r).unwrap());
            let cap = rat(2 * (2 * r as i64 + 1), n as i64);
            assert!(d <= cap, "tv {d} above {cap} at n={n}");
            assert!(d > BigRational::zero());
        }
    }

    #[test]
    fn rooted_codes_distinguish_roots() {
        // end vertex vs middle vertex of P3 give different rooted balls
        let p3 = graph::path(3);
        let end = rooted_code(&graph::ball(&p3, 0, 1).unwrap()).unwrap();
        let mid = rooted_code(&graph::ball(&p3, 1, 1).unwrap()).unwrap();
        assert_ne!(end, mid);
        let other_end = rooted_code(&graph::ball(&p3, 2, 1).unwrap()).unwrap();
        assert_eq!(end, other_end);
    }

    #[test]
    fn hom_densities() {
        let k2 = graph::path(2);
        assert_eq!(hom_density(&k2, &graph::petersen()).unwrap(), rat(3, 1));
        assert_eq!(hom_density(&k2, &graph::path(10)).unwrap(), rat(18, 10));
        let p3 = graph::path(3);
        assert_eq!(hom_density(&p3, &graph::cycle(8)).unwrap(), rat(4, 1));
        let disconnected = k2.disjoint_union(&k2);
        assert!(matches!(hom_density(&disconnected, &p3), Err(Error::NotConnected)));
    }

    #[test]
    fn tree_entropy_values() {
        assert!((tree_entropy(0, 7.0).unwrap() - 7f64.ln()).abs() < 1e-15);
        assert!((tree_entropy(2, 3.0).unwrap() - 2f64.ln()).abs() < 1e-12);
        let t = tree_entropy(3, 30.0).unwrap();
        assert!((t - (30f64.ln() + 1.5 * (29.0 / 30.0f64).ln())).abs() < 1e-12);
        assert!(tree_entropy(3, 1.0).is_err());
    }

    #[test]
    fn girth_estimate_petersen() {
        let q = rat(30, 1);
        let ge = girth_estimate(&graph::petersen(), &q, None).unwrap();
        assert_eq!(ge.girth, Some(5));
        let x: f64 = SOKAL_C * 3.0 / 30.0;
        let expect_bound = 2.0 * x.powi(4) / (1.0 - x);
        assert!((ge.bound - expect_bound).abs() < 1e-12);
        assert_eq!(ge.within_bound(1e-9), Some(true));
        // below C*d the bound is vacuous
        assert!(girth_estimate(&graph::petersen(), &rat(20, 1), None).is_err());
    }

    #[test]
    fn girth_estimate_trees_are_exact() {
        let q = rat(50, 1);
        for t in [graph::path(8), graph::path(2)] {
            let ge = girth_estimate(&t, &q, None).unwrap();
            assert!(ge.forest);
            assert_eq!(ge.bound, 0.0);
            let exact = ge.exact.unwrap();
            assert!((exact - ge.estimate).abs() < 1e-12, "tree identity violated");
        }
    }

    #[test]
    fn girth_moment_reports() {
        let r = girth_moment_check(&graph::petersen()).unwrap();
        assert_eq!(r.girth, 5);
        assert!(r.holds);
        assert_eq!(r.power_sums, vec![BigInt::from(15); 3]);
        assert_eq!(r.coefficients[1], BigInt::from(105));
        assert_eq!(r.coefficients[2], BigInt::from(455));
        let r = girth_moment_check(&graph::cycle(7)).unwrap();
        assert!(r.holds);
        assert_eq!(r.power_sums, vec![BigInt::from(7); 5]);
        let r = girth_moment_check(&graph::complete(3)).unwrap();
        assert!(r.holds);
        assert_eq!(r.power_sums, vec![BigInt::from(3)]);
    }

    #[test]
    fn convergence_path_and_cycle() {
        let sizes = [10usize, 50, 200];
        let series = run_convergence(Family::Path, &sizes, 3, &[3]).unwrap();
        for rec in &series.records {
            let n = rec.size as i64;
            for pk in rec.moments_newton.as_ref().unwrap() {
                assert_eq!(*pk, rat(n - 1, n));
            }
        }
        let series = run_convergence(Family::Cycle, &sizes, 3, &[3]).unwrap();
        for rec in &series.records {
            for pk in rec.moments_newton.as_ref().unwrap() {
                assert_eq!(*pk, BigRational::one());
            }
            // t at q=3 approaches ln 2
            let (_, t) = rec.entropy[0];
            assert!((t - 2f64.ln()).abs() < 2.0 / rec.size as f64);
        }
    }

    #[test]
    fn convergence_tube_entropy_cauchy() {
        let sizes: Vec<usize> = (48..=52).collect();
        let series = run_convergence(Family::Tube, &sizes, 2, &[30]).unwrap();
        let ts: Vec<f64> = series.records.iter().map(|r| r.entropy[0].1).collect();
        for w in ts.windows(2) {
            assert!((w[1] - w[0]).abs() < 1e-3, "tube entropy not Cauchy: {ts:?}");
        }
    }

    #[test]
    fn convergence_notes_budget_failures() {
        // a 3-dimensional torus of side 8 is far beyond the dc budget
        let series = run_convergence(Family::Torus { d: 3 }, &[8], 2, &[50]).unwrap();
        let rec = &series.records[0];
        assert!(rec.note.is_some());
        assert!(rec.moments_newton.is_none());
        assert_eq!(rec.moments_hom.len(), 2);
    }
}
