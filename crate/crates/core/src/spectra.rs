//! Numeric chromatic roots, the chromatic measure, holomorphic moments
//! (numeric and exact via Newton's identities) and the entropy per vertex.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::poly::{bigint_to_f64, ln_bigint, IntPolynomial};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

/// The explicit value of Sokal's constant; the theory only needs C < 8.
pub const SOKAL_C: f64 = 7.963907;

pub const DEFAULT_ROOT_TOL: f64 = 1e-12;
pub const DEFAULT_DEGREE_CAP: usize = 64;
const MAX_SWEEPS: usize = 1000;

/// Multiset of complex roots carrying the uniform measure `mu_G`: each root
/// (with multiplicity) gets mass `1/total`.
#[derive(Debug, Clone)]
pub struct ChromaticMeasure {
    roots: Vec<Complex64>,
}

impl ChromaticMeasure {
    pub fn roots(&self) -> &[Complex64] {
        &self.roots
    }

    pub fn total(&self) -> usize {
        self.roots.len()
    }

    /// Roots grouped by exact equality, as (root, multiplicity).
    pub fn grouped(&self) -> Vec<(Complex64, usize)> {
        let mut out: Vec<(Complex64, usize)> = Vec::new();
        for &r in &self.roots {
            match out.iter_mut().find(|(s, _)| *s == r) {
                Some((_, m)) => *m += 1,
                None => out.push((r, 1)),
            }
        }
        out
    }

    pub fn max_modulus(&self) -> f64 {
        self.roots.iter().map(|r| r.norm()).fold(0.0, f64::max)
    }
}

/// The disc `B(0, C*d)` that is guaranteed to contain every chromatic root.
#[derive(Debug, Clone, Copy)]
pub struct SokalDisc {
    pub c: f64,
    pub d: usize,
}

impl SokalDisc {
    pub fn new(d: usize) -> Self {
        SokalDisc { c: SOKAL_C, d }
    }

    pub fn with_constant(d: usize, c: f64) -> Self {
        SokalDisc { c, d }
    }

    pub fn radius(&self) -> f64 {
        self.c * self.d as f64
    }
}

pub fn sokal_radius(d: usize, c: Option<f64>) -> f64 {
    c.unwrap_or(SOKAL_C) * d as f64
}

/// Whether every root lies strictly inside the disc; reported, never assumed.
pub fn in_disc(m: &ChromaticMeasure, disc: &SokalDisc) -> bool {
    m.max_modulus() < disc.radius()
}

/// All complex roots of `p`, with the root 0 deflated exactly from the
/// trailing zero coefficients and the rest found by Aberth-Ehrlich
/// simultaneous iteration with a Newton polish.
pub fn find_roots(p: &IntPolynomial, tol: f64) -> Result<ChromaticMeasure> {
    find_roots_capped(p, tol, DEFAULT_DEGREE_CAP)
}

/// `find_roots` with an explicit degree budget for callers that knowingly
/// take on larger instances (the exact-evaluation stage keeps the results
/// accurate, it just costs more).
pub fn find_roots_capped(p: &IntPolynomial, tol: f64, cap: usize) -> Result<ChromaticMeasure> {
    if p.is_zero() || p.degree() == 0 {
        return Err(Error::BadShape("root finding needs degree >= 1".into()));
    }
    if p.degree() > cap {
        return Err(Error::Budget(format!(
            "degree {} beyond the root-finder cap {cap}",
            p.degree()
        )));
    }
    let zeros = p.trailing_zeros();
    let reduced = p.shift_down(zeros);
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    if reduced.degree() >= 1 {
        // exact square-free split so Aberth only ever sees simple roots
        for (factor, mult) in reduced.square_free_decomposition() {
            let extra_zeros = factor.trailing_zeros();
            let factor = factor.shift_down(extra_zeros);
            roots.extend(std::iter::repeat(Complex64::new(0.0, 0.0)).take(extra_zeros * mult));
            if factor.degree() == 0 {
                continue;
            }
            let mut found = aberth(&factor, tol)?;
            // Aberth ran on f64-rounded coefficients; for chromatic-sized
            // inputs the rounding alone moves roots by more than the target
            // accuracy, so polish against the exact integer coefficients.
            exact_newton_polish(&factor, &mut found);
            symmetrize_conjugates(&mut found, tol);
            for r in found.drain(..) {
                roots.extend(std::iter::repeat(r).take(mult));
            }
        }
    }
    // residual sanity: sum of roots must match -a_{n-1}/a_n
    let n = p.degree();
    let e1 = -p.coeff(n - 1); // monic in all our uses; general case scaled below
    let e1 = bigint_to_f64(&e1) / bigint_to_f64(&p.leading());
    if roots.iter().any(|r| !r.is_finite()) {
        return Err(Error::NonConvergence(MAX_SWEEPS));
    }
    let sum: Complex64 = roots.iter().sum();
    let scale = tol.max(1e-9) * (1f64.max(e1.abs())) * n as f64;
    if !((sum.re - e1).abs() <= scale.max(1e-6)) || !(sum.im.abs() <= scale.max(1e-6)) {
        return Err(Error::NonConvergence(MAX_SWEEPS));
    }
    Ok(ChromaticMeasure { roots })
}

/// Newton steps evaluated with exact integer coefficients (dyadic Horner),
/// recovering full f64 accuracy on simple roots even when the coefficients
/// themselves do not fit in f64.
fn exact_newton_polish(factor: &IntPolynomial, roots: &mut [Complex64]) {
    let derivative = factor.derivative();
    for z in roots.iter_mut() {
        for _ in 0..3 {
            match factor.newton_step_exact(&derivative, *z) {
                Some(step) if step.is_finite() => *z -= step,
                _ => break,
            }
        }
    }
}

/// One pass of simultaneous Aberth-Ehrlich sweeps from the given starting
/// points; `newton` supplies p/p' at a point (`None` when the derivative
/// vanishes there). Returns the iterates, whether the step criterion was
/// met, and the smallest relative sweep step seen.
fn aberth_core(
    mut z: Vec<Complex64>,
    radius: f64,
    tol: f64,
    sweeps: usize,
    newton: &dyn Fn(Complex64) -> Option<Complex64>,
) -> (Vec<Complex64>, bool, f64) {
    let deg = z.len();
    let mut best_step = f64::INFINITY;
    for _ in 0..sweeps {
        // identical iterates would repel each other with identical updates
        // forever; nudge duplicates apart deterministically
        for i in 0..deg {
            for j in 0..i {
                if z[i] == z[j] {
                    z[i] += Complex64::from_polar(radius * 1e-9 * (i + 1) as f64, i as f64);
                }
            }
        }
        let mut max_step = 0.0f64;
        for i in 0..deg {
            let nstep = match newton(z[i]) {
                Some(s) if s.is_finite() => s,
                Some(_) | None => Complex64::new(tol, tol),
            };
            if nstep.norm() == 0.0 {
                continue; // exactly on a root
            }
            let mut s = Complex64::zero();
            for j in 0..deg {
                if j != i {
                    s += (z[i] - z[j]).finv();
                }
            }
            let denom = Complex64::one() - nstep * s;
            let mut w = if denom.norm() > 1e-300 { nstep / denom } else { nstep };
            if !w.is_finite() {
                w = nstep;
            }
            z[i] -= w;
            if !z[i].is_finite() {
                // collided guesses; restart this one off the common circle
                z[i] = Complex64::from_polar(radius * 1.01, 1.0 + i as f64);
                w = Complex64::new(radius, 0.0);
            }
            max_step = max_step.max(w.norm() / z[i].norm().max(1.0));
        }
        best_step = best_step.min(max_step);
        if max_step < tol {
            return (z, true, best_step);
        }
    }
    (z, false, best_step)
}

/// Exact-coefficient sweeps are roughly two orders of magnitude slower than
/// f64 ones, so they get a smaller budget; they converge fast from the
/// f64-stage seeds.
const MAX_EXACT_SWEEPS: usize = 200;

/// Aberth-Ehrlich for a square-free integer polynomial, constant term and
/// leading coefficient nonzero. A fast f64 stage runs first; if it stalls
/// above the target (monomial-basis evaluation noise on chromatic-sized
/// coefficients), the iterates seed a second stage whose Newton steps are
/// evaluated exactly.
fn aberth(factor: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>> {
    let coeffs: Vec<f64> = factor.coeffs().iter().map(bigint_to_f64).collect();
    let deg = coeffs.len() - 1;
    let lead = coeffs[deg];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    // initial guesses on a circle at the Fujiwara root bound, rotated by a
    // fixed irrational offset so no guess starts on the real axis symmetric
    // to another
    let radius = 2.0
        * monic[..deg]
            .iter()
            .enumerate()
            .map(|(k, c)| c.abs().powf(1.0 / (deg - k) as f64))
            .fold(f64::MIN_POSITIVE, f64::max);
    let offset = 0.5641895835; // irrational angle offset in radians
    let guesses: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / deg as f64 + offset;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let f64_newton = move |x: Complex64| -> Option<Complex64> {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for &c in monic.iter().rev() {
            dp = dp * x + p;
            p = p * x + c;
        }
        if p.norm() == 0.0 {
            Some(Complex64::zero())
        } else if dp.norm() == 0.0 {
            None
        } else {
            Some(p / dp)
        }
    };
    let (z, _, _) = aberth_core(guesses, radius, tol, MAX_SWEEPS, &f64_newton);
    // the f64 stage can stall -- or worse, stop early where cancellation
    // noise makes Horner return an exact 0 at a non-root -- so its output is
    // only trusted after exact-evaluation Newton steps confirm it
    let derivative = factor.derivative();
    let exact_newton =
        move |x: Complex64| -> Option<Complex64> { factor.newton_step_exact(&derivative, x) };
    let verified = z.iter().all(|&zi| {
        exact_newton(zi)
            .map(|s| s.norm() <= 1e-10 * zi.norm().max(1.0))
            .unwrap_or(false)
    });
    if verified {
        return Ok(z);
    }
    let (z, converged, best) =
        aberth_core(z, radius, tol.max(1e-13), MAX_EXACT_SWEEPS, &exact_newton);
    if converged || best < 1e-9 {
        Ok(z)
    } else {
        Err(Error::NonConvergence(MAX_SWEEPS + MAX_EXACT_SWEEPS))
    }
}

/// For real-coefficient input, force the output to be exactly closed under
/// conjugation: tiny imaginary parts are flattened and conjugate partners
/// are averaged.
fn symmetrize_conjugates(roots: &mut [Complex64], tol: f64) {
    let scale = roots.iter().map(|r| r.norm()).fold(1.0, f64::max);
    let eps = (tol * scale * 100.0).max(1e-10);
    for r in roots.iter_mut() {
        if r.im.abs() < eps {
            r.im = 0.0;
        }
    }
    let n = roots.len();
    let mut paired = vec![false; n];
    for i in 0..n {
        if paired[i] || roots[i].im <= 0.0 {
            continue;
        }
        // closest unpaired conjugate candidate
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if i != j && !paired[j] && roots[j].im < 0.0 {
                let d = (roots[i].conj() - roots[j]).norm();
                if best.map_or(true, |(_, b)| d < b) {
                    best = Some((j, d));
                }
            }
        }
        if let Some((j, d)) = best {
            if d < eps * 10.0 {
                let avg = (roots[i] + roots[j].conj()) / 2.0;
                roots[i] = avg;
                roots[j] = avg.conj();
                paired[i] = true;
                paired[j] = true;
            }
        }
    }
}

/// The k-th holomorphic moment `(1/total) * sum of root^k`.
pub fn holomorphic_moment(m: &ChromaticMeasure, k: usize) -> Complex64 {
    if k == 0 {
        return Complex64::one();
    }
    let sum: Complex64 = m.roots.iter().map(|r| r.powu(k as u32)).sum();
    sum / m.total() as f64
}

/// Exact power sums `p_1..p_kmax` of the roots from the signed coefficients
/// `e_0=1, e_1, ...` via Newton's identities
/// `p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{k-i-1} p_i e_{k-i}`.
pub fn power_sums_newton(e: &[BigInt], kmax: usize) -> Result<Vec<BigInt>> {
    if e.first().map_or(true, |c| !c.is_one()) {
        return Err(Error::BadShape("coefficient sequence must start with e_0 = 1".into()));
    }
    let get = |j: usize| -> BigInt { e.get(j).cloned().unwrap_or_else(BigInt::zero) };
    let mut p: Vec<BigInt> = Vec::with_capacity(kmax);
    for k in 1..=kmax {
        let mut pk = get(k) * BigInt::from(k as i64);
        if k % 2 == 0 {
            pk = -pk;
        }
        for i in 1..k {
            let term = &p[i - 1] * get(k - i);
            if (k - i - 1) % 2 == 0 {
                pk += term;
            } else {
                pk -= term;
            }
        }
        p.push(pk);
    }
    Ok(p)
}

/// Entropy per vertex `t_G(z) = ln ch_G(z) / |V(G)|`, principal branch.
pub fn entropy_per_vertex(g: &SimpleGraph, ch: &IntPolynomial, z: Complex64) -> Result<Complex64> {
    let v = ch.eval_complex(z);
    if v.norm() == 0.0 {
        return Err(Error::Singular(format!("{z} is a chromatic root")));
    }
    Ok(v.ln() / g.n() as f64)
}

/// Entropy per vertex at a positive integer point, exact in the interior:
/// `ln ch_G(q) / n` computed from the big-integer value, so it stays
/// accurate for graphs far beyond f64 range.
pub fn entropy_at_integer(g: &SimpleGraph, ch: &IntPolynomial, q: u64) -> Result<f64> {
    let v = ch.eval_bigint(&BigInt::from(q));
    if !v.is_positive() {
        return Err(Error::Singular(format!("ch({q}) = {v} has no real log")));
    }
    Ok(ln_bigint(&v) / g.n() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::{chromatic_coefficients, chromatic_dc, cycle_chromatic, path_chromatic};
    use crate::graph;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn path4_roots() {
        let m = find_roots(&path_chromatic(4), DEFAULT_ROOT_TOL).unwrap();
        let mut mods: Vec<f64> = m.roots().iter().map(|r| r.re).collect();
        mods.sort_by(f64::total_cmp);
        assert!(m.roots().iter().all(|r| r.im == 0.0));
        assert!((mods[0] - 0.0).abs() < 1e-9);
        for v in &mods[1..] {
            assert!((v - 1.0).abs() < 1e-6);
        }
    }

    #[test]
    fn cycle4_roots() {
        // z(z-1)(z^2-3z+3): roots 0, 1, (3 +- i sqrt3)/2
        let m = find_roots(&cycle_chromatic(4), DEFAULT_ROOT_TOL).unwrap();
        let s3 = 3f64.sqrt();
        let expected = [
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(1.5, s3 / 2.0),
            Complex64::new(1.5, -s3 / 2.0),
        ];
        for e in expected {
            assert!(m.roots().iter().any(|&r| close(r, e, 1e-8)), "missing root {e}");
        }
    }

    #[test]
    fn constant_multiple_invariance() {
        let p = cycle_chromatic(5);
        let q = p.scale(&BigInt::from(2));
        let mp = find_roots(&p, DEFAULT_ROOT_TOL).unwrap();
        let mq = find_roots(&q, DEFAULT_ROOT_TOL).unwrap();
        for (a, b) in mp.roots().iter().zip(mq.roots()) {
            assert!(close(*a, *b, 1e-8));
        }
    }

    #[test]
    fn conjugate_closure() {
        let m = find_roots(&chromatic_dc(&graph::petersen()).unwrap(), DEFAULT_ROOT_TOL).unwrap();
        for &r in m.roots() {
            assert!(
                m.roots().iter().any(|&s| close(s, r.conj(), 1e-9)),
                "no conjugate partner for {r}"
            );
        }
    }

    #[test]
    fn moments() {
        let m = find_roots(&path_chromatic(7), DEFAULT_ROOT_TOL).unwrap();
        assert!(close(holomorphic_moment(&m, 0), Complex64::one(), 1e-12));
        for k in 1..=5 {
            assert!(close(holomorphic_moment(&m, k), Complex64::new(6.0 / 7.0, 0.0), 1e-8));
        }
        // cycle: moment = 1 exactly up to girth-2
        let m = find_roots(&cycle_chromatic(8), DEFAULT_ROOT_TOL).unwrap();
        for k in 1..=6 {
            assert!(close(holomorphic_moment(&m, k), Complex64::one(), 1e-7));
        }
    }

    #[test]
    fn newton_power_sums() {
        // K3 roots {0,1,2}: p_1 = 3, p_2 = 5
        let e = chromatic_coefficients(&chromatic_dc(&graph::complete(3)).unwrap()).unwrap();
        let p = power_sums_newton(&e, 3).unwrap();
        assert_eq!(p[0], BigInt::from(3));
        assert_eq!(p[1], BigInt::from(5));
        assert_eq!(p[2], BigInt::from(9));
        // p_1 = e_1 = |E|
        let e = chromatic_coefficients(&chromatic_dc(&graph::petersen()).unwrap()).unwrap();
        let p = power_sums_newton(&e, 3).unwrap();
        assert_eq!(p, vec![BigInt::from(15), BigInt::from(15), BigInt::from(15)]);
        assert!(power_sums_newton(&[BigInt::from(2)], 2).is_err());
    }

    #[test]
    fn moments_match_newton() {
        for g in [graph::petersen(), graph::cycle(9), graph::complete(4), graph::grid_box(2, 3)] {
            let ch = chromatic_dc(&g).unwrap();
            let e = chromatic_coefficients(&ch).unwrap();
            let exact = power_sums_newton(&e, 8).unwrap();
            let m = find_roots(&ch, DEFAULT_ROOT_TOL).unwrap();
            for k in 1..=8 {
                let numeric = holomorphic_moment(&m, k) * m.total() as f64;
                let target = bigint_to_f64(&exact[k - 1]);
                assert!(
                    (numeric.re - target).abs() <= 1e-6 * target.abs().max(1.0)
                        && numeric.im.abs() <= 1e-6 * target.abs().max(1.0),
                    "k={k}: numeric {numeric} vs exact {target}"
                );
            }
        }
    }

    #[test]
    fn moments_additive_over_disjoint_union() {
        let g = graph::cycle(5);
        let h = graph::complete(4);
        let gh = g.disjoint_union(&h);
        let pk = |g: &graph::SimpleGraph| {
            let e = chromatic_coefficients(&chromatic_dc(g).unwrap()).unwrap();
            power_sums_newton(&e, 6).unwrap()
        };
        let (a, b, c) = (pk(&g), pk(&h), pk(&gh));
        for k in 0..6 {
            assert_eq!(&a[k] + &b[k], c[k]);
        }
    }

    #[test]
    fn sokal_disc() {
        let p = graph::petersen();
        let m = find_roots(&chromatic_dc(&p).unwrap(), DEFAULT_ROOT_TOL).unwrap();
        assert!(in_disc(&m, &SokalDisc::new(3)));
        let c5 = find_roots(&cycle_chromatic(5), DEFAULT_ROOT_TOL).unwrap();
        assert!(c5.max_modulus() < 15.93);
    }

    #[test]
    fn entropy() {
        // path at q=3: (ln 3 + (n-1) ln 2)/n
        for n in [2usize, 5, 9] {
            let g = graph::path(n);
            let ch = path_chromatic(n);
            let t = entropy_per_vertex(&g, &ch, Complex64::new(3.0, 0.0)).unwrap();
            let expect = (3f64.ln() + (n as f64 - 1.0) * 2f64.ln()) / n as f64;
            assert!((t.re - expect).abs() < 1e-12 && t.im.abs() < 1e-12);
            assert!((entropy_at_integer(&g, &ch, 3).unwrap() - expect).abs() < 1e-12);
        }
        // edgeless
        let g = graph::SimpleGraph::empty(5);
        let t = entropy_per_vertex(&g, &IntPolynomial::monomial(5), Complex64::new(4.0, 0.0)).unwrap();
        assert!((t.re - 4f64.ln()).abs() < 1e-12);
        // single edge at q=2
        let g = graph::path(2);
        let t = entropy_per_vertex(&g, &path_chromatic(2), Complex64::new(2.0, 0.0)).unwrap();
        assert!((t.re - 2f64.ln() / 2.0).abs() < 1e-12);
        // roots are singular
        assert!(entropy_per_vertex(&g, &path_chromatic(2), Complex64::one()).is_err());
    }

    #[test]
    fn entropy_real_part_matches_root_integral() {
        // Re t(z) = mean over roots of ln|z - root|
        let g = graph::petersen();
        let ch = chromatic_dc(&g).unwrap();
        let z = Complex64::new(25.0, 3.0);
        let t = entropy_per_vertex(&g, &ch, z).unwrap();
        let m = find_roots(&ch, DEFAULT_ROOT_TOL).unwrap();
        let avg: f64 =
            m.roots().iter().map(|&r| (z - r).norm().ln()).sum::<f64>() / m.total() as f64;
        assert!((t.re - avg).abs() < 1e-8);
    }
}
