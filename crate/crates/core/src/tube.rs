//! Tubes T_n = C4 x P_n: the explicit 3x3 transfer matrix, the two-eigenvalue
//! closed form, and the limiting root-curve sampler.

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::spectra;
use num_complex::Complex;
use rayon::prelude::*;

/// A matrix with polynomial entries in z; only the 1x3 and 3x3 shapes occur.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<IntPolynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<IntPolynomial>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::BadShape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(PolyMatrix { rows, cols, entries })
    }

    pub fn entry(&self, i: usize, j: usize) -> &IntPolynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::BadShape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = IntPolynomial::zero();
                for l in 0..self.cols {
                    acc = &acc + &(self.entry(i, l) * other.entry(l, j));
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(self.rows, other.cols, entries)
    }

    pub fn row_sum(&self, i: usize) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for j in 0..self.cols {
            acc = &acc + self.entry(i, j);
        }
        acc
    }
}

fn poly(ascending: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(ascending)
}

/// The boundary vector v1 = (z^4-6z^3+11z^2-6z, 2z^3-6z^2+4z, z^2-z).
pub fn transfer_vector() -> PolyMatrix {
    PolyMatrix::new(
        1,
        3,
        vec![
            poly(&[0, -6, 11, -6, 1]),
            poly(&[0, 4, -6, 2]),
            poly(&[0, -1, 1]),
        ],
    )
    .unwrap()
}

/// The transfer matrix M with ch_{T_n} = v1 M^{n-1} 1^T.
pub fn transfer_matrix() -> PolyMatrix {
    PolyMatrix::new(
        3,
        3,
        vec![
            poly(&[73, -84, 41, -10, 1]),
            poly(&[-40, 38, -14, 2]),
            poly(&[8, -5, 1]),
            poly(&[60, -77, 40, -10, 1]),
            poly(&[-29, 32, -13, 2]),
            poly(&[5, -4, 1]),
            poly(&[48, -70, 39, -10, 1]),
            poly(&[-20, 26, -12, 2]),
            poly(&[3, -3, 1]),
        ],
    )
    .unwrap()
}

/// Exact chromatic polynomial of T_n by iterated vector-matrix products,
/// keeping intermediate degrees linear in n.
pub fn tube_chromatic(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::OutOfRange("tube length must be at least 1".into()));
    }
    let m = transfer_matrix();
    let mut v = transfer_vector();
    for _ in 1..n {
        v = v.mul(&m)?;
    }
    Ok(v.row_sum(0))
}

/// The radicand r^2 = z^8-16z^7+118z^6-526z^5+1569z^4-3250z^3+4617z^2-4136z+1776.
pub fn radicand() -> IntPolynomial {
    poly(&[1776, -4136, 4617, -3250, 1569, -526, 118, -16, 1])
}

/// Eigendata of the invariant 2x2 block at a point z, for one branch of r.
#[derive(Debug, Clone, Copy)]
pub struct EigenData {
    pub r: Complex<f64>,
    pub lambda1: Complex<f64>,
    pub lambda2: Complex<f64>,
    pub a1: Complex<f64>,
    pub a2: Complex<f64>,
}

fn eval(p: &IntPolynomial, z: Complex<f64>) -> Complex<f64> {
    p.eval_complex(z)
}

const SINGULAR_EPS: f64 = 1e-12;

/// Eigenvalues lambda_i = (z^4-8z^3+29z^2-55z+46 +- r)/2 with r the principal
/// square root of the radicand. The pair {(a1,lambda1),(a2,lambda2)} only
/// swaps when the branch of r flips.
pub fn eigen_data(z: Complex<f64>) -> Result<EigenData> {
    let r = radicand().eval_complex(z).sqrt();
    let quartic = eval(&poly(&[46, -55, 29, -8, 1]), z);
    let lambda1 = (quartic + r) / 2.0;
    let lambda2 = (quartic - r) / 2.0;
    let a1 = amplitude(z, r)?;
    let a2 = amplitude(z, -r)?;
    Ok(EigenData { r, lambda1, lambda2, a1, a2 })
}

/// a_i = z(z-1)(z^4-8z^3+27z^2-47z+36+r_i)(z^5-9z^4+35z^3-70z^2+73z-36+z r_i - r_i)
///       / (4 r_i (z-2)(z^2-4z+6)).
fn amplitude(z: Complex<f64>, ri: Complex<f64>) -> Result<Complex<f64>> {
    let scale = 1.0 + z.norm();
    if ri.norm() <= SINGULAR_EPS * scale.powi(4) {
        return Err(Error::Singular(format!("r vanishes at z = {z}")));
    }
    let lin = z - 2.0;
    if lin.norm() <= SINGULAR_EPS * scale {
        return Err(Error::Singular(format!("z - 2 vanishes at z = {z}")));
    }
    let quad = eval(&poly(&[6, -4, 1]), z);
    if quad.norm() <= SINGULAR_EPS * scale * scale {
        return Err(Error::Singular(format!("z^2 - 4z + 6 vanishes at z = {z}")));
    }
    let f1 = eval(&poly(&[36, -47, 27, -8, 1]), z) + ri;
    let f2 = eval(&poly(&[-36, 73, -70, 35, -9, 1]), z) + z * ri - ri;
    Ok(z * (z - 1.0) * f1 * f2 / (4.0 * ri * lin * quad))
}

/// ch_{T_n}(z) = a1 lambda1^{n-1} + a2 lambda2^{n-1}; invariant under the
/// branch choice for r because flipping r swaps the two summands.
pub fn tube_closed_form(n: usize, z: Complex<f64>) -> Result<Complex<f64>> {
    if n == 0 {
        return Err(Error::OutOfRange("tube length must be at least 1".into()));
    }
    let e = eigen_data(z)?;
    Ok(e.a1 * e.lambda1.powu(n as u32 - 1) + e.a2 * e.lambda2.powu(n as u32 - 1))
}

/// The finite exceptional set S: roots and singularities of the a_i and
/// lambda_i, i.e. the roots of
/// z(z-1)(z-2)(2z-5)(z^2-3z+1)(z^2-4z+6)
///   (z^6-12z^5+61z^4-169z^3+269z^2-231z+85)(the degree-8 radicand).
fn special_set_factors() -> Vec<IntPolynomial> {
    vec![
        poly(&[0, 1]),
        poly(&[-1, 1]),
        poly(&[-2, 1]),
        poly(&[-5, 2]),
        poly(&[1, -3, 1]),
        poly(&[6, -4, 1]),
        poly(&[85, -231, 269, -169, 61, -12, 1]),
        radicand(),
    ]
}

pub fn special_set_polynomial() -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for f in &special_set_factors() {
        acc = &acc * f;
    }
    acc
}

/// Roots are found factor by factor: the expanded degree-22 product is badly
/// conditioned in the monomial basis, while each printed factor is tame.
pub fn special_points() -> Result<Vec<Complex<f64>>> {
    let mut out = Vec::new();
    for f in &special_set_factors() {
        let m = spectra::find_roots(f, spectra::DEFAULT_ROOT_TOL)?;
        out.extend_from_slice(m.roots());
    }
    Ok(out)
}

/// A rectangle in the complex plane, sampled at `grid` spacing.
#[derive(Debug, Clone, Copy)]
pub struct Region {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
}

#[derive(Debug, Clone)]
pub struct CurveSample {
    pub points: Vec<Complex<f64>>,
    pub special: Vec<Complex<f64>>,
}

impl CurveSample {
    /// CSV rows `re,im,tag` with tag `curve` or `special`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im,tag\n");
        for z in &self.points {
            out.push_str(&format!("{:.14e},{:.14e},curve\n", z.re, z.im));
        }
        for z in &self.special {
            out.push_str(&format!("{:.14e},{:.14e},special\n", z.re, z.im));
        }
        out
    }
}

/// Grid points of the equimodular curve |lambda1| = |lambda2| within the
/// region, with the exceptional set S reported separately. At points where
/// r = 0 the eigenvalues coincide, so such points satisfy the condition
/// trivially and are kept.
pub fn limit_curve_sample(region: Region, grid: f64, tol: f64) -> Result<CurveSample> {
    if !(grid > 0.0) || !(tol > 0.0) {
        return Err(Error::OutOfRange("grid spacing and tolerance must be positive".into()));
    }
    let nre = ((region.re_max - region.re_min) / grid).round() as i64;
    let nim = ((region.im_max - region.im_min) / grid).round() as i64;
    if nre < 0 || nim < 0 {
        return Err(Error::OutOfRange("empty sampling region".into()));
    }
    let quartic = poly(&[46, -55, 29, -8, 1]);
    let radic = radicand();
    let points: Vec<Complex<f64>> = (0..=nre)
        .into_par_iter()
        .flat_map_iter(|i| {
            let re = region.re_min + i as f64 * grid;
            let quartic = &quartic;
            let radic = &radic;
            (0..=nim).filter_map(move |j| {
                let z = Complex::new(re, region.im_min + j as f64 * grid);
                let r = radic.eval_complex(z).sqrt();
                let q = quartic.eval_complex(z);
                let l1 = ((q + r) / 2.0).norm();
                let l2 = ((q - r) / 2.0).norm();
                let scale = l1.max(l2);
                if (l1 - l2).abs() <= tol * scale.max(f64::MIN_POSITIVE) {
                    Some(z)
                } else {
                    None
                }
            })
        })
        .collect();
    Ok(CurveSample { points, special: special_points()? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chromatic_dc;
    use crate::graph;
    use num_bigint::BigInt;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn boundary_vector_sums_to_cycle_polynomial() {
        // v1 * 1^T must be ch of C4 = z^4 - 4z^3 + 6z^2 - 3z
        let v = transfer_vector();
        assert_eq!(v.row_sum(0), chromatic_dc(&graph::cycle(4)).unwrap());
        assert_eq!(tube_chromatic(1).unwrap(), poly(&[0, -3, 6, -4, 1]));
    }

    #[test]
    fn matches_deletion_contraction_up_to_four() {
        for n in 1..=4 {
            let oracle = chromatic_dc(&graph::tube(n)).unwrap();
            assert_eq!(tube_chromatic(n).unwrap(), oracle, "tube n={n}");
        }
    }

    #[test]
    fn polynomial_shape() {
        for n in 1..=10 {
            let p = tube_chromatic(n).unwrap();
            assert_eq!(p.degree(), 4 * n);
            assert_eq!(p.leading(), BigInt::from(1));
            assert_eq!(p.coeff(0), BigInt::from(0));
        }
    }

    #[test]
    fn closed_form_small_values() {
        // n=1, z=3: ch_{C4}(3) = 18
        let v = tube_closed_form(1, Complex::new(3.0, 0.0)).unwrap();
        assert!((v - Complex::new(18.0, 0.0)).norm() < 1e-9);
        let z = Complex::new(2.5, 0.5);
        let direct = tube_chromatic(5).unwrap().eval_complex_f64_exact(z);
        let closed = tube_closed_form(5, z).unwrap();
        assert!((closed - direct).norm() <= 1e-8 * direct.norm());
    }

    #[test]
    fn closed_form_matches_polynomial_at_random_points() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x7b5e);
        for _ in 0..60 {
            let n = rng.gen_range(1..=30);
            let z = Complex::new(rng.gen_range(-6.0..6.0), rng.gen_range(-6.0..6.0));
            let direct = tube_chromatic(n).unwrap().eval_complex_f64_exact(z);
            let closed = match tube_closed_form(n, z) {
                Ok(v) => v,
                Err(Error::Singular(_)) => continue,
                Err(e) => panic!("{e}"),
            };
            let scale = direct.norm().max(1.0);
            assert!(
                (closed - direct).norm() <= 1e-8 * scale,
                "n={n} z={z} closed={closed} direct={direct}"
            );
        }
    }

    #[test]
    fn branch_invariance() {
        // flipping the branch of r swaps (a1,l1) with (a2,l2)
        let z = Complex::new(1.3, 2.1);
        let e = eigen_data(z).unwrap();
        let sum = e.a1 * e.lambda1.powu(6) + e.a2 * e.lambda2.powu(6);
        let swapped = e.a2 * e.lambda2.powu(6) + e.a1 * e.lambda1.powu(6);
        assert_eq!(sum, swapped);
        // trace and determinant of the invariant block
        let quartic = poly(&[46, -55, 29, -8, 1]).eval_complex(z);
        assert!((e.lambda1 + e.lambda2 - quartic).norm() < 1e-9 * quartic.norm());
        let det = (quartic * quartic - radicand().eval_complex(z)) / 4.0;
        assert!((e.lambda1 * e.lambda2 - det).norm() < 1e-8 * det.norm().max(1.0));
    }

    #[test]
    fn singular_points_reported() {
        assert!(matches!(
            tube_closed_form(3, Complex::new(2.0, 0.0)),
            Err(Error::Singular(_))
        ));
        // z^2-4z+6 root: 2 + i*sqrt(2)
        assert!(matches!(
            tube_closed_form(3, Complex::new(2.0, 2f64.sqrt())),
            Err(Error::Singular(_))
        ));
    }

    #[test]
    fn special_set() {
        let p = special_set_polynomial();
        assert_eq!(p.degree(), 22);
        let pts = special_points().unwrap();
        assert_eq!(pts.len(), 22);
        // contains 0, 1, 2, 5/2 and the golden-ratio-like pair
        for target in [0.0, 1.0, 2.0, 2.5] {
            assert!(pts.iter().any(|p| (p - Complex::new(target, 0.0)).norm() < 1e-8));
        }
    }

    #[test]
    fn sampler_behaviour() {
        // far outside the curve nothing is emitted
        let far = limit_curve_sample(
            Region { re_min: 9.5, re_max: 10.5, im_min: -0.5, im_max: 0.5 },
            0.25,
            1e-3,
        )
        .unwrap();
        assert!(far.points.is_empty());
        // a window around the curve finds points, symmetric under conjugation
        let sample = limit_curve_sample(
            Region { re_min: -1.0, re_max: 4.0, im_min: -3.0, im_max: 3.0 },
            0.05,
            0.02,
        )
        .unwrap();
        assert!(!sample.points.is_empty());
        for z in &sample.points {
            let conj = z.conj();
            assert!(
                sample.points.iter().any(|w| (w - conj).norm() < 1e-9),
                "conjugate of {z} missing"
            );
            assert!(z.norm() < 32.0);
        }
    }

    #[test]
    fn roots_cluster_near_curve() {
        let p = tube_chromatic(20).unwrap();
        let measure = spectra::find_roots_capped(&p, 1e-10, 96).unwrap();
        let roots = measure.roots();
        let sample = limit_curve_sample(
            Region { re_min: -1.0, re_max: 4.5, im_min: -3.5, im_max: 3.5 },
            0.01,
            0.03,
        )
        .unwrap();
        let near = roots
            .iter()
            .filter(|root| {
                sample
                    .points
                    .iter()
                    .chain(sample.special.iter())
                    .any(|p| (*root - p).norm() < 0.2)
            })
            .count();
        assert!(
            near * 100 >= roots.len() * 95,
            "{near}/{} roots near the sampled curve",
            roots.len()
        );
    }
}
