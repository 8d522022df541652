//! Dense polynomials with arbitrary-precision integer coefficients.

use crate::error::{Error, Result};
use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// `coeffs[k]` is the coefficient of `z^k`; the top coefficient is nonzero
/// except for the zero polynomial, which has an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![BigInt::one()] }
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![BigInt::from(c)])
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The monomial `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Number of trailing zero coefficients = multiplicity of the root 0.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divide by `z^k` (requires the first k coefficients to vanish).
    pub fn shift_down(&self, k: usize) -> IntPolynomial {
        assert!(self.trailing_zeros() >= k || self.is_zero());
        IntPolynomial { coeffs: self.coeffs.iter().skip(k).cloned().collect() }
    }

    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut e: usize) -> IntPolynomial {
        let mut base = self.clone();
        let mut acc = IntPolynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Exact Horner evaluation at a complex point with rational real and
    /// imaginary parts; immune to the catastrophic cancellation that f64
    /// evaluation suffers once coefficients exceed 2^53.
    pub fn eval_complex_exact(&self, re: &BigRational, im: &BigRational) -> (BigRational, BigRational) {
        let mut acc_re = BigRational::zero();
        let mut acc_im = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            let new_re = &acc_re * re - &acc_im * im + BigRational::from(c.clone());
            let new_im = &acc_re * im + &acc_im * re;
            acc_re = new_re;
            acc_im = new_im;
        }
        (acc_re, acc_im)
    }

    /// `eval_complex_exact` at an f64 point, rounded back to f64 at the end.
    pub fn eval_complex_f64_exact(&self, z: Complex64) -> Complex64 {
        let re = BigRational::from_float(z.re).expect("finite real part");
        let im = BigRational::from_float(z.im).expect("finite imaginary part");
        let (vre, vim) = self.eval_complex_exact(&re, &im);
        Complex64::new(big_rational_to_f64(&vre), big_rational_to_f64(&vim))
    }

    /// Exact evaluation at an f64 point in pure integer arithmetic: returns
    /// `(re, im, t)` with `p(z) = (re + i*im) / 2^t`. f64 components are
    /// dyadic rationals, so no rounding occurs anywhere.
    pub fn eval_complex_dyadic(&self, z: Complex64) -> Option<(BigInt, BigInt, i64)> {
        if !z.is_finite() {
            return None;
        }
        let (a0, sa) = dyadic_parts(z.re)?;
        let (b0, sb) = dyadic_parts(z.im)?;
        let s = sa.max(sb);
        let a = a0 << (s - sa);
        let b = b0 << (s - sb);
        if self.coeffs.is_empty() {
            return Some((BigInt::zero(), BigInt::zero(), 0));
        }
        let n = self.degree();
        let mut acc_re = self.coeffs[n].clone();
        let mut acc_im = BigInt::zero();
        for j in (0..n).rev() {
            let new_re = &acc_re * &a - &acc_im * &b + (&self.coeffs[j] << (s * (n - j) as i64) as usize);
            let new_im = &acc_re * &b + &acc_im * &a;
            acc_re = new_re;
            acc_im = new_im;
        }
        Some((acc_re, acc_im, s * n as i64))
    }

    /// The exact Newton step p(z)/p'(z) at a dyadic point, rounded to f64
    /// only at the very end. `None` when the derivative vanishes or the
    /// point is not finite; a zero step means z is an exact root.
    pub fn newton_step_exact(&self, derivative: &IntPolynomial, z: Complex64) -> Option<Complex64> {
        let (pr, pi, tp) = self.eval_complex_dyadic(z)?;
        if pr.is_zero() && pi.is_zero() {
            return Some(Complex64::new(0.0, 0.0));
        }
        let (dr, di, td) = derivative.eval_complex_dyadic(z)?;
        if dr.is_zero() && di.is_zero() {
            return None;
        }
        let num_re = &pr * &dr + &pi * &di;
        let num_im = &pi * &dr - &pr * &di;
        let den = &dr * &dr + &di * &di;
        let scale = td - tp;
        Some(Complex64::new(
            big_ratio_scaled(&num_re, &den, scale),
            big_ratio_scaled(&num_im, &den, scale),
        ))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + bigint_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::new(
            self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect(),
        )
    }

    /// Coefficients as decimal strings, lowest degree first.
    pub fn to_coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    pub fn from_coeff_strings(strings: &[String]) -> Result<IntPolynomial> {
        let coeffs = strings
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|e| Error::Malformed(format!("coefficient {s}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "z")?,
                1 => write!(f, "{a}*z")?,
                _ if a.is_one() => write!(f, "z^{k}")?,
                _ => write!(f, "{a}*z^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        IntPolynomial::new(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::new(coeffs)
    }
}

impl IntPolynomial {
    /// GCD of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut acc = BigInt::zero();
        for c in &self.coeffs {
            acc = num_integer::Integer::gcd(&acc, c);
        }
        acc
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        IntPolynomial::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Exact division in Z[x]; `None` when the divisor does not divide.
    pub fn div_exact(&self, div: &IntPolynomial) -> Option<IntPolynomial> {
        if div.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPolynomial::zero());
        }
        if self.degree() < div.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dd = div.degree();
        let lead = div.leading();
        let qdeg = self.degree() - dd;
        let mut q = vec![BigInt::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            let (c, r) = num_integer::Integer::div_rem(&top, &lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in div.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            q[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPolynomial::new(q))
    }

    /// Pseudo-remainder `lc(b)^(da-db+1) * a mod b`.
    fn pseudo_rem(&self, b: &IntPolynomial) -> IntPolynomial {
        let (da, db) = (self.degree(), b.degree());
        let lead = b.leading();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.degree() >= db {
            let shift = rem.degree() - db;
            let c = rem.leading();
            let scaled = rem.scale(&lead);
            let sub = (&IntPolynomial::monomial(shift) * b).scale(&c);
            rem = &scaled - &sub;
            if rem.degree() >= da + 2 {
                break; // cannot happen; guard against cycles
            }
        }
        rem
    }

    /// Polynomial GCD over Z[x] by the primitive remainder sequence;
    /// result is primitive with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
            if !b.is_zero() && b.degree() >= a.degree() {
                // degenerate; should not occur for valid inputs
                break;
            }
        }
        a.primitive_part()
    }

    /// Square-free decomposition by Yun's algorithm:
    /// returns `(f_i, i)` with `self = c * prod f_i^i`, each `f_i`
    /// square-free and primitive.
    pub fn square_free_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let f = self.primitive_part();
        if f.is_zero() || f.degree() == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        if a.degree() == 0 {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut b = f.div_exact(&a).expect("gcd divides");
        let mut c = df.div_exact(&a).expect("gcd divides derivative");
        let mut d = &c - &b.derivative();
        let mut i = 1usize;
        while b.degree() >= 1 {
            let ai = b.gcd(&d);
            if ai.degree() >= 1 {
                out.push((ai.clone(), i));
            }
            b = b.div_exact(&ai).expect("yun step divides");
            c = d.div_exact(&ai).expect("yun step divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

/// `(z + c)^m` expanded.
pub fn binomial_power(c: i64, m: usize) -> IntPolynomial {
    IntPolynomial::from_i64(&[c, 1]).pow(m)
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Lossy conversion that stays finite far beyond the f64 integer range by
/// splitting off a power of two.
pub fn bigint_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(match x.sign() {
        Sign::Minus => f64::NEG_INFINITY,
        _ => f64::INFINITY,
    })
}

/// Decompose a finite f64 into `(m, s)` with `x = m / 2^s` and `s >= 0`.
fn dyadic_parts(x: f64) -> Option<(BigInt, i64)> {
    let r = BigRational::from_float(x)?;
    let denom_bits = r.denom().bits() as i64 - 1; // denominators are powers of two
    Some((r.numer().clone(), denom_bits))
}

/// `num / den * 2^e` without overflowing intermediate conversions: both
/// operands are truncated to their top 64 bits and the exponents recombined.
pub fn big_ratio_scaled(num: &BigInt, den: &BigInt, e: i64) -> f64 {
    if num.is_zero() {
        return 0.0;
    }
    let sn = (num.bits() as i64 - 64).max(0);
    let sd = (den.bits() as i64 - 64).max(0);
    let top_n = (num >> sn as usize).to_f64().unwrap();
    let top_d = (den >> sd as usize).to_f64().unwrap();
    (top_n / top_d) * 2f64.powi((sn - sd + e).clamp(-1400, 1400) as i32)
}

/// Lossy conversion of a big rational, saturating to signed infinity.
pub fn big_rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(if x.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY })
}

/// Natural log of a positive big integer, accurate to f64 precision even
/// when the value itself overflows f64.
pub fn ln_bigint(x: &BigInt) -> f64 {
    assert!(x.is_positive(), "ln of a non-positive integer");
    let bits = x.bits();
    if bits <= 1000 {
        return bigint_to_f64(x).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().unwrap();
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive big rational.
pub fn ln_big_rational(x: &BigRational) -> f64 {
    assert!(x.is_positive(), "ln of a non-positive rational");
    ln_bigint(x.numer()) - ln_bigint(x.denom())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = IntPolynomial::from_i64(&[0, -3, 1]); // z^2 - 3z
        let q = IntPolynomial::from_i64(&[2, 3]); // 3z + 2
        assert_eq!(&p + &q, IntPolynomial::from_i64(&[2, 0, 1]));
        assert_eq!(&p * &q, IntPolynomial::from_i64(&[0, -6, -7, 3]));
        assert_eq!((&p - &p), IntPolynomial::zero());
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn binomial_expansion() {
        // (z-1)^4 = z^4 - 4z^3 + 6z^2 - 4z + 1
        assert_eq!(binomial_power(-1, 4), IntPolynomial::from_i64(&[1, -4, 6, -4, 1]));
        assert_eq!(binomial(15, 2), BigInt::from(105));
        assert_eq!(binomial(15, 3), BigInt::from(455));
        assert_eq!(binomial(4, 7), BigInt::zero());
    }

    #[test]
    fn evaluation() {
        let p = IntPolynomial::from_i64(&[0, 2, -3, 1]); // z^3-3z^2+2z = ch(K3)
        assert_eq!(p.eval_bigint(&BigInt::from(3)), BigInt::from(6));
        let z = Complex64::new(2.0, 0.0);
        assert!((p.eval_complex(z) - Complex64::new(0.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn ln_of_huge_values() {
        let x = BigInt::from(2).pow(5000u32);
        assert!((ln_bigint(&x) - 5000.0 * std::f64::consts::LN_2).abs() < 1e-9);
        let r = BigRational::new(BigInt::from(3).pow(2000u32), BigInt::from(2).pow(1000u32));
        let expect = 2000.0 * 3f64.ln() - 1000.0 * std::f64::consts::LN_2;
        assert!((ln_big_rational(&r) - expect).abs() < 1e-8);
    }

    #[test]
    fn coeff_strings_round_trip() {
        let p = IntPolynomial::from_i64(&[0, -3, 0, 7]);
        let s = p.to_coeff_strings();
        assert_eq!(s, vec!["0", "-3", "0", "7"]);
        assert_eq!(IntPolynomial::from_coeff_strings(&s).unwrap(), p);
    }
}
