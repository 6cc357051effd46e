//! Laurent polynomials in `q` over `Q(i)`, plus the univariate polynomial
//! helpers (division, gcd) used to keep rational functions reduced.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::{mul_mod, pow_mod, GaussianRational};

/// A Laurent polynomial `Σ c_e q^e`, stored densely from its lowest exponent.
///
/// The coefficient vector never starts or ends with a zero, so the zero
/// polynomial is the empty vector (with `low == 0`).
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<GaussianRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(GaussianRational::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        LaurentPoly::monomial(GaussianRational::one(), 1)
    }

    pub fn constant(c: GaussianRational) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn from_int(c: i64) -> Self {
        LaurentPoly::constant(GaussianRational::from_int(c))
    }

    pub fn monomial(c: GaussianRational, exp: i32) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, GaussianRational)>>(terms: I) -> Self {
        let terms: Vec<(i32, GaussianRational)> = terms.into_iter().collect();
        if terms.is_empty() {
            return LaurentPoly::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![GaussianRational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += &c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }

    /// Builds from a dense vector starting at exponent `low`, trimming zeros.
    pub fn from_dense(mut low: i32, mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return LaurentPoly::zero();
        }
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            low += lead_zeros as i32;
        }
        LaurentPoly { low, coeffs }
    }

    /// Integer polynomial `Σ c_e q^e` from small integer coefficients.
    pub fn from_ints(low: i32, coeffs: &[i64]) -> Self {
        LaurentPoly::from_dense(
            low,
            coeffs
                .iter()
                .map(|&c| GaussianRational::from_int(c))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for `c·q^e` (including constants).
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn low_exp(&self) -> i32 {
        self.low
    }

    pub fn high_exp(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Number of stored coefficient slots (`high - low + 1`).
    pub fn span(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i32) -> GaussianRational {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            GaussianRational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn lowest_coeff(&self) -> Option<&GaussianRational> {
        self.coeffs.first()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &GaussianRational)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// The substitution `q ↦ q⁻¹`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            low: -self.high_exp(),
            coeffs,
        }
    }

    /// True when every coefficient lies in `Q`.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    /// Exact evaluation at a nonzero rational point.
    pub fn eval(&self, q0: &BigRational) -> GaussianRational {
        if self.is_zero() {
            return GaussianRational::zero();
        }
        let x = GaussianRational::new(q0.clone(), BigRational::zero());
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + c;
        }
        let base = if self.low >= 0 { x.clone() } else { x.inv() };
        let mut pw = GaussianRational::one();
        for _ in 0..self.low.unsigned_abs() {
            pw = &pw * &base;
        }
        &acc * &pw
    }

    /// Polynomial part after factoring out `q^low`.
    fn poly(&self) -> &[GaussianRational] {
        &self.coeffs
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_sub(self, rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_sub(self, rhs, true)
    }
}

fn add_sub(a: &LaurentPoly, b: &LaurentPoly, negate: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.high_exp().max(b.high_exp());
    let mut coeffs = vec![GaussianRational::zero(); (high - low + 1) as usize];
    for (k, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + k] = c.clone();
    }
    for (k, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + k];
        if negate {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if self.is_monomial() {
            return rhs.scale(&self.coeffs[0]).shift(self.low);
        }
        if rhs.is_monomial() {
            return self.scale(&rhs.coeffs[0]).shift(rhs.low);
        }
        LaurentPoly::from_dense(self.low + rhs.low, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let (neg, mag) = if c.is_real() && c.re < BigRational::zero() {
                (true, -c)
            } else {
                (false, c.clone())
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if var.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}·{var}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---------------------------------------------------------------------------
// Dense univariate polynomial helpers over Q(i), coefficient index = degree.

pub(crate) fn poly_mul(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![GaussianRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] += &(x * y);
        }
    }
    out
}

fn trim(v: &mut Vec<GaussianRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Quotient and remainder of `a` by nonzero `b`.
pub(crate) fn poly_divrem(
    a: &[GaussianRational],
    b: &[GaussianRational],
) -> (Vec<GaussianRational>, Vec<GaussianRational>) {
    let mut r: Vec<GaussianRational> = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().inv();
    let monic = lead_inv.is_one();
    let mut quot = vec![GaussianRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let top = r.last().unwrap();
        let factor = if monic { top.clone() } else { top * &lead_inv };
        for (k, c) in b.iter().enumerate() {
            if !c.is_zero() {
                let t = &factor * c;
                r[shift + k] -= &t;
            }
        }
        quot[shift] = factor;
        r.pop();
        trim(&mut r);
    }
    (quot, r)
}

fn make_monic(v: &mut [GaussianRational]) {
    if let Some(lead) = v.last() {
        if lead.is_one() {
            return;
        }
        let inv = lead.inv();
        for c in v.iter_mut() {
            *c = &*c * &inv;
        }
    }
}

const GCD_PRIME: u64 = 998_244_353;

fn sqrt_minus_one_mod_p() -> u64 {
    pow_mod(3, (GCD_PRIME - 1) / 4, GCD_PRIME)
}

/// Image of `a` modulo `(p, i - sqrt(-1))`, or `None` if some denominator
/// vanishes or the leading coefficient reduces to zero.
fn poly_mod_p(a: &[GaussianRational]) -> Option<Vec<u64>> {
    let s = sqrt_minus_one_mod_p();
    let img: Option<Vec<u64>> = a.iter().map(|c| c.mod_p(GCD_PRIME, s)).collect();
    let img = img?;
    if img.last().copied().unwrap_or(0) == 0 {
        return None;
    }
    Some(img)
}

fn gcd_degree_mod_p(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    let p = GCD_PRIME;
    let strip = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    strip(&mut a);
    strip(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = mul_mod(*a.last().unwrap(), inv, p);
            for (k, &c) in b.iter().enumerate() {
                let t = mul_mod(factor, c, p);
                a[shift + k] = (a[shift + k] + p - t) % p;
            }
            strip(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Monic gcd of two polynomials over `Q(i)`; zero inputs are allowed, but
/// not both.
pub(crate) fn poly_gcd(a: &[GaussianRational], b: &[GaussianRational]) -> Vec<GaussianRational> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        make_monic(&mut b);
        return b;
    }
    if b.is_empty() {
        make_monic(&mut a);
        return a;
    }
    if a.len() == 1 || b.len() == 1 {
        return vec![GaussianRational::one()];
    }
    // If the images keep their degrees, gcd degree mod p bounds the true one.
    if let (Some(ap), Some(bp)) = (poly_mod_p(&a), poly_mod_p(&b)) {
        if gcd_degree_mod_p(ap, bp) == 0 {
            return vec![GaussianRational::one()];
        }
    }
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    make_monic(&mut b);
    while !b.is_empty() {
        let (_, mut r) = poly_divrem(&a, &b);
        make_monic(&mut r);
        a = b;
        b = r;
    }
    a
}

/// Exact quotient; panics if `b` does not divide `a`.
pub(crate) fn poly_exact_div(
    a: &[GaussianRational],
    b: &[GaussianRational],
) -> Vec<GaussianRational> {
    if b.len() == 1 && b[0].is_one() {
        return a.to_vec();
    }
    let (q, r) = poly_divrem(a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

impl LaurentPoly {
    /// Polynomial gcd of the `q`-free parts (monic, constant term nonzero
    /// whenever the inputs have one).
    pub(crate) fn gcd_poly(&self, other: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_dense(0, poly_gcd(self.poly(), other.poly()))
    }

    /// Exact division by a polynomial with nonzero constant term.
    pub(crate) fn exact_div_poly(&self, d: &LaurentPoly) -> LaurentPoly {
        if d.is_one() {
            return self.clone();
        }
        debug_assert_eq!(d.low, 0);
        LaurentPoly::from_dense(self.low, poly_exact_div(self.poly(), d.poly()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i32, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    #[test]
    fn dense_trimming() {
        let a = LaurentPoly::from_ints(-2, &[0, 0, 1, 2, 0]);
        assert_eq!(a.low_exp(), 0);
        assert_eq!(a.high_exp(), 1);
        assert!(LaurentPoly::from_ints(3, &[0, 0]).is_zero());
    }

    #[test]
    fn bar_reverses_exponents() {
        let a = p(-1, &[3, 0, 5]);
        let b = a.bar();
        assert_eq!(b, p(-1, &[5, 0, 3]));
        assert_eq!(b.bar(), a);
    }

    #[test]
    fn gcd_of_cyclotomic_multiples() {
        // (1+q^2)(1+q) and (1+q^2)(1-q)
        let a = &p(0, &[1, 0, 1]) * &p(0, &[1, 1]);
        let b = &p(0, &[1, 0, 1]) * &p(0, &[1, -1]);
        assert_eq!(a.gcd_poly(&b), p(0, &[1, 0, 1]));
        assert!(p(0, &[1, 1]).gcd_poly(&p(0, &[1, -1])).is_one());
    }

    #[test]
    fn gcd_over_gaussian_field() {
        // q^2+1 = (q+i)(q-i); gcd with q-i is q-i.
        let i = GaussianRational::i();
        let q_minus_i = LaurentPoly::from_dense(0, vec![-&i, GaussianRational::one()]);
        let g = p(0, &[1, 0, 1]).gcd_poly(&q_minus_i);
        assert_eq!(g, q_minus_i);
    }

    #[test]
    fn division_roundtrip() {
        let a = p(0, &[2, 3, 0, 1]);
        let b = p(0, &[1, 1]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div_poly(&b), a);
    }

    #[test]
    fn evaluation() {
        let a = p(-1, &[1, 0, 1]);
        let v = a.eval(&BigRational::from_integer(2.into()));
        assert_eq!(v, GaussianRational::from_ratio(5, 2));
    }
}
