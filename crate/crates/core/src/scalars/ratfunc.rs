//! The field `Q(i)(q)` of rational functions, kept in a canonical reduced
//! form so that equality of values is structural equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// A reduced quotient `num / den`.
///
/// Canonical form: `den` is a polynomial with lowest exponent 0, nonzero
/// constant term and leading coefficient 1; all powers of `q` live in `num`;
/// `gcd(num, den) = 1`. Zero is stored as `0 / 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(LaurentPoly::one())
    }

    pub fn q() -> Self {
        RatFunc::from_poly(LaurentPoly::q())
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        RatFunc::from_poly(LaurentPoly::monomial(GaussianRational::one(), e))
    }

    pub fn from_int(c: i64) -> Self {
        RatFunc::from_poly(LaurentPoly::from_int(c))
    }

    pub fn from_gaussian(c: GaussianRational) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(c))
    }

    pub fn i() -> Self {
        RatFunc::from_gaussian(GaussianRational::i())
    }

    /// `q - q⁻¹`, the recurring Hecke parameter.
    pub fn q_minus_qinv() -> Self {
        RatFunc::from_poly(LaurentPoly::from_ints(-1, &[-1, 0, 1]))
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RatFunc::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        // Move the q-power of the denominator into the numerator.
        let num = num.shift(-den.low_exp());
        let den = den.shift(-den.low_exp());
        let (num, den) = if den.span() == 1 {
            (num, den)
        } else {
            let g = num.gcd_poly(&den);
            if g.span() == 1 {
                (num, den)
            } else {
                (num.exact_div_poly(&g), den.exact_div_poly(&g))
            }
        };
        RatFunc::normalize_lead(num, den)
    }

    fn normalize_lead(num: LaurentPoly, den: LaurentPoly) -> Self {
        let lead = den.leading_coeff().expect("nonzero denominator");
        if lead.is_one() {
            return RatFunc { num, den };
        }
        let inv = lead.inv();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The Laurent polynomial value, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    /// `Some((c, e))` when the value is `c·q^e`.
    pub fn as_monomial(&self) -> Option<(GaussianRational, i32)> {
        if self.den.is_one() && self.num.is_monomial() {
            Some((self.num.lowest_coeff().unwrap().clone(), self.num.low_exp()))
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // num and den are already coprime; only renormalize.
        let e = self.num.low_exp();
        let new_den = self.num.shift(-e);
        let new_num = self.den.shift(-e);
        Ok(RatFunc::normalize_lead(new_num, new_den))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn shift(&self, k: i32) -> Self {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// `q ↦ q⁻¹`, coefficients fixed.
    pub fn bar(&self) -> Self {
        if self.den.is_one() {
            return RatFunc::from_poly(self.num.bar());
        }
        RatFunc::reduce(self.num.bar(), self.den.bar())
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, q0: &BigRational) -> Result<GaussianRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::NonSemisimple(q0.to_string()));
        }
        if q0.is_zero() && self.num.low_exp() < 0 {
            return Err(Error::NonSemisimple(q0.to_string()));
        }
        Ok(&self.num.eval(q0) / &d)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatFunc::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn add_sub(&self, rhs: &RatFunc, negate: bool) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -rhs } else { rhs.clone() };
        }
        let combine = |a: &LaurentPoly, b: &LaurentPoly| if negate { a - b } else { a + b };
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_poly(combine(&self.num, &rhs.num));
            }
            return RatFunc::reduce(combine(&self.num, &rhs.num), self.den.clone());
        }
        if rhs.den.is_one() {
            let n = combine(&self.num, &(&rhs.num * &self.den));
            return RatFunc::reduce_against(n, self.den.clone(), &self.den);
        }
        if self.den.is_one() {
            let n = combine(&(&self.num * &rhs.den), &rhs.num);
            return RatFunc::reduce_against(n, rhs.den.clone(), &rhs.den);
        }
        // a/b + c/d with g = gcd(b, d), b = g·b1, d = g·d1.
        let g = self.den.gcd_poly(&rhs.den);
        let (b1, d1) = (self.den.exact_div_poly(&g), rhs.den.exact_div_poly(&g));
        let n = combine(&(&self.num * &d1), &(&rhs.num * &b1));
        let den = &(&self.den * &d1);
        if g.span() == 1 {
            // numerator is coprime to b1·d1 already
            return RatFunc::normalize_lead(n, den.clone()).trimmed_zero();
        }
        RatFunc::reduce_against(n, den.clone(), &g)
    }

    /// Reduces `num/den` knowing any common factor divides `g`.
    fn reduce_against(num: LaurentPoly, den: LaurentPoly, g: &LaurentPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = num.gcd_poly(g);
        if h.span() == 1 {
            return RatFunc::normalize_lead(num, den);
        }
        RatFunc::normalize_lead(num.exact_div_poly(&h), den.exact_div_poly(&h))
    }

    fn trimmed_zero(self) -> RatFunc {
        if self.num.is_zero() {
            RatFunc::zero()
        } else {
            self
        }
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        self.add_sub(rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self.add_sub(rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel: gcd(n1, d2) and gcd(n2, d1).
        let (n1, d2) = cancel(&self.num, &rhs.den);
        let (n2, d1) = cancel(&rhs.num, &self.den);
        RatFunc::normalize_lead(&n1 * &n2, &d1 * &d2)
    }
}

fn cancel(n: &LaurentPoly, d: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    if d.is_one() || n.is_monomial() {
        return (n.clone(), d.clone());
    }
    let g = n.gcd_poly(d);
    if g.span() == 1 {
        (n.clone(), d.clone())
    } else {
        (n.exact_div_poly(&g), d.exact_div_poly(&g))
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: RatFunc) -> RatFunc {
        &self / &rhs
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::from_int(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            let wrap = |p: &LaurentPoly| {
                if p.terms().count() > 1 {
                    format!("({p})")
                } else {
                    p.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(low: i32, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_ints(low, c)
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2 + q^4) / (q + q^3) == q
        let a = RatFunc::new(poly(2, &[1, 0, 1]), poly(1, &[1, 0, 1])).unwrap();
        assert_eq!(a, RatFunc::q());
        // 2/(2q+2) == 1/(q+1)
        let b = RatFunc::new(poly(0, &[2]), poly(0, &[2, 2])).unwrap();
        assert_eq!(b.den(), &poly(0, &[1, 1]));
        assert_eq!(b.num(), &poly(0, &[1]));
    }

    #[test]
    fn sum_of_fractions_reduces() {
        let a = RatFunc::new(poly(0, &[1]), poly(0, &[1, 1])).unwrap();
        let b = RatFunc::new(poly(1, &[1]), poly(0, &[1, 1])).unwrap();
        assert_eq!(&a + &b, RatFunc::one());
        let c = RatFunc::new(poly(0, &[1]), poly(0, &[-1, 1])).unwrap();
        let d = RatFunc::new(poly(0, &[1]), poly(0, &[1, 1])).unwrap();
        // 1/(q-1) - 1/(q+1) = 2/(q^2-1)
        let e = &c - &d;
        assert_eq!(
            e,
            RatFunc::new(poly(0, &[2]), poly(0, &[-1, 0, 1])).unwrap()
        );
        assert!((&e - &e).is_zero());
    }

    #[test]
    fn inverse_and_bar() {
        let a = RatFunc::new(poly(-1, &[1, 0, 1]), poly(0, &[3, 1])).unwrap();
        assert!((&a * &a.inv().unwrap()).is_one());
        assert_eq!(a.bar().bar(), a);
        assert_eq!(RatFunc::q().bar(), RatFunc::q_pow(-1));
    }

    #[test]
    fn denominator_with_q_power_moves_to_numerator() {
        let a = RatFunc::new(poly(0, &[1]), poly(1, &[1, 0, 1])).unwrap();
        assert_eq!(a.num().low_exp(), -1);
        assert_eq!(a.den(), &poly(0, &[1, 0, 1]));
    }
}
