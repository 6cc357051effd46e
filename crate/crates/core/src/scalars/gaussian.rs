//! Exact arithmetic in the Gaussian rationals `Q(i)`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A number `re + im·i` with `re, im` arbitrary-precision rationals.
///
/// `BigRational` keeps its fractions reduced with positive denominators, so
/// structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(v: i64) -> Self {
        GaussianRational::new(
            BigRational::from_integer(BigInt::from(v)),
            BigRational::zero(),
        )
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero Gaussian rational");
        if self.im.is_zero() {
            return GaussianRational::new(self.re.recip(), BigRational::zero());
        }
        if self.re.is_zero() {
            return GaussianRational::new(BigRational::zero(), -self.im.recip());
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussianRational::new(&self.re / &norm, -(&self.im / &norm))
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    /// Reduction modulo the prime ideal `(p, i - sqrt_m1)`; `None` when a
    /// denominator vanishes there.
    pub(crate) fn mod_p(&self, p: u64, sqrt_m1: u64) -> Option<u64> {
        let re = rational_mod_p(&self.re, p)?;
        let im = rational_mod_p(&self.im, p)?;
        Some(((re as u128 + (im as u128 * sqrt_m1 as u128) % p as u128) % p as u128) as u64)
    }
}

fn rational_mod_p(r: &BigRational, p: u64) -> Option<u64> {
    if r.is_zero() {
        return Some(0);
    }
    let pb = BigInt::from(p);
    let reduce = |x: &BigInt| -> u64 {
        let m = x % &pb;
        let m = if m.is_negative() { m + &pb } else { m };
        m.to_u64().unwrap()
    };
    let d = reduce(r.denom());
    if d == 0 {
        return None;
    }
    let n = reduce(r.numer());
    Some(mul_mod(n, pow_mod(d, p - 2, p), p))
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_int(1)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        let im = if self.im.is_zero() {
            rhs.im.clone()
        } else if rhs.im.is_zero() {
            self.im.clone()
        } else {
            &self.im + &rhs.im
        };
        GaussianRational::new(&self.re + &rhs.re, im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        let im = if rhs.im.is_zero() {
            self.im.clone()
        } else {
            &self.im - &rhs.im
        };
        GaussianRational::new(&self.re - &rhs.re, im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => GaussianRational::new(&self.re * &rhs.re, BigRational::zero()),
            (true, false) => GaussianRational::new(&self.re * &rhs.re, &self.re * &rhs.im),
            (false, true) => GaussianRational::new(&self.re * &rhs.re, &self.im * &rhs.re),
            (false, false) => GaussianRational::new(
                &self.re * &rhs.re - &self.im * &rhs.im,
                &self.re * &rhs.im + &self.im * &rhs.re,
            ),
        }
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        if rhs.im.is_zero() {
            return GaussianRational::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        self * &rhs.inv()
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        &self + &rhs
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        &self - &rhs
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        &self * &rhs
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl From<i64> for GaussianRational {
    fn from(v: i64) -> Self {
        GaussianRational::from_int(v)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "√-1")
                } else if (-&self.im).is_one() {
                    write!(f, "-√-1")
                } else {
                    write!(f, "{}·√-1", self.im)
                }
            }
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({} - {}·√-1)", self.re, -&self.im)
                } else {
                    write!(f, "({} + {}·√-1)", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_gaussian() {
        let z = GaussianRational::new(
            BigRational::from_integer(3.into()),
            BigRational::from_integer(4.into()),
        );
        let w = &z * &z.inv();
        assert!(w.is_one());
        assert_eq!(GaussianRational::i().inv(), -GaussianRational::i());
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
    }

    #[test]
    fn reduction_mod_p_respects_products() {
        let p = 998_244_353u64;
        let s = pow_mod(3, (p - 1) / 4, p);
        assert_eq!(mul_mod(s, s, p), p - 1);
        let a = GaussianRational::new(
            BigRational::new(1.into(), 3.into()),
            BigRational::from_integer(2.into()),
        );
        let b = GaussianRational::new(
            BigRational::from_integer((-5).into()),
            BigRational::new(7.into(), 2.into()),
        );
        let lhs = (&a * &b).mod_p(p, s).unwrap();
        let rhs = mul_mod(a.mod_p(p, s).unwrap(), b.mod_p(p, s).unwrap(), p);
        assert_eq!(lhs, rhs);
    }
}
