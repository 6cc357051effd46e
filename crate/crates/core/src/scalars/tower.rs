//! The ring `Q(i)(q)[y_2, y_3, ...]` with `y_k² = p_k(q) = [k]/q`, in which
//! every character value lives.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Largest supported generator index (index sets are `u32` bitmasks).
pub const MAX_GENERATOR: u32 = 31;

/// The q-integer `[k]`: `q + q³ + … + q^{2k-1}` for `k ≥ 0`, and
/// `-q^{-2|k|}[|k|]` for negative `k`.
pub fn qint(k: i64) -> RatFunc {
    RatFunc::from_poly(qint_poly(k))
}

pub fn qint_poly(k: i64) -> LaurentPoly {
    if k == 0 {
        return LaurentPoly::zero();
    }
    let m = k.unsigned_abs() as usize;
    let ones = vec![1i64; 2 * m - 1];
    let mut coeffs = ones;
    for (j, c) in coeffs.iter_mut().enumerate() {
        if j % 2 == 1 {
            *c = 0;
        }
    }
    if k > 0 {
        LaurentPoly::from_ints(1, &coeffs)
    } else {
        -LaurentPoly::from_ints(1 - 2 * m as i32, &coeffs)
    }
}

/// The radicand `p_k = [k]/q = 1 + q² + … + q^{2k-2}`.
pub fn p_poly(k: i64) -> Result<LaurentPoly> {
    if k < 1 {
        return Err(Error::InvalidGenerator(k));
    }
    Ok(qint_poly(k).shift(-1))
}

fn bit(k: u32) -> u32 {
    1u32 << k
}

/// Generator indices of a bitmask, increasing.
pub fn mask_indices(mask: u32) -> Vec<u32> {
    (2..=MAX_GENERATOR)
        .filter(|&k| mask & bit(k) != 0)
        .collect()
}

pub fn indices_mask(ys: &[u32]) -> Result<u32> {
    let mut mask = 0u32;
    for &k in ys {
        if k > MAX_GENERATOR {
            return Err(Error::GeneratorTooLarge(k));
        }
        if k < 2 {
            return Err(Error::InvalidGenerator(k as i64));
        }
        mask ^= bit(k);
    }
    Ok(mask)
}

fn p_product(mask: u32) -> RatFunc {
    let mut acc = LaurentPoly::one();
    for k in mask_indices(mask) {
        acc = &acc * &p_poly(k as i64).unwrap();
    }
    RatFunc::from_poly(acc)
}

/// A finite sum `Σ_S c_S y_S` with `y_S = ∏_{k∈S} y_k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TowerElem {
    terms: BTreeMap<u32, RatFunc>,
}

impl TowerElem {
    pub fn zero() -> Self {
        TowerElem::default()
    }

    pub fn one() -> Self {
        TowerElem::from_ratfunc(RatFunc::one())
    }

    pub fn from_ratfunc(c: RatFunc) -> Self {
        TowerElem::monomial(0, c)
    }

    pub fn from_int(c: i64) -> Self {
        TowerElem::from_ratfunc(RatFunc::from_int(c))
    }

    /// `c·y_S` for the index set encoded by `mask`.
    pub fn monomial(mask: u32, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask & !0b11, c);
        }
        TowerElem { terms }
    }

    /// The generator `y_k`; `y_1 = 1`.
    pub fn y(k: u32) -> Result<Self> {
        match k {
            0 => Err(Error::InvalidGenerator(0)),
            1 => Ok(TowerElem::one()),
            k if k > MAX_GENERATOR => Err(Error::GeneratorTooLarge(k)),
            k => Ok(TowerElem::monomial(bit(k), RatFunc::one())),
        }
    }

    /// `∏ y_k` over the given indices (repeats allowed, `y_1 = 1`).
    pub fn y_product(ys: &[u32]) -> Result<Self> {
        let mut acc = TowerElem::one();
        for &k in ys {
            acc = &acc * &TowerElem::y(k)?;
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `(mask, coefficient)` pairs in mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &RatFunc)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Terms sorted lexicographically by their increasing index lists.
    pub fn sorted_terms(&self) -> Vec<(Vec<u32>, &RatFunc)> {
        let mut v: Vec<(Vec<u32>, &RatFunc)> = self
            .terms
            .iter()
            .map(|(m, c)| (mask_indices(*m), c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    pub fn coeff(&self, mask: u32) -> RatFunc {
        self.terms.get(&mask).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// The base-field value when no square roots occur.
    pub fn as_ratfunc(&self) -> Option<RatFunc> {
        match self.terms.len() {
            0 => Some(RatFunc::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `Some((mask, c))` for a single term `c·y_S`.
    pub fn as_single_term(&self) -> Option<(u32, &RatFunc)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return TowerElem::zero();
        }
        TowerElem {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&RatFunc::from_int(c))
    }

    fn accumulate(&mut self, mask: u32, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(slot) => {
                let s = &*slot + &c;
                if s.is_zero() {
                    self.terms.remove(&mask);
                } else {
                    *slot = s;
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    /// `self += a·b`, avoiding a temporary for the product.
    pub fn add_mul(&mut self, a: &TowerElem, b: &TowerElem) {
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let shared = ma & mb;
                let mut c = ca * cb;
                if shared != 0 {
                    c = &c * &p_product(shared);
                }
                self.accumulate(ma ^ mb, c);
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &TowerElem) {
        for (m, c) in &other.terms {
            self.accumulate(*m, c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &TowerElem) {
        for (m, c) in &other.terms {
            self.accumulate(*m, -c);
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = TowerElem::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The bar involution: `q ↦ q⁻¹`, `i ↦ i`, `y_k ↦ -q^{1-k} y_k`.
    pub fn bar(&self) -> Self {
        let mut out = TowerElem::zero();
        for (m, c) in &self.terms {
            let ks = mask_indices(*m);
            let shift: i32 = ks.iter().map(|&k| 1 - k as i32).sum();
            let mut nc = c.bar().shift(shift);
            if ks.len() % 2 == 1 {
                nc = -nc;
            }
            out.accumulate(*m, nc);
        }
        out
    }

    /// Numeric value at `q = q0` with `y_k ↦ branch_k·√p_k(q0)`, where
    /// `branch[k-2]` is the sign for `y_k` (missing entries mean `+1`).
    pub fn specialize_numeric(&self, q0: &BigRational, branch: &[i8]) -> Result<Complex64> {
        if q0.is_zero() {
            return Err(Error::NonSemisimple("0".into()));
        }
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let v = c.eval(q0)?.to_complex();
            let mut root = 1.0f64;
            for k in mask_indices(*m) {
                let pk = p_poly(k as i64)?.eval(q0).re.to_f64().unwrap_or(f64::NAN);
                let sign = branch.get(k as usize - 2).copied().unwrap_or(1) as f64;
                root *= sign * pk.sqrt();
            }
            total += v * root;
        }
        Ok(total)
    }

    /// Largest generator index that occurs.
    pub fn max_generator(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| if *m == 0 { 0 } else { 31 - m.leading_zeros() })
            .max()
            .unwrap_or(0)
    }
}

/// `α_k = i·q·y_{k+1}·y_{k-1}/[k]` for `k ≥ 2`, `α_{-k} = -α_k`, `α_{±1} = 0`.
pub fn alpha_coeff(k: i64) -> Result<TowerElem> {
    match k {
        0 => Err(Error::UndefinedAxialDistance),
        1 | -1 => Ok(TowerElem::zero()),
        k if k < 0 => Ok(-alpha_coeff(-k)?),
        k => {
            let c = &(&RatFunc::i() * &RatFunc::q()) / &qint(k);
            let y = TowerElem::y_product(&[(k + 1) as u32, (k - 1) as u32])?;
            Ok(y.scale(&c))
        }
    }
}

/// `-1/[k]` lifted to the tower (the seminormal diagonal entry).
pub fn neg_inv_qint(k: i64) -> Result<TowerElem> {
    if k == 0 {
        return Err(Error::UndefinedAxialDistance);
    }
    Ok(TowerElem::from_ratfunc(-qint(k).inv()?))
}

impl<'a> Add<&'a TowerElem> for &'a TowerElem {
    type Output = TowerElem;
    fn add(self, rhs: &TowerElem) -> TowerElem {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl<'a> Sub<&'a TowerElem> for &'a TowerElem {
    type Output = TowerElem;
    fn sub(self, rhs: &TowerElem) -> TowerElem {
        let mut out = self.clone();
        out.sub_assign_ref(rhs);
        out
    }
}

impl<'a> Mul<&'a TowerElem> for &'a TowerElem {
    type Output = TowerElem;
    fn mul(self, rhs: &TowerElem) -> TowerElem {
        let mut out = TowerElem::zero();
        out.add_mul(self, rhs);
        out
    }
}

impl Neg for &TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        TowerElem {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        -&self
    }
}

impl Add for TowerElem {
    type Output = TowerElem;
    fn add(self, rhs: TowerElem) -> TowerElem {
        &self + &rhs
    }
}

impl Sub for TowerElem {
    type Output = TowerElem;
    fn sub(self, rhs: TowerElem) -> TowerElem {
        &self - &rhs
    }
}

impl Mul for TowerElem {
    type Output = TowerElem;
    fn mul(self, rhs: TowerElem) -> TowerElem {
        &self * &rhs
    }
}

impl From<RatFunc> for TowerElem {
    fn from(c: RatFunc) -> Self {
        TowerElem::from_ratfunc(c)
    }
}

impl From<i64> for TowerElem {
    fn from(c: i64) -> Self {
        TowerElem::from_int(c)
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::pretty::render_tower(self))
    }
}

impl fmt::Debug for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_examples() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(1), RatFunc::q());
        assert_eq!(qint(-1), -RatFunc::q_pow(-1));
        assert_eq!(
            qint(2),
            RatFunc::from_poly(LaurentPoly::from_ints(1, &[1, 0, 1]))
        );
    }

    #[test]
    fn qint_negation_rule() {
        for k in 1..8 {
            assert_eq!(qint(-k), -(&RatFunc::q_pow(-2 * k as i32) * &qint(k)));
        }
    }

    #[test]
    fn p_poly_examples() {
        assert!(p_poly(1).unwrap().is_one());
        assert_eq!(p_poly(2).unwrap(), LaurentPoly::from_ints(0, &[1, 0, 1]));
        assert_eq!(
            p_poly(3).unwrap(),
            LaurentPoly::from_ints(0, &[1, 0, 1, 0, 1])
        );
        assert!(p_poly(0).is_err());
    }

    #[test]
    fn generator_products() {
        let y3 = TowerElem::y(3).unwrap();
        let y5 = TowerElem::y(5).unwrap();
        assert_eq!(
            &y3 * &y3,
            TowerElem::from_ratfunc(RatFunc::from_poly(p_poly(3).unwrap()))
        );
        let y35 = &y3 * &y5;
        assert_eq!(y35.sorted_terms()[0].0, vec![3, 5]);
        let a = TowerElem::y(2).unwrap().scale(&RatFunc::q());
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn alpha_examples() {
        let a2 = alpha_coeff(2).unwrap();
        let expected = TowerElem::y(3)
            .unwrap()
            .scale(&(&RatFunc::i() / &RatFunc::from_poly(LaurentPoly::from_ints(0, &[1, 0, 1]))));
        assert_eq!(a2, expected);
        assert_eq!(alpha_coeff(-2).unwrap(), -a2);
        assert!(alpha_coeff(1).unwrap().is_zero());
        assert_eq!(alpha_coeff(0), Err(Error::UndefinedAxialDistance));
    }

    #[test]
    fn bar_examples() {
        let q = TowerElem::from_ratfunc(RatFunc::q());
        assert_eq!(q.bar(), TowerElem::from_ratfunc(RatFunc::q_pow(-1)));
        let y2 = TowerElem::y(2).unwrap();
        assert_eq!(
            y2.bar(),
            TowerElem::y(2).unwrap().scale(&-RatFunc::q_pow(-1))
        );
        let i = TowerElem::from_ratfunc(RatFunc::i());
        assert_eq!(i.bar(), i);
    }

    #[test]
    fn numeric_specialization() {
        let one = BigRational::from_integer(1.into());
        let a = TowerElem::y(3)
            .unwrap()
            .scale(&(&RatFunc::i() * &RatFunc::q_pow(-1)));
        let v = a.specialize_numeric(&one, &[]).unwrap();
        assert!((v.re).abs() < 1e-12 && (v.im - 3f64.sqrt()).abs() < 1e-12);
        let b = TowerElem::from_ratfunc(&qint(3) / &qint(1));
        assert!((b.specialize_numeric(&one, &[]).unwrap().re - 3.0).abs() < 1e-12);
        assert_eq!(
            TowerElem::zero().specialize_numeric(&one, &[]).unwrap().re,
            0.0
        );
        let pole = TowerElem::from_ratfunc(RatFunc::q_minus_qinv().inv().unwrap());
        assert!(pole.specialize_numeric(&one, &[]).is_err());
    }
}
