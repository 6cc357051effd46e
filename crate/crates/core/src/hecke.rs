//! The Hecke algebra `H_n` in its T-basis, the involutions `#`, bar and `ε`,
//! and the A-, B- and E-elements of the alternating subalgebra.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::scalars::json::ratfunc_to_json;
use crate::scalars::{GaussianRational, RatFunc};
use crate::symgroup::Permutation;

/// `Σ c_w T_w` with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElem {
    n: usize,
    coeffs: BTreeMap<Permutation, RatFunc>,
}

fn half() -> RatFunc {
    RatFunc::from_gaussian(GaussianRational::from_ratio(1, 2))
}

impl HeckeElem {
    pub fn zero(n: usize) -> Self {
        HeckeElem {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, RatFunc::one())
    }

    pub fn scalar(n: usize, c: RatFunc) -> Self {
        Self::term(Permutation::identity(n), c)
    }

    /// `T_w`.
    pub fn t(w: &Permutation) -> Self {
        Self::term(w.clone(), RatFunc::one())
    }

    /// `T_{s_i}`.
    pub fn t_s(n: usize, i: usize) -> Result<Self> {
        Ok(Self::t(&Permutation::from_word(n, &[i])?))
    }

    /// `T_{s_{w[0]}} T_{s_{w[1]}} ⋯`, reduced or not.
    pub fn t_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut x = Self::one(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::MalformedWord { index: i, n });
            }
            x = x.mul_s_right(i);
        }
        Ok(x)
    }

    pub fn term(w: Permutation, c: RatFunc) -> Self {
        let mut x = HeckeElem::zero(w.n());
        x.add_term(w, c);
        x
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> RatFunc {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// Terms ordered by length, then one-line notation.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &RatFunc)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by_key(|(w, _)| w.length());
        v
    }

    pub fn add_term(&mut self, w: Permutation, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeElem, c: &RatFunc) {
        for (w, a) in &other.coeffs {
            self.add_term(w.clone(), a * c);
        }
    }

    pub fn scale(&self, c: &RatFunc) -> HeckeElem {
        let mut out = HeckeElem::zero(self.n);
        out.add_scaled(self, c);
        out
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> HeckeElem {
        let mut out = HeckeElem::zero(self.n);
        for (w, c) in &self.coeffs {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// `self · T_{s_i}`.
    pub fn mul_s_right(&self, i: usize) -> HeckeElem {
        let qq = RatFunc::q_minus_qinv();
        let mut out = HeckeElem::zero(self.n);
        for (w, c) in &self.coeffs {
            let ws = w.right_mul_s(i);
            if w.has_right_descent(i) {
                out.add_term(w.clone(), c * &qq);
            }
            out.add_term(ws, c.clone());
        }
        out
    }

    /// `T_{s_i} · self`.
    pub fn mul_s_left(&self, i: usize) -> HeckeElem {
        let qq = RatFunc::q_minus_qinv();
        let mut out = HeckeElem::zero(self.n);
        for (w, c) in &self.coeffs {
            let sw = w.left_mul_s(i);
            if w.has_left_descent(i) {
                out.add_term(w.clone(), c * &qq);
            }
            out.add_term(sw, c.clone());
        }
        out
    }

    /// Applies `#` to the T-basis element `T_w` term by term.
    pub fn hash_inv(&self) -> HeckeElem {
        let mut out = HeckeElem::zero(self.n);
        for (w, c) in &self.coeffs {
            out.add_scaled(&hash_of_t(w), c);
        }
        out
    }

    /// The bar involution: semilinear with `T_z ↦ T_{z⁻¹}⁻¹`.
    pub fn bar_inv(&self) -> HeckeElem {
        let mut out = HeckeElem::zero(self.n);
        for (w, c) in &self.coeffs {
            out.add_scaled(&inverse_of_t_inverse(w), &c.bar());
        }
        out
    }

    /// The semilinear involution `T_z ↦ ε_z T_z`.
    pub fn eps_inv(&self) -> HeckeElem {
        let mut out = HeckeElem::zero(self.n);
        for (w, c) in &self.coeffs {
            let b = c.bar();
            out.add_term(w.clone(), if w.is_even() { b } else { -b });
        }
        out
    }

    pub fn is_alternating(&self) -> bool {
        self.hash_inv() == *self
    }

    pub fn max_length(&self) -> usize {
        self.coeffs
            .keys()
            .map(Permutation::length)
            .max()
            .unwrap_or(0)
    }

    /// JSON list of `{perm, coeff}` in length-then-lex order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(w, c)| json!({"perm": w.one_line(), "coeff": ratfunc_to_json(c)}))
                .collect(),
        )
    }
}

/// The product `a · b` in `H_n`.
pub fn t_multiply(a: &HeckeElem, b: &HeckeElem) -> HeckeElem {
    assert_eq!(a.n, b.n, "Hecke elements of different rank");
    let mut out = HeckeElem::zero(a.n);
    for (v, c) in &b.coeffs {
        let mut x = a.clone();
        for i in v.reduced_word() {
            x = x.mul_s_right(i);
        }
        out.add_scaled(&x, c);
    }
    out
}

impl std::ops::Add for &HeckeElem {
    type Output = HeckeElem;
    fn add(self, rhs: &HeckeElem) -> HeckeElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::one());
        out
    }
}

impl std::ops::Sub for &HeckeElem {
    type Output = HeckeElem;
    fn sub(self, rhs: &HeckeElem) -> HeckeElem {
        let mut out = self.clone();
        out.add_scaled(rhs, &RatFunc::from_int(-1));
        out
    }
}

impl std::ops::Mul for &HeckeElem {
    type Output = HeckeElem;
    fn mul(self, rhs: &HeckeElem) -> HeckeElem {
        t_multiply(self, rhs)
    }
}

impl std::ops::Neg for &HeckeElem {
    type Output = HeckeElem;
    fn neg(self) -> HeckeElem {
        self.scale(&RatFunc::from_int(-1))
    }
}

impl fmt::Display for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .sorted_terms()
            .into_iter()
            .map(|(w, c)| format!("({c})·T{w}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type ElemCache = RwLock<HashMap<Permutation, Arc<HeckeElem>>>;

fn cached(
    cache: &'static OnceLock<ElemCache>,
    w: &Permutation,
    build: impl FnOnce() -> HeckeElem,
) -> Arc<HeckeElem> {
    let cache = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(x) = cache.read().unwrap().get(w) {
        return x.clone();
    }
    let x = Arc::new(build());
    cache.write().unwrap().entry(w.clone()).or_insert(x).clone()
}

/// `T_w^#` via `(−T_{s_1}+q−q⁻¹)⋯(−T_{s_k}+q−q⁻¹)` along a reduced word.
pub fn hash_of_t(w: &Permutation) -> Arc<HeckeElem> {
    static CACHE: OnceLock<ElemCache> = OnceLock::new();
    cached(&CACHE, w, || {
        let qq = RatFunc::q_minus_qinv();
        let mut x = HeckeElem::one(w.n());
        for i in w.reduced_word() {
            let mut y = x.mul_s_right(i).scale(&RatFunc::from_int(-1));
            y.add_scaled(&x, &qq);
            x = y;
        }
        x
    })
}

/// `T_{w⁻¹}⁻¹ = (T_{s_1} − q + q⁻¹)⋯(T_{s_k} − q + q⁻¹)`.
pub fn inverse_of_t_inverse(w: &Permutation) -> Arc<HeckeElem> {
    static CACHE: OnceLock<ElemCache> = OnceLock::new();
    cached(&CACHE, w, || {
        let mqq = -RatFunc::q_minus_qinv();
        let mut x = HeckeElem::one(w.n());
        for i in w.reduced_word() {
            let mut y = x.mul_s_right(i);
            y.add_scaled(&x, &mqq);
            x = y;
        }
        x
    })
}

/// Checks `ε_w T_w^# · T_{w⁻¹} = 1`, the defining property of `#`.
pub fn hash_definition_holds(w: &Permutation) -> bool {
    let mut lhs = t_multiply(&hash_of_t(w), &HeckeElem::t(&w.inverse()));
    if !w.is_even() {
        lhs = -&lhs;
    }
    lhs == HeckeElem::one(w.n())
}

/// `A_z = ½(T_z + ε_z T_z^#)`.
pub fn a_elem(z: &Permutation) -> Arc<HeckeElem> {
    static CACHE: OnceLock<ElemCache> = OnceLock::new();
    cached(&CACHE, z, || {
        let h = half();
        let mut x = HeckeElem::t(z).scale(&h);
        x.add_scaled(&hash_of_t(z), &if z.is_even() { h.clone() } else { -h });
        x
    })
}

/// `E_i = (2T_i − q + q⁻¹)/(q + q⁻¹)`.
pub fn e_elem(n: usize, i: usize) -> Result<HeckeElem> {
    let qpq = RatFunc::q() + RatFunc::q_pow(-1);
    let inv = qpq.inv()?;
    let mut x = HeckeElem::t_s(n, i)?.scale(&RatFunc::from_int(2));
    x.add_scaled(&HeckeElem::one(n), &-RatFunc::q_minus_qinv());
    Ok(x.scale(&inv))
}

/// `B_z = A_z − Σ a_{yz} B_y` over `y ≠ z` in the support of `A_z` with
/// `ℓ(y) ≡ ℓ(z)`, built lazily and memoised per element.
pub fn b_elem(z: &Permutation) -> Arc<HeckeElem> {
    static CACHE: OnceLock<ElemCache> = OnceLock::new();
    cached(&CACHE, z, || {
        let a = a_elem(z);
        let parity = z.length() % 2;
        let mut b = (*a).clone();
        for (y, c) in a.terms() {
            if y != z && y.length() % 2 == parity {
                b.add_scaled(&b_elem(y), &-c.clone());
            }
        }
        b
    })
}

/// Coordinates of `x` in a unitriangular basis `z ↦ basis(z)` whose
/// elements are `T_z` plus strictly shorter terms.
pub fn unitriangular_coordinates(
    x: &HeckeElem,
    basis: impl Fn(&Permutation) -> Arc<HeckeElem>,
) -> BTreeMap<Permutation, RatFunc> {
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    while let Some((z, c)) = rest
        .terms()
        .max_by(|a, b| a.0.length().cmp(&b.0.length()).then_with(|| a.0.cmp(b.0)))
        .map(|(z, c)| (z.clone(), c.clone()))
    {
        rest.add_scaled(&basis(&z), &-c.clone());
        out.insert(z, c);
    }
    out
}

/// `s_{yv}` with `T_v = Σ_y s_{yv} B_y`.
pub fn t_in_b(v: &Permutation) -> BTreeMap<Permutation, RatFunc> {
    unitriangular_coordinates(&HeckeElem::t(v), b_elem)
}

/// `r_{xy}` with `B_y = Σ_x r_{xy} A_x`.
pub fn b_in_a(y: &Permutation) -> BTreeMap<Permutation, RatFunc> {
    unitriangular_coordinates(&b_elem(y), a_elem)
}

/// The B-basis of the alternating algebra for `S_n`.
pub struct BBasis {
    n: usize,
    elems: HashMap<Permutation, Arc<HeckeElem>>,
    order: Vec<Permutation>,
}

impl BBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, z: &Permutation) -> &HeckeElem {
        &self.elems[z]
    }

    /// Permutations in length-then-lex order.
    pub fn order(&self) -> &[Permutation] {
        &self.order
    }

    /// `b_{yz}`, the coefficient of `T_y` in `B_z`.
    pub fn b_coeff(&self, y: &Permutation, z: &Permutation) -> RatFunc {
        self.elems[z].coeff(y)
    }
}

pub(crate) fn length_lex_order(n: usize) -> Vec<Permutation> {
    let mut all = Permutation::all(n);
    all.sort_by_key(Permutation::length);
    all
}

/// The full B-basis for `S_n`.
pub fn b_basis(n: usize) -> Arc<BBasis> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<BBasis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(b) = cache.read().unwrap().get(&n) {
        return b.clone();
    }
    let order = length_lex_order(n);
    let elems = order.iter().map(|z| (z.clone(), b_elem(z))).collect();
    let built = Arc::new(BBasis { n, elems, order });
    cache.write().unwrap().entry(n).or_insert(built).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(n, word).unwrap()
    }

    fn qq() -> RatFunc {
        RatFunc::q_minus_qinv()
    }

    #[test]
    fn quadratic_relation() {
        let t1 = HeckeElem::t_s(3, 1).unwrap();
        let mut expected = HeckeElem::one(3);
        expected.add_scaled(&t1, &qq());
        assert_eq!(&t1 * &t1, expected);
        let t2 = HeckeElem::t_s(3, 2).unwrap();
        assert_eq!(&t1 * &t2, HeckeElem::t(&w(3, &[1, 2])));
        assert_eq!(
            &t1 * &HeckeElem::t(&w(3, &[2, 1])),
            HeckeElem::t(&w(3, &[1, 2, 1]))
        );
    }

    #[test]
    fn hash_examples() {
        let t1 = HeckeElem::t_s(3, 1).unwrap();
        let mut expected = -&t1;
        expected.add_scaled(&HeckeElem::one(3), &qq());
        assert_eq!(t1.hash_inv(), expected);

        let x = HeckeElem::t(&w(3, &[1, 2])).hash_inv();
        let mut e = HeckeElem::t(&w(3, &[1, 2]));
        e.add_scaled(&HeckeElem::t_s(3, 1).unwrap(), &-qq());
        e.add_scaled(&HeckeElem::t_s(3, 2).unwrap(), &-qq());
        e.add_scaled(&HeckeElem::one(3), &qq().pow(2));
        assert_eq!(x, e);
        for p in Permutation::all(3) {
            assert!(hash_definition_holds(&p));
            assert_eq!(HeckeElem::t(&p).hash_inv().hash_inv(), HeckeElem::t(&p));
        }
    }

    #[test]
    fn a_and_b_examples() {
        let s1 = w(3, &[1]);
        let mut e = HeckeElem::t(&s1);
        e.add_scaled(&HeckeElem::one(3), &-(qq() * half()));
        assert_eq!(*a_elem(&s1), e);
        let b = b_basis(3);
        assert_eq!(*b.get(&s1), e);
        assert_eq!(*b.get(&Permutation::identity(3)), HeckeElem::one(3));
        let z = w(3, &[1, 2, 1]);
        assert_eq!(b.b_coeff(&w(3, &[2, 1]), &z), -(qq() * half()));
    }

    #[test]
    fn e_elements() {
        let e = e_elem(3, 2).unwrap();
        assert_eq!(&e * &e, HeckeElem::one(3));
        assert_eq!(e.hash_inv(), -&e);
    }

    #[test]
    fn bar_equals_eps_hash() {
        for p in Permutation::all(3) {
            let x = HeckeElem::term(p.clone(), RatFunc::q().pow(2) + RatFunc::i());
            assert_eq!(x.bar_inv(), x.hash_inv().eps_inv());
        }
    }
}
