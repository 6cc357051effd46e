//! Human-readable rendering in square-root notation: `c·y_S` is shown as
//! `c·q^(-|S|/2)·√[k]…`, since `y_k = q^(-1/2)·√[k]`.

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::ratfunc::RatFunc;
use super::tower::{mask_indices, TowerElem};

fn render_exponent(twice: i32) -> Option<String> {
    if twice == 0 {
        return None;
    }
    if twice % 2 == 0 {
        let e = twice / 2;
        if e == 1 {
            Some("q".into())
        } else if e > 0 {
            Some(format!("q^{e}"))
        } else {
            Some(format!("q^({e})"))
        }
    } else {
        Some(format!("q^({twice}/2)"))
    }
}

/// Returns `(negative, text)` for a coefficient, with an empty text for 1.
fn render_scalar(c: &GaussianRational) -> (bool, String) {
    if c.is_real() {
        let neg = c.re < num_rational::BigRational::zero();
        let mag = if neg { -&c.re } else { c.re.clone() };
        if mag.is_one() {
            return (neg, String::new());
        }
        return (neg, mag.to_string());
    }
    if c.re.is_zero() && c.im < num_rational::BigRational::zero() {
        let (_, s) = render_scalar(&-c);
        return (true, s);
    }
    (false, c.to_string())
}

fn render_term(ys: &[u32], c: &RatFunc) -> (bool, String) {
    let roots: Vec<String> = ys.iter().map(|k| format!("√[{k}]")).collect();
    let half_shift = -(ys.len() as i32);
    let mut factors: Vec<String> = Vec::new();
    let negative;
    if let Some((a, e)) = c.as_monomial() {
        let (neg, s) = render_scalar(&a);
        negative = neg;
        if !s.is_empty() {
            factors.push(s);
        }
        if let Some(q) = render_exponent(2 * e + half_shift) {
            factors.push(q);
        }
    } else {
        negative = false;
        factors.push(format!("({c})"));
        if let Some(q) = render_exponent(half_shift) {
            factors.push(q);
        }
    }
    factors.extend(roots);
    if factors.is_empty() {
        factors.push("1".into());
    }
    (negative, factors.join("·"))
}

pub fn render_tower(a: &TowerElem) -> String {
    if a.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (ys, c)) in a.sorted_terms().into_iter().enumerate() {
        let (neg, text) = render_term(&ys, c);
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&text);
    }
    out
}

/// Renders an index set as `y_{3,5}` (the internal normalization).
pub fn render_mask(mask: u32) -> String {
    let ks: Vec<String> = mask_indices(mask).iter().map(|k| k.to_string()).collect();
    format!("y_{{{}}}", ks.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_base_case_in_root_notation() {
        let a = TowerElem::y(3)
            .unwrap()
            .scale(&(&RatFunc::i() * &RatFunc::q_pow(-1)));
        assert_eq!(render_tower(&a), "√-1·q^(-3/2)·√[3]");
        assert_eq!(render_tower(&-a), "-√-1·q^(-3/2)·√[3]");
    }

    #[test]
    fn renders_plain_values() {
        assert_eq!(render_tower(&TowerElem::from_int(-1)), "-1");
        assert_eq!(render_tower(&TowerElem::one()), "1");
        assert_eq!(
            render_tower(&TowerElem::from_ratfunc(RatFunc::q_pow(2))),
            "q^2"
        );
    }
}
