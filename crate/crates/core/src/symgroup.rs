//! Permutations, conjugacy classes and the conjugation rewriting that drives
//! the character recursions.
//!
//! Products compose right to left, `(uv)(x) = u(v(x))`, and words use 1-based
//! generator indices with `s_i = (i, i+1)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    one_line: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n as u8).collect(),
        }
    }

    pub fn from_one_line(v: &[usize]) -> Result<Self> {
        let n = v.len();
        let mut seen = vec![false; n + 1];
        for &x in v {
            if x == 0 || x > n || seen[x] {
                return Err(Error::NotAPermutation(format!("{v:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            one_line: v.iter().map(|&x| x as u8).collect(),
        })
    }

    /// The product `s_{w[0]} s_{w[1]} ⋯` in `S_n`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(Error::MalformedWord { index: i, n });
            }
            p.one_line.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.one_line.iter().map(|&x| x as usize).collect()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.one_line
            .iter()
            .enumerate()
            .all(|(k, &x)| x as usize == k + 1)
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i64 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        let n = self.n();
        let cycles = self.cycles().len();
        (n - cycles).is_multiple_of(2)
    }

    /// `w(i) > w(i+1)`, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.one_line[i - 1] > self.one_line[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`: the value `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.one_line[i - 1] > inv.one_line[i]
    }

    /// Reduced word obtained by repeatedly stripping the largest right
    /// descent; `w_κ` comes out as its increasing word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..w.n()).rev().find(|&i| w.has_right_descent(i)) {
            w.one_line.swap(i - 1, i);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// The composite `self ∘ other`.
    pub fn multiply(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "permutations of different degree");
        Permutation {
            one_line: other
                .one_line
                .iter()
                .map(|&x| self.one_line[x as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (k, &x) in self.one_line.iter().enumerate() {
            inv[x as usize - 1] = (k + 1) as u8;
        }
        Permutation { one_line: inv }
    }

    /// `s_i · w`.
    pub fn left_mul_s(&self, i: usize) -> Permutation {
        let a = i as u8;
        Permutation {
            one_line: self
                .one_line
                .iter()
                .map(|&x| {
                    if x == a {
                        a + 1
                    } else if x == a + 1 {
                        a
                    } else {
                        x
                    }
                })
                .collect(),
        }
    }

    /// `w · s_i`.
    pub fn right_mul_s(&self, i: usize) -> Permutation {
        let mut p = self.clone();
        p.one_line.swap(i - 1, i);
        p
    }

    /// `s_i w s_i`.
    pub fn conj_s(&self, i: usize) -> Permutation {
        self.left_mul_s(i).right_mul_s(i)
    }

    /// Disjoint cycles (including fixed points), each starting at its
    /// smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle type as a weakly decreasing partition.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// All elements of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Permutation {
                one_line: cur.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }

    /// Bruhat order by the tableau criterion on one-line prefixes.
    pub fn bruhat_le(&self, other: &Permutation) -> bool {
        let n = self.n();
        for k in 1..n {
            let mut a: Vec<u8> = self.one_line[..k].to_vec();
            let mut b: Vec<u8> = other.one_line[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// The composition `σ` with `w = w_σ`, if `w` is a product of cycles
    /// `(a, a+1, …, b)` on consecutive blocks.
    pub fn as_composition(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let mut parts = Vec::new();
        let mut a = 1;
        while a <= n {
            let mut i = a;
            while i < n && self.apply(i) == i + 1 {
                i += 1;
            }
            if self.apply(i) != a {
                return None;
            }
            parts.push(i - a + 1);
            a = i + 1;
        }
        Some(parts)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.one_line.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Whether an `S_n` class is whole in `A_n` or one of its two halves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AltSign {
    Whole,
    Plus,
    Minus,
}

impl fmt::Display for AltSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AltSign::Whole => "whole",
            AltSign::Plus => "plus",
            AltSign::Minus => "minus",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConjClass {
    pub cycle_type: Vec<usize>,
    pub alt_sign: AltSign,
}

impl fmt::Display for ConjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cycle_type.iter().map(|p| p.to_string()).collect();
        let suffix = match self.alt_sign {
            AltSign::Whole => "",
            AltSign::Plus => "+",
            AltSign::Minus => "-",
        };
        write!(f, "({}){}", parts.join(","), suffix)
    }
}

fn check_composition(kappa: &[usize]) -> Result<usize> {
    if kappa.contains(&0) {
        return Err(Error::MalformedComposition(format!(
            "{kappa:?} has a zero part"
        )));
    }
    Ok(kappa.iter().sum())
}

/// `w_κ = (1,…,κ₁)(κ₁+1,…)⋯`, the product of consecutive cycles.
pub fn w_of_composition(kappa: &[usize]) -> Result<Permutation> {
    let n = check_composition(kappa)?;
    Permutation::from_word(n, &composition_word(kappa))
}

/// The increasing reduced word of `w_κ`.
pub fn composition_word(kappa: &[usize]) -> Vec<usize> {
    let mut word = Vec::new();
    let mut start = 1;
    for &k in kappa {
        word.extend(start..start + k - 1);
        start += k;
    }
    word
}

/// True when the parts are distinct and odd with some part above 1, i.e.
/// the class of `w_κ` splits in `A_n`.
pub fn class_splits(kappa: &[usize]) -> bool {
    let mut sorted = kappa.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == kappa.len() && kappa.iter().all(|k| k % 2 == 1) && kappa.iter().any(|&k| k > 1)
}

/// `(w⁺, w⁻)` for a partition `κ` whose class lies in `A_n`; `w⁻ = s_r w⁺ s_r`
/// exists exactly when the class splits.
pub fn split_class_reps(kappa: &[usize]) -> Result<(Permutation, Option<Permutation>)> {
    let n = check_composition(kappa)?;
    if !(n - kappa.len()).is_multiple_of(2) {
        return Err(Error::OddPermutationClass(format!("{kappa:?}")));
    }
    let plus = w_of_composition(kappa)?;
    if !class_splits(kappa) {
        return Ok((plus, None));
    }
    let d = kappa.iter().position(|&k| k > 1).unwrap();
    let r = kappa[..d].iter().sum::<usize>() + 1;
    let minus = plus.conj_s(r);
    Ok((plus, Some(minus)))
}

/// The `A_n` class of an even permutation. For a split cycle type the sign
/// records whether `w` is conjugate to `w⁺` by an even permutation.
pub fn alt_class_of(w: &Permutation) -> Result<ConjClass> {
    if !w.is_even() {
        return Err(Error::OddPermutation);
    }
    let kappa = w.cycle_type();
    if !class_splits(&kappa) {
        return Ok(ConjClass {
            cycle_type: kappa,
            alt_sign: AltSign::Whole,
        });
    }
    let plus = w_of_composition(&kappa)?;
    let target = w.cycles();
    // cycle lengths are distinct, so matching cycles by length fixes g up to
    // rotations, which are even
    let mut g = vec![0usize; w.n()];
    for cyc in plus.cycles() {
        let other = target.iter().find(|c| c.len() == cyc.len()).unwrap();
        for (&x, &y) in cyc.iter().zip(other) {
            g[x - 1] = y;
        }
    }
    let g = Permutation::from_one_line(&g)?;
    let alt_sign = if g.is_even() {
        AltSign::Plus
    } else {
        AltSign::Minus
    };
    Ok(ConjClass {
        cycle_type: kappa,
        alt_sign,
    })
}

/// `ℓ(w) = n - (number of cycles)`.
pub fn is_min_length(w: &Permutation) -> bool {
    w.length() == w.n() - w.cycles().len()
}

/// Elementary conjugation step `w ↦ s w s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepKind {
    /// `ℓ(sws) = ℓ(w) - 2`.
    Drop2,
    /// `ℓ(sws) = ℓ(w)`, `sws ≠ w`; `left_shorter` is true when `v = sw` is
    /// the shorter witness, false when `v = ws`.
    Flat { left_shorter: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub s: usize,
    pub kind: StepKind,
    pub from: Permutation,
    pub to: Permutation,
}

impl Step {
    /// The shorter witness `v ∈ {sw, ws}` of a flat step, or `sw` for a drop.
    pub fn shorter(&self) -> Permutation {
        match self.kind {
            StepKind::Flat {
                left_shorter: false,
            } => self.from.right_mul_s(self.s),
            _ => self.from.left_mul_s(self.s),
        }
    }
}

fn drop2_generator(w: &Permutation) -> Option<usize> {
    let len = w.length();
    (1..w.n()).find(|&s| w.conj_s(s).length() + 2 == len)
}

fn flat_step(w: &Permutation, s: usize) -> Option<Step> {
    let c = w.conj_s(s);
    if c == *w || c.length() != w.length() {
        return None;
    }
    Some(Step {
        s,
        kind: StepKind::Flat {
            left_shorter: w.has_left_descent(s),
        },
        from: w.clone(),
        to: c,
    })
}

/// The first step of the deterministic rewriting path from `w`, or `None`
/// when `w` already has the form `w_σ`.
pub fn next_steps(w: &Permutation) -> Vec<Step> {
    if w.as_composition().is_some() {
        return Vec::new();
    }
    if let Some(s) = drop2_generator(w) {
        return vec![Step {
            s,
            kind: StepKind::Drop2,
            from: w.clone(),
            to: w.conj_s(s),
        }];
    }
    // BFS over same-length conjugates to the nearest node that is of the
    // form w_σ or admits a length drop.
    let mut parent: HashMap<Permutation, Option<Step>> = HashMap::new();
    parent.insert(w.clone(), None);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for s in 1..x.n() {
            let Some(step) = flat_step(&x, s) else {
                continue;
            };
            if parent.contains_key(&step.to) {
                continue;
            }
            let y = step.to.clone();
            parent.insert(y.clone(), Some(step));
            queue.push_back(y.clone());
            if y.as_composition().is_some() || drop2_generator(&y).is_some() {
                let mut path = Vec::new();
                let mut cur = y;
                while let Some(Some(st)) = parent.get(&cur) {
                    path.push(st.clone());
                    cur = st.from.clone();
                }
                path.reverse();
                return path;
            }
        }
    }
    unreachable!("conjugation graph exhausted without reaching a reducible element")
}

/// The composition `σ` reached from `w` and the full step path `w → w_σ`.
pub fn reduce_to_composition(w: &Permutation) -> (Vec<usize>, Vec<Step>) {
    let mut path = Vec::new();
    let mut cur = w.clone();
    loop {
        let steps = next_steps(&cur);
        if steps.is_empty() {
            break;
        }
        cur = steps.last().unwrap().to.clone();
        path.extend(steps);
    }
    (cur.as_composition().expect("path ends at w_sigma"), path)
}

/// Partitions `κ ⊢ n` with `w_κ ∈ A_n`, lexicographically decreasing.
pub fn alt_parts(n: usize) -> Vec<Vec<usize>> {
    crate::combinat::partitions_of(n)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .filter(|k| (n - k.len()).is_multiple_of(2))
        .collect()
}

/// One entry per `A_n` class: its label and minimal-length representative.
/// Ordered by decreasing cycle type as in `alt_parts`, with `+` before `-`.
pub fn alt_classes(n: usize) -> Result<Vec<(ConjClass, Permutation)>> {
    if n < 2 {
        let ct = if n == 1 { vec![1] } else { vec![] };
        return Ok(vec![(
            ConjClass {
                cycle_type: ct,
                alt_sign: AltSign::Whole,
            },
            Permutation::identity(n),
        )]);
    }
    let mut out = Vec::new();
    let mut parts = alt_parts(n);
    // identity class first, matching the usual table layout
    parts.reverse();
    for kappa in parts {
        let (plus, minus) = split_class_reps(&kappa)?;
        match minus {
            None => out.push((
                ConjClass {
                    cycle_type: kappa,
                    alt_sign: AltSign::Whole,
                },
                plus,
            )),
            Some(m) => {
                out.push((
                    ConjClass {
                        cycle_type: kappa.clone(),
                        alt_sign: AltSign::Plus,
                    },
                    plus,
                ));
                out.push((
                    ConjClass {
                        cycle_type: kappa,
                        alt_sign: AltSign::Minus,
                    },
                    m,
                ));
            }
        }
    }
    Ok(out)
}

/// Parses `"1,2,3"` into a word (an empty string is the empty word).
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad generator {t:?}: {e}")))
        })
        .collect()
}

pub fn format_word(w: &[usize]) -> String {
    w.iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    #[test]
    fn alt_class_labels_match_reps() {
        for n in 1..=7 {
            for (class, rep) in alt_classes(n).unwrap() {
                assert_eq!(alt_class_of(&rep).unwrap(), class);
            }
        }
        let (p, m) = split_class_reps(&[3]).unwrap();
        let g = Permutation::from_one_line(&[2, 3, 1]).unwrap();
        assert_eq!(
            alt_class_of(&g.multiply(&p).multiply(&g.inverse()))
                .unwrap()
                .alt_sign,
            AltSign::Plus
        );
        assert_eq!(alt_class_of(&m.unwrap()).unwrap().alt_sign, AltSign::Minus);
    }

    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_one_line(v).unwrap()
    }

    #[test]
    fn word_and_length_examples() {
        assert_eq!(Permutation::from_word(3, &[1, 2]).unwrap(), p(&[2, 3, 1]));
        assert_eq!(p(&[2, 1, 4, 3]).length(), 2);
        assert_eq!(p(&[2, 3, 1, 4]).cycle_type(), vec![3, 1]);
        assert!(Permutation::from_word(3, &[3]).is_err());
    }

    #[test]
    fn compositions() {
        assert_eq!(w_of_composition(&[2, 2]).unwrap(), p(&[2, 1, 4, 3]));
        assert_eq!(w_of_composition(&[1, 3]).unwrap(), p(&[1, 3, 4, 2]));
        assert!(w_of_composition(&[1, 1, 1]).unwrap().is_identity());
        assert_eq!(
            w_of_composition(&[2, 3]).unwrap().reduced_word(),
            vec![1, 3, 4]
        );
        assert_eq!(p(&[1, 3, 4, 2]).as_composition(), Some(vec![1, 3]));
        assert_eq!(p(&[3, 1, 2]).as_composition(), None);
    }

    #[test]
    fn split_representatives() {
        let (plus, minus) = split_class_reps(&[3]).unwrap();
        assert_eq!(plus, Permutation::from_word(3, &[1, 2]).unwrap());
        assert_eq!(minus.unwrap(), Permutation::from_word(3, &[2, 1]).unwrap());
        assert!(split_class_reps(&[2, 2]).unwrap().1.is_none());
        let (plus, minus) = split_class_reps(&[5, 3, 1]).unwrap();
        assert_eq!(minus.unwrap(), plus.conj_s(1));
        assert!(split_class_reps(&[2, 1]).is_err());
    }

    #[test]
    fn minimal_length() {
        assert!(!is_min_length(
            &Permutation::from_word(3, &[1, 2, 1]).unwrap()
        ));
        assert!(is_min_length(&Permutation::identity(4)));
        assert!(is_min_length(&w_of_composition(&[2, 3, 1]).unwrap()));
    }

    #[test]
    fn reduction_examples() {
        let w = Permutation::from_word(3, &[1, 2, 1]).unwrap();
        let (sigma, path) = reduce_to_composition(&w);
        assert_eq!(path.len(), 1);
        assert_eq!(path[0].kind, StepKind::Drop2);
        assert_eq!(path[0].s, 1);
        assert_eq!(sigma.iter().sum::<usize>(), 3);
        let w = Permutation::from_word(3, &[2, 1]).unwrap();
        let (sigma, path) = reduce_to_composition(&w);
        assert_eq!(sigma, vec![3]);
        assert!(path.iter().all(|s| matches!(s.kind, StepKind::Flat { .. })));
        let wk = w_of_composition(&[2, 1]).unwrap();
        assert!(reduce_to_composition(&wk).1.is_empty());
    }

    #[test]
    fn alt_class_lists() {
        let labels = |n| -> Vec<String> {
            alt_classes(n)
                .unwrap()
                .iter()
                .map(|(c, _)| c.to_string())
                .collect()
        };
        assert_eq!(labels(3), vec!["(1,1,1)", "(3)+", "(3)-"]);
        assert_eq!(labels(4), vec!["(1,1,1,1)", "(2,2)", "(3,1)+", "(3,1)-"]);
        assert_eq!(labels(5).len(), 5);
    }

    #[test]
    fn enumeration_and_bruhat() {
        assert_eq!(Permutation::all(4).len(), 24);
        let e = Permutation::identity(3);
        let w0 = p(&[3, 2, 1]);
        assert!(e.bruhat_le(&w0));
        assert!(!w0.bruhat_le(&e));
        assert!(!p(&[2, 1, 3]).bruhat_le(&p(&[1, 3, 2])));
    }
}
