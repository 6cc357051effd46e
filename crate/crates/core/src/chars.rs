//! τ-characters and the character table of the alternating Hecke algebra.
//!
//! `χ^λ(T_w τ)` is available three ways: as a sum of γ-products over
//! transposable tableaux, by the closed formula on `w_κ`, and for arbitrary
//! `w` through the conjugation recursion down to some `w_σ`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::ToPrimitive;
use rand::Rng;
use rayon::prelude::*;

use crate::combinat::{
    content, eps_kappa, partitions_of, transposable_tableaux, Partition, StdTableau,
};
use crate::error::{Error, Result};
use crate::hecke::{b_in_a, t_in_b};
use crate::scalars::{
    alpha_coeff, indices_mask, neg_inv_qint, qint, GaussianRational, RatFunc, TowerElem,
};
use crate::specht::{char_t, char_ttau_oracle, SplitSign};
use crate::symgroup::{
    alt_classes, composition_word, is_min_length, next_steps, reduce_to_composition,
    w_of_composition, AltSign, ConjClass, Permutation, Step, StepKind,
};

fn memo<K, V>(cache: &RwLock<HashMap<K, V>>, key: &K, f: impl FnOnce() -> Result<V>) -> Result<V>
where
    K: Clone + Eq + Hash,
    V: Clone,
{
    if let Some(v) = cache.read().unwrap().get(key) {
        return Ok(v.clone());
    }
    let v = f()?;
    Ok(cache
        .write()
        .unwrap()
        .entry(key.clone())
        .or_insert(v)
        .clone())
}

fn half() -> RatFunc {
    RatFunc::from_gaussian(GaussianRational::from_ratio(1, 2))
}

/// Normalisation of the closed formula. `Literal` uses `σ = (−1)^m`; `Oracle`
/// fixes `σ = ζ^m` with `ζ` read off the trace oracle at `λ = (2,1)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Convention {
    #[default]
    Oracle,
    Literal,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Oracle => "oracle",
            Convention::Literal => "paper",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Convention::Oracle),
            "paper" => Ok(Convention::Literal),
            other => Err(Error::Parse(format!("unknown convention {other:?}"))),
        }
    }
}

/// `i^m q^{−m} ∏ y_{h_i}` for self-conjugate `λ`, and `m = (n − d(λ))/2`.
fn bare_unit(lam: &Partition) -> Result<(TowerElem, usize)> {
    let (h, d) = lam.diagonal_hooks()?;
    let m = (lam.size() - d) / 2;
    let ys: Vec<u32> = h.iter().map(|&k| k as u32).collect();
    let c = &RatFunc::i().pow(m as u32) * &RatFunc::q_pow(-(m as i32));
    Ok((TowerElem::y_product(&ys)?.scale(&c), m))
}

/// `ζ` with `σ = ζ^m`.
pub fn sign_base(conv: Convention) -> i64 {
    static ZETA: OnceLock<i64> = OnceLock::new();
    match conv {
        Convention::Literal => -1,
        Convention::Oracle => *ZETA.get_or_init(|| {
            let lam = Partition::new(vec![2, 1]).expect("partition");
            let w = w_of_composition(&[3]).expect("composition");
            let oracle = char_ttau_oracle(&lam, &w).expect("trace oracle");
            let (unit, _) = bare_unit(&lam).expect("self-conjugate");
            if oracle == unit {
                1
            } else if oracle == -unit {
                -1
            } else {
                panic!("τ-character of (2,1) at a 3-cycle is not ± the unit")
            }
        }),
    }
}

/// `σ = ζ^m`.
pub fn sigma(conv: Convention, m: usize) -> i64 {
    if m.is_multiple_of(2) {
        1
    } else {
        sign_base(conv)
    }
}

/// `σ i^m q^{−m} ∏ y_{h_i}`: the value of `χ^λ(T_{w_h} τ)` for `h = h(λ)`.
pub fn tau_unit(lam: &Partition, conv: Convention) -> Result<TowerElem> {
    let (u, m) = bare_unit(lam)?;
    Ok(u.scale_int(sigma(conv, m)))
}

fn check_tau_args(lam: &Partition, n: usize) -> Result<()> {
    if !lam.is_self_conjugate() {
        return Err(Error::NotSymmetric(lam.to_string()));
    }
    if lam.size() != n {
        return Err(Error::SizeMismatch(format!(
            "{lam} is not a partition of {n}"
        )));
    }
    Ok(())
}

/// The closed formula for `χ^λ(T_{w_κ} τ)`: `ε_κ` times the unit when the
/// sorted `κ` equals `h(λ)`, zero otherwise.
pub fn tau_char_closed(lam: &Partition, kappa: &[usize], conv: Convention) -> Result<TowerElem> {
    check_tau_args(lam, kappa.iter().sum())?;
    if kappa.contains(&0) {
        return Err(Error::MalformedComposition(format!(
            "{kappa:?} has a zero part"
        )));
    }
    let (h, _) = lam.diagonal_hooks()?;
    let mut sorted = kappa.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != h {
        return Ok(TowerElem::zero());
    }
    Ok(tau_unit(lam, conv)?.scale_int(eps_kappa(kappa)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GammaCase {
    /// `i` on the diagonal: `−1/[ρ_t(i)]`.
    Diag,
    /// `i` opposite `i−1`: `−1/[c(i−1) − c(i+1)]`.
    PrevOpp,
    /// `i` opposite `i+1`: `α_{ρ_t(i)}`.
    NextOpp,
}

impl fmt::Display for GammaCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaCase::Diag => "diag",
            GammaCase::PrevOpp => "prev-opp",
            GammaCase::NextOpp => "next-opp",
        })
    }
}

#[derive(Clone, Debug)]
pub struct GammaFactor {
    pub index: usize,
    pub case: GammaCase,
    pub value: TowerElem,
}

#[derive(Clone, Debug)]
pub struct GammaReport {
    pub tableau: StdTableau,
    pub factors: Vec<GammaFactor>,
    pub product: TowerElem,
}

fn transpose(cell: (usize, usize)) -> (usize, usize) {
    (cell.1, cell.0)
}

/// `γ_t` over the increasing word of `w_κ`, or `None` when `t` is not
/// `w_κ`-transposable (its contribution then vanishes).
pub fn gamma_of_tableau(t: &StdTableau, kappa: &[usize]) -> Result<Option<GammaReport>> {
    if !crate::combinat::is_w_transposable(t, kappa) {
        return Ok(None);
    }
    Ok(Some(gamma_transposable(t, kappa)?))
}

fn gamma_transposable(t: &StdTableau, kappa: &[usize]) -> Result<GammaReport> {
    let diag: BTreeSet<usize> = t.diagonal_entries().into_iter().collect();
    let mut factors = Vec::new();
    let mut product = TowerElem::one();
    for i in composition_word(kappa) {
        let ci = t.content(i)?;
        let cn = t.content(i + 1)?;
        let (case, value) = if diag.contains(&i) {
            (GammaCase::Diag, neg_inv_qint(ci - cn)?)
        } else if i > 1 && t.position(i - 1) == transpose(t.position(i)) {
            let rho = t.content(i - 1)? - cn;
            if rho == 0 {
                return Err(Error::DegenerateContents(t.content(i - 1)?, cn));
            }
            (GammaCase::PrevOpp, neg_inv_qint(rho)?)
        } else {
            debug_assert_eq!(t.position(i + 1), transpose(t.position(i)));
            (GammaCase::NextOpp, alpha_coeff(ci - cn)?)
        };
        product = &product * &value;
        factors.push(GammaFactor {
            index: i,
            case,
            value,
        });
    }
    Ok(GammaReport {
        tableau: t.clone(),
        factors,
        product,
    })
}

/// `Σ_t γ_t` over the `w_κ`-transposable standard `λ`-tableaux.
pub fn tau_char_sum(lam: &Partition, kappa: &[usize]) -> Result<TowerElem> {
    check_tau_args(lam, kappa.iter().sum())?;
    let mut acc = TowerElem::zero();
    for t in transposable_tableaux(lam, kappa) {
        acc.add_assign_ref(&gamma_transposable(&t, kappa)?.product);
    }
    Ok(acc)
}

/// For `t` with two diagonal entries `a < b` in one cycle of `w_κ` (`b`
/// minimal), the tableau `t s_{a+1} s_{a+3} ⋯ s_{b−2}`.
pub fn technical_partner(t: &StdTableau, kappa: &[usize]) -> Result<Option<StdTableau>> {
    let blocks = crate::combinat::composition_blocks(kappa);
    let diag = t.diagonal_entries();
    let mut best: Option<(usize, usize)> = None;
    for (k, &b) in diag.iter().enumerate() {
        for &a in &diag[..k] {
            if a < b && blocks[a - 1] == blocks[b - 1] && best.is_none_or(|(_, bb)| b < bb) {
                best = Some((a, b));
            }
        }
    }
    let Some((a, b)) = best else { return Ok(None) };
    let mut s = t.clone();
    let mut j = a + 1;
    while j + 1 < b {
        s = s.apply_s(j)?.0;
        j += 2;
    }
    Ok(Some(s))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairingReport {
    pub paired: usize,
    pub cancelled: usize,
}

/// Checks that every transposable tableau with a repeated-cycle diagonal is
/// paired with a transposable partner whose γ-product is its negative.
pub fn technical_pairing_check(lam: &Partition, kappa: &[usize]) -> Result<PairingReport> {
    check_tau_args(lam, kappa.iter().sum())?;
    let mut report = PairingReport::default();
    for t in transposable_tableaux(lam, kappa) {
        let Some(s) = technical_partner(&t, kappa)? else {
            continue;
        };
        report.paired += 1;
        let ok = s.is_standard()
            && crate::combinat::is_w_transposable(&s, kappa)
            && technical_partner(&s, kappa)?.as_ref() == Some(&t)
            && (&gamma_transposable(&s, kappa)?.product + &gamma_transposable(&t, kappa)?.product)
                .is_zero();
        if ok {
            report.cancelled += 1;
        }
    }
    Ok(report)
}

/// A poset on `x_0, …, x_m` whose Hasse diagram only joins consecutive
/// labels; `rel[i]` is `Some(true)` for `x_i ⋖ x_{i+1}`, `Some(false)` for
/// `x_{i+1} ⋖ x_i`, `None` when they are incomparable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemilinearPoset {
    rel: Vec<Option<bool>>,
}

impl SemilinearPoset {
    pub fn new(rel: Vec<Option<bool>>) -> Self {
        SemilinearPoset { rel }
    }

    /// Builds the labelled poset from cells under the product order, with
    /// `cells[i]` playing `x_i`.
    pub fn from_cells(cells: &[(usize, usize)]) -> Result<Self> {
        let le = |a: (usize, usize), b: (usize, usize)| a.0 <= b.0 && a.1 <= b.1;
        let mut rel = vec![None; cells.len().saturating_sub(1)];
        for (i, &a) in cells.iter().enumerate() {
            for (j, &b) in cells.iter().enumerate() {
                if i == j || !le(a, b) {
                    continue;
                }
                let covered = !cells
                    .iter()
                    .any(|&c| c != a && c != b && le(a, c) && le(c, b));
                if !covered {
                    continue;
                }
                if i.abs_diff(j) != 1 {
                    return Err(Error::NotSemilinear(format!("x_{i} ⋖ x_{j}")));
                }
                rel[i.min(j)] = Some(i < j);
            }
        }
        Ok(SemilinearPoset { rel })
    }

    /// Random orientation of each consecutive pair.
    pub fn random<R: Rng>(rng: &mut R, m: usize) -> Self {
        let rel = (0..m)
            .map(|_| match rng.gen_range(0..3) {
                0 => Some(true),
                1 => Some(false),
                _ => None,
            })
            .collect();
        SemilinearPoset { rel }
    }

    pub fn relations(&self) -> &[Option<bool>] {
        &self.rel
    }

    pub fn size(&self) -> usize {
        self.rel.len() + 1
    }

    pub fn less(&self, i: usize, j: usize) -> bool {
        if i < j {
            self.rel[i..j].iter().all(|r| *r == Some(true))
        } else if j < i {
            self.rel[j..i].iter().all(|r| *r == Some(false))
        } else {
            false
        }
    }

    /// `ε_X = ∏ ε_X(i)`.
    pub fn eps(&self) -> i64 {
        self.rel
            .iter()
            .map(|r| match r {
                Some(true) => 1,
                Some(false) => -1,
                None => 0,
            })
            .product()
    }

    /// Linear extensions as sequences `f*(0), …, f*(m)` of labels.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let size = self.size();
        let mut out = Vec::new();
        let mut seq = Vec::with_capacity(size);
        let mut used = vec![false; size];
        fn rec(
            p: &SemilinearPoset,
            seq: &mut Vec<usize>,
            used: &mut [bool],
            out: &mut Vec<Vec<usize>>,
        ) {
            if seq.len() == used.len() {
                out.push(seq.clone());
                return;
            }
            for x in 0..used.len() {
                if used[x] || (0..used.len()).any(|y| !used[y] && p.less(y, x)) {
                    continue;
                }
                used[x] = true;
                seq.push(x);
                rec(p, seq, used, out);
                seq.pop();
                used[x] = false;
            }
        }
        rec(self, &mut seq, &mut used, &mut out);
        out
    }
}

/// `q^{2c(e_m)} ∏ 1/[c(e_{i+1}) − c(e_i)]` along a sequence of labels.
fn greene_term(seq: &[usize], c: &[i64]) -> Result<RatFunc> {
    let mut acc = RatFunc::q_pow(2 * c[*seq.last().unwrap()] as i32);
    for w in seq.windows(2) {
        let (a, b) = (c[w[0]], c[w[1]]);
        if a == b {
            return Err(Error::DegenerateContents(a, b));
        }
        acc = &acc * &qint(b - a).inv()?;
    }
    Ok(acc)
}

fn check_contents(p: &SemilinearPoset, c: &[i64]) -> Result<()> {
    if c.len() != p.size() {
        return Err(Error::SizeMismatch(format!(
            "{} contents for {} elements",
            c.len(),
            p.size()
        )));
    }
    Ok(())
}

/// Sum over linear extensions of the Greene summand.
pub fn greene_lhs(p: &SemilinearPoset, c: &[i64]) -> Result<RatFunc> {
    check_contents(p, c)?;
    let mut acc = RatFunc::zero();
    for seq in p.linear_extensions() {
        acc = &acc + &greene_term(&seq, c)?;
    }
    Ok(acc)
}

/// `ε_X q^{2c_m} ∏ 1/[c_{i+1} − c_i]`.
pub fn greene_rhs(p: &SemilinearPoset, c: &[i64]) -> Result<RatFunc> {
    check_contents(p, c)?;
    let eps = p.eps();
    if eps == 0 {
        return Ok(RatFunc::zero());
    }
    let id: Vec<usize> = (0..p.size()).collect();
    Ok(greene_term(&id, c)?.scale(&GaussianRational::from_int(eps)))
}

pub fn greene_identity(p: &SemilinearPoset, c: &[i64]) -> Result<(RatFunc, RatFunc)> {
    Ok((greene_lhs(p, c)?, greene_rhs(p, c)?))
}

/// Both sides of `Σ_ε (∏ε_i) q^{2c(m)} ∏ 1/[c(i+1) − c(i)] = q^{−m} ∏ [2i]/[2i−1]`
/// with `c(i) = ε_i i` and `ε_0 = 1`.
pub fn cute_identity(m: usize) -> Result<(RatFunc, RatFunc)> {
    let mut lhs = RatFunc::zero();
    for bits in 0u64..(1 << m) {
        let eps = |i: usize| {
            if i == 0 || bits >> (i - 1) & 1 == 0 {
                1i64
            } else {
                -1
            }
        };
        let c: Vec<i64> = (0..=m).map(|i| eps(i) * i as i64).collect();
        let sign: i64 = (1..=m).map(eps).product();
        let id: Vec<usize> = (0..=m).collect();
        lhs = &lhs + &greene_term(&id, &c)?.scale(&GaussianRational::from_int(sign));
    }
    let mut rhs = RatFunc::q_pow(-(m as i32));
    for i in 1..=m as i64 {
        rhs = &(&rhs * &qint(2 * i)) / &qint(2 * i - 1);
    }
    Ok((lhs, rhs))
}

/// Outcome of the per-class check for one cycle `z` of `w_κ`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EquivReport {
    pub transposable: usize,
    pub class_sizes: Vec<usize>,
    /// Classes whose members biject onto the linear extensions of `X`.
    pub bijective: usize,
    /// Classes whose γ-sum matches the signed Greene value.
    pub matched: usize,
    /// Classes whose γ-sum matches the value with the extra `(−1)^{m_z}`.
    pub literal_matched: usize,
    /// Classes whose `X` admits no compatible labelling.
    pub unlabelled: usize,
}

impl EquivReport {
    pub fn classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn largest_class(&self) -> usize {
        self.class_sizes.iter().copied().max().unwrap_or(0)
    }
}

struct ClassMember {
    ranks: Vec<usize>,
    gamma: TowerElem,
}

fn block_bounds(kappa: &[usize], z: usize) -> (usize, usize) {
    let lo: usize = kappa[..z - 1].iter().sum();
    (lo, lo + kappa[z - 1])
}

fn check_odd_blocks(lam: &Partition, kappa: &[usize]) -> Result<()> {
    check_tau_args(lam, kappa.iter().sum())?;
    if kappa.len() != lam.diagonal_len() || kappa.iter().any(|k| k % 2 == 0) {
        return Err(Error::SizeMismatch(format!(
            "{kappa:?} must have d({lam}) = {} odd parts",
            lam.diagonal_len()
        )));
    }
    Ok(())
}

/// Cells of `X_{t,z}`, the part of the `z`-th block on or above the diagonal.
fn x_cells(t: &StdTableau, lo: usize, hi: usize) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> = (lo + 1..=hi)
        .map(|i| t.position(i))
        .filter(|&(r, c)| c >= r)
        .collect();
    cells.sort_by_key(|&cell| (content(cell), cell));
    cells
}

fn cell_le(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Linear extensions of cells under the product order, as rank vectors.
fn cell_linear_extensions(cells: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let k = cells.len();
    let mut out = Vec::new();
    let mut ranks = vec![usize::MAX; k];
    fn rec(
        cells: &[(usize, usize)],
        next: usize,
        ranks: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if next == cells.len() {
            out.push(ranks.clone());
            return;
        }
        for x in 0..cells.len() {
            let free = ranks[x] == usize::MAX
                && (0..cells.len())
                    .all(|y| y == x || ranks[y] != usize::MAX || !cell_le(cells[y], cells[x]));
            if free {
                ranks[x] = next;
                rec(cells, next + 1, ranks, out);
                ranks[x] = usize::MAX;
            }
        }
    }
    rec(cells, 0, &mut ranks, &mut out);
    out.sort();
    out
}

/// A compatible labelling of cells: the Hasse diagram must be a disjoint
/// union of paths, each walked from its lowest-content end, components
/// ordered by lowest content.
fn label_cells(cells: &[(usize, usize)]) -> Option<Vec<(usize, usize)>> {
    let k = cells.len();
    let mut adj = vec![Vec::new(); k];
    for a in 0..k {
        for b in 0..k {
            let covers = a != b
                && cell_le(cells[a], cells[b])
                && !(0..k).any(|c| {
                    c != a && c != b && cell_le(cells[a], cells[c]) && cell_le(cells[c], cells[b])
                });
            if covers {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
    }
    if adj.iter().any(|v| v.len() > 2) {
        return None;
    }
    let mut seen = vec![false; k];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (content(cells[i]), cells[i]));
    for &start in &order {
        if seen[start] || adj[start].len() == 2 {
            continue;
        }
        let mut path = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(&nx) = adj[cur].iter().find(|&&y| !seen[y]) {
            seen[nx] = true;
            path.push(nx);
            cur = nx;
        }
        comps.push(path);
    }
    // anything left lies on a cycle
    if seen.iter().any(|s| !s) {
        return None;
    }
    comps.sort_by_key(|c| c.iter().map(|&i| content(cells[i])).min());
    Some(comps.concat().into_iter().map(|i| cells[i]).collect())
}

/// Groups the `w_κ`-transposable tableaux into `∼_z` classes and compares
/// each class sum of `γ_{t,z}` with the signed Greene value.
pub fn equiv_class_check(lam: &Partition, kappa: &[usize], z: usize) -> Result<EquivReport> {
    check_odd_blocks(lam, kappa)?;
    if z == 0 || z > kappa.len() {
        return Err(Error::BadIndex {
            index: z,
            n: kappa.len(),
        });
    }
    let (lo, hi) = block_bounds(kappa, z);
    let m = (kappa[z - 1] - 1) / 2;
    let omega = (z - 1, z - 1);
    type Key = (Vec<(usize, usize)>, Vec<Vec<usize>>, Vec<i8>);
    let mut classes: BTreeMap<Key, Vec<ClassMember>> = BTreeMap::new();
    let tableaux = transposable_tableaux(lam, kappa);
    for t in &tableaux {
        let xs = match label_cells(&x_cells(t, lo, hi)) {
            Some(labelled) => labelled,
            None => x_cells(t, lo, hi),
        };
        let val = |cell| t.entry(cell).expect("cell in shape");
        let signs: Vec<i8> = xs
            .iter()
            .map(|&x| {
                let e = val(transpose(x)) >= val(x);
                let e_omega = val(x) >= val(omega);
                if e == e_omega {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let outside: Vec<Vec<usize>> = t
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| if x > lo && x <= hi { 0 } else { x })
                    .collect()
            })
            .collect();
        let ranks: Vec<usize> = xs
            .iter()
            .map(|&x| xs.iter().filter(|&&y| val(y) < val(x)).count())
            .collect();
        let report = gamma_transposable(t, kappa)?;
        let mut gamma = TowerElem::one();
        for f in report
            .factors
            .iter()
            .filter(|f| f.index > lo && f.index < hi)
        {
            gamma = &gamma * &f.value;
        }
        classes
            .entry((xs, outside, signs))
            .or_default()
            .push(ClassMember { ranks, gamma });
    }
    let mut report = EquivReport {
        transposable: tableaux.len(),
        ..Default::default()
    };
    for ((xs, _, signs), members) in &classes {
        report.class_sizes.push(members.len());
        let mut ranks: Vec<Vec<usize>> = members.iter().map(|mem| mem.ranks.clone()).collect();
        ranks.sort();
        if ranks == cell_linear_extensions(xs) {
            report.bijective += 1;
        }
        if xs.len() != m + 1 || label_cells(xs).as_deref() != Some(&xs[..]) {
            report.unlabelled += 1;
            continue;
        }
        let poset = SemilinearPoset::from_cells(xs)?;
        let mut sum = TowerElem::zero();
        for mem in members {
            sum.add_assign_ref(&mem.gamma);
        }
        let eps_t: i64 = signs.iter().map(|&s| s as i64).product();
        let c_t: Vec<i64> = signs
            .iter()
            .zip(xs)
            .map(|(&s, &x)| s as i64 * content(x))
            .collect();
        let mut alpha = TowerElem::one();
        for &x in xs.iter().filter(|&&x| x != omega) {
            alpha = &alpha * &alpha_coeff(2 * content(x))?;
        }
        let value = alpha.scale(&greene_rhs(&poset, &c_t)?).scale_int(eps_t);
        if sum == value {
            report.matched += 1;
        }
        if sum == value.scale_int(if m.is_multiple_of(2) { 1 } else { -1 }) {
            report.literal_matched += 1;
        }
    }
    Ok(report)
}

/// `∏_z ε_{X_z}` for each transposable tableau. Returns the distinct values
/// found (`None` when some `X_z` has no compatible labelling).
pub fn eps_x_products(lam: &Partition, kappa: &[usize]) -> Result<BTreeSet<Option<i64>>> {
    check_odd_blocks(lam, kappa)?;
    let mut out = BTreeSet::new();
    for t in transposable_tableaux(lam, kappa) {
        let mut prod = Some(1i64);
        for z in 1..=kappa.len() {
            let (lo, hi) = block_bounds(kappa, z);
            let eps = label_cells(&x_cells(&t, lo, hi))
                .and_then(|xs| SemilinearPoset::from_cells(&xs).ok())
                .map(|p| p.eps());
            prod = prod.zip(eps).map(|(a, b)| a * b);
        }
        out.insert(prod);
    }
    Ok(out)
}

/// Coefficients `c_k` with `f = Σ c_k (q − q⁻¹)^k`, when `f ∈ Z[q − q⁻¹]`.
pub fn qq_expansion(f: &RatFunc) -> Option<Vec<i64>> {
    let mut rest = f.as_laurent()?.clone();
    let qq = RatFunc::q_minus_qinv();
    let qq = qq.as_laurent().unwrap();
    let mut coeffs: Vec<i64> = Vec::new();
    while !rest.is_zero() {
        let d = rest.high_exp();
        if d < 0 {
            return None;
        }
        let c = rest.coeff(d);
        if !c.is_real() || !c.re.is_integer() {
            return None;
        }
        let ci = c.re.to_integer().to_i64()?;
        if coeffs.len() <= d as usize {
            coeffs.resize(d as usize + 1, 0);
        }
        coeffs[d as usize] = ci;
        let mut power = crate::scalars::LaurentPoly::from_int(ci);
        for _ in 0..d {
            power = &power * qq;
        }
        rest = &rest - &power;
    }
    Some(coeffs)
}

/// Class polynomials `f_{C,w}` keyed by cycle type, with
/// `χ(T_w) = Σ_C f_{C,w} χ(T_{w_C})` for every character of `H_n`.
pub type ClassPoly = BTreeMap<Vec<usize>, RatFunc>;

fn add_scaled<K: Ord + Clone>(
    acc: &mut BTreeMap<K, RatFunc>,
    other: &BTreeMap<K, RatFunc>,
    c: &RatFunc,
) {
    for (k, v) in other {
        let e = acc.entry(k.clone()).or_insert_with(RatFunc::zero);
        *e = &*e + &(v * c);
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

pub fn class_polys(w: &Permutation) -> Arc<ClassPoly> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, Arc<ClassPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    memo(cache, w, || {
        let mut out = ClassPoly::new();
        if w.as_composition().is_some() {
            out.insert(w.cycle_type(), RatFunc::one());
            return Ok(Arc::new(out));
        }
        let step = &next_steps(w)[0];
        add_scaled(&mut out, &class_polys(&step.to), &RatFunc::one());
        if step.kind == StepKind::Drop2 {
            add_scaled(
                &mut out,
                &class_polys(&w.left_mul_s(step.s)),
                &RatFunc::q_minus_qinv(),
            );
        }
        Ok(Arc::new(out))
    })
    .expect("class polynomial recursion is infallible")
}

fn tau_rec(lam: &Partition, w: &Permutation) -> Result<TowerElem> {
    type Cache = RwLock<HashMap<(Partition, Permutation), TowerElem>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    memo(cache, &(lam.clone(), w.clone()), || {
        if let Some(sigma) = w.as_composition() {
            return tau_char_closed(lam, &sigma, Convention::Oracle);
        }
        let step = &next_steps(w)[0];
        let mut v = -tau_rec(lam, &step.to)?;
        if let StepKind::Flat { .. } = step.kind {
            v.add_assign_ref(&tau_rec(lam, &step.shorter())?.scale(&RatFunc::q_minus_qinv()));
        }
        Ok(v)
    })
}

/// `χ^λ(T_w τ)` by the conjugation recursion, with the coefficient `a^λ_w`
/// relative to the unit and the rewriting path to `w_σ`.
#[derive(Clone, Debug)]
pub struct TauGeneral {
    pub value: TowerElem,
    pub a: RatFunc,
    pub sigma: Vec<usize>,
    pub path: Vec<Step>,
}

pub fn tau_char_general(lam: &Partition, w: &Permutation, conv: Convention) -> Result<TauGeneral> {
    check_tau_args(lam, w.n())?;
    let (_, m) = bare_unit(lam)?;
    let flip = sigma(conv, m) * sigma(Convention::Oracle, m);
    let value = tau_rec(lam, w)?.scale_int(flip);
    let a = unit_coefficient(lam, &value, conv)?;
    let (sigma, path) = reduce_to_composition(w);
    Ok(TauGeneral {
        value,
        a,
        sigma,
        path,
    })
}

/// `a` with `value = a · tau_unit(λ)`.
pub fn unit_coefficient(lam: &Partition, value: &TowerElem, conv: Convention) -> Result<RatFunc> {
    if value.is_zero() {
        return Ok(RatFunc::zero());
    }
    let unit = tau_unit(lam, conv)?;
    let (mu, cu) = unit.as_single_term().expect("unit is a monomial");
    match value.as_single_term() {
        Some((mv, cv)) if mv == mu => Ok(cv / cu),
        _ => Err(Error::SizeMismatch(format!(
            "value is not a multiple of y-mask {mu:#x}"
        ))),
    }
}

/// Mask of `∏ y_{h_i}` for self-conjugate `λ`.
pub fn hook_mask(lam: &Partition) -> Result<u32> {
    let (h, _) = lam.diagonal_hooks()?;
    let ys: Vec<u32> = h.iter().map(|&k| k as u32).filter(|&k| k > 1).collect();
    indices_mask(&ys)
}

/// Class polynomials `g_{C,w}` of the alternating algebra, with
/// `χ(A_w) = Σ_C g_{C,w} χ(A_{w_C})` over the `A_n` classes.
pub type AltClassPoly = BTreeMap<ConjClass, RatFunc>;

/// The B-basis recursion, which only sees `S_n` cycle types: for a split
/// type it yields `g_{C⁺,w} + g_{C⁻,w}`.
pub fn merged_alt_class_polys(w: &Permutation) -> Result<Arc<ClassPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<Permutation, Arc<ClassPoly>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if !w.is_even() {
        return Err(Error::OddPermutation);
    }
    memo(cache, w, || {
        let mut out = ClassPoly::new();
        if is_min_length(w) {
            out.insert(w.cycle_type(), RatFunc::one());
            return Ok(Arc::new(out));
        }
        for (ct, f) in class_polys(w).iter() {
            let wc = w_of_composition(ct)?;
            for (y, s) in t_in_b(&wc) {
                if !y.is_even() {
                    continue;
                }
                let fs = f * &s;
                for (x, r) in b_in_a(&y) {
                    if x == *w {
                        return Err(Error::SizeMismatch(format!(
                            "alternating recursion does not shorten {w}"
                        )));
                    }
                    add_scaled(&mut out, &*merged_alt_class_polys(&x)?, &(&fs * &r));
                }
            }
        }
        Ok(Arc::new(out))
    })
}

/// Splits the merged coefficients with `g_{C⁺,w} − g_{C⁻,w} = a^λ_w`, where
/// `h(λ)` is the cycle type of `C`.
pub fn alt_class_polys(w: &Permutation) -> Result<AltClassPoly> {
    let merged = merged_alt_class_polys(w)?;
    let mut out = AltClassPoly::new();
    for (class, _) in alt_classes(w.n())? {
        let total = merged
            .get(&class.cycle_type)
            .cloned()
            .unwrap_or_else(RatFunc::zero);
        let g = match class.alt_sign {
            AltSign::Whole => total,
            sign => {
                let lam = Partition::from_diagonal_hooks(&class.cycle_type)?;
                let a = tau_char_general(&lam, w, Convention::Oracle)?.a;
                let diff = if sign == AltSign::Plus { a } else { -a };
                &(&total + &diff) * &half()
            }
        };
        if !g.is_zero() {
            out.insert(class, g);
        }
    }
    Ok(out)
}

/// A row of the alternating character table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RowLabel {
    /// `χ^λ_A = χ^{λ′}_A` for `λ ≠ λ′` (or `n = 1`), labelled by the larger.
    Pair(Partition),
    /// `χ^{λ±}_A` for self-conjugate `λ`.
    Split(Partition, SplitSign),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Pair(l) => write!(f, "{l}"),
            RowLabel::Split(l, SplitSign::Plus) => write!(f, "{l}+"),
            RowLabel::Split(l, SplitSign::Minus) => write!(f, "{l}-"),
        }
    }
}

pub fn row_labels(n: usize) -> Vec<RowLabel> {
    let mut rows = Vec::new();
    for lam in partitions_of(n) {
        let conj = lam.conjugate();
        if lam == conj && n > 1 {
            rows.push(RowLabel::Split(lam.clone(), SplitSign::Plus));
            rows.push(RowLabel::Split(lam, SplitSign::Minus));
        } else if lam >= conj {
            rows.push(RowLabel::Pair(lam));
        }
    }
    rows
}

/// `χ_A(A_w)` for a row label and even `w`, using `½(χ^λ + χ^{λ′})(T_w)` for
/// pairs and `½χ^λ(T_w) ± ½χ^λ(T_w τ)` for split rows.
pub fn table_cell(row: &RowLabel, w: &Permutation, conv: Convention) -> Result<TowerElem> {
    if !w.is_even() {
        return Err(Error::OddPermutation);
    }
    let v = match row {
        RowLabel::Pair(lam) => &char_t(lam, w)? + &char_t(&lam.conjugate(), w)?,
        RowLabel::Split(lam, sign) => {
            &char_t(lam, w)? + &tau_char_general(lam, w, conv)?.value.scale_int(sign.sign())
        }
    };
    Ok(v.scale(&half()))
}

#[derive(Clone, Debug)]
pub struct CharTable {
    pub n: usize,
    pub convention: Convention,
    pub rows: Vec<RowLabel>,
    pub cols: Vec<(ConjClass, Permutation)>,
    pub cells: Vec<Vec<TowerElem>>,
}

/// The character table of the alternating Hecke algebra on the `A_n` class
/// representatives of minimal length.
pub fn char_table(n: usize, conv: Convention) -> Result<CharTable> {
    if n == 0 {
        return Err(Error::SizeMismatch("the table needs n ≥ 1".into()));
    }
    let rows = row_labels(n);
    let cols = alt_classes(n)?;
    let cells = rows
        .par_iter()
        .map(|row| {
            cols.iter()
                .map(|(_, w)| table_cell(row, w, conv))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharTable {
        n,
        convention: conv,
        rows,
        cols,
        cells,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::compositions_of;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn oracle_sign_base_is_positive() {
        assert_eq!(sign_base(Convention::Oracle), 1);
    }

    #[test]
    fn gamma_sum_matches_closed_and_oracle() {
        for n in 1..=6 {
            for lam in partitions_of(n)
                .into_iter()
                .filter(Partition::is_self_conjugate)
            {
                for kappa in compositions_of(n) {
                    let w = w_of_composition(&kappa).unwrap();
                    let oracle = char_ttau_oracle(&lam, &w).unwrap();
                    assert_eq!(
                        tau_char_sum(&lam, &kappa).unwrap(),
                        oracle,
                        "{lam} {kappa:?}"
                    );
                    assert_eq!(
                        tau_char_closed(&lam, &kappa, Convention::Oracle).unwrap(),
                        oracle
                    );
                }
            }
        }
    }

    #[test]
    fn recursion_matches_oracle() {
        for n in 1..=5 {
            for lam in partitions_of(n)
                .into_iter()
                .filter(Partition::is_self_conjugate)
            {
                for w in Permutation::all(n) {
                    let g = tau_char_general(&lam, &w, Convention::Oracle).unwrap();
                    assert_eq!(g.value, char_ttau_oracle(&lam, &w).unwrap(), "{lam} {w}");
                }
            }
        }
    }

    #[test]
    fn worked_example_counts() {
        let lam = part(&[6, 3, 2, 1, 1, 1]);
        let r = equiv_class_check(&lam, &[7, 7], 2).unwrap();
        assert_eq!(r.transposable, 384);
        assert!(r.class_sizes.contains(&6));
    }

    #[test]
    fn cute_identity_small() {
        for m in 0..=5 {
            let (l, r) = cute_identity(m).unwrap();
            assert_eq!(l, r, "m = {m}");
        }
    }

    #[test]
    fn qq_expansion_roundtrip() {
        let qq = RatFunc::q_minus_qinv();
        let f = &(&qq * &qq).scale(&GaussianRational::from_int(3)) - &RatFunc::from_int(2);
        assert_eq!(qq_expansion(&f), Some(vec![-2, 0, 3]));
        assert_eq!(qq_expansion(&RatFunc::q()), None);
    }
}
