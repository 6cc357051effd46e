//! Partitions, compositions, standard tableaux, contents, diagonal hooks and
//! symmetric coverings.
//!
//! Cells are 0-based `(row, col)` pairs; tableau entries are `1..=n`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition `λ = (λ₁ ≥ λ₂ ≥ … > 0)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::MalformedComposition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts.into_iter().filter(|&p| p > 0).collect()))
    }

    /// Sorts the parts of a composition into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Partition::new(parse_composition(s)?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` for 0-based `i`, zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&p| p > c).count())
                .collect(),
        )
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().enumerate().all(|(i, &m)| m <= self.part(i))
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
            .collect()
    }

    /// Number of diagonal cells `d(λ) = max{i : λ_i ≥ i}`.
    pub fn diagonal_len(&self) -> usize {
        self.0
            .iter()
            .enumerate()
            .take_while(|(i, &p)| p > *i)
            .count()
    }

    /// Diagonal hook lengths `h_i = λ_i + λ'_i - 2i + 1` and `d(λ)`.
    pub fn diagonal_hooks(&self) -> Result<(Vec<usize>, usize)> {
        if !self.is_self_conjugate() {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        let conj = self.conjugate();
        let d = self.diagonal_len();
        let h = (0..d)
            .map(|i| self.part(i) + conj.part(i) - 2 * i - 1)
            .collect();
        Ok((h, d))
    }

    /// The self-conjugate partition with the given strictly decreasing odd
    /// diagonal hooks.
    pub fn from_diagonal_hooks(h: &[usize]) -> Result<Partition> {
        let ok = h.iter().all(|k| k % 2 == 1) && h.windows(2).all(|w| w[0] > w[1]);
        if !ok {
            return Err(Error::MalformedComposition(format!(
                "{h:?} are not distinct odd hooks in decreasing order"
            )));
        }
        let d = h.len();
        let mut parts: Vec<usize> = h
            .iter()
            .enumerate()
            .map(|(i, k)| k.div_ceil(2) + i)
            .collect();
        // rows below the diagonal come from the conjugate arms
        let arms = Partition(parts.clone());
        let mut r = d;
        loop {
            let len = (0..d).filter(|&i| arms.part(i) > r).count();
            if len == 0 {
                break;
            }
            parts.push(len);
            r += 1;
        }
        let p = Partition::new(parts)?;
        debug_assert!(p.is_self_conjugate());
        Ok(p)
    }

    /// Number of standard tableaux by the hook length formula.
    pub fn hook_formula(&self) -> BigUint {
        let conj = self.conjugate();
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= k;
        }
        let mut den = BigUint::one();
        for (r, c) in self.cells() {
            den *= self.part(r) - c + conj.part(c) - r - 1;
        }
        num / den
    }

    /// Partitions `μ ⊆ λ` with `|μ| = k`.
    pub fn subpartitions_of_size(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(
            lam: &Partition,
            k: usize,
            row: usize,
            bound: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if k == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            let cap = bound.min(lam.part(row)).min(k);
            for p in (1..=cap).rev() {
                cur.push(p);
                rec(lam, k - p, row + 1, p, cur, out);
                cur.pop();
            }
        }
        rec(self, k, 0, usize::MAX, &mut cur, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"3,1,7"` into a composition (zero parts rejected).
pub fn parse_composition(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let v = t
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))?;
            if v == 0 {
                return Err(Error::MalformedComposition(s.to_string()));
            }
            Ok(v)
        })
        .collect()
}

/// All partitions of `n` in lexicographically decreasing order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All `2^{n-1}` compositions of `n`, lexicographically decreasing.
pub fn compositions_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rem).rev() {
            cur.push(p);
            rec(rem - p, cur, out);
            cur.pop();
        }
    }
    rec(n, &mut cur, &mut out);
    out
}

/// Cells of `λ/μ`.
pub fn skew_cells(lambda: &Partition, mu: &Partition) -> Vec<(usize, usize)> {
    lambda
        .cells()
        .into_iter()
        .filter(|&(r, c)| c >= mu.part(r))
        .collect()
}

pub fn content(cell: (usize, usize)) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

/// `(-1)^{#{y<z : κ_y < κ_z}}`.
pub fn eps_kappa(kappa: &[usize]) -> i64 {
    let mut inv = 0;
    for y in 0..kappa.len() {
        for z in y + 1..kappa.len() {
            if kappa[y] < kappa[z] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A filling of a partition diagram by `1..=n` (standard unless produced by
/// [`StdTableau::apply_s`] with a `false` flag).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StdTableau {
    rows: Vec<Vec<usize>>,
    pos: Vec<(usize, usize)>,
}

impl StdTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut pos = vec![(usize::MAX, usize::MAX); n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > n || pos[x - 1].0 != usize::MAX {
                    return Err(Error::Parse(format!(
                        "rows {rows:?} are not a filling of 1..{n}"
                    )));
                }
                pos[x - 1] = (r, c);
            }
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Parse(format!(
                "rows {rows:?} do not form a partition shape"
            )));
        }
        Ok(StdTableau { rows, pos })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn entry(&self, cell: (usize, usize)) -> Option<usize> {
        self.rows.get(cell.0).and_then(|r| r.get(cell.1)).copied()
    }

    /// Cell holding `i`.
    pub fn position(&self, i: usize) -> (usize, usize) {
        self.pos[i - 1]
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            return Err(Error::BadIndex {
                index: i,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// `c_t(i) = col - row` of the cell holding `i`.
    pub fn content(&self, i: usize) -> Result<i64> {
        self.check_index(i)?;
        Ok(content(self.pos[i - 1]))
    }

    /// Axial distance `ρ_t(i) = c_t(i) - c_t(i+1)`.
    pub fn axial(&self, i: usize) -> Result<i64> {
        if i == 0 || i >= self.n() {
            return Err(Error::BadIndex {
                index: i,
                n: self.n(),
            });
        }
        Ok(content(self.pos[i - 1]) - content(self.pos[i]))
    }

    pub fn is_standard(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if c + 1 < row.len() && row[c + 1] < x {
                    return false;
                }
                if let Some(&below) = self.rows.get(r + 1).and_then(|nr| nr.get(c)) {
                    if below < x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The transposed tableau `t'(c, r) = t(r, c)`.
    pub fn conjugate(&self) -> StdTableau {
        let width = self.rows.first().map_or(0, Vec::len);
        let rows: Vec<Vec<usize>> = (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect();
        StdTableau {
            pos: self.pos.iter().map(|&(r, c)| (c, r)).collect(),
            rows,
        }
    }

    /// Exchanges `i` and `i+1`; the flag reports whether the result is standard.
    pub fn apply_s(&self, i: usize) -> Result<(StdTableau, bool)> {
        if i == 0 || i >= self.n() {
            return Err(Error::BadIndex {
                index: i,
                n: self.n(),
            });
        }
        let mut t = self.clone();
        let (a, b) = (t.pos[i - 1], t.pos[i]);
        t.rows[a.0][a.1] = i + 1;
        t.rows[b.0][b.1] = i;
        t.pos.swap(i - 1, i);
        let standard = a.0 != b.0 && a.1 != b.1 && t.is_standard();
        Ok((t, standard))
    }

    pub fn has_2_in_first_row(&self) -> bool {
        self.n() >= 2 && self.pos[1].0 == 0
    }

    /// Entries on the main diagonal.
    pub fn diagonal_entries(&self) -> Vec<usize> {
        (0..self.rows.len())
            .filter_map(|r| self.entry((r, r)))
            .collect()
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                format!(
                    "[{}]",
                    r.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

impl fmt::Debug for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type TableauCache = RwLock<HashMap<Partition, Arc<Vec<StdTableau>>>>;

fn tableau_cache() -> &'static TableauCache {
    static CACHE: OnceLock<TableauCache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// All standard `λ`-tableaux, ordered lexicographically by row reading word.
pub fn std_tableaux(lambda: &Partition) -> Arc<Vec<StdTableau>> {
    if let Some(v) = tableau_cache().read().unwrap().get(lambda) {
        return v.clone();
    }
    let computed = Arc::new(enumerate_tableaux(lambda));
    tableau_cache()
        .write()
        .unwrap()
        .entry(lambda.clone())
        .or_insert(computed)
        .clone()
}

fn enumerate_tableaux(lambda: &Partition) -> Vec<StdTableau> {
    let n = lambda.size();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); lambda.len()];
    fn rec(
        lam: &Partition,
        next: usize,
        n: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<StdTableau>,
    ) {
        if next > n {
            out.push(StdTableau::from_rows(rows.clone()).expect("valid filling"));
            return;
        }
        for r in 0..rows.len() {
            let len = rows[r].len();
            let fits = len < lam.part(r) && (r == 0 || rows[r - 1].len() > len);
            if fits {
                rows[r].push(next);
                rec(lam, next + 1, n, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(lambda, 1, n, &mut rows, &mut out);
    let key = |t: &StdTableau| -> Vec<usize> { t.rows.concat() };
    out.sort_by_key(key);
    out
}

/// Block index (0-based) of each entry `1..=n` under the cycles of `w_κ`.
pub fn composition_blocks(kappa: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (b, &k) in kappa.iter().enumerate() {
        out.extend(std::iter::repeat_n(b, k));
    }
    out
}

/// Headley's condition: diagonally opposite entries differ by one and share
/// a cycle of `w_κ`.
pub fn is_w_transposable(t: &StdTableau, kappa: &[usize]) -> bool {
    if kappa.iter().sum::<usize>() != t.n() {
        return false;
    }
    let blocks = composition_blocks(kappa);
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if r == c {
                continue;
            }
            let Some(y) = t.entry((c, r)) else {
                return false;
            };
            if x.abs_diff(y) != 1 || blocks[x - 1] != blocks[y - 1] {
                return false;
            }
        }
    }
    true
}

/// The `w_κ`-transposable standard `λ`-tableaux, built by placing every
/// off-diagonal entry together with its transpose.
pub fn transposable_tableaux(lambda: &Partition, kappa: &[usize]) -> Vec<StdTableau> {
    let n = lambda.size();
    if kappa.iter().sum::<usize>() != n || !lambda.is_self_conjugate() {
        return Vec::new();
    }
    let blocks = composition_blocks(kappa);
    struct Ctx<'a> {
        lam: &'a Partition,
        blocks: Vec<usize>,
        n: usize,
        out: Vec<StdTableau>,
    }
    fn addable(ctx: &Ctx, rows: &[Vec<usize>], (r, c): (usize, usize)) -> bool {
        rows[r].len() == c && c < ctx.lam.part(r) && (r == 0 || rows[r - 1].len() > c)
    }
    fn rec(ctx: &mut Ctx, rows: &mut Vec<Vec<usize>>, next: usize, forced: Option<(usize, usize)>) {
        if next > ctx.n {
            ctx.out
                .push(StdTableau::from_rows(rows.clone()).expect("valid filling"));
            return;
        }
        let cells: Vec<(usize, usize)> = match forced {
            Some(cell) => {
                if ctx.blocks[next - 1] != ctx.blocks[next - 2] {
                    return;
                }
                vec![cell]
            }
            None => (0..rows.len()).map(|r| (r, rows[r].len())).collect(),
        };
        for (r, c) in cells {
            if !addable(ctx, rows, (r, c)) {
                continue;
            }
            rows[r].push(next);
            let follow = if r == c || forced.is_some() {
                None
            } else {
                Some((c, r))
            };
            rec(ctx, rows, next + 1, follow);
            rows[r].pop();
        }
    }
    let mut ctx = Ctx {
        lam: lambda,
        blocks,
        n,
        out: Vec::new(),
    };
    let mut rows = vec![Vec::new(); lambda.len()];
    rec(&mut ctx, &mut rows, 1, None);
    let mut out = ctx.out;
    out.sort_by_key(|t| t.rows.concat());
    out
}

/// True when the contents of `λ/μ` are distinct consecutive integers.
pub fn is_strip(lambda: &Partition, mu: &Partition) -> bool {
    let mut cs: Vec<i64> = skew_cells(lambda, mu).into_iter().map(content).collect();
    if cs.is_empty() {
        return false;
    }
    cs.sort_unstable();
    cs.windows(2).all(|w| w[1] == w[0] + 1)
}

/// The symmetric covering `∅ = λ⁽⁰⁾ ⊂ … ⊂ λ⁽ᵈ⁾ = λ` of type `κ`, if any.
/// The returned chain omits `λ⁽⁰⁾`.
pub fn symmetric_covering(lambda: &Partition, kappa: &[usize]) -> Result<Option<Vec<Partition>>> {
    if !lambda.is_self_conjugate() {
        return Err(Error::NotSymmetric(lambda.to_string()));
    }
    if kappa.iter().sum::<usize>() != lambda.size() {
        return Ok(None);
    }
    fn rec(lam: &Partition, kappa: &[usize], prev: &Partition, chain: &mut Vec<Partition>) -> bool {
        let Some((&k, rest)) = kappa.split_first() else {
            return prev == lam;
        };
        for mu in lam.subpartitions_of_size(prev.size() + k) {
            if mu.is_self_conjugate() && mu.contains(prev) && is_strip(&mu, prev) {
                chain.push(mu.clone());
                if rec(lam, rest, &mu, chain) {
                    return true;
                }
                chain.pop();
            }
        }
        false
    }
    let mut chain = Vec::new();
    if rec(lambda, kappa, &Partition::default(), &mut chain) {
        Ok(Some(chain))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposable_enumeration_matches_filter() {
        for n in 1..=8 {
            for lam in partitions_of(n)
                .into_iter()
                .filter(Partition::is_self_conjugate)
            {
                for kappa in compositions_of(n) {
                    let direct = transposable_tableaux(&lam, &kappa);
                    let filtered: Vec<StdTableau> = std_tableaux(&lam)
                        .iter()
                        .filter(|t| is_w_transposable(t, &kappa))
                        .cloned()
                        .collect();
                    assert_eq!(direct, filtered, "{lam} {kappa:?}");
                }
            }
        }
    }

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(4)[0], part(&[4]));
        assert_eq!(part(&[3, 1]).conjugate(), part(&[2, 1, 1]));
        assert!(part(&[2, 1]).is_self_conjugate());
        assert_eq!(compositions_of(5).len(), 16);
    }

    #[test]
    fn diagonal_hook_examples() {
        assert_eq!(
            part(&[3, 3, 3]).diagonal_hooks().unwrap(),
            (vec![5, 3, 1], 3)
        );
        assert_eq!(part(&[4, 1, 1, 1]).diagonal_hooks().unwrap(), (vec![7], 1));
        assert_eq!(part(&[2, 1]).diagonal_hooks().unwrap(), (vec![3], 1));
        assert!(part(&[3, 1]).diagonal_hooks().is_err());
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(std_tableaux(&part(&[2, 1])).len(), 2);
        assert_eq!(std_tableaux(&part(&[3, 3, 3])).len(), 42);
        assert_eq!(std_tableaux(&part(&[5])).len(), 1);
        let ts = std_tableaux(&part(&[2, 1]));
        assert_eq!(ts[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(ts[1].rows(), &[vec![1, 3], vec![2]]);
    }

    #[test]
    fn tableau_queries() {
        let t = StdTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert_eq!(t.content(2).unwrap(), 1);
        assert_eq!(t.axial(2).unwrap(), 2);
        assert_eq!(t.conjugate().rows(), &[vec![1, 3], vec![2]]);
        assert!(!t.apply_s(1).unwrap().1);
        assert!(t.apply_s(2).unwrap().1);
        assert!(t.axial(3).is_err());
    }

    #[test]
    fn transposability() {
        for t in std_tableaux(&part(&[2, 1])).iter() {
            assert!(is_w_transposable(t, &[3]));
        }
        let t = StdTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap();
        assert!(is_w_transposable(&t, &[1, 2]));
        assert!(!is_w_transposable(&t, &[2, 1]));
        assert!(!is_w_transposable(&t, &[1, 1, 1]));
    }

    #[test]
    fn coverings() {
        let chain = symmetric_covering(&part(&[4, 3, 3, 1]), &[3, 1, 7])
            .unwrap()
            .unwrap();
        assert_eq!(
            chain,
            vec![part(&[2, 1]), part(&[2, 2]), part(&[4, 3, 3, 1])]
        );
        assert!(symmetric_covering(&part(&[3, 3, 3]), &[9])
            .unwrap()
            .is_none());
        assert_eq!(
            symmetric_covering(&part(&[2, 1]), &[3]).unwrap().unwrap(),
            vec![part(&[2, 1])]
        );
    }

    #[test]
    fn kappa_signs() {
        assert_eq!(eps_kappa(&[5, 3, 1]), 1);
        assert_eq!(eps_kappa(&[1, 3]), -1);
        assert_eq!(eps_kappa(&[3, 1, 5]), 1);
    }
}
