//! Seminormal representations `S(λ)` over the tower ring, the conjugation
//! map `τ`, the trace oracle and the split characters.
//!
//! Matrices act on row vectors: `v_t T_i = −1/[ρ_t(i)] v_t + α_t(i) v_{ts_i}`,
//! so `M(T_w)` for `w = s_{i_1}⋯s_{i_k}` is `M_{i_1}⋯M_{i_k}`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::combinat::{std_tableaux, Partition, StdTableau};
use crate::error::{Error, Result};
use crate::hecke::{a_elem, HeckeElem};
use crate::scalars::{alpha_coeff, neg_inv_qint, GaussianRational, RatFunc, TowerElem};
use crate::symgroup::Permutation;

pub type Matrix = Vec<Vec<TowerElem>>;
pub type RowVec = Vec<TowerElem>;

/// Row `t` of a generator matrix: the diagonal entry and the optional
/// off-diagonal entry in column `ts_i`.
#[derive(Clone, Debug)]
struct GenRow {
    diag: TowerElem,
    off: Option<(usize, TowerElem)>,
}

/// The seminormal form of `S(λ)`.
#[derive(Debug)]
pub struct SemiRep {
    shape: Partition,
    basis: Arc<Vec<StdTableau>>,
    gens: Vec<Vec<GenRow>>,
    tau: Option<Vec<usize>>,
}

impl SemiRep {
    fn build(shape: &Partition) -> Result<SemiRep> {
        let basis = std_tableaux(shape);
        let index: HashMap<&StdTableau, usize> =
            basis.iter().enumerate().map(|(k, t)| (t, k)).collect();
        let n = shape.size();
        let mut gens = Vec::with_capacity(n.saturating_sub(1));
        for i in 1..n {
            let mut rows = Vec::with_capacity(basis.len());
            for t in basis.iter() {
                let rho = t.axial(i)?;
                let (ts, standard) = t.apply_s(i)?;
                let off = if standard {
                    let a = alpha_coeff(rho)?;
                    (!a.is_zero()).then(|| (index[&ts], a))
                } else {
                    None
                };
                rows.push(GenRow {
                    diag: neg_inv_qint(rho)?,
                    off,
                });
            }
            gens.push(rows);
        }
        let tau = shape
            .is_self_conjugate()
            .then(|| basis.iter().map(|t| index[&t.conjugate()]).collect());
        Ok(SemiRep {
            shape: shape.clone(),
            basis: basis.clone(),
            gens,
            tau,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StdTableau] {
        &self.basis
    }

    /// `t ↦ t′` as an index permutation, for self-conjugate shapes.
    pub fn tau(&self) -> Option<&[usize]> {
        self.tau.as_deref()
    }

    fn check_gen(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n() {
            return Err(Error::MalformedWord {
                index: i,
                n: self.n(),
            });
        }
        Ok(())
    }

    /// `v · M(T_i)`.
    pub fn apply_gen(&self, v: &[TowerElem], i: usize) -> Result<RowVec> {
        self.check_gen(i)?;
        let rows = &self.gens[i - 1];
        let mut out = vec![TowerElem::zero(); self.dim()];
        for (t, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let r = &rows[t];
            out[t].add_mul(x, &r.diag);
            if let Some((s, a)) = &r.off {
                out[*s].add_mul(x, a);
            }
        }
        Ok(out)
    }

    /// `v · M(T_{s_{w[0]}}) ⋯ M(T_{s_{w[k]}})`.
    pub fn apply_word(&self, v: &[TowerElem], word: &[usize]) -> Result<RowVec> {
        let mut cur = v.to_vec();
        for &i in word {
            cur = self.apply_gen(&cur, i)?;
        }
        Ok(cur)
    }

    /// `v · M(x)`.
    pub fn apply_hecke(&self, v: &[TowerElem], x: &HeckeElem) -> Result<RowVec> {
        self.check_rank(x.n())?;
        let mut out = vec![TowerElem::zero(); self.dim()];
        for (w, c) in x.terms() {
            let img = self.apply_word(v, &w.reduced_word())?;
            let c = TowerElem::from_ratfunc(c.clone());
            for (o, y) in out.iter_mut().zip(&img) {
                o.add_mul(y, &c);
            }
        }
        Ok(out)
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if n != self.n() {
            return Err(Error::SizeMismatch(format!(
                "element of H_{n} acting on S{}",
                self.shape
            )));
        }
        Ok(())
    }

    pub fn unit(&self, t: usize) -> RowVec {
        let mut v = vec![TowerElem::zero(); self.dim()];
        v[t] = TowerElem::one();
        v
    }

    pub fn gen_matrix(&self, i: usize) -> Result<Matrix> {
        self.word_matrix(&[i])
    }

    /// `M(T_{s_{w[0]}}) ⋯ M(T_{s_{w[k]}})`; the empty word gives the identity.
    pub fn word_matrix(&self, word: &[usize]) -> Result<Matrix> {
        (0..self.dim())
            .map(|t| self.apply_word(&self.unit(t), word))
            .collect()
    }

    pub fn hecke_matrix(&self, x: &HeckeElem) -> Result<Matrix> {
        (0..self.dim())
            .map(|t| self.apply_hecke(&self.unit(t), x))
            .collect()
    }

    /// The 0/1 matrix of `τ`.
    pub fn tau_matrix(&self) -> Result<Matrix> {
        let tau = self
            .tau
            .as_ref()
            .ok_or_else(|| Error::NotSymmetric(self.shape.to_string()))?;
        Ok((0..self.dim()).map(|t| self.unit(tau[t])).collect())
    }

    /// `tr M(T_w)`, accumulated row by row.
    pub fn trace_word(&self, word: &[usize]) -> Result<TowerElem> {
        let mut tr = TowerElem::zero();
        for t in 0..self.dim() {
            let row = self.apply_word(&self.unit(t), word)?;
            tr.add_assign_ref(&row[t]);
        }
        Ok(tr)
    }

    /// `tr M(T_w)M(τ) = Σ_t (e_t M(T_w))_{t′}`.
    pub fn trace_word_tau(&self, word: &[usize]) -> Result<TowerElem> {
        let tau = self
            .tau
            .as_ref()
            .ok_or_else(|| Error::NotSymmetric(self.shape.to_string()))?;
        let mut tr = TowerElem::zero();
        for t in 0..self.dim() {
            let row = self.apply_word(&self.unit(t), word)?;
            tr.add_assign_ref(&row[tau[t]]);
        }
        Ok(tr)
    }

    pub fn trace_hecke(&self, x: &HeckeElem) -> Result<TowerElem> {
        self.check_rank(x.n())?;
        let mut tr = TowerElem::zero();
        for (w, c) in x.terms() {
            tr.add_assign_ref(&self.trace_word(&w.reduced_word())?.scale(c));
        }
        Ok(tr)
    }

    pub fn trace_hecke_tau(&self, x: &HeckeElem) -> Result<TowerElem> {
        self.check_rank(x.n())?;
        let mut tr = TowerElem::zero();
        for (w, c) in x.terms() {
            tr.add_assign_ref(&self.trace_word_tau(&w.reduced_word())?.scale(c));
        }
        Ok(tr)
    }
}

/// The cached seminormal representation of shape `λ`.
pub fn semirep(shape: &Partition) -> Result<Arc<SemiRep>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, Arc<SemiRep>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(r) = cache.read().unwrap().get(shape) {
        return Ok(r.clone());
    }
    let rep = Arc::new(SemiRep::build(shape)?);
    Ok(cache
        .write()
        .unwrap()
        .entry(shape.clone())
        .or_insert(rep)
        .clone())
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = vec![TowerElem::zero(); m];
            for (k, x) in row.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (o, y) in out.iter_mut().zip(&b[k]) {
                    o.add_mul(x, y);
                }
            }
            out
        })
        .collect()
}

pub fn mat_add_scaled(a: &Matrix, b: &Matrix, c: &RatFunc) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + &y.scale(c)).collect())
        .collect()
}

pub fn identity_matrix(d: usize) -> Matrix {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    if i == j {
                        TowerElem::one()
                    } else {
                        TowerElem::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn check_shape(shape: &Partition, n: usize) -> Result<()> {
    if shape.size() != n {
        return Err(Error::SizeMismatch(format!(
            "shape {shape} is not a partition of {n}"
        )));
    }
    Ok(())
}

/// `χ^λ(T_w)`.
pub fn char_t(shape: &Partition, w: &Permutation) -> Result<TowerElem> {
    check_shape(shape, w.n())?;
    semirep(shape)?.trace_word(&w.reduced_word())
}

/// `χ^λ(x)` for `x ∈ H_n`.
pub fn char_t_elem(shape: &Partition, x: &HeckeElem) -> Result<TowerElem> {
    check_shape(shape, x.n())?;
    semirep(shape)?.trace_hecke(x)
}

/// The trace oracle `χ^λ(T_w τ)` for self-conjugate `λ`.
pub fn char_ttau_oracle(shape: &Partition, w: &Permutation) -> Result<TowerElem> {
    check_shape(shape, w.n())?;
    if !shape.is_self_conjugate() {
        return Err(Error::NotSymmetric(shape.to_string()));
    }
    semirep(shape)?.trace_word_tau(&w.reduced_word())
}

/// `χ^λ(xτ)` for `x ∈ H_n`.
pub fn char_ttau_elem(shape: &Partition, x: &HeckeElem) -> Result<TowerElem> {
    check_shape(shape, x.n())?;
    if !shape.is_self_conjugate() {
        return Err(Error::NotSymmetric(shape.to_string()));
    }
    semirep(shape)?.trace_hecke_tau(x)
}

/// Checks that row `t` of `M_λ(T_w^#)` is row `t′` of `M_{λ′}(T_w)` with
/// columns relabelled by conjugation, and that `χ^λ(T_w^#) = χ^{λ′}(T_w)`.
pub fn twist_check(shape: &Partition, w: &Permutation) -> Result<bool> {
    check_shape(shape, w.n())?;
    let conj = shape.conjugate();
    let rep = semirep(shape)?;
    let rep_c = semirep(&conj)?;
    let idx_c: HashMap<&StdTableau, usize> = rep_c
        .basis()
        .iter()
        .enumerate()
        .map(|(k, t)| (t, k))
        .collect();
    let to_c: Vec<usize> = rep.basis().iter().map(|t| idx_c[&t.conjugate()]).collect();
    let hash = crate::hecke::hash_of_t(w);
    let lhs = rep.hecke_matrix(&hash)?;
    let rhs = rep_c.word_matrix(&w.reduced_word())?;
    for t in 0..rep.dim() {
        for s in 0..rep.dim() {
            if lhs[t][s] != rhs[to_c[t]][to_c[s]] {
                return Ok(false);
            }
        }
    }
    Ok(rep.trace_hecke(&hash)? == rep_c.trace_word(&w.reduced_word())?)
}

fn half() -> RatFunc {
    RatFunc::from_gaussian(GaussianRational::from_ratio(1, 2))
}

/// The restricted character `χ^λ_A(x)` for `x` fixed by `#`.
pub fn char_alt(shape: &Partition, x: &HeckeElem) -> Result<TowerElem> {
    if !x.is_alternating() {
        return Err(Error::NotAlternating);
    }
    char_t_elem(shape, x)
}

/// `χ^λ_A(A_w)` for even `w`, without the `#`-check.
pub fn char_alt_a(shape: &Partition, w: &Permutation) -> Result<TowerElem> {
    if !w.is_even() {
        return Err(Error::OddPermutation);
    }
    char_t_elem(shape, &a_elem(w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplitSign {
    Plus,
    Minus,
}

impl SplitSign {
    pub fn sign(self) -> i64 {
        match self {
            SplitSign::Plus => 1,
            SplitSign::Minus => -1,
        }
    }
}

/// `χ^{λ±}_A(x) = ½(χ^λ(x) ± χ^λ(xτ))`.
pub fn char_split(shape: &Partition, sign: SplitSign, x: &HeckeElem) -> Result<TowerElem> {
    if !shape.is_self_conjugate() {
        return Err(Error::NotSymmetric(shape.to_string()));
    }
    if !x.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let a = char_t_elem(shape, x)?;
    let b = char_ttau_elem(shape, x)?.scale_int(sign.sign());
    Ok((&a + &b).scale(&half()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn tw(x: RatFunc) -> TowerElem {
        TowerElem::from_ratfunc(x)
    }

    #[test]
    fn generator_matrices() {
        let rep = semirep(&part(&[2, 1])).unwrap();
        let m = rep.gen_matrix(1).unwrap();
        assert_eq!(m[0][0], tw(RatFunc::q()));
        assert_eq!(m[1][1], tw(-RatFunc::q_pow(-1)));
        assert!(m[0][1].is_zero() && m[1][0].is_zero());
        let triv = semirep(&part(&[4])).unwrap();
        for i in 1..4 {
            assert_eq!(triv.gen_matrix(i).unwrap(), vec![vec![tw(RatFunc::q())]]);
        }
    }

    #[test]
    fn word_traces() {
        let rep = semirep(&part(&[2, 1])).unwrap();
        assert_eq!(rep.word_matrix(&[]).unwrap(), identity_matrix(2));
        assert_eq!(rep.trace_word(&[1, 2]).unwrap(), TowerElem::from_int(-1));
        let m1 = rep.gen_matrix(1).unwrap();
        let sq = rep.word_matrix(&[1, 1]).unwrap();
        assert_eq!(
            sq,
            mat_add_scaled(&identity_matrix(2), &m1, &RatFunc::q_minus_qinv())
        );
    }

    #[test]
    fn tau_oracle_base_case() {
        let lam = part(&[2, 1]);
        let w = Permutation::from_word(3, &[1, 2]).unwrap();
        let expected = TowerElem::y(3)
            .unwrap()
            .scale(&(RatFunc::i() * RatFunc::q_pow(-1)));
        assert_eq!(char_ttau_oracle(&lam, &w).unwrap(), expected);
        let alt = alpha_coeff(2)
            .unwrap()
            .scale(&(RatFunc::q() + RatFunc::q_pow(-1)));
        assert_eq!(alt, expected);
        assert!(char_ttau_oracle(&lam, &Permutation::identity(3))
            .unwrap()
            .is_zero());
        assert!(char_ttau_oracle(&part(&[2, 1, 1]), &Permutation::identity(4)).is_err());
    }

    #[test]
    fn characters_of_one_row() {
        let lam = part(&[4]);
        for w in Permutation::all(4) {
            let expected = tw(RatFunc::q_pow(w.length() as i32));
            assert_eq!(char_t(&lam, &w).unwrap(), expected);
        }
    }

    #[test]
    fn twist_small() {
        for lam in crate::combinat::partitions_of(4) {
            for w in Permutation::all(4) {
                assert!(twist_check(&lam, &w).unwrap(), "{lam} {w}");
            }
        }
    }

    #[test]
    fn alt_and_split_values() {
        let w = Permutation::from_word(3, &[1, 2]).unwrap();
        let a = a_elem(&w);
        let v = char_alt(&part(&[3]), &a).unwrap();
        let expected = (RatFunc::q_pow(2) + RatFunc::q_pow(-2)) * half();
        assert_eq!(v, tw(expected));
        let lam = part(&[2, 1]);
        assert_eq!(char_alt(&lam, &a).unwrap(), TowerElem::from_int(-1));
        let plus = char_split(&lam, SplitSign::Plus, &a).unwrap();
        let minus = char_split(&lam, SplitSign::Minus, &a).unwrap();
        assert_eq!(&plus + &minus, TowerElem::from_int(-1));
        assert!(char_alt(&lam, &HeckeElem::t(&w)).is_err());
    }
}
