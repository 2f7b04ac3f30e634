//! The quantum-shuffle pairing on `T(V)` and the Nichols quotient it cuts
//! out: graded dimensions, radical membership and root-vector heights.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::TensorElement;
use crate::braiding::BraidingMatrix;
use crate::cyclo::Cyclotomic;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::linalg;
use crate::lyndon::{hyperletter, root_word, Word};
use crate::rootsys::RootSystemData;

/// Upper bound on the number of words `C(|d|, d_1)` in a degree before the
/// pairing machinery refuses to work on it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_words: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_words: 5_000_000,
        }
    }
}

impl Budget {
    pub fn new(max_words: u128) -> Self {
        Budget { max_words }
    }

    /// Number of words of degree `d`.
    pub fn words_in(d: Degree) -> BigUint {
        let n = d.total() as u64;
        let k = d.0[0].min(d.0[1]) as u64;
        let mut acc = BigUint::from(1u32);
        for i in 0..k {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    pub fn check(&self, d: Degree) -> Result<()> {
        self.check_count(Self::words_in(d))
    }

    pub fn check_count(&self, needed: BigUint) -> Result<()> {
        match needed.to_u128() {
            Some(n) if n <= self.max_words => Ok(()),
            n => Err(Error::Budget {
                needed: n.unwrap_or(u128::MAX),
                budget: self.max_words,
            }),
        }
    }
}

type Vector = BTreeMap<Word, Cyclotomic>;

/// Memoized images `Ω(w)` of single words under the quantum symmetrizer.
///
/// `Ω(x_i v) = Σ_p (Π_{letters ℓ after slot p} q_{iℓ}) · (x_i inserted at
/// slot p of each word of Ω(v))`, starting from `Ω(1) = 1`. The pairing
/// `⟨u, v⟩` is the coefficient of `u` in `Ω(v)`.
pub struct ShuffleContext<'q> {
    q: &'q BraidingMatrix,
    memo: HashMap<Word, Vector>,
}

impl<'q> ShuffleContext<'q> {
    pub fn new(q: &'q BraidingMatrix) -> Self {
        ShuffleContext {
            q,
            memo: HashMap::new(),
        }
    }

    pub fn omega(&mut self, w: &Word) -> &Vector {
        if !self.memo.contains_key(w) {
            let v = self.compute(w);
            self.memo.insert(w.clone(), v);
        }
        &self.memo[w]
    }

    fn compute(&mut self, w: &Word) -> Vector {
        let field = self.q.field().clone();
        if w.is_empty() {
            return BTreeMap::from([(Word::empty(), field.one())]);
        }
        let i = w.letters()[0];
        let tail = w.slice(1..w.len());
        let inner = self.omega(&tail).clone();
        let row = (i - 1) as usize;
        let mut out = Vector::new();
        for (v, c) in inner {
            let letters = v.letters();
            let mut factor = c;
            for p in (0..=letters.len()).rev() {
                if p < letters.len() {
                    factor = &factor * self.q.entry(row, (letters[p] - 1) as usize);
                }
                let mut nw = Vec::with_capacity(letters.len() + 1);
                nw.extend_from_slice(&letters[..p]);
                nw.push(i);
                nw.extend_from_slice(&letters[p..]);
                accumulate(&mut out, Word::from_letters(nw), &factor);
            }
        }
        out
    }

    /// `Ω(a)` for a linear combination.
    pub fn omega_element(&mut self, a: &TensorElement) -> Vector {
        let mut out = Vector::new();
        for (w, c) in a.terms() {
            let img = self.omega(w).clone();
            for (u, d) in img {
                accumulate(&mut out, u, &(c * &d));
            }
        }
        out
    }
}

fn accumulate(v: &mut Vector, w: Word, c: &Cyclotomic) {
    if c.is_zero() {
        return;
    }
    match v.get_mut(&w) {
        Some(x) => {
            *x += c;
            if x.is_zero() {
                v.remove(&w);
            }
        }
        None => {
            v.insert(w, c.clone());
        }
    }
}

/// `⟨u, v⟩` on single words; zero across different degrees.
pub fn shuffle_pairing(u: &Word, v: &Word, q: &BraidingMatrix) -> Cyclotomic {
    if u.degree() != v.degree() {
        return q.field().zero();
    }
    let mut ctx = ShuffleContext::new(q);
    ctx.omega(v).get(u).cloned().unwrap_or_else(|| q.field().zero())
}

/// Bilinear extension of [`shuffle_pairing`].
pub fn shuffle_pairing_elements(a: &TensorElement, b: &TensorElement, q: &BraidingMatrix) -> Cyclotomic {
    let mut ctx = ShuffleContext::new(q);
    let img = ctx.omega_element(b);
    let mut s = q.field().zero();
    for (u, c) in a.terms() {
        if let Some(d) = img.get(u) {
            s += &(c * d);
        }
    }
    s
}

/// Dimension of the Nichols algebra in degree `d`: the rank of the Gram
/// matrix of the pairing on words of degree `d`.
pub fn nichols_graded_dim(q: &BraidingMatrix, d: Degree, budget: Budget) -> Result<usize> {
    q.ensure_rank2()?;
    budget.check(d)?;
    let words = Word::all_of_degree(d);
    let mut ctx = ShuffleContext::new(q);
    let zero = q.field().zero();
    let gram: Vec<Vec<Cyclotomic>> = words
        .iter()
        .map(|v| {
            let img = ctx.omega(v);
            words
                .iter()
                .map(|u| img.get(u).cloned().unwrap_or_else(|| zero.clone()))
                .collect()
        })
        .collect();
    Ok(linalg::rank(gram))
}

/// Whether `a` lies in the radical of the pairing, tested one homogeneous
/// component at a time.
pub fn nichols_radical_member(a: &TensorElement, q: &BraidingMatrix, budget: Budget) -> Result<bool> {
    let comps = a.homogeneous_components();
    for d in comps.keys() {
        budget.check(*d)?;
    }
    let mut ctx = ShuffleContext::new(q);
    for comp in comps.values() {
        if !ctx.omega_element(comp).is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Least `t` with `[l_β]_c^t` in the radical.
pub fn nichols_root_height(
    q: &BraidingMatrix,
    rs: &RootSystemData,
    beta: Degree,
    budget: Budget,
) -> Result<u32> {
    let h = hyperletter(&root_word(rs, beta)?, q);
    let limit = 2 * rs.order(beta).unwrap_or(1).max(1);
    let field = q.field();
    let mut p = TensorElement::one(field);
    for t in 1..=limit {
        budget.check(t * beta)?;
        p = p.multiply(&h);
        if nichols_radical_member(&p, q, budget)? {
            return Ok(t);
        }
    }
    Err(Error::Inconsistent(format!(
        "root vector of {beta} has no height up to {limit}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CyclotomicField;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn seeds_and_degree_two() {
        let k = CyclotomicField::new(6);
        let z = |e| k.zeta_pow(e);
        let q = BraidingMatrix::new(vec![vec![z(2), z(1)], vec![z(3), z(5)]]).unwrap();
        assert!(shuffle_pairing(&w("1"), &w("1"), &q).is_one());
        assert!(shuffle_pairing(&w("1"), &w("2"), &q).is_zero());
        assert_eq!(shuffle_pairing(&w("11"), &w("11"), &q), k.one() + z(2));
    }

    #[test]
    fn gram_determinant_degree_one_one() {
        let k = CyclotomicField::new(6);
        let z = |e| k.zeta_pow(e);
        let generic = BraidingMatrix::new(vec![vec![z(2), z(1)], vec![z(3), z(5)]]).unwrap();
        assert_eq!(nichols_graded_dim(&generic, Degree::new(1, 1), Budget::default()).unwrap(), 2);
        let split = BraidingMatrix::new(vec![vec![z(2), z(1)], vec![z(5), z(5)]]).unwrap();
        assert_eq!(nichols_graded_dim(&split, Degree::new(1, 1), Budget::default()).unwrap(), 1);
    }

    #[test]
    fn budget_refuses() {
        let k = CyclotomicField::new(6);
        let q = BraidingMatrix::from_diagram(k.zeta_pow(2), k.zeta_pow(4), k.zeta_pow(2)).unwrap();
        let err = nichols_graded_dim(&q, Degree::new(10, 10), Budget::new(1000)).unwrap_err();
        assert_eq!(
            err,
            Error::Budget {
                needed: 184_756,
                budget: 1000
            }
        );
    }
}
