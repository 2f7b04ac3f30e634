//! Positive roots along a longest word of the Weyl groupoid, Cartan roots,
//! root orders, diagram orbits and Hilbert series.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::braiding::{BraidingMatrix, DynkinDiagram};
use crate::degree::Degree;
use crate::error::{Error, Result};

/// Maximum number of positive roots (and orbit diagrams) explored before a
/// braiding is declared to have an infinite root system.
pub const ROOT_CAP: usize = 64;

/// Positive roots `β_1..β_M` in the order produced by the alternating word.
#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub roots: Vec<Degree>,
    pub cartan_flags: Vec<bool>,
    /// `N_β = ord q_ββ`.
    pub orders: Vec<u32>,
    /// Vertices `i_1..i_M` (0-based).
    pub reduced_word: Vec<usize>,
    /// `matrices_along_walk[k] = ρ_{i_k}…ρ_{i_1}(q)`; entry 0 is `q` itself.
    pub matrices_along_walk: Vec<BraidingMatrix>,
}

impl RootSystemData {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn index_of(&self, beta: Degree) -> Option<usize> {
        self.roots.iter().position(|&r| r == beta)
    }

    pub fn contains(&self, beta: Degree) -> bool {
        self.index_of(beta).is_some()
    }

    pub fn order(&self, beta: Degree) -> Option<u32> {
        self.index_of(beta).map(|k| self.orders[k])
    }

    pub fn is_cartan(&self, beta: Degree) -> bool {
        self.index_of(beta).is_some_and(|k| self.cartan_flags[k])
    }

    pub fn root_set(&self) -> BTreeSet<Degree> {
        self.roots.iter().copied().collect()
    }
}

/// Roots from the alternating word starting at vertex 1.
pub fn positive_roots(q: &BraidingMatrix) -> Result<RootSystemData> {
    positive_roots_from(q, 0)
}

/// `β_k = s_{i_1}⋯s_{i_{k-1}}(α_{i_k})` for the alternating word starting at
/// `start`, each reflection taken with respect to the matrix reached so far.
pub fn positive_roots_from(q: &BraidingMatrix, start: usize) -> Result<RootSystemData> {
    q.ensure_rank2()?;
    // Columns of the composed reflection: w[j] is the image of α_j.
    let mut w: [[i64; 2]; 2] = [[1, 0], [0, 1]];
    let mut cur = q.clone();
    let mut i = start;
    let mut data = RootSystemData {
        roots: Vec::new(),
        cartan_flags: Vec::new(),
        orders: Vec::new(),
        reduced_word: Vec::new(),
        matrices_along_walk: Vec::new(),
    };
    loop {
        let beta = w[i];
        let Some(root) = Degree::from_i64(beta) else {
            break;
        };
        if root.is_zero() {
            return Err(Error::Inconsistent("zero vector produced by the walk".into()));
        }
        if data.roots.len() == ROOT_CAP {
            return Err(Error::NotFinite { cap: ROOT_CAP });
        }
        let qbb = q.bilinear_form(&beta, &beta);
        let order = qbb.order_of()?.ok_or_else(|| {
            Error::Domain(format!("q(β,β) for β = {root} is not a root of unity"))
        })?;
        data.cartan_flags.push(cur.is_cartan_vertex(i)?);
        data.roots.push(root);
        data.orders.push(order);
        data.reduced_word.push(i);
        let s = cur.simple_reflection(i)?;
        let mut next = [[0i64; 2]; 2];
        for (j, img) in s.iter().enumerate() {
            for m in 0..2 {
                next[j][0] += img[m] * w[m][0];
                next[j][1] += img[m] * w[m][1];
            }
        }
        w = next;
        let reflected = cur.reflect(i)?;
        data.matrices_along_walk.push(std::mem::replace(&mut cur, reflected));
        i = 1 - i;
    }
    Ok(data)
}

/// The Cartan roots `O_q`, in root-system order.
pub fn cartan_roots(rs: &RootSystemData) -> Vec<Degree> {
    rs.roots
        .iter()
        .zip(&rs.cartan_flags)
        .filter(|(_, &c)| c)
        .map(|(&r, _)| r)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition11 {
    pub holds: bool,
    /// Pairs `(α, β)` of Cartan roots with `q_αβ^{N_β} ≠ 1`.
    pub counterexamples: Vec<(Degree, Degree)>,
}

/// `q_αβ^{N_β} = 1` for all Cartan roots `α, β`.
pub fn check_condition_11(q: &BraidingMatrix, rs: &RootSystemData) -> Condition11 {
    let cartan: Vec<(Degree, u32)> = rs
        .roots
        .iter()
        .zip(&rs.orders)
        .zip(&rs.cartan_flags)
        .filter(|(_, &c)| c)
        .map(|((&r, &n), _)| (r, n))
        .collect();
    let mut counterexamples = Vec::new();
    for &(a, _) in &cartan {
        for &(b, nb) in &cartan {
            let v = q.bilinear_form(&a.as_i64(), &b.as_i64());
            if !v.pow_u(nb as u64).is_one() {
                counterexamples.push((a, b));
            }
        }
    }
    Condition11 {
        holds: counterexamples.is_empty(),
        counterexamples,
    }
}

/// Closure of `{diagram(q)}` under reflections, canonicalized up to vertex
/// swap and sorted.
pub fn weyl_orbit(q: &BraidingMatrix) -> Result<Vec<DynkinDiagram>> {
    q.ensure_rank2()?;
    let mut seen: BTreeSet<DynkinDiagram> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(q.diagram().canonical());
    queue.push_back(q.clone());
    while let Some(m) = queue.pop_front() {
        for i in 0..2 {
            let r = m.reflect(i)?;
            if seen.insert(r.diagram().canonical()) {
                if seen.len() > ROOT_CAP {
                    return Err(Error::NotFinite { cap: ROOT_CAP });
                }
                queue.push_back(r);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Bivariate power series truncated at total degree `truncation`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub truncation: u32,
    coeffs: BTreeMap<Degree, BigUint>,
}

impl HilbertSeries {
    pub fn one(truncation: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(Degree::ZERO, BigUint::one());
        HilbertSeries { truncation, coeffs }
    }

    /// `Σ_{0 ≤ k < n} T^{k·deg}`, i.e. `(1 - T^{n deg}) / (1 - T^deg)`;
    /// `n = None` gives the full geometric series `1 / (1 - T^deg)`.
    pub fn geometric(deg: Degree, n: Option<u32>, truncation: u32) -> Self {
        assert!(!deg.is_zero());
        let mut coeffs = BTreeMap::new();
        let mut k = 0u32;
        while n.is_none_or(|n| k < n) && k * deg.total() <= truncation {
            coeffs.insert(k * deg, BigUint::one());
            k += 1;
        }
        HilbertSeries { truncation, coeffs }
    }

    pub fn coeff(&self, d: Degree) -> BigUint {
        self.coeffs.get(&d).cloned().unwrap_or_default()
    }

    /// Nonzero coefficients in degree order.
    pub fn terms(&self) -> impl Iterator<Item = (&Degree, &BigUint)> {
        self.coeffs.iter()
    }

    /// Sum of all retained coefficients.
    pub fn total(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// Product truncated at the smaller of the two truncations.
    pub fn mul(&self, other: &HilbertSeries) -> HilbertSeries {
        let truncation = self.truncation.min(other.truncation);
        let mut coeffs: BTreeMap<Degree, BigUint> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let d = *a + *b;
                if d.total() <= truncation {
                    *coeffs.entry(d).or_default() += x * y;
                }
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        HilbertSeries { truncation, coeffs }
    }
}

/// `H_B = Π_{β ∈ Δ+} (1 - T^{N_β β}) / (1 - T^β)`.
pub fn hilbert_series_b(rs: &RootSystemData, truncation: u32) -> HilbertSeries {
    rs.roots
        .iter()
        .zip(&rs.orders)
        .fold(HilbertSeries::one(truncation), |h, (&r, &n)| {
            h.mul(&HilbertSeries::geometric(r, Some(n), truncation))
        })
}

/// `H_L = Π_{β ∈ O} 1 / (1 - T^β) · Π_{β ∉ O} (1 - T^{N_β β}) / (1 - T^β)`.
pub fn hilbert_series_l(rs: &RootSystemData, truncation: u32) -> HilbertSeries {
    (0..rs.len()).fold(HilbertSeries::one(truncation), |h, k| {
        let n = if rs.cartan_flags[k] {
            None
        } else {
            Some(rs.orders[k])
        };
        h.mul(&HilbertSeries::geometric(rs.roots[k], n, truncation))
    })
}

/// `H_A = Π_{β ∈ O} 1 / (1 - T^{N_β β})`.
pub fn hilbert_series_a(rs: &RootSystemData, truncation: u32) -> HilbertSeries {
    (0..rs.len())
        .filter(|&k| rs.cartan_flags[k])
        .fold(HilbertSeries::one(truncation), |h, k| {
            h.mul(&HilbertSeries::geometric(
                rs.orders[k] * rs.roots[k],
                None,
                truncation,
            ))
        })
}

/// Total degree of the top component of the Nichols algebra,
/// `Σ (N_β - 1)|β|`; truncating `H_B` there keeps every term.
pub fn top_degree(rs: &RootSystemData) -> u32 {
    rs.roots
        .iter()
        .zip(&rs.orders)
        .map(|(r, &n)| (n - 1) * r.total())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::CyclotomicField;

    fn diag(l: u32, q11: i64, edge: i64, q22: i64) -> BraidingMatrix {
        let k = CyclotomicField::new(l);
        BraidingMatrix::from_diagram(k.zeta_pow(q11), k.zeta_pow(edge), k.zeta_pow(q22)).unwrap()
    }

    fn d(a: u32, b: u32) -> Degree {
        Degree::new(a, b)
    }

    #[test]
    fn cartan_a2_roots() {
        let q = diag(6, 2, -2, 2);
        let rs = positive_roots(&q).unwrap();
        assert_eq!(rs.roots, vec![d(1, 0), d(1, 1), d(0, 1)]);
        assert_eq!(rs.orders, vec![3, 3, 3]);
        assert!(rs.cartan_flags.iter().all(|&c| c));
        assert_eq!(rs.reduced_word, vec![0, 1, 0]);
        assert_eq!(rs.matrices_along_walk.len(), 3);
        assert_eq!(rs.matrices_along_walk[0], q);
    }

    #[test]
    fn affine_walk_hits_cap() {
        // Cartan matrix [[2,-2],[-2,2]] at q = ζ5: infinite Weyl group.
        let q = diag(10, 2, -4, 2);
        assert_eq!(q.cartan_entry(0, 1).unwrap(), -2);
        assert_eq!(q.cartan_entry(1, 0).unwrap(), -2);
        assert_eq!(positive_roots(&q).unwrap_err(), Error::NotFinite { cap: ROOT_CAP });
        assert_eq!(weyl_orbit(&q).unwrap().len(), 1);
    }

    #[test]
    fn hilbert_basics() {
        let q = diag(6, 2, -2, 2);
        let rs = positive_roots(&q).unwrap();
        let hb = hilbert_series_b(&rs, top_degree(&rs));
        assert_eq!(hb.coeff(Degree::ZERO), BigUint::one());
        assert_eq!(hb.total(), BigUint::from(27u32));
        assert_eq!(hb.coeff(d(1, 1)), BigUint::from(2u32));
        assert_eq!(hb.coeff(d(2, 2)), BigUint::from(3u32));
        let hl = hilbert_series_l(&rs, 12);
        let prod = hilbert_series_b(&rs, 12).mul(&hilbert_series_a(&rs, 12));
        assert_eq!(hl, prod);
    }

    #[test]
    fn geometric_truncation() {
        let g = HilbertSeries::geometric(d(1, 1), None, 5);
        assert_eq!(g.terms().count(), 3);
        let g = HilbertSeries::geometric(d(1, 0), Some(2), 5);
        assert_eq!(g.total(), BigUint::from(2u32));
    }
}
