//! The Lie algebra `n_q` spanned by the Cartan root-vector powers.
//!
//! `n_q` is graded with one-dimensional pieces in degrees `N_β β` for the
//! Cartan roots `β`. Its type is read off from that degree set: the two
//! indecomposable degrees act as simple roots and every other degree must be
//! a positive root of a rank-2 root system in those coordinates. Pure-power
//! cross coefficients of the braided coproduct certify that the remaining
//! root-vector powers are not primitive.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::braiding::BraidingMatrix;
use crate::cyclo::Cyclotomic;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::lyndon::{hyperletter, root_words, Word};
use crate::rootsys::{
    cartan_roots, check_condition_11, positive_roots, weyl_orbit, RootSystemData,
};
use crate::tensoralg::{coproduct_component, Budget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    Zero,
    A1,
    A1xA1,
    A2,
    B2,
    G2,
}

impl LieType {
    pub fn positive_root_count(self) -> usize {
        match self {
            LieType::Zero => 0,
            LieType::A1 => 1,
            LieType::A1xA1 => 2,
            LieType::A2 => 3,
            LieType::B2 => 4,
            LieType::G2 => 6,
        }
    }

    pub fn parse(s: &str) -> Option<LieType> {
        Some(match s {
            "0" => LieType::Zero,
            "A1" => LieType::A1,
            "A1⊕A1" | "A1+A1" | "A1xA1" => LieType::A1xA1,
            "A2" => LieType::A2,
            "B2" | "C2" => LieType::B2,
            "G2" => LieType::G2,
            _ => return None,
        })
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieType::Zero => "0",
            LieType::A1 => "A1",
            LieType::A1xA1 => "A1⊕A1",
            LieType::A2 => "A2",
            LieType::B2 => "B2",
            LieType::G2 => "G2",
        })
    }
}

impl Serialize for LieType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The degrees `N_β β`, `β ∈ O_q`, in root order.
pub fn degree_lattice(rs: &RootSystemData) -> Result<Vec<Degree>> {
    let degrees: Vec<Degree> = rs
        .roots
        .iter()
        .zip(&rs.orders)
        .zip(&rs.cartan_flags)
        .filter(|(_, &c)| c)
        .map(|((&r, &n), _)| n * r)
        .collect();
    let distinct: BTreeSet<_> = degrees.iter().collect();
    if distinct.len() != degrees.len() {
        return Err(Error::Inconsistent("repeated degree among N_β β".into()));
    }
    Ok(degrees)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypeIdentification {
    pub lie_type: LieType,
    /// Degrees playing the role of simple roots.
    pub generators: Vec<Degree>,
    pub cartan_matrix: Vec<Vec<i64>>,
    /// Each degree with its coordinates in the generators (rank 2 only).
    pub coordinates: Vec<(Degree, [u32; 2])>,
}

/// Degrees that are not sums of two or more lattice members.
fn indecomposables(degrees: &[Degree]) -> Vec<Degree> {
    let max0 = degrees.iter().map(|d| d.0[0]).max().unwrap_or(0) as usize;
    let max1 = degrees.iter().map(|d| d.0[1]).max().unwrap_or(0) as usize;
    // reach[a][b]: (a, b) is a nonempty sum of lattice members.
    let mut reach = vec![vec![false; max1 + 1]; max0 + 1];
    for a in 0..=max0 {
        for b in 0..=max1 {
            reach[a][b] = degrees.iter().any(|d| {
                let (x, y) = (d.0[0] as usize, d.0[1] as usize);
                x <= a && y <= b && ((a, b) == (x, y) || reach[a - x][b - y] && (a - x, b - y) != (0, 0))
            });
        }
    }
    degrees
        .iter()
        .copied()
        .filter(|d| {
            !degrees.iter().any(|e| match d.checked_sub(*e) {
                Some(r) if !r.is_zero() => reach[r.0[0] as usize][r.0[1] as usize],
                _ => false,
            })
        })
        .collect()
}

fn coordinates(d: Degree, u: Degree, v: Degree) -> Option<[u32; 2]> {
    let [d0, d1] = d.as_i64();
    let [u0, u1] = u.as_i64();
    let [v0, v1] = v.as_i64();
    let det = u0 * v1 - u1 * v0;
    if det == 0 {
        return None;
    }
    let a = d0 * v1 - d1 * v0;
    let b = u0 * d1 - u1 * d0;
    if a % det != 0 || b % det != 0 {
        return None;
    }
    let (a, b) = (a / det, b / det);
    (a >= 0 && b >= 0).then_some([a as u32, b as u32])
}

const A2: &[[u32; 2]] = &[[1, 0], [0, 1], [1, 1]];
const B2_U: &[[u32; 2]] = &[[1, 0], [0, 1], [1, 1], [2, 1]];
const B2_V: &[[u32; 2]] = &[[1, 0], [0, 1], [1, 1], [1, 2]];
const G2_U: &[[u32; 2]] = &[[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]];
const G2_V: &[[u32; 2]] = &[[1, 0], [0, 1], [1, 1], [1, 2], [1, 3], [2, 3]];

/// Match a set of degrees against the positive roots of 0, A1, A1⊕A1, A2,
/// B2 or G2.
pub fn identify_type(degrees: &[Degree]) -> Result<TypeIdentification> {
    let distinct: BTreeSet<Degree> = degrees.iter().copied().collect();
    if distinct.len() != degrees.len() {
        return Err(Error::Inconsistent("degrees must be distinct".into()));
    }
    let mut sorted: Vec<Degree> = distinct.into_iter().collect();
    sorted.sort();
    let simple = |lie_type, cartan: Vec<Vec<i64>>| TypeIdentification {
        lie_type,
        generators: sorted.clone(),
        cartan_matrix: cartan,
        coordinates: Vec::new(),
    };
    match sorted.len() {
        0 => return Ok(simple(LieType::Zero, vec![])),
        1 => return Ok(simple(LieType::A1, vec![vec![2]])),
        2 => return Ok(simple(LieType::A1xA1, vec![vec![2, 0], vec![0, 2]])),
        _ => {}
    }
    let gens = indecomposables(&sorted);
    if gens.len() != 2 {
        return Err(Error::UnrecognizedPattern(format!(
            "expected two indecomposable degrees, found {}",
            gens.len()
        )));
    }
    let (u, v) = (gens[0], gens[1]);
    let coords = sorted
        .iter()
        .map(|&d| {
            coordinates(d, u, v)
                .map(|c| (d, c))
                .ok_or_else(|| Error::UnrecognizedPattern(format!("{d} is not in the cone of {u}, {v}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let set: BTreeSet<[u32; 2]> = coords.iter().map(|(_, c)| *c).collect();
    let matches = |p: &[[u32; 2]]| set == p.iter().copied().collect::<BTreeSet<_>>();
    let lie_type = if matches(A2) {
        LieType::A2
    } else if matches(B2_U) || matches(B2_V) {
        LieType::B2
    } else if matches(G2_U) || matches(G2_V) {
        LieType::G2
    } else {
        let shown: Vec<String> = set.iter().map(|c| format!("{}u+{}v", c[0], c[1])).collect();
        return Err(Error::UnrecognizedPattern(shown.join(", ")));
    };
    // The u-string through v has length -a_uv.
    let a_uv = -(set.iter().filter(|c| c[1] == 1).map(|c| c[0]).max().unwrap_or(0) as i64);
    let a_vu = -(set.iter().filter(|c| c[0] == 1).map(|c| c[1]).max().unwrap_or(0) as i64);
    Ok(TypeIdentification {
        lie_type,
        generators: vec![u, v],
        cartan_matrix: vec![vec![2, a_uv], vec![a_vu, 2]],
        coordinates: coords,
    })
}

/// Degree-vanishing checks: Serre degrees of the generators and every pair
/// whose sum leaves the lattice. Returns human-readable statements.
pub fn serre_degree_check(ident: &TypeIdentification, degrees: &[Degree]) -> Result<Vec<String>> {
    let lattice: BTreeSet<Degree> = degrees.iter().copied().collect();
    let mut out = Vec::new();
    if ident.generators.len() == 2 {
        for i in 0..2 {
            let j = 1 - i;
            let a = ident.cartan_matrix[i][j];
            let k = (1 - a) as u32;
            let d = k * ident.generators[i] + ident.generators[j];
            if lattice.contains(&d) {
                return Err(Error::Inconsistent(format!(
                    "Serre degree {d} of (ad ξ[{}])^{k} ξ[{}] lies in the lattice",
                    ident.generators[i], ident.generators[j]
                )));
            }
            out.push(format!(
                "(ad ξ[{}])^{k} ξ[{}] = 0: degree {d} not in lattice",
                ident.generators[i], ident.generators[j]
            ));
        }
    }
    for (x, &a) in degrees.iter().enumerate() {
        for &b in &degrees[x + 1..] {
            let s = a + b;
            if !lattice.contains(&s) {
                out.push(format!("[ξ[{a}], ξ[{b}]] = 0: degree {s} not in lattice"));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessStatus {
    /// Nonzero coefficient on a component that survives in the pre-Nichols
    /// algebra: the power is not primitive.
    Nonzero,
    /// The pure-power coefficient vanishes; no conclusion.
    Zero,
    /// One leg is a power of a non-Cartan simple root vector at or above its
    /// height, so the component is zero in the pre-Nichols algebra.
    Truncated,
    /// The expansion exceeds the budget.
    OverBudget,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub root: Degree,
    pub word: Word,
    pub left: Degree,
    pub right: Degree,
    pub coefficient: Option<Cyclotomic>,
    pub status: WitnessStatus,
}

/// Coefficient of `x_1^{N a} ⊗ x_2^{N b}` in `Δ([l_β]_c^N)` for each Cartan
/// root `β = a α_1 + b α_2` with `a, b > 0`.
pub fn primitivity_witnesses(
    q: &BraidingMatrix,
    rs: &RootSystemData,
    budget: Budget,
) -> Result<Vec<Witness>> {
    let words = root_words(rs)?;
    let field = q.field();
    let survives = |i: usize, exp: u32| {
        let s = Degree::simple(i);
        rs.is_cartan(s) || exp < rs.order(s).unwrap_or(0)
    };
    let mut out = Vec::new();
    for (k, &beta) in rs.roots.iter().enumerate() {
        if !rs.cartan_flags[k] || beta.0[0] == 0 || beta.0[1] == 0 {
            continue;
        }
        let n = rs.orders[k];
        let (a, b) = (n * beta.0[0], n * beta.0[1]);
        let left = Degree::new(a, 0);
        let right = Degree::new(0, b);
        let word = words[&beta].clone();
        let mut w = Witness {
            root: beta,
            word: word.clone(),
            left,
            right,
            coefficient: None,
            status: WitnessStatus::Truncated,
        };
        if !survives(0, a) || !survives(1, b) {
            out.push(w);
            continue;
        }
        let h = hyperletter(&word, q);
        let estimate = BigUint::from(h.len()).pow(n);
        if budget.check_count(estimate).is_err() {
            w.status = WitnessStatus::OverBudget;
            out.push(w);
            continue;
        }
        let comp = coproduct_component(&h.power(n, field), left, q);
        let lw = Word::from_letters(vec![1; a as usize]);
        let rw = Word::from_letters(vec![2; b as usize]);
        match comp.coeff(&lw, &rw) {
            Some(c) => {
                w.coefficient = Some(c.clone());
                w.status = WitnessStatus::Nonzero;
            }
            None => w.status = WitnessStatus::Zero,
        }
        out.push(w);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GenerationStatus {
    /// At most two Cartan roots: nothing beyond the generators.
    #[serde(rename = "not required")]
    NotRequired,
    /// Every non-generator power has a nonzero pure-power witness.
    #[serde(rename = "verified")]
    Verified,
    /// Some non-generator power has no witness within the budget.
    #[serde(rename = "assumed (not verified at budget)")]
    Assumed,
}

impl fmt::Display for GenerationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GenerationStatus::NotRequired => "not required",
            GenerationStatus::Verified => "verified",
            GenerationStatus::Assumed => "assumed (not verified at budget)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootEntry {
    pub vec: Degree,
    pub cartan: bool,
    pub order: u32,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanDegree {
    pub root: Degree,
    pub order: u32,
    pub degree: Degree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LieReport {
    pub matrix: String,
    pub diagram: String,
    pub roots: Vec<RootEntry>,
    pub orbit: Vec<String>,
    pub cartan_degrees: Vec<CartanDegree>,
    pub degrees: Vec<Degree>,
    #[serde(rename = "type")]
    pub lie_type: LieType,
    pub generators: Vec<Degree>,
    #[serde(rename = "cartan")]
    pub cartan_matrix: Vec<Vec<i64>>,
    pub serre_checks: Vec<String>,
    pub witnesses: Vec<Witness>,
    pub generation: GenerationStatus,
    pub condition11: bool,
    pub condition11_counterexamples: Vec<(Degree, Degree)>,
    pub warnings: Vec<String>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    pub budget: Budget,
}

/// Full pipeline from a braiding matrix to the report.
pub fn build_report(q: &BraidingMatrix, opts: ReportOptions) -> Result<LieReport> {
    let rs = positive_roots(q)?;
    let words = root_words(&rs)?;
    let orbit = weyl_orbit(q)?;
    let cond = check_condition_11(q, &rs);
    let degrees = degree_lattice(&rs)?;
    let ident = identify_type(&degrees)?;
    let serre_checks = serre_degree_check(&ident, &degrees)?;
    let witnesses = primitivity_witnesses(q, &rs, opts.budget)?;

    let non_generators: Vec<Degree> = cartan_roots(&rs)
        .into_iter()
        .filter(|&b| !ident.generators.contains(&(rs.order(b).expect("root") * b)))
        .collect();
    let generation = if non_generators.is_empty() {
        GenerationStatus::NotRequired
    } else if non_generators.iter().all(|b| {
        witnesses
            .iter()
            .any(|w| w.root == *b && w.status == WitnessStatus::Nonzero)
    }) {
        GenerationStatus::Verified
    } else {
        GenerationStatus::Assumed
    };

    let mut warnings = Vec::new();
    if !cond.holds {
        warnings.push(format!(
            "condition q_ab^(N_b) = 1 on Cartan roots fails for {} pair(s)",
            cond.counterexamples.len()
        ));
    }
    if generation == GenerationStatus::Assumed {
        warnings.push("generation by two primitive powers assumed, not certified at this budget".into());
    }

    Ok(LieReport {
        matrix: q.to_string(),
        diagram: q.diagram().to_string(),
        roots: rs
            .roots
            .iter()
            .enumerate()
            .map(|(k, &r)| RootEntry {
                vec: r,
                cartan: rs.cartan_flags[k],
                order: rs.orders[k],
                word: words[&r].clone(),
            })
            .collect(),
        orbit: orbit.iter().map(ToString::to_string).collect(),
        cartan_degrees: cartan_roots(&rs)
            .into_iter()
            .map(|r| {
                let n = rs.order(r).expect("root");
                CartanDegree {
                    root: r,
                    order: n,
                    degree: n * r,
                }
            })
            .collect(),
        degrees,
        lie_type: ident.lie_type,
        generators: ident.generators,
        cartan_matrix: ident.cartan_matrix,
        serre_checks,
        witnesses,
        generation,
        condition11: cond.holds,
        condition11_counterexamples: cond.counterexamples,
        warnings,
    })
}
