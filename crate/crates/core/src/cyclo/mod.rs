//! Exact arithmetic in a cyclotomic field `Q(ζ_L)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(L)-1}` as a vector
//! of integer numerators over one positive common denominator. Every
//! operation reduces modulo the `L`-th cyclotomic polynomial, so two
//! elements are equal exactly when their stored representations are equal.

mod literal;

pub use literal::{parse_literal, Literal};

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

struct FieldInner {
    conductor: u32,
    /// Coefficients of Φ_L, lowest degree first; monic.
    phi: Vec<i64>,
}

/// Handle on `Q(ζ_L)` for a fixed conductor `L`. Cheap to clone.
#[derive(Clone)]
pub struct CyclotomicField {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})", self.inner.conductor)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.inner.conductor == other.inner.conductor
    }
}
impl Eq for CyclotomicField {}

fn field_cache() -> &'static Mutex<HashMap<u32, CyclotomicField>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, CyclotomicField>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer polynomial long division by a monic divisor; panics if inexact.
fn div_exact_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

fn cyclotomic_poly(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_poly(d, memo);
            p = div_exact_monic(&p, &phi_d);
        }
    }
    memo.insert(n, p.clone());
    p
}

impl CyclotomicField {
    /// The field `Q(ζ_L)`. Instances are shared per conductor.
    pub fn new(conductor: u32) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let mut cache = field_cache().lock().expect("field cache poisoned");
        if let Some(f) = cache.get(&conductor) {
            return f.clone();
        }
        let mut memo = HashMap::new();
        let phi = cyclotomic_poly(conductor, &mut memo);
        let field = CyclotomicField {
            inner: Arc::new(FieldInner { conductor, phi }),
        };
        cache.insert(conductor, field.clone());
        field
    }

    /// Conductor for a session whose inputs use roots of the given orders:
    /// their lcm, made even so that `-1` is always present.
    pub fn session(orders: impl IntoIterator<Item = u32>) -> Self {
        let l = orders.into_iter().fold(2u32, |acc, n| acc.lcm(&n.max(1)));
        Self::new(l)
    }

    pub fn conductor(&self) -> u32 {
        self.inner.conductor
    }

    /// `φ(L)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.inner.phi.len() - 1
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            field: self.clone(),
            num: Vec::new(),
            den: BigInt::one(),
        }
    }

    pub fn one(&self) -> Cyclotomic {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Cyclotomic {
        self.from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, r: BigRational) -> Cyclotomic {
        let mut c = Cyclotomic {
            field: self.clone(),
            num: vec![r.numer().clone()],
            den: r.denom().clone(),
        };
        c.normalize();
        c
    }

    /// `ζ_L^e` for any integer exponent.
    pub fn zeta_pow(&self, e: i64) -> Cyclotomic {
        let l = self.conductor() as i64;
        let e = e.rem_euclid(l) as usize;
        let mut num = vec![BigInt::zero(); e + 1];
        num[e] = BigInt::one();
        let mut c = Cyclotomic {
            field: self.clone(),
            num,
            den: BigInt::one(),
        };
        c.reduce();
        c.normalize();
        c
    }

    /// `ζ_n^k`, embedded as `ζ_L^{(L/n)k}`.
    pub fn make_root(&self, order: u32, exponent: i64) -> Result<Cyclotomic> {
        let l = self.conductor();
        if order == 0 || !l.is_multiple_of(order) {
            return Err(Error::ConductorMismatch {
                order,
                conductor: l,
            });
        }
        Ok(self.zeta_pow((l / order) as i64 * exponent))
    }

    /// Build from power-basis rational coefficients (reduced on the way in).
    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> Cyclotomic {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        let mut c = Cyclotomic {
            field: self.clone(),
            num,
            den,
        };
        c.reduce();
        c.normalize();
        c
    }
}

/// An element of `Q(ζ_L)` in canonical reduced form.
#[derive(Clone)]
pub struct Cyclotomic {
    field: CyclotomicField,
    /// Numerators in the power basis, trailing zeros trimmed.
    num: Vec<BigInt>,
    /// Positive, coprime to the content of `num`.
    den: BigInt,
}

impl Cyclotomic {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num.len() == 1 && self.num[0].is_one() && self.den.is_one()
    }

    /// Power-basis coefficient of `ζ_L^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigRational {
        match self.num.get(k) {
            Some(n) => BigRational::new(n.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    /// Sparse view of the coefficients: `(k, c_k)` for every nonzero `c_k`.
    pub fn coeffs(&self) -> Vec<(usize, BigRational)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, n)| !n.is_zero())
            .map(|(k, n)| (k, BigRational::new(n.clone(), self.den.clone())))
            .collect()
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.num.len() {
            0 => Some(BigRational::zero()),
            1 => Some(BigRational::new(self.num[0].clone(), self.den.clone())),
            _ => None,
        }
    }

    fn check_field(&self, other: &Cyclotomic) {
        assert!(
            self.field == other.field,
            "cyclotomic conductor mismatch: {} vs {}",
            self.conductor(),
            other.conductor()
        );
    }

    fn reduce(&mut self) {
        let phi = &self.field.inner.phi;
        let d = phi.len() - 1;
        if self.num.len() <= d {
            return;
        }
        for k in (d..self.num.len()).rev() {
            let c = std::mem::take(&mut self.num[k]);
            if c.is_zero() {
                continue;
            }
            for (i, &p) in phi[..d].iter().enumerate() {
                if p != 0 {
                    self.num[k - d + i] -= &c * p;
                }
            }
        }
        self.num.truncate(d);
    }

    fn normalize(&mut self) {
        while self.num.last().is_some_and(|c| c.is_zero()) {
            self.num.pop();
        }
        if self.num.is_empty() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    fn combine(&self, other: &Cyclotomic, sign: i8) -> Cyclotomic {
        self.check_field(other);
        let n = self.num.len().max(other.num.len());
        let mut num = Vec::with_capacity(n);
        let (fa, fb) = if self.den == other.den {
            (BigInt::one(), BigInt::one())
        } else {
            (other.den.clone(), self.den.clone())
        };
        let den = if self.den == other.den {
            self.den.clone()
        } else {
            &self.den * &other.den
        };
        for k in 0..n {
            let a = self.num.get(k).map(|x| x * &fa).unwrap_or_default();
            let b = other.num.get(k).map(|x| x * &fb).unwrap_or_default();
            num.push(if sign > 0 { a + b } else { a - b });
        }
        let mut c = Cyclotomic {
            field: self.field.clone(),
            num,
            den,
        };
        c.normalize();
        c
    }

    fn product(&self, other: &Cyclotomic) -> Cyclotomic {
        self.check_field(other);
        if self.is_zero() || other.is_zero() {
            return self.field.zero();
        }
        let mut num = vec![BigInt::zero(); self.num.len() + other.num.len() - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        let mut c = Cyclotomic {
            field: self.field.clone(),
            num,
            den: &self.den * &other.den,
        };
        c.reduce();
        c.normalize();
        c
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let to_q = |v: &[BigInt], d: &BigInt| -> Vec<BigRational> {
            v.iter()
                .map(|x| BigRational::new(x.clone(), d.clone()))
                .collect()
        };
        // Extended Euclid in Q[x]: track s with s·a ≡ r (mod Φ).
        let phi: Vec<BigInt> = self.field.inner.phi.iter().map(|&c| BigInt::from(c)).collect();
        let mut r0 = to_q(&phi, &BigInt::one());
        let mut r1 = to_q(&self.num, &self.den);
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = qpoly_divmod(&r0, &r1);
            let s2 = qpoly_sub(&s0, &qpoly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let c = r1
            .first()
            .cloned()
            .ok_or_else(|| Error::Inconsistent("non-unit modulo cyclotomic polynomial".into()))?;
        let s: Vec<BigRational> = s1.into_iter().map(|x| x / &c).collect();
        Ok(self.field.from_coeffs(&s))
    }

    /// `self / other`.
    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, n: i64) -> Result<Cyclotomic> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow_u(n.unsigned_abs()))
    }

    pub fn pow_u(&self, mut n: u64) -> Cyclotomic {
        let mut acc = self.field.one();
        let mut b = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            n >>= 1;
            if n > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Multiplicative order when `self` is a root of unity.
    ///
    /// The roots of unity in `Q(ζ_L)` are exactly the `lcm(2, L)`-th roots,
    /// which bounds the search.
    pub fn order_of(&self) -> Result<Option<u32>> {
        if self.is_zero() {
            return Err(Error::Domain("order of zero".into()));
        }
        let bound = self.conductor().lcm(&2);
        if !self.pow_u(bound as u64).is_one() {
            return Ok(None);
        }
        for d in 1..=bound {
            if bound.is_multiple_of(d) && self.pow_u(d as u64).is_one() {
                return Ok(Some(d));
            }
        }
        unreachable!("a^bound = 1 was checked")
    }

    /// If `self = ζ_L^e` for some `e`, returns `e` in `0..lcm(2,L)` expressed
    /// as an exponent of `ζ_{lcm(2,L)}`.
    pub fn root_exponent(&self) -> Option<u32> {
        let bound = self.conductor().lcm(&2);
        let field = &self.field;
        let l = field.conductor();
        (0..bound).find(|&e| {
            // ζ_bound^e expressed through ζ_L when bound = L; otherwise bound = 2L
            // and ζ_{2L}^e = ±ζ_L^{e/2} only for even e or via -1 = ζ_L^{L/2}
            // when L is even (which is the case whenever bound = L).
            if bound == l {
                field.zeta_pow(e as i64) == *self
            } else if e % 2 == 0 {
                field.zeta_pow((e / 2) as i64) == *self
            } else {
                -field.zeta_pow(((e + l) / 2) as i64) == *self
            }
        })
    }

    /// Floating-point rendering `(re, im)` under `ζ_L = exp(2πi/L)`; debug only.
    pub fn approx(&self) -> (f64, f64) {
        let l = self.conductor() as f64;
        let den = bigint_to_f64(&self.den);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, n) in self.num.iter().enumerate() {
            let c = bigint_to_f64(n) / den;
            let t = 2.0 * std::f64::consts::PI * k as f64 / l;
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }
}

fn bigint_to_f64(n: &BigInt) -> f64 {
    n.to_string().parse().unwrap_or(f64::NAN)
}

fn qpoly_trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn qpoly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(k).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    qpoly_trim(out)
}

fn qpoly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    qpoly_trim(out)
}

fn qpoly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = qpoly_trim(a.to_vec());
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] / &lead;
        if !c.is_zero() {
            for (i, y) in b.iter().enumerate() {
                rem[k + i] -= &c * y;
            }
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (qpoly_trim(quot), qpoly_trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.num == other.num && self.den == other.den
    }
}
impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl Ord for Cyclotomic {
    /// Arbitrary but total and deterministic; used only for canonical keys.
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor()
            .cmp(&other.conductor())
            .then_with(|| self.num.len().cmp(&other.num.len()))
            .then_with(|| self.num.cmp(&other.num))
            .then_with(|| self.den.cmp(&other.den))
    }
}
impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                $body(&self, rhs)
            }
        }
        impl $tr<Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, 1));
binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| a.combine(b, -1));
binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a.product(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.combine(rhs, 1);
    }
}
impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.combine(rhs, -1);
    }
}
impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = self.product(rhs);
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}
impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders in the literal grammar, e.g. `1 - z6`, `-2*z12^3 + 1/2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let l = self.conductor();
        let mut first = true;
        for (k, c) in self.coeffs() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let basis = match k {
                0 => None,
                1 => Some(format!("z{l}")),
                _ => Some(format!("z{l}^{k}")),
            };
            match basis {
                None => write!(f, "{a}")?,
                Some(b) if a.is_one() => write!(f, "{b}")?,
                Some(b) => write!(f, "{a}*{b}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
