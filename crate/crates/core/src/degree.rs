use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

/// A vector in `N_0^2`: the `Z^2`-degree of a word, a root, or a PBW monomial.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Degree(pub [u32; 2]);

impl Degree {
    pub const ZERO: Degree = Degree([0, 0]);
    pub const ALPHA1: Degree = Degree([1, 0]);
    pub const ALPHA2: Degree = Degree([0, 1]);

    pub const fn new(a: u32, b: u32) -> Self {
        Degree([a, b])
    }

    /// Simple root `α_i` for a 0-based vertex.
    pub fn simple(i: usize) -> Self {
        let mut v = [0, 0];
        v[i] = 1;
        Degree(v)
    }

    pub fn total(&self) -> u32 {
        self.0[0] + self.0[1]
    }

    pub fn is_zero(&self) -> bool {
        self.0 == [0, 0]
    }

    pub fn as_i64(&self) -> [i64; 2] {
        [self.0[0] as i64, self.0[1] as i64]
    }

    pub fn checked_sub(&self, other: Degree) -> Option<Degree> {
        Some(Degree([
            self.0[0].checked_sub(other.0[0])?,
            self.0[1].checked_sub(other.0[1])?,
        ]))
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Degree) -> bool {
        self.0[0] <= other.0[0] && self.0[1] <= other.0[1]
    }

    pub fn from_i64(v: [i64; 2]) -> Option<Degree> {
        if v[0] < 0 || v[1] < 0 {
            return None;
        }
        Some(Degree([v[0] as u32, v[1] as u32]))
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, o: Degree) -> Degree {
        Degree([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }
}

impl Mul<Degree> for u32 {
    type Output = Degree;
    fn mul(self, d: Degree) -> Degree {
        Degree([self * d.0[0], self * d.0[1]])
    }
}

/// `3a1+2a2` style, `0` for the zero vector.
impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.0;
        let part = |c: u32, i: u32| match c {
            1 => format!("a{i}"),
            _ => format!("{c}a{i}"),
        };
        match (a, b) {
            (0, 0) => write!(f, "0"),
            (a, 0) => write!(f, "{}", part(a, 1)),
            (0, b) => write!(f, "{}", part(b, 2)),
            (a, b) => write!(f, "{}+{}", part(a, 1), part(b, 2)),
        }
    }
}
