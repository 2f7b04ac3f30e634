//! Words over `{x_1, x_2}`: orders, Lyndon factorization, Shirshov splits,
//! hyperletters and root words.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::braiding::BraidingMatrix;
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::rootsys::RootSystemData;
use crate::tensoralg::TensorElement;

/// A word in the letters `1` (`x_1`) and `2` (`x_2`). `Ord` is the
/// lexicographic order in which a proper prefix is smaller.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: u8) -> Self {
        assert!(i == 1 || i == 2, "letters are 1 and 2");
        Word(vec![i])
    }

    pub fn from_letters(letters: Vec<u8>) -> Self {
        assert!(letters.iter().all(|&l| l == 1 || l == 2), "letters are 1 and 2");
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Degree {
        let ones = self.0.iter().filter(|&&l| l == 1).count() as u32;
        Degree::new(ones, self.0.len() as u32 - ones)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    pub fn repeat(&self, n: usize) -> Word {
        Word(self.0.repeat(n))
    }

    /// All words of the given degree, in lexicographic order.
    pub fn all_of_degree(d: Degree) -> Vec<Word> {
        let mut out = Vec::new();
        let mut buf = Vec::with_capacity(d.total() as usize);
        fn rec(a: u32, b: u32, buf: &mut Vec<u8>, out: &mut Vec<Word>) {
            if a == 0 && b == 0 {
                out.push(Word(buf.clone()));
                return;
            }
            if a > 0 {
                buf.push(1);
                rec(a - 1, b, buf, out);
                buf.pop();
            }
            if b > 0 {
                buf.push(2);
                rec(a, b - 1, buf, out);
                buf.pop();
            }
        }
        rec(d.0[0], d.0[1], &mut buf, &mut out);
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{self}")
    }
}

/// Digit-string form: `"112"` is `x_1x_1x_2`; `""` and `"1"`... note that
/// the empty word serializes as `""`.
impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        s.bytes()
            .enumerate()
            .map(|(pos, c)| match c {
                b'1' => Ok(1),
                b'2' => Ok(2),
                _ => Err(Error::Parse {
                    position: pos,
                    message: format!("letter '{}' not in {{1,2}}", c as char),
                }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let text: String = self.0.iter().map(|l| char::from(b'0' + l)).collect();
        s.serialize_str(&text)
    }
}

pub fn lex_less(u: &Word, v: &Word) -> bool {
    u < v
}

/// Deg-lex comparison: shorter words are greater; equal lengths compare
/// lexicographically. The empty word is the maximum.
pub fn deglex_cmp(u: &Word, v: &Word) -> Ordering {
    v.len().cmp(&u.len()).then_with(|| u.cmp(v))
}

/// `u ≺ v` in deg-lex.
pub fn deglex_less(u: &Word, v: &Word) -> bool {
    deglex_cmp(u, v) == Ordering::Less
}

/// Strictly smaller than every proper nonempty suffix.
pub fn is_lyndon(u: &Word) -> Result<bool> {
    if u.is_empty() {
        return Err(Error::Domain("the empty word is not Lyndon".into()));
    }
    let l = u.letters();
    Ok((1..l.len()).all(|k| l < &l[k..]))
}

/// Duval's algorithm: the unique non-increasing factorization into Lyndon
/// words.
pub fn lyndon_factorize(u: &Word) -> Vec<Word> {
    let s = u.letters();
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let mut j = i + 1;
        let mut k = i;
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        while i <= k {
            out.push(Word(s[i..i + j - k].to_vec()));
            i += j - k;
        }
    }
    out
}

/// The split `u = u_1 u_2` into Lyndon words with `u_2` lexicographically
/// smallest.
pub fn shirshov_split(u: &Word) -> Result<(Word, Word)> {
    if u.len() < 2 || !is_lyndon(u)? {
        return Err(Error::Domain(format!(
            "Shirshov split needs a Lyndon word of length >= 2, got {u}"
        )));
    }
    let mut best: Option<(Word, Word)> = None;
    for k in 1..u.len() {
        let (a, b) = (u.slice(0..k), u.slice(k..u.len()));
        if is_lyndon(&a)? && is_lyndon(&b)? && best.as_ref().is_none_or(|(_, bb)| b < *bb) {
            best = Some((a, b));
        }
    }
    best.ok_or_else(|| Error::Inconsistent(format!("Lyndon word {u} has no Lyndon split")))
}

/// `[u]_c`: letters are generators, Lyndon words are nested braided brackets
/// along Shirshov splits, other words are products of their Lyndon factors.
pub fn hyperletter(u: &Word, q: &BraidingMatrix) -> TensorElement {
    let field = q.field();
    if u.len() <= 1 {
        return TensorElement::word(u.clone(), field.one());
    }
    if is_lyndon(u).expect("nonempty") {
        let (a, b) = shirshov_split(u).expect("Lyndon of length >= 2");
        return hyperletter(&a, q).braided_bracket(&hyperletter(&b, q), q);
    }
    lyndon_factorize(u)
        .iter()
        .fold(TensorElement::one(field), |acc, f| acc.multiply(&hyperletter(f, q)))
}

/// Root words `l_β` for every root: `x_i` for simple roots, otherwise the
/// lexicographic maximum of `l_{δ1} l_{δ2}` over `δ1 + δ2 = β` with
/// `l_{δ1} < l_{δ2}`.
pub fn root_words(rs: &RootSystemData) -> Result<BTreeMap<Degree, Word>> {
    let mut by_height: Vec<Degree> = rs.roots.clone();
    by_height.sort_by_key(|d| (d.total(), *d));
    let mut words: BTreeMap<Degree, Word> = BTreeMap::new();
    for beta in by_height {
        let w = if beta == Degree::ALPHA1 {
            Word::letter(1)
        } else if beta == Degree::ALPHA2 {
            Word::letter(2)
        } else {
            let mut best: Option<Word> = None;
            for (d1, l1) in &words {
                let Some(d2) = beta.checked_sub(*d1) else {
                    continue;
                };
                let Some(l2) = words.get(&d2) else {
                    continue;
                };
                if l1 < l2 {
                    let cand = l1.concat(l2);
                    match &best {
                        Some(b) if *b == cand => {
                            return Err(Error::Inconsistent(format!("tie in root word for {beta}")))
                        }
                        Some(b) if *b > cand => {}
                        _ => best = Some(cand),
                    }
                }
            }
            best.ok_or_else(|| {
                Error::Inconsistent(format!("root {beta} is not a sum of two smaller roots"))
            })?
        };
        words.insert(beta, w);
    }
    Ok(words)
}

/// `l_β` for a single root.
pub fn root_word(rs: &RootSystemData, beta: Degree) -> Result<Word> {
    if !rs.contains(beta) {
        return Err(Error::Domain(format!("{beta} is not a positive root")));
    }
    Ok(root_words(rs)?.remove(&beta).expect("every root has a word"))
}

/// Whenever `α` precedes `β` and `α + β` is listed, it sits between them.
pub fn is_convex_order(roots: &[Degree]) -> bool {
    for (i, &a) in roots.iter().enumerate() {
        for (j, &b) in roots.iter().enumerate().skip(i + 1) {
            if let Some(k) = roots.iter().position(|&r| r == a + b) {
                if !(i < k && k < j) {
                    return false;
                }
            }
        }
    }
    true
}
