//! The free braided algebra `T(V)` on `x_1, x_2`: sparse elements, the
//! braided bracket, the braided coproduct and its bidegree components.

mod pairing;

pub use pairing::{
    nichols_graded_dim, nichols_radical_member, nichols_root_height, shuffle_pairing,
    shuffle_pairing_elements, Budget, ShuffleContext,
};

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::Serialize;

use crate::braiding::BraidingMatrix;
use crate::cyclo::{Cyclotomic, CyclotomicField};
use crate::degree::Degree;
use crate::lyndon::Word;

/// Sparse linear combination of words. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<Word, Cyclotomic>,
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one(field: &CyclotomicField) -> Self {
        TensorElement::word(Word::empty(), field.one())
    }

    pub fn word(w: Word, c: Cyclotomic) -> Self {
        let mut e = TensorElement::zero();
        e.add_term(w, c);
        e
    }

    pub fn generator(i: u8, field: &CyclotomicField) -> Self {
        TensorElement::word(Word::letter(i), field.one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, Cyclotomic)>) -> Self {
        let mut e = TensorElement::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Option<&Cyclotomic> {
        self.terms.get(w)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Cyclotomic)> {
        self.terms.iter()
    }

    /// The single degree of all terms, if the element is homogeneous and
    /// nonzero.
    pub fn degree(&self) -> Option<Degree> {
        let mut it = self.terms.keys().map(Word::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Terms grouped by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<Degree, TensorElement> {
        let mut out: BTreeMap<Degree, TensorElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.degree()).or_default().add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &Cyclotomic) -> TensorElement {
        TensorElement::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), c * s)))
    }

    /// Concatenation product.
    pub fn multiply(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `ab - q(deg a, deg b) ba`, taken term by term.
    pub fn braided_bracket(&self, other: &TensorElement, q: &BraidingMatrix) -> TensorElement {
        let mut out = TensorElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let ab = a * b;
                let twist = q.bilinear_form(&u.degree().as_i64(), &v.degree().as_i64());
                out.add_term(v.concat(u), -(&ab * &twist));
                out.add_term(u.concat(v), ab);
            }
        }
        out
    }

    /// `a^n` by repeated squaring; `a^0` is the unit.
    pub fn power(&self, n: u32, field: &CyclotomicField) -> TensorElement {
        let mut result = TensorElement::one(field);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.multiply(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.multiply(&base);
            }
        }
        result
    }
}

impl Serialize for TensorElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            word: &'a Word,
            coeff: &'a Cyclotomic,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (word, coeff) in &self.terms {
            seq.serialize_element(&Term { word, coeff })?;
        }
        seq.end()
    }
}

/// Sparse element of `T(V) ⊗ T(V)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorSquareElement {
    terms: BTreeMap<(Word, Word), Cyclotomic>,
}

impl TensorSquareElement {
    pub fn zero() -> Self {
        TensorSquareElement::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((Word, Word), Cyclotomic)>) -> Self {
        let mut e = TensorSquareElement::zero();
        for (k, c) in terms {
            e.add_term(k.0, k.1, c);
        }
        e
    }

    pub fn add_term(&mut self, left: Word, right: Word, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        let key = (left, right);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, left: &Word, right: &Word) -> Option<&Cyclotomic> {
        self.terms.get(&(left.clone(), right.clone()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Cyclotomic)> {
        self.terms.iter()
    }

    /// Keep only terms whose left factor has degree `d`.
    pub fn restrict_left(&self, d: Degree) -> TensorSquareElement {
        TensorSquareElement {
            terms: self
                .terms
                .iter()
                .filter(|((l, _), _)| l.degree() == d)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// `(a⊗b)(c⊗d) = q(deg b, deg c) ac⊗bd`.
    pub fn multiply(&self, other: &TensorSquareElement, q: &BraidingMatrix) -> TensorSquareElement {
        let mut out = TensorSquareElement::zero();
        for ((a, b), x) in &self.terms {
            for ((c, d), y) in &other.terms {
                let t = q.bilinear_form(&b.degree().as_i64(), &c.degree().as_i64());
                out.add_term(a.concat(c), b.concat(d), &(x * y) * &t);
            }
        }
        out
    }
}

impl Serialize for TensorSquareElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            left: &'a Word,
            right: &'a Word,
            coeff: &'a Cyclotomic,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for ((left, right), coeff) in &self.terms {
            seq.serialize_element(&Term { left, right, coeff })?;
        }
        seq.end()
    }
}

/// Powers `q_ab^k` cached per letter pair.
struct PowerTable {
    q: [[Cyclotomic; 2]; 2],
    cache: [[Vec<Cyclotomic>; 2]; 2],
}

impl PowerTable {
    fn new(q: &BraidingMatrix) -> Self {
        let e = |i, j| q.entry(i, j).clone();
        let one = q.field().one();
        PowerTable {
            q: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
            cache: std::array::from_fn(|_| std::array::from_fn(|_| vec![one.clone()])),
        }
    }

    fn pow(&mut self, a: usize, b: usize, k: usize) -> &Cyclotomic {
        let v = &mut self.cache[a][b];
        while v.len() <= k {
            let next = v.last().expect("seeded") * &self.q[a][b];
            v.push(next);
        }
        &v[k]
    }

    fn scalar(&mut self, e: &[[usize; 2]; 2]) -> Cyclotomic {
        let mut s = self.pow(0, 0, e[0][0]).clone();
        for (a, b) in [(0, 1), (1, 0), (1, 1)] {
            if e[a][b] > 0 {
                s = &s * self.pow(a, b, e[a][b]);
            }
        }
        s
    }
}

/// Depth-first enumeration of position splits of a word. A position sent
/// left after `r` earlier right-going positions picks up `q(letter_r, letter)`
/// for each of them; only the exponent counts are tracked.
struct SplitWalker<'a> {
    letters: &'a [u8],
    target: Option<[usize; 2]>,
    remaining: [usize; 2],
    left: Vec<u8>,
    right: Vec<u8>,
    right_count: [usize; 2],
    exps: [[usize; 2]; 2],
}

impl<'a> SplitWalker<'a> {
    fn run(&mut self, pos: usize, emit: &mut dyn FnMut(&[u8], &[u8], &[[usize; 2]; 2])) {
        if pos == self.letters.len() {
            if self.target.is_none_or(|t| t == [0, 0]) {
                emit(&self.left, &self.right, &self.exps);
            }
            return;
        }
        let l = self.letters[pos];
        let li = (l - 1) as usize;
        self.remaining[li] -= 1;
        // Send to the left factor.
        let can_left = self.target.is_none_or(|t| t[li] > 0);
        if can_left {
            if let Some(t) = self.target.as_mut() {
                t[li] -= 1;
            }
            self.exps[0][li] += self.right_count[0];
            self.exps[1][li] += self.right_count[1];
            self.left.push(l);
            self.run(pos + 1, emit);
            self.left.pop();
            self.exps[0][li] -= self.right_count[0];
            self.exps[1][li] -= self.right_count[1];
            if let Some(t) = self.target.as_mut() {
                t[li] += 1;
            }
        }
        // Send to the right factor, provided the quota can still be met.
        let can_right = self
            .target
            .is_none_or(|t| t[li] <= self.remaining[li]);
        if can_right {
            self.right_count[li] += 1;
            self.right.push(l);
            self.run(pos + 1, emit);
            self.right.pop();
            self.right_count[li] -= 1;
        }
        self.remaining[li] += 1;
    }
}

fn split_word(
    w: &Word,
    target: Option<Degree>,
    table: &mut PowerTable,
    coeff: &Cyclotomic,
    out: &mut TensorSquareElement,
) {
    let letters = w.letters();
    let d = w.degree();
    let target = match target {
        Some(t) if !t.le(&d) => return,
        Some(t) => Some([t.0[0] as usize, t.0[1] as usize]),
        None => None,
    };
    let mut walker = SplitWalker {
        letters,
        target,
        remaining: [d.0[0] as usize, d.0[1] as usize],
        left: Vec::with_capacity(letters.len()),
        right: Vec::with_capacity(letters.len()),
        right_count: [0, 0],
        exps: [[0; 2]; 2],
    };
    // Pairs with identical exponent data share one scalar; collect first.
    let mut pending: Vec<(Word, Word, [[usize; 2]; 2])> = Vec::new();
    walker.run(0, &mut |l, r, e| {
        pending.push((Word::from_letters(l.to_vec()), Word::from_letters(r.to_vec()), *e))
    });
    for (l, r, e) in pending {
        let s = table.scalar(&e);
        out.add_term(l, r, &s * coeff);
    }
}

/// Braided coproduct, the algebra map with `Δ(x_i) = x_i⊗1 + 1⊗x_i` into the
/// twisted tensor square.
pub fn coproduct(a: &TensorElement, q: &BraidingMatrix) -> TensorSquareElement {
    let mut table = PowerTable::new(q);
    let mut out = TensorSquareElement::zero();
    for (w, c) in a.terms() {
        split_word(w, None, &mut table, c, &mut out);
    }
    out
}

/// The part of `Δ(a)` whose left factor has degree `left`. Only position
/// subsets with the right letter content are visited.
pub fn coproduct_component(
    a: &TensorElement,
    left: Degree,
    q: &BraidingMatrix,
) -> TensorSquareElement {
    let mut table = PowerTable::new(q);
    let mut out = TensorSquareElement::zero();
    for (w, c) in a.terms() {
        split_word(w, Some(left), &mut table, c, &mut out);
    }
    out
}
