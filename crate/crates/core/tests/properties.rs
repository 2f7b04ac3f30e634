//! Randomized invariants over the field, words, coproduct, pairing and type
//! identification.

use std::collections::BTreeMap;

use nichols_core::lieinfer::identify_type;
use nichols_core::lyndon::{deglex_less, is_lyndon, lyndon_factorize};
use nichols_core::tensoralg::{coproduct, shuffle_pairing};
use nichols_core::{BraidingMatrix, Cyclotomic, CyclotomicField, Degree, TensorElement, Word};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const L: u32 = 12;

fn field() -> CyclotomicField {
    CyclotomicField::new(L)
}

fn cyc() -> impl Strategy<Value = Cyclotomic> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 0..8).prop_map(|cs| {
        let coeffs: Vec<BigRational> = cs
            .into_iter()
            .map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        field().from_coeffs(&coeffs)
    })
}

fn nonzero_cyc() -> impl Strategy<Value = Cyclotomic> {
    cyc().prop_filter("nonzero", |c| !c.is_zero())
}

fn braiding() -> impl Strategy<Value = BraidingMatrix> {
    prop::array::uniform4(0i64..24).prop_map(|e| {
        let k = CyclotomicField::new(24);
        BraidingMatrix::new(vec![
            vec![k.zeta_pow(e[0]), k.zeta_pow(e[1])],
            vec![k.zeta_pow(e[2]), k.zeta_pow(e[3])],
        ])
        .unwrap()
    })
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=2, 0..=max).prop_map(Word::from_letters)
}

fn element(max_len: usize) -> impl Strategy<Value = TensorElement> {
    prop::collection::vec((word(max_len), -3i64..=3), 1..4).prop_map(|ts| {
        let k = CyclotomicField::new(24);
        TensorElement::from_terms(ts.into_iter().map(|(w, c)| (w, k.from_int(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms(a in cyc(), b in cyc(), c in cyc()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &a), &field().zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn inverses(a in nonzero_cyc()) {
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn power_law(a in nonzero_cyc(), m in -50i64..=50, n in -50i64..=50) {
        prop_assert_eq!(a.pow(m + n).unwrap(), a.pow(m).unwrap() * a.pow(n).unwrap());
    }

    #[test]
    fn bilinearity(q in braiding(), a in prop::array::uniform2(-4i64..=4),
                   b in prop::array::uniform2(-4i64..=4), c in prop::array::uniform2(-4i64..=4)) {
        let ab = [a[0] + b[0], a[1] + b[1]];
        prop_assert_eq!(q.bilinear_form(&ab, &c), q.bilinear_form(&a, &c) * q.bilinear_form(&b, &c));
        let bc = [b[0] + c[0], b[1] + c[1]];
        prop_assert_eq!(q.bilinear_form(&a, &bc), q.bilinear_form(&a, &b) * q.bilinear_form(&a, &c));
    }

    #[test]
    fn deglex_is_multiplicative(u in word(6), v in word(6), w in word(6)) {
        if deglex_less(&v, &u) {
            prop_assert!(deglex_less(&w.concat(&v), &w.concat(&u)));
            prop_assert!(deglex_less(&v.concat(&w), &u.concat(&w)));
        }
    }
}

#[test]
fn root_orders() {
    let k = field();
    for n in [1u32, 2, 3, 4, 6, 12] {
        for e in 1..n as i64 {
            let g = num_integer::gcd(n as i64, e) as u32;
            assert_eq!(k.make_root(n, e).unwrap().order_of().unwrap(), Some(n / g));
        }
    }
}

fn all_words(max: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max {
        layer = layer
            .iter()
            .flat_map(|w| [1u8, 2].map(|l| w.concat(&Word::letter(l))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn brute_lyndon(w: &Word) -> bool {
    let l = w.letters();
    // smaller than every rotation-free proper suffix
    !l.is_empty() && (1..l.len()).all(|k| l < &l[k..])
}

/// All factorizations into Lyndon words in non-increasing order.
fn brute_factorizations(w: &[u8]) -> Vec<Vec<Vec<u8>>> {
    if w.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for k in 1..=w.len() {
        let head = Word::from_letters(w[..k].to_vec());
        if !brute_lyndon(&head) {
            continue;
        }
        for mut rest in brute_factorizations(&w[k..]) {
            if rest.first().is_none_or(|f| f.as_slice() <= &w[..k]) {
                rest.insert(0, w[..k].to_vec());
                out.push(rest);
            }
        }
    }
    out
}

#[test]
fn lyndon_factorization_matches_brute_force() {
    for w in all_words(10) {
        if !w.is_empty() {
            assert_eq!(is_lyndon(&w).unwrap(), brute_lyndon(&w), "{w}");
        }
        let brute = brute_factorizations(w.letters());
        assert_eq!(brute.len(), 1, "factorization of {w} not unique");
        let got: Vec<Vec<u8>> = lyndon_factorize(&w).iter().map(|f| f.letters().to_vec()).collect();
        assert_eq!(got, brute[0], "{w}");
    }
}

type Triple = BTreeMap<(Word, Word, Word), Cyclotomic>;

fn add(t: &mut Triple, k: (Word, Word, Word), c: Cyclotomic) {
    let e = t.entry(k.clone()).or_insert_with(|| c.field().zero());
    *e += &c;
    if e.is_zero() {
        t.remove(&k);
    }
}

fn coassoc_sides(a: &TensorElement, q: &BraidingMatrix) -> (Triple, Triple) {
    let one = q.field().one();
    let d = coproduct(a, q);
    let (mut left, mut right) = (Triple::new(), Triple::new());
    for ((l, r), c) in d.terms() {
        for ((l1, l2), c1) in coproduct(&TensorElement::word(l.clone(), one.clone()), q).terms() {
            add(&mut left, (l1.clone(), l2.clone(), r.clone()), c * c1);
        }
        for ((r1, r2), c2) in coproduct(&TensorElement::word(r.clone(), one.clone()), q).terms() {
            add(&mut right, (l.clone(), r1.clone(), r2.clone()), c * c2);
        }
    }
    (left, right)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coassociativity(q in braiding(), a in element(6)) {
        let (l, r) = coassoc_sides(&a, &q);
        prop_assert_eq!(l, r);
    }

    #[test]
    fn coproduct_is_an_algebra_map(q in braiding(), a in element(4), b in element(4)) {
        let lhs = coproduct(&a.multiply(&b), &q);
        let rhs = coproduct(&a, &q).multiply(&coproduct(&b, &q), &q);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_respects_grading(q in braiding(), a in element(6)) {
        for ((l, r), _) in coproduct(&a, &q).terms() {
            prop_assert!(a.terms().any(|(w, _)| w.degree() == l.degree() + r.degree()));
        }
    }

    #[test]
    fn identify_type_invariances(k in 1u32..6, swap in any::<bool>(), which in 0usize..4) {
        let families: [&[(u32, u32)]; 4] = [
            &[(1, 0), (1, 1), (0, 1)],
            &[(1, 0), (2, 1), (1, 1), (0, 1)],
            &[(1, 0), (3, 1), (2, 1), (3, 2), (1, 1), (0, 1)],
            &[(1, 0), (0, 1)],
        ];
        let base: Vec<Degree> = families[which].iter().map(|&(a, b)| Degree::new(a, b)).collect();
        let t0 = identify_type(&base).unwrap().lie_type;
        let moved: Vec<Degree> = base
            .iter()
            .map(|d| {
                let d = if swap { Degree::new(d.0[1], d.0[0]) } else { *d };
                k * d
            })
            .collect();
        prop_assert_eq!(identify_type(&moved).unwrap().lie_type, t0);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn bracket_cross_coefficient(q in braiding()) {
        let k = q.field().clone();
        let x1 = TensorElement::generator(1, &k);
        let x2 = TensorElement::generator(2, &k);
        let d = coproduct(&x1.braided_bracket(&x2, &q), &q);
        let expect = k.one() - q.entry(0, 1) * q.entry(1, 0);
        let one = Word::letter(1);
        let two = Word::letter(2);
        prop_assert_eq!(d.coeff(&one, &two).cloned().unwrap_or_else(|| k.zero()), expect);
        prop_assert!(d.coeff(&two, &one).is_none());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// `⟨y y', x⟩ = Σ ⟨y, x^(2)⟩⟨y', x^(1)⟩` and the mirrored first axiom.
    #[test]
    fn pairing_axioms(q in braiding(), y in word(3), y2 in word(3), pick in any::<prop::sample::Index>()) {
        let d = y.degree() + y2.degree();
        let candidates = Word::all_of_degree(d);
        let x = pick.get(&candidates).clone();
        let k = q.field().clone();
        let yy = y.concat(&y2);
        let delta = coproduct(&TensorElement::word(x.clone(), k.one()), &q);
        let mut s = k.zero();
        for ((l, r), c) in delta.terms() {
            s += &(c * &(shuffle_pairing(&y, r, &q) * shuffle_pairing(&y2, l, &q)));
        }
        prop_assert_eq!(shuffle_pairing(&yy, &x, &q), s);

        let delta = coproduct(&TensorElement::word(x.clone(), k.one()), &q);
        let mut s = k.zero();
        for ((l, r), c) in delta.terms() {
            s += &(c * &(shuffle_pairing(r, &y, &q) * shuffle_pairing(l, &y2, &q)));
        }
        prop_assert_eq!(shuffle_pairing(&x, &yy, &q), s);
    }
}
