//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails or exceeds its time limit.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use nichols_core::lyndon::{hyperletter, is_convex_order, is_lyndon, lyndon_factorize};
use nichols_core::presets::{row_data, RowPreset};
use nichols_core::rootsys::{
    cartan_roots, hilbert_series_a, hilbert_series_b, hilbert_series_l, positive_roots,
};
use nichols_core::tensoralg::{coproduct, coproduct_component, nichols_graded_dim, nichols_root_height};
use nichols_core::{
    build_report, BraidingMatrix, Budget, Cyclotomic, CyclotomicField, Degree, Error, LieType,
    ReportOptions, RootSystemData, TensorElement, TensorSquareElement, Word,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn d(a: u32, b: u32) -> Degree {
    Degree::new(a, b)
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn preset(row: u32, diagram: usize, order: Option<u32>) -> BraidingMatrix {
    RowPreset::new(row, diagram, order, None).unwrap().matrix().unwrap()
}

fn roots(row: u32, diagram: usize, order: Option<u32>) -> RootSystemData {
    positive_roots(&preset(row, diagram, order)).unwrap()
}

fn set(v: &[(u32, u32)]) -> BTreeSet<Degree> {
    v.iter().map(|&(a, b)| d(a, b)).collect()
}

fn orders(rs: &RootSystemData) -> BTreeMap<Degree, u32> {
    cartan_roots(rs).into_iter().map(|b| (b, rs.order(b).unwrap())).collect()
}

fn one_minus(x: &Cyclotomic) -> Cyclotomic {
    x.field().one() - x
}

fn pure_power(h: &TensorElement, n: u32, dg: Degree, q: &BraidingMatrix) -> Cyclotomic {
    let (a, b) = (dg.0[0] * n, dg.0[1] * n);
    let c = coproduct_component(&h.power(n, q.field()), d(a, 0), q);
    c.coeff(
        &Word::from_letters(vec![1; a as usize]),
        &Word::from_letters(vec![2; b as usize]),
    )
    .cloned()
    .unwrap_or_else(|| q.field().zero())
}

fn criterion1() -> Check {
    let expected = [
        LieType::A2, LieType::A1, LieType::B2, LieType::A1xA1, LieType::A1xA1, LieType::Zero,
        LieType::Zero, LieType::A1, LieType::A1xA1, LieType::G2, LieType::A1xA1, LieType::A1xA1,
        LieType::B2, LieType::A1xA1, LieType::A1xA1, LieType::G2,
    ];
    for (row, want) in (1..=16u32).zip(expected) {
        let report = build_report(&preset(row, 0, None), ReportOptions::default())
            .map_err(|e| format!("row {row}: {e}"))?;
        ensure!(report.lie_type == want, "row {row}: got {}, want {want}", report.lie_type);
    }
    Ok(())
}

fn criterion2() -> Check {
    let displayed: [(u32, usize, Vec<(u32, u32)>); 6] = [
        (1, 0, vec![(1, 0), (1, 1), (0, 1)]),
        (3, 0, vec![(1, 0), (2, 1), (1, 1), (0, 1)]),
        (9, 0, vec![(1, 0), (2, 1), (3, 2), (1, 1), (1, 2), (0, 1)]),
        (10, 0, vec![(1, 0), (3, 1), (2, 1), (3, 2), (1, 1), (0, 1)]),
        (13, 0, vec![(1, 0), (3, 1), (2, 1), (5, 3), (3, 2), (4, 3), (1, 1), (0, 1)]),
        (
            16,
            1,
            vec![
                (1, 0), (5, 1), (4, 1), (7, 2), (3, 1), (8, 3),
                (5, 2), (7, 3), (2, 1), (3, 2), (1, 1), (0, 1),
            ],
        ),
    ];
    for (row, di, list) in displayed {
        let rs = roots(row, di, None);
        ensure!(rs.root_set() == set(&list), "row {row}.{}: {:?}", di + 1, rs.roots);
    }
    let counts = [3, 3, 4, 4, 4, 4, 5, 5, 6, 6, 6, 8, 8, 8, 8, 12];
    for row in 1..=16u32 {
        for di in 0..row_data(row).unwrap().diagrams.len() {
            let n = roots(row, di, None).len();
            ensure!(n == counts[row as usize - 1], "row {row}.{}: {n} roots", di + 1);
        }
    }
    Ok(())
}

fn criterion3() -> Check {
    let cases: Vec<(u32, usize, Option<u32>, Vec<((u32, u32), u32)>)> = vec![
        (1, 0, Some(3), vec![((1, 0), 3), ((1, 1), 3), ((0, 1), 3)]),
        (1, 0, Some(5), vec![((1, 0), 5), ((1, 1), 5), ((0, 1), 5)]),
        (2, 0, Some(5), vec![((1, 0), 5)]),
        (3, 0, Some(5), vec![((1, 0), 5), ((2, 1), 5), ((1, 1), 5), ((0, 1), 5)]),
        (3, 0, Some(6), vec![((1, 0), 6), ((2, 1), 3), ((1, 1), 6), ((0, 1), 3)]),
        (3, 0, Some(8), vec![((1, 0), 8), ((2, 1), 4), ((1, 1), 8), ((0, 1), 4)]),
        (6, 0, None, vec![]),
        (7, 0, None, vec![]),
        (8, 0, None, vec![((1, 1), 12)]),
        (9, 0, None, vec![((1, 0), 18), ((1, 1), 18)]),
        (10, 0, Some(4), vec![((1, 0), 4), ((3, 1), 4), ((2, 1), 4), ((3, 2), 4), ((1, 1), 4), ((0, 1), 4)]),
        (10, 0, Some(6), vec![((1, 0), 6), ((3, 1), 2), ((2, 1), 6), ((3, 2), 2), ((1, 1), 6), ((0, 1), 2)]),
        (11, 0, None, vec![((2, 1), 8), ((0, 1), 8)]),
        (12, 0, None, vec![((1, 1), 24), ((3, 1), 24)]),
        (14, 0, None, vec![((1, 0), 20), ((3, 2), 20)]),
        (15, 0, None, vec![((1, 0), 30), ((3, 2), 30)]),
    ];
    for (row, di, n, want) in cases {
        let got = orders(&roots(row, di, n));
        let want: BTreeMap<Degree, u32> = want.into_iter().map(|((a, b), o)| (d(a, b), o)).collect();
        ensure!(got == want, "row {row}.{} order {n:?}: {got:?}", di + 1);
    }
    let r16 = orders(&roots(16, 0, None));
    ensure!(r16.len() == 6 && r16.values().all(|&o| o == 14), "row 16: {r16:?}");
    Ok(())
}

fn criterion4() -> Check {
    let q = preset(1, 0, Some(3));
    let qinv = q.entry(0, 0).inv().unwrap();
    let got = pure_power(&hyperletter(&w("12"), &q), 3, d(1, 1), &q);
    ensure!(got == one_minus(&qinv).pow_u(3), "row 1: {got}");

    let q = preset(3, 0, Some(3));
    let qv = q.entry(0, 0).clone();
    let qi = |e: i64| qv.pow(e).unwrap();
    let h = hyperletter(&w("112"), &q);
    let c = coproduct_component(&h, d(2, 0), &q);
    let want = one_minus(&qi(-1)) * one_minus(&qi(-2));
    ensure!(c.coeff(&w("11"), &w("2")) == Some(&want), "row 3: x1^2 ⊗ x2");
    let c = coproduct_component(&h, d(1, 0), &q);
    let scale = &qv * &one_minus(&qi(-2));
    let mut want = TensorSquareElement::zero();
    for (r, a) in hyperletter(&w("12"), &q).terms() {
        want.add_term(w("1"), r.clone(), a * &scale);
    }
    ensure!(c == want, "row 3: x1 ⊗ x12 component");

    let q = preset(10, 0, Some(4));
    let qv = q.entry(0, 0).clone();
    let f = |e: i64| one_minus(&qv.pow(e).unwrap());
    let n = 4u64;
    let cases = [
        ("12", d(1, 1), f(-3).pow_u(n)),
        ("112", d(2, 1), (f(-2) * f(-3)).pow_u(n)),
        ("1112", d(3, 1), (f(-1) * f(-2) * f(-3)).pow_u(n)),
        ("11212", d(3, 2), (f(-1) * f(-2)).pow_u(n) * f(-3).pow_u(2 * n)),
    ];
    for (word, dg, want) in cases {
        let got = pure_power(&hyperletter(&w(word), &q), 4, dg, &q);
        ensure!(!got.is_zero() && got == want, "row 10 {word}: {got}");
    }
    Ok(())
}

fn criterion5() -> Check {
    for row in 1..=16u32 {
        let rs = roots(row, 0, None);
        let prod = hilbert_series_b(&rs, 12).mul(&hilbert_series_a(&rs, 12));
        ensure!(hilbert_series_l(&rs, 12) == prod, "row {row}");
    }
    Ok(())
}

fn criterion6() -> Check {
    for row in [1u32, 2] {
        let q = preset(row, 0, Some(3));
        let hb = hilbert_series_b(&positive_roots(&q).unwrap(), 8);
        for total in 0..=8u32 {
            for a in 0..=total {
                let dg = d(a, total - a);
                let dim = nichols_graded_dim(&q, dg, Budget::default()).map_err(|e| e.to_string())?;
                let want = u64::try_from(hb.coeff(dg)).unwrap();
                ensure!(dim as u64 == want, "row {row} {dg}: {dim} vs {want}");
            }
        }
    }
    let total = hilbert_series_b(&roots(1, 0, Some(3)), 12).total();
    ensure!(total == 27u32.into(), "row 1 total {total}");
    let mut sum = 0;
    for total in 0..=8u32 {
        for a in 0..=total {
            sum += nichols_graded_dim(&preset(1, 0, Some(3)), d(a, total - a), Budget::default())
                .map_err(|e| e.to_string())?;
        }
    }
    ensure!(sum == 27, "row 1 Gram total {sum}");
    Ok(())
}

fn criterion7() -> Check {
    for row in 1..=3u32 {
        let q = preset(row, 0, Some(3));
        let rs = positive_roots(&q).unwrap();
        for &beta in &rs.roots {
            let h = nichols_root_height(&q, &rs, beta, Budget::default()).map_err(|e| e.to_string())?;
            let n = rs.order(beta).unwrap();
            ensure!(h == n, "row {row} {beta}: height {h}, order {n}");
        }
    }
    Ok(())
}

fn random_cyc(rng: &mut ChaCha8Rng, k: &CyclotomicField) -> Cyclotomic {
    let coeffs: Vec<BigRational> = (0..rng.gen_range(0..8))
        .map(|_| BigRational::new(BigInt::from(rng.gen_range(-6..=6)), BigInt::from(rng.gen_range(1..=4))))
        .collect();
    k.from_coeffs(&coeffs)
}

fn random_braiding(rng: &mut ChaCha8Rng) -> BraidingMatrix {
    let k = CyclotomicField::new(24);
    let mut z = || k.zeta_pow(rng.gen_range(0..24));
    BraidingMatrix::new(vec![vec![z(), z()], vec![z(), z()]]).unwrap()
}

fn random_element(rng: &mut ChaCha8Rng, max_len: usize) -> TensorElement {
    let k = CyclotomicField::new(24);
    let terms: Vec<(Word, Cyclotomic)> = (0..rng.gen_range(1..4))
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            let letters = (0..len).map(|_| rng.gen_range(1..=2u8)).collect();
            (Word::from_letters(letters), k.from_int(rng.gen_range(-3..=3)))
        })
        .collect();
    TensorElement::from_terms(terms)
}

fn words_up_to(n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..n {
        layer = layer
            .iter()
            .flat_map(|w| [1u8, 2].map(|l| w.concat(&Word::letter(l))))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

type Triple = BTreeMap<(Word, Word, Word), Cyclotomic>;

fn coassociative(a: &TensorElement, q: &BraidingMatrix) -> bool {
    let one = q.field().one();
    let mut sides = [Triple::new(), Triple::new()];
    let mut add = |side: usize, k: (Word, Word, Word), c: Cyclotomic| {
        let e = sides[side].entry(k.clone()).or_insert_with(|| c.field().zero());
        *e += &c;
        if e.is_zero() {
            sides[side].remove(&k);
        }
    };
    for ((l, r), c) in coproduct(a, q).terms() {
        for ((l1, l2), c1) in coproduct(&TensorElement::word(l.clone(), one.clone()), q).terms() {
            add(0, (l1.clone(), l2.clone(), r.clone()), c * c1);
        }
        for ((r1, r2), c2) in coproduct(&TensorElement::word(r.clone(), one.clone()), q).terms() {
            add(1, (l.clone(), r1.clone(), r2.clone()), c * c2);
        }
    }
    sides[0] == sides[1]
}

fn criterion8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let k = CyclotomicField::new(12);
    for i in 0..1000 {
        let (a, b, c) = (random_cyc(&mut rng, &k), random_cyc(&mut rng, &k), random_cyc(&mut rng, &k));
        ensure!(&(&a + &b) + &c == &a + &(&b + &c), "(a) case {i}: additive associativity");
        ensure!(&(&a * &b) * &c == &a * &(&b * &c), "(a) case {i}: multiplicative associativity");
        ensure!(&a * &b == &b * &a, "(a) case {i}: commutativity");
        ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "(a) case {i}: distributivity");
        if !a.is_zero() {
            ensure!((&a * &a.inv().unwrap()).is_one(), "(a) case {i}: inverse");
        }
    }

    for word in words_up_to(10).into_iter().skip(1) {
        let l = word.letters();
        let brute = (1..l.len()).all(|k| l < &l[k..]);
        ensure!(is_lyndon(&word).unwrap() == brute, "(b) {word}");
        let factors = lyndon_factorize(&word);
        let glued = factors.iter().fold(Word::empty(), |acc, f| acc.concat(f));
        ensure!(glued == word, "(b) {word}: factors do not concatenate");
        ensure!(factors.iter().all(|f| is_lyndon(f).unwrap()), "(b) {word}: non-Lyndon factor");
        ensure!(factors.windows(2).all(|p| p[0] >= p[1]), "(b) {word}: factors increase");
    }

    for i in 0..48 {
        let q = random_braiding(&mut rng);
        let a = random_element(&mut rng, 6);
        ensure!(coassociative(&a, &q), "(c) case {i}: coassociativity");
        let (x, y) = (random_element(&mut rng, 4), random_element(&mut rng, 4));
        let lhs = coproduct(&x.multiply(&y), &q);
        let rhs = coproduct(&x, &q).multiply(&coproduct(&y, &q), &q);
        ensure!(lhs == rhs, "(c) case {i}: algebra map");
    }

    for row in 1..=16u32 {
        for di in 0..row_data(row).unwrap().diagrams.len() {
            ensure!(is_convex_order(&roots(row, di, None).roots), "(d) row {row}.{}", di + 1);
        }
    }

    let x1 = Word::letter(1);
    let x2 = Word::letter(2);
    for i in 0..50 {
        let q = random_braiding(&mut rng);
        let k = q.field().clone();
        let bracket = TensorElement::generator(1, &k).braided_bracket(&TensorElement::generator(2, &k), &q);
        let delta = coproduct(&bracket, &q);
        let want = k.one() - q.entry(0, 1) * q.entry(1, 0);
        let got = delta.coeff(&x1, &x2).cloned().unwrap_or_else(|| k.zero());
        ensure!(got == want && delta.coeff(&x2, &x1).is_none(), "(e) case {i}");
    }
    Ok(())
}

fn criterion9() -> Check {
    let k = CyclotomicField::new(6);
    let z3 = k.make_root(3, 1).unwrap();
    let q = BraidingMatrix::from_diagram(k.one(), z3.clone(), z3).unwrap();
    match build_report(&q, ReportOptions::default()) {
        Err(e @ Error::CartanUndefined { .. }) => {
            ensure!(e.exit_code() == 2, "undefined Cartan exit code {}", e.exit_code());
            ensure!(e.to_string().contains("Cartan entry"), "message: {e}");
        }
        other => return Err(format!("q11 = 1: expected undefined Cartan entry, got {other:?}")),
    }
    let k = CyclotomicField::new(10);
    let q = BraidingMatrix::from_diagram(k.zeta_pow(2), k.zeta_pow(-4), k.zeta_pow(2)).unwrap();
    match build_report(&q, ReportOptions::default()) {
        Err(e @ Error::NotFinite { cap: 64 }) => {
            ensure!(e.exit_code() == 3, "not-finite exit code {}", e.exit_code());
        }
        other => return Err(format!("affine walk: expected cap at 64, got {other:?}")),
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [(u32, fn() -> Check, Option<Duration>); 9] = [
        (1, criterion1, Some(Duration::from_secs(10))),
        (2, criterion2, None),
        (3, criterion3, None),
        (4, criterion4, Some(Duration::from_secs(60))),
        (5, criterion5, None),
        (6, criterion6, Some(Duration::from_secs(30))),
        (7, criterion7, None),
        (8, criterion8, None),
        (9, criterion9, None),
    ];
    let mut failures = Vec::new();
    for (n, run, limit) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(()), Some(l)) if elapsed > l => Err(format!("exceeded limit of {}s", l.as_secs())),
            (o, _) => o,
        };
        match outcome {
            Ok(()) => println!("criterion {n}: PASS ({:.2}s)", elapsed.as_secs_f64()),
            Err(msg) => {
                println!("criterion {n}: FAIL ({:.2}s) {msg}", elapsed.as_secs_f64());
                failures.push(n);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
