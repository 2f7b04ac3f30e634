//! Plain-text rendering. Everything here is deterministic so the table output
//! can be diffed against a committed file.

use std::collections::BTreeMap;
use std::fmt::Write;

use nichols_core::lieinfer::{GenerationStatus, LieReport, WitnessStatus};
use nichols_core::presets::{ParameterKind, RowData};
use nichols_core::{Cyclotomic, Degree, HilbertSeries, RootSystemData, RowPreset, TensorSquareElement, Word};
use serde_json::{json, Value};

fn approx(c: &Cyclotomic) -> String {
    let (re, im) = c.approx();
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.9}")
    } else {
        format!("{re:.9} {} {:.9}i", if im < 0.0 { '-' } else { '+' }, im.abs())
    }
}

fn value(c: &Cyclotomic, with_approx: bool) -> String {
    if with_approx {
        format!("{c}  (≈ {})", approx(c))
    } else {
        c.to_string()
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// `x1^3 x2` style rendering of a word.
fn monomial(w: &Word) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out = Vec::new();
    let letters = w.letters();
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j] == letters[i] {
            j += 1;
        }
        out.push(match j - i {
            1 => format!("x{}", letters[i]),
            n => format!("x{}^{n}", letters[i]),
        });
        i = j;
    }
    out.join(" ")
}

pub fn report(r: &LieReport, with_approx: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "matrix     {}", r.matrix);
    let _ = writeln!(s, "diagram    {}", r.diagram);
    let _ = writeln!(s, "positive roots ({}):", r.roots.len());
    for e in &r.roots {
        let _ = writeln!(
            s,
            "  {:<10} N={:<3} word {:<12} {}",
            e.vec.to_string(),
            e.order,
            e.word.to_string(),
            if e.cartan { "cartan" } else { "" }
        );
    }
    let _ = writeln!(s, "orbit      {} diagram(s)", r.orbit.len());
    for d in &r.orbit {
        let _ = writeln!(s, "  {d}");
    }
    let _ = writeln!(s, "degrees    {{{}}}", join(&r.degrees));
    let _ = writeln!(s, "type       {}", r.lie_type);
    if r.generators.len() == 2 && r.cartan_matrix.len() == 2 {
        let _ = writeln!(s, "generators {}", join(&r.generators));
        let m = &r.cartan_matrix;
        let _ = writeln!(s, "cartan     [[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]);
    }
    if !r.serre_checks.is_empty() {
        let _ = writeln!(s, "degree checks:");
        for c in &r.serre_checks {
            let _ = writeln!(s, "  {c}");
        }
    }
    if !r.witnesses.is_empty() {
        let _ = writeln!(s, "witnesses:");
        for w in &r.witnesses {
            let leg = format!(
                "{} ⊗ {}",
                monomial(&Word::from_letters(vec![1; w.left.0[0] as usize])),
                monomial(&Word::from_letters(vec![2; w.right.0[1] as usize]))
            );
            let status = match (&w.status, &w.coefficient) {
                (WitnessStatus::Nonzero, Some(c)) => format!("nonzero: {}", value(c, with_approx)),
                (WitnessStatus::Zero, _) => "zero".into(),
                (WitnessStatus::Truncated, _) => "leg vanishes in the quotient".into(),
                (WitnessStatus::OverBudget, _) => "over budget".into(),
                (WitnessStatus::Nonzero, None) => "nonzero".into(),
            };
            let _ = writeln!(s, "  {:<10} [{}]^N on {leg}: {status}", w.root.to_string(), w.word);
        }
    }
    let _ = writeln!(s, "generation {}", r.generation);
    let _ = writeln!(
        s,
        "q_ab^(N_b) = 1 on Cartan roots: {}",
        if r.condition11 { "holds" } else { "fails" }
    );
    for (a, b) in &r.condition11_counterexamples {
        let _ = writeln!(s, "  fails for ({a}, {b})");
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

pub fn roots(rs: &RootSystemData, words: &BTreeMap<Degree, Word>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} roots", rs.len());
    for (k, b) in rs.roots.iter().enumerate() {
        let _ = writeln!(
            s,
            "  {:<10} N={:<3} word {:<12} {}",
            b.to_string(),
            rs.orders[k],
            words[b].to_string(),
            if rs.cartan_flags[k] { "cartan" } else { "" }
        );
    }
    s
}

pub fn series(h: &HilbertSeries) -> String {
    let terms: Vec<String> = h
        .terms()
        .map(|(d, c)| {
            let mono = match (d.0[0], d.0[1]) {
                (0, 0) => String::new(),
                (a, b) => {
                    let p = |v: u32, i: u32| match v {
                        0 => None,
                        1 => Some(format!("t{i}")),
                        _ => Some(format!("t{i}^{v}")),
                    };
                    [p(a, 1), p(b, 2)].into_iter().flatten().collect::<Vec<_>>().join(" ")
                }
            };
            match (c.to_string().as_str(), mono.is_empty()) {
                (n, true) => n.to_string(),
                ("1", false) => mono,
                (n, false) => format!("{n} {mono}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub fn tensor_square(t: &TensorSquareElement, with_approx: bool) -> String {
    let mut s = String::new();
    let mut n = 0;
    for ((l, r), c) in t.terms() {
        let _ = writeln!(s, "({}) {} ⊗ {}", value(c, with_approx), monomial(l), monomial(r));
        n += 1;
    }
    if n == 0 {
        s.push_str("0\n");
    }
    s
}

pub struct TableRow {
    pub preset: RowPreset,
    pub data: RowData,
    pub report: LieReport,
}

fn parameter(row: &TableRow) -> String {
    let p = &row.preset;
    match row.data.parameter {
        ParameterKind::Free { .. } => format!("q in G_{}'", p.order),
        ParameterKind::Fixed { .. } => format!("ζ in G_{}'", p.order),
        ParameterKind::CubeRootAndFree { .. } => format!("ζ in G_3', q in G_{}'", p.order),
    }
}

pub fn table(rows: &[TableRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<4} {:<12} {:<22} {:>5} {:>4}  {:<6} {:<6} {:<10} degrees",
        "row", "family", "parameter", "roots", "O", "type", "listed", "generation"
    );
    for r in rows {
        let rep = &r.report;
        let cartan = rep.roots.iter().filter(|e| e.cartan).count();
        let generation = match rep.generation {
            GenerationStatus::NotRequired => "-",
            GenerationStatus::Verified => "verified",
            GenerationStatus::Assumed => "assumed",
        };
        let _ = writeln!(
            s,
            "{:<4} {:<12} {:<22} {:>5} {:>4}  {:<6} {:<6} {:<10} {{{}}}",
            r.data.row,
            r.data.family,
            parameter(r),
            rep.roots.len(),
            cartan,
            rep.lie_type.to_string(),
            r.data.lie_type.to_string(),
            generation,
            join(&rep.degrees)
        );
    }
    let matched = rows.iter().filter(|r| r.report.lie_type == r.data.lie_type).count();
    let _ = writeln!(s, "{matched}/{} rows match the listed type", rows.len());
    s
}

pub fn table_json(r: &TableRow) -> Value {
    json!({
        "row": r.data.row,
        "family": r.data.family,
        "parameter": parameter(r),
        "listed_type": r.data.lie_type,
        "report": r.report,
    })
}
