//! `nichols`: command-line front end for the rank-2 Nichols algebra toolkit.

mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use nichols_core::lieinfer::LieReport;
use nichols_core::lyndon::{hyperletter, lyndon_factorize};
use nichols_core::presets::row_data;
use nichols_core::rootsys::{
    cartan_roots, hilbert_series_a, hilbert_series_b, hilbert_series_l, positive_roots,
};
use nichols_core::tensoralg::{coproduct, coproduct_component};
use nichols_core::{
    build_report, BraidingMatrix, Budget, Degree, Error, MatrixSpec, ReportOptions, Result,
    RowPreset, TensorElement, TensorSquareElement, Word,
};
use rayon::prelude::*;
use serde_json::json;

#[derive(Parser)]
#[command(name = "nichols", version, about = "Rank-2 Nichols algebras of diagonal type")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root system, Cartan roots, Lie type and certificates.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Positive roots with Cartan flags, orders and root words.
    Roots {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Truncated Hilbert series of the Nichols algebra and its companions.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Highest total degree kept.
        #[arg(long, default_value_t = 12)]
        truncate: u32,
        /// Verify H_L = H_B·H_A up to the truncation degree.
        #[arg(long)]
        check_factorization: bool,
    },
    /// Coproduct of a power of a root vector, optionally one bidegree only.
    Coproduct {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
        /// Word over {1,2}; Lyndon factors are replaced by their brackets.
        #[arg(long)]
        word: Word,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// Keep only terms whose left factor has this degree, e.g. `3,0`.
        #[arg(long, value_parser = parse_degree)]
        left_degree: Option<Degree>,
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Computed analogue of the classification table, one line per row.
    Table {
        #[arg(long)]
        json: bool,
        #[arg(long)]
        budget: Option<u128>,
    },
}

#[derive(Args)]
struct Input {
    /// Table row 1..16.
    #[arg(long, conflicts_with = "matrix")]
    row: Option<u32>,
    /// Diagram within the row, counted from 1.
    #[arg(long, default_value_t = 1, requires = "row")]
    diagram: usize,
    /// Order of the free root of unity (or the fixed one, which must match).
    #[arg(long, requires = "row")]
    order: Option<u32>,
    /// Exponent k in exp(2πi·k/order).
    #[arg(long, requires = "row", allow_hyphen_values = true)]
    exp: Option<i64>,
    /// Braiding as `q11,q12;q21,q22` or a JSON object with `matrix` or `diagram`.
    #[arg(long, allow_hyphen_values = true)]
    matrix: Option<String>,
}

#[derive(Args)]
struct Output {
    #[arg(long)]
    json: bool,
    /// Add decimal approximations next to exact values.
    #[arg(long)]
    approx: bool,
}

fn parse_degree(s: &str) -> std::result::Result<Degree, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok(Degree::new(a, b)),
            _ => Err(format!("expected two non-negative integers, got `{s}`")),
        },
        _ => Err(format!("expected `a,b`, got `{s}`")),
    }
}

struct Resolved {
    q: BraidingMatrix,
    preset: Option<RowPreset>,
}

impl Input {
    fn resolve(&self) -> Result<Resolved> {
        match (&self.matrix, self.row) {
            (Some(src), _) => {
                let spec = if src.trim_start().starts_with('{') {
                    serde_json::from_str::<MatrixSpec>(src).map_err(|e| Error::Parse {
                        position: e.column().saturating_sub(1),
                        message: e.to_string(),
                    })?
                } else {
                    MatrixSpec::from_compact(src)?
                };
                Ok(Resolved { q: spec.build()?, preset: None })
            }
            (None, Some(row)) => {
                if self.diagram == 0 {
                    return Err(Error::Input("diagrams are counted from 1".into()));
                }
                let p = RowPreset::new(row, self.diagram - 1, self.order, self.exp)?;
                Ok(Resolved { q: p.matrix()?, preset: Some(p) })
            }
            (None, None) => Err(Error::Input("give either --row or --matrix".into())),
        }
    }
}

fn budget(b: Option<u128>) -> Budget {
    b.map(Budget::new).unwrap_or_default()
}

fn report_for(r: &Resolved, budget: Budget) -> Result<LieReport> {
    let mut report = build_report(&r.q, ReportOptions { budget })?;
    if let Some(p) = &r.preset {
        let rs = positive_roots(&r.q)?;
        if let Some(msg) = p.cartan_discrepancy(&cartan_roots(&rs)) {
            report.warnings.push(msg);
        }
    }
    Ok(report)
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn cmd_analyze(input: &Input, out: &Output, b: Option<u128>) -> Result<()> {
    let report = report_for(&input.resolve()?, budget(b))?;
    if out.json {
        print_json(&report);
    } else {
        print!("{}", render::report(&report, out.approx));
    }
    Ok(())
}

fn cmd_roots(input: &Input, out: &Output) -> Result<()> {
    let r = input.resolve()?;
    let rs = positive_roots(&r.q)?;
    let words = nichols_core::lyndon::root_words(&rs)?;
    if out.json {
        let roots: Vec<_> = rs
            .roots
            .iter()
            .enumerate()
            .map(|(k, b)| {
                json!({"vec": b, "cartan": rs.cartan_flags[k], "order": rs.orders[k], "word": words[b]})
            })
            .collect();
        print_json(&json!({"count": rs.len(), "roots": roots, "reduced_word": rs.reduced_word}));
    } else {
        print!("{}", render::roots(&rs, &words));
    }
    Ok(())
}

fn cmd_hilbert(input: &Input, out: &Output, truncate: u32, check: bool) -> Result<()> {
    let rs = positive_roots(&input.resolve()?.q)?;
    let hb = hilbert_series_b(&rs, truncate);
    let hl = hilbert_series_l(&rs, truncate);
    let ha = hilbert_series_a(&rs, truncate);
    let ok = check.then(|| hl == hb.mul(&ha));
    if out.json {
        let series = |h: &nichols_core::HilbertSeries| {
            h.terms()
                .map(|(d, c)| json!({"degree": d, "coeff": c.to_string()}))
                .collect::<Vec<_>>()
        };
        print_json(&json!({
            "truncate": truncate,
            "H_B": series(&hb),
            "H_L": series(&hl),
            "H_A": series(&ha),
            "dim_B_truncated": hb.total().to_string(),
            "factorization": ok,
        }));
    } else {
        println!("H_B = {}", render::series(&hb));
        println!("H_L = {}", render::series(&hl));
        println!("H_A = {}", render::series(&ha));
        println!("dim B_q up to degree {truncate}: {}", hb.total());
        match ok {
            Some(true) => println!("H_L = H_B·H_A: OK"),
            Some(false) => println!("H_L = H_B·H_A: MISMATCH"),
            None => {}
        }
    }
    if ok == Some(false) {
        return Err(Error::Inconsistent("Hilbert series factorization failed".into()));
    }
    Ok(())
}

/// The product of brackets of the Lyndon factors, raised to `power`.
fn element_of(word: &Word, power: u32, q: &BraidingMatrix) -> TensorElement {
    let base = lyndon_factorize(word)
        .iter()
        .fold(TensorElement::one(q.field()), |acc, f| acc.multiply(&hyperletter(f, q)));
    base.power(power, q.field())
}

fn cmd_coproduct(
    input: &Input,
    out: &Output,
    word: &Word,
    power: u32,
    left: Option<Degree>,
    b: Option<u128>,
) -> Result<()> {
    let q = input.resolve()?.q;
    let budget = budget(b);
    let total = power as u128 * word.len() as u128;
    // the element lives in degree power·deg(word), which bounds its size
    budget.check(power * word.degree())?;
    let a = element_of(word, power, &q);
    let delta: TensorSquareElement = match left {
        Some(l) => coproduct_component(&a, l, &q),
        None => {
            let splits = 1u128.checked_shl(total.min(127) as u32).unwrap_or(u128::MAX);
            budget.check_count((splits.saturating_mul(a.len() as u128)).into())?;
            coproduct(&a, &q)
        }
    };
    if out.json {
        print_json(&json!({
            "word": word,
            "power": power,
            "left_degree": left,
            "terms": delta,
        }));
    } else {
        print!("{}", render::tensor_square(&delta, out.approx));
    }
    Ok(())
}

fn cmd_table(json: bool, b: Option<u128>) -> Result<()> {
    let budget = budget(b);
    let rows: Vec<Result<render::TableRow>> = (1..=16u32)
        .into_par_iter()
        .map(|row| {
            let preset = RowPreset::default_for(row)?;
            let r = Resolved { q: preset.matrix()?, preset: Some(preset.clone()) };
            let report = report_for(&r, budget)?;
            Ok(render::TableRow { preset, data: row_data(row)?, report })
        })
        .collect();
    let rows = rows.into_iter().collect::<Result<Vec<_>>>()?;
    if json {
        let v: Vec<_> = rows.iter().map(render::table_json).collect();
        print_json(&v);
    } else {
        print!("{}", render::table(&rows));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { input, out, budget } => cmd_analyze(input, out, *budget),
        Command::Roots { input, out } => cmd_roots(input, out),
        Command::Hilbert { input, out, truncate, check_factorization } => {
            cmd_hilbert(input, out, *truncate, *check_factorization)
        }
        Command::Coproduct { input, out, word, power, left_degree, budget } => {
            cmd_coproduct(input, out, word, *power, *left_degree, *budget)
        }
        Command::Table { json, budget } => cmd_table(*json, *budget),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
