//! The sixteen rank-2 families with finite Cartan-root data, each as a list
//! of generalized Dynkin diagrams (one Weyl-groupoid orbit) over a parameter.
//!
//! Rows 1–4 and 10 depend on a root of unity `q` of free order `n` (with
//! exclusions); Row 5 combines a primitive cube root `ζ` with a free `q`;
//! the remaining rows fix `ζ` to be a primitive root of one given order.

use num_integer::Integer;

use crate::braiding::BraidingMatrix;
use crate::cyclo::{Cyclotomic, CyclotomicField};
use crate::degree::Degree;
use crate::error::{Error, Result};
use crate::lieinfer::LieType;

/// `±ζ^a q^b` as a diagram label.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Label {
    pub negative: bool,
    pub zeta_exp: i64,
    pub q_exp: i64,
}

const fn lab(negative: bool, zeta_exp: i64, q_exp: i64) -> Label {
    Label {
        negative,
        zeta_exp,
        q_exp,
    }
}
const fn q(e: i64) -> Label {
    lab(false, 0, e)
}
const fn mq(e: i64) -> Label {
    lab(true, 0, e)
}
const fn z(e: i64) -> Label {
    lab(false, e, 0)
}
const fn mz(e: i64) -> Label {
    lab(true, e, 0)
}
const M1: Label = lab(true, 0, 0);

type Triple = (Label, Label, Label);

/// How the parameter of a row is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParameterKind {
    /// `q` of order `n`, where `n` must not divide any of the listed numbers
    /// (`q ∉ G_m`).
    Free { excluded: &'static [u32], default_order: u32 },
    /// `ζ` a primitive root of this order.
    Fixed { order: u32 },
    /// A primitive cube root `ζ` together with a free `q ∉ G_3`.
    CubeRootAndFree { default_order: u32 },
}

#[derive(Clone, Debug)]
pub struct RowData {
    pub row: u32,
    pub diagrams: &'static [Triple],
    pub parameter: ParameterKind,
    pub family: &'static str,
    pub lie_type: LieType,
    pub constraint: &'static str,
}

static ROW_DIAGRAMS: [&[Triple]; 16] = [
    &[(q(1), q(-1), q(1))],
    &[(q(1), q(-1), M1), (M1, q(1), M1)],
    &[(q(1), q(-2), q(2))],
    &[(q(1), q(-2), M1), (mq(-1), q(2), M1)],
    &[(z(1), q(-1), q(1)), (z(1), lab(false, -1, 1), lab(false, 1, -1))],
    &[(z(1), mz(1), M1), (z(-1), mz(-1), M1)],
    &[
        (mz(-2), mz(3), mz(2)),
        (mz(-2), z(-1), M1),
        (mz(2), mz(1), M1),
        (mz(3), z(1), M1),
        (mz(3), mz(-1), M1),
    ],
    &[(mz(2), z(1), mz(2)), (mz(2), z(3), M1), (mz(-1), mz(3), M1)],
    &[(mz(1), z(-2), z(3)), (z(3), z(-1), M1), (mz(2), z(1), M1)],
    &[(q(1), q(-3), q(3))],
    &[(z(2), z(1), z(-1)), (z(2), mz(-1), M1), (z(1), mz(1), M1)],
    &[
        (z(6), mz(-1), mz(-4)),
        (z(6), z(1), z(-1)),
        (mz(-4), z(5), M1),
        (z(1), z(-5), M1),
    ],
    &[(z(1), z(2), M1), (mz(-2), z(-2), M1)],
    &[
        (z(1), z(-3), M1),
        (mz(1), mz(-3), M1),
        (mz(-2), z(3), M1),
        (mz(-2), mz(3), M1),
    ],
    &[
        (mz(1), mz(-3), z(5)),
        (z(3), mz(4), mz(-4)),
        (z(5), mz(-2), M1),
        (z(3), mz(2), M1),
    ],
    &[(mz(1), mz(-3), M1), (mz(-2), mz(3), M1)],
];

fn row_meta(row: u32) -> (ParameterKind, &'static str, LieType, &'static str) {
    use LieType::*;
    use ParameterKind::*;
    match row {
        1 => (Free { excluded: &[1], default_order: 3 }, "Cartan A", A2, "q != 1"),
        2 => (Free { excluded: &[2], default_order: 3 }, "Super A", A1, "q != ±1"),
        3 => (Free { excluded: &[2], default_order: 3 }, "Cartan B", B2, "q != ±1"),
        4 => (Free { excluded: &[4], default_order: 3 }, "Super B", A1xA1, "q not in G_4"),
        5 => (CubeRootAndFree { default_order: 2 }, "br(2,a)", A1xA1, "ζ in G_3', q not in G_3"),
        6 => (Fixed { order: 3 }, "Standard B", Zero, "ζ in G_3'"),
        7 => (Fixed { order: 12 }, "ufo(7)", Zero, "ζ in G_12'"),
        8 => (Fixed { order: 12 }, "ufo(8)", A1, "ζ in G_12'"),
        9 => (Fixed { order: 9 }, "brj(2;3)", A1xA1, "ζ in G_9'"),
        10 => (Free { excluded: &[2, 3], default_order: 4 }, "Cartan G2", G2, "q not in G_2 ∪ G_3"),
        11 => (Fixed { order: 8 }, "Standard G2", A1xA1, "ζ in G_8'"),
        12 => (Fixed { order: 24 }, "ufo(9)", A1xA1, "ζ in G_24'"),
        13 => (Fixed { order: 5 }, "brj(2;5)", B2, "ζ in G_5'"),
        14 => (Fixed { order: 20 }, "ufo(10)", A1xA1, "ζ in G_20'"),
        15 => (Fixed { order: 15 }, "ufo(11)", A1xA1, "ζ in G_15'"),
        16 => (Fixed { order: 7 }, "ufo(12)", G2, "ζ in G_7'"),
        _ => unreachable!("row checked by caller"),
    }
}

pub fn row_data(row: u32) -> Result<RowData> {
    if !(1..=16).contains(&row) {
        return Err(Error::Input(format!("row must be in 1..=16, got {row}")));
    }
    let (parameter, family, lie_type, constraint) = row_meta(row);
    Ok(RowData {
        row,
        diagrams: ROW_DIAGRAMS[row as usize - 1],
        parameter,
        family,
        lie_type,
        constraint,
    })
}

/// Cartan roots as stated in the literature for the first diagram of a row,
/// where that statement disagrees with the computation.
fn quoted_cartan_roots(row: u32) -> Option<&'static [Degree]> {
    const ROW13: &[Degree] = &[
        Degree::new(1, 0),
        Degree::new(1, 1),
        Degree::new(2, 1),
        Degree::new(3, 1),
    ];
    (row == 13).then_some(ROW13)
}

/// A concrete member of a row: the diagram and the root of unity chosen for
/// the parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowPreset {
    pub row: u32,
    /// 0-based index into the row's diagram list.
    pub diagram_index: usize,
    /// The parameter is `exp(2πi·exponent/order)`.
    pub order: u32,
    pub exponent: i64,
}

impl RowPreset {
    /// Validate and fill in defaults: the smallest admissible order for free
    /// parameters, the stated order for fixed ones, exponent 1.
    pub fn new(row: u32, diagram_index: usize, order: Option<u32>, exponent: Option<i64>) -> Result<Self> {
        let data = row_data(row)?;
        if diagram_index >= data.diagrams.len() {
            return Err(Error::Input(format!(
                "row {row} has {} diagram(s), index {} requested",
                data.diagrams.len(),
                diagram_index + 1
            )));
        }
        let exponent = exponent.unwrap_or(1);
        let order = match data.parameter {
            ParameterKind::Fixed { order: m } => {
                if let Some(n) = order {
                    if n != m {
                        return Err(Error::Constraint(format!(
                            "row {row} requires {}: order must be {m}, got {n}",
                            data.constraint
                        )));
                    }
                }
                m
            }
            ParameterKind::Free { default_order, .. }
            | ParameterKind::CubeRootAndFree { default_order } => order.unwrap_or(default_order),
        };
        if order == 0 {
            return Err(Error::Input("order must be positive".into()));
        }
        if exponent.gcd(&(order as i64)) != 1 {
            return Err(Error::Constraint(format!(
                "row {row}: exponent {exponent} is not coprime to order {order}, so the parameter is not primitive of that order"
            )));
        }
        let excluded: &[u32] = match data.parameter {
            ParameterKind::Free { excluded, .. } => excluded,
            ParameterKind::CubeRootAndFree { .. } => &[3],
            ParameterKind::Fixed { .. } => &[],
        };
        if let Some(m) = excluded.iter().find(|&&m| m % order == 0) {
            return Err(Error::Constraint(format!(
                "row {row} requires {}: a root of order {order} lies in G_{m}",
                data.constraint
            )));
        }
        Ok(RowPreset {
            row,
            diagram_index,
            order,
            exponent,
        })
    }

    pub fn default_for(row: u32) -> Result<Self> {
        RowPreset::new(row, 0, None, None)
    }

    pub fn data(&self) -> RowData {
        row_data(self.row).expect("validated")
    }

    pub fn field(&self) -> CyclotomicField {
        match self.data().parameter {
            ParameterKind::CubeRootAndFree { .. } => CyclotomicField::session([3, self.order]),
            _ => CyclotomicField::session([self.order]),
        }
    }

    fn eval(&self, l: Label, field: &CyclotomicField) -> Result<Cyclotomic> {
        let (zeta, qv) = match self.data().parameter {
            ParameterKind::Fixed { .. } => (field.make_root(self.order, self.exponent)?, field.one()),
            ParameterKind::Free { .. } => (field.one(), field.make_root(self.order, self.exponent)?),
            ParameterKind::CubeRootAndFree { .. } => {
                (field.make_root(3, 1)?, field.make_root(self.order, self.exponent)?)
            }
        };
        let v = zeta.pow(l.zeta_exp)? * qv.pow(l.q_exp)?;
        Ok(if l.negative { -v } else { v })
    }

    /// The diagram's labels `(q_11, q_12 q_21, q_22)`.
    pub fn labels(&self) -> Result<(Cyclotomic, Cyclotomic, Cyclotomic)> {
        let field = self.field();
        let (a, e, b) = self.data().diagrams[self.diagram_index];
        Ok((self.eval(a, &field)?, self.eval(e, &field)?, self.eval(b, &field)?))
    }

    /// Braiding matrix with the default splitting `q_12 = edge, q_21 = 1`.
    pub fn matrix(&self) -> Result<BraidingMatrix> {
        let (a, e, b) = self.labels()?;
        BraidingMatrix::from_diagram(a, e, b)
    }

    /// Warning text when the computed Cartan roots differ from a quoted list.
    pub fn cartan_discrepancy(&self, computed: &[Degree]) -> Option<String> {
        if self.diagram_index != 0 {
            return None;
        }
        let quoted = quoted_cartan_roots(self.row)?;
        let mut a = computed.to_vec();
        let mut b = quoted.to_vec();
        a.sort();
        b.sort();
        (a != b).then(|| {
            let show = |v: &[Degree]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            format!(
                "computed Cartan roots {{{}}} differ from the commonly quoted list {{{}}}",
                show(computed),
                show(quoted)
            )
        })
    }
}
