//! Braiding matrices of diagonal type, their bilinear form, Cartan integers,
//! reflections and generalized Dynkin diagrams.
//!
//! Vertices are 0-based in the API (`0` is `x_1`, `1` is `x_2`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cyclo::{parse_literal, Cyclotomic, CyclotomicField, Literal};
use crate::error::{Error, Result};

/// The matrix `q = (q_ij)` with nonzero entries in one cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidingMatrix {
    theta: usize,
    entries: Vec<Cyclotomic>,
}

impl BraidingMatrix {
    pub fn new(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let theta = rows.len();
        if theta == 0 {
            return Err(Error::Input("empty braiding matrix".into()));
        }
        if rows.iter().any(|r| r.len() != theta) {
            return Err(Error::Input("braiding matrix must be square".into()));
        }
        let entries: Vec<Cyclotomic> = rows.into_iter().flatten().collect();
        let field = entries[0].field().clone();
        if entries.iter().any(|e| *e.field() != field) {
            return Err(Error::Input("entries live in different cyclotomic fields".into()));
        }
        if entries.iter().any(Cyclotomic::is_zero) {
            return Err(Error::Input("braiding matrix entries must be nonzero".into()));
        }
        Ok(BraidingMatrix { theta, entries })
    }

    /// Rank-2 matrix realizing a diagram `(q11, edge, q22)` with the default
    /// splitting `q12 = edge`, `q21 = 1`.
    pub fn from_diagram(q11: Cyclotomic, edge: Cyclotomic, q22: Cyclotomic) -> Result<Self> {
        let one = q11.field().one();
        Self::new(vec![vec![q11, edge], vec![one, q22]])
    }

    pub fn rank(&self) -> usize {
        self.theta
    }

    pub fn field(&self) -> &CyclotomicField {
        self.entries[0].field()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.theta + j]
    }

    fn require_rank2(&self) -> Result<()> {
        if self.theta != 2 {
            return Err(Error::Input(format!(
                "rank {} not supported here; only rank 2",
                self.theta
            )));
        }
        Ok(())
    }

    /// `q(a, b) = Π q_ij^{a_i b_j}`.
    pub fn bilinear_form(&self, a: &[i64], b: &[i64]) -> Cyclotomic {
        assert_eq!(a.len(), self.theta);
        assert_eq!(b.len(), self.theta);
        let mut acc = self.field().one();
        for i in 0..self.theta {
            for j in 0..self.theta {
                let e = a[i] * b[j];
                if e != 0 {
                    let p = self.entry(i, j).pow(e).expect("braiding entries are nonzero");
                    acc = acc * p;
                }
            }
        }
        acc
    }

    /// `c_ij`: `2` on the diagonal, otherwise minus the least `n` such that
    /// `(n+1)_{q_ii} (1 - q_ii^n q_ij q_ji) = 0`.
    pub fn cartan_entry(&self, i: usize, j: usize) -> Result<i64> {
        if i == j {
            return Ok(2);
        }
        let qii = self.entry(i, i);
        let edge = self.entry(i, j) * self.entry(j, i);
        // Both vanishing conditions are periodic in n with these periods.
        let m1 = qii.order_of()?.unwrap_or(1) as u64;
        let m2 = edge.order_of()?.unwrap_or(1) as u64;
        let bound = m1 * m2 + 1;
        let one = self.field().one();
        let mut qn = one.clone(); // q_ii^n
        let mut qnum = one.clone(); // (n+1)_{q_ii}
        for n in 0..=bound {
            if qnum.is_zero() || (&one - &(&qn * &edge)).is_zero() {
                return Ok(-(n as i64));
            }
            qn = &qn * qii;
            qnum = &qnum + &qn;
        }
        Err(Error::CartanUndefined { i: i + 1, j: j + 1 })
    }

    pub fn cartan_matrix(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.theta)
            .map(|i| (0..self.theta).map(|j| self.cartan_entry(i, j)).collect())
            .collect()
    }

    /// `q_ij q_ji = q_ii^{c_ij}` for every `j ≠ i`.
    pub fn is_cartan_vertex(&self, i: usize) -> Result<bool> {
        for j in 0..self.theta {
            if j == i {
                continue;
            }
            let c = self.cartan_entry(i, j)?;
            let lhs = self.entry(i, j) * self.entry(j, i);
            if lhs != self.entry(i, i).pow(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `s_i(α_j) = α_j - c_ij α_i`, as the image of each simple root.
    pub fn simple_reflection(&self, i: usize) -> Result<Vec<Vec<i64>>> {
        let mut images = Vec::with_capacity(self.theta);
        for j in 0..self.theta {
            let c = self.cartan_entry(i, j)?;
            let mut v = vec![0i64; self.theta];
            v[j] += 1;
            v[i] -= c;
            images.push(v);
        }
        Ok(images)
    }

    /// `ρ_i(q)_{jk} = q(s_i(α_j), s_i(α_k))`.
    pub fn reflect(&self, i: usize) -> Result<BraidingMatrix> {
        let s = self.simple_reflection(i)?;
        let rows = (0..self.theta)
            .map(|j| {
                (0..self.theta)
                    .map(|k| self.bilinear_form(&s[j], &s[k]))
                    .collect()
            })
            .collect();
        BraidingMatrix::new(rows)
    }

    pub fn diagram(&self) -> DynkinDiagram {
        assert_eq!(self.theta, 2, "diagrams are only built for rank 2");
        DynkinDiagram::new(
            self.entry(0, 0).clone(),
            self.entry(0, 1) * self.entry(1, 0),
            self.entry(1, 1).clone(),
        )
    }

    /// Same matrix with the two vertices exchanged.
    pub fn swapped(&self) -> Result<BraidingMatrix> {
        self.require_rank2()?;
        BraidingMatrix::new(vec![
            vec![self.entry(1, 1).clone(), self.entry(1, 0).clone()],
            vec![self.entry(0, 1).clone(), self.entry(0, 0).clone()],
        ])
    }

    pub(crate) fn ensure_rank2(&self) -> Result<()> {
        self.require_rank2()
    }
}

impl fmt::Debug for BraidingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `[[q11, q12], [q21, q22]]` with literal entries.
impl fmt::Display for BraidingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.theta {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.theta {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Generalized Dynkin diagram of a rank-2 braiding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DynkinDiagram {
    pub vertex_labels: (Cyclotomic, Cyclotomic),
    pub edge_label: Cyclotomic,
    pub connected: bool,
}

impl DynkinDiagram {
    pub fn new(q11: Cyclotomic, edge: Cyclotomic, q22: Cyclotomic) -> Self {
        let connected = !edge.is_one();
        DynkinDiagram {
            vertex_labels: (q11, q22),
            edge_label: edge,
            connected,
        }
    }

    pub fn swapped(&self) -> Self {
        DynkinDiagram::new(
            self.vertex_labels.1.clone(),
            self.edge_label.clone(),
            self.vertex_labels.0.clone(),
        )
    }

    /// Representative of `{self, self.swapped()}`; equal keys mean equal
    /// diagrams up to vertex order.
    pub fn canonical(&self) -> Self {
        let s = self.swapped();
        if s < *self {
            s
        } else {
            self.clone()
        }
    }

    /// Equality up to exchanging the vertices.
    pub fn same_up_to_swap(&self, other: &DynkinDiagram) -> bool {
        self == other || self.swapped() == *other
    }

    /// The braiding with default splitting `q12 = edge, q21 = 1`.
    pub fn to_matrix(&self) -> BraidingMatrix {
        BraidingMatrix::from_diagram(
            self.vertex_labels.0.clone(),
            self.edge_label.clone(),
            self.vertex_labels.1.clone(),
        )
        .expect("diagram labels are nonzero")
    }
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) --[{}]-- ({})",
            self.vertex_labels.0, self.edge_label, self.vertex_labels.1
        )
    }
}

/// Braiding input as accepted in JSON and on the command line.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum MatrixSpec {
    Matrix { matrix: Vec<Vec<String>> },
    Diagram { diagram: DiagramSpec },
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
pub struct DiagramSpec {
    pub q11: String,
    pub edge: String,
    pub q22: String,
}

fn parse_cells<'a>(cells: impl Iterator<Item = &'a str>) -> Result<Vec<Literal>> {
    cells.map(parse_literal).collect()
}

fn session_field(lits: &[Literal]) -> CyclotomicField {
    CyclotomicField::session(lits.iter().flat_map(Literal::orders))
}

impl MatrixSpec {
    /// Compact form `"z3,z3^2;1,z3"` (rows split by `;`, cells by `,`).
    pub fn from_compact(src: &str) -> Result<Self> {
        let matrix: Vec<Vec<String>> = src
            .split(';')
            .map(|row| row.split(',').map(|c| c.trim().to_string()).collect())
            .collect();
        Ok(MatrixSpec::Matrix { matrix })
    }

    /// Evaluate all literals in the session field (lcm of the orders used,
    /// made even).
    pub fn build(&self) -> Result<BraidingMatrix> {
        match self {
            MatrixSpec::Matrix { matrix } => {
                let n = matrix.len();
                let lits = parse_cells(matrix.iter().flatten().map(String::as_str))?;
                let field = session_field(&lits);
                let vals = lits
                    .iter()
                    .map(|l| l.eval(&field))
                    .collect::<Result<Vec<_>>>()?;
                if vals.len() != n * n {
                    return Err(Error::Input("braiding matrix must be square".into()));
                }
                BraidingMatrix::new(vals.chunks(n).map(<[Cyclotomic]>::to_vec).collect())
            }
            MatrixSpec::Diagram { diagram } => {
                let lits = parse_cells(
                    [diagram.q11.as_str(), diagram.edge.as_str(), diagram.q22.as_str()].into_iter(),
                )?;
                let field = session_field(&lits);
                let mut vals = lits
                    .iter()
                    .map(|l| l.eval(&field))
                    .collect::<Result<Vec<_>>>()?;
                let q22 = vals.pop().expect("three cells");
                let edge = vals.pop().expect("three cells");
                let q11 = vals.pop().expect("three cells");
                BraidingMatrix::from_diagram(q11, edge, q22)
            }
        }
    }
}
