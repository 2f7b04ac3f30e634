//! Exact computations for rank-2 Nichols algebras of diagonal type.
//!
//! Scalars live in a cyclotomic field fixed per session. From a braiding
//! matrix the crate derives the generalized root system, Cartan roots and
//! their orders, Lyndon root words and hyperletters, braided coproducts,
//! Hilbert series, Nichols graded dimensions through the shuffle pairing,
//! and finally the Lie algebra spanned by the Cartan root-vector powers.

pub mod braiding;
pub mod cyclo;
pub mod degree;
pub mod error;
pub mod lieinfer;
pub mod linalg;
pub mod lyndon;
pub mod presets;
pub mod rootsys;
pub mod tensoralg;

pub use braiding::{BraidingMatrix, DiagramSpec, DynkinDiagram, MatrixSpec};
pub use cyclo::{parse_literal, Cyclotomic, CyclotomicField, Literal};
pub use degree::Degree;
pub use error::{Error, Result};
pub use lieinfer::{build_report, LieReport, LieType, ReportOptions};
pub use lyndon::Word;
pub use presets::RowPreset;
pub use rootsys::{HilbertSeries, RootSystemData};
pub use tensoralg::{Budget, TensorElement, TensorSquareElement};
