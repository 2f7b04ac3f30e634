//! Fixtures shared by the criterion benchmarks.

use nichols_core::{BraidingMatrix, RowPreset};

/// Braiding of a row's first diagram at its default parameter.
pub fn row_matrix(row: u32) -> BraidingMatrix {
    RowPreset::default_for(row)
        .and_then(|p| p.matrix())
        .expect("rows 1..=16 have valid defaults")
}

/// Same, with an explicit order for rows with a free parameter.
pub fn row_matrix_at(row: u32, order: u32) -> BraidingMatrix {
    RowPreset::new(row, 0, Some(order), None)
        .and_then(|p| p.matrix())
        .expect("admissible order")
}
