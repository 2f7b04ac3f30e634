//! Exact rank over the cyclotomic field by fraction-free (Bareiss)
//! elimination.

use crate::cyclo::Cyclotomic;

/// Rank of a rectangular matrix given as rows. Rows may be empty.
pub fn rank(mut m: Vec<Vec<Cyclotomic>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let Some(first) = m.iter().flatten().next() else {
        return 0;
    };
    let mut prev_inv = first.field().one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in r + 1..rows {
            let lead = m[i][c].clone();
            for j in c + 1..cols {
                let v = &(&(&pivot * &m[i][j]) - &(&lead * &m[r][j])) * &prev_inv;
                m[i][j] = v;
            }
            m[i][c] = pivot.field().zero();
        }
        prev_inv = pivot.inv().expect("pivot is nonzero");
        r += 1;
    }
    r
}
