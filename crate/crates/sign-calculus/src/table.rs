//! The 4x4x2 grid of comparison signs, indexed by dim L mod 4 and by the
//! number of boundary point conditions mod 4.
//!
//! Two versions live here on purpose: `reference_table_entry` is a verbatim
//! transcription of the expected grid, while `ab_table_entry` re-derives
//! each cell from the dimension condition and the parity rules. Tests and
//! the CLI's `table --check` compare them cell by cell.

use crate::{count_comparison_sign, maslov_from_dimension, CountMode, SignValue};

use SignValue::{Minus as M, Plus as P, Undefined as X};

// Rows: dim L mod 4 = 0..3; columns: k mod 4 = 0..3.
const A_GRID: [[SignValue; 4]; 4] = [
    [X, P, X, M],
    [M, P, M, P],
    [X, P, X, M],
    [P, P, P, P],
];

const B_GRID: [[SignValue; 4]; 4] = [
    [X, P, X, P],
    [P, P, M, M],
    [X, P, X, P],
    [M, P, P, M],
];

/// The fixed reference grid, transcribed by hand. Used only as cross-check
/// data; every computation goes through `ab_table_entry`.
pub fn reference_table_entry(n_mod4: u32, k_mod4: u32, mode: CountMode) -> SignValue {
    let grid = match mode {
        CountMode::A => &A_GRID,
        CountMode::B => &B_GRID,
    };
    grid[(n_mod4 % 4) as usize][(k_mod4 % 4) as usize]
}

/// Comparison sign computed from actual (n, k): solve the dimension
/// condition for mu, then apply the mode's parity rule. Undefined exactly
/// when mu comes out odd.
pub fn derived_entry(n: u32, k: u32, mode: CountMode) -> SignValue {
    match maslov_from_dimension(n, k) {
        None => SignValue::Undefined,
        Some(mu) => {
            count_comparison_sign(mode, mu, k).expect("mu from the dimension condition is even")
        }
    }
}

/// Table cell for residues (n mod 4, k mod 4), derived from canonical
/// representatives. The cell only depends on the residues: stepping n or k
/// by 4 changes mu/2 + k by an even amount, and the reversal exponent has
/// period 4 in k. Representative independence is covered by tests.
pub fn ab_table_entry(n_mod4: u32, k_mod4: u32, mode: CountMode) -> SignValue {
    let n_mod4 = n_mod4 % 4;
    // Dimension 0 is represented by 4: the grid row tabulates the residue
    // class, whose smallest positive member is 4.
    let n_rep = if n_mod4 == 0 { 4 } else { n_mod4 };
    derived_entry(n_rep, k_mod4 % 4, mode)
}
