//! The derived table must reproduce the hand-transcribed reference grid in
//! every cell, and must not depend on which representatives of the mod-4
//! residue classes the derivation runs through.

use sign_calculus::{ab_table_entry, derived_entry, reference_table_entry, CountMode, SignValue};

const MODES: [CountMode; 2] = [CountMode::A, CountMode::B];

#[test]
fn all_32_cells_match_reference() {
    let mut undefined = 0;
    for mode in MODES {
        for row in 0..4 {
            for col in 0..4 {
                let derived = ab_table_entry(row, col, mode);
                let reference = reference_table_entry(row, col, mode);
                assert_eq!(derived, reference, "mode {mode} row {row} col {col}");
                if !derived.is_defined() {
                    undefined += 1;
                }
            }
        }
    }
    // The X positions (rows 0 and 2 at columns 0 and 2) appear in both mode
    // blocks.
    assert_eq!(undefined, 8);
}

#[test]
fn representative_independence_up_to_plus_eight() {
    for mode in MODES {
        for row in 0..4u32 {
            for col in 0..4u32 {
                let cell = ab_table_entry(row, col, mode);
                for a in 0..3u32 {
                    for b in 0..3u32 {
                        // Row 0 has no representative n = 0; its class starts at 4.
                        let n = if row == 0 { 4 + 4 * a } else { row + 4 * a };
                        let k = col + 4 * b;
                        assert_eq!(
                            derived_entry(n, k, mode),
                            cell,
                            "mode {mode} cell ({row},{col}) via (n={n}, k={k})"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn defined_cells_carry_unit_values() {
    for mode in MODES {
        for row in 0..4 {
            for col in 0..4 {
                match ab_table_entry(row, col, mode) {
                    SignValue::Undefined => assert_eq!(ab_table_entry(row, col, mode).as_int(), None),
                    s => assert!(matches!(s.as_int(), Some(1) | Some(-1))),
                }
            }
        }
    }
}

#[test]
fn modes_agree_exactly_where_reversal_is_even() {
    // The B column differs from A exactly by the reversal exponent, which
    // depends only on k mod 4 (odd for k ≡ 0, 3; even for k ≡ 1, 2).
    for row in 0..4 {
        for col in 0..4 {
            let a = ab_table_entry(row, col, CountMode::A);
            let b = ab_table_entry(row, col, CountMode::B);
            if !a.is_defined() {
                assert!(!b.is_defined());
                continue;
            }
            let reversal_odd = matches!(col, 0 | 3);
            assert_eq!(a != b, reversal_odd, "row {row} col {col}");
        }
    }
}
