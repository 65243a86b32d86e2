//! Every closed-form exponent in the parity calculus is re-derived here by
//! brute-force inversion counting from perm-oracle.

use perm_oracle::{reversal_sign, sigma_pair_signs, split_reordering_sign};
use sign_calculus::{
    boundary_epsilon, cancellation_check, count_comparison_sign, cyclic_reversal_exponent,
    CountMode, SignValue,
};

fn sign_of_exponent(e: u8) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[test]
fn reversal_exponent_matches_inversion_count() {
    for k in 1..=40u32 {
        assert_eq!(
            sign_of_exponent(cyclic_reversal_exponent(k)),
            reversal_sign(k as usize).unwrap(),
            "k = {k}"
        );
    }
}

#[test]
fn mode_difference_is_the_reversal_sign() {
    // B = A * (-1)^{reversal exponent} wherever both are defined.
    for mu in (-10..12i64).step_by(2) {
        for k in 0..=12u32 {
            let a = count_comparison_sign(CountMode::A, mu, k).unwrap();
            let b = count_comparison_sign(CountMode::B, mu, k).unwrap();
            let twist = sign_of_exponent(cyclic_reversal_exponent(k));
            assert_eq!(
                b.as_int().unwrap(),
                a.as_int().unwrap() * twist,
                "mu={mu} k={k}"
            );
        }
    }
}

#[test]
fn epsilon_attach_dependence_matches_split_reordering() {
    // epsilon(i) - epsilon(1) is the reordering exponent (i-1)(k2+1), which
    // the oracle computes as a product of two explicit rotation signs.
    for k1 in 0..=8u32 {
        for k2 in 0..=8u32 {
            let k = k1 + k2;
            if k == 0 {
                continue;
            }
            for i in 1..=k1 + 1 {
                for n in 1..=4u32 {
                    let oracle = split_reordering_sign(
                        k as usize,
                        k1 as usize,
                        k2 as usize,
                        i as usize,
                    )
                    .unwrap()
                    .sign;
                    let here = sign_of_exponent(boundary_epsilon(k1, k2, i, n))
                        * sign_of_exponent(boundary_epsilon(k1, k2, 1, n));
                    assert_eq!(here, oracle, "k1={k1} k2={k2} i={i} n={n}");
                }
            }
        }
    }
}

#[test]
fn cancellation_mode_difference_is_sigma2_reversal() {
    // The B congruence differs from A by k2(k2-1), i.e. twice the exponent
    // of the reversal of a (k2+1)-tuple fixing the glued point. So the two
    // modes disagree exactly where that reversal is odd.
    for mu2 in (-8..10i64).step_by(2) {
        for k2 in 0..=12u32 {
            let a = cancellation_check(CountMode::A, mu2, k2).unwrap();
            let b = cancellation_check(CountMode::B, mu2, k2).unwrap();
            let sigma2 = sigma_pair_signs(k2 as usize + 1, 1, k2 as usize, 1)
                .unwrap()
                .sigma2_sign;
            assert_eq!(a != b, sigma2 == -1, "mu2={mu2} k2={k2}");
            assert_eq!(sigma2, reversal_sign(k2 as usize + 1).unwrap());
        }
    }
}

#[test]
fn sign_value_display_matches_table_glyphs() {
    assert_eq!(SignValue::Plus.to_string(), "1");
    assert_eq!(SignValue::Minus.to_string(), "-1");
    assert_eq!(SignValue::Undefined.to_string(), "X");
}
