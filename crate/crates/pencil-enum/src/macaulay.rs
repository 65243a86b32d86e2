//! Macaulay resultant of three ternary quadrics.
//!
//! Three quadrics q1, q2, q3 in x, y, z share a projective zero exactly when
//! their resultant vanishes. At the critical degree 4 = 2+2+2-2 the Macaulay
//! construction fills a 15x15 matrix over the degree-4 monomials: each row
//! is m/x^2 * q1 for the 6 monomials m with x-exponent >= 2, m/y^2 * q2 for
//! the 5 remaining with y-exponent >= 2, and m/z^2 * q3 for the final 4. The
//! resultant is det(M) divided by the determinant of the 3x3 minor indexed
//! by the non-reduced monomials (those divisible by two of x^2, y^2, z^2):
//! x^2y^2, x^2z^2, y^2z^2.
//!
//! Used here with q_i the partial derivatives of a pencil member F + tG, in
//! which case det(M) has degree 15 in t, the minor has degree 3, and the
//! quotient is the classical degree-12 discriminant of the cubic family.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::poly::{monomial_exponents, monomial_index, HomogeneousPoly};
use crate::PencilError;

/// Row plan: which quadric multiplies which degree-2 monomial to produce
/// each degree-4 row, in the fixed degree-4 monomial order.
fn row_plan() -> Vec<(usize, [u32; 3])> {
    monomial_exponents(4)
        .into_iter()
        .map(|m| {
            if m[0] >= 2 {
                (0, [m[0] - 2, m[1], m[2]])
            } else if m[1] >= 2 {
                (1, [m[0], m[1] - 2, m[2]])
            } else {
                // Degree 4 in three variables with x-exp <= 1 and y-exp <= 1
                // forces z-exp >= 2.
                (2, [m[0], m[1], m[2] - 2])
            }
        })
        .collect()
}

/// Degree-4 monomials divisible by two of x^2, y^2, z^2.
const NON_REDUCED: [[u32; 3]; 3] = [[2, 2, 0], [2, 0, 2], [0, 2, 2]];

/// The 15x15 Macaulay matrix of three quadrics at critical degree 4.
pub fn macaulay_matrix(q: &[HomogeneousPoly; 3]) -> DMatrix<f64> {
    for qi in q {
        assert_eq!(qi.degree(), 2, "Macaulay construction expects quadrics");
    }
    let quadric_exps = monomial_exponents(2);
    let mut m = DMatrix::zeros(15, 15);
    for (row, (which, mult)) in row_plan().into_iter().enumerate() {
        for (e, c) in quadric_exps.iter().zip(q[which].coeffs()) {
            let target = [mult[0] + e[0], mult[1] + e[1], mult[2] + e[2]];
            m[(row, monomial_index(4, target))] += c;
        }
    }
    m
}

/// Numerator and denominator determinants (D, D') with resultant = D / D'.
pub fn macaulay_dets(q: &[HomogeneousPoly; 3]) -> (f64, f64) {
    let m = macaulay_matrix(q);
    let rows: Vec<usize> = NON_REDUCED
        .iter()
        .map(|&e| monomial_index(4, e))
        .collect();
    let mut minor = DMatrix::zeros(3, 3);
    for (i, &ri) in rows.iter().enumerate() {
        for (j, &rj) in rows.iter().enumerate() {
            minor[(i, j)] = m[(ri, rj)];
        }
    }
    (m.determinant(), minor.determinant())
}

/// Resultant value D / D'. The denominator vanishing is a property of the
/// coefficient arrangement, not of the zero set; callers treat it as a
/// perturb-and-retry signal.
pub fn resultant_value(q: &[HomogeneousPoly; 3]) -> Result<f64, PencilError> {
    let (num, den) = macaulay_dets(q);
    // Scale reference: Hadamard bound of the minor from the quadric norms.
    let scale: f64 = q.iter().map(|qi| qi.norm().max(1e-30)).product();
    if den.abs() <= 1e-12 * scale {
        return Err(PencilError::VanishingDenominator { denom: den });
    }
    Ok(num / den)
}

/// Same construction over complex coefficients, with each quadric given as
/// its 6 coefficients in the degree-2 monomial order. This is what lets the
/// discriminant of a real pencil be evaluated at non-real parameters.
pub fn macaulay_matrix_complex(q: &[Vec<Complex64>; 3]) -> DMatrix<Complex64> {
    for qi in q {
        assert_eq!(qi.len(), 6, "Macaulay construction expects quadrics");
    }
    let quadric_exps = monomial_exponents(2);
    let mut m = DMatrix::zeros(15, 15);
    for (row, (which, mult)) in row_plan().into_iter().enumerate() {
        for (e, c) in quadric_exps.iter().zip(&q[which]) {
            let target = [mult[0] + e[0], mult[1] + e[1], mult[2] + e[2]];
            m[(row, monomial_index(4, target))] += *c;
        }
    }
    m
}

/// Complex-coefficient resultant D / D', with the same denominator guard
/// as the real path.
pub fn resultant_value_complex(q: &[Vec<Complex64>; 3]) -> Result<Complex64, PencilError> {
    let m = macaulay_matrix_complex(q);
    let rows: Vec<usize> = NON_REDUCED
        .iter()
        .map(|&e| monomial_index(4, e))
        .collect();
    let mut minor = DMatrix::zeros(3, 3);
    for (i, &ri) in rows.iter().enumerate() {
        for (j, &rj) in rows.iter().enumerate() {
            minor[(i, j)] = m[(ri, rj)];
        }
    }
    let num = m.determinant();
    let den = minor.determinant();
    let scale: f64 = q
        .iter()
        .map(|qi| {
            qi.iter()
                .map(Complex64::norm_sqr)
                .sum::<f64>()
                .sqrt()
                .max(1e-30)
        })
        .product();
    if den.norm() <= 1e-12 * scale {
        return Err(PencilError::VanishingDenominator { denom: den.norm() });
    }
    Ok(num / den)
}
