//! Discriminant of a cubic pencil as a polynomial in the pencil parameter.
//!
//! The member F + tG is singular exactly when its three partial derivatives
//! share a projective zero, i.e. when the Macaulay resultant of the gradient
//! quadrics vanishes. That resultant is the quotient D(t)/D'(t) of a 15x15
//! determinant (degree 15 in t) by a 3x3 minor (degree 3), hence a genuine
//! polynomial of degree 12 in t. Rather than expanding it symbolically we
//! sample the quotient at Chebyshev nodes and fit a degree-12 polynomial,
//! which keeps the whole computation in well-conditioned linear algebra.
//!
//! A fit is only accepted after validating it on held-out nodes the fit
//! never saw. Nodes where the denominator minor nearly vanishes are a
//! property of the sampling position, not of the pencil, so the node family
//! is shifted and, failing that, the sampling half-width is enlarged.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::macaulay::{resultant_value, resultant_value_complex};
use crate::pencil::Pencil;
use crate::poly::HomogeneousPoly;
use crate::{PencilError, Tolerances};

/// Degree of the discriminant of a pencil of plane cubics.
pub const DISCRIMINANT_DEGREE: usize = 12;

const FIT_NODES: usize = 25;
const VALIDATION_NODES: usize = 11;
/// Half-widths of the sampling interval, tried in order. Wider rungs exist
/// only as fallbacks for unlucky node placement; root location quality
/// peaks inside the window and decays outside it, which is why the count
/// pools roots from two reciprocal charts rather than widening the window.
const HALF_WIDTHS: [f64; 3] = [2.0, 8.0, 32.0];
/// Angular offsets (as fractions of the node spacing) tried per half-width.
const SHIFT_STEPS: [f64; 4] = [0.0, 0.17, 0.31, 0.43];

/// Discriminant of F + tG, reconstructed in the monomial basis.
#[derive(Debug, Clone)]
pub struct DiscriminantPoly {
    /// Ascending coefficients c_0..c_12 of the discriminant in t, scaled so
    /// the largest magnitude is 1.
    pub coeffs: Vec<f64>,
    /// Largest index with a coefficient above the truncation threshold.
    /// 12 for a pencil whose infinity member is smooth and met transversally.
    pub effective_degree: usize,
    /// Half-width of the sampling interval that produced the accepted fit.
    pub scale_l: f64,
    /// Worst held-out validation error, relative to the value scale.
    pub fit_residual: f64,
}

fn gradient_quadrics(pencil: &Pencil, t: f64) -> [HomogeneousPoly; 3] {
    pencil.member(t).gradient()
}

/// Evaluate the exact resultant of the gradient system of F + tG at a
/// complex parameter. Unlike the fitted polynomial this carries no fitting
/// error, only determinant roundoff, so it serves as the ground truth the
/// fitted roots are polished against.
pub fn resultant_eval(pencil: &Pencil, t: Complex64) -> Result<Complex64, PencilError> {
    let df = pencil.f().gradient();
    let dg = pencil.g().gradient();
    let quadrics: [Vec<Complex64>; 3] = std::array::from_fn(|v| {
        df[v]
            .coeffs()
            .iter()
            .zip(dg[v].coeffs())
            .map(|(a, b)| *a + t * *b)
            .collect()
    });
    resultant_value_complex(&quadrics)
}

/// Chordal distance between two points of the parameter sphere. The fitted
/// polynomial localizes far-out roots much more loosely than near ones (a
/// truncated top coefficient perturbs a root at t roughly like t^12), and
/// the chordal metric degrades with exactly that geometry.
pub(crate) fn chordal_t(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / ((1.0 + a.norm_sqr()) * (1.0 + b.norm_sqr())).sqrt()
}

/// Newton-polish a fitted discriminant root against the exact resultant.
/// The derivative comes from a centered difference, which for a holomorphic
/// function works with a step in any direction. A real start stays real,
/// since the resultant is real on the real axis.
///
/// Drifting farther than `max_drift` (chordal) from the start means the fit
/// did not actually resolve this root; callers treat that as a genericity
/// failure.
pub(crate) fn polish_root(
    pencil: &Pencil,
    start: Complex64,
    max_drift: f64,
) -> Result<Complex64, PencilError> {
    let mut z = start;
    for _ in 0..40 {
        let h = 1e-7 * (1.0 + z.norm());
        let value = resultant_eval(pencil, z)?;
        let ahead = resultant_eval(pencil, z + h)?;
        let behind = resultant_eval(pencil, z - h)?;
        let deriv = (ahead - behind) / (2.0 * h);
        if deriv.norm() == 0.0 {
            break;
        }
        let step = value / deriv;
        z -= step;
        if !(z.re.is_finite() && z.im.is_finite()) {
            break;
        }
        if chordal_t(z, start) > max_drift {
            return Err(PencilError::NonGeneric {
                reason: format!("a discriminant root drifted from {start} under polishing"),
            });
        }
        if step.norm() <= 1e-12 * (1.0 + z.norm()) {
            return Ok(z);
        }
    }
    Err(PencilError::NonGeneric {
        reason: format!("discriminant root polish stalled near {start}"),
    })
}

/// Chebyshev evaluation of sum c_k T_k(s) by the backward recurrence.
fn chebyshev_eval(coeffs: &[f64], s: f64) -> f64 {
    let mut b1 = 0.0;
    let mut b2 = 0.0;
    for &c in coeffs.iter().rev() {
        let b0 = 2.0 * s * b1 - b2 + c;
        b2 = b1;
        b1 = b0;
    }
    // Clenshaw closeout: T_1 = s T_0, so the sum is b_0 - s b_1.
    b1 - s * b2
}

/// Monomial coefficients of T_0..T_deg via the three-term recurrence.
fn chebyshev_monomial_rows(deg: usize) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<f64>> = vec![vec![1.0], vec![0.0, 1.0]];
    for k in 2..=deg {
        let mut next = vec![0.0; k + 1];
        for (i, &c) in rows[k - 1].iter().enumerate() {
            next[i + 1] += 2.0 * c;
        }
        for (i, &c) in rows[k - 2].iter().enumerate() {
            next[i] -= c;
        }
        rows.push(next);
    }
    rows.truncate(deg + 1);
    rows
}

/// Sampled resultant values at Chebyshev angles, skipping nodes where the
/// Macaulay denominator degenerates. Returns (t, value) pairs.
fn sample_family(
    pencil: &Pencil,
    half_width: f64,
    count: usize,
    shift: f64,
) -> Vec<(f64, f64)> {
    let spacing = std::f64::consts::PI / count as f64;
    let mut out = Vec::with_capacity(count);
    for j in 0..count {
        // Shifts stay well under one spacing, keeping the nodes distinct.
        let theta = (j as f64 + 0.5 + shift) * spacing;
        let t = half_width * theta.cos();
        if let Ok(v) = resultant_value(&gradient_quadrics(pencil, t)) {
            out.push((t, v));
        }
    }
    out
}

/// Reconstruct the discriminant of F + tG by sampling and Chebyshev fitting.
pub fn discriminant_poly(
    pencil: &Pencil,
    tol: &Tolerances,
) -> Result<DiscriminantPoly, PencilError> {
    let n_coeffs = DISCRIMINANT_DEGREE + 1;
    let mut last_reason = String::from("no sampling family attempted");

    for &half_width in &HALF_WIDTHS {
        for &shift in &SHIFT_STEPS {
            let fit = sample_family(pencil, half_width, FIT_NODES, shift);
            if fit.len() < FIT_NODES {
                last_reason = format!(
                    "degenerate Macaulay denominator at {} of {} fit nodes (L = {})",
                    FIT_NODES - fit.len(),
                    FIT_NODES,
                    half_width
                );
                continue;
            }
            // Validation nodes interleave a coarser family; the extra angular
            // offset keeps them off the fit nodes.
            let held_out = sample_family(pencil, half_width, VALIDATION_NODES, shift + 0.213);
            if held_out.len() < VALIDATION_NODES - 2 {
                last_reason = format!(
                    "degenerate Macaulay denominator at validation nodes (L = {half_width})"
                );
                continue;
            }

            let value_scale = fit.iter().fold(0.0f64, |a, &(_, v)| a.max(v.abs()));
            if value_scale < 1e-18 {
                return Err(PencilError::NonGeneric {
                    reason: "discriminant vanishes at every sample: pencil has a persistently singular member".into(),
                });
            }

            let mut a = DMatrix::zeros(fit.len(), n_coeffs);
            let mut rhs = DMatrix::zeros(fit.len(), 1);
            for (row, &(t, v)) in fit.iter().enumerate() {
                let s = t / half_width;
                // T_k(s) column by column via the forward recurrence.
                let mut tk_prev = 1.0;
                let mut tk = s;
                a[(row, 0)] = 1.0;
                for k in 1..n_coeffs {
                    a[(row, k)] = tk;
                    let tk_next = 2.0 * s * tk - tk_prev;
                    tk_prev = tk;
                    tk = tk_next;
                }
                rhs[(row, 0)] = v / value_scale;
            }
            let svd = a.svd(true, true);
            let sol = match svd.solve(&rhs, 1e-12) {
                Ok(sol) => sol,
                Err(_) => {
                    last_reason = format!("rank-deficient fit system (L = {half_width})");
                    continue;
                }
            };
            let cheb: Vec<f64> = sol.iter().copied().collect();

            let worst = held_out
                .iter()
                .map(|&(t, v)| {
                    let w = v / value_scale;
                    (chebyshev_eval(&cheb, t / half_width) - w).abs() / w.abs().max(1.0)
                })
                .fold(0.0f64, f64::max);
            if worst > tol.fit_residual {
                last_reason = format!(
                    "held-out validation error {worst:.3e} at L = {half_width}"
                );
                continue;
            }

            // Chebyshev in s = t / L back to monomials in t.
            let rows = chebyshev_monomial_rows(DISCRIMINANT_DEGREE);
            let mut mono = vec![0.0; n_coeffs];
            for (k, &c) in cheb.iter().enumerate() {
                for (m, &r) in rows[k].iter().enumerate() {
                    mono[m] += c * r;
                }
            }
            for (m, c) in mono.iter_mut().enumerate() {
                *c /= half_width.powi(m as i32);
            }
            let coeff_scale = mono.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
            for c in mono.iter_mut() {
                *c /= coeff_scale;
            }
            let effective_degree = mono
                .iter()
                .rposition(|c| c.abs() > 1e-7)
                .unwrap_or(0);

            return Ok(DiscriminantPoly {
                coeffs: mono,
                effective_degree,
                scale_l: half_width,
                fit_residual: worst,
            });
        }
    }

    Err(PencilError::NonGeneric {
        reason: last_reason,
    })
}

impl DiscriminantPoly {
    /// Evaluate the reconstructed discriminant (in its normalized scale).
    pub fn eval(&self, t: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
    }
}
