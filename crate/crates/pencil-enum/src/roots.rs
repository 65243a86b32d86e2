//! Univariate polynomial roots via the companion matrix, with a Newton
//! polish pass. Coefficients are real, ascending by degree; roots come back
//! as complex numbers in a deterministic order (sorted by real part, then
//! imaginary part).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::PencilError;

/// Roots of a real polynomial together with quality diagnostics.
#[derive(Debug, Clone)]
pub struct PolyRoots {
    /// All complex roots, sorted by (re, im).
    pub roots: Vec<Complex64>,
    /// Worst |p(z)| / scale over the returned roots, where scale is the
    /// coefficient magnitude sum weighted by |z| powers.
    pub max_residual: f64,
    /// True when two returned roots are closer than the cluster tolerance,
    /// which makes signs at those parameters unreliable.
    pub clustered: bool,
}

fn eval_poly(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    // Horner evaluation of p and p' together.
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn residual_scale(coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let mut pow = 1.0;
    let mut scale = 0.0;
    for &c in coeffs {
        scale += c.abs() * pow;
        pow *= r;
    }
    scale.max(1e-300)
}

/// All complex roots of the polynomial with the given ascending real
/// coefficients. Trailing (near-)zero leading coefficients are trimmed
/// relative to the largest coefficient; the remaining degree must be at
/// least 1.
pub fn poly_roots(coeffs: &[f64], cluster_tol: f64) -> Result<PolyRoots, PencilError> {
    let max_c = coeffs.iter().fold(0.0f64, |a, c| a.max(c.abs()));
    if max_c == 0.0 {
        return Err(PencilError::DegreeTooSmall);
    }
    let mut deg = coeffs.len() - 1;
    while deg > 0 && coeffs[deg].abs() <= 1e-12 * max_c {
        deg -= 1;
    }
    if deg == 0 {
        return Err(PencilError::DegreeTooSmall);
    }

    // Monic companion matrix of the trimmed polynomial.
    let lead = coeffs[deg];
    let n = deg;
    let mut comp = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        comp[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        comp[(i, n - 1)] = -coeffs[i] / lead;
    }
    let eigs = comp.complex_eigenvalues();

    let mut roots: Vec<Complex64> = eigs.iter().copied().collect();

    // Newton polish: a few steps from each eigenvalue estimate. Kept only
    // when it does not wander (guards against division by tiny p').
    let trimmed = &coeffs[..=deg];
    for z in roots.iter_mut() {
        let mut cur = *z;
        for _ in 0..30 {
            let (p, dp) = eval_poly(trimmed, cur);
            if dp.norm() < 1e-300 {
                break;
            }
            let step = p / dp;
            cur -= step;
            if step.norm() <= 1e-16 * cur.norm().max(1.0) {
                break;
            }
        }
        let (p_new, _) = eval_poly(trimmed, cur);
        let (p_old, _) = eval_poly(trimmed, *z);
        if p_new.norm() <= p_old.norm() {
            *z = cur;
        }
    }

    roots.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("root coordinates are finite")
    });

    let max_residual = roots
        .iter()
        .map(|&z| eval_poly(trimmed, z).0.norm() / residual_scale(trimmed, z))
        .fold(0.0f64, f64::max);

    let mut clustered = false;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let gap = (roots[i] - roots[j]).norm();
            let size = roots[i].norm().max(roots[j].norm()).max(1.0);
            if gap < cluster_tol * size {
                clustered = true;
            }
        }
    }

    Ok(PolyRoots {
        roots,
        max_residual,
        clustered,
    })
}
