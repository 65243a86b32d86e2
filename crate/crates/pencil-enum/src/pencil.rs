//! The pencil of cubics through a configuration: an orthonormal basis of the
//! nullspace of the interpolation matrix.

use nalgebra::DMatrix;

use crate::config::{interpolation_matrix, RealPointConfig};
use crate::poly::HomogeneousPoly;
use crate::{PencilError, Tolerances};

#[derive(Debug, Clone, PartialEq)]
pub struct Pencil {
    f: HomogeneousPoly,
    g: HomogeneousPoly,
}

impl Pencil {
    /// Requires two genuinely independent cubics: after normalizing, their
    /// Gram determinant must be bounded away from zero.
    pub fn new(f: HomogeneousPoly, g: HomogeneousPoly) -> Result<Self, PencilError> {
        if f.is_zero(0.0) || g.is_zero(0.0) {
            return Err(PencilError::DependentPencil);
        }
        let f = f.normalized();
        let g = g.normalized();
        let inner: f64 = f.coeffs().iter().zip(g.coeffs()).map(|(a, b)| a * b).sum();
        if 1.0 - inner * inner < 1e-12 {
            return Err(PencilError::DependentPencil);
        }
        Ok(Pencil { f, g })
    }

    pub fn f(&self) -> &HomogeneousPoly {
        &self.f
    }

    pub fn g(&self) -> &HomogeneousPoly {
        &self.g
    }

    /// The member F + tG (not renormalized; t = 0 gives F back).
    pub fn member(&self, t: f64) -> HomogeneousPoly {
        HomogeneousPoly::linear_combination(1.0, &self.f, t, &self.g)
    }

    /// Basis change (a b; c d): replaces (F, G) by (aF + bG, cF + dG).
    pub fn recombined(&self, a: f64, b: f64, c: f64, d: f64) -> Result<Self, PencilError> {
        if (a * d - b * c).abs() < 1e-12 {
            return Err(PencilError::DependentPencil);
        }
        Pencil::new(
            HomogeneousPoly::linear_combination(a, &self.f, b, &self.g),
            HomogeneousPoly::linear_combination(c, &self.f, d, &self.g),
        )
    }
}

/// Orthonormal basis of the nullspace of a (possibly wide) real matrix,
/// together with the full singular value list. The matrix is padded square
/// so the SVD exposes all right singular vectors.
pub fn nullspace(m: &DMatrix<f64>, rel_tol: f64) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = m.ncols();
    let mut padded = DMatrix::zeros(n.max(m.nrows()), n);
    padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
    let svd = padded.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let sv = &svd.singular_values;
    let s_max = sv.max();
    let mut basis = Vec::new();
    for i in 0..n {
        if sv[i] <= rel_tol * s_max {
            basis.push(v_t.row(i).iter().copied().collect());
        }
    }
    (basis, sv.iter().copied().collect())
}

/// The pencil of cubics through the 8 conditions of a configuration.
///
/// Fails with a non-generic error when the interpolation matrix does not
/// have full rank 8 (for instance, 8 points on a conic), since then the
/// family of interpolating cubics is not one-dimensional.
pub fn pencil_through(
    config: &RealPointConfig,
    tol: &Tolerances,
) -> Result<Pencil, PencilError> {
    let m = interpolation_matrix(config, 3);
    if config.num_conditions() != 8 {
        return Err(PencilError::InvalidArity {
            r: config.real_points().len() as u32,
            c: config.conj_pairs().len() as u32,
            expected: 8,
        });
    }
    let (basis, sv) = nullspace(&m, 1e-9);
    if basis.len() != 2 {
        return Err(PencilError::NonGeneric {
            reason: format!(
                "interpolation nullspace has dimension {} (singular values {:?})",
                basis.len(),
                sv
            ),
        });
    }
    let f = HomogeneousPoly::new(3, basis[0].clone())?;
    let g = HomogeneousPoly::new(3, basis[1].clone())?;
    let pencil = Pencil::new(f, g)?;

    // Both generators must actually vanish at every condition.
    let mut worst: f64 = 0.0;
    for poly in [pencil.f(), pencil.g()] {
        for p in config.real_points() {
            worst = worst.max(poly.eval(*p).abs());
        }
        for p in config.conj_pairs() {
            worst = worst.max(poly.eval_complex(*p).norm());
        }
    }
    if worst > tol.interp_residual {
        return Err(PencilError::NonGeneric {
            reason: format!("interpolation residual {worst:.3e} exceeds tolerance"),
        });
    }
    Ok(pencil)
}
