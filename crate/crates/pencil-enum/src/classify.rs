//! Classification of singular pencil members.
//!
//! At a root t of the discriminant the member F + tG has a singular point.
//! The degree-4 monomial vector of that point spans the kernel of the
//! Macaulay matrix of the gradient quadrics, which yields a seed; a joint
//! Newton iteration on two chart coordinates and t then sharpens the
//! parameter and the point simultaneously until the full gradient vanishes.
//!
//! The singular point of a one-nodal real member is real: it is unique, and
//! any non-real singular point would force a distinct conjugate partner.
//! Its type is read off the Hessian restricted to an affine chart. The
//! projective Hessian kills the node itself (Euler relation), so every
//! admissible chart restriction is congruent to the same rank-2 form and the
//! determinant sign is chart independent: negative means two real branches
//! cross, positive means an isolated real point.

use nalgebra::{DMatrix, Matrix3, Vector3};
use serde::Serialize;

use crate::macaulay::macaulay_matrix;
use crate::pencil::Pencil;
use crate::poly::{monomial_index, HomogeneousPoly};
use crate::{PencilError, Tolerances};

/// How a pencil member meets the real locus at its singular point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum NodeType {
    /// Real node with two real branches; counts +1.
    Crossing,
    /// Real node with conjugate branches (isolated real point); counts -1.
    Solitary,
    /// Member at a non-real parameter; carries no sign.
    ComplexMember,
    /// Classification did not resolve (multiple singular points, Newton
    /// failure, or an indefinite Hessian test). Treated as a genericity
    /// failure by callers.
    Degenerate,
}

/// A classified singular member of a pencil.
#[derive(Debug, Clone)]
pub struct MemberClass {
    /// Refined real pencil parameter.
    pub t: f64,
    /// Unit representative of the singular point, largest coordinate
    /// positive. Zero for degenerate outcomes.
    pub node: [f64; 3],
    pub node_type: NodeType,
    /// +1 for a crossing, -1 for a solitary point.
    pub sign: Option<i8>,
    /// Gradient norm at the node relative to the member scale.
    pub grad_residual: f64,
    /// Chart Hessian determinant relative to the chart Hessian scale.
    pub hessian_det: f64,
    /// Largest Macaulay singular value over the smallest structurally
    /// nonzero one: how cleanly the kernel direction separates.
    pub kernel_cond: f64,
}

fn degenerate(t: f64) -> MemberClass {
    MemberClass {
        t,
        node: [0.0; 3],
        node_type: NodeType::Degenerate,
        sign: None,
        grad_residual: f64::INFINITY,
        hessian_det: 0.0,
        kernel_cond: f64::INFINITY,
    }
}

/// Point whose degree-4 monomial vector best matches the kernel vector:
/// ratios against the dominant fourth power recover the coordinates.
fn node_seed(v: &[f64]) -> [f64; 3] {
    let at = |e: [u32; 3]| v[monomial_index(4, e)];
    let candidates = [
        (
            at([4, 0, 0]).abs(),
            [at([4, 0, 0]), at([3, 1, 0]), at([3, 0, 1])],
        ),
        (
            at([0, 4, 0]).abs(),
            [at([1, 3, 0]), at([0, 4, 0]), at([0, 3, 1])],
        ),
        (
            at([0, 0, 4]).abs(),
            [at([1, 0, 3]), at([0, 1, 3]), at([0, 0, 4])],
        ),
    ];
    candidates
        .into_iter()
        .max_by(|a, b| a.0.partial_cmp(&b.0).expect("finite kernel entries"))
        .expect("non-empty candidate list")
        .1
}

fn hessian_at(member: &HomogeneousPoly, p: [f64; 3]) -> Matrix3<f64> {
    let first: Vec<HomogeneousPoly> = (0..3).map(|i| member.partial(i)).collect();
    Matrix3::from_fn(|i, j| first[i].partial(j).eval(p))
}

fn argmax_abs(p: [f64; 3]) -> usize {
    let mut best = 0;
    for i in 1..3 {
        if p[i].abs() > p[best].abs() {
            best = i;
        }
    }
    best
}

/// Chart Hessian determinant of a member at a point, normalized by the
/// squared Frobenius norm of the chart block. The chart index is the
/// coordinate held fixed; the point must not vanish there.
pub fn chart_hessian_det(member: &HomogeneousPoly, node: [f64; 3], chart: usize) -> f64 {
    assert!(chart < 3 && node[chart] != 0.0, "point outside chart");
    let h = hessian_at(member, node);
    let idx: Vec<usize> = (0..3).filter(|&i| i != chart).collect();
    let (r, c) = (idx[0], idx[1]);
    let det = h[(r, r)] * h[(c, c)] - h[(r, c)] * h[(c, r)];
    let scale =
        h[(r, r)].powi(2) + h[(c, c)].powi(2) + h[(r, c)].powi(2) + h[(c, r)].powi(2);
    if scale == 0.0 {
        return 0.0;
    }
    det / scale
}

/// Locate and classify the singular point of the member at a real parameter
/// near t. Unresolvable situations come back as `Degenerate` rather than an
/// error; callers decide whether that forces a resample.
pub fn classify_member(
    pencil: &Pencil,
    t: f64,
    tol: &Tolerances,
) -> Result<MemberClass, PencilError> {
    let quadrics = pencil.member(t).gradient();
    let m: DMatrix<f64> = macaulay_matrix(&quadrics);
    let svd = m.svd(false, true);
    let sv = &svd.singular_values;
    let smax = sv[0];
    // Negated on purpose: also catches NaN from a poisoned matrix.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(smax > 0.0) {
        return Ok(degenerate(t));
    }
    // A unique singular point leaves exactly one near-zero singular value.
    if sv[13] <= tol.genericity * smax {
        return Ok(degenerate(t));
    }
    let kernel_cond = smax / sv[13];
    let v_t = svd.v_t.as_ref().expect("requested right singular vectors");
    let kernel: Vec<f64> = v_t.row(14).iter().copied().collect();

    let seed = node_seed(&kernel);
    let chart = argmax_abs(seed);
    if seed[chart].abs() < 1e-300 {
        return Ok(degenerate(t));
    }
    let mut p = [
        seed[0] / seed[chart],
        seed[1] / seed[chart],
        seed[2] / seed[chart],
    ];
    let free: Vec<usize> = (0..3).filter(|&i| i != chart).collect();

    // Newton on (p[free[0]], p[free[1]], t) for grad(F + tG)(p) = 0.
    let g_grad = pencil.g().gradient();
    let mut t_cur = t;
    let mut converged = false;
    for _ in 0..60 {
        let member = pencil.member(t_cur);
        let grad_val = Vector3::from_fn(|i, _| member.partial(i).eval(p));
        let h = hessian_at(&member, p);
        let jac = Matrix3::from_fn(|i, j| {
            if j < 2 {
                h[(i, free[j])]
            } else {
                g_grad[i].eval(p)
            }
        });
        let Some(step) = jac.lu().solve(&grad_val) else {
            return Ok(degenerate(t));
        };
        p[free[0]] -= step[0];
        p[free[1]] -= step[1];
        t_cur -= step[2];
        if !p.iter().all(|c| c.is_finite()) || !t_cur.is_finite() {
            return Ok(degenerate(t));
        }
        let size = 1.0 + p[free[0]].abs().max(p[free[1]].abs()).max(t_cur.abs());
        if step.norm() <= 1e-13 * size {
            converged = true;
            break;
        }
    }
    // Drift beyond the local basin means we slid toward a different root.
    if !converged || (t_cur - t).abs() > 0.05 * (1.0 + t.abs()) {
        return Ok(degenerate(t));
    }

    let member = pencil.member(t_cur);
    let p_norm2: f64 = p.iter().map(|c| c * c).sum();
    let grad_norm = (0..3)
        .map(|i| member.partial(i).eval(p).powi(2))
        .sum::<f64>()
        .sqrt();
    let grad_residual = grad_norm / (member.norm().max(1e-300) * p_norm2);
    if grad_residual > tol.node_residual {
        return Ok(degenerate(t));
    }

    let det_rel = chart_hessian_det(&member, p, argmax_abs(p));
    let node_type = if det_rel < -tol.hessian {
        NodeType::Crossing
    } else if det_rel > tol.hessian {
        NodeType::Solitary
    } else {
        return Ok(degenerate(t));
    };
    let sign = match node_type {
        NodeType::Crossing => 1,
        _ => -1,
    };

    // Canonical representative: unit norm, dominant coordinate positive.
    let dominant = argmax_abs(p);
    let flip = if p[dominant] < 0.0 { -1.0 } else { 1.0 };
    let norm = p_norm2.sqrt();
    let node = [
        flip * p[0] / norm,
        flip * p[1] / norm,
        flip * p[2] / norm,
    ];

    Ok(MemberClass {
        t: t_cur,
        node,
        node_type,
        sign: Some(sign),
        grad_residual,
        hessian_det: det_rel,
        kernel_cond,
    })
}


#[cfg(test)]
mod tests {
    use super::*;

    // Degree-3 order: x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
    fn cubic(coeffs: [f64; 10]) -> HomogeneousPoly {
        HomogeneousPoly::new(3, coeffs.to_vec()).unwrap()
    }

    /// x^3 + x^2 z - y^2 z: crossing node at (0, 0, 1), no other singularity.
    fn crossing_cubic() -> HomogeneousPoly {
        cubic([1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0])
    }

    /// -x^3 + x^2 z + y^2 z: solitary node at (0, 0, 1).
    fn solitary_cubic() -> HomogeneousPoly {
        cubic([-1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0])
    }

    fn fermat_cubic() -> HomogeneousPoly {
        cubic([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 1.0])
    }

    /// The cubic p -> c(a p), expanded by interpolation on generic points
    /// (exact for degree 3 up to the conditioning of a 10x10 solve).
    fn compose_linear(c: &HomogeneousPoly, a: &Matrix3<f64>) -> HomogeneousPoly {
        let pts: Vec<[f64; 3]> = (0..10)
            .map(|i| {
                let s = 0.3 + 0.17 * i as f64;
                [s.sin(), (2.0 * s).cos(), 1.0 + 0.1 * s]
            })
            .collect();
        let exps = crate::poly::monomial_exponents(3);
        let mut mat = DMatrix::zeros(10, 10);
        let mut rhs = DMatrix::zeros(10, 1);
        for (r, p) in pts.iter().enumerate() {
            for (cix, e) in exps.iter().enumerate() {
                mat[(r, cix)] = p[0].powi(e[0] as i32)
                    * p[1].powi(e[1] as i32)
                    * p[2].powi(e[2] as i32);
            }
            let v = a * Vector3::new(p[0], p[1], p[2]);
            rhs[(r, 0)] = c.eval([v[0], v[1], v[2]]);
        }
        let sol = mat.lu().solve(&rhs).expect("interpolation points generic");
        HomogeneousPoly::new(3, sol.iter().copied().collect()).unwrap()
    }

    /// Invertible map without any axis alignment. Planting nodes at a
    /// coordinate vertex with axis-aligned branches makes the gradient
    /// quadrics so sparse that the Macaulay row selection loses rank (a
    /// known degenerate-position artifact), so the planted cubics are moved
    /// into general position first.
    fn generic_map() -> Matrix3<f64> {
        Matrix3::new(1.0, 0.3, -0.2, 0.25, 1.0, 0.15, -0.1, 0.2, 1.0)
    }

    /// Where the node of `c(a p)` lands: the preimage of (0,0,1), in the
    /// same canonical form `classify_member` reports (unit norm, dominant
    /// coordinate positive).
    fn planted_node(a: &Matrix3<f64>) -> [f64; 3] {
        let n = a.try_inverse().expect("map invertible") * Vector3::new(0.0, 0.0, 1.0);
        let n = n / n.norm();
        let mut dominant = 0;
        for i in 1..3 {
            if n[i].abs() > n[dominant].abs() {
                dominant = i;
            }
        }
        let flip = if n[dominant] < 0.0 { -1.0 } else { 1.0 };
        [flip * n[0], flip * n[1], flip * n[2]]
    }

    #[test]
    fn hessian_sign_separates_node_types() {
        assert!(chart_hessian_det(&crossing_cubic(), [0.0, 0.0, 1.0], 2) < 0.0);
        assert!(chart_hessian_det(&solitary_cubic(), [0.0, 0.0, 1.0], 2) > 0.0);
    }

    #[test]
    fn chart_choice_does_not_change_the_sign() {
        // C(x - z, y - z, z) moves the node of the crossing cubic from
        // (0,0,1) to (1,1,1), where all three charts apply.
        let shear = Matrix3::new(1.0, 0.0, -1.0, 0.0, 1.0, -1.0, 0.0, 0.0, 1.0);
        let shifted = compose_linear(&crossing_cubic(), &shear);
        let node = [1.0, 1.0, 1.0];
        for i in 0..3 {
            assert!(shifted.partial(i).eval(node).abs() < 1e-8, "not singular");
        }
        let signs: Vec<f64> = (0..3)
            .map(|chart| chart_hessian_det(&shifted, node, chart).signum())
            .collect();
        assert_eq!(signs, vec![-1.0, -1.0, -1.0]);
    }

    #[test]
    fn classifies_a_planted_crossing() {
        let map = generic_map();
        let planted = compose_linear(&crossing_cubic(), &map);
        let pencil = Pencil::new(planted, fermat_cubic()).unwrap();
        let out = classify_member(&pencil, 0.0, &Tolerances::default()).unwrap();
        assert_eq!(out.node_type, NodeType::Crossing);
        assert_eq!(out.sign, Some(1));
        assert!(out.t.abs() < 1e-9, "t drifted to {}", out.t);
        let expected = planted_node(&map);
        for i in 0..3 {
            assert!(
                (out.node[i] - expected[i]).abs() < 1e-8,
                "node {:?} vs expected {:?}",
                out.node,
                expected
            );
        }
        assert!(out.grad_residual < 1e-10);
    }

    #[test]
    fn classifies_a_planted_solitary_point() {
        let map = generic_map();
        let planted = compose_linear(&solitary_cubic(), &map);
        let pencil = Pencil::new(planted, fermat_cubic()).unwrap();
        let out = classify_member(&pencil, 0.0, &Tolerances::default()).unwrap();
        assert_eq!(out.node_type, NodeType::Solitary);
        assert_eq!(out.sign, Some(-1));
        assert!(out.hessian_det > 0.0);
    }

    #[test]
    fn smooth_member_comes_back_degenerate() {
        // t = 0 gives the Fermat cubic, which is smooth: the Macaulay matrix
        // has no small singular value, the kernel vector is noise, and the
        // joint Newton iteration either fails or drifts out of its basin.
        let g = cubic([0.3, -0.8, 0.5, 1.1, -0.4, 0.9, -0.6, 0.7, -1.2, 0.2]);
        let pencil = Pencil::new(fermat_cubic(), g).unwrap();
        let out = classify_member(&pencil, 0.0, &Tolerances::default()).unwrap();
        assert_eq!(out.node_type, NodeType::Degenerate);
        assert_eq!(out.sign, None);
    }

    #[test]
    fn triangle_member_trips_the_multiplicity_gate() {
        // x^3 + y^3 + z^3 - 3xyz factors into three lines meeting in three
        // nodes; several kernel directions appear and classification must
        // refuse rather than pick one arbitrarily.
        let g = cubic([0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let pencil = Pencil::new(fermat_cubic(), g).unwrap();
        // Raw singular member: fermat - 3 xyz. Pencil normalization scales
        // f by 1/sqrt(3) and g by 1; member(u) = f/sqrt(3) + u xyz matches
        // the raw member at u = -3/sqrt(3) = -sqrt(3).
        let out = classify_member(&pencil, -(3.0f64.sqrt()), &Tolerances::default()).unwrap();
        assert_eq!(out.node_type, NodeType::Degenerate);
    }

    #[test]
    fn node_representative_is_deterministic() {
        let map = generic_map();
        let planted = compose_linear(&crossing_cubic(), &map);
        let pencil = Pencil::new(planted, fermat_cubic()).unwrap();
        let a = classify_member(&pencil, 0.0, &Tolerances::default()).unwrap();
        let b = classify_member(&pencil, 1e-12, &Tolerances::default()).unwrap();
        for i in 0..3 {
            assert!((a.node[i] - b.node[i]).abs() < 1e-9);
        }
        let norm: f64 = a.node.iter().map(|c| c * c).sum();
        assert!((norm - 1.0).abs() < 1e-12);
    }
}
