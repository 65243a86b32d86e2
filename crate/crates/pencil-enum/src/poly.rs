//! Dense homogeneous polynomials in three variables with a fixed
//! graded-lexicographic monomial order.

use num_complex::Complex64;

use crate::PencilError;

/// Exponent triples of all degree-d monomials in x, y, z, in the fixed
/// order: x^d first, then lexicographically descending in (a, b).
pub fn monomial_exponents(degree: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::with_capacity(monomial_count(degree));
    for a in (0..=degree).rev() {
        for b in (0..=degree - a).rev() {
            out.push([a, b, degree - a - b]);
        }
    }
    out
}

pub fn monomial_count(degree: u32) -> usize {
    ((degree + 1) * (degree + 2) / 2) as usize
}

/// Position of an exponent triple in the fixed order.
pub fn monomial_index(degree: u32, e: [u32; 3]) -> usize {
    debug_assert_eq!(e[0] + e[1] + e[2], degree);
    // Triples with first exponent > a come first, then larger second
    // exponents within the block of a.
    let (a, b) = (e[0], e[1]);
    let before_a: u32 = ((a + 1)..=degree).map(|t| degree - t + 1).sum();
    (before_a + (degree - a - b)) as usize
}

#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPoly {
    degree: u32,
    coeffs: Vec<f64>,
}

impl HomogeneousPoly {
    pub fn new(degree: u32, coeffs: Vec<f64>) -> Result<Self, PencilError> {
        let expected = monomial_count(degree);
        if coeffs.len() != expected {
            return Err(PencilError::CoefficientArity {
                degree,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(HomogeneousPoly { degree, coeffs })
    }

    pub fn zero(degree: u32) -> Self {
        HomogeneousPoly {
            degree,
            coeffs: vec![0.0; monomial_count(degree)],
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.coeffs.iter().all(|c| c.abs() <= tol)
    }

    pub fn normalized(&self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            return self.clone();
        }
        HomogeneousPoly {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|c| c / n).collect(),
        }
    }

    /// a*self + b*other; degrees must match.
    pub fn linear_combination(a: f64, f: &Self, b: f64, g: &Self) -> Self {
        assert_eq!(f.degree, g.degree, "combining different degrees");
        HomogeneousPoly {
            degree: f.degree,
            coeffs: f
                .coeffs
                .iter()
                .zip(&g.coeffs)
                .map(|(cf, cg)| a * cf + b * cg)
                .collect(),
        }
    }

    pub fn eval(&self, p: [f64; 3]) -> f64 {
        let d = self.degree as usize;
        let pow = |v: f64| -> Vec<f64> {
            let mut w = vec![1.0; d + 1];
            for j in 1..=d {
                w[j] = w[j - 1] * v;
            }
            w
        };
        let (px, py, pz) = (pow(p[0]), pow(p[1]), pow(p[2]));
        monomial_exponents(self.degree)
            .iter()
            .zip(&self.coeffs)
            .map(|(e, c)| c * px[e[0] as usize] * py[e[1] as usize] * pz[e[2] as usize])
            .sum()
    }

    pub fn eval_complex(&self, p: [Complex64; 3]) -> Complex64 {
        let d = self.degree as usize;
        let pow = |v: Complex64| -> Vec<Complex64> {
            let mut w = vec![Complex64::new(1.0, 0.0); d + 1];
            for j in 1..=d {
                w[j] = w[j - 1] * v;
            }
            w
        };
        let (px, py, pz) = (pow(p[0]), pow(p[1]), pow(p[2]));
        monomial_exponents(self.degree)
            .iter()
            .zip(&self.coeffs)
            .map(|(e, c)| px[e[0] as usize] * py[e[1] as usize] * pz[e[2] as usize] * *c)
            .sum()
    }

    /// Partial derivative with respect to variable 0, 1, or 2. The result of
    /// differentiating a polynomial that does not involve the variable is
    /// the zero polynomial of one degree less.
    pub fn partial(&self, var: usize) -> HomogeneousPoly {
        assert!(var < 3);
        assert!(self.degree >= 1, "cannot differentiate degree 0");
        let lower = self.degree - 1;
        let mut out = HomogeneousPoly::zero(lower);
        for (e, c) in monomial_exponents(self.degree).iter().zip(&self.coeffs) {
            if e[var] == 0 {
                continue;
            }
            let mut le = *e;
            le[var] -= 1;
            out.coeffs[monomial_index(lower, le)] += c * f64::from(e[var]);
        }
        out
    }

    pub fn gradient(&self) -> [HomogeneousPoly; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_monomial_order_is_graded_lex() {
        let e = monomial_exponents(3);
        assert_eq!(e.len(), 10);
        assert_eq!(e[0], [3, 0, 0]);
        assert_eq!(e[1], [2, 1, 0]);
        assert_eq!(e[2], [2, 0, 1]);
        assert_eq!(e[3], [1, 2, 0]);
        assert_eq!(e[4], [1, 1, 1]);
        assert_eq!(e[5], [1, 0, 2]);
        assert_eq!(e[6], [0, 3, 0]);
        assert_eq!(e[9], [0, 0, 3]);
    }

    #[test]
    fn monomial_index_inverts_the_order() {
        for d in 1..=4u32 {
            for (idx, e) in monomial_exponents(d).iter().enumerate() {
                assert_eq!(monomial_index(d, *e), idx, "degree {d} exponent {e:?}");
            }
        }
    }

    #[test]
    fn coefficient_arity_enforced() {
        assert!(HomogeneousPoly::new(3, vec![0.0; 9]).is_err());
        assert!(HomogeneousPoly::new(2, vec![0.0; 6]).is_ok());
    }

    #[test]
    fn evaluates_fermat_cubic() {
        // x^3 + y^3 + z^3 at (1, 2, 3) = 1 + 8 + 27.
        let mut coeffs = vec![0.0; 10];
        coeffs[0] = 1.0;
        coeffs[6] = 1.0;
        coeffs[9] = 1.0;
        let f = HomogeneousPoly::new(3, coeffs).unwrap();
        assert_eq!(f.eval([1.0, 2.0, 3.0]), 36.0);
    }

    #[test]
    fn partial_of_mixed_cubic() {
        // f = x^2 y: df/dx = 2xy, df/dy = x^2, df/dz = 0.
        let mut coeffs = vec![0.0; 10];
        coeffs[1] = 1.0;
        let f = HomogeneousPoly::new(3, coeffs).unwrap();
        let fx = f.partial(0);
        let fy = f.partial(1);
        let fz = f.partial(2);
        assert_eq!(fx.eval([3.0, 5.0, 7.0]), 30.0);
        assert_eq!(fy.eval([3.0, 5.0, 7.0]), 9.0);
        assert!(fz.is_zero(0.0));
    }

    #[test]
    fn euler_relation_on_random_cubic() {
        // x f_x + y f_y + z f_z = 3 f for homogeneous degree 3.
        let coeffs: Vec<f64> = (0..10).map(|i| (i as f64) * 0.37 - 1.1).collect();
        let f = HomogeneousPoly::new(3, coeffs).unwrap();
        let [fx, fy, fz] = f.gradient();
        let p = [0.3, -1.2, 0.8];
        let lhs = p[0] * fx.eval(p) + p[1] * fy.eval(p) + p[2] * fz.eval(p);
        assert!((lhs - 3.0 * f.eval(p)).abs() < 1e-12);
    }

    #[test]
    fn complex_eval_matches_real_on_real_input() {
        let coeffs: Vec<f64> = (0..10).map(|i| 1.0 / (1.0 + i as f64)).collect();
        let f = HomogeneousPoly::new(3, coeffs).unwrap();
        let p = [0.4, 0.5, -0.6];
        let pc = p.map(|v| Complex64::new(v, 0.0));
        assert!((f.eval_complex(pc).re - f.eval(p)).abs() < 1e-14);
        assert_eq!(f.eval_complex(pc).im, 0.0);
    }
}
