//! Seeded sampling of real point configurations and their interpolation
//! matrices.
//!
//! A configuration is conjugation-invariant: r genuinely real points plus c
//! conjugate pairs, each pair stored through one non-real representative. A
//! real curve that passes through a representative automatically passes
//! through its conjugate, so one pair contributes two real linear conditions
//! on the real coefficient vector: the real and imaginary parts of the
//! evaluation at the representative.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{monomial_count, monomial_exponents};
use crate::{PencilError, Tolerances};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenericityCertificate {
    /// Rank of the degree-3 interpolation matrix (number of conditions when
    /// the certificate holds).
    pub rank: usize,
    /// Smallest over largest singular value of that matrix.
    pub sigma_ratio: f64,
    /// Sampling attempts consumed before the certificate held.
    pub attempts: u32,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealPointConfig {
    real_points: Vec<[f64; 3]>,
    conj_pairs: Vec<[Complex64; 3]>,
    seed: u64,
    certificate: GenericityCertificate,
}

impl RealPointConfig {
    /// Builds a configuration from explicit points, recomputing the
    /// genericity certificate for the cubic interpolation problem. Points
    /// are normalized; pairwise-coincident conditions are rejected.
    pub fn from_parts(
        real_points: Vec<[f64; 3]>,
        conj_pairs: Vec<[Complex64; 3]>,
        seed: u64,
    ) -> Result<Self, PencilError> {
        let real_points: Vec<[f64; 3]> = real_points.iter().map(|p| normalize_real(*p)).collect();
        let conj_pairs: Vec<[Complex64; 3]> =
            conj_pairs.iter().map(|p| normalize_complex(*p)).collect();
        if !conditions_distinct(&real_points, &conj_pairs, 1e-3) {
            return Err(PencilError::NonGeneric {
                reason: "coincident point conditions".into(),
            });
        }
        let mut config = RealPointConfig {
            real_points,
            conj_pairs,
            seed,
            certificate: GenericityCertificate {
                rank: 0,
                sigma_ratio: 0.0,
                attempts: 0,
            },
        };
        config.certificate = certify(&config);
        Ok(config)
    }

    pub fn real_points(&self) -> &[[f64; 3]] {
        &self.real_points
    }

    pub fn conj_pairs(&self) -> &[[Complex64; 3]] {
        &self.conj_pairs
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn certificate(&self) -> GenericityCertificate {
        self.certificate
    }

    pub fn num_conditions(&self) -> usize {
        self.real_points.len() + 2 * self.conj_pairs.len()
    }

    /// The same configuration with all affine coordinates multiplied by
    /// `factor` (points are stored in the z = 1 chart before normalization).
    pub fn scaled_affine(&self, factor: f64) -> Result<Self, PencilError> {
        let scale_real = |p: &[f64; 3]| -> [f64; 3] {
            // p is unit-normalized with z > 0; rescale its affine chart.
            [factor * p[0] / p[2], factor * p[1] / p[2], 1.0]
        };
        let scale_complex = |p: &[Complex64; 3]| -> [Complex64; 3] {
            [factor * p[0] / p[2], factor * p[1] / p[2], Complex64::new(1.0, 0.0)]
        };
        RealPointConfig::from_parts(
            self.real_points.iter().map(scale_real).collect(),
            self.conj_pairs.iter().map(scale_complex).collect(),
            self.seed,
        )
    }
}

fn normalize_real(p: [f64; 3]) -> [f64; 3] {
    let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    [p[0] / n, p[1] / n, p[2] / n]
}

fn normalize_complex(p: [Complex64; 3]) -> [Complex64; 3] {
    let n = (p[0].norm_sqr() + p[1].norm_sqr() + p[2].norm_sqr()).sqrt();
    [p[0] / n, p[1] / n, p[2] / n]
}

/// Projective (chordal) distance between unit vectors: sin of the angle
/// between the lines they span.
pub(crate) fn chordal_distance(p: &[Complex64; 3], q: &[Complex64; 3]) -> f64 {
    let inner: Complex64 = p.iter().zip(q).map(|(a, b)| a * b.conj()).sum();
    (1.0 - inner.norm_sqr()).max(0.0).sqrt()
}

pub(crate) fn complexify(p: &[f64; 3]) -> [Complex64; 3] {
    p.map(|v| Complex64::new(v, 0.0))
}

fn conditions_distinct(
    real_points: &[[f64; 3]],
    conj_pairs: &[[Complex64; 3]],
    min_dist: f64,
) -> bool {
    let mut all: Vec<[Complex64; 3]> = real_points.iter().map(complexify).collect();
    for pair in conj_pairs {
        all.push(*pair);
        all.push(pair.map(|v| v.conj()));
    }
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            if chordal_distance(&all[i], &all[j]) < min_dist {
                return false;
            }
        }
    }
    true
}

/// Interpolation matrix for degree-d curves through the configuration: one
/// row per real point, two rows (real and imaginary part of the complex
/// evaluation) per conjugate pair. Columns follow the fixed monomial order.
pub fn interpolation_matrix(config: &RealPointConfig, d: u32) -> DMatrix<f64> {
    let exps = monomial_exponents(d);
    let cols = monomial_count(d);
    let rows = config.num_conditions();
    let mut m = DMatrix::zeros(rows, cols);
    let mut row = 0;
    for p in &config.real_points {
        for (j, e) in exps.iter().enumerate() {
            m[(row, j)] = p[0].powi(e[0] as i32) * p[1].powi(e[1] as i32) * p[2].powi(e[2] as i32);
        }
        row += 1;
    }
    for p in &config.conj_pairs {
        for (j, e) in exps.iter().enumerate() {
            let v = p[0].powu(e[0]) * p[1].powu(e[1]) * p[2].powu(e[2]);
            m[(row, j)] = v.re;
            m[(row + 1, j)] = v.im;
        }
        row += 2;
    }
    m
}

fn certify(config: &RealPointConfig) -> GenericityCertificate {
    let m = interpolation_matrix(config, 3);
    let rows = m.nrows();
    let sv = m.svd(false, false).singular_values;
    let s_max = sv.max();
    let s_min = sv[rows - 1];
    GenericityCertificate {
        rank: sv.iter().filter(|&&s| s > 1e-9 * s_max).count(),
        sigma_ratio: if s_max > 0.0 { s_min / s_max } else { 0.0 },
        attempts: 0,
    }
}

fn draw_affine_disc(rng: &mut ChaCha8Rng) -> (f64, f64) {
    loop {
        let x: f64 = rng.gen_range(-1.0..1.0);
        let y: f64 = rng.gen_range(-1.0..1.0);
        if x * x + y * y <= 1.0 {
            return (x, y);
        }
    }
}

fn draw_points(rng: &mut ChaCha8Rng, r: u32, c: u32) -> (Vec<[f64; 3]>, Vec<[Complex64; 3]>) {
    let real_points: Vec<[f64; 3]> = (0..r)
        .map(|_| {
            let (x, y) = draw_affine_disc(rng);
            normalize_real([x, y, 1.0])
        })
        .collect();
    let conj_pairs: Vec<[Complex64; 3]> = (0..c)
        .map(|_| {
            let (x, y) = draw_affine_disc(rng);
            let mut imag = || {
                let m: f64 = rng.gen_range(0.1..1.0);
                if rng.gen::<bool>() {
                    m
                } else {
                    -m
                }
            };
            let (u, v) = (imag(), imag());
            normalize_complex([
                Complex64::new(x, u),
                Complex64::new(y, v),
                Complex64::new(1.0, 0.0),
            ])
        })
        .collect();
    (real_points, conj_pairs)
}

/// Samples a configuration of r real points and c conjugate pairs for the
/// cubic problem (r + 2c = 8, r ≥ 1), resampling until the interpolation
/// matrix certifies full rank 8 with singular-value ratio above
/// `tol.genericity`. Deterministic in the seed.
pub fn sample_config(
    seed: u64,
    r: u32,
    c: u32,
    tol: &Tolerances,
) -> Result<RealPointConfig, PencilError> {
    if r + 2 * c != 8 {
        return Err(PencilError::InvalidArity { r, c, expected: 8 });
    }
    if r == 0 {
        return Err(PencilError::NoRealPoint);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = String::from("no attempt made");
    for attempt in 1..=100u32 {
        let (real_points, conj_pairs) = draw_points(&mut rng, r, c);
        match RealPointConfig::from_parts(real_points, conj_pairs, seed) {
            Err(PencilError::NonGeneric { reason }) => {
                last = reason;
                continue;
            }
            Err(other) => return Err(other),
            Ok(mut config) => {
                config.certificate.attempts = attempt;
                if config.certificate.rank == 8 && config.certificate.sigma_ratio > tol.genericity
                {
                    return Ok(config);
                }
                last = format!(
                    "rank {} with singular-value ratio {:.3e}",
                    config.certificate.rank, config.certificate.sigma_ratio
                );
            }
        }
    }
    Err(PencilError::GenericityExhausted { attempts: 100, last })
}

/// Samples `count` pairwise-distinct real points; used by the line and conic
/// analogues. Deterministic in the seed.
pub fn sample_real_points(seed: u64, count: usize) -> Vec<[f64; 3]> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let points: Vec<[f64; 3]> = (0..count)
            .map(|_| {
                let (x, y) = draw_affine_disc(&mut rng);
                normalize_real([x, y, 1.0])
            })
            .collect();
        if conditions_distinct(&points, &[], 1e-3) {
            return points;
        }
    }
}
