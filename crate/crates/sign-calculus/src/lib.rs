//! Exact parity calculus for signed counts of conjugation-invariant
//! holomorphic discs.
//!
//! Everything in this crate is integer arithmetic mod 2 or mod 4; no floats.
//! The central inputs are the dimension of the Lagrangian `n`, the Maslov
//! index `mu` of a disc class (always even here, since the Lagrangian is
//! orientable), and the number of boundary marked points `k`. Two counting
//! conventions appear throughout:
//!
//! * mode A ignores the cyclic ordering of the boundary marked points;
//! * mode B twists by it, which costs an extra reversal sign
//!   (-1)^{(k-2)(k-1)/2} whenever conjugation reverses the cyclic order.
//!
//! The companion crate `perm-oracle` re-derives every closed-form exponent
//! used here by brute-force inversion counting; the agreement tests live in
//! `tests/oracle_agreement.rs`.

use std::fmt;

use thiserror::Error;

pub mod splitting;
pub mod table;

pub use splitting::{
    admissible_splittings, maslov_window, theorem_invariance_check, window_admissible,
    CancellationFailure, FailingSide, InvarianceReport, SplittingDescriptor,
};
pub use table::{ab_table_entry, derived_entry, reference_table_entry};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SignError {
    #[error("Maslov index must be even, got {0}")]
    OddMaslov(i64),
    #[error("no even Maslov index satisfies the dimension condition for n={n}, k={k}")]
    UndefinedMaslov { n: u32, k: u32 },
    #[error("Lagrangian dimension must be positive")]
    ZeroDimension,
    #[error("real configurations need at least one real point")]
    NoRealPoint,
    #[error("expected {expected} pseudo-cycle degrees, got {got}")]
    DegreeArity { expected: usize, got: usize },
}

/// A comparison sign, or Undefined for the (n, k) classes where no even
/// Maslov index solves the dimension condition (the table's X cells).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignValue {
    Plus,
    Minus,
    Undefined,
}

impl SignValue {
    /// +1 for an even exponent, -1 for odd.
    pub fn from_exponent(e: i64) -> SignValue {
        if e.rem_euclid(2) == 0 {
            SignValue::Plus
        } else {
            SignValue::Minus
        }
    }

    pub fn as_int(self) -> Option<i8> {
        match self {
            SignValue::Plus => Some(1),
            SignValue::Minus => Some(-1),
            SignValue::Undefined => None,
        }
    }

    pub fn is_defined(self) -> bool {
        self != SignValue::Undefined
    }
}

impl fmt::Display for SignValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignValue::Plus => write!(f, "1"),
            SignValue::Minus => write!(f, "-1"),
            SignValue::Undefined => write!(f, "X"),
        }
    }
}

/// Which signed count is being compared with its conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMode {
    /// Count classes of discs regardless of the cyclic order of boundary
    /// marked points.
    A,
    /// Weight each disc by the cyclic order class of its boundary marked
    /// points; conjugation reverses that order.
    B,
}

impl fmt::Display for CountMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountMode::A => write!(f, "A"),
            CountMode::B => write!(f, "B"),
        }
    }
}

fn require_even(mu: i64) -> Result<(), SignError> {
    if mu.rem_euclid(2) != 0 {
        Err(SignError::OddMaslov(mu))
    } else {
        Ok(())
    }
}

/// Solves the expected-dimension condition n + mu - 3 + k(1-n) = 0 for mu.
///
/// Returns None when the solution mu = k(n-1) + 3 - n is odd, which is the
/// source of every Undefined sign. The value can be negative for small k and
/// large n; such classes are combinatorially fine but bound no actual disc.
pub fn maslov_from_dimension(n: u32, k: u32) -> Option<i64> {
    let n = i64::from(n);
    let k = i64::from(k);
    let mu = k * (n - 1) + 3 - n;
    (mu.rem_euclid(2) == 0).then_some(mu)
}

/// Orientation sign of conjugation on the k-marked moduli space of a disc of
/// Maslov index mu: +1 exactly when mu + 2k ≡ 0 (mod 4).
pub fn conjugation_sign(mu: i64, k: u32) -> Result<SignValue, SignError> {
    require_even(mu)?;
    let e = mu + 2 * i64::from(k);
    Ok(if e.rem_euclid(4) == 0 {
        SignValue::Plus
    } else {
        SignValue::Minus
    })
}

/// Parity of the sign picked up when a cyclic ordering of k boundary points
/// is mapped to the completely reversed order: (k-2)(k-1)/2 mod 2.
pub fn cyclic_reversal_exponent(k: u32) -> u8 {
    let k = i64::from(k);
    // (k-2)(k-1) is a product of consecutive integers, hence even.
    (((k - 2) * (k - 1)) / 2).rem_euclid(2) as u8
}

/// Sign relating a count to its conjugated count: +1 iff mu/2 + k (mode A),
/// respectively mu/2 + k + (k-2)(k-1)/2 (mode B), is even.
pub fn count_comparison_sign(mode: CountMode, mu: i64, k: u32) -> Result<SignValue, SignError> {
    require_even(mu)?;
    let mut e = mu / 2 + i64::from(k);
    if mode == CountMode::B {
        e += i64::from(cyclic_reversal_exponent(k));
    }
    Ok(SignValue::from_exponent(e))
}

/// Orientation sign ε of the boundary stratum where a disc with k1 + k2
/// marked points splits into a (k1+1)- and a (k2+1)-marked component glued
/// at the i-th point of the first:
///
///   ε = (k1-1)(k2-1) + n + k1 + (i-1)(k2+1)   (mod 2).
///
/// Only the last term depends on the attach index; at i = 1 it vanishes.
pub fn boundary_epsilon(k1: u32, k2: u32, i: u32, n: u32) -> u8 {
    let (k1, k2, i, n) = (i64::from(k1), i64::from(k2), i64::from(i), i64::from(n));
    let e = (k1 - 1) * (k2 - 1) + n + k1 + (i - 1) * (k2 + 1);
    e.rem_euclid(2) as u8
}

/// Whether a boundary stratum cancels against its conjugate partner: the two
/// carry opposite orientations exactly when
///
///   mu2 + 2(k2+1)              ≡ 2 (mod 4)   in mode A,
///   mu2 + 2(k2+1) + k2(k2-1)   ≡ 2 (mod 4)   in mode B.
pub fn cancellation_check(mode: CountMode, mu2: i64, k2: u32) -> Result<bool, SignError> {
    require_even(mu2)?;
    let k2 = i64::from(k2);
    let mut e = mu2 + 2 * (k2 + 1);
    if mode == CountMode::B {
        e += k2 * (k2 - 1);
    }
    Ok(e.rem_euclid(4) == 2)
}

/// Conjugation sign for a real configuration of marked points: r real points
/// on the boundary and c conjugate pairs in the interior. The interior pairs
/// contribute 2c (they are swapped) plus 2nc (each swap moves a copy of the
/// ambient manifold of dimension 2n); mode B adds the boundary reversal
/// exponent doubled, (r-2)(r-1), since only the r real points keep a cyclic
/// order.
pub fn real_config_conjugation_sign(
    mode: CountMode,
    mu: i64,
    c: u32,
    r: u32,
    n: u32,
) -> Result<SignValue, SignError> {
    require_even(mu)?;
    let (c, r, n) = (i64::from(c), i64::from(r), i64::from(n));
    let mut e = mu + 2 * c + 2 * r + 2 * n * c;
    if mode == CountMode::B {
        e += (r - 2) * (r - 1);
    }
    Ok(if e.rem_euclid(4) == 0 {
        SignValue::Plus
    } else {
        SignValue::Minus
    })
}

/// Cancellation criterion for a splitting component carrying c_i interior
/// pairs and r_i boundary real points. With c_i = 0 this reduces to
/// `cancellation_check(mode, mu_i, r_i)`.
pub fn real_config_cancellation_check(
    mode: CountMode,
    n: u32,
    mu_i: i64,
    c_i: u32,
    r_i: u32,
) -> Result<bool, SignError> {
    require_even(mu_i)?;
    let (c, r, n) = (i64::from(c_i), i64::from(r_i), i64::from(n));
    let mut e = mu_i + 2 * c + 2 * (r + 1) + 2 * n * c;
    if mode == CountMode::B {
        e += r * (r - 1);
    }
    Ok(e.rem_euclid(4) == 2)
}

/// Disc class data, optionally refined by a real configuration of its marked
/// points (r real boundary points and c interior conjugate pairs).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuliDescriptor {
    n: u32,
    mu: i64,
    k: u32,
    real_config: Option<(u32, u32)>, // (c, r) with k = r + 2c
}

impl ModuliDescriptor {
    pub fn new(n: u32, mu: i64, k: u32) -> Result<Self, SignError> {
        if n == 0 {
            return Err(SignError::ZeroDimension);
        }
        require_even(mu)?;
        Ok(ModuliDescriptor {
            n,
            mu,
            k,
            real_config: None,
        })
    }

    /// Descriptor whose k = r + 2c marked points form a real configuration.
    /// At least one real point is required.
    pub fn with_real_config(n: u32, mu: i64, c: u32, r: u32) -> Result<Self, SignError> {
        if r == 0 {
            return Err(SignError::NoRealPoint);
        }
        let mut d = Self::new(n, mu, r + 2 * c)?;
        d.real_config = Some((c, r));
        Ok(d)
    }

    /// Descriptor with mu solved from the dimension condition.
    pub fn from_dimension(n: u32, k: u32) -> Result<Self, SignError> {
        if n == 0 {
            return Err(SignError::ZeroDimension);
        }
        let mu = maslov_from_dimension(n, k).ok_or(SignError::UndefinedMaslov { n, k })?;
        Self::new(n, mu, k)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn real_config(&self) -> Option<(u32, u32)> {
        self.real_config
    }

    /// Negative Maslov classes are admitted by the mod-4 combinatorics (the
    /// table rows with n ≡ 0, 1 need them for representative independence)
    /// but bound no actual disc.
    pub fn is_geometric(&self) -> bool {
        self.mu >= 0
    }

    /// Conjugation sign of this descriptor, using the real-configuration
    /// rule when a configuration is attached.
    pub fn conjugation_sign(&self, mode: CountMode) -> SignValue {
        let result = match self.real_config {
            Some((c, r)) => real_config_conjugation_sign(mode, self.mu, c, r, self.n),
            None => count_comparison_sign(mode, self.mu, self.k),
        };
        result.expect("descriptor mu is even by construction")
    }
}

/// Data for the open-closed dimension count: a disc with k boundary marked
/// points meeting l fixed interior pseudo-cycles of the listed degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenClosedProblem {
    pub n: u32,
    pub mu: i64,
    pub k: u32,
    pub l: u32,
    pub deg_q: Vec<u32>,
    pub minimal_chern: u32,
}

impl OpenClosedProblem {
    pub fn new(
        n: u32,
        mu: i64,
        k: u32,
        deg_q: Vec<u32>,
        minimal_chern: u32,
    ) -> Result<Self, SignError> {
        if n == 0 {
            return Err(SignError::ZeroDimension);
        }
        require_even(mu)?;
        let l = deg_q.len() as u32;
        if l == 0 {
            return Err(SignError::DegreeArity {
                expected: 1,
                got: 0,
            });
        }
        Ok(OpenClosedProblem {
            n,
            mu,
            k,
            l,
            deg_q,
            minimal_chern,
        })
    }

    /// The correction term: -1 when a single interior constraint is fixed
    /// (one marked point can be pinned), 0 for two or more.
    pub fn delta(&self) -> i64 {
        if self.l == 1 {
            -1
        } else {
            0
        }
    }
}

/// Whether the open-closed moduli problem is zero-dimensional:
/// n + mu + k - kn - Σ deg Q_j + δ = 0.
pub fn open_closed_dimension_check(p: &OpenClosedProblem) -> bool {
    let n = i64::from(p.n);
    let k = i64::from(p.k);
    let deg_sum: i64 = p.deg_q.iter().map(|&d| i64::from(d)).sum();
    n + p.mu + k - k * n - deg_sum + p.delta() == 0
}

/// Whether l fixed interior marked points are allowed: l ≤ min((mu-2)/2, MC).
pub fn open_closed_marked_point_bound(l: u32, mu: i64, minimal_chern: u32) -> bool {
    let bound = ((mu - 2).div_euclid(2)).min(i64::from(minimal_chern));
    i64::from(l) <= bound
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maslov_solutions() {
        assert_eq!(maslov_from_dimension(3, 2), Some(4));
        assert_eq!(maslov_from_dimension(2, 3), Some(4));
        assert_eq!(maslov_from_dimension(2, 2), None); // mu = 3 is odd
        assert_eq!(maslov_from_dimension(1, 7), Some(2)); // mu = 2 for every k at n = 1
        assert_eq!(maslov_from_dimension(5, 0), Some(-2)); // negative, non-geometric
    }

    #[test]
    fn conjugation_sign_small_maslov() {
        assert_eq!(conjugation_sign(2, 1), Ok(SignValue::Plus)); // 2 + 2 = 4
        assert_eq!(conjugation_sign(2, 2), Ok(SignValue::Minus)); // 2 + 4 = 6
        assert_eq!(conjugation_sign(0, 0), Ok(SignValue::Plus));
        assert_eq!(conjugation_sign(3, 1), Err(SignError::OddMaslov(3)));
        assert_eq!(conjugation_sign(-2, 0), Ok(SignValue::Minus)); // -2 ≡ 2 mod 4
    }

    #[test]
    fn reversal_exponent_values() {
        assert_eq!(cyclic_reversal_exponent(1), 0);
        assert_eq!(cyclic_reversal_exponent(3), 1);
        assert_eq!(cyclic_reversal_exponent(5), 0);
        // k = 0: (-2)(-1)/2 = 1.
        assert_eq!(cyclic_reversal_exponent(0), 1);
    }

    #[test]
    fn comparison_signs() {
        assert_eq!(count_comparison_sign(CountMode::A, 4, 2), Ok(SignValue::Plus));
        assert_eq!(count_comparison_sign(CountMode::B, 4, 3), Ok(SignValue::Plus));
        assert_eq!(count_comparison_sign(CountMode::A, 4, 3), Ok(SignValue::Minus));
        assert!(count_comparison_sign(CountMode::A, 5, 0).is_err());
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(boundary_epsilon(2, 1, 1, 2), 0); // 0 + 2 + 2 + 0
        assert_eq!(boundary_epsilon(1, 1, 1, 3), 0); // 0 + 3 + 1 + 0
    }

    #[test]
    fn epsilon_at_i_one_drops_attach_term() {
        for k1 in 0..6 {
            for k2 in 0..6 {
                for n in 1..6 {
                    let base = ((i64::from(k1) - 1) * (i64::from(k2) - 1)
                        + i64::from(n)
                        + i64::from(k1))
                    .rem_euclid(2) as u8;
                    assert_eq!(boundary_epsilon(k1, k2, 1, n), base);
                }
            }
        }
    }

    #[test]
    fn cancellation_examples() {
        assert_eq!(cancellation_check(CountMode::A, 4, 2), Ok(true)); // 4 + 6 ≡ 2
        assert_eq!(cancellation_check(CountMode::B, 2, 1), Ok(true)); // 2 + 4 + 0 ≡ 2
        assert_eq!(cancellation_check(CountMode::A, 2, 1), Ok(true)); // 2 + 4 ≡ 2
        assert_eq!(cancellation_check(CountMode::A, 4, 1), Ok(false)); // 4 + 4 ≡ 0
        assert!(cancellation_check(CountMode::A, 1, 0).is_err());
    }

    #[test]
    fn real_config_signs() {
        // c = 0, r = 1 reduces to the plain conjugation parity at k = 1.
        assert_eq!(
            real_config_conjugation_sign(CountMode::A, 2, 0, 1, 3),
            Ok(SignValue::Plus)
        );
        // n = 2, B: mu = k + 1 with k = r + 2c gives r^2 + 3 mod 4, zero for
        // odd r.
        for r in [1u32, 3, 5, 7] {
            for c in 0..4u32 {
                let k = r + 2 * c;
                let mu = i64::from(k) + 1;
                assert_eq!(
                    real_config_conjugation_sign(CountMode::B, mu, c, r, 2),
                    Ok(SignValue::Plus),
                    "r={r} c={c}"
                );
            }
        }
    }

    #[test]
    fn real_config_cancellation_reduces_at_c_zero() {
        for mode in [CountMode::A, CountMode::B] {
            for n in 1..6 {
                for r in 0..8 {
                    for mu in (-6..10).step_by(2) {
                        assert_eq!(
                            real_config_cancellation_check(mode, n, mu, 0, r).unwrap(),
                            cancellation_check(mode, mu, r).unwrap(),
                            "mode={mode} n={n} mu={mu} r={r}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn descriptor_validation() {
        assert!(ModuliDescriptor::new(0, 2, 1).is_err());
        assert!(ModuliDescriptor::new(3, 3, 1).is_err());
        assert!(ModuliDescriptor::with_real_config(3, 2, 1, 0).is_err());
        let d = ModuliDescriptor::with_real_config(3, 6, 1, 1).unwrap();
        assert_eq!(d.k(), 3);
        assert!(d.is_geometric());
        let neg = ModuliDescriptor::from_dimension(5, 0).unwrap();
        assert_eq!(neg.mu(), -2);
        assert!(!neg.is_geometric());
        assert_eq!(
            ModuliDescriptor::from_dimension(2, 2),
            Err(SignError::UndefinedMaslov { n: 2, k: 2 })
        );
    }

    #[test]
    fn open_closed_examples() {
        let p = OpenClosedProblem::new(3, 4, 2, vec![2], 5).unwrap();
        assert!(open_closed_dimension_check(&p)); // 3+4+2-6-2-1 = 0
        let p2 = OpenClosedProblem::new(3, 4, 2, vec![1, 1], 5).unwrap();
        assert!(!open_closed_dimension_check(&p2)); // 3+4+2-6-2-0 = 1
        assert!(OpenClosedProblem::new(2, 3, 1, vec![1], 1).is_err());

        assert!(open_closed_marked_point_bound(1, 4, 1)); // min(1, 1) = 1
        assert!(!open_closed_marked_point_bound(2, 4, 3)); // min(1, 3) = 1
        assert!(!open_closed_marked_point_bound(1, 2, 5)); // (2-2)/2 = 0
    }
}
