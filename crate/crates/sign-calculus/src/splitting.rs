//! Enumeration of the codimension-one splittings of a disc class and the
//! cancellation bookkeeping over them.
//!
//! A k-marked disc in the zero-dimensional moduli problem can degenerate
//! into two discs with k1 + k2 = k and mu1 + mu2 = mu, glued at the i-th
//! marked point of the first. A component is only relevant when its own
//! moduli problem has non-negative expected dimension before and after
//! forgetting the gluing point, which pins mu_i into the window
//!
//!   k_i(n-1) + 2 - n  ≤  mu_i  ≤  k_i(n-1) + 1.
//!
//! The window has length n - 1, so at n = 2 or 3 it contains exactly one
//! even integer and the splitting is rigid; from n = 4 on there is slack,
//! and the cancellation congruence can fail. That failure is precisely why
//! the invariance theorem stays in low dimensions.

use crate::{cancellation_check, maslov_from_dimension, CountMode, SignError};

/// One splitting of a parent class: component sizes, Maslov indices, and the
/// attach index i (1-based marked point of the first component).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplittingDescriptor {
    pub k1: u32,
    pub k2: u32,
    pub mu1: i64,
    pub mu2: i64,
    pub i: u32,
    /// Both components' Maslov indices lie in their dimension windows.
    pub admissible: bool,
}

impl SplittingDescriptor {
    /// Whether both components could bound actual discs (mu_i ≥ 0); negative
    /// indices occur combinatorially in the windows for small k_i and n ≥ 4.
    pub fn is_geometric(&self) -> bool {
        self.mu1 >= 0 && self.mu2 >= 0
    }
}

/// Inclusive window [lo, hi] of Maslov indices available to a component with
/// k_i marked points in dimension n.
pub fn maslov_window(n: u32, k_i: u32) -> (i64, i64) {
    let n = i64::from(n);
    let k = i64::from(k_i);
    (k * (n - 1) + 2 - n, k * (n - 1) + 1)
}

/// Whether mu_i is an even integer inside the window for (n, k_i).
pub fn window_admissible(n: u32, k_i: u32, mu_i: i64) -> bool {
    let (lo, hi) = maslov_window(n, k_i);
    mu_i.rem_euclid(2) == 0 && lo <= mu_i && mu_i <= hi
}

/// All admissible splittings of the class determined by (n, k): every
/// (k1, k2, mu1, mu2) with k1 + k2 = k, mu1 + mu2 = mu, both mu_i even and
/// in their windows, fanned out over every attach index 1 ≤ i ≤ k1 + 1.
///
/// Errors when the parent class itself has no even Maslov index.
pub fn admissible_splittings(n: u32, k: u32) -> Result<Vec<SplittingDescriptor>, SignError> {
    if n == 0 {
        return Err(SignError::ZeroDimension);
    }
    let mu = maslov_from_dimension(n, k).ok_or(SignError::UndefinedMaslov { n, k })?;
    let mut out = Vec::new();
    for k1 in 0..=k {
        let k2 = k - k1;
        let (lo1, hi1) = maslov_window(n, k1);
        let mut mu1 = lo1 + lo1.rem_euclid(2); // round up to even
        while mu1 <= hi1 {
            let mu2 = mu - mu1;
            if window_admissible(n, k2, mu2) {
                for i in 1..=k1 + 1 {
                    out.push(SplittingDescriptor {
                        k1,
                        k2,
                        mu1,
                        mu2,
                        i,
                        admissible: true,
                    });
                }
            }
            mu1 += 2;
        }
    }
    Ok(out)
}

/// Side of a splitting whose cancellation congruence failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailingSide {
    Beta1,
    Beta2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CancellationFailure {
    pub k: u32,
    pub k1: u32,
    pub mu1: i64,
    pub k2: u32,
    pub mu2: i64,
    pub side: FailingSide,
}

/// Result of sweeping the cancellation criterion over all admissible
/// splittings up to k_max.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvarianceReport {
    pub mode: CountMode,
    pub n: u32,
    pub k_max: u32,
    /// Distinct (k1, mu1, k2, mu2) splittings examined (attach indices do
    /// not affect the congruence and are collapsed).
    pub splittings_checked: usize,
    pub failures: Vec<CancellationFailure>,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the cancellation congruence on every admissible splitting of every
/// class with defined Maslov index up to k_max, on both the second-component
/// side and (swapped) the first.
///
/// For (A, n=3) and (B, n=2) the failure list is provably empty; for n ≥ 4
/// failures exist and the report carries them.
pub fn theorem_invariance_check(mode: CountMode, n: u32, k_max: u32) -> InvarianceReport {
    let mut splittings_checked = 0usize;
    let mut failures = Vec::new();
    for k in 0..=k_max {
        let Ok(splittings) = admissible_splittings(n, k) else {
            continue; // classes with odd forced mu have no moduli problem
        };
        for s in splittings.into_iter().filter(|s| s.i == 1) {
            splittings_checked += 1;
            let beta2 = cancellation_check(mode, s.mu2, s.k2)
                .expect("enumerated mu2 is even");
            if !beta2 {
                failures.push(CancellationFailure {
                    k,
                    k1: s.k1,
                    mu1: s.mu1,
                    k2: s.k2,
                    mu2: s.mu2,
                    side: FailingSide::Beta2,
                });
            }
            let beta1 = cancellation_check(mode, s.mu1, s.k1)
                .expect("enumerated mu1 is even");
            if !beta1 {
                failures.push(CancellationFailure {
                    k,
                    k1: s.k1,
                    mu1: s.mu1,
                    k2: s.k2,
                    mu2: s.mu2,
                    side: FailingSide::Beta1,
                });
            }
        }
    }
    InvarianceReport {
        mode,
        n,
        k_max,
        splittings_checked,
        failures,
    }
}
