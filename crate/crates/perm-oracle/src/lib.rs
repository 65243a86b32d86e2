//! Brute-force permutation signs by inversion counting.
//!
//! This crate is the ground truth for every closed-form sign exponent used
//! elsewhere in the workspace. Permutations are held in one-line notation and
//! their sign is always computed by counting inversions; the closed forms
//! ((-1)^{(k-1)(k-2)/2} and friends) appear only in tests, as assertions
//! against this engine, never as implementations.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("one-line notation {0:?} is not a bijection on 0..{len}", len = .0.len())]
    NotBijective(Vec<usize>),
    #[error("permutation size must be at least 1")]
    Empty,
    #[error("attach index {i} outside 1..={max}")]
    AttachIndex { i: usize, max: usize },
    #[error("component sizes {k1} + {k2} do not sum to {k}")]
    SizeMismatch { k: usize, k1: usize, k2: usize },
    #[error("cannot compose permutations of sizes {0} and {1}")]
    ComposeMismatch(usize, usize),
    #[error("block [{start}, {start}+{len}) does not fit in 0..{k}")]
    BlockOutOfRange { k: usize, start: usize, len: usize },
}

/// A permutation of {0, .., k-1} in one-line notation: `map[j]` is the image
/// of position `j`. Signs only ever depend on the inversion count, so the
/// direction of reading (function vs. rearranged word) does not matter here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn new(map: Vec<usize>) -> Result<Self, PermError> {
        if map.is_empty() {
            return Err(PermError::Empty);
        }
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if v >= map.len() || seen[v] {
                return Err(PermError::NotBijective(map));
            }
            seen[v] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(k: usize) -> Result<Self, PermError> {
        Self::new((0..k).collect())
    }

    /// Left cyclic rotation: position `j` receives the element originally at
    /// `(j + shift) mod k`.
    pub fn rotation(k: usize, shift: usize) -> Result<Self, PermError> {
        if k == 0 {
            return Err(PermError::Empty);
        }
        Self::new((0..k).map(|j| (j + shift) % k).collect())
    }

    /// Reverses the block of positions `[start, start+len)`, fixing the rest.
    pub fn block_reversal(k: usize, start: usize, len: usize) -> Result<Self, PermError> {
        if start + len > k {
            return Err(PermError::BlockOutOfRange { k, start, len });
        }
        let mut map: Vec<usize> = (0..k).collect();
        map[start..start + len].reverse();
        Self::new(map)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }

    /// (self ∘ other)(j) = self(other(j)).
    pub fn compose(&self, other: &Permutation) -> Result<Self, PermError> {
        if self.len() != other.len() {
            return Err(PermError::ComposeMismatch(self.len(), other.len()));
        }
        Self::new(other.map.iter().map(|&j| self.map[j]).collect())
    }

    /// Number of pairs j < l with map[j] > map[l]. Quadratic; sizes here
    /// never exceed a few dozen.
    pub fn inversions(&self) -> usize {
        let m = &self.map;
        let mut count = 0;
        for j in 0..m.len() {
            for l in j + 1..m.len() {
                if m[j] > m[l] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn sign(&self) -> i8 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (j, v) in self.map.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Sign of a permutation given in one-line notation.
pub fn perm_sign(map: Vec<usize>) -> Result<i8, PermError> {
    Ok(Permutation::new(map)?.sign())
}

/// Sign of the order reversal of a k-tuple that fixes the first entry:
/// one-line (0, k-1, k-2, .., 1). This is how conjugation acts on a cyclic
/// ordering of k boundary points with one of them pinned.
pub fn reversal_sign(k: usize) -> Result<i8, PermError> {
    if k == 0 {
        return Err(PermError::Empty);
    }
    let map: Vec<usize> = std::iter::once(0).chain((1..k).rev()).collect();
    Ok(Permutation::new(map)?.sign())
}

/// The two explicit reorderings that appear when a k-marked disc splits into
/// a (k1+1)-marked and a (k2+1)-marked component glued at the i-th marked
/// point of the first, together with their combined sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitReordering {
    /// Rotation of the full k-tuple bringing the attach point to the front.
    pub boundary_rotation: Permutation,
    /// Rotation of the (k1+1)-tuple restoring the first component's order.
    pub component_rotation: Permutation,
    pub sign: i8,
}

/// Sign of the reordering of marked points induced by a splitting.
///
/// Both contributions are cyclic rotations by i-1 (of the k boundary points,
/// and of the k1+1 points remaining on the first component); the product of
/// their inversion signs is the sign of returning to the original ordering.
pub fn split_reordering_sign(
    k: usize,
    k1: usize,
    k2: usize,
    i: usize,
) -> Result<SplitReordering, PermError> {
    if k1 + k2 != k {
        return Err(PermError::SizeMismatch { k, k1, k2 });
    }
    if k == 0 {
        return Err(PermError::Empty);
    }
    if i < 1 || i > k1 + 1 {
        return Err(PermError::AttachIndex { i, max: k1 + 1 });
    }
    let boundary_rotation = Permutation::rotation(k, i - 1)?;
    let component_rotation = Permutation::rotation(k1 + 1, i - 1)?;
    let sign = boundary_rotation.sign() * component_rotation.sign();
    Ok(SplitReordering {
        boundary_rotation,
        component_rotation,
        sign,
    })
}

/// σ and σ₂ for a splitting: σ reverses, inside the full k-tuple, the block
/// of k2 points absorbed by the second component; σ₂ acts on that component's
/// own (k2+1)-tuple (∗, i, .., i+k2-1), fixing the glued point ∗ and
/// reversing the k2 marked points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaPair {
    /// σ with the absorbed block read 1-based, i.e. positions [i-1, i-1+k2)
    /// of the 0-based tuple. Constructible for every valid attach index.
    pub sigma: Permutation,
    /// σ under the other reading of the source (block [i, i+k2)), when that
    /// block fits. The two readings shift the same-length block by one.
    pub sigma_alt: Option<Permutation>,
    pub sigma_sign: i8,
    /// Whether the two readings' signs agree; None when only one fits.
    /// Disagreement is reported upward, never resolved here.
    pub readings_agree: Option<bool>,
    pub sigma2: Permutation,
    pub sigma2_sign: i8,
}

pub fn sigma_pair_signs(
    k: usize,
    k1: usize,
    k2: usize,
    i: usize,
) -> Result<SigmaPair, PermError> {
    if k1 + k2 != k {
        return Err(PermError::SizeMismatch { k, k1, k2 });
    }
    if k == 0 {
        return Err(PermError::Empty);
    }
    if i < 1 || i > k1 + 1 {
        return Err(PermError::AttachIndex { i, max: k1 + 1 });
    }
    let sigma = Permutation::block_reversal(k, i - 1, k2)?;
    let sigma_alt = if i + k2 <= k {
        Some(Permutation::block_reversal(k, i, k2)?)
    } else {
        None
    };
    let sigma_sign = sigma.sign();
    let readings_agree = sigma_alt.as_ref().map(|alt| alt.sign() == sigma_sign);
    let sigma2 = Permutation::block_reversal(k2 + 1, 1, k2)?;
    let sigma2_sign = sigma2.sign();
    Ok(SigmaPair {
        sigma,
        sigma_alt,
        sigma_sign,
        readings_agree,
        sigma2,
        sigma2_sign,
    })
}
