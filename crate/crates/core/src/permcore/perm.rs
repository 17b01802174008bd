//! Permutations of `{0, .., degree-1}` stored as dense image arrays.
//!
//! Internally points are 0-based. Everything that crosses a serialization
//! boundary uses 1-based image arrays, e.g. `[2, 3, 1]` for the 3-cycle
//! sending 1 to 2.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}`.
///
/// The derived ordering is lexicographic on the image sequence, which is the
/// canonical order used for every element listing in the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Builds a permutation from 0-based images, rejecting non-bijections.
    pub fn new(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            let x = x as usize;
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} of point {} is out of range for degree {}",
                    x + 1,
                    i + 1,
                    n
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {} appears more than once",
                    x + 1
                )));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from the external 1-based image notation.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut zero = Vec::with_capacity(images.len());
        for (i, &x) in images.iter().enumerate() {
            if x == 0 {
                return Err(Error::InvalidPermutation(format!(
                    "image of point {} is 0; images are 1-based",
                    i + 1
                )));
            }
            zero.push((x - 1) as u32);
        }
        Permutation::new(zero)
    }

    /// Builds a permutation from a closure over 0-based points.
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Result<Self> {
        Permutation::new((0..degree).map(|i| f(i) as u32).collect())
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn to_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self ∘ other`, i.e. the map `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// `self ∘ h ∘ self⁻¹`, computed without forming the inverse.
    #[inline]
    pub fn conjugate(&self, h: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.images.len()];
        for (i, &hi) in h.images.iter().enumerate() {
            out[self.images[i] as usize] = self.images[hi as usize];
        }
        Permutation { images: out }
    }

    /// Direct sum: `self` on the first block of points, `other` shifted onto
    /// the following block.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.images.len() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images.len() == other.images.len()
            && self
                .images
                .iter()
                .zip(&other.images)
                .all(|(&a, &b)| self.images[b as usize] == other.images[a as usize])
    }

    pub fn fixes(&self, point: usize) -> bool {
        self.images[point] as usize == point
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: other.degree(),
            });
        }
        Ok(())
    }

    /// Disjoint cycle notation with 1-based points, `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.fixes(start) {
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(',');
                }
                first = false;
                out.push_str(&(x + 1).to_string());
                x = self.apply(x);
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_one_based())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_based().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_one_based(&images).map_err(serde::de::Error::custom)
    }
}
