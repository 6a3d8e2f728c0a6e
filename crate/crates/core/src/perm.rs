//! Permutations and signed permutations in one-line notation.
//!
//! Products compose as functions, `(u * v)(i) = u(v(i))`. Applying a
//! generator on the right acts on positions, which is how both braid
//! letters and genome inversions are read.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Element of the hyperoctahedral group: images of `1..=n`, each a nonzero
/// integer, with magnitudes forming a permutation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i32>", into = "Vec<i32>")]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            let m = x.unsigned_abs() as usize;
            if x == 0 || m > n || seen[m] {
                return Err(Error::InvalidGenome(format!("{images:?} is not a signed permutation")));
            }
            seen[m] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as i32).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// Image of a signed point, `w(-i) = -w(i)`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.len(), rhs.len(), "signed permutations of different degree");
        Self { images: rhs.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let target = x.unsigned_abs() as usize - 1;
            images[target] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }

    /// Right-multiply by the transposition `s_i = (i i+1)`, 1-based.
    pub fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Right-multiply by a sign change at position `i`, 1-based.
    pub fn negate_position(&mut self, i: usize) {
        self.images[i - 1] = -self.images[i - 1];
    }

    /// Forget signs.
    pub fn unsigned(&self) -> Permutation {
        Permutation { images: self.images.iter().map(|x| x.unsigned_abs() as usize).collect() }
    }

    /// Pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count()).sum()
    }

    pub fn negatives(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }

    /// Pairs `i < j` with `w(i) + w(j) < 0`.
    pub fn negative_sum_pairs(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|i| (i + 1..w.len()).filter(|&j| w[i] + w[j] < 0).count()).sum()
    }

    /// Coxeter length over `{s_1..s_{n-1}, t}` where `t` negates position 1.
    pub fn type_b_length(&self) -> usize {
        self.inversions() + self.negatives() + self.negative_sum_pairs()
    }
}

impl TryFrom<Vec<i32>> for SignedPermutation {
    type Error = Error;
    fn try_from(v: Vec<i32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SignedPermutation> for Vec<i32> {
    fn from(p: SignedPermutation) -> Vec<i32> {
        p.images
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// An ordinary permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.len(), rhs.len(), "permutations of different degree");
        Self { images: rhs.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Self { images }
    }

    pub fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Disjoint cycles, each starting at its smallest point; fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn signed(&self) -> SignedPermutation {
        SignedPermutation { images: self.images.iter().map(|&x| x as i32).collect() }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}
