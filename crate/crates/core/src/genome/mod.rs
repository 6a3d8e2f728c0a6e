//! Circular signed genomes and distances between them.
//!
//! Regions are labelled `1..=n`; a negative label is a region read on the
//! opposite strand. Positions are 1-based in the public API.

mod breakpoint;
mod coxeter;
mod distance;
mod generators;
mod swap;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;

pub use breakpoint::{breakpoint_cycle_bound, breakpoint_cycles, linear_reversal_distance, MAX_LINEAR_REGIONS};
pub use coxeter::{affine_lengths_bfs, typeb_lengths_bfs, AffinePermutation};
pub use distance::{distance_bfs, terminus_orbit, Distance, MAX_BFS_REGIONS};
pub use generators::GeneratorSet;
pub use swap::{circular_swap_distance, swap_distance_fast};

/// Arrangement of signed regions around a circle, optionally with one region
/// marked as the replication terminus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CircularGenome {
    regions: Vec<i32>,
    terminus: Option<u32>,
}

impl TryFrom<String> for CircularGenome {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CircularGenome> for String {
    fn from(g: CircularGenome) -> Self {
        g.to_string()
    }
}

impl CircularGenome {
    pub fn new(regions: Vec<i32>, terminus: Option<u32>) -> Result<Self> {
        let n = regions.len();
        if n == 0 {
            return Err(Error::InvalidGenome("no regions".into()));
        }
        let mut seen = vec![false; n + 1];
        for &r in &regions {
            let m = r.unsigned_abs() as usize;
            if m == 0 || m > n || std::mem::replace(&mut seen[m], true) {
                return Err(Error::InvalidGenome(format!("labels must be 1..={n} up to sign, each once")));
            }
        }
        let mut g = Self { regions, terminus: None };
        g.set_terminus(terminus)?;
        Ok(g)
    }

    pub fn identity(n: usize) -> Self {
        Self { regions: (1..=n as i32).collect(), terminus: None }
    }

    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    pub fn regions(&self) -> &[i32] {
        &self.regions
    }

    /// Label of the terminus region.
    pub fn terminus(&self) -> Option<u32> {
        self.terminus
    }

    pub fn set_terminus(&mut self, label: Option<u32>) -> Result<()> {
        if let Some(t) = label {
            if t == 0 || t as usize > self.len() {
                return Err(Error::InvalidGenome(format!("no region {t} to mark as terminus")));
            }
        }
        self.terminus = label;
        Ok(())
    }

    pub fn with_terminus(mut self, label: u32) -> Self {
        self.set_terminus(Some(label)).expect("terminus label in range");
        self
    }

    /// 0-based position of the terminus region.
    pub fn terminus_position(&self) -> Option<usize> {
        let t = self.terminus? as i32;
        self.regions.iter().position(|r| r.abs() == t)
    }

    /// Reverses and negates the `len` regions starting at 0-based `start`,
    /// wrapping around the circle.
    pub(crate) fn invert_span(&self, start: usize, len: usize) -> Self {
        let n = self.len();
        let mut out = self.clone();
        for k in 0..len {
            out.regions[(start + k) % n] = -self.regions[(start + len - 1 - k) % n];
        }
        out
    }

    /// Signed inversion of positions `i..=j` (1-based), read forwards around
    /// the circle, so `j < i` wraps.
    pub fn inversion(&self, i: usize, j: usize) -> Result<Self> {
        let n = self.len();
        for p in [i, j] {
            if p == 0 || p > n {
                return Err(Error::PositionOutOfRange { pos: p, len: n });
            }
        }
        let len = (j + n - i) % n + 1;
        Ok(self.invert_span(i - 1, len))
    }

    /// Swaps the regions at 0-based positions `p` and `p + 1` (mod n).
    pub(crate) fn swap_adjacent(&self, p: usize) -> Self {
        let n = self.len();
        let mut out = self.clone();
        out.regions.swap(p, (p + 1) % n);
        out
    }

    /// Rotated left by `r` places.
    pub fn rotated(&self, r: usize) -> Self {
        let mut out = self.clone();
        out.regions.rotate_left(r % self.len());
        out
    }

    /// Read from the other strand: order reversed and every sign flipped.
    pub fn reflected(&self) -> Self {
        let mut out = self.clone();
        out.regions = self.regions.iter().rev().map(|r| -r).collect();
        out
    }

    pub fn unsigned(&self) -> Self {
        let mut out = self.clone();
        out.regions.iter_mut().for_each(|r| *r = r.abs());
        out
    }

    fn min_variant(&self, reflect: impl Fn(&Self) -> Self) -> Self {
        // compare by magnitude first so the identity is its own canonical form
        let key = |g: &Self| g.regions.iter().map(|&r| (r.abs(), r < 0)).collect::<Vec<_>>();
        let mirrored = reflect(self);
        (0..self.len()).flat_map(|r| [self.rotated(r), mirrored.rotated(r)]).min_by_key(key).expect("nonempty genome")
    }

    /// Least representative over all rotations and reflections, comparing
    /// regions by magnitude and then placing the positive sign first.
    pub fn canonical(&self) -> Self {
        self.min_variant(Self::reflected)
    }

    /// Canonical form with signs dropped and reflection as plain reversal.
    pub fn unsigned_canonical(&self) -> Self {
        self.unsigned().min_variant(|g| {
            let mut out = g.clone();
            out.regions.reverse();
            out
        })
    }

    pub fn is_equivalent(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// The circle cut before the first region, as a signed permutation.
    pub fn linear(&self) -> SignedPermutation {
        SignedPermutation::new(self.regions.clone()).expect("validated labels")
    }

    pub fn from_linear(w: &SignedPermutation) -> Self {
        Self { regions: w.images().to_vec(), terminus: None }
    }
}

impl fmt::Display for CircularGenome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, &r) in self.regions.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
            if self.terminus == Some(r.unsigned_abs()) {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl FromStr for CircularGenome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut regions = Vec::new();
        let mut terminus = None;
        for tok in s.trim().split(',') {
            let tok = tok.trim();
            let (body, marked) = match tok.strip_suffix('*') {
                Some(b) => (b.trim(), true),
                None => (tok, false),
            };
            let r: i32 = body.parse().map_err(|_| Error::Parse(format!("bad region `{tok}`")))?;
            if marked && terminus.replace(r.unsigned_abs()).is_some() {
                return Err(Error::Parse("more than one terminus".into()));
            }
            regions.push(r);
        }
        Self::new(regions, terminus)
    }
}

/// Uniform random arrangement of `n` regions, signs random when `signed`.
pub fn random_genome<R: Rng + ?Sized>(rng: &mut R, n: usize, signed: bool) -> CircularGenome {
    let mut regions: Vec<i32> = (1..=n as i32).collect();
    regions.shuffle(rng);
    if signed {
        for r in &mut regions {
            if rng.gen_bool(0.5) {
                *r = -*r;
            }
        }
    }
    CircularGenome { regions, terminus: None }
}

/// Number of unsigned circular arrangements of `n` regions up to rotation
/// and reversal, by enumeration.
pub fn unsigned_class_count(n: usize) -> usize {
    fn perms(rest: &mut Vec<i32>, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut all = Vec::new();
    perms(&mut (1..=n as i32).collect(), &mut Vec::new(), &mut all);
    let classes: HashSet<CircularGenome> =
        all.into_iter().map(|regions| CircularGenome { regions, terminus: None }.unsigned_canonical()).collect();
    classes.len()
}
