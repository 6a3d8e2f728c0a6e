use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;

/// Length of every element of the type-B group on `n` letters, found by
/// breadth-first search over `s_1..s_(n-1)` and `t` (sign change of the
/// first position).
pub fn typeb_lengths_bfs(n: usize) -> HashMap<SignedPermutation, usize> {
    let id = SignedPermutation::identity(n);
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut frontier = vec![id];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for w in &frontier {
            let mut moves = Vec::with_capacity(n);
            if n > 0 {
                let mut t = w.clone();
                t.negate_position(1);
                moves.push(t);
            }
            for i in 1..n {
                let mut s = w.clone();
                s.swap_positions(i);
                moves.push(s);
            }
            for m in moves {
                if !dist.contains_key(&m) {
                    dist.insert(m.clone(), d);
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// Affine permutation in window notation `[w(1), ..., w(n)]`, extended to
/// all integers by `w(i + n) = w(i) + n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl TryFrom<Vec<i64>> for AffinePermutation {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<AffinePermutation> for Vec<i64> {
    fn from(w: AffinePermutation) -> Self {
        w.window
    }
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::InvalidWindow("empty window".into()));
        }
        let mut residues: Vec<i64> = window.iter().map(|w| w.mod_floor(&n)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() as i64 != n {
            return Err(Error::InvalidWindow("entries must be distinct modulo n".into()));
        }
        if window.iter().sum::<i64>() != n * (n + 1) / 2 {
            return Err(Error::InvalidWindow(format!("entries must sum to {}", n * (n + 1) / 2)));
        }
        Ok(Self { window })
    }

    pub fn identity(n: usize) -> Self {
        Self { window: (1..=n as i64).collect() }
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    /// `w(i)` for any integer `i`.
    pub fn apply(&self, i: i64) -> i64 {
        let n = self.window.len() as i64;
        let (q, r) = (i - 1).div_mod_floor(&n);
        self.window[r as usize] + q * n
    }

    /// Right multiplication by `s_i`, `0 <= i < n`; `s_0` exchanges the
    /// values at positions `0` and `1` of the integer line.
    pub fn apply_generator(&self, i: usize) -> Self {
        let n = self.window.len();
        let mut w = self.window.clone();
        if i == 0 {
            let (first, last) = (w[0], w[n - 1]);
            w[0] = last - n as i64;
            w[n - 1] = first + n as i64;
        } else {
            w.swap(i - 1, i);
        }
        Self { window: w }
    }

    /// Coxeter length by the inversion-count formula
    /// `sum_{i<j} |floor((w(j) - w(i)) / n)|`.
    pub fn length(&self) -> usize {
        let n = self.window.len() as i64;
        let mut total = 0;
        for i in 0..self.window.len() {
            for j in i + 1..self.window.len() {
                total += Integer::div_floor(&(self.window[j] - self.window[i]), &n).unsigned_abs() as usize;
            }
        }
        total
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for AffinePermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let window = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad window `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(window)
    }
}

/// Every affine permutation of length at most `max_len` on `n >= 2`
/// letters, with its length from breadth-first search over `s_0..s_(n-1)`.
pub fn affine_lengths_bfs(n: usize, max_len: usize) -> HashMap<AffinePermutation, usize> {
    let id = AffinePermutation::identity(n);
    let mut dist = HashMap::from([(id.clone(), 0)]);
    let mut frontier = vec![id];
    for d in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..n {
                let m = w.apply_generator(i);
                if !dist.contains_key(&m) {
                    dist.insert(m.clone(), d);
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    dist
}
