//! Words in braid generators, turn-back generators and the affine generator.
//!
//! Letters are read top to bottom: the first letter sits highest in the
//! drawn diagram and `compose(a, b)` stacks `b` below `a`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Permutation, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    Sigma,
    SigmaInv,
    E,
    X1,
    X1Inv,
}

/// A single letter. `index` is 1-based; the affine letters carry index 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub fn sigma(i: usize) -> Self {
        Self { kind: GenKind::Sigma, index: i }
    }

    pub fn sigma_inv(i: usize) -> Self {
        Self { kind: GenKind::SigmaInv, index: i }
    }

    pub fn e(i: usize) -> Self {
        Self { kind: GenKind::E, index: i }
    }

    pub fn x1() -> Self {
        Self { kind: GenKind::X1, index: 1 }
    }

    pub fn x1_inv() -> Self {
        Self { kind: GenKind::X1Inv, index: 1 }
    }

    pub fn is_crossing(&self) -> bool {
        matches!(self.kind, GenKind::Sigma | GenKind::SigmaInv)
    }

    pub fn is_affine(&self) -> bool {
        matches!(self.kind, GenKind::X1 | GenKind::X1Inv)
    }

    /// Group inverse, `None` for turn-backs.
    pub fn inverse(&self) -> Option<Self> {
        let kind = match self.kind {
            GenKind::Sigma => GenKind::SigmaInv,
            GenKind::SigmaInv => GenKind::Sigma,
            GenKind::X1 => GenKind::X1Inv,
            GenKind::X1Inv => GenKind::X1,
            GenKind::E => return None,
        };
        Some(Self { kind, index: self.index })
    }

    /// Crossing sign flipped; turn-backs are unchanged.
    pub fn mirror(&self) -> Self {
        self.inverse().unwrap_or(*self)
    }

    /// +1 for `s_i`/`x1`, -1 for their inverses, 0 for `e_i`.
    pub fn exponent(&self) -> i32 {
        match self.kind {
            GenKind::Sigma | GenKind::X1 => 1,
            GenKind::SigmaInv | GenKind::X1Inv => -1,
            GenKind::E => 0,
        }
    }

    fn symbol(&self) -> char {
        match self.kind {
            GenKind::Sigma | GenKind::SigmaInv => 's',
            GenKind::E => 'e',
            GenKind::X1 | GenKind::X1Inv => 'x',
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.symbol(), self.index)?;
        if self.exponent() < 0 {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

impl FromStr for Generator {
    type Err = Error;

    /// One letter: `s2`, `s2^-1`, `e4`, `x1`, `x1^-1`.
    fn from_str(s: &str) -> Result<Self> {
        let tok = s.trim();
        let bad = || Error::Parse(format!("bad generator `{tok}`"));
        let (body, inverse) = match tok.strip_suffix("^-1") {
            Some(b) => (b, true),
            None => (tok.strip_suffix("^1").unwrap_or(tok), false),
        };
        let mut chars = body.chars();
        let sym = chars.next().ok_or_else(bad)?;
        let index: usize = chars.as_str().parse().map_err(|_| bad())?;
        if index == 0 {
            return Err(bad());
        }
        let g = match sym {
            's' => Generator::sigma(index),
            'e' => Generator::e(index),
            'x' if index == 1 => Generator::x1(),
            _ => return Err(bad()),
        };
        if inverse {
            g.inverse().ok_or_else(bad)
        } else {
            Ok(g)
        }
    }
}

/// A generator word on `n` strands.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordJson", into = "WordJson")]
pub struct GenWord {
    n: usize,
    affine: bool,
    letters: Vec<Generator>,
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    n: usize,
    affine: bool,
    word: String,
}

impl TryFrom<WordJson> for GenWord {
    type Error = Error;
    fn try_from(j: WordJson) -> Result<Self> {
        GenWord::parse(&j.word, j.n, j.affine)
    }
}

impl From<GenWord> for WordJson {
    fn from(w: GenWord) -> Self {
        WordJson { n: w.n, affine: w.affine, word: w.to_string() }
    }
}

impl GenWord {
    pub fn new(n: usize, affine: bool, letters: Vec<Generator>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Parse("strand count must be positive".into()));
        }
        for g in &letters {
            if g.is_affine() {
                if !affine {
                    return Err(Error::AffineLetter);
                }
                if g.index != 1 {
                    return Err(Error::IndexOutOfRange { index: g.index, strands: n });
                }
            } else if g.index == 0 || g.index >= n {
                return Err(Error::IndexOutOfRange { index: g.index, strands: n });
            }
        }
        Ok(Self { n, affine, letters })
    }

    pub fn empty(n: usize) -> Self {
        Self { n: n.max(1), affine: false, letters: Vec::new() }
    }

    /// Non-affine word from text.
    pub fn braid(text: &str, n: usize) -> Result<Self> {
        Self::parse(text, n, false)
    }

    /// Parses `s1 s2^-1 e4 x1 s3^2`. Powers expand into repeated letters.
    pub fn parse(text: &str, n: usize, affine: bool) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let bad = || Error::Parse(format!("bad letter `{tok}`"));
            let mut chars = tok.chars();
            let sym = chars.next().ok_or_else(bad)?;
            let rest = chars.as_str();
            let (idx, pow) = match rest.split_once('^') {
                Some((i, p)) => (i, p.parse::<i64>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            let index: usize = idx.parse().map_err(|_| bad())?;
            let base = match sym {
                's' => Generator::sigma(index),
                'e' => Generator::e(index),
                'x' if index == 1 => Generator::x1(),
                'x' => return Err(Error::Parse(format!("only x1 is supported, got `{tok}`"))),
                _ => return Err(bad()),
            };
            let letter = if pow < 0 { base.inverse().ok_or_else(bad)? } else { base };
            letters.extend(std::iter::repeat_n(letter, pow.unsigned_abs() as usize));
        }
        Self::new(n, affine, letters)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn is_affine(&self) -> bool {
        self.affine
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.iter().filter(|g| g.is_crossing()).count()
    }

    pub fn has_turnbacks(&self) -> bool {
        self.letters.iter().any(|g| g.kind == GenKind::E)
    }

    pub fn has_affine_letters(&self) -> bool {
        self.letters.iter().any(Generator::is_affine)
    }

    /// Same word with the affine flag set (letters unchanged).
    pub fn into_affine(mut self) -> Self {
        self.affine = true;
        self
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch { left: self.n, right: other.n });
        }
        if self.affine != other.affine {
            return Err(Error::AffineMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { n: self.n, affine: self.affine, letters })
    }

    /// `g` placed above the word.
    pub fn prefixed(&self, g: Generator) -> Result<Self> {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        Self::new(self.n, self.affine, letters)
    }

    /// `g^k` placed above the word.
    pub fn prefixed_power(&self, g: Generator, k: usize) -> Result<Self> {
        let mut letters = vec![g; k];
        letters.extend_from_slice(&self.letters);
        Self::new(self.n, self.affine, letters)
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<Generator> = Vec::with_capacity(self.len());
        for &g in &self.letters {
            match out.last() {
                Some(top) if g.inverse() == Some(*top) => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        Self { n: self.n, affine: self.affine, letters: out }
    }

    pub fn invert(&self) -> Result<Self> {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|g| g.inverse().ok_or(Error::NonInvertible(g.index)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n: self.n, affine: self.affine, letters })
    }

    pub fn mirror(&self) -> Self {
        Self { n: self.n, affine: self.affine, letters: self.letters.iter().map(Generator::mirror).collect() }
    }

    /// Flip (`Swap`) or resolve (`Smooth`) the crossing at 1-based `pos`.
    pub fn edit_crossing(&self, pos: usize, mode: CrossingEdit) -> Result<Self> {
        if pos == 0 || pos > self.len() {
            return Err(Error::PositionOutOfRange { pos, len: self.len() });
        }
        let g = self.letters[pos - 1];
        if !g.is_crossing() {
            return Err(Error::NotACrossing(pos));
        }
        let mut letters = self.letters.clone();
        letters[pos - 1] = match mode {
            CrossingEdit::Swap => g.mirror(),
            CrossingEdit::Smooth => Generator::e(g.index),
        };
        Ok(Self { n: self.n, affine: self.affine, letters })
    }

    /// Image in the symmetric group. `perm[i]` is the top position of the
    /// strand ending at bottom position `i`; products compose as
    /// `perm(w1 w2) = perm(w1) * perm(w2)`.
    pub fn underlying_permutation(&self) -> Result<Permutation> {
        let mut p = Permutation::identity(self.n);
        for g in &self.letters {
            match g.kind {
                GenKind::Sigma | GenKind::SigmaInv => p.swap_positions(g.index),
                GenKind::X1 | GenKind::X1Inv => {}
                GenKind::E => return Err(Error::NonInvertible(g.index)),
            }
        }
        Ok(p)
    }

    /// Image in the type-B Coxeter group: `s_i` swaps positions, `x1` flips
    /// the sign at position 1.
    pub fn quotient_to_type_b(&self) -> Result<SignedPermutation> {
        let mut w = SignedPermutation::identity(self.n);
        for g in &self.letters {
            match g.kind {
                GenKind::Sigma | GenKind::SigmaInv => w.swap_positions(g.index),
                GenKind::X1 | GenKind::X1Inv => w.negate_position(1),
                GenKind::E => return Err(Error::NonInvertible(g.index)),
            }
        }
        Ok(w)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("word serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrossingEdit {
    Swap,
    Smooth,
}

/// Runs of equal letters print as powers: `s2^2 s3 s4^-1 e1`.
impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let g = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == g {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}{}", g.symbol(), g.index)?;
            let sign = if g.exponent() < 0 { -1 } else { 1 };
            let pow = sign * run as i64;
            if pow != 1 {
                write!(f, "^{pow}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenWord(n={}, \"{}\"{})", self.n, self, if self.affine { ", affine" } else { "" })
    }
}

/// Uniform random non-affine word. With `turnbacks`, roughly one letter in
/// five is an `e_i`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, n: usize, len: usize, turnbacks: bool) -> GenWord {
    assert!(n >= 2, "random words need at least two strands");
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n);
            let roll = rng.gen_range(0..10);
            if turnbacks && roll < 2 {
                Generator::e(i)
            } else if roll % 2 == 0 {
                Generator::sigma(i)
            } else {
                Generator::sigma_inv(i)
            }
        })
        .collect();
    GenWord { n, affine: false, letters }
}
