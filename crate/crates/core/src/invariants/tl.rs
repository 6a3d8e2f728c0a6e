//! Temperley-Lieb diagrams and their linear combinations.
//!
//! Boundary points `0..n` sit on the top edge left to right and `n..2n` on
//! the bottom edge left to right. Products stack the left factor on top.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagram::{Closure, UnionFind};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::scalar::Coefficient;
use crate::word::{GenKind, GenWord};

/// Largest strand count accepted by the diagram-algebra route.
pub const MAX_TL_STRANDS: usize = 12;

/// Non-crossing perfect matching of `2n` boundary points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TlDiagram {
    n: usize,
    partner: Vec<u8>,
}

impl TlDiagram {
    pub fn identity(n: usize) -> Self {
        let mut partner = vec![0u8; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        Self { n, partner }
    }

    /// `e_i` for 1-based `i`: cap joining top `i, i+1` and cup joining bottom `i, i+1`.
    pub fn e(n: usize, i: usize) -> Self {
        let mut d = Self::identity(n);
        let (a, b) = (i - 1, i);
        d.partner[a] = b as u8;
        d.partner[b] = a as u8;
        d.partner[n + a] = (n + b) as u8;
        d.partner[n + b] = (n + a) as u8;
        d
    }

    /// Builds from an explicit matching; rejects non-involutions and
    /// interleaving pairs.
    pub fn from_partners(n: usize, partner: Vec<usize>) -> Result<Self> {
        if partner.len() != 2 * n {
            return Err(Error::InvalidDiagram(format!("need {} boundary points", 2 * n)));
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= 2 * n || p == i || partner[p] != i {
                return Err(Error::InvalidDiagram(format!("point {i} is not properly paired")));
            }
        }
        let d = Self { n, partner: partner.into_iter().map(|p| p as u8).collect() };
        if !d.is_planar() {
            return Err(Error::InvalidDiagram("pairs interleave".into()));
        }
        Ok(d)
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    /// Position around the boundary circle: top left to right, then bottom
    /// right to left.
    fn circle_pos(&self, i: usize) -> usize {
        if i < self.n {
            i
        } else {
            3 * self.n - 1 - i
        }
    }

    pub fn is_planar(&self) -> bool {
        let pairs: Vec<(usize, usize)> = (0..2 * self.n)
            .filter(|&i| i < self.partner(i))
            .map(|i| {
                let (a, b) = (self.circle_pos(i), self.circle_pos(self.partner(i)));
                (a.min(b), a.max(b))
            })
            .collect();
        pairs.iter().all(|&(a, b)| pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Stacks `self` above `below`; returns the product diagram and the
    /// number of closed loops formed in the middle.
    pub fn compose(&self, below: &Self) -> (Self, usize) {
        let n = self.n;
        debug_assert_eq!(n, below.n);
        let mut partner = vec![u8::MAX; 2 * n];
        let mut middle_seen = vec![false; n];
        // Walks from an outer point through the middle row to the other end.
        let walk = |start_upper: bool, start: usize, middle_seen: &mut [bool]| -> usize {
            let (mut upper, mut p) = (start_upper, start);
            loop {
                let q = if upper { self.partner(p) } else { below.partner(p) };
                if upper {
                    if q < n {
                        return q;
                    }
                    middle_seen[q - n] = true;
                    upper = false;
                    p = q - n;
                } else {
                    if q >= n {
                        return q;
                    }
                    middle_seen[q] = true;
                    upper = true;
                    p = q + n;
                }
            }
        };
        for a in 0..n {
            if partner[a] != u8::MAX {
                continue;
            }
            let b = walk(true, a, &mut middle_seen);
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        for a in n..2 * n {
            if partner[a] != u8::MAX {
                continue;
            }
            let b = walk(false, a, &mut middle_seen);
            partner[a] = b as u8;
            partner[b] = a as u8;
        }
        let mut loops = 0;
        for m in 0..n {
            if middle_seen[m] {
                continue;
            }
            loops += 1;
            // Trace the closed loop through the middle row.
            let mut p = m;
            loop {
                middle_seen[p] = true;
                let q = below.partner(p);
                middle_seen[q] = true;
                p = self.partner(q + n) - n;
                if p == m {
                    break;
                }
            }
        }
        (Self { n, partner }, loops)
    }

    /// Loops formed by closing the diagram.
    pub fn closure_loops(&self, closure: Closure) -> usize {
        let n = self.n;
        let mut uf = UnionFind::new(2 * n);
        for i in 0..2 * n {
            uf.union(i, self.partner(i));
        }
        match closure {
            Closure::Plat => {
                for j in 0..n / 2 {
                    uf.union(2 * j, 2 * j + 1);
                    uf.union(n + 2 * j, n + 2 * j + 1);
                }
            }
            Closure::Trace => {
                for i in 0..n {
                    uf.union(i, n + i);
                }
            }
        }
        (0..2 * n).filter(|&i| uf.find(i) == i).count()
    }
}

impl fmt::Debug for TlDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> =
            (0..2 * self.n).filter(|&i| i < self.partner(i)).map(|i| format!("{}-{}", i, self.partner(i))).collect();
        write!(f, "Tl[{}]", pairs.join(" "))
    }
}

/// Linear combination of diagrams with Laurent coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TlElement<C: Coefficient> {
    n: usize,
    terms: BTreeMap<TlDiagram, Laurent<C>>,
}

impl<C: Coefficient> TlElement<C> {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(TlDiagram::identity(n))
    }

    pub fn basis(d: TlDiagram) -> Self {
        let n = d.n;
        let mut terms = BTreeMap::new();
        terms.insert(d, Laurent::one());
        Self { n, terms }
    }

    pub fn e(n: usize, i: usize) -> Self {
        Self::basis(TlDiagram::e(n, i))
    }

    /// `A + A^-1 e_i`.
    pub fn sigma(n: usize, i: usize) -> Self {
        Self::identity(n).scale(&Laurent::a_pow(1)).add(&Self::e(n, i).scale(&Laurent::a_pow(-1)))
    }

    /// `A^-1 + A e_i`.
    pub fn sigma_inv(n: usize, i: usize) -> Self {
        Self::identity(n).scale(&Laurent::a_pow(-1)).add(&Self::e(n, i).scale(&Laurent::a_pow(1)))
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TlDiagram, &Laurent<C>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &TlDiagram) -> Laurent<C> {
        self.terms.get(d).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: TlDiagram, c: Laurent<C>) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&d) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(d, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "diagram algebras of different size");
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Laurent<C>) -> Self {
        let mut out = Self::zero(self.n);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c * s);
        }
        out
    }

    /// Product with `self` on top; every closed loop contributes a `delta`.
    pub fn multiply(&self, below: &Self) -> Result<Self> {
        if self.n != below.n {
            return Err(Error::StrandMismatch { left: self.n, right: below.n });
        }
        let delta = Laurent::<C>::delta();
        let mut delta_pows = vec![Laurent::one()];
        let mut out = Self::zero(self.n);
        for (d1, c1) in &self.terms {
            for (d2, c2) in &below.terms {
                let (d, loops) = d1.compose(d2);
                while delta_pows.len() <= loops {
                    let next = delta_pows.last().expect("nonempty") * &delta;
                    delta_pows.push(next);
                }
                out.add_term(d, &(c1 * c2) * &delta_pows[loops]);
            }
        }
        Ok(out)
    }

    /// Closes every basis diagram and sums `coeff * delta^(loops - 1)`.
    pub fn close(&self, closure: Closure) -> Laurent<C> {
        let delta = Laurent::<C>::delta();
        let mut out = Laurent::zero();
        for (d, c) in &self.terms {
            let loops = d.closure_loops(closure);
            out += &(c * &delta.pow(loops as u32 - 1));
        }
        out
    }
}

/// Kauffman-bracket image of a word: `s_i -> A + A^-1 e_i`,
/// `s_i^-1 -> A^-1 + A e_i`, `e_i -> e_i`.
pub fn word_to_tl<C: Coefficient>(w: &GenWord) -> Result<TlElement<C>> {
    if w.has_affine_letters() {
        return Err(Error::AffineClosure);
    }
    let n = w.strands();
    if n > MAX_TL_STRANDS {
        return Err(Error::TooManyStrands { strands: n, limit: MAX_TL_STRANDS });
    }
    let mut acc = TlElement::identity(n);
    for g in w.letters() {
        let factor = match g.kind {
            GenKind::Sigma => TlElement::sigma(n, g.index),
            GenKind::SigmaInv => TlElement::sigma_inv(n, g.index),
            GenKind::E => TlElement::e(n, g.index),
            GenKind::X1 | GenKind::X1Inv => unreachable!("checked above"),
        };
        acc = acc.multiply(&factor)?;
    }
    Ok(acc)
}

/// Bracket of a closed word, normalised so the unknot is 1.
pub fn kauffman_bracket<C: Coefficient>(w: &GenWord, closure: Closure) -> Result<Laurent<C>> {
    if w.is_affine() || w.has_affine_letters() {
        return Err(Error::AffineClosure);
    }
    if closure == Closure::Plat && w.strands() % 2 == 1 {
        return Err(Error::OddStrandCount(w.strands()));
    }
    Ok(word_to_tl::<C>(w)?.close(closure))
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Laurent<i64>;

    #[test]
    fn e_squared_is_delta_e() {
        let e = TlElement::<i64>::e(4, 2);
        assert_eq!(e.multiply(&e).unwrap(), e.scale(&P::delta()));
    }

    #[test]
    fn jones_relation() {
        let a = TlElement::<i64>::e(5, 2);
        let b = TlElement::<i64>::e(5, 3);
        assert_eq!(a.multiply(&b).unwrap().multiply(&a).unwrap(), a);
        assert_eq!(b.multiply(&a).unwrap().multiply(&b).unwrap(), b);
    }

    #[test]
    fn planarity() {
        assert!(TlDiagram::from_partners(2, vec![2, 3, 0, 1]).is_ok());
        assert!(TlDiagram::from_partners(2, vec![1, 0, 3, 2]).is_ok());
        assert!(TlDiagram::from_partners(2, vec![3, 2, 1, 0]).is_err());
    }

    #[test]
    fn composed_diagrams_stay_planar() {
        let n = 5;
        let mut d = TlDiagram::identity(n);
        for i in [1, 3, 2, 4, 1, 2, 3] {
            d = d.compose(&TlDiagram::e(n, i)).0;
            assert!(d.is_planar(), "{d:?}");
        }
    }
}
