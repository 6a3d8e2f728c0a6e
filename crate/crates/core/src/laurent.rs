//! Exact Laurent polynomials in a single variable `A`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// A Laurent polynomial `sum c_k A^k` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Laurent<C> {
    terms: BTreeMap<i32, C>,
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(C::one(), 0)
    }

    pub fn monomial(coeff: C, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Self { terms }
    }

    /// `A^exp`.
    pub fn a_pow(exp: i32) -> Self {
        Self::monomial(C::one(), exp)
    }

    /// The loop value `-A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(2, -C::one()), (-2, -C::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, C)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> C {
        self.terms.get(&exp).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &C)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// `max_degree - min_degree`, zero for the zero polynomial.
    pub fn span(&self) -> i32 {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn add_term(&mut self, exp: i32, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&exp) {
            Some(old) => old + coeff,
            None => coeff,
        };
        if !sum.is_zero() {
            self.terms.insert(exp, sum);
        }
    }

    /// Multiply by `A^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, s: &C) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (*e, c.clone() * s.clone())))
    }

    /// Substitute `A -> A^-1`.
    pub fn mirror(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `(-A)^k`.
    pub fn neg_a_pow(k: i32) -> Self {
        let c = if k.rem_euclid(2) == 0 { C::one() } else { -C::one() };
        Self::monomial(c, k)
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent::from_terms(self.terms.iter().map(|(e, c)| (*e, f(c))))
    }

    /// `(exp, coeff)` pairs with exponents descending, the order used by the
    /// text form and the knot table file.
    pub fn to_pairs(&self) -> Vec<(i32, C)> {
        self.terms.iter().rev().map(|(e, c)| (*e, c.clone())).collect()
    }
}

impl<C: Coefficient> Add for &Laurent<C> {
    type Output = Laurent<C>;
    fn add(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Laurent<C> {
    type Output = Laurent<C>;
    fn add(mut self, rhs: Laurent<C>) -> Laurent<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> AddAssign<&Laurent<C>> for Laurent<C> {
    fn add_assign(&mut self, rhs: &Laurent<C>) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl<C: Coefficient> Neg for &Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        Laurent { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<C: Coefficient> Neg for Laurent<C> {
    type Output = Laurent<C>;
    fn neg(self) -> Laurent<C> {
        -&self
    }
}

impl<C: Coefficient> Sub for &Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: &Laurent<C>) -> Laurent<C> {
        self + &(-rhs)
    }
}

impl<C: Coefficient> Sub for Laurent<C> {
    type Output = Laurent<C>;
    fn sub(self, rhs: Laurent<C>) -> Laurent<C> {
        &self - &rhs
    }
}

impl<C: Coefficient> Mul for &Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: &Laurent<C>) -> Laurent<C> {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Mul for Laurent<C> {
    type Output = Laurent<C>;
    fn mul(self, rhs: Laurent<C>) -> Laurent<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Zero for Laurent<C> {
    fn zero() -> Self {
        Laurent::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Laurent<C> {
    fn one() -> Self {
        Laurent::one()
    }
}

/// Canonical text: exponents descending, e.g. `-A^-4 + A^-12`.
impl<C: Coefficient> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < C::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let unit = mag.is_one();
            match (*e, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "A")?,
                (1, false) => write!(f, "{mag}A")?,
                (e, true) => write!(f, "A^{e}")?,
                (e, false) => write!(f, "{mag}A^{e}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl<C: Coefficient> FromStr for Laurent<C> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        // Split into signed terms, ignoring the '-' that belongs to an exponent.
        let mut terms = Vec::new();
        let mut current = String::new();
        let mut prev = '\0';
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() && prev != '^' {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
            prev = ch;
        }
        terms.push(current);

        let mut out = Self::zero();
        for term in terms {
            let (neg, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(&term)),
            };
            let bad = || Error::Parse(format!("bad polynomial term `{term}`"));
            let (coeff, exp) = match body.find('A') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 { 1 } else { body[..pos].parse::<i64>().map_err(|_| bad())? };
                    let rest = &body[pos + 1..];
                    let e = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?
                    };
                    (c, e)
                }
            };
            out.add_term(exp, C::from_i64(if neg { -coeff } else { coeff }));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = Laurent<i64>;

    #[test]
    fn delta_squared() {
        let d = P::delta();
        assert_eq!((&d * &d).to_string(), "A^4 + 2 + A^-4");
    }

    #[test]
    fn display_descending() {
        let p = P::from_terms([(-12, 1), (-4, -1)]);
        assert_eq!(p.to_string(), "-A^-4 + A^-12");
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_terms([(1, 3), (0, -2)]).to_string(), "3A - 2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["-A^-4 + A^-12", "A^4 + 2 + A^-4", "3A - 2", "1", "-A^3", "0"] {
            let p: P = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("A^".parse::<P>().is_err());
        assert!("".parse::<P>().is_err());
    }

    #[test]
    fn mirror_and_cancellation() {
        let p = P::from_terms([(3, 2), (-1, 1)]);
        assert_eq!(p.mirror(), P::from_terms([(-3, 2), (1, 1)]));
        assert!((&p - &p).is_zero());
        assert_eq!(P::neg_a_pow(-3), P::monomial(-1, -3));
        assert_eq!(P::neg_a_pow(2), P::monomial(1, 2));
    }

    #[test]
    fn wide_coefficients_agree() {
        let d64 = P::delta().pow(9);
        let d128 = Laurent::<i128>::delta().pow(9);
        assert_eq!(d64.map_coeffs(|c| *c as i128), d128);
    }
}
