//! Rational tangles, their fractions and numerator closures.
//!
//! A twist vector `(a_1, ..., a_k)` builds a tangle from a trivial one by
//! alternating twists, the last always horizontal: entry `a_j` twists the
//! NE/SE ends when `k - j` is even and the SW/SE ends otherwise. The
//! starting tangle is `[0]` when `a_1` is horizontal and `[inf]` when it is
//! vertical, which makes the fraction the plain continued fraction
//! `a_k + 1/(a_(k-1) + ... + 1/a_1)`. Positive entries are right-handed
//! twists.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::{DiagramBuilder, PlanarDiagram, Port};
use crate::error::{Error, Result};
use crate::invariants::{identify_diagram, Identification, KnotTable};
use crate::scalar::IntScalar;

/// A rational number or infinity, always in lowest terms with a
/// non-negative denominator. Infinity is stored as `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ExtRational<T: IntScalar> {
    num: T,
    den: T,
}

impl<T: IntScalar> ExtRational<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if num.is_zero() && den.is_zero() {
            return Err(Error::Parse("0/0 is not a fraction".into()));
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den.is_negative() || (den.is_zero() && num.is_negative()) {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn integer(n: T) -> Self {
        Self { num: n, den: T::one() }
    }

    pub fn infinity() -> Self {
        Self { num: T::one(), den: T::zero() }
    }

    pub fn numer(&self) -> T {
        self.num
    }

    pub fn denom(&self) -> T {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// `self + k`; infinity absorbs.
    pub fn add_integer(&self, k: T) -> Self {
        Self { num: self.num + k * self.den, den: self.den }
    }

    /// `1 / self`, with `1/0 = inf` and `1/inf = 0`.
    pub fn recip(&self) -> Self {
        Self::new(self.den, self.num).expect("non-degenerate")
    }
}

impl<T: IntScalar> PartialOrd for ExtRational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order with infinity last.
impl<T: IntScalar> Ord for ExtRational<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (self.num * other.den).cmp(&(other.num * self.den)),
        }
    }
}

impl<T: IntScalar> fmt::Display for ExtRational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl<T: IntScalar> FromStr for ExtRational<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "∞" | "1/0") {
            return Ok(Self::infinity());
        }
        let int =
            |t: &str| t.trim().parse::<i64>().map(T::from_i64).map_err(|_| Error::Parse(format!("bad fraction `{s}`")));
        match s.split_once('/') {
            Some((p, q)) => Self::new(int(p)?, int(q)?),
            None => Ok(Self::integer(int(s)?)),
        }
    }
}

impl<T: IntScalar> Serialize for ExtRational<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de, T: IntScalar> Deserialize<'de> for ExtRational<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Twist vector of a rational tangle.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct RationalTangle {
    twists: Vec<i64>,
}

impl TryFrom<Vec<i64>> for RationalTangle {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<RationalTangle> for Vec<i64> {
    fn from(t: RationalTangle) -> Self {
        t.twists
    }
}

impl RationalTangle {
    pub fn new(twists: Vec<i64>) -> Result<Self> {
        if twists.is_empty() {
            return Err(Error::InvalidTangle("empty twist vector".into()));
        }
        Ok(Self { twists })
    }

    pub fn integer(k: i64) -> Self {
        Self { twists: vec![k] }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn infinity() -> Self {
        Self { twists: vec![0, 0] }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Whether entry `j` (0-based) is a horizontal twist.
    pub fn is_horizontal(&self, j: usize) -> bool {
        (self.twists.len() - 1 - j).is_multiple_of(2)
    }

    pub fn crossing_count(&self) -> u64 {
        self.twists.iter().map(|a| a.unsigned_abs()).sum()
    }

    pub fn fraction(&self) -> ExtRational<i64> {
        self.fraction_in()
    }

    /// Fraction computed in a chosen integer type.
    pub fn fraction_in<T: IntScalar>(&self) -> ExtRational<T> {
        let mut f = if self.is_horizontal(0) { ExtRational::integer(T::zero()) } else { ExtRational::infinity() };
        for (j, &a) in self.twists.iter().enumerate() {
            let a = T::from_i64(a);
            f = if self.is_horizontal(j) { f.add_integer(a) } else { f.recip().add_integer(a).recip() };
        }
        f
    }

    /// Euclidean expansion of a fraction; `inf` becomes `(0,0)`.
    pub fn from_fraction<T: IntScalar>(f: &ExtRational<T>) -> Self {
        if f.is_infinite() {
            return Self::infinity();
        }
        // read off entries from the last one backwards
        let mut rev = Vec::new();
        let (mut p, mut q) = (f.numer(), f.denom());
        loop {
            let a = p.div_floor(&q);
            rev.push(a.to_i64());
            let r = p - a * q;
            if r.is_zero() {
                break;
            }
            // remaining value r/q sits under a vertical twist: 1/(b + 1/F)
            let (p2, q2) = (q, r);
            let b = p2.div_floor(&q2);
            rev.push(b.to_i64());
            let r2 = p2 - b * q2;
            if r2.is_zero() {
                break;
            }
            (p, q) = (q2, r2);
        }
        rev.reverse();
        Self { twists: rev }
    }
}

impl fmt::Display for RationalTangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.twists.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for RationalTangle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let twists = inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad twist vector `{s}`"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(twists)
    }
}

/// Formal sum of rational tangles, joined side by side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangleSum {
    summands: Vec<RationalTangle>,
}

impl TangleSum {
    pub fn new(summands: Vec<RationalTangle>) -> Result<Self> {
        if summands.is_empty() {
            return Err(Error::InvalidTangle("a tangle sum needs at least one summand".into()));
        }
        Ok(Self { summands })
    }

    pub fn summands(&self) -> &[RationalTangle] {
        &self.summands
    }

    /// `o + r + r + ... ` with `i` copies of `r`.
    pub fn processive(o: &RationalTangle, r: &RationalTangle, i: usize) -> Self {
        let mut summands = vec![o.clone()];
        summands.extend(std::iter::repeat_n(r.clone(), i));
        Self { summands }
    }
}

/// Open ends of a partially built tangle.
struct Corners {
    nw: Port,
    ne: Port,
    sw: Port,
    se: Port,
}

fn build_rational(b: &mut DiagramBuilder, t: &RationalTangle) -> Corners {
    let (x, y) = (b.bend(), b.bend());
    let mut c = if t.is_horizontal(0) {
        Corners { nw: (x, 0), ne: (x, 1), sw: (y, 0), se: (y, 1) }
    } else {
        Corners { nw: (x, 0), sw: (x, 1), ne: (y, 0), se: (y, 1) }
    };
    // slots run counter-clockwise from the top right: 0 TR, 1 TL, 2 BL, 3 BR
    for (j, &a) in t.twists().iter().enumerate() {
        for _ in 0..a.unsigned_abs() {
            // under-first crossings here are the right-handed ones
            let v = b.crossing(a < 0);
            if t.is_horizontal(j) {
                b.connect(c.ne, (v, 1));
                b.connect(c.se, (v, 2));
                c.ne = (v, 0);
                c.se = (v, 3);
            } else {
                b.connect(c.sw, (v, 1));
                b.connect(c.se, (v, 0));
                c.sw = (v, 2);
                c.se = (v, 3);
            }
        }
    }
    c
}

/// Numerator closure: summands joined left to right, then NW to NE and SW
/// to SE around the outside.
pub fn numerator_closure(s: &TangleSum) -> Result<PlanarDiagram> {
    if s.summands.len() > 1 {
        if let Some(index) = s.summands.iter().position(|t| t.fraction().is_infinite()) {
            return Err(Error::InfinitySummand { index });
        }
    }
    let mut b = DiagramBuilder::new();
    let mut acc: Option<Corners> = None;
    for t in &s.summands {
        let next = build_rational(&mut b, t);
        acc = Some(match acc {
            None => next,
            Some(left) => {
                b.connect(left.ne, next.nw);
                b.connect(left.se, next.sw);
                Corners { nw: left.nw, sw: left.sw, ne: next.ne, se: next.se }
            }
        });
    }
    let c = acc.expect("nonempty sum");
    b.connect(c.nw, c.ne);
    b.connect(c.sw, c.se);
    b.finish(0)
}

/// Canonical representative of the 2-bridge link `b(p, q)`: `p >= 0` and
/// the smaller of `q` and `q^-1` modulo `p`. Mirror images stay distinct.
pub fn two_bridge_classify(p: i64, q: i64) -> Result<(i64, i64)> {
    if num_integer::gcd(p, q) != 1 {
        return Err(Error::NotCoprime { p, q });
    }
    let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
    if p <= 1 {
        // p = 0 is the two-component unlink, p = 1 the unknot
        return Ok((p, if p == 0 { 1 } else { 0 }));
    }
    let q = q.rem_euclid(p);
    let inv = num_integer::Integer::extended_gcd(&q, &p).x.rem_euclid(p);
    Ok((p, q.min(inv)))
}

/// Identifications of `N(o + i r)` for `i = 1..=rounds`.
pub fn processive_products(o: &RationalTangle, r: &RationalTangle, rounds: usize) -> Result<Vec<Identification>> {
    processive_products_with(KnotTable::bundled(), o, r, rounds)
}

pub fn processive_products_with(
    table: &KnotTable,
    o: &RationalTangle,
    r: &RationalTangle,
    rounds: usize,
) -> Result<Vec<Identification>> {
    if rounds == 0 {
        return Err(Error::InvalidArgument("at least one round is required".into()));
    }
    (1..=rounds).map(|i| identify_diagram(table, &numerator_closure(&TangleSum::processive(o, r, i))?)).collect()
}

/// Limits on the twist vectors tried by [`solve_processive`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBound {
    pub max_len: usize,
    pub max_entry: i64,
}

impl Default for SearchBound {
    fn default() -> Self {
        Self { max_len: 4, max_entry: 6 }
    }
}

fn twist_vectors(bound: SearchBound) -> Vec<Vec<i64>> {
    let range: Vec<i64> = (-bound.max_entry..=bound.max_entry).collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..bound.max_len {
        layer = layer
            .iter()
            .flat_map(|v| {
                range.iter().map(move |&a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Every substrate tangle within `bound` whose products under repeated
/// addition of `r` match `observed` round by round. Tangles with equal
/// fractions are isotopic, so one representative per fraction is returned
/// (fewest crossings, then shortest, then smallest vector), sorted by
/// fraction.
pub fn solve_processive<S: AsRef<str> + Sync>(
    observed: &[S],
    r: &RationalTangle,
    bound: SearchBound,
) -> Result<Vec<RationalTangle>> {
    solve_processive_with(KnotTable::bundled(), observed, r, bound)
}

pub fn solve_processive_with<S: AsRef<str> + Sync>(
    table: &KnotTable,
    observed: &[S],
    r: &RationalTangle,
    bound: SearchBound,
) -> Result<Vec<RationalTangle>> {
    if observed.is_empty() {
        return Err(Error::InvalidTangle("no observed products to match".into()));
    }
    let mut best: BTreeMap<ExtRational<i64>, RationalTangle> = BTreeMap::new();
    for v in twist_vectors(bound) {
        let t = RationalTangle { twists: v };
        let f = t.fraction();
        if f.is_infinite() {
            continue;
        }
        let key = |x: &RationalTangle| (x.crossing_count(), x.twists.len(), x.twists.clone());
        match best.get(&f) {
            Some(cur) if key(cur) <= key(&t) => {}
            _ => {
                best.insert(f, t);
            }
        }
    }
    let reps: Vec<RationalTangle> = best.into_values().collect();
    let hits: Vec<Option<RationalTangle>> = reps
        .into_par_iter()
        .map(|o| {
            for (i, want) in observed.iter().enumerate() {
                let d = numerator_closure(&TangleSum::processive(&o, r, i + 1))?;
                if !identify_diagram(table, &d)?.matches_token(want.as_ref()) {
                    return Ok(None);
                }
            }
            Ok(Some(o))
        })
        .collect::<Result<_>>()?;
    let mut out: Vec<RationalTangle> = hits.into_iter().flatten().collect();
    out.sort_by_key(|t| t.fraction());
    Ok(out)
}
