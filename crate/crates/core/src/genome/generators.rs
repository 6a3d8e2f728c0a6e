use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::CircularGenome;
use crate::error::{Error, Result};

/// Which rearrangements count as one step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorSet {
    /// Every signed inversion of a proper interval.
    All,
    /// Inversions of at most `L` regions.
    MaxLen(usize),
    /// Inversions of intervals that do not contain the terminus region.
    Terminus,
    /// Inversions centred on the origin, the point of the circle opposite
    /// the terminus region, and not reaching the terminus.
    OriginSymmetric,
    /// Unsigned swaps of two neighbouring regions.
    Swap2,
}

impl GeneratorSet {
    /// Signs matter for every set except the adjacent swaps.
    pub fn is_signed(&self) -> bool {
        !matches!(self, Self::Swap2)
    }

    pub fn needs_terminus(&self) -> bool {
        matches!(self, Self::Terminus | Self::OriginSymmetric)
    }

    /// Inverted spans `(start, len)`, 0-based, wrapping.
    fn spans(&self, n: usize, terminus: Option<usize>) -> Result<Vec<(usize, usize)>> {
        let t = || terminus.ok_or_else(|| Error::InvalidGenome(format!("generator set `{self}` needs a terminus")));
        let mut out = Vec::new();
        match *self {
            Self::All | Self::MaxLen(_) => {
                let max = if let Self::MaxLen(l) = *self { l.min(n - 1) } else { n - 1 };
                for len in 1..=max {
                    out.extend((0..n).map(|s| (s, len)));
                }
            }
            Self::Terminus => {
                let t = t()?;
                for off in 1..n {
                    out.extend((1..=n - off).map(|len| ((t + off) % n, len)));
                }
            }
            Self::OriginSymmetric => {
                let t = t()?;
                if n.is_multiple_of(2) {
                    let c = t + n / 2;
                    out.extend((0..n / 2).map(|k| ((c - k) % n, 2 * k + 1)));
                } else {
                    let b = t + n.div_ceil(2);
                    out.extend((1..=(n - 1) / 2).map(|k| ((b - k) % n, 2 * k)));
                }
            }
            Self::Swap2 => {}
        }
        Ok(out)
    }

    /// Every genome one step away from `g`, in a fixed generator order.
    pub fn neighbours(&self, g: &CircularGenome) -> Result<Vec<CircularGenome>> {
        let n = g.len();
        if let Self::Swap2 = self {
            let count = if n < 3 { n.saturating_sub(1) } else { n };
            return Ok((0..count).map(|p| g.swap_adjacent(p)).collect());
        }
        Ok(self.spans(n, g.terminus_position())?.into_iter().map(|(s, len)| g.invert_span(s, len)).collect())
    }
}

impl fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::All => f.write_str("all"),
            Self::MaxLen(l) => write!(f, "maxlen={l}"),
            Self::Terminus => f.write_str("terminus"),
            Self::OriginSymmetric => f.write_str("origin"),
            Self::Swap2 => f.write_str("swap2"),
        }
    }
}

impl FromStr for GeneratorSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "all" => Ok(Self::All),
            "terminus" => Ok(Self::Terminus),
            "origin" | "origin-symmetric" => Ok(Self::OriginSymmetric),
            "swap2" => Ok(Self::Swap2),
            _ => match s.strip_prefix("maxlen=").map(str::parse::<usize>) {
                Some(Ok(l)) if l > 0 => Ok(Self::MaxLen(l)),
                _ => Err(Error::Parse(format!("unknown generator set `{s}`"))),
            },
        }
    }
}
