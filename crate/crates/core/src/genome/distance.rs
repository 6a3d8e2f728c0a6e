use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{CircularGenome, GeneratorSet};
use crate::error::{Error, Result};

/// Largest genome the Cayley-graph searches accept.
pub const MAX_BFS_REGIONS: usize = 10;
const MAX_ORBIT_REGIONS: usize = 7;

/// Result of a restricted search: the target may lie outside the subgroup
/// the generators reach.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Steps(usize),
    Unreachable,
}

impl Distance {
    pub fn steps(&self) -> Option<usize> {
        match *self {
            Self::Steps(d) => Some(d),
            Self::Unreachable => None,
        }
    }
}

/// Breadth-first search from both ends, always growing the smaller
/// frontier by one full level. Frontier expansion runs in parallel; the
/// merge is sequential so the result never depends on scheduling.
pub(crate) fn bidirectional<S, F>(start: S, goal: S, next: F) -> Option<usize>
where
    S: Clone + Eq + Hash + Send + Sync,
    F: Fn(&S) -> Vec<S> + Sync,
{
    if start == goal {
        return Some(0);
    }
    let mut dist = [HashMap::from([(start.clone(), 0usize)]), HashMap::from([(goal.clone(), 0usize)])];
    let mut frontier = [vec![start], vec![goal]];
    let mut depth = [0usize; 2];
    loop {
        if frontier[0].is_empty() || frontier[1].is_empty() {
            return None;
        }
        let side = usize::from(frontier[0].len() > frontier[1].len());
        let expanded: Vec<Vec<S>> = frontier[side].par_iter().map(&next).collect();
        depth[side] += 1;
        let mut grown = Vec::new();
        let mut best: Option<usize> = None;
        for y in expanded.into_iter().flatten() {
            if let Some(&d) = dist[1 - side].get(&y) {
                best = Some(best.map_or(depth[side] + d, |b| b.min(depth[side] + d)));
            }
            if !dist[side].contains_key(&y) {
                dist[side].insert(y.clone(), depth[side]);
                grown.push(y);
            }
        }
        if best.is_some() {
            return best;
        }
        frontier[side] = grown;
    }
}

fn check_pair(a: &CircularGenome, b: &CircularGenome, gens: &GeneratorSet) -> Result<()> {
    if a.len() != b.len() || a.terminus() != b.terminus() {
        return Err(Error::RegionMismatch);
    }
    if a.len() > MAX_BFS_REGIONS {
        return Err(Error::GenomeTooLarge { regions: a.len(), limit: MAX_BFS_REGIONS });
    }
    if gens.needs_terminus() && a.terminus().is_none() {
        return Err(Error::InvalidGenome(format!("generator set `{gens}` needs a terminus")));
    }
    Ok(())
}

/// Fewest generator steps between the dihedral classes of `a` and `b`.
pub fn distance_bfs(a: &CircularGenome, b: &CircularGenome, gens: &GeneratorSet) -> Result<Distance> {
    check_pair(a, b, gens)?;
    let canon = |g: &CircularGenome| {
        if gens.is_signed() {
            g.canonical()
        } else {
            g.unsigned_canonical()
        }
    };
    let next = |g: &CircularGenome| -> Vec<CircularGenome> {
        gens.neighbours(g).expect("terminus checked").iter().map(canon).collect()
    };
    Ok(match bidirectional(canon(a), canon(b), next) {
        Some(d) => Distance::Steps(d),
        None => Distance::Unreachable,
    })
}

/// Every arrangement reachable from `g` by the generators, positions taken
/// literally (no dihedral identification).
pub fn terminus_orbit(g: &CircularGenome, gens: &GeneratorSet) -> Result<BTreeSet<CircularGenome>> {
    if g.len() > MAX_ORBIT_REGIONS {
        return Err(Error::GenomeTooLarge { regions: g.len(), limit: MAX_ORBIT_REGIONS });
    }
    let mut seen = BTreeSet::from([g.clone()]);
    let mut stack = vec![g.clone()];
    while let Some(x) = stack.pop() {
        for y in gens.neighbours(&x)? {
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    Ok(seen)
}
