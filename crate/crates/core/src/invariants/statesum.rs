//! Kauffman bracket by direct enumeration of smoothing states.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::diagram::{PlanarDiagram, UnionFind, VertexKind};
use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::scalar::Coefficient;

pub const MAX_STATE_SUM_CROSSINGS: usize = 24;

type SlotPairs = [(usize, usize); 2];

/// Slot pairs joined by the A- and B-smoothings of a crossing.
fn smoothings(over_first: bool) -> (SlotPairs, SlotPairs) {
    let vertical = [(1, 2), (3, 0)];
    let horizontal = [(0, 1), (2, 3)];
    if over_first {
        (vertical, horizontal)
    } else {
        (horizontal, vertical)
    }
}

/// Sum over all `2^c` smoothings of `A^(#A - #B) delta^(loops - 1)`.
/// States are counted in parallel; the result does not depend on the
/// evaluation order.
pub fn bracket_statesum<C: Coefficient>(d: &PlanarDiagram) -> Result<Laurent<C>> {
    let crossings: Vec<(Vec<usize>, bool)> = d
        .vertices()
        .iter()
        .filter_map(|v| match v.kind {
            VertexKind::Crossing { over_first } => Some((v.edges.clone(), over_first)),
            _ => None,
        })
        .collect();
    let c = crossings.len();
    if c > MAX_STATE_SUM_CROSSINGS {
        return Err(Error::TooManyCrossings { crossings: c, limit: MAX_STATE_SUM_CROSSINGS });
    }
    let edges = d.edge_count();
    if edges == 0 && d.extra_loops() == 0 {
        return Err(Error::InvalidDiagram("empty diagram".into()));
    }
    let mut base = UnionFind::new(edges);
    let mut base_classes = edges;
    for v in d.vertices() {
        let pairs: &[(usize, usize)] = match v.kind {
            VertexKind::Bend => &[(0, 1)],
            VertexKind::Smoother => &[(0, 1), (2, 3)],
            VertexKind::Crossing { .. } => &[],
        };
        for &(a, b) in pairs {
            if base.union(v.edges[a], v.edges[b]) {
                base_classes -= 1;
            }
        }
    }
    let joins: Vec<(SlotPairs, SlotPairs)> = crossings
        .iter()
        .map(|(e, over_first)| {
            let (a, b) = smoothings(*over_first);
            let map = |p: [(usize, usize); 2]| p.map(|(x, y)| (e[x], e[y]));
            (map(a), map(b))
        })
        .collect();

    // (exponent of A, loop count) -> number of states
    let tally = (0u64..1 << c)
        .into_par_iter()
        .fold(BTreeMap::<(i32, usize), u64>::new, |mut acc, state| {
            let mut uf = base.clone();
            let mut classes = base_classes;
            let mut a_minus_b = 0i32;
            for (k, (a, b)) in joins.iter().enumerate() {
                let pairs = if (state >> k) & 1 == 0 {
                    a_minus_b += 1;
                    a
                } else {
                    a_minus_b -= 1;
                    b
                };
                for &(x, y) in pairs {
                    if uf.union(x, y) {
                        classes -= 1;
                    }
                }
            }
            *acc.entry((a_minus_b, classes + d.extra_loops())).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_insert(0) += v;
            }
            x
        });

    let delta = Laurent::<C>::delta();
    let mut out = Laurent::zero();
    for ((exp, loops), count) in tally {
        let term = delta.pow(loops as u32 - 1).shift(exp).scale(&C::from_i64(count as i64));
        out += &term;
    }
    Ok(out)
}
