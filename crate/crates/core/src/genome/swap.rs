use super::coxeter::AffinePermutation;
use super::distance::{distance_bfs, Distance, MAX_BFS_REGIONS};
use super::{CircularGenome, GeneratorSet};
use crate::error::{Error, Result};

fn unsigned_pair(a: &CircularGenome, b: &CircularGenome) -> Result<(CircularGenome, CircularGenome)> {
    if a.len() != b.len() {
        return Err(Error::RegionMismatch);
    }
    let strip = |g: &CircularGenome| CircularGenome { regions: g.unsigned().regions, terminus: None };
    Ok((strip(a), strip(b)))
}

/// Fewest swaps of neighbouring regions between two unsigned circular
/// genomes up to rotation and reversal, by search.
pub fn circular_swap_distance(a: &CircularGenome, b: &CircularGenome) -> Result<usize> {
    let (a, b) = unsigned_pair(a, b)?;
    match distance_bfs(&a, &b, &GeneratorSet::Swap2)? {
        Distance::Steps(d) => Ok(d),
        Distance::Unreachable => unreachable!("adjacent swaps generate the symmetric group"),
    }
}

/// Experimental closed form for [`circular_swap_distance`]: the least
/// affine length over every dihedral image of `a` and every lift of the
/// position permutation with shifts in `{-1, 0, 1}` summing to zero.
/// Checked against the search, not proved exact.
pub fn swap_distance_fast(a: &CircularGenome, b: &CircularGenome) -> Result<usize> {
    let (a, b) = unsigned_pair(a, b)?;
    let n = a.len();
    if n > MAX_BFS_REGIONS {
        return Err(Error::GenomeTooLarge { regions: n, limit: MAX_BFS_REGIONS });
    }
    if n < 3 {
        return Ok(0);
    }
    let mut reversed = a.clone();
    reversed.regions.reverse();
    let mut best = usize::MAX;
    for r in 0..n {
        for v in [a.rotated(r), reversed.rotated(r)] {
            let mut pos = vec![0i64; n + 1];
            for (p, &x) in v.regions().iter().enumerate() {
                pos[x as usize] = p as i64 + 1;
            }
            let x: Vec<i64> = b.regions().iter().map(|&l| pos[l as usize]).collect();
            best = best.min(min_lift_length(&x, best));
        }
    }
    Ok(best)
}

fn min_lift_length(x: &[i64], cap: usize) -> usize {
    let n = x.len();
    let mut best = cap;
    let mut shifts = vec![-1i64; n];
    loop {
        if shifts.iter().sum::<i64>() == 0 {
            let window = x.iter().zip(&shifts).map(|(&v, &k)| v + k * n as i64).collect();
            let w = AffinePermutation::new(window).expect("lift of a permutation");
            best = best.min(w.length());
        }
        // odometer over {-1, 0, 1}^n
        let mut k = 0;
        while k < n && shifts[k] == 1 {
            shifts[k] = -1;
            k += 1;
        }
        if k == n {
            return best;
        }
        shifts[k] += 1;
    }
}
