use super::distance::bidirectional;
use crate::error::{Error, Result};
use crate::perm::SignedPermutation;

/// Largest linear permutation [`linear_reversal_distance`] accepts.
pub const MAX_LINEAR_REGIONS: usize = 8;

/// Cycles of the breakpoint graph of `w` framed by `0` and `n + 1`. Each
/// signed entry `x` becomes the pair `2x-1, 2x` (reversed when negative);
/// black edges join the right end of one entry to the left end of the
/// next, grey edges join `2i` to `2i + 1`.
pub fn breakpoint_cycles(w: &SignedPermutation) -> usize {
    let n = w.len();
    let mut seq = Vec::with_capacity(2 * n + 2);
    seq.push(0usize);
    for &x in w.images() {
        let m = x.unsigned_abs() as usize;
        if x > 0 {
            seq.extend([2 * m - 1, 2 * m]);
        } else {
            seq.extend([2 * m, 2 * m - 1]);
        }
    }
    seq.push(2 * n + 1);
    let mut pos = vec![0; 2 * n + 2];
    for (p, &v) in seq.iter().enumerate() {
        pos[v] = p;
    }
    let mut seen = vec![false; 2 * n + 2];
    let mut cycles = 0;
    for start in 0..seq.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            let partner = p ^ 1; // black edge
            seen[partner] = true;
            let grey = seq[partner] ^ 1;
            p = pos[grey];
        }
    }
    cycles
}

/// Lower bound `n + 1 - c` on the reversal distance between two linear
/// signed permutations, `c` counting cycles of the breakpoint graph of
/// `b^-1 a`.
pub fn breakpoint_cycle_bound(a: &SignedPermutation, b: &SignedPermutation) -> usize {
    let pi = b.inverse().compose(a);
    pi.len() + 1 - breakpoint_cycles(&pi)
}

fn pack(v: &[i32]) -> u64 {
    v.iter().enumerate().fold(0u64, |acc, (k, &x)| acc | (u64::from(x as i8 as u8) << (8 * k)))
}

fn unpack(code: u64, n: usize) -> Vec<i32> {
    (0..n).map(|k| i32::from((code >> (8 * k)) as u8 as i8)).collect()
}

/// Exact number of signed reversals turning `a` into `b`, by
/// bidirectional search.
pub fn linear_reversal_distance(a: &SignedPermutation, b: &SignedPermutation) -> Result<usize> {
    let n = a.len();
    if n != b.len() {
        return Err(Error::RegionMismatch);
    }
    if n > MAX_LINEAR_REGIONS {
        return Err(Error::GenomeTooLarge { regions: n, limit: MAX_LINEAR_REGIONS });
    }
    let next = |&code: &u64| -> Vec<u64> {
        let v = unpack(code, n);
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                let mut w = v.clone();
                w[i..=j].reverse();
                w[i..=j].iter_mut().for_each(|x| *x = -*x);
                out.push(pack(&w));
            }
        }
        out
    };
    Ok(bidirectional(pack(a.images()), pack(b.images()), next).expect("signed reversals generate the group"))
}
