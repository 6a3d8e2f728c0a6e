//! Jones polynomials in the variable `A` (with `t = A^-4`).

use crate::diagram::{closure, Closure, PlanarDiagram};
use crate::error::Result;
use crate::invariants::statesum::bracket_statesum;
use crate::invariants::tl::kauffman_bracket;
use crate::laurent::Laurent;
use crate::scalar::Coefficient;
use crate::word::GenWord;

/// `(-A)^(-3w) <D>` for each writhe, sorted. One entry per orientation
/// class, so links give `2^(components - 1)` polynomials.
pub fn jones_keys<C: Coefficient>(bracket: &Laurent<C>, writhes: &[i64]) -> Vec<Laurent<C>> {
    let mut keys: Vec<Laurent<C>> = writhes.iter().map(|&w| &Laurent::neg_a_pow(-3 * w as i32) * bracket).collect();
    keys.sort();
    keys
}

/// Jones keys of a closed word, bracket taken through the diagram algebra.
pub fn jones<C: Coefficient>(w: &GenWord, kind: Closure) -> Result<Vec<Laurent<C>>> {
    let bracket = kauffman_bracket::<C>(w, kind)?;
    let d = closure(w, kind)?;
    Ok(jones_keys(&bracket, &d.orientation_writhes()))
}

/// Jones keys of a diagram, bracket taken by state sum.
pub fn jones_of_diagram<C: Coefficient>(d: &PlanarDiagram) -> Result<Vec<Laurent<C>>> {
    let bracket = bracket_statesum::<C>(d)?;
    Ok(jones_keys(&bracket, &d.orientation_writhes()))
}

/// Keys of the mirror image: `A -> A^-1` on every key, re-sorted.
pub fn mirror_keys<C: Coefficient>(keys: &[Laurent<C>]) -> Vec<Laurent<C>> {
    let mut out: Vec<Laurent<C>> = keys.iter().map(Laurent::mirror).collect();
    out.sort();
    out
}
