//! Kauffman bracket, Jones keys and table identification.

pub mod jones;
pub mod statesum;
pub mod table;
pub mod tl;

pub use jones::{jones, jones_keys, jones_of_diagram, mirror_keys};
pub use statesum::{bracket_statesum, MAX_STATE_SUM_CROSSINGS};
pub use table::{
    build_knot_table, describe, identify, identify_diagram, identify_with, reference_word, resolve_name, Chirality,
    Identification, KnotTable, TableEntry,
};
pub use tl::{kauffman_bracket, word_to_tl, TlDiagram, TlElement, MAX_TL_STRANDS};
