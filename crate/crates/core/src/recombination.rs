//! Processive recombination as repeated prefix multiplication of a
//! plat-closed substrate word.
//!
//! Round `i` is the plat closure of `prefix^i * substrate`; the prefix is
//! drawn at the top of the diagram. Marked systems label the two bottom
//! closure arcs, oriented along the substrate, and report whether the
//! labels end up on one loop with the same or opposite orientation.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{plat_closure, ArcDirection, Closure, ClosureArc, MarkedDiagram};
use crate::error::{Error, Result};
use crate::invariants::{identify_with, jones, KnotTable};
use crate::laurent::Laurent;
use crate::word::{random_word, GenWord, Generator};

const MARK_LABELS: [&str; 2] = ["a", "b"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecombinationSystem {
    pub name: String,
    pub substrate: GenWord,
    pub prefix: Generator,
    pub marked: bool,
    #[serde(default)]
    pub note: String,
}

impl RecombinationSystem {
    pub fn new(name: &str, substrate: GenWord, prefix: Generator, marked: bool) -> Result<Self> {
        if substrate.is_affine() || prefix.is_affine() {
            return Err(Error::AffineClosure);
        }
        if substrate.strands() % 2 == 1 {
            return Err(Error::OddStrandCount(substrate.strands()));
        }
        substrate.prefixed(prefix)?;
        Ok(Self { name: name.to_string(), substrate, prefix, marked, note: String::new() })
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }

    /// `prefix^i * substrate`.
    pub fn round_word(&self, i: usize) -> Result<GenWord> {
        self.substrate.prefixed_power(self.prefix, i)
    }
}

/// What the two marked segments look like after recombination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MarkStatus {
    /// Same loop, one segment reversed relative to the other.
    Inverted,
    /// Same loop, relative orientation as in the substrate.
    Restored,
    /// The segments lie on different components.
    Separated,
    NotMarked,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductReport {
    pub round: usize,
    pub word: String,
    /// Table name, or `unclassified`.
    pub name: String,
    pub crossings: Option<u32>,
    pub components: usize,
    pub keys: Vec<String>,
    pub status: MarkStatus,
}

fn mark_status(substrate: &GenWord, product: &GenWord) -> Result<MarkStatus> {
    let base = MarkedDiagram::new(plat_closure(substrate)?);
    let arcs = [ClosureArc::Bottom(1), ClosureArc::Bottom(2)];
    let dirs: Vec<ArcDirection> = arcs
        .iter()
        .map(|&a| base.traversal_direction(a).ok_or_else(|| Error::InvalidDiagram("missing bottom arc".into())))
        .collect::<Result<_>>()?;
    let mut m = MarkedDiagram::new(plat_closure(product)?);
    for ((arc, dir), label) in arcs.iter().zip(dirs).zip(MARK_LABELS) {
        m.mark_arc(*arc, dir, label)?;
    }
    let seqs = m.read_sequences();
    Ok(match seqs.iter().find(|s| s.len() == 2) {
        Some(s) if s[0].1 * s[1].1 < 0 => MarkStatus::Inverted,
        Some(_) => MarkStatus::Restored,
        None => MarkStatus::Separated,
    })
}

pub fn product_with(table: &KnotTable, sys: &RecombinationSystem, i: usize) -> Result<ProductReport> {
    let word = sys.round_word(i)?;
    let id = identify_with(table, &word, Closure::Plat)?;
    let status = if sys.marked && sys.substrate.strands() >= 4 {
        mark_status(&sys.substrate, &word)?
    } else {
        MarkStatus::NotMarked
    };
    Ok(ProductReport {
        round: i,
        word: word.to_string(),
        name: id.label().to_string(),
        crossings: id.crossings,
        components: id.components,
        keys: id.keys.iter().map(Laurent::to_string).collect(),
        status,
    })
}

/// Report for round `i` (`i = 0` is the substrate itself).
pub fn product(sys: &RecombinationSystem, i: usize) -> Result<ProductReport> {
    product_with(KnotTable::bundled(), sys, i)
}

/// Rounds `1..=rounds`, computed in parallel and returned in order.
pub fn processive_series(sys: &RecombinationSystem, rounds: usize) -> Result<Vec<ProductReport>> {
    processive_series_with(KnotTable::bundled(), sys, rounds)
}

pub fn processive_series_with(
    table: &KnotTable,
    sys: &RecombinationSystem,
    rounds: usize,
) -> Result<Vec<ProductReport>> {
    if rounds == 0 {
        return Err(Error::InvalidArgument("at least one round is required".into()));
    }
    (1..=rounds).into_par_iter().map(|i| product_with(table, sys, i)).collect()
}

fn braid(text: &str, n: usize) -> GenWord {
    GenWord::braid(text, n).expect("library word")
}

/// Substrate `s1^(2k-1) s2^-1`: an unknot with an even number `2k` of
/// crossings once the recombination site is counted.
pub fn odd_family(k: usize) -> RecombinationSystem {
    RecombinationSystem::new(
        &format!("odd-{k}"),
        braid(&format!("s1^{} s2^-1", 2 * k - 1), 4),
        Generator::sigma(2),
        true,
    )
    .expect("valid family")
}

/// Substrate `s1^(2k) s2^-1`.
pub fn even_family(k: usize) -> RecombinationSystem {
    RecombinationSystem::new(&format!("even-{k}"), braid(&format!("s1^{} s2^-1", 2 * k), 4), Generator::sigma(2), true)
        .expect("valid family")
}

const CRE_SUBSTRATE: &str = "s1^-1 s2";

pub fn case_library() -> Vec<RecombinationSystem> {
    let sys = |name: &str, word: &str, n: usize, prefix: Generator, marked: bool| {
        RecombinationSystem::new(name, braid(word, n), prefix, marked).expect("library system")
    };
    let mut out = vec![
        sys("tn3", "s1 s3 s2^-1", 4, Generator::sigma(2), true).with_note("resolvase on directly repeated res sites"),
        sys("tn3-alt", "s1^2 s2^-1", 4, Generator::sigma(2), true)
            .with_note("same substrate with the crossings pushed to the left pair"),
        sys("gin", "s1 s2^-1", 4, Generator::sigma(2), true).with_note("invertase on gix sites"),
        sys("xercd", "s2^3 s2^-1 s4^-1 s4 s3 s2 s4^-1", 6, Generator::e(4), false)
            .with_note("plasmid dimer resolution; the action turns strands back"),
        sys("cre", CRE_SUBSTRATE, 4, Generator::sigma(2), true)
            .with_note("reconstruction: first short 4-plat unknot whose inverting product is a trefoil"),
    ];
    for k in 1..=3 {
        out.push(odd_family(k).with_note("unknotted substrate, even crossing count"));
        out.push(even_family(k).with_note("unknotted substrate, odd crossing count"));
    }
    out
}

pub fn system(name: &str) -> Option<RecombinationSystem> {
    let name = name.trim().to_ascii_lowercase();
    case_library().into_iter().find(|s| s.name == name)
}

/// Shortest 4-strand braid word (at most four letters, letters ordered
/// `s1, s1^-1, s2, s2^-1, s3, s3^-1`) whose plat closure is the unknot and
/// whose `s2`-prefixed product is a trefoil read as an inversion.
pub fn cre_search() -> Option<GenWord> {
    let letters: Vec<Generator> = (1..=3).flat_map(|i| [Generator::sigma(i), Generator::sigma_inv(i)]).collect();
    let table = KnotTable::bundled();
    let probe = RecombinationSystem {
        name: String::new(),
        substrate: GenWord::empty(4),
        prefix: Generator::sigma(2),
        marked: true,
        note: String::new(),
    };
    for len in 1..=4u32 {
        for code in 0..letters.len().pow(len) {
            let mut c = code;
            let mut word = Vec::with_capacity(len as usize);
            for _ in 0..len {
                word.push(letters[c % letters.len()]);
                c /= letters.len();
            }
            word.reverse();
            let w = GenWord::new(4, false, word).expect("valid letters");
            let sub = identify_with(table, &w, Closure::Plat).ok()?;
            if sub.name.as_deref() != Some("unknot") {
                continue;
            }
            let sys = RecombinationSystem { substrate: w.clone(), ..probe.clone() };
            let p = product_with(table, &sys, 1).ok()?;
            if p.name.trim_end_matches('*') == "3_1" && p.status == MarkStatus::Inverted {
                return Some(w);
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `s1^(2k-1) s2^-1`, read through the marks.
    OddCrossings,
    /// `s1^(2k) s2^-1`, read through the component count.
    EvenCrossings,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityRow {
    pub family: Family,
    pub k: usize,
    pub i: usize,
    pub word: String,
    pub components: usize,
    pub status: MarkStatus,
    pub holds: bool,
}

/// Both parity families for one `k` and rounds `1..=i_max`. The even
/// family should be a link exactly when `i` is odd; the odd family should
/// read inverted exactly when `i` is odd.
pub fn parity_report(k: usize, i_max: usize) -> Result<Vec<ParityRow>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let (even, odd) = (even_family(k), odd_family(k));
    let mut rows = Vec::new();
    for i in 1..=i_max {
        for (family, sys) in [(Family::EvenCrossings, &even), (Family::OddCrossings, &odd)] {
            let word = sys.round_word(i)?;
            let components = plat_closure(&word)?.component_count();
            let status = mark_status(&sys.substrate, &word)?;
            let holds = match family {
                Family::EvenCrossings => (components == 2) == (i % 2 == 1),
                Family::OddCrossings => status == if i % 2 == 1 { MarkStatus::Inverted } else { MarkStatus::Restored },
            };
            rows.push(ParityRow { family, k, i, word: word.to_string(), components, status, holds });
        }
    }
    Ok(rows)
}

/// Comparison of `plat(e_i w)`, `plat(s_i s_(i+1) w)` and
/// `plat(s_i^-1 s_(i+1)^-1 w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BmwVerdict {
    pub word: String,
    pub index: usize,
    pub components: [usize; 3],
    pub agree: bool,
    pub disagreements: Vec<String>,
}

pub fn bmw_plat_equivalence(w: &GenWord, i: usize) -> Result<BmwVerdict> {
    if i == 0 || i % 2 == 1 {
        return Err(Error::InvalidArgument(format!("index {i} must be even")));
    }
    let forms = [
        w.prefixed(Generator::e(i))?,
        w.prefixed(Generator::sigma(i + 1))?.prefixed(Generator::sigma(i))?,
        w.prefixed(Generator::sigma_inv(i + 1))?.prefixed(Generator::sigma_inv(i))?,
    ];
    let mut components = [0; 3];
    let mut keys = Vec::with_capacity(3);
    for (k, f) in forms.iter().enumerate() {
        components[k] = plat_closure(f)?.component_count();
        keys.push(jones::<i64>(f, Closure::Plat)?);
    }
    let names = ["e", "positive pair", "negative pair"];
    let mut disagreements = Vec::new();
    for k in 1..3 {
        if components[k] != components[0] {
            disagreements.push(format!("{} form has {} components, e form {}", names[k], components[k], components[0]));
        }
        if keys[k] != keys[0] {
            disagreements.push(format!("{} form has different Jones keys", names[k]));
        }
    }
    Ok(BmwVerdict { word: w.to_string(), index: i, components, agree: disagreements.is_empty(), disagreements })
}

/// `words` seeded random words on `n` strands (turn-backs allowed, up to
/// eight letters), each checked at every even index `i < n - 1`.
pub fn bmw_random_trials(seed: u64, words: usize, n: usize) -> Result<Vec<BmwVerdict>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<GenWord> = (0..words)
        .map(|_| {
            let len = rand::Rng::gen_range(&mut rng, 0..=8);
            random_word(&mut rng, n, len, true)
        })
        .collect();
    let indices: Vec<usize> = (2..n - 1).step_by(2).collect();
    samples.par_iter().flat_map_iter(|w| indices.iter().map(move |&i| bmw_plat_equivalence(w, i))).collect()
}
