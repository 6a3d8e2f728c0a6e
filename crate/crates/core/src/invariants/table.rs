//! Bundled knot and link table keyed by component count and Jones keys.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::diagram::{closure, Closure, PlanarDiagram};
use crate::error::{Error, Result};
use crate::invariants::jones::{jones, jones_of_diagram, mirror_keys};
use crate::word::GenWord;
use crate::LaurentPoly;

const BUNDLED: &str = include_str!("../../data/knot_table.json");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub crossings: u32,
    pub components: usize,
    pub keys: Vec<LaurentPoly>,
    pub mirror: String,
}

impl TableEntry {
    pub fn is_amphichiral(&self) -> bool {
        self.mirror == self.name
    }

    /// Name without the mirror marker.
    pub fn base_name(&self) -> &str {
        self.name.trim_end_matches('*')
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    name: String,
    crossings: u32,
    components: usize,
    keys: Vec<Vec<(i32, i64)>>,
    mirror: String,
}

impl From<&TableEntry> for EntryJson {
    fn from(e: &TableEntry) -> Self {
        EntryJson {
            name: e.name.clone(),
            crossings: e.crossings,
            components: e.components,
            keys: e.keys.iter().map(LaurentPoly::to_pairs).collect(),
            mirror: e.mirror.clone(),
        }
    }
}

impl From<EntryJson> for TableEntry {
    fn from(j: EntryJson) -> Self {
        let mut keys: Vec<LaurentPoly> = j.keys.into_iter().map(LaurentPoly::from_terms).collect();
        keys.sort();
        TableEntry { name: j.name, crossings: j.crossings, components: j.components, keys, mirror: j.mirror }
    }
}

/// One reference diagram per chiral pair or amphichiral entry.
struct Reference {
    name: &'static str,
    crossings: u32,
    closure: Closure,
    strands: usize,
    word: String,
}

/// Four-plat word `s2^c1 s1^-c2 s2^c3 ...` for a continued-fraction vector.
fn four_plat(c: &[u32]) -> String {
    c.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { format!("s2^{x}") } else { format!("s1^-{x}") })
        .collect::<Vec<_>>()
        .join(" ")
}

fn references() -> Vec<Reference> {
    let trace = |name, crossings, strands, word: &str| Reference {
        name,
        crossings,
        closure: Closure::Trace,
        strands,
        word: word.to_string(),
    };
    let plat = |name, crossings, c: &[u32]| Reference {
        name,
        crossings,
        closure: Closure::Plat,
        strands: 4,
        word: four_plat(c),
    };
    vec![
        trace("unknot", 0, 1, ""),
        trace("unlink2", 0, 2, ""),
        trace("unlink3", 0, 3, ""),
        trace("hopf", 2, 2, "s1^2"),
        trace("3_1", 3, 2, "s1^3"),
        trace("4_1", 4, 3, "s1 s2^-1 s1 s2^-1"),
        trace("solomon", 4, 2, "s1^4"),
        trace("5_1", 5, 2, "s1^5"),
        plat("5_2", 5, &[3, 1, 1]),
        plat("whitehead", 5, &[2, 1, 2]),
        plat("6_1", 6, &[4, 1, 1]),
        plat("6_2", 6, &[3, 1, 2]),
        plat("6_3", 6, &[2, 1, 1, 1, 1]),
        trace("t2_6", 6, 2, "s1^6"),
        trace("7_1", 7, 2, "s1^7"),
        plat("7_2", 7, &[5, 1, 1]),
        plat("7_3", 7, &[4, 2, 1]),
        plat("7_4", 7, &[3, 1, 3]),
        plat("7_5", 7, &[3, 2, 2]),
        plat("7_6", 7, &[2, 2, 1, 1, 1]),
        plat("7_7", 7, &[2, 1, 1, 1, 2]),
        trace("t2_8", 8, 2, "s1^8"),
    ]
}

/// Reference word and closure for a table name (mirror names resolve to
/// the mirrored word).
pub fn reference_word(name: &str) -> Option<(GenWord, Closure)> {
    let base = name.trim_end_matches('*');
    let r = references().into_iter().find(|r| r.name == base)?;
    let w = GenWord::braid(&r.word, r.strands).ok()?;
    Some((if name.ends_with('*') { w.mirror() } else { w }, r.closure))
}

/// Alternative spellings accepted wherever a table name is expected.
pub fn resolve_name(token: &str) -> String {
    let t = token.trim().to_ascii_lowercase();
    let (core, star) = match t.strip_suffix('*') {
        Some(c) => (c.to_string(), "*"),
        None => (t.clone(), ""),
    };
    let canonical = match core.as_str() {
        "trefoil" | "t2_3" => "3_1",
        "fig8" | "figure8" | "figure-8" | "figure_eight" => "4_1",
        "cinquefoil" | "t2_5" => "5_1",
        "t2_7" => "7_1",
        "catenane" | "t2_2" => "hopf",
        "t2_4" => "solomon",
        "unlink" => "unlink2",
        "trivial" => "unknot",
        other => other,
    };
    format!("{canonical}{star}")
}

/// Readable description of a table name.
pub fn describe(name: &str) -> String {
    let (base, mirror) = match name.strip_suffix('*') {
        Some(b) => (b, " (mirror)"),
        None => (name, ""),
    };
    let text = match base {
        "unknot" => "unknot".to_string(),
        "unlink2" => "2-component unlink".to_string(),
        "unlink3" => "3-component unlink".to_string(),
        "hopf" => "Hopf link".to_string(),
        "3_1" => "trefoil knot 3_1".to_string(),
        "4_1" => "figure-8 knot 4_1".to_string(),
        "5_1" => "cinquefoil knot 5_1".to_string(),
        "solomon" => "Solomon link T(2,4)".to_string(),
        "whitehead" => "Whitehead link".to_string(),
        "t2_6" => "torus link T(2,6)".to_string(),
        "t2_8" => "torus link T(2,8)".to_string(),
        other => format!("knot {other}"),
    };
    format!("{text}{mirror}")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotTable {
    entries: Vec<TableEntry>,
}

impl KnotTable {
    pub fn new(entries: Vec<TableEntry>) -> Self {
        Self { entries }
    }

    /// The table shipped with the crate.
    pub fn bundled() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| KnotTable::from_json(BUNDLED).expect("bundled knot table parses"))
    }

    pub fn entries(&self) -> &[TableEntry] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut Vec<TableEntry> {
        &mut self.entries
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: Vec<EntryJson> = serde_json::from_str(s).map_err(|e| Error::Table(e.to_string()))?;
        Ok(Self { entries: raw.into_iter().map(TableEntry::from).collect() })
    }

    /// One entry per line.
    pub fn to_json(&self) -> String {
        let lines: Vec<String> = self
            .entries
            .iter()
            .map(|e| serde_json::to_string(&EntryJson::from(e)).expect("entry serializes"))
            .collect();
        format!("[\n{}\n]\n", lines.join(",\n"))
    }

    /// Looks up a name or alias.
    pub fn get(&self, name: &str) -> Option<&TableEntry> {
        let name = resolve_name(name);
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn lookup(&self, components: usize, keys: &[LaurentPoly]) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.components == components && e.keys == keys)
    }

    /// Problems found: duplicate keys, broken mirror links, mirror keys not
    /// related by `A -> A^-1`. Empty when the table is consistent.
    pub fn verify(&self) -> Vec<String> {
        let mut problems = Vec::new();
        let mut seen: BTreeMap<(usize, &[LaurentPoly]), &str> = BTreeMap::new();
        for e in &self.entries {
            if let Some(prev) = seen.insert((e.components, e.keys.as_slice()), &e.name) {
                problems.push(format!("{} and {} share invariant keys", prev, e.name));
            }
            let mirrored = mirror_keys(&e.keys);
            match self.entries.iter().find(|m| m.name == e.mirror) {
                None => problems.push(format!("{}: mirror {} missing", e.name, e.mirror)),
                Some(m) => {
                    if m.mirror != e.name {
                        problems.push(format!("{}: mirror link to {} is not symmetric", e.name, m.name));
                    }
                    if m.keys != mirrored {
                        problems.push(format!("{}: keys of {} are not the A -> A^-1 image", e.name, m.name));
                    }
                    if m.components != e.components || m.crossings != e.crossings {
                        problems.push(format!("{}: mirror {} differs in size", e.name, m.name));
                    }
                }
            }
        }
        problems
    }
}

/// Computes every entry from its reference diagram by state sum, adds
/// mirror entries for chiral references and rejects key collisions.
pub fn build_knot_table() -> Result<KnotTable> {
    let mut entries: Vec<TableEntry> = Vec::new();
    for r in references() {
        let w = GenWord::braid(&r.word, r.strands)?;
        let d = closure(&w, r.closure)?;
        let keys = jones_of_diagram::<i64>(&d)?;
        let mirrored = mirror_keys(&keys);
        let components = d.component_count();
        let name = r.name.to_string();
        if mirrored == keys {
            entries.push(TableEntry { name: name.clone(), crossings: r.crossings, components, keys, mirror: name });
        } else {
            let star = format!("{name}*");
            entries.push(TableEntry {
                name: name.clone(),
                crossings: r.crossings,
                components,
                keys,
                mirror: star.clone(),
            });
            entries.push(TableEntry { name: star, crossings: r.crossings, components, keys: mirrored, mirror: name });
        }
    }
    for (i, a) in entries.iter().enumerate() {
        for b in &entries[..i] {
            if a.components == b.components && a.keys == b.keys {
                return Err(Error::TableCollision(b.name.clone(), a.name.clone()));
            }
        }
    }
    Ok(KnotTable { entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Chirality {
    Amphichiral,
    Chiral,
}

/// Result of matching a closed diagram against the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub name: Option<String>,
    pub crossings: Option<u32>,
    pub chirality: Option<Chirality>,
    pub components: usize,
    pub keys: Vec<LaurentPoly>,
}

impl Identification {
    fn from_keys(table: &KnotTable, components: usize, keys: Vec<LaurentPoly>) -> Self {
        let hit = table.lookup(components, &keys);
        Self {
            name: hit.map(|e| e.name.clone()),
            crossings: hit.map(|e| e.crossings),
            chirality: hit.map(|e| if e.is_amphichiral() { Chirality::Amphichiral } else { Chirality::Chiral }),
            components,
            keys,
        }
    }

    pub fn label(&self) -> &str {
        self.name.as_deref().unwrap_or("unclassified")
    }

    pub fn base_name(&self) -> Option<&str> {
        self.name.as_deref().map(|n| n.trim_end_matches('*'))
    }

    pub fn describe(&self) -> String {
        self.name.as_deref().map(describe).unwrap_or_else(|| "unclassified".into())
    }

    /// Whether an observation token names this product. Tokens are table
    /// names or aliases (a mirror marker is optional), `knotN`/`linkN` for
    /// any prime knot or link with crossing number `N`, or `unclassified`.
    pub fn matches_token(&self, token: &str) -> bool {
        let t = token.trim().to_ascii_lowercase();
        if t == "unclassified" {
            return self.name.is_none();
        }
        let Some(name) = self.name.as_deref() else {
            return false;
        };
        for (prefix, knot) in [("knot", true), ("link", false)] {
            if let Some(num) = t.strip_prefix(prefix) {
                if let Ok(c) = num.parse::<u32>() {
                    return self.crossings == Some(c) && (self.components == 1) == knot;
                }
            }
        }
        let want = resolve_name(&t);
        if want.ends_with('*') {
            name == want
        } else {
            self.base_name() == Some(want.as_str())
        }
    }
}

impl fmt::Display for Identification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn identify_with(table: &KnotTable, w: &GenWord, kind: Closure) -> Result<Identification> {
    let keys = jones::<i64>(w, kind)?;
    let components = closure(w, kind)?.component_count();
    Ok(Identification::from_keys(table, components, keys))
}

/// Identifies a closed word against the bundled table.
pub fn identify(w: &GenWord, kind: Closure) -> Result<Identification> {
    identify_with(KnotTable::bundled(), w, kind)
}

/// Identifies an arbitrary diagram (state-sum route).
pub fn identify_diagram(table: &KnotTable, d: &PlanarDiagram) -> Result<Identification> {
    let keys = jones_of_diagram::<i64>(d)?;
    Ok(Identification::from_keys(table, d.component_count(), keys))
}
