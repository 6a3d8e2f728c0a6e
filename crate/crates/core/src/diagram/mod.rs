//! Closed planar link diagrams built from generator words or tangles.
//!
//! A diagram is a set of vertices joined by edges. Every vertex has numbered
//! slots and every edge joins two slots, so each edge identifier occurs
//! exactly twice. Four-valent vertices use counter-clockwise slots
//! `0 = top right, 1 = top left, 2 = bottom left, 3 = bottom right`.
//!
//! * crossings pass straight through (`s <-> s+2`); the strand through
//!   slots 0 and 2 is over when `over_first` is set
//! * smoothers turn back, pairing `0-1` and `2-3`
//! * bends are two-valent points on closure arcs, pairing `0-1`

mod svg;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::word::{GenKind, GenWord};

pub use svg::{render_diagram, render_word};

/// `(vertex, slot)`.
pub type Port = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexKind {
    Crossing { over_first: bool },
    Smoother,
    Bend,
}

impl VertexKind {
    pub fn valence(&self) -> usize {
        match self {
            VertexKind::Bend => 2,
            _ => 4,
        }
    }

    /// Slot reached by walking straight through the vertex.
    pub fn partner(&self, slot: usize) -> usize {
        match self {
            VertexKind::Crossing { .. } => (slot + 2) % 4,
            VertexKind::Smoother | VertexKind::Bend => slot ^ 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub kind: VertexKind,
    /// Edge at each slot.
    pub edges: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Closure {
    Plat,
    Trace,
}

impl FromStr for Closure {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plat" => Ok(Closure::Plat),
            "trace" => Ok(Closure::Trace),
            _ => Err(Error::Parse(format!("unknown closure `{s}` (expected plat or trace)"))),
        }
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Closure::Plat => "plat",
            Closure::Trace => "trace",
        })
    }
}

/// A named closure arc. Plat caps and cups are numbered by strand pair
/// (`j` joins strands `2j-1` and `2j`); trace arcs by strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClosureArc {
    Top(usize),
    Bottom(usize),
    Trace(usize),
}

/// Direction along a closure arc. Trace arcs leave the bottom of the braid
/// heading right, so `LeftToRight` there means bottom-to-top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ArcDirection {
    LeftToRight,
    RightToLeft,
}

/// Drawing coordinates recorded by the word builder.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Geometry {
    pub width: f64,
    pub height: f64,
    pub centers: Vec<(f64, f64)>,
    pub ports: Vec<Vec<(f64, f64)>>,
    /// SVG path data and a label anchor per edge.
    pub paths: Vec<(String, (f64, f64))>,
}

#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    vertices: Vec<Vertex>,
    ends: Vec<[Port; 2]>,
    extra_loops: usize,
    arcs: Vec<(ClosureArc, usize)>,
    pub(crate) geometry: Option<Geometry>,
}

impl PartialEq for PlanarDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.ends == other.ends && self.extra_loops == other.extra_loops
    }
}

impl Eq for PlanarDiagram {}

/// Incremental construction: add vertices, then join slots pairwise.
#[derive(Default)]
pub struct DiagramBuilder {
    kinds: Vec<VertexKind>,
    slots: Vec<Vec<Option<usize>>>,
    ends: Vec<[Port; 2]>,
    arcs: Vec<(ClosureArc, usize)>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, kind: VertexKind) -> usize {
        self.kinds.push(kind);
        self.slots.push(vec![None; kind.valence()]);
        self.kinds.len() - 1
    }

    pub fn crossing(&mut self, over_first: bool) -> usize {
        self.vertex(VertexKind::Crossing { over_first })
    }

    pub fn smoother(&mut self) -> usize {
        self.vertex(VertexKind::Smoother)
    }

    pub fn bend(&mut self) -> usize {
        self.vertex(VertexKind::Bend)
    }

    /// New edge running from `tail` to `head`.
    pub fn connect(&mut self, tail: Port, head: Port) -> usize {
        let id = self.ends.len();
        for (v, s) in [tail, head] {
            let slot = &mut self.slots[v][s];
            assert!(slot.is_none(), "slot {s} of vertex {v} joined twice");
            *slot = Some(id);
        }
        self.ends.push([tail, head]);
        id
    }

    pub fn name_arc(&mut self, arc: ClosureArc, edge: usize) {
        self.arcs.push((arc, edge));
    }

    pub fn finish(self, extra_loops: usize) -> Result<PlanarDiagram> {
        let mut vertices = Vec::with_capacity(self.kinds.len());
        for (v, (kind, slots)) in self.kinds.into_iter().zip(self.slots).enumerate() {
            let edges = slots
                .into_iter()
                .enumerate()
                .map(|(s, e)| e.ok_or_else(|| Error::InvalidDiagram(format!("slot {s} of vertex {v} is open"))))
                .collect::<Result<Vec<_>>>()?;
            vertices.push(Vertex { kind, edges });
        }
        Ok(PlanarDiagram { vertices, ends: self.ends, extra_loops, arcs: self.arcs, geometry: None })
    }
}

/// A traversed component: edges in order, with `true` when walked tail to head.
pub type Component = Vec<(usize, bool)>;

impl PlanarDiagram {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn edge_ends(&self, e: usize) -> [Port; 2] {
        self.ends[e]
    }

    pub fn extra_loops(&self) -> usize {
        self.extra_loops
    }

    pub fn crossing_count(&self) -> usize {
        self.vertices.iter().filter(|v| matches!(v.kind, VertexKind::Crossing { .. })).count()
    }

    pub fn smoother_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Smoother).count()
    }

    /// Components containing no crossing or smoother.
    pub fn free_loop_count(&self) -> usize {
        let free = self
            .components()
            .iter()
            .filter(|c| {
                c.iter().all(|&(e, _)| self.ends[e].iter().all(|&(v, _)| self.vertices[v].kind == VertexKind::Bend))
            })
            .count();
        free + self.extra_loops
    }

    pub fn arc_edge(&self, arc: ClosureArc) -> Option<usize> {
        self.arcs.iter().find(|(a, _)| *a == arc).map(|&(_, e)| e)
    }

    pub fn arcs(&self) -> &[(ClosureArc, usize)] {
        &self.arcs
    }

    fn edge_at(&self, (v, s): Port) -> usize {
        self.vertices[v].edges[s]
    }

    /// Port where a walk along `e` arrives.
    fn arrival(&self, e: usize, forward: bool) -> Port {
        self.ends[e][usize::from(forward)]
    }

    /// Edge and direction following `e` when walked in `forward` direction.
    fn step(&self, e: usize, forward: bool) -> (usize, bool) {
        let (v, s) = self.arrival(e, forward);
        let out = (v, self.vertices[v].kind.partner(s));
        let next = self.edge_at(out);
        (next, self.ends[next][0] == out)
    }

    /// Components, each starting at its smallest edge and heading toward the
    /// smaller neighbouring edge. Extra loops are not included.
    pub fn components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.ends.len()];
        let mut out = Vec::new();
        for start in 0..self.ends.len() {
            if seen[start] {
                continue;
            }
            let ahead = self.step(start, true).0;
            let behind = self.step(start, false).0;
            let forward = ahead <= behind;
            let mut comp = Vec::new();
            let (mut e, mut f) = (start, forward);
            loop {
                seen[e] = true;
                comp.push((e, f));
                (e, f) = self.step(e, f);
                if e == start && f == forward {
                    break;
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.extra_loops
    }

    /// Component index of every edge under the default traversal.
    pub fn edge_components(&self) -> Vec<usize> {
        let mut of = vec![0; self.ends.len()];
        for (i, comp) in self.components().iter().enumerate() {
            for &(e, _) in comp {
                of[e] = i;
            }
        }
        of
    }

    /// Crossing signs under the default traversal orientation, one entry per
    /// crossing vertex in vertex order: `(vertex, sign, over component,
    /// under component)`.
    pub fn oriented_crossings(&self) -> Vec<(usize, i32, usize, usize)> {
        let mut entered = vec![[false; 4]; self.vertices.len()];
        let mut comp_of = vec![0; self.ends.len()];
        for (i, comp) in self.components().iter().enumerate() {
            for &(e, f) in comp {
                comp_of[e] = i;
                let (v, s) = self.arrival(e, f);
                if self.vertices[v].kind.valence() == 4 {
                    entered[v][s] = true;
                }
            }
        }
        let mut out = Vec::new();
        for (v, vert) in self.vertices.iter().enumerate() {
            let VertexKind::Crossing { over_first } = vert.kind else {
                continue;
            };
            let (o0, u0) = if over_first { (0, 1) } else { (1, 0) };
            let a = if entered[v][o0] { o0 } else { o0 + 2 };
            let b = if entered[v][u0] { u0 } else { u0 + 2 };
            let sign = if (b + 4 - a) % 4 == 1 { 1 } else { -1 };
            out.push((v, sign, comp_of[vert.edges[a]], comp_of[vert.edges[b]]));
        }
        out
    }

    /// Sum of crossing signs under the default orientation.
    pub fn writhe(&self) -> i64 {
        self.oriented_crossings().iter().map(|c| c.1 as i64).sum()
    }

    /// Writhe for every orientation class, fixing the first component and
    /// flipping the others in binary order (bit `k` flips component `k+1`).
    /// Extra loops count as components but never change the writhe.
    pub fn orientation_writhes(&self) -> Vec<i64> {
        let comps = self.component_count();
        let crossings = self.oriented_crossings();
        let classes = 1usize << comps.saturating_sub(1);
        (0..classes)
            .map(|mask| {
                let flipped = |c: usize| c > 0 && (mask >> (c - 1)) & 1 == 1;
                crossings.iter().map(|&(_, s, o, u)| if flipped(o) != flipped(u) { -s as i64 } else { s as i64 }).sum()
            })
            .collect()
    }

    /// Crossings in vertex order, then smoothers.
    fn four_valent(&self) -> impl Iterator<Item = &Vertex> {
        let crossings = self.vertices.iter().filter(|v| matches!(v.kind, VertexKind::Crossing { .. }));
        crossings.chain(self.vertices.iter().filter(|v| v.kind == VertexKind::Smoother))
    }

    /// Joins the edges through every bend, leaving only crossings and
    /// smoothers. Returns the contracted edge id (from 1) for each 4-valent
    /// slot and the number of closed loops that contain no 4-valent vertex.
    fn contracted(&self) -> (Vec<Vec<usize>>, usize) {
        let mut uf = UnionFind::new(self.ends.len());
        for v in self.vertices.iter().filter(|v| v.kind == VertexKind::Bend) {
            uf.union(v.edges[0], v.edges[1]);
        }
        let mut label: BTreeMap<usize, usize> = BTreeMap::new();
        let mut slots = Vec::new();
        for v in self.four_valent() {
            let ids = v
                .edges
                .iter()
                .map(|&e| {
                    let root = uf.find(e);
                    let next = label.len() + 1;
                    *label.entry(root).or_insert(next)
                })
                .collect();
            slots.push(ids);
        }
        let mut loops = std::collections::BTreeSet::new();
        for e in 0..self.ends.len() {
            let root = uf.find(e);
            if !label.contains_key(&root) {
                loops.insert(root);
            }
        }
        (slots, loops.len())
    }

    /// Planar-diagram code with bends contracted:
    /// `{"crossings":[[e1,e2,e3,e4,"over_first"],...],"smoothers":[[...]],"loops":k}`.
    pub fn to_pd_json(&self) -> String {
        let (slots, loops) = self.contracted();
        let mut crossings = Vec::new();
        let mut smoothers = Vec::new();
        for (v, ids) in self.four_valent().zip(slots) {
            let mut row: Vec<Value> = ids.into_iter().map(Value::from).collect();
            match v.kind {
                VertexKind::Crossing { over_first } => {
                    row.push(Value::from(if over_first { "over_first" } else { "under_first" }));
                    crossings.push(Value::Array(row));
                }
                _ => smoothers.push(Value::Array(row)),
            }
        }
        #[derive(Serialize)]
        struct Pd {
            crossings: Vec<Value>,
            smoothers: Vec<Value>,
            loops: usize,
        }
        let doc = Pd { crossings, smoothers, loops: loops + self.extra_loops };
        serde_json::to_string(&doc).expect("pd code serializes")
    }

    /// Reads the format written by [`PlanarDiagram::to_pd_json`].
    pub fn from_pd_json(s: &str) -> Result<Self> {
        #[derive(Deserialize)]
        struct Pd {
            #[serde(default)]
            crossings: Vec<Vec<Value>>,
            #[serde(default)]
            smoothers: Vec<Vec<Value>>,
            #[serde(default)]
            loops: usize,
        }
        let pd: Pd = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let bad = |msg: String| Error::InvalidDiagram(msg);
        let labels = |row: &[Value]| -> Result<[i64; 4]> {
            let mut out = [0; 4];
            for (k, slot) in out.iter_mut().enumerate() {
                *slot = row
                    .get(k)
                    .and_then(Value::as_i64)
                    .ok_or_else(|| bad(format!("vertex row {row:?} needs four integer labels")))?;
            }
            Ok(out)
        };
        let mut b = DiagramBuilder::new();
        let mut pending: BTreeMap<i64, Vec<Port>> = BTreeMap::new();
        for row in &pd.crossings {
            let over_first = match row.get(4).and_then(Value::as_str) {
                Some("over_first") => true,
                Some("under_first") => false,
                _ => return Err(bad(format!("crossing {row:?} needs an over_first/under_first tag"))),
            };
            let ids = labels(row)?;
            let v = b.crossing(over_first);
            for (s, id) in ids.into_iter().enumerate() {
                pending.entry(id).or_default().push((v, s));
            }
        }
        for row in &pd.smoothers {
            let ids = labels(row)?;
            let v = b.smoother();
            for (s, id) in ids.into_iter().enumerate() {
                pending.entry(id).or_default().push((v, s));
            }
        }
        for (id, ports) in pending {
            if ports.len() != 2 {
                return Err(bad(format!("edge {id} appears {} times", ports.len())));
            }
            b.connect(ports[0], ports[1]);
        }
        b.finish(pd.loops)
    }
}

#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

const SPACING: f64 = 40.0;
const ROW: f64 = 40.0;
const MARGIN: f64 = 30.0;

fn fmt_pt((x, y): (f64, f64)) -> String {
    format!("{x:.2} {y:.2}")
}

fn line_path(a: (f64, f64), b: (f64, f64)) -> String {
    format!("M {} L {}", fmt_pt(a), fmt_pt(b))
}

fn close_word(w: &GenWord, closure: Closure) -> Result<PlanarDiagram> {
    if w.has_affine_letters() || w.is_affine() {
        return Err(Error::AffineClosure);
    }
    let n = w.strands();
    if closure == Closure::Plat && n % 2 == 1 {
        return Err(Error::OddStrandCount(n));
    }
    let trace_room = if closure == Closure::Trace { n as f64 * SPACING * 0.5 } else { 0.0 };
    let top = MARGIN + if closure == Closure::Trace { trace_room } else { SPACING * 0.5 };
    let x = |p: usize| MARGIN + p as f64 * SPACING;
    let row_y = |k: usize| top + (k as f64 + 1.0) * ROW;
    let bottom = row_y(w.len());
    let half = ROW * 0.35;

    let mut b = DiagramBuilder::new();
    let mut centers = Vec::new();
    let mut ports: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut add = |b: &mut DiagramBuilder, kind: VertexKind, c: (f64, f64), p: Vec<(f64, f64)>| {
        centers.push(c);
        ports.push(p);
        b.vertex(kind)
    };
    let mut open: Vec<Port> = Vec::with_capacity(n);
    let mut top_bends = Vec::new();
    let mut arc_paths: BTreeMap<usize, (String, (f64, f64))> = BTreeMap::new();

    match closure {
        Closure::Plat => {
            for j in 0..n / 2 {
                let (xl, xr) = (x(2 * j), x(2 * j + 1));
                let l = add(&mut b, VertexKind::Bend, (xl, top), vec![(xl, top), (xl, top)]);
                let r = add(&mut b, VertexKind::Bend, (xr, top), vec![(xr, top), (xr, top)]);
                let e = b.connect((l, 0), (r, 0));
                b.name_arc(ClosureArc::Top(j + 1), e);
                let rad = (xr - xl) / 2.0;
                let path = format!("M {} A {rad:.2} {rad:.2} 0 0 1 {}", fmt_pt((xl, top)), fmt_pt((xr, top)));
                arc_paths.insert(e, (path, ((xl + xr) / 2.0, top - rad - 6.0)));
                open.push((l, 1));
                open.push((r, 1));
            }
        }
        Closure::Trace => {
            for p in 0..n {
                let t = add(&mut b, VertexKind::Bend, (x(p), top), vec![(x(p), top), (x(p), top)]);
                top_bends.push(t);
                open.push((t, 1));
            }
        }
    }

    for (k, g) in w.letters().iter().enumerate() {
        let p = g.index - 1;
        let y = row_y(k);
        let (xl, xr) = (x(p), x(p + 1));
        let corner = vec![(xr, y - half), (xl, y - half), (xl, y + half), (xr, y + half)];
        let kind = match g.kind {
            GenKind::Sigma => VertexKind::Crossing { over_first: true },
            GenKind::SigmaInv => VertexKind::Crossing { over_first: false },
            GenKind::E => VertexKind::Smoother,
            GenKind::X1 | GenKind::X1Inv => unreachable!("affine letters rejected above"),
        };
        let v = add(&mut b, kind, ((xl + xr) / 2.0, y), corner);
        b.connect(open[p], (v, 1));
        b.connect(open[p + 1], (v, 0));
        open[p] = (v, 2);
        open[p + 1] = (v, 3);
    }

    match closure {
        Closure::Plat => {
            for j in 0..n / 2 {
                let (xl, xr) = (x(2 * j), x(2 * j + 1));
                let l = add(&mut b, VertexKind::Bend, (xl, bottom), vec![(xl, bottom), (xl, bottom)]);
                let r = add(&mut b, VertexKind::Bend, (xr, bottom), vec![(xr, bottom), (xr, bottom)]);
                b.connect(open[2 * j], (l, 0));
                b.connect(open[2 * j + 1], (r, 0));
                let e = b.connect((l, 1), (r, 1));
                b.name_arc(ClosureArc::Bottom(j + 1), e);
                let rad = (xr - xl) / 2.0;
                let path = format!("M {} A {rad:.2} {rad:.2} 0 0 0 {}", fmt_pt((xl, bottom)), fmt_pt((xr, bottom)));
                arc_paths.insert(e, (path, ((xl + xr) / 2.0, bottom + rad + 14.0)));
            }
        }
        Closure::Trace => {
            let right = x(n - 1);
            for p in 0..n {
                let d = (n - p) as f64 * SPACING * 0.5;
                let bb = add(&mut b, VertexKind::Bend, (x(p), bottom), vec![(x(p), bottom), (x(p), bottom)]);
                b.connect(open[p], (bb, 0));
                let e = b.connect((bb, 1), (top_bends[p], 0));
                b.name_arc(ClosureArc::Trace(p + 1), e);
                let pts = [
                    (x(p), bottom),
                    (x(p), bottom + d),
                    (right + d, bottom + d),
                    (right + d, top - d),
                    (x(p), top - d),
                    (x(p), top),
                ];
                let mut path = format!("M {}", fmt_pt(pts[0]));
                for q in &pts[1..] {
                    path.push_str(&format!(" L {}", fmt_pt(*q)));
                }
                arc_paths.insert(e, (path, (right + d + 6.0, (top + bottom) / 2.0)));
            }
        }
    }

    let mut d = b.finish(0)?;
    let mut paths = Vec::with_capacity(d.ends.len());
    for (e, &[(tv, ts), (hv, hs)]) in d.ends.iter().enumerate() {
        let a = ports[tv][ts];
        let c = ports[hv][hs];
        let mid = ((a.0 + c.0) / 2.0, (a.1 + c.1) / 2.0);
        match arc_paths.remove(&e) {
            Some(entry) => paths.push(entry),
            None => paths.push((line_path(a, c), mid)),
        }
    }
    let width = 2.0 * MARGIN + (n as f64 - 1.0) * SPACING + trace_room + SPACING * 0.5;
    let height = bottom + top;
    d.geometry = Some(Geometry { width, height, centers, ports, paths });
    Ok(d)
}

/// Joins strands `(2j-1, 2j)` at the top and at the bottom.
pub fn plat_closure(w: &GenWord) -> Result<PlanarDiagram> {
    close_word(w, Closure::Plat)
}

/// Joins each bottom endpoint to the top endpoint in the same position.
pub fn trace_closure(w: &GenWord) -> Result<PlanarDiagram> {
    close_word(w, Closure::Trace)
}

pub fn closure(w: &GenWord, kind: Closure) -> Result<PlanarDiagram> {
    close_word(w, kind)
}

pub fn component_count(d: &PlanarDiagram) -> usize {
    d.component_count()
}

/// A label attached to an edge with a direction relative to the edge's
/// stored orientation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mark {
    pub label: String,
    pub forward: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedDiagram {
    pub diagram: PlanarDiagram,
    pub marks: BTreeMap<usize, Mark>,
}

/// Signed circular sequence of labels read along one component.
pub type MarkedSequence = Vec<(String, i8)>;

impl MarkedDiagram {
    pub fn new(diagram: PlanarDiagram) -> Self {
        Self { diagram, marks: BTreeMap::new() }
    }

    pub fn mark_edge(&mut self, edge: usize, forward: bool, label: &str) -> Result<()> {
        if edge >= self.diagram.edge_count() {
            return Err(Error::InvalidDiagram(format!("no edge {edge}")));
        }
        if self.marks.contains_key(&edge) {
            return Err(Error::InvalidDiagram(format!("edge {edge} already marked")));
        }
        if self.marks.values().any(|m| m.label == label) {
            return Err(Error::InvalidDiagram(format!("label {label} already used")));
        }
        self.marks.insert(edge, Mark { label: label.to_string(), forward });
        Ok(())
    }

    pub fn mark_arc(&mut self, arc: ClosureArc, dir: ArcDirection, label: &str) -> Result<()> {
        let edge = self
            .diagram
            .arc_edge(arc)
            .ok_or_else(|| Error::InvalidDiagram(format!("diagram has no closure arc {arc:?}")))?;
        self.mark_edge(edge, dir == ArcDirection::LeftToRight, label)
    }

    /// Direction in which the default traversal walks the given arc.
    pub fn traversal_direction(&self, arc: ClosureArc) -> Option<ArcDirection> {
        let edge = self.diagram.arc_edge(arc)?;
        let comps = self.diagram.components();
        let forward = comps.iter().flatten().find(|(e, _)| *e == edge)?.1;
        Some(if forward { ArcDirection::LeftToRight } else { ArcDirection::RightToLeft })
    }

    /// Labels met along each component, signed `+1` where the traversal agrees
    /// with the mark, canonical up to rotation and reversal-with-negation.
    /// Extra loops contribute empty sequences at the end.
    pub fn read_sequences(&self) -> Vec<MarkedSequence> {
        let mut out: Vec<MarkedSequence> = self
            .diagram
            .components()
            .iter()
            .map(|comp| {
                let seq: MarkedSequence = comp
                    .iter()
                    .filter_map(|(e, f)| {
                        self.marks.get(e).map(|m| (m.label.clone(), if *f == m.forward { 1 } else { -1 }))
                    })
                    .collect();
                canonical_signed_cycle(&seq)
            })
            .collect();
        out.extend(std::iter::repeat_with(Vec::new).take(self.diagram.extra_loops));
        out
    }
}

pub fn read_marked_sequence(m: &MarkedDiagram) -> Vec<MarkedSequence> {
    m.read_sequences()
}

/// Least rotation of the sequence or of its reversal with signs negated.
pub fn canonical_signed_cycle(seq: &[(String, i8)]) -> MarkedSequence {
    if seq.is_empty() {
        return Vec::new();
    }
    let reflected: MarkedSequence = seq.iter().rev().map(|(l, s)| (l.clone(), -s)).collect();
    let mut best: Option<MarkedSequence> = None;
    for base in [seq.to_vec(), reflected] {
        for r in 0..base.len() {
            let mut cand = base[r..].to_vec();
            cand.extend_from_slice(&base[..r]);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plat_of_empty_word_is_two_loops() {
        let d = plat_closure(&GenWord::empty(4)).unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(d.free_loop_count(), 2);
        assert_eq!(d.to_pd_json(), r#"{"crossings":[],"smoothers":[],"loops":2}"#);
    }

    #[test]
    fn every_edge_appears_twice() {
        let d = plat_closure(&GenWord::braid("s2 s1 e3 s2^-1", 4).unwrap()).unwrap();
        let mut count = vec![0; d.edge_count()];
        for v in d.vertices() {
            for &e in &v.edges {
                count[e] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == 2));
        let visited: usize = d.components().iter().map(Vec::len).sum();
        assert_eq!(visited, d.edge_count());
    }

    #[test]
    fn pd_round_trip_keeps_structure() {
        let d = trace_closure(&GenWord::braid("s1 s2^-1 s1 e2", 3).unwrap()).unwrap();
        let pd = d.to_pd_json();
        let back = PlanarDiagram::from_pd_json(&pd).unwrap();
        assert_eq!(back.to_pd_json(), pd);
        assert_eq!(back.component_count(), d.component_count());
        assert_eq!(back.crossing_count(), 3);
    }

    #[test]
    fn pd_import_rejects_dangling_edges() {
        assert!(PlanarDiagram::from_pd_json(r#"{"crossings":[[1,2,3,4,"over_first"]],"loops":0}"#).is_err());
    }

    #[test]
    fn canonical_cycle_merges_reflections() {
        let s = |v: &[(&str, i8)]| v.iter().map(|(l, x)| (l.to_string(), *x)).collect::<Vec<_>>();
        let a = canonical_signed_cycle(&s(&[("L", 1), ("U", -1)]));
        let b = canonical_signed_cycle(&s(&[("U", 1), ("L", -1)]));
        assert_eq!(a, b);
    }
}
