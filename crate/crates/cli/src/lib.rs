//! Command-line driver. `run` is the whole program minus process exit, so
//! tests can drive it in-process.

mod args;

use std::fs;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use serde_json::{json, Value};

use genotop::diagram::{
    closure, render_diagram, render_word, ArcDirection, Closure, ClosureArc, MarkedDiagram, PlanarDiagram,
};
use genotop::genome::{
    breakpoint_cycle_bound, circular_swap_distance, distance_bfs, linear_reversal_distance, swap_distance_fast,
    terminus_orbit, AffinePermutation, CircularGenome, Distance, GeneratorSet, MAX_LINEAR_REGIONS,
};
use genotop::invariants::{
    bracket_statesum, build_knot_table, describe, identify_diagram, jones_of_diagram, kauffman_bracket, word_to_tl,
    KnotTable, TlElement,
};
use genotop::recombination::{
    bmw_plat_equivalence, bmw_random_trials, case_library, cre_search, parity_report, processive_series, system,
    RecombinationSystem,
};
use genotop::tangle::{
    numerator_closure, processive_products, solve_processive, two_bridge_classify, RationalTangle, SearchBound,
    TangleSum,
};
use genotop::{CrossingEdit, Fraction, GenWord, Generator, LaurentPoly, SignedPermutation};

use args::*;
pub use args::{Cli, Format};

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<genotop::Error> for Failure {
    fn from(e: genotop::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

/// What a command produced, in every format it supports.
struct Output {
    json: Value,
    text: String,
    svg: Option<String>,
    /// Set when the command ran but its verdict is negative.
    failed: bool,
}

impl Output {
    fn new(json: Value, text: impl Into<String>) -> Self {
        Self { json, text: text.into(), svg: None, failed: false }
    }
}

/// Runs one invocation. Exit codes: 0 success, 1 domain error or failed
/// check, 2 usage error.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let result = check_caps(&cli.caps).and_then(|_| dispatch(&cli));
    match result {
        Ok(o) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&o.json).expect("json values serialize") + "\n",
                Format::Text => o.text,
                Format::Svg => match o.svg {
                    Some(s) => s,
                    None => {
                        let _ = writeln!(err, "error: --format svg is only available for diagram commands");
                        return 2;
                    }
                },
            };
            let _ = write!(out, "{body}");
            i32::from(o.failed)
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn check_caps(c: &Caps) -> Result<(), Failure> {
    let limits = [
        ("--max-strands", c.max_strands, genotop::invariants::MAX_TL_STRANDS),
        ("--max-crossings", c.max_crossings, genotop::invariants::MAX_STATE_SUM_CROSSINGS),
        ("--max-bfs-n", c.max_bfs_n, genotop::genome::MAX_BFS_REGIONS),
    ];
    for (flag, v, limit) in limits {
        if v > limit {
            return Err(Failure::Usage(format!("{flag} {v} exceeds the supported limit {limit}")));
        }
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> Outcome {
    let caps = &cli.caps;
    match &cli.command {
        Command::Braid(c) => braid(c, caps),
        Command::Closure(a) => closure_cmd(a, caps),
        Command::Invariant(c) => invariant(c, caps),
        Command::Tangle(c) => tangle(c),
        Command::Genome(c) => genome(c, caps),
        Command::Recombine(c) => recombine(c, caps, cli.seed),
        Command::Table(c) => table(c),
        Command::Reproduce(a) => reproduce(a, cli.seed),
    }
}

fn word(a: &WordArgs, caps: &Caps) -> Result<GenWord, Failure> {
    if a.n > caps.max_strands {
        return Err(Failure::Usage(format!("--n {} is above --max-strands {}", a.n, caps.max_strands)));
    }
    let w = GenWord::parse(&a.word, a.n, a.affine)?;
    check_crossings(&w, caps)?;
    Ok(w)
}

fn check_crossings(w: &GenWord, caps: &Caps) -> Result<(), Failure> {
    if w.crossing_count() > caps.max_crossings {
        return Err(Failure::Usage(format!(
            "word has {} crossings, above --max-crossings {}",
            w.crossing_count(),
            caps.max_crossings
        )));
    }
    Ok(())
}

fn word_output(w: &GenWord) -> Output {
    let mut o = Output::new(serde_json::from_str(&w.to_json()).expect("word json"), format!("{w}\n"));
    if !w.is_affine() {
        o.svg = Some(render_word(w));
    }
    o
}

fn braid(c: &BraidCmd, caps: &Caps) -> Outcome {
    Ok(match c {
        BraidCmd::Simplify(a) => word_output(&word(a, caps)?.free_reduce()),
        BraidCmd::Compose { first, second } => {
            let top = word(first, caps)?;
            let bottom = word(&WordArgs { word: second.clone(), ..first.clone() }, caps)?;
            word_output(&top.compose(&bottom)?)
        }
        BraidCmd::Invert(a) => word_output(&word(a, caps)?.invert()?),
        BraidCmd::Mirror(a) => word_output(&word(a, caps)?.mirror()),
        BraidCmd::Permutation(a) => {
            let p = word(a, caps)?.underlying_permutation()?;
            Output::new(json!(p.images()), format!("{p}\n"))
        }
        BraidCmd::Typeb(a) => {
            let p = word(&WordArgs { affine: true, ..a.clone() }, caps)?.quotient_to_type_b()?;
            Output::new(json!({"permutation": p.images(), "length": p.type_b_length()}), format!("{p}\n"))
        }
        BraidCmd::Edit { word: a, pos, mode } => {
            let mode = match mode {
                EditMode::Swap => CrossingEdit::Swap,
                EditMode::Smooth => CrossingEdit::Smooth,
            };
            word_output(&word(a, caps)?.edit_crossing(*pos, mode)?)
        }
        BraidCmd::Draw(a) => {
            let w = word(a, caps)?;
            let mut o = word_output(&w);
            o.text = o.svg.clone().ok_or(genotop::Error::AffineClosure)?;
            o
        }
    })
}

fn parse_mark(spec: &str) -> Result<(ClosureArc, ArcDirection, String), Failure> {
    let bad = || Failure::Usage(format!("--mark `{spec}`: expected ARC:DIR:LABEL such as bottom1:ltr:a"));
    let mut parts = spec.splitn(3, ':');
    let (arc, dir, label) =
        (parts.next().ok_or_else(bad)?, parts.next().ok_or_else(bad)?, parts.next().ok_or_else(bad)?);
    let split = arc.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
    let index: usize = arc[split..].parse().map_err(|_| bad())?;
    let arc = match &arc[..split] {
        "top" => ClosureArc::Top(index),
        "bottom" => ClosureArc::Bottom(index),
        "trace" => ClosureArc::Trace(index),
        _ => return Err(bad()),
    };
    let dir = match dir {
        "ltr" => ArcDirection::LeftToRight,
        "rtl" => ArcDirection::RightToLeft,
        _ => return Err(bad()),
    };
    Ok((arc, dir, label.to_string()))
}

fn closure_kind(s: &str) -> Result<Closure, Failure> {
    s.parse().map_err(|e: genotop::Error| Failure::Usage(format!("--kind: {e}")))
}

fn diagram_json(d: &PlanarDiagram) -> Value {
    json!({
        "components": d.component_count(),
        "crossings": d.crossing_count(),
        "smoothers": d.smoother_count(),
        "pd": serde_json::from_str::<Value>(&d.to_pd_json()).expect("pd json"),
    })
}

fn closure_cmd(a: &ClosureArgs, caps: &Caps) -> Outcome {
    let w = word(&a.word, caps)?;
    let kind = closure_kind(&a.kind)?;
    let d = closure(&w, kind)?;
    let mut m = MarkedDiagram::new(d.clone());
    for spec in &a.marks {
        let (arc, dir, label) = parse_mark(spec)?;
        m.mark_arc(arc, dir, &label)?;
    }
    let mut json = diagram_json(&d);
    let mut text = format!("{kind} closure: {} components, {} crossings\n", d.component_count(), d.crossing_count());
    if !a.marks.is_empty() {
        let seqs = m.read_sequences();
        json["sequences"] = json!(seqs);
        for s in &seqs {
            let items: Vec<String> =
                s.iter().map(|(l, sign)| if *sign > 0 { l.clone() } else { format!("-{l}") }).collect();
            text.push_str(&format!("({})\n", items.join(", ")));
        }
    }
    text.push_str(&d.to_pd_json());
    text.push('\n');
    let mut o = Output::new(json, text);
    o.svg = Some(render_diagram(&d, if a.marks.is_empty() { None } else { Some(&m.marks) }));
    Ok(o)
}

fn load_table(path: Option<&Path>) -> Result<KnotTable, Failure> {
    match path {
        None => Ok(KnotTable::bundled().clone()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
            Ok(KnotTable::from_json(&text)?)
        }
    }
}

/// The diagram plus, for word sources, the word and closure it came from.
fn source(a: &InvariantArgs, caps: &Caps) -> Result<(PlanarDiagram, Option<(GenWord, Closure)>), Failure> {
    let s = &a.source;
    if let Some(p) = &s.pd {
        let text = fs::read_to_string(p).map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
        return Ok((PlanarDiagram::from_pd_json(&text)?, None));
    }
    let (text, kind) = match (&s.plat, &s.trace) {
        (Some(t), _) => (t, Closure::Plat),
        (_, Some(t)) => (t, Closure::Trace),
        _ => return Err(Failure::Usage("one of --plat, --trace or --pd is required".into())),
    };
    let n = a.n.ok_or_else(|| Failure::Usage("--n is required with --plat and --trace".into()))?;
    let w = word(&WordArgs { word: text.clone(), n, affine: false }, caps)?;
    Ok((closure(&w, kind)?, Some((w, kind))))
}

fn poly_list(keys: &[LaurentPoly]) -> (Value, String) {
    let strings: Vec<String> = keys.iter().map(LaurentPoly::to_string).collect();
    let text = strings.join("\n") + "\n";
    (json!(strings), text)
}

fn invariant(c: &InvariantCmd, caps: &Caps) -> Outcome {
    Ok(match c {
        InvariantCmd::Bracket(a) => {
            let (d, w) = source(a, caps)?;
            let b: LaurentPoly = match w {
                Some((w, kind)) => kauffman_bracket(&w, kind)?,
                None => bracket_statesum(&d)?,
            };
            Output::new(json!(b.to_string()), format!("{b}\n"))
        }
        InvariantCmd::Statesum(a) => {
            let (d, _) = source(a, caps)?;
            let b: LaurentPoly = bracket_statesum(&d)?;
            Output::new(json!(b.to_string()), format!("{b}\n"))
        }
        InvariantCmd::Jones(a) => {
            let (d, _) = source(a, caps)?;
            let (json, text) = poly_list(&jones_of_diagram::<i64>(&d)?);
            Output::new(json, text)
        }
        InvariantCmd::Identify(a) => {
            let table = load_table(a.table.as_deref())?;
            let (d, _) = source(a, caps)?;
            let id = identify_diagram(&table, &d)?;
            let (keys, _) = poly_list(&id.keys);
            Output::new(
                json!({
                    "name": id.label(),
                    "description": id.describe(),
                    "crossings": id.crossings,
                    "components": id.components,
                    "chirality": id.chirality,
                    "keys": keys,
                }),
                format!("{} ({})\n", id.label(), id.describe()),
            )
        }
        InvariantCmd::Tl { words, n } => {
            let mut acc = TlElement::<i64>::identity(*n);
            for text in words {
                let w = word(&WordArgs { word: text.clone(), n: *n, affine: false }, caps)?;
                acc = acc.multiply(&word_to_tl(&w)?)?;
            }
            let terms: Vec<(Vec<usize>, String)> =
                acc.terms().map(|(d, coeff)| ((0..2 * n).map(|i| d.partner(i)).collect(), coeff.to_string())).collect();
            let text: String = terms.iter().map(|(p, c)| format!("({c}) {p:?}\n")).collect();
            Output::new(json!(terms.iter().map(|(p, c)| json!({"partners": p, "coeff": c})).collect::<Vec<_>>()), text)
        }
    })
}

fn parse_tangle(s: &str) -> Result<RationalTangle, Failure> {
    let s = s.trim_start_matches('+');
    Ok(s.parse()?)
}

fn tangle_sum(tokens: &[String]) -> Result<TangleSum, Failure> {
    let mut summands: Vec<RationalTangle> = Vec::new();
    for t in tokens {
        if let Some(k) = t.strip_prefix('x') {
            let k: usize = k.parse().map_err(|_| Failure::Usage(format!("bad repeat `{t}`")))?;
            let last =
                summands.last().cloned().ok_or_else(|| Failure::Usage(format!("`{t}` has nothing to repeat")))?;
            if k == 0 {
                return Err(Failure::Usage(format!("`{t}`: repeat count must be positive")));
            }
            summands.extend(std::iter::repeat_n(last, k - 1));
        } else {
            summands.push(parse_tangle(t)?);
        }
    }
    Ok(TangleSum::new(summands)?)
}

fn id_json(id: &genotop::invariants::Identification) -> Value {
    json!({"name": id.label(), "crossings": id.crossings, "components": id.components})
}

fn tangle(c: &TangleCmd) -> Outcome {
    Ok(match c {
        TangleCmd::Fraction { twists } => {
            let t = parse_tangle(twists)?;
            let f = t.fraction();
            Output::new(json!({"twists": t.twists(), "fraction": f}), format!("{f}\n"))
        }
        TangleCmd::FromFraction { fraction } => {
            let f: Fraction = fraction.parse()?;
            let t = RationalTangle::from_fraction(&f);
            Output::new(json!({"twists": t.twists(), "fraction": f}), format!("{t}\n"))
        }
        TangleCmd::Closure { summands, identify } => {
            let sum = tangle_sum(summands)?;
            let d = numerator_closure(&sum)?;
            let mut json = diagram_json(&d);
            let mut text = format!("{} components, {} crossings\n", d.component_count(), d.crossing_count());
            if *identify {
                let id = identify_diagram(KnotTable::bundled(), &d)?;
                json["identification"] = id_json(&id);
                text.push_str(&format!("{} ({})\n", id.label(), id.describe()));
            }
            let mut o = Output::new(json, text);
            o.svg = Some(render_diagram(&d, None));
            o
        }
        TangleCmd::Classify { p, q } => {
            let (p, q) = two_bridge_classify(*p, *q)?;
            Output::new(json!({"p": p, "q": q}), format!("b({p}, {q})\n"))
        }
        TangleCmd::Products { o, r, rounds } => {
            let o = parse_tangle(o)?;
            let ids = processive_products(&o, &RationalTangle::integer(*r), *rounds)?;
            let text: String = ids.iter().enumerate().map(|(i, id)| format!("{i}: {}\n", id.label())).collect();
            Output::new(
                json!({"fraction": o.fraction(), "products": ids.iter().map(id_json).collect::<Vec<_>>()}),
                text,
            )
        }
        TangleCmd::Solve { products, r, bound } => {
            let observed: Vec<&str> = products.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            let bound = parse_bound(bound)?;
            let r = RationalTangle::integer(*r);
            let found = solve_processive(&observed, &r, bound)?;
            let mut cands = Vec::new();
            let mut text = format!("{} candidate(s)\n", found.len());
            for o in &found {
                let ids = processive_products(o, &r, observed.len())?;
                let labels: Vec<&str> = ids.iter().map(|i| i.label()).collect();
                text.push_str(&format!("{} (fraction {}): {}\n", o, o.fraction(), labels.join(", ")));
                cands.push(json!({
                    "twists": o.twists(),
                    "fraction": o.fraction(),
                    "identifications": ids.iter().map(id_json).collect::<Vec<_>>(),
                }));
            }
            Output::new(json!({"candidates": cands}), text)
        }
    })
}

fn parse_bound(s: &str) -> Result<SearchBound, Failure> {
    let bad = || Failure::Usage(format!("--bound `{s}`: expected MAX_LEN,MAX_ENTRY"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok(SearchBound { max_len: a.trim().parse().map_err(|_| bad())?, max_entry: b.trim().parse().map_err(|_| bad())? })
}

/// Genome text, or a path to a file holding genome text.
fn read_genome(s: &str, caps: &Caps) -> Result<CircularGenome, Failure> {
    let text = if Path::new(s).is_file() {
        fs::read_to_string(s).map_err(|e| Failure::Domain(format!("{s}: {e}")))?
    } else {
        s.to_string()
    };
    let g: CircularGenome = text.trim().parse()?;
    Ok(g).and_then(|g| {
        if g.len() > caps.max_bfs_n {
            Err(Failure::Usage(format!("genome has {} regions, above --max-bfs-n {}", g.len(), caps.max_bfs_n)))
        } else {
            Ok(g)
        }
    })
}

fn parse_signed(s: &str) -> Result<SignedPermutation, Failure> {
    let v: Vec<i32> = s
        .split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Usage(format!("bad signed permutation `{s}`"))))
        .collect::<Result<_, _>>()?;
    Ok(SignedPermutation::new(v)?)
}

fn genome(c: &GenomeCmd, caps: &Caps) -> Outcome {
    Ok(match c {
        GenomeCmd::Distance { gens, a, b } => {
            let gens: GeneratorSet =
                gens.parse().map_err(|e: genotop::Error| Failure::Usage(format!("--gens: {e}")))?;
            let d = distance_bfs(&read_genome(a, caps)?, &read_genome(b, caps)?, &gens)?;
            let text = match d {
                Distance::Steps(k) => format!("{k}\n"),
                Distance::Unreachable => "unreachable\n".to_string(),
            };
            Output::new(json!({"gens": gens.to_string(), "distance": d.steps()}), text)
        }
        GenomeCmd::Canonical { genome, unsigned } => {
            let g = read_genome(genome, caps)?;
            let c = if *unsigned { g.unsigned_canonical() } else { g.canonical() };
            Output::new(json!(c.to_string()), format!("{c}\n"))
        }
        GenomeCmd::Invert { genome, i, j } => {
            let g = read_genome(genome, caps)?.inversion(*i, *j)?;
            Output::new(json!(g.to_string()), format!("{g}\n"))
        }
        GenomeCmd::Length { type_b, affine } => match (type_b, affine) {
            (Some(s), None) => {
                let w = parse_signed(s)?;
                Output::new(
                    json!({"typeB": w.to_string(), "length": w.type_b_length()}),
                    format!("{}\n", w.type_b_length()),
                )
            }
            (None, Some(s)) => {
                let w: AffinePermutation = s.parse()?;
                Output::new(json!({"affine": w.to_string(), "length": w.length()}), format!("{}\n", w.length()))
            }
            _ => return Err(Failure::Usage("give exactly one of --typeB or --affine".into())),
        },
        GenomeCmd::Swap { a, b, fast } => {
            let (a, b) = (read_genome(a, caps)?, read_genome(b, caps)?);
            let d = if *fast { swap_distance_fast(&a, &b)? } else { circular_swap_distance(&a, &b)? };
            Output::new(json!({"distance": d, "fast": fast}), format!("{d}\n"))
        }
        GenomeCmd::Breakpoint { a, b } => {
            let (a, b) = (parse_signed(a)?, parse_signed(b)?);
            let bound = breakpoint_cycle_bound(&a, &b);
            let dist = if a.len() <= MAX_LINEAR_REGIONS { Some(linear_reversal_distance(&a, &b)?) } else { None };
            let text = match dist {
                Some(d) => format!("bound {bound}, distance {d}\n"),
                None => format!("bound {bound}\n"),
            };
            Output::new(json!({"bound": bound, "distance": dist}), text)
        }
        GenomeCmd::Orbit { gens, genome } => {
            let gens: GeneratorSet =
                gens.parse().map_err(|e: genotop::Error| Failure::Usage(format!("--gens: {e}")))?;
            let orbit = terminus_orbit(&read_genome(genome, caps)?, &gens)?;
            let items: Vec<String> = orbit.iter().map(|g| g.to_string()).collect();
            Output::new(json!({"size": items.len(), "members": items}), format!("{} arrangements\n", orbit.len()))
        }
    })
}

fn series_output(reports: Vec<genotop::recombination::ProductReport>) -> Output {
    let text: String = reports
        .iter()
        .map(|r| {
            let status = serde_json::to_value(r.status).expect("status").as_str().unwrap_or("").to_string();
            format!("{}: {}  [{} components, {status}]  {}\n", r.round, r.name, r.components, r.word)
        })
        .collect();
    Output::new(json!(reports), text)
}

/// Smallest even strand count that fits every letter.
fn fitting_strands(letters: &[&str]) -> Result<usize, Failure> {
    let mut top = 1;
    for l in letters.iter().flat_map(|s| s.split_whitespace()) {
        let g: Generator = l.parse()?;
        top = top.max(g.index + 1);
    }
    Ok(top + top % 2)
}

fn recombine(c: &RecombineCmd, caps: &Caps, seed: u64) -> Outcome {
    Ok(match c {
        RecombineCmd::Run { system: name, rounds } => {
            let sys = system(name).ok_or_else(|| Failure::Usage(format!("--system: unknown system `{name}`")))?;
            series_output(processive_series(&sys, *rounds)?)
        }
        RecombineCmd::Parity { k, imax } => {
            let rows = parity_report(*k, *imax)?;
            let text: String = rows
                .iter()
                .map(|r| {
                    format!(
                        "{:?} k={} i={}: {} components, {:?}, {}\n",
                        r.family,
                        r.k,
                        r.i,
                        r.components,
                        r.status,
                        if r.holds { "holds" } else { "FAILS" }
                    )
                })
                .collect();
            let mut o = Output::new(json!(rows), text);
            o.failed = rows.iter().any(|r| !r.holds);
            o
        }
        RecombineCmd::Custom { substrate, prefix, rounds, marks, n } => {
            let n = match n {
                Some(n) => *n,
                None => fitting_strands(&[substrate, prefix])?,
            };
            let w = word(&WordArgs { word: substrate.clone(), n, affine: false }, caps)?;
            let prefix: Generator = prefix.parse()?;
            let sys = RecombinationSystem::new("custom", w, prefix, *marks)?;
            series_output(processive_series(&sys, *rounds)?)
        }
        RecombineCmd::Bmw { word: Some(text), n, i, .. } => {
            let w = word(&WordArgs { word: text.clone(), n: *n, affine: false }, caps)?;
            let v = bmw_plat_equivalence(&w, *i)?;
            let text =
                format!("{}: components {:?}, {}\n", v.word, v.components, if v.agree { "agree" } else { "DISAGREE" });
            let mut o = Output::new(json!(v), text);
            o.failed = !v.agree;
            o
        }
        RecombineCmd::Bmw { word: None, n, trials, .. } => {
            let v = bmw_random_trials(seed, *trials, *n)?;
            let bad = v.iter().filter(|x| !x.agree).count();
            let mut o = Output::new(json!(v), format!("{} comparisons, {bad} disagreements\n", v.len()));
            o.failed = bad > 0;
            o
        }
        RecombineCmd::Library => {
            let lib = case_library();
            let text: String = lib
                .iter()
                .map(|s| {
                    format!("{}: {} ({} strands), prefix {}\n", s.name, s.substrate, s.substrate.strands(), s.prefix)
                })
                .collect();
            Output::new(json!(lib), text)
        }
        RecombineCmd::CreSearch => match cre_search() {
            Some(w) => Output::new(json!(w.to_string()), format!("{w}\n")),
            None => return Err(Failure::Domain("no substrate found within the search bound".into())),
        },
    })
}

fn table(c: &TableCmd) -> Outcome {
    Ok(match c {
        TableCmd::Build { out } => {
            let t = build_knot_table()?;
            let text = t.to_json();
            let summary = format!("{} entries", t.entries().len());
            match out {
                Some(p) => {
                    fs::write(p, &text).map_err(|e| Failure::Domain(format!("{}: {e}", p.display())))?;
                    Output::new(
                        json!({"entries": t.entries().len(), "path": p}),
                        format!("{summary} written to {}\n", p.display()),
                    )
                }
                None => Output::new(serde_json::from_str(&text).expect("table json"), text),
            }
        }
        TableCmd::Verify { table } => {
            let t = load_table(table.as_deref())?;
            let r = genotop::reproduce::run_selected(&t, 0, &[14]);
            let problems = t.verify();
            let mut text: String = problems.iter().map(|p| format!("{p}\n")).collect();
            text.push_str(&format!("{}\n", r[0].detail));
            let mut o = Output::new(json!({"ok": r[0].passed, "problems": problems, "detail": r[0].detail}), text);
            o.failed = !r[0].passed;
            o
        }
        TableCmd::List => {
            let t = KnotTable::bundled();
            let rows: Vec<Value> = t
                .entries()
                .iter()
                .map(|e| json!({"name": e.name, "crossings": e.crossings, "components": e.components, "mirror": e.mirror}))
                .collect();
            let text: String = t
                .entries()
                .iter()
                .map(|e| {
                    format!(
                        "{:<12} {:>2} crossings, {} component(s)  {}\n",
                        e.name,
                        e.crossings,
                        e.components,
                        describe(&e.name)
                    )
                })
                .collect();
            Output::new(json!(rows), text)
        }
    })
}

fn reproduce(a: &ReproduceArgs, seed: u64) -> Outcome {
    let table = load_table(a.table.as_deref())?;
    let mut results = genotop::reproduce::run_selected(&table, seed, &a.checks);
    if a.no_timings {
        for r in &mut results {
            r.millis = 0;
        }
    }
    let failed = results.iter().any(|r| !r.passed);
    let text = genotop::reproduce::render_text(&results, !a.no_timings);
    let mut o = Output::new(json!(results), text);
    o.failed = failed;
    Ok(o)
}
