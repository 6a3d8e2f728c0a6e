//! The acceptance suite as a library: one check per claim, each timed.
//!
//! Checks take the knot table as an argument so a corrupted table can be
//! injected; only the table check is expected to notice.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{closure, Closure};
use crate::genome::{
    affine_lengths_bfs, breakpoint_cycle_bound, circular_swap_distance, linear_reversal_distance, random_genome,
    swap_distance_fast, typeb_lengths_bfs, unsigned_class_count, CircularGenome,
};
use crate::invariants::{
    bracket_statesum, identify_with, kauffman_bracket, resolve_name, word_to_tl, KnotTable, TlElement,
};
use crate::recombination::{
    bmw_random_trials, parity_report, processive_series_with, product_with, system, ProductReport,
};
use crate::tangle::{processive_products_with, solve_processive_with, RationalTangle, SearchBound};
use crate::word::random_word;
use crate::{GenWord, Generator, LaurentPoly, Result};

pub const DEFAULT_SEED: u64 = 2024;

/// Outcome of one check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: u32,
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
    pub budget_millis: Option<u128>,
}

struct Check {
    id: u32,
    claim: &'static str,
    budget: Option<Duration>,
    run: fn(&KnotTable, u64) -> Result<(bool, String)>,
}

fn checks() -> Vec<Check> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Check {
            id: 1,
            claim: "Tn3 series: hopf, figure-8, whitehead, six-crossing knot",
            budget: secs(1),
            run: tn3_series,
        },
        Check {
            id: 2,
            claim: "Gin series: unknot, unknot, trefoil, 5-crossing, 6-crossing",
            budget: secs(1),
            run: gin_series,
        },
        Check { id: 3, claim: "parity theorems, 36 cases", budget: secs(1), run: parity },
        Check { id: 4, claim: "Tn3 substrate forms give the same series", budget: None, run: substrate_forms },
        Check { id: 5, claim: "XerCD reduction and turn-back/braid plat agreement", budget: None, run: xercd },
        Check { id: 6, claim: "e_i vs s_i s_(i+1) plat equivalence, 200 words", budget: secs(30), run: bmw },
        Check { id: 7, claim: "TL bracket equals state sum, 500 words", budget: secs(60), run: oracle },
        Check { id: 8, claim: "skein relation and loop value", budget: None, run: skein },
        Check { id: 9, claim: "type-B length formula on B3 and B4", budget: secs(5), run: typeb },
        Check { id: 10, claim: "affine length formula and swap fast path", budget: None, run: affine },
        Check { id: 11, claim: "inversion example, dihedral classes, class counts", budget: None, run: dihedral },
        Check { id: 12, claim: "breakpoint bound against search distance", budget: None, run: breakpoints },
        Check { id: 13, claim: "tangle solver finds a single Tn3 substrate", budget: secs(60), run: solver },
        Check { id: 14, claim: "knot table self-verification", budget: None, run: table_check },
    ]
}

/// Runs every check in identifier order.
pub fn run_all(table: &KnotTable, seed: u64) -> Vec<CheckResult> {
    run_selected(table, seed, &[])
}

/// Runs the listed checks (all when `ids` is empty). Checks run one at a
/// time so their timings are not inflated by each other.
pub fn run_selected(table: &KnotTable, seed: u64, ids: &[u32]) -> Vec<CheckResult> {
    checks()
        .into_iter()
        .filter(|c| ids.is_empty() || ids.contains(&c.id))
        .map(|c| {
            let start = Instant::now();
            let outcome = (c.run)(table, seed);
            let elapsed = start.elapsed();
            let (ok, detail) = match outcome {
                Ok(v) => v,
                Err(e) => (false, format!("error: {e}")),
            };
            let in_budget = c.budget.is_none_or(|b| elapsed <= b);
            let detail = if ok && !in_budget { format!("{detail}; over time budget") } else { detail };
            CheckResult {
                id: c.id,
                claim: c.claim,
                passed: ok && in_budget,
                detail,
                millis: elapsed.as_millis(),
                budget_millis: c.budget.map(|b| b.as_millis()),
            }
        })
        .collect()
}

fn first(items: &[String]) -> String {
    items.first().map(|x| format!(", first: {x}")).unwrap_or_default()
}

fn names(series: &[ProductReport]) -> String {
    series.iter().map(|r| r.name.as_str()).collect::<Vec<_>>().join(", ")
}

fn series(table: &KnotTable, name: &str, rounds: usize) -> Result<Vec<ProductReport>> {
    processive_series_with(table, &system(name).expect("bundled system"), rounds)
}

fn tn3_series(table: &KnotTable, _: u64) -> Result<(bool, String)> {
    let s = series(table, "tn3", 4)?;
    let head: Vec<&str> = s[..3].iter().map(|r| r.name.as_str()).collect();
    let ok = head == ["hopf", "4_1", "whitehead"] && s[3].crossings == Some(6) && s[3].components == 1;
    Ok((ok, names(&s)))
}

fn gin_series(table: &KnotTable, _: u64) -> Result<(bool, String)> {
    let gin = system("gin").expect("bundled system");
    let s: Vec<ProductReport> = (0..=4).map(|i| product_with(table, &gin, i)).collect::<Result<_>>()?;
    let base = |r: &ProductReport| r.name.trim_end_matches('*').to_string();
    let ok = base(&s[0]) == "unknot"
        && base(&s[1]) == "unknot"
        && base(&s[2]) == "3_1"
        && s[3].crossings == Some(5)
        && s[4].crossings == Some(6);
    Ok((ok, names(&s)))
}

fn parity(_: &KnotTable, _: u64) -> Result<(bool, String)> {
    let mut cases = 0;
    let mut bad = Vec::new();
    for k in 1..=3 {
        for row in parity_report(k, 6)? {
            cases += 1;
            if !row.holds {
                bad.push(format!("{:?} k={} i={}", row.family, row.k, row.i));
            }
        }
    }
    Ok((cases == 36 && bad.is_empty(), format!("{cases} cases, {} exceptions{}", bad.len(), first(&bad))))
}

fn substrate_forms(table: &KnotTable, _: u64) -> Result<(bool, String)> {
    let a = series(table, "tn3", 4)?;
    let b = series(table, "tn3-alt", 4)?;
    let same = a.iter().zip(&b).all(|(x, y)| x.name == y.name && x.keys == y.keys);
    Ok((same, format!("[{}] vs [{}]", names(&a), names(&b))))
}

fn xercd(table: &KnotTable, _: u64) -> Result<(bool, String)> {
    let x = system("xercd").expect("bundled system");
    let reduced = x.substrate.free_reduce().to_string();
    let braid_form = x.substrate.prefixed(Generator::sigma_inv(5))?.prefixed(Generator::sigma_inv(4))?;
    let a = identify_with(table, &x.round_word(1)?, Closure::Plat)?;
    let b = identify_with(table, &braid_form, Closure::Plat)?;
    let ok = reduced == "s2^2 s3 s2 s4^-1" && a.components == b.components && a.keys == b.keys;
    Ok((ok, format!("reduced {reduced}; {} vs {}", a.label(), b.label())))
}

fn bmw(_: &KnotTable, seed: u64) -> Result<(bool, String)> {
    let trials = bmw_random_trials(seed, 200, 6)?;
    let bad = trials.iter().filter(|v| !v.agree).count();
    Ok((bad == 0 && trials.len() == 400, format!("{} comparisons, {bad} disagreements", trials.len())))
}

fn oracle(_: &KnotTable, seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let words: Vec<GenWord> = (0..500)
        .map(|_| {
            let n = 2 * rng.gen_range(1..=3);
            let len = rng.gen_range(0..=10);
            random_word(&mut rng, n, len, true)
        })
        .collect();
    let bad: Vec<String> = words
        .par_iter()
        .flat_map_iter(|w| {
            [Closure::Plat, Closure::Trace].into_iter().filter_map(move |kind| {
                let tl = kauffman_bracket::<i64>(w, kind);
                let ss = closure(w, kind).and_then(|d| bracket_statesum::<i64>(&d));
                match (tl, ss) {
                    (Ok(a), Ok(b)) if a == b => None,
                    _ => Some(format!("{w} ({kind})")),
                }
            })
        })
        .collect();
    Ok((bad.is_empty(), format!("1000 brackets, {} mismatches{}", bad.len(), first(&bad))))
}

fn skein(_: &KnotTable, seed: u64) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    let a_plus = LaurentPoly::a_pow(1) + LaurentPoly::a_pow(-1);
    for n in 2..=6 {
        for i in 1..n {
            let e = |text: &str| GenWord::braid(text, n).and_then(|w| word_to_tl::<i64>(&w));
            let lhs = e(&format!("s{i}"))?.add(&e(&format!("s{i}^-1"))?);
            let rhs = TlElement::identity(n).add(&e(&format!("e{i}"))?).scale(&a_plus);
            if lhs != rhs {
                failures.push(format!("skein n={n} i={i}"));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let delta = LaurentPoly::delta();
    for trial in 0..60 {
        let n = 2 + trial % 5;
        let i = rng.gen_range(1..n);
        let len = rng.gen_range(0..=6);
        let base = random_word(&mut rng, n, len, true);
        let once = base.prefixed(Generator::e(i))?;
        let twice = once.prefixed(Generator::e(i))?;
        let kinds: &[Closure] = if n % 2 == 0 { &[Closure::Plat, Closure::Trace] } else { &[Closure::Trace] };
        for &kind in kinds {
            if kauffman_bracket::<i64>(&twice, kind)? != &kauffman_bracket::<i64>(&once, kind)? * &delta {
                failures.push(format!("loop value {once} ({kind})"));
            }
        }
    }
    Ok((failures.is_empty(), format!("{} failures{}", failures.len(), first(&failures))))
}

fn typeb(_: &KnotTable, _: u64) -> Result<(bool, String)> {
    let mut detail = Vec::new();
    let mut ok = true;
    for (n, size) in [(3, 48), (4, 384)] {
        let table = typeb_lengths_bfs(n);
        let bad = table.iter().filter(|(w, len)| w.type_b_length() != **len).count();
        ok &= table.len() == size && bad == 0;
        detail.push(format!("B{n}: {} elements, {bad} mismatches", table.len()));
    }
    Ok((ok, detail.join("; ")))
}

fn affine(_: &KnotTable, seed: u64) -> Result<(bool, String)> {
    let mut detail = Vec::new();
    let mut ok = true;
    for n in [3, 4] {
        let table = affine_lengths_bfs(n, 8);
        let bad = table.iter().filter(|(w, len)| w.length() != **len).count();
        ok &= bad == 0;
        detail.push(format!("n={n}: {} elements, {bad} mismatches", table.len()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(CircularGenome, CircularGenome)> =
        (0..100).map(|_| (random_genome(&mut rng, 6, false), random_genome(&mut rng, 6, false))).collect();
    let bad = pairs
        .par_iter()
        .filter(|(x, y)| !matches!((swap_distance_fast(x, y), circular_swap_distance(x, y)), (Ok(a), Ok(b)) if a == b))
        .count();
    ok &= bad == 0;
    detail.push(format!("swap fast path: 100 pairs, {bad} mismatches"));
    Ok((ok, detail.join("; ")))
}

fn dihedral(_: &KnotTable, _: u64) -> Result<(bool, String)> {
    let g = |s: &str| s.parse::<CircularGenome>();
    let inverted = g("1,2,3,4,5,6")?.inversion(2, 4)?;
    let mut ok = inverted == g("1,-4,-3,-2,5,6")?;
    let forms = [g("1,2,3,4")?, g("2,3,4,1")?, g("4,3,2,1")?];
    ok &= forms.iter().all(|f| f.unsigned_canonical() == forms[0].unsigned_canonical());
    let counts: Vec<usize> = [4, 5].iter().map(|&n| unsigned_class_count(n)).collect();
    ok &= counts == [3, 12];
    Ok((ok, format!("inversion gives {inverted}; classes n=4: {}, n=5: {}", counts[0], counts[1])))
}

fn breakpoints(_: &KnotTable, seed: u64) -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<_> = (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            (random_genome(&mut rng, n, true).linear(), random_genome(&mut rng, n, true).linear())
        })
        .collect();
    let bad: Vec<String> = pairs
        .par_iter()
        .filter_map(|(a, b)| {
            let lb = breakpoint_cycle_bound(a, b);
            match linear_reversal_distance(a, b) {
                Ok(d) if lb <= d && (d > 1 || lb == d) => None,
                Ok(d) => Some(format!("{a} {b}: bound {lb}, distance {d}")),
                Err(e) => Some(format!("{a} {b}: {e}")),
            }
        })
        .collect();
    Ok((bad.is_empty(), format!("200 pairs, {} violations{}", bad.len(), first(&bad))))
}

fn solver(table: &KnotTable, _: u64) -> Result<(bool, String)> {
    let observed = ["hopf", "fig8", "whitehead", "knot6"];
    let r = RationalTangle::integer(1);
    let found = solve_processive_with(table, &observed, &r, SearchBound { max_len: 3, max_entry: 5 })?;
    if found.len() != 1 {
        return Ok((false, format!("{} candidates", found.len())));
    }
    let tangle_route = processive_products_with(table, &found[0], &r, 4)?;
    let braid_route = series(table, "tn3", 4)?;
    let agree = tangle_route.iter().zip(&braid_route).all(|(t, b)| t.label() == b.name);
    Ok((agree, format!("substrate {} (fraction {}), routes agree: {agree}", found[0], found[0].fraction())))
}

fn table_check(table: &KnotTable, _: u64) -> Result<(bool, String)> {
    let problems = table.verify();
    let named = ["unknot", "trefoil", "fig8", "hopf", "whitehead", "unlink"];
    let missing: Vec<&str> = named.iter().copied().filter(|n| table.get(&resolve_name(n)).is_none()).collect();
    let sizes = [5u32, 6].iter().all(|c| table.entries().iter().any(|e| e.crossings == *c && e.components == 1));
    let ok = problems.is_empty() && missing.is_empty() && sizes;
    Ok((
        ok,
        format!(
            "{} entries, {} problems{}, missing {missing:?}",
            table.entries().len(),
            problems.len(),
            first(&problems)
        ),
    ))
}

/// Plain-text table, one line per check.
pub fn render_text(results: &[CheckResult], timings: bool) -> String {
    let mut out = String::new();
    for r in results {
        let mark = if r.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("[{mark}] {:>2} {}", r.id, r.claim));
        if timings {
            out.push_str(&format!(" ({} ms)", r.millis));
        }
        out.push_str(&format!(": {}\n", r.detail));
    }
    let passed = results.iter().filter(|r| r.passed).count();
    out.push_str(&format!("{passed}/{} checks passed\n", results.len()));
    out
}
