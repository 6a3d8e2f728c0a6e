use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("genotop").chain(args.iter().copied());
    let code = genotop_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    serde_json::from_str(&ok(&v)).unwrap()
}

#[test]
fn braid_commands() {
    assert_eq!(ok(&["braid", "simplify", "s2^3 s2^-1 s4^-1 s4 s3 s2 s4^-1", "--n", "6"]), "s2^2 s3 s2 s4^-1\n");
    assert_eq!(ok(&["braid", "invert", "s1 s2^-1", "--n", "3"]), "s2 s1^-1\n");
    assert_eq!(ok(&["braid", "compose", "s1", "s2", "--n", "3"]), "s1 s2\n");
    assert_eq!(ok(&["braid", "mirror", "s1 e2", "--n", "3"]), "s1^-1 e2\n");
    assert_eq!(ok(&["braid", "edit", "s1 s2", "--n", "3", "--pos", "2", "--mode", "smooth"]), "s1 e2\n");
    assert_eq!(ok(&["braid", "typeb", "x1 s1", "--n", "3"]), "[2,-1,3]\n");
    let w = json(&["braid", "simplify", "s1 s3 s2^-1", "--n", "4"]);
    assert_eq!(w["n"], 4);
    assert_eq!(w["word"], "s1 s3 s2^-1");
    assert!(ok(&["braid", "draw", "s1", "--n", "2"]).starts_with("<svg"));
}

#[test]
fn closure_and_invariants() {
    assert!(ok(&["invariant", "identify", "--plat", "", "--n", "4"]).starts_with("unlink2 (2-component unlink)"));
    let id = json(&["invariant", "identify", "--plat", "s2 s1 s3 s2^-1", "--n", "4"]);
    assert_eq!(id["name"], "hopf");
    assert_eq!(id["components"], 2);
    assert_eq!(ok(&["invariant", "bracket", "--trace", "s1", "--n", "2"]), "-A^3\n");
    assert_eq!(ok(&["invariant", "statesum", "--trace", "s1", "--n", "2"]), "-A^3\n");
    assert_eq!(json(&["invariant", "jones", "--trace", "s1^3", "--n", "2"]).as_array().unwrap().len(), 1);
    let tl = json(&["invariant", "tl", "e1", "e1", "--n", "2"]);
    assert_eq!(tl[0]["coeff"], "-A^2 - A^-2");
    let c = json(&["closure", "s1 s2^-1", "--n", "4", "--mark", "bottom1:ltr:a", "--mark", "bottom2:ltr:b"]);
    assert_eq!(c["components"], 1);
    assert_eq!(c["sequences"][0].as_array().unwrap().len(), 2);
    let svg = ok(&["closure", "s1", "--n", "2", "--kind", "trace", "--format", "svg"]);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
}

#[test]
fn pd_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("genotop-pd-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let pd = json(&["closure", "s1^3", "--n", "2", "--kind", "trace"])["pd"].to_string();
    let path = dir.join("trefoil.json");
    std::fs::write(&path, pd).unwrap();
    let id = json(&["invariant", "identify", "--pd", path.to_str().unwrap()]);
    assert_eq!(id["name"].as_str().unwrap().trim_end_matches('*'), "3_1");
}

#[test]
fn tangle_commands() {
    assert_eq!(ok(&["tangle", "fraction", "2,3,2"]), "16/7\n");
    let back = ok(&["tangle", "from-fraction", "-1/3"]);
    assert_eq!(ok(&["tangle", "fraction", back.trim()]), "-1/3\n");
    let c = json(&["tangle", "closure", "0", "+1", "x3", "--identify"]);
    assert_eq!(c["identification"]["name"], "3_1");
    assert_eq!(json(&["tangle", "classify", "5", "3"])["q"], 2);
    let s = json(&["tangle", "solve", "--products", "hopf,fig8,whitehead", "--r", "1", "--bound", "3,5"]);
    let cands = s["candidates"].as_array().unwrap();
    assert_eq!(cands.len(), 1);
    assert_eq!(cands[0]["fraction"], "-1/3");
    assert_eq!(cands[0]["identifications"][1]["name"], "4_1");
    let p = json(&["tangle", "products", "--o", "-3,0", "--rounds", "2"]);
    assert_eq!(p["products"][0]["name"], "hopf");
}

#[test]
fn genome_commands() {
    assert_eq!(ok(&["genome", "invert", "1,2,3,4,5,6", "--i", "2", "--j", "4"]), "1,-4,-3,-2,5,6\n");
    assert_eq!(ok(&["genome", "canonical", "4,3,2,1", "--unsigned"]), "1,2,3,4\n");
    assert_eq!(ok(&["genome", "distance", "1,2,3,4", "-1,-2,-3,-4"]), "3\n");
    assert_eq!(ok(&["genome", "distance", "--gens", "terminus", "1*,2,3", "1*,-3,-2"]), "1\n");
    assert_eq!(ok(&["genome", "length", "--typeB", "-1,-2"]), "4\n");
    assert_eq!(ok(&["genome", "length", "--affine", "-1,4"]), "2\n");
    assert_eq!(ok(&["genome", "swap", "1,2,3,4,5,6", "6,2,3,4,5,1", "--fast"]), "1\n");
    assert_eq!(ok(&["genome", "breakpoint", "1,-3,-2,4", "1,2,3,4"]), "bound 1, distance 1\n");
    assert_eq!(json(&["genome", "orbit", "1*,2,3"])["size"], 8);

    let dir = std::env::temp_dir().join(format!("genotop-genome-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.txt"), dir.join("b.txt"));
    std::fs::write(&a, "1,2,3,4\n").unwrap();
    std::fs::write(&b, "1,-3,-2,4\n").unwrap();
    assert_eq!(ok(&["genome", "distance", "--gens", "maxlen=2", a.to_str().unwrap(), b.to_str().unwrap()]), "1\n");
}

#[test]
fn recombine_commands() {
    let r = json(&["recombine", "run", "--system", "tn3", "--rounds", "4"]);
    let r = r.as_array().unwrap();
    assert_eq!(r.len(), 4);
    assert_eq!(r[0]["name"], "hopf");
    assert_eq!(r[3]["crossings"], 6);
    assert_eq!(r[3]["components"], 1);
    let custom =
        json(&["recombine", "custom", "--substrate", "s1 s2^-1", "--prefix", "s2", "--rounds", "5", "--marks"]);
    assert_eq!(custom.as_array().unwrap().len(), 5);
    assert_eq!(custom[0]["status"], "inverted");
    assert_eq!(custom[1]["status"], "restored");
    let parity = json(&["recombine", "parity", "--k", "2", "--imax", "6"]);
    assert!(parity.as_array().unwrap().iter().all(|row| row["holds"] == true));
    let v = json(&["recombine", "bmw", "s1 s3^-1", "--n", "6", "--i", "4"]);
    assert_eq!(v["agree"], true);
    assert!(ok(&["recombine", "library"]).contains("xercd"));
    assert_eq!(ok(&["recombine", "cre-search"]), "s1^-1 s2\n");
}

#[test]
fn seeded_output_is_identical() {
    let a = ok(&["recombine", "bmw", "--trials", "20", "--seed", "9", "--format", "json"]);
    let b = ok(&["recombine", "bmw", "--trials", "20", "--seed", "9", "--format", "json"]);
    assert_eq!(a, b);
    let c = ok(&["recombine", "bmw", "--trials", "20", "--seed", "10", "--format", "json"]);
    assert_ne!(a, c);
    let r1 = ok(&["reproduce", "--check", "6", "--check", "11", "--no-timings"]);
    let r2 = ok(&["reproduce", "--check", "6", "--check", "11", "--no-timings"]);
    assert_eq!(r1, r2);
}

#[test]
fn table_commands() {
    let dir = std::env::temp_dir().join(format!("genotop-table-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.json");
    ok(&["table", "build", "--out", path.to_str().unwrap()]);
    let built = std::fs::read_to_string(&path).unwrap();
    let shipped =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/data/knot_table.json")).unwrap();
    assert_eq!(built, shipped);
    ok(&["table", "verify", "--table", path.to_str().unwrap()]);
    assert!(ok(&["table", "list"]).contains("whitehead"));

    // corrupt one entry: verification fails, identification elsewhere is untouched
    let mut v: Value = serde_json::from_str(&built).unwrap();
    let entry = v.as_array_mut().unwrap().iter_mut().find(|e| e["name"] == "5_2").unwrap();
    entry["keys"][0][0][1] = Value::from(99);
    let bad = dir.join("bad.json");
    std::fs::write(&bad, v.to_string()).unwrap();
    let (code, _, _) = run(&["table", "verify", "--table", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    let (code, out, _) = run(&["reproduce", "--table", bad.to_str().unwrap(), "--check", "1", "--check", "14"]);
    assert_eq!(code, 1);
    assert!(out.contains("[PASS]  1") && out.contains("[FAIL] 14"), "{out}");
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["braid", "simplify", "s1", "--n", "3", "--bogus"]);
    assert_eq!(code, 2);
    assert!(err.contains("--bogus"));
    let (code, _, err) = run(&["genome", "distance", "--gens", "sideways", "1,2", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("--gens"));
    let (code, _, err) = run(&["tangle", "classify", "6", "4"]);
    assert_eq!(code, 1);
    assert!(err.contains("not coprime"));
    let (code, _, _) = run(&["invariant", "identify", "--plat", "s1", "--n", "3"]);
    assert_eq!(code, 1);
    let (code, _, err) = run(&["tangle", "fraction", "2", "--format", "svg"]);
    assert_eq!(code, 2);
    assert!(err.contains("svg"));
    let (code, _, err) = run(&["--max-bfs-n", "11", "genome", "canonical", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("--max-bfs-n"));
    let (code, _, err) = run(&["--max-bfs-n", "3", "genome", "canonical", "1,2,3,4"]);
    assert_eq!(code, 2);
    assert!(err.contains("--max-bfs-n"));
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("reproduce"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_genotop");
    let good = Command::new(bin).args(["tangle", "fraction", "2,3,2"]).output().unwrap();
    assert_eq!(good.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&good.stdout), "16/7\n");
    let usage = Command::new(bin).args(["tangle", "nope"]).output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let domain = Command::new(bin).args(["tangle", "fraction", "0/0"]).output().unwrap();
    assert_eq!(domain.status.code(), Some(1));
}
