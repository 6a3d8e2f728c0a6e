use genotop::invariants::KnotTable;
use genotop::reproduce::{render_text, run_all, run_selected, DEFAULT_SEED};
use genotop::LaurentPoly;

#[test]
fn acceptance() {
    let results = run_all(KnotTable::bundled(), DEFAULT_SEED);
    print!("{}", render_text(&results, true));
    assert_eq!(results.len(), 14);
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failed checks: {failed:?}");
}

#[test]
fn corrupted_table_only_fails_table_check() {
    let mut table = KnotTable::bundled().clone();
    let entry = table.entries_mut().iter_mut().find(|e| e.name == "7_7").unwrap();
    entry.keys[0] = &entry.keys[0] + &LaurentPoly::a_pow(2);
    let clean = run_selected(KnotTable::bundled(), DEFAULT_SEED, &[1, 4, 5, 13, 14]);
    let dirty = run_selected(&table, DEFAULT_SEED, &[1, 4, 5, 13, 14]);
    for (c, d) in clean.iter().zip(&dirty) {
        if d.id == 14 {
            assert!(c.passed && !d.passed, "{}", d.detail);
        } else {
            assert_eq!((c.passed, &c.detail), (d.passed, &d.detail), "check {}", d.id);
        }
    }
}
