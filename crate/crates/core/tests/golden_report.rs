use std::path::PathBuf;

use linkgraph::harness::{default_corpus, verify_suite, DEFAULT_SEED};
use linkgraph::Limits;

fn golden_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/default_report.json")
}

#[test]
fn default_corpus_matches_golden_report() {
    let report = verify_suite(&default_corpus(DEFAULT_SEED), None, &Limits::default());
    for r in report.failures() {
        eprintln!("FAIL {} {} {:?}: {} {} {}", r.claim, r.instance, r.ell, r.computed, r.bounds, r.detail);
    }
    let t = report.tally();
    eprintln!("pass {} fail {} skip {}", t.pass, t.fail, t.skip);
    assert!(report.all_pass());
    let json = report.to_json(false);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(golden_path(), &json).unwrap();
    }
    let golden = std::fs::read_to_string(golden_path()).expect("golden report present");
    assert!(golden == json, "report differs from the golden file; rerun with UPDATE_GOLDEN=1 after checking");
}
