//! Acceptance gate: runs the built-in verification suite and prints one
//! PASS/FAIL line per criterion (visible with `--nocapture`, and always
//! printed on failure).

use legctl::verify;

#[test]
fn acceptance() {
    let outcomes = verify::run_all();
    println!("{}", verify::render(&outcomes));
    assert_eq!(outcomes.len(), 10);
    let failed: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| format!("criterion {} ({})", o.id, o.title))
        .collect();
    assert!(failed.is_empty(), "failed: {}", failed.join(", "));
}
