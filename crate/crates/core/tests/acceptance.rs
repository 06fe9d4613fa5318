//! The acceptance suite: runs every named criterion and prints one pass/fail
//! line per criterion. All criteria are exact; there are no tolerances to
//! tune.

use plactica::verify;

#[test]
fn acceptance() {
    let reports = verify::run("all").expect("the suite names are fixed");
    let mut all_ok = true;
    for r in &reports {
        println!(
            "[{}] {} - {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.name,
            r.detail
        );
        all_ok &= r.passed;
    }
    assert!(all_ok, "at least one acceptance criterion failed");
}
