//! The acceptance suite: one pass/fail line per criterion, with failing
//! detail lines printed for diagnosis.

use sextic_core::verify;

#[test]
fn acceptance_criteria() {
    let acc = verify::acceptance();
    let mut all = true;
    for (name, pass, detail) in &acc.criteria {
        println!("{} criterion {}", if *pass { "PASS" } else { "FAIL" }, name);
        if !*pass {
            all = false;
            for l in detail.lines.iter().filter(|l| !l.pass) {
                println!("    FAIL {}: {}", l.name, l.detail);
            }
        }
    }
    assert!(all, "acceptance criteria failed");
}
