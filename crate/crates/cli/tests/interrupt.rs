//! The stop flag is process-wide, so this binary holds a single test.

use schinzel_cli::execute;

fn args(a: &[&str]) -> Vec<String> {
    std::iter::once("schinzel").chain(a.iter().copied()).map(String::from).collect()
}

#[test]
fn interrupted_scans_flush_partial_reports() {
    schinzel::interrupt::request_stop();
    let out = execute(args(&["hilbert-scan", "--want", "5", "y^2 + t"]), None);
    assert_eq!(out.code, 3);
    let doc = out.doc.unwrap();
    assert_eq!(doc["result"]["interrupted"], true);
    assert_eq!(doc["result"]["exhausted"], false);

    let out = execute(args(&["mod-n", "--mod", "5", "--want", "3", "y + 1"]), None);
    assert_eq!(out.code, 3);
    assert_eq!(out.doc.unwrap()["result"]["interrupted"], true);

    schinzel::interrupt::clear_stop();
    let out = execute(args(&["hilbert-scan", "--want", "5", "y^2 + t"]), None);
    assert_eq!(out.code, 0);
}
