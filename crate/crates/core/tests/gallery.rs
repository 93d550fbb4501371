use toric_core::gallery::{entries, entry};

#[test]
fn every_entry_verifies() {
    for e in entries() {
        let report = e.verify().unwrap();
        let failed: Vec<String> = report
            .facts
            .iter()
            .filter(|f| !f.pass)
            .map(|f| format!("{}: expected {}, got {} {:?}", f.name, f.expected, f.actual, f.error))
            .collect();
        assert!(report.passed, "{}: {failed:?}", e.name);
        assert!(!report.cap_exceeded, "{}", e.name);
    }
}

#[test]
fn facts_are_tagged() {
    for e in entries() {
        let facts = e.facts().unwrap();
        assert!(!facts.is_empty(), "{} has no facts", e.name);
        // Every entry carries at least one literature value.
        assert!(facts.iter().any(|f| f.stated), "{}", e.name);
    }
}

#[test]
fn aliases_point_at_their_entries() {
    assert_eq!(entry("ex47").unwrap().name, "graver_gap");
    assert_eq!(entry("ex26").unwrap().name, "sparse_curve");
    assert_eq!(entry("ex44").unwrap().name, "codim2_surface");
    assert!(entry("nope").is_err());
}
