use golod_core::corpus;

#[test]
fn every_fixture_meets_its_expectations() {
    let mut failures = Vec::new();
    for nc in corpus::all() {
        let t = std::time::Instant::now();
        failures.extend(nc.mismatches().unwrap());
        eprintln!("{} checked in {:?}", nc.name, t.elapsed());
    }
    assert!(failures.is_empty(), "{failures:#?}");
}
