//! Searches too slow for the default test run; use `cargo test --release -- --ignored`.

use ramsey_cli::parallel;
use ramsey_core::search::SearchOptions;
use ramsey_core::TargetPattern;

#[test]
#[ignore = "enumerates about 10^5 connected graphs with 13 edges"]
fn c4_at_three() {
    let opts = SearchOptions {
        allow_large: true,
        ..SearchOptions::connected(13)
    };
    let r = parallel::search(TargetPattern::Cycle(4), 3, &opts, 0).unwrap();
    assert_eq!(r.value(), Some(13));
    r.validate().unwrap();
}

#[test]
#[ignore = "enumerates all connected graphs with up to 11 edges"]
fn c3_at_three() {
    let r = parallel::search(TargetPattern::Cycle(3), 3, &SearchOptions::connected(11), 0).unwrap();
    assert_eq!(r.value(), Some(11));
    r.validate().unwrap();
}
