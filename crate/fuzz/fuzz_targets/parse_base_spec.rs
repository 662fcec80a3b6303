#![no_main]

use libfuzzer_sys::fuzz_target;
use spanner_core::BaseGraph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(base) = text.parse::<BaseGraph>() {
        let shown = base.to_string();
        assert_eq!(shown.parse::<BaseGraph>().ok(), Some(base.clone()));
        let g = base.build();
        assert!(g.n() <= 1 << 16);
    }
});
