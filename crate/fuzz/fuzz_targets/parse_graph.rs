#![no_main]

use libfuzzer_sys::fuzz_target;
use spanner_core::format::{parse_graph, parse_header};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Some(first) = text.lines().next() {
        let _ = parse_header(first);
    }
    if let Ok(g) = parse_graph(text) {
        for e in g.edges() {
            assert!(e.u < g.n() && e.v < g.n() && e.u != e.v);
            assert!(e.weight > 0.0 && e.weight.is_finite());
        }
    }
});
