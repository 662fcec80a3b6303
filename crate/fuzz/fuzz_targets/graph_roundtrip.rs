#![no_main]

use libfuzzer_sys::fuzz_target;
use spanner_core::format::{emit_graph, parse_graph};

// Anything that parses must survive emit -> parse unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(g) = parse_graph(text) else { return };
    let again = parse_graph(&emit_graph(&g)).expect("emitted graph parses");
    assert_eq!(again, g);
});
