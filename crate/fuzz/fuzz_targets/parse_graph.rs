#![no_main]

use layered_hilbert::graph::{parse_graph, serialize_graph};
use libfuzzer_sys::fuzz_target;

// Graph files are untrusted input: parsing must never panic, and any
// accepted graph must survive a serialize/parse round trip unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(graph) = parse_graph(text) {
        let written = serialize_graph(&graph);
        let back = parse_graph(&written).expect("serialized graphs parse");
        assert_eq!(back, graph);
        assert_eq!(serialize_graph(&back), written);
    }
});
