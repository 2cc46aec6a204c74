#![no_main]

use layered_hilbert::hilbert::{DualResult, HilbertResult};
use layered_hilbert::oracle::WordCount;
use layered_hilbert::series::{IntPoly, IntSeries};
use libfuzzer_sys::fuzz_target;

// Every emitted result object can be read back; decoding arbitrary bytes
// into any of the result shapes must never panic, and anything accepted
// must round-trip.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = serde_json::from_str::<HilbertResult>(text) {
        let written = serde_json::to_string(&r).expect("results serialize");
        assert_eq!(serde_json::from_str::<HilbertResult>(&written).unwrap(), r);
    }
    if let Ok(d) = serde_json::from_str::<DualResult>(text) {
        let written = serde_json::to_string(&d).expect("results serialize");
        assert_eq!(serde_json::from_str::<DualResult>(&written).unwrap(), d);
    }
    if let Ok(w) = serde_json::from_str::<WordCount>(text) {
        let written = serde_json::to_string(&w).expect("results serialize");
        assert_eq!(serde_json::from_str::<WordCount>(&written).unwrap(), w);
    }
    if let Ok(s) = serde_json::from_str::<IntSeries>(text) {
        let written = serde_json::to_string(&s).expect("results serialize");
        assert_eq!(serde_json::from_str::<IntSeries>(&written).unwrap(), s);
    }
    let _ = serde_json::from_str::<IntPoly>(text);
});
