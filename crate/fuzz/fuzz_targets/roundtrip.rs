#![no_main]

use hopfpar::format::{parse_document, write_document};
use libfuzzer_sys::fuzz_target;

// Any accepted document is a fixed point of write ∘ parse after one pass.
fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(doc) = parse_document(s) else { return };
    let once = write_document(&doc);
    let again = parse_document(&once).expect("written documents parse");
    assert_eq!(write_document(&again), once);
});
