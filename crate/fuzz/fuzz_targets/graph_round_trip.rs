#![no_main]

use gspline::io::json::{graph_to_value, parse_graph};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_graph(text) {
        let doc = graph_to_value(&g);
        let back = parse_graph(&doc.to_string()).expect("canonical documents parse");
        assert_eq!(graph_to_value(&back), doc);
    }
});
