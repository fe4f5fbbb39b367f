#![no_main]

use libfuzzer_sys::fuzz_target;

const HOST: &str = r#"{
  "ring": {"kind": "poly-rational"},
  "vertices": ["v1", "v2", "v3", "v4"],
  "edges": [
    {"u": "v1", "v": "v2", "ideal": ["x+1"]},
    {"u": "v2", "v": "v3", "ideal": ["x^2+1"]},
    {"u": "v3", "v": "v4", "ideal": ["x^3+1"]},
    {"u": "v1", "v": "v4", "ideal": ["x^4+1"]}
  ]
}"#;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = gspline::io::parse_graph(HOST).expect("host graph is valid");
    if let Ok(p) = gspline::io::parse_spline(text, &g) {
        // Anything that parses must be checkable.
        gspline::verify(&g, &p).expect("parsed splines fit their host");
    }
});
