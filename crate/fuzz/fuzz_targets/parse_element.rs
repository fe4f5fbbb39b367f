#![no_main]

use gspline::io::{format_element, parse_element};
use gspline::RingSpec;
use libfuzzer_sys::fuzz_target;

// First byte picks the ring, the rest is the element text.
fuzz_target!(|data: &[u8]| {
    let Some((&sel, rest)) = data.split_first() else { return };
    let Ok(text) = std::str::from_utf8(rest) else { return };
    let ring = match sel % 3 {
        0 => RingSpec::Integers,
        1 => RingSpec::PolyRational,
        _ => RingSpec::integers_mod(2 + u64::from(sel / 3)).unwrap(),
    };
    if let Ok(x) = parse_element(text, ring) {
        let again = parse_element(&format_element(&x), ring).expect("canonical text parses");
        assert_eq!(again, x);
    }
});
