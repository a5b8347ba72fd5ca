//! Curve files either fail to parse or survive a write/parse round trip.

#![no_main]

use libfuzzer_sys::fuzz_target;
use trigonal::format::{parse_curve_file, write_canonical_curve, write_plane_curve, CurveFile};

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(file) = parse_curve_file(s) {
            let text = match &file {
                CurveFile::Plane(c) => write_plane_curve(c),
                CurveFile::Canonical(k) => write_canonical_curve(k),
            };
            assert_eq!(parse_curve_file(&text).ok(), Some(file));
        }
    }
});
