#![no_main]

use libfuzzer_sys::fuzz_target;
use osweep::{inv_osweep, osweep, Path, PermSchedule};

// Small Dyck paths only: the input is parsed as a path and skipped unless it
// is a Dyck path of modest length and height.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(path) = text.parse::<Path>() else { return };
    if path.len() > 24 || path.steps().iter().any(|b| b.abs() > 8) || !path.is_dyck() {
        return;
    }
    for s in [PermSchedule::reverse(), PermSchedule::identity(), PermSchedule::cycle()] {
        let pre = inv_osweep(&path, &s).expect("Dyck paths have a preimage");
        assert_eq!(osweep(&pre, &s), path);
        assert_eq!(inv_osweep(&osweep(&path, &s), &s).unwrap(), path);
    }
});
