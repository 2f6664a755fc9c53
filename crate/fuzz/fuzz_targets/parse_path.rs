#![no_main]

use libfuzzer_sys::fuzz_target;
use osweep::Path;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(path) = text.parse::<Path>() {
        // Printing and re-parsing is the identity.
        let again: Path = path.to_string().parse().expect("printed path must parse");
        assert_eq!(again, path);
        let _ = path.classify();
    }
});
