#![no_main]

use libfuzzer_sys::fuzz_target;
use osweep::StepMultiset;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(m) = text.parse::<StepMultiset>() {
        let again: StepMultiset = m.to_string().parse().expect("printed multiset must parse");
        assert_eq!(again, m);
    }
});
