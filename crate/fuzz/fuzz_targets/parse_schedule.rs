#![no_main]

use libfuzzer_sys::fuzz_target;
use osweep::PermSchedule;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = PermSchedule::parse(text) {
        for k in 1..=12 {
            let phi = s.phi(k);
            let mut sorted = phi.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (1..=k).collect::<Vec<_>>());
        }
        if let Some(json) = s.to_json() {
            let again = PermSchedule::parse(&json).expect("printed schedule must parse");
            assert_eq!(
                (1..=12).map(|k| again.phi(k)).collect::<Vec<_>>(),
                (1..=12).map(|k| s.phi(k)).collect::<Vec<_>>()
            );
        }
    }
});
