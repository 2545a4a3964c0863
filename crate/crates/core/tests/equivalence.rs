use edsmatch::eds::{generate_random, EdsText, GeneratorParams, LenRange};
use edsmatch::matcher::{search, verify_occurrence};
use edsmatch::naive::{naive_occurrences, ExpansionBudget};
use proptest::prelude::*;

fn small_text(seed: u64, sigma: usize, empty_prob: f64) -> EdsText {
    let params = GeneratorParams {
        k: LenRange::new(1, 5),
        seed_len: LenRange::new(0, 4),
        alts: LenRange::new(1, 4),
        alt_len: LenRange::new(0, 4),
        sigma,
        empty_prob,
    };
    generate_random(&params, seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn matcher_equals_oracle(
        seed in any::<u64>(),
        sigma in 1usize..=3,
        empty_prob in 0.0f64..0.4,
        pattern in "[abc]{1,7}",
    ) {
        let t = small_text(seed, sigma, empty_prob);
        let report = search(pattern.as_bytes(), &t).unwrap();
        let expected = naive_occurrences(pattern.as_bytes(), &t, ExpansionBudget::default()).unwrap();
        prop_assert_eq!(&report.occurrences, &expected);
        for &occ in &report.occurrences {
            prop_assert!(verify_occurrence(pattern.as_bytes(), &t, occ).is_some());
        }
        let gamma = expected.iter().map(|o| t.symbols_between(o.head, o.tail)).max().unwrap_or(0);
        prop_assert_eq!(report.gamma, gamma);
        prop_assert!(report.counters.max_extend_depth < t.seed_count());
    }
}
