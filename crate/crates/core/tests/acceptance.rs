//! Exit criteria. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed. Built with `harness = false` so the lines
//! are always shown.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use edsmatch::eds::{generate_random, parse_eds, EdsText, GeneratorParams, LenRange, Occurrence};
use edsmatch::kmp::FailureFunction;
use edsmatch::lce::LceOracle;
use edsmatch::matcher::{eds_matches_solid, search, verify_occurrence, MatchReport};
use edsmatch::naive::{naive_occurrences, ExpansionBudget};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXAMPLE1: &str = "abbc{ab,aab,acca}cca{aabcab,cba}bb";
const EXAMPLE3: &str = "aacabbcbbc{a,aab,acca}bb{c,acabbcbb,cba}bacabbc{b,cabb,bbc,aacabb}cbc";
const EXAMPLE4: &str = "ab{bcab,abb}{ab,cbb,abc}cca{bb,cb}ca";

const GOLDEN_EXAMPLE3: [(usize, usize); 7] = [
    (3, 8),
    (10, 15),
    (11, 14),
    (11, 15),
    (14, 14),
    (17, 22),
    (22, 24),
];
const GOLDEN_LIMIT: Duration = Duration::from_millis(10);

const RANDOM_INSTANCES: usize = 1_000;
const RANDOM_SEED: u64 = 0x5eed_0001;
const RANDOM_LIMIT: Duration = Duration::from_secs(60);

const LCE_QUERIES: usize = 100_000;
const FAILURE_PATTERNS: usize = 200;
const FAILURE_MAX_LEN: usize = 64;

const SCALING_M: usize = 32;
const SCALING_ALPHA: usize = 8;
const SCALING_SIZES: [usize; 2] = [500_000, 1_000_000];
const SCALING_RATIO: (f64, f64) = (1.2, 3.5);
const SCALING_LIMIT: Duration = Duration::from_secs(30);
const SCALING_REPEATS: usize = 3;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn text(s: &str) -> EdsText {
    parse_eds(s.as_bytes()).unwrap()
}

fn pairs(occ: &[Occurrence]) -> Vec<(usize, usize)> {
    occ.iter().map(|o| (o.head, o.tail)).collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn golden_example3() -> Outcome {
    let t = text(EXAMPLE3);
    let (report, took) = timed(|| search(b"cabbcb", &t).unwrap());
    let got = pairs(&report.occurrences);
    let extra: Vec<_> = got
        .iter()
        .filter(|p| !GOLDEN_EXAMPLE3.contains(p))
        .collect();
    let missing: Vec<_> = GOLDEN_EXAMPLE3
        .iter()
        .filter(|p| !got.contains(p))
        .collect();
    let exact = extra.is_empty() && missing.is_empty();
    outcome(
        exact && took < GOLDEN_LIMIT,
        format!("got {got:?}; extra {extra:?}; missing {missing:?}; {took:?}"),
    )
}

fn golden_example4() -> Outcome {
    let t = text(EXAMPLE4);
    let (report, took) = timed(|| search(b"babbcb", &t).unwrap());
    let found = report.occurrences.contains(&Occurrence::new(2, 4));
    outcome(
        found && took < GOLDEN_LIMIT,
        format!("(2,4) found: {found}; {took:?}"),
    )
}

fn stats_example1() -> Outcome {
    let s = text(EXAMPLE1).stats();
    let got = (s.n, s.total_size, s.k, s.alpha);
    outcome(got == (11, 27, 3, 3), format!("(n, N, k, alpha) = {got:?}"))
}

fn matching_example2() -> Outcome {
    let x = text(EXAMPLE1);
    let y = eds_matches_solid(&x, b"abbcabccacbabb");
    let z = eds_matches_solid(&x, b"abbccccca");
    outcome(y && !z, format!("Y matches: {y}; Z matches: {z}"))
}

struct RandomRun {
    pattern: Vec<u8>,
    text: EdsText,
    report: MatchReport,
}

/// Picks a pattern of `m` letters: half the time a window of one spelling of
/// the text (so occurrences exist), otherwise random letters.
fn pick_pattern(rng: &mut ChaCha8Rng, t: &EdsText, m: usize, sigma: usize) -> Vec<u8> {
    if rng.gen_bool(0.5) {
        let mut spelling = Vec::new();
        for (i, seed) in t.seeds().iter().enumerate() {
            spelling.extend_from_slice(seed);
            if let Some(sym) = t.symbols().get(i) {
                let alts = sym.alternatives();
                spelling.extend_from_slice(&alts[rng.gen_range(0..alts.len())]);
            }
        }
        if spelling.len() >= m {
            let start = rng.gen_range(0..=spelling.len() - m);
            return spelling[start..start + m].to_vec();
        }
    }
    (0..m)
        .map(|_| b'a' + rng.gen_range(0..sigma as u8))
        .collect()
}

fn random_instances() -> (Vec<RandomRun>, Outcome) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let mut runs = Vec::with_capacity(RANDOM_INSTANCES);
    let mut mismatches = Vec::new();
    let mut occurrences = 0;
    for _ in 0..RANDOM_INSTANCES {
        let sigma = rng.gen_range(2..=4);
        let params = GeneratorParams {
            k: LenRange::new(1, 5),
            seed_len: LenRange::new(0, 5),
            alts: LenRange::new(1, 4),
            alt_len: LenRange::new(0, 5),
            sigma,
            empty_prob: 0.1,
        };
        let t = generate_random(&params, rng.gen()).unwrap();
        let m = rng.gen_range(1..=8);
        let pattern = pick_pattern(&mut rng, &t, m, sigma);
        let report = search(&pattern, &t).unwrap();
        let expected = naive_occurrences(&pattern, &t, ExpansionBudget::default()).unwrap();
        if report.occurrences != expected && mismatches.len() < 3 {
            mismatches.push(format!("{} in {}", String::from_utf8_lossy(&pattern), t));
        }
        occurrences += report.occurrences.len();
        runs.push(RandomRun {
            pattern,
            text: t,
            report,
        });
    }
    let took = start.elapsed();
    let pass = mismatches.is_empty() && took < RANDOM_LIMIT;
    let detail = format!(
        "{RANDOM_INSTANCES} instances, {occurrences} occurrences, mismatches {mismatches:?}; {took:?}"
    );
    (runs, outcome(pass, detail))
}

fn lce_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ 6);
    let mut queries = 0;
    let mut wrong = 0;
    let word = |rng: &mut ChaCha8Rng, max_len: usize, sigma: u8| -> Vec<u8> {
        let len = rng.gen_range(0..=max_len);
        (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
    };
    while queries < LCE_QUERIES {
        let sigma = rng.gen_range(1..=4);
        let mut pattern = word(&mut rng, 40, sigma);
        if pattern.is_empty() {
            pattern.push(b'a');
        }
        let refs: Vec<Vec<u8>> = (0..rng.gen_range(1..=6))
            .map(|_| word(&mut rng, 40, sigma))
            .collect();
        let oracle = LceOracle::build(&pattern, &refs);
        for _ in 0..500 {
            let r = rng.gen_range(0..refs.len());
            let p = rng.gen_range(1..=pattern.len() + 1);
            let j = rng.gen_range(1..=refs[r].len() + 1);
            let naive = pattern[p - 1..]
                .iter()
                .zip(&refs[r][j - 1..])
                .take_while(|(a, b)| a == b)
                .count();
            if oracle.lce(p, r, j) != Ok(naive) {
                wrong += 1;
            }
            queries += 1;
        }
    }
    outcome(wrong == 0, format!("{queries} queries, {wrong} wrong"))
}

fn failure_exactness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ 7);
    let mut wrong = 0;
    for _ in 0..FAILURE_PATTERNS {
        let sigma = rng.gen_range(1..=4);
        let len = rng.gen_range(1..=FAILURE_MAX_LEN);
        let p: Vec<u8> = (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect();
        let f = FailureFunction::build(&p).unwrap();
        for i in 1..=len {
            let brute = (0..i).rev().find(|&b| p[..b] == p[i - b..i]).unwrap();
            if f.border(i) != brute {
                wrong += 1;
            }
        }
    }
    outcome(
        wrong == 0,
        format!("{FAILURE_PATTERNS} patterns, {wrong} wrong entries"),
    )
}

fn soundness(runs: &[RandomRun]) -> Outcome {
    let mut checked = 0;
    let mut unsound = Vec::new();
    for run in runs {
        for &occ in &run.report.occurrences {
            checked += 1;
            if verify_occurrence(&run.pattern, &run.text, occ).is_none() && unsound.len() < 3 {
                unsound.push(format!(
                    "{occ:?} of {}",
                    String::from_utf8_lossy(&run.pattern)
                ));
            }
        }
    }
    outcome(
        unsound.is_empty(),
        format!("{checked} occurrences verified, unsound {unsound:?}"),
    )
}

/// A random text of total size close to `target` with up to `SCALING_ALPHA`
/// alternatives per symbol, and a pattern read off one of its spellings.
fn scaling_instance(target: usize, seed: u64) -> (EdsText, Vec<u8>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Mean letters per seed plus symbol: 10 + 5 * 5.
    let k = target / 35;
    let params = GeneratorParams {
        k: LenRange::exactly(k),
        seed_len: LenRange::new(0, 20),
        alts: LenRange::new(2, SCALING_ALPHA),
        alt_len: LenRange::new(0, 10),
        sigma: 4,
        empty_prob: 0.05,
    };
    let t = generate_random(&params, rng.gen()).unwrap();
    let mut pattern = Vec::new();
    let mut i = k / 2;
    while pattern.len() < SCALING_M {
        pattern.extend_from_slice(&t.seeds()[i]);
        if let Some(sym) = t.symbols().get(i) {
            let alts = sym.alternatives();
            pattern.extend_from_slice(&alts[rng.gen_range(0..alts.len())]);
        }
        i += 1;
    }
    pattern.truncate(SCALING_M);
    (t, pattern)
}

fn scaling(reports: &mut Vec<MatchReport>) -> Outcome {
    let start = Instant::now();
    let mut times = Vec::new();
    let mut details = Vec::new();
    let mut depth_ok = true;
    for (idx, &size) in SCALING_SIZES.iter().enumerate() {
        let (t, pattern) = scaling_instance(size, RANDOM_SEED ^ 9 ^ idx as u64);
        let stats = t.stats();
        let mut best = Duration::MAX;
        let mut report = None;
        for _ in 0..SCALING_REPEATS {
            let (r, took) = timed(|| search(&pattern, &t).unwrap());
            best = best.min(took);
            report = Some(r);
        }
        let report = report.unwrap();
        depth_ok &= report.counters.max_extend_depth < stats.k;
        details.push(format!(
            "N={} alpha={} occ={} gamma={} depth={} best={best:?}",
            stats.total_size,
            stats.alpha,
            report.occurrences.len(),
            report.gamma,
            report.counters.max_extend_depth
        ));
        times.push(best);
        reports.push(report);
    }
    let ratio = times[1].as_secs_f64() / times[0].as_secs_f64();
    let took = start.elapsed();
    let in_band = (SCALING_RATIO.0..=SCALING_RATIO.1).contains(&ratio);
    outcome(
        in_band && depth_ok && took < SCALING_LIMIT,
        format!("{}; ratio {ratio:.2}; total {took:?}", details.join("; ")),
    )
}

fn output_discipline(random: &[RandomRun], scaled: &[MatchReport]) -> Outcome {
    let strictly_sorted = |occ: &[Occurrence]| occ.windows(2).all(|w| w[0] < w[1]);
    let sorted = random
        .iter()
        .all(|r| strictly_sorted(&r.report.occurrences))
        && scaled.iter().all(|r| strictly_sorted(&r.occurrences));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ex3.eds");
    std::fs::write(&path, EXAMPLE3).unwrap();
    let path = path.to_str().unwrap();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_edsmatch"))
            .args(args)
            .output()
            .unwrap()
    };
    let mut deterministic = true;
    for args in [
        &["match", "-p", "cabbcb", "-t", path][..],
        &["match", "--json", "-p", "cabbcb", "-t", path],
        &["generate", "--seed", "7", "--k", "50..60"],
    ] {
        let (a, b) = (run(args), run(args));
        deterministic &= a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    }
    outcome(
        sorted && deterministic,
        format!("sorted and duplicate-free: {sorted}; CLI byte-identical: {deterministic}"),
    )
}

fn main() -> ExitCode {
    let total = Instant::now();
    let (runs, equivalence) = random_instances();
    let mut scaled = Vec::new();
    let scaling = scaling(&mut scaled);
    let results = [
        ("1 golden occurrences, Example 3", golden_example3()),
        ("2 golden occurrence, Example 4", golden_example4()),
        ("3 stats, Example 1", stats_example1()),
        ("4 matching predicate, Example 2", matching_example2()),
        ("5 oracle equivalence", equivalence),
        ("6 LCE exactness", lce_exactness()),
        ("7 failure function exactness", failure_exactness()),
        ("8 soundness", soundness(&runs)),
        ("9 scaling", scaling),
        ("10 output discipline", output_discipline(&runs, &scaled)),
    ];

    let mut failed = 0;
    for (name, o) in &results {
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {verdict} ({})", o.detail);
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:?}",
        results.len() - failed,
        total.elapsed()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
