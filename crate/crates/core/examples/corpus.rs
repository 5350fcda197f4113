//! Compares every solution concept on a seeded random corpus and checks the
//! ordering claims between them.
//!
//! `cargo run --release --example corpus [seed] [count]`

use bimatrix::analysis::{compare_corpus, random_corpus, CorpusKind};
use bimatrix::{format_rational, Player};

fn main() {
    let mut args = std::env::args().skip(1);
    let seed: u64 = args.next().map_or(2024, |s| s.parse().expect("seed is an integer"));
    let count: usize = args.next().map_or(40, |s| s.parse().expect("count is an integer"));

    let mut failures = 0;
    for kind in [CorpusKind::GeneralSum, CorpusKind::ConstantSum] {
        let corpus = random_corpus(seed, count, kind);
        let reports = compare_corpus(&corpus, Player::One);
        let strict_gain = reports
            .iter()
            .filter(|r| r.stackelberg_value > r.pure_commit_value)
            .count();
        println!("{kind:?} corpus, seed {seed}, {count} games");
        println!("  mixed commitment beats pure commitment in {strict_gain} games");
        for r in reports.iter().filter(|r| !r.all_hold()) {
            failures += 1;
            println!("  FAILED {}: {:?}", r.game_title, r.checks);
        }
        // constant-sum games have no gain at all
        let best = reports.iter().max_by_key(|r| &r.stackelberg_value - &r.maximin_value);
        if let (CorpusKind::GeneralSum, Some(r)) = (kind, best) {
            println!(
                "  largest gain over maximin: {} ({} vs {})",
                r.game_title,
                format_rational(&r.stackelberg_value),
                format_rational(&r.maximin_value)
            );
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
    println!("all checks hold");
}
