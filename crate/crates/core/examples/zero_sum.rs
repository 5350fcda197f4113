//! In constant-sum games commitment is worthless: the optimal commitment
//! value equals the maximin value, and the two maximin values add up to the
//! constant.
//!
//! `cargo run --example zero_sum`

use bimatrix::analysis::{random_corpus, CorpusKind};
use bimatrix::concepts::{maximin, stackelberg_multi_lp};
use bimatrix::{constant_sum, format_rational, parse_game, Player};

fn main() {
    let rps = parse_game(include_str!("../games/rock_paper_scissors.json")).unwrap();
    let mm = maximin(&rps, Player::One);
    let probs: Vec<String> = mm.strategy.probabilities().iter().map(format_rational).collect();
    println!("{}: maximin {} with ({})", rps.title(), format_rational(&mm.value), probs.join(", "));

    let corpus = random_corpus(7, 20, CorpusKind::ConstantSum);
    println!("\n{:<22} {:>6} {:>12} {:>12} {:>14}", "game", "size", "maximin", "commitment", "c - opponent");
    for g in &corpus.games {
        let c = constant_sum(g).expect("constant-sum corpus");
        let own = maximin(g, Player::One).value;
        let other = maximin(g, Player::Two).value;
        let commit = stackelberg_multi_lp(g, Player::One).leader_value;
        assert!(own == commit && own == &c - &other);
        println!(
            "{:<22} {:>6} {:>12} {:>12} {:>14}",
            g.title(),
            format!("{}x{}", g.num_rows(), g.num_cols()),
            format_rational(&own),
            format_rational(&commit),
            format_rational(&(&c - &other))
        );
    }
}
