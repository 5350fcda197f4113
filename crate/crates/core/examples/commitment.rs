//! The value of commitment on the 2x2 game where committing to a mixed
//! strategy beats both pure commitment and every Nash equilibrium.
//!
//! `cargo run --example commitment`

use bimatrix::concepts::{correlated_optimize, maximin, nash_equilibria, payoff_weights, pure_commitment, stackelberg_multi_lp};
use bimatrix::{format_rational, parse_game, Player};

fn main() {
    let game = parse_game(include_str!("../games/commitment_example.json")).expect("bundled game parses");
    let show = |xs: &[bimatrix::Rational]| xs.iter().map(format_rational).collect::<Vec<_>>().join(", ");

    let mm = maximin(&game, Player::One);
    println!("maximin            {:>5}  ({})", format_rational(&mm.value), show(mm.strategy.probabilities()));

    let nash = nash_equilibria(&game).expect("2x2 is within the cap");
    for e in &nash.equilibria {
        println!(
            "nash               {:>5}  ({}) vs ({})",
            format_rational(&e.value1),
            show(e.sigma1.probabilities()),
            show(e.sigma2.probabilities())
        );
    }

    let ce = correlated_optimize(&game, &payoff_weights(&game, Player::One)).expect("weights match");
    println!("best correlated    {:>5}", format_rational(&ce.value));

    let pure = pure_commitment(&game, Player::One);
    println!(
        "pure commitment    {:>5}  commit to {}, follower plays {}",
        format_rational(&pure.value),
        game.row_labels()[pure.strategy],
        game.col_labels()[pure.follower_response]
    );

    let st = stackelberg_multi_lp(&game, Player::One);
    println!(
        "mixed commitment   {:>5}  commit to ({}), follower plays {}",
        format_rational(&st.leader_value),
        show(st.leader_strategy.probabilities()),
        game.col_labels()[st.follower_response]
    );
    for note in &st.notes {
        println!("  note: {note}");
    }
}
