//! Optimizing over correlated equilibria with arbitrary linear objectives.
//!
//! `cargo run --example correlated`

use bimatrix::concepts::{correlated_constraints_hold, correlated_optimize, nash_equilibria, payoff_weights};
use bimatrix::{format_rational, parse_game, Game, Player, Rational};

fn print_distribution(game: &Game, rows: &[Vec<Rational>]) {
    for (label, row) in game.row_labels().iter().zip(rows) {
        let cells: Vec<String> = row.iter().map(|p| format!("{:>6}", format_rational(p))).collect();
        println!("    {label:<9}{}", cells.join(""));
    }
}

fn main() {
    let game = parse_game(include_str!("../games/battle_of_the_sexes.json")).unwrap();

    let welfare: Vec<Vec<Rational>> = (0..game.num_rows())
        .map(|i| (0..game.num_cols()).map(|j| game.payoff(Player::One, i, j) + game.payoff(Player::Two, i, j)).collect())
        .collect();
    let objectives = [
        ("row player's payoff", payoff_weights(&game, Player::One)),
        ("column player's payoff", payoff_weights(&game, Player::Two)),
        ("total welfare", welfare),
    ];
    for (name, weights) in &objectives {
        let best = correlated_optimize(&game, weights).expect("weights match the game");
        assert!(correlated_constraints_hold(&game, &best.distribution));
        println!("maximize {name}: {}", format_rational(&best.value));
        print_distribution(&game, best.distribution.rows());
    }

    let nash = nash_equilibria(&game).unwrap();
    let values: Vec<String> = nash
        .equilibria
        .iter()
        .map(|e| format!("({}, {})", format_rational(&e.value1), format_rational(&e.value2)))
        .collect();
    println!("nash payoffs for comparison: {}", values.join(" "));
}
