//! Optimal commitment two ways: one linear program per follower response,
//! and a single program over outcome distributions. Also shows the column
//! player leading.
//!
//! `cargo run --example stackelberg_lps [game.json]`

use bimatrix::concepts::{stackelberg_multi_lp, stackelberg_single_lp, ColumnStatus};
use bimatrix::{format_rational, parse_game, Player};

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable game file"),
        None => include_str!("../games/security_patrol.json").to_string(),
    };
    let game = parse_game(&text).expect("valid game");

    for leader in [Player::One, Player::Two] {
        let follower_labels = game.labels(leader.other());
        let multi = stackelberg_multi_lp(&game, leader);
        println!("{} with player {leader} leading", game.title());
        for (label, status) in follower_labels.iter().zip(&multi.per_column) {
            match status {
                ColumnStatus::Optimal(v) => println!("  induce {label:<10} best leader payoff {}", format_rational(v)),
                ColumnStatus::Infeasible => println!("  induce {label:<10} impossible"),
            }
        }
        let probs: Vec<String> = multi.leader_strategy.probabilities().iter().map(format_rational).collect();
        println!(
            "  commit to ({}) -> {} for the leader, {} for the follower",
            probs.join(", "),
            format_rational(&multi.leader_value),
            format_rational(&multi.follower_value)
        );

        let single = stackelberg_single_lp(&game, leader);
        println!("  single program value {}; outcome distribution:", format_rational(&single.value));
        for row in single.distribution.rows() {
            let cells: Vec<String> = row.iter().map(|p| format!("{:>8}", format_rational(p))).collect();
            println!("    {}", cells.join(""));
        }
        assert_eq!(single.value, multi.leader_value);
        println!();
    }
}
