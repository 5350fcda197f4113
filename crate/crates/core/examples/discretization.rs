//! Searching a grid of leader strategies instead of solving the commitment
//! programs, with both follower tie-breaking conventions.
//!
//! `cargo run --example discretization`

use bimatrix::discretization::{grid_count, grid_stackelberg, GridSpec, TieBreak};
use bimatrix::{format_rational, parse_game, Player};

fn main() {
    let game = parse_game(include_str!("../games/commitment_example.json")).unwrap();
    println!("{:>6} {:>18} {:>12}", "N", "leader-favorable", "adversarial");
    for n in [1, 2, 3, 10, 11, 100, 101, 1000] {
        let value = |tie| {
            let out = grid_stackelberg(&game, Player::One, GridSpec::new(n, tie).unwrap()).unwrap();
            format_rational(&out.value)
        };
        println!(
            "{n:>6} {:>18} {:>12}",
            value(TieBreak::LeaderFavorable),
            value(TieBreak::Adversarial)
        );
    }

    println!("\ngrid sizes:");
    for (m, n) in [(2, 100), (3, 100), (6, 25), (10, 100), (50, 1000)] {
        println!("  {m} strategies at N = {n}: {}", grid_count(m, n));
    }
}
