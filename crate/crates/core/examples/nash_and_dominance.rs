//! Nash support enumeration, interchangeability of equilibria and iterated
//! strict dominance on the bundled games.
//!
//! `cargo run --example nash_and_dominance`

use bimatrix::analysis::check_interchangeability;
use bimatrix::concepts::{iterated_strict_dominance, nash_equilibria};
use bimatrix::{format_rational, parse_game};

const GAMES: [&str; 4] = [
    include_str!("../games/commitment_example.json"),
    include_str!("../games/prisoners_dilemma.json"),
    include_str!("../games/battle_of_the_sexes.json"),
    include_str!("../games/rock_paper_scissors.json"),
];

fn main() {
    for text in GAMES {
        let game = parse_game(text).unwrap();
        println!("{}", game.title());

        let dominance = iterated_strict_dominance(&game);
        let removed: Vec<String> = dominance
            .eliminated
            .iter()
            .map(|e| format!("{} (player {})", e.label, e.player))
            .collect();
        if removed.is_empty() {
            println!("  no strictly dominated strategies");
        } else {
            println!("  eliminated in order: {}", removed.join(", "));
        }

        let found = nash_equilibria(&game).unwrap();
        for e in &found.equilibria {
            let s1: Vec<String> = e.sigma1.probabilities().iter().map(format_rational).collect();
            let s2: Vec<String> = e.sigma2.probabilities().iter().map(format_rational).collect();
            println!(
                "  equilibrium ({}) vs ({}) payoffs ({}, {})",
                s1.join(", "),
                s2.join(", "),
                format_rational(&e.value1),
                format_rational(&e.value2)
            );
        }
        if found.degenerate {
            println!("  degenerate: only vertex equilibria are listed");
        }
        let swap = check_interchangeability(&found.equilibria, &game);
        match swap.counterexample {
            None => println!("  equilibria are interchangeable"),
            Some((i, j)) => println!("  not interchangeable: rows of #{i} with columns of #{j} is no equilibrium"),
        }
        println!();
    }
}
