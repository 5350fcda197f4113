//! Exact solvers for two-player normal-form games.
//!
//! The crate computes maximin strategies, pure and mixed commitment
//! (Stackelberg) strategies, optimal correlated equilibria and Nash
//! equilibria, all over exact rationals. It also provides the grid
//! discretization of the leader's strategy space and reports that compare the
//! concepts on a given game.
//!
//! ```
//! use bimatrix::{parse_game, stackelberg_multi_lp, Player};
//!
//! let game = parse_game(r#"{
//!     "title": "commitment",
//!     "row_labels": ["U", "D"],
//!     "col_labels": ["L", "R"],
//!     "payoffs": [[[1, 1], [3, 0]], [[0, 0], [2, 1]]]
//! }"#).unwrap();
//! let sol = stackelberg_multi_lp(&game, Player::One);
//! assert_eq!(bimatrix::format_rational(&sol.leader_value), "5/2");
//! ```

pub mod analysis;
pub mod cli;
pub mod concepts;
pub mod discretization;
pub mod game;
pub mod lp;
mod ser;

pub use analysis::{check_interchangeability, compare_concepts, ConceptReport};
pub use concepts::{
    best_responses, correlated_optimize, iterated_strict_dominance, maximin, nash_equilibria,
    nash_support_enumeration, pure_commitment, stackelberg_multi_lp, stackelberg_single_lp,
    StackelbergSolution,
};
pub use discretization::{grid_count, grid_stackelberg, GridSpec, TieBreak};
pub use game::{
    constant_sum, expected_utility, format_rational, parse_game, parse_rational, Game, GameError,
    JointDistribution, MixedStrategy, Player, Rational,
};
pub use lp::{solve_lp, LinearProgram, LpOutcome, Relation};
