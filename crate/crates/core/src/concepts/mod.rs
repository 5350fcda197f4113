//! Solution concepts for two-player normal-form games.
//!
//! Every concept that distinguishes a leader is computed with the leader as
//! the row player; when player two leads, the game is swapped first and the
//! results are mapped back.

use std::borrow::Cow;

use thiserror::Error;

use crate::game::{Game, GameError, MixedStrategy, Player, Rational};

mod correlated;
mod dominance;
mod maximin;
mod nash;
mod stackelberg;

pub use correlated::{correlated_constraints_hold, correlated_optimize, payoff_weights, CorrelatedOptimum};
pub use dominance::{iterated_strict_dominance, strictly_dominated_by_mixture, DominanceResult, Elimination};
pub use maximin::{maximin, maximin_lp, MaximinSolution};
pub use nash::{
    is_nash_equilibrium, nash_equilibria, nash_support_enumeration, NashEnumeration, NashEquilibrium,
    DEFAULT_NASH_CAP,
};
pub use stackelberg::{
    commitment_constraints_hold, pure_commitment, stackelberg_multi_lp, stackelberg_single_lp,
    ColumnStatus, PureCommitment, SingleLpSolution, StackelbergSolution,
};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ConceptError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("{rows}x{cols} game exceeds the enumeration cap of {cap} strategies per player")]
    SizeCap { rows: usize, cols: usize, cap: usize },
}

/// The game seen from `leader`'s side: the leader always picks rows.
pub(crate) fn oriented(game: &Game, leader: Player) -> Cow<'_, Game> {
    match leader {
        Player::One => Cow::Borrowed(game),
        Player::Two => Cow::Owned(game.swapped()),
    }
}

/// Expected utility of each of `follower`'s pure strategies against the
/// leader's mixed strategy.
pub fn follower_utilities(
    game: &Game,
    leader_strategy: &MixedStrategy,
    follower: Player,
) -> Result<Vec<Rational>, GameError> {
    let leader = follower.other();
    let g = oriented(game, leader);
    if leader_strategy.len() != g.num_rows() {
        return Err(GameError::InvalidStrategy(format!(
            "leader strategy has {} entries, player {leader} has {} strategies",
            leader_strategy.len(),
            g.num_rows()
        )));
    }
    Ok(column_utilities(&g, Player::Two, leader_strategy.probabilities()))
}

/// For each column `j`, `sum_i weights[i] * u_player(i, j)`.
pub(crate) fn column_utilities(game: &Game, player: Player, weights: &[Rational]) -> Vec<Rational> {
    (0..game.num_cols())
        .map(|j| {
            weights
                .iter()
                .enumerate()
                .filter(|(_, w)| !num_traits::Zero::is_zero(*w))
                .map(|(i, w)| w * game.payoff(player, i, j))
                .sum()
        })
        .collect()
}

/// The follower's pure best responses to `leader_strategy`, in index order.
/// Never empty.
pub fn best_responses(
    game: &Game,
    leader_strategy: &MixedStrategy,
    follower: Player,
) -> Result<Vec<usize>, GameError> {
    let utilities = follower_utilities(game, leader_strategy, follower)?;
    Ok(argmax_all(&utilities))
}

pub(crate) fn argmax_all(values: &[Rational]) -> Vec<usize> {
    let best = values.iter().max().expect("nonempty");
    values
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == best)
        .map(|(i, _)| i)
        .collect()
}
