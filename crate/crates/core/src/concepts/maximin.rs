use num_traits::{One, Zero};

use crate::game::{Game, MixedStrategy, Player, Rational};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};

use super::oriented;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximinSolution {
    pub strategy: MixedStrategy,
    pub value: Rational,
}

/// The maximin program for `player`: variable 0 is the guaranteed value
/// (free), variables `1..=m` are the probabilities of the player's pure
/// strategies. One row per opponent pure strategy caps the value at the
/// expected payoff against it.
pub fn maximin_lp(game: &Game, player: Player) -> LinearProgram {
    let g = oriented(game, player);
    let m = g.num_rows();
    let mut lp = LinearProgram::maximize(m + 1, [(0, Rational::one())]);
    lp.set_free(0);
    for col in 0..g.num_cols() {
        let terms = std::iter::once((0, Rational::one()))
            .chain((0..m).map(|row| (row + 1, -g.payoff(Player::One, row, col))));
        lp.add_terms(terms, Relation::Le, Rational::zero());
    }
    lp.add_terms((1..=m).map(|k| (k, Rational::one())), Relation::Eq, Rational::one());
    lp
}

/// A strategy for `player` maximizing the worst-case expected payoff over
/// the opponent's pure strategies, together with that payoff.
pub fn maximin(game: &Game, player: Player) -> MaximinSolution {
    let lp = maximin_lp(game, player);
    match solve_lp(&lp) {
        LpOutcome::Optimal { value, assignment } => {
            let strategy = MixedStrategy::new(player, assignment[1..].to_vec())
                .expect("maximin program keeps probabilities on the simplex");
            MaximinSolution { strategy, value }
        }
        other => unreachable!("maximin program is always feasible and bounded, got {other:?}"),
    }
}
