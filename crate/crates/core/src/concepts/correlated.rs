use num_traits::{One, Zero};

use crate::game::{Game, GameError, JointDistribution, Player, Rational};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrelatedOptimum {
    pub distribution: JointDistribution,
    pub value: Rational,
}

fn incentive_rows(game: &Game) -> Vec<Vec<(usize, Rational)>> {
    let (m, n) = (game.num_rows(), game.num_cols());
    let var = |i: usize, j: usize| i * n + j;
    let mut rows = Vec::new();
    // row player told `rec` must not prefer `alt`
    for rec in 0..m {
        for alt in (0..m).filter(|&a| a != rec) {
            rows.push(
                (0..n)
                    .map(|j| (var(rec, j), game.payoff(Player::One, rec, j) - game.payoff(Player::One, alt, j)))
                    .collect(),
            );
        }
    }
    for rec in 0..n {
        for alt in (0..n).filter(|&a| a != rec) {
            rows.push(
                (0..m)
                    .map(|i| (var(i, rec), game.payoff(Player::Two, i, rec) - game.payoff(Player::Two, i, alt)))
                    .collect(),
            );
        }
    }
    rows
}

/// Maximizes `sum weights[i][j] * p[i][j]` over the correlated equilibria
/// of `game`.
pub fn correlated_optimize(game: &Game, weights: &[Vec<Rational>]) -> Result<CorrelatedOptimum, GameError> {
    let (m, n) = (game.num_rows(), game.num_cols());
    if weights.len() != m || weights.iter().any(|r| r.len() != n) {
        return Err(GameError::InvalidStrategy(format!(
            "objective weights must be a {m}x{n} matrix"
        )));
    }
    let mut lp = LinearProgram::maximize(
        m * n,
        weights.iter().flatten().cloned().enumerate(),
    );
    for row in incentive_rows(game) {
        lp.add_terms(row, Relation::Ge, Rational::zero());
    }
    lp.add_terms((0..m * n).map(|k| (k, Rational::one())), Relation::Eq, Rational::one());

    match solve_lp(&lp) {
        LpOutcome::Optimal { value, assignment } => {
            let rows = (0..m).map(|i| assignment[i * n..(i + 1) * n].to_vec()).collect();
            Ok(CorrelatedOptimum {
                distribution: JointDistribution::new(rows).expect("program keeps the simplex"),
                value,
            })
        }
        // every Nash equilibrium is a correlated equilibrium
        other => unreachable!("correlated equilibria always exist, got {other:?}"),
    }
}

/// The payoff matrix of `player`, for use as correlated objective weights.
pub fn payoff_weights(game: &Game, player: Player) -> Vec<Vec<Rational>> {
    (0..game.num_rows())
        .map(|i| (0..game.num_cols()).map(|j| game.payoff(player, i, j).clone()).collect())
        .collect()
}

/// Whether `dist` satisfies both players' correlated-equilibrium incentive
/// constraints.
pub fn correlated_constraints_hold(game: &Game, dist: &JointDistribution) -> bool {
    if dist.num_rows() != game.num_rows() || dist.num_cols() != game.num_cols() {
        return false;
    }
    let n = game.num_cols();
    incentive_rows(game).into_iter().all(|row| {
        let total: Rational = row.iter().map(|(k, c)| c * dist.get(k / n, k % n)).sum();
        total >= Rational::zero()
    })
}
