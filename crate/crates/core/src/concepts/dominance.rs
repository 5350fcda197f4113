use num_traits::{One, Signed, Zero};

use crate::game::{Game, Player, Rational};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elimination {
    pub player: Player,
    /// Index in the original game.
    pub index: usize,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceResult {
    pub reduced: Game,
    /// Surviving original row and column indices.
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub eliminated: Vec<Elimination>,
}

/// Whether row `target` of `game` is strictly dominated by some mixture of
/// the other rows, judged over all columns. Returns the dominating mixture
/// (over all rows, zero at `target`) when it is.
pub fn strictly_dominated_by_mixture(game: &Game, target: usize) -> Option<Vec<Rational>> {
    let others: Vec<usize> = (0..game.num_rows()).filter(|&i| i != target).collect();
    if others.is_empty() {
        return None;
    }
    // variables: weights over the other rows, then the margin (free)
    let margin = others.len();
    let mut lp = LinearProgram::maximize(margin + 1, [(margin, Rational::one())]);
    lp.set_free(margin);
    for j in 0..game.num_cols() {
        let terms = others
            .iter()
            .enumerate()
            .map(|(slot, &i)| (slot, game.payoff(Player::One, i, j).clone()))
            .chain(std::iter::once((margin, -Rational::one())));
        lp.add_terms(terms, Relation::Ge, game.payoff(Player::One, target, j).clone());
    }
    lp.add_terms((0..margin).map(|s| (s, Rational::one())), Relation::Eq, Rational::one());
    match solve_lp(&lp) {
        LpOutcome::Optimal { value, assignment } if value.is_positive() => {
            let mut mix = vec![Rational::zero(); game.num_rows()];
            for (slot, &i) in others.iter().enumerate() {
                mix[i] = assignment[slot].clone();
            }
            Some(mix)
        }
        LpOutcome::Optimal { .. } => None,
        other => unreachable!("dominance program is feasible and bounded, got {other:?}"),
    }
}

/// Removes strictly dominated pure strategies (dominance by mixtures) until
/// none remain. Each round removes the lowest-index dominated row, or if
/// there is none the lowest-index dominated column, then starts over.
pub fn iterated_strict_dominance(game: &Game) -> DominanceResult {
    let mut rows: Vec<usize> = (0..game.num_rows()).collect();
    let mut cols: Vec<usize> = (0..game.num_cols()).collect();
    let mut eliminated = Vec::new();
    loop {
        let current = game.restrict(&rows, &cols);
        if let Some(pos) = (0..rows.len()).find(|&i| strictly_dominated_by_mixture(&current, i).is_some()) {
            let index = rows.remove(pos);
            eliminated.push(Elimination {
                player: Player::One,
                index,
                label: game.row_labels()[index].clone(),
            });
            continue;
        }
        let flipped = current.swapped();
        if let Some(pos) = (0..cols.len()).find(|&j| strictly_dominated_by_mixture(&flipped, j).is_some()) {
            let index = cols.remove(pos);
            eliminated.push(Elimination {
                player: Player::Two,
                index,
                label: game.col_labels()[index].clone(),
            });
            continue;
        }
        return DominanceResult {
            reduced: current,
            rows,
            cols,
            eliminated,
        };
    }
}
