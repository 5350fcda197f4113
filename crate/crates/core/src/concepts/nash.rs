//! Nash equilibria by support enumeration.
//!
//! For every pair of candidate supports `(I, J)` two small feasibility
//! programs are solved: one for a row strategy on `I` that makes every
//! column of `J` a best response, and one for a column strategy on `J` that
//! makes every row of `I` a best response. Any pair of solutions is an
//! equilibrium. Degenerate games can have continua of equilibria; those are
//! represented by the vertices the programs return.

use num_traits::{One, Zero};

use crate::game::{expected_utility, Game, MixedStrategy, Player, Rational};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};

use super::{argmax_all, column_utilities, ConceptError};

/// Largest number of pure strategies per player accepted by
/// [`nash_equilibria`].
pub const DEFAULT_NASH_CAP: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashEquilibrium {
    pub sigma1: MixedStrategy,
    pub sigma2: MixedStrategy,
    pub value1: Rational,
    pub value2: Rational,
}

impl NashEquilibrium {
    pub fn value(&self, player: Player) -> &Rational {
        match player {
            Player::One => &self.value1,
            Player::Two => &self.value2,
        }
    }

    pub fn strategy(&self, player: Player) -> &MixedStrategy {
        match player {
            Player::One => &self.sigma1,
            Player::Two => &self.sigma2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NashEnumeration {
    pub equilibria: Vec<NashEquilibrium>,
    /// Set when some equilibrium found has more pure best responses than
    /// its support size. Such games may have continua of equilibria of which
    /// only vertices are listed.
    pub degenerate: bool,
}

/// Exact equilibrium check: no pure deviation improves either player.
pub fn is_nash_equilibrium(game: &Game, sigma1: &MixedStrategy, sigma2: &MixedStrategy) -> bool {
    if sigma1.len() != game.num_rows() || sigma2.len() != game.num_cols() {
        return false;
    }
    let u1 = expected_utility(game, sigma1, sigma2, Player::One).expect("dimensions checked");
    let u2 = expected_utility(game, sigma1, sigma2, Player::Two).expect("dimensions checked");
    let rows = row_utilities(game, sigma2.probabilities());
    let cols = column_utilities(game, Player::Two, sigma1.probabilities());
    rows.iter().all(|r| *r <= u1) && cols.iter().all(|c| *c <= u2)
}

fn row_utilities(game: &Game, col_weights: &[Rational]) -> Vec<Rational> {
    (0..game.num_rows())
        .map(|i| {
            col_weights
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_zero())
                .map(|(j, w)| w * game.payoff(Player::One, i, j))
                .sum()
        })
        .collect()
}

/// All equilibria found by support enumeration, with the default size cap.
pub fn nash_equilibria(game: &Game) -> Result<NashEnumeration, ConceptError> {
    nash_support_enumeration(game, DEFAULT_NASH_CAP)
}

pub fn nash_support_enumeration(game: &Game, cap: usize) -> Result<NashEnumeration, ConceptError> {
    let (m, n) = (game.num_rows(), game.num_cols());
    if m > cap || n > cap {
        return Err(ConceptError::SizeCap { rows: m, cols: n, cap });
    }
    let swapped = game.swapped();
    let row_supports = supports(m);
    let col_supports = supports(n);

    // Infeasible (I, J) for the row side stays infeasible for any J' ⊇ J.
    let mut row_dead: Vec<Vec<u32>> = vec![Vec::new(); row_supports.len()];
    // Infeasible (J, I) for the column side stays infeasible for any I' ⊇ I.
    let mut col_dead: Vec<Vec<u32>> = vec![Vec::new(); col_supports.len()];

    let mut equilibria: Vec<NashEquilibrium> = Vec::new();
    let mut degenerate = false;
    for (ri, &rows) in row_supports.iter().enumerate() {
        for (ci, &cols) in col_supports.iter().enumerate() {
            if row_dead[ri].iter().any(|&d| is_subset(d, cols)) || col_dead[ci].iter().any(|&d| is_subset(d, rows)) {
                continue;
            }
            let Some(x) = inducing_strategy(game, rows, cols) else {
                row_dead[ri].push(cols);
                continue;
            };
            let Some(y) = inducing_strategy(&swapped, cols, rows) else {
                col_dead[ci].push(rows);
                continue;
            };
            let sigma1 = MixedStrategy::new(Player::One, x).expect("simplex");
            let sigma2 = MixedStrategy::new(Player::Two, y).expect("simplex");
            if equilibria.iter().any(|e| e.sigma1 == sigma1 && e.sigma2 == sigma2) {
                continue;
            }
            debug_assert!(is_nash_equilibrium(game, &sigma1, &sigma2));
            let br_cols = argmax_all(&column_utilities(game, Player::Two, sigma1.probabilities())).len();
            let br_rows = argmax_all(&row_utilities(game, sigma2.probabilities())).len();
            if br_cols > sigma1.support().len() || br_rows > sigma2.support().len() {
                degenerate = true;
            }
            let value1 = expected_utility(game, &sigma1, &sigma2, Player::One).expect("dims");
            let value2 = expected_utility(game, &sigma1, &sigma2, Player::Two).expect("dims");
            equilibria.push(NashEquilibrium {
                sigma1,
                sigma2,
                value1,
                value2,
            });
        }
    }
    Ok(NashEnumeration { equilibria, degenerate })
}

fn is_subset(small: u32, large: u32) -> bool {
    small & large == small
}

/// Nonempty subsets of `0..k` as bitmasks, smallest first, then by value.
fn supports(k: usize) -> Vec<u32> {
    let mut all: Vec<u32> = (1..(1u32 << k)).collect();
    all.sort_by_key(|s| (s.count_ones(), *s));
    all
}

/// A row-player strategy supported within `rows` under which every column
/// in `cols` earns the column player the same payoff, at least as much as
/// any other column. Returns the full-length probability vector.
fn inducing_strategy(game: &Game, rows: u32, cols: u32) -> Option<Vec<Rational>> {
    let support: Vec<usize> = (0..game.num_rows()).filter(|i| rows >> i & 1 == 1).collect();
    let k = support.len();
    // variables: x over the support, then the common payoff (free)
    let value = k;
    let mut lp = LinearProgram::maximize(k + 1, std::iter::empty());
    lp.set_free(value);
    for j in 0..game.num_cols() {
        let relation = if cols >> j & 1 == 1 { Relation::Eq } else { Relation::Le };
        let terms = support
            .iter()
            .enumerate()
            .map(|(slot, &i)| (slot, game.payoff(Player::Two, i, j).clone()))
            .chain(std::iter::once((value, -Rational::one())));
        lp.add_terms(terms, relation, Rational::zero());
    }
    lp.add_terms((0..k).map(|slot| (slot, Rational::one())), Relation::Eq, Rational::one());
    match solve_lp(&lp) {
        LpOutcome::Optimal { assignment, .. } => {
            let mut full = vec![Rational::zero(); game.num_rows()];
            for (slot, &i) in support.iter().enumerate() {
                full[i] = assignment[slot].clone();
            }
            Some(full)
        }
        LpOutcome::Infeasible => None,
        LpOutcome::Unbounded => unreachable!("zero objective"),
    }
}
