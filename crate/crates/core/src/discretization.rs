//! Commitment restricted to a grid of leader strategies.
//!
//! The leader may only use probabilities that are multiples of `1/N`. Each
//! grid point is scored by letting the follower best-respond under an
//! explicit tie-breaking convention. The number of grid points grows as a
//! binomial coefficient in `N` and the number of leader strategies, which is
//! what makes this route impractical next to the linear programs.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::concepts::oriented;
use crate::game::{Game, MixedStrategy, Player, Rational};

/// Grid points evaluated before [`grid_stackelberg`] refuses to run.
pub const DEFAULT_GRID_BUDGET: u64 = 10_000_000;

/// How the follower resolves indifference between best responses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TieBreak {
    LeaderFavorable,
    Adversarial,
}

impl TieBreak {
    pub fn name(self) -> &'static str {
        match self {
            TieBreak::LeaderFavorable => "leader-favorable",
            TieBreak::Adversarial => "adversarial",
        }
    }
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TieBreak {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "leader-favorable" => Ok(TieBreak::LeaderFavorable),
            "adversarial" => Ok(TieBreak::Adversarial),
            other => Err(format!(
                "unknown tie-break {other:?} (expected leader-favorable or adversarial)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    resolution: u64,
    pub tie_break: TieBreak,
}

impl GridSpec {
    /// `None` when `resolution` is zero.
    pub fn new(resolution: u64, tie_break: TieBreak) -> Option<GridSpec> {
        (resolution >= 1).then_some(GridSpec {
            resolution,
            tie_break,
        })
    }

    pub fn resolution(&self) -> u64 {
        self.resolution
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiscretizationError {
    #[error("grid has {grid_count} points, over the budget of {budget}")]
    BudgetExceeded { grid_count: BigUint, budget: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridOutcome {
    pub strategy: MixedStrategy,
    pub value: Rational,
    pub follower_response: usize,
    pub points_evaluated: u64,
}

/// Number of distributions over `num_pure` strategies whose probabilities
/// are multiples of `1/resolution`: `C(resolution + num_pure - 1, num_pure - 1)`.
pub fn grid_count(num_pure: u64, resolution: u64) -> BigUint {
    assert!(num_pure >= 1, "need at least one pure strategy");
    let n = BigUint::from(resolution) + BigUint::from(num_pure) - 1u32;
    let k = num_pure - 1;
    // C(n, k) built up incrementally; each prefix is itself a binomial
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (&n - BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}

/// Compositions of `total` into `parts` nonnegative parts, in ascending
/// lexicographic order: `(0, .., 0, total)` first, `(total, 0, .., 0)` last.
#[derive(Debug, Clone)]
pub struct GridPoints {
    current: Option<Vec<u64>>,
}

pub fn grid_points(parts: usize, total: u64) -> GridPoints {
    assert!(parts >= 1, "need at least one part");
    let mut first = vec![0; parts];
    first[parts - 1] = total;
    GridPoints { current: Some(first) }
}

impl Iterator for GridPoints {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let point = self.current.take()?;
        let m = point.len();
        let mut next = point.clone();
        let mut suffix = 0u64;
        // rightmost position (other than the last) with mass after it
        for i in (0..m.saturating_sub(1)).rev() {
            suffix += next[i + 1];
            if suffix > 0 {
                next[i] += 1;
                for slot in next.iter_mut().skip(i + 1) {
                    *slot = 0;
                }
                next[m - 1] = suffix - 1;
                self.current = Some(next);
                break;
            }
        }
        Some(point)
    }
}

/// Best grid strategy for `leader` with the default budget.
pub fn grid_stackelberg(game: &Game, leader: Player, spec: GridSpec) -> Result<GridOutcome, DiscretizationError> {
    grid_stackelberg_with_budget(game, leader, spec, DEFAULT_GRID_BUDGET)
}

/// Enumerates every grid strategy for `leader` and returns the one with the
/// best leader payoff after the follower's response. Ties go to the first
/// point in enumeration order.
pub fn grid_stackelberg_with_budget(
    game: &Game,
    leader: Player,
    spec: GridSpec,
    budget: u64,
) -> Result<GridOutcome, DiscretizationError> {
    let g = oriented(game, leader);
    let m = g.num_rows();
    let count = grid_count(m as u64, spec.resolution);
    if count > BigUint::from(budget) {
        return Err(DiscretizationError::BudgetExceeded {
            grid_count: count,
            budget,
        });
    }

    let (leader_pay, leader_scale) = integer_payoffs(&g, Player::One);
    let (follower_pay, _) = integer_payoffs(&g, Player::Two);
    let fits = |pay: &[Vec<BigInt>]| {
        pay.iter()
            .flatten()
            .all(|x| x.to_i64().is_some_and(|v| v.unsigned_abs() < 1 << 62))
    };
    let search = if spec.resolution < 1 << 62 && fits(&leader_pay) && fits(&follower_pay) {
        let narrow = |pay: &[Vec<BigInt>]| -> Vec<Vec<i128>> {
            pay.iter()
                .map(|r| r.iter().map(|x| x.to_i128().expect("checked")).collect())
                .collect()
        };
        search(&narrow(&leader_pay), &narrow(&follower_pay), spec)
            .map_numerator(BigInt::from)
    } else {
        search(&leader_pay, &follower_pay, spec)
    };

    let denom = BigInt::from(spec.resolution);
    let probabilities = search
        .point
        .iter()
        .map(|&k| Rational::new(BigInt::from(k), denom.clone()))
        .collect();
    Ok(GridOutcome {
        strategy: MixedStrategy::new(leader, probabilities).expect("grid point is a distribution"),
        value: Rational::new(search.numerator, denom * leader_scale),
        follower_response: search.response,
        points_evaluated: search.points,
    })
}

/// `player`'s payoffs scaled by the least common denominator, and that
/// denominator. Scaling by a positive constant keeps every comparison.
fn integer_payoffs(g: &Game, player: Player) -> (Vec<Vec<BigInt>>, BigInt) {
    let lcm = (0..g.num_rows())
        .flat_map(|i| (0..g.num_cols()).map(move |j| (i, j)))
        .fold(BigInt::one(), |acc, (i, j)| acc.lcm(g.payoff(player, i, j).denom()));
    let scaled = (0..g.num_rows())
        .map(|i| {
            (0..g.num_cols())
                .map(|j| {
                    let x = g.payoff(player, i, j);
                    x.numer() * (&lcm / x.denom())
                })
                .collect()
        })
        .collect();
    (scaled, lcm)
}

struct Search<T> {
    point: Vec<u64>,
    numerator: T,
    response: usize,
    points: u64,
}

impl<T> Search<T> {
    fn map_numerator<U>(self, f: impl FnOnce(T) -> U) -> Search<U> {
        Search {
            point: self.point,
            numerator: f(self.numerator),
            response: self.response,
            points: self.points,
        }
    }
}

fn search<T>(leader: &[Vec<T>], follower: &[Vec<T>], spec: GridSpec) -> Search<T>
where
    T: Clone + Ord + Zero + From<u64> + for<'a> std::ops::Mul<&'a T, Output = T> + for<'a> std::ops::AddAssign<&'a T>,
{
    let m = leader.len();
    let n = leader[0].len();
    let mut best: Option<Search<T>> = None;
    let mut points = 0u64;
    let mut follower_utils = vec![T::zero(); n];
    let mut leader_utils = vec![T::zero(); n];
    for point in grid_points(m, spec.resolution) {
        points += 1;
        for j in 0..n {
            follower_utils[j] = T::zero();
            leader_utils[j] = T::zero();
        }
        for (i, &k) in point.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let weight = T::from(k);
            for j in 0..n {
                follower_utils[j] += &(weight.clone() * &follower[i][j]);
                leader_utils[j] += &(weight.clone() * &leader[i][j]);
            }
        }
        let top = follower_utils.iter().max().expect("nonempty").clone();
        let mut response: Option<usize> = None;
        for j in (0..n).filter(|&j| follower_utils[j] == top) {
            let better = match response {
                None => true,
                Some(r) => match spec.tie_break {
                    TieBreak::LeaderFavorable => leader_utils[j] > leader_utils[r],
                    TieBreak::Adversarial => leader_utils[j] < leader_utils[r],
                },
            };
            if better {
                response = Some(j);
            }
        }
        let response = response.expect("some best response");
        if best.as_ref().is_none_or(|b| leader_utils[response] > b.numerator) {
            best = Some(Search {
                point,
                numerator: leader_utils[response].clone(),
                response,
                points: 0,
            });
        }
    }
    let mut best = best.expect("grid is nonempty");
    best.points = points;
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{int, parse_rational};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn commitment_example() -> Game {
        Game::from_integers("fig1", &[vec![(1, 1), (3, 0)], vec![(0, 0), (2, 1)]]).unwrap()
    }

    fn binomial_by_pascal(n: u64, k: u64) -> u128 {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row[k as usize]
    }

    #[test]
    fn grid_count_examples() {
        assert_eq!(binomial_by_pascal(101, 1), 101);
        assert_eq!(grid_count(2, 100), BigUint::from(101u32));
        assert_eq!(grid_count(3, 2), BigUint::from(6u32));
        for n in [1, 7, 1000] {
            assert_eq!(grid_count(1, n), BigUint::one());
        }
        assert_eq!(grid_count(6, 25), BigUint::from(binomial_by_pascal(30, 5)));
    }

    #[test]
    fn enumeration_order() {
        let pts: Vec<Vec<u64>> = grid_points(3, 2).collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 0, 2],
                vec![0, 1, 1],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![1, 1, 0],
                vec![2, 0, 0]
            ]
        );
        assert_eq!(grid_points(1, 5).collect::<Vec<_>>(), vec![vec![5]]);
    }

    #[test]
    fn adversarial_hundredths() {
        let spec = GridSpec::new(100, TieBreak::Adversarial).unwrap();
        let out = grid_stackelberg(&commitment_example(), Player::One, spec).unwrap();
        assert_eq!(out.value, q("249/100"));
        assert_eq!(out.strategy.probabilities(), &[q("49/100"), q("51/100")]);
        assert_eq!(out.follower_response, 1);
        assert_eq!(out.points_evaluated, 101);
    }

    #[test]
    fn leader_favorable_coarse_grids() {
        let g = commitment_example();
        let two = grid_stackelberg(&g, Player::One, GridSpec::new(2, TieBreak::LeaderFavorable).unwrap()).unwrap();
        assert_eq!(two.value, q("5/2"));
        assert_eq!(two.strategy.probabilities(), &[q("1/2"), q("1/2")]);
        let one = grid_stackelberg(&g, Player::One, GridSpec::new(1, TieBreak::LeaderFavorable).unwrap()).unwrap();
        assert_eq!(one.value, int(2));
        assert_eq!(one.strategy.pure_index(), Some(1));
    }

    #[test]
    fn adversarial_approaches_but_never_reaches() {
        let g = commitment_example();
        let mut last = int(0);
        for n in [10, 100, 1000] {
            let v = grid_stackelberg(&g, Player::One, GridSpec::new(n, TieBreak::Adversarial).unwrap())
                .unwrap()
                .value;
            assert!(v > last && v < q("5/2"), "N={n}: {v}");
            last = v;
        }
        assert_eq!(last, q("2499/1000"));
    }

    #[test]
    fn budget_exceeded_reports_count() {
        let g = Game::from_integers("wide", &vec![vec![(0, 0)]; 4]).unwrap();
        let spec = GridSpec::new(10, TieBreak::LeaderFavorable).unwrap();
        let err = grid_stackelberg_with_budget(&g, Player::One, spec, 100).unwrap_err();
        assert_eq!(
            err,
            DiscretizationError::BudgetExceeded {
                grid_count: BigUint::from(286u32),
                budget: 100
            }
        );
    }

    #[test]
    fn fractional_payoffs_and_big_path() {
        let g = crate::game::parse_game(
            r#"{"title":"f","row_labels":["a","b"],"col_labels":["x","y"],
            "payoffs":[[["1/3","0.5"],[1,0]],[["99999999999999999999999","1/7"],[0,"1/7"]]]}"#,
        )
        .unwrap();
        let out = grid_stackelberg(&g, Player::One, GridSpec::new(3, TieBreak::LeaderFavorable).unwrap()).unwrap();
        // row b makes the follower indifferent; leader-favorable picks x
        assert_eq!(out.value, q("99999999999999999999999"));
    }

    #[test]
    fn resolution_must_be_positive() {
        assert!(GridSpec::new(0, TieBreak::Adversarial).is_none());
    }
}
