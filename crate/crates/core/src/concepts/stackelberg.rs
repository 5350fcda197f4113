//! Commitment: pure commitments, and optimal mixed commitments computed
//! either with one linear program per follower response or with a single
//! program over outcome distributions.
//!
//! Both programs let the follower break ties in the leader's favor, so the
//! reported value is attained rather than approached.

use num_traits::{One, Zero};

use crate::game::{format_rational, Game, JointDistribution, MixedStrategy, Player, Rational};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation};

use super::{argmax_all, column_utilities, oriented};

/// Result of the per-response program for one follower pure strategy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnStatus {
    /// No leader strategy makes this response a best response.
    Infeasible,
    /// Best leader payoff among strategies inducing this response.
    Optimal(Rational),
}

impl ColumnStatus {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            ColumnStatus::Optimal(v) => Some(v),
            ColumnStatus::Infeasible => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StackelbergSolution {
    pub leader: Player,
    pub leader_strategy: MixedStrategy,
    /// The follower pure strategy the commitment induces.
    pub follower_response: usize,
    pub leader_value: Rational,
    pub follower_value: Rational,
    /// Indexed by follower pure strategy.
    pub per_column: Vec<ColumnStatus>,
    /// Set when the follower has another best response. The value is then
    /// reached only because the tie breaks toward the leader; with
    /// adversarial tie-breaking it is a supremum.
    pub follower_indifferent: bool,
    pub notes: Vec<String>,
}

impl StackelbergSolution {
    /// Checks the solution's internal invariants against `game`.
    pub fn verify(&self, game: &Game) -> Result<(), String> {
        let g = oriented(game, self.leader);
        let probs = self.leader_strategy.probabilities();
        if probs.len() != g.num_rows() {
            return Err("leader strategy has the wrong length".into());
        }
        let follower = column_utilities(&g, Player::Two, probs);
        let best = argmax_all(&follower);
        if !best.contains(&self.follower_response) {
            return Err(format!(
                "response {} is not a best response (best: {best:?})",
                self.follower_response
            ));
        }
        let leader = column_utilities(&g, Player::One, probs);
        if leader[self.follower_response] != self.leader_value {
            return Err("leader value does not match the committed strategy".into());
        }
        if follower[self.follower_response] != self.follower_value {
            return Err("follower value does not match the committed strategy".into());
        }
        let column_best = self.per_column.iter().filter_map(ColumnStatus::value).max();
        if column_best != Some(&self.leader_value) {
            return Err("leader value is not the best per-response optimum".into());
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PureCommitment {
    pub leader: Player,
    pub strategy: usize,
    pub follower_response: usize,
    pub value: Rational,
}

/// Best pure strategy for `leader` to commit to. The follower breaks ties
/// toward the leader; ties among leader strategies go to the lowest index.
pub fn pure_commitment(game: &Game, leader: Player) -> PureCommitment {
    let g = oriented(game, leader);
    let mut best: Option<(usize, usize, Rational)> = None;
    for row in 0..g.num_rows() {
        let follower: Vec<Rational> = (0..g.num_cols())
            .map(|j| g.payoff(Player::Two, row, j).clone())
            .collect();
        let response = argmax_all(&follower)
            .into_iter()
            .max_by(|&a, &b| {
                g.payoff(Player::One, row, a)
                    .cmp(g.payoff(Player::One, row, b))
                    // prefer the lower index among equal leader payoffs
                    .then(b.cmp(&a))
            })
            .expect("nonempty");
        let value = g.payoff(Player::One, row, response).clone();
        if best.as_ref().is_none_or(|(_, _, v)| value > *v) {
            best = Some((row, response, value));
        }
    }
    let (strategy, follower_response, value) = best.expect("at least one strategy");
    PureCommitment {
        leader,
        strategy,
        follower_response,
        value,
    }
}

/// Best leader strategy (leader = rows of `g`) among those that make
/// `target` a follower best response.
fn inducing_program(g: &Game, target: usize) -> LinearProgram {
    let m = g.num_rows();
    let mut lp = LinearProgram::maximize(m, (0..m).map(|i| (i, g.payoff(Player::One, i, target).clone())));
    for other in (0..g.num_cols()).filter(|&j| j != target) {
        lp.add_terms(
            (0..m).map(|i| (i, g.payoff(Player::Two, i, target) - g.payoff(Player::Two, i, other))),
            Relation::Ge,
            Rational::zero(),
        );
    }
    lp.add_terms((0..m).map(|i| (i, Rational::one())), Relation::Eq, Rational::one());
    lp
}

fn solve_columns(g: &Game) -> Vec<(ColumnStatus, Option<Vec<Rational>>)> {
    (0..g.num_cols())
        .map(|target| match solve_lp(&inducing_program(g, target)) {
            LpOutcome::Optimal { value, assignment } => (ColumnStatus::Optimal(value), Some(assignment)),
            LpOutcome::Infeasible => (ColumnStatus::Infeasible, None),
            LpOutcome::Unbounded => unreachable!("probabilities are bounded"),
        })
        .collect()
}

fn build_solution(
    game: &Game,
    leader: Player,
    g: &Game,
    probabilities: Vec<Rational>,
    response: usize,
    per_column: Vec<ColumnStatus>,
) -> StackelbergSolution {
    let follower = column_utilities(g, Player::Two, &probabilities);
    let leader_utils = column_utilities(g, Player::One, &probabilities);
    let ties: Vec<usize> = argmax_all(&follower);
    debug_assert!(ties.contains(&response));
    let follower_indifferent = ties.len() > 1;
    let mut notes = Vec::new();
    if follower_indifferent {
        let follower_labels = game.labels(leader.other());
        let names: Vec<&str> = ties.iter().map(|&j| follower_labels[j].as_str()).collect();
        notes.push(format!(
            "follower is indifferent between {}; {} is attained only when the tie breaks toward the leader and is a supremum otherwise",
            names.join(", "),
            format_rational(&leader_utils[response])
        ));
    }
    StackelbergSolution {
        leader,
        leader_strategy: MixedStrategy::new(leader, probabilities).expect("program keeps the simplex"),
        follower_response: response,
        leader_value: leader_utils[response].clone(),
        follower_value: follower[response].clone(),
        per_column,
        follower_indifferent,
        notes,
    }
}

/// Optimal mixed commitment for `leader`, solving one program per follower
/// pure strategy and keeping the best feasible one (lowest index on ties).
pub fn stackelberg_multi_lp(game: &Game, leader: Player) -> StackelbergSolution {
    let g = oriented(game, leader);
    let solved = solve_columns(&g);
    let mut best: Option<(usize, &Rational)> = None;
    for (j, (status, _)) in solved.iter().enumerate() {
        if let ColumnStatus::Optimal(v) = status {
            if best.is_none_or(|(_, b)| v > b) {
                best = Some((j, v));
            }
        }
    }
    let (response, _) = best.expect("some follower strategy is always a best response");
    let probabilities = solved[response].1.clone().expect("optimal column has an assignment");
    let per_column = solved.into_iter().map(|(s, _)| s).collect();
    build_solution(game, leader, &g, probabilities, response, per_column)
}

/// Output of the single-program formulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleLpSolution {
    /// Optimal distribution with all mass on one follower response, indexed
    /// like the original game (`[row][col]`).
    pub distribution: JointDistribution,
    /// The vertex the simplex returned, which may spread mass over several
    /// follower responses.
    pub lp_distribution: JointDistribution,
    pub value: Rational,
    pub solution: StackelbergSolution,
}

/// Optimal mixed commitment through one program over outcome distributions
/// constrained only by the follower's incentives.
pub fn stackelberg_single_lp(game: &Game, leader: Player) -> SingleLpSolution {
    let g = oriented(game, leader);
    let (m, n) = (g.num_rows(), g.num_cols());
    let var = |i: usize, j: usize| i * n + j;

    let mut lp = LinearProgram::maximize(
        m * n,
        (0..m).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| (var(i, j), g.payoff(Player::One, i, j).clone())),
    );
    for rec in 0..n {
        for alt in (0..n).filter(|&a| a != rec) {
            lp.add_terms(
                (0..m).map(|i| (var(i, rec), g.payoff(Player::Two, i, rec) - g.payoff(Player::Two, i, alt))),
                Relation::Ge,
                Rational::zero(),
            );
        }
    }
    lp.add_terms((0..m * n).map(|k| (k, Rational::one())), Relation::Eq, Rational::one());

    let (value, assignment) = match solve_lp(&lp) {
        LpOutcome::Optimal { value, assignment } => (value, assignment),
        other => unreachable!("commitment program is feasible and bounded, got {other:?}"),
    };
    let raw: Vec<Vec<Rational>> = (0..m).map(|i| assignment[i * n..(i + 1) * n].to_vec()).collect();
    let lp_dist = JointDistribution::new(raw).expect("program keeps the simplex");

    let solved = solve_columns(&g);
    let active = lp_dist.active_cols();
    let (response, probabilities) = if let [only] = active[..] {
        let column: Vec<Rational> = (0..m).map(|i| lp_dist.get(i, only).clone()).collect();
        (only, column)
    } else {
        // Re-solve restricted to each active response; one of them attains
        // the optimum because the optimum is a mixture of their values.
        active
            .iter()
            .find_map(|&j| match &solved[j] {
                (ColumnStatus::Optimal(v), Some(p)) if *v == value => Some((j, p.clone())),
                _ => None,
            })
            .expect("a single-response optimum exists")
    };

    let single: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            (0..n)
                .map(|j| if j == response { probabilities[i].clone() } else { Rational::zero() })
                .collect()
        })
        .collect();
    let single = JointDistribution::new(single).expect("column is a distribution");

    let per_column = solved.into_iter().map(|(s, _)| s).collect();
    let solution = build_solution(game, leader, &g, probabilities, response, per_column);
    debug_assert_eq!(solution.leader_value, value);

    SingleLpSolution {
        distribution: unorient(single, leader),
        lp_distribution: unorient(lp_dist, leader),
        value,
        solution,
    }
}

fn unorient(dist: JointDistribution, leader: Player) -> JointDistribution {
    match leader {
        Player::One => dist,
        Player::Two => transpose(&dist),
    }
}

fn transpose(dist: &JointDistribution) -> JointDistribution {
    let rows = (0..dist.num_cols())
        .map(|j| (0..dist.num_rows()).map(|i| dist.get(i, j).clone()).collect())
        .collect();
    JointDistribution::new(rows).expect("transpose keeps the simplex")
}

/// Whether `dist` (indexed `[row][col]` as in `game`) satisfies the
/// follower-incentive constraints of the single commitment program with
/// `leader` committing.
pub fn commitment_constraints_hold(game: &Game, leader: Player, dist: &JointDistribution) -> bool {
    if dist.num_rows() != game.num_rows() || dist.num_cols() != game.num_cols() {
        return false;
    }
    let g = oriented(game, leader);
    let d = match leader {
        Player::One => dist.clone(),
        Player::Two => transpose(dist),
    };
    let (m, n) = (g.num_rows(), g.num_cols());
    (0..n).all(|rec| {
        (0..n).filter(|&alt| alt != rec).all(|alt| {
            let gain: Rational = (0..m)
                .map(|i| (g.payoff(Player::Two, i, rec) - g.payoff(Player::Two, i, alt)) * d.get(i, rec))
                .sum();
            gain >= Rational::zero()
        })
    })
}
