//! Per-game comparison of the solution concepts, the interchangeability
//! check for equilibrium sets, and seeded random game corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::concepts::{
    correlated_optimize, is_nash_equilibrium, maximin, nash_equilibria, payoff_weights, pure_commitment,
    stackelberg_multi_lp, ConceptError, NashEquilibrium,
};
use crate::game::{constant_sum, format_rational, Game, Player, Rational};
use crate::ser;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub holds: bool,
    pub witness: String,
}

impl Check {
    fn new(claim: &str, holds: bool, witness: String) -> Check {
        Check {
            claim: claim.to_string(),
            holds,
            witness,
        }
    }
}

/// Values of every solution concept for one leader, plus the ordering checks
/// relating them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConceptReport {
    pub game_title: String,
    #[serde(serialize_with = "ser::player")]
    pub leader: Player,
    #[serde(serialize_with = "ser::rational")]
    pub maximin_value: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub pure_commit_value: Rational,
    #[serde(serialize_with = "ser::rational")]
    pub stackelberg_value: Rational,
    /// Leader's payoff in each enumerated Nash equilibrium.
    #[serde(serialize_with = "ser::rationals")]
    pub nash_values: Vec<Rational>,
    /// Set when the game was too large for equilibrium enumeration, in which
    /// case `nash_values` is empty.
    pub nash_skipped: bool,
    pub nash_degenerate: bool,
    #[serde(serialize_with = "ser::rational")]
    pub ce_max_leader_value: Rational,
    pub checks: Vec<Check>,
    /// Seed of the corpus the game came from, if any.
    pub seed: Option<u64>,
}

impl ConceptReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report is serializable")
    }
}

/// Runs every concept on `game` for `leader` and evaluates the ordering
/// claims exactly.
pub fn compare_concepts(game: &Game, leader: Player) -> ConceptReport {
    let maximin_value = maximin(game, leader).value;
    let pure_commit_value = pure_commitment(game, leader).value;
    let stackelberg_value = stackelberg_multi_lp(game, leader).leader_value;
    let ce_max_leader_value = correlated_optimize(game, &payoff_weights(game, leader))
        .expect("weights match the game")
        .value;
    let (nash_values, nash_skipped, nash_degenerate) = match nash_equilibria(game) {
        Ok(found) => (
            found.equilibria.iter().map(|e| e.value(leader).clone()).collect(),
            false,
            found.degenerate,
        ),
        Err(ConceptError::SizeCap { .. }) => (Vec::new(), true, false),
        Err(other) => unreachable!("{other}"),
    };

    let mut checks = vec![
        Check::new(
            "pure commitment <= stackelberg",
            pure_commit_value <= stackelberg_value,
            format!(
                "{} <= {}",
                format_rational(&pure_commit_value),
                format_rational(&stackelberg_value)
            ),
        ),
        Check::new(
            "ce max leader <= stackelberg",
            ce_max_leader_value <= stackelberg_value,
            format!(
                "{} <= {}",
                format_rational(&ce_max_leader_value),
                format_rational(&stackelberg_value)
            ),
        ),
    ];
    let nash_check = if nash_skipped {
        Check::new("every nash value <= ce max leader", true, "nash enumeration skipped (size cap)".into())
    } else {
        match nash_values.iter().position(|v| *v > ce_max_leader_value) {
            Some(k) => Check::new(
                "every nash value <= ce max leader",
                false,
                format!(
                    "equilibrium {k} gives {} > {}",
                    format_rational(&nash_values[k]),
                    format_rational(&ce_max_leader_value)
                ),
            ),
            None => Check::new(
                "every nash value <= ce max leader",
                true,
                format!("{} equilibria checked", nash_values.len()),
            ),
        }
    };
    checks.push(nash_check);
    if let Some(c) = constant_sum(game) {
        let nash_match = nash_values.iter().all(|v| *v == maximin_value);
        checks.push(Check::new(
            "constant-sum: maximin = stackelberg = every nash value",
            maximin_value == stackelberg_value && nash_match,
            format!(
                "sum {}, maximin {}, stackelberg {}, nash [{}]",
                format_rational(&c),
                format_rational(&maximin_value),
                format_rational(&stackelberg_value),
                nash_values.iter().map(format_rational).collect::<Vec<_>>().join(", ")
            ),
        ));
    }

    ConceptReport {
        game_title: game.title().to_string(),
        leader,
        maximin_value,
        pure_commit_value,
        stackelberg_value,
        nash_values,
        nash_skipped,
        nash_degenerate,
        ce_max_leader_value,
        checks,
        seed: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interchangeability {
    pub holds: bool,
    /// `(i, j)`: the row strategy of equilibrium `i` with the column
    /// strategy of equilibrium `j` is not an equilibrium.
    pub counterexample: Option<(usize, usize)>,
}

/// Tests every cross-pairing of the given equilibria.
pub fn check_interchangeability(equilibria: &[NashEquilibrium], game: &Game) -> Interchangeability {
    for (i, a) in equilibria.iter().enumerate() {
        for (j, b) in equilibria.iter().enumerate() {
            if i != j && !is_nash_equilibrium(game, &a.sigma1, &b.sigma2) {
                return Interchangeability {
                    holds: false,
                    counterexample: Some((i, j)),
                };
            }
        }
    }
    Interchangeability {
        holds: true,
        counterexample: None,
    }
}

/// Smallest and largest payoff drawn for random games.
pub const PAYOFF_RANGE: (i64, i64) = (-10, 10);
/// Smallest and largest number of strategies per player in random games.
pub const SIZE_RANGE: (usize, usize) = (2, 6);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    GeneralSum,
    /// Payoffs sum to the same constant in every cell. The constant varies
    /// between games.
    ConstantSum,
}

/// A reproducible list of random games.
#[derive(Debug, Clone)]
pub struct GameCorpus {
    pub seed: u64,
    pub kind: CorpusKind,
    pub games: Vec<Game>,
}

pub fn random_game<R: Rng>(rng: &mut R, rows: usize, cols: usize, kind: CorpusKind, title: String) -> Game {
    let (lo, hi) = PAYOFF_RANGE;
    let constant = rng.gen_range(lo..=hi);
    let payoffs: Vec<Vec<(i64, i64)>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    let u1 = rng.gen_range(lo..=hi);
                    match kind {
                        CorpusKind::GeneralSum => (u1, rng.gen_range(lo..=hi)),
                        CorpusKind::ConstantSum => (u1, constant - u1),
                    }
                })
                .collect()
        })
        .collect();
    Game::from_integers(title, &payoffs).expect("generated game is well-formed")
}

/// `count` games with sizes and payoffs drawn uniformly from
/// [`SIZE_RANGE`] and [`PAYOFF_RANGE`].
pub fn random_corpus(seed: u64, count: usize, kind: CorpusKind) -> GameCorpus {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = SIZE_RANGE;
    let games = (0..count)
        .map(|k| {
            let rows = rng.gen_range(lo..=hi);
            let cols = rng.gen_range(lo..=hi);
            random_game(&mut rng, rows, cols, kind, format!("seed {seed} game {k}"))
        })
        .collect();
    GameCorpus { seed, kind, games }
}

/// Compares concepts on every game of a corpus, recording the seed.
pub fn compare_corpus(corpus: &GameCorpus, leader: Player) -> Vec<ConceptReport> {
    corpus
        .games
        .iter()
        .map(|g| ConceptReport {
            seed: Some(corpus.seed),
            ..compare_concepts(g, leader)
        })
        .collect()
}
