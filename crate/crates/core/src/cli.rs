//! Command-line front end. Every successful run prints exactly one JSON
//! document on stdout; failures print a JSON error object on stderr.
//!
//! Exit codes: 0 on success, 1 for bad input, 2 for internal errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::analysis::compare_concepts;
use crate::concepts::{
    correlated_optimize, iterated_strict_dominance, maximin, nash_equilibria, payoff_weights, pure_commitment,
    stackelberg_multi_lp, stackelberg_single_lp, ColumnStatus, ConceptError, StackelbergSolution,
};
use crate::discretization::{grid_count, grid_stackelberg_with_budget, DiscretizationError, GridSpec, TieBreak, DEFAULT_GRID_BUDGET};
use crate::game::{format_rational, parse_game, Game, GameError, JointDistribution, MixedStrategy, Player, Rational};

#[derive(Parser, Debug)]
#[command(name = "bimatrix", version, about = "Exact solvers for two-player normal-form games")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute one solution concept.
    Solve {
        /// maximin | pure-commit | stackelberg | stackelberg-single-lp | ce-max-leader | nash | dominance
        #[arg(long)]
        concept: String,
        #[arg(long, default_value_t = 1)]
        leader: u8,
        game: PathBuf,
    },
    /// Compare every concept for one leader.
    Compare {
        #[arg(long, default_value_t = 1)]
        leader: u8,
        game: PathBuf,
    },
    /// Best leader strategy on the grid of multiples of 1/N.
    Discretize {
        #[arg(long)]
        resolution: u64,
        /// leader-favorable | adversarial
        #[arg(long = "tie-break")]
        tie_break: String,
        #[arg(long, default_value_t = 1)]
        leader: u8,
        #[arg(long, default_value_t = DEFAULT_GRID_BUDGET)]
        budget: u64,
        game: PathBuf,
    },
    /// Number of grid strategies for m pure strategies at resolution N.
    Count {
        #[arg(long)]
        pure: u64,
        #[arg(long)]
        resolution: u64,
    },
}

/// Concepts accepted by `solve --concept`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Concept {
    Maximin,
    PureCommit,
    Stackelberg,
    StackelbergSingleLp,
    CeMaxLeader,
    Nash,
    Dominance,
}

impl Concept {
    pub const ALL: [Concept; 7] = [
        Concept::Maximin,
        Concept::PureCommit,
        Concept::Stackelberg,
        Concept::StackelbergSingleLp,
        Concept::CeMaxLeader,
        Concept::Nash,
        Concept::Dominance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Concept::Maximin => "maximin",
            Concept::PureCommit => "pure-commit",
            Concept::Stackelberg => "stackelberg",
            Concept::StackelbergSingleLp => "stackelberg-single-lp",
            Concept::CeMaxLeader => "ce-max-leader",
            Concept::Nash => "nash",
            Concept::Dominance => "dominance",
        }
    }

    pub fn parse(s: &str) -> Option<Concept> {
        Concept::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Debug)]
struct CliError {
    code: i32,
    error: &'static str,
    detail: String,
    location: Option<String>,
}

impl CliError {
    fn input(error: &'static str, detail: impl Into<String>) -> CliError {
        CliError {
            code: 1,
            error,
            detail: detail.into(),
            location: None,
        }
    }

    fn to_json(&self) -> Value {
        let mut v = json!({ "error": self.error, "detail": self.detail });
        if let Some(loc) = &self.location {
            v["location"] = Value::String(loc.clone());
        }
        v
    }
}

impl From<GameError> for CliError {
    fn from(e: GameError) -> CliError {
        CliError {
            code: 1,
            error: e.kind(),
            detail: e.to_string(),
            location: e.location(),
        }
    }
}

/// Runs the tool with `argv` (program name first), writing to the given
/// streams, and returns the process exit code.
pub fn run_cli<O: Write, E: Write>(argv: &[String], stdout: &mut O, stderr: &mut E) -> i32 {
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            return report(&CliError::input("usage_error", e.render().to_string().trim_end()), stderr);
        }
    };

    let previous_hook = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(AssertUnwindSafe(|| execute(args.command)));
    panic::set_hook(previous_hook);

    match result {
        Ok(Ok(doc)) => {
            let text = serde_json::to_string_pretty(&doc).expect("output is serializable");
            if writeln!(stdout, "{text}").is_err() {
                return 2;
            }
            0
        }
        Ok(Err(e)) => report(&e, stderr),
        Err(payload) => {
            let detail = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            report(
                &CliError {
                    code: 2,
                    error: "internal_error",
                    detail,
                    location: None,
                },
                stderr,
            )
        }
    }
}

fn report<E: Write>(e: &CliError, stderr: &mut E) -> i32 {
    let _ = writeln!(stderr, "{}", e.to_json());
    e.code
}

fn leader_arg(n: u8) -> Result<Player, CliError> {
    Player::from_number(n).ok_or_else(|| CliError::input("invalid_option", format!("--leader must be 1 or 2, got {n}")))
}

fn load_game(path: &Path) -> Result<Game, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        let kind = if e.kind() == std::io::ErrorKind::NotFound {
            "file_not_found"
        } else {
            "io_error"
        };
        CliError {
            code: 1,
            error: kind,
            detail: format!("{}: {e}", path.display()),
            location: None,
        }
    })?;
    Ok(parse_game(&text)?)
}

fn execute(command: Command) -> Result<Value, CliError> {
    match command {
        Command::Solve { concept, leader, game } => {
            let concept = Concept::parse(&concept).ok_or_else(|| {
                let names: Vec<&str> = Concept::ALL.iter().map(|c| c.name()).collect();
                CliError::input("unknown_concept", format!("unknown concept {concept:?}; expected one of {}", names.join(", ")))
            })?;
            let leader = leader_arg(leader)?;
            let game = load_game(&game)?;
            Ok(to_value(&solve(&game, concept, leader)?))
        }
        Command::Compare { leader, game } => {
            let leader = leader_arg(leader)?;
            let game = load_game(&game)?;
            Ok(compare_concepts(&game, leader).to_json())
        }
        Command::Discretize {
            resolution,
            tie_break,
            leader,
            budget,
            game,
        } => {
            let tie_break: TieBreak = tie_break.parse().map_err(|e: String| CliError::input("invalid_option", e))?;
            let spec = GridSpec::new(resolution, tie_break)
                .ok_or_else(|| CliError::input("invalid_option", "--resolution must be at least 1"))?;
            let leader = leader_arg(leader)?;
            let game = load_game(&game)?;
            let out = grid_stackelberg_with_budget(&game, leader, spec, budget).map_err(|e| match e {
                DiscretizationError::BudgetExceeded { .. } => CliError::input("budget_exceeded", e.to_string()),
            })?;
            let count = grid_count(game.num_strategies(leader) as u64, resolution);
            Ok(to_value(&DiscretizeOutput {
                leader: leader.number(),
                resolution,
                tie_break: tie_break.name(),
                grid_count: count.to_string(),
                best_strategy: fractions(out.strategy.probabilities()),
                value: format_rational(&out.value),
                response: game.labels(leader.other())[out.follower_response].clone(),
            }))
        }
        Command::Count { pure, resolution } => {
            if pure == 0 || resolution == 0 {
                return Err(CliError::input("invalid_option", "--pure and --resolution must be at least 1"));
            }
            Ok(json!({ "grid_count": grid_count(pure, resolution).to_string() }))
        }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output is serializable")
}

fn fractions(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

fn matrix(dist: &JointDistribution) -> Value {
    Value::Array(dist.rows().iter().map(|r| json!(fractions(r))).collect())
}

#[derive(Serialize)]
struct DiscretizeOutput {
    leader: u8,
    resolution: u64,
    tie_break: &'static str,
    grid_count: String,
    best_strategy: Vec<String>,
    value: String,
    response: String,
}

#[derive(Serialize)]
struct SolveOutput {
    concept: &'static str,
    leader: u8,
    value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    strategy: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    response: Option<String>,
    notes: Vec<String>,
    #[serde(flatten)]
    extra: BTreeMap<String, Value>,
}

impl SolveOutput {
    fn new(concept: Concept, leader: Player) -> SolveOutput {
        SolveOutput {
            concept: concept.name(),
            leader: leader.number(),
            value: None,
            strategy: None,
            response: None,
            notes: Vec::new(),
            extra: BTreeMap::new(),
        }
    }

    fn strategy(&mut self, s: &MixedStrategy) {
        self.strategy = Some(fractions(s.probabilities()));
    }
}

fn fill_stackelberg(out: &mut SolveOutput, game: &Game, sol: &StackelbergSolution) {
    out.value = Some(format_rational(&sol.leader_value));
    out.strategy(&sol.leader_strategy);
    out.response = Some(game.labels(sol.leader.other())[sol.follower_response].clone());
    out.notes.extend(sol.notes.iter().cloned());
    out.extra.insert("follower_value".into(), json!(format_rational(&sol.follower_value)));
    let per_column: Vec<Value> = sol
        .per_column
        .iter()
        .map(|s| match s {
            ColumnStatus::Infeasible => json!("infeasible"),
            ColumnStatus::Optimal(v) => json!(format_rational(v)),
        })
        .collect();
    out.extra.insert("per_response".into(), Value::Array(per_column));
}

fn solve(game: &Game, concept: Concept, leader: Player) -> Result<SolveOutput, CliError> {
    let mut out = SolveOutput::new(concept, leader);
    let follower_labels = game.labels(leader.other());
    match concept {
        Concept::Maximin => {
            let sol = maximin(game, leader);
            out.value = Some(format_rational(&sol.value));
            out.strategy(&sol.strategy);
        }
        Concept::PureCommit => {
            let pc = pure_commitment(game, leader);
            out.value = Some(format_rational(&pc.value));
            out.strategy(&MixedStrategy::pure(leader, game.num_strategies(leader), pc.strategy));
            out.response = Some(follower_labels[pc.follower_response].clone());
            out.extra
                .insert("pure_strategy".into(), json!(game.labels(leader)[pc.strategy]));
        }
        Concept::Stackelberg => {
            let sol = stackelberg_multi_lp(game, leader);
            fill_stackelberg(&mut out, game, &sol);
        }
        Concept::StackelbergSingleLp => {
            let sol = stackelberg_single_lp(game, leader);
            fill_stackelberg(&mut out, game, &sol.solution);
            out.extra.insert("distribution".into(), matrix(&sol.distribution));
            out.extra.insert("lp_distribution".into(), matrix(&sol.lp_distribution));
        }
        Concept::CeMaxLeader => {
            let ce = correlated_optimize(game, &payoff_weights(game, leader))?;
            out.value = Some(format_rational(&ce.value));
            out.extra.insert("distribution".into(), matrix(&ce.distribution));
        }
        Concept::Nash => {
            let found = nash_equilibria(game).map_err(|e| match e {
                ConceptError::SizeCap { .. } => CliError::input("size_cap_exceeded", e.to_string()),
                ConceptError::Game(g) => g.into(),
            })?;
            // first equilibrium in enumeration order among the leader's best
            let best = found
                .equilibria
                .iter()
                .reduce(|best, e| if e.value(leader) > best.value(leader) { e } else { best })
                .expect("every finite game has an equilibrium");
            out.value = Some(format_rational(best.value(leader)));
            out.strategy(best.strategy(leader));
            if found.degenerate {
                out.notes.push("degenerate game: equilibria may form continua; only vertices are listed".into());
            }
            let list: Vec<Value> = found
                .equilibria
                .iter()
                .map(|e| {
                    json!({
                        "sigma1": fractions(e.sigma1.probabilities()),
                        "sigma2": fractions(e.sigma2.probabilities()),
                        "value1": format_rational(&e.value1),
                        "value2": format_rational(&e.value2),
                    })
                })
                .collect();
            out.extra.insert("equilibria".into(), Value::Array(list));
            out.extra.insert("degenerate".into(), json!(found.degenerate));
        }
        Concept::Dominance => {
            let res = iterated_strict_dominance(game);
            if let ([r], [c]) = (&res.rows[..], &res.cols[..]) {
                out.value = Some(format_rational(game.payoff(leader, *r, *c)));
            } else {
                out.notes.push("dominance does not pin down a single outcome".into());
            }
            out.extra.insert("remaining_rows".into(), json!(res.reduced.row_labels()));
            out.extra.insert("remaining_cols".into(), json!(res.reduced.col_labels()));
            let order: Vec<Value> = res
                .eliminated
                .iter()
                .map(|e| json!({ "player": e.player.number(), "label": e.label }))
                .collect();
            out.extra.insert("eliminated".into(), Value::Array(order));
        }
    }
    Ok(out)
}
