//! Bimatrix games, mixed strategies and the JSON game file format.
//!
//! Every numeric quantity is an exact [`Rational`]. Strategies are identified
//! by index; labels only matter for presentation.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{location}: {message}")]
    Schema { location: String, message: String },
    #[error("{location}: dimension mismatch: {message}")]
    DimensionMismatch { location: String, message: String },
    #[error("{location}: duplicate label {label:?}")]
    DuplicateLabel { location: String, label: String },
    #[error("{location}: malformed numeral {text:?}: {message}")]
    Numeral {
        location: String,
        text: String,
        message: String,
    },
    #[error("{0}")]
    InvalidStrategy(String),
}

impl GameError {
    /// Where in the input document the problem was found, if known.
    pub fn location(&self) -> Option<String> {
        match self {
            GameError::Syntax { line, column, .. } => Some(format!("line {line}, column {column}")),
            GameError::Schema { location, .. }
            | GameError::DimensionMismatch { location, .. }
            | GameError::DuplicateLabel { location, .. }
            | GameError::Numeral { location, .. } => Some(location.clone()),
            GameError::InvalidStrategy(_) => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GameError::Syntax { .. } => "syntax_error",
            GameError::Schema { .. } => "schema_error",
            GameError::DimensionMismatch { .. } => "dimension_mismatch",
            GameError::DuplicateLabel { .. } => "duplicate_label",
            GameError::Numeral { .. } => "malformed_numeral",
            GameError::InvalidStrategy(_) => "invalid_strategy",
        }
    }
}

/// One of the two players. Player one picks rows, player two picks columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Player {
    One,
    Two,
}

impl Player {
    pub fn from_number(n: u8) -> Option<Player> {
        match n {
            1 => Some(Player::One),
            2 => Some(Player::Two),
            _ => None,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            Player::One => 1,
            Player::Two => 2,
        }
    }

    pub fn other(self) -> Player {
        match self {
            Player::One => Player::Two,
            Player::Two => Player::One,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// A two-player normal-form game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    title: String,
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    // payoffs[row][col] = (u1, u2)
    payoffs: Vec<Vec<(Rational, Rational)>>,
}

impl Game {
    pub fn new(
        title: impl Into<String>,
        row_labels: Vec<String>,
        col_labels: Vec<String>,
        payoffs: Vec<Vec<(Rational, Rational)>>,
    ) -> Result<Game, GameError> {
        check_labels("row_labels", &row_labels)?;
        check_labels("col_labels", &col_labels)?;
        if payoffs.len() != row_labels.len() {
            return Err(GameError::DimensionMismatch {
                location: "payoffs".into(),
                message: format!(
                    "{} row labels but {} payoff rows",
                    row_labels.len(),
                    payoffs.len()
                ),
            });
        }
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != col_labels.len() {
                return Err(GameError::DimensionMismatch {
                    location: format!("payoffs[{i}]"),
                    message: format!(
                        "{} column labels but {} payoff cells",
                        col_labels.len(),
                        row.len()
                    ),
                });
            }
        }
        Ok(Game {
            title: title.into(),
            row_labels,
            col_labels,
            payoffs,
        })
    }

    /// Builds a game from integer payoff pairs with generated labels
    /// (`r0, r1, ...` and `c0, c1, ...`).
    pub fn from_integers(title: impl Into<String>, payoffs: &[Vec<(i64, i64)>]) -> Result<Game, GameError> {
        let rows = payoffs.len();
        let cols = payoffs.first().map_or(0, Vec::len);
        let cells = payoffs
            .iter()
            .map(|row| row.iter().map(|&(a, b)| (int(a), int(b))).collect())
            .collect();
        Game::new(
            title,
            (0..rows).map(|i| format!("r{i}")).collect(),
            (0..cols).map(|j| format!("c{j}")).collect(),
            cells,
        )
    }

    pub fn with_labels(mut self, rows: &[&str], cols: &[&str]) -> Result<Game, GameError> {
        let rows: Vec<String> = rows.iter().map(|s| s.to_string()).collect();
        let cols: Vec<String> = cols.iter().map(|s| s.to_string()).collect();
        if rows.len() != self.num_rows() || cols.len() != self.num_cols() {
            return Err(GameError::DimensionMismatch {
                location: "labels".into(),
                message: "label count does not match the payoff matrix".into(),
            });
        }
        check_labels("row_labels", &rows)?;
        check_labels("col_labels", &cols)?;
        self.row_labels = rows;
        self.col_labels = cols;
        Ok(self)
    }

    pub fn title(&self) -> &str {
        &self.title
    }

    pub fn num_rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn num_cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn num_strategies(&self, player: Player) -> usize {
        match player {
            Player::One => self.num_rows(),
            Player::Two => self.num_cols(),
        }
    }

    pub fn labels(&self, player: Player) -> &[String] {
        match player {
            Player::One => &self.row_labels,
            Player::Two => &self.col_labels,
        }
    }

    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    /// Payoff to `player` when the row player picks `row` and the column
    /// player picks `col`.
    pub fn payoff(&self, player: Player, row: usize, col: usize) -> &Rational {
        let cell = &self.payoffs[row][col];
        match player {
            Player::One => &cell.0,
            Player::Two => &cell.1,
        }
    }

    pub fn cell(&self, row: usize, col: usize) -> &(Rational, Rational) {
        &self.payoffs[row][col]
    }

    /// The same game with the players' roles swapped: the new row player is
    /// the old column player. `swapped().payoff(One, j, i) == payoff(Two, i, j)`.
    pub fn swapped(&self) -> Game {
        let payoffs = (0..self.num_cols())
            .map(|j| {
                (0..self.num_rows())
                    .map(|i| {
                        let (a, b) = &self.payoffs[i][j];
                        (b.clone(), a.clone())
                    })
                    .collect()
            })
            .collect();
        Game {
            title: self.title.clone(),
            row_labels: self.col_labels.clone(),
            col_labels: self.row_labels.clone(),
            payoffs,
        }
    }

    /// Keeps only the listed rows and columns, in the given order.
    pub fn restrict(&self, rows: &[usize], cols: &[usize]) -> Game {
        Game {
            title: self.title.clone(),
            row_labels: rows.iter().map(|&i| self.row_labels[i].clone()).collect(),
            col_labels: cols.iter().map(|&j| self.col_labels[j].clone()).collect(),
            payoffs: rows
                .iter()
                .map(|&i| cols.iter().map(|&j| self.payoffs[i][j].clone()).collect())
                .collect(),
        }
    }

    /// Serializes to the JSON game format. Integers that fit in 64 bits are
    /// written as JSON numbers, everything else as `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let payoffs: Vec<Value> = self
            .payoffs
            .iter()
            .map(|row| {
                Value::Array(
                    row.iter()
                        .map(|(a, b)| json!([rational_to_json(a), rational_to_json(b)]))
                        .collect(),
                )
            })
            .collect();
        json!({
            "title": self.title,
            "row_labels": self.row_labels,
            "col_labels": self.col_labels,
            "payoffs": payoffs,
        })
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("game JSON is always serializable")
    }
}

fn check_labels(field: &str, labels: &[String]) -> Result<(), GameError> {
    if labels.is_empty() {
        return Err(GameError::Schema {
            location: field.into(),
            message: "each player needs at least one strategy".into(),
        });
    }
    let mut seen = HashSet::new();
    for (i, label) in labels.iter().enumerate() {
        if !seen.insert(label.as_str()) {
            return Err(GameError::DuplicateLabel {
                location: format!("{field}[{i}]"),
                label: label.clone(),
            });
        }
    }
    Ok(())
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders a rational as `"p/q"`, or `"n"` when it is an integer.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_to_json(r: &Rational) -> Value {
    if r.is_integer() {
        if let Ok(n) = i64::try_from(r.numer()) {
            return Value::from(n);
        }
    }
    Value::String(format_rational(r))
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"-0.49"`.
/// Decimals are converted exactly.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("empty numeral".into());
    }
    let lower = t.to_ascii_lowercase();
    if ["nan", "inf", "+inf", "-inf", "infinity", "+infinity", "-infinity"].contains(&lower.as_str()) {
        return Err("non-finite value".into());
    }
    if let Some((p, q)) = t.split_once('/') {
        let numer = parse_integer(p).ok_or_else(|| "numerator is not an integer".to_string())?;
        if q.starts_with(['+', '-']) {
            return Err("denominator must be an unsigned integer".into());
        }
        let denom = parse_integer(q).ok_or_else(|| "denominator is not an integer".to_string())?;
        if denom.is_zero() {
            return Err("zero denominator".into());
        }
        return Ok(Rational::new(numer, denom));
    }
    let (negative, body) = match t.as_bytes()[0] {
        b'-' => (true, &t[1..]),
        b'+' => (false, &t[1..]),
        _ => (false, t),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err("no digits".into());
    }
    if !whole.bytes().all(|b| b.is_ascii_digit()) || !frac.bytes().all(|b| b.is_ascii_digit()) {
        return Err("expected an integer, a fraction p/q, or a finite decimal".into());
    }
    let digits = format!("{whole}{frac}");
    let mut numer: BigInt = digits.parse().map_err(|_| "no digits".to_string())?;
    if negative {
        numer = -numer;
    }
    let denom = num_traits::pow(BigInt::from(10), frac.len());
    Ok(Rational::new(numer, denom))
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses a game document in the JSON game format.
pub fn parse_game(document: &str) -> Result<Game, GameError> {
    let root: Value = serde_json::from_str(document).map_err(|e| GameError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = root.as_object().ok_or_else(|| GameError::Schema {
        location: "$".into(),
        message: "document must be a JSON object".into(),
    })?;
    let title = match obj.get("title") {
        None => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(_) => {
            return Err(GameError::Schema {
                location: "title".into(),
                message: "expected a string".into(),
            })
        }
    };
    let row_labels = string_list(obj.get("row_labels"), "row_labels")?;
    let col_labels = string_list(obj.get("col_labels"), "col_labels")?;
    let rows = obj
        .get("payoffs")
        .ok_or_else(|| GameError::Schema {
            location: "payoffs".into(),
            message: "missing field".into(),
        })?
        .as_array()
        .ok_or_else(|| GameError::Schema {
            location: "payoffs".into(),
            message: "expected an array of rows".into(),
        })?;
    if rows.len() != row_labels.len() {
        return Err(GameError::DimensionMismatch {
            location: "payoffs".into(),
            message: format!("{} row labels but {} payoff rows", row_labels.len(), rows.len()),
        });
    }
    let mut payoffs = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let cells = row.as_array().ok_or_else(|| GameError::Schema {
            location: format!("payoffs[{i}]"),
            message: "expected an array of cells".into(),
        })?;
        if cells.len() != col_labels.len() {
            return Err(GameError::DimensionMismatch {
                location: format!("payoffs[{i}]"),
                message: format!(
                    "{} column labels but {} payoff cells",
                    col_labels.len(),
                    cells.len()
                ),
            });
        }
        let mut parsed_row = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            let pair = cell.as_array().filter(|a| a.len() == 2).ok_or_else(|| {
                GameError::DimensionMismatch {
                    location: format!("payoffs[{i}][{j}]"),
                    message: "each cell must be a pair [u1, u2]".into(),
                }
            })?;
            let u1 = numeral(&pair[0], format!("payoffs[{i}][{j}][0]"))?;
            let u2 = numeral(&pair[1], format!("payoffs[{i}][{j}][1]"))?;
            parsed_row.push((u1, u2));
        }
        payoffs.push(parsed_row);
    }
    Game::new(title, row_labels, col_labels, payoffs)
}

fn string_list(value: Option<&Value>, field: &str) -> Result<Vec<String>, GameError> {
    let arr = value
        .ok_or_else(|| GameError::Schema {
            location: field.into(),
            message: "missing field".into(),
        })?
        .as_array()
        .ok_or_else(|| GameError::Schema {
            location: field.into(),
            message: "expected an array of strings".into(),
        })?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| {
            v.as_str().map(str::to_string).ok_or_else(|| GameError::Schema {
                location: format!("{field}[{i}]"),
                message: "expected a string".into(),
            })
        })
        .collect()
}

fn numeral(value: &Value, location: String) -> Result<Rational, GameError> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(int(i))
            } else if let Some(u) = n.as_u64() {
                Ok(Rational::from_integer(BigInt::from(u)))
            } else {
                Err(GameError::Numeral {
                    location,
                    text: n.to_string(),
                    message: "non-integer JSON numbers are inexact; write decimals as strings".into(),
                })
            }
        }
        Value::String(s) => parse_rational(s).map_err(|message| GameError::Numeral {
            location,
            text: s.clone(),
            message,
        }),
        other => Err(GameError::Numeral {
            location,
            text: other.to_string(),
            message: "expected a number or a numeral string".into(),
        }),
    }
}

/// Returns `c` when `u1 + u2 == c` in every cell.
pub fn constant_sum(game: &Game) -> Option<Rational> {
    let (a, b) = game.cell(0, 0);
    let c = a + b;
    game.payoffs
        .iter()
        .flatten()
        .all(|(a, b)| a + b == c)
        .then_some(c)
}

/// A probability distribution over one player's pure strategies.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedStrategy {
    player: Player,
    probabilities: Vec<Rational>,
}

impl MixedStrategy {
    pub fn new(player: Player, probabilities: Vec<Rational>) -> Result<Self, GameError> {
        if probabilities.is_empty() {
            return Err(GameError::InvalidStrategy("empty strategy".into()));
        }
        if let Some(p) = probabilities.iter().find(|p| p.is_negative()) {
            return Err(GameError::InvalidStrategy(format!(
                "negative probability {}",
                format_rational(p)
            )));
        }
        let total: Rational = probabilities.iter().sum();
        if !total.is_one() {
            return Err(GameError::InvalidStrategy(format!(
                "probabilities sum to {}",
                format_rational(&total)
            )));
        }
        Ok(MixedStrategy {
            player,
            probabilities,
        })
    }

    pub fn pure(player: Player, num_strategies: usize, index: usize) -> Self {
        assert!(index < num_strategies, "pure strategy index out of range");
        let probabilities = (0..num_strategies)
            .map(|i| if i == index { Rational::one() } else { Rational::zero() })
            .collect();
        MixedStrategy {
            player,
            probabilities,
        }
    }

    pub fn uniform(player: Player, num_strategies: usize) -> Self {
        assert!(num_strategies > 0);
        let p = Rational::new(BigInt::one(), BigInt::from(num_strategies));
        MixedStrategy {
            player,
            probabilities: vec![p; num_strategies],
        }
    }

    pub fn player(&self) -> Player {
        self.player
    }

    pub fn probabilities(&self) -> &[Rational] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    /// Indices with positive probability.
    pub fn support(&self) -> Vec<usize> {
        self.probabilities
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_positive())
            .map(|(i, _)| i)
            .collect()
    }

    /// The index of the single strategy played with certainty, if any.
    pub fn pure_index(&self) -> Option<usize> {
        self.probabilities.iter().position(One::is_one)
    }
}

/// A probability distribution over outcome pairs `(row, col)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    probabilities: Vec<Vec<Rational>>,
}

impl JointDistribution {
    pub fn new(probabilities: Vec<Vec<Rational>>) -> Result<Self, GameError> {
        let width = probabilities.first().map_or(0, Vec::len);
        if width == 0 || probabilities.iter().any(|r| r.len() != width) {
            return Err(GameError::InvalidStrategy("ragged or empty distribution".into()));
        }
        if probabilities.iter().flatten().any(Signed::is_negative) {
            return Err(GameError::InvalidStrategy("negative probability".into()));
        }
        let total: Rational = probabilities.iter().flatten().sum();
        if !total.is_one() {
            return Err(GameError::InvalidStrategy(format!(
                "probabilities sum to {}",
                format_rational(&total)
            )));
        }
        Ok(JointDistribution { probabilities })
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.probabilities[row][col]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.probabilities
    }

    pub fn num_rows(&self) -> usize {
        self.probabilities.len()
    }

    pub fn num_cols(&self) -> usize {
        self.probabilities[0].len()
    }

    /// Marginal over row strategies.
    pub fn row_marginal(&self) -> Vec<Rational> {
        self.probabilities.iter().map(|r| r.iter().sum()).collect()
    }

    /// Marginal over column strategies.
    pub fn col_marginal(&self) -> Vec<Rational> {
        (0..self.num_cols())
            .map(|j| self.probabilities.iter().map(|r| &r[j]).sum())
            .collect()
    }

    /// Columns that carry positive mass.
    pub fn active_cols(&self) -> Vec<usize> {
        self.col_marginal()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_positive())
            .map(|(j, _)| j)
            .collect()
    }

    /// Expected payoff to `player` when outcomes are drawn from this distribution.
    pub fn expected_payoff(&self, game: &Game, player: Player) -> Rational {
        let mut total = Rational::zero();
        for (i, row) in self.probabilities.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                if !p.is_zero() {
                    total += p * game.payoff(player, i, j);
                }
            }
        }
        total
    }

    /// The product distribution of two independent mixed strategies.
    pub fn product(sigma1: &MixedStrategy, sigma2: &MixedStrategy) -> Self {
        let probabilities = sigma1
            .probabilities()
            .iter()
            .map(|p| sigma2.probabilities().iter().map(|q| p * q).collect())
            .collect();
        JointDistribution { probabilities }
    }
}

/// Expected utility of `player` when the row player uses `sigma1` and the
/// column player uses `sigma2`.
pub fn expected_utility(
    game: &Game,
    sigma1: &MixedStrategy,
    sigma2: &MixedStrategy,
    player: Player,
) -> Result<Rational, GameError> {
    if sigma1.len() != game.num_rows() || sigma2.len() != game.num_cols() {
        return Err(GameError::InvalidStrategy(format!(
            "strategy lengths ({}, {}) do not match a {}x{} game",
            sigma1.len(),
            sigma2.len(),
            game.num_rows(),
            game.num_cols()
        )));
    }
    let mut total = Rational::zero();
    for (i, p) in sigma1.probabilities().iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        for (j, q) in sigma2.probabilities().iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            total += p * q * game.payoff(player, i, j);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    pub(crate) const FIG1: &str = r#"{
        "title": "commitment example",
        "row_labels": ["U", "D"],
        "col_labels": ["L", "R"],
        "payoffs": [[[1, 1], [3, 0]], [[0, 0], [2, 1]]]
    }"#;

    #[test]
    fn parses_commitment_example() {
        let g = parse_game(FIG1).unwrap();
        assert_eq!(g.num_rows(), 2);
        assert_eq!(g.num_cols(), 2);
        assert_eq!(g.payoff(Player::One, 0, 1), &int(3));
        assert_eq!(g.payoff(Player::Two, 1, 1), &int(1));
        assert_eq!(g.title(), "commitment example");
    }

    #[test]
    fn numerals() {
        assert_eq!(r("0.49"), Rational::new(49.into(), 100.into()));
        assert_eq!(r("-2.5"), Rational::new((-5).into(), 2.into()));
        assert_eq!(r("6/4"), Rational::new(3.into(), 2.into()));
        assert_eq!(r("-3/9"), Rational::new((-1).into(), 3.into()));
        assert_eq!(r("12"), int(12));
        assert_eq!(r(".5"), Rational::new(1.into(), 2.into()));
        assert_eq!(r("7."), int(7));
        for bad in ["", "1/0", "abc", "1e5", "NaN", "inf", "0.(3)", "1/-2", "--1", "1.2.3", "."] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn dimension_mismatch_rows() {
        let doc = r#"{"title":"t","row_labels":["a","b"],"col_labels":["x"],
            "payoffs":[[[1,1]],[[1,1]],[[1,1]]]}"#;
        let err = parse_game(doc).unwrap_err();
        assert!(matches!(err, GameError::DimensionMismatch { .. }), "{err:?}");
        assert_eq!(err.location().as_deref(), Some("payoffs"));
    }

    #[test]
    fn dimension_mismatch_cell() {
        let doc = r#"{"title":"t","row_labels":["a"],"col_labels":["x","y"],
            "payoffs":[[[1,1],[1,1,1]]]}"#;
        let err = parse_game(doc).unwrap_err();
        assert_eq!(err.location().as_deref(), Some("payoffs[0][1]"));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let doc = r#"{"title":"t","row_labels":["a","a"],"col_labels":["x"],
            "payoffs":[[[1,1]],[[1,1]]]}"#;
        let err = parse_game(doc).unwrap_err();
        assert!(matches!(err, GameError::DuplicateLabel { .. }));
        assert_eq!(err.location().as_deref(), Some("row_labels[1]"));
    }

    #[test]
    fn malformed_numeral_has_location() {
        let doc = r#"{"title":"t","row_labels":["a"],"col_labels":["x"],
            "payoffs":[[[1,"2/0"]]]}"#;
        let err = parse_game(doc).unwrap_err();
        assert!(matches!(err, GameError::Numeral { .. }));
        assert_eq!(err.location().as_deref(), Some("payoffs[0][0][1]"));

        let float = r#"{"title":"t","row_labels":["a"],"col_labels":["x"],
            "payoffs":[[[0.5,1]]]}"#;
        assert!(matches!(parse_game(float), Err(GameError::Numeral { .. })));
    }

    #[test]
    fn syntax_error_reports_position() {
        let err = parse_game("{\"title\": ").unwrap_err();
        match err {
            GameError::Syntax { line, .. } => assert_eq!(line, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_strategy_sets_rejected() {
        let doc = r#"{"title":"t","row_labels":[],"col_labels":["x"],"payoffs":[]}"#;
        assert!(parse_game(doc).is_err());
    }

    #[test]
    fn one_by_one() {
        let doc = r#"{"title":"t","row_labels":["a"],"col_labels":["x"],"payoffs":[[[0,0]]]}"#;
        let g = parse_game(doc).unwrap();
        assert_eq!((g.num_rows(), g.num_cols()), (1, 1));
    }

    #[test]
    fn serializer_round_trip() {
        let doc = r#"{"title":"mixed","row_labels":["a","b"],"col_labels":["x"],
            "payoffs":[[["0.25","-7/3"]],[[99999999999999999999, 4]]]}"#;
        let err = parse_game(doc);
        // integers too large for 64 bits must be quoted
        assert!(err.is_err());
        let doc = r#"{"title":"mixed","row_labels":["a","b"],"col_labels":["x"],
            "payoffs":[[["0.25","-7/3"]],[["99999999999999999999", 4]]]}"#;
        let g = parse_game(doc).unwrap();
        let again = parse_game(&g.to_json_string()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn constant_sum_detection() {
        let mp = Game::from_integers("mp", &[vec![(1, -1), (-1, 1)], vec![(-1, 1), (1, -1)]]).unwrap();
        assert_eq!(constant_sum(&mp), Some(int(0)));
        let fig1 = parse_game(FIG1).unwrap();
        assert_eq!(constant_sum(&fig1), None);
        let five = Game::from_integers("five", &[vec![(2, 3), (-4, 9)], vec![(5, 0), (11, -6)]]).unwrap();
        assert_eq!(constant_sum(&five), Some(int(5)));
    }

    #[test]
    fn expected_utility_examples() {
        let g = parse_game(FIG1).unwrap();
        let sigma1 = MixedStrategy::new(Player::One, vec![r("49/100"), r("51/100")]).unwrap();
        let right = MixedStrategy::pure(Player::Two, 2, 1);
        assert_eq!(expected_utility(&g, &sigma1, &right, Player::One).unwrap(), r("249/100"));

        let up = MixedStrategy::pure(Player::One, 2, 0);
        let left = MixedStrategy::pure(Player::Two, 2, 0);
        assert_eq!(expected_utility(&g, &up, &left, Player::Two).unwrap(), int(1));

        // brute force over the four cells: (1 + 3 + 0 + 2) / 4
        let u1 = MixedStrategy::uniform(Player::One, 2);
        let u2 = MixedStrategy::uniform(Player::Two, 2);
        let brute: Rational = (0..2)
            .flat_map(|i| (0..2).map(move |j| (i, j)))
            .map(|(i, j)| g.payoff(Player::One, i, j) * r("1/4"))
            .sum();
        assert_eq!(brute, r("3/2"));
        assert_eq!(expected_utility(&g, &u1, &u2, Player::One).unwrap(), brute);
    }

    #[test]
    fn expected_utility_dimension_mismatch() {
        let g = parse_game(FIG1).unwrap();
        let bad = MixedStrategy::uniform(Player::One, 3);
        let u2 = MixedStrategy::uniform(Player::Two, 2);
        assert!(expected_utility(&g, &bad, &u2, Player::One).is_err());
    }

    #[test]
    fn strategy_validation() {
        assert!(MixedStrategy::new(Player::One, vec![r("1/2"), r("1/3")]).is_err());
        assert!(MixedStrategy::new(Player::One, vec![r("3/2"), r("-1/2")]).is_err());
        assert!(MixedStrategy::new(Player::One, vec![]).is_err());
        let s = MixedStrategy::new(Player::Two, vec![r("0"), r("1")]).unwrap();
        assert_eq!(s.pure_index(), Some(1));
        assert_eq!(s.support(), vec![1]);
    }

    #[test]
    fn swapped_exchanges_roles() {
        let g = parse_game(FIG1).unwrap();
        let s = g.swapped();
        assert_eq!(s.row_labels(), g.col_labels());
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(s.payoff(Player::One, j, i), g.payoff(Player::Two, i, j));
                assert_eq!(s.payoff(Player::Two, j, i), g.payoff(Player::One, i, j));
            }
        }
        assert_eq!(s.swapped(), g);
    }
}
