//! Exact linear programming over the rationals.
//!
//! Problems are stated as maximizations over a mix of nonnegative and free
//! variables with `<=`, `>=` and `=` rows. [`solve_lp`] runs a dense two-phase
//! primal simplex with integer-preserving pivots. It always terminates
//! and returns a vertex of the feasible region.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::game::{format_rational, Rational};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("expected {expected} coefficients, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("a linear program needs at least one variable")]
    NoVariables,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    fn flipped(self) -> Relation {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
            Relation::Eq => Relation::Eq,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn lhs(&self, point: &[Rational]) -> Rational {
        dot(&self.coefficients, point)
    }

    pub fn is_satisfied(&self, point: &[Rational]) -> bool {
        self.relation.holds(&self.lhs(point), &self.rhs)
    }
}

/// `maximize objective·x` subject to the constraints, with `x[k] >= 0` for
/// every `k` flagged nonnegative. Variables start out nonnegative; use
/// [`LinearProgram::set_free`] to lift the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rational>,
    constraints: Vec<Constraint>,
    nonneg: Vec<bool>,
}

impl LinearProgram {
    pub fn new(objective: Vec<Rational>) -> Result<Self, LpError> {
        if objective.is_empty() {
            return Err(LpError::NoVariables);
        }
        let num_vars = objective.len();
        Ok(LinearProgram {
            num_vars,
            objective,
            constraints: Vec::new(),
            nonneg: vec![true; num_vars],
        })
    }

    /// A program with `num_vars` variables whose objective is the sum of the
    /// given sparse terms.
    pub fn maximize(num_vars: usize, terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        assert!(num_vars > 0, "a linear program needs at least one variable");
        let mut objective = vec![Rational::zero(); num_vars];
        for (k, c) in terms {
            objective[k] += c;
        }
        LinearProgram {
            num_vars,
            objective,
            constraints: Vec::new(),
            nonneg: vec![true; num_vars],
        }
    }

    pub fn add_constraint(&mut self, constraint: Constraint) -> Result<(), LpError> {
        if constraint.coefficients.len() != self.num_vars {
            return Err(LpError::Dimension {
                expected: self.num_vars,
                got: constraint.coefficients.len(),
            });
        }
        self.constraints.push(constraint);
        Ok(())
    }

    /// Adds `sum(coef * x[k]) relation rhs` from sparse terms. Repeated
    /// indices accumulate.
    ///
    /// Panics if a variable index is out of range.
    pub fn add_terms(
        &mut self,
        terms: impl IntoIterator<Item = (usize, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) {
        let mut coefficients = vec![Rational::zero(); self.num_vars];
        for (k, c) in terms {
            assert!(k < self.num_vars, "variable {k} out of range");
            coefficients[k] += c;
        }
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
    }

    pub fn set_free(&mut self, var: usize) {
        self.nonneg[var] = false;
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn objective(&self) -> &[Rational] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn is_nonneg(&self, var: usize) -> bool {
        self.nonneg[var]
    }

    pub fn objective_value(&self, point: &[Rational]) -> Rational {
        dot(&self.objective, point)
    }

    /// Exact feasibility check of `point`, including sign bounds.
    pub fn is_feasible(&self, point: &[Rational]) -> bool {
        point.len() == self.num_vars
            && point
                .iter()
                .zip(&self.nonneg)
                .all(|(x, &nn)| !nn || !x.is_negative())
            && self.constraints.iter().all(|c| c.is_satisfied(point))
    }

    /// Index of the first violated constraint, or `None`.
    pub fn first_violation(&self, point: &[Rational]) -> Option<usize> {
        self.constraints.iter().position(|c| !c.is_satisfied(point))
    }
}

impl fmt::Display for LinearProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |coefs: &[Rational]| {
            coefs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| format!("{}*x{k}", format_rational(c)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        writeln!(f, "maximize {}", row(&self.objective))?;
        for c in &self.constraints {
            writeln!(f, "  {} {} {}", row(&c.coefficients), c.relation, format_rational(&c.rhs))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rational,
        assignment: Vec<Rational>,
    },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal { .. } => LpStatus::Optimal,
            LpOutcome::Infeasible => LpStatus::Infeasible,
            LpOutcome::Unbounded => LpStatus::Unbounded,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn assignment(&self) -> Option<&[Rational]> {
        match self {
            LpOutcome::Optimal { assignment, .. } => Some(assignment),
            _ => None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut total = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            total += x * y;
        }
    }
    total
}

/// Solves `lp` exactly.
///
/// An `Optimal` outcome is re-verified against every constraint before it is
/// returned; a failed verification is a solver bug and panics.
pub fn solve_lp(lp: &LinearProgram) -> LpOutcome {
    let outcome = Tableau::build(lp).solve(lp);
    if let LpOutcome::Optimal { value, assignment } = &outcome {
        assert!(
            lp.is_feasible(assignment),
            "simplex returned an infeasible point (constraint {:?}) for\n{lp}",
            lp.first_violation(assignment)
        );
        assert_eq!(
            &lp.objective_value(assignment),
            value,
            "simplex objective bookkeeping drifted"
        );
    }
    outcome
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColumnKind {
    // original variable k, possibly the negative half of a split free variable
    Positive(usize),
    Negative(usize),
    Slack,
    Artificial,
}

// Consecutive degenerate pivots tolerated before falling back to Bland's rule.
const DEGENERATE_RUN_LIMIT: usize = 50;

/// Dense tableau in integer-preserving form: the true entry at `(i, j)` is
/// `rows[i][j] / det`, where `det > 0` is the previous pivot element. Every
/// update divides exactly, so entries stay integral without gcd reductions.
struct Tableau {
    // rows[i] has one entry per column plus the right-hand side at the end
    rows: Vec<Vec<BigInt>>,
    det: BigInt,
    basis: Vec<usize>,
    kinds: Vec<ColumnKind>,
}

/// Common denominator of `values`, so that scaling by it gives integers.
fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn scaled(value: &Rational, scale: &BigInt) -> BigInt {
    value.numer() * (scale / value.denom())
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        let mut kinds = Vec::new();
        let mut var_cols: Vec<(usize, Option<usize>)> = Vec::with_capacity(lp.num_vars);
        for k in 0..lp.num_vars {
            let pos = kinds.len();
            kinds.push(ColumnKind::Positive(k));
            let neg = if lp.nonneg[k] {
                None
            } else {
                kinds.push(ColumnKind::Negative(k));
                Some(pos + 1)
            };
            var_cols.push((pos, neg));
        }

        // Normalize every row to a nonnegative integer right-hand side first
        // so we know which rows need slack, surplus or artificial columns.
        let normalized: Vec<(Vec<BigInt>, Relation, BigInt)> = lp
            .constraints
            .iter()
            .map(|c| {
                let scale = common_denominator(c.coefficients.iter().chain([&c.rhs]));
                let coefs = c.coefficients.iter().map(|x| scaled(x, &scale));
                let rhs = scaled(&c.rhs, &scale);
                // a zero right-hand side `>=` row flips to `<=` so its slack can start basic
                if rhs.is_negative() || (rhs.is_zero() && c.relation == Relation::Ge) {
                    (coefs.map(|x| -x).collect(), c.relation.flipped(), -rhs)
                } else {
                    (coefs.collect(), c.relation, rhs)
                }
            })
            .collect();

        let mut extra: Vec<(usize, i32)> = Vec::new(); // (row, coefficient) per added column
        let mut basis = vec![usize::MAX; normalized.len()];
        let base = kinds.len();
        for (i, (_, rel, _)) in normalized.iter().enumerate() {
            match rel {
                Relation::Le => {
                    basis[i] = base + extra.len();
                    extra.push((i, 1));
                    kinds.push(ColumnKind::Slack);
                }
                Relation::Ge => {
                    extra.push((i, -1));
                    kinds.push(ColumnKind::Slack);
                }
                Relation::Eq => {}
            }
        }
        for (i, (_, rel, _)) in normalized.iter().enumerate() {
            if *rel != Relation::Le {
                basis[i] = base + extra.len();
                extra.push((i, 1));
                kinds.push(ColumnKind::Artificial);
            }
        }

        let width = kinds.len() + 1;
        let rows = normalized
            .into_iter()
            .enumerate()
            .map(|(i, (coefs, _, rhs))| {
                let mut row = vec![BigInt::zero(); width];
                for (k, c) in coefs.into_iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let (pos, neg) = var_cols[k];
                    if let Some(neg) = neg {
                        row[neg] = -&c;
                    }
                    row[pos] = c;
                }
                for (offset, &(r, c)) in extra.iter().enumerate() {
                    if r == i {
                        row[base + offset] = BigInt::from(c);
                    }
                }
                row[width - 1] = rhs;
                row
            })
            .collect();

        Tableau {
            rows,
            det: BigInt::one(),
            basis,
            kinds,
        }
    }

    fn num_cols(&self) -> usize {
        self.kinds.len()
    }

    fn solve(mut self, lp: &LinearProgram) -> LpOutcome {
        let n = self.num_cols();
        if self.kinds.contains(&ColumnKind::Artificial) {
            // Phase one: maximize minus the sum of artificials.
            let costs: Vec<Rational> = self
                .kinds
                .iter()
                .map(|k| {
                    if *k == ColumnKind::Artificial {
                        -Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect();
            let allowed = vec![true; n];
            assert!(
                self.optimize(&costs, &allowed),
                "phase one objective is bounded above by zero"
            );
            let stuck = self
                .basis
                .iter()
                .zip(&self.rows)
                .any(|(&b, row)| self.kinds[b] == ColumnKind::Artificial && row[n].is_positive());
            if stuck {
                return LpOutcome::Infeasible;
            }
            self.drive_out_artificials();
        }

        let mut costs = vec![Rational::zero(); n];
        for (col, kind) in self.kinds.iter().enumerate() {
            match kind {
                ColumnKind::Positive(k) => costs[col] = lp.objective[*k].clone(),
                ColumnKind::Negative(k) => costs[col] = -&lp.objective[*k],
                _ => {}
            }
        }
        let allowed: Vec<bool> = self
            .kinds
            .iter()
            .map(|k| *k != ColumnKind::Artificial)
            .collect();
        if !self.optimize(&costs, &allowed) {
            return LpOutcome::Unbounded;
        }

        let mut assignment = vec![Rational::zero(); lp.num_vars];
        for (i, &col) in self.basis.iter().enumerate() {
            let value = Rational::new(self.rows[i][n].clone(), self.det.clone());
            match self.kinds[col] {
                ColumnKind::Positive(k) => assignment[k] += value,
                ColumnKind::Negative(k) => assignment[k] -= value,
                _ => {}
            }
        }
        let value = lp.objective_value(&assignment);
        LpOutcome::Optimal { value, assignment }
    }

    /// Runs simplex iterations for `costs` over the allowed columns.
    /// Returns `false` if the objective is unbounded.
    fn optimize(&mut self, costs: &[Rational], allowed: &[bool]) -> bool {
        let n = self.num_cols();
        let scale = common_denominator(costs);
        let costs: Vec<BigInt> = costs.iter().map(|c| scaled(c, &scale)).collect();
        // reduced[j] is det * scale times the reduced cost of column j
        let mut reduced: Vec<BigInt> = costs.iter().map(|c| c * &self.det).collect();
        reduced.push(BigInt::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &costs[b];
            if cb.is_zero() {
                continue;
            }
            for (j, entry) in self.rows[i].iter().enumerate() {
                if !entry.is_zero() {
                    reduced[j] -= cb * entry;
                }
            }
        }

        // Largest reduced cost, switching to Bland's rule (lowest improving
        // index) after a run of degenerate pivots and back after progress.
        // The objective strictly increases between Bland stretches, so no
        // basis repeats.
        let mut degenerate_run = 0;
        loop {
            let improving = (0..n).filter(|&j| allowed[j] && reduced[j].is_positive());
            let entering = if degenerate_run > DEGENERATE_RUN_LIMIT {
                improving.min()
            } else {
                improving.fold(None, |best: Option<usize>, j| match best {
                    Some(b) if reduced[b] >= reduced[j] => Some(b),
                    _ => Some(j),
                })
            };
            let Some(e) = entering else {
                return true;
            };
            // Ratio test; ties go to the lowest basic column index.
            let mut leaving: Option<usize> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[e].is_positive() {
                    continue;
                }
                let better = match leaving {
                    None => true,
                    Some(li) => {
                        let best = &self.rows[li];
                        match (&row[n] * &best[e]).cmp(&(&best[n] * &row[e])) {
                            Ordering::Less => true,
                            Ordering::Equal => self.basis[i] < self.basis[li],
                            Ordering::Greater => false,
                        }
                    }
                };
                if better {
                    leaving = Some(i);
                }
            }
            let Some(l) = leaving else {
                return false;
            };
            if self.rows[l][n].is_zero() {
                degenerate_run += 1;
            } else {
                degenerate_run = 0;
            }
            self.pivot(l, e, Some(&mut reduced));
        }
    }

    /// Pivots column `col` into the basis at `row`, updating `reduced`
    /// alongside the constraint rows.
    fn pivot(&mut self, row: usize, col: usize, reduced: Option<&mut Vec<BigInt>>) {
        let pivot = self.rows[row][col].clone();
        let pivot_row = self.rows[row].clone();
        let det = std::mem::replace(&mut self.det, pivot.clone());
        let update = |target: &mut Vec<BigInt>| {
            let factor = target[col].clone();
            for (entry, p) in target.iter_mut().zip(&pivot_row) {
                let mut next = &*entry * &pivot;
                if !factor.is_zero() && !p.is_zero() {
                    next -= &factor * p;
                }
                *entry = if det.is_one() {
                    next
                } else {
                    debug_assert!((&next % &det).is_zero(), "inexact tableau division");
                    next / &det
                };
            }
        };
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i != row {
                update(r);
            }
        }
        if let Some(reduced) = reduced {
            debug_assert!(pivot.is_positive());
            update(reduced);
        }
        if pivot.is_negative() {
            // keep det positive; every ratio entry / det is unchanged
            self.det = -&self.det;
            for entry in self.rows.iter_mut().flatten() {
                *entry = -&*entry;
            }
        }
        self.basis[row] = col;
    }

    /// After a successful phase one every artificial column still in the
    /// basis sits at zero. Pivot each out on any non-artificial column; rows
    /// where that is impossible are linearly dependent and get dropped.
    fn drive_out_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.kinds[self.basis[i]] != ColumnKind::Artificial {
                i += 1;
                continue;
            }
            let replacement = (0..self.num_cols())
                .find(|&j| self.kinds[j] != ColumnKind::Artificial && !self.rows[i][j].is_zero());
            match replacement {
                Some(j) => {
                    self.pivot(i, j, None);
                    i += 1;
                }
                None => {
                    self.rows.remove(i);
                    self.basis.remove(i);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::int;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn one_variable_bound() {
        let mut lp = LinearProgram::maximize(1, [(0, int(1))]);
        lp.add_terms([(0, int(1))], Relation::Le, int(1));
        let out = solve_lp(&lp);
        assert_eq!(out.value(), Some(&int(1)));
        assert_eq!(out.assignment().unwrap(), &[int(1)]);
    }

    #[test]
    fn contradictory_bound_is_infeasible() {
        let mut lp = LinearProgram::maximize(1, [(0, int(1))]);
        lp.add_terms([(0, int(1))], Relation::Le, int(-1));
        assert_eq!(solve_lp(&lp), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_ray() {
        let mut lp = LinearProgram::maximize(2, [(0, int(1))]);
        lp.add_terms([(0, int(1)), (1, int(-1))], Relation::Le, int(3));
        assert_eq!(solve_lp(&lp), LpOutcome::Unbounded);
    }

    #[test]
    fn free_variable_goes_negative() {
        // maximize -x subject to x >= -5, x free
        let mut lp = LinearProgram::maximize(1, [(0, int(-1))]);
        lp.set_free(0);
        lp.add_terms([(0, int(1))], Relation::Ge, int(-5));
        let out = solve_lp(&lp);
        assert_eq!(out.value(), Some(&int(5)));
        assert_eq!(out.assignment().unwrap(), &[int(-5)]);
    }

    #[test]
    fn equality_and_redundant_rows() {
        // x + y = 1 stated twice, maximize 2x + 3y
        let mut lp = LinearProgram::maximize(2, [(0, int(2)), (1, int(3))]);
        lp.add_terms([(0, int(1)), (1, int(1))], Relation::Eq, int(1));
        lp.add_terms([(0, int(2)), (1, int(2))], Relation::Eq, int(2));
        lp.add_terms([(1, int(1))], Relation::Le, q(3, 4));
        let out = solve_lp(&lp);
        assert_eq!(out.value(), Some(&q(11, 4)));
        assert_eq!(out.assignment().unwrap(), &[q(1, 4), q(3, 4)]);
    }

    #[test]
    fn chvatal_cycling_example_terminates() {
        // Cycles under the largest-coefficient entering rule.
        let mut lp = LinearProgram::maximize(4, [(0, int(10)), (1, int(-57)), (2, int(-9)), (3, int(-24))]);
        lp.add_terms(
            [(0, q(1, 2)), (1, q(-11, 2)), (2, q(-5, 2)), (3, int(9))],
            Relation::Le,
            int(0),
        );
        lp.add_terms(
            [(0, q(1, 2)), (1, q(-3, 2)), (2, q(-1, 2)), (3, int(1))],
            Relation::Le,
            int(0),
        );
        lp.add_terms([(0, int(1))], Relation::Le, int(1));
        let out = solve_lp(&lp);
        assert_eq!(out.value(), Some(&int(1)));
        assert_eq!(out.assignment().unwrap(), &[int(1), int(0), int(1), int(0)]);
    }

    #[test]
    fn dimension_checked() {
        let mut lp = LinearProgram::new(vec![int(1), int(1)]).unwrap();
        let err = lp.add_constraint(Constraint {
            coefficients: vec![int(1)],
            relation: Relation::Le,
            rhs: int(1),
        });
        assert_eq!(err, Err(LpError::Dimension { expected: 2, got: 1 }));
        assert_eq!(LinearProgram::new(vec![]), Err(LpError::NoVariables));
    }

    #[test]
    fn deterministic() {
        let mut lp = LinearProgram::maximize(3, [(0, int(1)), (1, int(1)), (2, int(1))]);
        lp.add_terms([(0, int(1)), (1, int(1)), (2, int(1))], Relation::Le, int(1));
        let a = solve_lp(&lp);
        let b = solve_lp(&lp);
        assert_eq!(a, b);
        assert_eq!(a.value(), Some(&int(1)));
    }
}
