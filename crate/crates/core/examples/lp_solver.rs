//! The exact LP solver on its own.
//!
//! `cargo run --example lp_solver`

use bimatrix::lp::{solve_lp, LinearProgram, LpOutcome, Relation};
use bimatrix::{format_rational, Rational};

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn report(name: &str, lp: &LinearProgram) {
    print!("{name}:\n{lp}");
    match solve_lp(lp) {
        LpOutcome::Optimal { value, assignment } => {
            let xs: Vec<String> = assignment.iter().map(format_rational).collect();
            println!("  optimal {} at ({})\n", format_rational(&value), xs.join(", "));
        }
        other => println!("  {other:?}\n"),
    }
}

fn main() {
    // a diet-style problem with fractional data
    let mut lp = LinearProgram::maximize(2, [(0, r(3, 1)), (1, r(2, 1))]);
    lp.add_terms([(0, r(1, 1)), (1, r(1, 1))], Relation::Le, r(4, 1));
    lp.add_terms([(0, r(1, 1)), (1, r(3, 1))], Relation::Le, r(6, 1));
    lp.add_terms([(0, r(1, 2)), (1, r(-1, 3))], Relation::Le, r(1, 1));
    report("bounded", &lp);

    // a free variable and an equality
    let mut lp = LinearProgram::maximize(2, [(0, r(-1, 1)), (1, r(1, 1))]);
    lp.set_free(0);
    lp.add_terms([(0, r(1, 1)), (1, r(1, 1))], Relation::Eq, r(1, 1));
    lp.add_terms([(1, r(1, 1))], Relation::Le, r(5, 2));
    report("free variable", &lp);

    let mut lp = LinearProgram::maximize(1, [(0, r(1, 1))]);
    lp.add_terms([(0, r(1, 1))], Relation::Ge, r(2, 1));
    report("unbounded", &lp);

    let mut lp = LinearProgram::maximize(1, [(0, r(1, 1))]);
    lp.add_terms([(0, r(1, 1))], Relation::Le, r(-1, 1));
    report("infeasible", &lp);
}
