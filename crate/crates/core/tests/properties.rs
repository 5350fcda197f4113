use bimatrix::concepts::{
    correlated_constraints_hold, correlated_optimize, is_nash_equilibrium, iterated_strict_dominance, maximin,
    nash_equilibria, payoff_weights, pure_commitment, stackelberg_multi_lp, stackelberg_single_lp,
};
use bimatrix::discretization::{grid_count, grid_points, grid_stackelberg, GridSpec, TieBreak};
use bimatrix::lp::{solve_lp, LinearProgram, LpOutcome, Relation};
use bimatrix::{constant_sum, expected_utility, format_rational, parse_game, parse_rational, Game, MixedStrategy, Player, Rational};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn game_strategy(max_dim: usize) -> impl Strategy<Value = Game> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec((-6i64..=6, -6i64..=6), n), m)
            .prop_map(|cells| Game::from_integers("random", &cells).unwrap())
    })
}

fn zero_sum_strategy(max_dim: usize) -> impl Strategy<Value = Game> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(m, n)| {
        prop::collection::vec(prop::collection::vec(-6i64..=6, n), m).prop_map(|rows| {
            let cells: Vec<Vec<(i64, i64)>> = rows.iter().map(|r| r.iter().map(|&a| (a, -a)).collect()).collect();
            Game::from_integers("zero-sum", &cells).unwrap()
        })
    })
}

/// A probability vector of length `len` from nonnegative integer weights.
fn distribution(weights: &[u32]) -> Vec<Rational> {
    let total: u32 = weights.iter().sum();
    if total == 0 {
        let mut v = vec![Rational::zero(); weights.len()];
        v[0] = Rational::one();
        return v;
    }
    weights.iter().map(|&w| Rational::new(w.into(), total.into())).collect()
}

fn strategy_for(player: Player, len: usize) -> impl Strategy<Value = MixedStrategy> {
    prop::collection::vec(0u32..5, len).prop_map(move |w| MixedStrategy::new(player, distribution(&w)).unwrap())
}

fn game_with_strategies(max_dim: usize) -> impl Strategy<Value = (Game, MixedStrategy, MixedStrategy, MixedStrategy)> {
    game_strategy(max_dim).prop_flat_map(|g| {
        let (m, n) = (g.num_rows(), g.num_cols());
        (
            Just(g),
            strategy_for(Player::One, m),
            strategy_for(Player::One, m),
            strategy_for(Player::Two, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn json_round_trip(g in game_strategy(4), num in -50i64..50, den in 1i64..12) {
        // put one non-integer payoff in so both numeral forms are exercised
        let mut payoffs: Vec<Vec<(Rational, Rational)>> =
            (0..g.num_rows()).map(|i| (0..g.num_cols()).map(|j| g.cell(i, j).clone()).collect()).collect();
        payoffs[0][0].1 = Rational::new(num.into(), den.into());
        let g = Game::new("round trip", g.row_labels().to_vec(), g.col_labels().to_vec(), payoffs).unwrap();
        let back = parse_game(&g.to_json_string()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn rational_format_round_trip(num in -10_000i64..10_000, den in 1i64..1000) {
        let r = Rational::new(num.into(), den.into());
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn expected_utility_is_bilinear((g, a, b, s2) in game_with_strategies(4), w in 0u32..=4) {
        let lambda = Rational::new(w.into(), 4.into());
        let mixed: Vec<Rational> = a
            .probabilities()
            .iter()
            .zip(b.probabilities())
            .map(|(x, y)| &lambda * x + (Rational::one() - &lambda) * y)
            .collect();
        let mixed = MixedStrategy::new(Player::One, mixed).unwrap();
        for player in [Player::One, Player::Two] {
            let lhs = expected_utility(&g, &mixed, &s2, player).unwrap();
            let rhs = &lambda * expected_utility(&g, &a, &s2, player).unwrap()
                + (Rational::one() - &lambda) * expected_utility(&g, &b, &s2, player).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn constant_sum_utilities_add_up(
        (g, s1, _, s2) in zero_sum_strategy(4).prop_flat_map(|g| {
            let (m, n) = (g.num_rows(), g.num_cols());
            (Just(g), strategy_for(Player::One, m), strategy_for(Player::One, m), strategy_for(Player::Two, n))
        }),
        shift in -5i64..5,
    ) {
        let cells: Vec<Vec<(i64, i64)>> = (0..g.num_rows())
            .map(|i| (0..g.num_cols()).map(|j| {
                let a = g.payoff(Player::One, i, j).to_integer().try_into().unwrap();
                (a, shift - a)
            }).collect())
            .collect();
        let shifted = Game::from_integers("shifted", &cells).unwrap();
        prop_assert_eq!(constant_sum(&shifted), Some(int(shift)));
        let total = expected_utility(&shifted, &s1, &s2, Player::One).unwrap()
            + expected_utility(&shifted, &s1, &s2, Player::Two).unwrap();
        prop_assert_eq!(total, int(shift));
    }

    #[test]
    fn lp_strong_duality(
        a in prop::collection::vec(prop::collection::vec(-4i64..=4, 3), 1..=4),
        b in prop::collection::vec(0i64..=8, 4),
        c in prop::collection::vec(-4i64..=4, 3),
    ) {
        // primal: max c.x, A x <= b, x >= 0; dual: min b.y, A^T y >= c, y >= 0
        let rows = a.len();
        let mut primal = LinearProgram::maximize(3, c.iter().enumerate().map(|(k, &v)| (k, int(v))));
        for (i, row) in a.iter().enumerate() {
            primal.add_terms(row.iter().enumerate().map(|(k, &v)| (k, int(v))), Relation::Le, int(b[i]));
        }
        let mut dual = LinearProgram::maximize(rows, (0..rows).map(|i| (i, int(-b[i]))));
        for k in 0..3 {
            dual.add_terms((0..rows).map(|i| (i, int(a[i][k]))), Relation::Ge, int(c[k]));
        }
        let p = solve_lp(&primal);
        let d = solve_lp(&dual);
        // b >= 0 keeps the origin feasible, so the primal is never infeasible
        match (&p, &d) {
            (LpOutcome::Optimal { value: pv, .. }, LpOutcome::Optimal { value: dv, .. }) => prop_assert_eq!(pv, &-dv),
            (LpOutcome::Unbounded, LpOutcome::Infeasible) => {}
            other => prop_assert!(false, "unexpected pair {:?}", other),
        }
        prop_assert_eq!(solve_lp(&primal), p);
    }

    #[test]
    fn grid_count_recurrence(m in 2u64..7, n in 1u64..30) {
        prop_assert_eq!(grid_count(m, n), grid_count(m - 1, n) + grid_count(m, n - 1));
        if m <= 4 && n <= 15 {
            prop_assert_eq!(BigUint::from(grid_points(m as usize, n).count()), grid_count(m, n));
        }
    }

    #[test]
    fn zero_sum_concepts_coincide(g in zero_sum_strategy(4)) {
        let v1 = maximin(&g, Player::One).value;
        let v2 = maximin(&g, Player::Two).value;
        prop_assert_eq!(&v1, &-&v2);
        prop_assert_eq!(&stackelberg_multi_lp(&g, Player::One).leader_value, &v1);
        for e in nash_equilibria(&g).unwrap().equilibria {
            prop_assert_eq!(&e.value1, &v1);
        }
    }

    #[test]
    fn commitment_dominates(g in game_strategy(4)) {
        for leader in [Player::One, Player::Two] {
            let st = stackelberg_multi_lp(&g, leader);
            prop_assert!(st.verify(&g).is_ok());
            prop_assert!(pure_commitment(&g, leader).value <= st.leader_value);
            prop_assert!(maximin(&g, leader).value <= st.leader_value);
            let single = stackelberg_single_lp(&g, leader);
            prop_assert_eq!(&single.value, &st.leader_value);
        }
    }

    #[test]
    fn leader_two_is_the_swapped_game(g in game_strategy(4)) {
        let direct = stackelberg_multi_lp(&g, Player::Two);
        let via_swap = stackelberg_multi_lp(&g.swapped(), Player::One);
        prop_assert_eq!(direct.leader_value, via_swap.leader_value);
        prop_assert_eq!(direct.leader_strategy.probabilities(), via_swap.leader_strategy.probabilities());
    }

    #[test]
    fn nash_equilibria_are_correlated(g in game_strategy(4)) {
        let ce = correlated_optimize(&g, &payoff_weights(&g, Player::One)).unwrap();
        prop_assert!(correlated_constraints_hold(&g, &ce.distribution));
        let found = nash_equilibria(&g).unwrap();
        prop_assert!(!found.equilibria.is_empty());
        for e in &found.equilibria {
            prop_assert!(is_nash_equilibrium(&g, &e.sigma1, &e.sigma2));
            prop_assert!(e.value1 <= ce.value);
        }
    }

    #[test]
    fn dominance_keeps_every_equilibrium(g in game_strategy(4)) {
        let reduced = iterated_strict_dominance(&g);
        for e in nash_equilibria(&g).unwrap().equilibria {
            prop_assert!(e.sigma1.support().iter().all(|i| reduced.rows.contains(i)));
            prop_assert!(e.sigma2.support().iter().all(|j| reduced.cols.contains(j)));
        }
    }

    #[test]
    fn grid_refinement_is_monotone(g in game_strategy(3), n in 1u64..6, k in 2u64..4) {
        let exact = stackelberg_multi_lp(&g, Player::One).leader_value;
        let at = |res: u64, tie: TieBreak| grid_stackelberg(&g, Player::One, GridSpec::new(res, tie).unwrap()).unwrap().value;
        let coarse = at(n, TieBreak::LeaderFavorable);
        let fine = at(n * k, TieBreak::LeaderFavorable);
        prop_assert!(coarse <= fine);
        prop_assert!(fine <= exact);
        prop_assert!(at(n, TieBreak::Adversarial) <= coarse);
    }
}
