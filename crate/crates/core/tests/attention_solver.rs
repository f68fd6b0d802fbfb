use proptest::prelude::*;

use inattentive::ri::{
    attention_membership, attention_objective, binary_entropy, gamma, gamma_inverse,
    mutual_information, solve_attention, BeliefOverProfiles, Regime,
};

fn belief_strategy() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (2usize..=6).prop_flat_map(|n| {
        (
            prop::collection::vec(0.05f64..1.0, n),
            prop::collection::vec(-1.0f64..1.0, n),
        )
    })
}

fn normalise(w: &[f64]) -> Vec<f64> {
    let z: f64 = w.iter().sum();
    w.iter().map(|x| x / z).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn solution_beats_random_strategies(
        (w, v) in belief_strategy(),
        mu in 0.02f64..2.0,
        trial in prop::collection::vec(0.0f64..1.0, 6),
    ) {
        let belief = BeliefOverProfiles::new(normalise(&w), v.clone()).unwrap();
        let sol = solve_attention(&belief, mu).unwrap();
        let best = sol.objective(&belief, mu);
        let other = attention_objective(&belief, &trial[..v.len()], mu);
        prop_assert!(best >= other - 1e-12, "{best} < {other}");
        // Deterministic votes are also feasible strategies.
        for c in [0.0, 1.0] {
            let flat = vec![c; v.len()];
            prop_assert!(best >= attention_objective(&belief, &flat, mu) - 1e-12);
        }
    }

    #[test]
    fn interior_solutions_have_logit_form((w, v) in belief_strategy(), mu in 0.02f64..2.0) {
        let belief = BeliefOverProfiles::new(normalise(&w), v.clone()).unwrap();
        let sol = solve_attention(&belief, mu).unwrap();
        if sol.regime == Regime::Interior {
            let mbar: f64 = sol.m.iter().zip(belief.probs()).map(|(m, p)| m * p).sum();
            prop_assert!((mbar - sol.mbar).abs() < 1e-9);
            for (m, &vk) in sol.m.iter().zip(&v) {
                let logit = sol.lambda * (vk / mu).exp();
                prop_assert!((m - logit / (logit + 1.0)).abs() < 1e-9);
            }
            prop_assert!(sol.info >= 0.0 && sol.info <= binary_entropy(sol.mbar) + 1e-15);
        } else {
            prop_assert_eq!(sol.info, 0.0);
        }
    }

    #[test]
    fn attention_matches_membership((w, v) in belief_strategy(), mu in 0.02f64..2.0) {
        let belief = BeliefOverProfiles::new(normalise(&w), v.clone()).unwrap();
        let sol = solve_attention(&belief, mu).unwrap();
        let up = attention_membership(&belief, mu).unwrap();
        let flipped = BeliefOverProfiles::new(normalise(&w), v.iter().map(|x| -x).collect()).unwrap();
        let down = attention_membership(&flipped, mu).unwrap();
        prop_assert_eq!(sol.attentive(), up && down);
    }

    #[test]
    fn choice_rises_with_the_type(
        w in prop::collection::vec(0.05f64..1.0, 4),
        mu in 0.02f64..1.0,
        t0 in -0.5f64..0.5,
        dt in 0.001f64..0.3,
    ) {
        // Absolute-loss values over the four two-policy profiles.
        let profiles = [(-0.1, 0.1), (-0.1, 0.6), (-0.6, 0.1), (-0.6, 0.6)];
        let vals = |t: f64| -> Vec<f64> {
            profiles.iter().map(|&(a, b): &(f64, f64)| (t - a).abs() - (t - b).abs()).collect()
        };
        let p = normalise(&w);
        let lo = solve_attention(&BeliefOverProfiles::new(p.clone(), vals(t0)).unwrap(), mu).unwrap();
        let hi = solve_attention(&BeliefOverProfiles::new(p, vals(t0 + dt)).unwrap(), mu).unwrap();
        prop_assert!(hi.mbar >= lo.mbar - 1e-12);
        for (a, b) in lo.m.iter().zip(&hi.m) {
            prop_assert!(b >= &(a - 1e-9));
        }
    }

    #[test]
    fn gamma_inverse_roundtrip(x in 0.0f64..30.0) {
        let y = gamma(x);
        prop_assert!((gamma_inverse(y).unwrap() - x).abs() < 1e-6 * (1.0 + x));
    }

    #[test]
    fn information_is_bounded(
        m in prop::collection::vec(0.0f64..1.0, 5),
        w in prop::collection::vec(0.05f64..1.0, 5),
    ) {
        let p = normalise(&w);
        let i = mutual_information(&m, &p);
        let mbar: f64 = m.iter().zip(&p).map(|(a, b)| a * b).sum();
        prop_assert!(i >= 0.0 && i <= binary_entropy(mbar) + 1e-15);
    }
}

#[test]
fn constant_values_give_no_information() {
    let b = BeliefOverProfiles::uniform(vec![0.3; 4]).unwrap();
    let sol = solve_attention(&b, 0.5).unwrap();
    assert_eq!(sol.regime, Regime::CornerOne);
    assert_eq!(sol.info, 0.0);
}

#[test]
fn rejects_bad_cost_and_beliefs() {
    let b = BeliefOverProfiles::uniform(vec![0.1, -0.1]).unwrap();
    assert!(solve_attention(&b, 0.0).is_err());
    assert!(solve_attention(&b, f64::NAN).is_err());
    assert!(BeliefOverProfiles::new(vec![0.5, 0.6], vec![0.0, 0.0]).is_err());
    assert!(BeliefOverProfiles::new(vec![1.0], vec![f64::INFINITY]).is_err());
}
