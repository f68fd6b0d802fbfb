//! Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
//! tolerance and a wall-clock limit. Runs without the libtest harness so the
//! lines always show up in `cargo test` output.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use inattentive::election::{
    attention_set_pairs, downsian_matrix, enumerate_equilibria, scan_frontier, MatrixTriple,
};
use inattentive::extensions::{dissemination_filter, issue_grid, multi_issue_reduce, with_commitment};
use inattentive::model::{CandidateSpec, PolicyAxis, Scenario, Side, UtilitySpec, VoterFamily};
use inattentive::news::{
    attention_set_noisy, enumerate_equilibria_noisy, median_extreme_value, noisy_belief,
    MarkovKernel, NewsTechnology,
};
use inattentive::presets::{self, PARTISAN_TAU};
use inattentive::ri::{attention_threshold_delta, solve_attention, two_policy_threshold, BeliefOverProfiles};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn close(label: &str, got: f64, want: f64, tol: f64) -> Result<(), String> {
    ensure((got - want).abs() <= tol, || {
        format!("{label}: got {got:.5}, expected {want} ± {tol}")
    })
}

fn pair_set(eqs: &[inattentive::EquilibriumRecord]) -> BTreeSet<Vec<u64>> {
    eqs.iter()
        .map(|r| r.policies.iter().map(|p| p.to_bits()).collect())
        .collect()
}

// ---------------------------------------------------------------- 1

const TABLE_TOL: f64 = 0.002;

fn table_solution(mu: f64, t: f64) -> Result<inattentive::AttentionSolution, String> {
    let s = presets::table1(mu).map_err(err)?;
    let a = presets::table1_assignment(&s).map_err(err)?;
    let triple = a.triple(&s).map_err(err)?;
    let belief = triple.belief(&s, t).map_err(err)?;
    solve_attention(&belief, mu).map_err(err)
}

fn criterion_table1() -> Outcome {
    let rows: [(f64, f64, [f64; 4]); 3] = [
        (-0.2, 0.0, [0.0; 4]),
        (-0.05, 0.315, [0.296, 0.006, 0.930, 0.148]),
        (0.0, 0.312, [0.500, 0.012, 0.987, 0.500]),
    ];
    for (t, info, m) in rows {
        let sol = table_solution(0.09, t)?;
        close(&format!("I at t={t}"), sol.info, info, TABLE_TOL)?;
        for (k, (&got, &want)) in sol.m.iter().zip(&m).enumerate() {
            close(&format!("m[{k}] at t={t}"), got, want, TABLE_TOL)?;
        }
    }
    ensure(!table_solution(0.09, -0.2)?.attentive(), || "t=-.2 should be a corner".into())?;
    Ok("3 rows x 5 cells within ±.002".into())
}

// ---------------------------------------------------------------- 2

fn criterion_table2() -> Outcome {
    // The last cell of the μ = .20 row is listed as .148, which contradicts
    // the listed mean .283; the mean implies 4(.283) - (.263 + .048 + .627).
    let implied = 4.0 * 0.283 - (0.263 + 0.048 + 0.627);
    let rows: [(f64, f64, [f64; 4]); 3] = [
        (0.01, 0.261, [0.046, 0.000, 1.0, 0.000]),
        (0.10, 0.344, [0.300, 0.009, 0.905, 0.162]),
        (0.20, 0.283, [0.263, 0.048, 0.627, implied]),
    ];
    let mut note = String::new();
    for (mu, mbar, m) in rows {
        let sol = table_solution(mu, -0.05)?;
        close(&format!("mbar at mu={mu}"), sol.mbar, mbar, TABLE_TOL)?;
        for (k, (&got, &want)) in sol.m.iter().zip(&m).enumerate() {
            // The implied cell carries the rounding of four listed entries.
            let tol = if mu == 0.20 && k == 3 { 0.004 } else { TABLE_TOL };
            close(&format!("m[{k}] at mu={mu}"), got, want, tol)?;
        }
        if mu == 0.20 {
            ensure((sol.m[3] - 0.148).abs() > TABLE_TOL, || {
                "listed .148 unexpectedly consistent".into()
            })?;
            note = format!("; (-.4,.4) cell at mu=.2 is {:.4}, implied by the mean", sol.m[3]);
        }
    }
    Ok(format!("3 rows within ±.002{note}"))
}

// ---------------------------------------------------------------- 3

fn criterion_figure2() -> Outcome {
    let expected: BTreeSet<Vec<u64>> = [[0.01f64, 0.2], [0.01, 0.4]]
        .iter()
        .map(|p| p.iter().map(|x| x.to_bits()).collect())
        .collect();
    for mu in [0.1, 1.0, 10.0, 100.0] {
        let s = presets::figure2(mu).map_err(err)?;
        let eqs = enumerate_equilibria(&s).map_err(err)?;
        let got = pair_set(&eqs);
        ensure(got == expected, || {
            let list: Vec<_> = eqs.iter().map(|r| r.policies.clone()).collect();
            format!("mu={mu}: equilibria {list:?}")
        })?;
        ensure(eqs.iter().all(|r| r.min_gap >= -1e-9), || format!("mu={mu}: negative gap"))?;
    }
    Ok("{(.01,.2),(.01,.4)} at mu in {.1,1,10,100}, loser sign -1".into())
}

// ---------------------------------------------------------------- 4

fn criterion_frontier() -> Outcome {
    let (mu, tau, step) = (10.0, PARTISAN_TAU, 0.005);
    let s = presets::figure2(mu).map_err(err)?;
    let grid: Vec<f64> = (1..=200).map(|k| k as f64 * step).collect();
    let bound = two_policy_threshold(mu, tau).map_err(err)?;
    let frontier = scan_frontier(&s, &grid, -tau, mu).map_err(err)?;
    let mut hits = 0;
    for p in &frontier {
        if let Some(a2) = p.a2 {
            hits += 1;
            ensure(a2 - p.a1 >= bound - 1e-12, || {
                format!("a1={}: frontier gap {} below bound {bound}", p.a1, a2 - p.a1)
            })?;
        } else {
            // No member on the grid: the bound must leave no room either.
            ensure(p.a1 + bound > 1.0 - step - 1e-9, || format!("a1={}: missing frontier", p.a1))?;
        }
    }
    ensure(hits > 0, || "frontier is empty".into())?;
    Ok(format!("{hits} frontier points dominate bound {bound:.4}"))
}

// ---------------------------------------------------------------- 5

fn criterion_figure3() -> Outcome {
    let xis = [0.57, 0.61, 0.65];
    let mut sets: Vec<BTreeSet<(u64, u64)>> = Vec::new();
    let mut eq_pairs: Vec<Vec<(f64, f64)>> = Vec::new();
    for &xi in &xis {
        let s = presets::figure3(xi).map_err(err)?;
        let f = s.news.as_ref().unwrap();
        let a = attention_set_noisy(f, &s, s.beta.values(), -PARTISAN_TAU, s.mu).map_err(err)?;
        sets.push(a.iter().map(|(x, y)| (x.to_bits(), y.to_bits())).collect());
        let eqs = enumerate_equilibria_noisy(&s).map_err(err)?;
        ensure(!eqs.is_empty(), || format!("xi={xi}: no equilibrium"))?;
        ensure(eqs.iter().all(|r| r.min_gap > 0.0), || format!("xi={xi}: equilibrium not strict"))?;
        eq_pairs.push(eqs.iter().map(|r| (r.policies[0], r.policies[1])).collect());
    }
    for k in 1..sets.len() {
        ensure(sets[k].is_subset(&sets[k - 1]) && sets[k].len() < sets[k - 1].len(), || {
            format!("attention set at xi={} not strictly inside xi={}", xis[k], xis[k - 1])
        })?;
    }
    let dist = |(a1, a2): (f64, f64)| (a1 - 0.25).abs() + (a2 - 0.75).abs();
    for k in 1..eq_pairs.len() {
        for &prev in &eq_pairs[k - 1] {
            for &cur in &eq_pairs[k] {
                ensure(cur.0 >= prev.0 && cur.1 >= prev.1 && dist(cur) < dist(prev), || {
                    format!("xi={}: {cur:?} does not move toward (1/4, 3/4) from {prev:?}", xis[k])
                })?;
            }
        }
    }
    let sizes: Vec<usize> = sets.iter().map(|s| s.len()).collect();
    Ok(format!("attention set sizes {sizes:?}, equilibria {eq_pairs:?}"))
}

// ---------------------------------------------------------------- 6

fn oracle_objective(p: &[f64; 4], v: &[f64; 4], mu: f64, m: &[f64; 4]) -> f64 {
    fn hb(x: f64) -> f64 {
        let mut h = 0.0;
        if x > 0.0 {
            h -= x * x.ln();
        }
        if x < 1.0 {
            h -= (1.0 - x) * (1.0 - x).ln();
        }
        h
    }
    let mut value = 0.0;
    let mut mbar = 0.0;
    let mut cond = 0.0;
    for k in 0..4 {
        value += p[k] * m[k] * v[k];
        mbar += p[k] * m[k];
        cond += p[k] * hb(m[k]);
    }
    value - mu * (hb(mbar.clamp(0.0, 1.0)) - cond)
}

fn to_prob(x: f64) -> f64 {
    if x == f64::INFINITY {
        1.0
    } else if x == f64::NEG_INFINITY {
        0.0
    } else {
        1.0 / (1.0 + (-x).exp())
    }
}

/// Exhaustive search over a grid in log-odds coordinates, where the
/// objective's curvature stays bounded; the exact corners 0 and 1 are always
/// on the grid. Level one spans [-25, 25] with 41 points per coordinate, then
/// 21-point boxes follow the incumbent: a box is recentred at the same size
/// while the incumbent sits on its edge and halved otherwise. The objective
/// is concave in the choice probabilities, so the search cannot get trapped.
fn oracle_max(p: &[f64; 4], v: &[f64; 4], mu: f64) -> f64 {
    let mut center = [0.0f64; 4];
    let mut half_width = 25.0;
    let mut points = 41usize;
    let mut best = f64::NEG_INFINITY;
    let mut rounds = 0;
    while half_width > 1e-6 && rounds < 400 {
        rounds += 1;
        let step = 2.0 * half_width / (points - 1) as f64;
        let axes: Vec<Vec<f64>> = (0..4)
            .map(|k| {
                let mut axis = vec![f64::NEG_INFINITY, f64::INFINITY];
                if center[k].is_finite() {
                    axis.extend((0..points).map(|i| center[k] - half_width + i as f64 * step));
                }
                axis
            })
            .collect();
        let probs: Vec<Vec<f64>> = axes.iter().map(|a| a.iter().map(|&x| to_prob(x)).collect()).collect();
        let mut arg = center;
        let mut moved = false;
        let mut on_edge = false;
        for (i0, &m0) in probs[0].iter().enumerate() {
            for (i1, &m1) in probs[1].iter().enumerate() {
                for (i2, &m2) in probs[2].iter().enumerate() {
                    for (i3, &m3) in probs[3].iter().enumerate() {
                        let o = oracle_objective(p, v, mu, &[m0, m1, m2, m3]);
                        if o > best {
                            best = o;
                            let idx = [i0, i1, i2, i3];
                            arg = std::array::from_fn(|k| axes[k][idx[k]]);
                            moved = true;
                            on_edge = idx.iter().any(|&i| i == 2 || i == points + 1);
                        }
                    }
                }
            }
        }
        center = arg;
        if points == 41 || (moved && on_edge) {
            half_width = 10.0 * step;
        } else {
            half_width *= 0.5;
        }
        points = 21;
    }
    best
}

fn criterion_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let instances = 24;
    let mut worst = 0.0f64;
    let mut interior = 0;
    for n in 0..instances {
        let raw: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.05..1.0));
        let total: f64 = raw.iter().sum();
        let p = raw.map(|x| x / total);
        let v: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-1.0..1.0));
        let mu = rng.gen_range(0.05..1.0);
        let belief = BeliefOverProfiles::new(p.to_vec(), v.to_vec()).map_err(err)?;
        let sol = solve_attention(&belief, mu).map_err(err)?;
        interior += sol.attentive() as usize;
        let solver = sol.objective(&belief, mu);
        let oracle = oracle_max(&p, &v, mu);
        let gap = (solver - oracle).abs();
        worst = worst.max(gap);
        ensure(gap <= 1e-4, || format!("instance {n}: solver {solver}, oracle {oracle}"))?;
        ensure(solver >= oracle - 1e-9, || format!("instance {n}: oracle beats solver"))?;
    }
    Ok(format!("{instances} instances ({interior} interior), max |gap| {worst:.2e}"))
}

// ---------------------------------------------------------------- 7

fn news_scenario(grid: &[f64], mu: f64) -> Result<Scenario<f64>, String> {
    let beta = PolicyAxis::new(Side::Beta, grid.to_vec()).map_err(err)?;
    Scenario::symmetric(
        "garbling",
        beta,
        UtilitySpec::voter_only(VoterFamily::AbsoluteLoss),
        CandidateSpec::uniform(&[0.3, 0.8]).map_err(err)?,
        presets::three_group_electorate(PARTISAN_TAU).map_err(err)?,
        mu,
    )
    .map_err(err)
}

/// Exponential-family rows `f(ω_k | a) ∝ exp(θ a s_k + c_k)`: strictly
/// log-supermodular for increasing `s` and `θ > 0`.
fn random_lsm(rng: &mut ChaCha8Rng, grid: &[f64], k: usize) -> Result<NewsTechnology<f64>, String> {
    let theta = rng.gen_range(0.5..6.0);
    let mut s: Vec<f64> = (0..k).map(|_| rng.gen_range(0.0..1.0)).collect();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    for i in 1..k {
        if s[i] <= s[i - 1] + 1e-3 {
            s[i] = s[i - 1] + 1e-3 + rng.gen_range(0.0..0.1);
        }
    }
    let c: Vec<f64> = (0..k).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let rows = grid
        .iter()
        .map(|&a| {
            let w: Vec<f64> = (0..k).map(|i| (theta * a * s[i] + c[i]).exp()).collect();
            let z: f64 = w.iter().sum();
            w.into_iter().map(|x| x / z).collect()
        })
        .collect();
    let signals = (1..=k).map(|i| i as f64 / (k + 1) as f64).collect();
    NewsTechnology::from_rows(grid.to_vec(), signals, rows).map_err(err)
}

fn random_kernel(rng: &mut ChaCha8Rng, k: usize) -> MarkovKernel<f64> {
    MarkovKernel::Factorized(
        (0..k)
            .map(|_| {
                let w: Vec<f64> = (0..k).map(|_| rng.gen_range(0.01..1.0)).collect();
                let z: f64 = w.iter().sum();
                w.into_iter().map(|x| x / z).collect()
            })
            .collect(),
    )
}

fn criterion_garbling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let grid: Vec<f64> = (1..=8).map(|i| i as f64 / 8.0).collect();
    let pairs = 60;
    let mut nested_checks = 0;
    for n in 0..pairs {
        let k = rng.gen_range(2..=4);
        let mu = 10f64.powf(rng.gen_range(-2.5..0.0));
        let s = news_scenario(&grid, mu)?;
        let f = random_lsm(&mut rng, &grid, k)?;
        let g = f.garble(&random_kernel(&mut rng, k)).map_err(err)?;

        let size = rng.gen_range(2..=4);
        let mut idx: Vec<usize> = (0..grid.len()).collect();
        for i in 0..size {
            let j = rng.gen_range(i..grid.len());
            idx.swap(i, j);
        }
        let mut a: Vec<f64> = idx[..size].iter().map(|&i| grid[i]).collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let q: Vec<f64> = {
            let w: Vec<f64> = (0..size).map(|_| rng.gen_range(0.1..1.0)).collect();
            let z: f64 = w.iter().sum();
            w.into_iter().map(|x| x / z).collect()
        };
        let triple = MatrixTriple::from_marginal(a, &q).map_err(err)?;
        let t = -rng.gen_range(0.0..0.05);

        let prior = triple.belief(&s, t).map_err(err)?.mean_value();
        let before = noisy_belief(&f, &s, &triple, t).map_err(err)?;
        let after = noisy_belief(&g, &s, &triple, t).map_err(err)?;
        let (m0, m1) = (before.belief.mean_value(), after.belief.mean_value());
        ensure((m0 - m1).abs() <= 1e-12 && (m0 - prior).abs() <= 1e-12, || {
            format!("pair {n}: means {m0} vs {m1} (prior {prior})")
        })?;
        for scale in [1.0, 1.0 / mu] {
            let e0 = before.belief.log_expected_exp(scale).exp();
            let e1 = after.belief.log_expected_exp(scale).exp();
            ensure(e1 <= e0 + 1e-12, || format!("pair {n}: E[exp] rose from {e0} to {e1}"))?;
        }
        let x0 = median_extreme_value(&f, &s, &triple).map_err(err)?;
        let x1 = median_extreme_value(&g, &s, &triple).map_err(err)?;
        ensure(x1 <= x0 + 1e-12, || format!("pair {n}: extreme value rose from {x0} to {x1}"))?;

        let set0: BTreeSet<(u64, u64)> = attention_set_noisy(&f, &s, &grid, t, mu)
            .map_err(err)?
            .iter()
            .map(|(x, y)| (x.to_bits(), y.to_bits()))
            .collect();
        let set1: BTreeSet<(u64, u64)> = attention_set_noisy(&g, &s, &grid, t, mu)
            .map_err(err)?
            .iter()
            .map(|(x, y)| (x.to_bits(), y.to_bits()))
            .collect();
        ensure(set1.is_subset(&set0), || format!("pair {n}: garbled attention set not nested"))?;
        nested_checks += set0.len();
    }
    Ok(format!("{pairs} (f, rho) pairs, {nested_checks} attention-set members checked"))
}

// ---------------------------------------------------------------- 8

fn criterion_monotonicity() -> Outcome {
    // Choice probabilities rise with the voter's type.
    let s = presets::table1(0.09).map_err(err)?;
    let triple = presets::table1_assignment(&s).map_err(err)?.triple(&s).map_err(err)?;
    let mut prev: Option<inattentive::AttentionSolution> = None;
    for t in s.electorate.types() {
        let sol = solve_attention(&triple.belief(&s, t).map_err(err)?, s.mu).map_err(err)?;
        if let Some(p) = &prev {
            ensure(sol.mbar >= p.mbar, || format!("mbar falls at t={t}"))?;
            if p.attentive() && sol.attentive() {
                ensure(sol.mbar > p.mbar, || format!("mbar not strictly higher at t={t}"))?;
            }
        }
        prev = Some(sol);
    }

    // Threshold gap grows with the attention cost.
    let kappa = 2.0;
    let lo = kappa / (2.0 * std::f64::consts::LN_2);
    let mus: Vec<f64> = (0..=200).map(|k| lo * (100.0 / lo).powf(k as f64 / 200.0)).collect();
    for t in [PARTISAN_TAU, 0.05, 0.2] {
        let d: Vec<f64> = mus
            .iter()
            .map(|&mu| attention_threshold_delta(mu, t, kappa, 0.5))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        ensure(d.windows(2).all(|w| w[1] > w[0]), || format!("delta not increasing at t={t}"))?;
    }

    // Attention sets shrink as the cost rises.
    let f2 = presets::figure2(1.0).map_err(err)?;
    let grid: Vec<f64> = (1..=40).map(|k| k as f64 * 0.025).collect();
    let mut prev_set: Option<BTreeSet<(u64, u64)>> = None;
    for mu in [0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0] {
        let set: BTreeSet<(u64, u64)> = attention_set_pairs(&f2, &grid, -0.05, mu)
            .map_err(err)?
            .iter()
            .map(|(x, y)| (x.to_bits(), y.to_bits()))
            .collect();
        if let Some(p) = &prev_set {
            ensure(set.is_subset(p), || format!("attention set grows at mu={mu}"))?;
        }
        prev_set = Some(set);
    }

    // The median voter always pays attention to non-degenerate symmetric matrices.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for n in 0..50 {
        let size = rng.gen_range(2..=5);
        let mut a: Vec<f64> = (0..size).map(|_| rng.gen_range(0.01..1.0)).collect();
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        a.dedup_by(|x, y| (*x - *y).abs() < 1e-3);
        if a.len() < 2 {
            a = vec![0.2, 0.7];
        }
        let n_a = a.len();
        let raw: Vec<Vec<f64>> = (0..n_a).map(|_| (0..n_a).map(|_| rng.gen_range(0.05..1.0)).collect()).collect();
        let mut sigma = vec![vec![0.0; n_a]; n_a];
        let mut total = 0.0;
        for i in 0..n_a {
            for j in 0..n_a {
                sigma[i][j] = raw[i][j] + raw[j][i];
                total += sigma[i][j];
            }
        }
        for row in sigma.iter_mut() {
            for x in row.iter_mut() {
                *x /= total;
            }
        }
        let triple = MatrixTriple::new(a, sigma, downsian_matrix(n_a)).map_err(err)?;
        let mu = 10f64.powf(rng.gen_range(-2.0..1.0));
        let log_e = triple.belief(&s, 0.0).map_err(err)?.log_expected_exp(1.0 / mu);
        ensure(log_e > 0.0, || format!("matrix {n}: median E[exp(v/mu)] not above 1 at mu={mu}"))?;
    }
    Ok("type order, delta(mu), nested sets, 50 median checks".into())
}

// ---------------------------------------------------------------- 9

fn criterion_reductions() -> Outcome {
    for mu in [0.1, 1.0, 10.0] {
        let base = presets::figure2(mu).map_err(err)?;
        let plain = enumerate_equilibria(&base).map_err(err)?;

        // Revealing news: same equilibria, same attention, bit for bit.
        let revealing = NewsTechnology::revealing(base.beta.values().to_vec()).map_err(err)?;
        let noisy_s = base.with_news(Some(revealing)).map_err(err)?;
        let noisy = enumerate_equilibria_noisy(&noisy_s).map_err(err)?;
        ensure(noisy.len() == plain.len(), || format!("mu={mu}: equilibrium counts differ"))?;
        for (x, y) in plain.iter().zip(&noisy) {
            ensure(x.assignment == y.assignment && x.triple == y.triple, || {
                format!("mu={mu}: matrices differ")
            })?;
            ensure(x.attention == y.attention, || format!("mu={mu}: attention differs"))?;
            ensure(x.rationalized_w == y.rationalized_w, || format!("mu={mu}: winning matrices differ"))?;
            ensure(y.news_win.as_ref() == Some(&x.triple.w), || format!("mu={mu}: news win differs"))?;
            ensure(f64::to_bits(x.min_gap) == f64::to_bits(y.min_gap), || format!("mu={mu}: gaps differ"))?;
        }

        // Full commitment is the identity transform.
        let same = with_commitment(&base, 1.0).map_err(err)?;
        ensure(same == base, || format!("mu={mu}: eta = 1 changed the scenario"))?;
        ensure(enumerate_equilibria(&same).map_err(err)? == plain, || {
            format!("mu={mu}: eta = 1 changed the equilibria")
        })?;

        // A vanishing dissemination cost keeps every attentive equilibrium.
        let attentive: Vec<_> = plain.iter().filter(|r| r.attention.iter().any(|g| g.attentive)).cloned().collect();
        ensure(!attentive.is_empty(), || format!("mu={mu}: nothing attentive"))?;
        let kept = dissemination_filter(&attentive, f64::MIN_POSITIVE);
        ensure(kept == attentive, || format!("mu={mu}: vanishing cost filtered something"))?;
    }
    Ok("revealing news, eta = 1 and C -> 0+ reproduce the baseline at mu in {.1,1,10}".into())
}

// ---------------------------------------------------------------- 10

fn criterion_multi_issue() -> Outcome {
    let spec = presets::multi_issue::<f64>().map_err(err)?;
    let grid: Vec<f64> = issue_grid(200);
    let types: Vec<f64> = (-8..=8).map(|k| k as f64 * 0.1).collect();
    let red = multi_issue_reduce(&spec.utility2, &spec.frontier, &grid, &types).map_err(err)?;
    let audit = &red.audit;
    ensure(audit.tangency_decreasing, || "tangency not strictly decreasing".into())?;
    ensure(audit.single_peaked, || format!("{:?}", audit.first_failure))?;
    ensure(audit.concave, || format!("{:?}", audit.first_failure))?;
    ensure(audit.passed(), || format!("{:?}", audit.first_failure))?;
    let (t0, a0) = audit.tangency[0];
    let (t1, a1) = audit.tangency[audit.tangency.len() - 1];
    Ok(format!("a°({t0:.1}) = {a0:.4} down to a°({t1:.1}) = {a1:.4} on a 200-point grid"))
}

// ----------------------------------------------------------------

fn main() {
    type Criterion = (&'static str, u64, fn() -> Outcome);
    let suite: [Criterion; 10] = [
        ("table 1 attention levels", 1, criterion_table1),
        ("table 2 choice probabilities", 1, criterion_table2),
        ("figure 2 equilibrium set", 5, criterion_figure2),
        ("attention frontier vs closed form", 10, criterion_frontier),
        ("figure 3 news slant suite", 60, criterion_figure3),
        ("solver vs brute-force oracle", 30, criterion_oracle),
        ("garbling properties", 60, criterion_garbling),
        ("monotonicity suite", 60, criterion_monotonicity),
        ("reductions", 10, criterion_reductions),
        ("multi-issue audit", 10, criterion_multi_issue),
    ];
    let mut failures = 0;
    for (n, (name, limit, run)) in suite.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let (status, detail) = match outcome {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("too slow; {d}")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failures += 1;
        }
        println!(
            "acceptance {:>2} {status} {name} [{:.3}s / {}s] {detail}",
            n + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failures > 0 {
        println!("acceptance: {failures} of {} criteria failed", suite.len());
        std::process::exit(1);
    }
    println!("acceptance: all {} criteria passed", suite.len());
}
