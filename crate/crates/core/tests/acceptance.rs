//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use spin_weights::bijection::{f_to_lambda, lambda_to_f, verify_all};
use spin_weights::cyclotomic::{
    apply_sigma, gauss_sqrt, imag_unit, root_of_unity, CycMatrix, CycNumber,
};
use spin_weights::humphreys::{
    combine, delta_from_two_factor, two_factor_matrix, LocalCharDescriptor,
};
use spin_weights::local_reps::{
    brute_force_class_count, delta_alpha_plus, even_split_traces, expected_class_count,
    legal_alphas, sigma_equivalence, verify_action_relations, verify_s_relations,
    verify_t_relations, PresentationParams,
};
use spin_weights::partitions::{
    assemble_from_quotient, bar_cores_of, enumerate_bar_partitions, enumerate_lambda_kappa,
    enumerate_partitions, p_adic_split, p_bar_core, p_core_tower, p_quotient,
};
use spin_weights::signs::{
    eta_level, legendre, m_lambda, mu_lambda, mu_lambda_via_core, mu_psi, n_lambda, sigma_sqrt_sign,
};
use spin_weights::weights::{c_d_count, c_d_slots, enumerate_c_sequences};
use spin_weights::{Associatedness, OddPrime, Sign, SpinContext};

type Outcome = Result<String, String>;

const PRIMES: [u64; 3] = [3, 5, 7];
const ETAS: [Sign; 2] = [Sign::Plus, Sign::Minus];

fn contexts() -> impl Iterator<Item = SpinContext> {
    PRIMES.iter().flat_map(|&p| {
        ETAS.iter()
            .map(move |&eta| SpinContext::new(p, eta).unwrap())
    })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn main_theorem_sweep() -> Outcome {
    let mut blocks = 0;
    let mut lambdas = 0;
    for ctx in contexts() {
        let max_n = if ctx.p.get() == 3 { 20 } else { 15 };
        for n in 0..=max_n {
            let reports = verify_all(n, ctx, Some(1)).map_err(|e| e.to_string())?;
            for r in reports {
                ensure(r.passed(), || {
                    format!("{}: {}", r.block, r.failure.clone().unwrap_or_default())
                })?;
                blocks += 1;
                lambdas += r.mu_table.len();
            }
        }
    }
    Ok(format!("{blocks} blocks, {lambdas} labels"))
}

fn core_recurrence() -> Outcome {
    let mut checked = 0;
    for ctx in contexts() {
        for n in 0..=25 {
            for lambda in enumerate_bar_partitions(n) {
                if lambda.has_part_divisible_by(ctx.p) {
                    continue;
                }
                let (kappa, w) = p_bar_core(&lambda, ctx.p);
                let via_core =
                    mu_lambda_via_core(&kappa, w, None, ctx).map_err(|e| e.to_string())?;
                ensure(via_core == mu_lambda(&lambda, ctx), || {
                    format!("{lambda} at {ctx:?}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} bar partitions"))
}

fn level_products() -> Outcome {
    let mut checked = 0;
    for ctx in contexts() {
        let p = ctx.p;
        for n in 0..=20 {
            for lambda in enumerate_bar_partitions(n) {
                let split = p_adic_split(&lambda, p);
                let mut n_prod = BigInt::one();
                let mut m_prod = BigInt::one();
                let mut weighted_len = 0u64;
                for (j, level) in split.levels.iter().enumerate() {
                    let level_ctx = SpinContext {
                        p,
                        eta: eta_level(ctx, j),
                    };
                    n_prod *= n_lambda(level, level_ctx).0;
                    m_prod *= m_lambda(level, level_ctx).0;
                    weighted_len += (j * level.len()) as u64;
                }
                let s_sign = BigInt::from(Sign::parity(split.s_lambda as u64 / 2).to_i64());
                let lead = BigInt::from(Sign::parity(p.get().div_ceil(2) * weighted_len).to_i64());
                let n_val = n_lambda(&lambda, ctx);
                let m_val = m_lambda(&lambda, ctx);
                ensure(n_val.0 == &lead * &s_sign * n_prod, || {
                    format!("N of {lambda} at {ctx:?}")
                })?;
                ensure(m_val.0 == &s_sign * m_prod, || {
                    format!("M of {lambda} at {ctx:?}")
                })?;
                let (mn, nn) = (m_val.legendre(p), n_val.legendre(p));
                ensure(mn.is_ok() && mn == nn, || {
                    format!("(M/p) ≠ (N/p) for {lambda} at {ctx:?}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} bar partitions"))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn slot_counts() -> Outcome {
    for p in [3u64, 5, 7, 11] {
        let pp = OddPrime::new(p).unwrap();
        let q = p as usize;
        for d in 1..=6 {
            let slots = c_d_slots(d, pp).len();
            let closed = (q - 1) * q.pow(d as u32 - 1) / 2;
            let per_composition: usize = enumerate_c_sequences(d)
                .iter()
                .map(|c| (q - 1).pow(c.len() as u32) / 2)
                .sum();
            let by_length: usize = (1..=d)
                .map(|r| binomial(d - 1, r - 1) * (q - 1).pow(r as u32) / 2)
                .sum();
            ensure(
                slots == closed
                    && closed == per_composition
                    && closed == by_length
                    && closed == c_d_count(d, pp),
                || {
                    format!("p={p} d={d}: {slots} slots, closed form {closed}, sums {per_composition}/{by_length}")
                },
            )?;
        }
    }
    Ok("p ∈ {3,5,7,11}, d ≤ 6".into())
}

fn relation_suite() -> Outcome {
    let mut tuples = 0;
    let mut alphas = 0;
    for ctx in contexts() {
        for c_norm in 1..=2 {
            for e in 1..=4 {
                for r in 1..=2 {
                    if r > c_norm {
                        // a sequence of r positive entries has |c| ≥ r
                        continue;
                    }
                    let params =
                        PresentationParams::new(ctx, c_norm, r, e).map_err(|e| e.to_string())?;
                    let expected_mu = mu_psi(ctx, c_norm, e);
                    let tag = format!("p={} eta={} |c|={c_norm} e={e} r={r}", ctx.p, ctx.eta);
                    for alpha in legal_alphas(&params) {
                        let images = delta_alpha_plus(&params, &alpha.values(&params))
                            .map_err(|e| e.to_string())?;
                        let fail =
                            |w: spin_weights::local_reps::Witness| format!("{tag} {alpha:?}: {w}");
                        verify_t_relations(&images, &params).map_err(fail)?;
                        if e >= 2 {
                            verify_s_relations(&images, &params).map_err(fail)?;
                            verify_action_relations(&images, &params).map_err(fail)?;
                        }
                        let eq = sigma_equivalence(&images, &params).map_err(fail)?;
                        if e % 2 == 1 {
                            ensure(eq.mu == expected_mu, || {
                                format!("{tag}: μ' = {} vs {expected_mu}", eq.mu)
                            })?;
                        } else {
                            let split = even_split_traces(&images, &params)
                                .map_err(|e| format!("{tag}: {e}"))?;
                            ensure(split.mu == expected_mu, || {
                                format!("{tag}: μ'' = {} vs {expected_mu}", split.mu)
                            })?;
                        }
                        alphas += 1;
                    }
                    tuples += 1;
                }
            }
        }
    }
    Ok(format!("{tuples} parameter tuples, {alphas} characters"))
}

fn class_counts() -> Outcome {
    for (p, e) in [(3u64, 2usize), (3, 3), (5, 2), (5, 3), (7, 2)] {
        for eta in ETAS {
            let params =
                PresentationParams::new(SpinContext::new(p, eta).unwrap(), 1, 1, e).unwrap();
            let found = brute_force_class_count(&params).map_err(|e| e.to_string())?;
            let expected = expected_class_count(p as usize, e).ok_or("no closed form")?;
            ensure(found == expected, || {
                format!("p={p} e={e}: found {found:?}, expected {expected:?}")
            })?;
            let degree = found.nonlinear_degree.unwrap_or(0);
            ensure(
                found.linear + found.nonlinear * degree * degree == found.order,
                || format!("p={p} e={e}: degree sum"),
            )?;
        }
    }
    Ok("5 (p, e) pairs, both η".into())
}

fn gauss_sums() -> Outcome {
    let mut checked = 0;
    for q in [3u64, 5, 7, 11, 13] {
        let qq = OddPrime::new(q).unwrap();
        let q_star = if q % 4 == 1 { q as i64 } else { -(q as i64) };
        for p in PRIMES.into_iter().filter(|&p| p != q) {
            let pp = OddPrime::new(p).unwrap();
            let g = gauss_sqrt(q, pp).map_err(|e| e.to_string())?;
            ensure(&g * &g == CycNumber::from_integer(q_star), || {
                format!("G_{q}^2 ≠ {q_star}")
            })?;
            let sign = legendre(p as i64, qq).map_err(|e| e.to_string())?;
            let image = apply_sigma(&g, pp).map_err(|e| e.to_string())?;
            ensure(image == &CycNumber::from_sign(sign) * &g, || {
                format!("σ_{p}(G_{q}) ≠ ({p}/{q}) G_{q}")
            })?;
            let induced = sigma_sqrt_sign(q_star, pp).map_err(|e| e.to_string())?;
            ensure(induced == sign, || format!("sign on √{q_star} at p={p}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (q, p) pairs"))
}

fn random_root(rng: &mut StdRng) -> CycNumber {
    let order = [1usize, 2, 3, 4, 6, 8, 12, 24][rng.gen_range(0..8)];
    root_of_unity(order, rng.gen_range(0..order as i64))
}

fn humphreys() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let two_i = &CycNumber::from_integer(2) * &imag_unit();
    for trial in 0..500 {
        let len = rng.gen_range(1..=8);
        let factors: Vec<LocalCharDescriptor> = (0..len)
            .map(|_| LocalCharDescriptor {
                degree: rng.gen_range(1..=40),
                assoc: Associatedness::from_parity(rng.gen_bool(0.5)),
                tagged_value: Some(random_root(&mut rng)),
            })
            .collect();
        let s = factors
            .iter()
            .filter(|f| !f.assoc.is_self_associated())
            .count();
        if s > 6 {
            continue;
        }
        let h = combine(&factors).map_err(|e| e.to_string())?;
        let degree = (1u64 << (s / 2)) * factors.iter().map(|f| f.degree).product::<u64>();
        let mut value = two_i.pow((s / 2) as u32);
        for f in &factors {
            value = &value * f.tagged_value.as_ref().unwrap();
        }
        ensure(h.s == s && h.degree == degree, || {
            format!("trial {trial}: degree or s")
        })?;
        ensure(h.assoc.is_self_associated() == (s % 2 == 0), || {
            format!("trial {trial}: parity")
        })?;
        ensure(h.tagged_value == Some(value), || {
            format!("trial {trial}: value")
        })?;

        let split = rng.gen_range(1..=len);
        let left = combine(&factors[..split]).map_err(|e| e.to_string())?;
        let mut nested = vec![left.as_factor()];
        nested.extend_from_slice(&factors[split..]);
        let regrouped = combine(&nested).map_err(|e| e.to_string())?;
        ensure(
            regrouped.degree == h.degree && regrouped.tagged_value == h.tagged_value,
            || format!("trial {trial}: regrouping at {split}"),
        )?;
    }
    for trial in 0..200 {
        let (a, b) = (random_root(&mut rng), random_root(&mut rng));
        let dim = rng.gen_range(1..=2);
        let pad = |x: &CycNumber, rng: &mut StdRng| {
            let mut m = CycMatrix::scalar(1, x.clone());
            if dim == 2 {
                let other = random_root(rng);
                m = CycMatrix::from_rows(vec![
                    vec![x.clone(), CycNumber::from_integer(0)],
                    vec![CycNumber::from_integer(0), other],
                ])
                .unwrap();
            }
            m
        };
        let (p1, p2) = (pad(&a, &mut rng), pad(&b, &mut rng));
        let r =
            two_factor_matrix(&p1, &p2, (Sign::Minus, Sign::Minus)).map_err(|e| e.to_string())?;
        let delta = delta_from_two_factor(&r).map_err(|e| e.to_string())?;
        let expected = &(&two_i * &p1.trace()) * &p2.trace();
        ensure(delta == expected, || format!("pair {trial}: δ ≠ 2i·ab"))?;
    }
    Ok("500 descriptor lists, 200 value pairs".into())
}

fn round_trips() -> Outcome {
    let mut partitions = 0;
    for p in PRIMES {
        let pp = OddPrime::new(p).unwrap();
        for n in 0..=20 {
            for mu in enumerate_partitions(n) {
                let q = p_quotient(&mu, pp);
                let back = assemble_from_quotient(&q.core, &q.components, pp)
                    .map_err(|e| e.to_string())?;
                ensure(back == mu, || format!("quotient of {mu} at p={p}"))?;
                let tower = p_core_tower(&mu, pp);
                ensure(tower.assemble(pp).map_err(|e| e.to_string())? == mu, || {
                    format!("tower of {mu} at p={p}")
                })?;
                partitions += 1;
            }
        }
    }
    let mut lambdas = 0;
    for p in PRIMES {
        let pp = OddPrime::new(p).unwrap();
        let max_n = if p == 3 { 20 } else { 15 };
        for n in 0..=max_n {
            for kappa in bar_cores_of(n, pp) {
                let members = enumerate_lambda_kappa(n, &kappa, pp);
                let mut images = std::collections::BTreeSet::new();
                for lambda in &members {
                    let (core, f) = lambda_to_f(lambda, pp).map_err(|e| e.to_string())?;
                    ensure(core == kappa, || format!("core of {lambda}"))?;
                    ensure(
                        &f_to_lambda(&kappa, &f, pp).map_err(|e| e.to_string())? == lambda,
                        || format!("round trip of {lambda} at p={p}"),
                    )?;
                    images.insert(f);
                    lambdas += 1;
                }
                ensure(images.len() == members.len(), || {
                    format!("collision in block {kappa}, n={n}")
                })?;
            }
        }
    }
    Ok(format!("{partitions} partitions, {lambdas} bar partitions"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 main-theorem sweep", main_theorem_sweep),
        ("2 mu_lambda via the bar-core", core_recurrence),
        ("3 level products of N and M", level_products),
        ("4 slot counts", slot_counts),
        ("5 local relation suite", relation_suite),
        ("6 brute-force class counts", class_counts),
        ("7 Gauss sums under sigma", gauss_sums),
        ("8 Humphreys products", humphreys),
        ("9 round trips", round_trips),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[PASS] {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
