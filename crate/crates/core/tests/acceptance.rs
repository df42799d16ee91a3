//! Acceptance criteria, one line per criterion. Exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symloc::ci::{
    b_plus_minus, betti_numbers, c1_cnm1, c2_squared, gs_chern_sum, scan_chi_linear, scan_jr_null, signature,
    Multidegree,
};
use symloc::fixloc::fixtures::{cp4_standard, cp4_weighted, k3_blowup};
use symloc::fixloc::{
    i_jr_direct, i_jr_four_manifold, i_jr_localized, localize_betti, localize_signature, validate, weight_sum_offsets,
    Check, CheckStatus, FixedPointData,
};
use symloc::gkm::{cp_graph, edge_count_identity, morse_betti, two_quadrics_feasibility};
use symloc::series::Rational;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn md(n: u32, d: &[u32]) -> Multidegree {
    Multidegree::new(n, d.iter().copied()).unwrap()
}

fn middle_betti_two_quadrics() -> Outcome {
    for n in (2..=20u32).step_by(2) {
        let b = betti_numbers(&md(n, &[2, 2])).map_err(|e| e.to_string())?;
        let mid = &b[n as usize];
        ensure(*mid == BigInt::from(n + 4), || format!("n = {n}: b_n = {mid}"))?;
    }
    Ok("b_n = n+4 for even n in 2..=20".into())
}

fn e8_fourfold() -> Outcome {
    let x = md(4, &[2, 2]);
    let sigma = signature(&x);
    let pm = b_plus_minus(&x).map_err(|e| e.to_string())?;
    ensure(sigma == BigInt::from(8), || format!("signature {sigma}"))?;
    ensure(pm == (BigInt::from(8), BigInt::from(0)), || format!("b+- = {pm:?}"))?;
    Ok("signature 8, (b+, b-) = (8, 0)".into())
}

fn degree_set(list: &[Multidegree]) -> BTreeSet<Vec<u32>> {
    list.iter().map(|m| m.degrees().to_vec()).collect()
}

fn expect_set(found: &[Multidegree], expected: &[&[u32]]) -> Result<(), String> {
    let want: BTreeSet<Vec<u32>> = expected.iter().map(|d| d.to_vec()).collect();
    let got = degree_set(found);
    ensure(got == want, || format!("got {got:?}, want {want:?}"))
}

fn jr_null_scans() -> Outcome {
    let mut times = Vec::new();
    for (n, max, expected) in [
        (4, 12, &[&[][..], &[2], &[2, 2]][..]),
        (6, 10, &[&[][..], &[2], &[2, 2]][..]),
        (2, 9, &[&[][..], &[2], &[2, 2], &[3]][..]),
    ] {
        let start = Instant::now();
        let found = scan_jr_null(n, max).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        expect_set(&found, expected).map_err(|e| format!("n = {n}: {e}"))?;
        ensure(elapsed < Duration::from_secs(10), || format!("n = {n} took {elapsed:?}"))?;
        times.push(format!("n={n}: {:.2?}", elapsed));
    }
    Ok(times.join(", "))
}

fn chi_linear_scans() -> Outcome {
    for n in [3, 5] {
        let found = scan_chi_linear(n, 12).map_err(|e| e.to_string())?;
        expect_set(&found, &[&[], &[2]]).map_err(|e| format!("n = {n}: {e}"))?;
    }
    Ok("n = 3, 5 give {(), (2)}".into())
}

fn chern_triangle() -> Outcome {
    for n in (4..=20u32).step_by(2) {
        let x = md(n, &[2, 2]);
        let closed = BigInt::from(n * (n + 2) * (n - 1) / 2);
        let direct = c1_cnm1(&x);
        let gs = gs_chern_sum(&betti_numbers(&x).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let cert = two_quadrics_feasibility(n).map_err(|e| e.to_string())?;
        ensure(direct == closed, || format!("n = {n}: c1 c_(n-1) = {direct}, closed form {closed}"))?;
        ensure(gs == Rational::from_integer(closed.clone()), || format!("n = {n}: gs sum {gs}"))?;
        ensure(BigInt::from(cert.required) == closed, || format!("n = {n}: certificate {}", cert.required))?;
    }
    Ok("three paths agree for even n in 4..=20".into())
}

fn gkm_infeasible() -> Outcome {
    for n in (4..=40u32).step_by(2) {
        let cert = two_quadrics_feasibility(n).map_err(|e| e.to_string())?;
        ensure(!cert.feasible, || format!("n = {n} reported feasible: {cert:?}"))?;
    }
    Ok("infeasible for even n in 4..=40".into())
}

fn random_jr_identity() -> Outcome {
    const SEEDS: u64 = 1000;
    let mut failures = Vec::new();
    for seed in 0..SEEDS {
        let fpd = common::random_fpd(seed);
        let direct = i_jr_direct(&localize_betti(&fpd), localize_signature(&fpd));
        if direct != i_jr_localized(&fpd) {
            failures.push(seed);
        }
    }
    ensure(failures.is_empty(), || format!("failing seeds {failures:?}"))?;
    Ok(format!("ChaCha8 seeds 0..{SEEDS}, 0 failures"))
}

fn kirwan_cp4() -> Outcome {
    let fpd = cp4_standard();
    let b = localize_betti(&fpd);
    let s = localize_signature(&fpd);
    ensure(b == [1, 0, 1, 0, 1, 0, 1, 0, 1], || format!("betti {b:?}"))?;
    ensure(s == 1, || format!("signature {s}"))?;
    Ok(format!("betti {b:?}, signature {s}"))
}

fn k3_blowup_jr() -> Outcome {
    // With b2+ = 3 and σ = -16 the K3 component contributes 2*3 - 2 = 4,
    // entering with sign (-1)^1. The value -36 only comes out with σ = +16,
    // which contradicts I_JR = 2 b2+ - 2 for 4-manifolds.
    let fpd = k3_blowup();
    let v = i_jr_localized(&fpd);
    ensure(v == -4, || format!("i_jr_localized = {v}"))?;
    ensure(v == -i_jr_four_manifold(3), || format!("four-manifold value {}", i_jr_four_manifold(3)))?;
    ensure(v != -36, || "reproduced the inconsistent -36".into())?;
    Ok("i_jr_localized = -4 = -(2*3 - 2); -36 rejected".into())
}

fn generic_direction(rng: &mut impl Rng, n: usize) -> Vec<i64> {
    let mut values = BTreeSet::new();
    while values.len() < n {
        values.insert(rng.random_range(1..=1000i64));
    }
    let mut xi: Vec<i64> = values.into_iter().map(|v| if rng.random() { v } else { -v }).collect();
    for i in (1..xi.len()).rev() {
        xi.swap(i, rng.random_range(0..=i));
    }
    xi
}

fn morse_counting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in 1..=8usize {
        let g = cp_graph(n);
        ensure(edge_count_identity(&g), || format!("edge identity fails for n = {n}"))?;
        let expected: Vec<u64> = (0..=2 * n).map(|i| u64::from(i % 2 == 0)).collect();
        for _ in 0..10 {
            let xi = generic_direction(&mut rng, n);
            let b = morse_betti(&g, &xi).map_err(|e| format!("n = {n}, xi = {xi:?}: {e}"))?;
            ensure(b == expected, || format!("n = {n}, xi = {xi:?}: {b:?}"))?;
        }
    }
    Ok("CP^n for n <= 8, 10 directions each (ChaCha8 seed 10)".into())
}

fn validator_fixtures() -> Outcome {
    let fpd = cp4_weighted();
    let report = validate(&fpd);
    ensure(report.checks.iter().all(|c| c.status == CheckStatus::Pass), || {
        format!("weighted fixture: failed {:?}", report.failed())
    })?;
    let offsets = weight_sum_offsets(&fpd).ok_or("no weight-sum offsets")?;
    ensure(offsets.iter().all(|o| *o == Rational::from_integer(0.into())), || format!("offsets {offsets:?}"))?;

    let mut components = fpd.components().to_vec();
    components[1].lambda = 2;
    let mutated = FixedPointData::new(4, components).map_err(|e| e.to_string())?.with_monotone(true);
    let report = validate(&mutated);
    let failed: Vec<usize> =
        Check::ALL.iter().filter(|c| report.get(**c).status == CheckStatus::Fail).map(|c| c.number()).collect();
    ensure(failed == [4], || format!("mutated fixture fails checks {failed:?}, want [4]"))?;
    Ok("weighted passes all, offset 0; mutated fails only (4)".into())
}

fn c2_squared_non_negative() -> Outcome {
    let found = scan_jr_null(4, 12).map_err(|e| e.to_string())?;
    let mut values = Vec::new();
    for x in &found {
        let v = c2_squared(x).map_err(|e| e.to_string())?;
        ensure(!v.is_negative(), || format!("{x}: c2^2 = {v}"))?;
        values.push(format!("{x}: {v}"));
    }
    Ok(values.join(", "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        (1, "middle Betti of two quadrics", middle_betti_two_quadrics),
        (2, "E8 fourfold", e8_fourfold),
        (3, "JR-null scans", jr_null_scans),
        (4, "chi-linear scans", chi_linear_scans),
        (5, "Chern number triangle", chern_triangle),
        (6, "GKM infeasibility", gkm_infeasible),
        (7, "random JR localization identity", random_jr_identity),
        (8, "Kirwan sum for CP^4", kirwan_cp4),
        (9, "K3 blow-up JR value", k3_blowup_jr),
        (10, "Morse counting on CP^n graphs", morse_counting),
        (11, "validator fixtures", validator_fixtures),
        (12, "c2^2 non-negativity", c2_squared_non_negative),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (id, name, run) in criteria {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = t.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {id:>2} PASS  {name} [{took:.2?}]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id:>2} FAIL  {name} [{took:.2?}]: {detail}");
            }
        }
    }
    println!("criterion 13 EXCLUDED  geometric proof steps are not computable");
    println!("acceptance: {} passed, {failed} failed in {:.2?}", 12 - failed, start.elapsed());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
