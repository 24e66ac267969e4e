//! Acceptance suite. Every criterion runs in one test so the report prints
//! in order, one `PASS`/`FAIL` line each; run with `--nocapture` to see it.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{naive_columns_condition, rat, to_matrix};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rado_core::rado::{columns_condition, first_entries_condition_strict, verify_cc_certificate, weak_first_entries_condition};
use rado_core::rings::{in_gf, in_scaled_gf, pigeonhole_length, pigeonhole_subset, PrimeSet};
use rado_core::search::{
    colouring_of_range, log2_parity_colour, min_rado_number, mono_solutions, GroundSet, RadoOutcome, SearchOptions,
};
use rado_core::systems::{
    build_a_block, build_b_block, build_iab, build_truncated_system, nat_solution_witness, refute_over_gf,
    CoefficientSchedule, SystemSpec,
};
use rado_core::{Rat, RatMatrix};

fn random_int_matrix(rng: &mut StdRng, max_rows: usize, max_cols: usize) -> Vec<Vec<i64>> {
    let u = rng.gen_range(1..=max_rows);
    let v = rng.gen_range(1..=max_cols);
    // half the matrices are zero-heavy so that both answers occur often
    let sparse = rng.gen_bool(0.5);
    (0..u)
        .map(|_| {
            (0..v)
                .map(|_| if sparse && rng.gen_bool(0.5) { 0 } else { rng.gen_range(-3..=3) })
                .collect()
        })
        .collect()
}

const SMALL_PRIMES: [u64; 8] = [2, 3, 5, 7, 11, 13, 17, 19];

fn random_prime_set(rng: &mut StdRng) -> PrimeSet {
    let picks: Vec<u64> = SMALL_PRIMES.iter().copied().filter(|_| rng.gen_bool(0.3)).collect();
    match rng.gen_range(0..4) {
        0 => PrimeSet::Empty,
        1 => PrimeSet::All,
        2 => PrimeSet::finite(picks).unwrap(),
        _ => PrimeSet::all_except(picks).unwrap(),
    }
}

fn random_element(rng: &mut StdRng, f: &PrimeSet) -> Rat {
    let mut den: i64 = 1;
    for _ in 0..rng.gen_range(0..4) {
        let p = SMALL_PRIMES[rng.gen_range(0..SMALL_PRIMES.len())];
        if f.contains(p) {
            den *= p as i64;
        }
    }
    Rat::new(rng.gen_range(-1000i64..=1000), den).unwrap()
}

fn random_rat(rng: &mut StdRng, bound: i64) -> Rat {
    let mut num = 0;
    while num == 0 {
        num = rng.gen_range(-bound..=bound);
    }
    Rat::new(num, rng.gen_range(1..=bound)).unwrap()
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took <= limit {
        Ok(())
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn ac1_oracle_equivalence() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(1);
    let mut positives = 0;
    for case in 0..500 {
        let a = random_int_matrix(&mut rng, 3, 8);
        let m = to_matrix(&a);
        let fast = columns_condition(&m).map_err(|e| e.to_string())?;
        let naive = naive_columns_condition(&a, m.cols());
        if fast.is_some() != naive {
            return Err(format!("case {case}: {a:?} search={} oracle={naive}", fast.is_some()));
        }
        if let Some(cert) = fast {
            positives += 1;
            if !verify_cc_certificate(&m, &cert).unwrap() {
                return Err(format!("case {case}: certificate does not verify"));
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("500 matrices, {positives} with certificates"))
}

fn ac2_stacked_matrix() -> Result<String, String> {
    let start = Instant::now();
    // d_{n,t} stands in as the distinct marker 1/(10n + t)
    let marker = |n: usize, t: usize| Rat::new(1, (10 * n + t) as i64).unwrap();
    let table = (2..=4).map(|n| (1..=3).map(|t| marker(n, t)).collect()).collect();
    let spec = SystemSpec::new(3, 4, CoefficientSchedule::explicit(table).unwrap()).unwrap();
    let d = |n, t| format!("D{n}{t}");
    let displayed: Vec<Vec<String>> = [
        "1 1 0 0 0 0 0 0 0 D21 D22 D23",
        "0 0 1 1 1 0 0 0 0 D31 D32 D33",
        "0 0 0 0 0 1 1 1 1 D41 D42 D43",
        "0 0 0 0 0 0 0 0 0 1 -1 0",
        "0 0 0 0 0 0 0 0 0 1 0 -1",
        "0 0 0 0 0 0 0 0 0 0 1 -1",
    ]
    .iter()
    .map(|l| l.split_whitespace().map(String::from).collect())
    .collect();
    let expected = RatMatrix::from_rows(displayed.iter().map(|row| {
        row.iter()
            .map(|e| {
                (2..=4)
                    .flat_map(|n| (1..=3).map(move |t| (n, t)))
                    .find(|&(n, t)| *e == d(n, t))
                    .map_or_else(|| rat(e), |(n, t)| marker(n, t))
            })
            .collect::<Vec<_>>()
    }))
    .unwrap();
    let a = build_a_block(&spec).unwrap();
    let b = build_b_block(&spec);
    let ab = RatMatrix::vstack(&[&a, &b]).unwrap();
    if ab != expected {
        return Err(format!("(A;B) = {ab:?}"));
    }
    let iab = build_iab(&spec).unwrap();
    if (iab.rows(), iab.cols()) != (18, 12) {
        return Err(format!("(I;A;B) has shape {}x{}", iab.rows(), iab.cols()));
    }
    if iab != RatMatrix::vstack(&[&RatMatrix::identity(12), &ab]).unwrap() {
        return Err("identity block missing".into());
    }
    if !weak_first_entries_condition(&iab) || first_entries_condition_strict(&iab) != Some(Rat::one()) {
        return Err("first entries are not all 1".into());
    }
    within(start, Duration::from_secs(1))?;
    Ok("6x12 (A;B) matches entry for entry; every first entry is 1".into())
}

fn ac3_schur_number() -> Result<String, String> {
    let start = Instant::now();
    let schur = to_matrix(&[vec![1, 1, -1]]);
    let RadoOutcome::Found { n, witness } = min_rado_number(&schur, 2, 10).unwrap() else {
        return Err("no Rado number found".into());
    };
    if n != 5 || witness.len() != 4 {
        return Err(format!("n = {n}, witness {witness:?}"));
    }
    let colouring = colouring_of_range(&witness, 2).unwrap();
    if mono_solutions(&schur, &colouring, &GroundSet::range(4), SearchOptions::default())
        .unwrap()
        .is_some()
    {
        return Err(format!("witness {witness:?} has a monochromatic solution"));
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("S = 5, witness colouring of 1..4 = {witness:?}"))
}

fn ac4_pigeonhole() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(4);
    let mut fallback = 0;
    for case in 0..1000 {
        let m = rng.gen_range(1..=6u64);
        let f = random_prime_set(&mut rng);
        let xs: Vec<Rat> = (0..pigeonhole_length(m).unwrap())
            .map(|_| random_element(&mut rng, &f))
            .collect();
        let h = pigeonhole_subset(m, &f, &xs).map_err(|e| format!("case {case}: {e}"))?;
        fallback += h.residue.is_none() as usize;
        let sum: Rat = h.indices.iter().map(|&i| &xs[i]).sum();
        if h.indices.is_empty() || !in_scaled_gf(&sum, m, &f) {
            return Err(format!("case {case}: m={m} F={f} xs={xs:?} H={:?}", h.indices));
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("1000 instances, {fallback} needed the prefix-sum route"))
}

fn ac5_obstruction_vs_witness() -> Result<String, String> {
    let start = Instant::now();
    let sched = CoefficientSchedule::QPowPair(2);
    let none = refute_over_gf(&sched, &PrimeSet::Empty, &[rat("2"), rat("1")], 10_000).unwrap();
    if none.is_some() {
        return Err(format!("y=(2,1) refuted at n={none:?}"));
    }
    let first = refute_over_gf(&sched, &PrimeSet::Empty, &[rat("1"), rat("1")], 10_000).unwrap();
    if first != Some(2) {
        return Err(format!("y=(1,1) gave {first:?}"));
    }
    for k in 2..=20 {
        let spec = SystemSpec::with_schedule(k, sched.clone()).unwrap();
        let w = nat_solution_witness(&spec).unwrap();
        let positive_ints = w.values().iter().all(|x| x.is_integer() && !x.is_negative() && !x.is_zero());
        if !positive_ints || !w.satisfies(&build_truncated_system(&spec).unwrap()).unwrap() {
            return Err(format!("witness fails at k={k}"));
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok("no obstruction to n=10^4 for y=(2,1); n=2 for y=(1,1); N-witness for k<=20".into())
}

/// Brackets |x| by repeated exact doubling and halving.
fn reference_parity(x: &Rat) -> u32 {
    let two = Rat::from(2);
    let (mut y, mut e) = (x.abs(), 0i64);
    while y >= two {
        y = &y / &two;
        e += 1;
    }
    while y < Rat::one() {
        y = &y * &two;
        e -= 1;
    }
    e.rem_euclid(2) as u32
}

fn ac6_log2_doubling() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(6);
    let two = Rat::from(2);
    for _ in 0..10_000 {
        let x = random_rat(&mut rng, 1_000_000);
        let c = log2_parity_colour(&x).unwrap();
        if log2_parity_colour(&(&x * &two)).unwrap() != 1 - c || c != reference_parity(&x) {
            return Err(format!("x = {x}"));
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok("10^4 rationals: colour(2x) = 1 - colour(x)".into())
}

fn ac7_membership() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(7);
    let dyadic = PrimeSet::finite([2]).unwrap();
    for _ in 0..1000 {
        let x = Rat::new(rng.gen_range(-10_000i64..=10_000), rng.gen_range(1i64..=4096)).unwrap();
        let mut d: u64 = x.denom().try_into().unwrap();
        while d.is_multiple_of(2) {
            d /= 2;
        }
        if in_gf(&x, &PrimeSet::Empty) != x.is_integer() || in_gf(&x, &dyadic) != (d == 1) || !in_gf(&x, &PrimeSet::All) {
            return Err(format!("x = {x}"));
        }
    }
    within(start, Duration::from_secs(1))?;
    Ok("G_{} = Z, G_{2} = D, G_P = Q on 10^3 rationals".into())
}

fn ac8_row_scaling() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(8);
    for case in 0..200 {
        let m = to_matrix(&random_int_matrix(&mut rng, 3, 8));
        let mut scaled = m.clone();
        scaled.scale_row(rng.gen_range(0..m.rows()), &random_rat(&mut rng, 20));
        let before = columns_condition(&m).unwrap().is_some();
        let after = columns_condition(&scaled).unwrap().is_some();
        if before != after {
            return Err(format!("case {case}: {m:?}"));
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok("200 random row scalings".into())
}

#[test]
fn acceptance() {
    type Criterion = (&'static str, fn() -> Result<String, String>);
    let criteria: [Criterion; 8] = [
        ("AC1 columns condition matches naive oracle", ac1_oracle_equivalence),
        ("AC2 (I;A;B) reproduces k=4, alpha=3 matrix", ac2_stacked_matrix),
        ("AC3 Schur number with verified witness", ac3_schur_number),
        ("AC4 pigeonhole subset sums in m*G_F", ac4_pigeonhole),
        ("AC5 obstruction vs positive-integer witness", ac5_obstruction_vs_witness),
        ("AC6 log2 parity flips under doubling", ac6_log2_doubling),
        ("AC7 membership specializations", ac7_membership),
        ("AC8 row-scaling invariance", ac8_row_scaling),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {name} ({:.2?}): {detail}", start.elapsed()),
            Err(why) => {
                println!("FAIL {name} ({:.2?}): {why}", start.elapsed());
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
