//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails. The two sign gates run first; if either fails the
//! remaining suites are skipped.

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kostant_core::lattice::{deform, from_fundamental, in_positive_cone, is_regular, theta, FundamentalCoords};
use kostant_core::reference::{kostant_partition_bruteforce, multiplicity_freudenthal, tensor_bruteforce_lr};
use kostant_core::rep::{multiplicity_signed, tensor_product_signed, TensorSign};
use kostant_core::residue::{kostant_partition_identity_term, kostant_signed_sum, regularized, special_permutations};
use kostant_core::{
    kostant_partition, multiplicity, multiplicity_polynomial, tensor_product, BigInt, BigRational, DominantWeight,
    MultiplicityQuery, Permutation, RationalVector, SignRule, TensorQuery,
};
use num_traits::{Pow, Signed};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Suite = Box<dyn FnOnce(&mut ChaCha8Rng) -> Outcome>;

const SEED: u64 = 0x006b_6f73_7461_6e74;

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self { passed, detail: detail.into() }
    }
}

fn report(name: &str, outcome: &Outcome) {
    let tag = if outcome.passed { "PASS" } else { "FAIL" };
    println!("{tag} {name}: {}", outcome.detail);
}

fn ints(v: &[i64]) -> RationalVector {
    RationalVector::from_integers(v).unwrap()
}

fn dominant(c: &[i64]) -> DominantWeight {
    DominantWeight::new(from_fundamental(&FundamentalCoords::from_integers(c).unwrap())).unwrap()
}

/// Every integral zero-sum vector of length `r + 1` with `|a_i| ≤ bound` for `i ≤ r`.
fn box_vectors(r: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut head = vec![-bound; r];
    loop {
        let mut v = head.clone();
        v.push(-head.iter().sum::<i64>());
        out.push(v);
        let mut i = 0;
        while i < r {
            head[i] += 1;
            if head[i] <= bound {
                break;
            }
            head[i] = -bound;
            i += 1;
        }
        if i == r {
            return out;
        }
    }
}

fn random_zero_sum(rng: &mut ChaCha8Rng, r: usize, bound: i64) -> Vec<i64> {
    let mut v: Vec<i64> = (0..r).map(|_| rng.gen_range(-bound..=bound)).collect();
    v.push(-v.iter().sum::<i64>());
    v
}

fn random_dominant(rng: &mut ChaCha8Rng, r: usize, max: i64) -> DominantWeight {
    let c: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=max)).collect();
    dominant(&c)
}

/// `top − Σ c_i α_i` with `0 ≤ c_i ≤ max`.
fn lower_by_roots(rng: &mut ChaCha8Rng, top: &RationalVector, max: i64) -> RationalVector {
    let mut e = top.entries().to_vec();
    for i in 0..top.rank() {
        let c = BigRational::from_integer(rng.gen_range(0..=max).into());
        e[i] -= &c;
        e[i + 1] += c;
    }
    RationalVector::new(e).unwrap()
}

fn random_multiplicity_query(rng: &mut ChaCha8Rng, max_rank: usize, max_coord: i64) -> MultiplicityQuery {
    let r = rng.gen_range(1..=max_rank);
    let lambda = random_dominant(rng, r, max_coord);
    let mut perm: Vec<usize> = (0..=r).collect();
    perm.shuffle(rng);
    let mu = lower_by_roots(rng, lambda.canonical(), max_coord).permuted(&perm);
    MultiplicityQuery::new(lambda, mu).unwrap()
}

fn random_tensor_query(rng: &mut ChaCha8Rng, max_rank: usize, max_coord: i64) -> TensorQuery {
    loop {
        let r = rng.gen_range(1..=max_rank);
        let lambda = random_dominant(rng, r, max_coord);
        let mu = random_dominant(rng, r, max_coord);
        let top = lambda.checked_add(&mu).unwrap();
        if let Ok(nu) = DominantWeight::new(lower_by_roots(rng, top.canonical(), max_coord)) {
            return TensorQuery::new(lambda, mu, nu).unwrap();
        }
    }
}

fn permutation_sign_gate(record: &mut String) -> Outcome {
    let mut mismatches = [0usize; 2];
    let mut checked = 0usize;
    for (r, bound) in [(1, 8), (2, 8), (3, 5), (4, 3)] {
        for v in box_vectors(r, bound) {
            let a = ints(&v);
            let oracle = kostant_partition_bruteforce(&a).unwrap().to_bigint();
            for (slot, rule) in [SignRule::Descents, SignRule::Inversions].into_iter().enumerate() {
                if kostant_signed_sum(&a, rule).unwrap() != oracle {
                    mismatches[slot] += 1;
                }
            }
            checked += 1;
        }
    }
    let _ = writeln!(record, "permutation sign n(w), {checked} vectors against partition counting (r <= 4):");
    let _ = writeln!(record, "  descent count:   {} mismatches", mismatches[0]);
    let _ = writeln!(record, "  inversion count: {} mismatches", mismatches[1]);
    let chosen = if mismatches[0] == 0 { "descent count" } else if mismatches[1] == 0 { "inversion count" } else { "none" };
    let _ = writeln!(record, "  adopted: {chosen}");
    let passed = mismatches[0] == 0 && SignRule::VERIFIED == SignRule::Descents;
    Outcome::new(passed, format!("descents {} / inversions {} mismatches over {checked}", mismatches[0], mismatches[1]))
}

fn tensor_sign_gate(record: &mut String, rng: &mut ChaCha8Rng) -> Outcome {
    let mut mismatches = [0usize; 2];
    let total = 150;
    for _ in 0..total {
        let q = random_tensor_query(rng, 3, 3);
        let oracle = tensor_bruteforce_lr(q.lambda(), q.mu(), q.nu()).unwrap().to_bigint();
        for (slot, sign) in [TensorSign::ProductOfSignatures, TensorSign::ProductOfLengths].into_iter().enumerate() {
            if tensor_product_signed(&q, sign).unwrap() != oracle {
                mismatches[slot] += 1;
            }
        }
    }
    let _ = writeln!(record, "tensor term sign, {total} random triples against Littlewood-Richardson counts (r <= 3):");
    let _ = writeln!(record, "  sign(w)*sign(w'):   {} mismatches", mismatches[0]);
    let _ = writeln!(record, "  (-1)^(l(w)*l(w')): {} mismatches", mismatches[1]);
    let chosen = if mismatches[0] == 0 { "sign(w)*sign(w')" } else { "none" };
    let _ = writeln!(record, "  adopted: {chosen}");
    let passed = mismatches[0] == 0 && TensorSign::VERIFIED == TensorSign::ProductOfSignatures;
    Outcome::new(passed, format!("signatures {} / lengths {} mismatches over {total}", mismatches[0], mismatches[1]))
}

fn theta_zero(r: usize, scale: &BigInt) -> MultiplicityQuery {
    MultiplicityQuery::new(theta(r).unwrap(), RationalVector::zero(r).unwrap()).unwrap().scaled(scale)
}

fn adjoint_zero_weight() -> Outcome {
    let expected = [(2, 2u64), (3, 8), (4, 64), (5, 1024)];
    let mut parts = Vec::new();
    let mut passed = true;
    for (r, want) in expected {
        let start = Instant::now();
        let got = multiplicity(&theta_zero(r, &BigInt::from(1))).unwrap();
        let elapsed = start.elapsed();
        passed &= got == want;
        if r == 5 {
            passed &= elapsed < Duration::from_secs(60);
        }
        parts.push(format!("A_{r}={got} ({:.1?})", elapsed));
    }
    Outcome::new(passed, parts.join(", "))
}

fn adjoint_stretch() -> String {
    let start = Instant::now();
    let got = multiplicity(&theta_zero(6, &BigInt::from(1))).unwrap();
    format!("A_6={got} ({:.1?}, expected 32768, not gated)", start.elapsed())
}

fn adjoint_polynomials() -> Outcome {
    let mut parts = Vec::new();
    let mut passed = true;
    for r in 2..=4 {
        let d = r * (r - 1) / 2;
        let fit = multiplicity_polynomial(&theta_zero(r, &BigInt::from(1))).unwrap();
        let Some(p) = fit.polynomial() else {
            passed = false;
            parts.push(format!("A_{r}: no polynomial"));
            continue;
        };
        // (N+1)^d expanded: coefficient of N^k is C(d, k).
        let expected: Vec<BigRational> = (0..=d)
            .map(|k| BigRational::from_integer(kostant_core::series::binomials(&BigInt::from(d), k + 1)[k].clone()))
            .collect();
        passed &= p.coefficients() == expected.as_slice();
        parts.push(format!("A_{r}: {p}"));
    }
    Outcome::new(passed, parts.join("; "))
}

fn scaling() -> Outcome {
    let poly = multiplicity_polynomial(&theta_zero(3, &BigInt::from(1))).unwrap();
    let mut passed = poly.polynomial().is_some();
    let mut parts = Vec::new();
    for n in [BigInt::from(10), BigInt::from(10_000), BigInt::from(10).pow(9u32)] {
        let start = Instant::now();
        let got = multiplicity(&theta_zero(3, &n)).unwrap();
        let elapsed = start.elapsed();
        passed &= elapsed < Duration::from_secs(5);
        if let Some(p) = poly.polynomial() {
            passed &= p.eval(&n) == BigRational::from_integer(got.to_bigint());
        }
        parts.push(format!("N={n} in {:.1?}", elapsed));
    }
    Outcome::new(passed, parts.join(", "))
}

fn partition_oracle() -> Outcome {
    let mut checked = 0;
    let mut failures = 0;
    for (r, bound) in [(2, 6), (3, 6), (4, 3)] {
        for v in box_vectors(r, bound) {
            let a = ints(&v);
            if kostant_partition(&a).unwrap() != kostant_partition_bruteforce(&a).unwrap() {
                failures += 1;
            }
            checked += 1;
        }
    }
    Outcome::new(failures == 0, format!("{failures} mismatches over {checked} vectors"))
}

fn freudenthal_oracle(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = 0;
    for _ in 0..200 {
        let q = random_multiplicity_query(rng, 4, 4);
        if multiplicity(&q).unwrap() != multiplicity_freudenthal(q.lambda(), q.mu()).unwrap() {
            failures += 1;
        }
    }
    Outcome::new(failures == 0, format!("{failures} mismatches over 200 queries"))
}

fn lr_oracle(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = 0;
    let mut nonzero = 0;
    for _ in 0..100 {
        let q = random_tensor_query(rng, 3, 3);
        let got = tensor_product(&q).unwrap();
        if got != tensor_bruteforce_lr(q.lambda(), q.mu(), q.nu()).unwrap() {
            failures += 1;
        }
        if got != 0 {
            nonzero += 1;
        }
    }
    Outcome::new(failures == 0, format!("{failures} mismatches over 100 triples ({nonzero} non-zero)"))
}

fn nonnegative_prefix(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = 0;
    for _ in 0..500 {
        let r = rng.gen_range(1..=4);
        let mut v: Vec<i64> = (0..r).map(|_| rng.gen_range(0..=20)).collect();
        v.push(-v.iter().sum::<i64>());
        let a = ints(&v);
        let only_identity = special_permutations(&regularized(&a).unwrap()) == vec![Permutation::identity(r)];
        let same = kostant_partition_identity_term(&a).unwrap() == kostant_partition(&a).unwrap();
        if !(only_identity && same) {
            failures += 1;
        }
    }
    Outcome::new(failures == 0, format!("{failures} failures over 500 vectors"))
}

fn deformation(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = 0;
    let mut in_cone = 0;
    for _ in 0..1000 {
        let r = rng.gen_range(1..=6);
        let a = ints(&random_zero_sum(rng, r, 10));
        let d = deform(&a).unwrap();
        if !is_regular(&d) || in_positive_cone(&a) != in_positive_cone(&d) {
            failures += 1;
        }
        in_cone += in_positive_cone(&a) as usize;
    }
    Outcome::new(failures == 0, format!("{failures} failures over 1000 vectors ({in_cone} in the cone)"))
}

fn nonnegativity(rng: &mut ChaCha8Rng) -> Outcome {
    let mut failures = 0;
    for _ in 0..500 {
        let q = random_multiplicity_query(rng, 4, 4);
        failures += multiplicity_signed(&q).unwrap().is_negative() as usize;
    }
    for _ in 0..200 {
        let q = random_tensor_query(rng, 4, 2);
        failures += tensor_product_signed(&q, TensorSign::VERIFIED).unwrap().is_negative() as usize;
    }
    Outcome::new(failures == 0, format!("{failures} negative sums over 500 + 200 queries"))
}

fn main() -> ExitCode {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut record = String::from("# Sign arbitration (generated by the acceptance suite)\n\n");
    let mut all_passed = true;

    let gates = [
        ("gate: permutation sign n(w) against partition counting", permutation_sign_gate(&mut record)),
        ("gate: tensor term sign against Littlewood-Richardson", tensor_sign_gate(&mut record, &mut rng)),
    ];
    for (name, outcome) in &gates {
        report(name, outcome);
        all_passed &= outcome.passed;
    }

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/generated/sign_arbitration.txt");
    let written = std::fs::create_dir_all(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/generated"))
        .and_then(|_| std::fs::write(path, &record));
    let artifact = Outcome::new(written.is_ok() && all_passed, format!("written to tests/generated/sign_arbitration.txt: {written:?}"));
    report("arbitration record", &artifact);
    all_passed &= artifact.passed;

    if !all_passed {
        println!("SKIP remaining suites: sign gates did not pass");
        return ExitCode::FAILURE;
    }

    let suites: Vec<(&str, Suite)> = vec![
        ("zero weight of the adjoint, A_2..A_5", Box::new(|_| adjoint_zero_weight())),
        ("adjoint ray polynomial is (N+1)^(r(r-1)/2), r=2..4", Box::new(|_| adjoint_polynomials())),
        ("A_3 scaling, N up to 10^9", Box::new(|_| scaling())),
        ("partition function vs counting oracle", Box::new(|_| partition_oracle())),
        ("multiplicity vs Freudenthal", Box::new(freudenthal_oracle)),
        ("tensor product vs Littlewood-Richardson", Box::new(lr_oracle)),
        ("non-negative prefix vectors use the identity residue only", Box::new(nonnegative_prefix)),
        ("deformation is regular and keeps cone membership", Box::new(deformation)),
        ("signed sums are non-negative", Box::new(nonnegativity)),
    ];
    for (name, suite) in suites {
        let outcome = suite(&mut rng);
        report(name, &outcome);
        all_passed &= outcome.passed;
    }
    println!("INFO stretch: {}", adjoint_stretch());

    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
