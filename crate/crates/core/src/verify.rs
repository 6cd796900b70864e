//! The acceptance checks, one function per criterion.
//!
//! Every check is exact and deterministic for a given seed. Reports carry no
//! timings so that repeated runs serialize to identical JSON.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bialgebra::{check_bialgebra, check_bialgebra_with, check_comodule, DeltaRule, RNG_NAME};
use crate::coend::{coend_degree, coend_to_sym_iso, rsk_identity};
use crate::linalg::{q, q_to_i64, Matrix, Q};
use crate::partitions::{binomial, count_syt, enumerate_partitions, partitions_up_to, schur_dimension, Partition};
use crate::rig::{
    congruent, quotient_hom_dim, split_idempotent, subdimension_ideal, RigMorphism, RigObject, TwoIdeal,
};
use crate::schur_eval::{evaluate_endomorphism, schur_weyl_image_dim, SchurModule};
use crate::symfunc::{multiply, pieri_vertical, plethysm_e, plethysm_h, Basis, SymFunc};
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub details: Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub limits: Limits,
}

type Check = fn(&VerifyConfig) -> Result<CheckReport>;

/// All checks with their report names, in report order.
pub const CHECKS: [(&str, Check); 9] = [
    ("c1_kernel_lemma", kernel_lemma),
    ("c2_coend_identity", coend_identity),
    ("c3_isotypic_decomposition", isotypic_decomposition),
    ("c4_bialgebra_axioms", bialgebra_axioms),
    ("c5_comodule_axioms", comodule_axioms),
    ("c6_algebraic_representation", algebraic_representation),
    ("c7_schur_weyl", schur_weyl),
    ("c8_quotient_structure", quotient_structure),
    ("c9_symfunc_consistency", symfunc_consistency),
];

/// Runs every check on its own thread. A resource-bound error aborts the
/// run; any other error is reported as a failed check.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    let results: Vec<Result<CheckReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|&(name, check)| s.spawn(move || run_one(name, check, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    let mut reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(reports)
}

fn run_one(name: &str, check: Check, config: &VerifyConfig) -> Result<CheckReport> {
    match check(config) {
        Ok(r) => Ok(r),
        Err(e @ Error::ResourceBound { .. }) => Err(e),
        Err(e) => Ok(CheckReport {
            name: name.to_string(),
            passed: false,
            details: json!({"error": {"kind": e.kind(), "message": e.to_string()}}),
        }),
    }
}

fn report(name: &str, failures: Vec<String>, mut details: Value) -> CheckReport {
    details["failures"] = json!(failures);
    CheckReport {
        name: name.to_string(),
        passed: failures.is_empty(),
        details,
    }
}

/// `dim S^λ(k^n) > 0 ⟺ rows(λ) ≤ n ⟺ λ ∉ ⟨Λ^{n+1}⟩` for `n ≤ 3`, `|λ| ≤ 8`.
pub fn kernel_lemma(_config: &VerifyConfig) -> Result<CheckReport> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=3 {
        let ideal = subdimension_ideal(n, 8)?;
        for l in partitions_up_to(8) {
            cases += 1;
            let nonzero = schur_dimension(&l, n) > 0;
            let few_rows = l.rows() <= n;
            let outside = !ideal.contains(&l)?;
            if nonzero != few_rows || few_rows != outside {
                failures.push(format!(
                    "n={n} λ={l}: dim>0 {nonzero}, rows≤n {few_rows}, outside ideal {outside}"
                ));
            }
        }
    }
    Ok(report("c1_kernel_lemma", failures, json!({"cases": cases, "max_degree": 8})))
}

const BRUTE_FORCE_RANGE: [(usize, usize); 8] = [(0, 2), (1, 2), (2, 2), (3, 2), (4, 2), (1, 3), (2, 3), (3, 3)];

/// Brute-force coinvariant dimension equals `C(n²+m−1, m)` and the map to
/// `Sym^m(V*⊗V)` is an isomorphism, for `n = 2, m ≤ 4` and `n = 3, m ≤ 3`.
pub fn coend_identity(config: &VerifyConfig) -> Result<CheckReport> {
    let mut failures = Vec::new();
    let mut degrees = Vec::new();
    for &(m, n) in BRUTE_FORCE_RANGE.iter().chain([(0, 3)].iter()) {
        let d = coend_degree(m, n, &config.limits)?;
        let iso = coend_to_sym_iso(m, n, &config.limits)?;
        let formula = binomial((n * n + m - 1) as u64, m as u64);
        if d.coend_dim as u64 != formula {
            failures.push(format!("m={m} n={n}: coend {} vs C = {formula}", d.coend_dim));
        }
        if !iso.passed {
            failures.push(format!("m={m} n={n}: iso failed: {:?}", iso.witness));
        }
        degrees.push(json!({"m": m, "n": n, "ambient": d.ambient, "relation_rank": d.relation_rank,
            "coend_dim": d.coend_dim, "sym_dim": d.sym_dim, "iso": iso.passed}));
    }
    Ok(report("c2_coend_identity", failures, json!({"degrees": degrees})))
}

/// `Σ_{λ ⊢ m, rows ≤ n} (dim S^λ(k^n))² = C(n²+m−1, m)` for `n ≤ 4, m ≤ 8`,
/// and agreement with the brute-force coend dimensions.
pub fn isotypic_decomposition(config: &VerifyConfig) -> Result<CheckReport> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=4 {
        for m in 0..=8 {
            cases += 1;
            let r = rsk_identity(m, n);
            if !r.equal {
                failures.push(format!("m={m} n={n}: {} vs {}", r.lhs, r.rhs));
            }
        }
    }
    for &(m, n) in &BRUTE_FORCE_RANGE {
        let d = coend_degree(m, n, &config.limits)?;
        if d.coend_dim as u64 != rsk_identity(m, n).lhs {
            failures.push(format!("m={m} n={n}: brute force {} vs isotypic sum", d.coend_dim));
        }
    }
    Ok(report(
        "c3_isotypic_decomposition",
        failures,
        json!({"cases": cases, "overlap": BRUTE_FORCE_RANGE.len()}),
    ))
}

/// Bialgebra laws for `n ≤ 3` on the generators and 50 seeded monomials of
/// degree at most 3, plus a corrupted comultiplication that must fail.
pub fn bialgebra_axioms(config: &VerifyConfig) -> Result<CheckReport> {
    let mut failures = Vec::new();
    let mut runs = Vec::new();
    for n in 1..=3 {
        let r = check_bialgebra(n, 3, config.seed)?;
        if !r.passed {
            failures.push(format!("n={n}: {:?}", r.violations));
        }
        runs.push(json!({"n": n, "checks": r.checks, "samples": r.samples, "passed": r.passed}));
    }
    let bad = check_bialgebra_with(&DeltaRule::corrupted(2)?, 3, config.seed)?;
    let caught = bad.violations.iter().find(|v| v.axiom == "coassociativity");
    if caught.is_none() {
        failures.push("corrupted Δ was not rejected for coassociativity".to_string());
    }
    Ok(report(
        "c4_bialgebra_axioms",
        failures,
        json!({
            "seed": config.seed,
            "rng": RNG_NAME,
            "runs": runs,
            "negative_control": {"rejected": caught.is_some(), "witness": caught.map(|v| v.witness.clone())},
        }),
    ))
}

fn representation_range() -> Vec<(Partition, usize)> {
    let shapes: [&[usize]; 4] = [&[1], &[2], &[1, 1], &[2, 1]];
    let mut out = Vec::new();
    for s in shapes {
        for n in 2..=3 {
            out.push((Partition::new(s.to_vec()).expect("valid shape"), n));
        }
    }
    out
}

/// Comodule laws for the coaction matrices of `(1), (2), (1,1), (2,1)` at
/// `n ∈ {2, 3}`, and `ε(P) = 1`.
pub fn comodule_axioms(config: &VerifyConfig) -> Result<CheckReport> {
    let mut failures = Vec::new();
    let mut cases = Vec::new();
    for (l, n) in representation_range() {
        let module = SchurModule::new(&l, n, &config.limits)?;
        let p = module.coaction()?;
        let r = check_comodule(&p)?;
        let counit_ok = p.counit() == Matrix::identity(module.dimension());
        if !r.passed {
            failures.push(format!("{l} n={n}: {:?}", r.violations));
        }
        if !counit_ok {
            failures.push(format!("{l} n={n}: ε(P) is not the identity"));
        }
        cases.push(json!({"partition": l, "n": n, "dim": module.dimension(), "checks": r.checks}));
    }
    Ok(report("c5_comodule_axioms", failures, json!({"cases": cases})))
}

fn random_int_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(-3..=3)).collect())
        .collect();
    Matrix::from_i64(&rows)
}

/// `act(gh) = act(g)·act(h)` on 20 seeded pairs and `P(g) = act(g)` on 10
/// seeded matrices, per case of the comodule range.
pub fn algebraic_representation(config: &VerifyConfig) -> Result<CheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    for (l, n) in representation_range() {
        let module = SchurModule::new(&l, n, &config.limits)?;
        let p = module.coaction()?;
        for t in 0..20 {
            let g = random_int_matrix(&mut rng, n);
            let h = random_int_matrix(&mut rng, n);
            cases += 1;
            if module.act(&g.mul(&h)?)? != module.act(&g)?.mul(&module.act(&h)?)? {
                failures.push(format!("{l} n={n}: pair {t} breaks multiplicativity"));
            }
        }
        for t in 0..10 {
            let g = random_int_matrix(&mut rng, n);
            cases += 1;
            if p.specialize(&g)? != module.act(&g)? {
                failures.push(format!("{l} n={n}: sample {t} coaction differs from act"));
            }
        }
    }
    Ok(report(
        "c6_algebraic_representation",
        failures,
        json!({"seed": config.seed, "rng": RNG_NAME, "cases": cases}),
    ))
}

/// Rank of the place-permutation operators equals `Σ (f^λ)²` over
/// `rows(λ) ≤ n` and the quotient hom dimension of `End(x^{⊗m})`.
pub fn schur_weyl(config: &VerifyConfig) -> Result<CheckReport> {
    let mut failures = Vec::new();
    let mut cases = Vec::new();
    for &(m, n) in BRUTE_FORCE_RANGE.iter().chain([(0, 3)].iter()) {
        let rank = schur_weyl_image_dim(m, n, &config.limits)? as u64;
        let formula: u64 = enumerate_partitions(m, Some(n)).iter().map(|l| count_syt(l).pow(2)).sum();
        let xm = RigObject::tensor_power_of_generator(m, m.max(1))?;
        let quotient = quotient_hom_dim(&xm, &xm, &subdimension_ideal(n, m.max(1))?)?;
        if rank != formula || formula != quotient {
            failures.push(format!("m={m} n={n}: rank {rank}, formula {formula}, quotient {quotient}"));
        }
        cases.push(json!({"m": m, "n": n, "dim": rank}));
    }
    Ok(report("c7_schur_weyl", failures, json!({"cases": cases})))
}

fn random_invertible(rng: &mut ChaCha8Rng, d: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..d).map(|_| rng.random_range(-2..=2)).collect())
            .collect();
        let a = Matrix::from_i64(&rows);
        if a.rank() == d {
            return a;
        }
    }
}

/// A seeded idempotent `A·diag(1^r, 0)·A⁻¹` at each block of `x^{⊗m}`, with
/// the middle object it should split through.
fn random_idempotent(rng: &mut ChaCha8Rng, xm: &RigObject) -> Result<(RigMorphism, RigObject)> {
    let mut blocks = Vec::new();
    let mut middle = Vec::new();
    for (l, &f) in xm.multiplicities() {
        let d = f as usize;
        let r = rng.random_range(0..=d);
        let a = random_invertible(rng, d);
        let mut diag = Matrix::zeros(d, d);
        for i in 0..r {
            diag[(i, i)] = Q::one();
        }
        blocks.push((l.clone(), a.mul(&diag)?.mul(&a.inverse()?)?));
        middle.push((l.clone(), r as u64));
    }
    Ok((
        RigMorphism::new(xm.clone(), xm.clone(), blocks)?,
        RigObject::from_multiplicities(middle),
    ))
}

/// Adds a random block at every simple of `xm` lying in the ideal.
fn with_ideal_junk(
    rng: &mut ChaCha8Rng,
    f: &RigMorphism,
    ideal: &TwoIdeal,
) -> Result<RigMorphism> {
    let xm = f.source();
    let mut blocks = Vec::new();
    for (l, &d) in xm.multiplicities() {
        let mut b = f.block(l);
        if ideal.contains(l)? {
            let d = d as usize;
            let junk = Matrix::from_i64(
                &(0..d)
                    .map(|_| (0..d).map(|_| rng.random_range(-5..=5)).collect())
                    .collect::<Vec<_>>(),
            );
            b = b.add(&junk)?;
        }
        blocks.push((l.clone(), b));
    }
    RigMorphism::new(xm.clone(), xm.clone(), blocks)
}

fn elementary_endomorphisms(xm: &RigObject) -> Result<Vec<RigMorphism>> {
    let mut out = Vec::new();
    for (l, &f) in xm.multiplicities() {
        let d = f as usize;
        for r in 0..d {
            for c in 0..d {
                let mut b = Matrix::zeros(d, d);
                b[(r, c)] = Q::one();
                out.push(RigMorphism::new(xm.clone(), xm.clone(), [(l.clone(), b)])?);
            }
        }
    }
    Ok(out)
}

fn random_endomorphism(rng: &mut ChaCha8Rng, basis: &[RigMorphism], xm: &RigObject) -> Result<RigMorphism> {
    let mut f = RigMorphism::zero(xm.clone(), xm.clone());
    for e in basis {
        f = f.add(&e.scale(&q(rng.random_range(-2..=2))))?;
    }
    Ok(f)
}

/// Splitting of 20 seeded idempotents in `End(x^{⊗m})`, `m ≤ 3`, both on the
/// nose and modulo `⟨Λ³⟩` after corrupting the blocks inside the ideal; and
/// `congruent(f, g) ⟺ φ_2(f) = φ_2(g)` on `End(x^{⊗m})`, `m ≤ 3`, over all
/// pairs from a spanning set, perturbations inside the ideal, and seeded
/// random pairs.
pub fn quotient_structure(config: &VerifyConfig) -> Result<CheckReport> {
    let n = 2;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut failures = Vec::new();
    let empty = TwoIdeal::generated_by(&RigObject::zero(), 8)?;
    let ideal = subdimension_ideal(n, 8)?;

    let mut splits = 0;
    for t in 0..20 {
        let m = 1 + t % 3;
        let xm = RigObject::tensor_power_of_generator(m, 8)?;
        let (e, middle) = random_idempotent(&mut rng, &xm)?;
        let s = split_idempotent(&e, &empty)?;
        let ok = s.middle == middle
            && s.section.compose(&s.retraction)? == e
            && s.retraction.compose(&s.section)? == RigMorphism::identity(&s.middle);
        if !ok {
            failures.push(format!("idempotent {t} (m={m}) did not split"));
        }
        let junk = with_ideal_junk(&mut rng, &e, &ideal)?;
        let s = split_idempotent(&junk, &ideal)?;
        let expect_middle = crate::rig::quotient_object(&middle, &ideal)?;
        let ok = s.middle == expect_middle
            && congruent(&s.section.compose(&s.retraction)?, &junk, &ideal)?
            && s.retraction.compose(&s.section)? == RigMorphism::identity(&s.middle);
        if !ok {
            failures.push(format!("idempotent {t} (m={m}) did not split modulo the ideal"));
        }
        splits += 2;
    }

    let mut pairs = 0;
    for m in 1..=3 {
        let xm = RigObject::tensor_power_of_generator(m, 8)?;
        let mut span = elementary_endomorphisms(&xm)?;
        span.push(RigMorphism::zero(xm.clone(), xm.clone()));
        let evals = span
            .iter()
            .map(|f| evaluate_endomorphism(f, m, n, &config.limits))
            .collect::<Result<Vec<_>>>()?;
        let mut candidates: Vec<(RigMorphism, Matrix)> = span.into_iter().zip(evals).collect();
        for _ in 0..5 {
            let f = random_endomorphism(&mut rng, &elementary_endomorphisms(&xm)?, &xm)?;
            let g = with_ideal_junk(&mut rng, &f, &ideal)?;
            for h in [f, g] {
                let ev = evaluate_endomorphism(&h, m, n, &config.limits)?;
                candidates.push((h, ev));
            }
        }
        for (f, ef) in &candidates {
            for (g, eg) in &candidates {
                pairs += 1;
                let c = congruent(f, g, &ideal)?;
                if c != (ef == eg) {
                    failures.push(format!("m={m}: congruent = {c} but evaluations equal = {}", ef == eg));
                }
            }
        }
    }
    Ok(report(
        "c8_quotient_structure",
        failures,
        json!({"seed": config.seed, "rng": RNG_NAME, "splittings": splits, "pairs": pairs, "n": n}),
    ))
}

fn dim_at(f: &SymFunc, n: usize) -> Result<u64> {
    let d = f.dimension_at(n)?;
    q_to_i64(&d)
        .and_then(|x| u64::try_from(x).ok())
        .ok_or_else(|| Error::Consistency(format!("dimension {d} is not a natural number")))
}

/// Symmetric-function invariants for degrees ≤ 6 and `n ≤ 3`: dimension
/// homomorphism for products and plethysms, change-of-basis round trip,
/// Pieri agreement, and the exterior-power sum rule.
pub fn symfunc_consistency(_config: &VerifyConfig) -> Result<CheckReport> {
    const BOUND: usize = 6;
    let mut failures = Vec::new();
    let mut checks = 0;
    let all = partitions_up_to(BOUND);
    let s = |l: &Partition| SymFunc::schur(l, BOUND);

    for l in &all {
        checks += 1;
        let f = s(l)?;
        if f.to_basis(Basis::PowerSum)?.to_basis(Basis::Schur)? != f {
            failures.push(format!("basis round trip fails at {l}"));
        }
    }

    for a in &all {
        for b in &all {
            if a.size() + b.size() > BOUND {
                continue;
            }
            let prod = multiply(&s(a)?, &s(b)?)?;
            for n in 1..=3 {
                checks += 1;
                if dim_at(&prod, n)? != schur_dimension(a, n) * schur_dimension(b, n) {
                    failures.push(format!("d_{n}(s_{a}·s_{b}) is not multiplicative"));
                }
            }
        }
        for k in 0..=BOUND - a.size() {
            checks += 1;
            let prod = multiply(&s(a)?, &s(&Partition::column(k))?)?;
            let expect = SymFunc::from_terms(
                Basis::Schur,
                BOUND,
                pieri_vertical(a, k).into_iter().map(|p| (p, Q::one())),
            )?;
            if prod != expect {
                failures.push(format!("s_{a}·e_{k} differs from the vertical-strip rule"));
            }
        }
    }

    let mut inputs: Vec<SymFunc> = all.iter().filter(|l| !l.is_empty()).map(&s).collect::<Result<_>>()?;
    let one = s(&Partition::row(1))?;
    inputs.push(one.add(&one)?);
    inputs.push(one.add(&s(&Partition::row(2))?)?);
    inputs.push(one.add(&s(&Partition::column(2))?)?);
    for f in &inputs {
        let deg = f.degree().unwrap_or(0).max(1);
        for k in 0..=BOUND / deg {
            let e = plethysm_e(k, f)?;
            let h = plethysm_h(k, f)?;
            for n in 1..=3 {
                checks += 2;
                let d = dim_at(f, n)?;
                if dim_at(&e, n)? != binomial(d, k as u64) {
                    failures.push(format!("d_{n}(e_{k}[{f}]) ≠ C({d},{k})"));
                }
                if dim_at(&h, n)? != multichoose(d, k as u64) {
                    failures.push(format!("d_{n}(h_{k}[{f}]) ≠ C({d}+{k}-1,{k})"));
                }
            }
        }
    }

    let pieces: Vec<SymFunc> = [vec![1], vec![2], vec![1, 1]]
        .into_iter()
        .map(|p| s(&Partition::new(p).expect("valid")))
        .collect::<Result<_>>()?;
    for f in &pieces {
        for g in &pieces {
            let deg = f.degree().unwrap_or(0).max(g.degree().unwrap_or(0));
            for k in 0..=BOUND / deg {
                checks += 1;
                let lhs = plethysm_e(k, &f.add(g)?)?;
                let mut rhs = SymFunc::zero(Basis::Schur, BOUND);
                for i in 0..=k {
                    rhs = rhs.add(&multiply(&plethysm_e(i, f)?, &plethysm_e(k - i, g)?)?)?;
                }
                if lhs != rhs {
                    failures.push(format!("e_{k}[{f} + {g}] does not expand"));
                }
            }
        }
    }
    Ok(report(
        "c9_symfunc_consistency",
        failures,
        json!({"checks": checks, "max_degree": BOUND, "max_n": 3}),
    ))
}

/// `C(d + k − 1, k)`, the dimension of `Sym^k` of a `d`-dimensional space.
fn multichoose(d: u64, k: u64) -> u64 {
    if k == 0 {
        1
    } else if d == 0 {
        0
    } else {
        binomial(d + k - 1, k)
    }
}
