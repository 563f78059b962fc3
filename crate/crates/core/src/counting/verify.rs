//! The cross-verification suite.
//!
//! Every identity the library computes has an independent second route:
//! formula counts against brute-force flag enumeration, cocharge against
//! tabloid statistics, symbolic recursions against direct evaluation.
//! Each check runs a grid of cells and reports failures as data with
//! counterexample payloads; nothing here panics on a mismatch.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::json;

use crate::algebra::{
    partitions_of, q_factorial_partition, q_factorial_partition_at, ExactScalar, IntPoly, Partition,
};
use crate::error::Result;
use crate::gfq::{
    count_hessenberg_bruteforce, enumerate_types, f_t_bruteforce, f_tau, operator_from_type,
    FieldCtx, SimilarityClassType, DEFAULT_BUDGET,
};
use crate::hessenberg::{csqf, enumerate_hess, modular_triples, HessFn};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{
    enumerate_compatible_fillings, enumerate_tabloids, filling_v, hall_littlewood,
    monomial_coeff_a, nilpotent_poincare, tabloid_val, tabloid_w,
};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Number of grid cells exercised.
    pub cells: usize,
    /// Counterexample payloads, at most a handful.
    pub failures: Vec<String>,
}

impl CheckResult {
    fn collect(name: &str, cells: usize, failures: Vec<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            pass: failures.is_empty(),
            cells,
            failures,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "pass": self.pass,
            "cells": self.cells,
            "failures": self.failures,
        })
    }
}

/// Scale knobs for the suite.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Exhaustive grids run up to this dimension.
    pub n_max: usize,
    /// Prime powers used on the brute-force side.
    pub q_list: Vec<u64>,
    /// Step ceiling for every enumeration.
    pub budget: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_max: 3,
            q_list: vec![2],
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
    pub all_pass: bool,
    /// Set when the configuration made the run vacuous.
    pub note: Option<String>,
}

impl SuiteReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "checks": self.checks.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
            "all_pass": self.all_pass,
            "note": self.note,
        })
    }
}

fn push_failure(failures: &mut Vec<String>, msg: String) {
    if failures.len() < 8 {
        failures.push(msg);
    }
}

/// Formula count versus brute-force flag enumeration, exhaustively over
/// Hessenberg functions and realizable types of each dimension up to
/// `n_max`. Cells fan out to worker threads; the report is a sorted,
/// deterministic merge.
pub fn check_count_vs_bruteforce(n_max: usize, q: u64, budget: u64) -> Result<CheckResult> {
    let ctx = FieldCtx::new(q)?;
    let mut cells: Vec<(HessFn, SimilarityClassType)> = Vec::new();
    for n in 1..=n_max {
        for m in enumerate_hess(n) {
            for tau in enumerate_types(n, q) {
                cells.push((m.clone(), tau));
            }
        }
    }
    let results: Vec<(String, std::result::Result<bool, String>)> = cells
        .par_iter()
        .map(|(m, tau)| {
            let key = format!("m = {m}, tau = {tau}, q = {q}");
            let outcome = (|| {
                let formula = super::count_points(m, tau, q).map_err(|e| e.to_string())?;
                let op = operator_from_type(tau, &ctx).map_err(|e| e.to_string())?;
                let oracle =
                    count_hessenberg_bruteforce(m, &op, budget).map_err(|e| e.to_string())?;
                if formula == BigInt::from(oracle) {
                    Ok(true)
                } else {
                    Err(format!("formula {formula} != bruteforce {oracle}"))
                }
            })();
            (key, outcome)
        })
        .collect();
    let mut failures = Vec::new();
    let mut sorted = results;
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    for (key, outcome) in &sorted {
        if let Err(e) = outcome {
            push_failure(&mut failures, format!("{key}: {e}"));
        }
    }
    Ok(CheckResult::collect(
        &format!("main counting formula vs brute force (n <= {n_max}, q = {q})"),
        sorted.len(),
        failures,
    ))
}

/// Brute-force invariant flag generating functions versus the plethystic
/// Hall-Littlewood product specialized at `q`.
pub fn check_ifgf_specialization(n_max: usize, q: u64, budget: u64) -> Result<CheckResult> {
    let ctx = FieldCtx::new(q)?;
    let qr = BigRational::from(BigInt::from(q));
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for tau in enumerate_types(n, q) {
            cells += 1;
            let op = operator_from_type(&tau, &ctx)?;
            let direct = f_t_bruteforce(&op, budget)?;
            let formula = f_tau(&tau)?.specialize_t(&qr)?.to_monomial()?;
            if !direct.same_function(&formula)? {
                push_failure(
                    &mut failures,
                    format!("tau = {tau}, q = {q}: {direct} != {formula}"),
                );
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("invariant flag generating function specialization (n <= {n_max}, q = {q})"),
        cells,
        failures,
    ))
}

/// The symbolic modular law `(1+t) X_{m1} = t X_{m0} + X_{m2}` for every
/// generated triple.
pub fn check_modular_symbolic(n_max: usize) -> Result<CheckResult> {
    let one_plus_t = ExactScalar::from_poly(IntPoly::from_ints(&[1, 1]));
    let t = ExactScalar::from_poly(IntPoly::t());
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for tr in modular_triples(n) {
            cells += 1;
            let lhs = csqf(&tr.m1)?.scale(&one_plus_t);
            let rhs = csqf(&tr.m0)?.scale(&t).add(&csqf(&tr.m2)?)?;
            if lhs != rhs {
                push_failure(
                    &mut failures,
                    format!(
                        "condition {} at i = {}: m1 = {}, lhs {lhs} != rhs {rhs}",
                        tr.condition, tr.index, tr.m1
                    ),
                );
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("symbolic modular law (n <= {n_max})"),
        cells,
        failures,
    ))
}

/// The numeric modular law `(1+q) f(m1,T) = q f(m0,T) + f(m2,T)` by brute
/// force over every triple and realizable type.
pub fn check_modular_numeric(n_max: usize, q: u64, budget: u64) -> Result<CheckResult> {
    let ctx = FieldCtx::new(q)?;
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        let triples = modular_triples(n);
        for tau in enumerate_types(n, q) {
            let op = operator_from_type(&tau, &ctx)?;
            for tr in &triples {
                cells += 1;
                let f0 = count_hessenberg_bruteforce(&tr.m0, &op, budget)?;
                let f1 = count_hessenberg_bruteforce(&tr.m1, &op, budget)?;
                let f2 = count_hessenberg_bruteforce(&tr.m2, &op, budget)?;
                if (1 + q) * f1 != q * f0 + f2 {
                    push_failure(
                        &mut failures,
                        format!(
                            "tau = {tau}, q = {q}, m1 = {}: (1+q){f1} != q*{f0} + {f2}",
                            tr.m1
                        ),
                    );
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("numeric modular law (n <= {n_max}, q = {q})"),
        cells,
        failures,
    ))
}

/// The modular-law expansion over complete Hessenberg functions agrees
/// with the direct Hall-product count.
pub fn check_recursion_agreement(n_max: usize, q: u64) -> Result<CheckResult> {
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for m in enumerate_hess(n) {
            for tau in enumerate_types(n, q) {
                cells += 1;
                let direct = super::count_points(&m, &tau, q)?;
                let recursed = super::count_via_recursion(&m, &tau, q)?;
                if direct != recursed {
                    push_failure(
                        &mut failures,
                        format!("m = {m}, tau = {tau}, q = {q}: {direct} != {recursed}"),
                    );
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("modular recursion agreement (n <= {n_max}, q = {q})"),
        cells,
        failures,
    ))
}

/// Hall-Littlewood sanity: specialization at `t = 1` to the complete
/// homogeneous function, nonnegative coefficients, dominance vanishing,
/// and the cocharge weight of the superstandard tableau.
pub fn check_hall_littlewood_sanity(n_max: usize) -> Result<CheckResult> {
    let one = BigRational::from(BigInt::from(1));
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for lam in partitions_of(n) {
            cells += 1;
            let hl = hall_littlewood(&lam)?;
            let h = SymFunc::generator(Basis::Homogeneous, &lam);
            if !hl.specialize_t(&one)?.same_function(&h)? {
                push_failure(&mut failures, format!("H~_{lam}(x;1) != h_{lam}"));
            }
            for mu in partitions_of(n) {
                let kf = crate::tableaux::kostka_foulkes(&mu, &lam)?;
                if kf.coeffs().iter().any(|c| c.is_negative()) {
                    push_failure(
                        &mut failures,
                        format!("K~_({mu},{lam}) has a negative coefficient"),
                    );
                }
                if !mu.dominates(&lam) && !kf.is_zero() {
                    push_failure(
                        &mut failures,
                        format!("K~_({mu},{lam}) nonzero without dominance"),
                    );
                }
                if mu == lam {
                    // The unique tableau is superstandard with cocharge
                    // n(lambda); after the standard t -> 1/t twist this is
                    // the classical normalization K_{lambda,lambda} = 1.
                    let weight: usize = lam
                        .parts()
                        .iter()
                        .enumerate()
                        .map(|(i, &p)| i * p as usize)
                        .sum();
                    if kf != IntPoly::monomial(BigInt::from(1), weight) {
                        push_failure(
                            &mut failures,
                            format!("K~_({lam},{lam}) = {kf}, expected t^{weight}"),
                        );
                    }
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("hall-littlewood sanity (|lambda| <= {n_max})"),
        cells,
        failures,
    ))
}

/// The tabloid route: `<H~_lambda, h_mu>` equals the `w` generating
/// polynomial equals the `val` generating polynomial. This certifies the
/// cocharge convention with a statistic that never touches cocharge.
pub fn check_tabloid_route(n_max: usize) -> Result<CheckResult> {
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for lam in partitions_of(n) {
            let hl = hall_littlewood(&lam)?;
            for mu in partitions_of(n) {
                cells += 1;
                let pairing = hl.hall_inner(&SymFunc::generator(Basis::Homogeneous, &mu))?;
                let w_sum = monomial_coeff_a(&lam, &mu)?;
                if pairing != ExactScalar::from_poly(w_sum.clone()) {
                    push_failure(
                        &mut failures,
                        format!("<H~_{lam}, h_{mu}> = {pairing} != w-sum {w_sum}"),
                    );
                }
                let mut val_coeffs: Vec<BigInt> = Vec::new();
                for theta in enumerate_tabloids(&lam, &mu)? {
                    let w = tabloid_w(&theta);
                    let v = tabloid_val(&theta);
                    if w != v {
                        push_failure(
                            &mut failures,
                            format!("w != val on tabloid {}", theta.text()),
                        );
                    }
                    let v = v as usize;
                    if val_coeffs.len() <= v {
                        val_coeffs.resize(v + 1, BigInt::from(0));
                    }
                    val_coeffs[v] += 1;
                }
                if IntPoly::from_coeffs(val_coeffs) != w_sum {
                    push_failure(&mut failures, format!("val-sum != w-sum at ({lam},{mu})"));
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("tabloid statistics route (|lambda| <= {n_max})"),
        cells,
        failures,
    ))
}

/// Compatible fillings: the `v` generating polynomial equals the Hall
/// pairing `<H~_lambda(x;t), omega X_{G(m)}(x;t)>` for every shape and
/// Hessenberg function, including the complete-function intermediate
/// identity with the factorial factor.
pub fn check_filling_route(n_max: usize) -> Result<CheckResult> {
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        let functions = enumerate_hess(n);
        for lam in partitions_of(n) {
            let hl = hall_littlewood(&lam)?;
            for m in &functions {
                cells += 1;
                let direct = nilpotent_poincare(&lam, m)?;
                let pairing = hl.hall_inner(&csqf(m)?.omega()?)?;
                if pairing != ExactScalar::from_poly(direct.clone()) {
                    push_failure(
                        &mut failures,
                        format!("lambda = {lam}, m = {m}: v-sum {direct} != pairing {pairing}"),
                    );
                }
            }
            // Intermediate identity against complete functions:
            // <H~_lambda, h_mu> * prod [mu_i]_t! = v-sum over k_mu.
            for mu in partitions_of(n) {
                cells += 1;
                let km = crate::hessenberg::complete_hess(&mu);
                let vsum = nilpotent_poincare(&lam, &km)?;
                let pairing = hl.hall_inner(&SymFunc::generator(Basis::Homogeneous, &mu))?;
                let lhs = match pairing.to_poly() {
                    Some(p) => &p * &q_factorial_partition(&mu),
                    None => {
                        push_failure(
                            &mut failures,
                            format!("non-polynomial pairing at {lam},{mu}"),
                        );
                        continue;
                    }
                };
                if lhs != vsum {
                    push_failure(
                        &mut failures,
                        format!("lambda = {lam}, mu = {mu}: {lhs} != {vsum}"),
                    );
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("compatible filling route (n <= {n_max})"),
        cells,
        failures,
    ))
}

/// The `v` statistic is exercised against every compatible filling; also
/// verifies the filling count at `t = 1`.
pub fn check_filling_consistency(n_max: usize) -> Result<CheckResult> {
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max.min(4) {
        for lam in partitions_of(n) {
            for m in enumerate_hess(n) {
                cells += 1;
                let fillings = enumerate_compatible_fillings(&lam, &m)?;
                let poly = nilpotent_poincare(&lam, &m)?;
                let total = poly.eval_int(&BigInt::from(1));
                if total != BigInt::from(fillings.len() as u64) {
                    push_failure(
                        &mut failures,
                        format!("lambda = {lam}, m = {m}: counts disagree"),
                    );
                }
                for phi in &fillings {
                    let _ = filling_v(phi, &m);
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("filling enumeration consistency (n <= {})", n_max.min(4)),
        cells,
        failures,
    ))
}

/// Closed form for `m(2) = n` versus the Hall-product count, for every
/// realizable type, plus the polynomial identity of the named
/// three-eigenvalue instance.
pub fn check_codimension_family(n_max: usize, q_list: &[u64]) -> Result<CheckResult> {
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for &q in q_list {
        for n in 2..=n_max {
            for m1 in 1..=n {
                let mut values = vec![n; n];
                values[0] = m1;
                let m = HessFn::new(values).expect("m(2) = n family");
                for tau in enumerate_types(n, q) {
                    cells += 1;
                    let closed = super::count_simple(&m, &tau, q)?;
                    let hall = super::count_points(&m, &tau, q)?;
                    if closed != hall {
                        push_failure(
                            &mut failures,
                            format!("m = {m}, tau = {tau}, q = {q}: {closed} != {hall}"),
                        );
                    }
                }
            }
        }
    }
    // The named instance: three distinct eigenvalues on the path graph
    // give 1 + 4q + q^2; unrealizable fields still satisfy the closed
    // form and the formula extension.
    let m = HessFn::new(vec![2, 3, 3]).unwrap();
    let tau = SimilarityClassType::parse("(1,[1]);(1,[1]);(1,[1])").unwrap();
    for q in [2u64, 3] {
        cells += 1;
        let expect = BigInt::from(1 + 4 * q + q * q);
        let closed = super::count_simple(&m, &tau, q)?;
        let formula = super::count_points_formula(&m, &tau, q)?;
        if closed != expect || formula != expect {
            push_failure(
                &mut failures,
                format!("named instance at q = {q}: closed {closed}, formula {formula}, expected {expect}"),
            );
        }
    }
    Ok(CheckResult::collect(
        &format!("codimension-one closed form (n <= {n_max}, q in {q_list:?})"),
        cells,
        failures,
    ))
}

/// Palindromicity of regular Poincaré polynomials, nonnegativity of all
/// Poincaré coefficients, and exact interpolation of split-type
/// brute-force counts through the Poincaré polynomial.
pub fn check_poincare_properties(
    n_max: usize,
    interp_n_max: usize,
    budget: u64,
) -> Result<CheckResult> {
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for m in enumerate_hess(n) {
            let x = csqf(&m)?.omega()?;
            for mu in partitions_of(n) {
                cells += 1;
                let h = SymFunc::generator(Basis::Homogeneous, &mu);
                let value = h.hall_inner(&x)?;
                let Some(poly) = value.to_poly() else {
                    push_failure(
                        &mut failures,
                        format!("non-polynomial at m = {m}, mu = {mu}"),
                    );
                    continue;
                };
                if poly.coeffs().iter().any(|c| c.is_negative()) {
                    push_failure(
                        &mut failures,
                        format!("negative Betti number at m = {m}, mu = {mu}"),
                    );
                }
                if !poly.is_palindromic() {
                    push_failure(
                        &mut failures,
                        format!("non-palindromic regular polynomial at m = {m}, mu = {mu}: {poly}"),
                    );
                }
            }
        }
    }
    // Interpolation: split types, degree + 1 prime fields that realize
    // the type, counts by brute force.
    for n in 1..=interp_n_max {
        for m in enumerate_hess(n) {
            // A large prime puts no realizability constraint on the type
            // shapes; fields are chosen per type below.
            for tau in enumerate_types(n, 997) {
                if !tau.is_split() {
                    continue;
                }
                cells += 1;
                let jordan = tau.jordan_type();
                let report = super::poincare(&m, &jordan)?;
                let needed = report.degree.unwrap_or(0) + 1;
                let r = jordan.len() as u64;
                let qs: Vec<u64> = primes().filter(|&p| p >= r).take(needed).collect();
                let mut points = Vec::new();
                let mut ok = true;
                for &q in &qs {
                    let ctx = match FieldCtx::new(q) {
                        Ok(c) => c,
                        Err(e) => {
                            push_failure(&mut failures, format!("field {q}: {e}"));
                            ok = false;
                            break;
                        }
                    };
                    let op = operator_from_type(&tau, &ctx)?;
                    let count = count_hessenberg_bruteforce(&m, &op, budget)?;
                    points.push((q, BigInt::from(count)));
                }
                if !ok {
                    continue;
                }
                match super::interpolate_points(&points) {
                    Ok(fit) => {
                        if fit != report.poly {
                            push_failure(
                                &mut failures,
                                format!(
                                    "m = {m}, tau = {tau}: interpolated {fit} != poincare {}",
                                    report.poly
                                ),
                            );
                        }
                    }
                    Err(e) => push_failure(&mut failures, format!("m = {m}, tau = {tau}: {e}")),
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!(
            "poincare palindromicity and interpolation (n <= {n_max}, interpolation n <= {interp_n_max})"
        ),
        cells,
        failures,
    ))
}

/// Small iterator over primes, enough for interpolation nodes.
fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| {
        let mut d = 2;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 1;
        }
        true
    })
}

/// The named small values, each confirmed against the brute-force oracle
/// rather than asserted from memory.
pub fn check_named_values(budget: u64) -> Result<CheckResult> {
    let mut failures = Vec::new();
    let m = HessFn::new(vec![2, 3, 3]).unwrap();

    // Permutohedral surface: 1 + 4t + t^2, brute-forced over three fields
    // that realize three distinct eigenvalues.
    let jordan = vec![Partition::row(1), Partition::row(1), Partition::row(1)];
    let report = super::poincare(&m, &jordan)?;
    if report.poly != IntPoly::from_ints(&[1, 4, 1]) {
        push_failure(&mut failures, format!("permutohedral poly {}", report.poly));
    }
    let tau3 = SimilarityClassType::parse("(1,[1]);(1,[1]);(1,[1])").unwrap();
    let mut points = Vec::new();
    for q in [3u64, 5, 7] {
        let ctx = FieldCtx::new(q)?;
        let op = operator_from_type(&tau3, &ctx)?;
        let count = count_hessenberg_bruteforce(&m, &op, budget)?;
        points.push((q, BigInt::from(count)));
        if BigInt::from(count) != report.poly.eval_int(&BigInt::from(q)) {
            push_failure(
                &mut failures,
                format!("permutohedral count at q = {q}: {count}"),
            );
        }
    }
    if super::interpolate_points(&points)? != report.poly {
        push_failure(&mut failures, "permutohedral interpolation mismatch".into());
    }

    // Regular nilpotent on the path graph: 1 + 2t + t^2.
    let reg = super::poincare(&m, &[Partition::row(3)])?;
    if reg.poly != IntPoly::from_ints(&[1, 2, 1]) {
        push_failure(
            &mut failures,
            format!("regular nilpotent poly {}", reg.poly),
        );
    }
    let tau_nilp = SimilarityClassType::parse("(1,[3])").unwrap();
    for q in [2u64, 3, 5] {
        let ctx = FieldCtx::new(q)?;
        let op = operator_from_type(&tau_nilp, &ctx)?;
        let count = count_hessenberg_bruteforce(&m, &op, budget)?;
        if BigInt::from(count) != reg.poly.eval_int(&BigInt::from(q)) {
            push_failure(
                &mut failures,
                format!("nilpotent count at q = {q}: {count}"),
            );
        }
    }

    // Irreducible cubic over F_2: 7 points.
    let tau_irr = SimilarityClassType::parse("(3,[1])").unwrap();
    let formula = super::count_points(&m, &tau_irr, 2)?;
    let ctx = FieldCtx::new(2)?;
    let op = operator_from_type(&tau_irr, &ctx)?;
    let oracle = count_hessenberg_bruteforce(&m, &op, budget)?;
    if formula != BigInt::from(7) || oracle != 7 {
        push_failure(
            &mut failures,
            format!("irreducible cubic: formula {formula}, oracle {oracle}"),
        );
    }

    Ok(CheckResult::collect("named small values", 3, failures))
}

/// `X_{G(k_mu)}` against the clique product, and the complete-function
/// count against `prod [mu_i]_q! <F_tau(q), h_mu>`.
pub fn check_clique_expansion(n_max: usize, q_list: &[u64]) -> Result<CheckResult> {
    let mut cells = 0usize;
    let mut failures = Vec::new();
    for n in 1..=n_max {
        for mu in partitions_of(n) {
            let km = crate::hessenberg::complete_hess(&mu);
            let x = csqf(&km)?;
            let expected = SymFunc::generator(Basis::Elementary, &mu)
                .scale(&ExactScalar::from_poly(q_factorial_partition(&mu)));
            cells += 1;
            if !x.same_function(&expected)? {
                push_failure(&mut failures, format!("clique expansion at mu = {mu}"));
            }
            for &q in q_list {
                let qr = BigRational::from(BigInt::from(q));
                for tau in enumerate_types(n, q) {
                    cells += 1;
                    let lhs = super::count_points(&km, &tau, q)?;
                    let pairing = f_tau(&tau)?
                        .specialize_t(&qr)?
                        .hall_inner(&SymFunc::generator(Basis::Homogeneous, &mu))?;
                    let factorial = ExactScalar::from_rational(q_factorial_partition_at(&mu, &qr));
                    let rhs = pairing.mul(&factorial);
                    if ExactScalar::from_bigint(lhs.clone()) != rhs {
                        push_failure(
                            &mut failures,
                            format!("mu = {mu}, tau = {tau}, q = {q}: {lhs} != {rhs}"),
                        );
                    }
                }
            }
        }
    }
    Ok(CheckResult::collect(
        &format!("clique expansion (n <= {n_max})"),
        cells,
        failures,
    ))
}

/// Run every check at the configured scale.
pub fn verify_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.n_max == 0 {
        return Ok(SuiteReport {
            checks: Vec::new(),
            all_pass: true,
            note: Some("vacuous: n_max = 0".into()),
        });
    }
    if config.q_list.is_empty() {
        return Ok(SuiteReport {
            checks: Vec::new(),
            all_pass: true,
            note: Some("no fields tested".into()),
        });
    }
    let mut checks = Vec::new();
    for &q in &config.q_list {
        checks.push(check_count_vs_bruteforce(config.n_max, q, config.budget)?);
        checks.push(check_ifgf_specialization(config.n_max, q, config.budget)?);
        checks.push(check_modular_numeric(
            config.n_max.min(4),
            q,
            config.budget,
        )?);
        checks.push(check_recursion_agreement(config.n_max, q)?);
    }
    checks.push(check_modular_symbolic(config.n_max)?);
    checks.push(check_hall_littlewood_sanity(config.n_max)?);
    checks.push(check_tabloid_route(config.n_max)?);
    checks.push(check_filling_route(config.n_max.min(4))?);
    checks.push(check_filling_consistency(config.n_max)?);
    checks.push(check_codimension_family(config.n_max, &config.q_list)?);
    checks.push(check_poincare_properties(
        config.n_max,
        config.n_max.min(3),
        config.budget,
    )?);
    checks.push(check_clique_expansion(config.n_max, &config.q_list)?);
    checks.push(check_named_values(config.budget)?);
    let all_pass = checks.iter().all(|c| c.pass);
    Ok(SuiteReport {
        checks,
        all_pass,
        note: None,
    })
}
