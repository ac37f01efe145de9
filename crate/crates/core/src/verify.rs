//! Cross-method verification suites.
//!
//! Each suite runs one identity over a configurable grid and reports the
//! number of cases checked together with any counterexamples found.  The
//! command line `verify` subcommand and the acceptance tests both drive
//! these; they are deliberately written against the public API of the other
//! modules so that every identity really does cross two independent
//! computation paths.

use std::collections::BTreeMap;

use num_traits::Signed;

use crate::combinat::{
    enumerate_multiset_partitions, enumerate_partitions, DegreeVector, Partition,
};
use crate::invariants::{
    check_relations, exp_of_negated_power_series, expand_elementary_series, normal_form,
    reduce_power_sum, verify_spanning, PExpression,
};
use crate::superpoly::{module_character, multiplicity_from_traces, power_sum, Dims};
use crate::symfunc::{
    component_character, eval_at_cycle_type, hall_inner, module_frobenius, plethysm_multiplicity,
    to_p_basis, Basis, SymFuncExpr,
};
use crate::{fillings, rat_int, tableaux};

/// Grid bounds shared by the suites.
#[derive(Clone, Copy, Debug)]
pub struct GridBounds {
    /// Largest symmetric group degree `n`.
    pub max_n: usize,
    /// Largest number of commuting columns.
    pub max_m: usize,
    /// Largest number of anticommuting columns.
    pub max_m_bar: usize,
    /// Largest total degree `|alpha| + |beta|`.
    pub max_weight: usize,
    /// Largest size of the cycle type `mu` in the filling identities.
    pub max_mu: usize,
}

impl Default for GridBounds {
    fn default() -> Self {
        GridBounds {
            max_n: 4,
            max_m: 2,
            max_m_bar: 2,
            max_weight: 3,
            max_mu: 5,
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// All degree vectors `(alpha, beta)` with the given column counts and
/// `|alpha| + |beta| <= weight`.
pub fn degree_grid(m: usize, m_bar: usize, weight: usize) -> Vec<DegreeVector> {
    let mut out = Vec::new();
    let mut alpha = vec![0u32; m];
    let mut beta = vec![0u32; m_bar];
    fn rec(
        slot: usize,
        alpha: &mut Vec<u32>,
        beta: &mut Vec<u32>,
        left: usize,
        out: &mut Vec<DegreeVector>,
    ) {
        let total = alpha.len() + beta.len();
        if slot == total {
            out.push(DegreeVector::new(alpha.clone(), beta.clone()));
            return;
        }
        for v in 0..=left as u32 {
            if slot < alpha.len() {
                alpha[slot] = v;
            } else {
                beta[slot - alpha.len()] = v;
            }
            rec(slot + 1, alpha, beta, left - v as usize, out);
        }
        if slot < alpha.len() {
            alpha[slot] = 0;
        } else {
            beta[slot - alpha.len()] = 0;
        }
    }
    rec(0, &mut alpha, &mut beta, weight, &mut out);
    out
}

/// Column-count pairs up to the bounds, including zero columns.
fn column_grid(bounds: &GridBounds) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for m in 0..=bounds.max_m {
        for m_bar in 0..=bounds.max_m_bar {
            out.push((m, m_bar));
        }
    }
    out
}

/// The three decomposition pipelines agree: tableau counts, Schur
/// coefficients of the Frobenius image, and brute-force traces.  Also checks
/// that every Schur coefficient is a non-negative integer.
pub fn suite_decomposition_triangle(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("decomposition-triangle");
    for n in 1..=bounds.max_n {
        let lambdas = enumerate_partitions(n, None);
        for (m, m_bar) in column_grid(bounds) {
            let dims = Dims::new(n, m, m_bar);
            for content in degree_grid(m, m_bar, bounds.max_weight) {
                let frob = module_frobenius(n, &content.alpha, &content.beta);
                let traces = module_character(dims, &content.alpha, &content.beta);
                for lambda in &lambdas {
                    result.cases += 1;
                    let by_tableaux = tableaux::multiplicity(lambda, &content, n) as i64;
                    let coeff = frob.coeff(lambda);
                    if !coeff.is_integer() || coeff.is_negative() {
                        result.failures.push(format!(
                            "frobenius coefficient of s{lambda} at n={n} alpha={:?} beta={:?} is {coeff}",
                            content.alpha, content.beta
                        ));
                        continue;
                    }
                    let by_symfunc = i64::try_from(&coeff.to_integer()).unwrap();
                    let by_brute = multiplicity_from_traces(&traces, lambda);
                    if by_tableaux != by_symfunc || by_symfunc != by_brute {
                        result.failures.push(format!(
                            "n={n} alpha={:?} beta={:?} lambda={lambda}: tableaux {by_tableaux}, symbolic {by_symfunc}, brute {by_brute}",
                            content.alpha, content.beta
                        ));
                    }
                }
            }
        }
    }
    result
}

/// Traces of explicit permutation matrices equal the symmetric function
/// character `h_alpha e_beta` evaluated at the matrix eigenvalues.
pub fn suite_component_character(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("component-character");
    for n in 1..=bounds.max_n {
        for (m, m_bar) in column_grid(bounds) {
            let dims = Dims::new(n, m, m_bar);
            for content in degree_grid(m, m_bar, bounds.max_weight) {
                let he = component_character(&content.alpha, &content.beta);
                let traces = module_character(dims, &content.alpha, &content.beta);
                for (mu, &trace) in &traces {
                    result.cases += 1;
                    let symbolic = eval_at_cycle_type(&he, mu);
                    if symbolic != rat_int(trace) {
                        result.failures.push(format!(
                            "n={n} alpha={:?} beta={:?} mu={mu}: trace {trace}, symbolic {symbolic}",
                            content.alpha, content.beta
                        ));
                    }
                }
            }
        }
    }
    result
}

/// Row-constant filling counts match the evaluations of `h_alpha` and
/// `e_beta` at permutation matrix eigenvalues.
pub fn suite_filling_evaluations(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("filling-evaluations");
    let columns = bounds.max_m.max(bounds.max_m_bar).max(2);
    let weights: Vec<Vec<u32>> = degree_grid(columns, 0, bounds.max_weight)
        .into_iter()
        .map(|dv| dv.alpha)
        .collect();
    for k in 0..=bounds.max_mu {
        for mu in enumerate_partitions(k, None) {
            for vector in &weights {
                result.cases += 2;
                let h = SymFuncExpr::generator_product(Basis::H, vector);
                let expected_h = eval_at_cycle_type(&h, &mu);
                let counted = fillings::count_unbarred_fillings(vector, &mu);
                if expected_h != rat_int(counted as i64) {
                    result.failures.push(format!(
                        "h_{vector:?} at mu={mu}: fillings {counted}, symbolic {expected_h}"
                    ));
                }
                let e = SymFuncExpr::generator_product(Basis::E, vector);
                let expected_e = eval_at_cycle_type(&e, &mu);
                let signed = fillings::signed_barred_fillings(vector, &mu);
                if expected_e != rat_int(signed) {
                    result.failures.push(format!(
                        "e_{vector:?} at mu={mu}: fillings {signed}, symbolic {expected_e}"
                    ));
                }
            }
        }
    }
    result
}

/// Signed counts of row-constant labeled fillings equal the Hall pairings
/// `< h_{|mu|-|lambda|-|tau|} h_lambda e_tau, p_mu >`.
pub fn suite_row_pairings(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("row-pairings");
    for k in 0..=bounds.max_mu {
        for mu in enumerate_partitions(k, None) {
            for l_size in 0..=k {
                for t_size in 0..=(k - l_size) {
                    for lambda in enumerate_partitions(l_size, None) {
                        for tau in enumerate_partitions(t_size, None) {
                            result.cases += 1;
                            let combinatorial = fillings::pairing_by_fillings(&lambda, &tau, &mu);
                            let filler = (k - l_size - t_size) as u32;
                            let mut index = vec![filler];
                            index.extend_from_slice(lambda.parts());
                            let h = SymFuncExpr::generator_product(Basis::H, &index);
                            let e = SymFuncExpr::generator_product(Basis::E, tau.parts());
                            let product = to_p_basis(&h).mul(&to_p_basis(&e));
                            let pmu = SymFuncExpr::basis_element(Basis::P, mu.clone());
                            let pairing = hall_inner(&product, &pmu);
                            if pairing != rat_int(combinatorial) {
                                result.failures.push(format!(
                                    "lambda={lambda} tau={tau} mu={mu}: fillings {combinatorial}, pairing {pairing}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    result
}

/// Mixed fillings grouped by their cell label partition reproduce, group by
/// group, the pairings driven by the multiplicity partitions; their total is
/// the product evaluation `h_alpha e_beta` at the eigenvalues.
pub fn suite_grouped_fillings(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("grouped-fillings");
    for k in 1..=bounds.max_mu.min(4) {
        for mu in enumerate_partitions(k, None) {
            for content in degree_grid(bounds.max_m, bounds.max_m_bar, bounds.max_weight.min(3)) {
                let groups = fillings::mixed_fillings_by_msp(&content.alpha, &content.beta, &mu);
                // group-by-group against the abstract pairing
                for pi in enumerate_multiset_partitions(&content, mu.size(), false) {
                    result.cases += 1;
                    let (even, odd) = pi.multiplicity_partitions();
                    let expected = fillings::pairing_by_fillings(&even, &odd, &mu);
                    let got = groups.get(&pi).copied().unwrap_or(0);
                    if got != expected {
                        result.failures.push(format!(
                            "mu={mu} pi={pi}: grouped {got}, pairing {expected}"
                        ));
                    }
                }
                // total against the product of evaluations
                result.cases += 1;
                let he = component_character(&content.alpha, &content.beta);
                let total: i64 = groups.values().sum();
                let expected = eval_at_cycle_type(&he, &mu);
                if expected != rat_int(total) {
                    result.failures.push(format!(
                        "mu={mu} alpha={:?} beta={:?}: grouped total {total}, symbolic {expected}",
                        content.alpha, content.beta
                    ));
                }
            }
        }
    }
    result
}

/// The plethysm pairing (commuting variables only) agrees with the tableau
/// count.
pub fn suite_plethysm(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("plethysm");
    for n in 1..=bounds.max_n {
        for m in 1..=bounds.max_m.max(1) {
            for content in degree_grid(m, 0, bounds.max_weight) {
                for lambda in enumerate_partitions(n, None) {
                    result.cases += 1;
                    let by_plethysm = plethysm_multiplicity(&content.alpha, &lambda, n);
                    let by_tableaux = tableaux::multiplicity(&lambda, &content, n) as i64;
                    if by_plethysm != by_tableaux {
                        result.failures.push(format!(
                            "a={:?} lambda={lambda} n={n}: plethysm {by_plethysm}, tableaux {by_tableaux}",
                            content.alpha
                        ));
                    }
                }
            }
        }
    }
    result
}

/// Long power sums reduce to products of short ones: the rewrite realizes to
/// exactly the original polynomial and its normal form has short parts only.
pub fn suite_reduction(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("reduction");
    for n in 1..=bounds.max_n.min(3) {
        let dims = Dims::new(n, bounds.max_m, bounds.max_m_bar);
        for size in n + 1..=n + 2 {
            for content in degree_grid(bounds.max_m, bounds.max_m_bar, size) {
                if content.total() != size || content.beta.iter().any(|&b| b > 1) {
                    continue;
                }
                let barred: Vec<u32> = content
                    .beta
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| b == 1)
                    .map(|(j, _)| j as u32 + 1)
                    .collect();
                let s = crate::combinat::Multiset::new(&content.alpha, &barred);
                result.cases += 1;
                let reduced = match reduce_power_sum(&s, n) {
                    Ok(r) => r,
                    Err(e) => {
                        result.failures.push(format!("reduce p{s} at n={n}: {e}"));
                        continue;
                    }
                };
                if reduced.realize(dims) != power_sum(&s, dims) {
                    result
                        .failures
                        .push(format!("reduce p{s} at n={n}: realization differs"));
                }
                let (nf, _) = normal_form(&PExpression::symbol(&s), n);
                if nf.max_part_size() > n {
                    result
                        .failures
                        .push(format!("normal form of p{s} at n={n} keeps a long part"));
                } else if nf.realize(dims) != power_sum(&s, dims) {
                    result
                        .failures
                        .push(format!("normal form of p{s} at n={n}: realization differs"));
                }
            }
        }
    }
    result
}

/// Claimed invariant bases are independent and generated by short power
/// sums, per component.
pub fn suite_spanning(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("spanning");
    for n in 1..=bounds.max_n.min(3) {
        for (m, m_bar) in column_grid(bounds) {
            let dims = Dims::new(n, m, m_bar);
            for content in degree_grid(m, m_bar, bounds.max_weight) {
                result.cases += 1;
                let report = verify_spanning(n, &content, dims);
                if !report.ok() {
                    result.failures.push(report.to_string());
                }
            }
        }
    }
    result
}

/// The elementary expansion equals the exponential of the negated power
/// series, coefficient by coefficient, and the sampled sign relations hold.
pub fn suite_duality_and_relations(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("duality-relations");
    for m in 0..=bounds.max_m {
        for m_bar in 0..=bounds.max_m_bar {
            if m + m_bar == 0 {
                continue;
            }
            let degree = bounds.max_weight.max(4);
            let direct = expand_elementary_series(degree, m, m_bar);
            let viaexp = exp_of_negated_power_series(degree, m, m_bar);
            for (key, value) in &direct {
                result.cases += 1;
                let other = viaexp
                    .terms()
                    .get(key)
                    .cloned()
                    .unwrap_or_else(PExpression::zero);
                if *value != other {
                    result
                        .failures
                        .push(format!("duality fails at key {key:?} (m={m}, m'={m_bar})"));
                }
            }
        }
    }
    let relations = check_relations(
        Dims::new(3, bounds.max_m.max(1), bounds.max_m_bar.max(1)),
        3,
    );
    result.cases += relations.cases;
    result
        .failures
        .extend(relations.failures.iter().map(|f| format!("relation: {f}")));
    result
}

/// Multiplicities stabilize: for a fixed degree vector and shapes
/// `(n - k, nu)`, the multiplicity is independent of `n` once
/// `n >= 2(|nu| + k)`.
pub fn suite_stability(bounds: &GridBounds) -> SuiteResult {
    let mut result = SuiteResult::new("stability");
    let max_n = bounds.max_n.max(8);
    for (m, m_bar) in column_grid(bounds) {
        for content in degree_grid(m, m_bar, bounds.max_weight.min(3)) {
            for k in 0..=2usize {
                for nu in enumerate_partitions(k, None) {
                    let threshold = (2 * (nu.size() + k)).max(4);
                    let values: Vec<u64> = (threshold..=max_n)
                        .filter_map(|n| {
                            let head = (n - k) as u32;
                            if head < nu.part(0) {
                                return None;
                            }
                            let mut parts = vec![head];
                            parts.extend_from_slice(nu.parts());
                            let lambda = Partition::new(parts);
                            Some(tableaux::multiplicity(&lambda, &content, n))
                        })
                        .collect();
                    if values.is_empty() {
                        continue;
                    }
                    result.cases += 1;
                    if values.windows(2).any(|w| w[0] != w[1]) {
                        result.failures.push(format!(
                            "multiplicities {values:?} for nu={nu} k={k} alpha={:?} beta={:?}",
                            content.alpha, content.beta
                        ));
                    }
                }
            }
        }
    }
    result
}

/// Run every suite at the given bounds.  With `jobs > 1` the suites run on
/// worker threads; results always come back in the same order.
pub fn run_all_suites(bounds: &GridBounds, jobs: usize) -> Vec<SuiteResult> {
    type Suite = fn(&GridBounds) -> SuiteResult;
    let suites: Vec<Suite> = vec![
        suite_decomposition_triangle,
        suite_component_character,
        suite_filling_evaluations,
        suite_row_pairings,
        suite_grouped_fillings,
        suite_plethysm,
        suite_reduction,
        suite_spanning,
        suite_duality_and_relations,
        suite_stability,
    ];
    if jobs <= 1 {
        return suites.iter().map(|s| s(bounds)).collect();
    }
    let mut results: Vec<Option<SuiteResult>> = vec![None; suites.len()];
    let chunk = suites.len().div_ceil(jobs);
    std::thread::scope(|scope| {
        for (slot, batch) in results.chunks_mut(chunk).zip(suites.chunks(chunk)) {
            scope.spawn(move || {
                for (out, suite) in slot.iter_mut().zip(batch) {
                    *out = Some(suite(bounds));
                }
            });
        }
    });
    results.into_iter().map(|r| r.expect("suite ran")).collect()
}

/// Collapse class-function values to a multiplicity table keyed by shape.
pub fn multiplicity_table(n: usize, content: &DegreeVector) -> BTreeMap<Partition, u64> {
    enumerate_partitions(n, None)
        .into_iter()
        .map(|lambda| {
            let m = tableaux::multiplicity(&lambda, content, n);
            (lambda, m)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> GridBounds {
        GridBounds {
            max_n: 2,
            max_m: 1,
            max_m_bar: 1,
            max_weight: 2,
            max_mu: 3,
        }
    }

    #[test]
    fn all_suites_pass_on_tiny_grid() {
        for result in run_all_suites(&tiny(), 1) {
            assert!(result.ok(), "{}: {:?}", result.name, result.failures);
            assert!(result.cases > 0, "{} ran no cases", result.name);
        }
    }

    #[test]
    fn parallel_run_matches_serial() {
        let serial = run_all_suites(&tiny(), 1);
        let parallel = run_all_suites(&tiny(), 3);
        assert_eq!(serial.len(), parallel.len());
        for (s, p) in serial.iter().zip(&parallel) {
            assert_eq!(s.name, p.name);
            assert_eq!(s.cases, p.cases);
            assert_eq!(s.failures, p.failures);
        }
    }

    #[test]
    fn failures_are_located() {
        // feed the comparison machinery an identity that is wrong on purpose
        // and make sure the counterexample is reported, not swallowed
        let mut result = SuiteResult::new("negative-control");
        let mu: Partition = "[2]".parse().unwrap();
        let wrong = fillings::count_unbarred_fillings(&[2], &mu) + 1;
        let h = SymFuncExpr::generator_product(Basis::H, &[2]);
        let expected = eval_at_cycle_type(&h, &mu);
        result.cases += 1;
        if expected != rat_int(wrong as i64) {
            result
                .failures
                .push(format!("mu={mu}: {wrong} vs {expected}"));
        }
        assert!(!result.ok());
        assert!(result.failures[0].contains("mu=[2]"));
    }

    #[test]
    fn degree_grid_counts() {
        assert_eq!(degree_grid(2, 2, 4).len(), 70);
        assert_eq!(degree_grid(0, 0, 4).len(), 1);
    }
}
