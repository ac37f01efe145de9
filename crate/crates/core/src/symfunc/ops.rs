//! Conversions, scalar products, the Pieri rule, evaluation at permutation
//! matrix eigenvalues, Frobenius images and the plethysm pairing.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::combinat::{enumerate_partitions, z_mu, Partition};
use crate::{rat_int, Rational};

use super::character::{character, SymFuncError};
use super::expr::{Basis, SymFuncExpr};

/// Power sum expansion of the degree-`r` homogeneous generator, from the
/// Newton recurrence `r h_r = sum_{k=1}^{r} p_k h_{r-k}`.
pub fn h_to_p(r: u32) -> SymFuncExpr {
    newton_table(r, false)[r as usize].clone()
}

/// Power sum expansion of the degree-`r` elementary generator, from
/// `r e_r = sum_{k=1}^{r} (-1)^{k-1} p_k e_{r-k}`.
pub fn e_to_p(r: u32) -> SymFuncExpr {
    newton_table(r, true)[r as usize].clone()
}

fn newton_table(max: u32, elementary: bool) -> Vec<SymFuncExpr> {
    let mut table = vec![SymFuncExpr::one(Basis::P)];
    for r in 1..=max {
        let mut acc = SymFuncExpr::zero(Basis::P);
        for k in 1..=r {
            let pk = SymFuncExpr::generator(Basis::P, k);
            let term = pk.mul(&table[(r - k) as usize]);
            let sign = if elementary && k % 2 == 0 { -1 } else { 1 };
            acc = acc.add(&term.scale(&rat_int(sign)));
        }
        table.push(acc.scale(&Rational::new(1.into(), r.into())));
    }
    table
}

/// Rewrite an expression in the power sum basis.  Schur terms go through
/// the character expansion; `h` and `e` terms through the Newton recurrences
/// and multiplicativity.
pub fn to_p_basis(expr: &SymFuncExpr) -> SymFuncExpr {
    match expr.basis() {
        Basis::P => expr.clone(),
        Basis::S => {
            let mut out = SymFuncExpr::zero(Basis::P);
            for (idx, c) in expr.terms() {
                out = out.add(&schur_to_p(idx).scale(c));
            }
            out
        }
        b => {
            let max = expr
                .terms()
                .flat_map(|(idx, _)| idx.parts().iter().copied())
                .max()
                .unwrap_or(0);
            let table = newton_table(max, b == Basis::E);
            let mut out = SymFuncExpr::zero(Basis::P);
            for (idx, c) in expr.terms() {
                let mut prod = SymFuncExpr::one(Basis::P);
                for &part in idx.parts() {
                    prod = prod.mul(&table[part as usize]);
                }
                out = out.add(&prod.scale(c));
            }
            out
        }
    }
}

/// `s_lambda = sum_mu chi^lambda(mu) p_mu / z_mu`.
pub fn schur_to_p(lambda: &Partition) -> SymFuncExpr {
    let n = lambda.size();
    let mut out = SymFuncExpr::zero(Basis::P);
    for mu in enumerate_partitions(n, None) {
        let chi = character(lambda, &mu).expect("sizes agree by construction");
        if chi.is_zero() {
            continue;
        }
        out.add_term(mu.clone(), Rational::new(chi, z_mu(&mu)));
    }
    out
}

/// Inverse transform on each homogeneous component, using
/// `p_mu = sum_lambda chi^lambda(mu) s_lambda`.
pub fn p_to_schur(expr: &SymFuncExpr) -> SymFuncExpr {
    assert_eq!(
        expr.basis(),
        Basis::P,
        "input must be in the power sum basis"
    );
    let mut out = SymFuncExpr::zero(Basis::S);
    for degree in expr.degrees() {
        let component = expr.homogeneous_component(degree);
        for lambda in enumerate_partitions(degree, None) {
            let mut coeff = Rational::zero();
            for (mu, c) in component.terms() {
                let chi = character(&lambda, mu).expect("sizes agree");
                coeff += c * Rational::from_integer(chi);
            }
            out.add_term(lambda, coeff);
        }
    }
    out
}

/// The Hall scalar product, `<p_lambda, p_mu> = z_mu [lambda = mu]` extended
/// bilinearly.  Both arguments are converted to the power sum basis.
pub fn hall_inner(f: &SymFuncExpr, g: &SymFuncExpr) -> Rational {
    let fp = to_p_basis(f);
    let gp = to_p_basis(g);
    let mut acc = Rational::zero();
    for (idx, cf) in fp.terms() {
        let cg = gp.coeff(idx);
        if cg.is_zero() {
            continue;
        }
        acc += cf * cg * Rational::from_integer(z_mu(idx));
    }
    acc
}

/// Strip orientation for the Pieri rule: multiplying by `h_r` adds a
/// horizontal strip, multiplying by `e_r` a vertical strip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strip {
    Horizontal,
    Vertical,
}

/// All partitions obtained from `lambda` by adding a strip of `r` cells with
/// at most one cell per column (horizontal) or per row (vertical).
/// Deterministic order: rows are filled greedily from the top of the diagram.
pub fn pieri(strip: Strip, r: u32, lambda: &Partition) -> Vec<Partition> {
    match strip {
        Strip::Horizontal => horizontal_strip_additions(lambda, r),
        Strip::Vertical => vertical_strip_additions(lambda, r),
    }
}

fn horizontal_strip_additions(lambda: &Partition, r: u32) -> Vec<Partition> {
    // New rows interlace the old ones: mu_1 >= lambda_1 >= mu_2 >= lambda_2 ...
    let mut out = Vec::new();
    let rows = lambda.len() + 1;
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        row: usize,
        rows: usize,
        lambda: &Partition,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows {
            if remaining == 0 {
                out.push(Partition::from_unsorted(current));
            }
            return;
        }
        let lo = lambda.part(row);
        let hi = if row == 0 {
            lambda.part(0) + remaining
        } else {
            // bounded by the previous *old* row for the interlacing condition
            lambda.part(row - 1).min(lo + remaining)
        };
        for v in (lo..=hi).rev() {
            current.push(v);
            rec(row + 1, rows, lambda, remaining - (v - lo), current, out);
            current.pop();
        }
    }
    rec(0, rows, lambda, r, &mut current, &mut out);
    out
}

fn vertical_strip_additions(lambda: &Partition, r: u32) -> Vec<Partition> {
    // Each row grows by at most one cell; the result must stay a partition.
    let mut out = Vec::new();
    let rows = lambda.len() + r as usize;
    let mut current: Vec<u32> = Vec::new();
    fn rec(
        row: usize,
        rows: usize,
        lambda: &Partition,
        remaining: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == rows || (lambda.part(row) == 0 && remaining == 0) {
            if remaining == 0 {
                out.push(Partition::from_unsorted(current));
            }
            return;
        }
        let base = lambda.part(row);
        let prev = if row == 0 { u32::MAX } else { current[row - 1] };
        // grow this row by one cell
        if remaining > 0 && base < prev {
            current.push(base + 1);
            rec(row + 1, rows, lambda, remaining - 1, current, out);
            current.pop();
        }
        // or leave it alone (once a row of size 0 is left alone, stop)
        if (base > 0 || remaining == 0) && base <= prev {
            current.push(base);
            rec(row + 1, rows, lambda, remaining, current, out);
            current.pop();
        }
    }
    rec(0, rows, lambda, r, &mut current, &mut out);
    out
}

/// Evaluate `p_k` at the eigenvalues of a permutation matrix of cycle type
/// `mu`: the parts of `mu` dividing `k` each contribute their own size.
pub fn power_sum_at_cycle_type(k: u32, mu: &Partition) -> i64 {
    mu.parts()
        .iter()
        .filter(|&&p| k % p == 0)
        .map(|&p| p as i64)
        .sum()
}

/// Evaluate a symmetric function at the eigenvalues of a permutation matrix
/// of cycle type `mu`, producing an exact character value.
pub fn eval_at_cycle_type(f: &SymFuncExpr, mu: &Partition) -> Rational {
    let fp = to_p_basis(f);
    let mut acc = Rational::zero();
    for (idx, c) in fp.terms() {
        let mut prod = Rational::one();
        for &k in idx.parts() {
            prod *= rat_int(power_sum_at_cycle_type(k, mu));
        }
        acc += c * prod;
    }
    acc
}

/// The Frobenius image of a class function given by its values on cycle
/// types: `sum_mu values[mu] p_mu / z_mu`, homogeneous of degree `n`.
pub fn frobenius_from_values(
    values: &BTreeMap<Partition, Rational>,
    n: usize,
) -> Result<SymFuncExpr, SymFuncError> {
    let mut out = SymFuncExpr::zero(Basis::P);
    for mu in enumerate_partitions(n, None) {
        let v = values
            .get(&mu)
            .ok_or_else(|| SymFuncError::MissingCycleType(mu.clone()))?;
        out.add_term(mu.clone(), v / Rational::from_integer(z_mu(&mu)));
    }
    Ok(out)
}

/// The product `h_alpha * e_beta` in the power sum basis: the character of
/// the component of degree `alpha` in the commuting variables and `beta` in
/// the anticommuting ones.
pub fn component_character(alpha: &[u32], beta: &[u32]) -> SymFuncExpr {
    let h = to_p_basis(&SymFuncExpr::generator_product(Basis::H, alpha));
    let e = to_p_basis(&SymFuncExpr::generator_product(Basis::E, beta));
    h.mul(&e)
}

/// Frobenius image of the degree-`(alpha, beta)` component of the polynomial
/// ring in `n x m` commuting and `n x m'` anticommuting variables, expanded
/// in the Schur basis.  The Schur coefficients are the multiplicities of the
/// irreducible modules.
pub fn module_frobenius(n: usize, alpha: &[u32], beta: &[u32]) -> SymFuncExpr {
    let he = component_character(alpha, beta);
    let mut values = BTreeMap::new();
    for mu in enumerate_partitions(n, None) {
        let v = eval_at_cycle_type(&he, &mu);
        values.insert(mu, v);
    }
    let frob = frobenius_from_values(&values, n).expect("all cycle types present");
    p_to_schur(&frob)
}

/// Read a Schur expansion as a multiplicity table.
///
/// Panics if some coefficient is not a non-negative integer, which would
/// mean the expression is not the Frobenius image of a genuine module.
pub fn schur_multiplicities(expr: &SymFuncExpr) -> BTreeMap<Partition, i64> {
    assert_eq!(expr.basis(), Basis::S, "input must be in the Schur basis");
    expr.terms()
        .map(|(lambda, c)| {
            assert!(
                c.is_integer() && !c.is_negative(),
                "Schur coefficient at {lambda} is {c}, not a multiplicity"
            );
            (
                lambda.clone(),
                i64::try_from(&c.to_integer()).expect("multiplicity fits in i64"),
            )
        })
        .collect()
}

/// Multiplicity of the irreducible indexed by `lambda` (a partition of `n`)
/// in the component of multidegree `a` of the ring of commuting variables
/// only, via the plethysm pairing `< h_a, s_lambda[1 + h_1 + h_2 + ...] >`.
///
/// The inner sum is truncated at total degree `|a|`, which is all the Hall
/// pairing against `h_a` can see.
pub fn plethysm_multiplicity(a: &[u32], lambda: &Partition, n: usize) -> i64 {
    assert_eq!(lambda.size(), n, "lambda must be a partition of n");
    let degree: usize = a.iter().map(|&x| x as usize).sum();
    // g = h_1 + ... + h_degree in the power sum basis.
    let mut g = SymFuncExpr::zero(Basis::P);
    for r in 1..=degree as u32 {
        g = g.add(&h_to_p(r));
    }
    // omega_k = p_k[1 + g]: indices scale by k, constants pass through.
    let omega = |k: u32| -> SymFuncExpr {
        let mut out = SymFuncExpr::one(Basis::P);
        for (idx, c) in g.terms() {
            if idx.size() * k as usize > degree {
                continue;
            }
            let scaled: Vec<u32> = idx.parts().iter().map(|&p| p * k).collect();
            out.add_term(Partition::from_unsorted(&scaled), c.clone());
        }
        out
    };
    // s_lambda[1 + g] = sum_mu chi^lambda(mu)/z_mu prod_i omega_{mu_i}
    let mut plethysm = SymFuncExpr::zero(Basis::P);
    for mu in enumerate_partitions(n, None) {
        let chi = character(lambda, &mu).expect("sizes agree");
        if chi.is_zero() {
            continue;
        }
        let mut prod = SymFuncExpr::one(Basis::P);
        for &k in mu.parts() {
            prod = prod.mul_truncated(&omega(k), Some(degree));
        }
        plethysm = plethysm.add(&prod.scale(&Rational::new(chi, z_mu(&mu))));
    }
    let ha = SymFuncExpr::generator_product(Basis::H, a);
    let value = hall_inner(&ha, &plethysm);
    assert!(
        value.is_integer() && !value.is_negative(),
        "plethysm multiplicity must be a non-negative integer, got {value}"
    );
    let num = value.to_integer();
    i64::try_from(&num).expect("multiplicity fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn half() -> Rational {
        Rational::new(1.into(), 2.into())
    }

    #[test]
    fn newton_base_cases() {
        assert_eq!(h_to_p(1), SymFuncExpr::generator(Basis::P, 1));
        let e2 = e_to_p(2);
        assert_eq!(e2.coeff(&pt("[1,1]")), half());
        assert_eq!(e2.coeff(&pt("[2]")), -half());
        let h2 = h_to_p(2);
        assert_eq!(h2.coeff(&pt("[1,1]")), half());
        assert_eq!(h2.coeff(&pt("[2]")), half());
    }

    #[test]
    fn schur_expansions() {
        assert_eq!(schur_to_p(&pt("[1]")), SymFuncExpr::generator(Basis::P, 1));
        // s_2 = h_2
        assert_eq!(schur_to_p(&pt("[2]")), h_to_p(2));
        // s_{1,1} = e_2
        assert_eq!(schur_to_p(&pt("[1,1]")), e_to_p(2));
    }

    #[test]
    fn schur_round_trip_degree_six() {
        for lambda in enumerate_partitions(6, None) {
            let back = p_to_schur(&schur_to_p(&lambda));
            assert_eq!(back, SymFuncExpr::basis_element(Basis::S, lambda.clone()));
        }
    }

    #[test]
    fn hall_inner_on_power_sums() {
        let p21 = SymFuncExpr::generator_product(Basis::P, &[2, 1]);
        let p111 = SymFuncExpr::generator_product(Basis::P, &[1, 1, 1]);
        assert_eq!(hall_inner(&p21, &p21), rat_int(2));
        assert_eq!(hall_inner(&p21, &p111), rat_int(0));
    }

    #[test]
    fn schur_functions_are_orthonormal() {
        for lambda in enumerate_partitions(5, None) {
            for mu in enumerate_partitions(5, None) {
                let sl = SymFuncExpr::basis_element(Basis::S, lambda.clone());
                let sm = SymFuncExpr::basis_element(Basis::S, mu.clone());
                let expected = rat_int(if lambda == mu { 1 } else { 0 });
                assert_eq!(hall_inner(&sl, &sm), expected, "{lambda} {mu}");
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            pieri(Strip::Horizontal, 1, &pt("[1]")),
            vec![pt("[2]"), pt("[1,1]")]
        );
        assert_eq!(
            pieri(Strip::Vertical, 2, &pt("[1]")),
            vec![pt("[2,1]"), pt("[1,1,1]")]
        );
        assert_eq!(pieri(Strip::Horizontal, 0, &pt("[3,1]")), vec![pt("[3,1]")]);
    }

    #[test]
    fn pieri_matches_schur_products() {
        // supports of h_r * s_lambda via characters, coefficients all 1
        for r in 0..=4u32 {
            for size in 0..=6usize {
                for lambda in enumerate_partitions(size, None) {
                    let hr = to_p_basis(&SymFuncExpr::generator(Basis::H, r));
                    let prod = p_to_schur(&hr.mul(&schur_to_p(&lambda)));
                    let mut support = prod.support();
                    for idx in &support {
                        assert_eq!(prod.coeff(idx), rat_int(1));
                    }
                    let mut expected = pieri(Strip::Horizontal, r, &lambda);
                    support.sort();
                    expected.sort();
                    assert_eq!(support, expected, "h_{r} * s_{lambda}");
                }
            }
        }
    }

    #[test]
    fn eval_examples_square() {
        let s2 = SymFuncExpr::basis_element(Basis::S, pt("[2]"));
        assert_eq!(eval_at_cycle_type(&s2, &pt("[1,1,1]")), rat_int(6));
        assert_eq!(eval_at_cycle_type(&s2, &pt("[2,1]")), rat_int(2));
        assert_eq!(eval_at_cycle_type(&s2, &pt("[3]")), rat_int(0));
    }

    #[test]
    fn frobenius_recovers_power_sum_indicator() {
        // values mu -> z_mu0 [mu = mu0] give exactly p_{mu0}
        let mu0 = pt("[2,1]");
        let mut values = BTreeMap::new();
        for mu in enumerate_partitions(3, None) {
            let v = if mu == mu0 {
                Rational::from_integer(z_mu(&mu0))
            } else {
                Rational::zero()
            };
            values.insert(mu, v);
        }
        let f = frobenius_from_values(&values, 3).unwrap();
        assert_eq!(f, SymFuncExpr::generator_product(Basis::P, &[2, 1]));
    }

    #[test]
    fn frobenius_of_explicit_traces() {
        // traces 2, 0 on the two classes of S_2: the permutation module
        let mut values = BTreeMap::new();
        values.insert(pt("[1,1]"), rat_int(2));
        values.insert(pt("[2]"), rat_int(0));
        let f = frobenius_from_values(&values, 2).unwrap();
        assert_eq!(f, SymFuncExpr::generator_product(Basis::P, &[1, 1]));
        // traces 1, -1: the sign module
        let mut values = BTreeMap::new();
        values.insert(pt("[1,1]"), rat_int(1));
        values.insert(pt("[2]"), rat_int(-1));
        let f = frobenius_from_values(&values, 2).unwrap();
        assert_eq!(f, schur_to_p(&pt("[1,1]")));
    }

    #[test]
    fn frobenius_missing_value_is_an_error() {
        let values = BTreeMap::new();
        assert!(matches!(
            frobenius_from_values(&values, 2),
            Err(SymFuncError::MissingCycleType(_))
        ));
    }

    #[test]
    fn module_frobenius_small() {
        // one commuting column, degree 1: the permutation module
        let f = module_frobenius(2, &[1], &[]);
        assert_eq!(f.coeff(&pt("[2]")), rat_int(1));
        assert_eq!(f.coeff(&pt("[1,1]")), rat_int(1));
        // one theta column, degree 2: the sign module only
        let f = module_frobenius(2, &[], &[2]);
        assert_eq!(f.coeff(&pt("[2]")), rat_int(0));
        assert_eq!(f.coeff(&pt("[1,1]")), rat_int(1));
        // trivial degree
        let f = module_frobenius(2, &[], &[]);
        assert_eq!(f, SymFuncExpr::basis_element(Basis::S, pt("[2]")));
    }

    #[test]
    fn plethysm_pairing_examples() {
        // invariants of degree 2 in C[x_1,x_2,x_3]: m_{(2)} and m_{(1,1)}
        assert_eq!(plethysm_multiplicity(&[2], &pt("[3]"), 3), 2);
        for n in 1..=5usize {
            let row = Partition::new(vec![n as u32]);
            assert_eq!(plethysm_multiplicity(&[1], &row, n), 1);
            assert_eq!(plethysm_multiplicity(&[0, 0], &row, n), 1);
        }
    }
}
