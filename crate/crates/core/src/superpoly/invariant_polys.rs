//! The concrete invariant polynomials: monomial invariants (orbit sums) and
//! power sum generators.

use crate::combinat::{Multiset, MultisetPartition, Permutation};

use super::algebra::{Dims, SuperPolynomial};

/// The distinguished monomial attached to a multiset partition: part `k` (in
/// ascending multiset order) is placed on row `k`, its unbarred letters as
/// x-exponents and its barred letters as theta factors.
pub fn leading_monomial(pi: &MultisetPartition, dims: Dims) -> SuperPolynomial {
    assert!(pi.len() <= dims.n, "more parts than rows");
    let mut poly = SuperPolynomial::one(dims);
    for (row, part) in pi.parts().iter().enumerate() {
        poly = poly.mul(&row_monomial(part, row + 1, dims));
    }
    poly
}

fn row_monomial(part: &Multiset, row: usize, dims: Dims) -> SuperPolynomial {
    let mut poly = SuperPolynomial::one(dims);
    for (j, &c) in part.unbarred_counts().iter().enumerate() {
        for _ in 0..c {
            poly = poly.mul(&SuperPolynomial::x(dims, row, j + 1));
        }
    }
    for &b in part.barred_set() {
        poly = poly.mul(&SuperPolynomial::theta(dims, row, b as usize));
    }
    poly
}

/// The monomial symmetric invariant `m_pi`: the sum, over all placements of
/// the parts of `pi` on distinct rows, of the signed normal form of the
/// placed monomial.  Equivalently the group average `sum_sigma sigma(X)^pi`
/// divided by `(n - l(pi))!`.
///
/// Placements of a repeated odd-parity part cancel in opposite-signed pairs,
/// so such partitions give zero, as does any partition with more parts than
/// rows.  A part of even parity repeated `k` times contributes its monomials
/// with coefficient `k!`, which is exactly what makes products of power sums
/// expand over the `m_pi` with unit leading coefficients on distinct-part
/// partitions.
pub fn monomial_sym(pi: &MultisetPartition, dims: Dims) -> SuperPolynomial {
    if pi.len() > dims.n {
        return SuperPolynomial::zero(dims);
    }
    let parts = pi.parts();
    let mut out = SuperPolynomial::zero(dims);
    let mut rows: Vec<usize> = Vec::with_capacity(parts.len());
    let mut used = vec![false; dims.n];
    place(parts, 0, dims, &mut rows, &mut used, &mut out);
    return out;

    fn place(
        parts: &[Multiset],
        idx: usize,
        dims: Dims,
        rows: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut SuperPolynomial,
    ) {
        if idx == parts.len() {
            let mut poly = SuperPolynomial::one(dims);
            for (part, &row) in parts.iter().zip(rows.iter()) {
                poly = poly.mul(&row_monomial(part, row + 1, dims));
            }
            *out = out.add(&poly);
            return;
        }
        for r in 0..dims.n {
            if used[r] {
                continue;
            }
            used[r] = true;
            rows.push(r);
            place(parts, idx + 1, dims, rows, used, out);
            rows.pop();
            used[r] = false;
        }
    }
}

/// The power sum generator `p_S = sum_r x[r,.]^a th[r,.]`: one term per row,
/// each with coefficient +1 since the theta factors of a single row are
/// already in normal form order.
pub fn power_sum(s: &Multiset, dims: Dims) -> SuperPolynomial {
    let mut out = SuperPolynomial::zero(dims);
    for row in 1..=dims.n {
        out = out.add(&row_monomial(s, row, dims));
    }
    out
}

/// The power sum invariant `p_pi`: product of the generators of the parts,
/// taken in ascending multiset order.
pub fn power_prod(pi: &MultisetPartition, dims: Dims) -> SuperPolynomial {
    let mut out = SuperPolynomial::one(dims);
    for part in pi.parts() {
        out = out.mul(&power_sum(part, dims));
    }
    out
}

/// Whether a polynomial is fixed by the whole symmetric group, tested on the
/// generating set {transposition, long cycle}.
pub fn is_invariant(p: &SuperPolynomial) -> bool {
    let n = p.dims().n;
    if n <= 1 {
        return true;
    }
    let swap = Permutation::transposition(n, 0, 1);
    if p.permute_rows(&swap) != *p {
        return false;
    }
    let cycle = Permutation::long_cycle(n);
    p.permute_rows(&cycle) == *p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multiset {
        s.parse().unwrap()
    }

    fn msp(s: &str) -> MultisetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn single_letter_orbit() {
        let dims = Dims::new(3, 1, 0);
        let m = monomial_sym(&msp("{{1}}"), dims);
        assert_eq!(m.render(), "x[1,1] + x[2,1] + x[3,1]");
        assert_eq!(m, power_sum(&ms("{1}"), dims));
    }

    #[test]
    fn repeated_odd_part_vanishes() {
        for n in 2..=4 {
            let dims = Dims::new(n, 0, 1);
            assert!(monomial_sym(&msp("{{1'},{1'}}"), dims).is_zero());
        }
    }

    #[test]
    fn repeated_even_part_counts_placements() {
        // both placements of the two equal parts land on the same monomial
        let dims = Dims::new(2, 0, 2);
        let m = monomial_sym(&msp("{{1',2'},{1',2'}}"), dims);
        assert_eq!(m.render(), "2*th[1,1]*th[1,2]*th[2,1]*th[2,2]");
        let p = power_sum(&ms("{1',2'}"), dims);
        assert_eq!(p.mul(&p), m);
    }

    #[test]
    fn too_many_parts_vanishes() {
        let dims = Dims::new(1, 1, 0);
        assert!(monomial_sym(&msp("{{1},{1}}"), dims).is_zero());
    }

    #[test]
    fn power_sum_examples() {
        let dims = Dims::new(2, 1, 2);
        assert_eq!(
            power_sum(&ms("{1',2'}"), dims).render(),
            "th[1,1]*th[1,2] + th[2,1]*th[2,2]"
        );
        assert_eq!(
            power_sum(&ms("{1,1,1'}"), dims).render(),
            "x[1,1]^2*th[1,1] + x[2,1]^2*th[2,1]"
        );
    }

    #[test]
    fn produced_polynomials_are_invariant() {
        let dims = Dims::new(3, 1, 2);
        for s in ["{1}", "{1,1}", "{1'}", "{1,2'}", "{1',2'}"] {
            assert!(is_invariant(&power_sum(&ms(s), dims)), "p_{s}");
        }
        for pi in [
            "{{1},{1}}",
            "{{1,1'},{2'}}",
            "{{1',2'},{1',2'}}",
            "{{1,1},{1}}",
        ] {
            assert!(is_invariant(&monomial_sym(&msp(pi), dims)), "m_{pi}");
            assert!(is_invariant(&power_prod(&msp(pi), dims)), "p_{pi}");
        }
        assert!(!is_invariant(&SuperPolynomial::x(dims, 1, 1)));
    }
}
