//! Dimension counts and spanning checks for the invariant components.

use std::fmt;

use num_bigint::BigUint;

use crate::combinat::{
    enumerate_multiset_partitions, enumerate_multiset_partitions_filtered, DegreeVector, Multiset,
    MultisetPartition, PartitionFilter, Permutation,
};
use crate::superpoly::{component_basis, power_prod, power_sum, Dims, SuperPolynomial};
use crate::Rational;

use super::rank::rank_of_polynomials;

/// Number of invariants in the component of content `(alpha, beta)`: super
/// multiset partitions of that content with at most `n` parts.
pub fn count_invariants(n: usize, content: &DegreeVector) -> usize {
    enumerate_multiset_partitions(content, n, true).len()
}

/// Dimension of the invariant subspace computed independently, by averaging
/// each basis monomial over the group and taking the rank of the images.
/// Factorial in `n`; a test oracle, not a pipeline step.
pub fn invariant_dimension_reynolds(dims: Dims, alpha: &[u32], beta: &[u32]) -> usize {
    let basis = component_basis(dims, alpha, beta, crate::superpoly::DEFAULT_BASIS_CAP)
        .expect("component within cap");
    let perms = Permutation::all(dims.n);
    let averaged: Vec<SuperPolynomial> = basis
        .iter()
        .map(|mono| {
            let single = SuperPolynomial::from_monomial(
                dims,
                mono.clone(),
                Rational::from_integer(1.into()),
            );
            let mut sum = SuperPolynomial::zero(dims);
            for sigma in &perms {
                sum = sum.add(&single.permute_rows(sigma));
            }
            sum
        })
        .collect();
    rank_of_polynomials(&averaged)
}

/// Outcome of the spanning check for one component.
#[derive(Clone, Debug)]
pub struct SpanningReport {
    pub n: usize,
    pub content: DegreeVector,
    /// Super multiset partitions with at most `n` parts: the claimed basis.
    pub expected_dimension: usize,
    /// Rank of the realized power sum products over those partitions.
    pub basis_rank: usize,
    /// Rank of realized products of generators `p_S` with `|S| <= n` only.
    pub generated_rank: usize,
    /// The generator index multisets that were used.
    pub generators_used: Vec<Multiset>,
}

impl SpanningReport {
    /// Both the linear independence of the claimed basis and the generation
    /// by short power sums hold.
    pub fn ok(&self) -> bool {
        self.basis_rank == self.expected_dimension && self.generated_rank == self.expected_dimension
    }
}

impl fmt::Display for SpanningReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} alpha={:?} beta={:?}: dimension {}, basis rank {}, generated rank {} -> {}",
            self.n,
            self.content.alpha,
            self.content.beta,
            self.expected_dimension,
            self.basis_rank,
            self.generated_rank,
            if self.ok() { "ok" } else { "FAIL" }
        )
    }
}

/// Check, for one component, that the power sum products indexed by super
/// multiset partitions with at most `n` parts are linearly independent (rank
/// equals their count), and that products of the short generators `p_S`,
/// `|S| <= n`, span the same space.
pub fn verify_spanning(n: usize, content: &DegreeVector, dims: Dims) -> SpanningReport {
    assert_eq!(dims.n, n);
    let basis_pis = enumerate_multiset_partitions(content, n, true);
    let expected_dimension = basis_pis.len();
    let basis_polys: Vec<SuperPolynomial> =
        basis_pis.iter().map(|pi| power_prod(pi, dims)).collect();
    let basis_rank = rank_of_polynomials(&basis_polys);

    // every refinement with all parts short, regardless of length or parity
    let generated_pis = enumerate_multiset_partitions_filtered(
        content,
        PartitionFilter {
            max_len: None,
            max_part_size: Some(n),
            super_only: false,
        },
    );
    let generated_polys: Vec<SuperPolynomial> = generated_pis
        .iter()
        .map(|pi| power_prod(pi, dims))
        .collect();
    let generated_rank = rank_of_polynomials(&generated_polys);

    let mut generators_used: Vec<Multiset> = generated_pis
        .iter()
        .flat_map(|pi| pi.parts().iter().cloned())
        .collect();
    generators_used.sort();
    generators_used.dedup();

    SpanningReport {
        n,
        content: content.clone(),
        expected_dimension,
        basis_rank,
        generated_rank,
        generators_used,
    }
}

/// Outcome of sampling the sign relations among power sum generators.
#[derive(Clone, Debug, Default)]
pub struct RelationsReport {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl RelationsReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check, over all index multisets of size at most `max_size` in the given
/// alphabet, that realized generators satisfy
/// `p_S p_S' = (-1)^{|T| |T'|} p_S' p_S` (`T`, `T'` the barred parts) and
/// that `p_S^2 = 0` whenever `|T|` is odd.
pub fn check_relations(dims: Dims, max_size: usize) -> RelationsReport {
    let mut report = RelationsReport::default();
    let indices = all_multisets(max_size, dims.m, dims.m_bar);
    for s in &indices {
        let ps = power_sum(s, dims);
        if s.has_odd_parity() {
            report.cases += 1;
            if !ps.mul(&ps).is_zero() {
                report.failures.push(format!("p{s}^2 != 0"));
            }
        }
        for s2 in &indices {
            report.cases += 1;
            let ps2 = power_sum(s2, dims);
            let forward = ps.mul(&ps2);
            let backward = ps2.mul(&ps);
            let sign_flip = s.has_odd_parity() && s2.has_odd_parity();
            let expected = if sign_flip {
                backward.scale(&-Rational::from_integer(1.into()))
            } else {
                backward
            };
            if forward != expected {
                report
                    .failures
                    .push(format!("p{s} p{s2} commutation fails"));
            }
        }
    }
    report
}

fn all_multisets(max_size: usize, m: usize, m_bar: usize) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut q = vec![0u32; m];
    fn rec(
        j: usize,
        q: &mut Vec<u32>,
        used: usize,
        max: usize,
        m_bar: usize,
        out: &mut Vec<Multiset>,
    ) {
        if j == q.len() {
            let letters: Vec<u32> = (1..=m_bar as u32).collect();
            let room = max - used;
            let mut chosen = Vec::new();
            fn sub(
                i: usize,
                letters: &[u32],
                room: usize,
                q: &[u32],
                used: usize,
                chosen: &mut Vec<u32>,
                out: &mut Vec<Multiset>,
            ) {
                if i == letters.len() {
                    if used + chosen.len() > 0 {
                        out.push(Multiset::new(q, chosen));
                    }
                    return;
                }
                sub(i + 1, letters, room, q, used, chosen, out);
                if chosen.len() < room {
                    chosen.push(letters[i]);
                    sub(i + 1, letters, room, q, used, chosen, out);
                    chosen.pop();
                }
            }
            sub(0, &letters, room, q, used, &mut chosen, out);
            return;
        }
        for v in 0..=(max - used) as u32 {
            q[j] = v;
            rec(j + 1, q, used + v as usize, max, m_bar, out);
        }
        q[j] = 0;
    }
    rec(0, &mut q, 0, max_size, m_bar, &mut out);
    out.sort();
    out
}

/// Whether the dimension of a component stays under a cap, used by callers
/// that want to skip expensive brute-force paths.
pub fn component_within_cap(dims: Dims, alpha: &[u32], beta: &[u32], cap: usize) -> bool {
    crate::superpoly::component_dim(dims, alpha, beta) <= BigUint::from(cap)
}

/// The leading-monomial coefficient of a realized power sum product: the
/// coefficient of the distinguished monomial of `m_pi` inside `p_pi`.
/// Non-zero for every super partition, which is what makes the monomial
/// expansion of the power sum basis triangular.
pub fn leading_coefficient(pi: &MultisetPartition, dims: Dims) -> Rational {
    let leading = crate::superpoly::leading_monomial(pi, dims);
    let (mono, base_coeff) = leading
        .terms()
        .next()
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("leading monomial is a single term");
    power_prod(pi, dims).coeff(&mono) / base_coeff
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(alpha: &[u32], beta: &[u32]) -> DegreeVector {
        DegreeVector::new(alpha.to_vec(), beta.to_vec())
    }

    #[test]
    fn counts_match_reynolds_dimension() {
        let cases: Vec<(usize, Vec<u32>, Vec<u32>)> = vec![
            (2, vec![2], vec![]),
            (2, vec![], vec![2]),
            (2, vec![1], vec![1]),
            (3, vec![2], vec![1]),
            (3, vec![1, 1], vec![]),
            (2, vec![1, 1], vec![1, 1]),
        ];
        for (n, alpha, beta) in cases {
            let dims = Dims::new(n, alpha.len().max(1), beta.len().max(1));
            let counted = count_invariants(n, &dv(&alpha, &beta));
            let reynolds = invariant_dimension_reynolds(dims, &alpha, &beta);
            assert_eq!(counted, reynolds, "n={n} alpha={alpha:?} beta={beta:?}");
        }
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_invariants(2, &dv(&[2], &[])), 2);
        assert_eq!(count_invariants(2, &dv(&[], &[2])), 0);
        assert_eq!(count_invariants(1, &dv(&[2], &[])), 1);
    }

    #[test]
    fn spanning_small_components() {
        let r = verify_spanning(2, &dv(&[2], &[]), Dims::new(2, 1, 1));
        assert_eq!(r.expected_dimension, 2);
        assert!(r.ok(), "{r}");
        let r = verify_spanning(2, &dv(&[2, 0], &[1]), Dims::new(2, 2, 1));
        assert!(r.ok(), "{r}");
        for alpha in [vec![1u32], vec![2], vec![3]] {
            let r = verify_spanning(1, &dv(&alpha, &[]), Dims::new(1, 1, 1));
            assert_eq!(r.expected_dimension, 1);
            assert!(r.ok(), "{r}");
        }
    }

    #[test]
    fn relations_hold_on_small_alphabet() {
        let report = check_relations(Dims::new(3, 1, 2), 2);
        assert!(report.ok(), "{:?}", report.failures);
        assert!(report.cases > 0);
    }

    #[test]
    fn power_products_are_triangular() {
        let dims = Dims::new(3, 2, 2);
        for content in [dv(&[2, 1], &[]), dv(&[1], &[1, 1]), dv(&[2], &[1])] {
            for pi in enumerate_multiset_partitions(&content, dims.n, true) {
                let c = leading_coefficient(&pi, dims);
                assert!(!num_traits::Zero::is_zero(&c), "pi={pi}");
            }
        }
    }
}
