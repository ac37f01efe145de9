//! Generating functions for the invariant generators and the finite
//! generation rewrite rule.
//!
//! Two series in auxiliary variables are expanded: commuting markers `q_j`
//! track degrees in the commuting columns, anticommuting markers `z_j`
//! (which square to zero, anticommute with each other, and commute with
//! everything else) track the anticommuting columns.
//!
//! * `P`: coefficient of `q^a z_T` is `c(S)/|S| * p_S` for the multiset `S`
//!   with unbarred content `a` and barred set `T`.
//! * `E`: the product expansion whose `q^a z_T` coefficient realizes to zero
//!   whenever `|S| > n`; setting that coefficient to zero and solving for
//!   `p_S` yields the reduction of long power sums to short ones.
//!
//! Both the formal expansions (over [`PExpression`]) and the direct
//! polynomial expansions (over [`SuperPolynomial`]) are provided; agreement
//! between them is one of the library's standing verification suites.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{
    enumerate_multiset_partitions_filtered, DegreeVector, Multiset, MultisetPartition,
    PartitionFilter,
};
use crate::superpoly::{Dims, SuperPolynomial};
use crate::Rational;

use super::pexpr::PExpression;

/// Key of a marker monomial: `q` exponents and the sorted `z` subset.
pub type QzKey = (Vec<u32>, Vec<u32>);

/// The multinomial `|S|! / (a_1! ... a_m!)`: barred letters contribute
/// factors of `1!`.
pub fn multinomial_of_multiset(s: &Multiset) -> BigInt {
    let mut value = BigInt::one();
    let mut total = 0u32;
    for &a in s
        .unbarred_counts()
        .iter()
        .chain(std::iter::repeat(&1).take(s.barred_set().len()))
    {
        for i in 1..=a {
            total += 1;
            value = value * BigInt::from(total) / BigInt::from(i);
        }
    }
    value
}

/// The coefficient attached to a multiset partition in the exponential
/// expansion: `prod_i c(S_i)^{m_i} / (prod_i |S_i|^{m_i} * prod_i m_i!)`.
pub fn exponential_coefficient(pi: &MultisetPartition) -> Rational {
    let mut value = Rational::one();
    for (part, mult) in pi.distinct_parts() {
        let c = Rational::from_integer(multinomial_of_multiset(part));
        let size = Rational::from_integer(BigInt::from(part.size()));
        for _ in 0..mult {
            value *= &c / &size;
        }
        for k in 1..=mult {
            value /= Rational::from_integer(BigInt::from(k));
        }
    }
    value
}

/// Sign from interleaving the barred letters of the parts (taken in
/// canonical ascending order) back into one ascending list.  The parts must
/// have pairwise disjoint barred sets.
pub fn interleave_sign(pi: &MultisetPartition) -> i64 {
    let mut word: Vec<u32> = Vec::new();
    for part in pi.parts() {
        word.extend_from_slice(part.barred_set());
    }
    let mut sign = 1i64;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            assert_ne!(
                word[i], word[j],
                "barred letters must be disjoint across parts"
            );
            if word[i] > word[j] {
                sign = -sign;
            }
        }
    }
    sign
}

fn key_of_multiset(s: &Multiset, m: usize) -> QzKey {
    let mut q = s.unbarred_counts().to_vec();
    q.resize(m.max(q.len()), 0);
    (q, s.barred_set().to_vec())
}

/// All multisets over the alphabet with `1 <= |S| <= bound` and distinct
/// barred letters, in sorted key order.
fn all_index_multisets(bound: usize, m: usize, m_bar: usize) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut q = vec![0u32; m];
    fn rec(
        j: usize,
        q: &mut Vec<u32>,
        used: usize,
        bound: usize,
        m_bar: usize,
        out: &mut Vec<Multiset>,
    ) {
        if j == q.len() {
            let letters: Vec<u32> = (1..=m_bar as u32).collect();
            let mut chosen = Vec::new();
            subsets(
                0,
                &letters,
                bound - used,
                &mut chosen,
                &mut |zs: &[u32]| {
                    if used + zs.len() > 0 {
                        out.push(Multiset::new(q, zs));
                    }
                },
            );
            return;
        }
        for v in 0..=(bound - used) as u32 {
            q[j] = v;
            rec(j + 1, q, used + v as usize, bound, m_bar, out);
        }
        q[j] = 0;
    }
    fn subsets(
        i: usize,
        letters: &[u32],
        room: usize,
        chosen: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if i == letters.len() {
            visit(chosen);
            return;
        }
        subsets(i + 1, letters, room, chosen, visit);
        if room > 0 {
            chosen.push(letters[i]);
            subsets(i + 1, letters, room - 1, chosen, visit);
            chosen.pop();
        }
    }
    rec(0, &mut q, 0, bound, m_bar, &mut out);
    out.sort();
    out
}

/// Closed-form expansion of the power sum generating function: the
/// coefficient at the marker monomial of `S` is `c(S)/|S| * p_S`, for all
/// `S` with `1 <= |S| <= degree_bound`.
pub fn expand_power_series(
    degree_bound: usize,
    m: usize,
    m_bar: usize,
) -> BTreeMap<QzKey, PExpression> {
    let mut out = BTreeMap::new();
    for s in all_index_multisets(degree_bound, m, m_bar) {
        let c = Rational::new(multinomial_of_multiset(&s), BigInt::from(s.size()));
        out.insert(key_of_multiset(&s, m), PExpression::symbol(&s).scale(&c));
    }
    out
}

/// Super multiset partitions refining `S`, with no length cap.
fn super_refinements(s: &Multiset) -> Vec<MultisetPartition> {
    let mut beta = vec![0u32; 0];
    for &b in s.barred_set() {
        let j = (b - 1) as usize;
        if beta.len() <= j {
            beta.resize(j + 1, 0);
        }
        beta[j] += 1;
    }
    let content = DegreeVector::new(s.unbarred_counts().to_vec(), beta);
    enumerate_multiset_partitions_filtered(
        &content,
        PartitionFilter {
            max_len: None,
            max_part_size: None,
            super_only: true,
        },
    )
}

/// The formal elementary coefficient at `S`: the signed sum over super
/// refinements `pi` of `S` of `a_pi p_pi`, where the sign is
/// `(-1)^{|S| + l(pi)}` times the interleaving sign of the barred letters.
pub fn elementary_coefficient(s: &Multiset) -> PExpression {
    let mut out = PExpression::zero();
    for pi in super_refinements(s) {
        let base_sign = if (s.size() + pi.len()) % 2 == 0 {
            1
        } else {
            -1
        };
        let sign = base_sign * interleave_sign(&pi);
        let coeff = exponential_coefficient(&pi) * Rational::from_integer(BigInt::from(sign));
        out = out.add(&PExpression::from_multiset_partition(&pi).scale(&coeff));
    }
    out
}

/// Expansion of the elementary generating function: coefficients at every
/// marker monomial with `1 <= |S| <= degree_bound`.
pub fn expand_elementary_series(
    degree_bound: usize,
    m: usize,
    m_bar: usize,
) -> BTreeMap<QzKey, PExpression> {
    all_index_multisets(degree_bound, m, m_bar)
        .into_iter()
        .map(|s| (key_of_multiset(&s, m), elementary_coefficient(&s)))
        .collect()
}

/// Error from the reduction rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReduceError {
    /// `|S| <= n`: the generator is already short; no relation applies.
    NothingToReduce { size: usize, n: usize },
}

impl fmt::Display for ReduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReduceError::NothingToReduce { size, n } => {
                write!(f, "p_S with |S| = {size} <= n = {n} is itself a generator")
            }
        }
    }
}

impl std::error::Error for ReduceError {}

/// Rewrite `p_S` with `|S| > n` as a combination of products of shorter
/// power sums, by solving the vanishing elementary coefficient for the
/// `pi = {{S}}` term:
///
/// ```text
/// p_S = |S|/c(S) * sum_{pi != {{S}}} sign(pi) (-1)^{l(pi)} a_pi p_pi
/// ```
///
/// The realization of the right side at `n` rows equals `p_S` exactly.
pub fn reduce_power_sum(s: &Multiset, n: usize) -> Result<PExpression, ReduceError> {
    if s.size() <= n {
        return Err(ReduceError::NothingToReduce { size: s.size(), n });
    }
    let mut out = PExpression::zero();
    for pi in super_refinements(s) {
        if pi.len() == 1 {
            continue;
        }
        let sign = (if pi.len() % 2 == 0 { 1 } else { -1 }) * interleave_sign(&pi);
        let coeff = exponential_coefficient(&pi) * Rational::from_integer(BigInt::from(sign));
        out = out.add(&PExpression::from_multiset_partition(&pi).scale(&coeff));
    }
    let scale = Rational::new(BigInt::from(s.size()), multinomial_of_multiset(s));
    Ok(out.scale(&scale))
}

/// Repeatedly apply the reduction until every part has size at most `n`.
/// Returns the normal form and the multisets that were rewritten, in order.
pub fn normal_form(expr: &PExpression, n: usize) -> (PExpression, Vec<Multiset>) {
    let mut current = expr.clone();
    let mut applied = Vec::new();
    loop {
        // find a word containing an oversized part
        let target = current.terms().find_map(|(w, _)| {
            w.parts()
                .iter()
                .position(|p| p.size() > n)
                .map(|idx| (w.clone(), idx))
        });
        let Some((word, idx)) = target else {
            return (current, applied);
        };
        let coeff = current.coeff(&word);
        let long_part = word.parts()[idx].clone();
        let reduction = reduce_power_sum(&long_part, n).expect("part is oversized");
        let mut replacement = PExpression::from_word(
            super::pexpr::PWord::normalize(word.parts()[..idx].to_vec())
                .expect("prefix of a canonical word is canonical")
                .0,
            coeff.clone(),
        );
        replacement = replacement.mul(&reduction);
        replacement = replacement.mul(&PExpression::from_word(
            super::pexpr::PWord::normalize(word.parts()[idx + 1..].to_vec())
                .expect("suffix of a canonical word is canonical")
                .0,
            Rational::one(),
        ));
        current.add_word(word, -coeff);
        current = current.add(&replacement);
        applied.push(long_part);
    }
}

/// A formal series in the marker variables with [`PExpression`]
/// coefficients.  `z` markers anticommute with each other and commute with
/// the power sum symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkerSeries {
    bound: usize,
    terms: BTreeMap<QzKey, PExpression>,
}

impl MarkerSeries {
    pub fn one(bound: usize, m: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((vec![0; m], Vec::new()), PExpression::one());
        MarkerSeries { bound, terms }
    }

    pub fn zero(bound: usize) -> Self {
        MarkerSeries {
            bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<QzKey, PExpression> {
        &self.terms
    }

    pub fn add_term(&mut self, key: QzKey, value: PExpression) {
        if key.0.iter().map(|&a| a as usize).sum::<usize>() + key.1.len() > self.bound {
            return;
        }
        if value.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&value);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &MarkerSeries) -> MarkerSeries {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> MarkerSeries {
        MarkerSeries {
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.scale(factor)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn mul(&self, other: &MarkerSeries) -> MarkerSeries {
        let mut out = MarkerSeries::zero(self.bound);
        for ((qa, za), pa) in &self.terms {
            for ((qb, zb), pb) in &other.terms {
                let Some((z, sign)) = merge_z(za, zb) else {
                    continue;
                };
                let q: Vec<u32> = qa.iter().zip(qb).map(|(x, y)| x + y).collect();
                let value = pa.mul(pb).scale(&Rational::from_integer(sign.into()));
                out.add_term((q, z), value);
            }
        }
        out
    }
}

/// Merge two sorted disjoint `z` subsets, counting crossings; `None` when a
/// marker repeats (it squares to zero).
fn merge_z(a: &[u32], b: &[u32]) -> Option<(Vec<u32>, i64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut crossings = 0usize;
    let (mut ia, mut ib) = (0, 0);
    while ia < a.len() && ib < b.len() {
        if a[ia] == b[ib] {
            return None;
        }
        if a[ia] < b[ib] {
            out.push(a[ia]);
            ia += 1;
        } else {
            crossings += a.len() - ia;
            out.push(b[ib]);
            ib += 1;
        }
    }
    out.extend_from_slice(&a[ia..]);
    out.extend_from_slice(&b[ib..]);
    Some((out, if crossings % 2 == 0 { 1 } else { -1 }))
}

/// The formal exponential `exp(-P(-q, -z))` truncated at the given marker
/// degree: the series whose coefficients the elementary expansion must
/// reproduce.
pub fn exp_of_negated_power_series(degree_bound: usize, m: usize, m_bar: usize) -> MarkerSeries {
    // -P(-q,-z): each coefficient of P gains (-1)^{|S|+1}
    let mut v = MarkerSeries::zero(degree_bound);
    for (key, p) in expand_power_series(degree_bound, m, m_bar) {
        let degree = key.0.iter().map(|&a| a as usize).sum::<usize>() + key.1.len();
        let sign = if (degree + 1) % 2 == 0 { 1 } else { -1 };
        v.add_term(key, p.scale(&Rational::from_integer(BigInt::from(sign))));
    }
    let mut out = MarkerSeries::one(degree_bound, m);
    let mut power = MarkerSeries::one(degree_bound, m);
    for t in 1..=degree_bound {
        power = power
            .mul(&v)
            .scale(&Rational::new(BigInt::one(), BigInt::from(t)));
        out = out.add(&power);
    }
    out
}

/// Direct polynomial expansions of the two generating functions over a
/// concrete ring: coefficient maps from marker monomials to polynomials.
/// These are the ground truth the formal series are compared against.
pub struct PolynomialSeries {
    bound: usize,
    terms: BTreeMap<QzKey, SuperPolynomial>,
}

impl PolynomialSeries {
    pub fn terms(&self) -> &BTreeMap<QzKey, SuperPolynomial> {
        &self.terms
    }

    pub fn coefficient(&self, key: &QzKey) -> Option<&SuperPolynomial> {
        self.terms.get(key)
    }

    fn one(bound: usize, dims: Dims) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((vec![0; dims.m], Vec::new()), SuperPolynomial::one(dims));
        PolynomialSeries { bound, terms }
    }

    fn add_term(&mut self, key: QzKey, value: SuperPolynomial) {
        if key.0.iter().map(|&a| a as usize).sum::<usize>() + key.1.len() > self.bound {
            return;
        }
        if value.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&value);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn mul(&self, other: &PolynomialSeries, dims: Dims) -> PolynomialSeries {
        let mut out = PolynomialSeries {
            bound: self.bound,
            terms: BTreeMap::new(),
        };
        let _ = dims;
        for ((qa, za), pa) in &self.terms {
            for ((qb, zb), pb) in &other.terms {
                let Some((z, sign)) = merge_z(za, zb) else {
                    continue;
                };
                let q: Vec<u32> = qa.iter().zip(qb).map(|(x, y)| x + y).collect();
                let value = pa.mul(pb).scale(&Rational::from_integer(sign.into()));
                out.add_term((q, z), value);
            }
        }
        out
    }

    fn scale(&self, factor: &Rational) -> PolynomialSeries {
        PolynomialSeries {
            bound: self.bound,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v.scale(factor)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    fn add(&self, other: &PolynomialSeries) -> PolynomialSeries {
        let mut out = PolynomialSeries {
            bound: self.bound,
            terms: self.terms.clone(),
        };
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

/// One row's linear contribution: `sum_j q_j x[i,j] + sum_j z_j th[i,j]`.
fn row_linear_form(dims: Dims, row: usize, bound: usize) -> PolynomialSeries {
    let mut out = PolynomialSeries {
        bound,
        terms: BTreeMap::new(),
    };
    for j in 1..=dims.m {
        let mut q = vec![0u32; dims.m];
        q[j - 1] = 1;
        out.add_term((q, Vec::new()), SuperPolynomial::x(dims, row, j));
    }
    for j in 1..=dims.m_bar {
        out.add_term(
            (vec![0; dims.m], vec![j as u32]),
            SuperPolynomial::theta(dims, row, j),
        );
    }
    out
}

/// Direct expansion of the product generating function
/// `prod_i (1 + sum_j q_j x[i,j] + sum_j z_j th[i,j])`.
pub fn elementary_series_polynomial(dims: Dims, bound: usize) -> PolynomialSeries {
    let mut out = PolynomialSeries::one(bound, dims);
    for i in 1..=dims.n {
        let factor = PolynomialSeries::one(bound, dims).add(&row_linear_form(dims, i, bound));
        out = out.mul(&factor, dims);
    }
    out
}

/// Direct expansion of `-sum_i log(1 - u_i)` with `u_i` the linear form of
/// row `i`, truncated at the marker degree bound.
pub fn power_series_polynomial(dims: Dims, bound: usize) -> PolynomialSeries {
    let mut out = PolynomialSeries {
        bound,
        terms: BTreeMap::new(),
    };
    for i in 1..=dims.n {
        let u = row_linear_form(dims, i, bound);
        let mut power = PolynomialSeries::one(bound, dims);
        for t in 1..=bound {
            power = power.mul(&u, dims);
            out = out.add(&power.scale(&Rational::new(BigInt::one(), BigInt::from(t))));
        }
    }
    out
}
