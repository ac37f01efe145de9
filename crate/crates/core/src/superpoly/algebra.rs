//! Sparse exact polynomials in `n x m` commuting variables `x[i,j]` and
//! `n x m'` anticommuting variables `th[i,j]`.
//!
//! Monomials are kept in a normal form: theta factors sorted by `(row,
//! column)`, with the sign of the sorting permutation absorbed into the
//! coefficient.  A repeated theta annihilates the monomial.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinat::Permutation;
use crate::Rational;

/// Variable matrix dimensions: `n` rows, `m` commuting columns, `m_bar`
/// anticommuting columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dims {
    pub n: usize,
    pub m: usize,
    pub m_bar: usize,
}

impl Dims {
    pub fn new(n: usize, m: usize, m_bar: usize) -> Self {
        Dims { n, m, m_bar }
    }
}

/// A normal-form monomial.  `x_exp[i * m + j]` is the exponent of `x[i+1,
/// j+1]`; `thetas` lists the anticommuting factors as `i * m_bar + j`,
/// strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    x_exp: Vec<u32>,
    thetas: Vec<u32>,
}

/// Monomials sort with higher powers of earlier variables first, so rendered
/// polynomials read in the usual order (`x[1,1]^2 + x[1,1]*x[2,1] + ...`).
impl Ord for SuperMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other
            .x_exp
            .cmp(&self.x_exp)
            .then_with(|| self.thetas.cmp(&other.thetas))
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl SuperMonomial {
    pub fn one(dims: Dims) -> Self {
        SuperMonomial {
            x_exp: vec![0; dims.n * dims.m],
            thetas: Vec::new(),
        }
    }

    /// The variable `x[i,j]` (1-based indices).
    pub fn x(dims: Dims, i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= dims.n && 1 <= j && j <= dims.m);
        let mut mono = SuperMonomial::one(dims);
        mono.x_exp[(i - 1) * dims.m + (j - 1)] = 1;
        mono
    }

    /// The variable `th[i,j]` (1-based indices).
    pub fn theta(dims: Dims, i: usize, j: usize) -> Self {
        assert!(1 <= i && i <= dims.n && 1 <= j && j <= dims.m_bar);
        let mut mono = SuperMonomial::one(dims);
        mono.thetas.push(((i - 1) * dims.m_bar + (j - 1)) as u32);
        mono
    }

    /// Build from raw exponent data.  `thetas` must be strictly increasing.
    pub fn from_raw(x_exp: Vec<u32>, thetas: Vec<u32>) -> Self {
        assert!(thetas.windows(2).all(|w| w[0] < w[1]));
        SuperMonomial { x_exp, thetas }
    }

    pub fn x_exponent(&self, dims: Dims, i: usize, j: usize) -> u32 {
        self.x_exp[(i - 1) * dims.m + (j - 1)]
    }

    pub fn theta_pairs(&self, dims: Dims) -> Vec<(usize, usize)> {
        self.thetas
            .iter()
            .map(|&t| (t as usize / dims.m_bar + 1, t as usize % dims.m_bar + 1))
            .collect()
    }

    pub fn theta_degree(&self) -> usize {
        self.thetas.len()
    }

    /// Total x-degree per commuting column.
    pub fn x_column_degrees(&self, dims: Dims) -> Vec<u32> {
        let mut deg = vec![0u32; dims.m];
        for i in 0..dims.n {
            for j in 0..dims.m {
                deg[j] += self.x_exp[i * dims.m + j];
            }
        }
        deg
    }

    /// Theta degree per anticommuting column.
    pub fn theta_column_degrees(&self, dims: Dims) -> Vec<u32> {
        let mut deg = vec![0u32; dims.m_bar];
        for &t in &self.thetas {
            deg[t as usize % dims.m_bar] += 1;
        }
        deg
    }

    /// Product of two normal-form monomials: `None` when a theta repeats,
    /// otherwise the normal form and the reordering sign.
    pub fn mul(&self, other: &SuperMonomial) -> Option<(SuperMonomial, i64)> {
        let x_exp: Vec<u32> = self
            .x_exp
            .iter()
            .zip(&other.x_exp)
            .map(|(a, b)| a + b)
            .collect();
        // Merge sorted theta lists; each crossing of a pair contributes -1.
        let mut thetas = Vec::with_capacity(self.thetas.len() + other.thetas.len());
        let mut crossings = 0usize;
        let (mut ia, mut ib) = (0, 0);
        while ia < self.thetas.len() && ib < other.thetas.len() {
            if self.thetas[ia] == other.thetas[ib] {
                return None;
            }
            if self.thetas[ia] < other.thetas[ib] {
                thetas.push(self.thetas[ia]);
                ia += 1;
            } else {
                // other's factor moves left past the rest of self's factors
                crossings += self.thetas.len() - ia;
                thetas.push(other.thetas[ib]);
                ib += 1;
            }
        }
        thetas.extend_from_slice(&self.thetas[ia..]);
        thetas.extend_from_slice(&other.thetas[ib..]);
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        Some((SuperMonomial { x_exp, thetas }, sign))
    }

    /// Relabel rows by a permutation and renormalize; returns the normal
    /// form and the sign from reordering theta factors.
    pub fn permute_rows(&self, dims: Dims, sigma: &Permutation) -> (SuperMonomial, i64) {
        assert_eq!(sigma.len(), dims.n);
        let mut x_exp = vec![0u32; dims.n * dims.m];
        for i in 0..dims.n {
            let target = sigma.apply(i);
            for j in 0..dims.m {
                x_exp[target * dims.m + j] = self.x_exp[i * dims.m + j];
            }
        }
        let mut thetas: Vec<u32> = self
            .thetas
            .iter()
            .map(|&t| {
                let (i, j) = (t as usize / dims.m_bar, t as usize % dims.m_bar);
                (sigma.apply(i) * dims.m_bar + j) as u32
            })
            .collect();
        // Parity of the permutation that sorts the theta list.
        let mut sign = 1i64;
        for a in 0..thetas.len() {
            for b in a + 1..thetas.len() {
                if thetas[a] > thetas[b] {
                    sign = -sign;
                }
            }
        }
        thetas.sort_unstable();
        (SuperMonomial { x_exp, thetas }, sign)
    }

    fn fmt_with(&self, dims: Dims, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in 0..dims.n {
            for j in 0..dims.m {
                let e = self.x_exp[i * dims.m + j];
                if e > 0 {
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    write!(f, "x[{},{}]", i + 1, j + 1)?;
                    if e > 1 {
                        write!(f, "^{e}")?;
                    }
                }
            }
        }
        for (i, j) in self.theta_pairs(dims) {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "th[{i},{j}]")?;
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A sparse polynomial: normal-form monomials with exact rational
/// coefficients; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperPolynomial {
    dims: Dims,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperPolynomial {
    pub fn zero(dims: Dims) -> Self {
        SuperPolynomial {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dims: Dims) -> Self {
        SuperPolynomial::from_monomial(dims, SuperMonomial::one(dims), Rational::one())
    }

    pub fn x(dims: Dims, i: usize, j: usize) -> Self {
        SuperPolynomial::from_monomial(dims, SuperMonomial::x(dims, i, j), Rational::one())
    }

    pub fn theta(dims: Dims, i: usize, j: usize) -> Self {
        SuperPolynomial::from_monomial(dims, SuperMonomial::theta(dims, i, j), Rational::one())
    }

    pub fn from_monomial(dims: Dims, mono: SuperMonomial, coeff: Rational) -> Self {
        let mut p = SuperPolynomial::zero(dims);
        p.add_term(mono, coeff);
        p
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &SuperMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mono: SuperMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SuperPolynomial) -> SuperPolynomial {
        assert_eq!(self.dims, other.dims, "dimension mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SuperPolynomial) -> SuperPolynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> SuperPolynomial {
        if factor.is_zero() {
            return SuperPolynomial::zero(self.dims);
        }
        SuperPolynomial {
            dims: self.dims,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    /// Associative product honoring the sign rules: x's commute with
    /// everything, thetas anticommute among themselves and square to zero.
    pub fn mul(&self, other: &SuperPolynomial) -> SuperPolynomial {
        assert_eq!(self.dims, other.dims, "dimension mismatch");
        let mut out = SuperPolynomial::zero(self.dims);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, sign)) = ma.mul(mb) {
                    out.add_term(m, ca * cb * Rational::from_integer(sign.into()));
                }
            }
        }
        out
    }

    /// The row-permutation action: `x[i,j] -> x[sigma(i),j]` and
    /// `th[i,j] -> th[sigma(i),j]`, a ring homomorphism.
    pub fn permute_rows(&self, sigma: &Permutation) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(self.dims);
        for (m, c) in &self.terms {
            let (mono, sign) = m.permute_rows(self.dims, sigma);
            out.add_term(mono, c * Rational::from_integer(sign.into()));
        }
        out
    }

    /// Deterministic text form, mostly for test output.
    pub fn render(&self) -> String {
        struct Disp<'a>(&'a SuperPolynomial);
        impl fmt::Display for Disp<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                if self.0.is_zero() {
                    return write!(f, "0");
                }
                for (i, (m, c)) in self.0.terms.iter().enumerate() {
                    let neg = c < &Rational::zero();
                    let abs = if neg { -c.clone() } else { c.clone() };
                    if i == 0 {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else if neg {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    m.fmt_with(self.0.dims, f)?;
                }
                Ok(())
            }
        }
        Disp(self).to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d() -> Dims {
        Dims::new(2, 1, 1)
    }

    #[test]
    fn thetas_anticommute() {
        let t11 = SuperPolynomial::theta(d(), 1, 1);
        let t21 = SuperPolynomial::theta(d(), 2, 1);
        let ab = t11.mul(&t21);
        let ba = t21.mul(&t11);
        assert_eq!(ba, ab.scale(&-Rational::one()));
        assert_eq!(ab.render(), "th[1,1]*th[2,1]");
        assert_eq!(ba.render(), "-th[1,1]*th[2,1]");
    }

    #[test]
    fn theta_squares_to_zero() {
        let t = SuperPolynomial::theta(d(), 1, 1);
        assert!(t.mul(&t).is_zero());
    }

    #[test]
    fn x_commutes_through_theta() {
        let dims = Dims::new(2, 1, 2);
        let x = SuperPolynomial::x(dims, 1, 1);
        let t = SuperPolynomial::theta(dims, 1, 2);
        let xt = x.mul(&t);
        let p = xt.mul(&x);
        assert_eq!(p.render(), "x[1,1]^2*th[1,2]");
        assert_eq!(p, x.mul(&x).mul(&t));
    }

    #[test]
    fn swap_flips_theta_pair_sign() {
        let t11 = SuperPolynomial::theta(d(), 1, 1);
        let t21 = SuperPolynomial::theta(d(), 2, 1);
        let prod = t11.mul(&t21);
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(prod.permute_rows(&swap), prod.scale(&-Rational::one()));
    }

    #[test]
    fn action_moves_x_rows() {
        let x11 = SuperPolynomial::x(d(), 1, 1);
        let swap = Permutation::transposition(2, 0, 1);
        assert_eq!(x11.permute_rows(&swap), SuperPolynomial::x(d(), 2, 1));
    }

    #[test]
    fn action_is_ring_homomorphism() {
        let dims = Dims::new(3, 1, 2);
        let p = SuperPolynomial::x(dims, 1, 1)
            .mul(&SuperPolynomial::theta(dims, 2, 1))
            .add(&SuperPolynomial::theta(dims, 3, 2));
        let q = SuperPolynomial::theta(dims, 1, 1).add(&SuperPolynomial::x(dims, 2, 1));
        let sigma = Permutation::long_cycle(3);
        assert_eq!(
            p.mul(&q).permute_rows(&sigma),
            p.permute_rows(&sigma).mul(&q.permute_rows(&sigma))
        );
    }

    #[test]
    fn action_composes() {
        let dims = Dims::new(3, 1, 1);
        let p = SuperPolynomial::theta(dims, 1, 1)
            .mul(&SuperPolynomial::theta(dims, 3, 1))
            .add(&SuperPolynomial::x(dims, 2, 1));
        let s = Permutation::transposition(3, 0, 2);
        let t = Permutation::long_cycle(3);
        let st = s.compose(&t);
        assert_eq!(p.permute_rows(&st), p.permute_rows(&t).permute_rows(&s));
    }
}
