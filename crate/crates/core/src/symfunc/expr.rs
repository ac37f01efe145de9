//! Formal symmetric function expressions with exact rational coefficients.
//!
//! An expression is a linear combination of basis elements indexed by
//! partitions, all in one basis at a time: power sums `p`, homogeneous `h`,
//! elementary `e`, or Schur `s`.  Conversions between bases are explicit
//! (see the module level operations); arithmetic never mixes bases.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinat::Partition;
use crate::Rational;

/// The four supported bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    P,
    H,
    E,
    S,
}

impl Basis {
    pub fn letter(self) -> char {
        match self {
            Basis::P => 'p',
            Basis::H => 'h',
            Basis::E => 'e',
            Basis::S => 's',
        }
    }

    /// Whether products of basis elements are again basis elements (index
    /// concatenation).  True for the generator bases, false for Schur.
    pub fn is_multiplicative(self) -> bool {
        !matches!(self, Basis::S)
    }
}

/// A linear combination of basis elements in a single basis.  Zero
/// coefficients are never stored.  The index of the constant term is the
/// empty partition (`p_0 = h_0 = e_0 = s_0 = 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFuncExpr {
    basis: Basis,
    terms: BTreeMap<Partition, Rational>,
}

impl SymFuncExpr {
    pub fn zero(basis: Basis) -> Self {
        SymFuncExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        let mut e = SymFuncExpr::zero(basis);
        e.add_term(Partition::empty(), Rational::one());
        e
    }

    /// The single basis element indexed by `index` (degree `|index|`).
    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let mut e = SymFuncExpr::zero(basis);
        e.add_term(index, Rational::one());
        e
    }

    /// The degree-`r` generator; `r = 0` gives the constant 1.
    pub fn generator(basis: Basis, r: u32) -> Self {
        assert!(
            basis.is_multiplicative(),
            "generators exist for p, h, e only"
        );
        if r == 0 {
            SymFuncExpr::one(basis)
        } else {
            SymFuncExpr::basis_element(basis, Partition::new(vec![r]))
        }
    }

    /// The product `g_{v[0]} g_{v[1]} ...` for a generator basis; zeros in
    /// `v` contribute the factor 1.
    pub fn generator_product(basis: Basis, v: &[u32]) -> Self {
        assert!(basis.is_multiplicative());
        SymFuncExpr::basis_element(basis, Partition::from_unsorted(v))
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, index: &Partition) -> Rational {
        self.terms
            .get(index)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Partitions with non-zero coefficient.
    pub fn support(&self) -> Vec<Partition> {
        self.terms.keys().cloned().collect()
    }

    pub fn add_term(&mut self, index: Partition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(index);
        match entry {
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

    pub fn add(&self, other: &SymFuncExpr) -> SymFuncExpr {
        assert_eq!(self.basis, other.basis, "cannot add across bases");
        let mut out = self.clone();
        for (idx, c) in &other.terms {
            out.add_term(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFuncExpr) -> SymFuncExpr {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> SymFuncExpr {
        if factor.is_zero() {
            return SymFuncExpr::zero(self.basis);
        }
        SymFuncExpr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .map(|(i, c)| (i.clone(), c * factor))
                .collect(),
        }
    }

    /// Product in a multiplicative basis: indices concatenate.
    pub fn mul(&self, other: &SymFuncExpr) -> SymFuncExpr {
        self.mul_truncated(other, None)
    }

    /// Product dropping all terms of degree above `max_degree`.
    pub fn mul_truncated(&self, other: &SymFuncExpr, max_degree: Option<usize>) -> SymFuncExpr {
        assert_eq!(self.basis, other.basis, "cannot multiply across bases");
        assert!(
            self.basis.is_multiplicative(),
            "schur expressions multiply via the Pieri rule, not termwise"
        );
        let mut out = SymFuncExpr::zero(self.basis);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(max) = max_degree {
                    if a.size() + b.size() > max {
                        continue;
                    }
                }
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                out.add_term(Partition::from_unsorted(&parts), ca * cb);
            }
        }
        out
    }

    /// The homogeneous component of the given degree.
    pub fn homogeneous_component(&self, degree: usize) -> SymFuncExpr {
        SymFuncExpr {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(i, _)| i.size() == degree)
                .map(|(i, c)| (i.clone(), c.clone()))
                .collect(),
        }
    }

    /// Degrees appearing in the expression.
    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(|i| i.size()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    /// JSON form: a sorted list of `{basis, index, numerator, denominator}`.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                serde_json::json!({
                    "basis": self.basis.letter().to_string(),
                    "index": idx.parts(),
                    "numerator": c.numer().to_string(),
                    "denominator": c.denom().to_string(),
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

impl fmt::Display for SymFuncExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let letter = self.basis.letter();
        for (i, (idx, c)) in self.terms.iter().enumerate() {
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
            if !abs.is_one() || idx.is_empty() {
                write!(f, "{abs}")?;
                if !idx.is_empty() {
                    write!(f, "*")?;
                }
            }
            if !idx.is_empty() {
                write!(f, "{letter}{idx}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn zero_coefficients_vanish() {
        let mut e = SymFuncExpr::zero(Basis::P);
        e.add_term(pt("[2]"), rat_int(3));
        e.add_term(pt("[2]"), rat_int(-3));
        assert!(e.is_zero());
    }

    #[test]
    fn product_concatenates_indices() {
        let a = SymFuncExpr::generator(Basis::P, 2);
        let b = SymFuncExpr::generator_product(Basis::P, &[2, 1]);
        let ab = a.mul(&b);
        assert_eq!(ab.coeff(&pt("[2,2,1]")), rat_int(1));
    }

    #[test]
    fn generator_zero_is_one() {
        let h0 = SymFuncExpr::generator(Basis::H, 0);
        assert_eq!(h0.coeff(&Partition::empty()), rat_int(1));
        let h2 = SymFuncExpr::generator(Basis::H, 2);
        assert_eq!(h0.mul(&h2), h2);
    }

    #[test]
    fn display_format() {
        let mut e = SymFuncExpr::zero(Basis::P);
        e.add_term(pt("[1,1]"), Rational::new(1.into(), 2.into()));
        e.add_term(pt("[2]"), Rational::new((-1).into(), 2.into()));
        assert_eq!(e.to_string(), "1/2*p[1,1] - 1/2*p[2]");
    }

    #[test]
    fn json_is_sorted_and_exact() {
        let mut e = SymFuncExpr::zero(Basis::S);
        e.add_term(pt("[2]"), rat_int(1));
        e.add_term(pt("[1,1]"), Rational::new(1.into(), 3.into()));
        let j = e.to_json();
        let arr = j.as_array().unwrap();
        assert_eq!(arr[0]["index"], serde_json::json!([1, 1]));
        assert_eq!(arr[0]["denominator"], "3");
        assert_eq!(arr[1]["index"], serde_json::json!([2]));
    }
}
