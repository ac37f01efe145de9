//! The abstract algebra of power sum symbols `p_S`.
//!
//! Symbols indexed by multisets of odd barred parity anticommute with each
//! other and square to zero; all other pairs commute.  A product is stored
//! as its canonical word (parts ascending in the multiset order) with the
//! reordering sign absorbed into the coefficient, so expressions here
//! normalize the same way their realizations as polynomials do.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinat::{Multiset, MultisetPartition};
use crate::superpoly::{power_prod, Dims, SuperPolynomial};
use crate::Rational;

/// A canonical product of power sum symbols: parts ascending, never a
/// repeated odd-parity part (such a word is zero and is never stored).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PWord(Vec<Multiset>);

impl PWord {
    pub fn empty() -> Self {
        PWord(Vec::new())
    }

    /// Sort a raw word into canonical form.  Swapping two odd-parity symbols
    /// flips the sign; a repeated odd-parity symbol kills the word.
    pub fn normalize(mut parts: Vec<Multiset>) -> Option<(PWord, i64)> {
        let mut sign = 1i64;
        for i in 1..parts.len() {
            let mut j = i;
            while j > 0 && parts[j - 1] > parts[j] {
                if parts[j - 1].has_odd_parity() && parts[j].has_odd_parity() {
                    sign = -sign;
                }
                parts.swap(j - 1, j);
                j -= 1;
            }
        }
        for w in parts.windows(2) {
            if w[0] == w[1] && w[0].has_odd_parity() {
                return None;
            }
        }
        Some((PWord(parts), sign))
    }

    pub fn parts(&self) -> &[Multiset] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of odd-parity symbols mod 2: the parity of the whole word.
    pub fn parity(&self) -> usize {
        self.0.iter().filter(|p| p.has_odd_parity()).count() % 2
    }

    pub fn as_multiset_partition(&self) -> MultisetPartition {
        MultisetPartition::from_parts(self.0.clone())
    }
}

impl fmt::Display for PWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, part) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "p{part}")?;
        }
        Ok(())
    }
}

/// A rational linear combination of canonical words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PExpression {
    terms: BTreeMap<PWord, Rational>,
}

impl PExpression {
    pub fn zero() -> Self {
        PExpression::default()
    }

    pub fn one() -> Self {
        PExpression::from_word(PWord::empty(), Rational::one())
    }

    /// The single symbol `p_S`.
    pub fn symbol(s: &Multiset) -> Self {
        PExpression::from_word(PWord(vec![s.clone()]), Rational::one())
    }

    /// The product of the parts of `pi` in canonical order.
    pub fn from_multiset_partition(pi: &MultisetPartition) -> Self {
        match PWord::normalize(pi.parts().to_vec()) {
            Some((w, sign)) => PExpression::from_word(w, Rational::from_integer(sign.into())),
            None => PExpression::zero(),
        }
    }

    pub fn from_word(word: PWord, coeff: Rational) -> Self {
        let mut e = PExpression::zero();
        e.add_word(word, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PWord, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, word: &PWord) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_word(&mut self, word: PWord, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
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

    pub fn add(&self, other: &PExpression) -> PExpression {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_word(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PExpression) -> PExpression {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, factor: &Rational) -> PExpression {
        if factor.is_zero() {
            return PExpression::zero();
        }
        PExpression {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &PExpression) -> PExpression {
        let mut out = PExpression::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                let mut parts = wa.0.clone();
                parts.extend_from_slice(&wb.0);
                if let Some((w, sign)) = PWord::normalize(parts) {
                    out.add_word(w, ca * cb * Rational::from_integer(sign.into()));
                }
            }
        }
        out
    }

    /// Substitute actual power sum polynomials for the symbols.
    pub fn realize(&self, dims: Dims) -> SuperPolynomial {
        let mut out = SuperPolynomial::zero(dims);
        for (word, coeff) in &self.terms {
            let poly = power_prod(&word.as_multiset_partition(), dims);
            out = out.add(&poly.scale(coeff));
        }
        out
    }

    /// Largest part size over all words, 0 for scalars.
    pub fn max_part_size(&self) -> usize {
        self.terms
            .keys()
            .flat_map(|w| w.parts().iter().map(Multiset::size))
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for PExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
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
            if !abs.is_one() || w.is_empty() {
                write!(f, "{abs}")?;
                if !w.is_empty() {
                    write!(f, "*")?;
                }
            }
            if !w.is_empty() {
                write!(f, "{w}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multiset {
        s.parse().unwrap()
    }

    #[test]
    fn odd_symbols_anticommute() {
        let a = PExpression::symbol(&ms("{1'}"));
        let b = PExpression::symbol(&ms("{2'}"));
        assert_eq!(a.mul(&b), b.mul(&a).scale(&-Rational::one()));
    }

    #[test]
    fn odd_symbol_squares_to_zero() {
        let a = PExpression::symbol(&ms("{1,2'}"));
        assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn even_symbols_commute() {
        let a = PExpression::symbol(&ms("{1,1}"));
        let b = PExpression::symbol(&ms("{1',2'}"));
        assert_eq!(a.mul(&b), b.mul(&a));
        let sq = b.mul(&b);
        assert!(!sq.is_zero());
    }

    #[test]
    fn mixed_parity_pairs_commute() {
        let odd = PExpression::symbol(&ms("{1'}"));
        let even = PExpression::symbol(&ms("{1}"));
        assert_eq!(odd.mul(&even), even.mul(&odd));
    }

    #[test]
    fn normalization_sign_matches_realization() {
        // p_{2'} p_{1'} = - p_{1'} p_{2'}, also after realization
        let dims = Dims::new(3, 0, 2);
        let a = ms("{1'}");
        let b = ms("{2'}");
        let word_ba = PExpression::symbol(&b).mul(&PExpression::symbol(&a));
        let poly_ba =
            crate::superpoly::power_sum(&b, dims).mul(&crate::superpoly::power_sum(&a, dims));
        assert_eq!(word_ba.realize(dims), poly_ba);
    }

    #[test]
    fn display_reads_naturally() {
        let e = PExpression::symbol(&ms("{1}"))
            .mul(&PExpression::symbol(&ms("{1,1}")))
            .scale(&Rational::new(3.into(), 2.into()));
        assert_eq!(e.to_string(), "3/2*p{1}*p{1,1}");
        assert_eq!(PExpression::one().to_string(), "1");
    }
}
