//! Multisets over a mixed alphabet of unbarred letters `1..=m` and barred
//! letters `1'..=m'`, totally ordered by `1 < 2 < ... < m < 1' < ... < m'`.
//!
//! Multisets compare lexicographically by their reading word (entries listed
//! in increasing order), with the empty multiset smallest.  This order is
//! what makes tableau enumeration and all printed output deterministic, so
//! it is fixed once here and used everywhere.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// Sizes of the two letter ranges: `m` unbarred letters and `m_bar` barred.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Alphabet {
    pub m: usize,
    pub m_bar: usize,
}

impl Alphabet {
    pub fn new(m: usize, m_bar: usize) -> Self {
        Alphabet { m, m_bar }
    }

    /// All letters in increasing order: `1 < .. < m < 1' < .. < m_bar'`.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        let unbarred = (1..=self.m as u32).map(Letter::Unbarred);
        let barred = (1..=self.m_bar as u32).map(Letter::Barred);
        unbarred.chain(barred)
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter {
            Letter::Unbarred(v) => 1 <= v && v as usize <= self.m,
            Letter::Barred(v) => 1 <= v && v as usize <= self.m_bar,
        }
    }

    /// Whether every letter of the multiset lies in this alphabet.
    pub fn admits(&self, multiset: &Multiset) -> bool {
        multiset.letters().all(|l| self.contains(l))
    }
}

/// A single letter.  Variant order gives the total order on the alphabet:
/// every unbarred letter sorts below every barred one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Unbarred(u32),
    Barred(u32),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Unbarred(v) => write!(f, "{v}"),
            Letter::Barred(v) => write!(f, "{v}'"),
        }
    }
}

/// A multiset of letters.  Unbarred letters may repeat; barred letters occur
/// at most once (enforced structurally: they are kept as a sorted set).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Multiset {
    /// Multiplicity of unbarred letter `j+1`; trailing zeros are trimmed so
    /// equality is structural.
    counts: Vec<u32>,
    /// Barred letters present, strictly increasing.
    barred: Vec<u32>,
}

impl Multiset {
    pub fn empty() -> Self {
        Multiset::default()
    }

    /// Build from unbarred multiplicities and a set of barred letters.
    ///
    /// Panics if `barred` contains a repeated letter or a zero.
    pub fn new(counts: &[u32], barred: &[u32]) -> Self {
        let mut counts = counts.to_vec();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        let mut barred = barred.to_vec();
        barred.sort_unstable();
        assert!(
            barred.windows(2).all(|w| w[0] < w[1]),
            "barred letters may occur at most once in a multiset"
        );
        assert!(!barred.contains(&0), "letters are 1-based");
        Multiset { counts, barred }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut counts = Vec::new();
        let mut barred = Vec::new();
        for l in letters {
            match l {
                Letter::Unbarred(v) => {
                    let v = v as usize;
                    assert!(v >= 1, "letters are 1-based");
                    if counts.len() < v {
                        counts.resize(v, 0);
                    }
                    counts[v - 1] += 1;
                }
                Letter::Barred(v) => barred.push(v),
            }
        }
        Multiset::new(&counts, &barred)
    }

    /// Multiplicities of the unbarred letters (trailing zeros trimmed).
    pub fn unbarred_counts(&self) -> &[u32] {
        &self.counts
    }

    /// The barred letters present, strictly increasing.
    pub fn barred_set(&self) -> &[u32] {
        &self.barred
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|&c| c == 0) && self.barred.is_empty()
    }

    /// Total number of letters counted with multiplicity.
    pub fn size(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum::<usize>() + self.barred.len()
    }

    /// Number of barred letters modulo two.  Labels of odd parity behave like
    /// odd elements of a superalgebra: they anticommute and square to zero.
    pub fn barred_parity(&self) -> usize {
        self.barred.len() % 2
    }

    pub fn has_odd_parity(&self) -> bool {
        self.barred_parity() == 1
    }

    /// The reading word: entries in increasing order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        let unbarred =
            self.counts.iter().enumerate().flat_map(|(j, &c)| {
                std::iter::repeat(Letter::Unbarred(j as u32 + 1)).take(c as usize)
            });
        let barred = self.barred.iter().map(|&b| Letter::Barred(b));
        unbarred.chain(barred)
    }

    /// Disjoint union with another multiset.
    ///
    /// Panics if a barred letter would repeat.
    pub fn union(&self, other: &Multiset) -> Multiset {
        let mut counts = vec![0u32; self.counts.len().max(other.counts.len())];
        for (j, &c) in self.counts.iter().enumerate() {
            counts[j] += c;
        }
        for (j, &c) in other.counts.iter().enumerate() {
            counts[j] += c;
        }
        let mut barred = self.barred.clone();
        barred.extend_from_slice(&other.barred);
        Multiset::new(&counts, &barred)
    }
}

/// The total order on multisets: lexicographic on reading words, empty
/// multiset smallest.  `Ord` is implemented directly so that `BTreeMap`s
/// keyed by multisets iterate in this order.
impl Ord for Multiset {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.letters();
        let mut b = other.letters();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl PartialOrd for Multiset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compare two multisets in the fixed total order.
pub fn compare_multisets(a: &Multiset, b: &Multiset) -> Ordering {
    a.cmp(b)
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, l) in self.letters().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

/// Error from parsing the text forms of multisets and partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError(pub String);

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error: {}", self.0)
    }
}

impl std::error::Error for ParseError {}

impl FromStr for Multiset {
    type Err = ParseError;

    /// Parses the `{1,1,2'}` syntax: integers for unbarred letters, a
    /// trailing apostrophe for barred ones.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| ParseError(format!("multiset must be braced: {s}")))?;
        let inner = inner.trim();
        let mut letters = Vec::new();
        if !inner.is_empty() {
            for item in inner.split(',') {
                let item = item.trim();
                let (digits, barred) = match item.strip_suffix('\'') {
                    Some(d) => (d, true),
                    None => (item, false),
                };
                let v: u32 = digits
                    .parse()
                    .map_err(|_| ParseError(format!("bad letter {item:?}")))?;
                if v == 0 {
                    return Err(ParseError("letters are 1-based".into()));
                }
                letters.push(if barred {
                    Letter::Barred(v)
                } else {
                    Letter::Unbarred(v)
                });
            }
        }
        let mut barred_seen = Vec::new();
        for l in &letters {
            if let Letter::Barred(v) = l {
                if barred_seen.contains(v) {
                    return Err(ParseError(format!("barred letter {v}' repeated in a cell")));
                }
                barred_seen.push(*v);
            }
        }
        Ok(Multiset::from_letters(letters))
    }
}

/// Degree of a homogeneous component: `alpha[j]` is the total degree in the
/// commuting variables of column `j+1`, `beta[j]` in the anticommuting ones.
///
/// Also serves as a content target for multiset partitions and tableaux: the
/// content is the multiset with `alpha[j]` copies of letter `j+1` and
/// `beta[j]` copies of barred letter `(j+1)'`.  A barred letter may repeat in
/// a content target even though it cannot repeat inside a single multiset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DegreeVector {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl DegreeVector {
    pub fn new(alpha: Vec<u32>, beta: Vec<u32>) -> Self {
        DegreeVector { alpha, beta }
    }

    pub fn total(&self) -> usize {
        self.alpha
            .iter()
            .chain(self.beta.iter())
            .map(|&a| a as usize)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total() == 0
    }

    /// Equality up to trailing zeros, which do not change the content.
    pub fn same_content(&self, other: &DegreeVector) -> bool {
        fn trim(v: &[u32]) -> &[u32] {
            let mut len = v.len();
            while len > 0 && v[len - 1] == 0 {
                len -= 1;
            }
            &v[..len]
        }
        trim(&self.alpha) == trim(&other.alpha) && trim(&self.beta) == trim(&other.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multiset {
        s.parse().unwrap()
    }

    #[test]
    fn empty_is_smallest() {
        assert!(ms("{}") < ms("{1}"));
        assert!(ms("{}") < ms("{1'}"));
    }

    #[test]
    fn alphabet_order_and_membership() {
        let a = Alphabet::new(2, 2);
        let letters: Vec<Letter> = a.letters().collect();
        assert!(letters.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(letters.len(), 4);
        assert!(a.contains(Letter::Barred(2)));
        assert!(!a.contains(Letter::Barred(3)));
        assert!(a.admits(&ms("{1,2,1'}")));
        assert!(!a.admits(&ms("{3}")));
    }

    #[test]
    fn order_on_reading_words() {
        // 1 < 2 < ... < m < 1' < 2' < ...
        assert!(ms("{1,1'}") < ms("{2}"));
        assert!(ms("{1',2'}") < ms("{2'}"));
        assert!(ms("{2}") < ms("{1',2'}"));
        assert!(ms("{1,1'}") < ms("{1,1',2'}"));
        assert!(ms("{1,1,2}") < ms("{1,3}"));
    }

    #[test]
    fn barred_letters_do_not_repeat() {
        assert!("{1',1'}".parse::<Multiset>().is_err());
        assert!("{1,1,1'}".parse::<Multiset>().is_ok());
    }

    #[test]
    fn display_round_trip() {
        for s in ["{}", "{1}", "{1,1,2'}", "{1',2'}", "{2,2}"] {
            assert_eq!(ms(s).to_string(), s);
        }
    }

    #[test]
    fn parity_and_size() {
        assert_eq!(ms("{1,1',2'}").barred_parity(), 0);
        assert!(ms("{1,1'}").has_odd_parity());
        assert_eq!(ms("{1,1,2'}").size(), 3);
    }

    #[test]
    fn union_merges_contents() {
        let u = ms("{1,1}").union(&ms("{2,1'}"));
        assert_eq!(u, ms("{1,1,2,1'}"));
    }
}
