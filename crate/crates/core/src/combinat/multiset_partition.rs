//! Multiset partitions: multisets of multisets over the mixed alphabet.
//!
//! A multiset partition `pi` refines a content target: the disjoint union of
//! its parts recovers the content.  Barred letters never repeat inside a
//! part.  A *super* multiset partition additionally never repeats a part of
//! odd barred parity; these index both the monomial invariants and the
//! single-row tableaux.

use std::fmt;
use std::str::FromStr;

use super::multiset::{DegreeVector, Multiset, ParseError};
use super::partition::Partition;

/// A multiset partition, stored with its parts sorted ascending in the
/// multiset order so that equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MultisetPartition {
    parts: Vec<Multiset>,
}

impl MultisetPartition {
    pub fn empty() -> Self {
        MultisetPartition::default()
    }

    /// Build from parts in any order; empty parts are rejected.
    pub fn from_parts(mut parts: Vec<Multiset>) -> Self {
        assert!(
            parts.iter().all(|p| !p.is_empty()),
            "multiset partition parts must be non-empty"
        );
        parts.sort();
        MultisetPartition { parts }
    }

    /// Parts in ascending multiset order, with repeats listed.
    pub fn parts(&self) -> &[Multiset] {
        &self.parts
    }

    /// Number of (non-empty) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Distinct parts in ascending order with their multiplicities.
    pub fn distinct_parts(&self) -> Vec<(&Multiset, usize)> {
        let mut out: Vec<(&Multiset, usize)> = Vec::new();
        for p in &self.parts {
            match out.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// The content: disjoint union of the parts, as a degree vector.
    pub fn content(&self) -> DegreeVector {
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for p in &self.parts {
            for (j, &c) in p.unbarred_counts().iter().enumerate() {
                if alpha.len() <= j {
                    alpha.resize(j + 1, 0);
                }
                alpha[j] += c;
            }
            for &b in p.barred_set() {
                let j = (b - 1) as usize;
                if beta.len() <= j {
                    beta.resize(j + 1, 0);
                }
                beta[j] += 1;
            }
        }
        DegreeVector::new(alpha, beta)
    }

    /// Whether some part of odd barred parity occurs more than once.
    pub fn has_repeated_odd_part(&self) -> bool {
        self.distinct_parts()
            .iter()
            .any(|(p, c)| *c > 1 && p.has_odd_parity())
    }

    /// Super condition: barred letters unique per part holds structurally,
    /// so this only rules out repeated odd-parity parts.
    pub fn is_super(&self) -> bool {
        !self.has_repeated_odd_part()
    }

    /// The pair of multiplicity partitions: multiplicities of the distinct
    /// parts of even barred parity, and of odd barred parity.
    pub fn multiplicity_partitions(&self) -> (Partition, Partition) {
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for (p, c) in self.distinct_parts() {
            if p.has_odd_parity() {
                odd.push(c as u32);
            } else {
                even.push(c as u32);
            }
        }
        (
            Partition::from_unsorted(&even),
            Partition::from_unsorted(&odd),
        )
    }
}

impl fmt::Display for MultisetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for MultisetPartition {
    type Err = ParseError;

    /// Parses `{{1,1},{2'}}`; `{}` is the empty multiset partition.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| ParseError(format!("multiset partition must be braced: {s}")))?;
        let inner = inner.trim();
        let mut parts = Vec::new();
        let mut depth = 0usize;
        let mut start = 0usize;
        for (i, ch) in inner.char_indices() {
            match ch {
                '{' => {
                    if depth == 0 {
                        start = i;
                    }
                    depth += 1;
                }
                '}' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| ParseError(format!("unbalanced braces: {s}")))?;
                    if depth == 0 {
                        parts.push(inner[start..=i].parse::<Multiset>()?);
                    }
                }
                ',' | ' ' => {}
                other if depth > 0 => {
                    let _ = other;
                }
                other => return Err(ParseError(format!("unexpected {other:?} in {s}"))),
            }
        }
        if depth != 0 {
            return Err(ParseError(format!("unbalanced braces: {s}")));
        }
        if parts.iter().any(|p| p.is_empty()) {
            return Err(ParseError("parts must be non-empty".into()));
        }
        Ok(MultisetPartition::from_parts(parts))
    }
}

/// Constraints for [`enumerate_multiset_partitions_filtered`].
#[derive(Clone, Copy, Debug, Default)]
pub struct PartitionFilter {
    /// Maximum number of parts, if any.
    pub max_len: Option<usize>,
    /// Maximum size of each part, if any.
    pub max_part_size: Option<usize>,
    /// Reject repeated parts of odd barred parity.
    pub super_only: bool,
}

/// All multiset partitions with the given content and at most `max_len`
/// parts.  Barred letters never repeat within a part.  With `super_only`,
/// partitions repeating an odd-parity part are dropped.
///
/// Output is sorted, so enumeration order is deterministic.
pub fn enumerate_multiset_partitions(
    content: &DegreeVector,
    max_len: usize,
    super_only: bool,
) -> Vec<MultisetPartition> {
    enumerate_multiset_partitions_filtered(
        content,
        PartitionFilter {
            max_len: Some(max_len),
            max_part_size: None,
            super_only,
        },
    )
}

/// Enumeration with the full set of constraints.
pub fn enumerate_multiset_partitions_filtered(
    content: &DegreeVector,
    filter: PartitionFilter,
) -> Vec<MultisetPartition> {
    let mut alpha = content.alpha.clone();
    let mut beta = content.beta.clone();
    let mut out = Vec::new();
    let mut acc: Vec<Multiset> = Vec::new();
    rec(&mut alpha, &mut beta, None, &mut acc, &filter, &mut out);
    out.sort();
    out
}

/// Recursive chooser: parts are picked weakly decreasing in the multiset
/// order, which enumerates every multiset of parts exactly once.
fn rec(
    alpha: &mut [u32],
    beta: &mut [u32],
    bound: Option<&Multiset>,
    acc: &mut Vec<Multiset>,
    filter: &PartitionFilter,
    out: &mut Vec<MultisetPartition>,
) {
    if alpha.iter().all(|&a| a == 0) && beta.iter().all(|&b| b == 0) {
        out.push(MultisetPartition::from_parts(acc.clone()));
        return;
    }
    if filter.max_len == Some(acc.len()) {
        return;
    }
    for cand in candidate_parts(alpha, beta, filter.max_part_size) {
        if let Some(b) = bound {
            if cand > *b {
                continue;
            }
            if filter.super_only && cand == *b && cand.has_odd_parity() {
                continue;
            }
        }
        for (j, &c) in cand.unbarred_counts().iter().enumerate() {
            alpha[j] -= c;
        }
        for &b in cand.barred_set() {
            beta[(b - 1) as usize] -= 1;
        }
        acc.push(cand.clone());
        rec(alpha, beta, Some(&cand), acc, filter, out);
        acc.pop();
        for (j, &c) in cand.unbarred_counts().iter().enumerate() {
            alpha[j] += c;
        }
        for &b in cand.barred_set() {
            beta[(b - 1) as usize] += 1;
        }
    }
}

/// All non-empty sub-multisets of the remaining content with barred letters
/// taken at most once each.
fn candidate_parts(alpha: &[u32], beta: &[u32], max_size: Option<usize>) -> Vec<Multiset> {
    let mut out = Vec::new();
    let mut counts = vec![0u32; alpha.len()];
    fn unbarred_rec(
        j: usize,
        alpha: &[u32],
        beta: &[u32],
        counts: &mut Vec<u32>,
        max_size: Option<usize>,
        used: usize,
        out: &mut Vec<Multiset>,
    ) {
        if j == alpha.len() {
            let avail: Vec<u32> = beta
                .iter()
                .enumerate()
                .filter(|&(_, &b)| b > 0)
                .map(|(i, _)| i as u32 + 1)
                .collect();
            let mut chosen = Vec::new();
            subset_rec(0, &avail, counts, max_size, used, &mut chosen, out);
            return;
        }
        let cap = match max_size {
            Some(ms) => alpha[j].min(ms.saturating_sub(used) as u32),
            None => alpha[j],
        };
        for c in 0..=cap {
            counts[j] = c;
            unbarred_rec(j + 1, alpha, beta, counts, max_size, used + c as usize, out);
        }
        counts[j] = 0;
    }
    fn subset_rec(
        i: usize,
        avail: &[u32],
        counts: &[u32],
        max_size: Option<usize>,
        used: usize,
        chosen: &mut Vec<u32>,
        out: &mut Vec<Multiset>,
    ) {
        if i == avail.len() {
            if used + chosen.len() > 0 {
                out.push(Multiset::new(counts, chosen));
            }
            return;
        }
        subset_rec(i + 1, avail, counts, max_size, used, chosen, out);
        if max_size.map_or(true, |ms| used + chosen.len() < ms) {
            chosen.push(avail[i]);
            subset_rec(i + 1, avail, counts, max_size, used, chosen, out);
            chosen.pop();
        }
    }
    unbarred_rec(0, alpha, beta, &mut counts, max_size, 0, &mut out);
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn msp(s: &str) -> MultisetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let pi = msp("{{2'},{1,1}}");
        assert_eq!(pi.to_string(), "{{1,1},{2'}}");
        assert_eq!(pi.len(), 2);
        assert_eq!(msp("{}").len(), 0);
    }

    #[test]
    fn content_round_trip() {
        let pi = msp("{{1,1,2'},{1'},{1'}}");
        let c = pi.content();
        assert_eq!(c.alpha, vec![2]);
        assert_eq!(c.beta, vec![2, 1]);
    }

    #[test]
    fn two_copies_of_a_letter() {
        // {{1,1}} and {{1},{1}}
        let pis = enumerate_multiset_partitions(&DegreeVector::new(vec![2], vec![]), 2, false);
        assert_eq!(pis.len(), 2);
        assert!(pis.contains(&msp("{{1,1}}")));
        assert!(pis.contains(&msp("{{1},{1}}")));
    }

    #[test]
    fn repeated_barred_letter_must_split() {
        let content = DegreeVector::new(vec![], vec![2]);
        let plain = enumerate_multiset_partitions(&content, 2, false);
        assert_eq!(plain, vec![msp("{{1'},{1'}}")]);
        // The split repeats an odd-parity part, so the super count is zero.
        let sup = enumerate_multiset_partitions(&content, 2, true);
        assert!(sup.is_empty());
    }

    #[test]
    fn length_cap_applies() {
        let content = DegreeVector::new(vec![2], vec![]);
        let pis = enumerate_multiset_partitions(&content, 1, false);
        assert_eq!(pis, vec![msp("{{1,1}}")]);
    }

    #[test]
    fn part_size_filter() {
        let content = DegreeVector::new(vec![3], vec![]);
        let pis = enumerate_multiset_partitions_filtered(
            &content,
            PartitionFilter {
                max_len: None,
                max_part_size: Some(2),
                super_only: false,
            },
        );
        assert_eq!(pis.len(), 2); // {{1,1},{1}} and {{1},{1},{1}}
    }

    #[test]
    fn multiplicity_partitions_split_by_parity() {
        let pi = msp("{{1},{1},{1',2'},{1',2'},{2'}}");
        // even parity: {1} twice and {1',2'} twice; odd parity: {2'} once
        let (e, o) = pi.multiplicity_partitions();
        assert_eq!(e.parts(), &[2, 2]);
        assert_eq!(o.parts(), &[1]);
        assert_eq!(e.size() + o.size(), pi.len());
    }

    #[test]
    fn multiplicity_partitions_trivial_cases() {
        let (e, o) = msp("{{1}}").multiplicity_partitions();
        assert_eq!((e.parts(), o.parts()), (&[1][..], &[][..]));
        let (e, o) = msp("{{1'},{1'}}").multiplicity_partitions();
        assert_eq!((e.parts(), o.parts()), (&[][..], &[2][..]));
    }

    #[test]
    fn super_condition() {
        assert!(msp("{{1'},{2'}}").is_super());
        assert!(!msp("{{1'},{1'}}").is_super());
        assert!(msp("{{1',2'},{1',2'}}").is_super());
    }
}
